#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "freemoments/density.hpp"
#include "freemoments/measures.hpp"

namespace freemoments {

/// Sorted eigenvalues of one random-matrix draw.
struct SpectralSample
{
  std::vector<double> eigenvalues; ///< ascending
  std::string measure;
  std::size_t size = 0;
  std::uint64_t seed = 0;
};

/// Per-trial seed derived by hashing (seed, trial); draws are reproducible per trial.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

using Rng = std::mt19937_64;

/// rows x cols matrix of independent standard normals, filled column by column.
Eigen::MatrixXd gaussian_matrix(Eigen::Index rows, Eigen::Index cols, Rng &rng);

/// Haar-distributed orthogonal matrix: Q from the QR factorization of a Gaussian
/// matrix, with columns flipped so that R has a positive diagonal.
Eigen::MatrixXd haar_orthogonal(Eigen::Index n, Rng &rng);

/// (1/n) X Xᵀ with X an n x round(t n) Gaussian matrix; its spectrum approaches ϖ_t.
Eigen::MatrixXd wishart_model(Eigen::Index n, double t, Rng &rng);

/// Random symmetric matrix whose spectrum approaches the given measure.
/// Supported: MarchenkoPastur(t), mu1 (= 2 · ϖ_{1/2} model), mu2 (= 0_{n/2} ⊕ ϖ_1 model at n/2).
/// Throws UnsupportedSpec otherwise, InvalidParameter for n < 2 or odd n with mu2.
Eigen::MatrixXd matrix_model(MeasureSpec const &spec, Eigen::Index n, Rng &rng);

/// Eigenvalues of a symmetric matrix in ascending order.
std::vector<double> symmetric_eigenvalues(Eigen::MatrixXd const &m);

SpectralSample sample_matrix_model(MeasureSpec const &spec, std::size_t size, std::uint64_t seed);

/// Eigenvalues of A + Q B Qᵀ with A from the mu1 model, B from the mu2 model and
/// Q Haar orthogonal; the spectrum approaches mu1 ⊞ mu2 = mu0. Needs even size >= 4.
SpectralSample sample_free_sum(std::size_t size, std::uint64_t seed);

/// sup_x |F_n(x) - F(x)| over the sample points, checking both sides of every jump.
double ks_distance(SpectralSample const &sample, DensityFn const &target);

/// Which random-matrix experiment to run.
enum class RmtTarget { mu0_free_sum, mu1, mu2, marchenko_pastur };

struct RmtExperiment
{
  RmtTarget target;
  Rational rate = 1; ///< for marchenko_pastur

  std::string name() const;
  DensityFn limit() const;
  SpectralSample sample(std::size_t size, std::uint64_t seed) const;
};

struct RmtSummary
{
  std::string measure;
  std::size_t size = 0;
  std::size_t trials = 0;
  double ks_mean = 0.0;
  std::vector<double> ks_per_trial;
  std::vector<SpectralSample> samples; ///< in trial order

  /// Sample mean of the i-th power over all eigenvalues of all trials.
  double empirical_moment(unsigned power) const;
  std::string to_json() const;
};

/// Runs `trials` independent draws (in parallel); trial i uses trial_seed(seed, i).
RmtSummary run_experiment(RmtExperiment const &experiment, std::size_t size, std::size_t trials, std::uint64_t seed);

} // namespace freemoments
