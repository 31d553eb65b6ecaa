#include "freemoments/rmt.hpp"

#include "freemoments/errors.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>

#include <json.hpp>

namespace freemoments {

namespace {

std::uint64_t splitmix64(std::uint64_t z)
{
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Structural zero eigenvalues come out of the solver as ±O(1e-15 * scale); pin them to 0.
void snap_zeros(std::vector<double> &ev)
{
  if (ev.empty()) { return; }
  double const scale = std::max(std::abs(ev.front()), std::abs(ev.back()));
  for (auto &v : ev) {
    if (std::abs(v) <= 1e-9 * scale) { v = 0.0; }
  }
  std::sort(ev.begin(), ev.end());
}

enum class Model { mp, mu1, mu2 };

struct ModelChoice
{
  Model model;
  double rate = 1.0;
  std::string name;
};

ModelChoice classify(MeasureSpec const &spec)
{
  if (auto const *mp = std::get_if<measure::MarchenkoPastur>(&spec.node)) {
    return {Model::mp, mp->rate.to_double(), "mp:" + mp->rate.str()};
  }
  if (auto const *n = std::get_if<measure::Named>(&spec.node)) {
    if (*n == measure::Named::mu1) { return {Model::mu1, 0.5, "mu1"}; }
    if (*n == measure::Named::mu2) { return {Model::mu2, 1.0, "mu2"}; }
  }
  throw UnsupportedSpec("random-matrix models exist for mp:<t>, mu1 and mu2 only");
}

} // namespace

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial)
{
  return splitmix64(splitmix64(seed) ^ (trial + 1) * 0xD1B54A32D192ED03ULL);
}

Eigen::MatrixXd gaussian_matrix(Eigen::Index rows, Eigen::Index cols, Rng &rng)
{
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd g(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) { g(i, j) = normal(rng); }
  }
  return g;
}

Eigen::MatrixXd haar_orthogonal(Eigen::Index n, Rng &rng)
{
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(gaussian_matrix(n, n, rng));
  Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(n, n);
  auto const &r = qr.matrixQR();
  for (Eigen::Index j = 0; j < n; ++j) {
    if (r(j, j) < 0.0) { q.col(j) *= -1.0; }
  }
  return q;
}

Eigen::MatrixXd wishart_model(Eigen::Index n, double t, Rng &rng)
{
  auto const d = static_cast<Eigen::Index>(std::llround(t * static_cast<double>(n)));
  if (d < 1) { throw InvalidParameter("rate too small for this matrix size"); }
  Eigen::MatrixXd const x = gaussian_matrix(n, d, rng);
  Eigen::MatrixXd w(n, n);
  w.setZero();
  w.selfadjointView<Eigen::Lower>().rankUpdate(x, 1.0 / static_cast<double>(n));
  return w.selfadjointView<Eigen::Lower>();
}

Eigen::MatrixXd matrix_model(MeasureSpec const &spec, Eigen::Index n, Rng &rng)
{
  auto const choice = classify(spec);
  if (n < 2) { throw InvalidParameter("matrix size must be at least 2"); }
  switch (choice.model) {
  case Model::mp: return wishart_model(n, choice.rate, rng);
  case Model::mu1: return 2.0 * wishart_model(n, 0.5, rng);
  case Model::mu2: {
    if (n % 2 != 0) { throw InvalidParameter("mu2 model needs an even matrix size"); }
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    m.bottomRightCorner(n / 2, n / 2) = wishart_model(n / 2, 1.0, rng);
    return m;
  }
  }
  return {};
}

std::vector<double> symmetric_eigenvalues(Eigen::MatrixXd const &m)
{
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) { throw Error("symmetric eigensolver failed"); }
  auto const &ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

SpectralSample sample_matrix_model(MeasureSpec const &spec, std::size_t size, std::uint64_t seed)
{
  auto const choice = classify(spec);
  Rng rng(seed);
  auto ev = symmetric_eigenvalues(matrix_model(spec, static_cast<Eigen::Index>(size), rng));
  snap_zeros(ev);
  return {std::move(ev), choice.name, size, seed};
}

SpectralSample sample_free_sum(std::size_t size, std::uint64_t seed)
{
  if (size < 4 || size % 2 != 0) { throw InvalidParameter("free-sum model needs an even size >= 4"); }
  auto const n = static_cast<Eigen::Index>(size);
  auto const h = n / 2;
  Rng rng(seed);
  Eigen::MatrixXd const a = 2.0 * wishart_model(n, 0.5, rng);
  Eigen::MatrixXd const w = wishart_model(h, 1.0, rng); // nonzero block of the mu2 model
  Eigen::MatrixXd const q = haar_orthogonal(n, rng);
  // Q diag(0, W) Qᵀ only involves the trailing columns of Q.
  Eigen::MatrixXd const q2 = q.rightCols(h);
  Eigen::MatrixXd m = a + q2 * w * q2.transpose();
  m = 0.5 * (m + m.transpose()).eval();
  return {symmetric_eigenvalues(m), "mu0", size, seed};
}

double ks_distance(SpectralSample const &sample, DensityFn const &target)
{
  auto const &x = sample.eigenvalues;
  if (x.empty()) { throw InvalidParameter("KS distance of an empty sample"); }
  double const n = static_cast<double>(x.size());

  auto atoms_in = [&](double a, double b, bool include_a) {
    double m = 0.0;
    for (auto const &atom : target.atoms) {
      bool const above = include_a ? atom.location >= a : atom.location > a;
      if (above && atom.location <= b) { m += atom.mass; }
    }
    return m;
  };

  double worst = 0.0;
  // F accumulated left to right over groups of tied values: F(x) = F(prev) + mass in (prev, x].
  double f = 0.0;
  double prev = -std::numeric_limits<double>::infinity();
  std::size_t i = 0;
  while (i < x.size()) {
    double const xi = x[i];
    std::size_t j = i;
    while (j + 1 < x.size() && x[j + 1] == xi) { ++j; }
    f += atoms_in(prev, xi, false) + bulk_integral(target, std::max(prev, target.support.lo), xi);
    double const f_left = f - atoms_in(xi, xi, true);
    worst = std::max({worst, std::abs(static_cast<double>(j + 1) / n - f), std::abs(f_left - static_cast<double>(i) / n)});
    prev = xi;
    i = j + 1;
  }
  return worst;
}

std::string RmtExperiment::name() const
{
  switch (target) {
  case RmtTarget::mu0_free_sum: return "mu0";
  case RmtTarget::mu1: return "mu1";
  case RmtTarget::mu2: return "mu2";
  case RmtTarget::marchenko_pastur: return "mp:" + rate.str();
  }
  return "?";
}

DensityFn RmtExperiment::limit() const
{
  switch (target) {
  case RmtTarget::mu0_free_sum: return DensityFn::v_mu0();
  case RmtTarget::mu1: return DensityFn::mu1();
  case RmtTarget::mu2: return DensityFn::mu2();
  case RmtTarget::marchenko_pastur: return DensityFn::marchenko_pastur(rate.to_double());
  }
  return DensityFn::v_mu0();
}

SpectralSample RmtExperiment::sample(std::size_t size, std::uint64_t seed) const
{
  switch (target) {
  case RmtTarget::mu0_free_sum: return sample_free_sum(size, seed);
  case RmtTarget::mu1: return sample_matrix_model(named(measure::Named::mu1), size, seed);
  case RmtTarget::mu2: return sample_matrix_model(named(measure::Named::mu2), size, seed);
  case RmtTarget::marchenko_pastur: return sample_matrix_model(marchenko_pastur(rate), size, seed);
  }
  throw UnsupportedSpec("unknown experiment");
}

double RmtSummary::empirical_moment(unsigned power) const
{
  double sum = 0.0;
  std::size_t count = 0;
  for (auto const &s : samples) {
    for (double v : s.eigenvalues) { sum += std::pow(v, power); }
    count += s.eigenvalues.size();
  }
  return count ? sum / static_cast<double>(count) : 0.0;
}

std::string RmtSummary::to_json() const
{
  nlohmann::ordered_json j;
  j["measure"] = measure;
  j["size"] = size;
  j["trials"] = trials;
  j["ks_mean"] = ks_mean;
  j["ks_per_trial"] = ks_per_trial;
  return j.dump(2);
}

RmtSummary run_experiment(RmtExperiment const &experiment, std::size_t size, std::size_t trials, std::uint64_t seed)
{
  if (trials == 0) { throw InvalidParameter("need at least one trial"); }
  auto const target = experiment.limit();
  std::vector<std::future<std::pair<SpectralSample, double>>> pending;
  for (std::size_t t = 0; t < trials; ++t) {
    pending.push_back(std::async(std::launch::async, [&, t] {
      auto s = experiment.sample(size, trial_seed(seed, t));
      double const ks = ks_distance(s, target);
      return std::make_pair(std::move(s), ks);
    }));
  }
  RmtSummary summary{experiment.name(), size, trials, 0.0, {}, {}};
  for (auto &p : pending) {
    auto [s, ks] = p.get();
    summary.ks_per_trial.push_back(ks);
    summary.samples.push_back(std::move(s));
  }
  double total = 0.0;
  for (double k : summary.ks_per_trial) { total += k; }
  summary.ks_mean = total / static_cast<double>(trials);
  return summary;
}

} // namespace freemoments
