#include "freemoments/measure_expr.hpp"

#include "freemoments/errors.hpp"

#include <cctype>

namespace freemoments {

namespace {

template <class... Ts> struct overloaded : Ts... { using Ts::operator()...; };

class Parser
{
public:
  explicit Parser(std::string_view text)
    : text_(text)
  {
  }

  MeasureSpec parse_all()
  {
    auto spec = expr();
    if (pos_ != text_.size()) { throw ParseError("trailing input", pos_); }
    return spec;
  }

private:
  MeasureSpec expr()
  {
    std::size_t const start = pos_;
    std::string const word = identifier();
    if (word == "mu0") { return named(measure::Named::mu0); }
    if (word == "mu1") { return named(measure::Named::mu1); }
    if (word == "mu2") { return named(measure::Named::mu2); }
    if (word == "arcsine") { return named(measure::Named::arcsine); }
    if (word == "bernoulli") { return named(measure::Named::bernoulli_half); }
    if (word == "dirac") {
      expect(':');
      return dirac(rational());
    }
    if (word == "beta") {
      expect(':');
      Rational a = rational();
      expect(',');
      return beta(std::move(a), rational());
    }
    if (word == "mp") {
      expect(':');
      return marchenko_pastur(rational());
    }
    if (word == "dilate") {
      expect(':');
      Rational c = rational();
      expect('(');
      auto inner = expr();
      expect(')');
      return dilate(std::move(c), std::move(inner));
    }
    if (word == "mix") {
      expect(':');
      std::vector<Rational> weights;
      std::vector<MeasureSpec> parts;
      do {
        weights.push_back(rational());
        expect('*');
        parts.push_back(expr());
      } while (accept('+'));
      return mix(std::move(weights), std::move(parts));
    }
    throw ParseError(word.empty() ? "expected a measure name" : "unknown measure '" + word + "'", start);
  }

  std::string identifier()
  {
    std::size_t const start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  Rational rational()
  {
    std::size_t const start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') { ++pos_; }
    auto digits = [&] {
      std::size_t const d = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) { ++pos_; }
      if (pos_ == d) { throw ParseError("expected a number", pos_); }
    };
    digits();
    if (accept('/')) { digits(); }
    try {
      return Rational::parse(text_.substr(start, pos_ - start));
    } catch (ParseError const &e) {
      throw ParseError("bad rational literal", start + e.position);
    }
  }

  bool accept(char c)
  {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c)
  {
    if (!accept(c)) { throw ParseError(std::string("expected '") + c + "'", pos_); }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace

MeasureSpec parse_measure(std::string_view text) { return Parser(text).parse_all(); }

std::string to_string(MeasureSpec const &spec)
{
  return std::visit(
    overloaded{
      [](measure::Dirac const &d) { return "dirac:" + d.location.str(); },
      [](measure::Beta const &b) { return "beta:" + b.alpha.str() + "," + b.beta.str(); },
      [](measure::MarchenkoPastur const &m) { return "mp:" + m.rate.str(); },
      [](measure::Dilation const &d) { return "dilate:" + d.factor.str() + "(" + to_string(*d.inner) + ")"; },
      [](measure::Mix const &m) {
        std::string out = "mix:";
        for (std::size_t i = 0; i < m.parts.size(); ++i) {
          if (i) { out += "+"; }
          std::string part = to_string(m.parts[i]);
          // A nested mix would swallow the following terms.
          if (std::holds_alternative<measure::Mix>(m.parts[i].node) && i + 1 < m.parts.size()) {
            part = "dilate:1(" + part + ")";
          }
          out += m.weights[i].str() + "*" + part;
        }
        return out;
      },
      [](measure::Named n) { return freemoments::to_string(n); },
    },
    spec.node);
}

} // namespace freemoments
