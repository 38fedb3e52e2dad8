#include "acfactor/parse.hpp"

#include <array>
#include <cctype>
#include <optional>
#include <vector>

namespace acf {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) continue;
      chars_.push_back(text[i]);
      offsets_.push_back(i);
    }
    end_offset_ = text.size();
  }

  void parse() {
    if (chars_.empty()) fail("empty polynomial");
    Gaussian sign = 1;
    if (accept('-')) {
      sign = -1;
    } else {
      accept('+');
    }
    term(sign);
    while (!at_end()) {
      if (accept('+')) {
        term(1);
      } else if (accept('-')) {
        term(-1);
      } else {
        fail(std::string("unexpected '") + peek() + "'");
      }
    }
  }

  const std::array<Gaussian, 3>& coefficients() const { return coeffs_; }
  std::optional<std::size_t> first_imaginary() const { return first_imaginary_; }

 private:
  void term(const Gaussian& sign) {
    const std::size_t start = pos_;
    std::optional<Gaussian> coeff = coefficient();
    int power = 0;
    if (coeff && accept('*')) {
      if (peek() != 'x') fail("expected 'x' after '*'");
    }
    if (accept('x')) {
      power = 1;
      if (accept('^')) {
        const std::size_t exp_pos = pos_;
        Integer e = integer_literal();
        if (e > 2) throw DegreeError("exponent " + to_string(e) + " exceeds 2", offset(exp_pos));
        power = static_cast<int>(e.value());
      }
    }
    if (pos_ == start) fail("expected a term");
    coeffs_[power] = coeffs_[power] + sign * coeff.value_or(Gaussian::one());
  }

  std::optional<Gaussian> coefficient() {
    if (accept('(')) {
      Gaussian sign = 1;
      if (accept('-')) {
        sign = -1;
      } else {
        accept('+');
      }
      Gaussian value = sign * part();
      while (!accept(')')) {
        if (at_end()) fail("missing ')'");
        if (accept('+')) {
          value = value + part();
        } else if (accept('-')) {
          value = value - part();
        } else {
          fail(std::string("unexpected '") + peek() + "' in coefficient");
        }
      }
      return value;
    }
    if (std::isdigit(static_cast<unsigned char>(peek())) || peek() == 'i') return part();
    return std::nullopt;
  }

  // integer | integer? 'i'
  Gaussian part() {
    std::optional<Integer> n;
    if (std::isdigit(static_cast<unsigned char>(peek()))) n = integer_literal();
    if (peek() == 'i') {
      if (!first_imaginary_) first_imaginary_ = offset(pos_);
      ++pos_;
      return {0, n.value_or(1)};
    }
    if (!n) fail("expected a number");
    return {*n, 0};
  }

  Integer integer_literal() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digits");
    const std::size_t start = pos_;
    Integer value = 0;
    try {
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        value = value * 10 + Integer(chars_[pos_] - '0');
        ++pos_;
      }
    } catch (const InputTooLarge&) {
      throw SyntaxError("integer literal out of range", offset(start));
    }
    return value;
  }

  bool at_end() const { return pos_ >= chars_.size(); }
  char peek() const { return at_end() ? '\0' : chars_[pos_]; }

  bool accept(char c) {
    if (peek() != c || at_end()) return false;
    ++pos_;
    return true;
  }

  std::size_t offset(std::size_t p) const { return p < offsets_.size() ? offsets_[p] : end_offset_; }

  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, offset(pos_)); }

  std::vector<char> chars_;
  std::vector<std::size_t> offsets_;
  std::size_t end_offset_ = 0;
  std::size_t pos_ = 0;
  std::array<Gaussian, 3> coeffs_{};
  std::optional<std::size_t> first_imaginary_;
};

}  // namespace

ParsedInput parse_polynomial(std::string_view text, RingChoice ring) {
  Parser parser(text);
  parser.parse();
  const auto& [c, b, a] = parser.coefficients();
  if (a == Gaussian::zero()) throw DegreeError("polynomial is not of degree 2");

  const bool gaussian_literal = parser.first_imaginary().has_value();
  if (ring == RingChoice::Integer && gaussian_literal) {
    throw RingMismatch("Gaussian literal under the integer ring", *parser.first_imaginary());
  }
  std::string source(text);
  if (ring == RingChoice::Gaussian || gaussian_literal) {
    return {RingKind::Gaussian, Trinomial<Gaussian>(a, b, c), std::move(source)};
  }
  return {RingKind::Integer, Trinomial<Integer>(a.re, b.re, c.re), std::move(source)};
}

}  // namespace acf
