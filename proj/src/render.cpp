#include "acfactor/render.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "acfactor/gaussian.hpp"
#include "json.hpp"

namespace acf {

namespace {

using nlohmann::json;

// Sign-magnitude split used when writing a term after a '+'/'-'.
bool is_negative(Integer n) { return n < 0; }

// A Gaussian reads as negative when its only nonzero part is negative.
bool is_negative(const Gaussian& z) {
  if (z.im == 0) return z.re < 0;
  if (z.re == 0) return z.im < 0;
  return false;
}

bool needs_parentheses(Integer) { return false; }
bool needs_parentheses(const Gaussian& z) { return z.re != 0 && z.im != 0; }

std::string x_power(int power) {
  if (power == 0) return "";
  if (power == 1) return "x";
  return "x^" + std::to_string(power);
}

// Coefficient and x-part with the sign already removed.
template <FactorRing T>
std::string magnitude_term(const T& c, int power) {
  if (power > 0 && c == T::one()) return x_power(power);
  if (needs_parentheses(c)) return "(" + to_string(c) + ")" + x_power(power);
  return to_string(c) + x_power(power);
}

// A term of a sum; `first` suppresses the leading '+'.
template <FactorRing T>
std::string signed_term(const T& c, int power, bool first) {
  if (is_negative(c)) return "-" + magnitude_term(-c, power);
  return (first ? "" : "+") + magnitude_term(c, power);
}

// Prefix written before a product of factors: "" for 1, "-" for -1.
template <FactorRing T>
std::string scalar_prefix(const T& k) {
  if (k == T::one()) return "";
  if (k == -T::one()) return "-";
  if (is_negative(k)) return "-" + format_coefficient(-k);
  return format_coefficient(k);
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Factored:
      return "factored";
    case Verdict::Irreducible:
      return "irreducible";
    case Verdict::NotApplicable:
      return "not_applicable";
  }
  return "unknown";
}

std::string pad_left(const std::string& s, std::size_t width) {
  return std::string(width > s.size() ? width - s.size() : 0, ' ') + s;
}

template <FactorRing T>
std::string format_product(const T& scalar, const LinearBinomial<T>& f1,
                           const LinearBinomial<T>& f2) {
  return scalar_prefix(scalar) + "(" + format_binomial(f1) + ")(" + format_binomial(f2) + ")";
}

template <FactorRing T>
std::string render_text(const Factorization<T>& f) {
  switch (f.verdict) {
    case Verdict::Factored:
      return format_product(f.unit * f.content, f.factors->first, f.factors->second);
    case Verdict::Irreducible:
      if (f.content == T::one()) return "irreducible: " + format_trinomial(*f.primitive);
      return "irreducible primitive part: " + scalar_prefix(f.content) + "(" +
             format_trinomial(*f.primitive) + ")";
    case Verdict::NotApplicable:
      return "not applicable: " + f.reason;
  }
  return {};
}

template <FactorRing T>
void render_array(std::ostringstream& os, const GroupArray<T>& g) {
  std::array<std::array<std::string, 3>, 3> grid;
  grid[0][0] = "";
  for (int j = 0; j < 2; ++j) grid[0][j + 1] = format_monomial(g.columns[j]);
  for (int i = 0; i < 2; ++i) {
    grid[i + 1][0] = format_monomial(g.rows[i]);
    for (int j = 0; j < 2; ++j) grid[i + 1][j + 1] = format_monomial(g.cells[i][j]);
  }
  std::array<std::size_t, 3> width{};
  for (const auto& row : grid) {
    for (int j = 0; j < 3; ++j) width[j] = std::max(width[j], row[j].size());
  }
  auto line = [&](const std::array<std::string, 3>& row) {
    os << "  " << pad_left(row[0], width[0]) << " | " << pad_left(row[1], width[1]) << " | "
       << pad_left(row[2], width[2]) << "\n";
  };
  line(grid[0]);
  os << "  " << std::string(width[0] + 1, '-') << "+" << std::string(width[1] + 2, '-') << "+"
     << std::string(width[2] + 1, '-') << "\n";
  line(grid[1]);
  line(grid[2]);
  os << "  gcd of the first column: " << grid[0][1] << "\n";
  os << "  " << grid[1][1] << " / " << grid[0][1] << " = " << grid[1][0] << "\n";
  os << "  " << grid[1][2] << " / " << grid[1][0] << " = " << grid[0][2] << "\n";
  os << "  " << grid[2][1] << " / " << grid[0][1] << " = " << grid[2][0] << "\n";
  os << "  read off: (" << grid[0][1] << signed_term(g.columns[1].coefficient, 0, false) << ")("
     << grid[1][0] << signed_term(g.rows[1].coefficient, 0, false) << ")\n";
}

template <FactorRing T>
json step_json(const Step<T>& step) {
  return std::visit(
      [](const auto& s) -> json {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, ContentStep<T>>) {
          return {{"step", "content"},
                  {"content", to_string(s.content)},
                  {"primitive", format_trinomial(s.primitive)}};
        } else if constexpr (std::is_same_v<S, ProductStep<T>>) {
          return {{"step", "product"},
                  {"a", to_string(s.a)},
                  {"c", to_string(s.c)},
                  {"product", to_string(s.product)},
                  {"target_sum", to_string(s.target_sum)}};
        } else if constexpr (std::is_same_v<S, CandidateStep<T>>) {
          return {{"step", "candidate"},
                  {"b1", to_string(s.b1)},
                  {"b2", to_string(s.b2)},
                  {"sum", to_string(s.b1 + s.b2)},
                  {"accepted", s.accepted}};
        } else if constexpr (std::is_same_v<S, RewriteStep<T>>) {
          return {{"step", "rewrite"},
                  {"a", to_string(s.a)},
                  {"b1", to_string(s.b1)},
                  {"b2", to_string(s.b2)},
                  {"c", to_string(s.c)},
                  {"text", signed_term(s.a, 2, true) + signed_term(s.b1, 1, false) +
                               signed_term(s.b2, 1, false) + signed_term(s.c, 0, false)}};
        } else if constexpr (std::is_same_v<S, GroupArray<T>>) {
          auto m = [](const Monomial<T>& x) { return format_monomial(x); };
          return {{"step", "group_array"},
                  {"cells", json::array({json::array({m(s.cells[0][0]), m(s.cells[0][1])}),
                                         json::array({m(s.cells[1][0]), m(s.cells[1][1])})})},
                  {"rows", json::array({m(s.rows[0]), m(s.rows[1])})},
                  {"columns", json::array({m(s.columns[0]), m(s.columns[1])})}};
        } else {
          json out = {{"step", "result"}, {"status", verdict_name(s.verdict)}};
          if (s.factors) {
            out["unit"] = to_string(s.unit);
            out["content"] = to_string(s.content);
            out["text"] = format_product(s.unit * s.content, s.factors->first, s.factors->second);
          }
          return out;
        }
      },
      step);
}

template <FactorRing T>
std::string render_structured(const Factorization<T>& f) {
  json factors = json::array();
  if (f.factors) {
    for (const auto* b : {&f.factors->first, &f.factors->second}) {
      factors.push_back({{"leading", to_string(b->leading)}, {"constant", to_string(b->constant)}});
    }
  }
  json trace = json::array();
  for (const auto& s : f.trace.steps) trace.push_back(step_json<T>(s));
  json out = {
      {"status", verdict_name(f.verdict)},
      {"ring", std::string(T::ring_name)},
      {"input", format_trinomial(f.input)},
      {"unit", to_string(f.unit)},
      {"content", to_string(f.content)},
      {"factors", factors},
      {"trace", trace},
  };
  if (f.primitive) out["primitive"] = format_trinomial(*f.primitive);
  if (!f.reason.empty()) out["reason"] = f.reason;
  return out.dump() + "\n";
}

}  // namespace

template <FactorRing T>
std::string format_coefficient(const T& c) {
  if (needs_parentheses(c)) return "(" + to_string(c) + ")";
  return to_string(c);
}

template <FactorRing T>
std::string format_monomial(const Monomial<T>& m) {
  if (m.coefficient == T::zero()) return "0";
  return signed_term(m.coefficient, m.power, true);
}

template <FactorRing T>
std::string format_trinomial(const Trinomial<T>& t) {
  std::string out = signed_term(t.a, 2, true);
  if (t.b != T::zero()) out += signed_term(t.b, 1, false);
  if (t.c != T::zero()) out += signed_term(t.c, 0, false);
  return out;
}

template <FactorRing T>
std::string format_binomial(const LinearBinomial<T>& f) {
  std::string out = signed_term(f.leading, 1, true);
  if (f.constant != T::zero()) out += signed_term(f.constant, 0, false);
  return out;
}

template <FactorRing T>
std::string render_trace(const StepTrace<T>& trace) {
  std::ostringstream os;
  for (const auto& step : trace.steps) {
    std::visit(
        [&](const auto& s) {
          using S = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<S, ContentStep<T>>) {
            os << "Content: gcd of the coefficients = " << to_string(s.content) << "\n";
            if (s.content != T::one()) {
              os << "Primitive part: " << format_trinomial(s.primitive) << "\n";
            }
          } else if constexpr (std::is_same_v<S, ProductStep<T>>) {
            os << "Product: ac = " << format_coefficient(s.a) << " * " << format_coefficient(s.c)
               << " = " << to_string(s.product) << "\n";
            os << "Factor pairs b1 * b2 = " << to_string(s.product)
               << ", looking for b1 + b2 = " << to_string(s.target_sum) << ":\n";
          } else if constexpr (std::is_same_v<S, CandidateStep<T>>) {
            os << "  " << format_coefficient(s.b1) << " * " << format_coefficient(s.b2)
               << ": sum " << to_string(s.b1 + s.b2) << (s.accepted ? "  <- accepted" : "")
               << "\n";
          } else if constexpr (std::is_same_v<S, RewriteStep<T>>) {
            os << "Rewrite: " << signed_term(s.a, 2, true) << signed_term(s.b1, 1, false)
               << signed_term(s.b2, 1, false) << signed_term(s.c, 0, false) << "\n";
          } else if constexpr (std::is_same_v<S, GroupArray<T>>) {
            os << "Grouping array:\n";
            render_array(os, s);
          } else {
            if (s.verdict == Verdict::Factored) {
              os << "Result: " << format_product(s.unit * s.content, s.factors->first,
                                                 s.factors->second)
                 << "\n";
            } else if (s.verdict == Verdict::Irreducible) {
              os << "No factor pair sums to the middle coefficient: the primitive part is "
                    "irreducible\n";
            } else {
              os << "Not applicable\n";
            }
          }
        },
        step);
  }
  return os.str();
}

template <FactorRing T>
std::string render_result(const Factorization<T>& f, OutputFormat format) {
  switch (format) {
    case OutputFormat::Text:
      return render_text(f) + "\n";
    case OutputFormat::Worked: {
      std::string head = "Factoring " + format_trinomial(f.input) + " over " +
                         (T::ring_name == "int" ? "Z" : "Z[i]") + "\n";
      if (f.verdict == Verdict::NotApplicable) return head + render_text(f) + "\n";
      return head + render_trace(f.trace);
    }
    case OutputFormat::Structured:
      return render_structured(f);
  }
  return {};
}

#define ACF_INSTANTIATE_RENDER(T)                                             \
  template std::string format_coefficient<T>(const T&);                      \
  template std::string format_monomial<T>(const Monomial<T>&);               \
  template std::string format_trinomial<T>(const Trinomial<T>&);             \
  template std::string format_binomial<T>(const LinearBinomial<T>&);         \
  template std::string render_trace<T>(const StepTrace<T>&);                 \
  template std::string render_result<T>(const Factorization<T>&, OutputFormat);

ACF_INSTANTIATE_RENDER(Integer)
ACF_INSTANTIATE_RENDER(Gaussian)

#undef ACF_INSTANTIATE_RENDER

}  // namespace acf
