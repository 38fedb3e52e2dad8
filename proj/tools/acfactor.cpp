// Command-line front end: factor one quadratic trinomial.
//
//   acfactor "6x^2+7x-24"
//   acfactor --explain "15x^2-29x-14"
//   acfactor --json "(2+4i)x^2+(7+5i)x+10"
//
// Exit status: 0 factored, 2 irreducible, 3 not applicable, 1 usage or
// input error.

#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "acfactor/factorizer.hpp"
#include "acfactor/gaussian.hpp"
#include "acfactor/parse.hpp"
#include "acfactor/render.hpp"

namespace {

constexpr int kFactored = 0;
constexpr int kUsageError = 1;
constexpr int kIrreducible = 2;
constexpr int kNotApplicable = 3;

template <acf::FactorRing T>
int run(const acf::Trinomial<T>& t, const acf::FactorBound& bound, acf::OutputFormat format) {
  const auto result = acf::factor_quadratic(t, bound);
  std::cout << acf::render_result(result, format);
  switch (result.verdict) {
    case acf::Verdict::Factored:
      return kFactored;
    case acf::Verdict::Irreducible:
      return kIrreducible;
    case acf::Verdict::NotApplicable:
      return kNotApplicable;
  }
  return kUsageError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Factor a quadratic trinomial over Z or Z[i] by splitting the middle term"};

  std::string polynomial;
  std::string ring = "auto";
  bool explain = false;
  bool as_json = false;
  std::int64_t max_ac = acf::FactorBound{}.max_size;

  app.add_option("polynomial", polynomial, "Trinomial such as \"6x^2+7x-24\"")->required();
  app.add_option("--ring", ring, "Coefficient ring; defaults to int, or gaussian if an i appears")
      ->check(CLI::IsMember({"int", "gaussian"}));
  auto* explain_flag = app.add_flag("--explain", explain, "Print the worked solution");
  app.add_flag("--json", as_json, "Print a single JSON object")->excludes(explain_flag);
  app.add_option("--max-ac", max_ac,
                 "Largest |ac| (norm of ac over Z[i]) the factor search accepts")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  const auto format = as_json   ? acf::OutputFormat::Structured
                      : explain ? acf::OutputFormat::Worked
                                : acf::OutputFormat::Text;
  const auto choice = ring == "int"        ? acf::RingChoice::Integer
                      : ring == "gaussian" ? acf::RingChoice::Gaussian
                                           : acf::RingChoice::Auto;
  try {
    const acf::ParsedInput input = acf::parse_polynomial(polynomial, choice);
    const acf::FactorBound bound{max_ac};
    return std::visit([&](const auto& t) { return run(t, bound, format); }, input.trinomial);
  } catch (const acf::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.position() != acf::InputError::npos && e.position() <= polynomial.size()) {
      std::cerr << "  " << polynomial << "\n  " << std::string(e.position(), ' ') << "^\n";
    }
    return kUsageError;
  } catch (const acf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
}
