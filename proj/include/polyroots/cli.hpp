#pragma once

// Command-line front end: argument grammar, coefficient literals, and the
// text/JSON renderers. tools/polyroots_cli.cpp is a thin main() over this.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "polyroots/closed_form.hpp"
#include "polyroots/errors.hpp"
#include "polyroots/oracle.hpp"
#include "polyroots/poly_core.hpp"
#include "polyroots/quintic_pipeline.hpp"
#include "polyroots/report.hpp"
#include "polyroots/tschirnhaus_quartic.hpp"

namespace polyroots::cli {

enum class Method { paper, elimination, oracle };
enum class Format { text, json };

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int usage = 2;
inline constexpr int solve_failed = 3;
inline constexpr int degenerate = 4;
}  // namespace exit_code

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CliRequest {
  // Descending powers, as typed.
  std::vector<Complex> coefficients;
  Method method = Method::paper;
  Real tol = 1e-8;
  bool trace = false;
  Format format = Format::text;
  std::optional<std::string> batch_path;
};

inline constexpr std::string_view kUsage =
    "usage: polyroots solve --coeffs <c_n,...,c_0> [--method paper|elimination|oracle] "
    "[--tol <real>] [--trace] [--format text|json] [--batch <path>]";

inline std::string_view method_name(Method m) {
  switch (m) {
    case Method::paper: return "paper";
    case Method::elimination: return "elimination";
    case Method::oracle: return "oracle";
  }
  return "paper";
}

/// Parses `a`, `bi`, `a+bi`, `a-bi` (decimal or scientific). A bare `i`
/// means 1i.
inline Complex parse_complex(std::string_view text) {
  static const std::string num = R"((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)";
  static const std::regex real_only("^([+-]?" + num + ")$");
  static const std::regex imag_only("^([+-]?)(" + num + ")?i$");
  static const std::regex both("^([+-]?" + num + ")([+-])(" + num + ")?i$");

  const std::string s(text);
  std::smatch m;
  auto to_real = [](const std::string& v) { return std::stod(v); };
  if (std::regex_match(s, m, real_only)) return {to_real(m[1]), 0};
  if (std::regex_match(s, m, imag_only)) {
    const Real mag = m[2].matched ? to_real(m[2]) : 1;
    return {0, m[1] == "-" ? -mag : mag};
  }
  if (std::regex_match(s, m, both)) {
    const Real mag = m[3].matched ? to_real(m[3]) : 1;
    return {to_real(m[1]), m[2] == "-" ? -mag : mag};
  }
  throw UsageError("malformed complex literal '" + s + "'");
}

inline std::vector<Complex> parse_coefficients(std::string_view list) {
  std::vector<Complex> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = list.find(',', start);
    std::string item(list.substr(start, comma == std::string_view::npos ? comma : comma - start));
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
               item.end());
    if (item.empty()) throw UsageError("empty coefficient in list '" + std::string(list) + "'");
    out.push_back(parse_complex(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (out.size() < 2 || out.size() > 6) {
    throw UsageError("expected 2 to 6 coefficients (degree 1 to 5), got " +
                     std::to_string(out.size()));
  }
  return out;
}

/// `args` excludes the program name.
inline CliRequest parse_args(const std::vector<std::string>& args) {
  if (args.empty() || args[0] != "solve") throw UsageError("expected the 'solve' command");
  CliRequest req;
  bool have_coeffs = false;

  for (std::size_t i = 1; i < args.size(); ++i) {
    std::string flag = args[i];
    std::optional<std::string> inline_value;
    if (const auto eq = flag.find('='); flag.rfind("--", 0) == 0 && eq != std::string::npos) {
      inline_value = flag.substr(eq + 1);
      flag = flag.substr(0, eq);
    }
    auto value = [&]() -> std::string {
      if (inline_value) return *inline_value;
      if (i + 1 >= args.size()) throw UsageError("missing value for " + flag);
      return args[++i];
    };

    if (flag == "--coeffs") {
      req.coefficients = parse_coefficients(value());
      have_coeffs = true;
    } else if (flag == "--method") {
      const auto v = value();
      if (v == "paper") req.method = Method::paper;
      else if (v == "elimination") req.method = Method::elimination;
      else if (v == "oracle") req.method = Method::oracle;
      else throw UsageError("unknown method '" + v + "'");
    } else if (flag == "--tol") {
      const auto v = value();
      std::size_t used = 0;
      Real tol = 0;
      try {
        tol = std::stod(v, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != v.size() || !(tol > 0) || !std::isfinite(tol)) {
        throw UsageError("--tol needs a positive real, got '" + v + "'");
      }
      req.tol = tol;
    } else if (flag == "--trace") {
      if (inline_value) throw UsageError("--trace takes no value");
      req.trace = true;
    } else if (flag == "--format") {
      const auto v = value();
      if (v == "text") req.format = Format::text;
      else if (v == "json") req.format = Format::json;
      else throw UsageError("unknown format '" + v + "'");
    } else if (flag == "--batch") {
      req.batch_path = value();
    } else {
      throw UsageError("unknown argument '" + args[i] + "'");
    }
  }

  if (have_coeffs == req.batch_path.has_value()) {
    throw UsageError("give exactly one of --coeffs or --batch");
  }
  return req;
}

/// Oracle-recomputed eliminant next to the closed forms, for one accepted
/// quartic stage.
struct IdentityCheck {
  std::string label;
  EliminantCoeffs eliminant{};
  Complex B2_formula, B0_formula;
  ResolventCubicCoeffs resolvent_formula{}, resolvent_elimination{};
};

struct SolveResult {
  int degree = 0;
  RootSet roots;
  Real vieta_defect = 0;
  std::vector<CandidateStage> stages;
  std::vector<IdentityCheck> identities;
};

namespace detail {

inline IdentityCheck check_identities(const Polynomial& monic_quartic, const CandidateStage& stage) {
  const Polynomial q =
      stage.shift == Complex{0} ? monic_quartic : shift(monic_quartic, stage.shift);
  const auto a = QuarticCoeffs::from(q);
  IdentityCheck out;
  out.label = stage.label;
  out.eliminant = eliminant_coeffs(a, stage.transform);
  out.B2_formula = compute_B2(a, stage.transform);
  out.B0_formula = compute_B0(a, stage.transform);
  out.resolvent_formula = resolvent_cubic_coeffs(a);
  out.resolvent_elimination = stage.resolvent_cubic;
  return out;
}

inline std::vector<Complex> low_degree_roots(const Polynomial& monic) {
  switch (monic.degree()) {
    case 1: return {-monic[0]};
    case 2: {
      const auto r = quadratic_roots(Complex{1}, monic[1], monic[0]);
      return {r.begin(), r.end()};
    }
    default: {
      const auto r = cubic_roots(monic[0], monic[1], monic[2], Complex{0}, 0);
      return {r.begin(), r.end()};
    }
  }
}

}  // namespace detail

/// Solves one polynomial given in descending powers.
inline SolveResult solve(const std::vector<Complex>& descending, Method method, Real tol) {
  const Polynomial original = Polynomial::from_descending(descending);
  if (original.degree() < 1) throw UsageError("polynomial must have degree at least 1");
  const Polynomial monic = normalize_monic(original);
  const int degree = monic.degree();

  SolverConfig cfg;
  cfg.tol = tol;
  SolveResult result;
  result.degree = degree;

  std::vector<Complex> roots;
  if (method == Method::oracle) {
    roots = aberth_all_roots(monic, std::min(tol, kOracleTolerance)).roots;
  } else if (degree >= 4) {
    if (method == Method::elimination) cfg.coefficient_source = CoefficientSource::elimination;
    SolveReport report;
    Polynomial quartic = monic;
    if (degree == 4) {
      report = solve_quartic(monic, cfg);
    } else {
      const auto sol = solve_quintic(monic, AberthFirstRoot{}, cfg);
      report = sol.report;
      quartic = deflated_quartic_coeffs(monic, sol.r[0]).polynomial();
    }
    roots = report.roots.roots;
    result.stages = report.stages;
    if (method == Method::elimination) {
      for (const auto& stage : result.stages) {
        result.identities.push_back(detail::check_identities(quartic, stage));
      }
    }
  } else {
    if (method == Method::elimination) {
      throw UsageError("the elimination method needs degree 4 or 5");
    }
    roots = detail::low_degree_roots(monic);
    for (auto& r : roots) r = newton_polish(monic, r, cfg.polish_steps);
  }

  result.roots = make_root_set(monic, std::move(roots));
  result.vieta_defect = vieta_defect(monic, result.roots.roots);
  return result;
}

/// 12 significant digits, written so it parses back as a coefficient literal.
inline std::string format_complex(const Complex& z) {
  std::ostringstream os;
  os << std::setprecision(12) << z.real() << (std::signbit(z.imag()) ? '-' : '+')
     << std::abs(z.imag()) << 'i';
  return os.str();
}

inline std::string format_real(Real v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

inline void render_text(const SolveResult& r, Method method, Real tol, bool trace,
                        std::ostream& out) {
  out << "degree: " << r.degree << '\n'
      << "method: " << method_name(method) << '\n'
      << "tolerance: " << format_real(tol) << '\n'
      << "roots:\n";
  for (std::size_t i = 0; i < r.roots.roots.size(); ++i) {
    out << "  x" << i + 1 << " = " << format_complex(r.roots.roots[i])
        << "  residual " << format_real(r.roots.residuals[i]) << '\n';
  }
  out << "vieta_defect: " << format_real(r.vieta_defect) << '\n';

  if (trace) {
    for (const auto& stage : r.stages) {
      out << "candidates (" << stage.label << ", shift " << format_complex(stage.shift)
          << ", b0 root " << stage.b0_index << ", branch " << stage.branch << "):\n";
      for (const auto& c : stage.candidates) {
        out << "  x[" << c.m << ',' << c.n << "] = " << format_complex(c.value)
            << "  residual " << format_real(c.residual);
        if (c.dual_residual) out << "  dual " << format_real(*c.dual_residual);
        out << "  " << (c.accepted ? "accepted" : "rejected") << '\n';
      }
    }
  }

  for (const auto& id : r.identities) {
    const auto& e = id.eliminant;
    out << "elimination check (" << id.label << "):\n"
        << "  c4 = " << format_complex(e.c4) << '\n'
        << "  c3 = " << format_complex(e.c3) << '\n'
        << "  c2 = " << format_complex(e.c2) << "  |c2 - B2| = "
        << format_real(std::abs(e.c2 - id.B2_formula)) << '\n'
        << "  c1 = " << format_complex(e.c1) << '\n'
        << "  c0 = " << format_complex(e.c0) << "  |c0 - B0| = "
        << format_real(std::abs(e.c0 - id.B0_formula)) << '\n';
    const auto& f = id.resolvent_formula;
    const auto& n = id.resolvent_elimination;
    out << "  resolvent cubic |elimination - closed form| = "
        << format_real(std::abs(n.b00 - f.b00)) << ", " << format_real(std::abs(n.b01 - f.b01))
        << ", " << format_real(std::abs(n.b02 - f.b02)) << ", "
        << format_real(std::abs(n.b03 - f.b03)) << '\n';
  }
}

inline nlohmann::ordered_json to_json(const SolveResult& r, Method method, Real tol, bool trace) {
  nlohmann::ordered_json j;
  j["degree"] = r.degree;
  j["method"] = method_name(method);
  j["tolerance"] = tol;
  auto roots = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < r.roots.roots.size(); ++i) {
    roots.push_back({{"re", r.roots.roots[i].real()},
                     {"im", r.roots.roots[i].imag()},
                     {"residual", r.roots.residuals[i]}});
  }
  j["roots"] = std::move(roots);
  j["vieta_defect"] = r.vieta_defect;
  if (trace) {
    auto cands = nlohmann::ordered_json::array();
    for (const auto& stage : r.stages) {
      for (const auto& c : stage.candidates) {
        cands.push_back({{"stage", stage.label},
                         {"m", c.m},
                         {"n", c.n},
                         {"re", c.value.real()},
                         {"im", c.value.imag()},
                         {"residual", c.residual},
                         {"accepted", c.accepted}});
      }
    }
    j["candidates"] = std::move(cands);
  }
  return j;
}

inline int exit_code_for(const SolverError& e) {
  return e.is_degeneracy() ? exit_code::degenerate : exit_code::solve_failed;
}

namespace detail {

/// Solves and renders one coefficient list; failures go to `err` and set the
/// exit code.
inline int run_one(const std::vector<Complex>& coeffs, const CliRequest& req, std::ostream& out,
                   std::ostream& err, const std::string& where) {
  try {
    const auto r = solve(coeffs, req.method, req.tol);
    if (req.format == Format::json) {
      out << to_json(r, req.method, req.tol, req.trace).dump() << '\n';
    } else {
      render_text(r, req.method, req.tol, req.trace, out);
    }
    return exit_code::ok;
  } catch (const UsageError& e) {
    err << where << "error: " << e.what() << '\n';
    return exit_code::usage;
  } catch (const ZeroPolynomial& e) {
    err << where << "error: " << e.what() << '\n';
    return exit_code::usage;
  } catch (const SolverError& e) {
    err << where << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
}

}  // namespace detail

/// Runs a parsed request. Batch mode reports each line in input order and
/// returns the largest exit code seen.
inline int run(const CliRequest& req, std::ostream& out, std::ostream& err) {
  if (!req.batch_path) return detail::run_one(req.coefficients, req, out, err, "");

  std::ifstream in(*req.batch_path);
  if (!in) {
    err << "error: cannot open batch file '" << *req.batch_path << "'\n";
    return exit_code::usage;
  }
  int worst = exit_code::ok;
  std::string line;
  bool first = true;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    const auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos || line[begin] == '#') continue;
    const auto end = line.find_last_not_of(" \t\r");
    const std::string where = "line " + std::to_string(lineno) + ": ";
    std::vector<Complex> coeffs;
    try {
      coeffs = parse_coefficients(line.substr(begin, end - begin + 1));
    } catch (const UsageError& e) {
      err << where << "error: " << e.what() << '\n';
      worst = std::max(worst, exit_code::usage);
      continue;
    }
    if (req.format == Format::text) {
      if (!first) out << '\n';
      out << "# line " << lineno << '\n';
    }
    first = false;
    worst = std::max(worst, detail::run_one(coeffs, req, out, err, where));
  }
  return worst;
}

/// Entry point for main(): parses, runs, and maps usage errors to exit 2.
inline int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  if (args.size() == 1 && (args[0] == "--help" || args[0] == "-h")) {
    out << kUsage << '\n';
    return exit_code::ok;
  }
  CliRequest req;
  try {
    req = parse_args(args);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << " (see --help)\n";
    return exit_code::usage;
  }
  return run(req, out, err);
}

}  // namespace polyroots::cli
