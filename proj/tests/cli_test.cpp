#include "polyroots/cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "test_support.hpp"

namespace polyroots::cli {
namespace {

constexpr Complex I{0, 1};

struct Outcome {
  int code = 0;
  std::string out, err;
};

Outcome run_in_process(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"polyroots"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

Outcome run_binary(const std::string& args) {
  const std::string cmd = std::string(POLYROOTS_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, {}, {}};
  Outcome o;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) o.out.append(buf, n);
  const int status = pclose(pipe);
  o.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return o;
}

std::vector<std::string> keys_of(const nlohmann::ordered_json& j) {
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  return keys;
}

int count_lines_with(const std::string& text, const std::string& needle) {
  std::istringstream in(text);
  int n = 0;
  for (std::string line; std::getline(in, line);) n += line.find(needle) != std::string::npos;
  return n;
}

TEST(ParseComplex, Forms) {
  EXPECT_EQ(parse_complex("3"), Complex{3});
  EXPECT_EQ(parse_complex("-2.5"), Complex{-2.5});
  EXPECT_EQ(parse_complex("1e-3"), Complex{1e-3});
  EXPECT_EQ(parse_complex("2i"), Complex(0, 2));
  EXPECT_EQ(parse_complex("-i"), -I);
  EXPECT_EQ(parse_complex("i"), I);
  EXPECT_EQ(parse_complex("1+2i"), Complex(1, 2));
  EXPECT_EQ(parse_complex("1.5e2-0.5i"), Complex(150, -0.5));
  EXPECT_EQ(parse_complex("-3-i"), Complex(-3, -1));
  EXPECT_EQ(parse_complex(".5+.25i"), Complex(0.5, 0.25));
  for (const char* bad : {"", "bogus", "1+", "i2", "1+2", "1++2i", "2j", "1e", "--1"}) {
    EXPECT_THROW(parse_complex(bad), UsageError) << bad;
  }
}

TEST(ParseArgs, Examples) {
  const auto a = parse_args({"solve", "--coeffs", "1,0,0,0,0,-1"});
  ASSERT_EQ(a.coefficients.size(), 6u);
  EXPECT_EQ(a.coefficients.front(), Complex{1});
  EXPECT_EQ(a.coefficients.back(), Complex{-1});
  EXPECT_EQ(a.method, Method::paper);
  EXPECT_EQ(a.tol, 1e-8);
  EXPECT_FALSE(a.trace);
  EXPECT_EQ(a.format, Format::text);
  EXPECT_FALSE(a.batch_path.has_value());

  const auto b = parse_args({"solve", "--coeffs", "1,0,1", "--format", "json"});
  EXPECT_EQ(b.coefficients, (std::vector<Complex>{1, 0, 1}));
  EXPECT_EQ(b.format, Format::json);

  EXPECT_THROW(parse_args({"solve", "--coeffs", "1,bogus"}), UsageError);
}

TEST(ParseArgs, AllFlags) {
  const auto r = parse_args({"solve", "--coeffs=1,-1+2i,3", "--method", "oracle", "--tol",
                             "1e-10", "--trace", "--format=text"});
  EXPECT_EQ(r.coefficients, (std::vector<Complex>{1, Complex(-1, 2), 3}));
  EXPECT_EQ(r.method, Method::oracle);
  EXPECT_EQ(r.tol, 1e-10);
  EXPECT_TRUE(r.trace);
  EXPECT_EQ(parse_args({"solve", "--batch", "f.txt"}).batch_path, "f.txt");
}

TEST(ParseArgs, UsageErrors) {
  const std::vector<std::vector<std::string>> bad{
      {},
      {"fit", "--coeffs", "1,2"},
      {"solve"},
      {"solve", "--coeffs", "1"},
      {"solve", "--coeffs", "1,2,3,4,5,6,7"},
      {"solve", "--coeffs", "1,,2"},
      {"solve", "--coeffs"},
      {"solve", "--coeffs", "1,2", "--method", "magic"},
      {"solve", "--coeffs", "1,2", "--tol", "0"},
      {"solve", "--coeffs", "1,2", "--tol", "abc"},
      {"solve", "--coeffs", "1,2", "--format", "xml"},
      {"solve", "--coeffs", "1,2", "--verbose"},
      {"solve", "--coeffs", "1,2", "--batch", "x"},
  };
  for (const auto& args : bad) EXPECT_THROW(parse_args(args), UsageError);
}

TEST(Run, QuinticOfUnity) {
  const auto o = run_in_process({"solve", "--coeffs", "1,0,0,0,0,-1", "--format", "json"});
  ASSERT_EQ(o.code, exit_code::ok) << o.err;
  const auto j = nlohmann::json::parse(o.out);
  ASSERT_EQ(j["roots"].size(), 5u);
  std::vector<Complex> roots;
  for (const auto& r : j["roots"]) {
    EXPECT_LE(r["residual"].get<Real>(), 1e-10);
    roots.emplace_back(r["re"].get<Real>(), r["im"].get<Real>());
  }
  EXPECT_LE(testing::multiset_distance(roots, testing::roots_of_unity(5)), 1e-10);
}

TEST(Run, TraceShowsTwelveCandidatesFourAccepted) {
  const auto o = run_in_process({"solve", "--coeffs", "1,1,1,1,1", "--trace"});
  ASSERT_EQ(o.code, exit_code::ok) << o.err;
  EXPECT_EQ(count_lines_with(o.out, "  x["), 12);
  EXPECT_EQ(count_lines_with(o.out, " accepted"), 4);
  EXPECT_EQ(count_lines_with(o.out, " rejected"), 8);

  const auto js = run_in_process({"solve", "--coeffs", "1,1,1,1,1", "--trace", "--format", "json"});
  const auto j = nlohmann::ordered_json::parse(js.out);
  ASSERT_EQ(j["candidates"].size(), 12u);
  int accepted = 0;
  for (const auto& c : j["candidates"]) {
    EXPECT_EQ(keys_of(c), (std::vector<std::string>{"stage", "m", "n", "re", "im", "residual",
                                                    "accepted"}));
    accepted += c["accepted"].get<bool>();
  }
  EXPECT_EQ(accepted, 4);
}

TEST(Run, QuarticMinusOneViaShift) {
  const auto o = run_in_process({"solve", "--coeffs", "1,0,0,0,-1", "--format", "json"});
  ASSERT_EQ(o.code, exit_code::ok) << o.err;
  std::vector<Complex> roots;
  const auto j = nlohmann::json::parse(o.out);
  for (const auto& r : j["roots"])
    roots.emplace_back(r["re"].get<Real>(), r["im"].get<Real>());
  EXPECT_LE(testing::multiset_distance(roots, {1, -1, I, -I}), 1e-10);
}

TEST(Run, JsonKeysAndSortedRoots) {
  const auto o = run_in_process({"solve", "--coeffs", "2,-3i,1,0,5", "--format", "json"});
  ASSERT_EQ(o.code, exit_code::ok) << o.err;
  const auto j = nlohmann::ordered_json::parse(o.out);
  EXPECT_EQ(keys_of(j), (std::vector<std::string>{"degree", "method", "tolerance", "roots",
                                                  "vieta_defect"}));
  EXPECT_EQ(j["degree"], 4);
  EXPECT_EQ(j["method"], "paper");
  EXPECT_EQ(j["tolerance"], 1e-8);
  Complex prev{-INFINITY, -INFINITY};
  for (const auto& r : j["roots"]) {
    EXPECT_EQ(keys_of(r), (std::vector<std::string>{"re", "im", "residual"}));
    const Complex z{r["re"].get<Real>(), r["im"].get<Real>()};
    EXPECT_FALSE(lexicographic_less(z, prev));
    prev = z;
  }
  const auto trace = nlohmann::ordered_json::parse(
      run_in_process({"solve", "--coeffs", "2,-3i,1,0,5", "--format", "json", "--trace"}).out);
  EXPECT_EQ(keys_of(trace).back(), "candidates");
}

TEST(Run, TextAndJsonReportTheSameRoots) {
  for (const std::string coeffs : {"1,0,1", "1,-6,11,-6", "1,2i,-3,1+i,4", "1,0,0,0,0,-1",
                                   "3,1", "1,0,0,0,0,0"}) {
    for (const std::string method : {"paper", "oracle"}) {
      const auto text = run_in_process({"solve", "--coeffs", coeffs, "--method", method});
      const auto json = run_in_process(
          {"solve", "--coeffs", coeffs, "--method", method, "--format", "json"});
      ASSERT_EQ(text.code, 0) << coeffs << text.err;
      ASSERT_EQ(json.code, 0) << coeffs << json.err;
      std::vector<std::string> from_json;
      const auto j = nlohmann::json::parse(json.out);
      for (const auto& r : j["roots"]) {
        from_json.push_back(format_complex({r["re"].get<Real>(), r["im"].get<Real>()}));
      }
      for (std::size_t i = 0; i < from_json.size(); ++i) {
        const std::string want = "x" + std::to_string(i + 1) + " = " + from_json[i] + " ";
        EXPECT_NE(text.out.find(want), std::string::npos) << coeffs << ": " << want;
      }
    }
  }
}

TEST(Run, LowDegreesAndMethods) {
  auto roots_of = [](const std::string& coeffs, const std::string& method) {
    const auto o =
        run_in_process({"solve", "--coeffs", coeffs, "--method", method, "--format", "json"});
    EXPECT_EQ(o.code, 0) << o.err;
    std::vector<Complex> roots;
    const auto j = nlohmann::json::parse(o.out);
    for (const auto& r : j["roots"])
      roots.emplace_back(r["re"].get<Real>(), r["im"].get<Real>());
    return roots;
  };
  EXPECT_LE(testing::multiset_distance(roots_of("2,-4", "paper"), {2}), 1e-15);
  EXPECT_LE(testing::multiset_distance(roots_of("1,0,1", "paper"), {I, -I}), 1e-15);
  EXPECT_LE(testing::multiset_distance(roots_of("1,-6,11,-6", "paper"), {1, 2, 3}), 1e-12);
  EXPECT_LE(testing::multiset_distance(roots_of("0,0,1,-6,11,-6", "paper"), {1, 2, 3}), 1e-12);
  EXPECT_LE(testing::multiset_distance(roots_of("1,-15,85,-225,274,-120", "elimination"),
                                       {1, 2, 3, 4, 5}),
            1e-8);
  EXPECT_LE(testing::multiset_distance(roots_of("1,-10,35,-50,24", "oracle"), {1, 2, 3, 4}),
            1e-12);
}

TEST(Run, EliminationPrintsIdentityDeltas) {
  const auto o = run_in_process({"solve", "--coeffs", "1,2,-1,3,1", "--method", "elimination"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_NE(o.out.find("|c2 - B2|"), std::string::npos);
  EXPECT_NE(o.out.find("|c0 - B0|"), std::string::npos);
  EXPECT_NE(o.out.find("resolvent cubic"), std::string::npos);

  const auto low = run_in_process({"solve", "--coeffs", "1,0,1", "--method", "elimination"});
  EXPECT_EQ(low.code, exit_code::usage);
}

TEST(Run, ExitCodes) {
  EXPECT_EQ(run_in_process({"solve", "--coeffs", "1,bogus"}).code, exit_code::usage);
  EXPECT_EQ(run_in_process({"solve", "--coeffs", "0,0,0"}).code, exit_code::usage);
  EXPECT_EQ(run_in_process({"solve", "--coeffs", "0,5"}).code, exit_code::usage);
  EXPECT_EQ(run_in_process({"--help"}).code, exit_code::ok);
  const auto bad = run_in_process({"solve", "--coeffs", "x"});
  EXPECT_EQ(bad.code, exit_code::usage);
  EXPECT_EQ(count_lines_with(bad.err, "error:"), 1);
}

TEST(Run, BatchKeepsInputOrderAndWorstExitCode) {
  const auto path = std::filesystem::temp_directory_path() / "polyroots_cli_batch.txt";
  {
    std::ofstream f(path);
    f << "# comment line\n"
      << "1,0,0,0,0,-1\n"
      << "\n"
      << "   \n"
      << "1,-3,2\n"
      << "1,nope\n"
      << "1,0,1  \n";
  }
  const auto o = run_in_process({"solve", "--batch", path.string(), "--format", "json"});
  EXPECT_EQ(o.code, exit_code::usage);
  EXPECT_NE(o.err.find("line 6"), std::string::npos);
  std::istringstream lines(o.out);
  std::vector<int> degrees;
  for (std::string line; std::getline(lines, line);)
    degrees.push_back(nlohmann::json::parse(line)["degree"].get<int>());
  EXPECT_EQ(degrees, (std::vector<int>{5, 2, 2}));

  {
    std::ofstream f(path);
    f << "1,-3,2\n1,0,1\n";
  }
  const auto text = run_in_process({"solve", "--batch", path.string()});
  EXPECT_EQ(text.code, exit_code::ok);
  EXPECT_LT(text.out.find("# line 1"), text.out.find("# line 2"));
  std::filesystem::remove(path);

  EXPECT_EQ(run_in_process({"solve", "--batch", "/nonexistent/polyroots"}).code,
            exit_code::usage);
}

TEST(Binary, ExamplesThroughTheExecutable) {
  const auto a = run_binary("solve --coeffs 1,0,0,0,0,-1 --format json");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(nlohmann::json::parse(a.out)["roots"].size(), 5u);

  const auto b = run_binary("solve --coeffs 1,1,1,1,1 --trace");
  EXPECT_EQ(b.code, 0);
  EXPECT_EQ(count_lines_with(b.out, " accepted"), 4);

  EXPECT_EQ(run_binary("solve --coeffs 1,0,0,0,-1").code, 0);
  EXPECT_EQ(run_binary("solve --coeffs 1,bogus").code, 2);
}

}  // namespace
}  // namespace polyroots::cli
