/* Acceptance gate: one line per criterion, PASS/FAIL with elapsed time.
 * Takes the CLI binary path as argv[1]; exits nonzero on any failure. */
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "triadsq/curve.hpp"
#include "triadsq/exactnum.hpp"
#include "triadsq/identities.hpp"
#include "triadsq/parametric.hpp"
#include "triadsq/records.hpp"
#include "triadsq/search.hpp"
#include "triadsq/verify.hpp"

#include "naive_search.hpp"

using namespace triadsq;

namespace {

std::string g_cli;

struct CliResult {
  int exit_code;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  std::string cmd = "'" + g_cli + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

std::vector<Json> parse_lines(const std::string& out) {
  std::vector<Json> records;
  std::istringstream ss(out);
  std::string line;
  while (std::getline(ss, line))
    if (!line.empty()) records.push_back(parse_record(line));
  return records;
}

/* A criterion body returns an error message, or nothing on success. */
using Body = std::function<std::optional<std::string>()>;

bool run_criterion(int number, const std::string& label, long budget_ms,
                   const Body& body) {
  auto t0 = std::chrono::steady_clock::now();
  std::optional<std::string> err;
  try {
    err = body();
  } catch (const std::exception& e) {
    err = std::string("exception: ") + e.what();
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  if (!err && ms > budget_ms)
    err = "over budget: " + std::to_string(ms) + " ms > " +
          std::to_string(budget_ms) + " ms";
  std::cout << (err ? "FAIL" : "PASS") << "  criterion " << number << ": "
            << label << "  (" << ms << " ms)";
  if (err) std::cout << "  -- " << *err;
  std::cout << "\n" << std::flush;
  return !err;
}

std::optional<std::string> criterion1() {
  auto r1 = verify_triad(Triad(108, 124, 129));
  if (!r1.ok() || !(*r1.certificate == Certificate{19, 209, 2305}))
    return "library certificate for (108,124,129) wrong";
  auto r2 = verify_triad(Triad(34, 2134, 2873));
  if (!r2.ok() || !(*r2.certificate == Certificate{71, 3579, 182845}))
    return "library certificate for (34,2134,2873) wrong";

  auto c1 = run_cli("verify 108 124 129 --json");
  if (c1.exit_code != 0) return "cli verify exited " + std::to_string(c1.exit_code);
  Json j1 = parse_lines(c1.out).at(0);
  if (j1.at("u") != "19" || j1.at("v") != "209" || j1.at("w") != "2305")
    return "cli certificate for (108,124,129) wrong: " + c1.out;

  auto c2 = run_cli("verify 34 2134 2873 --json");
  if (c2.exit_code != 0) return "cli verify exited " + std::to_string(c2.exit_code);
  Json j2 = parse_lines(c2.out).at(0);
  if (j2.at("u") != "71" || j2.at("v") != "3579" || j2.at("w") != "182845")
    return "cli certificate for (34,2134,2873) wrong: " + c2.out;
  return std::nullopt;
}

std::optional<std::string> criterion2() {
  auto one = run_cli("search --max-sum 10000 --jobs 1 --json");
  auto eight = run_cli("search --max-sum 10000 --jobs 8 --json");
  if (one.exit_code != 0 || eight.exit_code != 0) return "cli search failed";

  auto pick_hits = [](const std::string& out) {
    std::vector<std::string> hits;
    for (const Json& j : parse_lines(out))
      if (j.at("kind") == "hit")
        hits.push_back(j.at("a").get<std::string>() + "," +
                       j.at("b").get<std::string>() + "," +
                       j.at("c").get<std::string>() + "," +
                       j.at("u").get<std::string>() + "," +
                       j.at("v").get<std::string>() + "," +
                       j.at("w").get<std::string>());
    return hits;
  };
  auto h1 = pick_hits(one.out), h8 = pick_hits(eight.out);
  if (h1 != h8) return "results differ between jobs=1 and jobs=8";
  if (h1.size() != 2) return "expected exactly 2 hits, got " +
                             std::to_string(h1.size());
  if (h1[0] != "108,124,129,19,209,2305") return "first hit wrong: " + h1[0];
  if (h1[1] != "34,2134,2873,71,3579,182845")
    return "second hit wrong: " + h1[1];
  return std::nullopt;
}

std::optional<std::string> criterion3() {
  auto c = run_cli("solve --m 3/2 --json");
  if (c.exit_code != 0) return "cli solve exited " + std::to_string(c.exit_code);
  Json j = parse_lines(c.out).at(0);
  const char* ea = "22104703132724392891974197260485203180817980456068478";
  const char* eb = "45051218517398331420875516790921404601474342024364969";
  const char* ec = "273836695120684015976157268469007404280872671207701754";
  if (j.at("a") != ea || j.at("b") != eb || j.at("c") != ec)
    return "triad digits differ from the published values: " + c.out;
  return std::nullopt;
}

std::optional<std::string> criterion4() {
  auto c = run_cli("family-check --json");
  if (c.exit_code != 0)
    return "cli family-check exited " + std::to_string(c.exit_code);
  Json j = parse_lines(c.out).at(0);
  if (!j.at("sum_identity").get<bool>()) return "sum identity failed";
  int degree = j.at("cleared_degree").get<int>();
  if (degree != 68)
    return "flagged discrepancy: cleared degree " + std::to_string(degree) +
           " != 68";
  if (!j.at("degree_matches").get<bool>()) return "degree flag inconsistent";
  return std::nullopt;
}

std::optional<std::string> criterion5() {
  for (int i = 0; i < 25; ++i) {
    Rational m(1471 + 4 * i, 1000);
    RationalTriple t = solve_for_m(m);
    if (t.a.sign() <= 0 || t.b.sign() <= 0 || t.c.sign() <= 0)
      return "non-positive solution at m = " + m.str();

    auto c = run_cli("solve --m " + m.str() + " --json");
    if (c.exit_code != 0) return "cli solve failed at m = " + m.str();
    Json j = parse_lines(c.out).at(0);
    Triad scaled(parse_integer(j.at("a").get<std::string>()),
                 parse_integer(j.at("b").get<std::string>()),
                 parse_integer(j.at("c").get<std::string>()));
    auto v = verify_triad(scaled);
    if (!v.ok())
      return "scaled triad fails verification at m = " + m.str() + " (stage " +
             stage_name(v.failure->stage) + ")";
    if (integer_str(v.certificate->u) != j.at("u").get<std::string>() ||
        integer_str(v.certificate->v) != j.at("v").get<std::string>() ||
        integer_str(v.certificate->w) != j.at("w").get<std::string>())
      return "reported certificate mismatch at m = " + m.str();
  }
  return std::nullopt;
}

std::optional<std::string> criterion6() {
  auto c = run_cli("identities --samples 100 --seed 1 --json");
  if (c.exit_code != 0)
    return "cli identities exited " + std::to_string(c.exit_code);
  Json j = parse_lines(c.out).at(0);
  if (!j.at("all_zero").get<bool>()) return "nonzero residual: " + c.out;
  if (j.at("cases").size() != 5) return "expected 5 identity cases";
  for (const Json& cj : j.at("cases"))
    if (!cj.at("residual_zero").get<bool>())
      return "case " + cj.at("name").get<std::string>() + " failed";
  return std::nullopt;
}

std::optional<std::string> criterion7() {
  auto c = run_cli("points --m 3/2 --count 3 --json");
  if (c.exit_code != 0)
    return "cli points exited " + std::to_string(c.exit_code);
  std::vector<Json> records = parse_lines(c.out);
  std::vector<Json> points;
  for (const Json& j : records)
    if (j.at("kind") == "point") points.push_back(j);
  if (points.size() != 2)
    return "expected point records for [2]P and [3]P, got " +
           std::to_string(points.size());

  Rational m(3, 2);
  Rational base = p_of_m(m);
  std::vector<Rational> ps;
  for (const Json& j : points) {
    Rational p = Rational::parse(j.at("p").get<std::string>());
    if (p == base) return "pulled-back parameter equals p(m)";
    if (!rational_square_root(ec2_rhs(p, m)))
      return "ec2 not a square at pulled-back p";
    // the reported triple solves the system exactly
    Rational a = Rational::parse(j.at("a").get<std::string>());
    Rational b = Rational::parse(j.at("b").get<std::string>());
    Rational cc = Rational::parse(j.at("c").get<std::string>());
    Rational u = Rational::parse(j.at("u").get<std::string>());
    Rational v = Rational::parse(j.at("v").get<std::string>());
    Rational w = Rational::parse(j.at("w").get<std::string>());
    if (a + b + cc != u * u) return "sum identity fails for a point record";
    if (a * a + b * b + cc * cc != v * v)
      return "square identity fails for a point record";
    if (a * a * a + b * b * b + cc * cc * cc != w * w)
      return "cube identity fails for a point record";
    ps.push_back(p);
  }
  if (ps[0] == ps[1]) return "pulled-back parameters coincide";
  return std::nullopt;
}

std::optional<std::string> criterion8() {
  auto hits = search(Integer(500));
  auto ref = naive::search(500);
  if (hits.size() != ref.size())
    return "count mismatch: " + std::to_string(hits.size()) + " vs " +
           std::to_string(ref.size());
  for (std::size_t i = 0; i < ref.size(); ++i) {
    const auto& h = hits[i];
    const auto& r = ref[i];
    if (h.triad.a != static_cast<unsigned long>(r.triad[0]) ||
        h.triad.b != static_cast<unsigned long>(r.triad[1]) ||
        h.triad.c != static_cast<unsigned long>(r.triad[2]) ||
        h.certificate.u != static_cast<unsigned long>(r.cert[0]) ||
        h.certificate.v != static_cast<unsigned long>(r.cert[1]) ||
        h.certificate.w != static_cast<unsigned long>(r.cert[2]))
      return "entry " + std::to_string(i) + " differs from the reference";
  }
  return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: acceptance <cli-binary>\n";
    return 2;
  }
  g_cli = argv[1];

  int failures = 0;
  failures += !run_criterion(1, "oracle fixtures", 100, criterion1);
  failures += !run_criterion(2, "exhaustive search to 10000", 60000,
                             criterion2);
  failures += !run_criterion(3, "m = 3/2 reproduction", 1000, criterion3);
  failures += !run_criterion(4, "symbolic family certification", 120000,
                             criterion4);
  failures += !run_criterion(5, "positivity window", 30000, criterion5);
  failures += !run_criterion(6, "identity suite", 10000, criterion6);
  failures += !run_criterion(7, "curve evidence", 10000, criterion7);
  failures += !run_criterion(8, "oracle equivalence below 500", 60000,
                             criterion8);

  if (failures) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all 8 criteria passed\n";
  return 0;
}
