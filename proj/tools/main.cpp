#include <chrono>
#include <cstdint>
#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "triadsq/curve.hpp"
#include "triadsq/exactnum.hpp"
#include "triadsq/identities.hpp"
#include "triadsq/parametric.hpp"
#include "triadsq/records.hpp"
#include "triadsq/search.hpp"
#include "triadsq/verify.hpp"

namespace {

using namespace triadsq;

void emit(const Json& j) { std::cout << format_record(j) << "\n"; }

std::string stage_phrase(FailStage s) {
  switch (s) {
    case FailStage::kSum: return "sum";
    case FailStage::kSquares: return "sum of squares";
    case FailStage::kCubes: return "sum of cubes";
  }
  return "?";
}

std::int64_t ms_since(std::chrono::steady_clock::time_point t0) {
  auto dt = std::chrono::steady_clock::now() - t0;
  return std::chrono::duration_cast<std::chrono::milliseconds>(dt).count();
}

int cmd_verify(const std::string& as, const std::string& bs,
               const std::string& cs, bool json) {
  Triad t(parse_integer(as), parse_integer(bs), parse_integer(cs));
  VerifyResult r = verify_triad(t);
  if (r.ok()) {
    const Certificate& c = *r.certificate;
    if (json) {
      emit(certificate_record(t, c));
    } else {
      std::cout << "(" << t.a << ", " << t.b << ", " << t.c
                << ") is a solution\n"
                << "  sum             " << t.sum() << " = " << c.u << "^2\n"
                << "  sum of squares  " << t.a * t.a + t.b * t.b + t.c * t.c
                << " = " << c.v << "^2\n"
                << "  sum of cubes    "
                << t.a * t.a * t.a + t.b * t.b * t.b + t.c * t.c * t.c
                << " = " << c.w << "^2\n";
    }
    return 0;
  }
  const VerifyFailure& f = *r.failure;
  if (json) {
    emit(verify_failure_record(t, f));
  } else {
    std::cerr << "(" << t.a << ", " << t.b << ", " << t.c << "): "
              << stage_phrase(f.stage) << " = " << f.value
              << " is not a perfect square\n";
  }
  return 1;
}

int cmd_search(const std::string& max_sum_s, int jobs, bool json) {
  Integer max_sum = parse_integer(max_sum_s);
  auto t0 = std::chrono::steady_clock::now();
  auto hits = search(max_sum, jobs);
  auto elapsed = ms_since(t0);
  for (const auto& h : hits) {
    if (json) {
      emit(hit_record(h));
    } else {
      std::cout << "(" << h.triad.a << ", " << h.triad.b << ", " << h.triad.c
                << ")  sum = " << h.certificate.u
                << "^2  squares = " << h.certificate.v
                << "^2  cubes = " << h.certificate.w << "^2\n";
    }
  }
  if (json) {
    emit(search_summary_record(max_sum, jobs, hits.size(), elapsed));
  } else {
    std::cout << hits.size() << " solution" << (hits.size() == 1 ? "" : "s")
              << " with sum < " << max_sum << " (jobs " << jobs << ", "
              << elapsed << " ms)\n";
  }
  return 0;
}

int cmd_solve(const std::string& ms, bool raw, bool json) {
  Rational m = Rational::parse(ms);
  RationalTriple t = solve_for_m(m);
  if (raw) {
    if (json) {
      emit(raw_triple_record(m, t));
    } else {
      std::cout << "rational solution at m = " << m.str() << "\n"
                << "  a = " << t.a.str() << "\n"
                << "  b = " << t.b.str() << "\n"
                << "  c = " << t.c.str() << "\n"
                << "  u = " << t.cert_u.str() << "\n"
                << "  v = " << (t.cert_v ? t.cert_v->str() : "-") << "\n"
                << "  w = " << t.cert_w.str() << "\n";
    }
  }
  ScaledTriad s = scale_to_integer_triad(t);
  if (json) {
    emit(solve_record(m, s));
  } else {
    std::cout << "integer triad at m = " << m.str() << " (scaled by k = "
              << s.k << ", square part of the gcd removed)\n"
              << "  a = " << s.triad.a << "\n"
              << "  b = " << s.triad.b << "\n"
              << "  c = " << s.triad.c << "\n"
              << "  sum             = " << s.certificate.u << "^2\n"
              << "  sum of squares  = " << s.certificate.v << "^2\n"
              << "  sum of cubes    = " << s.certificate.w << "^2\n";
  }
  return 0;
}

int cmd_family_check(bool json) {
  FamilyReport r = certify_family();
  bool degree_ok = r.cleared_degree == 68;
  if (json) {
    emit(family_report_record(r));
  } else {
    std::cout << "family certificate over Q(m), u = 1\n"
              << "  a + b + c = 1: " << (r.sum_identity ? "ok" : "FAILED")
              << "\n"
              << "  a^2 + b^2 + c^2 = R(m)^2 with R of degree "
              << r.squares_root.num().degree() << "/"
              << r.squares_root.den().degree() << ": ok\n"
              << "  a^3 + b^3 + c^3 = S(m)^2 with S of degree "
              << r.cubes_root.num().degree() << "/"
              << r.cubes_root.den().degree() << ": ok\n"
              << "  clearing denominator D(m): monic, degree "
              << r.clearing_poly.degree() << "\n"
              << "  integer forms D^2*a, D^2*b, D^2*c: degree "
              << r.cleared_degree << ", leading coefficients "
              << r.cleared_polys[0].lc().str() << ", "
              << r.cleared_polys[1].lc().str() << ", "
              << r.cleared_polys[2].lc().str() << "\n";
    if (degree_ok) {
      std::cout << "  cleared degree matches the expected value 68\n";
    } else {
      std::cout << "  DISCREPANCY: cleared degree " << r.cleared_degree
                << " != expected 68\n";
    }
  }
  return degree_ok ? 0 : 1;
}

int cmd_points(const std::string& ms, int count, bool json) {
  Rational m = Rational::parse(ms);
  PointSolutionRun run = solutions_from_points(m, count);
  if (json) {
    emit(points_header_record(m, run.base, run.curve, run.notices));
    for (const auto& s : run.solutions) emit(point_record(s));
  } else {
    std::cout << "m = " << m.str() << "\n"
              << "base point P: p = " << run.base.p.str() << "\n"
              << "              Y = " << run.base.Y.str() << "\n"
              << "curve: y^2 = x^3 + (" << run.curve.a2.str() << ") x^2 + ("
              << run.curve.a4.str() << ") x + (" << run.curve.a6.str()
              << ")\n";
    for (const auto& s : run.solutions) {
      std::cout << "[" << s.multiple << "]P: p = " << s.p.str() << "\n"
                << "  a = " << s.triple.a.str() << "\n"
                << "  b = " << s.triple.b.str() << "\n"
                << "  c = " << s.triple.c.str() << "\n"
                << "  " << (s.all_positive ? "all entries positive"
                                           : "not all entries positive")
                << "\n";
    }
    for (const auto& n : run.notices) std::cout << n << "\n";
  }
  return 0;
}

int cmd_identities(int samples, std::uint64_t seed, bool json) {
  IdentityReport r = run_identities(samples, seed);
  if (json) {
    emit(identities_report_record(r));
  } else {
    std::cout << "seed " << r.seed << ", " << r.samples
              << " samples per case\n";
    for (const auto& c : r.cases) {
      std::cout << "  " << c.name << ": "
                << (c.residual_zero ? "residual 0" : "NONZERO RESIDUAL")
                << "\n";
      if (c.witness) std::cout << "    witness: " << *c.witness << "\n";
    }
    std::cout << (r.all_zero() ? "all identities hold"
                               : "identity failure")
              << "\n";
  }
  return r.all_zero() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Triads of positive integers whose sum, sum of squares and sum of "
      "cubes are all perfect squares: verification, exhaustive search, the "
      "parametric family, and elliptic-curve point generation."};
  app.require_subcommand(1);

  std::string va, vb, vc;
  bool v_json = false;
  auto* verify = app.add_subcommand("verify", "Check a triad directly");
  verify->add_option("a", va, "first entry")->required();
  verify->add_option("b", vb, "second entry")->required();
  verify->add_option("c", vc, "third entry")->required();
  verify->add_flag("--json", v_json, "emit JSON records");

  std::string s_max;
  int s_jobs = 1;
  bool s_json = false;
  auto* search_cmd =
      app.add_subcommand("search", "Exhaustively list solutions by sum");
  search_cmd->add_option("--max-sum", s_max, "strict upper bound on a+b+c")
      ->required();
  search_cmd->add_option("--jobs", s_jobs, "worker threads")
      ->check(CLI::PositiveNumber);
  search_cmd->add_flag("--json", s_json, "emit JSON records");

  std::string so_m;
  bool so_raw = false, so_json = false;
  auto* solve =
      app.add_subcommand("solve", "Integer solution from the m-family");
  solve->add_option("--m", so_m, "rational parameter, e.g. 3/2")->required();
  solve->add_flag("--raw", so_raw, "also print the rational solution");
  solve->add_flag("--json", so_json, "emit JSON records");

  bool f_json = false;
  auto* family = app.add_subcommand(
      "family-check", "Certify the one-parameter family symbolically");
  family->add_flag("--json", f_json, "emit JSON records");

  std::string p_m;
  int p_count = 2;
  bool p_json = false;
  auto* points = app.add_subcommand(
      "points", "Further rational solutions from curve points");
  points->add_option("--m", p_m, "rational parameter, e.g. 3/2")->required();
  points->add_option("--count", p_count, "walk multiples 2..count of P")
      ->required()
      ->check(CLI::Range(2, 1000000));
  points->add_flag("--json", p_json, "emit JSON records");

  int i_samples = 100;
  std::uint64_t i_seed = 1;
  bool i_json = false;
  auto* identities = app.add_subcommand(
      "identities", "Exact randomized check of the construction identities");
  identities->add_option("--samples", i_samples, "sample points per case")
      ->check(CLI::PositiveNumber);
  identities->add_option("--seed", i_seed, "PRNG seed");
  identities->add_flag("--json", i_json, "emit JSON records");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  bool json = v_json || s_json || so_json || f_json || p_json || i_json;
  try {
    if (*verify) return cmd_verify(va, vb, vc, v_json);
    if (*search_cmd) return cmd_search(s_max, s_jobs, s_json);
    if (*solve) return cmd_solve(so_m, so_raw, so_json);
    if (*family) return cmd_family_check(f_json);
    if (*points) return cmd_points(p_m, p_count, p_json);
    if (*identities) return cmd_identities(i_samples, i_seed, i_json);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    if (json) {
      emit(error_record(e.what()));
    } else {
      std::cerr << "error: " << e.what() << "\n";
    }
    return 1;
  }
  return 2;
}
