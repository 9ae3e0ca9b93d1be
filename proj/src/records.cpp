#include "triadsq/records.hpp"

#include <stdexcept>

namespace triadsq {

namespace {

Json poly_coeffs(const Polynomial& p) {
  Json arr = Json::array();
  for (int i = 0; i <= p.degree(); ++i) arr.push_back(p.coeff(i).str());
  return arr;
}

Json rational_function(const RationalFunction& f) {
  return Json{{"num", poly_coeffs(f.num())}, {"den", poly_coeffs(f.den())}};
}

}  // namespace

std::string integer_str(const Integer& n) { return n.get_str(); }

Integer parse_integer(const std::string& s) {
  try {
    return Integer(s, 10);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("parse_integer: bad integer literal: " + s);
  }
}

Json triad_record(const Triad& t) {
  return Json{{"kind", "triad"},
              {"a", integer_str(t.a)},
              {"b", integer_str(t.b)},
              {"c", integer_str(t.c)},
              {"sum", integer_str(t.sum())}};
}

Json certificate_record(const Triad& t, const Certificate& c) {
  return Json{{"kind", "certificate"},
              {"a", integer_str(t.a)},
              {"b", integer_str(t.b)},
              {"c", integer_str(t.c)},
              {"u", integer_str(c.u)},
              {"v", integer_str(c.v)},
              {"w", integer_str(c.w)}};
}

Json hit_record(const SearchHit& h) {
  return Json{{"kind", "hit"},
              {"a", integer_str(h.triad.a)},
              {"b", integer_str(h.triad.b)},
              {"c", integer_str(h.triad.c)},
              {"sum", integer_str(h.triad.sum())},
              {"u", integer_str(h.certificate.u)},
              {"v", integer_str(h.certificate.v)},
              {"w", integer_str(h.certificate.w)}};
}

Json search_summary_record(const Integer& max_sum, int jobs,
                           std::size_t count, std::int64_t elapsed_ms) {
  return Json{{"kind", "report"},
              {"subject", "search"},
              {"max_sum", integer_str(max_sum)},
              {"jobs", jobs},
              {"count", static_cast<std::int64_t>(count)},
              {"elapsed_ms", std::to_string(elapsed_ms)}};
}

Json error_record(const std::string& message) {
  return Json{{"kind", "error"}, {"message", message}};
}

Json verify_failure_record(const Triad& t, const VerifyFailure& f) {
  return Json{{"kind", "error"},
              {"message", "not a solution"},
              {"a", integer_str(t.a)},
              {"b", integer_str(t.b)},
              {"c", integer_str(t.c)},
              {"stage", stage_name(f.stage)},
              {"value", integer_str(f.value)}};
}

Json solve_record(const Rational& m, const ScaledTriad& s) {
  return Json{{"kind", "certificate"},
              {"m", m.str()},
              {"a", integer_str(s.triad.a)},
              {"b", integer_str(s.triad.b)},
              {"c", integer_str(s.triad.c)},
              {"k", integer_str(s.k)},
              {"u", integer_str(s.certificate.u)},
              {"v", integer_str(s.certificate.v)},
              {"w", integer_str(s.certificate.w)}};
}

Json raw_triple_record(const Rational& m, const RationalTriple& t) {
  Json j{{"kind", "triad"},
         {"m", m.str()},
         {"a", t.a.str()},
         {"b", t.b.str()},
         {"c", t.c.str()},
         {"u", t.cert_u.str()},
         {"w", t.cert_w.str()}};
  if (t.cert_v) j["v"] = t.cert_v->str();
  return j;
}

Json family_report_record(const FamilyReport& r) {
  Json cleared = Json::array();
  for (const auto& p : r.cleared_polys) {
    cleared.push_back(Json{{"degree", p.degree()},
                           {"leading", p.lc().str()},
                           {"constant", p.coeff(0).str()},
                           {"coefficients", poly_coeffs(p)}});
  }
  return Json{{"kind", "report"},
              {"subject", "family-check"},
              {"sum_identity", r.sum_identity},
              {"squares_root", rational_function(r.squares_root)},
              {"cubes_root", rational_function(r.cubes_root)},
              {"clearing_poly", poly_coeffs(r.clearing_poly)},
              {"cleared", cleared},
              {"cleared_degree", r.cleared_degree},
              {"expected_degree", 68},
              {"degree_matches", r.cleared_degree == 68}};
}

Json identities_report_record(const IdentityReport& r) {
  Json cases = Json::array();
  for (const auto& c : r.cases) {
    Json cj{{"name", c.name},
            {"samples", c.samples},
            {"residual_zero", c.residual_zero}};
    if (c.witness) cj["witness"] = *c.witness;
    cases.push_back(std::move(cj));
  }
  return Json{{"kind", "report"},
              {"subject", "identities"},
              {"samples", r.samples},
              {"seed", std::to_string(r.seed)},
              {"all_zero", r.all_zero()},
              {"cases", std::move(cases)}};
}

Json point_record(const PointSolution& s) {
  Json j{{"kind", "point"},
         {"multiple", s.multiple},
         {"p", s.p.str()},
         {"a", s.triple.a.str()},
         {"b", s.triple.b.str()},
         {"c", s.triple.c.str()},
         {"u", s.triple.cert_u.str()},
         {"w", s.triple.cert_w.str()},
         {"all_positive", s.all_positive}};
  if (s.triple.cert_v) j["v"] = s.triple.cert_v->str();
  return j;
}

Json points_header_record(const Rational& m, const QuarticPoint& base,
                          const WeierstrassCurve& curve,
                          const std::vector<std::string>& notices) {
  return Json{{"kind", "report"},
              {"subject", "points"},
              {"m", m.str()},
              {"base_p", base.p.str()},
              {"base_Y", base.Y.str()},
              {"curve_a2", curve.a2.str()},
              {"curve_a4", curve.a4.str()},
              {"curve_a6", curve.a6.str()},
              {"notices", notices}};
}

std::string format_record(const Json& j) { return j.dump(); }

Json parse_record(const std::string& line) {
  Json j = Json::parse(line);
  if (!j.is_object() || !j.contains("kind"))
    throw std::invalid_argument("parse_record: not an output record");
  return j;
}

}  // namespace triadsq
