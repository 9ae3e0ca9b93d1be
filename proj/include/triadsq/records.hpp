/* JSON output records: one object per line, every number carried as an
 * exact decimal or fraction string so records round-trip losslessly.
 * Kinds: triad | certificate | report | hit | point | error.
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "triadsq/curve.hpp"
#include "triadsq/exactnum.hpp"
#include "triadsq/identities.hpp"
#include "triadsq/parametric.hpp"
#include "triadsq/search.hpp"
#include "triadsq/verify.hpp"

namespace triadsq {

using Json = nlohmann::json;

std::string integer_str(const Integer& n);
Integer parse_integer(const std::string& s);

Json triad_record(const Triad& t);
Json certificate_record(const Triad& t, const Certificate& c);
Json hit_record(const SearchHit& h);
Json search_summary_record(const Integer& max_sum, int jobs,
                           std::size_t count, std::int64_t elapsed_ms);
Json error_record(const std::string& message);
Json verify_failure_record(const Triad& t, const VerifyFailure& f);

/* solve: the scaled integer triad with its certificate and the scaling data. */
Json solve_record(const Rational& m, const ScaledTriad& s);
/* solve --raw: the rational triple before scaling. */
Json raw_triple_record(const Rational& m, const RationalTriple& t);

Json family_report_record(const FamilyReport& r);
Json identities_report_record(const IdentityReport& r);

Json point_record(const PointSolution& s);
Json points_header_record(const Rational& m, const QuarticPoint& base,
                          const WeierstrassCurve& curve,
                          const std::vector<std::string>& notices);

/* Compact single-line rendering (keys sorted, no floats anywhere). */
std::string format_record(const Json& j);
Json parse_record(const std::string& line);

}  // namespace triadsq
