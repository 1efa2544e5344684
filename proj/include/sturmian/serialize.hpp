#pragma once

// JSON and CSV views of the library's results. Exact rationals are written as
// "num/den" strings and quadratic irrationals as {"exact": "a,b,c,d",
// "decimal": "..."}; nothing is ever rounded to a double.

#include <string>

#include "json.hpp"

#include "sturmian/characterization.hpp"
#include "sturmian/discrepancy.hpp"
#include "sturmian/exact_angle.hpp"
#include "sturmian/lattice_gas.hpp"
#include "sturmian/order_analysis.hpp"
#include "sturmian/word.hpp"

namespace sturmian {

using Json = nlohmann::ordered_json;

Json to_json(const BigInt& n);
Json to_json(const Rational& q);
Json to_json(const QuadIrrational& x);
Json to_json(const Word& w);
Json to_json(const DistanceProfile& profile);
Json to_json(const StructureReport& report);
Json to_json(const ComplexityReport& report);
Json to_json(const BalanceVerdict& verdict);
Json to_json(const HomogeneityVerdict& verdict);
Json to_json(const ComponentIntervals& arcs);
Json to_json(const DiscrepancyReport& report);
Json to_json(const LegalityVerdict& verdict);
Json to_json(const LemmaVerdict& verdict);
Json to_json(const InteractionSpec& spec);
Json to_json(const EnergyBreakdown& e);
Json to_json(const GroundStateResult& g);
Json to_json(const PeriodicDensity& p);

/// Reads {"d": [...], "horizon": H, "forbidden": [...]} (plus an optional
/// "gamma": "a,b,c,d"). The forbidden list is taken as given, so a corrupted
/// fixture survives loading and is caught by the checks that use it.
DistanceProfile profile_from_json(const Json& j);

/// word,frequency_decimal,max_dev,horizon
std::string csv_header_discrepancy();
std::string csv_row(const DiscrepancyReport& report);

/// {tool_version, config, results}
Json report_envelope(Json config, Json results);

const char* tool_version();

}  // namespace sturmian
