#include "sturmian/serialize.hpp"

namespace sturmian {

namespace {

Json int_list(const std::vector<std::int64_t>& xs) {
  Json out = Json::array();
  for (std::int64_t x : xs) out.push_back(x);
  return out;
}

Json set_list(const FactorSet& words) {
  Json out = Json::array();
  for (const std::string& w : words) out.push_back(w);
  return out;
}

}  // namespace

const char* tool_version() { return STURMIAN_VERSION; }

Json to_json(const BigInt& n) { return n.str(); }

Json to_json(const Rational& q) { return rational_to_string(q); }

Json to_json(const QuadIrrational& x) { return Json{{"exact", x.to_string()}, {"decimal", x.to_decimal(15)}}; }

Json to_json(const Word& w) { return Json{{"origin", w.origin()}, {"symbols", w.str()}}; }

Json to_json(const DistanceProfile& profile) {
  Json j;
  if (profile.gamma()) j["gamma"] = profile.gamma()->to_string();
  j["horizon"] = profile.horizon();
  j["d"] = int_list(profile.d());
  j["allowed"] = int_list(profile.allowed());
  j["forbidden"] = int_list(profile.forbidden());
  return j;
}

Json to_json(const StructureReport& report) {
  Json entries = Json::array();
  for (const StructureEntry& e : report.entries) {
    entries.push_back({{"d", e.d}, {"role", e.role == DistanceRole::block ? "block" : "singleton"}, {"block", e.block}});
  }
  return Json{{"entries", entries},
              {"block_sizes", report.block_sizes},
              {"neighbour_rule_checked", report.neighbour_rule_checked}};
}

Json to_json(const ComplexityReport& report) {
  Json p = Json::object();
  for (const auto& [n, count] : report.p) p[std::to_string(n)] = count;
  return Json{{"p", p}, {"window_len", report.window_len}};
}

Json to_json(const BalanceVerdict& verdict) {
  Json j{{"balanced", verdict.balanced}};
  if (verdict.witness) {
    const auto& w = *verdict.witness;
    j["witness"] = {{"length", w.length},
                    {"low_offset", w.low_offset},
                    {"low_count", w.low_count},
                    {"high_offset", w.high_offset},
                    {"high_count", w.high_count}};
  }
  return j;
}

Json to_json(const HomogeneityVerdict& verdict) {
  Json j{{"homogeneous", verdict.homogeneous}, {"gap_floor", int_list(verdict.gap_floor)}};
  if (verdict.witness) {
    const auto& w = *verdict.witness;
    j["witness"] = {{"j", w.j}, {"min_gap", w.min_gap}, {"max_gap", w.max_gap}, {"from_edge", w.from_edge}};
  }
  return j;
}

Json to_json(const ComponentIntervals& arcs) {
  Json intervals = Json::array();
  for (const ComponentInterval& c : arcs.intervals) {
    intervals.push_back({{"word", c.word}, {"left", to_json(c.left)}, {"right", to_json(c.right)},
                         {"length", to_json(c.length())}});
  }
  return Json{{"n", arcs.n}, {"count", arcs.intervals.size()}, {"intervals", intervals}};
}

Json to_json(const DiscrepancyReport& r) {
  return Json{{"word", r.word.str()},
              {"frequency", to_json(r.frequency)},
              {"max_len", r.max_len},
              {"window_len", r.window_len},
              {"offsets", int_list(r.offsets)},
              {"max_dev", to_json(r.max_dev)},
              {"c_w_estimate", to_json(r.c_w_estimate)},
              {"max_dev_doubled", to_json(r.max_dev_doubled)},
              {"c_w_doubled", to_json(r.c_w_doubled)},
              {"stabilized", r.stabilized}};
}

Json to_json(const LegalityVerdict& verdict) {
  Json j{{"legal", verdict.legal}};
  if (verdict.violation) {
    const Violation& v = *verdict.violation;
    j["violation"] = {{"kind", v.kind == ViolationKind::zero_run ? "zero_run" : "forbidden_pair"},
                      {"position", v.position}};
    if (v.distance) j["violation"]["distance"] = *v.distance;
  }
  return j;
}

Json to_json(const LemmaVerdict& verdict) {
  Json witnesses = Json::array();
  for (const LemmaWitness& w : verdict.witnesses) {
    witnesses.push_back({{"left", w.left}, {"right", w.right}, {"order", w.order}, {"observed", w.observed}});
  }
  return Json{{"precondition_ok", verdict.precondition_ok},
              {"holds", verdict.holds},
              {"checked", verdict.checked},
              {"witnesses", witnesses}};
}

Json to_json(const InteractionSpec& spec) {
  Json j;
  j["gamma"] = spec.profile.gamma() ? Json(spec.profile.gamma()->to_string()) : Json(nullptr);
  j["lambda"] = to_json(spec.lambda);
  j["beta"] = to_json(spec.beta);
  j["horizon"] = spec.profile.horizon();
  return j;
}

Json to_json(const EnergyBreakdown& e) {
  Json pairs = Json::array();
  for (const PairViolation& p : e.violating_pairs) {
    pairs.push_back({{"left", p.left}, {"right", p.right}, {"distance", p.distance}});
  }
  return Json{{"total", to_json(e.total)},
              {"pair_part", to_json(e.pair_part)},
              {"zero_run_part", to_json(e.zero_run_part)},
              {"violating_pairs", pairs},
              {"violating_runs", e.violating_runs}};
}

Json to_json(const GroundStateResult& g) {
  return Json{{"L", g.length},
              {"min_energy", to_json(g.min_energy)},
              {"argmin", set_list(g.argmin)},
              {"legal_count", g.legal.size()},
              {"min_is_zero", g.min_is_zero},
              {"argmin_is_legal_set", g.argmin_is_legal_set}};
}

Json to_json(const PeriodicDensity& p) {
  return Json{{"lower_bound", to_json(p.lower_bound)},
              {"value_estimate", to_json(p.value_estimate)},
              {"cutoff", p.cutoff}};
}

DistanceProfile profile_from_json(const Json& j) {
  try {
    std::optional<QuadIrrational> gamma;
    if (j.contains("gamma") && !j["gamma"].is_null()) gamma = parse_quad(j["gamma"].get<std::string>());
    return DistanceProfile::from_sets(j.at("d").get<std::vector<std::int64_t>>(), j.at("horizon").get<std::int64_t>(),
                                      j.at("forbidden").get<std::vector<std::int64_t>>(), gamma);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::invalid_argument, std::string("malformed profile: ") + e.what());
  }
}

std::string csv_header_discrepancy() { return "word,frequency_decimal,max_dev,horizon"; }

std::string csv_row(const DiscrepancyReport& r) {
  return r.word.str() + "," + r.frequency.to_decimal(15) + "," + r.max_dev.to_decimal(15) + "," +
         std::to_string(r.max_len);
}

Json report_envelope(Json config, Json results) {
  return Json{{"tool_version", tool_version()}, {"config", std::move(config)}, {"results", std::move(results)}};
}

}  // namespace sturmian
