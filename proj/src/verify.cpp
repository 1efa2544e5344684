#include "sturmian/verify.hpp"

#include <functional>
#include <random>

#include "sturmian/characterization.hpp"
#include "sturmian/discrepancy.hpp"
#include "sturmian/lattice_gas.hpp"
#include "sturmian/sturmian_gen.hpp"

namespace sturmian {

namespace {

using CheckFn = std::function<CheckResult()>;

bool is_limit(ErrorKind k) {
  return k == ErrorKind::ambiguous_coding || k == ErrorKind::horizon_exceeded || k == ErrorKind::budget_exceeded ||
         k == ErrorKind::inconclusive;
}

CheckResult run_check(const std::string& name, const CheckFn& fn) {
  try {
    CheckResult r = fn();
    r.name = name;
    return r;
  } catch (const Error& e) {
    CheckResult r;
    r.name = name;
    r.passed = false;
    r.limit_hit = is_limit(e.kind());
    r.detail = {{"error", to_string(e.kind())}, {"message", e.what()}};
    return r;
  }
}

CheckResult pass(Json detail) { return {"", true, false, std::move(detail)}; }
CheckResult fail(Json detail) { return {"", false, false, std::move(detail)}; }

DistanceProfile base_profile(const VerifyConfig& cfg) {
  return cfg.profile_override ? *cfg.profile_override : distance_profile(cfg.gamma, cfg.horizon);
}

/// The profile grown to `horizon` when it knows its gamma; otherwise as is.
DistanceProfile profile_at_least(const DistanceProfile& p, std::int64_t horizon) {
  if (p.horizon() >= horizon || !p.gamma()) return p;
  return extend_profile(p, horizon);
}

bool is_fibonacci(const QuadIrrational& gamma) { return gamma == fibonacci_gamma(); }

Json set_json(const FactorSet& s) {
  Json out = Json::array();
  for (const auto& w : s) out.push_back(w);
  return out;
}

}  // namespace

Json VerifyConfig::to_json() const {
  Json j{{"gamma", gamma.to_string()},
         {"psi", psi.to_string()},
         {"horizon", horizon},
         {"window", window},
         {"l_max", l_max},
         {"n_max", n_max},
         {"equivalence_windows", equivalence_windows},
         {"max_window_len", max_window_len},
         {"discrepancy_word_len", discrepancy_word_len},
         {"discrepancy_max_len", discrepancy_max_len},
         {"density_max_period", density_max_period},
         {"exclusion_max_period", exclusion_max_period},
         {"seed", seed}};
  j["profile_override"] = profile_override ? sturmian::to_json(*profile_override) : Json(nullptr);
  return j;
}

bool SuiteResult::passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

bool VerifyReport::passed() const {
  for (const auto& s : suites) {
    if (!s.passed()) return false;
  }
  return true;
}

bool VerifyReport::limit_hit() const {
  for (const auto& s : suites) {
    for (const auto& c : s.checks) {
      if (c.limit_hit) return true;
    }
  }
  return false;
}

Json VerifyReport::first_failure() const {
  for (const auto& s : suites) {
    for (const auto& c : s.checks) {
      if (!c.passed) return Json{{"suite", s.suite}, {"check", c.name}, {"detail", c.detail}};
    }
  }
  return nullptr;
}

Json VerifyReport::to_json() const {
  Json out{{"passed", passed()}};
  Json suites_json = Json::array();
  for (const auto& s : suites) {
    Json checks = Json::array();
    for (const auto& c : s.checks) {
      checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    suites_json.push_back({{"suite", s.suite}, {"passed", s.passed()}, {"checks", checks}});
  }
  out["suites"] = suites_json;
  out["first_failure"] = first_failure();
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"order", "discrepancy", "characterize", "energy"};
  return names;
}

VerifyReport run_verify(const std::string& suite, const VerifyConfig& cfg) {
  VerifyReport report;
  const bool all = suite == "all";
  bool known = all;
  const std::pair<const char*, SuiteResult (*)(const VerifyConfig&)> table[] = {
      {"order", verify_order},
      {"discrepancy", verify_discrepancy},
      {"characterize", verify_characterize},
      {"energy", verify_energy},
  };
  for (const auto& [name, fn] : table) {
    if (all || suite == name) {
      known = true;
      report.suites.push_back(fn(cfg));
    }
  }
  if (!known) throw Error(ErrorKind::invalid_argument, "unknown suite '" + suite + "'");
  return report;
}

EquivalenceStats equivalence_trial(const QuadIrrational& gamma, std::size_t count, std::size_t max_len,
                                   std::uint64_t seed) {
  if (max_len < 2) throw Error(ErrorKind::invalid_argument, "windows need length >= 2");
  std::mt19937_64 rng(seed);
  auto uniform = [&rng](std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  };
  constexpr std::int64_t kDen = 1'000'003;

  EquivalenceStats stats;
  for (std::size_t t = 0; t < count; ++t) {
    // psi = frac(u/kDen + s*gamma); every tenth window sits on the orbit of 0.
    const std::int64_t u = t % 10 == 0 ? 0 : uniform(1, kDen - 1);
    const std::int64_t s = uniform(-50, 50);
    const QuadIrrational psi = frac(QuadIrrational::rational(u, kDen) + gamma * BigInt(s));
    const RotationParams params = RotationParams::make(gamma, psi);
    const auto len = uniform(2, static_cast<std::int64_t>(max_len));
    const auto from = uniform(-10'000, 10'000);
    const Word w = generate(params, from, from + len - 1);

    ++stats.windows;
    const bool balanced = is_balanced(w).balanced;
    bool homogeneous = true;
    try {
      homogeneous = is_most_homogeneous(w).homogeneous;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::undecidable) throw;
      ++stats.windows_undecidable;
    }
    if (!balanced || !homogeneous) {
      ++stats.sturmian_failures;
      if (stats.first_counterexample.is_null()) {
        stats.first_counterexample = {{"kind", "sturmian_window"}, {"psi", psi.to_string()},
                                      {"word", sturmian::to_json(w)}, {"balanced", balanced},
                                      {"homogeneous", homogeneous}};
      }
    }

    std::vector<std::uint8_t> bits = w.symbols();
    const auto flip = static_cast<std::size_t>(uniform(0, len - 1));
    bits[flip] ^= 1U;
    const Word m(std::move(bits), w.origin());
    ++stats.mutations;
    const BalanceVerdict mb = is_balanced(m);
    if (!mb.balanced) ++stats.mutations_unbalanced;
    try {
      const HomogeneityVerdict mh = is_most_homogeneous(m);
      ++stats.mutations_decided;
      if (mh.homogeneous != mb.balanced) {
        ++stats.disagreements;
        if (stats.first_counterexample.is_null()) {
          stats.first_counterexample = {{"kind", "mutation"}, {"word", m.str()}, {"balance", sturmian::to_json(mb)},
                                        {"homogeneity", sturmian::to_json(mh)}};
        }
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::undecidable) throw;
    }
  }
  return stats;
}

SuiteResult verify_order(const VerifyConfig& cfg) {
  SuiteResult suite{"order", {}};
  const RotationParams params = RotationParams::make(cfg.gamma, cfg.psi);
  const DistanceProfile profile = base_profile(cfg);
  const bool fib = is_fibonacci(cfg.gamma);

  suite.checks.push_back(run_check("complexity_n_plus_1", [&] {
    const ComplexityReport r = factor_complexity(params, cfg.n_max);
    for (const auto& [n, p] : r.p) {
      if (p != n + 1) return fail({{"n", n}, {"p_n", p}, {"report", to_json(r)}});
    }
    return pass(to_json(r));
  }));

  suite.checks.push_back(run_check("long_window_balanced_and_homogeneous", [&] {
    const Word w = generate(params, 0, static_cast<std::int64_t>(cfg.window) - 1);
    const BalanceVerdict b = is_balanced(w);
    const HomogeneityVerdict h = is_most_homogeneous(w);
    Json detail{{"window", cfg.window}, {"balance", to_json(b)}, {"homogeneity", to_json(h)}};
    if (!b.balanced || !h.homogeneous) return fail(detail);
    detail["homogeneity"].erase("gap_floor");
    return pass(detail);
  }));

  suite.checks.push_back(run_check("profile_matches_rotation", [&] {
    const DistanceProfile fresh = distance_profile(cfg.gamma, profile.horizon());
    if (fresh.d() != profile.d() || fresh.forbidden() != profile.forbidden()) {
      return fail({{"expected", to_json(fresh)}, {"given", to_json(profile)}});
    }
    return pass({{"horizon", profile.horizon()}, {"d_count", profile.d().size()}});
  }));

  suite.checks.push_back(run_check("profile_structure", [&] {
    if (auto why = profile.structure_violation()) return fail({{"violation", *why}});
    const StructureReport r = profile_structure(profile);
    return pass({{"block_sizes", r.block_sizes}, {"neighbour_rule_checked", r.neighbour_rule_checked}});
  }));

  suite.checks.push_back(run_check("increments_take_both_values", [&] {
    const auto& d = profile.d();
    const std::int64_t d1 = profile.d1();
    bool small = false;
    bool large = false;
    for (std::size_t j = 1; j < d.size(); ++j) {
      const std::int64_t step = d[j] - d[j - 1];
      if (step == d1) small = true;
      else if (step == d1 + 1) large = true;
      else return fail({{"j", j + 1}, {"increment", step}, {"d1", d1}});
    }
    Json detail{{"d1", d1}, {"has_d1", small}, {"has_d1_plus_1", large}};
    return small && large ? pass(detail) : fail(detail);
  }));

  suite.checks.push_back(run_check("d_j_general_formula", [&] {
    const QuadIrrational slope = (QuadIrrational::integer(1) - cfg.gamma).reciprocal();
    const auto& d = profile.d();
    for (std::size_t j = 1; j <= d.size(); ++j) {
      const BigInt expected = qi_floor(slope * BigInt(j));
      if (expected != d[j - 1]) return fail({{"j", j}, {"d_j", d[j - 1]}, {"floor_j_over_1_minus_gamma", expected.str()}});
    }
    return pass({{"checked", d.size()}});
  }));

  if (fib) {
    suite.checks.push_back(run_check("d_j_fibonacci_formula", [&] {
      const QuadIrrational slope = QuadIrrational::integer(2) + cfg.gamma;
      const auto& d = profile.d();
      for (std::size_t j = 1; j <= d.size(); ++j) {
        const BigInt expected = qi_floor(slope * BigInt(j));
        if (expected != d[j - 1]) return fail({{"j", j}, {"d_j", d[j - 1]}, {"floor_j_2_plus_gamma", expected.str()}});
      }
      return pass({{"checked", d.size()}});
    }));
  }

  suite.checks.push_back(run_check("isolated_ones_and_short_zero_runs", [&] {
    const Word w = generate(params, 0, static_cast<std::int64_t>(cfg.window) - 1);
    const std::string s = w.str();
    const std::string long_run(static_cast<std::size_t>(profile.d1() + 1), '0');
    const auto pos11 = s.find("11");
    const auto pos_run = s.find(long_run);
    Json detail{{"window", cfg.window}, {"forbidden_run", long_run}};
    if (pos11 != std::string::npos) detail["first_11"] = pos11;
    if (pos_run != std::string::npos) detail["first_long_run"] = pos_run;
    return pos11 == std::string::npos && pos_run == std::string::npos ? pass(detail) : fail(detail);
  }));

  suite.checks.push_back(run_check("balance_homogeneity_equivalence", [&] {
    const EquivalenceStats st = equivalence_trial(cfg.gamma, cfg.equivalence_windows, cfg.max_window_len, cfg.seed);
    Json detail{{"windows", st.windows},
                {"windows_undecidable", st.windows_undecidable},
                {"sturmian_failures", st.sturmian_failures},
                {"mutations", st.mutations},
                {"mutations_decided", st.mutations_decided},
                {"mutations_unbalanced", st.mutations_unbalanced},
                {"disagreements", st.disagreements},
                {"first_counterexample", st.first_counterexample}};
    return st.sturmian_failures == 0 && st.disagreements == 0 ? pass(detail) : fail(detail);
  }));

  return suite;
}

SuiteResult verify_discrepancy(const VerifyConfig& cfg) {
  SuiteResult suite{"discrepancy", {}};
  const RotationParams params = RotationParams::make(cfg.gamma, cfg.psi);

  suite.checks.push_back(run_check("intervals_equal_factor_sets", [&] {
    Json counts = Json::object();
    for (std::size_t n = 1; n <= cfg.n_max; ++n) {
      const ComponentIntervals arcs = component_intervals(params, n);
      FactorSet labels;
      for (const auto& c : arcs.intervals) labels.insert(c.word);
      const FactorSet factors = stable_factor_set(params, n).factors;
      if (arcs.intervals.size() != n + 1 || labels != factors) {
        return fail({{"n", n}, {"interval_words", set_json(labels)}, {"factors", set_json(factors)}});
      }
      counts[std::to_string(n)] = arcs.intervals.size();
    }
    return pass({{"interval_counts", counts}});
  }));

  suite.checks.push_back(run_check("frequency_additivity_and_sum", [&] {
    std::size_t checked = 0;
    for (std::size_t n = 1; n <= cfg.n_max; ++n) {
      const ComponentIntervals arcs = component_intervals(params, n);
      QuadIrrational total;
      for (const auto& c : arcs.intervals) total = total + c.length();
      if (total != QuadIrrational::integer(1)) return fail({{"n", n}, {"sum", to_json(total)}});
      if (n == cfg.n_max) break;
      const ComponentIntervals longer = component_intervals(params, n + 1);
      for (const auto& c : arcs.intervals) {
        QuadIrrational ext;
        for (const char a : {'0', '1'}) {
          if (const auto* e = longer.find(c.word + a)) ext = ext + e->length();
        }
        ++checked;
        if (ext != c.length()) {
          return fail({{"word", c.word}, {"frequency", to_json(c.length())}, {"extensions", to_json(ext)}});
        }
      }
    }
    return pass({{"words_checked", checked}});
  }));

  suite.checks.push_back(run_check("strict_boundary_condition", [&] {
    Json rows = Json::array();
    for (std::size_t n = 1; n <= cfg.discrepancy_word_len; ++n) {
      for (const std::string& w : stable_factor_set(params, n).factors) {
        const DiscrepancyReport r = strict_boundary_check(params, Word::parse(w), cfg.discrepancy_max_len);
        if (!r.stabilized) return fail(to_json(r));
        if (w == "1" && r.max_dev > QuadIrrational::integer(1)) return fail(to_json(r));
        rows.push_back({{"word", w}, {"max_dev", r.max_dev.to_decimal(12)}, {"c_w", r.c_w_estimate.str()}});
      }
    }
    return pass({{"max_len", cfg.discrepancy_max_len}, {"words", rows}});
  }));

  return suite;
}

SuiteResult verify_characterize(const VerifyConfig& cfg) {
  SuiteResult suite{"characterize", {}};
  const RotationParams params = RotationParams::make(cfg.gamma, cfg.psi);
  const DistanceProfile profile = base_profile(cfg);

  suite.checks.push_back(run_check("legal_words_equal_factor_sets", [&] {
    Json used = Json::object();
    for (std::size_t n = 1; n <= cfg.n_max; ++n) {
      const StableEnumeration e = enumerate_legal_stable(n, profile);
      const FactorSet factors = stable_factor_set(params, n).factors;
      if (e.words.size() != n + 1 || e.words != factors) {
        return fail({{"n", n}, {"M_used", e.m_used}, {"legal_words", set_json(e.words)}, {"factors", set_json(factors)}});
      }
      used[std::to_string(n)] = e.m_used;
    }
    return pass({{"M_used", used}});
  }));

  suite.checks.push_back(run_check("periodic_exclusion", [&] {
    Json found = Json::object();
    for (std::int64_t p = 1; p <= cfg.exclusion_max_period; ++p) {
      found[std::to_string(p)] = periodic_exclusion(p, profile);
    }
    return pass({{"first_forbidden_multiple", found}});
  }));

  suite.checks.push_back(run_check("periodic_words_illegal", [&] {
    std::size_t checked = 0;
    for (std::size_t p = 1; p <= cfg.density_max_period; ++p) {
      const std::int64_t i = periodic_exclusion(static_cast<std::int64_t>(p), profile);
      // Long enough to contain both ends of the forbidden pair and a full
      // zero run, whatever the phase.
      const auto len = static_cast<std::size_t>(std::max<std::int64_t>(2 * i * static_cast<std::int64_t>(p),
                                                                       profile.d1() + 1));
      const DistanceProfile grown = profile_at_least(profile, static_cast<std::int64_t>(len) - 1);
      for (std::uint32_t mask = 0; mask < (1U << p); ++mask) {
        std::vector<std::uint8_t> bits(len);
        for (std::size_t k = 0; k < len; ++k) bits[k] = (mask >> (k % p)) & 1U;
        const Word w(std::move(bits));
        ++checked;
        if (is_locally_legal(w, grown).legal) return fail({{"period", p}, {"word", w.str()}});
      }
    }
    return pass({{"words_checked", checked}});
  }));

  const auto lemma_check = [&](bool second) {
    const Word w = generate(params, 0, static_cast<std::int64_t>(cfg.window) - 1);
    const DistanceProfile grown = profile_at_least(profile, static_cast<std::int64_t>(cfg.window) - 1);
    const LemmaVerdict v = second ? check_fact2(w, grown) : check_fact1(w, grown);
    Json detail = to_json(v);
    detail["window"] = cfg.window;
    return v.holds && v.witnesses.empty() ? pass(detail) : fail(detail);
  };
  suite.checks.push_back(run_check("pair_count_lemma", [&] { return lemma_check(false); }));
  suite.checks.push_back(run_check("successor_lemma", [&] { return lemma_check(true); }));

  return suite;
}

SuiteResult verify_energy(const VerifyConfig& cfg) {
  SuiteResult suite{"energy", {}};
  const DistanceProfile profile = profile_at_least(base_profile(cfg), static_cast<std::int64_t>(cfg.l_max));
  const InteractionSpec spec = build_interaction(profile);

  suite.checks.push_back(run_check("ground_states_are_legal_words", [&] {
    Json counts = Json::object();
    for (std::size_t len = 2; len <= cfg.l_max; ++len) {
      const GroundStateResult g = ground_state_search(len, spec);
      // Zero energy <=> legal, word by word, against the direct checker.
      FactorSet legal_direct;
      for (std::uint32_t mask = 0; mask < (1U << len); ++mask) {
        std::string s(len, '0');
        for (std::size_t k = 0; k < len; ++k) {
          if ((mask >> k) & 1U) s[k] = '1';
        }
        if (is_locally_legal(Word::parse(s), profile).legal) legal_direct.insert(s);
      }
      if (!g.min_is_zero || !g.argmin_is_legal_set || g.argmin != legal_direct) {
        Json detail = to_json(g);
        detail["legal"] = set_json(g.legal);
        detail["legal_direct"] = set_json(legal_direct);
        return fail(detail);
      }
      counts[std::to_string(len)] = g.argmin.size();
    }
    return pass({{"interaction", to_json(spec)}, {"ground_state_counts", counts}});
  }));

  suite.checks.push_back(run_check("no_periodic_ground_state", [&] {
    const Rational tol(1, 1'000'000);
    Rational smallest = -1;
    std::string smallest_word;
    std::size_t checked = 0;
    for (std::size_t p = 1; p <= cfg.density_max_period; ++p) {
      for (std::uint32_t mask = 0; mask < (1U << p); ++mask) {
        std::vector<std::uint8_t> bits(p);
        for (std::size_t k = 0; k < p; ++k) bits[k] = (mask >> k) & 1U;
        const Word w(std::move(bits));
        const PeriodicDensity d = periodic_energy_density(w, spec, tol);
        ++checked;
        if (d.lower_bound <= 0 || (mask == 0 && d.lower_bound != spec.beta)) {
          return fail({{"word", w.str()}, {"density", to_json(d)}});
        }
        if (smallest < 0 || d.lower_bound < smallest) {
          smallest = d.lower_bound;
          smallest_word = w.str();
        }
      }
    }
    return pass({{"words_checked", checked}, {"smallest_lower_bound", to_json(smallest)},
                 {"smallest_word", smallest_word}});
  }));

  suite.checks.push_back(run_check("ground_states_independent_of_lambda", [&] {
    const InteractionSpec other = build_interaction(profile, Rational(1, 4), Rational(3, 2));
    const std::size_t top = std::min<std::size_t>(cfg.l_max, 12);
    for (std::size_t len = 2; len <= top; ++len) {
      const GroundStateResult a = ground_state_search(len, spec);
      const GroundStateResult b = ground_state_search(len, other);
      if (a.argmin != b.argmin || !b.min_is_zero) {
        return fail({{"L", len}, {"default", to_json(a)}, {"alternative", to_json(b)}});
      }
    }
    return pass({{"lengths", top - 1}, {"alternative", to_json(other)}});
  }));

  return suite;
}

}  // namespace sturmian
