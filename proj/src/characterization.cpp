#include "sturmian/characterization.hpp"

#include <algorithm>

#include "sturmian/kernels.hpp"

namespace sturmian {

namespace {

constexpr std::size_t kMaxWitnesses = 8;

kernels::LegalityRules rules_for(const DistanceProfile& profile, std::size_t m) {
  kernels::LegalityRules rules;
  rules.forbidden.assign(m + 1, 0);
  for (std::size_t delta = 1; delta < m; ++delta) {
    rules.forbidden[delta] = profile.is_forbidden(static_cast<std::int64_t>(delta)) ? 1 : 0;
  }
  rules.zero_run_len = static_cast<std::size_t>(profile.d1() + 1);
  return rules;
}

}  // namespace

LegalityVerdict is_locally_legal(const Word& w, const DistanceProfile& profile) {
  if (static_cast<std::int64_t>(w.size()) - 1 > profile.horizon()) {
    throw Error(ErrorKind::insufficient_profile, "word of length " + std::to_string(w.size()) +
                                                     " needs a profile horizon of at least " +
                                                     std::to_string(w.size() - 1));
  }
  const std::vector<std::size_t> ones = w.ones();
  for (std::size_t a = 0; a < ones.size(); ++a) {
    for (std::size_t b = a + 1; b < ones.size(); ++b) {
      const auto distance = static_cast<std::int64_t>(ones[b] - ones[a]);
      if (profile.is_forbidden(distance)) {
        return {false, Violation{ViolationKind::forbidden_pair, ones[a], distance}};
      }
    }
  }
  const auto run_len = static_cast<std::size_t>(profile.d1() + 1);
  std::size_t run = 0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    run = w[k] ? 0 : run + 1;
    if (run == run_len) return {false, Violation{ViolationKind::zero_run, k + 1 - run_len, std::nullopt}};
  }
  return {true, std::nullopt};
}

FactorSet enumerate_legal(std::size_t n, std::size_t m, const DistanceProfile& profile, std::uint64_t node_budget) {
  if (n == 0) throw Error(ErrorKind::invalid_argument, "word length must be >= 1");
  if (m < n) throw Error(ErrorKind::invalid_argument, "M must be at least n");
  if (static_cast<std::int64_t>(m) - 1 > profile.horizon()) {
    throw Error(ErrorKind::insufficient_profile,
                "M = " + std::to_string(m) + " needs a profile horizon of at least " + std::to_string(m - 1));
  }
  try {
    return kernels::omp::legal_centers(n, m, rules_for(profile, m), node_budget).centers;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::budget_exceeded) throw;
    throw Error(ErrorKind::budget_exceeded, std::string(e.what()) + " at M = " + std::to_string(m));
  }
}

StableEnumeration enumerate_legal_stable(std::size_t n, const DistanceProfile& profile, std::size_t m_cap,
                                         std::uint64_t node_budget) {
  DistanceProfile working = profile;
  std::vector<FactorSet> history;
  for (std::size_t m = n + 2; m <= m_cap; m *= 2) {
    if (static_cast<std::int64_t>(m) - 1 > working.horizon()) {
      working = extend_profile(working, std::max<std::int64_t>(2 * working.horizon(), static_cast<std::int64_t>(m)));
    }
    history.push_back(enumerate_legal(n, m, working, node_budget));
    const std::size_t k = history.size();
    if (k >= 3 && history[k - 1] == history[k - 2] && history[k - 2] == history[k - 3]) {
      return {history.back(), m};
    }
  }
  throw Error(ErrorKind::inconclusive, "legal central words of length " + std::to_string(n) +
                                           " did not stabilize below M = " + std::to_string(m_cap));
}

std::int64_t periodic_exclusion(std::int64_t p, const DistanceProfile& profile, std::int64_t horizon_cap) {
  if (p < 1) throw Error(ErrorKind::invalid_argument, "period must be >= 1");
  DistanceProfile working = profile;
  std::int64_t next_i = 1;
  while (true) {
    for (; next_i * p <= working.horizon(); ++next_i) {
      if (working.is_forbidden(next_i * p)) return next_i;
    }
    const std::int64_t grown = std::min(2 * working.horizon(), horizon_cap);
    if (grown <= working.horizon() || !working.gamma()) {
      throw Error(ErrorKind::inconclusive, "no forbidden multiple of " + std::to_string(p) + " up to " +
                                               std::to_string(working.horizon()));
    }
    working = extend_profile(working, grown);
  }
}

LemmaVerdict check_fact1(const Word& w, const DistanceProfile& profile) {
  LemmaVerdict verdict;
  if (!is_locally_legal(w, profile).legal) {
    verdict.precondition_ok = false;
    verdict.holds = false;
    return verdict;
  }
  const std::vector<std::size_t> ones = w.ones();
  for (std::size_t a = 0; a < ones.size(); ++a) {
    for (std::size_t b = a + 1; b < ones.size(); ++b) {
      const auto distance = static_cast<std::int64_t>(ones[b] - ones[a]);
      const auto order = profile.order_of(distance);
      if (!order) continue;
      ++verdict.checked;
      const auto between = static_cast<std::int64_t>(b - a - 1);
      if (between != static_cast<std::int64_t>(*order) - 1) {
        verdict.holds = false;
        if (verdict.witnesses.size() < kMaxWitnesses) verdict.witnesses.push_back({ones[a], ones[b], *order, between});
      }
    }
  }
  return verdict;
}

LemmaVerdict check_fact2(const Word& w, const DistanceProfile& profile, std::optional<std::size_t> max_order) {
  LemmaVerdict verdict;
  if (!is_locally_legal(w, profile).legal) {
    verdict.precondition_ok = false;
    verdict.holds = false;
    return verdict;
  }
  const auto& d = profile.d();
  const std::size_t orders = max_order ? std::min(*max_order, d.size()) : d.size();
  for (std::size_t i : w.ones()) {
    for (std::size_t j = 0; j < orders; ++j) {
      const std::size_t near = i + static_cast<std::size_t>(d[j]);
      if (near + 1 >= w.size()) break;
      ++verdict.checked;
      if (!w[near] && !w[near + 1]) {
        verdict.holds = false;
        if (verdict.witnesses.size() < kMaxWitnesses) verdict.witnesses.push_back({i, near, j + 1, d[j]});
      }
    }
  }
  return verdict;
}

}  // namespace sturmian
