// Acceptance run: one PASS/FAIL line per criterion, each with its wall time
// against a pinned limit. Exit status is the number of failed criteria.
//
// usage: acceptance <path-to-sturmian-cli>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "sturmian/characterization.hpp"
#include "sturmian/discrepancy.hpp"
#include "sturmian/lattice_gas.hpp"
#include "sturmian/order_analysis.hpp"
#include "sturmian/sturmian_gen.hpp"
#include "sturmian/verify.hpp"

using namespace sturmian;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
};

int failures = 0;

void criterion(int id, const std::string& name, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = secs < limit_s;
  const bool ok = out.ok && in_time;
  if (!ok) ++failures;
  std::printf("%s [%2d] %s (%.3f s, limit %.0f s)%s%s\n", ok ? "PASS" : "FAIL", id, name.c_str(), secs, limit_s,
              out.note.empty() ? "" : ": ", out.note.c_str());
  if (!in_time) std::printf("       over the time limit\n");
  std::fflush(stdout);
}

std::string run_capture(const std::string& cmd, int& status) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  status = pclose(pipe);
  return out;
}

const QuadIrrational& fib() {
  static const QuadIrrational g = fibonacci_gamma();
  return g;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <sturmian-cli>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const RotationParams params = RotationParams::make(fib(), QuadIrrational());

  criterion(1, "Fibonacci distance profile", 1, [] {
    const DistanceProfile p = distance_profile(fib(), 25);
    const std::vector<std::int64_t> d8(p.d().begin(), p.d().begin() + std::min<std::size_t>(8, p.d().size()));
    const bool ok = d8 == std::vector<std::int64_t>{2, 5, 7, 10, 13, 15, 18, 20} &&
                    p.forbidden() == std::vector<std::int64_t>{1, 4, 9, 12, 17, 22, 25};
    return Outcome{ok, ok ? "" : "profile mismatch"};
  });

  criterion(2, "rotation coding equals 15-fold substitution", 1, [] {
    const Word s = fibonacci_substitution(15);
    const Word x = generate(RotationParams::make(fib(), fib()), 1, 1597);
    return Outcome{s.size() == 1597 && x == s, std::to_string(s.size()) + " symbols"};
  });

  criterion(3, "complexity n+1 and component intervals, n <= 12", 10, [&] {
    const ComplexityReport r = factor_complexity(params, 12);
    for (std::size_t n = 1; n <= 12; ++n) {
      if (r.p.at(n) != n + 1) return Outcome{false, "p_" + std::to_string(n) + " = " + std::to_string(r.p.at(n))};
      const ComponentIntervals arcs = component_intervals(params, n);
      FactorSet labels;
      for (const auto& c : arcs.intervals) labels.insert(c.word);
      if (arcs.intervals.size() != n + 1 || labels != stable_factor_set(params, n).factors) {
        return Outcome{false, "intervals differ at n = " + std::to_string(n)};
      }
    }
    return Outcome{true, "largest window " + std::to_string(r.window_len)};
  });

  criterion(4, "balance/homogeneity equivalence on 1000 windows + 1000 mutations", 30, [] {
    const EquivalenceStats s = equivalence_trial(fib(), 1000, 500, 20240601);
    std::ostringstream note;
    note << s.windows << " windows (" << s.windows_undecidable << " undecidable), " << s.mutations_decided
         << " decided mutations, " << s.mutations_unbalanced << " unbalanced, " << s.disagreements << " disagreements";
    return Outcome{s.windows == 1000 && s.mutations == 1000 && s.sturmian_failures == 0 && s.disagreements == 0,
                   note.str()};
  });

  criterion(5, "strict boundary condition, |w| <= 6, horizons 1000 vs 2000", 60, [&] {
    // Both the exact maximum deviation and its ceiling must agree between
    // segment lengths up to 1000 and up to 2000.
    std::size_t words = 0;
    for (std::size_t n = 1; n <= 6; ++n) {
      for (const std::string& w : stable_factor_set(params, n).factors) {
        const DiscrepancyReport r = strict_boundary_check(params, Word::parse(w), 1000);
        ++words;
        if (!r.stabilized || r.max_dev != r.max_dev_doubled) return Outcome{false, "deviation changed for " + w};
        if (w == "1" && r.max_dev > QuadIrrational::integer(1)) return Outcome{false, "max_dev for 1 exceeds 1"};
      }
    }
    return Outcome{true, std::to_string(words) + " words, exact maxima identical"};
  });

  criterion(6, "legal central words equal factors; periodic exclusion p <= 12", 60, [&] {
    const DistanceProfile profile = distance_profile(fib(), 200);
    for (std::size_t n = 1; n <= 12; ++n) {
      const StableEnumeration e = enumerate_legal_stable(n, profile);
      if (e.words.size() != n + 1 || e.words != stable_factor_set(params, n).factors) {
        return Outcome{false, "mismatch at n = " + std::to_string(n)};
      }
    }
    std::string found;
    for (std::int64_t p = 1; p <= 12; ++p) {
      const std::int64_t i = periodic_exclusion(p, profile);
      if ((p == 1 && i != 1) || (p == 2 && i != 2)) return Outcome{false, "wrong i for p = " + std::to_string(p)};
      found += (p > 1 ? "," : "") + std::to_string(i);
    }
    return Outcome{true, "i(p) = " + found};
  });

  criterion(7, "ground states are the legal words, L = 2..16", 120, [] {
    const DistanceProfile profile = distance_profile(fib(), 200);
    const InteractionSpec spec = build_interaction(profile);
    for (std::size_t len = 2; len <= 16; ++len) {
      const GroundStateResult g = ground_state_search(len, spec);
      FactorSet direct;
      for (std::uint32_t mask = 0; mask < (1U << len); ++mask) {
        std::string s(len, '0');
        for (std::size_t k = 0; k < len; ++k) {
          if ((mask >> k) & 1U) s[k] = '1';
        }
        if (is_locally_legal(Word::parse(s), profile).legal) direct.insert(s);
      }
      if (!g.min_is_zero || !g.argmin_is_legal_set || g.argmin != direct) {
        return Outcome{false, "L = " + std::to_string(len)};
      }
    }
    return Outcome{true, ""};
  });

  criterion(8, "no periodic ground state, p <= 10", 30, [] {
    const InteractionSpec spec = build_interaction(distance_profile(fib(), 200));
    std::size_t words = 0;
    for (std::size_t p = 1; p <= 10; ++p) {
      for (std::uint32_t mask = 0; mask < (1U << p); ++mask) {
        std::vector<std::uint8_t> bits(p);
        for (std::size_t k = 0; k < p; ++k) bits[k] = (mask >> k) & 1U;
        const PeriodicDensity d = periodic_energy_density(Word(bits), spec, Rational(1, 1'000'000));
        ++words;
        if (d.lower_bound <= 0) return Outcome{false, "zero density for period " + Word(bits).str()};
        if (mask == 0 && d.lower_bound != spec.beta) return Outcome{false, "all-zero density is not beta"};
      }
    }
    return Outcome{true, std::to_string(words) + " periodic words"};
  });

  criterion(9, "pair-count and successor lemmas on length-2000 windows", 10, [] {
    const DistanceProfile profile = distance_profile(fib(), 2000);
    std::size_t checked = 0;
    for (const QuadIrrational& psi : {QuadIrrational(), fib(), QuadIrrational::rational(2, 7)}) {
      const Word w = generate(RotationParams::make(fib(), psi), 0, 1999);
      const LemmaVerdict a = check_fact1(w, profile);
      const LemmaVerdict b = check_fact2(w, profile);
      if (!a.holds || !a.witnesses.empty() || !b.holds || !b.witnesses.empty()) {
        return Outcome{false, "witness found for psi = " + psi.to_string()};
      }
      checked += a.checked + b.checked;
    }
    return Outcome{true, std::to_string(checked) + " instances checked"};
  });

  criterion(10, "verify --suite all is byte-identical across runs", 240, [&] {
    int s1 = 0, s2 = 0;
    const std::string cmd = "\"" + cli + "\" verify --suite all";
    const std::string a = run_capture(cmd, s1);
    const std::string b = run_capture(cmd, s2);
    const bool ok = s1 == 0 && s2 == 0 && !a.empty() && a == b;
    return Outcome{ok, std::to_string(a.size()) + " bytes" + (s1 == 0 ? "" : ", non-zero exit")};
  });

  std::printf("%d criteria failed\n", failures);
  return failures;
}
