// sturmian: command-line front end.
//
// Exit codes: 0 success, 1 usage error, 2 computation limit or ambiguous
// input, 3 a checked invariant failed.

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "sturmian/characterization.hpp"
#include "sturmian/discrepancy.hpp"
#include "sturmian/lattice_gas.hpp"
#include "sturmian/order_analysis.hpp"
#include "sturmian/serialize.hpp"
#include "sturmian/sturmian_gen.hpp"
#include "sturmian/verify.hpp"

using namespace sturmian;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitLimit = 2;
constexpr int kExitInvariant = 3;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ambiguous_coding:
    case ErrorKind::horizon_exceeded:
    case ErrorKind::inconclusive:
    case ErrorKind::undecidable:
    case ErrorKind::insufficient_profile:
    case ErrorKind::budget_exceeded:
      return kExitLimit;
    case ErrorKind::internal_consistency:
      return kExitInvariant;
    default:
      return kExitUsage;
  }
}

struct Output {
  Json results;
  std::string text;
  std::optional<std::string> csv;  // unset: the command has no tabular form
  int status = kExitOk;
};

struct Globals {
  std::string gamma = "fib";
  std::string psi = "0";
  std::int64_t horizon = 200;
  std::string format = "json";
  std::string out;
  bool strict = false;
  std::string err_bound;
};

// Either an exact gamma or a rational stand-in ("ratio:p/q").
struct GammaChoice {
  std::optional<QuadIrrational> exact;
  std::optional<ApproxRotation> approx;
};

GammaChoice parse_gamma(const Globals& g) {
  GammaChoice choice;
  const std::string prefix = "ratio:";
  if (g.gamma.rfind(prefix, 0) == 0) {
    const Rational r = parse_rational(g.gamma.substr(prefix.size()));
    const BigInt p = boost::multiprecision::numerator(r);
    const BigInt q = boost::multiprecision::denominator(r);
    const Rational err = g.err_bound.empty() ? Rational(BigInt(1), q * q) : parse_rational(g.err_bound);
    choice.approx = ApproxRotation::make(p, q, err);
  } else {
    choice.exact = parse_quad(g.gamma);
  }
  return choice;
}

QuadIrrational exact_gamma(const Globals& g) {
  const GammaChoice c = parse_gamma(g);
  if (!c.exact) throw Error(ErrorKind::unsupported, "this command needs an exact gamma, not ratio:p/q");
  return *c.exact;
}

RotationParams exact_params(const Globals& g) { return RotationParams::make(exact_gamma(g), parse_quad(g.psi)); }

EndpointPolicy policy(const Globals& g) { return g.strict ? EndpointPolicy::strict : EndpointPolicy::half_open; }

std::string join(const std::vector<std::int64_t>& xs) {
  std::string out;
  for (std::size_t k = 0; k < xs.size(); ++k) out += (k ? "," : "") + std::to_string(xs[k]);
  return out;
}

Word window_or_word(const Globals& g, const std::string& word, std::int64_t from, std::int64_t to) {
  if (!word.empty()) return Word::parse(word);
  if (from > to) throw Error(ErrorKind::invalid_argument, "--from must not exceed --to");
  return generate(exact_params(g), from, to, policy(g));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Sturmian sequences, their order invariants, and the lattice gas that selects them"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(tool_version()));

  Globals g;
  app.add_option("--gamma", g.gamma, "Rotation angle: fib | a,b,c,d for (a+b*sqrt(d))/c | ratio:p/q")
      ->capture_default_str();
  app.add_option("--psi", g.psi, "Phase: a,b,c,d or p/q (same quadratic field as gamma)")->capture_default_str();
  app.add_option("--horizon", g.horizon, "Distance horizon for profiles")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}))->capture_default_str();
  app.add_option("--out", g.out, "Write output to FILE instead of stdout");
  app.add_flag("--strict-endpoints", g.strict, "Fail on orbit points that hit an arc endpoint");
  app.add_option("--err-bound", g.err_bound, "Error bound for ratio:p/q (default 1/q^2)");

  Json options = Json::object();
  std::function<Output()> action;

  // generate
  std::int64_t from = 0, to = 0;
  auto* gen = app.add_subcommand("generate", "Print X_psi(from..to)");
  gen->add_option("--from", from)->required();
  gen->add_option("--to", to)->required();
  gen->callback([&] {
    options = {{"from", from}, {"to", to}};
    action = [&] {
      if (from > to) throw Error(ErrorKind::invalid_argument, "--from must not exceed --to");
      const GammaChoice c = parse_gamma(g);
      const Word w = c.exact ? generate(RotationParams::make(*c.exact, parse_quad(g.psi)), from, to, policy(g))
                             : generate_approx(*c.approx, parse_rational(g.psi), from, to);
      std::string csv = "index,symbol\n";
      for (std::size_t k = 0; k < w.size(); ++k) {
        csv += std::to_string(w.origin() + static_cast<std::int64_t>(k)) + "," + std::to_string(w[k]) + "\n";
      }
      return Output{to_json(w), w.str() + "\n", csv};
    };
  });

  // distances
  auto* dist = app.add_subcommand("distances", "Distance profile d_j, allowed and forbidden distances up to --horizon");
  dist->callback([&] {
    action = [&] {
      const DistanceProfile p = distance_profile(exact_gamma(g), g.horizon);
      const StructureReport s = profile_structure(p);
      Json r = to_json(p);
      r["structure"] = to_json(s);
      std::string csv = "j,d_j\n";
      for (std::size_t j = 0; j < p.d().size(); ++j) csv += std::to_string(j + 1) + "," + std::to_string(p.d()[j]) + "\n";
      const std::string text = "d: " + join(p.d()) + "\nforbidden: " + join(p.forbidden()) + "\n";
      return Output{r, text, csv};
    };
  });

  // complexity
  std::size_t n_max = 12;
  auto* cx = app.add_subcommand("complexity", "Factor complexity p_n for n <= --n-max");
  cx->add_option("--n-max", n_max)->capture_default_str()->check(CLI::PositiveNumber);
  cx->callback([&] {
    options = {{"n_max", n_max}};
    action = [&] {
      const ComplexityReport r = factor_complexity(exact_params(g), n_max);
      std::string csv = "n,p_n\n", text;
      for (const auto& [n, p] : r.p) {
        csv += std::to_string(n) + "," + std::to_string(p) + "\n";
        text += "p_" + std::to_string(n) + " = " + std::to_string(p) + "\n";
      }
      return Output{to_json(r), text, csv};
    };
  });

  // balance / homogeneous
  std::string word;
  auto* bal = app.add_subcommand("balance", "Balance verdict for a word or a generated window");
  auto* hom = app.add_subcommand("homogeneous", "Most-homogeneity verdict for a word or a generated window");
  for (auto* sub : {bal, hom}) {
    sub->add_option("--word", word, "0/1 string; otherwise the window [--from, --to] is generated");
    sub->add_option("--from", from)->capture_default_str();
    sub->add_option("--to", to)->capture_default_str();
  }
  bal->callback([&] {
    options = {{"word", word}, {"from", from}, {"to", to}};
    action = [&] {
      const BalanceVerdict v = is_balanced(window_or_word(g, word, from, to));
      return Output{to_json(v), v.balanced ? "balanced\n" : "unbalanced\n", std::nullopt};
    };
  });
  hom->callback([&] {
    options = {{"word", word}, {"from", from}, {"to", to}};
    action = [&] {
      const HomogeneityVerdict v = is_most_homogeneous(window_or_word(g, word, from, to));
      return Output{to_json(v), v.homogeneous ? "most homogeneous\n" : "not most homogeneous\n", std::nullopt};
    };
  });

  // intervals
  std::size_t n = 1;
  auto* iv = app.add_subcommand("intervals", "Arcs of the circle coding each length-n factor");
  iv->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  iv->callback([&] {
    options = {{"n", n}};
    action = [&] {
      const ComponentIntervals arcs = component_intervals(exact_params(g), n);
      std::string csv = "word,left,right,length\n", text;
      for (const auto& c : arcs.intervals) {
        csv += c.word + "," + c.left.to_decimal(15) + "," + c.right.to_decimal(15) + "," + c.length().to_decimal(15) + "\n";
        text += c.word + "  [" + c.left.to_decimal(9) + ", " + c.right.to_decimal(9) + ")  " + c.length().to_decimal(9) + "\n";
      }
      return Output{to_json(arcs), text, csv};
    };
  });

  // frequency
  auto* fq = app.add_subcommand("frequency", "Exact frequency of a word");
  fq->add_option("--word", word)->required();
  fq->callback([&] {
    options = {{"word", word}};
    action = [&] {
      const QuadIrrational f = frequency(exact_params(g), Word::parse(word));
      return Output{Json{{"word", word}, {"frequency", to_json(f)}}, f.to_string() + " ~ " + f.to_decimal(15) + "\n",
                    "word,frequency_exact,frequency_decimal\n" + word + ",\"" + f.to_string() + "\"," + f.to_decimal(15) + "\n"};
    };
  });

  // discrepancy
  std::int64_t max_len = 1000;
  std::size_t max_word_len = 0, trials = 1;
  auto* dc = app.add_subcommand("discrepancy", "Strict boundary condition: segment deviations of word counts");
  dc->add_option("--word", word, "Single word; otherwise every factor up to --max-word-len");
  dc->add_option("--max-word-len", max_word_len)->capture_default_str();
  dc->add_option("--max-len", max_len, "Longest segment; windows have twice this length")->capture_default_str();
  dc->add_option("--trials", trials, "Windows at offsets t*7919")->capture_default_str()->check(CLI::PositiveNumber);
  dc->callback([&] {
    options = {{"word", word}, {"max_word_len", max_word_len}, {"max_len", max_len}, {"trials", trials}};
    action = [&] {
      const RotationParams params = exact_params(g);
      std::vector<std::string> words;
      if (!word.empty()) words.push_back(word);
      for (std::size_t k = 1; k <= max_word_len; ++k) {
        for (const auto& w : stable_factor_set(params, k).factors) words.push_back(w);
      }
      if (words.empty()) throw Error(ErrorKind::invalid_argument, "give --word or --max-word-len");
      Json rows = Json::array();
      std::string csv = csv_header_discrepancy() + "\n", text;
      bool stable = true;
      for (const auto& w : words) {
        const DiscrepancyReport r = strict_boundary_check(params, Word::parse(w), max_len, trials);
        rows.push_back(to_json(r));
        csv += csv_row(r) + "\n";
        text += w + ": max_dev " + r.max_dev.to_decimal(9) + ", C_w " + r.c_w_estimate.str() +
                (r.stabilized ? "" : " (not stable under doubling)") + "\n";
        stable = stable && r.stabilized;
      }
      Output out{rows, text, csv};
      if (!stable) out.status = kExitLimit;
      return out;
    };
  });

  // characterize
  std::size_t m_cap = 512;
  auto* ch = app.add_subcommand("characterize", "Central words of locally legal configurations vs. the factor set");
  ch->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  ch->add_option("--m-cap", m_cap)->capture_default_str();
  ch->callback([&] {
    options = {{"n", n}, {"m_cap", m_cap}};
    action = [&] {
      const RotationParams params = exact_params(g);
      const StableEnumeration e = enumerate_legal_stable(n, distance_profile(params, g.horizon), m_cap);
      const FactorSet factors = stable_factor_set(params, n).factors;
      Json words = Json::array();
      std::string text, csv = "word\n";
      for (const auto& w : e.words) {
        words.push_back(w);
        text += w + "\n";
        csv += w + "\n";
      }
      const bool match = e.words == factors;
      Json r{{"n", n}, {"M_used", e.m_used}, {"legal_words", words}, {"count", e.words.size()}, {"matches_factor_set", match}};
      text += std::to_string(e.words.size()) + " words at M = " + std::to_string(e.m_used) +
              (match ? ", equal to the factor set\n" : ", DIFFERENT from the factor set\n");
      Output out{r, text, csv};
      if (!match) out.status = kExitInvariant;
      return out;
    };
  });

  // exclusion
  std::int64_t period = 1;
  auto* ex = app.add_subcommand("exclusion", "Smallest i with i*p forbidden");
  ex->add_option("--p", period)->required()->check(CLI::PositiveNumber);
  ex->callback([&] {
    options = {{"p", period}};
    action = [&] {
      const std::int64_t i = periodic_exclusion(period, distance_profile(exact_gamma(g), g.horizon));
      return Output{Json{{"p", period}, {"i", i}, {"forbidden_distance", i * period}},
                    "i = " + std::to_string(i) + " (distance " + std::to_string(i * period) + " is forbidden)\n",
                    "p,i\n" + std::to_string(period) + "," + std::to_string(i) + "\n"};
    };
  });

  // energy
  std::string lambda_s = "1/2", beta_s = "1", periodic, tol_s = "1/1000000";
  auto* en = app.add_subcommand("energy", "Lattice-gas energy of a finite word or density of a periodic one");
  en->add_option("--word", word, "Finite word, free boundaries");
  en->add_option("--periodic", periodic, "One period of a bi-infinite periodic configuration");
  en->add_option("--lambda", lambda_s)->capture_default_str();
  en->add_option("--beta", beta_s)->capture_default_str();
  en->add_option("--tail-tol", tol_s)->capture_default_str();
  en->callback([&] {
    options = {{"word", word}, {"periodic", periodic}, {"lambda", lambda_s}, {"beta", beta_s}, {"tail_tol", tol_s}};
    action = [&] {
      if (word.empty() == periodic.empty()) throw Error(ErrorKind::invalid_argument, "give exactly one of --word, --periodic");
      const std::int64_t needed = static_cast<std::int64_t>(std::max(word.size(), periodic.size()));
      const InteractionSpec spec = build_interaction(distance_profile(exact_gamma(g), std::max(g.horizon, needed)),
                                                     parse_rational(lambda_s), parse_rational(beta_s));
      Json r{{"interaction", to_json(spec)}};
      if (!word.empty()) {
        const EnergyBreakdown e = energy_open(Word::parse(word), spec);
        r["word"] = word;
        r["energy"] = to_json(e);
        return Output{r, "E = " + rational_to_string(e.total) + "\n",
                      "word,energy\n" + word + "," + rational_to_string(e.total) + "\n"};
      }
      const PeriodicDensity d = periodic_energy_density(Word::parse(periodic), spec, parse_rational(tol_s));
      r["period_word"] = periodic;
      r["density"] = to_json(d);
      return Output{r, "e >= " + rational_to_string(d.lower_bound) + " (cutoff " + std::to_string(d.cutoff) + ")\n",
                    "period_word,lower_bound,value_estimate,cutoff\n" + periodic + "," + rational_to_string(d.lower_bound) +
                        "," + rational_to_string(d.value_estimate) + "," + std::to_string(d.cutoff) + "\n"};
    };
  });

  // ground-state
  std::size_t length = 0;
  auto* gs = app.add_subcommand("ground-state", "Exhaustive minimum-energy words of length L");
  gs->add_option("--L", length)->required()->check(CLI::Range(1, 24));
  gs->add_option("--lambda", lambda_s)->capture_default_str();
  gs->add_option("--beta", beta_s)->capture_default_str();
  gs->callback([&] {
    options = {{"L", length}, {"lambda", lambda_s}, {"beta", beta_s}};
    action = [&] {
      const InteractionSpec spec =
          build_interaction(distance_profile(exact_gamma(g), std::max<std::int64_t>(g.horizon, static_cast<std::int64_t>(length))),
                            parse_rational(lambda_s), parse_rational(beta_s));
      const GroundStateResult r = ground_state_search(length, spec);
      Json j = to_json(r);
      j["interaction"] = to_json(spec);
      std::string text = "min energy " + rational_to_string(r.min_energy) + ", " + std::to_string(r.argmin.size()) +
                         " ground states" + (r.argmin_is_legal_set ? " (= legal words)" : " (DIFFER from legal words)") + "\n";
      std::string csv = "L,word\n";
      for (const auto& w : r.argmin) {
        text += w + "\n";
        csv += std::to_string(length) + "," + w + "\n";
      }
      Output out{j, text, csv};
      if (!r.min_is_zero || !r.argmin_is_legal_set) out.status = kExitInvariant;
      return out;
    };
  });

  // verify
  std::string suite = "all", profile_file;
  VerifyConfig vcfg;
  auto* vf = app.add_subcommand("verify", "Run an invariant suite; exit 3 on the first failure");
  vf->add_option("--suite", suite)->check(CLI::IsMember({"order", "discrepancy", "characterize", "energy", "all"}))->capture_default_str();
  vf->add_option("--profile", profile_file, "JSON distance profile to use instead of the computed one");
  vf->add_option("--window", vcfg.window)->capture_default_str();
  vf->add_option("--l-max", vcfg.l_max)->capture_default_str()->check(CLI::Range(2, 24));
  vf->add_option("--n-max", vcfg.n_max)->capture_default_str()->check(CLI::PositiveNumber);
  vf->add_option("--seed", vcfg.seed)->capture_default_str();
  vf->callback([&] {
    options = {{"suite", suite}, {"profile", profile_file}};
    action = [&] {
      vcfg.gamma = exact_gamma(g);
      vcfg.psi = parse_quad(g.psi);
      vcfg.horizon = g.horizon;
      if (!profile_file.empty()) {
        std::ifstream in(profile_file);
        if (!in) throw Error(ErrorKind::invalid_argument, "cannot read " + profile_file);
        Json j;
        try {
          j = Json::parse(in);
        } catch (const nlohmann::json::exception& e) {
          throw Error(ErrorKind::invalid_argument, std::string("bad JSON in ") + profile_file + ": " + e.what());
        }
        vcfg.profile_override = profile_from_json(j);
      }
      const VerifyReport report = run_verify(suite, vcfg);
      Json r = report.to_json();
      r["verify_config"] = vcfg.to_json();
      std::string text, csv = "suite,check,passed\n";
      for (const auto& s : report.suites) {
        for (const auto& c : s.checks) {
          text += (c.passed ? "PASS " : "FAIL ") + s.suite + "/" + c.name + "\n";
          csv += s.suite + "," + c.name + "," + (c.passed ? "1" : "0") + "\n";
        }
      }
      if (!report.passed()) text += "first failure: " + report.first_failure().dump() + "\n";
      Output out{r, text, csv};
      if (!report.passed()) out.status = report.limit_hit() ? kExitLimit : kExitInvariant;
      return out;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  Output out;
  try {
    out = action();
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_code_for(e.kind());
  }

  std::string rendered;
  if (g.format == "json") {
    Json config{{"command", command}, {"gamma", g.gamma}, {"psi", g.psi}, {"horizon", g.horizon},
                {"strict_endpoints", g.strict}, {"options", options}};
    if (!g.err_bound.empty()) config["err_bound"] = g.err_bound;
    rendered = report_envelope(config, out.results).dump(2) + "\n";
  } else if (g.format == "csv") {
    if (!out.csv) {
      std::cerr << "error: " << command << " has no CSV form; use --format json or text\n";
      return kExitUsage;
    }
    rendered = *out.csv;
  } else {
    rendered = out.text;
  }

  if (g.out.empty()) {
    std::cout << rendered;
  } else {
    std::ofstream file(g.out, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot write " << g.out << "\n";
      return kExitUsage;
    }
    file << rendered;
  }
  return out.status;
}
