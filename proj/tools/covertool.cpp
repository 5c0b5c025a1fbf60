#include <algorithm>
#include <cstddef>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "covertool/ass_analysis.hpp"
#include "covertool/cover_ideals.hpp"
#include "covertool/error.hpp"
#include "covertool/hypergraph_ext.hpp"
#include "covertool/report_json.hpp"
#include "covertool/text_format.hpp"

namespace {

using namespace covertool;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitError = 2;

constexpr std::size_t kMaxPower = 6;
constexpr std::size_t kMaxVariables = 12;

struct Options {
  std::string file;
  std::size_t t = 1;
  std::size_t s = 1;
  std::optional<std::size_t> s_max;
  std::size_t n = 0;
  std::size_t m = 0;
  bool predict = false;
  bool dual = false;
  std::string mode = "direct";
  std::string format = "text";
  bool force = false;
};

class CapError : public Error {
 public:
  explicit CapError(const std::string& what) : Error("cap exceeded (override with --force): " + what) {}
};

void check_caps(const Options& opt, std::size_t variables, std::size_t power) {
  if (opt.force) return;
  if (variables > kMaxVariables) {
    throw CapError(std::to_string(variables) + " variables > " + std::to_string(kMaxVariables));
  }
  if (power > kMaxPower) throw CapError("power " + std::to_string(power) + " > " + std::to_string(kMaxPower));
}

bool json_output(const Options& opt) { return opt.format == "json"; }

void print_primes(const std::vector<MonomialPrime>& primes, const Ambient& ambient) {
  for (const auto& p : primes) std::cout << "  " << p.to_string(ambient) << "\n";
}

Graph load_graph(const Options& opt) {
  auto g = read_graph_file(opt.file);
  check_caps(opt, g.num_vertices(), 1);
  return g;
}

bool warn_if_unit(const Options& opt, const Graph& g) {
  if (!partial_cover_ideal(g, opt.t).is_unit()) return false;
  std::cerr << "warning: unit ideal - no constraints (t exceeds all degrees)\n";
  if (json_output(opt)) {
    std::cout << json{{"schema", kReportSchema}, {"graph", graph_json(g)}, {"t", opt.t}, {"unit", true}}.dump(2)
              << "\n";
  } else {
    std::cout << "J_" << opt.t << " = <1>\n";
  }
  return true;
}

int cmd_ideal(const Options& opt) {
  const auto g = load_graph(opt);
  if (warn_if_unit(opt, g)) return kExitOk;
  const auto ideal = partial_cover_ideal(g, opt.t);
  std::optional<MonomialIdeal> dual;
  if (opt.dual) dual = generalized_edge_ideal(g, opt.t);
  if (json_output(opt)) {
    json out{{"schema", kReportSchema}, {"graph", graph_json(g)}, {"t", opt.t}, {"ideal", ideal_json(ideal)}};
    if (dual) out["dual"] = ideal_json(*dual);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << ideal.generator_list() << "\n";
    if (dual) std::cout << "dual: " << dual->generator_list() << "\n";
  }
  return kExitOk;
}

int cmd_ass(const Options& opt) {
  const auto g = load_graph(opt);
  check_caps(opt, g.num_vertices(), opt.s);
  if (opt.predict && !is_tree(g)) throw Error("closed form proven only for trees");
  if (warn_if_unit(opt, g)) return kExitOk;

  const bool localized = opt.mode == "localized";
  const auto report = ass_of_power(g, opt.t, opt.s, localized ? AssMode::kLocalized : AssMode::kDirect);
  bool ok = std::all_of(report.checks.begin(), report.checks.end(), [](const auto& kv) { return kv.second; });

  std::optional<bool> modes_agree;
  if (opt.mode == "both") {
    modes_agree = ass_of_power(g, opt.t, opt.s, AssMode::kLocalized).primes == report.primes;
    ok = ok && *modes_agree;
  }
  std::optional<AssReport> prediction;
  if (opt.predict) {
    prediction = predict_ass_tree(g, opt.t, opt.s);
    ok = ok && prediction->primes == report.primes;
  }

  const auto ambient = report.ambient();
  if (json_output(opt)) {
    auto out = to_json(report);
    if (modes_agree) out["checks"]["modes_agree"] = *modes_agree;
    if (prediction) {
      out["prediction"] = {{"method", to_string(prediction->method)},
                           {"primes", primes_json(prediction->primes, ambient)},
                           {"verdict", prediction->primes == report.primes ? "MATCH" : "MISMATCH"}};
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "Ass(J_" << opt.t << "^" << opt.s << ") [" << to_string(report.method) << "]: " << report.primes.size()
              << " primes\n";
    print_primes(report.primes, ambient);
    for (const auto& note : report.notes) std::cout << "note: " << note << "\n";
    if (modes_agree) std::cout << "direct vs localized: " << (*modes_agree ? "MATCH" : "MISMATCH") << "\n";
    if (prediction) {
      std::cout << "predicted: " << prediction->primes.size() << " primes\n";
      print_primes(prediction->primes, ambient);
      std::cout << (prediction->primes == report.primes ? "MATCH" : "MISMATCH") << "\n";
    }
  }
  return ok ? kExitOk : kExitMismatch;
}

int cmd_stability(const Options& opt) {
  const auto g = load_graph(opt);
  const auto s_max = opt.s_max.value_or(4);
  check_caps(opt, g.num_vertices(), s_max);
  if (warn_if_unit(opt, g)) return kExitOk;
  const auto report = graph_stability(g, opt.t, s_max);
  const bool tree = is_tree(g);
  const bool ok = (!tree || report.persistence_ok) && report.formula_agrees.value_or(true);
  if (json_output(opt)) {
    std::cout << to_json(report, g, opt.t).dump(2) << "\n";
  } else {
    for (std::size_t k = 0; k < report.ass_by_power.size(); ++k) {
      std::cout << "s = " << k + 1 << ": " << report.ass_by_power[k].size() << " primes\n";
      print_primes(report.ass_by_power[k], report.ambient);
    }
    std::cout << "persistence: " << (report.persistence_ok ? "OK" : "VIOLATED");
    if (report.first_violation) std::cout << " (first at s = " << *report.first_violation << ")";
    std::cout << "\n";
    if (report.astab) {
      std::cout << "astab: " << *report.astab << " (" << to_string(report.status) << ")\n";
    } else {
      std::cout << "astab: " << to_string(report.status) << "\n";
    }
    if (report.formula_agrees) {
      std::cout << "tree formula: " << (*report.formula_agrees ? "MATCH" : "MISMATCH") << "\n";
    }
    if (!tree) std::cout << "note: not a tree, astab is uncertified\n";
  }
  return ok ? kExitOk : kExitMismatch;
}

int cmd_witness(const Options& opt) {
  if (opt.n < 1) throw Error("--n is required");
  check_caps(opt, opt.n + 1, opt.s);
  const auto cert = build_star_witness(opt.n, opt.t, opt.s);
  auto verdict = [](bool b) { return b ? "PASS" : "FAIL"; };
  if (json_output(opt)) {
    std::cout << to_json(cert).dump(2) << "\n";
  } else {
    std::cout << "n = " << cert.n << ", t = " << cert.t << ", s = " << cert.s << ", s0 = " << cert.s0
              << ", e = " << cert.e << "\n";
    std::cout << "T = " << cert.witness.to_string(cert.ambient) << "\n";
    if (cert.empty_sequence) std::cout << "note: empty sequence product\n";
    std::cout << "T not in J^s: " << verdict(cert.not_in_power) << "\n";
    std::cout << "J^s : T = " << cert.prime.to_string(cert.ambient) << ": " << verdict(cert.colon_is_prime) << "\n";
    if (cert.annihilator_bound) std::cout << "annihilator divisibility: " << verdict(*cert.annihilator_bound) << "\n";
  }
  return cert.valid() && cert.annihilator_bound.value_or(false) ? kExitOk : kExitMismatch;
}

int cmd_gap(const Options& opt) {
  if (opt.m < 1) throw Error("--m is required");
  const auto report = verify_gap(opt.m, opt.s_max, opt.force);
  if (json_output(opt)) {
    std::cout << to_json(report).dump(2) << "\n";
  } else {
    std::cout << "m = " << report.m << ": chi = " << report.chromatic << ", astab = " << report.astab << "\n";
    std::cout << "oracle astab (s <= " << report.oracle_s_max << "): ";
    if (report.oracle_astab) {
      std::cout << *report.oracle_astab;
    } else {
      std::cout << "not determined";
    }
    std::cout << "\n";
    std::cout << "chi - 1 + m <= astab: " << (report.gap_holds ? "HOLDS" : "FAILS")
              << (report.equality ? " (equality)" : "") << "\n";
    std::cout << "chi - 1 <= astab: " << (report.baseline_holds ? "HOLDS" : "FAILS") << "\n";
  }
  return report.ok() ? kExitOk : kExitMismatch;
}

/// Oracle against closed form (trees) or direct against localized (other graphs)
/// over every t up to the max degree and every s up to s_max.
int cmd_sweep(const Options& opt) {
  const auto g = load_graph(opt);
  const auto s_max = opt.s_max.value_or(3);
  check_caps(opt, g.num_vertices(), s_max);
  const bool tree = is_tree(g);
  bool ok = true;
  json rows = json::array();
  for (std::size_t t = 1; t <= max_degree(g); ++t) {
    for (std::size_t s = 1; s <= s_max; ++s) {
      const auto direct = ass_of_power(g, t, s);
      const auto other = tree ? predict_ass_tree(g, t, s) : ass_of_power(g, t, s, AssMode::kLocalized);
      const bool match = other.primes == direct.primes && direct.checks.at("connected_supports");
      ok = ok && match;
      rows.push_back({{"t", t}, {"s", s}, {"primes", direct.primes.size()}, {"verdict", match ? "MATCH" : "MISMATCH"}});
      if (!json_output(opt)) {
        std::cout << "t = " << t << ", s = " << s << ": " << direct.primes.size() << " primes, "
                  << (match ? "MATCH" : "MISMATCH") << "\n";
      }
    }
  }
  if (json_output(opt)) {
    std::cout << json{{"schema", kReportSchema},
                      {"graph", graph_json(g)},
                      {"s_max", s_max},
                      {"against", tree ? "closed_form" : "localized"},
                      {"cells", std::move(rows)}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << (ok ? "all cells MATCH" : "MISMATCH found") << "\n";
  }
  return ok ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partial t-cover ideals of graphs and the associated primes of their powers"};
  app.require_subcommand(1);
  Options opt;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--force", opt.force, "Lift the default size caps");
  };
  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("file", opt.file, "Graph file")->required();
    sub->add_option("--t", opt.t, "Partial cover parameter")->check(CLI::PositiveNumber);
    add_format(sub);
  };

  auto* ideal = app.add_subcommand("ideal", "Print the minimal generators of J_t(G)");
  add_graph(ideal);
  ideal->add_flag("--dual", opt.dual, "Also print the generalized edge ideal");

  auto* ass = app.add_subcommand("ass", "Associated primes of J_t(G)^s");
  add_graph(ass);
  ass->add_option("--s", opt.s, "Power")->check(CLI::PositiveNumber);
  ass->add_flag("--predict", opt.predict, "Compare against the closed form (trees only)");
  ass->add_option("--mode", opt.mode, "Computation mode")->check(CLI::IsMember({"direct", "localized", "both"}));

  auto* stability = app.add_subcommand("stability", "Ass of powers up to s_max, persistence and astab");
  add_graph(stability);
  stability->add_option("--smax", opt.s_max, "Largest power explored")->check(CLI::PositiveNumber);

  auto* witness = app.add_subcommand("witness", "Witness for the maximal ideal of J_t(K_{1,n})^s");
  witness->add_option("--n", opt.n, "Number of leaves")->required()->check(CLI::PositiveNumber);
  witness->add_option("--t", opt.t, "Partial cover parameter")->check(CLI::PositiveNumber);
  witness->add_option("--s", opt.s, "Power")->check(CLI::PositiveNumber);
  add_format(witness);

  auto* gap = app.add_subcommand("gap", "Chromatic gap for the hypergraph family H_m");
  gap->add_option("--m", opt.m, "Family parameter")->required()->check(CLI::PositiveNumber);
  gap->add_option("--smax", opt.s_max, "Largest power for the oracle confirmation")->check(CLI::PositiveNumber);
  add_format(gap);

  auto* sweep = app.add_subcommand("sweep", "Check every t and s up to s_max against the closed form or localization");
  add_graph(sweep);
  sweep->add_option("--smax", opt.s_max, "Largest power explored")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*ideal) return cmd_ideal(opt);
    if (*ass) return cmd_ass(opt);
    if (*stability) return cmd_stability(opt);
    if (*witness) return cmd_witness(opt);
    if (*gap) return cmd_gap(opt);
    if (*sweep) return cmd_sweep(opt);
  } catch (const ParseError& e) {
    std::cerr << "error: " << opt.file << ": " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
