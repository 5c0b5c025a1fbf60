#include "covertool/report_json.hpp"

namespace covertool {

using nlohmann::json;

json graph_json(const Graph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({g.label(u), g.label(v)});
  return {{"vertices", g.vertices()}, {"edges", std::move(edges)}};
}

json primes_json(const std::vector<MonomialPrime>& primes, const Ambient& ambient) {
  json out = json::array();
  for (const auto& p : primes) out.push_back(p.labels(ambient));
  return out;
}

json ideal_json(const MonomialIdeal& ideal) {
  json gens = json::array();
  for (const auto& g : ideal.generators()) gens.push_back(g.to_string(ideal.ambient()));
  return {{"variables", ideal.ambient().names()},
          {"generators", std::move(gens)},
          {"unit", ideal.is_unit()}};
}

json to_json(const AssReport& report) {
  return {{"schema", kReportSchema},
          {"graph", graph_json(report.graph)},
          {"t", report.t},
          {"s", report.s},
          {"method", to_string(report.method)},
          {"primes", primes_json(report.primes, report.ambient())},
          {"checks", report.checks},
          {"notes", report.notes}};
}

json to_json(const StabilityReport& report, const Graph& g, std::size_t t) {
  json powers = json::array();
  for (std::size_t k = 0; k < report.ass_by_power.size(); ++k) {
    powers.push_back({{"s", k + 1}, {"primes", primes_json(report.ass_by_power[k], report.ambient)}});
  }
  json checks = {{"persistence", report.persistence_ok}};
  if (report.formula_agrees) checks["formula_agrees"] = *report.formula_agrees;
  return {{"schema", kReportSchema},
          {"graph", graph_json(g)},
          {"t", t},
          {"s_max", report.s_max},
          {"powers", std::move(powers)},
          {"astab", report.astab ? json(*report.astab) : json(nullptr)},
          {"empirical_astab", report.empirical_astab ? json(*report.empirical_astab) : json(nullptr)},
          {"astab_status", to_string(report.status)},
          {"first_violation", report.first_violation ? json(*report.first_violation) : json(nullptr)},
          {"checks", std::move(checks)}};
}

json to_json(const WitnessCertificate& cert) {
  json checks = {{"not_in_power", cert.not_in_power}, {"colon_is_maximal", cert.colon_is_prime}};
  if (cert.annihilator_bound) checks["annihilator_divisibility"] = *cert.annihilator_bound;
  return {{"schema", kReportSchema},
          {"n", cert.n},
          {"t", cert.t},
          {"s", cert.s},
          {"s0", cert.s0},
          {"e", cert.e},
          {"witness", cert.witness.to_string(cert.ambient)},
          {"prime", cert.prime.labels(cert.ambient)},
          {"empty_sequence", cert.empty_sequence},
          {"checks", std::move(checks)}};
}

json to_json(const GapReport& report) {
  return {{"schema", kReportSchema},
          {"m", report.m},
          {"chromatic_number", report.chromatic},
          {"astab", report.astab},
          {"oracle_astab", report.oracle_astab ? json(*report.oracle_astab) : json(nullptr)},
          {"oracle_s_max", report.oracle_s_max},
          {"checks",
           {{"cover_ideal_matches_star", report.cover_ideal_matches_star},
            {"oracle_agrees", report.oracle_agrees},
            {"gap", report.gap_holds},
            {"baseline", report.baseline_holds},
            {"equality", report.equality}}}};
}

json to_json(const TreeGeneratorClassification& report) {
  json gens = json::array();
  for (const auto& g : report.generators) {
    gens.push_back({{"generator", g.generator.to_string(report.ideal.ambient())},
                    {"frame_divisors", g.frame_divisors},
                    {"form", to_string(g.form)}});
  }
  return {{"schema", kReportSchema},
          {"special_vertex", report.frame.vertex},
          {"neighbors", report.ys},
          {"t", report.t},
          {"generators", std::move(gens)}};
}

}  // namespace covertool
