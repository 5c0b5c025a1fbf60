#pragma once

#include <cstddef>

#include "covertool/ass_analysis.hpp"
#include "covertool/cover_ideals.hpp"
#include "covertool/hypergraph_ext.hpp"
#include "json.hpp"

namespace covertool {

/// Version of every JSON document emitted by the CLI (the `schema` field).
inline constexpr int kReportSchema = 1;

nlohmann::json graph_json(const Graph& g);
nlohmann::json primes_json(const std::vector<MonomialPrime>& primes, const Ambient& ambient);
nlohmann::json ideal_json(const MonomialIdeal& ideal);

/// {schema, graph, t, s, method, primes: [[labels]...], checks, notes}
nlohmann::json to_json(const AssReport& report);

/// {schema, graph, t, s_max, powers: [{s, primes}], astab, astab_status, checks}
nlohmann::json to_json(const StabilityReport& report, const Graph& g, std::size_t t);

nlohmann::json to_json(const WitnessCertificate& cert);
nlohmann::json to_json(const GapReport& report);
nlohmann::json to_json(const TreeGeneratorClassification& report);

}  // namespace covertool
