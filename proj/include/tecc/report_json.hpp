#pragma once

#include <json.hpp>

#include "tecc/decomposer.hpp"
#include "tecc/multigraph.hpp"
#include "tecc/oracle.hpp"

namespace tecc {

struct JsonOptions {
    bool certificates = false;
    bool cacti = false;
};

/// Report as JSON with 0-based ids. Object keys come out sorted, so equal
/// reports serialize to identical bytes.
nlohmann::json report_to_json(const Multigraph& g, const ThreeEccReport& report, const JsonOptions& options = {});

nlohmann::json certificate_to_json(const Certificate& cert);

/// {"bridges": [...], "cut_pairs": [[a,b], ...], "three_ecc": [[...], ...]}
nlohmann::json oracle_to_json(const std::vector<EdgeId>& bridges, const std::vector<EdgePair>& cut_pairs,
                              const std::vector<std::vector<Vertex>>& three_ecc);

}  // namespace tecc
