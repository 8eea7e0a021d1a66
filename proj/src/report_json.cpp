#include "tecc/report_json.hpp"

namespace tecc {

nlohmann::json certificate_to_json(const Certificate& cert) {
    nlohmann::json paths = nlohmann::json::array();
    for (const CertificatePath& p : cert.paths) {
        nlohmann::json edges = nlohmann::json::array();
        for (const CertificateEdge& e : p.edges) edges.push_back({{"id", e.id}, {"virtual", e.is_virtual}});
        paths.push_back({{"vertices", p.vertices}, {"edges", std::move(edges)}, {"tag", std::string(to_string(p.tag))}});
    }
    return paths;
}

nlohmann::json report_to_json(const Multigraph& g, const ThreeEccReport& report, const JsonOptions& options) {
    // connected component index of every vertex, blocks ordered by smallest vertex
    std::vector<std::size_t> cc(g.vertex_count(), 0);
    const auto blocks = connected_components(g);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        for (const Vertex v : blocks[i]) cc[v] = i;
    }

    nlohmann::json components = nlohmann::json::array();
    for (const Component& c : report.components) {
        nlohmann::json jc = {{"members", c.members},
                             {"representative", c.representative},
                             {"connected_component", cc[c.representative]},
                             {"virtual_edge", nullptr}};
        if (c.virtual_edge) jc["virtual_edge"] = {c.virtual_edge->first, c.virtual_edge->second};
        if (options.certificates) {
            jc["certificate"] = c.certificate ? certificate_to_json(*c.certificate) : nlohmann::json(nullptr);
        }
        components.push_back(std::move(jc));
    }

    nlohmann::json bridges = nlohmann::json::array();
    for (const BridgeRecord& b : report.bridges) bridges.push_back({b.upper, b.lower, b.id});

    nlohmann::json out = {{"components", std::move(components)},
                          {"bridges", std::move(bridges)},
                          {"is_three_edge_connected", report.is_three_edge_connected}};
    if (options.cacti) {
        nlohmann::json cacti = nlohmann::json::array();
        for (const Cactus& c : report.cacti) {
            cacti.push_back({{"nodes", c.nodes}, {"cycles", c.cycles}, {"connected_component", cc[c.nodes.front()]}});
        }
        out["cacti"] = std::move(cacti);
    }
    return out;
}

nlohmann::json oracle_to_json(const std::vector<EdgeId>& bridges, const std::vector<EdgePair>& cut_pairs,
                              const std::vector<std::vector<Vertex>>& three_ecc) {
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& [a, b] : cut_pairs) pairs.push_back({a, b});
    return {{"bridges", bridges}, {"cut_pairs", std::move(pairs)}, {"three_ecc", three_ecc}};
}

}  // namespace tecc
