#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "tecc/decomposer.hpp"
#include "tecc/multigraph.hpp"
#include "tecc/oracle.hpp"
#include "tecc/random_graph.hpp"
#include "tecc/report_json.hpp"
#include "tecc/verifier.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitVerify = 3;
constexpr int kExitGuard = 4;
constexpr std::size_t kVerifyOracleMaxN = 12;
constexpr std::size_t kDefaultOracleGuard = 14;

struct Loaded {
    tecc::ParsedGraph parsed;
    int status = 0;
};

Loaded load(const std::string& path) {
    Loaded out;
    try {
        if (path == "-") {
            out.parsed = tecc::parse_graph(std::cin);
        } else {
            std::ifstream in(path, std::ios::binary);
            if (!in) {
                std::cerr << "error: cannot open " << path << "\n";
                out.status = 1;
                return out;
            }
            out.parsed = tecc::parse_graph(in);
        }
    } catch (const tecc::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        out.status = kExitParse;
    }
    return out;
}

std::size_t oracle_guard() {
    if (const char* env = std::getenv("TECC_ORACLE_MAX_N")) {
        try {
            return static_cast<std::size_t>(std::stoull(env));
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring malformed TECC_ORACLE_MAX_N\n";
        }
    }
    return kDefaultOracleGuard;
}

void print_list(std::ostream& os, const std::vector<tecc::Vertex>& xs) {
    os << "{";
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? " " : "") << xs[i];
    os << "}";
}

void print_text(std::ostream& os, const tecc::Multigraph& g, const tecc::ThreeEccReport& r, bool certify,
                bool cactus) {
    os << "vertices " << g.vertex_count() << " edges " << g.edge_count() << "\n";
    os << "components " << r.components.size() << "\n";
    for (const tecc::Component& c : r.components) {
        os << "  ";
        print_list(os, c.members);
        os << " rep " << c.representative;
        if (c.virtual_edge) os << " virtual (" << c.virtual_edge->first << "," << c.virtual_edge->second << ")";
        os << "\n";
        if (certify && c.certificate) {
            for (const tecc::CertificatePath& p : c.certificate->paths) {
                os << "    " << tecc::to_string(p.tag) << " " << p.vertices.front();
                for (std::size_t i = 0; i < p.edges.size(); ++i) {
                    os << (p.edges[i].is_virtual ? " ~v" : " -e") << p.edges[i].id << "- " << p.vertices[i + 1];
                }
                os << "\n";
            }
        }
    }
    os << "bridges " << r.bridges.size() << "\n";
    for (const tecc::BridgeRecord& b : r.bridges) os << "  (" << b.upper << "," << b.lower << ") id " << b.id << "\n";
    if (cactus) {
        os << "cacti " << r.cacti.size() << "\n";
        for (const tecc::Cactus& c : r.cacti) {
            os << "  nodes ";
            print_list(os, c.nodes);
            os << " cycles " << c.cycles.size() << "\n";
            for (const auto& cyc : c.cycles) {
                os << "    ";
                print_list(os, cyc);
                os << "\n";
            }
        }
    }
    os << "is_three_edge_connected " << (r.is_three_edge_connected ? "true" : "false") << "\n";
}

int cmd_decompose(const std::string& file, bool json, bool certify, bool cactus, bool verify) {
    Loaded in = load(file);
    if (in.status != 0) return in.status;
    const tecc::Multigraph& g = in.parsed.graph;
    const tecc::ThreeEccReport report = tecc::decompose_graph(g);

    std::optional<tecc::Verdict> verdict;
    if (verify) verdict = tecc::verify_report(g, report, {kVerifyOracleMaxN});

    if (json) {
        nlohmann::json out = tecc::report_to_json(g, report, {certify, cactus});
        out["normalization"] = {{"removed_self_loops", in.parsed.log.removed_self_loops},
                                {"isolated_vertices", in.parsed.log.isolated_vertices}};
        if (verdict) out["verification"] = {{"ok", verdict->ok()}, {"failures", verdict->failures}};
        std::cout << out.dump(2) << "\n";
    } else {
        if (in.parsed.log.removed_self_loops > 0) {
            std::cout << "removed self-loops " << in.parsed.log.removed_self_loops << "\n";
        }
        print_text(std::cout, g, report, certify, cactus);
        if (verdict) std::cout << "verification " << (verdict->ok() ? "ok" : "FAILED") << "\n";
    }
    if (verdict && !verdict->ok()) {
        for (const std::string& f : verdict->failures) std::cerr << "verify: " << f << "\n";
        return kExitVerify;
    }
    return 0;
}

int cmd_gen_random(std::size_t n, std::size_t m, std::uint64_t seed, bool connected, const std::string& output) {
    tecc::Multigraph g;
    try {
        g = connected ? tecc::gen_random_connected(n, m, seed) : tecc::gen_random(n, m, seed);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    std::ostringstream header;
    header << "c gen-random n=" << n << " m=" << m << " seed=" << seed << (connected ? " connected" : "") << "\n";
    const std::string text = header.str() + tecc::serialize_graph(g);
    if (output.empty() || output == "-") {
        std::cout << text;
        return 0;
    }
    std::ofstream out(output, std::ios::binary);
    if (!out || !(out << text)) {
        std::cerr << "error: cannot write " << output << "\n";
        return 1;
    }
    return 0;
}

int cmd_oracle(const std::string& file) {
    Loaded in = load(file);
    if (in.status != 0) return in.status;
    const tecc::Multigraph& g = in.parsed.graph;
    const std::size_t guard = oracle_guard();
    if (g.vertex_count() > guard) {
        std::cerr << "error: oracle refuses n=" << g.vertex_count() << " (limit " << guard
                  << ", raise with TECC_ORACLE_MAX_N)\n";
        return kExitGuard;
    }
    const nlohmann::json out = tecc::oracle_to_json(tecc::bridges_bf(g), tecc::cut_pairs_bf(g), tecc::three_ecc_bf(g));
    std::cout << out.dump() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certifying 3-edge-connected components, bridges and cut-pair cacti"};
    app.require_subcommand(1);

    std::string file;
    bool json = false;
    bool certify = false;
    bool cactus = false;
    bool verify = false;
    CLI::App* dec = app.add_subcommand("decompose", "Decompose a graph file ('-' reads stdin)");
    dec->add_option("file", file, "Input graph")->required();
    dec->add_flag("--json", json, "Emit JSON");
    dec->add_flag("--certify", certify, "Include Mader construction sequences");
    dec->add_flag("--cactus", cactus, "Include the cut-pair cactus of every 2-edge-connected component");
    dec->add_flag("--verify", verify, "Check the report; exit 3 on failure");

    std::size_t n = 0;
    std::size_t m = 0;
    std::uint64_t seed = 1;
    bool connected = false;
    std::string output;
    CLI::App* gen = app.add_subcommand("gen-random", "Write a seeded random multigraph");
    gen->add_option("-n,--vertices", n, "Vertex count")->required();
    gen->add_option("-m,--edges", m, "Edge count")->required();
    gen->add_option("-s,--seed", seed, "PRNG seed");
    gen->add_flag("--connected", connected, "Start from a random spanning tree");
    gen->add_option("-o,--output", output, "Output file (default stdout)");

    std::string oracle_file;
    CLI::App* orc = app.add_subcommand("oracle", "Brute-force bridges, cut-pairs and 3-edge-connected classes");
    orc->add_option("file", oracle_file, "Input graph")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    if (dec->parsed()) return cmd_decompose(file, json, certify, cactus, verify);
    if (gen->parsed()) return cmd_gen_random(n, m, seed, connected, output);
    return cmd_oracle(oracle_file);
}
