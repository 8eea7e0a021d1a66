// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "graphs.hpp"
#include "tecc/decomposer.hpp"
#include "tecc/dfs_ear.hpp"
#include "tecc/oracle.hpp"
#include "tecc/random_graph.hpp"
#include "tecc/verifier.hpp"

using namespace tecc;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    std::vector<std::string> problems;

    void fail(const std::string& what) {
        pass = false;
        if (problems.size() < 8) problems.push_back(what);
    }
};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Sample {
    std::string name;
    Multigraph graph;
};

std::vector<Sample> oracle_suite() {
    std::vector<Sample> out;
    for (auto& [name, g] : testing::golden_suite()) out.push_back({name, std::move(g)});
    for (std::uint64_t seed = 1; seed <= 500; ++seed) {
        const std::size_t n = 2 + seed % 9;
        const std::size_t m = 1 + (seed * 7919) % 24;
        out.push_back({"random seed " + std::to_string(seed), gen_random(n, m, seed)});
    }
    return out;
}

// phi[v] = representative of v's component
std::vector<Vertex> phi_of(const Multigraph& g, const ThreeEccReport& r) {
    std::vector<Vertex> phi(g.vertex_count(), kNoVertex);
    for (const Component& c : r.components) {
        for (const Vertex v : c.members) phi[v] = c.representative;
    }
    return phi;
}

std::vector<Vertex> block_of(const Multigraph& g, const Cactus& cactus, const std::vector<Vertex>& phi) {
    std::vector<Vertex> block;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (std::binary_search(cactus.nodes.begin(), cactus.nodes.end(), phi[v])) block.push_back(v);
    }
    return block;
}

// ---------------------------------------------------------------------------

Outcome oracle_equivalence() {
    Outcome o;
    const auto t0 = Clock::now();
    const auto suite = oracle_suite();
    for (const Sample& s : suite) {
        const Multigraph& g = s.graph;
        const ThreeEccReport r = decompose_graph(g);

        std::vector<std::vector<Vertex>> got;
        for (const Component& c : r.components) got.push_back(c.members);
        if (got != three_ecc_bf(g)) o.fail(s.name + ": partition");

        std::vector<EdgeId> bridges;
        for (const BridgeRecord& b : r.bridges) bridges.push_back(b.id);
        if (bridges != bridges_bf(g)) o.fail(s.name + ": bridges");

        const std::vector<Vertex> phi = phi_of(g, r);
        std::vector<EdgePair> pairs;
        for (const Cactus& c : r.cacti) {
            const auto implied = cactus_cut_pairs(g, block_of(g, c, phi), c, phi);
            pairs.insert(pairs.end(), implied.begin(), implied.end());
        }
        std::sort(pairs.begin(), pairs.end());
        if (pairs != cut_pairs_bf(g)) o.fail(s.name + ": cactus cut-pairs");
    }
    const double secs = seconds_since(t0);
    if (secs >= 120.0) o.fail("took " + std::to_string(secs) + " s");
    std::ostringstream d;
    d << suite.size() << " graphs, " << secs << " s";
    o.detail = d.str();
    return o;
}

// ---------------------------------------------------------------------------

void check_certificates(const Multigraph& g, const ThreeEccReport& r, const std::string& name, Outcome& o,
                        std::size_t& certs) {
    std::vector<int> used(g.edge_count(), 0);
    for (const Component& c : r.components) {
        if (c.members.size() == 1) {
            if (c.certificate) o.fail(name + ": singleton with a certificate");
            continue;
        }
        if (!c.certificate) {
            o.fail(name + ": component without a certificate");
            continue;
        }
        ++certs;
        const Verdict v = verify_mader_sequence(g, component_graph(g, c.members), *c.certificate);
        if (!v.ok()) o.fail(name + ": " + v.failures.front());
        for (const CertificatePath& p : c.certificate->paths) {
            for (const CertificateEdge& e : p.edges) {
                if (!e.is_virtual) ++used[e.id];
            }
        }
    }
    // exactly the edges inside a 3ecc are covered, each once
    const std::vector<Vertex> phi = phi_of(g, r);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        const int want = phi[ed.a] == phi[ed.b] ? 1 : 0;
        if (used[e] != want) o.fail(name + ": edge " + std::to_string(e) + " covered " + std::to_string(used[e]) + " times");
    }
}

void check_ear_counts(const Multigraph& g, const std::string& name, Outcome& o) {
    // every 2-edge-connected component with m' edges and n' vertices has m'-n'+1 ears
    const auto bridges = bridges_lowpoint(g);
    std::vector<char> is_bridge(g.edge_count(), 0);
    for (const EdgeId e : bridges) is_bridge[e] = 1;

    std::vector<std::uint32_t> block(g.vertex_count(), 0);
    std::vector<char> seen(g.vertex_count(), 0);
    std::uint32_t blocks = 0;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (seen[s]) continue;
        std::vector<Vertex> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            block[v] = blocks;
            for (const HalfEdge& he : g.adjacency(v)) {
                if (!is_bridge[he.edge] && !seen[he.to]) {
                    seen[he.to] = 1;
                    stack.push_back(he.to);
                }
            }
        }
        ++blocks;
    }
    std::vector<long> expected(blocks, 1);
    for (Vertex v = 0; v < g.vertex_count(); ++v) --expected[block[v]];
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!is_bridge[e]) ++expected[block[g.edge(e).a]];
    }

    std::vector<long> ears(blocks, 0);
    std::vector<int> covered(g.edge_count(), 0);
    for (const auto& comp : connected_components(g)) {
        const DfsAnnotations ann = dfs_ears(g, comp.front());
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            if (ann.edges[e].kind != EdgeKind::Back || !std::binary_search(comp.begin(), comp.end(), ann.edges[e].lower)) {
                continue;
            }
            ++ears[block[ann.edges[e].lower]];
            for (const EdgeId x : ann.materialize_ear(e).edges) ++covered[x];
        }
    }
    for (std::uint32_t b = 0; b < blocks; ++b) {
        if (ears[b] != expected[b]) o.fail(name + ": ear count " + std::to_string(ears[b]) + " != m'-n'+1");
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (covered[e] != (is_bridge[e] ? 0 : 1)) o.fail(name + ": ears cover edge " + std::to_string(e) + " wrongly");
    }
}

Outcome certificate_soundness() {
    Outcome o;
    std::size_t certs = 0;
    std::size_t graphs = 0;
    auto suite = oracle_suite();
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        const std::size_t n = 10 + seed % 60;
        suite.push_back({"connected seed " + std::to_string(seed), gen_random_connected(n, n + seed % (2 * n), seed)});
    }
    for (const Sample& s : suite) {
        const ThreeEccReport r = decompose_graph(s.graph);
        check_certificates(s.graph, r, s.name, o, certs);
        check_ear_counts(s.graph, s.name, o);
        ++graphs;
    }
    // 3-edge-connected inputs: one certificate, empty cactus
    for (const Multigraph& g : {testing::k2_3(), testing::complete(4), testing::complete(5), testing::petersen()}) {
        const ThreeEccReport r = decompose_graph(g);
        const bool single = r.is_three_edge_connected && r.components.size() == 1 && r.components[0].certificate;
        const bool empty_cactus = r.cacti.size() == 1 && r.cacti[0].cycles.empty();
        if (!single || !empty_cactus) o.fail("3-edge-connected input not reported as one certified component");
    }
    o.detail = std::to_string(certs) + " certificates over " + std::to_string(graphs) + " graphs";
    return o;
}

// ---------------------------------------------------------------------------

// Recomputes deg(child) in the current graph from scratch: live supervertices
// contracted, ejected components eliminated in ejection order.
class DegreeObserver : public DebugObserver {
public:
    explicit DegreeObserver(const Multigraph& g) : g_(g) {}

    void on_backtrack(const BacktrackSnapshot& s) override {
        ++calls;
        const std::size_t n = g_.vertex_count();
        // node ids: owner vertex for live/unseen, n + k for the k-th ejected component
        std::vector<std::size_t> node(n);
        for (Vertex v = 0; v < n; ++v) node[v] = s.owner[v];
        for (std::size_t k = 0; k < s.ejected.size(); ++k) {
            for (const Vertex v : s.ejected[k].members) node[v] = n + k;
        }
        std::multiset<std::pair<std::size_t, std::size_t>> edges;
        for (EdgeId e = 0; e < g_.edge_count(); ++e) {
            const auto a = node[g_.edge(e).a];
            const auto b = node[g_.edge(e).b];
            if (a != b) edges.insert(std::minmax(a, b));
        }
        for (std::size_t k = 0; k < s.ejected.size(); ++k) {
            const std::size_t x = n + k;
            std::vector<std::size_t> nbrs;
            for (auto it = edges.begin(); it != edges.end();) {
                if (it->first == x || it->second == x) {
                    nbrs.push_back(it->first == x ? it->second : it->first);
                    it = edges.erase(it);
                } else {
                    ++it;
                }
            }
            if (nbrs.size() > 2) {
                ++mismatches;
                return;
            }
            if (nbrs.size() == 2 && nbrs[0] != nbrs[1]) edges.insert(std::minmax(nbrs[0], nbrs[1]));
        }
        const std::size_t u = node[s.child];
        std::size_t degree = 0;
        for (const auto& [a, b] : edges) degree += (a == u) + (b == u);
        if ((degree <= 2) != s.anchor_test) ++mismatches;
    }

    std::uint64_t calls = 0;
    std::uint64_t mismatches = 0;

private:
    const Multigraph& g_;
};

Outcome debug_invariants() {
    Outcome o;
    std::uint64_t checks = 0;
    std::uint64_t backtracks = 0;
    const auto suite = oracle_suite();
    for (const Sample& s : suite) {
        DegreeObserver obs(s.graph);
        try {
            const ThreeEccReport r = decompose_graph(s.graph, {true, &obs});
            checks += r.counters.invariant_checks;
        } catch (const std::logic_error& e) {
            o.fail(s.name + ": " + e.what());
        }
        if (obs.mismatches) o.fail(s.name + ": anchor test disagrees with tracked degree");
        backtracks += obs.calls;
    }
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        try {
            const ThreeEccReport r = decompose_graph(gen_random_connected(300, 600 + seed * 10, seed), {true, nullptr});
            checks += r.counters.invariant_checks;
        } catch (const std::logic_error& e) {
            o.fail("large seed " + std::to_string(seed) + ": " + e.what());
        }
    }
    o.detail = std::to_string(checks) + " invariant checks, " + std::to_string(backtracks) + " degree comparisons";
    return o;
}

// ---------------------------------------------------------------------------

double median_runtime(std::size_t n, int runs, EngineCounters& counters) {
    const Multigraph g = gen_random_connected(n, 3 * n, 42 + n);
    std::vector<double> times;
    for (int i = 0; i < runs; ++i) {
        const auto t0 = Clock::now();
        const ThreeEccReport r = decompose(g, 0);
        times.push_back(seconds_since(t0));
        counters = r.counters;
    }
    std::sort(times.begin(), times.end());
    return times[times.size() / 2];
}

Outcome linear_time() {
    constexpr double kMaxGrowth = 3.0;
    constexpr double kEventConstant = 16.0;
    Outcome o;
    EngineCounters small{};
    EngineCounters large{};
    const double t17 = median_runtime(std::size_t{1} << 17, 5, small);
    const double t18 = median_runtime(std::size_t{1} << 18, 5, large);
    const double growth = t18 / t17;
    if (growth > kMaxGrowth) o.fail("growth " + std::to_string(growth) + " exceeds 3.0");

    double worst = 0.0;
    for (std::size_t n = 1 << 6; n <= (1 << 18); n <<= 2) {
        for (const std::size_t m : {n - 1, 2 * n, 3 * n, 8 * n}) {
            const ThreeEccReport r = decompose(gen_random_connected(n, m, n + m), 0);
            const double ratio = static_cast<double>(r.counters.edge_events()) / static_cast<double>(n + m);
            worst = std::max(worst, ratio);
        }
    }
    for (const auto& [name, g] : testing::golden_suite()) {
        const ThreeEccReport r = decompose_graph(g);
        worst = std::max(worst, static_cast<double>(r.counters.edge_events()) /
                                    static_cast<double>(g.vertex_count() + g.edge_count()));
    }
    if (worst > kEventConstant) o.fail("edge events reach " + std::to_string(worst) + " (n+m)");

    std::ostringstream d;
    d.precision(3);
    d << "t(2^17)=" << t17 << " s, t(2^18)=" << t18 << " s, growth " << growth << ", max events/(n+m) " << worst
      << " (C=" << kEventConstant << ")";
    o.detail = d.str();
    return o;
}

// ---------------------------------------------------------------------------

Outcome degenerate_suite() {
    Outcome o;
    const auto accepted = [&](const std::string& name, const Multigraph& g,
                              const std::function<bool(const ThreeEccReport&)>& shape) {
        try {
            const ThreeEccReport r = decompose_graph(g, {true, nullptr});
            const Verdict v = verify_report(g, r);
            if (!v.ok()) o.fail(name + ": " + v.failures.front());
            if (!shape(r)) o.fail(name + ": unexpected report shape");
        } catch (const std::exception& e) {
            o.fail(name + ": " + e.what());
        }
    };
    accepted("empty", Multigraph(0), [](const ThreeEccReport& r) { return r.components.empty() && r.cacti.empty(); });
    accepted("single vertex", Multigraph(1), [](const ThreeEccReport& r) {
        return r.components.size() == 1 && r.cacti.size() == 1 && r.is_three_edge_connected;
    });
    accepted("single edge", make_graph(2, {{0, 1}}), [](const ThreeEccReport& r) {
        return r.components.size() == 2 && r.bridges.size() == 1 && r.cacti.size() == 2;
    });
    accepted("two parallel edges", make_graph(2, {{0, 1}, {0, 1}}), [](const ThreeEccReport& r) {
        return r.components.size() == 2 && r.bridges.empty() && r.cacti.size() == 1 &&
               r.cacti[0].cycles == std::vector<std::vector<Vertex>>{{0, 1}};
    });
    const ParsedGraph loops = parse_graph("p 2 3\ne 1 1\ne 2 2\ne 1 1\n");
    if (loops.log.removed_self_loops != 3) o.fail("self-loops not stripped");
    accepted("self-loop only", loops.graph,
             [](const ThreeEccReport& r) { return r.components.size() == 2 && r.bridges.empty(); });
    accepted("disconnected", make_graph(7, {{0, 1}, {0, 1}, {0, 1}, {2, 3}, {3, 4}, {4, 2}}),
             [](const ThreeEccReport& r) {
                 return r.components.size() == 6 && r.cacti.size() == 4 && !r.is_three_edge_connected;
             });
    o.detail = "6 inputs";
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {"oracle equivalence", oracle_equivalence},
        {"certificate soundness", certificate_soundness},
        {"debug invariants", debug_invariants},
        {"linear time", linear_time},
        {"degenerate suite", degenerate_suite},
    };
    int failed = 0;
    for (std::size_t i = 0; i < std::size(criteria); ++i) {
        Outcome o;
        try {
            o = criteria[i].run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        std::printf("[%s] %zu. %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, o.detail.c_str());
        for (const std::string& p : o.problems) std::printf("       %s\n", p.c_str());
        std::fflush(stdout);
        if (!o.pass) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
