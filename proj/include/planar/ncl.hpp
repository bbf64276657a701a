#pragma once
// Nondeterministic constraint logic: weighted cubic AND/OR graphs, legality
// of orientations, configuration-to-configuration BFS, and the reduction to
// linear literal-planar 3-SAT reconfiguration with a constructed literal
// cycle.

#include <optional>

#include "planar/cycle_augment.hpp"
#include "planar/sat_reduce.hpp"

namespace planar {

enum class node_kind { and_node, or_node };

// The stored endpoint order of each edge (u, v) is its referential
// orientation: the edge points from u to v.
struct constraint_graph {
    multigraph g;
    std::map<eid, int> weight;     // 1 or 2
    std::map<vid, node_kind> kind;

    std::vector<eid> incident_sorted(vid v) const {
        std::vector<eid> inc;
        for (auto& [e, uv] : g.edges)
            if (uv.first == v || uv.second == v) inc.push_back(e);
        return inc;  // map iteration is already ascending
    }

    void check() const {
        if (g.vertices.empty() || !g.connected()) fail("MalformedConstraintGraph", "graph must be connected");
        for (auto& [e, uv] : g.edges) {
            if (uv.first == uv.second) fail("MalformedConstraintGraph", "self-loops are not allowed");
            auto it = weight.find(e);
            if (it == weight.end() || (it->second != 1 && it->second != 2))
                fail("MalformedConstraintGraph", "every edge needs weight 1 or 2");
        }
        for (vid v : g.vertices) {
            auto kit = kind.find(v);
            if (kit == kind.end()) fail("MalformedConstraintGraph", "every vertex needs a kind");
            std::vector<int> ws;
            for (eid e : incident_sorted(v)) ws.push_back(weight.at(e));
            std::sort(ws.begin(), ws.end());
            if (ws.size() != 3) fail("MalformedConstraintGraph", "graph must be cubic");
            if (kit->second == node_kind::or_node && ws != std::vector<int>{2, 2, 2})
                fail("MalformedConstraintGraph", "OR vertex needs three weight-2 edges");
            if (kit->second == node_kind::and_node && ws != std::vector<int>{1, 1, 2})
                fail("MalformedConstraintGraph", "AND vertex needs two weight-1 edges and one weight-2 edge");
        }
    }
};

using ncl_configuration = std::map<eid, vid>;  // edge -> head vertex

inline bool is_legal(const constraint_graph& g, const ncl_configuration& c) {
    std::map<vid, int> inflow;
    for (auto& [e, uv] : g.g.edges) {
        auto it = c.find(e);
        if (it == c.end() || (it->second != uv.first && it->second != uv.second)) return false;
        inflow[it->second] += g.weight.at(e);
    }
    for (vid v : g.g.vertices)
        if (inflow[v] < 2) return false;
    return true;
}

inline ncl_configuration flip(const constraint_graph& g, const ncl_configuration& c, eid e) {
    if (!g.g.has_edge(e) || !c.count(e)) fail("UnknownEdge", "edge not in the graph or the configuration");
    ncl_configuration out = c;
    auto [u, v] = g.g.ends(e);
    out[e] = (c.at(e) == v) ? u : v;
    return out;
}

// Shortest sequence of edge flips from s to t through legal configurations,
// or nullopt; deterministic (edges expanded in ascending id order).
inline std::optional<std::vector<eid>> c2c_bfs(const constraint_graph& g, const ncl_configuration& s,
                                               const ncl_configuration& t, int cap = 20) {
    g.check();
    std::vector<eid> es;
    for (auto& [e, uv] : g.g.edges) es.push_back(e);
    if ((int)es.size() > cap) fail("TooLarge", "state space is exponential in #edges");
    if (!is_legal(g, s) || !is_legal(g, t)) fail("IllegalEndpoint", "endpoint configuration is not legal");

    auto pack = [&](const ncl_configuration& c) {
        uint32_t bits = 0;
        for (size_t i = 0; i < es.size(); i++)
            if (c.at(es[i]) == g.g.ends(es[i]).second) bits |= uint32_t(1) << i;
        return bits;
    };
    auto legal_bits = [&](uint32_t bits) {
        std::map<vid, int> inflow;
        for (size_t i = 0; i < es.size(); i++) {
            auto [u, v] = g.g.ends(es[i]);
            inflow[(bits >> i) & 1 ? v : u] += g.weight.at(es[i]);
        }
        for (vid v : g.g.vertices)
            if (inflow[v] < 2) return false;
        return true;
    };
    uint32_t a = pack(s), b = pack(t);
    std::map<uint32_t, std::pair<uint32_t, eid>> pred;
    pred[a] = {a, 0};
    std::vector<uint32_t> frontier{a};
    while (!frontier.empty() && !pred.count(b)) {
        std::vector<uint32_t> next;
        for (uint32_t cur : frontier)
            for (size_t i = 0; i < es.size(); i++) {
                uint32_t nb = cur ^ (uint32_t(1) << i);
                if (pred.count(nb) || !legal_bits(nb)) continue;
                pred[nb] = {cur, es[i]};
                next.push_back(nb);
            }
        frontier = next;
    }
    if (!pred.count(b)) return std::nullopt;
    std::vector<eid> seq;
    for (uint32_t cur = b; cur != a; cur = pred.at(cur).first) seq.push_back(pred.at(cur).second);
    std::reverse(seq.begin(), seq.end());
    return seq;
}

// ---- reduction to linear literal-planar 3-SAT reconfiguration ---------------

// The literal "edge e points to v": positive iff v is the referential head.
// Variable ids are the edge ids.
inline literal edge_literal(const constraint_graph& g, eid e, vid v) {
    return g.g.edges.at(e).second == v ? pos((int)e) : neg((int)e);
}

// OR vertex: at least one edge points in.  AND vertex with 2-weighted edge e:
// if e points away, both 1-weighted edges must point in.
inline cnf ncl_formula(const constraint_graph& g) {
    g.check();
    cnf f;
    for (vid v : g.g.vertices) {
        std::vector<eid> inc = g.incident_sorted(v);
        if (g.kind.at(v) == node_kind::or_node) {
            f.add({edge_literal(g, inc[0], v), edge_literal(g, inc[1], v), edge_literal(g, inc[2], v)});
        } else {
            std::vector<eid> one;
            eid two = 0;
            for (eid e : inc) (g.weight.at(e) == 1 ? (void)one.push_back(e) : (void)(two = e));
            f.add({edge_literal(g, one[1], v), edge_literal(g, two, v)});
            f.add({edge_literal(g, two, v), edge_literal(g, one[0], v)});
        }
    }
    return f;
}

inline assignment ncl_assignment(const constraint_graph& g, const ncl_configuration& c) {
    assignment nu;
    for (auto& [e, uv] : g.g.edges) nu[(int)e] = (c.at(e) == uv.second);
    return nu;
}

struct ncl_reduction {
    llp_instance inst;
    assignment nu, nu2;
};

inline ncl_reduction ncl_to_llp_reconfig(const constraint_graph& g, const ncl_configuration& s,
                                         const ncl_configuration& t) {
    g.check();
    if (!is_legal(g, s) || !is_legal(g, t)) fail("IllegalEndpoint", "endpoint configuration is not legal");
    cnf f = ncl_formula(g);
    incidence_graph ig0 = build_incidence(f, incidence_kind::literal_clause);

    // literal-clause graph plus the paired edges; the cycle comes from cycle
    // augmentation with V' = literal nodes, E' = paired edges
    augment_instance ai;
    ai.g = ig0.g;
    for (auto& [l, n] : ig0.node_of) ai.vprime.insert(n);
    eid pe = 0;
    for (auto& [e, uv] : ai.g.edges) pe = std::max(pe, e + 1);
    std::map<int, eid> my_paired;
    std::set<eid> eprime;
    for (int x : f.variables()) {
        ai.g.edges[pe] = {ig0.node_of.at(pos(x)), ig0.node_of.at(neg(x))};
        my_paired[x] = pe;
        eprime.insert(pe++);
    }

    kite_graph kite = build_kite_from_matching(ai, eprime);
    vprime_cycle_result res = compute_vprime_cycle(ai, kite);
    if (!verify_separation(res.augmented, res.cycle, res.partition))
        fail("InternalInvariantViolation", "cycle does not separate the paired edges");

    literal_cycle lc;
    for (vid n : res.cycle.order) lc.order.push_back(ig0.lit_of.at(n));
    incidence_graph ig = augment(ig0, f, lc);

    // rename the surgery edge ids to the canonical augmented ids
    std::map<vid, vid> vmap;
    for (vid v : res.augmented.g.vertices) vmap[v] = v;
    std::map<eid, eid> emap;
    for (auto& [e, uv] : ig0.g.edges) emap[e] = e;
    std::vector<eid> cyc_canon(ig.cycle_edges.begin(), ig.cycle_edges.end());
    for (size_t i = 0; i < res.cycle.edges.size(); i++) emap[res.cycle.edges[i]] = cyc_canon[i];
    std::vector<eid> paired_canon(ig.paired_edges.begin(), ig.paired_edges.end());
    std::set<int> vars = f.variables();
    size_t k = 0;
    for (int x : vars) emap[my_paired.at(x)] = paired_canon[k++];

    ncl_reduction out;
    out.inst.f = f;
    out.inst.cycle = lc;
    out.inst.ig = ig;
    out.inst.em = relabel_embedding(res.augmented, vmap, emap, ig.g);
    out.nu = ncl_assignment(g, s);
    out.nu2 = ncl_assignment(g, t);
    if (!is_linear(f)) fail("InternalInvariantViolation", "reduced formula is not linear");
    if (!verify_planar(out.inst.em) || !check_valid(out.inst.em, ig, f))
        fail("InternalInvariantViolation", "reduced embedding is not a valid literal-planar layout");
    if (!satisfies(out.nu, f) || !satisfies(out.nu2, f))
        fail("InternalInvariantViolation", "legal endpoint does not satisfy the reduced formula");
    return out;
}

// ---- instance generation ----------------------------------------------------

// Grows a random valid constraint graph from the 3-parallel-edge instance by
// repeatedly replacing a weight-2 edge uv with a path u-x-y-v whose middle is
// doubled; a weight-1 double makes x,y AND vertices, a weight-2 double OR.
// Each expansion adds 3 edges, so the result has 3(expansions + 1) edges.
inline constraint_graph random_constraint_graph(std::mt19937& rng, int expansions) {
    constraint_graph g;
    g.g.vertices = {0, 1};
    for (eid e = 0; e < 3; e++) {
        g.g.edges[e] = {0, 1};
        g.weight[e] = 2;
    }
    g.kind = {{0, node_kind::or_node}, {1, node_kind::or_node}};
    vid nv = 2;
    eid ne = 3;
    for (int k = 0; k < expansions; k++) {
        std::vector<eid> twos;
        for (auto& [e, uv] : g.g.edges)
            if (g.weight.at(e) == 2) twos.push_back(e);
        eid e = twos[rng() % twos.size()];
        auto [u, v] = g.g.ends(e);
        int w = rng() % 2 ? 1 : 2;
        vid x = nv++, y = nv++;
        g.g.vertices.insert(x);
        g.g.vertices.insert(y);
        g.g.edges.erase(e);
        g.weight.erase(e);
        g.g.edges[ne] = {u, x};
        g.weight[ne++] = 2;
        g.g.edges[ne] = {y, v};
        g.weight[ne++] = 2;
        for (int r = 0; r < 2; r++) {
            g.g.edges[ne] = {x, y};
            g.weight[ne++] = w;
        }
        g.kind[x] = g.kind[y] = (w == 1 ? node_kind::and_node : node_kind::or_node);
    }
    g.check();
    return g;
}

// All legal orientations, ascending in the referential bitmask.
inline std::vector<ncl_configuration> all_legal_configurations(const constraint_graph& g) {
    std::vector<eid> es;
    for (auto& [e, uv] : g.g.edges) es.push_back(e);
    if (es.size() > 20) fail("TooLarge", "state space is exponential in #edges");
    std::vector<ncl_configuration> out;
    for (uint32_t bits = 0; bits < (uint32_t(1) << es.size()); bits++) {
        ncl_configuration c;
        for (size_t i = 0; i < es.size(); i++) {
            auto [u, v] = g.g.ends(es[i]);
            c[es[i]] = (bits >> i) & 1 ? v : u;
        }
        if (is_legal(g, c)) out.push_back(c);
    }
    return out;
}

}  // namespace planar
