#pragma once
// CNF model, structural predicates of the 3-SAT variant hierarchy,
// literal-clause / variable-clause incidence graphs, cycle augmentation of
// those graphs, validity checks, and a brute-force SAT oracle.

#include <optional>

#include "planar/embedding.hpp"

namespace planar {

struct literal {
    int var = 0;
    bool neg = false;
    literal operator!() const { return {var, !neg}; }
    bool operator==(const literal& o) const { return var == o.var && neg == o.neg; }
    bool operator!=(const literal& o) const { return !(*this == o); }
    bool operator<(const literal& o) const { return var != o.var ? var < o.var : neg < o.neg; }
};

inline literal pos(int v) { return {v, false}; }
inline literal neg(int v) { return {v, true}; }

using clause = std::set<literal>;

struct cnf {
    std::vector<clause> clauses;

    std::set<int> variables() const {
        std::set<int> vs;
        for (auto& c : clauses)
            for (auto& l : c) vs.insert(l.var);
        return vs;
    }
    void add(std::initializer_list<literal> ls) { clauses.push_back(clause(ls)); }
    void validate() const {
        for (auto& c : clauses) {
            if (c.empty() || c.size() > 3) fail("MalformedCnf", "clause size must be 1..3");
            for (auto& l : c)
                if (c.count(!l)) fail("MalformedCnf", "clause contains a literal and its negation");
        }
    }
};

using assignment = std::map<int, bool>;

inline bool satisfies(const assignment& nu, const clause& c) {
    for (auto& l : c)
        if (nu.at(l.var) != l.neg) return true;
    return false;
}

inline bool satisfies(const assignment& nu, const cnf& f) {
    for (auto& c : f.clauses)
        if (!satisfies(nu, c)) return false;
    return true;
}

// ---- structural predicates -------------------------------------------------

// linear: each clause intersects at most one other clause, and each such
// intersection contains at most one literal
inline bool is_linear(const cnf& f) {
    size_t m = f.clauses.size();
    for (size_t i = 0; i < m; i++) {
        int partners = 0;
        for (size_t j = 0; j < m; j++) {
            if (i == j) continue;
            std::vector<literal> common;
            std::set_intersection(f.clauses[i].begin(), f.clauses[i].end(), f.clauses[j].begin(), f.clauses[j].end(),
                                  std::back_inserter(common));
            if (common.empty()) continue;
            if (common.size() > 1) return false;
            partners++;
        }
        if (partners > 1) return false;
    }
    return true;
}

inline bool is_monotone(const cnf& f) {
    for (auto& c : f.clauses) {
        bool has_pos = false, has_neg = false;
        for (auto& l : c) (l.neg ? has_neg : has_pos) = true;
        if (has_pos && has_neg) return false;
    }
    return true;
}

// ---- brute-force oracle ----------------------------------------------------

inline std::optional<assignment> brute_force_sat(const cnf& f, int cap = 24) {
    f.validate();
    std::set<int> vset = f.variables();
    std::vector<int> vs(vset.begin(), vset.end());
    if ((int)vs.size() > cap) fail("TooManyVariables", "brute force is exponential in #variables");
    for (uint64_t bits = 0; bits < (uint64_t(1) << vs.size()); bits++) {
        assignment nu;
        for (size_t i = 0; i < vs.size(); i++) nu[vs[i]] = (bits >> i) & 1;
        if (satisfies(nu, f)) return nu;
    }
    return std::nullopt;
}

// ---- incidence graphs ------------------------------------------------------

struct variable_cycle {
    std::vector<int> order;  // permutation of the variables
};

struct literal_cycle {
    std::vector<literal> order;  // permutation of all 2n literals
};

enum class incidence_kind { variable_clause, literal_clause };

struct incidence_graph {
    incidence_kind kind = incidence_kind::variable_clause;
    multigraph g;
    std::map<vid, literal> lit_of;   // literal/variable nodes (variable kind: neg=false)
    std::map<vid, int> clause_of;    // clause node -> clause index
    std::map<literal, vid> node_of;  // inverse of lit_of
    std::set<eid> cycle_edges;       // tagged by augment
    std::set<eid> paired_edges;      // tagged by augment (literal kind only)

    bool is_clause_node(vid v) const { return clause_of.count(v) != 0; }
};

inline incidence_graph build_incidence(const cnf& f, incidence_kind kind) {
    f.validate();
    incidence_graph ig;
    ig.kind = kind;
    // literal/variable nodes for occurring literals, ids in sorted order
    std::set<literal> occ;
    for (auto& c : f.clauses)
        for (auto& l : c) occ.insert(kind == incidence_kind::literal_clause ? l : pos(l.var));
    for (auto& l : occ) {
        vid v = (vid)ig.g.vertices.size();
        ig.g.vertices.insert(v);
        ig.lit_of[v] = l;
        ig.node_of[l] = v;
    }
    eid e = 0;
    for (size_t i = 0; i < f.clauses.size(); i++) {
        vid cn = (vid)ig.g.vertices.size();
        ig.g.vertices.insert(cn);
        ig.clause_of[cn] = (int)i;
        for (auto& l : f.clauses[i]) {
            vid ln = ig.node_of.at(kind == incidence_kind::literal_clause ? l : pos(l.var));
            ig.g.edges[e++] = {ln, cn};
        }
    }
    return ig;
}

// Adds the cycle edges (and, for the literal kind, the paired edges) to the
// incidence graph.  Literal nodes missing from the formula are created so the
// cycle is a permutation of all 2n literals (resp. all n variables).
inline incidence_graph augment(const incidence_graph& ig0, const cnf& f, const variable_cycle& vc) {
    if (ig0.kind != incidence_kind::variable_clause) fail("KindMismatch", "variable cycle on a literal-clause graph");
    std::set<int> vs = f.variables();
    std::set<int> in_cycle(vc.order.begin(), vc.order.end());
    if (in_cycle.size() != vc.order.size() || in_cycle != vs || vc.order.size() < 3)
        fail("CycleIncomplete", "cycle must be a permutation of >= 3 variables");
    incidence_graph ig = ig0;
    eid e = 0;
    for (auto& [id, uv] : ig.g.edges) e = std::max(e, id + 1);
    for (size_t i = 0; i < vc.order.size(); i++) {
        vid a = ig.node_of.at(pos(vc.order[i]));
        vid b = ig.node_of.at(pos(vc.order[(i + 1) % vc.order.size()]));
        ig.g.edges[e] = {a, b};
        ig.cycle_edges.insert(e++);
    }
    return ig;
}

inline incidence_graph augment(const incidence_graph& ig0, const cnf& f, const literal_cycle& lc) {
    if (ig0.kind != incidence_kind::literal_clause) fail("KindMismatch", "literal cycle on a variable-clause graph");
    std::set<int> vs = f.variables();
    std::set<literal> want;
    for (int v : vs) {
        want.insert(pos(v));
        want.insert(neg(v));
    }
    std::set<literal> in_cycle(lc.order.begin(), lc.order.end());
    if (in_cycle.size() != lc.order.size() || in_cycle != want || lc.order.size() < 3)
        fail("CycleIncomplete", "cycle must be a permutation of all 2n literals, n >= 2");
    incidence_graph ig = ig0;
    vid nv = 0;
    for (vid v : ig.g.vertices) nv = std::max(nv, v + 1);
    for (auto& l : want)
        if (!ig.node_of.count(l)) {
            ig.g.vertices.insert(nv);
            ig.lit_of[nv] = l;
            ig.node_of[l] = nv;
            nv++;
        }
    eid e = 0;
    for (auto& [id, uv] : ig.g.edges) e = std::max(e, id + 1);
    for (size_t i = 0; i < lc.order.size(); i++) {
        ig.g.edges[e] = {ig.node_of.at(lc.order[i]), ig.node_of.at(lc.order[(i + 1) % lc.order.size()])};
        ig.cycle_edges.insert(e++);
    }
    for (int v : vs) {
        ig.g.edges[e] = {ig.node_of.at(pos(v)), ig.node_of.at(neg(v))};
        ig.paired_edges.insert(e++);
    }
    return ig;
}

// ---- validity of an embedded augmented graph --------------------------------
//
// Literal kind: all paired edges on one side of the cycle, all clause nodes on
// the other.  Variable kind: positive clause nodes on one side, negative on
// the other (the monotone-planar separation).  Both up to reflection.

inline bool check_valid(const embedding& em, const incidence_graph& ig, const cnf& f) {
    if (!verify_planar(em)) fail("NonPlanarEmbedding", "augmented graph embedding not planar");
    if (ig.cycle_edges.empty()) fail("NonPlanarEmbedding", "graph was not augmented with a cycle");
    auto labels = cycle_side_labels(em, ig.cycle_edges);
    auto ix = em.dart_index();
    auto edge_side = [&](eid e) { return labels.at(ix.at(dart{e, 0}).f); };
    auto node_side = [&](vid v, bool& ok, bool want) {
        for (eid e : em.g.incident(v))
            if (edge_side(e) != want) ok = false;
    };
    for (int target = 0; target < 2; target++) {
        bool ok = true;
        bool inside = target == 0;
        if (ig.kind == incidence_kind::literal_clause) {
            for (eid e : ig.paired_edges)
                if (edge_side(e) != inside) ok = false;
            for (auto& [cn, i] : ig.clause_of) node_side(cn, ok, !inside);
        } else {
            for (auto& [cn, i] : ig.clause_of) {
                bool positive = !f.clauses[i].begin()->neg;
                node_side(cn, ok, positive == inside);
            }
        }
        if (ok) return true;
    }
    return false;
}

}  // namespace planar
