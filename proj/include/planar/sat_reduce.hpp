#pragma once
// The two satisfiability reductions of the variant hierarchy and the flip
// sequence lifting between them:
//   - monotone planar 3-SAT  ->  linear literal-planar 3-SAT (chain gadgets)
//   - linear literal-planar  ->  monotone linear planar      (primed twins)
// Both transport the combinatorial embedding along with the formula.

#include "planar/reconfig.hpp"
#include "planar/sat_core.hpp"

namespace planar {

// fresh-variable bookkeeping shared by both reductions
struct fresh_names {
    int chain_pos = 0;                     // chain length n (positive side)
    int chain_neg = 0;                     // chain length m (negative side)
    std::map<int, std::vector<int>> p, a;  // v -> p_1..p_n / a_1..a_n
    std::map<int, std::vector<int>> nn, b;  // v -> n_1..n_m / b_1..b_m
    std::map<int, int> prime;              // v -> v'
};

// a monotone planar instance: formula + variable cycle + embedding of the
// augmented variable-clause graph separating clause polarities
struct mp_instance {
    cnf f;
    variable_cycle cycle;
    incidence_graph ig;
    embedding em;
};

struct llp_instance {
    cnf f;
    literal_cycle cycle;
    incidence_graph ig;
    embedding em;
    fresh_names names;
};

struct mlp_instance {
    cnf f;
    variable_cycle cycle;
    incidence_graph ig;
    embedding em;
    fresh_names names;
};

namespace detail {

inline bool clause_positive(const clause& c) { return !c.begin()->neg; }

inline void require_same_edges(const embedding& em, const incidence_graph& ig, const char* kind) {
    for (auto& [e, uv] : ig.g.edges)
        if (!em.g.has_edge(e)) fail(kind, "embedding does not match the incidence graph");
    if (em.g.edges.size() != ig.g.edges.size()) fail(kind, "embedding does not match the incidence graph");
}

// Occurrence orders around each variable node, read off the input embedding:
// occurrences are indexed in the rotation order of the occurrence edges at the
// variable, normalized so positive occurrences run between the cycle edge to
// the predecessor and the one to the successor.  Also yields the (possibly
// reversed) rotation system used for transporting clause rotations.
struct occurrence_order {
    std::map<int, std::vector<int>> pos, neg;  // variable -> clause indices
    std::map<vid, std::vector<dart>> rots;     // normalized rotation system
};

inline occurrence_order occurrences_by_rotation(const mp_instance& in) {
    occurrence_order out;
    out.rots = rotation_system(in.em);
    int nv = (int)in.cycle.order.size();
    auto cycle_edge_between = [&](vid x, vid y) {
        for (eid e : in.ig.cycle_edges) {
            auto [a, b] = in.ig.g.ends(e);
            if ((a == x && b == y) || (a == y && b == x)) return e;
        }
        fail("NotMonotonePlanar", "cycle edge missing between consecutive variables");
    };
    auto clause_of_dart = [&](const embedding& em, dart d) {
        vid other = em.head(d);
        auto it = in.ig.clause_of.find(other);
        if (it == in.ig.clause_of.end()) fail("NotMonotonePlanar", "non-clause neighbor off the cycle");
        return it->second;
    };
    // decide whether the rotation arc from the predecessor edge to the
    // successor edge holds the positive occurrences; reverse globally if not
    int flip = -1;  // -1 undecided
    auto arcs_of = [&](int k) {
        vid x = in.ig.node_of.at(pos(in.cycle.order[k]));
        eid eprev = cycle_edge_between(x, in.ig.node_of.at(pos(in.cycle.order[(k + nv - 1) % nv])));
        eid enext = cycle_edge_between(x, in.ig.node_of.at(pos(in.cycle.order[(k + 1) % nv])));
        auto rot = out.rots.at(x);
        int i0 = -1;
        for (int i = 0; i < (int)rot.size(); i++)
            if (rot[i].edge == eprev) i0 = i;
        if (i0 < 0) fail("NotMonotonePlanar", "cycle edge missing from the rotation");
        std::rotate(rot.begin(), rot.begin() + i0, rot.end());
        std::pair<std::vector<dart>, std::vector<dart>> arcs;
        bool second = false;
        for (size_t i = 1; i < rot.size(); i++) {
            if (rot[i].edge == enext) { second = true; continue; }
            (second ? arcs.second : arcs.first).push_back(rot[i]);
        }
        if (!second) fail("NotMonotonePlanar", "successor cycle edge missing from the rotation");
        return arcs;
    };
    for (int k = 0; k < nv && flip < 0; k++) {
        auto [arc1, arc2] = arcs_of(k);
        if (!arc1.empty()) flip = clause_positive(in.f.clauses[clause_of_dart(in.em, arc1[0])]) ? 0 : 1;
        else if (!arc2.empty()) flip = clause_positive(in.f.clauses[clause_of_dart(in.em, arc2[0])]) ? 1 : 0;
    }
    if (flip == 1)
        for (auto& [v, cyc] : out.rots) std::reverse(cyc.begin(), cyc.end());
    for (int k = 0; k < nv; k++) {
        int v = in.cycle.order[k];
        auto [arc1, arc2] = arcs_of(k);  // recomputed on the normalized rotations
        for (dart d : arc1) {
            int c = clause_of_dart(in.em, d);
            if (!clause_positive(in.f.clauses[c])) fail("NotMonotonePlanar", "clause polarities not separated at a vertex");
            out.pos[v].push_back(c);
        }
        std::reverse(arc2.begin(), arc2.end());
        for (dart d : arc2) {
            int c = clause_of_dart(in.em, d);
            if (clause_positive(in.f.clauses[c])) fail("NotMonotonePlanar", "clause polarities not separated at a vertex");
            out.neg[v].push_back(c);
        }
    }
    return out;
}

}  // namespace detail

// ---- monotone planar -> linear literal-planar ------------------------------
//
// Every occurrence of a variable is replaced by a dedicated fresh literal
// (the i-th positive occurrence of v by !p_i, the j-th negative one by !n_j),
// and implication chains through a_i / b_j tie the fresh variables back to v.
// The embedding is rebuilt as an explicit rotation system: each variable node
// becomes a two-line section of the new literal cycle, clause nodes keep
// their rotation from the input.

inline llp_instance mp3sat_to_llp(const mp_instance& in) {
    in.f.validate();
    if (!is_monotone(in.f)) fail("NotMonotonePlanar", "formula is not monotone");
    if (in.ig.kind != incidence_kind::variable_clause) fail("NotMonotonePlanar", "wrong incidence graph kind");
    if (std::set<int>(in.cycle.order.begin(), in.cycle.order.end()) != in.f.variables())
        fail("NotMonotonePlanar", "cycle is not a permutation of the variables");
    detail::require_same_edges(in.em, in.ig, "NotMonotonePlanar");
    if (!check_valid(in.em, in.ig, in.f)) fail("NotMonotonePlanar", "embedding does not separate clause polarities");

    int npos = 0, nneg = 0;
    for (auto& c : in.f.clauses) (detail::clause_positive(c) ? npos : nneg)++;
    int n = std::max(npos, 1), m = std::max(nneg, 1);

    auto occ = detail::occurrences_by_rotation(in);

    fresh_names fn;
    fn.chain_pos = n;
    fn.chain_neg = m;
    int next = 0;
    for (int v : in.f.variables()) next = std::max(next, v + 1);
    for (int v : in.cycle.order) {
        for (int i = 0; i < n; i++) fn.p[v].push_back(next++);
        for (int i = 0; i < n; i++) fn.a[v].push_back(next++);
        for (int j = 0; j < m; j++) fn.nn[v].push_back(next++);
        for (int j = 0; j < m; j++) fn.b[v].push_back(next++);
    }

    // psi': occurrence-wise substitution, one clause per input clause
    cnf fp;
    std::map<std::pair<int, int>, int> pos_ix, neg_ix;  // (v, clause) -> 1-based occurrence index
    for (auto& [v, cs] : occ.pos)
        for (int i = 0; i < (int)cs.size(); i++) pos_ix[{v, cs[i]}] = i;
    for (auto& [v, cs] : occ.neg)
        for (int j = 0; j < (int)cs.size(); j++) neg_ix[{v, cs[j]}] = j;
    for (int c = 0; c < (int)in.f.clauses.size(); c++) {
        clause nc;
        for (auto& l : in.f.clauses[c])
            nc.insert(l.neg ? neg(fn.nn.at(l.var)[neg_ix.at({l.var, c})]) : neg(fn.p.at(l.var)[pos_ix.at({l.var, c})]));
        fp.clauses.push_back(nc);
    }
    // chain clauses per variable, with their clause indices recorded
    struct gadget_ix {
        int a0 = -1, b0 = -1;
        std::vector<int> P, A, N, B;
    };
    std::map<int, gadget_ix> gix;
    for (int v : in.cycle.order) {
        gadget_ix& g = gix[v];
        auto add = [&](std::initializer_list<literal> ls) {
            fp.add(ls);
            return (int)fp.clauses.size() - 1;
        };
        g.a0 = add({pos(fn.a.at(v)[0]), pos(v)});
        g.b0 = add({pos(fn.b.at(v)[0]), neg(v)});
        for (int i = 0; i < n; i++) g.P.push_back(add({pos(fn.p.at(v)[i]), neg(fn.a.at(v)[i])}));
        for (int i = 0; i + 1 < n; i++) g.A.push_back(add({pos(fn.a.at(v)[i + 1]), neg(fn.a.at(v)[i])}));
        for (int j = 0; j < m; j++) g.N.push_back(add({pos(fn.nn.at(v)[j]), neg(fn.b.at(v)[j])}));
        for (int j = 0; j + 1 < m; j++) g.B.push_back(add({pos(fn.b.at(v)[j + 1]), neg(fn.b.at(v)[j])}));
    }

    // literal cycle: upper lines left to right, then lower lines right to left
    literal_cycle lc;
    for (int v : in.cycle.order) {
        lc.order.push_back(pos(v));
        for (int i = 0; i < n; i++) {
            lc.order.push_back(pos(fn.a.at(v)[i]));
            lc.order.push_back(neg(fn.a.at(v)[i]));
        }
        for (int i = n - 1; i >= 0; i--) lc.order.push_back(pos(fn.p.at(v)[i]));
        for (int i = 0; i < n; i++) lc.order.push_back(neg(fn.p.at(v)[i]));
    }
    for (auto it = in.cycle.order.rbegin(); it != in.cycle.order.rend(); ++it) {
        int v = *it;
        // reversed lower line of the section
        for (int j = m - 1; j >= 0; j--) lc.order.push_back(neg(fn.nn.at(v)[j]));
        for (int j = 0; j < m; j++) lc.order.push_back(pos(fn.nn.at(v)[j]));
        for (int j = m - 1; j >= 0; j--) {
            lc.order.push_back(neg(fn.b.at(v)[j]));
            lc.order.push_back(pos(fn.b.at(v)[j]));
        }
        lc.order.push_back(neg(v));
    }

    incidence_graph igp = augment(build_incidence(fp, incidence_kind::literal_clause), fp, lc);

    // edge lookups on the augmented graph
    int L = (int)lc.order.size();
    std::vector<eid> cycv(igp.cycle_edges.begin(), igp.cycle_edges.end());
    std::map<int, eid> pev;  // variable -> paired edge
    {
        std::set<int> vars = fp.variables();
        std::vector<int> vs(vars.begin(), vars.end());
        std::vector<eid> pe(igp.paired_edges.begin(), igp.paired_edges.end());
        for (size_t i = 0; i < vs.size(); i++) pev[vs[i]] = pe[i];
    }
    std::map<std::pair<int, literal>, eid> cedge;
    for (auto& [e, uv] : igp.g.edges) {
        if (igp.cycle_edges.count(e) || igp.paired_edges.count(e)) continue;
        cedge[{igp.clause_of.at(uv.second), igp.lit_of.at(uv.first)}] = e;
    }
    std::map<literal, int> litpos;
    for (int t = 0; t < L; t++) litpos[lc.order[t]] = t;

    auto node = [&](literal l) { return igp.node_of.at(l); };
    auto od = [&](eid e, vid at) {
        auto [x, y] = igp.g.ends(e);
        return dart{e, x == at ? 0 : 1};
    };
    auto cyce = [&](int t) { return cycv[((t % L) + L) % L]; };
    auto ce = [&](int clause_ix, literal l) { return cedge.at({clause_ix, l}); };

    std::map<vid, std::vector<dart>> rots;
    auto set_rot = [&](literal l, std::vector<eid> es) {
        vid x = node(l);
        std::vector<dart> r;
        for (eid e : es) r.push_back(od(e, x));
        rots[x] = r;
    };
    for (int k = 0; k < (int)in.cycle.order.size(); k++) {
        int v = in.cycle.order[k];
        auto& g = gix.at(v);
        auto& P = fn.p.at(v);
        auto& A = fn.a.at(v);
        auto& N = fn.nn.at(v);
        auto& B = fn.b.at(v);
        int tpos = (int)occ.pos[v].size(), tneg = (int)occ.neg[v].size();
        // upper line (clause arcs point away from the band, chords into it)
        int t = litpos.at(pos(v));
        set_rot(pos(v), {cyce(t - 1), ce(g.a0, pos(v)), cyce(t), pev.at(v)});
        for (int i = 0; i < n; i++) {
            t = litpos.at(pos(A[i]));
            set_rot(pos(A[i]), {cyce(t - 1), ce(i == 0 ? g.a0 : g.A[i - 1], pos(A[i])), cyce(t), pev.at(A[i])});
            t = litpos.at(neg(A[i]));
            std::vector<eid> r{cyce(t - 1), ce(g.P[i], neg(A[i]))};
            if (i + 1 < n) r.push_back(ce(g.A[i], neg(A[i])));
            r.push_back(cyce(t));
            r.push_back(pev.at(A[i]));
            set_rot(neg(A[i]), r);
            t = litpos.at(pos(P[i]));
            set_rot(pos(P[i]), {cyce(t - 1), ce(g.P[i], pos(P[i])), cyce(t), pev.at(P[i])});
            t = litpos.at(neg(P[i]));
            std::vector<eid> rp{cyce(t - 1)};
            if (i < tpos) rp.push_back(ce(occ.pos[v][i], neg(P[i])));
            rp.push_back(cyce(t));
            rp.push_back(pev.at(P[i]));
            set_rot(neg(P[i]), rp);
        }
        // lower line (mirrored: west is the next literal along the cycle)
        t = litpos.at(neg(v));
        set_rot(neg(v), {cyce(t), pev.at(v), cyce(t - 1), ce(g.b0, neg(v))});
        for (int j = 0; j < m; j++) {
            t = litpos.at(pos(B[j]));
            set_rot(pos(B[j]), {cyce(t), pev.at(B[j]), cyce(t - 1), ce(j == 0 ? g.b0 : g.B[j - 1], pos(B[j]))});
            t = litpos.at(neg(B[j]));
            std::vector<eid> r{cyce(t), pev.at(B[j]), cyce(t - 1)};
            if (j + 1 < m) r.push_back(ce(g.B[j], neg(B[j])));
            r.push_back(ce(g.N[j], neg(B[j])));
            set_rot(neg(B[j]), r);
            t = litpos.at(pos(N[j]));
            set_rot(pos(N[j]), {cyce(t), pev.at(N[j]), cyce(t - 1), ce(g.N[j], pos(N[j]))});
            t = litpos.at(neg(N[j]));
            std::vector<eid> rn{cyce(t), pev.at(N[j]), cyce(t - 1)};
            if (j < tneg) rn.push_back(ce(occ.neg[v][j], neg(N[j])));
            set_rot(neg(N[j]), rn);
        }
    }
    // chain clause nodes have degree two; order is immaterial
    std::map<int, std::vector<eid>> clause_edges;
    for (auto& [key, e] : cedge) clause_edges[key.first].push_back(e);
    for (auto& [cn, ci] : igp.clause_of) {
        if (ci < (int)in.f.clauses.size()) continue;  // psi' handled below
        std::vector<dart> r;
        for (eid e : clause_edges.at(ci)) r.push_back(od(e, cn));
        rots[cn] = r;
    }
    // psi' clause nodes inherit the input clause rotation
    for (auto& [cn_in, ci] : in.ig.clause_of) {
        vid cn = -1;
        for (auto& [x, cj] : igp.clause_of)
            if (cj == ci) cn = x;
        std::vector<dart> r;
        for (dart d : occ.rots.at(cn_in)) {
            int v = in.ig.lit_of.at(in.em.head(d)).var;
            bool positive = detail::clause_positive(in.f.clauses[ci]);
            literal l = positive ? neg(fn.p.at(v)[pos_ix.at({v, ci})]) : neg(fn.nn.at(v)[neg_ix.at({v, ci})]);
            r.push_back(od(ce(ci, l), cn));
        }
        rots[cn] = r;
    }

    auto faces = faces_from_rotation(igp.g, rots);
    embedding emp = embedding_from_faces(igp.g, faces);
    if (!verify_planar(emp)) fail("NotMonotonePlanar", "internal: transported embedding is not planar");
    if (!check_valid(emp, igp, fp)) fail("NotMonotonePlanar", "internal: transported embedding is not valid");
    if (!is_linear(fp)) fail("NotMonotonePlanar", "internal: output formula is not linear");
    return llp_instance{fp, lc, igp, emp, fn};
}

// ---- linear literal-planar -> monotone linear planar -----------------------
//
// Negative literals are renamed to primed twins and one all-negative clause
// (!v | !v') per variable ties the twins together.  In the embedding, each
// paired edge is subdivided and the midpoint becomes the new clause node.

inline mlp_instance llp_to_mlp(const llp_instance& in) {
    in.f.validate();
    if (!is_linear(in.f)) fail("NotValidLlp", "formula is not linear");
    if (in.ig.kind != incidence_kind::literal_clause) fail("NotValidLlp", "wrong incidence graph kind");
    detail::require_same_edges(in.em, in.ig, "NotValidLlp");
    if (!check_valid(in.em, in.ig, in.f)) fail("NotValidLlp", "embedding is not a valid literal-planar witness");

    fresh_names fn = in.names;
    std::set<int> vars = in.f.variables();
    int next = 0;
    for (int v : vars) next = std::max(next, v + 1);
    for (int v : vars) fn.prime[v] = next++;

    cnf fp;
    for (auto& c : in.f.clauses) {
        clause nc;
        for (auto& l : c) nc.insert(l.neg ? pos(fn.prime.at(l.var)) : l);
        fp.clauses.push_back(nc);
    }
    std::map<int, int> psi_ix;  // variable -> index of its (!v | !v') clause
    for (int v : vars) {
        fp.add({neg(v), neg(fn.prime.at(v))});
        psi_ix[v] = (int)fp.clauses.size() - 1;
    }

    variable_cycle vc;
    for (auto& l : in.cycle.order) vc.order.push_back(l.neg ? fn.prime.at(l.var) : l.var);

    incidence_graph igp = augment(build_incidence(fp, incidence_kind::variable_clause), fp, vc);

    // subdivide every paired edge; the midpoint is the new clause node
    embedding cur = in.em;
    std::map<eid, vid> mid;
    std::map<eid, eid> half;
    std::vector<eid> pe(in.ig.paired_edges.begin(), in.ig.paired_edges.end());
    std::vector<int> vsorted(vars.begin(), vars.end());
    std::map<eid, int> paired_var;  // paired edges were added in sorted-variable order
    for (size_t i = 0; i < pe.size(); i++) paired_var[pe[i]] = vsorted[i];
    for (eid e : pe) {
        auto r = subdivide_edge(cur, e);
        cur = r.em;
        mid[e] = r.mid;
        half[e] = r.new_edge;
    }

    // rename onto the ids of the output incidence graph
    std::map<int, vid> clause_node;
    for (auto& [cn, ci] : igp.clause_of) clause_node[ci] = cn;
    std::map<vid, vid> vmap;
    for (auto& [x, l] : in.ig.lit_of) vmap[x] = igp.node_of.at(pos(l.neg ? fn.prime.at(l.var) : l.var));
    for (auto& [x, ci] : in.ig.clause_of) vmap[x] = clause_node.at(ci);
    for (auto& [e, w] : mid) vmap[w] = clause_node.at(psi_ix.at(paired_var.at(e)));

    std::map<std::pair<int, int>, eid> occ_edge;  // (clause index, variable) -> output edge
    for (auto& [e, uv] : igp.g.edges) {
        if (igp.cycle_edges.count(e)) continue;
        occ_edge[{igp.clause_of.at(uv.second), igp.lit_of.at(uv.first).var}] = e;
    }
    std::map<eid, eid> emap;
    for (auto& [e, uv] : in.ig.g.edges) {
        if (in.ig.cycle_edges.count(e) || in.ig.paired_edges.count(e)) continue;
        literal l = in.ig.lit_of.at(uv.first);
        emap[e] = occ_edge.at({in.ig.clause_of.at(uv.second), l.neg ? fn.prime.at(l.var) : l.var});
    }
    std::vector<eid> cyc_in(in.ig.cycle_edges.begin(), in.ig.cycle_edges.end());
    std::vector<eid> cyc_out(igp.cycle_edges.begin(), igp.cycle_edges.end());
    for (size_t t = 0; t < cyc_in.size(); t++) emap[cyc_in[t]] = cyc_out[t];
    for (eid e : pe) {
        int v = paired_var.at(e);
        emap[e] = occ_edge.at({psi_ix.at(v), v});
        emap[half.at(e)] = occ_edge.at({psi_ix.at(v), fn.prime.at(v)});
    }
    embedding emp = relabel_embedding(cur, vmap, emap, igp.g);
    if (!verify_planar(emp)) fail("NotValidLlp", "internal: transported embedding is not planar");
    if (!is_monotone(fp) || !is_linear(fp)) fail("NotValidLlp", "internal: output formula is not monotone linear");
    if (!check_valid(emp, igp, fp)) fail("NotValidLlp", "internal: transported embedding is not valid");
    return mlp_instance{fp, vc, igp, emp, fn};
}

// ---- assignment and flip-sequence transport --------------------------------

// forward model of mp3sat_to_llp: chains copy v or its complement
inline assignment chain_assignment(const assignment& nu, const fresh_names& fn) {
    assignment out = nu;
    for (auto& [v, ps] : fn.p)
        for (int x : ps) out[x] = !nu.at(v);
    for (auto& [v, as] : fn.a)
        for (int x : as) out[x] = !nu.at(v);
    for (auto& [v, ns] : fn.nn)
        for (int x : ns) out[x] = nu.at(v);
    for (auto& [v, bs] : fn.b)
        for (int x : bs) out[x] = nu.at(v);
    return out;
}

// forward model of llp_to_mlp: the primed twin always disagrees
inline assignment friend_assignment(const assignment& nu, const fresh_names& fn) {
    assignment out = nu;
    for (auto& [v, vp] : fn.prime) out[vp] = !nu.at(v);
    return out;
}

// A flip of v lifts to two flips keeping (!v | !v') satisfied throughout:
// 1 -> 0 flips v first, 0 -> 1 flips v' first.
inline flip_sequence lift_flip_sequence(const cnf& f, const assignment& start, const flip_sequence& seq,
                                        const fresh_names& fn) {
    if (!validate_flip_sequence(f, start, seq)) fail("IntermediateUnsat", "flip sequence invalid for the source formula");
    assignment nu = start;
    flip_sequence out;
    for (int v : seq) {
        int vp = fn.prime.at(v);
        if (nu.at(v)) {
            out.push_back(v);
            out.push_back(vp);
        } else {
            out.push_back(vp);
            out.push_back(v);
        }
        nu[v] = !nu[v];
    }
    return out;
}

inline flip_sequence project_flip_sequence(const cnf& fprime, const assignment& start, const flip_sequence& seq,
                                           const fresh_names& fn) {
    if (!validate_flip_sequence(fprime, start, seq))
        fail("IntermediateUnsat", "flip sequence invalid for the target formula");
    std::set<int> primes;
    for (auto& [v, vp] : fn.prime) primes.insert(vp);
    flip_sequence out;
    for (int v : seq)
        if (!primes.count(v)) out.push_back(v);
    return out;
}

}  // namespace planar
