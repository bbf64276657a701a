#pragma once
// Generation of monotone planar instances (clause nodes planted into faces of
// a polygon embedding) and a brute-force embedding oracle that decides
// monotone planarity by enumerating rotation systems.

#include <random>

#include "planar/sat_reduce.hpp"

namespace planar {

// Random monotone planar instance over variables 0..nvars-1 with the cycle
// (0, 1, ..., nvars-1).  Clause nodes are planted one by one into a random
// face; the side of that face fixes the clause polarity, so the instance is
// monotone planar by construction.  Unused variables get a planted unit
// clause so the formula's variable set matches the cycle.
inline mp_instance random_mp_instance(std::mt19937& rng, int nvars, int nclauses) {
    if (nvars < 3) fail("InstanceTooSmall", "a variable cycle needs at least 3 variables");
    int nv = nvars;
    // polygon over the future variable-node ids, scratch edge ids 0..nv-1
    embedding em;
    for (int k = 0; k < nv; k++) {
        em.g.vertices.insert(k);
        em.g.edges[k] = {k, (k + 1) % nv};
    }
    face inner, outer;
    for (int k = 0; k < nv; k++) inner.darts.push_back(dart{k, 0});
    for (int k = nv - 1; k >= 0; k--) outer.darts.push_back(dart{k, 1});
    em.faces[0] = inner;
    em.faces[1] = outer;
    em.outer = 1;
    em.bump_counters();
    em.check();

    std::set<eid> cyc_scratch;
    for (int k = 0; k < nv; k++) cyc_scratch.insert(k);
    auto pick = [&](int n) { return (int)(rng() % (unsigned)n); };

    std::vector<std::pair<std::vector<int>, bool>> clauses;  // (sorted vars, positive?)
    std::map<std::pair<int, int>, eid> scratch_edge;         // (clause, var) -> scratch eid
    auto plant = [&](int ci, int want_size, std::optional<fid> forced, std::optional<int> forced_var) {
        auto labels = cycle_side_labels(em, cyc_scratch);
        std::vector<fid> fs;
        for (auto& [f, fc] : em.faces) fs.push_back(f);
        fid f = forced ? *forced : fs[pick((int)fs.size())];
        // distinct variable corners on that face
        std::vector<int> vars;
        for (dart d : em.faces.at(f).darts) {
            vid h = em.head(d);
            if (h < nv && std::find(vars.begin(), vars.end(), h) == vars.end()) vars.push_back((int)h);
        }
        if (vars.empty()) return false;
        if (forced_var) {
            vars = {*forced_var};
        } else {
            int s = std::min(want_size, (int)vars.size());
            std::shuffle(vars.begin(), vars.end(), rng);
            vars.resize(s);
            std::sort(vars.begin(), vars.end());
        }
        bool positive = labels.at(f);  // inside faces host positive clauses
        vid cn = nv + ci;
        eid e0 = em.next_eid;
        em = add_edge(em, vars[0], cn, f);
        scratch_edge[{ci, vars[0]}] = e0;
        for (size_t i = 1; i < vars.size(); i++) {
            // find a face holding corners of both the clause node and the variable
            fid at = -1;
            for (auto& [f2, fc] : em.faces) {
                bool has_cn = false, has_v = false;
                for (dart d : fc.darts) {
                    if (em.head(d) == cn) has_cn = true;
                    if (em.head(d) == vars[i]) has_v = true;
                }
                if (has_cn && has_v) { at = f2; break; }
            }
            if (at < 0) fail("InstanceTooSmall", "internal: clause corner lost");
            eid e = em.next_eid;
            em = add_edge(em, vars[i], cn, at);
            scratch_edge[{ci, vars[i]}] = e;
        }
        clauses.push_back({vars, positive});
        return true;
    };
    int planted = 0;
    for (int tries = 0; planted < nclauses && tries < 20 * nclauses + 20; tries++)
        if (plant(planted, 1 + pick(3), std::nullopt, std::nullopt)) planted++;
    // cover unused variables with unit clauses
    std::set<int> used;
    for (auto& [vs, positive] : clauses)
        for (int v : vs) used.insert(v);
    for (int v = 0; v < nv; v++) {
        if (used.count(v)) continue;
        fid at = -1;
        for (auto& [f, fc] : em.faces) {
            for (dart d : fc.darts)
                if (em.head(d) == v) { at = f; break; }
            if (at >= 0) break;
        }
        if (!plant(planted++, 1, at, v)) fail("InstanceTooSmall", "internal: coverage clause missed");
    }

    mp_instance inst;
    for (auto& [vs, positive] : clauses) {
        clause c;
        for (int v : vs) c.insert(positive ? pos(v) : neg(v));
        inst.f.clauses.push_back(c);
    }
    for (int v = 0; v < nv; v++) inst.cycle.order.push_back(v);
    inst.ig = augment(build_incidence(inst.f, incidence_kind::variable_clause), inst.f, inst.cycle);
    // rename scratch edges onto the incidence graph's ids (vertex ids already match)
    std::map<vid, vid> vmap;
    for (vid v : em.g.vertices) vmap[v] = v;
    std::map<eid, eid> emap;
    std::map<std::pair<int, int>, eid> occ_edge;
    for (auto& [e, uv] : inst.ig.g.edges) {
        if (inst.ig.cycle_edges.count(e)) continue;
        occ_edge[{inst.ig.clause_of.at(uv.second), inst.ig.lit_of.at(uv.first).var}] = e;
    }
    std::vector<eid> cycv(inst.ig.cycle_edges.begin(), inst.ig.cycle_edges.end());
    for (int k = 0; k < nv; k++) emap[k] = cycv[k];
    for (auto& [key, e] : scratch_edge) emap[e] = occ_edge.at(key);
    inst.em = relabel_embedding(em, vmap, emap, inst.ig.g);
    if (!check_valid(inst.em, inst.ig, inst.f)) fail("InstanceTooSmall", "internal: generated instance invalid");
    return inst;
}

namespace detail {

// scratch polygon over the positions of a cyclic order, edges t:(t, t+1)
inline embedding polygon_embedding(int n) {
    embedding em;
    for (int k = 0; k < n; k++) {
        em.g.vertices.insert(k);
        em.g.edges[k] = {k, (k + 1) % n};
    }
    face inner, outer;
    for (int k = 0; k < n; k++) inner.darts.push_back(dart{k, 0});
    for (int k = n - 1; k >= 0; k--) outer.darts.push_back(dart{k, 1});
    em.faces[0] = inner;
    em.faces[1] = outer;
    em.outer = 1;
    em.bump_counters();
    em.check();
    return em;
}

inline bool face_has_corner(const embedding& em, fid f, vid v) {
    for (dart d : em.faces.at(f).darts)
        if (em.head(d) == v) return true;
    return false;
}

}  // namespace detail

// Deterministic literal-planar witness for a formula and literal cycle: the
// cycle becomes a polygon, paired edges become interior chords, clause nodes
// are planted in exterior faces.  Fails with NotValidLlp when the cycle's
// pairing is crossing or some clause cannot reach all its literals from one
// exterior face.
inline llp_instance llp_from_layout(const cnf& f, const literal_cycle& lc) {
    f.validate();
    if (!is_linear(f)) fail("NotValidLlp", "formula is not linear");
    int L = (int)lc.order.size();
    embedding em = detail::polygon_embedding(L);
    std::set<eid> cycs;
    for (int k = 0; k < L; k++) cycs.insert(k);
    std::map<literal, int> post;
    for (int t = 0; t < L; t++) post[lc.order[t]] = t;
    std::set<int> vars;
    for (auto& l : lc.order) vars.insert(l.var);

    auto side_face_with = [&](std::vector<vid> need, bool inside) -> fid {
        auto labels = cycle_side_labels(em, cycs);
        for (auto& [fc, fdarts] : em.faces) {
            if (labels.at(fc) != inside) continue;
            bool all = true;
            for (vid v : need)
                if (!detail::face_has_corner(em, fc, v)) all = false;
            if (all) return fc;
        }
        return -1;
    };

    std::map<int, eid> paired_scratch;
    for (int v : vars) {
        fid at = side_face_with({post.at(pos(v)), post.at(neg(v))}, true);
        if (at < 0) fail("NotValidLlp", "paired edges cross in this literal cycle");
        paired_scratch[v] = em.next_eid;
        em = add_edge(em, post.at(pos(v)), post.at(neg(v)), at);
    }
    std::map<std::pair<int, literal>, eid> scratch_edge;
    for (int ci = 0; ci < (int)f.clauses.size(); ci++) {
        std::vector<literal> ls(f.clauses[ci].begin(), f.clauses[ci].end());
        std::vector<vid> need;
        for (auto& l : ls) need.push_back(post.at(l));
        fid at = side_face_with(need, false);
        if (at < 0) fail("NotValidLlp", "clause literals not on a common exterior face");
        vid cn = L + ci;
        scratch_edge[{ci, ls[0]}] = em.next_eid;
        em = add_edge(em, post.at(ls[0]), cn, at);
        for (size_t i = 1; i < ls.size(); i++) {
            fid f2 = -1;
            for (auto& [fc, fdarts] : em.faces)
                if (detail::face_has_corner(em, fc, cn) && detail::face_has_corner(em, fc, post.at(ls[i]))) {
                    f2 = fc;
                    break;
                }
            if (f2 < 0) fail("NotValidLlp", "clause literal unreachable from the clause node");
            scratch_edge[{ci, ls[i]}] = em.next_eid;
            em = add_edge(em, post.at(ls[i]), cn, f2);
        }
    }

    incidence_graph ig = augment(build_incidence(f, incidence_kind::literal_clause), f, lc);
    std::map<int, vid> clause_node;
    for (auto& [cn, ci] : ig.clause_of) clause_node[ci] = cn;
    std::map<vid, vid> vmap;
    for (int t = 0; t < L; t++) vmap[t] = ig.node_of.at(lc.order[t]);
    for (int ci = 0; ci < (int)f.clauses.size(); ci++) vmap[L + ci] = clause_node.at(ci);
    std::map<std::pair<int, literal>, eid> occ_edge;
    for (auto& [e, uv] : ig.g.edges) {
        if (ig.cycle_edges.count(e) || ig.paired_edges.count(e)) continue;
        occ_edge[{ig.clause_of.at(uv.second), ig.lit_of.at(uv.first)}] = e;
    }
    std::map<eid, eid> emap;
    std::vector<eid> cycv(ig.cycle_edges.begin(), ig.cycle_edges.end());
    for (int t = 0; t < L; t++) emap[t] = cycv[t];
    std::vector<eid> pev(ig.paired_edges.begin(), ig.paired_edges.end());
    std::vector<int> vsorted(vars.begin(), vars.end());
    for (size_t i = 0; i < pev.size(); i++) emap[paired_scratch.at(vsorted[i])] = pev[i];
    for (auto& [key, e] : scratch_edge) emap[e] = occ_edge.at(key);
    llp_instance out;
    out.f = f;
    out.cycle = lc;
    out.ig = ig;
    out.em = relabel_embedding(em, vmap, emap, ig.g);
    if (!check_valid(out.em, out.ig, out.f)) fail("NotValidLlp", "internal: layout not valid");
    return out;
}

// Random linear literal-planar instance: a random non-crossing pairing of
// 2*nvars literal positions gives the cycle; clauses are sampled from corners
// of exterior faces and kept only when the formula stays linear.
inline llp_instance random_llp_instance(std::mt19937& rng, int nvars, int nclauses) {
    if (nvars < 2) fail("InstanceTooSmall", "a literal cycle needs at least 2 variables");
    auto pick = [&](int n) { return (int)(rng() % (unsigned)n); };
    for (int attempt = 0; attempt < 50; attempt++) {
        // random balanced nesting of nvars pairs over 2*nvars positions
        int L = 2 * nvars;
        std::vector<literal> order(L, literal{-1, false});
        std::vector<int> stack;
        int opened = 0, closed = 0;
        for (int t = 0; t < L; t++) {
            bool can_open = opened < nvars;
            bool can_close = !stack.empty();
            bool open = can_open && (!can_close || pick(2) == 0);
            // must close if the remaining slots are exactly the open pairs
            if (can_close && (L - t == (int)stack.size())) open = false;
            if (open) {
                bool neg_first = pick(2) == 0;
                order[t] = literal{opened, neg_first};
                stack.push_back(t);
                opened++;
            } else {
                int s = stack.back();
                stack.pop_back();
                order[t] = !order[s];
                closed++;
            }
        }
        (void)closed;
        literal_cycle lc{order};
        // sample linear clauses from exterior-face corners of the layout;
        // rebuild the layout as the clause list grows
        cnf f;
        for (int tries = 0; (int)f.clauses.size() < nclauses && tries < 20 * nclauses + 20; tries++) {
            cnf cand = f;
            // choose literals that currently share an exterior face
            llp_instance partial;
            cnf fcov = f;
            std::set<int> have;
            for (auto& c : f.clauses)
                for (auto& l : c) have.insert(l.var);
            for (int v = 0; v < nvars; v++)
                if (!have.count(v)) fcov.add({pos(v)});
            try {
                partial = llp_from_layout(fcov, lc);
            } catch (const error&) {
                break;  // layout became infeasible; give up on this attempt
            }
            auto labels = cycle_side_labels(partial.em, partial.ig.cycle_edges);
            std::vector<fid> outs;
            for (auto& [fc, fdarts] : partial.em.faces)
                if (!labels.at(fc)) outs.push_back(fc);
            fid fc = outs[pick((int)outs.size())];
            std::vector<literal> corners;
            for (dart d : partial.em.faces.at(fc).darts) {
                vid h = partial.em.head(d);
                auto it = partial.ig.lit_of.find(h);
                if (it == partial.ig.lit_of.end()) continue;
                if (std::find(corners.begin(), corners.end(), it->second) == corners.end()) corners.push_back(it->second);
            }
            if (corners.empty()) continue;
            std::shuffle(corners.begin(), corners.end(), rng);
            corners.resize(std::min((int)corners.size(), 1 + pick(3)));
            clause c(corners.begin(), corners.end());
            bool contradictory = false;
            for (auto& l : c)
                if (c.count(!l)) contradictory = true;
            if (contradictory) continue;
            cand.clauses.push_back(c);
            if (!is_linear(cand)) continue;
            f = cand;
        }
        std::set<int> have;
        for (auto& c : f.clauses)
            for (auto& l : c) have.insert(l.var);
        for (int v = 0; v < nvars; v++)
            if (!have.count(v)) f.add({literal{v, pick(2) == 0}});
        try {
            return llp_from_layout(f, lc);
        } catch (const error&) {
            continue;
        }
    }
    fail("InstanceTooSmall", "could not sample a literal-planar instance");
}

// Brute-force monotone-planarity oracle: enumerate every rotation system of
// the augmented variable-clause graph and look for a planar embedding that
// separates positive from negative clauses.  Exponential; desk scale only.
inline std::optional<embedding> brute_force_mp_embedding(const cnf& f, const variable_cycle& vc,
                                                         long long cap = 20'000'000) {
    incidence_graph ig = augment(build_incidence(f, incidence_kind::variable_clause), f, vc);
    std::vector<vid> vs(ig.g.vertices.begin(), ig.g.vertices.end());
    std::vector<std::vector<dart>> base(vs.size());
    long long total = 1;
    for (size_t i = 0; i < vs.size(); i++) {
        for (auto& [e, uv] : ig.g.edges) {
            if (uv.first == vs[i]) base[i].push_back(dart{e, 0});
            if (uv.second == vs[i]) base[i].push_back(dart{e, 1});
        }
        long long perms = 1;
        for (int k = 2; k < (int)base[i].size(); k++) perms *= k;  // (deg-1)! cyclic orders
        total *= perms;
        if (total > cap) fail("InstanceTooLarge", "rotation system count exceeds the cap");
    }
    // odometer over per-vertex cyclic orders: fix the first dart, permute the rest
    std::vector<std::vector<dart>> rest(vs.size());
    for (size_t i = 0; i < vs.size(); i++) rest[i] = {base[i].begin() + (base[i].empty() ? 0 : 1), base[i].end()};
    std::vector<std::vector<int>> perm(vs.size());
    for (size_t i = 0; i < vs.size(); i++) {
        perm[i].resize(rest[i].size());
        for (size_t k = 0; k < rest[i].size(); k++) perm[i][k] = (int)k;
    }
    auto advance = [&]() {
        for (size_t i = 0; i < vs.size(); i++)
            if (std::next_permutation(perm[i].begin(), perm[i].end())) return true;
        return false;
    };
    do {
        std::map<vid, std::vector<dart>> rots;
        for (size_t i = 0; i < vs.size(); i++) {
            if (base[i].empty()) continue;
            std::vector<dart> r{base[i][0]};
            for (int k : perm[i]) r.push_back(rest[i][k]);
            rots[vs[i]] = r;
        }
        auto faces = faces_from_rotation(ig.g, rots);
        long v = (long)ig.g.vertices.size(), e = (long)ig.g.edges.size();
        if (v - e + (long)faces.size() != 2) continue;
        embedding em = embedding_from_faces(ig.g, faces);
        bool ok = false;
        try {
            ok = check_valid(em, ig, f);
        } catch (const error&) {
            ok = false;
        }
        if (ok) return em;
    } while (advance());
    return std::nullopt;
}

}  // namespace planar
