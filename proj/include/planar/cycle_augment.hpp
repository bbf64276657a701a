#pragma once
// Planar cycle augmentation: brute-force oracle, kite-graphs built from
// dually connected matchings, and the face-merging algorithm that turns a
// kite-graph into a V'-cycle separating the induced edge partition.

#include <functional>
#include <optional>

#include "planar/embedding.hpp"
#include "planar/planarity.hpp"

namespace planar {

struct augment_instance {
    multigraph g;  // planar, connected
    std::set<vid> vprime;
};

struct kite_graph {
    std::set<vid> vprime;
    std::set<vid> fprime;      // one vertex per G-face used by the matching
    std::set<eid> kite_edges;  // the K_I edges inside `joint`
    embedding joint;           // embedding of G ∪ K_I
};

struct vprime_cycle {
    std::vector<vid> order;  // cyclic visiting order of V'
    std::vector<eid> edges;  // the fresh cycle edges
};

struct edge_partition {
    std::set<eid> red, blue;
};

// ---- brute-force oracle ----------------------------------------------------

inline std::optional<vprime_cycle> brute_force_vprime_cycle(const augment_instance& inst, size_t cap = 10) {
    if (inst.vprime.size() > cap) fail("InstanceTooLarge", "brute force is factorial in |V'|");
    if (inst.vprime.size() < 3) fail("InstanceTooLarge", "a cycle needs at least 3 vertices");
    std::vector<vid> vs(inst.vprime.begin(), inst.vprime.end());
    std::vector<vid> rest(vs.begin() + 1, vs.end());
    std::sort(rest.begin(), rest.end());
    do {
        if (rest.size() > 1 && rest.front() > rest.back()) continue;  // skip reflections
        multigraph g2 = inst.g;
        eid e = 0;
        for (auto& [id, uv] : g2.edges) e = std::max(e, id + 1);
        std::vector<vid> order{vs[0]};
        order.insert(order.end(), rest.begin(), rest.end());
        vprime_cycle cyc;
        cyc.order = order;
        for (size_t i = 0; i < order.size(); i++) {
            g2.edges[e] = {order[i], order[(i + 1) % order.size()]};
            cyc.edges.push_back(e++);
        }
        if (is_planar(g2)) return cyc;
    } while (std::next_permutation(rest.begin(), rest.end()));
    return std::nullopt;
}

// ---- dually connected matchings -------------------------------------------

inline bool is_dually_connected_matching(const augment_instance& inst, const std::set<eid>& eprime) {
    // V'-perfect matching
    std::map<vid, int> touched;
    for (eid e : eprime) {
        if (!inst.g.has_edge(e)) return false;
        auto [u, v] = inst.g.ends(e);
        if (u == v) return false;
        if (!inst.vprime.count(u) || !inst.vprime.count(v)) return false;
        touched[u]++;
        touched[v]++;
    }
    for (vid v : inst.vprime)
        if (touched[v] != 1) return false;
    // dual connectivity: keep only the dual edges of E'
    embedding em = compute_embedding(inst.g);
    auto ix = em.dart_index();
    std::map<fid, fid> parent;
    for (auto& [f, fc] : em.faces) parent[f] = f;
    std::function<fid(fid)> find = [&](fid x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (eid e : eprime) parent[find(ix.at(dart{e, 0}).f)] = find(ix.at(dart{e, 1}).f);
    fid root = find(em.faces.begin()->first);
    for (auto& [f, fc] : em.faces)
        if (find(f) != root) return false;
    return true;
}

// ---- kite construction -----------------------------------------------------

// Builds the joint embedding of G ∪ K_I from a dually connected matching:
// per matching edge uv, a face-node for each side of uv receives the four
// kite edges, attached so that each wedge face hugs uv tightly.
inline kite_graph build_kite_from_matching(const augment_instance& inst, const std::set<eid>& eprime) {
    if (!is_dually_connected_matching(inst, eprime))
        fail("NotDuallyConnectedMatching", "E' is not a dually connected matching");
    embedding em = compute_embedding(inst.g);
    // remember which original face each matching dart lies in
    std::map<dart, fid> orig_face;
    {
        auto ix = em.dart_index();
        for (eid e : eprime) {
            orig_face[dart{e, 0}] = ix.at(dart{e, 0}).f;
            orig_face[dart{e, 1}] = ix.at(dart{e, 1}).f;
        }
    }
    kite_graph kite;
    kite.vprime = inst.vprime;
    std::map<fid, vid> node_of;  // original G-face -> face-node vertex
    for (eid e : eprime)
        for (int side : {0, 1}) {
            dart d{e, side};
            auto ix = em.dart_index();
            dart_pos dp = ix.at(d);
            auto& fd = em.faces.at(dp.f).darts;
            int n = (int)fd.size();
            vid u = em.tail(d), v = em.head(d);
            fid of = orig_face.at(d);
            auto it = node_of.find(of);
            vid node;
            int at_node;  // a corner of the node on the current face
            if (it == node_of.end()) {
                node = em.next_vid;
                eid pend = em.next_eid;
                em = add_edge(em, u, node, dp.f, (dp.idx + n - 1) % n);
                node_of[of] = node;
                kite.kite_edges.insert(pend);
                // pendant kept the face id; locate the u->node dart
                at_node = -1;
                auto& fd2 = em.faces.at(dp.f).darts;
                for (int i = 0; i < (int)fd2.size(); i++)
                    if (fd2[i] == dart{pend, 0}) at_node = i;
            } else {
                node = it->second;
                // chord node-u first so the face starts (node->u, uv, ...)
                int at_u = (dp.idx + n - 1) % n;
                int corner = -1;
                for (int i = 0; i < n; i++)
                    if (em.head(fd[i]) == node) { corner = i; break; }
                if (corner < 0) fail("InternalInvariantViolation", "face node lost from face");
                eid chord1 = em.next_eid;
                em = add_edge(em, node, u, dp.f, corner, at_u);
                kite.kite_edges.insert(chord1);
                // the face holding uv now starts (node->u, uv, ...)
                auto ix2 = em.dart_index();
                dp = ix2.at(d);
                at_node = (int)em.faces.at(dp.f).darts.size() - 1;
            }
            // close the wedge with the chord v-node
            auto ix3 = em.dart_index();
            dp = ix3.at(d);
            eid chord2 = em.next_eid;
            em = add_edge(em, v, node, dp.f, dp.idx, at_node);
            kite.kite_edges.insert(chord2);
        }
    for (auto& [f, node] : node_of) kite.fprime.insert(node);
    kite.joint = em;
    // kite-graph invariants
    if (!verify_planar(em)) fail("InternalInvariantViolation", "joint embedding not planar");
    multigraph kg;
    for (eid e : kite.kite_edges) {
        auto [a, b] = em.g.ends(e);
        kg.edges[e] = {a, b};
        kg.vertices.insert(a);
        kg.vertices.insert(b);
    }
    if (!is_eulerian(kg)) fail("InternalInvariantViolation", "kite subgraph not Eulerian");
    for (vid v : kite.vprime)
        if (kg.degree(v) != 2) fail("InternalInvariantViolation", "V' degree != 2 in kite");
    return kite;
}

// ---- K-face structure of a joint embedding ---------------------------------

namespace detail {

struct kface_view {
    embedding kemb;                   // induced embedding of the kite subgraph
    std::map<fid, fid> joint_to_kf;   // every joint face -> kemb face id
    std::map<fid, int> color;         // proper 2-coloring of kemb faces
};

inline kface_view kfaces(const embedding& joint, const std::set<eid>& kite_edges) {
    kface_view kv;
    auto rots = rotation_system(joint);
    multigraph kg;
    for (eid e : kite_edges) {
        auto [a, b] = joint.g.ends(e);
        kg.edges[e] = {a, b};
        kg.vertices.insert(a);
        kg.vertices.insert(b);
    }
    std::map<vid, std::vector<dart>> krots;
    for (auto& [v, cyc] : rots) {
        if (!kg.has_vertex(v)) continue;
        std::vector<dart> kept;
        for (dart d : cyc)
            if (kite_edges.count(d.edge)) kept.push_back(d);
        if (!kept.empty()) krots[v] = kept;
    }
    kv.kemb.g = kg;
    for (auto& fc : faces_from_rotation(kg, krots)) kv.kemb.faces.emplace((fid)kv.kemb.faces.size(), fc);
    kv.kemb.outer = pick_outer(kv.kemb.faces);
    kv.kemb.bump_counters();
    kv.kemb.check();
    kv.color = two_color_faces(kv.kemb).color;

    // regions: joint faces connected across non-kite edges lie in one K-face
    std::map<fid, fid> parent;
    for (auto& [f, fc] : joint.faces) parent[f] = f;
    std::function<fid(fid)> find = [&](fid x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    auto ix = joint.dart_index();
    for (auto& [e, uv] : joint.g.edges)
        if (!kite_edges.count(e)) parent[find(ix.at(dart{e, 0}).f)] = find(ix.at(dart{e, 1}).f);
    std::map<fid, fid> root_to_kf;
    for (auto& [kf, fc] : kv.kemb.faces) {
        fid jf = ix.at(fc.darts.front()).f;  // joint face on the same side
        auto [it, fresh] = root_to_kf.emplace(find(jf), kf);
        if (!fresh) fail("InternalInvariantViolation", "two K-faces share a region");
    }
    for (auto& [f, fc] : joint.faces) kv.joint_to_kf[f] = root_to_kf.at(find(f));
    return kv;
}

}  // namespace detail

// The edge partition induced by the kite's unique face 2-coloring: red edges
// sit in red K-faces, blue in blue.  (Unique up to swapping the two classes.)
inline edge_partition partition_of(const embedding& joint, const std::set<eid>& kite_edges) {
    auto kv = detail::kfaces(joint, kite_edges);
    auto ix = joint.dart_index();
    edge_partition part;
    for (auto& [e, uv] : joint.g.edges) {
        if (kite_edges.count(e)) continue;
        int c = kv.color.at(kv.joint_to_kf.at(ix.at(dart{e, 0}).f));
        (c == 0 ? part.red : part.blue).insert(e);
    }
    return part;
}

// ---- the V'-cycle algorithm ------------------------------------------------

struct vprime_cycle_result {
    vprime_cycle cycle;
    edge_partition partition;
    embedding augmented;  // embedding of G ∪ π
    int merges = 0;
};

inline vprime_cycle_result compute_vprime_cycle(const augment_instance& inst, const kite_graph& kite0) {
    embedding em = kite0.joint;
    std::set<eid> kedges = kite0.kite_edges;
    std::set<vid> fprime = kite0.fprime;
    // entry validation of the kite invariants
    {
        multigraph kg;
        for (eid e : kedges) {
            if (!em.g.has_edge(e)) fail("InvalidKite", "kite edge missing from joint embedding");
            auto [a, b] = em.g.ends(e);
            kg.edges[e] = {a, b};
            kg.vertices.insert(a);
            kg.vertices.insert(b);
            if (kite0.vprime.count(a) == kite0.vprime.count(b)) fail("InvalidKite", "kite edge not between V' and F'");
        }
        if (!is_eulerian(kg)) fail("InvalidKite", "kite subgraph not Eulerian");
        for (vid v : kite0.vprime)
            if (kg.degree(v) != 2) fail("InvalidKite", "V' vertex degree != 2");
        if (!verify_planar(em)) fail("InvalidKite", "joint embedding not planar");
    }
    edge_partition part = partition_of(em, kedges);
    vprime_cycle_result out;
    out.partition = part;

    // 2-coloring computed once, carried as a color per joint face
    std::map<fid, int> jcolor;
    {
        auto kv = detail::kfaces(em, kedges);
        for (auto& [jf, kf] : kv.joint_to_kf) jcolor[jf] = kv.color.at(kf);
    }

    size_t faces_before = detail::kfaces(em, kedges).kemb.faces.size();
    while (true) {
        auto kv = detail::kfaces(em, kedges);
        size_t nf = kv.kemb.faces.size();
        if (nf != faces_before) fail("InternalInvariantViolation", "face count did not decrease by 1");
        if (nf <= 2) break;
        // color of each current K-face under the carried coloring
        auto ix = em.dart_index();
        std::map<fid, int> kcolor;
        for (auto& [jf, kf] : kv.joint_to_kf) {
            auto [it, fresh] = kcolor.emplace(kf, jcolor.at(jf));
            if (!fresh && it->second != jcolor.at(jf))
                fail("InternalInvariantViolation", "carried coloring inconsistent inside a K-face");
        }
        // select a face-node with two distinct same-colored incident K-faces
        bool done = false;
        for (vid f : fprime) {
            // incident K-faces, via this vertex's out-darts in the joint embedding
            std::vector<dart> rot = rotation(em, f);
            std::map<fid, dart> kf_witness;  // K-face -> an out-dart whose joint face sits in it
            for (dart a : rot) {
                fid jf = ix.at(a).f;
                kf_witness.emplace(kv.joint_to_kf.at(jf), a);
            }
            std::vector<fid> kfs;
            for (auto& [kf, a] : kf_witness) kfs.push_back(kf);
            for (size_t i = 0; i < kfs.size() && !done; i++)
                for (size_t j = i + 1; j < kfs.size() && !done; j++) {
                    if (kcolor.at(kfs[i]) != kcolor.at(kfs[j])) continue;
                    fid jf1 = ix.at(kf_witness.at(kfs[i])).f;
                    fid jf2 = ix.at(kf_witness.at(kfs[j])).f;
                    relax_result r = relax_vertex(em, f, jf1, jf2);
                    fid merged = r.em.next_fid;  // delete_edge assigns this fresh id
                    em = delete_edge(r.em, r.edge);
                    jcolor[merged] = jcolor.at(jf1);
                    jcolor.erase(jf1);
                    jcolor.erase(jf2);
                    fprime.insert(r.vprime);
                    out.merges++;
                    done = true;
                }
            if (done) break;
        }
        if (!done) fail("InternalInvariantViolation", "no same-colored face pair found");
        faces_before = nf - 1;
    }

    // the kite is now a single closed curve; smooth the face-nodes away
    for (vid f : fprime) {
        if (!em.g.has_vertex(f)) continue;
        if (em.g.degree(f) != 2) fail("InternalInvariantViolation", "face-node degree != 2 at the end");
        em = smooth_vertex(em, f);
    }
    std::set<eid> pi;
    for (eid e : kedges)
        if (em.g.has_edge(e)) pi.insert(e);
    // read the cycle order starting at the smallest V' vertex
    std::map<vid, std::vector<std::pair<eid, vid>>> adj;
    for (eid e : pi) {
        auto [a, b] = em.g.ends(e);
        adj[a].push_back({e, b});
        adj[b].push_back({e, a});
    }
    for (auto& [v, lst] : adj) {
        if (lst.size() != 2) fail("InternalInvariantViolation", "cycle is not 2-regular");
        std::sort(lst.begin(), lst.end());
    }
    if (adj.size() != kite0.vprime.size() || !std::all_of(adj.begin(), adj.end(), [&](auto& kvp) {
            return kite0.vprime.count(kvp.first) != 0;
        }))
        fail("InternalInvariantViolation", "cycle does not visit exactly V'");
    vid start = *kite0.vprime.begin();
    vid cur = start;
    eid via = adj[start][0].first;
    while (true) {
        out.cycle.order.push_back(cur);
        out.cycle.edges.push_back(via);
        auto [a, b] = em.g.ends(via);
        vid nxt = (a == cur) ? b : a;
        if (nxt == start) break;
        cur = nxt;
        via = (adj[cur][0].first == via) ? adj[cur][1].first : adj[cur][0].first;
    }
    if (out.cycle.order.size() != kite0.vprime.size())
        fail("InternalInvariantViolation", "cycle walk did not close over V'");
    out.augmented = em;
    return out;
}

// ---- separation check ------------------------------------------------------

// True iff the red edges all lie on one side of the cycle and the blue edges
// on the other, inside the given embedding of G ∪ π.
inline bool verify_separation(const embedding& augmented, const vprime_cycle& cycle, const edge_partition& part) {
    if (!verify_planar(augmented)) fail("NonPlanarAugmented", "augmented embedding not planar");
    std::set<eid> cyc(cycle.edges.begin(), cycle.edges.end());
    auto labels = cycle_side_labels(augmented, cyc);
    auto ix = augmented.dart_index();
    auto side = [&](eid e) { return labels.at(ix.at(dart{e, 0}).f); };
    bool ok_rb = true, ok_br = true;
    for (eid e : part.red) {
        if (!side(e)) ok_rb = false;
        if (side(e)) ok_br = false;
    }
    for (eid e : part.blue) {
        if (side(e)) ok_rb = false;
        if (!side(e)) ok_br = false;
    }
    return ok_rb || ok_br;
}

}  // namespace planar
