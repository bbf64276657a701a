#pragma once
// Combinatorial planar embeddings: faces as cyclic dart sequences, duals,
// and the surgery operations (edge addition/deletion, vertex relaxation,
// edge contraction, smoothing/subdivision).

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace planar {

using vid = int;
using eid = int;
using fid = int;

struct error : std::runtime_error {
    std::string kind;
    error(std::string k, const std::string& msg) : std::runtime_error(k + ": " + msg), kind(std::move(k)) {}
};

[[noreturn]] inline void fail(const char* kind, const std::string& msg) { throw error(kind, msg); }

struct multigraph {
    std::set<vid> vertices;
    // endpoints stored as an ordered pair; the edge itself is undirected
    std::map<eid, std::pair<vid, vid>> edges;

    bool has_vertex(vid v) const { return vertices.count(v) != 0; }
    bool has_edge(eid e) const { return edges.count(e) != 0; }
    std::pair<vid, vid> ends(eid e) const { return edges.at(e); }

    int degree(vid v) const {
        int d = 0;
        for (auto& [e, uv] : edges) {
            if (uv.first == v) d++;
            if (uv.second == v) d++;
        }
        return d;
    }
    std::vector<eid> incident(vid v) const {
        std::vector<eid> out;
        for (auto& [e, uv] : edges)
            if (uv.first == v || uv.second == v) out.push_back(e);
        return out;
    }
    bool connected() const {
        if (vertices.empty()) return true;
        std::set<vid> seen{*vertices.begin()};
        std::vector<vid> stack{*vertices.begin()};
        while (!stack.empty()) {
            vid v = stack.back();
            stack.pop_back();
            for (auto& [e, uv] : edges) {
                vid w = -1;
                if (uv.first == v) w = uv.second;
                else if (uv.second == v) w = uv.first;
                else continue;
                if (seen.insert(w).second) stack.push_back(w);
            }
        }
        return seen.size() == vertices.size();
    }
};

// One of the two occurrences of an edge. side 0 traverses the stored pair
// first->second, side 1 the reverse.
struct dart {
    eid edge = -1;
    int side = 0;
    bool operator==(const dart& o) const { return edge == o.edge && side == o.side; }
    bool operator!=(const dart& o) const { return !(*this == o); }
    bool operator<(const dart& o) const { return edge != o.edge ? edge < o.edge : side < o.side; }
};

struct face {
    std::vector<dart> darts;  // cyclic
    size_t size() const { return darts.size(); }
};

// Where a dart sits in the face system.
struct dart_pos {
    fid f = -1;
    int idx = -1;  // 0-based position within the face
};

struct embedding {
    multigraph g;
    std::map<fid, face> faces;
    fid outer = -1;
    // monotone fresh-id counters; surgery never reuses ids
    vid next_vid = 0;
    eid next_eid = 0;
    fid next_fid = 0;

    vid tail(dart d) const {
        auto& uv = g.edges.at(d.edge);
        return d.side == 0 ? uv.first : uv.second;
    }
    vid head(dart d) const { return tail(dart{d.edge, 1 - d.side}); }
    static dart reverse(dart d) { return dart{d.edge, 1 - d.side}; }

    void bump_counters() {
        for (vid v : g.vertices) next_vid = std::max(next_vid, v + 1);
        for (auto& [e, uv] : g.edges) next_eid = std::max(next_eid, e + 1);
        for (auto& [f, fc] : faces) next_fid = std::max(next_fid, f + 1);
    }
    vid fresh_vid() { return next_vid++; }
    eid fresh_eid() { return next_eid++; }
    fid fresh_fid() { return next_fid++; }

    std::map<dart, dart_pos> dart_index() const {
        std::map<dart, dart_pos> ix;
        for (auto& [f, fc] : faces)
            for (int i = 0; i < (int)fc.darts.size(); i++) {
                auto [it, fresh] = ix.emplace(fc.darts[i], dart_pos{f, i});
                if (!fresh) fail("MalformedEmbedding", "dart appears twice");
            }
        return ix;
    }

    // structural well-formedness: dart partition + closed walks
    void check() const {
        auto ix = dart_index();
        for (auto& [e, uv] : g.edges) {
            if (!g.has_vertex(uv.first) || !g.has_vertex(uv.second))
                fail("MalformedEmbedding", "edge endpoint not declared");
            if (!ix.count(dart{e, 0}) || !ix.count(dart{e, 1}))
                fail("MalformedEmbedding", "dart missing from face system");
        }
        if ((size_t)2 * g.edges.size() != ix.size())
            fail("MalformedEmbedding", "stray dart");
        for (auto& [f, fc] : faces) {
            if (fc.darts.empty()) fail("MalformedEmbedding", "empty face");
            for (size_t i = 0; i < fc.darts.size(); i++) {
                dart a = fc.darts[i];
                dart b = fc.darts[(i + 1) % fc.darts.size()];
                if (head(a) != tail(b)) fail("MalformedEmbedding", "face walk not closed");
            }
        }
        if (!faces.empty() && !faces.count(outer)) fail("MalformedEmbedding", "outer face id unknown");
    }
};

inline bool verify_planar(const embedding& em) {
    em.check();
    long v = (long)em.g.vertices.size();
    long e = (long)em.g.edges.size();
    long f = (long)em.faces.size();
    if (v == 1 && e == 0) return f == 0;  // trivially planar, excluded from surgery
    return v - e + f == 2;
}

// Other occurrence of the edge addressed by (f, i); indices are 1-based and
// wrap modulo the face length, matching the usual presentation.
inline std::pair<fid, int> other(const embedding& em, fid f, int i) {
    auto it = em.faces.find(f);
    if (it == em.faces.end() || i < 1) fail("IndexOutOfFace", "bad face address");
    int n = (int)it->second.darts.size();
    dart d = it->second.darts[(i - 1) % n];
    auto ix = em.dart_index();
    dart_pos p = ix.at(embedding::reverse(d));
    return {p.f, p.idx + 1};
}

// ---- rotation system -------------------------------------------------------
//
// The clockwise successor of an out-dart a at v is reverse(p) where p is the
// predecessor of a in a's face.  This reproduces the appendix's clockwise
// walk around each vertex.

inline dart rot_next(const embedding& em, const std::map<dart, dart_pos>& ix, dart a) {
    dart_pos p = ix.at(a);
    auto& fd = em.faces.at(p.f).darts;
    dart pred = fd[(p.idx + (int)fd.size() - 1) % fd.size()];
    return embedding::reverse(pred);
}

// clockwise out-darts around v, starting from the smallest incident dart
inline std::vector<dart> rotation(const embedding& em, vid v) {
    auto ix = em.dart_index();
    dart start{-1, 0};
    for (auto& [d, p] : ix)
        if (em.tail(d) == v) { start = d; break; }
    if (start.edge < 0) return {};
    std::vector<dart> out;
    dart cur = start;
    do {
        out.push_back(cur);
        cur = rot_next(em, ix, cur);
    } while (cur != start);
    return out;
}

// rotations for every vertex at once (single dart index build)
inline std::map<vid, std::vector<dart>> rotation_system(const embedding& em) {
    auto ix = em.dart_index();
    std::map<vid, std::vector<dart>> rot;
    std::set<dart> seen;
    for (auto& [d, p] : ix) {
        if (seen.count(d)) continue;
        vid v = em.tail(d);
        std::vector<dart> cyc;
        dart cur = d;
        do {
            cyc.push_back(cur);
            seen.insert(cur);
            cur = rot_next(em, ix, cur);
        } while (cur != d);
        auto& slot = rot[v];
        if (!slot.empty()) fail("MalformedEmbedding", "disconnected umbrella at a vertex");
        slot = cyc;
    }
    return rot;
}

// Rebuild faces from a rotation system (inverse of the derivation above):
// the successor in a face of a dart p entering v is rot_prev(reverse(p)).
// `rots` may cover a subgraph; only darts present in it are traced.
inline std::vector<face> faces_from_rotation(const multigraph& g, const std::map<vid, std::vector<dart>>& rots) {
    std::map<dart, dart> succ;  // face successor per dart
    for (auto& [v, cyc] : rots) {
        int n = (int)cyc.size();
        for (int i = 0; i < n; i++) {
            dart a = cyc[i];                      // out-dart at v
            dart prev = cyc[(i + n - 1) % n];     // rot_prev(a)
            // reverse(a) enters v; its face successor is rot_prev(a)
            succ[embedding::reverse(a)] = prev;
        }
    }
    std::vector<face> out;
    std::set<dart> used;
    for (auto& [d, s] : succ) {
        if (used.count(d)) continue;
        face fc;
        dart cur = d;
        do {
            // store the dart that is traversed, i.e. cur itself
            fc.darts.push_back(cur);
            used.insert(cur);
            cur = succ.at(cur);
        } while (cur != d);
        out.push_back(fc);
    }
    return out;
}

// default outer-face rule: the largest face, ties by smallest contained dart
inline fid pick_outer(const std::map<fid, face>& faces) {
    fid best = -1;
    for (auto& [f, fc] : faces) {
        if (best < 0) { best = f; continue; }
        auto& b = faces.at(best);
        if (fc.darts.size() > b.darts.size() ||
            (fc.darts.size() == b.darts.size() &&
             *std::min_element(fc.darts.begin(), fc.darts.end()) < *std::min_element(b.darts.begin(), b.darts.end())))
            best = f;
    }
    return best;
}

inline embedding embedding_from_faces(multigraph g, std::vector<face> fs, std::optional<fid> outer = std::nullopt) {
    embedding em;
    em.g = std::move(g);
    for (auto& fc : fs) em.faces.emplace((fid)em.faces.size(), fc);
    em.outer = outer ? *outer : pick_outer(em.faces);
    em.bump_counters();
    em.check();
    return em;
}

// ---- surgery ---------------------------------------------------------------

// Addition of edge uv in face f.  at_u / at_v select the corner: a position p
// with head(darts[p]) == u (resp. v); -1 takes the first such position.
// If v is not a vertex yet, it is added as a pendant inside f.
inline embedding add_edge(const embedding& em0, vid u, vid v, fid f, int at_u = -1, int at_v = -1) {
    embedding em = em0;
    auto it = em.faces.find(f);
    if (it == em.faces.end()) fail("VertexNotOnFace", "no such face");
    auto& fd = it->second.darts;
    int n = (int)fd.size();
    auto corner = [&](vid w, int want) -> int {
        for (int i = 0; i < n; i++)
            if (em.head(fd[i]) == w && (want < 0 || i == want)) return i;
        return -1;
    };
    int i = corner(u, at_u);
    if (i < 0) fail("VertexNotOnFace", "u has no corner on f");
    eid e = em.fresh_eid();

    if (!em.g.has_vertex(v)) {
        // pendant: face becomes (... darts[i], u->v, v->u, darts[i+1] ...)
        em.g.vertices.insert(v);
        em.next_vid = std::max(em.next_vid, v + 1);
        em.g.edges[e] = {u, v};
        std::vector<dart> nd(fd.begin(), fd.begin() + i + 1);
        nd.push_back(dart{e, 0});
        nd.push_back(dart{e, 1});
        nd.insert(nd.end(), fd.begin() + i + 1, fd.end());
        it->second.darts = nd;
        em.check();
        return em;
    }

    em.g.edges[e] = {u, v};
    if (u == v && (at_v < 0 || at_v == i)) {
        // self-loop hugging a single corner: loop dart alone forms a face
        std::vector<dart> nd(fd.begin(), fd.begin() + i + 1);
        nd.push_back(dart{e, 0});
        nd.insert(nd.end(), fd.begin() + i + 1, fd.end());
        it->second.darts = nd;
        fid f2 = em.fresh_fid();
        em.faces[f2].darts = {dart{e, 1}};
        em.check();
        return em;
    }
    int j = corner(v, at_v);
    if (j < 0 || j == i) fail("VertexNotOnFace", "v has no distinct corner on f");
    // F1 = (u->v, darts[j+1..i]),  F2 = (v->u, darts[i+1..j])  (cyclic segments)
    auto seg = [&](int from, int to) {  // positions from..to inclusive, cyclic
        std::vector<dart> s;
        for (int k = from;; k = (k + 1) % n) {
            s.push_back(fd[k]);
            if (k == to) break;
        }
        return s;
    };
    face f1, f2;
    f1.darts = {dart{e, 0}};
    auto s1 = seg((j + 1) % n, i);
    f1.darts.insert(f1.darts.end(), s1.begin(), s1.end());
    f2.darts = {dart{e, 1}};
    auto s2 = seg((i + 1) % n, j);
    f2.darts.insert(f2.darts.end(), s2.begin(), s2.end());
    fid id1 = em.fresh_fid(), id2 = em.fresh_fid();
    em.faces.erase(f);
    em.faces[id1] = f1;
    em.faces[id2] = f2;
    if (em.outer == f)
        em.outer = f1.darts.size() >= f2.darts.size() ? id1 : id2;
    em.check();
    return em;
}

// Deletion of an edge whose two darts lie in two distinct faces; the faces
// merge.  The merged face gets a fresh id.
inline embedding delete_edge(const embedding& em0, eid e) {
    embedding em = em0;
    if (!em.g.has_edge(e)) fail("UnknownEdge", "no such edge");
    auto ix = em.dart_index();
    dart_pos pa = ix.at(dart{e, 0});
    dart_pos pb = ix.at(dart{e, 1});
    if (pa.f == pb.f) fail("SingleFaceEdge", "both darts in one face (bridge)");
    auto& fa = em.faces.at(pa.f).darts;
    auto& fb = em.faces.at(pb.f).darts;
    face merged;
    for (int k = 1; k < (int)fa.size(); k++) merged.darts.push_back(fa[(pa.idx + k) % fa.size()]);
    for (int k = 1; k < (int)fb.size(); k++) merged.darts.push_back(fb[(pb.idx + k) % fb.size()]);
    bool was_outer = (em.outer == pa.f || em.outer == pb.f);
    em.faces.erase(pa.f);
    em.faces.erase(pb.f);
    em.g.edges.erase(e);
    if (merged.darts.empty()) {
        // only happens when the whole graph was that one edge
        em.outer = -1;
    } else {
        fid nf = em.fresh_fid();
        em.faces[nf] = merged;
        if (was_outer) em.outer = nf;
    }
    if (!em.g.connected()) fail("WouldDisconnect", "deletion would disconnect the graph");
    em.check();
    return em;
}

// Vertex relaxation of v into a fresh edge vv' between faces f1 != f2, both
// incident to v.  Returns the new embedding and reports v' and the new edge.
struct relax_result {
    embedding em;
    vid vprime;
    eid edge;
};

inline relax_result relax_vertex(const embedding& em0, vid v, fid f1, fid f2) {
    if (f1 == f2) fail("FacesNotDistinct", "f1 == f2");
    embedding em = em0;
    if (!em.faces.count(f1) || !em.faces.count(f2)) fail("FaceNotIncident", "unknown face");
    auto ix = em.dart_index();
    // clockwise rotation around v
    dart start{-1, 0};
    for (auto& [d, p] : ix)
        if (em.tail(d) == v) { start = d; break; }
    if (start.edge < 0) fail("FaceNotIncident", "v has no incident edge");
    std::vector<dart> rot;
    dart cur = start;
    do {
        rot.push_back(cur);
        cur = rot_next(em, ix, cur);
    } while (cur != start);
    int d = (int)rot.size();
    // rot[k] lies in face(rot[k]); that face holds the corner between rot[k+1] and rot[k]
    auto face_of = [&](dart a) { return ix.at(a).f; };
    int k1 = -1, k2 = -1;
    for (int k = 0; k < d; k++) {
        if (k1 < 0 && face_of(rot[k]) == f1) k1 = k;
        if (k2 < 0 && face_of(rot[k]) == f2) k2 = k;
    }
    if (k1 < 0 || k2 < 0) fail("FaceNotIncident", "face has no corner at v");

    vid vp = em.fresh_vid();
    em.g.vertices.insert(vp);
    eid e = em.fresh_eid();
    em.g.edges[e] = {v, vp};  // side 0: v -> v'

    // out-darts strictly after corner k1 up to corner k2 move to v'
    std::set<dart> moved;
    for (int k = (k1 + 1) % d;; k = (k + 1) % d) {
        moved.insert(rot[k]);
        if (k == k2) break;
    }
    for (dart m : moved) {
        auto& uv = em.g.edges.at(m.edge);
        if (m.side == 0) uv.first = vp;
        else uv.second = vp;
    }
    // insert v'->v in f1 just before rot[k1]; v->v' in f2 just before rot[k2]
    auto insert_before = [&](fid f, dart target, dart ins) {
        auto& fdarts = em.faces.at(f).darts;
        for (size_t i = 0; i < fdarts.size(); i++)
            if (fdarts[i] == target) {
                fdarts.insert(fdarts.begin() + i, ins);
                return;
            }
        fail("FaceNotIncident", "internal: target dart not on face");
    };
    insert_before(f1, rot[k1], dart{e, 1});
    insert_before(f2, rot[k2], dart{e, 0});
    em.check();
    return {em, vp, e};
}

namespace detail {
// contraction without the self-loop/parallel guards; used by smoothing too.
// `gone` is the endpoint merged away into the other one.
inline embedding contract_core(const embedding& em0, eid e, vid gone) {
    embedding em = em0;
    auto [u, v] = em.g.ends(e);
    if (gone == u) std::swap(u, v);  // keep u, remove v
    auto ix = em.dart_index();
    dart_pos pa = ix.at(dart{e, 0});  // u -> v
    dart_pos pb = ix.at(dart{e, 1});  // v -> u
    auto drop = [&](fid f, int idx, int idx2 = -1) {
        auto& fdarts = em.faces.at(f).darts;
        std::vector<dart> nd;
        for (int i = 0; i < (int)fdarts.size(); i++)
            if (i != idx && i != idx2) nd.push_back(fdarts[i]);
        fdarts = nd;
    };
    if (pa.f == pb.f) drop(pa.f, pa.idx, pb.idx);
    else {
        drop(pa.f, pa.idx);
        drop(pb.f, pb.idx);
    }
    em.g.edges.erase(e);
    for (auto& [e2, uv] : em.g.edges) {
        if (uv.first == v) uv.first = u;
        if (uv.second == v) uv.second = u;
    }
    em.g.vertices.erase(v);
    // a face can become empty only when the whole graph collapses to a point
    for (auto it = em.faces.begin(); it != em.faces.end();)
        it = it->second.darts.empty() ? em.faces.erase(it) : std::next(it);
    if (em.faces.empty()) em.outer = -1;
    else if (!em.faces.count(em.outer)) em.outer = pick_outer(em.faces);
    em.check();
    return em;
}
}  // namespace detail

// Edge contraction: endpoints merged into the first endpoint.  Requires the
// edge to be neither a self-loop nor parallel to another edge (contracting a
// 2-cycle would create a self-loop).
inline embedding contract_edge(const embedding& em0, eid e) {
    if (!em0.g.has_edge(e)) fail("UnknownEdge", "no such edge");
    auto [u, v] = em0.g.ends(e);
    if (u == v) fail("SelfLoop", "cannot contract a self-loop");
    for (auto& [e2, uv] : em0.g.edges)
        if (e2 != e && ((uv.first == u && uv.second == v) || (uv.first == v && uv.second == u)))
            fail("ShortCycle", "edge lies on a 2-cycle");
    return detail::contract_core(em0, e, v);
}

// Edge smoothing of a degree-2 vertex w: contract the larger-id incident
// edge, so the smaller id survives and subdivision/smoothing are mutually
// inverse without renaming.
inline embedding smooth_vertex(const embedding& em0, vid w) {
    auto inc = em0.g.incident(w);
    if (inc.size() != 2 || em0.g.degree(w) != 2) fail("WrongDegree", "smoothing needs degree 2");
    return detail::contract_core(em0, inc[1], w);
}

// Edge subdivision: vertex relaxation splitting e = uv into u-w and w-v.
// The u-side half keeps e's id; reports the fresh vertex and the new edge.
struct subdivide_result {
    embedding em;
    vid mid;
    eid new_edge;
};

inline subdivide_result subdivide_edge(const embedding& em0, eid e) {
    embedding em = em0;
    if (!em.g.has_edge(e)) fail("UnknownEdge", "no such edge");
    auto ix = em.dart_index();
    dart_pos pa = ix.at(dart{e, 0});
    dart_pos pb = ix.at(dart{e, 1});
    vid w = em.fresh_vid();
    em.g.vertices.insert(w);
    eid e2 = em.fresh_eid();
    auto [u, v] = em.g.ends(e);
    em.g.edges[e] = {u, w};
    em.g.edges[e2] = {w, v};
    auto& fa = em.faces.at(pa.f).darts;
    fa.insert(fa.begin() + pa.idx + 1, dart{e2, 0});  // u->w then w->v
    // positions may have shifted in the same face
    auto& fb = em.faces.at(pb.f).darts;
    for (size_t i = 0; i < fb.size(); i++)
        if (fb[i] == dart{e, 1}) {
            fb.insert(fb.begin() + i, dart{e2, 1});  // v->w then w->u
            break;
        }
    em.check();
    return {em, w, e2};
}

// Rename the vertices and edges of an embedding onto the ids of a target
// graph.  Dart sides flip where the target stores an edge's endpoints in the
// opposite order.  Face ids are kept.
inline embedding relabel_embedding(const embedding& em, const std::map<vid, vid>& vmap, const std::map<eid, eid>& emap,
                                   const multigraph& target) {
    em.check();
    if (em.g.vertices.size() != target.vertices.size() || em.g.edges.size() != target.edges.size())
        fail("RelabelMismatch", "vertex or edge count differs from the target");
    std::map<eid, bool> flip;
    for (auto& [e, uv] : em.g.edges) {
        auto eit = emap.find(e);
        if (eit == emap.end()) fail("RelabelMismatch", "edge missing from the rename map");
        if (!target.has_edge(eit->second)) fail("RelabelMismatch", "renamed edge unknown to the target");
        auto [a, b] = target.ends(eit->second);
        vid u = vmap.at(uv.first), v = vmap.at(uv.second);
        if (u == a && v == b) flip[e] = false;
        else if (u == b && v == a) flip[e] = true;
        else fail("RelabelMismatch", "edge endpoints disagree with the target");
    }
    embedding out;
    out.g = target;
    for (auto& [f, fc] : em.faces) {
        face nf;
        for (dart d : fc.darts) nf.darts.push_back(dart{emap.at(d.edge), flip.at(d.edge) ? 1 - d.side : d.side});
        out.faces[f] = nf;
    }
    out.outer = em.outer;
    out.bump_counters();
    out.check();
    return out;
}

// ---- dual ------------------------------------------------------------------

// Dual embedding: one vertex per face, dual(e) joins the faces holding e's
// darts, dual faces are the clockwise walks around primal vertices.  Dual
// vertex ids are primal face ids; dual face ids are primal vertex ids; edge
// ids carry over, so dual(dual(em)) == em literally.
inline embedding dual(const embedding& em) {
    em.check();
    if (!em.g.connected()) fail("Disconnected", "dual needs a connected graph");
    if (!verify_planar(em)) fail("NonPlanar", "dual needs a planar embedding");
    auto ix = em.dart_index();
    embedding du;
    for (auto& [f, fc] : em.faces) du.g.vertices.insert(f);
    // dual edge endpoints ordered so that the dual dart keeps its primal side:
    // primal dart d maps to the dual dart face(reverse(d)) -> face(d)
    for (auto& [e, uv] : em.g.edges)
        du.g.edges[e] = {ix.at(dart{e, 1}).f, ix.at(dart{e, 0}).f};
    auto rots = rotation_system(em);
    for (auto& [v, cyc] : rots) {
        face fc;
        for (dart a : cyc) fc.darts.push_back(a);  // same edge id and side
        du.faces[v] = fc;
    }
    du.outer = pick_outer(du.faces);
    du.bump_counters();
    du.check();
    return du;
}

// ---- face colorings and classification ------------------------------------

struct face_coloring {
    std::map<fid, int> color;  // 0 = red, 1 = blue
};

// proper 2-coloring of faces (adjacent across every edge); unique up to swap
inline face_coloring two_color_faces(const embedding& em) {
    auto ix = em.dart_index();
    face_coloring col;
    if (em.faces.empty()) return col;
    for (auto& [f0, fc0] : em.faces) {
        if (col.color.count(f0)) continue;
        col.color[f0] = 0;
        std::vector<fid> stack{f0};
        while (!stack.empty()) {
            fid f = stack.back();
            stack.pop_back();
            for (dart d : em.faces.at(f).darts) {
                fid g = ix.at(embedding::reverse(d)).f;
                int want = 1 - col.color.at(f);
                auto it = col.color.find(g);
                if (it == col.color.end()) {
                    col.color[g] = want;
                    stack.push_back(g);
                } else if (it->second != want)
                    fail("NotEulerian", "dual has an odd cycle");
            }
        }
    }
    return col;
}

inline bool is_eulerian(const multigraph& g) {
    if (!g.connected()) return false;
    for (vid v : g.vertices)
        if (g.degree(v) % 2 != 0) return false;
    return true;
}

// Classify every face as inside/outside a simple cycle given by its edge set:
// crossing a cycle edge flips sides, any other edge keeps them.  The outer
// face is outside.
inline std::map<fid, bool> cycle_side_labels(const embedding& em, const std::set<eid>& cycle_edges) {
    auto ix = em.dart_index();
    std::map<fid, bool> inside;
    inside[em.outer] = false;
    std::vector<fid> stack{em.outer};
    while (!stack.empty()) {
        fid f = stack.back();
        stack.pop_back();
        for (dart d : em.faces.at(f).darts) {
            fid g = ix.at(embedding::reverse(d)).f;
            bool want = inside.at(f) ^ (cycle_edges.count(d.edge) != 0);
            auto it = inside.find(g);
            if (it == inside.end()) {
                inside[g] = want;
                stack.push_back(g);
            } else if (it->second != want)
                fail("MalformedEmbedding", "edge set is not a simple separating cycle");
        }
    }
    return inside;
}

// ---- subgraph location -----------------------------------------------------

namespace detail {
// canonical form of a cyclic dart sequence: rotate so the smallest dart leads
inline std::vector<dart> canon_cycle(std::vector<dart> ds) {
    int n = (int)ds.size();
    int best = 0;
    for (int i = 1; i < n; i++)
        if (ds[i] < ds[best]) best = i;
    std::rotate(ds.begin(), ds.begin() + best, ds.end());
    return ds;
}
}  // namespace detail

// Given an embedding of G ∪ H, return the embedding of G induced by it plus
// the id of the unique G-face inside which H sits.
struct located_subgraph {
    embedding sub;  // the induced embedding of G
    fid at;         // the G-face containing H
};

inline located_subgraph locate_subgraph(const embedding& em, const std::set<eid>& g_edges) {
    em.check();
    // induced embedding of G: restrict the rotation system to G-edges
    auto rots = rotation_system(em);
    multigraph g;
    for (auto& [e, uv] : em.g.edges)
        if (g_edges.count(e)) {
            g.edges[e] = uv;
            g.vertices.insert(uv.first);
            g.vertices.insert(uv.second);
        }
    std::map<vid, std::vector<dart>> grots;
    for (auto& [v, cyc] : rots) {
        if (!g.has_vertex(v)) continue;
        std::vector<dart> kept;
        for (dart d : cyc)
            if (g_edges.count(d.edge)) kept.push_back(d);
        if (!kept.empty()) grots[v] = kept;
    }
    auto gfaces = faces_from_rotation(g, grots);
    // faces of G ∪ H made solely of G-darts are faces of G already; the one
    // G-face that does not appear among them is where H lives
    std::set<std::vector<dart>> pure;
    for (auto& [f, fc] : em.faces) {
        bool all_g = true;
        for (dart d : fc.darts)
            if (!g_edges.count(d.edge)) { all_g = false; break; }
        if (all_g) pure.insert(detail::canon_cycle(fc.darts));
    }
    located_subgraph out;
    out.sub.g = g;
    fid hit = -1;
    for (auto& fc : gfaces) {
        fid id = (fid)out.sub.faces.size();
        out.sub.faces[id] = fc;
        if (!pure.count(detail::canon_cycle(fc.darts))) {
            if (hit >= 0) fail("NotEmbeddedInSingleFace", "H spans several G-faces");
            hit = id;
        }
    }
    if (hit < 0) fail("NotEmbeddedInSingleFace", "no G-face absorbed H");
    out.sub.outer = pick_outer(out.sub.faces);
    out.sub.bump_counters();
    out.sub.check();
    out.at = hit;
    return out;
}

// ---- embedding equivalence -------------------------------------------------

// Faces as cyclic *edge-label* sequences (the paper's view of a face).  Two
// embeddings are compared as multisets of those sequences, up to rotation and
// a global reflection, with an optional edge-id translation for the left side.
inline std::multiset<std::vector<eid>> face_label_cert(const embedding& em, const std::map<eid, eid>& rename, bool reflect) {
    std::multiset<std::vector<eid>> cert;
    for (auto& [f, fc] : em.faces) {
        std::vector<eid> seq;
        for (dart d : fc.darts) {
            auto it = rename.find(d.edge);
            seq.push_back(it == rename.end() ? d.edge : it->second);
        }
        if (reflect) std::reverse(seq.begin(), seq.end());
        // canonical rotation: lexicographically smallest
        std::vector<eid> best = seq;
        for (size_t i = 1; i < seq.size(); i++) {
            std::rotate(seq.begin(), seq.begin() + 1, seq.end());
            if (seq < best) best = seq;
        }
        cert.insert(best);
    }
    return cert;
}

inline bool equivalent_embeddings(const embedding& a, const embedding& b, const std::map<eid, eid>& rename_a = {}) {
    auto cb = face_label_cert(b, {}, false);
    return face_label_cert(a, rename_a, false) == cb || face_label_cert(a, rename_a, true) == cb;
}

}  // namespace planar
