#pragma once
// Planarity testing and embedding computation on top of Boyer-Myrvold.
// Self-loops and parallel edges never change planarity, so the test runs on
// a simplified graph; for embeddings they are subdivided away first and the
// subdivision vertices smoothed back afterwards.

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/properties.hpp>

#include "planar/embedding.hpp"

namespace planar {

namespace detail {

using bgraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                                     boost::property<boost::edge_index_t, int>>;

// simple graph: one representative per unordered endpoint pair, loops dropped
inline std::map<std::pair<vid, vid>, eid> simplify(const multigraph& g) {
    std::map<std::pair<vid, vid>, eid> rep;
    for (auto& [e, uv] : g.edges) {
        if (uv.first == uv.second) continue;
        auto key = std::minmax(uv.first, uv.second);
        rep.emplace(std::pair<vid, vid>(key.first, key.second), e);
    }
    return rep;
}

}  // namespace detail

inline bool is_planar(const multigraph& g) {
    auto rep = detail::simplify(g);
    std::map<vid, int> vix;
    for (vid v : g.vertices) vix.emplace(v, (int)vix.size());
    detail::bgraph bg(vix.size());
    int ei = 0;
    for (auto& [uv, e] : rep) boost::add_edge(vix.at(uv.first), vix.at(uv.second), ei++, bg);
    return boost::boyer_myrvold_planarity_test(bg);
}

inline embedding compute_embedding(const multigraph& g) {
    if (!g.connected()) fail("Disconnected", "embedding needs a connected graph");
    if (g.vertices.size() == 1 && g.edges.empty()) {
        embedding em;
        em.g = g;
        em.bump_counters();
        return em;  // trivially planar, no faces
    }

    // proxy graph: subdivide parallel duplicates once and self-loops twice so
    // Boyer-Myrvold sees a simple graph
    eid base = 0;
    vid vbase = 0;
    for (auto& [e, uv] : g.edges) base = std::max(base, e + 1);
    for (vid v : g.vertices) vbase = std::max(vbase, v + 1);
    multigraph proxy;
    proxy.vertices = g.vertices;
    std::map<eid, std::vector<eid>> group;  // original edge -> its proxy segments (ascending)
    eid ne = base;
    vid nv = vbase;
    std::set<std::pair<vid, vid>> used;
    for (auto& [e, uv] : g.edges) {
        auto key = std::minmax(uv.first, uv.second);
        if (uv.first == uv.second) {
            vid a = nv++, b = nv++;
            proxy.vertices.insert(a);
            proxy.vertices.insert(b);
            proxy.edges[ne] = {uv.first, a};
            group[e].push_back(ne++);
            proxy.edges[ne] = {a, b};
            group[e].push_back(ne++);
            proxy.edges[ne] = {b, uv.first};
            group[e].push_back(ne++);
        } else if (!used.insert({key.first, key.second}).second) {
            vid m = nv++;
            proxy.vertices.insert(m);
            proxy.edges[ne] = {uv.first, m};
            group[e].push_back(ne++);
            proxy.edges[ne] = {m, uv.second};
            group[e].push_back(ne++);
        } else {
            proxy.edges[e] = uv;
        }
    }

    // Boyer-Myrvold on the proxy, vertices and edges in ascending id order
    std::map<vid, int> vix;
    std::vector<vid> vids;
    for (vid v : proxy.vertices) {
        vix.emplace(v, (int)vids.size());
        vids.push_back(v);
    }
    detail::bgraph bg(vids.size());
    std::vector<eid> eids;
    for (auto& [e, uv] : proxy.edges) {
        boost::add_edge(vix.at(uv.first), vix.at(uv.second), (int)eids.size(), bg);
        eids.push_back(e);
    }
    using edge_desc = boost::graph_traits<detail::bgraph>::edge_descriptor;
    std::vector<std::vector<edge_desc>> storage(boost::num_vertices(bg));
    auto emb_pm = boost::make_iterator_property_map(storage.begin(), boost::get(boost::vertex_index, bg));
    if (!boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                             boost::boyer_myrvold_params::embedding = emb_pm))
        fail("NonPlanar", "graph admits no planar embedding");

    auto eindex = boost::get(boost::edge_index, bg);
    std::map<vid, std::vector<dart>> rots;
    for (size_t i = 0; i < vids.size(); i++) {
        vid v = vids[i];
        std::vector<dart> cyc;
        for (edge_desc ed : storage[i]) {
            eid e = eids[eindex[ed]];
            auto& uv = proxy.edges.at(e);
            cyc.push_back(dart{e, uv.first == v ? 0 : 1});
        }
        if (!cyc.empty()) rots[v] = cyc;
    }
    auto fs = faces_from_rotation(proxy, rots);
    embedding em = embedding_from_faces(proxy, fs);

    // smooth the subdivision vertices back out; the lowest-id segment of each
    // group survives and is renamed to the original edge id
    for (vid w = vbase; w < nv; w++) em = smooth_vertex(em, w);
    std::map<eid, eid> rename;
    for (auto& [e, segs] : group) rename[*std::min_element(segs.begin(), segs.end())] = e;
    if (!rename.empty()) {
        embedding fixed;
        fixed.g.vertices = em.g.vertices;
        for (auto& [e, uv] : em.g.edges) {
            auto it = rename.find(e);
            fixed.g.edges[it == rename.end() ? e : it->second] = uv;
        }
        for (auto& [f, fc] : em.faces) {
            face nf;
            for (dart d : fc.darts) {
                auto it = rename.find(d.edge);
                nf.darts.push_back(dart{it == rename.end() ? d.edge : it->second, d.side});
            }
            fixed.faces[f] = nf;
        }
        fixed.outer = em.outer;
        fixed.bump_counters();
        em = fixed;
    }
    em.outer = pick_outer(em.faces);
    em.check();
    if (!verify_planar(em)) fail("NonPlanar", "internal: face count off after embedding");
    return em;
}

}  // namespace planar
