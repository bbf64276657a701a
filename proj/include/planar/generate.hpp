#pragma once
// Seeded random instance generation: planar embeddings grown by surgery, and
// random dually connected matchings for augmentation instances.

#include <optional>
#include <random>

#include "planar/cycle_augment.hpp"
#include "planar/embedding.hpp"

namespace planar {

inline embedding triangle_embedding() {
    multigraph g;
    g.vertices = {0, 1, 2};
    g.edges[0] = {0, 1};
    g.edges[1] = {1, 2};
    g.edges[2] = {2, 0};
    face inner{{dart{0, 0}, dart{1, 0}, dart{2, 0}}};
    face outer{{dart{2, 1}, dart{1, 1}, dart{0, 1}}};
    return embedding_from_faces(g, {inner, outer}, 1);
}

namespace detail {

template <class T>
inline const T& pick(std::mt19937& rng, const std::vector<T>& v) {
    return v[std::uniform_int_distribution<size_t>(0, v.size() - 1)(rng)];
}

inline fid random_face(std::mt19937& rng, const embedding& em) {
    std::vector<fid> fs;
    for (auto& [f, fc] : em.faces) fs.push_back(f);
    return pick(rng, fs);
}

}  // namespace detail

// One random surgery step that grows the embedding: pendant vertex, edge
// subdivision, or a chord splitting a face.  Always applicable.
inline embedding random_grow_step(std::mt19937& rng, const embedding& em) {
    int op = std::uniform_int_distribution<int>(0, 2)(rng);
    if (op == 0) {
        fid f = detail::random_face(rng, em);
        auto& fd = em.faces.at(f).darts;
        int i = std::uniform_int_distribution<int>(0, (int)fd.size() - 1)(rng);
        embedding e2 = em;
        vid u = e2.head(fd[i]);
        return add_edge(e2, u, e2.next_vid, f, i);
    }
    if (op == 1) {
        std::vector<eid> es;
        for (auto& [e, uv] : em.g.edges) es.push_back(e);
        return subdivide_edge(em, detail::pick(rng, es)).em;
    }
    fid f = detail::random_face(rng, em);
    auto& fd = em.faces.at(f).darts;
    int n = (int)fd.size();
    int i = std::uniform_int_distribution<int>(0, n - 1)(rng);
    int j = std::uniform_int_distribution<int>(0, n - 1)(rng);
    if (i == j) j = (j + 1) % n;
    if (i == j) {  // face of length 1: hug the single corner with a loop
        vid u = em.head(fd[i]);
        return add_edge(em, u, u, f, i);
    }
    return add_edge(em, em.head(fd[i]), em.head(fd[j]), f, i, j);
}

// Random connected planar embedding with about `target_v` vertices and a few
// extra chords; grown from a triangle so it is planar by construction.
inline embedding random_planar_embedding(std::mt19937& rng, int target_v, int extra_edges = 3) {
    embedding em = triangle_embedding();
    while ((int)em.g.vertices.size() < target_v) em = random_grow_step(rng, em);
    for (int k = 0; k < extra_edges; k++) em = random_grow_step(rng, em);
    return em;
}

// A simple variant (no loops or parallel edges), for instances whose matching
// edges must have two distinct endpoints.
inline embedding random_planar_simple(std::mt19937& rng, int target_v, int extra_edges = 3) {
    for (int attempt = 0;; attempt++) {
        embedding em = triangle_embedding();
        int guard = 0;
        while (((int)em.g.vertices.size() < target_v || extra_edges > 0) && guard++ < 400) {
            embedding e2 = random_grow_step(rng, em);
            bool simple = true;
            std::set<std::pair<vid, vid>> seen;
            for (auto& [e, uv] : e2.g.edges) {
                auto key = std::minmax(uv.first, uv.second);
                if (uv.first == uv.second || !seen.insert({key.first, key.second}).second) simple = false;
            }
            if (!simple) continue;
            bool grew_edge_only = e2.g.vertices.size() == em.g.vertices.size();
            if (grew_edge_only) {
                if (extra_edges <= 0) continue;
                extra_edges--;
            }
            em = e2;
        }
        if ((int)em.g.vertices.size() >= target_v) return em;
    }
}

// Random dually connected matching on `em.g`; nullopt if none found within
// the attempt budget.
inline std::optional<std::pair<augment_instance, std::set<eid>>> random_kite_instance(std::mt19937& rng,
                                                                                     const multigraph& g,
                                                                                     int matching_size,
                                                                                     int attempts = 200) {
    std::vector<eid> es;
    for (auto& [e, uv] : g.edges)
        if (uv.first != uv.second) es.push_back(e);
    for (int t = 0; t < attempts; t++) {
        std::vector<eid> shuffled = es;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        std::set<eid> eprime;
        std::set<vid> used;
        for (eid e : shuffled) {
            if ((int)eprime.size() == matching_size) break;
            auto [u, v] = g.ends(e);
            if (used.count(u) || used.count(v)) continue;
            eprime.insert(e);
            used.insert(u);
            used.insert(v);
        }
        if ((int)eprime.size() != matching_size) continue;
        augment_instance inst{g, used};
        if (is_dually_connected_matching(inst, eprime)) return std::make_pair(inst, eprime);
    }
    return std::nullopt;
}

}  // namespace planar
