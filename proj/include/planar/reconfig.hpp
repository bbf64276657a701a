#pragma once
// Boolean reconfiguration: BFS over satisfying assignments connected by
// single-variable flips, plus a flip-sequence validator.

#include <optional>

#include "planar/sat_core.hpp"

namespace planar {

using flip_sequence = std::vector<int>;  // variable ids, applied in order

inline bool validate_flip_sequence(const cnf& f, const assignment& start, const flip_sequence& seq,
                                   const assignment* target = nullptr) {
    assignment nu = start;
    if (!satisfies(nu, f)) return false;
    for (int v : seq) {
        auto it = nu.find(v);
        if (it == nu.end()) return false;
        it->second = !it->second;
        if (!satisfies(nu, f)) return false;
    }
    return target == nullptr || nu == *target;
}

// Shortest flip sequence from nu to nu2 through satisfying assignments, or
// nullopt; deterministic (neighbors expanded in ascending variable order).
inline std::optional<flip_sequence> reconfig_bfs(const cnf& f, const assignment& nu, const assignment& nu2,
                                                 int cap = 20) {
    f.validate();
    std::set<int> vset = f.variables();
    std::vector<int> vs(vset.begin(), vset.end());
    if ((int)vs.size() > cap) fail("TooLarge", "state space is exponential in #variables");
    for (int v : vs)
        if (!nu.count(v) || !nu2.count(v)) fail("EndpointUnsat", "assignment not total");
    if (!satisfies(nu, f) || !satisfies(nu2, f)) fail("EndpointUnsat", "endpoint does not satisfy the formula");

    auto pack = [&](const assignment& a) {
        uint32_t bits = 0;
        for (size_t i = 0; i < vs.size(); i++)
            if (a.at(vs[i])) bits |= uint32_t(1) << i;
        return bits;
    };
    auto sat_bits = [&](uint32_t bits) {
        assignment a;
        for (size_t i = 0; i < vs.size(); i++) a[vs[i]] = (bits >> i) & 1;
        return satisfies(a, f);
    };
    uint32_t s = pack(nu), t = pack(nu2);
    std::map<uint32_t, std::pair<uint32_t, int>> pred;  // state -> (previous, flipped var)
    pred[s] = {s, -1};
    std::vector<uint32_t> frontier{s};
    while (!frontier.empty() && !pred.count(t)) {
        std::vector<uint32_t> next;
        for (uint32_t cur : frontier)
            for (size_t i = 0; i < vs.size(); i++) {
                uint32_t nb = cur ^ (uint32_t(1) << i);
                if (pred.count(nb) || !sat_bits(nb)) continue;
                pred[nb] = {cur, vs[i]};
                next.push_back(nb);
            }
        frontier = next;
    }
    if (!pred.count(t)) return std::nullopt;
    flip_sequence seq;
    for (uint32_t cur = t; cur != s; cur = pred.at(cur).first) seq.push_back(pred.at(cur).second);
    std::reverse(seq.begin(), seq.end());
    return seq;
}

}  // namespace planar
