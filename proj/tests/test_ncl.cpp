#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "planar/ncl.hpp"

using namespace planar;

namespace {

// two vertices joined by three weight-2 edges, both OR
constraint_graph theta_or() {
    constraint_graph g;
    g.g.vertices = {0, 1};
    for (eid e = 0; e < 3; e++) {
        g.g.edges[e] = {0, 1};
        g.weight[e] = 2;
    }
    g.kind = {{0, node_kind::or_node}, {1, node_kind::or_node}};
    return g;
}

// two vertices joined by one weight-2 and two weight-1 edges, both AND
constraint_graph theta_and() {
    constraint_graph g;
    g.g.vertices = {0, 1};
    for (eid e = 0; e < 3; e++) {
        g.g.edges[e] = {0, 1};
        g.weight[e] = e == 0 ? 2 : 1;
    }
    g.kind = {{0, node_kind::and_node}, {1, node_kind::and_node}};
    return g;
}

// contract away all degree-2 vertices of a multigraph
multigraph smooth_all(multigraph m) {
    for (bool again = true; again;) {
        again = false;
        for (vid w : m.vertices) {
            if (m.degree(w) != 2) continue;
            auto winc = m.incident(w);
            std::vector<eid> inc(winc.begin(), winc.end());
            REQUIRE(inc.size() == 2);
            auto e1 = m.ends(inc[0]), e2 = m.ends(inc[1]);
            vid a = e1.first == w ? e1.second : e1.first;
            vid b = e2.first == w ? e2.second : e2.first;
            REQUIRE(a != b);
            m.edges[inc[0]] = {a, b};
            m.edges.erase(inc[1]);
            m.vertices.erase(w);
            again = true;
            break;
        }
    }
    return m;
}

}  // namespace

TEST_CASE("legality") {
    constraint_graph g = theta_or();
    CHECK(is_legal(g, {{0, 0}, {1, 1}, {2, 1}}));  // inflow a=2, b=4
    CHECK(!is_legal(g, {{0, 0}, {1, 0}, {2, 0}}));
    CHECK(!is_legal(g, {{0, 0}, {1, 1}}));  // partial orientation

    // AND vertex satisfied by its two weight-1 edges alone
    constraint_graph a = theta_and();
    CHECK(is_legal(a, {{0, 1}, {1, 0}, {2, 0}}));
    CHECK(!is_legal(a, {{0, 1}, {1, 0}, {2, 1}}));  // 0 gets only weight 1
}

TEST_CASE("flip") {
    constraint_graph g = theta_or();
    ncl_configuration c{{0, 0}, {1, 1}, {2, 1}};
    ncl_configuration c2 = flip(g, c, 1);
    CHECK(c2.at(1) == 0);
    CHECK(flip(g, c2, 1) == c);
    CHECK(!is_legal(g, flip(g, flip(g, c, 1), 2)));  // strips 1 of all inflow
    CHECK_THROWS_WITH_AS(flip(g, c, 7), doctest::Contains("UnknownEdge"), error);
}

TEST_CASE("configuration-to-configuration bfs") {
    constraint_graph g = theta_or();
    ncl_configuration s{{0, 0}, {1, 1}, {2, 1}};
    ncl_configuration t{{0, 1}, {1, 0}, {2, 0}};
    auto seq = c2c_bfs(g, s, t);
    REQUIRE(seq.has_value());
    CHECK(seq->size() == 3);
    ncl_configuration cur = s;
    for (eid e : *seq) {
        cur = flip(g, cur, e);
        CHECK(is_legal(g, cur));
    }
    CHECK(cur == t);
    CHECK(c2c_bfs(g, s, s)->empty());
    CHECK_THROWS_WITH_AS(c2c_bfs(g, s, {{0, 0}, {1, 0}, {2, 0}}), doctest::Contains("IllegalEndpoint"), error);

    // the all-AND theta has exactly two legal configurations, mutually frozen
    constraint_graph a = theta_and();
    auto legal = all_legal_configurations(a);
    REQUIRE(legal.size() == 2);
    CHECK(!c2c_bfs(a, legal[0], legal[1]).has_value());
}

TEST_CASE("formula encodes legality") {
    SUBCASE("clause shapes") {
        cnf f = ncl_formula(theta_or());
        REQUIRE(f.clauses.size() == 2);
        CHECK(f.clauses[0] == clause{neg(0), neg(1), neg(2)});  // vertex 0: some edge points back
        CHECK(f.clauses[1] == clause{pos(0), pos(1), pos(2)});
        cnf fa = ncl_formula(theta_and());
        REQUIRE(fa.clauses.size() == 4);
        // vertex 0, 2-weighted edge 0: (g^v | e^v) & (e^v | f^v)
        CHECK(fa.clauses[0] == clause{neg(2), neg(0)});
        CHECK(fa.clauses[1] == clause{neg(0), neg(1)});
        CHECK(fa.clauses[2] == clause{pos(2), pos(0)});
        CHECK(fa.clauses[3] == clause{pos(0), pos(1)});
    }
    SUBCASE("bijection over all orientations") {
        for (int seed = 0; seed < 12; seed++) {
            std::mt19937 rng(seed);
            constraint_graph g = random_constraint_graph(rng, seed % 3);
            cnf f = ncl_formula(g);
            CHECK(is_linear(f));
            std::vector<eid> es;
            for (auto& [e, uv] : g.g.edges) es.push_back(e);
            for (uint32_t bits = 0; bits < (uint32_t(1) << es.size()); bits++) {
                ncl_configuration c;
                for (size_t i = 0; i < es.size(); i++) {
                    auto [u, v] = g.g.ends(es[i]);
                    c[es[i]] = (bits >> i) & 1 ? v : u;
                }
                CHECK(is_legal(g, c) == satisfies(ncl_assignment(g, c), f));
            }
        }
    }
    SUBCASE("flips correspond") {
        std::mt19937 rng(5);
        constraint_graph g = random_constraint_graph(rng, 2);
        cnf f = ncl_formula(g);
        for (auto& c : all_legal_configurations(g))
            for (auto& [e, uv] : g.g.edges) {
                ncl_configuration c2 = flip(g, c, e);
                assignment nu = ncl_assignment(g, c);
                nu[(int)e] = !nu.at((int)e);
                CHECK(nu == ncl_assignment(g, c2));
                CHECK(is_legal(g, c2) == satisfies(nu, f));
            }
    }
}

TEST_CASE("literal-clause graph is a subdivision of the constraint graph") {
    for (int seed = 0; seed < 8; seed++) {
        std::mt19937 rng(40 + seed);
        constraint_graph g = random_constraint_graph(rng, seed % 3);
        cnf f = ncl_formula(g);
        incidence_graph ig = build_incidence(f, incidence_kind::literal_clause);
        multigraph m = ig.g;
        eid pe = 0;
        for (auto& [e, uv] : m.edges) pe = std::max(pe, e + 1);
        for (int x : f.variables()) m.edges[pe++] = {ig.node_of.at(pos(x)), ig.node_of.at(neg(x))};
        for (vid v : m.vertices) CHECK((m.degree(v) == 2 || m.degree(v) == 3));

        // lambda: OR vertex -> its clause node, AND vertex -> its 2-weighted literal node
        std::map<vid, vid> lambda;
        int ci = 0;
        for (vid v : g.g.vertices) {
            if (g.kind.at(v) == node_kind::or_node) {
                for (auto& [cn, i] : ig.clause_of)
                    if (i == ci) lambda[cn] = v;
                ci += 1;
            } else {
                eid two = 0;
                for (eid e : g.incident_sorted(v))
                    if (g.weight.at(e) == 2) two = e;
                lambda[ig.node_of.at(edge_literal(g, two, v))] = v;
                ci += 2;
            }
        }
        multigraph sm = smooth_all(m);
        CHECK(sm.vertices.size() == g.g.vertices.size());
        std::multiset<std::pair<vid, vid>> got, want;
        for (auto& [e, uv] : sm.edges) got.insert(std::minmax(lambda.at(uv.first), lambda.at(uv.second)));
        for (auto& [e, uv] : g.g.edges) want.insert(std::minmax(uv.first, uv.second));
        CHECK(got == want);
    }
}

TEST_CASE("reduction to literal-planar reconfiguration") {
    SUBCASE("three parallel edges") {
        constraint_graph g = theta_or();
        ncl_configuration s{{0, 0}, {1, 1}, {2, 1}};
        ncl_configuration t{{0, 1}, {1, 0}, {2, 0}};
        ncl_reduction red = ncl_to_llp_reconfig(g, s, t);
        CHECK(red.inst.f.clauses.size() == 2);
        CHECK(red.inst.f.variables().size() == 3);
        CHECK(is_linear(red.inst.f));
        CHECK(verify_planar(red.inst.em));
        CHECK(check_valid(red.inst.em, red.inst.ig, red.inst.f));
        CHECK(satisfies(red.nu, red.inst.f));
        CHECK(satisfies(red.nu2, red.inst.f));
        auto cseq = c2c_bfs(g, s, t);
        auto fseq = reconfig_bfs(red.inst.f, red.nu, red.nu2);
        REQUIRE(cseq.has_value());
        REQUIRE(fseq.has_value());
        CHECK(cseq->size() == fseq->size());
    }
    SUBCASE("malformed and illegal inputs") {
        constraint_graph g = theta_or();
        g.weight[0] = 1;
        ncl_configuration c{{0, 0}, {1, 1}, {2, 1}};
        CHECK_THROWS_WITH_AS(ncl_to_llp_reconfig(g, c, c), doctest::Contains("MalformedConstraintGraph"), error);
        constraint_graph ok = theta_or();
        CHECK_THROWS_WITH_AS(ncl_to_llp_reconfig(ok, c, {{0, 0}, {1, 0}, {2, 0}}),
                             doctest::Contains("IllegalEndpoint"), error);
    }
    SUBCASE("oracle agreement across the chain") {
        int frozen = 0;
        for (int seed = 0; seed < 10; seed++) {
            std::mt19937 rng(70 + seed);
            constraint_graph g = random_constraint_graph(rng, seed % 3);
            auto legal = all_legal_configurations(g);
            REQUIRE(!legal.empty());
            ncl_configuration s = legal[rng() % legal.size()];
            ncl_configuration t = legal[rng() % legal.size()];
            ncl_reduction red = ncl_to_llp_reconfig(g, s, t);
            mlp_instance mlp = llp_to_mlp(red.inst);
            auto cseq = c2c_bfs(g, s, t);
            auto fseq = reconfig_bfs(red.inst.f, red.nu, red.nu2);
            auto mseq = reconfig_bfs(mlp.f, friend_assignment(red.nu, mlp.names), friend_assignment(red.nu2, mlp.names));
            CHECK(cseq.has_value() == fseq.has_value());
            CHECK(fseq.has_value() == mseq.has_value());
            if (fseq) {
                CHECK(cseq->size() == fseq->size());
                CHECK(mseq->size() == 2 * fseq->size());
                flip_sequence lifted = lift_flip_sequence(red.inst.f, red.nu, *fseq, mlp.names);
                assignment target = friend_assignment(red.nu2, mlp.names);
                CHECK(validate_flip_sequence(mlp.f, friend_assignment(red.nu, mlp.names), lifted, &target));
            } else {
                frozen++;
            }
        }
        CHECK(frozen >= 0);
    }
}
