#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "planar/generate.hpp"
#include "planar/planarity.hpp"
#include "planar/reconfig.hpp"
#include "planar/sat_core.hpp"

using namespace planar;

namespace {

enum { A, B, C, D, E, F, G, H, I };

// the running 4-clause example: (a|b|~c)(~c|d|~a)(~b|c)(c|~d)
cnf example4() {
    cnf f;
    f.add({pos(A), pos(B), neg(C)});
    f.add({neg(C), pos(D), neg(A)});
    f.add({neg(B), pos(C)});
    f.add({pos(C), neg(D)});
    return f;
}

// faces of em whose walk has a corner at every listed vertex
std::vector<fid> faces_with(const embedding& em, std::vector<vid> vs) {
    std::vector<fid> out;
    for (auto& [f, fc] : em.faces) {
        std::set<vid> heads;
        for (dart d : fc.darts) heads.insert(em.head(d));
        if (std::all_of(vs.begin(), vs.end(), [&](vid v) { return heads.count(v) != 0; })) out.push_back(f);
    }
    return out;
}

fid the_face(const embedding& em, std::vector<vid> vs, bool outer) {
    std::vector<fid> hits;
    for (fid f : faces_with(em, vs))
        if ((f == em.outer) == outer) hits.push_back(f);
    REQUIRE(hits.size() == 1);
    return hits[0];
}

}  // namespace

TEST_CASE("linearity") {
    CHECK(is_linear(example4()));
    cnf nine;  // three all-positive and three all-negative clauses, no overlap
    nine.add({pos(A), pos(B), pos(C)});
    nine.add({pos(D), pos(E), pos(F)});
    nine.add({pos(G), pos(H), pos(I)});
    nine.add({neg(A), neg(D), neg(G)});
    nine.add({neg(B), neg(E), neg(H)});
    nine.add({neg(C), neg(F), neg(I)});
    CHECK(is_linear(nine));
    cnf bad;  // first clause intersects two others
    bad.add({pos(A), pos(B)});
    bad.add({pos(A), pos(C)});
    bad.add({pos(A), pos(D)});
    CHECK(!is_linear(bad));
    cnf twolit;  // intersection of two literals
    twolit.add({pos(A), pos(B), pos(C)});
    twolit.add({pos(A), pos(B), pos(D)});
    CHECK(!is_linear(twolit));
}

TEST_CASE("monotonicity") {
    cnf f;
    f.add({pos(A), pos(B), pos(C)});
    f.add({neg(A), neg(B), neg(D)});
    CHECK(is_monotone(f));
    cnf g;
    g.add({pos(A), neg(B)});
    CHECK(!is_monotone(g));
    CHECK(is_monotone(cnf{}));
}

TEST_CASE("incidence graphs") {
    SUBCASE("example formula, both kinds") {
        cnf f = example4();
        incidence_graph lit = build_incidence(f, incidence_kind::literal_clause);
        CHECK(lit.g.vertices.size() == 8 + 4);  // 8 occurring literals + 4 clauses
        CHECK(lit.g.edges.size() == 10);
        incidence_graph var = build_incidence(f, incidence_kind::variable_clause);
        CHECK(var.g.vertices.size() == 4 + 4);
        CHECK(var.g.edges.size() == 10);
        // variable kind = literal kind with l / ~l merged, edge-multiset-wise
        std::multiset<std::pair<int, int>> from_lit, from_var;
        for (auto& [e, uv] : lit.g.edges)
            from_lit.insert({lit.lit_of.at(uv.first).var, lit.clause_of.at(uv.second)});
        for (auto& [e, uv] : var.g.edges)
            from_var.insert({var.lit_of.at(uv.first).var, var.clause_of.at(uv.second)});
        CHECK(from_lit == from_var);
    }
    SUBCASE("single unit clause") {
        cnf f;
        f.add({pos(A)});
        incidence_graph ig = build_incidence(f, incidence_kind::literal_clause);
        CHECK(ig.g.vertices.size() == 2);
        CHECK(ig.g.edges.size() == 1);
    }
    SUBCASE("the 9-variable linear formula has a nonplanar variable-clause graph") {
        cnf nine;
        nine.add({pos(A), pos(B), pos(C)});
        nine.add({pos(D), pos(E), pos(F)});
        nine.add({pos(G), pos(H), pos(I)});
        nine.add({neg(A), neg(D), neg(G)});
        nine.add({neg(B), neg(E), neg(H)});
        nine.add({neg(C), neg(F), neg(I)});
        REQUIRE(is_linear(nine));
        CHECK(!is_planar(build_incidence(nine, incidence_kind::variable_clause).g));
    }
}

TEST_CASE("augmentation") {
    SUBCASE("planar 3-CNF with its variable cycle") {
        cnf f;  // (~a|b|~c)(a|c|~d)(a|~b|~d)(b|c|~d)
        f.add({neg(A), pos(B), neg(C)});
        f.add({pos(A), pos(C), neg(D)});
        f.add({pos(A), neg(B), neg(D)});
        f.add({pos(B), pos(C), neg(D)});
        incidence_graph ig = augment(build_incidence(f, incidence_kind::variable_clause), f, variable_cycle{{A, B, C, D}});
        CHECK(ig.cycle_edges.size() == 4);
        CHECK(is_planar(ig.g));
    }
    SUBCASE("literal-planar 3-CNF with its literal cycle") {
        cnf f;  // (a|~b|d)(b|~c|d)(~d|c)(c|~a)
        f.add({pos(A), neg(B), pos(D)});
        f.add({pos(B), neg(C), pos(D)});
        f.add({neg(D), pos(C)});
        f.add({pos(C), neg(A)});
        literal_cycle pi{{pos(A), neg(B), pos(B), neg(C), pos(D), neg(D), pos(C), neg(A)}};
        incidence_graph ig = augment(build_incidence(f, incidence_kind::literal_clause), f, pi);
        CHECK(ig.cycle_edges.size() == 8);
        CHECK(ig.paired_edges.size() == 4);
        CHECK(is_planar(ig.g));
    }
    SUBCASE("kind and completeness errors") {
        cnf f;
        f.add({pos(A), pos(B), pos(C)});
        auto lit = build_incidence(f, incidence_kind::literal_clause);
        auto var = build_incidence(f, incidence_kind::variable_clause);
        CHECK_THROWS_WITH_AS(augment(lit, f, variable_cycle{{A, B, C}}), doctest::Contains("KindMismatch"), error);
        CHECK_THROWS_WITH_AS(augment(var, f, variable_cycle{{A, B}}), doctest::Contains("CycleIncomplete"), error);
        cnf one;
        one.add({pos(A)});
        auto lone = build_incidence(one, incidence_kind::literal_clause);
        CHECK_THROWS_WITH_AS(augment(lone, one, literal_cycle{{pos(A), neg(A)}}), doctest::Contains("CycleIncomplete"),
                             error);
    }
}

TEST_CASE("validity of embedded augmented graphs") {
    // phi = (a|b)(~a|~b), literal cycle (a, b, ~b, ~a); nodes built by surgery:
    // 0=a 1=~a 2=b 3=~b; cycle square, paired chords inside, clauses outside
    cnf f;
    f.add({pos(A), pos(B)});
    f.add({neg(A), neg(B)});
    multigraph sq;
    sq.vertices = {0, 1, 2, 3};
    sq.edges[0] = {0, 2};
    sq.edges[1] = {2, 3};
    sq.edges[2] = {3, 1};
    sq.edges[3] = {1, 0};
    embedding base = compute_embedding(sq);

    auto build = [&](bool clause2_inside) {
        embedding em = base;
        fid inner = the_face(em, {0, 1, 2, 3}, false);
        em = add_edge(em, 0, 1, inner);                       // paired a ~a, edge 4
        em = add_edge(em, 2, 3, the_face(em, {2, 3}, false));  // paired b ~b, edge 5
        em = add_edge(em, 0, 4, em.outer);                     // clause node 4 = (a|b)
        em = add_edge(em, 4, 2, the_face(em, {4, 2}, true));   // edge 7
        fid at = clause2_inside ? the_face(em, {1, 3}, false) : the_face(em, {1, 3}, true);
        em = add_edge(em, 1, 5, at);                           // clause node 5 = (~a|~b)
        em = add_edge(em, 5, 3, faces_with(em, {5, 3})[0]);    // edge 9
        return em;
    };
    embedding good = build(false);
    incidence_graph ig;
    ig.kind = incidence_kind::literal_clause;
    ig.g = good.g;
    ig.lit_of = {{0, pos(A)}, {1, neg(A)}, {2, pos(B)}, {3, neg(B)}};
    for (auto& [v, l] : ig.lit_of) ig.node_of[l] = v;
    ig.clause_of = {{4, 0}, {5, 1}};
    ig.cycle_edges = {0, 1, 2, 3};
    ig.paired_edges = {4, 5};
    CHECK(check_valid(good, ig, f));

    SUBCASE("reflection invariance: relabeling the outer face flips sides") {
        embedding refl = good;
        for (fid bf : faces_with(good, {0, 1}))  // the paired-edge bigon side
            if (good.faces.at(bf).size() == 2) refl.outer = bf;
        REQUIRE(refl.outer != good.outer);
        CHECK(check_valid(refl, ig, f));
    }
    SUBCASE("a clause embedded inside the cycle breaks validity") {
        embedding bad = build(true);
        incidence_graph ig2 = ig;
        ig2.g = bad.g;
        CHECK(!check_valid(bad, ig2, f));
    }
    SUBCASE("monotone variable-kind separation") {
        // (a|b|c)(~a|~b|~c) around triangle a-b-c: 0=a 1=b 2=c
        cnf m;
        m.add({pos(A), pos(B), pos(C)});
        m.add({neg(A), neg(B), neg(C)});
        embedding em = triangle_embedding();  // vertices 0,1,2; edges 0,1,2
        fid inner = the_face(em, {0, 1, 2}, false);
        em = add_edge(em, 0, 3, inner);  // positive clause node 3
        em = add_edge(em, 3, 1, faces_with(em, {3, 1})[0]);
        em = add_edge(em, 3, 2, the_face(em, {3, 2}, false));
        em = add_edge(em, 0, 4, em.outer);  // negative clause node 4
        em = add_edge(em, 4, 1, the_face(em, {4, 1}, true));
        em = add_edge(em, 4, 2, the_face(em, {4, 2}, true));
        incidence_graph vg;
        vg.kind = incidence_kind::variable_clause;
        vg.g = em.g;
        vg.lit_of = {{0, pos(A)}, {1, pos(B)}, {2, pos(C)}};
        for (auto& [v, l] : vg.lit_of) vg.node_of[l] = v;
        vg.clause_of = {{3, 0}, {4, 1}};
        vg.cycle_edges = {0, 1, 2};
        CHECK(check_valid(em, vg, m));
        // same embedding, both clauses positive: the cycle no longer separates
        cnf m2;
        m2.add({pos(A), pos(B), pos(C)});
        m2.add({pos(A), pos(B), pos(C)});
        CHECK(!check_valid(em, vg, m2));
    }
}

TEST_CASE("brute-force SAT oracle") {
    cnf unit;
    unit.add({pos(A)});
    auto m = brute_force_sat(unit);
    REQUIRE(m.has_value());
    CHECK(m->at(A) == true);

    cnf contra;
    contra.add({pos(A)});
    contra.add({neg(A)});
    CHECK(!brute_force_sat(contra).has_value());

    auto m4 = brute_force_sat(example4());
    REQUIRE(m4.has_value());
    CHECK(satisfies(*m4, example4()));

    cnf wide;
    for (int v = 0; v < 25; v++) wide.add({pos(v)});
    CHECK_THROWS_WITH_AS(brute_force_sat(wide), doctest::Contains("TooManyVariables"), error);
}

TEST_CASE("reconfiguration BFS") {
    SUBCASE("two-variable witness avoids the unsatisfying step") {
        cnf f;
        f.add({pos(A), pos(B)});
        auto seq = reconfig_bfs(f, {{A, 1}, {B, 0}}, {{A, 0}, {B, 1}});
        REQUIRE(seq.has_value());
        CHECK(*seq == flip_sequence{B, A});
        CHECK(validate_flip_sequence(f, {{A, 1}, {B, 0}}, *seq));
    }
    SUBCASE("identical endpoints") {
        cnf f;
        f.add({pos(A)});
        auto seq = reconfig_bfs(f, {{A, 1}}, {{A, 1}});
        REQUIRE(seq.has_value());
        CHECK(seq->empty());
    }
    SUBCASE("isolated models are unreachable") {
        cnf f;  // (a|b)(~a|~b): the two models differ in both variables
        f.add({pos(A), pos(B)});
        f.add({neg(A), neg(B)});
        CHECK(!reconfig_bfs(f, {{A, 1}, {B, 0}}, {{A, 0}, {B, 1}}).has_value());
    }
    SUBCASE("symmetry of reachability") {
        cnf f = example4();
        auto models = [&]() {
            std::vector<assignment> ms;
            std::set<int> vset = f.variables();
            std::vector<int> vs(vset.begin(), vset.end());
            for (int bits = 0; bits < (1 << vs.size()); bits++) {
                assignment nu;
                for (size_t i = 0; i < vs.size(); i++) nu[vs[i]] = (bits >> i) & 1;
                if (satisfies(nu, f)) ms.push_back(nu);
            }
            return ms;
        }();
        for (auto& a : models)
            for (auto& b : models) {
                bool fwd = reconfig_bfs(f, a, b).has_value();
                bool bwd = reconfig_bfs(f, b, a).has_value();
                CHECK(fwd == bwd);
            }
    }
    SUBCASE("validator rejects corrupted sequences") {
        cnf f;
        f.add({pos(A), pos(B)});
        CHECK(!validate_flip_sequence(f, {{A, 1}, {B, 0}}, {A, B}));  // flips x first
        CHECK(!validate_flip_sequence(f, {{A, 1}, {B, 0}}, {C}));     // unknown variable
    }
    SUBCASE("errors") {
        cnf f;
        f.add({pos(A)});
        CHECK_THROWS_WITH_AS(reconfig_bfs(f, {{A, 0}}, {{A, 1}}), doctest::Contains("EndpointUnsat"), error);
        cnf wide;
        for (int v = 0; v < 21; v++) wide.add({pos(v)});
        assignment all1;
        for (int v = 0; v < 21; v++) all1[v] = 1;
        CHECK_THROWS_WITH_AS(reconfig_bfs(wide, all1, all1), doctest::Contains("TooLarge"), error);
    }
}
