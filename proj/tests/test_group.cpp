#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qd/group.hpp"

#include <numeric>
#include <set>

using namespace qd;

TEST_CASE("named families") {
    CHECK(make_named("cyclic", 1)->order() == 1);
    CHECK(make_named("cyclic", 12)->order() == 12);
    CHECK(make_named("dihedral", 4)->order() == 8);
    CHECK(make_named("symmetric", 3)->order() == 6);
    CHECK(make_named("quaternion8")->order() == 8);
    CHECK(make_named("direct_product", 2)->order() == 4);
    CHECK_THROWS(make_named("nosuch", 3));
    CHECK_THROWS(make_named("cyclic", 0));
}

TEST_CASE("conjugacy classes") {
    auto triv = make_named("cyclic", 1);
    CHECK(triv->num_classes() == 1);

    auto s3 = make_named("symmetric", 3);
    auto sizes = [](const GroupPtr& g) {
        std::multiset<size_t> s;
        for (const auto& c : g->conjugacy_classes()) s.insert(c.size());
        return s;
    };
    CHECK(sizes(s3) == std::multiset<size_t>{1, 2, 3});
    CHECK(s3->conjugacy_classes()[0] == std::vector<int>{0});

    auto q8 = make_named("quaternion8");
    CHECK(sizes(q8) == std::multiset<size_t>{1, 1, 2, 2, 2});
    CHECK(q8->num_classes() == 5);
}

TEST_CASE("permutation closure") {
    auto s3 = from_permutation_generators(3, {{2, 1, 3}, {2, 3, 1}});
    CHECK(s3->order() == 6);
    CHECK(from_permutation_generators(4, {})->order() == 1);
    auto c4 = from_permutation_generators(4, {{2, 3, 4, 1}});
    CHECK(c4->order() == 4);
    CHECK(c4->is_abelian());
    CHECK_THROWS(from_permutation_generators(5, {{2, 3, 4, 5, 1}}, 3));
    CHECK_THROWS(from_permutation_generators(3, {{1, 1, 3}}));
}

TEST_CASE("centralizers in S3") {
    auto s3 = make_named("symmetric", 3);
    CHECK(centralizer(s3, 0).order() == 6);
    int transposition = s3->element_by_name("(1 2)");
    REQUIRE(transposition >= 0);
    CHECK(centralizer(s3, transposition).order() == 2);
    int cycle3 = s3->element_by_name("(1 2 3)");
    REQUIRE(cycle3 >= 0);
    CHECK(centralizer(s3, cycle3).order() == 3);
}

TEST_CASE("phi conjugation, orbits, stabilizers") {
    auto s3 = make_named("symmetric", 3);
    auto id = identity_hom(s3);
    int t12 = s3->element_by_name("(1 2)");
    int c123 = s3->element_by_name("(1 2 3)");
    int c132 = s3->element_by_name("(1 3 2)");

    CHECK(phi_conjugate(id, 0, c123) == c123);
    CHECK(phi_conjugate(id, t12, c123) == c132);

    auto os = orbit_and_stabilizer(id, t12);
    CHECK(os.orbit.size() == 3);
    CHECK(os.stabilizer.order() == 2);

    // C3 embedded as the 3-cycles: transposition orbit is all transpositions
    auto c3 = make_named("cyclic", 3);
    GroupHom incl(c3, s3, {0, c123, c132});
    auto os2 = orbit_and_stabilizer(incl, t12);
    CHECK(os2.orbit.size() == 3);
    CHECK(os2.stabilizer.order() == 1);

    // identity element: full stabilizer
    auto os3 = orbit_and_stabilizer(incl, 0);
    CHECK(os3.orbit == std::vector<int>{0});
    CHECK(os3.stabilizer.order() == 3);
}

TEST_CASE("orbit representatives") {
    auto s3 = make_named("symmetric", 3);
    auto id = identity_hom(s3);
    auto reps = orbit_representatives(id);
    CHECK(reps.size() == 3); // one per conjugacy class
    CHECK(reps[0] == 0);

    auto c1 = make_named("cyclic", 1);
    GroupHom triv(c1, s3, {0});
    CHECK(orbit_representatives(triv).size() == 6);

    auto c4 = make_named("cyclic", 4);
    CHECK(orbit_representatives(identity_hom(c4)).size() == 4);

    // sum of orbit sizes = |G|
    int total = 0;
    for (int g : reps) total += static_cast<int>(orbit_and_stabilizer(id, g).orbit.size());
    CHECK(total == 6);
}

TEST_CASE("double cosets") {
    auto s3 = make_named("symmetric", 3);
    auto whole = Subgroup::whole(s3);
    auto dec = double_cosets(whole, whole);
    CHECK(dec.reps.size() == 1);

    int t12 = s3->element_by_name("(1 2)");
    Subgroup k(s3, {0, t12});
    auto dec2 = double_cosets(k, k);
    CHECK(dec2.reps.size() == 2);
    std::multiset<size_t> bs;
    for (const auto& b : dec2.blocks) bs.insert(b.size());
    CHECK(bs == std::multiset<size_t>{2, 4});
    // size identity |KxL| = |K||L| / |K ∩ xLx⁻¹|
    for (size_t i = 0; i < dec2.reps.size(); ++i) {
        auto conj = conjugate_subgroup(k, dec2.reps[i]);
        auto inter = intersect(k, conj);
        CHECK(dec2.blocks[i].size() == 2u * 2u / inter.order());
    }

    auto triv = Subgroup::trivial(s3);
    CHECK(double_cosets(triv, triv).reps.size() == 6);
}

TEST_CASE("stabilizer covariance F_{xg} = x F_g x^-1") {
    auto s3 = make_named("symmetric", 3);
    auto id = identity_hom(s3);
    for (int g = 0; g < 6; ++g) {
        auto fg = orbit_and_stabilizer(id, g).stabilizer;
        for (int x = 0; x < 6; ++x) {
            auto fxg = orbit_and_stabilizer(id, phi_conjugate(id, x, g)).stabilizer;
            CHECK(conjugate_subgroup(fg, x).elements() == fxg.elements());
        }
    }
}

TEST_CASE("F_g ∩ F_h ⊆ F_{gh}") {
    auto d4 = make_named("dihedral", 4);
    auto id = identity_hom(d4);
    for (int g = 0; g < 8; ++g)
        for (int h = 0; h < 8; ++h) {
            auto fg = orbit_and_stabilizer(id, g).stabilizer;
            auto fh = orbit_and_stabilizer(id, h).stabilizer;
            auto fgh = orbit_and_stabilizer(id, d4->mul(g, h)).stabilizer;
            auto inter = intersect(fg, fh);
            for (int e : inter.elements()) CHECK(fgh.contains(e));
        }
}

TEST_CASE("hom validation") {
    auto s3 = make_named("symmetric", 3);
    auto c2 = make_named("cyclic", 2);
    int t12 = s3->element_by_name("(1 2)");
    GroupHom incl(c2, s3, {0, t12});
    CHECK(incl.is_injective());
    GroupHom collapse(c2, s3, {0, 0});
    CHECK(!collapse.is_injective());
    CHECK_THROWS(collapse.require_injective());
    // not multiplicative
    CHECK_THROWS(GroupHom(c2, s3, {0, s3->element_by_name("(1 2 3)")}));
}

TEST_CASE("group invariants of constructed tables") {
    for (auto g : {make_named("symmetric", 4), make_named("dihedral", 6),
                   make_named("quaternion8")}) {
        int n = g->order();
        for (int a = 0; a < n; ++a) {
            CHECK(g->mul(a, g->inv(a)) == 0);
            CHECK(g->mul(0, a) == a);
        }
        int total = 0;
        for (const auto& c : g->conjugacy_classes()) total += static_cast<int>(c.size());
        CHECK(total == n);
    }
    CHECK(make_named("symmetric", 4)->num_classes() == 5);
    CHECK(make_named("dihedral", 4)->exponent() == 4);
}
