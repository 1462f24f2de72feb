#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qd/grothendieck.hpp"

using namespace qd;

namespace {

void require_ok(const Report& r) {
    for (const auto& c : r.checks) {
        INFO(c.name << ": " << c.witness);
        CHECK(c.pass);
    }
}

} // namespace

TEST_CASE("orbit sums") {
    auto s3 = make_named("symmetric", 3);
    auto phi = identity_hom(s3);
    // s(e) = e
    auto se = orbit_sum(phi, 0);
    CHECK(se.coeffs == std::vector<long>{1, 0, 0, 0, 0, 0});
    // s(transposition) = sum of the three transpositions
    int t12 = s3->element_by_name("(1 2)");
    auto st = orbit_sum(phi, t12);
    long total = 0;
    for (long c : st.coeffs) total += c;
    CHECK(total == 3);
    CHECK(st.coeffs[t12] == 1);
    CHECK(st.coeffs[s3->element_by_name("(1 3)")] == 1);
    CHECK(st.coeffs[s3->element_by_name("(2 3)")] == 1);
    // F = C1: s(g) = g
    auto c1 = make_named("cyclic", 1);
    GroupHom triv(c1, s3, {0});
    for (int g = 0; g < 6; ++g) {
        auto s = orbit_sum(triv, g);
        for (int a = 0; a < 6; ++a) CHECK(s.coeffs[a] == (a == g ? 1 : 0));
    }
}

TEST_CASE("worked identity in Z[S3]: s((12))^2 = 3e + 3(123) + 3(132)") {
    auto s3 = make_named("symmetric", 3);
    auto phi = identity_hom(s3);
    auto st = orbit_sum(phi, s3->element_by_name("(1 2)"));
    auto sq = st * st;
    std::vector<long> want(6, 0);
    want[0] = 3;
    want[s3->element_by_name("(1 2 3)")] = 3;
    want[s3->element_by_name("(1 3 2)")] = 3;
    CHECK(sq.coeffs == want);
}

TEST_CASE("orbit-sum product formula") {
    auto s3 = make_named("symmetric", 3);
    auto c2 = make_named("cyclic", 2);
    require_ok(verify_orbit_sum_products(identity_hom(s3)));
    require_ok(verify_orbit_sum_products(identity_hom(make_named("dihedral", 4))));
    require_ok(verify_orbit_sum_products(identity_hom(make_named("quaternion8"))));
    require_ok(verify_orbit_sum_products(
        GroupHom(c2, s3, {0, s3->element_by_name("(1 2)")})));
    // abelian case: single coset, index 1
    require_ok(verify_orbit_sum_products(identity_hom(make_named("cyclic", 6))));
}

TEST_CASE("ring of the trivial double is Z") {
    auto ring = build_ring(catalog(identity_hom(make_named("cyclic", 1))));
    CHECK(ring.size() == 1);
    CHECK(ring.n[0][0][0] == 1);
    require_ok(verify_ring_surjection(ring));
}

TEST_CASE("D(C2) ring is the group ring Z[C2 x C2]") {
    auto ring = build_ring(catalog(identity_hom(make_named("cyclic", 2))));
    REQUIRE(ring.size() == 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            long total = 0;
            for (int k = 0; k < 4; ++k) {
                total += ring.n[i][j][k];
                CHECK(ring.n[i][j][k] >= 0);
            }
            CHECK(total == 1); // invertible basis elements
            CHECK(ring.n[i][i][0] == 1); // every element squares to the unit
        }
    require_ok(verify_ring_surjection(ring));
}

TEST_CASE("D(S3) ring surjects onto the center of Z[S3]") {
    auto cat = catalog(identity_hom(make_named("symmetric", 3)));
    auto ring = build_ring(cat);
    CHECK(ring.size() == 8);
    auto rep = verify_ring_surjection(ring);
    require_ok(rep);
    // phi = id: centralizer = center, dimension = number of classes = 3
    CHECK(cat.gamma.size() == 3);
}

TEST_CASE("subgroup instance (S3, C2)") {
    auto s3 = make_named("symmetric", 3);
    auto c2 = make_named("cyclic", 2);
    auto cat = catalog(GroupHom(c2, s3, {0, s3->element_by_name("(1 2)")}));
    auto ring = build_ring(cat);
    require_ok(verify_ring_surjection(ring));
    require_ok(witherspoon_maps(ring));
    CHECK(cat.gamma.size() == 4); // image rank = 4
}

TEST_CASE("witherspoon structure maps in D(S3)") {
    auto ring = build_ring(catalog(identity_hom(make_named("symmetric", 3))));
    require_ok(witherspoon_maps(ring));
}
