#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qd/double_rep.hpp"

#include <algorithm>
#include <set>

using namespace qd;

namespace {

void require_ok(const Report& r) {
    for (const auto& c : r.checks) {
        INFO(c.name << ": " << c.witness);
        CHECK(c.pass);
    }
}

std::multiset<long> degree_multiset(const IrrepCatalog& cat) {
    std::multiset<long> out;
    for (const auto& l : cat.labels) out.insert(l.degree);
    return out;
}

} // namespace

TEST_CASE("catalog of the trivial pair") {
    auto c1 = make_named("cyclic", 1);
    auto cat = catalog(identity_hom(c1));
    REQUIRE(cat.labels.size() == 1);
    CHECK(cat.labels[0].degree == 1);
    require_ok(verify_catalog(cat));
}

TEST_CASE("catalog of D(S3)") {
    auto s3 = make_named("symmetric", 3);
    auto cat = catalog(identity_hom(s3));
    CHECK(cat.labels.size() == 8);
    CHECK(degree_multiset(cat) == std::multiset<long>{1, 1, 2, 2, 2, 2, 3, 3});
    CHECK(cat.gamma == std::vector<int>{0, 1, 3}); // e, a transposition, a 3-cycle
    require_ok(verify_catalog(cat));
}

TEST_CASE("catalog of (S3, C2)") {
    auto s3 = make_named("symmetric", 3);
    auto c2 = make_named("cyclic", 2);
    auto cat = catalog(GroupHom(c2, s3, {0, s3->element_by_name("(1 2)")}));
    CHECK(cat.gamma.size() == 4);
    long sumsq = 0;
    for (const auto& l : cat.labels) sumsq += l.degree * l.degree;
    CHECK(sumsq == 12);
    require_ok(verify_catalog(cat));
}

TEST_CASE("catalogs of the full battery are complete") {
    auto d4 = make_named("dihedral", 4);
    auto q8 = make_named("quaternion8");
    auto v4 = make_named("direct_product", 2);
    auto c2 = make_named("cyclic", 2);
    auto c3 = make_named("cyclic", 3);
    auto s3 = make_named("symmetric", 3);
    std::vector<GroupHom> battery = {
        identity_hom(make_named("cyclic", 2)),
        identity_hom(s3),
        identity_hom(d4),
        identity_hom(q8),
        GroupHom(c2, s3, {0, s3->element_by_name("(1 2)")}),
        GroupHom(c3, s3, {0, s3->element_by_name("(1 2 3)"), s3->element_by_name("(1 3 2)")}),
        GroupHom(c2, d4, {0, 2}), // center of D4: r^2
        GroupHom(c2, v4, {0, 1}), // first factor of C2 x C2
    };
    for (const auto& phi : battery) require_ok(verify_catalog(catalog(phi)));
}

TEST_CASE("simple character values in D(S3)") {
    auto s3 = make_named("symmetric", 3);
    auto cat = catalog(identity_hom(s3));
    int t12 = s3->element_by_name("(1 2)");
    int t13 = s3->element_by_name("(1 3)");
    int l = cat.find_label(cat.gamma[1], 0); // (transposition rep, trivial of C2)
    REQUIRE(l >= 0);
    CHECK(cat.chi(l, cat.gamma[1], 0) == Cyclotomic(1));
    CHECK(cat.chi(l, t12, 0) == Cyclotomic(1));
    CHECK(cat.chi(l, t13, 0) == Cyclotomic(1));
    for (int x = 0; x < 6; ++x) CHECK(cat.chi(l, 0, x).is_zero());
    // unit label: chi(p_e >< e) = 1
    int unit = cat.find_label(0, 0);
    REQUIRE(unit >= 0);
    CHECK(cat.chi(unit, 0, 0) == Cyclotomic(1));
    // sum over a of chi(p_a >< e) = degree, for every label
    for (size_t i = 0; i < cat.labels.size(); ++i) {
        Cyclotomic total;
        for (int a = 0; a < 6; ++a) total += cat.chi(static_cast<int>(i), a, 0);
        CHECK(total == Cyclotomic(cat.labels[i].degree));
    }
}

TEST_CASE("simple character is independent of coset representatives") {
    auto s3 = make_named("symmetric", 3);
    auto phi = identity_hom(s3);
    auto cat = catalog(phi);
    const auto& f = *s3;
    for (size_t oi = 0; oi < cat.gamma.size(); ++oi) {
        const auto& fg = cat.stabilizers[oi];
        // replace each representative t by t*s for some nontrivial s in F_g
        std::vector<int> alt;
        for (int t : cat.coset_reps[oi])
            alt.push_back(f.mul(t, fg.elements().back()));
        const auto& table = character_table(fg.local());
        for (int m = 0; m < static_cast<int>(table.size()); ++m) {
            int l = cat.find_label(cat.gamma[oi], m);
            CHECK(simple_character(phi, cat.gamma[oi], fg, alt, table[m]) ==
                  cat.chars[l]);
        }
    }
}

TEST_CASE("orthonormality through the Haar integral") {
    require_ok(verify_orthonormality(catalog(identity_hom(make_named("cyclic", 1)))));
    auto c2cat = catalog(identity_hom(make_named("cyclic", 2)));
    CHECK(c2cat.labels.size() == 4);
    for (const auto& l : c2cat.labels) CHECK(l.degree == 1);
    require_ok(verify_orthonormality(c2cat));
    require_ok(verify_orthonormality(catalog(identity_hom(make_named("symmetric", 3)))));
}

TEST_CASE("restriction to the function-algebra factor") {
    auto s3 = make_named("symmetric", 3);
    auto cat = catalog(identity_hom(s3));
    for (const auto& l : cat.labels) require_ok(restrict_to_KU(cat, l));
    // (e, M): supported only at a = e
    int unit = cat.find_label(0, 0);
    for (int a = 1; a < 6; ++a) CHECK(cat.chi(unit, a, 0).is_zero());
}

TEST_CASE("Clifford multiplicity identity") {
    auto s3 = make_named("symmetric", 3);
    auto cat = catalog(identity_hom(s3));
    for (int g = 0; g < 6; ++g) require_ok(clifford_multiplicity_check(cat, g));
    // spot values: g = e -> |F| = 6, g = (12) -> 2, g = (123) -> 3
    auto side = [&](int g) {
        Cyclotomic acc;
        for (size_t l = 0; l < cat.labels.size(); ++l) {
            const auto& v = cat.chi(static_cast<int>(l), g, 0);
            acc += v * v;
        }
        return acc;
    };
    CHECK(side(0) == Cyclotomic(6));
    CHECK(side(s3->element_by_name("(1 2)")) == Cyclotomic(2));
    CHECK(side(s3->element_by_name("(1 2 3)")) == Cyclotomic(3));
}
