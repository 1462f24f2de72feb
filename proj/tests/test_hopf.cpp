#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qd/hopf.hpp"

using namespace qd;

namespace {

void require_ok(const Report& r) {
    for (const auto& c : r.checks) {
        INFO(c.name << ": " << c.witness);
        CHECK(c.pass);
    }
}

SkewPairing trivial_pairing(const HopfData& u, const HopfData& h) {
    SkewPairing p{u, h, {}};
    p.values.assign(u.dim, std::vector<Rational>(h.dim));
    for (int i = 0; i < u.dim; ++i)
        for (int j = 0; j < h.dim; ++j) p.values[i][j] = u.counit[i] * h.counit[j];
    return p;
}

} // namespace

TEST_CASE("group and function algebras satisfy the Hopf axioms") {
    for (auto g : {make_named("cyclic", 1), make_named("cyclic", 2),
                   make_named("symmetric", 3), make_named("quaternion8")}) {
        require_ok(verify_hopf_axioms(group_algebra(g)));
        require_ok(verify_hopf_axioms(function_algebra(g)));
    }
    CHECK(group_algebra(make_named("cyclic", 1)).dim == 1);
    CHECK(group_algebra(make_named("symmetric", 3)).dim == 6);
}

TEST_CASE("sum of all p_x is the unit and pairs to the counit") {
    auto s3 = make_named("symmetric", 3);
    auto u = function_algebra(s3);
    Vec all;
    for (int g = 0; g < 6; ++g) all[g] = 1;
    CHECK(all == u.unit);
    auto p = pairing_from_hom(identity_hom(s3));
    for (int x = 0; x < 6; ++x) {
        Rational acc = 0;
        for (int g = 0; g < 6; ++g) acc += p.values[g][x];
        CHECK(acc == 1); // = eps_{kF}(x)
    }
}

TEST_CASE("pairing from hom") {
    auto s3 = make_named("symmetric", 3);
    // F = C1
    auto c1 = make_named("cyclic", 1);
    auto p0 = pairing_from_hom(GroupHom(c1, s3, {0}));
    for (int g = 0; g < 6; ++g) CHECK(p0.values[g][0] == (g == 0 ? 1 : 0));
    // phi = id on C2
    auto c2 = make_named("cyclic", 2);
    auto pid = pairing_from_hom(identity_hom(c2));
    for (int g = 0; g < 2; ++g)
        for (int x = 0; x < 2; ++x) CHECK(pid.values[g][x] == (g == x ? 1 : 0));
    // C2 -> S3 on a transposition
    int t12 = s3->element_by_name("(1 2)");
    auto pc2 = pairing_from_hom(GroupHom(c2, s3, {0, t12}));
    for (int g = 0; g < 6; ++g) {
        CHECK(pc2.values[g][1] == (g == t12 ? 1 : 0));
        CHECK(pc2.values[g][0] == (g == 0 ? 1 : 0));
    }
    require_ok(verify_skew_pairing(pairing_from_hom(identity_hom(s3))));
}

TEST_CASE("cocycle form") {
    auto c2 = make_named("cyclic", 2);
    auto cc2 = cocycle_from_pairing(pairing_from_hom(identity_hom(c2)));
    require_ok(verify_cocycle(cc2));
    CHECK(cc2.at(cc2.sigma, cc2.a.unit, cc2.a.unit) == 1);
    auto s3 = make_named("symmetric", 3);
    require_ok(verify_cocycle(cocycle_from_pairing(pairing_from_hom(identity_hom(s3)))));
}

TEST_CASE("trivial pairing gives the tensor Hopf algebra") {
    auto s3 = make_named("symmetric", 3);
    auto c2 = make_named("cyclic", 2);
    auto u = function_algebra(s3);
    auto h = group_algebra(c2);
    auto p = trivial_pairing(u, h);
    require_ok(verify_skew_pairing(p));
    auto direct = build_double_direct(u, h, p);
    auto tensor = tensor_hopf(u, h);
    tensor.basis = direct.basis;
    require_ok(compare_hopf(direct, tensor));
    require_ok(compare_hopf(build_double_by_twist(u, h, cocycle_from_pairing(p)), tensor));
}

TEST_CASE("closed-form product in the double") {
    // (p_a >< x)(p_b >< y) = [a = phi(x) b phi(x)^{-1}] p_a >< xy
    for (auto g : {make_named("cyclic", 2), make_named("symmetric", 3)}) {
        auto d = make_double(identity_hom(g));
        int n = g->order();
        for (int a = 0; a < n; ++a)
            for (int x = 0; x < n; ++x)
                for (int b = 0; b < n; ++b)
                    for (int y = 0; y < n; ++y) {
                        Vec want;
                        if (a == g->conj(x, b)) want[d.index(a, g->mul(x, y))] = 1;
                        CHECK(d.algebra.basis_product(d.index(a, x), d.index(b, y)) ==
                              want);
                    }
    }
}

TEST_CASE("twist equals direct and doubles satisfy the Hopf axioms") {
    auto s3 = make_named("symmetric", 3);
    auto d = make_double(identity_hom(s3)); // make_double already asserts equality
    CHECK(d.algebra.dim == 36);
    require_ok(verify_hopf_axioms(d.algebra));
    // proper subgroup instance: C2 -> S3
    auto c2 = make_named("cyclic", 2);
    auto dsub = make_double(GroupHom(c2, s3, {0, s3->element_by_name("(1 2)")}));
    CHECK(dsub.algebra.dim == 12);
    require_ok(verify_hopf_axioms(dsub.algebra));
}

TEST_CASE("corrupted structure constants are caught with a witness") {
    auto d = make_double(identity_hom(make_named("cyclic", 2)));
    auto bad = d.algebra;
    bad.mult[{0, 0}] = Vec{{1, Rational(1)}}; // flip one product
    auto rep = verify_hopf_axioms(bad);
    CHECK(!rep.ok());
    bool witnessed = false;
    for (const auto& c : rep.checks)
        if (!c.pass && !c.witness.empty()) witnessed = true;
    CHECK(witnessed);
}

TEST_CASE("normality of the function-algebra factor") {
    auto s3 = make_named("symmetric", 3);
    // F = C1: trivially normal
    auto c1 = make_named("cyclic", 1);
    require_ok(verify_normality_KU(make_double(GroupHom(c1, s3, {0}))));
    require_ok(verify_normality_KU(make_double(identity_hom(s3))));
    // conjugation permutes the p_g within the factor
    auto d = make_double(identity_hom(s3));
    int t12 = s3->element_by_name("(1 2)");
    Vec hx;
    for (int c = 0; c < 6; ++c) hx[d.index(c, t12)] = 1; // 1 >< (12)
    for (int g = 0; g < 6; ++g) {
        Vec pg{{d.index(g, 0), Rational(1)}};
        Vec adj = d.algebra.multiply(d.algebra.multiply(hx, pg), d.algebra.s(hx));
        Vec want{{d.index(s3->conj(t12, g), 0), Rational(1)}};
        CHECK(adj == want);
    }
}

TEST_CASE("swap duality") {
    auto c2 = make_named("cyclic", 2);
    require_ok(verify_swap_duality(make_double(identity_hom(c2))));
    auto s3 = make_named("symmetric", 3);
    require_ok(verify_swap_duality(make_double(identity_hom(s3))));
    require_ok(verify_swap_duality(
        make_double(GroupHom(c2, s3, {0, s3->element_by_name("(1 2)")}))));
}

TEST_CASE("haar integrals") {
    auto s3 = make_named("symmetric", 3);
    // group algebra: (1/|F|) sum of all elements
    auto hf = group_algebra(s3);
    Vec expected;
    for (int x = 0; x < 6; ++x) expected[x] = Rational(1, 6);
    CHECK(haar_integral(hf) == expected);
    // function algebra: p_e
    CHECK(haar_integral(function_algebra(s3)) == Vec{{0, Rational(1)}});
    // double: p_e >< (1/|F|) sum x; idempotent
    auto d = make_double(identity_hom(s3));
    auto lam = haar_integral(d.algebra);
    Vec want;
    for (int x = 0; x < 6; ++x) want[d.index(0, x)] = Rational(1, 6);
    CHECK(lam == want);
    CHECK(d.algebra.multiply(lam, lam) == lam);
    // two-sided: a Lambda = eps(a) Lambda = Lambda a
    for (int i = 0; i < d.algebra.dim; ++i) {
        Vec e{{i, Rational(1)}};
        Vec scaled;
        for (const auto& [k, c] : lam) vec_add(scaled, k, c * d.algebra.counit[i]);
        CHECK(d.algebra.multiply(e, lam) == scaled);
        CHECK(d.algebra.multiply(lam, e) == scaled);
    }
    // trivial algebra
    auto c1 = make_named("cyclic", 1);
    CHECK(haar_integral(group_algebra(c1)) == Vec{{0, Rational(1)}});
}
