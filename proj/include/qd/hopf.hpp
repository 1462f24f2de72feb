#pragma once

#include "qd/group.hpp"
#include "qd/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qd {

/// Sparse element of the algebra: basis index -> coefficient (no zeros stored).
using Vec = std::map<int, Rational>;
/// Sparse element of the tensor square.
using Vec2 = std::map<std::pair<int, int>, Rational>;
/// Sparse n-leg tensor, keyed by the index tuple.
using VecN = std::map<std::vector<int>, Rational>;

void vec_add(Vec& v, int k, const Rational& c);
void vec2_add(Vec2& v, int j, int k, const Rational& c);

struct Check {
    std::string name;
    bool pass;
    std::string witness; // empty when passing
};

struct Report {
    std::vector<Check> checks;
    bool ok() const;
    void add(const std::string& name, bool pass, const std::string& witness = "");
};

/// A finite-dimensional Hopf algebra over Q given by exact structure constants
/// on a fixed basis. Sparse throughout; absent entries are zero.
struct HopfData {
    int dim = 0;
    std::vector<std::string> basis;
    std::map<std::pair<int, int>, Vec> mult; // e_i e_j
    Vec unit;                                // 1 as a combination
    std::vector<Vec2> comult;                // Delta(e_i)
    std::vector<Rational> counit;            // eps(e_i)
    std::vector<Vec> antipode;               // S(e_i)

    Vec basis_product(int i, int j) const;
    Vec multiply(const Vec& x, const Vec& y) const;
    Vec2 coproduct(const Vec& x) const;
    /// n-fold iterated coproduct Delta^{(n)}(e_i), n >= 1 legs.
    VecN coproduct_power(int i, int legs) const;
    Rational eps(const Vec& x) const;
    Vec s(const Vec& x) const;
    /// S^{-1} as a basis-indexed table (exact matrix inverse).
    std::vector<Vec> antipode_inverse() const;
};

/// kF: grouplike basis, Delta(x) = x (x) x, S(x) = x^{-1}.
HopfData group_algebra(const GroupPtr& f);
/// k^G on the dual basis {p_g} with p_a p_b = delta_{ab} p_a,
/// Delta(p_g) = sum_{ab=g} p_a (x) p_b, eps(p_g) = delta_{g,e}, S(p_g) = p_{g^{-1}}.
HopfData function_algebra(const GroupPtr& g);
/// Tensor product Hopf algebra; basis index i*dim(h)+j.
HopfData tensor_hopf(const HopfData& u, const HopfData& h);
/// Opposite algebra (same coalgebra, antipode S^{-1}).
HopfData opposite_hopf(const HopfData& a);

/// Exhaustive exact verification of all Hopf axioms; failures carry a witness.
Report verify_hopf_axioms(const HopfData& a);

/// Exact coefficient-level equality of two structure-constant presentations.
Report compare_hopf(const HopfData& a, const HopfData& b);

/// A skew pairing lambda : U (x) H -> Q given on basis pairs.
struct SkewPairing {
    HopfData u;
    HopfData h;
    std::vector<std::vector<Rational>> values; // values[i][j] = lambda(u_i, h_j)

    Rational at(const Vec& x, const Vec& y) const;
};

/// Checks the skew-pairing laws and convolution invertibility
/// (inverse given by lambda(S u, a)).
Report verify_skew_pairing(const SkewPairing& p);

/// lambda(p_g, x) = [phi(x)^{-1} = g] on (k^G, kF); throws on axiom failure.
SkewPairing pairing_from_hom(const GroupHom& phi);

/// The 2-cocycle sigma(u (x) a, v (x) b) = eps(u) lambda(v, a) eps(b)
/// on A = U (x) H, with convolution inverse using lambda(S^{-1} v, a).
struct CocycleForm {
    HopfData a; // the tensor Hopf algebra U (x) H
    Vec2 sigma;
    Vec2 sigma_inv;

    Rational at(const Vec2& s, const Vec& x, const Vec& y) const;
};

CocycleForm cocycle_from_pairing(const SkewPairing& p);

/// Convolution inverse, normalization, and the left 2-cocycle identity
/// sigma(x1,y1) sigma(x2 y2, z) = sigma(y1,z1) sigma(x, y2 z2).
Report verify_cocycle(const CocycleForm& c);

/// D_lambda(U,H) on basis u_i >< h_j (index i*dim(h)+j) with the product
/// (u><a)(v><b) = lambda(v1,a1) lambda(v3, S^{-1}a3) u v2 >< a2 b,
/// tensor coalgebra, and antipode lambda(Su3,Sa3) lambda(Su1,a1) Su2 >< Sa2.
HopfData build_double_direct(const HopfData& u, const HopfData& h, const SkewPairing& p);

/// The same algebra as the cocycle twist x .sigma y = sigma(x1,y1) x2 y2 sigma^{-1}(x3,y3)
/// of U (x) H, with twisted antipode sigma(a1, S a2) S(a3) sigma^{-1}(S a4, a5).
HopfData build_double_by_twist(const HopfData& u, const HopfData& h, const CocycleForm& c);

/// A quantum double built from group data (G, F, phi : F -> G injective).
struct QuantumDouble {
    GroupHom phi;
    HopfData u; // k^G
    HopfData h; // kF
    SkewPairing pairing;
    HopfData algebra;

    int index(int g, int x) const { return g * phi.source->order() + x; }
    std::pair<int, int> unindex(int i) const {
        int nf = phi.source->order();
        return {i / nf, i % nf};
    }
};

/// Builds both ways, requires exact agreement, and returns the double.
QuantumDouble make_double(const GroupHom& phi);

/// Checks that the function-algebra factor {p_g >< 1} is a normal Hopf
/// subalgebra: h1 u S(h2) = <u1 S(u3), h> u2 >< 1 for every H-factor basis
/// element, and closure under the U-factor adjoint action.
Report verify_normality_KU(const QuantumDouble& d);

/// Checks that u (x) h -> h (x) u is an exact Hopf isomorphism
/// D(U,H) -> D(H^op, U^op)^op built from the transposed pairing.
Report verify_swap_duality(const QuantumDouble& d);

/// The unique two-sided integral with eps(Lambda) = 1, by exact linear solve.
/// Throws std::logic_error if the solution space is not one-dimensional.
Vec haar_integral(const HopfData& a);

} // namespace qd
