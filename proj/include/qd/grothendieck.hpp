#pragma once

#include "qd/fusion.hpp"

namespace qd {

/// An element of the integral group ring ZG, as a dense coefficient vector.
struct GroupRingElement {
    GroupPtr group;
    std::vector<long> coeffs;

    explicit GroupRingElement(GroupPtr g)
        : group(std::move(g)), coeffs(group->order(), 0) {}

    GroupRingElement operator+(const GroupRingElement& o) const;
    GroupRingElement operator*(const GroupRingElement& o) const;
    GroupRingElement scaled(long c) const;
    bool operator==(const GroupRingElement& o) const;
    std::string str() const;
};

/// s(g) = sum of the phi-conjugation orbit of g, coefficient 1 each.
GroupRingElement orbit_sum(const GroupHom& phi, int g);

/// s(g) s(h) = sum over double-coset representatives x of
/// [F_{xg h} : F_{xg} cap F_h] s(xg h), checked by direct ZG expansion
/// for all pairs of orbit representatives.
Report verify_orbit_sum_products(const GroupHom& phi);

/// The Grothendieck ring: simple labels as basis, fusion structure constants,
/// graded by the orbit of the label's g.
struct FusionRing {
    IrrepCatalog cat;
    std::vector<std::vector<std::vector<long>>> n; // N_{ij}^k

    int size() const { return static_cast<int>(cat.labels.size()); }
};

/// Assembles structure constants from fuse and checks: nonnegativity, the
/// unit row/column, and the orbit-grading containment
/// block(g) block(h) subset of blocks {orbit(xg h)}. Throws on violation.
FusionRing build_ring(const IrrepCatalog& cat);

/// Phi([S_{g,M}]) = deg(M) s(g) is a unital ring homomorphism onto the
/// Z-span of the orbit sums, which equals the centralizer C_{ZG}(ZF)
/// (computed independently as a linear system). For phi = id this is the
/// classical surjection onto the center of ZG.
Report verify_ring_surjection(const FusionRing& ring);

/// K0-level structure maps: conjugation by x in F_g is the identity on the
/// g-block, and the composition law c_{y} c_{x} = c_{yx} holds.
Report witherspoon_maps(const FusionRing& ring);

} // namespace qd
