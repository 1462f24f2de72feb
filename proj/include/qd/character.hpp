#pragma once

#include "qd/cyclotomic.hpp"
#include "qd/group.hpp"

#include <utility>
#include <vector>

namespace qd {

/// A class function on a finite group, one exact cyclotomic value per
/// conjugacy class (class order as in FiniteGroup::conjugacy_classes).
class ClassFunction {
public:
    ClassFunction(GroupPtr group, std::vector<Cyclotomic> values);

    const GroupPtr& group() const { return group_; }
    const std::vector<Cyclotomic>& values() const { return values_; }
    const Cyclotomic& at_class(int c) const { return values_[c]; }
    const Cyclotomic& at_element(int g) const { return values_[group_->class_of(g)]; }
    const Cyclotomic& degree() const { return values_[0]; }
    long degree_int() const;

    ClassFunction operator+(const ClassFunction& o) const;
    /// Pointwise product (the character of the tensor product).
    ClassFunction operator*(const ClassFunction& o) const;
    ClassFunction scaled(const Rational& q) const;
    bool operator==(const ClassFunction& o) const;

private:
    GroupPtr group_;
    std::vector<Cyclotomic> values_;
};

ClassFunction trivial_character(const GroupPtr& g);
ClassFunction regular_character(const GroupPtr& g);

/// All irreducible characters, computed by Dixon's method (class-sum
/// matrices over F_p, p = least prime with p ≡ 1 mod exponent and
/// p > 2|G|, simultaneous eigenspaces, lift via root-of-unity
/// multiplicity counts). Trivial character first, remaining rows ordered
/// by (degree, lexicographic values). Row orthogonality is verified
/// exactly before returning.
const std::vector<ClassFunction>& character_table(const GroupPtr& g);

/// (1/|G|) sum_g chi(g) conj(psi(g))
Cyclotomic inner_product(const ClassFunction& chi, const ClassFunction& psi);

/// chi on K.parent() reorganized over K.local()'s classes.
ClassFunction restrict_to(const ClassFunction& chi, const Subgroup& k);

/// Frobenius induction of alpha on K.local() up to K.parent().
ClassFunction induce_from(const ClassFunction& alpha, const Subgroup& k);

/// Induction within a chain K <= L of subgroups of the same parent;
/// alpha lives on K.local(), result on L.local().
ClassFunction induce_between(const ClassFunction& alpha, const Subgroup& k,
                             const Subgroup& l);

/// Restriction within a chain S <= K of subgroups of the same parent;
/// alpha lives on K.local(), result on S.local().
ClassFunction restrict_between(const ClassFunction& alpha, const Subgroup& k,
                               const Subgroup& s);

/// (x alpha)(y) = alpha(x^{-1} y x); alpha on K.local(), result on
/// (xKx^{-1}).local().
std::pair<ClassFunction, Subgroup> conjugate_by(const ClassFunction& alpha,
                                                const Subgroup& k, int x);

/// Multiplicities <chi, chi_i> against the group's irreducible table;
/// throws std::domain_error if any multiplicity is not a nonnegative
/// rational integer.
std::vector<std::pair<int, long>> decompose(const ClassFunction& chi);

} // namespace qd
