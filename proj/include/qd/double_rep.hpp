#pragma once

#include "qd/character.hpp"
#include "qd/hopf.hpp"
#include "qd/linalg.hpp"

#include <vector>

namespace qd {

/// A simple module S_{g,M} = kF (x)_{kF_g} M: an orbit representative g
/// together with an irreducible character of the stabilizer F_g.
struct SimpleLabel {
    int g;       // orbit representative (element of G)
    int m;       // row index into character_table(F_g)
    long degree; // [F : F_g] * deg(M)

    bool operator==(const SimpleLabel& o) const { return g == o.g && m == o.m; }
    bool operator<(const SimpleLabel& o) const {
        return g != o.g ? g < o.g : m < o.m;
    }
};

/// The full list of simple modules of D(k^G, kF) with their characters,
/// stored densely over the |G|*|F| basis pairs (a, x) <-> p_a >< x.
struct IrrepCatalog {
    GroupHom phi;
    std::vector<int> gamma;                    // orbit representatives, sorted
    std::vector<Subgroup> stabilizers;         // F_g for each gamma entry
    std::vector<std::vector<int>> coset_reps;  // left coset reps of F / F_g
    std::vector<SimpleLabel> labels;           // ordered by (gamma order, table row)
    std::vector<int> label_orbit;              // gamma index per label
    std::vector<std::vector<Cyclotomic>> chars; // chars[l][a * |F| + x]

    int num_f() const { return phi.source->order(); }
    int num_g() const { return phi.target->order(); }
    const Cyclotomic& chi(int label, int a, int x) const {
        return chars[label][a * num_f() + x];
    }
    /// Index of gamma entry, -1 if g is not a representative.
    int gamma_index(int g) const;
    /// Index of the label (g, m), -1 if absent.
    int find_label(int g, int m) const;
};

/// Enumerates one label per (g in Gamma, M in Irr(F_g)) and computes all
/// characters. Throws std::logic_error if sum of degree^2 != |G||F|.
IrrepCatalog catalog(const GroupHom& phi);

/// chi(p_a >< x) = sum over coset representatives t with t^{-1}xt in F_g and
/// tgt^{-1} = a of chi_M(t^{-1}xt). Exposed with explicit representatives so
/// representative-independence can be tested.
std::vector<Cyclotomic> simple_character(const GroupHom& phi, int g,
                                         const Subgroup& fg,
                                         const std::vector<int>& reps,
                                         const ClassFunction& chi_m);

/// Completeness, degree law, and linear independence of the characters.
Report verify_catalog(const IrrepCatalog& cat);

/// Gram matrix of the multiplicity form through the Haar integral of the
/// double must be the identity. Builds the double; use only at desk scale.
Report verify_orthonormality(const IrrepCatalog& cat);

/// Restriction of a label's character to the p_a >< e basis: supported
/// exactly on the orbit of g with constant value deg(M).
Report restrict_to_KU(const IrrepCatalog& cat, const SimpleLabel& label);

/// Both sides of the multiplicity identity m(g, g induced-restricted) =
/// dim(A)|F_g| / (|F||G|), as exact rationals.
Report clifford_multiplicity_check(const IrrepCatalog& cat, int g);

/// Expands cyclotomic values over a common conductor into rational
/// coordinates (shared by the linear-independence check and the fusion
/// oracle's linear system).
Matrix rational_expansion(const std::vector<std::vector<Cyclotomic>>& rows);

} // namespace qd
