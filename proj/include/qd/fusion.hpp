#pragma once

#include "qd/double_rep.hpp"

namespace qd {

/// Decomposition of a tensor product of two simple modules.
struct FusionOutcome {
    SimpleLabel left, right;
    std::vector<std::pair<SimpleLabel, long>> terms; // sorted by label

    long dimension() const {
        long d = 0;
        for (const auto& [l, m] : terms) d += m * l.degree;
        return d;
    }
    bool operator==(const FusionOutcome& o) const { return terms == o.terms; }
};

/// (g, M) -> (xgx^{-1}, xM) where xM(y) = M(x^{-1}yx) on F_{xg} = xF_gx^{-1};
/// m indexes character_table(F_g), the result indexes character_table(F_{xg}).
std::pair<int, int> conjugate_label(const GroupHom& phi, int x, int g, int m);

/// (chi_m|_{F_g cap F_h} * chi_n|_{F_g cap F_h}) induced to F_{gh}.
/// chi_m lives on fg.local(), chi_n on fh.local(); result on fgh.local().
ClassFunction m_gh(const Subgroup& fg, const ClassFunction& chi_m,
                   const Subgroup& fh, const ClassFunction& chi_n,
                   const Subgroup& fgh);

/// Tensor-product decomposition over double-coset representatives:
/// for each x form xM, P(x) = (xM| (x) N|) induced to F_{xg h}, decompose,
/// and transport every summand to its orbit representative.
FusionOutcome fuse(const IrrepCatalog& cat, const SimpleLabel& left,
                   const SimpleLabel& right);

/// Same, with an explicit set of double-coset representatives
/// (one per F_{left.g} \ F / F_{right.g} coset).
FusionOutcome fuse_with_reps(const IrrepCatalog& cat, const SimpleLabel& left,
                             const SimpleLabel& right, const std::vector<int>& reps);

/// Independent check: multiplies the two characters pointwise on all basis
/// pairs (the coalgebra of the double is the tensor coalgebra) and solves the
/// exact linear system in the simple-character basis. All multiplicities must
/// be nonnegative integers. The character matrix is factored once at
/// construction so repeated decompositions stay cheap; keeps a reference to
/// the catalog, which must outlive the oracle.
class FusionOracle {
  public:
    explicit FusionOracle(const IrrepCatalog& cat);
    FusionOutcome fuse(const SimpleLabel& left, const SimpleLabel& right) const;

  private:
    const IrrepCatalog* cat_;
    int conductor_;           // common conductor of all character values
    size_t width_;            // deg Phi_conductor
    Matrix exp_;              // label characters in rational coordinates
    std::vector<int> coords_; // coordinates forming an invertible square
    Matrix inv_;              // inverse of that square
};

/// One-shot convenience wrapper around FusionOracle.
FusionOutcome oracle_fuse(const IrrepCatalog& cat, const SimpleLabel& left,
                          const SimpleLabel& right);

/// fuse == oracle_fuse for every ordered pair; recomputation with
/// representatives drawn from the opposite double-coset decomposition and
/// with perturbed representatives gives identical multisets.
Report verify_fusion_table(const IrrepCatalog& cat);

} // namespace qd
