#include "qd/fusion.hpp"

#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qd {

namespace {

/// Matches a class function against a character table by exact values.
/// Valid whenever both local groups were built from the same element set.
int match_row(const std::vector<ClassFunction>& table, const ClassFunction& chi) {
    for (int i = 0; i < static_cast<int>(table.size()); ++i)
        if (table[i].values() == chi.values()) return i;
    return -1;
}

std::string label_str(const SimpleLabel& l) {
    return "(" + std::to_string(l.g) + ":" + std::to_string(l.m) + ")";
}

} // namespace

std::pair<int, int> conjugate_label(const GroupHom& phi, int x, int g, int m) {
    auto fg = orbit_and_stabilizer(phi, g).stabilizer;
    const auto& table = character_table(fg.local());
    auto [chi, fxg] = conjugate_by(table[m], fg, x);
    int xg = phi_conjugate(phi, x, g);
    int row = match_row(character_table(fxg.local()), chi);
    if (row < 0) throw std::logic_error("conjugate character is not irreducible");
    return {xg, row};
}

ClassFunction m_gh(const Subgroup& fg, const ClassFunction& chi_m,
                   const Subgroup& fh, const ClassFunction& chi_n,
                   const Subgroup& fgh) {
    Subgroup inter = intersect(fg, fh);
    for (int e : inter.elements())
        if (!fgh.contains(e))
            throw std::logic_error("F_g cap F_h is not contained in F_{gh}");
    auto prod = restrict_between(chi_m, fg, inter) * restrict_between(chi_n, fh, inter);
    return induce_between(prod, inter, fgh);
}

FusionOutcome fuse_with_reps(const IrrepCatalog& cat, const SimpleLabel& left,
                             const SimpleLabel& right, const std::vector<int>& reps) {
    const auto& phi = cat.phi;
    const auto& g = *phi.target;
    int li = cat.find_label(left.g, left.m), ri = cat.find_label(right.g, right.m);
    if (li < 0 || ri < 0) throw std::invalid_argument("label not in catalog");
    const Subgroup& fg = cat.stabilizers[cat.label_orbit[li]];
    const Subgroup& fh = cat.stabilizers[cat.label_orbit[ri]];
    const ClassFunction& chi_m = character_table(fg.local())[left.m];
    const ClassFunction& chi_n = character_table(fh.local())[right.m];

    std::map<SimpleLabel, long> acc;
    for (int x : reps) {
        // the action attached to the pairing conjugates by phi(x)^{-1}
        int xi = phi.source->inv(x);
        auto [chi_xm, fxg] = conjugate_by(chi_m, fg, xi);
        int xg = phi_conjugate(phi, xi, left.g);
        int gh = g.mul(xg, right.g);
        Subgroup fgh = orbit_and_stabilizer(phi, gh).stabilizer;
        ClassFunction p = m_gh(fxg, chi_xm, fh, chi_n, fgh);
        const auto& tgh = character_table(fgh.local());
        // transport (gh, Q) to its orbit representative: minimal y in F
        int y = -1;
        for (int cand = 0; cand < phi.source->order() && y < 0; ++cand)
            if (cat.gamma_index(phi_conjugate(phi, cand, gh)) >= 0) y = cand;
        if (y < 0) throw std::logic_error("orbit representative not found");
        int ygh = phi_conjugate(phi, y, gh);
        int oi = cat.gamma_index(ygh);
        const auto& target_table = character_table(cat.stabilizers[oi].local());
        long coset_index = cat.num_f() / cat.stabilizers[oi].order();
        for (auto [q, mult] : decompose(p)) {
            auto [chi_q, fygh] = conjugate_by(tgh[q], fgh, y);
            int row = match_row(target_table, chi_q);
            if (row < 0)
                throw std::logic_error("transported character is not irreducible");
            long deg = coset_index * target_table[row].degree_int();
            acc[SimpleLabel{ygh, row, deg}] += mult;
        }
    }
    FusionOutcome out{left, right, {}};
    for (const auto& [l, m] : acc)
        if (m != 0) out.terms.emplace_back(l, m);
    if (out.dimension() != left.degree * right.degree)
        throw std::logic_error("fusion dimension imbalance for " + label_str(left) +
                               " x " + label_str(right));
    return out;
}

FusionOutcome fuse(const IrrepCatalog& cat, const SimpleLabel& left,
                   const SimpleLabel& right) {
    int li = cat.find_label(left.g, left.m), ri = cat.find_label(right.g, right.m);
    if (li < 0 || ri < 0) throw std::invalid_argument("label not in catalog");
    auto dec = double_cosets(cat.stabilizers[cat.label_orbit[li]],
                             cat.stabilizers[cat.label_orbit[ri]]);
    return fuse_with_reps(cat, left, right, dec.reps);
}

FusionOracle::FusionOracle(const IrrepCatalog& cat) : cat_(&cat) {
    long lcm = 1;
    for (const auto& row : cat.chars)
        for (const auto& v : row)
            lcm = std::lcm(lcm, static_cast<long>(v.conductor()));
    conductor_ = static_cast<int>(lcm);
    width_ = Cyclotomic::cyclotomic_polynomial(conductor_).size() - 1;
    exp_ = rational_expansion(cat.chars);
    int nl = static_cast<int>(cat.labels.size());
    Matrix tmp = exp_;
    auto pivots = row_reduce(tmp);
    if (static_cast<int>(pivots.size()) != nl)
        throw std::logic_error("oracle: simple characters are linearly dependent");
    coords_ = pivots;
    // invert the square submatrix S[k][l] = exp_[l][coords_[k]]
    Matrix aug(nl, Vector(2 * static_cast<size_t>(nl), Rational(0)));
    for (int k = 0; k < nl; ++k) {
        for (int l = 0; l < nl; ++l) aug[k][l] = exp_[l][coords_[k]];
        aug[k][nl + k] = 1;
    }
    if (static_cast<int>(row_reduce(aug, nl).size()) != nl)
        throw std::logic_error("oracle: pivot square is singular");
    inv_.assign(nl, Vector(nl));
    for (int i = 0; i < nl; ++i)
        for (int j = 0; j < nl; ++j) inv_[i][j] = aug[i][nl + j];
}

FusionOutcome FusionOracle::fuse(const SimpleLabel& left,
                                 const SimpleLabel& right) const {
    const IrrepCatalog& cat = *cat_;
    int li = cat.find_label(left.g, left.m), ri = cat.find_label(right.g, right.m);
    if (li < 0 || ri < 0) throw std::invalid_argument("label not in catalog");
    int nf = cat.num_f(), ng = cat.num_g();
    const auto& g = *cat.phi.target;
    // chi_{VxW}(p_a >< x) = sum over a' b = a of chi_V(p_{a'} >< x) chi_W(p_b >< x)
    std::vector<Cyclotomic> prod(static_cast<size_t>(ng) * nf);
    for (int a = 0; a < ng; ++a)
        for (int b = 0; b < ng; ++b) {
            int ap = g.mul(a, g.inv(b));
            for (int x = 0; x < nf; ++x) {
                const auto& v = cat.chi(li, ap, x);
                if (v.is_zero()) continue;
                const auto& w = cat.chi(ri, b, x);
                if (w.is_zero()) continue;
                prod[static_cast<size_t>(a) * nf + x] += v * w;
            }
        }
    // the product lies in the same cyclotomic field, so its coordinates line
    // up with exp_ column for column
    Vector b;
    b.reserve(prod.size() * width_);
    for (const auto& v : prod) {
        auto emb = v.embedded(conductor_);
        for (size_t k = 0; k < width_; ++k)
            b.push_back(k < emb.coefficients().size() ? emb.coefficients()[k]
                                                      : Rational(0));
    }
    int nl = static_cast<int>(cat.labels.size());
    Vector x(nl, Rational(0));
    for (int l = 0; l < nl; ++l)
        for (int k = 0; k < nl; ++k) {
            const Rational& bk = b[coords_[k]];
            if (inv_[l][k] != 0 && bk != 0) x[l] += inv_[l][k] * bk;
        }
    // the candidate must reproduce every coordinate exactly
    for (size_t c = 0; c < b.size(); ++c) {
        Rational acc = 0;
        for (int l = 0; l < nl; ++l)
            if (x[l] != 0 && exp_[l][c] != 0) acc += x[l] * exp_[l][c];
        if (acc != b[c]) throw std::logic_error("oracle system has no solution");
    }
    FusionOutcome out{left, right, {}};
    for (int l = 0; l < nl; ++l) {
        if (x[l] == 0) continue;
        if (!is_integer(x[l]) || x[l] < 0)
            throw std::logic_error("oracle multiplicity " + rational_to_string(x[l]) +
                                   " is not a nonnegative integer");
        out.terms.emplace_back(cat.labels[l], to_long(x[l]));
    }
    if (out.dimension() != left.degree * right.degree)
        throw std::logic_error("oracle dimension imbalance");
    return out;
}

FusionOutcome oracle_fuse(const IrrepCatalog& cat, const SimpleLabel& left,
                          const SimpleLabel& right) {
    return FusionOracle(cat).fuse(left, right);
}

Report verify_fusion_table(const IrrepCatalog& cat) {
    Report rep;
    bool formula_ok = true, order_ok = true, perturb_ok = true;
    std::string w1, w2, w3;
    const auto& f = *cat.phi.source;
    FusionOracle by_characters(cat);
    for (const auto& left : cat.labels) {
        for (const auto& right : cat.labels) {
            FusionOutcome base;
            try {
                base = fuse(cat, left, right);
                auto oracle = by_characters.fuse(left, right);
                if (!(base == oracle) && formula_ok) {
                    formula_ok = false;
                    w1 = label_str(left) + " x " + label_str(right);
                }
            } catch (const std::exception& e) {
                if (formula_ok) {
                    formula_ok = false;
                    w1 = label_str(left) + " x " + label_str(right) + ": " + e.what();
                }
                continue;
            }
            const Subgroup& fg = cat.stabilizers[cat.label_orbit[cat.find_label(
                left.g, left.m)]];
            const Subgroup& fh = cat.stabilizers[cat.label_orbit[cat.find_label(
                right.g, right.m)]];
            // representatives from the opposite decomposition F_h \ F / F_g
            std::vector<int> alt;
            for (int x : double_cosets(fh, fg).reps) alt.push_back(f.inv(x));
            if (!(fuse_with_reps(cat, left, right, alt) == base) && order_ok) {
                order_ok = false;
                w2 = label_str(left) + " x " + label_str(right);
            }
            // representative choice inside each double coset is immaterial
            auto dec = double_cosets(fg, fh);
            std::vector<int> shifted;
            for (int x : dec.reps)
                shifted.push_back(
                    f.mul(fg.elements().back(), f.mul(x, fh.elements().back())));
            if (!(fuse_with_reps(cat, left, right, shifted) == base) && perturb_ok) {
                perturb_ok = false;
                w3 = label_str(left) + " x " + label_str(right);
            }
        }
    }
    rep.add("fusion formula equals the character oracle on all pairs", formula_ok, w1);
    rep.add("double-coset order insensitivity", order_ok, w2);
    rep.add("representative choice insensitivity", perturb_ok, w3);
    // unit law
    {
        SimpleLabel unit{cat.gamma[0], 0, 1};
        bool ok = cat.gamma[0] == 0;
        std::string w;
        for (const auto& l : cat.labels) {
            auto a = fuse(cat, unit, l);
            auto b = fuse(cat, l, unit);
            bool this_ok = a.terms.size() == 1 && a.terms[0].first == l &&
                           a.terms[0].second == 1 && b.terms.size() == 1 &&
                           b.terms[0].first == l && b.terms[0].second == 1;
            if (!this_ok && ok) {
                ok = false;
                w = label_str(l);
            }
        }
        rep.add("unit law for S_{e,triv}", ok, w);
    }
    return rep;
}

} // namespace qd
