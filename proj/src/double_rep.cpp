#include "qd/double_rep.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qd {

int IrrepCatalog::gamma_index(int g) const {
    for (int i = 0; i < static_cast<int>(gamma.size()); ++i)
        if (gamma[i] == g) return i;
    return -1;
}

int IrrepCatalog::find_label(int g, int m) const {
    for (int i = 0; i < static_cast<int>(labels.size()); ++i)
        if (labels[i].g == g && labels[i].m == m) return i;
    return -1;
}

namespace {

std::vector<int> left_coset_reps(const Subgroup& fg) {
    const auto& f = *fg.parent();
    std::vector<bool> seen(f.order(), false);
    std::vector<int> reps;
    for (int t = 0; t < f.order(); ++t) {
        if (seen[t]) continue;
        reps.push_back(t);
        for (int s : fg.elements()) seen[f.mul(t, s)] = true;
    }
    return reps;
}

} // namespace

std::vector<Cyclotomic> simple_character(const GroupHom& phi, int g,
                                         const Subgroup& fg,
                                         const std::vector<int>& reps,
                                         const ClassFunction& chi_m) {
    const auto& f = *phi.source;
    int nf = f.order(), ng = phi.target->order();
    std::vector<Cyclotomic> vals(static_cast<size_t>(ng) * nf);
    for (int t : reps) {
        // the basis vector t (x) m sits in the p_a eigenspace for
        // a = phi(t) g phi(t)^{-1}
        int a = phi_conjugate(phi, t, g);
        for (int x = 0; x < nf; ++x) {
            int s = f.mul(f.mul(f.inv(t), x), t);
            if (fg.contains(s))
                vals[static_cast<size_t>(a) * nf + x] += chi_m.at_element(fg.to_local(s));
        }
    }
    return vals;
}

IrrepCatalog catalog(const GroupHom& phi) {
    phi.require_injective();
    IrrepCatalog cat{phi, {}, {}, {}, {}, {}, {}};
    cat.gamma = orbit_representatives(phi);
    int nf = phi.source->order();
    long sumsq = 0;
    for (size_t oi = 0; oi < cat.gamma.size(); ++oi) {
        int g = cat.gamma[oi];
        auto os = orbit_and_stabilizer(phi, g);
        cat.stabilizers.push_back(os.stabilizer);
        const auto& fg = cat.stabilizers.back();
        cat.coset_reps.push_back(left_coset_reps(fg));
        const auto& table = character_table(fg.local());
        for (int m = 0; m < static_cast<int>(table.size()); ++m) {
            long deg = (nf / fg.order()) * table[m].degree_int();
            cat.labels.push_back({g, m, deg});
            cat.label_orbit.push_back(static_cast<int>(oi));
            cat.chars.push_back(
                simple_character(phi, g, fg, cat.coset_reps.back(), table[m]));
            sumsq += deg * deg;
        }
    }
    long want = static_cast<long>(phi.target->order()) * nf;
    if (sumsq != want)
        throw std::logic_error("catalog incomplete: sum of degree^2 = " +
                               std::to_string(sumsq) + ", expected " +
                               std::to_string(want));
    return cat;
}

Matrix rational_expansion(const std::vector<std::vector<Cyclotomic>>& rows) {
    long lcm = 1;
    for (const auto& row : rows)
        for (const auto& v : row) lcm = std::lcm(lcm, static_cast<long>(v.conductor()));
    int m = static_cast<int>(lcm);
    size_t width =
        Cyclotomic::cyclotomic_polynomial(m).size() - 1; // deg Phi_m
    Matrix out;
    for (const auto& row : rows) {
        Vector r;
        r.reserve(row.size() * width);
        for (const auto& v : row) {
            auto emb = v.embedded(m);
            for (size_t k = 0; k < width; ++k)
                r.push_back(k < emb.coefficients().size() ? emb.coefficients()[k]
                                                          : Rational(0));
        }
        out.push_back(std::move(r));
    }
    return out;
}

Report verify_catalog(const IrrepCatalog& cat) {
    Report rep;
    long sumsq = 0;
    for (const auto& l : cat.labels) sumsq += l.degree * l.degree;
    long want = static_cast<long>(cat.num_g()) * cat.num_f();
    rep.add("completeness: sum of degree^2 = |G||F|", sumsq == want,
            sumsq == want ? "" : std::to_string(sumsq) + " vs " + std::to_string(want));
    {
        bool ok = true;
        std::string w;
        for (size_t i = 0; i < cat.labels.size() && ok; ++i) {
            const auto& l = cat.labels[i];
            const auto& fg = cat.stabilizers[cat.label_orbit[i]];
            long dm = character_table(fg.local())[l.m].degree_int();
            if (l.degree != (cat.num_f() / fg.order()) * dm) {
                ok = false;
                w = "label (" + std::to_string(l.g) + ", " + std::to_string(l.m) + ")";
            }
            // degree = chi(1) = sum_a chi(p_a >< e)
            Cyclotomic total;
            for (int a = 0; a < cat.num_g(); ++a) total += cat.chi(static_cast<int>(i), a, 0);
            if (total != Cyclotomic(l.degree)) {
                ok = false;
                w = "character degree of label (" + std::to_string(l.g) + ", " +
                    std::to_string(l.m) + ")";
            }
        }
        rep.add("degree law [F:F_g] deg(M)", ok, w);
    }
    {
        int r = rank(rational_expansion(cat.chars));
        rep.add("characters linearly independent",
                r == static_cast<int>(cat.labels.size()),
                r == static_cast<int>(cat.labels.size())
                    ? ""
                    : "rank " + std::to_string(r) + " of " +
                          std::to_string(cat.labels.size()));
    }
    return rep;
}

Report verify_orthonormality(const IrrepCatalog& cat) {
    Report rep;
    auto d = make_double(cat.phi);
    auto lam = haar_integral(d.algebra);
    auto dlam = d.algebra.coproduct(lam);
    int n = static_cast<int>(cat.labels.size());
    auto eval = [&](int l, const Vec& v) {
        Cyclotomic acc;
        for (const auto& [k, c] : v) acc += cat.chars[l][k] * c;
        return acc;
    };
    bool ok = true;
    std::string w;
    for (int i = 0; i < n && ok; ++i)
        for (int j = 0; j < n && ok; ++j) {
            Cyclotomic m;
            for (const auto& [kk, c] : dlam) {
                Cyclotomic left = eval(i, d.algebra.s(Vec{{kk.first, Rational(1)}}));
                if (left.is_zero()) continue;
                m += left * cat.chars[j][kk.second] * c;
            }
            if (m != Cyclotomic(i == j ? 1 : 0)) {
                ok = false;
                std::ostringstream os;
                os << "m(" << i << ", " << j << ") = " << m.str();
                w = os.str();
            }
        }
    rep.add("multiplicity form through the integral is the identity matrix", ok, w);
    return rep;
}

Report restrict_to_KU(const IrrepCatalog& cat, const SimpleLabel& label) {
    Report rep;
    int l = cat.find_label(label.g, label.m);
    if (l < 0) {
        rep.add("label in catalog", false,
                "(" + std::to_string(label.g) + ", " + std::to_string(label.m) + ")");
        return rep;
    }
    auto orbit = orbit_and_stabilizer(cat.phi, label.g).orbit;
    const auto& fg = cat.stabilizers[cat.label_orbit[l]];
    long dm = character_table(fg.local())[label.m].degree_int();
    bool support_ok = true, value_ok = true;
    std::string w1, w2;
    std::vector<bool> in_orbit(cat.num_g(), false);
    for (int a : orbit) in_orbit[a] = true;
    Cyclotomic total;
    for (int a = 0; a < cat.num_g(); ++a) {
        const Cyclotomic& v = cat.chi(l, a, 0);
        total += v;
        if (in_orbit[a] && v != Cyclotomic(dm)) {
            value_ok = false;
            w2 = "a = " + std::to_string(a) + ": " + v.str();
        }
        if (!in_orbit[a] && !v.is_zero()) {
            support_ok = false;
            w1 = "a = " + std::to_string(a);
        }
    }
    rep.add("restriction supported exactly on the orbit of g", support_ok, w1);
    rep.add("restriction value deg(M) on each orbit element", value_ok, w2);
    rep.add("restriction sums to the degree", total == Cyclotomic(label.degree));
    return rep;
}

Report clifford_multiplicity_check(const IrrepCatalog& cat, int g) {
    Report rep;
    Cyclotomic side_a;
    for (size_t l = 0; l < cat.labels.size(); ++l) {
        const Cyclotomic& v = cat.chi(static_cast<int>(l), g, 0);
        side_a += v * v;
    }
    long fg = orbit_and_stabilizer(cat.phi, g).stabilizer.order();
    // dim(A) |F_g| / (|F||G|) with dim(A) = |G||F|
    Rational side_b =
        Rational(static_cast<long>(cat.num_g()) * cat.num_f() * fg,
                 static_cast<long>(cat.num_f()) * cat.num_g());
    bool rational = side_a.is_rational();
    rep.add("catalog side is rational", rational, rational ? "" : side_a.str());
    bool eq = rational && side_a.rational_value() == side_b;
    rep.add("multiplicity identity",
            eq,
            eq ? "" : side_a.str() + " vs " + rational_to_string(side_b));
    return rep;
}

} // namespace qd
