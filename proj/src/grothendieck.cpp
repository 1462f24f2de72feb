#include "qd/grothendieck.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace qd {

GroupRingElement GroupRingElement::operator+(const GroupRingElement& o) const {
    GroupRingElement r(group);
    for (int i = 0; i < group->order(); ++i) r.coeffs[i] = coeffs[i] + o.coeffs[i];
    return r;
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& o) const {
    GroupRingElement r(group);
    for (int i = 0; i < group->order(); ++i) {
        if (coeffs[i] == 0) continue;
        for (int j = 0; j < group->order(); ++j)
            r.coeffs[group->mul(i, j)] += coeffs[i] * o.coeffs[j];
    }
    return r;
}

GroupRingElement GroupRingElement::scaled(long c) const {
    GroupRingElement r(group);
    for (int i = 0; i < group->order(); ++i) r.coeffs[i] = c * coeffs[i];
    return r;
}

bool GroupRingElement::operator==(const GroupRingElement& o) const {
    return group == o.group && coeffs == o.coeffs;
}

std::string GroupRingElement::str() const {
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i < group->order(); ++i) {
        if (coeffs[i] == 0) continue;
        if (!first) out << " + ";
        out << coeffs[i] << "*"
            << (group->element_names().empty() ? std::to_string(i)
                                               : group->element_names()[i]);
        first = false;
    }
    return first ? "0" : out.str();
}

GroupRingElement orbit_sum(const GroupHom& phi, int g) {
    GroupRingElement r(phi.target);
    for (int a : orbit_and_stabilizer(phi, g).orbit) r.coeffs[a] = 1;
    return r;
}

Report verify_orbit_sum_products(const GroupHom& phi) {
    Report rep;
    const auto& g = *phi.target;
    auto gamma = orbit_representatives(phi);
    bool ok = true;
    std::string w;
    for (int a : gamma) {
        auto fa = orbit_and_stabilizer(phi, a).stabilizer;
        for (int b : gamma) {
            auto fb = orbit_and_stabilizer(phi, b).stabilizer;
            auto lhs = orbit_sum(phi, a) * orbit_sum(phi, b);
            GroupRingElement rhs(phi.target);
            for (int x : double_cosets(fa, fb).reps) {
                int xa = phi_conjugate(phi, x, a);
                int ab = g.mul(xa, b);
                auto fxa = orbit_and_stabilizer(phi, xa).stabilizer;
                auto fab = orbit_and_stabilizer(phi, ab).stabilizer;
                long index = fab.order() / intersect(fxa, fb).order();
                rhs = rhs + orbit_sum(phi, ab).scaled(index);
            }
            if (!(lhs == rhs) && ok) {
                ok = false;
                w = "s(" + std::to_string(a) + ") s(" + std::to_string(b) + "): " +
                    lhs.str() + " vs " + rhs.str();
            }
        }
    }
    rep.add("orbit-sum products match the double-coset index formula", ok, w);
    return rep;
}

FusionRing build_ring(const IrrepCatalog& cat) {
    int n = static_cast<int>(cat.labels.size());
    FusionRing ring{cat,
                    std::vector<std::vector<std::vector<long>>>(
                        n, std::vector<std::vector<long>>(n, std::vector<long>(n, 0)))};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (const auto& [lab, m] : fuse(cat, cat.labels[i], cat.labels[j]).terms) {
                int k = cat.find_label(lab.g, lab.m);
                if (k < 0 || m < 0)
                    throw std::logic_error("fusion produced an invalid term");
                ring.n[i][j][k] = m;
            }
    // unit row and column
    int unit = cat.find_label(0, 0);
    if (unit < 0) throw std::logic_error("unit label missing");
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            if (ring.n[unit][i][k] != (i == k ? 1 : 0) ||
                ring.n[i][unit][k] != (i == k ? 1 : 0))
                throw std::logic_error("unit row/column is not the identity");
    // grading containment: block(g) block(h) inside {orbit(xg h)}
    const auto& phi = cat.phi;
    const auto& g = *phi.target;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::set<int> allowed;
            for (int x = 0; x < phi.source->order(); ++x) {
                int prod = g.mul(phi_conjugate(phi, x, cat.labels[i].g), cat.labels[j].g);
                // orbit representative of prod
                int rep = *orbit_and_stabilizer(phi, prod).orbit.begin();
                allowed.insert(rep);
            }
            for (int k = 0; k < n; ++k)
                if (ring.n[i][j][k] != 0 && !allowed.count(cat.labels[k].g))
                    throw std::logic_error("grading containment violated");
        }
    return ring;
}

Report verify_ring_surjection(const FusionRing& ring) {
    Report rep;
    const auto& cat = ring.cat;
    const auto& phi = cat.phi;
    int n = ring.size();
    int ng = cat.num_g();
    // Phi(S_{g,M}) = deg(M) s(g)
    std::vector<GroupRingElement> image;
    for (const auto& l : cat.labels) {
        const auto& fg = cat.stabilizers[cat.label_orbit[cat.find_label(l.g, l.m)]];
        long dm = character_table(fg.local())[l.m].degree_int();
        image.push_back(orbit_sum(phi, l.g).scaled(dm));
    }
    {
        bool ok = true;
        std::string w;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j) {
                GroupRingElement rhs(phi.target);
                for (int k = 0; k < n; ++k)
                    if (ring.n[i][j][k] != 0) rhs = rhs + image[k].scaled(ring.n[i][j][k]);
                if (!(image[i] * image[j] == rhs)) {
                    ok = false;
                    w = "pair (" + std::to_string(i) + ", " + std::to_string(j) + ")";
                }
            }
        rep.add("Phi is a ring homomorphism", ok, w);
    }
    {
        int unit = cat.find_label(0, 0);
        GroupRingElement one(phi.target);
        one.coeffs[0] = 1;
        rep.add("Phi is unital", image[unit] == one);
    }
    // image span = span of orbit sums = centralizer C_{ZG}(ZF), over Q
    auto gamma = orbit_representatives(phi);
    {
        Matrix rows;
        for (const auto& e : image) {
            Vector r(ng);
            for (int i = 0; i < ng; ++i) r[i] = e.coeffs[i];
            rows.push_back(std::move(r));
        }
        int rk = rank(rows);
        rep.add("image rank equals the number of orbits",
                rk == static_cast<int>(gamma.size()),
                "rank " + std::to_string(rk) + ", orbits " +
                    std::to_string(gamma.size()));
    }
    {
        // f in QG with phi(x) f = f phi(x) for all x: linear system
        const auto& g = *phi.target;
        Matrix m;
        for (int x = 0; x < phi.source->order(); ++x) {
            int px = phi(x);
            Matrix block(ng, Vector(ng, Rational(0)));
            // coefficient of e_k in (px * e_j - e_j * px)
            for (int j = 0; j < ng; ++j) {
                block[g.mul(px, j)][j] += 1;
                block[g.mul(j, px)][j] -= 1;
            }
            for (auto& row : block) m.push_back(std::move(row));
        }
        auto cent = nullspace(std::move(m));
        bool dim_ok = cent.size() == gamma.size();
        rep.add("centralizer dimension equals the number of orbit sums", dim_ok,
                "dim " + std::to_string(cent.size()));
        // every orbit sum is in the centralizer by construction; spans agree
        // iff the dimensions match, since orbit sums are independent
        bool sums_central = true;
        std::string w;
        for (int ge : gamma) {
            auto s = orbit_sum(phi, ge);
            for (int x = 0; x < phi.source->order() && sums_central; ++x) {
                GroupRingElement px(phi.target);
                px.coeffs[phi(x)] = 1;
                if (!(px * s == s * px)) {
                    sums_central = false;
                    w = "s(" + std::to_string(ge) + ")";
                }
            }
        }
        rep.add("orbit sums centralize the image of F", sums_central, w);
    }
    return rep;
}

Report witherspoon_maps(const FusionRing& ring) {
    Report rep;
    const auto& cat = ring.cat;
    const auto& phi = cat.phi;
    int nf = phi.source->order();
    {
        bool ok = true;
        std::string w;
        for (size_t oi = 0; oi < cat.gamma.size() && ok; ++oi) {
            int g = cat.gamma[oi];
            const auto& fg = cat.stabilizers[oi];
            int rows = static_cast<int>(character_table(fg.local()).size());
            for (int m = 0; m < rows && ok; ++m)
                for (int x : fg.elements())
                    if (conjugate_label(phi, x, g, m) != std::pair{g, m}) {
                        ok = false;
                        w = "x = " + std::to_string(x) + ", label (" +
                            std::to_string(g) + ", " + std::to_string(m) + ")";
                    }
        }
        rep.add("conjugation by stabilizer elements is the identity", ok, w);
    }
    {
        bool ok = true;
        std::string w;
        for (size_t oi = 0; oi < cat.gamma.size() && ok; ++oi) {
            int g = cat.gamma[oi];
            int rows = static_cast<int>(character_table(cat.stabilizers[oi].local()).size());
            for (int m = 0; m < rows && ok; ++m)
                for (int x = 0; x < nf && ok; ++x) {
                    auto [xg, xm] = conjugate_label(phi, x, g, m);
                    for (int y = 0; y < nf && ok; ++y)
                        if (conjugate_label(phi, y, xg, xm) !=
                            conjugate_label(phi, phi.source->mul(y, x), g, m)) {
                            ok = false;
                            w = "g = " + std::to_string(g) + ", x = " +
                                std::to_string(x) + ", y = " + std::to_string(y);
                        }
                }
        }
        rep.add("conjugation composition law", ok, w);
    }
    return rep;
}

} // namespace qd
