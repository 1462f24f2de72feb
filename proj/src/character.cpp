#include "qd/character.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace qd {

ClassFunction::ClassFunction(GroupPtr group, std::vector<Cyclotomic> values)
    : group_(std::move(group)), values_(std::move(values)) {
    if (static_cast<int>(values_.size()) != group_->num_classes())
        throw std::invalid_argument("class function: value count != class count");
}

long ClassFunction::degree_int() const {
    if (!values_[0].is_rational_integer())
        throw std::domain_error("degree is not a rational integer");
    return to_long(values_[0].rational_value());
}

ClassFunction ClassFunction::operator+(const ClassFunction& o) const {
    if (group_ != o.group_) throw std::invalid_argument("class functions on different groups");
    std::vector<Cyclotomic> v(values_.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = values_[i] + o.values_[i];
    return ClassFunction(group_, std::move(v));
}

ClassFunction ClassFunction::operator*(const ClassFunction& o) const {
    if (group_ != o.group_) throw std::invalid_argument("class functions on different groups");
    std::vector<Cyclotomic> v(values_.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = values_[i] * o.values_[i];
    return ClassFunction(group_, std::move(v));
}

ClassFunction ClassFunction::scaled(const Rational& q) const {
    std::vector<Cyclotomic> v(values_.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = values_[i] * q;
    return ClassFunction(group_, std::move(v));
}

bool ClassFunction::operator==(const ClassFunction& o) const {
    if (group_ != o.group_) return false;
    for (size_t i = 0; i < values_.size(); ++i)
        if (values_[i] != o.values_[i]) return false;
    return true;
}

ClassFunction trivial_character(const GroupPtr& g) {
    return ClassFunction(g, std::vector<Cyclotomic>(g->num_classes(), Cyclotomic(1)));
}

ClassFunction regular_character(const GroupPtr& g) {
    std::vector<Cyclotomic> v(g->num_classes(), Cyclotomic(0));
    v[0] = Cyclotomic(static_cast<long>(g->order()));
    return ClassFunction(g, std::move(v));
}

// ---------------------------------------------------------------------------
// Dixon's method
// ---------------------------------------------------------------------------

namespace {

using i64 = long long;

i64 pow_mod(i64 b, i64 e, i64 p) {
    i64 r = 1 % p;
    b %= p;
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

i64 inv_mod(i64 a, i64 p) { return pow_mod(((a % p) + p) % p, p - 2, p); }

bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// least prime p ≡ 1 mod m with p > 2|G|
i64 dixon_prime(int m, int order) {
    for (i64 p = 2 * order + 1;; ++p) {
        if ((p - 1) % m != 0) continue;
        if (is_prime(p)) return p;
        if (p > 100000000LL) throw std::runtime_error("no admissible Dixon prime found");
    }
}

i64 primitive_root_of_order(i64 p, i64 m) {
    // find a generator of F_p^*, then take the (p-1)/m power
    i64 phi = p - 1;
    std::vector<i64> factors;
    i64 t = phi;
    for (i64 d = 2; d * d <= t; ++d)
        if (t % d == 0) {
            factors.push_back(d);
            while (t % d == 0) t /= d;
        }
    if (t > 1) factors.push_back(t);
    for (i64 g = 2; g < p; ++g) {
        bool ok = true;
        for (i64 f : factors)
            if (pow_mod(g, phi / f, p) == 1) { ok = false; break; }
        if (ok) return pow_mod(g, phi / m, p);
    }
    throw std::logic_error("no primitive root found");
}

using FpMatrix = std::vector<std::vector<i64>>;
using FpVector = std::vector<i64>;

// nullspace basis of an r x c matrix mod p
std::vector<FpVector> fp_nullspace(FpMatrix m, i64 p) {
    if (m.empty()) return {};
    int rows = static_cast<int>(m.size());
    int cols = static_cast<int>(m[0].size());
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int sel = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] % p != 0) { sel = i; break; }
        if (sel < 0) continue;
        std::swap(m[r], m[sel]);
        i64 inv = inv_mod(m[r][c], p);
        for (auto& v : m[r]) v = v * inv % p;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] % p == 0) continue;
            i64 f = m[i][c] % p;
            for (int j = c; j < cols; ++j) m[i][j] = ((m[i][j] - f * m[r][j]) % p + p) % p;
        }
        pivots.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<FpVector> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        FpVector v(cols, 0);
        v[free] = 1;
        for (size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = (p - m[i][free] % p) % p;
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<ClassFunction> dixon_table(const GroupPtr& gp) {
    const FiniteGroup& g = *gp;
    const auto& classes = g.conjugacy_classes();
    int r = static_cast<int>(classes.size());
    int n = g.order();
    int m = g.exponent();
    i64 p = dixon_prime(m, n);
    i64 eta = primitive_root_of_order(p, m); // fixed primitive m-th root mod p

    std::vector<int> rep(r), csize(r), inv_class(r);
    for (int i = 0; i < r; ++i) {
        rep[i] = classes[i][0];
        csize[i] = static_cast<int>(classes[i].size());
        inv_class[i] = g.class_of(g.inv(rep[i]));
    }

    // class algebra constants: N[i][j][k] = #{(x,y) in Ci x Cj : xy in Ck},
    // a_{ij}^k = N[i][j][k] / |Ck|
    std::vector<std::vector<std::vector<i64>>> a(
        r, std::vector<std::vector<i64>>(r, std::vector<i64>(r, 0)));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) a[g.class_of(x)][g.class_of(y)][g.class_of(g.mul(x, y))]++;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k) a[i][j][k] /= csize[k];

    // split the class-sum coordinate space into common eigenspaces;
    // a subspace is a list of coordinate vectors (columns of S)
    std::vector<std::vector<FpVector>> spaces;
    {
        std::vector<FpVector> full;
        for (int i = 0; i < r; ++i) {
            FpVector e(r, 0);
            e[i] = 1;
            full.push_back(std::move(e));
        }
        spaces.push_back(std::move(full));
    }
    for (int i = 1; i < r; ++i) {
        // (A_i)_{k,j} = a_{i,k}^{j}
        std::vector<std::vector<FpVector>> next;
        for (auto& space : spaces) {
            if (space.size() <= 1) { next.push_back(std::move(space)); continue; }
            int s = static_cast<int>(space.size());
            // columns A_i * S and S
            FpMatrix ais(r, FpVector(s, 0)), smat(r, FpVector(s, 0));
            for (int c = 0; c < s; ++c)
                for (int k = 0; k < r; ++k) {
                    smat[k][c] = space[c][k];
                    i64 acc = 0;
                    for (int j = 0; j < r; ++j) acc += a[i][k][j] % p * space[c][j] % p;
                    ais[k][c] = acc % p;
                }
            std::vector<std::vector<FpVector>> split;
            for (i64 t = 0; t < p && static_cast<int>(split.size()) * 1 <= s; ++t) {
                FpMatrix mm(r, FpVector(s));
                for (int k = 0; k < r; ++k)
                    for (int c = 0; c < s; ++c)
                        mm[k][c] = ((ais[k][c] - t * smat[k][c]) % p + p) % p;
                auto null_c = fp_nullspace(std::move(mm), p);
                if (null_c.empty()) continue;
                std::vector<FpVector> sub;
                for (const auto& cvec : null_c) {
                    FpVector v(r, 0);
                    for (int k = 0; k < r; ++k) {
                        i64 acc = 0;
                        for (int c = 0; c < s; ++c) acc += cvec[c] * smat[k][c] % p;
                        v[k] = acc % p;
                    }
                    sub.push_back(std::move(v));
                }
                split.push_back(std::move(sub));
                int covered = 0;
                for (const auto& sp : split) covered += static_cast<int>(sp.size());
                if (covered == s) break;
            }
            for (auto& sp : split) next.push_back(std::move(sp));
        }
        spaces = std::move(next);
    }
    if (static_cast<int>(spaces.size()) != r)
        throw std::logic_error("Dixon: eigenspace splitting incomplete");

    std::vector<ClassFunction> table;
    for (const auto& space : spaces) {
        const FpVector& raw = space[0];
        if (raw[0] % p == 0) throw std::logic_error("Dixon: eigenvector with zero identity part");
        i64 norm = inv_mod(raw[0], p);
        FpVector omega(r);
        for (int k = 0; k < r; ++k) omega[k] = raw[k] * norm % p;
        // degree from the orthogonality norm
        i64 t = 0;
        for (int k = 0; k < r; ++k)
            t = (t + omega[k] * omega[inv_class[k]] % p * inv_mod(csize[k], p)) % p;
        i64 d2 = static_cast<i64>(n) % p * inv_mod(t, p) % p;
        i64 deg = -1;
        for (i64 d = 1; 2 * d < p; ++d)
            if (d * d % p == d2) { deg = d; break; }
        if (deg < 0) throw std::logic_error("Dixon: degree is not a small square root");
        // character values mod p
        FpVector chi_p(r);
        for (int k = 0; k < r; ++k) chi_p[k] = deg % p * omega[k] % p * inv_mod(csize[k], p) % p;
        // lift each class value via root-of-unity multiplicity counts
        std::vector<Cyclotomic> values(r);
        for (int k = 0; k < r; ++k) {
            int o = g.element_order(rep[k]);
            i64 z = pow_mod(eta, m / o, p); // fixed primitive o-th root
            Cyclotomic val;
            i64 oinv = inv_mod(o, p);
            for (int j = 0; j < o; ++j) {
                i64 c = 0;
                int gt = 0; // rep[k]^t
                for (int tt = 0; tt < o; ++tt) {
                    c = (c + chi_p[g.class_of(gt)] * pow_mod(z, (static_cast<i64>(o) - j) * tt % o, p)) % p;
                    gt = g.mul(gt, rep[k]);
                }
                c = c * oinv % p;
                if (2 * c >= p) throw std::logic_error("Dixon: multiplicity lift out of range");
                if (c != 0)
                    val += Cyclotomic(static_cast<long>(c)) *
                           Cyclotomic::root_of_unity(m, static_cast<long>(m / o) * j);
            }
            values[k] = std::move(val);
        }
        table.emplace_back(gp, std::move(values));
    }

    // trivial first, then (degree, lex values)
    auto is_trivial = [&](const ClassFunction& c) {
        for (const auto& v : c.values())
            if (v != Cyclotomic(1)) return false;
        return true;
    };
    std::stable_sort(table.begin(), table.end(),
                     [&](const ClassFunction& x, const ClassFunction& y) {
                         bool tx = is_trivial(x), ty = is_trivial(y);
                         if (tx != ty) return tx;
                         Rational dx = x.degree().rational_value(), dy = y.degree().rational_value();
                         if (dx != dy) return dx < dy;
                         for (int k = 0; k < static_cast<int>(x.values().size()); ++k) {
                             int c = Cyclotomic::compare(x.values()[k], y.values()[k]);
                             if (c != 0) return c < 0;
                         }
                         return false;
                     });

    // exact validation: sum of squared degrees and row orthogonality
    Rational sum_sq = 0;
    for (const auto& chi : table) sum_sq += chi.degree().rational_value() * chi.degree().rational_value();
    if (sum_sq != n) throw std::logic_error("Dixon: sum of squared degrees != |G|");
    for (size_t i = 0; i < table.size(); ++i)
        for (size_t j = i; j < table.size(); ++j) {
            Cyclotomic ip = inner_product(table[i], table[j]);
            if (ip != Cyclotomic(i == j ? 1 : 0))
                throw std::logic_error("Dixon: row orthogonality failed");
        }
    return table;
}

} // namespace

const std::vector<ClassFunction>& character_table(const GroupPtr& g) {
    static std::map<const FiniteGroup*, std::pair<GroupPtr, std::vector<ClassFunction>>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(g.get());
    if (it == cache.end())
        it = cache.emplace(g.get(), std::make_pair(g, dixon_table(g))).first;
    return it->second.second;
}

Cyclotomic inner_product(const ClassFunction& chi, const ClassFunction& psi) {
    if (chi.group() != psi.group())
        throw std::invalid_argument("inner_product: different groups");
    const auto& classes = chi.group()->conjugacy_classes();
    Cyclotomic acc;
    for (size_t k = 0; k < classes.size(); ++k)
        acc += chi.at_class(static_cast<int>(k)) * psi.at_class(static_cast<int>(k)).conjugate() *
               Rational(classes[k].size());
    return acc * Rational(1, chi.group()->order());
}

ClassFunction restrict_to(const ClassFunction& chi, const Subgroup& k) {
    if (chi.group() != k.parent())
        throw std::invalid_argument("restrict_to: group mismatch");
    const auto& classes = k.local()->conjugacy_classes();
    std::vector<Cyclotomic> vals(classes.size());
    for (size_t c = 0; c < classes.size(); ++c)
        vals[c] = chi.at_element(k.to_parent(classes[c][0]));
    return ClassFunction(k.local(), std::move(vals));
}

ClassFunction restrict_between(const ClassFunction& alpha, const Subgroup& k,
                               const Subgroup& s) {
    if (alpha.group() != k.local())
        throw std::invalid_argument("restrict_between: alpha not on K");
    const auto& classes = s.local()->conjugacy_classes();
    std::vector<Cyclotomic> vals(classes.size());
    for (size_t c = 0; c < classes.size(); ++c) {
        int parent_elem = s.to_parent(classes[c][0]);
        int in_k = k.to_local(parent_elem);
        if (in_k < 0) throw std::invalid_argument("restrict_between: S not contained in K");
        vals[c] = alpha.at_element(in_k);
    }
    return ClassFunction(s.local(), std::move(vals));
}

ClassFunction induce_between(const ClassFunction& alpha, const Subgroup& k,
                             const Subgroup& l) {
    if (alpha.group() != k.local())
        throw std::invalid_argument("induce_between: alpha not on K");
    if (k.parent() != l.parent())
        throw std::invalid_argument("induce_between: different parent groups");
    for (int e : k.elements())
        if (!l.contains(e)) throw std::invalid_argument("induce_between: K not contained in L");
    const auto& g = *k.parent();
    const auto& classes = l.local()->conjugacy_classes();
    std::vector<Cyclotomic> vals(classes.size());
    for (size_t c = 0; c < classes.size(); ++c) {
        int y = l.to_parent(classes[c][0]);
        Cyclotomic acc;
        for (int tl = 0; tl < l.order(); ++tl) {
            int t = l.to_parent(tl);
            int conj = g.mul(g.mul(g.inv(t), y), t);
            int in_k = k.to_local(conj);
            if (in_k >= 0) acc += alpha.at_element(in_k);
        }
        vals[c] = acc * Rational(1, k.order());
    }
    return ClassFunction(l.local(), std::move(vals));
}

ClassFunction induce_from(const ClassFunction& alpha, const Subgroup& k) {
    return induce_between(alpha, k, Subgroup::whole(k.parent()));
}

std::pair<ClassFunction, Subgroup> conjugate_by(const ClassFunction& alpha,
                                                const Subgroup& k, int x) {
    if (alpha.group() != k.local())
        throw std::invalid_argument("conjugate_by: alpha not on K");
    Subgroup kc = conjugate_subgroup(k, x);
    if (kc.elements() == k.elements()) kc = k; // x normalizes K: keep the same local group
    const auto& g = *k.parent();
    const auto& classes = kc.local()->conjugacy_classes();
    std::vector<Cyclotomic> vals(classes.size());
    for (size_t c = 0; c < classes.size(); ++c) {
        int y = kc.to_parent(classes[c][0]);
        int pre = g.mul(g.mul(g.inv(x), y), x);
        vals[c] = alpha.at_element(k.to_local(pre));
    }
    return {ClassFunction(kc.local(), std::move(vals)), std::move(kc)};
}

std::vector<std::pair<int, long>> decompose(const ClassFunction& chi) {
    const auto& table = character_table(chi.group());
    std::vector<std::pair<int, long>> out;
    Rational total = 0;
    for (size_t i = 0; i < table.size(); ++i) {
        Cyclotomic m = inner_product(chi, table[i]);
        if (!m.is_rational_integer() || m.rational_value() < 0)
            throw std::domain_error("decompose: multiplicity is not a nonnegative integer: " +
                                    m.str());
        long mi = to_long(m.rational_value());
        if (mi > 0) out.emplace_back(static_cast<int>(i), mi);
        total += Rational(mi) * table[i].degree().rational_value();
    }
    if (total != chi.degree().rational_value())
        throw std::domain_error("decompose: degrees do not balance");
    return out;
}

} // namespace qd
