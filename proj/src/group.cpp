#include "qd/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qd {

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> mul, std::string name,
                         std::vector<std::string> element_names)
    : n_(static_cast<int>(mul.size())),
      mul_(std::move(mul)),
      name_(std::move(name)),
      element_names_(std::move(element_names)) {
    if (n_ == 0) throw std::invalid_argument("group: empty multiplication table");
    for (const auto& row : mul_)
        if (static_cast<int>(row.size()) != n_)
            throw std::invalid_argument("group: table is not square");

    // Latin square
    for (int i = 0; i < n_; ++i) {
        std::vector<bool> seen_row(n_, false), seen_col(n_, false);
        for (int j = 0; j < n_; ++j) {
            int r = mul_[i][j], c = mul_[j][i];
            if (r < 0 || r >= n_ || c < 0 || c >= n_)
                throw std::invalid_argument("group: table entry out of range");
            if (seen_row[r] || seen_col[c])
                throw std::invalid_argument("group: table is not a Latin square");
            seen_row[r] = seen_col[c] = true;
        }
    }
    // identity at 0
    for (int i = 0; i < n_; ++i)
        if (mul_[0][i] != i || mul_[i][0] != i)
            throw std::invalid_argument("group: element 0 is not a two-sided identity");
    // inverses
    inv_.assign(n_, -1);
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j)
            if (mul_[i][j] == 0 && mul_[j][i] == 0) { inv_[i] = j; break; }
        if (inv_[i] < 0)
            throw std::invalid_argument("group: element without two-sided inverse");
    }
    // associativity: exhaustive at desk scale, sampled above
    if (n_ <= 512) {
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b)
                for (int c = 0; c < n_; ++c)
                    if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]])
                        throw std::invalid_argument("group: multiplication is not associative");
    } else {
        std::mt19937 rng(12345);
        std::uniform_int_distribution<int> d(0, n_ - 1);
        for (int t = 0; t < 200000; ++t) {
            int a = d(rng), b = d(rng), c = d(rng);
            if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]])
                throw std::invalid_argument("group: multiplication is not associative");
        }
    }
    if (!element_names_.empty() && static_cast<int>(element_names_.size()) != n_)
        throw std::invalid_argument("group: element name count mismatch");
}

int FiniteGroup::element_order(int g) const {
    int o = 1, x = g;
    while (x != 0) { x = mul_[x][g]; ++o; }
    return o;
}

int FiniteGroup::exponent() const {
    long e = 1;
    for (int g = 0; g < n_; ++g) e = std::lcm(e, static_cast<long>(element_order(g)));
    return static_cast<int>(e);
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (mul_[a][b] != mul_[b][a]) return false;
    return true;
}

int FiniteGroup::element_by_name(const std::string& s) const {
    for (int i = 0; i < static_cast<int>(element_names_.size()); ++i)
        if (element_names_[i] == s) return i;
    return -1;
}

void FiniteGroup::compute_classes() const {
    if (!classes_.empty()) return;
    class_of_.assign(n_, -1);
    for (int g = 0; g < n_; ++g) {
        if (class_of_[g] >= 0) continue;
        std::vector<int> cls;
        for (int x = 0; x < n_; ++x) {
            int c = conj(x, g);
            if (class_of_[c] < 0) {
                class_of_[c] = static_cast<int>(classes_.size());
                cls.push_back(c);
            }
        }
        std::sort(cls.begin(), cls.end());
        classes_.push_back(std::move(cls));
    }
}

const std::vector<std::vector<int>>& FiniteGroup::conjugacy_classes() const {
    compute_classes();
    return classes_;
}

int FiniteGroup::class_of(int g) const {
    compute_classes();
    return class_of_[g];
}

int FiniteGroup::num_classes() const {
    compute_classes();
    return static_cast<int>(classes_.size());
}

namespace {

GroupPtr make_cyclic(int n) {
    if (n < 1) throw std::invalid_argument("cyclic: order must be >= 1");
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    std::vector<std::string> names(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) mul[i][j] = (i + j) % n;
        names[i] = i == 0 ? "e" : (i == 1 ? "g" : "g^" + std::to_string(i));
    }
    return std::make_shared<FiniteGroup>(std::move(mul), "C" + std::to_string(n),
                                         std::move(names));
}

// elements 0..n-1: r^i; n..2n-1: s r^i
GroupPtr make_dihedral(int n) {
    if (n < 1) throw std::invalid_argument("dihedral: parameter must be >= 1");
    int m = 2 * n;
    std::vector<std::vector<int>> mul(m, std::vector<int>(m));
    auto idx = [n](int flip, int rot) { return flip * n + ((rot % n) + n) % n; };
    for (int f1 = 0; f1 < 2; ++f1)
        for (int r1 = 0; r1 < n; ++r1)
            for (int f2 = 0; f2 < 2; ++f2)
                for (int r2 = 0; r2 < n; ++r2) {
                    // (s^f1 r^r1)(s^f2 r^r2) = s^(f1+f2) r^(r2 + (f2 ? -r1 : r1))
                    int f = (f1 + f2) % 2;
                    int r = r2 + (f2 ? -r1 : r1);
                    mul[idx(f1, r1)][idx(f2, r2)] = idx(f, r);
                }
    std::vector<std::string> names(m);
    for (int i = 0; i < n; ++i) {
        names[i] = i == 0 ? "e" : (i == 1 ? "r" : "r^" + std::to_string(i));
        names[n + i] = i == 0 ? "s" : "s*r^" + std::to_string(i);
    }
    return std::make_shared<FiniteGroup>(std::move(mul), "D" + std::to_string(n),
                                         std::move(names));
}

std::string cycle_notation(const std::vector<int>& perm) {
    int n = static_cast<int>(perm.size());
    std::vector<bool> done(n, false);
    std::ostringstream out;
    bool any = false;
    for (int i = 0; i < n; ++i) {
        if (done[i] || perm[i] == i + 1) { done[i] = true; continue; }
        out << '(';
        int j = i;
        bool first = true;
        while (!done[j]) {
            done[j] = true;
            if (!first) out << ' ';
            out << (j + 1);
            first = false;
            j = perm[j] - 1;
        }
        out << ')';
        any = true;
    }
    return any ? out.str() : "()";
}

// (a*b)(x) = a(b(x)); one-line notation, images of 1..n
std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[b[i] - 1];
    return c;
}

GroupPtr group_from_permutations(std::vector<std::vector<int>> elems, std::string name) {
    int n = static_cast<int>(elems.size());
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < n; ++i) index[elems[i]] = i;
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto it = index.find(compose(elems[i], elems[j]));
            if (it == index.end())
                throw std::invalid_argument("permutation set is not closed");
            mul[i][j] = it->second;
        }
    std::vector<std::string> names(n);
    for (int i = 0; i < n; ++i) names[i] = cycle_notation(elems[i]);
    return std::make_shared<FiniteGroup>(std::move(mul), std::move(name), std::move(names));
}

GroupPtr make_symmetric(int n) {
    if (n < 1 || n > 8) throw std::invalid_argument("symmetric: parameter out of range");
    std::vector<int> base(n);
    std::iota(base.begin(), base.end(), 1);
    std::vector<std::vector<int>> elems;
    do elems.push_back(base);
    while (std::next_permutation(base.begin(), base.end()));
    return group_from_permutations(std::move(elems), "S" + std::to_string(n));
}

// 1, -1, i, -i, j, -j, k, -k
GroupPtr make_quaternion8() {
    auto unit = [](int e) { return e / 2; };   // 0:1 1:i 2:j 3:k
    auto sign = [](int e) { return e % 2; };   // 0:+ 1:-
    auto enc = [](int u, int s) { return 2 * u + s; };
    // unit multiplication with result sign
    static const int utab[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int stab[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    // stab[a][b]: sign of u_a * u_b, with u = (1,i,j,k); i*j=k, j*i=-k, etc.
    std::vector<std::vector<int>> mul(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            int u = utab[unit(a)][unit(b)];
            int s = (sign(a) + sign(b) + stab[unit(a)][unit(b)]) % 2;
            mul[a][b] = enc(u, s);
        }
    std::vector<std::string> names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    return std::make_shared<FiniteGroup>(std::move(mul), "Q8", std::move(names));
}

} // namespace

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b) {
    int na = a->order(), nb = b->order(), n = na * nb;
    auto enc = [nb](int x, int y) { return x * nb + y; };
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (int x1 = 0; x1 < na; ++x1)
        for (int y1 = 0; y1 < nb; ++y1)
            for (int x2 = 0; x2 < na; ++x2)
                for (int y2 = 0; y2 < nb; ++y2)
                    mul[enc(x1, y1)][enc(x2, y2)] = enc(a->mul(x1, x2), b->mul(y1, y2));
    std::vector<std::string> names(n);
    const auto &an = a->element_names(), &bn = b->element_names();
    for (int x = 0; x < na; ++x)
        for (int y = 0; y < nb; ++y)
            names[enc(x, y)] = "(" + (an.empty() ? std::to_string(x) : an[x]) + "," +
                               (bn.empty() ? std::to_string(y) : bn[y]) + ")";
    return std::make_shared<FiniteGroup>(std::move(mul), a->name() + "x" + b->name(),
                                         std::move(names));
}

GroupPtr make_named(const std::string& name, int parameter) {
    if (name == "cyclic") return make_cyclic(parameter);
    if (name == "dihedral") return make_dihedral(parameter);
    if (name == "symmetric") return make_symmetric(parameter);
    if (name == "quaternion8") return make_quaternion8();
    if (name == "direct_product") {
        if (parameter < 1) throw std::invalid_argument("direct_product: parameter must be >= 1");
        auto c = make_cyclic(parameter);
        return direct_product(c, c);
    }
    throw std::invalid_argument("unknown group family: " + name);
}

GroupPtr from_permutation_generators(int degree,
                                     const std::vector<std::vector<int>>& generators,
                                     int order_cap) {
    if (degree < 1) throw std::invalid_argument("degree must be >= 1");
    for (const auto& g : generators) {
        if (static_cast<int>(g.size()) != degree)
            throw std::invalid_argument("generator degree mismatch");
        std::vector<bool> seen(degree, false);
        for (int v : g) {
            if (v < 1 || v > degree || seen[v - 1])
                throw std::invalid_argument("generator is not a permutation");
            seen[v - 1] = true;
        }
    }
    std::vector<int> id(degree);
    std::iota(id.begin(), id.end(), 1);
    std::vector<std::vector<int>> elems = {id};
    std::set<std::vector<int>> seen = {id};
    std::queue<std::vector<int>> todo;
    todo.push(id);
    while (!todo.empty()) {
        auto cur = todo.front();
        todo.pop();
        for (const auto& g : generators) {
            auto next = compose(cur, g);
            if (seen.insert(next).second) {
                if (static_cast<int>(elems.size()) >= order_cap)
                    throw std::runtime_error("permutation closure exceeds order cap");
                elems.push_back(next);
                todo.push(next);
            }
        }
    }
    return group_from_permutations(std::move(elems), "perm" + std::to_string(degree));
}

GroupHom::GroupHom(GroupPtr f, GroupPtr g, std::vector<int> img)
    : source(std::move(f)), target(std::move(g)), image(std::move(img)) {
    if (static_cast<int>(image.size()) != source->order())
        throw std::invalid_argument("hom: image length != |F|");
    for (int v : image)
        if (v < 0 || v >= target->order())
            throw std::invalid_argument("hom: image element out of range");
    if (image[0] != 0) throw std::invalid_argument("hom: identity not mapped to identity");
    for (int x = 0; x < source->order(); ++x)
        for (int y = 0; y < source->order(); ++y)
            if (image[source->mul(x, y)] != target->mul(image[x], image[y]))
                throw std::invalid_argument("hom: not multiplicative");
}

bool GroupHom::is_injective() const {
    std::vector<bool> hit(target->order(), false);
    for (int v : image) {
        if (hit[v]) return false;
        hit[v] = true;
    }
    return true;
}

void GroupHom::require_injective() const {
    std::vector<int> pre(target->order(), -1);
    for (int x = 0; x < static_cast<int>(image.size()); ++x) {
        if (pre[image[x]] >= 0)
            throw std::invalid_argument("hom is not injective: elements " +
                                        std::to_string(pre[image[x]]) + " and " +
                                        std::to_string(x) + " share image " +
                                        std::to_string(image[x]));
        pre[image[x]] = x;
    }
}

Subgroup::Subgroup(GroupPtr parent, std::vector<int> elements)
    : parent_(std::move(parent)), elems_(std::move(elements)) {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    if (elems_.empty() || elems_[0] != 0)
        throw std::invalid_argument("subgroup: must contain the identity");
    to_local_.assign(parent_->order(), -1);
    for (int l = 0; l < static_cast<int>(elems_.size()); ++l) to_local_[elems_[l]] = l;
    int k = static_cast<int>(elems_.size());
    if (k == parent_->order()) {
        // The whole group: alias the parent so induced/restricted class
        // functions stay comparable with ones built on the parent directly.
        local_ = parent_;
        return;
    }
    std::vector<std::vector<int>> mul(k, std::vector<int>(k));
    for (int i = 0; i < k; ++i) {
        if (to_local_[parent_->inv(elems_[i])] < 0)
            throw std::invalid_argument("subgroup: not closed under inverse");
        for (int j = 0; j < k; ++j) {
            int p = parent_->mul(elems_[i], elems_[j]);
            if (to_local_[p] < 0)
                throw std::invalid_argument("subgroup: not closed under multiplication");
            mul[i][j] = to_local_[p];
        }
    }
    std::vector<std::string> names;
    if (!parent_->element_names().empty())
        for (int e : elems_) names.push_back(parent_->element_names()[e]);
    local_ = std::make_shared<FiniteGroup>(std::move(mul), parent_->name() + "-sub",
                                           std::move(names));
}

Subgroup Subgroup::whole(const GroupPtr& g) {
    std::vector<int> all(g->order());
    std::iota(all.begin(), all.end(), 0);
    return Subgroup(g, std::move(all));
}

Subgroup Subgroup::trivial(const GroupPtr& g) { return Subgroup(g, {0}); }

Subgroup centralizer(const GroupPtr& g, int elem) {
    std::vector<int> elems;
    for (int x = 0; x < g->order(); ++x)
        if (g->mul(x, elem) == g->mul(elem, x)) elems.push_back(x);
    return Subgroup(g, std::move(elems));
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
    if (a.parent() != b.parent())
        throw std::invalid_argument("intersect: different parent groups");
    std::vector<int> elems;
    for (int e : a.elements())
        if (b.contains(e)) elems.push_back(e);
    return Subgroup(a.parent(), std::move(elems));
}

Subgroup conjugate_subgroup(const Subgroup& k, int x) {
    std::vector<int> elems;
    for (int e : k.elements()) elems.push_back(k.parent()->conj(x, e));
    return Subgroup(k.parent(), std::move(elems));
}

OrbitStabilizer orbit_and_stabilizer(const GroupHom& phi, int g) {
    const auto& f = *phi.source;
    std::set<int> orbit;
    std::vector<int> stab;
    for (int x = 0; x < f.order(); ++x) {
        int c = phi_conjugate(phi, x, g);
        orbit.insert(c);
        if (c == g) stab.push_back(x);
    }
    OrbitStabilizer res{std::vector<int>(orbit.begin(), orbit.end()),
                        Subgroup(phi.source, std::move(stab))};
    // |orbit| * |F_g| = |F|
    if (static_cast<int>(res.orbit.size()) * res.stabilizer.order() != f.order())
        throw std::logic_error("orbit-stabilizer identity violated");
    return res;
}

std::vector<int> orbit_representatives(const GroupHom& phi) {
    const auto& g = *phi.target;
    std::vector<bool> seen(g.order(), false);
    std::vector<int> reps;
    for (int e = 0; e < g.order(); ++e) {
        if (seen[e]) continue;
        reps.push_back(e);
        for (int x = 0; x < phi.source->order(); ++x) seen[phi_conjugate(phi, x, e)] = true;
    }
    return reps;
}

DoubleCosetDecomposition double_cosets(const Subgroup& k, const Subgroup& l) {
    if (k.parent() != l.parent())
        throw std::invalid_argument("double_cosets: different parent groups");
    const auto& g = *k.parent();
    std::vector<bool> seen(g.order(), false);
    DoubleCosetDecomposition dec;
    for (int x = 0; x < g.order(); ++x) {
        if (seen[x]) continue;
        std::set<int> block;
        for (int a : k.elements())
            for (int b : l.elements()) block.insert(g.mul(g.mul(a, x), b));
        for (int e : block) seen[e] = true;
        dec.reps.push_back(x);
        dec.blocks.emplace_back(block.begin(), block.end());
    }
    return dec;
}

} // namespace qd
