#pragma once

#include <memory>
#include <string>
#include <vector>

namespace qd {

/// A finite group given by its full multiplication table.
/// Element 0 is the identity. Immutable after construction.
class FiniteGroup {
public:
    /// Validates: Latin square, identity at 0, inverses, associativity
    /// (exhaustive for n <= 512, spot-sampled above).
    FiniteGroup(std::vector<std::vector<int>> mul, std::string name = "",
                std::vector<std::string> element_names = {});

    int order() const { return n_; }
    int mul(int a, int b) const { return mul_[a][b]; }
    int inv(int a) const { return inv_[a]; }
    /// x g x^{-1}
    int conj(int x, int g) const { return mul_[mul_[x][g]][inv_[x]]; }
    int element_order(int g) const;
    int exponent() const;
    bool is_abelian() const;

    const std::string& name() const { return name_; }
    const std::vector<std::string>& element_names() const { return element_names_; }
    /// Index of a named element, -1 if absent.
    int element_by_name(const std::string& s) const;

    /// Class of identity first, classes ordered by minimal element.
    const std::vector<std::vector<int>>& conjugacy_classes() const;
    int class_of(int g) const;
    int num_classes() const;

private:
    int n_;
    std::vector<std::vector<int>> mul_;
    std::vector<int> inv_;
    std::string name_;
    std::vector<std::string> element_names_;
    mutable std::vector<std::vector<int>> classes_;
    mutable std::vector<int> class_of_;
    void compute_classes() const;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// name in {cyclic, dihedral, symmetric, quaternion8, direct_product};
/// dihedral(n) has order 2n; direct_product(n) is C_n x C_n.
GroupPtr make_named(const std::string& name, int parameter = 0);

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);

/// Permutations act on {1..degree}; each generator is given in one-line
/// notation (images of 1..degree). Elements ordered by breadth-first
/// discovery from the identity.
GroupPtr from_permutation_generators(int degree,
                                     const std::vector<std::vector<int>>& generators,
                                     int order_cap = 10000);

/// An injective-or-not homomorphism phi : F -> G, given element-wise.
struct GroupHom {
    GroupPtr source; // F
    GroupPtr target; // G
    std::vector<int> image;

    GroupHom(GroupPtr f, GroupPtr g, std::vector<int> img);
    int operator()(int x) const { return image[x]; }
    bool is_injective() const;
    /// Throws std::invalid_argument naming a collapsed pair if not injective.
    void require_injective() const;
};

inline GroupHom identity_hom(const GroupPtr& g) {
    std::vector<int> img(g->order());
    for (int i = 0; i < g->order(); ++i) img[i] = i;
    return GroupHom(g, g, std::move(img));
}

/// A subgroup of a parent group, with a localized multiplication table
/// (local elements in sorted parent order; local 0 = identity).
class Subgroup {
public:
    Subgroup(GroupPtr parent, std::vector<int> elements);

    const GroupPtr& parent() const { return parent_; }
    const GroupPtr& local() const { return local_; }
    const std::vector<int>& elements() const { return elems_; }
    int order() const { return static_cast<int>(elems_.size()); }
    bool contains(int p) const { return to_local_[p] >= 0; }
    int to_local(int p) const { return to_local_[p]; }
    int to_parent(int l) const { return elems_[l]; }

    static Subgroup whole(const GroupPtr& g);
    static Subgroup trivial(const GroupPtr& g);

private:
    GroupPtr parent_;
    std::vector<int> elems_;
    GroupPtr local_;
    std::vector<int> to_local_;
};

Subgroup centralizer(const GroupPtr& g, int elem);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
/// x K x^{-1}
Subgroup conjugate_subgroup(const Subgroup& k, int x);

/// phi(x) g phi(x)^{-1}
inline int phi_conjugate(const GroupHom& phi, int x, int g) {
    return phi.target->conj(phi.image[x], g);
}

struct OrbitStabilizer {
    std::vector<int> orbit;   // sorted
    Subgroup stabilizer;      // F_g <= F
};

OrbitStabilizer orbit_and_stabilizer(const GroupHom& phi, int g);

/// One minimal-index representative per orbit of the phi-conjugation
/// action, sorted.
std::vector<int> orbit_representatives(const GroupHom& phi);

struct DoubleCosetDecomposition {
    std::vector<int> reps;                  // minimal elements, sorted
    std::vector<std::vector<int>> blocks;   // blocks[i] = K reps[i] L, sorted
};

/// Decomposition of the common parent into K\parent/L double cosets.
DoubleCosetDecomposition double_cosets(const Subgroup& k, const Subgroup& l);

} // namespace qd
