#pragma once

#include <map>
#include <vector>

#include "cr/rootsystem.hpp"
#include "cr/subgroups.hpp"

namespace cr {

/// An element of the Weyl group, stored as its permutation of the roots
/// (signed labels). At characteristic 2 the canonical reflection
/// representatives square to the identity, so the representative group in
/// the algebraic group is isomorphic to this permutation group.
class WeylElement {
public:
    WeylElement() = default;

    static WeylElement identity(const LabeledRootSystem* s);
    static WeylElement reflection(const LabeledRootSystem* s, const Root& xi);
    static WeylElement simple_reflection(const LabeledRootSystem* s, int node);
    /// Product of simple reflections, leftmost applied last (word [a,b] is
    /// the map s_a after s_b... i.e. s_a composed with s_b acting on the right
    /// argument first).
    static WeylElement from_word(const LabeledRootSystem* s,
                                 const std::vector<int>& letters);

    const LabeledRootSystem* system() const { return sys_; }
    bool is_identity() const;
    /// Image of a signed root label.
    int apply(int label) const;
    Root apply_root(const Root& r) const;

    WeylElement operator*(const WeylElement& o) const;  // apply o first
    WeylElement inverse() const;
    bool operator==(const WeylElement& o) const { return img_ == o.img_; }
    bool operator!=(const WeylElement& o) const { return img_ != o.img_; }
    bool operator<(const WeylElement& o) const { return img_ < o.img_; }

private:
    const LabeledRootSystem* sys_ = nullptr;
    std::vector<int> img_;  // img_[k-1] = signed image label of positive root k
};

/// Word over the chain (Levi) simple roots only; throws on the sigma node.
WeylElement levi_word_element(const LabeledRootSystem* s,
                              const std::vector<int>& letters);

/// The Levi Weyl group is the symmetric group on n = rank letters, with the
/// i-th chain reflection acting as the transposition (i, i+1) (0-based).
int levi_degree(const LabeledRootSystem* s);
/// Word in chain letters whose product of adjacent transpositions is p.
std::vector<int> levi_word_from_permutation(Perm8 p, int n);
WeylElement weyl_from_levi_permutation(const LabeledRootSystem* s, Perm8 p);
/// Inverse of the identification: the permutation of the n letters.
Perm8 levi_permutation_of(const WeylElement& w);

/// Restriction of w to a label set it stabilizes (throws otherwise).
std::map<int, int> restriction(const WeylElement& w,
                               const std::vector<int>& domain);

/// Orbit partition of the domain labels under the generators; each orbit
/// sorted ascending, orbits ordered by minimum.
std::vector<std::vector<int>> orbits(const std::vector<WeylElement>& gens,
                                     const std::vector<int>& domain);

/// The full Weyl group by closure (51840 elements for E6).
std::vector<WeylElement> enumerate_weyl(const LabeledRootSystem* s);

}  // namespace cr
