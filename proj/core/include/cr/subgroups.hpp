#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cr {

/// Permutation of {0..7}, byte i = image of point i (identity on unused
/// points). Cheap to copy, compare, and hash; degree <= 8 throughout.
using Perm8 = std::uint64_t;

Perm8 perm_identity();
Perm8 perm_from_images(const std::vector<int>& images);
std::vector<int> perm_images(Perm8 p, int n);
/// Cycles use 0-based points.
Perm8 perm_from_cycles(const std::vector<std::vector<int>>& cycles);
/// apply b first, then a.
Perm8 perm_mul(Perm8 a, Perm8 b);
Perm8 perm_inv(Perm8 p);
inline int perm_apply(Perm8 p, int i) { return int((p >> (8 * i)) & 0xff); }
/// a h a^-1.
Perm8 perm_conj(Perm8 a, Perm8 h);
int perm_order(Perm8 p);
/// 1-based cycle notation, e.g. "(1 5)(2 3)(4 6)"; "()" for the identity.
std::string perm_cycle_string(Perm8 p, int n);
Perm8 perm_parse_cycles(const std::string& text);

/// Closure of the generated group; sorted element list.
std::vector<Perm8> group_closure(const std::vector<Perm8>& gens);
long long group_order(const std::vector<Perm8>& gens);
/// Smallest normal subgroup of <group_gens> containing <sub_gens>.
std::vector<Perm8> normal_closure(const std::vector<Perm8>& sub_gens,
                                  const std::vector<Perm8>& group_gens);
std::vector<Perm8> derived_subgroup(const std::vector<Perm8>& gens);

/// Lexicographically least sorted element list among all S_n-conjugates of
/// the subgroup; equal canonical forms characterize conjugate subgroups.
std::vector<Perm8> canonical_form(int n, const std::vector<Perm8>& elements);

struct SubgroupClass {
    int id = 0;           // position in the deterministic output order
    long long order = 0;
    std::vector<Perm8> generators;  // of the canonical representative
    std::vector<Perm8> elements;    // canonical form, sorted
};

/// All conjugacy classes of subgroups of S_n (including the trivial group),
/// deterministic order: ascending order, then canonical form. 1 <= n <= 8.
std::vector<SubgroupClass> classify_subgroups(int n);

/// One line per class: id, order, canonical generators in cycle notation.
std::string export_classes(const std::vector<SubgroupClass>& classes, int n);

}  // namespace cr
