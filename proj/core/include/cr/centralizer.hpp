#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cr/chevalley.hpp"
#include "cr/subgroups.hpp"

namespace cr {

/// Internal inconsistency of the polynomial solver (disagreeing fallbacks,
/// non-integral dimension slopes, unsatisfiable systems that must contain 0).
struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Polynomial conditions (each equation = 0) in one variable per radical
/// label; the MPoly variable id is the label itself.
struct PolySystem {
    const LabeledRootSystem* sys = nullptr;
    const GF2m* F = nullptr;
    std::vector<int> variables;
    std::vector<MPoly> equations;
};

/// Conditions "every generator centralizes the symbolic radical element",
/// by coefficient-matching the collected conjugate against the original.
/// Generators must have trivial unipotent part (reduce to w t form first).
PolySystem centralizer_system(const LabeledRootSystem* s, const GF2m* F,
                              const std::vector<GroupElement>& gens);

/// Replace every equation that is a perfect square by its square root
/// (Frobenius inverse on coefficients, halved exponents). Over a perfect
/// field this preserves the solution set of each equation pointwise.
PolySystem square_reduce(const PolySystem& ps);

/// Combinatorial non-separability witness: a pair of radical labels in one
/// orbit whose root sum is central, swapped by a subgroup element that fixes
/// the correction label.
struct Certificate {
    std::vector<int> orbit;
    int first = 0;
    int second = 0;
    int correction = 0;
};

/// Parameterized solution of a centralizer system.
struct GroupSolution {
    int dim = 0;
    std::string method;  // square-reduction | point-count | brute-force
    std::map<int, MPoly> dependent;  // eliminated variable -> expression
    std::vector<int> free_vars;      // dimension contributors (certified-linear path)
};

GroupSolution solve_system(PolySystem ps);
GroupSolution group_centralizer_dim(const LabeledRootSystem* s, const GF2m* F,
                                    const std::vector<GroupElement>& gens);

/// Kernel of the stacked (ad(g) - identity) maps on the radical Lie algebra.
std::pair<std::vector<LieVector>, int> lie_centralizer(
    const LabeledRootSystem* s, const GF2m* F,
    const std::vector<GroupElement>& gens);

struct SeparabilityReport {
    std::string subgroup_id;
    int tangent_dim = 0;
    int group_dim = 0;
    std::string method;
    std::optional<Certificate> certificate;
    bool non_separable = false;
};

SeparabilityReport separability_report(const std::string& id,
                                       const LabeledRootSystem* s, const GF2m* F,
                                       const std::vector<GroupElement>& gens);

/// First certificate under the deterministic order (orbits by minimum, pairs
/// ascending, witnesses in element order), or nullopt.
std::optional<Certificate> find_certificate(const LabeledRootSystem* s,
                                            const std::vector<WeylElement>& elements);

/// One row of the published-table layout for one subgroup class.
struct ScanRow {
    int class_id = 0;
    std::uint64_t group_order = 0;
    std::vector<std::size_t> orbit_sizes;  // on the radical labels
    std::optional<Certificate> certificate;
    int tangent_dim = 0;
    int group_dim = 0;
    std::string method;
    bool non_separable = false;
};

/// Full pipeline for one subgroup class of Levi-letter permutations, lifted
/// to canonical Weyl representatives (torus part trivial).
ScanRow scan_class(const LabeledRootSystem* s, const GF2m* F,
                   const SubgroupClass& cls);

/// Scan a class list; parallelizes over classes, output ordered by class id
/// regardless of thread count.
std::vector<ScanRow> certificate_scan(const LabeledRootSystem* s, const GF2m* F,
                                      const std::vector<SubgroupClass>& classes,
                                      int threads = 1);

/// Field embedding GF(2^k) -> GF(2^n) for k | n, sending the source
/// generator polynomial class to the least root of the source modulus.
std::uint32_t embed_field(const GF2m& from, const GF2m& to, std::uint32_t a);

/// Number of common zeros of the equations over `to` (coefficients embedded
/// from `from`), brute force over the given variables.
std::uint64_t count_points(const std::vector<MPoly>& equations,
                           const std::vector<int>& vars, const GF2m& from,
                           const GF2m& to);

}  // namespace cr
