#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cr/centralizer.hpp"
#include "cr/chevalley.hpp"
#include "cr/gfmatrix.hpp"

namespace cr {

struct CheckError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Finite-dimensional module over GF(2^m), given by its (invertible,
/// determinant-one) generator matrices.
struct MatrixModule {
    const GF2m* F = nullptr;
    int n = 0;
    std::vector<GFMatrix> gens;
};

/// Natural module of the derived Levi subgroup (type A_{rank-1}): chain
/// reflections act as transposition matrices, chain coroots as
/// diag(..., c, c^-1, ...). Generators must lie in the Levi (trivial
/// radical part, trivial branch-coroot coordinate, chain Weyl part).
MatrixModule levi_matrix_model(const LabeledRootSystem* s, const GF2m* F,
                               const std::vector<GroupElement>& gens);

/// Smallest invariant subspace containing v, as a row-echelon basis.
std::vector<std::vector<std::uint32_t>> spin(const MatrixModule& mod,
                                             const std::vector<std::uint32_t>& v);

/// Socle test: the sum of all minimal spins equals the whole module.
/// Verdicts are extension-stable (finite fields are perfect, so the
/// radical is preserved under separable base change).
bool is_semisimple(const MatrixModule& mod);
/// Every nonzero vector spins to the whole module.
bool is_irreducible(const MatrixModule& mod);

/// Complete reducibility of a Levi subgroup in the ambient group, decided
/// through semisimplicity of the natural module of the derived Levi.
bool is_Gcr(const LabeledRootSystem* s, const GF2m* F,
            const std::vector<GroupElement>& gens);

/// One catalogued subgroup family: Weyl words (or permutations) generating
/// the finite core, an optional toral extension, and the curve support.
struct CaseSpec {
    std::string id;                     // e.g. "E6/4"
    DiagramType type = DiagramType::E6;
    int number = 0;
    LabelTable table = LabelTable::None;
    std::vector<std::vector<int>> words;    // chain-letter words, may be empty
    std::vector<std::string> perms;         // 1-based cycle strings
    std::vector<int> t_coeffs;              // chain-coroot exponents actually used
    std::vector<int> t_coeffs_catalog;      // tabulated exponents (kept for the
                                            // report when they differ)
    int t_order = 1;                        // multiplicative order (1 = no torus part)
    std::vector<int> v_support;             // labels of the curve v(a); empty =
                                            // use the certificate orbit
    long long core_order = 0;               // expected order of the finite core
    std::string m_type;                     // ambient subsystem subgroup type
};

const std::vector<CaseSpec>& case_catalog();
const CaseSpec& case_by_id(const std::string& id);

LabeledRootSystem case_system(const CaseSpec& c);
/// Finite core generators (words preferred, permutations otherwise).
std::vector<GroupElement> core_generators(const CaseSpec& c,
                                          const LabeledRootSystem* s,
                                          const GF2m* F);
/// Toral extension element, if the case has one.
std::optional<GroupElement> case_torus(const CaseSpec& c,
                                       const LabeledRootSystem* s, const GF2m* F);
/// Core plus torus: the subgroup whose complete reducibility is claimed.
std::vector<GroupElement> case_generators(const CaseSpec& c,
                                          const LabeledRootSystem* s,
                                          const GF2m* F);

/// The curve element v(a), collected to normal form.
UnipotentElement case_curve(const CaseSpec& c, const LabeledRootSystem* s,
                            const GF2m* F, std::uint32_t a,
                            const std::vector<int>& support = {});

/// v(a)-conjugates of the case generators: Levi parts unchanged, tails in
/// the positive-weight layers.
std::vector<GroupElement> build_H(const CaseSpec& c, const LabeledRootSystem* s,
                                  const GF2m* F, std::uint32_t a,
                                  const std::vector<int>& support = {});

/// Refutation of complete reducibility inside the weight-two subsystem
/// subgroup: true when no element of its parabolic radical conjugates the
/// built generators to their Levi projections (inconsistent linear system).
bool non_Mcr_check(const CaseSpec& c, const LabeledRootSystem* s, const GF2m* F,
                   std::uint32_t a, const std::vector<int>& support = {});

struct CaseReport {
    std::string id;
    long long core_order = 0;
    std::vector<std::vector<int>> orbits;
    std::optional<Certificate> certificate;
    int tangent_dim = 0;
    int group_dim = 0;
    std::string dim_method;
    bool gcr = false;
    bool non_mcr = false;
    bool complete = false;
    std::vector<std::string> transcripts;
};

/// Full pipeline: orbits, certificate, centralizer dimensions of the core,
/// complete reducibility of the extended subgroup, and the conjugation
/// refutation for every nonzero curve parameter.
CaseReport verify_case(const CaseSpec& c, int field_degree = 2);

std::string case_report_json(const CaseReport& r);

/// Finite-field shadow of the tuple-separation argument (rank-6 case 4
/// only): true when the a-curve tuple and the b-curve tuple are not
/// conjugate under the parabolic of the weight-two subsystem subgroup over
/// GF(2^m). Decided structurally (central components pin the Levi scalar)
/// and cross-checked by brute force over torus-times-center candidates.
bool tuple_shadow_check(const CaseSpec& c, const GF2m* F, std::uint32_t a,
                        std::uint32_t b, std::string* transcript = nullptr);

}  // namespace cr
