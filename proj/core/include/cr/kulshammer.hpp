#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cr/chevalley.hpp"
#include "cr/gf2m.hpp"
#include "cr/gfmatrix.hpp"
#include "cr/rootsystem.hpp"

namespace cr {

struct KulError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One verified relator of a finite presentation.
struct RelatorCheck {
    std::string relator;
    bool holds = false;
};

/// The representation family inside the rank-6 parabolic model: a finite
/// group F x C2 mapped to (Weyl x torus) x radical elements, with a curve of
/// representations rho_a differing only in the top radical coordinate.
class TorusWeylFamily {
public:
    /// F must contain an element of order 3 (degree divisible by 2).
    TorusWeylFamily(const GF2m* F);

    const LabeledRootSystem* system() const { return &sys_; }
    const GF2m* field() const { return F_; }
    const std::vector<GroupElement>& torus_tuple() const { return ts_; }
    const GroupElement& q1() const { return q1_; }
    const GroupElement& q2() const { return q2_; }

    /// Closure size of <t1..t5, q1, q2>.
    long long core_order() const;
    /// Closure size of <t1..t5>.
    long long torus_part_order() const;
    /// The displayed defining relations of the core (left-action reading
    /// q . t = q t q^-1); a failing relator is reported, not thrown.
    std::vector<RelatorCheck> core_relations() const;
    /// True iff the conjugation relators validate only under the right-action
    /// reading t^q = q^-1 t q.
    bool right_action_only() const;

    /// Images of the presentation generators r1..r5, s1, s2, z under rho_a.
    std::vector<std::pair<std::string, GroupElement>> rho(std::uint32_t a) const;
    /// Every relator of the finite presentation under rho_a.
    std::vector<RelatorCheck> rho_relators(std::uint32_t a) const;

    /// u(sqrt a): conjugates rho_0 to rho_a on the Sylow pair (s2, z);
    /// verified before returning.
    GroupElement sylow_conjugator(std::uint32_t a) const;

    struct TupleCentralizer {
        std::vector<int> root_labels;        // signed labels fixed by the tuple
        std::vector<std::string> weyl_part;  // stabilizing Weyl elements (text)
        bool is_rank_one = false;            // root set {21,-21}, Weyl part {1,s21}
    };
    /// Root and Weyl data of the centralizer of (t1,...,t5).
    TupleCentralizer centralizer_of_torus_tuple() const;

    /// True iff rho_a and rho_b are non-conjugate, following the structured
    /// reduction: conjugators live in T * G21, the torus factor commutes with
    /// q1 and q2 and so acts on the label-21 line by a scalar folded into the
    /// rank-one search, and the rank-one group cannot move the pair
    /// (q2 e21(a), e21(1)) to (q2 e21(b), e21(1)). When a conjugator exists
    /// (a == b) a witness is written to *witness.
    bool nonconjugacy(std::uint32_t a, std::uint32_t b,
                      std::string* witness = nullptr) const;

private:
    LabeledRootSystem sys_;
    const GF2m* F_;
    std::uint32_t c_;
    std::vector<GroupElement> ts_;
    GroupElement q1_, q2_;
};

/// Element x * sigma^flag of SL3 extended by the graph automorphism
/// sigma(x) = J (x^-1)^T J (J the antidiagonal permutation), characteristic 2.
struct AugmentedMatrix {
    GFMatrix x;
    int flag = 0;  // 0 or 1
};

AugmentedMatrix aug_identity(const GF2m* F);
AugmentedMatrix aug_mul(const AugmentedMatrix& a, const AugmentedMatrix& b);
AugmentedMatrix aug_inv(const AugmentedMatrix& a);
bool aug_eq(const AugmentedMatrix& a, const AugmentedMatrix& b);
GFMatrix graph_twist(const GFMatrix& x);  // J (x^-1)^T J

/// The dihedral family in SL3 extended by the graph automorphism:
/// rho_a(r) = (alpha-beta)-coroot(c), rho_a(s) = sigma * e_{alpha+beta}(a),
/// rho_a(z) = e_{alpha+beta}(1), with |c| = d odd.
class GraphTwistFamily {
public:
    /// Throws unless F contains an element of odd order d >= 3.
    GraphTwistFamily(const GF2m* F, int d = 3);

    const GF2m* field() const { return F_; }
    int d() const { return d_; }

    AugmentedMatrix rho_r() const;
    AugmentedMatrix rho_s(std::uint32_t a) const;
    AugmentedMatrix rho_z() const;
    /// All relators of D_{2d} x C2 under rho_a.
    std::vector<RelatorCheck> rho_relators(std::uint32_t a) const;

    /// u(sqrt a) = e_alpha(sqrt a) e_beta(sqrt a); verified conjugator of the
    /// Sylow pair (s, z) from rho_0 to rho_a.
    AugmentedMatrix sylow_conjugator(std::uint32_t a) const;

    /// Brute-force verdict over every element of SL3(F) x <sigma>.
    bool nonconjugacy_brute(std::uint32_t a, std::uint32_t b) const;
    /// Structured verdict, same contract as the brute force. When c^3 = 1
    /// the rotation image is scalar and all members are conjugate (witness
    /// replayed); otherwise the centralizer-first reduction to the rank-one
    /// subgroup of the fixed line decides.
    bool nonconjugacy(std::uint32_t a, std::uint32_t b,
                      std::string* witness = nullptr) const;

    /// Number of elements of SL3(F) (enumeration cross-check).
    long long sl3_order() const;

private:
    const GF2m* F_;
    int d_;
    std::uint32_t c_;
};

}  // namespace cr
