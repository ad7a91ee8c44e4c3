#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cr/gf2m.hpp"
#include "cr/mpoly.hpp"
#include "cr/rootsystem.hpp"
#include "cr/weyl.hpp"

namespace cr {

struct ChevalleyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Diagonal torus element, stored as one coordinate per simple coroot:
/// t = prod_i alpha_i-coroot(c_i), all c_i nonzero.
class TorusElement {
public:
    TorusElement() = default;
    TorusElement(const LabeledRootSystem* s, const GF2m* F,
                 std::vector<std::uint32_t> coords);
    static TorusElement identity(const LabeledRootSystem* s, const GF2m* F);
    /// xi-coroot(c) for a root xi (coroot coefficients = root coefficients
    /// in a simply-laced system).
    static TorusElement coroot(const LabeledRootSystem* s, const GF2m* F,
                               const Root& xi, std::uint32_t c);

    const LabeledRootSystem* system() const { return sys_; }
    const GF2m* field() const { return F_; }
    const std::vector<std::uint32_t>& coords() const { return coords_; }

    /// zeta(t) = prod_i c_i^<zeta, alpha_i-coroot>.
    std::uint32_t eval(const Root& zeta) const;

    TorusElement operator*(const TorusElement& o) const;
    TorusElement inverse() const;
    /// w t w^-1, via w alpha_i-coroot(c) w^-1 = (w alpha_i)-coroot(c).
    TorusElement twisted(const WeylElement& w) const;
    bool is_identity() const;
    bool operator==(const TorusElement& o) const { return coords_ == o.coords_; }
    bool operator!=(const TorusElement& o) const { return !(*this == o); }

private:
    const LabeledRootSystem* sys_ = nullptr;
    const GF2m* F_ = nullptr;
    std::vector<std::uint32_t> coords_;
};

/// Product of radical root-group elements in normal form: factors sorted by
/// ascending label, no zero or repeated coefficients. Coefficients may be
/// polynomials in named variables (constants for concrete elements).
struct UnipotentElement {
    std::vector<std::pair<int, MPoly>> factors;
    bool is_identity() const { return factors.empty(); }
    bool operator==(const UnipotentElement& o) const { return factors == o.factors; }
    bool operator!=(const UnipotentElement& o) const { return !(*this == o); }
};

/// Normal form of an arbitrary product of radical root-group factors, by
/// adjacent transposition with correction insertion (all structure constants
/// are 1 at characteristic 2) and additive merging of equal labels.
UnipotentElement collect(const LabeledRootSystem* s,
                         std::vector<std::pair<int, MPoly>> factors);

UnipotentElement unip_mul(const LabeledRootSystem* s, const UnipotentElement& a,
                          const UnipotentElement& b);
/// Characteristic 2: each factor is an involution, so reverse the list.
UnipotentElement unip_inv(const LabeledRootSystem* s, const UnipotentElement& u);

/// (w t) u (w t)^-1: labels move by w, coefficients scale by zeta(t).
UnipotentElement conjugate_wt(const WeylElement& w, const TorusElement& t,
                              const UnipotentElement& u);

/// Element w * t * u of the parabolic; w must lie in the Levi Weyl group
/// whenever unipotent parts are conjugated through it.
struct GroupElement {
    WeylElement w;
    TorusElement t;
    UnipotentElement u;
    bool operator==(const GroupElement& o) const {
        return w == o.w && t == o.t && u == o.u;
    }
    bool operator!=(const GroupElement& o) const { return !(*this == o); }
};

GroupElement make_element(const WeylElement& w, const TorusElement& t,
                          UnipotentElement u = {});
GroupElement group_identity(const LabeledRootSystem* s, const GF2m* F);
GroupElement group_mul(const GroupElement& a, const GroupElement& b);
GroupElement group_inv(const GroupElement& g);
/// g u g^-1 for full g = w t u_g.
UnipotentElement conjugate(const GroupElement& g, const UnipotentElement& u);
GroupElement group_conj(const GroupElement& g, const GroupElement& x);

/// Coefficient per radical-label basis vector of the radical Lie algebra.
using LieVector = std::map<int, std::uint32_t>;

/// Adjoint action of g = w t (trivial unipotent part required):
/// e_zeta -> zeta(t) e_{w zeta}.
LieVector ad_action(const GroupElement& g, const LieVector& x);

/// Levi projection: drops every unipotent coordinate of positive
/// lambda-weight (all radical coordinates, for a dominant Levi cocharacter).
GroupElement c_lambda(const GroupElement& g, const Cocharacter& lambda);

/// All w in the candidate list fixing every torus element (w t w^-1 = t).
std::vector<WeylElement> weyl_fixing_torus(const std::vector<WeylElement>& candidates,
                                           const std::vector<TorusElement>& ts);

/// Textual round-trip format for concrete elements:
/// `w=[letters] t=(hex,...) u=[(label,hex)...]`.
std::string to_text(const GroupElement& g);
GroupElement parse_group_element(const LabeledRootSystem* s, const GF2m* F,
                                 const std::string& text);

}  // namespace cr
