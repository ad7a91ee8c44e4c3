#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "cr/gf2m.hpp"

namespace cr {

/// Sparse multivariate polynomial over GF(2^m). Variables are integer ids;
/// callers own the naming scheme. Immutable value semantics.
class MPoly {
public:
    /// Sorted (variable, exponent > 0) list.
    using Monomial = std::vector<std::pair<int, int>>;

    MPoly() : F_(nullptr) {}
    explicit MPoly(const GF2m* F) : F_(F) {}

    static MPoly constant(const GF2m* F, std::uint32_t c);
    static MPoly variable(const GF2m* F, int var);

    const GF2m* field() const { return F_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::uint32_t constant_value() const;  // throws unless is_constant
    int degree() const;                    // total degree, -1 for zero
    int degree_in(int var) const;
    std::set<int> variables() const;

    MPoly operator+(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly operator*(std::uint32_t c) const;
    bool operator==(const MPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }
    bool operator<(const MPoly& o) const { return terms_ < o.terms_; }

    MPoly square() const;
    /// True iff the polynomial is g^2 for a polynomial g: over a perfect
    /// coefficient field this means every exponent is even.
    bool is_square() const;
    MPoly sqrt() const;  // valid only when is_square()

    MPoly substitute(int var, const MPoly& value) const;
    std::uint32_t eval(const std::map<int, std::uint32_t>& assignment) const;

    /// Degree <= 1 part decomposition helpers.
    bool is_linear() const { return degree() <= 1; }
    std::uint32_t coeff_of_var(int var) const;  // coefficient of the degree-1 monomial in var
    std::uint32_t constant_term() const;
    /// Degree-1 truncation (drops all monomials of total degree >= 2).
    MPoly linear_part() const;

    const std::map<Monomial, std::uint32_t>& terms() const { return terms_; }

    std::string str(const std::function<std::string(int)>& name) const;

private:
    void insert(const Monomial& m, std::uint32_t c);
    const GF2m* F_;
    std::map<Monomial, std::uint32_t> terms_;
};

}  // namespace cr
