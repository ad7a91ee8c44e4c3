#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cr {

/// Univariate polynomial over the 2-element field; bit i of the limb vector
/// is the coefficient of t^i.
class F2Poly {
public:
    F2Poly() = default;
    explicit F2Poly(std::uint64_t bits) : limbs_{bits} { trim(); }

    static F2Poly t() { return F2Poly(2); }
    static F2Poly one() { return F2Poly(1); }
    static F2Poly monomial(int degree);

    bool is_zero() const { return limbs_.empty(); }
    bool is_one() const { return limbs_.size() == 1 && limbs_[0] == 1; }
    int degree() const;  // -1 for zero
    bool coeff(int i) const;

    F2Poly operator+(const F2Poly& o) const;
    F2Poly operator*(const F2Poly& o) const;
    /// Quotient and remainder; throws on division by zero.
    static void divmod(const F2Poly& a, const F2Poly& b, F2Poly& q, F2Poly& r);
    F2Poly operator%(const F2Poly& o) const;
    F2Poly operator/(const F2Poly& o) const;

    static F2Poly gcd(F2Poly a, F2Poly b);

    /// f = g^2 for some g iff all odd-degree coefficients vanish.
    bool is_square() const;
    F2Poly sqrt() const;  // valid only when is_square()
    F2Poly square() const { return *this * *this; }

    bool operator==(const F2Poly& o) const { return limbs_ == o.limbs_; }
    bool operator!=(const F2Poly& o) const { return !(*this == o); }

    std::string str(char var = 't') const;

private:
    void trim();
    std::vector<std::uint64_t> limbs_;
};

/// Reduced fraction of F2 polynomials. Models the rational function field
/// F2(t), a nonperfect field of characteristic 2.
class RationalFunction {
public:
    RationalFunction() : num_(F2Poly(0)), den_(F2Poly(1)) {}
    RationalFunction(F2Poly num, F2Poly den);

    static RationalFunction t() { return RationalFunction(F2Poly::t(), F2Poly::one()); }

    const F2Poly& numerator() const { return num_; }
    const F2Poly& denominator() const { return den_; }

    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;

    bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }

    std::string str() const;

private:
    F2Poly num_, den_;
};

/// True iff f = g^2 for a rational function g over the 2-element field.
/// Since the fraction is reduced this holds iff numerator and denominator are
/// both squares, i.e. every exponent appearing in either is even.
bool is_square_rational(const RationalFunction& f);

}  // namespace cr
