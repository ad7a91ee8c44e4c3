#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cr {

// Arithmetic error in a finite field (inverse of zero, bad element, ...).
struct FieldError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The field with 2^m elements, 1 <= m <= 16.
///
/// Elements are polynomial coordinates over the 2-element field, packed into
/// the low m bits of a uint32_t. The modulus is the lexicographically least
/// irreducible polynomial of degree m, so encodings are stable across runs
/// and platforms (reports embed raw element values).
class GF2m {
public:
    static constexpr int kMaxDegree = 16;

    explicit GF2m(int degree);

    int degree() const { return m_; }
    std::uint32_t size() const { return std::uint32_t(1) << m_; }
    /// Modulus polynomial, bit i = coefficient of x^i (bit m always set).
    std::uint32_t modulus() const { return modulus_; }
    /// A fixed multiplicative generator.
    std::uint32_t generator() const { return generator_; }

    bool valid(std::uint32_t a) const { return a < size(); }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return a ^ b; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        std::uint32_t s = log_[a] + log_[b];
        if (s >= size() - 1) s -= size() - 1;
        return exp_[s];
    }
    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) throw FieldError("inverse of zero in GF(2^" + std::to_string(m_) + ")");
        return exp_[(size() - 1 - log_[a]) % (size() - 1)];
    }
    std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }

    std::uint32_t pow(std::uint32_t a, long long e) const;

    std::uint32_t frobenius(std::uint32_t a) const { return mul(a, a); }
    /// sqrt(a) = a^(2^(m-1)); exact since Frobenius is a bijection.
    std::uint32_t sqrt(std::uint32_t a) const;

    /// Element of the given multiplicative order, or throws if none exists.
    std::uint32_t element_of_order(std::uint32_t order) const;

    /// Hexadecimal of the polynomial coordinates.
    static std::string to_hex(std::uint32_t a);
    static std::uint32_t from_hex(const std::string& s);

    /// Lexicographically least irreducible polynomial of the given degree.
    static std::uint32_t least_irreducible(int degree);

    bool operator==(const GF2m& o) const { return m_ == o.m_; }

private:
    int m_;
    std::uint32_t modulus_;
    std::uint32_t generator_;
    std::vector<std::uint32_t> exp_;  // exp_[i] = g^i, length 2^m - 1 doubled not needed
    std::vector<std::uint32_t> log_;  // log_[a] for a != 0
};

}  // namespace cr
