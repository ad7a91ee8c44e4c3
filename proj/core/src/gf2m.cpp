#include "cr/gf2m.hpp"

namespace cr {
namespace {

// Carryless multiply of two F2 polynomials (degrees < 32).
std::uint64_t clmul(std::uint32_t a, std::uint32_t b) {
    std::uint64_t r = 0;
    while (b) {
        if (b & 1) r ^= a;
        a = std::uint32_t(a << 1);
        // keep full width in r via 64-bit accumulation
        b >>= 1;
    }
    return r;
}

std::uint64_t clmul64(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    for (int i = 0; b; ++i, b >>= 1)
        if (b & 1) r ^= a << i;
    return r;
}

int poly_deg(std::uint64_t p) {
    if (!p) return -1;
    return 63 - __builtin_clzll(p);
}

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t f) {
    int df = poly_deg(f);
    for (int d = poly_deg(a); d >= df; d = poly_deg(a)) a ^= f << (d - df);
    return a;
}

std::uint64_t poly_gcd(std::uint64_t a, std::uint64_t b) {
    while (b) {
        std::uint64_t t = poly_mod(a, b);
        a = b;
        b = t;
    }
    return a;
}

std::uint64_t poly_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t f) {
    return poly_mod(clmul64(a, b), f);
}

// x^(2^k) mod f by repeated squaring of x.
std::uint64_t poly_xpow2k(int k, std::uint64_t f) {
    std::uint64_t r = poly_mod(2, f);  // x
    for (int i = 0; i < k; ++i) r = poly_mulmod(r, r, f);
    return r;
}

bool is_irreducible(std::uint32_t f, int m) {
    // f irreducible of degree m iff x^(2^m) == x (mod f) and
    // gcd(x^(2^(m/p)) - x, f) = 1 for every prime p | m.
    if (poly_xpow2k(m, f) != 2) return false;
    for (int p = 2; p <= m; ++p) {
        if (m % p != 0) continue;
        bool prime = true;
        for (int q = 2; q * q <= p; ++q)
            if (p % q == 0) prime = false;
        if (!prime) continue;
        std::uint64_t h = poly_xpow2k(m / p, f) ^ 2u;
        if (poly_deg(poly_gcd(f, h)) != 0) return false;
    }
    return true;
}

}  // namespace

std::uint32_t GF2m::least_irreducible(int degree) {
    if (degree < 1 || degree > kMaxDegree)
        throw FieldError("unsupported extension degree " + std::to_string(degree));
    if (degree == 1) return 0b10;  // x
    std::uint32_t top = std::uint32_t(1) << degree;
    for (std::uint32_t low = 1; low < top; low += 2)
        if (is_irreducible(top | low, degree)) return top | low;
    throw FieldError("no irreducible polynomial found");  // unreachable
}

GF2m::GF2m(int degree) : m_(degree), modulus_(least_irreducible(degree)) {
    std::uint32_t q = size();
    // Find a multiplicative generator by trial.
    auto raw_mul = [&](std::uint32_t a, std::uint32_t b) {
        return std::uint32_t(poly_mod(clmul(a, b), modulus_));
    };
    generator_ = 0;
    for (std::uint32_t g = 2; g < q && !generator_; ++g) {
        std::uint32_t x = g;
        std::uint32_t ord = 1;
        while (x != 1) {
            x = raw_mul(x, g);
            ++ord;
        }
        if (ord == q - 1) generator_ = g;
    }
    if (q == 2) generator_ = 1;
    exp_.assign(q - 1, 0);
    log_.assign(q, 0);
    std::uint32_t x = 1;
    for (std::uint32_t i = 0; i + 1 < q; ++i) {
        exp_[i] = x;
        log_[x] = i;
        x = raw_mul(x, generator_);
    }
}

std::uint32_t GF2m::pow(std::uint32_t a, long long e) const {
    if (a == 0) {
        if (e == 0) return 1;
        if (e < 0) throw FieldError("0 to a negative power");
        return 0;
    }
    long long n = size() - 1;
    long long k = ((e % n) + n) % n;
    return exp_[std::uint32_t((std::uint64_t(log_[a]) * k) % n)];
}

std::uint32_t GF2m::sqrt(std::uint32_t a) const {
    std::uint32_t r = a;
    for (int i = 0; i + 1 < m_; ++i) r = mul(r, r);
    return r;
}

std::uint32_t GF2m::element_of_order(std::uint32_t order) const {
    if (order == 0 || (size() - 1) % order != 0)
        throw FieldError("no element of order " + std::to_string(order) +
                         " in GF(2^" + std::to_string(m_) + ")");
    return pow(generator_, (size() - 1) / order);
}

std::string GF2m::to_hex(std::uint32_t a) {
    if (a == 0) return "0";
    static const char* digits = "0123456789abcdef";
    std::string s;
    while (a) {
        s.insert(s.begin(), digits[a & 0xf]);
        a >>= 4;
    }
    return s;
}

std::uint32_t GF2m::from_hex(const std::string& s) {
    if (s.empty()) throw FieldError("empty element literal");
    std::uint32_t a = 0;
    for (char c : s) {
        a <<= 4;
        if (c >= '0' && c <= '9') a |= std::uint32_t(c - '0');
        else if (c >= 'a' && c <= 'f') a |= std::uint32_t(c - 'a' + 10);
        else if (c >= 'A' && c <= 'F') a |= std::uint32_t(c - 'A' + 10);
        else throw FieldError("bad hex digit in element literal");
    }
    return a;
}

}  // namespace cr
