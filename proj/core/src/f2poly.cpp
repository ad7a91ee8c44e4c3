#include "cr/f2poly.hpp"

namespace cr {

void F2Poly::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

F2Poly F2Poly::monomial(int degree) {
    F2Poly p;
    p.limbs_.assign(std::size_t(degree / 64) + 1, 0);
    p.limbs_[std::size_t(degree / 64)] = std::uint64_t(1) << (degree % 64);
    return p;
}

int F2Poly::degree() const {
    if (limbs_.empty()) return -1;
    return int(limbs_.size() - 1) * 64 + 63 - __builtin_clzll(limbs_.back());
}

bool F2Poly::coeff(int i) const {
    std::size_t w = std::size_t(i) / 64;
    if (i < 0 || w >= limbs_.size()) return false;
    return (limbs_[w] >> (i % 64)) & 1;
}

F2Poly F2Poly::operator+(const F2Poly& o) const {
    F2Poly r;
    r.limbs_.resize(std::max(limbs_.size(), o.limbs_.size()), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) r.limbs_[i] ^= limbs_[i];
    for (std::size_t i = 0; i < o.limbs_.size(); ++i) r.limbs_[i] ^= o.limbs_[i];
    r.trim();
    return r;
}

F2Poly F2Poly::operator*(const F2Poly& o) const {
    if (is_zero() || o.is_zero()) return F2Poly();
    F2Poly r;
    r.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t a = limbs_[i];
        for (int bit = 0; bit < 64; ++bit) {
            if (!((a >> bit) & 1)) continue;
            for (std::size_t j = 0; j < o.limbs_.size(); ++j) {
                std::uint64_t b = o.limbs_[j];
                r.limbs_[i + j] ^= b << bit;
                if (bit) r.limbs_[i + j + 1] ^= b >> (64 - bit);
            }
        }
    }
    r.trim();
    return r;
}

void F2Poly::divmod(const F2Poly& a, const F2Poly& b, F2Poly& q, F2Poly& r) {
    if (b.is_zero()) throw std::domain_error("F2Poly division by zero");
    q = F2Poly();
    r = a;
    int db = b.degree();
    while (r.degree() >= db) {
        int shift = r.degree() - db;
        F2Poly m = monomial(shift);
        q = q + m;
        r = r + m * b;
    }
}

F2Poly F2Poly::operator%(const F2Poly& o) const {
    F2Poly q, r;
    divmod(*this, o, q, r);
    return r;
}

F2Poly F2Poly::operator/(const F2Poly& o) const {
    F2Poly q, r;
    divmod(*this, o, q, r);
    return q;
}

F2Poly F2Poly::gcd(F2Poly a, F2Poly b) {
    while (!b.is_zero()) {
        F2Poly t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool F2Poly::is_square() const {
    for (int i = 1; i <= degree(); i += 2)
        if (coeff(i)) return false;
    return true;
}

F2Poly F2Poly::sqrt() const {
    F2Poly r;
    for (int i = 0; i <= degree(); i += 2)
        if (coeff(i)) r = r + monomial(i / 2);
    return r;
}

std::string F2Poly::str(char var) const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        if (!coeff(i)) continue;
        if (!s.empty()) s += "+";
        if (i == 0) s += "1";
        else if (i == 1) s += var;
        else s += std::string(1, var) + "^" + std::to_string(i);
    }
    return s;
}

RationalFunction::RationalFunction(F2Poly num, F2Poly den) : num_(num), den_(den) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    F2Poly g = F2Poly::gcd(num_, den_);
    if (!g.is_one() && !g.is_zero()) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
    // Over F2 every nonzero polynomial is monic; no normalization needed.
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

std::string RationalFunction::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

bool is_square_rational(const RationalFunction& f) {
    return f.numerator().is_square() && f.denominator().is_square();
}

}  // namespace cr
