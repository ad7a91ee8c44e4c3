#include "cr/mpoly.hpp"

#include <algorithm>
#include <sstream>

namespace cr {

MPoly MPoly::constant(const GF2m* F, std::uint32_t c) {
    MPoly p(F);
    if (c) p.terms_[{}] = c;
    return p;
}

MPoly MPoly::variable(const GF2m* F, int var) {
    MPoly p(F);
    p.terms_[{{var, 1}}] = 1;
    return p;
}

bool MPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

std::uint32_t MPoly::constant_value() const {
    if (!is_constant()) throw FieldError("polynomial is not constant");
    return terms_.empty() ? 0 : terms_.begin()->second;
}

int MPoly::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
        int t = 0;
        for (auto [v, e] : m) t += e;
        d = std::max(d, t);
    }
    return d;
}

int MPoly::degree_in(int var) const {
    int d = 0;
    for (const auto& [m, c] : terms_)
        for (auto [v, e] : m)
            if (v == var) d = std::max(d, e);
    return d;
}

std::set<int> MPoly::variables() const {
    std::set<int> out;
    for (const auto& [m, c] : terms_)
        for (auto [v, e] : m) out.insert(v);
    return out;
}

void MPoly::insert(const Monomial& m, std::uint32_t c) {
    if (!c) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_[m] = c;
    } else {
        it->second ^= c;
        if (!it->second) terms_.erase(it);
    }
}

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly r = *this;
    if (!r.F_) r.F_ = o.F_;
    for (const auto& [m, c] : o.terms_) r.insert(m, c);
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
    const GF2m* F = F_ ? F_ : o.F_;
    MPoly r(F);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m;
            std::size_t i = 0, j = 0;
            while (i < ma.size() || j < mb.size()) {
                if (j == mb.size() || (i < ma.size() && ma[i].first < mb[j].first))
                    m.push_back(ma[i++]);
                else if (i == ma.size() || mb[j].first < ma[i].first)
                    m.push_back(mb[j++]);
                else {
                    m.push_back({ma[i].first, ma[i].second + mb[j].second});
                    ++i;
                    ++j;
                }
            }
            r.insert(m, F->mul(ca, cb));
        }
    return r;
}

MPoly MPoly::operator*(std::uint32_t c) const {
    MPoly r(F_);
    if (!c) return r;
    for (const auto& [m, coeff] : terms_) r.terms_[m] = F_->mul(coeff, c);
    return r;
}

MPoly MPoly::square() const {
    // Characteristic 2: squaring is coefficient-wise Frobenius with doubled
    // exponents (cross terms cancel in pairs).
    MPoly r(F_);
    for (const auto& [m, c] : terms_) {
        Monomial m2 = m;
        for (auto& [v, e] : m2) e *= 2;
        r.terms_[m2] = F_->frobenius(c);
    }
    return r;
}

bool MPoly::is_square() const {
    for (const auto& [m, c] : terms_)
        for (auto [v, e] : m)
            if (e % 2) return false;
    return true;
}

MPoly MPoly::sqrt() const {
    if (!is_square()) throw FieldError("polynomial is not a square");
    MPoly r(F_);
    for (const auto& [m, c] : terms_) {
        Monomial mh = m;
        for (auto& [v, e] : mh) e /= 2;
        r.terms_[mh] = F_->sqrt(c);
    }
    return r;
}

MPoly MPoly::substitute(int var, const MPoly& value) const {
    MPoly r(F_);
    for (const auto& [m, c] : terms_) {
        MPoly term = MPoly::constant(F_, c);
        Monomial rest;
        int exp = 0;
        for (auto [v, e] : m) {
            if (v == var)
                exp = e;
            else
                rest.push_back({v, e});
        }
        MPoly base(F_);
        base.terms_[rest] = 1;
        term = term * base;
        for (int i = 0; i < exp; ++i) term = term * value;
        r = r + term;
    }
    return r;
}

std::uint32_t MPoly::eval(const std::map<int, std::uint32_t>& assignment) const {
    std::uint32_t total = 0;
    for (const auto& [m, c] : terms_) {
        std::uint32_t v = c;
        for (auto [var, e] : m) {
            auto it = assignment.find(var);
            if (it == assignment.end()) throw FieldError("unassigned variable");
            v = F_->mul(v, F_->pow(it->second, e));
        }
        total ^= v;
    }
    return total;
}

std::uint32_t MPoly::coeff_of_var(int var) const {
    auto it = terms_.find(Monomial{{var, 1}});
    return it == terms_.end() ? 0 : it->second;
}

std::uint32_t MPoly::constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? 0 : it->second;
}

MPoly MPoly::linear_part() const {
    MPoly r(F_);
    for (const auto& [m, c] : terms_) {
        int d = 0;
        for (auto [v, e] : m) d += e;
        if (d <= 1) r.terms_[m] = c;
    }
    return r;
}

std::string MPoly::str(const std::function<std::string(int)>& name) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) out << "+";
        first = false;
        bool printed = false;
        if (c != 1 || m.empty()) {
            out << GF2m::to_hex(c);
            printed = true;
        }
        for (auto [v, e] : m) {
            if (printed) out << "*";
            out << name(v);
            if (e > 1) out << "^" << e;
            printed = true;
        }
    }
    return out.str();
}

}  // namespace cr
