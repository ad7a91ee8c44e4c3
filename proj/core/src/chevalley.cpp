#include "cr/chevalley.hpp"

#include <algorithm>
#include <sstream>

namespace cr {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw ChevalleyError(msg);
}

}  // namespace

TorusElement::TorusElement(const LabeledRootSystem* s, const GF2m* F,
                           std::vector<std::uint32_t> coords)
    : sys_(s), F_(F), coords_(std::move(coords)) {
    require(sys_ != nullptr && F_ != nullptr, "torus element needs a system and field");
    require(int(coords_.size()) == sys_->rank(), "torus coordinate count != rank");
    for (std::uint32_t c : coords_)
        require(c != 0 && F_->valid(c), "torus coordinate must be a nonzero field element");
}

TorusElement TorusElement::identity(const LabeledRootSystem* s, const GF2m* F) {
    return TorusElement(s, F, std::vector<std::uint32_t>(s->rank(), 1));
}

TorusElement TorusElement::coroot(const LabeledRootSystem* s, const GF2m* F,
                                  const Root& xi, std::uint32_t c) {
    require(s->is_root(xi), "coroot argument is not a root");
    require(c != 0 && F->valid(c), "coroot value must be a nonzero field element");
    std::vector<std::uint32_t> coords(s->rank(), 1);
    for (int i = 0; i < s->rank(); ++i) coords[i] = F->pow(c, xi[i]);
    return TorusElement(s, F, std::move(coords));
}

std::uint32_t TorusElement::eval(const Root& zeta) const {
    std::uint32_t v = 1;
    for (int i = 0; i < sys_->rank(); ++i)
        v = F_->mul(v, F_->pow(coords_[i], sys_->pairing(zeta, sys_->simple(i))));
    return v;
}

TorusElement TorusElement::operator*(const TorusElement& o) const {
    require(sys_ == o.sys_ && F_ == o.F_, "torus product across systems");
    std::vector<std::uint32_t> coords(coords_.size());
    for (std::size_t i = 0; i < coords_.size(); ++i)
        coords[i] = F_->mul(coords_[i], o.coords_[i]);
    return TorusElement(sys_, F_, std::move(coords));
}

TorusElement TorusElement::inverse() const {
    std::vector<std::uint32_t> coords(coords_.size());
    for (std::size_t i = 0; i < coords_.size(); ++i) coords[i] = F_->inv(coords_[i]);
    return TorusElement(sys_, F_, std::move(coords));
}

TorusElement TorusElement::twisted(const WeylElement& w) const {
    require(w.system() == sys_, "twist across systems");
    TorusElement out = identity(sys_, F_);
    for (int i = 0; i < sys_->rank(); ++i)
        out = out * coroot(sys_, F_, w.apply_root(sys_->simple(i)), coords_[i]);
    return out;
}

bool TorusElement::is_identity() const {
    return std::all_of(coords_.begin(), coords_.end(),
                       [](std::uint32_t c) { return c == 1; });
}

UnipotentElement collect(const LabeledRootSystem* s,
                         std::vector<std::pair<int, MPoly>> factors) {
    for (const auto& [label, coeff] : factors) {
        require(s->has_label(label) && label > 0, "unipotent factor label unknown");
        require(s->sigma_weight(s->root_of_label(label)) >= 1,
                "unipotent factor outside the radical");
        (void)coeff;
    }
    std::size_t i = 0;
    while (i + 1 < factors.size() || (!factors.empty() && factors[i].second.is_zero())) {
        if (factors[i].second.is_zero()) {
            factors.erase(factors.begin() + long(i));
            if (i > 0) --i;
            continue;
        }
        if (i + 1 >= factors.size()) break;
        auto& [l1, c1] = factors[i];
        auto& [l2, c2] = factors[i + 1];
        if (l1 == l2) {
            c1 = c1 + c2;
            factors.erase(factors.begin() + long(i) + 1);
            if (i > 0) --i;
        } else if (l1 > l2) {
            // Swap rule at characteristic 2 with unit structure constants:
            // eps_z(a) eps_x(b) = eps_x(b) eps_z(a) eps_{z+x}(ab), and the
            // correction commutes with both factors (its sigma-weight is
            // strictly larger, so further brackets vanish in these gradings).
            auto corr = s->sum_label(l1, l2);
            MPoly prod = c1 * c2;
            std::swap(factors[i], factors[i + 1]);
            if (corr && !prod.is_zero())
                factors.insert(factors.begin() + long(i) + 2, {*corr, prod});
            if (i > 0) --i;
        } else {
            ++i;
        }
    }
    if (!factors.empty() && factors[0].second.is_zero()) factors.clear();
    return UnipotentElement{std::move(factors)};
}

UnipotentElement unip_mul(const LabeledRootSystem* s, const UnipotentElement& a,
                          const UnipotentElement& b) {
    std::vector<std::pair<int, MPoly>> factors = a.factors;
    factors.insert(factors.end(), b.factors.begin(), b.factors.end());
    return collect(s, std::move(factors));
}

UnipotentElement unip_inv(const LabeledRootSystem* s, const UnipotentElement& u) {
    std::vector<std::pair<int, MPoly>> factors(u.factors.rbegin(), u.factors.rend());
    return collect(s, std::move(factors));
}

UnipotentElement conjugate_wt(const WeylElement& w, const TorusElement& t,
                              const UnipotentElement& u) {
    const LabeledRootSystem* s = t.system();
    require(w.system() == s, "conjugation across systems");
    std::vector<std::pair<int, MPoly>> factors;
    factors.reserve(u.factors.size());
    for (const auto& [label, coeff] : u.factors) {
        const Root zeta = s->root_of_label(label);
        const int moved = w.apply(label);
        require(moved > 0 && s->sigma_weight(s->root_of_label(moved)) >= 1,
                "conjugation leaves the radical (w not in the Levi Weyl group)");
        factors.emplace_back(moved, coeff * t.eval(zeta));
    }
    return collect(s, std::move(factors));
}

GroupElement make_element(const WeylElement& w, const TorusElement& t,
                          UnipotentElement u) {
    require(w.system() == t.system(), "mixed systems in group element");
    return GroupElement{w, t, std::move(u)};
}

GroupElement group_identity(const LabeledRootSystem* s, const GF2m* F) {
    return GroupElement{WeylElement::identity(s), TorusElement::identity(s, F), {}};
}

GroupElement group_mul(const GroupElement& a, const GroupElement& b) {
    const LabeledRootSystem* s = a.t.system();
    require(s == b.t.system() && a.t.field() == b.t.field(),
            "group product across systems");
    // (w1 t1 u1)(w2 t2 u2) = (w1 w2) (twist(w2^-1, t1) t2) ((w2 t2)^-1 u1 (w2 t2) u2)
    WeylElement w = a.w * b.w;
    TorusElement t = a.t.twisted(b.w.inverse()) * b.t;
    // (w2 t2)^-1 = w2^-1 * (w2 t2^-1 w2^-1), so conjugating by it is
    // conjugate_wt with that pair.
    UnipotentElement moved =
        conjugate_wt(b.w.inverse(), b.t.inverse().twisted(b.w), a.u);
    return GroupElement{w, t, unip_mul(s, moved, b.u)};
}

GroupElement group_inv(const GroupElement& g) {
    // (w t u)^-1 = w^-1 (w t^-1 w^-1) ((w t) u^-1 (w t)^-1)
    return GroupElement{g.w.inverse(), g.t.inverse().twisted(g.w),
                        conjugate_wt(g.w, g.t, unip_inv(g.t.system(), g.u))};
}

UnipotentElement conjugate(const GroupElement& g, const UnipotentElement& u) {
    const LabeledRootSystem* s = g.t.system();
    UnipotentElement inner = unip_mul(s, g.u, unip_mul(s, u, unip_inv(s, g.u)));
    return conjugate_wt(g.w, g.t, inner);
}

GroupElement group_conj(const GroupElement& g, const GroupElement& x) {
    return group_mul(group_mul(g, x), group_inv(g));
}

LieVector ad_action(const GroupElement& g, const LieVector& x) {
    require(g.u.is_identity(),
            "adjoint action implemented for w t elements only");
    const LabeledRootSystem* s = g.t.system();
    LieVector out;
    for (const auto& [label, coeff] : x) {
        if (coeff == 0) continue;
        require(label > 0 && s->has_label(label) &&
                    s->sigma_weight(s->root_of_label(label)) >= 1,
                "adjoint action vector outside the radical");
        const int moved = g.w.apply(label);
        require(moved > 0, "adjoint action leaves the positive roots");
        const std::uint32_t scaled = g.t.field()->mul(coeff, g.t.eval(s->root_of_label(label)));
        if (scaled != 0) out[moved] = g.t.field()->add(out.count(moved) ? out[moved] : 0, scaled);
        if (out.count(moved) && out[moved] == 0) out.erase(moved);
    }
    return out;
}

GroupElement c_lambda(const GroupElement& g, const Cocharacter& lambda) {
    const LabeledRootSystem* s = g.t.system();
    std::vector<std::pair<int, MPoly>> kept;
    for (const auto& [label, coeff] : g.u.factors)
        if (s->cochar_weight(s->root_of_label(label), lambda) <= 0)
            kept.emplace_back(label, coeff);
    return GroupElement{g.w, g.t, collect(s, std::move(kept))};
}

std::vector<WeylElement> weyl_fixing_torus(const std::vector<WeylElement>& candidates,
                                           const std::vector<TorusElement>& ts) {
    std::vector<WeylElement> out;
    for (const WeylElement& w : candidates) {
        bool ok = true;
        for (const TorusElement& t : ts)
            if (t.twisted(w) != t) { ok = false; break; }
        if (ok) out.push_back(w);
    }
    return out;
}

std::string to_text(const GroupElement& g) {
    const LabeledRootSystem* s = g.t.system();
    std::ostringstream os;
    os << "w=[";
    if (!g.w.is_identity()) {
        // Levi elements only: recover a chain-letter word.
        Perm8 p = levi_permutation_of(g.w);
        std::vector<int> word = levi_word_from_permutation(p, levi_degree(s));
        for (std::size_t i = 0; i < word.size(); ++i)
            os << (i ? " " : "") << word[i];
    }
    os << "] t=(";
    for (std::size_t i = 0; i < g.t.coords().size(); ++i)
        os << (i ? "," : "") << GF2m::to_hex(g.t.coords()[i]);
    os << ") u=[";
    for (std::size_t i = 0; i < g.u.factors.size(); ++i) {
        const auto& [label, coeff] = g.u.factors[i];
        require(coeff.is_constant(), "serialization needs constant coefficients");
        os << (i ? " " : "") << "(" << label << ","
           << GF2m::to_hex(coeff.constant_value()) << ")";
    }
    os << "]";
    return os.str();
}

GroupElement parse_group_element(const LabeledRootSystem* s, const GF2m* F,
                                 const std::string& text) {
    auto section = [&](const std::string& key, char open, char close) {
        auto pos = text.find(key);
        require(pos != std::string::npos, "group element text missing a section");
        pos += key.size();
        require(pos < text.size() && text[pos] == open, "malformed group element text");
        auto end = text.find(close, pos + 1);
        require(end != std::string::npos, "unterminated group element section");
        return text.substr(pos + 1, end - pos - 1);
    };

    std::vector<int> word;
    {
        std::istringstream is(section("w=", '[', ']'));
        int letter;
        while (is >> letter) word.push_back(letter);
    }
    WeylElement w = word.empty() ? WeylElement::identity(s) : levi_word_element(s, word);

    std::vector<std::uint32_t> coords;
    {
        std::string body = section("t=", '(', ')');
        std::replace(body.begin(), body.end(), ',', ' ');
        std::istringstream is(body);
        std::string tok;
        while (is >> tok) coords.push_back(GF2m::from_hex(tok));
    }
    TorusElement t(s, F, std::move(coords));

    std::vector<std::pair<int, MPoly>> factors;
    {
        std::string body = section("u=", '[', ']');
        for (char& c : body)
            if (c == '(' || c == ')' || c == ',') c = ' ';
        std::istringstream is(body);
        int label;
        std::string tok;
        while (is >> label >> tok)
            factors.emplace_back(label, MPoly::constant(F, GF2m::from_hex(tok)));
    }
    return GroupElement{w, t, collect(s, std::move(factors))};
}

}  // namespace cr
