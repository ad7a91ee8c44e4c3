#include "cr/weyl.hpp"

#include <algorithm>
#include <set>

namespace cr {

WeylElement WeylElement::identity(const LabeledRootSystem* s) {
    WeylElement w;
    w.sys_ = s;
    w.img_.resize(s->positive_roots().size());
    for (std::size_t k = 0; k < w.img_.size(); ++k) w.img_[k] = int(k + 1);
    return w;
}

WeylElement WeylElement::reflection(const LabeledRootSystem* s, const Root& xi) {
    if (!s->is_root(xi)) throw RootError("reflection axis is not a root");
    WeylElement w;
    w.sys_ = s;
    w.img_.resize(s->positive_roots().size());
    for (std::size_t k = 0; k < w.img_.size(); ++k)
        w.img_[k] = s->label_of_root(s->reflect(s->root_of_label(int(k + 1)), xi));
    return w;
}

WeylElement WeylElement::simple_reflection(const LabeledRootSystem* s, int node) {
    return reflection(s, s->simple(node));
}

WeylElement WeylElement::from_word(const LabeledRootSystem* s,
                                   const std::vector<int>& letters) {
    WeylElement w = identity(s);
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
        w = simple_reflection(s, *it) * w;
    return w;
}

bool WeylElement::is_identity() const {
    for (std::size_t k = 0; k < img_.size(); ++k)
        if (img_[k] != int(k + 1)) return false;
    return true;
}

int WeylElement::apply(int label) const {
    if (label == 0 || std::size_t(std::abs(label)) > img_.size())
        throw RootError("label out of range");
    return label > 0 ? img_[label - 1] : -img_[-label - 1];
}

Root WeylElement::apply_root(const Root& r) const {
    return sys_->root_of_label(apply(sys_->label_of_root(r)));
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
    WeylElement w;
    w.sys_ = sys_;
    w.img_.resize(img_.size());
    for (std::size_t k = 0; k < img_.size(); ++k) w.img_[k] = apply(o.img_[k]);
    return w;
}

WeylElement WeylElement::inverse() const {
    WeylElement w;
    w.sys_ = sys_;
    w.img_.resize(img_.size());
    for (std::size_t k = 0; k < img_.size(); ++k) {
        int v = img_[k];
        if (v > 0)
            w.img_[v - 1] = int(k + 1);
        else
            w.img_[-v - 1] = -int(k + 1);
    }
    return w;
}

WeylElement levi_word_element(const LabeledRootSystem* s,
                              const std::vector<int>& letters) {
    for (int l : letters)
        if (l == s->sigma_node() || l < 0 || l >= s->rank())
            throw RootError("letter is not a Levi simple root");
    return WeylElement::from_word(s, letters);
}

int levi_degree(const LabeledRootSystem* s) {
    if (s->sigma_node() < 0) throw RootError("no Levi chain in this system");
    return s->rank();  // chain of rank-1 nodes <-> symmetric group on rank letters
}

std::vector<int> levi_word_from_permutation(Perm8 p, int n) {
    // Bubble-sort decomposition: peel adjacent transpositions off the right
    // until the one-line form is sorted, then reverse.
    std::vector<int> line = perm_images(p, n);
    std::vector<int> word;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 0; i + 1 < n; ++i)
            if (line[i] > line[i + 1]) {
                std::swap(line[i], line[i + 1]);
                word.push_back(i);
                moved = true;
            }
    }
    std::reverse(word.begin(), word.end());
    return word;
}

WeylElement weyl_from_levi_permutation(const LabeledRootSystem* s, Perm8 p) {
    int n = levi_degree(s);
    WeylElement w =
        levi_word_element(s, levi_word_from_permutation(p, n));
    if (levi_permutation_of(w) != p)
        throw RootError("letter permutation synthesis failed");
    return w;
}

Perm8 levi_permutation_of(const WeylElement& w) {
    const LabeledRootSystem* s = w.system();
    int n = levi_degree(s);
    // The chain subsystem is A_{n-1} with roots e_i - e_j realized as
    // alpha_i + ... + alpha_{j-1}; the action on these roots recovers the
    // letter permutation: w(e_i - e_j) = e_{p(i)} - e_{p(j)}.
    auto chain_root = [&](int i, int j) {  // e_i - e_j for i < j, 0-based
        Root r(s->rank(), 0);
        for (int k = i; k < j; ++k) r[k] = 1;
        return r;
    };
    std::vector<int> img(n, -1);
    auto record = [&](int from, int to) {
        if (img[from] == -1) img[from] = to;
        else if (img[from] != to) throw RootError("inconsistent letter action");
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Root image = w.apply_root(chain_root(i, j));
            int lo = -1, hi = -1, sign = 0;
            for (int k = 0; k < n - 1; ++k) {
                if (image[k] == 0) continue;
                if (lo < 0) { lo = k; sign = image[k]; }
                if (image[k] != sign) throw RootError("element is not in the Levi");
                hi = k;
            }
            if (lo < 0 || image[s->sigma_node()] != 0)
                throw RootError("element is not in the Levi");
            if (sign > 0) { record(i, lo); record(j, hi + 1); }
            else { record(i, hi + 1); record(j, lo); }
        }
    return perm_from_images(img);
}

std::map<int, int> restriction(const WeylElement& w,
                               const std::vector<int>& domain) {
    std::set<int> dom(domain.begin(), domain.end());
    std::map<int, int> out;
    for (int label : domain) {
        int image = w.apply(label);
        if (!dom.count(image))
            throw RootError("domain not stabilized by the Weyl element");
        out[label] = image;
    }
    return out;
}

std::vector<std::vector<int>> orbits(const std::vector<WeylElement>& gens,
                                     const std::vector<int>& domain) {
    std::set<int> left(domain.begin(), domain.end());
    std::vector<std::vector<int>> out;
    while (!left.empty()) {
        std::set<int> orbit{*left.begin()};
        std::vector<int> frontier{*left.begin()};
        while (!frontier.empty()) {
            std::vector<int> next;
            for (int label : frontier)
                for (const WeylElement& g : gens) {
                    int image = g.apply(label);
                    if (!left.count(image) && !orbit.count(image))
                        throw RootError("domain not stabilized by the generators");
                    if (orbit.insert(image).second) next.push_back(image);
                }
            frontier = std::move(next);
        }
        for (int label : orbit) left.erase(label);
        out.push_back(std::vector<int>(orbit.begin(), orbit.end()));
    }
    return out;
}

std::vector<WeylElement> enumerate_weyl(const LabeledRootSystem* s) {
    std::vector<WeylElement> simples;
    for (int i = 0; i < s->rank(); ++i)
        simples.push_back(WeylElement::simple_reflection(s, i));
    std::set<WeylElement> all{WeylElement::identity(s)};
    std::vector<WeylElement> frontier{WeylElement::identity(s)};
    while (!frontier.empty()) {
        std::vector<WeylElement> next;
        for (const WeylElement& w : frontier)
            for (const WeylElement& g : simples) {
                WeylElement x = g * w;
                if (all.insert(x).second) next.push_back(x);
            }
        frontier = std::move(next);
    }
    return std::vector<WeylElement>(all.begin(), all.end());
}

}  // namespace cr
