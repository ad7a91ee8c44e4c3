#include "cr/subgroups.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cr {

namespace {

constexpr Perm8 kIdentity = 0x0706050403020100ull;

std::vector<Perm8> all_perms(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::vector<Perm8> out;
    do {
        out.push_back(perm_from_images(img));
    } while (std::next_permutation(img.begin(), img.end()));
    std::sort(out.begin(), out.end());
    return out;
}

bool contains(const std::vector<Perm8>& sorted, Perm8 p) {
    return std::binary_search(sorted.begin(), sorted.end(), p);
}

// Subgroup generated by the sorted base set together with g, where g
// normalizes the base set and g^prime lands in it: just the coset union.
std::vector<Perm8> coset_extension(const std::vector<Perm8>& base, Perm8 g,
                                   int prime) {
    std::vector<Perm8> out = base;
    Perm8 power = g;
    for (int i = 1; i < prime; ++i) {
        for (Perm8 h : base) out.push_back(perm_mul(h, power));
        power = perm_mul(power, g);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Minimal generating sequence, greedily, from a sorted element list.
std::vector<Perm8> greedy_generators(const std::vector<Perm8>& elements) {
    std::vector<Perm8> gens;
    std::vector<Perm8> have{kIdentity};
    for (Perm8 p : elements) {
        if (contains(have, p)) continue;
        gens.push_back(p);
        have = group_closure(gens);
        if (have.size() == elements.size()) break;
    }
    return gens;
}

// Perfect subgroups seeding the classification (every non-perfect group is
// a prime-index normal extension of a smaller subgroup; perfect ones are
// not and must be planted explicitly). For degree <= 8 these are the
// alternating groups A5..A8 and the linear groups below, each placed on an
// initial segment of points; conjugacy canonicalization handles placement.
std::vector<std::vector<Perm8>> perfect_seeds(int n) {
    std::vector<std::vector<Perm8>> seeds;
    auto add = [&](std::vector<Perm8> gens, long long order) {
        auto closure = group_closure(gens);
        if ((long long)closure.size() != order)
            throw std::runtime_error("perfect seed has unexpected order");
        if (derived_subgroup(greedy_generators(closure)) != closure)
            throw std::runtime_error("perfect seed is not perfect");
        seeds.push_back(std::move(closure));
    };
    for (int k = 5; k <= n; ++k) {
        // A_k = <(0 1 2), long cycle> (cycle shifted by one point for even k).
        long long fact = 1;
        for (int i = 2; i <= k; ++i) fact *= i;
        std::vector<int> c(k % 2 == 1 ? k : k - 1);
        std::iota(c.begin(), c.end(), k % 2 == 1 ? 0 : 1);
        add({perm_from_cycles({{0, 1, 2}}), perm_from_cycles({c})}, fact / 2);
    }
    // PSL(2,q) on the projective line {0..q-1, infinity=q}: x -> x+1 and
    // x -> -1/x generate it.
    for (int q : {5, 7}) {
        if (q + 1 > n) continue;
        std::vector<int> shift(q + 1), inv(q + 1);
        for (int x = 0; x < q; ++x) shift[x] = (x + 1) % q;
        shift[q] = q;
        inv[0] = q;
        inv[q] = 0;
        for (int x = 1; x < q; ++x) {
            int xi = 1;
            while (xi * x % q != 1) ++xi;
            inv[x] = (q - xi) % q;
        }
        add({perm_from_images(shift), perm_from_images(inv)},
            q == 5 ? 60 : 168);
    }
    if (n >= 7) {
        // GL(3,2) acting on the 7 nonzero vectors of F2^3 (vector v encoded
        // as point v-1).
        auto mat_perm = [&](const int m[3][3]) {
            std::vector<int> img(7);
            for (int v = 1; v < 8; ++v) {
                int w = 0;
                for (int r = 0; r < 3; ++r) {
                    int bit = 0;
                    for (int c = 0; c < 3; ++c) bit ^= m[r][c] & (v >> c);
                    w |= (bit & 1) << r;
                }
                img[v - 1] = w - 1;
            }
            return perm_from_images(img);
        };
        const int cyc[3][3] = {{0, 0, 1}, {1, 0, 1}, {0, 1, 0}};  // order 7
        const int dia[3][3] = {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}};  // swap e1,e2
        add({mat_perm(cyc), mat_perm(dia)}, 168);
    }
    if (n >= 8) {
        // AGL(3,2) on all 8 vectors: GL(3,2) plus a translation.
        auto lift = [&](Perm8 p7) {
            std::vector<int> img(8);
            img[0] = 0;
            for (int v = 1; v < 8; ++v) img[v] = perm_apply(p7, v - 1) + 1;
            return perm_from_images(img);
        };
        const int cyc[3][3] = {{0, 0, 1}, {1, 0, 1}, {0, 1, 0}};
        const int dia[3][3] = {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}};
        auto mat_perm = [&](const int m[3][3]) {
            std::vector<int> img(7);
            for (int v = 1; v < 8; ++v) {
                int w = 0;
                for (int r = 0; r < 3; ++r) {
                    int bit = 0;
                    for (int c = 0; c < 3; ++c) bit ^= m[r][c] & (v >> c);
                    w |= (bit & 1) << r;
                }
                img[v - 1] = w - 1;
            }
            return perm_from_images(img);
        };
        std::vector<int> translate(8);
        for (int v = 0; v < 8; ++v) translate[v] = v ^ 1;
        add({lift(mat_perm(cyc)), lift(mat_perm(dia)),
             perm_from_images(translate)},
            1344);
    }
    return seeds;
}

}  // namespace

Perm8 perm_identity() { return kIdentity; }

Perm8 perm_from_images(const std::vector<int>& images) {
    Perm8 p = 0;
    for (int i = 0; i < 8; ++i) {
        int v = i < int(images.size()) ? images[i] : i;
        p |= Perm8(v) << (8 * i);
    }
    return p;
}

std::vector<int> perm_images(Perm8 p, int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = perm_apply(p, i);
    return img;
}

Perm8 perm_from_cycles(const std::vector<std::vector<int>>& cycles) {
    std::vector<int> img(8);
    std::iota(img.begin(), img.end(), 0);
    for (const auto& c : cycles)
        for (std::size_t i = 0; i < c.size(); ++i)
            img[c[i]] = c[(i + 1) % c.size()];
    return perm_from_images(img);
}

Perm8 perm_mul(Perm8 a, Perm8 b) {
    Perm8 r = 0;
    for (int i = 0; i < 8; ++i)
        r |= Perm8(perm_apply(a, perm_apply(b, i))) << (8 * i);
    return r;
}

Perm8 perm_inv(Perm8 p) {
    Perm8 r = 0;
    for (int i = 0; i < 8; ++i) r |= Perm8(i) << (8 * perm_apply(p, i));
    return r;
}

Perm8 perm_conj(Perm8 a, Perm8 h) { return perm_mul(perm_mul(a, h), perm_inv(a)); }

int perm_order(Perm8 p) {
    int k = 1;
    Perm8 q = p;
    while (q != kIdentity) {
        q = perm_mul(q, p);
        ++k;
    }
    return k;
}

std::string perm_cycle_string(Perm8 p, int n) {
    std::ostringstream out;
    std::vector<bool> seen(n, false);
    bool any = false;
    for (int i = 0; i < n; ++i) {
        if (seen[i] || perm_apply(p, i) == i) continue;
        any = true;
        out << '(';
        int j = i;
        bool first = true;
        do {
            seen[j] = true;
            out << (first ? "" : " ") << j + 1;
            first = false;
            j = perm_apply(p, j);
        } while (j != i);
        out << ')';
    }
    return any ? out.str() : "()";
}

Perm8 perm_parse_cycles(const std::string& text) {
    std::vector<std::vector<int>> cycles;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] != '(') { ++i; continue; }
        std::size_t close = text.find(')', i);
        if (close == std::string::npos)
            throw std::runtime_error("unbalanced cycle notation");
        std::istringstream body(text.substr(i + 1, close - i - 1));
        std::vector<int> cycle;
        int point;
        while (body >> point) cycle.push_back(point - 1);
        if (!cycle.empty()) cycles.push_back(cycle);
        i = close + 1;
    }
    return perm_from_cycles(cycles);
}

std::vector<Perm8> group_closure(const std::vector<Perm8>& gens) {
    std::set<Perm8> all{kIdentity};
    std::vector<Perm8> frontier{kIdentity};
    while (!frontier.empty()) {
        std::vector<Perm8> next;
        for (Perm8 p : frontier)
            for (Perm8 g : gens) {
                Perm8 q = perm_mul(g, p);
                if (all.insert(q).second) next.push_back(q);
            }
        frontier = std::move(next);
    }
    return std::vector<Perm8>(all.begin(), all.end());
}

long long group_order(const std::vector<Perm8>& gens) {
    return (long long)group_closure(gens).size();
}

std::vector<Perm8> normal_closure(const std::vector<Perm8>& sub_gens,
                                  const std::vector<Perm8>& group_gens) {
    std::vector<Perm8> gens = sub_gens;
    while (true) {
        std::vector<Perm8> current = group_closure(gens);
        bool grew = false;
        for (Perm8 g : group_gens)
            for (Perm8 h : gens) {
                Perm8 c = perm_conj(g, h);
                if (!contains(current, c)) {
                    gens.push_back(c);
                    grew = true;
                }
            }
        if (!grew) return current;
    }
}

std::vector<Perm8> derived_subgroup(const std::vector<Perm8>& gens) {
    std::vector<Perm8> comms;
    for (Perm8 a : gens)
        for (Perm8 b : gens)
            comms.push_back(perm_mul(perm_mul(a, b),
                                     perm_mul(perm_inv(a), perm_inv(b))));
    return normal_closure(comms, gens);
}

std::vector<Perm8> canonical_form(int n, const std::vector<Perm8>& elements) {
    // Orbit of the element set under conjugation by the Coxeter generators
    // of S_n; the orbit is the full conjugacy class of the subgroup.
    std::vector<Perm8> coxeter;
    for (int i = 0; i + 1 < n; ++i) coxeter.push_back(perm_from_cycles({{i, i + 1}}));
    std::vector<Perm8> start = elements;
    std::sort(start.begin(), start.end());
    std::set<std::vector<Perm8>> orbit{start};
    std::vector<std::vector<Perm8>> frontier{start};
    while (!frontier.empty()) {
        std::vector<std::vector<Perm8>> next;
        for (const auto& set : frontier)
            for (Perm8 g : coxeter) {
                std::vector<Perm8> img;
                img.reserve(set.size());
                for (Perm8 h : set) img.push_back(perm_conj(g, h));
                std::sort(img.begin(), img.end());
                if (orbit.insert(img).second) next.push_back(std::move(img));
            }
        frontier = std::move(next);
    }
    return *orbit.begin();
}

std::vector<SubgroupClass> classify_subgroups(int n) {
    if (n < 1 || n > 8) throw std::runtime_error("degree must be 1..8");
    const std::vector<Perm8> sym = all_perms(n);

    // canonical form -> elements; processed flag per class.
    std::map<std::vector<Perm8>, bool> classes;
    auto plant = [&](const std::vector<Perm8>& elements) {
        classes.emplace(canonical_form(n, elements), false);
    };
    plant({kIdentity});
    for (const auto& seed : perfect_seeds(n)) plant(seed);

    // Cyclic-extension sweep: grow every class by prime-index normal
    // extensions inside its normalizer until nothing new appears.
    while (true) {
        std::vector<std::vector<Perm8>> todo;
        for (auto& [elems, done] : classes)
            if (!done) {
                todo.push_back(elems);
                done = true;
            }
        if (todo.empty()) break;
        for (const auto& h : todo) {
            std::vector<Perm8> gens = greedy_generators(h);
            std::vector<std::vector<Perm8>> candidates;
            for (Perm8 g : sym) {
                if (contains(h, g)) continue;
                // If g lies in an extension already built, <h,g> is that
                // extension (prime index leaves no room in between).
                bool covered = false;
                for (const auto& c : candidates)
                    if (contains(c, g)) { covered = true; break; }
                if (covered) continue;
                bool normalizes = true;
                for (Perm8 x : gens)
                    if (!contains(h, perm_conj(g, x))) { normalizes = false; break; }
                if (!normalizes) continue;
                for (int p : {2, 3, 5, 7}) {
                    Perm8 gp = g;
                    for (int i = 1; i < p; ++i) gp = perm_mul(gp, g);
                    if (!contains(h, gp)) continue;
                    candidates.push_back(coset_extension(h, g, p));
                    break;  // g has order p modulo h; no other prime applies
                }
            }
            for (const auto& cand : candidates)
                classes.emplace(canonical_form(n, cand), false);
        }
    }

    std::vector<SubgroupClass> out;
    for (const auto& [elems, done] : classes) {
        SubgroupClass c;
        c.order = (long long)elems.size();
        c.elements = elems;
        c.generators = greedy_generators(elems);
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
        if (a.order != b.order) return a.order < b.order;
        return a.elements < b.elements;
    });
    for (std::size_t i = 0; i < out.size(); ++i) out[i].id = int(i + 1);
    return out;
}

std::string export_classes(const std::vector<SubgroupClass>& classes, int n) {
    std::ostringstream out;
    for (const auto& c : classes) {
        out << c.id << ' ' << c.order;
        for (Perm8 g : c.generators) out << ' ' << perm_cycle_string(g, n);
        if (c.generators.empty()) out << " ()";
        out << '\n';
    }
    return out.str();
}

}  // namespace cr
