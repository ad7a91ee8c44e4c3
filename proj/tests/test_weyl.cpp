#include "doctest.h"

#include <random>
#include <sstream>

#include "cr/weyl.hpp"

using namespace cr;

namespace {
const LabeledRootSystem& e6() {
    static LabeledRootSystem s =
        LabeledRootSystem::build(DiagramType::E6, 0, LabelTable::E6);
    return s;
}

// The two words from the rank-6 case-4 construction, chain letters 0-based.
const std::vector<int> kWord1{0, 1, 2, 1, 0, 1, 2, 1, 2, 3, 4, 3, 2, 4};
const std::vector<int> kWord2{0, 1, 2, 3, 2, 1, 0, 1, 3, 4, 3};

std::map<int, int> cycles_to_map(const std::string& text,
                                 const std::vector<int>& domain) {
    Perm8 unused;
    (void)unused;
    std::map<int, int> out;
    for (int d : domain) out[d] = d;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] != '(') { ++i; continue; }
        std::size_t close = text.find(')', i);
        std::istringstream body(text.substr(i + 1, close - i - 1));
        std::vector<int> cyc;
        int p;
        while (body >> p) cyc.push_back(p);
        for (std::size_t k = 0; k < cyc.size(); ++k)
            out[cyc[k]] = cyc[(k + 1) % cyc.size()];
        i = close + 1;
    }
    return out;
}
}  // namespace

TEST_CASE("simple reflections are involutions and words compose") {
    const auto* s = &e6();
    CHECK(WeylElement::from_word(s, {}).is_identity());
    for (int i = 0; i < 6; ++i) {
        WeylElement r = WeylElement::simple_reflection(s, i);
        CHECK((r * r).is_identity());
    }
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<int> u, v;
        for (int i = 0; i < 6; ++i) u.push_back(int(rng() % 6));
        for (int i = 0; i < 4; ++i) v.push_back(int(rng() % 6));
        std::vector<int> uv = u;
        uv.insert(uv.end(), v.begin(), v.end());
        CHECK(WeylElement::from_word(s, uv) ==
              WeylElement::from_word(s, u) * WeylElement::from_word(s, v));
    }
}

TEST_CASE("Weyl elements respect root addition") {
    const auto* s = &e6();
    WeylElement w = WeylElement::from_word(s, kWord1);
    for (int i : s->radical_labels())
        for (int j : s->radical_labels()) {
            auto k = s->sum_label(i, j);
            if (!k) continue;
            Root sum = w.apply_root(s->root_of_label(i));
            const Root other = w.apply_root(s->root_of_label(j));
            for (int c = 0; c < 6; ++c) sum[c] += other[c];
            CHECK(sum == w.apply_root(s->root_of_label(*k)));
        }
}

TEST_CASE("the case-4 words restrict to the published label cycles") {
    const auto* s = &e6();
    std::vector<int> domain;
    for (int i = 1; i <= 21; ++i) domain.push_back(i);
    auto pi1 = restriction(levi_word_element(s, kWord1), domain);
    auto pi2 = restriction(levi_word_element(s, kWord2), domain);
    CHECK(pi1 == cycles_to_map("(1 5 4)(2 3 6)(9 12 10)(11 13 14)(15 16 17)(18 20 19)",
                               domain));
    CHECK(pi2 == cycles_to_map("(1 2)(3 4)(5 6)(7 8)(9 14)(10 11)(12 13)(15 18)(16 19)(17 20)",
                               domain));
    CHECK(pi2[21] == 21);
}

TEST_CASE("case-4 orbits") {
    const auto* s = &e6();
    std::vector<int> domain;
    for (int i = 1; i <= 21; ++i) domain.push_back(i);
    auto parts = orbits({levi_word_element(s, kWord1), levi_word_element(s, kWord2)},
                        domain);
    std::vector<std::vector<int>> expect{{1, 2, 3, 4, 5, 6},
                                         {7, 8},
                                         {9, 10, 11, 12, 13, 14},
                                         {15, 16, 17, 18, 19, 20},
                                         {21}};
    CHECK(parts == expect);
    // Identity generators: all singletons.
    CHECK(orbits({WeylElement::identity(s)}, domain).size() == 21);
}

TEST_CASE("letter permutations match the published generators of case 4") {
    const auto* s = &e6();
    CHECK(levi_permutation_of(levi_word_element(s, kWord1)) ==
          perm_parse_cycles("(1 4 2)(3 6 5)"));
    CHECK(levi_permutation_of(levi_word_element(s, kWord2)) ==
          perm_parse_cycles("(1 5)(2 3)(4 6)"));
    // Synthesis inverts the identification on random permutations.
    std::mt19937 rng(11);
    std::vector<int> img{0, 1, 2, 3, 4, 5};
    for (int trial = 0; trial < 30; ++trial) {
        std::shuffle(img.begin(), img.end(), rng);
        Perm8 p = perm_from_images(img);
        CHECK(levi_permutation_of(weyl_from_levi_permutation(s, p)) == p);
    }
    // The sigma node is rejected in Levi words.
    CHECK_THROWS_AS(levi_word_element(s, {5}), RootError);
}

TEST_CASE("rank-7 case-2 words give a single orbit on the labeled roots") {
    auto e7 = LabeledRootSystem::build(DiagramType::E7, 0, LabelTable::E7Case2);
    std::vector<int> q1{4, 2, 0};
    std::vector<int> q2{0, 2, 0, 1, 2, 0, 1, 2, 5, 4, 3, 2, 1};
    std::vector<int> domain;
    for (int i = 1; i <= 14; ++i) domain.push_back(i);
    auto parts = orbits({levi_word_element(&e7, q1), levi_word_element(&e7, q2)},
                        domain);
    REQUIRE(parts.size() == 1);
    CHECK(parts[0].size() == 14);
}

TEST_CASE("full Weyl group sizes") {
    auto a2 = LabeledRootSystem::build(DiagramType::A, 2);
    CHECK(enumerate_weyl(&a2).size() == 6);
    auto d4 = LabeledRootSystem::build(DiagramType::D, 4);
    CHECK(enumerate_weyl(&d4).size() == 192);
    CHECK(enumerate_weyl(&e6()).size() == 51840);
}
