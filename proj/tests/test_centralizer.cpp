#include <doctest.h>

#include <algorithm>
#include <random>

#include "cr/centralizer.hpp"

using namespace cr;

namespace {

const LabeledRootSystem& e6() {
    static LabeledRootSystem s =
        LabeledRootSystem::build(DiagramType::E6, 0, LabelTable::E6);
    return s;
}

const GF2m& gf4() {
    static GF2m F(2);
    return F;
}

/// The two Weyl-group words of the order-6 example subgroup.
WeylElement q1() {
    return levi_word_element(&e6(), {0, 1, 2, 1, 0, 1, 2, 1, 2, 3, 4, 3, 2, 4});
}
WeylElement q2() {
    return levi_word_element(&e6(), {0, 1, 2, 3, 2, 1, 0, 1, 3, 4, 3});
}

/// t = (alpha + epsilon)-coroot(b) for a generator b of GF(4).
TorusElement case4_torus() {
    const auto& s = e6();
    const GF2m& F = gf4();
    return TorusElement::coroot(&s, &F, s.simple(0), F.generator()) *
           TorusElement::coroot(&s, &F, s.simple(4), F.generator());
}

/// K' = the Weyl-part subgroup; the published centralizer shape and the
/// dimension pair (5, 4) are computed against it.
std::vector<GroupElement> case4_kprime() {
    const auto& s = e6();
    const GF2m& F = gf4();
    return {GroupElement{q1(), TorusElement::identity(&s, &F), {}},
            GroupElement{q2(), TorusElement::identity(&s, &F), {}}};
}

/// K = K' extended by the torus element (the G-cr representative).
std::vector<GroupElement> case4_gens() {
    auto gens = case4_kprime();
    gens.push_back(GroupElement{WeylElement::identity(&e6()), case4_torus(), {}});
    return gens;
}

}  // namespace

TEST_CASE("trivial subgroup: empty system, full 21-dimensional centralizer") {
    const auto& s = e6();
    const GF2m& F = gf4();
    std::vector<GroupElement> gens{group_identity(&s, &F)};
    PolySystem ps = centralizer_system(&s, &F, gens);
    CHECK(ps.equations.empty());
    CHECK(ps.variables.size() == 21);
    GroupSolution sol = group_centralizer_dim(&s, &F, gens);
    CHECK(sol.dim == 21);
    CHECK(sol.method == "square-reduction");
    auto [basis, ldim] = lie_centralizer(&s, &F, gens);
    CHECK(ldim == 21);
    SeparabilityReport rep = separability_report("trivial", &s, &F, gens);
    CHECK_FALSE(rep.non_separable);
}

TEST_CASE("torus-only subgroup gives a purely linear diagonal system") {
    const auto& s = e6();
    const GF2m& F = gf4();
    std::vector<GroupElement> gens{
        GroupElement{WeylElement::identity(&s), case4_torus(), {}}};
    PolySystem ps = centralizer_system(&s, &F, gens);
    int fixed = 0;
    for (const MPoly& eq : ps.equations) CHECK(eq.is_linear());
    for (int label : s.radical_labels())
        if (case4_torus().eval(s.root_of_label(label)) == 1) ++fixed;
    GroupSolution sol = group_centralizer_dim(&s, &F, gens);
    CHECK(sol.dim == fixed);
    CHECK(lie_centralizer(&s, &F, gens).second == fixed);
}

TEST_CASE("square reduction examples") {
    const auto& s = e6();
    const GF2m& F = gf4();
    auto var = [&](int v) { return MPoly::variable(&F, v); };
    PolySystem ps;
    ps.sys = &s;
    ps.F = &F;
    ps.variables = {1, 2, 3, 4};
    MPoly sum_sq = var(1).square() + var(2).square() + var(3).square() + var(4).square();
    MPoly linear = var(1) + var(2);
    const std::uint32_t c = F.generator();
    MPoly mixed = var(1).square() + var(2).square() * c;
    ps.equations = {sum_sq, linear, mixed};
    PolySystem red = square_reduce(ps);
    CHECK(red.equations[0] == var(1) + var(2) + var(3) + var(4));
    CHECK(red.equations[1] == linear);
    CHECK(red.equations[2] == var(1) + var(2) * F.sqrt(c));
}

TEST_CASE("square reduction preserves solution sets (exhaustive, small systems)") {
    std::mt19937 rng(5);
    auto check_field = [&](const GF2m& F, int vars, int systems, int polys) {
        std::uniform_int_distribution<std::uint32_t> coeff(0, F.size() - 1);
        std::uniform_int_distribution<int> pick(0, vars - 1);
        std::uniform_int_distribution<int> which(0, 2);
        for (int it = 0; it < systems; ++it) {
            std::vector<MPoly> eqs;
            for (int e = 0; e < polys; ++e) {
                // Bias toward squares so the reduction actually triggers.
                MPoly p(&F);
                for (int t = 0; t < 3; ++t) {
                    MPoly term = MPoly::constant(&F, coeff(rng));
                    term = term * MPoly::variable(&F, pick(rng));
                    if (which(rng)) term = term * MPoly::variable(&F, pick(rng));
                    p = p + term;
                }
                if (which(rng) == 0) p = p.square();
                eqs.push_back(p);
            }
            std::vector<MPoly> red;
            for (MPoly p : eqs) {
                while (!p.is_zero() && p.is_square()) p = p.sqrt();
                red.push_back(p);
            }
            std::vector<int> ids(vars);
            for (int i = 0; i < vars; ++i) ids[i] = i;
            CHECK(count_points(eqs, ids, F, F) == count_points(red, ids, F, F));
        }
    };
    check_field(GF2m(1), 10, 20, 2);
    check_field(GF2m(2), 3, 60, 2);
}

TEST_CASE("field embeddings are ring homomorphisms") {
    GF2m F4(2), F16(4), F64(6);
    for (const GF2m* to : {&F16, &F64}) {
        for (std::uint32_t a = 0; a < 4; ++a) {
            for (std::uint32_t b = 0; b < 4; ++b) {
                CHECK(embed_field(F4, *to, F4.add(a, b)) ==
                      to->add(embed_field(F4, *to, a), embed_field(F4, *to, b)));
                CHECK(embed_field(F4, *to, F4.mul(a, b)) ==
                      to->mul(embed_field(F4, *to, a), embed_field(F4, *to, b)));
            }
        }
        CHECK(embed_field(F4, *to, 1) == 1);
    }
}

TEST_CASE("point counting over extensions") {
    GF2m F4(2), F16(4);
    MPoly x = MPoly::variable(&F4, 0);
    MPoly y = MPoly::variable(&F4, 1);
    CHECK(count_points({x}, {0, 1}, F4, F16) == 16);
    CHECK(count_points({x * y + MPoly::constant(&F4, 1)}, {0, 1}, F4, F16) == 15);
    CHECK(count_points({}, {0, 1}, F4, F4) == 16);
}

TEST_CASE("order-6 example subgroup: the published centralizer shape") {
    const auto& s = e6();
    const GF2m& F = gf4();
    auto gens = case4_kprime();

    // Orbits of the two Weyl words on the radical labels.
    auto orbit_list = orbits({q1(), q2()}, s.radical_labels());
    REQUIRE(orbit_list.size() == 5);
    CHECK(orbit_list[0] == std::vector<int>{1, 2, 3, 4, 5, 6});
    CHECK(orbit_list[1] == std::vector<int>{7, 8});
    CHECK(orbit_list[2] == std::vector<int>{9, 10, 11, 12, 13, 14});
    CHECK(orbit_list[3] == std::vector<int>{15, 16, 17, 18, 19, 20});
    CHECK(orbit_list[4] == std::vector<int>{21});

    GroupSolution sol = group_centralizer_dim(&s, &F, gens);
    CHECK(sol.dim == 4);
    CHECK(sol.method == "square-reduction");
    // Free parameters: one orbit constant for three of the four moving
    // orbits, plus the central coordinate; the fourth constant is the sum of
    // the other three (the characteristic-2 square root of the quadratic
    // condition).
    REQUIRE(sol.free_vars.size() == 4);
    CHECK(std::count(sol.free_vars.begin(), sol.free_vars.end(), 21) == 1);
    // Coordinates are constant on each orbit.
    std::map<int, int> rep_of;
    for (const auto& orbit : orbit_list)
        for (int l : orbit) rep_of[l] = orbit[0];
    // Sample concrete solutions from the parameterization and verify each is
    // centralized by every generator.
    std::mt19937 rng(9);
    std::uniform_int_distribution<std::uint32_t> coeff(0, F.size() - 1);
    for (int it = 0; it < 25; ++it) {
        std::map<int, std::uint32_t> point;
        for (int v : sol.free_vars) point[v] = coeff(rng);
        for (const auto& [v, expr] : sol.dependent) point[v] = expr.eval(point);
        // Orbit-constant shape with the sum constraint.
        for (int label : s.radical_labels())
            CHECK(point.at(label) == point.at(rep_of.at(label)));
        CHECK(F.add(F.add(point.at(1), point.at(7)),
                    F.add(point.at(9), point.at(15))) == 0);
        std::vector<std::pair<int, MPoly>> factors;
        for (int label : s.radical_labels())
            if (point.at(label) != 0)
                factors.emplace_back(label, MPoly::constant(&F, point.at(label)));
        UnipotentElement u = collect(&s, factors);
        for (const GroupElement& g : gens) CHECK(conjugate(g, u) == u);
    }
}

TEST_CASE("order-6 example subgroup: infinitesimal centralizer and the gap") {
    const auto& s = e6();
    const GF2m& F = gf4();
    auto gens = case4_kprime();
    auto [basis, ldim] = lie_centralizer(&s, &F, gens);
    CHECK(ldim == 5);
    // e_7 + e_8 lies in the infinitesimal centralizer of the full K (the
    // torus element acts trivially on it)...
    LieVector witness{{7, 1}, {8, 1}};
    for (const GroupElement& g : case4_gens()) CHECK(ad_action(g, witness) == witness);
    // ...but eps_7(a) eps_8(a) is not centralized by the group (a != 0).
    UnipotentElement v = collect(&s, {{7, MPoly::constant(&F, 1)},
                                      {8, MPoly::constant(&F, 1)}});
    bool all_fixed = true;
    for (const GroupElement& g : gens)
        if (conjugate(g, v) != v) all_fixed = false;
    CHECK_FALSE(all_fixed);

    SeparabilityReport rep = separability_report("case-4", &s, &F, gens);
    CHECK(rep.tangent_dim == 5);
    CHECK(rep.group_dim == 4);
    CHECK(rep.non_separable);
}

TEST_CASE("tangent space equals the degree-1 truncation of the full system") {
    const auto& s = e6();
    const GF2m& F = gf4();
    auto gens = case4_gens();  // full K, torus included
    PolySystem ps = centralizer_system(&s, &F, gens);
    PolySystem lin = ps;
    for (MPoly& eq : lin.equations) eq = eq.linear_part();
    GroupSolution sol = solve_system(lin);
    CHECK(sol.dim == lie_centralizer(&s, &F, gens).second);
}

TEST_CASE("certificate for the order-6 example subgroup") {
    const auto& s = e6();
    auto cert = find_certificate(&s, {q1(), q2()});
    REQUIRE(cert.has_value());
    CHECK(cert->first == 7);
    CHECK(cert->second == 8);
    CHECK(cert->correction == 21);
    CHECK(cert->orbit == std::vector<int>{7, 8});
}

TEST_CASE("full scan over the degree-6 subgroup classes hits the published 11") {
    const auto& s = e6();
    const GF2m& F = gf4();
    auto classes = classify_subgroups(6);
    REQUIRE(classes.size() == 56);
    auto rows = certificate_scan(&s, &F, classes, 4);
    std::vector<std::uint64_t> hit_orders;
    for (const ScanRow& row : rows) {
        CHECK(row.non_separable == bool(row.certificate));
        if (row.non_separable) hit_orders.push_back(row.group_order);
    }
    std::sort(hit_orders.begin(), hit_orders.end());
    CHECK(hit_orders == std::vector<std::uint64_t>{2, 4, 4, 6, 6, 8, 12, 18, 36, 36, 72});
}
