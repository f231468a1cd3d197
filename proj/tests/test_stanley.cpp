#include <doctest.h>

#include "support/build.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"
#include "symdepth/errors.hpp"
#include "symdepth/stanley.hpp"

using namespace symdepth;
using namespace symdepth::testing;

namespace {

using Points = std::vector<std::vector<int>>;

std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs_of(const IntervalPartition& p) {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
    for (const auto& iv : p.intervals) out.emplace_back(iv.a, iv.b);
    return out;
}

// Checks the witness against an independent scan of the box.
void check_result(const MonomialIdeal& I, const SdepthResult& r) {
    if (!r.value) {
        CHECK_FALSE(r.witness.has_value());
        return;
    }
    REQUIRE(r.witness.has_value());
    const auto points = oracle::poset_points(I, r.g, r.kind == ModuleKind::ideal);
    CHECK(oracle::partitions_points(points, pairs_of(*r.witness)));
    int value = static_cast<int>(r.g.size());
    for (const auto& iv : r.witness->intervals) value = std::min(value, oracle::rank_of_top(iv.b, r.g));
    CHECK(value == *r.value);
}

std::vector<MonomialIdeal> small_powers(int count, std::uint64_t seed, int max_n, int kmax) {
    std::vector<MonomialIdeal> out;
    for (const auto& I : squarefree_corpus(count, seed, max_n))
        for (int k = 1; k <= kmax; ++k) out.push_back(symbolic_power(I, k));
    return out;
}

}  // namespace

TEST_CASE("characteristic posets") {
    auto P = characteristic_poset(triangle(), ModuleKind::ideal);
    CHECK(P.g == std::vector<int>{1, 1, 1});
    CHECK(P.points == Points{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}, {1, 1, 1}});
    P = characteristic_poset(triangle(), ModuleKind::quotient);
    CHECK(P.points == Points{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
    P = characteristic_poset(ideal(1, {"x1"}), ModuleKind::ideal);
    CHECK(P.g == std::vector<int>{1});
    CHECK(P.points == Points{{1}});
    CHECK_THROWS_AS(characteristic_poset(MonomialIdeal::zero(2), ModuleKind::ideal), InputError);
    CHECK_THROWS_AS(characteristic_poset(MonomialIdeal::unit(2), ModuleKind::quotient), InputError);
    CHECK_THROWS_AS(characteristic_poset(triangle(), ModuleKind::ideal, std::vector<int>{1, 0, 1}), InputError);
}

TEST_CASE("decision search on the triangle quotient") {
    const auto P = characteristic_poset(triangle(), ModuleKind::quotient);
    const auto one = sdepth_at_least(P, 1);
    REQUIRE(one.has_value());
    CHECK(verify_partition(P, *one));
    CHECK(one->intervals.size() == 3);
    CHECK(partition_value(*one, P.g) == 1);
    // The bottom must be paired with one atom; the other two atoms stay singletons.
    const bool bottom_paired = std::any_of(one->intervals.begin(), one->intervals.end(), [](const Interval& iv) {
        return iv.a == std::vector<int>{0, 0, 0} && iv.b != iv.a;
    });
    CHECK(bottom_paired);
    CHECK_FALSE(sdepth_at_least(P, 2).has_value());
    const auto ideal_poset = characteristic_poset(symbolic_power(triangle(), 2), ModuleKind::ideal);
    CHECK(sdepth_at_least(ideal_poset, 0).has_value());
}

TEST_CASE("Stanley depth goldens") {
    auto r = sdepth(triangle(), ModuleKind::ideal);
    CHECK(r.value == 2);
    check_result(triangle(), r);
    r = sdepth(triangle(), ModuleKind::quotient);
    CHECK(r.value == 1);
    check_result(triangle(), r);
    r = sdepth(maximal_ideal(3), ModuleKind::quotient);
    CHECK(r.value == 0);
    check_result(maximal_ideal(3), r);
    r = sdepth(MonomialIdeal::zero(3), ModuleKind::ideal);
    CHECK(r.is_infinite());
    CHECK_FALSE(r.witness.has_value());
    r = sdepth(MonomialIdeal::zero(3), ModuleKind::quotient);
    CHECK(r.value == 3);
    check_result(MonomialIdeal::zero(3), r);
    CHECK(sdepth(MonomialIdeal::unit(2), ModuleKind::quotient).is_infinite());
    CHECK(sdepth(MonomialIdeal::unit(2), ModuleKind::ideal).value == 2);
}

TEST_CASE("budget exhaustion is an error") {
    const auto I = symbolic_power(ideal(4, {"x1*x2", "x2*x3", "x3*x4", "x1*x4"}), 3);
    CHECK_THROWS_AS(sdepth(I, ModuleKind::ideal, StanleyOptions{10, 0}), BudgetExceeded);
}

TEST_CASE("Stanley depth JSON") {
    const auto r = sdepth(triangle(), ModuleKind::ideal);
    const auto j = sdepth_to_json(r);
    CHECK(j["kind"] == "ideal");
    CHECK(j["value"] == 2);
    CHECK(j["g"].dump() == "[1,1,1]");
    CHECK(sdepth_from_json(j) == r);
    const auto inf = sdepth(MonomialIdeal::zero(2), ModuleKind::ideal);
    CHECK(sdepth_to_json(inf)["value"] == "infinity");
    CHECK(sdepth_from_json(sdepth_to_json(inf)) == inf);
}

TEST_CASE("splitting by a variable") {
    auto s = split_by_variable(triangle(), 0);
    CHECK(s.restriction == ideal(2, {"x1*x2"}));
    CHECK(s.colon_part == ideal(3, {"x2", "x3"}));
    s = split_by_variable(ideal(3, {"x1*x2*x3"}), 0);
    CHECK(s.restriction.is_zero());
    CHECK(s.restriction.n() == 2);
    CHECK(s.colon_part == ideal(3, {"x2*x3"}));
    s = split_by_variable(ideal(3, {"x2*x3"}), 0);
    CHECK(s.restriction == ideal(2, {"x1*x2"}));
    CHECK(s.colon_part == ideal(3, {"x2*x3"}));
    CHECK_THROWS_AS(split_by_variable(MonomialIdeal::zero(2), 0), InputError);
}

TEST_CASE("Stanley spaces") {
    CHECK(in_stanley_space(mono({1, 0, 0}), vset({2}), mono({1, 2, 0})));
    CHECK_FALSE(in_stanley_space(mono({1, 0, 0}), vset({2}), mono({1, 2, 1})));
    CHECK_FALSE(in_stanley_space(mono({1, 0, 0}), vset({2}), mono({0, 2, 0})));
}

TEST_CASE("property: exact value and sound witness on small powers") {
    for (const auto& I : small_powers(40, 51, 3, 3)) {
        for (ModuleKind kind : {ModuleKind::ideal, ModuleKind::quotient}) {
            const auto r = sdepth(I, kind);
            check_result(I, r);
            const auto points = oracle::poset_points(I, r.g, kind == ModuleKind::ideal);
            if (points.size() <= 14) CHECK(r.value == oracle::best_partition_value(points, r.g));
        }
    }
}

TEST_CASE("property: witnesses cover the poset on the n <= 4 corpus") {
    for (const auto& I : small_powers(60, 52, 4, 2)) {
        for (ModuleKind kind : {ModuleKind::ideal, ModuleKind::quotient}) check_result(I, sdepth(I, kind));
    }
}

TEST_CASE("property: feasibility is monotone in s") {
    for (const auto& I : small_powers(30, 53, 4, 2)) {
        for (ModuleKind kind : {ModuleKind::ideal, ModuleKind::quotient}) {
            const auto P = characteristic_poset(I, kind);
            bool previous = true;
            for (int s = 0; s <= I.n(); ++s) {
                const bool feasible = sdepth_at_least(P, s).has_value();
                if (feasible) CHECK(previous);
                previous = feasible;
            }
        }
    }
}

TEST_CASE("property: Stanley spaces transfer along u -> u^(k+1)") {
    Draw draw(54);
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = draw.between(1, 5);
        std::vector<int> a(n), b(n);
        for (int j = 0; j < n; ++j) {
            a[j] = draw.below(3);
            b[j] = draw.below(4);
        }
        const Monomial u(a), v(b);
        const VarSet Z = static_cast<VarSet>(draw.below(1 << n));
        const int k = draw.between(1, 3);
        const bool direct = u.divides(v) && is_subset((v / u).support(), Z);
        CHECK(in_stanley_space(u, Z, v) == direct);
        CHECK(in_stanley_space(u.pow(k + 1), Z, v.pow(k + 1)) == in_stanley_space(u, Z, v));
    }
}

TEST_CASE("property: splitting bound") {
    for (const auto& I : small_powers(30, 55, 4, 2)) {
        const auto whole = sdepth(I, ModuleKind::ideal).value;
        for (int i = 0; i < I.n(); ++i) {
            const auto s = split_by_variable(I, i);
            const auto r = sdepth(s.restriction, ModuleKind::ideal).value;
            const auto c = sdepth(s.colon_part, ModuleKind::ideal).value;
            const std::optional<int> bound = !r ? c : !c ? r : std::optional<int>(std::min(*r, *c));
            if (bound) {
                REQUIRE(whole.has_value());
                CHECK(*whole >= *bound);
            }
        }
    }
}

TEST_CASE("property: colon by a variable product does not lower Stanley depth") {
    Draw draw(56);
    for (const auto& I : small_powers(40, 57, 4, 2)) {
        const VarSet s = static_cast<VarSet>(draw.below(1 << I.n()));
        const auto quotient = colon(I, Monomial::squarefree(I.n(), s));
        const auto before = sdepth(I, ModuleKind::ideal).value;
        const auto after = sdepth(quotient, ModuleKind::ideal).value;
        REQUIRE(before.has_value());
        REQUIRE(after.has_value());
        CHECK(*after >= *before);
    }
}

TEST_CASE("property: enlarging g by one in a coordinate keeps the value") {
    for (const auto& I : small_powers(25, 58, 3, 2)) {
        for (ModuleKind kind : {ModuleKind::ideal, ModuleKind::quotient}) {
            const auto base = sdepth_on_poset(characteristic_poset(I, kind));
            for (int j = 0; j < I.n(); ++j) {
                auto g = base.g;
                ++g[j];
                const auto bigger = sdepth_on_poset(characteristic_poset(I, kind, g));
                CHECK(bigger.value == base.value);
            }
        }
    }
}
