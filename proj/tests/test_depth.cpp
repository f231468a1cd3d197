#include <doctest.h>

#include "support/build.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"
#include "symdepth/betti.hpp"
#include "symdepth/depth.hpp"
#include "symdepth/errors.hpp"
#include "symdepth/takayama.hpp"

using namespace symdepth;
using namespace symdepth::testing;

namespace {

std::vector<VarSet> sorted(std::vector<VarSet> v) {
    std::sort(v.begin(), v.end());
    return v;
}

// Corpus ideals together with their symbolic powers up to kmax.
std::vector<MonomialIdeal> corpus_with_powers(int count, std::uint64_t seed, int max_n, int kmax) {
    std::vector<MonomialIdeal> out;
    for (const auto& I : squarefree_corpus(count, seed, max_n))
        for (int k = 1; k <= kmax; ++k) out.push_back(symbolic_power(I, k));
    return out;
}

std::vector<int> max_degrees_of(const MonomialIdeal& I) {
    std::vector<int> rho(I.n(), 0);
    for (const auto& g : I.generators())
        for (int j = 0; j < I.n(); ++j) rho[j] = std::max(rho[j], g[j]);
    return rho;
}

}  // namespace

TEST_CASE("Takayama complexes of (x1x2)") {
    const auto I = ideal(2, {"x1*x2"});
    const auto two_points = takayama_complex(I, DegreePair::make({0, 0}, 0));
    CHECK(two_points == cx(2, {{1}, {2}}));
    CHECK(reduced_homology(two_points).at(0) == 1);
    CHECK(takayama_complex(I, DegreePair::make({1, 1}, 0)).is_void());
    CHECK(takayama_complex(I, DegreePair::make({0, 0}, vset({1}))) == SimplicialComplex::empty_complex(2));
    CHECK_THROWS_AS(DegreePair::make({1, 0}, vset({1})), InputError);
    CHECK_THROWS_AS(DegreePair::make({-1, 0}, 0), InputError);
}

TEST_CASE("Takayama faces match the literal localization test") {
    const auto T2 = symbolic_power(triangle(), 2);
    oracle::for_each_in_box({2, 2, 2}, [&](const std::vector<int>& a) {
        VarSet support = 0;
        for (int j = 0; j < 3; ++j)
            if (a[j]) support |= VarSet{1} << j;
        const VarSet free = full_set(3) & ~support;
        for (VarSet c = free;; c = (c - 1) & free) {
            CHECK(sorted(takayama_faces(T2, a, c)) == oracle::degree_complex_faces(T2, a, c));
            if (c == 0) break;
        }
    });
}

TEST_CASE("upper Koszul complexes") {
    const auto I = ideal(2, {"x1*x2"});
    CHECK(upper_koszul_complex(I, {1, 1}) == SimplicialComplex::empty_complex(2));
    const auto T = triangle();
    for (const auto& g : T.generators()) {
        const std::vector<int> alpha(g.exponents().begin(), g.exponents().end());
        CHECK(reduced_homology(upper_koszul_complex(T, alpha)).at(-1) == 1);
    }
    CHECK(upper_koszul_complex(MonomialIdeal::unit(2), {0, 0}) == SimplicialComplex::empty_complex(2));
    CHECK_THROWS_AS(upper_koszul_complex(I, {2, 1}), InputError);
}

TEST_CASE("Betti tables") {
    auto totals = [](const MonomialIdeal& I) {
        const auto t = betti_table(I);
        std::vector<long> out;
        for (int i = 0; i <= t.projective_dimension(); ++i) out.push_back(t.total(i));
        return out;
    };
    CHECK(totals(triangle()) == std::vector<long>{1, 3, 2});
    CHECK(totals(ideal(2, {"x1*x2"})) == std::vector<long>{1, 1});
    CHECK(totals(maximal_ideal(2)) == std::vector<long>{1, 2, 1});
    CHECK(betti_table(triangle()).at(0, {0, 0, 0}) == 1);
    CHECK(betti_table(triangle()).at(2, {1, 1, 1}) == 2);
    CHECK(totals(MonomialIdeal::zero(3)) == std::vector<long>{1});
    CHECK_THROWS_AS(betti_table(MonomialIdeal::unit(2)), InputError);
}

TEST_CASE("depth via Takayama") {
    const auto w = depth_via_takayama(ideal(2, {"x1*x2"}));
    CHECK(w.depth == 1);
    REQUIRE(w.takayama);
    CHECK(w.takayama->degree.alpha_plus == std::vector<int>{0, 0});
    CHECK(w.takayama->degree.cosupport == 0);
    CHECK(w.takayama->homology_index == 0);
    const auto m = depth_via_takayama(maximal_ideal(3));
    CHECK(m.depth == 0);
    CHECK(m.takayama->degree.alpha_plus == std::vector<int>{0, 0, 0});
    CHECK(m.takayama->degree.cosupport == 0);
    CHECK(takayama_complex(maximal_ideal(3), m.takayama->degree) == SimplicialComplex::empty_complex(3));
    CHECK(depth_via_takayama(triangle()).depth == 1);
    CHECK(depth_via_takayama(MonomialIdeal::zero(4)).depth == 4);
    CHECK_THROWS_AS(depth_via_takayama(MonomialIdeal::unit(2)), InputError);
}

TEST_CASE("depth via Betti numbers") {
    CHECK(depth_via_betti(triangle()).depth == 1);
    CHECK(depth_via_betti(maximal_ideal(4)).depth == 0);
    CHECK(depth_via_betti(MonomialIdeal::zero(3)).depth == 3);
    CHECK_THROWS_AS(depth_via_betti(MonomialIdeal::unit(2)), InputError);
}

TEST_CASE("cross-checked depth") {
    CHECK(depth(triangle()).depth == 1);
    CHECK(depth(symbolic_power(triangle(), 2)).depth == 1);
    const auto P = ideal(2, {"x1*x2"});
    for (int k = 1; k <= 5; ++k) CHECK(depth(ordinary_power(P, k)).depth == 1);
    const auto w = depth(triangle(), DepthEngine::cross_check);
    CHECK(w.engine == DepthEngine::cross_check);
    CHECK(w.takayama.has_value());
    CHECK(w.betti.has_value());
    CHECK(parse_engine("cross-check") == DepthEngine::cross_check);
    CHECK_THROWS_AS(parse_engine("magic"), InputError);
}

TEST_CASE("witness JSON") {
    const auto w = depth(ideal(2, {"x1*x2"}), DepthEngine::takayama);
    CHECK(witness_to_json(w).dump() ==
          R"({"depth":1,"engine":"takayama","alpha_plus":[0,0],"cosupport":[],"homology_index":0,"char":0})");
    CHECK(witness_from_json(witness_to_json(w)) == w);
    const auto both = depth(triangle(), DepthEngine::cross_check, DepthOptions{Field::prime(2)});
    CHECK(witness_from_json(witness_to_json(both)) == both);
    CHECK(witness_reproduces(triangle(), both));
    auto forged = both;
    forged.depth = 2;
    CHECK_FALSE(witness_reproduces(triangle(), forged));
}

TEST_CASE("property: Takayama depth matches brute-force local cohomology") {
    for (const auto& I : corpus_with_powers(40, 31, 3, 3)) {
        CHECK(depth_via_takayama(I).depth == oracle::depth_by_local_cohomology(I));
    }
    for (const auto& I : squarefree_corpus(30, 32, 4)) {
        CHECK(depth_via_takayama(I).depth == oracle::depth_by_local_cohomology(I));
    }
}

TEST_CASE("property: Betti tables of squarefree ideals match Hochster's formula") {
    for (const auto& I : squarefree_corpus(120, 33, 5)) {
        const auto table = betti_table(I);
        std::map<std::pair<int, VarSet>, long> got;
        for (const auto& [key, value] : table.entries()) {
            VarSet sigma = 0;
            for (int j = 0; j < I.n(); ++j) {
                REQUIRE(key.second[j] <= 1);
                if (key.second[j]) sigma |= VarSet{1} << j;
            }
            got[{key.first, sigma}] = value;
        }
        CHECK(got == oracle::hochster_betti(I));
        CHECK(depth_via_betti(I).depth == I.n() - oracle::projective_dimension_by_hochster(I));
    }
}

TEST_CASE("property: engines agree on the corpus and its symbolic powers") {
    for (const auto& I : corpus_with_powers(200, 20240607, 5, 3)) {
        const int t = depth_via_takayama(I).depth;
        const int b = depth_via_betti(I).depth;
        CHECK(t == b);
    }
}

TEST_CASE("property: witnesses reproduce and respect dimension bounds") {
    for (const auto& I : corpus_with_powers(60, 34, 5, 2)) {
        const auto w = depth(I);
        CHECK(witness_reproduces(I, w));
        CHECK(w.depth >= 0);
        const auto radical = [&] {
            std::vector<Monomial> gens;
            for (const auto& g : I.generators()) gens.push_back(Monomial::squarefree(I.n(), g.support()));
            return MonomialIdeal::normalize(std::move(gens), I.n());
        }();
        const int dim = krull_dim_quotient(radical);
        CHECK(w.depth <= dim);
        const int pd = betti_table(I).projective_dimension();
        CHECK((w.depth == dim) == (pd == height(radical)));
    }
}

TEST_CASE("property: cone vanishing beyond the search box") {
    Draw draw(35);
    int tested = 0;
    for (const auto& I : corpus_with_powers(50, 36, 5, 2)) {
        const auto rho = max_degrees_of(I);
        const int n = I.n();
        std::vector<int> a(n);
        for (int j = 0; j < n; ++j) a[j] = draw.below(rho[j] + 1);
        const int apex = draw.below(n);
        a[apex] = rho[apex] + draw.below(3);
        VarSet support = 0;
        for (int j = 0; j < n; ++j)
            if (a[j]) support |= VarSet{1} << j;
        const VarSet free = full_set(n) & ~support & ~(VarSet{1} << apex);
        const VarSet c = static_cast<VarSet>(draw.below(1 << n)) & free;
        const auto faces = oracle::degree_complex_faces(I, a, c);
        CHECK_FALSE(oracle::has_homology(oracle::reduced_homology(faces)));
        const auto built = takayama_complex(I, a, c);
        CHECK(reduced_homology(built).is_zero());
        if (!faces.empty()) {
            for (VarSet f : faces) CHECK(std::binary_search(faces.begin(), faces.end(), f | VarSet{1} << apex));
        }
        ++tested;
    }
    CHECK(tested == 100);
}

TEST_CASE("property: entries of alpha_plus inside the cosupport are irrelevant") {
    Draw draw(37);
    for (const auto& I : corpus_with_powers(50, 38, 5, 2)) {
        const int n = I.n();
        const VarSet c = static_cast<VarSet>(draw.below(1 << n));
        std::vector<int> a(n, 0);
        for (int j = 0; j < n; ++j)
            if (!(c >> j & 1)) a[j] = draw.below(3);
        auto perturbed = a;
        for (int j : members(c)) perturbed[j] = 1 + draw.below(4);
        CHECK(takayama_complex(I, perturbed, c) == takayama_complex(I, a, c));
        CHECK(oracle::degree_complex_faces(I, perturbed, c) == oracle::degree_complex_faces(I, a, c));
    }
}

TEST_CASE("property: results do not depend on the thread count") {
    for (const auto& I : corpus_with_powers(30, 39, 5, 2)) {
        const auto one = depth(I, DepthEngine::cross_check, DepthOptions{Field::rationals(), 1});
        const auto four = depth(I, DepthEngine::cross_check, DepthOptions{Field::rationals(), 4});
        CHECK(one == four);
        CHECK(betti_table(I, BettiOptions{Field::rationals(), 1}).entries() ==
              betti_table(I, BettiOptions{Field::rationals(), 3}).entries());
    }
}

TEST_CASE("property: prime characteristic agrees with the oracle") {
    for (const auto& I : squarefree_corpus(40, 40, 5)) {
        CHECK(depth(I, DepthEngine::cross_check, DepthOptions{Field::prime(2)}).depth ==
              I.n() - oracle::projective_dimension_by_hochster(I, 2));
    }
}
