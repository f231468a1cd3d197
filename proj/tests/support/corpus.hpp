#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "symdepth/ideal.hpp"

namespace symdepth::testing {

// Draws only through operator() of mt19937_64, whose output sequence is fixed
// by the standard, so the corpus is identical on every platform.
class Draw {
public:
    explicit Draw(std::uint64_t seed) : rng_(seed) {}
    int below(int bound) { return static_cast<int>(rng_() % static_cast<std::uint64_t>(bound)); }
    int between(int lo, int hi) { return lo + below(hi - lo + 1); }
    bool coin() { return below(2) == 1; }
    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

inline VarSet random_subset_of_size(Draw& draw, int n, int size) {
    VarSet s = 0;
    while (popcount(s) < size) s |= VarSet{1} << draw.below(n);
    return s;
}

// Generators of degree 1 (rare), 2 (usual) or 3.
inline MonomialIdeal random_squarefree_ideal(Draw& draw, int n, int max_generators) {
    std::vector<Monomial> gens;
    const int count = draw.between(std::min(2, max_generators), max_generators);
    for (int g = 0; g < count; ++g) {
        const int roll = draw.below(8);
        const int size = std::min(n, roll == 0 ? 1 : roll < 6 ? 2 : 3);
        gens.push_back(Monomial::squarefree(n, random_subset_of_size(draw, n, size)));
    }
    return MonomialIdeal::normalize(std::move(gens), n);
}

// Nonzero proper squarefree ideals in 2..max_n variables, weighted towards
// the larger rings.
inline std::vector<MonomialIdeal> squarefree_corpus(int count = 200, std::uint64_t seed = 20240607, int max_n = 5) {
    Draw draw(seed);
    std::vector<MonomialIdeal> corpus;
    corpus.reserve(count);
    for (int i = 0; i < count; ++i) {
        static constexpr int sizes[] = {2, 3, 3, 4, 4, 5, 5, 5};
        const int n = std::min(max_n, sizes[draw.below(8)]);
        corpus.push_back(random_squarefree_ideal(draw, n, 2 * n));
    }
    return corpus;
}

// All nonzero proper squarefree ideals in n variables, one per antichain of
// nonempty subsets.
inline std::vector<MonomialIdeal> all_squarefree_ideals(int n) {
    const int subsets = (1 << n) - 1;
    std::vector<MonomialIdeal> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << subsets); ++mask) {
        std::vector<VarSet> chosen;
        for (int b = 0; b < subsets; ++b)
            if (mask >> b & 1) chosen.push_back(static_cast<VarSet>(b + 1));
        bool antichain = true;
        for (VarSet a : chosen)
            for (VarSet b : chosen)
                if (a != b && is_subset(a, b)) antichain = false;
        if (!antichain) continue;
        std::vector<Monomial> gens;
        for (VarSet s : chosen) gens.push_back(Monomial::squarefree(n, s));
        out.push_back(MonomialIdeal::normalize(std::move(gens), n));
    }
    return out;
}

}  // namespace symdepth::testing
