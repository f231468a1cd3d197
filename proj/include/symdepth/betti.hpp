#pragma once

#include <map>
#include <utility>
#include <vector>

#include "symdepth/complex.hpp"
#include "symdepth/homology.hpp"
#include "symdepth/ideal.hpp"

namespace symdepth {

// K^α(I) = {F ⊆ Supp(α) : x^α / x^F ∈ I}. Throws InputError when α leaves
// the box [0, lcm of generators].
SimplicialComplex upper_koszul_complex(const MonomialIdeal& ideal, const std::vector<int>& alpha);

// Multigraded Betti numbers β_{i,α}(S/I), nonzero entries only.
class BettiTable {
public:
    using Key = std::pair<int, std::vector<int>>;

    void add(int i, std::vector<int> alpha, long value);
    long at(int i, const std::vector<int>& alpha) const;
    long total(int i) const;
    int projective_dimension() const;
    const std::map<Key, long>& entries() const { return entries_; }

private:
    std::map<Key, long> entries_;
};

struct BettiOptions {
    Field field{};
    unsigned threads = 1;
};

// β_{i,α}(S/I) = dim H~_{i-2}(K^α(I)) for i ≥ 1, and β_{0,0} = 1. Requires
// a proper ideal; the zero ideal gives the single entry β_{0,0}.
BettiTable betti_table(const MonomialIdeal& ideal, const BettiOptions& options = {});

}  // namespace symdepth
