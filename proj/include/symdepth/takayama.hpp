#pragma once

#include <vector>

#include "symdepth/complex.hpp"
#include "symdepth/ideal.hpp"

namespace symdepth {

// A class of degrees α ∈ Z^n: the positive part α_+ and CoSupp(α). The
// magnitudes of the negative entries do not affect Δ_α(I).
struct DegreePair {
    std::vector<int> alpha_plus;
    VarSet cosupport = 0;

    // Throws InputError on negative entries or when cosupport meets the
    // support of alpha_plus.
    static DegreePair make(std::vector<int> alpha_plus, VarSet cosupport);

    friend bool operator==(const DegreePair&, const DegreePair&) = default;
};

// Δ_α(I) = {F ⊆ [n]∖C : x^{α_+} ∉ I·S_{F ∪ C}}, facet-reduced.
SimplicialComplex takayama_complex(const MonomialIdeal& ideal, const DegreePair& degree);
// Unchecked variant: entries of alpha_plus inside cosupport are allowed and
// ignored (they are inverted by the localization).
SimplicialComplex takayama_complex(const MonomialIdeal& ideal, const std::vector<int>& alpha_plus,
                                   VarSet cosupport);
// All faces of Δ_α(I), built from the minimal non-faces {g : g_i > α_i}∖C.
std::vector<VarSet> takayama_faces(const MonomialIdeal& ideal, const std::vector<int>& alpha_plus,
                                   VarSet cosupport);

}  // namespace symdepth
