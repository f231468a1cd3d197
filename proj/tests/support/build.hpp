#pragma once

#include <algorithm>
#include <initializer_list>
#include <string>
#include <vector>

#include "symdepth/complex.hpp"
#include "symdepth/ideal.hpp"
#include "symdepth/ideal_io.hpp"

namespace symdepth::testing {

inline Monomial mono(std::vector<int> exponents) { return Monomial(std::move(exponents)); }

// ideal(3, {"x1*x2", "x2*x3"}); an empty list gives the zero ideal.
inline MonomialIdeal ideal(int n, std::initializer_list<const char*> generators) {
    std::vector<Monomial> gens;
    for (const char* g : generators) gens.push_back(parse_monomial(g, n));
    return MonomialIdeal::normalize(std::move(gens), n);
}

inline VarSet vset(std::initializer_list<int> one_based) {
    VarSet s = 0;
    for (int v : one_based) s |= VarSet{1} << (v - 1);
    return s;
}

inline SimplicialComplex cx(int n, std::initializer_list<std::initializer_list<int>> facets) {
    std::vector<VarSet> f;
    for (auto facet : facets) f.push_back(vset(facet));
    return SimplicialComplex::from_facets(n, std::move(f));
}

inline MonomialIdeal triangle() { return ideal(3, {"x1*x2", "x1*x3", "x2*x3"}); }
inline MonomialIdeal maximal_ideal(int n) {
    std::vector<Monomial> gens;
    for (int i = 0; i < n; ++i) gens.push_back(Monomial::variable(n, i));
    return MonomialIdeal::normalize(std::move(gens), n);
}

inline std::vector<Monomial> sorted_generators(const MonomialIdeal& I) {
    auto g = I.generators();
    std::vector<Monomial> out(g.begin(), g.end());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace symdepth::testing
