#pragma once

#include <vector>

#include "support/corpus.hpp"
#include "symdepth/complex.hpp"

namespace symdepth::testing {

// Every non-void complex on n vertices (one per antichain of subsets).
inline std::vector<SimplicialComplex> all_complexes(int n) {
    const int subsets = 1 << n;
    std::vector<SimplicialComplex> out;
    std::vector<VarSet> chosen;
    // Antichains by recursion over subsets in increasing order.
    auto recurse = [&](auto&& self, int next) -> void {
        if (!chosen.empty()) out.push_back(SimplicialComplex::from_facets(n, chosen));
        for (int s = next; s < subsets; ++s) {
            bool comparable = false;
            for (VarSet c : chosen)
                if (is_subset(c, static_cast<VarSet>(s)) || is_subset(static_cast<VarSet>(s), c)) comparable = true;
            if (comparable) continue;
            chosen.push_back(static_cast<VarSet>(s));
            self(self, s + 1);
            chosen.pop_back();
        }
    };
    recurse(recurse, 0);
    return out;
}

// Independence complex of the graphic matroid of a random multigraph-free
// graph: elements are edges, faces are forests.
inline SimplicialComplex random_graphic_matroid(Draw& draw, int vertices, int edges) {
    std::vector<std::pair<int, int>> all;
    for (int a = 0; a < vertices; ++a)
        for (int b = a + 1; b < vertices; ++b) all.emplace_back(a, b);
    std::vector<std::pair<int, int>> picked;
    while (static_cast<int>(picked.size()) < edges && !all.empty()) {
        const int i = draw.below(static_cast<int>(all.size()));
        picked.push_back(all[i]);
        all.erase(all.begin() + i);
    }
    const int n = static_cast<int>(picked.size());
    std::vector<VarSet> forests;
    for (VarSet s = 0; s < (VarSet{1} << n); ++s) {
        std::vector<int> parent(vertices);
        for (int v = 0; v < vertices; ++v) parent[v] = v;
        auto find = [&](int v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        bool acyclic = true;
        for (int e = 0; e < n && acyclic; ++e) {
            if (!(s >> e & 1)) continue;
            const int a = find(picked[e].first), b = find(picked[e].second);
            if (a == b) acyclic = false;
            else parent[a] = b;
        }
        if (acyclic) forests.push_back(s);
    }
    return SimplicialComplex::from_facets(n, forests);
}

// Uniform matroid U_{r,n}: all r-subsets are facets.
inline SimplicialComplex uniform_matroid(int r, int n) {
    std::vector<VarSet> facets;
    for (VarSet s = 0; s < (VarSet{1} << n); ++s)
        if (popcount(s) == r) facets.push_back(s);
    return SimplicialComplex::from_facets(n, facets);
}

}  // namespace symdepth::testing
