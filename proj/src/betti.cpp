#include "symdepth/betti.hpp"

#include <algorithm>

#include "symdepth/errors.hpp"
#include "symdepth/parallel.hpp"

namespace symdepth {

namespace {

std::vector<VarSet> upper_koszul_faces(const MonomialIdeal& ideal, const std::vector<int>& alpha) {
    const Monomial top(alpha);
    std::vector<VarSet> faces;
    const VarSet support = top.support();
    for (VarSet f = support;; f = (f - 1) & support) {
        if (ideal.contains(top / Monomial::squarefree(ideal.n(), f))) faces.push_back(f);
        if (f == 0) break;
    }
    return faces;
}

// α carries homology only if it is the lcm of the generators dividing it;
// otherwise K^α(I) is a cone.
bool in_lcm_lattice(const MonomialIdeal& ideal, const std::vector<int>& alpha) {
    std::vector<int> join(alpha.size(), 0);
    bool any = false;
    for (const auto& g : ideal.generators()) {
        bool divides = true;
        for (std::size_t i = 0; i < alpha.size() && divides; ++i) divides = g[static_cast<int>(i)] <= alpha[i];
        if (!divides) continue;
        any = true;
        for (std::size_t i = 0; i < alpha.size(); ++i) join[i] = std::max(join[i], g[static_cast<int>(i)]);
    }
    return any && join == alpha;
}

}  // namespace

SimplicialComplex upper_koszul_complex(const MonomialIdeal& ideal, const std::vector<int>& alpha) {
    if (static_cast<int>(alpha.size()) != ideal.n()) throw InputError("multidegree has wrong length");
    const auto box = ideal.max_degrees();
    for (int i = 0; i < ideal.n(); ++i)
        if (alpha[i] < 0 || alpha[i] > box[i]) throw InputError("multidegree outside the lcm box");
    return SimplicialComplex::from_facets(ideal.n(), maximal_sets(upper_koszul_faces(ideal, alpha)));
}

void BettiTable::add(int i, std::vector<int> alpha, long value) {
    if (value != 0) entries_[{i, std::move(alpha)}] += value;
}

long BettiTable::at(int i, const std::vector<int>& alpha) const {
    const auto it = entries_.find({i, alpha});
    return it == entries_.end() ? 0 : it->second;
}

long BettiTable::total(int i) const {
    long sum = 0;
    for (const auto& [key, value] : entries_)
        if (key.first == i) sum += value;
    return sum;
}

int BettiTable::projective_dimension() const {
    int pd = 0;
    for (const auto& [key, value] : entries_)
        if (value != 0) pd = std::max(pd, key.first);
    return pd;
}

BettiTable betti_table(const MonomialIdeal& ideal, const BettiOptions& options) {
    if (ideal.is_unit()) throw InputError("Betti numbers of the zero module are not defined here");
    const int n = ideal.n();
    BettiTable table;
    table.add(0, std::vector<int>(n, 0), 1);
    if (ideal.is_zero()) return table;

    const auto box = ideal.max_degrees();
    std::size_t cells = 1;
    for (int b : box) cells *= static_cast<std::size_t>(b + 1);

    std::vector<BettiTable> partial(std::max(1u, options.threads));
    for_each_chunk(cells, options.threads, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
        std::vector<int> alpha(n);
        for (std::size_t cell = begin; cell < end; ++cell) {
            std::size_t rest = cell;
            for (int i = n - 1; i >= 0; --i) {
                alpha[i] = static_cast<int>(rest % (box[i] + 1));
                rest /= box[i] + 1;
            }
            if (!in_lcm_lattice(ideal, alpha)) continue;
            const auto faces = upper_koszul_faces(ideal, alpha);
            const auto homology = reduced_homology_of_faces(faces, options.field);
            for (int h = -1; h <= homology.top(); ++h) partial[chunk].add(h + 2, alpha, homology.at(h));
        }
    });
    for (const auto& p : partial)
        for (const auto& [key, value] : p.entries()) table.add(key.first, key.second, value);
    return table;
}

}  // namespace symdepth
