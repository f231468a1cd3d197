#include "symdepth/complex.hpp"

#include <algorithm>
#include <map>

#include "symdepth/errors.hpp"

namespace symdepth {

bool face_less(VarSet a, VarSet b) {
    if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
    if (a == b) return false;
    // lowest differing vertex belongs to the lexicographically smaller set
    const VarSet diff = a ^ b;
    const VarSet low = diff & (~diff + 1);
    return (a & low) != 0;
}

std::vector<VarSet> maximal_sets(std::vector<VarSet> sets) {
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<VarSet> out;
    for (VarSet s : sets) {
        const bool dominated = std::any_of(sets.begin(), sets.end(),
                                           [s](VarSet t) { return t != s && is_subset(s, t); });
        if (!dominated) out.push_back(s);
    }
    std::sort(out.begin(), out.end(), face_less);
    return out;
}

SimplicialComplex SimplicialComplex::from_facets(int n, std::vector<VarSet> facets) {
    if (n < 0 || n > kMaxVariables)
        throw InputError("vertex count must lie in [0, " + std::to_string(kMaxVariables) + "]");
    for (VarSet f : facets)
        if (!is_subset(f, full_set(n))) throw InputError("facet vertex outside [n]");
    return SimplicialComplex(n, maximal_sets(std::move(facets)));
}

bool SimplicialComplex::is_face(VarSet f) const {
    return std::any_of(facets_.begin(), facets_.end(), [f](VarSet g) { return is_subset(f, g); });
}

int SimplicialComplex::dim() const {
    if (is_void()) throw InputError("dimension of the void complex is undefined");
    int d = 0;
    for (VarSet f : facets_) d = std::max(d, popcount(f));
    return d - 1;
}

std::vector<VarSet> SimplicialComplex::faces() const {
    std::vector<VarSet> out;
    for (VarSet f : facets_) {
        for (VarSet s = f;; s = (s - 1) & f) {
            out.push_back(s);
            if (s == 0) break;
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    std::sort(out.begin(), out.end(), face_less);
    return out;
}

VarSet SimplicialComplex::vertices() const {
    VarSet v = 0;
    for (VarSet f : facets_) v |= f;
    return v;
}

std::string SimplicialComplex::to_string() const {
    if (is_void()) return "void";
    std::string out = "{";
    for (std::size_t i = 0; i < facets_.size(); ++i) {
        if (i) out += ", ";
        out += "{";
        bool first = true;
        for (int v : members(facets_[i])) {
            if (!first) out += ",";
            out += std::to_string(v + 1);
            first = false;
        }
        out += "}";
    }
    return out + "}";
}

SimplicialComplex link(const SimplicialComplex& complex, VarSet face) {
    if (!complex.is_face(face)) throw InputError("link requires a face of the complex");
    std::vector<VarSet> facets;
    for (VarSet f : complex.facets())
        if (is_subset(face, f)) facets.push_back(f & ~face);
    return SimplicialComplex::from_facets(complex.n(), std::move(facets));
}

SimplicialComplex deletion(const SimplicialComplex& complex, VarSet vertices) {
    std::vector<VarSet> facets;
    for (VarSet f : complex.facets()) facets.push_back(f & ~vertices);
    return SimplicialComplex::from_facets(complex.n(), std::move(facets));
}

MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& complex) {
    if (complex.is_void()) throw InputError("the void complex has no Stanley-Reisner ideal");
    const int n = complex.n();
    if (n < 1) throw InputError("Stanley-Reisner ideal needs at least one variable");
    std::vector<Monomial> gens;
    for (VarSet s = 1; s <= full_set(n); ++s) {
        if (complex.is_face(s)) continue;
        bool minimal = true;
        for (VarSet rest = s; rest != 0 && minimal; rest &= rest - 1)
            if (!complex.is_face(s & ~(rest & (~rest + 1)))) minimal = false;
        if (minimal) gens.push_back(Monomial::squarefree(n, s));
        if (s == full_set(n)) break;
    }
    return MonomialIdeal::normalize(std::move(gens), n);
}

SimplicialComplex complex_of_ideal(const MonomialIdeal& ideal) {
    if (!ideal.is_squarefree()) throw InputError("complex_of_ideal requires a squarefree ideal");
    if (ideal.is_unit()) throw InputError("complex_of_ideal requires a proper ideal");
    const int n = ideal.n();
    std::vector<VarSet> nonfaces;
    for (const auto& g : ideal.generators()) nonfaces.push_back(g.support());
    auto is_face = [&](VarSet f) {
        return std::none_of(nonfaces.begin(), nonfaces.end(), [f](VarSet g) { return is_subset(g, f); });
    };
    std::vector<VarSet> facets;
    for (VarSet s = 0;; ++s) {
        if (is_face(s)) {
            bool maximal = true;
            for (int v = 0; v < n && maximal; ++v)
                if (!contains_var(s, v) && is_face(s | (VarSet{1} << v))) maximal = false;
            if (maximal) facets.push_back(s);
        }
        if (s == full_set(n)) break;
    }
    return SimplicialComplex::from_facets(n, std::move(facets));
}

bool is_pure(const SimplicialComplex& complex) {
    if (complex.is_void()) throw InputError("purity of the void complex is undefined");
    const int size = popcount(complex.facets().front());
    return std::all_of(complex.facets().begin(), complex.facets().end(),
                       [size](VarSet f) { return popcount(f) == size; });
}

MatroidCheck check_matroid(const SimplicialComplex& complex) {
    if (complex.is_void()) throw InputError("matroid check on the void complex");
    const auto faces = complex.faces();
    std::vector<char> lookup(std::size_t{1} << complex.n(), 0);
    for (VarSet f : faces) lookup[f] = 1;
    for (VarSet larger : faces) {
        for (VarSet smaller : faces) {
            if (popcount(smaller) >= popcount(larger)) break;
            bool exchanged = false;
            for (VarSet rest = larger & ~smaller; rest != 0 && !exchanged; rest &= rest - 1)
                if (lookup[smaller | (rest & (~rest + 1))]) exchanged = true;
            if (!exchanged) return MatroidCheck{false, larger, smaller};
        }
    }
    return MatroidCheck{};
}

namespace {

bool vertex_decomposable(const SimplicialComplex& complex, std::map<std::vector<VarSet>, bool>& memo) {
    if (complex.is_simplex()) return true;
    if (auto it = memo.find(complex.facets()); it != memo.end()) return it->second;
    bool result = false;
    for (int v : members(complex.vertices())) {
        const VarSet x = VarSet{1} << v;
        const auto del = deletion(complex, x);
        const bool shedding = std::all_of(del.facets().begin(), del.facets().end(), [&](VarSet f) {
            return std::find(complex.facets().begin(), complex.facets().end(), f) != complex.facets().end();
        });
        if (!shedding) continue;
        if (vertex_decomposable(link(complex, x), memo) && vertex_decomposable(del, memo)) {
            result = true;
            break;
        }
    }
    memo.emplace(complex.facets(), result);
    return result;
}

}  // namespace

bool is_vertex_decomposable(const SimplicialComplex& complex) {
    if (complex.is_void()) throw InputError("vertex decomposability of the void complex");
    std::map<std::vector<VarSet>, bool> memo;
    return vertex_decomposable(complex, memo);
}

}  // namespace symdepth
