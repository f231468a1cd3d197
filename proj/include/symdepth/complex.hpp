#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "symdepth/ideal.hpp"
#include "symdepth/varset.hpp"

namespace symdepth {

// Size first, then lexicographic on the sorted member lists.
bool face_less(VarSet a, VarSet b);

// Simplicial complex on the vertex set [n], stored by its facets.
// No facets at all is the void complex; the single facet {} is the empty
// complex {∅}. The two are distinct values.
class SimplicialComplex {
public:
    // Inclusion-reduces and orders the facets. Throws InputError for vertices
    // outside [n].
    static SimplicialComplex from_facets(int n, std::vector<VarSet> facets);
    static SimplicialComplex void_complex(int n) { return from_facets(n, {}); }
    static SimplicialComplex empty_complex(int n) { return from_facets(n, {0}); }
    static SimplicialComplex simplex(int n, VarSet vertices) { return from_facets(n, {vertices}); }

    int n() const { return n_; }
    const std::vector<VarSet>& facets() const { return facets_; }

    bool is_void() const { return facets_.empty(); }
    bool is_simplex() const { return facets_.size() == 1; }
    bool is_face(VarSet f) const;
    // max |F| - 1; throws InputError on the void complex.
    int dim() const;
    // All faces in face_less order.
    std::vector<VarSet> faces() const;
    // Vertices v with {v} a face.
    VarSet vertices() const;

    std::string to_string() const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    SimplicialComplex(int n, std::vector<VarSet> facets) : n_(n), facets_(std::move(facets)) {}

    int n_ = 0;
    std::vector<VarSet> facets_;
};

// Faces in `faces` that are maximal under inclusion, in face_less order.
std::vector<VarSet> maximal_sets(std::vector<VarSet> sets);

// lk(F) = {G ⊆ [n]∖F : G ∪ F ∈ Δ}. Throws InputError when F is not a face.
SimplicialComplex link(const SimplicialComplex& complex, VarSet face);
// del(F) = {G ⊆ [n]∖F : G ∈ Δ}.
SimplicialComplex deletion(const SimplicialComplex& complex, VarSet vertices);

// Minimal non-faces as squarefree generators. Throws on the void complex.
MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& complex);
// Complex of squarefree monomials outside I. Requires squarefree, proper I.
SimplicialComplex complex_of_ideal(const MonomialIdeal& ideal);

bool is_pure(const SimplicialComplex& complex);

struct MatroidCheck {
    bool is_matroid = true;
    // First violating pair (|larger| > |smaller|) in face_less order.
    std::optional<VarSet> larger;
    std::optional<VarSet> smaller;
};
MatroidCheck check_matroid(const SimplicialComplex& complex);
inline bool is_matroid(const SimplicialComplex& complex) { return check_matroid(complex).is_matroid; }

bool is_vertex_decomposable(const SimplicialComplex& complex);

}  // namespace symdepth
