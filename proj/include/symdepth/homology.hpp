#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "symdepth/complex.hpp"

namespace symdepth {

// Coefficient field for homology: characteristic 0 means Q, otherwise GF(p).
struct Field {
    int characteristic = 0;

    static Field rationals() { return Field{0}; }
    // Throws InputError unless p is prime.
    static Field prime(int p);
    friend bool operator==(Field, Field) = default;
};

// dim_K of reduced homology in degrees -1..dim.
class HomologyProfile {
public:
    HomologyProfile() = default;
    HomologyProfile(std::vector<long> dims, Field field) : dims_(std::move(dims)), field_(field) {}

    // Zero outside the stored range.
    long at(int i) const;
    // Highest index with storage (dim of the complex); -2 for the void complex.
    int top() const { return static_cast<int>(dims_.size()) - 2; }
    bool is_zero() const;
    Field field() const { return field_; }
    const std::vector<long>& dims() const { return dims_; }

    std::string to_string() const;
    friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;

private:
    std::vector<long> dims_;  // dims_[i + 1] = dim H~_i
    Field field_{};
};

using IntMatrix = std::vector<std::vector<std::int64_t>>;

// Exact rank: fraction-free elimination over Z for characteristic 0, modular
// elimination otherwise.
long exact_rank(IntMatrix m, Field field);

// Reduced homology via ranks of the simplicial boundary maps. The void
// complex has zero homology; {∅} has H~_{-1} = 1.
HomologyProfile reduced_homology(const SimplicialComplex& complex, Field field = {});
// Same, for a family of faces closed under subsets (any order).
HomologyProfile reduced_homology_of_faces(std::span<const VarSet> faces, Field field = {});

}  // namespace symdepth
