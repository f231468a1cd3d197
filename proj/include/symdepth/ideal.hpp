#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "symdepth/monomial.hpp"
#include "symdepth/varset.hpp"

namespace symdepth {

// Monomial ideal of K[x_1..x_n] held by its minimal generators in graded-lex
// order. The zero ideal has no generators; the unit ideal has the single
// generator 1.
class MonomialIdeal {
public:
    // Divisibility-reduces, deduplicates and sorts. Throws InputError when a
    // generator does not have exactly n exponents.
    static MonomialIdeal normalize(std::vector<Monomial> generators, int n);
    static MonomialIdeal zero(int n);
    static MonomialIdeal unit(int n);

    int n() const { return n_; }
    const std::vector<Monomial>& generators() const { return gens_; }
    std::size_t size() const { return gens_.size(); }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }
    bool is_proper() const { return !is_unit(); }
    bool is_squarefree() const;
    bool is_principal() const { return gens_.size() == 1; }

    // Some generator divides u.
    bool contains(const Monomial& u) const;
    // u lies in I * S_F with S_F = S[x_i^{-1} : i in F]: some generator is
    // bounded by u outside F.
    bool localized_contains(const Monomial& u, VarSet localized) const;

    // Componentwise maximum of the generator exponents (lcm of generators).
    std::vector<int> max_degrees() const;

    std::string to_string() const;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    MonomialIdeal(int n, std::vector<Monomial> gens) : n_(n), gens_(std::move(gens)) {}

    int n_ = 0;
    std::vector<Monomial> gens_;
};

// Support of a monomial prime ideal (x_i : i in variables).
struct PrimeSupport {
    VarSet variables = 0;

    int height() const { return popcount(variables); }
    friend auto operator<=>(const PrimeSupport&, const PrimeSupport&) = default;
};

// Optional size cap applied to intermediate generator sets. Zero disables it.
struct GeneratorLimit {
    std::size_t max_generators = 0;
};

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b, GeneratorLimit limit = {});
MonomialIdeal intersect_all(std::span<const MonomialIdeal> ideals, GeneratorLimit limit = {});
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& u);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b, GeneratorLimit limit = {});
MonomialIdeal ordinary_power(const MonomialIdeal& ideal, int k, GeneratorLimit limit = {});
// Power of the prime generated by the variables in p.
MonomialIdeal prime_power(int n, PrimeSupport p, int k);

// Minimal vertex covers of the generator supports, ordered by (height, mask).
// Requires a squarefree, nonzero, proper ideal.
std::vector<PrimeSupport> minimal_primes(const MonomialIdeal& ideal);
int height(const MonomialIdeal& ideal);
int bight(const MonomialIdeal& ideal);
int krull_dim_quotient(const MonomialIdeal& ideal);
bool is_unmixed(const MonomialIdeal& ideal);

// I^(k) as the intersection of p^k over the minimal primes p of I.
MonomialIdeal symbolic_power(const MonomialIdeal& ideal, int k, GeneratorLimit limit = {});
// Membership in I^(k) by exponent sums over each minimal prime.
bool symbolic_contains(const MonomialIdeal& ideal, int k, const Monomial& u);
bool symbolic_contains(std::span<const PrimeSupport> primes, int k, const Monomial& u);

}  // namespace symdepth
