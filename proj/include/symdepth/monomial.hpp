#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "symdepth/varset.hpp"

namespace symdepth {

// x^a = x_1^{a_1} ... x_n^{a_n} with a in Z_{>=0}^n. Arithmetic is checked:
// exponent overflow throws std::overflow_error instead of wrapping.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exponents);

    static Monomial one(int n);
    static Monomial variable(int n, int i);  // zero-based i
    // Product of the variables in s.
    static Monomial squarefree(int n, VarSet s);

    int size() const { return static_cast<int>(exps_.size()); }
    int operator[](int i) const { return exps_[i]; }
    std::span<const int> exponents() const { return exps_; }

    long degree() const;
    VarSet support() const;
    bool is_one() const;
    bool is_squarefree() const;

    bool divides(const Monomial& other) const;

    Monomial operator*(const Monomial& other) const;
    Monomial pow(int k) const;
    // Requires divides(other) on the divisor; throws std::invalid_argument otherwise.
    Monomial operator/(const Monomial& divisor) const;

    friend Monomial lcm(const Monomial& a, const Monomial& b);
    friend Monomial gcd(const Monomial& a, const Monomial& b);

    std::string to_string() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
    std::vector<int> exps_;
};

// Canonical generator order: ascending total degree, then lexicographically
// descending exponents (x1^2 before x1x2 before x2^2).
bool graded_lex_less(const Monomial& a, const Monomial& b);

}  // namespace symdepth
