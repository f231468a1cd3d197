#include "symdepth/monomial.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace symdepth {

namespace {

int checked_add(int a, int b) {
    int r = 0;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("monomial exponent overflow");
    return r;
}

int checked_mul(int a, int b) {
    int r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("monomial exponent overflow");
    return r;
}

void require_same_size(const Monomial& a, const Monomial& b) {
    if (a.size() != b.size()) throw std::invalid_argument("monomials live in rings of different size");
}

}  // namespace

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
    for (int e : exps_)
        if (e < 0) throw std::invalid_argument("negative exponent in monomial");
}

Monomial Monomial::one(int n) { return Monomial(std::vector<int>(n, 0)); }

Monomial Monomial::variable(int n, int i) {
    std::vector<int> e(n, 0);
    e.at(i) = 1;
    return Monomial(std::move(e));
}

Monomial Monomial::squarefree(int n, VarSet s) {
    std::vector<int> e(n, 0);
    for (int i = 0; i < n; ++i) e[i] = contains_var(s, i) ? 1 : 0;
    return Monomial(std::move(e));
}

long Monomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0L); }

VarSet Monomial::support() const {
    VarSet s = 0;
    for (int i = 0; i < size(); ++i)
        if (exps_[i] > 0) s |= VarSet{1} << i;
    return s;
}

bool Monomial::is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
    return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e <= 1; });
}

bool Monomial::divides(const Monomial& other) const {
    require_same_size(*this, other);
    for (int i = 0; i < size(); ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
    require_same_size(*this, other);
    std::vector<int> e(exps_.size());
    for (int i = 0; i < size(); ++i) e[i] = checked_add(exps_[i], other.exps_[i]);
    return Monomial(std::move(e));
}

Monomial Monomial::pow(int k) const {
    if (k < 0) throw std::invalid_argument("negative power of a monomial");
    std::vector<int> e(exps_.size());
    for (int i = 0; i < size(); ++i) e[i] = checked_mul(exps_[i], k);
    return Monomial(std::move(e));
}

Monomial Monomial::operator/(const Monomial& divisor) const {
    if (!divisor.divides(*this)) throw std::invalid_argument("monomial division with remainder");
    std::vector<int> e(exps_.size());
    for (int i = 0; i < size(); ++i) e[i] = exps_[i] - divisor.exps_[i];
    return Monomial(std::move(e));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    require_same_size(a, b);
    std::vector<int> e(a.exps_.size());
    for (int i = 0; i < a.size(); ++i) e[i] = std::max(a.exps_[i], b.exps_[i]);
    return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    require_same_size(a, b);
    std::vector<int> e(a.exps_.size());
    for (int i = 0; i < a.size(); ++i) e[i] = std::min(a.exps_[i], b.exps_[i]);
    return Monomial(std::move(e));
}

std::string Monomial::to_string() const {
    std::string out;
    for (int i = 0; i < size(); ++i) {
        if (exps_[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += 'x' + std::to_string(i + 1);
        if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
    }
    return out.empty() ? "1" : out;
}

bool graded_lex_less(const Monomial& a, const Monomial& b) {
    const long da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return std::lexicographical_compare(b.exponents().begin(), b.exponents().end(),
                                        a.exponents().begin(), a.exponents().end());
}

}  // namespace symdepth
