#include "symdepth/ideal.hpp"

#include <algorithm>
#include <stdexcept>

#include "symdepth/errors.hpp"

namespace symdepth {

namespace {

void require_ring(const MonomialIdeal& a, int n) {
    if (a.n() != n) throw InputError("ideals live in rings of different size");
}

void require_ring(const MonomialIdeal& a, const Monomial& u) {
    if (u.size() != a.n()) throw InputError("monomial and ideal live in rings of different size");
}

void enforce(const MonomialIdeal& ideal, GeneratorLimit limit) {
    if (limit.max_generators != 0 && ideal.size() > limit.max_generators)
        throw BudgetExceeded("generator limit exceeded (" + std::to_string(ideal.size()) + " > " +
                             std::to_string(limit.max_generators) + ")");
}

void require_squarefree_proper(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) throw InputError("operation requires a nonzero ideal");
    if (ideal.is_unit()) throw InputError("operation requires a proper ideal");
    if (!ideal.is_squarefree()) throw InputError("operation requires a squarefree ideal");
}

}  // namespace

MonomialIdeal MonomialIdeal::normalize(std::vector<Monomial> generators, int n) {
    if (n < 0 || n > kMaxVariables)
        throw InputError("ring size must lie in [0, " + std::to_string(kMaxVariables) + "]");
    for (const auto& g : generators)
        if (g.size() != n)
            throw InputError("generator " + g.to_string() + " has " + std::to_string(g.size()) +
                             " exponents, expected " + std::to_string(n));
    std::sort(generators.begin(), generators.end(), graded_lex_less);
    std::vector<Monomial> kept;
    for (auto& g : generators) {
        const bool redundant =
            std::any_of(kept.begin(), kept.end(), [&](const Monomial& h) { return h.divides(g); });
        if (!redundant) kept.push_back(std::move(g));
    }
    return MonomialIdeal(n, std::move(kept));
}

MonomialIdeal MonomialIdeal::zero(int n) { return normalize({}, n); }

MonomialIdeal MonomialIdeal::unit(int n) { return normalize({Monomial::one(n)}, n); }

bool MonomialIdeal::is_squarefree() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_squarefree(); });
}

bool MonomialIdeal::contains(const Monomial& u) const {
    require_ring(*this, u);
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(u); });
}

bool MonomialIdeal::localized_contains(const Monomial& u, VarSet localized) const {
    require_ring(*this, u);
    for (const auto& g : gens_) {
        bool bounded = true;
        for (int i = 0; i < n_ && bounded; ++i)
            if (!contains_var(localized, i) && g[i] > u[i]) bounded = false;
        if (bounded) return true;
    }
    return false;
}

std::vector<int> MonomialIdeal::max_degrees() const {
    std::vector<int> rho(n_, 0);
    for (const auto& g : gens_)
        for (int i = 0; i < n_; ++i) rho[i] = std::max(rho[i], g[i]);
    return rho;
}

std::string MonomialIdeal::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) out += ", ";
        out += gens_[i].to_string();
    }
    return out + ")";
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b, GeneratorLimit limit) {
    require_ring(b, a.n());
    std::vector<Monomial> lcms;
    lcms.reserve(a.size() * b.size());
    for (const auto& g : a.generators())
        for (const auto& h : b.generators()) lcms.push_back(lcm(g, h));
    auto result = MonomialIdeal::normalize(std::move(lcms), a.n());
    enforce(result, limit);
    return result;
}

MonomialIdeal intersect_all(std::span<const MonomialIdeal> ideals, GeneratorLimit limit) {
    if (ideals.empty()) throw InputError("intersection of an empty family");
    MonomialIdeal acc = ideals.front();
    for (std::size_t i = 1; i < ideals.size(); ++i) acc = intersect(acc, ideals[i], limit);
    return acc;
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& u) {
    require_ring(ideal, u);
    std::vector<Monomial> quotients;
    quotients.reserve(ideal.size());
    for (const auto& g : ideal.generators()) quotients.push_back(g / gcd(g, u));
    return MonomialIdeal::normalize(std::move(quotients), ideal.n());
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b, GeneratorLimit limit) {
    require_ring(b, a.n());
    std::vector<Monomial> prods;
    prods.reserve(a.size() * b.size());
    for (const auto& g : a.generators())
        for (const auto& h : b.generators()) prods.push_back(g * h);
    auto result = MonomialIdeal::normalize(std::move(prods), a.n());
    enforce(result, limit);
    return result;
}

MonomialIdeal ordinary_power(const MonomialIdeal& ideal, int k, GeneratorLimit limit) {
    if (k < 1) throw InputError("power exponent must be positive");
    MonomialIdeal acc = ideal;
    for (int i = 1; i < k; ++i) acc = product(acc, ideal, limit);
    return acc;
}

MonomialIdeal prime_power(int n, PrimeSupport p, int k) {
    if (k < 1) throw InputError("power exponent must be positive");
    const std::vector<int> vars = members(p.variables);
    if (vars.empty()) throw InputError("prime support must be nonempty");
    std::vector<Monomial> gens;
    std::vector<int> e(n, 0);
    // distribute k among vars[idx..]
    auto place = [&](auto&& self, std::size_t idx, int remaining) -> void {
        if (idx + 1 == vars.size()) {
            e[vars[idx]] = remaining;
            gens.emplace_back(e);
            e[vars[idx]] = 0;
            return;
        }
        for (int take = remaining; take >= 0; --take) {
            e[vars[idx]] = take;
            self(self, idx + 1, remaining - take);
        }
        e[vars[idx]] = 0;
    };
    place(place, 0, k);
    return MonomialIdeal::normalize(std::move(gens), n);
}

std::vector<PrimeSupport> minimal_primes(const MonomialIdeal& ideal) {
    require_squarefree_proper(ideal);
    std::vector<VarSet> edges;
    VarSet universe = 0;
    for (const auto& g : ideal.generators()) {
        edges.push_back(g.support());
        universe |= g.support();
    }
    auto covers = [&](VarSet c) {
        return std::all_of(edges.begin(), edges.end(), [c](VarSet e) { return (e & c) != 0; });
    };
    std::vector<PrimeSupport> out;
    // enumerate submasks of the universe
    for (VarSet c = universe;; c = (c - 1) & universe) {
        if (c != 0 && covers(c)) {
            bool minimal = true;
            for (VarSet rest = c; rest != 0 && minimal; rest &= rest - 1) {
                const VarSet bit = rest & (~rest + 1);
                if (covers(c & ~bit)) minimal = false;
            }
            if (minimal) out.push_back(PrimeSupport{c});
        }
        if (c == 0) break;
    }
    std::sort(out.begin(), out.end(), [](PrimeSupport a, PrimeSupport b) {
        if (a.height() != b.height()) return a.height() < b.height();
        return a.variables < b.variables;
    });
    return out;
}

int height(const MonomialIdeal& ideal) { return minimal_primes(ideal).front().height(); }

int bight(const MonomialIdeal& ideal) { return minimal_primes(ideal).back().height(); }

int krull_dim_quotient(const MonomialIdeal& ideal) { return ideal.n() - height(ideal); }

bool is_unmixed(const MonomialIdeal& ideal) {
    const auto primes = minimal_primes(ideal);
    return primes.front().height() == primes.back().height();
}

MonomialIdeal symbolic_power(const MonomialIdeal& ideal, int k, GeneratorLimit limit) {
    if (k < 1) throw InputError("symbolic power exponent must be positive");
    const auto primes = minimal_primes(ideal);
    if (k == 1) return ideal;
    std::vector<MonomialIdeal> powers;
    powers.reserve(primes.size());
    for (const auto& p : primes) powers.push_back(prime_power(ideal.n(), p, k));
    return intersect_all(powers, limit);
}

bool symbolic_contains(std::span<const PrimeSupport> primes, int k, const Monomial& u) {
    for (const auto& p : primes) {
        long sum = 0;
        for (int i : members(p.variables)) sum += u[i];
        if (sum < k) return false;
    }
    return true;
}

bool symbolic_contains(const MonomialIdeal& ideal, int k, const Monomial& u) {
    if (k < 1) throw InputError("symbolic power exponent must be positive");
    require_ring(ideal, u);
    const auto primes = minimal_primes(ideal);
    return symbolic_contains(primes, k, u);
}

}  // namespace symdepth
