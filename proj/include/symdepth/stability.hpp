#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "symdepth/complex.hpp"
#include "symdepth/depth.hpp"
#include "symdepth/errors.hpp"
#include "symdepth/ideal.hpp"
#include "symdepth/stanley.hpp"

namespace symdepth {

enum class Quantity { depth, sdepth_ideal, sdepth_quotient };

Quantity parse_quantity(const std::string& name);
std::string quantity_name(Quantity quantity);

struct StabilityOptions {
    DepthEngine engine = DepthEngine::cross_check;
    DepthOptions depth{};
    StanleyOptions stanley{};
    GeneratorLimit generators{};
};

// Lazily computed symbolic powers of one squarefree ideal and the invariants
// of each power. Budget failures propagate as BudgetExceeded.
class PowerCache {
public:
    PowerCache(MonomialIdeal ideal, StabilityOptions options = {});

    const MonomialIdeal& ideal() const { return ideal_; }
    const StabilityOptions& options() const { return options_; }
    const std::vector<PrimeSupport>& primes() const { return primes_; }

    const MonomialIdeal& power(int k);
    const DepthWitness& depth(int k);
    // nullopt for infinity.
    std::optional<int> sdepth(int k, ModuleKind kind);
    const SdepthResult& sdepth_result(int k, ModuleKind kind);
    std::optional<int> value(int k, Quantity quantity);

private:
    MonomialIdeal ideal_;
    StabilityOptions options_;
    std::vector<PrimeSupport> primes_;
    std::map<int, MonomialIdeal> powers_;
    std::map<int, DepthWitness> depths_;
    std::map<std::pair<int, ModuleKind>, SdepthResult> sdepths_;
};

struct SequenceRow {
    int k = 0;
    std::optional<int> value;  // absent when skipped or infinite
    bool infinite = false;
    bool skipped = false;
    std::string skip_reason;
};

struct SequenceReport {
    MonomialIdeal ideal = MonomialIdeal::zero(1);
    Quantity quantity = Quantity::depth;
    int kmax = 0;
    std::vector<SequenceRow> rows;
    int characteristic = 0;
    std::string engine;

    bool complete() const;
};

// values[k] for I^(k), k = 1..kmax. Rows that exceed a budget are marked
// skipped with the reason; nothing is guessed.
SequenceReport sequence(const MonomialIdeal& ideal, Quantity quantity, int kmax, const StabilityOptions& options = {});
SequenceReport sequence(PowerCache& cache, Quantity quantity, int kmax);

struct StabilityReport {
    SequenceReport sequence;
    std::optional<int> window_min;
    std::optional<int> first_attainment;
    long stability_bound = 1;  // max{1, t^2 - t}
    std::string tail_guarantee;
    bool tail_consistent = true;
    std::optional<int> ell_s_estimate;  // depth only: n - window_min
    bool ell_s_exact = false;
    double bight_bound = 0;  // n(n+1) bight^{n/2}
    bool certified = false;
    std::string certification_rule;  // floor | principal | matroid | empty
    std::string reason;
    std::string limit_label;  // "limit" or "upper bound for the limit"
};

StabilityReport analyze_stability(const MonomialIdeal& ideal, Quantity quantity, int kmax,
                                  const StabilityOptions& options = {});
// Analysis of an already computed sequence (the ideal must be squarefree, proper, nonzero).
StabilityReport analyze_sequence(const SequenceReport& sequence);

struct CheckResult {
    std::string name;
    bool pass = true;
    nlohmann::ordered_json details = nlohmann::ordered_json::array();
    std::optional<nlohmann::ordered_json> counterexample;
};

// depth(S/I^(m)) ≥ depth(S/I^(km+j)) for m-k ≤ j ≤ m; j with km+j < 1 is skipped.
CheckResult verify_depth_comparison(PowerCache& cache, int m, int k);
CheckResult verify_depth_comparison(const MonomialIdeal& ideal, int m, int k, const StabilityOptions& options = {});

// sdepth(I^(m)) ≥ sdepth(I^(km+j)) and the same for S/I^(m), same j range.
CheckResult verify_sdepth_comparison(PowerCache& cache, int m, int k);
CheckResult verify_sdepth_comparison(const MonomialIdeal& ideal, int m, int k, const StabilityOptions& options = {});

struct SampleOptions {
    int samples = 100;
    std::uint64_t seed = 1;
    int max_exponent = -1;  // -1: m + 1
};
// u ∈ I^(m) ⟺ u^{k+1} ∈ I^(km+j) on sampled monomials u, checked against the
// computed generators of both symbolic powers.
CheckResult verify_power_membership(PowerCache& cache, int m, int k, const SampleOptions& sampling = {});
CheckResult verify_power_membership(const MonomialIdeal& ideal, int m, int k, const SampleOptions& sampling = {},
                                    const StabilityOptions& options = {});

// (I^(k) : x_1...x_n) = S for k ≤ h and I^(k-h) for k > h. Requires I unmixed.
CheckResult verify_colon_identity(PowerCache& cache, int kmax);
CheckResult verify_colon_identity(const MonomialIdeal& ideal, int kmax, const StabilityOptions& options = {});

// sdepth(J) ≥ min{sdepth(J ∩ S_i), sdepth(J : x_i)} for J = I^(k) and every
// variable i (or only `variable`, zero-based).
CheckResult verify_splitting_bound(PowerCache& cache, int k, std::optional<int> variable = std::nullopt);
CheckResult verify_splitting_bound(const MonomialIdeal& ideal, int k, std::optional<int> variable = std::nullopt,
                                   const StabilityOptions& options = {});

class NotMatroidError : public InputError {
public:
    NotMatroidError(const std::string& what, MatroidCheck check) : InputError(what), check_(check) {}
    const MatroidCheck& check() const { return check_; }

private:
    MatroidCheck check_;
};

struct MatroidRow {
    int k = 0;
    bool skipped = false;
    std::string skip_reason;
    int depth = 0;
    int dim_quotient = 0;  // Krull dimension of S/I^(k)
    bool cohen_macaulay = false;
    std::optional<int> sdepth_quotient;
    std::optional<int> sdepth_ideal;  // nullopt: infinity
    bool depth_matches_dimension = false;
    bool sdepth_quotient_matches_depth = false;
    bool sdepth_ideal_bound = false;
};

struct MatroidReport {
    SimplicialComplex complex = SimplicialComplex::void_complex(0);
    int dim = 0;
    int ell_s = 0;  // n - dim - 1
    std::vector<MatroidRow> rows;
    bool all_claims_hold = true;
    int characteristic = 0;
};

// Throws NotMatroidError when the complex fails the exchange axiom.
MatroidReport matroid_report(const SimplicialComplex& complex, int kmax, const StabilityOptions& options = {});

nlohmann::ordered_json sequence_to_json(const SequenceReport& report);
SequenceReport sequence_from_json(const nlohmann::ordered_json& j);
std::string sequence_to_csv(const SequenceReport& report);
std::string sequence_to_table(const SequenceReport& report);

nlohmann::ordered_json stability_to_json(const StabilityReport& report);
std::string stability_to_table(const StabilityReport& report);

nlohmann::ordered_json check_to_json(const CheckResult& check);
std::string check_to_table(const CheckResult& check);

nlohmann::ordered_json matroid_report_to_json(const MatroidReport& report);
std::string matroid_report_to_table(const MatroidReport& report);

}  // namespace symdepth
