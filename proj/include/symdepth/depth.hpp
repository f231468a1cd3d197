#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "symdepth/betti.hpp"
#include "symdepth/homology.hpp"
#include "symdepth/ideal.hpp"
#include "symdepth/takayama.hpp"

namespace symdepth {

enum class DepthEngine { takayama, betti, cross_check };

DepthEngine parse_engine(const std::string& name);
std::string engine_name(DepthEngine engine);

// Nonvanishing local cohomology: H~_{homology_index}(Δ_α(I)) ≠ 0 puts
// H^i_m(S/I)_α ≠ 0 at i = homology_index + |cosupport| + 1.
struct TakayamaWitness {
    DegreePair degree;
    int homology_index = 0;
    friend bool operator==(const TakayamaWitness&, const TakayamaWitness&) = default;
};

// β_{index, multidegree}(S/I) ≠ 0 with index = pd(S/I).
struct BettiWitness {
    int index = 0;
    std::vector<int> multidegree;
    friend bool operator==(const BettiWitness&, const BettiWitness&) = default;
};

struct DepthWitness {
    int depth = 0;
    DepthEngine engine = DepthEngine::takayama;
    std::optional<TakayamaWitness> takayama;
    std::optional<BettiWitness> betti;
    int characteristic = 0;
    friend bool operator==(const DepthWitness&, const DepthWitness&) = default;
};

struct DepthOptions {
    Field field{};
    unsigned threads = 1;
};

// Takayama search over α_+ in the box ∏[0, ρ_j - 1] and cosupports disjoint
// from Supp(α_+). The witness minimizes (i, |C|, α_+ lexicographic, C).
DepthWitness depth_via_takayama(const MonomialIdeal& ideal, const DepthOptions& options = {});
// n - pd(S/I) from the multigraded Betti table.
DepthWitness depth_via_betti(const MonomialIdeal& ideal, const DepthOptions& options = {});
// cross_check runs both engines and throws CrossCheckError on disagreement.
DepthWitness depth(const MonomialIdeal& ideal, DepthEngine engine = DepthEngine::cross_check,
                   const DepthOptions& options = {});

// Recomputes the witnessed homology or Betti number; true iff it is nonzero
// and consistent with the reported depth.
bool witness_reproduces(const MonomialIdeal& ideal, const DepthWitness& witness);

nlohmann::ordered_json witness_to_json(const DepthWitness& witness);
DepthWitness witness_from_json(const nlohmann::ordered_json& j);

}  // namespace symdepth
