#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "symdepth/ideal.hpp"

namespace symdepth {

enum class ModuleKind { ideal, quotient };

ModuleKind parse_kind(const std::string& name);
std::string kind_name(ModuleKind kind);

// Points of the box [0, g] that lie in I (ideal kind) or outside I
// (quotient kind), in lexicographic order.
struct CharacteristicPoset {
    std::vector<int> g;
    ModuleKind kind = ModuleKind::ideal;
    std::vector<std::vector<int>> points;
    int n() const { return static_cast<int>(g.size()); }
};

struct Interval {
    std::vector<int> a;
    std::vector<int> b;
    friend bool operator==(const Interval&, const Interval&) = default;
};

struct IntervalPartition {
    std::vector<Interval> intervals;
    friend bool operator==(const IntervalPartition&, const IntervalPartition&) = default;
};

// |{j : b_j = g_j}|, the dimension of the Stanley space an interval with top b induces.
int interval_rank(const std::vector<int>& b, const std::vector<int>& g);
// min over intervals; n for an empty partition.
int partition_value(const IntervalPartition& partition, const std::vector<int>& g);
// Every interval lies in the poset and every point is covered exactly once.
bool verify_partition(const CharacteristicPoset& poset, const IntervalPartition& partition);

struct SdepthResult {
    ModuleKind kind = ModuleKind::ideal;
    std::optional<int> value;  // nullopt is infinity (zero module)
    std::vector<int> g;
    std::optional<IntervalPartition> witness;

    bool is_infinite() const { return !value.has_value(); }
    friend bool operator==(const SdepthResult&, const SdepthResult&) = default;
};

struct StanleyOptions {
    std::size_t node_limit = 5'000'000;
    double time_limit_seconds = 0;  // 0 disables
};

// g defaults to the join of the generator exponents (0 for the zero ideal).
// Throws InputError for the zero ideal (ideal kind), the unit ideal
// (quotient kind), or a g that does not dominate the join.
CharacteristicPoset characteristic_poset(const MonomialIdeal& ideal, ModuleKind kind,
                                         std::optional<std::vector<int>> g = std::nullopt);

// Exact search for a partition into intervals with rank ≥ s. Throws
// BudgetExceeded when the node or time limit is hit.
std::optional<IntervalPartition> sdepth_at_least(const CharacteristicPoset& poset, int s,
                                                 const StanleyOptions& options = {});

// Stanley depth of I or S/I; infinity for the zero module.
SdepthResult sdepth(const MonomialIdeal& ideal, ModuleKind kind, const StanleyOptions& options = {});
SdepthResult sdepth_on_poset(const CharacteristicPoset& poset, const StanleyOptions& options = {});

// I = I_1 ⊕ x_i (I : x_i) with I_1 = I ∩ K[x_j : j ≠ i] re-indexed to n-1
// variables. Requires n ≥ 1 and a nonzero ideal; i is zero-based.
struct VariableSplit {
    MonomialIdeal restriction;
    MonomialIdeal colon_part;
};
VariableSplit split_by_variable(const MonomialIdeal& ideal, int i);

// v ∈ u K[Z]: u divides v and v/u only involves variables in Z.
bool in_stanley_space(const Monomial& u, VarSet z, const Monomial& v);

nlohmann::ordered_json sdepth_to_json(const SdepthResult& result);
SdepthResult sdepth_from_json(const nlohmann::ordered_json& j);

}  // namespace symdepth
