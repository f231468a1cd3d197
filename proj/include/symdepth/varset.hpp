#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace symdepth {

// Subsets of [n] as bitmasks; bit i stands for variable/vertex i+1.
using VarSet = std::uint32_t;

// Face and subset enumeration is exponential in n, so the ambient size is capped.
inline constexpr int kMaxVariables = 20;

inline int popcount(VarSet s) { return std::popcount(s); }

inline VarSet full_set(int n) { return n >= 32 ? ~VarSet{0} : (VarSet{1} << n) - 1; }

inline bool contains_var(VarSet s, int i) { return (s >> i) & 1u; }

inline bool is_subset(VarSet a, VarSet b) { return (a & ~b) == 0; }

// Zero-based indices of the members, ascending.
inline std::vector<int> members(VarSet s) {
    std::vector<int> out;
    for (int i = 0; s != 0; ++i, s >>= 1)
        if (s & 1u) out.push_back(i);
    return out;
}

}  // namespace symdepth
