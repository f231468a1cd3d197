#include "symdepth/homology.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>

#include "symdepth/errors.hpp"

namespace symdepth {

namespace {

struct NarrowOverflow {};

// Bareiss elimination; every intermediate entry is a minor of the input.
long bareiss_rank_narrow(IntMatrix m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m.front().size() : 0;
    std::int64_t prev = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        const std::int64_t p = m[rank][col];
        for (std::size_t i = rank + 1; i < rows; ++i) {
            const std::int64_t f = m[i][col];
            for (std::size_t j = col + 1; j < cols; ++j) {
                const __int128 v = static_cast<__int128>(p) * m[i][j] - static_cast<__int128>(f) * m[rank][j];
                const __int128 q = v / prev;
                if (q > INT64_MAX || q < INT64_MIN) throw NarrowOverflow{};
                m[i][j] = static_cast<std::int64_t>(q);
            }
            m[i][col] = 0;
        }
        prev = p;
        ++rank;
    }
    return static_cast<long>(rank);
}

long bareiss_rank_wide(const IntMatrix& input) {
    using boost::multiprecision::cpp_int;
    std::vector<std::vector<cpp_int>> m;
    m.reserve(input.size());
    for (const auto& row : input) m.emplace_back(row.begin(), row.end());
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m.front().size() : 0;
    cpp_int prev = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j)
                m[i][j] = (m[rank][col] * m[i][j] - m[i][col] * m[rank][j]) / prev;
            m[i][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return static_cast<long>(rank);
}

std::int64_t mod_pow(std::int64_t b, std::int64_t e, std::int64_t p) {
    std::int64_t r = 1;
    b %= p;
    while (e > 0) {
        if (e & 1) r = static_cast<std::int64_t>(static_cast<__int128>(r) * b % p);
        b = static_cast<std::int64_t>(static_cast<__int128>(b) * b % p);
        e >>= 1;
    }
    return r;
}

long modular_rank(IntMatrix m, std::int64_t p) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m.front().size() : 0;
    for (auto& row : m)
        for (auto& x : row) x = ((x % p) + p) % p;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        const std::int64_t inv = mod_pow(m[rank][col], p - 2, p);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (m[i][col] == 0) continue;
            const std::int64_t f = static_cast<std::int64_t>(static_cast<__int128>(m[i][col]) * inv % p);
            for (std::size_t j = col; j < cols; ++j)
                m[i][j] = ((m[i][j] - static_cast<std::int64_t>(static_cast<__int128>(f) * m[rank][j] % p)) % p + p) % p;
        }
        ++rank;
    }
    return static_cast<long>(rank);
}

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

Field Field::prime(int p) {
    if (!is_prime(p)) throw InputError("field characteristic must be 0 or a prime, got " + std::to_string(p));
    return Field{p};
}

long HomologyProfile::at(int i) const {
    const int idx = i + 1;
    if (idx < 0 || idx >= static_cast<int>(dims_.size())) return 0;
    return dims_[idx];
}

bool HomologyProfile::is_zero() const {
    return std::all_of(dims_.begin(), dims_.end(), [](long d) { return d == 0; });
}

std::string HomologyProfile::to_string() const {
    std::string out;
    for (int i = -1; i <= top(); ++i) {
        if (at(i) == 0) continue;
        if (!out.empty()) out += ", ";
        out += "H~_" + std::to_string(i) + "=" + std::to_string(at(i));
    }
    return out.empty() ? "acyclic" : out;
}

long exact_rank(IntMatrix m, Field field) {
    if (m.empty() || m.front().empty()) return 0;
    if (field.characteristic != 0) return modular_rank(std::move(m), field.characteristic);
    try {
        return bareiss_rank_narrow(m);
    } catch (const NarrowOverflow&) {
        return bareiss_rank_wide(m);
    }
}

HomologyProfile reduced_homology_of_faces(std::span<const VarSet> faces, Field field) {
    if (faces.empty()) return HomologyProfile({}, field);
    int top_size = 0;
    VarSet apex_candidates = ~VarSet{0};
    for (VarSet f : faces) top_size = std::max(top_size, popcount(f));
    std::vector<std::vector<VarSet>> by_size(top_size + 1);
    for (VarSet f : faces) by_size[popcount(f)].push_back(f);
    for (auto& level : by_size) std::sort(level.begin(), level.end());

    // A cone over some vertex v (F ∪ {v} a face for every face F) is acyclic.
    if (top_size > 0) {
        for (int s = 0; s <= top_size; ++s)
            for (VarSet f : by_size[s]) {
                const bool maximal =
                    s == top_size || std::none_of(by_size[s + 1].begin(), by_size[s + 1].end(),
                                                  [f](VarSet g) { return is_subset(f, g); });
                if (maximal) apex_candidates &= f;
            }
        if (apex_candidates != 0) return HomologyProfile(std::vector<long>(top_size + 1, 0), field);
    }

    // rank of the boundary map from faces of size s to faces of size s-1
    std::vector<long> ranks(top_size + 2, 0);
    for (int s = 1; s <= top_size; ++s) {
        const auto& dom = by_size[s];
        const auto& cod = by_size[s - 1];
        IntMatrix m(cod.size(), std::vector<std::int64_t>(dom.size(), 0));
        for (std::size_t c = 0; c < dom.size(); ++c) {
            int position = 0;
            for (int v : members(dom[c])) {
                const VarSet boundary = dom[c] & ~(VarSet{1} << v);
                const auto row = std::lower_bound(cod.begin(), cod.end(), boundary) - cod.begin();
                m[row][c] = (position % 2 == 0) ? 1 : -1;
                ++position;
            }
        }
        ranks[s] = exact_rank(std::move(m), field);
    }
    std::vector<long> dims(top_size + 1, 0);
    for (int s = 0; s <= top_size; ++s)
        dims[s] = static_cast<long>(by_size[s].size()) - ranks[s] - (s + 1 <= top_size ? ranks[s + 1] : 0);
    return HomologyProfile(std::move(dims), field);
}

HomologyProfile reduced_homology(const SimplicialComplex& complex, Field field) {
    const auto faces = complex.faces();
    return reduced_homology_of_faces(faces, field);
}

}  // namespace symdepth
