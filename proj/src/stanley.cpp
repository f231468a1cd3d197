#include "symdepth/stanley.hpp"

#include <algorithm>
#include <chrono>
#include <unordered_set>

#include "symdepth/errors.hpp"

namespace symdepth {

namespace {

// Exact-cover search over the box [0, g], points addressed by mixed-radix index.
class IntervalSearch {
public:
    IntervalSearch(const CharacteristicPoset& poset, int s, const StanleyOptions& options)
        : g_(poset.g), n_(poset.n()), s_(s), options_(options) {
        strides_.assign(n_, 1);
        for (int j = n_ - 2; j >= 0; --j) strides_[j] = strides_[j + 1] * (g_[j + 1] + 1);
        std::size_t size = 1;
        for (int x : g_) size *= static_cast<std::size_t>(x + 1);
        coords_.resize(size);
        for (std::size_t idx = 0; idx < size; ++idx) {
            coords_[idx].resize(n_);
            std::size_t rest = idx;
            for (int j = 0; j < n_; ++j) {
                coords_[idx][j] = static_cast<int>(rest / strides_[j]);
                rest %= strides_[j];
            }
        }
        free_.assign(size, 0);
        for (const auto& p : poset.points) free_[index_of(p)] = 1;
        remaining_ = poset.points.size();
        if (options_.time_limit_seconds > 0)
            deadline_ = std::chrono::steady_clock::now() +
                        std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                            std::chrono::duration<double>(options_.time_limit_seconds));
    }

    std::optional<IntervalPartition> run() {
        if (!solve()) return std::nullopt;
        IntervalPartition out;
        for (const auto& [a, b] : chosen_) out.intervals.push_back(Interval{coords_[a], coords_[b]});
        std::sort(out.intervals.begin(), out.intervals.end(), [](const Interval& x, const Interval& y) {
            return std::tie(x.a, x.b) < std::tie(y.a, y.b);
        });
        return out;
    }

    // Largest rank reachable from each free point, ignoring all other points.
    int rank_upper_bound() {
        int bound = n_;
        for (std::size_t idx = 0; idx < free_.size(); ++idx) {
            if (!free_[idx]) continue;
            int best = 0;
            for (std::size_t top : tops_from(idx, /*min_rank=*/0)) best = std::max(best, rank(top));
            bound = std::min(bound, best);
        }
        return bound;
    }

private:
    std::size_t index_of(const std::vector<int>& c) const {
        std::size_t idx = 0;
        for (int j = 0; j < n_; ++j) idx += static_cast<std::size_t>(c[j]) * strides_[j];
        return idx;
    }

    int rank(std::size_t idx) const {
        int r = 0;
        for (int j = 0; j < n_; ++j) r += coords_[idx][j] == g_[j];
        return r;
    }

    // Calls f on every box index c with lo ≤ c ≤ hi; stops early when f returns false.
    template <class F>
    bool for_each_in(const std::vector<int>& lo, const std::vector<int>& hi, F&& f) const {
        std::vector<int> c = lo;
        while (true) {
            if (!f(index_of(c))) return false;
            int j = n_ - 1;
            while (j >= 0 && c[j] == hi[j]) {
                c[j] = lo[j];
                --j;
            }
            if (j < 0) return true;
            ++c[j];
        }
    }

    // Tops b with [a, b] inside the free points and rank(b) ≥ min_rank.
    std::vector<std::size_t> tops_from(std::size_t a, int min_rank) const {
        std::vector<std::size_t> tops;
        const auto& lo = coords_[a];
        std::vector<int> b = lo;
        auto grow = [&](auto&& self, int j) -> void {
            if (j == n_) {
                const std::size_t top = index_of(b);
                if (rank(top) >= min_rank) tops.push_back(top);
                return;
            }
            for (int v = lo[j]; v <= g_[j]; ++v) {
                b[j] = v;
                // new slab: points of [lo, b] with coordinate j equal to v
                std::vector<int> slab_lo = lo, slab_hi = b;
                slab_lo[j] = v;
                const bool ok = for_each_in(slab_lo, slab_hi, [&](std::size_t idx) { return free_[idx] != 0; });
                if (!ok) break;
                self(self, j + 1);
            }
            b[j] = lo[j];
        };
        grow(grow, 0);
        std::sort(tops.begin(), tops.end(), [&](std::size_t x, std::size_t y) {
            const long vx = volume(a, x), vy = volume(a, y);
            if (vx != vy) return vx > vy;
            if (rank(x) != rank(y)) return rank(x) > rank(y);
            return x < y;
        });
        return tops;
    }

    long volume(std::size_t a, std::size_t b) const {
        long v = 1;
        for (int j = 0; j < n_; ++j) v *= coords_[b][j] - coords_[a][j] + 1;
        return v;
    }

    bool locally_minimal(std::size_t idx) const {
        for (int j = 0; j < n_; ++j)
            if (coords_[idx][j] > 0 && free_[idx - strides_[j]]) return false;
        return true;
    }

    void mark(std::size_t a, std::size_t b, char value) {
        for_each_in(coords_[a], coords_[b], [&](std::size_t idx) {
            free_[idx] = value;
            return true;
        });
        const auto vol = static_cast<std::size_t>(volume(a, b));
        remaining_ = value ? remaining_ + vol : remaining_ - vol;
    }

    void tick() {
        if (++nodes_ > options_.node_limit)
            throw BudgetExceeded("Stanley depth search exceeded " + std::to_string(options_.node_limit) + " nodes");
        if (deadline_ && (nodes_ & 1023) == 0 && std::chrono::steady_clock::now() > *deadline_)
            throw BudgetExceeded("Stanley depth search exceeded its time limit");
    }

    bool solve() {
        tick();
        if (remaining_ == 0) return true;
        const std::string state(free_.begin(), free_.end());
        if (dead_.count(state)) return false;

        std::size_t pick = 0;
        std::vector<std::size_t> pick_tops;
        bool have = false;
        for (std::size_t idx = 0; idx < free_.size(); ++idx) {
            if (!free_[idx] || !locally_minimal(idx)) continue;
            auto tops = tops_from(idx, s_);
            if (!have || tops.size() < pick_tops.size()) {
                pick = idx;
                pick_tops = std::move(tops);
                have = true;
                if (pick_tops.empty()) break;
            }
        }
        for (std::size_t top : pick_tops) {
            mark(pick, top, 0);
            chosen_.emplace_back(pick, top);
            if (solve()) return true;
            chosen_.pop_back();
            mark(pick, top, 1);
        }
        dead_.insert(state);
        return false;
    }

    std::vector<int> g_;
    int n_;
    int s_;
    StanleyOptions options_;
    std::vector<std::size_t> strides_;
    std::vector<std::vector<int>> coords_;
    std::vector<char> free_;  // in the poset and not yet covered
    std::size_t remaining_ = 0;
    std::vector<std::pair<std::size_t, std::size_t>> chosen_;
    std::unordered_set<std::string> dead_;
    std::size_t nodes_ = 0;
    std::optional<std::chrono::steady_clock::time_point> deadline_;
};

}  // namespace

ModuleKind parse_kind(const std::string& name) {
    if (name == "ideal") return ModuleKind::ideal;
    if (name == "quotient") return ModuleKind::quotient;
    throw InputError("unknown module kind '" + name + "' (expected ideal or quotient)");
}

std::string kind_name(ModuleKind kind) { return kind == ModuleKind::ideal ? "ideal" : "quotient"; }

int interval_rank(const std::vector<int>& b, const std::vector<int>& g) {
    int r = 0;
    for (std::size_t j = 0; j < g.size(); ++j) r += b[j] == g[j];
    return r;
}

int partition_value(const IntervalPartition& partition, const std::vector<int>& g) {
    int value = static_cast<int>(g.size());
    for (const auto& iv : partition.intervals) value = std::min(value, interval_rank(iv.b, g));
    return value;
}

bool verify_partition(const CharacteristicPoset& poset, const IntervalPartition& partition) {
    const int n = poset.n();
    std::vector<std::vector<int>> covered;
    for (const auto& iv : partition.intervals) {
        if (static_cast<int>(iv.a.size()) != n || static_cast<int>(iv.b.size()) != n) return false;
        for (int j = 0; j < n; ++j)
            if (iv.a[j] > iv.b[j] || iv.a[j] < 0 || iv.b[j] > poset.g[j]) return false;
        std::vector<int> c = iv.a;
        while (true) {
            covered.push_back(c);
            int j = n - 1;
            while (j >= 0 && c[j] == iv.b[j]) {
                c[j] = iv.a[j];
                --j;
            }
            if (j < 0) break;
            ++c[j];
        }
    }
    std::sort(covered.begin(), covered.end());
    return covered == poset.points;  // points are sorted and distinct
}

CharacteristicPoset characteristic_poset(const MonomialIdeal& ideal, ModuleKind kind,
                                         std::optional<std::vector<int>> g) {
    if (kind == ModuleKind::ideal && ideal.is_zero())
        throw InputError("the ideal-kind poset of the zero ideal is empty");
    if (kind == ModuleKind::quotient && ideal.is_unit())
        throw InputError("the quotient-kind poset of the unit ideal is empty");
    const auto join = ideal.max_degrees();
    CharacteristicPoset poset;
    poset.kind = kind;
    poset.g = g.value_or(join);
    if (poset.n() != ideal.n()) throw InputError("box corner has wrong length");
    for (int j = 0; j < ideal.n(); ++j)
        if (poset.g[j] < join[j]) throw InputError("box corner must dominate the generator exponents");

    std::vector<int> c(ideal.n(), 0);
    while (true) {
        const bool member = ideal.contains(Monomial(c));
        if (member == (kind == ModuleKind::ideal)) poset.points.push_back(c);
        int j = ideal.n() - 1;
        while (j >= 0 && c[j] == poset.g[j]) {
            c[j] = 0;
            --j;
        }
        if (j < 0) break;
        ++c[j];
    }
    return poset;
}

std::optional<IntervalPartition> sdepth_at_least(const CharacteristicPoset& poset, int s,
                                                 const StanleyOptions& options) {
    if (s < 0 || s > poset.n()) throw InputError("sdepth threshold outside [0, n]");
    return IntervalSearch(poset, s, options).run();
}

SdepthResult sdepth_on_poset(const CharacteristicPoset& poset, const StanleyOptions& options) {
    SdepthResult result;
    result.kind = poset.kind;
    result.g = poset.g;
    int lo = 0;
    int hi = IntervalSearch(poset, 0, options).rank_upper_bound();
    std::optional<IntervalPartition> witness;
    while (lo < hi) {
        const int mid = (lo + hi + 1) / 2;
        if (auto p = sdepth_at_least(poset, mid, options)) {
            lo = mid;
            witness = std::move(p);
        } else {
            hi = mid - 1;
        }
    }
    if (!witness) witness = sdepth_at_least(poset, lo, options);
    result.value = lo;
    result.witness = std::move(witness);
    return result;
}

SdepthResult sdepth(const MonomialIdeal& ideal, ModuleKind kind, const StanleyOptions& options) {
    if ((kind == ModuleKind::ideal && ideal.is_zero()) || (kind == ModuleKind::quotient && ideal.is_unit())) {
        SdepthResult result;
        result.kind = kind;
        result.g = ideal.max_degrees();
        return result;
    }
    return sdepth_on_poset(characteristic_poset(ideal, kind), options);
}

VariableSplit split_by_variable(const MonomialIdeal& ideal, int i) {
    if (i < 0 || i >= ideal.n()) throw InputError("split variable outside [1, n]");
    if (ideal.is_zero()) throw InputError("split_by_variable requires a nonzero ideal");
    std::vector<Monomial> kept;
    for (const auto& g : ideal.generators()) {
        if (g[i] != 0) continue;
        std::vector<int> e;
        for (int j = 0; j < ideal.n(); ++j)
            if (j != i) e.push_back(g[j]);
        kept.emplace_back(std::move(e));
    }
    return VariableSplit{MonomialIdeal::normalize(std::move(kept), ideal.n() - 1),
                         colon(ideal, Monomial::variable(ideal.n(), i))};
}

bool in_stanley_space(const Monomial& u, VarSet z, const Monomial& v) {
    if (!u.divides(v)) return false;
    return is_subset((v / u).support(), z);
}

nlohmann::ordered_json sdepth_to_json(const SdepthResult& result) {
    nlohmann::ordered_json j;
    j["kind"] = kind_name(result.kind);
    if (result.value)
        j["value"] = *result.value;
    else
        j["value"] = "infinity";
    j["g"] = result.g;
    nlohmann::ordered_json intervals = nlohmann::ordered_json::array();
    if (result.witness)
        for (const auto& iv : result.witness->intervals) intervals.push_back({iv.a, iv.b});
    j["intervals"] = intervals;
    return j;
}

SdepthResult sdepth_from_json(const nlohmann::ordered_json& j) {
    try {
        SdepthResult r;
        r.kind = parse_kind(j.at("kind").get<std::string>());
        r.g = j.at("g").get<std::vector<int>>();
        const auto& value = j.at("value");
        if (value.is_string()) {
            if (value.get<std::string>() != "infinity") throw InputError("sdepth value must be an integer or \"infinity\"");
        } else {
            r.value = value.get<int>();
            IntervalPartition p;
            for (const auto& iv : j.at("intervals"))
                p.intervals.push_back(Interval{iv.at(0).get<std::vector<int>>(), iv.at(1).get<std::vector<int>>()});
            r.witness = std::move(p);
        }
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed sdepth result: ") + e.what());
    }
}

}  // namespace symdepth
