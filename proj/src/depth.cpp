#include "symdepth/depth.hpp"

#include <algorithm>
#include <limits>

#include "symdepth/errors.hpp"
#include "symdepth/parallel.hpp"

namespace symdepth {

namespace {

struct Candidate {
    int cohomological_degree = std::numeric_limits<int>::max();
    std::vector<int> alpha_plus;
    VarSet cosupport = 0;
    int homology_index = 0;

    bool found() const { return cohomological_degree != std::numeric_limits<int>::max(); }
};

bool better(const Candidate& a, const Candidate& b) {
    if (a.cohomological_degree != b.cohomological_degree) return a.cohomological_degree < b.cohomological_degree;
    if (popcount(a.cosupport) != popcount(b.cosupport)) return popcount(a.cosupport) < popcount(b.cosupport);
    if (a.alpha_plus != b.alpha_plus) return a.alpha_plus < b.alpha_plus;
    return face_less(a.cosupport, b.cosupport);
}

std::vector<VarSet> ordered_submasks(VarSet set) {
    std::vector<VarSet> out;
    for (VarSet s = set;; s = (s - 1) & set) {
        out.push_back(s);
        if (s == 0) break;
    }
    std::sort(out.begin(), out.end(), face_less);
    return out;
}

// Same construction as takayama_faces, with early exits for the void and
// cone cases that dominate the search.
bool takayama_cell_may_carry_homology(const MonomialIdeal& ideal, const std::vector<int>& alpha, VarSet cosupport,
                                      std::vector<VarSet>& scratch) {
    scratch.clear();
    VarSet covered = 0;
    for (const auto& g : ideal.generators()) {
        VarSet exceed = 0;
        for (int i = 0; i < ideal.n(); ++i)
            if (g[i] > alpha[i]) exceed |= VarSet{1} << i;
        exceed &= ~cosupport;
        if (exceed == 0) return false;  // void complex
        scratch.push_back(exceed);
    }
    // minimal non-faces only: a vertex in no minimal non-face is a cone apex
    for (VarSet s : scratch) {
        const bool minimal = std::none_of(scratch.begin(), scratch.end(),
                                          [s](VarSet t) { return t != s && is_subset(t, s); });
        if (minimal) covered |= s;
    }
    const VarSet ground = full_set(ideal.n()) & ~cosupport;
    return covered == ground;
}

}  // namespace

DepthEngine parse_engine(const std::string& name) {
    if (name == "takayama") return DepthEngine::takayama;
    if (name == "betti") return DepthEngine::betti;
    if (name == "cross_check" || name == "cross-check") return DepthEngine::cross_check;
    throw InputError("unknown depth engine '" + name + "'");
}

std::string engine_name(DepthEngine engine) {
    switch (engine) {
        case DepthEngine::takayama: return "takayama";
        case DepthEngine::betti: return "betti";
        case DepthEngine::cross_check: return "cross_check";
    }
    return "unknown";
}

DepthWitness depth_via_takayama(const MonomialIdeal& ideal, const DepthOptions& options) {
    if (ideal.is_unit()) throw InputError("depth of the zero module is undefined");
    const int n = ideal.n();
    auto range = ideal.max_degrees();
    for (int& r : range) r = std::max(r - 1, 0);
    std::size_t cells = 1;
    for (int r : range) cells *= static_cast<std::size_t>(r + 1);

    std::vector<Candidate> best(std::max(1u, options.threads));
    for_each_chunk(cells, options.threads, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
        Candidate& local = best[chunk];
        std::vector<int> alpha(n);
        std::vector<VarSet> scratch;
        for (std::size_t cell = begin; cell < end; ++cell) {
            std::size_t rest = cell;
            for (int i = n - 1; i >= 0; --i) {
                alpha[i] = static_cast<int>(rest % (range[i] + 1));
                rest /= range[i] + 1;
            }
            VarSet support = 0;
            for (int i = 0; i < n; ++i)
                if (alpha[i] > 0) support |= VarSet{1} << i;
            for (VarSet cosupport : ordered_submasks(full_set(n) & ~support)) {
                const int csize = popcount(cosupport);
                if (local.found() && csize > local.cohomological_degree) break;
                if (!takayama_cell_may_carry_homology(ideal, alpha, cosupport, scratch)) continue;
                const auto faces = takayama_faces(ideal, alpha, cosupport);
                const auto homology = reduced_homology_of_faces(faces, options.field);
                for (int h = -1; h <= homology.top(); ++h) {
                    if (homology.at(h) == 0) continue;
                    Candidate c{h + csize + 1, alpha, cosupport, h};
                    if (!local.found() || better(c, local)) local = std::move(c);
                    break;
                }
            }
        }
    });
    Candidate winner;
    for (auto& c : best)
        if (c.found() && (!winner.found() || better(c, winner))) winner = std::move(c);
    if (!winner.found()) throw CrossCheckError("Takayama search found no nonvanishing local cohomology");

    DepthWitness w;
    w.depth = winner.cohomological_degree;
    w.engine = DepthEngine::takayama;
    w.takayama = TakayamaWitness{DegreePair{winner.alpha_plus, winner.cosupport}, winner.homology_index};
    w.characteristic = options.field.characteristic;
    return w;
}

DepthWitness depth_via_betti(const MonomialIdeal& ideal, const DepthOptions& options) {
    if (ideal.is_unit()) throw InputError("depth of the zero module is undefined");
    const auto table = betti_table(ideal, BettiOptions{options.field, options.threads});
    const int pd = table.projective_dimension();
    DepthWitness w;
    w.depth = ideal.n() - pd;
    w.engine = DepthEngine::betti;
    for (const auto& [key, value] : table.entries())
        if (key.first == pd && value != 0) {
            w.betti = BettiWitness{pd, key.second};
            break;
        }
    w.characteristic = options.field.characteristic;
    return w;
}

DepthWitness depth(const MonomialIdeal& ideal, DepthEngine engine, const DepthOptions& options) {
    switch (engine) {
        case DepthEngine::takayama: return depth_via_takayama(ideal, options);
        case DepthEngine::betti: return depth_via_betti(ideal, options);
        case DepthEngine::cross_check: break;
    }
    auto local = depth_via_takayama(ideal, options);
    auto betti = depth_via_betti(ideal, options);
    if (local.depth != betti.depth)
        throw CrossCheckError("depth engines disagree on " + ideal.to_string() + ": takayama " +
                              witness_to_json(local).dump() + " vs betti " + witness_to_json(betti).dump());
    local.engine = DepthEngine::cross_check;
    local.betti = betti.betti;
    return local;
}

bool witness_reproduces(const MonomialIdeal& ideal, const DepthWitness& witness) {
    const Field field = witness.characteristic == 0 ? Field{} : Field::prime(witness.characteristic);
    if (witness.takayama) {
        const auto& t = *witness.takayama;
        const auto faces = takayama_faces(ideal, t.degree.alpha_plus, t.degree.cosupport);
        const auto homology = reduced_homology_of_faces(faces, field);
        if (homology.at(t.homology_index) == 0) return false;
        if (t.homology_index + popcount(t.degree.cosupport) + 1 != witness.depth) return false;
    }
    if (witness.betti) {
        const auto& b = *witness.betti;
        if (ideal.n() - b.index != witness.depth) return false;
        if (b.index == 0) {
            if (std::any_of(b.multidegree.begin(), b.multidegree.end(), [](int e) { return e != 0; })) return false;
        } else {
            const auto homology = reduced_homology(upper_koszul_complex(ideal, b.multidegree), field);
            if (homology.at(b.index - 2) == 0) return false;
        }
    }
    return witness.takayama || witness.betti;
}

nlohmann::ordered_json witness_to_json(const DepthWitness& witness) {
    nlohmann::ordered_json j;
    j["depth"] = witness.depth;
    j["engine"] = engine_name(witness.engine);
    if (witness.takayama) {
        const auto& t = *witness.takayama;
        j["alpha_plus"] = t.degree.alpha_plus;
        std::vector<int> cosupport;
        for (int v : members(t.degree.cosupport)) cosupport.push_back(v + 1);
        j["cosupport"] = cosupport;
        j["homology_index"] = t.homology_index;
    }
    if (witness.betti) {
        j["betti_index"] = witness.betti->index;
        j["multidegree"] = witness.betti->multidegree;
    }
    j["char"] = witness.characteristic;
    return j;
}

DepthWitness witness_from_json(const nlohmann::ordered_json& j) {
    try {
        DepthWitness w;
        w.depth = j.at("depth").get<int>();
        w.engine = parse_engine(j.at("engine").get<std::string>());
        w.characteristic = j.at("char").get<int>();
        if (j.contains("alpha_plus")) {
            VarSet cosupport = 0;
            for (int v : j.at("cosupport").get<std::vector<int>>()) {
                if (v < 1 || v > kMaxVariables) throw InputError("cosupport vertex out of range");
                cosupport |= VarSet{1} << (v - 1);
            }
            w.takayama = TakayamaWitness{DegreePair::make(j.at("alpha_plus").get<std::vector<int>>(), cosupport),
                                         j.at("homology_index").get<int>()};
        }
        if (j.contains("betti_index"))
            w.betti = BettiWitness{j.at("betti_index").get<int>(), j.at("multidegree").get<std::vector<int>>()};
        return w;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed depth witness: ") + e.what());
    }
}

}  // namespace symdepth
