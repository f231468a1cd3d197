#include "symdepth/takayama.hpp"

#include <algorithm>

#include "symdepth/errors.hpp"

namespace symdepth {

namespace {

// Minimal members of {B(g) ∖ C}, where B(g) = {i : g_i > α_i}. F ⊆ [n]∖C is
// a face iff it contains none of them.
std::vector<VarSet> minimal_nonfaces(const MonomialIdeal& ideal, const std::vector<int>& alpha, VarSet cosupport) {
    std::vector<VarSet> raw;
    raw.reserve(ideal.size());
    for (const auto& g : ideal.generators()) {
        VarSet exceed = 0;
        for (int i = 0; i < ideal.n(); ++i)
            if (g[i] > alpha[i]) exceed |= VarSet{1} << i;
        raw.push_back(exceed & ~cosupport);
    }
    std::sort(raw.begin(), raw.end(), [](VarSet a, VarSet b) {
        return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b;
    });
    std::vector<VarSet> out;
    for (VarSet s : raw)
        if (std::none_of(out.begin(), out.end(), [s](VarSet t) { return is_subset(t, s); })) out.push_back(s);
    return out;
}

}  // namespace

DegreePair DegreePair::make(std::vector<int> alpha_plus, VarSet cosupport) {
    VarSet support = 0;
    for (std::size_t i = 0; i < alpha_plus.size(); ++i) {
        if (alpha_plus[i] < 0) throw InputError("alpha_plus must be nonnegative");
        if (alpha_plus[i] > 0) support |= VarSet{1} << i;
    }
    if (!is_subset(cosupport, full_set(static_cast<int>(alpha_plus.size()))))
        throw InputError("cosupport outside [n]");
    if ((support & cosupport) != 0) throw InputError("cosupport meets the support of alpha_plus");
    return DegreePair{std::move(alpha_plus), cosupport};
}

std::vector<VarSet> takayama_faces(const MonomialIdeal& ideal, const std::vector<int>& alpha_plus,
                                   VarSet cosupport) {
    if (static_cast<int>(alpha_plus.size()) != ideal.n()) throw InputError("degree has wrong length");
    const auto nonfaces = minimal_nonfaces(ideal, alpha_plus, cosupport);
    std::vector<VarSet> faces;
    if (!nonfaces.empty() && nonfaces.front() == 0) return faces;  // void
    const VarSet ground = full_set(ideal.n()) & ~cosupport;
    for (VarSet f = ground;; f = (f - 1) & ground) {
        if (std::none_of(nonfaces.begin(), nonfaces.end(), [f](VarSet t) { return is_subset(t, f); }))
            faces.push_back(f);
        if (f == 0) break;
    }
    std::sort(faces.begin(), faces.end(), face_less);
    return faces;
}

SimplicialComplex takayama_complex(const MonomialIdeal& ideal, const std::vector<int>& alpha_plus,
                                   VarSet cosupport) {
    return SimplicialComplex::from_facets(ideal.n(), maximal_sets(takayama_faces(ideal, alpha_plus, cosupport)));
}

SimplicialComplex takayama_complex(const MonomialIdeal& ideal, const DegreePair& degree) {
    return takayama_complex(ideal, degree.alpha_plus, degree.cosupport);
}

}  // namespace symdepth
