#include "symdepth/complex_io.hpp"

#include "symdepth/errors.hpp"

namespace symdepth {

nlohmann::ordered_json set_to_json(VarSet s) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (int v : members(s)) out.push_back(v + 1);
    return out;
}

VarSet set_from_json(const nlohmann::ordered_json& j, int n) {
    VarSet s = 0;
    for (const auto& v : j) {
        const int vertex = v.get<int>();
        if (vertex < 1 || vertex > n) throw InputError("vertex " + std::to_string(vertex) + " outside [1, n]");
        s |= VarSet{1} << (vertex - 1);
    }
    return s;
}

SimplicialComplex complex_from_json(const nlohmann::ordered_json& j) {
    try {
        if (!j.is_object() || !j.contains("n") || !j.contains("facets"))
            throw InputError("complex JSON needs keys \"n\" and \"facets\"");
        const int n = j.at("n").get<int>();
        if (n < 0 || n > kMaxVariables) throw InputError("vertex count out of range");
        std::vector<VarSet> facets;
        for (const auto& f : j.at("facets")) facets.push_back(set_from_json(f, n));
        return SimplicialComplex::from_facets(n, std::move(facets));
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed complex JSON: ") + e.what());
    }
}

nlohmann::ordered_json complex_to_json(const SimplicialComplex& complex) {
    nlohmann::ordered_json facets = nlohmann::ordered_json::array();
    for (VarSet f : complex.facets()) facets.push_back(set_to_json(f));
    return {{"n", complex.n()}, {"facets", facets}};
}

SimplicialComplex parse_complex(std::string_view contents) {
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(contents);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    return complex_from_json(j);
}

}  // namespace symdepth
