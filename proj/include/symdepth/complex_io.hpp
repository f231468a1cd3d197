#pragma once

#include <string_view>

#include <json.hpp>

#include "symdepth/complex.hpp"

namespace symdepth {

// {"n": 4, "facets": [[1,2],[3,4]]} with 1-based vertices. "facets": [] is
// the void complex and "facets": [[]] the empty complex.
SimplicialComplex complex_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json complex_to_json(const SimplicialComplex& complex);
SimplicialComplex parse_complex(std::string_view contents);

// 1-based vertex lists.
nlohmann::ordered_json set_to_json(VarSet s);
VarSet set_from_json(const nlohmann::ordered_json& j, int n);

}  // namespace symdepth
