#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "symdepth/ideal.hpp"

namespace symdepth {

// JSON form: {"n": 3, "generators": [[1,1,0],[1,0,1],[0,1,1]]}.
MonomialIdeal ideal_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json ideal_to_json(const MonomialIdeal& ideal);

// Text form: a line "n=3" followed by one monomial per line ("x1*x2^2",
// "1" for the unit ideal). Blank lines and '#' comments are ignored; no
// monomial lines means the zero ideal.
MonomialIdeal ideal_from_text(std::string_view text);
std::string ideal_to_text(const MonomialIdeal& ideal);

Monomial parse_monomial(std::string_view token, int n);

// Dispatches on the first non-blank character: '{' selects JSON.
MonomialIdeal parse_ideal(std::string_view contents);
MonomialIdeal read_ideal_file(const std::string& path);

std::string read_file(const std::string& path);

}  // namespace symdepth
