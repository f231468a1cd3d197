#include "symdepth/ideal_io.hpp"

#include <cctype>
#include <optional>
#include <charconv>
#include <fstream>
#include <sstream>

#include "symdepth/errors.hpp"

namespace symdepth {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

int parse_int(std::string_view s, std::string_view what) {
    s = trim(s);
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw InputError("invalid " + std::string(what) + ": '" + std::string(s) + "'");
    return value;
}

}  // namespace

MonomialIdeal ideal_from_json(const nlohmann::ordered_json& j) {
    try {
        if (!j.is_object() || !j.contains("n") || !j.contains("generators"))
            throw InputError("ideal JSON needs keys \"n\" and \"generators\"");
        const int n = j.at("n").get<int>();
        std::vector<Monomial> gens;
        for (const auto& g : j.at("generators")) {
            auto e = g.get<std::vector<int>>();
            for (int x : e)
                if (x < 0) throw InputError("negative exponent in ideal JSON");
            gens.emplace_back(std::move(e));
        }
        return MonomialIdeal::normalize(std::move(gens), n);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed ideal JSON: ") + e.what());
    }
}

nlohmann::ordered_json ideal_to_json(const MonomialIdeal& ideal) {
    nlohmann::ordered_json gens = nlohmann::ordered_json::array();
    for (const auto& g : ideal.generators())
        gens.push_back(std::vector<int>(g.exponents().begin(), g.exponents().end()));
    return {{"n", ideal.n()}, {"generators", gens}};
}

Monomial parse_monomial(std::string_view token, int n) {
    token = trim(token);
    if (token == "1") return Monomial::one(n);
    std::vector<int> e(n, 0);
    std::size_t pos = 0;
    while (pos <= token.size()) {
        const std::size_t star = token.find('*', pos);
        const std::string_view factor =
            trim(token.substr(pos, star == std::string_view::npos ? std::string_view::npos : star - pos));
        if (factor.size() < 2 || factor.front() != 'x')
            throw InputError("invalid monomial factor '" + std::string(factor) + "'");
        const std::size_t caret = factor.find('^');
        const int var = parse_int(factor.substr(1, caret == std::string_view::npos ? std::string_view::npos
                                                                                 : caret - 1),
                                  "variable index");
        const int power = caret == std::string_view::npos ? 1 : parse_int(factor.substr(caret + 1), "exponent");
        if (var < 1 || var > n)
            throw InputError("variable x" + std::to_string(var) + " outside ring of size " + std::to_string(n));
        if (power < 0) throw InputError("negative exponent in monomial");
        e[var - 1] += power;
        if (star == std::string_view::npos) break;
        pos = star + 1;
    }
    return Monomial(std::move(e));
}

MonomialIdeal ideal_from_text(std::string_view text) {
    std::optional<int> n;
    std::vector<std::string> lines;
    std::istringstream in{std::string(text)};
    for (std::string line; std::getline(in, line);) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto body = trim(line);
        if (body.empty()) continue;
        if (!n && body.substr(0, 1) == "n") {
            const auto eq = body.find('=');
            if (eq == std::string_view::npos || trim(body.substr(0, eq)) != "n")
                throw InputError("expected ring declaration 'n=<count>'");
            n = parse_int(body.substr(eq + 1), "ring size");
            continue;
        }
        if (!n) throw InputError("ring size 'n=<count>' must precede the generators");
        lines.emplace_back(body);
    }
    if (!n) throw InputError("missing ring declaration 'n=<count>'");
    if (*n < 1 || *n > kMaxVariables) throw InputError("ring size out of range");
    std::vector<Monomial> gens;
    for (const auto& l : lines) gens.push_back(parse_monomial(l, *n));
    return MonomialIdeal::normalize(std::move(gens), *n);
}

std::string ideal_to_text(const MonomialIdeal& ideal) {
    std::string out = "n=" + std::to_string(ideal.n()) + "\n";
    for (const auto& g : ideal.generators()) out += g.to_string() + "\n";
    return out;
}

MonomialIdeal parse_ideal(std::string_view contents) {
    const auto body = trim(contents);
    if (!body.empty() && body.front() == '{') {
        nlohmann::ordered_json j;
        try {
            j = nlohmann::ordered_json::parse(body);
        } catch (const nlohmann::json::exception& e) {
            throw InputError(std::string("malformed JSON: ") + e.what());
        }
        return ideal_from_json(j);
    }
    return ideal_from_text(contents);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

MonomialIdeal read_ideal_file(const std::string& path) { return parse_ideal(read_file(path)); }

}  // namespace symdepth
