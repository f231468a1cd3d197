#include "symdepth/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "symdepth/betti.hpp"
#include "symdepth/complex.hpp"
#include "symdepth/complex_io.hpp"
#include "symdepth/depth.hpp"
#include "symdepth/errors.hpp"
#include "symdepth/ideal.hpp"
#include "symdepth/ideal_io.hpp"
#include "symdepth/stability.hpp"
#include "symdepth/stanley.hpp"

namespace symdepth {

namespace {

using ojson = nlohmann::ordered_json;

enum class Format { json, table, csv };

struct Settings {
    std::string input;
    std::string format = "json";
    std::string engine = "cross_check";
    std::string kind = "ideal";
    std::string quantity = "depth";
    int characteristic = 0;
    unsigned threads = 1;
    std::size_t budget = StanleyOptions{}.node_limit;
    double time_limit = 0;
    std::size_t max_generators = 0;
    int kmax = 3;
    int m = 1;
    int k = 1;
    int samples = 100;
    std::uint64_t seed = 1;
    int max_exponent = -1;
    int variable = 0;  // 1-based; 0 means every variable
};

std::string read_input(const std::string& path) {
    if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
    return read_file(path);
}

MonomialIdeal load_ideal(const Settings& s) { return parse_ideal(read_input(s.input)); }
SimplicialComplex load_complex(const Settings& s) { return parse_complex(read_input(s.input)); }

Format format_of(const Settings& s, bool csv_allowed = false) {
    if (s.format == "json") return Format::json;
    if (s.format == "table") return Format::table;
    if (s.format == "csv") {
        if (!csv_allowed) throw InputError("csv output is only available for the sequence command");
        return Format::csv;
    }
    throw InputError("unknown format '" + s.format + "' (json | table | csv)");
}

Field field_of(const Settings& s) { return s.characteristic == 0 ? Field::rationals() : Field::prime(s.characteristic); }

StabilityOptions stability_options(const Settings& s) {
    StabilityOptions o;
    o.engine = parse_engine(s.engine);
    o.depth.field = field_of(s);
    o.depth.threads = std::max(1u, s.threads);
    o.stanley.node_limit = s.budget;
    o.stanley.time_limit_seconds = s.time_limit;
    o.generators.max_generators = s.max_generators;
    return o;
}

std::string join_vector(const std::vector<int>& v) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
    out << ')';
    return out.str();
}

std::string set_text(VarSet s) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (int v : members(s)) {
        out << (first ? "" : ",") << v + 1;
        first = false;
    }
    out << '}';
    return out.str();
}

void print_json(std::ostream& out, const ojson& j) { out << j.dump(2) << '\n'; }

std::string depth_table(const DepthWitness& w) {
    std::ostringstream out;
    out << "depth " << w.depth << " (engine " << engine_name(w.engine) << ", char " << w.characteristic << ")\n";
    if (w.takayama)
        out << "local cohomology witness: alpha_plus " << join_vector(w.takayama->degree.alpha_plus) << ", cosupport "
            << set_text(w.takayama->degree.cosupport) << ", reduced homology in degree " << w.takayama->homology_index
            << '\n';
    if (w.betti)
        out << "Betti witness: beta_" << w.betti->index << " in multidegree " << join_vector(w.betti->multidegree)
            << '\n';
    return out.str();
}

int cmd_depth(const Settings& s, std::ostream& out) {
    const auto ideal = load_ideal(s);
    const auto fmt = format_of(s);
    DepthOptions opts{field_of(s), std::max(1u, s.threads)};
    const auto w = depth(ideal, parse_engine(s.engine), opts);
    if (fmt == Format::json) print_json(out, witness_to_json(w));
    else out << depth_table(w);
    return exit_ok;
}

int cmd_betti(const Settings& s, std::ostream& out) {
    const auto ideal = load_ideal(s);
    const auto fmt = format_of(s);
    const auto table = betti_table(ideal, BettiOptions{field_of(s), std::max(1u, s.threads)});
    const int pd = table.projective_dimension();
    if (fmt == Format::json) {
        ojson entries = ojson::array();
        for (const auto& [key, value] : table.entries())
            entries.push_back({{"i", key.first}, {"multidegree", key.second}, {"value", value}});
        ojson totals = ojson::array();
        for (int i = 0; i <= pd; ++i) totals.push_back(table.total(i));
        print_json(out, ojson{{"ideal", ideal_to_json(ideal)}, {"char", s.characteristic},
                              {"projective_dimension", pd}, {"depth", ideal.n() - pd}, {"totals", totals},
                              {"entries", entries}});
    } else {
        out << "Betti numbers of S/I for " << ideal.to_string() << " (char " << s.characteristic << ")\n";
        for (int i = 0; i <= pd; ++i) out << "beta_" << i << " = " << table.total(i) << '\n';
        for (const auto& [key, value] : table.entries())
            out << "  beta_{" << key.first << "," << join_vector(key.second) << "} = " << value << '\n';
        out << "pd " << pd << ", depth " << ideal.n() - pd << '\n';
    }
    return exit_ok;
}

std::string sdepth_table(const SdepthResult& r) {
    std::ostringstream out;
    out << "sdepth (" << kind_name(r.kind) << ") = " << (r.value ? std::to_string(*r.value) : "infinity") << '\n';
    out << "g = " << join_vector(r.g) << '\n';
    if (r.witness) {
        out << "partition into " << r.witness->intervals.size() << " intervals:\n";
        for (const auto& iv : r.witness->intervals)
            out << "  [" << join_vector(iv.a) << ", " << join_vector(iv.b) << "]  rank " << interval_rank(iv.b, r.g)
                << '\n';
    }
    return out.str();
}

int cmd_sdepth(const Settings& s, std::ostream& out) {
    const auto ideal = load_ideal(s);
    const auto fmt = format_of(s);
    const auto r = sdepth(ideal, parse_kind(s.kind), stability_options(s).stanley);
    if (fmt == Format::json) print_json(out, sdepth_to_json(r));
    else out << sdepth_table(r);
    return exit_ok;
}

int cmd_symbolic_power(const Settings& s, std::ostream& out) {
    if (s.k < 1) throw InputError("-k must be at least 1");
    const auto ideal = load_ideal(s);
    const auto fmt = format_of(s);
    const GeneratorLimit limit{s.max_generators};
    const auto power = symbolic_power(ideal, s.k, limit);
    const bool equal = power == ordinary_power(ideal, s.k, limit);
    if (fmt == Format::json) {
        print_json(out, ojson{{"k", s.k}, {"ideal", ideal_to_json(power)}, {"equals_ordinary_power", equal}});
    } else {
        out << ideal_to_text(power);
        out << "equals ordinary power: " << (equal ? "true" : "false") << '\n';
    }
    return exit_ok;
}

int cmd_sequence(const Settings& s, std::ostream& out) {
    const auto ideal = load_ideal(s);
    const auto fmt = format_of(s, true);
    const auto report = sequence(ideal, parse_quantity(s.quantity), s.kmax, stability_options(s));
    if (fmt == Format::json) print_json(out, sequence_to_json(report));
    else if (fmt == Format::csv) out << sequence_to_csv(report);
    else out << sequence_to_table(report);
    return exit_ok;
}

int cmd_analyze(const Settings& s, std::ostream& out) {
    const auto ideal = load_ideal(s);
    const auto fmt = format_of(s);
    const auto report = analyze_stability(ideal, parse_quantity(s.quantity), s.kmax, stability_options(s));
    if (fmt == Format::json) print_json(out, stability_to_json(report));
    else out << stability_to_table(report);
    return exit_ok;
}

int cmd_verify(const std::string& which, const Settings& s, std::ostream& out) {
    const auto ideal = load_ideal(s);
    const auto fmt = format_of(s);
    PowerCache cache(ideal, stability_options(s));
    CheckResult result;
    if (which == "depsym") {
        result = verify_depth_comparison(cache, s.m, s.k);
    } else if (which == "sdepsym") {
        result = verify_sdepth_comparison(cache, s.m, s.k);
    } else if (which == "power-lemma") {
        result = verify_power_membership(cache, s.m, s.k, SampleOptions{s.samples, s.seed, s.max_exponent});
    } else if (which == "colon-lemma") {
        result = verify_colon_identity(cache, s.kmax);
    } else {
        std::optional<int> var;
        if (s.variable != 0) var = s.variable - 1;
        result = verify_splitting_bound(cache, s.k, var);
    }
    if (fmt == Format::json) print_json(out, check_to_json(result));
    else out << check_to_table(result);
    return result.pass ? exit_ok : exit_verification_failed;
}

int cmd_matroid_report(const Settings& s, std::ostream& out, std::ostream& err) {
    const auto complex = load_complex(s);
    const auto fmt = format_of(s);
    try {
        const auto report = matroid_report(complex, s.kmax, stability_options(s));
        if (fmt == Format::json) print_json(out, matroid_report_to_json(report));
        else out << matroid_report_to_table(report);
        return report.all_claims_hold ? exit_ok : exit_verification_failed;
    } catch (const NotMatroidError& e) {
        const auto& c = e.check();
        err << "error: not a matroid (" << e.what() << ")" << '\n';
        if (fmt == Format::json)
            print_json(out, ojson{{"error", "not a matroid"}, {"larger", set_to_json(*c.larger)},
                                  {"smaller", set_to_json(*c.smaller)}});
        else
            out << "not a matroid: witness pair F = " << set_text(*c.larger) << ", G = " << set_text(*c.smaller)
                << '\n';
        return exit_input_error;
    }
}

int cmd_complex(const std::string& which, const Settings& s, std::ostream& out) {
    const auto complex = load_complex(s);
    const auto fmt = format_of(s);
    if (which == "check-matroid") {
        const auto c = check_matroid(complex);
        if (fmt == Format::json) {
            ojson j{{"is_matroid", c.is_matroid}};
            if (!c.is_matroid) j["witness"] = {{"larger", set_to_json(*c.larger)}, {"smaller", set_to_json(*c.smaller)}};
            print_json(out, j);
        } else {
            out << "matroid: " << (c.is_matroid ? "yes" : "no") << '\n';
            if (!c.is_matroid)
                out << "witness pair F = " << set_text(*c.larger) << ", G = " << set_text(*c.smaller) << '\n';
        }
    } else if (which == "check-vd") {
        const bool vd = is_vertex_decomposable(complex);
        const bool pure = !complex.is_void() && is_pure(complex);
        if (fmt == Format::json) print_json(out, ojson{{"pure", pure}, {"vertex_decomposable", vd}});
        else out << "pure: " << (pure ? "yes" : "no") << "\nvertex decomposable: " << (vd ? "yes" : "no") << '\n';
    } else {
        const auto ideal = stanley_reisner_ideal(complex);
        if (fmt == Format::json) print_json(out, ideal_to_json(ideal));
        else out << ideal_to_text(ideal);
    }
    return exit_ok;
}

void add_input(CLI::App* cmd, Settings& s, const std::string& what) {
    cmd->add_option("input", s.input, what + " file (JSON or text; '-' reads stdin)")->required();
    cmd->add_option("--format", s.format, "json | table | csv")->capture_default_str();
}

void add_field(CLI::App* cmd, Settings& s) {
    cmd->add_option("--char", s.characteristic, "field characteristic (0 or a prime)")->capture_default_str();
    cmd->add_option("--threads", s.threads, "worker threads; results do not depend on it")->capture_default_str();
}

void add_budget(CLI::App* cmd, Settings& s) {
    cmd->add_option("--budget", s.budget, "search-node limit for Stanley depth")->capture_default_str();
    cmd->add_option("--time-limit", s.time_limit, "seconds per Stanley depth search (0: none)")->capture_default_str();
    cmd->add_option("--max-generators", s.max_generators, "generator limit for powers (0: none)")
        ->capture_default_str();
}

void add_engine(CLI::App* cmd, Settings& s) {
    cmd->add_option("--engine", s.engine, "takayama | betti | cross_check")->capture_default_str();
}

void add_power_options(CLI::App* cmd, Settings& s) {
    add_engine(cmd, s);
    add_field(cmd, s);
    add_budget(cmd, s);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Depth, Stanley depth and stability checks for symbolic powers of squarefree monomial ideals",
                 "symdepth"};
    app.require_subcommand(1);
    Settings s;
    std::function<int()> action;

    auto* depth_cmd = app.add_subcommand("depth", "depth of S/I with a witness");
    add_input(depth_cmd, s, "ideal");
    add_engine(depth_cmd, s);
    add_field(depth_cmd, s);
    depth_cmd->callback([&] { action = [&] { return cmd_depth(s, out); }; });

    auto* betti_cmd = app.add_subcommand("betti", "multigraded Betti numbers of S/I");
    add_input(betti_cmd, s, "ideal");
    add_field(betti_cmd, s);
    betti_cmd->callback([&] { action = [&] { return cmd_betti(s, out); }; });

    auto* sdepth_cmd = app.add_subcommand("sdepth", "Stanley depth with a witness partition");
    add_input(sdepth_cmd, s, "ideal");
    sdepth_cmd->add_option("--kind", s.kind, "ideal | quotient")->capture_default_str();
    add_budget(sdepth_cmd, s);
    sdepth_cmd->callback([&] { action = [&] { return cmd_sdepth(s, out); }; });

    auto* power_cmd = app.add_subcommand("symbolic-power", "generators of the k-th symbolic power");
    add_input(power_cmd, s, "ideal");
    power_cmd->add_option("-k", s.k, "exponent")->required();
    power_cmd->add_option("--max-generators", s.max_generators, "generator limit (0: none)")->capture_default_str();
    power_cmd->callback([&] { action = [&] { return cmd_symbolic_power(s, out); }; });

    auto* seq_cmd = app.add_subcommand("sequence", "invariant of I^(k) for k = 1..kmax");
    add_input(seq_cmd, s, "ideal");
    seq_cmd->add_option("--quantity", s.quantity, "depth | sdepth_ideal | sdepth_quotient")->capture_default_str();
    seq_cmd->add_option("--kmax", s.kmax, "largest power")->capture_default_str();
    add_power_options(seq_cmd, s);
    seq_cmd->callback([&] { action = [&] { return cmd_sequence(s, out); }; });

    auto* analyze_cmd = app.add_subcommand("analyze", "window minimum, stability bound and certification");
    add_input(analyze_cmd, s, "ideal");
    analyze_cmd->add_option("--quantity", s.quantity, "depth | sdepth_ideal | sdepth_quotient")
        ->capture_default_str();
    analyze_cmd->add_option("--kmax", s.kmax, "largest power")->capture_default_str();
    add_power_options(analyze_cmd, s);
    analyze_cmd->callback([&] { action = [&] { return cmd_analyze(s, out); }; });

    auto* verify_cmd = app.add_subcommand("verify", "check an inequality or identity on one ideal");
    verify_cmd->require_subcommand(1);
    for (const std::string which : {"depsym", "sdepsym", "power-lemma", "colon-lemma", "splitting-bound"}) {
        auto* sub = verify_cmd->add_subcommand(which);
        add_input(sub, s, "ideal");
        add_power_options(sub, s);
        if (which == "colon-lemma") {
            sub->add_option("--kmax", s.kmax, "largest power")->capture_default_str();
        } else if (which == "splitting-bound") {
            sub->add_option("-k", s.k, "symbolic power to split")->capture_default_str();
            sub->add_option("--variable", s.variable, "variable index (1-based; default: all)");
        } else {
            sub->add_option("-m", s.m, "smaller exponent m")->capture_default_str();
            sub->add_option("-k", s.k, "multiplier k")->capture_default_str();
        }
        if (which == "power-lemma") {
            sub->add_option("--samples", s.samples, "sampled monomials")->capture_default_str();
            sub->add_option("--seed", s.seed, "sampling seed")->capture_default_str();
            sub->add_option("--max-exponent", s.max_exponent, "largest sampled exponent (default m+1)");
        }
        sub->callback([&, which] { action = [&, which] { return cmd_verify(which, s, out); }; });
    }

    auto* matroid_cmd = app.add_subcommand("matroid-report", "Cohen-Macaulay and Stanley depth claims for a matroid");
    add_input(matroid_cmd, s, "complex");
    matroid_cmd->add_option("--kmax", s.kmax, "largest power")->capture_default_str();
    add_power_options(matroid_cmd, s);
    matroid_cmd->callback([&] { action = [&] { return cmd_matroid_report(s, out, err); }; });

    auto* complex_cmd = app.add_subcommand("complex", "simplicial complex utilities");
    complex_cmd->require_subcommand(1);
    for (const std::string which : {"check-matroid", "check-vd", "sr-ideal"}) {
        auto* sub = complex_cmd->add_subcommand(which);
        add_input(sub, s, "complex");
        sub->callback([&, which] { action = [&, which] { return cmd_complex(which, s, out); }; });
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_input_error;
    }
    if (!action) return exit_input_error;
    try {
        return action();
    } catch (const CrossCheckError& e) {
        err << "error: engines disagree: " << e.what() << '\n';
        return exit_cross_check;
    } catch (const BudgetExceeded& e) {
        err << "error: budget exhausted: " << e.what() << '\n';
        return exit_budget;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return exit_input_error;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_input_error;
    }
}

}  // namespace symdepth
