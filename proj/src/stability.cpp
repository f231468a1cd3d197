#include "symdepth/stability.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <random>
#include <sstream>

#include "symdepth/complex_io.hpp"
#include "symdepth/ideal_io.hpp"

namespace symdepth {

namespace {

using ojson = nlohmann::ordered_json;

ojson optional_int(std::optional<int> v, const char* absent) {
    if (v) return *v;
    return absent;
}

std::string set_json_text(VarSet s) {
    std::string text = set_to_json(s).dump();
    return "{" + text.substr(1, text.size() - 2) + "}";
}

std::string cell(std::optional<int> v, const char* absent) { return v ? std::to_string(*v) : absent; }

void require_symbolic_input(const MonomialIdeal& ideal) {
    if (ideal.is_zero() || ideal.is_unit() || !ideal.is_squarefree())
        throw InputError("symbolic powers require a squarefree, proper, nonzero ideal");
}

// Range of j with m - k ≤ j ≤ m and km + j ≥ 1.
std::pair<int, int> admissible_j(int m, int k) {
    if (m < 1 || k < 1) throw InputError("m and k must be positive");
    return {std::max(m - k, 1 - k * m), m};
}

bool geq(std::optional<int> lhs, std::optional<int> rhs) {
    if (!lhs) return true;   // infinity
    if (!rhs) return false;
    return *lhs >= *rhs;
}

}  // namespace

Quantity parse_quantity(const std::string& name) {
    if (name == "depth") return Quantity::depth;
    if (name == "sdepth_ideal" || name == "sdepth-ideal") return Quantity::sdepth_ideal;
    if (name == "sdepth_quotient" || name == "sdepth-quotient") return Quantity::sdepth_quotient;
    throw InputError("unknown quantity '" + name + "' (depth | sdepth_ideal | sdepth_quotient)");
}

std::string quantity_name(Quantity quantity) {
    switch (quantity) {
        case Quantity::depth: return "depth";
        case Quantity::sdepth_ideal: return "sdepth_ideal";
        case Quantity::sdepth_quotient: return "sdepth_quotient";
    }
    return "unknown";
}

PowerCache::PowerCache(MonomialIdeal ideal, StabilityOptions options)
    : ideal_(std::move(ideal)), options_(options) {
    require_symbolic_input(ideal_);
    primes_ = minimal_primes(ideal_);
}

const MonomialIdeal& PowerCache::power(int k) {
    if (k < 1) throw InputError("symbolic power exponent must be positive");
    auto it = powers_.find(k);
    if (it == powers_.end()) it = powers_.emplace(k, symbolic_power(ideal_, k, options_.generators)).first;
    return it->second;
}

const DepthWitness& PowerCache::depth(int k) {
    auto it = depths_.find(k);
    if (it == depths_.end()) it = depths_.emplace(k, symdepth::depth(power(k), options_.engine, options_.depth)).first;
    return it->second;
}

const SdepthResult& PowerCache::sdepth_result(int k, ModuleKind kind) {
    const auto key = std::make_pair(k, kind);
    auto it = sdepths_.find(key);
    if (it == sdepths_.end()) it = sdepths_.emplace(key, symdepth::sdepth(power(k), kind, options_.stanley)).first;
    return it->second;
}

std::optional<int> PowerCache::sdepth(int k, ModuleKind kind) { return sdepth_result(k, kind).value; }

std::optional<int> PowerCache::value(int k, Quantity quantity) {
    switch (quantity) {
        case Quantity::depth: return depth(k).depth;
        case Quantity::sdepth_ideal: return sdepth(k, ModuleKind::ideal);
        case Quantity::sdepth_quotient: return sdepth(k, ModuleKind::quotient);
    }
    return std::nullopt;
}

bool SequenceReport::complete() const {
    return std::none_of(rows.begin(), rows.end(), [](const SequenceRow& r) { return r.skipped; });
}

SequenceReport sequence(PowerCache& cache, Quantity quantity, int kmax) {
    if (kmax < 1) throw InputError("kmax must be at least 1");
    SequenceReport report;
    report.ideal = cache.ideal();
    report.quantity = quantity;
    report.kmax = kmax;
    report.characteristic = cache.options().depth.field.characteristic;
    report.engine = quantity == Quantity::depth ? engine_name(cache.options().engine) : "stanley";
    for (int k = 1; k <= kmax; ++k) {
        SequenceRow row;
        row.k = k;
        try {
            row.value = cache.value(k, quantity);
            row.infinite = !row.value;
        } catch (const BudgetExceeded& e) {
            row.skipped = true;
            row.skip_reason = e.what();
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

SequenceReport sequence(const MonomialIdeal& ideal, Quantity quantity, int kmax, const StabilityOptions& options) {
    PowerCache cache(ideal, options);
    return sequence(cache, quantity, kmax);
}

StabilityReport analyze_sequence(const SequenceReport& seq) {
    require_symbolic_input(seq.ideal);
    StabilityReport report;
    report.sequence = seq;
    const int n = seq.ideal.n();

    for (const auto& row : seq.rows) {
        if (!row.value) continue;
        if (!report.window_min || *row.value < *report.window_min) {
            report.window_min = row.value;
            report.first_attainment = row.k;
        }
    }
    report.bight_bound = n * (n + 1) * std::pow(static_cast<double>(bight(seq.ideal)), n / 2.0);
    if (!report.window_min) {
        report.reason = "no computed rows";
        report.limit_label = "upper bound for the limit";
        return report;
    }
    const int m = *report.window_min;
    const long t = *report.first_attainment;
    report.stability_bound = std::max(1L, t * t - t);

    if (m == 0) {
        report.certified = true;
        report.certification_rule = "floor";
        report.reason = "window minimum is 0 and the sequence cannot decrease further";
    } else if (seq.ideal.is_principal()) {
        report.certified = true;
        report.certification_rule = "principal";
        report.reason = "principal ideal: symbolic powers are powers of one monomial";
    } else if (seq.quantity != Quantity::sdepth_ideal && is_matroid(complex_of_ideal(seq.ideal))) {
        report.certified = true;
        report.certification_rule = "matroid";
        report.reason = "Stanley-Reisner ideal of a matroid: every S/I^(k) is Cohen-Macaulay of dimension dim+1";
    } else {
        report.reason = "no certification rule applies; the window minimum only bounds the limit from above";
    }
    report.limit_label = report.certified ? "limit" : "upper bound for the limit";

    const long from = report.stability_bound;
    std::ostringstream guarantee;
    guarantee << "values[k] <= " << m << " for all k >= " << from;
    report.tail_guarantee = guarantee.str();
    for (const auto& row : seq.rows) {
        if (!row.value || row.k < from) continue;
        const bool ok = report.certified ? *row.value == m : *row.value <= m;
        if (!ok) report.tail_consistent = false;
    }

    if (seq.quantity == Quantity::depth) {
        report.ell_s_estimate = n - m;
        report.ell_s_exact = report.certified;
    }
    return report;
}

StabilityReport analyze_stability(const MonomialIdeal& ideal, Quantity quantity, int kmax,
                                  const StabilityOptions& options) {
    return analyze_sequence(sequence(ideal, quantity, kmax, options));
}

CheckResult verify_depth_comparison(PowerCache& cache, int m, int k) {
    CheckResult result;
    result.name = "depsym";
    const auto [jlo, jhi] = admissible_j(m, k);
    const int lhs = cache.depth(m).depth;
    for (int j = jlo; j <= jhi; ++j) {
        const int power = k * m + j;
        const int rhs = cache.depth(power).depth;
        const bool ok = lhs >= rhs;
        result.details.push_back({{"m", m}, {"k", k}, {"j", j}, {"power", power},
                                  {"depth_m", lhs}, {"depth_power", rhs}, {"holds", ok}});
        if (!ok && result.pass) {
            result.pass = false;
            result.counterexample = ojson{{"ideal", ideal_to_json(cache.ideal())}, {"m", m}, {"k", k}, {"j", j},
                                          {"depth_m", lhs}, {"depth_power", rhs},
                                          {"witness_m", witness_to_json(cache.depth(m))},
                                          {"witness_power", witness_to_json(cache.depth(power))}};
        }
    }
    return result;
}

CheckResult verify_depth_comparison(const MonomialIdeal& ideal, int m, int k, const StabilityOptions& options) {
    PowerCache cache(ideal, options);
    return verify_depth_comparison(cache, m, k);
}

CheckResult verify_sdepth_comparison(PowerCache& cache, int m, int k) {
    CheckResult result;
    result.name = "sdepsym";
    const auto [jlo, jhi] = admissible_j(m, k);
    for (ModuleKind kind : {ModuleKind::ideal, ModuleKind::quotient}) {
        const auto lhs = cache.sdepth(m, kind);
        for (int j = jlo; j <= jhi; ++j) {
            const int power = k * m + j;
            const auto rhs = cache.sdepth(power, kind);
            const bool ok = geq(lhs, rhs);
            result.details.push_back({{"kind", kind_name(kind)}, {"m", m}, {"k", k}, {"j", j}, {"power", power},
                                      {"sdepth_m", optional_int(lhs, "infinity")},
                                      {"sdepth_power", optional_int(rhs, "infinity")}, {"holds", ok}});
            if (!ok && result.pass) {
                result.pass = false;
                result.counterexample = ojson{{"ideal", ideal_to_json(cache.ideal())}, {"kind", kind_name(kind)},
                                              {"m", m}, {"k", k}, {"j", j},
                                              {"sdepth_m", sdepth_to_json(cache.sdepth_result(m, kind))},
                                              {"sdepth_power", sdepth_to_json(cache.sdepth_result(power, kind))}};
            }
        }
    }
    return result;
}

CheckResult verify_sdepth_comparison(const MonomialIdeal& ideal, int m, int k, const StabilityOptions& options) {
    PowerCache cache(ideal, options);
    return verify_sdepth_comparison(cache, m, k);
}

CheckResult verify_power_membership(PowerCache& cache, int m, int k, const SampleOptions& sampling) {
    CheckResult result;
    result.name = "power-lemma";
    const auto [jlo, jhi] = admissible_j(m, k);
    const int n = cache.ideal().n();
    const int bound = sampling.max_exponent >= 0 ? sampling.max_exponent : m + 1;
    std::mt19937_64 rng(sampling.seed);
    long checked = 0;
    for (int s = 0; s < sampling.samples; ++s) {
        std::vector<int> e(n);
        for (int& x : e) x = static_cast<int>(rng() % static_cast<std::uint64_t>(bound + 1));
        const Monomial u(e);
        const bool left = cache.power(m).contains(u);
        const Monomial lifted = u.pow(k + 1);
        for (int j = jlo; j <= jhi; ++j) {
            const bool right = cache.power(k * m + j).contains(lifted);
            ++checked;
            if (left != right && result.pass) {
                result.pass = false;
                result.counterexample = ojson{{"ideal", ideal_to_json(cache.ideal())}, {"m", m}, {"k", k}, {"j", j},
                                              {"u", e}, {"u_in_power_m", left}, {"lifted_in_power", right}};
            }
        }
    }
    result.details.push_back({{"m", m}, {"k", k}, {"j_min", jlo}, {"j_max", jhi}, {"samples", sampling.samples},
                              {"max_exponent", bound}, {"checks", checked}});
    return result;
}

CheckResult verify_power_membership(const MonomialIdeal& ideal, int m, int k, const SampleOptions& sampling,
                                    const StabilityOptions& options) {
    PowerCache cache(ideal, options);
    return verify_power_membership(cache, m, k, sampling);
}

CheckResult verify_colon_identity(PowerCache& cache, int kmax) {
    if (kmax < 1) throw InputError("kmax must be at least 1");
    const auto& primes = cache.primes();
    if (primes.front().height() != primes.back().height())
        throw InputError("colon identity requires an unmixed ideal (height " + std::to_string(primes.front().height()) +
                         " != bight " + std::to_string(primes.back().height()) + ")");
    CheckResult result;
    result.name = "colon-lemma";
    const int n = cache.ideal().n();
    const int h = primes.front().height();
    const Monomial all_vars = Monomial::squarefree(n, full_set(n));
    for (int k = 1; k <= kmax; ++k) {
        const auto lhs = colon(cache.power(k), all_vars);
        const auto rhs = k <= h ? MonomialIdeal::unit(n) : cache.power(k - h);
        const bool ok = lhs == rhs;
        result.details.push_back({{"k", k}, {"height", h}, {"colon", ideal_to_json(lhs)},
                                  {"expected", ideal_to_json(rhs)}, {"holds", ok}});
        if (!ok && result.pass) {
            result.pass = false;
            result.counterexample = ojson{{"ideal", ideal_to_json(cache.ideal())}, {"k", k},
                                          {"colon", ideal_to_json(lhs)}, {"expected", ideal_to_json(rhs)}};
        }
    }
    return result;
}

CheckResult verify_colon_identity(const MonomialIdeal& ideal, int kmax, const StabilityOptions& options) {
    PowerCache cache(ideal, options);
    return verify_colon_identity(cache, kmax);
}

CheckResult verify_splitting_bound(PowerCache& cache, int k, std::optional<int> variable) {
    CheckResult result;
    result.name = "splitting-bound";
    const auto& power = cache.power(k);
    const int n = power.n();
    const auto whole = sdepth(power, ModuleKind::ideal, cache.options().stanley);
    std::vector<int> vars;
    if (variable) {
        if (*variable < 0 || *variable >= n) throw InputError("split variable outside [1, n]");
        vars.push_back(*variable);
    } else {
        for (int i = 0; i < n; ++i) vars.push_back(i);
    }
    for (int i : vars) {
        const auto split = split_by_variable(power, i);
        const auto restricted = sdepth(split.restriction, ModuleKind::ideal, cache.options().stanley).value;
        const auto coloned = sdepth(split.colon_part, ModuleKind::ideal, cache.options().stanley).value;
        std::optional<int> bound;
        if (!restricted) bound = coloned;
        else if (!coloned) bound = restricted;
        else bound = std::min(*restricted, *coloned);
        const bool ok = geq(whole.value, bound);
        result.details.push_back({{"k", k}, {"variable", i + 1}, {"sdepth", optional_int(whole.value, "infinity")},
                                  {"sdepth_restriction", optional_int(restricted, "infinity")},
                                  {"sdepth_colon", optional_int(coloned, "infinity")}, {"holds", ok}});
        if (!ok && result.pass) {
            result.pass = false;
            result.counterexample = ojson{{"ideal", ideal_to_json(power)}, {"variable", i + 1},
                                          {"restriction", ideal_to_json(split.restriction)},
                                          {"colon", ideal_to_json(split.colon_part)}};
        }
    }
    return result;
}

CheckResult verify_splitting_bound(const MonomialIdeal& ideal, int k, std::optional<int> variable,
                                   const StabilityOptions& options) {
    PowerCache cache(ideal, options);
    return verify_splitting_bound(cache, k, variable);
}

MatroidReport matroid_report(const SimplicialComplex& complex, int kmax, const StabilityOptions& options) {
    if (kmax < 1) throw InputError("kmax must be at least 1");
    if (complex.is_void()) throw InputError("matroid report on the void complex");
    const auto check = check_matroid(complex);
    if (!check.is_matroid) {
        const std::string what = "no vertex of " + set_json_text(*check.larger) + " extends " + set_json_text(*check.smaller);
        throw NotMatroidError(what, check);
    }
    MatroidReport report;
    report.complex = complex;
    report.dim = complex.dim();
    report.ell_s = complex.n() - report.dim - 1;
    report.characteristic = options.depth.field.characteristic;
    const auto ideal = stanley_reisner_ideal(complex);
    const int target = report.dim + 1;

    std::optional<PowerCache> cache;
    if (!ideal.is_zero()) cache.emplace(ideal, options);
    for (int k = 1; k <= kmax; ++k) {
        MatroidRow row;
        row.k = k;
        try {
            if (!cache) {
                // I_Δ = 0: S/0 = S has depth n, sdepth n, and sdepth(0) is infinite.
                row.depth = complex.n();
                row.dim_quotient = complex.n();
                row.sdepth_quotient = complex.n();
                row.sdepth_ideal = std::nullopt;
            } else {
                row.depth = cache->depth(k).depth;
                row.dim_quotient = krull_dim_quotient(ideal);
                row.sdepth_quotient = cache->sdepth(k, ModuleKind::quotient);
                row.sdepth_ideal = cache->sdepth(k, ModuleKind::ideal);
            }
        } catch (const BudgetExceeded& e) {
            row.skipped = true;
            row.skip_reason = e.what();
            report.rows.push_back(row);
            continue;
        }
        row.cohen_macaulay = row.depth == row.dim_quotient;
        row.depth_matches_dimension = row.depth == target;
        row.sdepth_quotient_matches_depth = row.sdepth_quotient && *row.sdepth_quotient == row.depth;
        row.sdepth_ideal_bound = geq(row.sdepth_ideal, target + 1);
        if (!(row.cohen_macaulay && row.depth_matches_dimension && row.sdepth_quotient_matches_depth &&
              row.sdepth_ideal_bound))
            report.all_claims_hold = false;
        report.rows.push_back(row);
    }
    return report;
}

ojson sequence_to_json(const SequenceReport& report) {
    ojson rows = ojson::array();
    for (const auto& r : report.rows) {
        ojson row{{"k", r.k}};
        if (r.skipped) {
            row["value"] = "skipped";
            row["reason"] = r.skip_reason;
        } else {
            row["value"] = optional_int(r.value, "infinity");
        }
        rows.push_back(row);
    }
    return ojson{{"ideal", ideal_to_json(report.ideal)}, {"quantity", quantity_name(report.quantity)},
                 {"kmax", report.kmax}, {"engine", report.engine}, {"char", report.characteristic},
                 {"rows", rows}};
}

SequenceReport sequence_from_json(const ojson& j) {
    try {
        SequenceReport r;
        r.ideal = ideal_from_json(j.at("ideal"));
        r.quantity = parse_quantity(j.at("quantity").get<std::string>());
        r.kmax = j.at("kmax").get<int>();
        r.engine = j.at("engine").get<std::string>();
        r.characteristic = j.at("char").get<int>();
        for (const auto& row : j.at("rows")) {
            SequenceRow s;
            s.k = row.at("k").get<int>();
            const auto& v = row.at("value");
            if (v.is_string()) {
                const auto text = v.get<std::string>();
                if (text == "skipped") {
                    s.skipped = true;
                    s.skip_reason = row.value("reason", "");
                } else if (text == "infinity") {
                    s.infinite = true;
                } else {
                    throw InputError("unknown sequence value '" + text + "'");
                }
            } else {
                s.value = v.get<int>();
            }
            r.rows.push_back(std::move(s));
        }
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed sequence report: ") + e.what());
    }
}

std::string sequence_to_csv(const SequenceReport& report) {
    std::ostringstream out;
    out << "k,value,engine,char\n";
    for (const auto& r : report.rows)
        out << r.k << ',' << (r.skipped ? "skipped" : cell(r.value, "infinity")) << ',' << report.engine << ','
            << report.characteristic << '\n';
    return out.str();
}

std::string sequence_to_table(const SequenceReport& report) {
    std::ostringstream out;
    out << quantity_name(report.quantity) << " of symbolic powers of " << report.ideal.to_string() << " (engine "
        << report.engine << ", char " << report.characteristic << ")\n";
    out << std::setw(4) << "k" << "  " << "value\n";
    for (const auto& r : report.rows)
        out << std::setw(4) << r.k << "  " << (r.skipped ? "SKIPPED (" + r.skip_reason + ")" : cell(r.value, "infinity"))
            << '\n';
    return out.str();
}

ojson stability_to_json(const StabilityReport& report) {
    ojson j;
    j["sequence"] = sequence_to_json(report.sequence);
    j["window_min"] = optional_int(report.window_min, "none");
    j["first_attainment"] = optional_int(report.first_attainment, "none");
    j["stability_bound"] = report.stability_bound;
    j["tail_guarantee"] = report.tail_guarantee;
    j["tail_consistent"] = report.tail_consistent;
    j["certified"] = report.certified;
    j["certification_rule"] = report.certification_rule;
    j["reason"] = report.reason;
    j["window_min_is"] = report.limit_label;
    if (report.ell_s_estimate) {
        j["ell_s_estimate"] = *report.ell_s_estimate;
        j["ell_s_estimate_is"] = report.ell_s_exact ? "exact" : "lower bound";
    }
    j["bight_bound"] = report.bight_bound;
    return j;
}

std::string stability_to_table(const StabilityReport& report) {
    std::ostringstream out;
    out << sequence_to_table(report.sequence);
    out << "window minimum      " << cell(report.window_min, "none") << " (" << report.limit_label << ")\n";
    out << "first attainment t  " << cell(report.first_attainment, "none") << '\n';
    out << "stability bound     " << report.stability_bound << "  [" << report.tail_guarantee << "]\n";
    out << "tail consistent     " << (report.tail_consistent ? "yes" : "NO") << '\n';
    out << "certified           " << (report.certified ? "yes (" + report.certification_rule + " rule)" : "no") << '\n';
    out << "reason              " << report.reason << '\n';
    if (report.ell_s_estimate)
        out << "ell_s               " << (report.ell_s_exact ? "= " : ">= ") << *report.ell_s_estimate << '\n';
    out << "n(n+1)bight^(n/2)   " << report.bight_bound << '\n';
    return out.str();
}

ojson check_to_json(const CheckResult& check) {
    ojson j{{"check", check.name}, {"result", check.pass ? "PASS" : "FAIL"}, {"details", check.details}};
    if (check.counterexample) j["counterexample"] = *check.counterexample;
    return j;
}

std::string check_to_table(const CheckResult& check) {
    std::ostringstream out;
    out << check.name << ": " << (check.pass ? "PASS" : "FAIL") << '\n';
    for (const auto& d : check.details) out << "  " << d.dump() << '\n';
    if (check.counterexample) out << "counterexample: " << check.counterexample->dump() << '\n';
    return out.str();
}

ojson matroid_report_to_json(const MatroidReport& report) {
    ojson rows = ojson::array();
    for (const auto& r : report.rows) {
        if (r.skipped) {
            rows.push_back({{"k", r.k}, {"skipped", true}, {"reason", r.skip_reason}});
            continue;
        }
        rows.push_back({{"k", r.k}, {"depth", r.depth}, {"dim", r.dim_quotient}, {"cohen_macaulay", r.cohen_macaulay},
                        {"sdepth_quotient", optional_int(r.sdepth_quotient, "infinity")},
                        {"sdepth_ideal", optional_int(r.sdepth_ideal, "infinity")},
                        {"depth_eq_dim_plus_1", r.depth_matches_dimension},
                        {"sdepth_quotient_eq_depth", r.sdepth_quotient_matches_depth},
                        {"sdepth_ideal_ge_dim_plus_2", r.sdepth_ideal_bound}});
    }
    return ojson{{"complex", complex_to_json(report.complex)}, {"dim", report.dim}, {"ell_s", report.ell_s},
                 {"char", report.characteristic}, {"rows", rows}, {"all_claims_hold", report.all_claims_hold}};
}

std::string matroid_report_to_table(const MatroidReport& report) {
    std::ostringstream out;
    out << "matroid " << report.complex.to_string() << "  dim " << report.dim << "  ell_s = n - dim - 1 = "
        << report.ell_s << "  (char " << report.characteristic << ")\n";
    out << std::setw(4) << "k" << std::setw(7) << "depth" << std::setw(5) << "dim" << std::setw(5) << "CM"
        << std::setw(13) << "sdepth(S/I)" << std::setw(11) << "sdepth(I)" << "  claims\n";
    for (const auto& r : report.rows) {
        out << std::setw(4) << r.k;
        if (r.skipped) {
            out << "  SKIPPED (" << r.skip_reason << ")\n";
            continue;
        }
        const bool ok = r.cohen_macaulay && r.depth_matches_dimension && r.sdepth_quotient_matches_depth &&
                        r.sdepth_ideal_bound;
        out << std::setw(7) << r.depth << std::setw(5) << r.dim_quotient << std::setw(5)
            << (r.cohen_macaulay ? "yes" : "no") << std::setw(13) << cell(r.sdepth_quotient, "inf") << std::setw(11)
            << cell(r.sdepth_ideal, "inf") << "  " << (ok ? "hold" : "VIOLATED") << '\n';
    }
    return out.str();
}

}  // namespace symdepth
