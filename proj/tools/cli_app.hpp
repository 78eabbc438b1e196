#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "reference_checks.hpp"
#include "z2z4xi/z2z4xi.hpp"

namespace z2z4xi::cli {

enum class OutputFormat { Table, Json };

inline constexpr std::array<std::string_view, 11> kCommands = {
    "ctx-info", "skew-mul",     "std-form",    "dual",     "validate-gens", "cofactors",
    "span",     "enumerate",    "is-skew-cyclic", "classify-z4", "verify-paper"};

enum ExitCode : int { kOk = 0, kValidationFailure = 1, kParseFailure = 2, kBudgetExceeded = 3 };

struct JobConfig {
    std::string command;
    // File paths, or the document text itself when inline_text is set. skew-mul
    // takes its two polynomials here.
    std::vector<std::string> inputs;
    bool inline_text = false;
    std::optional<int> t;
    OutputFormat format = OutputFormat::Table;
    std::uint64_t budget = kDefaultBudget;
    std::string h = "x^2+x+1";
    std::string ring = "z4";
    bool list = false;   // enumerate: print every word
    bool skew = false;   // enumerate: close under the theta-shift as well
    bool close = false;  // classify-z4: take the skew closure of the rows first
};

using Report = nlohmann::ordered_json;

namespace detail {

struct ValidationFailed {
    std::string message;
};

inline std::string read_input(const JobConfig& cfg, std::size_t index = 0) {
    if (cfg.inputs.size() <= index) throw Error(ErrorKind::InvalidArgument, cfg.command + " needs an input");
    if (cfg.inline_text) return cfg.inputs[index];
    std::ifstream in(cfg.inputs[index], std::ios::binary);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + cfg.inputs[index]);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline bool is_matrix_document(std::string_view src) {
    std::size_t pos = 0;
    while (pos <= src.size()) {
        auto end = src.find('\n', pos);
        if (end == std::string_view::npos) end = src.size();
        auto line = src.substr(pos, end - pos);
        const auto first = line.find_first_not_of(" \t\r");
        if (first != std::string_view::npos && line.substr(first).starts_with("rows:")) return true;
        pos = end + 1;
    }
    return false;
}

template <class E>
std::optional<SkewPoly<E>> rebased(const std::optional<SkewPoly<E>>& p, Automorphism autom) {
    if (!p) return std::nullopt;
    return SkewPoly<E>(p->context(), autom, p->coeffs());
}

inline SkewGenerators with_automorphism(SkewGenerators gens, Automorphism autom) {
    gens.autom = autom;
    gens.f = rebased(gens.f, autom);
    gens.l = rebased(gens.l, autom);
    gens.l1 = rebased(gens.l1, autom);
    gens.g = rebased(gens.g, autom);
    gens.a = rebased(gens.a, autom);
    gens.q = rebased(gens.q, autom);
    return gens;
}

inline SkewGenerators load_generators(const JobConfig& cfg) {
    auto gens = text::parse_generator_document(read_input(cfg));
    if (cfg.t) gens = with_automorphism(std::move(gens), Automorphism(*cfg.t));
    return gens;
}

struct LoadedMatrix {
    MixedMatrix matrix;
    Automorphism autom;
};

// Matrix documents are used as-is; generator documents are expanded to their
// spanning-set matrix.
inline LoadedMatrix load_matrix(const JobConfig& cfg) {
    const auto src = read_input(cfg);
    if (is_matrix_document(src)) {
        auto doc = text::parse_matrix_document(src);
        return {doc.matrix, Automorphism(cfg.t.value_or(doc.t.value_or(1)))};
    }
    auto gens = text::parse_generator_document(src);
    if (cfg.t) gens = with_automorphism(std::move(gens), Automorphism(*cfg.t));
    return {spanning_matrix(gens), gens.autom};
}

inline nlohmann::ordered_json rows_json(const MixedMatrix& m) {
    auto rows = nlohmann::ordered_json::array();
    for (const auto& w : m.row_list()) rows.push_back(text::format_row(w));
    return rows;
}

inline nlohmann::ordered_json matrix_json(const MixedMatrix& m) {
    nlohmann::ordered_json j;
    j["m"] = m.context()->degree();
    j["h"] = text::format_int_poly(text::context_modulus(*m.context()));
    j["r"] = m.r();
    j["s"] = m.s();
    j["rows"] = rows_json(m);
    return j;
}

inline nlohmann::ordered_json cardinality_json(const Cardinality& c) {
    nlohmann::ordered_json j;
    j["log2"] = c.log2;
    j["value"] = c.to_string();
    return j;
}

template <class P>
void put_poly(Report& j, const char* key, const std::optional<P>& p) {
    if (p) j[key] = text::format_poly(*p);
}

inline Report ctx_info(const JobConfig& cfg) {
    const auto h = text::parse_int_poly(cfg.h);
    const auto ctx = RingContext::create(h);
    Report j;
    j["m"] = ctx->degree();
    j["h"] = text::format_int_poly(text::context_modulus(*ctx));
    std::vector<int> residue(ctx->modulus().size());
    for (std::size_t i = 0; i < residue.size(); ++i) residue[i] = ctx->modulus()[i] & 1;
    j["h_bar"] = text::format_int_poly(residue);
    j["field_size"] = ctx->field_size();
    j["ring_size"] = ctx->ring_size();
    j["units"] = ctx->unit_count();
    j["xi_order"] = multiplicative_order(RingElem::xi_power(ctx, 1));
    j["xi_bar_order"] = multiplicative_order(FieldElem::xi_power(ctx, 1));
    return j;
}

template <class E>
Report skew_product(const JobConfig& cfg, const ContextPtr& ctx, Automorphism autom) {
    if (cfg.inputs.size() != 2) throw Error(ErrorKind::InvalidArgument, "skew-mul takes exactly two polynomials");
    const auto f = text::parse_poly<E>(ctx, autom, cfg.inputs[0], {1, 1});
    const auto g = text::parse_poly<E>(ctx, autom, cfg.inputs[1], {2, 1});
    Report j;
    j["ring"] = cfg.ring;
    j["t"] = autom.power();
    j["f"] = text::format_poly(f);
    j["g"] = text::format_poly(g);
    j["product"] = text::format_poly(f * g);
    return j;
}

inline Report skew_mul_cmd(const JobConfig& cfg) {
    const auto ctx = RingContext::create(text::parse_int_poly(cfg.h));
    const Automorphism autom(cfg.t.value_or(1));
    if (cfg.ring == "z4") return skew_product<RingElem>(cfg, ctx, autom);
    if (cfg.ring == "z2") return skew_product<FieldElem>(cfg, ctx, autom);
    throw Error(ErrorKind::InvalidArgument, "ring must be z4 or z2");
}

inline Report std_form_cmd(const JobConfig& cfg) {
    const auto loaded = load_matrix(cfg);
    const auto sf = standard_form(loaded.matrix);
    Report j;
    j["type"] = sf.code_type.to_string();
    j["cardinality"] = cardinality_json(cardinality(sf.code_type, loaded.matrix.context()->degree()));
    j["binary_permutation"] = sf.binary_perm;
    j["quaternary_permutation"] = sf.quaternary_perm;
    j["identity_permutation"] = sf.identity_permutation();
    j["standard_form"] = matrix_json(sf.g_std);
    return j;
}

inline Report dual_cmd(const JobConfig& cfg) {
    const auto loaded = load_matrix(cfg);
    const auto sf = standard_form(loaded.matrix);
    const auto h = parity_check(sf);
    const auto h_input = unpermute_columns(h, sf.binary_perm, sf.quaternary_perm);
    const auto dt = dual_type(sf.code_type);
    const int m = loaded.matrix.context()->degree();
    Report j;
    j["type"] = sf.code_type.to_string();
    j["dual_type"] = dt.to_string();
    j["dual_cardinality"] = cardinality_json(cardinality(dt, m));
    j["orthogonal"] = true;  // parity_check throws otherwise
    j["binary_permutation"] = sf.binary_perm;
    j["quaternary_permutation"] = sf.quaternary_perm;
    j["parity_check_standard_coordinates"] = rows_json(h);
    j["parity_check"] = rows_json(h_input);

    const auto ambient_log2 = static_cast<std::uint64_t>(m) * (loaded.matrix.r() + 2 * loaded.matrix.s());
    if (ambient_log2 < 63 && (std::uint64_t{1} << ambient_log2) <= cfg.budget) {
        const auto code = span_closure(loaded.matrix, false, Automorphism(1), cfg.budget);
        const auto dual = brute_force_dual(code, cfg.budget);
        const bool match = span_closure(h_input, false, Automorphism(1), cfg.budget) == dual;
        j["enumerated_dual_words"] = dual.size();
        j["enumerated_dual_matches"] = match;
        if (!match) throw ValidationFailed{"parity-check rows do not span the enumerated dual"};
    } else {
        j["enumerated_dual_matches"] = "skipped (ambient space exceeds the budget)";
    }
    return j;
}

inline Report checks_json(const ValidationReport& rep) {
    Report j;
    j["case"] = std::string(to_string(rep.generator_case));
    j["valid"] = rep.valid();
    auto checks = Report::array();
    for (const auto& c : rep.checks) {
        Report cj;
        cj["condition"] = c.condition;
        cj["passed"] = c.passed;
        if (!c.detail.empty()) cj["detail"] = c.detail;
        checks.push_back(cj);
    }
    j["checks"] = checks;
    return j;
}

inline Report validate_cmd(const JobConfig& cfg, std::ostream& err, int& status) {
    const auto rep = validate_generators(load_generators(cfg));
    if (const auto* bad = rep.first_failure()) {
        err << "validation failed: " << bad->condition;
        if (!bad->detail.empty()) err << " (" << bad->detail << ")";
        err << "\n";
        status = kValidationFailure;
    }
    return checks_json(rep);
}

inline Report cofactors_cmd(const JobConfig& cfg) {
    const auto gens = load_generators(cfg);
    const auto cf = derive_cofactors(gens);
    Report j;
    j["case"] = std::string(to_string(gens.generator_case()));
    put_poly(j, "h_f", cf.h_f);
    put_poly(j, "h_g", cf.h_g);
    put_poly(j, "h_g_bar", cf.h_g_bar);
    put_poly(j, "h_q", cf.h_q);
    put_poly(j, "k", cf.k);
    put_poly(j, "implied_l1", cf.implied_l1);
    put_poly(j, "implied_q", cf.implied_q);
    return j;
}

inline Report span_cmd(const JobConfig& cfg) {
    const auto gens = load_generators(cfg);
    const auto set = spanning_set(gens);
    Report j;
    j["case"] = std::string(to_string(gens.generator_case()));
    j["t"] = gens.autom.power();
    j["s1_rows"] = set.s1.size();
    j["s2_rows"] = set.s2.size();
    j["s3_rows"] = set.s3.size();
    j["cardinality"] = cardinality_json(skew_code_cardinality(gens));
    j["matrix"] = matrix_json(set.matrix(gens.ctx, gens.r, gens.s));
    return j;
}

inline Report enumerate_cmd(const JobConfig& cfg) {
    const auto loaded = load_matrix(cfg);
    const auto code = span_closure(loaded.matrix, cfg.skew, loaded.autom, cfg.budget);
    Report j;
    j["skew_closure"] = cfg.skew;
    j["words"] = code.size();
    if (code.size() > 1) j["min_distance"] = min_hamming_distance(code);
    if (cfg.list) {
        auto words = Report::array();
        for (const auto& w : code.words()) words.push_back(text::format_row(w));
        j["list"] = words;
    }
    return j;
}

inline Report is_skew_cyclic_cmd(const JobConfig& cfg) {
    const auto loaded = load_matrix(cfg);
    const auto code = span_closure(loaded.matrix, false, loaded.autom, cfg.budget);
    Report j;
    j["t"] = loaded.autom.power();
    j["words"] = code.size();
    j["skew_cyclic"] = is_skew_cyclic(code, loaded.autom);
    return j;
}

inline Report classify_cmd(const JobConfig& cfg) {
    const auto loaded = load_matrix(cfg);
    const auto code = span_closure(loaded.matrix, cfg.close, loaded.autom, cfg.budget);
    const auto cls = classify_z4_skew_cyclic(code, loaded.autom, cfg.budget);
    Report j;
    j["words"] = code.size();
    j["case"] = std::string(to_string(cls.kind));
    put_poly(j, "g", cls.g);
    put_poly(j, "a", cls.a);
    put_poly(j, "q", cls.q);
    auto wit = Report::array();
    for (const auto& w : cls.witnesses) wit.push_back(text::format_row(w));
    j["witnesses"] = wit;
    return j;
}

inline Report verify_cmd(const JobConfig& cfg, int& status) {
    const auto results = reference::reference_checks(cfg.budget);
    Report j;
    auto checks = Report::array();
    std::size_t failed = 0;
    for (const auto& r : results) {
        Report cj;
        cj["name"] = r.name;
        cj["passed"] = r.passed;
        cj["detail"] = r.detail;
        checks.push_back(cj);
        if (!r.passed) ++failed;
    }
    j["checks"] = checks;
    j["passed"] = results.size() - failed;
    j["failed"] = failed;
    if (failed) status = kValidationFailure;
    return j;
}

inline void render_scalar(std::ostream& out, const Report& v) {
    if (v.is_string())
        out << v.get<std::string>();
    else if (v.is_boolean())
        out << (v.get<bool>() ? "yes" : "no");
    else
        out << v.dump();
}

inline void render_table(std::ostream& out, const Report& j, int indent = 0) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    for (const auto& [key, v] : j.items()) {
        if (v.is_object()) {
            out << pad << key << ":\n";
            render_table(out, v, indent + 2);
        } else if (v.is_array() && std::all_of(v.begin(), v.end(), [](const Report& e) { return e.is_number(); })) {
            out << pad << key << ":";
            for (const auto& e : v) out << ' ' << e.dump();
            out << "\n";
        } else if (v.is_array()) {
            out << pad << key << ":\n";
            for (const auto& e : v) {
                if (e.is_object()) {
                    out << pad << "  -\n";
                    render_table(out, e, indent + 4);
                } else {
                    out << pad << "  ";
                    render_scalar(out, e);
                    out << "\n";
                }
            }
        } else {
            out << pad << key << ": ";
            render_scalar(out, v);
            out << "\n";
        }
    }
}

inline void render_checks(std::ostream& out, const Report& j) {
    for (const auto& c : j["checks"]) {
        out << (c["passed"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>();
        const auto detail = c["detail"].get<std::string>();
        if (!detail.empty()) out << " (" << detail << ")";
        out << "\n";
    }
    out << j["passed"].dump() << " passed, " << j["failed"].dump() << " failed\n";
}

}  // namespace detail

/// Runs one job. Reports go to `out`, diagnostics to `err`.
inline int run(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
    int status = kOk;
    try {
        if (cfg.budget == 0) throw Error(ErrorKind::InvalidArgument, "budget must be positive");
        if (cfg.t && *cfg.t < 1) throw Error(ErrorKind::InvalidArgument, "t must be positive");
        Report report;
        const auto& c = cfg.command;
        if (c == "ctx-info") report = detail::ctx_info(cfg);
        else if (c == "skew-mul") report = detail::skew_mul_cmd(cfg);
        else if (c == "std-form") report = detail::std_form_cmd(cfg);
        else if (c == "dual") report = detail::dual_cmd(cfg);
        else if (c == "validate-gens") report = detail::validate_cmd(cfg, err, status);
        else if (c == "cofactors") report = detail::cofactors_cmd(cfg);
        else if (c == "span") report = detail::span_cmd(cfg);
        else if (c == "enumerate") report = detail::enumerate_cmd(cfg);
        else if (c == "is-skew-cyclic") report = detail::is_skew_cyclic_cmd(cfg);
        else if (c == "classify-z4") report = detail::classify_cmd(cfg);
        else if (c == "verify-paper") report = detail::verify_cmd(cfg, status);
        else throw Error(ErrorKind::InvalidArgument, "unknown command '" + c + "'");

        if (cfg.format == OutputFormat::Json)
            out << report.dump(2) << "\n";
        else if (c == "verify-paper")
            detail::render_checks(out, report);
        else
            detail::render_table(out, report);
        return status;
    } catch (const detail::ValidationFailed& e) {
        err << "error: " << e.message << "\n";
        return kValidationFailure;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kParseFailure;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::BudgetExceeded ? kBudgetExceeded : kValidationFailure;
    }
}

}  // namespace z2z4xi::cli
