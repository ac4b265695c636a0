#include "orlicz/io.hpp"

#include "orlicz/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace orlicz::io {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
    throw Error(ErrorCode::Parse, "field '" + field + "': " + what);
}

const Json& require(const Json& j, const std::string& key, const std::string& ctx) {
    if (!j.is_object()) field_error(ctx, "expected an object");
    const auto it = j.find(key);
    if (it == j.end()) field_error(ctx + "." + key, "missing");
    return *it;
}

double num(const Json& j, const std::string& field) {
    if (!j.is_number()) field_error(field, "expected a number");
    return j.get<double>();
}

std::vector<double> num_array(const Json& j, const std::string& field) {
    if (!j.is_array()) field_error(field, "expected an array of numbers");
    std::vector<double> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(num(j[i], field + "[" + std::to_string(i) + "]"));
    return out;
}

Json num_or_inf_json(double v) {
    if (std::isinf(v)) return v > 0 ? Json("inf") : Json("-inf");
    return Json(v);
}

void escape_string(std::string& out, const std::string& s) {
    out.push_back('"');
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out.push_back(c);
                }
        }
    }
    out.push_back('"');
}

void emit(std::string& out, const Json& j, int indent, int depth) {
    const auto newline = [&](int d) {
        if (indent < 0) return;
        out.push_back('\n');
        out.append(static_cast<std::size_t>(indent * d), ' ');
    };
    switch (j.type()) {
        case Json::value_t::null: out += "null"; break;
        case Json::value_t::boolean: out += j.get<bool>() ? "true" : "false"; break;
        case Json::value_t::number_integer: out += std::to_string(j.get<std::int64_t>()); break;
        case Json::value_t::number_unsigned: out += std::to_string(j.get<std::uint64_t>()); break;
        case Json::value_t::number_float: {
            const double v = j.get<double>();
            if (std::isinf(v))
                escape_string(out, v > 0 ? "inf" : "-inf");
            else if (std::isnan(v))
                out += "null";
            else
                out += format_double(v);
            break;
        }
        case Json::value_t::string: escape_string(out, j.get<std::string>()); break;
        case Json::value_t::array: {
            // numeric arrays stay on one line
            const bool flat = std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
            out.push_back('[');
            bool first = true;
            for (const auto& e : j) {
                if (!first) out += flat ? ", " : ",";
                first = false;
                if (!flat) newline(depth + 1);
                emit(out, e, flat ? -1 : indent, depth + 1);
            }
            if (!flat && !j.empty()) newline(depth);
            out.push_back(']');
            break;
        }
        case Json::value_t::object: {
            out.push_back('{');
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out.push_back(',');
                first = false;
                newline(depth + 1);
                escape_string(out, it.key());
                out += indent < 0 ? ":" : ": ";
                emit(out, it.value(), indent, depth + 1);
            }
            if (!j.empty()) newline(depth);
            out.push_back('}');
            break;
        }
        default: out += "null";
    }
}

std::string profile_type(const Json& j) {
    if (j.is_number()) return "constant";
    return require(j, "type", "profile").get<std::string>();
}

Json orlicz_term_json(const OrliczTerm& t) {
    Json j;
    switch (t.type) {
        case OrliczTerm::Type::Power: j["type"] = "power"; break;
        case OrliczTerm::Type::Saturating: j["type"] = "saturating"; break;
        case OrliczTerm::Type::Hinge: j["type"] = "hinge"; break;
    }
    j["coef"] = t.coef;
    if (t.type != OrliczTerm::Type::Saturating) j["exponent"] = t.exponent;
    if (t.type != OrliczTerm::Type::Power) j["shift"] = t.shift;
    return j;
}

OrliczTerm orlicz_term_from_json(const Json& j, const std::string& field) {
    OrliczTerm t;
    const std::string type = require(j, "type", field).get<std::string>();
    if (type == "power")
        t.type = OrliczTerm::Type::Power;
    else if (type == "saturating")
        t.type = OrliczTerm::Type::Saturating;
    else if (type == "hinge")
        t.type = OrliczTerm::Type::Hinge;
    else
        field_error(field + ".type", "unknown orlicz term '" + type + "'");
    t.coef = num(require(j, "coef", field), field + ".coef");
    if (j.contains("exponent")) t.exponent = num(j["exponent"], field + ".exponent");
    if (j.contains("shift")) t.shift = num(j["shift"], field + ".shift");
    return t;
}

std::pair<double, double> domain_of(const Json& j) {
    const auto d = num_array(require(j, "domain", "phi"), "phi.domain");
    if (d.size() != 2) field_error("phi.domain", "expected [lower, upper]");
    return {d[0], d[1]};
}

double median(std::vector<double> v) {
    if (v.empty()) return 0.0;
    const std::size_t m = v.size() / 2;
    std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(m), v.end());
    double med = v[m];
    if (v.size() % 2 == 0) {
        const double lower = *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(m));
        med = 0.5 * (med + lower);
    }
    return med;
}

}  // namespace

std::string format_double(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string dump(const Json& j, int indent) {
    std::string out;
    emit(out, j, indent, 0);
    return out;
}

Json parse(const std::string& text, const std::string& source) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw Error(ErrorCode::Parse, source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + e.what());
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Parse, "cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), path);
}

double number_or_inf(const Json& j, const std::string& field) {
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "inf") return kInf;
        if (s == "-inf") return -kInf;
        field_error(field, "expected a number or \"inf\"");
    }
    return num(j, field);
}

Profile profile_from_json(const Json& j, const std::string& field) {
    const std::string type = profile_type(j);
    if (j.is_number()) return Profile::constant(j.get<double>());
    if (type == "constant") return Profile::constant(num(require(j, "value", field), field + ".value"));
    if (type == "piecewise_linear")
        return Profile::piecewise_linear(num_array(require(j, "knots", field), field + ".knots"),
                                         num_array(require(j, "values", field), field + ".values"));
    if (type == "log_blowup") return Profile::log_blowup(num(require(j, "origin", field), field + ".origin"));
    if (type == "holder_distance")
        return Profile::holder_distance(num_array(require(j, "centers", field), field + ".centers"),
                                        num(require(j, "exponent", field), field + ".exponent"),
                                        num(require(j, "scale", field), field + ".scale"));
    if (type == "smooth_plateau") {
        const auto plateau = num_array(require(j, "plateau", field), field + ".plateau");
        if (plateau.size() != 2) field_error(field + ".plateau", "expected [lo, hi]");
        return Profile::smooth_plateau(num(require(j, "low", field), field + ".low"),
                                       num(require(j, "high", field), field + ".high"), plateau[0], plateau[1],
                                       num(require(j, "ramp", field), field + ".ramp"));
    }
    field_error(field + ".type", "unknown profile type '" + type + "'");
}

Json to_json(const Profile& p) {
    Json j;
    const auto& rep = p.representation();
    if (const auto* c = std::get_if<Profile::Constant>(&rep)) {
        j["type"] = "constant";
        j["value"] = c->value;
    } else if (const auto* pl = std::get_if<Profile::PiecewiseLinear>(&rep)) {
        j["type"] = "piecewise_linear";
        j["knots"] = pl->knots;
        j["values"] = pl->values;
    } else {
        const auto& an = std::get<Profile::Analytic>(rep);
        if (an.type == "custom")
            throw Error(ErrorCode::Unsupported, "custom analytic profiles have no JSON form");
        j["type"] = an.type;
        for (const auto& [k, v] : an.params) {
            if (k == "centers" || k == "plateau")
                j[k] = v;
            else
                j[k] = v.front();
        }
    }
    return j;
}

Phi phi_from_json(const Json& j) {
    const std::string kind = require(j, "kind", "phi").get<std::string>();
    const auto [lo, hi] = domain_of(j);
    if (kind == "power") return Phi::power(num(require(j, "p", "phi"), "phi.p"), lo, hi);
    if (kind == "weighted_power")
        return Phi::weighted_power(num(require(j, "p", "phi"), "phi.p"),
                                   profile_from_json(require(j, "weight", "phi"), "phi.weight"), lo, hi);
    if (kind == "orlicz") {
        const Json& terms = require(j, "terms", "phi");
        if (!terms.is_array()) field_error("phi.terms", "expected an array");
        std::vector<OrliczTerm> out;
        for (std::size_t i = 0; i < terms.size(); ++i)
            out.push_back(orlicz_term_from_json(terms[i], "phi.terms[" + std::to_string(i) + "]"));
        return Phi::orlicz(std::move(out), lo, hi);
    }
    if (kind == "variable_exponent")
        return Phi::variable_exponent(profile_from_json(require(j, "p", "phi"), "phi.p"), lo, hi);
    if (kind == "double_phase")
        return Phi::double_phase(num(require(j, "q", "phi"), "phi.q"),
                                 profile_from_json(require(j, "a", "phi"), "phi.a"), lo, hi);
    if (kind == "chen_levine_rao") {
        const bool corrected = j.contains("continuity_corrected") ? j["continuity_corrected"].get<bool>() : true;
        return Phi::chen_levine_rao(profile_from_json(require(j, "p", "phi"), "phi.p"),
                                    profile_from_json(require(j, "q", "phi"), "phi.q"), corrected, lo, hi);
    }
    field_error("phi.kind", "unknown kind '" + kind + "'");
}

Json to_json(const Phi& phi) {
    Json j;
    j["kind"] = phi.kind_name();
    const auto& fam = phi.family();
    if (const auto* f = std::get_if<PowerPhi>(&fam)) j["p"] = f->p;
    if (const auto* f = std::get_if<WeightedPowerPhi>(&fam)) {
        j["p"] = f->p;
        j["weight"] = to_json(f->weight);
    }
    if (const auto* f = std::get_if<OrliczPhi>(&fam)) {
        j["terms"] = Json::array();
        for (const auto& t : f->terms) j["terms"].push_back(orlicz_term_json(t));
    }
    if (const auto* f = std::get_if<VariableExponentPhi>(&fam)) j["p"] = to_json(f->p);
    if (const auto* f = std::get_if<DoublePhasePhi>(&fam)) {
        j["q"] = f->q;
        j["a"] = to_json(f->a);
    }
    if (const auto* f = std::get_if<ChenLevineRaoPhi>(&fam)) {
        j["p"] = to_json(f->p);
        j["q"] = to_json(f->q);
        j["continuity_corrected"] = f->continuity_corrected;
    }
    j["domain"] = {phi.lower(), phi.upper()};
    return j;
}

BVFunction bv_from_json(const Json& j) {
    const auto iv = num_array(require(j, "interval", "function"), "function.interval");
    if (iv.size() != 2) field_error("function.interval", "expected [a, b]");
    const double a = iv[0], b = iv[1];
    const double base = j.contains("base") ? num(j["base"], "function.base") : 0.0;

    PiecewisePolynomial density = PiecewisePolynomial::constant(a, b, 0.0);
    if (j.contains("density")) {
        const Json& d = j["density"];
        const std::string type = require(d, "type", "function.density").get<std::string>();
        if (type == "poly_pieces") {
            auto breaks = num_array(require(d, "breaks", "function.density"), "function.density.breaks");
            const Json& cj = require(d, "coeffs", "function.density");
            if (!cj.is_array()) field_error("function.density.coeffs", "expected an array of arrays");
            std::vector<std::vector<double>> coeffs;
            for (std::size_t i = 0; i < cj.size(); ++i) {
                coeffs.push_back(num_array(cj[i], "function.density.coeffs[" + std::to_string(i) + "]"));
                if (coeffs.back().size() > 4)
                    field_error("function.density.coeffs[" + std::to_string(i) + "]", "degree must be <= 3");
            }
            density = PiecewisePolynomial(std::move(breaks), std::move(coeffs));
        } else if (type == "sampled") {
            const auto x = num_array(require(d, "x", "function.density"), "function.density.x");
            const auto v = num_array(require(d, "values", "function.density"), "function.density.values");
            density = PiecewisePolynomial::linear_interpolant(x, v);
        } else if (type == "constant") {
            density = PiecewisePolynomial::constant(a, b, num(require(d, "value", "function.density"),
                                                              "function.density.value"));
        } else {
            field_error("function.density.type", "unknown density type '" + type + "'");
        }
    }
    std::vector<Atom> atoms;
    if (j.contains("atoms")) {
        const Json& aj = j["atoms"];
        if (!aj.is_array()) field_error("function.atoms", "expected [[location, height], ...]");
        for (std::size_t i = 0; i < aj.size(); ++i) {
            const auto pair = num_array(aj[i], "function.atoms[" + std::to_string(i) + "]");
            if (pair.size() != 2) field_error("function.atoms[" + std::to_string(i) + "]", "expected [location, height]");
            atoms.push_back({pair[0], pair[1]});
        }
    }
    return BVFunction(a, b, base, std::move(density), std::move(atoms));
}

Json to_json(const BVFunction& f) {
    Json j;
    j["interval"] = {f.lower(), f.upper()};
    j["base"] = f.base();
    Json d;
    d["type"] = "poly_pieces";
    d["breaks"] = f.density().breaks();
    d["coeffs"] = f.density().coeffs();
    j["density"] = d;
    j["atoms"] = Json::array();
    for (const auto& at : f.atoms()) j["atoms"].push_back({at.location, at.height});
    return j;
}

Json to_json(const VariationEstimate& e) {
    Json j;
    j["value"] = num_or_inf_json(e.value.value());
    j["status"] = to_string(e.status);
    j["mesh_values"] = Json::array();
    for (const auto& mv : e.mesh_values) j["mesh_values"].push_back({mv.mesh, num_or_inf_json(mv.value)});
    if (e.partition_used) j["partition"] = e.partition_used->points();
    return j;
}

VariationEstimate estimate_from_json(const Json& j) {
    VariationEstimate e;
    e.value = number_or_inf(require(j, "value", "estimate"), "estimate.value");
    const std::string status = require(j, "status", "estimate").get<std::string>();
    if (status == "Converged")
        e.status = EstimateStatus::Converged;
    else if (status == "Divergent")
        e.status = EstimateStatus::Divergent;
    else if (status == "BudgetExhausted")
        e.status = EstimateStatus::BudgetExhausted;
    else
        field_error("estimate.status", "unknown status '" + status + "'");
    for (const auto& mv : require(j, "mesh_values", "estimate"))
        e.mesh_values.push_back({num(mv.at(0), "estimate.mesh_values"), number_or_inf(mv.at(1), "estimate.mesh_values")});
    if (j.contains("partition")) {
        auto pts = num_array(j["partition"], "estimate.partition");
        if (pts.size() >= 2) {
            const double a = pts.front(), b = pts.back();
            e.partition_used = Partition(std::move(pts), a, b);
        }
    }
    return e;
}

Json to_json(const NormResult& n) {
    Json j;
    j["value"] = num_or_inf_json(n.value.value());
    j["modular_at_value"] = num_or_inf_json(n.modular_at_value);
    j["bisection_iterations"] = n.bisection_iterations;
    return j;
}

NormResult norm_from_json(const Json& j) {
    NormResult n;
    n.value = number_or_inf(require(j, "value", "norm"), "norm.value");
    n.modular_at_value = number_or_inf(require(j, "modular_at_value", "norm"), "norm.modular_at_value");
    n.bisection_iterations = require(j, "bisection_iterations", "norm").get<int>();
    return n;
}

Json to_json(const ConditionReport& r) {
    Json j;
    j["condition"] = to_string(r.condition);
    j["parameter"] = r.parameter;
    j["verdict"] = to_string(r.verdict);
    if (r.witness)
        j["witness"] = {{"x", r.witness->x}, {"y", r.witness->y}, {"t", r.witness->t}, {"r", r.witness->r}};
    else
        j["witness"] = nullptr;
    j["constants"] = Json::object();
    for (const auto& [k, v] : r.constants) j["constants"][k] = num_or_inf_json(v);
    j["method"] = r.method;
    return j;
}

RestoreConfig restore_config_from_json(const Json& j) {
    RestoreConfig cfg(phi_from_json(require(j, "phi", "config")));
    if (j.contains("fidelity_weight")) cfg.fidelity_weight = num(j["fidelity_weight"], "config.fidelity_weight");
    if (j.contains("epsilon")) cfg.epsilon = num(j["epsilon"], "config.epsilon");
    if (j.contains("max_iters")) cfg.max_iters = j["max_iters"].get<std::size_t>();
    if (j.contains("armijo_c")) cfg.armijo_c = num(j["armijo_c"], "config.armijo_c");
    if (j.contains("initial_step")) cfg.initial_step = num(j["initial_step"], "config.initial_step");
    if (j.contains("step_growth")) cfg.step_growth = num(j["step_growth"], "config.step_growth");
    if (j.contains("rel_tol")) cfg.rel_tol = num(j["rel_tol"], "config.rel_tol");
    cfg.validate();
    return cfg;
}

Samples read_xy_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Parse, "cannot open '" + path + "'");
    Samples s;
    std::string line;
    std::size_t lineno = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (!header_seen) {
            header_seen = true;
            if (std::count(line.begin(), line.end(), ',') != 1)
                throw Error(ErrorCode::Parse, path + ":" + std::to_string(lineno) + ": expected header 'x,value'");
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw Error(ErrorCode::Parse, path + ":" + std::to_string(lineno) + ": expected two columns");
        double x = 0.0, v = 0.0;
        try {
            std::size_t used = 0;
            x = std::stod(line.substr(0, comma), &used);
            v = std::stod(line.substr(comma + 1), &used);
        } catch (const std::exception&) {
            throw Error(ErrorCode::Parse, path + ":" + std::to_string(lineno) + ": non-numeric field");
        }
        if (!std::isfinite(x) || !std::isfinite(v))
            throw Error(ErrorCode::Parse, path + ":" + std::to_string(lineno) + ": non-finite value");
        if (!s.x.empty() && !(x > s.x.back()))
            throw Error(ErrorCode::Parse, path + ":" + std::to_string(lineno) + ": x must be strictly increasing");
        s.x.push_back(x);
        s.value.push_back(v);
    }
    if (s.x.size() < 2) throw Error(ErrorCode::Parse, path + ": need at least two samples");
    return s;
}

void write_csv(const std::string& path, const std::string& header, const std::vector<std::vector<double>>& rows) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
    out << header << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_double(row[i]);
        out << '\n';
    }
}

BVFunction bv_from_samples(const Samples& s, std::optional<double> jump_threshold) {
    const std::size_t n = s.x.size();
    if (n < 2 || s.value.size() != n) throw Error(ErrorCode::InvalidArgument, "need at least two matching samples");
    std::vector<double> inc(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) inc[i] = std::abs(s.value[i + 1] - s.value[i]);
    const double thresh = jump_threshold ? *jump_threshold : 5.0 * median(inc);
    const bool detect = !jump_threshold || *jump_threshold >= 0.0;

    std::vector<std::vector<double>> coeffs;
    std::vector<Atom> atoms;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double dv = s.value[i + 1] - s.value[i];
        if (detect && std::abs(dv) > thresh && dv != 0.0) {
            atoms.push_back({s.x[i], dv});
            coeffs.push_back({0.0});
        } else {
            coeffs.push_back({dv / (s.x[i + 1] - s.x[i])});
        }
    }
    return BVFunction(s.x.front(), s.x.back(), s.value.front(), PiecewisePolynomial(s.x, std::move(coeffs)),
                      std::move(atoms));
}

Signal signal_from_samples(const Samples& s) {
    const std::size_t n = s.x.size();
    Signal sig;
    sig.x0 = s.x.front();
    sig.h = (s.x.back() - s.x.front()) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i)
        if (std::abs(s.x[i] - sig.x(i)) > 1e-9 * std::max(1.0, std::abs(s.x.back() - s.x.front())))
            throw Error(ErrorCode::Parse, "signal samples must be uniformly spaced (row " + std::to_string(i + 2) + ")");
    sig.u = s.value;
    sig.validate();
    return sig;
}

}  // namespace orlicz::io
