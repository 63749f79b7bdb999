#include "dbvp/problem_io.hpp"

#include "dbvp/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>

namespace dbvp {

namespace {

using nlohmann::json;

const json& require_field(const json& doc, const std::string& field) {
    if (!doc.contains(field)) throw SchemaError("problem document: missing field '" + field + "'");
    return doc.at(field);
}

std::vector<double> require_array(const json& doc, const std::string& field, size_t len) {
    const json& a = require_field(doc, field);
    if (!a.is_array()) throw SchemaError("problem document: field '" + field + "' must be an array");
    if (a.size() != len)
        throw SchemaError("problem document: field '" + field + "' must have " +
                          std::to_string(len) + " entries, got " + std::to_string(a.size()));
    std::vector<double> out;
    out.reserve(len);
    for (const auto& v : a) {
        if (!v.is_number())
            throw SchemaError("problem document: field '" + field + "' must contain numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

double require_number(const json& doc, const std::string& field) {
    const json& v = require_field(doc, field);
    if (!v.is_number()) throw SchemaError("problem document: field '" + field + "' must be a number");
    return v.get<double>();
}

BuiltinParams parse_builtin_params(const json& params, int T) {
    BuiltinParams bp;
    if (params.is_null()) return bp;
    if (!params.is_object()) throw SchemaError("problem document: f.params must be an object");
    if (params.contains("l")) bp.l = params.at("l").get<int>();
    if (params.contains("c")) bp.c = params.at("c").get<double>();
    if (params.contains("slope")) bp.slope = params.at("slope").get<double>();
    if (params.contains("u_coeff")) bp.u_coeff = params.at("u_coeff").get<double>();
    if (params.contains("q_weight")) {
        const json& q = params.at("q_weight");
        if (q.is_number()) {
            bp.q_weight = {q.get<double>()};
        } else if (q.is_array()) {
            if (q.size() != static_cast<size_t>(T) && q.size() != 1)
                throw SchemaError("problem document: f.params.q_weight must have T entries");
            for (const auto& v : q) bp.q_weight.push_back(v.get<double>());
        } else {
            throw SchemaError("problem document: f.params.q_weight must be number or array");
        }
    }
    if (params.contains("r_weight")) {
        const json& r = params.at("r_weight");
        if (r.is_number()) {
            const double c = r.get<double>();
            bp.r_weight = [c](double) { return c; };
        } else if (r.is_object() && r.contains("affine")) {
            // r(u) = a + b*u, clamped away from zero to stay positive.
            const auto& aff = r.at("affine");
            const double a = aff.at(0).get<double>();
            const double b = aff.at(1).get<double>();
            bp.r_weight = [a, b](double u) { return std::max(a + b * u, 1e-12); };
        } else {
            throw SchemaError("problem document: f.params.r_weight must be number or {affine:[a,b]}");
        }
    }
    if (params.contains("xs")) bp.xs = params.at("xs").get<std::vector<double>>();
    if (params.contains("ys")) bp.ys = params.at("ys").get<std::vector<double>>();
    return bp;
}

Nonlinearity parse_nonlinearity(const json& doc, int T) {
    const json& f = require_field(doc, "f");
    if (!f.is_object()) throw SchemaError("problem document: field 'f' must be an object");
    const json& name = require_field(f, "name");
    if (!name.is_string()) throw SchemaError("problem document: f.name must be a string");
    const json params = f.contains("params") ? f.at("params") : json();
    BuiltinParams bp = parse_builtin_params(params, T);
    try {
        Nonlinearity nl = builtin_nonlinearity(name.get<std::string>(), bp);
        if (!params.is_null()) nl.params_doc = params.dump();
        return nl;
    } catch (const InvalidInputError& e) {
        throw SchemaError(std::string("problem document: f: ") + e.what());
    }
}

} // namespace

Problem parse_problem(const json& doc) {
    if (!doc.is_object()) throw SchemaError("problem document: root must be an object");
    const json& kind = require_field(doc, "kind");
    if (!kind.is_string()) throw SchemaError("problem document: field 'kind' must be a string");
    const json& tj = require_field(doc, "T");
    if (!tj.is_number_integer() || tj.get<int>() < 1)
        throw SchemaError("problem document: field 'T' must be a positive integer");
    const int T = tj.get<int>();

    if (kind == "dirichlet") {
        DirichletProblem p;
        p.T = T;
        p.p = require_array(doc, "p", static_cast<size_t>(T) + 1);
        p.g = require_array(doc, "g", static_cast<size_t>(T));
        p.f = parse_nonlinearity(doc, T);
        p.M_param = require_number(doc, "M");
        if (doc.contains("alpha")) p.alpha = doc.at("alpha").get<double>();
        p.validate();
        return p;
    }
    if (kind == "emden") {
        EmdenProblem p;
        p.T = T;
        p.p = require_array(doc, "p", static_cast<size_t>(T) + 1);
        p.q = require_array(doc, "q", static_cast<size_t>(T));
        p.g = require_array(doc, "g", static_cast<size_t>(T));
        p.f = parse_nonlinearity(doc, T);
        p.M_param = require_number(doc, "M");
        p.r = require_number(doc, "r");
        p.validate();
        return p;
    }
    throw SchemaError("problem document: field 'kind' must be 'dirichlet' or 'emden'");
}

Problem load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open problem file: " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw SchemaError("problem file '" + path + "': " + e.what());
    }
    return parse_problem(doc);
}

namespace {

json nonlinearity_to_json(const Nonlinearity& f) {
    // Builtins carry their registry name; closures built in code do not round-trip.
    json out;
    out["name"] = f.name;
    if (!f.params_doc.empty()) out["params"] = json::parse(f.params_doc);
    return out;
}

} // namespace

json problem_to_json(const Problem& prob) {
    json doc;
    if (const auto* d = std::get_if<DirichletProblem>(&prob)) {
        doc["kind"] = "dirichlet";
        doc["T"] = d->T;
        doc["p"] = d->p;
        doc["g"] = d->g;
        doc["f"] = nonlinearity_to_json(d->f);
        doc["M"] = d->M_param;
        if (d->alpha) doc["alpha"] = *d->alpha;
    } else {
        const auto& e = std::get<EmdenProblem>(prob);
        doc["kind"] = "emden";
        doc["T"] = e.T;
        doc["p"] = e.p;
        doc["q"] = e.q;
        doc["g"] = e.g;
        doc["f"] = nonlinearity_to_json(e.f);
        doc["M"] = e.M_param;
        doc["r"] = e.r;
    }
    return doc;
}

} // namespace dbvp
