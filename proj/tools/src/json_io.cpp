#include "powerpoly_tools/json_io.hpp"

#include <fstream>
#include <sstream>

namespace powerpoly::io {

Rational rational_from_json(const json& j, const std::string& what) {
    if (j.is_number_integer()) return Rational(Integer(j.dump()));
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const ParseError& e) {
            throw InvalidArgument(what + ": " + e.what());
        }
    }
    if (j.is_number_float())
        throw InvalidArgument(what + ": floating-point values are not accepted; write an exact rational such as \"1/20\"");
    throw InvalidArgument(what + ": expected an integer or a rational string");
}

json rational_to_json(const Rational& r) { return r.get_str(); }

RationalVector vector_from_json(const json& j, const std::string& what) {
    if (!j.is_array()) throw InvalidArgument(what + ": expected an array");
    RationalVector v;
    for (std::size_t i = 0; i < j.size(); ++i) v.push_back(rational_from_json(j[i], what + "[" + std::to_string(i) + "]"));
    return v;
}

RationalMatrix matrix_from_json(const json& j, const std::string& what) {
    if (!j.is_array()) throw InvalidArgument(what + ": expected an array of rows");
    RationalMatrix m;
    for (std::size_t i = 0; i < j.size(); ++i) m.push_back(vector_from_json(j[i], what + "[" + std::to_string(i) + "]"));
    return m;
}

json vector_to_json(const RationalVector& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.get_str());
    return a;
}

json exponents_to_json(const Exponents& e) {
    json a = json::array();
    for (auto x : e) a.push_back(x);
    return a;
}

namespace {

std::size_t size_param(const json& params, const char* key, bool required = true) {
    if (!params.contains(key)) {
        if (required) throw InvalidArgument(std::string("missing parameter '") + key + "'");
        return 0;
    }
    const json& v = params.at(key);
    if (!v.is_number_integer() || v.get<long long>() < 0)
        throw InvalidArgument(std::string("parameter '") + key + "' must be a nonnegative integer");
    return v.get<std::size_t>();
}

}  // namespace

HypothesisSpec hypothesis_spec_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind")) throw InvalidArgument("hypothesis spec needs a \"kind\" field");
    HypothesisSpec s;
    s.kind = j.at("kind").get<std::string>();
    const json params = j.value("params", json::object());
    if (s.kind == "independence" || s.kind == "rank_lt") {
        s.p = size_param(params, "p");
        s.q = size_param(params, "q");
        if (s.kind == "rank_lt") s.r = size_param(params, "r");
    } else if (s.kind == "symmetry") {
        s.p = size_param(params, "p");
    } else if (s.kind == "sphere") {
        s.k = size_param(params, "k");
        if (params.contains("delta")) s.delta = rational_from_json(params.at("delta"), "delta");
        if (params.contains("delta_sq")) s.delta_sq = rational_from_json(params.at("delta_sq"), "delta_sq");
    } else if (s.kind == "affine") {
        s.matrix = matrix_from_json(params.at("C"), "C");
        s.vector = vector_from_json(params.at("d"), "d");
    } else if (s.kind == "polytope") {
        s.matrix = matrix_from_json(params.at("A"), "A");
        s.vector = vector_from_json(params.at("b"), "b");
        s.k = size_param(params, "k", false);
        if (s.k == 0 && !s.matrix.empty()) s.k = s.matrix.front().size() + 1;
    } else if (s.kind == "logodds") {
        try {
            s.a = vector_from_json(params.at("a"), "a");
        } catch (const InvalidArgument& e) {
            throw InvalidArgument(std::string(e.what()) +
                                  "; log-odds coefficients must be rational, since with irrational coefficients no "
                                  "non-trivial unbiased test exists");
        }
        s.c = rational_from_json(params.value("c", json(1)), "c");
        s.k = size_param(params, "k", false);
    } else if (s.kind == "custom") {
        for (const auto& g : params.at("generators")) s.generators.push_back(g.get<std::string>());
        if (params.contains("variables"))
            for (const auto& v : params.at("variables")) s.variables.push_back(v.get<std::string>());
        s.k = size_param(params, "k", false);
    } else if (s.kind != "motzkin") {
        throw InvalidArgument("unknown hypothesis kind '" + s.kind + "'");
    }
    return s;
}

json hypothesis_to_json(const NullHypothesis& h) {
    json j;
    j["kind"] = to_string(h.kind);
    j["k"] = h.k;
    j["variables"] = h.variables;
    json gens = json::array();
    for (const auto& g : h.generators) gens.push_back(to_string(g, h.variables));
    j["generators"] = gens;
    return j;
}

TestFunction test_from_json(const json& j) {
    if (!j.contains("n") || !j.contains("k") || !j.contains("values"))
        throw InvalidArgument("test function JSON needs n, k and values");
    const unsigned n = j.at("n").get<unsigned>();
    const std::size_t k = j.at("k").get<std::size_t>();
    const auto points = compositions(n, static_cast<unsigned>(k));
    std::vector<Rational> values(points.size());
    std::vector<bool> seen(points.size(), false);
    for (const auto& entry : j.at("values")) {
        Exponents x;
        for (const auto& v : entry.at("x")) x.push_back(v.get<std::uint32_t>());
        if (x.size() != k || total_degree(x) != n) throw InvalidArgument("count vector does not sum to n over k cells");
        std::size_t r = composition_rank(x);
        if (seen[r]) throw InvalidArgument("duplicate count vector in test function");
        seen[r] = true;
        values[r] = rational_from_json(entry.at("phi"), "phi");
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (!seen[i]) throw InvalidArgument("test function is missing count vectors (expected all " +
                                            std::to_string(points.size()) + ")");
    return TestFunction(n, k, std::move(values));
}

json test_to_json(const TestFunction& phi) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["n"] = phi.n();
    j["k"] = phi.k();
    json values = json::array();
    for (std::size_t i = 0; i < phi.points().size(); ++i)
        values.push_back({{"x", exponents_to_json(phi.points()[i])}, {"phi", phi.values()[i].get_str()}});
    j["values"] = values;
    return j;
}

json basis_to_json(const GroebnerBasis& gb, const std::vector<std::string>& vars) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["order"] = to_string(gb.order);
    j["variables"] = vars;
    json elems = json::array(), degs = json::array();
    for (const auto& g : gb.elements) {
        elems.push_back(to_string(g, vars));
        degs.push_back(g.degree());
    }
    j["basis"] = elems;
    j["degrees"] = degs;
    return j;
}

json threshold_to_json(const ThresholdReport& r, const std::vector<std::string>& vars) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["ntub_bound"] = r.ntub_bound;
    j["sub_bound"] = r.sub_bound;
    j["cut_out_degree"] = r.cut_out_degree;
    j["exactness"] = to_string(r.exactness);
    j["justification"] = r.justification;
    j["variables"] = vars;
    j["basis_degrees"] = r.basis_degrees;
    j["redundant"] = r.redundant;
    j["ntub_witness"] = to_string(r.ntub_witness, vars);
    j["sub_witness"] = to_string(r.sub_witness, vars);
    json gram = json::array();
    for (std::size_t i = 0; i < r.sub_generators.size(); ++i)
        gram.push_back({{"generator", to_string(r.sub_generators[i], vars)}, {"weight", r.sub_weights[i].get_str()}});
    j["sub_gram_diagonal"] = gram;
    j["notes"] = r.notes;
    return j;
}

json umpu_power_to_json(const UMPUPower& u, const std::vector<std::string>& vars) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["form"] = to_string(u.form);
    j["alpha"] = u.alpha.get_str();
    j["c_alpha"] = u.c_alpha.get_str();
    j["n"] = u.beta.n;
    j["k"] = u.beta.k;
    j["variables"] = vars;
    j["f_tilde"] = to_string(u.f_tilde, vars);
    j["beta"] = to_string(u.beta.poly, vars);
    return j;
}

json existence_to_json(const ExistenceVerdict& v, const std::vector<std::string>& vars) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["exists"] = v.exists;
    std::vector<std::string> sub(vars.begin(), vars.end() - 1);
    if (v.exists) {
        j["separating"] = to_string(*v.separating, sub);
    } else {
        j["facets"] = {v.facet_i, v.facet_j};
        j["point"] = vector_to_json(v.point);
    }
    return j;
}

json polytope_to_json(const CoefficientPolytope& p, const std::vector<std::string>& vars) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["k"] = p.k;
    j["n"] = p.n;
    j["n_prime"] = p.n_prime;
    j["alpha"] = p.alpha.get_str();
    json coords = json::array();
    for (const auto& c : p.coordinates) coords.push_back(to_string(Polynomial::monomial(c), vars));
    j["coordinates"] = coords;
    j["halfspace_count"] = p.halfspace_count();
    json rows = json::array();
    for (const auto& r : p.rows)
        rows.push_back({{"L", exponents_to_json(r.multiindex)},
                        {"row", vector_to_json(r.row)},
                        {"lower", r.lower.get_str()},
                        {"upper", r.upper.get_str()}});
    j["hrep"] = rows;
    if (p.vertices) {
        json vs = json::array();
        for (const auto& v : *p.vertices) vs.push_back(vector_to_json(v));
        j["vrep"] = vs;
    }
    return j;
}

json verdict_to_json(const UMPUVerdict& v, const CoefficientPolytope& p, const std::vector<std::string>& vars) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["status"] = to_string(v.status);
    j["reason"] = v.reason;
    j["n"] = p.n;
    j["alpha"] = p.alpha.get_str();
    j["variables"] = vars;
    json coords = json::array();
    for (const auto& c : p.coordinates) coords.push_back(to_string(Polynomial::monomial(c), vars));
    j["coordinates"] = coords;
    if (v.vertices_enumerated) j["vertex_count"] = v.vertex_count;
    if (v.status == UMPUStatus::NotExists) {
        json layer = json::array();
        for (const auto& c : v.layer_coordinates) layer.push_back(to_string(Polynomial::monomial(c), vars));
        j["certificate"] = {{"layer", v.failed_layer},
                            {"coordinates", layer},
                            {"first", vector_to_json(v.witness_first)},
                            {"second", vector_to_json(v.witness_second)}};
    } else {
        j["h_star"] = vector_to_json(v.h_star);
        j["h"] = to_string(p.h_polynomial(v.h_star), vars);
        if (v.beta) j["beta"] = to_string(v.beta->poly, vars);
    }
    return j;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InvalidArgument("malformed JSON in '" + path + "': " + e.what());
    }
}

}  // namespace powerpoly::io
