#include "powerpoly_tools/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <regex>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "powerpoly_tools/json_io.hpp"

namespace powerpoly::cli {

using io::json;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) {
        cur.erase(0, cur.find_first_not_of(" \t"));
        cur.erase(cur.find_last_not_of(" \t") + 1);
        if (!cur.empty()) parts.push_back(cur);
    }
    return parts;
}

// Names from --vars, else p1..pk with k from --k or the largest p<i> index in the texts.
std::vector<std::string> resolve_variables(const RunConfig& c, const std::vector<std::string>& texts) {
    if (!c.variables.empty()) return split(c.variables, ',');
    std::size_t k = c.k;
    static const std::regex ident(R"([A-Za-z_][A-Za-z0-9_]*)");
    static const std::regex indexed(R"(p([1-9][0-9]*))");
    for (const auto& t : texts)
        for (auto it = std::sregex_iterator(t.begin(), t.end(), ident); it != std::sregex_iterator(); ++it) {
            std::smatch m;
            std::string name = it->str();
            if (!std::regex_match(name, m, indexed))
                throw InvalidArgument("cannot infer variables from '" + name + "'; pass --vars");
            k = std::max<std::size_t>(k, std::stoul(m[1].str()));
        }
    if (k == 0) throw InvalidArgument("cannot infer the number of variables; pass --k or --vars");
    return default_variable_names(k);
}

Rational parse_alpha(const std::string& text) {
    if (text.empty()) throw InvalidArgument("--alpha is required");
    if (text.find('/') == std::string::npos && text.find_first_of(".eE") != std::string::npos)
        throw InvalidArgument("--alpha must be an exact rational such as 1/20, not a decimal");
    Rational a = parse_rational(text);
    if (a <= 0 || a >= 1) throw InvalidArgument("--alpha must lie in (0, 1)");
    return a;
}

class Output {
public:
    Output(const std::string& path, std::ostream& fallback) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw InvalidArgument("cannot write '" + path + "'");
        }
        stream_ = path.empty() ? &fallback : &file_;
    }
    std::ostream& stream() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

void emit(const json& j, const RunConfig& c, std::ostream& out) {
    Output o(c.output_path, out);
    o.stream() << j.dump(2) << '\n';
}

NullHypothesis load_hypothesis(const RunConfig& c, io::json* raw = nullptr) {
    if (c.hypothesis_path.empty()) throw InvalidArgument("--hypothesis is required");
    json j = io::read_json_file(c.hypothesis_path);
    if (raw) *raw = j;
    return build_hypothesis(io::hypothesis_spec_from_json(j));
}

std::vector<Rational> parse_weights(const std::string& text) {
    std::vector<Rational> w;
    for (const auto& part : split(text, ',')) w.push_back(parse_rational(part));
    return w;
}

std::vector<std::string> head(const std::vector<std::string>& vars) { return {vars.begin(), vars.end() - 1}; }

int cmd_gb(const RunConfig& c, std::ostream& out, StepBudget& budget) {
    std::vector<Polynomial> gens;
    std::vector<std::string> vars;
    MonomialOrder order = parse_order(c.order);
    if (!c.hypothesis_path.empty()) {
        NullHypothesis h = load_hypothesis(c);
        gens = h.substituted_generators();
        vars = head(h.variables);
    } else {
        if (c.generators.empty()) throw InvalidArgument("gb needs --gens or --hypothesis");
        vars = resolve_variables(c, c.generators);
        for (const auto& g : c.generators) gens.push_back(parse_poly(g, vars, order));
    }
    emit(io::basis_to_json(buchberger_reduced(gens, order, &budget), vars), c, out);
    return kOk;
}

int cmd_threshold(const RunConfig& c, std::ostream& out, StepBudget& budget) {
    json raw;
    if (c.hypothesis_path.empty()) throw InvalidArgument("--hypothesis is required");
    raw = io::read_json_file(c.hypothesis_path);
    if (raw.value("kind", "") == "union") {
        std::vector<Polynomial> gens, witnesses;
        std::size_t k = 0;
        for (const auto& comp : raw.at("params").at("components")) {
            NullHypothesis h = build_hypothesis(io::hypothesis_spec_from_json(comp));
            if (h.generators.size() != 1)
                throw InvalidArgument("union components must each have a single irreducible generator");
            if (k && h.k != k) throw InvalidArgument("union components live in different simplices");
            k = h.k;
            gens.push_back(h.generators.front());
            witnesses.push_back(h.generators.front() * h.generators.front());
        }
        auto vars = default_variable_names(k);
        int t = union_threshold(gens);
        json j;
        j["schema_version"] = io::kSchemaVersion;
        j["ntub_bound"] = t;
        j["sub_bound"] = t;
        j["variables"] = vars;
        j["sub_witness"] = to_string(union_separating(witnesses, UnionKind::SUB), vars);
        j["justification"] = "union of hypotheses with irreducible generators: 2 * sum of degrees";
        emit(j, c, out);
        return kOk;
    }
    NullHypothesis h = build_hypothesis(io::hypothesis_spec_from_json(raw));
    if (h.kind == HypothesisKind::RankLessThan) {
        emit(io::threshold_to_json(rank_threshold(h.shape->p, h.shape->q, h.rank), h.variables), c, out);
        return kOk;
    }
    SosOptions opt;
    opt.weights = parse_weights(c.weights);
    opt.assert_regular = c.assert_regular;
    opt.seed = c.seed;
    GroebnerBasis gb = hypothesis_basis(h, parse_order(c.order), &budget);
    emit(io::threshold_to_json(sos_bounds(gb, h, opt, &budget), head(h.variables)), c, out);
    return kOk;
}

int cmd_separating(const RunConfig& c, std::ostream& out, StepBudget& budget) {
    NullHypothesis h = load_hypothesis(c);
    json j;
    j["schema_version"] = io::kSchemaVersion;
    Polynomial witness;
    std::vector<std::string> vars = head(h.variables);
    if (h.kind == HypothesisKind::Polytope) {
        ExistenceVerdict v = polytope_existence(h.matrix, h.vector, h.k, &budget);
        j["existence"] = io::existence_to_json(v, h.variables);
        if (!v.exists) {
            emit(j, c, out);
            return kNegativeVerdict;
        }
        witness = *v.separating;
        j["kind"] = "NTUB";
    } else {
        SosOptions opt;
        opt.weights = parse_weights(c.weights);
        GroebnerBasis gb = hypothesis_basis(h, parse_order(c.order), &budget);
        ThresholdReport r = sos_bounds(gb, h, opt, &budget);
        j["ntub_witness"] = to_string(r.ntub_witness, vars);
        witness = r.sub_witness;
        j["kind"] = "SUB";
    }
    j["variables"] = vars;
    j["separating"] = to_string(witness, vars);
    if (c.n > 0) {
        NormalizedPower np = normalize_to_power(witness, c.n, h.k);
        j["power"] = {{"n", c.n},
                      {"a", np.a.get_str()},
                      {"b", np.b.get_str()},
                      {"size", np.size().get_str()},
                      {"variables", h.variables},
                      {"beta", to_string(np.power.poly, h.variables)}};
    }
    emit(j, c, out);
    return kOk;
}

int cmd_umpu(const RunConfig& c, std::ostream& out, StepBudget& budget) {
    if (c.f.empty()) throw InvalidArgument("umpu needs --f");
    if (c.n == 0) throw InvalidArgument("umpu needs --n");
    Rational alpha = parse_alpha(c.alpha);
    auto vars = resolve_variables(c, {c.f});
    Polynomial f = parse_poly(c.f, vars);
    const std::size_t k = c.k ? c.k : vars.size();
    auto kvars = vars.size() == k ? vars : default_variable_names(k);
    if (c.mode == "principal") {
        emit(io::umpu_power_to_json(principal_umpu(f, c.n, alpha, k), kvars), c, out);
        return kOk;
    }
    if (c.mode == "semialgebraic") {
        emit(io::umpu_power_to_json(semialgebraic_umpu(f, c.n, alpha, k), kvars), c, out);
        return kOk;
    }
    if (c.mode != "search") throw InvalidArgument("unknown --mode '" + c.mode + "'");
    CoefficientPolytope p = coefficient_polytope(f, c.n, alpha, k);
    UMPUVerdict v;
    if (c.enumerate) {
        p = enumerate_vertices(std::move(p), &budget);
        ComponentwiseMax cm = componentwise_max(*p.vertices);
        if (cm.maximum) {
            v.status = UMPUStatus::Exists;
            v.h_star = *cm.maximum;
            v.beta = make_power_polynomial(p.power(v.h_star), p.n, p.k);
            v.reason = "the coefficient polytope has a componentwise maximum vertex";
        } else {
            v = peeling_recursion(p, &budget);
        }
        v.vertex_count = p.vertices->size();
        v.vertices_enumerated = true;
    } else {
        v = peeling_recursion(p, &budget);
    }
    if (!c.polytope_output_path.empty()) {
        std::ofstream po(c.polytope_output_path);
        if (!po) throw InvalidArgument("cannot write '" + c.polytope_output_path + "'");
        po << io::polytope_to_json(p, kvars).dump(2) << '\n';
    }
    emit(io::verdict_to_json(v, p, kvars), c, out);
    return v.status == UMPUStatus::NotExists ? kNegativeVerdict : kOk;
}

int cmd_polytope_exists(const RunConfig& c, std::ostream& out, StepBudget& budget) {
    NullHypothesis h = load_hypothesis(c);
    if (h.kind != HypothesisKind::Polytope) throw InvalidArgument("polytope-exists needs a polytope hypothesis");
    ExistenceVerdict v = polytope_existence(h.matrix, h.vector, h.k, &budget);
    emit(io::existence_to_json(v, h.variables), c, out);
    return v.exists ? kOk : kNegativeVerdict;
}

TestFunction load_test(const RunConfig& c) {
    if (!c.test_path.empty()) return io::test_from_json(io::read_json_file(c.test_path));
    if (c.maxstat_n > 0) {
        if (c.maxstat_c.empty()) throw InvalidArgument("--maxstat-c is required with --maxstat-n");
        return max_statistic_test(c.maxstat_n, parse_rational(c.maxstat_t), parse_rational(c.maxstat_c));
    }
    throw InvalidArgument("a test is required: --test file or --maxstat-n/--maxstat-c");
}

int cmd_power_grid(const RunConfig& c, std::ostream& out) {
    if (c.resolution < 2) throw InvalidArgument("--res must be at least 2");
    TestFunction phi = load_test(c);
    PowerGrid grid = power_grid(phi, c.resolution, parse_rational(c.grid_max));
    Output o(c.output_path, out);
    write_csv(o.stream(), grid);
    return kOk;
}

int cmd_recover_test(const RunConfig& c, std::ostream& out) {
    if (c.beta.empty()) throw InvalidArgument("recover-test needs --beta");
    auto vars = resolve_variables(c, {c.beta});
    Polynomial beta = parse_poly(c.beta, vars);
    unsigned n = c.n ? c.n : static_cast<unsigned>(std::max(beta.degree(), 0));
    TestFunction phi = recover_test(make_power_polynomial(beta, n, vars.size()));
    emit(io::test_to_json(phi), c, out);
    return kOk;
}

int cmd_mc_validate(const RunConfig& c, std::ostream& out) {
    TestFunction phi = load_test(c);
    if (c.points.empty()) throw InvalidArgument("mc-validate needs --points");
    if (c.reps < 1) throw InvalidArgument("--reps must be at least 1");
    json j;
    j["schema_version"] = io::kSchemaVersion;
    j["reps"] = c.reps;
    j["seed"] = c.seed;
    json rows = json::array();
    bool all_ok = true;
    std::uint64_t index = 0;
    for (const auto& pt : split(c.points, ';')) {
        RationalVector pi;
        for (const auto& x : split(pt, ',')) pi.push_back(parse_rational(x));
        Rational exact = exact_power(phi, pi);
        std::vector<double> pd;
        for (const auto& x : pi) pd.push_back(to_double(x));
        MonteCarloEstimate est = monte_carlo_power(phi, pd, c.reps, c.seed + index++);
        double diff = std::abs(est.estimate - to_double(exact));
        bool ok = est.standard_error > 0 ? diff <= 4 * est.standard_error : diff == 0;
        all_ok &= ok;
        rows.push_back({{"point", io::vector_to_json(pi)},
                        {"exact", exact.get_str()},
                        {"exact_decimal", to_double(exact)},
                        {"estimate", est.estimate},
                        {"standard_error", est.standard_error},
                        {"within_4se", ok}});
    }
    j["results"] = rows;
    j["agree"] = all_ok;
    emit(j, c, out);
    return all_ok ? kOk : kNegativeVerdict;
}

}  // namespace

std::optional<RunConfig> parse_arguments(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
                                         int& exit_code) {
    RunConfig c;
    CLI::App app{"Exact unbiased-test analysis for multinomial null hypotheses", "powerpoly"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "powerpoly 0.1.0");

    auto common = [&](CLI::App* s) {
        s->add_option("-o,--output", c.output_path, "Write the artifact here instead of stdout");
        s->add_option("--step-limit", c.step_limit, "Abort with exit code 3 after this many steps")
            ->check(CLI::PositiveNumber);
    };
    auto vars = [&](CLI::App* s) {
        s->add_option("--vars", c.variables, "Comma-separated variable names");
        s->add_option("--k", c.k, "Number of categories (variables p1..pk)");
    };

    auto* gb = app.add_subcommand("gb", "Reduced Groebner basis");
    gb->add_option("--gens", c.generators, "Generator polynomial (repeatable)");
    gb->add_option("--hypothesis", c.hypothesis_path, "Hypothesis spec JSON (last coordinate substituted)");
    gb->add_option("--order", c.order, "grevlex or grlex");
    vars(gb);
    common(gb);

    auto* th = app.add_subcommand("threshold", "SOS unbiasedness thresholds");
    th->add_option("--hypothesis", c.hypothesis_path, "Hypothesis spec JSON")->required();
    th->add_option("--weights", c.weights, "Positive rational weights for the SUB witness");
    th->add_flag("--assert-regular", c.assert_regular, "Assert the generator gradient is nonzero on the null set");
    th->add_option("--order", c.order, "grevlex or grlex");
    th->add_option("--seed", c.seed, "Seed for null-point sampling");
    common(th);

    auto* sep = app.add_subcommand("separating", "Separating polynomial and its normalized power polynomial");
    sep->add_option("--hypothesis", c.hypothesis_path, "Hypothesis spec JSON")->required();
    sep->add_option("--n", c.n, "Sample size for normalize-to-power");
    sep->add_option("--weights", c.weights, "Positive rational weights for the SUB witness");
    sep->add_option("--order", c.order, "grevlex or grlex");
    common(sep);

    auto* um = app.add_subcommand("umpu", "UMPU power polynomial search");
    um->add_option("--f", c.f, "Generator f of the principal vanishing ideal")->required();
    um->add_option("--n", c.n, "Sample size")->required();
    um->add_option("--alpha", c.alpha, "Level as an exact rational, e.g. 1/20")->required();
    um->add_option("--mode", c.mode, "search, principal or semialgebraic");
    um->add_flag("!--no-enumerate", c.enumerate, "Skip full vertex enumeration");
    um->add_option("--polytope-out", c.polytope_output_path, "Write the coefficient polytope JSON here");
    vars(um);
    common(um);

    auto* pe = app.add_subcommand("polytope-exists", "Existence of unbiased tests for a polytope hypothesis");
    pe->add_option("--hypothesis", c.hypothesis_path, "Polytope hypothesis JSON")->required();
    common(pe);

    auto test_source = [&](CLI::App* s) {
        s->add_option("--test", c.test_path, "Test function JSON");
        s->add_option("--maxstat-n", c.maxstat_n, "Max-statistic test sample size");
        s->add_option("--maxstat-c", c.maxstat_c, "Max-statistic critical constant (rational)");
        s->add_option("--maxstat-t", c.maxstat_t, "Max-statistic centre per observation (rational)");
    };
    auto* pg = app.add_subcommand("power-grid", "CSV power surface over a uniform grid");
    test_source(pg);
    pg->add_option("--res", c.resolution, "Grid nodes per axis")->check(CLI::Range(2, 100000));
    pg->add_option("--max", c.grid_max, "Upper grid limit per axis (rational)");
    common(pg);

    auto* rt = app.add_subcommand("recover-test", "Test function from a power polynomial");
    rt->add_option("--beta", c.beta, "Power polynomial")->required();
    rt->add_option("--n", c.n, "Degree (defaults to the polynomial degree)");
    vars(rt);
    common(rt);

    auto* mc = app.add_subcommand("mc-validate", "Monte Carlo check of exact power");
    test_source(mc);
    mc->add_option("--points", c.points, "Semicolon-separated rational points, e.g. 1/4,1/4,1/2")->required();
    mc->add_option("--reps", c.reps, "Replications per point")->check(CLI::PositiveNumber);
    mc->add_option("--seed", c.seed, "Base seed");
    common(mc);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        exit_code = app.exit(e, out, err);
        if (exit_code != 0) exit_code = kError;
        return std::nullopt;
    }
    for (auto* s : app.get_subcommands()) c.command = s->get_name();
    return c;
}

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
    StepBudget budget(c.step_limit);
    try {
        if (c.command == "gb") return cmd_gb(c, out, budget);
        if (c.command == "threshold") return cmd_threshold(c, out, budget);
        if (c.command == "separating") return cmd_separating(c, out, budget);
        if (c.command == "umpu") return cmd_umpu(c, out, budget);
        if (c.command == "polytope-exists") return cmd_polytope_exists(c, out, budget);
        if (c.command == "power-grid") return cmd_power_grid(c, out);
        if (c.command == "recover-test") return cmd_recover_test(c, out);
        if (c.command == "mc-validate") return cmd_mc_validate(c, out);
        err << "powerpoly: unknown command '" << c.command << "'\n";
        return kError;
    } catch (const StepLimitExceeded& e) {
        err << "powerpoly: " << e.what() << '\n';
        return kStepLimit;
    } catch (const std::exception& e) {
        err << "powerpoly: " << e.what() << '\n';
        return kError;
    }
}

}  // namespace powerpoly::cli
