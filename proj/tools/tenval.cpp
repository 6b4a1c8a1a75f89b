// tenval: evaluate exact tensor valuations on polytopes, run the
// verification suites, decompose sampled valuations against the spanning
// family, and inspect polytope data.
//
// Exit codes: 0 success / all checks passed; 1 a check failed or a
// decomposition left a nonzero residual; 2 usage or input errors.

#include <tenval/json_io.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

namespace {

using namespace tenval;

nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    return j;
}

void emit(const nlohmann::json& j, const std::string& out_path) {
    const std::string text = j.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw ParseError("cannot open output file: " + out_path);
    out << text;
}

struct EvalOptions {
    std::string valuation;
    int r = 0;
    int s = 0;
    int p = -1;
    bool polar_input = false;
    bool rho_output = false;
    bool float_values = false;
    std::string input;
    std::string output;
};

int run_eval(const EvalOptions& opt) {
    ValuationDescriptor d;
    d.kind = kind_from_string(opt.valuation);
    d.r = opt.r;
    d.s = opt.s;
    if (opt.p >= 0) {
        if (d.kind == ValuationKind::moment)
            d.r = opt.p;
        else if (d.kind == ValuationKind::lp_normal)
            d.s = opt.p;
        else
            throw BadParameter("--p is shorthand for moment (r) and lp_normal (s) only");
    }
    d.polar_input = opt.polar_input;
    d.rho_output = opt.rho_output;
    const Polytope P = polytope_from_json(read_json_file(opt.input));
    d.validate(P.dim());
    emit(tensor_to_json(evaluate(d, P), opt.float_values), opt.output);
    return 0;
}

struct VerifyOptions {
    std::string suite = "all";
    int cases = 30;
    std::uint64_t seed = 0;
    std::string output;
};

int run_verify(const VerifyOptions& opt) {
    const auto reports = run_suite(opt.suite, opt.seed, opt.cases);
    nlohmann::json arr = nlohmann::json::array();
    bool all_passed = true;
    for (const auto& r : reports) {
        all_passed = all_passed && r.passed();
        arr.push_back(report_to_json(r));
    }
    emit(arr, opt.output);
    return all_passed ? 0 : 1;
}

struct DecomposeOptions {
    std::string input;
    std::string output;
    bool float_values = false;
};

int run_decompose(const DecomposeOptions& opt) {
    const SampleSet set = samples_from_json(read_json_file(opt.input));
    const Decomposition dec = decompose(set.samples, set.n, set.p);
    auto render = [&](const Rational& q) {
        return opt.float_values ? to_decimal_string(q) : to_string(q);
    };
    nlohmann::json basis = nlohmann::json::array();
    for (const auto& d : dec.basis) basis.push_back(descriptor_to_json(d));
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : dec.coefficients) coeffs.push_back(render(c));
    nlohmann::json residual = nlohmann::json::array();
    for (const auto& r : dec.residual) residual.push_back(render(r));
    nlohmann::json out;
    out["basis"] = std::move(basis);
    out["coefficients"] = std::move(coeffs);
    out["residual"] = std::move(residual);
    out["exact"] = dec.exact;
    emit(out, opt.output);
    return dec.exact ? 0 : 1;
}

struct InfoOptions {
    std::string input;
    std::string output;
};

int run_info(const InfoOptions& opt) {
    const Polytope P = polytope_from_json(read_json_file(opt.input));
    nlohmann::json out;
    out["dim"] = P.dim();
    out["volume"] = to_string(volume(P));
    nlohmann::json verts = nlohmann::json::array();
    for (const auto& v : P.vertices()) verts.push_back(vec_to_json(v));
    out["vertices"] = std::move(verts);
    nlohmann::json facets = nlohmann::json::array();
    for (const auto& f : P.facets()) {
        nlohmann::json jf;
        jf["normal"] = vec_to_json(f.normal);
        jf["support"] = to_string(f.support);
        jf["vertex_ids"] = f.vertex_ids;
        facets.push_back(std::move(jf));
    }
    out["facets"] = std::move(facets);
    try {
        const Polytope Q = P.polar();
        nlohmann::json pv = nlohmann::json::array();
        for (const auto& v : Q.vertices()) pv.push_back(vec_to_json(v));
        out["polar_vertices"] = std::move(pv);
    } catch (const UnsupportedDimension& e) {
        out["polar_unavailable"] = e.what();
    }
    emit(out, opt.output);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact tensor valuations on polytopes with the origin in the interior"};
    app.require_subcommand(1);

    EvalOptions eval_opt;
    CLI::App* eval = app.add_subcommand("eval", "evaluate a valuation on a polytope file");
    eval->add_option("--valuation", eval_opt.valuation,
                     "one of moment, lp_normal, mrs, mrs_rho, euler, vol")
        ->required();
    eval->add_option("--r", eval_opt.r, "boundary moment degree r");
    eval->add_option("--s", eval_opt.s, "normal power degree s");
    eval->add_option("--p", eval_opt.p, "shorthand: total degree for moment / lp_normal");
    eval->add_flag("--polar-input", eval_opt.polar_input, "evaluate on the polar body");
    eval->add_flag("--rho-output", eval_opt.rho_output,
                   "rotate the output tensor a quarter turn (dimension 2)");
    eval->add_option("--input", eval_opt.input, "polytope JSON file")->required();
    eval->add_option("--output", eval_opt.output, "write JSON here instead of stdout");
    eval->add_flag("--float", eval_opt.float_values,
                   "render values as 20-digit decimals (inspection only)");

    VerifyOptions verify_opt;
    CLI::App* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--suite", verify_opt.suite,
                       "all, additivity, covariance, homogeneity, closed_form, rank, oracle");
    verify->add_option("--cases", verify_opt.cases, "cases per check (default 30)");
    verify->add_option("--seed", verify_opt.seed, "base seed (TENVAL_SEED overrides)");
    verify->add_option("--output", verify_opt.output, "write JSON here instead of stdout");

    DecomposeOptions dec_opt;
    CLI::App* dec = app.add_subcommand("decompose", "fit samples against the spanning family");
    dec->add_option("--input", dec_opt.input, "samples JSON file")->required();
    dec->add_option("--output", dec_opt.output, "write JSON here instead of stdout");
    dec->add_flag("--float", dec_opt.float_values,
                  "render values as 20-digit decimals (inspection only)");

    InfoOptions info_opt;
    CLI::App* info = app.add_subcommand("info", "print facet data, supports and polar vertices");
    info->add_option("--input", info_opt.input, "polytope JSON file")->required();
    info->add_option("--output", info_opt.output, "write JSON here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (const char* env_seed = std::getenv("TENVAL_SEED")) {
            try {
                std::size_t used = 0;
                const std::string text(env_seed);
                verify_opt.seed = std::stoull(text, &used);
                if (used != text.size()) throw std::invalid_argument(text);
            } catch (const std::exception&) {
                throw BadParameter("TENVAL_SEED must be an unsigned integer");
            }
        }
        if (eval->parsed()) return run_eval(eval_opt);
        if (verify->parsed()) return run_verify(verify_opt);
        if (dec->parsed()) return run_decompose(dec_opt);
        if (info->parsed()) return run_info(info_opt);
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
