#include "adjspec/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "adjspec/contour.hpp"
#include "adjspec/funcalc.hpp"
#include "adjspec/json_io.hpp"

namespace adjspec {

namespace {

enum ExitCode : int {
    kOk = 0,
    kError = 1,
    kParse = 2,
    kUnresolvableSpectrum = 3,
    kInconsistentSpectrum = 4,
    kVerificationFailure = 5,
};

struct Options {
    std::string command;
    std::string file;
    std::string mode_flag;
    std::string eigenvalues;
    double tol = 1e-10;
    double threshold = -1.0;  // negative = per-mode default
    std::string output;
    bool with_faddeev = false;
    bool chains = false;
    std::string fn;
    bool contour = false;
    int nodes = 64;
};

template <class S>
S parse_scalar(const std::string& text);
template <>
ExactScalar parse_scalar<ExactScalar>(const std::string& text) {
    return parse_exact(text);
}
template <>
ApproxScalar parse_scalar<ApproxScalar>(const std::string& text) {
    return parse_approx(text);
}

std::string format_scalar(const ExactScalar& v) { return format_exact(v); }
std::string format_scalar(const ApproxScalar& v) { return format_approx(v); }

template <class S>
double default_threshold() {
    return ScalarOps<S>::exact ? 0.0 : 1e-8;
}

// Spectrum: user-supplied (authoritative, but exactly validated on the exact path),
// otherwise extracted from the characteristic polynomial.
template <class S>
Spectrum<S> resolve_spectrum(const Poly<S>& p, const Options& opts, const Tolerance& tol) {
    if (!opts.eigenvalues.empty()) {
        Spectrum<S> s = parse_spectrum<S>(opts.eigenvalues,
                                          [](const std::string& t) { return parse_scalar<S>(t); });
        double residual = validate_spectrum(p, s, tol);
        if constexpr (ScalarOps<S>::exact) {
            if (residual != 0.0)
                throw InconsistentSpectrum(
                    "supplied eigenvalues do not factor the characteristic polynomial exactly");
        }
        return s;
    }
    if constexpr (ScalarOps<S>::exact)
        return find_roots_exact(p);
    else
        return find_roots_approx(p, tol);
}

template <class S>
Json spectrum_to_json(const Spectrum<S>& s) {
    Json out = Json::array();
    for (const auto& e : s.entries) {
        Json item;
        item["lambda"] = scalar_to_json(e.lambda);
        item["multiplicity"] = e.multiplicity;
        out.push_back(std::move(item));
    }
    return out;
}

template <class S>
Json charpoly_json(const Matrix<S>& a, const Options& opts, Mode mode) {
    CharData<S> cd = faddeev_decompose(a);
    Json j;
    j["mode"] = mode_name(mode);
    j["n"] = a.n();
    j["alphas"] = vector_to_json(cd.alphas);
    j["p"] = poly_to_string(cd.p);
    j["coeffs"] = vector_to_json(cd.p.coeffs());
    if (opts.with_faddeev) {
        Json seq = Json::array();
        for (const auto& c : cd.c_seq) seq.push_back(matrix_to_json(c));
        j["faddeev"] = std::move(seq);
    }
    return j;
}

template <class S>
Json adjugate_json(const Matrix<S>& a, Mode mode) {
    CharData<S> cd = faddeev_decompose(a);
    MatPoly<S> b = adjugate_poly(cd);
    Json j;
    j["mode"] = mode_name(mode);
    j["n"] = a.n();
    j["degree"] = b.degree();
    Json coeffs = Json::array();
    for (int k = 0; k <= b.degree(); ++k) coeffs.push_back(matrix_to_json(b.coeff(k)));
    j["coeffs"] = std::move(coeffs);
    Json entries = Json::array();
    for (int r = 0; r < a.n(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < a.n(); ++c) {
            std::vector<S> ec;
            for (int k = 0; k <= b.degree(); ++k) ec.push_back(b.coeff(k)(r, c));
            row.push_back(poly_to_string(Poly<S>(std::move(ec))));
        }
        entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
    return j;
}

template <class S>
Json decomposition_to_json(const SpectralDecomposition<S>& dec, const Tolerance& tol,
                           Mode mode) {
    Json j;
    j["mode"] = mode_name(mode);
    j["n"] = dec.A.n();
    j["p"] = poly_to_string(dec.char_data.p);
    j["spectrum"] = spectrum_to_json(dec.spectrum);
    Json comps = Json::array();
    for (const auto& c : dec.components) {
        JordanStructure js = jordan_structure(c, tol);
        Json comp;
        comp["lambda"] = scalar_to_json(c.lambda);
        comp["multiplicity"] = c.multiplicity;
        comp["P"] = matrix_to_json(c.P);
        comp["N"] = matrix_to_json(c.N);
        comp["block_sizes"] = js.block_sizes;
        comp["nilpotency_index"] = js.nilpotency_index;
        comps.push_back(std::move(comp));
    }
    j["components"] = std::move(comps);
    j["residuals"] = dec.residuals;
    return j;
}

struct CommandResult {
    Json json;
    int exit_code = kOk;
};

template <class S>
CommandResult cmd_spectral(const Matrix<S>& a, const Options& opts, const Tolerance& tol,
                           Mode mode) {
    CharData<S> cd = faddeev_decompose(a);
    Spectrum<S> spectrum = resolve_spectrum(cd.p, opts, tol);
    SpectralDecomposition<S> dec = decompose(a, spectrum, tol);
    double threshold = opts.threshold >= 0 ? opts.threshold : default_threshold<S>();
    bool pass = true;
    for (const auto& [name, value] : dec.residuals) pass = pass && value <= threshold;
    Json j = decomposition_to_json(dec, tol, mode);
    j["threshold"] = threshold;
    j["pass"] = pass;
    return {std::move(j), pass ? kOk : kInconsistentSpectrum};
}

template <class S>
CommandResult cmd_jordan(const Matrix<S>& a, const Options& opts, const Tolerance& tol,
                         Mode mode) {
    CharData<S> cd = faddeev_decompose(a);
    Spectrum<S> spectrum = resolve_spectrum(cd.p, opts, tol);
    SpectralDecomposition<S> dec = decompose(a, spectrum, tol);
    Json j;
    j["mode"] = mode_name(mode);
    j["n"] = a.n();
    j["spectrum"] = spectrum_to_json(dec.spectrum);
    Json blocks = Json::array();
    for (const auto& c : dec.components) {
        JordanStructure js = jordan_structure(c, tol);
        Json item;
        item["lambda"] = scalar_to_json(c.lambda);
        item["multiplicity"] = c.multiplicity;
        item["block_sizes"] = js.block_sizes;
        item["nilpotency_index"] = js.nilpotency_index;
        blocks.push_back(std::move(item));
    }
    j["jordan"] = std::move(blocks);
    if (opts.chains) {
        Json all = Json::array();
        for (const auto& c : dec.components) {
            Json item;
            item["lambda"] = scalar_to_json(c.lambda);
            Json chains = Json::array();
            for (const auto& chain : jordan_chains(c, tol)) {
                Json jc = Json::array();
                for (const auto& v : chain) jc.push_back(vector_to_json(v));
                chains.push_back(std::move(jc));
            }
            item["chains"] = std::move(chains);
            all.push_back(std::move(item));
        }
        j["chains"] = std::move(all);
    }
    return {std::move(j), kOk};
}

template <class S>
std::vector<FunctionJet<S>> build_jets(const SpectralDecomposition<S>& dec,
                                       const std::string& fn, const Tolerance& tol) {
    std::vector<FunctionJet<S>> jets;
    for (const auto& c : dec.components) {
        const S& at = c.lambda;
        const int order = c.multiplicity - 1;
        if (fn == "exp") {
            if constexpr (ScalarOps<S>::exact)
                throw ParseError("--fn exp requires approximate mode (e^lambda is irrational)");
            else
                jets.push_back(jet_exp(at, order));
        } else if (fn.rfind("power:", 0) == 0) {
            int k = 0;
            try {
                k = std::stoi(fn.substr(6));
            } catch (const std::exception&) {
                throw ParseError("bad exponent in '" + fn + "'");
            }
            if (k < 0) throw ParseError("power exponent must be nonnegative in '" + fn + "'");
            jets.push_back(jet_power(k, at, order));
        } else if (fn.rfind("poly:", 0) == 0) {
            std::vector<S> coeffs;
            std::stringstream ss(fn.substr(5));
            std::string item;
            while (std::getline(ss, item, ',')) coeffs.push_back(parse_scalar<S>(item));
            jets.push_back(jet_poly(Poly<S>(std::move(coeffs)), at, order));
        } else if (fn.rfind("resolvent:", 0) == 0) {
            jets.push_back(jet_resolvent(parse_scalar<S>(fn.substr(10)), at, order, tol));
        } else {
            throw ParseError("unknown --fn '" + fn +
                             "' (expected exp | power:k | poly:c0,c1,... | resolvent:w)");
        }
    }
    return jets;
}

template <class S>
CommandResult cmd_funcalc(const Matrix<S>& a, const Options& opts, const Tolerance& tol,
                          Mode mode) {
    if (opts.fn.empty()) throw ParseError("funcalc requires --fn");
    CharData<S> cd = faddeev_decompose(a);
    Spectrum<S> spectrum = resolve_spectrum(cd.p, opts, tol);
    SpectralDecomposition<S> dec = decompose(a, spectrum, tol);
    Matrix<S> result = apply_function(dec, build_jets(dec, opts.fn, tol));
    Json j;
    j["mode"] = mode_name(mode);
    j["n"] = a.n();
    j["fn"] = opts.fn;
    j["spectrum"] = spectrum_to_json(dec.spectrum);
    j["result"] = matrix_to_json(result);
    return {std::move(j), kOk};
}

// Contour-oracle deviations per eigenvalue, always evaluated in floating point.
template <class S>
void contour_residuals(const SpectralDecomposition<S>& dec, int nodes,
                       std::map<std::string, double>& out) {
    Matrix<ApproxScalar> ad = [&] {
        if constexpr (ScalarOps<S>::exact)
            return to_approx(dec.A);
        else
            return dec.A;
    }();
    Spectrum<ApproxScalar> sd;
    for (const auto& e : dec.spectrum.entries) {
        if constexpr (ScalarOps<S>::exact)
            sd.entries.push_back({to_approx(e.lambda), e.multiplicity});
        else
            sd.entries.push_back({e.lambda, e.multiplicity});
    }
    for (size_t i = 0; i < dec.components.size(); ++i) {
        const auto& c = dec.components[i];
        Matrix<ApproxScalar> pd = [&] {
            if constexpr (ScalarOps<S>::exact)
                return to_approx(c.P);
            else
                return c.P;
        }();
        Matrix<ApproxScalar> nd = [&] {
            if constexpr (ScalarOps<S>::exact)
                return to_approx(c.N);
            else
                return c.N;
        }();
        ContourSpec spec = default_contour(sd, static_cast<int>(i), nodes);
        std::string key = format_scalar(c.lambda);
        out["contour_projector[" + key + "]"] = max_abs_diff(riesz_quadrature(ad, spec), pd);
        out["contour_moment[" + key + "]"] = max_abs_diff(moment_quadrature(ad, spec, 1), nd);
    }
}

template <class S>
CommandResult cmd_verify(const Matrix<S>& a, const Options& opts, const Tolerance& tol,
                         Mode mode) {
    CharData<S> cd = faddeev_decompose(a);
    Spectrum<S> spectrum = resolve_spectrum(cd.p, opts, tol);
    SpectralDecomposition<S> dec = decompose(a, spectrum, tol);

    std::map<std::string, double> residuals = dec.residuals;
    residuals["fundamental_identity"] = verify_fundamental(a, cd, tol);
    residuals["cayley_hamilton"] = cayley_hamilton_residual(a, cd);
    for (size_t i = 0; i < dec.components.size(); ++i)
        for (int s = 0; s < dec.components[i].multiplicity; ++s) {
            std::string key = "derivative_factorization[" +
                              format_scalar(dec.components[i].lambda) + ";s=" +
                              std::to_string(s) + "]";
            residuals[key] = derivative_identity_residual(dec, static_cast<int>(i), s, tol);
        }

    const double threshold = opts.threshold >= 0 ? opts.threshold : default_threshold<S>();
    // Quadrature is never exact, so contour deviations get a floating-point bar
    // even when the algebraic path runs exactly.
    const double contour_threshold = std::max(threshold, 1e-8);
    std::map<std::string, double> contour;
    if (opts.contour) {
        contour_residuals(dec, opts.nodes, contour);
    }

    bool pass = true;
    for (const auto& [name, value] : residuals) pass = pass && value <= threshold;
    for (const auto& [name, value] : contour) pass = pass && value <= contour_threshold;

    Json j;
    j["mode"] = mode_name(mode);
    j["n"] = a.n();
    j["pass"] = pass;
    Json thresholds;
    thresholds["residual"] = threshold;
    if (opts.contour) thresholds["contour"] = contour_threshold;
    j["thresholds"] = std::move(thresholds);
    for (const auto& [name, value] : contour) residuals[name] = value;
    j["residuals"] = residuals;
    return {std::move(j), pass ? kOk : kVerificationFailure};
}

template <class S>
CommandResult dispatch(const Matrix<S>& a, const Options& opts, const Tolerance& tol,
                       Mode mode) {
    if (opts.command == "charpoly") return {charpoly_json(a, opts, mode), kOk};
    if (opts.command == "adjugate") return {adjugate_json(a, mode), kOk};
    if (opts.command == "spectral") return cmd_spectral(a, opts, tol, mode);
    if (opts.command == "jordan") return cmd_jordan(a, opts, tol, mode);
    if (opts.command == "funcalc") return cmd_funcalc(a, opts, tol, mode);
    if (opts.command == "verify") return cmd_verify(a, opts, tol, mode);
    throw ParseError("unknown command '" + opts.command + "'");
}

void emit(const CommandResult& result, const Options& opts, std::ostream& out,
          std::ostream& err) {
    std::string text = dump_json(result.json);
    out << text;
    if (!opts.output.empty()) {
        std::ofstream f(opts.output);
        if (!f) {
            err << "cannot write output file '" << opts.output << "'\n";
            return;
        }
        f << text;
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Spectral projectors, nilpotents and matrix functions from the adjugate "
                 "polynomial of z*I - A"};
    app.name("adjspec");
    Options opts;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("file", opts.file, "matrix file (JSON; '-' for stdin)")->required();
        sub->add_option("--mode", opts.mode_flag, "override arithmetic mode: exact | approx")
            ->check(CLI::IsMember({"exact", "approx"}));
        sub->add_option("--eigenvalues", opts.eigenvalues,
                        "supply the spectrum as 'lambda:mult,lambda:mult,...'");
        sub->add_option("--tol", opts.tol, "absolute/relative tolerance (approximate path)")
            ->check(CLI::PositiveNumber);
        sub->add_option("--threshold", opts.threshold,
                        "pass/fail threshold for residuals (default: 0 exact, 1e-8 approx)")
            ->check(CLI::NonNegativeNumber);
        sub->add_option("--output", opts.output, "also write the JSON report to this path");
    };

    CLI::App* charpoly = app.add_subcommand("charpoly", "characteristic polynomial");
    add_common(charpoly);
    charpoly->add_flag("--with-faddeev", opts.with_faddeev, "include the matrix sequence C_l");
    CLI::App* adjugate = app.add_subcommand("adjugate", "adjugate polynomial B(z)");
    add_common(adjugate);
    CLI::App* spectral = app.add_subcommand("spectral", "projectors and nilpotent parts");
    add_common(spectral);
    CLI::App* jordan = app.add_subcommand("jordan", "Jordan block structure");
    add_common(jordan);
    jordan->add_flag("--chains", opts.chains, "include Jordan chains");
    CLI::App* funcalc = app.add_subcommand("funcalc", "evaluate f(A)");
    add_common(funcalc);
    funcalc->add_option("--fn", opts.fn, "exp | power:k | poly:c0,c1,... | resolvent:w")
        ->required();
    CLI::App* verify = app.add_subcommand("verify", "residual report for all identities");
    add_common(verify);
    verify->add_flag("--contour", opts.contour, "compare against contour quadrature");
    verify->add_option("--nodes", opts.nodes, "quadrature nodes (default 64)")
        ->check(CLI::PositiveNumber);

    app.require_subcommand(1);

    std::vector<const char*> argv;
    argv.push_back("adjspec");
    for (const auto& s : args) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? kOk : kParse;
    }
    opts.command = app.get_subcommands().front()->get_name();

    try {
        MatrixFile mf = load_matrix_file(opts.file);
        Mode mode = mf.mode;
        if (opts.mode_flag == "exact") mode = Mode::exact;
        if (opts.mode_flag == "approx") mode = Mode::approx;
        Tolerance tol{opts.tol, opts.tol};
        CommandResult result;
        if (mode == Mode::exact) {
            Matrix<ExactScalar> a =
                mf.mode == Mode::exact ? mf.exact : to_exact(mf.approx);
            result = dispatch(a, opts, tol, mode);
        } else {
            Matrix<ApproxScalar> a =
                mf.mode == Mode::approx ? mf.approx : to_approx(mf.exact);
            result = dispatch(a, opts, tol, mode);
        }
        emit(result, opts, out, err);
        return result.exit_code;
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return kParse;
    } catch (const IrrationalSpectrum& e) {
        err << e.what() << "\n";
        return kUnresolvableSpectrum;
    } catch (const NoConvergence& e) {
        err << e.what() << "\n";
        return kUnresolvableSpectrum;
    } catch (const MultiplicityMismatch& e) {
        err << e.what() << "\n";
        return kInconsistentSpectrum;
    } catch (const InconsistentSpectrum& e) {
        err << e.what() << "\n";
        return kInconsistentSpectrum;
    } catch (const PoleAtExpansionPoint& e) {
        // q_i vanishing at lambda_i means the supplied spectrum repeats an eigenvalue.
        err << e.what() << "\n";
        return kInconsistentSpectrum;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return kError;
    }
}

}  // namespace adjspec
