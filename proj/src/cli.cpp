#include <bernmom/cli.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include <bernmom/bernoulli.hpp>
#include <bernmom/bernoulli_poly.hpp>
#include <bernmom/chern.hpp>
#include <bernmom/harness.hpp>
#include <bernmom/moments.hpp>
#include <bernmom/spectrum.hpp>
#include <bernmom/text_io.hpp>

namespace bernmom
{

namespace
{

std::string format_double(double v)
{
    std::ostringstream ss;
    ss << std::setprecision(12) << v;
    return ss.str();
}

// One of the four ways to name a spectrum.
struct SourceOptions
{
    std::string weights;
    std::string tpqr;
    std::string puiseux;
    std::string spectrum_file;

    void attach(CLI::App *app)
    {
        app->add_option("--weights", weights, "quasihomogeneous weights, e.g. 1/3,1/2");
        app->add_option("--tpqr", tpqr, "T_pqr parameters, e.g. 2,3,7");
        app->add_option("--puiseux", puiseux, "Puiseux pairs, e.g. 2:3,2:7");
        app->add_option("--spectrum-file", spectrum_file, "spectrum file");
    }

    Spectrum resolve() const
    {
        const int given = !weights.empty() + !tpqr.empty() + !puiseux.empty() + !spectrum_file.empty();
        if (given != 1) {
            throw std::invalid_argument("give exactly one of --weights, --tpqr, --puiseux, --spectrum-file");
        }
        if (!weights.empty()) {
            return spectrum_from_weights(WeightSystem(parse_rational_list(weights)));
        }
        if (!tpqr.empty()) {
            const auto v = parse_integer_list(tpqr);
            if (v.size() != 3) {
                throw std::invalid_argument("--tpqr needs three integers p,q,r");
            }
            for (const auto &x : v) {
                if (!x.fits_slong_p()) {
                    throw std::invalid_argument("--tpqr value out of range");
                }
            }
            return spectrum_tpqr(TpqrParams(v[0].get_si(), v[1].get_si(), v[2].get_si()));
        }
        if (!puiseux.empty()) {
            return spectrum_curve(PuiseuxData(parse_puiseux(puiseux)));
        }
        std::ifstream in(spectrum_file);
        if (!in) {
            throw std::invalid_argument("cannot open spectrum file " + spectrum_file);
        }
        return parse_spectrum(in);
    }
};

// --nu p/q or --mode W|S.
struct NuOptions
{
    std::string nu;
    std::string mode;

    void attach(CLI::App *app)
    {
        app->add_option("--nu", nu, "nu as p/q");
        app->add_option("--mode", mode, "W (nu = n+1) or S (nu = alpha_mu - alpha_1)");
    }

    Rational resolve(const Spectrum &s) const
    {
        if (nu.empty() == mode.empty()) {
            throw std::invalid_argument("give exactly one of --nu and --mode");
        }
        return nu.empty() ? conjecture_nu(s, parse_mode(mode)) : parse_rational(nu);
    }
};

void print_moments(std::ostream &out, const MomentSeries &g, int kmax)
{
    out << "k\tGamma_2k\n";
    for (int k = 0; k <= kmax; ++k) {
        out << k << '\t' << to_string(g.moment(2 * k)) << '\n';
    }
}

void require_nonnegative(int v, const char *name)
{
    if (v < 0) {
        throw std::invalid_argument(std::string(name) + " must be nonnegative");
    }
}

ManifoldSpec parse_builtin(const std::string &text)
{
    const auto colon = text.find(':');
    const std::string kind = text.substr(0, colon);
    auto parameter = [&]() {
        if (colon == std::string::npos) {
            throw std::invalid_argument("builtin '" + kind + "' needs a parameter, e.g. " + kind + ":2");
        }
        const auto v = parse_integer_list(text.substr(colon + 1));
        if (v.size() != 1 || !v[0].fits_sint_p()) {
            throw std::invalid_argument("bad builtin parameter in '" + text + "'");
        }
        return static_cast<int>(v[0].get_si());
    };
    if (kind == "pn") {
        return ManifoldSpec::projective(parameter());
    }
    if (kind == "genus") {
        return ManifoldSpec::curve(parameter());
    }
    if (kind == "k3" && colon == std::string::npos) {
        return ManifoldSpec::k3();
    }
    throw std::invalid_argument("unknown builtin '" + text + "' (use pn:N, k3 or genus:G)");
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Spectra, Bernoulli moments and generalized Bernoulli polynomials in exact arithmetic", "bernmom"};
    app.require_subcommand(1);

    int count = 0;
    auto *bern = app.add_subcommand("bernoulli", "Bernoulli numbers B_0..B_{N-1}");
    bern->add_option("--count", count, "how many")->required();

    int theta_order = 0;
    auto *theta = app.add_subcommand("theta", "coefficients of log((t/2)/sinh(t/2))");
    theta->add_option("--order", theta_order, "truncation order")->required();

    int apoly_k = 0;
    std::string apoly_x, apoly_nu;
    auto *apoly = app.add_subcommand("apoly", "generalized Bernoulli polynomial A_k(x, nu)");
    apoly->add_option("--k", apoly_k, "index k")->required();
    apoly->add_option("--x", apoly_x, "evaluate at x = p/q");
    apoly->add_option("--nu", apoly_nu, "evaluate at nu = p/q");

    auto *spec = app.add_subcommand("spectrum", "print a spectrum in file format");
    spec->require_subcommand(1);
    std::string qh_weights, curve_pairs;
    long tp = 0, tq = 0, tr = 0;
    auto *qh = spec->add_subcommand("qh", "quasihomogeneous singularity");
    qh->add_option("--weights", qh_weights, "weights, e.g. 1/3,1/2")->required();
    auto *tpqr = spec->add_subcommand("tpqr", "hyperbolic T_pqr");
    tpqr->add_option("--p", tp)->required();
    tpqr->add_option("--q", tq)->required();
    tpqr->add_option("--r", tr)->required();
    auto *curve = spec->add_subcommand("curve", "irreducible plane curve");
    curve->add_option("--puiseux", curve_pairs, "Puiseux pairs, e.g. 2:3,2:7")->required();

    SourceOptions gamma_src;
    NuOptions gamma_nu;
    int gamma_kmax = 0;
    auto *gamma = app.add_subcommand("gamma", "Bernoulli moments Gamma_2k(V, nu)");
    gamma_src.attach(gamma);
    gamma_nu.attach(gamma);
    gamma->add_option("--kmax", gamma_kmax, "largest k")->required();

    SourceOptions check_src;
    std::string check_mode;
    int check_kmax = 0;
    auto *check = app.add_subcommand("check", "check the sign conjecture (W or S)");
    check_src.attach(check);
    check->add_option("--mode", check_mode, "W or S")->required();
    check->add_option("--kmax", check_kmax, "largest k")->required();

    SourceOptions trace_src;
    NuOptions trace_nu;
    int trace_kmax = 0;
    auto *trace = app.add_subcommand("trace", "normalized Bernoulli moments and their cosine limit");
    trace_src.attach(trace);
    trace_nu.attach(trace);
    trace->add_option("--kmax", trace_kmax, "largest k")->required();

    std::string mfd_chi, mfd_nu;
    int mfd_kmax = 0;
    auto *mfd = app.add_subcommand("manifold", "Bernoulli moments of a compact complex manifold");
    mfd->add_option("--chi", mfd_chi, "chi_0,...,chi_n");
    mfd->add_option("--nu", mfd_nu, "nu as p/q (default n)");
    mfd->add_option("--kmax", mfd_kmax, "largest k");
    std::string chern_builtin, chern_file, chern_nu;
    int chern_kmax = 0;
    auto *chern = mfd->add_subcommand("chern", "the same from Chern numbers");
    chern->add_option("--builtin", chern_builtin, "pn:N, k3 or genus:G");
    chern->add_option("--file", chern_file, "Chern number file");
    chern->add_option("--nu", chern_nu, "nu as p/q (default n)");
    chern->add_option("--kmax", chern_kmax, "largest k")->required();

    SourceOptions thr_src;
    int thr_k = 0, thr_steps = 20, thr_kcap = -1;
    std::string thr_hi;
    auto *thr = app.add_subcommand("nu-threshold", "bisection estimate of the least nu with the sign property");
    thr_src.attach(thr);
    thr->add_option("--k", thr_k, "smallest k checked")->required();
    thr->add_option("--nu-hi", thr_hi, "upper end of the search interval")->required();
    thr->add_option("--steps", thr_steps, "bisection steps");
    thr->add_option("--kcap", thr_kcap, "largest k checked (default k)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    if (bern->parsed()) {
        out << "k\tB_k\n";
        const auto b = bernoulli_numbers(count);
        for (std::size_t k = 0; k < b.size(); ++k) {
            out << k << '\t' << to_string(b[k]) << '\n';
        }
    } else if (theta->parsed()) {
        require_nonnegative(theta_order, "--order");
        const auto t = theta_ber(theta_order);
        out << "k\tcoefficient\n";
        for (int k = 0; k <= theta_order; ++k) {
            out << k << '\t' << to_string(t[k]) << '\n';
        }
    } else if (apoly->parsed()) {
        require_nonnegative(apoly_k, "--k");
        BivariatePolynomial p = a_poly(apoly_k);
        if (!apoly_x.empty()) {
            p = p.substitute(var_x, parse_rational(apoly_x));
        }
        if (!apoly_nu.empty()) {
            p = p.substitute(var_nu, parse_rational(apoly_nu));
        }
        out << "x_exp\tnu_exp\tcoefficient\n";
        for (const auto &[e, c] : p.terms()) {
            out << (e.size() > var_x ? e[var_x] : 0) << '\t' << (e.size() > var_nu ? e[var_nu] : 0) << '\t'
                << to_string(c) << '\n';
        }
        if (p.is_zero()) {
            out << "0\t0\t0\n";
        }
    } else if (spec->parsed()) {
        std::optional<Spectrum> s;
        if (qh->parsed()) {
            s = spectrum_from_weights(WeightSystem(parse_rational_list(qh_weights)));
        } else if (tpqr->parsed()) {
            s = spectrum_tpqr(TpqrParams(tp, tq, tr));
        } else {
            s = spectrum_curve(PuiseuxData(parse_puiseux(curve_pairs)));
        }
        out << format_spectrum(*s);
    } else if (gamma->parsed()) {
        require_nonnegative(gamma_kmax, "--kmax");
        const Spectrum s = gamma_src.resolve();
        print_moments(out, gamma_ber(v_sing(s, 2 * gamma_kmax), gamma_nu.resolve(s)), gamma_kmax);
    } else if (check->parsed()) {
        const Spectrum s = check_src.resolve();
        const auto report = check_conjecture(s, parse_mode(check_mode), check_kmax);
        out << "# mode " << to_string(report.mode) << " nu " << to_string(report.nu) << '\n';
        out << "k\tGamma_2k\tsign_ok\n";
        for (const auto &v : report.verdicts) {
            out << v.k << '\t' << to_string(v.gamma) << '\t' << (v.sign_ok ? "yes" : "no") << '\n';
        }
        out << "overall\t" << (report.overall ? "PASS" : "FAIL") << '\n';
        return report.overall ? exit_ok : exit_conjecture_failed;
    } else if (trace->parsed()) {
        const Spectrum s = trace_src.resolve();
        const auto values = trace_convergence(s, trace_nu.resolve(s), trace_kmax);
        const double target = trace_target(s);
        out << "# target " << format_double(target) << '\n';
        out << "k\tnormalized\terror\n";
        for (std::size_t i = 0; i < values.size(); ++i) {
            out << i + 1 << '\t' << format_double(values[i]) << '\t' << format_double(values[i] - target) << '\n';
        }
    } else if (mfd->parsed()) {
        if (chern->parsed()) {
            require_nonnegative(chern_kmax, "--kmax");
            if (chern_builtin.empty() == chern_file.empty()) {
                throw std::invalid_argument("give exactly one of --builtin and --file");
            }
            std::optional<ChernData> x;
            if (!chern_builtin.empty()) {
                x = chern_data_builtin(parse_builtin(chern_builtin));
            } else {
                std::ifstream in(chern_file);
                if (!in) {
                    throw std::invalid_argument("cannot open Chern file " + chern_file);
                }
                x = parse_chern(in);
            }
            const Rational nu = chern_nu.empty() ? Rational(x->n()) : parse_rational(chern_nu);
            out << "k\tGamma_2k\n";
            for (int k = 0; k <= chern_kmax; ++k) {
                out << k << '\t' << to_string(gamma_mfd_from_chern(*x, nu, k)) << '\n';
            }
        } else {
            if (mfd_chi.empty()) {
                throw std::invalid_argument("manifold needs --chi or the chern subcommand");
            }
            require_nonnegative(mfd_kmax, "--kmax");
            const ChiVector chi(parse_integer_list(mfd_chi));
            const Rational nu = mfd_nu.empty() ? Rational(chi.n()) : parse_rational(mfd_nu);
            print_moments(out, gamma_ber(v_mfd(chi, 2 * mfd_kmax), nu), mfd_kmax);
        }
    } else if (thr->parsed()) {
        const Spectrum s = thr_src.resolve();
        out << to_string(nu_threshold(s, thr_k, parse_rational(thr_hi), thr_steps, thr_kcap)) << '\n';
    }
    return exit_ok;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    try {
        return run(args, out, err);
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::domain_error &e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::out_of_range &e) {
        err << "error: " << e.what() << '\n';
    }
    return exit_usage;
}

int run_cli(int argc, char **argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return run_cli(args, std::cout, std::cerr);
}

} // namespace bernmom
