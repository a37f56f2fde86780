#include "schurlab/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "schurlab/admissible.hpp"
#include "schurlab/battery.hpp"
#include "schurlab/bounds.hpp"
#include "schurlab/detident.hpp"
#include "schurlab/finite_diff.hpp"
#include "schurlab/preserver.hpp"
#include "schurlab/random.hpp"
#include "schurlab/report_json.hpp"
#include "schurlab/symmetric.hpp"

namespace schurlab {

namespace {

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw InvalidInput("empty entry in list '" + text + "'");
        out.push_back(item.substr(b, e - b + 1));
    }
    if (out.empty()) throw InvalidInput("empty list");
    return out;
}

std::vector<int> parse_ints(const std::string& text) {
    std::vector<int> out;
    for (const auto& s : split_commas(text)) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s, &used);
        } catch (const std::exception&) {
            throw InvalidInput("not an integer: '" + s + "'");
        }
        if (used != s.size()) throw InvalidInput("not an integer: '" + s + "'");
        out.push_back(v);
    }
    return out;
}

std::vector<Rational> parse_rationals(const std::string& text) {
    std::vector<Rational> out;
    for (const auto& s : split_commas(text)) out.push_back(Rational::parse(s));
    return out;
}

double parse_double(const std::string& text) {
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw InvalidInput("not a number: '" + text + "'");
    }
    if (used != text.size() || !std::isfinite(v)) throw InvalidInput("not a number: '" + text + "'");
    return v;
}

std::string join(const std::vector<std::string>& xs, const char* sep = ",") {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
    return out;
}

template <class T>
std::string join_values(const std::vector<T>& xs) {
    std::vector<std::string> s;
    for (const auto& x : xs) {
        if constexpr (std::is_same_v<T, Rational>)
            s.push_back(x.to_string());
        else
            s.push_back(std::to_string(x));
    }
    return "(" + join(s) + ")";
}

/// Where the JSON report goes: nowhere, a file, or stdout ("-").
struct JsonSink {
    std::string path;

    bool to_stdout() const { return path == "-"; }

    void write(const Json& j, std::ostream& out) const {
        if (path.empty()) return;
        if (to_stdout()) {
            out << dump(j);
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) throw InvalidInput("cannot write JSON report to '" + path + "'");
        f << dump(j);
    }
};

void require_cutoff(int degree) {
    if (degree < 0) throw InvalidInput("--degree must be non-negative");
    if (degree > bounds().max_cutoff)
        throw BoundExceeded("--degree " + std::to_string(degree) + " exceeds the cutoff bound " +
                            std::to_string(bounds().max_cutoff));
}

void require_dimension(std::size_t n, bool symbolic) {
    if (n < 1) throw InvalidInput("--n must be positive");
    const std::size_t limit = symbolic ? bounds().max_symbolic_n : bounds().max_n;
    if (n > limit)
        throw BoundExceeded("n = " + std::to_string(n) + " exceeds the " + (symbolic ? "symbolic " : "") +
                            "dimension bound " + std::to_string(limit) + " (SCHURLAB_MAX_N)");
}

// ---------------------------------------------------------------- schur

struct SchurArgs {
    std::string partition;
    int vars = 0;
    std::string method = "tableaux";
    JsonSink json;
};

int cmd_schur(const SchurArgs& a, std::ostream& out, std::ostream& err) {
    const PartitionTuple m(parse_ints(a.partition));
    const std::size_t vars = a.vars > 0 ? static_cast<std::size_t>(a.vars) : m.length();
    require_dimension(vars, true);
    if (a.method != "tableaux" && a.method != "bialternant" && a.method != "both")
        throw InvalidInput("--method must be tableaux, bialternant or both");

    Json j;
    j["schema"] = kReportSchema;
    j["partition"] = m.parts();
    j["num_vars"] = vars;
    int code = kExitOk;
    std::string text;
    if (a.method == "tableaux" || a.method == "both") {
        text = schur_tableaux(m, vars).value.to_string();
        j["tableaux"] = text;
    }
    if (a.method == "bialternant" || a.method == "both") {
        const std::string b = schur_bialternant(m, vars).value.to_string();
        j["bialternant"] = b;
        if (a.method == "both" && b != text) {
            err << "schur: methods disagree\n  tableaux:    " << text << "\n  bialternant: " << b << "\n";
            code = kExitMismatch;
        }
        if (text.empty()) text = b;
    }
    if (a.method == "both") j["agree"] = code == kExitOk;
    if (!a.json.to_stdout()) {
        out << text << "\n";
        if (a.method == "both" && code == kExitOk) out << "tableaux = bialternant\n";
    }
    a.json.write(j, out);
    return code;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
    std::string identity;
    int n = 0;
    std::string u, v, poly, c;
    int degree = 6;
    bool random = false;
    bool symbolic = false;
    std::uint64_t seed = 1;
    JsonSink json;
};

/// M! [t^M] Delta against the closed form, for M = 0..cutoff.
template <class C>
ExpansionReport verify_phorn(const SeriesFunction<C>& f, std::span<const C> u, std::span<const C> v, int cutoff,
                             Renderer<C> render) {
    const TruncSeries<C> delta = delta_series(f, u, v, cutoff);
    const std::vector<C> derivs = f.derivatives(cutoff);
    std::vector<C> lhs, rhs;
    for (int m = 0; m <= cutoff; ++m) {
        lhs.push_back(scalar_like(factorial(static_cast<unsigned>(m)), u[0]) * delta[m]);
        rhs.push_back(phorn_derivative(std::span<const C>(derivs), f.polynomial, u, v, m));
    }
    return compare_expansions("phorn", u.size(), TruncSeries<C>(cutoff, lhs, u[0]), TruncSeries<C>(cutoff, rhs, u[0]),
                              {}, std::move(render));
}

template <class C>
ExpansionReport run_identity(const VerifyArgs& a, const SeriesFunction<Rational>& f, const std::vector<C>& u,
                             const std::vector<C>& v, Renderer<C> render) {
    const std::span<const C> us(u), vs(v);
    if (a.identity == "cauchy") return verify_cauchy(us, vs, a.degree, render);
    if (a.identity == "frobenius") {
        if (a.c.empty()) throw InvalidInput("verify frobenius needs --c");
        return verify_frobenius(Rational::parse(a.c), us, vs, a.degree, render);
    }
    const SeriesFunction<C> lifted = lift(f, u[0]);
    if (a.identity == "tsymm") return verify_tsymm(lifted, us, vs, a.degree, render);
    return verify_phorn(lifted, us, vs, a.degree, render);
}

std::string render_series(const std::vector<std::string>& coeffs) {
    // Coefficients are already canonical; build the same text as TruncSeries.
    std::string out;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        std::string c = coeffs[k];
        if (c == "0") continue;
        const bool compound = c.find(' ') != std::string::npos;
        bool negative = !compound && c.front() == '-';
        if (negative) c.erase(0, 1);
        if (compound) c = "(" + c + ")";
        std::string term;
        if (k == 0)
            term = c;
        else
            term = (c == "1" ? "" : c + "*") + (k == 1 ? std::string("t") : "t^" + std::to_string(k));
        if (out.empty())
            out = (negative ? "-" : "") + term;
        else
            out += (negative ? " - " : " + ") + term;
    }
    const std::string tail = "O(t^" + std::to_string(coeffs.size()) + ")";
    return out.empty() ? tail : out + " + " + tail;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& /*err*/) {
    if (a.identity != "cauchy" && a.identity != "frobenius" && a.identity != "tsymm" && a.identity != "phorn")
        throw InvalidInput("unknown identity '" + a.identity + "' (cauchy, frobenius, tsymm, phorn)");
    require_cutoff(a.degree);
    if (a.symbolic && (!a.u.empty() || !a.v.empty())) throw InvalidInput("--symbolic cannot be combined with --u/--v");

    SeededRng rng(a.seed);
    const bool needs_f = a.identity == "tsymm" || a.identity == "phorn";
    SeriesFunction<Rational> f;
    if (needs_f) {
        if (!a.poly.empty()) {
            f = SeriesFunction<Rational>::from_polynomial(parse_rationals(a.poly));
        } else if (a.random) {
            // Nonzero coefficients and degree >= n-1, so the series is not trivially zero.
            std::vector<Rational> c;
            const long deg = rng.uniform_int(std::clamp(static_cast<long>(a.n) - 1, 0L, 6L), 6);
            for (long m = 0; m <= deg; ++m) {
                const long x = rng.uniform_int(-4, 3);
                c.emplace_back(x >= 0 ? x + 1 : x);
            }
            f = SeriesFunction<Rational>::from_polynomial(c);
        } else {
            f = SeriesFunction<Rational>::geometric(a.degree, Rational(0));
        }
    }

    ExpansionReport report;
    std::optional<RunSeed> seed_header;
    if (a.symbolic) {
        if (a.n < 1) throw InvalidInput("--symbolic needs --n");
        const std::size_t n = static_cast<std::size_t>(a.n);
        require_dimension(n, true);
        const auto [u, v] = symbolic_uv(n);
        report = run_identity<MultiPoly>(a, f, u, v, uv_renderer(n));
        if (a.random) seed_header = RunSeed{a.seed};
    } else {
        std::vector<Rational> u, v;
        if (a.random) {
            if (!a.u.empty() || !a.v.empty()) throw InvalidInput("--random cannot be combined with --u/--v");
            if (a.n < 1) throw InvalidInput("--random needs --n");
            require_dimension(static_cast<std::size_t>(a.n), false);
            const long span = std::max(3L, static_cast<long>(a.n));
            u = to_rationals(rng.distinct_ints(static_cast<std::size_t>(a.n), -span, span));
            v = to_rationals(rng.distinct_ints(static_cast<std::size_t>(a.n), -span, span));
            seed_header = RunSeed{a.seed};
        } else {
            if (a.u.empty() || a.v.empty()) throw InvalidInput("give --u and --v, or --random, or --symbolic");
            u = parse_rationals(a.u);
            v = parse_rationals(a.v);
            if (u.size() != v.size()) throw InvalidInput("--u and --v must have the same length");
            if (a.n > 0 && static_cast<std::size_t>(a.n) != u.size())
                throw InvalidInput("--n " + std::to_string(a.n) + " does not match the length of --u");
        }
        require_dimension(u.size(), false);
        report = run_identity<Rational>(a, f, u, v, default_renderer<Rational>());
    }

    Json j = to_json(report, seed_header);
    if (needs_f) {
        Json fj;
        fj["polynomial"] = f.polynomial;
        Json coeffs = Json::array();
        for (const auto& c : f.coeffs) coeffs.push_back(c.to_string());
        fj["coeffs"] = coeffs;
        j["f"] = fj;
    }
    if (!a.json.to_stdout()) {
        out << "identity: " << report.identity << "  n = " << report.n << "  degree = " << report.cutoff << "\n";
        if (needs_f && f.polynomial) {
            std::vector<std::string> fc;
            for (const auto& c : f.coeffs) fc.push_back(c.to_string());
            out << "f coefficients: " << join(fc) << "\n";
        }
        out << "lhs: " << render_series(report.lhs) << "\n";
        out << "rhs: " << render_series(report.rhs) << "\n";
        for (const auto& [name, coeffs] : report.extra) out << name << ": " << render_series(coeffs) << "\n";
        out << "vanishing below degree " << report.vanishing_verified_below
            << (report.vanishing_holds ? ": verified" : ": FAILED") << "\n";
        if (report.match())
            out << "result: match\n";
        else if (report.first_mismatch_degree)
            out << "result: MISMATCH at degree " << *report.first_mismatch_degree << "\n";
        else
            out << "result: MISMATCH (nonzero coefficient below the vanishing threshold)\n";
    }
    a.json.write(j, out);
    return report.match() ? kExitOk : kExitMismatch;
}

// ---------------------------------------------------------------- preserve

struct PreserveArgs {
    std::string poly, power, series_file;
    int n = 3;
    std::string a, eps = "1", u;
    int grid = static_cast<int>(kDefaultGridSize);
    bool unbounded = false;
    bool relaxed = false;
    int p = 0;
    int q = -1;
    double tol = kDefaultPsdTolerance;
    JsonSink json;
};

/// Coefficients at 0 of sum_M f_M (x - a)^M.
std::vector<Rational> shift_to_origin(const std::vector<Rational>& taylor, const Rational& a) {
    std::vector<Rational> out(taylor.size(), Rational(0));
    for (std::size_t m = 0; m < taylor.size(); ++m) {
        if (taylor[m].is_zero()) continue;
        // (x - a)^m = sum_j binom(m, j) x^j (-a)^{m-j}
        for (std::size_t j = 0; j <= m; ++j) {
            const Rational binom = factorial(static_cast<unsigned>(m)) /
                                   (factorial(static_cast<unsigned>(j)) * factorial(static_cast<unsigned>(m - j)));
            out[j] += taylor[m] * binom * pow(-a, static_cast<unsigned>(m - j));
        }
    }
    return out;
}

SeriesFunction<Rational> read_series_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot read series file '" + path + "'");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const std::exception& e) {
        throw InvalidInput("series file '" + path + "' is not valid JSON: " + e.what());
    }
    auto scalar = [](const Json& x) {
        if (x.is_string()) return Rational::parse(x.get<std::string>());
        if (x.is_number_integer()) return Rational(x.get<long>());
        throw InvalidInput("series file: coefficients must be integers or \"p/q\" strings");
    };
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array() || j["coeffs"].empty())
        throw InvalidInput("series file needs a non-empty \"coeffs\" array");
    SeriesFunction<Rational> f;
    f.base_point = j.contains("base_point") ? scalar(j["base_point"]) : Rational(0);
    for (const auto& c : j["coeffs"]) f.coeffs.push_back(scalar(c));
    f.polynomial = j.value("polynomial", false);
    return f;
}

std::optional<int> integer_power(double alpha) {
    const double r = std::round(alpha);
    if (std::abs(alpha - r) <= 1e-12) return static_cast<int>(r);
    return std::nullopt;
}

int cmd_preserve(const PreserveArgs& a, std::ostream& out, std::ostream& /*err*/) {
    const int sources = !a.poly.empty() + !a.power.empty() + !a.series_file.empty();
    if (sources != 1) throw InvalidInput("give exactly one of --poly, --power, --series-file");
    if (a.grid < 1) throw InvalidInput("--grid must be positive");
    if (a.n < 1) throw InvalidInput("--n must be positive");
    const std::size_t n = static_cast<std::size_t>(a.n);
    require_dimension(n, false);

    std::optional<SeriesFunction<Rational>> series;
    if (!a.series_file.empty()) series = read_series_file(a.series_file);

    Rational base = a.a.empty() ? (series ? series->base_point : Rational(1)) : Rational::parse(a.a);
    if (series && base != series->base_point)
        throw InvalidInput("--a " + base.to_string() + " differs from the series base point " +
                           series->base_point.to_string());
    const Rational eps = Rational::parse(a.eps);
    std::vector<Rational> u = a.u.empty() ? TestFamily::geometric_u(n) : parse_rationals(a.u);
    if (u.size() != n) throw InvalidInput("--u has " + std::to_string(u.size()) + " entries, expected n = " + std::to_string(n));
    const TestFamily family = a.relaxed ? TestFamily::make_relaxed(base, eps, u) : TestFamily::make(base, eps, u);
    const auto grid = t_grid(eps, static_cast<std::size_t>(a.grid));
    const int q = a.q < 0 ? a.n : a.q;

    PreserverReport report;
    std::optional<bool> fh;
    std::string conclusion_note;
    Json extra = Json::object();
    if (!a.poly.empty()) {
        const auto coeffs = parse_rationals(a.poly);
        report = hl_hypothesis_scan(coeffs, family, grid);
        report.conclusion = hl_conclusion_check(polynomial_profile(coeffs, base), a.n, a.p, q);
        report.maclaurin = maclaurin_sign_check(coeffs, a.n, a.unbounded ? Domain::unbounded : Domain::bounded);
    } else if (series) {
        const int known = series->known_degree();
        const auto coeffs = shift_to_origin(series->coeffs, base);
        report = hl_hypothesis_scan(coeffs, family, grid);
        ExactProfile profile;
        profile.base_point = base;
        profile.values = series->derivatives(known);
        profile.tail_zero = series->polynomial;
        report.conclusion = hl_conclusion_check(profile, a.n, a.p, q);
        if (base.is_zero())
            report.maclaurin = maclaurin_sign_check(series->coeffs, a.n, a.unbounded ? Domain::unbounded : Domain::bounded);
        extra["series_truncated"] = !series->polynomial;
    } else {
        const double alpha = parse_double(a.power);
        if (alpha < 0) throw InvalidInput("--power must be non-negative");
        fh = fh_predict(alpha, a.n);
        const RealFunction f = [alpha](double x) { return std::pow(x, alpha); };
        report = hl_hypothesis_scan(f, family, grid, a.tol);
        if (const auto k = integer_power(alpha); k && *k <= 64) {
            std::vector<Rational> c(static_cast<std::size_t>(*k) + 1, Rational(0));
            c.back() = Rational(1);
            report.conclusion = hl_conclusion_check(polynomial_profile(c, base), a.n, a.p, q);
        } else if (base.sign() > 0) {
            // Highest order whose central stencil stays inside (0, inf).
            const double x0 = base.to_double();
            int order = std::min(8, std::max(q, 1) + 1);
            NumericProfile profile;
            while (true) {
                try {
                    profile = finite_diff_derivs(f, x0, order, kDefaultFdStep, Stencil::central, 0.0);
                    break;
                } catch (const InvalidInput&) {
                    if (--order < 0) throw;
                }
            }
            report.conclusion = hl_conclusion_check(profile, a.n, a.p, q);
            extra["derivative_source"] = "finite-difference";
        } else {
            conclusion_note = "skipped: x^alpha is not smooth at a = 0";
        }
    }

    Json j = to_json(report);
    if (fh) j["fh_predict"] = *fh;
    if (!conclusion_note.empty()) j["conclusion_note"] = conclusion_note;
    for (auto& [k, v] : extra.items()) j[k] = v;

    if (!a.json.to_stdout()) {
        out << "family: a = " << family.a.to_string() << ", epsilon = " << family.epsilon.to_string() << ", n = " << n
            << ", u = " << join_values(family.u) << (family.relaxed ? " (relaxed: not theorem-labeled)" : "") << "\n";
        out << "scan: " << report.psd_method << " on " << grid.size() << " grid points: ";
        if (report.certified_on_grid()) {
            out << "no violation (certified on grid)\n";
        } else {
            const auto& v = report.violations.front();
            out << report.violations.size() << " violation(s); first at t = " << v.t.to_string() << ", "
                << (v.margin_exact.empty() ? "min eigenvalue " + to_string(v.margin) : "min e_k " + v.margin_exact)
                << "\n";
        }
        if (report.conclusion) {
            const auto& c = *report.conclusion;
            std::vector<std::string> signs;
            for (int s : c.signs) signs.push_back(s > 0 ? "+" : (s < 0 ? "-" : "0"));
            out << "conclusion: orders " << join_values(c.orders) << (c.reduced ? " (fewer nonzero derivatives)" : "")
                << ", signs (" << join(signs) << "): " << (c.pass() ? "PASS" : "FAIL");
            if (c.first_failure) out << " at k = " << *c.first_failure;
            out << "\n";
        } else if (!conclusion_note.empty()) {
            out << "conclusion: " << conclusion_note << "\n";
        }
        if (report.maclaurin) {
            const auto& m = *report.maclaurin;
            out << "maclaurin sign rule (" << (a.unbounded ? "unbounded" : "bounded") << "): " << (m.pass ? "PASS" : "FAIL");
            if (m.first_offending_index)
                out << " at coefficient " << *m.first_offending_index << (m.from_reversal ? " (reversed polynomial)" : "");
            out << "\n";
        }
        if (fh) out << "FitzGerald-Horn prediction: " << (*fh ? "preserver" : "not a preserver") << "\n";
        out << "verdict: " << (report.pass() ? "PASS" : "FAIL") << "\n";
    }
    a.json.write(j, out);
    return report.pass() ? kExitOk : kExitMismatch;
}

// ---------------------------------------------------------------- admissible

struct AdmissibleArgs {
    std::string profile;
    int n = 0;
    std::string tuple;
    bool tail_zero = false;
    JsonSink json;
};

ExactProfile parse_profile(const std::string& text, bool tail_zero, int min_length) {
    if (text == "exp") return exp_profile(std::max(min_length, 64));
    if (text.rfind("monomial:", 0) == 0) {
        const auto k = parse_ints(text.substr(9));
        if (k.size() != 1 || k[0] < 0) throw InvalidInput("monomial:k needs one non-negative k");
        return monomial_profile(k[0]);
    }
    ExactProfile p;
    p.values = parse_rationals(text);
    p.tail_zero = tail_zero;
    return p;
}

int cmd_admissible(const AdmissibleArgs& a, std::ostream& out, std::ostream& /*err*/) {
    if (a.n < 1) throw InvalidInput("--n must be positive");
    std::vector<int> tuple;
    int budget = 0;
    if (!a.tuple.empty()) {
        tuple = parse_ints(a.tuple);
        for (int x : tuple) budget += x;
    }
    const ExactProfile profile = parse_profile(a.profile, a.tail_zero, budget);
    Json j;
    if (!tuple.empty()) {
        if (static_cast<int>(tuple.size()) != a.n)
            throw InvalidInput("--tuple has " + std::to_string(tuple.size()) + " entries, expected n = " + std::to_string(a.n));
        const auto witness = admissibility_witness(tuple, profile);
        j["schema"] = kReportSchema;
        j["tuple"] = tuple;
        j["admissible"] = !witness;
        j["witness"] = witness ? Json(*witness) : Json(nullptr);
        if (!a.json.to_stdout()) {
            out << (witness ? "not admissible" : "admissible") << "\n";
            if (witness) out << "witness: " << join_values(*witness) << "\n";
        }
    } else {
        const AdmissibleClass cls = admissible_characterize(profile, a.n);
        j = to_json(cls);
        if (!a.json.to_stdout()) out << cls.to_string() << "\n";
    }
    a.json.write(j, out);
    return kExitOk;
}

// ---------------------------------------------------------------- suite

struct SuiteArgs {
    std::string scale = "smoke";
    std::uint64_t seed = 1;
    JsonSink json;
};

int cmd_suite(const SuiteArgs& a, std::ostream& out, std::ostream& /*err*/) {
    const Scale scale = parse_scale(a.scale);
    const auto results = run_battery(scale, a.seed);
    bool all = true;
    for (const auto& r : results) {
        all = all && r.passed;
        if (!a.json.to_stdout()) out << format_line(r) << "\n";
    }
    if (!a.json.to_stdout()) out << (all ? "all criteria passed" : "FAILED") << "\n";
    a.json.write(to_json(results, scale, a.seed), out);
    return all ? kExitOk : kExitMismatch;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Schur-polynomial and determinant identities; positivity checks for entrywise maps"};
    app.name("schurlab");
    app.require_subcommand(1);

    SchurArgs schur;
    auto* s = app.add_subcommand("schur", "print the Schur polynomial of a strict tuple");
    s->add_option("--partition", schur.partition, "tuple, e.g. 2,0")->required();
    s->add_option("--vars", schur.vars, "number of variables (default: tuple length)");
    s->add_option("--method", schur.method, "tableaux | bialternant | both");
    s->add_option("--json", schur.json.path, "write JSON report to a file, or - for stdout");

    VerifyArgs verify;
    auto* v = app.add_subcommand("verify", "check a determinant identity coefficient by coefficient");
    v->add_option("identity", verify.identity, "cauchy | frobenius | tsymm | phorn")->required();
    v->add_option("--n", verify.n, "dimension");
    v->add_option("--u", verify.u, "comma-separated rationals");
    v->add_option("--v", verify.v, "comma-separated rationals");
    v->add_option("--c", verify.c, "Frobenius parameter");
    v->add_option("--poly", verify.poly, "coefficients f_0,f_1,... of f (tsymm, phorn)");
    v->add_option("--degree", verify.degree, "truncation degree D");
    v->add_flag("--random", verify.random, "draw u, v (and f) from the seeded generator");
    v->add_option("--seed", verify.seed, "generator seed");
    v->add_flag("--symbolic", verify.symbolic, "symbolic u, v in the polynomial ring");
    v->add_option("--json", verify.json.path, "write JSON report to a file, or - for stdout");

    PreserveArgs preserve;
    auto* p = app.add_subcommand("preserve", "scan f[a 1 + t u u^T] for PSD violations and check the conclusions");
    p->add_option("--poly", preserve.poly, "polynomial coefficients c0,c1,...");
    p->add_option("--power", preserve.power, "f(x) = x^alpha");
    p->add_option("--series-file", preserve.series_file, "JSON Taylor coefficients {base_point, coeffs, polynomial}");
    p->add_option("--n", preserve.n, "dimension");
    p->add_option("--a", preserve.a, "base point a >= 0 (default 1, or the series base point)");
    p->add_option("--eps", preserve.eps, "t ranges over [0, eps)");
    p->add_option("--grid", preserve.grid, "number of t grid points");
    p->add_option("--u", preserve.u, "distinct u_k in (0,1) (default (1/2)^k)");
    p->add_flag("--relaxed", preserve.relaxed, "allow any distinct positive u (report not theorem-labeled)");
    p->add_flag("--unbounded", preserve.unbounded, "Maclaurin sign rule for an unbounded domain");
    p->add_option("--p", preserve.p, "p in the conclusion check");
    p->add_option("--q", preserve.q, "q in the conclusion check (default n)");
    p->add_option("--tol", preserve.tol, "numeric PSD tolerance");
    p->add_option("--json", preserve.json.path, "write JSON report to a file, or - for stdout");

    AdmissibleArgs adm;
    auto* d = app.add_subcommand("admissible", "admissible derivative-order tuples");
    d->add_option("--profile", adm.profile, "exp | monomial:k | f(a),f'(a),...")->required();
    d->add_option("--n", adm.n, "tuple length")->required();
    d->add_option("--tuple", adm.tuple, "strictly increasing orders l_0,...,l_{n-1}");
    d->add_flag("--tail-zero", adm.tail_zero, "derivatives past the explicit list vanish");
    d->add_option("--json", adm.json.path, "write JSON report to a file, or - for stdout");

    SuiteArgs suite;
    auto* st = app.add_subcommand("suite", "run the acceptance battery");
    st->add_option("--scale", suite.scale, "smoke | desk");
    st->add_option("--seed", suite.seed, "generator seed");
    st->add_option("--json", suite.json.path, "write JSON summary to a file, or - for stdout");

    std::vector<const char*> argv{"schurlab"};
    for (const auto& x : args) argv.push_back(x.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "schurlab: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (s->parsed()) return cmd_schur(schur, out, err);
        if (v->parsed()) return cmd_verify(verify, out, err);
        if (p->parsed()) return cmd_preserve(preserve, out, err);
        if (d->parsed()) return cmd_admissible(adm, out, err);
        return cmd_suite(suite, out, err);
    } catch (const InvalidInput& e) {
        err << "schurlab: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UndecidableProfile& e) {
        err << "schurlab: undecidable: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InexactDivision& e) {
        err << "schurlab: identity broken: " << e.what() << "\n";
        return kExitMismatch;
    }
}

}  // namespace schurlab
