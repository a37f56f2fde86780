#include "schurlab/battery.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>

#include "schurlab/admissible.hpp"
#include "schurlab/calculus.hpp"
#include "schurlab/cli.hpp"
#include "schurlab/detident.hpp"
#include "schurlab/preserver.hpp"
#include "schurlab/random.hpp"

namespace schurlab {

Scale parse_scale(const std::string& text) {
    if (text == "smoke") return Scale::smoke;
    if (text == "desk") return Scale::desk;
    throw InvalidInput("--scale must be smoke or desk");
}

std::string to_string(Scale scale) { return scale == Scale::smoke ? "smoke" : "desk"; }

namespace {

using Vec = std::vector<Rational>;
using Span = std::span<const Rational>;

std::string vec_text(const Vec& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].to_string();
    return out + ")";
}

/// Counts cases and keeps the first failure.
struct Tally {
    std::size_t cases = 0;
    std::string failure;

    void check(bool ok, const std::function<std::string()>& describe) {
        ++cases;
        if (!ok && failure.empty()) failure = describe();
    }
    bool ok() const { return failure.empty(); }
};

SeededRng criterion_rng(std::uint64_t seed, int id) {
    return SeededRng(seed * 1000003ULL + static_cast<std::uint64_t>(id));
}

CriterionResult finish(int id, std::string name, const Tally& t, std::string success) {
    CriterionResult r;
    r.id = id;
    r.name = std::move(name);
    r.passed = t.ok();
    r.cases = t.cases;
    r.detail = t.ok() ? std::move(success) : t.failure;
    return r;
}

// 1. Cauchy identity over random integer pairs.
CriterionResult cauchy_identity(Scale scale, std::uint64_t seed) {
    Tally t;
    const Vec ru = {Rational(1), Rational(2)}, rv = {Rational(1), Rational(3)};
    const auto ref = verify_cauchy(Span(ru), Span(rv), 3);
    t.check(ref.match() && ref.lhs == std::vector<std::string>{"0", "2", "24", "194"},
            [&] { return "reference point u=(1,2), v=(1,3) did not give 2t + 24t^2 + 194t^3"; });

    SeededRng rng = criterion_rng(seed, 1);
    const int pairs = scale == Scale::desk ? 20 : 3;
    for (std::size_t n = 2; n <= 4; ++n) {
        for (int i = 0; i < pairs; ++i) {
            const Vec u = to_rationals(rng.distinct_ints(n, -3, 3));
            const Vec v = to_rationals(rng.distinct_ints(n, -3, 3));
            const auto r = verify_cauchy(Span(u), Span(v), 10);
            t.check(r.match(), [&] {
                return "n=" + std::to_string(n) + " u=" + vec_text(u) + " v=" + vec_text(v) + " mismatch at degree " +
                       (r.first_mismatch_degree ? std::to_string(*r.first_mismatch_degree) : "below vanishing threshold");
            });
        }
    }
    return finish(1, "cauchy_identity", t, "delta_series = Schur-sum RHS exactly at D=10, n in {2,3,4}");
}

// 2. Frobenius identity: direct determinant, general expansion, regrouped form.
CriterionResult frobenius_identity(Scale scale, std::uint64_t seed) {
    Tally t;
    const Vec ru = {Rational(1), Rational(2)}, rv = {Rational(1), Rational(3)};
    const auto ref = verify_frobenius(Rational(2), Span(ru), Span(rv), 2);
    t.check(ref.match() && ref.lhs == std::vector<std::string>{"0", "-2", "-24"},
            [&] { return "reference point c=2 did not give -2t - 24t^2"; });

    SeededRng rng = criterion_rng(seed, 2);
    const std::vector<Rational> cs = {Rational(2), Rational(1, 2), Rational(-1), Rational(0), Rational(1)};
    const int pairs = scale == Scale::desk ? 4 : 1;
    for (std::size_t n = 2; n <= 3; ++n) {
        for (int i = 0; i < pairs; ++i) {
            const Vec u = to_rationals(rng.distinct_ints(n, -3, 3));
            const Vec v = to_rationals(rng.distinct_ints(n, -3, 3));
            for (const auto& c : cs) {
                const auto r = verify_frobenius(c, Span(u), Span(v), 8);
                const auto where = [&] {
                    return "n=" + std::to_string(n) + " c=" + c.to_string() + " u=" + vec_text(u) + " v=" + vec_text(v);
                };
                t.check(r.match(), [&] { return where() + ": three-way mismatch"; });
                if (c.is_zero())
                    t.check(r.lhs == verify_cauchy(Span(u), Span(v), 8).lhs,
                            [&] { return where() + ": c=0 differs from the Cauchy case"; });
                if (c == Rational(1))
                    t.check(std::all_of(r.lhs.begin(), r.lhs.end(), [](const std::string& x) { return x == "0"; }),
                            [&] { return where() + ": c=1 series is not zero"; });
            }
        }
    }
    return finish(2, "frobenius_identity", t, "direct determinant = tsymm expansion = regrouped form at D=8");
}

struct RandomInstance {
    std::size_t n;
    Vec u, v;
    SeriesFunction<Rational> f;
};

std::vector<RandomInstance> universal_inputs(Scale scale, std::uint64_t seed) {
    SeededRng rng = criterion_rng(seed, 3);
    const int count = scale == Scale::desk ? 50 : 8;
    std::vector<RandomInstance> out;
    for (int i = 0; i < count; ++i) {
        RandomInstance x;
        x.n = static_cast<std::size_t>(i % 4 + 1);
        x.u = to_rationals(rng.distinct_ints(x.n, -3, 3));
        x.v = to_rationals(rng.distinct_ints(x.n, -3, 3));
        Vec c;
        const long degree = rng.uniform_int(0, 6);
        for (long m = 0; m <= degree; ++m) c.emplace_back(rng.uniform_int(-4, 4));
        x.f = SeriesFunction<Rational>::from_polynomial(c);
        out.push_back(std::move(x));
    }
    return out;
}

std::string instance_text(const RandomInstance& x) {
    return "n=" + std::to_string(x.n) + " f=" + vec_text(x.f.coeffs) + " u=" + vec_text(x.u) + " v=" + vec_text(x.v);
}

// 3. Universal expansion: three oracles and the vanishing below binom(n,2).
CriterionResult universal_expansion(Scale scale, std::uint64_t seed) {
    Tally t;
    for (const auto& x : universal_inputs(scale, seed)) {
        const auto r = verify_tsymm(x.f, Span(x.u), Span(x.v), 10);
        t.check(r.match() && r.extra.size() == 1 && r.vanishing_holds,
                [&] { return instance_text(x) + ": oracles disagree or low coefficients nonzero"; });
    }
    return finish(3, "universal_expansion", t,
                  "delta_series = tsymm_rhs = cauchy_binet_series at D=10, zero below binom(n,2)");
}

// 4. Derivative formula against the series, and vanishing for sparse profiles.
CriterionResult derivative_formula(Scale scale, std::uint64_t seed) {
    Tally t;
    for (const auto& x : universal_inputs(scale, seed)) {
        const auto delta = delta_series(x.f, Span(x.u), Span(x.v), 10);
        ExactProfile profile;
        profile.values = x.f.derivatives(x.f.known_degree());
        profile.tail_zero = true;
        for (int m = 0; m <= 10; ++m) {
            t.check(phorn_derivative(profile, Span(x.u), Span(x.v), m) == factorial(static_cast<unsigned>(m)) * delta[m],
                    [&] { return instance_text(x) + ": M! [t^M] Delta != closed form at M=" + std::to_string(m); });
        }
    }
    SeededRng rng = criterion_rng(seed, 4);
    const int sparse = scale == Scale::desk ? 50 : 8;
    for (int i = 0; i < sparse; ++i) {
        const std::size_t n = static_cast<std::size_t>(i % 3 + 2);
        const Vec u = to_rationals(rng.distinct_ints(n, -3, 3));
        const Vec v = to_rationals(rng.distinct_ints(n, -3, 3));
        ExactProfile profile;
        profile.values.assign(11, Rational(0));
        profile.tail_zero = true;
        const long nonzero = rng.uniform_int(0, static_cast<long>(n) - 1);
        for (long k = 0; k < nonzero; ++k)
            profile.values[static_cast<std::size_t>(rng.uniform_int(0, 10))] = Rational(rng.uniform_int(-9, 9));
        for (int m = 0; m <= 10; ++m)
            t.check(phorn_derivative(profile, Span(u), Span(v), m).is_zero(), [&] {
                return "profile " + vec_text(profile.values) + " with fewer than n=" + std::to_string(n) +
                       " nonzero entries gave a nonzero derivative at M=" + std::to_string(m);
            });
    }
    return finish(4, "derivative_formula", t, "M! [t^M] Delta = phorn_derivative for M <= 10; sparse profiles give 0");
}

// 5. Tableaux against bialternant.
CriterionResult schur_dual(Scale scale, std::uint64_t /*seed*/) {
    Tally t;
    const int max_total = scale == Scale::desk ? 12 : 7;
    auto compare = [&](const PartitionTuple& m) {
        const MultiPoly a = schur_tableaux(m, m.length()).value;
        const MultiPoly b = schur_bialternant(m, m.length()).value;
        t.check(a == b, [&] { return "tuple " + m.to_string() + ": tableaux != bialternant"; });
    };
    // Strict tuples m with at most four parts and |m| <= max_total.
    for (int n = 1; n <= 4; ++n)
        for (int total = 0; total <= max_total; ++total)
            for (const auto& m : enumerate_partitions_distinct(total, n)) compare(m);
    // Partitions lambda with at most four parts and |lambda| <= max_total,
    // as the strict tuple lambda + staircase in every N = l(lambda)..4.
    std::function<void(int, int, std::vector<int>&)> shapes = [&](int left, int cap, std::vector<int>& lambda) {
        const std::size_t len = lambda.size();
        for (std::size_t n = std::max<std::size_t>(len, 1); n <= 4; ++n) {
            std::vector<int> parts(n, 0);
            for (std::size_t i = 0; i < n; ++i) parts[i] = (i < len ? lambda[i] : 0) + static_cast<int>(n - 1 - i);
            compare(PartitionTuple(parts));
        }
        if (len == 4) return;
        for (int x = std::min(left, cap); x >= 1; --x) {
            lambda.push_back(x);
            shapes(left - x, x, lambda);
            lambda.pop_back();
        }
    };
    std::vector<int> lambda;
    shapes(max_total, max_total, lambda);
    return finish(5, "schur_dual_construction", t, "tableaux = bialternant exactly on every case");
}

std::vector<std::vector<int>> strict_tuples(int n, int max_entry) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int next) {
        if (static_cast<int>(cur.size()) == n) {
            out.push_back(cur);
            return;
        }
        for (int x = next; x <= max_entry; ++x) {
            cur.push_back(x);
            rec(x + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

// 6. Brute-force admissibility against the closed-form classification.
CriterionResult admissibility(Scale scale, std::uint64_t /*seed*/) {
    Tally t;
    std::vector<std::pair<std::string, ExactProfile>> profiles;
    profiles.emplace_back("exp", exp_profile(40));
    for (int k = 0; k <= 5; ++k) profiles.emplace_back("monomial:" + std::to_string(k), monomial_profile(k));
    for (const auto& [i, j] : std::vector<std::pair<int, int>>{{0, 1}, {1, 3}, {2, 5}, {0, 7}}) {
        ExactProfile p;
        p.values.assign(static_cast<std::size_t>(j) + 1, Rational(0));
        p.values[static_cast<std::size_t>(i)] = Rational(1);
        p.values[static_cast<std::size_t>(j)] = Rational(-2);
        p.tail_zero = true;
        profiles.emplace_back("x^" + std::to_string(i) + "-x^" + std::to_string(j), p);
    }
    ExactProfile zero;
    zero.values.assign(1, Rational(0));
    zero.tail_zero = true;
    profiles.emplace_back("zero", zero);

    const int max_n = scale == Scale::desk ? 4 : 3;
    for (const auto& [name, p] : profiles) {
        for (int n = 1; n <= max_n; ++n) {
            const AdmissibleClass cls = admissible_characterize(p, n);
            for (const auto& l : strict_tuples(n, 8)) {
                t.check(is_admissible(l, p, n) == cls.admits(l), [&, &name = name] {
                    std::string s = "profile " + name + " n=" + std::to_string(n) + " tuple (";
                    for (std::size_t i = 0; i < l.size(); ++i) s += (i ? "," : "") + std::to_string(l[i]);
                    return s + "): brute force and characterization disagree";
                });
            }
        }
    }
    return finish(6, "admissibility", t, "is_admissible = admissible_characterize, zero mismatches");
}

// 7. The FitzGerald-Horn example through the command line.
CriterionResult fitzgerald_horn(Scale /*scale*/, std::uint64_t /*seed*/) {
    Tally t;
    auto run = [&](std::vector<std::string> args, int& code) {
        std::ostringstream out, err;
        args.push_back("--json");
        args.push_back("-");
        code = run_cli(args, out, err);
        if (code == kExitUsage) return Json();
        return Json::parse(out.str());
    };
    const Json expected_u3 = Json::array({"1/2", "1/4", "1/8"});

    int code = 0;
    const Json sqrt3 = run({"preserve", "--power", "0.5", "--n", "3", "--a", "1", "--eps", "1", "--grid", "200"}, code);
    t.check(code == kExitMismatch && sqrt3["family"]["u"] == expected_u3 && !sqrt3["violations"].empty(),
            [] { return "x^0.5, n=3: expected at least one violation with u=(1/2,1/4,1/8)"; });
    if (!sqrt3.is_null()) {
        for (const auto& v : sqrt3["violations"])
            t.check(v["min_eig_or_coeff"].get<double>() < v["threshold"].get<double>(),
                    [] { return "x^0.5, n=3: a reported violation is within the PSD tolerance"; });
    }

    const Json sqrt2 = run({"preserve", "--power", "0.5", "--n", "2", "--a", "1", "--eps", "1", "--grid", "200"}, code);
    t.check(code != kExitUsage && sqrt2["violations"].empty(), [] { return "x^0.5, n=2: expected no violation"; });

    const Json p15 = run({"preserve", "--power", "1.5", "--n", "3", "--a", "1", "--eps", "1", "--grid", "200"}, code);
    t.check(code == kExitOk && p15["violations"].empty() && p15["conclusion"]["verdict"] == "PASS",
            [] { return "x^1.5, n=3: expected no violation and a passing conclusion check"; });
    return finish(7, "fitzgerald_horn", t, "x^0.5 violates at n=3, not at n=2; x^1.5 clean at n=3");
}

// 8. Sign-pattern rule.
CriterionResult sign_patterns(Scale scale, std::uint64_t seed) {
    Tally t;
    const Vec c = {Rational(1), Rational(1), Rational(-1), Rational(1), Rational(1)};
    t.check(maclaurin_sign_check(c, 2, Domain::unbounded).pass, [] { return "(1,1,-1,1,1) n=2 should pass"; });
    const auto three = maclaurin_sign_check(c, 3, Domain::unbounded);
    t.check(!three.pass && three.first_offending_index == 2U, [] { return "(1,1,-1,1,1) n=3 should fail at 2"; });

    ExactProfile prefix;
    prefix.values = {Rational(1), Rational(1), Rational(-1)};
    t.check(!hl_conclusion_check(prefix, 3, 0, 3).pass(), [] { return "profile (1,1,-1) n=3 should fail"; });
    t.check(hl_conclusion_check(prefix, 2, 0, 2).pass(), [] { return "profile (1,1,-1) n=2 should pass"; });

    SeededRng rng = criterion_rng(seed, 8);
    const int count = scale == Scale::desk ? 200 : 30;
    for (int i = 0; i < count; ++i) {
        const int n = static_cast<int>(rng.uniform_int(1, 4));
        // Fewer than n positives, then a negative, then anything.
        Vec early;
        const long positives = rng.uniform_int(0, n - 1);
        for (long k = 0; k < positives; ++k) {
            if (rng.uniform_int(0, 1)) early.emplace_back(0);
            early.emplace_back(rng.uniform_int(1, 5));
        }
        const std::size_t bad = early.size();
        early.emplace_back(-rng.uniform_int(1, 5));
        for (long k = rng.uniform_int(0, 6); k > 0; --k) early.emplace_back(rng.uniform_int(-5, 5));
        for (Domain d : {Domain::bounded, Domain::unbounded}) {
            const auto v = maclaurin_sign_check(early, n, d);
            t.check(!v.pass && v.first_offending_index == bad && !v.from_reversal,
                    [&] { return "coefficients " + vec_text(early) + " n=" + std::to_string(n) + " not caught"; });
        }

        // n positives first, a trailing negative with fewer than n positives above it.
        Vec late;
        for (int k = 0; k < n; ++k) late.emplace_back(rng.uniform_int(1, 5));
        late.emplace_back(-rng.uniform_int(1, 5));
        const std::size_t neg = late.size() - 1;
        for (long k = rng.uniform_int(0, n - 1); k > 0; --k) late.emplace_back(rng.uniform_int(1, 5));
        t.check(maclaurin_sign_check(late, n, Domain::bounded).pass,
                [&] { return "coefficients " + vec_text(late) + " should pass on a bounded domain"; });
        const auto v = maclaurin_sign_check(late, n, Domain::unbounded);
        t.check(!v.pass && v.from_reversal && v.first_offending_index == neg,
                [&] { return "reversal missed the trailing negative in " + vec_text(late); });
    }

    std::ostringstream out, err;
    const int code = run_cli({"preserve", "--poly", "1,1,-1,1,1", "--n", "3", "--unbounded"}, out, err);
    t.check(code == kExitMismatch && out.str().find("maclaurin sign rule (unbounded): FAIL") != std::string::npos,
            [] { return "preserve --poly 1,1,-1,1,1 --n 3 --unbounded should fail the sign rule"; });
    return finish(8, "sign_patterns", t, "sign rule and reversal behave exactly as stated");
}

// 9. Calculus laws for both instances.
CriterionResult calculus_laws(Scale /*scale*/, std::uint64_t seed) {
    Tally t;
    SeededRng rng = criterion_rng(seed, 9);
    CalculusSamples<FormalSeriesCalculus> formal;
    for (int i = 0; i < 100; ++i) {
        Vec c;
        for (int k = 0; k <= 10; ++k) c.emplace_back(rng.uniform_int(-9, 9), rng.uniform_int(1, 5));
        formal.functions.emplace_back(10, c, Rational(0));
        formal.scalars.emplace_back(rng.uniform_int(-7, 7), rng.uniform_int(1, 4));
    }
    formal.shifts = {Rational(0)};
    const auto fr = calculus_laws_check(FormalSeriesCalculus{}, formal);
    t.check(fr.passed && fr.checks == 300, [&] { return "formal instance: " + fr.failed_law + " at " + fr.witness; });

    const NumericSmoothCalculus numeric({-1.2, -0.5, 0.1, 0.6, 1.3}, 1e-8);
    CalculusSamples<NumericSmoothCalculus> smooth;
    smooth.functions = {[](double x) { return std::sin(x); },  [](double x) { return std::cos(x); },
                        [](double x) { return std::exp(x); },  [](double x) { return std::atan(x); },
                        [](double x) { return 2.0 - x + 0.5 * x * x * x; }};
    smooth.scalars = {1.5, -0.75, 2.0, 0.5};
    smooth.shifts = {0.0, 0.3, -0.4};
    const auto nr = calculus_laws_check(numeric, smooth);
    t.check(nr.passed, [&] { return "numeric instance: " + nr.failed_law + " at " + nr.witness; });

    const auto sin_cos = numeric.multiply(smooth.functions[0], smooth.functions[1]);
    t.check(numeric.agree(numeric.derivative(sin_cos),
                          [](double x) { return std::cos(x) * std::cos(x) - std::sin(x) * std::sin(x); }),
            [] { return "numeric instance: d(sin cos) != cos^2 - sin^2 within 1e-8"; });
    t.cases += fr.checks + nr.checks - 2;  // count individual law checks
    return finish(9, "calculus_laws", t, "formal: exact on 100 samples; numeric: within 1e-8");
}

using CriterionFn = CriterionResult (*)(Scale, std::uint64_t);

struct Entry {
    CriterionFn fn;
    double budget;  // seconds
};

const Entry kCriteria[kCriterionCount] = {
    {cauchy_identity, 60},  {frobenius_identity, 30}, {universal_expansion, 120},
    {derivative_formula, 120}, {schur_dual, 60},       {admissibility, 120},
    {fitzgerald_horn, 10},  {sign_patterns, 30},      {calculus_laws, 30},
};

}  // namespace

CriterionResult run_criterion(int id, Scale scale, std::uint64_t seed) {
    if (id < 1 || id > kCriterionCount) throw InvalidInput("criterion id must be 1.." + std::to_string(kCriterionCount));
    const Entry& e = kCriteria[id - 1];
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
        r = e.fn(scale, seed);
    } catch (const std::exception& ex) {
        r.id = id;
        r.name = "criterion_" + std::to_string(id);
        r.passed = false;
        r.detail = std::string("exception: ") + ex.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.budget_seconds = e.budget;
    if (scale == Scale::desk && r.passed && r.seconds > e.budget) {
        r.passed = false;
        r.detail = "exceeded the runtime budget of " + std::to_string(static_cast<int>(e.budget)) + " s";
    }
    return r;
}

std::vector<CriterionResult> run_battery(Scale scale, std::uint64_t seed) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, scale, seed));
    return out;
}

std::string format_line(const CriterionResult& r) {
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", r.seconds);
    return std::string(r.passed ? "PASS" : "FAIL") + "  " + std::to_string(r.id) + " " + r.name + "  " +
           std::to_string(r.cases) + " cases  " + r.detail + " (" + timing + ")";
}

Json to_json(const std::vector<CriterionResult>& results, Scale scale, std::uint64_t seed) {
    Json j;
    j["schema"] = kReportSchema;
    j["prng"] = std::string(SeededRng::kAlgorithm);
    j["seed"] = seed;
    j["scale"] = to_string(scale);
    bool all = true;
    Json list = Json::array();
    for (const auto& r : results) {
        all = all && r.passed;
        Json e;
        e["id"] = r.id;
        e["name"] = r.name;
        e["passed"] = r.passed;
        e["cases"] = r.cases;
        e["detail"] = r.detail;
        list.push_back(e);
    }
    j["criteria"] = list;
    j["passed"] = all;
    return j;
}

}  // namespace schurlab
