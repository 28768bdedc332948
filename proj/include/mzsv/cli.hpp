#pragma once

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "closed_forms.hpp"
#include "io.hpp"
#include "numeric.hpp"
#include "s_map.hpp"
#include "verify.hpp"

// Command-line front end. Exit codes: 0 success, 1 parse or usage error,
// 2 tolerance unreachable within --max-terms, 3 failed invariant (an
// irrational cyclotomic reduction or a verification report with failures).

namespace mzsv::cli {

enum ExitCode : int { ok = 0, usage_error = 1, tolerance_unreachable = 2, invariant_failure = 3 };

namespace detail {

struct Options {
    std::string format = "text";
    double tol = default_tolerance;
    std::size_t max_terms = default_max_terms;

    std::string index;
    bool star = false;

    std::string kind;
    unsigned m = 0;
    int n = -1;
    int a = 3, b = 1, c = 2;
    unsigned max_n = 2;
    unsigned max_depth = 6;
    int max_part = 3;
    long max_weight = 8;
    std::uint32_t seed = 1;
    unsigned trials = 100;
    unsigned samples = 200;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline unsigned require_n(const Options& o, unsigned min)
{
    if (o.n < static_cast<int>(min)) {
        throw UsageError("--n is required and must be >= " + std::to_string(min));
    }
    return static_cast<unsigned>(o.n);
}

inline unsigned require_m(const Options& o)
{
    if (o.m == 0) {
        throw UsageError("--m is required and must be >= 1");
    }
    return o.m;
}

class Printer {
public:
    Printer(std::ostream& out, bool as_json) : out_(out), json_(as_json) {}

    template <typename T>
    void value(const T& x)
    {
        if (json_) {
            out_ << json(x).dump() << '\n';
        } else {
            out_ << to_text(x) << '\n';
        }
    }

    void report(const Report& r)
    {
        if (json_) {
            out_ << json(r).dump() << '\n';
        } else {
            out_ << to_text(r);
        }
    }

    [[nodiscard]] bool as_json() const { return json_; }
    std::ostream& stream() { return out_; }

private:
    std::ostream& out_;
    bool json_;
};

inline int run_expand(const Options& o, Printer& p)
{
    const Index i = parse_index(o.index);
    p.value(o.star ? s_map_inverse(i.word()) : s_map(i.word()));
    return ok;
}

inline int run_eval(const Options& o, Printer& p)
{
    const Index i = parse_index(o.index);
    if (!i.admissible()) {
        throw UsageError("index " + format_index(i) + " is not admissible (first part must be >= 2)");
    }
    p.value(o.star ? mzsv_numeric(i, o.tol, o.max_terms) : mzv_numeric(i, o.tol, o.max_terms));
    return ok;
}

inline int run_coeff(const Options& o, Printer& p)
{
    PiMultiple result;
    if (o.kind == "thmA") {
        const unsigned m = require_m(o);
        const unsigned n = require_n(o, 0);
        result = {thmA_coefficient(m, n), 2 * m * n};
    } else if (o.kind == "thm1") {
        const unsigned m = require_m(o);
        result = mzv_repeated_2m(m, require_n(o, 0));
    } else if (o.kind == "thmB") {
        const unsigned n = require_n(o, 0);
        result = {thmB_coefficient(n), 4 * n};
    } else {
        const unsigned n = require_n(o, 1);
        result = {thmC_coefficient(n), 4 * n + 2};
    }
    p.value(result);
    return ok;
}

inline int run_verify(const Options& o, Printer& p)
{
    Report r;
    if (o.kind == "thm6") {
        r = verify_thm6(o.a, o.b, require_n(o, 0));
    } else if (o.kind == "thm7") {
        r = verify_thm7(o.a, o.b, o.c, require_n(o, 0));
    } else if (o.kind == "genfunc") {
        r = verify_genfunc_thmA(require_m(o), o.max_n);
    } else if (o.kind == "sconsist") {
        r = verify_s_consistency(o.max_depth, o.max_part, o.seed, o.samples);
    } else if (o.kind == "stuffle") {
        r = verify_stuffle_laws(o.seed, o.trials, o.max_weight);
    } else {
        r = verify_z_homomorphism(o.seed, o.trials, o.tol, o.max_terms);
    }
    p.report(r);
    return r.passed() ? ok : invariant_failure;
}

inline int run_bernoulli(const Options& o, Printer& p)
{
    const unsigned n = require_n(o, 0);
    const Rational b = bernoulli(n);
    if (p.as_json()) {
        p.stream() << json{{"n", n}, {"value", b}}.dump() << '\n';
    } else {
        p.stream() << b << '\n';
    }
    return ok;
}

inline int run_insertions(const Options& o, Printer& p)
{
    const auto list = insertions(require_n(o, 1));
    if (p.as_json()) {
        p.stream() << json(list).dump() << '\n';
    } else {
        for (const auto& i : list) {
            p.stream() << format_index(i) << '\n';
        }
    }
    return ok;
}

} // namespace detail

// Runs one command; args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    using detail::Options;
    Options o;
    CLI::App app{"Multiple zeta and zeta-star values: exact closed forms, word algebra, numerics",
                 "mzsv"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--tol", o.tol, "Absolute tolerance for numeric evaluation")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-terms", o.max_terms, "Cap on the outer summation cutoff")
        ->check(CLI::PositiveNumber);

    auto* expand = app.add_subcommand("expand", "Expand zeta*(I) as a sum of zeta values (--star: the inverse)");
    expand->add_option("--index", o.index, "Comma-separated index, e.g. 3,1,3,1")->required();
    expand->add_flag("--star", o.star, "Express zeta(I) through zeta-star values instead");

    auto* eval = app.add_subcommand("eval", "Evaluate zeta(I) (or zeta*(I) with --star) numerically");
    eval->add_option("--index", o.index, "Comma-separated admissible index")->required();
    eval->add_flag("--star", o.star, "Evaluate the zeta-star value");

    auto* coeff = app.add_subcommand("coeff", "Exact closed form q * pi^w");
    coeff->add_option("kind", o.kind, "thmA | thmB | thmC | thm1")
        ->required()
        ->check(CLI::IsMember({"thmA", "thmB", "thmC", "thm1"}));
    coeff->add_option("--m", o.m, "m >= 1 (thmA, thm1)");
    coeff->add_option("--n", o.n, "n");

    auto* verify = app.add_subcommand("verify", "Run an identity check and print its report");
    verify->add_option("kind", o.kind, "thm6 | thm7 | stuffle | genfunc | sconsist | zhom")
        ->required()
        ->check(CLI::IsMember({"thm6", "thm7", "stuffle", "genfunc", "sconsist", "zhom"}));
    verify->add_option("--a", o.a, "a (thm6, thm7)")->check(CLI::PositiveNumber);
    verify->add_option("--b", o.b, "b (thm6, thm7)")->check(CLI::PositiveNumber);
    verify->add_option("--c", o.c, "c (thm7)")->check(CLI::PositiveNumber);
    verify->add_option("--n", o.n, "n (thm6, thm7)");
    verify->add_option("--m", o.m, "m (genfunc)");
    verify->add_option("--max-n", o.max_n, "largest n (genfunc)")->check(CLI::PositiveNumber);
    verify->add_option("--max-depth", o.max_depth, "largest depth (sconsist)")->check(CLI::PositiveNumber);
    verify->add_option("--max-part", o.max_part, "largest part (sconsist)")->check(CLI::PositiveNumber);
    verify->add_option("--max-weight", o.max_weight, "largest weight (stuffle)")->check(CLI::PositiveNumber);
    verify->add_option("--seed", o.seed, "generator seed (stuffle, sconsist, zhom)");
    verify->add_option("--trials", o.trials, "random cases (stuffle, zhom)")->check(CLI::PositiveNumber);
    verify->add_option("--samples", o.samples, "random words per depth above 6 (sconsist)");

    auto* bern = app.add_subcommand("bernoulli", "Bernoulli number B_n (B_1 = -1/2)");
    bern->add_option("--n", o.n, "n >= 0")->required();

    auto* ins = app.add_subcommand("insertions", "Indices obtained by inserting 2 into (3,1)^n");
    ins->add_option("--n", o.n, "n >= 1")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }

    detail::Printer printer(out, o.format == "json");
    try {
        if (expand->parsed()) {
            return detail::run_expand(o, printer);
        }
        if (eval->parsed()) {
            return detail::run_eval(o, printer);
        }
        if (coeff->parsed()) {
            return detail::run_coeff(o, printer);
        }
        if (verify->parsed()) {
            return detail::run_verify(o, printer);
        }
        if (bern->parsed()) {
            return detail::run_bernoulli(o, printer);
        }
        return detail::run_insertions(o, printer);
    } catch (const ParseError& e) {
        err << "error: invalid index: " << e.what() << '\n';
        return usage_error;
    } catch (const detail::UsageError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const ToleranceUnreachable& e) {
        err << "error: " << e.what() << '\n';
        return tolerance_unreachable;
    } catch (const NotRational& e) {
        err << "error: " << e.what() << '\n';
        return invariant_failure;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    }
}

} // namespace mzsv::cli
