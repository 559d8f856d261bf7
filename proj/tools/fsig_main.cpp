// Command-line frontend for the fsig library: Groebner bases, colengths,
// F-signature values, limit F-signature functions, normalized volumes,
// p-sweeps and the self-verification suites, all over the pairs
//   (x^M, y^N, (x^a y^b (x^u + y^v)^c)^K).
//
// Exit codes: 0 success, 1 verification failure (a dual-route disagreement
// or a failed check), 2 usage / domain / hypothesis errors.
// Data goes to stdout, diagnostics to stderr; output is deterministic.

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fsig/closed_basis.hpp"
#include "fsig/errors.hpp"
#include "fsig/fsig.hpp"
#include "fsig/lengths.hpp"
#include "fsig/oracle.hpp"
#include "fsig/poly.hpp"
#include "fsig/prime_field.hpp"
#include "fsig/rational.hpp"
#include "fsig/sweep.hpp"
#include "fsig/verify.hpp"

namespace {

using namespace fsig;
using ordered_json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// argument parsing helpers

std::uint32_t parse_u32(const std::string& text, const std::string& what) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
        throw DomainError(what + ": expected a nonnegative integer, got '" + text + "'");
    unsigned long value = 0;
    try {
        value = std::stoul(text);
    } catch (const std::exception&) {
        throw DomainError(what + ": integer out of range: '" + text + "'");
    }
    if (value >= (1ul << 31)) throw DomainError(what + ": integer out of range: '" + text + "'");
    return static_cast<std::uint32_t>(value);
}

// "q" selects the rationals, "p=<prime>" a prime field.
FieldSpec parse_field(const std::string& text) {
    if (text == "q") return FieldSpec{};
    if (text.rfind("p=", 0) == 0) {
        std::uint32_t p = parse_u32(text.substr(2), "--field");
        if (!is_prime_u32(p))
            throw DomainError("--field: " + std::to_string(p) + " is not prime");
        return FieldSpec{p};
    }
    throw DomainError("--field expects 'q' or 'p=<prime>', got '" + text + "'");
}

// Comma-separated prime list; a token "A..B" expands to every prime in [A, B].
std::vector<std::uint32_t> parse_primes(const std::string& text) {
    std::vector<std::uint32_t> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        std::string token = text.substr(pos, comma - pos);
        pos = comma + 1;
        if (token.empty()) throw DomainError("--primes: empty entry in '" + text + "'");
        std::size_t dots = token.find("..");
        if (dots == std::string::npos) {
            std::uint32_t p = parse_u32(token, "--primes");
            if (!is_prime_u32(p))
                throw DomainError("--primes: " + std::to_string(p) + " is not prime");
            out.push_back(p);
        } else {
            std::uint32_t lo = parse_u32(token.substr(0, dots), "--primes");
            std::uint32_t hi = parse_u32(token.substr(dots + 2), "--primes");
            if (lo > hi)
                throw DomainError("--primes: empty range '" + token + "'");
            std::size_t before = out.size();
            for (std::uint32_t p = lo; p <= hi; ++p)
                if (is_prime_u32(p)) out.push_back(p);
            if (out.size() == before)
                throw DomainError("--primes: no primes in range '" + token + "'");
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (out.empty()) throw DomainError("--primes: empty list");
    return out;
}

BigRational parse_rational_arg(const std::string& text, const std::string& what) {
    try {
        return parse_rational(text);
    } catch (const Error& e) {
        throw DomainError(what + ": " + e.what());
    }
}

template <typename Fn>
auto with_field(const FieldSpec& fs, Fn&& fn) {
    if (fs.is_rational()) {
        Rationals field;
        return fn(field);
    }
    PrimeField field(fs.p);
    return fn(field);
}

void emit_json(const ordered_json& doc) { std::cout << doc.dump(2) << '\n'; }

// ---------------------------------------------------------------------------
// shared ideal-spec flags: either the short form --k/--m/--n for
// (x^m, y^n, (x+y)^k), or the general --M/--N/--K/--a/--b/--c form.

struct SpecInputs {
    long long k = 1, m = 1, n = 1;
    long long M = 1, N = 1, K = 1, a = 0, b = 0, c = 0;
    std::string field_text;
    CLI::Option* ok = nullptr;
    CLI::Option* om = nullptr;
    CLI::Option* on = nullptr;
    CLI::Option* oM = nullptr;
    CLI::Option* oN = nullptr;
    CLI::Option* oK = nullptr;
    CLI::Option* oa = nullptr;
    CLI::Option* ob = nullptr;
    CLI::Option* oc = nullptr;
};

void add_spec_options(CLI::App* cmd, SpecInputs& in, const std::string& field_default) {
    in.ok = cmd->add_option("--k", in.k, "exponent k of (x^m, y^n, (x+y)^k)");
    in.om = cmd->add_option("--m", in.m, "exponent m of (x^m, y^n, (x+y)^k)");
    in.on = cmd->add_option("--n", in.n, "exponent n of (x^m, y^n, (x+y)^k)");
    in.oM = cmd->add_option("--M", in.M, "x-power bound M of (x^M, y^N, f^K)");
    in.oN = cmd->add_option("--N", in.N, "y-power bound N (defaults to M)");
    in.oK = cmd->add_option("--K", in.K, "power K applied to f = x^a y^b (x+y)^c");
    in.oa = cmd->add_option("--a", in.a, "exponent a in f = x^a y^b (x+y)^c");
    in.ob = cmd->add_option("--b", in.b, "exponent b in f = x^a y^b (x+y)^c");
    in.oc = cmd->add_option("--c", in.c, "exponent c in f = x^a y^b (x+y)^c");
    in.field_text = field_default;
    cmd->add_option("--field", in.field_text,
                    "coefficient field: q (rationals) or p=<prime>")
        ->capture_default_str();
}

struct ResolvedSpec {
    IdealSpec spec;        // general form; the short form maps to a=b=0, c=k, K=1
    bool simple = false;   // true when given through --k/--m/--n
    long long k = 0, m = 0, n = 0;  // populated when simple
};

ResolvedSpec resolve_spec(const SpecInputs& in) {
    bool sugar = in.ok->count() || in.om->count() || in.on->count();
    bool general = in.oM->count() || in.oN->count() || in.oK->count() || in.oa->count() ||
                   in.ob->count() || in.oc->count();
    if (sugar && general)
        throw DomainError("give either --k/--m/--n or --M/--N/--K/--a/--b/--c, not both");
    if (!sugar && !general)
        throw DomainError("missing ideal: give --k/--m/--n or --M (with --K/--a/--b/--c)");
    ResolvedSpec out;
    out.spec.field = parse_field(in.field_text);
    if (sugar) {
        if (!(in.ok->count() && in.om->count() && in.on->count()))
            throw DomainError("--k, --m and --n must be given together");
        out.simple = true;
        out.k = in.k;
        out.m = in.m;
        out.n = in.n;
        if (out.k < 0) throw DomainError("--k must be nonnegative");
        out.spec.M = in.m;
        out.spec.N = in.n;
        out.spec.K = 1;
        out.spec.a = 0;
        out.spec.b = 0;
        out.spec.c = in.k;
    } else {
        if (!in.oM->count())
            throw DomainError("--M is required in the general form (or use --k/--m/--n)");
        out.spec.M = in.M;
        out.spec.N = in.oN->count() ? in.N : in.M;
        out.spec.K = in.K;
        out.spec.a = in.a;
        out.spec.b = in.b;
        out.spec.c = in.c;
    }
    out.spec.validate();
    return out;
}

// ---------------------------------------------------------------------------
// basis

template <typename F>
int basis_with(const F& field, const IdealSpec& spec, bool oracle, bool as_json) {
    GroebnerBasis<F> gb;
    if (oracle) {
        std::vector<Poly<F>> gens;
        gens.push_back(Poly<F>::monomial(field, mono(checked_exp(spec.M), 0), field.one()));
        gens.push_back(Poly<F>::monomial(field, mono(0, checked_exp(spec.N)), field.one()));
        gens.push_back(power_xy(field, spec.a, spec.b, spec.c, 1, 1, spec.K));
        gb = buchberger(field, std::move(gens));
    } else {
        gb = closed_groebner(field, spec);
    }

    std::vector<std::string> gen_strings;
    gen_strings.reserve(gb.generators.size());
    for (const auto& g : gb.generators) gen_strings.push_back(to_string(g));
    std::vector<std::string> lt_strings;
    lt_strings.reserve(gb.lt_ideal.size());
    for (const auto& m : gb.lt_ideal) lt_strings.push_back(to_string(m));

    if (as_json) {
        ordered_json doc;
        doc["route"] = oracle ? "oracle" : "closed";
        if (!oracle) doc["case"] = gb.case_tag;
        doc["field"] = spec.field.name();
        doc["generators"] = gen_strings;
        doc["lt_ideal"] = lt_strings;
        emit_json(doc);
        return 0;
    }
    std::cout << "route: " << (oracle ? "oracle" : "closed") << '\n';
    if (!oracle) std::cout << "case: " << gb.case_tag << '\n';
    std::cout << "field: " << spec.field.name() << '\n';
    for (const auto& s : gen_strings) std::cout << "generator: " << s << '\n';
    std::cout << "lt_ideal:";
    for (std::size_t i = 0; i < lt_strings.size(); ++i)
        std::cout << (i == 0 ? " " : ", ") << lt_strings[i];
    std::cout << '\n';
    return 0;
}

int run_basis(const SpecInputs& in, bool oracle, bool as_json) {
    ResolvedSpec rs = resolve_spec(in);
    return with_field(rs.spec.field,
                      [&](const auto& field) { return basis_with(field, rs.spec, oracle, as_json); });
}

// ---------------------------------------------------------------------------
// length

long long oracle_length(const IdealSpec& spec) {
    return with_field(spec.field, [&](const auto& field) -> long long {
        auto f = power_xy(field, spec.a, spec.b, spec.c, 1, 1, 1);
        return length_rank(field, spec.M, spec.N, f, spec.K);
    });
}

int run_length(const SpecInputs& in, const std::string& route, bool as_json) {
    ResolvedSpec rs = resolve_spec(in);
    const FieldSpec& fs = rs.spec.field;

    auto formula_result = [&]() -> LengthResult {
        return rs.simple ? length_simple(rs.k, rs.m, rs.n, fs) : length_general(rs.spec);
    };
    auto wlp_result = [&]() -> LengthResult {
        if (!rs.simple)
            throw DomainError("--route wlp needs the --k/--m/--n form of the ideal");
        if (fs.is_rational())
            throw DomainError("--route wlp needs --field p=<prime>");
        return length_wlp(rs.k, rs.m, rs.n, fs.p);
    };

    if (route == "all") {
        std::vector<std::pair<std::string, long long>> values;
        values.emplace_back("formula", formula_result().value);
        if (rs.simple && fs.is_rational())
            std::cerr << "note: --field q has no wlp route; comparing formula and oracle only\n";
        if (rs.simple && !fs.is_rational()) values.emplace_back("wlp", wlp_result().value);
        values.emplace_back("oracle", oracle_length(rs.spec));
        bool agree = true;
        for (const auto& [name, value] : values) agree = agree && value == values.front().second;
        if (as_json) {
            ordered_json doc;
            ordered_json routes;
            for (const auto& [name, value] : values) routes[name] = value;
            doc["values"] = routes;
            doc["agree"] = agree;
            if (agree) doc["value"] = values.front().second;
            emit_json(doc);
        } else {
            for (const auto& [name, value] : values)
                std::cout << name << ": " << value << '\n';
        }
        if (!agree) {
            std::cerr << "error: length routes disagree\n";
            return 1;
        }
        if (!as_json) std::cout << "value: " << values.front().second << '\n';
        return 0;
    }

    std::optional<LengthResult> result;
    long long value = 0;
    if (route == "formula") {
        result = formula_result();
        value = result->value;
    } else if (route == "wlp") {
        result = wlp_result();
        value = result->value;
    } else {  // oracle
        value = oracle_length(rs.spec);
    }

    if (as_json) {
        ordered_json doc;
        doc["value"] = value;
        doc["route"] = route;
        if (result) {
            doc["case"] = std::string(1, result->case_tag);
            doc["hypotheses"] = result->hypotheses;
        }
        emit_json(doc);
        return 0;
    }
    std::cout << "value: " << value << '\n';
    std::cout << "route: " << route << '\n';
    if (result) {
        std::cout << "case: " << result->case_tag << '\n';
        for (const auto& h : result->hypotheses) std::cout << "hypothesis: " << h << '\n';
    }
    return 0;
}

// ---------------------------------------------------------------------------
// fsig / limit / nvol

int run_fsig(long long a, long long b, long long c, std::uint32_t p, long long r) {
    std::cout << to_string(fsig_at_p(a, b, c, p, r)) << '\n';
    return 0;
}

PiecewiseFn limit_function(long long a, long long b, long long c, long long u, long long v) {
    if (u == 1 && v == 1) {
        std::array<long long, 3> e{a, b, c};
        std::sort(e.begin(), e.end(), std::greater<>());
        return limit_fsig_simple(e[0], e[1], e[2]);
    }
    return limit_fsig_general(a, b, c, u, v);
}

int run_limit(long long a, long long b, long long c, long long u, long long v,
              const std::optional<std::string>& t_text) {
    PiecewiseFn psi = limit_function(a, b, c, u, v);
    if (t_text) {
        BigRational t = parse_rational_arg(*t_text, "--t");
        std::cout << to_string(psi.eval(t)) << '\n';
    } else {
        std::cout << psi.to_json_string(2) << '\n';
    }
    return 0;
}

int run_nvol(long long a, long long b, long long c, const std::string& t_text,
             bool check_corollary, bool as_json) {
    std::array<long long, 3> e{a, b, c};
    std::sort(e.begin(), e.end(), std::greater<>());
    BigRational t = parse_rational_arg(t_text, "--t");
    BigRational value = nvol_simple(e[0], e[1], e[2], t);
    bool holds = true;
    if (check_corollary) holds = corollary_b_check(e[0], e[1], e[2], t);
    if (as_json) {
        ordered_json doc;
        doc["value"] = to_string(value);
        if (check_corollary) doc["corollary_b"] = holds;
        emit_json(doc);
    } else {
        std::cout << to_string(value) << '\n';
        if (check_corollary) std::cout << "corollary_b: " << (holds ? "true" : "false") << '\n';
    }
    return holds ? 0 : 1;
}

// ---------------------------------------------------------------------------
// sweep / verify

int run_sweep_cmd(const SweepConfig& config, const std::string& out_path) {
    SweepResult result = run_sweep(config);
    std::string rendered =
        config.format == SweepFormat::Csv ? render_csv(result) : render_json(result);
    if (out_path.empty()) {
        std::cout << rendered;
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw DomainError("--out: cannot open '" + out_path + "' for writing");
    out << rendered;
    if (!out.good()) throw DomainError("--out: write to '" + out_path + "' failed");
    return 0;
}

int run_verify(const std::string& suite, long long max_size, const std::string& primes_text) {
    VerifyOptions options;
    options.max_size = max_size;
    options.primes = parse_primes(primes_text);
    if (max_size < 1) throw DomainError("--max-size must be at least 1");
    VerifyReport report;
    if (suite == "basis")
        report = verify_basis(options);
    else if (suite == "length")
        report = verify_length(options);
    else if (suite == "fsig")
        report = verify_fsig(options);
    else
        report = verify_all(options);
    std::cout << render_report(report);
    return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact Groebner bases, colengths, F-signatures and limit F-signatures\n"
        "for the pairs (x^M, y^N, (x^a y^b (x^u + y^v)^c)^K) in two variables."};
    app.require_subcommand(1);

    // basis
    SpecInputs basis_in;
    bool basis_oracle = false;
    bool basis_json = false;
    CLI::App* basis = app.add_subcommand(
        "basis", "Groebner basis and minimal leading-term ideal of (x^M, y^N, f^K)");
    add_spec_options(basis, basis_in, "q");
    basis->add_flag("--oracle", basis_oracle,
                    "compute with the Buchberger oracle instead of the closed construction");
    basis->add_flag("--json", basis_json, "emit a JSON document");

    // length
    SpecInputs length_in;
    std::string length_route = "formula";
    bool length_json = false;
    CLI::App* length = app.add_subcommand(
        "length", "colength (vector-space codimension) of (x^M, y^N, f^K)");
    add_spec_options(length, length_in, "p=31");
    length->add_option("--route", length_route, "formula, wlp, oracle, or all")
        ->check(CLI::IsMember({"formula", "wlp", "oracle", "all"}))
        ->capture_default_str();
    length->add_flag("--json", length_json, "emit a JSON document");

    // fsig
    long long fsig_a = 0, fsig_b = 0, fsig_c = 0, fsig_r = 0;
    std::uint32_t fsig_p = 0;
    CLI::App* fsig_cmd = app.add_subcommand(
        "fsig", "F-signature value psi_p(r/p) of the pair (A, x^a y^b (x+y)^c) at p");
    fsig_cmd->add_option("--a", fsig_a, "exponent a")->required();
    fsig_cmd->add_option("--b", fsig_b, "exponent b")->required();
    fsig_cmd->add_option("--c", fsig_c, "exponent c")->required();
    fsig_cmd->add_option("--p", fsig_p, "prime characteristic")->required();
    fsig_cmd->add_option("--r", fsig_r, "numerator r of t = r/p")->required();

    // limit
    long long limit_a = 0, limit_b = 0, limit_c = 0, limit_u = 1, limit_v = 1;
    std::optional<std::string> limit_t;
    CLI::App* limit = app.add_subcommand(
        "limit", "limit F-signature function psi(t) for x^a y^b (x^u + y^v)^c");
    limit->add_option("--a", limit_a, "exponent a")->required();
    limit->add_option("--b", limit_b, "exponent b")->required();
    limit->add_option("--c", limit_c, "exponent c")->required();
    limit->add_option("--u", limit_u, "x-weight u in (x^u + y^v)")->capture_default_str();
    limit->add_option("--v", limit_v, "y-weight v in (x^u + y^v)")->capture_default_str();
    limit->add_option("--t", limit_t,
                      "evaluate at t (rational like 5/9 or decimal); omit for the full "
                      "piecewise function as JSON");

    // nvol
    long long nvol_a = 0, nvol_b = 0, nvol_c = 0;
    std::string nvol_t;
    bool nvol_check = false, nvol_json = false;
    CLI::App* nvol = app.add_subcommand(
        "nvol", "normalized volume of the pair (A, x^a y^b (x+y)^c) at parameter t");
    nvol->add_option("--a", nvol_a, "exponent a")->required();
    nvol->add_option("--b", nvol_b, "exponent b")->required();
    nvol->add_option("--c", nvol_c, "exponent c")->required();
    nvol->add_option("--t", nvol_t, "parameter t (rational like 1/2 or decimal)")->required();
    nvol->add_flag("--check-corollary", nvol_check,
                   "also check nvol(t) == 4 psi(t) and report corollary_b");
    nvol->add_flag("--json", nvol_json, "emit a JSON document");

    // sweep
    SweepConfig sweep_config;
    std::string sweep_primes = "31..101";
    std::string sweep_format = "csv";
    std::optional<std::string> sweep_t_min, sweep_t_max;
    std::string sweep_out;
    CLI::App* sweep = app.add_subcommand(
        "sweep", "tabulate psi_p(floor(t p)/p) against the limit psi(t) over primes");
    sweep->add_option("--a", sweep_config.a, "exponent a")->capture_default_str();
    sweep->add_option("--b", sweep_config.b, "exponent b")->capture_default_str();
    sweep->add_option("--c", sweep_config.c, "exponent c")->capture_default_str();
    sweep->add_option("--u", sweep_config.u, "x-weight u in (x^u + y^v)")->capture_default_str();
    sweep->add_option("--v", sweep_config.v, "y-weight v in (x^u + y^v)")->capture_default_str();
    sweep->add_option("--primes", sweep_primes,
                      "comma-separated primes; A..B expands to all primes in [A, B]")
        ->capture_default_str();
    sweep->add_option("--grid", sweep_config.grid, "number of t grid points per prime")
        ->capture_default_str();
    sweep->add_option("--t-min", sweep_t_min, "lower end of a custom t window (with --t-max)");
    sweep->add_option("--t-max", sweep_t_max, "upper end of a custom t window (with --t-min)");
    sweep->add_option("--format", sweep_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sweep->add_option("--out", sweep_out, "write the table to this file instead of stdout");

    // verify
    std::string verify_suite = "all";
    long long verify_max_size = 6;
    std::string verify_primes = "31,101";
    CLI::App* verify = app.add_subcommand(
        "verify", "run the dual-route verification suites and report PASS/FAIL per check");
    verify->add_option("--suite", verify_suite, "basis, length, fsig, or all")
        ->check(CLI::IsMember({"basis", "length", "fsig", "all"}))
        ->capture_default_str();
    verify->add_option("--max-size", verify_max_size, "exponent bound for the search grids")
        ->capture_default_str();
    verify->add_option("--primes", verify_primes,
                       "comma-separated primes; A..B expands to all primes in [A, B]")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*basis) return run_basis(basis_in, basis_oracle, basis_json);
        if (*length) return run_length(length_in, length_route, length_json);
        if (*fsig_cmd) return run_fsig(fsig_a, fsig_b, fsig_c, fsig_p, fsig_r);
        if (*limit) return run_limit(limit_a, limit_b, limit_c, limit_u, limit_v, limit_t);
        if (*nvol) return run_nvol(nvol_a, nvol_b, nvol_c, nvol_t, nvol_check, nvol_json);
        if (*sweep) {
            sweep_config.primes = parse_primes(sweep_primes);
            sweep_config.format =
                sweep_format == "csv" ? SweepFormat::Csv : SweepFormat::Json;
            if (sweep_t_min) sweep_config.t_min = parse_rational_arg(*sweep_t_min, "--t-min");
            if (sweep_t_max) sweep_config.t_max = parse_rational_arg(*sweep_t_max, "--t-max");
            return run_sweep_cmd(sweep_config, sweep_out);
        }
        if (*verify) return run_verify(verify_suite, verify_max_size, verify_primes);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;  // unreachable: a subcommand is required
}
