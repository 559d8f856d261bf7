// Python bindings for the fsig core: exact rationals cross the boundary as
// fractions.Fraction (never float), colengths as python ints, and the limit
// functions as a small PiecewiseFn class.  Rational arguments accept
// Fraction, int, or strings like "5/9" / "0.45"; floats are rejected to keep
// every value exact.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

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

namespace py = pybind11;

namespace {

using namespace fsig;

py::object fraction(const BigRational& q) {
    static py::object Fraction = py::module_::import("fractions").attr("Fraction");
    return Fraction(to_string(q));
}

BigRational rational_from(py::handle obj, const char* what) {
    if (py::isinstance<py::float_>(obj))
        throw DomainError(std::string(what) +
                          ": pass rationals as Fraction, int or string, not float");
    return parse_rational(py::str(obj).cast<std::string>());
}

FieldSpec field_from(std::uint32_t p) {
    if (p != 0 && !is_prime_u32(p)) throw DomainError(std::to_string(p) + " is not prime");
    return FieldSpec{p};
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

std::array<long long, 3> sorted_desc(long long a, long long b, long long c) {
    std::array<long long, 3> e{a, b, c};
    std::sort(e.begin(), e.end(), std::greater<>());
    return e;
}

PiecewiseFn limit_function(long long a, long long b, long long c, long long u, long long v) {
    if (u == 1 && v == 1) {
        auto e = sorted_desc(a, b, c);
        return limit_fsig_simple(e[0], e[1], e[2]);
    }
    return limit_fsig_general(a, b, c, u, v);
}

py::dict basis_dict(long long M, long long N, long long K, long long a, long long b,
                    long long c, std::uint32_t p, bool oracle) {
    IdealSpec spec{M, N, K, a, b, c, field_from(p)};
    return with_field(spec.field, [&](const auto& field) {
        using F = std::decay_t<decltype(field)>;
        GroebnerBasis<F> gb;
        if (oracle) {
            std::vector<Poly<F>> gens;
            gens.push_back(Poly<F>::monomial(field, mono(checked_exp(M), 0), field.one()));
            gens.push_back(Poly<F>::monomial(field, mono(0, checked_exp(N)), field.one()));
            gens.push_back(power_xy(field, a, b, c, 1, 1, K));
            gb = buchberger(field, std::move(gens));
        } else {
            spec.validate();
            gb = closed_groebner(field, spec);
        }
        py::list gens_out, lt_out;
        for (const auto& g : gb.generators) gens_out.append(to_string(g));
        for (const auto& m : gb.lt_ideal) lt_out.append(py::make_tuple(m.i, m.j));
        py::dict out;
        out["route"] = oracle ? "oracle" : "closed";
        if (!oracle) out["case"] = gb.case_tag;
        out["field"] = spec.field.name();
        out["generators"] = gens_out;
        out["lt_ideal"] = lt_out;
        return out;
    });
}

long long rank_length(long long M, long long N, long long K, long long a, long long b,
                      long long c, std::uint32_t p, long long u, long long v) {
    return with_field(field_from(p), [&](const auto& field) -> long long {
        auto f = power_xy(field, a, b, c, u, v, 1);
        return length_rank(field, M, N, f, K);
    });
}

py::object witness_dict(std::uint32_t max_p) {
    NonstabilizationWitness w = find_nonstabilization_witness(max_p);
    if (!w.found) return py::none();
    py::dict out;
    out["p"] = w.p;
    out["r"] = w.r;
    out["psi_p"] = fraction(w.psi_p);
    out["psi_limit"] = fraction(w.psi_limit);
    return out;
}

py::dict sweep_dict(long long a, long long b, long long c, long long u, long long v,
                    const std::vector<std::uint32_t>& primes, long long grid,
                    py::object t_min, py::object t_max) {
    SweepConfig config;
    config.a = a;
    config.b = b;
    config.c = c;
    config.u = u;
    config.v = v;
    config.primes = primes;
    config.grid = grid;
    if (!t_min.is_none()) config.t_min = rational_from(t_min, "t_min");
    if (!t_max.is_none()) config.t_max = rational_from(t_max, "t_max");
    SweepResult result = run_sweep(config);
    py::list rows;
    for (const SweepRow& row : result.rows) {
        py::dict r;
        r["p"] = row.p;
        r["r"] = row.r;
        r["t"] = fraction(row.t);
        r["psi_p"] = fraction(row.psi_p);
        r["psi_limit"] = fraction(row.psi_limit);
        rows.append(r);
    }
    py::dict out;
    out["lambda"] = fraction(result.lambda);
    out["rows"] = rows;
    return out;
}

py::tuple verify_tuple(const std::string& suite, long long max_size,
                       const std::vector<std::uint32_t>& primes) {
    VerifyOptions options;
    options.max_size = max_size;
    options.primes = primes;
    for (std::uint32_t p : primes)
        if (!is_prime_u32(p)) throw DomainError(std::to_string(p) + " is not prime");
    VerifyReport report;
    if (suite == "basis")
        report = verify_basis(options);
    else if (suite == "length")
        report = verify_length(options);
    else if (suite == "fsig")
        report = verify_fsig(options);
    else if (suite == "all")
        report = verify_all(options);
    else
        throw DomainError("suite must be one of basis, length, fsig, all");
    return py::make_tuple(report.all_passed(), render_report(report));
}

}  // namespace

PYBIND11_MODULE(_fsig, m) {
    m.doc() = "Exact Groebner bases, colengths and F-signatures for the pairs "
              "(x^M, y^N, (x^a y^b (x^u + y^v)^c)^K) in two variables";

    // Most-derived exceptions registered last so they are matched first.
    py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<HypothesisViolation>(m, "HypothesisViolation", PyExc_ValueError);

    py::class_<PiecewiseFn>(m, "PiecewiseFn",
                            "Piecewise-quadratic limit F-signature function on [0, lct], "
                            "zero from lct on; all data exact rationals")
        .def_property_readonly("breakpoints",
                               [](const PiecewiseFn& fn) {
                                   py::list out;
                                   for (const auto& b : fn.breakpoints()) out.append(fraction(b));
                                   return out;
                               })
        .def_property_readonly("pieces",
                               [](const PiecewiseFn& fn) {
                                   py::list out;
                                   for (const auto& piece : fn.pieces())
                                       out.append(py::make_tuple(fraction(piece[0]),
                                                                 fraction(piece[1]),
                                                                 fraction(piece[2])));
                                   return out;
                               })
        .def_property_readonly("lct",
                               [](const PiecewiseFn& fn) { return fraction(fn.lambda()); })
        .def("__call__",
             [](const PiecewiseFn& fn, py::handle t) {
                 return fraction(fn.eval(rational_from(t, "t")));
             },
             py::arg("t"))
        .def("to_json", &PiecewiseFn::to_json_string, py::arg("indent") = -1)
        .def("__repr__", [](const PiecewiseFn& fn) {
            return "PiecewiseFn(" + fn.to_json_string() + ")";
        });

    m.def("basis", &basis_dict, py::arg("M"), py::arg("N"), py::arg("K") = 1, py::arg("a") = 0,
          py::arg("b") = 0, py::arg("c") = 0, py::arg("p") = 0, py::arg("oracle") = false,
          "Groebner basis data for (x^M, y^N, (x^a y^b (x+y)^c)^K); p=0 means QQ. "
          "Returns a dict with generators (strings) and the minimal lt_ideal "
          "as (i, j) exponent pairs.");

    m.def(
        "length_simple",
        [](long long k, long long m, long long n, std::uint32_t p) {
            return length_simple(k, m, n, field_from(p)).value;
        },
        py::arg("k"), py::arg("m"), py::arg("n"), py::arg("p") = 0,
        "Colength of (x^m, y^n, (x+y)^k) by the closed staircase formula");

    m.def(
        "length_general",
        [](long long M, long long K, long long a, long long b, long long c,
           std::optional<long long> N, std::uint32_t p) {
            IdealSpec spec{M, N.value_or(M), K, a, b, c, field_from(p)};
            return length_general(spec).value;
        },
        py::arg("M"), py::arg("K"), py::arg("a"), py::arg("b"), py::arg("c"),
        py::arg("N") = py::none(), py::arg("p") = 0,
        "Colength of (x^M, y^N, (x^a y^b (x+y)^c)^K) by the closed formula (needs N == M)");

    m.def(
        "length_wlp",
        [](long long k, long long m, long long n, std::uint32_t p) {
            if (!is_prime_u32(p)) throw DomainError(std::to_string(p) + " is not prime");
            return length_wlp(k, m, n, p).value;
        },
        py::arg("k"), py::arg("m"), py::arg("n"), py::arg("p"),
        "Colength of (x^m, y^n, (x+y)^k) in characteristic p by the syzygy-gap route");

    m.def("length_rank", &rank_length, py::arg("M"), py::arg("N"), py::arg("K"), py::arg("a"),
          py::arg("b"), py::arg("c"), py::arg("p") = 0, py::arg("u") = 1, py::arg("v") = 1,
          "Colength of (x^M, y^N, (x^a y^b (x^u + y^v)^c)^K) by the Macaulay rank oracle");

    m.def(
        "fsig_at_p",
        [](long long a, long long b, long long c, std::uint32_t p, long long r) {
            return fraction(fsig_at_p(a, b, c, p, r));
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("p"), py::arg("r"),
        "F-signature value psi_p(r/p) of the pair (A, x^a y^b (x+y)^c); refuses r at or "
        "beyond the threshold");

    m.def(
        "lct",
        [](long long a, long long b, long long c, long long u, long long v) {
            ThresholdInfo info = (u == 1 && v == 1) ? lct_simple(a, b, c)
                                                    : lct_general(a, b, c, u, v);
            return fraction(info.lambda.value());
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("u") = 1, py::arg("v") = 1,
        "Log canonical threshold of the pair (A^2, {x^a y^b (x^u + y^v)^c = 0}); "
        "finite whenever some exponent is positive (the all-zero pair is refused)");

    m.def("limit_fsig", &limit_function, py::arg("a"), py::arg("b"), py::arg("c"),
          py::arg("u") = 1, py::arg("v") = 1,
          "Limit F-signature function psi(t) for x^a y^b (x^u + y^v)^c as a PiecewiseFn");

    m.def(
        "nvol",
        [](long long a, long long b, long long c, py::handle t) {
            auto e = sorted_desc(a, b, c);
            return fraction(nvol_simple(e[0], e[1], e[2], rational_from(t, "t")));
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("t"),
        "Normalized volume of the pair (A^2, t * {x^a y^b (x+y)^c = 0})");

    m.def(
        "corollary_b_check",
        [](long long a, long long b, long long c, py::handle t) {
            auto e = sorted_desc(a, b, c);
            return corollary_b_check(e[0], e[1], e[2], rational_from(t, "t"));
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("t"),
        "True iff nvol(a,b,c;t)/4 equals the limit F-signature at t, exactly");

    m.def("find_nonstabilization_witness", &witness_dict, py::arg("max_p") = 101,
          "Smallest (p, odd r) with psi_p(r/p) != psi(r/p) for a=b=c=1, as a dict "
          "(None if no witness up to max_p)");

    m.def("sweep", &sweep_dict, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("u") = 1,
          py::arg("v") = 1, py::arg("primes") = std::vector<std::uint32_t>{31, 37, 41, 43, 47},
          py::arg("grid") = 10, py::arg("t_min") = py::none(), py::arg("t_max") = py::none(),
          "Tabulate psi_p(floor(t p)/p) against the limit psi over a prime list");

    m.def("verify", &verify_tuple, py::arg("suite") = "all", py::arg("max_size") = 6,
          py::arg("primes") = std::vector<std::uint32_t>{31, 101},
          "Run a verification suite; returns (all_passed, report_text)");
}
