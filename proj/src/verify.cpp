#include "fsig/verify.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <iterator>
#include <optional>
#include <utility>

#include "fsig/closed_basis.hpp"
#include "fsig/fsig.hpp"
#include "fsig/lengths.hpp"
#include "fsig/oracle.hpp"
#include "fsig/prime_field.hpp"

namespace fsig {

namespace {

// Thrown by check bodies; carries the first counterexample.
struct Failure {
    std::string detail;
};

void run_check(VerifyReport& report, std::string name,
               const std::function<void()>& body) {
    CheckResult result;
    result.name = std::move(name);
    try {
        body();
        result.passed = true;
    } catch (const Failure& f) {
        result.detail = f.detail;
    } catch (const std::exception& e) {
        result.detail = std::string("unexpected exception: ") + e.what();
    }
    report.checks.push_back(std::move(result));
}

std::string spec_str(const IdealSpec& spec) {
    return "M=" + std::to_string(spec.M) + " N=" + std::to_string(spec.N) +
           " K=" + std::to_string(spec.K) + " a=" + std::to_string(spec.a) +
           " b=" + std::to_string(spec.b) + " c=" + std::to_string(spec.c) +
           " field=" + spec.field.name();
}

std::string lt_str(const std::vector<Monomial>& lts) {
    std::string out;
    for (const Monomial& m : lts) {
        if (!out.empty()) out += ", ";
        out += "x^" + std::to_string(m.i) + " y^" + std::to_string(m.j);
    }
    return out;
}

std::vector<FieldSpec> fields_for(const VerifyOptions& options) {
    std::vector<FieldSpec> fields{FieldSpec{}};
    for (std::uint32_t p : options.primes) {
        FieldSpec f;
        f.p = p;
        fields.push_back(f);
    }
    return fields;
}

// ---------------------------------------------------------------------------
// Basis checks
// ---------------------------------------------------------------------------

template <typename F>
void check_basis_matches(const F& field, const IdealSpec& spec) {
    std::optional<GroebnerBasis<F>> closed;
    try {
        closed = closed_groebner(field, spec);
    } catch (const HypothesisViolation&) {
        return;  // legitimately outside the closed formula's hypotheses
    }
    std::vector<Poly<F>> gens{
        Poly<F>::monomial(field, mono(checked_exp(spec.M), 0), field.one()),
        Poly<F>::monomial(field, mono(0, checked_exp(spec.N)), field.one()),
        power_xy(field, spec.a, spec.b, spec.c, 1, 1, spec.K)};
    GroebnerBasis<F> reference = buchberger(field, gens);
    if (closed->lt_ideal != reference.lt_ideal)
        throw Failure{spec_str(spec) + ": leading-term ideals differ: closed {" +
                      lt_str(closed->lt_ideal) + "} vs Buchberger {" +
                      lt_str(reference.lt_ideal) + "}"};
}

void check_basis_spec(const IdealSpec& spec) {
    if (spec.field.is_rational())
        check_basis_matches(Rationals{}, spec);
    else
        check_basis_matches(PrimeField(spec.field.p), spec);
}

template <typename F>
void check_buchberger_certified(const F& field, const IdealSpec& spec) {
    std::vector<Poly<F>> gens{
        Poly<F>::monomial(field, mono(checked_exp(spec.M), 0), field.one()),
        Poly<F>::monomial(field, mono(0, checked_exp(spec.N)), field.one()),
        power_xy(field, spec.a, spec.b, spec.c, 1, 1, spec.K)};
    GroebnerBasis<F> basis = buchberger(field, gens);
    GroebnerCertificate cert = is_groebner(field, std::span<const Poly<F>>(
                                                      basis.generators));
    if (!cert.is_basis)
        throw Failure{spec_str(spec) + ": Buchberger output fails the "
                      "S-polynomial certificate"};
    for (const Poly<F>& g : gens)
        if (!normal_form(g, std::span<const Poly<F>>(basis.generators))
                 .is_zero())
            throw Failure{spec_str(spec) +
                          ": an input generator does not reduce to zero"};
}

// ---------------------------------------------------------------------------
// Length checks
// ---------------------------------------------------------------------------

long long oracle_length(const FieldSpec& field, long long M, long long N,
                        long long a, long long b, long long c, long long K) {
    if (field.is_rational()) {
        Rationals F;
        return length_rank(F, M, N, power_xy(F, a, b, c, 1, 1, 1), K);
    }
    PrimeField F(field.p);
    return length_rank(F, M, N, power_xy(F, a, b, c, 1, 1, 1), K);
}

// ---------------------------------------------------------------------------
// F-signature helpers
// ---------------------------------------------------------------------------

BigRational psi_p_rank(const FieldSpec& field, long long a, long long b,
                       long long c, long long u, long long v, long long r) {
    PrimeField F(field.p);
    long long p = field.p;
    long long len = length_rank(F, p, p, power_xy(F, a, b, c, u, v, 1), r);
    return 1 - make_rational(to_bigint(len), to_bigint(p) * to_bigint(p));
}

BigRational q(long long num, long long den) {
    return make_rational(to_bigint(num), to_bigint(den));
}

}  // namespace

VerifyReport verify_basis(const VerifyOptions& options) {
    VerifyReport report;
    const long long ms = options.max_size;
    const std::vector<FieldSpec> fields = fields_for(options);

    run_check(report, "closed basis matches Buchberger on simple pairs", [&] {
        for (const FieldSpec& field : fields)
            for (long long k = 1; k <= ms; ++k)
                for (long long m = 1; m <= ms; ++m)
                    for (long long n = 1; n <= ms; ++n)
                        check_basis_spec(IdealSpec{m, n, 1, 0, 0, k, field});
    });

    run_check(report, "closed basis matches Buchberger on general pairs", [&] {
        for (const FieldSpec& field : fields)
            for (long long M = 1; M <= ms; ++M)
                for (long long K = 1; K <= 3; ++K)
                    for (long long a = 0; a <= 2; ++a)
                        for (long long b = 0; b <= 2; ++b)
                            for (long long c = 0; c <= 2; ++c)
                                check_basis_spec(
                                    IdealSpec{M, M, K, a, b, c, field});
    });

    run_check(report, "Buchberger output passes the S-pair certificate", [&] {
        const long long cap = std::min<long long>(ms, 4);
        for (const FieldSpec& field : fields)
            for (long long k = 1; k <= cap; ++k)
                for (long long m = 1; m <= cap; ++m)
                    for (long long n = 1; n <= cap; ++n) {
                        IdealSpec spec{m, n, 1, 0, 0, k, field};
                        if (field.is_rational())
                            check_buchberger_certified(Rationals{}, spec);
                        else
                            check_buchberger_certified(PrimeField(field.p),
                                                       spec);
                    }
    });

    return report;
}

VerifyReport verify_length(const VerifyOptions& options) {
    VerifyReport report;
    const long long ms = options.max_size;

    run_check(report, "length_simple, length_wlp and the rank oracle agree",
              [&] {
                  for (std::uint32_t p : options.primes) {
                      FieldSpec field;
                      field.p = p;
                      for (long long k = 0; k <= ms; ++k)
                          for (long long m = 1; m <= ms; ++m)
                              for (long long n = 1; n <= ms; ++n) {
                                  LengthResult simple, wlp;
                                  try {
                                      simple = length_simple(k, m, n, field);
                                      wlp = length_wlp(k, m, n, p);
                                  } catch (const HypothesisViolation&) {
                                      continue;
                                  }
                                  long long rank =
                                      oracle_length(field, m, n, 0, 0, k, 1);
                                  if (simple.value != wlp.value ||
                                      simple.value != rank)
                                      throw Failure{
                                          "k=" + std::to_string(k) + " m=" +
                                          std::to_string(m) + " n=" +
                                          std::to_string(n) + " p=" +
                                          std::to_string(p) + ": simple=" +
                                          std::to_string(simple.value) +
                                          " wlp=" + std::to_string(wlp.value) +
                                          " oracle=" + std::to_string(rank)};
                              }
                  }
              });

    run_check(report, "length_simple matches the rank oracle over QQ", [&] {
        const FieldSpec field;
        for (long long k = 0; k <= ms; ++k)
            for (long long m = 1; m <= ms; ++m)
                for (long long n = 1; n <= ms; ++n) {
                    long long simple = length_simple(k, m, n, field).value;
                    long long rank = oracle_length(field, m, n, 0, 0, k, 1);
                    if (simple != rank)
                        throw Failure{"k=" + std::to_string(k) + " m=" +
                                      std::to_string(m) + " n=" +
                                      std::to_string(n) + " field=QQ: simple=" +
                                      std::to_string(simple) + " oracle=" +
                                      std::to_string(rank)};
                }
    });

    run_check(report, "length_general matches the rank oracle", [&] {
        for (const FieldSpec& field : fields_for(options))
            for (long long M = 1; M <= ms; ++M)
                for (long long K = 1; K <= 3; ++K)
                    for (long long a = 0; a <= 2; ++a)
                        for (long long b = 0; b <= 2; ++b)
                            for (long long c = 0; c <= 2; ++c) {
                                IdealSpec spec{M, M, K, a, b, c, field};
                                LengthResult formula;
                                try {
                                    formula = length_general(spec);
                                } catch (const HypothesisViolation&) {
                                    continue;
                                }
                                long long rank =
                                    oracle_length(field, M, M, a, b, c, K);
                                if (formula.value != rank)
                                    throw Failure{
                                        spec_str(spec) + ": formula=" +
                                        std::to_string(formula.value) +
                                        " oracle=" + std::to_string(rank)};
                            }
    });

    run_check(report, "length anchors", [&] {
        FieldSpec f31;
        f31.p = 31;
        if (length_simple(3, 2, 2, f31).value != 4)
            throw Failure{"length_simple(3,2,2) over F_31 != 4"};
        if (length_wlp(3, 2, 2, 31).value != 4)
            throw Failure{"length_wlp(3,2,2,31) != 4"};
        if (length_general(IdealSpec{5, 5, 1, 1, 1, 1, FieldSpec{}}).value !=
            13)
            throw Failure{"length_general(M=5,K=1,a=b=c=1) over QQ != 13"};
    });

    return report;
}

VerifyReport verify_fsig(const VerifyOptions& options) {
    VerifyReport report;

    run_check(report, "fsig_at_p equals 1 - colength/p^2 (formula route)", [&] {
        for (std::uint32_t p : options.primes) {
            FieldSpec field;
            field.p = p;
            for (long long a = 1; a <= 3; ++a)
                for (long long b = 0; b <= a; ++b)
                    for (long long c = 0; c <= b; ++c) {
                        const long long S = a + b + c;
                        for (long long r = 1; r * a < p && r * S < 2 * p; ++r) {
                            IdealSpec spec{p, p, r, a, b, c, field};
                            BigRational expect =
                                1 - q(length_general(spec).value,
                                      static_cast<long long>(p) * p);
                            if (fsig_at_p(a, b, c, p, r) != expect)
                                throw Failure{
                                    spec_str(spec) +
                                    ": fsig_at_p != 1 - length_general/p^2"};
                        }
                    }
        }
    });

    run_check(report, "fsig_at_p equals 1 - colength/p^2 (rank oracle)", [&] {
        for (std::uint32_t p : options.primes) {
            FieldSpec field;
            field.p = p;
            for (long long a = 1; a <= 2; ++a)
                for (long long b = 0; b <= a; ++b)
                    for (long long c = 0; c <= b; ++c) {
                        const long long S = a + b + c;
                        long long rmax = 0;
                        while ((rmax + 1) * a < p && (rmax + 1) * S < 2 * p)
                            ++rmax;
                        std::vector<long long> rs;
                        if (p <= 31)
                            for (long long r = 1; r <= rmax; ++r)
                                rs.push_back(r);
                        else
                            rs = {1, rmax / 2, rmax};  // keep big boxes rare
                        for (long long r : rs) {
                            if (r < 1) continue;
                            BigRational oracle =
                                psi_p_rank(field, a, b, c, 1, 1, r);
                            if (fsig_at_p(a, b, c, p, r) != oracle)
                                throw Failure{
                                    "a=" + std::to_string(a) + " b=" +
                                    std::to_string(b) + " c=" +
                                    std::to_string(c) + " p=" +
                                    std::to_string(p) + " r=" +
                                    std::to_string(r) +
                                    ": fsig_at_p disagrees with the rank "
                                    "oracle"};
                        }
                    }
        }
    });

    run_check(report,
              "limit function reduces to the sorted simple form at u = v = 1",
              [&] {
                  for (long long a = 0; a <= 3; ++a)
                      for (long long b = 0; b <= 3; ++b)
                          for (long long c = 1; c <= 3; ++c) {
                              std::array<long long, 3> s{a, b, c};
                              std::sort(s.begin(), s.end(), std::greater<>());
                              PiecewiseFn general =
                                  limit_fsig_general(a, b, c, 1, 1);
                              PiecewiseFn simple =
                                  limit_fsig_simple(s[0], s[1], s[2]);
                              if (general.lambda() != simple.lambda())
                                  throw Failure{
                                      "a=" + std::to_string(a) + " b=" +
                                      std::to_string(b) + " c=" +
                                      std::to_string(c) +
                                      ": thresholds differ"};
                              for (int g = 0; g <= 20; ++g) {
                                  BigRational t =
                                      general.lambda() * g / 20;
                                  if (general.eval(t) != simple.eval(t))
                                      throw Failure{
                                          "a=" + std::to_string(a) + " b=" +
                                          std::to_string(b) + " c=" +
                                          std::to_string(c) + " t=" +
                                          to_string(t) + ": values differ"};
                              }
                          }
              });

    run_check(report, "limit function worked example (1,0,1,2,3)", [&] {
        PiecewiseFn psi = limit_fsig_general(1, 0, 1, 2, 3);
        const std::vector<BigRational> expect{q(0, 1), q(1, 9), q(5, 9)};
        if (psi.breakpoints() != expect)
            throw Failure{"breakpoints are not {0, 1/9, 5/9}: got " +
                          psi.to_json_string()};
        if (psi.eval(q(1, 9)) != q(2, 3))
            throw Failure{"psi(1/9) != 2/3: got " + to_string(psi.eval(q(1, 9)))};
        if (psi.eval(q(1, 3)) != q(1, 6))
            throw Failure{"psi(1/3) != 1/6: got " + to_string(psi.eval(q(1, 3)))};
    });

    run_check(report, "nvol equals 4 times the limit F-signature", [&] {
        for (long long a = 1; a <= 4; ++a)
            for (long long b = 0; b <= a; ++b)
                for (long long c = 0; c <= b; ++c)
                    for (int g = 0; g <= 20; ++g) {
                        if (!corollary_b_check(a, b, c, q(g, 20)))
                            throw Failure{"a=" + std::to_string(a) + " b=" +
                                          std::to_string(b) + " c=" +
                                          std::to_string(c) + " t=" +
                                          to_string(q(g, 20)) +
                                          ": nvol != 4 psi"};
                    }
    });

    run_check(report, "psi_p tracks the limit within 10/p (closed route)", [&] {
        const std::array<std::array<long long, 3>, 3> specs{
            {{1, 1, 1}, {2, 1, 0}, {3, 2, 2}}};
        for (const auto& s : specs) {
            PiecewiseFn psi = limit_fsig_simple(s[0], s[1], s[2]);
            for (std::uint32_t p : options.primes)
                for (int g = 1; g <= 10; ++g) {
                    BigRational t = psi.lambda() * g / 11;
                    BigInt rn = t.get_num() * to_bigint(p) / t.get_den();
                    long long r = rn.get_si();
                    BigRational diff =
                        fsig_at_p(s[0], s[1], s[2], p, r) - psi.eval(t);
                    if (diff < 0) diff = -diff;
                    if (diff > q(10, p))
                        throw Failure{
                            "a=" + std::to_string(s[0]) + " b=" +
                            std::to_string(s[1]) + " c=" +
                            std::to_string(s[2]) + " p=" + std::to_string(p) +
                            " t=" + to_string(t) + ": |psi_p - psi| = " +
                            to_string(diff) + " > 10/p"};
                }
        }
    });

    run_check(report, "psi_p tracks the limit within 10/p (oracle route)", [&] {
        std::vector<std::uint32_t> primes = options.primes;
        std::sort(primes.begin(), primes.end());
        if (primes.size() > 2) primes.resize(2);  // rank boxes grow as p^2
        const long long a = 1, b = 0, c = 1, u = 2, v = 3;
        PiecewiseFn psi = limit_fsig_general(a, b, c, u, v);
        for (std::uint32_t p : primes) {
            FieldSpec field;
            field.p = p;
            for (int g = 1; g <= 6; ++g) {
                BigRational t = psi.lambda() * g / 7;
                BigInt rn = t.get_num() * to_bigint(p) / t.get_den();
                long long r = rn.get_si();
                BigRational diff = psi_p_rank(field, a, b, c, u, v, r) -
                                   psi.eval(t);
                if (diff < 0) diff = -diff;
                if (diff > q(10, p))
                    throw Failure{"pair (1,0,1,2,3) p=" + std::to_string(p) +
                                  " t=" + to_string(t) +
                                  ": |psi_p - psi| = " + to_string(diff) +
                                  " > 10/p"};
            }
        }
    });

    run_check(report, "psi_p vanishes at and beyond the threshold", [&] {
        const std::uint32_t p = 7;
        FieldSpec field;
        field.p = p;
        const std::array<std::array<long long, 3>, 3> specs{
            {{1, 1, 1}, {2, 1, 0}, {3, 1, 1}}};
        for (const auto& s : specs) {
            const long long S = s[0] + s[1] + s[2];
            for (long long r = 1; r <= p; ++r) {
                if (r * s[0] < p && r * S < 2 * p) continue;  // below threshold
                BigRational psi = psi_p_rank(field, s[0], s[1], s[2], 1, 1, r);
                if (psi != 0)
                    throw Failure{"a=" + std::to_string(s[0]) + " b=" +
                                  std::to_string(s[1]) + " c=" +
                                  std::to_string(s[2]) + " r=" +
                                  std::to_string(r) +
                                  ": psi_7 beyond the threshold is " +
                                  to_string(psi) + ", expected 0"};
            }
        }
    });

    run_check(report, "non-stabilization witness exists", [&] {
        NonstabilizationWitness w = find_nonstabilization_witness(101);
        if (!w.found)
            throw Failure{"no characteristic p <= 101 with psi_p(r/p) != "
                          "psi(r/p) for a = b = c = 1"};
        if (w.r % 2 != 1 || w.psi_p == w.psi_limit ||
            w.psi_p != fsig_at_p(1, 1, 1, w.p, w.r))
            throw Failure{"witness p=" + std::to_string(w.p) + " r=" +
                          std::to_string(w.r) + " fails recomputation"};
    });

    return report;
}

VerifyReport verify_all(const VerifyOptions& options) {
    VerifyReport report = verify_basis(options);
    VerifyReport length = verify_length(options);
    VerifyReport fsig = verify_fsig(options);
    report.checks.insert(report.checks.end(),
                         std::make_move_iterator(length.checks.begin()),
                         std::make_move_iterator(length.checks.end()));
    report.checks.insert(report.checks.end(),
                         std::make_move_iterator(fsig.checks.begin()),
                         std::make_move_iterator(fsig.checks.end()));
    return report;
}

std::string render_report(const VerifyReport& report) {
    std::string out;
    std::size_t passed = 0;
    for (const CheckResult& check : report.checks) {
        if (check.passed) {
            ++passed;
            out += "PASS " + check.name + "\n";
        } else {
            out += "FAIL " + check.name + ": " + check.detail + "\n";
        }
    }
    out += std::to_string(passed) + "/" + std::to_string(report.checks.size()) +
           " checks passed\n";
    return out;
}

}  // namespace fsig
