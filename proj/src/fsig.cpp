#include "fsig/fsig.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <cstddef>
#include <initializer_list>
#include <utility>

#include "fsig/errors.hpp"
#include "fsig/monomial.hpp"
#include "fsig/mutation.hpp"
#include "fsig/prime_field.hpp"

namespace fsig {

namespace {

void check_range(std::initializer_list<long long> values) {
    for (long long v : values) {
        if (v < 0 || v > kMaxExponent)
            throw DomainError("parameter " + std::to_string(v) +
                              " outside [0, " + std::to_string(kMaxExponent) +
                              "]");
    }
}

BigRational rat(long long num, long long den) {
    return make_rational(to_bigint(num), to_bigint(den));
}

}  // namespace

// ---------------------------------------------------------------------------
// Thresholds
// ---------------------------------------------------------------------------

ThresholdInfo lct_simple(long long a, long long b, long long c) {
    check_range({a, b, c});
    if (a < b || b < c) throw DomainError("lct_simple needs a >= b >= c >= 0");
    if (a == 0)
        throw DomainError("lct_simple: exponents must not all be zero");
    ExtRational inv_a = ExtRational::inverse_of(to_bigint(a));
    ExtRational inv_b = ExtRational::inverse_of(to_bigint(b));
    ExtRational inv_c = ExtRational::inverse_of(to_bigint(c));
    ExtRational lambda_0 = ExtRational::finite(rat(2, a + b + c));
    ExtRational lambda = min(min(inv_a, inv_b), min(inv_c, lambda_0));
    return ThresholdInfo{lambda, lambda_0, inv_a, inv_b, inv_c};
}

ThresholdInfo lct_general(long long a, long long b, long long c, long long u,
                          long long v) {
    check_range({a, b, c, u, v});
    if (c < 1 || u < 1 || v < 1)
        throw DomainError("lct_general needs c, u, v >= 1");
    ExtRational inv_a = ExtRational::inverse_of(to_bigint(a));
    ExtRational inv_b = ExtRational::inverse_of(to_bigint(b));
    ExtRational inv_c = ExtRational::inverse_of(to_bigint(c));
    BigInt weight = to_bigint(a) * to_bigint(v) + to_bigint(b) * to_bigint(u) +
                    to_bigint(c) * to_bigint(u) * to_bigint(v);
    ExtRational lambda_0 =
        ExtRational::finite(make_rational(to_bigint(u + v), weight));
    ExtRational lambda = min(min(inv_a, inv_b), min(inv_c, lambda_0));
    return ThresholdInfo{lambda, lambda_0, inv_a, inv_b, inv_c};
}

// ---------------------------------------------------------------------------
// PiecewiseFn
// ---------------------------------------------------------------------------

PiecewiseFn PiecewiseFn::make(std::vector<BigRational> breakpoints,
                              std::vector<std::array<BigRational, 3>> pieces) {
    if (breakpoints.size() < 2)
        throw Error("piecewise function: need at least breakpoints 0 and lambda");
    if (pieces.size() + 1 != breakpoints.size())
        throw Error("piecewise function: " + std::to_string(pieces.size()) +
                    " pieces do not fit " + std::to_string(breakpoints.size()) +
                    " breakpoints");
    if (breakpoints.front() != 0)
        throw Error("piecewise function: domain must start at 0, not " +
                    to_string(breakpoints.front()));
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        if (!(breakpoints[i] < breakpoints[i + 1]))
            throw Error("piecewise function: breakpoints not increasing at " +
                        to_string(breakpoints[i + 1]));
    }

    PiecewiseFn fn;
    fn.breakpoints_ = std::move(breakpoints);
    fn.pieces_ = std::move(pieces);

    auto piece_at = [&fn](std::size_t idx, const BigRational& t) -> BigRational {
        const auto& c = fn.pieces_[idx];
        return c[0] + t * (c[1] + t * c[2]);
    };

    if (piece_at(0, BigRational(0)) != 1)
        throw Error("piecewise function: value at 0 is " +
                    to_string(piece_at(0, BigRational(0))) + ", expected 1");
    for (std::size_t i = 1; i + 1 < fn.breakpoints_.size(); ++i) {
        if (piece_at(i - 1, fn.breakpoints_[i]) != piece_at(i, fn.breakpoints_[i]))
            throw Error("piecewise function: discontinuous at t = " +
                        to_string(fn.breakpoints_[i]));
    }
    if (piece_at(fn.pieces_.size() - 1, fn.lambda()) != 0)
        throw Error("piecewise function: value at lambda = " +
                    to_string(fn.lambda()) + " is " +
                    to_string(piece_at(fn.pieces_.size() - 1, fn.lambda())) +
                    ", expected 0");

    // Shape check on a sample grid: psi must be non-increasing and convex.
    // With 102 grid points this tests 100 midpoint triples.
    std::vector<BigRational> samples;
    samples.reserve(102);
    for (int s = 0; s <= 101; ++s)
        samples.push_back(fn.eval(fn.lambda() * s / 101));
    for (int s = 0; s <= 100; ++s) {
        if (samples[s] < samples[s + 1])
            throw Error("piecewise function: increasing near t = " +
                        to_string(fn.lambda() * (s + 1) / 101));
    }
    for (int s = 1; s <= 100; ++s) {
        if (2 * samples[s] > samples[s - 1] + samples[s + 1])
            throw Error("piecewise function: not convex near t = " +
                        to_string(fn.lambda() * s / 101));
    }
    return fn;
}

BigRational PiecewiseFn::eval(const BigRational& t) const {
    if (t < 0) throw DomainError("piecewise function: t must be >= 0");
    if (t >= lambda()) return BigRational(0);
    std::size_t idx = 0;
    while (idx + 2 < breakpoints_.size() && t >= breakpoints_[idx + 1]) ++idx;
    const auto& c = pieces_[idx];
    return c[0] + t * (c[1] + t * c[2]);
}

std::string PiecewiseFn::to_json_string(int indent) const {
    nlohmann::ordered_json doc;
    doc["breakpoints"] = nlohmann::ordered_json::array();
    for (const auto& b : breakpoints_) doc["breakpoints"].push_back(to_string(b));
    doc["pieces"] = nlohmann::ordered_json::array();
    for (const auto& c : pieces_) {
        nlohmann::ordered_json piece;
        piece["coeffs"] = nlohmann::ordered_json::array(
            {to_string(c[0]), to_string(c[1]), to_string(c[2])});
        doc["pieces"].push_back(std::move(piece));
    }
    doc["lambda"] = to_string(lambda());
    return doc.dump(indent);
}

// ---------------------------------------------------------------------------
// F-signature values
// ---------------------------------------------------------------------------

BigRational fsig_monomial(long long a, long long b, const BigRational& t) {
    check_range({a, b});
    if (t < 0) throw DomainError("fsig_monomial: t must be >= 0");
    ExtRational threshold = min(ExtRational::inverse_of(to_bigint(a)),
                                ExtRational::inverse_of(to_bigint(b)));
    if (!(ExtRational::finite(t) < threshold)) return BigRational(0);
    return (1 - to_bigint(a) * t) * (1 - to_bigint(b) * t);
}

BigRational fsig_at_p(long long a, long long b, long long c, std::uint32_t p,
                      long long r) {
    check_range({a, b, c});
    if (!is_prime_u32(p))
        throw DomainError("fsig_at_p: p = " + std::to_string(p) +
                          " is not prime");
    if (r < 0) throw DomainError("fsig_at_p: r must be >= 0");
    // The pair at cutoff exponent p is symmetric in the three linear factors,
    // so sorting the exponents is harmless and the formula assumes it.
    std::array<long long, 3> e{a, b, c};
    std::sort(e.begin(), e.end(), std::greater<>());
    a = e[0], b = e[1], c = e[2];
    if (r == 0) return BigRational(1);

    const long long S = a + b + c;
    const BigInt P = to_bigint(p);
    const BigInt R = to_bigint(r);
    if (R * to_bigint(a) >= P || R * to_bigint(S) >= 2 * P)
        throw HypothesisViolation(
            "fsig_at_p: r = " + std::to_string(r) + " with p = " +
            std::to_string(p) + " is at or beyond the threshold "
            "min{1/a, 2/(a+b+c)} for (a, b, c) = (" + std::to_string(a) + ", " +
            std::to_string(b) + ", " + std::to_string(c) + ")");

    const BigInt p2 = P * P;
    BigInt num = p2 - to_bigint(S) * R * P;
    if (a >= b + c) {
        num += to_bigint(a) * to_bigint(b + c) * R * R;
    } else {
        BigInt sr = to_bigint(S) * R;
        num += sr * sr / 4;  // exact floor: all quantities non-negative
    }
    return make_rational(num, p2);
}

// ---------------------------------------------------------------------------
// Limit F-signature functions
// ---------------------------------------------------------------------------

PiecewiseFn limit_fsig_simple(long long a, long long b, long long c) {
    check_range({a, b, c});
    if (a < b || b < c)
        throw DomainError("limit_fsig_simple needs a >= b >= c >= 0");
    if (a == 0)
        throw DomainError("limit_fsig_simple: exponents must not all be zero");
    const long long S = a + b + c;
    BigRational inv_a = rat(1, a);
    BigRational lambda_0 = rat(2, S);
    BigRational lambda = inv_a < lambda_0 ? inv_a : lambda_0;

    std::array<BigRational, 3> coeffs{BigRational(1), -rat(S, 1),
                                      BigRational(0)};
    if (a >= b + c) {
        // (1 - a t)(1 - (b + c) t)
        coeffs[2] = BigRational(to_bigint(a) * to_bigint(b + c));
    } else {
        // (1 - (a + b + c) t / 2)^2
        coeffs[2] = rat(S * S, 4);
    }
    return PiecewiseFn::make({BigRational(0), lambda}, {coeffs});
}

PiecewiseFn limit_fsig_general(long long a, long long b, long long c,
                               long long u, long long v) {
    check_range({a, b, c, u, v});
    if (c < 1 || u < 1 || v < 1)
        throw DomainError("limit_fsig_general needs c, u, v >= 1");

    const BigInt A = to_bigint(a), B = to_bigint(b), C = to_bigint(c);
    const BigInt U = to_bigint(u), V = to_bigint(v);
    const BigInt weight = A * V + B * U + C * U * V;  // a v + b u + c u v
    const BigRational lambda = lct_general(a, b, c, u, v).lambda.value();

    // Case i applies where t * X_i >= Y_i; the first holding case wins.
    const BigInt X1 = A * V - B * U - C * U * V, Y1 = V - U;
    const BigInt X2 = B * U - A * V - C * U * V, Y2 = U - V;
    const BigInt X3 = C * U * V - A * V - B * U, Y3 = 2 * U * V - U - V;

    // Candidate breakpoints: the boundary-line roots that land inside
    // (0, lambda), plus the endpoints.
    std::vector<BigRational> bps{BigRational(0), lambda};
    const std::array<std::pair<BigInt, BigInt>, 3> lines{
        {{X1, Y1}, {X2, Y2}, {X3, Y3}}};
    for (const auto& [X, Y] : lines) {
        if (X == 0) continue;
        BigRational root = make_rational(Y, X);
        if (root > 0 && root < lambda) bps.push_back(root);
    }
    std::sort(bps.begin(), bps.end());
    bps.erase(std::unique(bps.begin(), bps.end()), bps.end());

    auto coeffs_for = [&](int which) -> std::array<BigRational, 3> {
        switch (which) {
            case 1: {  // (1 - a t)(1 - (b + c v) t)
                BigInt s = A + B + C * V;
                BigInt q = A * (B + C * V);
                return {BigRational(1), -BigRational(s), BigRational(q)};
            }
            case 2: {  // (1 - b t)(1 - (a + c u) t)
                BigInt s = B + A + C * U;
                BigInt q = B * (A + C * U);
                return {BigRational(1), -BigRational(s), BigRational(q)};
            }
            case 3: {  // (1 - c t)(u + v - u v - (a v + b u) t)
                BigInt e = U + V - U * V;
                BigInt m = A * V + B * U;
                BigInt s = m + C * e;
                BigInt q = C * m;
                return {BigRational(e), -BigRational(s), BigRational(q)};
            }
            default: {  // (u + v - (a v + b u + c u v) t)^2 / (4 u v)
                BigInt den = 4 * U * V;
                BigInt s = U + V;
                return {make_rational(s * s, den),
                        make_rational(-2 * s * weight, den),
                        make_rational(weight * weight, den)};
            }
        }
    };

    // The conditions are linear in t, so each is constant on every candidate
    // interval; test them at the midpoint.  Neighbouring intervals whose case
    // formulas expand to the same polynomial are merged — a breakpoint only
    // survives where the function actually changes.
    std::vector<BigRational> kept{bps.front()};
    std::vector<std::array<BigRational, 3>> pieces;
    for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
        BigRational mid = (bps[i] + bps[i + 1]) / 2;
        bool c1 = mid * X1 >= BigRational(Y1);
        bool c2 = mid * X2 >= BigRational(Y2);
        bool c3 = mid * X3 >= BigRational(Y3);
        if (mutation_active(MutationSite::LimitGeneral1)) c1 = !c1;
        if (mutation_active(MutationSite::LimitGeneral2)) c2 = !c2;
        if (mutation_active(MutationSite::LimitGeneral3)) c3 = !c3;
        std::array<BigRational, 3> coeffs =
            coeffs_for(c1 ? 1 : c2 ? 2 : c3 ? 3 : 4);
        if (!pieces.empty() && coeffs == pieces.back()) {
            kept.back() = bps[i + 1];
        } else {
            pieces.push_back(std::move(coeffs));
            kept.push_back(bps[i + 1]);
        }
    }
    return PiecewiseFn::make(std::move(kept), std::move(pieces));
}

BigRational limit_fsig_rational_exponents(const BigRational& r1,
                                          const BigRational& r2,
                                          const BigRational& r3) {
    if (!(r1 >= r2 && r2 >= r3 && r3 > 0))
        throw DomainError(
            "limit_fsig_rational_exponents needs r1 >= r2 >= r3 > 0");
    BigRational sum = r1 + r2 + r3;
    if (r1 >= 1 || sum >= 2) return BigRational(0);
    if (r1 >= r2 + r3) return (1 - r1) * (1 - r2 - r3);
    BigRational h = 1 - sum / 2;
    return h * h;
}

// ---------------------------------------------------------------------------
// Normalized volumes
// ---------------------------------------------------------------------------

BigRational nvol_simple(long long a, long long b, long long c,
                        const BigRational& t) {
    check_range({a, b, c});
    if (a < b || b < c) throw DomainError("nvol_simple needs a >= b >= c >= 0");
    if (t < 0) throw DomainError("nvol_simple: t must be >= 0");
    if (a > 0) {  // a = b = c = 0 has infinite threshold
        const long long S = a + b + c;
        BigRational inv_a = rat(1, a);
        BigRational lambda_0 = rat(2, S);
        if (t >= (inv_a < lambda_0 ? inv_a : lambda_0)) return BigRational(0);
    }
    if (a >= b + c)
        return 4 * (1 - to_bigint(b + c) * t) * (1 - to_bigint(a) * t);
    BigRational s = 2 - to_bigint(a + b + c) * t;
    return s * s;
}

bool corollary_b_check(long long a, long long b, long long c,
                       const BigRational& t) {
    PiecewiseFn psi = limit_fsig_simple(a, b, c);
    return nvol_simple(a, b, c, t) == 4 * psi.eval(t);
}

// ---------------------------------------------------------------------------
// Non-stabilization of psi_p
// ---------------------------------------------------------------------------

NonstabilizationWitness find_nonstabilization_witness(std::uint32_t max_p) {
    PiecewiseFn psi = limit_fsig_simple(1, 1, 1);
    for (std::uint32_t p = 2; p <= max_p; ++p) {
        if (!is_prime_u32(p)) continue;
        // Valid sample points r/p < 2/3 = min{1/1, 2/3}.
        for (long long r = 1; 3 * r < 2 * static_cast<long long>(p); r += 2) {
            BigRational at_p = fsig_at_p(1, 1, 1, p, r);
            BigRational at_limit = psi.eval(rat(r, static_cast<long long>(p)));
            if (at_p != at_limit)
                return NonstabilizationWitness{true, p, r, at_p, at_limit};
        }
    }
    return NonstabilizationWitness{};
}

}  // namespace fsig
