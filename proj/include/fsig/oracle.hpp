#ifndef FSIG_ORACLE_HPP
#define FSIG_ORACLE_HPP

#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <span>
#include <tuple>
#include <vector>

#include "fsig/closed_basis.hpp"
#include "fsig/poly.hpp"

// Brute-force reference computations.  Everything here is deliberately
// straightforward — these routines are the ground truth the closed formulas
// are tested against, so simplicity beats speed.

namespace fsig {

template <typename F>
Poly<F> s_polynomial(const Poly<F>& a, const Poly<F>& b) {
    a.check_same_field(b);
    const F& field = a.field();
    const auto& la = a.leading_term();
    const auto& lb = b.leading_term();
    Monomial l = mono_lcm(la.mono, lb.mono);
    return a.mul_term(mono_quotient(l, la.mono), field.inv(la.coeff)) -
           b.mul_term(mono_quotient(l, lb.mono), field.inv(lb.coeff));
}

// Buchberger's algorithm with the normal selection strategy (smallest lcm in
// grlex first) and the coprime-leading-term criterion.  Appended generators
// are normalized to leading coefficient 1, so the run is deterministic.
template <typename F>
GroebnerBasis<F> buchberger(const F& field, std::vector<Poly<F>> gens) {
    std::vector<Poly<F>> basis;
    for (auto& g : gens)
        if (!g.is_zero()) basis.push_back(std::move(g));
    if (basis.empty()) throw DomainError("buchberger: no nonzero generators");

    struct SPair {
        Monomial lcm;
        std::size_t i, j;
    };
    struct Cmp {
        bool operator()(const SPair& a, const SPair& b) const {
            if (!(a.lcm == b.lcm)) return grlex_less(a.lcm, b.lcm);
            return std::tie(a.i, a.j) < std::tie(b.i, b.j);
        }
    };
    std::set<SPair, Cmp> queue;
    auto add_pairs = [&](std::size_t j) {
        const Monomial& ltj = basis[j].leading_term().mono;
        for (std::size_t i = 0; i < j; ++i) {
            const Monomial& lti = basis[i].leading_term().mono;
            Monomial l = mono_lcm(lti, ltj);
            if (l == mono_mul(lti, ltj)) continue;  // coprime: S-pair reduces to zero
            queue.insert(SPair{l, i, j});
        }
    };
    for (std::size_t j = 0; j < basis.size(); ++j) add_pairs(j);

    while (!queue.empty()) {
        SPair pair = *queue.begin();
        queue.erase(queue.begin());
        Poly<F> s = s_polynomial(basis[pair.i], basis[pair.j]);
        Poly<F> r = normal_form(s, std::span<const Poly<F>>(basis));
        if (r.is_zero()) continue;
        basis.push_back(r.scalar_mul(field.inv(r.leading_term().coeff)));
        add_pairs(basis.size() - 1);
    }

    GroebnerBasis<F> out;
    std::vector<Monomial> lts;
    for (const auto& g : basis) lts.push_back(g.leading_term().mono);
    out.generators = std::move(basis);
    out.lt_ideal = minimalize_lt(std::move(lts));
    out.case_tag = 0;
    return out;
}

struct GroebnerCertificate {
    bool is_basis = true;
    // Pairs (i, j) whose S-polynomial has a nonzero normal form.
    std::vector<std::pair<std::size_t, std::size_t>> failing_pairs;
};

// Checks the Buchberger criterion for every pair, with no shortcuts.
template <typename F>
GroebnerCertificate is_groebner(const F&, std::span<const Poly<F>> gens) {
    for (const auto& g : gens)
        if (g.is_zero()) throw DomainError("is_groebner: zero generator");
    if (gens.empty()) throw DomainError("is_groebner: empty generator list");
    GroebnerCertificate cert;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            Poly<F> r = normal_form(s_polynomial(gens[i], gens[j]), gens);
            if (!r.is_zero()) {
                cert.is_basis = false;
                cert.failing_pairs.emplace_back(i, j);
            }
        }
    return cert;
}

// Positive coprime weights (w_x, w_y) making every term of f the same
// weighted degree; DomainError if no such weights exist.
template <typename F>
std::pair<std::uint32_t, std::uint32_t> discover_weights(const Poly<F>& f) {
    if (f.is_zero()) throw DomainError("discover_weights: zero polynomial");
    const auto& ts = f.terms();
    if (ts.size() == 1) return {1, 1};
    long long di = static_cast<long long>(ts[0].mono.i) - ts[1].mono.i;
    long long dj = static_cast<long long>(ts[1].mono.j) - ts[0].mono.j;
    if (di == 0 || dj == 0 || (di > 0) != (dj > 0))
        throw DomainError("discover_weights: not quasi-homogeneous for positive weights");
    long long g = std::gcd(di < 0 ? -di : di, dj < 0 ? -dj : dj);
    // w_x * di = w_y * dj, so w_x : w_y = dj : di
    std::uint32_t wx = static_cast<std::uint32_t>((dj < 0 ? -dj : dj) / g);
    std::uint32_t wy = static_cast<std::uint32_t>((di < 0 ? -di : di) / g);
    unsigned long long d0 =
        static_cast<unsigned long long>(wx) * ts[0].mono.i + static_cast<unsigned long long>(wy) * ts[0].mono.j;
    for (const auto& t : ts)
        if (static_cast<unsigned long long>(wx) * t.mono.i +
                static_cast<unsigned long long>(wy) * t.mono.j != d0)
            throw DomainError("discover_weights: not quasi-homogeneous for positive weights");
    return {wx, wy};
}

namespace detail {

// Row-echelon rank over F_p on a flat row-major uint64 matrix.  Pivot rows
// are reduced mod p before use, other entries accumulate lazily: each step
// adds < p^2 per entry, so values never exceed steps*p^2 + p.  When that
// bound could overflow, every addition reduces instead.
long long rank_fp_inplace(std::vector<std::uint64_t>& m, std::size_t rows, std::size_t cols,
                          std::uint64_t p);

// Fraction-free (Bareiss) row-echelon rank over ZZ.
long long rank_zz_inplace(std::vector<std::vector<BigInt>>& m);

}  // namespace detail

// Colength of the monomial ideal generated by `gens` (minimal or not).
// Requires pure powers of both variables among the generators, i.e. a
// zero-dimensional ideal; counts the lattice points under the staircase.
long long staircase_count(std::vector<Monomial> gens);

namespace detail {

struct GradedBlocks {
    // block index -> first x-exponent, count; monomials in a block are
    // x^{i0 + s*wy} y^{(d - wx*i)/wy} for s = 0..count-1.
    std::map<unsigned long long, std::pair<std::uint32_t, long long>> blocks;
    std::uint32_t wx = 1, wy = 1;
};

inline GradedBlocks build_blocks(long long M, long long N, std::uint32_t wx, std::uint32_t wy) {
    GradedBlocks g;
    g.wx = wx;
    g.wy = wy;
    for (long long i = 0; i < M; ++i)
        for (long long j = 0; j < N; ++j) {
            unsigned long long d = static_cast<unsigned long long>(wx) * i +
                                   static_cast<unsigned long long>(wy) * j;
            auto [it, inserted] = g.blocks.emplace(d, std::make_pair(static_cast<std::uint32_t>(i), 1LL));
            if (!inserted) {
                // i ascends in this loop, so the first insert had the least i
                it->second.second += 1;
            }
        }
    return g;
}

}  // namespace detail

// ell( K[x,y] / (x^M, y^N, f^K) ) by linear algebra: the quotient by the
// monomial part is a graded vector space under the weights that make f
// quasi-homogeneous, multiplication by f^K maps each graded block to one of
// a single higher degree, and the colength is M*N minus the total rank of
// those block maps.  No Groebner theory is involved.
template <typename F>
long long length_rank(const F& field, long long M, long long N, const Poly<F>& f, long long K);

// Same computation without the graded decomposition: one MN x MN
// multiplication matrix.  Quadratic memory; used to sanity-check the
// blockwise decomposition on small instances.
template <typename F>
long long length_rank_dense(const F& field, long long M, long long N, const Poly<F>& f,
                            long long K);

namespace detail {

template <typename F>
void check_rank_args(long long M, long long N, long long K) {
    if (M < 1 || N < 1) throw DomainError("length_rank: need M, N >= 1");
    if (K < 0) throw DomainError("length_rank: need K >= 0");
}

// F_p block ranks.
inline long long blockwise_rank(const PrimeField& field, long long M, long long N,
                                const Poly<PrimeField>& fK) {
    auto [wx, wy] = discover_weights(fK);
    auto grading = build_blocks(M, N, wx, wy);
    unsigned long long D = static_cast<unsigned long long>(wx) * fK.terms()[0].mono.i +
                           static_cast<unsigned long long>(wy) * fK.terms()[0].mono.j;
    long long total_rank = 0;
    for (const auto& [d, src] : grading.blocks) {
        auto tgt_it = grading.blocks.find(d + D);
        if (tgt_it == grading.blocks.end()) continue;
        auto [src_i0, src_count] = src;
        auto [tgt_i0, tgt_count] = tgt_it->second;
        std::vector<std::uint64_t> mat(static_cast<std::size_t>(tgt_count) * src_count, 0);
        for (long long c = 0; c < src_count; ++c) {
            long long i_s = src_i0 + c * wy;
            long long j_s = static_cast<long long>((d - static_cast<unsigned long long>(wx) * i_s) / wy);
            for (const auto& t : fK.terms()) {
                long long i_t = i_s + t.mono.i, j_t = j_s + t.mono.j;
                if (i_t >= M || j_t >= N) continue;  // killed by x^M or y^N
                long long r = (i_t - tgt_i0) / wy;
                mat[static_cast<std::size_t>(r) * src_count + c] = t.coeff;
            }
        }
        total_rank += rank_fp_inplace(mat, tgt_count, src_count, field.characteristic());
    }
    return total_rank;
}

// QQ block ranks: rows are scaled to integers, then Bareiss.
inline long long blockwise_rank(const Rationals&, long long M, long long N,
                                const Poly<Rationals>& fK) {
    auto [wx, wy] = discover_weights(fK);
    auto grading = build_blocks(M, N, wx, wy);
    unsigned long long D = static_cast<unsigned long long>(wx) * fK.terms()[0].mono.i +
                           static_cast<unsigned long long>(wy) * fK.terms()[0].mono.j;
    long long total_rank = 0;
    for (const auto& [d, src] : grading.blocks) {
        auto tgt_it = grading.blocks.find(d + D);
        if (tgt_it == grading.blocks.end()) continue;
        auto [src_i0, src_count] = src;
        auto [tgt_i0, tgt_count] = tgt_it->second;
        std::vector<std::vector<BigRational>> mat(
            tgt_count, std::vector<BigRational>(src_count, BigRational(0)));
        for (long long c = 0; c < src_count; ++c) {
            long long i_s = src_i0 + c * wy;
            long long j_s = static_cast<long long>((d - static_cast<unsigned long long>(wx) * i_s) / wy);
            for (const auto& t : fK.terms()) {
                long long i_t = i_s + t.mono.i, j_t = j_s + t.mono.j;
                if (i_t >= M || j_t >= N) continue;
                mat[(i_t - tgt_i0) / wy][c] = t.coeff;
            }
        }
        std::vector<std::vector<BigInt>> zmat(tgt_count, std::vector<BigInt>(src_count));
        for (long long r = 0; r < tgt_count; ++r) {
            BigInt lcm_den = 1;
            for (const auto& q : mat[r]) lcm_den = lcm(lcm_den, q.get_den());
            for (long long c = 0; c < src_count; ++c) {
                BigRational scaled = mat[r][c] * BigRational(lcm_den);
                zmat[r][c] = scaled.get_num();
            }
        }
        total_rank += rank_zz_inplace(zmat);
    }
    return total_rank;
}

}  // namespace detail

template <typename F>
long long length_rank(const F& field, long long M, long long N, const Poly<F>& f, long long K) {
    detail::check_rank_args<F>(M, N, K);
    if constexpr (std::is_same_v<F, Rationals>) {
        if (M * N > 2500)
            throw DomainError("length_rank over QQ is limited to M*N <= 2500 by policy; "
                              "use a prime field for larger instances");
    }
    if (K == 0) return 0;  // f^0 = 1 generates the unit ideal
    if (f.is_zero()) return M * N;
    Poly<F> fK = pow(f, static_cast<unsigned long long>(K));
    return M * N - detail::blockwise_rank(field, M, N, fK);
}

template <typename F>
long long length_rank_dense(const F& field, long long M, long long N, const Poly<F>& f,
                            long long K) {
    detail::check_rank_args<F>(M, N, K);
    if (M * N > 2000)
        throw DomainError("length_rank_dense is a sanity check limited to M*N <= 2000");
    if (K == 0) return 0;
    if (f.is_zero()) return M * N;
    Poly<F> fK = pow(f, static_cast<unsigned long long>(K));
    const std::size_t n = static_cast<std::size_t>(M) * N;
    auto index = [N](long long i, long long j) { return static_cast<std::size_t>(i) * N + j; };

    if constexpr (std::is_same_v<F, PrimeField>) {
        std::vector<std::uint64_t> mat(n * n, 0);
        for (long long i = 0; i < M; ++i)
            for (long long j = 0; j < N; ++j)
                for (const auto& t : fK.terms()) {
                    long long ti = i + t.mono.i, tj = j + t.mono.j;
                    if (ti >= M || tj >= N) continue;
                    mat[index(ti, tj) * n + index(i, j)] = t.coeff;
                }
        return M * N - detail::rank_fp_inplace(mat, n, n, field.characteristic());
    } else {
        std::vector<std::vector<BigInt>> mat(n, std::vector<BigInt>(n, BigInt(0)));
        BigInt lcm_den = 1;
        for (const auto& t : fK.terms()) lcm_den = lcm(lcm_den, t.coeff.get_den());
        for (long long i = 0; i < M; ++i)
            for (long long j = 0; j < N; ++j)
                for (const auto& t : fK.terms()) {
                    long long ti = i + t.mono.i, tj = j + t.mono.j;
                    if (ti >= M || tj >= N) continue;
                    BigRational scaled = t.coeff * BigRational(lcm_den);
                    mat[index(ti, tj)][index(i, j)] = scaled.get_num();
                }
        return M * N - detail::rank_zz_inplace(mat);
    }
}

}  // namespace fsig

#endif
