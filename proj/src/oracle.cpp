#include "fsig/oracle.hpp"

#include <algorithm>
#include <limits>

namespace fsig {

namespace detail {

long long rank_fp_inplace(std::vector<std::uint64_t>& m, std::size_t rows, std::size_t cols,
                          std::uint64_t p) {
    if (rows == 0 || cols == 0) return 0;
    // Lazy elimination adds < p^2 per entry per pivot step;  safe when
    // steps * p^2 stays far below 2^64.
    const std::size_t steps = std::min(rows, cols);
    const bool lazy = p < (1u << 20) &&
                      static_cast<unsigned __int128>(steps + 1) * p * p <
                          (static_cast<unsigned __int128>(1) << 62);
    auto at = [&](std::size_t r, std::size_t c) -> std::uint64_t& { return m[r * cols + c]; };
    auto inv_mod = [&](std::uint64_t a) {
        // Fermat: a^(p-2) mod p
        unsigned __int128 base = a % p, acc = 1;
        std::uint64_t e = p - 2;
        while (e) {
            if (e & 1) acc = acc * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return static_cast<std::uint64_t>(acc);
    };

    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rows;
        for (std::size_t r = rank; r < rows; ++r) {
            at(r, col) %= p;
            if (at(r, col) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot == rows) continue;
        if (pivot != rank)
            for (std::size_t c = col; c < cols; ++c) std::swap(at(pivot, c), at(rank, c));
        for (std::size_t c = col; c < cols; ++c) at(rank, c) %= p;
        const std::uint64_t inv_pivot = inv_mod(at(rank, col));
        for (std::size_t r = rank + 1; r < rows; ++r) {
            at(r, col) %= p;
            if (at(r, col) == 0) continue;
            const std::uint64_t f =
                p - static_cast<std::uint64_t>(
                        static_cast<unsigned __int128>(at(r, col)) * inv_pivot % p);
            if (lazy) {
                for (std::size_t c = col + 1; c < cols; ++c) at(r, c) += f * at(rank, c);
            } else {
                for (std::size_t c = col + 1; c < cols; ++c)
                    at(r, c) = static_cast<std::uint64_t>(
                        (at(r, c) + static_cast<unsigned __int128>(f) * at(rank, c)) % p);
            }
            at(r, col) = 0;
        }
        ++rank;
    }
    return static_cast<long long>(rank);
}

long long rank_zz_inplace(std::vector<std::vector<BigInt>>& m) {
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m[0].size();
    BigInt prev_pivot = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rows;
        for (std::size_t r = rank; r < rows; ++r)
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot == rows) continue;
        if (pivot != rank) std::swap(m[pivot], m[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t c = col + 1; c < cols; ++c) {
                BigInt v = m[r][c] * m[rank][col] - m[r][col] * m[rank][c];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev_pivot.get_mpz_t());
                m[r][c] = v;
            }
            m[r][col] = 0;
        }
        prev_pivot = m[rank][col];
        ++rank;
    }
    return static_cast<long long>(rank);
}

}  // namespace detail

long long staircase_count(std::vector<Monomial> gens) {
    if (gens.empty()) throw DomainError("staircase_count: empty generator list");
    bool pure_x = false, pure_y = false;
    for (const auto& g : gens) {
        if (g.j == 0) pure_x = true;
        if (g.i == 0) pure_y = true;
    }
    if (!pure_x || !pure_y)
        throw DomainError("staircase_count: ideal is not zero-dimensional "
                          "(needs pure powers of both variables)");
    std::sort(gens.begin(), gens.end(),
              [](const Monomial& a, const Monomial& b) { return a.i < b.i; });
    // J(i) = min { g.j : g.i <= i } is a non-increasing step function of i
    // (finite from i = 0 on, because of the pure y power), and the count is
    // the sum of J(i) until it hits zero at the pure x power.  Sum it
    // segment by segment between consecutive distinct generator i values.
    long long total = 0;
    std::uint64_t min_j = std::numeric_limits<std::uint64_t>::max();
    std::size_t idx = 0;
    while (idx < gens.size()) {
        std::uint64_t i_cur = gens[idx].i;
        while (idx < gens.size() && gens[idx].i == i_cur) {
            min_j = std::min<std::uint64_t>(min_j, gens[idx].j);
            ++idx;
        }
        if (min_j == 0) break;
        // A generator with j == 0 is still ahead, so idx is in range.
        total += static_cast<long long>((gens[idx].i - i_cur) * min_j);
    }
    return total;
}

}  // namespace fsig
