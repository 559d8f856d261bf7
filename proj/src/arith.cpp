#include "fsig/arith.hpp"

#include <mutex>

#include "fsig/prime_field.hpp"

namespace fsig {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

std::mutex pascal_mutex;
std::vector<std::vector<BigInt>> pascal;  // pascal[n][k], grown on demand

}  // namespace

BigInt binom(long long n, long long k) {
    if (n < 0) throw DomainError("binom: negative n");
    if (k < 0 || k > n) return 0;
    std::lock_guard<std::mutex> lock(pascal_mutex);
    while (static_cast<long long>(pascal.size()) <= n) {
        std::size_t row = pascal.size();
        std::vector<BigInt> next(row + 1, BigInt(1));
        for (std::size_t j = 1; j < row; ++j) next[j] = pascal[row - 1][j - 1] + pascal[row - 1][j];
        pascal.push_back(std::move(next));
    }
    return pascal[n][k];
}

std::vector<BigInt> binom_row(long long n) {
    if (n < 0) throw DomainError("binom_row: negative n");
    std::vector<BigInt> row(n + 1);
    row[0] = 1;
    for (long long k = 0; k < n; ++k)
        row[k + 1] = row[k] * static_cast<long>(n - k) / static_cast<long>(k + 1);
    return row;
}

namespace {

void check_det_args(long long k, long long a, long long v) {
    if (!(0 <= a && a <= k)) throw DomainError("det_binomial: need 0 <= a <= k");
    if (a + v < 0) throw DomainError("det_binomial: need a + v >= 0");
}

}  // namespace

BigRational det_binomial_formula(long long k, long long a, long long v) {
    check_det_args(k, a, v);
    BigInt num = 1, den = 1;
    for (long long i = 0; i <= a + v; ++i) {
        num *= binom(k + i, a + i);
        den *= binom(k + v - i, a + v - i);
    }
    return make_rational(num, den);
}

BigRational det_binomial_naive(long long k, long long a, long long v) {
    check_det_args(k, a, v);
    const long long n = a + v + 1;
    std::vector<std::vector<BigInt>> mat(n, std::vector<BigInt>(n));
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j) mat[i][j] = binom(k, a - i + j);

    // Bareiss fraction-free elimination with row pivoting; exact over ZZ.
    BigInt det_sign = 1, prev_pivot = 1;
    for (long long col = 0; col < n; ++col) {
        long long pivot_row = -1;
        for (long long r = col; r < n; ++r)
            if (mat[r][col] != 0) {
                pivot_row = r;
                break;
            }
        if (pivot_row < 0) return BigRational(0);
        if (pivot_row != col) {
            std::swap(mat[pivot_row], mat[col]);
            det_sign = -det_sign;
        }
        for (long long r = col + 1; r < n; ++r) {
            for (long long j = col + 1; j < n; ++j) {
                mat[r][j] = (mat[r][j] * mat[col][col] - mat[r][col] * mat[col][j]) / prev_pivot;
            }
            mat[r][col] = 0;
        }
        prev_pivot = mat[col][col];
    }
    return BigRational(det_sign * mat[n - 1][n - 1]);
}

}  // namespace fsig
