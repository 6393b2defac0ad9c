#pragma once

#include <algorithm>
#include <vector>

#include "tensorwalk/errors.hpp"
#include "tensorwalk/exact.hpp"
#include "tensorwalk/matrix.hpp"
#include "tensorwalk/partition.hpp"

namespace tensorwalk {

/// Number of standard Young tableaux of shape lambda, by the hook length
/// formula. The empty shape has one (empty) tableau.
inline BigInt count_syt(const Partition& lambda) {
    const Partition conj = lambda.conjugate();
    BigInt hooks(1);
    for (int i = 0; i < lambda.length(); ++i) {
        for (int j = 0; j < lambda[i]; ++j) {
            const int arm = lambda[i] - j - 1;
            const int leg = conj[j] - i - 1;
            hooks *= arm + leg + 1;
        }
    }
    BigInt out;
    const BigInt total = factorial(lambda.size());
    mpz_divexact(out.get_mpz_t(), total.get_mpz_t(), hooks.get_mpz_t());
    return out;
}

/// Number of standard tableaux of the skew shape outer/inner, via
///   N! * det[ 1 / (outer_i - inner_j - i + j)! ]
/// over the rows of the outer shape (1/k! = 0 for k < 0). Returns 0 when
/// inner is not contained in outer.
inline BigInt count_skew_syt(const SkewShape& shape) {
    if (!shape.valid()) return BigInt(0);
    const int rows = shape.outer.length();
    if (rows == 0) return BigInt(1);
    ExactMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(rows));
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < rows; ++j) {
            const int k = shape.outer[i] - shape.inner[j] - i + j;
            if (k >= 0) m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = make_rational(BigInt(1), factorial(k));
        }
    }
    const ExactScalar value = ExactScalar(factorial(shape.size())) * determinant(std::move(m));
    return require_integer(value, "count_skew_syt");
}

/// d_{lambda/(k)}: tableaux of lambda with a single-row shape (k) removed.
inline BigInt count_skew_syt_row(const Partition& lambda, int k) {
    return count_skew_syt({lambda, Partition::single_row(k)});
}

/// Gaussian binomial [n choose k]_q at an integer q >= 2. Zero outside 0 <= k <= n.
inline BigInt q_binomial(long n, long k, long q) {
    if (q < 2) throw invalid_input_error("q_binomial: q must be at least 2");
    if (k < 0 || n < 0 || k > n) return BigInt(0);
    k = std::min(k, n - k);
    BigInt num(1), den(1);
    const BigInt base(q);
    for (long i = 0; i < k; ++i) {
        num *= pow_int(base, static_cast<unsigned long>(n - i)) - 1;
        den *= pow_int(base, static_cast<unsigned long>(i + 1)) - 1;
    }
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
        throw consistency_error("q_binomial: product formula did not divide exactly");
    }
    BigInt out;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return out;
}

namespace detail {
/// Coefficients 0..m of prod_{part >= min_part} 1/(1 - x^part).
inline std::vector<BigInt> partition_counts(int m, int min_part) {
    std::vector<BigInt> ways(static_cast<std::size_t>(m + 1));
    ways[0] = 1;
    for (int part = min_part; part <= m; ++part) {
        for (int total = part; total <= m; ++total) {
            ways[static_cast<std::size_t>(total)] += ways[static_cast<std::size_t>(total - part)];
        }
    }
    return ways;
}
}  // namespace detail

inline BigInt partition_count(int n) {
    if (n < 0) return BigInt(0);
    return detail::partition_counts(n, 1)[static_cast<std::size_t>(n)];
}

/// Partitions of m with every part at least 2 (conjugacy classes of S_{m+i}
/// with exactly i fixed points). m = 0 gives 1, m = 1 gives 0.
inline BigInt count_partitions_no_ones(int m) {
    if (m < 0) throw invalid_input_error("count_partitions_no_ones: m must be nonnegative");
    return detail::partition_counts(m, 2)[static_cast<std::size_t>(m)];
}

}  // namespace tensorwalk
