#pragma once

// Walk on Irr(GL(n,q)) driven by the representation with character
// q^{dim fixed space}. Everything here is closed-form: the separation
// distance reduces to the span-dimension law P_q(n,r,n), so no GL character
// table is ever built.

#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "tensorwalk/combinatorics.hpp"
#include "tensorwalk/errors.hpp"
#include "tensorwalk/exact.hpp"
#include "tensorwalk/interpolation.hpp"
#include "tensorwalk/kernel.hpp"
#include "tensorwalk/occupancy.hpp"
#include "tensorwalk/partition.hpp"

namespace tensorwalk {

inline bool is_prime_power(long q) {
    if (q < 2) return false;
    long p = 2;
    while (q % p != 0) ++p;
    while (q % p == 0) q /= p;
    return q == 1;
}

struct QParameter {
    long q = 2;
    bool is_prime_power = true;

    explicit QParameter(long value) : q(value), is_prime_power(tensorwalk::is_prime_power(value)) {
        if (value < 2) throw invalid_input_error("q must be at least 2");
    }
};

inline void reject_gl12(int n, long q) {
    if (n == 1 && q == 2) throw excluded_case_error("GL(1,2) has a single irreducible; separation is undefined here");
}

/// Distinct eigenvalues q^{-i}, i = 0..n, descending. Multiplicities are left empty.
inline Spectrum gl_spectrum(int n, long q) {
    if (n < 1 || q < 2) throw invalid_input_error("gl_spectrum: need n >= 1, q >= 2");
    Spectrum s;
    for (int i = 0; i <= n; ++i) s.entries.push_back({pow_exact(ExactScalar(q), -i), std::nullopt});
    return s;
}

/// sum_{b=1}^n (-1)^{b+1} q^{C(b,2)} [n choose b]_q q^{-rb}
inline ExactScalar gl_separation_closed_form(int n, long q, int r) {
    if (n < 1 || r < 0 || q < 2) throw invalid_input_error("gl_separation_closed_form: bad arguments");
    ExactScalar total(0);
    for (int b = 1; b <= n; ++b) {
        const ExactScalar term = pow_exact(ExactScalar(q), static_cast<long>(b) * (b - 1) / 2 - static_cast<long>(r) * b) *
                                 ExactScalar(q_binomial(n, b, q));
        if (b % 2 == 1) {
            total += term;
        } else {
            total -= term;
        }
    }
    return total;
}

/// Separation distance after r steps, checked against 1 - P_q(n,r,n) and the
/// eigenvalue-only interpolation formula on gl_spectrum.
inline ExactScalar gl_separation_exact(int n, long q, int r) {
    reject_gl12(n, q);
    const ExactScalar closed = gl_separation_closed_form(n, q, r);
    const ExactScalar by_span = 1 - qspan_exact(n, r, n, q);
    const ExactScalar spectral = separation_from_spectrum(EigenvalueList::from(gl_spectrum(n, q)), r);
    if (closed != by_span || closed != spectral) {
        throw consistency_error("gl_separation_exact(n=" + std::to_string(n) + ", q=" + std::to_string(q) +
                                ", r=" + std::to_string(r) + "): closed " + closed.get_str() + ", span " +
                                by_span.get_str() + ", spectral " + spectral.get_str());
    }
    return closed;
}

struct SeparationBounds {
    ExactScalar lower;
    ExactScalar upper;

    bool contains(const ExactScalar& s) const { return lower <= s && s <= upper; }
};

/// q^{-(c+1)} - 4 q^{-(2c+3)} <= s(n+c) <= 2 q^{-(c+1)}
inline SeparationBounds gl_separation_bounds(long q, int c) {
    if (q < 2 || c < 0) throw invalid_input_error("gl_separation_bounds: need q >= 2, c >= 0");
    const ExactScalar qq(q);
    return {pow_exact(qq, -(c + 1)) - 4 * pow_exact(qq, -(2 * c + 3)), 2 * pow_exact(qq, -(c + 1))};
}

inline bool gl_bounds_hold(int n, long q, int c) {
    return gl_separation_bounds(q, c).contains(gl_separation_exact(n, q, n + c));
}

struct SeparationLimit {
    double value = 0.0;
    int factors = 0;  // number of product factors used
};

/// lim_{n -> inf} s(n+c) = 1 - prod_{m>=1} (1 - q^{-(c+m)}), truncated once
/// a factor is within machine epsilon of 1.
inline SeparationLimit gl_separation_limit(double q, int c) {
    if (q <= 1.0 || c < 0) throw invalid_input_error("gl_separation_limit: need q > 1, c >= 0");
    // log1p keeps the tail factors from rounding to exactly 1 too early.
    double log_prod = 0.0;
    int m = 1;
    for (;; ++m) {
        const double x = std::pow(q, -static_cast<double>(c + m));
        log_prod += std::log1p(-x);
        if (x < std::numeric_limits<double>::epsilon() || m >= 4096) break;
    }
    return {-std::expm1(log_prod), m};
}

/// |C_m| = (1/m) sum_{d | m} mu(d) (q^{m/d} - 1)
inline BigInt cuspidal_count(int m, long q) {
    if (m < 1 || q < 2) throw invalid_input_error("cuspidal_count: need m >= 1, q >= 2");
    auto moebius = [](int d) {
        int result = 1;
        for (int p = 2; p * p <= d; ++p) {
            if (d % p != 0) continue;
            d /= p;
            if (d % p == 0) return 0;
            result = -result;
        }
        return d > 1 ? -result : result;
    };
    BigInt total(0);
    for (int d = 1; d <= m; ++d) {
        if (m % d != 0) continue;
        const int mu = moebius(d);
        if (mu == 0) continue;
        const BigInt term = pow_int(BigInt(q), static_cast<unsigned long>(m / d)) - 1;
        total += mu > 0 ? term : BigInt(-term);
    }
    if (!mpz_divisible_ui_p(total.get_mpz_t(), static_cast<unsigned long>(m))) {
        throw consistency_error("cuspidal_count: Moebius sum not divisible by m");
    }
    BigInt out;
    mpz_divexact_ui(out.get_mpz_t(), total.get_mpz_t(), static_cast<unsigned long>(m));
    return out;
}

/// Number of degree-n partition families, i.e. |Irr(GL(n,q))|, as the x^n
/// coefficient of prod_m prod_k (1 - x^{mk})^{-|C_m|}. With avoid_e the unit
/// cuspidal's factor is dropped, counting families with Lambda(e) empty.
inline BigInt count_gl_families(int n, long q, bool avoid_e) {
    if (n < 1 || q < 2) throw invalid_input_error("count_gl_families: need n >= 1, q >= 2");
    std::vector<BigInt> series(static_cast<std::size_t>(n + 1));
    series[0] = 1;
    for (int m = 1; m <= n; ++m) {
        BigInt count = cuspidal_count(m, q);
        if (m == 1 && avoid_e) count -= 1;
        if (count == 0) continue;
        const unsigned long cu = count.get_ui();
        for (int k = 1; m * k <= n; ++k) {
            const int step = m * k;
            // multiply by (1 - x^step)^{-count} = sum_j C(count + j - 1, j) x^{step j}
            std::vector<BigInt> next(series.size());
            for (int deg = 0; deg <= n; ++deg) {
                if (series[static_cast<std::size_t>(deg)] == 0) continue;
                for (int j = 0; deg + step * j <= n; ++j) {
                    BigInt coeff;
                    mpz_bin_uiui(coeff.get_mpz_t(), cu + static_cast<unsigned long>(j) - 1, static_cast<unsigned long>(j));
                    next[static_cast<std::size_t>(deg + step * j)] += series[static_cast<std::size_t>(deg)] * coeff;
                }
            }
            series = std::move(next);
        }
    }
    return series[static_cast<std::size_t>(n)];
}

/// A family of partitions indexed by cuspidals: (degree m, index in C_m) -> partition.
struct GlIrrepFamily {
    struct Assignment {
        int cuspidal_degree;
        long cuspidal_index;
        Partition partition;
    };
    std::vector<Assignment> assignments;

    int degree() const {
        int total = 0;
        for (const auto& a : assignments) total += a.cuspidal_degree * a.partition.size();
        return total;
    }

    /// The partition at the unit cuspidal e = (degree 1, index 0).
    Partition at_unit() const {
        for (const auto& a : assignments) {
            if (a.cuspidal_degree == 1 && a.cuspidal_index == 0) return a.partition;
        }
        return {};
    }

    bool valid_for(long q) const {
        for (const auto& a : assignments) {
            if (a.cuspidal_degree < 1 || a.partition.empty()) return false;
            if (a.cuspidal_index < 0 || BigInt(a.cuspidal_index) >= cuspidal_count(a.cuspidal_degree, q)) return false;
        }
        return true;
    }
};

/// Explicit enumeration of all degree-n families. Exponential; meant for
/// small (n, q) where it cross-checks count_gl_families.
inline std::vector<GlIrrepFamily> enumerate_gl_families(int n, long q) {
    if (n < 1 || q < 2) throw invalid_input_error("enumerate_gl_families: need n >= 1, q >= 2");
    struct Slot {
        int degree;
        long index;
    };
    std::vector<Slot> slots;
    for (int m = 1; m <= n; ++m) {
        const BigInt count = cuspidal_count(m, q);
        if (count > 10000) throw size_limit_error("enumerate_gl_families: too many cuspidals");
        for (long i = 0; BigInt(i) < count; ++i) slots.push_back({m, i});
    }
    std::vector<GlIrrepFamily> out;
    GlIrrepFamily current;
    auto rec = [&](auto&& self, std::size_t slot, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        if (slot == slots.size()) return;
        self(self, slot + 1, remaining);
        const int m = slots[slot].degree;
        for (int size = 1; size * m <= remaining; ++size) {
            for (const auto& p : enumerate_partitions(size)) {
                current.assignments.push_back({m, slots[slot].index, p});
                self(self, slot + 1, remaining - size * m);
                current.assignments.pop_back();
            }
        }
    };
    rec(rec, 0, n);
    return out;
}

}  // namespace tensorwalk
