#pragma once

// Occupancy engines. P(a,r,n): r balls dropped uniformly into n boxes leave
// exactly a boxes occupied. P_q(a,r,n): r uniform vectors of F_q^n span an
// a-dimensional subspace. Each has an inclusion-exclusion closed form, an
// equivalent pure-birth chain, and a Monte Carlo estimator.

#include <cmath>
#include <cstdint>
#include <random>
#include <thread>
#include <vector>

#include "tensorwalk/combinatorics.hpp"
#include "tensorwalk/errors.hpp"
#include "tensorwalk/exact.hpp"

namespace tensorwalk {

inline ExactScalar occupancy_exact(int a, int r, int n) {
    if (n < 1) throw invalid_input_error("occupancy_exact: need at least one box");
    if (a < 0 || a > n || r < 0) throw invalid_input_error("occupancy_exact: need 0 <= a <= n, r >= 0");
    ExactScalar inner(0);
    for (int b = n - a; b <= n; ++b) {
        const ExactScalar term = ExactScalar(binomial(a, n - b)) * pow_exact(make_rational(n - b, n), r);
        if ((b - (n - a)) % 2 == 0) {
            inner += term;
        } else {
            inner -= term;
        }
    }
    return ExactScalar(binomial(n, a)) * inner;
}

/// Distribution after r steps of the occupied-box count chain started at 0:
/// from a it stays with probability a/n and moves to a+1 otherwise.
inline std::vector<ExactScalar> occupancy_chain_power(int n, int r) {
    if (n < 1 || r < 0) throw invalid_input_error("occupancy_chain_power: need n >= 1, r >= 0");
    std::vector<ExactScalar> dist(static_cast<std::size_t>(n + 1));
    dist[0] = 1;
    for (int step = 0; step < r; ++step) {
        std::vector<ExactScalar> next(dist.size());
        for (int a = 0; a <= n; ++a) {
            const auto& p = dist[static_cast<std::size_t>(a)];
            if (p == 0) continue;
            const ExactScalar stay = make_rational(a, n);
            next[static_cast<std::size_t>(a)] += p * stay;
            if (a < n) next[static_cast<std::size_t>(a + 1)] += p * (1 - stay);
        }
        dist = std::move(next);
    }
    return dist;
}

inline ExactScalar qspan_exact(int a, int r, int n, long q) {
    if (q < 2) throw invalid_input_error("qspan_exact: q must be at least 2");
    if (n < 0 || a < 0 || a > n || r < 0) throw invalid_input_error("qspan_exact: need 0 <= a <= n, r >= 0");
    const ExactScalar qq(q);
    ExactScalar inner(0);
    for (int b = n - a; b <= n; ++b) {
        const int t = b - (n - a);
        const ExactScalar term = pow_exact(qq, t * (t - 1) / 2) * ExactScalar(q_binomial(a, n - b, q)) *
                                 pow_exact(qq, -static_cast<long>(r) * b);
        if (t % 2 == 0) {
            inner += term;
        } else {
            inner -= term;
        }
    }
    return ExactScalar(q_binomial(n, a, q)) * inner;
}

/// r-step law of the span dimension chain: from dimension a the next vector
/// already lies in the span with probability q^{a-n}.
inline std::vector<ExactScalar> qspan_chain_power(int n, int r, long q) {
    if (n < 0 || r < 0 || q < 2) throw invalid_input_error("qspan_chain_power: bad arguments");
    std::vector<ExactScalar> dist(static_cast<std::size_t>(n + 1));
    dist[0] = 1;
    for (int step = 0; step < r; ++step) {
        std::vector<ExactScalar> next(dist.size());
        for (int a = 0; a <= n; ++a) {
            const auto& p = dist[static_cast<std::size_t>(a)];
            if (p == 0) continue;
            const ExactScalar stay = pow_exact(ExactScalar(q), a - n);
            next[static_cast<std::size_t>(a)] += p * stay;
            if (a < n) next[static_cast<std::size_t>(a + 1)] += p * (1 - stay);
        }
        dist = std::move(next);
    }
    return dist;
}

/// Probability that a Poisson(e^{-c}) variable is neither 0 nor 1.
inline double poisson_not01(double c) {
    if (std::isinf(c)) return c > 0 ? 0.0 : 1.0;
    const double m = std::exp(-c);
    if (m < 0.5) {
        // e^{-m} (m^2/2! + m^3/3! + ...), avoiding cancellation for large c.
        double term = m * m / 2.0;
        double tail = 0.0;
        for (int k = 3; term > 1e-300 && k < 60; ++k) {
            tail += term;
            term *= m / k;
        }
        return std::exp(-m) * tail;
    }
    return 1.0 - std::exp(-m) * (1.0 + m);
}

// ---------------------------------------------------------------------------
// Monte Carlo

/// (seed, stream_id) names one reproducible stream.
struct RandomSource {
    std::uint64_t seed = 0;
    std::uint32_t stream_id = 0;

    std::mt19937_64 engine() const {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32U), stream_id,
                          0x9e3779b9U};
        return std::mt19937_64(seq);
    }
};

struct McEstimate {
    std::uint64_t hits = 0;
    std::uint64_t samples = 0;

    double estimate() const { return samples == 0 ? 0.0 : static_cast<double>(hits) / static_cast<double>(samples); }

    /// Binomial standard error sqrt(p(1-p)/N).
    double standard_error() const {
        if (samples == 0) return 0.0;
        const double p = estimate();
        return std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
    }
};

inline bool is_prime(long q) {
    if (q < 2) return false;
    for (long d = 2; d * d <= q; ++d) {
        if (q % d == 0) return false;
    }
    return true;
}

namespace detail {

/// Counts per outcome 0..n over `samples` draws of `draw(engine)`.
template <class Draw>
std::vector<std::uint64_t> histogram_streams(int n, std::uint64_t samples, std::uint64_t seed, unsigned streams,
                                             Draw draw) {
    if (streams == 0) streams = 1;
    std::vector<std::vector<std::uint64_t>> partial(streams, std::vector<std::uint64_t>(static_cast<std::size_t>(n + 1)));
    auto run = [&](unsigned k) {
        const std::uint64_t share = samples / streams + (k < samples % streams ? 1 : 0);
        auto eng = RandomSource{seed, k}.engine();
        for (std::uint64_t s = 0; s < share; ++s) ++partial[k][static_cast<std::size_t>(draw(eng))];
    };
    if (streams == 1) {
        run(0);
    } else {
        std::vector<std::jthread> workers;
        for (unsigned k = 0; k < streams; ++k) workers.emplace_back(run, k);
    }
    std::vector<std::uint64_t> total(static_cast<std::size_t>(n + 1));
    for (const auto& h : partial) {
        for (std::size_t a = 0; a < h.size(); ++a) total[a] += h[a];
    }
    return total;
}

struct OccupancyDraw {
    int r;
    int n;
    int operator()(std::mt19937_64& eng) const {
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        std::uniform_int_distribution<int> box(0, n - 1);
        int occupied = 0;
        for (int ball = 0; ball < r; ++ball) {
            char& s = seen[static_cast<std::size_t>(box(eng))];
            if (!s) {
                s = 1;
                ++occupied;
            }
        }
        return occupied;
    }
};

/// Rank over F_q (q prime) of r uniform vectors in F_q^n, built incrementally
/// against a reduced echelon basis.
struct SpanDraw {
    int r;
    int n;
    long q;
    int operator()(std::mt19937_64& eng) const {
        std::uniform_int_distribution<long> coord(0, q - 1);
        std::vector<std::vector<long>> basis;  // basis[k] has leading 1 at pivots[k]
        std::vector<int> pivots;
        std::vector<long> v(static_cast<std::size_t>(n));
        for (int k = 0; k < r; ++k) {
            for (auto& x : v) x = coord(eng);
            if (static_cast<int>(basis.size()) == n) continue;
            for (std::size_t b = 0; b < basis.size(); ++b) {
                const long f = v[static_cast<std::size_t>(pivots[b])];
                if (f == 0) continue;
                for (int j = 0; j < n; ++j) {
                    auto& x = v[static_cast<std::size_t>(j)];
                    x = ((x - f * basis[b][static_cast<std::size_t>(j)]) % q + q) % q;
                }
            }
            int lead = 0;
            while (lead < n && v[static_cast<std::size_t>(lead)] == 0) ++lead;
            if (lead == n) continue;
            const long inv = mod_inverse(v[static_cast<std::size_t>(lead)], q);
            for (auto& x : v) x = x * inv % q;
            for (std::size_t b = 0; b < basis.size(); ++b) {
                const long f = basis[b][static_cast<std::size_t>(lead)];
                if (f == 0) continue;
                for (int j = 0; j < n; ++j) {
                    auto& x = basis[b][static_cast<std::size_t>(j)];
                    x = ((x - f * v[static_cast<std::size_t>(j)]) % q + q) % q;
                }
            }
            basis.push_back(v);
            pivots.push_back(lead);
        }
        return static_cast<int>(basis.size());
    }

    static long mod_inverse(long x, long q) {
        long result = 1, base = x % q, e = q - 2;
        while (e > 0) {
            if (e & 1) result = result * base % q;
            base = base * base % q;
            e >>= 1;
        }
        return result;
    }
};

}  // namespace detail

/// Counts of occupied-box totals 0..n over `samples` trials split across
/// `streams` independent streams. Deterministic given (seed, streams, samples).
inline std::vector<std::uint64_t> occupancy_mc_histogram(int r, int n, std::uint64_t samples, std::uint64_t seed,
                                                         unsigned streams = 1) {
    if (n < 1 || r < 0 || samples < 1) throw invalid_input_error("occupancy_mc: need n >= 1, r >= 0, samples >= 1");
    return detail::histogram_streams(n, samples, seed, streams, detail::OccupancyDraw{r, n});
}

inline McEstimate occupancy_mc(int a, int r, int n, std::uint64_t samples, const RandomSource& src) {
    if (n < 1 || r < 0 || samples < 1) throw invalid_input_error("occupancy_mc: need n >= 1, r >= 0, samples >= 1");
    McEstimate est{0, samples};
    if (a < 0 || a > n) return est;
    auto eng = src.engine();
    const detail::OccupancyDraw draw{r, n};
    for (std::uint64_t s = 0; s < samples; ++s) est.hits += draw(eng) == a ? 1 : 0;
    return est;
}

inline std::vector<std::uint64_t> qspan_mc_histogram(int r, int n, long q, std::uint64_t samples,
                                                     std::uint64_t seed, unsigned streams = 1) {
    if (!is_prime(q)) throw unsupported_field_error("qspan_mc: q=" + std::to_string(q) + " is not prime");
    if (n < 0 || r < 0 || samples < 1) throw invalid_input_error("qspan_mc: need n >= 0, r >= 0, samples >= 1");
    return detail::histogram_streams(n, samples, seed, streams, detail::SpanDraw{r, n, q});
}

inline McEstimate qspan_mc(int a, int r, int n, long q, std::uint64_t samples, const RandomSource& src) {
    if (!is_prime(q)) throw unsupported_field_error("qspan_mc: q=" + std::to_string(q) + " is not prime");
    if (n < 0 || r < 0 || samples < 1) throw invalid_input_error("qspan_mc: need n >= 0, r >= 0, samples >= 1");
    McEstimate est{0, samples};
    if (a < 0 || a > n) return est;
    auto eng = src.engine();
    const detail::SpanDraw draw{r, n, q};
    for (std::uint64_t s = 0; s < samples; ++s) est.hits += draw(eng) == a ? 1 : 0;
    return est;
}

}  // namespace tensorwalk
