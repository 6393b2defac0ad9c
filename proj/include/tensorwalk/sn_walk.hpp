#pragma once

// Random walk on Irr(S_n) driven by the n-dimensional defining
// representation, started at the trivial representation (n). The kernel is
// K(lambda, rho) = d_rho m_rho(lambda (x) eta) / (d_lambda n) with Plancherel
// stationary law d_lambda^2 / n!.

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "tensorwalk/combinatorics.hpp"
#include "tensorwalk/config.hpp"
#include "tensorwalk/errors.hpp"
#include "tensorwalk/exact.hpp"
#include "tensorwalk/interpolation.hpp"
#include "tensorwalk/kernel.hpp"
#include "tensorwalk/occupancy.hpp"
#include "tensorwalk/partition.hpp"
#include "tensorwalk/sn_characters.hpp"

namespace tensorwalk {

inline std::vector<ExactScalar> plancherel(const CharacterTable& table) {
    std::vector<ExactScalar> pi;
    const BigInt order = factorial(table.n());
    for (std::size_t l = 0; l < table.irreps().size(); ++l) {
        const BigInt d(table.dimension(l));
        pi.push_back(make_rational(d * d, order));
    }
    return pi;
}

inline TransitionKernel kernel_from_multiplicities(const CharacterTable& table,
                                                   const std::vector<std::vector<BigInt>>& mult) {
    const int n = table.n();
    const std::size_t size = table.irreps().size();
    TransitionKernel k;
    k.states = table.irreps();
    k.matrix = ExactMatrix(size, size);
    for (std::size_t l = 0; l < size; ++l) {
        for (std::size_t p = 0; p < size; ++p) {
            if (mult[l][p] == 0) continue;
            k.matrix(l, p) = make_rational(BigInt(table.dimension(p)) * mult[l][p], BigInt(table.dimension(l)) * n);
        }
    }
    k.stationary = plancherel(table);
    return k;
}

/// Kernel with multiplicities from character inner products.
inline TransitionKernel build_kernel_characters(const CharacterTable& table) {
    const auto eta = defining_character(table);
    const auto& irreps = table.irreps();
    std::vector<std::vector<BigInt>> mult(irreps.size(), std::vector<BigInt>(irreps.size()));
    for (std::size_t l = 0; l < irreps.size(); ++l) {
        for (std::size_t p = 0; p < irreps.size(); ++p) mult[l][p] = tensor_multiplicity(table, irreps[l], eta, irreps[p]);
    }
    return kernel_from_multiplicities(table, mult);
}

inline TransitionKernel build_kernel_characters(int n) {
    check_size_limit(n, "build_kernel_characters");
    return build_kernel_characters(character_table(n));
}

/// m_rho(lambda (x) eta) as the number of mu that are lambda minus a corner
/// box and rho minus a corner box.
inline BigInt box_move_multiplicity(const Partition& lambda, const Partition& rho) {
    long count = 0;
    for (const auto& mu : lambda.remove_one_box()) {
        const auto grown = mu.add_one_box();
        count += std::count(grown.begin(), grown.end(), rho);
    }
    return BigInt(count);
}

/// Kernel from the remove-a-box/add-a-box description, cross-checked entry
/// by entry against the character route.
inline TransitionKernel build_kernel_boxes(int n) {
    check_size_limit(n, "build_kernel_boxes");
    const CharacterTable table = character_table(n);
    const auto& irreps = table.irreps();
    std::vector<std::vector<BigInt>> mult(irreps.size(), std::vector<BigInt>(irreps.size()));
    for (std::size_t l = 0; l < irreps.size(); ++l) {
        for (std::size_t p = 0; p < irreps.size(); ++p) mult[l][p] = box_move_multiplicity(irreps[l], irreps[p]);
    }
    TransitionKernel boxes = kernel_from_multiplicities(table, mult);
    const TransitionKernel chars = build_kernel_characters(table);
    if (!(boxes.matrix == chars.matrix)) {
        throw consistency_error("build_kernel_boxes: box-move kernel differs from character kernel for n=" +
                                std::to_string(n));
    }
    return boxes;
}

/// Eigenvalues i/n for i in {0..n-2} and i = n; the multiplicity of i/n is
/// the number of classes with i fixed points.
inline Spectrum spectrum_sn(int n) {
    if (n < 2) throw invalid_input_error("spectrum_sn: n must be at least 2");
    Spectrum s;
    s.entries.push_back({ExactScalar(1), BigInt(1)});
    for (int i = n - 2; i >= 0; --i) s.entries.push_back({make_rational(i, n), count_partitions_no_ones(n - i)});
    return s;
}

/// Closed-form separation distance
///   s(r) = sum_{i=0}^{n-2} (-1)^{n-i} C(n,i) (n-i-1) (i/n)^r,
/// summed over the common denominator n^r in big integers. Valid for any n >= 2.
inline ExactScalar separation_closed_form(int n, int r) {
    if (n < 2 || r < 0) throw invalid_input_error("separation_closed_form: need n >= 2, r >= 0");
    BigInt numerator(0);
    for (int i = 0; i <= n - 2; ++i) {
        const BigInt term = binomial(n, i) * (n - i - 1) * pow_int(BigInt(i), static_cast<unsigned long>(r));
        if ((n - i) % 2 == 0) {
            numerator += term;
        } else {
            numerator -= term;
        }
    }
    return make_rational(numerator, pow_int(BigInt(n), static_cast<unsigned long>(r)));
}

/// 1 - P(n,r,n) - P(n-1,r,n).
inline ExactScalar separation_by_occupancy(int n, int r) {
    return 1 - occupancy_exact(n, r, n) - occupancy_exact(n - 1, r, n);
}

/// Limit profile 1 - e^{-e^{-c}}(1 + e^{-c}) of s(n log n + c n).
inline double separation_profile(double c) { return poisson_not01(c); }

/// The walk for one n: character table, kernel, and the law of K^r from (n)
/// cached for increasing r.
class SnWalk {
public:
    explicit SnWalk(int n)
        : n_(n), table_(character_table(n)), kernel_(build_kernel_characters(table_)) {
        if (n < 2) throw invalid_input_error("SnWalk: n must be at least 2");
        trivial_ = kernel_.index_of(Partition::single_row(n));
        sign_ = kernel_.index_of(Partition::single_column(n));
        laws_.push_back(kernel_.distribution(trivial_, 0));
    }

    int n() const noexcept { return n_; }
    const CharacterTable& table() const noexcept { return table_; }
    const TransitionKernel& kernel() const noexcept { return kernel_; }
    std::size_t trivial_index() const noexcept { return trivial_; }
    std::size_t sign_index() const noexcept { return sign_; }

    /// K^r((n), .)
    const std::vector<ExactScalar>& law(int r) {
        if (r < 0) throw invalid_input_error("SnWalk::law: r must be nonnegative");
        while (static_cast<int>(laws_.size()) <= r) laws_.push_back(row_times(laws_.back(), kernel_.matrix));
        return laws_[static_cast<std::size_t>(r)];
    }

    ExactScalar ratio_by_kernel(int r, std::size_t state) { return law(r)[state] / kernel_.stationary[state]; }

    /// sum_C (fp(C)/n)^r |C| chi^lambda(C) / d_lambda
    ExactScalar ratio_by_spectrum(int r, std::size_t state) const {
        ExactScalar total(0);
        for (std::size_t c = 0; c < table_.classes().size(); ++c) {
            const auto& cls = table_.classes()[c];
            const long chi = table_(state, c);
            if (chi == 0) continue;
            total += pow_exact(make_rational(cls.fixed_points, n_), r) * ExactScalar(cls.class_size * chi);
        }
        return total / table_.dimension(state);
    }

    /// Terms P(a,r,n) (n-a)! d_{lambda/(n-a)} / d_lambda for a = 0..n; each is nonnegative.
    std::vector<ExactScalar> nonnegative_terms(int r, std::size_t state) const {
        const Partition& lambda = table_.irreps()[state];
        std::vector<ExactScalar> terms;
        for (int a = 0; a <= n_; ++a) {
            terms.push_back(occupancy_exact(a, r, n_) * ExactScalar(factorial(n_ - a) * count_skew_syt_row(lambda, n_ - a)) /
                            table_.dimension(state));
        }
        return terms;
    }

    ExactScalar ratio_by_nonnegative_sum(int r, std::size_t state) const { return sum(nonnegative_terms(r, state)); }

    /// K^r((n), lambda) / pi(lambda) by matrix power, spectral sum, and the
    /// nonnegative occupancy-tableaux sum. Throws consistency_error on mismatch.
    ExactScalar ratio_at(int r, const Partition& lambda) {
        const std::size_t s = kernel_.index_of(lambda);
        const ExactScalar by_kernel = ratio_by_kernel(r, s);
        const ExactScalar by_spectrum = ratio_by_spectrum(r, s);
        const ExactScalar by_sum = ratio_by_nonnegative_sum(r, s);
        if (by_kernel != by_spectrum || by_kernel != by_sum) {
            throw consistency_error("ratio_at(" + lambda.to_string() + ", r=" + std::to_string(r) + "): kernel " +
                                    by_kernel.get_str() + ", spectral " + by_spectrum.get_str() + ", nonnegative sum " +
                                    by_sum.get_str());
        }
        return by_kernel;
    }

    /// Multiplicity of lambda in eta^{(x) r}, computed as
    /// K^r((n),lambda) n^r / d_lambda and checked against the character sum
    /// (1/n!) sum_C |C| fp(C)^r chi^lambda(C). Throws consistency_error unless
    /// both agree on a nonnegative integer.
    BigInt tensor_power_multiplicity(int r, const Partition& lambda) {
        const std::size_t s = kernel_.index_of(lambda);
        const ExactScalar from_kernel = law(r)[s] * ExactScalar(pow_int(BigInt(n_), static_cast<unsigned long>(r))) /
                                        table_.dimension(s);
        BigInt total(0);
        for (std::size_t c = 0; c < table_.classes().size(); ++c) {
            const auto& cls = table_.classes()[c];
            total += cls.class_size * pow_int(BigInt(cls.fixed_points), static_cast<unsigned long>(r)) * table_(s, c);
        }
        const ExactScalar from_characters = make_rational(total, factorial(n_));
        if (from_kernel != from_characters) {
            throw consistency_error("tensor power multiplicity of " + lambda.to_string() + " at r=" + std::to_string(r) +
                                    ": kernel " + from_kernel.get_str() + ", characters " + from_characters.get_str());
        }
        const BigInt m = require_integer(from_characters, "tensor_power_multiplicity");
        if (m < 0) throw consistency_error("tensor_power_multiplicity: negative multiplicity");
        return m;
    }

    bool tensor_power_check(int r, const Partition& lambda) {
        try {
            tensor_power_multiplicity(r, lambda);
            return true;
        } catch (const consistency_error&) {
            return false;
        }
    }

    /// State(s) minimizing K^r((n), .)/pi.
    std::vector<std::size_t> minimizers(int r) {
        const auto& p = law(r);
        std::vector<ExactScalar> ratios;
        for (std::size_t s = 0; s < p.size(); ++s) ratios.push_back(p[s] / kernel_.stationary[s]);
        const ExactScalar best = *std::min_element(ratios.begin(), ratios.end());
        std::vector<std::size_t> out;
        for (std::size_t s = 0; s < ratios.size(); ++s) {
            if (ratios[s] == best) out.push_back(s);
        }
        return out;
    }

    /// Separation distance after r steps. Returns the closed form after
    /// checking it against 1 - P(n,r,n) - P(n-1,r,n), against 1 - ratio at
    /// (1^n), and that (1^n) attains the minimum ratio.
    ExactScalar separation(int r) {
        const ExactScalar closed = separation_closed_form(n_, r);
        const ExactScalar occ = separation_by_occupancy(n_, r);
        const ExactScalar at_sign = 1 - ratio_at(r, table_.irreps()[sign_]);
        if (closed != occ || closed != at_sign) {
            throw consistency_error("separation(n=" + std::to_string(n_) + ", r=" + std::to_string(r) +
                                    "): closed form " + closed.get_str() + ", occupancy " + occ.get_str() +
                                    ", ratio at sign " + at_sign.get_str());
        }
        const auto mins = minimizers(r);
        if (std::find(mins.begin(), mins.end(), sign_) == mins.end()) {
            throw consistency_error("separation: (1^n) does not minimize K^r/pi at r=" + std::to_string(r));
        }
        const ExactScalar direct = separation_distance(law(r), kernel_.stationary);
        if (direct != closed) throw consistency_error("separation: max over states disagrees with closed form");
        return closed;
    }

    ExactScalar total_variation(int r) { return tensorwalk::total_variation(law(r), kernel_.stationary); }

private:
    int n_;
    CharacterTable table_;
    TransitionKernel kernel_;
    std::size_t trivial_ = 0;
    std::size_t sign_ = 0;
    std::vector<std::vector<ExactScalar>> laws_;
};

inline ExactScalar ratio_at(int n, int r, const Partition& lambda) { return SnWalk(n).ratio_at(r, lambda); }

inline bool tensor_power_check(int n, int r, const Partition& lambda) { return SnWalk(n).tensor_power_check(r, lambda); }

inline ExactScalar separation_exact(int n, int r) { return SnWalk(n).separation(r); }

inline ExactScalar tv_exact(int n, int r) { return SnWalk(n).total_variation(r); }

}  // namespace tensorwalk
