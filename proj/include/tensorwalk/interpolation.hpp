#pragma once

// Lagrange-Sylvester interpolation for reversible chains: K^r as a polynomial
// of degree m-1 in K from the m distinct eigenvalues, and the eigenvalue-only
// separation formula for a pair of states at maximal distance.

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "tensorwalk/errors.hpp"
#include "tensorwalk/exact.hpp"
#include "tensorwalk/kernel.hpp"
#include "tensorwalk/matrix.hpp"

namespace tensorwalk {

/// Pairwise distinct exact eigenvalues.
class EigenvalueList {
public:
    EigenvalueList() = default;

    explicit EigenvalueList(std::vector<ExactScalar> values) : values_(std::move(values)) {
        for (std::size_t i = 0; i < values_.size(); ++i) {
            for (std::size_t j = i + 1; j < values_.size(); ++j) {
                if (values_[i] == values_[j]) {
                    throw invalid_input_error("eigenvalue " + values_[i].get_str() + " repeated");
                }
            }
        }
    }

    static EigenvalueList from(const Spectrum& s) { return EigenvalueList(s.eigenvalues()); }

    const std::vector<ExactScalar>& values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }

    bool contains_unit() const { return std::find(values_.begin(), values_.end(), ExactScalar(1)) != values_.end(); }

    /// Everything except the eigenvalue 1.
    std::vector<ExactScalar> non_unit() const {
        std::vector<ExactScalar> out;
        for (const auto& v : values_) {
            if (v != 1) out.push_back(v);
        }
        return out;
    }

    EigenvalueList with(const ExactScalar& extra) const {
        auto v = values_;
        v.push_back(extra);
        return EigenvalueList(std::move(v));
    }

private:
    std::vector<ExactScalar> values_;
};

namespace detail {
/// Elementary symmetric polynomials e_0..e_k of `xs`.
inline std::vector<ExactScalar> elementary_symmetric(const std::vector<ExactScalar>& xs) {
    std::vector<ExactScalar> e(xs.size() + 1);
    e[0] = 1;
    for (std::size_t t = 0; t < xs.size(); ++t) {
        for (std::size_t k = t + 1; k >= 1; --k) e[k] += xs[t] * e[k - 1];
    }
    return e;
}
}  // namespace detail

/// gamma_1..gamma_m with K^r = sum_a gamma_a K^{a-1} for every diagonalizable
/// K whose distinct eigenvalues are exactly `eigs`. Entry a-1 of the result
/// multiplies K^{a-1}.
inline std::vector<ExactScalar> interpolation_coefficients(const EigenvalueList& eigs, int r) {
    if (r < 0) throw invalid_input_error("interpolation_coefficients: r must be nonnegative");
    const auto& lam = eigs.values();
    const std::size_t m = lam.size();
    std::vector<ExactScalar> gamma(m);
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<ExactScalar> others;
        ExactScalar denom(1);
        for (std::size_t j = 0; j < m; ++j) {
            if (j == i) continue;
            others.push_back(lam[j]);
            denom *= lam[i] - lam[j];
        }
        const ExactScalar weight = pow_exact(lam[i], r) / denom;
        const auto e = detail::elementary_symmetric(others);
        for (std::size_t a = 1; a <= m; ++a) {
            const ExactScalar term = weight * e[m - a];
            if ((m - a) % 2 == 0) {
                gamma[a - 1] += term;
            } else {
                gamma[a - 1] -= term;
            }
        }
    }
    return gamma;
}

/// sum_a gamma_a K^{a-1}.
inline ExactMatrix interpolate_power(const ExactMatrix& k, const EigenvalueList& eigs, int r) {
    const auto gamma = interpolation_coefficients(eigs, r);
    ExactMatrix out(k.rows(), k.cols());
    ExactMatrix power = ExactMatrix::identity(k.rows());
    for (std::size_t a = 0; a < gamma.size(); ++a) {
        if (a > 0) power = power * k;
        out = out + gamma[a] * power;
    }
    return out;
}

/// 1 - K^r(x,y)/pi(y) for a reversible ergodic chain whose distinct
/// eigenvalues are `eigs` and whose states x,y are at distance
/// eigs.size()-1. The caller certifies the distance hypothesis.
inline ExactScalar separation_from_spectrum(const EigenvalueList& eigs, int r) {
    if (r < 0) throw invalid_input_error("separation_from_spectrum: r must be nonnegative");
    if (!eigs.contains_unit()) throw invalid_input_error("separation_from_spectrum: eigenvalue 1 missing");
    const auto lam = eigs.non_unit();
    for (const auto& l : lam) {
        if (l <= -1 || l >= 1) {
            throw invalid_input_error("separation_from_spectrum: eigenvalue " + l.get_str() + " outside (-1,1)");
        }
    }
    ExactScalar total(0);
    for (std::size_t i = 0; i < lam.size(); ++i) {
        ExactScalar prod(1);
        for (std::size_t j = 0; j < lam.size(); ++j) {
            if (j != i) prod *= (1 - lam[j]) / (lam[i] - lam[j]);
        }
        total += pow_exact(lam[i], r) * prod;
    }
    return total;
}

/// Degree of the minimal polynomial of m: the first k with m^k in
/// span(I, m, ..., m^{k-1}). For a diagonalizable matrix this is the number
/// of distinct eigenvalues, obtained without an eigensolver.
inline std::size_t minimal_polynomial_degree(const ExactMatrix& m) {
    std::vector<std::vector<ExactScalar>> rows;
    ExactMatrix power = ExactMatrix::identity(m.rows());
    for (std::size_t k = 0; k <= m.rows(); ++k) {
        rows.emplace_back(power.flat().begin(), power.flat().end());
        if (rank_of_rows(rows) < rows.size()) return k;
        power = power * m;
    }
    return m.rows();
}

namespace detail {
inline int distance_search(const TransitionKernel& kernel, std::size_t x, std::size_t y, std::size_t bound) {
    std::vector<ExactScalar> v(kernel.size());
    v[x] = 1;
    const std::size_t horizon = std::max(bound, kernel.size());
    for (std::size_t r = 0; r <= horizon; ++r) {
        if (v[y] > 0) {
            if (r > bound) {
                throw consistency_error("dist=" + std::to_string(r) + " exceeds the eigenvalue bound " +
                                        std::to_string(bound));
            }
            return static_cast<int>(r);
        }
        v = row_times(v, kernel.matrix);
    }
    throw precondition_error("verify_distance: target state unreachable; kernel is not ergodic");
}
}  // namespace detail

/// Smallest r with K^r(x,y) > 0, checked against dist <= (#distinct eigenvalues - 1).
inline int verify_distance(const TransitionKernel& kernel, std::size_t x, std::size_t y, const EigenvalueList& eigs) {
    return detail::distance_search(kernel, x, y, eigs.size() - 1);
}

/// As above, with the number of distinct eigenvalues taken from the minimal
/// polynomial of the kernel.
inline int verify_distance(const TransitionKernel& kernel, std::size_t x, std::size_t y) {
    return detail::distance_search(kernel, x, y, minimal_polynomial_degree(kernel.matrix) - 1);
}

/// Birth-death chain on {0..d}: down a_x (x >= 1), hold b_x, up c_x (x < d).
/// down[0] and up[d] are stored as 0.
class BirthDeathChain {
public:
    BirthDeathChain(std::vector<ExactScalar> down, std::vector<ExactScalar> hold, std::vector<ExactScalar> up)
        : down_(std::move(down)), hold_(std::move(hold)), up_(std::move(up)) {
        const std::size_t len = hold_.size();
        if (len == 0 || down_.size() != len || up_.size() != len) {
            throw invalid_input_error("birth-death chain: down/hold/up must have equal nonzero length");
        }
        if (down_.front() != 0 || up_.back() != 0) {
            throw invalid_input_error("birth-death chain: down[0] and up[d] must be 0");
        }
        for (std::size_t x = 0; x < len; ++x) {
            if (down_[x] + hold_[x] + up_[x] != 1) throw invalid_input_error("birth-death chain: row " + std::to_string(x) + " does not sum to 1");
            if (hold_[x] < 0) throw invalid_input_error("birth-death chain: negative holding probability");
            if (x > 0 && down_[x] <= 0) throw invalid_input_error("birth-death chain: a_x must be positive");
            if (x + 1 < len && up_[x] <= 0) throw invalid_input_error("birth-death chain: c_x must be positive");
        }
    }

    std::size_t d() const noexcept { return hold_.size() - 1; }

    /// c_x + a_{x+1} <= 1 for all 0 <= x < d.
    bool monotone() const {
        for (std::size_t x = 0; x < d(); ++x) {
            if (up_[x] + down_[x + 1] > 1) return false;
        }
        return true;
    }

    ExactMatrix matrix() const {
        ExactMatrix m(d() + 1, d() + 1);
        for (std::size_t x = 0; x <= d(); ++x) {
            m(x, x) = hold_[x];
            if (x > 0) m(x, x - 1) = down_[x];
            if (x < d()) m(x, x + 1) = up_[x];
        }
        return m;
    }

    /// pi(x) = Z prod_{i=1}^x c_{i-1}/a_i.
    std::vector<ExactScalar> stationary() const {
        std::vector<ExactScalar> pi(d() + 1);
        pi[0] = 1;
        for (std::size_t x = 1; x <= d(); ++x) pi[x] = pi[x - 1] * up_[x - 1] / down_[x];
        const ExactScalar z = sum(pi);
        for (auto& p : pi) p /= z;
        return pi;
    }

    TransitionKernel as_kernel() const {
        TransitionKernel k;
        for (std::size_t x = 0; x <= d(); ++x) k.states.push_back(Partition::single_row(static_cast<int>(x)));
        k.matrix = matrix();
        k.stationary = stationary();
        return k;
    }

private:
    std::vector<ExactScalar> down_, hold_, up_;
};

/// Separation distance at time r of a monotone birth-death chain started at
/// 0, from its eigenvalues alone. The supplied eigenvalues are validated by
/// exact singularity of K - lambda I, and the result is checked against
/// 1 - K^r(0,d)/pi(d) computed by direct powering.
inline ExactScalar birth_death_separation(const BirthDeathChain& chain, const EigenvalueList& eigs, int r) {
    if (!chain.monotone()) throw precondition_error("birth_death_separation: chain is not monotone");
    if (eigs.size() != chain.d() + 1) {
        throw invalid_input_error("birth_death_separation: expected " + std::to_string(chain.d() + 1) + " eigenvalues");
    }
    const ExactMatrix k = chain.matrix();
    for (const auto& lam : eigs.values()) {
        ExactMatrix shifted = k;
        for (std::size_t i = 0; i < shifted.rows(); ++i) shifted(i, i) -= lam;
        if (!is_singular(shifted)) {
            throw invalid_input_error("birth_death_separation: " + lam.get_str() + " is not an eigenvalue");
        }
    }
    const ExactScalar spectral = separation_from_spectrum(eigs, r);

    const TransitionKernel kernel = chain.as_kernel();
    const auto law = kernel.distribution(0, r);
    const ExactScalar direct = 1 - law[chain.d()] / kernel.stationary[chain.d()];
    if (spectral != direct) {
        throw consistency_error("birth_death_separation: eigenvalue formula " + spectral.get_str() +
                                " != direct power " + direct.get_str());
    }
    return spectral;
}

}  // namespace tensorwalk
