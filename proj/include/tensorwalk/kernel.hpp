#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tensorwalk/errors.hpp"
#include "tensorwalk/exact.hpp"
#include "tensorwalk/matrix.hpp"
#include "tensorwalk/partition.hpp"

namespace tensorwalk {

/// Square stochastic matrix over an ordered state list, with its stationary law.
struct TransitionKernel {
    std::vector<Partition> states;
    ExactMatrix matrix;
    std::vector<ExactScalar> stationary;

    std::size_t size() const noexcept { return states.size(); }

    std::size_t index_of(const Partition& p) const {
        auto it = std::find(states.begin(), states.end(), p);
        if (it == states.end()) throw invalid_input_error("state " + p.to_string() + " not in kernel");
        return static_cast<std::size_t>(it - states.begin());
    }

    bool rows_sum_to_one() const {
        for (std::size_t i = 0; i < size(); ++i) {
            if (sum(matrix.row(i)) != 1) return false;
        }
        return true;
    }

    bool detailed_balance() const {
        for (std::size_t i = 0; i < size(); ++i) {
            for (std::size_t j = i + 1; j < size(); ++j) {
                if (stationary[i] * matrix(i, j) != stationary[j] * matrix(j, i)) return false;
            }
        }
        return true;
    }

    /// Throws consistency_error unless rows and stationary sum to 1 and
    /// detailed balance holds for every pair.
    void validate() const {
        if (!rows_sum_to_one()) throw consistency_error("kernel rows do not sum to 1");
        if (sum(stationary) != 1) throw consistency_error("stationary vector does not sum to 1");
        if (!detailed_balance()) throw consistency_error("kernel violates detailed balance");
    }

    /// Law after r steps from state `start`.
    std::vector<ExactScalar> distribution(std::size_t start, int r) const {
        std::vector<ExactScalar> v(size());
        v[start] = 1;
        for (int step = 0; step < r; ++step) v = row_times(v, matrix);
        return v;
    }
};

struct SpectrumEntry {
    ExactScalar eigenvalue;
    std::optional<BigInt> multiplicity;  // absent when unknown
};

/// Distinct eigenvalues, sorted descending.
struct Spectrum {
    std::vector<SpectrumEntry> entries;

    std::vector<ExactScalar> eigenvalues() const {
        std::vector<ExactScalar> out;
        for (const auto& e : entries) out.push_back(e.eigenvalue);
        return out;
    }
};

/// Total variation distance (1/2) sum |p - q|.
inline ExactScalar total_variation(const std::vector<ExactScalar>& p, const std::vector<ExactScalar>& q) {
    if (p.size() != q.size()) throw invalid_input_error("total_variation: length mismatch");
    ExactScalar total(0);
    for (std::size_t i = 0; i < p.size(); ++i) total += abs(p[i] - q[i]);
    return total / 2;
}

/// max_x (1 - p(x)/q(x)).
inline ExactScalar separation_distance(const std::vector<ExactScalar>& p, const std::vector<ExactScalar>& q) {
    if (p.size() != q.size() || p.empty()) throw invalid_input_error("separation_distance: bad lengths");
    ExactScalar best = 1 - p[0] / q[0];
    for (std::size_t i = 1; i < p.size(); ++i) best = std::max(best, ExactScalar(1 - p[i] / q[i]));
    return best;
}

}  // namespace tensorwalk
