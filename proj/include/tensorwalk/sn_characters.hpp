#pragma once

// Character theory of S_n for small n: class data, the character table by
// Murnaghan-Nakayama, and the fixed-point character sums that rewrite the
// walk's power as a sum of nonnegative terms.

#include <algorithm>
#include <cstddef>
#include <map>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tensorwalk/combinatorics.hpp"
#include "tensorwalk/config.hpp"
#include "tensorwalk/errors.hpp"
#include "tensorwalk/exact.hpp"
#include "tensorwalk/partition.hpp"

namespace tensorwalk {

struct ClassDescriptor {
    Partition cycle_type;
    BigInt class_size;
    int fixed_points = 0;
    std::map<int, int> cycle_counts;  // j -> number of j-cycles
    int sign = 1;
    int num_cycles = 0;
};

/// |C| = n! / prod_j j^{n_j} n_j!
inline ClassDescriptor describe_class(const Partition& cycle_type) {
    ClassDescriptor c;
    c.cycle_type = cycle_type;
    for (int part : cycle_type.parts()) ++c.cycle_counts[part];
    BigInt centralizer(1);
    for (const auto& [j, count] : c.cycle_counts) {
        centralizer *= pow_int(BigInt(j), static_cast<unsigned long>(count)) * factorial(count);
    }
    BigInt size;
    const BigInt total = factorial(cycle_type.size());
    mpz_divexact(size.get_mpz_t(), total.get_mpz_t(), centralizer.get_mpz_t());
    c.class_size = size;
    c.fixed_points = cycle_type.multiplicity(1);
    c.num_cycles = cycle_type.length();
    c.sign = (cycle_type.size() - c.num_cycles) % 2 == 0 ? 1 : -1;
    return c;
}

/// One descriptor per partition of n, in enumerate_partitions order.
inline std::vector<ClassDescriptor> conjugacy_classes(int n) {
    check_size_limit(n, "conjugacy_classes");
    std::vector<ClassDescriptor> out;
    for (const auto& p : enumerate_partitions(n)) out.push_back(describe_class(p));
    return out;
}

namespace detail {

// Beta-set (first-column hook lengths) of lambda padded to `len` rows.
inline std::vector<int> beta_set(const Partition& lambda, int len) {
    std::vector<int> beta(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lambda[i] + (len - 1 - i);
    return beta;
}

inline Partition from_beta_set(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<>());
    const int len = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int i = 0; i < len; ++i) {
        const int part = beta[static_cast<std::size_t>(i)] - (len - 1 - i);
        if (part > 0) parts.push_back(part);
    }
    return Partition(std::move(parts));
}

/// Murnaghan-Nakayama with memoization on (shape, index of next cycle).
class MnEvaluator {
public:
    explicit MnEvaluator(const Partition& cycle_type) : cycles_(cycle_type.parts()) {}

    long value(const Partition& lambda) { return eval(lambda, 0); }

private:
    long eval(const Partition& lambda, std::size_t next) {
        if (next == cycles_.size()) return lambda.empty() ? 1 : 0;
        auto key = std::make_pair(lambda.parts(), next);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        const int k = cycles_[next];
        const int len = lambda.length();
        const auto beta = beta_set(lambda, len);
        const std::set<int> present(beta.begin(), beta.end());
        long total = 0;
        // Removing a rim hook of length k moves one bead from b to b-k; its
        // height is the number of beads strictly in between.
        for (std::size_t idx = 0; idx < beta.size(); ++idx) {
            const int b = beta[idx];
            if (b - k < 0 || present.count(b - k)) continue;
            int between = 0;
            for (int x : beta) between += (x > b - k && x < b) ? 1 : 0;
            auto moved = beta;
            moved[idx] = b - k;
            const long sub = eval(from_beta_set(std::move(moved)), next + 1);
            total += (between % 2 == 0) ? sub : -sub;
        }
        memo_.emplace(std::move(key), total);
        return total;
    }

    std::vector<int> cycles_;
    std::map<std::pair<std::vector<int>, std::size_t>, long> memo_;
};

}  // namespace detail

/// chi^lambda at the class with the given cycle type.
inline long character_value(const Partition& lambda, const Partition& cycle_type) {
    if (lambda.size() != cycle_type.size()) throw invalid_input_error("character_value: sizes differ");
    return detail::MnEvaluator(cycle_type).value(lambda);
}

/// Integer character table of S_n. Rows and columns both follow
/// enumerate_partitions(n).
class CharacterTable {
public:
    explicit CharacterTable(int n) : n_(n), irreps_(enumerate_partitions(n)), classes_(conjugacy_classes(n)) {
        // cycle type (1^n) sorts last
        identity_column_ = classes_.size() - 1;
        values_.assign(irreps_.size() * classes_.size(), 0);
        for (std::size_t c = 0; c < classes_.size(); ++c) {
            detail::MnEvaluator mn(classes_[c].cycle_type);
            for (std::size_t r = 0; r < irreps_.size(); ++r) values_[r * classes_.size() + c] = mn.value(irreps_[r]);
        }
    }

    int n() const noexcept { return n_; }
    const std::vector<Partition>& irreps() const noexcept { return irreps_; }
    const std::vector<ClassDescriptor>& classes() const noexcept { return classes_; }

    long operator()(std::size_t irrep, std::size_t cls) const { return values_[irrep * classes_.size() + cls]; }

    std::size_t index_of(const Partition& lambda) const {
        auto it = std::find(irreps_.begin(), irreps_.end(), lambda);
        if (it == irreps_.end()) throw invalid_input_error("partition " + lambda.to_string() + " is not an irrep of S_" + std::to_string(n_));
        return static_cast<std::size_t>(it - irreps_.begin());
    }

    /// Dimension d_lambda, read from the identity column.
    long dimension(std::size_t irrep) const { return (*this)(irrep, identity_column_); }

    std::size_t identity_column() const noexcept { return identity_column_; }

    /// CSV: header "lambda,<cycle types>", then one row per irrep.
    void write_csv(std::ostream& os) const {
        os << "lambda";
        for (const auto& c : classes_) os << ",\"" << c.cycle_type.to_string() << '"';
        os << '\n';
        for (std::size_t r = 0; r < irreps_.size(); ++r) {
            os << '"' << irreps_[r].to_string() << '"';
            for (std::size_t c = 0; c < classes_.size(); ++c) os << ',' << (*this)(r, c);
            os << '\n';
        }
    }

private:
    int n_;
    std::vector<Partition> irreps_;
    std::vector<ClassDescriptor> classes_;
    std::vector<long> values_;
    std::size_t identity_column_ = 0;
};

inline CharacterTable character_table(int n) {
    check_size_limit(n, "character_table");
    return CharacterTable(n);
}

/// Sum of chi^lambda(g) over permutations with exactly i fixed points, by
/// summing over classes and independently by the skew-tableaux formula
///   (n!/i!) sum_j (-1)^j / j! * d_{lambda/(n-i-j)}.
/// Throws consistency_error if the two disagree.
inline BigInt fixed_point_character_sum(const CharacterTable& table, const Partition& lambda, int i) {
    const int n = table.n();
    if (lambda.size() != n) throw invalid_input_error("fixed_point_character_sum: |lambda| != n");
    if (i < 0 || i > n) throw invalid_input_error("fixed_point_character_sum: i outside 0..n");
    const std::size_t row = table.index_of(lambda);

    BigInt by_classes(0);
    for (std::size_t c = 0; c < table.classes().size(); ++c) {
        const auto& cls = table.classes()[c];
        if (cls.fixed_points == i) by_classes += cls.class_size * table(row, c);
    }

    ExactScalar inner(0);
    for (int j = 0; j <= n - i; ++j) {
        const ExactScalar term = make_rational(BigInt(j % 2 == 0 ? 1 : -1), factorial(j)) *
                                 ExactScalar(count_skew_syt_row(lambda, n - i - j));
        inner += term;
    }
    const ExactScalar by_tableaux = make_rational(factorial(n), factorial(i)) * inner;

    if (by_tableaux != ExactScalar(by_classes)) {
        throw consistency_error("fixed_point_character_sum: class sum " + by_classes.get_str() +
                                " != tableaux formula " + by_tableaux.get_str() + " for " + lambda.to_string() +
                                ", i=" + std::to_string(i));
    }
    return by_classes;
}

/// Sum of sign(g) over permutations of S_n with exactly i fixed points:
/// (-1)^{n-i+1} C(n,i) (n-i-1) for 0 <= i <= n-1, and 1 for i = n.
inline BigInt signed_fixed_point_sum(int n, int i) {
    if (n < 1 || i < 0 || i > n) throw invalid_input_error("signed_fixed_point_sum: need 0 <= i <= n");
    if (i == n) return BigInt(1);
    const BigInt magnitude = binomial(n, i) * (n - i - 1);
    return (n - i + 1) % 2 == 0 ? magnitude : BigInt(-magnitude);
}

/// Multiplicity of rho in lambda (x) eta, where eta is a real class function
/// given by its values on table.classes(). Throws consistency_error unless
/// the inner product is a nonnegative integer.
inline BigInt tensor_multiplicity(const CharacterTable& table, const Partition& lambda,
                                  std::span<const ExactScalar> eta_values, const Partition& rho) {
    if (eta_values.size() != table.classes().size()) throw invalid_input_error("tensor_multiplicity: eta has wrong length");
    const std::size_t l = table.index_of(lambda);
    const std::size_t p = table.index_of(rho);
    ExactScalar total(0);
    for (std::size_t c = 0; c < table.classes().size(); ++c) {
        total += ExactScalar(table.classes()[c].class_size * table(l, c) * table(p, c)) * eta_values[c];
    }
    total /= ExactScalar(factorial(table.n()));
    const BigInt m = require_integer(total, "tensor_multiplicity");
    if (m < 0) throw consistency_error("tensor_multiplicity: negative multiplicity " + m.get_str());
    return m;
}

/// Character of the defining permutation representation: fixed points per class.
inline std::vector<ExactScalar> defining_character(const CharacterTable& table) {
    std::vector<ExactScalar> out;
    for (const auto& c : table.classes()) out.emplace_back(c.fixed_points);
    return out;
}

}  // namespace tensorwalk
