#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "tensorwalk/errors.hpp"

namespace tensorwalk {

/// Weakly decreasing list of positive integers. Indexes Irr(S_n), cycle types
/// and the entries of GL partition families.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) throw invalid_input_error("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1]) {
                throw invalid_input_error("partition parts must be weakly decreasing");
            }
        }
        size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Sorts and drops zeros before validating.
    static Partition from_unsorted(std::vector<int> parts) {
        std::erase(parts, 0);
        std::sort(parts.begin(), parts.end(), std::greater<>());
        return Partition(std::move(parts));
    }

    static Partition single_row(int k) { return k == 0 ? Partition() : Partition({k}); }

    static Partition single_column(int k) { return Partition(std::vector<int>(static_cast<std::size_t>(k), 1)); }

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const noexcept { return size_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }

    /// Row i (0-based); 0 past the last row.
    int operator[](int i) const noexcept {
        return i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
    }

    /// Number of parts equal to j.
    int multiplicity(int j) const noexcept {
        return static_cast<int>(std::count(parts_.begin(), parts_.end(), j));
    }

    bool contains(const Partition& inner) const noexcept {
        if (inner.length() > length()) return false;
        for (int i = 0; i < inner.length(); ++i) {
            if (inner[i] > (*this)[i]) return false;
        }
        return true;
    }

    Partition conjugate() const {
        std::vector<int> out;
        for (int j = 1; j <= (*this)[0]; ++j) {
            int count = 0;
            while (count < length() && (*this)[count] >= j) ++count;
            out.push_back(count);
        }
        return Partition(std::move(out));
    }

    /// Partitions obtained by deleting one corner box.
    std::vector<Partition> remove_one_box() const {
        std::vector<Partition> out;
        for (int i = 0; i < length(); ++i) {
            if ((*this)[i] > (*this)[i + 1]) {
                auto parts = parts_;
                if (--parts[static_cast<std::size_t>(i)] == 0) parts.pop_back();
                out.emplace_back(std::move(parts));
            }
        }
        return out;
    }

    /// Partitions obtained by adding one box at an outer corner.
    std::vector<Partition> add_one_box() const {
        std::vector<Partition> out;
        for (int i = 0; i <= length(); ++i) {
            if (i == 0 || (*this)[i] < (*this)[i - 1]) {
                auto parts = parts_;
                if (i == length()) {
                    parts.push_back(1);
                } else {
                    ++parts[static_cast<std::size_t>(i)];
                }
                out.emplace_back(std::move(parts));
            }
        }
        return out;
    }

    /// "[2,1]"; the empty partition is "[]".
    std::string to_string() const {
        std::ostringstream os;
        os << '[';
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) os << ',';
            os << parts_[i];
        }
        os << ']';
        return os.str();
    }

    /// Lexicographic on parts; enumerate_partitions lists in descending order.
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }
    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

inline Partition parse_partition(const std::string& text) {
    if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
        throw invalid_input_error("partition must look like [a,b,...]: " + text);
    }
    std::vector<int> parts;
    std::stringstream ss(text.substr(1, text.size() - 2));
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw invalid_input_error("empty part in " + text);
        parts.push_back(std::stoi(item));
    }
    return Partition(std::move(parts));
}

/// lambda / mu. Counting functions return 0 when inner is not contained in outer.
struct SkewShape {
    Partition outer;
    Partition inner;

    bool valid() const noexcept { return outer.contains(inner); }
    int size() const noexcept { return outer.size() - inner.size(); }
};

namespace detail {
inline void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                           std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        partitions_rec(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}
}  // namespace detail

/// All partitions of n in lexicographically descending order:
/// (n), (n-1,1), (n-2,2), (n-2,1,1), ..., (1^n).
inline std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw invalid_input_error("enumerate_partitions: n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> prefix;
    detail::partitions_rec(n, n, prefix, out);
    return out;
}

}  // namespace tensorwalk
