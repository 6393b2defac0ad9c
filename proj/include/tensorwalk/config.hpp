#pragma once

#include <cstdlib>
#include <iostream>
#include <string>

#include "tensorwalk/errors.hpp"

namespace tensorwalk {

inline constexpr int default_max_n = 10;

/// Upper bound on n for anything that builds a character table or a kernel.
/// TENSORWALK_MAX_N raises it; a warning is printed the first time an
/// override is seen.
inline int max_multi_route_n() {
    static const int limit = [] {
        const char* env = std::getenv("TENSORWALK_MAX_N");
        if (env == nullptr || *env == '\0') return default_max_n;
        int value = default_max_n;
        try {
            value = std::stoi(env);
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring unparsable TENSORWALK_MAX_N='" << env << "'\n";
            return default_max_n;
        }
        if (value != default_max_n) {
            std::cerr << "warning: TENSORWALK_MAX_N=" << value
                      << " overrides the n <= " << default_max_n
                      << " guard; tables grow as p(n) x p(n)\n";
        }
        return value;
    }();
    return limit;
}

inline void check_size_limit(int n, const char* what) {
    if (n < 1 || n > max_multi_route_n()) {
        throw size_limit_error(std::string(what) + ": n=" + std::to_string(n) +
                               " outside 1.." + std::to_string(max_multi_route_n()));
    }
}

}  // namespace tensorwalk
