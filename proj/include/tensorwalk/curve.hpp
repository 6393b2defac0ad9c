#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "tensorwalk/exact.hpp"

namespace tensorwalk {

struct CurveRecord {
    int r = 0;
    ExactScalar value;
    std::string route;  // agreeing routes joined by '+'
};

/// Distance-to-stationarity values over r, for one n (and q for GL).
struct SeparationCurve {
    int n = 0;
    std::optional<long> q;
    std::vector<CurveRecord> records;
};

/// Header "r,s_exact,s_float,route" (plus ",q" for GL curves). `value_name`
/// replaces "s" for other distances, e.g. "tv".
inline void write_curve_csv(std::ostream& os, const SeparationCurve& curve, const std::string& value_name = "s") {
    os << "r," << value_name << "_exact," << value_name << "_float,route";
    if (curve.q) os << ",q";
    os << '\n';
    for (const auto& rec : curve.records) {
        os << rec.r << ',' << to_fraction_string(rec.value) << ',' << format_double(to_double(rec.value)) << ','
           << rec.route;
        if (curve.q) os << ',' << *curve.q;
        os << '\n';
    }
}

}  // namespace tensorwalk
