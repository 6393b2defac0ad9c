#pragma once

// Exact scalar arithmetic shared by every module: GMP-backed rationals and
// integers plus the handful of helpers the formulas need (powers with
// negative exponents, factorials, binomials, num/den serialization).

#include <gmpxx.h>

#include <cstdint>
#include <cstdio>
#include <span>
#include <string>
#include <vector>

#include "tensorwalk/errors.hpp"

namespace tensorwalk {

using BigInt = mpz_class;

/// Arbitrary-precision rational. gmpxx keeps results of arithmetic in lowest
/// terms with a positive denominator as long as the inputs are canonical, so
/// every constructor below canonicalizes.
using ExactScalar = mpq_class;

inline ExactScalar make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw invalid_input_error("rational with zero denominator");
    ExactScalar x(num, den);
    x.canonicalize();
    return x;
}

inline ExactScalar make_rational(long num, long den = 1) {
    return make_rational(BigInt(num), BigInt(den));
}

/// x^e for any integer e, with 0^0 = 1. Throws on 0^e with e < 0.
inline ExactScalar pow_exact(const ExactScalar& x, long e) {
    if (e == 0) return ExactScalar(1);
    if (x == 0) {
        if (e < 0) throw invalid_input_error("zero raised to a negative power");
        return ExactScalar(0);
    }
    const unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), k);
    return e < 0 ? make_rational(den, num) : make_rational(num, den);
}

inline BigInt pow_int(const BigInt& base, unsigned long e) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

inline BigInt factorial(long n) {
    if (n < 0) throw invalid_input_error("factorial of a negative integer");
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

/// Binomial coefficient, 0 outside 0 <= k <= n.
inline BigInt binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return BigInt(0);
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

inline bool is_integer(const ExactScalar& x) { return x.get_den() == 1; }

/// Returns the integer value of x, throwing consistency_error if x has a
/// nontrivial denominator.
inline BigInt require_integer(const ExactScalar& x, const char* what) {
    if (!is_integer(x)) {
        throw consistency_error(std::string(what) + ": expected an integer, got " + x.get_str());
    }
    return x.get_num();
}

/// "num/den" with den always present, e.g. "1/1", "-3/8".
inline std::string to_fraction_string(const ExactScalar& x) {
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

inline ExactScalar parse_fraction(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return make_rational(BigInt(text), BigInt(1));
    return make_rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
}

/// Correctly rounded conversion for the magnitudes used here; mpq_get_d
/// truncates, which is within one ulp.
inline double to_double(const ExactScalar& x) { return x.get_d(); }

/// 17 significant digits, enough to round-trip a double.
inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline ExactScalar sum(std::span<const ExactScalar> xs) {
    ExactScalar total(0);
    for (const auto& x : xs) total += x;
    return total;
}

}  // namespace tensorwalk
