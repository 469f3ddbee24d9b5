#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace minsec {

// Exact arbitrary-precision arithmetic. Rationals are always stored in
// lowest terms with a positive denominator; the canonical zero is 0/1.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(long long num, long long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    // Division keeps the canonical form (lowest terms, positive denominator);
    // the raw two-argument constructor requires pre-normalized input.
    return Rational(Integer(num)) / Rational(Integer(den));
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    return Rational(num) / Rational(den);
}

inline std::string to_string(const Rational& q) { return q.str(); }
inline std::string to_string(const Integer& n) { return n.str(); }

inline Rational pow_rational(const Rational& base, int exp) {
    if (exp < 0) {
        if (base == 0) throw std::invalid_argument("zero to a negative power");
        return Rational(1) / pow_rational(base, -exp);
    }
    Rational result(1), b = base;
    int e = exp;
    while (e > 0) {
        if (e & 1) result *= b;
        b *= b;
        e >>= 1;
    }
    return result;
}

inline Integer factorial(int n) {
    Integer r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Integer binomial(const Integer& n, int k) {
    if (k < 0) return 0;
    if (n >= 0 && Integer(k) > n) return 0;
    Integer num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    Integer q = num / den;
    if (q * den != num) throw std::logic_error("binomial: non-integral quotient");
    return q;
}

inline Integer binomial(int n, int k) { return binomial(Integer(n), k); }

// Multinomial coefficient (sum parts)! / prod(parts[i]!).
inline Integer multinomial(const std::vector<int>& parts) {
    int total = 0;
    Integer r = 1;
    for (int p : parts) {
        if (p < 0) throw std::invalid_argument("multinomial: negative part");
        total += p;
        r *= binomial(total, p);
    }
    return r;
}

}  // namespace minsec
