#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace satfarey {

using std::int64_t;
using int128 = __int128;

// Reduced fraction num/den with 0 <= num <= den, den >= 1.
// Plain aggregate; operations validate the preconditions they rely on.
struct Fraction {
    int64_t num = 0;
    int64_t den = 1;

    friend bool operator==(const Fraction&, const Fraction&) = default;
};

inline bool operator<(const Fraction& a, const Fraction& b) {
    return static_cast<int128>(a.num) * b.den < static_cast<int128>(b.num) * a.den;
}
inline bool operator>(const Fraction& a, const Fraction& b) { return b < a; }
inline bool operator<=(const Fraction& a, const Fraction& b) { return !(b < a); }
inline bool operator>=(const Fraction& a, const Fraction& b) { return !(a < b); }

inline double to_double(const Fraction& f) {
    return static_cast<double>(f.num) / static_cast<double>(f.den);
}

inline std::string to_string(const Fraction& f) {
    return std::to_string(f.num) + "/" + std::to_string(f.den);
}

// a2/q2 - a1/q1 == 1/(q1*q2), the neighbor condition for Farey and parent pairs.
inline bool unimodular_pair(const Fraction& a, const Fraction& b) {
    return static_cast<int128>(b.num) * a.den - static_cast<int128>(a.num) * b.den == 1;
}

// Extended Euclid. Returns x in [1, q) with a*x == 1 (mod q).
// Requires 1 <= a < q; throws std::invalid_argument if gcd(a, q) != 1 or out of range.
int64_t mod_inverse(int64_t a, int64_t q);

// Throws if num/den is not a reduced fraction in [0, 1].
void require_reduced(const Fraction& f);

// Height of a fraction: den + num + mod_inverse(num, den), with the two
// sentinel values h(0/1) = 1 and h(1/1) = 3. A fraction a/q belongs to the
// saturated set of order Q exactly when h(a/q) <= Q.
int64_t h_value(const Fraction& f);

// Height computed from the right Farey neighbor instead of a fresh inverse:
// for consecutive f < next the inverse of f.num mod f.den equals
// (1 + floor(next.den / f.den)) * f.den - next.den. O(1) per element on walks.
int64_t h_value_with_neighbor(const Fraction& f, const Fraction& next);

// (a1+a2)/(q1+q2) for a unimodular pair; throws otherwise.
Fraction mediant(const Fraction& left, const Fraction& right);

// Successor of cur in the Farey sequence of order Q, given the predecessor.
// Throws if cur == 1/1 or if (prev, cur) is not a unimodular pair with den <= Q.
Fraction next_farey(int64_t Q, const Fraction& prev, const Fraction& cur);

// True iff f.den <= Q and h_value(f) <= Q. Callers pass fractions in (0, 1].
bool is_saturated(const Fraction& f, int64_t Q);

// Best rational approximation with denominator <= max_den (continued fraction
// convergents / semiconvergents), for converting real-valued thresholds to
// exact comparisons. x must lie in [0, 1].
Fraction rational_from_real(double x, int64_t max_den);

// Parses "a/b" or a decimal in [0, 1] (decimals get denominator <= 1000000).
Fraction parse_fraction(const std::string& text);

} // namespace satfarey
