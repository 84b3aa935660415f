#pragma once

#include <functional>
#include <span>
#include <vector>

#include "satfarey/fraction.hpp"

namespace satfarey {

// Element of the matrix monoid: determinant 1, entries chained as
// a >= b >= d >= 1 and a >= c >= d. Every member projects to the reduced
// fraction d/b in (0, 1] and arises from it by the k-parametrized lift below.
struct MonoidMatrix {
    int64_t a = 1, b = 0, c = 0, d = 1;

    int64_t trace() const { return a + d; }
    friend bool operator==(const MonoidMatrix&, const MonoidMatrix&) = default;
};

bool in_monoid(int64_t a, int64_t b, int64_t c, int64_t d);
inline bool in_monoid(const MonoidMatrix& m) { return in_monoid(m.a, m.b, m.c, m.d); }

// Projection M -> d/b. Requires in_monoid(m).
Fraction fraction_of(const MonoidMatrix& m);

// k-th lift of d/b: with dbar the inverse of d mod b, the matrix
// (dbar + k*b, b; (d*dbar - 1)/b + k*d, d), trace d + dbar + k*b.
// k = 1 gives the minimal trace, which equals h_value(d/b).
// The fraction 1/1 lifts with dbar = 1 to (1+k, 1, k, 1). Requires k >= 1
// and a fraction in (0, 1]; rejects 0/1.
MonoidMatrix matrix_from_fraction(const Fraction& f, int64_t k);

// Visits every monoid element with trace <= Q exactly once, iterating the
// (b, d, k) parametrization: b ascending, then d, then k.
void for_each_matrix(int64_t Q, const std::function<void(const MonoidMatrix&)>& visit);

// Materialized variant for small Q.
std::vector<MonoidMatrix> enumerate_matrices(int64_t Q);

// Exact count of monoid elements with trace <= Q and fraction_of(M) <= beta.
int64_t count_matrices_below(int64_t Q, const Fraction& beta);

// Word of the even continued-fraction factorization
// M = (x1 1; 1 0) * ... * (x_2r 1; 1 0), all digits >= 1.
using CfWord = std::vector<int64_t>;

// Left-to-right product of the digit matrices. Digits must be >= 1.
MonoidMatrix cf_compose(std::span<const int64_t> word);

// Inverse of cf_compose on the monoid: Euclidean quotients of the first
// column, parity-fixed to even length, validated by recomposition.
// Throws std::invalid_argument if m is not in the monoid or has no even word.
CfWord cf_factorize(const MonoidMatrix& m);

// Continuant variant used by the gap analysis: K(-1) = 0, K(0) = 1,
// K(l) = x_l * K(l-1) - K(l-2), evaluated over the whole span.
int64_t farey_continuant(std::span<const int64_t> xs);

} // namespace satfarey
