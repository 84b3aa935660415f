#include "satfarey/monoid.hpp"

#include <numeric>
#include <string>

namespace satfarey {

namespace {

std::string to_string(const MonoidMatrix& m) {
    return "(" + std::to_string(m.a) + ", " + std::to_string(m.b) + "; " +
           std::to_string(m.c) + ", " + std::to_string(m.d) + ")";
}

// Inverse of d mod b under the convention that the fraction 1/1 (b = d = 1)
// uses dbar = 1, which reproduces exactly the b = 1 monoid column (1+k, 1, k, 1).
int64_t dbar_of(const Fraction& f) {
    return f.den == 1 ? 1 : mod_inverse(f.num, f.den);
}

} // namespace

bool in_monoid(int64_t a, int64_t b, int64_t c, int64_t d) {
    if (d < 1 || b < d || a < b || c < d || a < c) return false;
    return static_cast<int128>(a) * d - static_cast<int128>(b) * c == 1;
}

Fraction fraction_of(const MonoidMatrix& m) {
    if (!in_monoid(m))
        throw std::invalid_argument("fraction_of: " + to_string(m) + " is not a monoid element");
    return {m.d, m.b};
}

MonoidMatrix matrix_from_fraction(const Fraction& f, int64_t k) {
    require_reduced(f);
    if (f.num == 0) throw std::invalid_argument("matrix_from_fraction: 0/1 has no lift");
    if (k < 1) throw std::invalid_argument("matrix_from_fraction: k >= 1 required");
    int64_t d = f.num, b = f.den;
    int64_t dbar = dbar_of(f);
    return {dbar + k * b, b, (d * dbar - 1) / b + k * d, d};
}

void for_each_matrix(int64_t Q, const std::function<void(const MonoidMatrix&)>& visit) {
    if (Q < 3) return; // smallest trace is 3, at (2, 1; 1, 1)
    for (int64_t b = 1; b <= Q; ++b) {
        for (int64_t d = 1; d <= b; ++d) {
            if (b > 1 && (d == b || std::gcd(d, b) != 1)) continue;
            if (b == 1 && d != 1) continue;
            int64_t dbar = b == 1 ? 1 : mod_inverse(d, b);
            int64_t base = d + dbar; // trace at k = 0
            if (base + b > Q) continue;
            int64_t c0 = (d * dbar - 1) / b;
            for (int64_t k = 1; base + k * b <= Q; ++k)
                visit({dbar + k * b, b, c0 + k * d, d});
        }
    }
}

std::vector<MonoidMatrix> enumerate_matrices(int64_t Q) {
    std::vector<MonoidMatrix> out;
    for_each_matrix(Q, [&](const MonoidMatrix& m) { out.push_back(m); });
    return out;
}

int64_t count_matrices_below(int64_t Q, const Fraction& beta) {
    require_reduced(beta);
    int64_t count = 0;
    for_each_matrix(Q, [&](const MonoidMatrix& m) {
        // fraction_of(m) = d/b <= beta, compared exactly
        if (static_cast<int128>(m.d) * beta.den <= static_cast<int128>(beta.num) * m.b) ++count;
    });
    return count;
}

MonoidMatrix cf_compose(std::span<const int64_t> word) {
    MonoidMatrix p; // identity
    for (int64_t x : word) {
        if (x < 1) throw std::invalid_argument("cf_compose: digits must be >= 1");
        // p * (x 1; 1 0)
        p = {p.a * x + p.b, p.a, p.c * x + p.d, p.c};
    }
    return p;
}

CfWord cf_factorize(const MonoidMatrix& m) {
    if (!in_monoid(m))
        throw std::invalid_argument("cf_factorize: " + to_string(m) + " is not a monoid element");
    // Euclidean quotients of the first column give the continued fraction of
    // a/c; of its two expansions exactly one has even length.
    CfWord word;
    int64_t hi = m.a, lo = m.c;
    while (lo > 0) {
        word.push_back(hi / lo);
        int64_t rem = hi % lo;
        hi = lo;
        lo = rem;
    }
    if (word.size() % 2 != 0) {
        int64_t last = word.back();
        if (last < 2)
            throw std::invalid_argument("cf_factorize: " + to_string(m) + " has no even word");
        word.back() = last - 1;
        word.push_back(1);
    }
    if (cf_compose(word) != m)
        throw std::invalid_argument("cf_factorize: recomposition mismatch for " + to_string(m));
    return word;
}

int64_t farey_continuant(std::span<const int64_t> xs) {
    int64_t prev = 0, cur = 1;
    for (int64_t x : xs) {
        int64_t next = x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

} // namespace satfarey
