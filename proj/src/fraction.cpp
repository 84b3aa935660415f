#include "satfarey/fraction.hpp"

#include <cmath>
#include <numeric>

namespace satfarey {

int64_t mod_inverse(int64_t a, int64_t q) {
    if (q < 2 || a < 1 || a >= q)
        throw std::invalid_argument("mod_inverse: need 1 <= a < q, q >= 2, got a=" +
                                    std::to_string(a) + " q=" + std::to_string(q));
    // Extended Euclid tracking only the coefficient of a.
    int64_t r0 = q, r1 = a;
    int64_t x0 = 0, x1 = 1;
    while (r1 != 0) {
        int64_t quot = r0 / r1;
        int64_t r2 = r0 - quot * r1;
        int64_t x2 = x0 - quot * x1;
        r0 = r1; r1 = r2;
        x0 = x1; x1 = x2;
    }
    if (r0 != 1)
        throw std::invalid_argument("mod_inverse: gcd(" + std::to_string(a) + ", " +
                                    std::to_string(q) + ") = " + std::to_string(r0));
    if (x0 < 0) x0 += q;
    return x0;
}

void require_reduced(const Fraction& f) {
    if (f.den < 1 || f.num < 0 || f.num > f.den || std::gcd(f.num, f.den) != 1)
        throw std::invalid_argument("fraction " + to_string(f) + " is not reduced in [0, 1]");
}

int64_t h_value(const Fraction& f) {
    if (f.num == 0) {
        if (f.den != 1) throw std::invalid_argument("fraction " + to_string(f) + " is not reduced");
        return 1;
    }
    if (f.num == f.den) {
        if (f.num != 1) throw std::invalid_argument("fraction " + to_string(f) + " is not reduced");
        return 3;
    }
    // mod_inverse rejects non-coprime pairs, so this also validates reducedness.
    return f.den + f.num + mod_inverse(f.num, f.den);
}

int64_t h_value_with_neighbor(const Fraction& f, const Fraction& next) {
    if (f.num == 0) return 1;
    if (f.num == f.den) return 3;
    int64_t inv = (1 + next.den / f.den) * f.den - next.den;
    return f.den + f.num + inv;
}

Fraction mediant(const Fraction& left, const Fraction& right) {
    if (!unimodular_pair(left, right))
        throw std::invalid_argument("mediant: " + to_string(left) + ", " + to_string(right) +
                                    " is not a unimodular pair");
    return {left.num + right.num, left.den + right.den};
}

Fraction next_farey(int64_t Q, const Fraction& prev, const Fraction& cur) {
    if (cur.num == cur.den)
        throw std::invalid_argument("next_farey: 1/1 has no successor");
    if (Q < 1 || prev.den > Q || cur.den > Q || !unimodular_pair(prev, cur))
        throw std::invalid_argument("next_farey: (" + to_string(prev) + ", " + to_string(cur) +
                                    ") is not a consecutive pair at order " + std::to_string(Q));
    int64_t step = (Q + prev.den) / cur.den;
    return {step * cur.num - prev.num, step * cur.den - prev.den};
}

bool is_saturated(const Fraction& f, int64_t Q) {
    return f.den <= Q && h_value(f) <= Q;
}

Fraction rational_from_real(double x, int64_t max_den) {
    if (!(x >= 0.0) || !(x <= 1.0) || max_den < 1)
        throw std::invalid_argument("rational_from_real: need x in [0, 1], max_den >= 1");
    auto err = [x](int64_t n, int64_t d) {
        return std::fabs(x - static_cast<double>(n) / static_cast<double>(d));
    };
    // Continued fraction convergents p1/q1 of x = [0; a1, a2, ...]; when the
    // next convergent would overshoot max_den, the best bounded approximation
    // is either the last convergent or the largest in-bounds semiconvergent.
    int64_t p0 = 1, q0 = 0;
    int64_t p1 = 0, q1 = 1;
    double frac = x;
    for (int iter = 0; iter < 64 && frac > 1e-15; ++iter) {
        double inv = 1.0 / frac;
        double digit = std::floor(inv);
        frac = inv - digit;
        int64_t a = digit > 9.0e18 ? INT64_MAX : static_cast<int64_t>(digit);
        if (a > (max_den - q0) / q1) {
            int64_t t = (max_den - q0) / q1;
            if (t > 0 && err(t * p1 + p0, t * q1 + q0) < err(p1, q1))
                return {t * p1 + p0, t * q1 + q0};
            break;
        }
        int64_t p2 = a * p1 + p0, q2 = a * q1 + q0;
        p0 = p1; q0 = q1;
        p1 = p2; q1 = q2;
    }
    return {p1, q1};
}

Fraction parse_fraction(const std::string& text) {
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        size_t pos1 = 0, pos2 = 0;
        int64_t n = std::stoll(text.substr(0, slash), &pos1);
        int64_t d = std::stoll(text.substr(slash + 1), &pos2);
        if (pos1 != slash || pos2 != text.size() - slash - 1)
            throw std::invalid_argument("cannot parse fraction '" + text + "'");
        Fraction f{n, d};
        require_reduced(f);
        return f;
    }
    size_t pos = 0;
    double x = std::stod(text, &pos);
    if (pos != text.size())
        throw std::invalid_argument("cannot parse fraction '" + text + "'");
    return rational_from_real(x, 1000000);
}

} // namespace satfarey
