#pragma once

#include <stdexcept>

#include "satfarey/fraction.hpp"

namespace satfarey {

// Walks the full Farey sequence of order Q from 0/1 to 1/1, invoking
// fn(fraction, h) for every element. The successor recurrence keeps the pair
// consecutive by construction; h of each interior element comes from its right
// neighbor, so the walk costs O(1) per element.
template <class F>
void walk_farey(int64_t Q, F&& fn) {
    if (Q < 1) throw std::invalid_argument("walk_farey: Q >= 1 required");
    Fraction prev{0, 1};
    Fraction cur{1, Q};
    fn(prev, static_cast<int64_t>(1));
    while (cur.num != cur.den) {
        int64_t step = (Q + prev.den) / cur.den;
        Fraction next{step * cur.num - prev.num, step * cur.den - prev.den};
        fn(cur, h_value_with_neighbor(cur, next));
        prev = cur;
        cur = next;
    }
    fn(cur, static_cast<int64_t>(3));
}

} // namespace satfarey
