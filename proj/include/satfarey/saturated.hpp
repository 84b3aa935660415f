#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "satfarey/fraction.hpp"

namespace satfarey {

// Saturated set of order Q with 0/1 adjoined: every reduced a/q in (0, 1]
// with h(a/q) <= Q, in ascending order, preceded by 0/1.
struct SaturatedSequence {
    int64_t order = 0;
    std::vector<Fraction> elems;
};

// One mediant insertion: fraction = mediant(left_parent, right_parent) enters
// the sequence at order `birth` == h_value(fraction).
struct InsertionRecord {
    Fraction fraction;
    int64_t birth = 0;
    Fraction left_parent;
    Fraction right_parent;
};

struct UnimodularReport {
    bool ok = true;
    // Index i of the left element of the first failing pair (elems[i], elems[i+1]).
    std::size_t first_violation = 0;
};

// Reference generator: walks the Farey sequence of order Q and keeps the
// fractions with h <= Q, 0/1 prepended. Q >= 3.
SaturatedSequence generate_by_filter(int64_t Q);

// Fast path: replays mediant insertions with birth <= Q. Q >= 3.
SaturatedSequence generate_by_insertion(int64_t Q);

// Checks that consecutive pairs satisfy b.num*a.den - a.num*b.den == 1.
UnimodularReport verify_unimodular(std::span<const Fraction> elems);
UnimodularReport verify_unimodular(const SaturatedSequence& seq);

// All insertions with birth <= Q_max, ordered by (birth, fraction).
// Seeded by the pair (0/1, 1/1); Q_max >= 4 (the first insertion is at 4).
std::vector<InsertionRecord> insertion_tree(int64_t Q_max);

// Walks the full Farey sequence of order Q, invoking fn(fraction, h) for every
// element from 0/1 to 1/1. h comes from the right-neighbor identity, so the
// walk costs O(1) per element beyond the successor step.
void scan_farey_with_h(int64_t Q, const std::function<void(const Fraction&, int64_t)>& fn);

// Parents of a reduced fraction in (0, 1): the unique unimodular pair whose
// mediant it is. Exposed for the tree and for neighbor-identity tests.
std::pair<Fraction, Fraction> parent_pair(const Fraction& f);

} // namespace satfarey
