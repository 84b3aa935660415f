#include "satfarey/saturated.hpp"

#include <algorithm>
#include <queue>

#include "satfarey/farey_walk.hpp"

namespace satfarey {

namespace {

struct PendingInsertion {
    int64_t birth;
    Fraction frac;
    Fraction left;
    Fraction right;
};

struct LaterBirth {
    bool operator()(const PendingInsertion& a, const PendingInsertion& b) const {
        if (a.birth != b.birth) return a.birth > b.birth;
        return b.frac < a.frac;
    }
};

// Core of the insertion generator. Seeds with the mediant of (0/1, 1/1) and
// replays insertions in (birth, value) order. Children of an inserted mediant
// are born strictly later than it, so pruning candidates past Q_max is safe
// and the heap order equals the global birth order.
std::vector<InsertionRecord> build_tree(int64_t Q_max) {
    std::priority_queue<PendingInsertion, std::vector<PendingInsertion>, LaterBirth> heap;
    auto push_candidate = [&](const Fraction& l, const Fraction& r) {
        Fraction m{l.num + r.num, l.den + r.den};
        int64_t birth = h_value_with_neighbor(m, r);
        if (birth <= Q_max) heap.push({birth, m, l, r});
    };
    std::vector<InsertionRecord> records;
    push_candidate({0, 1}, {1, 1});
    while (!heap.empty()) {
        PendingInsertion top = heap.top();
        heap.pop();
        records.push_back({top.frac, top.birth, top.left, top.right});
        push_candidate(top.left, top.frac);
        push_candidate(top.frac, top.right);
    }
    return records;
}

} // namespace

SaturatedSequence generate_by_filter(int64_t Q) {
    if (Q < 3) throw std::invalid_argument("generate_by_filter: Q >= 3 required");
    SaturatedSequence seq;
    seq.order = Q;
    seq.elems.push_back({0, 1});
    // Definitional path: fresh h per element, successor via the public API.
    Fraction prev{0, 1};
    Fraction cur{1, Q};
    while (true) {
        if (h_value(cur) <= Q) seq.elems.push_back(cur);
        if (cur.num == cur.den) break;
        Fraction next = next_farey(Q, prev, cur);
        prev = cur;
        cur = next;
    }
    return seq;
}

SaturatedSequence generate_by_insertion(int64_t Q) {
    if (Q < 3) throw std::invalid_argument("generate_by_insertion: Q >= 3 required");
    SaturatedSequence seq;
    seq.order = Q;
    std::vector<InsertionRecord> records = build_tree(Q);
    seq.elems.reserve(records.size() + 2);
    seq.elems.push_back({0, 1});
    for (const InsertionRecord& rec : records) seq.elems.push_back(rec.fraction);
    seq.elems.push_back({1, 1});
    std::sort(seq.elems.begin(), seq.elems.end());
    return seq;
}

UnimodularReport verify_unimodular(std::span<const Fraction> elems) {
    for (std::size_t i = 0; i + 1 < elems.size(); ++i) {
        if (!unimodular_pair(elems[i], elems[i + 1])) return {false, i};
    }
    return {true, 0};
}

UnimodularReport verify_unimodular(const SaturatedSequence& seq) {
    return verify_unimodular(std::span<const Fraction>(seq.elems));
}

std::vector<InsertionRecord> insertion_tree(int64_t Q_max) {
    if (Q_max < 4) throw std::invalid_argument("insertion_tree: Q_max >= 4 required");
    return build_tree(Q_max);
}

void scan_farey_with_h(int64_t Q, const std::function<void(const Fraction&, int64_t)>& fn) {
    walk_farey(Q, fn);
}

std::pair<Fraction, Fraction> parent_pair(const Fraction& f) {
    require_reduced(f);
    if (f.num == 0 || f.num == f.den)
        throw std::invalid_argument("parent_pair: " + to_string(f) + " has no parents");
    int64_t inv = mod_inverse(f.num, f.den);
    int64_t rd = f.den - inv;
    int64_t rn = (1 + f.num * rd) / f.den;
    return {Fraction{f.num - rn, inv}, Fraction{rn, rd}};
}

} // namespace satfarey
