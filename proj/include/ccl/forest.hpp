#pragma once

#include <atomic>
#include <cassert>
#include <cstdint>
#include <vector>

#include "ccl/image.hpp"

namespace ccl {

/// Counters for the two cost drivers of label-equivalence resolution:
/// parent-link traversal steps in root finding and CAS attempts
/// (successful or failed) in unions.
struct BlockMetrics {
    std::uint32_t block_id = 0;
    std::uint64_t findroot_iterations = 0;
    std::uint64_t atomic_ops = 0;

    void reset() {
        findroot_iterations = 0;
        atomic_ops = 0;
    }
    BlockMetrics& operator+=(const BlockMetrics& o) {
        findroot_iterations += o.findroot_iterations;
        atomic_ops += o.atomic_ops;
        return *this;
    }
};

/**
 * Flat parent-link forest over label slots (the label-equivalence lists).
 *
 * Invariants: parent[i] <= i for every slot, so the forest is acyclic and
 * every chain terminates; i is a root iff parent[i] == i. Unions always
 * make the larger root point to the smaller one, which keeps each class
 * rooted at its minimum slot.
 *
 * merge() is lock-free and may run from any number of threads. find_root()
 * is safe under concurrent merges (single-word atomic reads; values at a
 * slot only ever decrease). flatten() of disjoint slots may run
 * concurrently with itself but not with merge().
 */
class LabelForest {
public:
    LabelForest() = default;
    explicit LabelForest(std::size_t slots) : parent_(slots) { reset_identity(); }

    std::size_t size() const { return parent_.size(); }

    Label parent(std::size_t i) const { return parent_[i].load(std::memory_order_acquire); }

    void set_parent(std::size_t i, Label v) { parent_[i].store(v, std::memory_order_release); }

    bool compare_exchange(std::size_t i, Label& expected, Label desired) {
        return parent_[i].compare_exchange_strong(expected, desired, std::memory_order_acq_rel);
    }

    bool is_root(std::size_t i) const { return parent(i) == Label(i); }

    void reset_identity() {
        for (std::size_t i = 0; i < parent_.size(); ++i)
            parent_[i].store(Label(i), std::memory_order_relaxed);
    }

private:
    std::vector<std::atomic<Label>> parent_;
};

/// Trace parent links from i to its root. Does not modify the forest.
/// Adds one iteration per link traversed.
inline Label find_root(const LabelForest& f, Label i, BlockMetrics& m) {
    Label p = f.parent(i);
#ifndef NDEBUG
    std::size_t steps = 0;
#endif
    while (p != i) {
        i = p;
        p = f.parent(i);
        ++m.findroot_iterations;
#ifndef NDEBUG
        // a trip here means a corrupted forest (cycle)
        assert(++steps <= f.size());
#endif
    }
    return i;
}

/// Point i directly at its root.
inline void flatten(LabelForest& f, Label i, BlockMetrics& m) {
    f.set_parent(i, find_root(f, i, m));
}

/// Min-union of the classes of a and b. Loops: find both roots, stop if
/// equal, otherwise CAS the larger root's parent from itself to the
/// smaller root; a failed CAS (someone relinked that root first) restarts
/// from the interfering link. Every CAS attempt counts one atomic op.
inline void merge(LabelForest& f, Label a, Label b, BlockMetrics& m) {
    for (;;) {
        Label ra = find_root(f, a, m);
        Label rb = find_root(f, b, m);
        if (ra == rb) return;
        Label lo = ra < rb ? ra : rb;
        Label hi = ra < rb ? rb : ra;
        Label expected = hi;
        ++m.atomic_ops;
        if (f.compare_exchange(hi, expected, lo)) return;
        a = expected;  // current parent[hi]
        b = lo;
    }
}

}  // namespace ccl
