#pragma once

#include "zforce/bitset.hpp"
#include "zforce/graph.hpp"

#include <vector>

namespace zforce::kernels {

/// Adjacency rows narrowed to Words machine words. Words = 1 is the fast path
/// used whenever n <= 64.
template <unsigned Words>
struct Adjacency
{
    using Set = FixedBitSet<Words>;

    unsigned n = 0;
    std::vector<Set> rows;

    explicit Adjacency(const Graph & g) : n(g.order()), rows(g.order())
    {
        for (Vertex v = 0; v < n; ++v)
            for (unsigned w = 0; w < Words; ++w)
                rows[v].set_word(w, g.neighbor_bits(v).word(w));
    }

    [[nodiscard]] auto all() const -> Set { return Set::first_n(n); }
};

template <unsigned Words>
auto narrow(const Bits & bits) -> FixedBitSet<Words>
{
    FixedBitSet<Words> out;
    for (unsigned w = 0; w < Words; ++w)
        out.set_word(w, bits.word(w));
    return out;
}

template <unsigned Words>
auto widen(const FixedBitSet<Words> & bits) -> Bits
{
    Bits out;
    for (unsigned w = 0; w < Words; ++w)
        out.set_word(w, bits.word(w));
    return out;
}

/// Component of g[within] containing seed (seed must be in within).
template <unsigned Words>
auto component_of(const Adjacency<Words> & adj, const FixedBitSet<Words> & within, unsigned seed)
    -> FixedBitSet<Words>
{
    using Set = FixedBitSet<Words>;
    Set comp = Set::single(seed);
    Set frontier = comp;
    while (frontier.any()) {
        Set grown;
        frontier.for_each([&](unsigned v) { grown |= adj.rows[v]; });
        grown &= within;
        grown.subtract(comp);
        comp |= grown;
        frontier = grown;
    }
    return comp;
}

/// Fixpoint of the standard colour change rule. Batch order; the fixpoint is
/// order independent.
template <unsigned Words>
auto standard_closure(const Adjacency<Words> & adj, FixedBitSet<Words> black) -> FixedBitSet<Words>
{
    using Set = FixedBitSet<Words>;
    // Vertices that may still force: black, with at least one white neighbour.
    Set active = black;
    bool changed = true;
    while (changed) {
        changed = false;
        Set next_active;
        active.for_each([&](unsigned u) {
            Set white = adj.rows[u] - black;
            if (white.none())
                return;
            if (white.singleton()) {
                black |= white;
                next_active |= white;
                changed = true;
                // neighbours of the newly black vertex may now have one white
                next_active |= adj.rows[white.first()] & black;
            }
            else
                next_active.set(u);
        });
        active = next_active & black;
    }
    return black;
}

/// Fixpoint of the positive semidefinite colour change rule. Components of the
/// white subgraph are recomputed once per round.
template <unsigned Words>
auto psd_closure(const Adjacency<Words> & adj, FixedBitSet<Words> black) -> FixedBitSet<Words>
{
    using Set = FixedBitSet<Words>;
    const Set all = adj.all();
    for (;;) {
        Set white = all - black;
        if (white.none())
            return black;
        Set newly;
        Set unvisited = white;
        while (unvisited.any()) {
            Set comp = component_of(adj, white, unvisited.first());
            unvisited.subtract(comp);
            black.for_each([&](unsigned u) {
                Set hit = adj.rows[u] & comp;
                if (hit.singleton())
                    newly |= hit;
            });
        }
        if (newly.none())
            return black;
        black |= newly;
    }
}

} // namespace zforce::kernels
