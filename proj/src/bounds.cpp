#include "zforce/bounds.hpp"

#include "zforce/errors.hpp"
#include "zforce/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>

namespace zforce {

namespace {

auto order_path(const Graph & g, const Bits & members) -> std::vector<Vertex>
{
    Vertex start = members.first();
    for (Vertex v = members.first(); v < g.order(); v = members.next(v))
        if ((g.neighbor_bits(v) & members).count() <= 1) {
            start = v;
            break;
        }
    std::vector<Vertex> out{start};
    Bits left = members - Bits::single(start);
    while (left.any()) {
        Bits step = g.neighbor_bits(out.back()) & left;
        out.push_back(step.first());
        left.reset(step.first());
    }
    return out;
}

void bron_kerbosch(const Graph & g, Bits r, Bits p, Bits x, std::vector<VertexSet> & out)
{
    if (p.none() && x.none()) {
        out.emplace_back(g.order(), r);
        return;
    }
    // pivot maximising |P ∩ N(u)|
    Vertex pivot = 0;
    unsigned best = 0;
    bool chosen = false;
    (p | x).for_each([&](unsigned u) {
        auto c = (p & g.neighbor_bits(u)).count();
        if (! chosen || c > best) {
            pivot = u;
            best = c;
            chosen = true;
        }
    });
    Bits candidates = p - g.neighbor_bits(pivot);
    candidates.for_each([&](unsigned v) {
        Bits nv = g.neighbor_bits(v);
        Bits rv = r;
        rv.set(v);
        bron_kerbosch(g, rv, p & nv, x & nv, out);
        p.reset(v);
        x.set(v);
    });
}

struct CoverSearch
{
    std::vector<std::uint64_t> clique_edges; // edge mask per clique
    std::vector<std::vector<unsigned>> cliques_of_edge;
    unsigned max_edges_per_clique = 1;

    [[nodiscard]] auto bound(std::uint64_t uncovered, unsigned depth) const -> unsigned
    {
        auto left = static_cast<unsigned>(std::popcount(uncovered));
        return depth + (left + max_edges_per_clique - 1) / max_edges_per_clique;
    }

    /// Cheapest-edge branching. `incumbent` is shared across workers and only
    /// prunes strictly worse subtrees, so ties are still explored locally.
    void dfs(std::uint64_t uncovered, std::vector<unsigned> & chosen, unsigned & local_best,
             std::vector<unsigned> & local_witness, const std::atomic<unsigned> & incumbent) const
    {
        if (uncovered == 0) {
            if (chosen.size() < local_best) {
                local_best = static_cast<unsigned>(chosen.size());
                local_witness = chosen;
            }
            return;
        }
        auto b = bound(uncovered, static_cast<unsigned>(chosen.size()));
        if (b >= local_best || b > incumbent.load(std::memory_order_relaxed))
            return;
        unsigned edge = pick_edge(uncovered);
        for (auto c : cliques_of_edge[edge]) {
            chosen.push_back(c);
            dfs(uncovered & ~clique_edges[c], chosen, local_best, local_witness, incumbent);
            chosen.pop_back();
        }
    }

    [[nodiscard]] auto pick_edge(std::uint64_t uncovered) const -> unsigned
    {
        unsigned best_edge = static_cast<unsigned>(std::countr_zero(uncovered));
        std::size_t fewest = std::numeric_limits<std::size_t>::max();
        for (auto bits = uncovered; bits != 0; bits &= bits - 1) {
            auto e = static_cast<unsigned>(std::countr_zero(bits));
            if (cliques_of_edge[e].size() < fewest) {
                fewest = cliques_of_edge[e].size();
                best_edge = e;
            }
        }
        return best_edge;
    }
};

} // namespace

auto is_path_cover(const Graph & g, const std::vector<std::vector<Vertex>> & paths) -> bool
{
    Bits seen;
    for (auto & p : paths) {
        if (p.empty())
            return false;
        Bits members;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p[i] >= g.order() || seen.test(p[i]))
                return false;
            seen.set(p[i]);
            members.set(p[i]);
            if (i > 0 && ! g.adjacent(p[i - 1], p[i]))
                return false;
        }
        if (! induces_path(g, VertexSet(g.order(), members)))
            return false;
    }
    return seen == Bits::first_n(g.order());
}

auto is_clique_cover(const Graph & g, const std::vector<VertexSet> & cliques) -> bool
{
    for (auto & c : cliques)
        if (c.ambient() != g.order() || ! is_clique(g, c))
            return false;
    for (auto [u, v] : g.edges()) {
        bool covered = std::any_of(cliques.begin(), cliques.end(),
                                   [&](const VertexSet & c) { return c.contains(u) && c.contains(v); });
        if (! covered)
            return false;
    }
    return true;
}

auto path_cover_number(const Graph & g, const BoundsOptions & opts) -> PathCover
{
    auto n = g.order();
    if (n == 0)
        throw InvalidArgument("path cover needs a non-empty graph");
    auto cap = std::min(opts.path_cover_limit, 24U);
    if (n > cap)
        throw SizeLimitError("path cover: order " + std::to_string(n) + " exceeds the limit of " + std::to_string(cap));

    const std::uint32_t states = 1U << n;
    std::vector<std::uint8_t> is_path(states, 0);
    for (std::uint32_t mask = 1; mask < states; ++mask) {
        Bits b;
        b.set_word(0, mask);
        is_path[mask] = induces_path(g, VertexSet(n, b)) ? 1 : 0;
    }
    constexpr auto unset = std::numeric_limits<std::uint8_t>::max();
    std::vector<std::uint8_t> best(states, unset);
    std::vector<std::uint32_t> choice(states, 0);
    best[0] = 0;
    for (std::uint32_t mask = 1; mask < states; ++mask) {
        std::uint32_t low = mask & (~mask + 1);
        std::uint32_t rest = mask ^ low;
        // submasks of rest, each joined with the lowest vertex
        for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
            std::uint32_t piece = sub | low;
            if (is_path[piece] && best[mask ^ piece] != unset && best[mask ^ piece] + 1 < best[mask]) {
                best[mask] = static_cast<std::uint8_t>(best[mask ^ piece] + 1);
                choice[mask] = piece;
            }
            if (sub == 0)
                break;
        }
    }
    PathCover out;
    std::uint32_t mask = states - 1;
    out.value = best[mask];
    while (mask != 0) {
        Bits b;
        b.set_word(0, choice[mask]);
        out.paths.push_back(order_path(g, b));
        mask ^= choice[mask];
    }
    if (! is_path_cover(g, out.paths) || out.paths.size() != out.value)
        throw InvariantViolation("path cover witness failed verification");
    return out;
}

auto maximal_cliques(const Graph & g) -> std::vector<VertexSet>
{
    std::vector<VertexSet> out;
    bron_kerbosch(g, Bits{}, Bits::first_n(g.order()), Bits{}, out);
    std::sort(out.begin(), out.end());
    return out;
}

auto clique_cover_number(const Graph & g, const BoundsOptions & opts) -> CliqueCover
{
    auto edges = g.edges();
    auto cap = std::min(opts.clique_cover_edge_limit, 64U);
    if (edges.size() > cap)
        throw SizeLimitError("clique cover: " + std::to_string(edges.size()) + " edges exceed the limit of "
                             + std::to_string(cap));
    CliqueCover out;
    if (edges.empty())
        return out;

    auto all_cliques = maximal_cliques(g);
    std::vector<VertexSet> cliques;
    CoverSearch search;
    search.cliques_of_edge.resize(edges.size());
    for (auto & c : all_cliques) {
        std::uint64_t mask = 0;
        for (unsigned e = 0; e < edges.size(); ++e)
            if (c.contains(edges[e].first) && c.contains(edges[e].second))
                mask |= std::uint64_t{1} << e;
        if (mask == 0)
            continue; // isolated vertex
        auto index = static_cast<unsigned>(cliques.size());
        cliques.push_back(c);
        search.clique_edges.push_back(mask);
        search.max_edges_per_clique = std::max(search.max_edges_per_clique, static_cast<unsigned>(std::popcount(mask)));
        for (unsigned e = 0; e < edges.size(); ++e)
            if ((mask >> e) & 1U)
                search.cliques_of_edge[e].push_back(index);
    }

    const std::uint64_t everything = edges.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << edges.size()) - 1;
    const unsigned root_edge = search.pick_edge(everything);
    const auto & roots = search.cliques_of_edge[root_edge];
    std::atomic<unsigned> incumbent{static_cast<unsigned>(cliques.size())};
    std::vector<unsigned> branch_best(roots.size(), std::numeric_limits<unsigned>::max());
    std::vector<std::vector<unsigned>> branch_witness(roots.size());

    const auto branch_count = static_cast<long long>(roots.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(worker_count(opts.search.workers))
    for (long long i = 0; i < branch_count; ++i) {
        auto idx = static_cast<std::size_t>(i);
        std::vector<unsigned> chosen{roots[idx]};
        unsigned local_best = std::numeric_limits<unsigned>::max();
        std::vector<unsigned> witness;
        search.dfs(everything & ~search.clique_edges[roots[idx]], chosen, local_best, witness, incumbent);
        branch_best[idx] = local_best;
        branch_witness[idx] = witness;
        auto seen = incumbent.load();
        while (local_best < seen && ! incumbent.compare_exchange_weak(seen, local_best)) {
        }
    }

    // lowest-index branch attaining the optimum
    std::size_t winner = 0;
    for (std::size_t i = 1; i < roots.size(); ++i)
        if (branch_best[i] < branch_best[winner])
            winner = i;
    out.value = branch_best[winner];
    for (auto c : branch_witness[winner])
        out.cliques.push_back(cliques[c]);
    if (! is_clique_cover(g, out.cliques) || out.cliques.size() != out.value)
        throw InvariantViolation("clique cover witness failed verification");
    return out;
}

auto bounds_report(const Graph & g, const BoundsOptions & opts) -> BoundsReport
{
    BoundsReport r;
    r.n = g.order();
    r.delta = min_degree(g);
    auto pc = path_cover_number(g, opts);
    auto cc = clique_cover_number(g, opts);
    auto z = zero_forcing_number(g, Rule::standard, opts.search);
    auto zp = zero_forcing_number(g, Rule::psd, opts.search);
    r.path_cover = pc.value;
    r.paths = pc.paths;
    r.clique_cover = cc.value;
    r.cliques = cc.cliques;
    r.z = z.value;
    r.zfs = z.sets.front();
    r.zplus = zp.value;
    r.psd_zfs = zp.sets.front();
    r.os = r.n - r.zplus;
    r.lower_mplus = static_cast<int>(r.n) - static_cast<int>(r.clique_cover);

    auto fail = [&](const std::string & what) {
        throw InvariantViolation("bounds_report: " + what + " violated on a graph of order " + std::to_string(r.n));
    };
    if (r.lower_mplus > static_cast<int>(r.zplus))
        fail("n - cc <= Z+");
    if (r.zplus > r.z)
        fail("Z+ <= Z");
    if (r.path_cover > r.z)
        fail("P <= Z");
    if (r.delta > r.zplus)
        fail("delta <= Z+");

    auto num = [](auto v) { return std::to_string(v); };
    if (r.lower_mplus == static_cast<int>(r.zplus))
        r.notes.push_back("tight: n - cc = Z+ = " + num(r.zplus) + ", so M+ = hM+ = Z+ = " + num(r.zplus));
    else
        r.notes.push_back("bracket: " + num(r.lower_mplus) + " = n - cc <= M+ <= hM+ <= Z+ = " + num(r.zplus));
    if (r.path_cover == r.z)
        r.notes.push_back("tight: P = Z = " + num(r.z));
    if (r.delta == r.zplus)
        r.notes.push_back("tight: delta = Z+ = " + num(r.zplus));
    r.notes.push_back("M (real symmetric maximum nullity) is bounded by Z = " + num(r.z) + " and not certified here");
    return r;
}

void annotate_external_hmplus(BoundsReport & report, unsigned hmplus, const std::string & source)
{
    auto rel = report.zplus > hmplus ? " > " : (report.zplus == hmplus ? " = " : " < ");
    report.notes.push_back("external: Z+ = " + std::to_string(report.zplus) + rel + "hM+ = " + std::to_string(hmplus)
                           + " (hM+ not computed; " + source + ")"
                           + (report.zplus < hmplus ? "; contradicts hM+ <= Z+" : ""));
}

} // namespace zforce
