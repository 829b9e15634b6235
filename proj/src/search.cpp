#include "zforce/search.hpp"

#include "zforce/errors.hpp"
#include "zforce/kernels.hpp"
#include "zforce/parallel.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <limits>

namespace zforce {

namespace {

constexpr unsigned max_search_order = 62;

using Binomials = std::array<std::array<std::uint64_t, max_search_order + 1>, max_search_order + 1>;

auto binomials() -> const Binomials &
{
    static const Binomials table = [] {
        Binomials t{};
        for (unsigned n = 0; n <= max_search_order; ++n) {
            t[n][0] = 1;
            for (unsigned k = 1; k <= n; ++k)
                t[n][k] = t[n - 1][k - 1] + (k <= n - 1 ? t[n - 1][k] : 0);
        }
        return t;
    }();
    return table;
}

/// k-subset of {0..n-1} with the given lexicographic rank.
void unrank(std::uint64_t rank, unsigned n, unsigned k, std::vector<unsigned> & out)
{
    auto & c = binomials();
    out.resize(k);
    unsigned next = 0;
    for (unsigned i = 0; i < k; ++i) {
        for (;; ++next) {
            auto with = c[n - next - 1][k - i - 1];
            if (rank < with)
                break;
            rank -= with;
        }
        out[i] = next++;
    }
}

/// Advances to the lexicographic successor; false after the last subset.
auto advance(std::vector<unsigned> & comb, unsigned n) -> bool
{
    auto k = static_cast<unsigned>(comb.size());
    int i = static_cast<int>(k) - 1;
    while (i >= 0 && comb[i] == n - k + static_cast<unsigned>(i))
        --i;
    if (i < 0)
        return false;
    ++comb[i];
    for (auto j = static_cast<unsigned>(i) + 1; j < k; ++j)
        comb[j] = comb[j - 1] + 1;
    return true;
}

/// Small per-range cache of derived sets that failed to reach V. Any
/// candidate contained in one of them fails too, by monotonicity.
template <unsigned Words>
class FailedClosures
{
public:
    [[nodiscard]] auto covers(const FixedBitSet<Words> & s) const -> bool
    {
        for (unsigned i = 0; i < used_; ++i)
            if (s.is_subset_of(entries_[i]))
                return true;
        return false;
    }

    void add(const FixedBitSet<Words> & closed)
    {
        entries_[next_] = closed;
        next_ = (next_ + 1) % capacity;
        used_ = std::min(used_ + 1, capacity);
    }

private:
    static constexpr unsigned capacity = 8;
    std::array<FixedBitSet<Words>, capacity> entries_{};
    unsigned used_ = 0;
    unsigned next_ = 0;
};

template <unsigned Words>
struct Scan
{
    std::vector<FixedBitSet<Words>> hits;
    std::uint64_t nodes = 0;
};

/// Scans all k-subsets of a connected graph for forcing sets. First-hit mode
/// returns the lexicographically smallest; otherwise all, in order.
template <unsigned Words>
auto scan_k_subsets(const kernels::Adjacency<Words> & adj, Rule rule, unsigned k, bool want_all, int workers)
    -> Scan<Words>
{
    using Set = FixedBitSet<Words>;
    const unsigned n = adj.n;
    const std::uint64_t total = binomials()[n][k];
    const std::uint64_t chunks = std::min<std::uint64_t>(total, static_cast<std::uint64_t>(workers) * 32);
    const std::uint64_t chunk_size = (total + chunks - 1) / chunks;
    const Set all = adj.all();

    std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
    std::atomic<std::uint64_t> nodes{0};
    std::vector<std::vector<Set>> per_chunk(want_all ? chunks : 0);

    const auto chunk_count = static_cast<long long>(chunks);
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
    for (long long chunk = 0; chunk < chunk_count; ++chunk) {
        auto begin = static_cast<std::uint64_t>(chunk) * chunk_size;
        auto end = std::min(total, begin + chunk_size);
        if (begin >= end || (! want_all && begin > best.load(std::memory_order_relaxed)))
            continue;
        std::vector<unsigned> comb;
        unrank(begin, n, k, comb);
        FailedClosures<Words> failed;
        std::uint64_t local_nodes = 0;
        for (auto rank = begin; rank < end; ++rank) {
            if (! want_all && rank > best.load(std::memory_order_relaxed))
                break;
            Set s;
            for (auto v : comb)
                s.set(v);
            if (! failed.covers(s)) {
                ++local_nodes;
                Set closed = rule == Rule::standard ? kernels::standard_closure(adj, s) : kernels::psd_closure(adj, s);
                if (closed == all) {
                    if (want_all)
                        per_chunk[static_cast<std::size_t>(chunk)].push_back(s);
                    else {
                        auto seen = best.load();
                        while (rank < seen && ! best.compare_exchange_weak(seen, rank)) {
                        }
                        break;
                    }
                }
                else
                    failed.add(closed);
            }
            advance(comb, n);
        }
        nodes += local_nodes;
    }

    Scan<Words> out;
    out.nodes = nodes.load();
    if (want_all) {
        for (auto & c : per_chunk)
            out.hits.insert(out.hits.end(), c.begin(), c.end());
    }
    else if (auto r = best.load(); r != std::numeric_limits<std::uint64_t>::max()) {
        std::vector<unsigned> comb;
        unrank(r, n, k, comb);
        Set s;
        for (auto v : comb)
            s.set(v);
        out.hits.push_back(s);
    }
    return out;
}

struct ComponentResult
{
    unsigned value = 0;
    std::vector<VertexSet> sets; // in component-local ids
    std::uint64_t nodes = 0;
};

auto search_connected(const Graph & comp, Rule rule, bool want_all, const SearchOptions & opts) -> ComponentResult;

auto lower_bound(const Graph & comp, Rule rule, const SearchOptions & opts, std::uint64_t & nodes) -> unsigned
{
    unsigned lb = std::max(1U, min_degree(comp));
    if (rule == Rule::standard && opts.use_psd_lower_bound) {
        auto psd = search_connected(comp, Rule::psd, false, opts);
        nodes += psd.nodes;
        lb = std::max(lb, psd.value);
    }
    return lb;
}

auto search_connected(const Graph & comp, Rule rule, bool want_all, const SearchOptions & opts) -> ComponentResult
{
    auto workers = worker_count(opts.workers);
    ComponentResult out;
    auto m = comp.order();
    auto run = [&]<unsigned W>() {
        kernels::Adjacency<W> adj(comp);
        for (unsigned k = lower_bound(comp, rule, opts, out.nodes); k <= m; ++k) {
            auto scan = scan_k_subsets(adj, rule, k, want_all, workers);
            out.nodes += scan.nodes;
            if (! scan.hits.empty()) {
                out.value = k;
                for (auto & h : scan.hits)
                    out.sets.emplace_back(m, kernels::widen(h));
                return;
            }
        }
        throw InvariantViolation("no forcing set found, not even V");
    };
    if (m <= fast_path_order)
        run.template operator()<1>();
    else
        run.template operator()<2>();
    return out;
}

auto combine(const Graph & g, Rule rule, bool want_all, const SearchOptions & opts) -> SearchResult
{
    SearchResult result;
    std::vector<VertexSet> partial{VertexSet(g.order())};
    for (auto & c : components(g)) {
        auto sub = induced(g, c);
        auto part = search_connected(sub.graph, rule, want_all, opts);
        result.value += part.value;
        result.nodes_explored += part.nodes;
        std::vector<VertexSet> grown;
        for (auto & prefix : partial)
            for (auto & local : part.sets) {
                auto s = prefix;
                for (auto v : local.vertices())
                    s.insert(sub.original[v]);
                grown.push_back(std::move(s));
            }
        partial = std::move(grown);
    }
    std::sort(partial.begin(), partial.end());
    result.sets = std::move(partial);
    return result;
}

void guard(const Graph & g, unsigned limit, const char * what)
{
    if (g.order() == 0)
        throw InvalidArgument(std::string(what) + " needs a non-empty graph");
    auto cap = std::min(limit, max_search_order);
    if (g.order() > cap)
        throw SizeLimitError(std::string(what) + ": order " + std::to_string(g.order())
                             + " exceeds the search limit of " + std::to_string(cap));
}

} // namespace

auto zero_forcing_number(const Graph & g, Rule rule, const SearchOptions & opts) -> SearchResult
{
    guard(g, opts.search_limit, "zero forcing search");
    return combine(g, rule, false, opts);
}

auto minimum_forcing_sets(const Graph & g, Rule rule, const SearchOptions & opts) -> SearchResult
{
    guard(g, std::min(opts.search_limit, opts.all_min_limit), "minimum forcing set enumeration");
    return combine(g, rule, true, opts);
}

auto all_minimum_zfs(const Graph & g, Rule rule, const SearchOptions & opts) -> std::vector<VertexSet>
{
    return minimum_forcing_sets(g, rule, opts).sets;
}

auto min_zfs_intersection(const Graph & g, const SearchOptions & opts) -> VertexSet
{
    auto sets = all_minimum_zfs(g, Rule::standard, opts);
    auto out = g.all();
    for (auto & s : sets)
        out = out & s;
    return out;
}

namespace reference {

auto minimum_forcing_sets(const Graph & g, Rule rule) -> SearchResult
{
    if (g.order() == 0 || g.order() > 20)
        throw SizeLimitError("reference search supports 1 <= n <= 20");
    auto n = g.order();
    SearchResult out;
    out.value = n + 1;
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        auto k = static_cast<unsigned>(std::popcount(mask));
        if (k > out.value)
            continue;
        Bits bits;
        bits.set_word(0, mask);
        VertexSet s(n, bits);
        ++out.nodes_explored;
        if (! derived_set(g, s, rule).complete())
            continue;
        if (k < out.value) {
            out.value = k;
            out.sets.clear();
        }
        out.sets.push_back(s);
    }
    std::sort(out.sets.begin(), out.sets.end());
    return out;
}

} // namespace reference

} // namespace zforce
