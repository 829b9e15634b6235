#include "zforce/os_set.hpp"

#include "zforce/errors.hpp"
#include "zforce/forcing.hpp"
#include "zforce/kernels.hpp"

#include <algorithm>
#include <optional>

namespace zforce {

namespace {

auto component_containing(const Graph & g, const Bits & within, Vertex v) -> Bits
{
    Bits comp = Bits::single(v);
    Bits frontier = comp;
    while (frontier.any()) {
        Bits grown;
        frontier.for_each([&](unsigned u) { grown |= g.neighbor_bits(u); });
        grown &= within;
        grown.subtract(comp);
        comp |= grown;
        frontier = grown;
    }
    return comp;
}

auto first_witness(const Graph & g, const Bits & prefix, Vertex v) -> std::optional<Vertex>
{
    Bits h = component_containing(g, prefix, v);
    Bits candidates = g.neighbor_bits(v) - prefix;
    for (Vertex w = candidates.first(); w < g.order(); w = candidates.next(w))
        if ((g.neighbor_bits(w) & h) == Bits::single(v))
            return w;
    return std::nullopt;
}

} // namespace

auto verify_os_set(const Graph & g, const OsSet & s) -> OsCheck
{
    auto fail = [](unsigned k, std::string why) { return OsCheck{false, k, std::move(why)}; };
    if (s.order.size() != s.witnesses.size())
        return fail(0, "order and witness sequences differ in length");
    Bits prefix;
    for (unsigned k = 1; k <= s.order.size(); ++k) {
        auto v = s.order[k - 1];
        auto w = s.witnesses[k - 1];
        if (v >= g.order() || w >= g.order())
            return fail(k, "vertex out of range");
        if (prefix.test(v))
            return fail(k, "v_k repeats an earlier vertex");
        prefix.set(v);
        if (prefix.test(w))
            return fail(k, "w_k lies in {v_1..v_k}");
        if (! g.adjacent(w, v))
            return fail(k, "w_k is not adjacent to v_k");
        Bits h = component_containing(g, prefix, v);
        if ((g.neighbor_bits(w) & h) != Bits::single(v))
            return fail(k, "w_k is adjacent to another vertex of H_k");
    }
    return {};
}

auto os_from_psd_set(const Graph & g, const VertexSet & x) -> OsSet
{
    auto log = derived_set(g, x, Rule::psd);
    if (! log.complete())
        throw InvalidArgument("os_from_psd_set: " + to_string(x) + " is not a psd forcing set");
    OsSet out;
    for (auto it = log.forces.rbegin(); it != log.forces.rend(); ++it) {
        out.order.push_back(it->forced);
        out.witnesses.push_back(it->forcer);
    }
    if (auto check = verify_os_set(g, out); ! check)
        throw InvariantViolation("constructed OS-set fails at k = " + std::to_string(check.failing_k) + ": "
                                 + check.condition);
    return out;
}

auto psd_set_from_os(const Graph & g, const OsSet & s) -> VertexSet
{
    if (auto check = verify_os_set(g, s); ! check)
        throw InvalidArgument("psd_set_from_os: not an OS-set (k = " + std::to_string(check.failing_k) + ": "
                              + check.condition + ")");
    auto out = g.all();
    for (auto v : s.order)
        out.erase(v);
    if (! is_forcing_set(g, out, Rule::psd))
        throw InvariantViolation("complement of an OS-set is not a psd forcing set");
    return out;
}

auto maximum_os_set(const Graph & g, const SearchOptions & opts) -> OsSet
{
    auto n = g.order();
    if (n == 0)
        throw InvalidArgument("OS search needs a non-empty graph");
    auto cap = std::min(opts.os_limit, 24U);
    if (n > cap)
        throw SizeLimitError("OS search: order " + std::to_string(n) + " exceeds the search limit of "
                             + std::to_string(cap));
    const std::uint32_t states = 1U << n;
    // last[S] = vertex appended last on some valid ordering of S, or n if
    // S is unreachable; the empty set is reachable.
    std::vector<std::uint8_t> last(states, static_cast<std::uint8_t>(n));
    std::vector<std::uint8_t> reachable(states, 0);
    reachable[0] = 1;
    std::uint32_t best = 0;
    for (std::uint32_t mask = 1; mask < states; ++mask) {
        Bits prefix;
        prefix.set_word(0, mask);
        for (Vertex v = 0; v < n; ++v) {
            if (! ((mask >> v) & 1U) || ! reachable[mask & ~(1U << v)])
                continue;
            if (first_witness(g, prefix, v)) {
                reachable[mask] = 1;
                last[mask] = static_cast<std::uint8_t>(v);
                break;
            }
        }
        if (reachable[mask] && std::popcount(mask) > std::popcount(best))
            best = mask;
    }
    OsSet out;
    for (auto mask = best; mask != 0;) {
        auto v = static_cast<Vertex>(last[mask]);
        Bits prefix;
        prefix.set_word(0, mask);
        out.order.push_back(v);
        out.witnesses.push_back(*first_witness(g, prefix, v));
        mask &= ~(1U << v);
    }
    std::reverse(out.order.begin(), out.order.end());
    std::reverse(out.witnesses.begin(), out.witnesses.end());
    return out;
}

auto os_number_bruteforce(const Graph & g, const SearchOptions & opts) -> unsigned
{
    return static_cast<unsigned>(maximum_os_set(g, opts).size());
}

} // namespace zforce
