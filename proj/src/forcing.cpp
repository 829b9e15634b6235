#include "zforce/forcing.hpp"

#include "zforce/errors.hpp"
#include "zforce/kernels.hpp"

#include <sstream>

namespace zforce {

auto to_string(Rule rule) -> std::string_view { return rule == Rule::standard ? "standard" : "psd"; }

auto parse_rule(std::string_view text) -> Rule
{
    if (text == "standard")
        return Rule::standard;
    if (text == "psd")
        return Rule::psd;
    throw InvalidArgument("unknown colour change rule '" + std::string(text) + "'");
}

namespace {

void check_set(const Graph & g, const VertexSet & s)
{
    if (s.ambient() != g.order())
        throw InvalidArgument("vertex set ambient order does not match the graph");
}

/// White component (psd) or the white set (standard) that makes u -> w valid,
/// if the force is valid from `black`.
auto force_scope(const Graph & g, const Bits & black, Vertex u, Vertex w, Rule rule) -> std::optional<Bits>
{
    if (! black.test(u) || black.test(w) || ! g.adjacent(u, w))
        return std::nullopt;
    Bits white = Bits::first_n(g.order()) - black;
    Bits scope = white;
    if (rule == Rule::psd)
        for (auto & c : components(g, VertexSet(g.order(), white)))
            if (c.contains(w)) {
                scope = c.bits();
                break;
            }
    if ((g.neighbor_bits(u) & scope) == Bits::single(w))
        return scope;
    return std::nullopt;
}

} // namespace

auto derived_set(const Graph & g, const VertexSet & initial, Rule rule) -> ForceLog
{
    check_set(g, initial);
    ForceLog log;
    log.rule = rule;
    log.initial = initial;
    Bits black = initial.bits();
    const Bits all = Bits::first_n(g.order());
    for (;;) {
        bool forced = false;
        Bits white = all - black;
        std::vector<VertexSet> comps;
        if (rule == Rule::psd && white.any())
            comps = components(g, VertexSet(g.order(), white));
        for (Vertex u = black.first(); u < g.order() && ! forced; u = black.next(u)) {
            Bits targets = g.neighbor_bits(u) & white;
            for (Vertex w = targets.first(); w < g.order(); w = targets.next(w)) {
                Bits scope = white;
                if (rule == Rule::psd)
                    for (auto & c : comps)
                        if (c.contains(w)) {
                            scope = c.bits();
                            break;
                        }
                if ((g.neighbor_bits(u) & scope) == Bits::single(w)) {
                    log.forces.push_back(Force{rule, u, w, static_cast<unsigned>(log.forces.size() + 1),
                                               VertexSet(g.order(), scope)});
                    black.set(w);
                    forced = true;
                    break;
                }
            }
        }
        if (! forced)
            break;
    }
    log.derived = VertexSet(g.order(), black);
    return log;
}

auto closure(const Graph & g, const VertexSet & s, Rule rule) -> VertexSet
{
    check_set(g, s);
    auto run = [&]<unsigned W>() {
        kernels::Adjacency<W> adj(g);
        auto start = kernels::narrow<W>(s.bits());
        auto out = rule == Rule::standard ? kernels::standard_closure(adj, start) : kernels::psd_closure(adj, start);
        return VertexSet(g.order(), kernels::widen(out));
    };
    if (g.order() <= fast_path_order)
        return run.template operator()<1>();
    return run.template operator()<2>();
}

auto is_forcing_set(const Graph & g, const VertexSet & s, Rule rule) -> bool
{
    return closure(g, s, rule).size() == g.order();
}

auto is_fixpoint(const Graph & g, const VertexSet & black, Rule rule) -> bool
{
    check_set(g, black);
    Bits white = Bits::first_n(g.order()) - black.bits();
    for (Vertex u = black.bits().first(); u < g.order(); u = black.bits().next(u)) {
        Bits targets = g.neighbor_bits(u) & white;
        for (Vertex w = targets.first(); w < g.order(); w = targets.next(w))
            if (force_scope(g, black.bits(), u, w, rule))
                return false;
    }
    return true;
}

auto verify_force_log(const Graph & g, const ForceLog & log) -> std::optional<std::string>
{
    if (log.initial.ambient() != g.order() || log.derived.ambient() != g.order())
        return "log ambient order does not match the graph";
    Bits black = log.initial.bits();
    unsigned previous_step = 0;
    for (auto & f : log.forces) {
        auto where = "force " + std::to_string(f.step) + " (" + std::to_string(f.forcer + 1) + " -> "
                     + std::to_string(f.forced + 1) + ")";
        if (f.rule != log.rule)
            return where + ": rule differs from the log's";
        if (f.step <= previous_step)
            return where + ": steps are not strictly increasing";
        previous_step = f.step;
        if (f.forcer >= g.order() || f.forced >= g.order())
            return where + ": vertex out of range";
        if (! force_scope(g, black, f.forcer, f.forced, log.rule))
            return where + ": not a valid force at that point";
        black.set(f.forced);
    }
    if (black != log.derived.bits())
        return "recorded derived set differs from the replayed one";
    if (! is_fixpoint(g, log.derived, log.rule))
        return "recorded derived set admits a further force";
    return std::nullopt;
}

auto chains(const ForceLog & log) -> ChainDecomposition
{
    if (log.rule != Rule::standard)
        throw InvalidArgument("forcing chains are defined for the standard rule only");
    if (! log.complete())
        throw InvalidArgument("forcing chains need a complete log (derived set = V)");
    auto n = log.initial.ambient();
    std::vector<Vertex> next(n, max_order);
    for (auto & f : log.forces) {
        if (next[f.forcer] != max_order)
            throw InvariantViolation("vertex " + std::to_string(f.forcer + 1) + " forces twice under the standard rule");
        next[f.forcer] = f.forced;
    }
    ChainDecomposition out;
    for (auto start : log.initial.vertices()) {
        std::vector<Vertex> chain{start};
        while (next[chain.back()] != max_order)
            chain.push_back(next[chain.back()]);
        out.chains.push_back(std::move(chain));
    }
    return out;
}

auto reversal(const ForceLog & log) -> VertexSet
{
    VertexSet out(log.initial.ambient());
    for (auto & c : chains(log).chains)
        out.insert(c.back());
    return out;
}

auto reversed_log(const Graph & g, const ForceLog & log) -> ForceLog
{
    ForceLog out;
    out.rule = Rule::standard;
    out.initial = reversal(log);
    Bits black = out.initial.bits();
    const Bits all = Bits::first_n(g.order());
    for (auto it = log.forces.rbegin(); it != log.forces.rend(); ++it) {
        out.forces.push_back(Force{Rule::standard, it->forced, it->forcer, static_cast<unsigned>(out.forces.size() + 1),
                                   VertexSet(g.order(), all - black)});
        black.set(it->forcer);
    }
    out.derived = VertexSet(g.order(), black);
    return out;
}

auto certificate(const ForceLog & log) -> std::string
{
    std::ostringstream out;
    out << "rule " << to_string(log.rule) << '\n';
    out << "initial " << to_string(log.initial) << '\n';
    for (auto & f : log.forces) {
        out << f.step << ' ' << f.forcer + 1 << " -> " << f.forced + 1;
        if (f.rule == Rule::psd)
        {
            auto c = to_string(f.component);
            out << " [" << c.substr(1, c.size() - 2) << ']';
        }
        out << '\n';
    }
    out << "derived " << to_string(log.derived) << '\n';
    return out.str();
}

} // namespace zforce
