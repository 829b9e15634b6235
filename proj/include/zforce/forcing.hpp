#pragma once

#include "zforce/graph.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace zforce {

enum class Rule
{
    standard,
    psd,
};

auto to_string(Rule rule) -> std::string_view;

/// Accepts "standard" and "psd".
auto parse_rule(std::string_view text) -> Rule;

struct Force
{
    Rule rule = Rule::standard;
    Vertex forcer = 0;
    Vertex forced = 0;
    /// 1-based position in the chronological list
    unsigned step = 0;
    /// psd rule: the white component containing `forced` when the force was
    /// applied. Standard rule: the whole white set at that time.
    VertexSet component;
};

/// Chronological list of forces from an initial colouring.
struct ForceLog
{
    Rule rule = Rule::standard;
    VertexSet initial;
    std::vector<Force> forces;
    VertexSet derived;

    [[nodiscard]] auto complete() const -> bool { return derived.size() == derived.ambient(); }
};

/// Applies `rule` until no force is possible. Force order is canonical: scan
/// black vertices ascending, then their white targets ascending, apply the
/// first valid force, and (psd) recompute the white components before the
/// next scan.
auto derived_set(const Graph & g, const VertexSet & initial, Rule rule) -> ForceLog;

/// derived_set(g, s, rule).derived == V, computed with the batch kernels.
[[nodiscard]] auto is_forcing_set(const Graph & g, const VertexSet & s, Rule rule) -> bool;

/// Derived set alone, via the batch kernels.
auto closure(const Graph & g, const VertexSet & s, Rule rule) -> VertexSet;

/// Replays the log from its initial set and checks every force was valid when
/// applied and that the recorded derived set is a fixpoint. Returns an
/// explanation of the first problem, or nullopt.
auto verify_force_log(const Graph & g, const ForceLog & log) -> std::optional<std::string>;

/// True iff `rule` admits no further force from `black`.
[[nodiscard]] auto is_fixpoint(const Graph & g, const VertexSet & black, Rule rule) -> bool;

struct ChainDecomposition
{
    /// One chain per initial vertex, in ascending order of first vertex.
    std::vector<std::vector<Vertex>> chains;
};

/// Maximal forcing chains of a complete standard log.
auto chains(const ForceLog & log) -> ChainDecomposition;

/// Last vertices of the maximal forcing chains.
auto reversal(const ForceLog & log) -> VertexSet;

/// The reversed chronological list: forces in reverse order with each force
/// reversed, starting from the reversal. For a complete standard log this is
/// itself a valid complete log.
auto reversed_log(const Graph & g, const ForceLog & log) -> ForceLog;

/// Line-oriented certificate: "rule <r>", "initial <labels>", then one
/// "<step> <u> -> <w> [component]" line per force, all labels 1-based.
auto certificate(const ForceLog & log) -> std::string;

} // namespace zforce
