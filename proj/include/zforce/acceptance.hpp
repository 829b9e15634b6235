#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace zforce {

struct CriterionResult
{
    unsigned id = 0;
    std::string name;
    bool pass = false;
    /// expected vs computed, or the first counterexample
    std::string detail;
    double seconds = 0;
};

struct AcceptanceOptions
{
    /// run a single criterion by name
    std::optional<std::string> only;
    /// cap on exhaustive enumeration orders; 0 keeps each criterion's default
    unsigned max_n = 0;
    unsigned workers = 0;
    std::uint64_t seed = 20240601;
};

auto criterion_names() -> std::vector<std::string>;

/// Runs the reproduction checks in order. Throws InvalidArgument for an
/// unknown name in `only`.
auto run_acceptance(const AcceptanceOptions & opts = {}) -> std::vector<CriterionResult>;

/// "PASS  3 duality      <detail>  (1.2 s)"
auto format_result(const CriterionResult & r) -> std::string;

} // namespace zforce
