#include "zforce/graph_io.hpp"

#include "zforce/errors.hpp"

#include <sstream>

namespace zforce {

namespace {

constexpr char lowest_printable = 63;
constexpr char highest_printable = 126;
constexpr std::string_view header = ">>graph6<<";

} // namespace

auto parse_graph6(std::string_view text) -> Graph
{
    std::size_t base = 0;
    if (text.starts_with(header))
        base = header.size();
    auto end = text.size();
    while (end > base && (text[end - 1] == '\n' || text[end - 1] == '\r' || text[end - 1] == ' ' || text[end - 1] == '\t'))
        --end;

    auto pos = base;
    auto next_byte = [&]() -> unsigned {
        if (pos >= end)
            throw ParseError("graph6 text ends prematurely", pos);
        char c = text[pos];
        if (c < lowest_printable || c > highest_printable)
            throw ParseError("graph6 byte " + std::to_string(static_cast<int>(static_cast<unsigned char>(c)))
                                 + " is outside the printable range 63..126",
                             pos);
        ++pos;
        return static_cast<unsigned>(c - lowest_printable);
    };

    if (pos >= end)
        throw ParseError("empty graph6 text", pos);

    unsigned long n = next_byte();
    if (n == 63) {
        auto marker = pos;
        if (pos < end && text[pos] == '~')
            throw ParseError("graph6 orders above 258047 are not supported", marker);
        n = 0;
        for (int i = 0; i < 3; ++i)
            n = (n << 6) | next_byte();
        if (n < 63)
            throw ParseError("graph6 long length prefix encodes a short order", marker);
    }
    if (n > max_order)
        throw SizeLimitError("graph6 order " + std::to_string(n) + " exceeds the supported maximum of "
                             + std::to_string(max_order));

    auto order = static_cast<unsigned>(n);
    std::vector<Edge> edges;
    unsigned current = 0;
    int remaining_bits = 0;
    for (Vertex j = 1; j < order; ++j)
        for (Vertex i = 0; i < j; ++i) {
            if (remaining_bits == 0) {
                current = next_byte();
                remaining_bits = 6;
            }
            --remaining_bits;
            if ((current >> remaining_bits) & 1U)
                edges.emplace_back(i, j);
        }
    if (pos != end)
        throw ParseError("trailing characters after graph6 body", pos);
    return Graph::from_edges(order, edges);
}

auto write_graph6(const Graph & g) -> std::string
{
    std::string out;
    auto n = g.order();
    if (n < 63)
        out += static_cast<char>(n + lowest_printable);
    else {
        out += static_cast<char>(highest_printable);
        for (int shift = 12; shift >= 0; shift -= 6)
            out += static_cast<char>(((n >> shift) & 0x3F) + lowest_printable);
    }
    unsigned current = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) {
            current = (current << 1) | (g.adjacent(i, j) ? 1U : 0U);
            if (++filled == 6) {
                out += static_cast<char>(current + lowest_printable);
                current = 0;
                filled = 0;
            }
        }
    if (filled > 0)
        out += static_cast<char>((current << (6 - filled)) + lowest_printable);
    return out;
}

auto read_graph6_stream(std::istream & in) -> std::vector<Graph>
{
    std::vector<Graph> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        try {
            out.push_back(parse_graph6(line));
        }
        catch (const ParseError & e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return out;
}

auto parse_edge_list(std::istream & in) -> Graph
{
    std::string line;
    std::vector<std::pair<long, long>> raw;
    long declared = -1;
    long largest = 0;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream fields(line);
        std::string first;
        if (! (fields >> first))
            continue;
        if (first == "n") {
            if (! (fields >> declared) || declared < 1)
                throw ParseError("edge list line " + std::to_string(line_no) + ": bad order declaration");
            continue;
        }
        long u = 0;
        long v = 0;
        try {
            u = std::stol(first);
        }
        catch (const std::exception &) {
            throw ParseError("edge list line " + std::to_string(line_no) + ": expected a vertex label");
        }
        std::string extra;
        if (! (fields >> v) || (fields >> extra))
            throw ParseError("edge list line " + std::to_string(line_no) + ": expected exactly two labels");
        if (u < 1 || v < 1)
            throw ParseError("edge list line " + std::to_string(line_no) + ": labels are 1-based");
        raw.emplace_back(u, v);
        largest = std::max({largest, u, v});
    }
    long n = declared >= 0 ? declared : largest;
    if (n < 1)
        throw ParseError("edge list is empty and declares no order");
    if (n > static_cast<long>(max_order))
        throw SizeLimitError("edge list order " + std::to_string(n) + " exceeds the supported maximum of "
                             + std::to_string(max_order));
    if (largest > n)
        throw ParseError("edge list label " + std::to_string(largest) + " exceeds declared order " + std::to_string(n));
    std::vector<Edge> edges;
    for (auto [u, v] : raw)
        edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
    try {
        return Graph::from_edges(static_cast<unsigned>(n), edges);
    }
    catch (const InvalidArgument & e) {
        throw ParseError(std::string("edge list: ") + e.what());
    }
}

} // namespace zforce
