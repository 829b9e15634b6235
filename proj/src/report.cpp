#include "zforce/report.hpp"

#include "zforce/errors.hpp"

#include <sstream>

namespace zforce {

namespace {

auto labels(const VertexSet & s, unsigned offset) -> Json
{
    auto out = Json::array();
    for (auto v : s.vertices())
        out.push_back(v + offset);
    return out;
}

auto labels(const std::vector<Vertex> & path, unsigned offset) -> Json
{
    auto out = Json::array();
    for (auto v : path)
        out.push_back(v + offset);
    return out;
}

auto path_from(const Json & j, unsigned n) -> std::vector<Vertex>
{
    std::vector<Vertex> out;
    for (const auto & x : j) {
        auto label = x.get<long>();
        if (label < 1 || label > static_cast<long>(n))
            throw ParseError("vertex label " + std::to_string(label) + " outside 1.." + std::to_string(n));
        out.push_back(static_cast<Vertex>(label - 1));
    }
    return out;
}

auto set_from(const Json & j, unsigned n) -> VertexSet { return {n, path_from(j, n)}; }

} // namespace

auto search_json(const std::string & graph, unsigned n, Rule rule, const SearchResult & result) -> Json
{
    Json j;
    j["graph"] = graph;
    j["n"] = n;
    j["rule"] = std::string(to_string(rule));
    j["value"] = result.value;
    j["sets"] = Json::array();
    j["sets_zero_based"] = Json::array();
    for (const auto & s : result.sets) {
        j["sets"].push_back(labels(s, 1));
        j["sets_zero_based"].push_back(labels(s, 0));
    }
    j["nodes_explored"] = result.nodes_explored;
    return j;
}

auto to_json(const BoundsReport & r) -> Json
{
    Json j;
    j["n"] = r.n;
    j["delta"] = r.delta;
    j["path_cover"] = r.path_cover;
    j["clique_cover"] = r.clique_cover;
    j["Z"] = r.z;
    j["Zplus"] = r.zplus;
    j["OS"] = r.os;
    j["lower_Mplus"] = r.lower_mplus;
    Json zero;
    for (unsigned offset : {1u, 0u}) {
        auto & target = offset == 1 ? j : zero;
        target["zfs"] = labels(r.zfs, offset);
        target["psd_zfs"] = labels(r.psd_zfs, offset);
        target["paths"] = Json::array();
        for (const auto & p : r.paths)
            target["paths"].push_back(labels(p, offset));
        target["cliques"] = Json::array();
        for (const auto & c : r.cliques)
            target["cliques"].push_back(labels(c, offset));
    }
    j["zero_based"] = zero;
    j["notes"] = r.notes;
    return j;
}

auto bounds_from_json(const Json & j) -> BoundsReport
{
    try {
        BoundsReport r;
        r.n = j.at("n").get<unsigned>();
        r.delta = j.at("delta").get<unsigned>();
        r.path_cover = j.at("path_cover").get<unsigned>();
        r.clique_cover = j.at("clique_cover").get<unsigned>();
        r.z = j.at("Z").get<unsigned>();
        r.zplus = j.at("Zplus").get<unsigned>();
        r.os = j.at("OS").get<unsigned>();
        r.lower_mplus = j.at("lower_Mplus").get<int>();
        r.zfs = set_from(j.at("zfs"), r.n);
        r.psd_zfs = set_from(j.at("psd_zfs"), r.n);
        for (const auto & p : j.at("paths"))
            r.paths.push_back(path_from(p, r.n));
        for (const auto & c : j.at("cliques"))
            r.cliques.push_back(set_from(c, r.n));
        r.notes = j.at("notes").get<std::vector<std::string>>();
        return r;
    }
    catch (const nlohmann::json::exception & e) {
        throw ParseError(std::string("bounds report JSON: ") + e.what());
    }
}

auto format_bounds(const BoundsReport & r) -> std::string
{
    std::ostringstream out;
    auto row = [&](const std::string & name, const std::string & value) {
        out << "  " << name;
        for (auto k = name.size(); k < 12; ++k)
            out << ' ';
        out << value << '\n';
    };
    row("n", std::to_string(r.n));
    row("delta", std::to_string(r.delta));
    row("n - cc", std::to_string(r.lower_mplus));
    row("Z+", std::to_string(r.zplus) + "  " + to_string(r.psd_zfs));
    row("Z", std::to_string(r.z) + "  " + to_string(r.zfs));
    row("OS", std::to_string(r.os));
    std::string paths;
    for (const auto & p : r.paths) {
        paths += paths.empty() ? "" : " ";
        std::string inner;
        for (auto v : p)
            inner += (inner.empty() ? "" : "-") + std::to_string(v + 1);
        paths += inner;
    }
    row("P", std::to_string(r.path_cover) + "  " + paths);
    std::string cliques;
    for (const auto & c : r.cliques)
        cliques += (cliques.empty() ? "" : " ") + to_string(c);
    row("cc", std::to_string(r.clique_cover) + "  " + cliques);
    for (const auto & note : r.notes)
        out << "  note: " << note << '\n';
    return out.str();
}

} // namespace zforce
