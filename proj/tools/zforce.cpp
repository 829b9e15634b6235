// zforce command-line front end. Vertex labels in output are 1-based.
#include "zforce/acceptance.hpp"
#include "zforce/bounds.hpp"
#include "zforce/errors.hpp"
#include "zforce/families.hpp"
#include "zforce/forcing.hpp"
#include "zforce/graph_io.hpp"
#include "zforce/os_set.hpp"
#include "zforce/report.hpp"
#include "zforce/search.hpp"
#include "zforce/witness.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>

using namespace zforce;

namespace {

enum Exit
{
    ok = 0,
    failed = 1,
    parse_failure = 2,
    size_refused = 3,
    invariant_broken = 4,
};

struct RunConfig
{
    std::string g6;
    std::string edges;
    std::vector<std::string> family;
    std::string rule = "standard";
    bool json = false;
    bool all_min = false;
    bool certificate = false;
    unsigned search_limit = SearchOptions{}.search_limit;
    unsigned workers = 0;
    double tol = 1e-8;
    std::string output;

    // witness
    std::string tree;
    unsigned r = 2;
    std::vector<double> h43_params;
    std::string root = "omega";

    // reproduce
    std::string only;
    unsigned max_n = 0;
};

struct Input
{
    std::string name;
    Graph graph;
};

auto read_text(const std::string & path) -> std::string
{
    std::ifstream in(path);
    if (! in)
        throw InvalidArgument("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

auto load_input(const RunConfig & cfg) -> Input
{
    int sources = ! cfg.g6.empty() + ! cfg.edges.empty() + ! cfg.family.empty();
    if (sources != 1)
        throw InvalidArgument("give exactly one of --g6, --edges, --family");
    if (! cfg.g6.empty()) {
        if (std::filesystem::is_regular_file(cfg.g6)) {
            std::istringstream in(read_text(cfg.g6));
            auto graphs = read_graph6_stream(in);
            if (graphs.size() != 1)
                throw ParseError(cfg.g6 + " holds " + std::to_string(graphs.size()) + " graphs; expected one");
            return {cfg.g6, graphs.front()};
        }
        return {cfg.g6, parse_graph6(cfg.g6)};
    }
    if (! cfg.edges.empty()) {
        std::ifstream in(cfg.edges);
        if (! in)
            throw InvalidArgument("cannot open " + cfg.edges);
        return {cfg.edges, parse_edge_list(in)};
    }
    std::vector<long> params;
    for (std::size_t i = 1; i < cfg.family.size(); ++i) {
        try {
            std::size_t used = 0;
            params.push_back(std::stol(cfg.family[i], &used));
            if (used != cfg.family[i].size())
                throw std::invalid_argument("");
        }
        catch (const std::exception &) {
            throw ParseError("family parameter '" + cfg.family[i] + "' is not an integer");
        }
    }
    std::string name = cfg.family.front();
    for (auto p : params)
        name += " " + std::to_string(p);
    return {name, family(cfg.family.front(), params)};
}

auto search_options(const RunConfig & cfg) -> SearchOptions
{
    SearchOptions opts;
    opts.search_limit = cfg.search_limit;
    opts.workers = cfg.workers;
    return opts;
}

auto cmd_param(const RunConfig & cfg, std::ostream & out) -> int
{
    auto input = load_input(cfg);
    auto rule = parse_rule(cfg.rule);
    auto opts = search_options(cfg);
    auto result = cfg.all_min ? minimum_forcing_sets(input.graph, rule, opts)
                              : zero_forcing_number(input.graph, rule, opts);
    std::string cert;
    if (cfg.certificate && ! result.sets.empty())
        cert = certificate(derived_set(input.graph, result.sets.front(), rule));
    if (cfg.json) {
        auto j = search_json(input.name, input.graph.order(), rule, result);
        if (cfg.certificate)
            j["certificate"] = cert;
        out << j.dump(2) << '\n';
        return ok;
    }
    out << "graph " << input.name << " (n=" << input.graph.order() << ")\n";
    out << (rule == Rule::psd ? "Z+" : "Z") << " = " << result.value << '\n';
    for (const auto & s : result.sets)
        out << "minimum set " << to_string(s) << '\n';
    if (cfg.all_min)
        out << result.sets.size() << " minimum sets\n";
    if (cfg.certificate)
        out << cert;
    return ok;
}

auto cmd_bounds(const RunConfig & cfg, std::ostream & out) -> int
{
    auto input = load_input(cfg);
    BoundsOptions opts;
    opts.search = search_options(cfg);
    auto report = bounds_report(input.graph, opts);
    if (cfg.json) {
        auto j = to_json(report);
        j["graph"] = input.name;
        out << j.dump(2) << '\n';
    }
    else
        out << "graph " << input.name << "\n" << format_bounds(report);
    return ok;
}

auto cmd_os(const RunConfig & cfg, std::ostream & out) -> int
{
    auto input = load_input(cfg);
    auto opts = search_options(cfg);
    auto s = maximum_os_set(input.graph, opts);
    auto check = verify_os_set(input.graph, s);
    if (! check)
        throw InvariantViolation("OS-set failed its own check at position " + std::to_string(check.failing_k));
    auto complement = psd_set_from_os(input.graph, s);
    if (cfg.json) {
        Json j;
        j["graph"] = input.name;
        j["n"] = input.graph.order();
        j["OS"] = s.size();
        j["order"] = Json::array();
        j["witnesses"] = Json::array();
        for (std::size_t k = 0; k < s.size(); ++k) {
            j["order"].push_back(s.order[k] + 1);
            j["witnesses"].push_back(s.witnesses[k] + 1);
        }
        auto comp = Json::array();
        for (auto v : complement.vertices())
            comp.push_back(v + 1);
        j["psd_forcing_complement"] = comp;
        out << j.dump(2) << '\n';
        return ok;
    }
    out << "graph " << input.name << " (n=" << input.graph.order() << ")\n";
    out << "OS = " << s.size() << '\n';
    for (std::size_t k = 0; k < s.size(); ++k)
        out << "  v" << k + 1 << " = " << s.order[k] + 1 << "  witness " << s.witnesses[k] + 1 << '\n';
    out << "complement " << to_string(complement) << " is a psd forcing set of size "
        << input.graph.order() - s.size() << '\n';
    return ok;
}

void print_matrix_summary(const DenseMatrix & a, unsigned rank, std::ostream & out)
{
    auto sv = singular_values(a);
    out << "# rank " << rank << ", nullity " << a.cols() - rank << "\n# singular values";
    for (auto s : sv)
        out << ' ' << std::setprecision(3) << s;
    out << std::setprecision(6) << '\n';
}

auto cmd_witness_tree(const RunConfig & cfg, std::ostream & out) -> int
{
    auto tree = std::filesystem::is_regular_file(cfg.tree) ? parse_graph6(read_text(cfg.tree)) : parse_graph6(cfg.tree);
    auto w = build_tree_clique_witness(tree, cfg.r);
    auto rank = numeric_rank(w.matrix, cfg.tol);
    bool psd = is_psd(w.matrix);
    auto pattern = pattern_matches(w.matrix, w.pattern);
    if (! psd || ! pattern)
        throw InvariantViolation("tree-clique witness failed its psd or pattern check");
    if (cfg.json) {
        Json j;
        j["n"] = w.matrix.rows();
        j["rank"] = rank;
        j["nullity"] = w.matrix.rows() - rank;
        j["psd"] = psd;
        j["pattern_ok"] = pattern.verdict;
        j["alphas"] = w.alphas;
        std::ostringstream m;
        write_matrix(m, w.matrix);
        j["matrix"] = m.str();
        out << j.dump(2) << '\n';
        return ok;
    }
    print_matrix_summary(w.matrix, rank, out);
    out << "# psd yes, pattern exact\n";
    write_matrix(out, w.matrix);
    return ok;
}

auto cmd_witness_h43(const RunConfig & cfg, std::ostream & out) -> int
{
    H43Params params;
    params.root = parse_cube_root(cfg.root);
    if (! cfg.h43_params.empty()) {
        if (cfg.h43_params.size() != 3)
            throw InvalidArgument("--params takes a_15_6 a_3_12 a_3_14");
        params.a_15_6 = cfg.h43_params[0];
        params.a_3_12 = cfg.h43_params[1];
        params.a_3_14 = cfg.h43_params[2];
    }
    auto a = build_h43_witness(params);
    auto rank = numeric_rank(a, cfg.tol);
    double residual = row_space_residual(a, {0, 1, 2}, {3, 4, 5, 6, 7});
    if (cfg.json) {
        Json j;
        j["rank"] = rank;
        j["row_residual"] = residual;
        j["pattern_ok"] = support_matches(a, h43_support()).verdict;
        std::ostringstream m;
        write_matrix(m, a);
        j["matrix"] = m.str();
        out << j.dump(2) << '\n';
        return ok;
    }
    print_matrix_summary(a, rank, out);
    out << "# rows 4-8 from rows 1-3: residual " << residual << "\n";
    write_matrix(out, a);
    return ok;
}

auto cmd_reproduce(const RunConfig & cfg, std::ostream & out) -> int
{
    AcceptanceOptions opts;
    if (! cfg.only.empty())
        opts.only = cfg.only;
    opts.max_n = cfg.max_n;
    opts.workers = cfg.workers;
    auto results = run_acceptance(opts);
    std::vector<std::string> failures;
    for (const auto & r : results) {
        out << format_result(r) << std::endl;
        if (! r.pass)
            failures.push_back(r.name);
    }
    if (failures.empty()) {
        out << "all " << results.size() << " checks passed\n";
        return ok;
    }
    out << "failed:";
    for (const auto & f : failures)
        out << ' ' << f;
    out << '\n';
    return failed;
}

void add_input_options(CLI::App * cmd, RunConfig & cfg)
{
    cmd->add_option("--g6", cfg.g6, "graph6 string or file holding one graph");
    cmd->add_option("--edges", cfg.edges, "edge list file (1-based 'u v' lines, optional 'n N')");
    cmd->add_option("--family", cfg.family, "family name followed by its integer parameters")->expected(1, -1);
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"zero forcing parameters, bounds and matrix witnesses"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig cfg;
    app.add_flag("--json", cfg.json, "JSON output");
    app.add_option("--search-limit", cfg.search_limit, "largest order searched exhaustively")
        ->check(CLI::PositiveNumber);
    app.add_option("--workers", cfg.workers, "OpenMP workers (0 = runtime default)");
    app.add_option("--tol", cfg.tol, "relative rank tolerance")->check(CLI::PositiveNumber);
    app.add_option("-o,--output", cfg.output, "write to this file instead of stdout");

    auto * param = app.add_subcommand("param", "Z or Z+ with an optimal set");
    add_input_options(param, cfg);
    param->add_option("--rule", cfg.rule, "standard or psd")->check(CLI::IsMember({"standard", "psd"}));
    param->add_flag("--all-min", cfg.all_min, "list every minimum set");
    param->add_flag("--certificate", cfg.certificate, "print the force log of the first set");

    auto * bounds = app.add_subcommand("bounds", "delta, P, cc, Z, Z+, OS and the nullity bracket");
    add_input_options(bounds, cfg);

    auto * os = app.add_subcommand("os", "a maximum OS-set with witnesses");
    add_input_options(os, cfg);

    auto * witness = app.add_subcommand("witness", "numeric matrix witnesses");
    witness->require_subcommand(1);
    witness->fallthrough();
    auto * tree_clique = witness->add_subcommand("tree-clique", "psd matrix with graph T box K_r");
    tree_clique->add_option("--tree", cfg.tree, "tree in graph6")->required();
    tree_clique->add_option("--r", cfg.r, "clique order")->check(CLI::Range(2u, 64u));
    auto * h43 = witness->add_subcommand("h43", "complex rank-3 matrix for the 4-hub wheel H4(3)");
    h43->add_option("--params", cfg.h43_params, "a_15_6 a_3_12 a_3_14")->expected(3);
    h43->add_option("--root", cfg.root, "omega or omega-bar");

    auto * reproduce = app.add_subcommand("reproduce", "run the reproduction checks");
    reproduce->add_option("--only", cfg.only, "single check by name");
    reproduce->add_option("--max-n", cfg.max_n, "cap enumeration orders");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e);
        return parse_failure;
    }

    std::ofstream file;
    if (! cfg.output.empty()) {
        file.open(cfg.output);
        if (! file) {
            std::cerr << "zforce: cannot write " << cfg.output << '\n';
            return failed;
        }
    }
    std::ostream & out = cfg.output.empty() ? std::cout : file;

    try {
        if (param->parsed())
            return cmd_param(cfg, out);
        if (bounds->parsed())
            return cmd_bounds(cfg, out);
        if (os->parsed())
            return cmd_os(cfg, out);
        if (tree_clique->parsed())
            return cmd_witness_tree(cfg, out);
        if (h43->parsed())
            return cmd_witness_h43(cfg, out);
        if (reproduce->parsed())
            return cmd_reproduce(cfg, out);
    }
    catch (const ParseError & e) {
        std::cerr << "zforce: parse error: " << e.what() << '\n';
        return parse_failure;
    }
    catch (const SizeLimitError & e) {
        std::cerr << "zforce: refused: " << e.what() << '\n';
        return size_refused;
    }
    catch (const InvariantViolation & e) {
        std::cerr << "zforce: internal check failed: " << e.what() << '\n';
        return invariant_broken;
    }
    catch (const std::exception & e) {
        std::cerr << "zforce: " << e.what() << '\n';
        return failed;
    }
    return failed;
}
