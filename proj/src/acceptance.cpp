#include "zforce/acceptance.hpp"

#include "zforce/bounds.hpp"
#include "zforce/enumerate.hpp"
#include "zforce/errors.hpp"
#include "zforce/families.hpp"
#include "zforce/forcing.hpp"
#include "zforce/graph_io.hpp"
#include "zforce/os_set.hpp"
#include "zforce/search.hpp"
#include "zforce/witness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>

namespace zforce {

namespace {

// Expected values. `published` marks numbers known from the literature;
// the rest are properties checked against computation.
struct Fixture
{
    const char * what;
    unsigned expected;
    bool published;
};

constexpr Fixture pinwheel_z{"Z(pinwheel)", 4, true};
constexpr Fixture pinwheel_zplus{"Z+(pinwheel)", 3, true};
constexpr Fixture pinwheel_p{"P(pinwheel)", 3, true};
constexpr Fixture pinwheel_cc{"cc(pinwheel)", 9, true};
constexpr Fixture ml8_zplus{"Z+(ML8)", 4, true};
constexpr unsigned ml8_hmplus = 3; // literature value, not computed here
constexpr Fixture book_zplus{"Z+(book)", 2, true};

auto fixture_text(const Fixture & f, unsigned got) -> std::string
{
    std::ostringstream out;
    out << f.what << "=" << got << " (expected " << f.expected << (f.published ? ", published" : "") << ")";
    return out.str();
}

struct Context
{
    AcceptanceOptions opts;
    SearchOptions search;
    BoundsOptions bounds;

    // graphs from the duality, reversal and intersection checks, reused by the sandwich check
    std::vector<Graph> pool;
    bool pool_ready = false;
};

auto cap(const Context & ctx, unsigned fallback) -> unsigned
{
    return ctx.opts.max_n == 0 ? fallback : std::min(fallback, ctx.opts.max_n);
}

auto label(const Graph & g) -> std::string { return "graph6 " + write_graph6(g); }

auto duality_graphs(const Context & ctx) -> std::vector<Graph>
{
    std::vector<Graph> out;
    for (unsigned n = 1; n <= cap(ctx, 6); ++n)
        for (auto & g : connected_graphs(n))
            out.push_back(std::move(g));
    return out;
}

auto random_graphs(const Context & ctx) -> std::vector<Graph>
{
    std::vector<Graph> out;
    if (ctx.opts.max_n != 0 && ctx.opts.max_n < 7)
        return out;
    unsigned hi = cap(ctx, 8);
    std::mt19937_64 rng(ctx.opts.seed);
    std::uniform_int_distribution<unsigned> order(7, hi);
    std::uniform_real_distribution<double> density(0.0, 0.6);
    for (int i = 0; i < 200; ++i) {
        auto n = order(rng);
        auto p = density(rng);
        out.push_back(random_connected_graph(n, p, rng));
    }
    return out;
}

auto reversal_graphs(const Context & ctx) -> std::vector<Graph>
{
    std::vector<Graph> out;
    for (unsigned n = 1; n <= cap(ctx, 7); ++n)
        for (auto & g : connected_graphs(n))
            out.push_back(std::move(g));
    return out;
}

auto check_pinwheel(Context & ctx) -> CriterionResult
{
    auto g = pinwheel12();
    auto z = zero_forcing_number(g, Rule::standard, ctx.search).value;
    auto zp = zero_forcing_number(g, Rule::psd, ctx.search).value;
    auto p = path_cover_number(g, ctx.bounds).value;
    auto cc = clique_cover_number(g, ctx.bounds).value;
    CriterionResult r;
    r.pass = z == pinwheel_z.expected && zp == pinwheel_zplus.expected && p == pinwheel_p.expected
             && cc == pinwheel_cc.expected;
    r.detail = fixture_text(pinwheel_z, z) + ", " + fixture_text(pinwheel_zplus, zp) + ", " + fixture_text(pinwheel_p, p)
               + ", " + fixture_text(pinwheel_cc, cc);
    return r;
}

auto check_trees(Context & ctx) -> CriterionResult
{
    CriterionResult r;
    r.pass = true;
    std::size_t classes = 0;
    std::size_t labelled = 0;
    auto check = [&](const Graph & t) {
        auto zp = zero_forcing_number(t, Rule::psd, ctx.search).value;
        auto z = zero_forcing_number(t, Rule::standard, ctx.search).value;
        auto p = path_cover_number(t, ctx.bounds).value;
        if (zp != 1 || p != z) {
            if (r.pass)
                r.detail = "counterexample " + label(t) + ": Z+=" + std::to_string(zp) + " P=" + std::to_string(p)
                           + " Z=" + std::to_string(z);
            r.pass = false;
        }
    };
    unsigned top = cap(ctx, 10);
    for (unsigned n = 1; n <= top; ++n)
        for (const auto & t : nonisomorphic_trees(n)) {
            check(t);
            ++classes;
        }
    // every labelled tree via Pruefer sequences where that is cheap
    for (unsigned n = 2; n <= std::min(top, 8u); ++n)
        for (const auto & t : all_labelled_trees(n)) {
            check(t);
            ++labelled;
        }
    if (r.pass)
        r.detail = "Z+=1 and P=Z on " + std::to_string(classes) + " isomorphism classes n<=" + std::to_string(top)
                   + " and " + std::to_string(labelled) + " labelled trees n<=" + std::to_string(std::min(top, 8u));
    return r;
}

auto check_duality(Context & ctx) -> CriterionResult
{
    CriterionResult r;
    r.pass = true;
    auto graphs = duality_graphs(ctx);
    auto extra = random_graphs(ctx);
    std::size_t exhaustive = graphs.size();
    graphs.insert(graphs.end(), extra.begin(), extra.end());
    for (const auto & g : graphs) {
        auto os = os_number_bruteforce(g, ctx.search);
        auto zp = zero_forcing_number(g, Rule::psd, ctx.search).value;
        if (os + zp != g.order()) {
            r.pass = false;
            r.detail = "counterexample " + label(g) + ": OS=" + std::to_string(os) + " Z+=" + std::to_string(zp);
            break;
        }
    }
    if (r.pass)
        r.detail = "OS+Z+=n on " + std::to_string(exhaustive) + " connected graphs n<=" + std::to_string(cap(ctx, 6))
                   + " and " + std::to_string(extra.size()) + " random connected graphs";
    if (! ctx.pool_ready)
        ctx.pool.insert(ctx.pool.end(), extra.begin(), extra.end());
    return r;
}

auto check_reversal(Context & ctx) -> CriterionResult
{
    CriterionResult r;
    r.pass = true;
    std::size_t checked = 0;
    for (const auto & g : reversal_graphs(ctx)) {
        for (const auto & s : all_minimum_zfs(g, Rule::standard, ctx.search)) {
            auto log = derived_set(g, s, Rule::standard);
            auto rev = reversal(log);
            ++checked;
            if (! is_forcing_set(g, rev, Rule::standard)) {
                r.pass = false;
                r.detail = "counterexample " + label(g) + ": reversal " + to_string(rev) + " of " + to_string(s);
                return r;
            }
        }
    }
    r.detail = "reversal forces on " + std::to_string(checked) + " minimum zero forcing sets, n<="
               + std::to_string(cap(ctx, 7));
    return r;
}

auto check_intersection(Context & ctx) -> CriterionResult
{
    CriterionResult r;
    r.pass = true;
    std::size_t graphs = 0;
    for (const auto & g : reversal_graphs(ctx)) {
        if (g.order() < 2)
            continue;
        ++graphs;
        auto sets = all_minimum_zfs(g, Rule::standard, ctx.search);
        auto common = VertexSet::full(g.order());
        for (const auto & s : sets) {
            common = common & s;
            for (auto v : s.vertices())
                if (g.neighbors(v).is_subset_of(s)) {
                    r.pass = false;
                    r.detail = "counterexample " + label(g) + ": vertex " + std::to_string(v + 1)
                               + " has no neighbor outside " + to_string(s);
                    return r;
                }
        }
        if (! common.empty()) {
            r.pass = false;
            r.detail = "counterexample " + label(g) + ": every minimum set contains " + to_string(common);
            return r;
        }
    }
    r.detail = "empty intersection and outside neighbors on " + std::to_string(graphs) + " connected graphs 2<=n<="
               + std::to_string(cap(ctx, 7));
    return r;
}

auto check_sandwich(Context & ctx) -> CriterionResult
{
    CriterionResult r;
    r.pass = true;
    std::vector<Graph> graphs = reversal_graphs(ctx);
    if (ctx.pool.empty())
        ctx.pool = random_graphs(ctx);
    graphs.insert(graphs.end(), ctx.pool.begin(), ctx.pool.end());
    for (const auto & g : graphs) {
        BoundsReport b;
        try {
            b = bounds_report(g, ctx.bounds);
        }
        catch (const InvariantViolation & e) {
            r.pass = false;
            r.detail = "counterexample " + label(g) + ": " + e.what();
            return r;
        }
        bool ok = b.delta <= b.zplus && b.zplus <= b.z && b.path_cover <= b.z
                  && static_cast<int>(g.order()) - static_cast<int>(b.clique_cover) <= static_cast<int>(b.zplus);
        if (! ok) {
            r.pass = false;
            r.detail = "counterexample " + label(g);
            return r;
        }
    }
    r.detail = "delta<=Z+<=Z, P<=Z, n-cc<=Z+ on " + std::to_string(graphs.size()) + " graphs, 0 violations";
    return r;
}

auto check_mobius(Context & ctx) -> CriterionResult
{
    auto g = mobius_ladder(8);
    auto report = bounds_report(g, ctx.bounds);
    annotate_external_hmplus(report, ml8_hmplus, "earlier published computation");
    CriterionResult r;
    bool noted = std::any_of(report.notes.begin(), report.notes.end(),
                             [](const std::string & s) { return s.find("> hM+ = 3") != std::string::npos; });
    r.pass = report.zplus == ml8_zplus.expected && noted;
    r.detail = fixture_text(ml8_zplus, report.zplus) + (noted ? ", noted Z+ > hM+ = 3 (hM+ not computed)" : ", note missing");
    return r;
}

auto check_books(Context & ctx) -> CriterionResult
{
    CriterionResult r;
    r.pass = true;
    std::ostringstream out;
    for (unsigned m : {2u, 3u, 4u})
        for (unsigned t : {3u, 4u, 5u}) {
            auto zp = zero_forcing_number(book_graph(m, t), Rule::psd, ctx.search).value;
            if (zp != book_zplus.expected) {
                r.pass = false;
                out << "B(" << m << "," << t << ") Z+=" << zp << " ";
            }
        }
    r.detail = r.pass ? "Z+=2 on B(m,t) for m in 2..4, t in 3..5 (published)" : out.str();
    return r;
}

auto check_tree_clique(Context & ctx) -> CriterionResult
{
    CriterionResult r;
    r.pass = true;
    std::ostringstream out;
    struct Case
    {
        const char * name;
        Graph tree;
        unsigned r;
    };
    std::vector<Case> cases{{"P2", path_graph(2), 2}, {"P2", path_graph(2), 3}, {"P3", path_graph(3), 2},
                            {"K13", star_graph(3), 2}};
    for (const auto & c : cases) {
        auto w = build_tree_clique_witness(c.tree, c.r);
        auto zp = zero_forcing_number(w.pattern, Rule::psd, ctx.search).value;
        auto sv = singular_values(w.matrix);
        auto size = sv.size();
        auto nullity = size - numeric_rank(w.matrix);
        double gap = sv[size - c.r] == 0.0 ? INFINITY : sv[size - c.r - 1] / sv[size - c.r];
        bool ok = zp == c.r && w.matrix.is_real() && w.matrix.is_hermitian() && is_psd(w.matrix)
                  && pattern_matches(w.matrix, w.pattern).verdict && nullity == c.r && gap >= 1e4;
        r.pass = r.pass && ok;
        out << c.name << "xK" << c.r << ": Z+=" << zp << " nullity=" << nullity << " gap=" << std::scientific
            << std::setprecision(1) << gap << std::defaultfloat << (ok ? "" : " FAIL") << "; ";
    }
    r.detail = out.str();
    return r;
}

auto check_product(Context & ctx) -> CriterionResult
{
    CriterionResult r;
    r.pass = true;
    std::vector<std::pair<std::string, Graph>> base{
        {"P2", path_graph(2)}, {"P3", path_graph(3)}, {"K3", complete_graph(3)}, {"C4", cycle_graph(4)},
        {"C5", cycle_graph(5)}};
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < base.size(); ++i)
        for (std::size_t j = i; j < base.size(); ++j) {
            const auto & g = base[i].second;
            const auto & h = base[j].second;
            if (g.order() * h.order() > 20)
                continue;
            ++pairs;
            auto zg = zero_forcing_number(g, Rule::psd, ctx.search).value;
            auto zh = zero_forcing_number(h, Rule::psd, ctx.search).value;
            auto zgh = zero_forcing_number(cartesian_product(g, h), Rule::psd, ctx.search).value;
            auto bound = std::min(zg * h.order(), zh * g.order());
            if (zgh > bound) {
                r.pass = false;
                r.detail = base[i].first + "x" + base[j].first + ": Z+=" + std::to_string(zgh) + " > "
                           + std::to_string(bound);
                return r;
            }
        }
    r.detail = "Z+(GxH) <= min(Z+(G)|H|, Z+(H)|G|) on " + std::to_string(pairs) + " pairs, 0 violations";
    return r;
}

auto check_h43(Context &) -> CriterionResult
{
    CriterionResult r;
    std::ostringstream out;
    bool ok = true;
    for (auto root : {CubeRoot::omega, CubeRoot::omega_bar}) {
        H43Params params;
        params.root = root;
        auto a = build_h43_witness(params);
        auto sv = singular_values(a);
        bool rank3 = numeric_rank(a) == 3;
        bool small = std::all_of(sv.begin() + 3, sv.end(), [&](double s) { return s < 1e-8 * sv.front(); });
        bool large = std::all_of(sv.begin(), sv.begin() + 3, [&](double s) { return s > 1e-4 * sv.front(); });
        bool pattern = support_matches(a, h43_support()).verdict;
        double residual = row_space_residual(a, {0, 1, 2}, {3, 4, 5, 6, 7});
        bool this_ok = rank3 && small && large && pattern && residual < 1e-8;
        ok = ok && this_ok;
        out << (root == CubeRoot::omega ? "omega" : "omega-bar") << ": rank=" << numeric_rank(a)
            << " sigma4/sigma1=" << std::scientific << std::setprecision(1) << sv[3] / sv.front()
            << " row residual=" << residual << std::defaultfloat << " pattern " << (pattern ? "exact" : "MISMATCH")
            << "; ";
    }
    auto w = cube_root_value(CubeRoot::omega);
    double sticky = std::abs(sticky_equation_residual(w));
    // 1 + x + x^2 = (x + 1/2)^2 + 3/4
    double vertex = std::real(sticky_equation_residual(-0.5));
    bool real_min = vertex == sticky_real_minimum && sticky_real_minimum == 0.75;
    bool rejected = false;
    try {
        build_h43_witness_with_ratio(1.0, 1.0, 1.0, 1.0);
    }
    catch (const InvalidArgument &) {
        rejected = true;
    }
    ok = ok && sticky < 1e-12 && real_min && rejected;
    out << "|1+w+w^2|=" << std::scientific << std::setprecision(1) << sticky << std::defaultfloat
        << ", real minimum " << std::setprecision(17) << vertex << " at x=-1/2" << (rejected ? ", real ratio rejected" : ", real ratio ACCEPTED")
        << "; mr+ over the reals = 4 is not reproduced here (needs a necessity argument outside this suite)";
    r.pass = ok;
    r.detail = out.str();
    return r;
}

struct Criterion
{
    unsigned id;
    const char * name;
    std::function<CriterionResult(Context &)> run;
};

auto all_criteria() -> const std::vector<Criterion> &
{
    static const std::vector<Criterion> list{
        {1, "pinwheel", check_pinwheel},   {2, "trees", check_trees},
        {3, "duality", check_duality},     {4, "reversal", check_reversal},
        {5, "intersection", check_intersection}, {6, "sandwich", check_sandwich},
        {7, "mobius", check_mobius},       {8, "books", check_books},
        {9, "tree-clique", check_tree_clique}, {10, "product", check_product},
        {11, "h43", check_h43},
    };
    return list;
}

} // namespace

auto criterion_names() -> std::vector<std::string>
{
    std::vector<std::string> out;
    for (const auto & c : all_criteria())
        out.emplace_back(c.name);
    return out;
}

auto run_acceptance(const AcceptanceOptions & opts) -> std::vector<CriterionResult>
{
    if (opts.only) {
        auto names = criterion_names();
        if (std::find(names.begin(), names.end(), *opts.only) == names.end())
            throw InvalidArgument("unknown criterion '" + *opts.only + "'");
    }
    Context ctx;
    ctx.opts = opts;
    ctx.search.workers = opts.workers;
    ctx.bounds.search = ctx.search;
    std::vector<CriterionResult> out;
    for (const auto & c : all_criteria()) {
        if (opts.only && *opts.only != c.name)
            continue;
        auto start = std::chrono::steady_clock::now();
        CriterionResult r;
        try {
            r = c.run(ctx);
        }
        catch (const std::exception & e) {
            r.pass = false;
            r.detail = std::string("error: ") + e.what();
        }
        r.id = c.id;
        r.name = c.name;
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        out.push_back(std::move(r));
    }
    return out;
}

auto format_result(const CriterionResult & r) -> std::string
{
    std::ostringstream out;
    out << (r.pass ? "PASS " : "FAIL ") << std::setw(2) << r.id << ' ' << std::left << std::setw(13) << r.name
        << r.detail << "  (" << std::fixed << std::setprecision(2) << r.seconds << " s)";
    return out.str();
}

} // namespace zforce
