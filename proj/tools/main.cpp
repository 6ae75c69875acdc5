#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

#include "circstab/autgroup.hpp"
#include "circstab/compat.hpp"
#include "circstab/json_io.hpp"
#include "circstab/setparse.hpp"
#include "circstab/skeleton.hpp"
#include "circstab/stability.hpp"
#include "circstab/survey.hpp"
#include "circstab/wilson.hpp"

using nlohmann::json;
using namespace circstab;

namespace {

struct GroupSetArgs {
    int n = 0;
    std::string group_desc;
    std::string set_text;

    void attach(CLI::App* cmd, bool group_allowed = true) {
        cmd->add_option("--n", n, "cyclic group order");
        if (group_allowed)
            cmd->add_option("--group", group_desc, "group descriptor, e.g. 12 or 4x4");
        cmd->add_option("--set", set_text, "connection set, e.g. 1,-1,11,-11 or (0,1),(0,3)")
            ->required();
    }

    AbelianGroup group() const {
        if (!group_desc.empty()) return parse_group(group_desc);
        if (n > 0) return AbelianGroup::cyclic(n);
        throw InputError("provide --n or --group");
    }
};

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int run(int argc, char** argv) {
    CLI::App app{"circulant/abelian Cayley graph stability toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // global caps may follow the subcommand

    int vertex_cap = 128;
    int group_cap = 64;
    app.add_option("--max-vertices", vertex_cap, "vertex cap for automorphism computations")
        ->capture_default_str();
    app.add_option("--group-cap", group_cap, "cap for abelian automorphism enumeration")
        ->capture_default_str();

    auto* analyze = app.add_subcommand("analyze", "full structural and stability report");
    GroupSetArgs aargs;
    aargs.attach(analyze);
    bool a_with_compat = false;
    long long a_node_limit = 10000000;
    bool a_no_witness = false;
    bool a_with_aut = false;
    analyze->add_flag("--with-compat", a_with_compat, "run the compatibility search");
    analyze->add_option("--node-limit", a_node_limit, "compatibility search node budget")
        ->capture_default_str();
    analyze->add_flag("--no-witness", a_no_witness, "skip TF-witness extraction");
    analyze->add_flag("--with-aut", a_with_aut, "include automorphism group generators");

    auto* conditions = app.add_subcommand("conditions", "evaluate the instability conditions");
    GroupSetArgs cargs;
    cargs.attach(conditions, false);

    auto* compat = app.add_subcommand("compat", "compatible adjacency matrix search");
    GroupSetArgs pargs;
    pargs.attach(compat);
    long long p_node_limit = 10000000;
    std::string p_method = "cayley";
    compat->add_option("--node-limit", p_node_limit)->capture_default_str();
    compat->add_option("--method", p_method, "cayley or matrix")->capture_default_str();

    auto* skeleton = app.add_subcommand("skeleton", "boolean square and cartesian skeleton");
    GroupSetArgs sargs;
    sargs.attach(skeleton);
    std::string s_emit = "json";
    skeleton->add_option("--emit", s_emit, "json or dot")->capture_default_str();

    auto* dcover_cmd = app.add_subcommand("dcover", "canonical double cover");
    GroupSetArgs dargs;
    dargs.attach(dcover_cmd);
    std::string d_emit = "json";
    std::string d_out;
    dcover_cmd->add_option("--emit", d_emit, "json or dot")->capture_default_str();
    dcover_cmd->add_option("--out", d_out, "write output to a file instead of stdout");

    auto* survey = app.add_subcommand("survey", "exhaustive classification sweep");
    int min_n = 3, max_n = 12, max_order = 16;
    bool odd_only = false, abelian = false, with_compat = false, dedupe = false;
    int workers = 1, c2b = 0;
    std::string out_path, csv_path;
    survey->add_option("--min-n", min_n)->capture_default_str();
    survey->add_option("--max-n", max_n)->capture_default_str();
    survey->add_flag("--odd-only", odd_only, "restrict to odd orders");
    survey->add_flag("--abelian", abelian, "sweep all abelian groups up to --max-order");
    survey->add_option("--max-order", max_order)->capture_default_str();
    survey->add_option("--workers", workers)->capture_default_str();
    survey->add_option("--out", out_path, "JSONL output path (resumes if present)");
    survey->add_option("--csv", csv_path, "CSV export path");
    survey->add_flag("--with-compat", with_compat, "run compatibility searches (n <= 16)");
    survey->add_flag("--dedupe-ci", dedupe, "collapse cyclic sets equivalent under units");
    survey->add_option("--c2-b", c2b, "track sets satisfying C.2 at this fixed b");

    auto* family = app.add_subcommand("family", "verified graph families");
    auto* thm3 = family->add_subcommand("thm3", "crt-twisted 4-valent circulant certificate");
    int f_l = 0, f_m = 0;
    thm3->add_option("--l", f_l)->required();
    thm3->add_option("--m", f_m)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_name() == "CallForHelp" ? 0 : 2;
    }

    if (*analyze) {
        auto g = aargs.group();
        auto set = validate_connection_set(g, parse_set(g, aargs.set_text));
        if (2 * g.order() > vertex_cap)
            throw SizeLimitError("double cover exceeds --max-vertices " +
                                 std::to_string(vertex_cap));
        Graph gamma = cayley_graph(g, set);
        auto verdict = classify(gamma, vertex_cap, !a_no_witness);
        json rep{{"group", g.descriptor()},
                 {"set", set},
                 {"setNames", format_set(g, set)},
                 {"verdict", verdict_json(verdict)}};
        if (g.is_cyclic() && g.order() >= 2)
            rep["conditions"] = report_json(check_all(g.order(), set));
        else
            rep["conditions"] = nullptr;
        auto aut = automorphism_group(gamma, vertex_cap);
        rep["arcTransitive"] = is_arc_transitive(gamma, aut);
        rep["edgeTransitive"] = is_edge_transitive(gamma, aut);
        if (a_with_aut) rep["autGroup"] = permgroup_json(aut);
        if (g.order() <= group_cap && (g.is_cyclic() || g.invariant_factors().size() <= 4))
            rep["normalCayley"] = is_normal_cayley(g, set, vertex_cap, group_cap);
        else
            rep["normalCayley"] = nullptr;
        if (a_with_compat)
            rep["compat"] = compat_json(compatible_cayley_search(g, set, a_node_limit));
        else
            rep["compat"] = nullptr;
        emit(rep);
        return 0;
    }

    if (*conditions) {
        auto g = cargs.group();
        if (!g.is_cyclic()) throw InputError("conditions are defined for cyclic groups");
        auto set = validate_connection_set(g, parse_set(g, cargs.set_text));
        emit(report_json(check_all(g.order(), set)));
        return 0;
    }

    if (*compat) {
        auto g = pargs.group();
        auto set = validate_connection_set(g, parse_set(g, pargs.set_text));
        CompatibilityResult r;
        if (p_method == "matrix")
            r = compatible_matrix_search(cayley_graph(g, set), p_node_limit);
        else if (p_method == "cayley")
            r = compatible_cayley_search(g, set, p_node_limit);
        else
            throw InputError("--method must be cayley or matrix");
        emit(compat_json(r));
        return 0;
    }

    if (*skeleton) {
        auto g = sargs.group();
        auto set = validate_connection_set(g, parse_set(g, sargs.set_text));
        Graph gamma = cayley_graph(g, set);
        Graph bs = boolean_square(gamma);
        Graph sk = cartesian_skeleton(gamma);
        if (s_emit == "dot") {
            std::cout << to_dot(bs) << to_dot(sk);
        } else {
            json disp = json::array();
            for (auto [u, v] : dispensable_edges(gamma)) disp.push_back(json::array({u, v}));
            emit(json{{"group", g.descriptor()},
                      {"set", set},
                      {"booleanSquare", graph_json(bs)},
                      {"skeleton", graph_json(sk)},
                      {"dispensable", disp}});
        }
        return 0;
    }

    if (*dcover_cmd) {
        auto g = dargs.group();
        auto set = validate_connection_set(g, parse_set(g, dargs.set_text));
        Graph d = double_cover(cayley_graph(g, set));
        std::string payload = d_emit == "dot" ? to_dot(d) : graph_json(d).dump(2) + "\n";
        if (d_out.empty()) {
            std::cout << payload;
        } else {
            std::ofstream f(d_out);
            if (!f) throw std::runtime_error("cannot open " + d_out);
            f << payload;
        }
        return 0;
    }

    if (*survey) {
        SurveyOptions opt;
        opt.workers = workers;
        opt.with_compat = with_compat;
        opt.dedupe_ci = dedupe;
        opt.vertex_cap = vertex_cap;
        opt.group_cap = group_cap;
        opt.c2_fixed_b = c2b;
        opt.out_path = out_path;
        opt.csv_path = csv_path;
        std::vector<AbelianGroup> groups;
        if (abelian) {
            for (int o = 2; o <= max_order; ++o) {
                if (odd_only && o % 2 == 0) continue;
                for (auto& g : abelian_groups_of_order(o)) groups.push_back(g);
            }
        } else {
            for (int n = std::max(2, min_n); n <= max_n; ++n) {
                if (odd_only && n % 2 == 0) continue;
                groups.push_back(AbelianGroup::cyclic(n));
            }
        }
        auto agg = run_survey(groups, opt);
        emit(aggregate_json(agg));
        return 0;
    }

    if (*thm3) {
        auto cert = thm3_certificate(f_l, f_m, vertex_cap);
        emit(thm3_json(cert));
        return cert.all_ok() ? 0 : 1;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const SizeLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CLI::ParseError&) {
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
