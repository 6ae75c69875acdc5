#include "circstab/json_io.hpp"

namespace circstab {

using nlohmann::json;

json perm_json(const Permutation& p) { return json(p.img); }

json permgroup_json(const PermGroup& g) {
    json gens = json::array();
    for (const auto& p : g.generators) gens.push_back(perm_json(p));
    return json{{"degree", g.degree},
                {"generators", gens},
                {"base", g.base},
                {"transversalSizes", g.transversal_sizes},
                {"order", g.order.str()}};
}

json verdict_json(const StabilityVerdict& v, bool include_witness) {
    json reasons = json::array();
    for (auto r : v.trivial_reasons) reasons.push_back(to_string(r));
    json j{{"status", to_string(v.status)},
           {"connected", v.connected},
           {"bipartite", v.bipartite},
           {"vertexDetermining", v.vertex_determining},
           {"autOrder", v.aut_order.str()},
           {"dcoverAutOrder", v.dcover_aut_order.str()},
           {"trivialReasons", reasons}};
    if (include_witness) {
        if (v.tf_witness)
            j["tfWitness"] =
                json{{"alpha", v.tf_witness->alpha.img}, {"beta", v.tf_witness->beta.img}};
        else
            j["tfWitness"] = nullptr;
    }
    return j;
}

namespace {

json check_json(const ConditionCheck& c, const char* key, bool emit_vacuous) {
    json j{{"holds", c.holds}};
    if (c.holds)
        j[key] = c.witness;
    else
        j[key] = nullptr;
    if (emit_vacuous) j["vacuous"] = c.vacuous;
    return j;
}

}  // namespace

json report_json(const ConditionReport& r) {
    return json{{"c1", check_json(r.c1, "a", true)},
                {"c2", check_json(r.c2, "b", true)},
                {"c2prime", check_json(r.c2prime, "b", false)},
                {"c3", check_json(r.c3, "d", false)},
                {"c4", check_json(r.c4, "g", false)},
                {"any", r.any()},
                {"anyCorrected", r.any_corrected()}};
}

json compat_json(const CompatibilityResult& r) {
    json j{{"compatible", r.compatible},
           {"searchExhausted", r.search_exhausted},
           {"method", to_string(r.method)},
           {"nodesExplored", r.nodes_explored}};
    if (r.witness)
        j["witness"] = r.witness->img;
    else
        j["witness"] = nullptr;
    return j;
}

json thm3_json(const Thm3Certificate& c) {
    return json{{"l", c.l},
                {"m", c.m},
                {"n", c.n},
                {"t", c.t},
                {"set", c.s},
                {"claim1", json{{"nonBipartite", c.claim1_nonbipartite},
                                {"vertexDetermining", c.claim1_vertex_determining}}},
                {"claim2", json{{"nonIdentity", c.claim2_nonidentity},
                                {"involution", c.claim2_involution},
                                {"fixesSet", c.claim2_fixes_s},
                                {"diagonalAvoidsSet", c.claim2_diagonal_avoids_s},
                                {"symmetric", c.claim2_symmetric}}},
                {"claim3", json{{"connected", c.claim3_connected},
                                {"arcTransitive", c.claim3_arc_transitive}}},
                {"compat", compat_json(c.compat)},
                {"stable", c.stable},
                {"allChecksPass", c.all_ok()}};
}

json graph_json(const Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back(json::array({u, v}));
    return json{{"n", g.vertex_count()}, {"edges", edges}};
}

namespace {

json tristate_json(int v) {
    if (v < 0) return nullptr;
    return v != 0;
}

int tristate_from(const json& j) {
    if (j.is_null()) return -1;
    return j.get<bool>() ? 1 : 0;
}

ConditionCheck check_from_json(const json& j, const char* key) {
    ConditionCheck c;
    c.holds = j.at("holds").get<bool>();
    if (c.holds) c.witness = j.at(key).get<int>();
    if (j.contains("vacuous")) c.vacuous = j.at("vacuous").get<bool>();
    return c;
}

}  // namespace

json record_json(const SurveyRecord& r) {
    json j{{"group", r.group},
           {"set", r.set},
           {"status", r.status},
           {"trivialReasons", r.trivial_reasons},
           {"autOrder", r.aut_order},
           {"dcoverAutOrder", r.dcover_aut_order},
           {"connected", r.connected},
           {"bipartite", r.bipartite},
           {"vertexDetermining", r.vertex_determining},
           {"arcTransitive", tristate_json(r.arc_transitive)},
           {"edgeTransitive", tristate_json(r.edge_transitive)},
           {"normalCayley", tristate_json(r.normal_cayley)},
           {"compatible", tristate_json(r.compatible)},
           {"elapsedMs",
            json{{"classify", r.ms_classify},
                 {"conditions", r.ms_conditions},
                 {"transitivity", r.ms_transitivity},
                 {"normality", r.ms_normality},
                 {"compat", r.ms_compat}}}};
    if (r.has_conditions) {
        j["conditions"] = report_json(r.conditions);
        j["c2AtFixedB"] = r.c2_at_fixed_b;
    }
    if (!r.errors.empty()) j["errors"] = r.errors;
    return j;
}

SurveyRecord record_from_json(const json& j) {
    SurveyRecord r;
    r.group = j.at("group").get<std::string>();
    r.set = j.at("set").get<std::vector<int>>();
    r.status = j.at("status").get<std::string>();
    r.trivial_reasons = j.at("trivialReasons").get<std::vector<std::string>>();
    r.aut_order = j.at("autOrder").get<std::string>();
    r.dcover_aut_order = j.at("dcoverAutOrder").get<std::string>();
    r.connected = j.at("connected").get<bool>();
    r.bipartite = j.at("bipartite").get<bool>();
    r.vertex_determining = j.at("vertexDetermining").get<bool>();
    r.arc_transitive = tristate_from(j.at("arcTransitive"));
    r.edge_transitive = tristate_from(j.at("edgeTransitive"));
    r.normal_cayley = tristate_from(j.at("normalCayley"));
    r.compatible = tristate_from(j.at("compatible"));
    if (j.contains("conditions")) {
        r.has_conditions = true;
        const json& c = j.at("conditions");
        r.conditions.c1 = check_from_json(c.at("c1"), "a");
        r.conditions.c2 = check_from_json(c.at("c2"), "b");
        r.conditions.c2prime = check_from_json(c.at("c2prime"), "b");
        r.conditions.c3 = check_from_json(c.at("c3"), "d");
        r.conditions.c4 = check_from_json(c.at("c4"), "g");
        r.c2_at_fixed_b = j.value("c2AtFixedB", false);
    }
    if (j.contains("errors")) r.errors = j.at("errors").get<std::vector<std::string>>();
    return r;
}

json aggregate_json(const SurveyAggregate& a) {
    json ntu = json::array();
    for (const auto& r : a.nontrivially_unstable)
        ntu.push_back(json{{"group", r.group}, {"set", r.set}});
    json wv = json::array();
    for (const auto& r : a.wilson_violations) wv.push_back(json{{"group", r.group}, {"set", r.set}});
    json c2v = json::array();
    for (const auto& r : a.conjecture2_violations)
        c2v.push_back(json{{"group", r.group}, {"set", r.set}});
    json mszv = json::array();
    for (const auto& r : a.msz_violations) mszv.push_back(json{{"group", r.group}, {"set", r.set}});

    json j{{"total", a.total},
           {"countsByVerdict",
            json{{"stable", a.stable},
                 {"trivially_unstable", a.trivially_unstable},
                 {"nontrivially_unstable", a.nontrivially_unstable_count}}},
           {"conditionCounts",
            json{{"c1", a.c1},
                 {"c2", a.c2},
                 {"c2prime", a.c2prime},
                 {"c3", a.c3},
                 {"c4", a.c4},
                 {"c1Vacuous", a.c1_vacuous},
                 {"c2Vacuous", a.c2_vacuous},
                 {"any", a.any},
                 {"anyCorrected", a.any_corrected}}},
           {"nontriviallyUnstable", ntu},
           {"wilsonSoundnessViolations", wv},
           {"conjecture2Violations", c2v},
           {"mszViolations", mszv}};
    if (a.c2_fixed_b > 0)
        j["c2WithFixedB"] = json{{"b", a.c2_fixed_b},
                                 {"count", a.c2_fixed_b_count},
                                 {"unstable", a.c2_fixed_b_unstable}};
    return j;
}

}  // namespace circstab
