#pragma once

#include <string>
#include <utility>
#include <vector>

#include "circstab/abelian.hpp"
#include "circstab/wilson.hpp"

namespace circstab {

struct SurveyOptions {
    int workers = 1;
    bool with_conditions = true;    // cyclic groups only
    bool with_transitivity = true;
    bool with_normality = true;
    bool with_compat = false;
    int compat_max_n = 16;          // above this, compatibility stays inconclusive
    long long compat_node_limit = 10000000;
    bool dedupe_ci = false;         // collapse cyclic sets equivalent under units
    int vertex_cap = 128;
    int group_cap = 64;
    int c2_fixed_b = 0;             // when > 0, count sets satisfying C.2 at this b
    std::string out_path;           // JSONL persistence; resumes when file exists
    std::string csv_path;
};

// One classification row. Flat fields so rows survive a JSONL round trip.
struct SurveyRecord {
    std::string group;
    std::vector<int> set;  // canonical element ids, sorted

    std::string status;
    std::vector<std::string> trivial_reasons;
    std::string aut_order;
    std::string dcover_aut_order;
    bool connected = false;
    bool bipartite = false;
    bool vertex_determining = false;

    bool has_conditions = false;
    ConditionReport conditions;
    bool c2_at_fixed_b = false;

    // tri-state: -1 unknown, 0 false, 1 true
    int arc_transitive = -1;
    int edge_transitive = -1;
    int normal_cayley = -1;
    int compatible = -1;

    double ms_classify = 0, ms_conditions = 0, ms_transitivity = 0, ms_normality = 0,
           ms_compat = 0;
    std::vector<std::string> errors;

    bool unstable() const { return !status.empty() && status != "stable"; }
};

struct SurveyAggregate {
    long long total = 0;
    long long stable = 0, trivially_unstable = 0, nontrivially_unstable_count = 0;
    long long c1 = 0, c2 = 0, c2prime = 0, c3 = 0, c4 = 0;
    long long c1_vacuous = 0, c2_vacuous = 0;
    long long any = 0, any_corrected = 0;
    int c2_fixed_b = 0;
    long long c2_fixed_b_count = 0, c2_fixed_b_unstable = 0;
    std::vector<SurveyRecord> nontrivially_unstable;
    // Corrected Wilson condition true but graph stable: expected empty.
    std::vector<SurveyRecord> wilson_violations;
    // Nontrivially unstable satisfying none of C.1-C.4 (raw): reported, not failed.
    std::vector<SurveyRecord> conjecture2_violations;
    // Nontrivially unstable with conclusively incompatible matrix: expected empty.
    std::vector<SurveyRecord> msz_violations;
};

// All nonempty inverse-closed subsets of G \ {0}, as unions of negation
// orbits, in a fixed order. Count: 2^(#orbits) - 1.
std::vector<std::vector<int>> enumerate_connection_sets(const AbelianGroup& g);
std::vector<std::vector<int>> enumerate_connection_sets(int n);

// One group per multiset of invariant factors, deterministically ordered.
std::vector<AbelianGroup> abelian_groups_of_order(int order);

// Every (group, set) pair for the given order.
std::vector<std::pair<AbelianGroup, std::vector<int>>> enumerate_abelian_cayley(int order,
                                                                                int cap = 27);

SurveyRecord classify_one(const AbelianGroup& g, const std::vector<int>& s,
                          const SurveyOptions& opt);

SurveyAggregate run_survey(const std::vector<AbelianGroup>& groups, const SurveyOptions& opt);

}  // namespace circstab
