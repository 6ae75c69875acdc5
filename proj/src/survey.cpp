#include "circstab/survey.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <map>
#include <thread>

#include "circstab/autgroup.hpp"
#include "circstab/compat.hpp"
#include "circstab/graph.hpp"
#include "circstab/json_io.hpp"
#include "circstab/stability.hpp"

namespace circstab {

std::vector<std::vector<int>> enumerate_connection_sets(const AbelianGroup& g) {
    const int n = g.order();
    if (n < 2) throw InputError("connection-set enumeration needs |G| >= 2");
    // Negation orbits {e, -e}, ordered by smallest member.
    std::vector<std::vector<int>> orbits;
    std::vector<char> taken(n, 0);
    for (int e = 1; e < n; ++e) {
        if (taken[e]) continue;
        int ne = g.neg(e);
        taken[e] = 1;
        taken[ne] = 1;
        if (ne == e)
            orbits.push_back({e});
        else
            orbits.push_back({e, ne});
    }
    const int m = static_cast<int>(orbits.size());
    if (m > 24) throw SizeLimitError("too many negation orbits for exhaustive enumeration");
    std::vector<std::vector<int>> sets;
    sets.reserve((size_t(1) << m) - 1);
    for (uint32_t mask = 1; mask < (uint32_t(1) << m); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < m; ++i)
            if (mask >> i & 1) s.insert(s.end(), orbits[i].begin(), orbits[i].end());
        std::sort(s.begin(), s.end());
        sets.push_back(std::move(s));
    }
    return sets;
}

std::vector<std::vector<int>> enumerate_connection_sets(int n) {
    return enumerate_connection_sets(AbelianGroup::cyclic(n));
}

namespace {

void partitions_desc(int n, int maxpart, std::vector<int>& cur,
                     std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, maxpart); p >= 1; --p) {
        cur.push_back(p);
        partitions_desc(n - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<AbelianGroup> abelian_groups_of_order(int order) {
    if (order < 1) throw InputError("group order must be positive");
    if (order == 1) return {AbelianGroup::cyclic(1)};
    // Factor, then one exponent partition per prime; invariant factors come
    // from aligning the partitions largest-first.
    std::vector<std::pair<long long, int>> pf;
    int rest = order;
    for (long long p = 2; p * p <= rest; ++p)
        if (rest % p == 0) {
            int e = 0;
            while (rest % p == 0) {
                rest /= int(p);
                ++e;
            }
            pf.emplace_back(p, e);
        }
    if (rest > 1) pf.emplace_back(rest, 1);

    std::vector<std::vector<std::vector<int>>> per_prime;
    for (auto [p, e] : pf) {
        std::vector<std::vector<int>> parts;
        std::vector<int> cur;
        partitions_desc(e, e, cur, parts);
        per_prime.push_back(std::move(parts));
    }

    std::vector<AbelianGroup> groups;
    std::vector<size_t> idx(pf.size(), 0);
    while (true) {
        size_t width = 0;
        for (size_t i = 0; i < pf.size(); ++i)
            width = std::max(width, per_prime[i][idx[i]].size());
        std::vector<int> factors;
        for (size_t j = 0; j < width; ++j) {
            long long d = 1;
            for (size_t i = 0; i < pf.size(); ++i) {
                const auto& lam = per_prime[i][idx[i]];
                if (j < lam.size()) {
                    for (int t = 0; t < lam[j]; ++t) d *= pf[i].first;
                }
            }
            factors.push_back(int(d));
        }
        std::reverse(factors.begin(), factors.end());  // d1 | d2 | ... | dk
        groups.push_back(AbelianGroup::product(factors));
        size_t i = 0;
        for (; i < pf.size(); ++i) {
            if (++idx[i] < per_prime[i].size()) break;
            idx[i] = 0;
        }
        if (i == pf.size()) break;
    }
    std::sort(groups.begin(), groups.end(), [](const AbelianGroup& a, const AbelianGroup& b) {
        return a.invariant_factors() < b.invariant_factors();
    });
    return groups;
}

std::vector<std::pair<AbelianGroup, std::vector<int>>> enumerate_abelian_cayley(int order,
                                                                                int cap) {
    if (order > cap)
        throw SizeLimitError("abelian enumeration cap " + std::to_string(cap) +
                             " exceeded by order " + std::to_string(order));
    std::vector<std::pair<AbelianGroup, std::vector<int>>> out;
    for (const auto& g : abelian_groups_of_order(order))
        for (auto& s : enumerate_connection_sets(g)) out.emplace_back(g, std::move(s));
    return out;
}

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

// Lexicographically least image of S under the units of Z_n.
bool is_units_canonical(int n, const std::vector<int>& s) {
    for (int u : units_mod(n)) {
        if (u == 1) continue;
        std::vector<int> img;
        img.reserve(s.size());
        for (int e : s) img.push_back(int((long long)u * e % n));
        std::sort(img.begin(), img.end());
        if (img < s) return false;
    }
    return true;
}

}  // namespace

SurveyRecord classify_one(const AbelianGroup& g, const std::vector<int>& s,
                          const SurveyOptions& opt) {
    SurveyRecord rec;
    rec.group = g.descriptor();
    rec.set = s;
    const int n = g.order();

    try {
        auto set = validate_connection_set(g, s);
        rec.set = set;
        Graph gamma = cayley_graph(g, set);

        {
            auto t0 = std::chrono::steady_clock::now();
            StabilityVerdict v = classify(gamma, opt.vertex_cap, false);
            rec.ms_classify = ms_since(t0);
            rec.status = to_string(v.status);
            for (auto tr : v.trivial_reasons) rec.trivial_reasons.push_back(to_string(tr));
            rec.aut_order = v.aut_order.str();
            rec.dcover_aut_order = v.dcover_aut_order.str();
            rec.connected = v.connected;
            rec.bipartite = v.bipartite;
            rec.vertex_determining = v.vertex_determining;
        }

        if (opt.with_conditions && g.is_cyclic() && n >= 2) {
            auto t0 = std::chrono::steady_clock::now();
            rec.conditions = check_all(n, set);
            rec.has_conditions = true;
            if (opt.c2_fixed_b > 0) rec.c2_at_fixed_b = c2_holds_for_b(n, set, opt.c2_fixed_b);
            rec.ms_conditions = ms_since(t0);
        }

        if (opt.with_transitivity) {
            auto t0 = std::chrono::steady_clock::now();
            auto aut = automorphism_group(gamma, opt.vertex_cap);
            rec.arc_transitive = is_arc_transitive(gamma, aut) ? 1 : 0;
            rec.edge_transitive = is_edge_transitive(gamma, aut) ? 1 : 0;
            rec.ms_transitivity = ms_since(t0);
        }

        if (opt.with_normality &&
            (g.is_cyclic() || g.invariant_factors().size() <= 4) && n <= opt.group_cap) {
            auto t0 = std::chrono::steady_clock::now();
            rec.normal_cayley = is_normal_cayley(g, set, opt.vertex_cap, opt.group_cap) ? 1 : 0;
            rec.ms_normality = ms_since(t0);
        }

        if (opt.with_compat && n <= opt.compat_max_n) {
            auto t0 = std::chrono::steady_clock::now();
            auto cr = compatible_cayley_search(g, set, opt.compat_node_limit);
            if (cr.conclusive()) rec.compatible = cr.compatible ? 1 : 0;
            rec.ms_compat = ms_since(t0);
        }
    } catch (const std::exception& e) {
        rec.errors.push_back(e.what());
    }
    return rec;
}

namespace {

std::string record_key(const std::string& group, const std::vector<int>& set) {
    std::string k = group + "|";
    for (int e : set) k += std::to_string(e) + ",";
    return k;
}

void write_csv(const std::string& path, const std::vector<SurveyRecord>& records) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open csv output " + path);
    out << "group,set,status,autOrder,dcoverAutOrder,connected,bipartite,vertexDetermining,"
           "c1,c2,c2prime,c3,c4,any,anyCorrected,arcTransitive,edgeTransitive,normalCayley,"
           "compatible\n";
    auto tri = [](int v) { return v < 0 ? std::string() : std::string(v ? "true" : "false"); };
    for (const auto& r : records) {
        std::string set;
        for (size_t i = 0; i < r.set.size(); ++i) {
            if (i) set += " ";
            set += std::to_string(r.set[i]);
        }
        out << r.group << "," << set << "," << r.status << "," << r.aut_order << ","
            << r.dcover_aut_order << "," << (r.connected ? "true" : "false") << ","
            << (r.bipartite ? "true" : "false") << "," << (r.vertex_determining ? "true" : "false")
            << ",";
        if (r.has_conditions) {
            out << (r.conditions.c1.holds ? "true" : "false") << ","
                << (r.conditions.c2.holds ? "true" : "false") << ","
                << (r.conditions.c2prime.holds ? "true" : "false") << ","
                << (r.conditions.c3.holds ? "true" : "false") << ","
                << (r.conditions.c4.holds ? "true" : "false") << ","
                << (r.conditions.any() ? "true" : "false") << ","
                << (r.conditions.any_corrected() ? "true" : "false") << ",";
        } else {
            out << ",,,,,,,";
        }
        out << tri(r.arc_transitive) << "," << tri(r.edge_transitive) << ","
            << tri(r.normal_cayley) << "," << tri(r.compatible) << "\n";
    }
}

}  // namespace

SurveyAggregate run_survey(const std::vector<AbelianGroup>& groups, const SurveyOptions& opt) {
    struct Item {
        const AbelianGroup* group;
        std::vector<int> set;
    };
    std::vector<Item> items;
    for (const auto& g : groups) {
        for (auto& s : enumerate_connection_sets(g)) {
            if (opt.dedupe_ci && g.is_cyclic() && !is_units_canonical(g.order(), s)) continue;
            items.push_back({&g, std::move(s)});
        }
    }

    // Resume: rows already present in the output file are kept, not recomputed.
    std::map<std::string, SurveyRecord> resumed;
    bool had_file = false;
    if (!opt.out_path.empty()) {
        std::ifstream in(opt.out_path);
        std::string line;
        while (in && std::getline(in, line)) {
            if (line.empty()) continue;
            had_file = true;
            auto j = nlohmann::json::parse(line);
            if (j.value("type", "") == "header") continue;
            SurveyRecord r = record_from_json(j);
            resumed[record_key(r.group, r.set)] = std::move(r);
        }
    }

    std::vector<SurveyRecord> results(items.size());
    std::vector<std::atomic<char>> done(items.size());
    for (auto& d : done) d.store(0);

    std::atomic<size_t> next{0};
    auto worker = [&] {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= items.size()) break;
            auto key = record_key(items[i].group->descriptor(), items[i].set);
            auto it = resumed.find(key);
            if (it != resumed.end())
                results[i] = it->second;
            else
                results[i] = classify_one(*items[i].group, items[i].set, opt);
            done[i].store(1, std::memory_order_release);
        }
    };

    int nworkers = std::max(1, opt.workers);
    std::vector<std::thread> pool;
    for (int w = 0; w < nworkers; ++w) pool.emplace_back(worker);

    // Single writer: appends rows in enumeration order as prefixes complete.
    std::ofstream out;
    if (!opt.out_path.empty()) {
        out.open(opt.out_path, had_file ? std::ios::app : std::ios::out);
        if (!out) {
            for (auto& t : pool) t.join();
            throw std::runtime_error("cannot open survey output " + opt.out_path);
        }
        if (!had_file) {
            nlohmann::json header{{"type", "header"}, {"version", 1}, {"records", items.size()}};
            std::vector<std::string> descs;
            for (const auto& g : groups) descs.push_back(g.descriptor());
            header["groups"] = descs;
            out << header.dump() << "\n";
        }
    }

    size_t flushed = 0;
    while (flushed < items.size()) {
        if (!done[flushed].load(std::memory_order_acquire)) {
            std::this_thread::sleep_for(std::chrono::milliseconds(1));
            continue;
        }
        if (out) {
            auto key = record_key(results[flushed].group, results[flushed].set);
            if (!resumed.count(key)) out << record_json(results[flushed]).dump() << "\n";
        }
        ++flushed;
    }
    for (auto& t : pool) t.join();
    if (out) {
        out.flush();
        if (!out.good()) throw std::runtime_error("write failure on " + opt.out_path);
    }

    if (!opt.csv_path.empty()) write_csv(opt.csv_path, results);

    SurveyAggregate agg;
    agg.c2_fixed_b = opt.c2_fixed_b;
    for (const auto& r : results) {
        ++agg.total;
        if (r.status == "stable") ++agg.stable;
        if (r.status == "trivially_unstable") ++agg.trivially_unstable;
        if (r.status == "nontrivially_unstable") {
            ++agg.nontrivially_unstable_count;
            agg.nontrivially_unstable.push_back(r);
        }
        if (r.has_conditions) {
            if (r.conditions.c1.holds) {
                ++agg.c1;
                if (r.conditions.c1.vacuous) ++agg.c1_vacuous;
            }
            if (r.conditions.c2.holds) {
                ++agg.c2;
                if (r.conditions.c2.vacuous) ++agg.c2_vacuous;
            }
            if (r.conditions.c2prime.holds) ++agg.c2prime;
            if (r.conditions.c3.holds) ++agg.c3;
            if (r.conditions.c4.holds) ++agg.c4;
            if (r.conditions.any()) ++agg.any;
            if (r.conditions.any_corrected()) ++agg.any_corrected;
            if (r.c2_at_fixed_b) {
                ++agg.c2_fixed_b_count;
                if (r.unstable()) ++agg.c2_fixed_b_unstable;
            }
            if (r.conditions.any_corrected() && r.status == "stable")
                agg.wilson_violations.push_back(r);
            if (r.status == "nontrivially_unstable" && !r.conditions.any())
                agg.conjecture2_violations.push_back(r);
        }
        if (r.status == "nontrivially_unstable" && r.compatible == 0) agg.msz_violations.push_back(r);
    }
    return agg;
}

}  // namespace circstab
