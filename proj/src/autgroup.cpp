#include "circstab/autgroup.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace circstab {

namespace {

// ---------------------------------------------------------------------------
// Ordered partition for the refinement search. Cells are contiguous slices of
// `order`; `starts` lists cell start positions ascending (starts[0] == 0).
struct Part {
    std::vector<int> order;
    std::vector<int> starts;
};

int cell_end(const Part& p, size_t ci) {
    return ci + 1 < p.starts.size() ? p.starts[ci + 1] : static_cast<int>(p.order.size());
}

// Neighbor-count splitting to an equitable fixpoint. `work` seeds the splitter
// queue with cell start positions. Split events are appended to `ind`; the
// sequence is invariant under graph relabeling, which is what makes it usable
// for search-tree pruning.
void refine(const Graph& g, Part& p, std::deque<int> work, std::vector<int>& ind) {
    const int n = g.vertex_count();
    std::vector<char> queued(n, 0);
    for (int s : work) queued[s] = 1;

    std::vector<int> cnt(n);
    while (!work.empty()) {
        int ws = work.front();
        work.pop_front();
        queued[ws] = 0;

        auto wit = std::upper_bound(p.starts.begin(), p.starts.end(), ws);
        int wend = wit == p.starts.end() ? n : *wit;
        Bitset wmask(n);
        for (int i = ws; i < wend; ++i) wmask.set(p.order[i]);

        for (size_t ci = 0; ci < p.starts.size(); ++ci) {
            int xs = p.starts[ci];
            int xe = cell_end(p, ci);
            if (xe - xs <= 1) continue;

            bool uniform = true;
            int c0 = g.neighbors(p.order[xs]).count_and(wmask);
            for (int i = xs; i < xe; ++i) {
                cnt[p.order[i]] = g.neighbors(p.order[i]).count_and(wmask);
                if (cnt[p.order[i]] != c0) uniform = false;
            }
            if (uniform) continue;

            std::stable_sort(p.order.begin() + xs, p.order.begin() + xe,
                             [&](int a, int b) { return cnt[a] < cnt[b]; });

            ind.push_back(ws);
            ind.push_back(xs);
            for (int i = xs; i < xe;) {
                int j = i;
                while (j < xe && cnt[p.order[j]] == cnt[p.order[i]]) ++j;
                ind.push_back(cnt[p.order[i]]);
                ind.push_back(j - i);
                if (i != xs) p.starts.insert(std::upper_bound(p.starts.begin(), p.starts.end(), i), i);
                if (!queued[i]) {
                    queued[i] = 1;
                    work.push_back(i);
                }
                i = j;
            }
        }
    }
}

Part initial_partition(const Graph& g, const std::vector<int>& colors) {
    const int n = g.vertex_count();
    Part p;
    p.order.resize(n);
    std::iota(p.order.begin(), p.order.end(), 0);
    if (colors.empty()) {
        p.starts = {0};
        return p;
    }
    std::stable_sort(p.order.begin(), p.order.end(),
                     [&](int a, int b) { return colors[a] < colors[b]; });
    p.starts.push_back(0);
    for (int i = 1; i < n; ++i)
        if (colors[p.order[i]] != colors[p.order[i - 1]]) p.starts.push_back(i);
    return p;
}

std::vector<uint64_t> leaf_certificate(const Graph& g, const std::vector<int>& lab) {
    const int n = g.vertex_count();
    const int words = (n + 63) / 64;
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[lab[i]] = i;
    std::vector<uint64_t> cert(size_t(n) * words, 0);
    for (int i = 0; i < n; ++i) {
        const Bitset& nb = g.neighbors(lab[i]);
        for (int w = nb.next(0); w != -1; w = nb.next(w + 1)) {
            int j = pos[w];
            cert[size_t(i) * words + (j >> 6)] |= uint64_t(1) << (j & 63);
        }
    }
    return cert;
}

// Individualization-refinement search over ordered partitions. Discovers a
// generating set for the automorphism group; in canonical mode additionally
// tracks the maximal (indicator path, certificate) leaf as canonical form.
class AutSearch {
public:
    AutSearch(const Graph& g, const std::vector<int>& colors, bool canonical)
        : g_(g), n_(g.vertex_count()), canonical_(canonical), colors_(colors) {}

    void run() {
        Part root = initial_partition(g_, colors_);
        std::vector<int> ind;
        std::deque<int> work(root.starts.begin(), root.starts.end());
        refine(g_, root, work, ind);
        search(root, ind, 0, true, true);
    }

    std::vector<Permutation> generators;
    std::vector<int> canon_labeling;
    std::vector<uint64_t> canon_cert;

private:
    enum class BestRel { kEqual, kLess };

    void search(const Part& p, const std::vector<int>& ind, int depth, bool eq_first,
                bool best_eq) {
        if (first_set_) {
            eq_first = eq_first && depth < static_cast<int>(first_path_.size()) &&
                       ind == first_path_[depth];
        } else {
            first_path_.push_back(ind);
        }

        if (canonical_) {
            if (best_eq) {
                if (depth >= static_cast<int>(best_path_.size())) {
                    best_path_.push_back(ind);
                    best_pending_ = true;
                } else {
                    int cmp = compare_ind(ind, best_path_[depth]);
                    if (cmp > 0) {
                        best_path_.resize(depth);
                        best_path_.push_back(ind);
                        best_pending_ = true;
                    } else if (cmp < 0) {
                        best_eq = false;
                    }
                }
            }
            if (!best_eq && !eq_first && first_set_) return;
        } else {
            if (!eq_first && first_set_) return;
        }

        // Target: first non-singleton cell.
        int target = -1;
        for (size_t ci = 0; ci < p.starts.size(); ++ci)
            if (cell_end(p, ci) - p.starts[ci] > 1) {
                target = static_cast<int>(ci);
                break;
            }

        if (target < 0) {
            handle_leaf(p.order, eq_first, best_eq);
            return;
        }

        int xs = p.starts[target];
        int xe = cell_end(p, target);
        std::vector<int> branch(p.order.begin() + xs, p.order.begin() + xe);
        std::sort(branch.begin(), branch.end());

        std::vector<int> tried;
        for (int v : branch) {
            if (pruned_by_orbit(v, tried)) continue;
            Part child = p;
            auto it = std::find(child.order.begin() + xs, child.order.begin() + xe, v);
            std::rotate(child.order.begin() + xs, it, it + 1);
            child.starts.insert(std::upper_bound(child.starts.begin(), child.starts.end(), xs + 1),
                                xs + 1);
            std::vector<int> cind;
            refine(g_, child, {xs, xs + 1}, cind);
            fixed_.push_back(v);
            search(child, cind, depth + 1, eq_first, best_eq);
            fixed_.pop_back();
            tried.push_back(v);
            if (backjump_ >= 0) {
                // an automorphism identified this subtree with the first
                // path; siblings below the divergence level are redundant
                if (backjump_ < depth) return;
                backjump_ = -1;
            }
        }
    }

    void handle_leaf(const std::vector<int>& lab, bool eq_first, bool best_eq) {
        auto cert = leaf_certificate(g_, lab);
        if (!first_set_) {
            first_set_ = true;
            first_lab_ = lab;
            first_cert_ = cert;
            first_branch_ = fixed_;
            if (canonical_) {
                canon_labeling = lab;
                canon_cert = cert;
                best_pending_ = false;
            }
            return;
        }
        if (eq_first && cert == first_cert_) {
            if (record_automorphism(first_lab_, lab)) {
                // backjump to where this path left the first leaf's path
                for (size_t i = 0; i < fixed_.size(); ++i)
                    if (i >= first_branch_.size() || fixed_[i] != first_branch_[i]) {
                        backjump_ = static_cast<int>(i);
                        break;
                    }
            }
        }
        if (canonical_ && best_eq) {
            if (best_pending_ || cert > canon_cert) {
                canon_labeling = lab;
                canon_cert = cert;
                best_pending_ = false;
            } else if (cert == canon_cert) {
                record_automorphism(canon_labeling, lab);
            }
        }
    }

    bool record_automorphism(const std::vector<int>& from, const std::vector<int>& to) {
        Permutation s;
        s.img.resize(n_);
        for (int i = 0; i < n_; ++i) s.img[from[i]] = to[i];
        if (s.is_identity()) return false;
        for (const auto& g : generators)
            if (g == s) return true;
        generators.push_back(std::move(s));
        return true;
    }

    // Skip branch vertices lying in the orbit of an already-explored sibling
    // under the subgroup of discovered automorphisms fixing the current path.
    bool pruned_by_orbit(int v, const std::vector<int>& tried) {
        if (tried.empty() || generators.empty()) return false;
        std::vector<int> uf(n_);
        std::iota(uf.begin(), uf.end(), 0);
        auto find = [&](int x) {
            while (uf[x] != x) x = uf[x] = uf[uf[x]];
            return x;
        };
        for (const auto& gen : generators) {
            bool fixes = true;
            for (int f : fixed_)
                if (gen.img[f] != f) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            for (int x = 0; x < n_; ++x) {
                int a = find(x), b = find(gen.img[x]);
                if (a != b) uf[a] = b;
            }
        }
        int rv = find(v);
        for (int t : tried)
            if (find(t) == rv) return true;
        return false;
    }

    static int compare_ind(const std::vector<int>& a, const std::vector<int>& b) {
        if (a == b) return 0;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end()) ? -1 : 1;
    }

    const Graph& g_;
    int n_;
    bool canonical_;
    std::vector<int> colors_;

    bool first_set_ = false;
    std::vector<int> first_lab_;
    std::vector<uint64_t> first_cert_;
    std::vector<std::vector<int>> first_path_;
    std::vector<int> first_branch_;

    std::vector<std::vector<int>> best_path_;
    bool best_pending_ = false;

    std::vector<int> fixed_;
    int backjump_ = -1;
};

// ---------------------------------------------------------------------------
// Deterministic Schreier-Sims. Levels hold generators fixing the base prefix;
// the fixpoint pass verifies every Schreier generator sifts to the identity,
// which certifies the chain and hence the order.
class StabChain {
public:
    explicit StabChain(int degree) : n_(degree) {}

    void build(const std::vector<Permutation>& gens) {
        for (const auto& g : gens) feed(g);
        fixpoint();
    }

    GroupOrder order() const {
        GroupOrder o;
        for (const auto& lev : levels_) o.mul(static_cast<uint64_t>(lev.orbit.size()));
        return o;
    }

    std::vector<int> base() const {
        std::vector<int> b;
        for (const auto& lev : levels_) b.push_back(lev.b);
        return b;
    }

    std::vector<int> orbit_sizes() const {
        std::vector<int> s;
        for (const auto& lev : levels_) s.push_back(static_cast<int>(lev.orbit.size()));
        return s;
    }

private:
    struct Level {
        int b = 0;
        std::vector<Permutation> gens;
        std::vector<int> orbit;
        std::vector<Permutation> transversal;  // indexed by point; empty img = absent
    };

    void rebuild_orbit(Level& lev) {
        lev.orbit.clear();
        lev.transversal.assign(n_, Permutation{});
        lev.orbit.push_back(lev.b);
        lev.transversal[lev.b] = Permutation::identity(n_);
        for (size_t qi = 0; qi < lev.orbit.size(); ++qi) {
            int p = lev.orbit[qi];
            for (const auto& g : lev.gens) {
                int q = g.img[p];
                if (lev.transversal[q].img.empty()) {
                    lev.transversal[q] = g.after(lev.transversal[p]);
                    lev.orbit.push_back(q);
                }
            }
        }
    }

    // Returns the level where sifting stalls, or levels_.size() on full sift.
    std::pair<Permutation, size_t> sift(Permutation h, size_t from) const {
        for (size_t i = from; i < levels_.size(); ++i) {
            int p = h.img[levels_[i].b];
            if (levels_[i].transversal.empty() || levels_[i].transversal[p].img.empty())
                return {h, i};
            h = levels_[i].transversal[p].inverse().after(h);
        }
        return {h, levels_.size()};
    }

    void add_at(const Permutation& r, size_t from, size_t drop) {
        if (drop == levels_.size()) {
            Level lev;
            for (int x = 0; x < n_; ++x)
                if (r.img[x] != x) {
                    lev.b = x;
                    break;
                }
            levels_.push_back(lev);
        }
        for (size_t j = from; j <= drop && j < levels_.size(); ++j) levels_[j].gens.push_back(r);
        for (size_t j = from; j <= drop && j < levels_.size(); ++j) rebuild_orbit(levels_[j]);
    }

    void feed(const Permutation& g) {
        if (g.is_identity()) return;
        auto [r, drop] = sift(g, 0);
        if (r.is_identity()) return;
        add_at(r, 0, drop);
    }

    void fixpoint() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t i = 0; i < levels_.size() && !changed; ++i) {
                rebuild_orbit(levels_[i]);
                Level& lev = levels_[i];
                for (size_t qi = 0; qi < lev.orbit.size() && !changed; ++qi) {
                    int p = lev.orbit[qi];
                    for (const auto& g : lev.gens) {
                        Permutation sg =
                            lev.transversal[g.img[p]].inverse().after(g.after(lev.transversal[p]));
                        if (sg.is_identity()) continue;
                        auto [r, drop] = sift(sg, i + 1);
                        if (!r.is_identity()) {
                            add_at(r, i + 1, drop);
                            changed = true;
                            break;
                        }
                    }
                }
            }
        }
        for (auto& lev : levels_) rebuild_orbit(lev);
    }

    int n_;
    std::vector<Level> levels_;
};

PermGroup finish_group(int degree, std::vector<Permutation> gens) {
    StabChain chain(degree);
    chain.build(gens);
    PermGroup pg;
    pg.degree = degree;
    pg.generators = std::move(gens);
    pg.base = chain.base();
    pg.transversal_sizes = chain.orbit_sizes();
    pg.order = chain.order();
    return pg;
}

void check_cap(const Graph& g, int cap, const char* what) {
    if (g.vertex_count() > cap)
        throw SizeLimitError(std::string(what) + " cap " + std::to_string(cap) +
                             " exceeded by graph on " + std::to_string(g.vertex_count()) +
                             " vertices");
}

}  // namespace

PermGroup automorphism_group(const Graph& g, int cap) {
    check_cap(g, cap, "automorphism");
    AutSearch s(g, {}, false);
    s.run();
    return finish_group(g.vertex_count(), std::move(s.generators));
}

PermGroup automorphism_group(const Graph& g, const std::vector<int>& colors, int cap) {
    check_cap(g, cap, "automorphism");
    if (static_cast<int>(colors.size()) != g.vertex_count())
        throw InputError("color vector size mismatch");
    AutSearch s(g, colors, false);
    s.run();
    return finish_group(g.vertex_count(), std::move(s.generators));
}

GroupOrder group_order(const std::vector<Permutation>& gens) {
    if (gens.empty()) return GroupOrder{};
    int degree = gens.front().degree();
    for (const auto& g : gens)
        if (g.degree() != degree) throw InputError("generator degrees differ");
    StabChain chain(degree);
    chain.build(gens);
    return chain.order();
}

std::vector<uint64_t> canonical_certificate(const Graph& g, int cap) {
    check_cap(g, cap, "isomorphism");
    AutSearch s(g, {}, true);
    s.run();
    return s.canon_cert;
}

bool are_isomorphic(const Graph& a, const Graph& b, int cap) {
    if (a.vertex_count() != b.vertex_count()) return false;
    if (a.edge_count() != b.edge_count()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.vertex_count(); ++v) {
        da.push_back(a.degree(v));
        db.push_back(b.degree(v));
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return canonical_certificate(a, cap) == canonical_certificate(b, cap);
}

std::vector<std::vector<int>> vertex_orbits(int degree, const std::vector<Permutation>& gens) {
    std::vector<int> rep(degree, -1);
    std::vector<std::vector<int>> orbits;
    for (int v = 0; v < degree; ++v) {
        if (rep[v] != -1) continue;
        std::vector<int> orb{v};
        rep[v] = v;
        for (size_t qi = 0; qi < orb.size(); ++qi)
            for (const auto& g : gens) {
                int w = g.img[orb[qi]];
                if (rep[w] == -1) {
                    rep[w] = v;
                    orb.push_back(w);
                }
            }
        std::sort(orb.begin(), orb.end());
        orbits.push_back(std::move(orb));
    }
    return orbits;
}

namespace {

std::vector<std::vector<std::pair<int, int>>> pair_orbits(
    const Graph& g, const std::vector<Permutation>& gens, bool ordered) {
    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> items;
    for (int u = 0; u < n; ++u)
        for (int v = g.neighbors(u).next(0); v != -1; v = g.neighbors(u).next(v + 1))
            if (ordered || u < v) items.emplace_back(u, v);
    std::vector<int> id(size_t(n) * n, -1);
    for (size_t i = 0; i < items.size(); ++i)
        id[size_t(items[i].first) * n + items[i].second] = static_cast<int>(i);

    std::vector<char> seen(items.size(), 0);
    std::vector<std::vector<std::pair<int, int>>> orbits;
    for (size_t i = 0; i < items.size(); ++i) {
        if (seen[i]) continue;
        std::vector<std::pair<int, int>> orb{items[i]};
        seen[i] = 1;
        for (size_t qi = 0; qi < orb.size(); ++qi)
            for (const auto& gen : gens) {
                int u = gen.img[orb[qi].first], v = gen.img[orb[qi].second];
                if (!ordered && u > v) std::swap(u, v);
                int j = id[size_t(u) * n + v];
                if (!seen[j]) {
                    seen[j] = 1;
                    orb.emplace_back(u, v);
                }
            }
        std::sort(orb.begin(), orb.end());
        orbits.push_back(std::move(orb));
    }
    return orbits;
}

}  // namespace

std::vector<std::vector<std::pair<int, int>>> edge_orbits(const Graph& g,
                                                          const std::vector<Permutation>& gens) {
    return pair_orbits(g, gens, false);
}

std::vector<std::vector<std::pair<int, int>>> arc_orbits(const Graph& g,
                                                         const std::vector<Permutation>& gens) {
    return pair_orbits(g, gens, true);
}

bool is_arc_transitive(const Graph& g, const PermGroup& aut) {
    if (g.edge_count() == 0) throw InputError("arc-transitivity undefined on edgeless graph");
    return arc_orbits(g, aut.generators).size() == 1;
}

bool is_edge_transitive(const Graph& g, const PermGroup& aut) {
    if (g.edge_count() == 0) throw InputError("edge-transitivity undefined on edgeless graph");
    return edge_orbits(g, aut.generators).size() == 1;
}

bool is_arc_transitive(const Graph& g, int cap) {
    return is_arc_transitive(g, automorphism_group(g, cap));
}

bool is_edge_transitive(const Graph& g, int cap) {
    return is_edge_transitive(g, automorphism_group(g, cap));
}

bool sufficient_arc_transitivity(const AbelianGroup& g, const std::vector<int>& s, int group_cap) {
    auto set = validate_connection_set(g, s);
    auto stab = set_stabilizer(g, set, group_cap);
    std::vector<char> in_orbit(g.order(), 0);
    std::vector<int> queue{set.front()};
    in_orbit[set.front()] = 1;
    size_t covered = 1;
    for (size_t qi = 0; qi < queue.size(); ++qi)
        for (const auto& a : stab) {
            int w = a.images[queue[qi]];
            if (!in_orbit[w]) {
                in_orbit[w] = 1;
                ++covered;
                queue.push_back(w);
            }
        }
    return covered == set.size();
}

bool is_normal_cayley(const AbelianGroup& g, const std::vector<int>& s, int vertex_cap,
                      int group_cap) {
    auto set = validate_connection_set(g, s);
    auto aut = automorphism_group(cayley_graph(g, set), vertex_cap);
    auto stab = set_stabilizer(g, set, group_cap);
    return aut.order.equals_u64(static_cast<uint64_t>(g.order()) * stab.size());
}

}  // namespace circstab
