#include "circstab/wilson.hpp"

#include <numeric>

namespace circstab {

// The checkers treat S as a canonical connection set for Z_n: residues in
// 1..n-1, inverse-closed. Parity always means parity of the canonical
// representative.

namespace {

std::vector<char> membership(int n, const std::vector<int>& s) {
    std::vector<char> in(n, 0);
    for (int e : s) in[e] = 1;
    return in;
}

}  // namespace

ConditionCheck check_c1(int n, const std::vector<int>& s) {
    ConditionCheck r;
    if (n % 2 != 0) return r;
    auto in = membership(n, s);
    bool has_even = false;
    for (int e : s)
        if (e % 2 == 0) has_even = true;
    // a = n is excluded: s + n = s would satisfy the clause for every set.
    for (int a = 2; a < n; a += 2) {
        if (n % a != 0) continue;
        bool ok = true;
        for (int e : s)
            if (e % 2 == 0 && !in[(e + a) % n]) {
                ok = false;
                break;
            }
        if (ok) {
            r.holds = true;
            r.witness = a;
            r.vacuous = !has_even;
            return r;
        }
    }
    return r;
}

ConditionCheck check_c2(int n, const std::vector<int>& s) {
    ConditionCheck r;
    if (n % 4 != 0) return r;
    auto in = membership(n, s);
    bool has_odd = false;
    for (int e : s)
        if (e % 2 == 1) has_odd = true;
    for (int b = 1; b <= n; b += 2) {
        if (n % b != 0) continue;
        bool ok = true;
        for (int e : s)
            if (e % 2 == 1 && !in[(e + 2 * b) % n]) {
                ok = false;
                break;
            }
        if (ok) {
            r.holds = true;
            r.witness = b;
            r.vacuous = !has_odd;
            return r;
        }
    }
    return r;
}

ConditionCheck check_c2prime(int n, const std::vector<int>& s) {
    ConditionCheck r;
    if (n % 4 != 0) return r;
    auto in = membership(n, s);
    for (int b = 1; b <= n; b += 2) {
        if (n % b != 0) continue;
        bool ok = true;
        bool range_hit = false;
        for (int e : s) {
            if (e % 2 == 1 && !in[(e + 2 * b) % n]) {
                ok = false;
                break;
            }
            if (e % 4 == 0 || e % 4 == (4 - b % 4) % 4) {
                range_hit = true;
                if (!in[(e + b) % n]) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) {
            r.holds = true;
            r.witness = b;
            bool has_odd = false;
            for (int e : s)
                if (e % 2 == 1) has_odd = true;
            r.vacuous = !has_odd && !range_hit;
            return r;
        }
    }
    return r;
}

ConditionCheck check_c3(int n, const std::vector<int>& s) {
    ConditionCheck r;
    if (n % 2 != 0) return r;
    auto in = membership(n, s);
    // Subgroups H = <d> per divisor d, small subgroups first. H = {0}
    // (d = n) can never produce a nonempty R, so it is inert.
    for (int d = n; d >= 1; --d) {
        if (n % d != 0) continue;
        std::vector<int> bad;  // R
        for (int e : s) {
            bool coset_inside = true;
            for (int h = 0; h < n; h += d)
                if (!in[(e + h) % n]) {
                    coset_inside = false;
                    break;
                }
            if (!coset_inside) bad.push_back(e);
        }
        if (bad.empty()) continue;
        int g = 0;
        for (int e : bad) g = std::gcd(g, e);
        if (g <= 1) continue;
        bool all_odd = true;
        for (int e : bad)
            if ((e / g) % 2 == 0) {
                all_odd = false;
                break;
            }
        if (all_odd) {
            r.holds = true;
            r.witness = d;
            return r;
        }
    }
    return r;
}

ConditionCheck check_c4(int n, const std::vector<int>& s) {
    ConditionCheck r;
    if (n % 2 != 0) return r;
    auto in = membership(n, s);
    for (int g = 1; g < n; ++g) {
        if (std::gcd(g, n) != 1) continue;
        bool ok = true;
        for (int e : s)
            if (!in[(g * e + n / 2) % n]) {
                ok = false;
                break;
            }
        if (ok) {
            r.holds = true;
            r.witness = g;
            return r;
        }
    }
    return r;
}

ConditionReport check_all(int n, const std::vector<int>& s) {
    ConditionReport rep;
    rep.c1 = check_c1(n, s);
    rep.c2 = check_c2(n, s);
    rep.c2prime = check_c2prime(n, s);
    rep.c3 = check_c3(n, s);
    rep.c4 = check_c4(n, s);
    return rep;
}

bool c2_holds_for_b(int n, const std::vector<int>& s, int b) {
    if (n % 4 != 0 || b % 2 != 1 || b < 1 || n % b != 0) return false;
    auto in = membership(n, s);
    for (int e : s)
        if (e % 2 == 1 && !in[(e + 2 * b) % n]) return false;
    return true;
}

}  // namespace circstab
