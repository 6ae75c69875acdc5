#include "circstab/abelian.hpp"

#include <algorithm>
#include <numeric>

namespace circstab {

AbelianGroup AbelianGroup::cyclic(int n) {
    if (n <= 0) throw InputError("cyclic group order must be >= 1, got " + std::to_string(n));
    if (n == 1) return AbelianGroup({}, 1);
    return AbelianGroup({n}, n);
}

AbelianGroup AbelianGroup::product(const std::vector<int>& factors) {
    if (factors.empty()) throw InputError("product group needs at least one factor");
    long long order = 1;
    for (int d : factors) {
        if (d < 2) throw InputError("invalid group factor " + std::to_string(d) + " (must be >= 2)");
        order *= d;
        if (order > (1 << 20)) throw InputError("group order too large");
    }
    return AbelianGroup(factors, static_cast<int>(order));
}

std::vector<int> AbelianGroup::coords_of(int e) const {
    std::vector<int> c(factors_.size());
    for (int i = static_cast<int>(factors_.size()) - 1; i >= 0; --i) {
        c[i] = e % factors_[i];
        e /= factors_[i];
    }
    return c;
}

int AbelianGroup::element(const std::vector<int>& coords) const {
    if (coords.size() != factors_.size())
        throw InputError("element has " + std::to_string(coords.size()) + " coordinates, group has " +
                         std::to_string(factors_.size()) + " factors");
    int e = 0;
    for (size_t i = 0; i < factors_.size(); ++i) {
        int r = coords[i] % factors_[i];
        if (r < 0) r += factors_[i];
        e = e * factors_[i] + r;
    }
    return e;
}

int AbelianGroup::add(int a, int b) const {
    int e = 0;
    // Mixed-radix addition without materializing coordinate vectors.
    int mult = 1;
    int res = 0;
    for (int i = static_cast<int>(factors_.size()) - 1; i >= 0; --i) {
        int d = factors_[i];
        int ca = a % d, cb = b % d;
        a /= d;
        b /= d;
        res += ((ca + cb) % d) * mult;
        mult *= d;
    }
    e = res;
    return e;
}

int AbelianGroup::neg(int a) const {
    int mult = 1;
    int res = 0;
    for (int i = static_cast<int>(factors_.size()) - 1; i >= 0; --i) {
        int d = factors_[i];
        int ca = a % d;
        a /= d;
        res += ((d - ca) % d) * mult;
        mult *= d;
    }
    return res;
}

int AbelianGroup::element_order(int a) const {
    int k = 1;
    int x = a;
    while (x != 0) {
        x = add(x, a);
        ++k;
    }
    return k;
}

std::string AbelianGroup::name(int e) const {
    if (factors_.size() <= 1) return std::to_string(e);
    auto c = coords_of(e);
    std::string s = "(";
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c[i]);
    }
    return s + ")";
}

std::string AbelianGroup::descriptor() const {
    if (factors_.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < factors_.size(); ++i) {
        if (i) s += "x";
        s += std::to_string(factors_[i]);
    }
    return s;
}

std::vector<int> units_mod(int n) {
    if (n < 2) throw InputError("units_mod needs n >= 2");
    std::vector<int> u;
    for (int g = 1; g < n; ++g)
        if (std::gcd(g, n) == 1) u.push_back(g);
    return u;
}

long long crt_solve(long long r1, long long m1, long long r2, long long m2) {
    if (m1 < 1 || m2 < 1) throw InputError("crt_solve moduli must be positive");
    if (std::gcd(m1, m2) != 1)
        throw InputError("crt_solve moduli " + std::to_string(m1) + " and " + std::to_string(m2) +
                         " are not coprime");
    r1 %= m1;
    if (r1 < 0) r1 += m1;
    r2 %= m2;
    if (r2 < 0) r2 += m2;
    // t = r1 + m1*k with k = (r2 - r1) * m1^{-1} mod m2, inverse by extended euclid.
    long long inv = 0;
    {
        long long a = m1 % m2, b = m2, x = 1, y = 0;
        while (b != 0) {
            long long q = a / b;
            a -= q * b;
            std::swap(a, b);
            x -= q * y;
            std::swap(x, y);
        }
        inv = ((x % m2) + m2) % m2;
    }
    long long k = (((r2 - r1) % m2 + m2) % m2) * inv % m2;
    return (r1 + m1 * k) % (m1 * m2);
}

std::vector<GroupAutomorphism> automorphisms(const AbelianGroup& g, int cap) {
    const int n = g.order();
    if (n > cap)
        throw SizeLimitError("automorphism enumeration cap " + std::to_string(cap) +
                             " exceeded by group of order " + std::to_string(n));
    const auto& factors = g.invariant_factors();
    const int k = static_cast<int>(factors.size());

    std::vector<GroupAutomorphism> result;
    if (k == 0) {
        result.push_back({{0}, {}});
        return result;
    }

    // Canonical generators e_i; element x = sum x_i e_i decomposes through its
    // coordinates, so a homomorphism is determined by the generator images.
    std::vector<int> gens(k);
    for (int i = 0; i < k; ++i) {
        std::vector<int> c(k, 0);
        c[i] = 1;
        gens[i] = g.element(c);
    }

    // Candidate images for e_i: elements whose order divides factors[i].
    std::vector<std::vector<int>> candidates(k);
    for (int i = 0; i < k; ++i)
        for (int e = 0; e < n; ++e)
            if (factors[i] % g.element_order(e) == 0) candidates[i].push_back(e);

    std::vector<int> chosen(k);
    std::vector<int> images(n);
    std::vector<char> seen(n);

    // Images of the partial subgroup generated by e_0..e_{i-1} are rebuilt per
    // level; injectivity on that subgroup prunes dead branches early.
    auto rec = [&](auto&& self, int i, const std::vector<int>& partial) -> void {
        if (i == k) {
            std::fill(seen.begin(), seen.end(), 0);
            bool ok = true;
            for (int e = 0; e < n; ++e) {
                if (seen[partial[e]]) {
                    ok = false;
                    break;
                }
                seen[partial[e]] = 1;
            }
            if (ok) result.push_back({partial, chosen});
            return;
        }
        for (int img : candidates[i]) {
            chosen[i] = img;
            // extend the map to <e_0..e_i>: every element splits as
            // prefix + x_i * e_i with prefix in the previous subgroup.
            std::vector<int> ext(partial);
            bool injective = true;
            std::vector<char> hit(n, 0);
            for (int e = 0; e < n && injective; ++e) {
                auto c = g.coords_of(e);
                bool in_span = true;
                for (int j = i + 1; j < k; ++j)
                    if (c[j] != 0) in_span = false;
                if (!in_span) continue;
                int xi = c[i];
                c[i] = 0;
                int prefix = g.element(c);
                int val = partial[prefix];
                for (int t = 0; t < xi; ++t) val = g.add(val, img);
                ext[e] = val;
                if (hit[val]) injective = false;
                hit[val] = 1;
            }
            if (injective) self(self, i + 1, ext);
        }
    };

    std::vector<int> base(n, 0);  // identity on the trivial subgroup
    rec(rec, 0, base);
    return result;
}

std::vector<GroupAutomorphism> set_stabilizer(const AbelianGroup& g, const std::vector<int>& s,
                                              int cap) {
    auto all = automorphisms(g, cap);
    std::vector<char> in_s(g.order(), 0);
    for (int e : s) in_s[e] = 1;
    std::vector<GroupAutomorphism> out;
    for (auto& a : all) {
        bool fixes = true;
        for (int e : s)
            if (!in_s[a.images[e]]) {
                fixes = false;
                break;
            }
        if (fixes) out.push_back(std::move(a));
    }
    return out;
}

std::vector<std::vector<int>> subgroups_cyclic(int n) {
    if (n < 1) throw InputError("subgroups_cyclic needs n >= 1");
    std::vector<std::vector<int>> subs;
    for (int d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        std::vector<int> h;
        for (int x = 0; x < n; x += d) h.push_back(x);
        subs.push_back(std::move(h));
    }
    std::sort(subs.begin(), subs.end(),
              [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return subs;
}

}  // namespace circstab
