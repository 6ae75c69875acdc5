#pragma once

#include <string>
#include <vector>

#include "circstab/errors.hpp"

namespace circstab {

// Finite abelian group given by invariant factors (d1,...,dk), each >= 2.
// Elements are residue tuples, identified with ids 0..order-1 in
// lexicographic order (first coordinate most significant). A cyclic group
// is the one-factor case, so element ids coincide with residues mod n.
class AbelianGroup {
public:
    static AbelianGroup cyclic(int n);
    static AbelianGroup product(const std::vector<int>& factors);

    int order() const { return order_; }
    const std::vector<int>& invariant_factors() const { return factors_; }
    bool is_cyclic() const { return factors_.size() <= 1; }

    std::vector<int> coords_of(int e) const;
    // Accepts arbitrary integers per coordinate; reduces mod the factor.
    int element(const std::vector<int>& coords) const;

    int add(int a, int b) const;
    int neg(int a) const;
    int element_order(int a) const;

    std::string name(int e) const;        // "7" or "(1,3)"
    std::string descriptor() const;       // "12" or "4x4"

    bool operator==(const AbelianGroup& o) const { return factors_ == o.factors_; }

private:
    AbelianGroup(std::vector<int> factors, int order)
        : factors_(std::move(factors)), order_(order) {}

    std::vector<int> factors_;
    int order_;
};

// An additive bijection G -> G, stored as its action on element ids plus the
// images of the canonical generators e_i = (0,..,1,..,0).
struct GroupAutomorphism {
    std::vector<int> images;
    std::vector<int> generator_images;

    int operator()(int e) const { return images[e]; }
};

// Sorted units of Z_n; exactly the automorphism multipliers of Z_n.
std::vector<int> units_mod(int n);

// Unique t in [0, m1*m2) with t = r1 (mod m1) and t = r2 (mod m2).
// Residues may be negative. Throws InputError unless gcd(m1,m2) = 1.
long long crt_solve(long long r1, long long m1, long long r2, long long m2);

// All automorphisms of G, by backtracking over generator images.
// Throws SizeLimitError when |G| exceeds the cap.
std::vector<GroupAutomorphism> automorphisms(const AbelianGroup& g, int cap = 64);

// Aut(G,S): automorphisms fixing S setwise. S holds element ids.
std::vector<GroupAutomorphism> set_stabilizer(const AbelianGroup& g,
                                              const std::vector<int>& s,
                                              int cap = 64);

// One subgroup <d> per divisor d of n, sorted by size; includes {0} and Z_n.
std::vector<std::vector<int>> subgroups_cyclic(int n);

}  // namespace circstab
