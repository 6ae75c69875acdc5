#pragma once

#include <vector>

namespace circstab {

// One of Wilson's instability conditions evaluated on (n, S), with the
// witness divisor/unit/subgroup-generator that made it hold. A universally
// quantified clause with an empty range counts as satisfied but is flagged
// vacuous (only possible for C.1 and C.2).
struct ConditionCheck {
    bool holds = false;
    int witness = -1;
    bool vacuous = false;
};

struct ConditionReport {
    ConditionCheck c1;       // witness: even divisor a
    ConditionCheck c2;       // witness: odd divisor b
    ConditionCheck c2prime;  // witness: odd divisor b
    ConditionCheck c3;       // witness: generator d of the subgroup H = <d>
    ConditionCheck c4;       // witness: unit g

    bool any() const { return c1.holds || c2.holds || c3.holds || c4.holds; }
    bool any_corrected() const { return c1.holds || c2prime.holds || c3.holds || c4.holds; }
};

ConditionCheck check_c1(int n, const std::vector<int>& s);
ConditionCheck check_c2(int n, const std::vector<int>& s);
ConditionCheck check_c2prime(int n, const std::vector<int>& s);
ConditionCheck check_c3(int n, const std::vector<int>& s);
ConditionCheck check_c4(int n, const std::vector<int>& s);
ConditionReport check_all(int n, const std::vector<int>& s);

// The C.2 clause for one fixed odd divisor b (used by survey filters that
// count sets satisfying C.2 at a particular b).
bool c2_holds_for_b(int n, const std::vector<int>& s, int b);

}  // namespace circstab
