#include "circstab/group_order.hpp"

#include <cmath>
#include <vector>

namespace circstab {

void GroupOrder::mul(uint64_t k) {
    for (uint64_t p = 2; p * p <= k; ++p)
        while (k % p == 0) {
            ++f_[p];
            k /= p;
        }
    if (k > 1) ++f_[k];
}

GroupOrder GroupOrder::times(uint64_t k) const {
    GroupOrder r = *this;
    r.mul(k);
    return r;
}

bool GroupOrder::divides(const GroupOrder& o) const {
    for (auto [p, e] : f_) {
        auto it = o.f_.find(p);
        if (it == o.f_.end() || it->second < e) return false;
    }
    return true;
}

uint64_t GroupOrder::to_u64(bool* exact) const {
    if (exact) *exact = true;
    uint64_t v = 1;
    for (auto [p, e] : f_)
        for (int i = 0; i < e; ++i) {
            if (v > UINT64_MAX / p) {
                if (exact) *exact = false;
                return UINT64_MAX;
            }
            v *= p;
        }
    return v;
}

bool GroupOrder::equals_u64(uint64_t v) const {
    bool exact = true;
    uint64_t mine = to_u64(&exact);
    return exact && mine == v;
}

std::string GroupOrder::str() const {
    // Decimal expansion via repeated multiply on base-1e9 limbs.
    std::vector<uint32_t> limbs{1};
    auto mul_small = [&](uint32_t m) {
        uint64_t carry = 0;
        for (auto& limb : limbs) {
            uint64_t cur = uint64_t(limb) * m + carry;
            limb = uint32_t(cur % 1000000000u);
            carry = cur / 1000000000u;
        }
        while (carry) {
            limbs.push_back(uint32_t(carry % 1000000000u));
            carry /= 1000000000u;
        }
    };
    for (auto [p, e] : f_)
        for (int i = 0; i < e; ++i) mul_small(uint32_t(p));
    std::string s = std::to_string(limbs.back());
    for (int i = static_cast<int>(limbs.size()) - 2; i >= 0; --i) {
        std::string part = std::to_string(limbs[i]);
        s += std::string(9 - part.size(), '0') + part;
    }
    return s;
}

double GroupOrder::approx_log10() const {
    double t = 0;
    for (auto [p, e] : f_) t += e * std::log10(double(p));
    return t;
}

}  // namespace circstab
