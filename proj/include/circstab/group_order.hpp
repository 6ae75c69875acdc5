#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace circstab {

// Exact group order kept in factored form. Orders arise as products of
// transversal sizes (each small), so factoring inputs is trivial while
// equality, divisibility and 2x comparisons stay exact at any magnitude.
class GroupOrder {
public:
    GroupOrder() = default;  // 1

    void mul(uint64_t k);
    GroupOrder times(uint64_t k) const;

    bool operator==(const GroupOrder& o) const { return f_ == o.f_; }
    bool operator!=(const GroupOrder& o) const { return !(*this == o); }

    bool divides(const GroupOrder& o) const;

    bool is_one() const { return f_.empty(); }

    // Exact value when it fits; otherwise saturates and clears *exact.
    uint64_t to_u64(bool* exact = nullptr) const;

    bool equals_u64(uint64_t v) const;

    std::string str() const;  // decimal
    double approx_log10() const;

    const std::map<uint64_t, int>& factors() const { return f_; }

private:
    std::map<uint64_t, int> f_;
};

}  // namespace circstab
