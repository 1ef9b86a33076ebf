#ifndef QUATFORGET_SRC_SEARCH_HPP
#define QUATFORGET_SRC_SEARCH_HPP

#include "quatforget/quaternion.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace qf::detail {

// Reduced norm of sum c_i e_i as an integer quadratic form over a common
// denominator. Uses 128-bit arithmetic when the search box allows it.
class NormForm {
public:
    NormForm(std::vector<Quaternion> basis, long bound);

    std::size_t rank() const { return basis_.size(); }
    const Integer& denominator() const { return den_; }
    bool fast() const { return fast_; }
    /// den * n(sum c_i e_i).
    Integer scaled_norm(const std::vector<long>& c) const;
    /// Same, valid only when fast().
    __int128 scaled_norm128(const std::vector<long>& c) const;
    Quaternion element(const std::vector<long>& c) const;

private:
    std::vector<Quaternion> basis_;
    std::vector<std::vector<Integer>> q_;
    std::vector<std::vector<__int128>> q128_;
    Integer den_;
    bool fast_ = false;
};

// Visits nonzero integer vectors of length n with max |c_i| = 1, 2, ...,
// bound. Within a shell the order is lexicographic with coordinate values
// ranked 0, 1, -1, 2, -2, ... Stops when visit returns true.
Integer from_int128(__int128 v);

void enumerate_shells(std::size_t n, long bound, const std::function<bool(const std::vector<long>&)>& visit);

// Norm condition: n == value exactly, or n = value * k^2 for some k >= 1.
struct NormTarget {
    Integer value;
    bool up_to_squares = false;
};

// First element in shell order over the given basis meeting the norm
// target and the confirm predicate.
std::optional<Quaternion> first_with_norm(const std::vector<Quaternion>& basis, long bound, const NormTarget& target,
                                          const std::function<bool(const Quaternion&)>& confirm);

} // namespace qf::detail

#endif
