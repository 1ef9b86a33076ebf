#ifndef QUATFORGET_DATUM_HPP
#define QUATFORGET_DATUM_HPP

#include "quatforget/lattice.hpp"

#include <optional>

namespace qf {

/// (O, I, mu) with O maximal in a totally indefinite division algebra,
/// I a left O-ideal and mu in O with mu^2 + D = 0.
class PrincipalDatum {
public:
    /// Checks every invariant; throws DomainError on the first failure.
    static PrincipalDatum make(Order order, LeftIdeal ideal, Quaternion mu);

    const Order& order() const { return order_; }
    const LeftIdeal& ideal() const { return ideal_; }
    const Quaternion& mu() const { return mu_; }
    const QuaternionAlgebra& algebra() const { return order_.algebra(); }
    const Integer& D() const { return D_; }
    /// mu / D, the principal Chern class.
    Quaternion mu_pol() const { return mu_ / Rat(D_); }

private:
    PrincipalDatum(Order order, LeftIdeal ideal, Quaternion mu, Integer D)
        : order_(std::move(order)), ideal_(std::move(ideal)), mu_(std::move(mu)), D_(std::move(D))
    {
    }

    Order order_;
    LeftIdeal ideal_;
    Quaternion mu_;
    Integer D_;
};

inline constexpr long kDefaultSearchBound = 50;

/// First pure mu of norm D in shell order over an LLL basis of the pure
/// part of O. nullopt means none within the coordinate bound.
std::optional<PrincipalDatum> make_principal_datum(const Order& ord, const LeftIdeal& ideal,
                                                   long bound = kDefaultSearchBound);

} // namespace qf

#endif
