#include "quatforget/datum.hpp"

#include "quatforget/errors.hpp"
#include "search.hpp"

namespace qf {

namespace {

Integer checked_discriminant(const Order& order)
{
    RamificationData ram = ramification(order.algebra());
    if (ram.place_count() == 0) throw DomainError("datum: algebra is split");
    if (ram.infinite_ramified) throw DomainError("datum: algebra is definite");
    if (!is_maximal(order)) throw DomainError("datum: order is not maximal");
    return ram.discriminant;
}

} // namespace

PrincipalDatum PrincipalDatum::make(Order order, LeftIdeal ideal, Quaternion mu)
{
    Integer D = checked_discriminant(order);
    if (!(ideal.order() == order)) throw DomainError("datum: ideal belongs to another order");
    if (mu.algebra() != order.algebra()) throw DomainError("datum: mu lies in another algebra");
    if (trace(mu) != 0) throw DomainError("datum: mu is not pure");
    if (norm(mu) != Rat(D)) throw DomainError("datum: mu^2 + D != 0");
    if (!order.contains(mu)) throw DomainError("datum: mu is not in O");
    if (!normalizes(order, mu)) throw DomainError("datum: mu does not normalize O");
    return PrincipalDatum(std::move(order), std::move(ideal), std::move(mu), std::move(D));
}

std::optional<PrincipalDatum> make_principal_datum(const Order& ord, const LeftIdeal& ideal, long bound)
{
    Integer D = checked_discriminant(ord);
    // Every element of O of norm D lies in the two-sided ideal of norm D,
    // whose pure part has a much shorter reduced basis.
    auto basis = reduced_basis(pure_sublattice(two_sided_ideal(ord, D)));
    auto mu = detail::first_with_norm(basis, bound, {D, false}, [&](const Quaternion& x) {
        return ord.contains(x) && normalizes(ord, x);
    });
    if (!mu) return std::nullopt;
    return PrincipalDatum::make(ord, ideal, *mu);
}

} // namespace qf
