#include "quatforget/eichler.hpp"

#include "quatforget/atkin_lehner.hpp"
#include "quatforget/errors.hpp"
#include "search.hpp"

namespace qf {

namespace {

Lattice span_one(const Quaternion& g)
{
    return Lattice::from_generators(g.algebra(), {Quaternion::one(g.algebra()), g});
}

bool optimal(const Order& ord, const Quaternion& g)
{
    return intersect_span(ord.lattice(), {Quaternion::one(ord.algebra()), g}) == span_one(g);
}

} // namespace

EichlerPair EichlerPair::make(const Order& ord, QuadOrder quad, Quaternion g)
{
    if (g.algebra() != ord.algebra()) throw DomainError("Eichler pair: element of another algebra");
    if (quad.d() <= 0) throw DomainError("Eichler pair: quadratic order must be real");
    if (!ord.contains(g)) throw DomainError("Eichler pair: g is not in O");
    if (trace(g) != Rat(quad.generator_trace()) || norm(g) != Rat(quad.generator_norm()))
        throw DomainError("Eichler pair: minimal polynomial of g does not match the order");
    if (!optimal(ord, g)) throw DomainError("Eichler pair: embedding is not optimal");
    Lattice image = span_one(g);
    return EichlerPair(std::move(quad), std::move(g), std::move(image));
}

bool embeddable_maximal(const QuaternionAlgebra& alg, const Integer& d)
{
    if (d <= 1 || !is_squarefree(d)) throw DomainError("embeddable_maximal: d must be a squarefree integer > 1");
    RamificationData ram = ramification(alg);
    if (ram.place_count() == 0) throw DomainError("embeddable_maximal: algebra is split");
    if (ram.infinite_ramified) throw DomainError("embeddable_maximal: algebra is definite");
    Integer disc = QuadOrder(d).field_discriminant();
    for (const auto& p : ram.ramified_primes)
        if (kronecker(disc, p) == 1) return false;
    return true;
}

std::optional<EichlerPair> find_embedding(const Order& ord, const QuadOrder& quad, long bound)
{
    if (bound <= 0) throw DomainError("find_embedding: bound must be positive");
    if (quad.d() <= 0) throw DomainError("find_embedding: quadratic order must be real");
    const auto& alg = ord.algebra();
    const Integer t = quad.generator_trace();
    // y = 2x - t runs over pure elements of Z + 2O with n(y) = -disc(S).
    std::vector<Quaternion> gens{Quaternion::one(alg)};
    for (const auto& e : ord.lattice().basis()) gens.push_back(Rat(2) * e);
    auto basis = reduced_basis(pure_sublattice(Lattice::from_generators(alg, gens)));

    std::optional<Quaternion> found;
    detail::first_with_norm(basis, bound, {Integer(-quad.discriminant()), false}, [&](const Quaternion& y) {
        Quaternion x = (y + Quaternion::scalar(alg, Rat(t))) / Rat(2);
        if (!ord.contains(x) || !optimal(ord, x)) return false;
        found = x;
        return true;
    });
    if (!found) return std::nullopt;
    return EichlerPair::make(ord, quad, *found);
}

EichlerPair pair_from_element(const Order& ord, const Quaternion& g)
{
    if (!ord.contains(g)) throw DomainError("pair_from_element: g is not in O");
    if (g.is_scalar()) throw DomainError("pair_from_element: g is rational");
    Lattice s = intersect_span(ord.lattice(), {Quaternion::one(ord.algebra()), g});
    Quaternion h = pure_sublattice(s).basis().front();
    // S = Z + Z h' for h' = h or (1 + h)/2, whichever generates.
    Quaternion gen = h;
    Quaternion half = (Quaternion::one(ord.algebra()) + h) / Rat(2);
    if (s.contains(half)) gen = half;
    Integer disc = Rat(trace(gen) * trace(gen) - 4 * norm(gen)).get_num();
    if (disc <= 0 || is_square(disc)) throw DomainError("pair_from_element: g does not generate a real quadratic field");
    Integer d = squarefree_part(Rat(disc));
    QuadOrder field(d);
    auto f = rat_sqrt(make_rat(disc, field.field_discriminant()));
    if (!f || f->get_den() != 1) throw InvariantViolation("pair_from_element: bad discriminant");
    QuadOrder quad(d, f->get_num());
    // shift gen to the trace of the standard generator
    Rat shift = (Rat(quad.generator_trace()) - trace(gen)) / 2;
    return EichlerPair::make(ord, quad, gen + Quaternion::scalar(ord.algebra(), shift));
}

bool contains_twist(const EichlerPair& pair, const PrincipalDatum& datum)
{
    if (pair.g().algebra() != datum.algebra() || !datum.order().contains(pair.g()))
        throw DomainError("contains_twist: pair is not embedded in the datum's order");
    // Pure elements of Q + Q g are multiples of the generator of the rank 1
    // pure sublattice, and being a twist is invariant under scaling.
    Quaternion h = pure_sublattice(pair.phi_image()).basis().front();
    return is_twist(datum, h);
}

} // namespace qf
