#ifndef QUATFORGET_EICHLER_HPP
#define QUATFORGET_EICHLER_HPP

#include "quatforget/datum.hpp"

#include <optional>

namespace qf {

/// A real quadratic order S with the image Z + Z g of its generator in O.
class EichlerPair {
public:
    /// Validates the characteristic polynomial of g and optimality
    /// (Q + Q g) cap O = Z + Z g.
    static EichlerPair make(const Order& ord, QuadOrder quad, Quaternion g);

    const QuadOrder& quad() const { return quad_; }
    const Quaternion& g() const { return g_; }
    /// Rank 2 lattice Z + Z g.
    const Lattice& phi_image() const { return image_; }

private:
    EichlerPair(QuadOrder quad, Quaternion g, Lattice image)
        : quad_(std::move(quad)), g_(std::move(g)), image_(std::move(image))
    {
    }
    QuadOrder quad_;
    Quaternion g_;
    Lattice image_;
};

/// The ring of integers of Q(sqrt d) embeds in a maximal order iff no
/// prime dividing D splits in Q(sqrt d).
bool embeddable_maximal(const QuaternionAlgebra& alg, const Integer& d);

/// First g in O (shell order over an LLL basis of {x in O : tr x = t}) with
/// n(g) = n and an optimal embedding.
std::optional<EichlerPair> find_embedding(const Order& ord, const QuadOrder& quad, long bound = kDefaultSearchBound);

/// Pair from an explicit g in O; the quadratic order is read off from the
/// minimal polynomial of g. g must be integral and irrational with a
/// positive discriminant.
EichlerPair pair_from_element(const Order& ord, const Quaternion& g);

/// Some element of Z + Z g is a twist of the datum.
bool contains_twist(const EichlerPair& pair, const PrincipalDatum& datum);

} // namespace qf

#endif
