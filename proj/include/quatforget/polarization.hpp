#ifndef QUATFORGET_POLARIZATION_HPP
#define QUATFORGET_POLARIZATION_HPP

#include "quatforget/atkin_lehner.hpp"

#include <array>
#include <complex>

namespace qf {

/// pure_sublattice(codifferent(norm_ideal(I))): the Chern classes of
/// line bundles on the abelian surface of the datum.
Lattice ns_lattice(const PrincipalDatum& datum);

/// E(beta, gamma) = tr(mu_pol * gamma * conj(beta)).
Rat riemann_form(const Quaternion& mu_pol, const Quaternion& beta, const Quaternion& gamma);

/// E(u, beta v) == E(beta' u, v) with beta' = mu_pol^-1 conj(beta) mu_pol.
bool rosati_compatibility(const Quaternion& mu_pol, const Quaternion& beta, const Quaternion& u,
                          const Quaternion& v);

/// conj(alpha) * mu_pol * alpha.
Quaternion pullback_c1(const Quaternion& mu_pol, const Quaternion& alpha);

struct PolarizationDegree {
    /// (n(I)^2 D delta)^2 with delta = n(mu_pol).
    Rat degree;
    /// det E(e_i, e_j) over the HNF basis of I.
    Rat oracle;
};

/// Throws InvariantViolation when formula and oracle disagree.
PolarizationDegree polarization_degree(const PrincipalDatum& datum, const Quaternion& mu_pol);

/// tau in the upper half plane; the lattice of a datum is Phi(I) (tau, 1).
struct ComplexPoint {
    std::complex<double> tau{0.0, 1.0};
};

using RealMatrix = std::array<std::array<double, 2>, 2>;

/// B -> M_2(R): for a > 0, i -> diag(sqrt a, -sqrt a), j -> [[0, b], [1, 0]];
/// for a < 0 the roles of i and j are exchanged.
RealMatrix split_real(const Quaternion& q);

inline constexpr double kDefaultTolerance = 1e-9;

/// Positive definiteness of H(u, v) = E(iu, v) + i E(u, v) on C^2 by
/// leading principal minors. A minor within tol of zero throws
/// Indeterminate.
bool positivity_check(const Quaternion& mu_pol, const ComplexPoint& point, double tol = kDefaultTolerance);

struct ALAction {
    /// The embedding becomes x -> omega^-1 x omega.
    Quaternion conjugator;
    /// omega^-1 mu_pol omega.
    Quaternion chern;
};

/// Requires omega to normalize O with n(omega) > 0.
ALAction al_act(const PrincipalDatum& datum, const Quaternion& mu_pol, const Quaternion& omega);

/// s^-1 (mu/D) s == mu/D for s in Q(mu) cap O.
bool verify_stable_fixes(const PrincipalDatum& datum, const Quaternion& s);

/// With alpha = omega^-1 chi: alpha in O, n(alpha) = -1 and
/// conj(alpha) (omega^-1 (mu/D) omega) alpha == mu/D.
bool verify_twist_transport(const PrincipalDatum& datum, const TwistWitness& witness, const Quaternion& omega);

} // namespace qf

#endif
