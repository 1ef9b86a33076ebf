#include "quatforget/polarization.hpp"

#include "quatforget/errors.hpp"

#include <cmath>

namespace qf {

Lattice ns_lattice(const PrincipalDatum& datum)
{
    return pure_sublattice(codifferent(norm_ideal(datum.ideal())));
}

Rat riemann_form(const Quaternion& mu_pol, const Quaternion& beta, const Quaternion& gamma)
{
    return trace(mu_pol * gamma * conj(beta));
}

bool rosati_compatibility(const Quaternion& mu_pol, const Quaternion& beta, const Quaternion& u,
                          const Quaternion& v)
{
    if (norm(mu_pol) == 0) throw DomainError("rosati_compatibility: degenerate Chern class");
    Quaternion beta_dual = inverse(mu_pol) * conj(beta) * mu_pol;
    return riemann_form(mu_pol, u, beta * v) == riemann_form(mu_pol, beta_dual * u, v);
}

Quaternion pullback_c1(const Quaternion& mu_pol, const Quaternion& alpha)
{
    if (alpha.is_zero()) throw DomainError("pullback_c1: alpha is zero");
    return conj(alpha) * mu_pol * alpha;
}

PolarizationDegree polarization_degree(const PrincipalDatum& datum, const Quaternion& mu_pol)
{
    if (trace(mu_pol) != 0) throw DomainError("polarization_degree: Chern class is not pure");
    Rat delta = norm(mu_pol);
    if (delta <= 0) throw DomainError("polarization_degree: n(mu_pol) must be positive");
    Rat nI = ideal_norm(datum.ideal());
    Rat inner = nI * nI * Rat(datum.D()) * delta;

    auto basis = datum.ideal().lattice().basis();
    std::vector<std::vector<Rat>> e(4, std::vector<Rat>(4));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) e[i][j] = riemann_form(mu_pol, basis[i], basis[j]);
    PolarizationDegree out{inner * inner, determinant(e)};
    if (out.degree != out.oracle)
        throw InvariantViolation("polarization_degree: formula " + to_string(out.degree) + " != determinant " +
                                 to_string(out.oracle));
    return out;
}

// ---------------------------------------------------------------------------

namespace {

using CMatrix = std::array<std::array<std::complex<double>, 2>, 2>;

RealMatrix mat_mul(const RealMatrix& x, const RealMatrix& y)
{
    RealMatrix r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
    return r;
}

RealMatrix adjugate(const RealMatrix& x) { return {{{x[1][1], -x[0][1]}, {-x[1][0], x[0][0]}}}; }

// The real matrix M with M (tau, 1)^T = w.
RealMatrix lift(const std::array<std::complex<double>, 2>& w, std::complex<double> tau)
{
    RealMatrix m{};
    for (int k = 0; k < 2; ++k) {
        double p = w[k].imag() / tau.imag();
        m[k][0] = p;
        m[k][1] = w[k].real() - p * tau.real();
    }
    return m;
}

double form(const RealMatrix& mu, const std::array<std::complex<double>, 2>& u,
            const std::array<std::complex<double>, 2>& v, std::complex<double> tau)
{
    RealMatrix p = mat_mul(mat_mul(mu, lift(v, tau)), adjugate(lift(u, tau)));
    return p[0][0] + p[1][1];
}

} // namespace

RealMatrix split_real(const Quaternion& q)
{
    const Rat& a = q.algebra().a();
    const Rat& b = q.algebra().b();
    if (a < 0 && b < 0) throw DomainError("split_real: algebra is definite");
    const bool swap = a < 0;
    const double s = std::sqrt((swap ? b : a).get_d());
    const double other = (swap ? a : b).get_d();
    // diagonal generator d, off-diagonal generator o
    RealMatrix d{{{s, 0.0}, {0.0, -s}}};
    RealMatrix o{{{0.0, other}, {1.0, 0.0}}};
    RealMatrix ij = swap ? mat_mul(o, d) : mat_mul(d, o);
    const RealMatrix& ei = swap ? o : d;
    const RealMatrix& ej = swap ? d : o;
    double c[4] = {q[0].get_d(), q[1].get_d(), q[2].get_d(), q[3].get_d()};
    RealMatrix r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r[i][j] = (i == j ? c[0] : 0.0) + c[1] * ei[i][j] + c[2] * ej[i][j] + c[3] * ij[i][j];
    return r;
}

bool positivity_check(const Quaternion& mu_pol, const ComplexPoint& point, double tol)
{
    if (!(tol > 0)) throw DomainError("positivity_check: tolerance must be positive");
    if (!(point.tau.imag() > 0)) throw DomainError("positivity_check: tau must lie in the upper half plane");
    if (norm(mu_pol) <= 0) throw DomainError("positivity_check: n(mu_pol) must be positive");
    RealMatrix mu = split_real(mu_pol);
    const std::complex<double> I(0.0, 1.0);
    std::array<std::array<std::complex<double>, 2>, 2> unit{{{1.0, 0.0}, {0.0, 1.0}}};
    CMatrix h{};
    for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) {
            std::array<std::complex<double>, 2> iu{I * unit[k][0], I * unit[k][1]};
            h[k][l] = form(mu, iu, unit[l], point.tau) + I * form(mu, unit[k], unit[l], point.tau);
        }
    double m1 = h[0][0].real();
    double m2 = (h[0][0] * h[1][1] - h[0][1] * h[1][0]).real();
    if (std::abs(m1) < tol || std::abs(m2) < tol)
        throw Indeterminate("positivity_check: principal minor within tolerance of zero");
    return m1 > 0 && m2 > 0;
}

// ---------------------------------------------------------------------------

ALAction al_act(const PrincipalDatum& datum, const Quaternion& mu_pol, const Quaternion& omega)
{
    if (omega.is_zero() || norm(omega) <= 0) throw DomainError("al_act: n(omega) must be positive");
    if (!normalizes(datum.order(), omega)) throw DomainError("al_act: omega does not normalize O");
    return {omega, inverse(omega) * mu_pol * omega};
}

bool verify_stable_fixes(const PrincipalDatum& datum, const Quaternion& s)
{
    if (s.is_zero()) throw DomainError("verify_stable_fixes: s is zero");
    Quaternion p = pure_part(s);
    const Quaternion& mu = datum.mu();
    // p must be a rational multiple of mu
    Rat ratio = 0;
    for (std::size_t k = 1; k < 4; ++k)
        if (mu[k] != 0) {
            ratio = p[k] / mu[k];
            break;
        }
    if (p != ratio * mu) throw DomainError("verify_stable_fixes: s is not in Q(mu)");
    if (!datum.order().contains(s)) throw DomainError("verify_stable_fixes: s is not in O");
    Quaternion c = datum.mu_pol();
    return inverse(s) * c * s == c;
}

bool verify_twist_transport(const PrincipalDatum& datum, const TwistWitness& witness, const Quaternion& omega)
{
    if (omega.is_zero() || norm(omega) <= 0) throw DomainError("verify_twist_transport: n(omega) must be positive");
    Quaternion alpha = inverse(omega) * witness.chi;
    if (!datum.order().contains(alpha)) return false;
    if (norm(alpha) != -1) return false;
    Quaternion c = datum.mu_pol();
    Quaternion moved = inverse(omega) * c * omega;
    return pullback_c1(moved, alpha) == c;
}

} // namespace qf
