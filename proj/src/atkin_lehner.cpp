#include "quatforget/atkin_lehner.hpp"

#include "quatforget/errors.hpp"
#include "search.hpp"

#include <algorithm>

namespace qf {

ALClass ALClass::make(const Integer& D, const Integer& m)
{
    if (D <= 0 || !is_squarefree(D)) throw DomainError("AL class: D must be a positive squarefree integer");
    if (m <= 0 || !mpz_divisible_p(D.get_mpz_t(), m.get_mpz_t()))
        throw DomainError("AL class: m must be a positive divisor of D");
    return ALClass{D, m};
}

ALClass al_compose(const ALClass& x, const ALClass& y)
{
    if (x.D != y.D) throw DomainError("al_compose: classes of different discriminants");
    Integer g = gcd(x.m, y.m);
    return ALClass{x.D, x.m * y.m / (g * g)};
}

ALSubgroup ALSubgroup::trivial(const Integer& D) { return ALSubgroup(D, {Integer(1)}); }

ALSubgroup ALSubgroup::generated(const Integer& D, const std::vector<Integer>& gens)
{
    std::vector<Integer> members{Integer(1)};
    for (const auto& g : gens) {
        ALClass c = ALClass::make(D, g);
        if (std::find(members.begin(), members.end(), c.m) != members.end()) continue;
        std::vector<Integer> next = members;
        for (const auto& x : members) next.push_back(al_compose(ALClass{D, x}, c).m);
        members = std::move(next);
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return ALSubgroup(D, std::move(members));
}

bool ALSubgroup::contains(const Integer& m) const
{
    return std::binary_search(members_.begin(), members_.end(), m);
}

bool ALSubgroup::is_subgroup_of(const ALSubgroup& o) const
{
    if (D_ != o.D_) return false;
    return std::all_of(members_.begin(), members_.end(), [&](const Integer& m) { return o.contains(m); });
}

// ---------------------------------------------------------------------------

std::optional<Quaternion> find_norm_class_element(const Order& ord, const Integer& m, int sign, long bound)
{
    if (bound <= 0) throw DomainError("find_norm_class_element: bound must be positive");
    if (sign != 1 && sign != -1) throw DomainError("find_norm_class_element: sign must be +1 or -1");
    if (m <= 0 || !is_squarefree(m)) throw DomainError("find_norm_class_element: m must be positive squarefree");
    if (m == 1 && sign == 1) return Quaternion::one(ord.algebra());
    const Integer D = reduced_discriminant(ord);
    // For m | D the primitive candidates lie in the two-sided ideal of norm m.
    Lattice space = mpz_divisible_p(D.get_mpz_t(), m.get_mpz_t()) ? two_sided_ideal(ord, m) : ord.lattice();
    auto basis = reduced_basis(space);
    return detail::first_with_norm(basis, bound, {Integer(sign * m), true}, [&](const Quaternion& x) {
        return ord.contains(x) && normalizes(ord, x);
    });
}

std::optional<Quaternion> unit_of_norm(const Order& ord, int sign, long bound)
{
    if (bound <= 0) throw DomainError("unit_of_norm: bound must be positive");
    if (sign != 1 && sign != -1) throw DomainError("unit_of_norm: sign must be +1 or -1");
    if (sign == 1) return Quaternion::one(ord.algebra());
    auto basis = reduced_basis(ord.lattice());
    return detail::first_with_norm(basis, bound, {Integer(-1), false}, [](const Quaternion&) { return true; });
}

bool is_twist(const PrincipalDatum& datum, const Quaternion& chi)
{
    if (chi.algebra() != datum.algebra()) throw DomainError("is_twist: element of another algebra");
    if (chi.is_zero() || trace(chi) != 0) return false;
    if (!datum.order().contains(chi)) return false;
    const Quaternion& mu = datum.mu();
    if (mu * chi != -(chi * mu)) return false;
    return normalizes(datum.order(), chi);
}

namespace {

// O cap {tr = 0} cap {tr(mu x) = 0}.
Lattice twist_lattice(const PrincipalDatum& datum)
{
    const auto& alg = datum.algebra();
    const Quaternion& mu = datum.mu();
    LinearForm tr_form{Rat(1), Rat(0), Rat(0), Rat(0)};
    LinearForm mu_form{Rat(0), alg.a() * mu[1], alg.b() * mu[2], -alg.a() * alg.b() * mu[3]};
    return intersect_kernel(datum.order().lattice(), {tr_form, mu_form});
}

std::array<Rat, 3> binary_form(const Quaternion& u, const Quaternion& v, int sign)
{
    Rat nu = norm(u), nv = norm(v);
    Rat cross = norm(u + v) - nu - nv;
    return {sign * nu, sign * cross, sign * nv};
}

// Basis (1, g) of a rank 2 lattice containing 1 primitively.
Quaternion second_generator(const Lattice& s)
{
    auto basis = s.basis();
    auto c = s.coordinates(Quaternion::one(s.algebra()));
    if (!c || basis.size() != 2) throw DomainError("lattice is not a rank 2 order");
    Integer g, x, y;
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), (*c)[0].get_mpz_t(), (*c)[1].get_mpz_t());
    if (g != 1) throw DomainError("1 is not primitive in the lattice");
    // det [[c0, c1], [-y, x]] = c0 x + c1 y = 1
    return Rat(-y) * basis[0] + Rat(x) * basis[1];
}

Lattice stable_lattice(const PrincipalDatum& datum)
{
    return intersect_span(datum.order().lattice(), {Quaternion::one(datum.algebra()), datum.mu()});
}

} // namespace

TwistSearch twist_witnesses(const PrincipalDatum& datum)
{
    Lattice m_lat = twist_lattice(datum);
    if (m_lat.rank() != 2) throw InvariantViolation("twist lattice does not have rank 2");
    auto basis = reduced_basis(m_lat);
    auto [A, B, C] = binary_form(basis[0], basis[1], -1);

    // A primitive twist generates a two-sided ideal, so -n(chi) is exactly
    // a divisor m > 1 of D; one exhaustive enumeration per m decides.
    TwistSearch out;
    for (const auto& m : positive_divisors(datum.D())) {
        if (m == 1) continue;
        Integer box = m * (abs(A.get_num()) + abs(C.get_num()) + 1);
        auto sols = enumerate_binary_form(A, B, C, Rat(m), box);
        if (!sols.complete) throw InvariantViolation("twist_witnesses: enumeration not exhaustive");
        for (const auto& [x, y] : sols.solutions) {
            Quaternion chi = Rat(x) * basis[0] + Rat(y) * basis[1];
            if (!is_twist(datum, chi)) continue;
            out.witnesses.push_back({chi, m});
            break;
        }
    }
    return out;
}

StableSearch stable_search(const PrincipalDatum& datum, long bound)
{
    if (bound <= 0) throw DomainError("stable_search: bound must be positive");
    Lattice s_lat = stable_lattice(datum);
    Quaternion g = second_generator(s_lat);
    const auto& one = Quaternion::one(datum.algebra());
    auto [A, B, C] = binary_form(one, g, 1);

    StableSearch out;
    std::vector<Integer> classes;
    for (const auto& m : positive_divisors(datum.D())) {
        if (m == 1) continue;
        bool hit = false;
        for (long k = 1; k <= bound && !hit; ++k) {
            Integer target = m * k * k;
            // Box large enough for the enumeration to be exhaustive.
            Integer box = target + abs(C.get_num()) + 1;
            auto sols = enumerate_binary_form(A, B, C, Rat(target), box);
            if (!sols.complete) throw InvariantViolation("stable_search: enumeration not exhaustive");
            for (const auto& [x, y] : sols.solutions) {
                if (gcd(x, y) != 1) continue;
                Quaternion s = Rat(x) * one + Rat(y) * g;
                if (!normalizes(datum.order(), s)) continue;
                out.generators.push_back(s);
                classes.push_back(m);
                hit = true;
                break;
            }
        }
    }
    out.group = ALSubgroup::generated(datum.D(), classes);
    return out;
}

ALSubgroup group_U0(const PrincipalDatum& datum, long bound) { return stable_search(datum, bound).group; }

ALSubgroup group_V0(const PrincipalDatum& datum)
{
    std::vector<Integer> classes;
    for (const auto& w : twist_witnesses(datum).witnesses) classes.push_back(w.m);
    return ALSubgroup::generated(datum.D(), classes);
}

ALSubgroup group_V0_restricted(const PrincipalDatum& datum, const Lattice& s_lattice)
{
    if (s_lattice.algebra() != datum.algebra()) throw DomainError("group_V0_restricted: lattice of another algebra");
    if (s_lattice.rank() != 2 || !s_lattice.contains(Quaternion::one(datum.algebra())))
        throw DomainError("group_V0_restricted: expected a rank 2 lattice containing 1");
    for (const auto& e : s_lattice.basis())
        if (!datum.order().contains(e)) throw DomainError("group_V0_restricted: lattice is not inside O");
    Lattice pure = pure_sublattice(s_lattice);
    if (pure.rank() != 1) throw DomainError("group_V0_restricted: lattice is not a quadratic order");
    Quaternion h = pure.basis().front();
    if (!is_twist(datum, h)) return ALSubgroup::trivial(datum.D());
    return ALSubgroup::generated(datum.D(), {squarefree_part(-norm(h))});
}

ALSubgroup group_W0(const PrincipalDatum& datum, long bound)
{
    std::vector<Integer> gens = group_U0(datum, std::min(bound, kDefaultStableBound)).members();
    ALSubgroup V0 = group_V0(datum);
    for (const auto& m : V0.members()) gens.push_back(m);
    return ALSubgroup::generated(datum.D(), gens);
}

int omega_odd(const PrincipalDatum& datum)
{
    Quaternion g = second_generator(stable_lattice(datum));
    Rat t = trace(g), n = norm(g);
    Integer disc = Rat(t * t - 4 * n).get_num();
    Integer d = squarefree_part(Rat(disc));
    QuadOrder field(d);
    auto f = rat_sqrt(make_rat(disc, field.field_discriminant()));
    if (!f || f->get_den() != 1) throw InvariantViolation("omega_odd: discriminant is not f^2 times a field discriminant");
    auto roots = roots_of_unity(QuadOrder(d, f->get_num()));
    return std::find(roots.begin(), roots.end(), 3) != roots.end() ? 3 : 1;
}

DegreeReport degree_forgetful_F(const PrincipalDatum& datum, long bound)
{
    if (bound <= 0) throw DomainError("degree_forgetful_F: bound must be positive");
    DegreeReport r;
    r.D = datum.D();
    r.search_bound = bound;
    r.omega_odd = omega_odd(datum);
    r.twisting_divisors = twisting_divisors(datum.algebra());

    TwistSearch twists = twist_witnesses(datum);
    std::vector<Integer> v_gens;
    for (const auto& w : twists.witnesses) {
        r.witnesses.push_back(w.chi);
        v_gens.push_back(w.m);
    }
    r.twisting = !twists.witnesses.empty();
    if (r.twisting && r.twisting_divisors.empty())
        throw InvariantViolation("degree_forgetful_F: twist found in a non-twisting algebra");
    Integer base = Integer(1) << r.omega_odd;
    r.degree_piF = r.twisting ? Integer(base * base) : base;
    r.V0 = ALSubgroup::generated(r.D, v_gens);
    r.U0 = group_U0(datum, std::min(bound, kDefaultStableBound));
    std::vector<Integer> w_gens = r.U0.members();
    w_gens.insert(w_gens.end(), v_gens.begin(), v_gens.end());
    r.W0 = ALSubgroup::generated(r.D, w_gens);
    r.complete = true;
    r.consistent = r.degree_piF == Integer(static_cast<unsigned long>(r.W0.order()));
    return r;
}

int degree_forgetful_hilbert(const PrincipalDatum& datum, const Lattice& s_lattice)
{
    return static_cast<int>(group_V0_restricted(datum, s_lattice).order());
}

} // namespace qf
