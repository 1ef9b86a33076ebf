#ifndef QUATFORGET_ATKIN_LEHNER_HPP
#define QUATFORGET_ATKIN_LEHNER_HPP

#include "quatforget/datum.hpp"

#include <optional>
#include <vector>

namespace qf {

/// Atkin-Lehner class of O, indexed by a positive squarefree m | D.
struct ALClass {
    Integer D;
    Integer m;

    static ALClass make(const Integer& D, const Integer& m);
    bool operator==(const ALClass& o) const { return D == o.D && m == o.m; }
};

/// m1 m2 / gcd(m1, m2)^2.
ALClass al_compose(const ALClass& x, const ALClass& y);

/// A subgroup of the divisors of D under al_compose.
class ALSubgroup {
public:
    ALSubgroup() : D_(1), members_{Integer(1)} {}
    static ALSubgroup trivial(const Integer& D);
    /// Closure of {1} and gens.
    static ALSubgroup generated(const Integer& D, const std::vector<Integer>& gens);

    const Integer& D() const { return D_; }
    /// Sorted ascending, always starting with 1.
    const std::vector<Integer>& members() const { return members_; }
    std::size_t order() const { return members_.size(); }
    bool contains(const Integer& m) const;
    bool is_subgroup_of(const ALSubgroup& o) const;

    bool operator==(const ALSubgroup& o) const { return D_ == o.D_ && members_ == o.members_; }

private:
    ALSubgroup(Integer D, std::vector<Integer> members) : D_(std::move(D)), members_(std::move(members)) {}
    Integer D_;
    std::vector<Integer> members_;
};

/// omega in O normalizing O with n(omega) = sign * m * k^2, first hit in
/// shell order over an LLL basis of O.
std::optional<Quaternion> find_norm_class_element(const Order& ord, const Integer& m, int sign,
                                                  long bound = kDefaultSearchBound);
/// u in O with n(u) = sign.
std::optional<Quaternion> unit_of_norm(const Order& ord, int sign, long bound = kDefaultSearchBound);

/// Pure chi in O normalizing O and anticommuting with mu.
struct TwistWitness {
    Quaternion chi;
    /// Squarefree part of -n(chi).
    Integer m;
};

bool is_twist(const PrincipalDatum& datum, const Quaternion& chi);

struct TwistSearch {
    /// At most one per class m, ascending in m.
    std::vector<TwistWitness> witnesses;
};

/// All twist classes of (O, mu), one witness each. The candidates form the
/// rank 2 lattice O cap {tr = 0, tr(mu x) = 0}, on which -n is positive
/// definite, so the search is exhaustive.
TwistSearch twist_witnesses(const PrincipalDatum& datum);

inline constexpr long kDefaultStableBound = 20;

struct StableSearch {
    ALSubgroup group;
    /// Primitive s in Q(mu) cap O normalizing O, one per class found.
    std::vector<Quaternion> generators;
};

/// Classes of primitive s in S = Q(mu) cap O with n(s) = m k^2, m | D,
/// k <= bound, that normalize O.
StableSearch stable_search(const PrincipalDatum& datum, long bound = kDefaultStableBound);
ALSubgroup group_U0(const PrincipalDatum& datum, long bound = kDefaultStableBound);
ALSubgroup group_V0(const PrincipalDatum& datum);
/// Twisting classes realized inside the rank 2 lattice s_lattice.
ALSubgroup group_V0_restricted(const PrincipalDatum& datum, const Lattice& s_lattice);
ALSubgroup group_W0(const PrincipalDatum& datum, long bound = kDefaultSearchBound);

/// Roots of unity of odd order in Q(mu) cap O.
int omega_odd(const PrincipalDatum& datum);

struct DegreeReport {
    Integer D;
    int omega_odd = 1;
    /// (O, mu) admits a twist.
    bool twisting = false;
    /// m | D with B = (-D, m); nonempty iff B is twisting.
    std::vector<Integer> twisting_divisors;
    Integer degree_piF;
    ALSubgroup W0;
    ALSubgroup U0;
    ALSubgroup V0;
    std::vector<Quaternion> witnesses;
    long search_bound = kDefaultSearchBound;
    /// The twist and stable searches were exhaustive.
    bool complete = false;
    bool consistent = false;
};

DegreeReport degree_forgetful_F(const PrincipalDatum& datum, long bound = kDefaultSearchBound);

/// |V0(s_lattice)|: 2 when the lattice contains a twist, else 1.
int degree_forgetful_hilbert(const PrincipalDatum& datum, const Lattice& s_lattice);

} // namespace qf

#endif
