#include "fixtures.hpp"

#include <doctest.h>

#include <numeric>
#include <set>

using namespace qf;

namespace {

std::vector<long> two_prime_discriminants(long dmax)
{
    std::vector<long> out;
    for (long D = 6; D <= dmax; ++D) {
        auto f = factor(Integer(D));
        if (f.factors.size() == 2 && f.factors[0].exponent == 1 && f.factors[1].exponent == 1) out.push_back(D);
    }
    return out;
}

// g^-1 O g contained in O, checked on basis images.
bool conjugation_stable(const Order& ord, const Quaternion& g)
{
    Quaternion gi = inverse(g);
    for (const auto& e : ord.lattice().basis())
        if (!ord.contains(gi * e * g)) return false;
    return true;
}

bool divides(long m, long D) { return D % m == 0; }

// Pure chi in O, anticommuting with mu, n(chi) = -m with m | D, normalizing
// O; exhaustive over HNF coordinates in [-box, box].
std::set<long> brute_force_twist_classes(const PrincipalDatum& d, long box)
{
    std::set<long> found;
    auto basis = d.order().lattice().basis();
    long D = d.D().get_si();
    std::vector<long> c(4, -box);
    while (true) {
        Quaternion x = Quaternion::zero(d.algebra());
        for (int k = 0; k < 4; ++k) x += Rat(c[k]) * basis[k];
        if (trace(x) == 0 && norm(x) < 0 && d.mu() * x == -(x * d.mu())) {
            Rat n = -norm(x);
            if (n.get_den() == 1 && n.get_num().fits_slong_p()) {
                long m = n.get_num().get_si();
                if (divides(m, D) && m > 1 && conjugation_stable(d.order(), x)) found.insert(m);
            }
        }
        int k = 0;
        while (k < 4 && c[k] == box) c[k++] = -box;
        if (k == 4) break;
        ++c[k];
    }
    return found;
}

} // namespace

TEST_CASE("al_compose")
{
    auto c = [](long D, long m) { return ALClass::make(Integer(D), Integer(m)); };
    CHECK(al_compose(c(6, 2), c(6, 3)).m == 6);
    CHECK(al_compose(c(6, 6), c(6, 2)).m == 3);
    for (long m : {1L, 2L, 3L, 6L}) CHECK(al_compose(c(6, m), c(6, m)).m == 1);
    CHECK_THROWS_AS(al_compose(c(6, 2), c(10, 2)), DomainError);
    CHECK_THROWS_AS(c(6, 5), DomainError);
    CHECK_THROWS_AS(c(6, 0), DomainError);
}

TEST_CASE("divisor group is elementary abelian")
{
    for (long D : {6L, 210L}) {
        auto divs = positive_divisors(Integer(D));
        // isomorphism to subsets of the prime set under symmetric difference
        auto primes = prime_divisors(Integer(D));
        auto mask = [&](const Integer& m) {
            unsigned bits = 0;
            for (std::size_t i = 0; i < primes.size(); ++i)
                if (m % primes[i] == 0) bits |= 1u << i;
            return bits;
        };
        CHECK(divs.size() == (std::size_t(1) << primes.size()));
        for (const auto& x : divs)
            for (const auto& y : divs) {
                Integer z = al_compose(ALClass::make(Integer(D), x), ALClass::make(Integer(D), y)).m;
                CHECK(mask(z) == (mask(x) ^ mask(y)));
            }
        ALSubgroup all = ALSubgroup::generated(Integer(D), divs);
        CHECK(all.members() == divs);
    }
    ALSubgroup g = ALSubgroup::generated(Integer(210), {Integer(6), Integer(10)});
    CHECK(g.members() == std::vector<Integer>{1, 6, 10, 15});
    CHECK(g.contains(Integer(15)));
    CHECK_FALSE(g.contains(Integer(2)));
    CHECK(ALSubgroup::trivial(Integer(210)).is_subgroup_of(g));
    CHECK_FALSE(g.is_subgroup_of(ALSubgroup::generated(Integer(210), {Integer(6)})));
}

TEST_CASE("norm class representatives for D = 6")
{
    const auto& d = fixture::datum(6);
    const Order& ord = d.order();
    auto one = find_norm_class_element(ord, Integer(1), 1);
    REQUIRE(one);
    CHECK(*one == Quaternion::one(ord.algebra()));
    for (long m : {2L, 3L, 6L}) {
        auto w = find_norm_class_element(ord, Integer(m), 1);
        REQUIRE(w);
        CHECK(ord.contains(*w));
        CHECK(squarefree_part(norm(*w)) == m);
        CHECK(conjugation_stable(ord, *w));
    }
    CHECK_THROWS_AS(find_norm_class_element(ord, Integer(2), 1, 0), DomainError);
}

TEST_CASE("units of norm -1 make every class totally positive")
{
    for (long D : fixture::shipped_discriminants()) {
        const auto& d = fixture::datum(D);
        const Order& ord = d.order();
        auto plus = unit_of_norm(ord, 1);
        REQUIRE(plus);
        CHECK(*plus == Quaternion::one(ord.algebra()));
        auto u = unit_of_norm(ord, -1);
        REQUIRE(u);
        CHECK(norm(*u) == -1);
        CHECK(ord.contains(*u));
        CHECK(ord.contains(inverse(*u)));
        for (const auto& m : positive_divisors(d.D())) {
            auto w = find_norm_class_element(ord, m, -1);
            if (!w) continue;
            CHECK(squarefree_part(norm(*w)) == -m);
            Quaternion pos = *w * *u;
            CHECK(norm(pos) > 0);
            CHECK(squarefree_part(norm(pos)) == m);
            CHECK(conjugation_stable(ord, pos));
        }
    }
}

TEST_CASE("twist witnesses satisfy their invariants")
{
    for (long D : two_prime_discriminants(150)) {
        const auto& d = fixture::datum(D);
        auto search = twist_witnesses(d);
        auto divisors = twisting_divisors(d.algebra());
        for (const auto& w : search.witnesses) {
            CHECK(trace(w.chi) == 0);
            CHECK(w.chi * w.chi == Quaternion::one(d.algebra()) * (-norm(w.chi)));
            CHECK(squarefree_part(-norm(w.chi)) == w.m);
            CHECK(d.order().contains(w.chi));
            CHECK(conjugation_stable(d.order(), w.chi));
            CHECK(d.mu() * w.chi == -(w.chi * d.mu()));
            CHECK(is_twist(d, w.chi));
            // chi^2 = m and mu^2 = -D present the algebra as (-D, m)
            CHECK(std::find(divisors.begin(), divisors.end(), w.m) != divisors.end());
            CHECK(inverse(w.chi) * d.mu() * w.chi == -d.mu());
        }
        if (divisors.empty()) CHECK(search.witnesses.empty());
    }
}

TEST_CASE("twist search agrees with brute force")
{
    for (long D : {6L, 10L, 14L, 15L, 21L, 22L, 26L, 33L, 35L, 38L}) {
        const auto& d = fixture::datum(D);
        std::set<long> brute = brute_force_twist_classes(d, 3);
        std::set<long> found;
        for (const auto& w : twist_witnesses(d).witnesses) found.insert(w.m.get_si());
        // small boxes may miss a class, never invent one
        for (long m : brute) CHECK(found.count(m) == 1);
        for (long m : found) CHECK(divides(m, D));
    }
    CHECK_FALSE(brute_force_twist_classes(fixture::datum(6), 3).empty());
    CHECK_FALSE(brute_force_twist_classes(fixture::datum(10), 3).empty());
}

TEST_CASE("stable group is {1, D}")
{
    for (long D : two_prime_discriminants(150)) {
        const auto& d = fixture::datum(D);
        auto stable = stable_search(d);
        CHECK(stable.group.members() == std::vector<Integer>{1, D});
        for (const auto& s : stable.generators) {
            CHECK(d.order().contains(s));
            CHECK(s * d.mu() == d.mu() * s);
            CHECK(inverse(s) * d.mu() * s == d.mu());
            CHECK(conjugation_stable(d.order(), s));
        }
        CHECK(omega_odd(d) == 1);
    }
}

TEST_CASE("stable classes against exhaustion over Q(mu) cap O")
{
    for (long D : fixture::shipped_discriminants()) {
        const auto& d = fixture::datum(D);
        Lattice s_lat = intersect_span(d.order().lattice(), {Quaternion::one(d.algebra()), d.mu()});
        auto b = s_lat.basis();
        std::set<long> classes{1};
        for (long x = -12; x <= 12; ++x)
            for (long y = -12; y <= 12; ++y) {
                if (std::gcd(x, y) != 1) continue;
                Quaternion s = Rat(x) * b[0] + Rat(y) * b[1];
                Rat n = norm(s);
                Integer m = squarefree_part(n);
                if (m < 0 || D % m.get_si() != 0) continue;
                if (conjugation_stable(d.order(), s)) classes.insert(m.get_si());
            }
        std::set<long> found;
        ALSubgroup U0 = group_U0(d);
        for (const auto& m : U0.members()) found.insert(m.get_si());
        for (long m : classes) CHECK(found.count(m) == 1);
    }
}

TEST_CASE("W0 contains U0 and V0 and matches the degree")
{
    for (long D : two_prime_discriminants(150)) {
        const auto& d = fixture::datum(D);
        ALSubgroup U0 = group_U0(d), V0 = group_V0(d), W0 = group_W0(d);
        CHECK(U0.is_subgroup_of(W0));
        CHECK(V0.is_subgroup_of(W0));
        CHECK(U0.contains(d.D()));
        std::size_t order = W0.order();
        CHECK((order & (order - 1)) == 0);
        auto r = degree_forgetful_F(d);
        CHECK(r.consistent);
        CHECK(r.complete);
        CHECK(r.degree_piF == long(r.W0.order()));
        CHECK((r.degree_piF == 2 || r.degree_piF == 4));
        CHECK(r.twisting == !r.witnesses.empty());
        CHECK(r.degree_piF == (r.twisting ? 4 : 2));
        if (r.twisting_divisors.empty()) CHECK_FALSE(r.twisting);
    }
}

TEST_CASE("D = 6 and D = 10 have degree 4")
{
    for (long D : {6L, 10L}) {
        auto r = degree_forgetful_F(fixture::datum(D));
        CHECK(r.twisting);
        CHECK(r.degree_piF == 4);
        CHECK(r.V0.order() >= 2);
        CHECK(r.W0.order() == 4);
    }
}

TEST_CASE("restricted twisting group")
{
    const auto& d = fixture::datum(6);
    auto ws = twist_witnesses(d).witnesses;
    REQUIRE_FALSE(ws.empty());
    Lattice with_twist = intersect_span(d.order().lattice(), {Quaternion::one(d.algebra()), ws[0].chi});
    ALSubgroup restricted = group_V0_restricted(d, with_twist);
    CHECK(restricted.order() == 2);
    CHECK(restricted.is_subgroup_of(group_V0(d)));
    CHECK(degree_forgetful_hilbert(d, with_twist) == 2);
    Lattice commuting = intersect_span(d.order().lattice(), {Quaternion::one(d.algebra()), d.mu()});
    CHECK(group_V0_restricted(d, commuting).order() == 1);
    CHECK(degree_forgetful_hilbert(d, commuting) == 1);
}
