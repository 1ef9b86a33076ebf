#include "fixtures.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace qf;

namespace {

Quaternion q(const QuaternionAlgebra& alg, long x, long y, long z, long t)
{
    return Quaternion(alg, {Rat(x), Rat(y), Rat(z), Rat(t)});
}

// Ramified primes and infinity from the brute-force symbol.
std::pair<std::vector<Integer>, bool> oracle_ramification(long a, long b)
{
    std::vector<Integer> primes;
    for (long p = 2; p <= std::max(std::abs(a), std::abs(b)) + 2; ++p) {
        if (!is_prime(Integer(p))) continue;
        if (oracle::hilbert(a, b, p) == -1) primes.emplace_back(p);
    }
    return {primes, a < 0 && b < 0};
}

} // namespace

TEST_CASE("basis products")
{
    QuaternionAlgebra alg(Rat(-1), Rat(3));
    auto i = Quaternion::basis(alg, 1), j = Quaternion::basis(alg, 2), k = Quaternion::basis(alg, 3);
    CHECK(i * j == k);
    CHECK(j * i == -k);
    CHECK(i * i == Quaternion::scalar(alg, Rat(-1)));
    CHECK(j * j == Quaternion::scalar(alg, Rat(3)));
    CHECK(norm(k) == -3);

    QuaternionAlgebra h(Rat(-1), Rat(-1));
    auto prod = q(h, 1, 1, 1, 1) * q(h, 1, -1, -1, -1);
    CHECK(prod == q(h, 4, 0, 0, 0));
    CHECK(norm(q(h, 1, 1, 1, 1)) == 4);
    CHECK(trace(q(h, 1, 1, 1, 1)) == 2);

    QuaternionAlgebra other(Rat(2), Rat(5));
    CHECK_THROWS_AS(i * Quaternion::basis(other, 1), DomainError);
    CHECK_THROWS_AS(QuaternionAlgebra(Rat(0), Rat(1)), DomainError);
}

TEST_CASE("product, trace and norm agree with the matrix model")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        QuaternionAlgebra alg(fixture::random_nonzero_rat(rng, 30, 4), fixture::random_nonzero_rat(rng, 30, 4));
        const Rat& s = alg.a();
        auto p = fixture::random_quaternion(rng, alg), r = fixture::random_quaternion(rng, alg);
        auto lhs = oracle::to_matrix(p * r);
        auto rhs = oracle::matmul(oracle::to_matrix(p), oracle::to_matrix(r), s);
        CHECK(oracle::same(lhs, rhs));
        auto d = oracle::det(oracle::to_matrix(p), s);
        CHECK(d.v == 0);
        CHECK(d.u == norm(p));
        auto m = oracle::to_matrix(p);
        CHECK(m[0][0].u + m[1][1].u == trace(p));
    }
}

TEST_CASE("algebraic identities")
{
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        QuaternionAlgebra alg(fixture::random_nonzero_rat(rng, 20, 3), fixture::random_nonzero_rat(rng, 20, 3));
        auto p = fixture::random_quaternion(rng, alg), r = fixture::random_quaternion(rng, alg);
        CHECK(norm(p * r) == norm(p) * norm(r));
        CHECK(trace(p * r) == trace(r * p));
        CHECK(conj(conj(p)) == p);
        CHECK(p * conj(p) == Quaternion::scalar(alg, norm(p)));
        CHECK(p * p - trace(p) * p + Quaternion::scalar(alg, norm(p)) == Quaternion::zero(alg));
        CHECK(trace(pure_part(p)) == 0);
        CHECK(trace_product(p, r) == trace(p * r));
        if (norm(p) != 0) CHECK(p * inverse(p) == Quaternion::one(alg));
    }
}

TEST_CASE("ramification examples")
{
    auto split = ramification(QuaternionAlgebra(Rat(1), Rat(1)));
    CHECK(split.ramified_primes.empty());
    CHECK_FALSE(split.infinite_ramified);
    CHECK(split.discriminant == 1);

    auto hamilton = ramification(QuaternionAlgebra(Rat(-1), Rat(-1)));
    auto [hp, hinf] = oracle_ramification(-1, -1);
    CHECK(hamilton.ramified_primes == hp);
    CHECK(hamilton.infinite_ramified == hinf);
    CHECK(hamilton.discriminant == 2);

    auto r = ramification(QuaternionAlgebra(Rat(-1), Rat(3)));
    auto [rp, rinf] = oracle_ramification(-1, 3);
    CHECK(r.ramified_primes == rp);
    CHECK(r.infinite_ramified == rinf);
    CHECK_FALSE(r.infinite_ramified);
    CHECK(r.place_count() % 2 == 0);
    for (const auto& p : r.ramified_primes) CHECK((p == 2 || p == 3));
}

TEST_CASE("ramification sets are even and match brute force")
{
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<long> dist(-40, 40);
    for (int trial = 0; trial < 200; ++trial) {
        long a = 0, b = 0;
        while (a == 0) a = dist(rng);
        while (b == 0) b = dist(rng);
        auto ram = ramification(QuaternionAlgebra(Rat(a), Rat(b)));
        CHECK(ram.place_count() % 2 == 0);
        auto [primes, inf] = oracle_ramification(a, b);
        CHECK(ram.ramified_primes == primes);
        CHECK(ram.infinite_ramified == inf);
    }
}

TEST_CASE("indefinite and division predicates")
{
    QuaternionAlgebra split(Rat(1), Rat(1)), hamilton(Rat(-1), Rat(-1)), six(Rat(-1), Rat(3));
    CHECK(is_totally_indefinite(split));
    CHECK_FALSE(is_division(split));
    CHECK_FALSE(is_totally_indefinite(hamilton));
    CHECK(is_totally_indefinite(six));
    CHECK(is_division(six));
}

TEST_CASE("isomorphism")
{
    std::mt19937_64 rng(31);
    CHECK_FALSE(isomorphic(QuaternionAlgebra(Rat(-1), Rat(-1)), QuaternionAlgebra(Rat(-1), Rat(3))));
    std::vector<QuaternionAlgebra> algs;
    for (int trial = 0; trial < 40; ++trial) {
        Rat a = fixture::random_nonzero_rat(rng, 15, 3), b = fixture::random_nonzero_rat(rng, 15, 3);
        Rat k = fixture::random_nonzero_rat(rng, 7, 5), l = fixture::random_nonzero_rat(rng, 7, 5);
        QuaternionAlgebra x(a, b);
        CHECK(isomorphic(x, QuaternionAlgebra(b, a)));
        CHECK(isomorphic(x, QuaternionAlgebra(a * k * k, b * l * l)));
        CHECK(isomorphic(x, x));
        algs.push_back(x);
    }
    for (const auto& x : algs)
        for (const auto& y : algs) {
            CHECK(isomorphic(x, y) == isomorphic(y, x));
            for (const auto& z : algs)
                if (isomorphic(x, y) && isomorphic(y, z)) CHECK(isomorphic(x, z));
        }
}

TEST_CASE("twisting divisors")
{
    for (long D : {6L, 10L}) {
        auto alg = presentation_for_discriminant(Integer(D));
        REQUIRE(alg);
        auto divs = twisting_divisors(*alg);
        CHECK_FALSE(divs.empty());
    }
    for (long D = 6; D <= 150; ++D) {
        if (!is_squarefree(Integer(D)) || factor(Integer(D)).factors.size() != 2) continue;
        auto alg = presentation_for_discriminant(Integer(D));
        REQUIRE(alg);
        CHECK(ramification(*alg).discriminant == D);
        CHECK(is_totally_indefinite(*alg));
        for (const auto& m : twisting_divisors(*alg)) {
            CHECK(m != 1);
            CHECK(D % m.get_si() == 0);
            auto [primes, inf] = oracle_ramification(-D, m.get_si());
            CHECK(primes == ramification(*alg).ramified_primes);
            CHECK_FALSE(inf);
        }
    }
    CHECK_THROWS_AS(twisting_divisors(QuaternionAlgebra(Rat(1), Rat(1))), DomainError);
    CHECK_THROWS_AS(twisting_divisors(QuaternionAlgebra(Rat(-1), Rat(-1))), DomainError);
}
