#include "fixtures.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace qf;

TEST_CASE("factor")
{
    auto f = factor(Integer(12));
    CHECK(f.sign == 1);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].prime == 2);
    CHECK(f.factors[0].exponent == 2);
    CHECK(f.factors[1].prime == 3);
    CHECK(f.factors[1].exponent == 1);

    auto g = factor(Integer(-6));
    CHECK(g.sign == -1);
    REQUIRE(g.factors.size() == 2);
    CHECK(g.factors[0].prime == 2);
    CHECK(g.factors[1].prime == 3);

    auto one = factor(Integer(1));
    CHECK(one.sign == 1);
    CHECK(one.factors.empty());

    CHECK_THROWS_AS(factor(Integer(0)), DomainError);
}

TEST_CASE("factor reconstructs products of large primes")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> dist(2, 1L << 40);
    for (int trial = 0; trial < 40; ++trial) {
        Integer n = Integer(dist(rng)) * Integer(dist(rng));
        auto f = factor(n);
        CHECK(f.value() == n);
        for (std::size_t k = 0; k < f.factors.size(); ++k) {
            CHECK(is_prime(f.factors[k].prime));
            if (k) CHECK(f.factors[k - 1].prime < f.factors[k].prime);
        }
    }
}

TEST_CASE("squarefree_part")
{
    CHECK(squarefree_part(Rat(12)) == 3);
    CHECK(squarefree_part(make_rat(Integer(-8), Integer(9))) == -2);
    CHECK(squarefree_part(Rat(1)) == 1);
    CHECK_THROWS_AS(squarefree_part(Rat(0)), DomainError);

    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> n(1, 500), s(-300, 300);
    for (int trial = 0; trial < 200; ++trial) {
        long sv = 0;
        while (sv == 0) sv = s(rng);
        Integer k(n(rng));
        CHECK(squarefree_part(Rat(k * k * sv)) == squarefree_part(Rat(sv)));
    }
}

TEST_CASE("kronecker")
{
    CHECK(kronecker(Integer(2), Integer(7)) == oracle::legendre(2, 7));
    CHECK(kronecker(Integer(2), Integer(7)) == 1);
    CHECK(kronecker(Integer(7), Integer(3)) == oracle::legendre(7, 3));
    CHECK(kronecker(Integer(7), Integer(3)) == 1);
    for (long a = -5; a <= 5; ++a) CHECK(kronecker(Integer(a), Integer(1)) == 1);
    CHECK_THROWS_AS(kronecker(Integer(3), Integer(0)), DomainError);

    for (long p : {3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 97L})
        for (long a = 0; a < p; ++a) CHECK(kronecker(Integer(a), Integer(p)) == oracle::legendre(a, p));
}

TEST_CASE("hilbert symbol examples")
{
    CHECK(hilbert_symbol(Rat(-1), Rat(-1), Place::infinity()) == -1);
    CHECK(hilbert_symbol(Rat(-1), Rat(-1), Place::prime(Integer(2))) == oracle::hilbert(-1, -1, 2));
    CHECK(hilbert_symbol(Rat(-1), Rat(-1), Place::prime(Integer(2))) == -1);
    for (long b : {-7L, -1L, 2L, 3L, 10L})
        for (long p : {2L, 3L, 5L, 7L}) CHECK(hilbert_symbol(Rat(1), Rat(b), Place::prime(Integer(p))) == 1);
    CHECK(hilbert_symbol(Rat(1), Rat(-5), Place::infinity()) == 1);
    CHECK_THROWS_AS(hilbert_symbol(Rat(0), Rat(3), Place::infinity()), DomainError);
}

TEST_CASE("hilbert symbol matches brute force on small integers")
{
    for (long p : {2L, 3L, 5L, 7L})
        for (long a = -12; a <= 12; ++a)
            for (long b = -12; b <= 12; ++b) {
                if (a == 0 || b == 0) continue;
                CAPTURE(a);
                CAPTURE(b);
                CAPTURE(p);
                CHECK(hilbert_symbol(Rat(a), Rat(b), Place::prime(Integer(p))) == oracle::hilbert(a, b, p));
            }
}

TEST_CASE("hilbert symbol properties")
{
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        Rat a = fixture::random_nonzero_rat(rng, 60, 12);
        Rat b = fixture::random_nonzero_rat(rng, 60, 12);
        std::vector<Integer> places{Integer(2)};
        for (const Rat* x : {&a, &b})
            for (const Integer* part : {&x->get_num(), &x->get_den()})
                if (abs(*part) > 1)
                    for (const auto& p : prime_divisors(abs(*part))) places.push_back(p);
        int product = hilbert_symbol(a, b, Place::infinity());
        std::sort(places.begin(), places.end());
        places.erase(std::unique(places.begin(), places.end()), places.end());
        for (const auto& p : places) {
            Place v = Place::prime(p);
            int s = hilbert_symbol(a, b, v);
            product *= s;
            CHECK(s == hilbert_symbol(b, a, v));
            Rat k = fixture::random_nonzero_rat(rng, 9, 5);
            CHECK(s == hilbert_symbol(a * k * k, b, v));
        }
        CHECK(product == 1);
    }
}

TEST_CASE("represent_by_norm_form")
{
    auto r6 = represent_by_norm_form(QuadOrder(Integer(-6)), Integer(6), Integer(10));
    REQUIRE(r6.element);
    CHECK(r6.element->first == 0);
    CHECK(r6.element->second == 1);

    auto r5 = represent_by_norm_form(QuadOrder(Integer(-6)), Integer(5), Integer(10));
    CHECK_FALSE(r5.element);
    CHECK(r5.provably_none);
    CHECK_FALSE(oracle::representable(-6, 5, 10));

    auto r2 = represent_by_norm_form(QuadOrder(Integer(-1)), Integer(2), Integer(10));
    REQUIRE(r2.element);
    CHECK(r2.element->first == 1);
    CHECK(r2.element->second == 1);

    CHECK_THROWS_AS(represent_by_norm_form(QuadOrder(Integer(-1)), Integer(2), Integer(0)), DomainError);
}

TEST_CASE("represent_by_norm_form agrees with exhaustion")
{
    for (long d : {-1L, -2L, -5L, -6L, 2L, 3L, 7L})
        for (long target = -30; target <= 30; ++target) {
            if (target == 0) continue;
            QuadOrder q{Integer(d)};
            auto r = represent_by_norm_form(q, Integer(target), Integer(12));
            CAPTURE(d);
            CAPTURE(target);
            if (r.element) CHECK(q.norm(r.element->first, r.element->second) == target);
            CHECK(r.element.has_value() == oracle::representable(d, target, 12));
            if (r.provably_none) CHECK_FALSE(oracle::representable(d, target, 40));
        }
}

TEST_CASE("roots_of_unity")
{
    CHECK(roots_of_unity(QuadOrder(Integer(-1))) == std::vector<int>{1, 2, 4});
    CHECK(roots_of_unity(QuadOrder(Integer(-6))) == std::vector<int>{1, 2});
    CHECK(roots_of_unity(QuadOrder(Integer(-3), Integer(2))) == std::vector<int>{1, 2});
    CHECK(roots_of_unity(QuadOrder(Integer(-3))) == std::vector<int>{1, 2, 3, 6});
    CHECK(roots_of_unity(QuadOrder(Integer(5))) == std::vector<int>{1, 2});
}

TEST_CASE("enumerate_binary_form is exhaustive inside its box")
{
    // 2x^2 + xy + 3y^2
    for (long n = 1; n <= 60; ++n) {
        auto sols = enumerate_binary_form(Rat(2), Rat(1), Rat(3), Rat(n), Integer(100));
        CHECK(sols.complete);
        std::size_t count = 0;
        for (long x = -20; x <= 20; ++x)
            for (long y = -20; y <= 20; ++y)
                if (2 * x * x + x * y + 3 * y * y == n) ++count;
        CHECK(sols.solutions.size() == count);
    }
    CHECK_THROWS_AS(enumerate_binary_form(Rat(1), Rat(0), Rat(-1), Rat(1), Integer(5)), DomainError);
}

TEST_CASE("rational helpers")
{
    CHECK(parse_rat("-8/12") == make_rat(Integer(-2), Integer(3)));
    CHECK(to_string(make_rat(Integer(6), Integer(-4))) == "-3/2");
    CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
    CHECK_THROWS_AS(parse_integer("12a"), ParseError);
    CHECK(isqrt(Integer(99)) == 9);
    CHECK(rat_sqrt(make_rat(Integer(9), Integer(4))) == make_rat(Integer(3), Integer(2)));
    CHECK_FALSE(rat_sqrt(Rat(2)));
    CHECK(positive_divisors(Integer(12)) == std::vector<Integer>{1, 2, 3, 4, 6, 12});
}
