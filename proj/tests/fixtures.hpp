#ifndef QUATFORGET_TESTS_FIXTURES_HPP
#define QUATFORGET_TESTS_FIXTURES_HPP

#include "quatforget/atkin_lehner.hpp"
#include "quatforget/errors.hpp"

#include <map>
#include <mutex>
#include <random>

namespace fixture {

using namespace qf;

inline const std::vector<long>& shipped_discriminants()
{
    static const std::vector<long> ds{6, 10, 14, 15, 21, 22, 26, 33, 34, 35};
    return ds;
}

// (D, d) pairs for the embedding criterion.
inline const std::vector<std::pair<long, long>>& eichler_suite()
{
    static const std::vector<std::pair<long, long>> pairs{
        {6, 2},   {6, 19},  {6, 5},   {6, 3},   {6, 7},   {10, 2},  {10, 3},  {10, 5},  {10, 7},  {10, 13},
        {14, 2},  {14, 3},  {14, 5},  {15, 2},  {15, 3},  {15, 5},  {21, 2},  {21, 3},  {22, 3},  {22, 5}};
    return pairs;
}

inline const PrincipalDatum& datum(long D)
{
    static std::mutex lock;
    static std::map<long, PrincipalDatum> cache;
    std::lock_guard<std::mutex> guard(lock);
    auto it = cache.find(D);
    if (it != cache.end()) return it->second;
    auto alg = presentation_for_discriminant(Integer(D));
    if (!alg) throw std::runtime_error("no presentation");
    Order ord = maximal_order(*alg);
    auto d = make_principal_datum(ord, LeftIdeal::unit(ord));
    if (!d) throw std::runtime_error("no mu");
    return cache.emplace(D, *d).first->second;
}

inline Rat random_rat(std::mt19937_64& rng, long num, long den)
{
    std::uniform_int_distribution<long> n(-num, num), d(1, den);
    return make_rat(Integer(n(rng)), Integer(d(rng)));
}

inline Rat random_nonzero_rat(std::mt19937_64& rng, long num, long den)
{
    Rat r = 0;
    while (r == 0) r = random_rat(rng, num, den);
    return r;
}

inline Quaternion random_quaternion(std::mt19937_64& rng, const QuaternionAlgebra& alg, long num = 9, long den = 4)
{
    return Quaternion(alg, {random_rat(rng, num, den), random_rat(rng, num, den), random_rat(rng, num, den),
                            random_rat(rng, num, den)});
}

// Random Z-combination of a lattice basis.
inline Quaternion random_element(std::mt19937_64& rng, const Lattice& lat, long bound = 5)
{
    std::uniform_int_distribution<long> c(-bound, bound);
    Quaternion x = Quaternion::zero(lat.algebra());
    for (const auto& e : lat.basis()) x += Rat(c(rng)) * e;
    return x;
}

} // namespace fixture

#endif
