#ifndef QUATFORGET_QUATERNION_HPP
#define QUATFORGET_QUATERNION_HPP

#include "quatforget/arith.hpp"

#include <array>
#include <optional>
#include <ostream>
#include <vector>

namespace qf {

/// B = (a,b / Q): i^2 = a, j^2 = b, ij = -ji. Identity is by presentation;
/// use isomorphic() to compare algebras.
class QuaternionAlgebra {
public:
    QuaternionAlgebra(Rat a, Rat b);

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }

    bool operator==(const QuaternionAlgebra& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const QuaternionAlgebra& o) const { return !(*this == o); }

private:
    Rat a_;
    Rat b_;
};

/// x + y i + z j + t ij in a fixed algebra.
class Quaternion {
public:
    using Coords = std::array<Rat, 4>;

    Quaternion(const QuaternionAlgebra& alg, Coords c);

    static Quaternion scalar(const QuaternionAlgebra& alg, const Rat& x);
    static Quaternion zero(const QuaternionAlgebra& alg) { return scalar(alg, 0); }
    static Quaternion one(const QuaternionAlgebra& alg) { return scalar(alg, 1); }
    /// k-th element of the standard basis 1, i, j, ij.
    static Quaternion basis(const QuaternionAlgebra& alg, int k);

    const QuaternionAlgebra& algebra() const { return alg_; }
    const Coords& coords() const { return c_; }
    const Rat& operator[](std::size_t k) const { return c_[k]; }

    bool is_zero() const;
    bool is_scalar() const;

    Quaternion operator-() const;
    Quaternion& operator+=(const Quaternion& o);
    Quaternion& operator-=(const Quaternion& o);
    Quaternion& operator*=(const Rat& s);

    friend Quaternion operator+(Quaternion l, const Quaternion& r) { return l += r; }
    friend Quaternion operator-(Quaternion l, const Quaternion& r) { return l -= r; }
    friend Quaternion operator*(const Quaternion& l, const Quaternion& r);
    friend Quaternion operator*(Quaternion l, const Rat& s) { return l *= s; }
    friend Quaternion operator*(const Rat& s, Quaternion r) { return r *= s; }
    friend Quaternion operator/(Quaternion l, const Rat& s);

    bool operator==(const Quaternion& o) const { return alg_ == o.alg_ && c_ == o.c_; }
    bool operator!=(const Quaternion& o) const { return !(*this == o); }

private:
    QuaternionAlgebra alg_;
    Coords c_;
};

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

Quaternion mul(const Quaternion& p, const Quaternion& q);
Rat trace(const Quaternion& q);
Rat norm(const Quaternion& q);
Quaternion conj(const Quaternion& q);
Quaternion pure_part(const Quaternion& q);
Quaternion inverse(const Quaternion& q);
/// Reduced trace of p*q; the pairing used for duals.
Rat trace_product(const Quaternion& p, const Quaternion& q);

struct RamificationData {
    std::vector<Integer> ramified_primes; ///< ascending
    bool infinite_ramified = false;
    Integer discriminant = 1;

    std::size_t place_count() const { return ramified_primes.size() + (infinite_ramified ? 1 : 0); }
    bool operator==(const RamificationData& o) const
    {
        return ramified_primes == o.ramified_primes && infinite_ramified == o.infinite_ramified;
    }
};

RamificationData ramification(const QuaternionAlgebra& alg);
bool is_totally_indefinite(const QuaternionAlgebra& alg);
bool is_division(const QuaternionAlgebra& alg);
bool isomorphic(const QuaternionAlgebra& x, const QuaternionAlgebra& y);

/// Positive m | D with (-D, m / Q) isomorphic to alg. Requires a totally
/// indefinite division algebra.
std::vector<Integer> twisting_divisors(const QuaternionAlgebra& alg);

/// Deterministic search for a presentation (a,b) with squarefree integers
/// |a| <= |b| <= limit, ordered by |ab|, then |a|, then sign pattern
/// (-,+), (+,-), (+,+), whose ramification is exactly the primes of D and
/// which is indefinite.
std::optional<QuaternionAlgebra> presentation_for_discriminant(const Integer& D, long limit = 1000);

} // namespace qf

#endif
