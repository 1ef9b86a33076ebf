#ifndef QUATFORGET_ARITH_HPP
#define QUATFORGET_ARITH_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qf {

using Integer = mpz_class;
using Rat = mpq_class;

// ---------------------------------------------------------------------------
// Rational helpers
// ---------------------------------------------------------------------------

Rat make_rat(const Integer& num, const Integer& den);
std::string to_string(const Integer& n);
std::string to_string(const Rat& x);
/// Accepts "n", "-n" and "p/q".
Rat parse_rat(std::string_view text);
Integer parse_integer(std::string_view text);

Integer isqrt(const Integer& n);
bool is_square(const Integer& n);
std::optional<Rat> rat_sqrt(const Rat& x);
Integer floor_div(const Integer& a, const Integer& b);
Integer round_nearest(const Rat& x);
/// Positive generator of the fractional ideal generated by the inputs.
Rat rat_gcd(const std::vector<Rat>& xs);
bool fits_int64(const Integer& n);

// ---------------------------------------------------------------------------
// Factorization
// ---------------------------------------------------------------------------

struct PrimePower {
    Integer prime;
    unsigned exponent = 0;
};

struct Factorization {
    int sign = 1;
    std::vector<PrimePower> factors; ///< primes strictly increasing

    Integer value() const;
};

bool is_prime(const Integer& n);

/// Trial division to 10^6, then Brent's variant of Pollard rho with fixed
/// seeds. Requires 0 < |n| < 2^128.
Factorization factor(const Integer& n);

std::vector<Integer> prime_divisors(const Integer& n);
unsigned valuation(const Integer& n, const Integer& p);
bool is_squarefree(const Integer& n);
/// Positive divisors in increasing order.
std::vector<Integer> positive_divisors(const Integer& n);

/// Signed squarefree s with x = s * (rational square).
Integer squarefree_part(const Rat& x);

// ---------------------------------------------------------------------------
// Quadratic symbols
// ---------------------------------------------------------------------------

int kronecker(const Integer& a, const Integer& n);

/// A place of Q: a rational prime or the archimedean place.
class Place {
public:
    static Place infinity() { return Place{}; }
    static Place prime(const Integer& p);

    bool is_infinite() const { return p_ == 0; }
    const Integer& p() const { return p_; }
    std::string to_string() const;

    bool operator==(const Place& o) const { return p_ == o.p_; }

private:
    Place() = default;
    Integer p_ = 0;
};

/// (a,b)_v via the closed-form local formulas.
int hilbert_symbol(const Rat& a, const Rat& b, const Place& v);

// ---------------------------------------------------------------------------
// Quadratic orders
// ---------------------------------------------------------------------------

/// The order Z + f*O_K in K = Q(sqrt d), with basis 1, f*w where
/// w = (1 + sqrt d)/2 when d = 1 mod 4 and w = sqrt d otherwise.
class QuadOrder {
public:
    QuadOrder(Integer d, Integer f = 1);

    const Integer& d() const { return d_; }
    const Integer& f() const { return f_; }
    bool d_is_one_mod_four() const;

    /// Discriminant of the maximal order of K.
    Integer field_discriminant() const;
    /// f^2 times the field discriminant.
    Integer discriminant() const;

    /// Trace and norm of the generator f*w; the norm form of x + y*(f w)
    /// is x^2 + t x y + n y^2.
    Integer generator_trace() const;
    Integer generator_norm() const;
    Integer norm(const Integer& x, const Integer& y) const;

    bool operator==(const QuadOrder& o) const { return d_ == o.d_ && f_ == o.f_; }

private:
    Integer d_;
    Integer f_;
};

/// All integral solutions of A x^2 + B x y + C y^2 = target for a positive
/// definite form, in the order (|y|, sign y, |x|, sign x) with positive
/// signs first. `complete` is true when every solution lies inside the box
/// |x|, |y| <= bound, so the list is exhaustive.
struct BinaryFormSolutions {
    std::vector<std::pair<Integer, Integer>> solutions;
    bool complete = false;
};

BinaryFormSolutions enumerate_binary_form(const Rat& A, const Rat& B, const Rat& C,
                                          const Rat& target, const Integer& bound);

struct NormRepresentation {
    std::optional<std::pair<Integer, Integer>> element;
    /// Set when no element exists at all, not merely within the bound.
    bool provably_none = false;
};

NormRepresentation represent_by_norm_form(const QuadOrder& q, const Integer& target,
                                          const Integer& bound);

/// Orders of the roots of unity contained in q, ascending.
std::vector<int> roots_of_unity(const QuadOrder& q);

} // namespace qf

#endif
