#include "quatforget/quaternion.hpp"

#include "quatforget/errors.hpp"

#include <algorithm>
#include <set>

namespace qf {

QuaternionAlgebra::QuaternionAlgebra(Rat a, Rat b) : a_(std::move(a)), b_(std::move(b))
{
    a_.canonicalize();
    b_.canonicalize();
    if (a_ == 0 || b_ == 0) throw DomainError("quaternion algebra: a and b must be nonzero");
}

Quaternion::Quaternion(const QuaternionAlgebra& alg, Coords c) : alg_(alg), c_(std::move(c))
{
    for (auto& x : c_) x.canonicalize();
}

Quaternion Quaternion::scalar(const QuaternionAlgebra& alg, const Rat& x)
{
    return Quaternion(alg, {x, Rat(0), Rat(0), Rat(0)});
}

Quaternion Quaternion::basis(const QuaternionAlgebra& alg, int k)
{
    Coords c{Rat(0), Rat(0), Rat(0), Rat(0)};
    c.at(static_cast<std::size_t>(k)) = 1;
    return Quaternion(alg, c);
}

bool Quaternion::is_zero() const
{
    return std::all_of(c_.begin(), c_.end(), [](const Rat& x) { return x == 0; });
}

bool Quaternion::is_scalar() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

Quaternion Quaternion::operator-() const
{
    Quaternion r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

namespace {
void require_same(const QuaternionAlgebra& x, const QuaternionAlgebra& y)
{
    if (x != y) throw DomainError("quaternion arithmetic across different algebras");
}
} // namespace

Quaternion& Quaternion::operator+=(const Quaternion& o)
{
    require_same(alg_, o.alg_);
    for (std::size_t k = 0; k < 4; ++k) c_[k] += o.c_[k];
    return *this;
}

Quaternion& Quaternion::operator-=(const Quaternion& o)
{
    require_same(alg_, o.alg_);
    for (std::size_t k = 0; k < 4; ++k) c_[k] -= o.c_[k];
    return *this;
}

Quaternion& Quaternion::operator*=(const Rat& s)
{
    for (auto& x : c_) x *= s;
    return *this;
}

Quaternion operator*(const Quaternion& l, const Quaternion& r)
{
    require_same(l.alg_, r.alg_);
    const Rat& a = l.alg_.a();
    const Rat& b = l.alg_.b();
    const auto& [x1, y1, z1, t1] = l.c_;
    const auto& [x2, y2, z2, t2] = r.c_;
    Rat ab = a * b;
    return Quaternion(l.alg_, {
        Rat(x1 * x2 + a * y1 * y2 + b * z1 * z2 - ab * t1 * t2),
        Rat(x1 * y2 + y1 * x2 - b * z1 * t2 + b * t1 * z2),
        Rat(x1 * z2 + z1 * x2 + a * y1 * t2 - a * t1 * y2),
        Rat(x1 * t2 + t1 * x2 + y1 * z2 - z1 * y2),
    });
}

Quaternion operator/(Quaternion l, const Rat& s)
{
    if (s == 0) throw DomainError("quaternion divided by zero");
    for (auto& x : l.c_) x /= s;
    return l;
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q)
{
    os << "(" << to_string(q[0]) << ", " << to_string(q[1]) << ", " << to_string(q[2]) << ", "
       << to_string(q[3]) << ")";
    return os;
}

Quaternion mul(const Quaternion& p, const Quaternion& q) { return p * q; }

Rat trace(const Quaternion& q) { return 2 * q[0]; }

Rat norm(const Quaternion& q)
{
    const Rat& a = q.algebra().a();
    const Rat& b = q.algebra().b();
    return q[0] * q[0] - a * q[1] * q[1] - b * q[2] * q[2] + a * b * q[3] * q[3];
}

Quaternion conj(const Quaternion& q)
{
    return Quaternion(q.algebra(), {q[0], Rat(-q[1]), Rat(-q[2]), Rat(-q[3])});
}

Quaternion pure_part(const Quaternion& q)
{
    return Quaternion(q.algebra(), {Rat(0), q[1], q[2], q[3]});
}

Quaternion inverse(const Quaternion& q)
{
    Rat n = norm(q);
    if (n == 0) throw DomainError("inverse: element has zero norm");
    return conj(q) / n;
}

Rat trace_product(const Quaternion& p, const Quaternion& q)
{
    require_same(p.algebra(), q.algebra());
    const Rat& a = p.algebra().a();
    const Rat& b = p.algebra().b();
    return 2 * (p[0] * q[0] + a * p[1] * q[1] + b * p[2] * q[2] - a * b * p[3] * q[3]);
}

// ---------------------------------------------------------------------------

RamificationData ramification(const QuaternionAlgebra& alg)
{
    std::set<Integer> candidates{Integer(2)};
    for (const Rat* x : {&alg.a(), &alg.b()}) {
        for (const Integer* part : {&x->get_num(), &x->get_den()}) {
            if (abs(*part) == 1) continue;
            for (const auto& p : prime_divisors(*part)) candidates.insert(p);
        }
    }
    RamificationData out;
    out.infinite_ramified = hilbert_symbol(alg.a(), alg.b(), Place::infinity()) == -1;
    for (const auto& p : candidates) {
        if (hilbert_symbol(alg.a(), alg.b(), Place::prime(p)) == -1) {
            out.ramified_primes.push_back(p);
            out.discriminant *= p;
        }
    }
    if (out.place_count() % 2 != 0)
        throw InvariantViolation("ramification: odd number of ramified places");
    return out;
}

bool is_totally_indefinite(const QuaternionAlgebra& alg)
{
    return hilbert_symbol(alg.a(), alg.b(), Place::infinity()) == 1;
}

bool is_division(const QuaternionAlgebra& alg) { return ramification(alg).place_count() > 0; }

bool isomorphic(const QuaternionAlgebra& x, const QuaternionAlgebra& y)
{
    return ramification(x) == ramification(y);
}

std::vector<Integer> twisting_divisors(const QuaternionAlgebra& alg)
{
    RamificationData ram = ramification(alg);
    if (ram.infinite_ramified) throw DomainError("twisting_divisors: algebra is definite");
    if (ram.place_count() == 0) throw DomainError("twisting_divisors: algebra is split");

    const Integer& D = ram.discriminant;
    std::vector<Integer> out;
    for (const auto& m : positive_divisors(D)) {
        if (ramification(QuaternionAlgebra(Rat(-D), Rat(m))) == ram) out.push_back(m);
    }
    return out;
}

std::optional<QuaternionAlgebra> presentation_for_discriminant(const Integer& D, long limit)
{
    if (D < 1 || !is_squarefree(D)) throw DomainError("presentation: D must be positive squarefree");
    std::vector<Integer> primes = D == 1 ? std::vector<Integer>{} : prime_divisors(D);
    if (primes.size() % 2 != 0)
        throw DomainError("presentation: an indefinite algebra needs an even number of ramified primes");

    // Every ramified odd prime divides ab.
    Integer odd_part = D;
    if (mpz_divisible_ui_p(odd_part.get_mpz_t(), 2)) odd_part /= 2;
    const long odd = odd_part.get_si();
    const long max_product = limit * limit;
    for (long prod = odd; prod <= max_product; prod += odd) {
        for (long a_abs = 1; a_abs * a_abs <= prod; ++a_abs) {
            if (prod % a_abs != 0) continue;
            long b_abs = prod / a_abs;
            if (b_abs > limit) continue;
            if (!is_squarefree(Integer(a_abs)) || !is_squarefree(Integer(b_abs))) continue;
            for (auto [sa, sb] : {std::pair{-1, 1}, std::pair{1, -1}, std::pair{1, 1}}) {
                QuaternionAlgebra alg(Rat(sa * a_abs), Rat(sb * b_abs));
                RamificationData ram = ramification(alg);
                if (!ram.infinite_ramified && ram.ramified_primes == primes) return alg;
            }
        }
    }
    return std::nullopt;
}

} // namespace qf
