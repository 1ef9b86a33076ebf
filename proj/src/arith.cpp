#include "quatforget/arith.hpp"

#include "quatforget/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>

namespace qf {

Rat make_rat(const Integer& num, const Integer& den)
{
    if (den == 0) throw DomainError("zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Integer& n) { return n.get_str(); }

std::string to_string(const Rat& x)
{
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Integer parse_integer(std::string_view text)
{
    std::string s(text);
    if (s.empty()) throw ParseError("empty integer");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw ParseError("malformed integer '" + s + "'");
    for (std::size_t i = start; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') throw ParseError("malformed integer '" + s + "'");
    if (s[0] == '+') s.erase(0, 1);
    return Integer(s, 10);
}

Rat parse_rat(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rat(parse_integer(text));
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return make_rat(num, den);
}

Integer isqrt(const Integer& n)
{
    if (n < 0) throw DomainError("isqrt of negative number");
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_square(const Integer& n)
{
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

std::optional<Rat> rat_sqrt(const Rat& x)
{
    if (x < 0) return std::nullopt;
    if (!is_square(x.get_num()) || !is_square(x.get_den())) return std::nullopt;
    return make_rat(isqrt(x.get_num()), isqrt(x.get_den()));
}

Integer floor_div(const Integer& a, const Integer& b)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer round_nearest(const Rat& x)
{
    // floor(x + 1/2)
    Rat shifted = x + Rat(1, 2);
    return floor_div(shifted.get_num(), shifted.get_den());
}

Rat rat_gcd(const std::vector<Rat>& xs)
{
    Integer g = 0;
    Integer l = 1;
    for (const Rat& x : xs) {
        if (x == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num().get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    }
    if (g == 0) return Rat(0);
    return make_rat(g, l);
}

bool fits_int64(const Integer& n) { return mpz_fits_slong_p(n.get_mpz_t()) != 0; }

// ---------------------------------------------------------------------------

Integer Factorization::value() const
{
    Integer v = sign;
    for (const auto& pp : factors) {
        Integer q;
        mpz_pow_ui(q.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent);
        v *= q;
    }
    return v;
}

bool is_prime(const Integer& n)
{
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

namespace {

// Brent's cycle finding with f(x) = x^2 + c mod n. Returns a nontrivial
// factor of composite n, or n itself when this seed fails.
Integer pollard_brent(const Integer& n, unsigned long c)
{
    Integer y = 2, x, ys, q = 1, g = 1, tmp;
    unsigned long r = 1;
    const unsigned long m = 128;
    auto step = [&](Integer& v) {
        v = v * v + c;
        mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    do {
        x = y;
        for (unsigned long i = 0; i < r; ++i) step(y);
        unsigned long k = 0;
        do {
            ys = y;
            for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                step(y);
                tmp = x - y;
                q = q * abs(tmp);
                mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            }
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            k += m;
        } while (k < r && g == 1);
        r *= 2;
    } while (g == 1 && r < (1ul << 30));
    if (g == n || g == 0) {
        do {
            step(ys);
            tmp = x - ys;
            tmp = abs(tmp);
            mpz_gcd(g.get_mpz_t(), tmp.get_mpz_t(), n.get_mpz_t());
        } while (g == 1);
    }
    return g;
}

void split_composite(const Integer& n, std::vector<Integer>& primes)
{
    if (n == 1) return;
    if (is_prime(n)) {
        primes.push_back(n);
        return;
    }
    if (is_square(n)) {
        Integer r = isqrt(n);
        split_composite(r, primes);
        split_composite(r, primes);
        return;
    }
    for (unsigned long c = 1;; ++c) {
        Integer d = pollard_brent(n, c);
        if (d != n && d != 1) {
            split_composite(d, primes);
            split_composite(n / d, primes);
            return;
        }
    }
}

} // namespace

Factorization factor(const Integer& n)
{
    if (n == 0) throw DomainError("factor: zero has no factorization");
    Integer m = abs(n);
    if (mpz_sizeinbase(m.get_mpz_t(), 2) > 128)
        throw DomainError("factor: input exceeds 2^128");

    Factorization out;
    out.sign = n < 0 ? -1 : 1;
    auto push = [&](const Integer& p) {
        if (!out.factors.empty() && out.factors.back().prime == p)
            ++out.factors.back().exponent;
        else
            out.factors.push_back({p, 1});
    };

    const unsigned long trial_limit = 1000000;
    for (unsigned long p = 2; p <= trial_limit; p += (p == 2 ? 1 : 2)) {
        if (Integer(p) * p > m) break;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            push(Integer(p));
            m /= p;
        }
    }
    if (m > 1) {
        std::vector<Integer> rest;
        split_composite(m, rest);
        std::sort(rest.begin(), rest.end());
        for (const auto& p : rest) push(p);
    }
    return out;
}

std::vector<Integer> prime_divisors(const Integer& n)
{
    std::vector<Integer> out;
    for (const auto& pp : factor(n).factors) out.push_back(pp.prime);
    return out;
}

unsigned valuation(const Integer& n, const Integer& p)
{
    if (n == 0) throw DomainError("valuation of zero");
    if (p < 2) throw DomainError("valuation base must be at least 2");
    Integer m = n;
    unsigned v = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
        m /= p;
        ++v;
    }
    return v;
}

bool is_squarefree(const Integer& n)
{
    if (n == 0) return false;
    for (const auto& pp : factor(n).factors)
        if (pp.exponent > 1) return false;
    return true;
}

std::vector<Integer> positive_divisors(const Integer& n)
{
    std::vector<Integer> divs{1};
    for (const auto& pp : factor(n).factors) {
        std::size_t count = divs.size();
        Integer pk = 1;
        for (unsigned e = 1; e <= pp.exponent; ++e) {
            pk *= pp.prime;
            for (std::size_t i = 0; i < count; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

Integer squarefree_part(const Rat& x)
{
    if (x == 0) throw DomainError("squarefree_part: zero input");
    // x and num*den differ by the square den^2.
    Factorization f = factor(x.get_num() * x.get_den());
    Integer s = f.sign;
    for (const auto& pp : f.factors)
        if (pp.exponent % 2 == 1) s *= pp.prime;
    return s;
}

// ---------------------------------------------------------------------------

int kronecker(const Integer& a, const Integer& n)
{
    if (n == 0) throw DomainError("kronecker: n must be nonzero");
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

Place Place::prime(const Integer& p)
{
    if (!is_prime(p)) throw DomainError("place: " + p.get_str() + " is not prime");
    Place v;
    v.p_ = p;
    return v;
}

std::string Place::to_string() const { return is_infinite() ? "inf" : p_.get_str(); }

namespace {

int residue_sign(const Integer& u, const Integer& p) { return kronecker(u, p); }

// (u-1)/2 mod 2 and (u^2-1)/8 mod 2 for odd u.
int eps2(const Integer& u)
{
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), u.get_mpz_t(), 4);
    return r == 3 ? 1 : 0;
}

int omega2(const Integer& u)
{
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), u.get_mpz_t(), 8);
    return (r == 3 || r == 5) ? 1 : 0;
}

} // namespace

int hilbert_symbol(const Rat& a, const Rat& b, const Place& v)
{
    if (a == 0 || b == 0) throw DomainError("hilbert_symbol: arguments must be nonzero");
    if (v.is_infinite()) return (a < 0 && b < 0) ? -1 : 1;

    const Integer& p = v.p();
    // Same square classes as a and b.
    Integer A = a.get_num() * a.get_den();
    Integer B = b.get_num() * b.get_den();
    unsigned alpha = valuation(A, p);
    unsigned beta = valuation(B, p);
    Integer pa, pb;
    mpz_pow_ui(pa.get_mpz_t(), p.get_mpz_t(), alpha);
    mpz_pow_ui(pb.get_mpz_t(), p.get_mpz_t(), beta);
    Integer u = A / pa;
    Integer w = B / pb;

    if (p == 2) {
        int e = eps2(u) * eps2(w) + int(alpha % 2) * omega2(w) + int(beta % 2) * omega2(u);
        return e % 2 == 0 ? 1 : -1;
    }
    int s = 1;
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), p.get_mpz_t(), 4);
    if ((alpha % 2 == 1) && (beta % 2 == 1) && r == 3) s = -s;
    if (beta % 2 == 1) s *= residue_sign(u, p);
    if (alpha % 2 == 1) s *= residue_sign(w, p);
    return s;
}

// ---------------------------------------------------------------------------

QuadOrder::QuadOrder(Integer d, Integer f) : d_(std::move(d)), f_(std::move(f))
{
    if (d_ == 0 || d_ == 1 || !is_squarefree(d_))
        throw DomainError("quadratic order: d must be squarefree and different from 0, 1");
    if (f_ < 1) throw DomainError("quadratic order: conductor must be positive");
}

bool QuadOrder::d_is_one_mod_four() const
{
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), d_.get_mpz_t(), 4);
    return r == 1;
}

Integer QuadOrder::field_discriminant() const { return d_is_one_mod_four() ? d_ : 4 * d_; }

Integer QuadOrder::discriminant() const { return f_ * f_ * field_discriminant(); }

Integer QuadOrder::generator_trace() const { return d_is_one_mod_four() ? f_ : Integer(0); }

Integer QuadOrder::generator_norm() const
{
    if (d_is_one_mod_four()) return Integer(f_ * f_ * (1 - d_) / 4);
    return Integer(-f_ * f_ * d_);
}

Integer QuadOrder::norm(const Integer& x, const Integer& y) const
{
    return x * x + generator_trace() * x * y + generator_norm() * y * y;
}

BinaryFormSolutions enumerate_binary_form(const Rat& A, const Rat& B, const Rat& C,
                                          const Rat& target, const Integer& bound)
{
    Rat delta = 4 * A * C - B * B;
    if (A <= 0 || delta <= 0) throw DomainError("enumerate_binary_form: form is not positive definite");
    if (bound < 0) throw DomainError("enumerate_binary_form: negative bound");

    BinaryFormSolutions out;
    if (target < 0) {
        out.complete = true;
        return out;
    }
    // A Q(x,y) = (A x + B y / 2)^2 + (delta/4) y^2, so |y| <= sqrt(4 A N / delta);
    // symmetrically |x| <= sqrt(4 C N / delta).
    Rat ybound2 = 4 * A * target / delta;
    Rat xbound2 = 4 * C * target / delta;
    Integer ymax = isqrt(floor_div(ybound2.get_num(), ybound2.get_den()));
    Integer xmax = isqrt(floor_div(xbound2.get_num(), xbound2.get_den()));
    out.complete = ymax <= bound && xmax <= bound;
    Integer ylim = std::min(ymax, bound);

    for (Integer ay = 0; ay <= ylim; ++ay) {
        for (int ys : {1, -1}) {
            if (ay == 0 && ys == -1) continue;
            Integer y = ys * ay;
            // A x^2 + (B y) x + (C y^2 - N) = 0
            Rat disc = B * B * y * y - 4 * A * (C * y * y - target);
            auto root = rat_sqrt(disc);
            if (!root) continue;
            std::vector<Integer> xs;
            for (int s : {1, -1}) {
                Rat x = (-B * y + s * *root) / (2 * A);
                if (x.get_den() != 1) continue;
                Integer xi = x.get_num();
                if (abs(xi) > bound) continue;
                if (std::find(xs.begin(), xs.end(), xi) == xs.end()) xs.push_back(xi);
            }
            std::sort(xs.begin(), xs.end(), [](const Integer& l, const Integer& r) {
                if (abs(l) != abs(r)) return abs(l) < abs(r);
                return l > r;
            });
            for (auto& x : xs) out.solutions.emplace_back(x, y);
        }
    }
    return out;
}

NormRepresentation represent_by_norm_form(const QuadOrder& q, const Integer& target,
                                          const Integer& bound)
{
    if (bound <= 0) throw DomainError("represent_by_norm_form: bound must be positive");
    if (target == 0) throw DomainError("represent_by_norm_form: target must be nonzero");

    NormRepresentation out;
    const Integer t = q.generator_trace();
    const Integer n = q.generator_norm();
    if (q.d() < 0) {
        auto sols = enumerate_binary_form(Rat(1), Rat(t), Rat(n), Rat(target), bound);
        if (!sols.solutions.empty())
            out.element = sols.solutions.front();
        else
            out.provably_none = sols.complete;
        return out;
    }
    // Indefinite: solve for x on each row y inside the box.
    for (Integer ay = 0; ay <= bound; ++ay) {
        for (int ys : {1, -1}) {
            if (ay == 0 && ys == -1) continue;
            Integer y = ys * ay;
            Integer disc = t * t * y * y - 4 * (n * y * y - target);
            if (!is_square(disc)) continue;
            Integer r = isqrt(disc);
            std::vector<Integer> xs;
            for (int s : {1, -1}) {
                Integer num = -t * y + s * r;
                if (!mpz_divisible_ui_p(num.get_mpz_t(), 2)) continue;
                Integer x = num / 2;
                if (abs(x) <= bound) xs.push_back(x);
            }
            std::sort(xs.begin(), xs.end(), [](const Integer& l, const Integer& rr) {
                if (abs(l) != abs(rr)) return abs(l) < abs(rr);
                return l > rr;
            });
            if (!xs.empty()) {
                out.element = std::make_pair(xs.front(), y);
                return out;
            }
        }
    }
    return out;
}

std::vector<int> roots_of_unity(const QuadOrder& q)
{
    if (q.d() == -1 && q.f() == 1) return {1, 2, 4};
    if (q.d() == -3 && q.f() == 1) return {1, 2, 3, 6};
    return {1, 2};
}

} // namespace qf
