#include "search.hpp"

#include "quatforget/errors.hpp"

#include <cmath>

namespace qf::detail {

namespace {

// Coordinate values in the order 0, 1, -1, 2, -2, ...
long ranked(long r) { return (r % 2 == 1) ? (r + 1) / 2 : -(r / 2); }

bool visit_shell(std::vector<long>& c, std::size_t pos, long h, bool hit,
                 const std::function<bool(const std::vector<long>&)>& visit)
{
    const std::size_t n = c.size();
    if (pos == n) return hit && visit(c);
    for (long r = 0; r <= 2 * h; ++r) {
        long v = ranked(r);
        bool at_h = (v == h || v == -h);
        if (pos + 1 == n && !hit && !at_h) continue;
        c[pos] = v;
        if (visit_shell(c, pos + 1, h, hit || at_h, visit)) return true;
    }
    return false;
}

bool is_square128(__int128 v)
{
    if (v < 0) return false;
    auto r = static_cast<__int128>(std::sqrt(static_cast<long double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r * r == v;
}

__int128 to_int128(const Integer& x)
{
    Integer hi = x >> 62;
    Integer lo = x - (hi << 62);
    return (static_cast<__int128>(hi.get_si()) << 62) + lo.get_si();
}

} // namespace

Integer from_int128(__int128 s)
{
    bool neg = s < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(s) : static_cast<unsigned __int128>(s);
    Integer out = Integer(static_cast<unsigned long>(u >> 64));
    out <<= 64;
    out += Integer(static_cast<unsigned long>(u & ~0UL));
    return neg ? Integer(-out) : out;
}

NormForm::NormForm(std::vector<Quaternion> basis, long bound) : basis_(std::move(basis))
{
    const std::size_t n = basis_.size();
    std::vector<std::vector<Rat>> q(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        q[i][i] = norm(basis_[i]);
        for (std::size_t j = i + 1; j < n; ++j)
            q[i][j] = norm(basis_[i] + basis_[j]) - norm(basis_[i]) - norm(basis_[j]);
    }
    den_ = 1;
    for (const auto& row : q)
        for (const auto& x : row) mpz_lcm(den_.get_mpz_t(), den_.get_mpz_t(), x.get_den().get_mpz_t());
    q_.assign(n, std::vector<Integer>(n, Integer(0)));
    Integer maxabs = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            q_[i][j] = Rat(q[i][j] * den_).get_num();
            maxabs = std::max(maxabs, Integer(abs(q_[i][j])));
        }
    // n^2 terms each bounded by maxabs * bound^2.
    Integer worst = maxabs * Integer(bound) * Integer(bound) * Integer(n * n + 1);
    fast_ = worst < (Integer(1) << 120);
    if (fast_) {
        q128_.assign(n, std::vector<__int128>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) q128_[i][j] = to_int128(q_[i][j]);
    }
}

__int128 NormForm::scaled_norm128(const std::vector<long>& c) const
{
    const std::size_t n = basis_.size();
    __int128 s = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (c[i] == 0) continue;
        __int128 row = 0;
        for (std::size_t j = i; j < n; ++j) row += q128_[i][j] * c[j];
        s += row * c[i];
    }
    return s;
}

Integer NormForm::scaled_norm(const std::vector<long>& c) const
{
    const std::size_t n = basis_.size();
    if (fast_) return from_int128(scaled_norm128(c));
    Integer s = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) s += q_[i][j] * c[i] * c[j];
    return s;
}

Quaternion NormForm::element(const std::vector<long>& c) const
{
    Quaternion x = Quaternion::zero(basis_.front().algebra());
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (c[i] != 0) x += Rat(c[i]) * basis_[i];
    return x;
}

void enumerate_shells(std::size_t n, long bound, const std::function<bool(const std::vector<long>&)>& visit)
{
    if (n == 0) return;
    std::vector<long> c(n, 0);
    for (long h = 1; h <= bound; ++h)
        if (visit_shell(c, 0, h, false, visit)) return;
}

std::optional<Quaternion> first_with_norm(const std::vector<Quaternion>& basis, long bound, const NormTarget& target,
                                          const std::function<bool(const Quaternion&)>& confirm)
{
    if (bound <= 0) throw DomainError("search bound must be positive");
    if (basis.empty() || target.value == 0) return std::nullopt;
    NormForm form(basis, bound);
    const Integer scaled_target = target.value * form.denominator();
    const bool fast = form.fast() && Integer(abs(scaled_target)) < (Integer(1) << 120);
    const __int128 t128 = fast ? to_int128(scaled_target) : 0;

    auto accept = [&](const std::vector<long>& c) {
        if (fast) {
            __int128 v = form.scaled_norm128(c);
            if (!target.up_to_squares) return v == t128;
            if (v == 0 || (v < 0) != (t128 < 0) || v % t128 != 0) return false;
            return is_square128(v / t128);
        }
        Integer v = form.scaled_norm(c);
        if (!target.up_to_squares) return v == scaled_target;
        if (v == 0 || sgn(v) != sgn(scaled_target) || !mpz_divisible_p(v.get_mpz_t(), scaled_target.get_mpz_t()))
            return false;
        return is_square(Integer(v / scaled_target));
    };

    std::optional<Quaternion> found;
    enumerate_shells(form.rank(), bound, [&](const std::vector<long>& c) {
        if (!accept(c)) return false;
        Quaternion x = form.element(c);
        if (!confirm(x)) return false;
        found = std::move(x);
        return true;
    });
    return found;
}

} // namespace qf::detail
