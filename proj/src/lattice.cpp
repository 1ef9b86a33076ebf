#include "quatforget/lattice.hpp"

#include "quatforget/errors.hpp"

#include <algorithm>
#include <functional>

namespace qf {

namespace {

using Matrix = std::vector<std::vector<Integer>>;

// Unimodular row reduction to echelon form on the first `pivot_cols`
// columns, with entries above each pivot reduced into [0, pivot). Returns
// the number of pivot rows; remaining rows are zero on the pivot columns.
std::size_t echelon(Matrix& m, std::size_t pivot_cols)
{
    std::size_t row = 0;
    const std::size_t n = m.size();
    for (std::size_t col = 0; col < pivot_cols && row < n; ++col) {
        while (true) {
            // smallest nonzero |entry| at or below `row`
            std::size_t best = n;
            for (std::size_t r = row; r < n; ++r) {
                if (m[r][col] == 0) continue;
                if (best == n || abs(m[r][col]) < abs(m[best][col])) best = r;
            }
            if (best == n) break;
            std::swap(m[row], m[best]);
            bool done = true;
            for (std::size_t r = row + 1; r < n; ++r) {
                if (m[r][col] == 0) continue;
                Integer q = floor_div(m[r][col], m[row][col]);
                for (std::size_t c = 0; c < m[r].size(); ++c) m[r][c] -= q * m[row][c];
                if (m[r][col] != 0) done = false;
            }
            if (done) break;
        }
        if (m[row][col] == 0) continue;
        if (m[row][col] < 0)
            for (auto& x : m[row]) x = -x;
        for (std::size_t r = 0; r < row; ++r) {
            Integer q = floor_div(m[r][col], m[row][col]);
            if (q != 0)
                for (std::size_t c = 0; c < m[r].size(); ++c) m[r][c] -= q * m[row][c];
        }
        ++row;
    }
    return row;
}

Integer common_denominator(const std::vector<Quaternion>& gens)
{
    Integer l = 1;
    for (const auto& g : gens)
        for (const auto& x : g.coords()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    return l;
}

const Integer& two_pow_64()
{
    static const Integer v = Integer(1) << 64;
    return v;
}

} // namespace

Lattice::Lattice(QuaternionAlgebra alg, Integer den, std::vector<IntRow> rows)
    : alg_(std::move(alg)), den_(std::move(den)), rows_(std::move(rows))
{
}

Lattice Lattice::from_rows(const QuaternionAlgebra& alg, const Integer& den, std::vector<IntRow> rows)
{
    if (den <= 0) throw DomainError("lattice: denominator must be positive");
    Matrix m;
    m.reserve(rows.size());
    for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
    std::size_t rank = echelon(m, 4);
    m.resize(rank);

    Integer g = den;
    for (const auto& r : m)
        for (const auto& x : r) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    std::vector<IntRow> out;
    out.reserve(rank);
    for (auto& r : m) {
        IntRow row;
        for (std::size_t k = 0; k < 4; ++k) row[k] = r[k] / g;
        out.push_back(std::move(row));
    }
    Integer d = den / g;
    if (d >= two_pow_64()) throw OverflowError("lattice: denominator exceeds 2^64");
    return Lattice(alg, d, std::move(out));
}

Lattice Lattice::from_generators(const QuaternionAlgebra& alg, const std::vector<Quaternion>& gens)
{
    Integer den = common_denominator(gens);
    std::vector<IntRow> rows;
    rows.reserve(gens.size());
    for (const auto& g : gens) {
        if (g.algebra() != alg) throw DomainError("lattice: generator from a different algebra");
        IntRow r;
        for (std::size_t k = 0; k < 4; ++k) {
            Rat v = g[k] * den;
            r[k] = v.get_num();
        }
        rows.push_back(std::move(r));
    }
    return from_rows(alg, den, std::move(rows));
}

std::vector<Quaternion> Lattice::basis() const
{
    std::vector<Quaternion> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_)
        out.emplace_back(alg_, Quaternion::Coords{make_rat(r[0], den_), make_rat(r[1], den_),
                                                  make_rat(r[2], den_), make_rat(r[3], den_)});
    return out;
}

std::optional<std::vector<Integer>> Lattice::coordinates(const Quaternion& q) const
{
    if (q.algebra() != alg_) throw DomainError("lattice: element from a different algebra");
    IntRow target;
    for (std::size_t k = 0; k < 4; ++k) {
        Rat v = q[k] * den_;
        if (v.get_den() != 1) return std::nullopt;
        target[k] = v.get_num();
    }
    std::vector<Integer> c(rows_.size());
    IntRow rest = target;
    std::size_t col = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        while (rows_[i][col] == 0) {
            if (rest[col] != 0) return std::nullopt;
            ++col;
        }
        if (!mpz_divisible_p(rest[col].get_mpz_t(), rows_[i][col].get_mpz_t())) return std::nullopt;
        c[i] = rest[col] / rows_[i][col];
        for (std::size_t k = 0; k < 4; ++k) rest[k] -= c[i] * rows_[i][k];
        ++col;
    }
    for (const auto& x : rest)
        if (x != 0) return std::nullopt;
    return c;
}

bool Lattice::contains(const Quaternion& q) const { return coordinates(q).has_value(); }

Rat Lattice::covolume() const
{
    if (rank() != 4) throw DomainError("covolume: lattice is not of full rank");
    Integer prod = 1;
    for (std::size_t i = 0; i < 4; ++i) prod *= rows_[i][i];
    Integer d4 = den_ * den_ * den_ * den_;
    return make_rat(prod, d4);
}

Lattice Lattice::scaled(const Rat& c) const
{
    if (c == 0) throw DomainError("lattice: scaling by zero");
    std::vector<IntRow> rows = rows_;
    for (auto& r : rows)
        for (auto& x : r) x *= c.get_num();
    return from_rows(alg_, den_ * c.get_den(), std::move(rows));
}

// ---------------------------------------------------------------------------

Lattice lattice_from_generators(const QuaternionAlgebra& alg, const std::vector<Quaternion>& gens)
{
    Lattice l = Lattice::from_generators(alg, gens);
    if (l.rank() != 4) throw DomainError("lattice_from_generators: generators do not span B");
    return l;
}

Integer lattice_index(const Lattice& outer, const Lattice& inner)
{
    Rat r = inner.covolume() / outer.covolume();
    if (r.get_den() != 1) throw DomainError("lattice_index: not a sublattice");
    return r.get_num();
}

Lattice lattice_sum(const Lattice& x, const Lattice& y)
{
    std::vector<Quaternion> gens = x.basis();
    for (auto& q : y.basis()) gens.push_back(std::move(q));
    return Lattice::from_generators(x.algebra(), gens);
}

Lattice lattice_intersection(const Lattice& x, const Lattice& y)
{
    return codifferent(lattice_sum(codifferent(x), codifferent(y)));
}

Lattice ideal_product(const Lattice& x, const Lattice& y)
{
    if (x.algebra() != y.algebra()) throw DomainError("ideal_product: different algebras");
    std::vector<Quaternion> gens;
    auto xb = x.basis();
    auto yb = y.basis();
    for (const auto& p : xb)
        for (const auto& q : yb) gens.push_back(p * q);
    return Lattice::from_generators(x.algebra(), gens);
}

Lattice conj_lattice(const Lattice& x)
{
    std::vector<Quaternion> gens;
    for (const auto& q : x.basis()) gens.push_back(conj(q));
    return Lattice::from_generators(x.algebra(), gens);
}

Rat determinant(std::vector<std::vector<Rat>> m)
{
    const std::size_t n = m.size();
    Rat det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            Rat f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

namespace {

std::vector<std::vector<Rat>> invert(std::vector<std::vector<Rat>> m)
{
    const std::size_t n = m.size();
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) throw DomainError("singular matrix");
        std::swap(m[piv], m[c]);
        std::swap(inv[piv], inv[c]);
        Rat p = m[c][c];
        for (std::size_t k = 0; k < n; ++k) {
            m[c][k] /= p;
            inv[c][k] /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m[r][c] == 0) continue;
            Rat f = m[r][c];
            for (std::size_t k = 0; k < n; ++k) {
                m[r][k] -= f * m[c][k];
                inv[r][k] -= f * inv[c][k];
            }
        }
    }
    return inv;
}

} // namespace

std::vector<std::vector<Rat>> trace_gram(const std::vector<Quaternion>& basis)
{
    const std::size_t n = basis.size();
    std::vector<std::vector<Rat>> g(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g[i][j] = trace_product(basis[i], basis[j]);
    return g;
}

Lattice codifferent(const Lattice& x)
{
    if (x.rank() != 4) throw DomainError("codifferent: lattice is not of full rank");
    auto basis = x.basis();
    auto ginv = invert(trace_gram(basis));
    // f_j = sum_k (G^-1)_{kj} e_k satisfies tr(e_i f_j) = delta_ij.
    std::vector<Quaternion> dual;
    for (std::size_t j = 0; j < 4; ++j) {
        Quaternion f = Quaternion::zero(x.algebra());
        for (std::size_t k = 0; k < 4; ++k) f += ginv[k][j] * basis[k];
        dual.push_back(f);
    }
    return Lattice::from_generators(x.algebra(), dual);
}

std::vector<std::vector<Integer>> integer_kernel(const std::vector<std::vector<Integer>>& rows)
{
    const std::size_t n = rows.size();
    if (n == 0) return {};
    const std::size_t k = rows[0].size();
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        m[i] = rows[i];
        m[i].resize(k + n, Integer(0));
        m[i][k + i] = 1;
    }
    std::size_t rank = echelon(m, k);
    std::vector<std::vector<Integer>> out;
    for (std::size_t i = rank; i < n; ++i) out.emplace_back(m[i].begin() + static_cast<long>(k), m[i].end());
    return out;
}

Lattice intersect_kernel(const Lattice& x, const std::vector<LinearForm>& forms)
{
    if (forms.empty()) return x;
    std::vector<std::vector<Integer>> values;
    for (const auto& r : x.rows()) {
        std::vector<Integer> v;
        for (const auto& f : forms) {
            Integer l = 1;
            for (const auto& c : f) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
            Rat s = 0;
            for (std::size_t k = 0; k < 4; ++k) s += f[k] * l * r[k];
            v.push_back(s.get_num());
        }
        values.push_back(std::move(v));
    }
    auto ker = integer_kernel(values);
    std::vector<IntRow> rows;
    for (const auto& c : ker) {
        IntRow row{0, 0, 0, 0};
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t k = 0; k < 4; ++k) row[k] += c[i] * x.rows()[i][k];
        rows.push_back(std::move(row));
    }
    return Lattice::from_rows(x.algebra(), x.den(), std::move(rows));
}

Lattice intersect_span(const Lattice& x, const std::vector<Quaternion>& span)
{
    // Linear forms vanishing on the span: integer kernel of the transpose.
    Integer den = common_denominator(span);
    std::vector<std::vector<Integer>> cols(4, std::vector<Integer>(span.size()));
    for (std::size_t i = 0; i < span.size(); ++i)
        for (std::size_t k = 0; k < 4; ++k) cols[k][i] = Rat(span[i][k] * den).get_num();
    std::vector<LinearForm> forms;
    if (span.empty()) {
        for (int k = 0; k < 4; ++k) {
            LinearForm f{Rat(0), Rat(0), Rat(0), Rat(0)};
            f[static_cast<std::size_t>(k)] = 1;
            forms.push_back(f);
        }
    } else {
        for (const auto& v : integer_kernel(cols)) forms.push_back({Rat(v[0]), Rat(v[1]), Rat(v[2]), Rat(v[3])});
    }
    return intersect_kernel(x, forms);
}

Lattice pure_sublattice(const Lattice& x)
{
    return intersect_kernel(x, {LinearForm{Rat(1), Rat(0), Rat(0), Rat(0)}});
}

std::vector<Quaternion> reduced_basis(const Lattice& x)
{
    const Rat wa = abs(x.algebra().a());
    const Rat wb = abs(x.algebra().b());
    const std::array<Rat, 4> w{Rat(1), wa, wb, Rat(wa * wb)};
    auto dot = [&](const Quaternion& p, const Quaternion& q) {
        Rat s = 0;
        for (std::size_t k = 0; k < 4; ++k) s += w[k] * p[k] * q[k];
        return s;
    };

    std::vector<Quaternion> b = x.basis();
    const std::size_t n = b.size();
    if (n <= 1) return b;

    std::vector<Quaternion> star;
    std::vector<Rat> bstar2(n);
    std::vector<std::vector<Rat>> mu(n, std::vector<Rat>(n));
    auto gram_schmidt = [&]() {
        star.clear();
        for (std::size_t i = 0; i < n; ++i) {
            Quaternion v = b[i];
            for (std::size_t j = 0; j < i; ++j) {
                mu[i][j] = dot(b[i], star[j]) / bstar2[j];
                v -= mu[i][j] * star[j];
            }
            star.push_back(v);
            bstar2[i] = dot(v, v);
        }
    };
    gram_schmidt();
    const Rat delta(3, 4);
    std::size_t k = 1;
    while (k < n) {
        for (std::size_t jj = k; jj-- > 0;) {
            Integer q = round_nearest(mu[k][jj]);
            if (q != 0) {
                b[k] -= Rat(q) * b[jj];
                gram_schmidt();
            }
        }
        if (bstar2[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * bstar2[k - 1]) {
            ++k;
        } else {
            std::swap(b[k], b[k - 1]);
            gram_schmidt();
            k = std::max<std::size_t>(k - 1, 1);
        }
    }
    return b;
}

// ---------------------------------------------------------------------------

namespace {

bool integral(const Quaternion& q)
{
    return trace(q).get_den() == 1 && norm(q).get_den() == 1;
}

} // namespace

bool is_order(const Lattice& x)
{
    if (x.rank() != 4) return false;
    if (!x.contains(Quaternion::one(x.algebra()))) return false;
    auto basis = x.basis();
    for (const auto& e : basis)
        if (!integral(e)) return false;
    for (const auto& e : basis)
        for (const auto& f : basis)
            if (!x.contains(e * f)) return false;
    return true;
}

Order Order::from_lattice(Lattice lat)
{
    if (!is_order(lat)) throw DomainError("order: lattice is not an order");
    return Order(std::move(lat));
}

Integer reduced_discriminant(const Order& ord)
{
    Rat det = determinant(trace_gram(ord.lattice().basis()));
    Rat a = abs(det);
    auto r = rat_sqrt(a);
    if (!r || r->get_den() != 1) throw InvariantViolation("reduced_discriminant: |det| is not a square integer");
    return r->get_num();
}

bool is_maximal(const Order& ord)
{
    return reduced_discriminant(ord) == ramification(ord.algebra()).discriminant;
}

Order standard_order(const QuaternionAlgebra& alg)
{
    // c^2 x = squarefree_part(x) for a rational c
    auto scale = [](const Rat& x) {
        Integer s = squarefree_part(x);
        auto c = rat_sqrt(Rat(s / x));
        if (!c) throw InvariantViolation("standard_order: square class mismatch");
        return *c;
    };
    Rat ca = scale(alg.a());
    Rat cb = scale(alg.b());
    Quaternion e1 = Quaternion::one(alg);
    Quaternion e2 = ca * Quaternion::basis(alg, 1);
    Quaternion e3 = cb * Quaternion::basis(alg, 2);
    Quaternion e4 = e2 * e3;
    return Order::from_lattice(lattice_from_generators(alg, {e1, e2, e3, e4}));
}

namespace {

long mod_p(const Integer& x, long p)
{
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(p));
    return r.get_si();
}

long inv_mod(long x, long p)
{
    long r = 1, base = x % p, e = p - 2;
    while (e > 0) {
        if (e & 1) r = static_cast<long>((__int128)r * base % p);
        base = static_cast<long>((__int128)base * base % p);
        e >>= 1;
    }
    return r;
}

// Basis of {c in F_p^n : G c = 0}.
std::vector<std::vector<long>> kernel_mod_p(const std::vector<std::vector<Integer>>& g, long p)
{
    const std::size_t n = g.size();
    std::vector<std::vector<long>> m(n, std::vector<long>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = mod_p(g[i][j], p);
    std::vector<long> pivot_col;
    std::size_t row = 0;
    for (std::size_t c = 0; c < n && row < n; ++c) {
        std::size_t piv = row;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) continue;
        std::swap(m[piv], m[row]);
        long inv = inv_mod(m[row][c], p);
        for (auto& v : m[row]) v = v * inv % p;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == row || m[r][c] == 0) continue;
            long f = m[r][c];
            for (std::size_t k = 0; k < n; ++k) m[r][k] = ((m[r][k] - f * m[row][k]) % p + p) % p;
        }
        pivot_col.push_back(static_cast<long>(c));
        ++row;
    }
    std::vector<std::vector<long>> out;
    for (std::size_t free = 0; free < n; ++free) {
        if (std::find(pivot_col.begin(), pivot_col.end(), static_cast<long>(free)) != pivot_col.end()) continue;
        std::vector<long> v(n, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivot_col.size(); ++r)
            v[static_cast<std::size_t>(pivot_col[r])] = (p - m[r][free]) % p;
        out.push_back(std::move(v));
    }
    return out;
}

// Ring generated by ord and x, or nullopt if that ring is not an order or
// its index over ord exceeds max_index.
std::optional<Order> ring_closure(const Order& ord, const Quaternion& x, const Integer& max_index)
{
    const auto& alg = ord.algebra();
    std::vector<Quaternion> gens = ord.lattice().basis();
    gens.push_back(x);
    Lattice cur = Lattice::from_generators(alg, gens);
    for (int round = 0; round < 64; ++round) {
        auto basis = cur.basis();
        for (const auto& e : basis)
            if (!integral(e)) return std::nullopt;
        if (lattice_index(cur, ord.lattice()) > max_index) return std::nullopt;
        std::vector<Quaternion> next = basis;
        for (const auto& e : basis)
            for (const auto& f : basis) next.push_back(e * f);
        Lattice grown = Lattice::from_generators(alg, next);
        if (grown == cur) {
            if (!is_order(cur)) return std::nullopt;
            return Order::from_lattice(cur);
        }
        cur = std::move(grown);
    }
    return std::nullopt;
}

std::optional<Order> enlarge_at(const Order& ord, long p, const Integer& max_index)
{
    auto basis = ord.lattice().basis();
    auto gram = trace_gram(basis);
    std::vector<std::vector<Integer>> g(4, std::vector<Integer>(4));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) g[i][j] = gram[i][j].get_num();

    // x = (sum c_i e_i)/p lies in any order containing O only if tr(x O) is
    // integral, i.e. G c = 0 mod p.
    auto ker = kernel_mod_p(g, p);
    const std::size_t dim = ker.size();
    if (dim == 0) return std::nullopt;
    std::vector<long> coeff(dim, 0);
    const Rat inv_p(1, p);
    while (true) {
        std::size_t pos = dim;
        while (pos-- > 0) {
            if (++coeff[pos] < p) break;
            coeff[pos] = 0;
        }
        if (pos == static_cast<std::size_t>(-1)) break;
        Quaternion x = Quaternion::zero(ord.algebra());
        for (std::size_t i = 0; i < 4; ++i) {
            long c = 0;
            for (std::size_t k = 0; k < dim; ++k) c = (c + coeff[k] * ker[k][i]) % p;
            if (c != 0) x += Rat(c) * basis[i];
        }
        x *= inv_p;
        if (!integral(x)) continue;
        if (auto bigger = ring_closure(ord, x, max_index)) return bigger;
    }
    return std::nullopt;
}

} // namespace

Order maximal_order(const QuaternionAlgebra& alg)
{
    RamificationData ram = ramification(alg);
    if (ram.place_count() == 0) throw DomainError("maximal_order: algebra is split");
    if (ram.infinite_ramified) throw DomainError("maximal_order: algebra is not totally indefinite");
    const Integer& D = ram.discriminant;

    Order ord = standard_order(alg);
    while (true) {
        Integer d = reduced_discriminant(ord);
        if (d == D) return ord;
        if (!mpz_divisible_p(d.get_mpz_t(), D.get_mpz_t()))
            throw InvariantViolation("maximal_order: D does not divide d(O)");
        Integer level = d / D;
        Integer p = prime_divisors(level).front();
        if (!fits_int64(p) || p > (Integer(1) << 31))
            throw SaturationFailed("maximal_order: prime " + p.get_str() + " too large to saturate");
        auto bigger = enlarge_at(ord, p.get_si(), level);
        if (!bigger)
            throw SaturationFailed("maximal_order: no integral extension found at p = " + p.get_str());
        ord = std::move(*bigger);
    }
}

Lattice two_sided_ideal(const Order& ord, const Integer& m)
{
    if (m <= 0) throw DomainError("two_sided_ideal: m must be positive");
    return lattice_intersection(ord.lattice(), codifferent(ord.lattice()).scaled(Rat(m)));
}

bool normalizes(const Order& ord, const Quaternion& g)
{
    if (g.is_zero()) throw DomainError("normalizes: zero element");
    Quaternion gi = inverse(g);
    std::vector<Quaternion> conjugated;
    for (const auto& e : ord.lattice().basis()) conjugated.push_back(gi * e * g);
    return Lattice::from_generators(ord.algebra(), conjugated) == ord.lattice();
}

// ---------------------------------------------------------------------------

LeftIdeal LeftIdeal::make(Lattice lat, Order ord)
{
    if (lat.algebra() != ord.algebra()) throw DomainError("left ideal: algebra mismatch");
    if (lat.rank() != 4) throw DomainError("left ideal: lattice is not of full rank");
    auto ib = lat.basis();
    for (const auto& o : ord.lattice().basis())
        for (const auto& x : ib)
            if (!lat.contains(o * x)) throw DomainError("left ideal: O * I is not contained in I");
    return LeftIdeal(std::move(lat), std::move(ord));
}

LeftIdeal LeftIdeal::principal(const Order& ord, const Quaternion& beta)
{
    if (norm(beta) == 0) throw DomainError("left ideal: generator is not invertible");
    std::vector<Quaternion> gens;
    for (const auto& e : ord.lattice().basis()) gens.push_back(e * beta);
    return make(Lattice::from_generators(ord.algebra(), gens), ord);
}

Lattice conj_ideal(const LeftIdeal& ideal) { return conj_lattice(ideal.lattice()); }

Rat ideal_norm(const LeftIdeal& ideal)
{
    auto basis = ideal.lattice().basis();
    std::vector<Rat> norms;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        norms.push_back(norm(basis[i]));
        for (std::size_t j = i + 1; j < basis.size(); ++j) norms.push_back(norm(basis[i] + basis[j]));
    }
    return rat_gcd(norms);
}

Lattice norm_ideal(const LeftIdeal& ideal)
{
    Lattice prod = ideal_product(ideal.lattice(), conj_ideal(ideal));
    Lattice expected = ideal.order().lattice().scaled(ideal_norm(ideal));
    if (prod != expected) throw InvariantViolation("norm_ideal: I * conj(I) differs from n(I) O");
    return prod;
}

} // namespace qf
