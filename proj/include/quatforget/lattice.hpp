#ifndef QUATFORGET_LATTICE_HPP
#define QUATFORGET_LATTICE_HPP

#include "quatforget/quaternion.hpp"

#include <array>
#include <optional>
#include <vector>

namespace qf {

using IntRow = std::array<Integer, 4>;
using LinearForm = std::array<Rat, 4>;

/// A Z-module of rank <= 4 inside B, stored as rows / den in row echelon
/// Hermite normal form: pivots strictly increasing and positive, entries
/// above a pivot reduced into [0, pivot), den minimal. The form is unique,
/// so lattice equality is representation equality.
class Lattice {
public:
    static Lattice from_generators(const QuaternionAlgebra& alg, const std::vector<Quaternion>& gens);
    static Lattice from_rows(const QuaternionAlgebra& alg, const Integer& den, std::vector<IntRow> rows);

    const QuaternionAlgebra& algebra() const { return alg_; }
    const Integer& den() const { return den_; }
    const std::vector<IntRow>& rows() const { return rows_; }
    std::size_t rank() const { return rows_.size(); }

    std::vector<Quaternion> basis() const;
    bool contains(const Quaternion& q) const;
    std::optional<std::vector<Integer>> coordinates(const Quaternion& q) const;
    /// |det| of the basis matrix; requires rank 4.
    Rat covolume() const;
    Lattice scaled(const Rat& c) const;

    bool operator==(const Lattice& o) const
    {
        return alg_ == o.alg_ && den_ == o.den_ && rows_ == o.rows_;
    }
    bool operator!=(const Lattice& o) const { return !(*this == o); }

private:
    Lattice(QuaternionAlgebra alg, Integer den, std::vector<IntRow> rows);

    QuaternionAlgebra alg_;
    Integer den_;
    std::vector<IntRow> rows_;
};

/// Full-rank lattice spanned by gens; rank < 4 is a domain error.
Lattice lattice_from_generators(const QuaternionAlgebra& alg, const std::vector<Quaternion>& gens);

/// [outer : inner] for full-rank lattices with inner inside outer.
Integer lattice_index(const Lattice& outer, const Lattice& inner);
Lattice lattice_sum(const Lattice& x, const Lattice& y);
/// x cap y for full-rank lattices, as the dual of x# + y#.
Lattice lattice_intersection(const Lattice& x, const Lattice& y);
/// Span of all pairwise products x_i * y_j.
Lattice ideal_product(const Lattice& x, const Lattice& y);
Lattice conj_lattice(const Lattice& x);
/// Dual under (x, y) -> tr(x y).
Lattice codifferent(const Lattice& x);
/// Elements of x of reduced trace zero (rank 3 for full-rank x).
Lattice pure_sublattice(const Lattice& x);
/// x intersected with the common kernel of the given linear forms on
/// coordinates.
Lattice intersect_kernel(const Lattice& x, const std::vector<LinearForm>& forms);
/// x intersected with the Q-span of the given elements.
Lattice intersect_span(const Lattice& x, const std::vector<Quaternion>& span);

/// LLL-reduced basis (delta = 3/4, exact arithmetic) under the positive
/// definite majorant x0^2 + |a| x1^2 + |b| x2^2 + |ab| x3^2.
std::vector<Quaternion> reduced_basis(const Lattice& x);

/// Integer vectors c with sum_i c_i * rows[i] = 0; a Z-basis of the kernel.
std::vector<std::vector<Integer>> integer_kernel(const std::vector<std::vector<Integer>>& rows);

Rat determinant(std::vector<std::vector<Rat>> m);
/// Matrix (tr(e_i e_j)) over the given elements.
std::vector<std::vector<Rat>> trace_gram(const std::vector<Quaternion>& basis);

// ---------------------------------------------------------------------------
// Orders
// ---------------------------------------------------------------------------

bool is_order(const Lattice& x);

/// A full-rank subring of integral elements containing 1.
class Order {
public:
    static Order from_lattice(Lattice lat);

    const Lattice& lattice() const { return lat_; }
    const QuaternionAlgebra& algebra() const { return lat_.algebra(); }
    bool contains(const Quaternion& q) const { return lat_.contains(q); }

    bool operator==(const Order& o) const { return lat_ == o.lat_; }

private:
    explicit Order(Lattice lat) : lat_(std::move(lat)) {}
    Lattice lat_;
};

/// d(O) with d(O)^2 = |det tr(e_i e_j)|.
Integer reduced_discriminant(const Order& ord);
bool is_maximal(const Order& ord);
/// Z<1, c_a i, c_b j, c_a c_b ij> with c_a^2 a and c_b^2 b squarefree integers.
Order standard_order(const QuaternionAlgebra& alg);
/// Saturates the standard order prime by prime until d(O) = D.
Order maximal_order(const QuaternionAlgebra& alg);
/// O cap m O#: for maximal O and squarefree m | D, the two-sided ideal of
/// reduced norm m.
Lattice two_sided_ideal(const Order& ord, const Integer& m);
/// g^-1 O g == O.
bool normalizes(const Order& ord, const Quaternion& g);

// ---------------------------------------------------------------------------
// Left ideals
// ---------------------------------------------------------------------------

class LeftIdeal {
public:
    /// Validates O * I = I on basis products.
    static LeftIdeal make(Lattice lat, Order ord);
    static LeftIdeal principal(const Order& ord, const Quaternion& beta);
    static LeftIdeal unit(const Order& ord) { return make(ord.lattice(), ord); }

    const Lattice& lattice() const { return lat_; }
    const Order& order() const { return ord_; }

private:
    LeftIdeal(Lattice lat, Order ord) : lat_(std::move(lat)), ord_(std::move(ord)) {}
    Lattice lat_;
    Order ord_;
};

Lattice conj_ideal(const LeftIdeal& ideal);
/// n(I): positive generator of the ideal generated by norms of basis
/// elements and of their pairwise sums.
Rat ideal_norm(const LeftIdeal& ideal);
/// I * conj(I), checked against n(I) * O.
Lattice norm_ideal(const LeftIdeal& ideal);

} // namespace qf

#endif
