#pragma once

// Exact integer linear algebra: dense matrices over Z, Hermite and Smith
// normal forms with transformation matrices, and presentations of finite
// abelian groups as lattice quotients K/I.  Everything downstream
// (group cohomology, mixed cohomology on graphs, norm maps) reduces to
// these primitives.

#include <cstdint>
#include <vector>

#include "hurwitz/errors.hpp"

namespace hurwitz {

using ll = long long;

ll checked_add(ll a, ll b);
ll checked_mul(ll a, ll b);

// mod into [0, m)
ll pos_mod(ll a, ll m);

class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, 0) {}

    static Mat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    ll& operator()(int r, int c) { return a_[size_t(r) * cols_ + c]; }
    ll operator()(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

    std::vector<ll> col(int c) const;
    std::vector<ll> row(int r) const;

    bool operator==(const Mat& o) const = default;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<ll> a_;
};

Mat mat_mul(const Mat& a, const Mat& b);
std::vector<ll> mat_apply(const Mat& a, const std::vector<ll>& x);
Mat hstack(const Mat& a, const Mat& b);
Mat diag_mat(const std::vector<ll>& d);
Mat mat_from_columns(int dim, const std::vector<std::vector<ll>>& cols);

// u * a * v = s with u, v unimodular and s diagonal, diag[0] | diag[1] | ...
struct SmithForm {
    Mat s;
    Mat u, uinv;
    Mat v, vinv;
    int rank = 0;
    std::vector<ll> diag; // the `rank` nonzero diagonal entries
};

SmithForm smith_normal_form(const Mat& a);

// Basis of the integer kernel {x : a x = 0}, as columns.
Mat integer_kernel(const Mat& a);

// Solve a x = b exactly over Z.  Returns false if no integral solution.
bool solve_integer(const SmithForm& sf, const std::vector<ll>& b, std::vector<ll>& x);
bool solve_integer(const Mat& a, const std::vector<ll>& b, std::vector<ll>& x);

// Generators of {x : f x = 0 mod target_moduli[r] row-wise}, as columns.
// Does not include the source moduli relations; callers add those.
Mat kernel_mod(const Mat& f, const std::vector<ll>& target_moduli);

// Canonical column-style Hermite basis of the column span (zero columns
// dropped).  Two generating sets span the same lattice iff their forms match.
Mat column_hermite(const Mat& gens);

// Finite abelian group presented as K/I for lattices I <= K <= Z^dim,
// both of full rank (callers include coordinate moduli among the
// generators).  Carries generator lifts and coordinates of members.
class AbelianQuotient {
public:
    AbelianQuotient(); // the zero group on a zero-dimensional ambient
    AbelianQuotient(int dim, const Mat& k_gens, const Mat& i_gens);

    int ambient_dim() const { return dim_; }
    const std::vector<ll>& factors() const { return factors_; } // entries > 1
    int num_generators() const { return int(factors_.size()); }
    std::vector<ll> generator(int j) const;
    ll order() const;
    bool trivial() const { return factors_.empty(); }

    // x must lie in K; coordinates are reduced mod factors().
    std::vector<ll> coordinates(const std::vector<ll>& x) const;
    bool lattice_contains(const std::vector<ll>& x) const;

    // Lift of given coordinates back to Z^dim.
    std::vector<ll> lift(const std::vector<ll>& coords) const;

private:
    int dim_ = 0;
    Mat basis_;          // dim x dim, columns b_i with K/I = (+) Z b_i / f_i
    SmithForm basis_sf_; // for solving basis_ * w = x
    std::vector<ll> all_factors_;
    std::vector<int> keep_;
    std::vector<ll> factors_;
};

// Invariant factors (> 1) of Z^dim / colspan(rels); rels must have full
// row rank dim (include moduli columns).
std::vector<ll> cokernel_factors(int dim, const Mat& rels);

} // namespace hurwitz
