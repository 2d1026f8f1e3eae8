#include "hurwitz/zlin.hpp"

#include <algorithm>
#include <cstdlib>

namespace hurwitz {

namespace {
constexpr ll kLimit = (1LL << 62);
}

ll checked_add(ll a, ll b) {
    __int128 r = (__int128)a + b;
    if (r >= kLimit || r <= -kLimit) throw error("integer overflow in addition");
    return ll(r);
}

ll checked_mul(ll a, ll b) {
    __int128 r = (__int128)a * b;
    if (r >= kLimit || r <= -kLimit) throw error("integer overflow in multiplication");
    return ll(r);
}

ll pos_mod(ll a, ll m) {
    ll r = a % m;
    return r < 0 ? r + m : r;
}

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

std::vector<ll> Mat::col(int c) const {
    std::vector<ll> out(rows_);
    for (int r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

std::vector<ll> Mat::row(int r) const {
    std::vector<ll> out(cols_);
    for (int c = 0; c < cols_; ++c) out[c] = (*this)(r, c);
    return out;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    if (a.cols() != b.rows()) throw error("mat_mul: shape mismatch");
    Mat out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            ll aik = a(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols(); ++j)
                out(i, j) = checked_add(out(i, j), checked_mul(aik, b(k, j)));
        }
    return out;
}

std::vector<ll> mat_apply(const Mat& a, const std::vector<ll>& x) {
    if (int(x.size()) != a.cols()) throw error("mat_apply: shape mismatch");
    std::vector<ll> out(a.rows(), 0);
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (a(i, j) != 0)
                out[i] = checked_add(out[i], checked_mul(a(i, j), x[j]));
    return out;
}

Mat hstack(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows()) throw error("hstack: row mismatch");
    Mat out(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
        for (int j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
    }
    return out;
}

Mat diag_mat(const std::vector<ll>& d) {
    Mat out(int(d.size()), int(d.size()));
    for (size_t i = 0; i < d.size(); ++i) out(int(i), int(i)) = d[i];
    return out;
}

Mat mat_from_columns(int dim, const std::vector<std::vector<ll>>& cols) {
    Mat out(dim, int(cols.size()));
    for (size_t c = 0; c < cols.size(); ++c) {
        if (int(cols[c].size()) != dim) throw error("mat_from_columns: bad column length");
        for (int r = 0; r < dim; ++r) out(r, int(c)) = cols[c][r];
    }
    return out;
}

namespace {

struct SmithWork {
    Mat s, u, uinv, v, vinv;

    void row_add(int i, int j, ll k) { // row_i += k * row_j
        for (int c = 0; c < s.cols(); ++c)
            s(i, c) = checked_add(s(i, c), checked_mul(k, s(j, c)));
        for (int c = 0; c < u.cols(); ++c)
            u(i, c) = checked_add(u(i, c), checked_mul(k, u(j, c)));
        for (int r = 0; r < uinv.rows(); ++r)
            uinv(r, j) = checked_add(uinv(r, j), checked_mul(-k, uinv(r, i)));
    }
    void col_add(int i, int j, ll k) { // col_i += k * col_j
        for (int r = 0; r < s.rows(); ++r)
            s(r, i) = checked_add(s(r, i), checked_mul(k, s(r, j)));
        for (int r = 0; r < v.rows(); ++r)
            v(r, i) = checked_add(v(r, i), checked_mul(k, v(r, j)));
        for (int c = 0; c < vinv.cols(); ++c)
            vinv(j, c) = checked_add(vinv(j, c), checked_mul(-k, vinv(i, c)));
    }
    void row_swap(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < s.cols(); ++c) std::swap(s(i, c), s(j, c));
        for (int c = 0; c < u.cols(); ++c) std::swap(u(i, c), u(j, c));
        for (int r = 0; r < uinv.rows(); ++r) std::swap(uinv(r, i), uinv(r, j));
    }
    void col_swap(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < s.rows(); ++r) std::swap(s(r, i), s(r, j));
        for (int r = 0; r < v.rows(); ++r) std::swap(v(r, i), v(r, j));
        for (int c = 0; c < vinv.cols(); ++c) std::swap(vinv(i, c), vinv(j, c));
    }
    void row_negate(int i) {
        for (int c = 0; c < s.cols(); ++c) s(i, c) = -s(i, c);
        for (int c = 0; c < u.cols(); ++c) u(i, c) = -u(i, c);
        for (int r = 0; r < uinv.rows(); ++r) uinv(r, i) = -uinv(r, i);
    }
};

} // namespace

SmithForm smith_normal_form(const Mat& a) {
    const int m = a.rows(), n = a.cols();
    SmithWork w{a, Mat::identity(m), Mat::identity(m), Mat::identity(n), Mat::identity(n)};

    int t = 0;
    const int bound = std::min(m, n);
    while (t < bound) {
        // smallest nonzero entry in the remaining block becomes the pivot
        int pr = -1, pc = -1;
        ll best = 0;
        for (int i = t; i < m; ++i)
            for (int j = t; j < n; ++j) {
                ll x = std::llabs(w.s(i, j));
                if (x != 0 && (pr < 0 || x < best)) {
                    best = x;
                    pr = i;
                    pc = j;
                }
            }
        if (pr < 0) break;
        w.row_swap(t, pr);
        w.col_swap(t, pc);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < m; ++i) {
                if (w.s(i, t) == 0) continue;
                ll q = w.s(i, t) / w.s(t, t);
                if (q != 0) w.row_add(i, t, -q);
                if (w.s(i, t) != 0) { // remainder smaller than pivot: promote it
                    w.row_swap(t, i);
                    clean = false;
                }
            }
            for (int j = t + 1; j < n; ++j) {
                if (w.s(t, j) == 0) continue;
                ll q = w.s(t, j) / w.s(t, t);
                if (q != 0) w.col_add(j, t, -q);
                if (w.s(t, j) != 0) {
                    w.col_swap(t, j);
                    clean = false;
                }
            }
        }

        // enforce divisibility of the rest of the block by the pivot
        bool divides = true;
        for (int i = t + 1; i < m && divides; ++i)
            for (int j = t + 1; j < n && divides; ++j)
                if (w.s(i, j) % w.s(t, t) != 0) {
                    w.row_add(t, i, 1);
                    divides = false;
                }
        if (!divides) continue; // redo pivot t

        if (w.s(t, t) < 0) w.row_negate(t);
        ++t;
    }

    SmithForm out;
    out.s = w.s;
    out.u = w.u;
    out.uinv = w.uinv;
    out.v = w.v;
    out.vinv = w.vinv;
    out.rank = t;
    out.diag.reserve(t);
    for (int i = 0; i < t; ++i) out.diag.push_back(w.s(i, i));
    return out;
}

Mat integer_kernel(const Mat& a) {
    SmithForm sf = smith_normal_form(a);
    int n = a.cols();
    Mat out(n, n - sf.rank);
    for (int j = sf.rank; j < n; ++j)
        for (int r = 0; r < n; ++r) out(r, j - sf.rank) = sf.v(r, j);
    return out;
}

bool solve_integer(const SmithForm& sf, const std::vector<ll>& b, std::vector<ll>& x) {
    const int m = sf.s.rows(), n = sf.s.cols();
    if (int(b.size()) != m) throw error("solve_integer: shape mismatch");
    std::vector<ll> ub = mat_apply(sf.u, b);
    std::vector<ll> y(n, 0);
    for (int i = 0; i < m; ++i) {
        if (i < sf.rank) {
            if (ub[i] % sf.diag[i] != 0) return false;
            y[i] = ub[i] / sf.diag[i];
        } else if (ub[i] != 0) {
            return false;
        }
    }
    x = mat_apply(sf.v, y);
    return true;
}

bool solve_integer(const Mat& a, const std::vector<ll>& b, std::vector<ll>& x) {
    return solve_integer(smith_normal_form(a), b, x);
}

Mat kernel_mod(const Mat& f, const std::vector<ll>& target_moduli) {
    // x with f x = -D y for some y, D = diag(target moduli)
    if (int(target_moduli.size()) != f.rows()) throw error("kernel_mod: moduli mismatch");
    Mat big = hstack(f, diag_mat(target_moduli));
    Mat ker = integer_kernel(big);
    Mat out(f.cols(), ker.cols());
    for (int j = 0; j < ker.cols(); ++j)
        for (int r = 0; r < f.cols(); ++r) out(r, j) = ker(r, j);
    return out;
}

Mat column_hermite(const Mat& gens) {
    Mat h = gens;
    const int m = h.rows(), n = h.cols();
    auto col_add = [&](int i, int j, ll k) {
        for (int r = 0; r < m; ++r) h(r, i) = checked_add(h(r, i), checked_mul(k, h(r, j)));
    };
    auto col_swap = [&](int i, int j) {
        if (i == j) return;
        for (int r = 0; r < m; ++r) std::swap(h(r, i), h(r, j));
    };

    int cur = 0;
    for (int r = 0; r < m && cur < n; ++r) {
        // gcd-combine columns cur..n-1 at row r
        while (true) {
            int best = -1;
            for (int j = cur; j < n; ++j)
                if (h(r, j) != 0 && (best < 0 || std::llabs(h(r, j)) < std::llabs(h(r, best))))
                    best = j;
            if (best < 0) break;
            col_swap(cur, best);
            bool done = true;
            for (int j = cur + 1; j < n; ++j) {
                if (h(r, j) == 0) continue;
                ll q = h(r, j) / h(r, cur);
                col_add(j, cur, -q);
                if (h(r, j) != 0) done = false;
            }
            if (done) break;
        }
        if (cur < n && h(r, cur) != 0) {
            if (h(r, cur) < 0)
                for (int rr = 0; rr < m; ++rr) h(rr, cur) = -h(rr, cur);
            for (int j = 0; j < cur; ++j) { // reduce earlier columns at this row
                ll q = h(r, j) >= 0 ? h(r, j) / h(r, cur) : -((-h(r, j) + h(r, cur) - 1) / h(r, cur));
                if (q != 0) col_add(j, cur, -q);
            }
            ++cur;
        }
    }
    Mat out(m, cur);
    for (int j = 0; j < cur; ++j)
        for (int r = 0; r < m; ++r) out(r, j) = h(r, j);
    return out;
}

AbelianQuotient::AbelianQuotient() = default;

AbelianQuotient::AbelianQuotient(int dim, const Mat& k_gens, const Mat& i_gens) : dim_(dim) {
    if (dim == 0) return;
    Mat basis = column_hermite(k_gens);
    if (basis.cols() != dim) throw error("AbelianQuotient: K is not of full rank");
    // write I in terms of the K-basis
    SmithForm bsf = smith_normal_form(basis);
    Mat c(dim, i_gens.cols());
    for (int j = 0; j < i_gens.cols(); ++j) {
        std::vector<ll> x;
        if (!solve_integer(bsf, i_gens.col(j), x))
            throw error("AbelianQuotient: I is not contained in K");
        for (int r = 0; r < dim; ++r) c(r, j) = x[r];
    }
    SmithForm csf = smith_normal_form(c);
    if (csf.rank != dim) throw error("AbelianQuotient: I is not of full rank");
    basis_ = mat_mul(basis, csf.uinv);
    basis_sf_ = smith_normal_form(basis_);
    all_factors_ = csf.diag;
    for (int i = 0; i < dim; ++i)
        if (all_factors_[i] > 1) {
            keep_.push_back(i);
            factors_.push_back(all_factors_[i]);
        }
}

std::vector<ll> AbelianQuotient::generator(int j) const {
    return basis_.col(keep_.at(j));
}

ll AbelianQuotient::order() const {
    ll o = 1;
    for (ll f : factors_) o = checked_mul(o, f);
    return o;
}

std::vector<ll> AbelianQuotient::coordinates(const std::vector<ll>& x) const {
    if (dim_ == 0) return {};
    std::vector<ll> w;
    if (!solve_integer(basis_sf_, x, w))
        throw error("AbelianQuotient::coordinates: vector not in K");
    std::vector<ll> out(factors_.size());
    for (size_t j = 0; j < keep_.size(); ++j) out[j] = pos_mod(w[keep_[j]], factors_[j]);
    return out;
}

bool AbelianQuotient::lattice_contains(const std::vector<ll>& x) const {
    if (dim_ == 0) return true;
    std::vector<ll> w;
    return solve_integer(basis_sf_, x, w);
}

std::vector<ll> AbelianQuotient::lift(const std::vector<ll>& coords) const {
    if (int(coords.size()) != num_generators())
        throw error("AbelianQuotient::lift: coordinate length mismatch");
    std::vector<ll> out(dim_, 0);
    for (size_t j = 0; j < keep_.size(); ++j) {
        if (coords[j] == 0) continue;
        for (int r = 0; r < dim_; ++r)
            out[r] = checked_add(out[r], checked_mul(coords[j], basis_(r, keep_[j])));
    }
    return out;
}

std::vector<ll> cokernel_factors(int dim, const Mat& rels) {
    if (dim == 0) return {};
    SmithForm sf = smith_normal_form(rels);
    if (sf.rank != dim) throw error("cokernel_factors: relations not of full rank");
    std::vector<ll> out;
    for (ll d : sf.diag)
        if (d > 1) out.push_back(d);
    return out;
}

} // namespace hurwitz
