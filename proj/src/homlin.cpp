#include "chalg/homlin.hpp"

#include <stdexcept>

namespace chalg {

IntMatrix IntMatrix::zero(size_t r, size_t c) {
    IntMatrix m;
    m.rows = r;
    m.cols = c;
    m.a.assign(r, std::vector<Int>(c, 0));
    return m;
}

IntMatrix IntMatrix::id(size_t n) {
    IntMatrix m = zero(n, n);
    for (size_t i = 0; i < n; ++i) m.a[i][i] = 1;
    return m;
}

IntMatrix mat_mul(const IntMatrix& x, const IntMatrix& y) {
    if (x.cols != y.rows) throw std::invalid_argument("mat_mul: shape");
    IntMatrix r = IntMatrix::zero(x.rows, y.cols);
    for (size_t i = 0; i < x.rows; ++i)
        for (size_t k = 0; k < x.cols; ++k) {
            if (x.a[i][k] == 0) continue;
            for (size_t j = 0; j < y.cols; ++j)
                if (y.a[k][j] != 0) r.a[i][j] += x.a[i][k] * y.a[k][j];
        }
    return r;
}

bool is_zero(const IntMatrix& x) {
    for (auto& row : x.a)
        for (auto& v : row)
            if (v != 0) return false;
    return true;
}

Int det(const IntMatrix& x) {
    if (x.rows != x.cols) throw std::invalid_argument("det: not square");
    size_t n = x.rows;
    if (n == 0) return 1;
    std::vector<std::vector<Int>> a = x.a;
    Int prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                Int v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                a[i][j] = v / prev;  // Bareiss: division is exact
            }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

/* ---- Smith normal form ---- */

namespace {

struct SnfWork {
    IntMatrix d, u, v;

    void swap_rows(size_t i, size_t j) {
        if (i == j) return;
        std::swap(d.a[i], d.a[j]);
        std::swap(u.a[i], u.a[j]);
    }
    void swap_cols(size_t i, size_t j) {
        if (i == j) return;
        for (auto& row : d.a) std::swap(row[i], row[j]);
        for (auto& row : v.a) std::swap(row[i], row[j]);
    }
    void add_row(size_t dst, size_t src, const Int& c) {  // row dst += c*src
        for (size_t j = 0; j < d.cols; ++j) d.a[dst][j] += c * d.a[src][j];
        for (size_t j = 0; j < u.cols; ++j) u.a[dst][j] += c * u.a[src][j];
    }
    void add_col(size_t dst, size_t src, const Int& c) {
        for (size_t i = 0; i < d.rows; ++i) d.a[i][dst] += c * d.a[i][src];
        for (size_t i = 0; i < v.rows; ++i) v.a[i][dst] += c * v.a[i][src];
    }
    void negate_row(size_t i) {
        for (auto& x : d.a[i]) x = -x;
        for (auto& x : u.a[i]) x = -x;
    }
};

}  // namespace

SNF smith_normal_form(const IntMatrix& m) {
    SnfWork w;
    w.d = m;
    w.u = IntMatrix::id(m.rows);
    w.v = IntMatrix::id(m.cols);
    size_t n = std::min(m.rows, m.cols);

    for (size_t t = 0; t < n; ++t) {
        /* find a pivot: smallest nonzero magnitude in the remaining block */
        for (;;) {
            size_t pi = t, pj = t;
            Int best = 0;
            for (size_t i = t; i < w.d.rows; ++i)
                for (size_t j = t; j < w.d.cols; ++j) {
                    const Int& x = w.d.a[i][j];
                    if (x == 0) continue;
                    if (best == 0 || abs_of(x) < best) {
                        best = abs_of(x);
                        pi = i;
                        pj = j;
                    }
                }
            if (best == 0) goto done;
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);
            if (w.d.a[t][t] < 0) w.negate_row(t);

            bool clean = true;
            const Int p = w.d.a[t][t];
            for (size_t i = t + 1; i < w.d.rows; ++i) {
                if (w.d.a[i][t] == 0) continue;
                Int q = w.d.a[i][t] / p;
                if (q != 0) w.add_row(i, t, -q);
                if (w.d.a[i][t] != 0) clean = false;
            }
            for (size_t j = t + 1; j < w.d.cols; ++j) {
                if (w.d.a[t][j] == 0) continue;
                Int q = w.d.a[t][j] / p;
                if (q != 0) w.add_col(j, t, -q);
                if (w.d.a[t][j] != 0) clean = false;
            }
            if (!clean) continue;  // smaller remainders became new pivots

            /* enforce divisibility of the remaining block by the pivot */
            bool divides = true;
            for (size_t i = t + 1; i < w.d.rows && divides; ++i)
                for (size_t j = t + 1; j < w.d.cols && divides; ++j)
                    if (w.d.a[i][j] % p != 0) {
                        w.add_row(t, i, 1);
                        divides = false;
                    }
            if (divides) break;
        }
    }
done:
    return {w.d, w.u, w.v};
}

long long rank_q(const IntMatrix& m) {
    /* fraction-free row echelon */
    std::vector<std::vector<Int>> a = m.a;
    size_t rank = 0;
    for (size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        size_t p = rank;
        while (p < m.rows && a[p][col] == 0) ++p;
        if (p == m.rows) continue;
        std::swap(a[rank], a[p]);
        for (size_t i = rank + 1; i < m.rows; ++i) {
            if (a[i][col] == 0) continue;
            Int g = a[rank][col];
            Int c = a[i][col];
            for (size_t j = col; j < m.cols; ++j)
                a[i][j] = a[i][j] * g - a[rank][j] * c;
        }
        ++rank;
    }
    return (long long)rank;
}

long long rank_mod_p(const IntMatrix& m, long long p) {
    if (p < 2) throw std::invalid_argument("rank_mod_p: p < 2");
    std::vector<std::vector<long long>> a(m.rows,
                                          std::vector<long long>(m.cols));
    for (size_t i = 0; i < m.rows; ++i)
        for (size_t j = 0; j < m.cols; ++j)
            a[i][j] = (long long)(((m.a[i][j] % p) + p) % p);
    size_t rank = 0;
    for (size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        size_t piv = rank;
        while (piv < m.rows && a[piv][col] == 0) ++piv;
        if (piv == m.rows) continue;
        std::swap(a[rank], a[piv]);
        /* modular inverse by Fermat (p prime) */
        long long inv = 1, b = a[rank][col] % p, e = p - 2;
        while (e) {
            if (e & 1) inv = (__int128)inv * b % p;
            b = (__int128)b * b % p;
            e >>= 1;
        }
        for (size_t j = col; j < m.cols; ++j)
            a[rank][j] = (__int128)a[rank][j] * inv % p;
        for (size_t i = 0; i < m.rows; ++i) {
            if (i == rank || a[i][col] == 0) continue;
            long long c = a[i][col];
            for (size_t j = col; j < m.cols; ++j) {
                a[i][j] = (a[i][j] - (__int128)c * a[rank][j]) % p;
                if (a[i][j] < 0) a[i][j] += p;
            }
        }
        ++rank;
    }
    return (long long)rank;
}

IntMatrix kernel_basis(const IntMatrix& m) {
    SNF s = smith_normal_form(m);
    size_t n = std::min(m.rows, m.cols);
    std::vector<size_t> zero_cols;
    for (size_t j = 0; j < m.cols; ++j)
        if (j >= n || s.d.a[j][j] == 0) zero_cols.push_back(j);
    IntMatrix k = IntMatrix::zero(m.cols, zero_cols.size());
    for (size_t c = 0; c < zero_cols.size(); ++c)
        for (size_t i = 0; i < m.cols; ++i) k.a[i][c] = s.v.a[i][zero_cols[c]];
    return k;
}

long long kernel_dim(const IntMatrix& m, long long p) {
    long long r = p == 0 ? rank_q(m) : rank_mod_p(m, p);
    return (long long)m.cols - r;
}

std::optional<std::vector<Int>> solve(const IntMatrix& m,
                                      const std::vector<Int>& rhs) {
    if (rhs.size() != m.rows) throw std::invalid_argument("solve: shape");
    SNF s = smith_normal_form(m);
    std::vector<Int> b(m.rows, 0);
    for (size_t i = 0; i < m.rows; ++i)
        for (size_t j = 0; j < m.rows; ++j) b[i] += s.u.a[i][j] * rhs[j];
    std::vector<Int> y(m.cols, 0);
    size_t n = std::min(m.rows, m.cols);
    for (size_t i = 0; i < m.rows; ++i) {
        Int d = i < n ? s.d.a[i][i] : Int(0);
        if (d == 0) {
            if (b[i] != 0) return std::nullopt;
        } else {
            if (b[i] % d != 0) return std::nullopt;
            y[i] = b[i] / d;
        }
    }
    std::vector<Int> x(m.cols, 0);
    for (size_t i = 0; i < m.cols; ++i)
        for (size_t j = 0; j < m.cols; ++j) x[i] += s.v.a[i][j] * y[j];
    return x;
}

Homology homology_at(const IntMatrix& d_out, const IntMatrix& d_in) {
    if (d_out.cols != d_in.rows) throw std::invalid_argument("homology: shape");
    if (!is_zero(mat_mul(d_out, d_in)))
        throw std::invalid_argument("homology: d o d != 0");
    IntMatrix k = kernel_basis(d_out);

    /* express the image of d_in in the kernel basis: k * x = d_in */
    SNF s = smith_normal_form(k);
    size_t n = std::min(k.rows, k.cols);
    IntMatrix rhs = mat_mul(s.u, d_in);
    IntMatrix x = IntMatrix::zero(k.cols, d_in.cols);
    for (size_t j = 0; j < d_in.cols; ++j) {
        for (size_t i = 0; i < k.rows; ++i) {
            if (i < n && s.d.a[i][i] != 0) {
                if (rhs.a[i][j] % s.d.a[i][i] != 0)
                    throw std::logic_error("homology: non-integral solve");
                x.a[i][j] = rhs.a[i][j] / s.d.a[i][i];
            } else if (rhs.a[i][j] != 0) {
                throw std::logic_error("homology: image not in kernel");
            }
        }
    }
    x = mat_mul(s.v, x);

    SNF q = smith_normal_form(x);
    Homology h;
    size_t r = 0;
    for (size_t i = 0; i < std::min(x.rows, x.cols); ++i)
        if (q.d.a[i][i] != 0) {
            ++r;
            if (q.d.a[i][i] > 1) h.torsion.push_back(q.d.a[i][i]);
        }
    h.free_rank = (long long)x.rows - (long long)r;
    return h;
}

long long betti_at(const IntMatrix& d_out, const IntMatrix& d_in, long long p) {
    if (p == 0) return kernel_dim(d_out) - rank_q(d_in);
    return kernel_dim(d_out, p) - rank_mod_p(d_in, p);
}

void validate(const FgComplex& c) {
    size_t n = c.dims.size();
    if (c.d.size() + 1 != n && !(n == 0 && c.d.empty()))
        throw std::invalid_argument("complex: need one map per adjacent pair");
    for (size_t k = 0; k + 1 < n; ++k) {
        if ((long long)c.d[k].rows != c.dims[k] ||
            (long long)c.d[k].cols != c.dims[k + 1])
            throw std::invalid_argument("complex: map shape mismatch");
        if (k + 2 < n && !is_zero(mat_mul(c.d[k], c.d[k + 1])))
            throw std::invalid_argument("complex: d o d != 0");
    }
}

Homology homology(const FgComplex& c, int k) {
    if (k <= c.lo || k >= c.hi())
        throw std::out_of_range("homology: window edge requested");
    size_t i = (size_t)(k - c.lo);
    return homology_at(c.d[i - 1], c.d[i]);
}

long long betti(const FgComplex& c, int k, long long p) {
    if (k <= c.lo || k >= c.hi())
        throw std::out_of_range("betti: window edge requested");
    size_t i = (size_t)(k - c.lo);
    return betti_at(c.d[i - 1], c.d[i], p);
}

IntMatrix boundary_matrix(const Space& X, int k) {
    auto lo = X.nondeg_simplices(k - 1);
    auto hi = X.nondeg_simplices(k);
    std::map<Simplex, size_t> index;
    for (size_t i = 0; i < lo.size(); ++i) index[lo[i]] = i;
    IntMatrix m = IntMatrix::zero(lo.size(), hi.size());
    for (size_t j = 0; j < hi.size(); ++j)
        for (auto& [y, c] : boundary(hi[j]).t) m.a[index.at(y)][j] = c;
    return m;
}

FgComplex chain_complex(const Space& X, int lo, int hi) {
    if (lo < 0 || hi < lo) throw std::invalid_argument("chain_complex: window");
    FgComplex c;
    c.lo = lo;
    for (int k = lo; k <= hi; ++k)
        c.dims.push_back((long long)X.nondeg_simplices(k).size());
    for (int k = lo; k < hi; ++k) c.d.push_back(boundary_matrix(X, k + 1));
    validate(c);
    return c;
}

std::vector<long long> hilbert_function(
    const std::function<IntMatrix(int)>& constraints, int lo, int hi,
    long long p) {
    std::vector<long long> dims;
    for (int d = lo; d <= hi; ++d) dims.push_back(kernel_dim(constraints(d), p));
    return dims;
}

}  // namespace chalg
