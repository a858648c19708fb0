#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "chalg/chain.hpp"
#include "chalg/ints.hpp"

namespace chalg {

struct IntMatrix {
    size_t rows = 0, cols = 0;
    std::vector<std::vector<Int>> a;

    static IntMatrix zero(size_t r, size_t c);
    static IntMatrix id(size_t n);
    Int& at(size_t i, size_t j) { return a[i][j]; }
    const Int& at(size_t i, size_t j) const { return a[i][j]; }
    bool operator==(const IntMatrix& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }
};

IntMatrix mat_mul(const IntMatrix& x, const IntMatrix& y);
bool is_zero(const IntMatrix& x);
Int det(const IntMatrix& x);  // fraction-free elimination

/* u * m * v = d, with d diagonal, nonnegative, each entry dividing the next;
   u and v unimodular */
struct SNF {
    IntMatrix d, u, v;
};
SNF smith_normal_form(const IntMatrix& m);

long long rank_q(const IntMatrix& m);
long long rank_mod_p(const IntMatrix& m, long long p);

/* columns form a basis of the saturated kernel lattice */
IntMatrix kernel_basis(const IntMatrix& m);

/* some integer solution x of m x = rhs, or nullopt */
std::optional<std::vector<Int>> solve(const IntMatrix& m,
                                      const std::vector<Int>& rhs);

/* dimension of the null space over Q (p = 0) or F_p */
long long kernel_dim(const IntMatrix& m, long long p = 0);

/* H = ker(d_out) / im(d_in); requires d_out * d_in = 0 */
struct Homology {
    long long free_rank = 0;
    std::vector<Int> torsion;  // elementary divisors > 1

    bool operator==(const Homology& o) const {
        return free_rank == o.free_rank && torsion == o.torsion;
    }
};
Homology homology_at(const IntMatrix& d_out, const IntMatrix& d_in);
long long betti_at(const IntMatrix& d_out, const IntMatrix& d_in,
                   long long p = 0);

/* degreewise finite complex on the degree window [lo, lo + dims.size() - 1];
   d[k] maps degree lo+k+1 to degree lo+k */
struct FgComplex {
    int lo = 0;
    std::vector<long long> dims;
    std::vector<IntMatrix> d;

    int hi() const { return lo + (int)dims.size() - 1; }
};

void validate(const FgComplex& c);
Homology homology(const FgComplex& c, int k);
long long betti(const FgComplex& c, int k, long long p = 0);

/* matrix of the simplicial boundary from degree k to k-1 in the bases of
   nondegenerate simplices */
IntMatrix boundary_matrix(const Space& X, int k);
FgComplex chain_complex(const Space& X, int lo, int hi);

/* per-degree dimension of the solution space of a degreewise family of
   linear constraints */
std::vector<long long> hilbert_function(
    const std::function<IntMatrix(int)>& constraints, int lo, int hi,
    long long p = 0);

}  // namespace chalg
