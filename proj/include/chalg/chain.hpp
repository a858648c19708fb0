#pragma once

#include "chalg/ints.hpp"
#include "chalg/spaces.hpp"

namespace chalg {

/* finite Z-linear combination of nondegenerate simplices */
struct Chain {
    std::map<Simplex, Int> t;

    bool zero() const { return t.empty(); }
    bool operator==(const Chain& o) const { return t == o.t; }
    Chain& operator+=(const Chain& o);
    Chain& operator-=(const Chain& o);
    Chain& operator*=(const Int& c);
};

Chain operator+(Chain a, const Chain& b);
Chain operator-(Chain a, const Chain& b);
Chain operator*(const Int& c, Chain a);

/* adds c*x, dropping degenerate simplices and cancelling zeros */
void add_term(Chain& ch, const Simplex& x, const Int& c);
Chain chain_of(const Simplex& x, const Int& c = 1);

Chain boundary(const Chain& ch);
Chain boundary(const Simplex& x);

/* pushforward along a simplicial map given on nondegenerate simplices */
Chain pushforward(const Chain& ch,
                  const std::function<Simplex(const Simplex&)>& f);

std::string chain_str(const Chain& ch);

/* tensors of simplices with integer coefficients; degree of a term is the
   sum of the dimensions */
struct TensorChain {
    std::map<std::vector<Simplex>, Int> t;

    bool zero() const { return t.empty(); }
    bool operator==(const TensorChain& o) const { return t == o.t; }
    TensorChain& operator+=(const TensorChain& o);
    TensorChain& operator-=(const TensorChain& o);
    TensorChain& operator*=(const Int& c);
};

TensorChain operator+(TensorChain a, const TensorChain& b);
TensorChain operator-(TensorChain a, const TensorChain& b);
TensorChain operator*(const Int& c, TensorChain a);

void add_term(TensorChain& ch, const std::vector<Simplex>& xs, const Int& c);
TensorChain tensor_of(const Chain& a);
TensorChain tensor(const TensorChain& a, const Chain& b);
TensorChain tensor(const Chain& a, const Chain& b);
TensorChain tensor(const TensorChain& a, const TensorChain& b);

int tensor_term_degree(const std::vector<Simplex>& xs);

/* apply a chain map of the given degree to one tensor slot, with the Koszul
   sign (-1)^{deg * (sum of dimensions in earlier slots)} */
TensorChain apply_slot(const TensorChain& ch, size_t slot, int deg,
                       const std::function<Chain(const Simplex&)>& f);

/* permute tensor slots: term (x_1,...,x_l) goes to slot i <- perm[i], i.e.
   result slot i holds x_{perm[i]}, with the Koszul sign of the permutation */
TensorChain permute_slots(const TensorChain& ch,
                          const std::vector<size_t>& perm);

/* differential of a tensor chain (Leibniz with Koszul signs) */
TensorChain boundary(const TensorChain& ch);

std::string tensor_chain_str(const TensorChain& ch);

/* Alexander-Whitney diagonal: sum of front-face (x) back-face */
TensorChain aw_diagonal(const Simplex& x);
TensorChain aw_diagonal(const Chain& ch);

/* Eilenberg-Zilber shuffle map into a flattened product whose factor list is
   factors(A) ++ factors(B) */
Chain shuffle_map(const Chain& a, const Chain& b, const NaryProduct& target);

/* shuffle enumeration: all (p,q)-shuffles as pairs (lambda, mu) with sign */
struct ShufflePair {
    Monotone lambda, mu;
    int sign;
};
std::vector<ShufflePair> shuffles(int p, int q);

/* chain-level pairing of a simplicial action G x X -> X (or any bilinear
   simplex pairing): shuffles then applies the pairing, dropping degenerate
   results */
Chain pair_chains(
    const Chain& a, const Chain& b,
    const std::function<Simplex(const Simplex&, const Simplex&)>& pairing);

/* Pontryagin product on C(G) */
Chain pontryagin(const Chain& a, const Chain& b, const GroupOps& g);

/******** cochains ********/

/* finite dual combination in one degree */
struct Cochain {
    int deg = 0;
    std::map<Simplex, Int> c;

    bool zero() const { return c.empty(); }
    bool operator==(const Cochain& o) const { return deg == o.deg && c == o.c; }
};

void add_term(Cochain& co, const Simplex& x, const Int& v);

Int ev(const Cochain& co, const Simplex& x);
Int ev(const Cochain& co, const Chain& ch);

/* (d gamma)(x) = -(-1)^{deg gamma} gamma(dx), expressed in the dual basis of
   an enumerable space */
Cochain coboundary(const Space& X, const Cochain& co);

/* evaluate gamma_1 (x) ... (x) gamma_l on a tensor chain with Koszul signs */
Int ev_tensor(const std::vector<Cochain>& cos, const TensorChain& ch);

}  // namespace chalg
