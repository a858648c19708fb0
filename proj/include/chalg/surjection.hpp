#pragma once

#include "chalg/chain.hpp"

namespace chalg {

/* nondegenerate surjection onto {1..l}; degree = length - l */
struct Surjection {
    std::vector<int> u;

    int length() const { return (int)u.size(); }
    int arity() const;
    int degree() const { return length() - arity(); }
    int operator()(int i) const { return u[(size_t)i - 1]; }  // 1-based
    bool operator==(const Surjection& o) const { return u == o.u; }
    bool operator<(const Surjection& o) const { return u < o.u; }
};

bool valid_surjection(const std::vector<int>& u);
std::vector<Surjection> all_surjections(int l, int deg);

std::string surjection_str(const Surjection& u);

/* position i (1-based) is final if the value u(i) does not recur later */
std::vector<bool> final_positions(const Surjection& u);

struct SurjClass {
    bool biased = false;
    bool strongly_biased = false;
    bool one_biased = false;
    bool strongly_one_biased = false;
    int repeated_value = 0;  // the distinguished value, 0 if none
};
SurjClass classify(const Surjection& u);

/* formal integer combination of surjections of one biarity */
struct SurjectionSum {
    std::map<Surjection, Int> t;

    bool operator==(const SurjectionSum& o) const { return t == o.t; }
};
void add_term(SurjectionSum& s, const Surjection& u, const Int& c);

/* interval cut operation: C(X) -> C(X)^{(x) l}, raising degree by deg u */
TensorChain interval_cut(const Surjection& u, const Simplex& x);
TensorChain interval_cut(const Surjection& u, const Chain& c);
TensorChain interval_cut(const SurjectionSum& s, const Simplex& x);

/* operad structure */
SurjectionSum differential(const Surjection& u);
Surjection permute(const std::vector<int>& pi, const Surjection& u);
Surjection truncate(const Surjection& u);

/* u o_s v, computed by expressing the composite interval cut operation in
   the basis of interval cut operations on a large standard simplex */
SurjectionSum compose(const Surjection& u, int s, const Surjection& v);

/* expand an operation C -> C^{(x) l_res} of degree k_res in the basis of
   interval cut operations, given its value on the top simplex of a standard
   simplex of any sufficiently large dimension; throws if no exact integral
   expansion exists */
SurjectionSum expand_in_cut_basis(
    int l_res, int k_res,
    const std::function<TensorChain(const Simplex&)>& op, const char* who);

/* slot permutation of C^{(x) l} induced by pi in S_l (result slot pi(s)
   receives input slot s) expressed for permute_slots */
std::vector<size_t> slot_perm(const std::vector<int>& pi);

/* the cycle (1 2 ... s) mapping 1 -> s */
std::vector<int> tau_cycle(int s, int l);

/* ((p_X)_* (x) (p_Y)_*^{(x) l}) AW_u for 1-biased u */
TensorChain aw_tilde(const Surjection& u, const Chain& c,
                     const std::function<Simplex(const Simplex&)>& proj_x,
                     const std::function<Simplex(const Simplex&)>& proj_y);

/* (1 (x) proj_*^{(x) l}) AW_u */
TensorChain aw_hat(const Surjection& u, const Chain& c,
                   const std::function<Simplex(const Simplex&)>& proj);

/******** transposed operations on cochains ********/

/* t(AW_u)(g_1 (x) ... (x) g_l) evaluated on x */
Int ev_cut(const Surjection& u, const std::vector<Cochain>& gs,
           const Simplex& x);
Int ev_cut(const Surjection& u, const std::vector<Cochain>& gs,
           const Chain& c);

/* the same functional in the dual basis of an enumerable space */
Cochain t_cut(const Space& X, const Surjection& u,
              const std::vector<Cochain>& gs);

Cochain cup(const Space& X, const Cochain& b, const Cochain& c);
Cochain cup1(const Space& X, const Cochain& b, const Cochain& c);
Cochain cup2(const Space& X, const Cochain& b, const Cochain& c);

Surjection ek_surjection(int k);        // (1,2,1,3,1,...,1,k+1,1)
Surjection ek_tilde_surjection(int k);  // (k+1,1,k+1,2,...,k+1,k,k+1)

/* E_k(a; b_1..b_k) and the factor-swapped variant */
Cochain ek(const Space& X, const Cochain& a, const std::vector<Cochain>& bs);
Cochain ek_tilde(const Space& X, const std::vector<Cochain>& bs,
                 const Cochain& a);

}  // namespace chalg
