#pragma once

#include <optional>

#include "chalg/bundle.hpp"
#include "chalg/homlin.hpp"
#include "chalg/surjection.hpp"

namespace chalg {

/******** the exterior bialgebra on n degree-one generators ********/

/* basis monomial x_{i_1}...x_{i_k}: strictly increasing indices, 1-based */
using ExtMono = std::vector<int>;

struct ExtElt {
    std::map<ExtMono, Int> t;

    bool zero() const { return t.empty(); }
    bool operator==(const ExtElt& o) const { return t == o.t; }
    ExtElt& operator+=(const ExtElt& o);
    ExtElt& operator-=(const ExtElt& o);
    ExtElt& operator*=(const Int& c);
};
void add_term(ExtElt& e, const ExtMono& m, const Int& c);
ExtElt ext_of(const ExtMono& m, const Int& c = 1);
ExtElt operator+(ExtElt a, const ExtElt& b);
ExtElt operator-(ExtElt a, const ExtElt& b);
ExtElt operator*(const Int& c, ExtElt a);

using ExtTensor = std::map<std::pair<ExtMono, ExtMono>, Int>;
void add_term(ExtTensor& e, const ExtMono& a, const ExtMono& b, const Int& c);

/* merge two increasing index sets; returns the Koszul sign, 0 if they meet */
int ext_merge(const ExtMono& a, const ExtMono& b, ExtMono& out);

class ExteriorBialgebra {
public:
    explicit ExteriorBialgebra(int n);
    int rank() const { return n_; }
    bool valid(const ExtMono& m) const;
    int degree(const ExtMono& m) const { return (int)m.size(); }
    std::vector<ExtMono> basis(int deg) const;

    ExtElt mul(const ExtElt& x, const ExtElt& y) const;
    /* Delta x_A = sum over splits A = B u C with the shuffle sign */
    ExtTensor diagonal(const ExtMono& m) const;
    Int aug(const ExtElt& e) const;

private:
    int n_;
    void check(const ExtMono& m) const;
};

/******** the divided coalgebra on n degree-two generators ********/

/* exponent vector of y_alpha; slot i-1 belongs to y_i; degree 2|alpha| */
using Multi = std::vector<int>;

int multi_norm(const Multi& a);

class DividedCoalgebra {
public:
    explicit DividedCoalgebra(int n);
    int rank() const { return n_; }
    bool valid(const Multi& a) const;
    int degree(const Multi& a) const;
    std::vector<Multi> basis(int deg) const;

    /* Delta y_alpha = sum_{beta+gamma=alpha} y_beta (x) y_gamma */
    std::vector<std::pair<Multi, Multi>> diagonal(const Multi& a) const;
    Int counit(const Multi& a) const;

private:
    int n_;
    void check(const Multi& a) const;
};

/******** the Koszul complex K = Lambda (x) S ********/

struct KBasis {
    ExtMono a;
    Multi alpha;

    bool operator==(const KBasis& o) const {
        return a == o.a && alpha == o.alpha;
    }
    bool operator<(const KBasis& o) const {
        if (a != o.a) return a < o.a;
        return alpha < o.alpha;
    }
};

struct KElt {
    std::map<KBasis, Int> t;

    bool zero() const { return t.empty(); }
    bool operator==(const KElt& o) const { return t == o.t; }
    KElt& operator+=(const KElt& o);
    KElt& operator-=(const KElt& o);
    KElt& operator*=(const Int& c);
};
void add_term(KElt& e, const KBasis& k, const Int& c);
KElt k_of(const KBasis& k, const Int& c = 1);
KElt operator+(KElt a, const KElt& b);
KElt operator-(KElt a, const KElt& b);
KElt operator*(const Int& c, KElt a);

using KTensor = std::map<std::pair<KBasis, KBasis>, Int>;

class KoszulComplex {
public:
    explicit KoszulComplex(int n);
    int rank() const { return ext_.rank(); }
    const ExteriorBialgebra& ext() const { return ext_; }
    const DividedCoalgebra& div() const { return div_; }
    int degree(const KBasis& k) const;
    std::vector<KBasis> basis(int deg) const;

    /* d(a y_alpha) = sum_{alpha_i != 0} x_i a y_{alpha|i} */
    KElt diff(const KBasis& k) const;
    KElt diff(const KElt& e) const;
    /* the twisting cochain S -> Lambda behind the differential:
       y_i -> x_i, zero on every other basis element */
    ExtElt twisting(const Multi& a) const;
    /* tensor product of coalgebras; no Koszul signs since |y| is even */
    KTensor diagonal(const KBasis& k) const;
    /* the map K -> S induced by the augmentation of Lambda */
    std::map<Multi, Int> to_div(const KElt& e) const;
    /* the degree window [0, max_deg] as a finite chain complex */
    FgComplex complex(int max_deg) const;

private:
    ExteriorBialgebra ext_;
    DividedCoalgebra div_;
};

/******** chain-level realization over the simplicial torus ********/

/* one chain c_i in C_1(T) per circle factor, each a combination of loops
   at the identity */
struct RepChoice {
    std::vector<Chain> c;
};

/*
 * The formality map of the rank-n simplicial torus T = B(Z)^n: phi sends the
 * exterior generators to the chosen loop chains, F extends phi to a
 * quasi-isomorphism K -> C(ET) by contracting with S, and f = proj_* F lands
 * in C(BT).  Instances built over shared circle bundles are related by the
 * coordinatewise chain maps below.
 */
class TorusFormality {
public:
    /* fresh circle bundles with the default representative, the loop (1) */
    TorusFormality(Arena& arena, int n);
    TorusFormality(Arena& arena, std::vector<UniversalBundle> circles);

    int rank() const { return n_; }
    const UniversalBundle& bundle() const { return b_; }
    const KoszulComplex& koszul() const { return K_; }
    const Chain& rep(int i) const;  // c_i, 1-based
    /* replace the representatives by chains on this instance's torus;
       resets the memo table */
    void set_reps(RepChoice reps);

    /* algebra map Lambda -> C(T): x_i -> c_i, Pontryagin products */
    Chain phi(const ExtMono& m) const;
    Chain phi(const ExtElt& e) const;

    /* F(1) = e0, F(y) = S F(dy), F(ay) = phi(a).F(y); memoized per key */
    const Chain& F(const KBasis& k);
    Chain F(const KElt& e);

    /* f(y_alpha) = proj_* F(y_alpha), a chain on BT */
    Chain f(const Multi& alpha);
    /* evaluation of the transpose of f against a cochain on BT */
    Int f_pair(const Cochain& gamma, const Multi& alpha);

    struct VanishingCert {
        Surjection u;
        bool zero = false;
        TensorChain residue;  // the offending value when zero is false
    };
    /* AW_u f(y_alpha); u must be strongly biased */
    VanishingCert verify_vanishing(const Surjection& u, const Multi& alpha);
    /* (1 (x) proj^{(x)l}) AW_u F(k); u must be strongly 1-biased */
    VanishingCert verify_vanishing_hat(const Surjection& u, const KBasis& k);

private:
    int n_;
    std::vector<UniversalBundle> circles_;
    UniversalBundle b_;
    KoszulComplex K_;
    RepChoice reps_;
    std::map<KBasis, Chain> memo_;
};

/******** coordinatewise maps between tori ********/

/* alpha of the source rank placed along coords (1-based) into rank n_dst */
Multi multi_include(const Multi& alpha, const std::vector<int>& coords,
                    int n_dst);
/* restriction of alpha to coords; nullopt if alpha is supported elsewhere */
std::optional<Multi> multi_project(const Multi& alpha,
                                   const std::vector<int>& coords);

/* chain maps C(BT_src) -> C(BT_dst) induced by the coordinatewise inclusion
   (factor j of src becomes factor coords[j] of dst, the rest stay at the
   basepoint) and the coordinatewise projection (factor coords[j] of src
   becomes factor j of dst); matched circle factors must be shared */
Chain bt_include(const TorusFormality& src, const TorusFormality& dst,
                 const std::vector<int>& coords, const Chain& ch);
Chain bt_project(const TorusFormality& src, const TorusFormality& dst,
                 const std::vector<int>& coords, const Chain& ch);

}  // namespace chalg
