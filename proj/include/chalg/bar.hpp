#ifndef CHALG_BAR_HPP
#define CHALG_BAR_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chalg/homlin.hpp"
#include "chalg/ints.hpp"

namespace chalg {

/******** presented dgas ********/

/* basis element of a graded algebra: (degree, index) */
using ALetter = std::pair<int, std::size_t>;

/* finite combination of basis elements */
struct AElt {
    std::map<ALetter, Int> t;

    bool zero() const { return t.empty(); }
    bool operator==(const AElt& o) const { return t == o.t; }

    AElt& operator+=(const AElt& o);
    AElt& operator-=(const AElt& o);
    AElt& operator*=(const Int& c);
};

void add_term(AElt& e, const ALetter& a, const Int& v);
AElt elt_of(const ALetter& a);

struct TruncationError : std::runtime_error {
    explicit TruncationError(const std::string& what)
        : std::runtime_error(what) {}
};

/*
 * An augmented dga with a chosen basis in each degree, enumerable up to the
 * truncation degree window().  Degree 0 must have rank 1 spanned by the unit,
 * so the augmentation is the coefficient of (0,0) and the augmentation ideal
 * is spanned by the basis in positive degrees.  diff and mul throw
 * TruncationError when the result would live beyond the window and is not
 * known to vanish.
 */
class PresentedDGA {
public:
    virtual ~PresentedDGA() = default;

    virtual std::string name() const = 0;
    virtual int window() const = 0;
    virtual std::size_t rank(int deg) const = 0;
    virtual AElt diff(const ALetter& a) const = 0;
    virtual AElt mul(const ALetter& a, const ALetter& b) const = 0;
    virtual bool commutative() const = 0;

    AElt diff(const AElt& e) const;
    AElt mul(const AElt& a, const AElt& b) const;
    Int aug(const AElt& e) const;
};

/* d^2, Leibniz, associativity, unit and augmentation axioms on all basis
   tuples that stay inside the window; throws on the first violation */
void verify_presented_dga(const PresentedDGA& A);

/* polynomial algebra on one generator of even degree, zero differential */
class PolyDGA : public PresentedDGA {
public:
    PolyDGA(int gen_deg, int window);

    using PresentedDGA::diff;
    using PresentedDGA::mul;

    std::string name() const override { return "poly"; }
    int window() const override { return n_; }
    std::size_t rank(int deg) const override;
    AElt diff(const ALetter& a) const override { return (void)a, AElt{}; }
    AElt mul(const ALetter& a, const ALetter& b) const override;
    bool commutative() const override { return true; }

private:
    int g_, n_;
};

/* truncated polynomial algebra k[t]/t^m on one generator of even degree */
class TruncPolyDGA : public PresentedDGA {
public:
    TruncPolyDGA(int gen_deg, int power, int window);

    using PresentedDGA::diff;
    using PresentedDGA::mul;

    std::string name() const override { return "truncpoly"; }
    int window() const override { return n_; }
    std::size_t rank(int deg) const override;
    AElt diff(const ALetter& a) const override { return (void)a, AElt{}; }
    AElt mul(const ALetter& a, const ALetter& b) const override;
    bool commutative() const override { return true; }

private:
    int g_, m_, n_;
};

/******** bar construction ********/

/* [a_1|...|a_k] with letters in the augmentation ideal */
struct BarWord {
    std::vector<ALetter> a;

    int length() const { return (int)a.size(); }
    int degree() const;    /* sum (deg a_i - 1) */
    int internal() const;  /* sum deg a_i */

    bool operator==(const BarWord& o) const { return a == o.a; }
    bool operator<(const BarWord& o) const { return a < o.a; }
};

struct BarChain {
    std::map<BarWord, Int> t;

    bool zero() const { return t.empty(); }
    bool operator==(const BarChain& o) const { return t == o.t; }

    BarChain& operator+=(const BarChain& o);
    BarChain& operator-=(const BarChain& o);
    BarChain& operator*=(const Int& c);
};

void add_term(BarChain& ch, const BarWord& w, const Int& v);
BarChain chain_of(const BarWord& w);

/* exponent of the sign prefix eps_i = deg a_1 + ... + deg a_i - i over the
   first i letters; the single bookkeeping route for all bar-side signs */
int bar_prefix_exponent(const BarWord& w, std::size_t i);

/* d[a_1|...|a_k] = -sum (-1)^{eps_{i-1}} [...|da_i|...]
                    +sum (-1)^{eps_i} [...|a_i a_{i+1}|...] */
BarChain bar_differential(const PresentedDGA& A, const BarWord& w);
BarChain bar_differential(const PresentedDGA& A, const BarChain& ch);

/* deconcatenating diagonal */
using BarTensor = std::map<std::pair<BarWord, BarWord>, Int>;
BarTensor bar_diagonal(const BarWord& w);
BarTensor bar_diagonal(const BarChain& ch);

/******** homotopy Gerstenhaber structure ********/

/*
 * E_k operations on top of a presented dga.  e(a; b_1..b_k) is defined for
 * k >= 1 on augmentation-ideal basis elements and must land in the
 * augmentation ideal; trivial structures have all E_k = 0.
 */
struct HGA {
    const PresentedDGA* A = nullptr;
    bool trivial = true;
    std::function<AElt(const ALetter&, const std::vector<ALetter>&)> e;
};

/* commutative dga with vanishing operations */
HGA trivial_hga(const PresentedDGA& A);

/*
 * Twisting cochain BA (x) BA -> A attached to the structure: the canonical
 * maps on bidegrees (1,0) and (0,1), E_l with the suspension sign
 * (-1)^{l deg a + sum (l-i) deg b_i} on bidegree (1,l), zero elsewhere.
 */
AElt hga_twisting(const HGA& H, const BarWord& x, const BarWord& y);

/* multiplication on BA induced by the twisting cochain; the shuffle product
   when the operations vanish */
BarChain bar_product(const HGA& H, const BarWord& x, const BarWord& y);
BarChain bar_product(const HGA& H, const BarChain& x, const BarChain& y);

/******** twisting cochains and dgc maps ********/

/* coalgebra maps BA -> BA and twisting cochains BA -> A as rules */
using BarMap = std::function<BarChain(const BarWord&)>;
using BarCochain = std::function<AElt(const BarWord&)>;
/* the same with source BA (x) BA */
using BarMap2 = std::function<BarChain(const BarWord&, const BarWord&)>;
using BarCochain2 = std::function<AElt(const BarWord&, const BarWord&)>;

/* twisting cochain of a dgc map: corestrict to B_1 A and desuspend */
AElt cochain_of_map(const BarMap& f, const BarWord& w);
AElt cochain_of_map(const BarMap2& f, const BarWord& x, const BarWord& y);

/* dgc map of a twisting cochain: sum_k (s^{-1} t)^{(x) k} Delta^{(k)} */
BarChain map_of_cochain(const BarCochain& t, const BarWord& w);
BarChain map_of_cochain(const BarCochain2& t, const BarWord& x,
                        const BarWord& y);

/******** Hochschild complex ********/

/* a_0 [a_1|...|a_n]: module slot over a bar word */
struct HWord {
    ALetter a0;
    BarWord w;

    int degree() const { return a0.first + w.degree(); }
    int internal() const { return a0.first + w.internal(); }

    bool operator==(const HWord& o) const { return a0 == o.a0 && w == o.w; }
    bool operator<(const HWord& o) const {
        return a0 != o.a0 ? a0 < o.a0 : w < o.w;
    }
};

struct HChain {
    std::map<HWord, Int> t;

    bool zero() const { return t.empty(); }
    bool operator==(const HChain& o) const { return t == o.t; }

    HChain& operator+=(const HChain& o);
    HChain& operator-=(const HChain& o);
    HChain& operator*=(const Int& c);
};

void add_term(HChain& ch, const HWord& x, const Int& v);
HChain chain_of(const HWord& x);

/* differential on A (x) (s^{-1} Abar)^{(x) n}: internal and bar terms, the
   left
   multiplication into the module slot, and the cyclic wrap-around term */
HChain hochschild_differential(const PresentedDGA& A, const HWord& x);
HChain hochschild_differential(const PresentedDGA& A, const HChain& ch);

/* Koszul signed interleavings of two letter strings by suspended degrees */
std::vector<std::pair<std::vector<ALetter>, int>> graded_shuffles(
    const std::vector<ALetter>& w, const std::vector<ALetter>& v);

/* shuffle product on Hochschild chains of a commutative dga */
HChain hochschild_shuffle(const PresentedDGA& A, const HWord& x,
                          const HWord& y);
HChain hochschild_shuffle(const PresentedDGA& A, const HChain& x,
                          const HChain& y);

/******** homology strands (zero-differential coefficients) ********/

/* bar words of fixed internal degree graded by word length, with the bar
   differential; requires diff = 0 on A */
FgComplex bar_strand(const PresentedDGA& A, int internal_deg, int nmax);

/* Hochschild words of fixed internal degree graded by word length */
FgComplex hochschild_strand(const PresentedDGA& A, int internal_deg, int nmax);

}  // namespace chalg

#endif
