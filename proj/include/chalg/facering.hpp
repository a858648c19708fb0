#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chalg/bar.hpp"
#include "chalg/homlin.hpp"
#include "chalg/ints.hpp"

namespace chalg {

/******** simplicial posets ********/

struct PosetElt {
    int rank = 0;
    std::vector<int> verts;  // folding image, strictly increasing, 1-based
};

/* input form for general posets: covers lists indices of elements covered
   by this one */
struct HasseElt {
    int rank = 0;
    std::vector<int> verts;
    std::vector<std::size_t> covers;
};

/*
 * A finite poset with a bottom element whose lower intervals are Boolean,
 * together with a folding map into the vertex set 1..nverts.  Vertices
 * absent from every element are ghosts.  Constructors only check basic
 * well-formedness; validate() checks the axioms and returns diagnostics.
 */
class SimplicialPoset {
public:
    static SimplicialPoset complex(int nverts,
                                   const std::vector<std::vector<int>>& facets);
    static SimplicialPoset poset(int nverts, const std::vector<HasseElt>& elts);

    int nverts() const { return nv_; }
    std::size_t size() const { return e_.size(); }
    const PosetElt& elt(std::size_t i) const { return e_.at(i); }
    bool leq(std::size_t a, std::size_t b) const;
    std::size_t zero_hat() const;
    const std::vector<std::size_t>& maximal() const { return max_; }

    /* common upper bounds; their minimal elements; the unique maximal common
       lower bound when an upper bound exists */
    std::vector<std::size_t> upper(std::size_t a, std::size_t b) const;
    std::vector<std::size_t> join(std::size_t a, std::size_t b) const;
    std::optional<std::size_t> meet(std::size_t a, std::size_t b) const;
    std::vector<std::size_t> max_common_lower(std::size_t a,
                                              std::size_t b) const;
    /* the element below top with the given vertex set, if any */
    std::optional<std::size_t> below(std::size_t top,
                                     const std::vector<int>& vs) const;

    /* one line per violated axiom; empty means valid */
    std::vector<std::string> validate() const;

    /* subposet induced on a down-closed element set; img maps new indices
       to old ones */
    SimplicialPoset induced(const std::vector<std::size_t>& elems,
                            std::vector<std::size_t>* img = nullptr) const;

private:
    void finish();

    int nv_ = 0;
    std::vector<PosetElt> e_;
    std::vector<std::vector<char>> leq_;
    std::vector<std::size_t> max_;
};

/* rank- and folding-preserving order map between posets over the same
   vertex set */
struct VertexPreservingMap {
    const SimplicialPoset* src = nullptr;
    const SimplicialPoset* dst = nullptr;
    std::vector<std::size_t> img;
};

std::vector<std::string> validate(const VertexPreservingMap& k);

/******** limit tuples ********/

/* monomial exponents per vertex, 1-based slots; internal degree 2 * weight */
using VExp = std::vector<int>;

struct VPoly {
    std::map<VExp, Int> t;

    bool zero() const { return t.empty(); }
    bool operator==(const VPoly& o) const { return t == o.t; }

    VPoly& operator+=(const VPoly& o);
    VPoly& operator-=(const VPoly& o);
    VPoly& operator*=(const Int& c);
};

void add_term(VPoly& p, const VExp& m, const Int& v);
VPoly poly_mul(const VPoly& a, const VPoly& b);
/* kill the variables outside vs */
VPoly poly_restrict(const VPoly& p, const std::vector<int>& vs);

/* element of the limit ring: one polynomial per maximal poset element, in
   maximal() order, compatible on common lower bounds */
struct FaceRingElt {
    std::vector<VPoly> comp;

    bool zero() const;
    bool operator==(const FaceRingElt& o) const { return comp == o.comp; }

    FaceRingElt& operator+=(const FaceRingElt& o);
    FaceRingElt& operator-=(const FaceRingElt& o);
    FaceRingElt& operator*=(const Int& c);
};

FaceRingElt operator+(FaceRingElt a, const FaceRingElt& b);
FaceRingElt operator-(FaceRingElt a, const FaceRingElt& b);
FaceRingElt operator*(const FaceRingElt& a, const FaceRingElt& b);

/*
 * The face ring as the limit of the polynomial rings over the poset
 * elements.  Multiplication is componentwise; the generators t_sigma
 * satisfy t_sigma t_tau = t_meet * sum of t_rho over the join.  Degrees are
 * internal: deg t_sigma = 2 rank(sigma).
 */
class FaceRing {
public:
    explicit FaceRing(SimplicialPoset S);

    const SimplicialPoset& poset() const { return S_; }

    FaceRingElt zero() const;
    FaceRingElt one() const;
    FaceRingElt gen(std::size_t sigma) const;  // t_sigma
    int gen_degree(std::size_t sigma) const { return 2 * S_.elt(sigma).rank; }

    /* supported on facet vertices and compatible on maximal common lower
       bounds of facet pairs */
    bool is_element(const FaceRingElt& x) const;
    /* component of a limit tuple at an arbitrary poset element */
    VPoly component(const FaceRingElt& x, std::size_t sigma) const;

    long long dim(int deg) const;
    FaceRingElt basis_elt(int deg, std::size_t i) const;
    /* coordinates of a homogeneous limit tuple in the degree basis */
    std::vector<Int> coords(const FaceRingElt& x, int deg) const;

    std::vector<long long> hilbert(int max_deg) const;

private:
    struct DegData {
        std::vector<std::pair<std::size_t, VExp>> unknowns;
        std::map<std::pair<std::size_t, VExp>, std::size_t> index;
        IntMatrix kb;  // columns span the limit lattice
    };
    const DegData& deg_data(int deg) const;
    std::vector<Int> pack(const FaceRingElt& x, int deg) const;

    SimplicialPoset S_;
    mutable std::map<int, DegData> cache_;
};

/* kappa: S -> S' induces k[S'] -> k[S] on limit tuples; on generators
   t_{sigma'} pulls back to the sum of t_sigma over the fiber */
FaceRingElt pullback(const VertexPreservingMap& kappa, const FaceRingElt& x);

/******** Mayer-Vietoris ********/

/*
 * Exactness certificate for 0 -> k[S] -> k[S1] (+) k[S2] -> k[S1 cap S2] -> 0
 * with the restriction maps and their difference, checked degreewise by rank
 * computation through the window, together with Hilbert additivity.
 */
struct MVCert {
    bool ok = false;
    std::vector<std::string> problems;
    /* per degree 0..window: dims of k[S], k[S1], k[S2], k[S1 cap S2] */
    std::vector<std::array<long long, 4>> dims;
};

MVCert mayer_vietoris_check(const SimplicialPoset& S,
                            const std::vector<std::size_t>& part1,
                            const std::vector<std::size_t>& part2, int window);

/******** the face ring as a presented dga ********/

/* zero differential, commutative; bases are the limit lattice bases per
   degree, with the unit as the degree-0 basis element */
class FaceRingDGA : public PresentedDGA {
public:
    FaceRingDGA(FaceRing R, int window);

    using PresentedDGA::diff;
    using PresentedDGA::mul;

    std::string name() const override { return "facering"; }
    int window() const override { return n_; }
    std::size_t rank(int deg) const override;
    AElt diff(const ALetter& a) const override { return (void)a, AElt{}; }
    AElt mul(const ALetter& a, const ALetter& b) const override;
    bool commutative() const override { return true; }

private:
    FaceRing R_;
    int n_;
};

/******** loop space homology ********/

/* (homological degree, internal degree) -> rank; zero entries omitted */
using BettiTable = std::map<std::pair<int, int>, long long>;

/* graded Betti numbers of the residue field from a minimal free resolution
   built degreewise by exact linear algebra; independent of the bar route */
BettiTable resolution_betti(const FaceRing& R, int hom_max, int deg_max);

/* bar homology of the face ring over Q (p = 0) or F_p */
BettiTable tor_loops(const SimplicialPoset& S, int hom_max, int deg_max,
                     long long p = 0);

/* truncated Hochschild homology of the face ring */
BettiTable hh_free_loops(const SimplicialPoset& S, int hom_max, int deg_max,
                         long long p = 0);

}  // namespace chalg
