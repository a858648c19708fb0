#pragma once

#include <map>
#include <memory>

#include "chalg/facering.hpp"
#include "chalg/torus.hpp"

namespace chalg {

/*
 * The colimit of the coordinate subproducts of a based product space indexed
 * by a simplicial poset.  A nondegenerate simplex is an ambient product
 * simplex tagged by the cell whose vertex set equals its support, the set of
 * coordinates away from the basepoint; faces act on the ambient simplex and
 * retag along the unique lower cell carrying the surviving support.  With one
 * circle classifying space per vertex this is the DJ space of the poset.
 */
class DJSpace : public Space {
public:
    /* one circle classifying space Wbar(B(Z)) per vertex */
    DJSpace(Arena& arena, SimplicialPoset S);
    DJSpace(Arena& arena, SimplicialPoset S,
            std::vector<const Space*> vertex_spaces);

    const SimplicialPoset& poset() const { return S_; }
    const NaryProduct& ambient() const { return *amb_; }
    const Space* vertex_space(int v) const;  // 1-based

    /* coordinates away from the basepoint, 1-based */
    std::vector<int> support(const Simplex& ambient) const;

    /* quotient map of the colimit: tag an ambient simplex by the cell below
       sigma carrying its support; the support must lie in sigma */
    Simplex make(std::size_t sigma, const Simplex& ambient) const;
    Simplex make(std::size_t sigma, const std::vector<Simplex>& comps) const;

    /* the cell carried by a simplex */
    std::size_t tag(const Simplex& x) const;
    Simplex to_ambient(const Simplex& x) const;
    /* the unique representable preimage of an ambient simplex; throws when
       no cell or more than one cell carries the support */
    Simplex from_ambient(const Simplex& ambient) const;

    std::string name() const override;
    Simplex face_nondeg(const Simplex& x, int i) const override;
    bool has_basepoint() const override { return true; }
    Simplex basepoint() const override;

private:
    SimplicialPoset S_;
    std::vector<const Space*> vs_;
    const NaryProduct* amb_ = nullptr;
};

/*
 * Torus formality instances for every cell of a simplicial poset, built over
 * shared per-vertex circle bundles so that coordinatewise inclusions relate
 * the instances at comparable cells.  The per-cell maps f_sigma glue to the
 * formality map of the DJ space; the certificates below are the chain-level
 * content of that statement.
 */
class DJFormality {
public:
    DJFormality(Arena& arena, SimplicialPoset S);

    const SimplicialPoset& poset() const { return S_; }
    DJSpace& space() { return *dj_; }
    const UniversalBundle& circle(int v) const;  // 1-based

    /* the instance over the vertex circles of a cell of rank >= 1 */
    TorusFormality& at(std::size_t sigma);
    /* positions of the vertices of tau among those of sigma, 1-based */
    std::vector<int> coords(std::size_t tau, std::size_t sigma) const;

    /* the compatibility square for tau <= sigma: including f_tau(alpha)
       along the coordinates equals f_sigma on the included exponents */
    bool square(std::size_t tau, std::size_t sigma, const Multi& alpha);

    struct SquareCert {
        std::size_t tau = 0, sigma = 0;
        Multi alpha;
        bool ok = false;
    };
    /* squares for all comparable pairs of cells of rank >= 1 and all
       exponent vectors of degree <= deg_max */
    std::vector<SquareCert> verify_squares(int deg_max);

private:
    Arena* arena_;
    SimplicialPoset S_;
    std::vector<UniversalBundle> circles_;
    DJSpace* dj_ = nullptr;
    std::map<std::size_t, std::unique_ptr<TorusFormality>> inst_;
};

}  // namespace chalg
