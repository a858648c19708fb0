#ifndef CHALG_HGA_COCHAINS_HPP
#define CHALG_HGA_COCHAINS_HPP

#include <map>
#include <vector>

#include "chalg/bar.hpp"
#include "chalg/chain.hpp"

namespace chalg {

/*
 * Normalized cochains of an enumerable space with a single vertex, presented
 * on the dual basis of nondegenerate simplices up to the window.  The unique
 * vertex makes the count augmentation canonical.
 */
class CochainDGA : public PresentedDGA {
public:
    CochainDGA(const Space& X, int window);

    using PresentedDGA::diff;
    using PresentedDGA::mul;

    std::string name() const override { return "cochains"; }
    int window() const override { return n_; }
    std::size_t rank(int deg) const override;
    AElt diff(const ALetter& a) const override;
    AElt mul(const ALetter& a, const ALetter& b) const override;
    bool commutative() const override { return false; }

    const Space& space() const { return *x_; }
    const Simplex& simplex(const ALetter& a) const;
    Cochain to_cochain(const AElt& e, int deg) const;
    AElt from_cochain(const Cochain& co) const;

private:
    const Space* x_;
    int n_;
    std::vector<std::vector<Simplex>> basis_;
    std::vector<std::map<Simplex, std::size_t>> index_;
};

/* interval-cut operations E_k on the cochain algebra */
HGA cochain_hga(const CochainDGA& A);

}  // namespace chalg

#endif
