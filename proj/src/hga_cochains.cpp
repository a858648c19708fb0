#include "chalg/hga_cochains.hpp"

#include <stdexcept>

#include "chalg/surjection.hpp"

namespace chalg {

CochainDGA::CochainDGA(const Space& X, int window) : x_(&X), n_(window) {
    if (n_ < 0) throw std::invalid_argument("cochains: window");
    for (int d = 0; d <= n_; ++d) {
        basis_.push_back(X.nondeg_simplices(d));
        index_.emplace_back();
        for (std::size_t i = 0; i < basis_.back().size(); ++i)
            index_.back().emplace(basis_.back()[i], i);
    }
    if (basis_[0].size() != 1)
        throw std::invalid_argument("cochains: space must have one vertex");
}

std::size_t CochainDGA::rank(int deg) const {
    return (deg >= 0 && deg <= n_) ? basis_[(std::size_t)deg].size() : 0;
}

const Simplex& CochainDGA::simplex(const ALetter& a) const {
    return basis_.at((std::size_t)a.first).at(a.second);
}

Cochain CochainDGA::to_cochain(const AElt& e, int deg) const {
    Cochain co;
    co.deg = deg;
    for (const auto& [a, v] : e.t) {
        if (a.first != deg)
            throw std::invalid_argument("cochains: inhomogeneous element");
        add_term(co, simplex(a), v);
    }
    return co;
}

AElt CochainDGA::from_cochain(const Cochain& co) const {
    if (co.deg < 0 || (co.deg > n_ && !co.zero()))
        throw TruncationError("cochains: value beyond window");
    AElt out;
    for (const auto& [x, v] : co.c)
        add_term(out, {co.deg, index_[(std::size_t)co.deg].at(x)}, v);
    return out;
}

AElt CochainDGA::diff(const ALetter& a) const {
    if (a.first + 1 > n_)
        throw TruncationError("cochains: coboundary beyond window");
    return from_cochain(coboundary(*x_, to_cochain(elt_of(a), a.first)));
}

AElt CochainDGA::mul(const ALetter& a, const ALetter& b) const {
    if (a.first + b.first > n_)
        throw TruncationError("cochains: product beyond window");
    return from_cochain(cup(*x_, to_cochain(elt_of(a), a.first),
                            to_cochain(elt_of(b), b.first)));
}

HGA cochain_hga(const CochainDGA& A) {
    HGA h;
    h.A = &A;
    h.trivial = false;
    h.e = [&A](const ALetter& a, const std::vector<ALetter>& bs) {
        std::vector<Cochain> cs;
        for (const ALetter& b : bs)
            cs.push_back(A.to_cochain(elt_of(b), b.first));
        Cochain v = ek(A.space(), A.to_cochain(elt_of(a), a.first), cs);
        return A.from_cochain(v);
    };
    return h;
}

}  // namespace chalg
