#pragma once

#include <map>
#include <utility>
#include <vector>

#include "chalg/ints.hpp"

namespace chalg {

/* finite free graded module, given by the degrees of its basis elements */
struct Graded {
    std::vector<int> degs;

    size_t rank() const { return degs.size(); }
    bool operator==(const Graded& o) const { return degs == o.degs; }
};

/* homogeneous map of graded modules; m[(j,i)] is the coefficient of basis
   element j of dst in the image of basis element i of src */
struct GMap {
    int deg = 0;
    Graded src, dst;
    std::map<std::pair<size_t, size_t>, Int> m;

    bool operator==(const GMap& o) const {
        return deg == o.deg && src == o.src && dst == o.dst && m == o.m;
    }
};

GMap gmap(Graded src, Graded dst, int deg);
void set_entry(GMap& f, size_t j, size_t i, const Int& v);
Int entry(const GMap& f, size_t j, size_t i);

GMap identity_map(const Graded& a);
GMap compose(const GMap& f, const GMap& g);  // f after g
GMap operator+(const GMap& f, const GMap& g);
GMap operator-(const GMap& f, const GMap& g);
GMap operator*(const Int& c, GMap f);

/* tensor product of graded modules; index (i,j) -> i*rank(b)+j */
Graded tensor_graded(const Graded& a, const Graded& b);

/* (f (x) g)(x (x) y) = (-1)^{deg g * deg x} f(x) (x) g(y) */
GMap koszul_tensor(const GMap& f, const GMap& g);

/* T: a (x) b -> b (x) a with the Koszul sign */
GMap transposition(const Graded& a, const Graded& b);

/* dual module: same degrees, read cohomologically */
Graded dual_graded(const Graded& a);

/* f -> (gamma -> (-1)^{deg f deg gamma} gamma o f) on dual bases */
GMap transpose(const GMap& f);

/* the pairing-compatible identification (a (x) b)^* -> a^* (x) b^* */
GMap dual_tensor_iso(const Graded& a, const Graded& b);

Graded suspend_graded(const Graded& a);
GMap susp(const Graded& a);    // degree +1, identity coefficients
GMap desusp(const Graded& a);  // degree -1, identity coefficients

/* differential on Hom: d(f) = d_dst o f - (-1)^{deg f} f o d_src */
GMap hom_d(const GMap& d_src, const GMap& d_dst, const GMap& f);

}  // namespace chalg
