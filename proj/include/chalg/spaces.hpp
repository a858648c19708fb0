#pragma once

#include <set>

#include "chalg/simplex.hpp"

namespace chalg {

/******** standard simplices ********/

class StandardSimplex : public Space {
public:
    explicit StandardSimplex(int n) : n_(n) {
        if (n < 0) throw std::invalid_argument("StandardSimplex: n < 0");
    }
    int n() const { return n_; }
    std::string name() const override { return "Delta^" + std::to_string(n_); }

    /* nondegenerate simplex from strictly increasing vertices in [0..n] */
    Simplex make(const std::vector<long long>& verts) const;
    /* the top-dimensional simplex (0,1,...,n) */
    Simplex top() const;

    Simplex face_nondeg(const Simplex& x, int i) const override;
    bool enumerable() const override { return true; }
    std::vector<Simplex> nondeg_simplices(int dim) const override;
    bool has_basepoint() const override { return true; }
    Simplex basepoint() const override { return make({0}); }

private:
    int n_;
};

/******** flattened n-ary products ********/

/*
 * A product of one or more factor spaces.  Products of products are flattened
 * by the caller (see product_factors), so re-association is the identity.
 * A q-simplex is a tuple of q-simplices of the factors, jointly
 * nondegenerate: the intersection of the collapse sets is empty.
 */
class NaryProduct : public Space {
public:
    explicit NaryProduct(std::vector<const Space*> factors);
    const std::vector<const Space*>& factors() const { return factors_; }
    std::string name() const override;

    /* normal form of a tuple of components (all of dimension q) */
    Simplex make(const std::vector<Simplex>& comps) const;
    /* the v-th component of any simplex, with the top word reapplied */
    Simplex component(const Simplex& x, size_t v) const;

    Simplex face_nondeg(const Simplex& x, int i) const override;
    bool enumerable() const override;
    std::vector<Simplex> nondeg_simplices(int dim) const override;
    bool has_basepoint() const override;
    Simplex basepoint() const override;

private:
    std::vector<const Space*> factors_;
};

/* factor list of a space: its own factors for a product, else {x} */
std::vector<const Space*> product_factors(const Space* x);

/* all (possibly degenerate) q-simplices of an enumerable space */
std::vector<Simplex> all_simplices(const Space& X, int q);

/******** simplicial groups ********/

/* group structure carried by a Space; simplices of equal dimension form a
   group, faces and degeneracies are homomorphisms */
class GroupOps {
public:
    virtual ~GroupOps() = default;
    virtual const Space* underlying() const = 0;
    virtual Simplex identity(int dim) const = 0;
    virtual Simplex mult(const Simplex& a, const Simplex& b) const = 0;
    virtual Simplex inverse(const Simplex& a) const = 0;
};

/* constant simplicial group Z/m (m >= 1; m = 1 gives the trivial group) */
class ConstantGroup : public Space, public GroupOps {
public:
    explicit ConstantGroup(long long m) : m_(m) {
        if (m < 1) throw std::invalid_argument("ConstantGroup: m < 1");
    }
    long long modulus() const { return m_; }
    std::string name() const override { return "Z/" + std::to_string(m_); }

    Simplex make(long long g, int dim = 0) const;

    Simplex face_nondeg(const Simplex& x, int i) const override;
    bool enumerable() const override { return true; }
    std::vector<Simplex> nondeg_simplices(int dim) const override;
    bool has_basepoint() const override { return true; }
    Simplex basepoint() const override { return make(0); }

    const Space* underlying() const override { return this; }
    Simplex identity(int dim) const override { return make(0, dim); }
    Simplex mult(const Simplex& a, const Simplex& b) const override;
    Simplex inverse(const Simplex& a) const override;

private:
    long long m_;
};

/*
 * B(Z), the simplicial circle: p-simplices are integer p-tuples, faces drop
 * the first entry, add adjacent entries, drop the last entry; degeneracies
 * insert 0.  Levelwise addition makes it a simplicial abelian group.
 */
class BarInt : public Space, public GroupOps {
public:
    BarInt() = default;
    std::string name() const override { return "B(Z)"; }

    /* normal form of a full integer tuple (length = dimension) */
    Simplex make(const std::vector<long long>& tuple) const;
    /* full tuple of a normal-form simplex */
    std::vector<long long> full_tuple(const Simplex& x) const;
    /* the loop (a), a 1-simplex */
    Simplex loop(long long a) const { return make({a}); }

    Simplex face_nondeg(const Simplex& x, int i) const override;
    bool has_basepoint() const override { return true; }
    Simplex basepoint() const override { return make({}); }

    const Space* underlying() const override { return this; }
    Simplex identity(int dim) const override;
    Simplex mult(const Simplex& a, const Simplex& b) const override;
    Simplex inverse(const Simplex& a) const override;
};

/* componentwise group structure on a flattened product of groups */
class ProductGroup : public NaryProduct, public GroupOps {
public:
    explicit ProductGroup(std::vector<const GroupOps*> gs);

    const Space* underlying() const override { return this; }
    Simplex identity(int dim) const override;
    Simplex mult(const Simplex& a, const Simplex& b) const override;
    Simplex inverse(const Simplex& a) const override;

private:
    std::vector<const GroupOps*> gs_;
    static std::vector<const Space*> spaces_of(
        const std::vector<const GroupOps*>& gs);
};

}  // namespace chalg
