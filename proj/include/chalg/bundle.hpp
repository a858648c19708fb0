#pragma once

#include "chalg/spaces.hpp"

namespace chalg {

/*
 * Total space W(G) of the universal G-bundle: a p-simplex is a tuple
 * (g_p, ..., g_0) with g_j in G_j, stored as parts[0..p] of dimensions
 * p, p-1, ..., 0.  Faces apply shifted faces to a prefix and glue the last
 * touched coordinate into the next one by group multiplication; degeneracies
 * insert an identity.  Degeneracy of tuples is detected by the s_i d_i test,
 * so normal forms are exact.
 */
class WSpace : public Space {
public:
    explicit WSpace(const GroupOps& g) : g_(g) {}
    const GroupOps& group() const { return g_; }
    std::string name() const override {
        return "W(" + g_.underlying()->name() + ")";
    }

    std::vector<Simplex> face_raw(const std::vector<Simplex>& e, int i) const;
    std::vector<Simplex> degeneracy_raw(const std::vector<Simplex>& e,
                                        int i) const;
    /* normal form of a raw tuple */
    Simplex norm_tuple(const std::vector<Simplex>& e) const;
    /* raw tuple of any simplex (expands the degeneracy word) */
    std::vector<Simplex> raw_tuple(const Simplex& x) const;

    Simplex face_nondeg(const Simplex& x, int i) const override;
    bool enumerable() const override {
        return g_.underlying()->enumerable();
    }
    std::vector<Simplex> nondeg_simplices(int dim) const override;
    bool has_basepoint() const override { return true; }
    Simplex basepoint() const override {
        return norm_tuple({g_.identity(0)});
    }

private:
    const GroupOps& g_;
};

/* base space W-bar(G): a p-simplex is a tuple (g_{p-1}, ..., g_0) */
class WbarSpace : public Space {
public:
    explicit WbarSpace(const GroupOps& g) : g_(g) {}
    const GroupOps& group() const { return g_; }
    std::string name() const override {
        return "Wbar(" + g_.underlying()->name() + ")";
    }

    std::vector<Simplex> face_raw(const std::vector<Simplex>& e, int i) const;
    std::vector<Simplex> degeneracy_raw(const std::vector<Simplex>& e,
                                        int i) const;
    Simplex norm_tuple(const std::vector<Simplex>& e) const;
    std::vector<Simplex> raw_tuple(const Simplex& x) const;

    Simplex face_nondeg(const Simplex& x, int i) const override;
    bool enumerable() const override {
        return g_.underlying()->enumerable();
    }
    std::vector<Simplex> nondeg_simplices(int dim) const override;
    bool has_basepoint() const override { return true; }
    Simplex basepoint() const override { return norm_tuple({}); }

private:
    const GroupOps& g_;
};

/*
 * A universal bundle: total space with basepoint e0, projection, extra
 * degeneracy S (degree +1, defined on every simplex), and the levelwise left
 * G-action.  Either the generic W(G) construction or a product of bundles.
 */
struct UniversalBundle {
    const Space* total = nullptr;
    const Space* base = nullptr;
    const GroupOps* group = nullptr;
    Simplex e0;
    std::function<Simplex(const Simplex&)> proj;          // simplicial map
    std::function<Simplex(const Simplex&)> S;             // degree +1
    std::function<Simplex(const Simplex&, const Simplex&)> act_g;
};

UniversalBundle universal_bundle(Arena& arena, const GroupOps& g);

/* product of bundles with componentwise projection, S, and action */
UniversalBundle product_bundle(Arena& arena,
                               std::vector<UniversalBundle> factors);

/* the rank-n torus bundle: product of n circle bundles E(B Z) */
UniversalBundle torus_bundle(Arena& arena, int n);

}  // namespace chalg
