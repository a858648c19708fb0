#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "chalg/monotone.hpp"

namespace chalg {

class Space;

/*
 * A simplex in Eilenberg-Zilber normal form: a strictly decreasing degeneracy
 * word applied to a nondegenerate base.  The payload of the base is
 * space-specific: `labels` holds integers (vertices of a standard simplex,
 * entries of a B(Z) tuple), `parts` holds child simplices (components of a
 * product, the coordinates of a W(G) tuple).
 *
 * word = (w_1 > w_2 > ... > w_t) means x = s_{w_1} s_{w_2} ... s_{w_t} (base);
 * equivalently the collapse set of the associated monotone surjection is
 * {w_1, ..., w_t}.
 */
struct Simplex {
    const Space* space = nullptr;
    int dim = -1;
    std::vector<int> word;
    std::vector<Simplex> parts;
    std::vector<long long> labels;

    int base_dim() const { return dim - (int)word.size(); }
    bool nondeg() const { return word.empty(); }

    friend int cmp(const Simplex& a, const Simplex& b) {
        if (a.space != b.space)
            return std::less<const Space*>{}(a.space, b.space) ? -1 : 1;
        if (a.dim != b.dim) return a.dim < b.dim ? -1 : 1;
        if (a.word != b.word) return a.word < b.word ? -1 : 1;
        if (a.labels != b.labels) return a.labels < b.labels ? -1 : 1;
        if (a.parts.size() != b.parts.size())
            return a.parts.size() < b.parts.size() ? -1 : 1;
        for (size_t i = 0; i < a.parts.size(); ++i)
            if (int c = cmp(a.parts[i], b.parts[i])) return c;
        return 0;
    }
    bool operator==(const Simplex& o) const { return cmp(*this, o) == 0; }
    bool operator!=(const Simplex& o) const { return cmp(*this, o) != 0; }
    bool operator<(const Simplex& o) const { return cmp(*this, o) < 0; }
};

class Space {
public:
    virtual ~Space() = default;
    virtual std::string name() const = 0;

    /* single face of a nondegenerate simplex; returns normal form */
    virtual Simplex face_nondeg(const Simplex& x, int i) const = 0;

    virtual bool enumerable() const { return false; }
    virtual std::vector<Simplex> nondeg_simplices(int /*dim*/) const {
        throw std::logic_error("space " + name() + " is not enumerable");
    }

    virtual bool has_basepoint() const { return false; }
    virtual Simplex basepoint() const {
        throw std::logic_error("space " + name() + " has no basepoint");
    }
};

/* apply the degeneracy s_i, merging into the normal form */
Simplex degenerate(const Simplex& x, int i);

/* x(nu) for a weakly increasing nu: [0..r] -> [0..dim x] */
Simplex act(const Simplex& x, const Monotone& nu);

/* elementary face d_i */
Simplex face(const Simplex& x, int i);

/* iterated degeneracy of a 0-simplex up to the given dimension */
Simplex degenerate_to(const Simplex& x, int dim);

/* extend a simplicial map given on nondegenerate simplices */
Simplex apply_simplicial(const Simplex& x,
                         const std::function<Simplex(const Simplex&)>& f);

std::string simplex_str(const Simplex& x);

/* owns spaces so that Simplex back-pointers stay valid */
class Arena {
public:
    template <class T, class... Args>
    T* make(Args&&... args) {
        auto p = std::make_unique<T>(std::forward<Args>(args)...);
        T* raw = p.get();
        owned_.push_back(std::move(p));
        return raw;
    }

private:
    std::vector<std::unique_ptr<Space>> owned_;
};

}  // namespace chalg
