#include "chalg/spaces.hpp"

#include <algorithm>

namespace chalg {

/******** StandardSimplex ********/

Simplex StandardSimplex::make(const std::vector<long long>& verts) const {
    if (verts.empty()) throw std::invalid_argument("empty vertex list");
    for (size_t i = 0; i < verts.size(); ++i) {
        if (verts[i] < 0 || verts[i] > n_)
            throw std::invalid_argument("vertex out of range");
        if (i && verts[i] <= verts[i - 1])
            throw std::invalid_argument("vertices must strictly increase");
    }
    Simplex x;
    x.space = this;
    x.dim = (int)verts.size() - 1;
    x.labels = verts;
    return x;
}

Simplex StandardSimplex::top() const {
    std::vector<long long> v(n_ + 1);
    for (int i = 0; i <= n_; ++i) v[i] = i;
    return make(v);
}

Simplex StandardSimplex::face_nondeg(const Simplex& x, int i) const {
    Simplex r = x;
    r.labels.erase(r.labels.begin() + i);
    r.dim -= 1;
    return r;
}

std::vector<Simplex> StandardSimplex::nondeg_simplices(int dim) const {
    std::vector<Simplex> out;
    if (dim < 0 || dim > n_) return out;
    std::vector<long long> pick;
    std::function<void(int)> rec = [&](int from) {
        if ((int)pick.size() == dim + 1) {
            out.push_back(make(pick));
            return;
        }
        for (int v = from; v <= n_; ++v) {
            pick.push_back(v);
            rec(v + 1);
            pick.pop_back();
        }
    };
    rec(0);
    return out;
}

/******** NaryProduct ********/

NaryProduct::NaryProduct(std::vector<const Space*> factors)
    : factors_(std::move(factors)) {
    if (factors_.empty())
        throw std::invalid_argument("NaryProduct: no factors");
}

std::string NaryProduct::name() const {
    std::string s;
    for (size_t i = 0; i < factors_.size(); ++i) {
        if (i) s += " x ";
        s += factors_[i]->name();
    }
    return s;
}

std::vector<const Space*> product_factors(const Space* x) {
    if (auto* p = dynamic_cast<const NaryProduct*>(x)) return p->factors();
    return {x};
}

Simplex NaryProduct::make(const std::vector<Simplex>& comps) const {
    if (comps.size() != factors_.size())
        throw std::invalid_argument("make: wrong number of components");
    int q = comps[0].dim;
    for (size_t v = 0; v < comps.size(); ++v) {
        if (comps[v].dim != q)
            throw std::invalid_argument("make: mixed dimensions");
        if (comps[v].space != factors_[v])
            throw std::invalid_argument("make: component in wrong space");
    }
    std::vector<Simplex> cur = comps;
    std::vector<int> word;
    for (;;) {
        /* common collapse set */
        std::set<int> common(cur[0].word.begin(), cur[0].word.end());
        for (size_t v = 1; v < cur.size() && !common.empty(); ++v) {
            std::set<int> w(cur[v].word.begin(), cur[v].word.end());
            std::set<int> inter;
            std::set_intersection(common.begin(), common.end(), w.begin(),
                                  w.end(), std::inserter(inter, inter.end()));
            common.swap(inter);
        }
        if (common.empty()) break;
        /* section of the collapse surjection: first occurrence of each fiber */
        Monotone sig = mono_from_word(q, std::vector<int>(common.rbegin(),
                                                          common.rend()));
        Monotone delta;
        for (size_t j = 0; j < sig.size(); ++j)
            if (j == 0 || sig[j] != sig[j - 1]) delta.push_back((int)j);
        for (auto& c : cur) c = act(c, delta);
        for (int w : common) word.push_back(w);
        q -= (int)common.size();
    }
    std::sort(word.rbegin(), word.rend());
    Simplex base;
    base.space = this;
    base.dim = q;
    base.parts = cur;
    Simplex r = base;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        r = degenerate(r, *it);
    return r;
}

Simplex NaryProduct::component(const Simplex& x, size_t v) const {
    if (v >= factors_.size()) throw std::out_of_range("component");
    Simplex r = x.parts.empty() ? Simplex{} : x.parts[v];
    if (x.parts.empty()) throw std::invalid_argument("component: no parts");
    for (auto it = x.word.rbegin(); it != x.word.rend(); ++it)
        r = degenerate(r, *it);
    return r;
}

Simplex NaryProduct::face_nondeg(const Simplex& x, int i) const {
    std::vector<Simplex> comps(x.parts.size());
    for (size_t v = 0; v < x.parts.size(); ++v) comps[v] = face(x.parts[v], i);
    return make(comps);
}

bool NaryProduct::enumerable() const {
    for (auto* f : factors_)
        if (!f->enumerable()) return false;
    return true;
}

std::vector<Simplex> all_simplices(const Space& X, int q) {
    std::vector<Simplex> out;
    for (int a = 0; a <= q; ++a) {
        for (const Simplex& b : X.nondeg_simplices(a)) {
            /* choose a strictly decreasing word of length q-a in [0..q-1] */
            std::vector<int> idx;
            std::function<void(int, int)> rec = [&](int from, int need) {
                if (need == 0) {
                    Simplex y = b;
                    /* idx is decreasing; apply smallest first */
                    for (auto it = idx.rbegin(); it != idx.rend(); ++it)
                        y = degenerate(y, *it);
                    if (y.dim != q) throw std::logic_error("all_simplices");
                    out.push_back(y);
                    return;
                }
                for (int w = from; w >= need - 1; --w) {
                    idx.push_back(w);
                    rec(w - 1, need - 1);
                    idx.pop_back();
                }
            };
            rec(q - 1, q - a);
        }
    }
    return out;
}

std::vector<Simplex> NaryProduct::nondeg_simplices(int dim) const {
    std::vector<Simplex> out;
    if (dim < 0) return out;
    std::vector<std::vector<Simplex>> pools;
    for (auto* f : factors_) pools.push_back(all_simplices(*f, dim));
    std::vector<Simplex> pick(factors_.size());
    std::function<void(size_t)> rec = [&](size_t v) {
        if (v == factors_.size()) {
            Simplex x = make(pick);
            if (x.nondeg()) out.push_back(x);
            return;
        }
        for (const Simplex& s : pools[v]) {
            pick[v] = s;
            rec(v + 1);
        }
    };
    rec(0);
    return out;
}

bool NaryProduct::has_basepoint() const {
    for (auto* f : factors_)
        if (!f->has_basepoint()) return false;
    return true;
}

Simplex NaryProduct::basepoint() const {
    std::vector<Simplex> comps;
    for (auto* f : factors_) comps.push_back(f->basepoint());
    return make(comps);
}

/******** ConstantGroup ********/

Simplex ConstantGroup::make(long long g, int dim) const {
    g = ((g % m_) + m_) % m_;
    Simplex x;
    x.space = this;
    x.dim = 0;
    x.labels = {g};
    return degenerate_to(x, dim);
}

Simplex ConstantGroup::face_nondeg(const Simplex&, int) const {
    throw std::logic_error("ConstantGroup: face of a 0-simplex");
}

std::vector<Simplex> ConstantGroup::nondeg_simplices(int dim) const {
    std::vector<Simplex> out;
    if (dim != 0) return out;
    for (long long g = 0; g < m_; ++g) out.push_back(make(g));
    return out;
}

Simplex ConstantGroup::mult(const Simplex& a, const Simplex& b) const {
    if (a.dim != b.dim) throw std::invalid_argument("mult: mixed dimensions");
    return make(a.labels[0] + b.labels[0], a.dim);
}

Simplex ConstantGroup::inverse(const Simplex& a) const {
    return make(-a.labels[0], a.dim);
}

/******** BarInt ********/

Simplex BarInt::make(const std::vector<long long>& tuple) const {
    Simplex base;
    base.space = this;
    std::vector<int> zero_pos;
    for (size_t i = 0; i < tuple.size(); ++i) {
        if (tuple[i] == 0)
            zero_pos.push_back((int)i);
        else
            base.labels.push_back(tuple[i]);
    }
    base.dim = (int)base.labels.size();
    Simplex r = base;
    for (int i : zero_pos) r = degenerate(r, i);
    return r;
}

std::vector<long long> BarInt::full_tuple(const Simplex& x) const {
    std::vector<long long> t(x.dim, 0);
    std::vector<char> is_zero(x.dim, 0);
    for (int w : x.word) is_zero[w] = 1;
    size_t k = 0;
    for (int i = 0; i < x.dim; ++i)
        if (!is_zero[i]) t[i] = x.labels[k++];
    return t;
}

Simplex BarInt::face_nondeg(const Simplex& x, int i) const {
    std::vector<long long> t = x.labels;  // nondegenerate: labels = tuple
    std::vector<long long> r;
    if (i == 0) {
        r.assign(t.begin() + 1, t.end());
    } else if (i == x.dim) {
        r.assign(t.begin(), t.end() - 1);
    } else {
        r.assign(t.begin(), t.end());
        r[i - 1] += r[i];
        r.erase(r.begin() + i);
    }
    return make(r);
}

Simplex BarInt::identity(int dim) const {
    return make(std::vector<long long>(dim, 0));
}

Simplex BarInt::mult(const Simplex& a, const Simplex& b) const {
    if (a.dim != b.dim) throw std::invalid_argument("mult: mixed dimensions");
    std::vector<long long> ta = full_tuple(a), tb = full_tuple(b);
    for (int i = 0; i < a.dim; ++i) ta[i] += tb[i];
    return make(ta);
}

Simplex BarInt::inverse(const Simplex& a) const {
    std::vector<long long> t = full_tuple(a);
    for (auto& v : t) v = -v;
    return make(t);
}

/******** ProductGroup ********/

std::vector<const Space*> ProductGroup::spaces_of(
    const std::vector<const GroupOps*>& gs) {
    std::vector<const Space*> s;
    for (auto* g : gs) s.push_back(g->underlying());
    return s;
}

ProductGroup::ProductGroup(std::vector<const GroupOps*> gs)
    : NaryProduct(spaces_of(gs)), gs_(std::move(gs)) {}

Simplex ProductGroup::identity(int dim) const {
    std::vector<Simplex> comps;
    for (auto* g : gs_) comps.push_back(g->identity(dim));
    return make(comps);
}

Simplex ProductGroup::mult(const Simplex& a, const Simplex& b) const {
    std::vector<Simplex> comps;
    for (size_t v = 0; v < gs_.size(); ++v)
        comps.push_back(gs_[v]->mult(component(a, v), component(b, v)));
    return make(comps);
}

Simplex ProductGroup::inverse(const Simplex& a) const {
    std::vector<Simplex> comps;
    for (size_t v = 0; v < gs_.size(); ++v)
        comps.push_back(gs_[v]->inverse(component(a, v)));
    return make(comps);
}

}  // namespace chalg
