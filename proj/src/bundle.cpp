#include "chalg/bundle.hpp"

namespace chalg {

/******** WSpace ********/

std::vector<Simplex> WSpace::face_raw(const std::vector<Simplex>& e,
                                      int i) const {
    int p = (int)e.size() - 1;
    if (i < 0 || i > p) throw std::out_of_range("WSpace::face_raw");
    std::vector<Simplex> out;
    if (i < p) {
        for (int j = 0; j <= i; ++j) out.push_back(face(e[j], i - j));
        out[i] = g_.mult(out[i], e[i + 1]);
        for (int j = i + 2; j <= p; ++j) out.push_back(e[j]);
    } else {
        for (int j = 0; j <= p - 1; ++j) out.push_back(face(e[j], p - j));
    }
    return out;
}

std::vector<Simplex> WSpace::degeneracy_raw(const std::vector<Simplex>& e,
                                            int i) const {
    int p = (int)e.size() - 1;
    if (i < 0 || i > p) throw std::out_of_range("WSpace::degeneracy_raw");
    std::vector<Simplex> out;
    for (int j = 0; j <= i && j <= p; ++j)
        out.push_back(degenerate(e[j], i - j));
    out.push_back(g_.identity(p - i));
    for (int j = i + 1; j <= p; ++j) out.push_back(e[j]);
    return out;
}

Simplex WSpace::norm_tuple(const std::vector<Simplex>& e) const {
    int p = (int)e.size() - 1;
    for (int i = 0; i < p; ++i) {
        std::vector<Simplex> y = face_raw(e, i);
        if (degeneracy_raw(y, i) == e) return degenerate(norm_tuple(y), i);
    }
    Simplex x;
    x.space = this;
    x.dim = p;
    x.parts = e;
    return x;
}

std::vector<Simplex> WSpace::raw_tuple(const Simplex& x) const {
    std::vector<Simplex> e = x.parts;
    for (auto it = x.word.rbegin(); it != x.word.rend(); ++it)
        e = degeneracy_raw(e, *it);
    return e;
}

Simplex WSpace::face_nondeg(const Simplex& x, int i) const {
    return norm_tuple(face_raw(x.parts, i));
}

std::vector<Simplex> WSpace::nondeg_simplices(int dim) const {
    std::vector<Simplex> out;
    if (dim < 0) return out;
    std::vector<std::vector<Simplex>> pools;
    for (int j = 0; j <= dim; ++j)
        pools.push_back(all_simplices(*g_.underlying(), dim - j));
    std::vector<Simplex> pick(dim + 1);
    std::function<void(int)> rec = [&](int j) {
        if (j == dim + 1) {
            Simplex x = norm_tuple(pick);
            if (x.nondeg()) out.push_back(x);
            return;
        }
        for (const Simplex& s : pools[j]) {
            pick[j] = s;
            rec(j + 1);
        }
    };
    rec(0);
    return out;
}

/******** WbarSpace ********/

std::vector<Simplex> WbarSpace::face_raw(const std::vector<Simplex>& e,
                                         int i) const {
    int p = (int)e.size();
    if (i < 0 || i > p) throw std::out_of_range("WbarSpace::face_raw");
    std::vector<Simplex> out;
    if (i == 0) {
        out.assign(e.begin() + 1, e.end());
    } else if (i < p) {
        for (int j = 0; j <= i - 1; ++j) out.push_back(face(e[j], i - 1 - j));
        out[i - 1] = g_.mult(out[i - 1], e[i]);
        for (int j = i + 1; j <= p - 1; ++j) out.push_back(e[j]);
    } else {
        for (int j = 0; j <= p - 2; ++j) out.push_back(face(e[j], p - 1 - j));
    }
    return out;
}

std::vector<Simplex> WbarSpace::degeneracy_raw(const std::vector<Simplex>& e,
                                               int i) const {
    int p = (int)e.size();
    if (i < 0 || i > p) throw std::out_of_range("WbarSpace::degeneracy_raw");
    std::vector<Simplex> out;
    for (int j = 0; j <= i - 1; ++j) out.push_back(degenerate(e[j], i - 1 - j));
    out.push_back(g_.identity(p - i));
    for (int j = i; j <= p - 1; ++j) out.push_back(e[j]);
    return out;
}

Simplex WbarSpace::norm_tuple(const std::vector<Simplex>& e) const {
    int p = (int)e.size();
    for (int i = 0; i < p; ++i) {
        std::vector<Simplex> y = face_raw(e, i);
        if (degeneracy_raw(y, i) == e) return degenerate(norm_tuple(y), i);
    }
    Simplex x;
    x.space = this;
    x.dim = p;
    x.parts = e;
    return x;
}

std::vector<Simplex> WbarSpace::raw_tuple(const Simplex& x) const {
    std::vector<Simplex> e = x.parts;
    for (auto it = x.word.rbegin(); it != x.word.rend(); ++it)
        e = degeneracy_raw(e, *it);
    return e;
}

Simplex WbarSpace::face_nondeg(const Simplex& x, int i) const {
    return norm_tuple(face_raw(x.parts, i));
}

std::vector<Simplex> WbarSpace::nondeg_simplices(int dim) const {
    std::vector<Simplex> out;
    if (dim < 0) return out;
    std::vector<std::vector<Simplex>> pools;
    for (int j = 0; j < dim; ++j)
        pools.push_back(all_simplices(*g_.underlying(), dim - 1 - j));
    std::vector<Simplex> pick(dim);
    std::function<void(int)> rec = [&](int j) {
        if (j == dim) {
            Simplex x = norm_tuple(pick);
            if (x.nondeg()) out.push_back(x);
            return;
        }
        for (const Simplex& s : pools[j]) {
            pick[j] = s;
            rec(j + 1);
        }
    };
    rec(0);
    return out;
}

/******** bundles ********/

UniversalBundle universal_bundle(Arena& arena, const GroupOps& g) {
    auto* total = arena.make<WSpace>(g);
    auto* base = arena.make<WbarSpace>(g);
    UniversalBundle b;
    b.total = total;
    b.base = base;
    b.group = &g;
    b.e0 = total->basepoint();
    b.proj = [total, base](const Simplex& x) {
        return apply_simplicial(x, [total, base](const Simplex& e) {
            std::vector<Simplex> t(e.parts.begin() + 1, e.parts.end());
            return base->norm_tuple(t);
        });
    };
    b.S = [total, &g](const Simplex& x) {
        std::vector<Simplex> e = total->raw_tuple(x);
        std::vector<Simplex> out;
        out.push_back(g.identity(x.dim + 1));
        for (auto& s : e) out.push_back(s);
        return total->norm_tuple(out);
    };
    b.act_g = [total, &g](const Simplex& gg, const Simplex& x) {
        std::vector<Simplex> e = total->raw_tuple(x);
        e[0] = g.mult(gg, e[0]);
        return total->norm_tuple(e);
    };
    return b;
}

UniversalBundle product_bundle(Arena& arena,
                               std::vector<UniversalBundle> factors) {
    if (factors.empty())
        throw std::invalid_argument("product_bundle: no factors");
    std::vector<const Space*> tots, bases;
    std::vector<const GroupOps*> gs;
    for (auto& f : factors) {
        tots.push_back(f.total);
        bases.push_back(f.base);
        gs.push_back(f.group);
    }
    auto* total = arena.make<NaryProduct>(tots);
    auto* base = arena.make<NaryProduct>(bases);
    auto* group = arena.make<ProductGroup>(gs);
    size_t n = factors.size();
    auto fs = std::make_shared<std::vector<UniversalBundle>>(
        std::move(factors));

    UniversalBundle b;
    b.total = total;
    b.base = base;
    b.group = group;
    {
        std::vector<Simplex> comps;
        for (auto& f : *fs) comps.push_back(f.e0);
        b.e0 = total->make(comps);
    }
    b.proj = [total, base, fs, n](const Simplex& x) {
        std::vector<Simplex> comps(n);
        for (size_t v = 0; v < n; ++v)
            comps[v] = (*fs)[v].proj(total->component(x, v));
        return base->make(comps);
    };
    b.S = [total, fs, n](const Simplex& x) {
        std::vector<Simplex> comps(n);
        for (size_t v = 0; v < n; ++v)
            comps[v] = (*fs)[v].S(total->component(x, v));
        return total->make(comps);
    };
    b.act_g = [total, group, fs, n](const Simplex& gg, const Simplex& x) {
        std::vector<Simplex> comps(n);
        for (size_t v = 0; v < n; ++v)
            comps[v] = (*fs)[v].act_g(group->component(gg, v),
                                      total->component(x, v));
        return total->make(comps);
    };
    return b;
}

UniversalBundle torus_bundle(Arena& arena, int n) {
    if (n < 1) throw std::invalid_argument("torus_bundle: n < 1");
    std::vector<UniversalBundle> fs;
    for (int i = 0; i < n; ++i) {
        auto* c = arena.make<BarInt>();
        fs.push_back(universal_bundle(arena, *c));
    }
    return product_bundle(arena, std::move(fs));
}

}  // namespace chalg
