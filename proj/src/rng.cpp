#include "chalg/rng.hpp"

#include "chalg/bundle.hpp"

namespace chalg {

Simplex random_simplex(Rng& rng, const Space& X, int dim) {
    int a;
    if (X.enumerable()) {
        std::vector<int> dims;
        for (int d = 0; d <= dim; ++d)
            if (!X.nondeg_simplices(d).empty()) dims.push_back(d);
        if (dims.empty())
            throw std::runtime_error("random_simplex: empty space");
        a = dims[(size_t)rng.range(0, (long long)dims.size() - 1)];
    } else {
        a = (int)rng.range(0, dim);
    }
    Simplex b = random_nondeg(rng, X, a);
    /* random strictly decreasing word of length dim-a in [0..dim-1] */
    std::vector<int> pool(dim);
    for (int i = 0; i < dim; ++i) pool[i] = i;
    std::vector<int> word;
    for (int k = 0; k < dim - a; ++k) {
        int j = (int)rng.range(0, (long long)pool.size() - 1);
        word.push_back(pool[j]);
        pool.erase(pool.begin() + j);
    }
    std::sort(word.begin(), word.end());
    for (int w : word) b = degenerate(b, w);
    return b;
}

Simplex random_nondeg(Rng& rng, const Space& X, int dim) {
    if (dim < 0) throw std::invalid_argument("random_nondeg: dim < 0");
    if (auto* bz = dynamic_cast<const BarInt*>(&X)) {
        std::vector<long long> t(dim);
        for (auto& v : t) {
            do {
                v = rng.range(-3, 3);
            } while (v == 0);
        }
        return bz->make(t);
    }
    if (auto* w = dynamic_cast<const WSpace*>(&X)) {
        for (int tries = 0; tries < 256; ++tries) {
            std::vector<Simplex> e;
            for (int j = dim; j >= 0; --j)
                e.push_back(random_simplex(rng, *w->group().underlying(), j));
            Simplex x = w->norm_tuple(e);
            if (x.nondeg()) return x;
        }
        throw std::runtime_error("random_nondeg: no nondegenerate W-tuple");
    }
    if (auto* w = dynamic_cast<const WbarSpace*>(&X)) {
        for (int tries = 0; tries < 256; ++tries) {
            std::vector<Simplex> e;
            for (int j = dim - 1; j >= 0; --j)
                e.push_back(random_simplex(rng, *w->group().underlying(), j));
            Simplex x = w->norm_tuple(e);
            if (x.nondeg()) return x;
        }
        throw std::runtime_error("random_nondeg: no nondegenerate Wbar-tuple");
    }
    if (auto* p = dynamic_cast<const NaryProduct*>(&X)) {
        if (!p->enumerable()) {
            for (int tries = 0; tries < 256; ++tries) {
                std::vector<Simplex> comps;
                for (auto* f : p->factors())
                    comps.push_back(random_simplex(rng, *f, dim));
                Simplex x = p->make(comps);
                if (x.nondeg()) return x;
            }
            throw std::runtime_error("random_nondeg: no nondegenerate tuple");
        }
    }
    auto list = X.nondeg_simplices(dim);
    if (list.empty())
        throw std::runtime_error("random_nondeg: no simplices in dim " +
                                 std::to_string(dim));
    return list[(size_t)rng.range(0, (long long)list.size() - 1)];
}

Cochain random_cochain(Rng& rng, const Space& X, int deg, long long bound) {
    Cochain co;
    co.deg = deg;
    for (const Simplex& x : X.nondeg_simplices(deg))
        add_term(co, x, Int(rng.range(-bound, bound)));
    return co;
}

}  // namespace chalg
