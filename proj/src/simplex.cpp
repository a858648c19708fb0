#include "chalg/simplex.hpp"

#include <sstream>

namespace chalg {

Simplex degenerate(const Simplex& x, int i) {
    if (i < 0 || i > x.dim) throw std::out_of_range("degenerate: bad index");
    Simplex r = x;
    r.dim += 1;
    /* push s_i inward: s_i s_j = s_{j+1} s_i for i <= j */
    size_t pos = 0;
    while (pos < r.word.size() && i <= r.word[pos]) {
        r.word[pos] += 1;
        ++pos;
    }
    r.word.insert(r.word.begin() + pos, i);
    return r;
}

Simplex degenerate_to(const Simplex& x, int dim) {
    Simplex r = x;
    while (r.dim < dim) r = degenerate(r, r.dim);
    return r;
}

Simplex face(const Simplex& x, int i) {
    if (x.dim == 0) throw std::out_of_range("face of a 0-simplex");
    if (x.nondeg()) return x.space->face_nondeg(x, i);
    return act(x, mono_delta(x.dim, i));
}

Simplex act(const Simplex& x, const Monotone& nu) {
    if (nu.empty() || !weakly_increasing(nu) || nu.front() < 0 ||
        nu.back() > x.dim)
        throw std::invalid_argument("act: bad monotone map");

    /* compose with the degeneracy word of x */
    Monotone mu;
    if (x.word.empty()) {
        mu = nu;
    } else {
        Monotone sig = mono_from_word(x.dim, x.word);
        mu = mono_compose(sig, nu);
    }

    MonoFactorization f = mono_factor(mu);

    /* base' = base restricted along the injective part */
    Simplex base = x;
    base.word.clear();
    base.dim = x.base_dim();
    if ((int)f.injective.size() != base.dim + 1) {
        /* apply missing faces, largest index first */
        std::vector<char> keep(base.dim + 1, 0);
        for (int v : f.injective) keep[v] = 1;
        Simplex y = base;
        for (int m = base.dim; m >= 0; --m) {
            if (!keep[m]) y = face(y, m);
        }
        base = y;
    }

    /* re-apply the collapse word, innermost (smallest) first */
    Simplex r = base;
    for (auto it = f.word.rbegin(); it != f.word.rend(); ++it)
        r = degenerate(r, *it);
    return r;
}

Simplex apply_simplicial(const Simplex& x,
                         const std::function<Simplex(const Simplex&)>& f) {
    if (x.nondeg()) return f(x);
    Simplex base = x;
    base.word.clear();
    base.dim = x.base_dim();
    Simplex r = f(base);
    for (auto it = x.word.rbegin(); it != x.word.rend(); ++it)
        r = degenerate(r, *it);
    return r;
}

std::string simplex_str(const Simplex& x) {
    std::ostringstream os;
    if (!x.word.empty()) {
        os << "s[";
        for (size_t i = 0; i < x.word.size(); ++i)
            os << (i ? "," : "") << x.word[i];
        os << "]";
    }
    os << "(";
    bool first = true;
    for (long long l : x.labels) {
        if (!first) os << ",";
        os << l;
        first = false;
    }
    for (const Simplex& p : x.parts) {
        if (!first) os << ",";
        os << simplex_str(p);
        first = false;
    }
    os << ")";
    return os.str();
}

}  // namespace chalg
