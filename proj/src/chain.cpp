#include "chalg/chain.hpp"

#include <sstream>

namespace chalg {

/******** Chain ********/

void add_term(Chain& ch, const Simplex& x, const Int& c) {
    if (c == 0 || !x.nondeg()) return;
    auto it = ch.t.find(x);
    if (it == ch.t.end()) {
        ch.t.emplace(x, c);
    } else {
        it->second += c;
        if (it->second == 0) ch.t.erase(it);
    }
}

Chain chain_of(const Simplex& x, const Int& c) {
    Chain ch;
    add_term(ch, x, c);
    return ch;
}

Chain& Chain::operator+=(const Chain& o) {
    for (auto& [x, c] : o.t) add_term(*this, x, c);
    return *this;
}
Chain& Chain::operator-=(const Chain& o) {
    for (auto& [x, c] : o.t) add_term(*this, x, -c);
    return *this;
}
Chain& Chain::operator*=(const Int& c) {
    if (c == 0) {
        t.clear();
        return *this;
    }
    for (auto& [x, v] : t) v *= c;
    return *this;
}
Chain operator+(Chain a, const Chain& b) { return a += b; }
Chain operator-(Chain a, const Chain& b) { return a -= b; }
Chain operator*(const Int& c, Chain a) { return a *= c; }

Chain boundary(const Simplex& x) {
    Chain out;
    if (x.dim == 0) return out;
    for (int i = 0; i <= x.dim; ++i)
        add_term(out, face(x, i), (i % 2 == 0) ? 1 : -1);
    return out;
}

Chain boundary(const Chain& ch) {
    Chain out;
    for (auto& [x, c] : ch.t) {
        if (x.dim == 0) continue;
        for (int i = 0; i <= x.dim; ++i)
            add_term(out, face(x, i), (i % 2 == 0) ? c : -c);
    }
    return out;
}

Chain pushforward(const Chain& ch,
                  const std::function<Simplex(const Simplex&)>& f) {
    Chain out;
    for (auto& [x, c] : ch.t) add_term(out, f(x), c);
    return out;
}

std::string chain_str(const Chain& ch) {
    if (ch.t.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [x, c] : ch.t) {
        if (c > 0 && !first) os << " + ";
        if (c < 0) os << (first ? "-" : " - ");
        Int a = abs_of(c);
        if (a != 1) os << a.str() << "*";
        os << simplex_str(x);
        first = false;
    }
    return os.str();
}

/******** TensorChain ********/

int tensor_term_degree(const std::vector<Simplex>& xs) {
    int d = 0;
    for (auto& x : xs) d += x.dim;
    return d;
}

void add_term(TensorChain& ch, const std::vector<Simplex>& xs, const Int& c) {
    if (c == 0) return;
    for (auto& x : xs)
        if (!x.nondeg()) return;
    auto it = ch.t.find(xs);
    if (it == ch.t.end()) {
        ch.t.emplace(xs, c);
    } else {
        it->second += c;
        if (it->second == 0) ch.t.erase(it);
    }
}

TensorChain& TensorChain::operator+=(const TensorChain& o) {
    for (auto& [x, c] : o.t) add_term(*this, x, c);
    return *this;
}
TensorChain& TensorChain::operator-=(const TensorChain& o) {
    for (auto& [x, c] : o.t) add_term(*this, x, -c);
    return *this;
}
TensorChain& TensorChain::operator*=(const Int& c) {
    if (c == 0) {
        t.clear();
        return *this;
    }
    for (auto& [x, v] : t) v *= c;
    return *this;
}
TensorChain operator+(TensorChain a, const TensorChain& b) { return a += b; }
TensorChain operator-(TensorChain a, const TensorChain& b) { return a -= b; }
TensorChain operator*(const Int& c, TensorChain a) { return a *= c; }

TensorChain tensor_of(const Chain& a) {
    TensorChain out;
    for (auto& [x, c] : a.t) add_term(out, {x}, c);
    return out;
}

TensorChain tensor(const TensorChain& a, const Chain& b) {
    TensorChain out;
    for (auto& [xs, c] : a.t)
        for (auto& [y, d] : b.t) {
            auto v = xs;
            v.push_back(y);
            add_term(out, v, c * d);
        }
    return out;
}

TensorChain tensor(const Chain& a, const Chain& b) {
    return tensor(tensor_of(a), b);
}

TensorChain tensor(const TensorChain& a, const TensorChain& b) {
    TensorChain out;
    for (auto& [xs, c] : a.t)
        for (auto& [ys, d] : b.t) {
            auto v = xs;
            v.insert(v.end(), ys.begin(), ys.end());
            add_term(out, v, c * d);
        }
    return out;
}

TensorChain apply_slot(const TensorChain& ch, size_t slot, int deg,
                       const std::function<Chain(const Simplex&)>& f) {
    TensorChain out;
    for (auto& [xs, c] : ch.t) {
        int before = 0;
        for (size_t i = 0; i < slot; ++i) before += xs[i].dim;
        int sgn = sign_pow((long long)deg * before);
        Chain img = f(xs[slot]);
        for (auto& [y, d] : img.t) {
            auto v = xs;
            v[slot] = y;
            add_term(out, v, c * d * sgn);
        }
    }
    return out;
}

TensorChain permute_slots(const TensorChain& ch,
                          const std::vector<size_t>& perm) {
    TensorChain out;
    for (auto& [xs, c] : ch.t) {
        std::vector<Simplex> v(xs.size());
        for (size_t i = 0; i < perm.size(); ++i) v[i] = xs[perm[i]];
        /* Koszul sign: count transpositions of the straightening */
        long long s = 0;
        for (size_t i = 0; i < perm.size(); ++i)
            for (size_t j = i + 1; j < perm.size(); ++j)
                if (perm[i] > perm[j])
                    s += (long long)xs[perm[i]].dim * xs[perm[j]].dim;
        add_term(out, v, c * sign_pow(s));
    }
    return out;
}

TensorChain boundary(const TensorChain& ch) {
    TensorChain out;
    for (auto& [xs, c] : ch.t) {
        int before = 0;
        for (size_t slot = 0; slot < xs.size(); ++slot) {
            if (xs[slot].dim > 0) {
                Chain b = boundary(xs[slot]);
                int sgn = sign_pow(before);
                for (auto& [y, d] : b.t) {
                    auto v = xs;
                    v[slot] = y;
                    add_term(out, v, c * d * sgn);
                }
            }
            before += xs[slot].dim;
        }
    }
    return out;
}

std::string tensor_chain_str(const TensorChain& ch) {
    if (ch.t.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [xs, c] : ch.t) {
        if (c > 0 && !first) os << " + ";
        if (c < 0) os << (first ? "-" : " - ");
        Int a = abs_of(c);
        if (a != 1) os << a.str() << "*";
        for (size_t i = 0; i < xs.size(); ++i) {
            if (i) os << "(x)";
            os << simplex_str(xs[i]);
        }
        first = false;
    }
    return os.str();
}

/******** AW diagonal, shuffles ********/

TensorChain aw_diagonal(const Simplex& x) {
    TensorChain out;
    for (int r = 0; r <= x.dim; ++r) {
        Monotone front, back;
        for (int i = 0; i <= r; ++i) front.push_back(i);
        for (int i = r; i <= x.dim; ++i) back.push_back(i);
        add_term(out, {act(x, front), act(x, back)}, 1);
    }
    return out;
}

TensorChain aw_diagonal(const Chain& ch) {
    TensorChain out;
    for (auto& [x, c] : ch.t) out += c * aw_diagonal(x);
    return out;
}

std::vector<ShufflePair> shuffles(int p, int q) {
    std::vector<ShufflePair> out;
    int n = p + q;
    /* choose the positions (1..n) where lambda increases */
    std::vector<int> pos;
    std::function<void(int)> rec = [&](int from) {
        if ((int)pos.size() == p) {
            ShufflePair sp;
            sp.lambda.assign(n + 1, 0);
            sp.mu.assign(n + 1, 0);
            std::vector<char> inc(n + 1, 0);
            for (int x : pos) inc[x] = 1;
            int a = 0, b = 0;
            for (int i = 1; i <= n; ++i) {
                if (inc[i])
                    ++a;
                else
                    ++b;
                sp.lambda[i] = a;
                sp.mu[i] = b;
            }
            /* sign: inversions between lambda-steps and mu-steps */
            long long inv = 0;
            for (int i = 1; i <= n; ++i)
                if (!inc[i])
                    for (int j = i + 1; j <= n; ++j)
                        if (inc[j]) ++inv;
            sp.sign = sign_pow(inv);
            out.push_back(sp);
            return;
        }
        for (int x = from; x <= n; ++x) {
            pos.push_back(x);
            rec(x + 1);
            pos.pop_back();
        }
    };
    rec(1);
    return out;
}

Chain shuffle_map(const Chain& a, const Chain& b, const NaryProduct& target) {
    Chain out;
    for (auto& [x, cx] : a.t)
        for (auto& [y, cy] : b.t) {
            for (const ShufflePair& sp : shuffles(x.dim, y.dim)) {
                Simplex xs = act(x, sp.lambda);
                Simplex ys = act(y, sp.mu);
                std::vector<Simplex> comps;
                auto push_comps = [&](const Simplex& s) {
                    auto fs = product_factors(s.space);
                    if (fs.size() == 1) {
                        comps.push_back(s);
                    } else {
                        auto* pr = dynamic_cast<const NaryProduct*>(s.space);
                        for (size_t v = 0; v < fs.size(); ++v)
                            comps.push_back(pr->component(s, v));
                    }
                };
                push_comps(xs);
                push_comps(ys);
                add_term(out, target.make(comps), cx * cy * sp.sign);
            }
        }
    return out;
}

Chain pair_chains(
    const Chain& a, const Chain& b,
    const std::function<Simplex(const Simplex&, const Simplex&)>& pairing) {
    Chain out;
    for (auto& [x, cx] : a.t)
        for (auto& [y, cy] : b.t)
            for (const ShufflePair& sp : shuffles(x.dim, y.dim))
                add_term(out, pairing(act(x, sp.lambda), act(y, sp.mu)),
                         cx * cy * sp.sign);
    return out;
}

Chain pontryagin(const Chain& a, const Chain& b, const GroupOps& g) {
    return pair_chains(a, b, [&g](const Simplex& x, const Simplex& y) {
        return g.mult(x, y);
    });
}

/******** cochains ********/

void add_term(Cochain& co, const Simplex& x, const Int& v) {
    if (v == 0) return;
    if (x.dim != co.deg)
        throw std::invalid_argument("cochain term of wrong degree");
    auto it = co.c.find(x);
    if (it == co.c.end()) {
        co.c.emplace(x, v);
    } else {
        it->second += v;
        if (it->second == 0) co.c.erase(it);
    }
}

Int ev(const Cochain& co, const Simplex& x) {
    auto it = co.c.find(x);
    return it == co.c.end() ? Int(0) : it->second;
}

Int ev(const Cochain& co, const Chain& ch) {
    Int s = 0;
    for (auto& [x, c] : ch.t)
        if (x.dim == co.deg) s += c * ev(co, x);
    return s;
}

Cochain coboundary(const Space& X, const Cochain& co) {
    Cochain out;
    out.deg = co.deg + 1;
    int sgn = -sign_pow(co.deg);
    for (const Simplex& x : X.nondeg_simplices(co.deg + 1)) {
        Int v = ev(co, boundary(x));
        if (v != 0) add_term(out, x, sgn * v);
    }
    return out;
}

Int ev_tensor(const std::vector<Cochain>& cos, const TensorChain& ch) {
    Int total = 0;
    for (auto& [xs, c] : ch.t) {
        if (xs.size() != cos.size()) throw std::invalid_argument("ev_tensor");
        Int prod = c;
        long long sgn = 0;
        int suffix = 0;
        for (auto& co : cos) suffix += co.deg;
        for (size_t j = 0; j < xs.size() && prod != 0; ++j) {
            suffix -= cos[j].deg;
            sgn += (long long)suffix * xs[j].dim;
            prod *= ev(cos[j], xs[j]);
        }
        if (prod != 0) total += prod * sign_pow(sgn);
    }
    return total;
}

}  // namespace chalg
