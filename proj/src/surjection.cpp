#include "chalg/surjection.hpp"

#include <algorithm>
#include <stdexcept>

#include "chalg/homlin.hpp"
#include "chalg/spaces.hpp"

namespace chalg {

int Surjection::arity() const {
    int l = 0;
    for (int v : u) l = std::max(l, v);
    return l;
}

bool valid_surjection(const std::vector<int>& u) {
    if (u.empty()) return false;
    int l = 0;
    for (int v : u) {
        if (v < 1) return false;
        l = std::max(l, v);
    }
    std::vector<bool> seen((size_t)l + 1, false);
    for (int v : u) seen[(size_t)v] = true;
    for (int s = 1; s <= l; ++s)
        if (!seen[(size_t)s]) return false;
    for (size_t i = 0; i + 1 < u.size(); ++i)
        if (u[i] == u[i + 1]) return false;
    return true;
}

std::vector<Surjection> all_surjections(int l, int deg) {
    std::vector<Surjection> out;
    if (l < 1 || deg < 0) return out;
    int n = l + deg;
    std::vector<int> cur;
    std::function<void()> rec = [&]() {
        if ((int)cur.size() == n) {
            if (valid_surjection(cur) &&
                *std::max_element(cur.begin(), cur.end()) == l)
                out.push_back({cur});
            return;
        }
        for (int v = 1; v <= l; ++v) {
            if (!cur.empty() && cur.back() == v) continue;
            cur.push_back(v);
            rec();
            cur.pop_back();
        }
    };
    rec();
    return out;
}

std::string surjection_str(const Surjection& u) {
    std::string s = "(";
    for (size_t i = 0; i < u.u.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(u.u[i]);
    }
    return s + ")";
}

std::vector<bool> final_positions(const Surjection& u) {
    size_t n = u.u.size();
    std::vector<bool> fin(n, true);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (u.u[j] == u.u[i]) {
                fin[i] = false;
                break;
            }
    return fin;
}

SurjClass classify(const Surjection& u) {
    int l = u.arity();
    std::vector<int> count((size_t)l + 1, 0);
    for (int v : u.u) ++count[(size_t)v];
    SurjClass c;
    int repeated = 0;
    for (int s = 1; s <= l; ++s)
        if (count[(size_t)s] > 1) {
            ++repeated;
            c.repeated_value = s;
        }
    c.biased = repeated <= 1;
    c.strongly_biased = repeated == 1;
    if (repeated == 0) c.repeated_value = 0;
    c.one_biased = c.biased && (repeated == 0 || c.repeated_value == 1);
    c.strongly_one_biased = c.strongly_biased && c.repeated_value == 1;
    return c;
}

void add_term(SurjectionSum& s, const Surjection& u, const Int& c) {
    if (c == 0) return;
    Int& v = s.t[u];
    v += c;
    if (v == 0) s.t.erase(u);
}

/* ---- interval cuts ---- */

TensorChain interval_cut(const Surjection& u, const Simplex& x) {
    int n = u.length(), l = u.arity(), p = x.dim;
    std::vector<bool> fin = final_positions(u);
    /* next occurrence of the same value, 0-based, n if none */
    std::vector<size_t> next((size_t)n, (size_t)n);
    for (size_t i = 0; i < (size_t)n; ++i)
        for (size_t j = i + 1; j < (size_t)n; ++j)
            if (u.u[j] == u.u[i]) {
                next[i] = j;
                break;
            }

    TensorChain out;
    std::vector<int> cuts((size_t)n + 1, 0);
    cuts[(size_t)n] = p;

    auto emit = [&]() {
        /* overlap of consecutive same-value intervals gives a degenerate
           factor; skip the cut outright */
        for (size_t a = 0; a + 1 < (size_t)n; ++a)
            if (next[a] < (size_t)n && cuts[a + 1] == cuts[next[a]]) return;

        int pos_sign = 0;
        for (size_t a = 0; a < (size_t)n; ++a)
            if (!fin[a]) pos_sign += cuts[a + 1];

        /* Koszul sign of stably sorting the intervals by value, with
           interval lengths as degrees */
        int perm_sign = 0;
        for (size_t a = 0; a < (size_t)n; ++a)
            for (size_t b = a + 1; b < (size_t)n; ++b)
                if (u.u[a] > u.u[b]) {
                    int la = cuts[a + 1] - cuts[a] + (fin[a] ? 0 : 1);
                    int lb = cuts[b + 1] - cuts[b] + (fin[b] ? 0 : 1);
                    perm_sign += la * lb;
                }

        std::vector<Simplex> xs((size_t)l);
        for (int s = 1; s <= l; ++s) {
            Monotone nu;
            for (size_t a = 0; a < (size_t)n; ++a) {
                if (u.u[a] != s) continue;
                for (int v = cuts[a]; v <= cuts[a + 1]; ++v) nu.push_back(v);
            }
            xs[(size_t)s - 1] = act(x, nu);
        }
        add_term(out, xs, sign_pow(pos_sign + perm_sign));
    };

    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == (size_t)n) {
            emit();
            return;
        }
        for (int v = cuts[i - 1]; v <= p; ++v) {
            cuts[i] = v;
            rec(i + 1);
        }
    };
    rec(1);
    return out;
}

TensorChain interval_cut(const Surjection& u, const Chain& c) {
    TensorChain out;
    for (auto& [x, v] : c.t) out += v * interval_cut(u, x);
    return out;
}

TensorChain interval_cut(const SurjectionSum& s, const Simplex& x) {
    TensorChain out;
    for (auto& [u, c] : s.t) out += c * interval_cut(u, x);
    return out;
}

/* ---- operad structure ---- */

/*
 * Boundary in the surjection operad: the signed sum over deletions of one
 * occurrence of a repeated value, dropping results that are degenerate.  The
 * caesuras (inner occurrences) carry the degree; deleting the r-th caesura
 * contributes (-1)^{r-1}, and deleting the final occurrence of a value v
 * contributes (-1)^{r} for the last caesura r of v.
 */
SurjectionSum differential(const Surjection& u) {
    size_t n = u.u.size();
    std::vector<bool> fin = final_positions(u);
    std::vector<int> count((size_t)u.arity() + 1, 0);
    for (int v : u.u) ++count[(size_t)v];

    std::vector<int> cae(n, 0);  // caesuras at positions <= i
    std::vector<int> last_cae((size_t)u.arity() + 1, 0);
    int run = 0;
    for (size_t i = 0; i < n; ++i) {
        if (!fin[i]) {
            ++run;
            last_cae[(size_t)u.u[i]] = run;
        }
        cae[i] = run;
    }

    SurjectionSum out;
    for (size_t i = 0; i < n; ++i) {
        if (count[(size_t)u.u[i]] < 2) continue;
        int e = fin[i] ? last_cae[(size_t)u.u[i]] : cae[i] - 1;
        std::vector<int> w;
        for (size_t j = 0; j < n; ++j)
            if (j != i) w.push_back(u.u[j]);
        if (valid_surjection(w)) add_term(out, {w}, sign_pow(e));
    }
    return out;
}

Surjection permute(const std::vector<int>& pi, const Surjection& u) {
    int l = u.arity();
    if ((int)pi.size() != l) throw std::invalid_argument("permute: arity");
    Surjection w;
    for (int v : u.u) w.u.push_back(pi[(size_t)v - 1]);
    if (!valid_surjection(w.u)) throw std::invalid_argument("permute: not a bijection");
    return w;
}

Surjection truncate(const Surjection& u) {
    if (u.u.size() < 2) throw std::invalid_argument("truncate: too short");
    int first = u.u[0];
    bool recurs = false;
    for (size_t i = 1; i < u.u.size(); ++i)
        if (u.u[i] == first) recurs = true;
    Surjection w;
    for (size_t i = 1; i < u.u.size(); ++i) {
        int v = u.u[i];
        if (!recurs && v > first) --v;
        w.u.push_back(v);
    }
    if (!valid_surjection(w.u)) throw std::invalid_argument("truncate: degenerate");
    return w;
}

std::vector<size_t> slot_perm(const std::vector<int>& pi) {
    /* permute_slots wants perm with result slot i holding input slot
       perm[i]; value s goes to slot pi(s), so result slot pi(s)-1 holds
       input slot s-1 */
    std::vector<size_t> perm(pi.size());
    for (size_t s = 0; s < pi.size(); ++s) perm[(size_t)pi[s] - 1] = s;
    return perm;
}

std::vector<int> tau_cycle(int s, int l) {
    std::vector<int> pi((size_t)l);
    for (int v = 1; v <= l; ++v) pi[(size_t)v - 1] = v;
    if (s > 1) {
        pi[0] = s;
        for (int v = 2; v <= s; ++v) pi[(size_t)v - 1] = v - 1;
    }
    return pi;
}

/* express an operation, given by its value on the top simplex of a large
   standard simplex, in the basis of interval cut operations of one biarity;
   interval cuts of distinct surjections become linearly independent once the
   simplex is big enough, so the expansion is unique and is re-verified */
SurjectionSum expand_in_cut_basis(
    int l_res, int k_res,
    const std::function<TensorChain(const Simplex&)>& op, const char* who) {
    for (int p = k_res + l_res; ; ++p) {
        Arena arena;
        auto* dp = arena.make<StandardSimplex>(p);
        Simplex top = dp->top();
        TensorChain target = op(top);

        std::vector<Surjection> cands = all_surjections(l_res, k_res);
        std::map<std::vector<Simplex>, size_t> row;
        std::vector<TensorChain> cols;
        for (auto& w : cands) {
            cols.push_back(interval_cut(w, top));
            for (auto& [xs, c] : cols.back().t)
                row.emplace(xs, row.size());
        }
        for (auto& [xs, c] : target.t) row.emplace(xs, row.size());

        IntMatrix m = IntMatrix::zero(row.size(), cands.size());
        for (size_t j = 0; j < cands.size(); ++j)
            for (auto& [xs, c] : cols[j].t) m.a[row.at(xs)][j] = c;
        if (rank_q(m) < (long long)cands.size()) continue;  // need a bigger simplex

        IntMatrix b = IntMatrix::zero(row.size(), 1);
        for (auto& [xs, c] : target.t) b.a[row.at(xs)][0] = c;

        std::string name(who);
        SNF snf = smith_normal_form(m);
        IntMatrix rhs = mat_mul(snf.u, b);
        IntMatrix y = IntMatrix::zero(cands.size(), 1);
        for (size_t i = 0; i < row.size(); ++i) {
            if (i < cands.size() && snf.d.a[i][i] != 0) {
                if (rhs.a[i][0] % snf.d.a[i][i] != 0)
                    throw std::logic_error(name + ": non-integral solution");
                y.a[i][0] = rhs.a[i][0] / snf.d.a[i][i];
            } else if (rhs.a[i][0] != 0) {
                throw std::logic_error(name + ": no solution in the operad span");
            }
        }
        IntMatrix a = mat_mul(snf.v, y);

        SurjectionSum out;
        for (size_t j = 0; j < cands.size(); ++j)
            add_term(out, cands[j], a.a[j][0]);

        /* verify the expansion reproduces the target exactly */
        TensorChain check = interval_cut(out, top);
        if (!(check == target)) throw std::logic_error(name + ": residual");
        return out;
    }
}

SurjectionSum compose(const Surjection& u, int s, const Surjection& v) {
    if (s < 1 || s > u.arity()) throw std::invalid_argument("compose: slot");
    int l_res = u.arity() + v.arity() - 1;
    int k_res = u.degree() + v.degree();

    auto op = [&](const Simplex& top) {
        /* evaluate (1 x ... x AW_v x ... x 1) AW_u on the top simplex */
        TensorChain target;
        for (auto& [xs, c] : interval_cut(u, top).t) {
            int before = 0;
            for (int j = 0; j < s - 1; ++j) before += xs[(size_t)j].dim;
            Int sgn = sign_pow(v.degree() * before);
            for (auto& [ys, c2] : interval_cut(v, xs[(size_t)s - 1]).t) {
                std::vector<Simplex> zs;
                for (int j = 0; j < s - 1; ++j) zs.push_back(xs[(size_t)j]);
                for (auto& y : ys) zs.push_back(y);
                for (size_t j = (size_t)s; j < xs.size(); ++j)
                    zs.push_back(xs[j]);
                add_term(target, zs, c * c2 * sgn);
            }
        }
        return target;
    };
    return expand_in_cut_basis(l_res, k_res, op, "compose");
}

/* ---- projected cuts ---- */

TensorChain aw_tilde(const Surjection& u, const Chain& c,
                     const std::function<Simplex(const Simplex&)>& proj_x,
                     const std::function<Simplex(const Simplex&)>& proj_y) {
    if (!classify(u).one_biased)
        throw std::invalid_argument("aw_tilde: surjection not 1-biased");
    TensorChain out;
    for (auto& [x, v] : c.t)
        for (auto& [xs, c2] : interval_cut(u, x).t) {
            std::vector<Simplex> ys(xs.size());
            ys[0] = proj_x(xs[0]);
            for (size_t j = 1; j < xs.size(); ++j) ys[j] = proj_y(xs[j]);
            add_term(out, ys, v * c2);
        }
    return out;
}

TensorChain aw_hat(const Surjection& u, const Chain& c,
                   const std::function<Simplex(const Simplex&)>& proj) {
    if (!classify(u).one_biased)
        throw std::invalid_argument("aw_hat: surjection not 1-biased");
    TensorChain out;
    for (auto& [x, v] : c.t)
        for (auto& [xs, c2] : interval_cut(u, x).t) {
            std::vector<Simplex> ys(xs.size());
            ys[0] = xs[0];
            for (size_t j = 1; j < xs.size(); ++j) ys[j] = proj(xs[j]);
            add_term(out, ys, v * c2);
        }
    return out;
}

/* ---- transposed operations ---- */

Int ev_cut(const Surjection& u, const std::vector<Cochain>& gs,
           const Simplex& x) {
    if ((int)gs.size() != u.arity())
        throw std::invalid_argument("ev_cut: arity mismatch");
    int total = 0;
    for (auto& g : gs) total += g.deg;
    Int sgn = sign_pow(u.degree() * total);
    return sgn * ev_tensor(gs, interval_cut(u, x));
}

Int ev_cut(const Surjection& u, const std::vector<Cochain>& gs,
           const Chain& c) {
    Int out = 0;
    for (auto& [x, v] : c.t) out += v * ev_cut(u, gs, x);
    return out;
}

Cochain t_cut(const Space& X, const Surjection& u,
              const std::vector<Cochain>& gs) {
    int total = 0;
    for (auto& g : gs) total += g.deg;
    Cochain out;
    out.deg = total - u.degree();
    if (out.deg < 0) return out;
    for (const Simplex& x : X.nondeg_simplices(out.deg))
        add_term(out, x, ev_cut(u, gs, x));
    return out;
}

Cochain cup(const Space& X, const Cochain& b, const Cochain& c) {
    return t_cut(X, {{1, 2}}, {b, c});
}

Cochain cup1(const Space& X, const Cochain& b, const Cochain& c) {
    Cochain r = t_cut(X, {{1, 2, 1}}, {b, c});
    Cochain out;
    out.deg = r.deg;
    for (auto& [x, v] : r.c) add_term(out, x, -v);
    return out;
}

Cochain cup2(const Space& X, const Cochain& b, const Cochain& c) {
    Cochain r = t_cut(X, {{1, 2, 1, 2}}, {b, c});
    Cochain out;
    out.deg = r.deg;
    for (auto& [x, v] : r.c) add_term(out, x, -v);
    return out;
}

Surjection ek_surjection(int k) {
    if (k < 1) throw std::invalid_argument("ek_surjection: k < 1");
    Surjection u;
    u.u.push_back(1);
    for (int j = 2; j <= k + 1; ++j) {
        u.u.push_back(j);
        u.u.push_back(1);
    }
    return u;
}

Surjection ek_tilde_surjection(int k) {
    if (k < 1) throw std::invalid_argument("ek_tilde_surjection: k < 1");
    Surjection u;
    u.u.push_back(k + 1);
    for (int j = 1; j <= k; ++j) {
        u.u.push_back(j);
        u.u.push_back(k + 1);
    }
    return u;
}

Cochain ek(const Space& X, const Cochain& a, const std::vector<Cochain>& bs) {
    std::vector<Cochain> gs;
    gs.push_back(a);
    for (auto& b : bs) gs.push_back(b);
    return t_cut(X, ek_surjection((int)bs.size()), gs);
}

Cochain ek_tilde(const Space& X, const std::vector<Cochain>& bs,
                 const Cochain& a) {
    std::vector<Cochain> gs = bs;
    gs.push_back(a);
    Cochain r = t_cut(X, ek_tilde_surjection((int)bs.size()), gs);
    Cochain out;
    out.deg = r.deg;
    for (auto& [x, v] : r.c) add_term(out, x, sign_pow((int)bs.size()) * v);
    return out;
}

}  // namespace chalg
