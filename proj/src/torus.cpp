#include "chalg/torus.hpp"

#include <functional>

namespace chalg {

/******** exterior bialgebra ********/

ExtElt& ExtElt::operator+=(const ExtElt& o) {
    for (auto& [m, c] : o.t) add_term(*this, m, c);
    return *this;
}

ExtElt& ExtElt::operator-=(const ExtElt& o) {
    for (auto& [m, c] : o.t) add_term(*this, m, -c);
    return *this;
}

ExtElt& ExtElt::operator*=(const Int& c) {
    if (c == 0) {
        t.clear();
        return *this;
    }
    for (auto& [m, v] : t) v *= c;
    return *this;
}

void add_term(ExtElt& e, const ExtMono& m, const Int& c) {
    if (c == 0) return;
    auto it = e.t.find(m);
    if (it == e.t.end()) {
        e.t.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) e.t.erase(it);
    }
}

ExtElt ext_of(const ExtMono& m, const Int& c) {
    ExtElt e;
    add_term(e, m, c);
    return e;
}

ExtElt operator+(ExtElt a, const ExtElt& b) { return a += b; }
ExtElt operator-(ExtElt a, const ExtElt& b) { return a -= b; }
ExtElt operator*(const Int& c, ExtElt a) { return a *= c; }

void add_term(ExtTensor& e, const ExtMono& a, const ExtMono& b,
              const Int& c) {
    if (c == 0) return;
    auto key = std::make_pair(a, b);
    auto it = e.find(key);
    if (it == e.end()) {
        e.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0) e.erase(it);
    }
}

int ext_merge(const ExtMono& a, const ExtMono& b, ExtMono& out) {
    out.clear();
    size_t i = 0, j = 0;
    int inv = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return 0;
        if (a[i] < b[j]) {
            out.push_back(a[i++]);
        } else {
            inv += (int)(a.size() - i);
            out.push_back(b[j++]);
        }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) out.push_back(b[j++]);
    return (inv % 2) ? -1 : 1;
}

ExteriorBialgebra::ExteriorBialgebra(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("ExteriorBialgebra: rank < 0");
}

bool ExteriorBialgebra::valid(const ExtMono& m) const {
    for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] < 1 || m[i] > n_) return false;
        if (i > 0 && m[i - 1] >= m[i]) return false;
    }
    return true;
}

void ExteriorBialgebra::check(const ExtMono& m) const {
    if (!valid(m))
        throw std::invalid_argument("ExteriorBialgebra: bad monomial");
}

std::vector<ExtMono> ExteriorBialgebra::basis(int deg) const {
    std::vector<ExtMono> out;
    if (deg < 0 || deg > n_) return out;
    ExtMono cur;
    std::function<void(int)> rec = [&](int start) {
        if ((int)cur.size() == deg) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v <= n_; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(1);
    return out;
}

ExtElt ExteriorBialgebra::mul(const ExtElt& x, const ExtElt& y) const {
    ExtElt out;
    for (auto& [a, ca] : x.t) {
        check(a);
        for (auto& [b, cb] : y.t) {
            check(b);
            ExtMono m;
            if (int s = ext_merge(a, b, m)) add_term(out, m, ca * cb * s);
        }
    }
    return out;
}

ExtTensor ExteriorBialgebra::diagonal(const ExtMono& m) const {
    check(m);
    ExtTensor out;
    size_t k = m.size();
    for (size_t mask = 0; mask < (size_t(1) << k); ++mask) {
        ExtMono b, c;
        int inv = 0, unchosen = 0;
        for (size_t p = 0; p < k; ++p) {
            if (mask & (size_t(1) << p)) {
                b.push_back(m[p]);
                inv += unchosen;
            } else {
                c.push_back(m[p]);
                ++unchosen;
            }
        }
        add_term(out, b, c, (inv % 2) ? -1 : 1);
    }
    return out;
}

Int ExteriorBialgebra::aug(const ExtElt& e) const {
    auto it = e.t.find(ExtMono{});
    return it == e.t.end() ? Int(0) : it->second;
}

/******** divided coalgebra ********/

int multi_norm(const Multi& a) {
    int s = 0;
    for (int v : a) s += v;
    return s;
}

DividedCoalgebra::DividedCoalgebra(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("DividedCoalgebra: rank < 0");
}

bool DividedCoalgebra::valid(const Multi& a) const {
    if ((int)a.size() != n_) return false;
    for (int v : a)
        if (v < 0) return false;
    return true;
}

void DividedCoalgebra::check(const Multi& a) const {
    if (!valid(a))
        throw std::invalid_argument("DividedCoalgebra: bad exponent vector");
}

int DividedCoalgebra::degree(const Multi& a) const {
    check(a);
    return 2 * multi_norm(a);
}

std::vector<Multi> DividedCoalgebra::basis(int deg) const {
    std::vector<Multi> out;
    if (deg < 0 || deg % 2) return out;
    int norm = deg / 2;
    if (n_ == 0) {
        if (norm == 0) out.push_back({});
        return out;
    }
    Multi cur((size_t)n_, 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == n_ - 1) {
            cur[(size_t)i] = left;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[(size_t)i] = v;
            rec(i + 1, left - v);
        }
    };
    rec(0, norm);
    return out;
}

std::vector<std::pair<Multi, Multi>> DividedCoalgebra::diagonal(
    const Multi& a) const {
    check(a);
    std::vector<std::pair<Multi, Multi>> out;
    Multi beta(a.size(), 0);
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == a.size()) {
            Multi gamma(a.size());
            for (size_t j = 0; j < a.size(); ++j) gamma[j] = a[j] - beta[j];
            out.emplace_back(beta, gamma);
            return;
        }
        for (int v = 0; v <= a[i]; ++v) {
            beta[i] = v;
            rec(i + 1);
        }
        beta[i] = 0;
    };
    rec(0);
    return out;
}

Int DividedCoalgebra::counit(const Multi& a) const {
    check(a);
    return multi_norm(a) == 0 ? 1 : 0;
}

/******** Koszul complex ********/

KElt& KElt::operator+=(const KElt& o) {
    for (auto& [k, c] : o.t) add_term(*this, k, c);
    return *this;
}

KElt& KElt::operator-=(const KElt& o) {
    for (auto& [k, c] : o.t) add_term(*this, k, -c);
    return *this;
}

KElt& KElt::operator*=(const Int& c) {
    if (c == 0) {
        t.clear();
        return *this;
    }
    for (auto& [k, v] : t) v *= c;
    return *this;
}

void add_term(KElt& e, const KBasis& k, const Int& c) {
    if (c == 0) return;
    auto it = e.t.find(k);
    if (it == e.t.end()) {
        e.t.emplace(k, c);
    } else {
        it->second += c;
        if (it->second == 0) e.t.erase(it);
    }
}

KElt k_of(const KBasis& k, const Int& c) {
    KElt e;
    add_term(e, k, c);
    return e;
}

KElt operator+(KElt a, const KElt& b) { return a += b; }
KElt operator-(KElt a, const KElt& b) { return a -= b; }
KElt operator*(const Int& c, KElt a) { return a *= c; }

KoszulComplex::KoszulComplex(int n) : ext_(n), div_(n) {}

int KoszulComplex::degree(const KBasis& k) const {
    return ext_.degree(k.a) + div_.degree(k.alpha);
}

std::vector<KBasis> KoszulComplex::basis(int deg) const {
    std::vector<KBasis> out;
    for (int p = 0; p <= std::min(rank(), deg); ++p) {
        if ((deg - p) % 2) continue;
        for (auto& a : ext_.basis(p))
            for (auto& al : div_.basis(deg - p)) out.push_back({a, al});
    }
    return out;
}

KElt KoszulComplex::diff(const KBasis& k) const {
    if (!ext_.valid(k.a) || !div_.valid(k.alpha))
        throw std::invalid_argument("KoszulComplex: bad basis element");
    KElt out;
    for (size_t i = 0; i < k.alpha.size(); ++i) {
        if (k.alpha[i] == 0) continue;
        ExtMono m;
        if (int s = ext_merge({(int)i + 1}, k.a, m)) {
            Multi al = k.alpha;
            --al[i];
            add_term(out, KBasis{m, al}, s);
        }
    }
    return out;
}

KElt KoszulComplex::diff(const KElt& e) const {
    KElt out;
    for (auto& [k, c] : e.t)
        for (auto& [k2, c2] : diff(k).t) add_term(out, k2, c * c2);
    return out;
}

ExtElt KoszulComplex::twisting(const Multi& a) const {
    if (!div_.valid(a))
        throw std::invalid_argument("KoszulComplex: bad exponent vector");
    ExtElt out;
    if (multi_norm(a) == 1)
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] == 1) add_term(out, {(int)i + 1}, 1);
    return out;
}

KTensor KoszulComplex::diagonal(const KBasis& k) const {
    KTensor out;
    auto parts = div_.diagonal(k.alpha);
    for (auto& [ab, s] : ext_.diagonal(k.a))
        for (auto& [beta, gamma] : parts) {
            auto key = std::make_pair(KBasis{ab.first, beta},
                                      KBasis{ab.second, gamma});
            out[key] += s;
            if (out[key] == 0) out.erase(key);
        }
    return out;
}

std::map<Multi, Int> KoszulComplex::to_div(const KElt& e) const {
    std::map<Multi, Int> out;
    for (auto& [k, c] : e.t) {
        if (!k.a.empty()) continue;
        out[k.alpha] += c;
        if (out[k.alpha] == 0) out.erase(k.alpha);
    }
    return out;
}

FgComplex KoszulComplex::complex(int max_deg) const {
    if (max_deg < 0)
        throw std::invalid_argument("KoszulComplex: negative window");
    std::vector<std::vector<KBasis>> bases;
    std::vector<std::map<KBasis, size_t>> index;
    for (int d = 0; d <= max_deg; ++d) {
        bases.push_back(basis(d));
        index.emplace_back();
        for (size_t i = 0; i < bases.back().size(); ++i)
            index.back().emplace(bases.back()[i], i);
    }
    FgComplex c;
    c.lo = -1;
    c.dims.push_back(0);
    for (auto& b : bases) c.dims.push_back((long long)b.size());
    c.dims.push_back(0);
    c.d.push_back(IntMatrix::zero(0, (size_t)c.dims[1]));
    for (int d = 1; d <= max_deg; ++d) {
        const auto& src = bases[(size_t)d];
        const auto& dst = index[(size_t)d - 1];
        IntMatrix m = IntMatrix::zero(dst.size(), src.size());
        for (size_t j = 0; j < src.size(); ++j)
            for (auto& [k, v] : diff(src[j]).t) m.a[dst.at(k)][j] += v;
        c.d.push_back(m);
    }
    c.d.push_back(IntMatrix::zero((size_t)c.dims[c.dims.size() - 2], 0));
    validate(c);
    return c;
}

/******** chain-level realization ********/

static std::vector<UniversalBundle> fresh_circles(Arena& arena, int n) {
    if (n < 1) throw std::invalid_argument("TorusFormality: rank < 1");
    std::vector<UniversalBundle> out;
    for (int i = 0; i < n; ++i)
        out.push_back(universal_bundle(arena, *arena.make<BarInt>()));
    return out;
}

static RepChoice default_reps(const std::vector<UniversalBundle>& circles,
                              const UniversalBundle& b) {
    auto* prod = static_cast<const NaryProduct*>(b.group->underlying());
    RepChoice r;
    for (size_t i = 0; i < circles.size(); ++i) {
        std::vector<Simplex> comps;
        for (size_t j = 0; j < circles.size(); ++j) {
            if (j == i) {
                auto* bj = dynamic_cast<const BarInt*>(circles[j].group);
                if (!bj)
                    throw std::invalid_argument(
                        "TorusFormality: default representatives need B(Z) "
                        "circle factors");
                comps.push_back(bj->loop(1));
            } else {
                comps.push_back(circles[j].group->identity(1));
            }
        }
        r.c.push_back(chain_of(prod->make(comps)));
    }
    return r;
}

static void validate_reps(const UniversalBundle& b, const RepChoice& r,
                          size_t n) {
    if (r.c.size() != n)
        throw std::invalid_argument(
            "TorusFormality: one representative per circle factor");
    const Simplex id0 = b.group->identity(0);
    for (auto& ch : r.c)
        for (auto& [x, c] : ch.t) {
            if (x.space != b.group->underlying() || x.dim != 1)
                throw std::invalid_argument(
                    "TorusFormality: representative is not a 1-chain on T");
            if (face(x, 0) != id0 || face(x, 1) != id0)
                throw std::invalid_argument(
                    "TorusFormality: representative is not a combination of "
                    "loops at the identity");
        }
}

TorusFormality::TorusFormality(Arena& arena, int n)
    : TorusFormality(arena, fresh_circles(arena, n)) {}

TorusFormality::TorusFormality(Arena& arena,
                               std::vector<UniversalBundle> circles)
    : n_((int)circles.size()),
      circles_(circles),
      b_(product_bundle(arena, std::move(circles))),
      K_(n_),
      reps_(default_reps(circles_, b_)) {
    validate_reps(b_, reps_, (size_t)n_);
}

const Chain& TorusFormality::rep(int i) const {
    if (i < 1 || i > n_)
        throw std::out_of_range("TorusFormality: representative index");
    return reps_.c[(size_t)i - 1];
}

void TorusFormality::set_reps(RepChoice reps) {
    validate_reps(b_, reps, (size_t)n_);
    reps_ = std::move(reps);
    memo_.clear();
}

Chain TorusFormality::phi(const ExtMono& m) const {
    if (!K_.ext().valid(m))
        throw std::invalid_argument("TorusFormality: bad monomial");
    Chain out = chain_of(b_.group->identity(0));
    for (auto it = m.rbegin(); it != m.rend(); ++it)
        out = pontryagin(rep(*it), out, *b_.group);
    return out;
}

Chain TorusFormality::phi(const ExtElt& e) const {
    Chain out;
    for (auto& [m, c] : e.t) out += c * phi(m);
    return out;
}

const Chain& TorusFormality::F(const KBasis& k) {
    auto it = memo_.find(k);
    if (it != memo_.end()) return it->second;
    if (!K_.ext().valid(k.a) || !K_.div().valid(k.alpha))
        throw std::invalid_argument("TorusFormality: bad basis element");
    Chain out;
    if (!k.a.empty()) {
        out = pair_chains(phi(k.a), F(KBasis{{}, k.alpha}), b_.act_g);
    } else if (multi_norm(k.alpha) == 0) {
        out = chain_of(b_.e0);
    } else {
        Chain pre;
        for (size_t i = 0; i < k.alpha.size(); ++i) {
            if (k.alpha[i] == 0) continue;
            Multi al = k.alpha;
            --al[i];
            pre += pair_chains(reps_.c[i], F(KBasis{{}, al}), b_.act_g);
        }
        out = pushforward(pre, b_.S);
    }
    return memo_.emplace(k, std::move(out)).first->second;
}

Chain TorusFormality::F(const KElt& e) {
    Chain out;
    for (auto& [k, c] : e.t) out += c * F(k);
    return out;
}

Chain TorusFormality::f(const Multi& alpha) {
    return pushforward(F(KBasis{{}, alpha}), b_.proj);
}

Int TorusFormality::f_pair(const Cochain& gamma, const Multi& alpha) {
    return ev(gamma, f(alpha));
}

TorusFormality::VanishingCert TorusFormality::verify_vanishing(
    const Surjection& u, const Multi& alpha) {
    if (!classify(u).strongly_biased)
        throw std::invalid_argument(
            "verify_vanishing: surjection not strongly biased");
    VanishingCert cert{u, false, interval_cut(u, f(alpha))};
    cert.zero = cert.residue.zero();
    return cert;
}

TorusFormality::VanishingCert TorusFormality::verify_vanishing_hat(
    const Surjection& u, const KBasis& k) {
    if (!classify(u).strongly_one_biased)
        throw std::invalid_argument(
            "verify_vanishing_hat: surjection not strongly 1-biased");
    VanishingCert cert{u, false, aw_hat(u, F(k), b_.proj)};
    cert.zero = cert.residue.zero();
    return cert;
}

/******** coordinatewise maps ********/

static void check_coords(const std::vector<int>& coords, int n_src,
                         int n_dst) {
    if ((int)coords.size() != n_src)
        throw std::invalid_argument("coordinatewise map: one slot per factor");
    std::vector<bool> seen((size_t)n_dst + 1, false);
    for (int c : coords) {
        if (c < 1 || c > n_dst || seen[(size_t)c])
            throw std::invalid_argument("coordinatewise map: bad slots");
        seen[(size_t)c] = true;
    }
}

Multi multi_include(const Multi& alpha, const std::vector<int>& coords,
                    int n_dst) {
    check_coords(coords, (int)alpha.size(), n_dst);
    Multi out((size_t)n_dst, 0);
    for (size_t j = 0; j < alpha.size(); ++j)
        out[(size_t)coords[j] - 1] = alpha[j];
    return out;
}

std::optional<Multi> multi_project(const Multi& alpha,
                                   const std::vector<int>& coords) {
    check_coords(coords, (int)coords.size(), (int)alpha.size());
    Multi out(coords.size(), 0);
    int kept = 0;
    for (size_t j = 0; j < coords.size(); ++j) {
        out[j] = alpha[(size_t)coords[j] - 1];
        kept += out[j];
    }
    if (kept != multi_norm(alpha)) return std::nullopt;
    return out;
}

/* factor spaces of the base of a torus bundle */
static const NaryProduct* base_product(const TorusFormality& t) {
    return static_cast<const NaryProduct*>(t.bundle().base);
}

Chain bt_include(const TorusFormality& src, const TorusFormality& dst,
                 const std::vector<int>& coords, const Chain& ch) {
    check_coords(coords, src.rank(), dst.rank());
    auto* bs = base_product(src);
    auto* bd = base_product(dst);
    for (size_t j = 0; j < coords.size(); ++j)
        if (bs->factors()[j] != bd->factors()[(size_t)coords[j] - 1])
            throw std::invalid_argument(
                "bt_include: matched circle factors are not shared");
    return pushforward(ch, [&, bs, bd](const Simplex& x) {
        std::vector<Simplex> comps((size_t)dst.rank());
        for (size_t k = 0; k < comps.size(); ++k)
            comps[k] = degenerate_to(bd->factors()[k]->basepoint(), x.dim);
        for (size_t j = 0; j < coords.size(); ++j)
            comps[(size_t)coords[j] - 1] = bs->component(x, j);
        return bd->make(comps);
    });
}

Chain bt_project(const TorusFormality& src, const TorusFormality& dst,
                 const std::vector<int>& coords, const Chain& ch) {
    check_coords(coords, dst.rank(), src.rank());
    auto* bs = base_product(src);
    auto* bd = base_product(dst);
    for (size_t j = 0; j < coords.size(); ++j)
        if (bd->factors()[j] != bs->factors()[(size_t)coords[j] - 1])
            throw std::invalid_argument(
                "bt_project: matched circle factors are not shared");
    return pushforward(ch, [&, bs, bd](const Simplex& x) {
        std::vector<Simplex> comps(coords.size());
        for (size_t j = 0; j < coords.size(); ++j)
            comps[j] = bs->component(x, (size_t)coords[j] - 1);
        return bd->make(comps);
    });
}

}  // namespace chalg
