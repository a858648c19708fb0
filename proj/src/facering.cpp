#include "chalg/facering.hpp"

#include <algorithm>
#include <iterator>
#include <set>
#include <stdexcept>

namespace chalg {

/******** simplicial posets ********/

static bool sorted_unique(const std::vector<int>& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i - 1] >= v[i]) return false;
    return true;
}

static bool subset(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

SimplicialPoset SimplicialPoset::complex(
    int nverts, const std::vector<std::vector<int>>& facets) {
    if (nverts < 0) throw std::invalid_argument("complex: negative vertex count");
    std::set<std::vector<int>> faces;
    faces.insert(std::vector<int>{});
    for (auto f : facets) {
        std::sort(f.begin(), f.end());
        if (!sorted_unique(f))
            throw std::invalid_argument("complex: repeated vertex in facet");
        if (!f.empty() && (f.front() < 1 || f.back() > nverts))
            throw std::invalid_argument("complex: facet vertex out of range");
        for (unsigned m = 0; m < (1u << f.size()); ++m) {
            std::vector<int> s;
            for (std::size_t i = 0; i < f.size(); ++i)
                if (m & (1u << i)) s.push_back(f[i]);
            faces.insert(s);
        }
    }
    SimplicialPoset P;
    P.nv_ = nverts;
    std::vector<std::vector<int>> list(faces.begin(), faces.end());
    std::sort(list.begin(), list.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    for (const auto& s : list) P.e_.push_back({(int)s.size(), s});
    P.leq_.assign(P.e_.size(), std::vector<char>(P.e_.size(), 0));
    for (std::size_t a = 0; a < P.e_.size(); ++a)
        for (std::size_t b = 0; b < P.e_.size(); ++b)
            P.leq_[a][b] = subset(P.e_[a].verts, P.e_[b].verts) ? 1 : 0;
    P.finish();
    return P;
}

SimplicialPoset SimplicialPoset::poset(int nverts,
                                       const std::vector<HasseElt>& elts) {
    if (nverts < 0) throw std::invalid_argument("poset: negative vertex count");
    if (elts.empty()) throw std::invalid_argument("poset: no elements");
    SimplicialPoset P;
    P.nv_ = nverts;
    for (const auto& h : elts) {
        if (!sorted_unique(h.verts))
            throw std::invalid_argument("poset: vertex set not strictly increasing");
        if (!h.verts.empty() && (h.verts.front() < 1 || h.verts.back() > nverts))
            throw std::invalid_argument("poset: vertex out of range");
        for (std::size_t c : h.covers)
            if (c >= elts.size())
                throw std::invalid_argument("poset: cover index out of range");
        P.e_.push_back({h.rank, h.verts});
    }
    std::size_t n = elts.size();
    P.leq_.assign(n, std::vector<char>(n, 0));
    for (std::size_t a = 0; a < n; ++a) P.leq_[a][a] = 1;
    for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c : elts[b].covers) P.leq_[c][b] = 1;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t a = 0; a < n; ++a)
            if (P.leq_[a][k])
                for (std::size_t b = 0; b < n; ++b)
                    if (P.leq_[k][b]) P.leq_[a][b] = 1;
    P.finish();
    return P;
}

void SimplicialPoset::finish() {
    max_.clear();
    for (std::size_t a = 0; a < e_.size(); ++a) {
        bool top = true;
        for (std::size_t b = 0; b < e_.size(); ++b)
            if (b != a && leq_[a][b]) top = false;
        if (top) max_.push_back(a);
    }
}

bool SimplicialPoset::leq(std::size_t a, std::size_t b) const {
    return leq_.at(a).at(b) != 0;
}

std::size_t SimplicialPoset::zero_hat() const {
    for (std::size_t a = 0; a < e_.size(); ++a)
        if (e_[a].rank == 0) return a;
    throw std::logic_error("poset without a rank-0 element");
}

std::vector<std::size_t> SimplicialPoset::upper(std::size_t a,
                                                std::size_t b) const {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < e_.size(); ++c)
        if (leq(a, c) && leq(b, c)) out.push_back(c);
    return out;
}

std::vector<std::size_t> SimplicialPoset::join(std::size_t a,
                                               std::size_t b) const {
    std::vector<std::size_t> up = upper(a, b), out;
    for (std::size_t c : up) {
        bool minimal = true;
        for (std::size_t d : up)
            if (d != c && leq(d, c)) minimal = false;
        if (minimal) out.push_back(c);
    }
    return out;
}

std::optional<std::size_t> SimplicialPoset::meet(std::size_t a,
                                                 std::size_t b) const {
    std::vector<std::size_t> up = upper(a, b);
    if (up.empty()) return std::nullopt;
    std::vector<int> common;
    std::set_intersection(e_[a].verts.begin(), e_[a].verts.end(),
                          e_[b].verts.begin(), e_[b].verts.end(),
                          std::back_inserter(common));
    std::optional<std::size_t> m = below(up.front(), common);
    if (!m) throw std::logic_error("meet: interval misses a vertex subset");
    return m;
}

std::vector<std::size_t> SimplicialPoset::max_common_lower(
    std::size_t a, std::size_t b) const {
    std::vector<std::size_t> low, out;
    for (std::size_t c = 0; c < e_.size(); ++c)
        if (leq(c, a) && leq(c, b)) low.push_back(c);
    for (std::size_t c : low) {
        bool maximal = true;
        for (std::size_t d : low)
            if (d != c && leq(c, d)) maximal = false;
        if (maximal) out.push_back(c);
    }
    return out;
}

std::optional<std::size_t> SimplicialPoset::below(
    std::size_t top, const std::vector<int>& vs) const {
    for (std::size_t c = 0; c < e_.size(); ++c)
        if (leq(c, top) && e_[c].verts == vs) return c;
    return std::nullopt;
}

std::vector<std::string> SimplicialPoset::validate() const {
    std::vector<std::string> out;
    std::size_t n = e_.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (a != b && leq(a, b) && leq(b, a))
                out.push_back("order not antisymmetric at " + std::to_string(a) +
                              "," + std::to_string(b));
    std::size_t zeros = 0;
    for (std::size_t a = 0; a < n; ++a)
        if (e_[a].rank == 0) ++zeros;
    if (zeros != 1) {
        out.push_back("expected exactly one rank-0 element, found " +
                      std::to_string(zeros));
        return out;
    }
    std::size_t bot = zero_hat();
    for (std::size_t a = 0; a < n; ++a)
        if (!leq(bot, a))
            out.push_back("rank-0 element not below " + std::to_string(a));
    for (std::size_t a = 0; a < n; ++a) {
        if ((int)e_[a].verts.size() != e_[a].rank)
            out.push_back("element " + std::to_string(a) +
                          ": vertex count differs from rank");
        if (!sorted_unique(e_[a].verts))
            out.push_back("element " + std::to_string(a) +
                          ": vertex set not strictly increasing");
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (leq(a, b)) {
                if (a != b && e_[a].rank >= e_[b].rank)
                    out.push_back("ranks not strictly increasing from " +
                                  std::to_string(a) + " to " + std::to_string(b));
                if (!subset(e_[a].verts, e_[b].verts))
                    out.push_back("folding not order preserving from " +
                                  std::to_string(a) + " to " + std::to_string(b));
            }
    std::set<int> seen;
    for (std::size_t a = 0; a < n; ++a)
        if (e_[a].rank == 1) {
            if (seen.count(e_[a].verts[0]))
                out.push_back("two rank-1 elements share vertex " +
                              std::to_string(e_[a].verts[0]));
            seen.insert(e_[a].verts[0]);
        }
    if (!out.empty()) return out;
    /* lower intervals are Boolean: exactly one element per vertex subset */
    for (std::size_t a = 0; a < n; ++a) {
        const std::vector<int>& vs = e_[a].verts;
        std::size_t cnt = 0;
        for (std::size_t c = 0; c < n; ++c)
            if (leq(c, a)) ++cnt;
        if (cnt != (std::size_t)1 << vs.size())
            out.push_back("interval below " + std::to_string(a) + " has size " +
                          std::to_string(cnt) + ", expected " +
                          std::to_string((std::size_t)1 << vs.size()));
        for (unsigned m = 0; m < (1u << vs.size()); ++m) {
            std::vector<int> s;
            for (std::size_t i = 0; i < vs.size(); ++i)
                if (m & (1u << i)) s.push_back(vs[i]);
            std::size_t found = 0;
            for (std::size_t c = 0; c < n; ++c)
                if (leq(c, a) && e_[c].verts == s) ++found;
            if (found != 1)
                out.push_back("interval below " + std::to_string(a) + " has " +
                              std::to_string(found) +
                              " elements with a given vertex subset");
        }
    }
    return out;
}

SimplicialPoset SimplicialPoset::induced(const std::vector<std::size_t>& elems,
                                         std::vector<std::size_t>* img) const {
    std::vector<std::size_t> list = elems;
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    if (list.empty()) throw std::invalid_argument("induced: empty element set");
    for (std::size_t a : list) {
        if (a >= e_.size())
            throw std::invalid_argument("induced: element out of range");
        for (std::size_t c = 0; c < e_.size(); ++c)
            if (leq(c, a) && !std::binary_search(list.begin(), list.end(), c))
                throw std::invalid_argument("induced: element set not down-closed");
    }
    SimplicialPoset P;
    P.nv_ = nv_;
    for (std::size_t a : list) P.e_.push_back(e_[a]);
    P.leq_.assign(list.size(), std::vector<char>(list.size(), 0));
    for (std::size_t i = 0; i < list.size(); ++i)
        for (std::size_t j = 0; j < list.size(); ++j)
            P.leq_[i][j] = leq_[list[i]][list[j]];
    P.finish();
    if (img) *img = list;
    return P;
}

std::vector<std::string> validate(const VertexPreservingMap& k) {
    std::vector<std::string> out;
    if (!k.src || !k.dst) return {"map: missing poset"};
    if (k.src->nverts() != k.dst->nverts())
        out.push_back("map: vertex sets differ");
    if (k.img.size() != k.src->size())
        return {"map: image list size differs from source"};
    for (std::size_t a = 0; a < k.img.size(); ++a) {
        if (k.img[a] >= k.dst->size()) return {"map: image out of range"};
        if (k.src->elt(a).rank != k.dst->elt(k.img[a]).rank)
            out.push_back("map: rank not preserved at " + std::to_string(a));
        if (k.src->elt(a).verts != k.dst->elt(k.img[a]).verts)
            out.push_back("map: folding not preserved at " + std::to_string(a));
    }
    for (std::size_t a = 0; a < k.img.size(); ++a)
        for (std::size_t b = 0; b < k.img.size(); ++b)
            if (k.src->leq(a, b) && !k.dst->leq(k.img[a], k.img[b]))
                out.push_back("map: order not preserved at " + std::to_string(a) +
                              "," + std::to_string(b));
    return out;
}

/******** limit tuples ********/

VPoly& VPoly::operator+=(const VPoly& o) {
    for (const auto& [m, v] : o.t) add_term(*this, m, v);
    return *this;
}
VPoly& VPoly::operator-=(const VPoly& o) {
    for (const auto& [m, v] : o.t) add_term(*this, m, -v);
    return *this;
}
VPoly& VPoly::operator*=(const Int& c) {
    if (c == 0) {
        t.clear();
        return *this;
    }
    for (auto& [m, v] : t) v *= c;
    return *this;
}

void add_term(VPoly& p, const VExp& m, const Int& v) {
    if (v == 0) return;
    auto it = p.t.find(m);
    if (it == p.t.end()) {
        p.t.emplace(m, v);
        return;
    }
    it->second += v;
    if (it->second == 0) p.t.erase(it);
}

VPoly poly_mul(const VPoly& a, const VPoly& b) {
    VPoly out;
    for (const auto& [m, v] : a.t)
        for (const auto& [n, w] : b.t) {
            VExp s(m.size());
            for (std::size_t i = 0; i < m.size(); ++i) s[i] = m[i] + n[i];
            add_term(out, s, v * w);
        }
    return out;
}

VPoly poly_restrict(const VPoly& p, const std::vector<int>& vs) {
    VPoly out;
    for (const auto& [m, v] : p.t) {
        bool keep = true;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] != 0 && !std::binary_search(vs.begin(), vs.end(), (int)i + 1))
                keep = false;
        if (keep) add_term(out, m, v);
    }
    return out;
}

bool FaceRingElt::zero() const {
    for (const auto& p : comp)
        if (!p.zero()) return false;
    return true;
}
FaceRingElt& FaceRingElt::operator+=(const FaceRingElt& o) {
    if (comp.size() != o.comp.size())
        throw std::invalid_argument("ring elements of different posets");
    for (std::size_t i = 0; i < comp.size(); ++i) comp[i] += o.comp[i];
    return *this;
}
FaceRingElt& FaceRingElt::operator-=(const FaceRingElt& o) {
    if (comp.size() != o.comp.size())
        throw std::invalid_argument("ring elements of different posets");
    for (std::size_t i = 0; i < comp.size(); ++i) comp[i] -= o.comp[i];
    return *this;
}
FaceRingElt& FaceRingElt::operator*=(const Int& c) {
    for (auto& p : comp) p *= c;
    return *this;
}
FaceRingElt operator+(FaceRingElt a, const FaceRingElt& b) { return a += b; }
FaceRingElt operator-(FaceRingElt a, const FaceRingElt& b) { return a -= b; }
FaceRingElt operator*(const FaceRingElt& a, const FaceRingElt& b) {
    if (a.comp.size() != b.comp.size())
        throw std::invalid_argument("ring elements of different posets");
    FaceRingElt out;
    out.comp.resize(a.comp.size());
    for (std::size_t i = 0; i < a.comp.size(); ++i)
        out.comp[i] = poly_mul(a.comp[i], b.comp[i]);
    return out;
}

FaceRing::FaceRing(SimplicialPoset S) : S_(std::move(S)) {
    if (!S_.validate().empty())
        throw std::invalid_argument("face ring of an invalid poset");
}

FaceRingElt FaceRing::zero() const {
    FaceRingElt x;
    x.comp.resize(S_.maximal().size());
    return x;
}

FaceRingElt FaceRing::one() const {
    FaceRingElt x = zero();
    VExp unit(S_.nverts(), 0);
    for (auto& p : x.comp) add_term(p, unit, 1);
    return x;
}

FaceRingElt FaceRing::gen(std::size_t sigma) const {
    if (sigma >= S_.size())
        throw std::invalid_argument("gen: element out of range");
    FaceRingElt x = zero();
    VExp m(S_.nverts(), 0);
    for (int v : S_.elt(sigma).verts) m[v - 1] = 1;
    const auto& mx = S_.maximal();
    for (std::size_t i = 0; i < mx.size(); ++i)
        if (S_.leq(sigma, mx[i])) add_term(x.comp[i], m, 1);
    return x;
}

VPoly FaceRing::component(const FaceRingElt& x, std::size_t sigma) const {
    const auto& mx = S_.maximal();
    if (x.comp.size() != mx.size())
        throw std::invalid_argument("component: wrong tuple length");
    for (std::size_t i = 0; i < mx.size(); ++i)
        if (S_.leq(sigma, mx[i]))
            return poly_restrict(x.comp.at(i), S_.elt(sigma).verts);
    throw std::logic_error("component: element below no maximal element");
}

bool FaceRing::is_element(const FaceRingElt& x) const {
    const auto& mx = S_.maximal();
    if (x.comp.size() != mx.size()) return false;
    for (std::size_t i = 0; i < mx.size(); ++i)
        if (!(poly_restrict(x.comp[i], S_.elt(mx[i]).verts) == x.comp[i]))
            return false;
    for (std::size_t i = 0; i < mx.size(); ++i)
        for (std::size_t j = i + 1; j < mx.size(); ++j)
            for (std::size_t tau : S_.max_common_lower(mx[i], mx[j])) {
                const std::vector<int>& vs = S_.elt(tau).verts;
                if (!(poly_restrict(x.comp[i], vs) ==
                      poly_restrict(x.comp[j], vs)))
                    return false;
            }
    return true;
}

static void monos_on(const std::vector<int>& vs, std::size_t i, int left,
                     VExp& cur, std::vector<VExp>& out) {
    if (i == vs.size()) {
        if (left == 0) out.push_back(cur);
        return;
    }
    for (int e = 0; e <= left; ++e) {
        cur[vs[i] - 1] = e;
        monos_on(vs, i + 1, left - e, cur, out);
    }
    cur[vs[i] - 1] = 0;
}

const FaceRing::DegData& FaceRing::deg_data(int deg) const {
    auto it = cache_.find(deg);
    if (it != cache_.end()) return it->second;
    DegData d;
    const auto& mx = S_.maximal();
    if (deg >= 0 && deg % 2 == 0) {
        for (std::size_t i = 0; i < mx.size(); ++i) {
            std::vector<VExp> ms;
            VExp cur(S_.nverts(), 0);
            monos_on(S_.elt(mx[i]).verts, 0, deg / 2, cur, ms);
            for (const auto& m : ms) {
                d.index[{i, m}] = d.unknowns.size();
                d.unknowns.emplace_back(i, m);
            }
        }
    }
    std::vector<std::vector<Int>> rows;
    for (std::size_t i = 0; i < mx.size(); ++i)
        for (std::size_t j = i + 1; j < mx.size(); ++j)
            for (std::size_t tau : S_.max_common_lower(mx[i], mx[j])) {
                std::vector<VExp> ms;
                VExp cur(S_.nverts(), 0);
                if (deg >= 0 && deg % 2 == 0)
                    monos_on(S_.elt(tau).verts, 0, deg / 2, cur, ms);
                for (const auto& m : ms) {
                    std::vector<Int> row(d.unknowns.size(), 0);
                    row[d.index.at({i, m})] += 1;
                    row[d.index.at({j, m})] -= 1;
                    rows.push_back(std::move(row));
                }
            }
    IntMatrix c = IntMatrix::zero(rows.size(), d.unknowns.size());
    for (std::size_t r = 0; r < rows.size(); ++r) c.a[r] = rows[r];
    d.kb = kernel_basis(c);
    return cache_.emplace(deg, std::move(d)).first->second;
}

long long FaceRing::dim(int deg) const {
    return (long long)deg_data(deg).kb.cols;
}

FaceRingElt FaceRing::basis_elt(int deg, std::size_t i) const {
    const DegData& d = deg_data(deg);
    if (i >= d.kb.cols) throw std::out_of_range("basis_elt: index");
    FaceRingElt x = zero();
    for (std::size_t r = 0; r < d.unknowns.size(); ++r)
        add_term(x.comp[d.unknowns[r].first], d.unknowns[r].second,
                 d.kb.a[r][i]);
    return x;
}

std::vector<Int> FaceRing::pack(const FaceRingElt& x, int deg) const {
    const DegData& d = deg_data(deg);
    if (x.comp.size() != S_.maximal().size())
        throw std::invalid_argument("pack: wrong tuple length");
    std::vector<Int> out(d.unknowns.size(), 0);
    for (std::size_t i = 0; i < x.comp.size(); ++i)
        for (const auto& [m, v] : x.comp[i].t) {
            int w = 0;
            for (int e : m) w += e;
            if (2 * w != deg)
                throw std::invalid_argument("pack: not homogeneous of the degree");
            auto it = d.index.find({i, m});
            if (it == d.index.end())
                throw std::invalid_argument(
                    "pack: monomial not supported on the facet");
            out[it->second] = v;
        }
    return out;
}

std::vector<Int> FaceRing::coords(const FaceRingElt& x, int deg) const {
    const DegData& d = deg_data(deg);
    std::optional<std::vector<Int>> c = solve(d.kb, pack(x, deg));
    if (!c) throw std::invalid_argument("coords: not a limit tuple");
    return *c;
}

std::vector<long long> FaceRing::hilbert(int max_deg) const {
    std::vector<long long> out;
    for (int deg = 0; deg <= max_deg; ++deg) out.push_back(dim(deg));
    return out;
}

FaceRingElt pullback(const VertexPreservingMap& kappa, const FaceRingElt& x) {
    if (!validate(kappa).empty())
        throw std::invalid_argument("pullback: invalid map");
    const SimplicialPoset& S = *kappa.src;
    const SimplicialPoset& T = *kappa.dst;
    const auto& tmx = T.maximal();
    if (x.comp.size() != tmx.size())
        throw std::invalid_argument("pullback: wrong tuple length");
    FaceRingElt out;
    out.comp.resize(S.maximal().size());
    for (std::size_t i = 0; i < S.maximal().size(); ++i) {
        std::size_t tm = kappa.img[S.maximal()[i]];
        bool found = false;
        for (std::size_t j = 0; j < tmx.size() && !found; ++j)
            if (T.leq(tm, tmx[j])) {
                out.comp[i] = poly_restrict(x.comp[j], T.elt(tm).verts);
                found = true;
            }
        if (!found)
            throw std::logic_error("pullback: image below no maximal element");
    }
    return out;
}

/******** Mayer-Vietoris ********/

MVCert mayer_vietoris_check(const SimplicialPoset& S,
                            const std::vector<std::size_t>& part1,
                            const std::vector<std::size_t>& part2, int window) {
    std::vector<std::size_t> i1, i2;
    SimplicialPoset S1 = S.induced(part1, &i1);
    SimplicialPoset S2 = S.induced(part2, &i2);
    std::set<std::size_t> un(i1.begin(), i1.end());
    un.insert(i2.begin(), i2.end());
    if (un.size() != S.size())
        throw std::invalid_argument("mayer_vietoris: parts do not cover the poset");
    std::vector<std::size_t> common, i12;
    std::set_intersection(i1.begin(), i1.end(), i2.begin(), i2.end(),
                          std::back_inserter(common));
    SimplicialPoset S12 = S.induced(common, &i12);

    VertexPreservingMap inc1{&S1, &S, i1}, inc2{&S2, &S, i2};
    auto pos_in = [](const std::vector<std::size_t>& list, std::size_t e) {
        return (std::size_t)(std::lower_bound(list.begin(), list.end(), e) -
                             list.begin());
    };
    std::vector<std::size_t> j1(i12.size()), j2(i12.size());
    for (std::size_t a = 0; a < i12.size(); ++a) {
        j1[a] = pos_in(i1, i12[a]);
        j2[a] = pos_in(i2, i12[a]);
    }
    VertexPreservingMap into1{&S12, &S1, j1}, into2{&S12, &S2, j2};

    FaceRing R(S), R1(S1), R2(S2), R12(S12);
    MVCert cert;
    for (int deg = 0; deg <= window; ++deg) {
        long long d0 = R.dim(deg), d1 = R1.dim(deg), d2 = R2.dim(deg),
                  d12 = R12.dim(deg);
        cert.dims.push_back({d0, d1, d2, d12});
        IntMatrix alpha = IntMatrix::zero((std::size_t)(d1 + d2), (std::size_t)d0);
        for (long long c = 0; c < d0; ++c) {
            FaceRingElt x = R.basis_elt(deg, (std::size_t)c);
            std::vector<Int> y1 = R1.coords(pullback(inc1, x), deg);
            std::vector<Int> y2 = R2.coords(pullback(inc2, x), deg);
            for (long long r = 0; r < d1; ++r) alpha.a[r][c] = y1[r];
            for (long long r = 0; r < d2; ++r) alpha.a[d1 + r][c] = y2[r];
        }
        IntMatrix beta = IntMatrix::zero((std::size_t)d12, (std::size_t)(d1 + d2));
        for (long long c = 0; c < d1; ++c) {
            std::vector<Int> y =
                R12.coords(pullback(into1, R1.basis_elt(deg, (std::size_t)c)), deg);
            for (long long r = 0; r < d12; ++r) beta.a[r][c] = y[r];
        }
        for (long long c = 0; c < d2; ++c) {
            std::vector<Int> y =
                R12.coords(pullback(into2, R2.basis_elt(deg, (std::size_t)c)), deg);
            for (long long r = 0; r < d12; ++r) beta.a[r][d1 + c] = -y[r];
        }
        std::string at = " in degree " + std::to_string(deg);
        if (!is_zero(mat_mul(beta, alpha)))
            cert.problems.push_back("composite not zero" + at);
        long long ra = rank_q(alpha), rb = rank_q(beta);
        if (ra != d0) cert.problems.push_back("first map not injective" + at);
        if (ra + rb != d1 + d2)
            cert.problems.push_back("not exact in the middle" + at);
        if (rb != d12)
            cert.problems.push_back("second map not surjective" + at);
        if (d0 + d12 != d1 + d2)
            cert.problems.push_back("Hilbert additivity fails" + at);
    }
    cert.ok = cert.problems.empty();
    return cert;
}

/******** the face ring as a presented dga ********/

FaceRingDGA::FaceRingDGA(FaceRing R, int window) : R_(std::move(R)), n_(window) {
    if (window < 0) throw std::invalid_argument("facering dga: negative window");
}

std::size_t FaceRingDGA::rank(int deg) const {
    if (deg < 0 || deg > n_) return 0;
    return (std::size_t)R_.dim(deg);
}

AElt FaceRingDGA::mul(const ALetter& a, const ALetter& b) const {
    FaceRingElt p =
        R_.basis_elt(a.first, a.second) * R_.basis_elt(b.first, b.second);
    if (p.zero()) return AElt{};
    int deg = a.first + b.first;
    if (deg > n_) throw TruncationError("facering dga: product beyond window");
    std::vector<Int> c = R_.coords(p, deg);
    AElt out;
    for (std::size_t i = 0; i < c.size(); ++i) add_term(out, {deg, i}, c[i]);
    return out;
}

/******** loop space homology ********/

BettiTable resolution_betti(const FaceRing& R, int hom_max, int deg_max) {
    /* free module: generator degrees; an element of degree d has coordinates
       over (generator s, ring basis of degree d - gdeg[s]) */
    struct Free {
        std::vector<int> gdeg;
        std::vector<std::size_t> off_at(const FaceRing& R, int d) const {
            std::vector<std::size_t> off(gdeg.size() + 1, 0);
            for (std::size_t s = 0; s < gdeg.size(); ++s)
                off[s + 1] =
                    off[s] + (d >= gdeg[s] ? (std::size_t)R.dim(d - gdeg[s]) : 0);
            return off;
        }
    };

    BettiTable beta;
    beta[{0, 0}] = 1;

    auto mul_basis = [&R](int d1, std::size_t i, int d2, std::size_t j) {
        FaceRingElt p = R.basis_elt(d1, i) * R.basis_elt(d2, j);
        if (p.zero()) return std::vector<Int>((std::size_t)R.dim(d1 + d2), 0);
        return R.coords(p, d1 + d2);
    };

    Free F{{0}}, Fprev{{}};
    /* images of the current generators in the previous module, keyed by
       generator degree; generators of equal degree are contiguous in gdeg */
    std::map<int, IntMatrix> phi;
    bool first = true;

    for (int i = 1; i <= hom_max; ++i) {
        std::map<int, IntMatrix> ker;
        for (int d = 0; d <= deg_max; d += 2) {
            std::vector<std::size_t> off = F.off_at(R, d);
            IntMatrix m;
            if (first) {
                /* the augmentation to the residue field */
                m = IntMatrix::zero(d == 0 ? 1 : 0, off.back());
                if (d == 0 && off.back() > 0) m.a[0][0] = 1;
            } else {
                std::vector<std::size_t> poff = Fprev.off_at(R, d);
                m = IntMatrix::zero(poff.back(), off.back());
                for (std::size_t s = 0; s < F.gdeg.size(); ++s) {
                    int w = d - F.gdeg[s];
                    if (w < 0) continue;
                    const IntMatrix& col = phi.at(F.gdeg[s]);
                    std::size_t s0 = s;
                    while (s0 > 0 && F.gdeg[s0 - 1] == F.gdeg[s]) --s0;
                    std::size_t cidx = s - s0;
                    std::vector<std::size_t> goff = Fprev.off_at(R, F.gdeg[s]);
                    for (std::size_t j = 0; j < (std::size_t)R.dim(w); ++j)
                        for (std::size_t sp = 0; sp < Fprev.gdeg.size(); ++sp) {
                            int wp = F.gdeg[s] - Fprev.gdeg[sp];
                            if (wp < 0) continue;
                            for (std::size_t ip = 0; ip < (std::size_t)R.dim(wp);
                                 ++ip) {
                                Int c = col.a[goff[sp] + ip][cidx];
                                if (c == 0) continue;
                                std::vector<Int> prod = mul_basis(w, j, wp, ip);
                                for (std::size_t r = 0; r < prod.size(); ++r)
                                    m.a[poff[sp] + r][off[s] + j] += c * prod[r];
                            }
                        }
                }
            }
            ker[d] = kernel_basis(m);
        }

        /* minimal generators: the kernel modulo its multiples from lower
           degrees, chosen greedily by rank over Q */
        std::map<int, IntMatrix> ngen;
        for (int d = 0; d <= deg_max; d += 2) {
            std::vector<std::size_t> off = F.off_at(R, d);
            std::size_t rows = off.back();
            std::vector<std::vector<Int>> span;
            for (int dp = 0; dp < d; dp += 2) {
                const IntMatrix& K = ker[dp];
                std::vector<std::size_t> poff = F.off_at(R, dp);
                int w = d - dp;
                for (std::size_t c = 0; c < K.cols; ++c)
                    for (std::size_t rb = 0; rb < (std::size_t)R.dim(w); ++rb) {
                        std::vector<Int> vec(rows, 0);
                        for (std::size_t s = 0; s < F.gdeg.size(); ++s) {
                            int wp = dp - F.gdeg[s];
                            if (wp < 0) continue;
                            for (std::size_t ip = 0; ip < (std::size_t)R.dim(wp);
                                 ++ip) {
                                Int cc = K.a[poff[s] + ip][c];
                                if (cc == 0) continue;
                                std::vector<Int> prod = mul_basis(w, rb, wp, ip);
                                for (std::size_t r = 0; r < prod.size(); ++r)
                                    vec[off[s] + r] += cc * prod[r];
                            }
                        }
                        span.push_back(std::move(vec));
                    }
            }
            const IntMatrix& K = ker[d];
            IntMatrix ext = IntMatrix::zero(rows, span.size());
            for (std::size_t c = 0; c < span.size(); ++c)
                for (std::size_t r = 0; r < rows; ++r) ext.a[r][c] = span[c][r];
            long long base = rank_q(ext);
            std::vector<std::size_t> chosen;
            for (std::size_t c = 0; c < K.cols; ++c) {
                IntMatrix trym = IntMatrix::zero(rows, ext.cols + 1);
                for (std::size_t r = 0; r < rows; ++r) {
                    for (std::size_t cc = 0; cc < ext.cols; ++cc)
                        trym.a[r][cc] = ext.a[r][cc];
                    trym.a[r][ext.cols] = K.a[r][c];
                }
                if (rank_q(trym) > base + (long long)chosen.size()) {
                    chosen.push_back(c);
                    ext = trym;
                }
            }
            if (!chosen.empty()) {
                IntMatrix g = IntMatrix::zero(rows, chosen.size());
                for (std::size_t c = 0; c < chosen.size(); ++c)
                    for (std::size_t r = 0; r < rows; ++r)
                        g.a[r][c] = K.a[r][chosen[c]];
                ngen[d] = g;
                beta[{i, d}] = (long long)chosen.size();
            }
        }

        Fprev = F;
        std::vector<int> gd;
        for (const auto& [d, g] : ngen)
            for (std::size_t c = 0; c < g.cols; ++c) gd.push_back(d);
        F = Free{gd};
        phi = ngen;
        first = false;
        if (F.gdeg.empty()) break;
    }
    return beta;
}

static void check_field(long long p) {
    if (p == 0) return;
    if (p < 2) throw std::invalid_argument("coefficients are not a field");
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) throw std::invalid_argument("coefficients are not a field");
}

BettiTable tor_loops(const SimplicialPoset& S, int hom_max, int deg_max,
                     long long p) {
    check_field(p);
    if (hom_max < 0 || deg_max < 0)
        throw std::invalid_argument("tor_loops: negative window");
    FaceRing R(S);
    FaceRingDGA A(R, deg_max);
    BettiTable out;
    for (int m = 0; m <= deg_max; m += 2) {
        FgComplex c = bar_strand(A, m, hom_max + 1);
        for (int k = 0; k <= hom_max; ++k) {
            long long r = betti(c, k, p);
            if (r != 0) out[{k, m}] = r;
        }
    }
    return out;
}

BettiTable hh_free_loops(const SimplicialPoset& S, int hom_max, int deg_max,
                         long long p) {
    check_field(p);
    if (hom_max < 0 || deg_max < 0)
        throw std::invalid_argument("hh_free_loops: negative window");
    FaceRing R(S);
    FaceRingDGA A(R, deg_max);
    BettiTable out;
    for (int m = 0; m <= deg_max; m += 2) {
        FgComplex c = hochschild_strand(A, m, hom_max + 1);
        for (int k = 0; k <= hom_max; ++k) {
            long long r = betti(c, k, p);
            if (r != 0) out[{k, m}] = r;
        }
    }
    return out;
}

}  // namespace chalg
