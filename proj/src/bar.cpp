#include "chalg/bar.hpp"

#include <algorithm>

namespace chalg {

/******** elements ********/

void add_term(AElt& e, const ALetter& a, const Int& v) {
    if (v == 0) return;
    auto it = e.t.find(a);
    if (it == e.t.end()) {
        e.t.emplace(a, v);
    } else {
        it->second += v;
        if (it->second == 0) e.t.erase(it);
    }
}

AElt elt_of(const ALetter& a) {
    AElt e;
    e.t.emplace(a, 1);
    return e;
}

AElt& AElt::operator+=(const AElt& o) {
    for (const auto& [a, v] : o.t) add_term(*this, a, v);
    return *this;
}

AElt& AElt::operator-=(const AElt& o) {
    for (const auto& [a, v] : o.t) add_term(*this, a, -v);
    return *this;
}

AElt& AElt::operator*=(const Int& c) {
    if (c == 0) {
        t.clear();
        return *this;
    }
    for (auto& [a, v] : t) v *= c;
    return *this;
}

AElt PresentedDGA::diff(const AElt& e) const {
    AElt out;
    for (const auto& [a, v] : e.t)
        for (const auto& [b, w] : diff(a).t) add_term(out, b, v * w);
    return out;
}

AElt PresentedDGA::mul(const AElt& x, const AElt& y) const {
    AElt out;
    for (const auto& [a, v] : x.t)
        for (const auto& [b, w] : y.t)
            for (const auto& [c, u] : mul(a, b).t) add_term(out, c, v * w * u);
    return out;
}

Int PresentedDGA::aug(const AElt& e) const {
    auto it = e.t.find({0, 0});
    return it == e.t.end() ? Int(0) : it->second;
}

static void check_letter(const PresentedDGA& A, const ALetter& a, int min_deg,
                         const char* who) {
    if (a.first < min_deg || a.first > A.window())
        throw std::invalid_argument(std::string(who) + ": degree out of range");
    if (a.second >= A.rank(a.first))
        throw std::invalid_argument(std::string(who) + ": basis index");
}

static bool homogeneous(const AElt& e, int deg) {
    for (const auto& [a, v] : e.t) {
        (void)v;
        if (a.first != deg) return false;
    }
    return true;
}

void verify_presented_dga(const PresentedDGA& A) {
    int n = A.window();
    if (n < 0) throw std::runtime_error("dga: empty window");
    if (A.rank(0) != 1) throw std::runtime_error("dga: degree 0 must be k");
    ALetter unit{0, 0};
    if (!A.diff(unit).zero()) throw std::runtime_error("dga: d(1) != 0");

    std::vector<ALetter> basis;
    for (int d = 0; d <= n; ++d)
        for (std::size_t i = 0; i < A.rank(d); ++i) basis.push_back({d, i});

    for (const ALetter& a : basis) {
        if (a.first + 1 <= n && !homogeneous(A.diff(a), a.first + 1))
            throw std::runtime_error("dga: d not homogeneous of degree 1");
        if (a.first + 2 <= n && !A.diff(A.diff(a)).zero())
            throw std::runtime_error("dga: d^2 != 0");
        if (!(A.mul(unit, a) == elt_of(a)) || !(A.mul(a, unit) == elt_of(a)))
            throw std::runtime_error("dga: unit");
    }
    for (const ALetter& a : basis)
        for (const ALetter& b : basis) {
            if (a.first + b.first > n) continue;
            AElt ab = A.mul(a, b);
            if (!homogeneous(ab, a.first + b.first))
                throw std::runtime_error("dga: mul not graded");
            if (a.first > 0 && b.first > 0 && A.aug(ab) != 0)
                throw std::runtime_error("dga: augmentation not multiplicative");
            if (a.first + b.first + 1 <= n) {
                AElt lhs = A.diff(ab);
                AElt rhs = A.mul(A.diff(a), elt_of(b));
                AElt mixed = A.mul(elt_of(a), A.diff(b));
                mixed *= sign_pow(a.first);
                rhs += mixed;
                if (!(lhs == rhs)) throw std::runtime_error("dga: Leibniz");
            }
            if (A.commutative()) {
                AElt ba = A.mul(b, a);
                ba *= sign_pow(a.first * b.first);
                if (!(ab == ba)) throw std::runtime_error("dga: commutativity");
            }
            for (const ALetter& c : basis) {
                if (a.first + b.first + c.first > n) continue;
                if (!(A.mul(ab, elt_of(c)) == A.mul(elt_of(a), A.mul(b, c))))
                    throw std::runtime_error("dga: associativity");
            }
        }
}

/******** one-generator algebras ********/

PolyDGA::PolyDGA(int gen_deg, int window) : g_(gen_deg), n_(window) {
    if (g_ < 2 || g_ % 2 != 0)
        throw std::invalid_argument("poly: generator degree must be even");
}

std::size_t PolyDGA::rank(int deg) const {
    return (deg >= 0 && deg <= n_ && deg % g_ == 0) ? 1 : 0;
}

AElt PolyDGA::mul(const ALetter& a, const ALetter& b) const {
    int deg = a.first + b.first;
    if (deg > n_) throw TruncationError("poly: product beyond window");
    return elt_of({deg, 0});
}

TruncPolyDGA::TruncPolyDGA(int gen_deg, int power, int window)
    : g_(gen_deg), m_(power), n_(window) {
    if (g_ < 2 || g_ % 2 != 0)
        throw std::invalid_argument("truncpoly: generator degree must be even");
    if (m_ < 2) throw std::invalid_argument("truncpoly: power");
}

std::size_t TruncPolyDGA::rank(int deg) const {
    return (deg >= 0 && deg <= n_ && deg % g_ == 0 && deg / g_ < m_) ? 1 : 0;
}

AElt TruncPolyDGA::mul(const ALetter& a, const ALetter& b) const {
    int e = a.first / g_ + b.first / g_;
    if (e >= m_) return {};
    if (e * g_ > n_) throw TruncationError("truncpoly: product beyond window");
    return elt_of({e * g_, 0});
}

/******** bar words ********/

int BarWord::degree() const {
    int d = 0;
    for (const ALetter& x : a) d += x.first - 1;
    return d;
}

int BarWord::internal() const {
    int d = 0;
    for (const ALetter& x : a) d += x.first;
    return d;
}

void add_term(BarChain& ch, const BarWord& w, const Int& v) {
    if (v == 0) return;
    auto it = ch.t.find(w);
    if (it == ch.t.end()) {
        ch.t.emplace(w, v);
    } else {
        it->second += v;
        if (it->second == 0) ch.t.erase(it);
    }
}

BarChain chain_of(const BarWord& w) {
    BarChain ch;
    ch.t.emplace(w, 1);
    return ch;
}

BarChain& BarChain::operator+=(const BarChain& o) {
    for (const auto& [w, v] : o.t) add_term(*this, w, v);
    return *this;
}

BarChain& BarChain::operator-=(const BarChain& o) {
    for (const auto& [w, v] : o.t) add_term(*this, w, -v);
    return *this;
}

BarChain& BarChain::operator*=(const Int& c) {
    if (c == 0) {
        t.clear();
        return *this;
    }
    for (auto& [w, v] : t) v *= c;
    return *this;
}

int bar_prefix_exponent(const BarWord& w, std::size_t i) {
    int e = 0;
    for (std::size_t j = 0; j < i; ++j) e += w.a[j].first - 1;
    return e;
}

static void check_word(const PresentedDGA& A, const BarWord& w,
                       const char* who) {
    for (const ALetter& x : w.a) check_letter(A, x, 1, who);
}

BarChain bar_differential(const PresentedDGA& A, const BarWord& w) {
    check_word(A, w, "bar");
    std::size_t k = w.a.size();
    BarChain out;
    for (std::size_t i = 0; i < k; ++i) {
        int e = bar_prefix_exponent(w, i);
        for (const auto& [b, c] : A.diff(w.a[i]).t) {
            BarWord v = w;
            v.a[i] = b;
            add_term(out, v, -sign_pow(e) * c);
        }
    }
    for (std::size_t i = 0; i + 1 < k; ++i) {
        int e = bar_prefix_exponent(w, i + 1);
        for (const auto& [b, c] : A.mul(w.a[i], w.a[i + 1]).t) {
            BarWord v;
            v.a.assign(w.a.begin(), w.a.begin() + (long)i);
            v.a.push_back(b);
            v.a.insert(v.a.end(), w.a.begin() + (long)i + 2, w.a.end());
            add_term(out, v, sign_pow(e) * c);
        }
    }
    return out;
}

BarChain bar_differential(const PresentedDGA& A, const BarChain& ch) {
    BarChain out;
    for (const auto& [w, v] : ch.t) {
        BarChain dw = bar_differential(A, w);
        dw *= v;
        out += dw;
    }
    return out;
}

static void add_tensor(BarTensor& t, const BarWord& x, const BarWord& y,
                       const Int& v) {
    if (v == 0) return;
    auto key = std::make_pair(x, y);
    auto it = t.find(key);
    if (it == t.end()) {
        t.emplace(key, v);
    } else {
        it->second += v;
        if (it->second == 0) t.erase(it);
    }
}

BarTensor bar_diagonal(const BarWord& w) {
    BarTensor out;
    for (std::size_t i = 0; i <= w.a.size(); ++i) {
        BarWord l, r;
        l.a.assign(w.a.begin(), w.a.begin() + (long)i);
        r.a.assign(w.a.begin() + (long)i, w.a.end());
        add_tensor(out, l, r, 1);
    }
    return out;
}

BarTensor bar_diagonal(const BarChain& ch) {
    BarTensor out;
    for (const auto& [w, v] : ch.t)
        for (const auto& [xy, u] : bar_diagonal(w))
            add_tensor(out, xy.first, xy.second, v * u);
    return out;
}

/******** hga twisting cochain and the bar product ********/

HGA trivial_hga(const PresentedDGA& A) {
    if (!A.commutative())
        throw std::invalid_argument("hga: trivial structure needs commutativity");
    HGA h;
    h.A = &A;
    h.trivial = true;
    return h;
}

AElt hga_twisting(const HGA& H, const BarWord& x, const BarWord& y) {
    if (x.length() == 1 && y.length() == 0) return elt_of(x.a[0]);
    if (x.length() == 0 && y.length() == 1) return elt_of(y.a[0]);
    if (x.length() == 1 && y.length() >= 1 && !H.trivial) {
        int l = y.length();
        int s = l * x.a[0].first;
        for (int i = 1; i <= l; ++i) s += (l - i) * y.a[(size_t)i - 1].first;
        AElt e = H.e(x.a[0], y.a);
        e *= sign_pow(s);
        return e;
    }
    return {};
}

static BarWord word_slice(const BarWord& w, std::size_t from, std::size_t to) {
    BarWord out;
    out.a.assign(w.a.begin() + (long)from, w.a.begin() + (long)to);
    return out;
}

AElt cochain_of_map(const BarMap& f, const BarWord& w) {
    AElt out;
    for (const auto& [v, c] : f(w).t)
        if (v.length() == 1) add_term(out, v.a[0], c);
    return out;
}

AElt cochain_of_map(const BarMap2& f, const BarWord& x, const BarWord& y) {
    AElt out;
    for (const auto& [v, c] : f(x, y).t)
        if (v.length() == 1) add_term(out, v.a[0], c);
    return out;
}

static void check_ideal(const AElt& e) {
    for (const auto& [a, v] : e.t) {
        (void)v;
        if (a.first < 1)
            throw std::runtime_error(
                "twisting cochain value outside the augmentation ideal");
    }
}

BarChain map_of_cochain(const BarCochain& t, const BarWord& w) {
    BarChain out;
    if (w.length() == 0) {
        add_term(out, BarWord{}, 1);
        return out;
    }
    for (std::size_t i = 1; i <= w.a.size(); ++i) {
        AElt head = t(word_slice(w, 0, i));
        if (head.zero()) continue;
        check_ideal(head);
        BarChain tail =
            map_of_cochain(t, word_slice(w, i, w.a.size()));
        for (const auto& [b, cb] : head.t)
            for (const auto& [v, cv] : tail.t) {
                BarWord u;
                u.a.push_back(b);
                u.a.insert(u.a.end(), v.a.begin(), v.a.end());
                add_term(out, u, cb * cv);
            }
    }
    return out;
}

BarChain map_of_cochain(const BarCochain2& t, const BarWord& x,
                        const BarWord& y) {
    BarChain out;
    if (x.length() == 0 && y.length() == 0) {
        add_term(out, BarWord{}, 1);
        return out;
    }
    for (std::size_t i = 0; i <= x.a.size(); ++i)
        for (std::size_t j = 0; j <= y.a.size(); ++j) {
            if (i == 0 && j == 0) continue;
            AElt head = t(word_slice(x, 0, i), word_slice(y, 0, j));
            if (head.zero()) continue;
            check_ideal(head);
            /* Koszul sign of the tensor-coalgebra diagonal: the tail of x
               moves past the head of y */
            int e = word_slice(x, i, x.a.size()).degree() *
                    word_slice(y, 0, j).degree();
            BarChain tail = map_of_cochain(t, word_slice(x, i, x.a.size()),
                                           word_slice(y, j, y.a.size()));
            for (const auto& [b, cb] : head.t)
                for (const auto& [v, cv] : tail.t) {
                    BarWord u;
                    u.a.push_back(b);
                    u.a.insert(u.a.end(), v.a.begin(), v.a.end());
                    add_term(out, u, sign_pow(e) * cb * cv);
                }
        }
    return out;
}

BarChain bar_product(const HGA& H, const BarWord& x, const BarWord& y) {
    check_word(*H.A, x, "bar product");
    check_word(*H.A, y, "bar product");
    BarCochain2 t = [&H](const BarWord& u, const BarWord& v) {
        return hga_twisting(H, u, v);
    };
    return map_of_cochain(t, x, y);
}

BarChain bar_product(const HGA& H, const BarChain& x, const BarChain& y) {
    BarChain out;
    for (const auto& [w1, c1] : x.t)
        for (const auto& [w2, c2] : y.t) {
            BarChain p = bar_product(H, w1, w2);
            p *= c1 * c2;
            out += p;
        }
    return out;
}

/******** Hochschild complex ********/

void add_term(HChain& ch, const HWord& x, const Int& v) {
    if (v == 0) return;
    auto it = ch.t.find(x);
    if (it == ch.t.end()) {
        ch.t.emplace(x, v);
    } else {
        it->second += v;
        if (it->second == 0) ch.t.erase(it);
    }
}

HChain chain_of(const HWord& x) {
    HChain ch;
    ch.t.emplace(x, 1);
    return ch;
}

HChain& HChain::operator+=(const HChain& o) {
    for (const auto& [x, v] : o.t) add_term(*this, x, v);
    return *this;
}

HChain& HChain::operator-=(const HChain& o) {
    for (const auto& [x, v] : o.t) add_term(*this, x, -v);
    return *this;
}

HChain& HChain::operator*=(const Int& c) {
    if (c == 0) {
        t.clear();
        return *this;
    }
    for (auto& [x, v] : t) v *= c;
    return *this;
}

HChain hochschild_differential(const PresentedDGA& A, const HWord& x) {
    check_letter(A, x.a0, 0, "hochschild");
    check_word(A, x.w, "hochschild");
    std::size_t n = x.w.a.size();
    HChain out;
    for (const auto& [b, c] : A.diff(x.a0).t) add_term(out, {b, x.w}, c);
    int e0 = sign_pow(x.a0.first);
    for (const auto& [v, c] : bar_differential(A, x.w).t)
        add_term(out, {x.a0, v}, e0 * c);
    if (n == 0) return out;
    for (const auto& [b, c] : A.mul(x.a0, x.w.a[0]).t)
        add_term(out, {b, word_slice(x.w, 1, n)}, e0 * c);
    int ec = (x.w.a[n - 1].first - 1) *
             (x.a0.first + bar_prefix_exponent(x.w, n - 1));
    for (const auto& [b, c] : A.mul(x.w.a[n - 1], x.a0).t)
        add_term(out, {b, word_slice(x.w, 0, n - 1)}, -sign_pow(ec) * c);
    return out;
}

HChain hochschild_differential(const PresentedDGA& A, const HChain& ch) {
    HChain out;
    for (const auto& [x, v] : ch.t) {
        HChain dx = hochschild_differential(A, x);
        dx *= v;
        out += dx;
    }
    return out;
}

std::vector<std::pair<std::vector<ALetter>, int>> graded_shuffles(
    const std::vector<ALetter>& w, const std::vector<ALetter>& v) {
    std::vector<std::pair<std::vector<ALetter>, int>> out;
    if (w.empty()) {
        out.push_back({v, 0});
        return out;
    }
    if (v.empty()) {
        out.push_back({w, 0});
        return out;
    }
    int wdeg = 0;
    for (const ALetter& x : w) wdeg += x.first - 1;
    std::vector<ALetter> wrest(w.begin() + 1, w.end());
    for (auto& [rest, s] : graded_shuffles(wrest, v)) {
        std::vector<ALetter> u;
        u.push_back(w[0]);
        u.insert(u.end(), rest.begin(), rest.end());
        out.push_back({u, s});
    }
    std::vector<ALetter> vrest(v.begin() + 1, v.end());
    for (auto& [rest, s] : graded_shuffles(w, vrest)) {
        std::vector<ALetter> u;
        u.push_back(v[0]);
        u.insert(u.end(), rest.begin(), rest.end());
        out.push_back({u, s + (v[0].first - 1) * wdeg});
    }
    return out;
}

HChain hochschild_shuffle(const PresentedDGA& A, const HWord& x,
                          const HWord& y) {
    if (!A.commutative())
        throw std::invalid_argument("hochschild: shuffle needs commutativity");
    check_letter(A, x.a0, 0, "hochschild");
    check_letter(A, y.a0, 0, "hochschild");
    check_word(A, x.w, "hochschild");
    check_word(A, y.w, "hochschild");
    AElt prod = A.mul(x.a0, y.a0);
    int e0 = y.a0.first * x.w.degree();
    HChain out;
    for (const auto& [letters, s] : graded_shuffles(x.w.a, y.w.a))
        for (const auto& [b, c] : prod.t)
            add_term(out, {b, BarWord{letters}}, sign_pow(e0 + s) * c);
    return out;
}

HChain hochschild_shuffle(const PresentedDGA& A, const HChain& x,
                          const HChain& y) {
    HChain out;
    for (const auto& [w1, c1] : x.t)
        for (const auto& [w2, c2] : y.t) {
            HChain p = hochschild_shuffle(A, w1, w2);
            p *= c1 * c2;
            out += p;
        }
    return out;
}

/******** strand complexes ********/

static void require_zero_diff(const PresentedDGA& A) {
    for (int d = 0; d <= A.window(); ++d)
        for (std::size_t i = 0; i < A.rank(d); ++i)
            if (!A.diff({d, (std::size_t)i}).zero())
                throw std::invalid_argument("strand: differential must vanish");
}

static void enum_words(const PresentedDGA& A, int internal, int n,
                       BarWord& cur, std::vector<BarWord>& out) {
    if (n == 0) {
        if (internal == 0) out.push_back(cur);
        return;
    }
    for (int d = 1; d + (n - 1) <= internal; ++d)
        for (std::size_t i = 0; i < A.rank(d); ++i) {
            cur.a.push_back({d, i});
            enum_words(A, internal - d, n - 1, cur, out);
            cur.a.pop_back();
        }
}

FgComplex bar_strand(const PresentedDGA& A, int internal_deg, int nmax) {
    require_zero_diff(A);
    if (internal_deg > A.window())
        throw TruncationError("bar strand: internal degree beyond window");
    std::vector<std::vector<BarWord>> basis((std::size_t)nmax + 1);
    std::vector<std::map<BarWord, std::size_t>> index((std::size_t)nmax + 1);
    for (int n = 0; n <= nmax; ++n) {
        BarWord cur;
        enum_words(A, internal_deg, n, cur, basis[(std::size_t)n]);
        for (std::size_t i = 0; i < basis[(std::size_t)n].size(); ++i)
            index[(std::size_t)n].emplace(basis[(std::size_t)n][i], i);
    }
    FgComplex c;
    c.lo = -1;
    c.dims.push_back(0);
    for (int n = 0; n <= nmax; ++n)
        c.dims.push_back((long long)basis[(std::size_t)n].size());
    c.dims.push_back(0);
    c.d.push_back(IntMatrix::zero(0, (std::size_t)c.dims[1]));
    for (int n = 1; n <= nmax; ++n) {
        const auto& src = basis[(std::size_t)n];
        const auto& dst = index[(std::size_t)n - 1];
        IntMatrix m = IntMatrix::zero(dst.size(), src.size());
        for (std::size_t j = 0; j < src.size(); ++j)
            for (const auto& [w, v] : bar_differential(A, src[j]).t)
                m.a[dst.at(w)][j] += v;
        c.d.push_back(m);
    }
    c.d.push_back(
        IntMatrix::zero((std::size_t)c.dims[c.dims.size() - 2], 0));
    validate(c);
    return c;
}

FgComplex hochschild_strand(const PresentedDGA& A, int internal_deg,
                            int nmax) {
    require_zero_diff(A);
    if (internal_deg > A.window())
        throw TruncationError("hochschild strand: internal degree beyond window");
    std::vector<std::vector<HWord>> basis((std::size_t)nmax + 1);
    std::vector<std::map<HWord, std::size_t>> index((std::size_t)nmax + 1);
    for (int n = 0; n <= nmax; ++n)
        for (int d0 = 0; d0 <= internal_deg; ++d0)
            for (std::size_t i0 = 0; i0 < A.rank(d0); ++i0) {
                std::vector<BarWord> words;
                BarWord cur;
                enum_words(A, internal_deg - d0, n, cur, words);
                for (const BarWord& w : words)
                    basis[(std::size_t)n].push_back({{d0, i0}, w});
            }
    for (int n = 0; n <= nmax; ++n)
        for (std::size_t i = 0; i < basis[(std::size_t)n].size(); ++i)
            index[(std::size_t)n].emplace(basis[(std::size_t)n][i], i);
    FgComplex c;
    c.lo = -1;
    c.dims.push_back(0);
    for (int n = 0; n <= nmax; ++n)
        c.dims.push_back((long long)basis[(std::size_t)n].size());
    c.dims.push_back(0);
    c.d.push_back(IntMatrix::zero(0, (std::size_t)c.dims[1]));
    for (int n = 1; n <= nmax; ++n) {
        const auto& src = basis[(std::size_t)n];
        const auto& dst = index[(std::size_t)n - 1];
        IntMatrix m = IntMatrix::zero(dst.size(), src.size());
        for (std::size_t j = 0; j < src.size(); ++j)
            for (const auto& [w, v] : hochschild_differential(A, src[j]).t)
                m.a[dst.at(w)][j] += v;
        c.d.push_back(m);
    }
    c.d.push_back(
        IntMatrix::zero((std::size_t)c.dims[c.dims.size() - 2], 0));
    validate(c);
    return c;
}

}  // namespace chalg
