#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "chalg/bar.hpp"
#include "chalg/bundle.hpp"
#include "chalg/hga_cochains.hpp"
#include "chalg/spaces.hpp"

using namespace chalg;

/* k[x] (x) Lambda(y) with |x| = 2, |y| = 3, dy = x^2: the smallest
   commutative dga with a nonzero differential in every sign position */
struct XYModel : PresentedDGA {
    int n;
    explicit XYModel(int window) : n(window) {}
    using PresentedDGA::diff;
    using PresentedDGA::mul;
    std::string name() const override { return "xy"; }
    int window() const override { return n; }
    std::size_t rank(int d) const override {
        if (d < 0 || d > n) return 0;
        if (d % 2 == 0) return 1;
        return d >= 3 ? 1 : 0;
    }
    AElt diff(const ALetter& a) const override {
        if (a.first % 2 == 0) return {};
        if (a.first + 1 > n) throw TruncationError("xy: diff beyond window");
        return elt_of({a.first + 1, 0});
    }
    AElt mul(const ALetter& a, const ALetter& b) const override {
        if (a.first % 2 && b.first % 2) return {};
        if (a.first + b.first > n)
            throw TruncationError("xy: product beyond window");
        return elt_of({a.first + b.first, 0});
    }
    bool commutative() const override { return true; }
};

static BarWord rand_word(std::mt19937& rng, const PresentedDGA& A, int maxlen,
                         int maxdeg) {
    std::vector<ALetter> opts;
    for (int d = 1; d <= maxdeg; ++d)
        for (std::size_t j = 0; j < A.rank(d); ++j) opts.push_back({d, j});
    std::uniform_int_distribution<int> len(0, maxlen);
    std::uniform_int_distribution<std::size_t> pick(0, opts.size() - 1);
    BarWord w;
    for (int i = len(rng); i > 0; --i) w.a.push_back(opts[pick(rng)]);
    return w;
}

static BarWord word_of(std::initializer_list<ALetter> ls) {
    BarWord w;
    w.a = ls;
    return w;
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

TEST_CASE("presented dgas satisfy their axioms in the window") {
    verify_presented_dga(PolyDGA(2, 16));
    verify_presented_dga(TruncPolyDGA(2, 3, 14));
    verify_presented_dga(TruncPolyDGA(2, 2, 12));
    verify_presented_dga(XYModel(13));

    ConstantGroup g2(2);
    WbarSpace wb(g2);
    verify_presented_dga(CochainDGA(wb, 5));

    CHECK_THROWS_AS(PolyDGA(3, 10), std::invalid_argument);
    CHECK_THROWS_AS(PolyDGA(2, 8).mul({6, 0}, {4, 0}), TruncationError);
    XYModel xy(9);
    CHECK_THROWS_AS(xy.diff({9, 0}), TruncationError);
    // known-zero products stay representable beyond the window
    CHECK(TruncPolyDGA(2, 2, 6).mul({4, 0}, {4, 0}).zero());
}

TEST_CASE("bar differential: single letters, adjacent merge, square zero") {
    XYModel xy(13);
    ALetter y{3, 0};
    BarChain dy;  // d[y] = -[dy] = -[x^2]
    add_term(dy, word_of({{4, 0}}), -1);
    CHECK(bar_differential(xy, word_of({y})) == dy);

    TruncPolyDGA t3(2, 3, 14);
    ALetter t{2, 0};
    BarChain dtt;  // d[t|t] = (-1)^{deg t - 1}[t^2] = -[t^2]
    add_term(dtt, word_of({{4, 0}}), -1);
    CHECK(bar_differential(t3, word_of({t, t})) == dtt);
    CHECK(bar_differential(TruncPolyDGA(2, 2, 12), word_of({t, t})).zero());

    // every word of k[t]/t^3 with internal degree <= 12
    std::vector<BarWord> words;
    std::function<void(BarWord&, int)> rec = [&](BarWord& cur, int left) {
        words.push_back(cur);
        for (int d = 2; d <= left; d += 2) {
            if (t3.rank(d) == 0) continue;
            cur.a.push_back({d, 0});
            rec(cur, left - d);
            cur.a.pop_back();
        }
    };
    BarWord cur;
    rec(cur, 12);
    CHECK(words.size() == 33);
    for (const BarWord& w : words)
        CHECK(bar_differential(t3, bar_differential(t3, w)).zero());

    std::mt19937 rng(11);
    for (int rep = 0; rep < 200; ++rep) {
        BarWord w = rand_word(rng, xy, 4, 5);
        if (w.internal() + 2 > xy.window()) continue;
        CHECK(bar_differential(xy, bar_differential(xy, w)).zero());
    }

    ConstantGroup g2(2);
    WbarSpace wb(g2);
    CochainDGA C(wb, 6);
    for (int rep = 0; rep < 100; ++rep) {
        BarWord w = rand_word(rng, C, 3, 3);
        if (w.internal() + 2 > C.window()) continue;
        CHECK(bar_differential(C, bar_differential(C, w)).zero());
    }
}

TEST_CASE("bar diagonal: splits, counit, coassociativity") {
    BarTensor empty;
    add_tensor(empty, BarWord{}, BarWord{}, 1);
    CHECK(bar_diagonal(BarWord{}) == empty);

    BarWord a = word_of({{2, 0}});
    BarTensor da;
    add_tensor(da, BarWord{}, a, 1);
    add_tensor(da, a, BarWord{}, 1);
    CHECK(bar_diagonal(a) == da);

    std::mt19937 rng(5);
    XYModel xy(13);
    for (int rep = 0; rep < 60; ++rep) {
        BarWord w = rand_word(rng, xy, 4, 5);

        // counit on both sides
        BarChain left, right;
        for (const auto& [p, c] : bar_diagonal(w)) {
            if (p.first.length() == 0) add_term(left, p.second, c);
            if (p.second.length() == 0) add_term(right, p.first, c);
        }
        CHECK(left == chain_of(w));
        CHECK(right == chain_of(w));

        // (Delta (x) 1) Delta = (1 (x) Delta) Delta
        std::map<std::tuple<BarWord, BarWord, BarWord>, Int> lhs, rhs;
        for (const auto& [p, c] : bar_diagonal(w)) {
            for (const auto& [q, e] : bar_diagonal(p.first))
                lhs[{q.first, q.second, p.second}] += c * e;
            for (const auto& [q, e] : bar_diagonal(p.second))
                rhs[{p.first, q.first, q.second}] += c * e;
        }
        CHECK(lhs == rhs);
    }
}

/* d(t) - t u t on BA (x) BA, the twisting-cochain condition */
static AElt twisting_defect(const PresentedDGA& A, const BarCochain2& t,
                            const BarWord& x, const BarWord& y) {
    AElt out = A.diff(t(x, y));
    for (const auto& [w, c] : bar_differential(A, x).t) {
        AElt v = t(w, y);
        v *= c;
        out += v;
    }
    for (const auto& [w, c] : bar_differential(A, y).t) {
        AElt v = t(x, w);
        v *= sign_pow(x.degree()) * c;
        out += v;
    }
    for (std::size_t i = 0; i <= x.a.size(); ++i)
        for (std::size_t j = 0; j <= y.a.size(); ++j) {
            BarWord x1, x2, y1, y2;
            x1.a.assign(x.a.begin(), x.a.begin() + (long)i);
            x2.a.assign(x.a.begin() + (long)i, x.a.end());
            y1.a.assign(y.a.begin(), y.a.begin() + (long)j);
            y2.a.assign(y.a.begin() + (long)j, y.a.end());
            int e = x2.degree() * y1.degree()   // diagonal of the tensor dgc
                    + x1.degree() + y1.degree();  // odd t past the first leg
            AElt v = A.mul(t(x1, y1), t(x2, y2));
            v *= -sign_pow(e);
            out += v;
        }
    return out;
}

TEST_CASE("hga twisting cochain satisfies the twisting condition") {
    ConstantGroup g2(2);
    WbarSpace wb(g2);
    CochainDGA C(wb, 6);
    HGA hc = cochain_hga(C);
    BarCochain2 tc = [&hc](const BarWord& u, const BarWord& v) {
        return hga_twisting(hc, u, v);
    };
    std::mt19937 rng(23);
    int checked = 0;
    for (int rep = 0; rep < 120; ++rep) {
        BarWord x = rand_word(rng, C, 2, 3);
        BarWord y = rand_word(rng, C, 3, 3);
        if (x.internal() + y.internal() + 1 > C.window()) continue;
        CHECK(twisting_defect(C, tc, x, y).zero());
        ++checked;
    }
    CHECK(checked > 40);

    XYModel xy(13);
    HGA triv = trivial_hga(xy);
    BarCochain2 ts = [&triv](const BarWord& u, const BarWord& v) {
        return hga_twisting(triv, u, v);
    };
    for (int rep = 0; rep < 80; ++rep) {
        BarWord x = rand_word(rng, xy, 2, 5);
        BarWord y = rand_word(rng, xy, 2, 5);
        if (x.internal() + y.internal() + 1 > xy.window()) continue;
        CHECK(twisting_defect(xy, ts, x, y).zero());
    }
}

TEST_CASE("bar product: unit, shuffles, pinned two-letter expansion") {
    TruncPolyDGA t3(2, 3, 14);
    HGA triv = trivial_hga(t3);
    ALetter t{2, 0}, t2{4, 0};

    BarWord w = word_of({t, t2, t});
    CHECK(bar_product(triv, BarWord{}, w) == chain_of(w));
    CHECK(bar_product(triv, w, BarWord{}) == chain_of(w));

    // suspended letters of even-degree generators are odd: [t].[t] = 0
    CHECK(bar_product(triv, word_of({t}), word_of({t})).zero());
    BarChain tt2;
    add_term(tt2, word_of({t, t2}), 1);
    add_term(tt2, word_of({t2, t}), -1);
    CHECK(bar_product(triv, word_of({t}), word_of({t2})) == tt2);

    // shuffle product against the explicit signed interleavings
    std::mt19937 rng(17);
    XYModel xy(13);
    HGA xytriv = trivial_hga(xy);
    for (int rep = 0; rep < 80; ++rep) {
        BarWord x = rand_word(rng, xy, 3, 5);
        BarWord y = rand_word(rng, xy, 3, 5);
        BarChain want;
        for (const auto& [letters, s] : graded_shuffles(x.a, y.a))
            add_term(want, BarWord{letters}, sign_pow(s));
        CHECK(bar_product(xytriv, x, y) == want);
    }

    // [a].[b] = [a|b] + (-1)^{(|a|-1)(|b|-1)}[b|a] + (-1)^{|a|}[E_1(a;b)]
    ConstantGroup g2(2);
    WbarSpace wb(g2);
    CochainDGA C(wb, 6);
    HGA hc = cochain_hga(C);
    for (int da = 1; da <= 2; ++da)
        for (int db = 1; db <= 3; ++db) {
            ALetter a{da, 0}, b{db, 0};
            BarChain want;
            add_term(want, word_of({a, b}), 1);
            add_term(want, word_of({b, a}), sign_pow((da - 1) * (db - 1)));
            AElt e1 = hc.e(a, {b});
            e1 *= sign_pow(da);
            for (const auto& [c, v] : e1.t) add_term(want, word_of({c}), v);
            CHECK(bar_product(hc, word_of({a}), word_of({b})) == want);
        }
}

TEST_CASE("bar product is a chain map") {
    std::mt19937 rng(29);
    XYModel xy(13);
    HGA triv = trivial_hga(xy);
    for (int rep = 0; rep < 120; ++rep) {
        BarWord x = rand_word(rng, xy, 3, 5);
        BarWord y = rand_word(rng, xy, 3, 5);
        if (x.internal() + y.internal() + 2 > xy.window()) continue;
        BarChain lhs = bar_differential(xy, bar_product(triv, x, y));
        BarChain rhs = bar_product(triv, bar_differential(xy, x), chain_of(y));
        BarChain t2 = bar_product(triv, chain_of(x), bar_differential(xy, y));
        t2 *= sign_pow(x.degree());
        rhs += t2;
        CHECK(lhs == rhs);
    }

    ConstantGroup g2(2);
    WbarSpace wb(g2);
    CochainDGA C(wb, 6);
    HGA hc = cochain_hga(C);
    int checked = 0;
    for (int rep = 0; rep < 80; ++rep) {
        BarWord x = rand_word(rng, C, 2, 2);
        BarWord y = rand_word(rng, C, 2, 2);
        if (x.internal() + y.internal() + 2 > C.window()) continue;
        BarChain lhs = bar_differential(C, bar_product(hc, x, y));
        BarChain rhs = bar_product(hc, bar_differential(C, x), chain_of(y));
        BarChain t2 = bar_product(hc, chain_of(x), bar_differential(C, y));
        t2 *= sign_pow(x.degree());
        rhs += t2;
        CHECK(lhs == rhs);
        ++checked;
    }
    CHECK(checked > 30);
}

TEST_CASE("bar product is associative") {
    std::mt19937 rng(31);
    XYModel xy(13);
    HGA triv = trivial_hga(xy);
    for (int rep = 0; rep < 80; ++rep) {
        BarWord x = rand_word(rng, xy, 2, 5);
        BarWord y = rand_word(rng, xy, 2, 5);
        BarWord z = rand_word(rng, xy, 2, 5);
        if (x.internal() + y.internal() + z.internal() > xy.window()) continue;
        CHECK(bar_product(triv, bar_product(triv, x, y), chain_of(z)) ==
              bar_product(triv, chain_of(x), bar_product(triv, y, z)));
    }

    ConstantGroup g2(2);
    WbarSpace wb(g2);
    CochainDGA C(wb, 6);
    HGA hc = cochain_hga(C);
    int checked = 0;
    for (int rep = 0; rep < 60; ++rep) {
        BarWord x = rand_word(rng, C, 2, 2);
        BarWord y = rand_word(rng, C, 2, 2);
        BarWord z = rand_word(rng, C, 2, 2);
        if (x.internal() + y.internal() + z.internal() > C.window()) continue;
        CHECK(bar_product(hc, bar_product(hc, x, y), chain_of(z)) ==
              bar_product(hc, chain_of(x), bar_product(hc, y, z)));
        ++checked;
    }
    CHECK(checked > 20);
}

TEST_CASE("bar diagonal is an algebra map for the bar product") {
    std::mt19937 rng(37);
    XYModel xy(13);
    ConstantGroup g2(2);
    WbarSpace wb(g2);
    CochainDGA C(wb, 6);
    HGA hgas[2] = {trivial_hga(xy), cochain_hga(C)};
    for (int which = 0; which < 2; ++which) {
        const HGA& H = hgas[which];
        const PresentedDGA& A = *H.A;
        int maxdeg = which == 0 ? 5 : 2;
        int reps = which == 0 ? 60 : 40;
        for (int rep = 0; rep < reps; ++rep) {
            BarWord x = rand_word(rng, A, 2, maxdeg);
            BarWord y = rand_word(rng, A, 2, maxdeg);
            if (x.internal() + y.internal() > A.window()) continue;
            BarTensor lhs = bar_diagonal(bar_product(H, x, y));
            BarTensor rhs;
            for (const auto& [xp, cx] : bar_diagonal(x))
                for (const auto& [yp, cy] : bar_diagonal(y)) {
                    int e = xp.second.degree() * yp.first.degree();
                    BarChain l = bar_product(H, xp.first, yp.first);
                    BarChain r = bar_product(H, xp.second, yp.second);
                    for (const auto& [lw, cl] : l.t)
                        for (const auto& [rw, cr] : r.t)
                            add_tensor(rhs, lw, rw,
                                       cx * cy * cl * cr * sign_pow(e));
                }
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("twisting correspondence round-trips") {
    TruncPolyDGA t3(2, 3, 14);
    std::mt19937 rng(41);

    // identity <-> canonical projection to single letters
    BarMap id = [](const BarWord& w) { return chain_of(w); };
    BarCochain proj = [&id](const BarWord& w) { return cochain_of_map(id, w); };
    for (int rep = 0; rep < 40; ++rep) {
        BarWord w = rand_word(rng, t3, 4, 4);
        AElt p = proj(w);
        if (w.length() == 1) {
            CHECK(p == elt_of(w.a[0]));
        } else {
            CHECK(p.zero());
        }
        CHECK(map_of_cochain(proj, w) == chain_of(w));
    }

    // zero cochain <-> the map through the empty word
    BarCochain zero = [](const BarWord&) { return AElt{}; };
    CHECK(map_of_cochain(zero, BarWord{}) == chain_of(BarWord{}));
    for (int rep = 0; rep < 20; ++rep) {
        BarWord w = rand_word(rng, t3, 4, 4);
        if (w.length() == 0) continue;
        CHECK(map_of_cochain(zero, w).zero());
    }

    // B(phi) for the sign automorphism t -> -t round-trips through its cochain
    BarMap bphi = [](const BarWord& w) {
        int e = 0;
        for (const ALetter& x : w.a) e += x.first / 2;
        BarChain out;
        add_term(out, w, sign_pow(e));
        return out;
    };
    BarCochain tphi = [&bphi](const BarWord& w) {
        return cochain_of_map(bphi, w);
    };
    for (int rep = 0; rep < 40; ++rep) {
        BarWord w = rand_word(rng, t3, 4, 4);
        CHECK(map_of_cochain(tphi, w) == bphi(w));
    }

    // the bar product against the hga twisting cochain, both directions
    ConstantGroup g2(2);
    WbarSpace wb(g2);
    CochainDGA C(wb, 6);
    HGA hc = cochain_hga(C);
    BarMap2 mult = [&hc](const BarWord& x, const BarWord& y) {
        return bar_product(hc, x, y);
    };
    BarCochain2 tw = [&hc](const BarWord& x, const BarWord& y) {
        return hga_twisting(hc, x, y);
    };
    for (int rep = 0; rep < 60; ++rep) {
        BarWord x = rand_word(rng, C, 2, 2);
        BarWord y = rand_word(rng, C, 2, 2);
        if (x.internal() + y.internal() > C.window()) continue;
        CHECK(cochain_of_map(mult, x, y) == tw(x, y));
        CHECK(map_of_cochain(tw, x, y) == mult(x, y));
    }
}

TEST_CASE("interval-cut E_1 behaves as a cup-one through the dga interface") {
    ConstantGroup g2(2);
    WbarSpace wb(g2);
    CochainDGA C(wb, 6);
    HGA hc = cochain_hga(C);
    auto E1 = [&](const AElt& a, int da, const AElt& b, int db) {
        AElt out;
        for (const auto& [x, cx] : a.t)
            for (const auto& [y, cy] : b.t) {
                (void)da;
                (void)db;
                AElt v = hc.e(x, {y});
                v *= cx * cy;
                out += v;
            }
        return out;
    };
    for (int da = 1; da <= 2; ++da)
        for (int db = 1; db <= 2; ++db) {
            AElt a = elt_of({da, 0}), b = elt_of({db, 0});
            // d E_1(a;b) + E_1(da;b) + (-1)^{|a|} E_1(a;db)
            //   = -(ab - (-1)^{|a||b|} ba)
            AElt lhs = C.diff(E1(a, da, b, db));
            lhs += E1(C.diff(a), da + 1, b, db);
            AElt t3 = E1(a, da, C.diff(b), db + 1);
            t3 *= sign_pow(da);
            lhs += t3;
            AElt rhs = C.mul(a, b);
            AElt ba = C.mul(b, a);
            ba *= -sign_pow(da * db);
            rhs += ba;
            rhs *= -1;
            CHECK(lhs == rhs);

            // E_1(ab; c) = (-1)^{|a|} a E_1(b;c) + (-1)^{|b||c|} E_1(a;c) b
            for (int dc = 1; dc + da + db <= 5; ++dc) {
                AElt c = elt_of({dc, 0});
                AElt l = E1(C.mul(a, b), da + db, c, dc);
                AElt r1 = C.mul(a, E1(b, db, c, dc));
                r1 *= sign_pow(da);
                AElt r2 = C.mul(E1(a, da, c, dc), b);
                r2 *= sign_pow(db * dc);
                r1 += r2;
                CHECK(l == r1);
            }
        }
}

TEST_CASE("bar homology strands: polynomial and truncated polynomial") {
    // Tor over k[t] from the two-term Koszul resolution: exterior on one
    // class in word length 1, internal degree 2
    PolyDGA kt(2, 12);
    for (int m = 0; m <= 12; m += 2) {
        int top = m == 0 ? 1 : m / 2 + 1;
        FgComplex c = bar_strand(kt, m, top);
        for (int n = 0; n < top; ++n) {
            Homology h = homology(c, n);
            long long want =
                ((m == 0 && n == 0) || (m == 2 && n == 1)) ? 1 : 0;
            CHECK(h.free_rank == want);
            CHECK(h.torsion.empty());
        }
    }

    // k[t]/t^2: the periodic rank-one resolution puts Tor_n in internal
    // degree 2n, the divided-power diagonal
    TruncPolyDGA t2(2, 2, 12);
    for (int m = 0; m <= 12; m += 2) {
        int top = m / 2 + 1;
        FgComplex c = bar_strand(t2, m, top);
        for (int n = 0; n < top; ++n) {
            Homology h = homology(c, n);
            CHECK(h.free_rank == (m == 2 * n ? 1 : 0));
            CHECK(h.torsion.empty());
        }
    }

    // k[t]/t^3: alternating multiplications by t and t^2 shift internal
    // degrees to 0, 2, 6, 8, 12, ...
    TruncPolyDGA t3(2, 3, 12);
    for (int m = 0; m <= 12; m += 2) {
        int top = m / 2 + 1;
        FgComplex c = bar_strand(t3, m, top);
        for (int n = 0; n < top; ++n) {
            Homology h = homology(c, n);
            bool hit = (m == 0 && n == 0) || (m == 2 && n == 1) ||
                       (m == 6 && n == 2) || (m == 8 && n == 3) ||
                       (m == 12 && n == 4);
            CHECK(h.free_rank == (hit ? 1 : 0));
            CHECK(h.torsion.empty());
        }
    }

    XYModel xy(13);
    CHECK_THROWS_AS(bar_strand(xy, 4, 2), std::invalid_argument);
    CHECK_THROWS_AS(bar_strand(kt, 14, 2), TruncationError);
}

TEST_CASE("hochschild differential: pinned values and square zero") {
    PolyDGA kt(2, 12);
    ALetter one{0, 0}, t{2, 0}, t2{4, 0};

    CHECK(hochschild_differential(kt, HWord{one, word_of({t})}).zero());
    CHECK(hochschild_differential(kt, HWord{t, word_of({t2})}).zero());

    HChain want;  // b(1[t|t]) = 2 t[t] - 1[t^2]
    add_term(want, HWord{t, word_of({t})}, 2);
    add_term(want, HWord{one, word_of({t2})}, -1);
    CHECK(hochschild_differential(kt, HWord{one, word_of({t, t})}) == want);

    std::mt19937 rng(43);
    XYModel xy(13);
    for (int rep = 0; rep < 200; ++rep) {
        BarWord w = rand_word(rng, xy, 3, 5);
        std::uniform_int_distribution<int> d0(0, 4);
        int a0 = d0(rng);
        if (xy.rank(a0) == 0) a0 = 0;
        HWord h{{a0, 0}, w};
        if (h.internal() + 2 > xy.window()) continue;
        CHECK(hochschild_differential(xy, hochschild_differential(xy, h))
                  .zero());
    }
}

TEST_CASE("hochschild strands of k[t] give functions and one-forms") {
    PolyDGA kt(2, 12);
    for (int m = 0; m <= 12; m += 2) {
        int top = m / 2 + 2;
        FgComplex c = hochschild_strand(kt, m, top);
        for (int n = 0; n < top; ++n) {
            Homology h = homology(c, n);
            long long want = 0;
            if (n == 0) want = 1;
            if (n == 1 && m >= 2) want = 1;
            CHECK(h.free_rank == want);
            CHECK(h.torsion.empty());
        }
    }
}

TEST_CASE("hochschild shuffle product: unit, symmetry, Leibniz") {
    std::mt19937 rng(47);
    XYModel xy(13);
    auto rand_h = [&](int maxlen, int maxdeg, int maxa0) {
        BarWord w = rand_word(rng, xy, maxlen, maxdeg);
        std::uniform_int_distribution<int> d0(0, maxa0);
        int a0 = d0(rng);
        while (xy.rank(a0) == 0) a0 = d0(rng);
        return HWord{{a0,(std::size_t)0}, w};
    };
    HWord unit{{0, 0}, BarWord{}};
    for (int rep = 0; rep < 120; ++rep) {
        HWord x = rand_h(2, 5, 4), y = rand_h(2, 5, 4);
        if (x.internal() + y.internal() + 2 > xy.window()) continue;

        CHECK(hochschild_shuffle(xy, unit, x) == chain_of(x));
        CHECK(hochschild_shuffle(xy, x, unit) == chain_of(x));

        HChain yx = hochschild_shuffle(xy, y, x);
        yx *= sign_pow(x.degree() * y.degree());
        CHECK(hochschild_shuffle(xy, x, y) == yx);

        HChain lhs = hochschild_differential(xy, hochschild_shuffle(xy, x, y));
        HChain rhs =
            hochschild_shuffle(xy, hochschild_differential(xy, x), chain_of(y));
        HChain t2 =
            hochschild_shuffle(xy, chain_of(x), hochschild_differential(xy, y));
        t2 *= sign_pow(x.degree());
        rhs += t2;
        CHECK(lhs == rhs);
    }
    for (int rep = 0; rep < 60; ++rep) {
        HWord x = rand_h(2, 5, 2), y = rand_h(1, 3, 2), z = rand_h(2, 5, 2);
        if (x.internal() + y.internal() + z.internal() > xy.window()) continue;
        CHECK(hochschild_shuffle(xy, hochschild_shuffle(xy, x, y),
                                 chain_of(z)) ==
              hochschild_shuffle(xy, chain_of(x),
                                 hochschild_shuffle(xy, y, z)));
    }

    ConstantGroup g2(2);
    WbarSpace wb(g2);
    CochainDGA C(wb, 5);
    CHECK_THROWS_AS(trivial_hga(C), std::invalid_argument);
    CHECK_THROWS_AS(
        hochschild_shuffle(C, HWord{{0, 0}, BarWord{}}, HWord{{0, 0}, BarWord{}}),
        std::invalid_argument);
}
