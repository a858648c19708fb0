#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chalg/bundle.hpp"
#include "chalg/rng.hpp"
#include "chalg/surjection.hpp"

using namespace chalg;

static TensorChain slot_map(const TensorChain& ch, size_t slot,
                            const std::function<Simplex(const Simplex&)>& f) {
    /* degree-0 map applied to one slot, no signs */
    TensorChain out;
    for (auto& [xs, c] : ch.t) {
        auto ys = xs;
        ys[slot] = f(xs[slot]);
        add_term(out, ys, c);
    }
    return out;
}

TEST_CASE("enumeration, validity, classification") {
    CHECK(valid_surjection({1, 2, 1}));
    CHECK(!valid_surjection({1, 1, 2}));
    CHECK(!valid_surjection({1, 3}));
    CHECK(!valid_surjection({}));

    CHECK(all_surjections(1, 0).size() == 1);
    CHECK(all_surjections(2, 0).size() == 2);
    CHECK(all_surjections(2, 1).size() == 2);  // (1,2,1), (2,1,2)
    for (auto& u : all_surjections(3, 2)) {
        CHECK(u.arity() == 3);
        CHECK(u.degree() == 2);
        CHECK(valid_surjection(u.u));
    }

    SurjClass c = classify({{1, 2}});
    CHECK(c.one_biased);
    CHECK(!c.strongly_biased);

    c = classify({{2, 1, 2}});
    CHECK(c.strongly_biased);
    CHECK(!c.strongly_one_biased);
    CHECK(c.repeated_value == 2);

    c = classify({{1, 2, 1, 3, 1}});
    CHECK(c.strongly_one_biased);

    c = classify({{1, 2, 1, 2}});
    CHECK(!c.biased);

    auto fin = final_positions({{1, 2, 1}});
    CHECK(fin == std::vector<bool>{false, true, true});
}

TEST_CASE("truncation") {
    CHECK(truncate({{1, 2, 1}}) == Surjection{{2, 1}});
    CHECK(truncate({{2, 1, 3}}) == Surjection{{1, 2}});
    CHECK(truncate({{1, 2}}) == Surjection{{1}});
    CHECK(truncate({{1, 2, 1, 3, 1}}) == Surjection{{2, 1, 3, 1}});
}

TEST_CASE("operad differential: pinned values and square zero") {
    SurjectionSum d = differential({{1, 2, 1}});
    SurjectionSum want;
    add_term(want, {{2, 1}}, 1);
    add_term(want, {{1, 2}}, -1);
    CHECK(d == want);

    d = differential({{1, 2, 1, 2}});
    want = {};
    add_term(want, {{2, 1, 2}}, 1);
    add_term(want, {{1, 2, 1}}, 1);
    CHECK(d == want);

    for (int l = 1; l <= 3; ++l)
        for (int k = 0; k + l <= 5; ++k)
            for (auto& u : all_surjections(l, k)) {
                SurjectionSum dd;
                for (auto& [w, c] : differential(u).t) {
                    for (auto& [w2, c2] : differential(w).t)
                        add_term(dd, w2, c * c2);
                }
                CHECK(dd == SurjectionSum{});
            }
}

TEST_CASE("interval cuts: diagonal, pinned values, vanishing") {
    Arena a;
    auto* d2 = a.make<StandardSimplex>(2);
    auto* d3 = a.make<StandardSimplex>(3);
    auto* bz = a.make<BarInt>();
    Rng rng(211);

    /* u = (1,2) is the front/back diagonal */
    for (int p = 0; p <= 3; ++p) {
        Simplex x = random_nondeg(rng, *d3, p);
        CHECK(interval_cut(Surjection{{1, 2}}, x) == aw_diagonal(x));
        Simplex y = random_nondeg(rng, *bz, p);
        CHECK(interval_cut(Surjection{{1, 2}}, y) == aw_diagonal(y));
    }

    /* frozen value on the 2-simplex */
    Simplex t = d2->top();
    TensorChain want;
    add_term(want, {d2->make({0, 1, 2}), d2->make({0, 1})}, -1);
    add_term(want, {d2->make({0, 2}), d2->make({0, 1, 2})}, 1);
    add_term(want, {d2->make({0, 1, 2}), d2->make({1, 2})}, -1);
    CHECK(interval_cut(Surjection{{1, 2, 1}}, t) == want);

    /* closed formulas with explicit exponents on the 3-simplex */
    Simplex q = d3->top();
    int p = 3;
    TensorChain f1;
    for (int p1 = 0; p1 <= p; ++p1)
        for (int p2 = p1 + 1; p2 <= p; ++p2) {
            Monotone nu1, nu2;
            for (int v = 0; v <= p1; ++v) nu1.push_back(v);
            for (int v = p2; v <= p; ++v) nu1.push_back(v);
            for (int v = p1; v <= p2; ++v) nu2.push_back(v);
            int e1 = (p - p2) * (p2 - p1) + p1;
            add_term(f1, {act(q, nu1), act(q, nu2)}, sign_pow(e1));
        }
    CHECK(interval_cut(Surjection{{1, 2, 1}}, q) == f1);

    TensorChain f2;
    for (int p1 = 0; p1 <= p; ++p1)
        for (int p2 = p1 + 1; p2 <= p; ++p2)
            for (int p3 = p2 + 1; p3 <= p; ++p3) {
                Monotone nu1, nu2;
                for (int v = 0; v <= p1; ++v) nu1.push_back(v);
                for (int v = p2; v <= p3; ++v) nu1.push_back(v);
                for (int v = p1; v <= p2; ++v) nu2.push_back(v);
                for (int v = p3; v <= p; ++v) nu2.push_back(v);
                int e2 = (p3 - p2) * (p2 - p1 + 1) + p1 + p2;
                add_term(f2, {act(q, nu1), act(q, nu2)}, sign_pow(e2));
            }
    CHECK(interval_cut(Surjection{{1, 2, 1, 2}}, q) == f2);

    /* positive-degree operations vanish on 0-chains */
    Simplex v0 = d3->make({1});
    for (auto& u : all_surjections(2, 1)) CHECK(interval_cut(u, v0).zero());
    for (auto& u : all_surjections(1, 1)) CHECK(interval_cut(u, v0).zero());
    CHECK(interval_cut(ek_surjection(2), v0).zero());
}

TEST_CASE("interval cuts form a chain map onto the operad differential") {
    Arena a;
    Rng rng(223);
    std::vector<const Space*> spaces = {a.make<StandardSimplex>(4)};
    auto* prod =
        a.make<NaryProduct>(std::vector<const Space*>{
            a.make<StandardSimplex>(1), a.make<StandardSimplex>(2)});
    auto* w2 = a.make<WSpace>(*a.make<ConstantGroup>(2));

    for (int l = 1; l <= 3; ++l)
        for (int k = 0; k + l <= 4; ++k)
            for (auto& u : all_surjections(l, k)) {
                SurjectionSum du = differential(u);
                for (int p = 1; p <= 4; ++p) {
                    for (const Simplex& x :
                         spaces[0]->nondeg_simplices(p)) {
                        TensorChain lhs = boundary(interval_cut(u, x));
                        lhs -= sign_pow(k) *
                               interval_cut(u, boundary(x));
                        CHECK(lhs == interval_cut(du, x));
                    }
                    /* spot checks on a product and a bundle total space */
                    Simplex y = random_nondeg(rng, *prod, std::min(p, 3));
                    TensorChain lhs = boundary(interval_cut(u, y));
                    lhs -= sign_pow(k) * interval_cut(u, boundary(y));
                    CHECK(lhs == interval_cut(du, y));
                    Simplex z = random_nondeg(rng, *w2, std::min(p, 3));
                    lhs = boundary(interval_cut(u, z));
                    lhs -= sign_pow(k) * interval_cut(u, boundary(z));
                    CHECK(lhs == interval_cut(du, z));
                }
            }
}

TEST_CASE("symmetric group equivariance") {
    Arena a;
    auto* d3 = a.make<StandardSimplex>(3);
    Rng rng(227);
    for (int l = 2; l <= 3; ++l)
        for (int k = 0; k + l <= 4; ++k)
            for (auto& u : all_surjections(l, k)) {
                /* random permutation of 1..l */
                std::vector<int> pi(l);
                for (int i = 0; i < l; ++i) pi[(size_t)i] = i + 1;
                for (int i = l - 1; i > 0; --i)
                    std::swap(pi[(size_t)i], pi[(size_t)rng.range(0, i)]);

                Simplex x = random_nondeg(rng, *d3, (int)rng.range(1, 3));
                TensorChain lhs = interval_cut(permute(pi, u), x);
                TensorChain rhs =
                    permute_slots(interval_cut(u, x), slot_perm(pi));
                CHECK(lhs == rhs);
            }
}

TEST_CASE("operadic composition") {
    /* coassociativity of the diagonal */
    SurjectionSum want;
    add_term(want, {{1, 2, 3}}, 1);
    CHECK(compose({{1, 2}}, 1, {{1, 2}}) == want);
    CHECK(compose({{1, 2}}, 2, {{1, 2}}) == want);

    /* verify the composition law as operators on other spaces */
    Arena a;
    auto* prod =
        a.make<NaryProduct>(std::vector<const Space*>{
            a.make<StandardSimplex>(2), a.make<StandardSimplex>(2)});
    auto* bz = a.make<BarInt>();
    Rng rng(229);

    std::vector<std::tuple<Surjection, int, Surjection>> cases = {
        {{{1, 2, 1}}, 1, {{1, 2}}},  {{{1, 2, 1}}, 2, {{1, 2}}},
        {{{1, 2}}, 1, {{1, 2, 1}}},  {{{1, 2, 1, 2}}, 2, {{2, 1}}},
        {{{2, 1, 2}}, 2, {{1, 2}}},  {{{1, 2, 1}}, 1, {{2, 1}}},
    };
    for (auto& [u, s, v] : cases) {
        SurjectionSum uv = compose(u, s, v);
        for (int rep = 0; rep < 3; ++rep) {
            for (const Space* X :
                 std::initializer_list<const Space*>{prod, bz}) {
                Simplex x = random_nondeg(rng, *X, (int)rng.range(1, 3));
                TensorChain direct = interval_cut(uv, x);
                TensorChain composite;
                for (auto& [xs, c] : interval_cut(u, x).t) {
                    int before = 0;
                    for (int j = 0; j < s - 1; ++j)
                        before += xs[(size_t)j].dim;
                    Int sgn = sign_pow(v.degree() * before);
                    for (auto& [ys, c2] : interval_cut(v, xs[(size_t)s - 1]).t) {
                        std::vector<Simplex> zs(xs.begin(),
                                                xs.begin() + (s - 1));
                        for (auto& y : ys) zs.push_back(y);
                        zs.insert(zs.end(), xs.begin() + s, xs.end());
                        add_term(composite, zs, c * c2 * sgn);
                    }
                }
                CHECK(direct == composite);
            }
        }
    }
}

TEST_CASE("first-value-final factorization through the diagonal") {
    Arena a;
    auto* d3 = a.make<StandardSimplex>(3);
    auto* prod =
        a.make<NaryProduct>(std::vector<const Space*>{
            a.make<StandardSimplex>(1), a.make<StandardSimplex>(1)});
    Rng rng(233);
    for (int l = 2; l <= 3; ++l)
        for (int k = 0; k + l <= 4; ++k)
            for (auto& u : all_surjections(l, k)) {
                if (!final_positions(u)[0]) continue;
                int s = u.u[0];
                Surjection up = truncate(u);
                auto rhs_of = [&](const Simplex& x) {
                    TensorChain rhs;
                    for (auto& [fb, c] : aw_diagonal(x).t) {
                        Int sgn = sign_pow(up.degree() * fb[0].dim);
                        for (auto& [ys, c2] : interval_cut(up, fb[1]).t) {
                            std::vector<Simplex> zs = {fb[0]};
                            zs.insert(zs.end(), ys.begin(), ys.end());
                            add_term(rhs, zs, c * c2 * sgn);
                        }
                    }
                    return permute_slots(rhs, slot_perm(tau_cycle(s, l)));
                };
                for (int p = 0; p <= 3; ++p)
                    for (const Simplex& x : d3->nondeg_simplices(p))
                        CHECK(interval_cut(u, x) == rhs_of(x));
                Simplex y = random_nondeg(rng, *prod, 2);
                CHECK(interval_cut(u, y) == rhs_of(y));
            }
}

TEST_CASE("cup products on cochains: commutation rules") {
    Arena a;
    auto* d3 = a.make<StandardSimplex>(3);
    Rng rng(239);
    for (int rep = 0; rep < 60; ++rep) {
        int db = (int)rng.range(0, 2), dc = (int)rng.range(0, 2);
        Cochain b = random_cochain(rng, *d3, db, 4);
        Cochain c = random_cochain(rng, *d3, dc, 4);

        /* d(b u1 c) + db u1 c + (-1)^{|b|} b u1 dc = b u c -+ c u b */
        Cochain lhs = coboundary(*d3, cup1(*d3, b, c));
        {
            Cochain t1 = cup1(*d3, coboundary(*d3, b), c);
            for (auto& [x, v] : t1.c) add_term(lhs, x, v);
            Cochain t2 = cup1(*d3, b, coboundary(*d3, c));
            for (auto& [x, v] : t2.c) add_term(lhs, x, sign_pow(db) * v);
        }
        Cochain rhs = cup(*d3, b, c);
        {
            Cochain t = cup(*d3, c, b);
            for (auto& [x, v] : t.c)
                add_term(rhs, x, -sign_pow(db * dc) * v);
        }
        CHECK(lhs == rhs);

        /* d(b u2 c) - db u2 c - (-1)^{|b|} b u2 dc = b u1 c + (-1)^{bc} c u1 b */
        lhs = coboundary(*d3, cup2(*d3, b, c));
        {
            Cochain t1 = cup2(*d3, coboundary(*d3, b), c);
            for (auto& [x, v] : t1.c) add_term(lhs, x, -v);
            Cochain t2 = cup2(*d3, b, coboundary(*d3, c));
            for (auto& [x, v] : t2.c) add_term(lhs, x, -sign_pow(db) * v);
        }
        rhs = cup1(*d3, b, c);
        {
            Cochain t = cup1(*d3, c, b);
            for (auto& [x, v] : t.c) add_term(rhs, x, sign_pow(db * dc) * v);
        }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("Hirsch formula") {
    Arena arena;
    auto* d3 = arena.make<StandardSimplex>(3);
    Rng rng(241);
    for (int rep = 0; rep < 40; ++rep) {
        int da = (int)rng.range(0, 2), db = (int)rng.range(0, 2),
            dc = (int)rng.range(0, 2);
        Cochain a = random_cochain(rng, *d3, da, 3);
        Cochain b = random_cochain(rng, *d3, db, 3);
        Cochain c = random_cochain(rng, *d3, dc, 3);

        Cochain lhs = cup1(*d3, cup(*d3, a, b), c);
        Cochain rhs;
        rhs.deg = lhs.deg;
        {
            Cochain t1 = cup(*d3, a, cup1(*d3, b, c));
            for (auto& [x, v] : t1.c) add_term(rhs, x, sign_pow(da) * v);
            Cochain t2 = cup(*d3, cup1(*d3, a, c), b);
            for (auto& [x, v] : t2.c) add_term(rhs, x, sign_pow(db * dc) * v);
        }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("higher operations and the swapped convention") {
    Arena arena;
    auto* d3 = arena.make<StandardSimplex>(3);
    Rng rng(251);

    CHECK(ek_surjection(1) == Surjection{{1, 2, 1}});
    CHECK(ek_surjection(2) == Surjection{{1, 2, 1, 3, 1}});
    CHECK(ek_tilde_surjection(2) == Surjection{{3, 1, 3, 2, 3}});

    for (int k = 1; k <= 2; ++k)
        for (int rep = 0; rep < 15; ++rep) {
            Cochain a = random_cochain(rng, *d3, (int)rng.range(0, 2), 3);
            std::vector<Cochain> bs;
            int degsum = 0;
            for (int j = 0; j < k; ++j) {
                bs.push_back(random_cochain(rng, *d3, (int)rng.range(0, 2), 3));
                degsum += bs.back().deg;
            }
            /* E~_k(b_1..b_k, a) = (-1)^k (-1)^{|a| sum|b|} E_k(a; b_1..b_k) */
            Cochain lhs = ek_tilde(*d3, bs, a);
            Cochain rhs = ek(*d3, a, bs);
            Cochain scaled;
            scaled.deg = rhs.deg;
            for (auto& [x, v] : rhs.c)
                add_term(scaled, x, sign_pow(k + a.deg * degsum) * v);
            CHECK(lhs == scaled);

            /* E_1 = -cup1 */
            if (k == 1) {
                Cochain e1 = ek(*d3, a, bs);
                Cochain c1 = cup1(*d3, a, bs[0]);
                Cochain neg;
                neg.deg = c1.deg;
                for (auto& [x, v] : c1.c) add_term(neg, x, -v);
                CHECK(e1 == neg);
            }
        }
}

TEST_CASE("Gerstenhaber bracket of cocycles is a cocycle") {
    Arena arena;
    auto* d3 = arena.make<StandardSimplex>(3);
    Rng rng(257);
    for (int rep = 0; rep < 20; ++rep) {
        /* coboundaries are cocycles */
        Cochain b = coboundary(*d3, random_cochain(rng, *d3, (int)rng.range(0, 1), 3));
        Cochain c = coboundary(*d3, random_cochain(rng, *d3, (int)rng.range(0, 1), 3));
        Cochain br = cup1(*d3, b, c);
        Cochain t = cup1(*d3, c, b);
        for (auto& [x, v] : t.c) add_term(br, x, sign_pow(b.deg * c.deg) * v);
        CHECK(coboundary(*d3, br).zero());
    }
}

TEST_CASE("product-splitting cuts commute with the shuffle map") {
    Arena arena;
    Rng rng(263);

    std::vector<Surjection> us = {{{1, 2}}, {{1, 2, 1}}, {{1, 2, 1, 3, 1}}};

    for (auto& u : us)
        for (int aa = 0; aa <= 1; ++aa)
            for (int bb = 0; bb <= 1; ++bb)
                for (int cc = 0; cc <= 1; ++cc) {
                    auto* X = arena.make<StandardSimplex>(std::max(aa, 1));
                    auto* Y = arena.make<StandardSimplex>(std::max(bb, 1));
                    auto* Z = arena.make<StandardSimplex>(std::max(cc, 1));
                    auto* pyz =
                        arena.make<NaryProduct>(std::vector<const Space*>{Y, Z});
                    auto* pxy =
                        arena.make<NaryProduct>(std::vector<const Space*>{X, Y});
                    auto* pxyz = arena.make<NaryProduct>(
                        std::vector<const Space*>{X, Y, Z});

                    int k = u.degree();

                    for (const Simplex& x : X->nondeg_simplices(aa))
                        for (const Simplex& yz : pyz->nondeg_simplices(bb + cc)) {
                            /* upper-right path */
                            Chain sh = shuffle_map(chain_of(x), chain_of(yz),
                                                   *pxyz);
                            TensorChain lhs;
                            for (auto& [w, cw] : sh.t)
                                for (auto& [xs, c2] :
                                     interval_cut(u, w).t) {
                                    std::vector<Simplex> zs(xs.size());
                                    zs[0] = pxy->make(
                                        {pxyz->component(xs[0], 0),
                                         pxyz->component(xs[0], 1)});
                                    for (size_t j = 1; j < xs.size(); ++j)
                                        zs[j] = pxyz->component(xs[j], 2);
                                    add_term(lhs, zs, cw * c2);
                                }

                            /* lower-left path */
                            TensorChain tl = aw_tilde(
                                u, chain_of(yz),
                                [&](const Simplex& s) {
                                    return pyz->component(s, 0);
                                },
                                [&](const Simplex& s) {
                                    return pyz->component(s, 1);
                                });
                            TensorChain rhs;
                            Int sgn = sign_pow(k * x.dim);
                            for (auto& [ys, c2] : tl.t) {
                                Chain front = shuffle_map(
                                    chain_of(x), chain_of(ys[0]), *pxy);
                                for (auto& [fx, c3] : front.t) {
                                    std::vector<Simplex> zs = {fx};
                                    zs.insert(zs.end(), ys.begin() + 1,
                                              ys.end());
                                    add_term(rhs, zs, sgn * c2 * c3);
                                }
                            }
                            CHECK(lhs == rhs);
                        }
                }

    /* non-1-biased input is rejected */
    auto* d1 = arena.make<StandardSimplex>(1);
    auto* p2 = arena.make<NaryProduct>(std::vector<const Space*>{d1, d1});
    Chain c = chain_of(p2->nondeg_simplices(1)[0]);
    auto idp = [](const Simplex& s) { return s; };
    CHECK_THROWS(aw_tilde({{2, 1, 2}}, c, idp, idp));
}

TEST_CASE("equivariance of the product-splitting cuts") {
    Arena arena;
    auto* g = arena.make<ConstantGroup>(2);
    auto ub = universal_bundle(arena, *g);
    auto* Y = arena.make<StandardSimplex>(2);
    auto* pxy = arena.make<NaryProduct>(
        std::vector<const Space*>{ub.total, Y});
    Rng rng(269);

    auto act_first = [&](const Simplex& gs, const Simplex& xy) {
        return pxy->make({ub.act_g(gs, pxy->component(xy, 0)),
                          pxy->component(xy, 1)});
    };
    auto projx = [&](const Simplex& s) { return pxy->component(s, 0); };
    auto projy = [&](const Simplex& s) { return pxy->component(s, 1); };

    for (auto& u : std::vector<Surjection>{{{1, 2}}, {{1, 2, 1}}})
        for (int pc = 0; pc <= 3; ++pc) {
            for (int rep = 0; rep < 2; ++rep) {
                Chain a, c;
                for (int t = 0; t < 2; ++t) {
                    add_term(a, random_simplex(rng, *g, 0),
                             Int(rng.range(-2, 2)));
                    add_term(c, random_nondeg(rng, *pxy, pc),
                             Int(rng.range(-2, 2)));
                }
                TensorChain lhs =
                    aw_tilde(u, pair_chains(a, c, act_first), projx, projy);
                TensorChain rhs;
                for (auto& [xs, cc] : aw_tilde(u, c, projx, projy).t) {
                    Chain acted = pair_chains(a, chain_of(xs[0]), ub.act_g);
                    for (auto& [y, cy] : acted.t) {
                        auto ys = xs;
                        ys[0] = y;
                        add_term(rhs, ys, cc * cy);
                    }
                }
                CHECK(lhs == rhs);
            }
        }
}

TEST_CASE("cuts against the bundle contraction") {
    Arena arena;
    auto* g = arena.make<ConstantGroup>(2);
    auto ub = universal_bundle(arena, *g);
    Rng rng(271);

    /* all nondegenerate u with u(1) = 1, length <= 4, on simplices of
       dimension <= 3 */
    std::vector<Surjection> us;
    for (int l = 1; l <= 4; ++l)
        for (int k = 0; k + l <= 4; ++k)
            for (auto& u : all_surjections(l, k))
                if (u.u[0] == 1 && u.arity() >= 2) us.push_back(u);

    for (auto& u : us) {
        bool first_final = final_positions(u)[0];
        for (int p = 0; p <= 3; ++p)
            for (int rep = 0; rep < 3; ++rep) {
                Simplex x = random_nondeg(rng, *ub.total, p);
                TensorChain lhs = interval_cut(u, ub.S(x));

                TensorChain rhs;
                for (auto& [xs, c] : interval_cut(u, x).t) {
                    auto ys = xs;
                    ys[0] = ub.S(xs[0]);
                    add_term(rhs, ys, sign_pow(u.degree()) * c);
                }
                if (first_final) {
                    Surjection up = truncate(u);
                    for (auto& [xs, c] : interval_cut(up, ub.S(x)).t) {
                        std::vector<Simplex> ys = {ub.e0};
                        ys.insert(ys.end(), xs.begin(), xs.end());
                        add_term(rhs, ys, c);
                    }
                } else {
                    Surjection up = truncate(u);
                    for (auto& [xs, c] : interval_cut(up, ub.S(x)).t) {
                        auto ys = xs;
                        ys[0] = ub.S(xs[0]);
                        add_term(rhs, ys, c);
                    }
                }
                CHECK(lhs == rhs);
            }
    }

    /* the diagonal case */
    for (int p = 0; p <= 3; ++p) {
        Simplex x = random_nondeg(rng, *ub.total, p);
        TensorChain lhs = aw_diagonal(ub.S(x));
        TensorChain rhs = slot_map(aw_diagonal(x), 0, ub.S);
        add_term(rhs, {ub.e0, ub.S(x)}, 1);
        CHECK(lhs == rhs);
    }
}
