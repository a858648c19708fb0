#include "chalg/graded.hpp"

#include <stdexcept>

namespace chalg {

GMap gmap(Graded src, Graded dst, int deg) {
    GMap f;
    f.deg = deg;
    f.src = std::move(src);
    f.dst = std::move(dst);
    return f;
}

void set_entry(GMap& f, size_t j, size_t i, const Int& v) {
    if (j >= f.dst.rank() || i >= f.src.rank())
        throw std::out_of_range("set_entry");
    if (v != 0 && f.dst.degs[j] != f.src.degs[i] + f.deg)
        throw std::invalid_argument("set_entry: inhomogeneous entry");
    if (v == 0)
        f.m.erase({j, i});
    else
        f.m[{j, i}] = v;
}

Int entry(const GMap& f, size_t j, size_t i) {
    auto it = f.m.find({j, i});
    return it == f.m.end() ? Int(0) : it->second;
}

GMap identity_map(const Graded& a) {
    GMap f = gmap(a, a, 0);
    for (size_t i = 0; i < a.rank(); ++i) f.m[{i, i}] = 1;
    return f;
}

GMap compose(const GMap& f, const GMap& g) {
    if (!(g.dst == f.src)) throw std::invalid_argument("compose: mismatch");
    GMap h = gmap(g.src, f.dst, f.deg + g.deg);
    for (auto& [jk, c] : g.m)
        for (auto& [ji, c2] : f.m) {
            if (ji.second != jk.first) continue;
            Int& v = h.m[{ji.first, jk.second}];
            v += c2 * c;
            if (v == 0) h.m.erase({ji.first, jk.second});
        }
    return h;
}

GMap operator+(const GMap& f, const GMap& g) {
    if (!(f.src == g.src) || !(f.dst == g.dst) || f.deg != g.deg)
        throw std::invalid_argument("gmap +: mismatch");
    GMap h = f;
    for (auto& [ji, c] : g.m) {
        Int& v = h.m[ji];
        v += c;
        if (v == 0) h.m.erase(ji);
    }
    return h;
}

GMap operator-(const GMap& f, const GMap& g) { return f + Int(-1) * g; }

GMap operator*(const Int& c, GMap f) {
    if (c == 0) {
        f.m.clear();
        return f;
    }
    for (auto& [ji, v] : f.m) v *= c;
    return f;
}

Graded tensor_graded(const Graded& a, const Graded& b) {
    Graded t;
    for (int da : a.degs)
        for (int db : b.degs) t.degs.push_back(da + db);
    return t;
}

GMap koszul_tensor(const GMap& f, const GMap& g) {
    GMap h = gmap(tensor_graded(f.src, g.src), tensor_graded(f.dst, g.dst),
                  f.deg + g.deg);
    size_t bs = g.src.rank(), bd = g.dst.rank();
    for (auto& [ji, c] : f.m)
        for (auto& [lk, c2] : g.m) {
            Int v = c * c2 * sign_pow(g.deg * f.src.degs[ji.second]);
            h.m[{ji.first * bd + lk.first, ji.second * bs + lk.second}] = v;
        }
    return h;
}

GMap transposition(const Graded& a, const Graded& b) {
    GMap t = gmap(tensor_graded(a, b), tensor_graded(b, a), 0);
    for (size_t i = 0; i < a.rank(); ++i)
        for (size_t j = 0; j < b.rank(); ++j)
            t.m[{j * a.rank() + i, i * b.rank() + j}] =
                sign_pow(a.degs[i] * b.degs[j]);
    return t;
}

Graded dual_graded(const Graded& a) { return a; }

GMap transpose(const GMap& f) {
    GMap t = gmap(dual_graded(f.dst), dual_graded(f.src), -f.deg);
    for (auto& [ji, c] : f.m)
        t.m[{ji.second, ji.first}] = c * sign_pow(f.deg * f.dst.degs[ji.first]);
    return t;
}

GMap dual_tensor_iso(const Graded& a, const Graded& b) {
    Graded t = tensor_graded(a, b);
    GMap iso = gmap(dual_graded(t), tensor_graded(dual_graded(a), dual_graded(b)), 0);
    for (size_t i = 0; i < a.rank(); ++i)
        for (size_t j = 0; j < b.rank(); ++j)
            iso.m[{i * b.rank() + j, i * b.rank() + j}] =
                sign_pow(a.degs[i] * b.degs[j]);
    return iso;
}

Graded suspend_graded(const Graded& a) {
    Graded s = a;
    for (int& d : s.degs) d += 1;
    return s;
}

GMap susp(const Graded& a) {
    GMap f = gmap(a, suspend_graded(a), 1);
    for (size_t i = 0; i < a.rank(); ++i) f.m[{i, i}] = 1;
    return f;
}

GMap desusp(const Graded& a) {
    GMap f = gmap(suspend_graded(a), a, -1);
    for (size_t i = 0; i < a.rank(); ++i) f.m[{i, i}] = 1;
    return f;
}

GMap hom_d(const GMap& d_src, const GMap& d_dst, const GMap& f) {
    return compose(d_dst, f) - sign_pow(f.deg) * compose(f, d_src);
}

}  // namespace chalg
