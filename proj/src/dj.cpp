#include "chalg/dj.hpp"

#include <algorithm>

namespace chalg {

static std::vector<const Space*> circle_spaces(Arena& arena, int nv) {
    std::vector<const Space*> out;
    for (int v = 0; v < nv; ++v) {
        auto* g = arena.make<BarInt>();
        out.push_back(arena.make<WbarSpace>(*g));
    }
    return out;
}

DJSpace::DJSpace(Arena& arena, SimplicialPoset S)
    : DJSpace(arena, S, circle_spaces(arena, S.nverts())) {}

DJSpace::DJSpace(Arena& arena, SimplicialPoset S,
                 std::vector<const Space*> vertex_spaces)
    : S_(std::move(S)), vs_(std::move(vertex_spaces)) {
    if (!S_.validate().empty())
        throw std::invalid_argument("dj space: invalid poset");
    if (S_.nverts() < 1) throw std::invalid_argument("dj space: no vertices");
    if ((int)vs_.size() != S_.nverts())
        throw std::invalid_argument("dj space: one space per vertex");
    for (const Space* f : vs_)
        if (f == nullptr || !f->has_basepoint())
            throw std::invalid_argument("dj space: factors must be based");
    amb_ = arena.make<NaryProduct>(vs_);
}

const Space* DJSpace::vertex_space(int v) const {
    if (v < 1 || v > (int)vs_.size())
        throw std::out_of_range("vertex_space");
    return vs_[(std::size_t)v - 1];
}

std::string DJSpace::name() const {
    return "DJ(" + std::to_string(S_.size()) + " cells)";
}

std::vector<int> DJSpace::support(const Simplex& ambient) const {
    if (ambient.space != amb_)
        throw std::invalid_argument("support: not an ambient simplex");
    int q = ambient.base_dim();
    std::vector<int> out;
    for (std::size_t v = 0; v < vs_.size(); ++v)
        if (!(ambient.parts[v] == degenerate_to(vs_[v]->basepoint(), q)))
            out.push_back((int)v + 1);
    return out;
}

Simplex DJSpace::make(std::size_t sigma, const Simplex& ambient) const {
    if (sigma >= S_.size()) throw std::out_of_range("make: no such cell");
    std::optional<std::size_t> tau = S_.below(sigma, support(ambient));
    if (!tau)
        throw std::invalid_argument("make: support not carried by the cell");
    Simplex x;
    x.space = this;
    x.dim = ambient.dim;
    x.word = ambient.word;
    x.parts = {ambient};
    x.parts[0].dim = ambient.base_dim();
    x.parts[0].word.clear();
    x.labels = {(long long)*tau};
    return x;
}

Simplex DJSpace::make(std::size_t sigma,
                      const std::vector<Simplex>& comps) const {
    return make(sigma, amb_->make(comps));
}

std::size_t DJSpace::tag(const Simplex& x) const {
    if (x.space != this) throw std::invalid_argument("tag: wrong space");
    return (std::size_t)x.labels.at(0);
}

Simplex DJSpace::to_ambient(const Simplex& x) const {
    if (x.space != this)
        throw std::invalid_argument("to_ambient: wrong space");
    Simplex a = x.parts.at(0);
    for (auto it = x.word.rbegin(); it != x.word.rend(); ++it)
        a = degenerate(a, *it);
    return a;
}

Simplex DJSpace::from_ambient(const Simplex& ambient) const {
    std::vector<int> sup = support(ambient);
    std::vector<std::size_t> hits;
    for (std::size_t s = 0; s < S_.size(); ++s)
        if (S_.elt(s).verts == sup) hits.push_back(s);
    if (hits.empty())
        throw std::invalid_argument(
            "from_ambient: no cell carries the support");
    if (hits.size() > 1)
        throw std::invalid_argument(
            "from_ambient: more than one cell carries the support");
    return make(hits[0], ambient);
}

Simplex DJSpace::face_nondeg(const Simplex& x, int i) const {
    Simplex fa = face(x.parts.at(0), i);
    Simplex out;
    out.space = this;
    out.dim = fa.dim;
    out.word = fa.word;
    out.parts = {fa};
    out.parts[0].dim = fa.base_dim();
    out.parts[0].word.clear();
    std::vector<int> sup = support(out.parts[0]);
    out.labels = {(long long)S_.below((std::size_t)x.labels.at(0), sup).value()};
    return out;
}

Simplex DJSpace::basepoint() const {
    return make(S_.zero_hat(), amb_->basepoint());
}

/******** per-cell formality ********/

DJFormality::DJFormality(Arena& arena, SimplicialPoset S)
    : arena_(&arena), S_(std::move(S)) {
    if (!S_.validate().empty())
        throw std::invalid_argument("dj formality: invalid poset");
    if (S_.nverts() < 1)
        throw std::invalid_argument("dj formality: no vertices");
    for (int v = 0; v < S_.nverts(); ++v)
        circles_.push_back(universal_bundle(arena, *arena.make<BarInt>()));
    std::vector<const Space*> vspaces;
    for (const UniversalBundle& c : circles_) vspaces.push_back(c.base);
    dj_ = arena.make<DJSpace>(arena, S_, vspaces);
}

const UniversalBundle& DJFormality::circle(int v) const {
    if (v < 1 || v > (int)circles_.size()) throw std::out_of_range("circle");
    return circles_[(std::size_t)v - 1];
}

TorusFormality& DJFormality::at(std::size_t sigma) {
    if (sigma >= S_.size()) throw std::out_of_range("at: no such cell");
    if (S_.elt(sigma).rank == 0)
        throw std::invalid_argument("at: the bottom cell has no circle factors");
    auto it = inst_.find(sigma);
    if (it == inst_.end()) {
        std::vector<UniversalBundle> cs;
        for (int v : S_.elt(sigma).verts)
            cs.push_back(circles_[(std::size_t)v - 1]);
        it = inst_
                 .emplace(sigma, std::make_unique<TorusFormality>(
                                     *arena_, std::move(cs)))
                 .first;
    }
    return *it->second;
}

std::vector<int> DJFormality::coords(std::size_t tau,
                                     std::size_t sigma) const {
    if (tau >= S_.size() || sigma >= S_.size())
        throw std::out_of_range("coords: no such cell");
    if (!S_.leq(tau, sigma))
        throw std::invalid_argument("coords: cells are not comparable");
    const std::vector<int>& tv = S_.elt(tau).verts;
    const std::vector<int>& sv = S_.elt(sigma).verts;
    std::vector<int> out;
    for (int v : tv) {
        auto it = std::find(sv.begin(), sv.end(), v);
        out.push_back((int)(it - sv.begin()) + 1);
    }
    return out;
}

bool DJFormality::square(std::size_t tau, std::size_t sigma,
                         const Multi& alpha) {
    TorusFormality& ft = at(tau);
    TorusFormality& fs = at(sigma);
    std::vector<int> co = coords(tau, sigma);
    Chain lhs = bt_include(ft, fs, co, ft.f(alpha));
    Chain rhs = fs.f(multi_include(alpha, co, fs.rank()));
    return lhs == rhs;
}

std::vector<DJFormality::SquareCert> DJFormality::verify_squares(int deg_max) {
    std::vector<SquareCert> out;
    for (std::size_t sig = 0; sig < S_.size(); ++sig) {
        if (S_.elt(sig).rank == 0) continue;
        for (std::size_t tau = 0; tau < S_.size(); ++tau) {
            if (tau == sig || S_.elt(tau).rank == 0 || !S_.leq(tau, sig))
                continue;
            const DividedCoalgebra& div = at(tau).koszul().div();
            for (int d = 0; d <= deg_max; d += 2)
                for (const Multi& a : div.basis(d))
                    out.push_back({tau, sig, a, square(tau, sig, a)});
        }
    }
    return out;
}

}  // namespace chalg
