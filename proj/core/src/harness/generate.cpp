#include "opencat/harness/generate.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>

namespace opencat::harness {

namespace {

using Rng = std::mt19937_64;

std::size_t pick(Rng& rng, std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(rng() % n); }

// Inclusive range [lo, hi].
std::size_t between(Rng& rng, std::size_t lo, std::size_t hi) { return lo + pick(rng, hi - lo + 1); }

template <class T>
void shuffle(Rng& rng, std::vector<T>& v)
{
    for (std::size_t i = v.size(); i > 1; --i)
        std::swap(v[i - 1], v[pick(rng, i)]);
}

ObjId object_name(std::size_t i) { return ObjId("c" + std::to_string(i)); }
ArrId identity_name(const ObjId& c) { return ArrId("id_" + c.str()); }

// ---------------------------------------------------------------- categories

CategoryRef gen_dag(Rng& rng, std::size_t max_objects, std::size_t max_edges)
{
    const std::size_t n = between(rng, 1, std::max<std::size_t>(max_objects, 1));
    struct Edge {
        std::size_t src, tgt;
    };
    std::vector<Edge> edges;
    if (n > 1) {
        const std::size_t k = between(rng, 0, max_edges);
        for (std::size_t i = 0; i < k; ++i) {
            std::size_t a = pick(rng, n);
            std::size_t b = pick(rng, n - 1);
            if (b >= a)
                ++b;
            edges.push_back({std::min(a, b), std::max(a, b)});
        }
    }

    // Paths of length >= 1, each stored as its edge indices in traversal order.
    std::vector<std::vector<std::size_t>> paths;
    std::vector<std::vector<std::size_t>> frontier;
    for (std::size_t e = 0; e < edges.size(); ++e)
        frontier.push_back({e});
    while (!frontier.empty()) {
        std::vector<std::vector<std::size_t>> next;
        for (const auto& path : frontier) {
            paths.push_back(path);
            for (std::size_t e = 0; e < edges.size(); ++e) {
                if (edges[e].src == edges[path.back()].tgt) {
                    auto longer = path;
                    longer.push_back(e);
                    next.push_back(std::move(longer));
                }
            }
        }
        frontier = std::move(next);
    }
    auto name = [](const std::vector<std::size_t>& path) {
        std::string s;
        for (auto it = path.rbegin(); it != path.rend(); ++it) {
            if (!s.empty())
                s += '.';
            s += "e" + std::to_string(*it);
        }
        return ArrId(s);
    };

    FinCategory::Builder b;
    for (std::size_t i = 0; i < n; ++i)
        b.object(object_name(i), identity_name(object_name(i)));
    for (const auto& path : paths)
        b.arrow(name(path), object_name(edges[path.front()].src), object_name(edges[path.back()].tgt));
    for (const auto& f : paths) {
        for (const auto& g : paths) {
            if (edges[f.back()].tgt != edges[g.front()].src)
                continue;
            auto gf = f;
            gf.insert(gf.end(), g.begin(), g.end());
            b.compose(name(g), name(f), name(gf));
        }
    }
    return b.build_ref();
}

CategoryRef gen_preorder(Rng& rng, std::size_t max_objects, std::size_t max_edges)
{
    const std::size_t n = between(rng, 1, std::max<std::size_t>(max_objects, 1));
    std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        le[i][i] = true;
    if (n > 1) {
        const std::size_t k = between(rng, 0, max_edges);
        for (std::size_t e = 0; e < k; ++e) {
            std::size_t a = pick(rng, n);
            std::size_t b = pick(rng, n - 1);
            if (b >= a)
                ++b;
            le[a][b] = true;
        }
    }
    for (std::size_t m = 0; m < n; ++m)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (le[i][m] && le[m][j])
                    le[i][j] = true;

    auto arrow = [](std::size_t i, std::size_t j) {
        if (i == j)
            return identity_name(object_name(i));
        return ArrId("r" + std::to_string(i) + "_" + std::to_string(j));
    };
    FinCategory::Builder b;
    for (std::size_t i = 0; i < n; ++i)
        b.object(object_name(i), arrow(i, i));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && le[i][j])
                b.arrow(arrow(i, j), object_name(i), object_name(j));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (le[i][j] && le[j][k])
                    b.compose(arrow(j, k), arrow(i, j), arrow(i, k));
    return b.build_ref();
}

CategoryRef product(const FinCategory& x, const FinCategory& y)
{
    auto obj = [](const ObjId& a, const ObjId& b) { return ObjId(a.str() + "&" + b.str()); };
    auto arr = [](const ArrId& f, const ArrId& g) { return ArrId(f.str() + "&" + g.str()); };
    FinCategory::Builder b;
    for (const auto& a : x.objects())
        for (const auto& c : y.objects())
            b.object(obj(a, c), arr(x.identity(a), y.identity(c)));
    for (const auto& f : x.arrows())
        for (const auto& g : y.arrows())
            if (!x.is_identity(f) || !y.is_identity(g))
                b.arrow(arr(f, g), obj(x.src(f), y.src(g)), obj(x.tgt(f), y.tgt(g)));
    for (const auto& [k1, v1] : x.composition_table())
        for (const auto& [k2, v2] : y.composition_table())
            b.compose(arr(k1.first, k2.first), arr(k1.second, k2.second), arr(v1, v2));
    return b.build_ref();
}

// ---------------------------------------------------------------- presheaves

std::vector<Element> labels(std::size_t n)
{
    std::vector<Element> out;
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(Element::atom("e" + std::to_string(i)));
    return out;
}

// Splits a free-category arrow name "e2.e0" into its generating edges, or
// returns nothing when the category does not look like a free one.
std::optional<std::map<ArrId, std::vector<ArrId>>> free_generators(const FinCategory& c)
{
    std::map<ArrId, std::vector<ArrId>> out;
    for (const auto& f : c.arrows()) {
        if (c.is_identity(f))
            continue;
        std::vector<ArrId> pieces;
        std::string s = f.str();
        std::size_t start = 0;
        while (true) {
            std::size_t dot = s.find('.', start);
            ArrId piece(s.substr(start, dot == std::string::npos ? std::string::npos : dot - start));
            if (!c.has_arrow(piece) || c.is_identity(piece) || piece.str().find('.') != std::string::npos)
                return std::nullopt;
            pieces.push_back(piece);
            if (dot == std::string::npos)
                break;
            start = dot + 1;
        }
        // Written g . f, acted on right to left in Set^op: g's action first.
        out.emplace(f, std::move(pieces));
    }
    return out;
}

Presheaf presheaf_on_free(Rng& rng, std::size_t max_fiber, const CategoryRef& c,
                          const std::map<ArrId, std::vector<ArrId>>& paths)
{
    std::map<ObjId, std::size_t> size;
    for (const auto& o : c->objects())
        size[o] = between(rng, 0, max_fiber);
    std::vector<ArrId> generators;
    for (const auto& [f, pieces] : paths)
        if (pieces.size() == 1)
            generators.push_back(f);
    // Edges run from lower to higher object index, so one descending pass
    // makes every source nonempty when its target is.
    std::vector<ObjId> order(c->objects().begin(), c->objects().end());
    std::reverse(order.begin(), order.end());
    for (const auto& o : order)
        if (size[o] > 0)
            for (const auto& e : generators)
                if (c->tgt(e) == o && size[c->src(e)] == 0)
                    size[c->src(e)] = 1;

    std::map<ObjId, std::vector<Element>> fibers;
    for (const auto& o : c->objects())
        fibers[o] = labels(size[o]);
    std::map<ArrId, ElementMap> generator_action;
    for (const auto& e : generators) {
        auto& m = generator_action[e];
        const auto& from = fibers[c->tgt(e)];
        const auto& to = fibers[c->src(e)];
        for (const auto& x : from)
            m.emplace(x, to[pick(rng, to.size())]);
    }
    std::map<ArrId, ElementMap> actions;
    for (const auto& o : c->objects()) {
        auto& m = actions[c->identity(o)];
        for (const auto& x : fibers[o])
            m.emplace(x, x);
    }
    for (const auto& [f, pieces] : paths) {
        auto& m = actions[f];
        for (const auto& x : fibers[c->tgt(f)]) {
            Element y = x;
            for (const auto& piece : pieces)
                y = generator_action.at(piece).at(y);
            m.emplace(x, y);
        }
    }
    return Presheaf(c, std::move(fibers), std::move(actions));
}

// A coproduct of constant singletons and representables Hom(-, c0), relabeled.
Presheaf presheaf_by_summands(Rng& rng, std::size_t max_fiber, const CategoryRef& c)
{
    const FinCategory& C = *c;
    std::map<ObjId, std::size_t> size;
    for (const auto& o : C.objects())
        size[o] = 0;
    // Each summand: nullopt for a constant singleton, else the representing object.
    std::vector<std::optional<ObjId>> summands;
    const std::size_t wanted = between(rng, 0, max_fiber);
    for (std::size_t attempt = 0; attempt < 2 * wanted + 2 && summands.size() < wanted; ++attempt) {
        std::optional<ObjId> s;
        if (!C.objects().empty() && pick(rng, 3) != 0)
            s = C.objects()[pick(rng, C.object_count())];
        bool fits = true;
        for (const auto& o : C.objects()) {
            std::size_t add = s ? C.hom(o, *s).size() : 1;
            if (size[o] + add > max_fiber)
                fits = false;
        }
        if (!fits)
            continue;
        for (const auto& o : C.objects())
            size[o] += s ? C.hom(o, *s).size() : 1;
        summands.push_back(s);
    }

    // label[o][(summand, underlying arrow or "")]
    std::map<ObjId, std::map<std::pair<std::size_t, std::string>, Element>> label;
    std::map<ObjId, std::vector<Element>> fibers;
    for (const auto& o : C.objects()) {
        auto& fiber = fibers[o];
        for (std::size_t s = 0; s < summands.size(); ++s) {
            std::vector<std::string> under;
            if (summands[s])
                for (const auto& h : C.hom(o, *summands[s]))
                    under.push_back(h.str());
            else
                under.push_back("");
            for (const auto& u : under) {
                Element x = Element::atom("e" + std::to_string(fiber.size()));
                label[o].emplace(std::make_pair(s, u), x);
                fiber.push_back(x);
            }
        }
    }
    std::map<ArrId, ElementMap> actions;
    for (const auto& f : C.arrows()) {
        const ObjId& src = C.src(f);
        const ObjId& tgt = C.tgt(f);
        auto& m = actions[f];
        for (const auto& [key, x] : label[tgt]) {
            const auto& [s, u] = key;
            std::string image = summands[s] ? compose_arrows(C, ArrId(u), f).str() : "";
            m.emplace(x, label[src].at({s, image}));
        }
    }
    return Presheaf(c, std::move(fibers), std::move(actions));
}

// ---------------------------------------------------------------- functor search

std::optional<FinFunctor> search_functor(Rng& rng, const CategoryRef& a, const CategoryRef& d, std::size_t budget)
{
    const FinCategory& A = *a;
    const FinCategory& D = *d;
    if (D.object_count() == 0)
        return A.object_count() == 0 ? std::optional<FinFunctor>(FinFunctor(a, d, {}, {})) : std::nullopt;

    std::vector<ObjId> objects(A.objects().begin(), A.objects().end());
    std::vector<ArrId> arrows;
    for (const auto& f : A.arrows())
        if (!A.is_identity(f))
            arrows.push_back(f);
    std::map<ArrId, std::vector<std::pair<ArrId, ArrId>>> triples;  // arrow -> (g, f) pairs with gf involving it
    for (const auto& [key, gf] : A.composition_table()) {
        if (A.is_identity(key.first) || A.is_identity(key.second))
            continue;
        triples[key.first].push_back(key);
        triples[key.second].push_back(key);
        triples[gf].push_back(key);
    }

    std::map<ObjId, ObjId> on_obj;
    std::map<ArrId, ArrId> on_arr;
    std::size_t steps = 0;

    auto consistent = [&](const ArrId& x) {
        auto it = triples.find(x);
        if (it == triples.end())
            return true;
        for (const auto& key : it->second) {
            const ArrId& gf = *A.find_composite(key.first, key.second);
            auto g = on_arr.find(key.first);
            auto f = on_arr.find(key.second);
            auto h = on_arr.find(gf);
            if (g == on_arr.end() || f == on_arr.end() || h == on_arr.end())
                continue;
            if (compose_arrows(D, g->second, f->second) != h->second)
                return false;
        }
        return true;
    };

    std::function<bool(std::size_t)> assign_arrow = [&](std::size_t i) -> bool {
        if (i == arrows.size())
            return true;
        if (++steps > budget)
            return false;
        const ArrId& f = arrows[i];
        auto choices = std::vector<ArrId>(D.hom(on_obj.at(A.src(f)), on_obj.at(A.tgt(f))).begin(),
                                          D.hom(on_obj.at(A.src(f)), on_obj.at(A.tgt(f))).end());
        shuffle(rng, choices);
        for (const auto& g : choices) {
            on_arr[f] = g;
            if (consistent(f) && assign_arrow(i + 1))
                return true;
            if (steps > budget)
                break;
        }
        on_arr.erase(f);
        return false;
    };

    std::function<bool(std::size_t)> assign_object = [&](std::size_t i) -> bool {
        if (i == objects.size()) {
            for (const auto& o : objects)
                on_arr[A.identity(o)] = D.identity(on_obj.at(o));
            if (assign_arrow(0))
                return true;
            for (const auto& o : objects)
                on_arr.erase(A.identity(o));
            return false;
        }
        if (++steps > budget)
            return false;
        std::vector<ObjId> choices(D.objects().begin(), D.objects().end());
        shuffle(rng, choices);
        for (const auto& d0 : choices) {
            on_obj[objects[i]] = d0;
            if (assign_object(i + 1))
                return true;
            if (steps > budget)
                break;
        }
        on_obj.erase(objects[i]);
        return false;
    };

    if (!assign_object(0))
        return std::nullopt;
    return FinFunctor(a, d, std::move(on_obj), std::move(on_arr));
}

// ---------------------------------------------------------------- morphism enumeration

// Slot (c, y) of a morphism F => G between presheaves: the value theta[c]^po(y).
struct Slot {
    ObjId c;
    Element y;
};

// Constraint F(f)^po(theta[c'](y')) = theta[c](G(f)^po(y')) between slots.
struct Square {
    ArrId f;
    std::size_t later;    // slot (c', y')
    std::size_t earlier;  // slot (c, G(f)^po(y'))
};

class MorphismSearch {
public:
    MorphismSearch(Rng& rng, const Presheaf& from, const Presheaf& to, std::size_t budget)
        : rng_(rng), from_(from), to_(to), budget_(budget)
    {
        const FinCategory& C = to.base();
        std::map<std::pair<ObjId, Element>, std::size_t> index;
        for (const auto& c : C.objects())
            for (const auto& y : to.fiber(c)) {
                index.emplace(std::make_pair(c, y), slots_.size());
                slots_.push_back({c, y});
            }
        squares_.resize(slots_.size());
        for (const auto& f : C.arrows()) {
            for (const auto& y2 : to.fiber(C.tgt(f))) {
                std::size_t later = index.at({C.tgt(f), y2});
                std::size_t earlier = index.at({C.src(f), to.act(f, y2)});
                Square sq{f, later, earlier};
                squares_[later].push_back(sq);
                squares_[earlier].push_back(sq);
            }
        }
        values_.resize(slots_.size());
    }

    // Calls `emit` for each solution until it returns false or the budget runs out.
    void run(const std::function<bool(const std::map<ObjId, ElementMap>&)>& emit)
    {
        emit_ = &emit;
        stop_ = false;
        descend(0);
    }

private:
    bool ok(std::size_t i) const
    {
        for (const auto& sq : squares_[i]) {
            if (!values_[sq.later] || !values_[sq.earlier])
                continue;
            if (from_.act(sq.f, *values_[sq.later]) != *values_[sq.earlier])
                return false;
        }
        return true;
    }

    void descend(std::size_t i)
    {
        if (stop_)
            return;
        if (++steps_ > budget_) {
            stop_ = true;
            return;
        }
        if (i == slots_.size()) {
            std::map<ObjId, ElementMap> components;
            for (const auto& c : to_.base().objects())
                components[c];
            for (std::size_t k = 0; k < slots_.size(); ++k)
                components[slots_[k].c].emplace(slots_[k].y, *values_[k]);
            if (!(*emit_)(components))
                stop_ = true;
            return;
        }
        auto fiber = from_.fiber(slots_[i].c);
        std::vector<Element> choices(fiber.begin(), fiber.end());
        shuffle(rng_, choices);
        for (const auto& x : choices) {
            values_[i] = x;
            if (ok(i))
                descend(i + 1);
            if (stop_)
                break;
        }
        values_[i].reset();
    }

    Rng& rng_;
    const Presheaf& from_;
    const Presheaf& to_;
    std::size_t budget_;
    std::size_t steps_ = 0;
    bool stop_ = false;
    std::vector<Slot> slots_;
    std::vector<std::vector<Square>> squares_;
    std::vector<std::optional<Element>> values_;
    const std::function<bool(const std::map<ObjId, ElementMap>&)>* emit_ = nullptr;
};

// Enumerates beta parts for a fixed alpha: components over int G_alpha.
void enumerate_beta(Rng& rng, const OpenFunctor& F, const OpenFunctor& G, const PresheafMorphism& alpha,
                    std::size_t budget, const std::function<bool(std::map<ObjId, ArrId>)>& emit)
{
    const FinCategory& C = G.dom();
    const FinCategory& D = G.cod();
    struct BetaSlot {
        ObjId key;
        ObjId from;
        ObjId to;
    };
    struct BetaSquare {
        std::size_t src_slot, tgt_slot;
        ArrId g_arrow;  // G_beta(f, y')
        ArrId f_arrow;  // F_beta(f, alpha^po y')
    };
    std::vector<BetaSlot> slots;
    std::map<ObjId, std::size_t> index;
    for (const auto& c : C.objects())
        for (const auto& y : G.alpha().fiber(c)) {
            ObjId key = element_object(c, y);
            index.emplace(key, slots.size());
            slots.push_back({key, F.beta()(element_object(c, alpha.apply(c, y))), G.beta()(key)});
        }
    std::vector<std::vector<BetaSquare>> squares(slots.size());
    for (const auto& f : C.arrows()) {
        const ObjId& src = C.src(f);
        const ObjId& tgt = C.tgt(f);
        for (const auto& y2 : G.alpha().fiber(tgt)) {
            BetaSquare sq{index.at(element_object(src, G.alpha().act(f, y2))), index.at(element_object(tgt, y2)),
                          G.beta()(element_arrow(f, y2)), F.beta()(element_arrow(f, alpha.apply(tgt, y2)))};
            squares[sq.src_slot].push_back(sq);
            squares[sq.tgt_slot].push_back(sq);
        }
    }
    std::vector<std::optional<ArrId>> values(slots.size());
    std::size_t steps = 0;
    bool stop = false;
    auto ok = [&](std::size_t i) {
        for (const auto& sq : squares[i]) {
            if (!values[sq.src_slot] || !values[sq.tgt_slot])
                continue;
            if (compose_arrows(D, sq.g_arrow, *values[sq.src_slot]) !=
                compose_arrows(D, *values[sq.tgt_slot], sq.f_arrow))
                return false;
        }
        return true;
    };
    std::function<void(std::size_t)> descend = [&](std::size_t i) {
        if (stop)
            return;
        if (++steps > budget) {
            stop = true;
            return;
        }
        if (i == slots.size()) {
            std::map<ObjId, ArrId> components;
            for (std::size_t k = 0; k < slots.size(); ++k)
                components.emplace(slots[k].key, *values[k]);
            if (!emit(std::move(components)))
                stop = true;
            return;
        }
        auto hom = D.hom(slots[i].from, slots[i].to);
        std::vector<ArrId> choices(hom.begin(), hom.end());
        shuffle(rng, choices);
        for (const auto& h : choices) {
            values[i] = h;
            if (ok(i))
                descend(i + 1);
            if (stop)
                break;
        }
        values[i].reset();
    };
    descend(0);
}

constexpr std::size_t search_budget = 20000;

}  // namespace

const char* to_string(CategoryStyle s)
{
    switch (s) {
    case CategoryStyle::dag_free:
        return "dag_free";
    case CategoryStyle::preorder:
        return "preorder";
    case CategoryStyle::product:
        return "product";
    }
    return "?";
}

std::optional<CategoryStyle> parse_style(std::string_view s)
{
    for (auto style : {CategoryStyle::dag_free, CategoryStyle::preorder, CategoryStyle::product})
        if (s == to_string(style))
            return style;
    return std::nullopt;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt)
{
    // splitmix64 of the combined value
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

CategoryRef gen_category(const GenParams& p)
{
    Rng rng(p.seed);
    switch (p.style) {
    case CategoryStyle::dag_free:
        return gen_dag(rng, p.max_objects, p.max_extra_arrows);
    case CategoryStyle::preorder:
        return gen_preorder(rng, p.max_objects, p.max_extra_arrows);
    case CategoryStyle::product: {
        const std::size_t factor_objects = std::max<std::size_t>(2, (p.max_objects + 1) / 2);
        const std::size_t factor_edges = std::max<std::size_t>(1, p.max_extra_arrows / 2);
        auto factor = [&]() {
            return pick(rng, 2) == 0 ? gen_dag(rng, factor_objects, factor_edges)
                                     : gen_preorder(rng, factor_objects, factor_edges);
        };
        CategoryRef x = factor();
        CategoryRef y = factor();
        return product(*x, *y);
    }
    }
    return gen_dag(rng, p.max_objects, p.max_extra_arrows);
}

Presheaf gen_presheaf(const GenParams& p, const CategoryRef& c)
{
    Rng rng(derive_seed(p.seed, 1));
    if (c->object_count() == 0)
        return Presheaf(c, {}, {});
    if (p.style == CategoryStyle::dag_free)
        if (auto paths = free_generators(*c))
            return presheaf_on_free(rng, p.max_fiber, c, *paths);
    return presheaf_by_summands(rng, p.max_fiber, c);
}

OpenFunctor gen_open_functor(const GenParams& p, const CategoryRef& c, const CategoryRef& d)
{
    Presheaf alpha = gen_presheaf(p, c);
    CategoryRef elements = category_of_elements_ref(alpha);
    Rng rng(derive_seed(p.seed, 2));
    if (auto beta = search_functor(rng, elements, d, search_budget))
        return OpenFunctor(std::move(alpha), std::move(*beta));
    const ObjId target = d->objects()[pick(rng, d->object_count())];
    return OpenFunctor(std::move(alpha), constant_functor(elements, d, target));
}

std::vector<PresheafMorphism> gen_presheaf_morphisms(const GenParams& p, const Presheaf& from, const Presheaf& to,
                                                     std::size_t cap)
{
    std::vector<PresheafMorphism> out;
    if (cap == 0)
        return out;
    Rng rng(derive_seed(p.seed, 3));
    if (from == to)
        out.push_back(identity_presheaf_morphism(from));
    MorphismSearch search(rng, from, to, search_budget);
    search.run([&](const std::map<ObjId, ElementMap>& components) {
        PresheafMorphism m(from, to, components);
        if (std::find(out.begin(), out.end(), m) == out.end())
            out.push_back(std::move(m));
        return out.size() < cap;
    });
    return out;
}

std::vector<OpenNatTrans> gen_open_nat(const GenParams& p, const OpenFunctor& f, const OpenFunctor& g,
                                       std::size_t cap)
{
    std::vector<OpenNatTrans> out;
    if (cap == 0 || !same_category(f.dom_ref(), g.dom_ref()) || !same_category(f.cod_ref(), g.cod_ref()))
        return out;
    Rng rng(derive_seed(p.seed, 4));
    if (f == g)
        out.push_back(identity_open_nat(f));
    MorphismSearch search(rng, f.alpha(), g.alpha(), search_budget);
    search.run([&](const std::map<ObjId, ElementMap>& components) {
        PresheafMorphism alpha(f.alpha(), g.alpha(), components);
        enumerate_beta(rng, f, g, alpha, search_budget, [&](std::map<ObjId, ArrId> beta) {
            OpenNatTrans theta(f, g, alpha, std::move(beta));
            bool fresh = std::none_of(out.begin(), out.end(),
                                      [&](const OpenNatTrans& t) { return open_nat_equal(t, theta); });
            if (fresh)
                out.push_back(std::move(theta));
            return out.size() < cap;
        });
        return out.size() < cap;
    });
    return out;
}

}  // namespace opencat::harness
