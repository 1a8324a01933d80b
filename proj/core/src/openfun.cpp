#include "opencat/openfun.hpp"

#include <cstdlib>
#include <functional>
#include <string>

namespace opencat {

namespace {

void hash_mix(std::size_t& seed, std::size_t value)
{
    seed ^= value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

std::size_t hash_text(const std::string& s) { return std::hash<std::string>{}(s); }

std::size_t content_hash_of(const Presheaf& alpha, const FinFunctor& beta)
{
    // Categories and fibers compare as sets, so their contributions are summed.
    std::size_t h = 0x6f70656eULL;
    std::size_t fibers = 0;
    for (const auto& c : alpha.base().objects()) {
        std::size_t fiber = hash_text(c.str());
        for (const auto& x : alpha.fiber(c))
            fiber += hash_text(x.encode()) * 0x100000001b3ULL;
        fibers += fiber * 0x9e3779b1ULL;
    }
    hash_mix(h, fibers);
    for (const auto& [f, m] : alpha.actions()) {
        hash_mix(h, hash_text(f.str()));
        for (const auto& [x, y] : m) {
            hash_mix(h, hash_text(x.encode()));
            hash_mix(h, hash_text(y.encode()));
        }
    }
    for (const auto& [a, b] : beta.on_objects()) {
        hash_mix(h, hash_text(a.str()));
        hash_mix(h, hash_text(b.str()));
    }
    for (const auto& [a, b] : beta.on_arrows()) {
        hash_mix(h, hash_text(a.str()));
        hash_mix(h, hash_text(b.str()));
    }
    std::size_t objects = 0;
    for (const auto& d : beta.cod().objects())
        objects += hash_text(d.str());
    hash_mix(h, objects);
    hash_mix(h, beta.cod().arrow_count());
    return h;
}

}  // namespace

OpenFunctor::OpenFunctor(Presheaf alpha, FinFunctor beta)
{
    std::size_t h = content_hash_of(alpha, beta);
    data_ = std::make_shared<const Data>(Data{std::move(alpha), std::move(beta), h});
}

bool operator==(const OpenFunctor& a, const OpenFunctor& b)
{
    if (a.data_ == b.data_)
        return true;
    if (a.data_->hash != b.data_->hash)
        return false;
    return a.data_->alpha == b.data_->alpha && a.data_->beta == b.data_->beta;
}

OpenFunctor make_open_functor(Presheaf alpha, CategoryRef cod, std::map<ObjId, ObjId> on_obj,
                              std::map<ArrId, ArrId> on_arr)
{
    CategoryRef elements = category_of_elements_ref(alpha);
    FinFunctor beta(std::move(elements), std::move(cod), std::move(on_obj), std::move(on_arr));
    return OpenFunctor(std::move(alpha), std::move(beta));
}

Report validate_open_functor(const OpenFunctor& f)
{
    Report report;
    Report alpha = validate_presheaf(f.alpha());
    report.merge(alpha, "alpha");
    if (!alpha.ok())
        return report;
    if (!(*f.elements() == category_of_elements(f.alpha())))
        report.add("open-functor-boundary", "beta does not start from the category of elements of alpha");
    report.merge(validate_category(*f.elements()), "category of elements");
    report.merge(validate_functor(f.beta()), "beta");
    return report;
}

OpenFunctor identity_open_functor(const CategoryRef& cat)
{
    return from_classical(identity_functor(cat));
}

OpenFunctor from_classical(const FinFunctor& f)
{
    Presheaf alpha = terminal_presheaf(f.dom_ref());
    std::map<ObjId, ObjId> on_obj;
    std::map<ArrId, ArrId> on_arr;
    const Element star = Element::star();
    for (const auto& [c, d] : f.on_objects())
        on_obj.emplace(element_object(c, star), d);
    for (const auto& [a, b] : f.on_arrows())
        on_arr.emplace(element_arrow(a, star), b);
    return make_open_functor(std::move(alpha), f.cod_ref(), std::move(on_obj), std::move(on_arr));
}

std::size_t default_max_fiber()
{
    static const std::size_t value = [] {
        if (const char* env = std::getenv("OPENCAT_MAX_FIBER")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && v > 0)
                return static_cast<std::size_t>(v);
        }
        return std::size_t{512};
    }();
    return value;
}

const OpenFunctor* CompositionCache::find(const OpenFunctor& g, const OpenFunctor& f) const
{
    std::size_t key = g.content_hash() * 31 + f.content_hash();
    auto [lo, hi] = entries_.equal_range(key);
    for (auto it = lo; it != hi; ++it) {
        if (it->second.g == g && it->second.f == f) {
            ++hits_;
            return &it->second.composite;
        }
    }
    return nullptr;
}

const OpenFunctor& CompositionCache::insert(const OpenFunctor& g, const OpenFunctor& f, OpenFunctor composite)
{
    std::size_t key = g.content_hash() * 31 + f.content_hash();
    auto it = entries_.emplace(key, Entry{g, f, std::move(composite)});
    return it->second.composite;
}

OpenFunctor compose_open(const OpenFunctor& g, const OpenFunctor& f, const ComposeOptions& options)
{
    if (!same_category(f.cod_ref(), g.dom_ref()))
        throw Error(ErrorKind::BoundaryMismatch, "compose_open: codomain of F is not the domain of G");
    if (options.cache)
        if (const OpenFunctor* hit = options.cache->find(g, f))
            return *hit;

    const auto& C = f.dom();
    const Presheaf& Fa = f.alpha();
    const Presheaf& Ga = g.alpha();
    const FinFunctor& Fb = f.beta();
    const FinFunctor& Gb = g.beta();

    // (G o F)_alpha(c) = coproduct over x in F_alpha(c) of G_alpha(F_beta(c, x))
    std::map<ObjId, std::vector<Element>> fibers;
    for (const auto& c : C.objects()) {
        auto& fiber = fibers[c];
        for (const auto& x : Fa.fiber(c)) {
            const ObjId& d = Fb(element_object(c, x));
            for (const auto& y : Ga.fiber(d))
                fiber.push_back(Element::pair(x, y));
        }
        if (fiber.size() > options.max_fiber)
            throw Error(ErrorKind::SizeLimit, "composite fiber over " + c.str() + " has " +
                                                  std::to_string(fiber.size()) + " elements (limit " +
                                                  std::to_string(options.max_fiber) + ")");
    }

    // (G o F)_alpha(f)^po(<x', y'>) = <F_alpha(f)^po(x'), G_alpha(F_beta(f, x'))^po(y')>
    std::map<ArrId, ElementMap> actions;
    for (const auto& a : C.arrows()) {
        auto& m = actions[a];
        for (const auto& xy : fibers.at(C.tgt(a))) {
            const Element& x2 = xy.first();
            const Element& y2 = xy.second();
            const ArrId& h = Fb(element_arrow(a, x2));
            m.emplace(xy, Element::pair(Fa.act(a, x2), Ga.act(h, y2)));
        }
    }

    Presheaf alpha(f.dom_ref(), std::move(fibers), std::move(actions));
    CategoryRef elements = category_of_elements_ref(alpha);

    // beta(c, <x, y>) = G_beta(F_beta(c, x), y); beta(f, <x', y'>) = G_beta(F_beta(f, x'), y')
    std::map<ObjId, ObjId> on_obj;
    std::map<ArrId, ArrId> on_arr;
    for (const auto& c : C.objects())
        for (const auto& xy : alpha.fiber(c))
            on_obj.emplace(element_object(c, xy), Gb(element_object(Fb(element_object(c, xy.first())), xy.second())));
    for (const auto& a : C.arrows())
        for (const auto& xy : alpha.fiber(C.tgt(a)))
            on_arr.emplace(element_arrow(a, xy), Gb(element_arrow(Fb(element_arrow(a, xy.first())), xy.second())));

    OpenFunctor composite(std::move(alpha),
                          FinFunctor(std::move(elements), g.cod_ref(), std::move(on_obj), std::move(on_arr)));
    if (options.cache)
        return options.cache->insert(g, f, std::move(composite));
    return composite;
}

ObjId apply_open(const OpenFunctor& f, const ObjId& c, const Element& x)
{
    if (!f.dom().has_object(c))
        throw Error(ErrorKind::UnknownObject, "unknown object '" + c.str() + "'");
    if (!f.alpha().contains(c, x))
        throw Error(ErrorKind::UnknownElement, "element " + x.encode() + " is not in F_alpha(" + c.str() + ")");
    return f.beta()(element_object(c, x));
}

ArrId apply_open_arrow(const OpenFunctor& f, const ArrId& arrow, const Element& x)
{
    if (!f.dom().has_arrow(arrow))
        throw Error(ErrorKind::UnknownArrow, "unknown arrow '" + arrow.str() + "'");
    const ObjId& tgt = f.dom().tgt(arrow);
    if (!f.alpha().contains(tgt, x))
        throw Error(ErrorKind::UnknownElement, "element " + x.encode() + " is not in F_alpha(" + tgt.str() + ")");
    return f.beta()(element_arrow(arrow, x));
}

}  // namespace opencat
