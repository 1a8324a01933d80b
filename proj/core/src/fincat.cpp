#include "opencat/fincat.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace opencat {

namespace {

std::string describe_pair(const ArrId& g, const ArrId& f) { return g.str() + " . " + f.str(); }

}  // namespace

const char* to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::NotComposable: return "not-composable";
    case ErrorKind::BoundaryMismatch: return "boundary-mismatch";
    case ErrorKind::UnknownObject: return "unknown-object";
    case ErrorKind::UnknownArrow: return "unknown-arrow";
    case ErrorKind::UnknownElement: return "unknown-element";
    case ErrorKind::Malformed: return "malformed";
    case ErrorKind::Parse: return "parse-error";
    case ErrorKind::SizeLimit: return "size-limit";
    }
    return "unknown";
}

// ---------------------------------------------------------------- Report

void Report::add(std::string rule, std::string detail)
{
    violations_.push_back({std::move(rule), std::move(detail)});
}

void Report::merge(const Report& other, std::string_view context)
{
    for (const auto& v : other.violations_) {
        if (context.empty())
            violations_.push_back(v);
        else
            violations_.push_back({v.rule, std::string(context) + ": " + v.detail});
    }
}

bool Report::has(std::string_view rule) const
{
    return std::any_of(violations_.begin(), violations_.end(), [&](const Violation& v) { return v.rule == rule; });
}

std::ostream& operator<<(std::ostream& os, const Report& report)
{
    if (report.ok())
        return os << "valid\n";
    for (const auto& v : report.violations())
        os << v.rule << ": " << v.detail << '\n';
    return os;
}

// ---------------------------------------------------------------- FinCategory

const Endpoints& FinCategory::endpoints(const ArrId& f) const
{
    auto it = arrows_.find(f);
    if (it == arrows_.end())
        throw Error(ErrorKind::UnknownArrow, "unknown arrow '" + f.str() + "'");
    return it->second;
}

const ArrId& FinCategory::identity(const ObjId& c) const
{
    auto it = identities_.find(c);
    if (it == identities_.end())
        throw Error(ErrorKind::UnknownObject, "unknown object '" + c.str() + "'");
    return it->second;
}

bool FinCategory::is_identity(const ArrId& f) const
{
    auto it = arrows_.find(f);
    if (it == arrows_.end())
        return false;
    auto id = identities_.find(it->second.src);
    return id != identities_.end() && id->second == f;
}

const ArrId* FinCategory::find_composite(const ArrId& g, const ArrId& f) const
{
    auto it = compose_.find({g, f});
    return it == compose_.end() ? nullptr : &it->second;
}

std::span<const ArrId> FinCategory::hom(const ObjId& c, const ObjId& c2) const
{
    auto it = homs_.find({c, c2});
    if (it == homs_.end())
        return {};
    return it->second;
}

bool operator==(const FinCategory& a, const FinCategory& b)
{
    if (&a == &b)
        return true;
    return a.identities_ == b.identities_ && a.arrows_ == b.arrows_ && a.compose_ == b.compose_;
}

bool same_category(const CategoryRef& a, const CategoryRef& b)
{
    if (a == b)
        return true;
    if (!a || !b)
        return false;
    return *a == *b;
}

FinCategory::Builder& FinCategory::Builder::object(ObjId c, ArrId identity)
{
    objects_.emplace_back(std::move(c), std::move(identity));
    return *this;
}

FinCategory::Builder& FinCategory::Builder::arrow(ArrId f, ObjId src, ObjId tgt)
{
    arrows_.emplace_back(std::move(f), Endpoints{std::move(src), std::move(tgt)});
    return *this;
}

FinCategory::Builder& FinCategory::Builder::compose(ArrId g, ArrId f, ArrId gf)
{
    compose_[{std::move(g), std::move(f)}] = std::move(gf);
    return *this;
}

FinCategory FinCategory::Builder::build() const
{
    FinCategory cat;
    for (const auto& [c, id] : objects_) {
        if (c.empty() || id.empty())
            throw Error(ErrorKind::Malformed, "empty identifier");
        if (!cat.identities_.emplace(c, id).second)
            throw Error(ErrorKind::Malformed, "duplicate object id '" + c.str() + "'");
        if (!cat.arrows_.emplace(id, Endpoints{c, c}).second)
            throw Error(ErrorKind::Malformed, "duplicate arrow id '" + id.str() + "'");
        cat.objects_.push_back(c);
        cat.arrow_order_.push_back(id);
    }
    for (const auto& [f, ends] : arrows_) {
        if (f.empty())
            throw Error(ErrorKind::Malformed, "empty identifier");
        if (!cat.identities_.contains(ends.src) || !cat.identities_.contains(ends.tgt))
            throw Error(ErrorKind::Malformed, "arrow '" + f.str() + "' has an endpoint that is not an object");
        if (!cat.arrows_.emplace(f, ends).second)
            throw Error(ErrorKind::Malformed, "duplicate arrow id '" + f.str() + "'");
        cat.arrow_order_.push_back(f);
    }
    for (const auto& [key, gf] : compose_) {
        const auto& [g, f] = key;
        if (!cat.arrows_.contains(g) || !cat.arrows_.contains(f) || !cat.arrows_.contains(gf))
            throw Error(ErrorKind::Malformed, "composition entry " + describe_pair(g, f) + " = " + gf.str() +
                                                  " mentions an unknown arrow");
    }
    cat.compose_ = compose_;
    for (const auto& f : cat.arrow_order_) {
        const auto& ends = cat.arrows_.at(f);
        cat.compose_.try_emplace({cat.identities_.at(ends.tgt), f}, f);
        cat.compose_.try_emplace({f, cat.identities_.at(ends.src)}, f);
        cat.homs_[{ends.src, ends.tgt}].push_back(f);
    }
    return cat;
}

ArrId compose_arrows(const FinCategory& cat, const ArrId& g, const ArrId& f)
{
    const auto& fe = cat.endpoints(f);
    const auto& ge = cat.endpoints(g);
    if (fe.tgt != ge.src)
        throw Error(ErrorKind::NotComposable, "cannot compose " + describe_pair(g, f) + ": tgt(" + f.str() +
                                                  ") = " + fe.tgt.str() + " but src(" + g.str() + ") = " + ge.src.str());
    const ArrId* gf = cat.find_composite(g, f);
    if (!gf)
        throw Error(ErrorKind::Malformed, "composition table has no entry for " + describe_pair(g, f));
    return *gf;
}

Report validate_category(const FinCategory& cat)
{
    Report report;
    for (const auto& c : cat.objects()) {
        const auto& id = cat.identity(c);
        const auto& e = cat.endpoints(id);
        if (e.src != c || e.tgt != c)
            report.add("identity-endpoints", "identity " + id.str() + " of " + c.str() + " is not an endomorphism");
    }
    for (const auto& [key, gf] : cat.composition_table()) {
        const auto& [g, f] = key;
        const auto& fe = cat.endpoints(f);
        const auto& ge = cat.endpoints(g);
        if (fe.tgt != ge.src) {
            report.add("composition-domain", "entry for non-composable pair " + describe_pair(g, f));
            continue;
        }
        const auto& r = cat.endpoints(gf);
        if (r.src != fe.src || r.tgt != ge.tgt)
            report.add("composition-endpoints", describe_pair(g, f) + " = " + gf.str() + " has wrong endpoints");
    }
    const auto arrows = cat.arrows();
    for (const auto& f : arrows) {
        const auto& fe = cat.endpoints(f);
        for (const auto& g : arrows) {
            if (cat.endpoints(g).src == fe.tgt && !cat.find_composite(g, f))
                report.add("composition-missing", "no entry for " + describe_pair(g, f));
        }
        const ArrId* left = cat.find_composite(cat.identity(fe.tgt), f);
        if (left && *left != f)
            report.add("left-identity", "id[" + fe.tgt.str() + "] . " + f.str() + " = " + left->str());
        const ArrId* right = cat.find_composite(f, cat.identity(fe.src));
        if (right && *right != f)
            report.add("right-identity", f.str() + " . id[" + fe.src.str() + "] = " + right->str() + " at " + f.str());
    }
    // Associativity over all composable triples h . g . f.
    for (const auto& f : arrows) {
        const auto& fe = cat.endpoints(f);
        for (const auto& g : arrows) {
            if (cat.endpoints(g).src != fe.tgt)
                continue;
            const ArrId* gf = cat.find_composite(g, f);
            for (const auto& h : arrows) {
                if (cat.endpoints(h).src != cat.endpoints(g).tgt)
                    continue;
                const ArrId* hg = cat.find_composite(h, g);
                if (!gf || !hg)
                    continue;
                const ArrId* lhs = cat.find_composite(h, *gf);
                const ArrId* rhs = cat.find_composite(*hg, f);
                if (lhs && rhs && *lhs != *rhs)
                    report.add("associativity", h.str() + " . (" + g.str() + " . " + f.str() + ") = " + lhs->str() +
                                                    " but (" + h.str() + " . " + g.str() + ") . " + f.str() + " = " +
                                                    rhs->str());
            }
        }
    }
    return report;
}

// ---------------------------------------------------------------- FinFunctor

FinFunctor::FinFunctor(CategoryRef dom, CategoryRef cod, std::map<ObjId, ObjId> on_obj, std::map<ArrId, ArrId> on_arr)
    : data_(std::make_shared<const Data>(Data{std::move(dom), std::move(cod), std::move(on_obj), std::move(on_arr)}))
{
    if (!data_->dom || !data_->cod)
        throw Error(ErrorKind::Malformed, "functor needs a domain and a codomain");
}

const ObjId* FinFunctor::find(const ObjId& c) const
{
    auto it = data_->on_obj.find(c);
    return it == data_->on_obj.end() ? nullptr : &it->second;
}

const ArrId* FinFunctor::find(const ArrId& f) const
{
    auto it = data_->on_arr.find(f);
    return it == data_->on_arr.end() ? nullptr : &it->second;
}

const ObjId& FinFunctor::operator()(const ObjId& c) const
{
    if (const ObjId* r = find(c))
        return *r;
    throw Error(ErrorKind::UnknownObject, "functor does not map object '" + c.str() + "'");
}

const ArrId& FinFunctor::operator()(const ArrId& f) const
{
    if (const ArrId* r = find(f))
        return *r;
    throw Error(ErrorKind::UnknownArrow, "functor does not map arrow '" + f.str() + "'");
}

bool operator==(const FinFunctor& a, const FinFunctor& b)
{
    if (a.data_ == b.data_)
        return true;
    return a.data_->on_obj == b.data_->on_obj && a.data_->on_arr == b.data_->on_arr &&
           same_category(a.data_->dom, b.data_->dom) && same_category(a.data_->cod, b.data_->cod);
}

FinFunctor identity_functor(const CategoryRef& cat)
{
    std::map<ObjId, ObjId> on_obj;
    std::map<ArrId, ArrId> on_arr;
    for (const auto& c : cat->objects())
        on_obj.emplace(c, c);
    for (const auto& f : cat->arrows())
        on_arr.emplace(f, f);
    return FinFunctor(cat, cat, std::move(on_obj), std::move(on_arr));
}

FinFunctor constant_functor(const CategoryRef& dom, const CategoryRef& cod, const ObjId& target)
{
    const ArrId& id = cod->identity(target);
    std::map<ObjId, ObjId> on_obj;
    std::map<ArrId, ArrId> on_arr;
    for (const auto& c : dom->objects())
        on_obj.emplace(c, target);
    for (const auto& f : dom->arrows())
        on_arr.emplace(f, id);
    return FinFunctor(dom, cod, std::move(on_obj), std::move(on_arr));
}

FinFunctor compose_functors(const FinFunctor& g, const FinFunctor& f)
{
    if (!same_category(f.cod_ref(), g.dom_ref()))
        throw Error(ErrorKind::BoundaryMismatch, "compose_functors: codomain of F is not the domain of G");
    std::map<ObjId, ObjId> on_obj;
    std::map<ArrId, ArrId> on_arr;
    for (const auto& [c, d] : f.on_objects())
        if (const ObjId* e = g.find(d))
            on_obj.emplace(c, *e);
    for (const auto& [a, b] : f.on_arrows())
        if (const ArrId* e = g.find(b))
            on_arr.emplace(a, *e);
    return FinFunctor(f.dom_ref(), g.cod_ref(), std::move(on_obj), std::move(on_arr));
}

Report validate_functor(const FinFunctor& fun)
{
    Report report;
    const auto& dom = fun.dom();
    const auto& cod = fun.cod();
    for (const auto& c : dom.objects()) {
        const ObjId* d = fun.find(c);
        if (!d)
            report.add("functor-missing-object", "object " + c.str() + " is not mapped");
        else if (!cod.has_object(*d))
            report.add("functor-codomain", "object " + c.str() + " maps to unknown " + d->str());
    }
    for (const auto& f : dom.arrows()) {
        const ArrId* g = fun.find(f);
        if (!g) {
            report.add("functor-missing-arrow", "arrow " + f.str() + " is not mapped");
            continue;
        }
        if (!cod.has_arrow(*g)) {
            report.add("functor-codomain", "arrow " + f.str() + " maps to unknown " + g->str());
            continue;
        }
        const auto& fe = dom.endpoints(f);
        const auto& ge = cod.endpoints(*g);
        const ObjId* s = fun.find(fe.src);
        const ObjId* t = fun.find(fe.tgt);
        if (!s || !t || *s != ge.src || *t != ge.tgt)
            report.add("functor-endpoints", "F(" + f.str() + ") = " + g->str() + " : " + ge.src.str() + " -> " +
                                                ge.tgt.str() + " does not match the images of the endpoints of " +
                                                f.str());
    }
    for (const auto& c : dom.objects()) {
        const ArrId* img = fun.find(dom.identity(c));
        const ObjId* d = fun.find(c);
        if (img && d && cod.has_object(*d) && *img != cod.identity(*d))
            report.add("functor-identity", "F(id[" + c.str() + "]) = " + img->str() + " is not id[F(" + c.str() + ")]");
    }
    for (const auto& [key, gf] : dom.composition_table()) {
        const auto& [g, f] = key;
        const ArrId* fg = fun.find(g);
        const ArrId* ff = fun.find(f);
        const ArrId* fgf = fun.find(gf);
        if (!fg || !ff || !fgf || !cod.has_arrow(*fg) || !cod.has_arrow(*ff))
            continue;
        const ArrId* composite = cod.find_composite(*fg, *ff);
        if (!composite || *composite != *fgf)
            report.add("functor-composition", "F(" + g.str() + " . " + f.str() + ") = " + fgf->str() + " but F(" +
                                                  g.str() + ") . F(" + f.str() + ") = " +
                                                  (composite ? composite->str() : std::string("<undefined>")));
    }
    return report;
}

// ---------------------------------------------------------------- NatTrans

NatTrans::NatTrans(FinFunctor dom, FinFunctor cod, std::map<ObjId, ArrId> components)
    : dom_(std::move(dom)), cod_(std::move(cod)), components_(std::move(components))
{
}

const ArrId* NatTrans::find(const ObjId& c) const
{
    auto it = components_.find(c);
    return it == components_.end() ? nullptr : &it->second;
}

const ArrId& NatTrans::operator[](const ObjId& c) const
{
    if (const ArrId* a = find(c))
        return *a;
    throw Error(ErrorKind::UnknownObject, "natural transformation has no component at '" + c.str() + "'");
}

Report validate_nat(const NatTrans& theta)
{
    Report report;
    const auto& F = theta.dom();
    const auto& G = theta.cod();
    if (!same_category(F.dom_ref(), G.dom_ref()) || !same_category(F.cod_ref(), G.cod_ref())) {
        report.add("nat-boundary", "functors are not parallel");
        return report;
    }
    const auto& C = F.dom();
    const auto& D = F.cod();
    for (const auto& c : C.objects()) {
        const ArrId* a = theta.find(c);
        if (!a) {
            report.add("nat-missing-component", "no component at " + c.str());
            continue;
        }
        const ObjId* fc = F.find(c);
        const ObjId* gc = G.find(c);
        if (!D.has_arrow(*a) || !fc || !gc || D.src(*a) != *fc || D.tgt(*a) != *gc)
            report.add("component-endpoints", "component at " + c.str() + " = " + a->str() + " is not F(c) -> G(c)");
    }
    if (!report.ok())
        return report;
    for (const auto& f : C.arrows()) {
        const auto& e = C.endpoints(f);
        const ArrId* Ff = F.find(f);
        const ArrId* Gf = G.find(f);
        if (!Ff || !Gf)
            continue;
        const ArrId* lhs = D.find_composite(*Gf, theta[e.src]);
        const ArrId* rhs = D.find_composite(theta[e.tgt], *Ff);
        if (!lhs || !rhs || *lhs != *rhs)
            report.add("naturality", "square at " + f.str() + ": G(f) . theta[" + e.src.str() + "] = " +
                                         (lhs ? lhs->str() : "<undefined>") + " but theta[" + e.tgt.str() +
                                         "] . F(f) = " + (rhs ? rhs->str() : "<undefined>"));
    }
    return report;
}

NatTrans identity_nat(const FinFunctor& f)
{
    std::map<ObjId, ArrId> components;
    for (const auto& c : f.dom().objects())
        components.emplace(c, f.cod().identity(f(c)));
    return NatTrans(f, f, std::move(components));
}

ArrId arrow_component(const NatTrans& theta, const ArrId& f)
{
    const auto& C = theta.dom().dom();
    const auto& D = theta.dom().cod();
    const auto& e = C.endpoints(f);
    ArrId lhs = compose_arrows(D, theta.cod()(f), theta[e.src]);
    ArrId rhs = compose_arrows(D, theta[e.tgt], theta.dom()(f));
    if (lhs != rhs)
        throw Error(ErrorKind::Malformed, "arrow component at " + f.str() + " is ambiguous: " + lhs.str() + " vs " +
                                              rhs.str() + " (transformation not natural)");
    return lhs;
}

NatTrans vcomp_nat(const NatTrans& phi, const NatTrans& theta)
{
    if (!(theta.cod() == phi.dom()))
        throw Error(ErrorKind::BoundaryMismatch, "vcomp_nat: codomain of theta is not the domain of phi");
    const auto& D = theta.dom().cod();
    std::map<ObjId, ArrId> components;
    for (const auto& c : theta.dom().dom().objects())
        components.emplace(c, compose_arrows(D, phi[c], theta[c]));
    return NatTrans(theta.dom(), phi.cod(), std::move(components));
}

NatTrans hcomp_nat(const NatTrans& phi, const NatTrans& theta)
{
    if (!same_category(theta.dom().cod_ref(), phi.dom().dom_ref()))
        throw Error(ErrorKind::BoundaryMismatch, "hcomp_nat: theta lands in a category phi does not start from");
    std::map<ObjId, ArrId> components;
    for (const auto& c : theta.dom().dom().objects())
        components.emplace(c, arrow_component(phi, theta[c]));
    return NatTrans(compose_functors(phi.dom(), theta.dom()), compose_functors(phi.cod(), theta.cod()),
                    std::move(components));
}

std::optional<ArrId> inverse_arrow(const FinCategory& cat, const ArrId& f)
{
    const auto& e = cat.endpoints(f);
    for (const auto& u : cat.hom(e.tgt, e.src)) {
        const ArrId* uf = cat.find_composite(u, f);
        const ArrId* fu = cat.find_composite(f, u);
        if (uf && fu && *uf == cat.identity(e.src) && *fu == cat.identity(e.tgt))
            return u;
    }
    return std::nullopt;
}

}  // namespace opencat
