#include "opencat/opennat.hpp"

#include <ostream>

#ifdef OPENCAT_CROSSCHECK
#include "opencat/reference.hpp"
#endif

namespace opencat {

namespace {

NatTrans make_beta(const OpenFunctor& dom, const OpenFunctor& cod, const PresheafMorphism& alpha,
                   std::map<ObjId, ArrId> components)
{
    FinFunctor pullback = elements_functor(alpha, cod.elements(), dom.elements());
    return NatTrans(compose_functors(dom.beta(), pullback), cod.beta(), std::move(components));
}

#ifdef OPENCAT_CROSSCHECK
void crosscheck(const char* what, const NatTrans& fast, const NatTrans& slow)
{
    if (!(fast == slow))
        throw Error(ErrorKind::Malformed, std::string(what) + ": component formula disagrees with whiskering");
}
#endif

}  // namespace

OpenNatTrans::OpenNatTrans(OpenFunctor dom, OpenFunctor cod, PresheafMorphism alpha,
                           std::map<ObjId, ArrId> beta_components)
{
    NatTrans beta = make_beta(dom, cod, alpha, std::move(beta_components));
    data_ = std::make_shared<const Data>(Data{std::move(dom), std::move(cod), std::move(alpha), std::move(beta)});
}

Report validate_open_nat(const OpenNatTrans& theta)
{
    Report report;
    const auto& F = theta.dom();
    const auto& G = theta.cod();
    Report fr = validate_open_functor(F);
    Report gr = validate_open_functor(G);
    report.merge(fr, "dom");
    report.merge(gr, "cod");
    if (!fr.ok() || !gr.ok())
        return report;
    if (!same_category(F.dom_ref(), G.dom_ref()) || !same_category(F.cod_ref(), G.cod_ref())) {
        report.add("open-nat-boundary", "open functors are not parallel");
        return report;
    }
    if (!(theta.alpha().dom() == F.alpha()) || !(theta.alpha().cod() == G.alpha())) {
        report.add("open-nat-boundary", "alpha does not run from F_alpha to G_alpha");
        return report;
    }
    Report ar = validate_presheaf_morphism(theta.alpha());
    report.merge(ar, "alpha");
    if (!ar.ok())
        return report;
    report.merge(validate_functor(theta.beta().dom()), "beta domain");
    report.merge(validate_nat(theta.beta()), "beta");
    return report;
}

OpenNatTrans identity_open_nat(const OpenFunctor& f)
{
    std::map<ObjId, ArrId> components;
    const auto& D = f.cod();
    for (const auto& obj : f.elements()->objects())
        components.emplace(obj, D.identity(f.beta()(obj)));
    return OpenNatTrans(f, f, identity_presheaf_morphism(f.alpha()), std::move(components));
}

OpenNatTrans vcomp_open(const OpenNatTrans& phi, const OpenNatTrans& theta)
{
    if (!(theta.cod() == phi.dom()))
        throw Error(ErrorKind::BoundaryMismatch, "vcomp_open: codomain of theta is not the domain of phi");
    const auto& H = phi.cod();
    const auto& C = H.dom();
    const auto& D = H.cod();
    std::map<ObjId, ArrId> components;
    for (const auto& c : C.objects()) {
        for (const auto& z : H.alpha().fiber(c)) {
            const Element& y = phi.alpha().apply(c, z);
            components.emplace(element_object(c, z), compose_arrows(D, phi.beta_at(c, z), theta.beta_at(c, y)));
        }
    }
    OpenNatTrans result(theta.dom(), H, vcomp_presheaf_morphism(phi.alpha(), theta.alpha()), std::move(components));
#ifdef OPENCAT_CROSSCHECK
    crosscheck("vcomp_open", result.beta(), reference::vcomp_beta_by_whiskering(phi, theta));
#endif
    return result;
}

OpenNatTrans hcomp_open(const OpenNatTrans& phi, const OpenNatTrans& theta, const ComposeOptions& options)
{
    if (!same_category(theta.dom().cod_ref(), phi.dom().dom_ref()))
        throw Error(ErrorKind::BoundaryMismatch, "hcomp_open: theta lands in a category phi does not start from");
    OpenFunctor dom = compose_open(phi.dom(), theta.dom(), options);
    OpenFunctor cod = compose_open(phi.cod(), theta.cod(), options);

    const auto& C = theta.dom().dom();
    std::map<ObjId, ElementMap> alpha_components;
    std::map<ObjId, ArrId> beta_components;
    std::map<ArrId, ElementMap> phi_alpha_at;  // phi_alpha[h]^po, memoized per arrow h of D
    for (const auto& c : C.objects()) {
        auto& m = alpha_components[c];
        for (const auto& xy : cod.alpha().fiber(c)) {
            const Element& x2 = xy.first();
            const Element& y2 = xy.second();
            const ArrId& h = theta.beta_at(c, x2);
            auto it = phi_alpha_at.find(h);
            if (it == phi_alpha_at.end())
                it = phi_alpha_at.emplace(h, arrow_component_po(phi.alpha(), h)).first;
            auto y = it->second.find(y2);
            if (y == it->second.end())
                throw Error(ErrorKind::Malformed, "hcomp_open: phi_alpha arrow component undefined on " + y2.encode());
            m.emplace(xy, Element::pair(theta.alpha().apply(c, x2), y->second));
            beta_components.emplace(element_object(c, xy), arrow_component(phi.beta(), element_arrow(h, y2)));
        }
    }
    PresheafMorphism alpha(dom.alpha(), cod.alpha(), std::move(alpha_components));
    OpenNatTrans result(std::move(dom), std::move(cod), std::move(alpha), std::move(beta_components));
#ifdef OPENCAT_CROSSCHECK
    crosscheck("hcomp_open", result.beta(), reference::hcomp_beta_by_whiskering(phi, theta, result));
#endif
    return result;
}

std::ostream& operator<<(std::ostream& os, const Mismatch& m)
{
    return os << m.where << ": " << m.left << " vs " << m.right;
}

std::optional<Mismatch> open_nat_difference(const OpenNatTrans& a, const OpenNatTrans& b)
{
    if (!(a.dom() == b.dom()))
        return Mismatch{"dom", "open functor", "a different open functor"};
    if (!(a.cod() == b.cod()))
        return Mismatch{"cod", "open functor", "a different open functor"};
    const auto& G = a.cod();
    for (const auto& c : G.dom().objects()) {
        const ElementMap* ma = a.alpha().component(c);
        const ElementMap* mb = b.alpha().component(c);
        for (const auto& y : G.alpha().fiber(c)) {
            const Element* ya = nullptr;
            const Element* yb = nullptr;
            if (ma)
                if (auto it = ma->find(y); it != ma->end())
                    ya = &it->second;
            if (mb)
                if (auto it = mb->find(y); it != mb->end())
                    yb = &it->second;
            if (!ya || !yb || *ya != *yb)
                return Mismatch{"alpha[" + c.str() + "]^po(" + y.encode() + ")", ya ? ya->encode() : "<undefined>",
                                yb ? yb->encode() : "<undefined>"};
        }
    }
    for (const auto& obj : G.elements()->objects()) {
        const ArrId* pa = a.beta().find(obj);
        const ArrId* pb = b.beta().find(obj);
        if (!pa || !pb || *pa != *pb)
            return Mismatch{"beta[" + obj.str() + "]", pa ? pa->str() : "<undefined>", pb ? pb->str() : "<undefined>"};
    }
    return std::nullopt;
}

bool open_nat_equal(const OpenNatTrans& a, const OpenNatTrans& b) { return !open_nat_difference(a, b); }

std::optional<OpenNatTrans> is_invertible_open_nat(const OpenNatTrans& theta)
{
    const auto& F = theta.dom();
    const auto& G = theta.cod();
    const auto& C = F.dom();
    const auto& D = F.cod();
    std::map<ObjId, ElementMap> inverse_alpha;
    for (const auto& c : C.objects()) {
        const ElementMap* m = theta.alpha().component(c);
        if (!m || F.alpha().fiber_size(c) != G.alpha().fiber_size(c))
            return std::nullopt;
        auto& inv = inverse_alpha[c];
        for (const auto& y : G.alpha().fiber(c)) {
            auto it = m->find(y);
            if (it == m->end() || !inv.emplace(it->second, y).second)
                return std::nullopt;
        }
    }
    std::map<ObjId, ArrId> inverse_beta;
    for (const auto& c : C.objects()) {
        for (const auto& x : F.alpha().fiber(c)) {
            const Element& y = inverse_alpha.at(c).at(x);
            std::optional<ArrId> u = inverse_arrow(D, theta.beta_at(c, y));
            if (!u)
                return std::nullopt;
            inverse_beta.emplace(element_object(c, x), *u);
        }
    }
    OpenNatTrans inverse(G, F, PresheafMorphism(G.alpha(), F.alpha(), std::move(inverse_alpha)),
                         std::move(inverse_beta));
    try {
        if (!open_nat_equal(vcomp_open(inverse, theta), identity_open_nat(F)) ||
            !open_nat_equal(vcomp_open(theta, inverse), identity_open_nat(G)))
            return std::nullopt;
    } catch (const Error&) {
        return std::nullopt;
    }
    return inverse;
}

}  // namespace opencat
