#include "opencat/reference.hpp"

namespace opencat::reference {

NatTrans vcomp_beta_by_whiskering(const OpenNatTrans& phi, const OpenNatTrans& theta)
{
    FinFunctor pull = elements_functor(phi.alpha(), phi.cod().elements(), phi.dom().elements());
    NatTrans whiskered = hcomp_nat(theta.beta(), identity_nat(pull));
    return vcomp_nat(phi.beta(), whiskered);
}

NatTrans hcomp_beta_by_whiskering(const OpenNatTrans& phi, const OpenNatTrans& theta, const OpenNatTrans& composite)
{
    const OpenFunctor& F = theta.dom();
    const OpenFunctor& F2 = theta.cod();
    const OpenFunctor& G2 = phi.cod();
    const OpenFunctor& top = composite.cod();  // G' o F'
    const auto& C = F.dom();

    std::map<ObjId, ObjId> k_obj, k2_obj;
    std::map<ArrId, ArrId> k_arr, k2_arr;
    std::map<ObjId, ArrId> components;
    for (const auto& c : C.objects()) {
        for (const auto& xy : top.alpha().fiber(c)) {
            const Element& x2 = xy.first();
            const Element& y2 = xy.second();
            const Element& x = theta.alpha().apply(c, x2);
            const ArrId& h = theta.beta_at(c, x2);
            ObjId obj = element_object(c, xy);
            k2_obj.emplace(obj, element_object(F2.beta()(element_object(c, x2)), y2));
            k_obj.emplace(obj, element_object(F.beta()(element_object(c, x)), G2.alpha().act(h, y2)));
            components.emplace(obj, element_arrow(h, y2));
        }
    }
    for (const auto& a : C.arrows()) {
        const ObjId& tgt = C.tgt(a);
        for (const auto& xy : top.alpha().fiber(tgt)) {
            const Element& x2 = xy.first();
            const Element& y2 = xy.second();
            const Element& x = theta.alpha().apply(tgt, x2);
            const ArrId& h = theta.beta_at(tgt, x2);
            ArrId arr = element_arrow(a, xy);
            k2_arr.emplace(arr, element_arrow(F2.beta()(element_arrow(a, x2)), y2));
            k_arr.emplace(arr, element_arrow(F.beta()(element_arrow(a, x)), G2.alpha().act(h, y2)));
        }
    }
    FinFunctor k(top.elements(), G2.elements(), std::move(k_obj), std::move(k_arr));
    FinFunctor k2(top.elements(), G2.elements(), std::move(k2_obj), std::move(k2_arr));
    NatTrans whisker(std::move(k), std::move(k2), std::move(components));
    return hcomp_nat(phi.beta(), whisker);
}

}  // namespace opencat::reference
