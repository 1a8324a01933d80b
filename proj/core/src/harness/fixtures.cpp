#include "opencat/harness/fixtures.hpp"

namespace opencat::fixtures {

namespace {

Element atom(const char* label) { return Element::atom(label); }

FinFunctor cat2_into_fork()
{
    return FinFunctor(cat2(), fork(), {{ObjId("a"), ObjId("a")}, {ObjId("b"), ObjId("b")}},
                      {{ArrId("id_a"), ArrId("id_a")}, {ArrId("id_b"), ArrId("id_b")}, {ArrId("f"), ArrId("f")}});
}

Presheaf doubled_alpha()
{
    return Presheaf(cat2(), {{ObjId("a"), {atom("x0")}}, {ObjId("b"), {atom("x1"), atom("x2")}}},
                    {{ArrId("id_a"), {{atom("x0"), atom("x0")}}},
                     {ArrId("id_b"), {{atom("x1"), atom("x1")}, {atom("x2"), atom("x2")}}},
                     {ArrId("f"), {{atom("x1"), atom("x0")}, {atom("x2"), atom("x0")}}}});
}

}  // namespace

CategoryRef cat2()
{
    static const CategoryRef c = FinCategory::Builder()
                                     .object(ObjId("a"), ArrId("id_a"))
                                     .object(ObjId("b"), ArrId("id_b"))
                                     .arrow(ArrId("f"), ObjId("a"), ObjId("b"))
                                     .build_ref();
    return c;
}

CategoryRef dag3()
{
    static const CategoryRef c = FinCategory::Builder()
                                     .object(ObjId("a"), ArrId("id_a"))
                                     .object(ObjId("b"), ArrId("id_b"))
                                     .object(ObjId("c"), ArrId("id_c"))
                                     .arrow(ArrId("f"), ObjId("a"), ObjId("b"))
                                     .arrow(ArrId("g"), ObjId("b"), ObjId("c"))
                                     .arrow(ArrId("gf"), ObjId("a"), ObjId("c"))
                                     .compose(ArrId("g"), ArrId("f"), ArrId("gf"))
                                     .build_ref();
    return c;
}

CategoryRef fork()
{
    static const CategoryRef c = FinCategory::Builder()
                                     .object(ObjId("a"), ArrId("id_a"))
                                     .object(ObjId("b"), ArrId("id_b"))
                                     .arrow(ArrId("f"), ObjId("a"), ObjId("b"))
                                     .arrow(ArrId("g"), ObjId("a"), ObjId("b"))
                                     .arrow(ArrId("e"), ObjId("b"), ObjId("b"))
                                     .compose(ArrId("e"), ArrId("e"), ArrId("e"))
                                     .compose(ArrId("e"), ArrId("f"), ArrId("g"))
                                     .compose(ArrId("e"), ArrId("g"), ArrId("g"))
                                     .build_ref();
    return c;
}

Presheaf p2()
{
    return Presheaf(cat2(), {{ObjId("a"), {atom("u")}}, {ObjId("b"), {atom("v"), atom("w")}}},
                    {{ArrId("id_a"), {{atom("u"), atom("u")}}},
                     {ArrId("id_b"), {{atom("v"), atom("v")}, {atom("w"), atom("w")}}},
                     {ArrId("f"), {{atom("v"), atom("u")}, {atom("w"), atom("u")}}}});
}

PresheafMorphism p2_collapse()
{
    Presheaf small(cat2(), {{ObjId("a"), {atom("u")}}, {ObjId("b"), {atom("v")}}},
                   {{ArrId("id_a"), {{atom("u"), atom("u")}}},
                    {ArrId("id_b"), {{atom("v"), atom("v")}}},
                    {ArrId("f"), {{atom("v"), atom("u")}}}});
    return PresheafMorphism(small, p2(),
                            {{ObjId("a"), {{atom("u"), atom("u")}}},
                             {ObjId("b"), {{atom("v"), atom("v")}, {atom("w"), atom("v")}}}});
}

OpenFunctor of2()
{
    Presheaf alpha(cat2(), {{ObjId("a"), {atom("x0")}}, {ObjId("b"), {atom("x1"), atom("x2")}}},
                   {{ArrId("id_a"), {{atom("x0"), atom("x0")}}},
                    {ArrId("id_b"), {{atom("x1"), atom("x1")}, {atom("x2"), atom("x2")}}},
                    {ArrId("f"), {{atom("x1"), atom("x0")}, {atom("x2"), atom("x0")}}}});
    return make_open_functor(alpha, cat2(),
                             {{ObjId("(a|x0)"), ObjId("a")}, {ObjId("(b|x1)"), ObjId("b")}, {ObjId("(b|x2)"), ObjId("a")}},
                             {{ArrId("(id_a|x0)"), ArrId("id_a")},
                              {ArrId("(id_b|x1)"), ArrId("id_b")},
                              {ArrId("(id_b|x2)"), ArrId("id_a")},
                              {ArrId("(f|x1)"), ArrId("f")},
                              {ArrId("(f|x2)"), ArrId("id_a")}});
}

OpenFunctor doubled()
{
    return make_open_functor(doubled_alpha(), fork(),
                             {{ObjId("(a|x0)"), ObjId("a")}, {ObjId("(b|x1)"), ObjId("b")}, {ObjId("(b|x2)"), ObjId("b")}},
                             {{ArrId("(id_a|x0)"), ArrId("id_a")},
                              {ArrId("(id_b|x1)"), ArrId("id_b")},
                              {ArrId("(id_b|x2)"), ArrId("id_b")},
                              {ArrId("(f|x1)"), ArrId("f")},
                              {ArrId("(f|x2)"), ArrId("f")}});
}

OpenNatTrans swap()
{
    OpenFunctor d = doubled();
    PresheafMorphism alpha(d.alpha(), d.alpha(),
                           {{ObjId("a"), {{atom("x0"), atom("x0")}}},
                            {ObjId("b"), {{atom("x1"), atom("x2")}, {atom("x2"), atom("x1")}}}});
    return OpenNatTrans(d, d, alpha,
                        {{ObjId("(a|x0)"), ArrId("id_a")}, {ObjId("(b|x1)"), ArrId("id_b")}, {ObjId("(b|x2)"), ArrId("id_b")}});
}

OpenNatTrans collapse_into_doubled()
{
    OpenFunctor f = from_classical(cat2_into_fork());
    OpenFunctor d = doubled();
    const Element star = Element::star();
    PresheafMorphism alpha(f.alpha(), d.alpha(),
                           {{ObjId("a"), {{atom("x0"), star}}}, {ObjId("b"), {{atom("x1"), star}, {atom("x2"), star}}}});
    return OpenNatTrans(f, d, alpha,
                        {{ObjId("(a|x0)"), ArrId("id_a")}, {ObjId("(b|x1)"), ArrId("id_b")}, {ObjId("(b|x2)"), ArrId("id_b")}});
}

namespace broken {

CategoryRef cat2_right_identity()
{
    return FinCategory::Builder()
        .object(ObjId("a"), ArrId("id_a"))
        .object(ObjId("b"), ArrId("id_b"))
        .arrow(ArrId("f"), ObjId("a"), ObjId("b"))
        .compose(ArrId("f"), ArrId("id_a"), ArrId("id_a"))
        .build_ref();
}

FinFunctor dag3_composition()
{
    std::map<ArrId, ArrId> on_arr;
    for (const auto& f : dag3()->arrows())
        on_arr.emplace(f, f);
    on_arr[ArrId("gf")] = ArrId("f");
    return FinFunctor(dag3(), dag3(), identity_functor(dag3()).on_objects(), std::move(on_arr));
}

Presheaf p2_identity_action()
{
    return Presheaf(cat2(), {{ObjId("a"), {atom("u")}}, {ObjId("b"), {atom("v"), atom("w")}}},
                    {{ArrId("id_a"), {{atom("u"), atom("u")}}},
                     {ArrId("id_b"), {{atom("v"), atom("w")}, {atom("w"), atom("v")}}},
                     {ArrId("f"), {{atom("v"), atom("u")}, {atom("w"), atom("u")}}}});
}

OpenFunctor of2_endpoint()
{
    OpenFunctor good = of2();
    std::map<ArrId, ArrId> on_arr = good.beta().on_arrows();
    on_arr[ArrId("(f|x2)")] = ArrId("f");
    return OpenFunctor(good.alpha(), FinFunctor(good.elements(), good.cod_ref(), good.beta().on_objects(), on_arr));
}

OpenNatTrans fork_naturality()
{
    OpenFunctor f = from_classical(cat2_into_fork());
    OpenNatTrans id = identity_open_nat(f);
    std::map<ObjId, ArrId> beta = id.beta().components();
    beta[ObjId("(b|*)")] = ArrId("e");
    return OpenNatTrans(f, f, id.alpha(), std::move(beta));
}

}  // namespace broken

}  // namespace opencat::fixtures
