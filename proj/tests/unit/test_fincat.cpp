#include "doctest.h"

#include "opencat/fincat.hpp"
#include "opencat/harness/fixtures.hpp"

using namespace opencat;
namespace fx = opencat::fixtures;

namespace {

CategoryRef single_object()
{
    return FinCategory::Builder().object(ObjId("x"), ArrId("id_x")).build_ref();
}

}  // namespace

TEST_CASE("walking arrow is a valid category")
{
    auto c = fx::cat2();
    CHECK(validate_category(*c).ok());
    CHECK(c->object_count() == 2);
    CHECK(c->arrow_count() == 3);
    CHECK(compose_arrows(*c, ArrId("id_b"), ArrId("f")) == ArrId("f"));
    CHECK(compose_arrows(*c, ArrId("f"), ArrId("id_a")) == ArrId("f"));
}

TEST_CASE("composing arrows that do not meet is an error")
{
    auto c = fx::cat2();
    try {
        compose_arrows(*c, ArrId("f"), ArrId("f"));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotComposable);
    }
    CHECK_THROWS_AS(compose_arrows(*c, ArrId("nope"), ArrId("f")), Error);
}

TEST_CASE("remapped right unit is reported")
{
    Report r = validate_category(*fx::broken::cat2_right_identity());
    CHECK_FALSE(r.ok());
    CHECK(r.has("right-identity"));
}

TEST_CASE("free category on a -> b -> c")
{
    auto c = fx::dag3();
    CHECK(validate_category(*c).ok());
    // Paths of the DAG: f, g and their concatenation, plus one identity per object.
    CHECK(c->arrow_count() == 6);
    CHECK(compose_arrows(*c, ArrId("g"), ArrId("f")) == ArrId("gf"));
    CHECK(c->hom(ObjId("a"), ObjId("c")).size() == 1);
    CHECK(c->hom(ObjId("c"), ObjId("a")).empty());
}

TEST_CASE("builder rejects malformed tables")
{
    CHECK_THROWS_AS(FinCategory::Builder().object(ObjId("a"), ArrId("i")).object(ObjId("a"), ArrId("j")).build(),
                    Error);
    CHECK_THROWS_AS(FinCategory::Builder().object(ObjId("a"), ArrId("i")).arrow(ArrId("f"), ObjId("a"), ObjId("z")).build(),
                    Error);
    CHECK_THROWS_AS(FinCategory::Builder()
                        .object(ObjId("a"), ArrId("i"))
                        .arrow(ArrId("i"), ObjId("a"), ObjId("a"))
                        .build(),
                    Error);
}

TEST_CASE("missing composite and broken associativity are reported")
{
    auto missing = FinCategory::Builder()
                       .object(ObjId("a"), ArrId("id_a"))
                       .arrow(ArrId("e"), ObjId("a"), ObjId("a"))
                       .build();
    CHECK(validate_category(missing).has("composition-missing"));

    auto bad = FinCategory::Builder()
                   .object(ObjId("a"), ArrId("id_a"))
                   .arrow(ArrId("s"), ObjId("a"), ObjId("a"))
                   .arrow(ArrId("t"), ObjId("a"), ObjId("a"))
                   .compose(ArrId("s"), ArrId("s"), ArrId("t"))
                   .compose(ArrId("s"), ArrId("t"), ArrId("s"))
                   .compose(ArrId("t"), ArrId("s"), ArrId("t"))
                   .compose(ArrId("t"), ArrId("t"), ArrId("t"))
                   .build();
    // (s . s) . s = t . s = t but s . (s . s) = s . t = s
    CHECK(validate_category(bad).has("associativity"));
}

TEST_CASE("empty category")
{
    FinCategory empty = FinCategory::Builder().build();
    CHECK(validate_category(empty).ok());
    CHECK(empty.object_count() == 0);
}

TEST_CASE("identity and constant functors")
{
    auto c = fx::cat2();
    CHECK(validate_functor(identity_functor(c)).ok());
    FinFunctor k = constant_functor(c, c, ObjId("a"));
    CHECK(validate_functor(k).ok());
    CHECK(k(ArrId("f")) == ArrId("id_a"));
    CHECK(k(ObjId("b")) == ObjId("a"));
}

TEST_CASE("functor sending gf to f breaks composition")
{
    Report r = validate_functor(fx::broken::dag3_composition());
    CHECK(r.has("functor-composition"));
}

TEST_CASE("functor composition is strictly unital and associative")
{
    auto c = fx::dag3();
    auto d = fx::cat2();
    // a, b -> a and c -> b: collapses f, sends g and gf to f.
    FinFunctor F(c, d, {{ObjId("a"), ObjId("a")}, {ObjId("b"), ObjId("a")}, {ObjId("c"), ObjId("b")}},
                 {{ArrId("id_a"), ArrId("id_a")},
                  {ArrId("id_b"), ArrId("id_a")},
                  {ArrId("id_c"), ArrId("id_b")},
                  {ArrId("f"), ArrId("id_a")},
                  {ArrId("g"), ArrId("f")},
                  {ArrId("gf"), ArrId("f")}});
    REQUIRE(validate_functor(F).ok());
    CHECK(compose_functors(identity_functor(d), F) == F);
    CHECK(compose_functors(F, identity_functor(c)) == F);
    FinFunctor G = constant_functor(d, c, ObjId("b"));
    FinFunctor H = identity_functor(c);
    CHECK(compose_functors(compose_functors(H, G), F) == compose_functors(H, compose_functors(G, F)));
    CHECK_THROWS_AS(compose_functors(F, F), Error);
}

TEST_CASE("natural transformations on the walking arrow")
{
    auto c = fx::cat2();
    FinFunctor id = identity_functor(c);
    FinFunctor ka = constant_functor(c, c, ObjId("a"));
    FinFunctor kb = constant_functor(c, c, ObjId("b"));
    // ka => id with components id_a, f
    NatTrans t(ka, id, {{ObjId("a"), ArrId("id_a")}, {ObjId("b"), ArrId("f")}});
    CHECK(validate_nat(t).ok());
    CHECK(arrow_component(t, ArrId("f")) == ArrId("f"));
    // id => kb with components f, id_b
    NatTrans u(id, kb, {{ObjId("a"), ArrId("f")}, {ObjId("b"), ArrId("id_b")}});
    CHECK(validate_nat(u).ok());
    NatTrans ut = vcomp_nat(u, t);
    CHECK(ut[ObjId("a")] == ArrId("f"));
    CHECK(ut[ObjId("b")] == ArrId("f"));
    CHECK(vcomp_nat(t, identity_nat(ka)) == t);
    CHECK(vcomp_nat(identity_nat(id), t) == t);

    NatTrans wrong(ka, id, {{ObjId("a"), ArrId("id_a")}, {ObjId("b"), ArrId("id_a")}});
    CHECK(validate_nat(wrong).has("component-endpoints"));
    NatTrans missing(ka, id, {{ObjId("a"), ArrId("id_a")}});
    CHECK(validate_nat(missing).has("nat-missing-component"));
}

TEST_CASE("horizontal composition and interchange of classical transformations")
{
    auto c = fx::cat2();
    FinFunctor id = identity_functor(c);
    FinFunctor ka = constant_functor(c, c, ObjId("a"));
    FinFunctor kb = constant_functor(c, c, ObjId("b"));
    NatTrans t(ka, id, {{ObjId("a"), ArrId("id_a")}, {ObjId("b"), ArrId("f")}});
    NatTrans u(id, kb, {{ObjId("a"), ArrId("f")}, {ObjId("b"), ArrId("id_b")}});
    // (u o t)[c] = u[t[c]] : ka(ka(c)) = a -> kb(id(c)) = b
    NatTrans h = hcomp_nat(u, t);
    CHECK(validate_nat(h).ok());
    CHECK(h[ObjId("a")] == ArrId("f"));
    CHECK(h[ObjId("b")] == ArrId("f"));
    CHECK(hcomp_nat(vcomp_nat(u, t), vcomp_nat(u, t)) ==
          vcomp_nat(hcomp_nat(u, u), hcomp_nat(t, t)));
}

TEST_CASE("inverse arrows")
{
    auto c = fx::cat2();
    CHECK(inverse_arrow(*c, ArrId("id_a")) == ArrId("id_a"));
    CHECK_FALSE(inverse_arrow(*c, ArrId("f")));
    auto one = single_object();
    CHECK(inverse_arrow(*one, ArrId("id_x")) == ArrId("id_x"));
}
