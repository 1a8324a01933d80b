#include "doctest.h"

#include "opencat/harness/fixtures.hpp"
#include "opencat/harness/generate.hpp"
#include "opencat/openfun.hpp"

using namespace opencat;
namespace fx = opencat::fixtures;

namespace {

Element atom(const char* s) { return Element::atom(s); }
Element pair(const Element& x, const Element& y) { return Element::pair(x, y); }
const Element star = Element::star();

}  // namespace

TEST_CASE("identity open functor")
{
    OpenFunctor id = identity_open_functor(fx::cat2());
    CHECK(validate_open_functor(id).ok());
    CHECK(id.alpha().fiber_size(ObjId("b")) == 1);
    CHECK(id.alpha().fiber(ObjId("b"))[0].is_star());
    CHECK(apply_open(id, ObjId("b"), star) == ObjId("b"));
    CHECK(apply_open_arrow(id, ArrId("f"), star) == ArrId("f"));
    CHECK(id.beta().on_objects().size() == 2);
    CHECK(id.beta().on_arrows().size() == 3);

    OpenFunctor empty = identity_open_functor(FinCategory::Builder().build_ref());
    CHECK(validate_open_functor(empty).ok());
    CHECK(empty.beta().on_objects().empty());
}

TEST_CASE("from_classical")
{
    auto c = fx::cat2();
    CHECK(from_classical(identity_functor(c)) == identity_open_functor(c));
    OpenFunctor k = from_classical(constant_functor(c, c, ObjId("a")));
    CHECK(validate_open_functor(k).ok());
    CHECK(apply_open(k, ObjId("b"), star) == ObjId("a"));
    CHECK(apply_open_arrow(k, ArrId("f"), star) == ArrId("id_a"));
}

TEST_CASE("OF2 is valid and applies as tabulated")
{
    OpenFunctor f = fx::of2();
    CHECK(validate_open_functor(f).ok());
    CHECK(apply_open(f, ObjId("b"), atom("x2")) == ObjId("a"));
    CHECK(apply_open(f, ObjId("b"), atom("x1")) == ObjId("b"));
    CHECK(apply_open_arrow(f, ArrId("f"), atom("x2")) == ArrId("id_a"));
    try {
        apply_open(f, ObjId("b"), atom("x0"));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnknownElement);
    }
    try {
        apply_open(f, ObjId("z"), atom("x0"));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnknownObject);
    }
}

TEST_CASE("OF2 with a retargeted arrow fails endpoint preservation")
{
    Report r = validate_open_functor(fx::broken::of2_endpoint());
    CHECK(r.has("functor-endpoints"));
}

TEST_CASE("open functor whose beta starts elsewhere is rejected")
{
    OpenFunctor f = fx::of2();
    OpenFunctor mismatched(terminal_presheaf(fx::cat2()), f.beta());
    CHECK(validate_open_functor(mismatched).has("open-functor-boundary"));
}

TEST_CASE("identity after OF2")
{
    OpenFunctor g = compose_open(identity_open_functor(fx::cat2()), fx::of2());
    CHECK(validate_open_functor(g).ok());
    auto fiber = g.alpha().fiber(ObjId("b"));
    std::set<Element> members(fiber.begin(), fiber.end());
    CHECK(members == std::set<Element>{pair(atom("x1"), star), pair(atom("x2"), star)});
    CHECK(apply_open(g, ObjId("b"), pair(atom("x1"), star)) == ObjId("b"));
    CHECK(apply_open(g, ObjId("b"), pair(atom("x2"), star)) == ObjId("a"));
    CHECK(g.alpha().act(ArrId("f"), pair(atom("x2"), star)) == pair(atom("x0"), star));
    CHECK(apply_open_arrow(g, ArrId("f"), pair(atom("x2"), star)) == ArrId("id_a"));
}

TEST_CASE("composition is not strictly unital or associative")
{
    OpenFunctor f = fx::of2();
    OpenFunctor id = identity_open_functor(fx::cat2());
    CHECK_FALSE(compose_open(id, f) == f);
    CHECK_FALSE(compose_open(f, id) == f);
    OpenFunctor left = compose_open(compose_open(f, f), f);
    OpenFunctor right = compose_open(f, compose_open(f, f));
    CHECK_FALSE(left == right);
    // (H o G) o F pairs x with <y, z>; H o (G o F) pairs <x, y> with z.
    for (const auto& x : left.alpha().fiber(ObjId("b")))
        CHECK(x.second().is_pair());
    for (const auto& x : right.alpha().fiber(ObjId("b")))
        CHECK(x.first().is_pair());
    CHECK(left.alpha().fiber_size(ObjId("b")) == right.alpha().fiber_size(ObjId("b")));
}

TEST_CASE("composite of classical functors")
{
    auto c = fx::dag3();
    FinFunctor g = constant_functor(c, c, ObjId("c"));
    FinFunctor f = identity_functor(c);
    OpenFunctor composite = compose_open(from_classical(g), from_classical(f));
    FinFunctor classical = compose_functors(g, f);
    for (const auto& o : c->objects())
        CHECK(apply_open(composite, o, pair(star, star)) == classical(o));
    for (const auto& a : c->arrows())
        CHECK(apply_open_arrow(composite, a, pair(star, star)) == classical(a));
}

TEST_CASE("composites of generated open functors")
{
    using namespace opencat::harness;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        GenParams p;
        p.seed = seed;
        p.style = static_cast<CategoryStyle>(seed % 3);
        CategoryRef c = gen_category(p);
        p.seed = seed + 100;
        CategoryRef d = gen_category(p);
        p.seed = seed + 200;
        CategoryRef e = gen_category(p);
        OpenFunctor F = gen_open_functor(p, c, d);
        p.seed = seed + 300;
        OpenFunctor G = gen_open_functor(p, d, e);
        OpenFunctor GF = compose_open(G, F);
        REQUIRE(validate_open_functor(GF).ok());
        for (const auto& o : c->objects()) {
            std::size_t expected = 0;
            for (const auto& x : F.alpha().fiber(o))
                expected += G.alpha().fiber_size(apply_open(F, o, x));
            CHECK(GF.alpha().fiber_size(o) == expected);
            for (const auto& xy : GF.alpha().fiber(o))
                CHECK(apply_open(GF, o, xy) == apply_open(G, apply_open(F, o, xy.first()), xy.second()));
        }
        for (const auto& a : c->arrows())
            for (const auto& xy : GF.alpha().fiber(c->tgt(a)))
                CHECK(apply_open_arrow(GF, a, xy) ==
                      apply_open_arrow(G, apply_open_arrow(F, a, xy.first()), xy.second()));
        if (!same_category(e, c))
            CHECK_THROWS_AS(compose_open(F, G), Error);
    }
}

TEST_CASE("composition mismatch and size guard")
{
    OpenFunctor f = fx::of2();
    try {
        compose_open(identity_open_functor(fx::dag3()), f);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BoundaryMismatch);
    }
    ComposeOptions tight;
    tight.max_fiber = 2;
    try {
        compose_open(f, f, tight);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SizeLimit);
    }
    tight.max_fiber = 3;
    CHECK_NOTHROW(compose_open(f, f, tight));
}

TEST_CASE("composition cache")
{
    CompositionCache cache;
    ComposeOptions options;
    options.cache = &cache;
    OpenFunctor f = fx::of2();
    OpenFunctor a = compose_open(f, f, options);
    OpenFunctor b = compose_open(fx::of2(), fx::of2(), options);
    CHECK(cache.size() == 1);
    CHECK(cache.hits() == 1);
    CHECK(a == b);
    CHECK(a == compose_open(f, f));
}

TEST_CASE("content equality ignores fiber order")
{
    auto c = fx::cat2();
    Presheaf p(c, {{ObjId("a"), {atom("u")}}, {ObjId("b"), {atom("w"), atom("v")}}},
               fx::p2().actions());
    CHECK(p == fx::p2());
    OpenFunctor x = make_open_functor(p, c, {}, {});
    OpenFunctor y = make_open_functor(fx::p2(), c, {}, {});
    CHECK(x.content_hash() == y.content_hash());
    CHECK(x == y);
}
