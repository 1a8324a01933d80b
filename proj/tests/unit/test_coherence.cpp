#include "doctest.h"

#include <sstream>

#include "opencat/coherence.hpp"
#include "opencat/harness/fixtures.hpp"

using namespace opencat;
namespace fx = opencat::fixtures;

namespace {

Element atom(const char* s) { return Element::atom(s); }
Element pair(const Element& x, const Element& y) { return Element::pair(x, y); }
const Element star = Element::star();

// Replaces the beta component of t at (b, element) by `arrow` when that
// component exists and is parallel to it.
OpenNatTrans mutate_beta(const OpenNatTrans& t, const Element& element, const ArrId& arrow)
{
    std::map<ObjId, ArrId> beta = t.beta().components();
    const FinCategory& D = t.cod().cod();
    auto it = beta.find(element_object(ObjId("b"), element));
    if (it != beta.end() && D.has_arrow(arrow) && D.endpoints(arrow) == D.endpoints(it->second))
        it->second = arrow;
    return OpenNatTrans(t.dom(), t.cod(), t.alpha(), std::move(beta));
}

// const_a => Id on Cat2 with components id_a and f, as an open transformation.
OpenNatTrans const_to_identity()
{
    auto c = fx::cat2();
    OpenFunctor from = from_classical(constant_functor(c, c, ObjId("a")));
    OpenFunctor to = identity_open_functor(c);
    return OpenNatTrans(from, to, identity_presheaf_morphism(to.alpha()),
                        {{ObjId("(a|*)"), ArrId("id_a")}, {ObjId("(b|*)"), ArrId("f")}});
}

}  // namespace

TEST_CASE("unitors and associator on OF2")
{
    OpenFunctor f = fx::of2();
    OpenNatTrans l = left_unitor(f);
    OpenNatTrans r = right_unitor(f);
    OpenNatTrans a = associator(f, f, f);
    for (const auto* t : {&l, &r, &a}) {
        CHECK(validate_open_nat(*t).ok());
        CHECK(is_invertible_open_nat(*t));
    }
    CHECK(l.alpha().apply(ObjId("b"), atom("x2")) == pair(atom("x2"), star));
    CHECK(r.alpha().apply(ObjId("b"), atom("x2")) == pair(star, atom("x2")));
    CHECK(l.beta_at(ObjId("b"), atom("x2")) == ArrId("id_a"));
    Element nested = pair(atom("x1"), pair(atom("x2"), atom("x0")));
    CHECK(a.alpha().apply(ObjId("b"), nested) == pair(pair(atom("x1"), atom("x2")), atom("x0")));

    auto inv = is_invertible_open_nat(l);
    REQUIRE(inv);
    CHECK(inv->alpha().apply(ObjId("b"), pair(atom("x1"), star)) == atom("x1"));
}

TEST_CASE("unitor naturality")
{
    auto [l, r] = check_unitor_naturality(identity_open_nat(fx::of2()));
    CHECK(l.holds);
    CHECK(r.holds);
    auto [l2, r2] = check_unitor_naturality(left_unitor(fx::of2()));
    CHECK(l2.holds);
    CHECK(r2.holds);
    auto [l3, r3] = check_unitor_naturality(fx::swap());
    CHECK(l3.holds);
    CHECK(r3.holds);
}

TEST_CASE("mutated unitor is caught")
{
    Structure s;
    s.left_unitor = [](const OpenFunctor& f, const ComposeOptions& o) {
        return mutate_beta(left_unitor(f, o), atom("x1"), ArrId("e"));
    };
    s.right_unitor = [](const OpenFunctor& f, const ComposeOptions& o) {
        return mutate_beta(right_unitor(f, o), atom("x1"), ArrId("e"));
    };
    auto [l, r] = check_unitor_naturality(fx::swap(), s);
    CHECK_FALSE(l.holds);
    CHECK_FALSE(r.holds);
    REQUIRE(l.mismatch);
    CHECK(l.mismatch->where.find("beta[(b|") == 0);
}

TEST_CASE("associator naturality")
{
    OpenFunctor f = fx::of2();
    OpenNatTrans id = identity_open_nat(f);
    CHECK(check_associator_naturality(id, id, id).holds);
    OpenNatTrans l = left_unitor(f);
    OpenNatTrans r = right_unitor(f);
    CHECK(check_associator_naturality(l, r, l).holds);
    OpenNatTrans swap = fx::swap();
    OpenNatTrans fork_id = identity_open_nat(identity_open_functor(fx::fork()));
    CHECK(check_associator_naturality(swap, fork_id, fork_id).holds);

    OpenNatTrans theta = const_to_identity();
    REQUIRE(validate_open_nat(theta).ok());
    CHECK(check_associator_naturality(theta, theta, theta).holds);
    LawReport bad = check_associator_naturality(theta, fx::broken::fork_naturality(), fork_id);
    CHECK_FALSE(bad.holds);
    REQUIRE(bad.mismatch);
}

TEST_CASE("pentagon and triangle on fixtures")
{
    OpenFunctor id = identity_open_functor(fx::cat2());
    LawReport trivial = check_pentagon(id, id, id, id);
    CHECK(trivial.holds);
    OpenFunctor f = fx::of2();
    CHECK(check_pentagon(f, f, f, f).holds);
    CHECK(check_pentagon(f, id, f, id).holds);
    CHECK(check_triangle(id, id).holds);
    CHECK(check_triangle(f, f).holds);
    OpenFunctor d = fx::doubled();
    OpenFunctor fork_id = identity_open_functor(fx::fork());
    CHECK(check_triangle(d, fork_id).holds);
    CHECK(check_pentagon(f, d, fork_id, fork_id).holds);
}

TEST_CASE("mutated right unitor breaks the triangle")
{
    Structure s;
    s.right_unitor = [](const OpenFunctor& f, const ComposeOptions& o) {
        return mutate_beta(right_unitor(f, o), star, ArrId("e"));
    };
    OpenFunctor g = identity_open_functor(fx::fork());
    LawReport r = check_triangle(fx::doubled(), g, s);
    CHECK_FALSE(r.holds);
    REQUIRE(r.mismatch);
    CHECK(r.mismatch->where.find("beta") == 0);
}

TEST_CASE("mutated associator breaks the pentagon")
{
    Structure s;
    s.associator = [](const OpenFunctor& f, const OpenFunctor& g, const OpenFunctor& h, const ComposeOptions& o) {
        OpenNatTrans a = associator(f, g, h, o);
        // swap the first two coordinates on one element when possible
        std::map<ObjId, ElementMap> alpha = a.alpha().components();
        auto& m = alpha[ObjId("b")];
        if (m.size() >= 2) {
            auto first = m.begin();
            auto second = std::next(first);
            std::swap(first->second, second->second);
        }
        return OpenNatTrans(a.dom(), a.cod(), PresheafMorphism(a.alpha().dom(), a.alpha().cod(), alpha),
                            a.beta().components());
    };
    OpenFunctor f = fx::of2();
    CHECK_FALSE(check_pentagon(f, f, f, f, s).holds);
}

TEST_CASE("interchange and identity preservation on fixtures")
{
    OpenNatTrans swap = fx::swap();
    OpenNatTrans fork_id = identity_open_nat(identity_open_functor(fx::fork()));
    CHECK(check_interchange(swap, swap, fork_id, fork_id).holds);
    OpenNatTrans c = fx::collapse_into_doubled();
    CHECK(check_interchange(c, swap, fork_id, fork_id).holds);
    CHECK(check_identity_preservation(fx::of2(), fx::of2()).holds);
    CHECK(check_identity_preservation(fx::doubled(), identity_open_functor(fx::fork())).holds);
}

TEST_CASE("hom-category laws")
{
    OpenNatTrans swap = fx::swap();
    OpenNatTrans c = fx::collapse_into_doubled();
    for (const auto& r : check_hom_category_laws(c, swap, swap))
        CHECK(r.holds);
    OpenNatTrans id = identity_open_nat(fx::of2());
    auto reports = check_hom_category_laws(id, id, id);
    CHECK(reports.size() == 3);
    for (const auto& r : reports)
        CHECK(r.holds);
}

TEST_CASE("mismatched boundaries propagate")
{
    OpenNatTrans swap = fx::swap();
    OpenNatTrans id = identity_open_nat(fx::of2());
    CHECK_THROWS_AS(check_interchange(swap, swap, id, id), Error);
}

TEST_CASE("law reports print verdict and location")
{
    LawReport r{"pentagon", "instance 3", false, Mismatch{"beta[(b|x1)]", "id_b", "e"}};
    std::ostringstream os;
    os << r;
    CHECK(os.str() == "pentagon [instance 3]: FAILS at beta[(b|x1)]: id_b vs e");
}
