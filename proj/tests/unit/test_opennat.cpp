#include "doctest.h"

#include "opencat/harness/fixtures.hpp"
#include "opencat/harness/generate.hpp"
#include "opencat/opennat.hpp"
#include "opencat/reference.hpp"

using namespace opencat;
namespace fx = opencat::fixtures;

namespace {

Element atom(const char* s) { return Element::atom(s); }
const Element star = Element::star();

struct Chain {
    OpenNatTrans theta;
    OpenNatTrans phi;
};

// theta : F => G and phi : G => H on C -o D, from generated data.
std::vector<Chain> vertical_chains(std::uint64_t seeds)
{
    using namespace opencat::harness;
    std::vector<Chain> out;
    for (std::uint64_t seed = 0; seed < seeds; ++seed) {
        GenParams p;
        p.seed = seed;
        p.style = static_cast<CategoryStyle>(seed % 3);
        CategoryRef c = gen_category(p);
        p.seed += 500;
        CategoryRef d = gen_category(p);
        OpenFunctor F = gen_open_functor(p, c, d);
        for (const auto& theta : gen_open_nat(p, F, F, 4))
            for (const auto& phi : gen_open_nat(p, theta.cod(), theta.cod(), 4))
                out.push_back({theta, phi});
    }
    return out;
}

}  // namespace

TEST_CASE("identity transformation of OF2")
{
    OpenNatTrans id = identity_open_nat(fx::of2());
    CHECK(validate_open_nat(id).ok());
    CHECK(id.beta_at(ObjId("b"), atom("x2")) == ArrId("id_a"));
    CHECK(id.alpha().apply(ObjId("b"), atom("x1")) == atom("x1"));
}

TEST_CASE("wrong parallel component breaks naturality")
{
    Report r = validate_open_nat(fx::broken::fork_naturality());
    CHECK(r.has("naturality"));
}

TEST_CASE("swap and collapse fixtures")
{
    CHECK(validate_open_functor(fx::doubled()).ok());
    CHECK(validate_open_nat(fx::swap()).ok());
    CHECK(validate_open_nat(fx::collapse_into_doubled()).ok());
    OpenNatTrans twice = vcomp_open(fx::swap(), fx::swap());
    CHECK(open_nat_equal(twice, identity_open_nat(fx::doubled())));
}

TEST_CASE("vertical composition formula")
{
    OpenNatTrans c = vcomp_open(fx::swap(), fx::collapse_into_doubled());
    CHECK(validate_open_nat(c).ok());
    CHECK(c.alpha().apply(ObjId("b"), atom("x1")) == star);
    CHECK(c.beta_at(ObjId("b"), atom("x2")) == ArrId("id_b"));
    CHECK_THROWS_AS(vcomp_open(fx::collapse_into_doubled(), fx::swap()), Error);
}

TEST_CASE("horizontal composition with an identity")
{
    OpenNatTrans id = identity_open_nat(identity_open_functor(fx::fork()));
    OpenNatTrans h = hcomp_open(id, fx::swap());
    CHECK(validate_open_nat(h).ok());
    CHECK(h.alpha().apply(ObjId("b"), Element::pair(atom("x1"), star)) == Element::pair(atom("x2"), star));
    CHECK(h.alpha().apply(ObjId("a"), Element::pair(atom("x0"), star)) == Element::pair(atom("x0"), star));
    CHECK(h.beta_at(ObjId("b"), Element::pair(atom("x1"), star)) == ArrId("id_b"));
    CHECK_THROWS_AS(hcomp_open(fx::swap(), fx::swap()), Error);
}

TEST_CASE("component formulas agree with whiskering on generated transformations")
{
    auto chains = vertical_chains(30);
    CHECK(chains.size() >= 30);
    for (const auto& [theta, phi] : chains) {
        OpenNatTrans v = vcomp_open(phi, theta);
        REQUIRE(validate_open_nat(v).ok());
        CHECK(v.beta() == reference::vcomp_beta_by_whiskering(phi, theta));
    }
    using namespace opencat::harness;
    std::size_t checked = 0;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        GenParams p;
        p.seed = seed;
        p.style = static_cast<CategoryStyle>((seed + 1) % 3);
        CategoryRef c = gen_category(p);
        p.seed += 100;
        CategoryRef d = gen_category(p);
        p.seed += 100;
        CategoryRef e = gen_category(p);
        OpenFunctor F = gen_open_functor(p, c, d);
        p.seed += 100;
        OpenFunctor G = gen_open_functor(p, d, e);
        for (const auto& theta : gen_open_nat(p, F, F, 3)) {
            for (const auto& phi : gen_open_nat(p, G, G, 3)) {
                OpenNatTrans h = hcomp_open(phi, theta);
                REQUIRE(validate_open_nat(h).ok());
                CHECK(h.beta() == reference::hcomp_beta_by_whiskering(phi, theta, h));
                ++checked;
            }
        }
    }
    CHECK(checked >= 30);
}

TEST_CASE("differences are pinpointed")
{
    OpenNatTrans a = identity_open_nat(fx::doubled());
    OpenNatTrans b = fx::swap();
    auto m = open_nat_difference(a, b);
    REQUIRE(m);
    CHECK(m->where.find("alpha[b]") == 0);
    CHECK_FALSE(open_nat_difference(a, a));
}

TEST_CASE("invertibility")
{
    OpenNatTrans id = identity_open_nat(fx::of2());
    auto inv = is_invertible_open_nat(id);
    REQUIRE(inv);
    CHECK(open_nat_equal(*inv, id));

    auto swap_inv = is_invertible_open_nat(fx::swap());
    REQUIRE(swap_inv);
    CHECK(open_nat_equal(*swap_inv, fx::swap()));

    CHECK_FALSE(is_invertible_open_nat(fx::collapse_into_doubled()));
}
