// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <array>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "opencat/coherence.hpp"
#include "opencat/harness/corpus.hpp"
#include "opencat/harness/fixtures.hpp"
#include "opencat/harness/generate.hpp"
#include "opencat/harness/serialize.hpp"

using namespace opencat;
using namespace opencat::harness;
namespace fx = opencat::fixtures;

namespace {

/// Collects failures of one criterion; only the first few are kept for display.
struct Tally {
    std::size_t checked = 0;
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what)
    {
        ++checked;
        if (!ok)
            failures.push_back(what);
    }
};

constexpr std::array styles = {CategoryStyle::dag_free, CategoryStyle::preorder, CategoryStyle::product};

GenParams params(std::uint64_t seed, CategoryStyle style = CategoryStyle::dag_free)
{
    GenParams p;
    p.seed = seed;
    p.style = style;
    return p;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Element atom(const char* s) { return Element::atom(s); }
Element pair(const Element& a, const Element& b) { return Element::pair(a, b); }

std::set<Element> fiber_set(const Presheaf& p, const char* c)
{
    auto f = p.fiber(ObjId(c));
    return {f.begin(), f.end()};
}

void corpus_law(Tally& t, Law law, std::size_t count, std::uint64_t seed)
{
    CorpusOptions o;
    o.seed = seed;
    o.count = count;
    o.laws = {law};
    o.jobs = 4;
    for (const auto& s : run_corpus(o)) {
        for (const auto& inst : s.instances) {
            std::ostringstream why;
            why << to_string(law) << " instance " << inst.index << " (seed " << inst.seed << ")";
            if (!inst.error.empty())
                why << ": " << inst.error;
            for (const auto& r : inst.reports)
                if (!r.holds)
                    why << ": " << r;
            t.expect(inst.holds(), why.str());
        }
    }
}

// 1
void validators(Tally& t)
{
    for (auto style : styles) {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            GenParams p = params(seed, style);
            std::string tag = std::string(to_string(style)) + " seed " + std::to_string(seed);
            CategoryRef c = gen_category(p);
            t.expect(validate_category(*c).ok(), "category " + tag);
            t.expect(validate_presheaf(gen_presheaf(p, c)).ok(), "presheaf " + tag);
            CategoryRef d = gen_category(params(derive_seed(seed, 77), style));
            OpenFunctor f = gen_open_functor(p, c, d);
            OpenFunctor g = gen_open_functor(params(derive_seed(seed, 78), style), c, d);
            t.expect(validate_open_functor(f).ok(), "open functor " + tag);
            for (const auto* pair : {&f, &g})
                for (const auto& theta : gen_open_nat(p, f, *pair))
                    t.expect(validate_open_nat(theta).ok(), "open nat " + tag);
        }
    }
    t.expect(validate_category(*fx::broken::cat2_right_identity()).has("right-identity"), "broken Cat2");
    t.expect(validate_functor(fx::broken::dag3_composition()).has("functor-composition"), "broken DAG functor");
    t.expect(validate_presheaf(fx::broken::p2_identity_action()).has("presheaf-identity"), "broken P2");
    t.expect(validate_open_functor(fx::broken::of2_endpoint()).has("functor-endpoints"), "broken OF2");
    t.expect(validate_open_nat(fx::broken::fork_naturality()).has("naturality"), "broken open nat");
}

// Pointwise: (int theta)^po sends (c|y) to (c|theta[c]^po(y)) and (f|y') to (f|theta[c']^po(y')).
bool matches_definition(const FinFunctor& ef, const PresheafMorphism& theta)
{
    const FinCategory& base = theta.cod().base();
    for (const auto& c : base.objects())
        for (const auto& y : theta.cod().fiber(c))
            if (ef(element_object(c, y)) != element_object(c, theta.apply(c, y)))
                return false;
    for (const auto& f : base.arrows())
        for (const auto& y : theta.cod().fiber(base.tgt(f)))
            if (ef(element_arrow(f, y)) != element_arrow(f, theta.apply(base.tgt(f), y)))
                return false;
    return true;
}

// 2
void elements_functoriality(Tally& t)
{
    std::size_t pairs = 0;
    for (std::uint64_t seed = 0; pairs < 150 && seed < 500; ++seed) {
        GenParams p = params(seed, styles[seed % 3]);
        CategoryRef c = gen_category(p);
        Presheaf P = gen_presheaf(p, c);
        Presheaf Q = gen_presheaf(params(derive_seed(seed, 1), p.style), c);
        CategoryRef el = category_of_elements_ref(P);
        t.expect(elements_functor(identity_presheaf_morphism(P), el, el) == identity_functor(el),
                 "identity, seed " + std::to_string(seed));
        auto phis = gen_presheaf_morphisms(p, P, Q, 4);
        if (phis.empty())
            phis = gen_presheaf_morphisms(p, P, P, 4);
        for (const auto& phi : phis) {
            t.expect(matches_definition(elements_functor(phi), phi), "definition, seed " + std::to_string(seed));
            for (const auto& psi : gen_presheaf_morphisms(params(derive_seed(seed, 2)), phi.cod(), phi.cod(), 4)) {
                PresheafMorphism composite = vcomp_presheaf_morphism(psi, phi);
                FinFunctor lhs = elements_functor(composite);
                t.expect(lhs == compose_functors(elements_functor(phi), elements_functor(psi)),
                         "composite, seed " + std::to_string(seed));
                t.expect(matches_definition(lhs, composite), "composite definition, seed " + std::to_string(seed));
                ++pairs;
            }
        }
    }
    t.expect(pairs >= 100, "only " + std::to_string(pairs) + " pairs generated");
}

// 3
void hom_category(Tally& t) { corpus_law(t, Law::homcat, 100, 3); }

// 4
void composition_functoriality(Tally& t)
{
    corpus_law(t, Law::interchange, 100, 4);
    for (const auto& f : {fx::of2(), fx::doubled()}) {
        OpenFunctor id = identity_open_functor(f.cod_ref());
        OpenNatTrans h = hcomp_open(identity_open_nat(id), identity_open_nat(f));
        t.expect(open_nat_equal(h, identity_open_nat(compose_open(id, f))), "identities on a fixture");
    }
}

/// Checks the inverse independently of is_invertible_open_nat itself.
void expect_invertible(Tally& t, const OpenNatTrans& theta, const std::string& what)
{
    auto inv = is_invertible_open_nat(theta);
    t.expect(inv.has_value(), what + " not invertible");
    if (!inv)
        return;
    t.expect(open_nat_equal(vcomp_open(*inv, theta), identity_open_nat(theta.dom())), what + ": inv . theta");
    t.expect(open_nat_equal(vcomp_open(theta, *inv), identity_open_nat(theta.cod())), what + ": theta . inv");
}

// 5
void structural_naturality(Tally& t)
{
    corpus_law(t, Law::unitor_nat, 100, 5);
    corpus_law(t, Law::assoc_nat, 100, 5);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto p = [&](std::uint64_t k) { return params(derive_seed(seed, k), styles[seed % 3]); };
        CategoryRef a = gen_category(p(0)), b = gen_category(p(1)), c = gen_category(p(2)),
                    d = gen_category(p(3));
        OpenFunctor f = gen_open_functor(p(4), a, b), g = gen_open_functor(p(5), b, c),
                    h = gen_open_functor(p(6), c, d);
        std::string tag = " seed " + std::to_string(seed);
        expect_invertible(t, left_unitor(f), "left unitor" + tag);
        expect_invertible(t, right_unitor(f), "right unitor" + tag);
        expect_invertible(t, associator(f, g, h), "associator" + tag);
    }
    t.expect(!is_invertible_open_nat(fx::collapse_into_doubled()), "collapse is not invertible");
}

// 6
void coherence(Tally& t)
{
    corpus_law(t, Law::pentagon, 60, 6);
    corpus_law(t, Law::triangle, 60, 6);
    OpenFunctor f = fx::of2();
    t.expect(check_pentagon(f, f, f, f).holds, "pentagon on OF2");
    t.expect(check_triangle(f, f).holds, "triangle on OF2");
}

// 7
void strict_non_laws(Tally& t)
{
    OpenFunctor f = fx::of2();
    OpenFunctor id = identity_open_functor(fx::cat2());
    t.expect(!(compose_open(id, f) == f), "Id o OF2 equals OF2");
    t.expect(!(compose_open(f, id) == f), "OF2 o Id equals OF2");

    OpenFunctor outer = compose_open(compose_open(f, f), f);  // (H o G) o F
    OpenFunctor inner = compose_open(f, compose_open(f, f));  // H o (G o F)
    t.expect(!(outer == inner), "composites coincide");
    for (const auto& c : fx::cat2()->objects()) {
        auto xs = outer.alpha().fiber(c);
        auto ys = inner.alpha().fiber(c);
        t.expect(!xs.empty() && xs.size() == ys.size(), "fiber sizes at " + c.str());
        for (const auto& x : xs)
            t.expect(!x.first().is_pair() && x.second().is_pair(), "outer nesting " + x.encode());
        for (const auto& y : ys)
            t.expect(y.first().is_pair() && !y.second().is_pair(), "inner nesting " + y.encode());
    }
}

// 8
void fixture_regression(Tally& t)
{
    const std::string dir = OPENCAT_GOLDEN_DIR;
    OpenFunctor f = fx::of2();
    CategoryRef cat2 = fx::cat2();
    OpenFunctor id = identity_open_functor(cat2);
    OpenFunctor id_f = compose_open(id, f);
    Element star = Element::star();

    t.expect(serialize(*cat2) == read_file(dir + "/cat2.json"), "golden cat2");
    t.expect(serialize(f) == read_file(dir + "/of2.json"), "golden of2");
    t.expect(serialize(id_f) == read_file(dir + "/id_after_of2.json"), "golden Id o OF2");
    t.expect(serialize(compose_open(f, id)) == read_file(dir + "/of2_after_id.json"), "golden OF2 o Id");
    t.expect(serialize(compose_open(f, f)) == read_file(dir + "/of2_after_of2.json"), "golden OF2 o OF2");

    t.expect(validate_open_functor(f).ok(), "OF2 valid");
    t.expect(fiber_set(id.alpha(), "b") == std::set<Element>{star}, "Id alpha(b)");
    t.expect(apply_open(id, ObjId("b"), star) == ObjId("b"), "Id beta(b, *)");
    t.expect(fiber_set(id_f.alpha(), "b") == std::set<Element>{pair(atom("x1"), star), pair(atom("x2"), star)},
             "(Id o OF2) alpha(b)");
    t.expect(apply_open(id_f, ObjId("b"), pair(atom("x1"), star)) == ObjId("b"), "(Id o OF2) beta(b, <x1,*>)");
    t.expect(apply_open(id_f, ObjId("b"), pair(atom("x2"), star)) == ObjId("a"), "(Id o OF2) beta(b, <x2,*>)");
    t.expect(apply_open(f, ObjId("b"), atom("x2")) == ObjId("a"), "apply(OF2, b, x2)");
    bool unknown = false;
    try {
        apply_open(f, ObjId("b"), atom("x0"));
    } catch (const Error& e) {
        unknown = e.kind() == ErrorKind::UnknownElement;
    }
    t.expect(unknown, "apply(OF2, b, x0) is an unknown element");

    OpenNatTrans l = left_unitor(f), r = right_unitor(f);
    t.expect(validate_open_nat(l).ok() && validate_open_nat(r).ok(), "unitors valid");
    t.expect(l.alpha().apply(ObjId("b"), atom("x1")) == pair(atom("x1"), star), "left unitor x1");
    t.expect(r.alpha().apply(ObjId("b"), atom("x1")) == pair(star, atom("x1")), "right unitor x1");
    t.expect(l.beta_at(ObjId("b"), atom("x2")) == ArrId("id_a"), "left unitor beta at (b, x2)");
    OpenNatTrans a = associator(f, f, f);
    for (const auto& z : a.cod().alpha().fiber(ObjId("b"))) {
        Element want = pair(pair(z.first(), z.second().first()), z.second().second());
        t.expect(a.alpha().apply(ObjId("b"), z) == want, "associator at " + z.encode());
    }

    FinCategory el = category_of_elements(fx::p2());
    t.expect(el.object_count() == 3 && el.arrow_count() == 5, "int P2 has 3 objects and 5 arrows");
    t.expect(compose_arrows(*fx::dag3(), ArrId("g"), ArrId("f")) == ArrId("gf"), "g . f = gf");
    t.expect(validate_category(*fx::dag3()).ok(), "DAG category valid");
}

// 9
void determinism(Tally& t)
{
    const std::string command = std::string("\"") + OPENCAT_CLI + "\" laws --seed 7 --count 25";
    std::array<std::string, 2> outputs;
    for (auto& out : outputs) {
        FILE* pipe = popen(command.c_str(), "r");
        t.expect(pipe != nullptr, "cannot run " + command);
        if (!pipe)
            return;
        char buf[4096];
        std::size_t n;
        while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0)
            out.append(buf, n);
        int status = pclose(pipe);
        t.expect(WIFEXITED(status) && WEXITSTATUS(status) == 0, "exit status " + std::to_string(status));
    }
    t.expect(!outputs[0].empty(), "empty report");
    t.expect(outputs[0] == outputs[1], "reports differ");
    t.expect(outputs[0].find("pentagon: 25/25 hold") != std::string::npos, "pentagon line missing");
}

}  // namespace

int main()
{
    const std::vector<std::pair<const char*, std::function<void(Tally&)>>> criteria = {
        {"validator soundness", validators},
        {"elements functoriality", elements_functoriality},
        {"hom-category laws", hom_category},
        {"functoriality of composition", composition_functoriality},
        {"unitor and associator naturality", structural_naturality},
        {"pentagon and triangle", coherence},
        {"strict non-laws witnessed", strict_non_laws},
        {"fixture regression", fixture_regression},
        {"determinism", determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Tally t;
        try {
            criteria[i].second(t);
        } catch (const std::exception& e) {
            t.failures.push_back(std::string("exception: ") + e.what());
        }
        bool ok = t.failures.empty();
        failed += !ok;
        std::cout << (ok ? "PASS" : "FAIL") << " " << i + 1 << ". " << criteria[i].first << " (" << t.checked
                  << " checks";
        if (!ok)
            std::cout << ", " << t.failures.size() << " failed; first: " << t.failures.front();
        std::cout << ")" << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
