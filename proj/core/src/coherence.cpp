#include "opencat/coherence.hpp"

#include <ostream>

namespace opencat {

namespace {

// Identity beta components over the elements of cod.
std::map<ObjId, ArrId> identity_beta(const OpenFunctor& cod)
{
    std::map<ObjId, ArrId> components;
    for (const auto& obj : cod.elements()->objects())
        components.emplace(obj, cod.cod().identity(cod.beta()(obj)));
    return components;
}

template <class Lhs, class Rhs>
LawReport compare(std::string law, Lhs lhs, Rhs rhs)
{
    LawReport report{std::move(law), {}, false, std::nullopt};
    try {
        OpenNatTrans l = lhs();
        OpenNatTrans r = rhs();
        report.mismatch = open_nat_difference(l, r);
        report.holds = !report.mismatch;
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::BoundaryMismatch || e.kind() == ErrorKind::SizeLimit)
            throw;
        report.mismatch = Mismatch{"evaluation", to_string(e.kind()), e.what()};
    }
    return report;
}

}  // namespace

OpenNatTrans left_unitor(const OpenFunctor& f, const ComposeOptions& options)
{
    OpenFunctor dom = compose_open(identity_open_functor(f.cod_ref()), f, options);
    const Element star = Element::star();
    std::map<ObjId, ElementMap> alpha;
    for (const auto& c : f.dom().objects()) {
        auto& m = alpha[c];
        for (const auto& x : f.alpha().fiber(c))
            m.emplace(x, Element::pair(x, star));
    }
    PresheafMorphism a(dom.alpha(), f.alpha(), std::move(alpha));
    return OpenNatTrans(std::move(dom), f, std::move(a), identity_beta(f));
}

OpenNatTrans right_unitor(const OpenFunctor& f, const ComposeOptions& options)
{
    OpenFunctor dom = compose_open(f, identity_open_functor(f.dom_ref()), options);
    const Element star = Element::star();
    std::map<ObjId, ElementMap> alpha;
    for (const auto& c : f.dom().objects()) {
        auto& m = alpha[c];
        for (const auto& x : f.alpha().fiber(c))
            m.emplace(x, Element::pair(star, x));
    }
    PresheafMorphism a(dom.alpha(), f.alpha(), std::move(alpha));
    return OpenNatTrans(std::move(dom), f, std::move(a), identity_beta(f));
}

OpenNatTrans associator(const OpenFunctor& f, const OpenFunctor& g, const OpenFunctor& h,
                        const ComposeOptions& options)
{
    OpenFunctor dom = compose_open(h, compose_open(g, f, options), options);
    OpenFunctor cod = compose_open(compose_open(h, g, options), f, options);
    std::map<ObjId, ElementMap> alpha;
    for (const auto& c : f.dom().objects()) {
        auto& m = alpha[c];
        for (const auto& xyz : cod.alpha().fiber(c)) {
            const Element& yz = xyz.second();
            m.emplace(xyz, Element::pair(Element::pair(xyz.first(), yz.first()), yz.second()));
        }
    }
    PresheafMorphism a(dom.alpha(), cod.alpha(), std::move(alpha));
    std::map<ObjId, ArrId> beta = identity_beta(cod);
    return OpenNatTrans(std::move(dom), std::move(cod), std::move(a), std::move(beta));
}

std::ostream& operator<<(std::ostream& os, const LawReport& r)
{
    os << r.law;
    if (!r.instance.empty())
        os << " [" << r.instance << "]";
    os << ": " << (r.holds ? "holds" : "FAILS");
    if (r.mismatch)
        os << " at " << *r.mismatch;
    return os;
}

std::pair<LawReport, LawReport> check_unitor_naturality(const OpenNatTrans& theta, const Structure& s)
{
    CompositionCache cache;
    ComposeOptions options;
    options.cache = &cache;
    const OpenFunctor& F = theta.dom();
    const OpenFunctor& G = theta.cod();
    LawReport left = compare(
        "left unitor naturality",
        [&] {
            OpenNatTrans whisker = hcomp_open(identity_open_nat(identity_open_functor(F.cod_ref())), theta, options);
            return vcomp_open(s.left_unitor(G, options), whisker);
        },
        [&] { return vcomp_open(theta, s.left_unitor(F, options)); });
    LawReport right = compare(
        "right unitor naturality",
        [&] {
            OpenNatTrans whisker = hcomp_open(theta, identity_open_nat(identity_open_functor(F.dom_ref())), options);
            return vcomp_open(s.right_unitor(G, options), whisker);
        },
        [&] { return vcomp_open(theta, s.right_unitor(F, options)); });
    return {std::move(left), std::move(right)};
}

LawReport check_associator_naturality(const OpenNatTrans& theta, const OpenNatTrans& phi, const OpenNatTrans& psi,
                                      const Structure& s)
{
    CompositionCache cache;
    ComposeOptions options;
    options.cache = &cache;
    return compare(
        "associator naturality",
        [&] {
            OpenNatTrans inner = hcomp_open(psi, hcomp_open(phi, theta, options), options);
            return vcomp_open(s.associator(theta.cod(), phi.cod(), psi.cod(), options), inner);
        },
        [&] {
            OpenNatTrans outer = hcomp_open(hcomp_open(psi, phi, options), theta, options);
            return vcomp_open(outer, s.associator(theta.dom(), phi.dom(), psi.dom(), options));
        });
}

LawReport check_pentagon(const OpenFunctor& f, const OpenFunctor& g, const OpenFunctor& h, const OpenFunctor& i,
                         const Structure& s)
{
    CompositionCache cache;
    ComposeOptions options;
    options.cache = &cache;
    return compare(
        "pentagon",
        [&] {
            OpenNatTrans first = hcomp_open(identity_open_nat(i), s.associator(f, g, h, options), options);
            OpenNatTrans second = s.associator(f, compose_open(h, g, options), i, options);
            OpenNatTrans third = hcomp_open(s.associator(g, h, i, options), identity_open_nat(f), options);
            return vcomp_open(third, vcomp_open(second, first));
        },
        [&] {
            OpenNatTrans first = s.associator(compose_open(g, f, options), h, i, options);
            OpenNatTrans second = s.associator(f, g, compose_open(i, h, options), options);
            return vcomp_open(second, first);
        });
}

LawReport check_triangle(const OpenFunctor& f, const OpenFunctor& g, const Structure& s)
{
    CompositionCache cache;
    ComposeOptions options;
    options.cache = &cache;
    return compare(
        "triangle",
        [&] {
            OpenFunctor id = identity_open_functor(f.cod_ref());
            OpenNatTrans whisker = hcomp_open(s.right_unitor(g, options), identity_open_nat(f), options);
            return vcomp_open(whisker, s.associator(f, id, g, options));
        },
        [&] { return hcomp_open(identity_open_nat(g), s.left_unitor(f, options), options); });
}

LawReport check_interchange(const OpenNatTrans& theta, const OpenNatTrans& theta2, const OpenNatTrans& phi,
                            const OpenNatTrans& phi2)
{
    CompositionCache cache;
    ComposeOptions options;
    options.cache = &cache;
    return compare(
        "interchange",
        [&] { return hcomp_open(vcomp_open(phi2, phi), vcomp_open(theta2, theta), options); },
        [&] { return vcomp_open(hcomp_open(phi2, theta2, options), hcomp_open(phi, theta, options)); });
}

LawReport check_identity_preservation(const OpenFunctor& f, const OpenFunctor& g)
{
    return compare(
        "identity preservation", [&] { return hcomp_open(identity_open_nat(g), identity_open_nat(f)); },
        [&] { return identity_open_nat(compose_open(g, f)); });
}

std::vector<LawReport> check_hom_category_laws(const OpenNatTrans& theta, const OpenNatTrans& phi,
                                               const OpenNatTrans& psi)
{
    std::vector<LawReport> reports;
    reports.push_back(compare(
        "vertical associativity", [&] { return vcomp_open(psi, vcomp_open(phi, theta)); },
        [&] { return vcomp_open(vcomp_open(psi, phi), theta); }));
    reports.push_back(compare(
        "left identity", [&] { return vcomp_open(identity_open_nat(theta.cod()), theta); }, [&] { return theta; }));
    reports.push_back(compare(
        "right identity", [&] { return vcomp_open(theta, identity_open_nat(theta.dom())); }, [&] { return theta; }));
    return reports;
}

}  // namespace opencat
