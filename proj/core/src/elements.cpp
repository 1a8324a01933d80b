#include "opencat/elements.hpp"

#include <cctype>
#include <ostream>

namespace opencat {

// ---------------------------------------------------------------- Element

bool Element::valid_atom_label(std::string_view label) noexcept
{
    if (label.empty() || label == "*")
        return false;
    for (char ch : label) {
        if (std::isspace(static_cast<unsigned char>(ch)))
            return false;
        switch (ch) {
        case '<': case '>': case ',': case '|': case '(': case ')': return false;
        default: break;
        }
    }
    return true;
}

Element Element::atom(std::string label)
{
    if (!valid_atom_label(label))
        throw Error(ErrorKind::Malformed, "invalid atom label '" + label + "'");
    std::string text = label;
    return Element(Kind::Atom, std::move(text), nullptr);
}

Element Element::star() { return Element(); }

Element Element::pair(const Element& first, const Element& second)
{
    std::string text;
    text.reserve(first.text_.size() + second.text_.size() + 3);
    text += '<';
    text += first.text_;
    text += ',';
    text += second.text_;
    text += '>';
    return Element(Kind::Pair, std::move(text), std::make_shared<const std::pair<Element, Element>>(first, second));
}

std::string_view Element::label() const noexcept
{
    return kind_ == Kind::Atom ? std::string_view(text_) : std::string_view();
}

const Element& Element::first() const
{
    if (!parts_)
        throw Error(ErrorKind::Malformed, "element " + text_ + " is not a pair");
    return parts_->first;
}

const Element& Element::second() const
{
    if (!parts_)
        throw Error(ErrorKind::Malformed, "element " + text_ + " is not a pair");
    return parts_->second;
}

namespace {

class ElementParser {
public:
    explicit ElementParser(std::string_view text) : text_(text) {}

    Element parse_all()
    {
        Element e = parse();
        if (pos_ != text_.size())
            fail("trailing characters");
        return e;
    }

private:
    Element parse()
    {
        if (pos_ >= text_.size())
            fail("unexpected end of element");
        if (text_[pos_] == '*') {
            ++pos_;
            return Element::star();
        }
        if (text_[pos_] == '<') {
            ++pos_;
            Element a = parse();
            expect(',');
            Element b = parse();
            expect('>');
            return Element::pair(a, b);
        }
        std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != '>' && text_[pos_] != '<')
            ++pos_;
        std::string label(text_.substr(start, pos_ - start));
        if (!Element::valid_atom_label(label))
            fail("invalid atom '" + label + "'");
        return Element::atom(std::move(label));
    }

    void expect(char ch)
    {
        if (pos_ >= text_.size() || text_[pos_] != ch)
            fail(std::string("expected '") + ch + "'");
        ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg) const
    {
        throw Error(ErrorKind::Parse, "element '" + std::string(text_) + "', column " + std::to_string(pos_ + 1) +
                                          ": " + msg);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Element Element::decode(std::string_view text) { return ElementParser(text).parse_all(); }

std::ostream& operator<<(std::ostream& os, const Element& x) { return os << x.encode(); }

// ---------------------------------------------------------------- Presheaf

Presheaf::Presheaf(CategoryRef base, std::map<ObjId, std::vector<Element>> fibers, std::map<ArrId, ElementMap> actions)
{
    if (!base)
        throw Error(ErrorKind::Malformed, "presheaf needs a base category");
    Data data;
    for (const auto& [c, xs] : fibers)
        if (!base->has_object(c))
            throw Error(ErrorKind::Malformed, "presheaf fiber over unknown object '" + c.str() + "'");
    for (const auto& [f, _] : actions)
        if (!base->has_arrow(f))
            throw Error(ErrorKind::Malformed, "presheaf action of unknown arrow '" + f.str() + "'");
    for (const auto& c : base->objects()) {
        auto& fiber = data.fibers[c];
        auto& members = data.members[c];
        if (auto it = fibers.find(c); it != fibers.end()) {
            for (const auto& x : it->second) {
                if (!members.insert(x).second)
                    throw Error(ErrorKind::Malformed, "duplicate element " + x.encode() + " in fiber over " + c.str());
                fiber.push_back(x);
            }
        }
    }
    data.base = std::move(base);
    data.actions = std::move(actions);
    data_ = std::make_shared<const Data>(std::move(data));
}

std::span<const Element> Presheaf::fiber(const ObjId& c) const
{
    auto it = data_->fibers.find(c);
    if (it == data_->fibers.end())
        throw Error(ErrorKind::UnknownObject, "unknown object '" + c.str() + "'");
    return it->second;
}

bool Presheaf::contains(const ObjId& c, const Element& x) const
{
    auto it = data_->members.find(c);
    return it != data_->members.end() && it->second.contains(x);
}

const ElementMap* Presheaf::action(const ArrId& f) const
{
    auto it = data_->actions.find(f);
    return it == data_->actions.end() ? nullptr : &it->second;
}

const Element& Presheaf::act(const ArrId& f, const Element& x) const
{
    const ElementMap* m = action(f);
    if (!m)
        throw Error(ErrorKind::UnknownArrow, "presheaf has no action for '" + f.str() + "'");
    auto it = m->find(x);
    if (it == m->end())
        throw Error(ErrorKind::UnknownElement, "action of " + f.str() + " is undefined on " + x.encode());
    return it->second;
}

bool operator==(const Presheaf& a, const Presheaf& b)
{
    if (a.data_ == b.data_)
        return true;
    return a.data_->members == b.data_->members && a.data_->actions == b.data_->actions &&
           same_category(a.data_->base, b.data_->base);
}

Presheaf terminal_presheaf(const CategoryRef& base)
{
    std::map<ObjId, std::vector<Element>> fibers;
    std::map<ArrId, ElementMap> actions;
    for (const auto& c : base->objects())
        fibers[c] = {Element::star()};
    for (const auto& f : base->arrows())
        actions[f] = {{Element::star(), Element::star()}};
    return Presheaf(base, std::move(fibers), std::move(actions));
}

Report validate_presheaf(const Presheaf& p)
{
    Report report;
    const auto& C = p.base();
    bool actions_ok = true;
    for (const auto& f : C.arrows()) {
        const auto& e = C.endpoints(f);
        const ElementMap* m = p.action(f);
        if (!m) {
            report.add("presheaf-missing-action", "no action for " + f.str());
            actions_ok = false;
            continue;
        }
        for (const auto& x : p.fiber(e.tgt))
            if (!m->contains(x)) {
                report.add("presheaf-action-domain", f.str() + "^po is undefined on " + x.encode());
                actions_ok = false;
            }
        for (const auto& [x, y] : *m) {
            if (!p.contains(e.tgt, x)) {
                report.add("presheaf-action-domain", f.str() + "^po is defined on " + x.encode() + " outside P(" +
                                                         e.tgt.str() + ")");
                actions_ok = false;
            }
            if (!p.contains(e.src, y)) {
                report.add("presheaf-action-range", f.str() + "^po sends " + x.encode() + " to " + y.encode() +
                                                        " outside P(" + e.src.str() + ")");
                actions_ok = false;
            }
        }
    }
    if (!actions_ok)
        return report;
    for (const auto& c : C.objects()) {
        const auto& id = C.identity(c);
        for (const auto& x : p.fiber(c)) {
            const auto& y = p.act(id, x);
            if (y != x)
                report.add("presheaf-identity", "P(id[" + c.str() + "])^po sends " + x.encode() + " to " + y.encode());
        }
    }
    for (const auto& [key, gf] : C.composition_table()) {
        const auto& [g, f] = key;
        if (C.tgt(f) != C.src(g))
            continue;
        for (const auto& x : p.fiber(C.tgt(g))) {
            const auto& lhs = p.act(gf, x);
            const auto& rhs = p.act(f, p.act(g, x));
            if (lhs != rhs)
                report.add("presheaf-composition", "P(" + g.str() + " . " + f.str() + ")^po(" + x.encode() + ") = " +
                                                       lhs.encode() + " but P(" + f.str() + ")^po(P(" + g.str() +
                                                       ")^po(" + x.encode() + ")) = " + rhs.encode());
        }
    }
    return report;
}

// ---------------------------------------------------------------- PresheafMorphism

PresheafMorphism::PresheafMorphism(Presheaf dom, Presheaf cod, std::map<ObjId, ElementMap> components_po)
    : dom_(std::move(dom)), cod_(std::move(cod)), components_(std::move(components_po))
{
}

const ElementMap* PresheafMorphism::component(const ObjId& c) const
{
    auto it = components_.find(c);
    return it == components_.end() ? nullptr : &it->second;
}

const Element& PresheafMorphism::apply(const ObjId& c, const Element& y) const
{
    const ElementMap* m = component(c);
    if (!m)
        throw Error(ErrorKind::UnknownObject, "presheaf morphism has no component at '" + c.str() + "'");
    auto it = m->find(y);
    if (it == m->end())
        throw Error(ErrorKind::UnknownElement, "component at " + c.str() + " is undefined on " + y.encode());
    return it->second;
}

Report validate_presheaf_morphism(const PresheafMorphism& theta)
{
    Report report;
    const auto& F = theta.dom();
    const auto& G = theta.cod();
    if (!same_category(F.base_ref(), G.base_ref())) {
        report.add("morphism-boundary", "presheaves live over different categories");
        return report;
    }
    const auto& C = F.base();
    for (const auto& c : C.objects()) {
        const ElementMap* m = theta.component(c);
        if (!m) {
            report.add("morphism-missing-component", "no component at " + c.str());
            continue;
        }
        for (const auto& y : G.fiber(c)) {
            auto it = m->find(y);
            if (it == m->end())
                report.add("morphism-component-domain", "component at " + c.str() + " is undefined on " + y.encode());
            else if (!F.contains(c, it->second))
                report.add("morphism-component-range", "component at " + c.str() + " sends " + y.encode() + " to " +
                                                           it->second.encode() + " outside F(" + c.str() + ")");
        }
        for (const auto& [y, _] : *m)
            if (!G.contains(c, y))
                report.add("morphism-component-domain", "component at " + c.str() + " is defined on " + y.encode() +
                                                            " outside G(" + c.str() + ")");
    }
    if (!report.ok())
        return report;
    for (const auto& f : C.arrows()) {
        const auto& e = C.endpoints(f);
        if (!F.action(f) || !G.action(f))
            continue;
        for (const auto& y : G.fiber(e.tgt)) {
            // F(f)^po . theta[c']^po = theta[c]^po . G(f)^po
            const ElementMap& fa = *F.action(f);
            const ElementMap& ga = *G.action(f);
            auto l1 = fa.find(theta.apply(e.tgt, y));
            auto r1 = ga.find(y);
            if (l1 == fa.end() || r1 == ga.end())
                continue;
            const auto& rhs = theta.apply(e.src, r1->second);
            if (l1->second != rhs)
                report.add("naturality", "square at " + f.str() + " on " + y.encode() + ": " + l1->second.encode() +
                                             " vs " + rhs.encode());
        }
    }
    return report;
}

PresheafMorphism identity_presheaf_morphism(const Presheaf& p)
{
    std::map<ObjId, ElementMap> components;
    for (const auto& c : p.base().objects()) {
        auto& m = components[c];
        for (const auto& x : p.fiber(c))
            m.emplace(x, x);
    }
    return PresheafMorphism(p, p, std::move(components));
}

PresheafMorphism vcomp_presheaf_morphism(const PresheafMorphism& phi, const PresheafMorphism& theta)
{
    if (!(theta.cod() == phi.dom()))
        throw Error(ErrorKind::BoundaryMismatch, "vcomp_presheaf_morphism: codomain of theta is not the domain of phi");
    std::map<ObjId, ElementMap> components;
    const auto& H = phi.cod();
    for (const auto& c : H.base().objects()) {
        auto& m = components[c];
        for (const auto& z : H.fiber(c))
            m.emplace(z, theta.apply(c, phi.apply(c, z)));
    }
    return PresheafMorphism(theta.dom(), phi.cod(), std::move(components));
}

ElementMap arrow_component_po(const PresheafMorphism& phi, const ArrId& h)
{
    const auto& G = phi.dom();
    const auto& G2 = phi.cod();
    const auto& e = G.base().endpoints(h);
    ElementMap out;
    for (const auto& y : G2.fiber(e.tgt)) {
        // (G'(h) . phi[d])^po = phi[d]^po o G'(h)^po and (phi[d'] . G(h))^po = G(h)^po o phi[d']^po
        const Element& via_cod = phi.apply(e.src, G2.act(h, y));
        const Element& via_dom = G.act(h, phi.apply(e.tgt, y));
        if (via_cod != via_dom)
            throw Error(ErrorKind::Malformed, "arrow component at " + h.str() + " is ambiguous on " + y.encode() +
                                                  " (presheaf morphism not natural)");
        out.emplace(y, via_cod);
    }
    return out;
}

// ---------------------------------------------------------------- category of elements

ObjId element_object(const ObjId& c, const Element& x) { return ObjId("(" + c.str() + "|" + x.encode() + ")"); }

ArrId element_arrow(const ArrId& f, const Element& x) { return ArrId("(" + f.str() + "|" + x.encode() + ")"); }

FinCategory category_of_elements(const Presheaf& p)
{
    const auto& C = p.base();
    FinCategory::Builder b;
    for (const auto& c : C.objects())
        for (const auto& x : p.fiber(c))
            b.object(element_object(c, x), element_arrow(C.identity(c), x));
    for (const auto& f : C.arrows()) {
        if (C.is_identity(f))
            continue;
        const auto& e = C.endpoints(f);
        const ElementMap* m = p.action(f);
        if (!m)
            continue;
        for (const auto& x : p.fiber(e.tgt)) {
            auto it = m->find(x);
            if (it == m->end() || !p.contains(e.src, it->second))
                continue;
            b.arrow(element_arrow(f, x), element_object(e.src, it->second), element_object(e.tgt, x));
        }
    }
    // (g, x'') . (f, x') = (g . f, x'') where x' = P(g)^po(x'')
    for (const auto& [key, gf] : C.composition_table()) {
        const auto& [g, f] = key;
        if (C.tgt(f) != C.src(g) || C.is_identity(g) || C.is_identity(f))
            continue;
        const ElementMap* mg = p.action(g);
        const ElementMap* mf = p.action(f);
        const ElementMap* mgf = p.action(gf);
        if (!mg || !mf || !mgf)
            continue;
        for (const auto& x : p.fiber(C.tgt(g))) {
            auto xg = mg->find(x);
            if (xg == mg->end() || !mf->contains(xg->second) || !mgf->contains(x))
                continue;
            b.compose(element_arrow(g, x), element_arrow(f, xg->second), element_arrow(gf, x));
        }
    }
    return b.build();
}

CategoryRef category_of_elements_ref(const Presheaf& p)
{
    return std::make_shared<const FinCategory>(category_of_elements(p));
}

FinFunctor elements_functor(const PresheafMorphism& theta)
{
    return elements_functor(theta, category_of_elements_ref(theta.cod()), category_of_elements_ref(theta.dom()));
}

FinFunctor elements_functor(const PresheafMorphism& theta, const CategoryRef& elements_of_cod,
                            const CategoryRef& elements_of_dom)
{
    const auto& G = theta.cod();
    const auto& C = G.base();
    std::map<ObjId, ObjId> on_obj;
    std::map<ArrId, ArrId> on_arr;
    for (const auto& c : C.objects()) {
        const ElementMap* m = theta.component(c);
        if (!m)
            continue;
        for (const auto& y : G.fiber(c))
            if (auto it = m->find(y); it != m->end())
                on_obj.emplace(element_object(c, y), element_object(c, it->second));
    }
    for (const auto& f : C.arrows()) {
        const auto& e = C.endpoints(f);
        const ElementMap* m = theta.component(e.tgt);
        if (!m)
            continue;
        for (const auto& y : G.fiber(e.tgt)) {
            ArrId src_arrow = element_arrow(f, y);
            if (!elements_of_cod->has_arrow(src_arrow))
                continue;
            if (auto it = m->find(y); it != m->end())
                on_arr.emplace(std::move(src_arrow), element_arrow(f, it->second));
        }
    }
    return FinFunctor(elements_of_cod, elements_of_dom, std::move(on_obj), std::move(on_arr));
}

}  // namespace opencat
