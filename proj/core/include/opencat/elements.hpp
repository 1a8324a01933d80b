#pragma once

// Presheaves C -> Set^op, their morphisms, categories of elements and the
// (contravariant) elements functor.
//
// Set^op convention: an arrow f : c -> c' acts on elements backwards, by the
// function F(f)^po : F(c') -> F(c). A morphism theta : F => G likewise stores
// functions theta[c]^po : G(c) -> F(c).

#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "opencat/fincat.hpp"

namespace opencat {

/// Element of a presheaf fiber: an atom, the singleton element star, or a pair.
///
/// Elements are immutable and carry their canonical text encoding ("x", "*",
/// "<x,<y,z>>"), which also defines equality and ordering.
class Element {
public:
    enum class Kind { Atom, Star, Pair };

    Element() = default;  // star

    /// Atom labels are nonempty, not "*", and use none of the characters
    /// `<>,|()` or whitespace. Throws Error(Malformed) otherwise.
    static Element atom(std::string label);
    static Element star();
    static Element pair(const Element& first, const Element& second);

    /// Parses the canonical encoding. Throws Error(Parse).
    static Element decode(std::string_view text);
    static bool valid_atom_label(std::string_view label) noexcept;

    Kind kind() const noexcept { return kind_; }
    bool is_atom() const noexcept { return kind_ == Kind::Atom; }
    bool is_star() const noexcept { return kind_ == Kind::Star; }
    bool is_pair() const noexcept { return kind_ == Kind::Pair; }

    /// Atom label; empty for star and pairs.
    std::string_view label() const noexcept;
    const Element& first() const;
    const Element& second() const;

    const std::string& encode() const noexcept { return text_; }

    friend bool operator==(const Element& a, const Element& b) noexcept { return a.text_ == b.text_; }
    friend std::strong_ordering operator<=>(const Element& a, const Element& b) noexcept { return a.text_ <=> b.text_; }

private:
    Element(Kind kind, std::string text, std::shared_ptr<const std::pair<Element, Element>> parts)
        : kind_(kind), text_(std::move(text)), parts_(std::move(parts))
    {
    }

    Kind kind_ = Kind::Star;
    std::string text_ = "*";
    std::shared_ptr<const std::pair<Element, Element>> parts_;
};

std::ostream& operator<<(std::ostream& os, const Element& x);

/// A function between finite element sets.
using ElementMap = std::map<Element, Element>;

/// A functor C -> Set^op on a finite category. Immutable handle.
class Presheaf {
public:
    /// Fibers missing from `fibers` are empty. Throws Malformed on duplicate
    /// elements or on keys that are not objects/arrows of the base.
    Presheaf(CategoryRef base, std::map<ObjId, std::vector<Element>> fibers, std::map<ArrId, ElementMap> actions);

    const FinCategory& base() const noexcept { return *data_->base; }
    const CategoryRef& base_ref() const noexcept { return data_->base; }

    /// F(c), in declaration order.
    std::span<const Element> fiber(const ObjId& c) const;
    bool contains(const ObjId& c, const Element& x) const;
    std::size_t fiber_size(const ObjId& c) const { return fiber(c).size(); }

    /// F(f)^po, or nullptr when the action is not given.
    const ElementMap* action(const ArrId& f) const;
    /// F(f)^po(x). Throws UnknownArrow / UnknownElement.
    const Element& act(const ArrId& f, const Element& x) const;

    const std::map<ObjId, std::vector<Element>>& fibers() const noexcept { return data_->fibers; }
    const std::map<ArrId, ElementMap>& actions() const noexcept { return data_->actions; }

    friend bool operator==(const Presheaf& a, const Presheaf& b);

private:
    struct Data {
        CategoryRef base;
        std::map<ObjId, std::vector<Element>> fibers;
        std::map<ObjId, std::set<Element>> members;
        std::map<ArrId, ElementMap> actions;
    };
    std::shared_ptr<const Data> data_;
};

/// c |-> {star}, f |-> identity.
Presheaf terminal_presheaf(const CategoryRef& base);

Report validate_presheaf(const Presheaf& p);

/// theta : F => G in [C, Set^op], stored as functions theta[c]^po : G(c) -> F(c).
class PresheafMorphism {
public:
    PresheafMorphism(Presheaf dom, Presheaf cod, std::map<ObjId, ElementMap> components_po);

    const Presheaf& dom() const noexcept { return dom_; }
    const Presheaf& cod() const noexcept { return cod_; }

    const ElementMap* component(const ObjId& c) const;
    /// theta[c]^po(y). Throws UnknownObject / UnknownElement.
    const Element& apply(const ObjId& c, const Element& y) const;
    const std::map<ObjId, ElementMap>& components() const noexcept { return components_; }

    friend bool operator==(const PresheafMorphism&, const PresheafMorphism&) = default;

private:
    Presheaf dom_;
    Presheaf cod_;
    std::map<ObjId, ElementMap> components_;
};

Report validate_presheaf_morphism(const PresheafMorphism& theta);

PresheafMorphism identity_presheaf_morphism(const Presheaf& p);

/// phi . theta for theta : F => G, phi : G => H; (phi . theta)[c]^po = theta[c]^po o phi[c]^po.
PresheafMorphism vcomp_presheaf_morphism(const PresheafMorphism& phi, const PresheafMorphism& theta);

/// Arrow component phi[h]^po : G'(d') -> G(d) of phi : G => G' at h : d -> d'.
/// Both defining composites are evaluated; throws Malformed if they differ.
ElementMap arrow_component_po(const PresheafMorphism& phi, const ArrId& h);

/// Canonical identifiers "(c|x)" and "(f|x')" of objects and arrows of a category of elements.
ObjId element_object(const ObjId& c, const Element& x);
ArrId element_arrow(const ArrId& f, const Element& x);

/// Category of elements: objects (c, x), arrows (f, x') : (c, F(f)^po(x')) -> (c', x').
FinCategory category_of_elements(const Presheaf& p);
CategoryRef category_of_elements_ref(const Presheaf& p);

/// (int theta)^po : int G -> int F for theta : F => G.
FinFunctor elements_functor(const PresheafMorphism& theta);
/// Same, reusing already built categories of elements of cod(theta) and dom(theta).
FinFunctor elements_functor(const PresheafMorphism& theta, const CategoryRef& elements_of_cod,
                            const CategoryRef& elements_of_dom);

}  // namespace opencat
