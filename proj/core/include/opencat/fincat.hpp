#pragma once

// Finite categories, functors and natural transformations with explicit
// composition tables.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "opencat/error.hpp"
#include "opencat/ids.hpp"
#include "opencat/report.hpp"

namespace opencat {

struct Endpoints {
    ObjId src;
    ObjId tgt;

    friend bool operator==(const Endpoints&, const Endpoints&) = default;
};

using ComposeKey = std::pair<ArrId, ArrId>;  // (g, f) for g . f

/// A finite category given by its full composition table.
///
/// Construction only checks that the data is well formed (unique identifiers,
/// references to known objects and arrows). The category axioms are checked by
/// validate_category, so deliberately broken tables can be represented.
class FinCategory {
public:
    class Builder;

    FinCategory() = default;

    std::span<const ObjId> objects() const noexcept { return objects_; }
    std::span<const ArrId> arrows() const noexcept { return arrow_order_; }
    std::size_t object_count() const noexcept { return objects_.size(); }
    std::size_t arrow_count() const noexcept { return arrow_order_.size(); }

    bool has_object(const ObjId& c) const { return identities_.contains(c); }
    bool has_arrow(const ArrId& f) const { return arrows_.contains(f); }

    const Endpoints& endpoints(const ArrId& f) const;
    const ObjId& src(const ArrId& f) const { return endpoints(f).src; }
    const ObjId& tgt(const ArrId& f) const { return endpoints(f).tgt; }
    const ArrId& identity(const ObjId& c) const;
    bool is_identity(const ArrId& f) const;

    /// Raw table lookup, no composability check.
    const ArrId* find_composite(const ArrId& g, const ArrId& f) const;
    const std::map<ComposeKey, ArrId>& composition_table() const noexcept { return compose_; }

    /// Arrows c -> c', in declaration order.
    std::span<const ArrId> hom(const ObjId& c, const ObjId& c2) const;

    friend bool operator==(const FinCategory& a, const FinCategory& b);

private:
    std::vector<ObjId> objects_;
    std::vector<ArrId> arrow_order_;
    std::map<ObjId, ArrId> identities_;
    std::map<ArrId, Endpoints> arrows_;
    std::map<ComposeKey, ArrId> compose_;
    std::map<std::pair<ObjId, ObjId>, std::vector<ArrId>> homs_;
};

using CategoryRef = std::shared_ptr<const FinCategory>;

class FinCategory::Builder {
public:
    /// Adds an object together with its identity arrow.
    Builder& object(ObjId c, ArrId identity);
    Builder& arrow(ArrId f, ObjId src, ObjId tgt);
    /// Sets compose(g, f) = gf, overriding any previous entry.
    Builder& compose(ArrId g, ArrId f, ArrId gf);

    /// Unit compositions compose(id, f) and compose(f, id) are filled in when
    /// absent. Throws Error(Malformed) on duplicate or dangling identifiers.
    FinCategory build() const;
    CategoryRef build_ref() const { return std::make_shared<const FinCategory>(build()); }

private:
    std::vector<std::pair<ObjId, ArrId>> objects_;
    std::vector<std::pair<ArrId, Endpoints>> arrows_;
    std::map<ComposeKey, ArrId> compose_;
};

bool same_category(const CategoryRef& a, const CategoryRef& b);

/// compose_arrows(C, g, f) = g . f. Throws NotComposable when tgt(f) != src(g).
ArrId compose_arrows(const FinCategory& cat, const ArrId& g, const ArrId& f);

Report validate_category(const FinCategory& cat);

/// A functor between finite categories; an immutable, cheaply copied handle.
class FinFunctor {
public:
    FinFunctor(CategoryRef dom, CategoryRef cod, std::map<ObjId, ObjId> on_obj, std::map<ArrId, ArrId> on_arr);

    const FinCategory& dom() const noexcept { return *data_->dom; }
    const FinCategory& cod() const noexcept { return *data_->cod; }
    const CategoryRef& dom_ref() const noexcept { return data_->dom; }
    const CategoryRef& cod_ref() const noexcept { return data_->cod; }

    const ObjId& operator()(const ObjId& c) const;
    const ArrId& operator()(const ArrId& f) const;
    const ObjId* find(const ObjId& c) const;
    const ArrId* find(const ArrId& f) const;

    const std::map<ObjId, ObjId>& on_objects() const noexcept { return data_->on_obj; }
    const std::map<ArrId, ArrId>& on_arrows() const noexcept { return data_->on_arr; }

    friend bool operator==(const FinFunctor& a, const FinFunctor& b);

private:
    struct Data {
        CategoryRef dom;
        CategoryRef cod;
        std::map<ObjId, ObjId> on_obj;
        std::map<ArrId, ArrId> on_arr;
    };
    std::shared_ptr<const Data> data_;
};

FinFunctor identity_functor(const CategoryRef& cat);
FinFunctor constant_functor(const CategoryRef& dom, const CategoryRef& cod, const ObjId& target);

/// G . F. Throws BoundaryMismatch unless cod(F) = dom(G). Entries of F whose
/// image G does not map are dropped (validate_functor reports them).
FinFunctor compose_functors(const FinFunctor& g, const FinFunctor& f);

Report validate_functor(const FinFunctor& f);

/// theta : F => G with components theta[c] : F(c) -> G(c).
class NatTrans {
public:
    NatTrans(FinFunctor dom, FinFunctor cod, std::map<ObjId, ArrId> components);

    const FinFunctor& dom() const noexcept { return dom_; }
    const FinFunctor& cod() const noexcept { return cod_; }

    /// theta[c]
    const ArrId& operator[](const ObjId& c) const;
    const ArrId* find(const ObjId& c) const;
    const std::map<ObjId, ArrId>& components() const noexcept { return components_; }

    friend bool operator==(const NatTrans&, const NatTrans&) = default;

private:
    FinFunctor dom_;
    FinFunctor cod_;
    std::map<ObjId, ArrId> components_;
};

Report validate_nat(const NatTrans& theta);

NatTrans identity_nat(const FinFunctor& f);

/// theta[f] = G(f) . theta[c] = theta[c'] . F(f). Throws Malformed if the two
/// formulas disagree (theta not natural at f), UnknownArrow for foreign f.
ArrId arrow_component(const NatTrans& theta, const ArrId& f);

/// (phi . theta)[c] = phi[c] . theta[c]; requires cod(theta) = dom(phi).
NatTrans vcomp_nat(const NatTrans& phi, const NatTrans& theta);

/// theta : F => F' : C -> D, phi : G => G' : D -> E; (phi o theta)[c] = phi[theta[c]].
NatTrans hcomp_nat(const NatTrans& phi, const NatTrans& theta);

/// Arrows u with u . f = id and f . u = id.
std::optional<ArrId> inverse_arrow(const FinCategory& cat, const ArrId& f);

}  // namespace opencat
