#pragma once

// Open functors C -o D: a presheaf alpha : C -> Set^op of external
// interactions plus a functor beta : int alpha -> D.

#include <cstddef>
#include <map>
#include <memory>
#include <unordered_map>
#include <vector>

#include "opencat/elements.hpp"
#include "opencat/fincat.hpp"

namespace opencat {

/// Immutable handle; copies share the underlying data.
class OpenFunctor {
public:
    /// `beta` is expected to start from category_of_elements(alpha); this is
    /// checked by validate_open_functor, not here.
    OpenFunctor(Presheaf alpha, FinFunctor beta);

    const FinCategory& dom() const noexcept { return data_->alpha.base(); }
    const FinCategory& cod() const noexcept { return data_->beta.cod(); }
    const CategoryRef& dom_ref() const noexcept { return data_->alpha.base_ref(); }
    const CategoryRef& cod_ref() const noexcept { return data_->beta.cod_ref(); }

    const Presheaf& alpha() const noexcept { return data_->alpha; }
    const FinFunctor& beta() const noexcept { return data_->beta; }
    /// The category of elements beta starts from.
    const CategoryRef& elements() const noexcept { return data_->beta.dom_ref(); }

    std::size_t content_hash() const noexcept { return data_->hash; }

    friend bool operator==(const OpenFunctor& a, const OpenFunctor& b);

private:
    struct Data {
        Presheaf alpha;
        FinFunctor beta;
        std::size_t hash;
    };
    std::shared_ptr<const Data> data_;
};

/// Builds int alpha and wraps the given object/arrow tables (keyed by
/// element_object / element_arrow identifiers) into beta.
OpenFunctor make_open_functor(Presheaf alpha, CategoryRef cod, std::map<ObjId, ObjId> on_obj,
                              std::map<ArrId, ArrId> on_arr);

Report validate_open_functor(const OpenFunctor& f);

/// alpha = (c |-> {star}, f |-> id), beta = ((c, star) |-> c, (f, star) |-> f).
OpenFunctor identity_open_functor(const CategoryRef& cat);

/// A classical functor with no external information (singleton fibers).
OpenFunctor from_classical(const FinFunctor& f);

/// Upper bound on the size of any fiber of a composite. Reads OPENCAT_MAX_FIBER
/// once; defaults to 512.
std::size_t default_max_fiber();

/// Memo of compose_open results keyed by content hash. Not thread safe; use
/// one per worker.
class CompositionCache {
public:
    const OpenFunctor* find(const OpenFunctor& g, const OpenFunctor& f) const;
    const OpenFunctor& insert(const OpenFunctor& g, const OpenFunctor& f, OpenFunctor composite);

    std::size_t size() const noexcept { return entries_.size(); }
    std::size_t hits() const noexcept { return hits_; }

private:
    struct Entry {
        OpenFunctor g;
        OpenFunctor f;
        OpenFunctor composite;
    };
    std::unordered_multimap<std::size_t, Entry> entries_;
    mutable std::size_t hits_ = 0;
};

struct ComposeOptions {
    std::size_t max_fiber = default_max_fiber();
    CompositionCache* cache = nullptr;
};

/// G o F for F : C -o D and G : D -o E. Composite fibers hold pairs <x, y>
/// with x in F_alpha(c) and y in G_alpha(F_beta(c, x)).
///
/// Throws BoundaryMismatch if cod(F) != dom(G), SizeLimit if a composite fiber
/// would exceed options.max_fiber.
OpenFunctor compose_open(const OpenFunctor& g, const OpenFunctor& f, const ComposeOptions& options = {});

/// F_beta(c, x). Throws UnknownObject / UnknownElement.
ObjId apply_open(const OpenFunctor& f, const ObjId& c, const Element& x);

/// F_beta(f, x') : F_beta(c, F_alpha(f)^po(x')) -> F_beta(c', x').
ArrId apply_open_arrow(const OpenFunctor& f, const ArrId& arrow, const Element& x);

}  // namespace opencat
