#pragma once

// Seeded generators of valid instances. Every output is a pure function of
// the parameters and passes its validator.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "opencat/elements.hpp"
#include "opencat/fincat.hpp"
#include "opencat/openfun.hpp"
#include "opencat/opennat.hpp"

namespace opencat::harness {

enum class CategoryStyle {
    dag_free,  // free category on a random DAG, composition by concatenating paths
    preorder,  // thin category on a random reflexive-transitive relation
    product,   // product of two smaller dag_free or preorder categories
};

const char* to_string(CategoryStyle s);
std::optional<CategoryStyle> parse_style(std::string_view s);

struct GenParams {
    std::uint64_t seed = 0;
    std::size_t max_objects = 3;
    std::size_t max_extra_arrows = 4;
    std::size_t max_fiber = 3;
    CategoryStyle style = CategoryStyle::dag_free;
};

CategoryRef gen_category(const GenParams& p);

/// Fibers hold atoms "e0", "e1", ... per object, at most p.max_fiber of them.
Presheaf gen_presheaf(const GenParams& p, const CategoryRef& c);

/// alpha from gen_presheaf; beta found by a randomized search for a functor
/// int alpha -> d, falling back to a constant functor.
OpenFunctor gen_open_functor(const GenParams& p, const CategoryRef& c, const CategoryRef& d);

/// Up to `cap` distinct valid transformations F => G in a seeded order. When
/// F = G the identity comes first.
std::vector<OpenNatTrans> gen_open_nat(const GenParams& p, const OpenFunctor& f, const OpenFunctor& g,
                                       std::size_t cap = 16);

/// Up to `cap` distinct natural transformations P => Q in a seeded order.
std::vector<PresheafMorphism> gen_presheaf_morphisms(const GenParams& p, const Presheaf& from, const Presheaf& to,
                                                     std::size_t cap = 16);

/// Derives an independent seed; used to give every generated piece of an
/// instance its own stream.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt);

}  // namespace opencat::harness
