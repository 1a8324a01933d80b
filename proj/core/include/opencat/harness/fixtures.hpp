#pragma once

// Small hand-written instances, including deliberately broken ones.

#include "opencat/elements.hpp"
#include "opencat/fincat.hpp"
#include "opencat/openfun.hpp"
#include "opencat/opennat.hpp"

namespace opencat::fixtures {

/// The walking arrow: a, b and f : a -> b.
CategoryRef cat2();

/// Free category on a -> b -> c: arrows f, g and gf = g . f.
CategoryRef dag3();

/// Objects a, b; arrows f, g : a -> b and an idempotent e : b -> b with
/// e . f = g and e . g = g.
CategoryRef fork();

/// P2 over Cat2: P(a) = {u}, P(b) = {v, w}, P(f)^po = {v -> u, w -> u}.
Presheaf p2();

/// The presheaf morphism P2' => P2 with P2'(a) = {u}, P2'(b) = {v}
/// collapsing w onto v.
PresheafMorphism p2_collapse();

/// OF2 : Cat2 -o Cat2 with alpha(a) = {x0}, alpha(b) = {x1, x2},
/// alpha(f)^po = {x1 -> x0, x2 -> x0}; beta(a, x0) = a, beta(b, x1) = b,
/// beta(b, x2) = a, beta(f, x1) = f, beta(f, x2) = id_a.
OpenFunctor of2();

/// Cat2 -o Fork with alpha(a) = {x0}, alpha(b) = {x1, x2}, every element over
/// b sent to b and every (f, x) to f.
OpenFunctor doubled();

/// doubled() => doubled() swapping x1 and x2, identity beta.
OpenNatTrans swap();

/// from_classical(Cat2 -> Fork) => doubled() with constant alpha and identity
/// beta. Not invertible: alpha is not injective over b.
OpenNatTrans collapse_into_doubled();

namespace broken {

/// Cat2 with compose(f, id_a) = id_a.
CategoryRef cat2_right_identity();

/// Identity on dag3 except gf |-> f.
FinFunctor dag3_composition();

/// P2 with P(id_b)^po = {v -> w, w -> v}.
Presheaf p2_identity_action();

/// OF2 with beta(f, x2) = f.
OpenFunctor of2_endpoint();

/// Identity of from_classical(Cat2 -> Fork) with the component at (b, *)
/// replaced by the parallel arrow e.
OpenNatTrans fork_naturality();

}  // namespace broken

}  // namespace opencat::fixtures
