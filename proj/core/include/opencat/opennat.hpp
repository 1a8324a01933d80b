#pragma once

// Open natural transformations theta : F => G : C -o D, given by a presheaf
// morphism alpha : F_alpha => G_alpha and a natural transformation
// beta : F_beta o (int alpha)^po => G_beta over int G_alpha.

#include <map>
#include <memory>
#include <optional>
#include <string>

#include "opencat/elements.hpp"
#include "opencat/fincat.hpp"
#include "opencat/openfun.hpp"

namespace opencat {

class OpenNatTrans {
public:
    /// `beta_components` is keyed by element_object(c, y) for y in G_alpha(c).
    OpenNatTrans(OpenFunctor dom, OpenFunctor cod, PresheafMorphism alpha, std::map<ObjId, ArrId> beta_components);

    const OpenFunctor& dom() const noexcept { return data_->dom; }
    const OpenFunctor& cod() const noexcept { return data_->cod; }
    const PresheafMorphism& alpha() const noexcept { return data_->alpha; }
    const NatTrans& beta() const noexcept { return data_->beta; }

    /// beta[c, y] : F_beta(c, alpha[c]^po(y)) -> G_beta(c, y)
    const ArrId& beta_at(const ObjId& c, const Element& y) const { return data_->beta[element_object(c, y)]; }

private:
    struct Data {
        OpenFunctor dom;
        OpenFunctor cod;
        PresheafMorphism alpha;
        NatTrans beta;
    };
    std::shared_ptr<const Data> data_;
};

Report validate_open_nat(const OpenNatTrans& theta);

/// alpha = identity morphism of F_alpha, beta = identity of F_beta.
OpenNatTrans identity_open_nat(const OpenFunctor& f);

/// phi . theta for theta : F => G and phi : G => H.
///   alpha: phi_alpha . theta_alpha
///   beta at (c, z): phi_beta[c, z] . theta_beta[c, phi_alpha[c]^po(z)]
OpenNatTrans vcomp_open(const OpenNatTrans& phi, const OpenNatTrans& theta);

/// phi o theta : G o F => G' o F' for theta : F => F' : C -o D and phi : G => G' : D -o E.
///   alpha at c: <x', y'> |-> <theta_alpha[c]^po(x'), phi_alpha[theta_beta[c, x']]^po(y')>
///   beta at (c, <x', y'>): phi_beta[(theta_beta[c, x'], y')]   (arrow component)
OpenNatTrans hcomp_open(const OpenNatTrans& phi, const OpenNatTrans& theta, const ComposeOptions& options = {});

/// First component at which two transformations differ.
struct Mismatch {
    std::string where;
    std::string left;
    std::string right;
};

std::ostream& operator<<(std::ostream& os, const Mismatch& m);

std::optional<Mismatch> open_nat_difference(const OpenNatTrans& a, const OpenNatTrans& b);
bool open_nat_equal(const OpenNatTrans& a, const OpenNatTrans& b);

/// The inverse when every alpha component is a bijection and every beta
/// component an isomorphism, checked by composing both ways.
std::optional<OpenNatTrans> is_invertible_open_nat(const OpenNatTrans& theta);

}  // namespace opencat
