#pragma once

// Slow, compositional constructions of the beta parts of vertical and
// horizontal composition, built only from classical fincat operations
// (whiskering, hcomp_nat, vcomp_nat). Used as an independent check of the
// component formulas in opennat.

#include "opencat/fincat.hpp"
#include "opencat/opennat.hpp"

namespace opencat::reference {

/// phi_beta . (theta_beta o id[(int phi_alpha)^po])
NatTrans vcomp_beta_by_whiskering(const OpenNatTrans& phi, const OpenNatTrans& theta);

/// The whiskering K, K' : int (G' o F')_alpha -> int G'_alpha with
/// Theta : K => K', Theta[c, <x', y'>] = (theta_beta[c, x'], y'), followed by
/// hcomp_nat(phi_beta, Theta). `composite` supplies the categories of elements
/// of G o F and G' o F' (its dom and cod).
NatTrans hcomp_beta_by_whiskering(const OpenNatTrans& phi, const OpenNatTrans& theta, const OpenNatTrans& composite);

}  // namespace opencat::reference
