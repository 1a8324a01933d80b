#pragma once

// Unitors, associator, and executable checks of the bicategory laws on
// finite instances. Every check compares two open natural transformations
// by strict structural equality.

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "opencat/openfun.hpp"
#include "opencat/opennat.hpp"

namespace opencat {

/// nu_l[F] : Id_D o F => F with alpha x |-> <x, *> and identity beta.
OpenNatTrans left_unitor(const OpenFunctor& f, const ComposeOptions& options = {});

/// nu_r[F] : F o Id_C => F with alpha x |-> <*, x> and identity beta.
OpenNatTrans right_unitor(const OpenFunctor& f, const ComposeOptions& options = {});

/// a[F, G, H] : H o (G o F) => (H o G) o F with alpha <x, <y, z>> |-> <<x, y>, z>
/// and identity beta.
OpenNatTrans associator(const OpenFunctor& f, const OpenFunctor& g, const OpenFunctor& h,
                        const ComposeOptions& options = {});

struct LawReport {
    std::string law;
    std::string instance;
    bool holds = false;
    std::optional<Mismatch> mismatch;  // first differing component when !holds
};

std::ostream& operator<<(std::ostream& os, const LawReport& r);

/// The structural 2-cells used by the checks. Tests substitute deliberately
/// broken cells to make sure the checks notice.
struct Structure {
    std::function<OpenNatTrans(const OpenFunctor&, const ComposeOptions&)> left_unitor = opencat::left_unitor;
    std::function<OpenNatTrans(const OpenFunctor&, const ComposeOptions&)> right_unitor = opencat::right_unitor;
    std::function<OpenNatTrans(const OpenFunctor&, const OpenFunctor&, const OpenFunctor&, const ComposeOptions&)>
        associator = opencat::associator;
};

/// nu_l[G] . (id[Id_D] o theta) = theta . nu_l[F] and
/// nu_r[G] . (theta o id[Id_C]) = theta . nu_r[F].
std::pair<LawReport, LawReport> check_unitor_naturality(const OpenNatTrans& theta, const Structure& s = {});

/// a[F', G', H'] . (psi o (phi o theta)) = ((psi o phi) o theta) . a[F, G, H]
LawReport check_associator_naturality(const OpenNatTrans& theta, const OpenNatTrans& phi, const OpenNatTrans& psi,
                                      const Structure& s = {});

/// (a[G,H,I] o id[F]) . a[F, H o G, I] . (id[I] o a[F,G,H]) = a[F, G, I o H] . a[G o F, H, I]
LawReport check_pentagon(const OpenFunctor& f, const OpenFunctor& g, const OpenFunctor& h, const OpenFunctor& i,
                         const Structure& s = {});

/// (nu_r[G] o id[F]) . a[F, Id_C, G] = id[G] o nu_l[F] for F : B -o C, G : C -o D.
LawReport check_triangle(const OpenFunctor& f, const OpenFunctor& g, const Structure& s = {});

/// (phi' . phi) o (theta' . theta) = (phi' o theta') . (phi o theta)
LawReport check_interchange(const OpenNatTrans& theta, const OpenNatTrans& theta2, const OpenNatTrans& phi,
                            const OpenNatTrans& phi2);

/// id[G] o id[F] = id[G o F]
LawReport check_identity_preservation(const OpenFunctor& f, const OpenFunctor& g);

/// For theta : F => G, phi : G => H, psi : H => I: associativity of vcomp_open
/// and both unit laws, in that order.
std::vector<LawReport> check_hom_category_laws(const OpenNatTrans& theta, const OpenNatTrans& phi,
                                               const OpenNatTrans& psi);

}  // namespace opencat
