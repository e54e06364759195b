#pragma once

#include <string>

#include "multiqsym/linear.hpp"

namespace mqs::nsym {

// Elements are stored in the complete basis S; Phi and Upsilon are coordinate views.
enum class Basis { S, Phi, Upsilon };

Basis parse_basis(const std::string &s);
std::string basis_name(Basis b);

NSymElem one(int level);
NSymElem S(const VComp &I);
NSymElem S_n(const LPartite &n);

NSymElem mul(const NSymElem &a, const NSymElem &b);
Tensor<VComp> comul(const NSymElem &a);
Rational counit(const NSymElem &a);
// Antipode computed from the S-basis formula.
NSymElem antipode(const NSymElem &a);
// Antipode computed in Phi coordinates: S(Phi^I) = (-1)^len Phi^{rev I}.
Lin<VComp> antipode_phi(const Lin<VComp> &phi_coords);

// S-expansion of a single basis element.
NSymElem basis_element(Basis b, const VComp &I);
NSymElem to_S(Basis from, const Lin<VComp> &coords);
Lin<VComp> from_S(Basis to, const NSymElem &a);
Lin<VComp> convert(const Lin<VComp> &coords, Basis from, Basis to);

// Upsilon^I in Phi coordinates via Euler numbers.
Lin<VComp> upsilon_in_phi(const VComp &I);

NSymElem phi_n(const LPartite &n);
NSymElem upsilon_n(const LPartite &n);
NSymElem euler_chi(const LPartite &n);

} // namespace mqs::nsym
