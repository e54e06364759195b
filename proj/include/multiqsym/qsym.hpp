#pragma once

#include <string>
#include <utility>
#include <vector>

#include "multiqsym/linear.hpp"

namespace mqs::qsym {

// Elements are stored in the monomial basis M; other bases are coordinate views.
enum class Basis { M, F, P, Eta };

Basis parse_basis(const std::string &s);
std::string basis_name(Basis b);

QSymElem one(int level);
QSymElem M(const VComp &I);

QSymElem mul(const QSymElem &a, const QSymElem &b);
Tensor<VComp> comul(const QSymElem &a);
Rational counit(const QSymElem &a);
QSymElem antipode(const QSymElem &a);

// M-expansion of a single basis element.
QSymElem basis_element(Basis b, const VComp &I);
// Coordinates in basis b interpreted as an element (returned in M).
QSymElem to_M(Basis from, const Lin<VComp> &coords);
// Coordinates of a (given in M) in basis b.
Lin<VComp> from_M(Basis to, const QSymElem &a);
Lin<VComp> convert(const Lin<VComp> &coords, Basis from, Basis to);

// Euler numbers (tan + sec).
Rational euler_number(long n);
// eta_I in P-coordinates and P_I in eta-coordinates, through Euler numbers.
Lin<VComp> eta_in_P(const VComp &I);
Lin<VComp> P_in_eta(const VComp &I);

QSymElem sym_m(const VPartition &lambda);
QSymElem sym_h(const LPartite &n);
QSymElem sym_p(const VPartition &lambda);

// alpha: list of (part, color).
using ColoredComposition = std::vector<std::pair<Nat, int>>;
QSymElem colored_monomial(int level, const ColoredComposition &alpha);
// Keeps monochromatic M_I, relabelled by their colored composition.
Lin<ColoredComposition> monochromatic_project(const QSymElem &a);

} // namespace mqs::qsym
