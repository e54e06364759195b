#pragma once

#include <set>

#include "multiqsym/functionals.hpp"
#include "multiqsym/linear.hpp"
#include "multiqsym/qsym.hpp"

namespace mqs::theta {

struct PeakPair {
    std::set<Nat> S;
    ColorWord u;

    auto operator<=>(const PeakPair &) const = default;
    bool operator==(const PeakPair &) const = default;
};

// Coalgebra morphism QSym -> QSym induced by the functional f (blocks are nonempty).
QSymElem induced_map(const Functional &f, const QSymElem &a);

QSymElem peak_function(const std::set<Nat> &S, const ColorWord &u, int level);
bool admissible(const std::set<Nat> &S, const ColorWord &u, int level);

// Closed forms of the descents-to-peaks map on M_I and on F_I.
QSymElem theta_M(const VComp &I);
QSymElem theta_F(const VComp &I);
// Input given as coordinates in basis M or F.
QSymElem theta_inf(const Lin<VComp> &coords, qsym::Basis in);

// eta_I (I odd) as a combination of peak functions, and theta_{S,u} (admissible) in the eta basis.
Lin<PeakPair> eta_to_theta(const VComp &I);
Lin<VComp> theta_to_eta(const PeakPair &p, int level);

// Level 1 only: the image of F_I under the map induced by nu^(k).
QSymElem theta_k_level1_F(const VComp &I, Nat k);
QSymElem theta_k_level1(const Lin<VComp> &F_coords, Nat k);

} // namespace mqs::theta
