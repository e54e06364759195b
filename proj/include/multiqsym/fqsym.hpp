#pragma once

#include "multiqsym/linear.hpp"

namespace mqs::fqsym {

FQSymElem one(int level);
FQSymElem F(const ColoredPerm &p, int level);

// Shifted shuffle, colors carried along.
FQSymElem mul(const FQSymElem &a, const FQSymElem &b);
// Deconcatenation with both halves standardized.
Tensor<ColoredPerm> comul(const FQSymElem &a);
Rational counit(const FQSymElem &a);
// Computed by the recursion S(x) = -x - sum S(x') x'' over proper splits.
FQSymElem antipode(const FQSymElem &a);

// Sum of F_{12..N,u} over color words u of multidegree n.
FQSymElem s_embed(const LPartite &n);
// Abelianization onto QSym, returned in the M basis.
QSymElem d_map(const FQSymElem &a);
QSymElem d_map(const ColoredPerm &p, int level);

} // namespace mqs::fqsym
