#pragma once

#include <map>
#include <string>
#include <vector>

#include "multiqsym/linalg.hpp"
#include "multiqsym/linear.hpp"
#include "multiqsym/qsym.hpp"

namespace mqs::subalg {

enum class Parity { Odd, Even };
Parity parse_parity(const std::string &s);

struct OddEvenSpec {
    int level;
    ExtLPartite k;
    Parity parity;
};

// A column c is allowed if c is not <= k, or its weight has the right parity.
bool column_allowed(const OddEvenSpec &spec, const LPartite &c);

std::vector<VComp> odd_basis(const OddEvenSpec &spec, const LPartite &n);
std::vector<VComp> even_basis(const OddEvenSpec &spec, const LPartite &n);
std::vector<VComp> basis(const OddEvenSpec &spec, const LPartite &n);
// M-expansion of a spanning element: P_I or eta_I for odd, M_I for even.
QSymElem basis_element(const OddEvenSpec &spec, const VComp &I, qsym::Basis odd_basis_kind = qsym::Basis::P);

enum class GenKind { Phi, Upsilon, Chi, S };
GenKind parse_gen_kind(const std::string &s);

// Degrees 0 < n <= min(k, bound) carrying a generator.
std::vector<LPartite> generator_degrees(const OddEvenSpec &spec, const LPartite &bound);
std::vector<std::pair<LPartite, NSymElem>> ideal_generators(const OddEvenSpec &spec, GenKind kind,
                                                            const LPartite &bound);
// Degree-n piece of the two-sided ideal generated by one family, in S coordinates.
EchelonSpan<VComp> ideal_piece(const OddEvenSpec &spec, GenKind kind, const LPartite &n);

// Test through the iterated coproduct and the pair of characters attached to the parity.
bool membership(const QSymElem &a, const OddEvenSpec &spec);
// Test through the span of the basis elements, degree by degree.
bool membership_span(const QSymElem &a, const OddEvenSpec &spec);

using Series = std::map<LPartite, Integer>;
Series hilbert_closed(const OddEvenSpec &spec, Nat max_weight);
Series hilbert_enumerate(const OddEvenSpec &spec, Nat max_weight);
std::vector<Integer> by_weight(const Series &s, Nat max_weight);

} // namespace mqs::subalg
