#pragma once

#include <string>
#include <utility>
#include <vector>

#include "multiqsym/linear.hpp"

namespace mqs::posets {

// Finite poset with a unique minimum and maximum and a multirank function.
class MultigradedPoset {
public:
    // covers: pairs (lower, upper) of element indices.
    MultigradedPoset(int level, std::vector<std::string> names, const std::vector<std::pair<int, int>> &covers,
                     std::vector<LPartite> rank);

    int level() const { return level_; }
    int size() const { return static_cast<int>(names_.size()); }
    const std::string &name(int x) const { return names_[static_cast<std::size_t>(x)]; }
    int index_of(const std::string &name) const;
    const LPartite &rank(int x) const { return rank_[static_cast<std::size_t>(x)]; }
    bool leq(int x, int y) const { return leq_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]; }
    const std::vector<std::pair<int, int>> &covers() const { return covers_; }
    int bottom() const { return bottom_; }
    int top() const { return top_; }
    LPartite multirank() const { return rank(top_); }
    // Elements sorted by rank weight, so every x comes before every y > x.
    const std::vector<int> &linear_order() const { return order_; }

private:
    int level_;
    std::vector<std::string> names_;
    std::vector<std::pair<int, int>> covers_;
    std::vector<LPartite> rank_;
    std::vector<std::vector<bool>> leq_;
    std::vector<int> order_;
    int bottom_ = 0, top_ = 0;
};

MultigradedPoset interval(const MultigradedPoset &P, int x, int y);
MultigradedPoset product(const MultigradedPoset &P, const MultigradedPoset &Q);
// Boolean lattice on n atoms, atom r carrying color coloring[r].
MultigradedPoset boolean_lattice(const ColorWord &coloring, int level);

// Moebius function of [x,y] for all pairs x <= y (zero elsewhere).
std::vector<std::vector<Integer>> mobius_matrix(const MultigradedPoset &P);
Integer mobius(const MultigradedPoset &P);
bool is_eulerian(const MultigradedPoset &P);
bool is_k_eulerian(const MultigradedPoset &P, const ExtLPartite &k);

Integer flag_f(const MultigradedPoset &P, const VComp &I);
QSymElem f_homomorphism(const MultigradedPoset &P);

struct DSViolation {
    VComp I;
    std::size_t position; // 0-based column index
    Integer value;
};
std::vector<DSViolation> dehn_sommerville_check(const MultigradedPoset &P, const ExtLPartite &k);

// Elements are (absolute value, color); absolute values are exactly 1..n.
class ColoredPoset {
public:
    // relations: pairs (x, y) of element indices meaning x < y; the transitive closure is taken.
    ColoredPoset(int level, std::vector<std::pair<int, int>> elements, const std::vector<std::pair<int, int>> &relations);

    int level() const { return level_; }
    int size() const { return static_cast<int>(elems_.size()); }
    const std::vector<std::pair<int, int>> &elements() const { return elems_; }
    int index_of(const std::pair<int, int> &e) const;
    bool less(int x, int y) const { return less_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]; }
    // Strict relations (x, y) with x < y, as index pairs.
    std::vector<std::pair<int, int>> relations() const;
    LPartite mdeg() const;

private:
    int level_;
    std::vector<std::pair<int, int>> elems_;
    std::vector<std::vector<bool>> less_;
};

ColoredPoset disjoint_union(const ColoredPoset &P, const ColoredPoset &Q);
std::vector<ColoredPerm> linear_extensions(const ColoredPoset &P);
QSymElem gamma(const ColoredPoset &P);
FQSymElem gamma_hat(const ColoredPoset &P);
// Lattice of order ideals, ranked by the colored multidegree of the ideal.
MultigradedPoset j_map(const ColoredPoset &P);

} // namespace mqs::posets
