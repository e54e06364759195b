#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "multiqsym/rational.hpp"

namespace mqs {

using Nat = long;
inline constexpr Nat kInf = std::numeric_limits<Nat>::max();

// An l-partite number: l naturals, color 0 first.
class LPartite {
public:
    LPartite() = default;
    explicit LPartite(std::vector<Nat> entries);
    static LPartite zero(int level);
    static LPartite unit(int level, int color);

    int level() const { return static_cast<int>(e_.size()); }
    Nat operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
    const std::vector<Nat> &entries() const { return e_; }

    Nat weight() const;
    std::vector<int> support() const;
    bool is_zero() const;
    bool leq(const LPartite &o) const;

    LPartite operator+(const LPartite &o) const;
    LPartite operator-(const LPartite &o) const;
    LPartite scaled(Nat c) const;

    auto operator<=>(const LPartite &) const = default;
    bool operator==(const LPartite &) const = default;

private:
    std::vector<Nat> e_;
};

// Threshold vector whose entries may be infinite (kInf).
class ExtLPartite {
public:
    ExtLPartite() = default;
    explicit ExtLPartite(std::vector<Nat> entries);
    explicit ExtLPartite(const LPartite &n) : ExtLPartite(n.entries()) {}
    static ExtLPartite infinite(int level);

    int level() const { return static_cast<int>(e_.size()); }
    Nat operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
    const std::vector<Nat> &entries() const { return e_; }
    bool is_finite() const;
    // n <= k componentwise.
    bool contains(const LPartite &n) const;
    // Componentwise min with a finite bound.
    LPartite clamp(const LPartite &bound) const;

    bool operator==(const ExtLPartite &) const = default;

private:
    std::vector<Nat> e_;
};

// Ordered list of nonzero columns of a common level.
class VComp {
public:
    VComp() = default;
    explicit VComp(int level) : level_(level) {}
    VComp(int level, std::vector<LPartite> cols);

    int level() const { return level_; }
    std::size_t len() const { return cols_.size(); }
    bool empty() const { return cols_.empty(); }
    const std::vector<LPartite> &cols() const { return cols_; }
    const LPartite &operator[](std::size_t i) const { return cols_[i]; }
    const LPartite &back() const { return cols_.back(); }

    Nat weight() const;
    LPartite sum() const;
    VComp reversed() const;
    VComp concat(const VComp &o) const;
    VComp slice(std::size_t b, std::size_t e) const;
    void push_back(const LPartite &c);

    // Canonical order: length, then columns lexicographically.
    friend std::strong_ordering operator<=>(const VComp &a, const VComp &b);
    friend bool operator==(const VComp &a, const VComp &b) {
        return a.level_ == b.level_ && a.cols_ == b.cols_;
    }

private:
    int level_ = 0;
    std::vector<LPartite> cols_;
};

using ColorWord = std::vector<int>;

struct ColoredPerm {
    std::vector<int> sigma;
    ColorWord u;

    std::size_t size() const { return sigma.size(); }
    auto operator<=>(const ColoredPerm &) const = default;
    bool operator==(const ColoredPerm &) const = default;
};

// Multiset of nonzero columns, kept sorted.
class VPartition {
public:
    VPartition() = default;
    VPartition(int level, std::vector<LPartite> parts);
    int level() const { return level_; }
    const std::vector<LPartite> &parts() const { return parts_; }
    LPartite sum() const;
    Rational z() const;
    bool operator==(const VPartition &) const = default;

private:
    int level_ = 0;
    std::vector<LPartite> parts_;
};

enum class Order { Refine, Weak, Strict };

void check_level(int a, int b);

// All m with 0 <= m <= n, lexicographic.
std::vector<LPartite> lpartites_leq(const LPartite &n);
// All n of the given level with total weight exactly w.
std::vector<LPartite> lpartites_of_weight(int level, Nat w);

std::vector<VComp> compositions_of(const LPartite &n);
std::size_t count_compositions(const LPartite &n);

// True iff J refines I under the chosen order (I is the coarser one).
bool refines(const VComp &I, const VComp &J, Order order);
// Block sizes of J witnessing I <| J, if any.
std::optional<std::vector<std::size_t>> refinement_blocks(const VComp &I, const VComp &J);
// All J with I <=_order J.
std::vector<VComp> refinements(const VComp &I, Order order);
// All I with I <=_order J.
std::vector<VComp> coarsenings(const VComp &J, Order order);
// Merge consecutive columns of J; sizes must sum to len(J).
VComp merge_blocks(const VComp &J, const std::vector<std::size_t> &sizes);

std::set<Nat> dof(const VComp &I);
ColorWord cof(const VComp &I);
VComp from_dof_cof(int level, Nat n, const std::set<Nat> &S, const ColorWord &w);

std::set<Nat> descents(const std::vector<int> &w);
std::set<Nat> peaks(const std::vector<int> &w);
LPartite mdeg(const ColorWord &u, int level);
VComp e_u(const ColorWord &u, int level);
// Columns of E_u summed between consecutive cut positions.
VComp group_positions(const ColorWord &u, int level, const std::set<Nat> &cuts);
VComp wdes(const ColoredPerm &p, int level);
std::vector<int> standardize(const std::vector<int> &w);
void validate(const ColoredPerm &p, int level);

bool is_odd(const VComp &I);
VComp peak_lambda(const VComp &I);
std::set<Nat> pof(const VComp &I);
VComp odd_part(const VComp &I);
VComp tilde(const VComp &I);
bool is_peak_set(const std::set<Nat> &S, Nat n);
// The composition with column weights in {1,2}, coloring word u and pof S.
std::optional<VComp> i_su(const std::set<Nat> &S, const ColorWord &u, int level);

using LetterLess = std::function<bool(const LPartite &, const LPartite &)>;
bool is_lyndon(const VComp &I, const LetterLess &less = {});

std::vector<VComp> quasi_shuffles(const VComp &I, const VComp &J);
std::vector<VComp> shuffles(const VComp &I, const VComp &J);
std::vector<std::vector<VComp>> concat_splits(const VComp &I, std::size_t m);

VPartition cols_of(const VComp &I);

Nat pi(const VComp &I);
Rational sp(const VComp &I);
// For I <| J with blocks J_k: product of len(J_k), resp. of sp(J_k).
Nat len_rel(const VComp &J, const VComp &I);
Rational sp_rel(const VComp &J, const VComp &I);

std::string to_string(const LPartite &n);
std::string to_string(const VComp &I);

} // namespace mqs
