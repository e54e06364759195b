// Shorthand constructors and seeded random generators shared by the test programs.
#pragma once

#include <algorithm>
#include <initializer_list>
#include <numeric>
#include <random>
#include <vector>

#include "multiqsym/comb.hpp"
#include "multiqsym/fqsym.hpp"
#include "multiqsym/linear.hpp"
#include "multiqsym/nsym.hpp"
#include "multiqsym/posets.hpp"
#include "multiqsym/qsym.hpp"

namespace mqs::testing {

inline LPartite lp(std::initializer_list<Nat> e) { return LPartite(std::vector<Nat>(e)); }

inline VComp vc(int level, std::initializer_list<std::vector<Nat>> cols) {
    VComp out(level);
    for (const auto &c : cols)
        out.push_back(LPartite(c));
    return out;
}

// Level-1 composition from its parts.
inline VComp c1(std::initializer_list<Nat> parts) {
    VComp out(1);
    for (Nat p : parts)
        out.push_back(LPartite({p}));
    return out;
}

inline ColoredPerm cp(std::vector<int> sigma, ColorWord u) { return ColoredPerm{std::move(sigma), std::move(u)}; }

// All compositions of total weight at most w.
inline std::vector<VComp> compositions_up_to(int level, Nat w) {
    std::vector<VComp> out;
    for (Nat t = 0; t <= w; ++t)
        for (const auto &n : lpartites_of_weight(level, t))
            for (const auto &I : compositions_of(n))
                out.push_back(I);
    return out;
}

using Rng = std::mt19937_64;

inline int uniform(Rng &rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline ColorWord random_word(Rng &rng, int level, std::size_t n) {
    ColorWord u(n);
    for (auto &c : u)
        c = uniform(rng, 0, level - 1);
    return u;
}

// A random composition of total weight exactly w.
inline VComp random_vcomp(Rng &rng, int level, Nat w) {
    ColorWord u = random_word(rng, level, static_cast<std::size_t>(w));
    std::set<Nat> cuts;
    for (Nat i = 1; i < w; ++i)
        if (uniform(rng, 0, 1))
            cuts.insert(i);
    return group_positions(u, level, cuts);
}

inline Rational random_coef(Rng &rng) {
    int num = uniform(rng, -3, 3);
    if (num == 0)
        num = 1;
    return frac(num, uniform(rng, 1, 2));
}

// A random element with a few terms of total weight at most max_weight.
inline Lin<VComp> random_elem(Rng &rng, int level, Nat max_weight, int terms = 3) {
    Lin<VComp> out(level);
    for (int t = 0; t < terms; ++t)
        out.add(random_vcomp(rng, level, uniform(rng, 0, static_cast<int>(max_weight))), random_coef(rng));
    return out;
}

inline ColoredPerm random_perm(Rng &rng, int level, std::size_t n) {
    std::vector<int> s(n);
    std::iota(s.begin(), s.end(), 1);
    std::shuffle(s.begin(), s.end(), rng);
    return ColoredPerm{s, random_word(rng, level, n)};
}

inline FQSymElem random_fqsym(Rng &rng, int level, int max_n, int terms = 2) {
    FQSymElem out(level);
    for (int t = 0; t < terms; ++t)
        out.add(random_perm(rng, level, static_cast<std::size_t>(uniform(rng, 0, max_n))), random_coef(rng));
    return out;
}

// Random colored poset on n elements; relations only go up along a hidden random order.
inline posets::ColoredPoset random_colored_poset(Rng &rng, int level, int n, int percent = 35) {
    std::vector<int> abs_values(static_cast<std::size_t>(n));
    std::iota(abs_values.begin(), abs_values.end(), 1);
    std::shuffle(abs_values.begin(), abs_values.end(), rng);
    std::vector<std::pair<int, int>> elems;
    for (int v : abs_values)
        elems.emplace_back(v, uniform(rng, 0, level - 1));
    std::vector<std::pair<int, int>> rel;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (uniform(rng, 0, 99) < percent)
                rel.emplace_back(x, y);
    return posets::ColoredPoset(level, elems, rel);
}

// Random multigraded poset: the order-ideal lattice of a random colored poset.
inline posets::MultigradedPoset random_graded_poset(Rng &rng, int level, int max_elems) {
    return posets::j_map(random_colored_poset(rng, level, uniform(rng, 1, max_elems)));
}

} // namespace mqs::testing
