#include "multiqsym/fqsym.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace mqs::fqsym {

FQSymElem one(int level) { return FQSymElem(level, ColoredPerm{}); }

FQSymElem F(const ColoredPerm &p, int level) {
    validate(p, level);
    return FQSymElem(level, p);
}

namespace {

void shuffle_rec(const ColoredPerm &a, std::size_t i, const ColoredPerm &b, std::size_t j, int shift,
                 ColoredPerm &cur, const Rational &c, FQSymElem &out) {
    if (i == a.size() && j == b.size()) {
        out.add(cur, c);
        return;
    }
    if (i < a.size()) {
        cur.sigma.push_back(a.sigma[i]);
        cur.u.push_back(a.u[i]);
        shuffle_rec(a, i + 1, b, j, shift, cur, c, out);
        cur.sigma.pop_back();
        cur.u.pop_back();
    }
    if (j < b.size()) {
        cur.sigma.push_back(b.sigma[j] + shift);
        cur.u.push_back(b.u[j]);
        shuffle_rec(a, i, b, j + 1, shift, cur, c, out);
        cur.sigma.pop_back();
        cur.u.pop_back();
    }
}

ColoredPerm std_part(const ColoredPerm &p, std::size_t b, std::size_t e) {
    std::vector<int> s(p.sigma.begin() + static_cast<long>(b), p.sigma.begin() + static_cast<long>(e));
    ColorWord u(p.u.begin() + static_cast<long>(b), p.u.begin() + static_cast<long>(e));
    return ColoredPerm{standardize(s), u};
}

} // namespace

FQSymElem mul(const FQSymElem &a, const FQSymElem &b) {
    check_level(a.level(), b.level());
    FQSymElem out(a.level());
    for (const auto &[p, c] : a.terms())
        for (const auto &[q, d] : b.terms()) {
            ColoredPerm cur;
            shuffle_rec(p, 0, q, 0, static_cast<int>(p.size()), cur, c * d, out);
        }
    return out;
}

Tensor<ColoredPerm> comul(const FQSymElem &a) {
    Tensor<ColoredPerm> out(a.level());
    for (const auto &[p, c] : a.terms())
        for (std::size_t k = 0; k <= p.size(); ++k)
            out.add({std_part(p, 0, k), std_part(p, k, p.size())}, c);
    return out;
}

Rational counit(const FQSymElem &a) { return a.coeff(ColoredPerm{}); }

namespace {

std::mutex antipode_mutex;
std::map<std::pair<int, ColoredPerm>, FQSymElem> antipode_cache;

FQSymElem antipode_basis(const ColoredPerm &p, int level) {
    if (p.size() == 0)
        return one(level);
    {
        std::lock_guard<std::mutex> lock(antipode_mutex);
        auto it = antipode_cache.find({level, p});
        if (it != antipode_cache.end())
            return it->second;
    }
    FQSymElem out = -FQSymElem(level, p);
    for (std::size_t k = 1; k < p.size(); ++k)
        out -= mul(antipode_basis(std_part(p, 0, k), level), FQSymElem(level, std_part(p, k, p.size())));
    std::lock_guard<std::mutex> lock(antipode_mutex);
    antipode_cache.emplace(std::make_pair(level, p), out);
    return out;
}

} // namespace

FQSymElem antipode(const FQSymElem &a) {
    return apply_linear(a, a.level(), [&](const ColoredPerm &p) { return antipode_basis(p, a.level()); });
}

FQSymElem s_embed(const LPartite &n) {
    int level = n.level();
    ColorWord u;
    for (int c = 0; c < level; ++c)
        u.insert(u.end(), static_cast<std::size_t>(n[c]), c);
    std::vector<int> id(u.size());
    std::iota(id.begin(), id.end(), 1);
    FQSymElem out(level);
    do {
        out.add(ColoredPerm{id, u}, 1);
    } while (std::next_permutation(u.begin(), u.end()));
    return out;
}

QSymElem d_map(const ColoredPerm &p, int level) {
    validate(p, level);
    QSymElem out(level);
    Nat n = static_cast<Nat>(p.size());
    if (n == 0) {
        out.add(VComp(level), 1);
        return out;
    }
    std::set<Nat> des = descents(p.sigma);
    for (unsigned long mask = 0; mask < (1UL << (n - 1)); ++mask) {
        std::set<Nat> cuts;
        for (Nat i = 1; i < n; ++i)
            if (mask & (1UL << (i - 1)))
                cuts.insert(i);
        if (std::includes(cuts.begin(), cuts.end(), des.begin(), des.end()))
            out.add(group_positions(p.u, level, cuts), 1);
    }
    return out;
}

QSymElem d_map(const FQSymElem &a) {
    QSymElem out(a.level());
    for (const auto &[p, c] : a.terms())
        out.axpy(c, d_map(p, a.level()));
    return out;
}

} // namespace mqs::fqsym
