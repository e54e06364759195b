#include "multiqsym/posets.hpp"

#include <algorithm>
#include <map>

#include "multiqsym/fqsym.hpp"

namespace mqs::posets {

namespace {

using BoolMatrix = std::vector<std::vector<bool>>;

// Reflexive-transitive closure of a relation on n points; throws on a cycle.
BoolMatrix closure(int n, const std::vector<std::pair<int, int>> &rel) {
    BoolMatrix m(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
    for (int i = 0; i < n; ++i)
        m[i][i] = true;
    for (auto [a, b] : rel)
        m[a][b] = true;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (m[i][k])
                for (int j = 0; j < n; ++j)
                    if (m[k][j])
                        m[i][j] = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && m[i][j] && m[j][i])
                throw DomainError("the relation has a cycle");
    return m;
}

void check_index(int x, int n) {
    if (x < 0 || x >= n)
        throw DomainError("element index " + std::to_string(x) + " out of range");
}

} // namespace

MultigradedPoset::MultigradedPoset(int level, std::vector<std::string> names,
                                   const std::vector<std::pair<int, int>> &covers, std::vector<LPartite> rank)
    : level_(level), names_(std::move(names)), covers_(covers), rank_(std::move(rank)) {
    if (level <= 0)
        throw DomainError("level must be positive");
    int n = size();
    if (n == 0)
        throw DomainError("a multigraded poset needs at least one element");
    if (static_cast<int>(rank_.size()) != n)
        throw DomainError("every element needs a rank");
    {
        std::vector<std::string> sorted = names_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw DomainError("element names must be distinct");
    }
    for (const auto &r : rank_)
        check_level(level, r.level());
    for (auto [a, b] : covers_) {
        check_index(a, n);
        check_index(b, n);
        if (!rank_[a].leq(rank_[b]) || (rank_[b] - rank_[a]).weight() != 1)
            throw DomainError("cover " + names_[a] + " < " + names_[b] + " does not raise the rank by one unit vector");
    }
    std::sort(covers_.begin(), covers_.end());
    covers_.erase(std::unique(covers_.begin(), covers_.end()), covers_.end());
    leq_ = closure(n, covers_);
    int bottoms = 0, tops = 0;
    for (int x = 0; x < n; ++x) {
        bool is_bottom = true, is_top = true;
        for (int y = 0; y < n; ++y) {
            is_bottom = is_bottom && leq_[x][y];
            is_top = is_top && leq_[y][x];
        }
        if (is_bottom) {
            bottom_ = x;
            ++bottoms;
        }
        if (is_top) {
            top_ = x;
            ++tops;
        }
    }
    if (bottoms != 1 || tops != 1)
        throw DomainError("a multigraded poset needs a unique minimum and a unique maximum");
    if (!rank_[bottom_].is_zero())
        throw DomainError("the minimum must have rank 0");
    order_.resize(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x)
        order_[x] = x;
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return rank_[a].weight() < rank_[b].weight(); });
}

int MultigradedPoset::index_of(const std::string &name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end())
        throw DomainError("unknown element '" + name + "'");
    return static_cast<int>(it - names_.begin());
}

MultigradedPoset interval(const MultigradedPoset &P, int x, int y) {
    check_index(x, P.size());
    check_index(y, P.size());
    if (!P.leq(x, y))
        throw DomainError("interval requires x <= y");
    std::vector<int> keep, where(static_cast<std::size_t>(P.size()), -1);
    for (int z = 0; z < P.size(); ++z)
        if (P.leq(x, z) && P.leq(z, y)) {
            where[z] = static_cast<int>(keep.size());
            keep.push_back(z);
        }
    std::vector<std::string> names;
    std::vector<LPartite> rank;
    for (int z : keep) {
        names.push_back(P.name(z));
        rank.push_back(P.rank(z) - P.rank(x));
    }
    std::vector<std::pair<int, int>> covers;
    for (auto [a, b] : P.covers())
        if (where[a] >= 0 && where[b] >= 0)
            covers.emplace_back(where[a], where[b]);
    return MultigradedPoset(P.level(), names, covers, rank);
}

MultigradedPoset product(const MultigradedPoset &P, const MultigradedPoset &Q) {
    check_level(P.level(), Q.level());
    int q = Q.size();
    auto id = [q](int a, int b) { return a * q + b; };
    std::vector<std::string> names;
    std::vector<LPartite> rank;
    for (int a = 0; a < P.size(); ++a)
        for (int b = 0; b < q; ++b) {
            names.push_back("(" + P.name(a) + "," + Q.name(b) + ")");
            rank.push_back(P.rank(a) + Q.rank(b));
        }
    std::vector<std::pair<int, int>> covers;
    for (auto [a, a2] : P.covers())
        for (int b = 0; b < q; ++b)
            covers.emplace_back(id(a, b), id(a2, b));
    for (int a = 0; a < P.size(); ++a)
        for (auto [b, b2] : Q.covers())
            covers.emplace_back(id(a, b), id(a, b2));
    return MultigradedPoset(P.level(), names, covers, rank);
}

MultigradedPoset boolean_lattice(const ColorWord &coloring, int level) {
    int n = static_cast<int>(coloring.size());
    if (n > 20)
        throw DomainError("boolean lattice too large");
    for (int c : coloring)
        if (c < 0 || c >= level)
            throw DomainError("color out of range");
    std::vector<std::string> names;
    std::vector<LPartite> rank;
    std::vector<std::pair<int, int>> covers;
    for (int s = 0; s < (1 << n); ++s) {
        std::string name = "{";
        std::vector<Nat> r(static_cast<std::size_t>(level), 0);
        for (int i = 0; i < n; ++i)
            if (s & (1 << i)) {
                if (name.size() > 1)
                    name += ",";
                name += std::to_string(i + 1);
                ++r[static_cast<std::size_t>(coloring[i])];
            } else {
                covers.emplace_back(s, s | (1 << i));
            }
        names.push_back(name + "}");
        rank.emplace_back(r);
    }
    return MultigradedPoset(level, names, covers, rank);
}

std::vector<std::vector<Integer>> mobius_matrix(const MultigradedPoset &P) {
    int n = P.size();
    std::vector<std::vector<Integer>> mu(static_cast<std::size_t>(n), std::vector<Integer>(static_cast<std::size_t>(n), 0));
    const auto &ord = P.linear_order();
    for (int x = 0; x < n; ++x) {
        mu[x][x] = 1;
        for (int y : ord) {
            if (y == x || !P.leq(x, y))
                continue;
            Integer s = 0;
            for (int z = 0; z < n; ++z)
                if (z != y && P.leq(x, z) && P.leq(z, y))
                    s += mu[x][z];
            mu[x][y] = -s;
        }
    }
    return mu;
}

Integer mobius(const MultigradedPoset &P) { return mobius_matrix(P)[P.bottom()][P.top()]; }

bool is_eulerian(const MultigradedPoset &P) {
    return is_k_eulerian(P, ExtLPartite::infinite(P.level()));
}

bool is_k_eulerian(const MultigradedPoset &P, const ExtLPartite &k) {
    check_level(P.level(), k.level());
    auto mu = mobius_matrix(P);
    for (int x = 0; x < P.size(); ++x)
        for (int y = 0; y < P.size(); ++y) {
            if (!P.leq(x, y))
                continue;
            LPartite d = P.rank(y) - P.rank(x);
            if (k.contains(d) && mu[x][y] != sign_pow(d.weight()))
                return false;
        }
    return true;
}

Integer flag_f(const MultigradedPoset &P, const VComp &I) {
    check_level(P.level(), I.level());
    if (I.sum() != P.multirank() && !(I.empty() && P.multirank().is_zero()))
        throw DomainError("flag_f requires the columns of I to sum to the multirank of P");
    std::vector<Integer> cur(static_cast<std::size_t>(P.size()), 0);
    cur[P.bottom()] = 1;
    for (const auto &col : I.cols()) {
        std::vector<Integer> next(cur.size(), 0);
        for (int x = 0; x < P.size(); ++x) {
            if (cur[x] == 0)
                continue;
            for (int y = 0; y < P.size(); ++y)
                if (P.leq(x, y) && P.rank(y) - P.rank(x) == col)
                    next[y] += cur[x];
        }
        cur = std::move(next);
    }
    return cur[P.top()];
}

QSymElem f_homomorphism(const MultigradedPoset &P) {
    int n = P.size();
    std::vector<QSymElem> chains(static_cast<std::size_t>(n), QSymElem(P.level()));
    chains[P.bottom()].add(VComp(P.level()), 1);
    for (int y : P.linear_order()) {
        if (y == P.bottom())
            continue;
        for (int x = 0; x < n; ++x) {
            if (x == y || !P.leq(x, y))
                continue;
            LPartite d = P.rank(y) - P.rank(x);
            for (const auto &[I, c] : chains[x].terms()) {
                VComp J = I;
                J.push_back(d);
                chains[y].add(J, c);
            }
        }
    }
    return chains[P.top()];
}

std::vector<DSViolation> dehn_sommerville_check(const MultigradedPoset &P, const ExtLPartite &k) {
    check_level(P.level(), k.level());
    QSymElem f = f_homomorphism(P);
    std::vector<DSViolation> out;
    for (const auto &I : compositions_of(P.multirank()))
        for (std::size_t r = 0; r < I.len(); ++r) {
            if (!k.contains(I[r]))
                continue;
            Rational s = 0;
            for (const auto &j : lpartites_leq(I[r])) {
                VComp J = I.slice(0, r);
                if (!j.is_zero())
                    J.push_back(j);
                if (!(I[r] - j).is_zero())
                    J.push_back(I[r] - j);
                J = J.concat(I.slice(r + 1, I.len()));
                s += sign_pow(j.weight()) * f.coeff(J);
            }
            if (s != 0)
                out.push_back(DSViolation{I, r, s.get_num()});
        }
    return out;
}

ColoredPoset::ColoredPoset(int level, std::vector<std::pair<int, int>> elements,
                           const std::vector<std::pair<int, int>> &relations)
    : level_(level), elems_(std::move(elements)) {
    if (level <= 0)
        throw DomainError("level must be positive");
    int n = size();
    std::vector<int> abs;
    for (auto [a, c] : elems_) {
        if (c < 0 || c >= level)
            throw DomainError("color out of range");
        abs.push_back(a);
    }
    std::sort(abs.begin(), abs.end());
    for (int i = 0; i < n; ++i)
        if (abs[i] != i + 1)
            throw DomainError("absolute values of a colored poset must be exactly 1..n");
    for (auto [x, y] : relations) {
        check_index(x, n);
        check_index(y, n);
        if (x == y)
            throw DomainError("an element cannot be below itself");
    }
    less_ = closure(n, relations);
    for (int i = 0; i < n; ++i)
        less_[i][i] = false;
}

int ColoredPoset::index_of(const std::pair<int, int> &e) const {
    auto it = std::find(elems_.begin(), elems_.end(), e);
    if (it == elems_.end())
        throw DomainError("unknown element (" + std::to_string(e.first) + "," + std::to_string(e.second) + ")");
    return static_cast<int>(it - elems_.begin());
}

std::vector<std::pair<int, int>> ColoredPoset::relations() const {
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < size(); ++x)
        for (int y = 0; y < size(); ++y)
            if (less(x, y))
                out.emplace_back(x, y);
    return out;
}

LPartite ColoredPoset::mdeg() const {
    std::vector<Nat> v(static_cast<std::size_t>(level_), 0);
    for (auto [a, c] : elems_)
        ++v[static_cast<std::size_t>(c)];
    return LPartite(v);
}

ColoredPoset disjoint_union(const ColoredPoset &P, const ColoredPoset &Q) {
    check_level(P.level(), Q.level());
    auto elems = P.elements();
    for (auto [a, c] : Q.elements())
        elems.emplace_back(a + P.size(), c);
    auto rel = P.relations();
    for (auto [x, y] : Q.relations())
        rel.emplace_back(x + P.size(), y + P.size());
    return ColoredPoset(P.level(), elems, rel);
}

namespace {

void extensions_rec(const ColoredPoset &P, std::vector<bool> &used, ColoredPerm &cur, std::vector<ColoredPerm> &out) {
    int n = P.size();
    if (static_cast<int>(cur.size()) == n) {
        out.push_back(cur);
        return;
    }
    for (int x = 0; x < n; ++x) {
        if (used[x])
            continue;
        bool minimal = true;
        for (int y = 0; y < n && minimal; ++y)
            minimal = used[y] || !P.less(y, x);
        if (!minimal)
            continue;
        used[x] = true;
        cur.sigma.push_back(P.elements()[x].first);
        cur.u.push_back(P.elements()[x].second);
        extensions_rec(P, used, cur, out);
        cur.sigma.pop_back();
        cur.u.pop_back();
        used[x] = false;
    }
}

} // namespace

std::vector<ColoredPerm> linear_extensions(const ColoredPoset &P) {
    std::vector<bool> used(static_cast<std::size_t>(P.size()), false);
    ColoredPerm cur;
    std::vector<ColoredPerm> out;
    extensions_rec(P, used, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

QSymElem gamma(const ColoredPoset &P) {
    int level = P.level();
    QSymElem out(level);
    for (const auto &p : linear_extensions(P)) {
        VComp w = wdes(p, level);
        for (const auto &I : coarsenings(e_u(p.u, level), Order::Refine))
            if (refines(w, I, Order::Refine))
                out.add(I, 1);
    }
    return out;
}

FQSymElem gamma_hat(const ColoredPoset &P) {
    FQSymElem out(P.level());
    for (const auto &p : linear_extensions(P))
        out.add(p, 1);
    return out;
}

MultigradedPoset j_map(const ColoredPoset &P) {
    int n = P.size();
    if (n > 20)
        throw DomainError("colored poset too large for the order-ideal lattice");
    std::vector<unsigned> below(static_cast<std::size_t>(n), 0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (P.less(y, x))
                below[x] |= 1U << y;
    std::map<unsigned, int> index;
    std::vector<unsigned> ideals;
    for (unsigned s = 0; s < (1U << n); ++s) {
        bool ideal = true;
        for (int x = 0; x < n && ideal; ++x)
            if (s & (1U << x))
                ideal = (below[x] & ~s) == 0;
        if (ideal) {
            index[s] = static_cast<int>(ideals.size());
            ideals.push_back(s);
        }
    }
    std::vector<std::string> names;
    std::vector<LPartite> rank;
    std::vector<std::pair<int, int>> covers;
    for (unsigned s : ideals) {
        std::vector<int> abs;
        std::vector<Nat> r(static_cast<std::size_t>(P.level()), 0);
        for (int x = 0; x < n; ++x)
            if (s & (1U << x)) {
                abs.push_back(P.elements()[x].first);
                ++r[static_cast<std::size_t>(P.elements()[x].second)];
            } else if (index.count(s | (1U << x))) {
                covers.emplace_back(index[s], index[s | (1U << x)]);
            }
        std::sort(abs.begin(), abs.end());
        std::string name = "{";
        for (std::size_t i = 0; i < abs.size(); ++i)
            name += (i ? "," : "") + std::to_string(abs[i]);
        names.push_back(name + "}");
        rank.emplace_back(r);
    }
    return MultigradedPoset(P.level(), names, covers, rank);
}

} // namespace mqs::posets
