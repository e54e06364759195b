#include "multiqsym/qsym.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace mqs::qsym {

Basis parse_basis(const std::string &s) {
    if (s == "M")
        return Basis::M;
    if (s == "F")
        return Basis::F;
    if (s == "P")
        return Basis::P;
    if (s == "eta" || s == "Eta")
        return Basis::Eta;
    throw ParseError("unknown QSym basis '" + s + "'");
}

std::string basis_name(Basis b) {
    switch (b) {
    case Basis::M:
        return "M";
    case Basis::F:
        return "F";
    case Basis::P:
        return "P";
    case Basis::Eta:
        return "eta";
    }
    return "?";
}

QSymElem one(int level) { return QSymElem(level, VComp(level)); }
QSymElem M(const VComp &I) { return QSymElem(I.level(), I); }

QSymElem mul(const QSymElem &a, const QSymElem &b) {
    check_level(a.level(), b.level());
    QSymElem out(a.level());
    for (const auto &[I, c] : a.terms())
        for (const auto &[J, d] : b.terms()) {
            Rational cd = c * d;
            for (const auto &K : quasi_shuffles(I, J))
                out.add(K, cd);
        }
    return out;
}

Tensor<VComp> comul(const QSymElem &a) {
    Tensor<VComp> out(a.level());
    for (const auto &[I, c] : a.terms())
        for (std::size_t k = 0; k <= I.len(); ++k)
            out.add({I.slice(0, k), I.slice(k, I.len())}, c);
    return out;
}

Rational counit(const QSymElem &a) { return a.coeff(VComp(a.level())); }

QSymElem antipode(const QSymElem &a) {
    QSymElem out(a.level());
    for (const auto &[I, c] : a.terms()) {
        Rational s = c * sign_pow(static_cast<long>(I.len()));
        for (const auto &J : coarsenings(I.reversed(), Order::Refine))
            out.add(J, s);
    }
    return out;
}

namespace {

QSymElem compute_basis_element(Basis b, const VComp &I) {
    int level = I.level();
    QSymElem out(level);
    switch (b) {
    case Basis::M:
        out.add(I, 1);
        break;
    case Basis::F:
        for (const auto &J : refinements(I, Order::Weak))
            out.add(J, 1);
        break;
    case Basis::P:
        for (const auto &J : coarsenings(I, Order::Refine))
            out.add(J, 1 / sp_rel(I, J));
        break;
    case Basis::Eta:
        for (const auto &J : coarsenings(I, Order::Refine))
            out.add(J, pow2(static_cast<long>(J.len())));
        break;
    }
    return out;
}

std::mutex cache_mutex;
std::map<std::pair<Basis, VComp>, QSymElem> cache;

} // namespace

QSymElem basis_element(Basis b, const VComp &I) {
    if (b == Basis::M)
        return M(I);
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find({b, I});
        if (it != cache.end())
            return it->second;
    }
    QSymElem e = compute_basis_element(b, I);
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(std::make_pair(b, I), e);
    return e;
}

QSymElem to_M(Basis from, const Lin<VComp> &coords) {
    if (from == Basis::M)
        return coords;
    return apply_linear(coords, coords.level(), [&](const VComp &I) { return basis_element(from, I); });
}

Lin<VComp> from_M(Basis to, const QSymElem &a) {
    int level = a.level();
    Lin<VComp> out(level);
    switch (to) {
    case Basis::M:
        return a;
    case Basis::F:
        for (const auto &[I, c] : a.terms())
            for (const auto &J : refinements(I, Order::Weak))
                out.add(J, c * sign_pow(static_cast<long>(J.len() - I.len())));
        return out;
    case Basis::Eta:
        for (const auto &[I, c] : a.terms()) {
            Rational s = c / pow2(static_cast<long>(I.len()));
            for (const auto &J : coarsenings(I, Order::Refine))
                out.add(J, s * sign_pow(static_cast<long>(I.len() - J.len())));
        }
        return out;
    case Basis::P: {
        // P_I = M_I / pi(I) + terms of smaller length; peel off the longest term.
        QSymElem rest = a;
        while (!rest.is_zero()) {
            auto it = std::prev(rest.terms().end());
            VComp I = it->first;
            Rational c = it->second * pi(I);
            out.add(I, c);
            rest.axpy(-c, basis_element(Basis::P, I));
        }
        return out;
    }
    }
    return out;
}

Lin<VComp> convert(const Lin<VComp> &coords, Basis from, Basis to) {
    if (from == to)
        return coords;
    return from_M(to, to_M(from, coords));
}

Rational euler_number(long n) {
    static std::mutex m;
    static std::vector<Rational> memo{1, 1};
    std::lock_guard<std::mutex> lock(m);
    while (static_cast<long>(memo.size()) <= n) {
        // 2 E_{k+1} = sum_{j=0}^{k} C(k,j) E_j E_{k-j}
        long k = static_cast<long>(memo.size()) - 1;
        Rational s = 0;
        Integer binom = 1;
        for (long j = 0; j <= k; ++j) {
            s += Rational(binom) * memo[static_cast<std::size_t>(j)] * memo[static_cast<std::size_t>(k - j)];
            binom = binom * (k - j) / (j + 1);
        }
        memo.push_back(s / 2);
    }
    return memo[static_cast<std::size_t>(n)];
}

namespace {

// Calls f(blocks) for every factorization of I into nonempty consecutive blocks with odd lengths.
template <class Fn>
void odd_length_factorizations(const VComp &I, Fn &&f) {
    std::size_t m = I.len();
    if (m == 0) {
        f(std::vector<std::size_t>{});
        return;
    }
    for (unsigned long mask = 0; mask < (1UL << (m - 1)); ++mask) {
        std::vector<std::size_t> sizes;
        std::size_t b = 0;
        bool ok = true;
        for (std::size_t r = 0; r < m; ++r)
            if (r + 1 == m || (mask & (1UL << r))) {
                std::size_t s = r + 1 - b;
                if (s % 2 == 0) {
                    ok = false;
                    break;
                }
                sizes.push_back(s);
                b = r + 1;
            }
        if (ok)
            f(sizes);
    }
}

} // namespace

Lin<VComp> eta_in_P(const VComp &I) {
    Lin<VComp> out(I.level());
    odd_length_factorizations(I, [&](const std::vector<std::size_t> &sizes) {
        Rational c = pow2(static_cast<long>(sizes.size()));
        std::size_t b = 0;
        for (auto s : sizes) {
            c *= frac(I.slice(b, b + s).weight(), static_cast<long>(s));
            b += s;
        }
        out.add(merge_blocks(I, sizes), c);
    });
    return out;
}

Lin<VComp> P_in_eta(const VComp &I) {
    Lin<VComp> out(I.level());
    long len = static_cast<long>(I.len());
    odd_length_factorizations(I, [&](const std::vector<std::size_t> &sizes) {
        long m = static_cast<long>(sizes.size());
        Rational c = Rational(sign_pow((len - m) / 2)) / pow2(len);
        std::size_t b = 0;
        for (auto s : sizes) {
            c *= euler_number(static_cast<long>(s)) / sp(I.slice(b, b + s));
            b += s;
        }
        out.add(merge_blocks(I, sizes), c);
    });
    return out;
}

QSymElem sym_m(const VPartition &lambda) {
    QSymElem out(lambda.level());
    std::vector<LPartite> parts = lambda.parts();
    do {
        out.add(VComp(lambda.level(), parts), 1);
    } while (std::next_permutation(parts.begin(), parts.end()));
    return out;
}

QSymElem sym_h(const LPartite &n) {
    int level = n.level();
    QSymElem out(level);
    ColorWord u;
    for (int c = 0; c < level; ++c)
        for (Nat t = 0; t < n[c]; ++t)
            u.push_back(c);
    Nat len = static_cast<Nat>(u.size());
    if (len == 0)
        return one(level);
    do {
        for (unsigned long mask = 0; mask < (1UL << (len - 1)); ++mask) {
            std::set<Nat> cuts;
            for (Nat i = 1; i < len; ++i)
                if (mask & (1UL << (i - 1)))
                    cuts.insert(i);
            out.add(group_positions(u, level, cuts), 1);
        }
    } while (std::next_permutation(u.begin(), u.end()));
    return out;
}

QSymElem sym_p(const VPartition &lambda) {
    QSymElem out = one(lambda.level());
    for (const auto &part : lambda.parts())
        out = mul(out, M(VComp(lambda.level(), {part})));
    return out;
}

QSymElem colored_monomial(int level, const ColoredComposition &alpha) {
    VComp J0(level);
    for (const auto &[a, c] : alpha) {
        if (a <= 0)
            throw DomainError("colored composition parts must be positive");
        J0.push_back(LPartite::unit(level, c).scaled(a));
    }
    QSymElem out(level);
    for (const auto &I : coarsenings(J0, Order::Strict))
        out.add(I, 1);
    return out;
}

Lin<ColoredComposition> monochromatic_project(const QSymElem &a) {
    Lin<ColoredComposition> out(a.level());
    for (const auto &[I, c] : a.terms()) {
        ColoredComposition w;
        bool mono = true;
        for (const auto &col : I.cols()) {
            auto s = col.support();
            if (s.size() != 1) {
                mono = false;
                break;
            }
            w.emplace_back(col[s[0]], s[0]);
        }
        if (mono)
            out.add(w, c);
    }
    return out;
}

} // namespace mqs::qsym
