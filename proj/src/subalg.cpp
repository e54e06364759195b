#include "multiqsym/subalg.hpp"

#include <set>

#include "multiqsym/functionals.hpp"
#include "multiqsym/nsym.hpp"

namespace mqs::subalg {

Parity parse_parity(const std::string &s) {
    if (s == "odd")
        return Parity::Odd;
    if (s == "even")
        return Parity::Even;
    throw ParseError("parity must be 'odd' or 'even', got '" + s + "'");
}

GenKind parse_gen_kind(const std::string &s) {
    if (s == "Phi")
        return GenKind::Phi;
    if (s == "Upsilon")
        return GenKind::Upsilon;
    if (s == "Chi" || s == "chi")
        return GenKind::Chi;
    if (s == "S")
        return GenKind::S;
    throw ParseError("unknown generator family '" + s + "'");
}

bool column_allowed(const OddEvenSpec &spec, const LPartite &c) {
    if (!spec.k.contains(c))
        return true;
    bool odd = c.weight() % 2 == 1;
    return spec.parity == Parity::Odd ? odd : !odd;
}

namespace {

void check_spec(const OddEvenSpec &spec, const LPartite &n) {
    check_level(spec.level, spec.k.level());
    check_level(spec.level, n.level());
}

std::vector<VComp> filtered(const OddEvenSpec &spec, const LPartite &n) {
    check_spec(spec, n);
    std::vector<VComp> out;
    for (const auto &I : compositions_of(n)) {
        bool ok = true;
        for (const auto &c : I.cols())
            ok = ok && column_allowed(spec, c);
        if (ok)
            out.push_back(I);
    }
    return out;
}

} // namespace

std::vector<VComp> odd_basis(const OddEvenSpec &spec, const LPartite &n) {
    if (spec.parity != Parity::Odd)
        throw DomainError("odd_basis requires parity odd");
    return filtered(spec, n);
}

std::vector<VComp> even_basis(const OddEvenSpec &spec, const LPartite &n) {
    if (spec.parity != Parity::Even)
        throw DomainError("even_basis requires parity even");
    return filtered(spec, n);
}

std::vector<VComp> basis(const OddEvenSpec &spec, const LPartite &n) { return filtered(spec, n); }

QSymElem basis_element(const OddEvenSpec &spec, const VComp &I, qsym::Basis odd_basis_kind) {
    if (spec.parity == Parity::Even)
        return qsym::M(I);
    return qsym::basis_element(odd_basis_kind, I);
}

std::vector<LPartite> generator_degrees(const OddEvenSpec &spec, const LPartite &bound) {
    check_spec(spec, bound);
    std::vector<LPartite> out;
    for (const auto &n : lpartites_leq(spec.k.clamp(bound))) {
        if (n.is_zero())
            continue;
        bool even = n.weight() % 2 == 0;
        if (spec.parity == Parity::Odd ? even : !even)
            out.push_back(n);
    }
    return out;
}

namespace {

NSymElem generator(const OddEvenSpec &spec, GenKind kind, const LPartite &n) {
    if ((kind == GenKind::S) != (spec.parity == Parity::Even))
        throw DomainError("generator family S goes with parity even; Phi, Upsilon and Chi go with parity odd");
    switch (kind) {
    case GenKind::Phi:
        return nsym::phi_n(n);
    case GenKind::Upsilon:
        return nsym::upsilon_n(n);
    case GenKind::Chi:
        return nsym::euler_chi(n);
    case GenKind::S:
        return nsym::S_n(n);
    }
    return NSymElem(n.level());
}

} // namespace

std::vector<std::pair<LPartite, NSymElem>> ideal_generators(const OddEvenSpec &spec, GenKind kind,
                                                            const LPartite &bound) {
    std::vector<std::pair<LPartite, NSymElem>> out;
    for (const auto &n : generator_degrees(spec, bound))
        out.emplace_back(n, generator(spec, kind, n));
    return out;
}

EchelonSpan<VComp> ideal_piece(const OddEvenSpec &spec, GenKind kind, const LPartite &n) {
    EchelonSpan<VComp> span;
    for (const auto &[d, g] : ideal_generators(spec, kind, n)) {
        LPartite rest = n - d;
        for (const auto &a : lpartites_leq(rest)) {
            auto left = compositions_of(a);
            auto right = compositions_of(rest - a);
            for (const auto &A : left)
                for (const auto &B : right)
                    span.insert(nsym::mul(nsym::mul(nsym::S(A), g), nsym::S(B)));
        }
    }
    return span;
}

bool membership(const QSymElem &a, const OddEvenSpec &spec) {
    check_level(spec.level, a.level());
    Functional phi = Functional::zeta_bar(spec.level);
    Functional psi = spec.parity == Parity::Odd ? Functional::zeta_inv(spec.level) : Functional::zeta(spec.level);
    std::set<LPartite> degrees;
    for (const auto &[I, c] : a.terms())
        degrees.insert(I.sum());
    for (const auto &deg : degrees) {
        Tensor<VComp> acc(spec.level);
        QSymElem part = homogeneous_part(a, deg);
        for (const auto &[I, c] : part.terms()) {
            std::size_t m = I.len();
            for (std::size_t i = 0; i <= m; ++i)
                for (std::size_t j = i + 1; j <= m; ++j) {
                    VComp B = I.slice(i, j);
                    if (!spec.k.contains(B.sum()))
                        continue;
                    Rational v = phi.on_M(B) - psi.on_M(B);
                    if (v != 0)
                        acc.add({I.slice(0, i), I.slice(j, m)}, c * v);
                }
        }
        if (!acc.is_zero())
            return false;
    }
    return true;
}

bool membership_span(const QSymElem &a, const OddEvenSpec &spec) {
    check_level(spec.level, a.level());
    std::set<LPartite> degrees;
    for (const auto &[I, c] : a.terms())
        degrees.insert(I.sum());
    for (const auto &n : degrees) {
        EchelonSpan<VComp> span;
        for (const auto &I : basis(spec, n))
            span.insert(basis_element(spec, I));
        if (!span.contains(homogeneous_part(a, n)))
            return false;
    }
    return true;
}

namespace {

Series series_mul(const Series &a, const Series &b, Nat max_weight) {
    Series out;
    for (const auto &[x, c] : a)
        for (const auto &[y, d] : b) {
            LPartite z = x + y;
            if (z.weight() <= max_weight)
                out[z] += c * d;
        }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

Series series_add(Series a, const Series &b, int sign) {
    for (const auto &[x, c] : b)
        a[x] += sign * c;
    for (auto it = a.begin(); it != a.end();)
        it = it->second == 0 ? a.erase(it) : std::next(it);
    return a;
}

Series monomial(int level, int i, Nat e, Integer c) {
    std::vector<Nat> v(static_cast<std::size_t>(level), 0);
    v[static_cast<std::size_t>(i)] = e;
    return Series{{LPartite(v), c}};
}

Series series_inverse(const Series &d, int level, Nat max_weight) {
    LPartite zero = LPartite::zero(level);
    auto it = d.find(zero);
    if (it == d.end() || it->second != 1)
        throw DomainError("series inverse needs constant term 1");
    Series inv;
    for (Nat w = 0; w <= max_weight; ++w)
        for (const auto &n : lpartites_of_weight(level, w)) {
            if (w == 0) {
                inv[n] = 1;
                continue;
            }
            Integer s = 0;
            for (const auto &[x, c] : d) {
                if (x.is_zero() || !x.leq(n))
                    continue;
                auto jt = inv.find(n - x);
                if (jt != inv.end())
                    s -= c * jt->second;
            }
            if (s != 0)
                inv[n] = s;
        }
    return inv;
}

Nat floor_div2(Nat a) { return a >= 0 ? a / 2 : -((-a + 1) / 2); }

} // namespace

Series hilbert_closed(const OddEvenSpec &spec, Nat max_weight) {
    if (spec.parity != Parity::Odd)
        throw DomainError("the closed-form Hilbert series is only available for parity odd");
    int level = spec.level;
    check_level(level, spec.k.level());
    LPartite zero = LPartite::zero(level);
    Series one{{zero, 1}};

    Series num = one, prod_plus = one;
    for (int i = 0; i < level; ++i) {
        num = series_mul(num, series_add(one, monomial(level, i, 2, 1), -1), max_weight);
        prod_plus = series_mul(prod_plus, series_add(one, monomial(level, i, 1, 1), 1), max_weight);
    }
    Series den = series_add(num, prod_plus, -1);
    for (unsigned long b = 0; b < (1UL << level); ++b) {
        if (__builtin_popcountl(b) % 2 != 0)
            continue;
        Series term = one;
        for (int i = 0; i < level; ++i) {
            Nat bi = (b >> i) & 1UL;
            Series factor = one;
            Nat ki = spec.k[i];
            if (ki != kInf) {
                Nat e = 2 * floor_div2(ki - bi) + 2;
                factor = series_add(one, monomial(level, i, e, 1), -1);
            }
            if (bi)
                factor = series_mul(factor, monomial(level, i, 1, 1), max_weight);
            term = series_mul(term, factor, max_weight);
        }
        den = series_add(den, term, 1);
    }
    return series_mul(num, series_inverse(den, level, max_weight), max_weight);
}

Series hilbert_enumerate(const OddEvenSpec &spec, Nat max_weight) {
    int level = spec.level;
    check_level(level, spec.k.level());
    Series cnt;
    for (Nat w = 0; w <= max_weight; ++w)
        for (const auto &n : lpartites_of_weight(level, w)) {
            if (w == 0) {
                cnt[n] = 1;
                continue;
            }
            Integer s = 0;
            for (const auto &c : lpartites_leq(n)) {
                if (c.is_zero() || !column_allowed(spec, c))
                    continue;
                auto it = cnt.find(n - c);
                if (it != cnt.end())
                    s += it->second;
            }
            if (s != 0)
                cnt[n] = s;
        }
    return cnt;
}

std::vector<Integer> by_weight(const Series &s, Nat max_weight) {
    std::vector<Integer> out(static_cast<std::size_t>(max_weight + 1), 0);
    for (const auto &[n, c] : s)
        if (n.weight() <= max_weight)
            out[static_cast<std::size_t>(n.weight())] += c;
    return out;
}

} // namespace mqs::subalg
