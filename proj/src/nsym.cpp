#include "multiqsym/nsym.hpp"

#include <map>
#include <mutex>

#include "multiqsym/qsym.hpp"

namespace mqs::nsym {

Basis parse_basis(const std::string &s) {
    if (s == "S")
        return Basis::S;
    if (s == "Phi")
        return Basis::Phi;
    if (s == "Upsilon")
        return Basis::Upsilon;
    throw ParseError("unknown NSym basis '" + s + "'");
}

std::string basis_name(Basis b) {
    switch (b) {
    case Basis::S:
        return "S";
    case Basis::Phi:
        return "Phi";
    case Basis::Upsilon:
        return "Upsilon";
    }
    return "?";
}

NSymElem one(int level) { return NSymElem(level, VComp(level)); }
NSymElem S(const VComp &I) { return NSymElem(I.level(), I); }

NSymElem S_n(const LPartite &n) {
    if (n.is_zero())
        return one(n.level());
    return S(VComp(n.level(), {n}));
}

NSymElem mul(const NSymElem &a, const NSymElem &b) {
    check_level(a.level(), b.level());
    NSymElem out(a.level());
    for (const auto &[I, c] : a.terms())
        for (const auto &[J, d] : b.terms())
            out.add(I.concat(J), c * d);
    return out;
}

namespace {

void comul_rec(const VComp &I, std::size_t r, VComp &left, VComp &right, const Rational &c, Tensor<VComp> &out) {
    if (r == I.len()) {
        out.add({left, right}, c);
        return;
    }
    for (const auto &a : lpartites_leq(I[r])) {
        LPartite b = I[r] - a;
        VComp l = left, rt = right;
        if (!a.is_zero())
            l.push_back(a);
        if (!b.is_zero())
            rt.push_back(b);
        comul_rec(I, r + 1, l, rt, c, out);
    }
}

} // namespace

Tensor<VComp> comul(const NSymElem &a) {
    Tensor<VComp> out(a.level());
    for (const auto &[I, c] : a.terms()) {
        VComp l(a.level()), r(a.level());
        comul_rec(I, 0, l, r, c, out);
    }
    return out;
}

Rational counit(const NSymElem &a) { return a.coeff(VComp(a.level())); }

NSymElem antipode(const NSymElem &a) {
    NSymElem out(a.level());
    for (const auto &[I, c] : a.terms())
        for (const auto &K : refinements(I, Order::Refine))
            out.add(K.reversed(), c * sign_pow(static_cast<long>(K.len())));
    return out;
}

Lin<VComp> antipode_phi(const Lin<VComp> &phi_coords) {
    Lin<VComp> out(phi_coords.level());
    for (const auto &[I, c] : phi_coords.terms())
        out.add(I.reversed(), c * sign_pow(static_cast<long>(I.len())));
    return out;
}

namespace {

NSymElem compute_basis_element(Basis b, const VComp &I) {
    NSymElem out(I.level());
    long li = static_cast<long>(I.len());
    for (const auto &J : refinements(I, Order::Refine)) {
        long lj = static_cast<long>(J.len());
        if (b == Basis::Phi)
            out.add(J, Rational(sign_pow(lj - li) * pi(I)) / len_rel(J, I));
        else
            out.add(J, Rational(sign_pow(lj - li)) / pow2(lj));
    }
    return out;
}

std::mutex cache_mutex;
std::map<std::pair<Basis, VComp>, NSymElem> cache;

} // namespace

NSymElem basis_element(Basis b, const VComp &I) {
    if (b == Basis::S)
        return S(I);
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find({b, I});
        if (it != cache.end())
            return it->second;
    }
    NSymElem e = compute_basis_element(b, I);
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(std::make_pair(b, I), e);
    return e;
}

NSymElem to_S(Basis from, const Lin<VComp> &coords) {
    if (from == Basis::S)
        return coords;
    return apply_linear(coords, coords.level(), [&](const VComp &I) { return basis_element(from, I); });
}

Lin<VComp> from_S(Basis to, const NSymElem &a) {
    Lin<VComp> out(a.level());
    if (to == Basis::S)
        return a;
    for (const auto &[I, c] : a.terms())
        for (const auto &J : refinements(I, Order::Refine)) {
            if (to == Basis::Phi)
                out.add(J, c / sp_rel(J, I));
            else
                out.add(J, c * pow2(static_cast<long>(I.len())));
        }
    return out;
}

Lin<VComp> convert(const Lin<VComp> &coords, Basis from, Basis to) {
    if (from == to)
        return coords;
    return from_S(to, to_S(from, coords));
}

Lin<VComp> upsilon_in_phi(const VComp &I) {
    Lin<VComp> out(I.level());
    long m = static_cast<long>(I.len());
    for (const auto &J : refinements(I, Order::Refine)) {
        auto blocks = refinement_blocks(I, J);
        bool odd = true;
        for (auto s : *blocks)
            odd = odd && (s % 2 == 1);
        if (!odd)
            continue;
        long lj = static_cast<long>(J.len());
        Rational c = Rational(sign_pow((lj - m) / 2)) / pow2(lj);
        std::size_t b = 0;
        for (auto s : *blocks) {
            c *= qsym::euler_number(static_cast<long>(s)) / sp(J.slice(b, b + s));
            b += s;
        }
        out.add(J, c);
    }
    return out;
}

NSymElem phi_n(const LPartite &n) {
    if (n.is_zero())
        throw DomainError("Phi_n requires n != 0");
    return basis_element(Basis::Phi, VComp(n.level(), {n}));
}

NSymElem upsilon_n(const LPartite &n) {
    if (n.is_zero())
        throw DomainError("Upsilon_n requires n != 0");
    return basis_element(Basis::Upsilon, VComp(n.level(), {n}));
}

NSymElem euler_chi(const LPartite &n) {
    if (n.is_zero())
        throw DomainError("chi_n requires n != 0");
    NSymElem out(n.level());
    for (const auto &j : lpartites_leq(n)) {
        VComp I(n.level());
        if (!j.is_zero())
            I.push_back(j);
        LPartite r = n - j;
        if (!r.is_zero())
            I.push_back(r);
        out.add(I, sign_pow(j.weight()));
    }
    return out;
}

} // namespace mqs::nsym
