#include "multiqsym/functionals.hpp"

#include <mutex>

#include "multiqsym/nsym.hpp"

namespace mqs {

struct Functional::Impl {
    int level;
    std::string name;
    Rule rule;
    mutable std::mutex mutex;
    mutable std::map<LPartite, NSymElem> cache;
};

Functional::Functional(int level, std::string name, Rule rule) : impl_(std::make_shared<Impl>()) {
    if (level <= 0)
        throw DomainError("level must be positive");
    impl_->level = level;
    impl_->name = std::move(name);
    impl_->rule = std::move(rule);
}

int Functional::level() const { return impl_->level; }
const std::string &Functional::name() const { return impl_->name; }

NSymElem Functional::component(const LPartite &n) const {
    check_level(level(), n.level());
    {
        std::lock_guard<std::mutex> lock(impl_->mutex);
        auto it = impl_->cache.find(n);
        if (it != impl_->cache.end())
            return it->second;
    }
    // The rule may recurse into other components, so it runs unlocked.
    NSymElem v = impl_->rule(*this, n);
    std::lock_guard<std::mutex> lock(impl_->mutex);
    impl_->cache.emplace(n, v);
    return v;
}

Rational Functional::on_M(const VComp &I) const { return component(I.sum()).coeff(I); }

Rational Functional::evaluate(const QSymElem &a) const {
    check_level(level(), a.level());
    Rational s = 0;
    for (const auto &[I, c] : a.terms())
        s += c * on_M(I);
    return s;
}

Functional Functional::zeta(int level) {
    return Functional(level, "zeta", [](const Functional &, const LPartite &n) { return nsym::S_n(n); });
}

Functional Functional::zeta_bar(int level) {
    return Functional(level, "zeta-bar", [](const Functional &, const LPartite &n) {
        return nsym::S_n(n) * Rational(sign_pow(n.weight()));
    });
}

Functional Functional::zeta_inv(int level) {
    return Functional(level, "zeta-inv",
                      [](const Functional &, const LPartite &n) { return nsym::antipode(nsym::S_n(n)); });
}

Functional Functional::zeta_k(const ExtLPartite &k) {
    return Functional(k.level(), "zeta-k", [k](const Functional &, const LPartite &n) {
        NSymElem s = nsym::S_n(n);
        if (k.contains(n))
            s *= Rational(sign_pow(n.weight()));
        return s;
    });
}

Functional Functional::nu_k(const ExtLPartite &k) {
    Functional f = convolve(compose_antipode(zeta_k(k)), zeta(k.level()));
    f.impl_->name = "nu-k";
    return f;
}

Functional Functional::chi(int level) {
    return Functional(level, "chi", [](const Functional &, const LPartite &n) {
        if (n.is_zero())
            return nsym::one(n.level());
        return nsym::euler_chi(n);
    });
}

Functional Functional::epsilon(int level) {
    return Functional(level, "epsilon", [](const Functional &, const LPartite &n) {
        return n.is_zero() ? nsym::one(n.level()) : NSymElem(n.level());
    });
}

Functional Functional::explicit_components(int level, std::map<LPartite, NSymElem> comps) {
    for (const auto &[n, v] : comps)
        for (const auto &[I, c] : v.terms())
            if (I.sum() != n)
                throw DomainError("explicit functional component is not homogeneous of degree " + to_string(n));
    auto shared = std::make_shared<const std::map<LPartite, NSymElem>>(std::move(comps));
    return Functional(level, "explicit", [shared](const Functional &, const LPartite &n) {
        auto it = shared->find(n);
        return it == shared->end() ? NSymElem(n.level()) : it->second;
    });
}

Functional Functional::convolve(const Functional &f, const Functional &g) {
    check_level(f.level(), g.level());
    return Functional(f.level(), "(" + f.name() + ")*(" + g.name() + ")",
                      [f, g](const Functional &, const LPartite &n) {
                          NSymElem out(n.level());
                          for (const auto &i : lpartites_leq(n))
                              out += nsym::mul(f.component(i), g.component(n - i));
                          return out;
                      });
}

Functional Functional::bar(const Functional &f) {
    return Functional(f.level(), "bar(" + f.name() + ")", [f](const Functional &, const LPartite &n) {
        return f.component(n) * Rational(sign_pow(n.weight()));
    });
}

Functional Functional::inverse(const Functional &f) {
    Rational c0 = nsym::counit(f.component(LPartite::zero(f.level())));
    if (c0 == 0)
        throw DomainError("functional is not invertible: its value at 1 is zero");
    return Functional(f.level(), "inv(" + f.name() + ")", [f, c0](const Functional &self, const LPartite &n) {
        if (n.is_zero())
            return nsym::one(n.level()) * (1 / c0);
        NSymElem acc(n.level());
        for (const auto &i : lpartites_leq(n)) {
            if (i.is_zero())
                continue;
            acc += nsym::mul(f.component(i), self.component(n - i));
        }
        return acc * (-1 / c0);
    });
}

Functional Functional::compose_antipode(const Functional &f) {
    return Functional(f.level(), "(" + f.name() + ")oS",
                      [f](const Functional &, const LPartite &n) { return nsym::antipode(f.component(n)); });
}

Functional Functional::by_name(const std::string &name, int level, const ExtLPartite *k) {
    if (name == "zeta")
        return zeta(level);
    if (name == "zeta-bar")
        return zeta_bar(level);
    if (name == "zeta-inv")
        return zeta_inv(level);
    if (name == "chi")
        return chi(level);
    if (name == "epsilon")
        return epsilon(level);
    if (name == "zeta-k" || name == "nu-k") {
        if (!k)
            throw DomainError("functional '" + name + "' needs a threshold k");
        check_level(level, k->level());
        return name == "zeta-k" ? zeta_k(*k) : nu_k(*k);
    }
    throw ParseError("unknown functional '" + name + "'");
}

Rational pair(const NSymElem &t, const QSymElem &a) {
    check_level(t.level(), a.level());
    Rational s = 0;
    const auto &small = t.size() <= a.size() ? t : a;
    const auto &big = t.size() <= a.size() ? a : t;
    for (const auto &[I, c] : small.terms())
        s += c * big.coeff(I);
    return s;
}

namespace {

template <class Pred>
bool check_components(const Functional &f, const ExtLPartite &k, const LPartite &bound, Pred &&pred) {
    LPartite top = k.clamp(bound);
    for (const auto &n : lpartites_leq(top))
        if (!pred(n))
            return false;
    return true;
}

} // namespace

bool is_k_odd(const Functional &f, const ExtLPartite &k, const LPartite &bound) {
    Functional fb = Functional::bar(f);
    Functional fi = Functional::inverse(f);
    return check_components(f, k, bound, [&](const LPartite &n) { return fb.component(n) == fi.component(n); });
}

bool is_k_even(const Functional &f, const ExtLPartite &k, const LPartite &bound) {
    Functional fb = Functional::bar(f);
    return check_components(f, k, bound, [&](const LPartite &n) { return fb.component(n) == f.component(n); });
}

Rational nu_k_closed_M(const VComp &I, const ExtLPartite &k) {
    if (I.empty())
        return 1;
    LPartite n = I.sum();
    const LPartite &last = I.back();
    long m = static_cast<long>(I.len());
    long w = I.weight();
    if (last.weight() % 2 == 1 && k.contains(n))
        return 2 * sign_pow(m + w);
    if ((w - last.weight()) % 2 == 1 && k.contains(n - last) && !k.contains(n))
        return 2 * sign_pow(m);
    return 0;
}

Rational nu_k_closed_F(const VComp &I, const ExtLPartite &k) {
    if (I.empty())
        return 1;
    for (std::size_t r = 0; r + 1 < I.len(); ++r)
        if (I[r].weight() != 1)
            return 0;
    VComp E = I.slice(0, I.len() - 1);
    const LPartite &i = I.back();
    LPartite sE = E.sum();
    long e = E.weight();
    if (k.contains(I.sum()))
        return 2;
    if (e % 2 == 1 && k.contains(sE))
        return 2;
    if (e % 2 == 0 && i.weight() > 1 && k.contains(sE + LPartite::unit(I.level(), i.support().front())))
        return 2;
    return 0;
}

} // namespace mqs
