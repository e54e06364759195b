#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>

#include "multiqsym/linear.hpp"

namespace mqs {

// Linear functional on QSym^(l), stored degreewise as NSym elements and built lazily.
class Functional {
public:
    using Rule = std::function<NSymElem(const Functional &self, const LPartite &n)>;

    Functional(int level, std::string name, Rule rule);

    int level() const;
    const std::string &name() const;
    NSymElem component(const LPartite &n) const;
    Rational evaluate(const QSymElem &a) const;
    // Value on the single monomial M_I.
    Rational on_M(const VComp &I) const;

    static Functional zeta(int level);
    static Functional zeta_bar(int level);
    static Functional zeta_inv(int level);
    static Functional zeta_k(const ExtLPartite &k);
    static Functional nu_k(const ExtLPartite &k);
    static Functional chi(int level);
    static Functional epsilon(int level);
    static Functional explicit_components(int level, std::map<LPartite, NSymElem> comps);
    static Functional convolve(const Functional &f, const Functional &g);
    static Functional bar(const Functional &f);
    static Functional inverse(const Functional &f);
    // a -> f(S(a)).
    static Functional compose_antipode(const Functional &f);

    // CLI names: zeta, zeta-bar, zeta-inv, zeta-k, nu-k, chi, epsilon.
    static Functional by_name(const std::string &name, int level, const ExtLPartite *k);

private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
};

// Bilinear S/M pairing.
Rational pair(const NSymElem &t, const QSymElem &a);

bool is_k_odd(const Functional &f, const ExtLPartite &k, const LPartite &bound);
bool is_k_even(const Functional &f, const ExtLPartite &k, const LPartite &bound);

// Closed forms for nu^k on M_I and F_I.
Rational nu_k_closed_M(const VComp &I, const ExtLPartite &k);
Rational nu_k_closed_F(const VComp &I, const ExtLPartite &k);

} // namespace mqs
