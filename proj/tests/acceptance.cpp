// Acceptance run: one PASS/FAIL line per criterion, followed by diagnostics for failed checks.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "multiqsym/functionals.hpp"
#include "multiqsym/json_io.hpp"
#include "multiqsym/subalg.hpp"
#include "multiqsym/theta.hpp"
#include "support.hpp"

using namespace mqs;
using namespace mqs::testing;
using posets::ColoredPoset;
using posets::MultigradedPoset;
using subalg::OddEvenSpec;
using subalg::Parity;
using theta::PeakPair;

namespace {

class Report {
public:
    Report(int id, std::string title) : id_(id), title_(std::move(title)), start_(std::chrono::steady_clock::now()) {}

    template <class Msg>
    void expect(bool cond, Msg &&msg) {
        ++checks_;
        if (cond)
            return;
        ++failed_;
        if (notes_.size() < 12) {
            if constexpr (std::is_invocable_v<Msg>)
                notes_.push_back(msg());
            else
                notes_.push_back(std::string(msg));
        }
    }

    bool print() const {
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        std::printf("criterion %d: %s  %s (%ld checks, %ld failed, %.1fs)\n", id_, failed_ == 0 ? "PASS" : "FAIL",
                    title_.c_str(), checks_, failed_, secs);
        for (const auto &n : notes_)
            std::printf("    - %s\n", n.c_str());
        std::fflush(stdout);
        return failed_ == 0;
    }

private:
    int id_;
    std::string title_;
    std::chrono::steady_clock::time_point start_;
    long checks_ = 0, failed_ = 0;
    std::vector<std::string> notes_;
};

std::string show(const Lin<VComp> &a, const std::string &b = "M") { return io::pretty(b, a); }
std::string show(const VComp &I) { return io::compact(I); }
std::string show(const LPartite &n) { return io::to_json(n).dump(); }

template <class K>
std::string show_keys(const std::set<K> &s) {
    std::string out;
    for (const auto &k : s)
        out += (out.empty() ? "" : " ") + show(k);
    return out.empty() ? "(none)" : out;
}

template <class K>
std::pair<std::set<K>, std::set<K>> set_diff(const std::set<K> &got, const std::set<K> &want) {
    std::set<K> extra, missing;
    std::set_difference(got.begin(), got.end(), want.begin(), want.end(), std::inserter(extra, extra.end()));
    std::set_difference(want.begin(), want.end(), got.begin(), got.end(), std::inserter(missing, missing.end()));
    return {extra, missing};
}

OddEvenSpec odd_spec(const ExtLPartite &k) { return {k.level(), k, Parity::Odd}; }

ExtLPartite ext(std::vector<Nat> v) { return ExtLPartite(std::move(v)); }

QSymElem Mv(int level, std::initializer_list<std::vector<Nat>> cols) { return qsym::M(vc(level, cols)); }

std::vector<LPartite> degrees_up_to(int level, Nat w) {
    std::vector<LPartite> out;
    for (Nat v = 1; v <= w; ++v)
        for (const auto &n : lpartites_of_weight(level, v))
            out.push_back(n);
    return out;
}

// ---------------------------------------------------------------------------------------------
// 1. Worked examples
// ---------------------------------------------------------------------------------------------

bool golden() {
    Report r(1, "worked examples");

    QSymElem prod = qsym::mul(Mv(2, {{1, 0}, {3, 2}}), Mv(2, {{2, 5}, {1, 0}}));
    // The reference lists the coefficient-2 term with last column (0,2); that breaks the degree, so (3,2) is used.
    QSymElem prod_ref = Mv(2, {{1, 0}, {3, 2}, {2, 5}, {1, 0}}) + Mv(2, {{1, 0}, {5, 7}, {1, 0}}) +
                        Mv(2, {{1, 0}, {2, 5}, {3, 2}, {1, 0}}) + Mv(2, {{1, 0}, {2, 5}, {4, 2}}) +
                        Mv(2, {{1, 0}, {2, 5}, {1, 0}, {3, 2}}) + Mv(2, {{3, 5}, {3, 2}, {1, 0}}) +
                        Mv(2, {{3, 5}, {4, 2}}) + Mv(2, {{3, 5}, {1, 0}, {3, 2}}) +
                        Mv(2, {{2, 5}, {1, 0}, {3, 2}, {1, 0}}) + Mv(2, {{2, 5}, {1, 0}, {4, 2}}) +
                        Mv(2, {{2, 5}, {2, 0}, {3, 2}}) + 2 * Mv(2, {{2, 5}, {1, 0}, {1, 0}, {3, 2}});
    r.expect(prod == prod_ref && prod.size() == 12, [&] { return "M-product: got " + show(prod); });

    QSymElem F = qsym::basis_element(qsym::Basis::F, vc(3, {{2, 0, 1}, {0, 1, 0}}));
    QSymElem F_ref = Mv(3, {{2, 0, 1}, {0, 1, 0}}) + Mv(3, {{2, 0, 0}, {0, 0, 1}, {0, 1, 0}}) +
                     Mv(3, {{1, 0, 0}, {1, 0, 1}, {0, 1, 0}}) + Mv(3, {{1, 0, 0}, {1, 0, 0}, {0, 0, 1}, {0, 1, 0}});
    r.expect(F == F_ref, [&] { return "F-expansion: got " + show(F); });

    Lin<VComp> fprod = qsym::from_M(qsym::Basis::F, qsym::mul(qsym::basis_element(qsym::Basis::F, vc(3, {{1, 0, 0}, {0, 0, 1}})),
                                                             qsym::basis_element(qsym::Basis::F, vc(3, {{0, 1, 0}}))));
    Lin<VComp> fprod_ref(3);
    fprod_ref.add(vc(3, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}), 1);
    fprod_ref.add(vc(3, {{1, 1, 0}, {0, 0, 1}}), 1);
    fprod_ref.add(vc(3, {{1, 0, 0}, {0, 1, 1}}), 1);
    fprod_ref.add(vc(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), -1);
    fprod_ref.add(vc(3, {{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}), 1);
    r.expect(fprod == fprod_ref, [&] { return "signed F-product: got " + show(fprod, "F"); });

    VComp big = vc(2, {{1, 4}, {0, 3}, {2, 0}});
    Tensor<VComp> dm_ref(2);
    for (std::size_t c = 0; c <= big.len(); ++c)
        dm_ref.add({big.slice(0, c), big.slice(c, big.len())}, 1);
    r.expect(qsym::comul(qsym::M(big)) == dm_ref && dm_ref.size() == 4, "coproduct of M");

    Tensor<VComp> ds_ref(2);
    for (const auto &i : lpartites_leq(lp({2, 1}))) {
        VComp L(2), R(2);
        if (!i.is_zero())
            L.push_back(i);
        if (!(lp({2, 1}) - i).is_zero())
            R.push_back(lp({2, 1}) - i);
        ds_ref.add({L, R}, 1);
    }
    r.expect(nsym::comul(nsym::S_n(lp({2, 1}))) == ds_ref && ds_ref.size() == 6, "coproduct of S_(2,1)");

    auto Fp = [](std::vector<int> s, ColorWord u) { return fqsym::F(ColoredPerm{std::move(s), std::move(u)}, 3); };
    FQSymElem fq = fqsym::mul(Fp({2, 1}, {0, 2}), Fp({1, 2}, {1, 0}));
    FQSymElem fq_ref = Fp({2, 1, 3, 4}, {0, 2, 1, 0}) + Fp({2, 3, 1, 4}, {0, 1, 2, 0}) + Fp({2, 3, 4, 1}, {0, 1, 0, 2}) +
                       Fp({3, 2, 4, 1}, {1, 0, 0, 2}) + Fp({3, 2, 1, 4}, {1, 0, 2, 0}) + Fp({3, 4, 2, 1}, {1, 0, 0, 2});
    r.expect(fq == fq_ref && fq.size() == 6, "FQSym product");
    ColoredPerm e{}, w{{1, 4, 2, 3}, {0, 0, 2, 1}};
    Tensor<ColoredPerm> fqd_ref(3);
    fqd_ref.add({e, w}, 1);
    fqd_ref.add({ColoredPerm{{1}, {0}}, ColoredPerm{{3, 1, 2}, {0, 2, 1}}}, 1);
    fqd_ref.add({ColoredPerm{{1, 2}, {0, 0}}, ColoredPerm{{1, 2}, {2, 1}}}, 1);
    fqd_ref.add({ColoredPerm{{1, 3, 2}, {0, 0, 2}}, ColoredPerm{{1}, {1}}}, 1);
    fqd_ref.add({w, e}, 1);
    r.expect(fqsym::comul(FQSymElem(3, w)) == fqd_ref, "FQSym coproduct");

    QSymElem h = qsym::sym_h(lp({1, 1}));
    r.expect(h == 2 * qsym::sym_m(VPartition(2, {lp({1, 1})})) + qsym::sym_m(VPartition(2, {lp({1, 0}), lp({0, 1})})),
             [&] { return "complete function h_(1,1): got " + show(h); });

    MultigradedPoset P(2, {"0", "a", "b", "c", "d", "e", "1"},
                       {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 5}, {4, 6}, {5, 6}},
                       {lp({0, 0}), lp({1, 0}), lp({0, 1}), lp({0, 1}), lp({1, 1}), lp({0, 2}), lp({1, 2})});
    QSymElem fp = posets::f_homomorphism(P);
    QSymElem fp_ref = Mv(2, {{1, 2}}) + Mv(2, {{1, 0}, {0, 2}}) + 2 * Mv(2, {{0, 1}, {1, 1}}) + Mv(2, {{1, 1}, {0, 1}}) +
                      Mv(2, {{0, 2}, {1, 0}}) + Mv(2, {{1, 0}, {0, 1}, {0, 1}}) + Mv(2, {{0, 1}, {1, 0}, {0, 1}}) +
                      2 * Mv(2, {{0, 1}, {0, 1}, {1, 0}});
    r.expect(fp == fp_ref, [&] { return "F(P) of the seven-element poset: got " + show(fp); });

    // Lyndon compositions of weight 3 at level 2, letters ordered lexicographically.
    std::set<VComp> lyn;
    for (const auto &n : lpartites_of_weight(2, 3))
        for (const auto &I : compositions_of(n))
            if (is_lyndon(I))
                lyn.insert(I);
    std::set<VComp> lyn_ref{vc(2, {{0, 3}}),         vc(2, {{1, 2}}),         vc(2, {{2, 1}}),
                            vc(2, {{3, 0}}),         vc(2, {{0, 1}, {0, 2}}), vc(2, {{0, 1}, {1, 1}}),
                            vc(2, {{0, 1}, {2, 0}}), vc(2, {{0, 2}, {1, 0}}), vc(2, {{0, 1}, {0, 1}, {1, 0}}),
                            vc(2, {{0, 1}, {1, 0}, {1, 0}})};
    {
        auto [extra, missing] = set_diff(lyn, lyn_ref);
        r.expect(lyn == lyn_ref, [&] {
            return "Lyndon list: reference has " + std::to_string(lyn_ref.size()) + " items, enumeration gives " +
                   std::to_string(lyn.size()) + "; not in reference: " + show_keys(extra) +
                   "; missing: " + show_keys(missing);
        });
    }

    auto gens = subalg::generator_degrees(odd_spec(ext({4, 0, 3})), lp({4, 0, 3}));
    std::set<LPartite> gen_set(gens.begin(), gens.end());
    std::set<LPartite> gen_ref{lp({4, 0, 2}), lp({4, 0, 0}), lp({3, 0, 3}), lp({3, 0, 1}),
                               lp({2, 0, 2}), lp({2, 0, 0}), lp({1, 0, 1})};
    {
        auto [extra, missing] = set_diff(gen_set, gen_ref);
        r.expect(gen_set == gen_ref, [&] {
            return "generator degrees for k=(4,0,3): reference has " + std::to_string(gen_ref.size()) +
                   ", computed " + std::to_string(gen_set.size()) + "; not in reference: " + show_keys(extra) +
                   "; missing: " + show_keys(missing);
        });
    }

    Functional nu4 = Functional::nu_k(ext({4}));
    Rational lhs = nu4.evaluate(qsym::mul(qsym::M(c1({2})), qsym::M(c1({3}))));
    Rational rhs = nu4.evaluate(qsym::M(c1({2}))) * nu4.evaluate(qsym::M(c1({3})));
    r.expect(lhs == 2 && rhs == 0, [&] { return "nu^(4)(M2 M3) = " + lhs.get_str() + ", product = " + rhs.get_str(); });

    auto th = [](std::set<Nat> S, ColorWord u) { return theta::peak_function(S, u, 2); };
    r.expect(th({2}, {0, 1, 0}) == th({}, {0, 1, 0}) - th({}, {0, 0, 1}) + th({2}, {0, 0, 1}),
             "linear relation among level 2 peak functions");
    Lin<VComp> tF = qsym::from_M(qsym::Basis::F, th({}, {0, 1, 0}));
    Lin<VComp> tF_ref(2);
    tF_ref.add(vc(2, {{2, 1}}), 2);
    tF_ref.add(vc(2, {{2, 0}, {0, 1}}), -2);
    tF_ref.add(vc(2, {{1, 0}, {1, 1}}), 2);
    tF_ref.add(vc(2, {{1, 1}, {1, 0}}), 4);
    tF_ref.add(vc(2, {{1, 0}, {1, 0}, {0, 1}}), -2);
    r.expect(tF == tF_ref, [&] {
        return "F-expansion of theta_{{},010}: reference " + show(tF_ref, "F") + "; computed " + show(tF, "F") +
               "; difference " + show(tF - tF_ref, "F");
    });
    return r.print();
}

// ---------------------------------------------------------------------------------------------
// 2. Hilbert series
// ---------------------------------------------------------------------------------------------

std::string show_row(const std::vector<Integer> &v) {
    std::string s;
    for (const auto &x : v)
        s += (s.empty() ? "" : " ") + x.get_str();
    return s;
}

bool hilbert() {
    Report r(2, "Hilbert series");
    std::vector<ExtLPartite> ks;
    for (int level = 1; level <= 3; ++level) {
        ks.push_back(ExtLPartite(std::vector<Nat>(static_cast<std::size_t>(level), 0)));
        ks.push_back(ExtLPartite::infinite(level));
    }
    ks.push_back(ext({kInf, 0}));
    ks.push_back(ext({kInf, 0, kInf}));
    ks.push_back(ext({4, 0, 3}));
    for (const auto &k : ks) {
        auto spec = odd_spec(k);
        auto closed = subalg::hilbert_closed(spec, 8), direct = subalg::hilbert_enumerate(spec, 8);
        r.expect(closed == direct, [&] {
            return "closed form and enumeration differ for k=" + io::to_json(k).dump() + ": " +
                   show_row(subalg::by_weight(closed, 8)) + " vs " + show_row(subalg::by_weight(direct, 8));
        });
    }
    auto row = [](const ExtLPartite &k, Nat w) { return subalg::by_weight(subalg::hilbert_closed(odd_spec(k), w), w); };
    std::vector<std::pair<ExtLPartite, std::vector<Integer>>> printed{
        {ext({kInf}), {1, 1, 1, 2, 3, 5, 8, 13, 21, 34}},
        {ext({kInf, 0}), {1, 2, 6, 20, 64, 206, 662, 2128}},
        {ext({kInf, kInf}), {1, 2, 4, 12, 32, 86, 232, 624}},
        {ext({kInf, kInf, kInf}), {1, 3, 9, 37, 141, 534, 2035, 7740}}};
    for (const auto &[k, want] : printed) {
        auto got = row(k, static_cast<Nat>(want.size() - 1));
        r.expect(got == want, [&, &k = k, &want = want] {
            return "series for k=" + io::to_json(k).dump() + ": got " + show_row(got) + ", want " + show_row(want);
        });
    }
    return r.print();
}

// ---------------------------------------------------------------------------------------------
// 3. Hopf axioms
// ---------------------------------------------------------------------------------------------

template <class K>
struct HopfOps {
    std::function<Lin<K>(int)> one;
    std::function<Lin<K>(const Lin<K> &, const Lin<K> &)> mul;
    std::function<Tensor<K>(const Lin<K> &)> comul;
    std::function<Rational(const Lin<K> &)> counit;
    std::function<Lin<K>(const Lin<K> &)> antipode;
};

template <class K>
void hopf_axioms(Report &r, const std::string &name, const HopfOps<K> &ops, const Lin<K> &a, const Lin<K> &x,
                 const Lin<K> &y) {
    int level = a.level();
    Tensor<K> d = ops.comul(a);

    Tensor3<K> left(level), right(level);
    for (const auto &[uv, c] : d.terms()) {
        Tensor<K> du = ops.comul(Lin<K>(level, uv.first)), dv = ops.comul(Lin<K>(level, uv.second));
        for (const auto &[st, e] : du.terms())
            left.add({st.first, {st.second, uv.second}}, c * e);
        for (const auto &[st, e] : dv.terms())
            right.add({uv.first, {st.first, st.second}}, c * e);
    }
    r.expect(left == right, name + ": coassociativity");

    Lin<K> cl(level), cr(level), sl(level), sr(level);
    for (const auto &[uv, c] : d.terms()) {
        Lin<K> u(level, uv.first), v(level, uv.second);
        cl.axpy(c * ops.counit(u), v);
        cr.axpy(c * ops.counit(v), u);
        sl.axpy(c, ops.mul(ops.antipode(u), v));
        sr.axpy(c, ops.mul(u, ops.antipode(v)));
    }
    r.expect(cl == a && cr == a, name + ": counit laws");
    Lin<K> unit = ops.one(level) * ops.counit(a);
    r.expect(sl == unit && sr == unit, name + ": antipode convolution identity");

    Lin<K> xy = ops.mul(x, y);
    r.expect(ops.comul(xy) == tensor_mul(ops.comul(x), ops.comul(y), ops.mul), name + ": coproduct is multiplicative");
    r.expect(ops.counit(xy) == ops.counit(x) * ops.counit(y), name + ": counit is multiplicative");
}

bool hopf() {
    Report r(3, "Hopf axioms");
    Rng rng(3001);
    HopfOps<VComp> q{qsym::one, qsym::mul, qsym::comul, qsym::counit, qsym::antipode};
    HopfOps<VComp> n{nsym::one, nsym::mul, nsym::comul, nsym::counit, nsym::antipode};
    HopfOps<ColoredPerm> f{fqsym::one, fqsym::mul, [](const FQSymElem &a) { return fqsym::comul(a); }, fqsym::counit,
                           fqsym::antipode};
    for (int t = 0; t < 200; ++t) {
        int level = 1 + t % 2;
        hopf_axioms(r, "QSym", q, random_elem(rng, level, 5, 2), random_elem(rng, level, 3, 2),
                    random_elem(rng, level, 2, 2));
    }
    for (int t = 0; t < 200; ++t) {
        int level = 1 + t % 2;
        hopf_axioms(r, "NSym", n, random_elem(rng, level, 5, 2), random_elem(rng, level, 3, 2),
                    random_elem(rng, level, 2, 2));
    }
    for (int t = 0; t < 200; ++t) {
        int level = 1 + t % 2;
        hopf_axioms(r, "FQSym", f, random_fqsym(rng, level, 5, 2), random_fqsym(rng, level, 3, 2),
                    random_fqsym(rng, level, 2, 2));
    }
    return r.print();
}

// ---------------------------------------------------------------------------------------------
// 4. Duality
// ---------------------------------------------------------------------------------------------

bool duality() {
    Report r(4, "duality");
    using NB = nsym::Basis;
    using QB = qsym::Basis;
    for (int level = 1; level <= 2; ++level)
        for (const auto &n : degrees_up_to(level, 4)) {
            auto comps = compositions_of(n);
            for (const auto &I : comps)
                for (const auto &J : comps) {
                    Rational d = I == J ? 1 : 0;
                    auto msg = [&](const char *what) {
                        return [&, what] { return std::string(what) + " pairing fails at " + show(I) + ", " + show(J); };
                    };
                    r.expect(pair(nsym::S(I), qsym::M(J)) == d, msg("(S,M)"));
                    r.expect(pair(nsym::basis_element(NB::Phi, I), qsym::basis_element(QB::P, J)) == d, msg("(Phi,P)"));
                    r.expect(pair(nsym::basis_element(NB::Upsilon, I), qsym::basis_element(QB::Eta, J)) == d,
                             msg("(Upsilon,eta)"));
                }
        }

    Rng rng(4001);
    for (int t = 0; t < 100; ++t) {
        int level = 1 + t % 2;
        NSymElem s = random_elem(rng, level, 2), u = random_elem(rng, level, 4);
        QSymElem a = random_elem(rng, level, 2), b = random_elem(rng, level, 2), c = random_elem(rng, level, 4);

        Rational split = 0;
        Tensor<VComp> du = nsym::comul(u);
        for (const auto &[jk, coef] : du.terms())
            split += coef * pair(NSymElem(level, jk.first), a) * pair(NSymElem(level, jk.second), b);
        r.expect(pair(u, qsym::mul(a, b)) == split, "product of QSym is adjoint to the coproduct of NSym");

        Rational dual = 0;
        NSymElem s2 = random_elem(rng, level, 2);
        Tensor<VComp> dc = qsym::comul(c);
        for (const auto &[jk, coef] : dc.terms())
            dual += coef * pair(s, QSymElem(level, jk.first)) * pair(s2, QSymElem(level, jk.second));
        r.expect(pair(nsym::mul(s, s2), c) == dual, "product of NSym is adjoint to the coproduct of QSym");

        r.expect(pair(nsym::antipode(u), c) == pair(u, qsym::antipode(c)), "antipodes are adjoint");
        r.expect(nsym::counit(u) == pair(u, qsym::one(level)) && qsym::counit(c) == pair(nsym::one(level), c),
                 "units pair with counits");
    }
    return r.print();
}

// ---------------------------------------------------------------------------------------------
// 5. Ideals and subalgebras
// ---------------------------------------------------------------------------------------------

bool ideals() {
    Report r(5, "ideals and subalgebras");
    std::vector<ExtLPartite> ks{ext({kInf}), ext({4}), ext({1}), ExtLPartite::infinite(2), ext({2, 1}), ext({1, 3})};
    for (const auto &k : ks) {
        auto spec = odd_spec(k);
        for (const auto &n : degrees_up_to(k.level(), 5)) {
            auto phi = subalg::ideal_piece(spec, subalg::GenKind::Phi, n);
            auto chi = subalg::ideal_piece(spec, subalg::GenKind::Chi, n);
            auto ups = subalg::ideal_piece(spec, subalg::GenKind::Upsilon, n);
            auto where = [&] { return "k=" + io::to_json(k).dump() + ", degree " + show(n); };
            r.expect(phi.same_span(chi) && phi.same_span(ups), [&] { return "ideal spans differ at " + where(); });
            auto odd = subalg::odd_basis(spec, n);
            r.expect(phi.dim() + odd.size() == count_compositions(n),
                     [&] { return "dimensions are not complementary at " + where(); });
            bool orth = true;
            for (const auto &t : phi.basis())
                for (const auto &I : odd)
                    orth = orth && pair(t, subalg::basis_element(spec, I)) == 0;
            r.expect(orth, [&] { return "ideal is not orthogonal to the subalgebra at " + where(); });
        }
    }

    for (int level = 1; level <= 2; ++level) {
        auto inf = odd_spec(ExtLPartite::infinite(level));
        std::vector<ExtLPartite> finite = level == 1 ? std::vector<ExtLPartite>{ext({1}), ext({2}), ext({3}), ext({4})}
                                                     : std::vector<ExtLPartite>{ext({1, 1}), ext({2, 0}), ext({0, 3})};
        std::vector<Functional> nus;
        for (const auto &k : finite)
            nus.push_back(Functional::nu_k(k));
        for (const auto &I : compositions_up_to(level, 5)) {
            r.expect(subalg::membership(theta::theta_F(I), inf), [&] { return "Theta(F) outside O^inf at " + show(I); });
            QSymElem F = qsym::basis_element(qsym::Basis::F, I);
            for (std::size_t j = 0; j < finite.size(); ++j) {
                QSymElem t = theta::induced_map(nus[j], F);
                r.expect(subalg::membership(t, odd_spec(finite[j])), [&] {
                    return "Theta^k(F) outside O^k at " + show(I) + ", k=" + io::to_json(finite[j]).dump();
                });
            }
        }
    }
    return r.print();
}

// ---------------------------------------------------------------------------------------------
// 6. Functionals
// ---------------------------------------------------------------------------------------------

NSymElem random_homogeneous(Rng &rng, const LPartite &n) {
    auto comps = compositions_of(n);
    NSymElem out(n.level());
    for (int t = 0; t < 2; ++t)
        out.add(comps[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(comps.size()) - 1))], random_coef(rng));
    return out;
}

Functional random_invertible(Rng &rng, int level, Nat w) {
    std::map<LPartite, NSymElem> comps;
    comps.emplace(LPartite::zero(level), nsym::one(level));
    for (const auto &n : degrees_up_to(level, w))
        comps.emplace(n, random_homogeneous(rng, n));
    return Functional::explicit_components(level, std::move(comps));
}

bool functionals() {
    Report r(6, "functionals");
    for (int level = 1; level <= 2; ++level) {
        std::vector<ExtLPartite> ks = level == 1
                                          ? std::vector<ExtLPartite>{ext({0}), ext({1}), ext({2}), ExtLPartite::infinite(1)}
                                          : std::vector<ExtLPartite>{ext({0, 0}), ext({1, 1}), ext({2, 0}),
                                                                     ExtLPartite::infinite(2)};
        for (const auto &k : ks) {
            Functional nu = Functional::nu_k(k);
            for (const auto &I : compositions_up_to(level, 5)) {
                r.expect(nu.on_M(I) == nu_k_closed_M(I, k), [&] {
                    return "nu^k on M" + show(I) + " for k=" + io::to_json(k).dump() + ": convolution " +
                           nu.on_M(I).get_str() + ", closed form " + nu_k_closed_M(I, k).get_str();
                });
                Rational onF = nu.evaluate(qsym::basis_element(qsym::Basis::F, I));
                r.expect(onF == nu_k_closed_F(I, k), [&] {
                    return "nu^k on F" + show(I) + " for k=" + io::to_json(k).dump() + ": convolution " +
                           onF.get_str() + ", closed form " + nu_k_closed_F(I, k).get_str();
                });
            }
            for (const auto &n : lpartites_of_weight(level, 6))
                r.expect(is_k_odd(nu, k, n), [&] { return "nu^k is not k-odd below " + show(n); });
        }
    }

    Rng rng(6001);
    auto same = [](const Functional &f, const Functional &g, int level, Nat w) {
        if (!(f.component(LPartite::zero(level)) == g.component(LPartite::zero(level))))
            return false;
        for (const auto &n : degrees_up_to(level, w))
            if (!(f.component(n) == g.component(n)))
                return false;
        return true;
    };
    for (int t = 0; t < 20; ++t) {
        int level = 1 + t % 2;
        Nat w = 4;
        Functional f = random_invertible(rng, level, w), g = random_invertible(rng, level, w);
        Functional fi = Functional::inverse(f), gi = Functional::inverse(g);
        Functional fg = Functional::convolve(f, g);
        r.expect(same(Functional::convolve(f, fi), Functional::epsilon(level), level, w) &&
                     same(Functional::convolve(fi, f), Functional::epsilon(level), level, w),
                 "inverse is two-sided");
        r.expect(same(Functional::inverse(fi), f, level, w), "inverse is an involution");
        r.expect(same(Functional::bar(Functional::bar(f)), f, level, w), "bar is an involution");
        r.expect(same(Functional::bar(fg), Functional::convolve(Functional::bar(f), Functional::bar(g)), level, w),
                 "bar is multiplicative");
        r.expect(same(Functional::inverse(fg), Functional::convolve(gi, fi), level, w), "inverse reverses products");
        r.expect(same(Functional::bar(fi), Functional::inverse(Functional::bar(f)), level, w), "bar commutes with inverse");
    }
    for (int level = 1; level <= 2; ++level) {
        Functional z = Functional::zeta(level);
        r.expect(same(Functional::inverse(z), Functional::compose_antipode(z), level, 5),
                 "inverse of a character is its composite with the antipode");
        r.expect(same(Functional::chi(level), Functional::convolve(Functional::zeta_bar(level), z), level, 5),
                 "Euler functional is the product of bar zeta and zeta");
    }
    return r.print();
}

// ---------------------------------------------------------------------------------------------
// 7. Posets
// ---------------------------------------------------------------------------------------------

bool poset_suite() {
    Report r(7, "posets");
    MultigradedPoset six(2, {"0", "a", "b", "c", "d", "1"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 5}, {4, 5}},
                         {lp({0, 0}), lp({1, 0}), lp({0, 1}), lp({1, 1}), lp({0, 2}), lp({1, 2})});
    r.expect(posets::is_k_eulerian(six, ext({1, 1})), "six-element poset is (1,1)-Eulerian");
    r.expect(!posets::is_k_eulerian(six, ext({0, 2})), "six-element poset is not (0,2)-Eulerian");

    for (Nat n = 1; n <= 4; ++n) {
        ColorWord alt, block;
        for (Nat i = 0; i < n; ++i) {
            alt.push_back(static_cast<int>(i % 2));
            block.push_back(2 * i < n ? 1 : 0);
        }
        for (const auto &u : {alt, block}) {
            MultigradedPoset B = posets::boolean_lattice(u, 2);
            auto where = [&] { return "Boolean lattice with coloring " + io::json(u).dump(); };
            r.expect(posets::is_k_eulerian(B, ExtLPartite::infinite(2)), [&] { return where() + " is not Eulerian"; });
            r.expect(subalg::membership(posets::f_homomorphism(B), odd_spec(ExtLPartite::infinite(2))),
                     [&] { return where() + ": F-image outside O^inf"; });
            auto viol = posets::dehn_sommerville_check(B, ExtLPartite::infinite(2));
            r.expect(viol.empty(), [&] { return where() + ": " + std::to_string(viol.size()) + " DS violations"; });
        }
    }

    MultigradedPoset D(1, {"0", "a", "b", "1"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, {lp({0}), lp({1}), lp({1}), lp({2})});
    r.expect(2 * posets::flag_f(D, c1({2})) - posets::flag_f(D, c1({1, 1})) == 0, "diamond identity");

    Rng rng(7001);
    for (int t = 0; t < 50; ++t) {
        int level = 1 + t % 2;
        MultigradedPoset A = random_graded_poset(rng, level, 3), B = random_graded_poset(rng, level, 3);
        r.expect(posets::f_homomorphism(posets::product(A, B)) ==
                     qsym::mul(posets::f_homomorphism(A), posets::f_homomorphism(B)),
                 "F is multiplicative on products");
    }
    for (int t = 0; t < 50; ++t) {
        int level = 1 + t % 2;
        MultigradedPoset A = random_graded_poset(rng, level, 4);
        std::vector<std::pair<int, int>> comparable;
        for (int x = 0; x < A.size(); ++x)
            for (int y = 0; y < A.size(); ++y)
                if (A.leq(x, y))
                    comparable.emplace_back(x, y);
        auto [x, y] = comparable[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(comparable.size()) - 1))];
        MultigradedPoset I = posets::interval(A, x, y);
        Tensor<VComp> split(level);
        for (int z = 0; z < I.size(); ++z)
            split += tensor(posets::f_homomorphism(posets::interval(I, I.bottom(), z)),
                            posets::f_homomorphism(posets::interval(I, z, I.top())));
        r.expect(qsym::comul(posets::f_homomorphism(I)) == split, "F is a coalgebra morphism on intervals");
    }
    for (int t = 0; t < 50; ++t) {
        int level = 1 + t % 2;
        ColoredPoset P = random_colored_poset(rng, level, uniform(rng, 1, 5));
        r.expect(posets::gamma(P) == fqsym::d_map(posets::gamma_hat(P)), "Gamma equals D of Gamma-hat");
    }
    return r.print();
}

// ---------------------------------------------------------------------------------------------
// 8. eta and peak function dictionary
// ---------------------------------------------------------------------------------------------

bool dictionary() {
    Report r(8, "eta/theta dictionary");
    for (int level = 1; level <= 2; ++level)
        for (Nat n = 1; n <= 5; ++n) {
            long words = 1;
            for (Nat i = 0; i < n; ++i)
                words *= level;
            for (long m = 0; m < words; ++m) {
                ColorWord u;
                for (long v = m, i = 0; i < static_cast<long>(n); ++i, v /= level)
                    u.push_back(static_cast<int>(v % level));
                for (unsigned sm = 0; sm < (1U << n); ++sm) {
                    std::set<Nat> S;
                    for (Nat i = 0; i < n; ++i)
                        if (sm & (1U << i))
                            S.insert(i + 1);
                    if (!is_peak_set(S, n) || !theta::admissible(S, u, level))
                        continue;
                    PeakPair p{S, u};
                    Lin<VComp> eta = theta::theta_to_eta(p, level);
                    r.expect(qsym::to_M(qsym::Basis::Eta, eta) == theta::peak_function(S, u, level),
                             "theta to eta expansion is wrong");
                    Lin<PeakPair> back(level);
                    for (const auto &[J, c] : eta.terms())
                        back.axpy(c, theta::eta_to_theta(J));
                    r.expect(back == Lin<PeakPair>(level, p), "eta to theta does not invert theta to eta");
                }
            }
        }

    for (int level = 1; level <= 2; ++level) {
        Functional nu = Functional::nu_k(ExtLPartite::infinite(level));
        for (const auto &I : compositions_up_to(level, 5)) {
            QSymElem want = theta::peak_function(pof(I), cof(I), level);
            r.expect(theta::theta_F(I) == want && theta::induced_map(nu, qsym::basis_element(qsym::Basis::F, I)) == want,
                     [&] { return "Theta(F" + show(I) + ") is not the peak function of its peak pair"; });
        }
    }

    Functional nu2 = Functional::nu_k(ext({2}));
    for (Nat n = 2; n <= 6; ++n)
        for (const auto &I : compositions_of(lp({n}))) {
            Nat i1 = I[0].weight();
            if (i1 <= 1)
                continue;
            VComp J(1, {lp({1})});
            J.push_back(lp({i1 - 1}));
            for (std::size_t c = 1; c < I.len(); ++c)
                J.push_back(I[c]);
            QSymElem a = theta::induced_map(nu2, qsym::basis_element(qsym::Basis::F, I));
            QSymElem b = theta::induced_map(nu2, qsym::basis_element(qsym::Basis::F, J));
            r.expect(a == b && a == theta::theta_k_level1_F(I, 2) && b == theta::theta_k_level1_F(J, 2),
                     [&] { return "Theta^(2) distinguishes " + show(I) + " and " + show(J); });
        }
    return r.print();
}

} // namespace

int main() {
    bool ok = true;
    int id = 0;
    for (auto *step : {golden, hilbert, hopf, duality, ideals, functionals, poset_suite, dictionary}) {
        ++id;
        try {
            ok = step() && ok;
        } catch (const std::exception &e) {
            std::printf("criterion %d: FAIL  exception: %s\n", id, e.what());
            std::fflush(stdout);
            ok = false;
        }
    }
    return ok ? 0 : 1;
}
