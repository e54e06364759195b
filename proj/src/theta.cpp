#include "multiqsym/theta.hpp"

namespace mqs::theta {

QSymElem induced_map(const Functional &f, const QSymElem &a) {
    check_level(f.level(), a.level());
    QSymElem out(a.level());
    for (const auto &[I, c] : a.terms()) {
        std::size_t m = I.len();
        if (m == 0) {
            out.add(I, c);
            continue;
        }
        for (unsigned long mask = 0; mask < (1UL << (m - 1)); ++mask) {
            std::vector<std::size_t> sizes;
            Rational coef = c;
            std::size_t b = 0;
            for (std::size_t r = 0; r < m && coef != 0; ++r)
                if (r + 1 == m || (mask & (1UL << r))) {
                    coef *= f.on_M(I.slice(b, r + 1));
                    sizes.push_back(r + 1 - b);
                    b = r + 1;
                }
            if (coef != 0)
                out.add(merge_blocks(I, sizes), coef);
        }
    }
    return out;
}

QSymElem peak_function(const std::set<Nat> &S, const ColorWord &u, int level) {
    Nat n = static_cast<Nat>(u.size());
    if (!is_peak_set(S, n))
        throw DomainError("S is not a peak subset of [" + std::to_string(n) + "]");
    QSymElem out(level);
    if (n == 0) {
        out.add(VComp(level), 1);
        return out;
    }
    for (unsigned long mask = 0; mask < (1UL << (n - 1)); ++mask) {
        std::set<Nat> T;
        for (Nat i = 1; i < n; ++i)
            if (mask & (1UL << (i - 1)))
                T.insert(i);
        bool ok = true;
        for (Nat s : S)
            ok = ok && (T.count(s) || T.count(s - 1));
        if (ok)
            out.add(group_positions(u, level, T), pow2(static_cast<long>(T.size() + 1)));
    }
    return out;
}

bool admissible(const std::set<Nat> &S, const ColorWord &u, int level) {
    auto I = i_su(S, u, level);
    if (!I)
        return false;
    return cof(odd_part(*I)) == u;
}

QSymElem theta_M(const VComp &I) {
    if (I.empty())
        return qsym::one(I.level());
    if (I.back().weight() % 2 == 0)
        return QSymElem(I.level());
    long s = sign_pow(static_cast<long>(I.len()) + I.weight());
    return qsym::basis_element(qsym::Basis::Eta, odd_part(I)) * Rational(s);
}

QSymElem theta_F(const VComp &I) {
    if (I.empty())
        return qsym::one(I.level());
    return peak_function(pof(I), cof(I), I.level());
}

QSymElem theta_inf(const Lin<VComp> &coords, qsym::Basis in) {
    if (in != qsym::Basis::M && in != qsym::Basis::F)
        throw DomainError("theta accepts input in basis M or F");
    return apply_linear(coords, coords.level(),
                        [&](const VComp &I) { return in == qsym::Basis::M ? theta_M(I) : theta_F(I); });
}

Lin<PeakPair> eta_to_theta(const VComp &I) {
    if (!is_odd(I))
        throw DomainError("eta to theta requires every column of I to have odd weight");
    Lin<PeakPair> out(I.level());
    ColorWord u = cof(I);
    std::vector<Nat> P;
    for (Nat p : pof(tilde(I)))
        P.push_back(p);
    for (unsigned long mask = 0; mask < (1UL << P.size()); ++mask) {
        std::set<Nat> S;
        for (std::size_t i = 0; i < P.size(); ++i)
            if (mask & (1UL << i))
                S.insert(P[i]);
        out.add(PeakPair{S, u}, sign_pow(static_cast<long>(S.size())));
    }
    return out;
}

Lin<VComp> theta_to_eta(const PeakPair &p, int level) {
    if (!admissible(p.S, p.u, level))
        throw DomainError("theta to eta requires an admissible pair (S,u)");
    Lin<VComp> out(level);
    std::vector<Nat> S(p.S.begin(), p.S.end());
    for (unsigned long mask = 0; mask < (1UL << S.size()); ++mask) {
        std::set<Nat> T;
        for (std::size_t i = 0; i < S.size(); ++i)
            if (mask & (1UL << i))
                T.insert(S[i]);
        auto I = i_su(T, p.u, level);
        out.add(odd_part(*I), sign_pow(static_cast<long>(T.size())));
    }
    return out;
}

QSymElem theta_k_level1_F(const VComp &I, Nat k) {
    if (I.level() != 1)
        throw DomainError("theta_k_level1 requires level 1");
    if (k <= 0)
        throw DomainError("theta_k_level1 requires k > 0");
    if (k % 2 == 0)
        k -= 1;
    if (I.empty())
        return qsym::one(1);
    Nat n = I.weight();
    std::set<Nat> dI = dof(I), pI = pof(I);
    QSymElem out(1);
    for (unsigned long mask = 0; mask < (1UL << (n - 1)); ++mask) {
        std::set<Nat> D;
        for (Nat i = 1; i < n; ++i)
            if (mask & (1UL << (i - 1)))
                D.insert(i);
        bool ok = true;
        for (Nat p : pI)
            ok = ok && (D.count(p) || D.count(p - 1));
        for (Nat d : dI) {
            if (!ok)
                break;
            if (D.count(d))
                continue;
            // distance back to the start of the block containing d
            auto it = D.lower_bound(d);
            Nat start = it == D.begin() ? 0 : *std::prev(it);
            ok = d - start <= k;
        }
        if (ok) {
            std::vector<LPartite> cols;
            Nat prev = 0;
            for (Nat d : D) {
                cols.push_back(LPartite({d - prev}));
                prev = d;
            }
            cols.push_back(LPartite({n - prev}));
            out.add(VComp(1, cols), pow2(static_cast<long>(D.size() + 1)));
        }
    }
    return out;
}

QSymElem theta_k_level1(const Lin<VComp> &F_coords, Nat k) {
    return apply_linear(F_coords, F_coords.level(), [&](const VComp &I) { return theta_k_level1_F(I, k); });
}

} // namespace mqs::theta
