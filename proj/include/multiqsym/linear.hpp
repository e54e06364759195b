#pragma once

#include <map>
#include <utility>

#include "multiqsym/comb.hpp"
#include "multiqsym/errors.hpp"
#include "multiqsym/rational.hpp"

namespace mqs {

// Finitely supported rational combination of keys K; zero coefficients are never stored.
template <class K>
class Lin {
public:
    using key_type = K;
    using map_type = std::map<K, Rational>;

    explicit Lin(int level = 1) : level_(level) {}
    Lin(int level, const K &k, const Rational &c = 1) : level_(level) { add(k, c); }

    int level() const { return level_; }
    const map_type &terms() const & { return terms_; }
    // Iterating the terms of a temporary would dangle.
    const map_type &terms() const && = delete;
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(const K &k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add(const K &k, const Rational &c) {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    Lin &operator+=(const Lin &o) {
        check_level(level_, o.level_);
        for (const auto &[k, c] : o.terms_)
            add(k, c);
        return *this;
    }
    Lin &operator-=(const Lin &o) {
        check_level(level_, o.level_);
        for (const auto &[k, c] : o.terms_)
            add(k, -c);
        return *this;
    }
    Lin &operator*=(const Rational &s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto &kv : terms_)
            kv.second *= s;
        return *this;
    }
    // Adds s * o.
    void axpy(const Rational &s, const Lin &o) {
        check_level(level_, o.level_);
        if (s == 0)
            return;
        for (const auto &[k, c] : o.terms_)
            add(k, s * c);
    }

    friend Lin operator+(Lin a, const Lin &b) { return a += b; }
    friend Lin operator-(Lin a, const Lin &b) { return a -= b; }
    friend Lin operator*(Lin a, const Rational &s) { return a *= s; }
    friend Lin operator*(const Rational &s, Lin a) { return a *= s; }
    friend Lin operator-(Lin a) { return a *= Rational(-1); }
    friend bool operator==(const Lin &a, const Lin &b) { return a.level_ == b.level_ && a.terms_ == b.terms_; }

private:
    int level_;
    map_type terms_;
};

using QSymElem = Lin<VComp>;
using NSymElem = Lin<VComp>;
using FQSymElem = Lin<ColoredPerm>;

template <class K>
using Tensor = Lin<std::pair<K, K>>;
template <class K>
using Tensor3 = Lin<std::pair<K, std::pair<K, K>>>;

// Homogeneous component of multidegree n.
inline QSymElem homogeneous_part(const QSymElem &a, const LPartite &n) {
    QSymElem out(a.level());
    for (const auto &[I, c] : a.terms())
        if (I.sum() == n)
            out.add(I, c);
    return out;
}

template <class K, class F>
Lin<K> apply_linear(const Lin<K> &a, int out_level, F &&f) {
    Lin<K> out(out_level);
    for (const auto &[k, c] : a.terms())
        out.axpy(c, f(k));
    return out;
}

// Tensor product of two combinations.
template <class K>
Tensor<K> tensor(const Lin<K> &a, const Lin<K> &b) {
    check_level(a.level(), b.level());
    Tensor<K> out(a.level());
    for (const auto &[x, c] : a.terms())
        for (const auto &[y, d] : b.terms())
            out.add({x, y}, c * d);
    return out;
}

// Product in A (x) A given the product on A.
template <class K, class Mul>
Tensor<K> tensor_mul(const Tensor<K> &a, const Tensor<K> &b, Mul &&mul) {
    Tensor<K> out(a.level());
    int level = a.level();
    for (const auto &[xy, c] : a.terms())
        for (const auto &[zw, d] : b.terms()) {
            Lin<K> l = mul(Lin<K>(level, xy.first), Lin<K>(level, zw.first));
            Lin<K> r = mul(Lin<K>(level, xy.second), Lin<K>(level, zw.second));
            out += tensor(l, r) * (c * d);
        }
    return out;
}

} // namespace mqs
