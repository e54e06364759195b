#pragma once

#include <map>
#include <vector>

#include "multiqsym/linear.hpp"

namespace mqs {

// Incrementally maintained row echelon basis of a subspace of Lin<K>.
template <class K>
class EchelonSpan {
public:
    // Reduces v against the basis; returns the remainder.
    Lin<K> reduce(Lin<K> v) const {
        for (const auto &[pivot, row] : rows_) {
            Rational c = v.coeff(pivot);
            if (c != 0)
                v.axpy(-c, row);
        }
        return v;
    }

    // Adds v; returns true if the dimension grew.
    bool insert(const Lin<K> &v) {
        Lin<K> r = reduce(v);
        if (r.is_zero())
            return false;
        auto pivot = r.terms().begin()->first;
        r *= 1 / r.terms().begin()->second;
        for (auto &kv : rows_) {
            Rational c = kv.second.coeff(pivot);
            if (c != 0)
                kv.second.axpy(-c, r);
        }
        rows_.emplace(pivot, std::move(r));
        return true;
    }

    bool contains(const Lin<K> &v) const { return reduce(v).is_zero(); }
    std::size_t dim() const { return rows_.size(); }
    std::vector<Lin<K>> basis() const {
        std::vector<Lin<K>> out;
        for (const auto &kv : rows_)
            out.push_back(kv.second);
        return out;
    }

    bool same_span(const EchelonSpan &o) const {
        if (dim() != o.dim())
            return false;
        for (const auto &kv : o.rows_)
            if (!contains(kv.second))
                return false;
        return true;
    }

private:
    // pivot key -> row with coefficient 1 at pivot and 0 at all other pivots
    std::map<K, Lin<K>> rows_;
};

} // namespace mqs
