#include "multiqsym/comb.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "multiqsym/errors.hpp"

namespace mqs {

// ---- rationals ----

Rational parse_rational(const std::string &s) {
    if (s.empty())
        throw ParseError("empty rational");
    std::size_t i = 0;
    if (s[0] == '-' || s[0] == '+')
        i = 1;
    bool slash = false, digit = false;
    for (std::size_t j = i; j < s.size(); ++j) {
        if (s[j] == '/') {
            if (slash || !digit)
                throw ParseError("bad rational '" + s + "'");
            slash = true;
            digit = false;
        } else if (s[j] >= '0' && s[j] <= '9') {
            digit = true;
        } else {
            throw ParseError("bad rational '" + s + "'");
        }
    }
    if (!digit)
        throw ParseError("bad rational '" + s + "'");
    Rational q;
    if (q.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0)
        throw ParseError("bad rational '" + s + "'");
    if (q.get_den() == 0)
        throw ParseError("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational &q) { return q.get_str(); }

Rational factorial(long n) {
    Integer r = 1;
    for (long i = 2; i <= n; ++i)
        r *= i;
    return Rational(r);
}

Rational pow2(long n) {
    Integer r = 1;
    r <<= static_cast<mp_bitcnt_t>(n);
    return Rational(r);
}

// ---- LPartite ----

LPartite::LPartite(std::vector<Nat> entries) : e_(std::move(entries)) {
    if (e_.empty())
        throw DomainError("level must be positive");
    for (Nat x : e_)
        if (x < 0)
            throw DomainError("entries of an l-partite number must be natural");
}

LPartite LPartite::zero(int level) {
    if (level <= 0)
        throw DomainError("level must be positive");
    return LPartite(std::vector<Nat>(static_cast<std::size_t>(level), 0));
}

LPartite LPartite::unit(int level, int color) {
    if (color < 0 || color >= level)
        throw DomainError("color out of range");
    LPartite r = zero(level);
    r.e_[static_cast<std::size_t>(color)] = 1;
    return r;
}

Nat LPartite::weight() const { return std::accumulate(e_.begin(), e_.end(), Nat{0}); }

std::vector<int> LPartite::support() const {
    std::vector<int> s;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] != 0)
            s.push_back(static_cast<int>(i));
    return s;
}

bool LPartite::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](Nat x) { return x == 0; });
}

bool LPartite::leq(const LPartite &o) const {
    check_level(level(), o.level());
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > o.e_[i])
            return false;
    return true;
}

LPartite LPartite::operator+(const LPartite &o) const {
    check_level(level(), o.level());
    LPartite r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i)
        r.e_[i] += o.e_[i];
    return r;
}

LPartite LPartite::operator-(const LPartite &o) const {
    if (!o.leq(*this))
        throw DomainError("l-partite subtraction would go negative");
    LPartite r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i)
        r.e_[i] -= o.e_[i];
    return r;
}

LPartite LPartite::scaled(Nat c) const {
    LPartite r = *this;
    for (auto &x : r.e_)
        x *= c;
    return r;
}

void check_level(int a, int b) {
    if (a != b)
        throw DomainError("level mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

// ---- ExtLPartite ----

ExtLPartite::ExtLPartite(std::vector<Nat> entries) : e_(std::move(entries)) {
    if (e_.empty())
        throw DomainError("level must be positive");
    for (Nat x : e_)
        if (x < 0)
            throw DomainError("threshold entries must be natural or inf");
}

ExtLPartite ExtLPartite::infinite(int level) {
    if (level <= 0)
        throw DomainError("level must be positive");
    return ExtLPartite(std::vector<Nat>(static_cast<std::size_t>(level), kInf));
}

bool ExtLPartite::is_finite() const {
    return std::none_of(e_.begin(), e_.end(), [](Nat x) { return x == kInf; });
}

bool ExtLPartite::contains(const LPartite &n) const {
    check_level(level(), n.level());
    for (int i = 0; i < level(); ++i)
        if (n[i] > e_[static_cast<std::size_t>(i)])
            return false;
    return true;
}

LPartite ExtLPartite::clamp(const LPartite &bound) const {
    check_level(level(), bound.level());
    std::vector<Nat> r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i)
        r[i] = std::min(e_[i], bound.entries()[i]);
    return LPartite(r);
}

// ---- VComp ----

VComp::VComp(int level, std::vector<LPartite> cols) : level_(level), cols_(std::move(cols)) {
    if (level <= 0)
        throw DomainError("level must be positive");
    for (const auto &c : cols_) {
        check_level(level, c.level());
        if (c.is_zero())
            throw DomainError("vector composition columns must be nonzero");
    }
}

Nat VComp::weight() const {
    Nat w = 0;
    for (const auto &c : cols_)
        w += c.weight();
    return w;
}

LPartite VComp::sum() const {
    LPartite s = LPartite::zero(level_);
    for (const auto &c : cols_)
        s = s + c;
    return s;
}

VComp VComp::reversed() const {
    VComp r = *this;
    std::reverse(r.cols_.begin(), r.cols_.end());
    return r;
}

VComp VComp::concat(const VComp &o) const {
    check_level(level_, o.level_);
    VComp r = *this;
    r.cols_.insert(r.cols_.end(), o.cols_.begin(), o.cols_.end());
    return r;
}

VComp VComp::slice(std::size_t b, std::size_t e) const {
    VComp r(level_);
    r.cols_.assign(cols_.begin() + static_cast<std::ptrdiff_t>(b),
                   cols_.begin() + static_cast<std::ptrdiff_t>(e));
    return r;
}

void VComp::push_back(const LPartite &c) {
    check_level(level_, c.level());
    if (c.is_zero())
        throw DomainError("vector composition columns must be nonzero");
    cols_.push_back(c);
}

std::strong_ordering operator<=>(const VComp &a, const VComp &b) {
    if (auto c = a.cols_.size() <=> b.cols_.size(); c != 0)
        return c;
    if (auto c = a.cols_ <=> b.cols_; c != 0)
        return c;
    return a.level_ <=> b.level_;
}

// ---- VPartition ----

VPartition::VPartition(int level, std::vector<LPartite> parts) : level_(level), parts_(std::move(parts)) {
    for (const auto &p : parts_) {
        check_level(level, p.level());
        if (p.is_zero())
            throw DomainError("partition parts must be nonzero");
    }
    std::sort(parts_.begin(), parts_.end());
}

LPartite VPartition::sum() const {
    LPartite s = LPartite::zero(level_);
    for (const auto &p : parts_)
        s = s + p;
    return s;
}

Rational VPartition::z() const {
    Rational r = 1;
    std::size_t i = 0;
    while (i < parts_.size()) {
        std::size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i])
            ++j;
        long m = static_cast<long>(j - i);
        r *= factorial(m);
        for (long t = 0; t < m; ++t)
            r *= parts_[i].weight();
        i = j;
    }
    return r;
}

VPartition cols_of(const VComp &I) { return VPartition(I.level(), I.cols()); }

// ---- enumeration ----

std::vector<LPartite> lpartites_leq(const LPartite &n) {
    std::vector<LPartite> out;
    std::vector<Nat> cur(static_cast<std::size_t>(n.level()), 0);
    while (true) {
        out.emplace_back(cur);
        int i = n.level() - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n[i]) {
            cur[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0)
            break;
        ++cur[static_cast<std::size_t>(i)];
    }
    return out;
}

std::vector<LPartite> lpartites_of_weight(int level, Nat w) {
    std::vector<LPartite> out;
    for (const auto &m : lpartites_leq(LPartite(std::vector<Nat>(static_cast<std::size_t>(level), w))))
        if (m.weight() == w)
            out.push_back(m);
    return out;
}

namespace {

void compositions_rec(const LPartite &rest, const std::vector<LPartite> &cands, VComp &cur,
                      std::vector<VComp> &out) {
    if (rest.is_zero()) {
        out.push_back(cur);
        return;
    }
    for (const auto &c : cands) {
        if (c.is_zero() || !c.leq(rest))
            continue;
        VComp next = cur;
        next.push_back(c);
        compositions_rec(rest - c, cands, next, out);
    }
}

} // namespace

std::vector<VComp> compositions_of(const LPartite &n) {
    std::vector<VComp> out;
    VComp cur(n.level());
    compositions_rec(n, lpartites_leq(n), cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t count_compositions(const LPartite &n) {
    auto below = lpartites_leq(n);
    std::map<LPartite, std::size_t> cnt;
    for (const auto &m : below) {
        if (m.is_zero()) {
            cnt[m] = 1;
            continue;
        }
        std::size_t c = 0;
        for (const auto &col : lpartites_leq(m))
            if (!col.is_zero())
                c += cnt.at(m - col);
        cnt[m] = c;
    }
    return cnt.at(n);
}

// ---- refinement orders ----

namespace {

bool supports_ordered(const LPartite &a, const LPartite &b, bool strict) {
    auto sa = a.support(), sb = b.support();
    return strict ? sa.back() < sb.front() : sa.back() <= sb.front();
}

bool block_ok(const VComp &J, std::size_t b, std::size_t e, Order order) {
    if (order == Order::Refine)
        return true;
    for (std::size_t r = b; r + 1 < e; ++r)
        if (!supports_ordered(J[r], J[r + 1], order == Order::Strict))
            return false;
    return true;
}

} // namespace

std::optional<std::vector<std::size_t>> refinement_blocks(const VComp &I, const VComp &J) {
    if (I.level() != J.level())
        return std::nullopt;
    std::vector<std::size_t> sizes;
    std::size_t r = 0;
    for (const auto &col : I.cols()) {
        LPartite acc = LPartite::zero(I.level());
        std::size_t start = r;
        while (r < J.len() && acc != col) {
            acc = acc + J[r];
            ++r;
            if (!acc.leq(col))
                return std::nullopt;
        }
        if (acc != col)
            return std::nullopt;
        sizes.push_back(r - start);
    }
    if (r != J.len())
        return std::nullopt;
    return sizes;
}

bool refines(const VComp &I, const VComp &J, Order order) {
    auto blocks = refinement_blocks(I, J);
    if (!blocks)
        return false;
    std::size_t b = 0;
    for (std::size_t s : *blocks) {
        if (!block_ok(J, b, b + s, order))
            return false;
        b += s;
    }
    return true;
}

VComp merge_blocks(const VComp &J, const std::vector<std::size_t> &sizes) {
    VComp out(J.level());
    std::size_t b = 0;
    for (std::size_t s : sizes) {
        LPartite acc = LPartite::zero(J.level());
        for (std::size_t r = b; r < b + s; ++r)
            acc = acc + J[r];
        out.push_back(acc);
        b += s;
    }
    if (b != J.len())
        throw DomainError("block sizes do not cover the composition");
    return out;
}

namespace {

std::vector<VComp> column_refinements(const LPartite &col, Order order) {
    int level = col.level();
    if (order == Order::Refine)
        return compositions_of(col);
    std::vector<VComp> out;
    if (order == Order::Weak) {
        ColorWord w;
        for (int c = 0; c < level; ++c)
            for (Nat t = 0; t < col[c]; ++t)
                w.push_back(c);
        Nat n = static_cast<Nat>(w.size());
        for (unsigned long mask = 0; mask < (1UL << (n - 1)); ++mask) {
            std::set<Nat> cuts;
            for (Nat i = 1; i < n; ++i)
                if (mask & (1UL << (i - 1)))
                    cuts.insert(i);
            out.push_back(group_positions(w, level, cuts));
        }
    } else {
        auto s = col.support();
        std::size_t t = s.size();
        for (unsigned long mask = 0; mask < (1UL << (t - 1)); ++mask) {
            VComp piece(level);
            std::vector<Nat> acc(static_cast<std::size_t>(level), 0);
            for (std::size_t i = 0; i < t; ++i) {
                acc[static_cast<std::size_t>(s[i])] = col[s[i]];
                if (i + 1 == t || (mask & (1UL << i))) {
                    piece.push_back(LPartite(acc));
                    std::fill(acc.begin(), acc.end(), 0);
                }
            }
            out.push_back(piece);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<VComp> refinements(const VComp &I, Order order) {
    std::vector<VComp> out{VComp(I.level())};
    for (const auto &col : I.cols()) {
        auto pieces = column_refinements(col, order);
        std::vector<VComp> next;
        next.reserve(out.size() * pieces.size());
        for (const auto &pre : out)
            for (const auto &p : pieces)
                next.push_back(pre.concat(p));
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VComp> coarsenings(const VComp &J, Order order) {
    std::vector<VComp> out;
    if (J.empty())
        return {J};
    std::size_t m = J.len();
    for (unsigned long mask = 0; mask < (1UL << (m - 1)); ++mask) {
        // bit r set: cut between columns r and r+1
        std::vector<std::size_t> sizes;
        std::size_t b = 0;
        bool ok = true;
        for (std::size_t r = 0; r < m; ++r) {
            if (r + 1 == m || (mask & (1UL << r))) {
                if (!block_ok(J, b, r + 1, order)) {
                    ok = false;
                    break;
                }
                sizes.push_back(r + 1 - b);
                b = r + 1;
            }
        }
        if (ok)
            out.push_back(merge_blocks(J, sizes));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---- statistics ----

std::set<Nat> dof(const VComp &I) {
    std::set<Nat> s;
    Nat acc = 0;
    for (std::size_t r = 0; r + 1 < I.len(); ++r) {
        acc += I[r].weight();
        s.insert(acc);
    }
    return s;
}

ColorWord cof(const VComp &I) {
    ColorWord w;
    for (const auto &col : I.cols())
        for (int c = 0; c < I.level(); ++c)
            for (Nat t = 0; t < col[c]; ++t)
                w.push_back(c);
    return w;
}

std::set<Nat> descents(const std::vector<int> &w) {
    std::set<Nat> d;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1])
            d.insert(static_cast<Nat>(i + 1));
    return d;
}

std::set<Nat> peaks(const std::vector<int> &w) {
    std::set<Nat> p;
    for (std::size_t i = 1; i + 1 < w.size(); ++i)
        if (w[i - 1] < w[i] && w[i] > w[i + 1])
            p.insert(static_cast<Nat>(i + 1));
    return p;
}

LPartite mdeg(const ColorWord &u, int level) {
    std::vector<Nat> e(static_cast<std::size_t>(level), 0);
    for (int c : u) {
        if (c < 0 || c >= level)
            throw DomainError("color " + std::to_string(c) + " out of range for level " + std::to_string(level));
        ++e[static_cast<std::size_t>(c)];
    }
    return LPartite(e);
}

VComp e_u(const ColorWord &u, int level) {
    VComp out(level);
    for (int c : u)
        out.push_back(LPartite::unit(level, c));
    return out;
}

VComp group_positions(const ColorWord &u, int level, const std::set<Nat> &cuts) {
    VComp out(level);
    std::vector<Nat> acc(static_cast<std::size_t>(level), 0);
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] < 0 || u[i] >= level)
            throw DomainError("color out of range");
        ++acc[static_cast<std::size_t>(u[i])];
        if (i + 1 == u.size() || cuts.count(static_cast<Nat>(i + 1))) {
            out.push_back(LPartite(acc));
            std::fill(acc.begin(), acc.end(), 0);
        }
    }
    return out;
}

VComp from_dof_cof(int level, Nat n, const std::set<Nat> &S, const ColorWord &w) {
    if (static_cast<Nat>(w.size()) != n)
        throw DomainError("coloring word length must equal n");
    for (Nat s : S)
        if (s < 1 || s >= n)
            throw DomainError("descent set must lie in [n-1]");
    for (Nat d : descents(w))
        if (!S.count(d))
            throw DomainError("Des(w) must be contained in S");
    return group_positions(w, level, S);
}

void validate(const ColoredPerm &p, int level) {
    if (p.sigma.size() != p.u.size())
        throw DomainError("permutation and color word lengths differ");
    std::vector<int> s = p.sigma;
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] != static_cast<int>(i + 1))
            throw DomainError("sigma is not a permutation of [n]");
    for (int c : p.u)
        if (c < 0 || c >= level)
            throw DomainError("color out of range");
}

VComp wdes(const ColoredPerm &p, int level) {
    validate(p, level);
    return group_positions(p.u, level, descents(p.sigma));
}

std::vector<int> standardize(const std::vector<int> &w) {
    std::vector<std::size_t> idx(w.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return w[a] < w[b]; });
    std::vector<int> out(w.size());
    for (std::size_t r = 0; r < idx.size(); ++r)
        out[idx[r]] = static_cast<int>(r + 1);
    return out;
}

// ---- peak statistics ----

bool is_odd(const VComp &I) {
    return std::all_of(I.cols().begin(), I.cols().end(), [](const LPartite &c) { return c.weight() % 2 == 1; });
}

VComp peak_lambda(const VComp &I) {
    VComp out(I.level());
    LPartite acc = LPartite::zero(I.level());
    bool pending = false;
    for (const auto &col : I.cols()) {
        acc = acc + col;
        pending = true;
        if (col.weight() != 1) {
            out.push_back(acc);
            acc = LPartite::zero(I.level());
            pending = false;
        }
    }
    if (pending)
        out.push_back(acc);
    return out;
}

std::set<Nat> pof(const VComp &I) { return dof(peak_lambda(I)); }

VComp odd_part(const VComp &I) {
    if (I.empty() || I.back().weight() % 2 == 0)
        throw DomainError("odd part requires the last column to have odd weight");
    VComp out(I.level());
    LPartite acc = LPartite::zero(I.level());
    for (const auto &col : I.cols()) {
        acc = acc + col;
        if (col.weight() % 2 == 1) {
            out.push_back(acc);
            acc = LPartite::zero(I.level());
        }
    }
    return out;
}

VComp tilde(const VComp &I) {
    if (!is_odd(I))
        throw DomainError("tilde requires every column to have odd weight");
    VComp out(I.level());
    for (const auto &col : I.cols()) {
        ColorWord w = cof(VComp(I.level(), {col}));
        std::set<Nat> cuts;
        for (Nat i = 2; i < static_cast<Nat>(w.size()); i += 2)
            cuts.insert(i);
        out = out.concat(group_positions(w, I.level(), cuts));
    }
    return out;
}

bool is_peak_set(const std::set<Nat> &S, Nat n) {
    for (Nat s : S) {
        if (s < 2 || s > n - 1)
            return false;
        if (S.count(s - 1))
            return false;
    }
    return true;
}

std::optional<VComp> i_su(const std::set<Nat> &S, const ColorWord &u, int level) {
    Nat n = static_cast<Nat>(u.size());
    if (!is_peak_set(S, n))
        throw DomainError("S is not a peak subset of [n]");
    std::set<Nat> cuts;
    for (Nat i = 1; i < n; ++i)
        if (!S.count(i + 1))
            cuts.insert(i);
    for (Nat s : S)
        if (u[static_cast<std::size_t>(s - 2)] > u[static_cast<std::size_t>(s - 1)])
            return std::nullopt;
    return group_positions(u, level, cuts);
}

// ---- words ----

bool is_lyndon(const VComp &I, const LetterLess &less) {
    if (I.empty())
        return false;
    auto lt = [&](const LPartite &a, const LPartite &b) { return less ? less(a, b) : a < b; };
    const auto &w = I.cols();
    std::size_t n = w.size();
    for (std::size_t r = 1; r < n; ++r) {
        // compare w with its rotation starting at r
        int cmp = 0;
        for (std::size_t i = 0; i < n && cmp == 0; ++i) {
            const auto &a = w[i];
            const auto &b = w[(i + r) % n];
            if (lt(a, b))
                cmp = -1;
            else if (lt(b, a))
                cmp = 1;
        }
        if (cmp >= 0)
            return false;
    }
    return true;
}

namespace {

void qs_rec(const VComp &I, std::size_t i, const VComp &J, std::size_t j, bool allow_sum, VComp &cur,
            std::vector<VComp> &out) {
    if (i == I.len() && j == J.len()) {
        out.push_back(cur);
        return;
    }
    if (i < I.len()) {
        cur.push_back(I[i]);
        qs_rec(I, i + 1, J, j, allow_sum, cur, out);
        cur = cur.slice(0, cur.len() - 1);
    }
    if (j < J.len()) {
        cur.push_back(J[j]);
        qs_rec(I, i, J, j + 1, allow_sum, cur, out);
        cur = cur.slice(0, cur.len() - 1);
    }
    if (allow_sum && i < I.len() && j < J.len()) {
        cur.push_back(I[i] + J[j]);
        qs_rec(I, i + 1, J, j + 1, allow_sum, cur, out);
        cur = cur.slice(0, cur.len() - 1);
    }
}

} // namespace

std::vector<VComp> quasi_shuffles(const VComp &I, const VComp &J) {
    check_level(I.level(), J.level());
    std::vector<VComp> out;
    VComp cur(I.level());
    qs_rec(I, 0, J, 0, true, cur, out);
    return out;
}

std::vector<VComp> shuffles(const VComp &I, const VComp &J) {
    check_level(I.level(), J.level());
    std::vector<VComp> out;
    VComp cur(I.level());
    qs_rec(I, 0, J, 0, false, cur, out);
    return out;
}

std::vector<std::vector<VComp>> concat_splits(const VComp &I, std::size_t m) {
    std::vector<std::vector<VComp>> out;
    if (m == 0) {
        if (I.empty())
            out.push_back({});
        return out;
    }
    if (m == 1)
        return {{I}};
    for (std::size_t k = 0; k <= I.len(); ++k)
        for (auto &rest : concat_splits(I.slice(k, I.len()), m - 1)) {
            rest.insert(rest.begin(), I.slice(0, k));
            out.push_back(std::move(rest));
        }
    return out;
}

// ---- coefficient statistics ----

Nat pi(const VComp &I) {
    Nat r = 1;
    for (const auto &c : I.cols())
        r *= c.weight();
    return r;
}

Rational sp(const VComp &I) { return factorial(static_cast<long>(I.len())) * pi(I); }

Nat len_rel(const VComp &J, const VComp &I) {
    auto blocks = refinement_blocks(I, J);
    if (!blocks)
        throw DomainError("len(J,I) requires J to refine I");
    Nat r = 1;
    for (auto s : *blocks)
        r *= static_cast<Nat>(s);
    return r;
}

Rational sp_rel(const VComp &J, const VComp &I) {
    auto blocks = refinement_blocks(I, J);
    if (!blocks)
        throw DomainError("sp(J,I) requires J to refine I");
    Rational r = 1;
    std::size_t b = 0;
    for (auto s : *blocks) {
        r *= sp(J.slice(b, b + s));
        b += s;
    }
    return r;
}

// ---- printing ----

std::string to_string(const LPartite &n) {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < n.level(); ++i) {
        if (i)
            os << ',';
        if (n[i] == kInf)
            os << "\"inf\"";
        else
            os << n[i];
    }
    os << ']';
    return os.str();
}

std::string to_string(const VComp &I) {
    std::string s = "[";
    for (std::size_t r = 0; r < I.len(); ++r) {
        if (r)
            s += ',';
        s += to_string(I[r]);
    }
    return s + "]";
}

} // namespace mqs
