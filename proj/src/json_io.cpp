#include "multiqsym/json_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace mqs::io {

json parse_json_text(const std::string &text) {
    try {
        return json::parse(text);
    } catch (const json::exception &e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

json read_json(const std::string &source) {
    std::size_t p = source.find_first_not_of(" \t\r\n");
    if (p != std::string::npos && (source[p] == '{' || source[p] == '['))
        return parse_json_text(source);
    std::stringstream buf;
    if (source == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(source);
        if (!in)
            throw ParseError("cannot read '" + source + "'");
        buf << in.rdbuf();
    }
    return parse_json_text(buf.str());
}

namespace {

Nat parse_nat(const json &j) {
    if (!j.is_number_integer() || j.get<long long>() < 0)
        throw ParseError("expected a natural number, got " + j.dump());
    return static_cast<Nat>(j.get<long long>());
}

void expect_level(int want, std::size_t got, const std::string &what) {
    if (want >= 0 && static_cast<int>(got) != want)
        throw DomainError("level mismatch: " + what + " has " + std::to_string(got) + " entries, expected " +
                          std::to_string(want));
}

const json &field(const json &j, const char *key) {
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing field '") + key + "'");
    return j.at(key);
}

int parse_level(const json &j) {
    const json &l = field(j, "level");
    if (!l.is_number_integer() || l.get<long long>() <= 0)
        throw ParseError("level must be a positive integer");
    return static_cast<int>(l.get<long long>());
}

} // namespace

LPartite parse_lpartite(const json &j, int level) {
    if (!j.is_array() || j.empty())
        throw ParseError("expected a nonempty array of naturals, got " + j.dump());
    expect_level(level, j.size(), "column " + j.dump());
    std::vector<Nat> v;
    for (const auto &x : j)
        v.push_back(parse_nat(x));
    return LPartite(v);
}

ExtLPartite parse_ext_lpartite(const json &j, int level) {
    if (!j.is_array() || j.empty())
        throw ParseError("expected a nonempty array of naturals or \"inf\", got " + j.dump());
    expect_level(level, j.size(), "threshold " + j.dump());
    std::vector<Nat> v;
    for (const auto &x : j) {
        if (x.is_string()) {
            if (x.get<std::string>() != "inf")
                throw ParseError("threshold entries must be naturals or \"inf\"");
            v.push_back(kInf);
        } else {
            v.push_back(parse_nat(x));
        }
    }
    return ExtLPartite(v);
}

VComp parse_vcomp(const json &j, int level) {
    if (!j.is_array())
        throw ParseError("expected an array of columns, got " + j.dump());
    if (level < 0) {
        if (j.empty())
            throw ParseError("cannot infer the level of an empty composition");
        level = static_cast<int>(j.front().size());
    }
    std::vector<LPartite> cols;
    for (const auto &c : j)
        cols.push_back(parse_lpartite(c, level));
    return VComp(level, cols);
}

ColorWord parse_color_word(const json &j) {
    ColorWord u;
    if (j.is_string()) {
        for (char ch : j.get<std::string>()) {
            if (ch < '0' || ch > '9')
                throw ParseError("color words use the digits 0-9");
            u.push_back(ch - '0');
        }
        return u;
    }
    if (!j.is_array())
        throw ParseError("expected a color word, got " + j.dump());
    for (const auto &x : j)
        u.push_back(static_cast<int>(parse_nat(x)));
    return u;
}

Rational parse_coef(const json &j) {
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(Integer(std::to_string(j.get<long long>())));
    throw ParseError("coefficients must be integers or rational strings, got " + j.dump());
}

json to_json(const LPartite &n) {
    json a = json::array();
    for (Nat x : n.entries())
        a.push_back(x);
    return a;
}

json to_json(const ExtLPartite &k) {
    json a = json::array();
    for (Nat x : k.entries()) {
        if (x == kInf)
            a.push_back("inf");
        else
            a.push_back(x);
    }
    return a;
}

json to_json(const VComp &I) {
    json a = json::array();
    for (const auto &c : I.cols())
        a.push_back(to_json(c));
    return a;
}

std::string compact(const VComp &I) { return to_json(I).dump(); }

Element parse_element(const json &j) {
    Element e;
    int level = parse_level(j);
    e.algebra = j.contains("algebra") ? j.at("algebra").get<std::string>() : "QSym";
    if (e.algebra != "QSym" && e.algebra != "NSym")
        throw ParseError("expected algebra QSym or NSym, got '" + e.algebra + "'");
    e.basis = j.contains("basis") ? j.at("basis").get<std::string>() : (e.algebra == "QSym" ? "M" : "S");
    e.coords = Lin<VComp>(level);
    const json &terms = field(j, "terms");
    if (!terms.is_array())
        throw ParseError("terms must be an array");
    for (const auto &t : terms)
        e.coords.add(parse_vcomp(field(t, "index"), level), parse_coef(field(t, "coef")));
    return e;
}

json element_json(const std::string &algebra, const std::string &basis, const Lin<VComp> &coords) {
    json out;
    out["level"] = coords.level();
    out["algebra"] = algebra;
    out["basis"] = basis;
    json terms = json::array();
    for (const auto &[I, c] : coords.terms())
        terms.push_back(json{{"coef", to_string(c)}, {"index", to_json(I)}});
    out["terms"] = terms;
    return out;
}

json tensor_json(const std::string &algebra, const std::string &basis, const Tensor<VComp> &t) {
    json out;
    out["level"] = t.level();
    out["algebra"] = algebra + "(x)" + algebra;
    out["basis"] = basis;
    json terms = json::array();
    for (const auto &[ab, c] : t.terms())
        terms.push_back(json{{"coef", to_string(c)}, {"left", to_json(ab.first)}, {"right", to_json(ab.second)}});
    out["terms"] = terms;
    return out;
}

namespace {

json perm_json(const ColoredPerm &p) {
    return json{{"sigma", p.sigma}, {"u", p.u}};
}

} // namespace

FQSymElem parse_fqsym(const json &j) {
    int level = parse_level(j);
    if (j.contains("algebra") && j.at("algebra") != "FQSym")
        throw ParseError("expected algebra FQSym");
    FQSymElem out(level);
    for (const auto &t : field(j, "terms")) {
        ColoredPerm p;
        for (const auto &x : field(t, "sigma"))
            p.sigma.push_back(static_cast<int>(parse_nat(x)));
        p.u = parse_color_word(field(t, "u"));
        validate(p, level);
        out.add(p, parse_coef(field(t, "coef")));
    }
    return out;
}

json fqsym_json(const FQSymElem &a) {
    json out;
    out["level"] = a.level();
    out["algebra"] = "FQSym";
    json terms = json::array();
    for (const auto &[p, c] : a.terms()) {
        json t{{"coef", to_string(c)}};
        t.update(perm_json(p));
        terms.push_back(t);
    }
    out["terms"] = terms;
    return out;
}

json fqsym_tensor_json(const Tensor<ColoredPerm> &t) {
    json out;
    out["level"] = t.level();
    out["algebra"] = "FQSym(x)FQSym";
    json terms = json::array();
    for (const auto &[ab, c] : t.terms())
        terms.push_back(json{{"coef", to_string(c)}, {"left", perm_json(ab.first)}, {"right", perm_json(ab.second)}});
    out["terms"] = terms;
    return out;
}

namespace {

template <class K, class Name>
std::string pretty_terms(const Lin<K> &a, Name &&name) {
    if (a.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto &[k, c] : a.terms()) {
        Rational mag = abs(c);
        if (first)
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (mag != 1)
            out += to_string(mag) + " ";
        out += name(k);
        first = false;
    }
    return out;
}

std::string word(const std::vector<int> &w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i)
        s += (i && w.size() > 9 ? "," : "") + std::to_string(w[i]);
    return s;
}

} // namespace

std::string pretty(const std::string &basis, const Lin<VComp> &coords) {
    return pretty_terms(coords, [&](const VComp &I) { return basis + compact(I); });
}

std::string pretty(const FQSymElem &a) {
    return pretty_terms(a, [](const ColoredPerm &p) {
        return "F[" + word(p.sigma) + ";" + word(p.u) + "]";
    });
}

posets::MultigradedPoset parse_poset(const json &j) {
    int level = parse_level(j);
    std::vector<std::string> names;
    for (const auto &x : field(j, "elements")) {
        if (!x.is_string())
            throw ParseError("poset element names must be strings");
        names.push_back(x.get<std::string>());
    }
    auto index = [&](const json &x) {
        if (!x.is_string())
            throw ParseError("cover endpoints must be element names");
        auto it = std::find(names.begin(), names.end(), x.get<std::string>());
        if (it == names.end())
            throw DomainError("cover mentions unknown element '" + x.get<std::string>() + "'");
        return static_cast<int>(it - names.begin());
    };
    std::vector<std::pair<int, int>> covers;
    for (const auto &c : field(j, "covers")) {
        if (!c.is_array() || c.size() != 2)
            throw ParseError("each cover is a pair [lower, upper]");
        covers.emplace_back(index(c[0]), index(c[1]));
    }
    const json &rk = field(j, "rank");
    std::vector<LPartite> rank;
    for (const auto &n : names) {
        if (!rk.contains(n))
            throw ParseError("missing rank for element '" + n + "'");
        rank.push_back(parse_lpartite(rk.at(n), level));
    }
    return posets::MultigradedPoset(level, names, covers, rank);
}

json poset_json(const posets::MultigradedPoset &P) {
    json out;
    out["level"] = P.level();
    json elems = json::array(), covers = json::array(), rank = json::object();
    for (int x = 0; x < P.size(); ++x) {
        elems.push_back(P.name(x));
        rank[P.name(x)] = to_json(P.rank(x));
    }
    for (auto [a, b] : P.covers())
        covers.push_back(json::array({P.name(a), P.name(b)}));
    out["elements"] = elems;
    out["covers"] = covers;
    out["rank"] = rank;
    return out;
}

namespace {

std::pair<int, int> parse_colored_element(const json &x) {
    if (!x.is_array() || x.size() != 2)
        throw ParseError("colored poset elements are pairs [absolute value, color]");
    return {static_cast<int>(parse_nat(x[0])), static_cast<int>(parse_nat(x[1]))};
}

} // namespace

posets::ColoredPoset parse_colored_poset(const json &j) {
    int level = parse_level(j);
    std::vector<std::pair<int, int>> elems;
    for (const auto &x : field(j, "elements"))
        elems.push_back(parse_colored_element(x));
    auto index = [&](const json &x) {
        auto e = parse_colored_element(x);
        auto it = std::find(elems.begin(), elems.end(), e);
        if (it == elems.end())
            throw DomainError("relation mentions unknown element " + x.dump());
        return static_cast<int>(it - elems.begin());
    };
    std::vector<std::pair<int, int>> rel;
    if (j.contains("relations"))
        for (const auto &r : j.at("relations")) {
            if (!r.is_array() || r.size() != 2)
                throw ParseError("each relation is a pair [lower, upper]");
            rel.emplace_back(index(r[0]), index(r[1]));
        }
    return posets::ColoredPoset(level, elems, rel);
}

json colored_poset_json(const posets::ColoredPoset &P) {
    json out;
    out["level"] = P.level();
    json elems = json::array(), rel = json::array();
    for (auto [a, c] : P.elements())
        elems.push_back(json::array({a, c}));
    for (auto [x, y] : P.relations())
        rel.push_back(json::array({elems[static_cast<std::size_t>(x)], elems[static_cast<std::size_t>(y)]}));
    out["elements"] = elems;
    out["relations"] = rel;
    return out;
}

} // namespace mqs::io
