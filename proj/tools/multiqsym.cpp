// Command-line frontend: JSON in, JSON out.
#include <cstdlib>
#include <iostream>
#include <optional>
#include <set>

#include <CLI11.hpp>

#include "multiqsym/fqsym.hpp"
#include "multiqsym/functionals.hpp"
#include "multiqsym/json_io.hpp"
#include "multiqsym/nsym.hpp"
#include "multiqsym/posets.hpp"
#include "multiqsym/qsym.hpp"
#include "multiqsym/subalg.hpp"
#include "multiqsym/theta.hpp"

using namespace mqs;
using io::json;

namespace {

bool g_pretty = false;

Nat max_weight_cap() {
    const char *env = std::getenv("MULTIQSYM_MAX_WEIGHT");
    if (!env || !*env)
        return 10;
    char *end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 0)
        throw ParseError("MULTIQSYM_MAX_WEIGHT must be a natural number");
    return v;
}

void guard(Nat size, const char *what = "weight") {
    Nat cap = max_weight_cap();
    if (size > cap)
        throw DomainError(std::string(what) + " " + std::to_string(size) + " exceeds MULTIQSYM_MAX_WEIGHT=" +
                          std::to_string(cap));
}

template <class K>
Nat max_weight_of(const Lin<K> &a) {
    Nat w = 0;
    for (const auto &[k, c] : a.terms()) {
        if constexpr (std::is_same_v<K, VComp>)
            w = std::max(w, k.weight());
        else
            w = std::max(w, static_cast<Nat>(k.size()));
    }
    return w;
}

Nat max_len_of(const Lin<VComp> &a) {
    std::size_t m = 0;
    for (const auto &[I, c] : a.terms())
        m = std::max(m, I.len());
    return static_cast<Nat>(m);
}

bool is_canonical_basis(const std::string &basis) { return basis == "M" || basis == "S"; }

void emit(const json &j, const std::string &text = "") {
    if (g_pretty && !text.empty())
        std::cout << text << "\n";
    else if (g_pretty)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << j.dump() << "\n";
}

// An element held canonically: M coordinates for QSym, S coordinates for NSym.
struct Canon {
    std::string algebra;
    std::string basis; // basis of the input, used as the default output basis
    Lin<VComp> value;
};

Canon load(const std::string &src) {
    io::Element e = io::parse_element(io::read_json(src));
    // Monomial-type inputs cost by length; other bases expand over refinements, which cost by weight.
    if (is_canonical_basis(e.basis))
        guard(max_len_of(e.coords), "length");
    else
        guard(max_weight_of(e.coords));
    if (e.algebra == "QSym")
        return {e.algebra, e.basis, qsym::to_M(qsym::parse_basis(e.basis), e.coords)};
    return {e.algebra, e.basis, nsym::to_S(nsym::parse_basis(e.basis), e.coords)};
}

Lin<VComp> from_canon(const std::string &algebra, const std::string &basis, const Lin<VComp> &v) {
    if (algebra == "QSym")
        return qsym::from_M(qsym::parse_basis(basis), v);
    return nsym::from_S(nsym::parse_basis(basis), v);
}

std::string canonical_basis_name(const std::string &algebra, const std::string &basis) {
    if (algebra == "QSym")
        return qsym::basis_name(qsym::parse_basis(basis));
    return nsym::basis_name(nsym::parse_basis(basis));
}

void emit_element(const std::string &algebra, std::string basis, const Lin<VComp> &canon) {
    basis = canonical_basis_name(algebra, basis);
    if (!is_canonical_basis(basis))
        guard(max_weight_of(canon));
    Lin<VComp> coords = from_canon(algebra, basis, canon);
    emit(io::element_json(algebra, basis, coords), g_pretty ? io::pretty(basis, coords) : "");
}

void emit_tensor(const std::string &algebra, std::string basis, const Tensor<VComp> &canon) {
    basis = canonical_basis_name(algebra, basis);
    Tensor<VComp> out(canon.level());
    if (!is_canonical_basis(basis))
        for (const auto &[ab, c] : canon.terms())
            guard(ab.first.weight() + ab.second.weight());
    for (const auto &[ab, c] : canon.terms()) {
        Lin<VComp> l = from_canon(algebra, basis, Lin<VComp>(canon.level(), ab.first));
        Lin<VComp> r = from_canon(algebra, basis, Lin<VComp>(canon.level(), ab.second));
        out += tensor(l, r) * c;
    }
    std::string text;
    if (g_pretty) {
        bool first = true;
        for (const auto &[ab, c] : out.terms()) {
            text += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
            if (abs(c) != 1)
                text += to_string(Rational(abs(c))) + " ";
            text += basis + io::compact(ab.first) + " (x) " + basis + io::compact(ab.second);
            first = false;
        }
        if (first)
            text = "0";
    }
    emit(io::tensor_json(algebra, basis, out), text);
}

void emit_fqsym(const FQSymElem &a) { emit(io::fqsym_json(a), g_pretty ? io::pretty(a) : ""); }

json integer_json(const Integer &z) {
    if (z.fits_slong_p())
        return z.get_si();
    return z.get_str();
}

json rational_json(const Rational &q) { return to_string(q); }

std::optional<ExtLPartite> load_k(const std::string &s, int level = -1) {
    if (s.empty())
        return std::nullopt;
    return io::parse_ext_lpartite(io::parse_json_text(s), level);
}

int infer_level(int level, const std::optional<ExtLPartite> &k) {
    if (k) {
        if (level > 0)
            check_level(level, k->level());
        return k->level();
    }
    if (level <= 0)
        throw DomainError("--level is required when --k is not given");
    return level;
}

Functional make_functional(const std::string &name, int level, const std::optional<ExtLPartite> &k) {
    return Functional::by_name(name, level, k ? &*k : nullptr);
}

subalg::OddEvenSpec make_spec(const std::string &parity, const std::string &k, int level) {
    auto kk = load_k(k, level);
    if (!kk)
        throw DomainError("--k is required");
    return {kk->level(), *kk, subalg::parse_parity(parity)};
}

json hilbert_json(const subalg::OddEvenSpec &spec, Nat max_weight, const std::string &mode) {
    guard(max_weight);
    if (mode != "closed" && mode != "enumerate" && mode != "both")
        throw ParseError("--mode must be closed, enumerate or both");
    json out;
    out["level"] = spec.level;
    out["k"] = io::to_json(spec.k);
    out["parity"] = spec.parity == subalg::Parity::Odd ? "odd" : "even";
    auto row = [&](const subalg::Series &s) {
        json r = json::array();
        for (const auto &z : subalg::by_weight(s, max_weight))
            r.push_back(integer_json(z));
        return r;
    };
    auto table = [&](const subalg::Series &s) {
        json t = json::object();
        for (const auto &[n, c] : s)
            t[io::to_json(n).dump()] = integer_json(c);
        return t;
    };
    std::optional<subalg::Series> closed, enumerated;
    if (mode != "enumerate")
        closed = subalg::hilbert_closed(spec, max_weight);
    if (mode != "closed")
        enumerated = subalg::hilbert_enumerate(spec, max_weight);
    const subalg::Series &main = closed ? *closed : *enumerated;
    out["by_weight"] = row(main);
    out["coefficients"] = table(main);
    if (closed && enumerated)
        out["agree"] = *closed == *enumerated;
    return out;
}

std::set<Nat> parse_set(const std::string &s) {
    std::set<Nat> out;
    json j = io::parse_json_text(s);
    if (!j.is_array())
        throw ParseError("expected an array of positions");
    for (const auto &x : j) {
        if (!x.is_number_integer())
            throw ParseError("positions are integers");
        out.insert(x.get<long>());
    }
    return out;
}

ColorWord parse_u(const std::string &s) {
    if (!s.empty() && s.front() == '[')
        return io::parse_color_word(io::parse_json_text(s));
    return io::parse_color_word(json(s));
}

void add_pretty(CLI::App *sub) { sub->add_flag("--pretty", g_pretty, "Human-readable output"); }

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Exact computations in level-l quasisymmetric and related Hopf algebras"};
    app.require_subcommand(1);
    add_pretty(&app);

    // Shared option storage; each subcommand callback installs the action to run after parsing.
    std::vector<std::string> inputs;
    std::string basis, to, k, functional, degree, index, S_opt, u_opt, parity = "odd", family = "Phi", mode = "both";
    std::string nsym_in, qsym_in, coloring, x_opt, y_opt, method = "coproduct";
    int level = -1;
    Nat max_weight = 8, k_nat = 0, weight = 0;
    std::function<void()> action;

    auto in_opt = [&](CLI::App *s, std::size_t n) {
        s->add_option("--in", inputs, "Input JSON (file, '-' or inline)")->required()->expected(static_cast<int>(n));
    };
    auto leaf = [&](CLI::App *parent, const std::string &name, const std::string &help, std::size_t n_in,
                    std::function<void()> body) {
        auto *s = parent->add_subcommand(name, help);
        if (n_in > 0)
            in_opt(s, n_in);
        add_pretty(s);
        s->callback([&action, body] { action = body; });
        return s;
    };

    leaf(&app, "mul", "Product of two elements", 2, [&] {
        Canon a = load(inputs[0]), b = load(inputs[1]);
        if (a.algebra != b.algebra)
            throw DomainError("both factors must live in the same algebra");
        guard(max_len_of(a.value) + max_len_of(b.value), "length");
        Lin<VComp> p = a.algebra == "QSym" ? qsym::mul(a.value, b.value) : nsym::mul(a.value, b.value);
        emit_element(a.algebra, basis.empty() ? a.basis : basis, p);
    })->add_option("--basis", basis, "Output basis");

    leaf(&app, "comul", "Coproduct of an element", 1, [&] {
        Canon a = load(inputs[0]);
        auto t = a.algebra == "QSym" ? qsym::comul(a.value) : nsym::comul(a.value);
        emit_tensor(a.algebra, basis.empty() ? a.basis : basis, t);
    })->add_option("--basis", basis, "Output basis");

    leaf(&app, "antipode", "Antipode of an element", 1, [&] {
        Canon a = load(inputs[0]);
        if (a.algebra == "NSym")
            guard(max_weight_of(a.value));
        auto s = a.algebra == "QSym" ? qsym::antipode(a.value) : nsym::antipode(a.value);
        emit_element(a.algebra, basis.empty() ? a.basis : basis, s);
    })->add_option("--basis", basis, "Output basis");

    leaf(&app, "convert", "Change of basis", 1, [&] {
        Canon a = load(inputs[0]);
        emit_element(a.algebra, to, a.value);
    })->add_option("--to", to, "Target basis")->required();

    auto *pair_cmd = leaf(&app, "pair", "Duality pairing <NSym, QSym>", 0, [&] {
        Canon t = load(nsym_in), a = load(qsym_in);
        if (t.algebra != "NSym" || a.algebra != "QSym")
            throw DomainError("pair expects an NSym element and a QSym element");
        Rational v = mqs::pair(t.value, a.value);
        emit(json{{"value", rational_json(v)}}, to_string(v));
    });
    pair_cmd->add_option("--nsym", nsym_in, "NSym element")->required();
    pair_cmd->add_option("--qsym", qsym_in, "QSym element")->required();

    auto *evalf = leaf(&app, "eval-functional", "Evaluate a functional, or print one of its components", 0, [&] {
        if (inputs.empty() == degree.empty())
            throw DomainError("eval-functional needs exactly one of --in and --degree");
        auto kk = load_k(k);
        if (!inputs.empty()) {
            Canon a = load(inputs[0]);
            if (a.algebra != "QSym")
                throw DomainError("functionals are evaluated on QSym elements");
            guard(max_weight_of(a.value));
            Functional f = make_functional(functional, infer_level(a.value.level(), kk), kk);
            Rational v = f.evaluate(a.value);
            emit(json{{"value", rational_json(v)}}, to_string(v));
        } else {
            LPartite n = io::parse_lpartite(io::parse_json_text(degree), kk ? kk->level() : level);
            guard(n.weight());
            Functional f = make_functional(functional, infer_level(n.level(), kk), kk);
            emit_element("NSym", "S", f.component(n));
        }
    });
    evalf->add_option("--functional", functional, "zeta, zeta-bar, zeta-inv, zeta-k, nu-k, chi, epsilon")->required();
    evalf->add_option("--k", k, "Threshold, e.g. '[4,\"inf\"]'");
    evalf->add_option("--level", level, "Level (inferred from --k or the input)");
    evalf->add_option("--in", inputs, "QSym element")->expected(1);
    evalf->add_option("--degree", degree, "Print the component of this degree instead");

    auto *theta = app.add_subcommand("theta", "Induced maps and peak functions");
    theta->require_subcommand(1);
    add_pretty(theta);
    auto *th_apply = leaf(theta, "apply", "Apply the map induced by a functional", 1, [&] {
        Canon a = load(inputs[0]);
        if (a.algebra != "QSym")
            throw DomainError("theta apply expects a QSym element");
        guard(max_weight_of(a.value));
        auto kk = load_k(k);
        Functional f = make_functional(functional, infer_level(a.value.level(), kk), kk);
        emit_element("QSym", basis.empty() ? "M" : basis, theta::induced_map(f, a.value));
    });
    th_apply->add_option("--functional", functional, "Functional name")->required();
    th_apply->add_option("--k", k, "Threshold");
    th_apply->add_option("--basis", basis, "Output basis");
    leaf(theta, "closed", "Descents-to-peaks map by its closed form", 1, [&] {
        io::Element e = io::parse_element(io::read_json(inputs[0]));
        guard(max_weight_of(e.coords));
        if (e.algebra != "QSym")
            throw DomainError("theta closed expects a QSym element");
        emit_element("QSym", basis.empty() ? "M" : basis, theta::theta_inf(e.coords, qsym::parse_basis(e.basis)));
    })->add_option("--basis", basis, "Output basis");
    auto *th_peak = leaf(theta, "peak", "Peak function theta_{S,u}", 0, [&] {
        ColorWord u = parse_u(u_opt);
        guard(static_cast<Nat>(u.size()));
        for (int c : u)
            if (c >= level)
                throw DomainError("color out of range");
        emit_element("QSym", basis.empty() ? "M" : basis, theta::peak_function(parse_set(S_opt), u, level));
    });
    th_peak->add_option("--S", S_opt, "Peak set, e.g. '[2]'")->required();
    th_peak->add_option("--u", u_opt, "Color word, e.g. 010")->required();
    th_peak->add_option("--level", level, "Level")->required();
    th_peak->add_option("--basis", basis, "Output basis");
    auto *th_k1 = leaf(theta, "k1", "Level-1 map induced by nu^(k), in closed form", 1, [&] {
        Canon a = load(inputs[0]);
        if (a.algebra != "QSym")
            throw DomainError("theta k1 expects a QSym element");
        guard(max_weight_of(a.value));
        Lin<VComp> F = qsym::from_M(qsym::Basis::F, a.value);
        emit_element("QSym", basis.empty() ? "M" : basis, theta::theta_k_level1(F, k_nat));
    });
    th_k1->add_option("--k", k_nat, "Positive threshold")->required();
    th_k1->add_option("--basis", basis, "Output basis");
    leaf(theta, "eta-to-theta", "Expand eta_I (I odd) in peak functions", 0, [&] {
        VComp I = io::parse_vcomp(io::parse_json_text(index), -1);
        guard(I.weight());
        json terms = json::array();
        std::string text;
        auto expansion = theta::eta_to_theta(I);
        for (const auto &[p, c] : expansion.terms()) {
            terms.push_back(json{{"coef", to_string(c)}, {"S", p.S}, {"u", p.u}});
            text += std::string(text.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ")) + "theta" +
                    json(p.S).dump() + json(p.u).dump();
        }
        emit(json{{"level", I.level()}, {"terms", terms}}, text);
    })->add_option("--index", index, "Composition, e.g. '[[1,0],[0,1]]'")->required();
    auto *th_t2e = leaf(theta, "theta-to-eta", "Expand theta_{S,u} in the eta basis", 0, [&] {
        ColorWord u = parse_u(u_opt);
        guard(static_cast<Nat>(u.size()));
        Lin<VComp> eta = theta::theta_to_eta(theta::PeakPair{parse_set(S_opt), u}, level);
        emit(io::element_json("QSym", "Eta", eta), g_pretty ? io::pretty("Eta", eta) : "");
    });
    th_t2e->add_option("--S", S_opt, "Peak set")->required();
    th_t2e->add_option("--u", u_opt, "Color word")->required();
    th_t2e->add_option("--level", level, "Level")->required();

    auto *sub = app.add_subcommand("subalg", "k-odd and k-even subalgebras");
    sub->require_subcommand(1);
    add_pretty(sub);
    auto *sb_basis = leaf(sub, "basis", "Indices of the basis in one degree", 0, [&] {
        auto spec = make_spec(parity, k, -1);
        LPartite n = io::parse_lpartite(io::parse_json_text(degree), spec.level);
        guard(n.weight());
        json idx = json::array();
        std::string text;
        for (const auto &I : subalg::basis(spec, n)) {
            idx.push_back(io::to_json(I));
            text += (text.empty() ? "" : "\n") + io::compact(I);
        }
        emit(json{{"parity", parity}, {"k", io::to_json(spec.k)}, {"degree", io::to_json(n)},
                  {"dimension", idx.size()}, {"indices", idx}},
             text.empty() ? "(empty)" : text);
    });
    sb_basis->add_option("--parity", parity, "odd or even");
    sb_basis->add_option("--k", k, "Threshold")->required();
    sb_basis->add_option("--degree", degree, "Degree, e.g. '[2,0,1]'")->required();
    auto hilbert_cmd = [&](CLI::App *parent) {
        auto *s = leaf(parent, "hilbert", "Hilbert series of a subalgebra", 0, [&] {
            auto spec = make_spec(parity, k, level);
            if (spec.parity == subalg::Parity::Even && mode == "both")
                mode = "enumerate";
            json j = hilbert_json(spec, max_weight, mode);
            std::string text;
            for (const auto &z : j["by_weight"])
                text += (text.empty() ? "" : " ") + z.dump();
            emit(j, text);
        });
        s->add_option("--parity", parity, "odd or even");
        s->add_option("--k", k, "Threshold")->required();
        s->add_option("--level", level, "Level (checked against --k)");
        s->add_option("--max-weight", max_weight, "Largest total weight");
        s->add_option("--mode", mode, "closed, enumerate or both");
    };
    hilbert_cmd(sub);
    auto *sb_mem = leaf(sub, "membership", "Decide membership in a subalgebra", 1, [&] {
        Canon a = load(inputs[0]);
        if (a.algebra != "QSym")
            throw DomainError("membership expects a QSym element");
        guard(max_weight_of(a.value));
        auto spec = make_spec(parity, k, a.value.level());
        json out;
        if (method == "coproduct" || method == "both")
            out["coproduct"] = subalg::membership(a.value, spec);
        if (method == "span" || method == "both")
            out["span"] = subalg::membership_span(a.value, spec);
        if (out.empty())
            throw ParseError("--method must be coproduct, span or both");
        bool member = true;
        for (const auto &[key, v] : out.items())
            member = member && v.get<bool>();
        out["member"] = member;
        emit(out, member ? "true" : "false");
    });
    sb_mem->add_option("--parity", parity, "odd or even");
    sb_mem->add_option("--k", k, "Threshold")->required();
    sb_mem->add_option("--method", method, "coproduct, span or both");
    auto *sb_gen = leaf(sub, "generators", "Generators of the ideal orthogonal to a subalgebra", 0, [&] {
        auto spec = make_spec(parity, k, -1);
        LPartite bound = io::parse_lpartite(io::parse_json_text(degree), spec.level);
        guard(bound.weight());
        json gens = json::array();
        std::string text;
        for (const auto &[n, g] : subalg::ideal_generators(spec, subalg::parse_gen_kind(family), bound)) {
            gens.push_back(json{{"degree", io::to_json(n)}, {"element", io::element_json("NSym", "S", g)}});
            text += (text.empty() ? "" : "\n") + io::to_json(n).dump() + ": " + io::pretty("S", g);
        }
        emit(json{{"family", family}, {"generators", gens}}, text.empty() ? "(none)" : text);
    });
    sb_gen->add_option("--parity", parity, "odd or even");
    sb_gen->add_option("--k", k, "Threshold")->required();
    sb_gen->add_option("--family", family, "Phi, Upsilon, Chi (odd) or S (even)");
    sb_gen->add_option("--bound", degree, "Only degrees <= this bound")->required();

    auto *sb_lyn = leaf(sub, "lyndon", "Lyndon vector compositions of one weight, letters ordered lexicographically", 0, [&] {
        if (level < 1)
            throw DomainError("--level must be at least 1");
        guard(weight);
        std::set<VComp> found;
        for (const auto &n : lpartites_of_weight(level, weight))
            for (const auto &I : compositions_of(n))
                if (is_lyndon(I))
                    found.insert(I);
        json idx = json::array();
        std::string text;
        for (const auto &I : found) {
            idx.push_back(io::to_json(I));
            text += (text.empty() ? "" : "\n") + io::compact(I);
        }
        emit(json{{"level", level}, {"weight", weight}, {"count", idx.size()}, {"indices", idx}},
             text.empty() ? "(empty)" : text);
    });
    sb_lyn->add_option("--level", level, "Level")->required();
    sb_lyn->add_option("--weight", weight, "Total weight")->required();

    hilbert_cmd(&app);

    auto *poset = app.add_subcommand("poset", "Multigraded and colored posets");
    poset->require_subcommand(1);
    add_pretty(poset);
    auto load_poset = [&](const std::string &src) {
        auto P = io::parse_poset(io::read_json(src));
        guard(P.multirank().weight());
        return P;
    };
    auto load_colored = [&](const std::string &src) {
        auto P = io::parse_colored_poset(io::read_json(src));
        guard(P.size());
        return P;
    };
    auto threshold = [&](int lvl) {
        auto kk = load_k(k, lvl);
        return kk ? *kk : ExtLPartite::infinite(lvl);
    };
    leaf(poset, "flag", "Flag f-vector", 1, [&] {
        auto P = load_poset(inputs[0]);
        if (!index.empty()) {
            Integer f = posets::flag_f(P, io::parse_vcomp(io::parse_json_text(index), P.level()));
            emit(integer_json(f), f.get_str());
            return;
        }
        json out = json::object();
        std::string text;
        QSymElem f = posets::f_homomorphism(P);
        for (const auto &[I, c] : f.terms()) {
            out[io::compact(I)] = integer_json(c.get_num());
            text += (text.empty() ? "" : "\n") + io::compact(I) + ": " + to_string(c);
        }
        emit(out, text);
    })->add_option("--index", index, "Only this composition");
    leaf(poset, "f", "The F-homomorphism image in QSym", 1, [&] {
        emit_element("QSym", basis.empty() ? "M" : basis, posets::f_homomorphism(load_poset(inputs[0])));
    })->add_option("--basis", basis, "Output basis");
    leaf(poset, "mobius", "Moebius function of the whole poset", 1, [&] {
        Integer m = posets::mobius(load_poset(inputs[0]));
        emit(integer_json(m), m.get_str());
    });
    leaf(poset, "eulerian", "k-Eulerian test", 1, [&] {
        auto P = load_poset(inputs[0]);
        ExtLPartite kv = threshold(P.level());
        bool e = posets::is_k_eulerian(P, kv);
        emit(json{{"k", io::to_json(kv)}, {"eulerian", e}}, e ? "true" : "false");
    })->add_option("--k", k, "Threshold (default all inf)");
    leaf(poset, "ds", "Check the generalized Dehn-Sommerville relations", 1, [&] {
        auto P = load_poset(inputs[0]);
        ExtLPartite kv = threshold(P.level());
        json viol = json::array();
        std::string text;
        for (const auto &v : posets::dehn_sommerville_check(P, kv)) {
            viol.push_back(
                json{{"index", io::to_json(v.I)}, {"position", v.position}, {"value", integer_json(v.value)}});
            text += (text.empty() ? "" : "\n") + io::compact(v.I) + " at column " + std::to_string(v.position) +
                    ": " + v.value.get_str();
        }
        emit(json{{"k", io::to_json(kv)}, {"violations", viol}}, text.empty() ? "no violations" : text);
    })->add_option("--k", k, "Threshold (default all inf)");
    auto *p_int = leaf(poset, "interval", "Interval [x,y]", 1, [&] {
        auto P = load_poset(inputs[0]);
        emit(io::poset_json(posets::interval(P, P.index_of(x_opt), P.index_of(y_opt))));
    });
    p_int->add_option("--x", x_opt, "Lower element")->required();
    p_int->add_option("--y", y_opt, "Upper element")->required();
    leaf(poset, "product", "Cartesian product", 2, [&] {
        emit(io::poset_json(posets::product(load_poset(inputs[0]), load_poset(inputs[1]))));
    });
    auto *p_bool = leaf(poset, "boolean", "Colored Boolean lattice", 0, [&] {
        ColorWord u = parse_u(coloring);
        guard(static_cast<Nat>(u.size()));
        emit(io::poset_json(posets::boolean_lattice(u, level)));
    });
    p_bool->add_option("--coloring", coloring, "Atom colors, e.g. 010")->required();
    p_bool->add_option("--level", level, "Level")->required();
    leaf(poset, "extensions", "Linear extensions of a colored poset", 1, [&] {
        json out = json::array();
        std::string text;
        for (const auto &p : posets::linear_extensions(load_colored(inputs[0]))) {
            out.push_back(json{{"sigma", p.sigma}, {"u", p.u}});
            text += (text.empty() ? "" : "\n") + json(p.sigma).dump() + " " + json(p.u).dump();
        }
        emit(out, text);
    });
    leaf(poset, "gamma", "Gamma of a colored poset", 1, [&] {
        emit_element("QSym", basis.empty() ? "M" : basis, posets::gamma(load_colored(inputs[0])));
    })->add_option("--basis", basis, "Output basis");
    leaf(poset, "gamma-hat", "Free quasisymmetric generating function of a colored poset", 1,
         [&] { emit_fqsym(posets::gamma_hat(load_colored(inputs[0]))); });
    leaf(poset, "j", "Lattice of order ideals of a colored poset", 1,
         [&] { emit(io::poset_json(posets::j_map(load_colored(inputs[0])))); });

    auto *fq = app.add_subcommand("fqsym", "Free quasisymmetric functions");
    fq->require_subcommand(1);
    add_pretty(fq);
    auto load_fq = [&](const std::string &src) {
        FQSymElem a = io::parse_fqsym(io::read_json(src));
        guard(max_weight_of(a));
        return a;
    };
    leaf(fq, "mul", "Shifted shuffle product", 2, [&] {
        FQSymElem a = load_fq(inputs[0]), b = load_fq(inputs[1]);
        guard(max_weight_of(a) + max_weight_of(b));
        emit_fqsym(fqsym::mul(a, b));
    });
    leaf(fq, "comul", "Coproduct", 1, [&] {
        auto t = fqsym::comul(load_fq(inputs[0]));
        std::string text;
        for (const auto &[ab, c] : t.terms())
            text += (text.empty() ? "" : " + ") + (c == 1 ? std::string() : to_string(c) + " ") +
                    io::pretty(FQSymElem(t.level(), ab.first)) + " (x) " + io::pretty(FQSymElem(t.level(), ab.second));
        emit(io::fqsym_tensor_json(t), text);
    });
    leaf(fq, "antipode", "Antipode", 1, [&] { emit_fqsym(fqsym::antipode(load_fq(inputs[0]))); });
    leaf(fq, "d", "Abelianization onto QSym", 1, [&] {
        emit_element("QSym", basis.empty() ? "M" : basis, fqsym::d_map(load_fq(inputs[0])));
    })->add_option("--basis", basis, "Output basis");
    leaf(fq, "s-embed", "Image of S_n", 0, [&] {
        LPartite n = io::parse_lpartite(io::parse_json_text(degree));
        guard(n.weight());
        emit_fqsym(fqsym::s_embed(n));
    })->add_option("--degree", degree, "Degree, e.g. '[1,1]'")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    }
    try {
        if (action)
            action();
    } catch (const DomainError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ParseError &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
