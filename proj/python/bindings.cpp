// Python extension: elements cross the boundary as lists of (index, coefficient string) pairs.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "multiqsym/comb.hpp"
#include "multiqsym/errors.hpp"
#include "multiqsym/fqsym.hpp"
#include "multiqsym/functionals.hpp"
#include "multiqsym/json_io.hpp"
#include "multiqsym/nsym.hpp"
#include "multiqsym/posets.hpp"
#include "multiqsym/qsym.hpp"
#include "multiqsym/subalg.hpp"
#include "multiqsym/theta.hpp"

namespace py = pybind11;
using namespace mqs;

namespace {

using Index = std::vector<std::vector<Nat>>;
using Terms = std::vector<std::pair<Index, std::string>>;
using TensorTerms = std::vector<std::tuple<Index, Index, std::string>>;

VComp to_vcomp(const Index &cols, int level) {
    VComp I(level);
    for (const auto &c : cols) {
        if (static_cast<int>(c.size()) != level)
            throw DomainError("level mismatch: column has " + std::to_string(c.size()) + " entries, expected " +
                              std::to_string(level));
        I.push_back(LPartite(c));
    }
    return I;
}

Index from_vcomp(const VComp &I) {
    Index out;
    for (const auto &c : I.cols())
        out.push_back(c.entries());
    return out;
}

Lin<VComp> to_lin(const Terms &terms, int level) {
    Lin<VComp> out(level);
    for (const auto &[idx, coef] : terms)
        out.add(to_vcomp(idx, level), io::parse_coef(io::json(coef)));
    return out;
}

Terms from_lin(const Lin<VComp> &a) {
    Terms out;
    for (const auto &[I, c] : a.terms())
        out.emplace_back(from_vcomp(I), c.get_str());
    return out;
}

TensorTerms from_tensor(const Tensor<VComp> &t) {
    TensorTerms out;
    for (const auto &[jk, c] : t.terms())
        out.emplace_back(from_vcomp(jk.first), from_vcomp(jk.second), c.get_str());
    return out;
}

ExtLPartite to_ext(const std::vector<std::optional<Nat>> &k) {
    std::vector<Nat> e;
    for (const auto &x : k)
        e.push_back(x ? *x : kInf);
    return ExtLPartite(e);
}

QSymElem qsym_in(const Terms &a, int level, const std::string &basis) {
    return qsym::to_M(qsym::parse_basis(basis), to_lin(a, level));
}

NSymElem nsym_in(const Terms &a, int level, const std::string &basis) {
    return nsym::to_S(nsym::parse_basis(basis), to_lin(a, level));
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact arithmetic in level-l quasisymmetric functions and related Hopf algebras";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    m.def("qsym_convert", [](const Terms &a, int level, const std::string &from, const std::string &to) {
        return from_lin(qsym::from_M(qsym::parse_basis(to), qsym_in(a, level, from)));
    });
    m.def("qsym_mul", [](const Terms &a, const Terms &b, int level, const std::string &basis) {
        auto p = qsym::mul(qsym_in(a, level, basis), qsym_in(b, level, basis));
        return from_lin(qsym::from_M(qsym::parse_basis(basis), p));
    });
    m.def("qsym_comul", [](const Terms &a, int level) { return from_tensor(qsym::comul(to_lin(a, level))); });
    m.def("qsym_antipode", [](const Terms &a, int level, const std::string &basis) {
        return from_lin(qsym::from_M(qsym::parse_basis(basis), qsym::antipode(qsym_in(a, level, basis))));
    });

    m.def("nsym_convert", [](const Terms &a, int level, const std::string &from, const std::string &to) {
        return from_lin(nsym::from_S(nsym::parse_basis(to), nsym_in(a, level, from)));
    });
    m.def("nsym_mul", [](const Terms &a, const Terms &b, int level, const std::string &basis) {
        auto p = nsym::mul(nsym_in(a, level, basis), nsym_in(b, level, basis));
        return from_lin(nsym::from_S(nsym::parse_basis(basis), p));
    });
    m.def("nsym_comul", [](const Terms &a, int level) { return from_tensor(nsym::comul(to_lin(a, level))); });
    m.def("nsym_antipode", [](const Terms &a, int level, const std::string &basis) {
        return from_lin(nsym::from_S(nsym::parse_basis(basis), nsym::antipode(nsym_in(a, level, basis))));
    });

    m.def("pair", [](const Terms &t, const std::string &t_basis, const Terms &a, const std::string &a_basis, int level) {
        return pair(nsym_in(t, level, t_basis), qsym_in(a, level, a_basis)).get_str();
    });
    m.def("eval_functional", [](const std::string &name, const Terms &a, int level, const std::string &basis,
                                const std::optional<std::vector<std::optional<Nat>>> &k) {
        std::optional<ExtLPartite> kk;
        if (k)
            kk = to_ext(*k);
        Functional f = Functional::by_name(name, level, kk ? &*kk : nullptr);
        return f.evaluate(qsym_in(a, level, basis)).get_str();
    });

    m.def("theta", [](const Terms &a, int level, const std::string &basis) {
        return from_lin(theta::theta_inf(to_lin(a, level), qsym::parse_basis(basis)));
    });
    m.def("peak_function", [](const std::set<Nat> &S, const ColorWord &u, int level) {
        return from_lin(theta::peak_function(S, u, level));
    });

    m.def("hilbert", [](const std::vector<std::optional<Nat>> &k, Nat max_weight, const std::string &mode) {
        subalg::OddEvenSpec spec{static_cast<int>(k.size()), to_ext(k), subalg::Parity::Odd};
        auto series = mode == "closed" ? subalg::hilbert_closed(spec, max_weight)
                                       : subalg::hilbert_enumerate(spec, max_weight);
        std::vector<long> out;
        for (const auto &z : subalg::by_weight(series, max_weight))
            out.push_back(z.get_si());
        return out;
    });
    m.def("membership", [](const Terms &a, int level, const std::string &basis,
                           const std::vector<std::optional<Nat>> &k, const std::string &parity) {
        subalg::OddEvenSpec spec{level, to_ext(k), subalg::parse_parity(parity)};
        return subalg::membership(qsym_in(a, level, basis), spec);
    });
    m.def("lyndon", [](int level, Nat weight) {
        std::set<VComp> found;
        for (const auto &n : lpartites_of_weight(level, weight))
            for (const auto &I : compositions_of(n))
                if (is_lyndon(I))
                    found.insert(I);
        std::vector<Index> out;
        for (const auto &I : found)
            out.push_back(from_vcomp(I));
        return out;
    });

    m.def("poset_f", [](const std::string &doc) {
        return from_lin(posets::f_homomorphism(io::parse_poset(io::parse_json_text(doc))));
    });
    m.def("poset_is_k_eulerian", [](const std::string &doc, const std::vector<std::optional<Nat>> &k) {
        return posets::is_k_eulerian(io::parse_poset(io::parse_json_text(doc)), to_ext(k));
    });
    m.def("fqsym_mul", [](const std::string &a, const std::string &b) {
        auto p = fqsym::mul(io::parse_fqsym(io::parse_json_text(a)), io::parse_fqsym(io::parse_json_text(b)));
        return io::fqsym_json(p).dump();
    });
}
