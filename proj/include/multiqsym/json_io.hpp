#pragma once

#include <string>

#include <json.hpp>

#include "multiqsym/linear.hpp"
#include "multiqsym/posets.hpp"

namespace mqs::io {

using json = nlohmann::ordered_json;

// Reads a file, "-" for stdin, or an inline document starting with '{' or '['.
json read_json(const std::string &source);
json parse_json_text(const std::string &text);

// level < 0 means "infer from the data".
LPartite parse_lpartite(const json &j, int level = -1);
ExtLPartite parse_ext_lpartite(const json &j, int level = -1);
VComp parse_vcomp(const json &j, int level);
ColorWord parse_color_word(const json &j);
Rational parse_coef(const json &j);

json to_json(const LPartite &n);
json to_json(const ExtLPartite &k);
json to_json(const VComp &I);
std::string compact(const VComp &I);

// Element documents: {"level":..,"algebra":..,"basis":..,"terms":[{"coef":..,"index":..}]}.
struct Element {
    std::string algebra; // QSym or NSym
    std::string basis;
    Lin<VComp> coords;
};
Element parse_element(const json &j);
json element_json(const std::string &algebra, const std::string &basis, const Lin<VComp> &coords);
json tensor_json(const std::string &algebra, const std::string &basis, const Tensor<VComp> &t);

FQSymElem parse_fqsym(const json &j);
json fqsym_json(const FQSymElem &a);
json fqsym_tensor_json(const Tensor<ColoredPerm> &t);

// Human-readable text such as "2 M[[1,0],[3,2]] - 1/2 M[[4,2]]".
std::string pretty(const std::string &basis, const Lin<VComp> &coords);
std::string pretty(const FQSymElem &a);

posets::MultigradedPoset parse_poset(const json &j);
json poset_json(const posets::MultigradedPoset &P);
posets::ColoredPoset parse_colored_poset(const json &j);
json colored_poset_json(const posets::ColoredPoset &P);

} // namespace mqs::io
