#include "supermagic/registry.hpp"

#include "supermagic/io.hpp"
#include "supermagic/jordan.hpp"
#include "supermagic/square.hpp"
#include "supermagic/tkk.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace supermagic {

namespace {

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

SuperAlgebra algebra_by_name(const std::string& name) {
  if (ends_with(name, ".json")) return parse_algebra(read_file(name));
  if (name == "K3") return make_K3();
  if (name == "K9") return make_K9();
  if (name == "Q") return make_split_quaternion().Q.algebra;
  if (starts_with(name, "C:")) return make_hurwitz(composition_kind_from_name(name.substr(2))).algebra;
  if (starts_with(name, "H3:")) return make_H3(composition_kind_from_name(name.substr(3))).J;
  if (starts_with(name, "g:")) {
    const auto cells = parse_cells(name.substr(2));
    if (cells.size() != 1) throw std::invalid_argument("g: expects one cell, got " + name);
    return build_g(cells[0].first, cells[0].second).g;
  }
  if (starts_with(name, "tri:")) return tri_basis(make_symmetric(composition_kind_from_name(name.substr(4)))).as_lie;
  if (starts_with(name, "der:")) return der_lie(algebra_by_name(name.substr(4)));
  if (starts_with(name, "tkk:")) return tkk(algebra_by_name(name.substr(4))).T;
  if (starts_with(name, "str:")) {
    SuperAlgebra s = make_str_pstr(algebra_by_name(name.substr(4))).str;
    return s.renamed(name);
  }
  if (starts_with(name, "pstr:")) {
    const std::string inner = name.substr(5);
    if (!starts_with(inner, "H3:")) throw std::invalid_argument("pstr needs a unital algebra H3:<S>, got " + inner);
    H3Algebra h = make_H3(composition_kind_from_name(inner.substr(3)));
    return make_str_pstr(h.J, h.unit()).pstr->algebra.renamed(name);
  }
  return make_symmetric(composition_kind_from_name(name)).algebra;
}

std::vector<std::string> registry_examples() {
  return {"S8", "C:S12", "Q", "H3:S42", "K3", "K9", "g:S4S12", "tri:S12", "der:H3:S12", "str:H3:S12",
          "pstr:H3:S12", "tkk:K9", "file.json"};
}

}  // namespace supermagic
