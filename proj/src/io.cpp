#include "supermagic/io.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace supermagic {

std::vector<Index> even_first_order(const SuperSpace& s) {
  std::vector<Index> out;
  for (int par = 0; par < 2; ++par)
    for (Index i = 0; i < s.dim(); ++i)
      if (s.parity_of(i) == par) out.push_back(i);
  return out;
}

SuperAlgebra even_first(const SuperAlgebra& a) {
  const auto order = even_first_order(a.space());
  const Index n = a.dim();
  std::vector<Index> pos(static_cast<std::size_t>(n));
  for (Index k = 0; k < n; ++k) pos[static_cast<std::size_t>(order[k])] = k;
  SuperSpace sp;
  for (Index k = 0; k < n; ++k) {
    sp.labels.push_back(a.space().labels[order[k]]);
    sp.parity.push_back(a.space().parity[order[k]]);
  }
  std::vector<SparseVec> table(static_cast<std::size_t>(n * n));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      SparseVec v;
      for (const auto& t : a.product(order[i], order[j])) v.push_back({pos[t.index], t.coeff});
      std::sort(v.begin(), v.end(), [](const Term& x, const Term& y) { return x.index < y.index; });
      table[static_cast<std::size_t>(i * n + j)] = std::move(v);
    }
  std::optional<Matrix> form;
  if (a.form()) {
    Matrix f(n, n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) f(i, j) = (*a.form())(order[i], order[j]);
    form = f;
  }
  return SuperAlgebra(a.name(), std::move(sp), a.kind(), std::move(table), std::move(form));
}

nlohmann::ordered_json algebra_to_json(const SuperAlgebra& in) {
  const SuperAlgebra a = even_first(in);
  nlohmann::ordered_json j;
  j["format_version"] = kAlgebraFormatVersion;
  j["p"] = gf::modulus();
  j["name"] = a.name();
  j["kind"] = to_string(a.kind());
  auto& even = j["even_basis"] = nlohmann::ordered_json::array();
  auto& odd = j["odd_basis"] = nlohmann::ordered_json::array();
  for (Index i = 0; i < a.dim(); ++i) (a.parity(i) ? odd : even).push_back(a.space().labels[i]);
  auto& st = j["structure"] = nlohmann::ordered_json::array();
  for (Index i = 0; i < a.dim(); ++i)
    for (Index k = 0; k < a.dim(); ++k)
      for (const auto& t : a.product(i, k)) st.push_back({i, k, t.index, t.coeff.value()});
  if (a.form()) {
    auto& f = j["form"] = nlohmann::ordered_json::array();
    for (Index r = 0; r < a.dim(); ++r) {
      auto row = nlohmann::ordered_json::array();
      for (Index c = 0; c < a.dim(); ++c) row.push_back((*a.form())(r, c).value());
      f.push_back(std::move(row));
    }
  }
  return j;
}

std::string emit_algebra(const SuperAlgebra& a) { return algebra_to_json(a).dump(1) + "\n"; }

namespace {

template <class T>
T field(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) throw FormatError(std::string("missing field: ") + key);
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("bad field ") + key + ": " + e.what());
  }
}

Scalar entry(const nlohmann::json& v, const std::string& where) {
  if (!v.is_number_integer()) throw FormatError("non-integer coefficient at " + where);
  const long long c = v.get<long long>();
  if (c < 0 || c >= static_cast<long long>(gf::modulus()))
    throw FormatError("coefficient out of range [0,p) at " + where);
  return Scalar(c);
}

}  // namespace

SuperAlgebra algebra_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw FormatError("algebra file must be an object");
  const int version = field<int>(j, "format_version");
  if (version != kAlgebraFormatVersion)
    throw FormatError("format_version " + std::to_string(version) + " is not supported (expected " +
                      std::to_string(kAlgebraFormatVersion) + ")");
  const auto p = field<std::uint32_t>(j, "p");
  if (p != gf::modulus())
    throw FormatError("file is over GF(" + std::to_string(p) + "), session is GF(" + std::to_string(gf::modulus()) + ")");
  const auto name = field<std::string>(j, "name");
  Kind kind;
  try {
    kind = kind_from_string(field<std::string>(j, "kind"));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  SuperSpace sp;
  for (const auto& l : field<std::vector<std::string>>(j, "even_basis")) {
    sp.labels.push_back(l);
    sp.parity.push_back(0);
  }
  for (const auto& l : field<std::vector<std::string>>(j, "odd_basis")) {
    sp.labels.push_back(l);
    sp.parity.push_back(1);
  }
  try {
    sp.validate();
  } catch (const std::exception& e) {
    throw FormatError(e.what());
  }
  const Index n = sp.dim();
  const auto& st = j.at("structure");
  if (!st.is_array()) throw FormatError("structure must be an array");
  std::vector<SparseVec> table(static_cast<std::size_t>(n * n));
  std::set<std::tuple<Index, Index, Index>> seen;
  for (std::size_t e = 0; e < st.size(); ++e) {
    const auto& q = st[e];
    const std::string where = "structure[" + std::to_string(e) + "]";
    if (!q.is_array() || q.size() != 4) throw FormatError(where + " must be [i, j, k, c]");
    Index idx[3];
    for (int t = 0; t < 3; ++t) {
      if (!q[t].is_number_integer()) throw FormatError(where + ": non-integer index");
      idx[t] = q[t].get<Index>();
      if (idx[t] < 0 || idx[t] >= n) throw FormatError(where + ": index " + std::to_string(idx[t]) + " out of range");
    }
    const Scalar c = entry(q[3], where);
    if (c.is_zero()) throw FormatError(where + ": zero coefficient");
    if (!seen.insert({idx[0], idx[1], idx[2]}).second) throw FormatError(where + ": repeated entry");
    table[static_cast<std::size_t>(idx[0] * n + idx[1])].push_back({idx[2], c});
  }
  for (auto& v : table)
    std::sort(v.begin(), v.end(), [](const Term& x, const Term& y) { return x.index < y.index; });
  std::optional<Matrix> form;
  if (j.contains("form")) {
    const auto& f = j.at("form");
    if (!f.is_array() || static_cast<Index>(f.size()) != n) throw FormatError("form must be an n x n array");
    Matrix m(n, n);
    for (Index r = 0; r < n; ++r) {
      if (!f[r].is_array() || static_cast<Index>(f[r].size()) != n) throw FormatError("form must be an n x n array");
      for (Index c = 0; c < n; ++c) m(r, c) = entry(f[r][c], "form[" + std::to_string(r) + "][" + std::to_string(c) + "]");
    }
    form = m;
  }
  try {
    return SuperAlgebra(name, std::move(sp), kind, std::move(table), std::move(form));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

SuperAlgebra parse_algebra(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("not valid JSON: ") + e.what());
  }
  return algebra_from_json(j);
}

std::uint32_t algebra_file_modulus(const std::string& text) {
  try {
    return field<std::uint32_t>(nlohmann::json::parse(text), "p");
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("not valid JSON: ") + e.what());
  }
}

nlohmann::ordered_json report_to_json(const Report& r, bool timings) {
  nlohmann::ordered_json j;
  j["check"] = r.check;
  j["status"] = to_string(r.status);
  j["dims"] = r.dims;
  j["seed"] = r.seed;
  if (timings) j["seconds"] = r.seconds;
  j["witnesses"] = r.witnesses;
  auto& d = j["details"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.details) d[k] = v;
  return j;
}

}  // namespace supermagic
