#include "supermagic/suite.hpp"

#include "supermagic/composition.hpp"
#include "supermagic/isomaps.hpp"
#include "supermagic/jordan.hpp"
#include "supermagic/square.hpp"
#include "supermagic/tkk.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <stdexcept>

namespace supermagic {

JacobiOptions RunConfig::jacobi() const {
  JacobiOptions o;
  o.mode = exhaustive ? JacobiOptions::Mode::exhaustive : JacobiOptions::Mode::automatic;
  o.exhaustive_limit = exhaustive_limit;
  o.samples = samples;
  o.seed = seed;
  return o;
}

SimplicityOptions RunConfig::simplicity() const {
  SimplicityOptions o;
  o.seed = seed;
  o.attempts = simplicity_attempts;
  return o;
}

bool CriterionResult::passed() const {
  if (reports.empty()) return false;
  for (const auto& r : reports)
    if (!r.passed()) return false;
  return budget_seconds <= 0 || seconds <= budget_seconds;
}

std::string CriterionResult::line() const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2fs", seconds);
  std::string out = std::string(passed() ? "PASS" : "FAIL") + "  [" + std::to_string(id) + "] " + title + "  (" +
                    std::to_string(reports.size()) + " checks, " + buf;
  if (budget_seconds > 0) out += " / budget " + std::to_string(static_cast<int>(budget_seconds)) + "s";
  out += ")";
  for (const auto& r : reports)
    if (!r.passed())
      for (const auto& w : r.witnesses) out += "\n    " + r.check + ": " + w;
  if (budget_seconds > 0 && seconds > budget_seconds) out += "\n    over time budget";
  return out;
}

namespace {

using K = CompositionKind;

bool char3() { return gf::modulus() == 3; }

// Kinds usable in the current characteristic.
std::vector<K> usable(std::initializer_list<K> kinds) {
  std::vector<K> out;
  for (K k : kinds)
    if (char3() || !is_super(k)) out.push_back(k);
  return out;
}

Report make_report(const std::string& check) {
  Report r;
  r.check = check;
  return r;
}

// Runs `body`, turning exceptions into failing reports.
Report guarded(const std::string& check, const std::function<Report()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    Report r = make_report(check);
    r.fail(std::string("exception: ") + e.what());
    return r;
  }
}

Report dims_report(const std::string& check, GradedDim got, GradedDim want) {
  Report r = make_report(check);
  r.dims = to_string(got);
  if (got != want) r.fail("graded dimension " + to_string(got) + ", expected " + to_string(want));
  return r;
}

// B(1,2) and B(4,2) must be refused outside characteristic 3.
void rejection_reports(std::vector<Report>& out) {
  for (K k : {K::S12, K::S42}) {
    Report r = make_report("reject:" + to_string(k));
    try {
      make_hurwitz(k);
      r.fail("constructor accepted " + to_string(k) + " over GF(" + std::to_string(gf::modulus()) + ")");
    } catch (const std::invalid_argument&) {
    }
    out.push_back(r);
  }
}

void composition_axioms(const RunConfig&, std::vector<Report>& out) {
  for (K k : usable({K::S1, K::S2, K::S4, K::S8, K::S12, K::S42})) {
    out.push_back(guarded("hurwitz:" + to_string(k), [&] { return check_hurwitz(make_hurwitz(k)); }));
    out.push_back(guarded("symmetric:" + to_string(k), [&] { return check_symmetric(make_symmetric(k)); }));
  }
  if (!char3()) rejection_reports(out);
}

std::vector<std::pair<K, K>> usable_cells() {
  std::vector<std::pair<K, K>> out;
  for (auto c : all_cells())
    if (char3() || (!is_super(c.first) && !is_super(c.second))) out.push_back(c);
  return out;
}

void square_dims(const RunConfig&, std::vector<Report>& out) {
  for (auto [a, b] : usable_cells()) {
    const std::string name = "cell:" + to_string(a) + to_string(b);
    out.push_back(guarded(name, [&] {
      MagicCell c = build_g(a, b);
      Report r = dims_report(name, c.g.graded_dim(), expected_cell_dims(a, b));
      const GradedDim x = c.S().algebra.graded_dim(), y = c.S_prime().algebra.graded_dim();
      const GradedDim formula = c.tri.graded_dim() + c.tri_prime.graded_dim() +
                                3 * GradedDim{x.even * y.even + x.odd * y.odd, x.even * y.odd + x.odd * y.even};
      if (formula != c.g.graded_dim()) r.fail("block formula gives " + to_string(formula));
      return r;
    }));
  }
  if (!char3()) rejection_reports(out);
}

void square_jacobi(const RunConfig& cfg, std::vector<Report>& out) {
  for (auto [a, b] : usable_cells()) {
    const std::string name = "jacobi:" + to_string(a) + to_string(b);
    out.push_back(guarded(name, [&] {
      Report r = check_super_jacobi(build_g(a, b).g, cfg.jacobi());
      r.check = name;
      return r;
    }));
  }
}

Report iso_with_dims(const std::string& check, const std::function<NamedIsomorphism()>& build,
                     std::optional<GradedDim> want) {
  return guarded(check, [&] {
    NamedIsomorphism iso = build();
    Report r = iso.summary();
    r.check = check;
    if (want) {
      if (iso.domain.graded_dim() != *want) r.fail("domain " + to_string(iso.domain.graded_dim()));
      if (iso.codomain.graded_dim() != *want) r.fail("codomain " + to_string(iso.codomain.graded_dim()));
    }
    return r;
  });
}

void phi1(const RunConfig&, std::vector<Report>& out) {
  for (K k : usable({K::S2, K::S4, K::S8, K::S12, K::S42}))
    out.push_back(iso_with_dims("phi1:" + to_string(k), [k] { return build_phi1(k); }, std::nullopt));
}

void phi2(const RunConfig&, std::vector<Report>& out) {
  const std::vector<std::pair<K, std::optional<GradedDim>>> cases = {
      {K::S12, GradedDim{11, 14}}, {K::S42, GradedDim{35, 20}}, {K::S4, GradedDim{35, 0}}, {K::S8, GradedDim{78, 0}}};
  for (const auto& [k, d] : cases)
    if (char3() || !is_super(k)) out.push_back(iso_with_dims("phi2:" + to_string(k), [k] { return build_phi2(k); }, d));
}

void phi3(const RunConfig&, std::vector<Report>& out) {
  const std::vector<std::pair<K, std::optional<GradedDim>>> cases = {
      {K::S12, GradedDim{24, 26}}, {K::S42, GradedDim{66, 32}}, {K::S8, GradedDim{133, 0}}};
  for (const auto& [k, d] : cases)
    if (char3() || !is_super(k)) out.push_back(iso_with_dims("phi3:" + to_string(k), [k] { return build_phi3(k); }, d));
}

void psi(const RunConfig&, std::vector<Report>& out) {
  if (!char3()) return rejection_reports(out);
  out.push_back(iso_with_dims("psi", build_psi, GradedDim{21, 16}));
}

void psi_restricted(const RunConfig&, std::vector<Report>& out) {
  if (!char3()) return rejection_reports(out);
  out.push_back(iso_with_dims("psi-restricted", build_psi_restricted, GradedDim{6, 8}));
}

void derivation_structure(const RunConfig&, std::vector<Report>& out) {
  std::vector<K> kinds = usable({K::S12, K::S42});
  if (!char3()) kinds = {K::S4, K::S8};
  for (K k : kinds) {
    out.push_back(guarded("der-grading:H3:" + to_string(k), [k] { return derJ_grading(make_H3(k)).report; }));
    out.push_back(guarded("D-identities:H3:" + to_string(k), [k] { return check_D_identities(make_H3(k)); }));
  }
}

void inner_derivation_reports(const RunConfig&, std::vector<Report>& out) {
  std::vector<K> equal = usable({K::S1, K::S4, K::S8, K::S12, K::S42});
  // the codimension-1 gap for k×k is a characteristic 3 phenomenon
  if (!char3()) equal.push_back(K::S2);
  for (K k : equal) {
    const std::string name = "inder=der:H3:" + to_string(k);
    out.push_back(guarded(name, [&] {
      Report r = make_report(name);
      const SuperAlgebra j = make_H3(k).J;
      const GradedSpan& der = derivations_cached(j);
      const GradedSpan inder = inner_derivations(j);
      r.dims = to_string(inder.graded_dim()) + " / " + to_string(der.graded_dim());
      if (!(inder == der)) r.fail("inder " + to_string(inder.graded_dim()) + " != der " + to_string(der.graded_dim()));
      return r;
    }));
  }
  if (!char3()) return;
  const std::string name = "inder-codim1:H3:S2";
  out.push_back(guarded(name, [&] {
    Report r = make_report(name);
    const SuperAlgebra j = make_H3(K::S2).J;
    const GradedSpan& der = derivations_cached(j);
    const GradedSpan inder = inner_derivations(j);
    r.dims = to_string(inder.graded_dim()) + " / " + to_string(der.graded_dim());
    if (der.dim() - inder.dim() != 1) r.fail("codimension " + std::to_string(der.dim() - inder.dim()));
    if (!der.whole().contains(inder.whole())) r.fail("inder is not inside der");
    // [der, der] in operator coordinates
    const Subspace dd = derived_subalgebra(der_lie(j));
    std::vector<Vector> ops;
    for (Index c = 0; c < dd.dim(); ++c) {
      Vector v = Vector::Zero(der.ambient());
      const Vector coords = dd.vector(c);
      for (Index k = 0; k < der.dim(); ++k)
        if (!coords(k).is_zero()) v += coords(k) * der.vector(k);
      ops.push_back(v);
    }
    if (!(Subspace::span(ops, der.ambient()) == inder.whole())) r.fail("[der, der] != inder");
    return r;
  }));
}

void k9_facts(const RunConfig& cfg, std::vector<Report>& out) {
  if (!char3()) return rejection_reports(out);
  const SuperAlgebra k3 = make_K3(), k9 = make_K9();
  out.push_back(guarded("jordan:K9", [&] { return check_jordan_super(k9); }));
  out.push_back(guarded("der-K9-split", [&] {
    Report r = make_report("der-K9-split");
    const GradedSpan& d3 = derivations_cached(k3);
    const GradedSpan& d9 = derivations_cached(k9);
    const SuperSpace& sp = k3.space();
    const Matrix id = Matrix::Identity(3, 3);
    std::vector<Vector> gens;
    for (Index k = 0; k < d3.dim(); ++k) {
      const Matrix d = span_operator(d3, k, 3);
      gens.push_back(flatten(operator_tensor(d, id, 0, sp, sp)));
      gens.push_back(flatten(operator_tensor(id, d, d3.parity(k), sp, sp)));
    }
    const GradedSpan sum = GradedSpan::of(gens, operator_entry_parities(k9.space()));
    r.dims = to_string(d9.graded_dim());
    if (d9.graded_dim() != GradedDim{6, 4}) r.fail("der K9 is " + to_string(d9.graded_dim()));
    if (sum.dim() != 2 * d3.dim()) r.fail("der K3⊗I + I⊗der K3 is not direct");
    if (!(sum == d9)) r.fail("der K9 != der K3⊗I + I⊗der K3");
    return r;
  }));
  out.push_back(guarded("simple:K9", [&] {
    Report r = make_report("simple:K9");
    const SimplicityVerdict v = is_simple(k9, cfg.simplicity());
    if (!v.simple()) r.fail(std::string(to_string(v.status)) + ": " + v.reason);
    return r;
  }));
  out.push_back(guarded("S12=K3", [&] {
    Report r = make_report("S12=K3");
    const SuperAlgebra s12 = make_symmetric(K::S12).algebra.with_kind(Kind::jordan);
    if (!structurally_equal(s12, k3)) r.fail("structure constants or forms differ under 1,u,v -> e,x,y");
    return r;
  }));
}

Report simplicity_report(const std::string& name, const SuperAlgebra& a, const RunConfig& cfg, bool expect_simple,
                         const std::function<void(const SimplicityVerdict&, Report&)>& witness_check = {}) {
  Report r = make_report(name);
  r.seed = cfg.seed;
  const SimplicityVerdict v = is_simple(a, cfg.simplicity());
  r.note("verdict", to_string(v.status));
  r.note("reason", v.reason);
  if (v.status == Status::inconclusive) {
    r.fail("inconclusive: " + v.reason);
    return r;
  }
  if (v.simple() != expect_simple) {
    r.fail(std::string(expect_simple ? "not simple" : "simple") + ": " + v.reason);
    return r;
  }
  if (!expect_simple) {
    if (!v.witness) r.fail("no ideal witness");
    else if (witness_check) witness_check(v, r);
  }
  return r;
}

void simplicity_suite(const RunConfig& cfg, std::vector<Report>& out) {
  out.push_back(guarded("simple:g(S1,S1)", [&] {
    return simplicity_report("simple:g(S1,S1)", build_g(K::S1, K::S1).g, cfg, true);
  }));
  if (char3()) {
    out.push_back(guarded("simple:K9", [&] { return simplicity_report("simple:K9", make_K9(), cfg, true); }));
  }
  const K jk = char3() ? K::S12 : K::S4;
  out.push_back(guarded("simple:der H3:" + to_string(jk), [&] {
    return simplicity_report("simple:der H3:" + to_string(jk), der_lie(make_H3(jk).J), cfg, true);
  }));
  out.push_back(guarded("not-simple:str H3:" + to_string(jk), [&] {
    H3Algebra h = make_H3(jk);
    StructurePair sp = make_str_pstr(h.J, h.unit());
    return simplicity_report("not-simple:str H3:" + to_string(jk), sp.str, cfg, false,
                             [&](const SimplicityVerdict& v, Report& r) {
                               if (!(*v.witness == sp.center_line)) r.fail("witness is not the central line k L_1");
                             });
  }));
  if (!char3()) {
    out.push_back(guarded("simple:der H3:S2", [&] {
      return simplicity_report("simple:der H3:S2", der_lie(make_H3(K::S2).J), cfg, true);
    }));
    return;
  }
  out.push_back(guarded("not-simple:der H3:S2", [&] {
    const SuperAlgebra d = der_lie(make_H3(K::S2).J);
    return simplicity_report("not-simple:der H3:S2", d, cfg, false, [&](const SimplicityVerdict& v, Report& r) {
      if (v.witness->dim() != d.dim() - 1) r.fail("witness has dimension " + std::to_string(v.witness->dim()));
      if (!is_ideal(d, *v.witness)) r.fail("witness is not an ideal");
    });
  }));
}

struct Criterion {
  const char* title;
  double budget;
  void (*run)(const RunConfig&, std::vector<Report>&);
};

const Criterion kCriteria[kCriterionCount] = {
    {"composition axioms", 5, composition_axioms},
    {"Supermagic Square dimensions", 120, square_dims},
    {"super Jacobi on every cell", 0, square_jacobi},
    {"phi: g(S1,S) = der H3(C)", 60, phi1},
    {"phi2: g(S2,S) = pstr H3(C)", 0, phi2},
    {"phi3: g(Qbar,S) = T(Q,H3(C))", 0, phi3},
    {"psi: g(S12,S12) = tkk(K9)", 0, psi},
    {"psi restricted: g(S1,S12) = tkk(K3)", 0, psi_restricted},
    {"derivation structure of H3(C)", 0, derivation_structure},
    {"inner derivations", 0, inner_derivation_reports},
    {"K9 facts", 0, k9_facts},
    {"simplicity (Meataxe)", 0, simplicity_suite},
};

}  // namespace

CriterionResult run_criterion(int id, const RunConfig& cfg) {
  if (id < 1 || id > kCriterionCount) throw std::invalid_argument("no criterion " + std::to_string(id));
  gf::ModulusScope scope(cfg.p);
  const Criterion& c = kCriteria[id - 1];
  CriterionResult res;
  res.id = id;
  res.title = c.title;
  res.budget_seconds = c.budget;
  const auto t0 = std::chrono::steady_clock::now();
  c.run(cfg, res.reports);
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

std::vector<CriterionResult> run_acceptance(const RunConfig& cfg, const std::vector<int>& ids) {
  std::vector<CriterionResult> out;
  if (ids.empty())
    for (int i = 1; i <= kCriterionCount; ++i) out.push_back(run_criterion(i, cfg));
  else
    for (int i : ids) out.push_back(run_criterion(i, cfg));
  return out;
}

std::vector<Report> run_all(const RunConfig& cfg) {
  std::vector<Report> out;
  for (auto& c : run_acceptance(cfg))
    for (auto& r : c.reports) out.push_back(std::move(r));
  std::stable_sort(out.begin(), out.end(), [](const Report& a, const Report& b) { return a.check < b.check; });
  return out;
}

}  // namespace supermagic
