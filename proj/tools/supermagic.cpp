// supermagic: command-line driver.
//
// Exit status: 0 all checks pass, 1 some check fails, 2 usage or configuration error.

#include "supermagic/io.hpp"
#include "supermagic/isomaps.hpp"
#include "supermagic/jordan.hpp"
#include "supermagic/registry.hpp"
#include "supermagic/square.hpp"
#include "supermagic/suite.hpp"
#include "supermagic/tkk.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

using namespace supermagic;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::uint32_t p = 3;
  std::uint64_t seed = 0;
  bool exhaustive = false;
  bool json = false;
  bool timings = false;
};

RunConfig config(const Globals& g) {
  RunConfig c;
  c.p = g.p;
  c.seed = g.seed;
  c.exhaustive = g.exhaustive;
  return c;
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

// Prints reports and returns the exit status they imply.
int emit_reports(const std::vector<Report>& reports, const Globals& g, const std::string& path = "") {
  bool ok = !reports.empty();
  for (const auto& r : reports) ok = ok && r.passed();
  if (g.json) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) arr.push_back(report_to_json(r, g.timings));
    write_out(path, arr.dump(2) + "\n");
  } else {
    std::ostringstream os;
    for (const auto& r : reports) {
      os << r.render();
      if (g.timings) os << "  (" << r.seconds << "s)";
      os << "\n";
    }
    write_out(path, os.str());
  }
  return ok ? 0 : 1;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::string dims_cell(GradedDim d) {
  return d.odd ? std::to_string(d.even) + "\\|" + std::to_string(d.odd) : std::to_string(d.even);
}

// Upper-triangle table with rows and columns S1, S2, S4, S8, S12, S42.
std::string square_markdown(const std::vector<SquareCell>& cells) {
  std::map<std::pair<CompositionKind, CompositionKind>, const SquareCell*> at;
  for (const auto& c : cells) at[{c.row, c.col}] = &c;
  std::ostringstream os;
  os << "|     |";
  for (auto k : kAllCompositionKinds) os << " " << to_string(k) << " |";
  os << "\n|-----|";
  for (std::size_t i = 0; i < std::size(kAllCompositionKinds); ++i) os << "-----|";
  os << "\n";
  for (std::size_t i = 0; i < std::size(kAllCompositionKinds); ++i) {
    os << "| " << to_string(kAllCompositionKinds[i]) << " |";
    for (std::size_t j = 0; j < std::size(kAllCompositionKinds); ++j) {
      auto it = at.find({kAllCompositionKinds[i], kAllCompositionKinds[j]});
      if (j < i || it == at.end()) {
        os << "     |";
        continue;
      }
      const SquareCell& c = *it->second;
      os << " " << dims_cell(c.dims);
      if (c.jacobi) os << (c.jacobi->passed() ? "" : " ✗");
      os << " |";
    }
    os << "\n";
  }
  return os.str();
}

nlohmann::ordered_json square_json(const std::vector<SquareCell>& cells) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : cells) {
    nlohmann::ordered_json j;
    j["cell"] = to_string(c.row) + to_string(c.col);
    j["even"] = c.dims.even;
    j["odd"] = c.dims.odd;
    j["expected"] = to_string(expected_cell_dims(c.row, c.col));
    if (c.jacobi) j["jacobi"] = report_to_json(*c.jacobi);
    arr.push_back(std::move(j));
  }
  return arr;
}

std::string square_csv(const std::vector<SquareCell>& cells) {
  std::ostringstream os;
  os << "row,col,even,odd,jacobi\n";
  for (const auto& c : cells)
    os << to_string(c.row) << "," << to_string(c.col) << "," << c.dims.even << "," << c.dims.odd << ","
       << (c.jacobi ? to_string(c.jacobi->status) : "") << "\n";
  return os.str();
}

std::string algebra_csv(const SuperAlgebra& in) {
  const SuperAlgebra a = even_first(in);
  std::ostringstream os;
  os << "i,j,k,c\n";
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = 0; j < a.dim(); ++j)
      for (const auto& t : a.product(i, j)) os << i << "," << j << "," << t.index << "," << t.coeff.value() << "\n";
  return os.str();
}

std::string algebra_markdown(const SuperAlgebra& in) {
  const SuperAlgebra a = even_first(in);
  std::ostringstream os;
  os << "# " << a.name() << "\n\nGF(" << gf::modulus() << "), " << to_string(a.kind()) << ", dimension "
     << to_string(a.graded_dim()) << "\n\n| x | y | xy |\n|---|---|---|\n";
  const auto& l = a.space().labels;
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = 0; j < a.dim(); ++j) {
      const auto& v = a.product(i, j);
      if (v.empty()) continue;
      std::string s;
      for (const auto& t : v) {
        if (!s.empty()) s += " + ";
        if (t.coeff != Scalar(1)) s += std::to_string(t.coeff.value()) + " ";
        s += l[t.index];
      }
      os << "| " << l[i] << " | " << l[j] << " | " << s << " |\n";
    }
  return os.str();
}

Report analyze_op(const SuperAlgebra& a, const std::string& op, const RunConfig& cfg) {
  Report r;
  r.check = op + ":" + a.name();
  if (op == "center") {
    r.dims = std::to_string(center(a).dim());
  } else if (op == "derived") {
    r.dims = std::to_string(derived_subalgebra(a).dim());
  } else if (op == "simple") {
    const SimplicityVerdict v = is_simple(a, cfg.simplicity());
    r.seed = cfg.seed;
    r.note("reason", v.reason);
    if (v.status == Status::inconclusive) r.fail("inconclusive: " + v.reason);
    else if (v.simple()) r.dims = "simple";
    else r.dims = "not simple, ideal of dimension " + std::to_string(v.witness ? v.witness->dim() : 0) + " (" + v.reason + ")";
  } else if (op == "jacobi") {
    r = check_super_jacobi(a, cfg.jacobi());
  } else if (op == "jordan") {
    r = check_jordan_super(a);
  } else if (op == "der") {
    r.dims = to_string(derivations_cached(a).graded_dim());
  } else if (op == "inder") {
    r.dims = to_string(inner_derivations(a).graded_dim());
  } else {
    throw UsageError("unknown op: " + op + " (center, derived, simple, jacobi, jordan, der, inder)");
  }
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact GF(p) engine for the Supermagic Square, Jordan superalgebras and their Lie superalgebras"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--p", g.p, "field characteristic (odd prime)")->capture_default_str();
  app.add_option("--seed", g.seed, "seed for sampled checks and Meataxe")->capture_default_str();
  app.add_flag("--exhaustive", g.exhaustive, "exhaustive Jacobi at every dimension");
  app.add_flag("--json", g.json, "reports as JSON");
  app.add_flag("--timings", g.timings, "include wall times in reports");

  auto* square = app.add_subcommand("square", "Supermagic Square");
  square->require_subcommand(1);
  auto* build = square->add_subcommand("build", "build cells and tabulate graded dimensions");
  std::string cells = "all", check, out;
  build->add_option("--cells", cells, "all or a list such as S1S1,S4S12")->capture_default_str();
  build->add_option("--check", check, "jacobi, jacobi:exhaustive or jacobi:sampled");
  build->add_option("--out", out, "table.md, table.json, table.csv, or md/json/csv for stdout");

  auto* checkc = app.add_subcommand("check", "axiom checks");
  checkc->require_subcommand(1);
  auto* axioms = checkc->add_subcommand("axioms", "composition, symmetric composition and Jordan axioms");

  auto* verify = app.add_subcommand("verify", "verify an isomorphism");
  std::string theorem, skind = "S12";
  verify->add_option("--theorem", theorem, "phi1|phi2|phi3|psi|psi-restricted")->required();
  verify->add_option("--S", skind, "S1|S2|S4|S8|S12|S42")->capture_default_str();

  auto* analyze = app.add_subcommand("analyze", "structure of one algebra");
  std::string algebra, ops = "center,derived,simple";
  analyze->add_option("--algebra", algebra, "algebra name, e.g. K9, H3:S12, g:S4S12, der:K3, file.json")->required();
  analyze->add_option("--ops", ops, "center,derived,simple,jacobi,jordan,der,inder")->capture_default_str();

  auto* exportc = app.add_subcommand("export", "write an algebra or the square table");
  std::string format = "json", ealgebra, eout;
  exportc->add_option("--format", format, "json|md|csv")->check(CLI::IsMember({"json", "md", "csv"}))->capture_default_str();
  exportc->add_option("--algebra", ealgebra, "algebra name; the square table when omitted");
  exportc->add_option("--out", eout, "output file (stdout when omitted)");

  auto* tkkc = app.add_subcommand("tkk", "Tits-Kantor-Koecher superalgebra of a Jordan superalgebra");
  std::string jordan;
  tkkc->add_option("--jordan", jordan, "K3|K9|H3:<S>")->required();

  auto* all = app.add_subcommand("all", "every acceptance check, one line per criterion");
  std::vector<int> ids;
  all->add_option("criteria", ids, "criterion numbers (default: all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    gf::set_modulus(g.p);
    const RunConfig cfg = config(g);

    if (*build) {
      std::optional<JacobiOptions> jac;
      if (!check.empty()) {
        jac = cfg.jacobi();
        if (check == "jacobi:exhaustive") jac->mode = JacobiOptions::Mode::exhaustive;
        else if (check == "jacobi:sampled") jac->mode = JacobiOptions::Mode::sampled;
        else if (check != "jacobi") throw UsageError("--check must be jacobi, jacobi:exhaustive or jacobi:sampled");
      }
      const auto list = parse_cells(cells);
      for (auto [a, b] : list)
        if (gf::modulus() != 3 && (is_super(a) || is_super(b)))
          throw UsageError("cell " + to_string(a) + to_string(b) + " needs --p 3");
      const auto table = square_table(list, jac);
      std::string fmt = "md";
      std::string path = out;
      if (out == "md" || out == "json" || out == "csv") {
        fmt = out;
        path.clear();
      } else if (out.size() > 5 && out.substr(out.size() - 5) == ".json") {
        fmt = "json";
      } else if (out.size() > 4 && out.substr(out.size() - 4) == ".csv") {
        fmt = "csv";
      }
      write_out(path, fmt == "json" ? square_json(table).dump(2) + "\n" : fmt == "csv" ? square_csv(table)
                                                                                   : square_markdown(table));
      bool ok = true;
      for (const auto& c : table) {
        if (c.dims != expected_cell_dims(c.row, c.col)) ok = false;
        if (c.jacobi && !c.jacobi->passed()) {
          ok = false;
          std::cerr << c.jacobi->render() << "\n";
        }
      }
      return ok ? 0 : 1;
    }

    if (*axioms) {
      std::vector<Report> reps = run_criterion(1, cfg).reports;
      for (auto k : kAllCompositionKinds) {
        if (gf::modulus() != 3 && is_super(k)) continue;
        reps.push_back(check_jordan_super(make_H3(k).J));
      }
      if (gf::modulus() == 3) {
        reps.push_back(check_jordan_super(make_K3()));
        reps.push_back(check_jordan_super(make_K9()));
      }
      return emit_reports(reps, g);
    }

    if (*verify) {
      const Theorem t = theorem_from_name(theorem);
      const CompositionKind k = composition_kind_from_name(skind);
      if (gf::modulus() != 3 && (is_super(k) || t == Theorem::psi || t == Theorem::psi_restricted))
        throw UsageError(to_string(t) + " with " + skind + " needs --p 3");
      NamedIsomorphism iso = verify_theorem(t, k);
      std::vector<Report> reps = iso.reports;
      reps.insert(reps.begin(), iso.summary());
      return emit_reports(reps, g);
    }

    if (*analyze) {
      const SuperAlgebra a = algebra_by_name(algebra);
      std::vector<Report> reps;
      Report head;
      head.check = "algebra:" + a.name();
      head.dims = to_string(a.graded_dim());
      reps.push_back(head);
      for (const auto& op : split(ops, ',')) reps.push_back(analyze_op(a, op, cfg));
      return emit_reports(reps, g);
    }

    if (*exportc) {
      if (ealgebra.empty()) {
        std::vector<std::pair<CompositionKind, CompositionKind>> list;
        for (auto c : all_cells())
          if (gf::modulus() == 3 || (!is_super(c.first) && !is_super(c.second))) list.push_back(c);
        const auto table = square_table(list);
        write_out(eout, format == "json" ? square_json(table).dump(2) + "\n"
                        : format == "csv" ? square_csv(table)
                                          : square_markdown(table));
        return 0;
      }
      const SuperAlgebra a = algebra_by_name(ealgebra);
      write_out(eout, format == "json" ? emit_algebra(a) : format == "csv" ? algebra_csv(a) : algebra_markdown(a));
      return 0;
    }

    if (*tkkc) {
      const SuperAlgebra j = algebra_by_name(jordan);
      TitsAlgebra t = tkk(j);
      std::vector<Report> reps;
      Report head;
      head.check = "tkk:" + j.name();
      head.dims = to_string(t.T.graded_dim());
      reps.push_back(head);
      reps.push_back(check_jordan_super(j));
      reps.push_back(check_tits_blocks(t));
      reps.push_back(check_super_jacobi(t.T, cfg.jacobi()));
      return emit_reports(reps, g);
    }

    if (*all) {
      bool ok = true;
      if (g.json) {
        return emit_reports(run_all(cfg), g);
      }
      for (const auto& res : run_acceptance(cfg, ids)) {
        std::cout << res.line() << std::endl;
        ok = ok && res.passed();
      }
      return ok ? 0 : 1;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
