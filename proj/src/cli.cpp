#include "wdl/cli.hpp"

#include <CLI11.hpp>
#include <stdexcept>

#include "wdl/algebra.hpp"
#include "wdl/concept_algebra.hpp"
#include "wdl/enumerate.hpp"
#include "wdl/json_io.hpp"

namespace wdl {

namespace {

std::string element_name(const Lattice& L, int x) {
  return L.labels.empty() ? std::to_string(x) : L.labels[x];
}

// Rendering: ~x weak complement, -x dual weak complement, & meet, | join.
const char* axiom_equation(AxiomId a) {
  switch (a) {
    case AxiomId::A1: return "~~x <= x";
    case AxiomId::A1p: return "--x >= x";
    case AxiomId::A2: return "~(x&y) & ~y = ~y";
    case AxiomId::A2p: return "-(x&y) & -y = -y";
    case AxiomId::A3: return "(x&y)|(x&~y) = x";
    case AxiomId::A3p: return "(x|y)&(x|-y) = x";
    case AxiomId::P4: return "y|~y=1, ~0=1, y&-y=0, -1=0, -y<=~y";
    case AxiomId::P5: return "~~~x=~x, ---x=-x, kernel and closure laws";
    case AxiomId::Cor1: return "~~x=x, antitone, (x&y)|(x&~y) = x = (x|y)&(x|~y)";
    case AxiomId::Ddag: return "(x&y)|(x&~y) = (x|y)&(x|~y)";
    case AxiomId::Wdn: return "~x = -x";
  }
  return "";
}

// Short alias printed beside each identifier in text reports.
const char* axiom_alias(AxiomId a) {
  switch (a) {
    case AxiomId::A1: return "(1)";
    case AxiomId::A1p: return "(1')";
    case AxiomId::A2: return "(2)";
    case AxiomId::A2p: return "(2')";
    case AxiomId::A3: return "(3)";
    case AxiomId::A3p: return "(3')";
    case AxiomId::P4: return "(4)";
    case AxiomId::P5: return "(5)";
    case AxiomId::Cor1: return "(Cor.1)";
    case AxiomId::Ddag: return "(‡)";
    case AxiomId::Wdn: return "(negation)";
  }
  return "";
}

std::string witness_text(const Lattice& L, AxiomId a, const Witness& w) {
  std::string s;
  if (!w.part.empty()) s += "[" + w.part + "] ";
  s += "at (";
  for (std::size_t i = 0; i < w.tuple.size(); ++i) {
    if (i) s += ", ";
    const char* var = (w.tuple.size() == 1 && a == AxiomId::P4) ? "y"
                      : i == 0                                  ? "x"
                                                                : "y";
    s += std::string(var) + "=" + element_name(L, w.tuple[i]);
  }
  s += "): lhs=" + element_name(L, w.lhs) + ", rhs=" + element_name(L, w.rhs);
  return s;
}

void print_report_text(std::ostream& out, const Lattice& L,
                       const AxiomReport& r) {
  if (r.degenerate) out << "degenerate singleton carrier\n";
  for (const auto& [id, v] : r.verdicts) {
    out << axiom_name(id) << " " << axiom_alias(id) << ": "
        << axiom_equation(id) << " ... ";
    if (v.pass)
      out << "pass\n";
    else
      out << "fail " << witness_text(L, id, *v.witness) << "\n";
  }
}

void print_relabeling(std::ostream& out, const Lattice& L, bool json_mode,
                      ordered_json* j) {
  bool identity = true;
  for (int i = 0; i < L.n; ++i)
    if (L.input_to_canonical[i] != i) identity = false;
  if (identity) return;
  if (json_mode)
    (*j)["relabeling"] = L.input_to_canonical;
  else
    out << "input elements relabeled: element i is now "
        << ordered_json(L.input_to_canonical).dump() << "[i]\n";
}

std::string table_text(const Lattice& L, const std::vector<int>& img) {
  std::string s = "[";
  for (std::size_t i = 0; i < img.size(); ++i) {
    if (i) s += ", ";
    s += element_name(L, img[i]);
  }
  return s + "]";
}

struct GlobalOpts {
  std::string format = "text";
  int workers = 1;
  std::uint64_t budget = kDefaultBudget;
  bool budget_set = false;
  bool timings = false;
  bool json() const { return format == "json"; }
};

int run_check(const GlobalOpts& g, const std::string& path,
              const std::string& axioms_csv, std::ostream& out) {
  DicompAlgebra A =
      algebra_from_json(ordered_json::parse(read_text_file(path)));
  std::vector<AxiomId> axioms;
  if (axioms_csv.empty()) {
    axioms = A.dual ? all_axioms() : weak_only_axioms();
  } else {
    axioms = axioms_from_names(axioms_csv).chosen;
    for (AxiomId a : axioms)
      if (axiom_needs_dual(a) && !A.dual) throw MissingDualTable(axiom_name(a));
  }
  AxiomReport r = report_for(A, axioms);
  bool all_pass = true;
  for (const auto& [id, v] : r.verdicts) all_pass &= v.pass;

  if (g.json()) {
    ordered_json j = report_to_json(r);
    print_relabeling(out, A.lattice, true, &j);
    out << j.dump(2) << "\n";
  } else {
    print_relabeling(out, A.lattice, false, nullptr);
    print_report_text(out, A.lattice, r);
    out << (all_pass ? "all checked axioms hold\n"
                     : "some checked axioms fail\n");
  }
  return all_pass ? 0 : 1;
}

int run_recognize(const GlobalOpts& g, const std::string& path, int bound,
                  std::ostream& out) {
  Lattice L = lattice_from_json(ordered_json::parse(read_text_file(path)));
  RecognizeResult res = recognize_boolean(L, bound, g.workers);
  if (g.json()) {
    ordered_json j;
    j["boolean"] = res.boolean;
    if (res.table) j["table"] = res.table->img;
    if (res.degenerate) j["degenerate"] = true;
    print_relabeling(out, L, true, &j);
    out << j.dump(2) << "\n";
  } else {
    print_relabeling(out, L, false, nullptr);
    if (res.boolean) {
      out << "boolean: yes" << (res.degenerate ? " (degenerate)" : "") << "\n";
      out << "table: " << table_text(L, res.table->img) << "\n";
    } else {
      out << "boolean: no (no table satisfies (‡))\n";
    }
  }
  return res.boolean ? 0 : 1;
}

int run_enumerate(const GlobalOpts& g, int max_n, std::ostream& out) {
  if (g.json()) {
    ordered_json sizes = ordered_json::object();
    for (int n = 1; n <= max_n; ++n) {
      std::vector<Lattice> ls = enumerate_lattices(n);
      ordered_json entry;
      entry["count"] = ls.size();
      ordered_json arr = ordered_json::array();
      for (const Lattice& L : ls) arr.push_back(lattice_to_json(L));
      entry["lattices"] = std::move(arr);
      sizes[std::to_string(n)] = std::move(entry);
    }
    ordered_json j;
    j["max_n"] = max_n;
    j["sizes"] = std::move(sizes);
    out << j.dump(2) << "\n";
  } else {
    for (int n = 1; n <= max_n; ++n) {
      std::vector<Lattice> ls = enumerate_lattices(n);
      out << "n=" << n << ": " << ls.size()
          << (ls.size() == 1 ? " lattice\n" : " lattices\n");
      for (const Lattice& L : ls) {
        ordered_json covers = ordered_json::array();
        for (auto [lo, hi] : covers_of(L)) covers.push_back({lo, hi});
        out << "  covers " << covers.dump() << "\n";
      }
    }
  }
  return 0;
}

void print_search_text(std::ostream& out, const SearchReport& rep,
                       bool complete) {
  out << "searched sizes 1.." << rep.max_n
      << (rep.require_wdn ? " (equal tables only)" : "") << "\n";
  out << "note: finite carriers are always bounded, so assuming bounds or "
         "deriving them from A1-A3 reads the same here\n";
  if (!complete) {
    out << "stopped early, fully examined sizes:\n";
    for (const auto& [n, pairs] : rep.pairs_by_size)
      out << "  size " << n << ": " << pairs << " pairs\n";
    return;
  }
  if (rep.counterexample) {
    const Counterexample& ce = *rep.counterexample;
    out << "counterexample found: A3 and A3' hold but " << axiom_name(ce.violated)
        << " " << axiom_alias(ce.violated) << " fails\n";
    ordered_json covers = ordered_json::array();
    for (auto [lo, hi] : covers_of(ce.lattice)) covers.push_back({lo, hi});
    out << "  lattice covers " << covers.dump() << "\n";
    out << "  weak table " << table_text(ce.lattice, ce.weak.img) << "\n";
    out << "  dual table " << table_text(ce.lattice, ce.dual.img) << "\n";
    out << "  " << axiom_name(ce.violated) << ": " << axiom_equation(ce.violated)
        << " fails " << witness_text(ce.lattice, ce.violated, ce.witness)
        << "\n";
  } else {
    out << "exhausted: no counterexample\n";
    for (const auto& [n, pairs] : rep.pairs_by_size)
      out << "  size " << n << ": " << pairs << " pairs\n";
  }
}

int run_search(const GlobalOpts& g, int max_n, bool require_wdn,
               std::ostream& out, std::ostream& err) {
  SearchConfig cfg;
  cfg.max_n = max_n;
  cfg.require_wdn = require_wdn;
  cfg.workers = g.workers;
  cfg.budget = g.budget;
  cfg.timings = g.timings;
  try {
    SearchReport rep = search_open_question(cfg);
    if (g.json())
      out << search_report_to_json(rep).dump(2) << "\n";
    else
      print_search_text(out, rep, true);
    return rep.counterexample ? 10 : 0;
  } catch (const SearchBudgetExceeded& e) {
    ordered_json j = search_report_to_json(e.partial);
    j["budget_exceeded"] = {{"budget", e.budget}, {"needed", e.needed}};
    if (g.json())
      out << j.dump(2) << "\n";
    else
      print_search_text(out, e.partial, false);
    err << "error: " << e.what() << "\n";
    return 4;
  }
}

int run_fca(const GlobalOpts& g, const std::string& path, std::ostream& out) {
  FormalContext ctx = parse_cxt(read_text_file(path));
  const std::uint64_t cap = g.budget_set ? g.budget : kConceptBudget;
  ConceptAlgebra ca = build_concept_algebra(ctx, cap);
  if (g.json()) {
    ordered_json j;
    j["algebra"] = algebra_to_json(ca.algebra);
    j["concepts"] = concepts_to_json(ctx, ca.concepts).at("concepts");
    out << j.dump(2) << "\n";
  } else {
    out << ca.concepts.size() << " concepts\n";
    for (std::size_t i = 0; i < ca.concepts.size(); ++i) {
      const FormalConcept& c = ca.concepts[i];
      out << "  c" << i << ": extent {";
      for (std::size_t k = 0; k < c.extent.size(); ++k)
        out << (k ? ", " : "") << ctx.objects[c.extent[k]];
      out << "} intent {";
      for (std::size_t k = 0; k < c.intent.size(); ++k)
        out << (k ? ", " : "") << ctx.attributes[c.intent[k]];
      out << "}\n";
    }
    out << "weak negation and opposition validated against A1-A3'\n";
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"finite-model workbench for weakly dicomplemented lattices"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--workers", g.workers, "parallel worker count")
      ->check(CLI::Range(1, 4096));
  auto* budget_opt =
      app.add_option("--budget", g.budget, "table evaluation budget")
          ->envname("WDL_BUDGET");
  app.add_flag("--timings", g.timings, "report wall-clock time");

  // Global flags are accepted after the subcommand name as well.
  std::string check_path, check_axioms;
  auto* check = app.add_subcommand("check", "verify axioms of an algebra");
  check->fallthrough();
  check->add_option("algebra", check_path, "algebra JSON file")->required();
  check->add_option("--axioms", check_axioms, "comma list, e.g. A1,A3,DDAG");

  std::string rec_path;
  int rec_bound = kRecognizeBound;
  auto* rec = app.add_subcommand(
      "recognize", "decide Boolean-ness via the single equation");
  rec->fallthrough();
  rec->add_option("lattice", rec_path, "lattice JSON file")->required();
  rec->add_option("--max-n", rec_bound, "largest accepted carrier");

  int enum_max_n = 0;
  auto* enu =
      app.add_subcommand("enumerate", "list lattices up to isomorphism");
  enu->fallthrough();
  enu->add_option("--max-n", enum_max_n, "largest size to enumerate")
      ->required()
      ->check(CLI::Range(1, kEnumerateBound));

  int search_max_n = 0;
  bool require_wdn = false;
  auto* search = app.add_subcommand(
      "search", "test whether A1,A1',A2,A2' follow from A3,A3'");
  search->fallthrough();
  search->add_option("--max-n", search_max_n, "largest size to search")
      ->required()
      ->check(CLI::Range(1, kEnumerateBound));
  search->add_flag("--require-wdn", require_wdn,
                   "restrict to pairs with equal tables");

  std::string fca_path;
  auto* fca = app.add_subcommand("fca", "build a concept algebra");
  fca->fallthrough();
  fca->add_option("context", fca_path, "Burmeister .cxt file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.get_name() << ": " << e.what() << "\n";
    return 2;
  }
  g.budget_set = budget_opt->count() > 0;

  try {
    if (*check) return run_check(g, check_path, check_axioms, out);
    if (*rec) return run_recognize(g, rec_path, rec_bound, out);
    if (*enu) return run_enumerate(g, enum_max_n, out);
    if (*search) return run_search(g, search_max_n, require_wdn, out, err);
    if (*fca) return run_fca(g, fca_path, out);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace wdl
