#include "wdl/json_io.hpp"

#include <fstream>
#include <sstream>

namespace wdl {

namespace {

int require_int(const ordered_json& j, const char* field) {
  if (!j.contains(field) || !j.at(field).is_number_integer())
    throw Error(std::string("field '") + field + "' must be an integer");
  return j.at(field).get<int>();
}

std::vector<int> int_array(const ordered_json& j, const std::string& field) {
  if (!j.is_array()) throw Error("field '" + field + "' must be an array");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer())
      throw Error("field '" + field + "' must hold integers");
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

ordered_json lattice_to_json(const Lattice& L) {
  ordered_json j;
  j["n"] = L.n;
  ordered_json covers = ordered_json::array();
  for (auto [lo, hi] : covers_of(L)) covers.push_back({lo, hi});
  j["covers"] = std::move(covers);
  if (!L.labels.empty()) j["labels"] = L.labels;
  return j;
}

Lattice lattice_from_json(const ordered_json& j) {
  if (!j.is_object()) throw Error("lattice JSON must be an object");
  const int n = require_int(j, "n");
  if (n <= 0) throw Error("field 'n' must be positive");
  if (!j.contains("covers") || !j.at("covers").is_array())
    throw Error("field 'covers' must be an array of pairs");
  std::vector<std::pair<int, int>> covers;
  for (const auto& c : j.at("covers")) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() ||
        !c[1].is_number_integer())
      throw Error("field 'covers' entries must be [lower, upper] pairs");
    covers.emplace_back(c[0].get<int>(), c[1].get<int>());
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j.at("labels").is_array())
      throw Error("field 'labels' must be an array of strings");
    for (const auto& s : j.at("labels")) {
      if (!s.is_string()) throw Error("field 'labels' must hold strings");
      labels.push_back(s.get<std::string>());
    }
  }
  return build_lattice(n, covers, std::move(labels));
}

ordered_json algebra_to_json(const DicompAlgebra& A) {
  ordered_json j;
  j["lattice"] = lattice_to_json(A.lattice);
  j["weak"] = A.weak.img;
  if (A.dual) j["dual"] = A.dual->img;
  return j;
}

DicompAlgebra algebra_from_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("lattice"))
    throw Error("field 'lattice' is required");
  Lattice L = lattice_from_json(j.at("lattice"));
  if (!j.contains("weak")) throw Error("field 'weak' is required");
  std::vector<int> weak = int_array(j.at("weak"), "weak");
  std::optional<std::vector<int>> dual;
  if (j.contains("dual")) dual = int_array(j.at("dual"), "dual");

  // Tables arrive in the caller's indexing; follow the relabeling the
  // lattice build applied.
  const auto& perm = L.input_to_canonical;
  auto conjugate = [&](std::vector<int>& t) {
    if (static_cast<int>(t.size()) != L.n)
      throw Error("operation tables must list one image per element");
    for (int v : t)
      if (v < 0 || v >= L.n)
        throw OutOfRange("operation table entry outside the carrier");
    std::vector<int> out(t.size());
    for (int x = 0; x < L.n; ++x) out[perm[x]] = perm[t[x]];
    t = std::move(out);
  };
  conjugate(weak);
  if (dual) conjugate(*dual);
  return make_algebra(std::move(L), std::move(weak), std::move(dual));
}

ordered_json report_to_json(const AxiomReport& r) {
  ordered_json verdicts = ordered_json::object();
  for (const auto& [id, v] : r.verdicts) {
    if (v.pass) {
      verdicts[axiom_name(id)] = "pass";
    } else {
      ordered_json f;
      f["witness"] = v.witness->tuple;
      f["lhs"] = v.witness->lhs;
      f["rhs"] = v.witness->rhs;
      if (!v.witness->part.empty()) f["part"] = v.witness->part;
      verdicts[axiom_name(id)] = std::move(f);
    }
  }
  ordered_json j;
  j["verdicts"] = std::move(verdicts);
  if (r.degenerate) j["degenerate"] = true;
  return j;
}

ordered_json congruence_to_json(const Congruence& c) {
  ordered_json j;
  j["blocks"] = blocks_of(c);
  return j;
}

ordered_json homomorphism_to_json(const Homomorphism& h) {
  ordered_json j;
  j["map"] = h.map;
  j["target_interval"] = {h.target.lo, h.target.hi};
  return j;
}

ordered_json search_report_to_json(const SearchReport& r) {
  ordered_json j;
  j["max_n"] = r.max_n;
  if (r.require_wdn) j["require_wdn"] = true;
  ordered_json outcome;
  if (r.counterexample) {
    const Counterexample& ce = *r.counterexample;
    ordered_json c;
    c["lattice"] = lattice_to_json(ce.lattice);
    c["weak"] = ce.weak.img;
    c["dual"] = ce.dual.img;
    c["violated"] = axiom_name(ce.violated);
    c["witness"] = ce.witness.tuple;
    outcome["counterexample"] = std::move(c);
  } else {
    ordered_json sizes = ordered_json::object();
    for (const auto& [n, pairs] : r.pairs_by_size)
      sizes[std::to_string(n)] = ordered_json{{"pairs", pairs}};
    outcome["exhausted"] = std::move(sizes);
  }
  j["outcome"] = std::move(outcome);
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

ordered_json concepts_to_json(const FormalContext& ctx,
                              const std::vector<FormalConcept>& concepts) {
  ordered_json list = ordered_json::array();
  for (const FormalConcept& c : concepts) {
    ordered_json e;
    ordered_json extent = ordered_json::array();
    for (int g : c.extent) extent.push_back(ctx.objects[g]);
    ordered_json intent = ordered_json::array();
    for (int m : c.intent) intent.push_back(ctx.attributes[m]);
    e["extent"] = std::move(extent);
    e["intent"] = std::move(intent);
    list.push_back(std::move(e));
  }
  ordered_json j;
  j["concepts"] = std::move(list);
  return j;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace wdl
