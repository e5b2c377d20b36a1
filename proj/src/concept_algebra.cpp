#include "wdl/concept_algebra.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

namespace wdl {

namespace {

struct Bits {
  int n = 0;
  std::vector<std::uint64_t> w;

  explicit Bits(int n_) : n(n_), w((n_ + 63) / 64, 0) {}
  void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  bool operator==(const Bits& o) const { return w == o.w; }

  bool subset_of(const Bits& o) const {
    for (std::size_t k = 0; k < w.size(); ++k)
      if (w[k] & ~o.w[k]) return false;
    return true;
  }
  static Bits full(int n_) {
    Bits b(n_);
    for (int i = 0; i < n_; ++i) b.set(i);
    return b;
  }
  Bits complemented() const {
    Bits b(n);
    for (int i = 0; i < n; ++i)
      if (!test(i)) b.set(i);
    return b;
  }
  std::vector<int> indices() const {
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
      if (test(i)) out.push_back(i);
    return out;
  }
};

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char ch : text) {
    if (ch == '\n') {
      if (!cur.empty() && cur.back() == '\r') cur.pop_back();
      lines.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty() && cur.back() == '\r') cur.pop_back();
  lines.push_back(cur);
  return lines;
}

std::optional<int> parse_count(const std::string& s) {
  if (s.empty()) return std::nullopt;
  long v = 0;
  for (char ch : s) {
    if (ch < '0' || ch > '9') return std::nullopt;
    v = v * 10 + (ch - '0');
    if (v > 1000000) return std::nullopt;
  }
  return static_cast<int>(v);
}

}  // namespace

FormalContext parse_cxt(const std::string& text) {
  const std::vector<std::string> lines = split_lines(text);
  auto line = [&](std::size_t i) -> const std::string& {
    static const std::string empty;
    return i < lines.size() ? lines[i] : empty;
  };

  if (line(0) != "B") throw MalformedHeader("first line must be 'B'");
  if (!line(1).empty())
    throw MalformedHeader("expected a blank line after the header");
  auto g = parse_count(line(2));
  if (!g) throw MalformedHeader("object count is not a number");
  auto m = parse_count(line(3));
  if (!m) throw MalformedHeader("attribute count is not a number");
  if (!line(4).empty())
    throw MalformedHeader("expected a blank line after the counts");

  const std::size_t names_at = 5;
  const std::size_t rows_at = names_at + *g + *m;
  if (lines.size() < rows_at + *g)
    throw DimensionMismatch("file ends before all names and rows are given");

  FormalContext ctx;
  for (int i = 0; i < *g; ++i) {
    const std::string& name = lines[names_at + i];
    if (name.empty()) throw MalformedHeader("empty object name");
    ctx.objects.push_back(name);
  }
  for (int i = 0; i < *m; ++i) {
    const std::string& name = lines[names_at + *g + i];
    if (name.empty()) throw MalformedHeader("empty attribute name");
    ctx.attributes.push_back(name);
  }
  for (std::size_t i = 0; i < ctx.objects.size(); ++i)
    for (std::size_t j = i + 1; j < ctx.objects.size(); ++j)
      if (ctx.objects[i] == ctx.objects[j])
        throw MalformedHeader("duplicate object name: " + ctx.objects[i]);
  for (std::size_t i = 0; i < ctx.attributes.size(); ++i)
    for (std::size_t j = i + 1; j < ctx.attributes.size(); ++j)
      if (ctx.attributes[i] == ctx.attributes[j])
        throw MalformedHeader("duplicate attribute name: " + ctx.attributes[i]);

  ctx.incidence.assign(static_cast<std::size_t>(*g) * *m, 0);
  for (int r = 0; r < *g; ++r) {
    std::string row = lines[rows_at + r];
    while (!row.empty() && (row.back() == ' ' || row.back() == '\t'))
      row.pop_back();
    if (static_cast<int>(row.size()) != *m)
      throw DimensionMismatch("row " + std::to_string(r) + " has length " +
                              std::to_string(row.size()) + ", expected " +
                              std::to_string(*m));
    for (int c = 0; c < *m; ++c) {
      if (row[c] == 'X')
        ctx.incidence[static_cast<std::size_t>(r) * *m + c] = 1;
      else if (row[c] != '.')
        throw IllegalCell(std::string("cell (") + std::to_string(r) + "," +
                          std::to_string(c) + ") is '" + row[c] +
                          "', expected '.' or 'X'");
    }
  }
  for (std::size_t i = rows_at + *g; i < lines.size(); ++i)
    if (!lines[i].empty())
      throw DimensionMismatch("unexpected content after the incidence rows");
  return ctx;
}

std::string emit_cxt(const FormalContext& ctx) {
  std::string out = "B\n\n";
  out += std::to_string(ctx.objects.size()) + "\n";
  out += std::to_string(ctx.attributes.size()) + "\n\n";
  for (const auto& name : ctx.objects) out += name + "\n";
  for (const auto& name : ctx.attributes) out += name + "\n";
  for (std::size_t g = 0; g < ctx.objects.size(); ++g) {
    for (std::size_t m = 0; m < ctx.attributes.size(); ++m)
      out += ctx.has(static_cast<int>(g), static_cast<int>(m)) ? 'X' : '.';
    out += '\n';
  }
  return out;
}

namespace {

Bits derive_objects(const FormalContext& ctx, const Bits& objs) {
  const int m = static_cast<int>(ctx.attributes.size());
  Bits out = Bits::full(m);
  for (int g = 0; g < objs.n; ++g) {
    if (!objs.test(g)) continue;
    for (int a = 0; a < m; ++a)
      if (!ctx.has(g, a)) out.reset(a);
  }
  return out;
}

Bits derive_attributes(const FormalContext& ctx, const Bits& attrs) {
  const int n = static_cast<int>(ctx.objects.size());
  Bits out = Bits::full(n);
  for (int a = 0; a < attrs.n; ++a) {
    if (!attrs.test(a)) continue;
    for (int g = 0; g < n; ++g)
      if (!ctx.has(g, a)) out.reset(g);
  }
  return out;
}

Bits extent_closure(const FormalContext& ctx, const Bits& objs) {
  return derive_attributes(ctx, derive_objects(ctx, objs));
}

}  // namespace

std::vector<int> derive(const FormalContext& ctx, Side side,
                        const std::vector<int>& subset) {
  const int g = static_cast<int>(ctx.objects.size());
  const int m = static_cast<int>(ctx.attributes.size());
  const int limit = side == Side::Objects ? g : m;
  Bits in(limit);
  for (int i : subset) {
    if (i < 0 || i >= limit)
      throw OutOfRange("subset index " + std::to_string(i) +
                       " outside the context");
    in.set(i);
  }
  Bits out = side == Side::Objects ? derive_objects(ctx, in)
                                   : derive_attributes(ctx, in);
  return out.indices();
}

ConceptAlgebra build_concept_algebra(const FormalContext& ctx,
                                     std::uint64_t budget) {
  const int g = static_cast<int>(ctx.objects.size());

  // Ganter's closure enumeration, ascending lectic order. Lectic order
  // refines extent inclusion, so positions are a linear extension and the
  // lattice build keeps them.
  std::vector<Bits> extents;
  Bits A = extent_closure(ctx, Bits(g));
  extents.push_back(A);
  while (true) {
    if (extents.size() > budget) throw ConceptExplosion(budget);
    std::optional<Bits> next;
    for (int i = g - 1; i >= 0; --i) {
      if (A.test(i)) {
        A.reset(i);
        continue;
      }
      Bits candidate = A;
      candidate.set(i);
      Bits B = extent_closure(ctx, candidate);
      bool skips_below = false;
      for (int j = 0; j < i && !skips_below; ++j)
        if (B.test(j) && !A.test(j)) skips_below = true;
      if (!skips_below) {
        next = B;
        break;
      }
    }
    if (!next) break;
    A = *next;
    extents.push_back(A);
  }
  if (extents.size() > budget) throw ConceptExplosion(budget);

  const int n = static_cast<int>(extents.size());
  std::map<std::vector<std::uint64_t>, int> index_of;
  for (int i = 0; i < n; ++i) index_of[extents[i].w] = i;
  auto lookup = [&](const Bits& e) {
    auto it = index_of.find(e.w);
    if (it == index_of.end())
      throw std::logic_error("derived extent is not closed");
    return it->second;
  };

  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (extents[i].subset_of(extents[j])) leq[i * n + j] = 1;

  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = "c" + std::to_string(i);
  Lattice L = build_lattice_from_order(n, leq, labels);

  std::vector<int> weak(n), dual(n);
  for (int i = 0; i < n; ++i) {
    weak[i] = lookup(extent_closure(ctx, extents[i].complemented()));
    Bits intent = derive_objects(ctx, extents[i]);
    dual[i] = lookup(derive_attributes(ctx, intent.complemented()));
  }

  ConceptAlgebra result;
  result.algebra = make_algebra(std::move(L), std::move(weak), std::move(dual));
  for (int i = 0; i < n; ++i) {
    FormalConcept c;
    c.extent = extents[i].indices();
    c.intent = derive_objects(ctx, extents[i]).indices();
    result.concepts.push_back(std::move(c));
  }

  for (AxiomId a : {AxiomId::A1, AxiomId::A1p, AxiomId::A2, AxiomId::A2p,
                    AxiomId::A3, AxiomId::A3p})
    if (!check_axiom(result.algebra, a).pass)
      throw std::logic_error(std::string("concept algebra violates ") +
                             axiom_name(a));
  return result;
}

}  // namespace wdl
