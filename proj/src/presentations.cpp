#include "whq/presentations.hpp"

#include <algorithm>
#include <set>

namespace whq {

namespace {

std::string triple(int a, int b, int c) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
}

}  // namespace

void validate_loop(const LoopTable& L) {
  const int n = L.order;
  if (n < 1) throw NotIPLoop("loop order must be positive");
  if (L.identity < 0 || L.identity >= n) throw NotIPLoop("identity index out of range");
  if (static_cast<int>(L.table.size()) != n) throw NotIPLoop("table has wrong number of rows");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(L.table[i].size()) != n)
      throw NotIPLoop("table row " + std::to_string(i) + " has wrong length");
    std::vector<bool> row(n, false), col(n, false);
    for (int j = 0; j < n; ++j) {
      int r = L.table[i][j], c = L.table[j][i];
      if (r < 0 || r >= n || c < 0 || c >= n) throw NotIPLoop("table entry out of range");
      if (row[r]) throw NotIPLoop("row " + std::to_string(i) + " is not a permutation");
      if (col[c]) throw NotIPLoop("column " + std::to_string(i) + " is not a permutation");
      row[r] = col[c] = true;
    }
  }
  for (int i = 0; i < n; ++i) {
    if (L.table[L.identity][i] != i || L.table[i][L.identity] != i)
      throw NotIPLoop("identity does not act trivially at " + std::to_string(i));
  }
}

std::vector<int> ip_inverses(const LoopTable& L) {
  validate_loop(L);
  const int n = L.order;
  std::vector<int> inv(n, -1);
  for (int f = 0; f < n; ++f) {
    for (int g = 0; g < n; ++g)
      if (L.table[f][g] == L.identity) {
        inv[f] = g;
        break;
      }
    if (L.table[inv[f]][f] != L.identity)
      throw NotIPLoop("inverse of " + std::to_string(f) + " is not two-sided");
  }
  for (int f = 0; f < n; ++f)
    for (int g = 0; g < n; ++g) {
      if (L.table[inv[f]][L.table[f][g]] != g)
        throw NotIPLoop("left inverse property fails at " + triple(f, g, L.table[f][g]));
      if (L.table[L.table[g][f]][inv[f]] != g)
        throw NotIPLoop("right inverse property fails at " + triple(g, f, L.table[g][f]));
    }
  return inv;
}

bool is_associative(const LoopTable& L) {
  const int n = L.order;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (L.table[L.table[a][b]][c] != L.table[a][L.table[b][c]]) return false;
  return true;
}

std::vector<std::string> loop_labels(int order) {
  int width = 1;
  for (int v = order - 1; v >= 10; v /= 10) ++width;
  std::vector<std::string> labels;
  labels.reserve(order);
  for (int i = 0; i < order; ++i) {
    std::string digits = std::to_string(i);
    labels.push_back("g" + std::string(width - digits.size(), '0') + digits);
  }
  return labels;
}

WeakHopfQuasigroup from_loop(const LoopTable& L, const Field& F) {
  std::vector<int> inv = ip_inverses(L);
  const int n = L.order;
  const Scalar one = Scalar::one(F);

  LinMap unit(F, n, 1);
  unit.set(L.identity, 0, one);
  LinMap mul(F, n, n * n);
  LinMap comul(F, n * n, n);
  LinMap counit(F, 1, n);
  LinMap antipode(F, n, n);
  for (int f = 0; f < n; ++f) {
    for (int g = 0; g < n; ++g) mul.set(L.table[f][g], f * n + g, one);
    comul.set(f * n + f, f, one);
    counit.set(0, f, one);
    antipode.set(inv[f], f, one);
  }
  return WeakHopfQuasigroup(std::move(unit), std::move(mul), std::move(counit), std::move(comul),
                            std::move(antipode), std::nullopt, loop_labels(n));
}

namespace {

// Shared index form for both cell presentations.
struct CellData {
  std::vector<std::string> objects;
  std::vector<Cell> cells;  // sorted by name
  std::map<std::string, int> index_of;
  std::vector<int> src, tgt;                // object indices
  std::vector<int> identity;                // per object: cell index
  std::vector<std::vector<int>> comp;       // comp[g][f] = g∘f or -1
  std::vector<std::vector<int>> inverses;   // designated first

  const std::string& name(int i) const { return cells[i].name; }
  int compose(int g, int f) const { return comp[g][f]; }
};

CellData index_cells(const std::vector<std::string>& objects, const std::vector<Cell>& cells_in,
                     const std::map<std::string, std::string>& identity_of,
                     const std::map<std::pair<std::string, std::string>, std::string>& composition,
                     const std::map<std::string, std::vector<std::string>>& inverses) {
  CellData d;
  d.objects = objects;
  std::map<std::string, int> obj_index;
  for (std::size_t i = 0; i < objects.size(); ++i) {
    if (!obj_index.emplace(objects[i], static_cast<int>(i)).second)
      throw InvalidPresentation("duplicate object " + objects[i]);
  }
  d.cells = cells_in;
  std::sort(d.cells.begin(), d.cells.end(),
            [](const Cell& a, const Cell& b) { return a.name < b.name; });
  const int n = static_cast<int>(d.cells.size());
  if (n == 0) throw InvalidPresentation("presentation has no cells");
  for (int i = 0; i < n; ++i) {
    const Cell& c = d.cells[i];
    if (!d.index_of.emplace(c.name, i).second)
      throw InvalidPresentation("duplicate cell " + c.name);
    auto s = obj_index.find(c.src), t = obj_index.find(c.tgt);
    if (s == obj_index.end() || t == obj_index.end())
      throw InvalidPresentation("cell " + c.name + " has an unknown endpoint");
    d.src.push_back(s->second);
    d.tgt.push_back(t->second);
  }

  d.identity.assign(objects.size(), -1);
  for (std::size_t x = 0; x < objects.size(); ++x) {
    auto it = identity_of.find(objects[x]);
    if (it == identity_of.end())
      throw InvalidPresentation("object " + objects[x] + " has no identity cell");
    auto c = d.index_of.find(it->second);
    if (c == d.index_of.end()) throw InvalidPresentation("unknown identity cell " + it->second);
    int i = c->second;
    if (d.src[i] != static_cast<int>(x) || d.tgt[i] != static_cast<int>(x))
      throw InvalidPresentation("identity cell of " + objects[x] + " is not an endocell");
    d.identity[x] = i;
  }

  d.comp.assign(n, std::vector<int>(n, -1));
  for (const auto& [pair, result] : composition) {
    auto g = d.index_of.find(pair.first), f = d.index_of.find(pair.second),
         r = d.index_of.find(result);
    if (g == d.index_of.end() || f == d.index_of.end() || r == d.index_of.end())
      throw InvalidPresentation("composition entry mentions an unknown cell");
    if (d.src[g->second] != d.tgt[f->second])
      throw InvalidPresentation("composition " + pair.first + "∘" + pair.second +
                                " is declared on a non-composable pair");
    d.comp[g->second][f->second] = r->second;
  }
  for (int g = 0; g < n; ++g)
    for (int f = 0; f < n; ++f)
      if (d.src[g] == d.tgt[f] && d.comp[g][f] < 0)
        throw InvalidPresentation("composable pair " + d.name(g) + "∘" + d.name(f) +
                                  " has no composition entry");

  d.inverses.assign(n, {});
  for (const auto& [name, invs] : inverses) {
    auto f = d.index_of.find(name);
    if (f == d.index_of.end()) throw InvalidPresentation("inverse entry for unknown cell " + name);
    for (const auto& g_name : invs) {
      auto g = d.index_of.find(g_name);
      if (g == d.index_of.end())
        throw InvalidPresentation("unknown inverse cell " + g_name + " for " + name);
      if (d.src[g->second] != d.tgt[f->second] || d.tgt[g->second] != d.src[f->second])
        throw InconsistentPresentation("inverse " + g_name + " of " + name +
                                       " violates source/target");
      d.inverses[f->second].push_back(g->second);
    }
  }
  for (int f = 0; f < n; ++f)
    if (d.inverses[f].empty())
      throw InvalidPresentation("cell " + d.name(f) + " has no inverse");

  // Normality: identity cells act strictly.
  for (int f = 0; f < n; ++f) {
    int lt = d.identity[d.tgt[f]];
    int rs = d.identity[d.src[f]];
    if (d.comp[lt][f] != f || d.comp[f][rs] != f)
      throw InvalidPresentation("identity cells do not act trivially on " + d.name(f));
  }
  return d;
}

}  // namespace

void validate_groupoid(const GroupoidPresentation& G) {
  std::map<std::string, std::vector<std::string>> inv;
  for (const auto& [f, g] : G.inverse) inv[f] = {g};
  CellData d = index_cells(G.objects, G.arrows, G.identity_of, G.composition, inv);
  const int n = static_cast<int>(d.cells.size());

  // Composites must have coherent endpoints and compose associatively.
  for (int g = 0; g < n; ++g)
    for (int f = 0; f < n; ++f) {
      int r = d.compose(g, f);
      if (r < 0) continue;
      if (d.src[r] != d.src[f] || d.tgt[r] != d.tgt[g])
        throw NotGroupoid("composite " + d.name(g) + "∘" + d.name(f) + " has wrong endpoints");
    }
  for (int h = 0; h < n; ++h)
    for (int g = 0; g < n; ++g) {
      int hg = d.compose(h, g);
      if (hg < 0) continue;
      for (int f = 0; f < n; ++f) {
        int gf = d.compose(g, f);
        if (gf < 0) continue;
        if (d.compose(hg, f) != d.compose(h, gf))
          throw NotGroupoid("composition is not associative at (" + d.name(h) + ", " + d.name(g) +
                            ", " + d.name(f) + ")");
      }
    }
  for (int f = 0; f < n; ++f) {
    int g = d.inverses[f][0];
    if (d.compose(g, f) != d.identity[d.src[f]] || d.compose(f, g) != d.identity[d.tgt[f]])
      throw NotGroupoid("inverse laws fail for " + d.name(f));
  }
}

WeakHopfQuasigroup from_groupoid(const GroupoidPresentation& G, const Field& F) {
  validate_groupoid(G);
  std::map<std::string, std::vector<std::string>> inv;
  for (const auto& [f, g] : G.inverse) inv[f] = {g};
  CellData d = index_cells(G.objects, G.arrows, G.identity_of, G.composition, inv);
  const int n = static_cast<int>(d.cells.size());
  const Scalar one = Scalar::one(F);

  LinMap unit(F, n, 1);
  for (int id_cell : d.identity) unit.set(id_cell, 0, one);
  LinMap mul(F, n, n * n);
  LinMap comul(F, n * n, n);
  LinMap counit(F, 1, n);
  LinMap antipode(F, n, n);
  std::vector<std::string> labels;
  for (int g = 0; g < n; ++g) {
    for (int f = 0; f < n; ++f) {
      int r = d.compose(g, f);
      if (r >= 0) mul.set(r, g * n + f, one);
    }
    comul.set(g * n + g, g, one);
    counit.set(0, g, one);
    antipode.set(d.inverses[g][0], g, one);
    labels.push_back(d.name(g));
  }
  return WeakHopfQuasigroup(std::move(unit), std::move(mul), std::move(counit), std::move(comul),
                            std::move(antipode), std::nullopt, std::move(labels));
}

void validate_bigroupoid(const BigroupoidPresentation& B) {
  index_cells(B.zero_cells, B.one_cells, B.identity_of, B.composition, B.inverses);
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    // Smaller index wins; keeps representatives deterministic.
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

QuotientResult from_bigroupoid(const BigroupoidPresentation& B, const Field& F) {
  CellData d = index_cells(B.zero_cells, B.one_cells, B.identity_of, B.composition, B.inverses);
  const int n = static_cast<int>(d.cells.size());

  // Relation generators: h - g(fh) and p - (pf)g, over every cell f,
  // every inverse g of f (the relation is symmetric) and composable h, p.
  // A generator whose right half is undefined is a bare one-cell.
  std::vector<std::pair<int, int>> work;
  auto push_pair = [&](int a, int b) {
    if (a != b) work.emplace_back(std::min(a, b), std::max(a, b));
  };
  std::vector<std::vector<int>> inv_sym(n);
  for (int f = 0; f < n; ++f)
    for (int g : d.inverses[f]) {
      inv_sym[f].push_back(g);
      inv_sym[g].push_back(f);
    }
  for (int f = 0; f < n; ++f)
    for (int g : inv_sym[f]) {
      for (int h = 0; h < n; ++h) {
        if (d.tgt[h] != d.src[f]) continue;
        int gfh = d.compose(g, d.compose(f, h));
        if (gfh < 0)
          throw ImproperIdeal("ideal contains the one-cell " + d.name(h) + ": g(f h) is zero for f=" +
                              d.name(f) + ", g=" + d.name(g));
        push_pair(h, gfh);
      }
      for (int p = 0; p < n; ++p) {
        if (d.src[p] != d.tgt[f]) continue;
        int pfg = d.compose(d.compose(p, f), g);
        if (pfg < 0)
          throw ImproperIdeal("ideal contains the one-cell " + d.name(p) + ": (p f)g is zero for f=" +
                              d.name(f) + ", g=" + d.name(g));
        push_pair(p, pfg);
      }
    }

  // Close the span of the generator differences under one-cell
  // multiplication. A pair multiplies to another difference when both
  // products are defined, vanishes when neither is, and leaves a bare
  // one-cell in the ideal when exactly one is -- which kills the quotient.
  UnionFind uf(n);
  std::set<std::pair<int, int>> processed;
  while (!work.empty()) {
    auto [a, b] = work.back();
    work.pop_back();
    if (!processed.insert({a, b}).second) continue;
    uf.unite(a, b);
    for (int c = 0; c < n; ++c) {
      int ca = d.compose(c, a), cb = d.compose(c, b);
      if ((ca < 0) != (cb < 0))
        throw ImproperIdeal("ideal contains the one-cell " + d.name(ca < 0 ? cb : ca) +
                            " (left multiplication of " + d.name(a) + " - " + d.name(b) + " by " +
                            d.name(c) + ")");
      if (ca >= 0) push_pair(ca, cb);
      int ac = d.compose(a, c), bc = d.compose(b, c);
      if ((ac < 0) != (bc < 0))
        throw ImproperIdeal("ideal contains the one-cell " + d.name(ac < 0 ? bc : ac) +
                            " (right multiplication of " + d.name(a) + " - " + d.name(b) + " by " +
                            d.name(c) + ")");
      if (ac >= 0) push_pair(ac, bc);
    }
  }

  // Classes must be endpoint-homogeneous and inverse-consistent for the
  // quotient structure to be well-defined on class representatives.
  for (int a = 0; a < n; ++a) {
    int r = uf.find(a);
    if (d.src[a] != d.src[r] || d.tgt[a] != d.tgt[r])
      throw InconsistentPresentation("identified cells " + d.name(a) + " and " + d.name(r) +
                                     " have different endpoints");
    if (uf.find(d.inverses[a][0]) != uf.find(d.inverses[r][0]))
      throw InconsistentPresentation("inverse class of " + d.name(a) +
                                     " depends on the representative");
    for (int g : inv_sym[a])
      if (uf.find(g) != uf.find(d.inverses[a][0]))
        throw InconsistentPresentation("listed inverses of " + d.name(a) +
                                       " fall into different classes");
  }

  // Basis: classes ordered by their representative cell name. Cells were
  // sorted by name, so the smallest index in a class is its representative.
  std::vector<int> reps;
  for (int a = 0; a < n; ++a)
    if (uf.find(a) == a) reps.push_back(a);
  const int dim = static_cast<int>(reps.size());
  std::vector<int> class_index(n, -1);
  for (int k = 0; k < dim; ++k) class_index[reps[k]] = k;
  for (int a = 0; a < n; ++a) class_index[a] = class_index[uf.find(a)];

  // Representative-independence of the product.
  for (int g = 0; g < n; ++g)
    for (int f = 0; f < n; ++f) {
      int gf = d.compose(g, f), rgf = d.compose(uf.find(g), uf.find(f));
      if ((gf < 0) != (rgf < 0) || (gf >= 0 && class_index[gf] != class_index[rgf]))
        throw InconsistentPresentation("product of classes is not well-defined at " + d.name(g) +
                                       "∘" + d.name(f));
    }

  const Scalar one = Scalar::one(F);
  LinMap unit(F, dim, 1);
  for (std::size_t x = 0; x < d.objects.size(); ++x)
    unit.add_to(class_index[d.identity[x]], 0, one);
  LinMap mul(F, dim, dim * dim);
  LinMap comul(F, dim * dim, dim);
  LinMap counit(F, 1, dim);
  LinMap antipode(F, dim, dim);
  std::vector<std::string> labels;
  for (int k = 0; k < dim; ++k) {
    int rep = reps[k];
    for (int l = 0; l < dim; ++l) {
      int r = d.compose(rep, reps[l]);
      if (r >= 0) mul.set(class_index[r], k * dim + l, one);
    }
    comul.set(k * dim + k, k, one);
    counit.set(0, k, one);
    antipode.set(class_index[d.inverses[rep][0]], k, one);
    labels.push_back(d.name(rep));
  }

  QuotientResult out{
      WeakHopfQuasigroup(std::move(unit), std::move(mul), std::move(counit), std::move(comul),
                         std::move(antipode), std::nullopt, std::move(labels)),
      {},
      n - dim,
  };
  for (int a = 0; a < n; ++a) out.class_of[d.name(a)] = class_index[a];
  return out;
}

BigroupoidPresentation as_bigroupoid(const GroupoidPresentation& G) {
  BigroupoidPresentation B;
  B.zero_cells = G.objects;
  B.one_cells = G.arrows;
  B.identity_of = G.identity_of;
  B.composition = G.composition;
  for (const auto& [f, g] : G.inverse) B.inverses[f] = {g};
  return B;
}

BigroupoidPresentation as_bigroupoid(const LoopTable& L) {
  std::vector<int> inv = ip_inverses(L);
  std::vector<std::string> labels = loop_labels(L.order);
  BigroupoidPresentation B;
  B.zero_cells = {"x"};
  for (int i = 0; i < L.order; ++i) B.one_cells.push_back({labels[i], "x", "x"});
  B.identity_of["x"] = labels[L.identity];
  for (int f = 0; f < L.order; ++f) {
    for (int g = 0; g < L.order; ++g)
      B.composition[{labels[f], labels[g]}] = labels[L.table[f][g]];
    B.inverses[labels[f]] = {labels[inv[f]]};
  }
  return B;
}

}  // namespace whq
