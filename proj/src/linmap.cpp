#include "whq/linmap.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace whq {

namespace {

void check_dim(int d, const char* what) {
  if (d < 0) throw DimensionMismatch(std::string("negative dimension for ") + what);
}

}  // namespace

LinMap::LinMap(const Field& f, int codomain_dim, int domain_dim)
    : field_(f), domain_dim_(domain_dim), codomain_dim_(codomain_dim) {
  check_dim(domain_dim, "domain");
  check_dim(codomain_dim, "codomain");
  cols_.resize(static_cast<std::size_t>(domain_dim));
}

LinMap LinMap::identity(const Field& f, int n) {
  LinMap m(f, n, n);
  for (int i = 0; i < n; ++i) m.cols_[i].emplace_back(i, Scalar::one(f));
  return m;
}

LinMap LinMap::from_triples(const Field& f, int codomain_dim, int domain_dim,
                            const std::vector<std::tuple<int, int, Scalar>>& triples) {
  LinMap m(f, codomain_dim, domain_dim);
  for (const auto& [r, c, v] : triples) {
    if (r < 0 || r >= codomain_dim || c < 0 || c >= domain_dim)
      throw DimensionMismatch("triple (" + std::to_string(r) + "," + std::to_string(c) +
                              ") out of range for " + std::to_string(codomain_dim) + "x" +
                              std::to_string(domain_dim));
    if (!m.entry(r, c).is_zero())
      throw ParseError("duplicate triple at (" + std::to_string(r) + "," + std::to_string(c) + ")");
    m.set(r, c, v);
  }
  return m;
}

Scalar LinMap::entry(int i, int j) const {
  const Column& c = cols_[static_cast<std::size_t>(j)];
  auto it = std::lower_bound(c.begin(), c.end(), i,
                             [](const Entry& e, int row) { return e.first < row; });
  if (it != c.end() && it->first == i) return it->second;
  return Scalar::zero(field_);
}

void LinMap::set(int i, int j, const Scalar& v) {
  Column& c = cols_[static_cast<std::size_t>(j)];
  auto it = std::lower_bound(c.begin(), c.end(), i,
                             [](const Entry& e, int row) { return e.first < row; });
  if (it != c.end() && it->first == i) {
    if (v.is_zero())
      c.erase(it);
    else
      it->second = v;
  } else if (!v.is_zero()) {
    c.insert(it, {i, v});
  }
}

void LinMap::add_to(int i, int j, const Scalar& v) {
  if (v.is_zero()) return;
  set(i, j, entry(i, j) + v);
}

bool LinMap::is_zero() const {
  return std::all_of(cols_.begin(), cols_.end(), [](const Column& c) { return c.empty(); });
}

int LinMap::nnz() const {
  int n = 0;
  for (const auto& c : cols_) n += static_cast<int>(c.size());
  return n;
}

LinMap LinMap::transpose() const {
  LinMap t(field_, domain_dim_, codomain_dim_);
  // Ascending column order feeds every target column in sorted order.
  for (int j = 0; j < domain_dim_; ++j)
    for (const auto& [i, v] : cols_[static_cast<std::size_t>(j)])
      t.cols_[static_cast<std::size_t>(i)].emplace_back(j, v);
  return t;
}

void LinMap::set_domain_labels(std::vector<std::string> l) {
  if (static_cast<int>(l.size()) != domain_dim_)
    throw DimensionMismatch("domain label count != domain dimension");
  domain_labels_ = std::move(l);
}

void LinMap::set_codomain_labels(std::vector<std::string> l) {
  if (static_cast<int>(l.size()) != codomain_dim_)
    throw DimensionMismatch("codomain label count != codomain dimension");
  codomain_labels_ = std::move(l);
}

bool LinMap::operator==(const LinMap& o) const {
  if (!(field_ == o.field_))
    throw FieldMismatch("comparing maps over " + field_.str() + " and " + o.field_.str());
  if (domain_dim_ != o.domain_dim_ || codomain_dim_ != o.codomain_dim_)
    throw DimensionMismatch("comparing a " + std::to_string(codomain_dim_) + "x" +
                            std::to_string(domain_dim_) + " map with a " +
                            std::to_string(o.codomain_dim_) + "x" +
                            std::to_string(o.domain_dim_) + " map");
  return cols_ == o.cols_;
}

std::string LinMap::str() const {
  std::ostringstream out;
  out << codomain_dim_ << "x" << domain_dim_ << " over " << field_.str() << "\n";
  for (int i = 0; i < codomain_dim_; ++i) {
    for (int j = 0; j < domain_dim_; ++j) out << (j ? " " : "") << entry(i, j).str();
    out << "\n";
  }
  return out.str();
}

LinMap compose(const LinMap& g, const LinMap& f) {
  if (!(g.field() == f.field())) throw FieldMismatch("compose over different fields");
  if (g.domain_dim() != f.codomain_dim())
    throw DimensionMismatch("compose: domain " + std::to_string(g.domain_dim()) +
                            " != codomain " + std::to_string(f.codomain_dim()));
  LinMap r(g.field(), g.codomain_dim(), f.domain_dim());
  std::vector<LinMap::Entry> acc;
  for (int j = 0; j < f.domain_dim(); ++j) {
    acc.clear();
    for (const auto& [k, a] : f.col(j))
      for (const auto& [i, b] : g.col(k)) acc.emplace_back(i, a * b);
    std::stable_sort(acc.begin(), acc.end(),
                     [](const LinMap::Entry& x, const LinMap::Entry& y) { return x.first < y.first; });
    LinMap::Column out;
    for (std::size_t t = 0; t < acc.size();) {
      int row = acc[t].first;
      Scalar sum = acc[t].second;
      for (++t; t < acc.size() && acc[t].first == row; ++t) sum += acc[t].second;
      if (!sum.is_zero()) out.emplace_back(row, std::move(sum));
    }
    r.cols_[static_cast<std::size_t>(j)] = std::move(out);
  }
  if (f.domain_labels()) r.set_domain_labels(*f.domain_labels());
  if (g.codomain_labels()) r.set_codomain_labels(*g.codomain_labels());
  return r;
}

LinMap tensor(const LinMap& f, const LinMap& g) {
  if (!(f.field() == g.field())) throw FieldMismatch("tensor over different fields");
  const int rf = f.codomain_dim(), rg = g.codomain_dim();
  const int cf = f.domain_dim(), cg = g.domain_dim();
  LinMap r(f.field(), rf * rg, cf * cg);
  auto& cols = r.cols_;
  for (int j1 = 0; j1 < cf; ++j1) {
    const auto& c1 = f.col(j1);
    for (int j2 = 0; j2 < cg; ++j2) {
      const auto& c2 = g.col(j2);
      if (c1.empty() || c2.empty()) continue;
      LinMap::Column out;
      out.reserve(c1.size() * c2.size());
      for (const auto& [i1, a] : c1)
        for (const auto& [i2, b] : c2) out.emplace_back(i1 * rg + i2, a * b);
      cols[static_cast<std::size_t>(j1) * cg + j2] = std::move(out);
    }
  }
  return r;
}

LinMap flip(const Field& f, int a, int b) {
  LinMap r(f, a * b, a * b);
  auto& cols = r.cols_;
  const Scalar one = Scalar::one(f);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) cols[static_cast<std::size_t>(i) * b + j] = {{j * a + i, one}};
  return r;
}

LinMap add(const LinMap& f, const LinMap& g) {
  if (!(f.field() == g.field())) throw FieldMismatch("add over different fields");
  if (f.domain_dim() != g.domain_dim() || f.codomain_dim() != g.codomain_dim())
    throw DimensionMismatch("add: shapes disagree");
  LinMap r(f.field(), f.codomain_dim(), f.domain_dim());
  auto& cols = r.cols_;
  for (int j = 0; j < f.domain_dim(); ++j) {
    const auto& a = f.col(j);
    const auto& b = g.col(j);
    LinMap::Column out;
    std::size_t ia = 0, ib = 0;
    while (ia < a.size() || ib < b.size()) {
      if (ib == b.size() || (ia < a.size() && a[ia].first < b[ib].first)) {
        out.push_back(a[ia++]);
      } else if (ia == a.size() || b[ib].first < a[ia].first) {
        out.push_back(b[ib++]);
      } else {
        Scalar s = a[ia].second + b[ib].second;
        if (!s.is_zero()) out.emplace_back(a[ia].first, std::move(s));
        ++ia, ++ib;
      }
    }
    cols[static_cast<std::size_t>(j)] = std::move(out);
  }
  return r;
}

LinMap sub(const LinMap& f, const LinMap& g) { return add(f, scale(-Scalar::one(f.field()), g)); }

LinMap scale(const Scalar& c, const LinMap& f) {
  LinMap r(f.field(), f.codomain_dim(), f.domain_dim());
  if (c.is_zero()) return r;
  auto& cols = r.cols_;
  for (int j = 0; j < f.domain_dim(); ++j) {
    LinMap::Column out;
    out.reserve(f.col(j).size());
    for (const auto& [i, v] : f.col(j)) {
      Scalar s = c * v;
      if (!s.is_zero()) out.emplace_back(i, std::move(s));
    }
    cols[static_cast<std::size_t>(j)] = std::move(out);
  }
  return r;
}

std::optional<std::pair<int, int>> first_difference(const LinMap& f, const LinMap& g) {
  if (f.domain_dim() != g.domain_dim() || f.codomain_dim() != g.codomain_dim())
    throw DimensionMismatch("first_difference: shapes disagree");
  for (int j = 0; j < f.domain_dim(); ++j) {
    const auto& a = f.col(j);
    const auto& b = g.col(j);
    std::size_t ia = 0, ib = 0;
    while (ia < a.size() || ib < b.size()) {
      if (ib == b.size() || (ia < a.size() && a[ia].first < b[ib].first)) return {{j, a[ia].first}};
      if (ia == a.size() || b[ib].first < a[ia].first) return {{j, b[ib].first}};
      if (a[ia].second != b[ib].second) return {{j, a[ia].first}};
      ++ia, ++ib;
    }
  }
  return std::nullopt;
}

}  // namespace whq
