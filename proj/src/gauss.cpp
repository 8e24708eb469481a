#include "whq/gauss.hpp"

#include <vector>

namespace whq {

namespace {

using Dense = std::vector<std::vector<Scalar>>;

Dense to_dense(const LinMap& f) {
  Dense a(static_cast<std::size_t>(f.codomain_dim()),
          std::vector<Scalar>(static_cast<std::size_t>(f.domain_dim()), Scalar::zero(f.field())));
  for (int j = 0; j < f.domain_dim(); ++j)
    for (const auto& [i, v] : f.col(j)) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
  return a;
}

LinMap from_dense(const Field& fld, const Dense& a, int rows, int cols) {
  LinMap m(fld, rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) {
      const Scalar& v = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (!v.is_zero()) m.set(i, j, v);
    }
  return m;
}

// In-place RREF; returns the pivot column indices in ascending order.
std::vector<int> rref_in_place(Dense& a) {
  std::vector<int> pivots;
  if (a.empty()) return pivots;
  const int rows = static_cast<int>(a.size());
  const int cols = static_cast<int>(a[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (!a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)].is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(r)]);
    Scalar inv = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].inverse();
    for (int j = c; j < cols; ++j) a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      Scalar factor = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
      if (factor.is_zero()) continue;
      for (int j = c; j < cols; ++j)
        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
            factor * a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

void check_parallel(const LinMap& f, const LinMap& g, const char* op) {
  if (!(f.field() == g.field())) throw FieldMismatch(std::string(op) + " over different fields");
  if (f.domain_dim() != g.domain_dim() || f.codomain_dim() != g.codomain_dim())
    throw DimensionMismatch(std::string(op) + ": maps must share domain and codomain");
}

}  // namespace

int rank(const LinMap& f) {
  Dense a = to_dense(f);
  return static_cast<int>(rref_in_place(a).size());
}

LinMap rref(const LinMap& f) {
  Dense a = to_dense(f);
  rref_in_place(a);
  return from_dense(f.field(), a, f.codomain_dim(), f.domain_dim());
}

LinMap image_basis(const LinMap& f) {
  Dense a = to_dense(f.transpose());
  std::vector<int> pivots = rref_in_place(a);
  const int r = static_cast<int>(pivots.size());
  LinMap basis(f.field(), f.codomain_dim(), r);
  for (int k = 0; k < r; ++k)
    for (int i = 0; i < f.codomain_dim(); ++i) {
      const Scalar& v = a[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
      if (!v.is_zero()) basis.set(i, k, v);
    }
  return basis;
}

LinMap kernel_basis(const LinMap& f) {
  Dense a = to_dense(f);
  std::vector<int> pivots = rref_in_place(a);
  const int n = f.domain_dim();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  LinMap basis(f.field(), n, n - static_cast<int>(pivots.size()));
  int k = 0;
  for (int j = 0; j < n; ++j) {
    if (is_pivot[static_cast<std::size_t>(j)]) continue;
    basis.set(j, k, Scalar::one(f.field()));
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      const Scalar& v = a[i][static_cast<std::size_t>(j)];
      if (!v.is_zero()) basis.set(pivots[i], k, -v);
    }
    ++k;
  }
  return basis;
}

Splitting split_idempotent(const LinMap& e) {
  if (e.domain_dim() != e.codomain_dim())
    throw DimensionMismatch("split_idempotent: map is not square");
  if (compose(e, e) != e) {
    auto w = first_difference(compose(e, e), e);
    throw NotIdempotent("split_idempotent: e∘e != e, first difference at column " +
                        std::to_string(w->first) + ", row " + std::to_string(w->second));
  }
  Dense a = to_dense(e);
  std::vector<int> pivots = rref_in_place(a);
  const int r = static_cast<int>(pivots.size());
  const int n = e.domain_dim();
  // Pivot columns of e span its image; the matching RREF rows reproduce e,
  // giving e = section ∘ retraction with retraction ∘ section = id.
  LinMap section(e.field(), n, r);
  for (int k = 0; k < r; ++k)
    for (const auto& [i, v] : e.col(pivots[static_cast<std::size_t>(k)])) section.set(i, k, v);
  LinMap retraction(e.field(), r, n);
  for (int k = 0; k < r; ++k)
    for (int j = 0; j < n; ++j) {
      const Scalar& v = a[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
      if (!v.is_zero()) retraction.set(k, j, v);
    }
  return Splitting{std::move(section), std::move(retraction), r};
}

LinMap equalizer(const LinMap& f, const LinMap& g) {
  check_parallel(f, g, "equalizer");
  return kernel_basis(sub(f, g));
}

LinMap coequalizer(const LinMap& f, const LinMap& g) {
  check_parallel(f, g, "coequalizer");
  return kernel_basis(sub(f, g).transpose()).transpose();
}

std::optional<LinMap> inverse(const LinMap& f) {
  if (f.domain_dim() != f.codomain_dim()) return std::nullopt;
  const int n = f.domain_dim();
  Dense a(static_cast<std::size_t>(n),
          std::vector<Scalar>(static_cast<std::size_t>(2 * n), Scalar::zero(f.field())));
  for (int j = 0; j < n; ++j)
    for (const auto& [i, v] : f.col(j)) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
  for (int i = 0; i < n; ++i)
    a[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + i)] = Scalar::one(f.field());
  std::vector<int> pivots = rref_in_place(a);
  if (static_cast<int>(pivots.size()) != n || (n > 0 && pivots.back() != n - 1))
    return std::nullopt;
  LinMap inv(f.field(), n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Scalar& v = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + j)];
      if (!v.is_zero()) inv.set(i, j, v);
    }
  return inv;
}

bool same_column_space(const LinMap& a, const LinMap& b) {
  if (a.codomain_dim() != b.codomain_dim())
    throw DimensionMismatch("same_column_space: codomains differ");
  return image_basis(a) == image_basis(b);
}

}  // namespace whq
