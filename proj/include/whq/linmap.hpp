#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "whq/field.hpp"

namespace whq {

/// Exact linear map between tensor powers of finite-dimensional spaces.
///
/// Flat tensor indexing is row-major and recursive: the basis vector
/// e_i (x) e_j of A (x) B has flat index i*dim(B) + j, and higher tensor
/// powers apply the rule from the left. Every operation in the library
/// uses this one convention.
///
/// Entries are stored column-sparse: cols()[j] lists the nonzero rows of
/// column j in ascending order, so a column is exactly the image of the
/// j-th domain basis vector. Values are immutable after construction in
/// practice; all operations return fresh maps.
class LinMap {
 public:
  using Entry = std::pair<int, Scalar>;  // (row, value), value != 0
  using Column = std::vector<Entry>;

  /// Zero map with the given shape.
  LinMap(const Field& f, int codomain_dim, int domain_dim);

  static LinMap identity(const Field& f, int n);
  static LinMap from_triples(const Field& f, int codomain_dim, int domain_dim,
                             const std::vector<std::tuple<int, int, Scalar>>& triples);

  const Field& field() const { return field_; }
  int domain_dim() const { return domain_dim_; }
  int codomain_dim() const { return codomain_dim_; }

  const std::vector<Column>& cols() const { return cols_; }
  const Column& col(int j) const { return cols_[j]; }

  /// Entry (i, j), zero when absent.
  Scalar entry(int i, int j) const;

  /// Replaces entry (i, j); a zero value erases.
  void set(int i, int j, const Scalar& v);
  /// Adds v into entry (i, j).
  void add_to(int i, int j, const Scalar& v);

  bool is_zero() const;
  int nnz() const;

  LinMap transpose() const;

  const std::optional<std::vector<std::string>>& domain_labels() const { return domain_labels_; }
  const std::optional<std::vector<std::string>>& codomain_labels() const { return codomain_labels_; }
  void set_domain_labels(std::vector<std::string> l);
  void set_codomain_labels(std::vector<std::string> l);

  /// Exact equality of shape and entries (labels are not compared).
  /// Comparing maps over different fields is a programming error.
  bool operator==(const LinMap& o) const;
  bool operator!=(const LinMap& o) const { return !(*this == o); }

  std::string str() const;  // small-matrix debug rendering

 private:
  friend LinMap compose(const LinMap&, const LinMap&);
  friend LinMap tensor(const LinMap&, const LinMap&);
  friend LinMap flip(const Field&, int, int);
  friend LinMap add(const LinMap&, const LinMap&);
  friend LinMap scale(const Scalar&, const LinMap&);

  Field field_;
  int domain_dim_;
  int codomain_dim_;
  std::vector<Column> cols_;
  std::optional<std::vector<std::string>> domain_labels_, codomain_labels_;
};

/// g after f. Requires domain_dim(g) == codomain_dim(f).
LinMap compose(const LinMap& g, const LinMap& f);

template <typename... Rest>
LinMap compose(const LinMap& g, const LinMap& f, const Rest&... rest) {
  return compose(compose(g, f), rest...);
}

/// Kronecker product under the flat-index convention:
/// (f (x) g)(e_i (x) e_j) = f(e_i) (x) g(e_j).
LinMap tensor(const LinMap& f, const LinMap& g);

template <typename... Rest>
LinMap tensor(const LinMap& f, const LinMap& g, const Rest&... rest) {
  return tensor(tensor(f, g), rest...);
}

/// The symmetry A (x) B -> B (x) A: flat index i*b + j maps to j*a + i.
LinMap flip(const Field& f, int a, int b);

LinMap add(const LinMap& f, const LinMap& g);
LinMap sub(const LinMap& f, const LinMap& g);
LinMap scale(const Scalar& c, const LinMap& f);

/// First position where f and g differ: (column, row), column minimal
/// first, then row. Shapes must agree.
std::optional<std::pair<int, int>> first_difference(const LinMap& f, const LinMap& g);

}  // namespace whq
