#pragma once

#include <map>
#include <string>
#include <vector>

#include "whq/structure.hpp"

namespace whq {

/// Multiplication table of a finite loop: each row and column is a
/// permutation and the identity element acts trivially.
struct LoopTable {
  int order = 0;
  int identity = 0;
  std::vector<std::vector<int>> table;  // table[f][g] = f.g
};

/// Latin-square and identity checks. Throws NotIPLoop on violation.
void validate_loop(const LoopTable& L);

/// Two-sided inverses satisfying f^-1(fg) = g and (gf)f^-1 = g for all
/// f, g. Throws NotIPLoop naming a violating triple.
std::vector<int> ip_inverses(const LoopTable& L);

bool is_associative(const LoopTable& L);

/// Loop algebra: pointwise product from the table, diagonal coproduct,
/// counit one on every element, antipode from inversion.
WeakHopfQuasigroup from_loop(const LoopTable& L, const Field& F);

struct Cell {
  std::string name;
  std::string src, tgt;
};

/// Finite groupoid: associative partial composition, identity per object,
/// strict inverses.
struct GroupoidPresentation {
  std::vector<std::string> objects;
  std::vector<Cell> arrows;
  std::map<std::string, std::string> identity_of;                 // object -> arrow
  std::map<std::pair<std::string, std::string>, std::string> composition;  // (g, f) -> g∘f
  std::map<std::string, std::string> inverse;                     // arrow -> arrow
};

void validate_groupoid(const GroupoidPresentation& G);

/// Groupoid algebra: product is composition where defined and zero
/// otherwise, unit the sum of object identities. Basis sorted by arrow
/// name.
WeakHopfQuasigroup from_groupoid(const GroupoidPresentation& G, const Field& F);

/// Finite cell presentation with designated (and optionally extra)
/// inverses. Composition must be total on composable pairs and normal
/// (identity cells act strictly), but is not required to be associative,
/// and composite cells need not have coherent endpoints: the relation
/// ideal sorts out what survives.
struct BigroupoidPresentation {
  std::vector<std::string> zero_cells;
  std::vector<Cell> one_cells;
  std::map<std::string, std::string> identity_of;
  std::map<std::pair<std::string, std::string>, std::string> composition;
  // First entry is the designated inverse feeding the antipode; all
  // entries feed relation generation.
  std::map<std::string, std::vector<std::string>> inverses;
};

void validate_bigroupoid(const BigroupoidPresentation& B);

struct QuotientResult {
  WeakHopfQuasigroup whq;
  // One-cell name -> basis index of its class. Index -1 would mean the
  // cell died in the ideal; construction fails instead of returning that.
  std::map<std::string, int> class_of;
  int ideal_dim = 0;
};

/// Quotient of the cell algebra by the ideal generated by
/// h - g(fh) and p - (pf)g over all cells f, inverses g of f and
/// composable h, p. The ideal is closed by multiplying identified pairs
/// with every one-cell on both sides until a fixpoint; a bare one-cell in
/// the ideal aborts with ImproperIdeal (the quotient would be null).
QuotientResult from_bigroupoid(const BigroupoidPresentation& B, const Field& F);

/// The same combinatorial data viewed as a cell presentation (zero ideal).
BigroupoidPresentation as_bigroupoid(const GroupoidPresentation& G);
BigroupoidPresentation as_bigroupoid(const LoopTable& L);

/// Basis labels used by from_loop: "g00", "g01", ... (zero-padded so the
/// lexicographic order matches the element order).
std::vector<std::string> loop_labels(int order);

}  // namespace whq
