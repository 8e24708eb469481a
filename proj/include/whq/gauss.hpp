#pragma once

#include <optional>

#include "whq/linmap.hpp"

namespace whq {

/// Splitting of an idempotent e on Y through its image Z:
/// e = section ∘ retraction and retraction ∘ section = id_Z.
struct Splitting {
  LinMap section;     // Z -> Y, injective
  LinMap retraction;  // Y -> Z, surjective
  int rank;           // dim Z
};

int rank(const LinMap& f);

/// Reduced row echelon form (left-to-right pivoting, pivots scaled to 1).
LinMap rref(const LinMap& f);

/// Canonical basis of the column space: columns in column-echelon form,
/// so two maps have the same column space iff their image bases are equal.
LinMap image_basis(const LinMap& f);

/// Canonical basis of ker f as columns (one per free column of the RREF).
LinMap kernel_basis(const LinMap& f);

/// Splits e = i∘p with p∘i = id. The section's columns are the pivot
/// columns of e itself (selected left to right on the RREF of e), the
/// retraction is the corresponding block of the RREF.
/// Throws NotIdempotent when e∘e != e.
Splitting split_idempotent(const LinMap& e);

/// Injective map whose image is ker(f - g). Throws DimensionMismatch.
LinMap equalizer(const LinMap& f, const LinMap& g);

/// Surjective map whose kernel is im(f - g). Throws DimensionMismatch.
LinMap coequalizer(const LinMap& f, const LinMap& g);

std::optional<LinMap> inverse(const LinMap& f);

/// Column spaces coincide (exact subspace equality).
bool same_column_space(const LinMap& a, const LinMap& b);

}  // namespace whq
