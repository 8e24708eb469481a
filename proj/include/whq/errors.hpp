#pragma once

#include <stdexcept>
#include <string>

namespace whq {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Two maps were combined with incompatible shapes.
struct DimensionMismatch : Error {
  using Error::Error;
};

/// Scalars or maps over different base fields were mixed.
struct FieldMismatch : Error {
  using Error::Error;
};

/// A field descriptor was invalid (composite or out-of-range characteristic).
struct InvalidField : Error {
  using Error::Error;
};

struct DivisionByZero : Error {
  using Error::Error;
};

/// An operation required an idempotent map and e∘e != e.
struct NotIdempotent : Error {
  using Error::Error;
};

/// Construction-time structure laws failed (unit/counit/coassociativity/braiding).
struct InvalidStructure : Error {
  using Error::Error;
};

/// A combinatorial presentation violated its invariants.
struct InvalidPresentation : Error {
  using Error::Error;
};

struct NotIPLoop : InvalidPresentation {
  using InvalidPresentation::InvalidPresentation;
};

struct NotGroupoid : InvalidPresentation {
  using InvalidPresentation::InvalidPresentation;
};

struct InconsistentPresentation : InvalidPresentation {
  using InvalidPresentation::InvalidPresentation;
};

/// The relation ideal of a cell presentation swallowed a basis one-cell,
/// so the quotient algebra would be null.
struct ImproperIdeal : Error {
  using Error::Error;
};

struct NotComoduleIso : Error {
  using Error::Error;
};

/// A module certificate equation failed; `equation` names the first violation.
struct CertificateFailure : Error {
  explicit CertificateFailure(const std::string& eq, const std::string& detail = "")
      : Error("certificate equation failed: " + eq + (detail.empty() ? "" : " (" + detail + ")")),
        equation(eq) {}
  std::string equation;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace whq
