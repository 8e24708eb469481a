#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "whq/axioms.hpp"
#include "whq/hopf_modules.hpp"
#include "whq/presentations.hpp"

namespace whq {

/// All payloads share one self-describing structured-text format:
///
///   whq 1
///   field rationals          | field prime 5
///   kind whq_raw             | loop_table | groupoid | bigroupoid | hopf_module
///   ... kind-specific sections ...
///
/// Sparse maps are written as "map NAME rows cols", one "row col scalar"
/// triple per line, terminated by "end". Scalars serialize exactly:
/// "3/7", "-2", "5 mod 11". '#' starts a comment. See README for the
/// full grammar.
enum class DocumentKind { WhqRaw, LoopTable, Groupoid, Bigroupoid, HopfModule };

struct RawStructure {
  int dim = 0;
  std::optional<std::vector<std::string>> labels;
  std::optional<LinMap> unit, mul, counit, comul, antipode, braiding;
};

struct ModuleSpec {
  std::string over_path;   // relative to the document's directory
  bool regular = false;
  int dim = 0;
  std::optional<LinMap> action, coaction;
};

struct InputDocument {
  int schema_version = 1;
  Field field = Field::rationals();
  DocumentKind kind = DocumentKind::WhqRaw;
  // Exactly one of these is populated, according to kind.
  std::optional<RawStructure> raw;
  std::optional<LoopTable> loop;
  std::optional<GroupoidPresentation> groupoid;
  std::optional<BigroupoidPresentation> bigroupoid;
  std::optional<ModuleSpec> module;
};

/// Parses a document; `source` names it in error messages.
InputDocument parse_document(std::istream& in, const std::string& source);
InputDocument read_document(const std::string& path);

struct BuildOutcome {
  WeakHopfQuasigroup whq;
  std::optional<QuotientResult> quotient;  // set for bigroupoid inputs
};

/// Runs the constructor matching the document kind. Throws the
/// constructor's errors (InvalidPresentation, ImproperIdeal, ...).
BuildOutcome build_structure(const InputDocument& doc);

/// Loads a module document; the referenced structure document is read
/// relative to `base_dir`.
HopfModule build_module(const InputDocument& doc, const std::string& base_dir);

/// Canonical whq_raw serialization; re-parsing yields the same structure
/// bit for bit. The braiding section is omitted when it is the flip.
std::string serialize_whq(const WeakHopfQuasigroup& H);

/// Deterministic report renderings. `input_name` should be a bare file
/// name so report bytes do not depend on where the input lives.
struct VerifyRendering {
  std::string input_name;
  std::string level;  // "axioms" | "derived" | "full"
  const WeakHopfQuasigroup* whq = nullptr;
  const Report* axioms = nullptr;    // present for levels axioms/full
  const Report* derived = nullptr;   // present for levels derived/full
};

std::string render_verify_text(const VerifyRendering& r);
std::string render_verify_json(const VerifyRendering& r);

struct CoinvariantsRendering {
  std::string input_name;
  const HopfModule* module = nullptr;
  const FundamentalCertificate* cert = nullptr;
  const Report* module_report = nullptr;
};

std::string render_coinvariants_text(const CoinvariantsRendering& r);
std::string render_coinvariants_json(const CoinvariantsRendering& r);

/// Structured error document (used by the CLI for constructor failures).
std::string render_error_document(const std::string& kind, const std::string& message);

}  // namespace whq
