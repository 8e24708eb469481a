#include "whq/document.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace whq {

namespace {

using json = nlohmann::json;

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    Line line{number, {}};
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

class Cursor {
 public:
  Cursor(std::vector<Line> lines, std::string source)
      : lines_(std::move(lines)), source_(std::move(source)) {}

  bool done() const { return pos_ >= lines_.size(); }
  const Line& peek() const {
    if (done()) fail("unexpected end of document", -1);
    return lines_[pos_];
  }
  Line next() {
    Line l = peek();
    ++pos_;
    return l;
  }
  [[noreturn]] void fail(const std::string& msg, int line) const {
    throw ParseError(source_ + (line > 0 ? ":" + std::to_string(line) : "") + ": " + msg);
  }
  [[noreturn]] void fail_here(const std::string& msg) const {
    fail(msg, done() ? -1 : lines_[pos_].number);
  }

 private:
  std::vector<Line> lines_;
  std::string source_;
  std::size_t pos_ = 0;
};

int parse_int(Cursor& c, const std::string& tok) {
  try {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    c.fail_here("expected an integer, got '" + tok + "'");
  }
}

// "map NAME rows cols" ... "end"; returns the map keyed by its name.
std::pair<std::string, LinMap> parse_map(Cursor& c, const Field& field) {
  Line head = c.next();
  if (head.tokens.size() != 4) c.fail("map header needs: map NAME rows cols", head.number);
  const std::string name = head.tokens[1];
  const int rows = parse_int(c, head.tokens[2]);
  const int cols = parse_int(c, head.tokens[3]);
  if (rows < 0 || cols < 0) c.fail("map dimensions must be nonnegative", head.number);
  LinMap m(field, rows, cols);
  while (true) {
    Line l = c.next();
    if (l.tokens.size() == 1 && l.tokens[0] == "end") break;
    if (l.tokens.size() < 3) c.fail("map entry needs: row col scalar", l.number);
    int r = parse_int(c, l.tokens[0]);
    int col = parse_int(c, l.tokens[1]);
    std::string scalar_text = l.tokens[2];
    for (std::size_t i = 3; i < l.tokens.size(); ++i) scalar_text += " " + l.tokens[i];
    if (r < 0 || r >= rows || col < 0 || col >= cols)
      c.fail("entry (" + std::to_string(r) + ", " + std::to_string(col) + ") out of range",
             l.number);
    if (!m.entry(r, col).is_zero()) c.fail("duplicate entry", l.number);
    try {
      m.set(r, col, Scalar::parse(scalar_text, field));
    } catch (const Error& e) {
      c.fail(e.what(), l.number);
    }
  }
  return {name, std::move(m)};
}

RawStructure parse_raw(Cursor& c, const Field& field) {
  RawStructure raw;
  Line dim_line = c.next();
  if (dim_line.tokens.size() != 2 || dim_line.tokens[0] != "dim")
    c.fail("whq_raw payload starts with: dim N", dim_line.number);
  raw.dim = parse_int(c, dim_line.tokens[1]);
  if (raw.dim < 1) c.fail("dimension must be positive", dim_line.number);

  auto expect_shape = [&](const LinMap& m, int rows, int cols, const std::string& name, int line) {
    if (m.codomain_dim() != rows || m.domain_dim() != cols)
      c.fail("map " + name + " must be " + std::to_string(rows) + "x" + std::to_string(cols),
             line);
  };

  while (!c.done()) {
    const Line& l = c.peek();
    if (l.tokens[0] == "labels") {
      if (static_cast<int>(l.tokens.size()) != raw.dim + 1)
        c.fail("labels line needs one label per basis element", l.number);
      raw.labels = std::vector<std::string>(l.tokens.begin() + 1, l.tokens.end());
      c.next();
    } else if (l.tokens[0] == "map") {
      int line = l.number;
      auto [name, m] = parse_map(c, field);
      const int d = raw.dim;
      if (name == "eta") {
        expect_shape(m, d, 1, name, line);
        raw.unit = std::move(m);
      } else if (name == "mu") {
        expect_shape(m, d, d * d, name, line);
        raw.mul = std::move(m);
      } else if (name == "epsilon") {
        expect_shape(m, 1, d, name, line);
        raw.counit = std::move(m);
      } else if (name == "delta") {
        expect_shape(m, d * d, d, name, line);
        raw.comul = std::move(m);
      } else if (name == "lambda") {
        expect_shape(m, d, d, name, line);
        raw.antipode = std::move(m);
      } else if (name == "braiding") {
        expect_shape(m, d * d, d * d, name, line);
        raw.braiding = std::move(m);
      } else {
        c.fail("unknown map '" + name + "' in whq_raw payload", line);
      }
    } else {
      c.fail_here("unexpected directive '" + l.tokens[0] + "' in whq_raw payload");
    }
  }
  const std::vector<std::pair<bool, const char*>> required = {
      {raw.unit.has_value(), "eta"},       {raw.mul.has_value(), "mu"},
      {raw.counit.has_value(), "epsilon"}, {raw.comul.has_value(), "delta"},
      {raw.antipode.has_value(), "lambda"}};
  for (const auto& [present, name] : required)
    if (!present) c.fail(std::string("whq_raw payload is missing map ") + name, -1);
  return raw;
}

LoopTable parse_loop(Cursor& c) {
  LoopTable L;
  Line order = c.next();
  if (order.tokens.size() != 2 || order.tokens[0] != "order")
    c.fail("loop_table payload starts with: order N", order.number);
  L.order = parse_int(c, order.tokens[1]);
  Line id = c.next();
  if (id.tokens.size() != 2 || id.tokens[0] != "identity")
    c.fail("expected: identity K", id.number);
  L.identity = parse_int(c, id.tokens[1]);
  Line tab = c.next();
  if (tab.tokens.size() != 1 || tab.tokens[0] != "table") c.fail("expected: table", tab.number);
  for (int i = 0; i < L.order; ++i) {
    Line row = c.next();
    if (static_cast<int>(row.tokens.size()) != L.order)
      c.fail("table row needs " + std::to_string(L.order) + " entries", row.number);
    std::vector<int> r;
    for (const auto& t : row.tokens) r.push_back(parse_int(c, t));
    L.table.push_back(std::move(r));
  }
  Line end = c.next();
  if (end.tokens.size() != 1 || end.tokens[0] != "end") c.fail("expected: end", end.number);
  return L;
}

// Shared by groupoid and bigroupoid payloads; the latter may list several
// inverses per cell.
void parse_cells(Cursor& c, std::vector<std::string>& objects, std::vector<Cell>& cells,
                 std::map<std::string, std::string>& identity_of,
                 std::map<std::pair<std::string, std::string>, std::string>& composition,
                 std::map<std::string, std::vector<std::string>>& inverses,
                 bool multiple_inverses) {
  while (!c.done()) {
    Line l = c.next();
    const std::string& kw = l.tokens[0];
    if (kw == "objects") {
      objects.assign(l.tokens.begin() + 1, l.tokens.end());
    } else if (kw == "cells") {
      while (true) {
        Line cell = c.next();
        if (cell.tokens.size() == 1 && cell.tokens[0] == "end") break;
        if (cell.tokens.size() != 3) c.fail("cell line needs: name src tgt", cell.number);
        cells.push_back({cell.tokens[0], cell.tokens[1], cell.tokens[2]});
      }
    } else if (kw == "identity") {
      if (l.tokens.size() != 3) c.fail("identity line needs: object cell", l.number);
      identity_of[l.tokens[1]] = l.tokens[2];
    } else if (kw == "compose") {
      while (true) {
        Line e = c.next();
        if (e.tokens.size() == 1 && e.tokens[0] == "end") break;
        if (e.tokens.size() != 3) c.fail("compose line needs: g f result", e.number);
        composition[{e.tokens[0], e.tokens[1]}] = e.tokens[2];
      }
    } else if (kw == "inverse") {
      while (true) {
        Line e = c.next();
        if (e.tokens.size() == 1 && e.tokens[0] == "end") break;
        if (e.tokens.size() < 2) c.fail("inverse line needs: cell inverse...", e.number);
        if (!multiple_inverses && e.tokens.size() != 2)
          c.fail("groupoid cells have exactly one inverse", e.number);
        inverses[e.tokens[0]] = std::vector<std::string>(e.tokens.begin() + 1, e.tokens.end());
      }
    } else {
      c.fail("unexpected directive '" + kw + "'", l.number);
    }
  }
}

ModuleSpec parse_module(Cursor& c, const Field& field) {
  ModuleSpec spec;
  Line over = c.next();
  if (over.tokens.size() != 2 || over.tokens[0] != "over")
    c.fail("hopf_module payload starts with: over PATH", over.number);
  spec.over_path = over.tokens[1];
  if (!c.done() && c.peek().tokens[0] == "regular") {
    c.next();
    spec.regular = true;
    if (!c.done()) c.fail_here("unexpected content after 'regular'");
    return spec;
  }
  Line dim = c.next();
  if (dim.tokens.size() != 2 || dim.tokens[0] != "dim") c.fail("expected: dim N", dim.number);
  spec.dim = parse_int(c, dim.tokens[1]);
  while (!c.done()) {
    const Line& l = c.peek();
    if (l.tokens[0] != "map") c.fail_here("expected map phi / map rho");
    auto [name, m] = parse_map(c, field);
    if (name == "phi")
      spec.action = std::move(m);
    else if (name == "rho")
      spec.coaction = std::move(m);
    else
      c.fail_here("unknown module map '" + name + "'");
  }
  if (!spec.action || !spec.coaction)
    c.fail("hopf_module payload needs map phi and map rho", -1);
  return spec;
}

}  // namespace

InputDocument parse_document(std::istream& in, const std::string& source) {
  Cursor c(tokenize(in), source);
  InputDocument doc;

  Line magic = c.next();
  if (magic.tokens.size() != 2 || magic.tokens[0] != "whq")
    c.fail("document must start with: whq 1", magic.number);
  doc.schema_version = parse_int(c, magic.tokens[1]);
  if (doc.schema_version != 1)
    c.fail("unsupported schema version " + magic.tokens[1], magic.number);

  Line field_line = c.next();
  if (field_line.tokens.empty() || field_line.tokens[0] != "field")
    c.fail("expected: field rationals | field prime P", field_line.number);
  if (field_line.tokens.size() == 2 && field_line.tokens[1] == "rationals") {
    doc.field = Field::rationals();
  } else if (field_line.tokens.size() == 3 && field_line.tokens[1] == "prime") {
    try {
      doc.field = Field::prime(static_cast<std::uint64_t>(parse_int(c, field_line.tokens[2])));
    } catch (const InvalidField& e) {
      c.fail(e.what(), field_line.number);
    }
  } else {
    c.fail("expected: field rationals | field prime P", field_line.number);
  }

  Line kind = c.next();
  if (kind.tokens.size() != 2 || kind.tokens[0] != "kind")
    c.fail("expected: kind NAME", kind.number);
  const std::string& k = kind.tokens[1];
  if (k == "whq_raw") {
    doc.kind = DocumentKind::WhqRaw;
    doc.raw = parse_raw(c, doc.field);
  } else if (k == "loop_table") {
    doc.kind = DocumentKind::LoopTable;
    doc.loop = parse_loop(c);
  } else if (k == "groupoid") {
    doc.kind = DocumentKind::Groupoid;
    GroupoidPresentation g;
    std::map<std::string, std::vector<std::string>> inv;
    parse_cells(c, g.objects, g.arrows, g.identity_of, g.composition, inv, false);
    for (const auto& [f, gs] : inv) g.inverse[f] = gs.front();
    doc.groupoid = std::move(g);
  } else if (k == "bigroupoid") {
    doc.kind = DocumentKind::Bigroupoid;
    BigroupoidPresentation b;
    parse_cells(c, b.zero_cells, b.one_cells, b.identity_of, b.composition, b.inverses, true);
    doc.bigroupoid = std::move(b);
  } else if (k == "hopf_module") {
    doc.kind = DocumentKind::HopfModule;
    doc.module = parse_module(c, doc.field);
  } else {
    c.fail("unknown document kind '" + k + "'", kind.number);
  }
  if (!c.done()) c.fail_here("trailing content after payload");
  return doc;
}

InputDocument read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_document(in, std::filesystem::path(path).filename().string());
}

BuildOutcome build_structure(const InputDocument& doc) {
  switch (doc.kind) {
    case DocumentKind::WhqRaw: {
      const RawStructure& r = *doc.raw;
      return {WeakHopfQuasigroup(*r.unit, *r.mul, *r.counit, *r.comul, *r.antipode, r.braiding,
                                 r.labels),
              std::nullopt};
    }
    case DocumentKind::LoopTable:
      return {from_loop(*doc.loop, doc.field), std::nullopt};
    case DocumentKind::Groupoid:
      return {from_groupoid(*doc.groupoid, doc.field), std::nullopt};
    case DocumentKind::Bigroupoid: {
      QuotientResult q = from_bigroupoid(*doc.bigroupoid, doc.field);
      WeakHopfQuasigroup whq = q.whq;
      return {std::move(whq), std::move(q)};
    }
    case DocumentKind::HopfModule:
      throw ParseError("a structure document is required, got a hopf_module document");
  }
  throw ParseError("unreachable document kind");
}

HopfModule build_module(const InputDocument& doc, const std::string& base_dir) {
  if (doc.kind != DocumentKind::HopfModule)
    throw ParseError("a hopf_module document is required");
  const ModuleSpec& spec = *doc.module;
  std::filesystem::path over =
      std::filesystem::path(base_dir) / std::filesystem::path(spec.over_path);
  InputDocument over_doc = read_document(over.string());
  if (!(over_doc.field == doc.field))
    throw ParseError("module document field differs from the structure document field");
  auto algebra = std::make_shared<WeakHopfQuasigroup>(build_structure(over_doc).whq);
  if (spec.regular) return regular_module(std::move(algebra));
  return HopfModule(std::move(algebra), *spec.action, *spec.coaction);
}

namespace {

void write_map(std::ostream& out, const std::string& name, const LinMap& m) {
  out << "map " << name << " " << m.codomain_dim() << " " << m.domain_dim() << "\n";
  for (int j = 0; j < m.domain_dim(); ++j)
    for (const auto& [i, v] : m.col(j)) out << i << " " << j << " " << v.str() << "\n";
  out << "end\n";
}

}  // namespace

std::string serialize_whq(const WeakHopfQuasigroup& H) {
  std::ostringstream out;
  out << "whq 1\n";
  out << "field " << H.field().str() << "\n";
  out << "kind whq_raw\n";
  out << "dim " << H.dim() << "\n";
  if (H.basis_labels()) {
    out << "labels";
    for (const auto& l : *H.basis_labels()) {
      if (l.empty() || l.find_first_of(" \t#") != std::string::npos)
        throw Error("basis label '" + l + "' is not serializable");
      out << " " << l;
    }
    out << "\n";
  }
  write_map(out, "eta", H.unit());
  write_map(out, "mu", H.mul());
  write_map(out, "epsilon", H.counit());
  write_map(out, "delta", H.comul());
  write_map(out, "lambda", H.antipode());
  if (!H.braiding_is_flip()) write_map(out, "braiding", H.braiding());
  return out.str();
}

namespace {

void render_check_line(std::ostream& out, const IdentityResult& r) {
  out << "check " << r.name << " " << (r.pass ? "pass" : "FAIL");
  if (r.conditional) out << " (conditional)";
  if (!r.pass)
    out << " witness col=" << r.witness_col << " row=" << r.witness_row << " lhs=" << r.lhs_entry
        << " rhs=" << r.rhs_entry;
  out << " : " << r.formula << "\n";
}

json check_to_json(const IdentityResult& r) {
  json j;
  j["group"] = r.group;
  j["name"] = r.name;
  j["formula"] = r.formula;
  j["pass"] = r.pass;
  if (r.conditional) j["conditional"] = true;
  if (!r.pass) {
    j["witness"] = {{"col", r.witness_col},
                    {"row", r.witness_row},
                    {"lhs", r.lhs_entry},
                    {"rhs", r.rhs_entry}};
  }
  return j;
}

json flags_to_json(const StructureFlags& f) {
  return {{"weak_hopf_quasigroup", f.weak_hopf_quasigroup},
          {"weak_hopf_algebra", f.weak_hopf_algebra},
          {"hopf_quasigroup", f.hopf_quasigroup},
          {"commutative", f.commutative},
          {"cocommutative", f.cocommutative}};
}

bool rendering_passes(const VerifyRendering& r) {
  bool ok = true;
  if (r.axioms) ok = ok && r.axioms->all_pass();
  if (r.derived) ok = ok && r.derived->all_pass();
  return ok;
}

}  // namespace

std::string render_verify_text(const VerifyRendering& r) {
  std::ostringstream out;
  out << "whq-report 1\n";
  out << "report verify\n";
  out << "input " << r.input_name << "\n";
  out << "level " << r.level << "\n";
  out << "field " << r.whq->field().str() << "\n";
  out << "dim " << r.whq->dim() << "\n";
  if (r.axioms)
    for (const auto& c : r.axioms->identities) render_check_line(out, c);
  if (r.derived)
    for (const auto& c : r.derived->identities) render_check_line(out, c);
  if (r.axioms && r.axioms->flags) {
    const auto& f = *r.axioms->flags;
    out << "flags weak_hopf_quasigroup=" << (f.weak_hopf_quasigroup ? "yes" : "no")
        << " weak_hopf_algebra=" << (f.weak_hopf_algebra ? "yes" : "no")
        << " hopf_quasigroup=" << (f.hopf_quasigroup ? "yes" : "no")
        << " commutative=" << (f.commutative ? "yes" : "no")
        << " cocommutative=" << (f.cocommutative ? "yes" : "no") << "\n";
  }
  out << "dim_HL " << rank(r.whq->pi_l()) << "\n";
  out << "dim_HR " << rank(r.whq->pi_r()) << "\n";
  out << "result " << (rendering_passes(r) ? "pass" : "fail") << "\n";
  return out.str();
}

std::string render_verify_json(const VerifyRendering& r) {
  json j;
  j["schema"] = 1;
  j["report"] = "verify";
  j["input"] = r.input_name;
  j["level"] = r.level;
  j["field"] = r.whq->field().str();
  j["dim"] = r.whq->dim();
  json checks = json::array();
  if (r.axioms)
    for (const auto& c : r.axioms->identities) checks.push_back(check_to_json(c));
  if (r.derived)
    for (const auto& c : r.derived->identities) checks.push_back(check_to_json(c));
  j["checks"] = std::move(checks);
  if (r.axioms && r.axioms->flags) j["flags"] = flags_to_json(*r.axioms->flags);
  j["dims"] = {{"H_L", rank(r.whq->pi_l())}, {"H_R", rank(r.whq->pi_r())}};
  j["result"] = rendering_passes(r) ? "pass" : "fail";
  return j.dump(2) + "\n";
}

std::string render_coinvariants_text(const CoinvariantsRendering& r) {
  std::ostringstream out;
  out << "whq-report 1\n";
  out << "report coinvariants\n";
  out << "input " << r.input_name << "\n";
  out << "field " << r.module->algebra().field().str() << "\n";
  out << "module_dim " << r.module->dim() << "\n";
  out << "algebra_dim " << r.module->algebra().dim() << "\n";
  for (const auto& c : r.module_report->identities) render_check_line(out, c);
  out << "coh_dim " << r.cert->coinv.coinvariant_dim << "\n";
  out << "rank_nabla " << r.cert->times_dim << "\n";
  for (const auto& eq : r.cert->verified) out << "certificate " << eq << " pass\n";
  out << "result " << (r.module_report->all_pass() ? "pass" : "fail") << "\n";
  return out.str();
}

std::string render_coinvariants_json(const CoinvariantsRendering& r) {
  json j;
  j["schema"] = 1;
  j["report"] = "coinvariants";
  j["input"] = r.input_name;
  j["field"] = r.module->algebra().field().str();
  j["module_dim"] = r.module->dim();
  j["algebra_dim"] = r.module->algebra().dim();
  json checks = json::array();
  for (const auto& c : r.module_report->identities) checks.push_back(check_to_json(c));
  j["checks"] = std::move(checks);
  j["coh_dim"] = r.cert->coinv.coinvariant_dim;
  j["rank_nabla"] = r.cert->times_dim;
  j["certificate"] = r.cert->verified;
  j["result"] = r.module_report->all_pass() ? "pass" : "fail";
  return j.dump(2) + "\n";
}

std::string render_error_document(const std::string& kind, const std::string& message) {
  std::ostringstream out;
  out << "whq-error 1\n";
  out << "error " << kind << "\n";
  out << "message " << message << "\n";
  return out.str();
}

}  // namespace whq
