// Command-line front end: build structures from presentation files, verify
// the defining and derived identity catalogs, and run the coinvariant /
// module certificate. Exit codes: 0 pass, 1 verification failure, 2 input
// error.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "whq/document.hpp"

namespace {

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw whq::Error("cannot write " + path);
  out << content;
}

std::string base_name(const std::string& path) {
  return std::filesystem::path(path).filename().string();
}

std::string dir_name(const std::string& path) {
  auto dir = std::filesystem::path(path).parent_path().string();
  return dir.empty() ? "." : dir;
}

int cmd_build(const std::string& input, const std::string& output) {
  whq::InputDocument doc = whq::read_document(input);
  try {
    whq::BuildOutcome built = whq::build_structure(doc);
    std::string body = whq::serialize_whq(built.whq);
    if (built.quotient) {
      body += "# ideal_dim " + std::to_string(built.quotient->ideal_dim) + "\n";
    }
    write_output(output, body);
    return 0;
  } catch (const whq::ImproperIdeal& e) {
    write_output(output, whq::render_error_document("ImproperIdeal", e.what()));
    return 1;
  }
}

int cmd_verify(const std::string& input, const std::string& level, bool as_json, int jobs,
               const std::string& output) {
  whq::InputDocument doc = whq::read_document(input);
  whq::WeakHopfQuasigroup H = whq::build_structure(doc).whq;

  std::optional<whq::Report> axioms, derived;
  if (level == "axioms" || level == "full") axioms = whq::check_axioms(H, jobs);
  if (level == "derived" || level == "full") derived = whq::check_derived(H, jobs);

  whq::VerifyRendering r;
  r.input_name = base_name(input);
  r.level = level;
  r.whq = &H;
  r.axioms = axioms ? &*axioms : nullptr;
  r.derived = derived ? &*derived : nullptr;
  write_output(output, as_json ? whq::render_verify_json(r) : whq::render_verify_text(r));

  bool pass = (!axioms || axioms->all_pass()) && (!derived || derived->all_pass());
  return pass ? 0 : 1;
}

int cmd_coinvariants(const std::string& input, bool as_json, int jobs,
                     const std::string& output) {
  whq::InputDocument doc = whq::read_document(input);
  whq::HopfModule M = whq::build_module(doc, dir_name(input));
  whq::Report module_report = whq::check_hopf_module(M, jobs);
  if (!module_report.all_pass()) {
    const auto* f = module_report.first_failure();
    write_output(output, whq::render_error_document(
                             "ModuleAxiomFailure",
                             f->name + " fails, witness col=" + std::to_string(f->witness_col) +
                                 " row=" + std::to_string(f->witness_row)));
    return 1;
  }
  whq::FundamentalCertificate cert = whq::fundamental_certificate(M);

  whq::CoinvariantsRendering r;
  r.input_name = base_name(input);
  r.module = &M;
  r.cert = &cert;
  r.module_report = &module_report;
  write_output(output,
               as_json ? whq::render_coinvariants_json(r) : whq::render_coinvariants_text(r));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact weak Hopf quasigroup toolkit"};
  app.require_subcommand(1);

  std::string input, output, level = "full";
  bool as_json = false;
  int jobs = 1;

  auto* build = app.add_subcommand("build", "construct a structure from a presentation file");
  build->add_option("input", input, "input document")->required();
  build->add_option("-o,--output", output, "output file (default: stdout)");

  auto* verify = app.add_subcommand("verify", "check the identity catalog of a structure");
  verify->add_option("input", input, "input document (raw structure or presentation)")->required();
  verify->add_option("--level", level, "axioms | derived | full")
      ->check(CLI::IsMember({"axioms", "derived", "full"}));
  verify->add_flag("--json", as_json, "emit the report as JSON");
  verify->add_option("--jobs", jobs, "parallel identity checks")->check(CLI::PositiveNumber);
  verify->add_option("-o,--output", output, "output file (default: stdout)");

  auto* coinv = app.add_subcommand("coinvariants", "coinvariants and module certificate");
  coinv->add_option("input", input, "hopf_module document")->required();
  coinv->add_flag("--json", as_json, "emit the report as JSON");
  coinv->add_option("--jobs", jobs, "parallel identity checks")->check(CLI::PositiveNumber);
  coinv->add_option("-o,--output", output, "output file (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (build->parsed()) return cmd_build(input, output);
    if (verify->parsed()) return cmd_verify(input, level, as_json, jobs, output);
    if (coinv->parsed()) return cmd_coinvariants(input, as_json, jobs, output);
  } catch (const whq::ImproperIdeal& e) {
    std::cerr << whq::render_error_document("ImproperIdeal", e.what());
    return 1;
  } catch (const whq::CertificateFailure& e) {
    std::cerr << whq::render_error_document("CertificateFailure", e.what());
    return 1;
  } catch (const whq::NotIdempotent& e) {
    std::cerr << whq::render_error_document("NotIdempotent", e.what());
    return 1;
  } catch (const whq::ParseError& e) {
    std::cerr << whq::render_error_document("ParseError", e.what());
    return 2;
  } catch (const whq::InvalidPresentation& e) {
    std::cerr << whq::render_error_document("InvalidPresentation", e.what());
    return 2;
  } catch (const whq::Error& e) {
    std::cerr << whq::render_error_document("InvalidInput", e.what());
    return 2;
  }
  return 2;
}
