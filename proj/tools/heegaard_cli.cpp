// Command-line front end.  Talks to the shared library exclusively through
// the C interface in heegaard.h; all certificates are produced there.
//
// Exit codes: 0 positive certificate, 1 negative or inapplicable result,
// 2 input, usage or resource error.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "heegaard.h"

namespace {

constexpr int kExitError = 2;

struct Options {
  std::string format = "text";
  hg_limits limits{};
  std::string input;
  std::string output;  // empty = stdout
  std::string mode = "det";
  bool presentation_input = false;
  std::string family;
  long long p = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (!in.good() && !in.eof()) {
    throw std::runtime_error("cannot read input file: " + path);
  }
  return ss.str();
}

void write_output(const std::string& path, const std::string& data) {
  if (path.empty()) {
    std::cout << data;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << data;
  if (!out.good()) throw std::runtime_error("cannot write output file: " + path);
}

using ReportPtr = std::unique_ptr<hg_report, decltype(&hg_report_free)>;
using DiagramPtr = std::unique_ptr<hg_diagram, decltype(&hg_diagram_free)>;
using SignmatPtr = std::unique_ptr<hg_signmat, decltype(&hg_signmat_free)>;

[[noreturn]] void fail(int rc, const char* errmsg) {
  const char* kind = rc == HG_ERR_LIMIT ? "resource limit exceeded" : "error";
  std::cerr << kind << ": " << errmsg << "\n";
  std::exit(kExitError);
}

DiagramPtr load_diagram(const Options& opt) {
  char err[512] = "";
  hg_diagram* d = nullptr;
  const int rc = hg_diagram_parse_json(read_file(opt.input).c_str(), &d, err,
                                       sizeof err);
  if (rc != HG_OK) fail(rc, err);
  return DiagramPtr(d, hg_diagram_free);
}

SignmatPtr load_signmat(const Options& opt) {
  char err[512] = "";
  hg_signmat* m = nullptr;
  const std::string text = read_file(opt.input);
  const int rc = opt.presentation_input
                     ? hg_signmat_from_presentation(text.c_str(), &m, err,
                                                    sizeof err)
                     : hg_signmat_parse(text.c_str(), &m, err, sizeof err);
  if (rc != HG_OK) fail(rc, err);
  return SignmatPtr(m, hg_signmat_free);
}

int emit(const Options& opt, hg_report* raw) {
  ReportPtr report(raw, hg_report_free);
  const char* body = opt.format == "json" ? hg_report_json(report.get())
                                          : hg_report_text(report.get());
  write_output(opt.output, body);
  return hg_report_exit_code(report.get());
}

int run_diagram_command(const Options& opt,
                        int (*fn)(const hg_diagram*, const hg_limits*,
                                  hg_report**, char*, size_t)) {
  DiagramPtr d = load_diagram(opt);
  char err[512] = "";
  hg_report* r = nullptr;
  const int rc = fn(d.get(), &opt.limits, &r, err, sizeof err);
  if (rc != HG_OK) fail(rc, err);
  return emit(opt, r);
}

int run_check_lo(const Options& opt) {
  SignmatPtr m = load_signmat(opt);
  char err[512] = "";
  hg_report* r = nullptr;
  const int mode = opt.mode == "det" ? HG_LO_DET : HG_LO_BRUTEFORCE;
  const int rc = hg_check_lo(m.get(), mode, &opt.limits, &r, err, sizeof err);
  if (rc != HG_OK) fail(rc, err);
  return emit(opt, r);
}

int run_gen(const Options& opt) {
  if (opt.family != "lens") {
    std::cerr << "error: unknown family '" << opt.family
              << "' (supported: lens)\n";
    return kExitError;
  }
  char err[512] = "";
  hg_diagram* d = nullptr;
  int rc = hg_diagram_lens(opt.p, &d, err, sizeof err);
  if (rc != HG_OK) fail(rc, err);
  DiagramPtr diagram(d, hg_diagram_free);
  char* text = nullptr;
  rc = hg_diagram_to_json(diagram.get(), &text, err, sizeof err);
  if (rc != HG_OK) fail(rc, err);
  std::unique_ptr<char, decltype(&hg_string_free)> owned(text, hg_string_free);
  write_output(opt.output, owned.get());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  hg_limits_init(&opt.limits);

  CLI::App app{"Combinatorial certificates for Heegaard diagrams: strong "
               "diagram detection, non-left-orderability of the presented "
               "fundamental group, and 3-sphere recognition."};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", opt.format, "Report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--max-generators", opt.limits.max_generators,
                 "Generator/matching enumeration cap")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--max-perm-n", opt.limits.max_perm_n,
                 "Formal determinant size cap")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--max-bruteforce-rows", opt.limits.max_bruteforce_rows,
                 "Row-scaling sweep cap (3^m scalings)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("-o,--output", opt.output, "Write to a file instead of stdout");
  };

  CLI::App* analyze = app.add_subcommand(
      "analyze", "Full report on a diagram file (exit 0 iff strong)");
  analyze->add_option("file", opt.input, "Diagram file (JSON)")->required();
  add_output(analyze);

  CLI::App* check_strong = app.add_subcommand(
      "check-strong", "Strong diagram test (exit 0 iff strong)");
  check_strong->add_option("file", opt.input, "Diagram file (JSON)")->required();
  add_output(check_strong);

  CLI::App* check_lo = app.add_subcommand(
      "check-lo",
      "Non-left-orderability certificate from a sign matrix (exit 0 iff "
      "certified)");
  check_lo->add_option("file", opt.input, "Sign matrix file")->required();
  check_lo->add_option("--mode", opt.mode, "Criterion to run")
      ->check(CLI::IsMember({"det", "bruteforce"}))
      ->capture_default_str();
  check_lo->add_flag("--presentation", opt.presentation_input,
                     "Input is a presentation file; use its sign matrix");
  add_output(check_lo);

  CLI::App* recognize = app.add_subcommand(
      "recognize-s3", "3-sphere recognition (exit 0 iff IsS3)");
  recognize->add_option("file", opt.input, "Diagram file (JSON)")->required();
  add_output(recognize);

  CLI::App* matrix = app.add_subcommand(
      "matrix", "Intersection matrices, determinant and permanent");
  matrix->add_option("file", opt.input, "Diagram file (JSON)")->required();
  add_output(matrix);

  CLI::App* gen = app.add_subcommand("gen", "Generate a diagram file");
  gen->add_option("family", opt.family, "Diagram family (lens)")->required();
  gen->add_option("p", opt.p, "Family parameter")->required();
  add_output(gen);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (analyze->parsed()) return run_diagram_command(opt, hg_analyze);
    if (check_strong->parsed()) return run_diagram_command(opt, hg_check_strong);
    if (check_lo->parsed()) return run_check_lo(opt);
    if (recognize->parsed()) return run_diagram_command(opt, hg_recognize_s3);
    if (matrix->parsed()) return run_diagram_command(opt, hg_matrix_summary);
    if (gen->parsed()) return run_gen(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
