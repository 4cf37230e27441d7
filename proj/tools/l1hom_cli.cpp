// Command-line frontend: ingest JSON instances, run the computations, emit
// results and certificates as files.
//
// Exit status: 0 success, 1 domain error (the module error name is
// printed), 2 malformed input or usage.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "l1hom/covering.hpp"
#include "l1hom/errors.hpp"
#include "l1hom/homology.hpp"
#include "l1hom/io.hpp"
#include "l1hom/measure.hpp"
#include "l1hom/seminorm.hpp"
#include "l1hom/subdivision.hpp"

namespace {

using namespace l1hom;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// The stdout report is deterministic; timing goes to stderr so repeated
// runs stay byte-identical on stdout.
void report_header(const std::string& command, const std::string& input_text) {
  std::cout << "command: " << command << "\n";
  std::cout << "input: fnv1a:" << digest_hex(input_text) << "\n";
}

HomologyClass select_class(const SimplicialComplex& x, int degree,
                           int class_index,
                           std::vector<HomologyClass>& storage) {
  storage = homology_basis(x, degree);
  if (class_index < 0 || class_index >= static_cast<int>(storage.size())) {
    throw DomainError("NoSuchClass",
                      "degree " + std::to_string(degree) + " has " +
                          std::to_string(storage.size()) + " classes");
  }
  return storage[class_index];
}

int run_homology(const std::string& input, int degree, const std::string& out) {
  std::string text = slurp(input);
  SimplicialComplex x = complex_from_json(parse_json(text));
  Timer timer;
  std::vector<int> betti = betti_numbers(x);
  report_header("homology", text);
  Json betti_json = Json::array();
  for (int k = 0; k <= x.dim(); ++k) {
    if (degree >= 0 && k != degree) continue;
    std::cout << "b_" << k << ": " << betti[k] << "\n";
    betti_json.push_back(rat_str(Rat(betti[k])));
  }
  if (!out.empty()) {
    Json j;
    j["command"] = "homology";
    j["input_digest"] = digest_hex(text);
    j["betti"] = std::move(betti_json);
    write_json_file(out, j);
  }
  std::cerr << "elapsed_ms: " << timer.ms() << "\n";
  return 0;
}

int run_l1norm(const std::string& input, int degree, int class_index,
               const std::string& out, const std::string& dump_lp) {
  std::string text = slurp(input);
  SimplicialComplex x = complex_from_json(parse_json(text));
  Timer timer;
  std::vector<HomologyClass> storage;
  HomologyClass alpha = select_class(x, degree, class_index, storage);
  if (!dump_lp.empty()) {
    std::ofstream f(dump_lp);
    if (!f) throw MalformedInput("cannot write " + dump_lp);
    f << lp_dump_text(seminorm_lp(alpha));
  }
  SeminormResult res = l1_seminorm(alpha);
  report_header("l1norm", text);
  std::cout << "degree: " << degree << "\n";
  std::cout << "class_index: " << class_index << "\n";
  std::cout << "l1_seminorm: " << rat_str(res.value) << "\n";
  std::cout << "pivots: " << res.pivots << "\n";
  if (!out.empty()) write_json_file(out, chain_to_json(res.optimal_chain));
  std::cerr << "elapsed_ms: " << timer.ms() << "\n";
  return 0;
}

int run_certificate(const std::string& input, int degree, int class_index,
                    const std::string& out) {
  std::string text = slurp(input);
  SimplicialComplex x = complex_from_json(parse_json(text));
  Timer timer;
  std::vector<HomologyClass> storage;
  HomologyClass alpha = select_class(x, degree, class_index, storage);
  auto cert = dual_certificate(alpha);
  report_header("certificate", text);
  if (!cert) {
    // Seminorm zero: every cocycle pairs to zero, so no normalized
    // certificate exists. Nothing is written.
    std::cout << "certificate: NoneExists (seminorm is 0)\n";
  } else {
    std::cout << "pairing: " << rat_str(cert->pairing) << "\n";
    std::cout << "sup_norm: " << rat_str(cert->sup_norm) << "\n";
    std::cout << "certified_bound: " << rat_str(Rat(1) / cert->sup_norm) << "\n";
    if (!out.empty()) write_json_file(out, certificate_to_json(x, *cert));
  }
  std::cerr << "elapsed_ms: " << timer.ms() << "\n";
  return 0;
}

int run_verify(const std::string& input, int degree, int class_index,
               const std::string& cert_path) {
  std::string text = slurp(input);
  SimplicialComplex x = complex_from_json(parse_json(text));
  Timer timer;
  std::vector<HomologyClass> storage;
  HomologyClass alpha = select_class(x, degree, class_index, storage);
  DualCertificate cert = certificate_from_json(read_json_file(cert_path), x);
  Rat bound = verify_certificate(cert.cochain, alpha);
  report_header("verify", text);
  std::cout << "certified_bound: " << rat_str(bound) << "\n";
  std::cerr << "elapsed_ms: " << timer.ms() << "\n";
  return 0;
}

int run_volume(const std::string& input, int rounds, const std::string& out) {
  std::string text = slurp(input);
  SimplicialComplex x = complex_from_json(parse_json(text));
  Timer timer;
  std::vector<Rat> values = simplicial_volume_upper(x, rounds);
  report_header("volume", text);
  Json list = Json::array();
  for (size_t i = 0; i < values.size(); ++i) {
    std::cout << "v_" << i << ": " << rat_str(values[i]) << "\n";
    list.push_back(rat_str(values[i]));
  }
  if (!out.empty()) {
    Json j;
    j["command"] = "volume";
    j["input_digest"] = digest_hex(text);
    j["values"] = std::move(list);
    write_json_file(out, j);
  }
  std::cerr << "elapsed_ms: " << timer.ms() << "\n";
  return 0;
}

int run_measure_selftest(const std::string& input, int trials,
                         const std::string& out) {
  std::string text = slurp(input);
  SimplicialComplex x = complex_from_json(parse_json(text));
  Timer timer;
  auto results = measure_selftest(x, trials, 0x5eed5eedULL);
  report_header("measure-selftest", text);
  bool all_ok = true;
  Json list = Json::array();
  for (const auto& [name, ok] : results) {
    std::cout << (ok ? "[ok]   " : "[FAIL] ") << name << "\n";
    Json entry;
    entry["check"] = name;
    entry["passed"] = ok;
    list.push_back(std::move(entry));
    all_ok = all_ok && ok;
  }
  if (!out.empty()) {
    Json j;
    j["command"] = "measure-selftest";
    j["input_digest"] = digest_hex(text);
    j["checks"] = std::move(list);
    write_json_file(out, j);
  }
  std::cerr << "elapsed_ms: " << timer.ms() << "\n";
  return all_ok ? 0 : 1;
}

int run_cover_section(const std::string& input, const std::string& out) {
  std::string text = slurp(input);
  CoveringMap cover = cover_from_json(parse_json(text));
  Timer timer;
  Section section = build_section(cover);
  bool ok = verify_section(cover, section);
  report_header("cover-section", text);
  std::cout << "sheets: " << sheet_count(cover) << "\n";
  std::cout << "section_verified: " << (ok ? "true" : "false") << "\n";
  if (!out.empty()) write_json_file(out, section_to_json(section));
  std::cerr << "elapsed_ms: " << timer.ms() << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact l1-seminorm toolkit for finite simplicial complexes"};
  app.require_subcommand(1);

  std::string input, out, cert_path, dump_lp;
  int degree = -1, class_index = 0, rounds = 0, trials = 50;

  auto* homology = app.add_subcommand("homology", "Betti numbers over Q");
  homology->add_option("--input", input)->required();
  homology->add_option("--degree", degree);
  homology->add_option("--out", out);

  auto* l1norm = app.add_subcommand("l1norm", "l1 seminorm of a homology class");
  l1norm->add_option("--input", input)->required();
  l1norm->add_option("--degree", degree)->required();
  l1norm->add_option("--class-index", class_index);
  l1norm->add_option("--out", out);
  l1norm->add_option("--dump-lp", dump_lp);

  auto* certificate =
      app.add_subcommand("certificate", "dual bounded-cochain certificate");
  certificate->add_option("--input", input)->required();
  certificate->add_option("--degree", degree)->required();
  certificate->add_option("--class-index", class_index);
  certificate->add_option("--out", out);

  auto* verify =
      app.add_subcommand("verify", "re-check a certificate independently");
  verify->add_option("--input", input)->required();
  verify->add_option("--degree", degree)->required();
  verify->add_option("--class-index", class_index);
  verify->add_option("--certificate", cert_path)->required();

  auto* volume = app.add_subcommand(
      "volume", "simplicial volume upper bounds via subdivision");
  volume->add_option("--input", input)->required();
  volume->add_option("--subdivide", rounds);
  volume->add_option("--out", out);

  auto* selftest = app.add_subcommand("measure-selftest",
                                      "measure-chain property suite");
  selftest->add_option("--input", input)->required();
  selftest->add_option("--trials", trials);
  selftest->add_option("--out", out);

  auto* cover =
      app.add_subcommand("cover-section", "build and verify a covering section");
  cover->add_option("--input", input)->required();
  cover->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (homology->parsed()) return run_homology(input, degree, out);
    if (l1norm->parsed()) return run_l1norm(input, degree, class_index, out, dump_lp);
    if (certificate->parsed())
      return run_certificate(input, degree, class_index, out);
    if (verify->parsed()) return run_verify(input, degree, class_index, cert_path);
    if (volume->parsed()) return run_volume(input, rounds, out);
    if (selftest->parsed()) return run_measure_selftest(input, trials, out);
    if (cover->parsed()) return run_cover_section(input, out);
  } catch (const MalformedInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
