// polycert command-line tool. All computation happens behind the C API of
// the shared library; this translation unit only parses flags, moves file
// contents around, and maps statuses to exit codes.
//
// Exit contract: 0 = certified positive result, 2 = certified/explicit
// negative or budget exhaustion, 1 = usage, parse, or precondition error.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "polycert.h"

namespace {

// "-" reads stdin
std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Owned {
  char* ptr = nullptr;
  ~Owned() { pc_string_free(ptr); }
};

int deliver(pc_status status, const Owned& doc, const Owned& err) {
  if (status == PC_OK || status == PC_NEGATIVE) {
    if (doc.ptr) std::fputs(doc.ptr, stdout);
    return status == PC_OK ? 0 : 2;
  }
  std::cerr << "error: " << (err.ptr ? err.ptr : "unknown failure") << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact positivity certificates for sparse rational polynomials"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string identity_file;
  std::string target;
  std::string generators_file;
  std::string w_csv;
  long max_k = 200;
  long max_shift = 64;
  long max_power = 200;
  long degree = 0;
  long l1 = 0, l2 = 0, k = 1;
  bool positive = false;

  auto* polya = app.add_subcommand(
      "polya", "least k with (x1+...+xn)^k * f coefficient-nonnegative");
  polya->add_option("--input", input, "polynomial file, - for stdin");
  polya->add_option("--max-k", max_k, "search budget")->capture_default_str();

  auto* certify = app.add_subcommand(
      "certify", "coefficient-nonnegative representative modulo x1+...+xn-1");
  certify->add_option("--input", input, "polynomial file, - for stdin");
  certify->add_option("--identity", identity_file,
                      "file with one 'g ; h' pair per line");
  certify->add_flag("--positive", positive, "use the trivial identity f = f*1");
  certify->add_option("--max-shift", max_shift, "shift budget")
      ->capture_default_str();
  certify->add_option("--max-k", max_k, "refinement budget")
      ->capture_default_str();

  auto* powers = app.add_subcommand(
      "powers", "decide eventual coefficient-nonnegativity of f^k");
  powers->add_option("--input", input, "polynomial file, - for stdin");
  powers->add_option("--max-power", max_power, "scan budget")
      ->capture_default_str();

  auto* member = app.add_subcommand(
      "member", "degree-bounded membership in a generated semiring");
  member->add_option("--target", target, "target polynomial (literal text)")
      ->required();
  member->add_option("--generators", generators_file,
                     "file with one generator per line, - for stdin")
      ->required();
  member->add_option("--degree", degree, "product degree bound")->required();

  auto* newton = app.add_subcommand(
      "newton", "certified Newton polytope vertices and proper faces");
  newton->add_option("--input", input, "polynomial file, - for stdin");

  auto* initial = app.add_subcommand(
      "initial", "monomial valuation and initial parts");
  initial->add_option("--input", input, "polynomial file, - for stdin");
  initial->add_option("--w", w_csv, "weights, comma-separated rationals");

  auto* frobenius = app.add_subcommand(
      "frobenius", "conductor of the shifted numerical semigroup");
  frobenius->add_option("--l1", l1, "first generator")->required();
  frobenius->add_option("--l2", l2, "second generator")->required();
  frobenius->add_option("--k", k, "offset")->capture_default_str();

  auto* verify = app.add_subcommand(
      "verify", "re-check the claims of an emitted certificate document");
  verify->add_option("--input", input, "document file, - for stdin");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    int code = app.exit(e, out, err);
    std::cout << out.str();
    std::cerr << err.str();
    return code == 0 ? 0 : 1;
  }

  Owned doc, err;
  try {
    if (polya->parsed()) {
      std::string f = read_input(input);
      return deliver(pc_run_polya(f.c_str(), max_k, &doc.ptr, &err.ptr), doc, err);
    }
    if (certify->parsed()) {
      std::string f = read_input(input);
      std::string id;
      if (!positive) {
        if (identity_file.empty()) {
          std::cerr << "error: certify needs --identity or --positive\n";
          return 1;
        }
        id = read_input(identity_file);
      }
      return deliver(pc_run_certify(f.c_str(), id.c_str(), positive ? 1 : 0,
                                    max_shift, max_k, &doc.ptr, &err.ptr),
                     doc, err);
    }
    if (powers->parsed()) {
      std::string f = read_input(input);
      return deliver(pc_run_powers(f.c_str(), max_power, &doc.ptr, &err.ptr),
                     doc, err);
    }
    if (member->parsed()) {
      std::string gens = read_input(generators_file);
      return deliver(pc_run_member(target.c_str(), gens.c_str(), degree,
                                   &doc.ptr, &err.ptr),
                     doc, err);
    }
    if (newton->parsed()) {
      std::string f = read_input(input);
      return deliver(pc_run_newton(f.c_str(), &doc.ptr, &err.ptr), doc, err);
    }
    if (initial->parsed()) {
      std::string f = read_input(input);
      return deliver(pc_run_initial(f.c_str(), w_csv.c_str(), &doc.ptr, &err.ptr),
                     doc, err);
    }
    if (frobenius->parsed()) {
      return deliver(pc_run_frobenius(l1, l2, k, &doc.ptr, &err.ptr), doc, err);
    }
    if (verify->parsed()) {
      std::string d = read_input(input);
      return deliver(pc_run_verify(d.c_str(), &doc.ptr, &err.ptr), doc, err);
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
