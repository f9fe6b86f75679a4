#ifndef POLYCERT_TESTS_TESTUTIL_HPP
#define POLYCERT_TESTS_TESTUTIL_HPP

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "polycert/polynomial.hpp"

namespace testutil {

inline polycert::Polynomial P(const std::string& text, int nvars = 0) {
  return polycert::Polynomial::parse(text, nvars);
}

inline polycert::Rational Q(const std::string& text) {
  return polycert::parse_rational(text);
}

// deterministic random polynomials for property tests
struct PolyGen {
  std::mt19937 rng;

  explicit PolyGen(unsigned seed) : rng(seed) {}

  long pick(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
  }

  polycert::Rational coeff(long lo = -5, long hi = 5) {
    long c = pick(lo, hi);
    if (c == 0) c = 1;
    return polycert::Rational(c);
  }

  polycert::Polynomial random_poly(int nvars, long max_deg, int max_terms,
                                   bool nonneg = false) {
    polycert::Polynomial out(nvars);
    int terms = static_cast<int>(pick(1, max_terms));
    for (int t = 0; t < terms; ++t) {
      polycert::Exponents e(nvars, 0);
      long budget = max_deg;
      for (int i = 0; i < nvars; ++i) {
        e[i] = pick(0, budget);
        budget -= e[i];
      }
      polycert::Rational c = coeff();
      if (nonneg && c < 0) c = -c;
      out = out + polycert::Polynomial::monomial(nvars, e, c);
    }
    if (out.is_zero())
      out = polycert::Polynomial::constant(nvars, 1);
    return out;
  }

  polycert::Polynomial random_homogeneous(int nvars, long deg, int max_terms) {
    polycert::Polynomial out(nvars);
    int terms = static_cast<int>(pick(1, max_terms));
    for (int t = 0; t < terms; ++t) {
      polycert::Exponents e(nvars, 0);
      long left = deg;
      for (int i = 0; i + 1 < nvars; ++i) {
        e[i] = pick(0, left);
        left -= e[i];
      }
      e[nvars - 1] = left;
      out = out + polycert::Polynomial::monomial(nvars, e, coeff());
    }
    if (out.is_zero())
      out = polycert::Polynomial::monomial(nvars, polycert::Exponents(nvars, 0),
                                           1)
                .homogenize_pad(deg);
    return out;
  }

  // random point with positive rational coordinates summing to 1
  std::vector<polycert::Rational> simplex_point(int nvars) {
    std::vector<polycert::Rational> x(nvars);
    polycert::Rational total(0);
    for (int i = 0; i < nvars; ++i) {
      x[i] = polycert::Rational(pick(1, 9));
      total += x[i];
    }
    for (auto& v : x) v /= total;
    return x;
  }
};

// ---- CLI subprocess driver ----

struct CliResult {
  int code = -1;
  std::string out;
};

inline std::string cli_path() {
  if (const char* env = std::getenv("POLYCERT_CLI")) return env;
#ifdef POLYCERT_CLI_PATH
  return POLYCERT_CLI_PATH;
#else
  return "polycert";
#endif
}

inline std::string write_temp(const std::string& contents) {
  static int counter = 0;
  std::string path = "/tmp/polycert_test_" + std::to_string(getpid()) + "_" +
                     std::to_string(counter++) + ".txt";
  std::ofstream out(path);
  out << contents;
  return path;
}

inline CliResult run_cli(const std::string& args,
                         const std::string& stdin_data = "") {
  std::string cmd = cli_path() + " " + args;
  if (!stdin_data.empty()) cmd += " < " + write_temp(stdin_data);
  cmd += " 2>/dev/null";
  CliResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return res;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
  int status = pclose(pipe);
  res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

}  // namespace testutil

#endif  // POLYCERT_TESTS_TESTUTIL_HPP
