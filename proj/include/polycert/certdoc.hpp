#ifndef POLYCERT_CERTDOC_HPP
#define POLYCERT_CERTDOC_HPP

#include <string>

namespace polycert {

/// Outcome of a command run: an exit status with the scriptable contract
/// (0 = certified positive result, 2 = certified or explicit negative,
/// exhaustion, or failed verification, 1 = usage/parse/precondition error)
/// plus the JSON certificate document on 0/2 or an error message on 1.
struct RunResult {
  int code = 1;
  std::string document;  // JSON text, newline-terminated, deterministic
  std::string error;     // set when code == 1
};

RunResult run_polya(const std::string& f_text, long max_k);

/// identity_text: one "g ; h" pair per line, both in the polynomial grammar.
/// With positive = true the trivial identity f = f * 1 is used and
/// identity_text is ignored.
RunResult run_certify(const std::string& f_text,
                      const std::string& identity_text, bool positive,
                      long max_shift, long max_k);

RunResult run_powers(const std::string& f_text, long max_power);

/// generators_text: one polynomial per line.
RunResult run_member(const std::string& target_text,
                     const std::string& generators_text, long degree_bound);

RunResult run_newton(const std::string& f_text);

/// w_csv: comma-separated rationals, or empty to enumerate every proper
/// initial part with its face certificate.
RunResult run_initial(const std::string& f_text, const std::string& w_csv);

RunResult run_frobenius(long l1, long l2, long k);

/// Re-checks the claims of any emitted document (exact arithmetic only, no
/// search is re-run). code 0 when everything checks, 2 when some claim
/// fails, 1 on malformed input.
RunResult run_verify(const std::string& document_json);

}  // namespace polycert

#endif  // POLYCERT_CERTDOC_HPP
