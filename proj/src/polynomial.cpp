#include "polycert/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "polycert/error.hpp"

namespace polycert {

long total_degree(const Exponents& e) {
  long d = 0;
  for (long v : e) d += v;
  return d;
}

bool TermOrder::operator()(const Exponents& a, const Exponents& b) const {
  long da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return a > b;  // lexicographically larger exponent first within a degree
}

Polynomial::Polynomial(int nvars) : nvars_(nvars) {
  if (nvars < 1) throw Error(Error::Code::kArgument, "nvars must be positive");
}

void Polynomial::insert_term(Exponents e, Rational c) {
  if (c == 0) return;
  if (static_cast<int>(e.size()) != nvars_)
    throw_dimension("exponent tuple length does not match nvars");
  for (long v : e)
    if (v < 0) throw Error(Error::Code::kArgument, "negative exponent");
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(std::move(e), std::move(c));
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial p(nvars);
  p.insert_term(Exponents(nvars, 0), c);
  return p;
}

Polynomial Polynomial::monomial(int nvars, Exponents e, const Rational& c) {
  Polynomial p(nvars);
  p.insert_term(std::move(e), c);
  return p;
}

Polynomial Polynomial::variable_sum(int nvars) {
  Polynomial p(nvars);
  for (int i = 0; i < nvars; ++i) {
    Exponents e(nvars, 0);
    e[i] = 1;
    p.insert_term(std::move(e), 1);
  }
  return p;
}

Polynomial Polynomial::simplex_relation(int nvars) {
  return variable_sum(nvars) - constant(nvars, 1);
}

std::optional<long> Polynomial::degree() const {
  if (terms_.empty()) return std::nullopt;
  // graded order: the first term has maximal degree
  return total_degree(terms_.begin()->first);
}

Rational Polynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool Polynomial::operator==(const Polynomial& other) const {
  return nvars_ == other.nvars_ && terms_ == other.terms_;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  if (nvars_ != other.nvars_)
    throw_dimension("cannot add polynomials in different variable counts");
  Polynomial out = *this;
  for (const auto& [e, c] : other.terms_) out.insert_term(e, c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  if (nvars_ != other.nvars_)
    throw_dimension("cannot subtract polynomials in different variable counts");
  Polynomial out = *this;
  for (const auto& [e, c] : other.terms_) out.insert_term(e, -c);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(nvars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (nvars_ != other.nvars_)
    throw_dimension("cannot multiply polynomials in different variable counts");
  Polynomial out(nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      Exponents e(nvars_);
      for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      out.insert_term(std::move(e), ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  Polynomial out(nvars_);
  if (c == 0) return out;
  for (const auto& [e, coeff] : terms_) out.terms_.emplace(e, coeff * c);
  return out;
}

Polynomial Polynomial::pow(unsigned long k) const {
  Polynomial acc = constant(nvars_, 1);
  for (unsigned long i = 0; i < k; ++i) acc = acc * *this;
  return acc;
}

Rational Polynomial::evaluate(const std::vector<Rational>& x) const {
  if (static_cast<int>(x.size()) != nvars_)
    throw_dimension("evaluation point length does not match nvars");
  Rational total(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] > 0) term *= rational_pow(x[i], static_cast<unsigned long>(e[i]));
    }
    total += term;
  }
  return total;
}

std::vector<std::pair<long, Polynomial>> Polynomial::graded_parts() const {
  std::map<long, Polynomial> parts;
  for (const auto& [e, c] : terms_) {
    long d = total_degree(e);
    auto it = parts.find(d);
    if (it == parts.end()) it = parts.emplace(d, Polynomial(nvars_)).first;
    it->second.insert_term(e, c);
  }
  std::vector<std::pair<long, Polynomial>> out;
  out.reserve(parts.size());
  for (auto& [d, p] : parts) out.emplace_back(d, std::move(p));
  return out;
}

Polynomial Polynomial::homogenize_pad(long d) const {
  if (is_zero()) return Polynomial(nvars_);
  if (d < *degree())
    throw_precondition("homogenize_pad target degree below polynomial degree");
  Polynomial out(nvars_);
  Polynomial s = variable_sum(nvars_);
  for (const auto& [k, part] : graded_parts())
    out = out + part * s.pow(static_cast<unsigned long>(d - k));
  return out;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  long d = total_degree(terms_.begin()->first);
  for (const auto& [e, c] : terms_)
    if (total_degree(e) != d) return false;
  return true;
}

Polynomial::NonnegCheck Polynomial::nonneg_coefficients() const {
  // witness scan runs lowest term first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    if (it->second < 0) return {false, it->first};
  return {true, std::nullopt};
}

Polynomial Polynomial::extended(int new_nvars) const {
  if (new_nvars < nvars_)
    throw Error(Error::Code::kArgument, "extended cannot shrink nvars");
  Polynomial out(new_nvars);
  for (const auto& [e, c] : terms_) {
    Exponents e2 = e;
    e2.resize(new_nvars, 0);
    out.terms_.emplace(std::move(e2), c);
  }
  return out;
}

namespace {

// Tokenizer-free recursive parse of the term grammar.
struct Parser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  mpz_class read_unsigned_integer(const char* what) {
    skip_ws();
    std::string digits;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      digits += text[pos];
      ++pos;
    }
    if (digits.empty())
      throw_parse(std::string("expected digits for ") + what + " at offset " +
                  std::to_string(pos));
    return mpz_class(digits);
  }

  Rational read_rational() {
    mpz_class num = read_unsigned_integer("coefficient");
    mpz_class den = 1;
    skip_ws();
    if (pos < text.size() && text[pos] == '/') {
      ++pos;
      den = read_unsigned_integer("denominator");
      if (den == 0) throw_parse("zero denominator in coefficient");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  // x<i>[^e]; returns (index, exponent)
  std::pair<long, long> read_variable_factor() {
    skip_ws();
    ++pos;  // consume 'x'
    mpz_class idx = read_unsigned_integer("variable index");
    if (idx < 1) throw_parse("variable indices are 1-based");
    if (!idx.fits_slong_p()) throw_parse("variable index out of range");
    long e = 1;
    skip_ws();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      mpz_class exp = read_unsigned_integer("exponent");
      if (!exp.fits_slong_p()) throw_parse("exponent out of range");
      e = exp.get_si();
    }
    return {idx.get_si(), e};
  }

  // One signed term into (coefficient, exponent map by index).
  void read_term(Rational& coeff, std::map<long, long>& exps) {
    coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = read_rational();
      have_coeff = true;
      skip_ws();
      if (pos < text.size() && text[pos] == '*') ++pos;
    }
    bool have_var = false;
    while (peek() == 'x') {
      auto [idx, e] = read_variable_factor();
      exps[idx] += e;
      have_var = true;
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        if (peek() != 'x') throw_parse("expected variable after '*'");
      }
    }
    if (!have_coeff && !have_var)
      throw_parse("expected a term at offset " + std::to_string(pos));
  }
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text, int nvars) {
  Parser p{text};
  struct RawTerm {
    Rational coeff;
    std::map<long, long> exps;
  };
  std::vector<RawTerm> raw;
  long max_index = 0;

  if (p.done()) throw_parse("empty polynomial text");
  bool first = true;
  while (!p.done()) {
    int sign = 1;
    char c = p.peek();
    if (c == '+' || c == '-') {
      sign = (c == '-') ? -1 : 1;
      ++p.pos;
    } else if (!first) {
      throw_parse("expected '+' or '-' between terms at offset " +
                  std::to_string(p.pos));
    }
    RawTerm t;
    p.read_term(t.coeff, t.exps);
    if (sign < 0) t.coeff = -t.coeff;
    for (const auto& [idx, e] : t.exps) max_index = std::max(max_index, idx);
    raw.push_back(std::move(t));
    first = false;
  }

  int n = nvars > 0 ? nvars : static_cast<int>(std::max<long>(max_index, 1));
  if (max_index > n)
    throw_dimension("polynomial mentions x" + std::to_string(max_index) +
                    " but nvars is " + std::to_string(n));
  Polynomial out(n);
  for (auto& t : raw) {
    Exponents e(n, 0);
    for (const auto& [idx, ex] : t.exps) e[idx - 1] = ex;
    out.insert_term(std::move(e), std::move(t.coeff));
  }
  return out;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    bool has_vars = total_degree(e) > 0;
    if (!has_vars) {
      os << rational_str(a);
    } else {
      bool wrote = false;
      if (a != 1) {
        os << rational_str(a);
        wrote = true;
      }
      for (int i = 0; i < nvars_; ++i) {
        if (e[i] == 0) continue;
        if (wrote) os << "*";
        os << "x" << (i + 1);
        if (e[i] > 1) os << "^" << e[i];
        wrote = true;
      }
    }
    first = false;
  }
  return os.str();
}

}  // namespace polycert
