#include "polycert/valuation.hpp"

#include <map>

#include "polycert/error.hpp"

namespace polycert {

namespace {

Rational weight_dot(const WeightVector& w, const Exponents& e) {
  Rational dot(0);
  for (std::size_t i = 0; i < w.size(); ++i) dot += w[i] * Rational(e[i]);
  return dot;
}

void check_weight(const Polynomial& p, const WeightVector& w) {
  if (static_cast<int>(w.size()) != p.nvars())
    throw_dimension("weight vector length does not match nvars");
}

}  // namespace

ValuationValue valuation(const Polynomial& p, const WeightVector& w) {
  check_weight(p, w);
  if (p.is_zero()) return {true, Rational(0)};
  bool first = true;
  Rational best(0);
  for (const auto& [e, c] : p.terms()) {
    Rational d = weight_dot(w, e);
    if (first || d > best) best = d;
    first = false;
  }
  return {false, -best};
}

Polynomial initial_part(const Polynomial& p, const WeightVector& w) {
  check_weight(p, w);
  Polynomial out(p.nvars());
  if (p.is_zero()) return out;
  Rational best = -valuation(p, w).value;
  for (const auto& [e, c] : p.terms())
    if (weight_dot(w, e) == best)
      out = out + Polynomial::monomial(p.nvars(), e, c);
  return out;
}

Fraction::Fraction(Polynomial n, Polynomial d)
    : num(std::move(n)), den(std::move(d)) {
  if (den.is_zero()) throw_precondition("fraction with zero denominator");
  if (num.nvars() != den.nvars())
    throw_dimension("fraction with mismatched nvars");
}

bool fraction_equal(const Fraction& a, const Fraction& b) {
  return a.num * b.den == b.num * a.den;
}

PlaceResult place(const Fraction& a, const WeightVector& w) {
  ValuationValue vn = valuation(a.num, w);
  ValuationValue vd = valuation(a.den, w);
  if (vn.infinite) return {PlaceResult::Kind::kZero, std::nullopt};
  if (vn.value > vd.value) return {PlaceResult::Kind::kZero, std::nullopt};
  if (vn.value < vd.value) return {PlaceResult::Kind::kUndefined, std::nullopt};
  return {PlaceResult::Kind::kFinite,
          Fraction(initial_part(a.num, w), initial_part(a.den, w))};
}

std::vector<std::pair<FaceData, Polynomial>> proper_initial_parts(
    const Polynomial& p) {
  if (p.is_zero())
    throw_precondition("proper_initial_parts of the zero polynomial");
  std::vector<std::pair<FaceData, Polynomial>> out;
  for (FaceData& face : newton_faces(p)) {
    Polynomial part = initial_part(p, face.normal);
    out.emplace_back(std::move(face), std::move(part));
  }
  return out;
}

AddassResult check_addass(const Polynomial& p) {
  if (p.is_zero()) throw_precondition("check_addass of the zero polynomial");
  for (auto& [face, part] : proper_initial_parts(p)) {
    if (!part.nonneg_coefficients().nonneg)
      return {false, std::move(face), std::move(part)};
  }
  return {true, std::nullopt, std::nullopt};
}

std::vector<LimitRow> limit_check(const Polynomial& p,
                                  const std::vector<long>& w,
                                  const std::vector<Rational>& x) {
  if (p.is_zero()) throw_precondition("limit_check of the zero polynomial");
  if (static_cast<int>(w.size()) != p.nvars())
    throw_dimension("weight vector length does not match nvars");
  if (static_cast<int>(x.size()) != p.nvars())
    throw_dimension("evaluation point length does not match nvars");
  long best = 0;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    long d = 0;
    for (int i = 0; i < p.nvars(); ++i) d += w[i] * e[i];
    if (first || d > best) best = d;
    first = false;
  }
  std::map<long, Rational> rows;
  for (const auto& [e, c] : p.terms()) {
    long d = 0;
    Rational term = c;
    for (int i = 0; i < p.nvars(); ++i) {
      d += w[i] * e[i];
      if (e[i] > 0) term *= rational_pow(x[i], static_cast<unsigned long>(e[i]));
    }
    rows[best - d] += term;
  }
  std::vector<LimitRow> out;
  for (const auto& [s, v] : rows) out.push_back({s, v});
  return out;
}

}  // namespace polycert
