#ifndef POLYCERT_SUPPORT_HPP
#define POLYCERT_SUPPORT_HPP

#include <set>
#include <vector>

#include "polycert/polynomial.hpp"

namespace polycert {

/// Finite set of exponent tuples; the combinatorial shadow of a polynomial.
class SupportSet {
 public:
  explicit SupportSet(int nvars) : nvars_(nvars) {}
  SupportSet(int nvars, std::set<Exponents> points)
      : nvars_(nvars), points_(std::move(points)) {}

  int nvars() const { return nvars_; }
  const std::set<Exponents>& points() const { return points_; }
  bool contains(const Exponents& e) const { return points_.count(e) > 0; }
  bool empty() const { return points_.empty(); }
  std::size_t size() const { return points_.size(); }
  void insert(Exponents e);
  bool subset_of(const SupportSet& other) const;
  bool operator==(const SupportSet& other) const {
    return nvars_ == other.nvars_ && points_ == other.points_;
  }

 private:
  int nvars_;
  std::set<Exponents> points_;  // plain lexicographic order
};

/// A proper face of a Newton polytope, certified by a supporting normal:
/// <normal, m> = value for every member, strictly less for every other
/// support point.
struct FaceData {
  std::vector<Rational> normal;
  Rational value;
  SupportSet members;
};

/// Exponents with nonzero coefficient.
SupportSet log_set(const Polynomial& p);

/// {a + b : a in A, b in B}; empty if either side is empty.
SupportSet minkowski_sum(const SupportSet& a, const SupportSet& b);

/// Extreme points of the convex hull of the set, each certified by an exact
/// LP (the point is not a convex combination of the remaining points).
SupportSet extreme_points(const SupportSet& s);

/// Vertices of the Newton polytope of p (p != 0).
SupportSet newton_vertices(const Polynomial& p);

/// All proper faces of the Newton polytope of p (p != 0), each with a
/// certified supporting normal scaled to integers. Brute force over vertex
/// subsets; intended for desk-scale supports.
std::vector<FaceData> newton_faces(const Polynomial& p);

/// Nonzero elements of s that are not a sum of two nonzero elements of s.
SupportSet atoms(const SupportSet& s);

/// Least k such that every element of s is a sum of at most k atoms of s
/// (0 counts as the empty sum). Throws if some element has no such
/// decomposition.
long max_atom_count(const SupportSet& s);

/// Log(f) subset of Log(g^k); requires g in P+ and g != 0. True means
/// f / g^k lies in the bounded ring of the localization at g.
bool bounded_ring_member(const Polynomial& f, const Polynomial& g,
                         unsigned long k);

/// Atom-count bound for the power support inclusion: for every vertex a of
/// the Newton polytope, shift the support by -a and take the largest number
/// of atoms needed in the split recursion; the maximum over vertices.
/// Requires f != 0 and f^l in P+.
long gonflage_bound(const Polynomial& f, unsigned long l);

/// Checks (lk-1)*a + Log(f) subset of Log(f^(lk)) for every vertex a of the
/// Newton polytope, by exact expansion. Requires f != 0 and f^l in P+.
bool verify_gonflage(const Polynomial& f, unsigned long l, unsigned long k);

}  // namespace polycert

#endif  // POLYCERT_SUPPORT_HPP
