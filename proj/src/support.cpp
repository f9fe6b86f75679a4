#include "polycert/support.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>

#include "polycert/error.hpp"
#include "polycert/lp.hpp"

namespace polycert {

namespace {

using SignedVec = std::vector<long>;

SignedVec vec_sub(const SignedVec& a, const SignedVec& b) {
  SignedVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

SignedVec vec_add(const SignedVec& a, const SignedVec& b) {
  SignedVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

bool is_zero_vec(const SignedVec& v) {
  return std::all_of(v.begin(), v.end(), [](long x) { return x == 0; });
}

// Nonzero elements that are not a sum of two nonzero elements of the set.
std::set<SignedVec> atoms_of(const std::set<SignedVec>& pts) {
  std::set<SignedVec> sums;
  for (const auto& u : pts) {
    if (is_zero_vec(u)) continue;
    for (const auto& v : pts) {
      if (is_zero_vec(v)) continue;
      sums.insert(vec_add(u, v));
    }
  }
  std::set<SignedVec> out;
  for (const auto& p : pts)
    if (!is_zero_vec(p) && sums.count(p) == 0) out.insert(p);
  return out;
}

constexpr long kInfCount = std::numeric_limits<long>::max() / 4;

// Atom count along the split recursion: an element is either an atom (count
// 1) or splits as u+v inside the set. Relaxes to a fixpoint, so it needs no
// separating direction; unreachable elements keep kInfCount.
std::map<SignedVec, long> split_atom_counts(const std::set<SignedVec>& pts) {
  std::set<SignedVec> atomset = atoms_of(pts);
  std::map<SignedVec, long> count;
  for (const auto& p : pts) {
    if (is_zero_vec(p)) count[p] = 0;
    else if (atomset.count(p)) count[p] = 1;
    else count[p] = kInfCount;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& s : pts) {
      if (is_zero_vec(s)) continue;
      for (const auto& u : pts) {
        if (is_zero_vec(u)) continue;
        SignedVec v = vec_sub(s, u);
        auto it = count.find(v);
        if (it == count.end() || is_zero_vec(v)) continue;
        long cu = count[u], cv = it->second;
        if (cu >= kInfCount || cv >= kInfCount) continue;
        if (cu + cv < count[s]) {
          count[s] = cu + cv;
          changed = true;
        }
      }
    }
  }
  return count;
}

}  // namespace

void SupportSet::insert(Exponents e) {
  if (static_cast<int>(e.size()) != nvars_)
    throw_dimension("point length does not match SupportSet nvars");
  points_.insert(std::move(e));
}

bool SupportSet::subset_of(const SupportSet& other) const {
  for (const auto& p : points_)
    if (!other.contains(p)) return false;
  return true;
}

SupportSet log_set(const Polynomial& p) {
  SupportSet s(p.nvars());
  for (const auto& [e, c] : p.terms()) s.insert(e);
  return s;
}

SupportSet minkowski_sum(const SupportSet& a, const SupportSet& b) {
  if (a.nvars() != b.nvars())
    throw_dimension("Minkowski sum of sets with different nvars");
  SupportSet out(a.nvars());
  for (const auto& u : a.points())
    for (const auto& v : b.points()) out.insert(vec_add(u, v));
  return out;
}

namespace {

// v in conv(others)? Exact feasibility of v = sum lambda_i s_i,
// sum lambda_i = 1, lambda >= 0.
bool in_convex_hull(const Exponents& v, const std::vector<Exponents>& others,
                    int nvars) {
  if (others.empty()) return false;
  LinearProgram lp;
  lp.num_vars = static_cast<int>(others.size());
  for (int j = 0; j < lp.num_vars; ++j) lp.nonneg_vars.insert(j);
  for (int i = 0; i < nvars; ++i) {
    LpConstraint c;
    c.rel = Relation::kEqual;
    c.rhs = v[i];
    c.row.resize(others.size());
    for (std::size_t j = 0; j < others.size(); ++j) c.row[j] = others[j][i];
    lp.constraints.push_back(std::move(c));
  }
  LpConstraint sum1;
  sum1.rel = Relation::kEqual;
  sum1.rhs = 1;
  sum1.row.assign(others.size(), Rational(1));
  lp.constraints.push_back(std::move(sum1));
  return feasible_point(lp).has_value();
}

}  // namespace

SupportSet extreme_points(const SupportSet& s) {
  SupportSet out(s.nvars());
  std::vector<Exponents> pts(s.points().begin(), s.points().end());
  for (std::size_t k = 0; k < pts.size(); ++k) {
    std::vector<Exponents> others;
    others.reserve(pts.size() - 1);
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (j != k) others.push_back(pts[j]);
    if (!in_convex_hull(pts[k], others, s.nvars())) out.insert(pts[k]);
  }
  return out;
}

SupportSet newton_vertices(const Polynomial& p) {
  if (p.is_zero())
    throw_precondition("newton_vertices of the zero polynomial");
  return extreme_points(log_set(p));
}

std::vector<FaceData> newton_faces(const Polynomial& p) {
  if (p.is_zero()) throw_precondition("newton_faces of the zero polynomial");
  const int n = p.nvars();
  SupportSet support = log_set(p);
  std::vector<Exponents> verts;
  SupportSet vertex_set = newton_vertices(p);
  for (const auto& v : vertex_set.points()) verts.push_back(v);
  const std::size_t nv = verts.size();
  if (nv > 20)
    throw_precondition("face enumeration limited to at most 20 vertices");

  std::vector<Exponents> nonverts;
  for (const auto& s : support.points())
    if (std::find(verts.begin(), verts.end(), s) == verts.end())
      nonverts.push_back(s);

  std::vector<FaceData> faces;
  // candidate face = proper nonempty subset of the vertex set; certify with
  // a max-slack supporting hyperplane
  for (std::size_t mask = 1; mask + 1 < (std::size_t(1) << nv); ++mask) {
    // variables: w_1..w_n (free), c (free), t (nonneg); maximize t
    LinearProgram lp;
    lp.num_vars = n + 2;
    lp.nonneg_vars.insert(n + 1);
    lp.objective.assign(n + 2, Rational(0));
    lp.objective[n + 1] = 1;
    auto dot_row = [&](const Exponents& pt, Rational t_coeff) {
      LpConstraint c;
      c.row.assign(n + 2, Rational(0));
      for (int i = 0; i < n; ++i) c.row[i] = pt[i];
      c.row[n] = -1;
      c.row[n + 1] = t_coeff;
      c.rhs = 0;
      return c;
    };
    for (std::size_t j = 0; j < nv; ++j) {
      LpConstraint c = dot_row(verts[j], 0);
      if (mask & (std::size_t(1) << j)) {
        c.rel = Relation::kEqual;
      } else {
        c.row[n + 1] = 1;
        c.rel = Relation::kLessEq;
      }
      lp.constraints.push_back(std::move(c));
    }
    for (const auto& s : nonverts) {
      LpConstraint c = dot_row(s, 0);
      c.rel = Relation::kLessEq;
      lp.constraints.push_back(std::move(c));
    }
    LpConstraint cap;  // t <= 1 keeps the program bounded
    cap.row.assign(n + 2, Rational(0));
    cap.row[n + 1] = 1;
    cap.rel = Relation::kLessEq;
    cap.rhs = 1;
    lp.constraints.push_back(std::move(cap));

    LpOutcome res = solve(lp);
    if (res.kind != LpOutcome::Kind::kOptimal || res.value <= 0) continue;

    std::vector<Rational> w(res.point.begin(), res.point.begin() + n);
    Rational cval = res.point[n];
    // scale (w, c) to a primitive integer normal
    mpz_class lcm_den = 1;
    for (const auto& q : w)
      mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q.get_den().get_mpz_t());
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), cval.get_den().get_mpz_t());
    mpz_class gcd_num = 0;
    std::vector<mpz_class> wi(n);
    mpz_class ci;
    for (int i = 0; i < n; ++i) {
      Rational v = w[i] * Rational(lcm_den);
      wi[i] = v.get_num();
      mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), wi[i].get_mpz_t());
    }
    {
      Rational v = cval * Rational(lcm_den);
      ci = v.get_num();
      mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), ci.get_mpz_t());
    }
    if (gcd_num == 0) gcd_num = 1;
    FaceData face{std::vector<Rational>(n), Rational(ci) / Rational(gcd_num),
                  SupportSet(n)};
    for (int i = 0; i < n; ++i)
      face.normal[i] = Rational(wi[i]) / Rational(gcd_num);
    for (const auto& s : support.points()) {
      Rational dot(0);
      for (int i = 0; i < n; ++i) dot += face.normal[i] * Rational(s[i]);
      if (dot == face.value) face.members.insert(s);
    }
    faces.push_back(std::move(face));
  }

  std::sort(faces.begin(), faces.end(), [](const FaceData& a, const FaceData& b) {
    if (a.members.size() != b.members.size())
      return a.members.size() < b.members.size();
    return a.members.points() < b.members.points();
  });
  return faces;
}

SupportSet atoms(const SupportSet& s) {
  std::set<SignedVec> pts(s.points().begin(), s.points().end());
  SupportSet out(s.nvars());
  for (const auto& a : atoms_of(pts)) out.insert(a);
  return out;
}

long max_atom_count(const SupportSet& s) {
  if (s.empty()) return 0;
  const int n = s.nvars();
  SupportSet atomset = atoms(s);
  std::vector<Exponents> coins(atomset.points().begin(), atomset.points().end());
  Exponents box(n, 0);
  for (const auto& p : s.points())
    for (int i = 0; i < n; ++i) box[i] = std::max(box[i], p[i]);
  // BFS from the origin over multiset sums of atoms inside the bounding box
  std::map<Exponents, long> dist;
  std::deque<Exponents> queue;
  Exponents origin(n, 0);
  dist[origin] = 0;
  queue.push_back(origin);
  while (!queue.empty()) {
    Exponents cur = queue.front();
    queue.pop_front();
    long d = dist[cur];
    for (const auto& a : coins) {
      Exponents nxt = vec_add(cur, a);
      bool inside = true;
      for (int i = 0; i < n; ++i)
        if (nxt[i] > box[i]) { inside = false; break; }
      if (!inside || dist.count(nxt)) continue;
      dist[nxt] = d + 1;
      queue.push_back(nxt);
    }
  }
  long best = 0;
  for (const auto& p : s.points()) {
    auto it = dist.find(p);
    if (it == dist.end())
      throw_precondition("support element is not a sum of atoms");
    best = std::max(best, it->second);
  }
  return best;
}

bool bounded_ring_member(const Polynomial& f, const Polynomial& g,
                         unsigned long k) {
  if (g.is_zero()) throw_precondition("bounded_ring_member requires g != 0");
  if (!g.nonneg_coefficients().nonneg)
    throw_precondition("bounded_ring_member requires g with nonnegative coefficients");
  if (f.nvars() != g.nvars())
    throw_dimension("bounded_ring_member with mismatched nvars");
  if (f.is_zero()) return true;
  return log_set(f).subset_of(log_set(g.pow(k)));
}

long gonflage_bound(const Polynomial& f, unsigned long l) {
  if (f.is_zero()) throw_precondition("gonflage_bound requires f != 0");
  if (l < 1) throw_precondition("gonflage_bound requires l >= 1");
  if (!f.pow(l).nonneg_coefficients().nonneg)
    throw_precondition("gonflage_bound requires f^l with nonnegative coefficients");
  SupportSet support = log_set(f);
  SupportSet vertex_set = newton_vertices(f);
  long bound = 0;
  for (const auto& vertex : vertex_set.points()) {
    std::set<SignedVec> shifted;
    for (const auto& s : support.points()) shifted.insert(vec_sub(s, vertex));
    auto counts = split_atom_counts(shifted);
    for (const auto& [pt, c] : counts) {
      if (c >= kInfCount)
        throw_precondition("shifted support element is not a sum of atoms");
      bound = std::max(bound, c);
    }
  }
  return bound;
}

bool verify_gonflage(const Polynomial& f, unsigned long l, unsigned long k) {
  if (f.is_zero()) throw_precondition("verify_gonflage requires f != 0");
  if (l < 1) throw_precondition("verify_gonflage requires l >= 1");
  if (!f.pow(l).nonneg_coefficients().nonneg)
    throw_precondition("verify_gonflage requires f^l with nonnegative coefficients");
  SupportSet target = log_set(f.pow(l * k));
  SupportSet support = log_set(f);
  SupportSet vertex_set = newton_vertices(f);
  long shift = static_cast<long>(l) * static_cast<long>(k) - 1;
  for (const auto& vertex : vertex_set.points()) {
    for (const auto& s : support.points()) {
      SignedVec moved(f.nvars());
      bool nonneg = true;
      for (int i = 0; i < f.nvars(); ++i) {
        moved[i] = shift * vertex[i] + s[i];
        if (moved[i] < 0) nonneg = false;
      }
      if (!nonneg || !target.contains(moved)) return false;
    }
  }
  return true;
}

}  // namespace polycert
