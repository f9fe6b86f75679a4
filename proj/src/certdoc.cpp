#include "polycert/certdoc.hpp"

#include <algorithm>
#include <cctype>
#include <json.hpp>
#include <set>
#include <sstream>

#include "polycert/error.hpp"
#include "polycert/membership.hpp"
#include "polycert/polya.hpp"
#include "polycert/polynomial.hpp"
#include "polycert/powers.hpp"
#include "polycert/simplexcert.hpp"
#include "polycert/support.hpp"
#include "polycert/valuation.hpp"

namespace polycert {

namespace {

using nlohmann::json;

constexpr const char* kSchemaVersion = "1";

// ---------- serialization ----------

json exponents_json(const Exponents& e) {
  json a = json::array();
  for (long v : e) a.push_back(v);
  return a;
}

json support_json(const SupportSet& s) {
  json a = json::array();
  for (const auto& p : s.points()) a.push_back(exponents_json(p));
  return a;
}

json weights_json(const std::vector<Rational>& w) {
  json a = json::array();
  for (const auto& q : w) a.push_back(rational_str(q));
  return a;
}

json face_json(const FaceData& f) {
  return json{{"members", support_json(f.members)},
              {"normal", weights_json(f.normal)},
              {"value", rational_str(f.value)}};
}

json row_json(const PowerCheckRow& r) {
  json j{{"k", r.k}, {"nonneg", r.nonneg}};
  if (r.witness) j["witness"] = exponents_json(*r.witness);
  return j;
}

json hypotheses_json(const HypothesesReport& h) {
  json j;
  j["value_at_ones"] = rational_str(h.value_at_ones);
  j["sign_ok"] = h.sign_ok;
  j["probe_powers"] = h.probe_powers;
  j["first_nonneg_power"] =
      h.first_nonneg_power ? json(*h.first_nonneg_power) : json(nullptr);
  json addass{{"ok", h.addass.ok}};
  if (!h.addass.ok) {
    addass["failing_face"] = face_json(*h.addass.failing_face);
    addass["failing_part"] = h.addass.failing_part->str();
  }
  j["addass"] = addass;
  if (h.definite_negative) {
    j["definite_negative"] = json{{"beta", exponents_json(h.definite_negative->beta)},
                                  {"note", h.definite_negative->note},
                                  {"vertex", exponents_json(h.definite_negative->vertex)},
                                  {"weight", weights_json(h.definite_negative->weight)}};
  } else {
    j["definite_negative"] = nullptr;
  }
  return j;
}

// ---------- document parsing ----------

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end())
    throw_parse(std::string("document is missing field \"") + key + "\"");
  return *it;
}

long int_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) throw_parse(std::string(key) + " must be an integer");
  return v.get<long>();
}

std::string str_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_string()) throw_parse(std::string(key) + " must be a string");
  return v.get<std::string>();
}

Exponents exponents_from(const json& j) {
  if (!j.is_array()) throw_parse("exponent tuple must be an array");
  Exponents e;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw_parse("exponent entries must be integers");
    e.push_back(v.get<long>());
  }
  return e;
}

std::vector<Rational> weights_from(const json& j) {
  if (!j.is_array()) throw_parse("weight vector must be an array");
  std::vector<Rational> w;
  for (const auto& v : j) {
    if (!v.is_string()) throw_parse("weights must be rational strings");
    w.push_back(parse_rational(v.get<std::string>()));
  }
  return w;
}

// ---------- text inputs ----------

std::vector<std::string> nonblank_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (!blank) out.push_back(line);
  }
  return out;
}

// one "g ; h" pair per line; every polynomial re-embedded into the common
// variable count (the largest mentioned when nvars <= 0)
IdentityData parse_identity_text(const std::string& text, int nvars) {
  std::vector<std::pair<Polynomial, Polynomial>> pairs;
  int common = nvars;
  for (const auto& line : nonblank_lines(text)) {
    auto sep = line.find(';');
    if (sep == std::string::npos)
      throw_parse("identity line without ';' separator: " + line);
    if (line.find(';', sep + 1) != std::string::npos)
      throw_parse("identity line with more than one ';': " + line);
    Polynomial g = Polynomial::parse(line.substr(0, sep), nvars);
    Polynomial h = Polynomial::parse(line.substr(sep + 1), nvars);
    common = std::max({common, g.nvars(), h.nvars()});
    pairs.emplace_back(std::move(g), std::move(h));
  }
  if (pairs.empty()) throw_parse("identity file contains no pairs");
  for (auto& [g, h] : pairs) {
    g = g.extended(common);
    h = h.extended(common);
  }
  return IdentityData(std::move(pairs));
}

int infer_common_nvars(const std::vector<std::string>& texts) {
  int n = 1;
  for (const auto& t : texts) n = std::max(n, Polynomial::parse(t).nvars());
  return n;
}

RunResult finish(int code, json doc) {
  RunResult r;
  r.code = code;
  r.document = doc.dump(2) + "\n";
  return r;
}

RunResult failure(const std::string& message) {
  RunResult r;
  r.code = 1;
  r.error = message;
  return r;
}

json envelope(const char* command, json inputs, json outcome) {
  return json{{"command", command},
              {"inputs", std::move(inputs)},
              {"outcome", std::move(outcome)},
              {"schema_version", kSchemaVersion}};
}

}  // namespace

// ---------- runners ----------

RunResult run_polya(const std::string& f_text, long max_k) {
  try {
    Polynomial f = Polynomial::parse(f_text);
    PolyaResult res = polya_exponent(f, max_k);
    json inputs{{"f", f.str()}, {"max_k", max_k}, {"nvars", f.nvars()}};
    json outcome;
    json rejected = json::array();
    for (const auto& [k, wit] : res.witnesses)
      rejected.push_back(json{{"k", k}, {"witness", exponents_json(wit)}});
    if (res.found) {
      outcome = json{{"k", res.k},
                     {"product", res.product.str()},
                     {"rejected", rejected},
                     {"status", "found"}};
    } else {
      outcome = json{{"max_k", res.max_k},
                     {"status", "exhausted"},
                     {"witnesses", rejected}};
    }
    return finish(res.found ? 0 : 2, envelope("polya", inputs, outcome));
  } catch (const std::exception& e) {
    return failure(e.what());
  }
}

RunResult run_certify(const std::string& f_text,
                      const std::string& identity_text, bool positive,
                      long max_shift, long max_k) {
  try {
    Polynomial f = Polynomial::parse(f_text);
    IdentityData id({{f, Polynomial::constant(f.nvars(), 1)}});
    if (!positive) {
      // unify variable counts between f and the identity file
      IdentityData raw = parse_identity_text(identity_text, 0);
      int n = f.nvars();
      for (const auto& [g, h] : raw.pairs)
        n = std::max({n, g.nvars(), h.nvars()});
      f = f.extended(n);
      id = parse_identity_text(identity_text, n);
    }
    if (!verify_identity(f, id))
      return failure("identity does not reproduce f exactly");
    CertifyResult res = certify_simplex(f, id, max_shift, max_k);
    json id_json = json::array();
    for (const auto& [g, h] : id.pairs)
      id_json.push_back(json::array({g.str(), h.str()}));
    json inputs{{"f", f.str()},          {"identity", id_json},
                {"max_k", max_k},        {"max_shift", max_shift},
                {"nvars", f.nvars()},    {"positive", positive}};
    json outcome;
    if (res.found) {
      outcome = json{{"P", res.cert.P.str()},
                     {"Q", res.cert.Q.str()},
                     {"k", res.cert.k},
                     {"shift", res.cert.shift},
                     {"status", "found"}};
    } else {
      outcome = json{{"status", "exhausted"}};
    }
    return finish(res.found ? 0 : 2, envelope("certify", inputs, outcome));
  } catch (const std::exception& e) {
    return failure(e.what());
  }
}

RunResult run_powers(const std::string& f_text, long max_power) {
  try {
    Polynomial f = Polynomial::parse(f_text);
    StabilizationReport rep = stabilize(f, max_power);
    HypothesesReport hyp = check_hypotheses(f, std::min<long>(max_power, 12));
    json inputs{{"f", f.str()}, {"max_power", max_power}, {"nvars", f.nvars()}};
    json outcome;
    outcome["hypotheses"] = hypotheses_json(hyp);
    int code = 2;
    switch (rep.outcome) {
      case StabilizationReport::Outcome::kStabilized: {
        json rows = json::array();
        for (const auto& r : rep.checked) rows.push_back(row_json(r));
        outcome["status"] = "stabilized";
        outcome["k0"] = rep.k0;
        outcome["pair"] = json::array({rep.pair.first, rep.pair.second});
        outcome["conductor"] = rep.conductor;
        outcome["checked"] = rows;
        outcome["minimality"] =
            rep.minimality ? row_json(*rep.minimality) : json(nullptr);
        code = 0;
        break;
      }
      case StabilizationReport::Outcome::kNoPowerFound: {
        json rows = json::array();
        for (const auto& r : rep.witnesses) rows.push_back(row_json(r));
        outcome["status"] = "no_power_found";
        outcome["max_power"] = rep.max_power;
        outcome["witnesses"] = rows;
        break;
      }
      case StabilizationReport::Outcome::kRejected:
        outcome["status"] = "rejected";
        outcome["reason"] = rep.reason;
        break;
    }
    return finish(code, envelope("powers", inputs, outcome));
  } catch (const std::exception& e) {
    return failure(e.what());
  }
}

RunResult run_member(const std::string& target_text,
                     const std::string& generators_text, long degree_bound) {
  try {
    std::vector<std::string> lines = nonblank_lines(generators_text);
    if (lines.empty()) return failure("no generators given");
    std::vector<std::string> all = lines;
    all.push_back(target_text);
    int n = infer_common_nvars(all);
    Polynomial target = Polynomial::parse(target_text, n);
    std::vector<Polynomial> gens;
    for (const auto& line : lines) gens.push_back(Polynomial::parse(line, n));
    SemiringPresentation pres(std::move(gens));
    MembershipResult res = member_at_degree(target, pres, degree_bound);
    json gens_json = json::array();
    for (const auto& g : pres.generators) gens_json.push_back(g.str());
    json inputs{{"degree", degree_bound},
                {"generators", gens_json},
                {"nvars", n},
                {"target", target.str()}};
    json outcome;
    if (res.member) {
      json wit = json::array();
      for (const auto& term : res.witness)
        wit.push_back(json{{"coefficient", rational_str(term.coefficient)},
                           {"multidegree", exponents_json(term.multidegree)}});
      outcome = json{{"status", "member"}, {"witness", wit}};
    } else {
      outcome = json{{"degree", degree_bound}, {"status", "infeasible_at"}};
    }
    return finish(res.member ? 0 : 2, envelope("member", inputs, outcome));
  } catch (const std::exception& e) {
    return failure(e.what());
  }
}

RunResult run_newton(const std::string& f_text) {
  try {
    Polynomial f = Polynomial::parse(f_text);
    SupportSet verts = newton_vertices(f);
    std::vector<FaceData> faces = newton_faces(f);
    json faces_json = json::array();
    for (const auto& face : faces) faces_json.push_back(face_json(face));
    json inputs{{"f", f.str()}, {"nvars", f.nvars()}};
    json outcome{{"faces", faces_json}, {"vertices", support_json(verts)}};
    return finish(0, envelope("newton", inputs, outcome));
  } catch (const std::exception& e) {
    return failure(e.what());
  }
}

RunResult run_initial(const std::string& f_text, const std::string& w_csv) {
  try {
    Polynomial f = Polynomial::parse(f_text);
    json inputs{{"f", f.str()}, {"nvars", f.nvars()}};
    json outcome;
    if (!w_csv.empty()) {
      std::vector<Rational> w;
      std::istringstream in(w_csv);
      std::string tok;
      while (std::getline(in, tok, ',')) w.push_back(parse_rational(tok));
      inputs["w"] = weights_json(w);
      ValuationValue v = valuation(f, w);
      outcome["valuation"] = v.infinite ? "infinity" : rational_str(v.value);
      outcome["initial_part"] = initial_part(f, w).str();
    } else {
      inputs["w"] = nullptr;
      AddassResult addass = check_addass(f);
      json parts = json::array();
      for (const auto& [face, part] : proper_initial_parts(f)) {
        json p = face_json(face);
        p["initial_part"] = part.str();
        parts.push_back(std::move(p));
      }
      outcome["addass"] = addass.ok;
      outcome["failing_part"] =
          addass.ok ? json(nullptr) : json(addass.failing_part->str());
      outcome["parts"] = parts;
    }
    return finish(0, envelope("initial", inputs, outcome));
  } catch (const std::exception& e) {
    return failure(e.what());
  }
}

RunResult run_frobenius(long l1, long l2, long k) {
  try {
    SemigroupParams params(l1, l2, k);
    long conductor = frobenius_conductor(params);
    json inputs{{"k", k}, {"l1", l1}, {"l2", l2}};
    json outcome{{"conductor", conductor}};
    return finish(0, envelope("frobenius", inputs, outcome));
  } catch (const std::exception& e) {
    return failure(e.what());
  }
}

// ---------- verification ----------

namespace {

struct Claim {
  bool ok = true;
  std::string detail = "all claims check";

  void refute(const std::string& why) {
    if (ok) {
      ok = false;
      detail = why;
    }
  }
};

void verify_polya_doc(const json& doc, Claim& claim) {
  const json& inputs = field(doc, "inputs");
  const json& outcome = field(doc, "outcome");
  int nvars = static_cast<int>(int_field(inputs, "nvars"));
  Polynomial f = Polynomial::parse(str_field(inputs, "f"), nvars);
  Polynomial s = Polynomial::variable_sum(nvars);
  std::string status = str_field(outcome, "status");
  if (status == "found") {
    long k = int_field(outcome, "k");
    Polynomial product = Polynomial::parse(str_field(outcome, "product"), nvars);
    if (product != s.pow(static_cast<unsigned long>(k)) * f)
      claim.refute("product is not (x1+...+xn)^k * f");
    else if (!product.nonneg_coefficients().nonneg)
      claim.refute("product has a negative coefficient");
    else if (k > 0 &&
             (s.pow(static_cast<unsigned long>(k - 1)) * f).nonneg_coefficients().nonneg)
      claim.refute("k is not minimal: k-1 already works");
  } else if (status == "exhausted") {
    long max_k = int_field(outcome, "max_k");
    const json& witnesses = field(outcome, "witnesses");
    if (static_cast<long>(witnesses.size()) != max_k + 1) {
      claim.refute("exhaustion witnesses do not cover 0..max_k");
      return;
    }
    Polynomial product = f;
    long expect = 0;
    for (const auto& w : witnesses) {
      long k = int_field(w, "k");
      if (k != expect++) {
        claim.refute("witness exponents are not consecutive from 0");
        return;
      }
      if (k > 0) product = product * s;
      if (product.coefficient(exponents_from(field(w, "witness"))) >= 0) {
        claim.refute("witness coefficient at k=" + std::to_string(k) +
                     " is not negative");
        return;
      }
    }
  } else {
    throw_parse("unknown polya status: " + status);
  }
}

void verify_certify_doc(const json& doc, Claim& claim) {
  const json& inputs = field(doc, "inputs");
  const json& outcome = field(doc, "outcome");
  int nvars = static_cast<int>(int_field(inputs, "nvars"));
  Polynomial f = Polynomial::parse(str_field(inputs, "f"), nvars);
  std::vector<std::pair<Polynomial, Polynomial>> pairs;
  for (const auto& gh : field(inputs, "identity")) {
    if (!gh.is_array() || gh.size() != 2)
      throw_parse("identity entries must be [g, h] pairs");
    pairs.emplace_back(Polynomial::parse(gh[0].get<std::string>(), nvars),
                       Polynomial::parse(gh[1].get<std::string>(), nvars));
  }
  IdentityData id(std::move(pairs));
  if (!verify_identity(f, id)) {
    claim.refute("identity does not reproduce f");
    return;
  }
  std::string status = str_field(outcome, "status");
  if (status == "exhausted") return;  // no certificate claims to check
  if (status != "found") throw_parse("unknown certify status: " + status);
  SimplexCertificate cert{
      Polynomial::parse(str_field(outcome, "P"), nvars),
      Polynomial::parse(str_field(outcome, "Q"), nvars),
      int_field(outcome, "k"), int_field(outcome, "shift")};
  // deterministic rebuild of the refined product from identity and shift
  std::vector<long> schedule =
      certify_shift_schedule(int_field(inputs, "max_shift"));
  if (std::find(schedule.begin(), schedule.end(), cert.shift) == schedule.end()) {
    claim.refute("shift is not on the search schedule");
    return;
  }
  Polynomial homog = assemble_homogeneous(id, cert.shift);
  Polynomial expect_p =
      Polynomial::variable_sum(nvars).pow(static_cast<unsigned long>(cert.k)) *
      homog;
  if (cert.P != expect_p) {
    claim.refute("P does not match the rebuilt product for (shift, k)");
    return;
  }
  // the search stops at the first shift whose assembly works, and equal
  // assemblies succeed at equal refinement exponents, so an earlier shift
  // with the same rebuild contradicts the recorded provenance
  for (long earlier : schedule) {
    if (earlier >= cert.shift) break;
    if (assemble_homogeneous(id, earlier) == homog) {
      claim.refute("an earlier schedule shift produces the same certificate");
      return;
    }
  }
  if (!verify_certificate(f, cert))
    claim.refute("certificate identity f = P + Q*(x1+...+xn-1) fails");
}

void verify_powers_doc(const json& doc, Claim& claim) {
  const json& inputs = field(doc, "inputs");
  const json& outcome = field(doc, "outcome");
  int nvars = static_cast<int>(int_field(inputs, "nvars"));
  Polynomial f = Polynomial::parse(str_field(inputs, "f"), nvars);
  std::string status = str_field(outcome, "status");

  const json& hyp = field(outcome, "hypotheses");
  if (parse_rational(str_field(hyp, "value_at_ones")) !=
      f.evaluate(std::vector<Rational>(nvars, Rational(1)))) {
    claim.refute("value_at_ones does not match f(1,...,1)");
    return;
  }
  const json& dn = field(hyp, "definite_negative");
  if (!dn.is_null()) {
    DefiniteNegative witness{exponents_from(field(dn, "vertex")),
                             exponents_from(field(dn, "beta")),
                             weights_from(field(dn, "weight")),
                             str_field(dn, "note")};
    if (!verify_definite_negative(f, witness)) {
      claim.refute("definite-negative witness fails its inequalities");
      return;
    }
  }

  auto verify_rows = [&](const json& rows, long from_k) -> bool {
    Polynomial cur = f.pow(static_cast<unsigned long>(from_k - 1));
    long expect = from_k;
    for (const auto& r : rows) {
      long k = int_field(r, "k");
      if (k != expect++) {
        claim.refute("power rows are not consecutive");
        return false;
      }
      cur = cur * f;
      bool nonneg = field(r, "nonneg").get<bool>();
      auto check = cur.nonneg_coefficients();
      if (nonneg != check.nonneg) {
        claim.refute("row k=" + std::to_string(k) + " misstates the sign scan");
        return false;
      }
      if (!nonneg && cur.coefficient(exponents_from(field(r, "witness"))) >= 0) {
        claim.refute("row k=" + std::to_string(k) + " has a bad witness");
        return false;
      }
    }
    return true;
  };

  if (status == "stabilized") {
    long k0 = int_field(outcome, "k0");
    long conductor = int_field(outcome, "conductor");
    const json& pair = field(outcome, "pair");
    long l1 = pair.at(0).get<long>(), l2 = pair.at(1).get<long>();
    if (l2 != l1 + 1) {
      claim.refute("pair is not consecutive");
      return;
    }
    if (frobenius_conductor(SemigroupParams(l1, l2, 1)) != conductor) {
      claim.refute("conductor does not match the pair");
      return;
    }
    const json& rows = field(outcome, "checked");
    if (static_cast<long>(rows.size()) != conductor) {
      claim.refute("checked rows do not reach the conductor");
      return;
    }
    if (!verify_rows(rows, 1)) return;
    long first_pair = 0;
    bool prev = false;
    for (const auto& r : rows) {
      long k = int_field(r, "k");
      bool nonneg = field(r, "nonneg").get<bool>();
      if (nonneg && prev && first_pair == 0) first_pair = k - 1;
      prev = nonneg;
      if (k >= k0 && !nonneg) {
        claim.refute("row at or beyond k0 is negative");
        return;
      }
    }
    if (first_pair != l1) {
      claim.refute("pair is not the first consecutive nonnegative pair");
      return;
    }
    if (k0 > 1) {
      const json& mini = field(outcome, "minimality");
      if (mini.is_null() || int_field(mini, "k") != k0 - 1 ||
          field(mini, "nonneg").get<bool>()) {
        claim.refute("minimality row missing or inconsistent");
        return;
      }
      if (field(rows.at(k0 - 2), "nonneg").get<bool>()) {
        claim.refute("k0 is not minimal against the checked rows");
        return;
      }
    }
  } else if (status == "no_power_found") {
    long max_power = int_field(outcome, "max_power");
    const json& rows = field(outcome, "witnesses");
    if (static_cast<long>(rows.size()) != max_power) {
      claim.refute("witness rows do not cover 1..max_power");
      return;
    }
    if (!verify_rows(rows, 1)) return;
    // the claim is the absence of a consecutive nonnegative pair; isolated
    // nonnegative powers are possible
    bool prev = false;
    for (const auto& r : rows) {
      bool nonneg = field(r, "nonneg").get<bool>();
      if (nonneg && prev) {
        claim.refute("rows contain a consecutive nonnegative pair");
        return;
      }
      prev = nonneg;
    }
  } else if (status == "rejected") {
    if (f.evaluate(std::vector<Rational>(nvars, Rational(1))) > 0)
      claim.refute("rejected although f(1,...,1) > 0");
  } else {
    throw_parse("unknown powers status: " + status);
  }
}

void verify_member_doc(const json& doc, Claim& claim) {
  const json& inputs = field(doc, "inputs");
  const json& outcome = field(doc, "outcome");
  int nvars = static_cast<int>(int_field(inputs, "nvars"));
  Polynomial target = Polynomial::parse(str_field(inputs, "target"), nvars);
  std::vector<Polynomial> gens;
  for (const auto& g : field(inputs, "generators"))
    gens.push_back(Polynomial::parse(g.get<std::string>(), nvars));
  SemiringPresentation pres(std::move(gens));
  std::string status = str_field(outcome, "status");
  if (status == "infeasible_at") return;  // nothing checkable without re-search
  if (status != "member") throw_parse("unknown member status: " + status);
  std::vector<WitnessTerm> witness;
  for (const auto& t : field(outcome, "witness")) {
    WitnessTerm term{parse_rational(str_field(t, "coefficient")),
                     exponents_from(field(t, "multidegree"))};
    if (term.coefficient <= 0) {
      claim.refute("witness coefficient is not positive");
      return;
    }
    witness.push_back(std::move(term));
  }
  if (!verify_membership_witness(target, pres, witness))
    claim.refute("witness does not re-expand to the target");
}

void verify_newton_doc(const json& doc, Claim& claim) {
  const json& inputs = field(doc, "inputs");
  const json& outcome = field(doc, "outcome");
  int nvars = static_cast<int>(int_field(inputs, "nvars"));
  Polynomial f = Polynomial::parse(str_field(inputs, "f"), nvars);
  SupportSet support = log_set(f);

  std::set<Exponents> singleton_members;
  for (const auto& face : field(outcome, "faces")) {
    std::vector<Rational> normal = weights_from(field(face, "normal"));
    Rational value = parse_rational(str_field(face, "value"));
    std::set<Exponents> members;
    for (const auto& m : field(face, "members"))
      members.insert(exponents_from(m));
    if (members.empty()) {
      claim.refute("face with no members");
      return;
    }
    for (const auto& p : support.points()) {
      Rational dot(0);
      for (int i = 0; i < nvars; ++i) dot += normal[i] * Rational(p[i]);
      bool inside = members.count(p) > 0;
      if (inside && dot != value) {
        claim.refute("face member off its hyperplane");
        return;
      }
      if (!inside && dot >= value) {
        claim.refute("face fails strict separation");
        return;
      }
    }
    for (const auto& m : members) {
      if (!support.contains(m)) {
        claim.refute("face member outside the support");
        return;
      }
    }
    if (members.size() == 1) singleton_members.insert(*members.begin());
  }
  std::set<Exponents> vertices;
  for (const auto& v : field(outcome, "vertices"))
    vertices.insert(exponents_from(v));
  if (support.size() == 1) {
    // a point has no proper faces; the sole support point is the vertex
    if (vertices != support.points())
      claim.refute("single-monomial vertex list is wrong");
  } else if (vertices != singleton_members) {
    claim.refute("vertex list does not match the singleton faces");
  }
}

void verify_initial_doc(const json& doc, Claim& claim) {
  const json& inputs = field(doc, "inputs");
  const json& outcome = field(doc, "outcome");
  int nvars = static_cast<int>(int_field(inputs, "nvars"));
  Polynomial f = Polynomial::parse(str_field(inputs, "f"), nvars);
  const json& w_json = field(inputs, "w");
  if (!w_json.is_null()) {
    std::vector<Rational> w = weights_from(w_json);
    ValuationValue v = valuation(f, w);
    std::string claimed = str_field(outcome, "valuation");
    if (v.infinite ? (claimed != "infinity")
                   : (claimed != rational_str(v.value))) {
      claim.refute("valuation mismatch");
      return;
    }
    if (Polynomial::parse(str_field(outcome, "initial_part"), nvars) !=
        initial_part(f, w))
      claim.refute("initial part mismatch");
    return;
  }
  for (const auto& part : field(outcome, "parts")) {
    std::vector<Rational> normal = weights_from(field(part, "normal"));
    Polynomial claimed = Polynomial::parse(str_field(part, "initial_part"), nvars);
    if (claimed != initial_part(f, normal)) {
      claim.refute("listed initial part does not match its face normal");
      return;
    }
    if (claimed == f) {
      claim.refute("listed part is not proper");
      return;
    }
  }
}

void verify_frobenius_doc(const json& doc, Claim& claim) {
  const json& inputs = field(doc, "inputs");
  const json& outcome = field(doc, "outcome");
  SemigroupParams params(int_field(inputs, "l1"), int_field(inputs, "l2"),
                         int_field(inputs, "k"));
  if (frobenius_conductor(params) != int_field(outcome, "conductor"))
    claim.refute("conductor does not match the enumeration");
}

}  // namespace

RunResult run_verify(const std::string& document_json) {
  json doc;
  try {
    doc = json::parse(document_json);
  } catch (const std::exception& e) {
    return failure(std::string("invalid JSON: ") + e.what());
  }
  try {
    if (str_field(doc, "schema_version") != kSchemaVersion)
      return failure("unsupported schema_version");
    std::string command = str_field(doc, "command");
    Claim claim;
    if (command == "polya") verify_polya_doc(doc, claim);
    else if (command == "certify") verify_certify_doc(doc, claim);
    else if (command == "powers") verify_powers_doc(doc, claim);
    else if (command == "member") verify_member_doc(doc, claim);
    else if (command == "newton") verify_newton_doc(doc, claim);
    else if (command == "initial") verify_initial_doc(doc, claim);
    else if (command == "frobenius") verify_frobenius_doc(doc, claim);
    else return failure("unknown command: " + command);
    json report{{"command", "verify"},
                {"detail", claim.detail},
                {"verified", claim.ok},
                {"verified_command", command}};
    return finish(claim.ok ? 0 : 2, report);
  } catch (const std::exception& e) {
    return failure(e.what());
  }
}

}  // namespace polycert
