/* Copyright 2026 The compoz Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "compoz/cancellation.hpp"
#include "compoz/diamond.hpp"
#include "compoz/linearized.hpp"
#include "compoz/oracle.hpp"
#include "compoz/report.hpp"
#include "compoz/text_format.hpp"

namespace compoz::cli {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::string field;
  std::string f;
  std::string g;
  std::string phi;
  std::string basis;
  std::string format = "text";
  u64 seed = 20260101;
  std::string route = "all";
  int count = 1;
  std::string element;
  int degree = 0;
  int m = 0;
  int n = 0;
  int k = 0;
  int l = 0;
  std::string sign = "+";
  bool verify = false;
};

struct Session {
  const Options& opt;
  std::ostream& out;
  Rng rng;
  FieldContext base;

  bool json() const { return opt.format == "json"; }

  Json document(const std::string& kind) const {
    Json doc = make_document(kind);
    doc["field"] = format_field(base);
    doc["seed"] = opt.seed;
    return doc;
  }

  Polynomial required_poly(const std::string& text, const char* flag) const {
    if (text.empty()) throw UsageError(std::string("missing ") + flag);
    return parse_polynomial(base, text);
  }

  Polynomial irreducible_poly(const std::string& text, const char* flag) const {
    Polynomial p = required_poly(text, flag);
    if (p.degree() < 1 || !p.is_monic() || !is_irreducible(p))
      throw UsageError(std::string(flag) + " must be monic irreducible of degree >= 1");
    return p;
  }

  PhiPoly phi(Basis fallback) const {
    if (opt.phi.empty()) throw UsageError("missing --phi");
    std::optional<Basis> requested;
    if (!opt.basis.empty()) requested = parse_basis(opt.basis);
    std::error_code ec;
    if (std::filesystem::is_regular_file(opt.phi, ec)) {
      std::ifstream in(opt.phi);
      std::stringstream buf;
      buf << in.rdbuf();
      PhiPoly p = parse_phi_document(base, buf.str());
      if (requested && *requested != p.basis()) throw UsageError("--basis contradicts the basis in " + opt.phi);
      return p;
    }
    return parse_phi_rows(base, opt.phi, requested.value_or(fallback));
  }

  void emit(const Json& doc) const { out << dump(doc); }
};

std::string describe(const CcVerdict& v) {
  if (v.holds) return "holds";
  if (!v.witness) return "fails";
  std::ostringstream os;
  os << "fails (k=" << v.witness->k << ", side=" << to_string(v.witness->side) << ", j=" << v.witness->j << ")";
  return os.str();
}

bool within_cap(u64 q, int L) {
  u64 size = 1;
  for (int i = 0; i < L; ++i) {
    size *= q;
    if (size > oracle::kDefaultCap) return false;
  }
  return true;
}

int cmd_compose(Session& s) {
  const Polynomial f = s.irreducible_poly(s.opt.f, "--f");
  const Polynomial g = s.irreducible_poly(s.opt.g, "--g");
  const PhiPoly phi = s.phi(Basis::monomial);
  const BoundDiamond d = bind_diamond(f, g, phi, s.rng);
  const Polynomial h = composed_product(d);
  const bool irreducible = is_irreducible(h);
  if (s.json()) {
    Json doc = s.document("compose");
    doc["f"] = to_json(f);
    doc["g"] = to_json(g);
    doc["phi"] = to_json(phi);
    doc["product"] = to_json(h);
    doc["degree"] = h.degree();
    doc["irreducible"] = irreducible;
    s.emit(doc);
  } else {
    s.out << "product: " << format_polynomial(h) << "\n"
          << "pretty: " << pretty_polynomial(h) << "\n"
          << "degree: " << h.degree() << "\n"
          << "irreducible: " << (irreducible ? "yes" : "no") << "\n";
  }
  return kOk;
}

int cmd_check_cc(Session& s, std::ostream& err) {
  const Polynomial f = s.irreducible_poly(s.opt.f, "--f");
  const Polynomial g = s.irreducible_poly(s.opt.g, "--g");
  const PhiPoly phi = s.phi(Basis::monomial);
  const BoundDiamond d = bind_diamond(f, g, phi, s.rng);
  const bool coprime_monomial = std::gcd(d.m(), d.n()) == 1 && phi.basis() == Basis::monomial;

  std::vector<std::string> routes;
  if (s.opt.route == "all") {
    routes = {"direct", "oracle"};
    if (coprime_monomial) routes.insert(routes.end(), {"alg1", "matrix"});
    if (within_cap(phi.context().base_order(), d.orbits().L)) routes.push_back("exhaustive");
  } else {
    routes = {s.opt.route};
    if ((s.opt.route == "alg1" || s.opt.route == "matrix") && !coprime_monomial)
      throw UsageError("route " + s.opt.route + " needs coprime degrees and a monomial phi");
  }

  std::map<std::string, CcVerdict> verdicts;
  for (const auto& r : routes) {
    if (r == "direct") verdicts[r] = cc_direct(d);
    if (r == "oracle") verdicts[r] = cc_oracle(d);
    if (r == "alg1") verdicts[r] = cc_algorithm1(f, g, phi);
    if (r == "matrix") verdicts[r] = matrix_cc_test(f, g, phi);
    if (r == "exhaustive") verdicts[r] = CcVerdict{oracle::exhaustive_cc(phi, d.alpha(0), d.beta(0)), std::nullopt, Route::exhaustive};
  }
  const bool holds = verdicts.begin()->second.holds;
  const bool agree = std::all_of(verdicts.begin(), verdicts.end(), [&](const auto& kv) { return kv.second.holds == holds; });

  if (s.json()) {
    Json doc = s.document("check_cc");
    Json jr = Json::object();
    for (const auto& [name, v] : verdicts) jr[name] = to_json(v);
    doc["routes"] = jr;
    doc["agree"] = agree;
    doc["holds"] = holds;
    s.emit(doc);
  } else {
    for (const auto& r : routes) s.out << r << ": " << describe(verdicts[r]) << "\n";
    s.out << "verdict: " << (!agree ? "disagreement" : holds ? "holds" : "fails") << "\n";
  }
  if (!agree) {
    err << "error: cancellation routes disagree\n";
    return kPropertyFails;
  }
  return holds ? kOk : kPropertyFails;
}

int cmd_factor(Session& s, std::ostream& err) {
  const Polynomial f = s.irreducible_poly(s.opt.f, "--f");
  const Polynomial g = s.irreducible_poly(s.opt.g, "--g");
  const PhiPoly phi = s.phi(Basis::monomial);
  const BoundDiamond d = bind_diamond(f, g, phi, s.rng);
  const FactorReport report = factor_report(d);
  std::optional<bool> verified;
  if (s.opt.verify) verified = oracle::naive_factor(composed_product(d)) == report.factors();

  if (s.json()) {
    Json doc = s.document("factor_report");
    doc["report"] = to_json(report);
    doc["product"] = to_json(report.reconstruct());
    if (verified) doc["verified"] = *verified;
    s.emit(doc);
  } else {
    s.out << "product: " << format_polynomial(report.reconstruct()) << "\n";
    for (const auto& [h, mult] : report.factors())
      s.out << "factor: " << format_polynomial(h) << " degree " << h.degree() << " multiplicity " << mult << "\n";
    s.out << "cancellation: " << (report.cc_holds ? "holds" : "fails") << "\n";
    if (verified) s.out << "verified: " << (*verified ? "yes" : "no") << "\n";
  }
  if (verified && !*verified) {
    err << "error: factor report differs from trial-division factorization\n";
    return kPropertyFails;
  }
  return kOk;
}

int cmd_sample_phi(Session& s) {
  const Polynomial f = s.irreducible_poly(s.opt.f, "--f");
  const Polynomial g = s.irreducible_poly(s.opt.g, "--g");
  if (std::gcd(f.degree(), g.degree()) != 1) throw UsageError("sample-phi needs coprime degrees");
  if (s.opt.count < 0) throw UsageError("--count must be non-negative");
  const auto phis = algorithm2_sample(f, g, s.opt.count, s.rng);
  if (s.json()) {
    Json doc = s.document("sample_phi");
    Json list = Json::array();
    for (const auto& p : phis) list.push_back(to_json(p));
    doc["phis"] = list;
    s.emit(doc);
  } else {
    for (std::size_t i = 0; i < phis.size(); ++i) s.out << (i ? "\n" : "") << format_phi_document(phis[i]);
  }
  return kOk;
}

int cmd_normal(Session& s) {
  Polynomial modulus(s.base);
  if (!s.opt.f.empty()) {
    modulus = s.irreducible_poly(s.opt.f, "--f");
  } else {
    if (s.opt.degree < 1) throw UsageError("normal needs --f or --degree >= 1");
    modulus = random_irreducible(s.base, s.opt.degree, s.rng);
  }
  const FieldContext ext = extension_field(modulus);
  const bool sample = s.opt.element.empty();
  FieldElement x = sample ? random_normal_element(ext, s.rng)
                          : evaluate_embedded(parse_polynomial(s.base, s.opt.element), ext.generator());
  const bool normal = is_normal(x);
  const Polynomial coords(s.base, ext.base_coordinates(x));
  if (s.json()) {
    Json doc = s.document("normal");
    doc["modulus"] = to_json(modulus);
    doc["element"] = to_json(coords);
    doc["normal"] = normal;
    doc["sampled"] = sample;
    s.emit(doc);
  } else {
    s.out << "modulus: " << format_polynomial(modulus) << "\n"
          << "element: " << format_polynomial(coords) << "\n"
          << "normal: " << (normal ? "yes" : "no") << "\n";
  }
  return normal ? kOk : kPropertyFails;
}

// Normality of phi(alpha, beta) for a seeded random normal pair.
bool sampled_normality(const PhiPoly& phi, Rng& rng) {
  const FieldContext ext = random_extension(phi.context(), phi.m() * phi.n(), rng);
  const auto alpha = random_normal_element(ext, phi.m(), rng);
  const auto beta = random_normal_element(ext, phi.n(), rng);
  return is_normal(phi.evaluate(alpha, beta));
}

int cmd_staircase(Session& s, std::ostream& err) {
  const PhiPoly phi = s.phi(Basis::linearized);
  const StaircasePoly st = staircase(phi);
  const bool normal = staircase_normal_test(phi);
  std::optional<bool> sampled;
  if (s.opt.verify) sampled = sampled_normality(phi, s.rng);
  if (s.json()) {
    Json doc = s.document("staircase");
    doc["phi"] = to_json(phi);
    doc["staircase"] = to_json(st.e);
    doc["normal"] = normal;
    if (sampled) doc["sampled_normal"] = *sampled;
    s.emit(doc);
  } else {
    s.out << "staircase: " << format_polynomial(st.e) << "\n"
          << "normal: " << (normal ? "yes" : "no") << "\n";
    if (sampled) s.out << "sampled: " << (*sampled ? "yes" : "no") << "\n";
  }
  if (sampled && *sampled != normal) {
    err << "error: sampled pair contradicts the staircase test\n";
    return kPropertyFails;
  }
  return normal ? kOk : kPropertyFails;
}

int cmd_twisted(Session& s, std::ostream& err) {
  if (s.opt.m < 1 || s.opt.n < 1 || std::gcd(s.opt.m, s.opt.n) != 1) throw UsageError("twisted needs coprime --m, --n >= 1");
  if (s.opt.k < 0 || s.opt.l < 0) throw UsageError("--k and --l must be non-negative");
  Sign sign;
  if (s.opt.sign == "+" || s.opt.sign == "plus") {
    sign = Sign::plus;
  } else if (s.opt.sign == "-" || s.opt.sign == "minus") {
    sign = Sign::minus;
  } else {
    throw UsageError("--sign must be + or -");
  }
  const TwistedParams t{s.base.base_order(), s.opt.m, s.opt.n, s.opt.k, s.opt.l, sign};
  const bool normal = twisted_normal_predicate(t);
  std::optional<bool> sampled;
  if (s.opt.verify) sampled = sampled_normality(twisted_phi(t, s.base), s.rng);
  if (s.json()) {
    Json doc = s.document("twisted");
    doc["params"] = Json{{"q", t.q}, {"m", t.m}, {"n", t.n}, {"k", t.k}, {"l", t.l}, {"sign", sign == Sign::plus ? "+" : "-"}};
    doc["normal"] = normal;
    if (sampled) doc["sampled_normal"] = *sampled;
    s.emit(doc);
  } else {
    s.out << "normal: " << (normal ? "yes" : "no") << "\n";
    if (sampled) s.out << "sampled: " << (*sampled ? "yes" : "no") << "\n";
  }
  if (sampled && *sampled != normal) {
    err << "error: sampled pair contradicts the predicate\n";
    return kPropertyFails;
  }
  return normal ? kOk : kPropertyFails;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Composed products and conjugate cancellation over finite fields", "compoz"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--q", opt.field, "Field F_q: p or p^e:modulus");
  app.add_option("--f", opt.f, "Left polynomial, ascending coefficients");
  app.add_option("--g", opt.g, "Right polynomial, ascending coefficients");
  app.add_option("--phi", opt.phi, "Coefficient matrix: document path or inline rows 'a,b;c,d'");
  app.add_option("--basis", opt.basis, "monomial or linearized");
  app.add_option("--seed", opt.seed, "Random seed")->capture_default_str();
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  auto* compose = app.add_subcommand("compose", "Composed product of f and g");
  auto* check = app.add_subcommand("check-cc", "Decide conjugate cancellation");
  check->add_option("--route", opt.route, "Route")
      ->check(CLI::IsMember({"direct", "oracle", "alg1", "matrix", "all"}))
      ->capture_default_str();
  auto* factor = app.add_subcommand("factor", "Factor report of the composed product");
  factor->add_flag("--verify", opt.verify, "Compare with trial-division factorization");
  auto* sample = app.add_subcommand("sample-phi", "Random coefficient matrices with cancellation");
  sample->add_option("--count", opt.count, "Number of samples")->capture_default_str();
  auto* normal = app.add_subcommand("normal", "Test or sample a normal element");
  normal->add_option("--element", opt.element, "Coefficients in the power basis of F_q[x]/(f)");
  normal->add_option("--degree", opt.degree, "Extension degree when --f is absent");
  auto* stair = app.add_subcommand("staircase", "Staircase normality test for a linearized phi");
  stair->add_flag("--verify", opt.verify, "Also evaluate on a random normal pair");
  auto* twisted = app.add_subcommand("twisted", "Normality of the twisted product");
  twisted->add_option("--m", opt.m, "Degree of alpha")->required();
  twisted->add_option("--n", opt.n, "Degree of beta")->required();
  twisted->add_option("--k", opt.k, "Left twist")->capture_default_str();
  twisted->add_option("--l", opt.l, "Right twist")->capture_default_str();
  twisted->add_option("--sign", opt.sign, "+ or -")->capture_default_str();
  twisted->add_flag("--verify", opt.verify, "Also evaluate on a random normal pair");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (opt.field.empty()) throw UsageError("missing --q");
    Session s{opt, out, Rng(opt.seed), parse_field(opt.field)};
    if (*compose) return cmd_compose(s);
    if (*check) return cmd_check_cc(s, err);
    if (*factor) return cmd_factor(s, err);
    if (*sample) return cmd_sample_phi(s);
    if (*normal) return cmd_normal(s);
    if (*stair) return cmd_staircase(s, err);
    if (*twisted) return cmd_twisted(s, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace compoz::cli
