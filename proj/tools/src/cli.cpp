#include "braidrep_tools/cli.hpp"

#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "braidrep/constructions.hpp"
#include "braidrep_tools/io.hpp"

namespace braidrep::cli {

namespace {

using io::json;

struct Check {
  std::string name;
  bool ok = true;
  std::string residual;  // "0" when ok, otherwise where it fails
};

struct Report {
  std::string command;
  std::vector<Check> checks;
  json info = json::object();

  void add(std::string name, bool ok, std::string where = "nonzero") {
    checks.push_back({std::move(name), ok, ok ? "0" : std::move(where)});
  }
  void add(std::string name, const std::vector<std::string>& failures) {
    if (failures.empty())
      add(std::move(name), true);
    else
      add(std::move(name), false, failures.front() + (failures.size() > 1 ? " (+" + std::to_string(failures.size() - 1) + " more)" : ""));
  }
  bool ok() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
};

// Scalars outside the declared field are rejected.
struct FieldDecl {
  long radicand = 0;  // 0 means Q

  static FieldDecl parse(const std::string& s) {
    if (s == "q") return {};
    const std::string pre = "q-sqrt:";
    if (s.rfind(pre, 0) == 0) {
      long d = 0;
      try {
        d = std::stol(s.substr(pre.size()));
      } catch (const std::exception&) {
        throw InputError("bad field declaration '" + s + "'");
      }
      if (d == 0 || d == 1) throw InputError("radicand must not be 0 or 1");
      return {d};
    }
    throw InputError("field must be q or q-sqrt:<d>");
  }
  std::string str() const { return radicand == 0 ? "q" : "q-sqrt:" + std::to_string(radicand); }

  void check(const FieldElem& x) const {
    if (x.is_rational()) return;
    if (radicand == 0) throw InputError("scalar " + x.str() + " is not rational; declare --field q-sqrt:" + std::to_string(x.radicand()));
    if (x.radicand() != radicand) throw InputError("scalar " + x.str() + " lies outside the declared field " + str());
  }
  void check(const Vec& v) const {
    for (const auto& x : v) check(x);
  }
  void check(const Matrix& m) const { check(m.data()); }
  void check(const SymRep& r) const {
    for (const auto& g : r.gens) check(g);
    check(r.form);
  }
  void check(const InfRep& r) const {
    check(r.base());
    check(r.tau());
  }
  void check(const TruncSeries& s) const {
    for (const auto& t : s.terms()) check(t.second);
  }
  void check(const BraidRep& R) const {
    for (const auto& s : R.sigmas)
      for (const auto& c : s.coeffs()) check(c);
  }
};

struct Globals {
  std::string format = "text";
  uint64_t seed = 1;
  int degree = -1;  // -1: command default
  std::string field = "q";
  std::string out;
  FieldDecl decl;

  int degree_or(int d) const { return degree < 0 ? d : degree; }
};

std::string fnv_id(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream o;
  o << std::hex << h;
  return o.str();
}

std::string where(const Matrix& m) {
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return "entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " + m(i, j).str();
  return "0";
}

std::string where(const HMatrix& m) {
  for (int k = 0; k <= m.degree(); ++k)
    if (!m.coeff(k).is_zero()) return "h^" + std::to_string(k) + " " + where(m.coeff(k));
  return "0";
}

void add_residuals(Report& rep, const std::vector<Residual>& rs) {
  for (const auto& r : rs) rep.add(r.name, r.zero(), where(r.value));
}

void add_residuals(Report& rep, const std::vector<HResidual>& rs) {
  for (const auto& r : rs) rep.add(r.name, r.zero(), where(r.value));
}

void add_series(Report& rep, const std::string& name, const TruncSeries& s) {
  auto ts = s.terms();
  rep.add(name, ts.empty(), ts.empty() ? "0" : "coefficient of '" + s.word_str(ts.front().first) + "' = " + ts.front().second.str());
}

void add_coords(Report& rep, const std::string& name, const std::vector<Vec>& per_degree) {
  for (size_t d = 0; d < per_degree.size(); ++d)
    for (size_t k = 0; k < per_degree[d].size(); ++k)
      if (!per_degree[d][k].is_zero()) {
        rep.add(name, false, "degree " + std::to_string(d) + " coordinate " + std::to_string(k));
        return;
      }
  rep.add(name, true);
}

void add_associator_report(Report& rep, const AssociatorReport& a) {
  std::vector<std::string> g;
  for (const auto& d : a.grouplike) g.push_back("shuffle defect at degree " + std::to_string(d.u.size() + d.v.size()));
  rep.add("grouplike", g);
  add_series(rep, "inverse", a.inverse);
  add_series(rep, "hexagon", a.hexagon);
  add_coords(rep, "pentagon", a.pentagon);
  add_coords(rep, "central_shift", a.central_shift);
}

void add_flags(Report& rep, const InfRep& r) {
  QuotientFlags f = quotient_flags(r);
  rep.info["quotient_flags"] = {{"center_kills", f.center_kills},
                                {"hurwitz", f.hurwitz},
                                {"z_times_sn", f.z_times_sn},
                                {"enhanced_sym", f.enhanced_sym}};
  size_t span = linear_independence_dim(r);
  rep.info["t_span_dim"] = span;
  int n = r.n();
  if (!f.center_kills && !f.hurwitz && !f.enhanced_sym)
    rep.add("t_ij_linearly_independent", span == static_cast<size_t>(n * (n - 1) / 2),
            "span dimension " + std::to_string(span));
}

FieldElem scalar(const std::string& s, const FieldDecl& decl) {
  FieldElem x = FieldElem::parse(s);
  decl.check(x);
  return x;
}

// k=v pairs; a piece without '=' continues the previous value, so partition=3,1 survives
FamilyParams parse_params(const std::string& s) {
  FamilyParams p;
  std::stringstream ss(s);
  std::string tok, last;
  while (std::getline(ss, tok, ',')) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) {
      if (last.empty()) throw InputError("parameters are k=v pairs");
      p[last] += "," + tok;
    } else {
      last = tok.substr(0, eq);
      p[last] = tok.substr(eq + 1);
    }
  }
  return p;
}

// a SymRep from a file, or an irreducible one from a partition like 2,1
SymRep module_arg(const std::string& s, const FieldDecl& decl) {
  if (s.size() > 5 && s.substr(s.size() - 5) == ".json") {
    SymRep r = io::symrep_from_json(io::read_json(s));
    decl.check(r);
    return r;
  }
  return irrep(parse_partition(s));
}

InfRep load_infrep(const std::string& path, const FieldDecl& decl) {
  InfRep r = io::infrep_from_json(io::read_json(path));
  decl.check(r);
  return r;
}

InfRep validated(const std::string& path, const FieldDecl& decl) {
  InfRep r = load_infrep(path, decl);
  auto f = validate(r).failures();
  if (!f.empty()) throw InputError(path + " is not a valid infinitesimal representation: " + f.front());
  return r;
}

Associator load_assoc(const std::string& path, const FieldDecl& decl) {
  Associator a = io::associator_from_json(io::read_json(path));
  decl.check(a.phi);
  decl.check(a.lambda);
  return a;
}

BraidRep load_braid(const std::string& path, const FieldDecl& decl) {
  BraidRep R = io::braidrep_from_json(io::read_json(path));
  decl.check(R);
  return R;
}

void write_out(const Globals& g, Report& rep, const json& artifact) {
  if (g.out.empty()) return;
  io::write_json(g.out, artifact);
  rep.info["written"] = g.out;
}

void lift_checks(Report& rep, const BraidRep& R, const InfRep& r) {
  rep.add("braid_relations", braid_failures(R));
  add_residuals(rep, delta_identity(R, r));
  add_residuals(rep, gamma_identity(R, r));
  add_residuals(rep, first_order_checks(R, r));
}

void unitary_check(Report& rep, const BraidRep& R, const InfRep& r, const Matrix& beta) {
  FormReport f = form_type(r, beta);
  rep.info["form_type"] = to_string(f.type);
  if (!admits(f, FormType::unitary)) {
    // a skew product form carries no unitary structure; report instead of failing
    if (f.skew && f.sn_isometric && f.tau_selfadjoint) {
      rep.info["unitary"] = "not applicable: invariant form is skew";
      return;
    }
    rep.add("unitary_form", false, "form type " + to_string(f.type));
    return;
  }
  auto rs = isometry_check(R, r, beta, FormType::unitary);
  bool ok = all_zero(rs);
  std::string w = "0";
  for (const auto& x : rs)
    if (!x.zero()) {
      w = x.name + " " + where(x.value);
      break;
    }
  rep.add("unitary_isometry", ok, w);
}

Matrix diag_form(const InfRep& r) { return Matrix::diag(r.base().form); }

json diagram_info(const BratteliDiagram& d) {
  json lv = json::array();
  for (const auto& level : d.levels) {
    json l = json::array();
    for (const auto& v : level) {
      json x = {{"label", v.label}, {"dim", v.dim}};
      if (v.color) x["T"] = io::to_json(*v.color);
      l.push_back(x);
    }
    lv.push_back(l);
  }
  return lv;
}

std::vector<Color> level_colors(const BratteliDiagram& d, int level, bool z) {
  std::vector<Color> out;
  for (const auto& v : d.levels.at(level - 1)) {
    const auto& c = z ? v.z : v.color;
    if (!c) throw InputError("level " + std::to_string(level) + " carries no colors");
    out.push_back(*c);
  }
  return out;
}

// ---- command bodies ----

struct Opts {
  // assoc
  std::string lambda = "1";
  bool even = true;
  std::string file;
  // rep
  std::string rep, rep2, assoc, partition, alpha = "0", beta = "1", tau, module, point, kind = "hecke";
  int n = 3;
  bool all = false;
  // variety
  std::string family, params, b, c;
  // examples
  std::string a_s = "2", b_s = "3", c_s = "5", alg = "so3", from = "burau4";
  int k = 1, dbl = 0;
  // bratteli
  std::string diagram, level2, lift;
  int level = 2;
};

void assoc_solve(const Globals& g, const Opts& o, Report& rep) {
  Rational lam = parse_rational(o.lambda);
  int D = g.degree_or(4);
  Associator a = solve(lam, D, o.even);
  rep.info["degree"] = D;
  rep.info["even"] = o.even;
  rep.info["coeff_AB"] = a.phi.coeff("A.B").str();
  rep.info["coeff_BA"] = a.phi.coeff("B.A").str();
  add_associator_report(rep, verify(a, D));
  write_out(g, rep, io::to_json(a));
}

void assoc_verify(const Globals& g, const Opts& o, Report& rep) {
  Associator a = load_assoc(o.file, g.decl);
  int D = g.degree_or(a.D);
  if (D > a.D) throw InputError("cannot verify beyond the associator's degree " + std::to_string(a.D));
  rep.info["degree"] = D;
  add_associator_report(rep, verify(a, D));
}

InfRep make_rep(const Globals& g, const Opts& o) {
  if (o.kind == "hecke") {
    if (o.partition.empty()) throw InputError("--partition is required");
    return hecke_rep(parse_partition(o.partition), scalar(o.alpha, g.decl), scalar(o.beta, g.decl));
  }
  if (o.kind == "burau") return burau_rep(o.n);
  if (o.kind == "trivial") return InfRep(trivial_rep(o.n), Matrix::identity(1));
  if (o.kind == "family") {
    VarietyPoint p = family_catalog(o.family, parse_params(o.params));
    g.decl.check(p.rep);
    return p.rep;
  }
  throw InputError("unknown --kind '" + o.kind + "'");
}

void rep_make(const Globals& g, const Opts& o, Report& rep) {
  InfRep r = make_rep(g, o);
  add_residuals(rep, validate(r).relations);
  rep.add("validate", validate(r).failures());
  rep.info["n"] = r.n();
  rep.info["dim"] = r.dim();
  write_out(g, rep, io::to_json(r));
}

void rep_validate(const Globals& g, const Opts& o, Report& rep) {
  InfRep r = load_infrep(o.file, g.decl);
  ValidationReport v = validate(r);
  if (!v.in_commutant) {
    for (const auto& x : v.commutant)
      if (!x.zero()) throw InputError("tau leaves the commutant: " + x.name + " at " + where(x.value));
  }
  add_residuals(rep, v.c_residuals);
  add_residuals(rep, v.relations);
  rep.info["essentially_pure"] = is_essentially_pure(r);
  add_flags(rep, r);
}

void rep_lift(const Globals& g, const Opts& o, Report& rep) {
  InfRep r = validated(o.rep, g.decl);
  Associator a = load_assoc(o.assoc, g.decl);
  int D = g.degree_or(a.D);
  if (D > a.D) throw InputError("lift degree exceeds the associator's degree");
  BraidRep R = lift(r, a, D);
  R.provenance.rep = fnv_id(io::to_json(r).dump());
  R.provenance.assoc = fnv_id(io::to_json(a).dump());
  rep.add("braid_relations", braid_failures(R));
  rep.info["N"] = R.N();
  rep.info["degree"] = R.D;
  write_out(g, rep, io::to_json(R));
}

void rep_check(const Globals& g, const Opts& o, Report& rep) {
  BraidRep R = load_braid(o.file, g.decl);
  rep.add("braid_relations", braid_failures(R));
  if (!o.all) return;
  if (o.rep.empty()) throw InputError("--all needs --rep with the infinitesimal representation");
  InfRep r = validated(o.rep, g.decl);
  if (r.n() != R.n || r.dim() != R.N()) throw InputError("--rep does not match the braid representation");
  add_residuals(rep, delta_identity(R, r));
  add_residuals(rep, gamma_identity(R, r));
  add_residuals(rep, first_order_checks(R, r));
}

void rep_hom(const Globals& g, const Opts& o, Report& rep) {
  InfRep r1 = validated(o.rep, g.decl), r2 = validated(o.rep2, g.decl);
  Associator a = load_assoc(o.assoc, g.decl);
  int D = g.degree_or(a.D);
  BraidRep R1 = lift(r1, a, D), R2 = lift(r2, a, D);
  HomSpaceResult h = hom_space(R1, R2, r1, r2);
  rep.info["hom_infinitesimal"] = h.hom_inf;
  rep.info["hom_symmetric"] = h.hom_sym;
  rep.info["truncated_dim"] = h.truncated_dim;
  rep.info["lifted_dim"] = h.lifted_dim;
  rep.add("hom_free_of_rank", h.free_of_rank(),
          "lifted " + std::to_string(h.lifted_dim) + " vs D*hom " + std::to_string(D * h.hom_inf));
}

void rep_irr(const Globals& g, const Opts& o, Report& rep) {
  InfRep r = validated(o.rep, g.decl);
  BraidRep R;
  if (!o.file.empty()) {
    R = load_braid(o.file, g.decl);
  } else {
    Associator a = load_assoc(o.assoc, g.decl);
    R = lift(r, a, g.degree_or(a.D));
  }
  IrreducibilityResult ir = abs_irreducible(R, r);
  rep.info["abs_irreducible"] = ir.lifted;
  rep.add("irreducibility_agrees", ir.agree(), "lifted " + std::to_string(ir.lifted) + ", infinitesimal " + std::to_string(ir.infinitesimal));
}

void variety_verify(const Globals& g, const Opts& o, Report& rep) {
  SymRep M = module_arg(o.module, g.decl);
  Matrix tau = io::matrix_from_json(io::read_json(o.tau));
  g.decl.check(tau);
  PointCheck pc = verify_point(M, tau);
  if (!pc.in_commutant) throw InputError("tau is not in the commutant of S_{2,n-2}");
  add_residuals(rep, pc.report.c_residuals);
  if (pc.point) {
    rep.info["surjective"] = is_surjective(*pc.point);
    rep.info["transvection_guard_applied"] = transvection_guard(*pc.point);
    write_out(g, rep, io::to_json(*pc.point));
  }
}

void variety_family(const Globals& g, const Opts& o, Report& rep) {
  VarietyPoint p = family_catalog(o.family, parse_params(o.params));
  g.decl.check(p.rep);
  ValidationReport v = validate(p.rep);
  add_residuals(rep, v.c_residuals);
  rep.info["dim"] = p.rep.dim();
  rep.info["surjective"] = is_surjective(p);
  write_out(g, rep, io::to_json(p));
}

void variety_extend(const Globals& g, const Opts& o, Report& rep) {
  VarietyPoint p = io::point_from_json(io::read_json(o.point));
  g.decl.check(p.rep);
  ExtensionPair e = extension_pair(p, scalar(o.lambda, g.decl));
  rep.add("upper_braid_relations", e.upper_failures);
  rep.add("lower_braid_relations", e.lower_failures);
  rep.info["upper_split"] = e.upper_split;
  rep.info["lower_split"] = e.lower_split;
  if (!g.out.empty()) {
    json j = {{"n1", e.n1}, {"n2", e.n2}, {"upper", json::array()}, {"lower", json::array()}};
    for (const auto& m : e.upper) j["upper"].push_back(io::to_json(m));
    for (const auto& m : e.lower) j["lower"].push_back(io::to_json(m));
    write_out(g, rep, j);
  }
}

void variety_guard(const Globals& g, const Opts& o, Report& rep) {
  SymRep B = module_arg(o.b, g.decl), C = module_arg(o.c, g.decl);
  if (B.n != C.n) throw InputError("modules live on different symmetric groups");
  GuardCertificate c = vsvide_guard(B, C);
  rep.info["hom_dim"] = c.hom_dim;
  rep.info["certified_empty"] = c.certified;
}

void examples_hecke(const Globals& g, const Opts& o, Report& rep) {
  if (o.partition.empty()) throw InputError("--partition is required");
  InfRep r = hecke_rep(parse_partition(o.partition), scalar(o.alpha, g.decl), scalar(o.beta, g.decl));
  rep.add("validate", validate(r).failures());
  add_flags(rep, r);
  int D = g.degree_or(3);
  Associator a = D <= 3 ? taylor3(FieldElem(1), FieldElem(0)) : solve(Rational(1), D, true);
  BraidRep R = lift(r, a, D);
  lift_checks(rep, R, r);
  unitary_check(rep, R, r, diag_form(r));
  rep.info["dim"] = r.dim();
  write_out(g, rep, io::to_json(r));
}

void examples_burau(const Globals& g, const Opts& o, Report& rep) {
  InfRep r = burau_rep(o.n);
  rep.add("validate", validate(r).failures());
  add_flags(rep, r);
  int D = g.degree_or(3);
  Associator a = D <= 3 ? taylor3(FieldElem(1), FieldElem(0)) : solve(Rational(1), D, true);
  BraidRep R = lift(r, a, D);
  lift_checks(rep, R, r);
  IrreducibilityResult ir = abs_irreducible(R, r);
  rep.add("irreducibility_agrees", ir.agree());
  rep.info["abs_irreducible"] = ir.lifted;
  write_out(g, rep, io::to_json(R));
}

void examples_cubic(const Globals& g, const Opts& o, Report& rep) {
  CubicHecke h = cubic_hecke_matrices(scalar(o.a_s, g.decl), scalar(o.b_s, g.decl), scalar(o.c_s, g.decl));
  rep.add("braid_relation", h.braid);
  rep.add("cubic_relation", h.cubic);
  rep.add("trace_matches", h.trace_ok);
  rep.add("det_matches", h.det_ok);
  rep.info["discriminant"] = h.discriminant.str();
  rep.info["semisimple"] = h.semisimple;
  rep.info["central_scalar"] = h.central_scalar;
  if (!g.out.empty()) write_out(g, rep, {{"s1", io::to_json(h.s1)}, {"s2", io::to_json(h.s2)}});
}

void examples_casimir(const Globals& g, const Opts& o, Report& rep) {
  LieAlgSpec L = lie_algebra(o.alg);
  LieModule V = o.alg == "sl2" ? sl2_irrep(o.k) : so_defining(static_cast<int>(o.alg.back() - '0'));
  CasimirRep c = casimir_rep(L, V, o.n);
  rep.add("tn_relations", c.relation_failures);
  rep.add("commutes_with_diagonal", c.commutes_diagonal);
  rep.add("total_commutes_with_diagonal", c.total_commutes);
  rep.add("tau_selfadjoint", c.selfadjoint);
  if (o.n >= 3) rep.info["tau12_tau23_commute"] = commutator(c.tau(1, 2), c.tau(2, 3)).is_zero();
  rep.info["dim"] = c.taus.empty() ? 0 : c.taus.front().second.rows();
  if (c.rep && c.form && g.degree != 0) {
    rep.add("validate", validate(*c.rep).failures());
    int D = g.degree_or(3);
    BraidRep R = lift(*c.rep, taylor3(FieldElem(1), FieldElem(0)), std::min(D, 3));
    rep.add("braid_relations", braid_failures(R));
    unitary_check(rep, R, *c.rep, *c.form);
    write_out(g, rep, io::to_json(*c.rep));
  }
}

InfRep from_arg(const std::string& s, const FieldDecl& decl) {
  if (s.rfind("burau", 0) == 0) {
    int n = 0;
    try {
      n = std::stoi(s.substr(5));
    } catch (const std::exception&) {
      throw InputError("expected burau<n>, got '" + s + "'");
    }
    return burau_rep(n);
  }
  return validated(s, decl);
}

void examples_long(const Globals& g, const Opts& o, Report& rep) {
  InfRep base = from_arg(o.from, g.decl);
  FieldElem alpha = scalar(o.alpha, g.decl);
  LongRep L;
  Matrix beta;
  if (o.dbl == 0) {
    L = artin_restriction(base);
    beta = diag_form(L.core);
  } else {
    HyperbolicDouble hd = hyperbolic_double(base, o.dbl);
    L = artin_restriction(hd.rep);
    beta = hd.form;
  }
  rep.add("long_module", long_failures(L));
  InfRep plus = long_plus(L, alpha);
  rep.add("plus_validate", validate(plus).failures());
  LongFormReport f = long_form(L, beta, alpha);
  rep.add("form_identities", f.failures());
  rep.info["dim"] = plus.dim();
  rep.info["form_det"] = f.det.str();
  rep.info["nondegenerate"] = f.nondegenerate;
  rep.info["degeneracy_predicted"] = f.degeneracy_predicted;
  rep.info["base_type"] = to_string(f.base_type);
  rep.info["plus_type"] = to_string(f.plus_type);
  write_out(g, rep, io::to_json(plus));
}

InfRep bratteli_input(const Globals& g, const Opts& o) {
  if (!o.rep.empty()) return validated(o.rep, g.decl);
  if (o.partition.empty()) throw InputError("give --rep or --partition");
  return hecke_rep(parse_partition(o.partition), scalar(o.alpha, g.decl), scalar(o.beta, g.decl));
}

void bratteli_build(const Globals& g, const Opts& o, Report& rep) {
  BratteliDiagram d = build_from_chain(bratteli_input(g, o));
  rep.add("diagram_invariants", d.invariant_failures());
  rep.info["levels"] = diagram_info(d);
  rep.info["multiplicity_free"] = d.multiplicity_free();
  write_out(g, rep, io::to_json(d));
}

void bratteli_color(const Globals& g, const Opts& o, Report& rep) {
  BratteliDiagram d = io::diagram_from_json(io::read_json(o.diagram));
  std::vector<Color> l2;
  for (const auto& c : io::read_json(o.level2)) {
    l2.push_back(io::vec_from_json(c));
    g.decl.check(l2.back());
  }
  BratteliDiagram f = formal_coloring(d, l2);
  bool natural = d.levels.size() > 1 && d.levels.back().front().color.has_value();
  if (natural) rep.add("formal_equals_natural", same_coloring(f, d));
  rep.info["levels"] = diagram_info(f);
  auto paths = path_colors(f, f.n());
  rep.info["paths"] = paths.size();
  if (!o.rep.empty()) {
    InjectivityVerdict v = injectivity_agregation(f, validated(o.rep, g.decl), g.seed);
    rep.info["injective"] = v.injective;
    rep.add("injective_implies_agregating", v.holds(), "no regular element found");
  }
  write_out(g, rep, io::to_json(f));
}

void bratteli_recover(const Globals& g, const Opts& o, Report& rep) {
  BratteliDiagram d = io::diagram_from_json(io::read_json(o.diagram));
  if (o.level < 1 || o.level > d.n()) throw InputError("--level out of range");
  auto rec = zn_recovery(d, o.level, level_colors(d, o.level, true));
  json ex = json::array();
  for (const auto& lvl : rec) {
    json l = json::array();
    for (const auto& c : lvl) l.push_back(io::to_json(c));
    ex.push_back(l);
  }
  rep.info["exponents"] = ex;
  std::vector<std::string> bad;
  for (size_t k = 0; k < rec.size(); ++k) {
    int level = o.level + static_cast<int>(k);
    for (size_t v = 0; v < rec[k].size(); ++v) {
      const auto& z = d.levels[level - 1][v].z;
      if (z && *z != rec[k][v]) bad.push_back("level " + std::to_string(level) + " vertex " + std::to_string(v));
    }
  }
  rep.add("recovery_matches_colors", bad);
  if (!o.lift.empty()) {
    BraidRep R = load_braid(o.lift, g.decl);
    if (d.levels.back().size() != 1) throw InputError("log-det comparison needs an irreducible sink");
    const Color& top = rec.back().front();
    if (top.size() != 1) throw InputError("log-det comparison needs one-coordinate colors");
    FieldElem predicted = R.provenance.lambda * FieldElem(static_cast<long>(R.N())) * top[0];
    FieldElem actual = log_det_linear(R);
    rep.info["log_det_linear"] = actual.str();
    rep.add("zn_matches_log_det", predicted == actual, "predicted " + predicted.str() + ", got " + actual.str());
  }
}

void print(const Globals& g, const Report& rep, std::ostream& out) {
  if (g.format == "json") {
    json j = {{"command", rep.command}, {"status", rep.ok() ? "pass" : "fail"}, {"info", rep.info}};
    json cs = json::array();
    for (const auto& c : rep.checks) cs.push_back({{"name", c.name}, {"ok", c.ok}, {"residual", c.residual}});
    j["checks"] = cs;
    out << j.dump(1) << "\n";
    return;
  }
  out << rep.command << "\n";
  for (const auto& c : rep.checks) out << (c.ok ? "  PASS " : "  FAIL ") << c.name << " = " << c.residual << "\n";
  for (const auto& [k, v] : rep.info.items()) out << "  " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  out << (rep.ok() ? "all checks pass" : "some checks FAILED") << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Braid group representations from infinitesimal data", "braidrep"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  Opts o;
  app.add_option("--format", g.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", g.seed, "seed for randomized checks");
  app.add_option("--degree", g.degree, "truncation degree");
  app.add_option("--field", g.field, "q or q-sqrt:<d>");
  app.add_option("--out", g.out, "artifact path");

  std::function<void(Report&)> action;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc, auto body) {
    CLI::App* c = parent->add_subcommand(name, desc);
    c->callback([&, body, c] {
      action = [&, body, c](Report& r) {
        r.command = c->get_parent()->get_name() + " " + c->get_name();
        body(g, o, r);
      };
    });
    return c;
  };

  auto* assoc = app.add_subcommand("assoc", "Drinfeld associators")->require_subcommand(1);
  auto* s = leaf(assoc, "solve", "solve degree by degree", assoc_solve);
  s->add_option("--lambda", o.lambda);
  s->add_flag("--even,!--odd", o.even);
  leaf(assoc, "verify", "check all associator equations", assoc_verify)->add_option("file", o.file)->required();

  auto* repc = app.add_subcommand("rep", "infinitesimal and lifted representations")->require_subcommand(1);
  auto* mk = leaf(repc, "make", "build a representation", rep_make);
  mk->add_option("--kind", o.kind)->check(CLI::IsMember({"hecke", "burau", "trivial", "family"}));
  mk->add_option("--partition", o.partition);
  mk->add_option("--alpha", o.alpha);
  mk->add_option("--beta", o.beta);
  mk->add_option("--n", o.n);
  mk->add_option("--family", o.family);
  mk->add_option("--params", o.params);
  leaf(repc, "validate", "check the infinitesimal relations", rep_validate)->add_option("file", o.file)->required();
  auto* lf = leaf(repc, "lift", "lift through an associator", rep_lift);
  lf->add_option("--rep", o.rep)->required();
  lf->add_option("--assoc", o.assoc)->required();
  auto* ck = leaf(repc, "check", "check a braid representation", rep_check);
  ck->add_option("file", o.file)->required();
  ck->add_flag("--all", o.all);
  ck->add_option("--rep", o.rep);
  auto* hm = leaf(repc, "hom", "intertwiners of two lifts", rep_hom);
  hm->add_option("--rep", o.rep)->required();
  hm->add_option("--rep2", o.rep2)->required();
  hm->add_option("--assoc", o.assoc)->required();
  auto* ir = leaf(repc, "irr", "absolute irreducibility", rep_irr);
  ir->add_option("--rep", o.rep)->required();
  ir->add_option("--lifted", o.file);
  ir->add_option("--assoc", o.assoc);

  auto* var = app.add_subcommand("variety", "braided extensions of a module")->require_subcommand(1);
  auto* vv = leaf(var, "verify", "check a point", variety_verify);
  vv->add_option("--module", o.module)->required();
  vv->add_option("--tau", o.tau)->required();
  auto* vf = leaf(var, "family", "a catalogued family", variety_family);
  vf->add_option("name", o.family)->required();
  vf->add_option("--params", o.params);
  auto* ve = leaf(var, "extend", "extensions from a reducible point", variety_extend);
  ve->add_option("--point", o.point)->required();
  ve->add_option("--lambda", o.lambda);
  auto* vg = leaf(var, "guard", "emptiness certificate for V^s(B+C)", variety_guard);
  vg->add_option("--b", o.b)->required();
  vg->add_option("--c", o.c)->required();

  auto* ex = app.add_subcommand("examples", "worked constructions")->require_subcommand(1);
  auto* eh = leaf(ex, "hecke", "Hecke algebra representations", examples_hecke);
  eh->add_option("--partition", o.partition)->required();
  eh->add_option("--alpha", o.alpha);
  eh->add_option("--beta", o.beta);
  auto* ec = leaf(ex, "cubic", "cubic Hecke algebra on 3 strands", examples_cubic);
  ec->add_option("--a", o.a_s);
  ec->add_option("--b", o.b_s);
  ec->add_option("--c", o.c_s);
  auto* ecas = leaf(ex, "casimir", "Casimir representations", examples_casimir);
  ecas->add_option("--alg", o.alg)->check(CLI::IsMember({"sl2", "so3", "so4", "so5"}));
  ecas->add_option("--n", o.n);
  ecas->add_option("--k", o.k, "sl2 highest weight");
  auto* el = leaf(ex, "long", "Long induction", examples_long);
  el->add_option("--from", o.from);
  el->add_option("--alpha", o.alpha);
  el->add_option("--double", o.dbl, "+1 or -1: use the hyperbolic double V + V* of the base")->check(CLI::IsMember({-1, 1}));
  leaf(ex, "burau", "lifted Burau representation", examples_burau)->add_option("--n", o.n);

  auto* br = app.add_subcommand("bratteli", "Bratteli diagrams")->require_subcommand(1);
  auto* bb = leaf(br, "build", "diagram of the restriction chain", bratteli_build);
  bb->add_option("--rep", o.rep);
  bb->add_option("--partition", o.partition);
  bb->add_option("--alpha", o.alpha);
  bb->add_option("--beta", o.beta);
  auto* bc = leaf(br, "color", "formal barycentric coloring", bratteli_color);
  bc->add_option("--diagram", o.diagram)->required();
  bc->add_option("--level2", o.level2)->required();
  bc->add_option("--rep", o.rep);
  auto* bv = leaf(br, "recover", "z_n exponents by barycentres", bratteli_recover);
  bv->add_option("--diagram", o.diagram)->required();
  bv->add_option("--level", o.level);
  bv->add_option("--lift", o.lift);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o1, o2;
    int code = app.exit(e, o1, o2);
    out << o1.str();
    err << o2.str();
    return code == 0 ? kOk : kInput;
  }

  Report rep;
  try {
    g.decl = FieldDecl::parse(g.field);
    if (g.degree > 6) throw InputError("--degree is limited to 6");
    action(rep);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const ResidualError& e) {
    err << "residual error: " << e.what() << "\n";
    return kResidual;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "input error: " << e.what() << "\n";
    return kInput;
  }
  print(g, rep, out);
  return rep.ok() ? kOk : kResidual;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace braidrep::cli
