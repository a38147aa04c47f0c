#include "braidrep_tools/io.hpp"

#include <fstream>
#include <sstream>

namespace braidrep::io {

namespace {

const json& at(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <class T>
T get(const json& j, const char* key) {
  try {
    return at(j, key).get<T>();
  } catch (const json::exception& e) {
    throw InputError(std::string("bad field '") + key + "': " + e.what());
  }
}

json color_json(const std::optional<Color>& c) { return c ? to_json(*c) : json(nullptr); }

std::optional<Color> color_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return vec_from_json(j);
}

}  // namespace

json to_json(const FieldElem& x) { return x.str(); }

json to_json(const Vec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

json to_json(const Matrix& m) {
  json a = json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    a.push_back(std::move(row));
  }
  return a;
}

FieldElem scalar_from_json(const json& j) {
  if (j.is_string()) return FieldElem::parse(j.get<std::string>());
  if (j.is_number_integer()) return FieldElem(j.get<long>());
  throw InputError("scalars must be strings like \"p/q\" or \"x+y*sqrt(d)\"");
}

Vec vec_from_json(const json& j) {
  if (!j.is_array()) throw InputError("expected an array of scalars");
  Vec v;
  for (const auto& x : j) v.push_back(scalar_from_json(x));
  return v;
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw InputError("expected a matrix as an array of rows");
  size_t r = j.size(), c = r == 0 ? 0 : j[0].size();
  Matrix m(r, c);
  for (size_t i = 0; i < r; ++i) {
    if (!j[i].is_array() || j[i].size() != c) throw InputError("ragged matrix");
    for (size_t k = 0; k < c; ++k) m(i, k) = scalar_from_json(j[i][k]);
  }
  return m;
}

json to_json(const TruncSeries& s) {
  json coeffs = json::object();
  for (const auto& [w, c] : s.terms()) coeffs[s.word_str(w)] = c.str();
  return {{"alphabet", s.alphabet()}, {"degree", s.degree()}, {"coeffs", coeffs}};
}

TruncSeries series_from_json(const json& j) {
  auto alphabet = get<std::vector<std::string>>(j, "alphabet");
  int D = get<int>(j, "degree");
  TruncSeries s(alphabet, D);
  const json& c = at(j, "coeffs");
  if (!c.is_object()) throw InputError("'coeffs' must be an object");
  for (const auto& [k, v] : c.items()) {
    Word w = s.parse_word(k);
    if (static_cast<int>(w.size()) > D) throw InputError("word '" + k + "' exceeds the degree");
    s.set(w, scalar_from_json(v));
  }
  return s;
}

json to_json(const Associator& a) {
  json j = to_json(a.phi);
  j["lambda"] = a.lambda.str();
  j["even"] = a.even;
  j["solver_version"] = kSolverVersion;
  return j;
}

Associator associator_from_json(const json& j) {
  TruncSeries phi = series_from_json(j);
  if (phi.alphabet() != ab_alphabet()) throw InputError("associator series must be over {A, B}");
  return make_associator(scalar_from_json(at(j, "lambda")), phi, get<bool>(j, "even"));
}

json to_json(const SymRep& r) {
  json label = json::array();
  for (const auto& [p, m] : r.label) label.push_back({partition_str(p), m});
  json gens = json::array();
  for (const auto& g : r.gens) gens.push_back(to_json(g));
  return {{"n", r.n}, {"label", label}, {"gens", gens}, {"form", to_json(r.form)}};
}

SymRep symrep_from_json(const json& j) {
  SymRep r;
  r.n = get<int>(j, "n");
  for (const auto& g : at(j, "gens")) r.gens.push_back(matrix_from_json(g));
  r.form = vec_from_json(at(j, "form"));
  if (j.contains("label"))
    for (const auto& l : j.at("label")) {
      if (!l.is_array() || l.size() != 2) throw InputError("label entries are [partition, multiplicity]");
      r.label.push_back({parse_partition(l[0].get<std::string>()), l[1].get<int>()});
    }
  if (static_cast<int>(r.gens.size()) != r.n - 1) throw InputError("need n-1 generators");
  for (const auto& g : r.gens)
    if (g.rows() != r.form.size() || g.cols() != r.form.size()) throw InputError("generator size mismatch");
  return r;
}

json to_json(const InfRep& r) {
  json j = to_json(r.base());
  j["tau"] = to_json(r.tau());
  return j;
}

InfRep infrep_from_json(const json& j) { return InfRep(symrep_from_json(j), matrix_from_json(at(j, "tau"))); }

json to_json(const HMatrix& m) {
  json a = json::array();
  for (const auto& c : m.coeffs()) a.push_back(to_json(c));
  return a;
}

HMatrix hmatrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw InputError("an h-matrix is a nonempty array of coefficient matrices");
  std::vector<Matrix> cs;
  for (const auto& c : j) cs.push_back(matrix_from_json(c));
  return HMatrix(std::move(cs));
}

json to_json(const BraidRep& r) {
  json s = json::array();
  for (const auto& m : r.sigmas) s.push_back(to_json(m));
  json prov = {{"rep", r.provenance.rep},
               {"assoc", r.provenance.assoc},
               {"lambda", r.provenance.lambda.str()},
               {"alpha", r.provenance.alpha.str()}};
  return {{"n", r.n}, {"N", r.N()}, {"degree", r.D}, {"sigmas", s}, {"provenance", prov}};
}

BraidRep braidrep_from_json(const json& j) {
  std::vector<HMatrix> sig;
  for (const auto& m : at(j, "sigmas")) sig.push_back(hmatrix_from_json(m));
  Provenance p;
  if (j.contains("provenance")) {
    const json& q = j.at("provenance");
    p.rep = q.value("rep", "");
    p.assoc = q.value("assoc", "");
    if (q.contains("lambda")) p.lambda = scalar_from_json(q.at("lambda"));
    if (q.contains("alpha")) p.alpha = scalar_from_json(q.at("alpha"));
  }
  BraidRep r = make_braid_rep(get<int>(j, "n"), std::move(sig), p);
  if (r.D != get<int>(j, "degree")) throw InputError("degree does not match the coefficient count");
  if (r.N() != get<size_t>(j, "N")) throw InputError("N does not match the matrix size");
  return r;
}

json to_json(const VarietyPoint& p) {
  return {{"module", to_json(p.M)}, {"tau", to_json(p.tau())}, {"blocks", p.blocks}};
}

VarietyPoint point_from_json(const json& j) {
  std::vector<size_t> blocks;
  if (j.contains("blocks")) blocks = get<std::vector<size_t>>(j, "blocks");
  return make_point(symrep_from_json(at(j, "module")), matrix_from_json(at(j, "tau")), blocks);
}

json to_json(const BratteliDiagram& d) {
  json levels = json::array(), edges = json::array();
  json vcol = json::array(), zcol = json::array(), ecol = json::array();
  for (const auto& lvl : d.levels) {
    json l = json::array(), c = json::array(), z = json::array();
    for (const auto& v : lvl) {
      l.push_back({{"label", v.label}, {"dim", v.dim}, {"multiplicity", v.multiplicity}});
      c.push_back(color_json(v.color));
      z.push_back(color_json(v.z));
    }
    levels.push_back(l);
    vcol.push_back(c);
    zcol.push_back(z);
  }
  for (const auto& lvl : d.edges) {
    json l = json::array(), c = json::array();
    for (const auto& e : lvl) {
      l.push_back({e.from, e.to, e.multiplicity});
      c.push_back(color_json(e.color));
    }
    edges.push_back(l);
    ecol.push_back(c);
  }
  return {{"levels", levels}, {"edges", edges}, {"colors", {{"vertices", vcol}, {"z", zcol}, {"edges", ecol}}}};
}

BratteliDiagram diagram_from_json(const json& j) {
  BratteliDiagram d;
  for (const auto& lvl : at(j, "levels")) {
    std::vector<BratteliVertex> vs;
    for (const auto& v : lvl) {
      BratteliVertex x;
      x.label = v.value("label", "");
      x.dim = get<size_t>(v, "dim");
      x.multiplicity = v.value("multiplicity", static_cast<size_t>(1));
      vs.push_back(std::move(x));
    }
    d.levels.push_back(std::move(vs));
  }
  for (const auto& lvl : at(j, "edges")) {
    std::vector<BratteliEdge> es;
    for (const auto& e : lvl) {
      if (!e.is_array() || e.size() < 2) throw InputError("edges are [from, to, multiplicity?]");
      BratteliEdge x;
      x.from = e[0].get<size_t>();
      x.to = e[1].get<size_t>();
      if (e.size() > 2) x.multiplicity = e[2].get<size_t>();
      es.push_back(x);
    }
    d.edges.push_back(std::move(es));
  }
  if (j.contains("colors")) {
    const json& c = j.at("colors");
    auto fill_vertices = [&](const char* key, auto member) {
      if (!c.contains(key)) return;
      const json& a = c.at(key);
      for (size_t k = 0; k < a.size() && k < d.levels.size(); ++k)
        for (size_t v = 0; v < a[k].size() && v < d.levels[k].size(); ++v) d.levels[k][v].*member = color_from(a[k][v]);
    };
    fill_vertices("vertices", &BratteliVertex::color);
    fill_vertices("z", &BratteliVertex::z);
    if (c.contains("edges")) {
      const json& a = c.at("edges");
      for (size_t k = 0; k < a.size() && k < d.edges.size(); ++k)
        for (size_t e = 0; e < a[k].size() && e < d.edges[k].size(); ++e) d.edges[k][e].color = color_from(a[k][e]);
    }
  }
  auto bad = d.invariant_failures();
  if (!bad.empty()) throw InputError("invalid diagram: " + bad.front());
  return d;
}

json read_json(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw InputError("cannot open " + p.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON in " + p.string() + ": " + e.what());
  }
}

void write_atomic(const std::filesystem::path& p, const std::string& content) {
  std::filesystem::path tmp = p;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write " + tmp.string());
    out << content;
    if (!out) throw InputError("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, p);
}

void write_json(const std::filesystem::path& p, const json& j) { write_atomic(p, j.dump(1) + "\n"); }

}  // namespace braidrep::io
