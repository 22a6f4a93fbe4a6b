#include "abelscope/serialize.hpp"

#include <set>

namespace abelscope {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw InputError(std::string("missing field '") + name + "'");
  return j.at(name);
}

std::size_t count_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    throw InputError(std::string(what) + " must be a nonnegative integer");
  }
  return j.get<std::size_t>();
}

Json int_to_json(const Int& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(std::to_string(j.get<long long>()), 10);
  if (j.is_string()) {
    const Rat r = Rat::parse(j.get<std::string>());
    if (!r.is_integer()) throw InputError("expected an integer, got " + r.str());
    return r.num();
  }
  throw InputError("expected an integer");
}

}  // namespace

Json rat_to_json(const Rat& x) { return x.str(); }

Rat rat_from_json(const Json& j) {
  if (j.is_string()) return Rat::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rat(int_from_json(j));
  throw InputError("expected a rational string \"num/den\"");
}

Json matrix_to_json(const QMat& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (const auto& x : m.row(r)) row.push_back(rat_to_json(x));
    rows.push_back(std::move(row));
  }
  return rows;
}

QMat matrix_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("matrix must be an array of rows");
  std::vector<Vec> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw InputError("matrix row must be an array");
    Vec v;
    for (const auto& x : row) v.push_back(rat_from_json(x));
    rows.push_back(std::move(v));
  }
  return QMat::from_rows(rows);
}

Json weight_to_json(const Weight& w) { return Json(w.components()); }

Json algebra_to_json(const LieAlgebra& L) {
  Json j;
  j["dim"] = L.dim();
  j["rank"] = L.rank();
  j["labels"] = L.labels();
  Json weights = Json::array();
  for (const auto& w : L.weights()) weights.push_back(weight_to_json(w));
  j["weights"] = std::move(weights);
  Json brackets = Json::array();
  for (const auto& [key, v] : L.structure_constants()) {
    Json terms = Json::array();
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (!v[k].is_zero()) terms.push_back(Json::array({rat_to_json(v[k]), k}));
    }
    brackets.push_back(Json::array({key.first, key.second, std::move(terms)}));
  }
  j["brackets"] = std::move(brackets);
  return j;
}

LieAlgebra algebra_from_json(const Json& j) {
  const std::size_t dim = count_from_json(field(j, "dim"), "dim");
  const std::size_t rank = count_from_json(field(j, "rank"), "rank");

  std::vector<std::string> labels;
  if (j.contains("labels")) {
    const Json& lj = j.at("labels");
    if (!lj.is_array()) throw InputError("labels must be an array of strings");
    for (const auto& l : lj) {
      if (!l.is_string()) throw InputError("labels must be an array of strings");
      labels.push_back(l.get<std::string>());
    }
  } else {
    for (std::size_t i = 0; i < dim; ++i) labels.push_back("x" + std::to_string(i));
  }
  if (labels.size() != dim) throw InputError("labels length differs from dim");

  const Json& wj = field(j, "weights");
  if (!wj.is_array() || wj.size() != dim) throw InputError("weights must list one vector per basis element");
  std::vector<Weight> weights;
  for (const auto& w : wj) {
    if (!w.is_array() || w.size() != rank) throw InputError("each weight must be an integer array of length rank");
    std::vector<long> c;
    for (const auto& x : w) {
      if (!x.is_number_integer()) throw InputError("weight components must be integers");
      c.push_back(x.get<long>());
    }
    weights.emplace_back(std::move(c));
  }

  std::vector<BracketEntry> entries;
  const Json& bj = field(j, "brackets");
  if (!bj.is_array()) throw InputError("brackets must be an array");
  for (const auto& b : bj) {
    if (!b.is_array() || b.size() != 3 || !b[2].is_array()) {
      throw InputError("each bracket entry must be [i, j, [[coeff, k], ...]]");
    }
    BracketEntry e{count_from_json(b[0], "bracket index"), count_from_json(b[1], "bracket index"), {}};
    for (const auto& t : b[2]) {
      if (!t.is_array() || t.size() != 2) throw InputError("each bracket term must be [coeff, k]");
      e.terms.push_back({rat_from_json(t[0]), count_from_json(t[1], "bracket term index")});
    }
    entries.push_back(std::move(e));
  }
  return LieAlgebra(std::move(labels), std::move(weights), entries, rank);
}

Json wedge_vector_to_json(const LieAlgebra& L, std::size_t degree, const Vec& v) {
  const WedgeBasis basis(L.dim(), degree);
  if (v.size() != basis.size()) throw InputError("vector length differs from wedge space dimension");
  Json j = Json::object();
  for (std::size_t pos = 0; pos < v.size(); ++pos) {
    if (!v[pos].is_zero()) j[basis.label(L, pos)] = rat_to_json(v[pos]);
  }
  return j;
}

Json gamma_to_json(const GammaElt& g) {
  Json j;
  j["sl2"] = Json::array();
  for (const auto& x : g.sl2) j["sl2"].push_back(int_to_json(x));
  j["n2"] = g.n2;
  j["n3"] = g.n3;
  Json u = Json::object();
  for (std::size_t k = 0; k < kUnipotentPairs.size(); ++k) {
    const auto [a, b] = kUnipotentPairs[k];
    u[std::to_string(a) + std::to_string(b)] = rat_to_json(g.u[k]);
  }
  j["u"] = std::move(u);
  return j;
}

GammaElt gamma_from_json(const GroupParams& params, const Json& j) {
  GammaElt g;
  if (j.contains("sl2")) {
    const Json& s = j.at("sl2");
    if (!s.is_array() || s.size() != 4) throw InputError("sl2 must be [a, b, c, d]");
    for (std::size_t i = 0; i < 4; ++i) g.sl2[i] = int_from_json(s[i]);
  }
  for (const char* name : {"n2", "n3"}) {
    if (!j.contains(name)) continue;
    if (!j.at(name).is_number_integer()) throw InputError(std::string(name) + " must be an integer");
    (std::string(name) == "n2" ? g.n2 : g.n3) = j.at(name).get<long>();
  }
  if (j.contains("u")) {
    const Json& u = j.at("u");
    if (!u.is_object()) throw InputError("u must be an object keyed by \"ij\"");
    for (const auto& [key, value] : u.items()) {
      if (key.size() != 2) throw InputError("bad unipotent key '" + key + "'");
      g.u[u_index(key[0] - '0', key[1] - '0')] = rat_from_json(value);
    }
  }
  if (auto err = check_invariants(params, g)) throw InputError(*err);
  return g;
}

Json verdict_to_json(const AbelsVerdict& v) {
  Json j;
  Json c1;
  c1["pass"] = v.condition1.pass;
  if (v.condition1.offending_pair) {
    c1["offending_pair"] = Json::array(
        {weight_to_json(v.condition1.offending_pair->first), weight_to_json(v.condition1.offending_pair->second)});
  }
  j["condition1"] = std::move(c1);
  j["condition2"] = {{"pass", v.condition2.pass}, {"h2_weight0_dim", v.condition2.h2_weight0_dim}};
  j["finitely_presented"] = v.finitely_presented;
  return j;
}

Json ball_to_json(const BallGraph& b) {
  Json j;
  j["radius"] = b.radius;
  j["vertices"] = b.vertex_count;
  Json edges = Json::array();
  for (const auto& e : b.edges) edges.push_back(Json::array({e.src, e.gen, e.dst}));
  j["edges"] = std::move(edges);
  j["depths"] = b.depths;
  return j;
}

}  // namespace abelscope
