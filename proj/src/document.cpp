#include "bas/document.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "bas/errors.hpp"

namespace bas {

using nlohmann::json;

namespace {

Rational field_rational(const json& j, const std::string& ctx) {
  if (!j.is_string()) throw ParseError(ctx + ": rational values must be \"p\" or \"p/q\" strings");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::exception& e) {
    throw ParseError(ctx + ": " + e.what());
  }
}

Mat field_matrix(const json& j, int rows, int cols, const std::string& ctx) {
  if (!j.is_array() || int(j.size()) != rows)
    throw ParseError(ctx + ": expected " + std::to_string(rows) + " rows");
  Mat M(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const json& row = j[i];
    if (!row.is_array() || int(row.size()) != cols)
      throw ParseError(ctx + " row " + std::to_string(i) + ": expected " + std::to_string(cols) +
                       " entries");
    for (int k = 0; k < cols; ++k)
      M(i, k) = field_rational(row[k], ctx + "[" + std::to_string(i) + "][" + std::to_string(k) + "]");
  }
  return M;
}

Mat field_metric(const json& j, int n, bool& identity_flag, const std::string& ctx) {
  if (j.is_string()) {
    if (j.get<std::string>() != "identity")
      throw ParseError(ctx + ": the only named metric is \"identity\"");
    identity_flag = true;
    return Mat::identity(n);
  }
  identity_flag = false;
  return field_matrix(j, n, n, ctx);
}

std::vector<Vec> field_rows(const json& j, int ambient, const std::string& ctx) {
  if (!j.is_array()) throw ParseError(ctx + ": expected an array of coordinate rows");
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const json& row = j[i];
    if (!row.is_array() || int(row.size()) != ambient)
      throw ParseError(ctx + " row " + std::to_string(i) + ": expected " +
                       std::to_string(ambient) + " coordinates");
    Vec v(ambient);
    for (int k = 0; k < ambient; ++k)
      v[k] = field_rational(row[k], ctx + "[" + std::to_string(i) + "][" + std::to_string(k) + "]");
    rows.push_back(v);
  }
  return rows;
}

std::vector<std::vector<Vec>> field_brackets(const json& j, const std::vector<std::string>& names,
                                             const std::string& ctx) {
  int n = int(names.size());
  auto index_of = [&](const std::string& name, const std::string& where) {
    for (int i = 0; i < n; ++i)
      if (names[i] == name) return i;
    throw ParseError(where + ": unknown basis name '" + name + "'");
  };
  std::vector<std::vector<Vec>> c(n, std::vector<Vec>(n, Vec(n)));
  if (!j.is_array()) throw ParseError(ctx + ": expected an array of {x, y, value} objects");
  for (std::size_t e = 0; e < j.size(); ++e) {
    std::string where = ctx + "[" + std::to_string(e) + "]";
    const json& ent = j[e];
    if (!ent.is_object() || !ent.contains("x") || !ent.contains("y") || !ent.contains("value"))
      throw ParseError(where + ": bracket entries need x, y and value fields");
    int x = index_of(ent["x"].get<std::string>(), where + ".x");
    int y = index_of(ent["y"].get<std::string>(), where + ".y");
    if (x >= y) throw ParseError(where + ": bracket entries must have x before y (sparse i<j form)");
    for (const auto& [name, val] : ent["value"].items()) {
      int k = index_of(name, where + ".value");
      c[x][y][k] = field_rational(val, where + ".value." + name);
      c[y][x][k] = -c[x][y][k];
    }
  }
  return c;
}

json matrix_json(const Mat& M) {
  json rows = json::array();
  for (int i = 0; i < M.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < M.cols(); ++j) row.push_back(to_string(M(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json rows_json(const std::vector<Vec>& rows) {
  json out = json::array();
  for (const Vec& v : rows) {
    json row = json::array();
    for (const auto& x : v) row.push_back(to_string(x));
    out.push_back(row);
  }
  return out;
}

json brackets_json(const std::vector<std::vector<Vec>>& c, const std::vector<std::string>& names) {
  int n = int(names.size());
  json out = json::array();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (is_zero(c[i][j])) continue;
      json value = json::object();
      for (int k = 0; k < n; ++k)
        if (c[i][j][k] != 0) value[names[k]] = to_string(c[i][j][k]);
      out.push_back({{"x", names[i]}, {"y", names[j]}, {"value", value}});
    }
  return out;
}

}  // namespace

AlgebraDocument parse_document(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid json: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("top level: expected an object");
  AlgebraDocument doc;
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw ParseError("dim: required integer field");
  doc.dim = j["dim"].get<int>();
  if (doc.dim <= 0) throw ParseError("dim: must be positive");
  if (!j.contains("basis") || !j["basis"].is_array() || int(j["basis"].size()) != doc.dim)
    throw ParseError("basis: expected " + std::to_string(doc.dim) + " names");
  for (const auto& name : j["basis"]) {
    if (!name.is_string()) throw ParseError("basis: names must be strings");
    doc.basis.push_back(name.get<std::string>());
  }
  doc.brackets = field_brackets(j.value("brackets", json::array()), doc.basis, "brackets");
  if (j.contains("isotropy")) {
    const json& iso = j["isotropy"];
    if (!iso.is_object() || !iso.contains("u") || !iso.contains("m"))
      throw ParseError("isotropy: expected an object with u and m span rows");
    AlgebraDocument::Isotropy block;
    block.u = field_rows(iso["u"], doc.dim, "isotropy.u");
    block.m = field_rows(iso["m"], doc.dim, "isotropy.m");
    doc.isotropy = std::move(block);
  }
  int nm = doc.isotropy ? int(doc.isotropy->m.size()) : doc.dim;
  if (!j.contains("metric")) throw ParseError("metric: required field");
  doc.metric = field_metric(j["metric"], nm, doc.metric_identity, "metric");
  if (!j.contains("J")) throw ParseError("J: required field");
  doc.J = field_matrix(j["J"], nm, nm, "J");
  if (j.contains("k_nilpotent")) {
    const json& kn = j["k_nilpotent"];
    if (!kn.is_object()) throw ParseError("k_nilpotent: expected an object");
    AlgebraDocument::KNil block;
    if (!kn.contains("k_dim") || !kn["k_dim"].is_number_integer())
      throw ParseError("k_nilpotent.k_dim: required integer field");
    block.k_dim = kn["k_dim"].get<int>();
    if (!kn.contains("V_dim_complex") || !kn["V_dim_complex"].is_number_integer())
      throw ParseError("k_nilpotent.V_dim_complex: required integer field");
    block.V_dim_complex = kn["V_dim_complex"].get<int>();
    int dv = 2 * block.V_dim_complex;
    block.k_metric = field_metric(kn.value("k_metric", json("identity")), block.k_dim,
                                  block.k_metric_identity, "k_nilpotent.k_metric");
    block.V_metric = field_metric(kn.value("V_metric", json("identity")), dv,
                                  block.V_metric_identity, "k_nilpotent.V_metric");
    block.I = field_matrix(kn.contains("I") ? kn["I"] : json(), dv, dv, "k_nilpotent.I");
    if (kn.contains("k_bracket")) {
      std::vector<std::string> knames;
      for (int i = 0; i < block.k_dim; ++i) knames.push_back("z" + std::to_string(i + 1));
      block.k_bracket = field_brackets(kn["k_bracket"], knames, "k_nilpotent.k_bracket");
    }
    if (!kn.contains("reps") || !kn["reps"].is_array() || int(kn["reps"].size()) != block.k_dim)
      throw ParseError("k_nilpotent.reps: expected " + std::to_string(block.k_dim) + " matrices");
    for (int s = 0; s < block.k_dim; ++s)
      block.reps.push_back(
          field_matrix(kn["reps"][s], dv, dv, "k_nilpotent.reps[" + std::to_string(s) + "]"));
    doc.k_nilpotent = std::move(block);
  }
  return doc;
}

AlgebraDocument load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

std::string serialize_document(const AlgebraDocument& doc) {
  json j;
  j["dim"] = doc.dim;
  j["basis"] = doc.basis;
  j["brackets"] = brackets_json(doc.brackets, doc.basis);
  j["metric"] = doc.metric_identity ? json("identity") : matrix_json(doc.metric);
  j["J"] = matrix_json(doc.J);
  if (doc.isotropy) {
    j["isotropy"] = {{"u", rows_json(doc.isotropy->u)}, {"m", rows_json(doc.isotropy->m)}};
  }
  if (doc.k_nilpotent) {
    const auto& kn = *doc.k_nilpotent;
    json block;
    block["k_dim"] = kn.k_dim;
    block["V_dim_complex"] = kn.V_dim_complex;
    block["k_metric"] = kn.k_metric_identity ? json("identity") : matrix_json(kn.k_metric);
    block["V_metric"] = kn.V_metric_identity ? json("identity") : matrix_json(kn.V_metric);
    block["I"] = matrix_json(kn.I);
    if (!kn.k_bracket.empty()) {
      std::vector<std::string> knames;
      for (int i = 0; i < kn.k_dim; ++i) knames.push_back("z" + std::to_string(i + 1));
      block["k_bracket"] = brackets_json(kn.k_bracket, knames);
    }
    json reps = json::array();
    for (const Mat& A : kn.reps) reps.push_back(matrix_json(A));
    block["reps"] = reps;
    j["k_nilpotent"] = block;
  }
  return j.dump(2) + "\n";
}

LieAlgebra document_algebra(const AlgebraDocument& doc) {
  return LieAlgebra(doc.basis, doc.brackets);
}

std::optional<ReductivePair> document_pair(const AlgebraDocument& doc) {
  if (!doc.isotropy) return std::nullopt;
  LieAlgebra l = document_algebra(doc);
  Subspace u(doc.dim, doc.isotropy->u);
  Subspace m(doc.dim, doc.isotropy->m);
  return ReductivePair(std::move(l), u, m);
}

HermitianData document_hermitian(const AlgebraDocument& doc) {
  if (auto p = document_pair(doc))
    return HermitianData(Carrier::from_pair(*p), Metric(doc.metric), ComplexStructureOp(doc.J));
  return HermitianData(Carrier::from_algebra(document_algebra(doc)), Metric(doc.metric),
                       ComplexStructureOp(doc.J));
}

std::optional<KNilpotentSpec> document_k_nilpotent(const AlgebraDocument& doc) {
  if (!doc.k_nilpotent) return std::nullopt;
  const auto& kn = *doc.k_nilpotent;
  KNilpotentSpec spec;
  spec.k_dim = kn.k_dim;
  bool abelian = true;
  for (const auto& row : kn.k_bracket)
    for (const auto& v : row)
      if (!is_zero(v)) abelian = false;
  if (!abelian) spec.k_bracket = kn.k_bracket;
  spec.k_metric = kn.k_metric;
  spec.V_dim_complex = kn.V_dim_complex;
  spec.I = kn.I;
  spec.V_metric = kn.V_metric;
  spec.reps = kn.reps;
  return spec;
}

}  // namespace bas
