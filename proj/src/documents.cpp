#include "liecheck/documents.hpp"

#include "liecheck/errors.hpp"

namespace liecheck {

Json rational_to_json(const Rational& q) { return q.get_str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  if (!j.is_string()) throw ParseError("rational must be a string \"p/q\" or an integer");
  return parse_rational(j.get<std::string>());
}

Json matrix_to_json(const MatrixQ& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

MatrixQ matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix must be a non-empty array of rows");
  std::size_t rows = j.size();
  std::size_t cols = j[0].size();
  MatrixQ m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw ParseError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational_from_json(j[r][c]);
  }
  return m;
}

Json algebra_to_json(const LieAlgebra& g) {
  Json out;
  out["dim"] = g.dim();
  out["labels"] = g.labels();
  Json brackets = Json::array();
  for (const auto& t : g.table()) {
    if (t.c == 0) continue;
    Json e;
    e["i"] = t.i + 1;
    e["j"] = t.j + 1;
    e["k"] = t.k + 1;
    e["c"] = rational_to_json(t.c);
    brackets.push_back(std::move(e));
  }
  out["brackets"] = std::move(brackets);
  return out;
}

LieAlgebra algebra_from_json(const Json& j) {
  if (!j.contains("dim")) throw ParseError("algebra document needs \"dim\"");
  std::size_t dim = j["dim"].get<std::size_t>();
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
  std::vector<BracketEntry> table;
  if (j.contains("brackets")) {
    for (const auto& e : j["brackets"]) {
      std::size_t i = e.at("i").get<std::size_t>();
      std::size_t jj = e.at("j").get<std::size_t>();
      std::size_t k = e.at("k").get<std::size_t>();
      if (i == 0 || jj == 0 || k == 0)
        throw ParseError("bracket indices are 1-based");
      table.push_back({i - 1, jj - 1, k - 1, rational_from_json(e.at("c"))});
    }
  }
  return LieAlgebra(dim, std::move(labels), std::move(table));
}

Json representation_to_json(const Representation& rho) {
  Json out;
  out["source"] = algebra_to_json(rho.source());
  out["space_dim"] = rho.space_dim();
  Json act = Json::array();
  for (const auto& a : rho.actions()) act.push_back(matrix_to_json(a));
  out["action"] = std::move(act);
  return out;
}

Representation representation_from_json(const Json& j) {
  LieAlgebra source = algebra_from_json(j.at("source"));
  std::vector<MatrixQ> action;
  for (const auto& a : j.at("action")) action.push_back(matrix_from_json(a));
  return Representation(std::move(source), std::move(action));
}

Json document_wrap(const std::string& kind, Json payload) {
  payload["kind"] = kind;
  return payload;
}

Json parse_document(const std::string& text, const std::string& expected_kind) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!j.is_object() || !j.contains("kind"))
    throw ParseError("document must be an object with a \"kind\" field");
  if (!expected_kind.empty() && j["kind"].get<std::string>() != expected_kind)
    throw ParseError("expected document kind \"" + expected_kind + "\", got \"" +
                     j["kind"].get<std::string>() + "\"");
  return j;
}

MatrixQ matrix_document_payload(const Json& doc) {
  if (!doc.contains("matrix")) throw ParseError("document needs a \"matrix\" field");
  return matrix_from_json(doc["matrix"]);
}

Json acs_document(const MatrixQ& j) {
  Json d;
  d["matrix"] = matrix_to_json(j);
  return document_wrap("acs", std::move(d));
}

Json two_form_document(const MatrixQ& m) {
  Json d;
  d["matrix"] = matrix_to_json(m);
  return document_wrap("two_form", std::move(d));
}

Json metric_document(const MatrixQ& m) {
  Json d;
  d["matrix"] = matrix_to_json(m);
  return document_wrap("metric", std::move(d));
}

Json algebra_document(const LieAlgebra& g) {
  return document_wrap("lie_algebra", algebra_to_json(g));
}

Json representation_document(const Representation& rho) {
  return document_wrap("representation", representation_to_json(rho));
}

} // namespace liecheck
