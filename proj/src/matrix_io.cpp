#include "bforge/matrix_io.hpp"

#include <fstream>

namespace bforge {

nlohmann::json matrix_to_json(const LMat& a) {
  nlohmann::json j;
  j["n"] = a.rows();
  j["field"] = a.proto().field()->tag();
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(a.at(i, c).str());
    rows.push_back(row);
  }
  j["entries"] = rows;
  return j;
}

LMat matrix_from_json(const nlohmann::json& j) {
  const Field* F = Field::from_tag(j.at("field").get<std::string>());
  std::size_t n = j.at("n").get<std::size_t>();
  const auto& rows = j.at("entries");
  if (rows.size() != n) throw Error("matrix JSON: row count mismatch");
  LMat a(n, n, LaurentPoly(F));
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw Error("matrix JSON: column count mismatch");
    for (std::size_t c = 0; c < n; ++c)
      a.at(i, c) = LaurentPoly::parse(rows[i][c].get<std::string>(), F);
  }
  return a;
}

LMat matrix_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  nlohmann::json j;
  in >> j;
  return matrix_from_json(j);
}

namespace {

template <class M, class Str>
std::string render(const M& a, Str str) {
  std::string s = "[";
  for (std::size_t i = 0; i < a.rows(); ++i) {
    s += i ? "; " : "";
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) s += ", ";
      s += str(a.at(i, j));
    }
  }
  return s + "]";
}

}  // namespace

std::string matrix_str(const LMat& a) {
  return render(a, [](const LaurentPoly& f) { return f.str(); });
}
std::string matrix_str(const RMat& a) {
  return render(a, [](const RatFunc& f) { return f.str(); });
}
std::string matrix_str(const FMat& a) {
  return render(a, [](const FieldElem& f) { return f.str(); });
}

}  // namespace bforge
