#include "krein/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "krein/error.hpp"

namespace krein::io {
namespace {

const json& field(const json& j, const char* key, const char* kind) {
  if (!j.is_object() || !j.contains(key)) {
    throw ValidationError(std::string(kind) + ": missing field \"" + key + "\"");
  }
  return j.at(key);
}

int as_int(const json& v, const char* what) {
  if (!v.is_number_integer()) throw ValidationError(std::string(what) + ": expected an integer");
  return v.get<int>();
}

double as_double(const json& v, const char* what) {
  if (!v.is_number()) throw ValidationError(std::string(what) + ": expected a number");
  return v.get<double>();
}

Complex as_complex(const json& v, const char* what) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return {v[0].get<double>(), v[1].get<double>()};
  }
  throw ValidationError(std::string(what) + ": expected a number or [re, im]");
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

std::vector<std::vector<int>> int_rows(const json& j, const char* what) {
  if (!j.is_array()) throw ValidationError(std::string(what) + ": expected an array of rows");
  std::vector<std::vector<int>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw ValidationError(std::string(what) + ": expected an array of rows");
    std::vector<int> r;
    for (const auto& v : row) r.push_back(as_int(v, what));
    rows.push_back(std::move(r));
  }
  return rows;
}

template <typename T, typename Read>
Tensor3<T> tensor_from_json(const json& j, const char* kind, Read read) {
  const int d = as_int(field(j, "d", kind), kind);
  const json& e = field(j, "entries", kind);
  const int size = d + 1;
  if (d < 0 || !e.is_array() || static_cast<int>(e.size()) != size) {
    throw ValidationError(std::string(kind) + ": entries must be a (d+1)^3 array");
  }
  Tensor3<T> t(size);
  for (int i = 0; i < size; ++i) {
    if (!e[i].is_array() || static_cast<int>(e[i].size()) != size) {
      throw ValidationError(std::string(kind) + ": entries must be a (d+1)^3 array");
    }
    for (int k = 0; k < size; ++k) {
      const json& row = e[i][k];
      if (!row.is_array() || static_cast<int>(row.size()) != size) {
        throw ValidationError(std::string(kind) + ": entries must be a (d+1)^3 array");
      }
      for (int l = 0; l < size; ++l) t(i, k, l) = read(row[l]);
    }
  }
  return t;
}

template <typename T>
json tensor_to_json(const Tensor3<T>& t) {
  json entries = json::array();
  for (int i = 0; i < t.size(); ++i) {
    json plane = json::array();
    for (int j = 0; j < t.size(); ++j) {
      json row = json::array();
      for (int k = 0; k < t.size(); ++k) row.push_back(t(i, j, k));
      plane.push_back(std::move(row));
    }
    entries.push_back(std::move(plane));
  }
  return json{{"d", t.size() - 1}, {"entries", std::move(entries)}};
}

std::vector<int> split_indices(const std::string& key, std::size_t count) {
  std::vector<int> out;
  std::stringstream ss(key);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      out.push_back(std::stoi(part));
    } catch (const std::exception&) {
      throw ValidationError("fusion system: malformed symbol key \"" + key + "\"");
    }
  }
  if (out.size() != count) throw ValidationError("fusion system: malformed symbol key \"" + key + "\"");
  return out;
}

}  // namespace

json parse(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(col) +
                     ": malformed JSON (" + e.what() + ")");
  }
}

json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path.string());
}

void save_json(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write " + path.string());
  out << j.dump() << '\n';
}

json to_json(const AssociationScheme& s) {
  json j{{"n", s.n()}, {"d", s.d()}, {"relation", s.relation_rows()}};
  if (!s.labels().empty()) j["labels"] = s.labels();
  return j;
}

AssociationScheme scheme_from_json(const json& j, bool validate) {
  const int n = as_int(field(j, "n", "scheme"), "scheme n");
  const int d = as_int(field(j, "d", "scheme"), "scheme d");
  auto rows = int_rows(field(j, "relation", "scheme"), "scheme relation");
  if (static_cast<int>(rows.size()) != n) {
    throw ValidationError("scheme: relation has " + std::to_string(rows.size()) +
                          " rows but n = " + std::to_string(n));
  }
  std::vector<std::string> labels;
  if (j.contains("labels") && !j.at("labels").is_null()) {
    labels = j.at("labels").get<std::vector<std::string>>();
  }
  AssociationScheme s(std::move(rows), d, std::move(labels));
  if (validate) {
    const AxiomReport report = verify_axioms(s);
    if (!report.passed) {
      const auto& v = report.violations.front();
      std::string witness;
      for (int w : v.witness) witness += (witness.empty() ? "" : ", ") + std::to_string(w);
      throw ValidationError("scheme: violates axiom (" + std::to_string(v.axiom) + ") at [" +
                            witness + "]: " + v.detail);
    }
  }
  return s;
}

json to_json(const FiniteGroup& g) { return json{{"order", g.order()}, {"cayley", g.cayley()}}; }

FiniteGroup group_from_json(const json& j) {
  const int order = as_int(field(j, "order", "group"), "group order");
  auto rows = int_rows(field(j, "cayley", "group"), "group cayley");
  if (static_cast<int>(rows.size()) != order) {
    throw ValidationError("group: cayley table has " + std::to_string(rows.size()) +
                          " rows but order = " + std::to_string(order));
  }
  return FiniteGroup(std::move(rows));
}

json to_json(const RMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const CMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(complex_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

CMatrix cmatrix_from_json(const json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) {
    throw ValidationError("matrix: expected a non-empty array of rows");
  }
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  CMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw ValidationError("matrix: row " + std::to_string(i) + " has the wrong length");
    }
    for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = as_complex(row[static_cast<std::size_t>(k)], "matrix entry");
  }
  return m;
}

RMatrix rmatrix_from_json(const json& j) {
  const CMatrix m = cmatrix_from_json(j);
  if ((m.imag().array() != 0.0).any()) throw ValidationError("matrix: expected real entries");
  return m.real();
}

json to_json(const IntersectionTensor& t) { return tensor_to_json(t.p); }
json to_json(const KreinTensor& t) { return tensor_to_json(t.q); }

IntersectionTensor intersection_from_json(const json& j) {
  auto t = tensor_from_json<std::int64_t>(j, "intersection tensor", [](const json& v) {
    if (!v.is_number_integer()) throw ValidationError("intersection tensor: expected integers");
    const auto x = v.get<std::int64_t>();
    if (x < 0) throw ValidationError("intersection tensor: entries must be non-negative");
    return x;
  });
  return IntersectionTensor{std::move(t)};
}

KreinTensor krein_from_json(const json& j) {
  auto t = tensor_from_json<double>(j, "krein tensor",
                                    [](const json& v) { return as_double(v, "krein tensor"); });
  return KreinTensor{std::move(t), kKreinTolerance};
}

json to_json(const BoseMesnerDecomposition& dec) {
  json idem = json::array();
  for (const auto& e : dec.idempotents) idem.push_back(to_json(e));
  return json{{"n", dec.n()},
              {"d", dec.d()},
              {"multiplicities", dec.multiplicities},
              {"idempotents", std::move(idem)},
              {"eigenmatrix_P", to_json(dec.eigenmatrix_P)},
              {"eigenmatrix_Q", to_json(dec.eigenmatrix_Q)}};
}

json to_json(const FusionSystem& fs) {
  json n = json::array();
  for (int a = 0; a < fs.rank(); ++a) {
    json plane = json::array();
    for (int b = 0; b < fs.rank(); ++b) plane.push_back(fuse(fs, a, b));
    n.push_back(std::move(plane));
  }
  json j{{"labels", fs.labels}, {"N", std::move(n)}};
  if (!fs.F.empty()) {
    json f = json::object();
    for (const auto& [k, v] : fs.F) {
      f[std::to_string(k[0]) + "," + std::to_string(k[1]) + "," + std::to_string(k[2]) + "," +
        std::to_string(k[3]) + "," + std::to_string(k[4]) + "," + std::to_string(k[5])] =
          complex_json(v);
    }
    j["F"] = std::move(f);
  }
  if (!fs.R.empty()) {
    json r = json::object();
    for (const auto& [k, v] : fs.R)
      r[std::to_string(k[0]) + "," + std::to_string(k[1]) + "," + std::to_string(k[2])] =
          complex_json(v);
    j["R"] = std::move(r);
  }
  if (!fs.twist.empty()) {
    json t = json::array();
    for (Complex z : fs.twist) t.push_back(complex_json(z));
    j["twist"] = std::move(t);
  }
  return j;
}

FusionSystem fusion_from_json(const json& j) {
  auto labels = field(j, "labels", "fusion system").get<std::vector<std::string>>();
  const json& nj = field(j, "N", "fusion system");
  const int rank = static_cast<int>(labels.size());
  Tensor3<int> n(rank, 0);
  if (!nj.is_array() || static_cast<int>(nj.size()) != rank) {
    throw ValidationError("fusion system: N must be a rank^3 array");
  }
  for (int a = 0; a < rank; ++a) {
    const auto rows = int_rows(nj[a], "fusion system N");
    if (static_cast<int>(rows.size()) != rank) throw ValidationError("fusion system: N must be a rank^3 array");
    for (int b = 0; b < rank; ++b) {
      if (static_cast<int>(rows[b].size()) != rank) throw ValidationError("fusion system: N must be a rank^3 array");
      for (int c = 0; c < rank; ++c) n(a, b, c) = rows[b][c];
    }
  }
  auto check_label = [&](int x) {
    if (x < 0 || x >= rank) throw ValidationError("fusion system: symbol label out of range");
  };
  std::map<FKey, Complex> f;
  if (j.contains("F")) {
    for (const auto& [key, value] : j.at("F").items()) {
      const auto idx = split_indices(key, 6);
      for (int x : idx) check_label(x);
      f[{idx[0], idx[1], idx[2], idx[3], idx[4], idx[5]}] = as_complex(value, "F entry");
    }
  }
  std::map<RKey, Complex> r;
  if (j.contains("R")) {
    for (const auto& [key, value] : j.at("R").items()) {
      const auto idx = split_indices(key, 3);
      for (int x : idx) check_label(x);
      r[{idx[0], idx[1], idx[2]}] = as_complex(value, "R entry");
    }
  }
  std::vector<Complex> twist;
  if (j.contains("twist")) {
    for (const auto& v : j.at("twist")) twist.push_back(as_complex(v, "twist"));
  }
  return make_fusion_system(std::move(labels), std::move(n), std::move(f), std::move(r),
                            std::move(twist));
}

json to_json(const Distribution& p) { return json(p); }

Distribution distribution_from_json(const json& j) {
  if (!j.is_array()) throw ValidationError("distribution: expected an array of numbers");
  Distribution p;
  for (const auto& v : j) p.push_back(as_double(v, "distribution"));
  require_distribution(p, 1e-10, "distribution");
  return p;
}

}  // namespace krein::io
