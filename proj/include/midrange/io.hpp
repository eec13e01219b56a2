#pragma once

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "midrange/dense.hpp"
#include "midrange/errors.hpp"
#include "midrange/sym_matrix.hpp"

namespace midrange {

// All numbers leaving the library are rounded to 12 significant digits.
// A 12-digit decimal survives the double round trip exactly, so documents
// re-load bit-identically and re-serialize byte-identically.
inline double quantize12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return std::strtod(buf, nullptr);
}

inline std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

using Json = nlohmann::ordered_json;

struct NamedMatrix {
  std::string name;
  SymMatrix data;
};

// {"n": int, "matrices": [{"name": str, "data": [[row-major reals]]}]}
struct MatrixFile {
  std::size_t n = 0;
  std::vector<NamedMatrix> matrices;

  const SymMatrix& find(const std::string& name) const {
    for (const NamedMatrix& m : matrices)
      if (m.name == name) return m.data;
    throw ValidationError("matrix '" + name + "' not found in input file");
  }
};

struct NamedVector {
  std::string name;
  std::vector<double> data;
};

// {"n": int, "vectors": [{"name": str, "data": [reals]}]}
struct VectorFile {
  std::size_t n = 0;
  std::vector<NamedVector> vectors;
};

namespace detail {

inline Json parse_stream(std::istream& in) {
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("invalid JSON: ") + e.what());
  }
}

inline double to_real(const Json& j, const char* what) {
  if (!j.is_number()) throw ValidationError(std::string(what) + ": expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ValidationError(std::string(what) + ": non-finite value");
  return v;
}

}  // namespace detail

inline MatrixFile load_matrix_file(std::istream& in) {
  const Json doc = detail::parse_stream(in);
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("matrices")) {
    throw ValidationError("matrix file must be an object with \"n\" and \"matrices\"");
  }
  if (!doc["n"].is_number_unsigned() || doc["n"].get<std::size_t>() == 0) {
    throw ValidationError("\"n\" must be a positive integer");
  }
  MatrixFile out;
  out.n = doc["n"].get<std::size_t>();
  if (!doc["matrices"].is_array() ) throw ValidationError("\"matrices\" must be an array");
  for (const Json& entry : doc["matrices"]) {
    if (!entry.is_object() || !entry.contains("name") || !entry.contains("data") ||
        !entry["name"].is_string()) {
      throw ValidationError("each matrix needs a \"name\" string and a \"data\" block");
    }
    const std::string name = entry["name"].get<std::string>();
    const Json& data = entry["data"];
    if (!data.is_array() || data.size() != out.n) {
      throw ValidationError("matrix '" + name + "': data must be an n x n array of rows");
    }
    Matrix m(out.n);
    for (std::size_t i = 0; i < out.n; ++i) {
      const Json& row = data[i];
      if (!row.is_array() || row.size() != out.n) {
        throw ValidationError("matrix '" + name + "': row " + std::to_string(i) +
                              " must have n entries");
      }
      for (std::size_t j = 0; j < out.n; ++j) {
        m(i, j) = detail::to_real(row[j], ("matrix '" + name + "'").c_str());
      }
    }
    for (std::size_t i = 0; i < out.n; ++i) {
      for (std::size_t j = i + 1; j < out.n; ++j) {
        if (std::abs(m(i, j) - m(j, i)) > 1e-12) {
          throw ValidationError("matrix '" + name + "': entry (" + std::to_string(i) + "," +
                                std::to_string(j) + ") breaks symmetry beyond 1e-12");
        }
      }
    }
    out.matrices.push_back({name, SymMatrix(std::move(m))});
  }
  return out;
}

inline VectorFile load_vector_file(std::istream& in) {
  const Json doc = detail::parse_stream(in);
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("vectors")) {
    throw ValidationError("vector file must be an object with \"n\" and \"vectors\"");
  }
  if (!doc["n"].is_number_unsigned() || doc["n"].get<std::size_t>() == 0) {
    throw ValidationError("\"n\" must be a positive integer");
  }
  VectorFile out;
  out.n = doc["n"].get<std::size_t>();
  if (!doc["vectors"].is_array()) throw ValidationError("\"vectors\" must be an array");
  for (const Json& entry : doc["vectors"]) {
    if (!entry.is_object() || !entry.contains("name") || !entry.contains("data") ||
        !entry["name"].is_string()) {
      throw ValidationError("each vector needs a \"name\" string and a \"data\" array");
    }
    const std::string name = entry["name"].get<std::string>();
    const Json& data = entry["data"];
    if (!data.is_array() || data.size() != out.n) {
      throw ValidationError("vector '" + name + "': data must have n entries");
    }
    std::vector<double> v(out.n);
    for (std::size_t j = 0; j < out.n; ++j) {
      v[j] = detail::to_real(data[j], ("vector '" + name + "'").c_str());
    }
    out.vectors.push_back({name, std::move(v)});
  }
  return out;
}

inline Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(quantize12(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json matrix_to_json(const SymMatrix& m) { return matrix_to_json(m.matrix()); }

inline void write_matrix_file(std::ostream& os, const MatrixFile& file) {
  Json doc;
  doc["n"] = file.n;
  Json arr = Json::array();
  for (const NamedMatrix& m : file.matrices) {
    Json entry;
    entry["name"] = m.name;
    entry["data"] = matrix_to_json(m.data);
    arr.push_back(std::move(entry));
  }
  doc["matrices"] = std::move(arr);
  os << doc.dump(2) << "\n";
}

}  // namespace midrange
