#pragma once

#include <string>

#include <json.hpp>

#include "adjspec/spectral.hpp"

namespace adjspec {

using Json = nlohmann::ordered_json;

enum class Mode { exact, approx };

inline const char* mode_name(Mode m) { return m == Mode::exact ? "exact" : "approx"; }

/**
 * A parsed matrix file: a declared mode plus the square matrix in that mode's
 * scalar encoding (exact entries as "p/q+r/si" strings, approximate entries as
 * {"re": float, "im": float}).
 */
struct MatrixFile {
    Mode mode = Mode::exact;
    Matrix<ExactScalar> exact;
    Matrix<ApproxScalar> approx;

    int n() const { return mode == Mode::exact ? exact.n() : approx.n(); }
};

Json scalar_to_json(const ExactScalar& v);
Json scalar_to_json(const ApproxScalar& v);
ExactScalar exact_scalar_from_json(const Json& j);
ApproxScalar approx_scalar_from_json(const Json& j);

template <class S>
Json matrix_to_json(const Matrix<S>& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.n(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.n(); ++j) row.push_back(scalar_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <class S>
Json vector_to_json(const std::vector<S>& v) {
    Json out = Json::array();
    for (const S& x : v) out.push_back(scalar_to_json(x));
    return out;
}

MatrixFile matrix_file_from_json(const Json& j);
Json matrix_file_to_json(const MatrixFile& f);

/// Reads a matrix file from disk ("-" reads stdin). Throws ParseError.
MatrixFile load_matrix_file(const std::string& path);

/// Canonical dump: 2-space indent plus trailing newline, byte-stable for equal inputs.
std::string dump_json(const Json& j);

}  // namespace adjspec
