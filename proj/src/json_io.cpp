#include "adjspec/json_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace adjspec {

Json scalar_to_json(const ExactScalar& v) { return format_exact(v); }

Json scalar_to_json(const ApproxScalar& v) {
    Json j;
    j["re"] = v.real();
    j["im"] = v.imag();
    return j;
}

ExactScalar exact_scalar_from_json(const Json& j) {
    if (j.is_string()) return parse_exact(j.get<std::string>());
    if (j.is_number_integer()) return ExactScalar(j.get<long>());
    throw ParseError("exact entries must be strings (or integers), got " + j.dump());
}

ApproxScalar approx_scalar_from_json(const Json& j) {
    if (j.is_object()) {
        if (!j.contains("re") || !j.contains("im") || !j["re"].is_number() ||
            !j["im"].is_number())
            throw ParseError("approx entries must be {\"re\": float, \"im\": float}, got " +
                             j.dump());
        return ApproxScalar(j["re"].get<double>(), j["im"].get<double>());
    }
    if (j.is_number()) return ApproxScalar(j.get<double>(), 0.0);
    throw ParseError("approx entries must be numbers or {re, im} objects, got " + j.dump());
}

MatrixFile matrix_file_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("mode") || !j.contains("rows"))
        throw ParseError("matrix file needs \"mode\" and \"rows\"");
    std::string mode = j["mode"].get<std::string>();
    const Json& rows = j["rows"];
    if (!rows.is_array() || rows.empty()) throw ParseError("\"rows\" must be a nonempty array");
    const int n = static_cast<int>(rows.size());
    for (const auto& row : rows)
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw ParseError("matrix must be square; every row needs " + std::to_string(n) +
                             " entries");
    MatrixFile f;
    if (mode == "exact") {
        f.mode = Mode::exact;
        f.exact = Matrix<ExactScalar>(n);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) f.exact(i, k) = exact_scalar_from_json(rows[i][k]);
    } else if (mode == "approx") {
        f.mode = Mode::approx;
        f.approx = Matrix<ApproxScalar>(n);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) f.approx(i, k) = approx_scalar_from_json(rows[i][k]);
    } else {
        throw ParseError("mode must be \"exact\" or \"approx\", got \"" + mode + "\"");
    }
    return f;
}

Json matrix_file_to_json(const MatrixFile& f) {
    Json j;
    j["mode"] = mode_name(f.mode);
    j["rows"] = f.mode == Mode::exact ? matrix_to_json(f.exact) : matrix_to_json(f.approx);
    return j;
}

MatrixFile load_matrix_file(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(path);
        if (!in) throw ParseError("cannot open matrix file '" + path + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("matrix file '" + path + "' is not valid JSON");
    return matrix_file_from_json(j);
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace adjspec
