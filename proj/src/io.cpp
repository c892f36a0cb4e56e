#include "vopt/io.hpp"

#include <json.hpp>

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace vopt {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Vector json_vector(const json& j, const char* what) {
    if (!j.is_array() || j.empty()) throw ParseError(std::string(what) + ": expected a nonempty array");
    Vector v(static_cast<Eigen::Index>(j.size()));
    Eigen::Index i = 0;
    for (const auto& x : j) {
        if (!x.is_number()) throw ParseError(std::string(what) + ": expected numbers");
        v[i++] = x.get<double>();
    }
    if (!v.allFinite()) throw ParseError(std::string(what) + ": coordinates must be finite");
    return v;
}

SetSpec parse_spec(const json& j) {
    if (!j.is_object() || !j.contains("type")) throw ParseError("set spec: missing \"type\"");
    const std::string type = j.at("type").get<std::string>();
    try {
        if (type == "polyhedral") {
            const auto& jn = j.at("normals");
            if (!jn.is_array() || jn.empty()) throw ParseError("polyhedral: normals must be a nonempty array");
            const Eigen::Index m = static_cast<Eigen::Index>(jn.size());
            Eigen::MatrixXd W;
            for (Eigen::Index r = 0; r < m; ++r) {
                const Vector row = json_vector(jn.at(r), "polyhedral normal");
                if (r == 0) W.resize(m, row.size());
                if (row.size() != W.cols()) throw ParseError("polyhedral: inconsistent normal dimensions");
                W.row(r) = row.transpose();
            }
            const Vector c = json_vector(j.at("offsets"), "polyhedral offsets");
            return SetSpec::polyhedral(PolyhedralSet(W, c));
        }
        if (type == "shifted")
            return SetSpec::shifted(parse_spec(j.at("base")), json_vector(j.at("shift"), "shift"));
        if (type == "union-translates") {
            SetSpec base = parse_spec(j.at("base"));
            std::vector<Vector> ts;
            for (const auto& t : j.at("translates")) ts.push_back(json_vector(t, "translate"));
            return SetSpec::union_translates(std::move(base), std::move(ts));
        }
        if (type == "parabola-epigraph")
            return SetSpec::parabola_epigraph(j.at("dim").get<Eigen::Index>());
    } catch (const json::exception& e) {
        throw ParseError(std::string("set spec: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("set spec: ") + e.what());
    }
    throw ParseError("set spec: unknown type \"" + type + "\"");
}

}  // namespace

SetSpec parse_set_spec(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("set spec: ") + e.what());
    }
    return parse_spec(j);
}

SetSpec load_set_spec(const std::string& path) { return parse_set_spec(read_file(path)); }

PointCloud parse_points_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw ParseError("points csv: empty input");

    Eigen::Index columns = 0;
    {
        std::istringstream header(line);
        std::string token;
        while (std::getline(header, token, ',')) {
            ++columns;
            if (token != "y" + std::to_string(columns))
                throw ParseError("points csv: header must be y1,...,yn");
        }
        if (columns == 0) throw ParseError("points csv: header must be y1,...,yn");
    }

    PointCloud cloud;
    size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            Vector p = parse_vector(line);
            if (p.size() != columns)
                throw ParseError("expected " + std::to_string(columns) + " columns");
            cloud.push_back(std::move(p));
        } catch (const std::exception& e) {
            throw ParseError("points csv: line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return cloud;
}

PointCloud load_points_csv(const std::string& path) { return parse_points_csv(read_file(path)); }

void write_points_csv(std::ostream& os, const PointCloud& cloud) {
    for (Eigen::Index i = 0; i < cloud.dim(); ++i) os << (i ? "," : "") << "y" << (i + 1);
    os << "\n";
    for (const auto& p : cloud) {
        for (Eigen::Index i = 0; i < p.size(); ++i) os << (i ? "," : "") << format_double(p[i]);
        os << "\n";
    }
}

Vector parse_vector(const std::string& text) {
    std::vector<double> vals;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        size_t pos = 0;
        double x;
        try {
            x = std::stod(token, &pos);
        } catch (const std::exception&) {
            throw ParseError("vector literal: bad number \"" + token + "\"");
        }
        while (pos < token.size() && std::isspace(static_cast<unsigned char>(token[pos]))) ++pos;
        if (pos != token.size()) throw ParseError("vector literal: trailing junk in \"" + token + "\"");
        if (!std::isfinite(x)) throw ParseError("vector literal: coordinates must be finite");
        vals.push_back(x);
    }
    if (vals.empty()) throw ParseError("vector literal: empty");
    Vector v(static_cast<Eigen::Index>(vals.size()));
    for (size_t i = 0; i < vals.size(); ++i) v[static_cast<Eigen::Index>(i)] = vals[i];
    return v;
}

Relation parse_table_relation(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
        PointCloud cloud;
        for (const auto& p : j.at("points")) cloud.push_back(json_vector(p, "table point"));
        std::vector<std::vector<bool>> matrix;
        for (const auto& row : j.at("matrix")) {
            std::vector<bool> r;
            for (const auto& b : row) {
                if (!b.is_boolean()) throw ParseError("table relation: matrix entries must be booleans");
                r.push_back(b.get<bool>());
            }
            matrix.push_back(std::move(r));
        }
        return Relation::table(std::move(cloud), std::move(matrix));
    } catch (const json::exception& e) {
        throw ParseError(std::string("table relation: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("table relation: ") + e.what());
    }
}

Relation load_table_relation(const std::string& path) { return parse_table_relation(read_file(path)); }

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string format_ext(const ExtValue& v) {
    if (v.is_nu()) return "nu";
    if (v.is_neg_inf()) return "-inf";
    return format_double(v.value());
}

}  // namespace vopt
