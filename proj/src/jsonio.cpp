#include "kmarc/jsonio.hpp"

namespace kmarc {

namespace {

nlohmann::json point_to_json(const Point& p) {
    nlohmann::json out = nlohmann::json::array();
    for (fe x : p.c) out.push_back(fe_to_hex(x));
    return out;
}

Point point_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 3) throw JsonError("point must be [hex, hex, hex]");
    std::vector<fe> v;
    for (const auto& x : j) v.push_back(fe_from_hex(x.get<std::string>()));
    return Point{std::move(v)};
}

}  // namespace

nlohmann::json field_to_json(const Field& F) {
    return {{"m", F.deg()}, {"modulus", fe_to_hex(F.modulus())}};
}

Field field_from_json(const nlohmann::json& j) {
    if (!j.contains("m") || !j.contains("modulus")) throw JsonError("field needs m and modulus");
    return Field(j["m"].get<int>(), fe_from_hex(j["modulus"].get<std::string>()));
}

nlohmann::json arc_to_json(const KMArc& A) {
    nlohmann::json j;
    j["field"] = field_to_json(A.field);
    j["t"] = A.t;
    j["nucleus"] = A.nucleus ? point_to_json(*A.nucleus) : nlohmann::json();
    j["points"] = nlohmann::json::array();
    for (const Point& p : A.points) j["points"].push_back(point_to_json(p));
    j["t_secants"] = nlohmann::json::array();
    for (const Line& l : A.t_secants) j["t_secants"].push_back(point_to_json(l));
    return j;
}

KMArc arc_from_json(const nlohmann::json& j) {
    Field F = field_from_json(j.at("field"));
    std::vector<Point> pts;
    for (const auto& p : j.at("points")) pts.push_back(point_from_json(p));
    KMArc A = verify_km(F, std::move(pts));
    if (A.t != j.at("t").get<int>()) throw JsonError("declared t does not match the verifier");
    if (A.nucleus) {
        if (j.at("nucleus").is_null() ||
            !(*A.nucleus == normalize(F, point_from_json(j.at("nucleus")).c)))
            throw JsonError("declared nucleus does not match the verifier");
    } else if (!j.at("nucleus").is_null()) {
        throw JsonError("hyperoval must declare a null nucleus");
    }
    if (j.contains("t_secants")) {
        std::vector<Line> decl;
        for (const auto& l : j.at("t_secants")) decl.push_back(normalize(F, point_from_json(l).c));
        std::sort(decl.begin(), decl.end(), [&](const Line& a, const Line& b) {
            return point_key(F, a) < point_key(F, b);
        });
        if (!(decl == A.t_secants)) throw JsonError("declared t-secants do not match the verifier");
    }
    return A;
}

nlohmann::json witness_to_json(const Collineation& g) {
    nlohmann::json m = nlohmann::json::array();
    for (const auto& row : g.matrix) {
        nlohmann::json r = nlohmann::json::array();
        for (fe x : row) r.push_back(fe_to_hex(x));
        m.push_back(r);
    }
    return {{"matrix", m}, {"frob", g.frob}};
}

Collineation witness_from_json(const nlohmann::json& j) {
    Collineation g;
    const auto& m = j.at("matrix");
    if (!m.is_array() || m.size() != 3) throw JsonError("matrix must be 3x3");
    for (int i = 0; i < 3; ++i) {
        if (!m[i].is_array() || m[i].size() != 3) throw JsonError("matrix must be 3x3");
        for (int k = 0; k < 3; ++k) g.matrix[i][k] = fe_from_hex(m[i][k].get<std::string>());
    }
    g.frob = j.at("frob").get<int>();
    return g;
}

}  // namespace kmarc
