#pragma once

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "bhk/zeta/assemble.hpp"

namespace bhk::io {

using json = nlohmann::json;

inline constexpr const char* kToolVersion = "0.1.0";

/// A pencil document: {"name", "matrix", "deformed", "notes"}.
struct PencilFile {
    std::string name;
    inv::ExponentMatrix matrix;
    bool deformed = false;
    std::string notes;
};

inline PencilFile pencil_from_json(const json& j) {
    if (!j.is_object()) throw ValidationError("pencil file must be a JSON object");
    PencilFile p;
    std::vector<std::vector<std::int64_t>> rows;
    try {
        p.name = j.value("name", std::string());
        p.deformed = j.value("deformed", false);
        p.notes = j.value("notes", std::string());
        if (!j.contains("matrix") || !j["matrix"].is_array()) throw ValidationError("pencil file needs a \"matrix\" array of rows");
        for (const auto& row : j["matrix"]) {
            if (!row.is_array()) throw ValidationError("matrix rows must be arrays");
            std::vector<std::int64_t> r;
            for (const auto& v : row) {
                if (!v.is_number_integer()) throw ValidationError("matrix entries must be integers");
                r.push_back(v.get<std::int64_t>());
            }
            rows.push_back(std::move(r));
        }
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed pencil file: ") + e.what());
    }
    p.matrix = inv::ExponentMatrix(std::move(rows));
    return p;
}

inline json pencil_to_json(const PencilFile& p) {
    return {{"name", p.name}, {"matrix", p.matrix.a}, {"deformed", p.deformed}, {"notes", p.notes}};
}

inline json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

inline PencilFile load_pencil(const std::string& path) { return pencil_from_json(parse_file(path)); }

/// Coefficients low degree first, as decimal strings.
inline json poly_json(const IntPoly& p) {
    json a = json::array();
    for (const auto& c : p.c) a.push_back(c.str());
    return a;
}

inline IntPoly poly_from_json(const json& j) {
    std::vector<BigInt> c;
    for (const auto& v : j) c.emplace_back(v.get<std::string>());
    return IntPoly(std::move(c));
}

inline json rationals_json(const std::vector<Rational>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(bhk::to_string(x));
    return a;
}

inline json bigints_json(const std::vector<BigInt>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}

inline json factors_json(const zeta::Factorization& f) {
    json a = json::array();
    for (const auto& x : f.factors) a.push_back({{"coefficients", poly_json(x.poly)}, {"multiplicity", x.multiplicity}});
    return a;
}

inline json l_polynomial_json(const zeta::LPolynomial& l) {
    json j = {{"coefficients", poly_json(l.poly)},
              {"degree", l.degree},
              {"weight", l.weight},
              {"provenance", l.provenance},
              {"power_sums", rationals_json(l.power_sums)},
              {"completed", l.completed}};
    j["polynomial_check"] = l.polynomial_check ? json(*l.polynomial_check) : json(nullptr);
    if (l.functional_sign) j["functional_sign"] = l.functional_sign;
    return j;
}

inline json zeta_json(const zeta::ZetaReport& r) {
    json j = {{"family", zeta::to_string(r.family)}, {"q", r.q}, {"psi", r.psi}, {"smooth", r.smooth}, {"notes", r.notes}};
    if (!r.smooth) return j;
    j["P_X"] = poly_json(r.px);
    j["degree"] = r.px.degree();
    json blocks = json::array();
    for (const auto& b : r.blocks) blocks.push_back({{"name", b.name}, {"multiplicity", b.multiplicity}, {"l", l_polynomial_json(b.l)}});
    j["blocks"] = blocks;
    j["factors"] = factors_json(r.factors);
    j["residual"] = poly_json(r.factors.residual);
    j["display"] = r.display;
    j["product_ok"] = r.product_ok;
    j["weil_ok"] = r.weil_ok;
    j["predicted_count"] = r.predicted_count().str();
    j["direct_count"] = r.direct_count ? json(*r.direct_count) : json(nullptr);
    j["trace_ok"] = r.trace_ok ? json(*r.trace_ok) : json(nullptr);
    return j;
}

/// Command echo, inputs, results, timings, tool version and determinism fingerprint.
/// Everything except timings is reproducible.
struct Report {
    std::string command;
    json inputs = json::object();
    json results = json::object();
    json timings = json::object();
    std::string tool_version = kToolVersion;
    json fingerprint = json::array();  // field modulus and generator of each field used
    bool verified = true;              // false: a verification mismatch (exit code 1)

    json to_json() const {
        return {{"command", command},     {"inputs", inputs},   {"results", results},
                {"timings", timings},     {"tool_version", tool_version},
                {"fingerprint", fingerprint}, {"verified", verified}};
    }

    static Report from_json(const json& j) {
        Report r;
        r.command = j.at("command").get<std::string>();
        r.inputs = j.at("inputs");
        r.results = j.at("results");
        r.timings = j.at("timings");
        r.tool_version = j.at("tool_version").get<std::string>();
        r.fingerprint = j.at("fingerprint");
        r.verified = j.at("verified").get<bool>();
        return r;
    }

    std::string dump() const { return to_json().dump(2) + "\n"; }

    void add_fingerprint(const std::string& fp) {
        for (const auto& f : fingerprint)
            if (f == fp) return;
        fingerprint.push_back(fp);
    }

    std::string text() const {
        std::ostringstream os;
        os << command << (verified ? "" : "  [MISMATCH]") << "\n";
        render(os, results, "  ");
        for (const auto& f : fingerprint) os << "  field " << f.get<std::string>() << "\n";
        return os.str();
    }

   private:
    static void render(std::ostringstream& os, const json& j, const std::string& indent) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            const json& v = it.value();
            const std::string key = j.is_object() ? it.key() : "-";
            if (v.is_object() || (v.is_array() && !v.empty() && (v.front().is_object() || v.front().is_array()))) {
                os << indent << key << ":\n";
                render(os, v, indent + "  ");
            } else {
                os << indent << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
        }
    }
};

}  // namespace bhk::io
