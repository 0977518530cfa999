#include "gpc/json_io.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace gpc {

Json matrix_to_json(const CMatrix& m) {
    Json data = Json::array();
    for (int i = 0; i < m.dim(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.dim(); ++j) row.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
        data.push_back(std::move(row));
    }
    Json j;
    j["dim"] = m.dim();
    j["data"] = std::move(data);
    return j;
}

CMatrix matrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("data"))
        throw std::invalid_argument("matrix_from_json: expected {dim, data}");
    const int n = j.at("dim").get<int>();
    if (n < 1) throw std::invalid_argument("matrix_from_json: dim must be positive");
    const Json& data = j.at("data");
    if (!data.is_array() || static_cast<int>(data.size()) != n)
        throw std::invalid_argument("matrix_from_json: row count mismatch");
    CMatrix m(n);
    for (int i = 0; i < n; ++i) {
        const Json& row = data.at(static_cast<std::size_t>(i));
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw std::invalid_argument("matrix_from_json: column count mismatch");
        for (int k = 0; k < n; ++k) {
            const Json& cell = row.at(static_cast<std::size_t>(k));
            if (!cell.is_array() || cell.size() != 2)
                throw std::invalid_argument("matrix_from_json: entry must be [re, im]");
            const double re = cell.at(0).get<double>();
            const double im = cell.at(1).get<double>();
            if (!std::isfinite(re) || !std::isfinite(im))
                throw std::invalid_argument("matrix_from_json: non-finite entry");
            m(i, k) = Complex(re, im);
        }
    }
    return m;
}

Json subalgebra_to_json(const Subalgebra& s) {
    Json j;
    j["label"] = s.label;
    j["kind"] = to_string(s.kind);
    j["n"] = s.ambient_dim;
    Json basis = Json::array();
    for (const CMatrix& b : s.basis) basis.push_back(matrix_to_json(b));
    j["basis"] = std::move(basis);
    if (s.has_commutant_basis()) {
        Json cb = Json::array();
        for (const CMatrix& b : s.commutant_basis) cb.push_back(matrix_to_json(b));
        j["commutant_basis"] = std::move(cb);
    }
    if (!s.blocks.empty()) {
        Json blocks = Json::array();
        for (const auto& [ni, mi] : s.blocks) blocks.push_back(Json::array({ni, mi}));
        j["blocks"] = std::move(blocks);
    }
    return j;
}

Subalgebra subalgebra_from_json(const Json& j) {
    Subalgebra s;
    s.label = j.at("label").get<std::string>();
    s.kind = kind_from_string(j.at("kind").get<std::string>());
    s.ambient_dim = j.at("n").get<int>();
    for (const Json& b : j.at("basis")) {
        s.basis.push_back(matrix_from_json(b));
        if (s.basis.back().dim() != s.ambient_dim)
            throw std::invalid_argument("subalgebra_from_json: basis dimension mismatch");
    }
    if (s.basis.empty()) throw std::invalid_argument("subalgebra_from_json: empty basis");
    if (j.contains("commutant_basis")) {
        for (const Json& b : j.at("commutant_basis")) {
            s.commutant_basis.push_back(matrix_from_json(b));
            if (s.commutant_basis.back().dim() != s.ambient_dim)
                throw std::invalid_argument("subalgebra_from_json: commutant dimension mismatch");
        }
    }
    if (j.contains("blocks")) {
        for (const Json& b : j.at("blocks")) {
            if (!b.is_array() || b.size() != 2)
                throw std::invalid_argument("subalgebra_from_json: block must be [n_i, m_i]");
            s.blocks.emplace_back(b.at(0).get<int>(), b.at(1).get<int>());
        }
    }
    return s;
}

Json decomposition_to_json(const Decomposition& d) {
    Json j;
    j["name"] = d.name;
    j["n"] = d.n;
    Json parts = Json::array();
    for (const Subalgebra& s : d.parts) parts.push_back(subalgebra_to_json(s));
    j["parts"] = std::move(parts);
    return j;
}

Decomposition decomposition_from_json(const Json& j) {
    Decomposition d;
    d.name = j.at("name").get<std::string>();
    d.n = j.at("n").get<int>();
    for (const Json& p : j.at("parts")) {
        Subalgebra s = subalgebra_from_json(p);
        if (s.ambient_dim != d.n)
            throw std::invalid_argument("decomposition_from_json: part dimension mismatch");
        if (!s.has_commutant_basis()) s.commutant_basis = commutant(s).basis;
        d.parts.push_back(std::move(s));
    }
    if (d.parts.empty()) throw std::invalid_argument("decomposition_from_json: no parts");
    refresh_spanning_flags(d);
    return d;
}

Json channel_to_json(const GeneralizedPauliChannel& ch) {
    Json j;
    j["decomposition"] = decomposition_to_json(ch.decomposition);
    j["lambda"] = ch.lambda;
    return j;
}

GeneralizedPauliChannel channel_from_json(const Json& j) {
    GeneralizedPauliChannel ch;
    const Json& dec = j.at("decomposition");
    if (dec.is_string()) {
        ch.decomposition = build_decomposition(dec.get<std::string>());
    } else {
        ch.decomposition = decomposition_from_json(dec);
    }
    for (const Json& l : j.at("lambda")) {
        const double v = l.get<double>();
        if (!std::isfinite(v)) throw std::invalid_argument("channel_from_json: non-finite lambda");
        ch.lambda.push_back(v);
    }
    if (ch.lambda.size() != ch.decomposition.parts.size())
        throw std::invalid_argument("channel_from_json: lambda length does not match part count");
    return ch;
}

Json cp_report_to_json(const CpReport& report) {
    Json margins;
    for (const auto& [name, value] : report.condition_margins) margins[name] = value;
    Json j;
    j["analytic_cp"] = report.analytic_cp;
    j["numeric_cp"] = report.numeric_cp;
    j["min_choi_eigenvalue"] = report.min_choi_eigenvalue;
    j["condition_margins"] = std::move(margins);
    j["tolerance_used"] = report.tolerance_used;
    return j;
}

Json kraus_form_to_json(const KrausForm& form) {
    Json slots = Json::array();
    for (std::size_t t = 0; t < form.coefficients.size(); ++t) {
        Json slot;
        slot["label"] = form.groups[t].label();
        slot["coefficient"] = form.coefficients[t];
        slot["element"] = matrix_to_json(form.elements[t]);
        slots.push_back(std::move(slot));
    }
    Json j;
    j["slots"] = std::move(slots);
    return j;
}

Json identity_report_to_json(const IdentityReport& report) {
    Json j;
    j["name"] = report.name;
    j["max_violation"] = report.max_violation;
    j["trials"] = report.trials;
    j["passed"] = report.passed;
    j["tolerance"] = report.tolerance;
    return j;
}

Json decomposition_report_to_json(const DecompositionReport& report) {
    Json checks = Json::array();
    for (const ValidationCheck& c : report.checks) {
        Json j;
        j["name"] = c.name;
        j["passed"] = c.passed;
        j["max_violation"] = c.max_violation;
        j["tolerance"] = c.tolerance;
        checks.push_back(std::move(j));
    }
    Json j;
    j["checks"] = std::move(checks);
    j["all_passed"] = report.all_passed();
    return j;
}

Json sample_stats_to_json(const SampleStats& stats) {
    Json j;
    j["count"] = stats.count;
    j["agree"] = stats.agree;
    j["skipped"] = stats.skipped;
    j["disagree"] = stats.disagree;
    j["worst_cp_min_eigenvalue"] = stats.worst_cp_min_eigenvalue;
    return j;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    Json j;
    in >> j;
    return j;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open file for writing: " + path);
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace gpc
