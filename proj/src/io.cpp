#include "polyharm/io.hpp"
#include "polyharm/errors.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace polyharm {

using nlohmann::json;

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

json doubles_to_json(const std::vector<double>& vs) {
    json arr = json::array();
    for (double v : vs) arr.push_back(format_double(v));
    return arr;
}

std::vector<double> doubles_from_json(const json& arr) {
    std::vector<double> vs;
    vs.reserve(arr.size());
    for (const auto& item : arr) vs.push_back(std::stod(item.get<std::string>()));
    return vs;
}

} // namespace

std::string serialize_interpolant(const PolyharmonicInterpolant& h, const std::string& variant) {
    json doc;
    doc["header"] = {{"n", h.dimension()},
                     {"N", h.order()},
                     {"k_max", h.max_degree()},
                     {"R", format_double(h.ball_radius())},
                     {"knot_variant", variant}};
    json modes = json::array();
    for (const ModePolynomial& m : h.modes()) {
        modes.push_back({{"k", m.mode.k},
                         {"ell", m.mode.ell},
                         {"knots_t", doubles_to_json(m.knots_t)},
                         {"values", doubles_to_json(m.values)},
                         {"monomial_coeffs", doubles_to_json(m.monomial)}});
    }
    doc["modes"] = std::move(modes);
    return doc.dump(1);
}

PolyharmonicInterpolant deserialize_interpolant(const std::string& text,
                                                std::shared_ptr<const HarmonicBasis> basis) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string("interpolant file: parse error: ") + e.what());
    }
    try {
        const json& hd = doc.at("header");
        const int n = hd.at("n").get<int>();
        const int N = hd.at("N").get<int>();
        const int k_max = hd.at("k_max").get<int>();
        const double R = std::stod(hd.at("R").get<std::string>());

        std::vector<ModePolynomial> modes(static_cast<size_t>(total_modes(n, k_max)));
        for (const auto& jm : doc.at("modes")) {
            ModeIndex mode{jm.at("k").get<int>(), jm.at("ell").get<int>()};
            ModePolynomial poly = fit_mode_polynomial_values(
                mode, doubles_from_json(jm.at("knots_t")), doubles_from_json(jm.at("values")));
            // keep the stored monomial coefficients bit-exact
            poly.monomial = doubles_from_json(jm.at("monomial_coeffs"));
            modes[static_cast<size_t>(mode_offset(n, mode.k, mode.ell))] = std::move(poly);
        }
        return PolyharmonicInterpolant(n, N, k_max, R, std::move(modes), std::move(basis));
    } catch (const json::exception& e) {
        throw InputError(std::string("interpolant file: bad structure: ") + e.what());
    }
}

void save_interpolant(const PolyharmonicInterpolant& h, const std::string& variant,
                      const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot open for writing: " + path.string());
    out << serialize_interpolant(h, variant) << "\n";
}

PolyharmonicInterpolant load_interpolant(const std::filesystem::path& path,
                                         std::shared_ptr<const HarmonicBasis> basis) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open: " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return deserialize_interpolant(buf.str(), std::move(basis));
}

CsvWriter::CsvWriter(std::vector<std::string> header) : columns_(header.size()) {
    for (size_t i = 0; i < header.size(); ++i) {
        if (i) body_ += ',';
        body_ += header[i];
    }
    body_ += '\n';
}

void CsvWriter::add_row(const std::vector<double>& values) {
    if (values.size() != columns_) throw InputError("CsvWriter: column count mismatch");
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) body_ += ',';
        body_ += format_double(values[i]);
    }
    body_ += '\n';
}

void CsvWriter::add_raw_row(const std::vector<std::string>& cells) {
    if (cells.size() != columns_) throw InputError("CsvWriter: column count mismatch");
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i) body_ += ',';
        body_ += cells[i];
    }
    body_ += '\n';
}

std::string CsvWriter::str() const { return body_; }

void CsvWriter::save(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot open for writing: " + path.string());
    out << body_;
}

std::string fnv1a_digest(const std::string& content) {
    uint64_t hash = 14695981039346656037ull;
    for (unsigned char c : content) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

std::string file_digest(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open: " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return fnv1a_digest(buf.str());
}

} // namespace polyharm
