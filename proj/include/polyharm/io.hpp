#ifndef POLYHARM_IO_HPP
#define POLYHARM_IO_HPP

#include "polyharm/interp.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace polyharm {

// Doubles printed with 17 significant digits round-trip exactly.
std::string format_double(double v);

// Interpolant file: a JSON header {n, N, k_max, R, knot_variant} and
// per-mode records {k, ell, knots_t[], values[], monomial_coeffs[]}.
// Loading is bit-exact on all stored doubles.
std::string serialize_interpolant(const PolyharmonicInterpolant& h, const std::string& variant);
PolyharmonicInterpolant deserialize_interpolant(const std::string& text,
                                                std::shared_ptr<const HarmonicBasis> basis);

void save_interpolant(const PolyharmonicInterpolant& h, const std::string& variant,
                      const std::filesystem::path& path);
PolyharmonicInterpolant load_interpolant(const std::filesystem::path& path,
                                         std::shared_ptr<const HarmonicBasis> basis);

// Minimal CSV writer: header row first, floats at 17 significant digits.
class CsvWriter {
  public:
    explicit CsvWriter(std::vector<std::string> header);

    void add_row(const std::vector<double>& values);
    void add_raw_row(const std::vector<std::string>& cells);
    std::string str() const;
    void save(const std::filesystem::path& path) const;

  private:
    std::string body_;
    size_t columns_;
};

// FNV-1a 64-bit content digest, reported as 16 hex digits.
std::string fnv1a_digest(const std::string& content);
std::string file_digest(const std::filesystem::path& path);

} // namespace polyharm

#endif
