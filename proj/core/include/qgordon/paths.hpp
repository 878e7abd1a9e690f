#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qgordon/laurent_poly.hpp"
#include "qgordon/report.hpp"

namespace qgordon {

/// A 0/1 sequence sigma_i..sigma_f with no two adjacent ones, drawn as a
/// lattice path with unit peaks. Peaks are the interior positions carrying a
/// one; their coordinates are the parts of the encoded partition.
class AdmissiblePath {
public:
    /// Throws std::invalid_argument unless values are 0/1 with no adjacent
    /// ones and nonempty.
    AdmissiblePath(std::int64_t start, std::vector<std::uint8_t> values);

    /// Build from peak coordinates on [i, f] with sigma_i = s, sigma_f = b.
    /// Throws std::invalid_argument on inadmissible peak sets.
    static AdmissiblePath from_peaks(std::int64_t i, std::int64_t f, int s, int b,
                                     const std::vector<std::int64_t>& peaks);

    std::int64_t start() const { return start_; }
    std::int64_t end() const { return start_ + static_cast<std::int64_t>(values_.size()) - 1; }
    const std::vector<std::uint8_t>& values() const { return values_; }
    std::uint8_t at(std::int64_t pos) const {
        return values_[static_cast<std::size_t>(pos - start_)];
    }

    /// Interior positions j (start < j < end) with sigma_j = 1.
    std::vector<std::int64_t> peaks() const;
    /// sum of j * sigma_j over interior positions; may be negative.
    std::int64_t weight() const;

private:
    std::int64_t start_;
    std::vector<std::uint8_t> values_;
};

/// All admissible paths on [i, f] with sigma_i = s, sigma_f = b and, when t
/// is given, exactly t peaks. Lexicographic in the value sequence. i > f is
/// an error. The single-vertex space (i = f) holds one path when s = b.
std::vector<AdmissiblePath> enumerate_paths(std::int64_t i, std::int64_t f, int s, int b,
                                            std::optional<std::int64_t> t = std::nullopt);

/// C_{s,b}(i,f) = sum over the path space of q^{weight}.
LaurentPoly path_gf(std::int64_t i, std::int64_t f, int s, int b,
                    std::optional<std::int64_t> t = std::nullopt);

/// The path-counting lemma against the algebraic sums: fixed peak count,
/// shifted interval, and the full f_{s,b} correspondence.
std::vector<VerificationReport> verify_path_lemma(std::int64_t L_max);

/// Concatenation at the origin and reflection through it, on the full grid
/// 0 <= M <= L <= L_max.
std::vector<VerificationReport> verify_decompositions(std::int64_t L_max);

/// ASCII rendering: peaks as "/\", flats as "_", with a labeled axis.
std::string render_path(const AdmissiblePath& p);

/// SVG rendering on a fixed grid: one lattice unit = 20px, x_px = 10 + 20*(j-i),
/// y_px = 30 - 20*sigma_j.
std::string render_path_svg(const AdmissiblePath& p);

}  // namespace qgordon
