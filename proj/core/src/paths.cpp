#include "qgordon/paths.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qgordon/qalgebra.hpp"
#include "qgordon/rrpoly.hpp"
#include "verify_util.hpp"

namespace qgordon {

AdmissiblePath::AdmissiblePath(std::int64_t start, std::vector<std::uint8_t> values)
    : start_(start), values_(std::move(values)) {
    if (values_.empty()) throw std::invalid_argument("AdmissiblePath: empty value sequence");
    for (std::size_t k = 0; k < values_.size(); ++k) {
        if (values_[k] > 1) throw std::invalid_argument("AdmissiblePath: entries must be 0/1");
        if (k > 0 && values_[k] == 1 && values_[k - 1] == 1) {
            throw std::invalid_argument("AdmissiblePath: adjacent ones");
        }
    }
}

AdmissiblePath AdmissiblePath::from_peaks(std::int64_t i, std::int64_t f, int s, int b,
                                          const std::vector<std::int64_t>& peaks) {
    if (i > f) throw std::invalid_argument("AdmissiblePath: i > f");
    std::vector<std::uint8_t> values(static_cast<std::size_t>(f - i + 1), 0);
    values.front() = static_cast<std::uint8_t>(s);
    values.back() = static_cast<std::uint8_t>(b);
    for (std::int64_t p : peaks) {
        if (p <= i || p >= f) throw std::invalid_argument("peak outside the interior");
        values[static_cast<std::size_t>(p - i)] = 1;
    }
    return AdmissiblePath(i, std::move(values));  // adjacency recheck happens here
}

std::vector<std::int64_t> AdmissiblePath::peaks() const {
    std::vector<std::int64_t> out;
    for (std::int64_t j = start_ + 1; j < end(); ++j) {
        if (at(j) == 1) out.push_back(j);
    }
    return out;
}

std::int64_t AdmissiblePath::weight() const {
    std::int64_t w = 0;
    for (std::int64_t j = start_ + 1; j < end(); ++j) {
        if (at(j) == 1) w += j;
    }
    return w;
}

std::vector<AdmissiblePath> enumerate_paths(std::int64_t i, std::int64_t f, int s, int b,
                                            std::optional<std::int64_t> t) {
    if (i > f) throw std::invalid_argument("enumerate_paths: i > f");
    if ((s != 0 && s != 1) || (b != 0 && b != 1)) {
        throw std::invalid_argument("enumerate_paths: endpoint labels must be 0/1");
    }
    std::vector<AdmissiblePath> out;
    const std::size_t len = static_cast<std::size_t>(f - i + 1);
    if (len == 1) {
        if (s == b && (!t || *t == 0)) out.emplace_back(i, std::vector<std::uint8_t>{static_cast<std::uint8_t>(s)});
        return out;
    }
    std::vector<std::uint8_t> sigma(len, 0);
    sigma[0] = static_cast<std::uint8_t>(s);
    // Depth-first over positions, trying 0 before 1 for lexicographic order.
    auto extend = [&](auto&& self, std::size_t pos, std::int64_t peaks_so_far) -> void {
        if (t && peaks_so_far > *t) return;
        if (pos == len - 1) {
            if (sigma[pos - 1] == 1 && b == 1) return;
            if (t && peaks_so_far != *t) return;
            sigma[pos] = static_cast<std::uint8_t>(b);
            out.emplace_back(i, sigma);
            return;
        }
        for (std::uint8_t v = 0; v <= 1; ++v) {
            if (v == 1 && sigma[pos - 1] == 1) continue;
            sigma[pos] = v;
            self(self, pos + 1, peaks_so_far + v);
        }
        sigma[pos] = 0;
    };
    extend(extend, 1, 0);
    return out;
}

LaurentPoly path_gf(std::int64_t i, std::int64_t f, int s, int b, std::optional<std::int64_t> t) {
    LaurentPoly gf;
    for (const AdmissiblePath& p : enumerate_paths(i, f, s, b, t)) {
        gf += LaurentPoly::monomial(1, p.weight());
    }
    return gf;
}

std::vector<VerificationReport> verify_path_lemma(std::int64_t L_max) {
    if (L_max < 0) throw std::invalid_argument("verify_path_lemma: L_max must be >= 0");
    std::vector<VerificationReport> reports;
    {
        detail::GridChecker checker("eq-2.1", "0<=L<=" + std::to_string(L_max) + "; 0<=2t<=L");
        for (std::int64_t L = 0; L <= L_max; ++L) {
            for (std::int64_t t = 0; 2 * t <= L; ++t) {
                checker.check("L=" + std::to_string(L) + ",t=" + std::to_string(t),
                              q_binomial_tb(L - t, t).shifted(t * t), path_gf(0, L, 0, 0, t));
            }
        }
        reports.push_back(checker.finish());
    }
    {
        detail::GridChecker checker("eq-2.2",
                                    "0<=M<=L<=" + std::to_string(L_max) + "; 0<=2t<=L");
        for (std::int64_t L = 0; L <= L_max; ++L) {
            for (std::int64_t M = 0; M <= L; ++M) {
                for (std::int64_t t = 0; 2 * t <= L; ++t) {
                    checker.check(
                        "L=" + std::to_string(L) + ",M=" + std::to_string(M) + ",t=" + std::to_string(t),
                        q_binomial_tb(L - t, t).shifted(t * t - M * t), path_gf(-M, L - M, 0, 0, t));
                }
            }
        }
        reports.push_back(checker.finish());
    }
    {
        detail::GridChecker checker("eq-2.5",
                                    "0<=M<=L<=" + std::to_string(L_max) + "; s,b in {0,1}");
        checker.set_note("empty-interval cell L=0,s=b=1 skipped: the single-vertex space has "
                         "C=1 but f_{1,1}(0,M)=0");
        for (std::int64_t L = 0; L <= L_max; ++L) {
            for (std::int64_t M = 0; M <= L; ++M) {
                for (int s = 0; s <= 1; ++s) {
                    for (int b = 0; b <= 1; ++b) {
                        if (L == 0 && s == 1 && b == 1) continue;
                        checker.check("L=" + std::to_string(L) + ",M=" + std::to_string(M) +
                                          ",s=" + std::to_string(s) + ",b=" + std::to_string(b),
                                      f_shifted(s, b, L, M), path_gf(-M, L - M, s, b));
                    }
                }
            }
        }
        reports.push_back(checker.finish());
    }
    return reports;
}

std::vector<VerificationReport> verify_decompositions(std::int64_t L_max) {
    if (L_max < 0) throw std::invalid_argument("verify_decompositions: L_max must be >= 0");
    std::vector<VerificationReport> reports;
    {
        detail::GridChecker checker("eq-2.8",
                                    "0<=M<=L<=" + std::to_string(L_max) + "; s,b in {0,1}");
        for (std::int64_t L = 0; L <= L_max; ++L) {
            for (std::int64_t M = 0; M <= L; ++M) {
                for (int s = 0; s <= 1; ++s) {
                    for (int b = 0; b <= 1; ++b) {
                        LaurentPoly rhs;
                        for (int sp = 0; sp <= 1; ++sp) {
                            rhs += path_gf(-M, 0, s, sp) * path_gf(0, L - M, sp, b);
                        }
                        checker.check("L=" + std::to_string(L) + ",M=" + std::to_string(M) +
                                          ",s=" + std::to_string(s) + ",b=" + std::to_string(b),
                                      path_gf(-M, L - M, s, b), rhs);
                    }
                }
            }
        }
        reports.push_back(checker.finish());
    }
    {
        detail::GridChecker checker("eq-2.10",
                                    "0<=M<=" + std::to_string(L_max) + "; s,s' in {0,1}");
        for (std::int64_t M = 0; M <= L_max; ++M) {
            for (int s = 0; s <= 1; ++s) {
                for (int sp = 0; sp <= 1; ++sp) {
                    checker.check("M=" + std::to_string(M) + ",s=" + std::to_string(s) +
                                      ",s'=" + std::to_string(sp),
                                  path_gf(-M, 0, s, sp), invert_variable(path_gf(0, M, sp, s)));
                }
            }
        }
        reports.push_back(checker.finish());
    }
    return reports;
}

std::string render_path(const AdmissiblePath& p) {
    const std::int64_t i = p.start(), f = p.end();
    const std::size_t steps = static_cast<std::size_t>(f - i);
    if (steps == 0) {
        return "(" + std::to_string(i) + "; " + std::to_string(static_cast<int>(p.at(i))) + ")\n";
    }
    std::string top(steps, ' '), base(steps, ' ');
    for (std::size_t k = 0; k < steps; ++k) {
        const std::uint8_t a = p.values()[k], b = p.values()[k + 1];
        if (a == 0 && b == 0) base[k] = '_';
        else if (a == 0 && b == 1) top[k] = '/';
        else top[k] = '\\';  // 1 -> 0; adjacent ones cannot occur
    }
    // Axis: ticks under the endpoints and every vertex divisible by 5.
    std::string axis(steps + 1, '-');
    std::string labels(steps + 1, ' ');
    std::int64_t last_label_end = -1;
    for (std::int64_t j = i; j <= f; ++j) {
        if (j != i && j != f && j % 5 != 0) continue;
        const std::size_t col = static_cast<std::size_t>(j - i);
        axis[col] = '+';
        const std::string text = std::to_string(j);
        if (static_cast<std::int64_t>(col) > last_label_end) {
            if (labels.size() < col + text.size()) labels.resize(col + text.size(), ' ');
            labels.replace(col, text.size(), text);
            last_label_end = static_cast<std::int64_t>(col + text.size());
        }
    }
    std::ostringstream out;
    out << top << "\n" << base << "\n" << axis << "\n" << labels << "\n";
    return out.str();
}

std::string render_path_svg(const AdmissiblePath& p) {
    const std::int64_t i = p.start(), f = p.end();
    const std::int64_t unit = 20;
    const std::int64_t width = (f - i) * unit + 20;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"60\" viewBox=\"0 0 " << width << " 60\">\n";
    out << "  <line x1=\"10\" y1=\"30\" x2=\"" << width - 10
        << "\" y2=\"30\" stroke=\"#999\" stroke-width=\"1\"/>\n";
    out << "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
    for (std::int64_t j = i; j <= f; ++j) {
        if (j != i) out << " ";
        out << 10 + (j - i) * unit << "," << 30 - unit * static_cast<std::int64_t>(p.at(j));
    }
    out << "\"/>\n";
    for (std::int64_t j = i; j <= f; ++j) {
        if (j != i && j != f && j % 5 != 0) continue;
        out << "  <text x=\"" << 10 + (j - i) * unit
            << "\" y=\"45\" font-size=\"10\" text-anchor=\"middle\">" << j << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace qgordon
