#include "qdc/csv.hpp"

#include <cstdio>

namespace qdc::csv {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

void write_row(std::ostream& os, const std::vector<double>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i > 0) os << ',';
        os << format_double(cells[i]);
    }
    os << '\n';
}

void write_curve(std::ostream& os, const decay::DecoherenceCurve& curve) {
    os << "t,gamma,coherence\n";
    for (const auto& s : curve.samples) write_row(os, {s.t, s.gamma, s.coherence});
}

void write_stroboscopic(std::ostream& os, const decay::DecoherenceCurve& curve) {
    os << "N,t,gamma,coherence\n";
    for (size_t n = 0; n < curve.samples.size(); ++n) {
        const auto& s = curve.samples[n];
        write_row(os, {static_cast<double>(n), s.t, s.gamma, s.coherence});
    }
}

}  // namespace qdc::csv
