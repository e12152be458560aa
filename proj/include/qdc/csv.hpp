// csv.hpp — CSV emission: header row, comma separators, 12 significant
// digits, LF line endings.

#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "qdc/decay.hpp"

namespace qdc::csv {

// %.12g rendering used for every floating-point cell
std::string format_double(double x);

void write_row(std::ostream& os, const std::vector<double>& cells);

// header "t,gamma,coherence"
void write_curve(std::ostream& os, const decay::DecoherenceCurve& curve);

// header "N,t,gamma,coherence"; N is the cycle index starting at 0
void write_stroboscopic(std::ostream& os, const decay::DecoherenceCurve& curve);

}  // namespace qdc::csv
