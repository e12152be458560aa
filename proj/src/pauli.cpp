#include "qdc/pauli.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

namespace qdc::pauli {

// ----------------------------- Rational -------------------------------------

Rational::Rational(long long n, long long d) : num_(n), den_(d) {
    if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    const long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}
Rational Rational::operator-(const Rational& o) const {
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}
Rational Rational::operator*(const Rational& o) const {
    return Rational(num_ * o.num_, den_ * o.den_);
}
Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::invalid_argument("Rational: division by zero");
    return Rational(num_ * o.den_, den_ * o.num_);
}
std::strong_ordering Rational::operator<=>(const Rational& o) const {
    return num_ * o.den_ <=> o.num_ * den_;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
    size_t pos = 0;
    long long n = 0, d = 1;
    try {
        n = std::stoll(text, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("Rational: cannot parse '" + text + "'");
    }
    if (pos < text.size()) {
        if (text[pos] != '/')
            throw std::invalid_argument("Rational: cannot parse '" + text + "'");
        size_t pos2 = 0;
        const std::string denom = text.substr(pos + 1);
        try {
            d = std::stoll(denom, &pos2);
        } catch (const std::exception&) {
            throw std::invalid_argument("Rational: cannot parse '" + text + "'");
        }
        if (pos2 != denom.size() || d <= 0)
            throw std::invalid_argument("Rational: cannot parse '" + text + "'");
    }
    return Rational(n, d);
}

// ----------------------------- Pauli group ----------------------------------

char letter_char(Letter l) {
    switch (l) {
        case Letter::I: return 'I';
        case Letter::X: return 'X';
        case Letter::Y: return 'Y';
        case Letter::Z: return 'Z';
    }
    return '?';
}

namespace {
// product letter and i-exponent for letter * letter (row * column)
struct LetterProduct { Letter letter; int phase_i; };

constexpr LetterProduct kTable[4][4] = {
    // I                X                 Y                 Z
    {{Letter::I, 0}, {Letter::X, 0}, {Letter::Y, 0}, {Letter::Z, 0}},    // I *
    {{Letter::X, 0}, {Letter::I, 0}, {Letter::Z, 1}, {Letter::Y, 3}},    // X *
    {{Letter::Y, 0}, {Letter::Z, 3}, {Letter::I, 0}, {Letter::X, 1}},    // Y *
    {{Letter::Z, 0}, {Letter::Y, 1}, {Letter::X, 3}, {Letter::I, 0}},    // Z *
};
}  // namespace

PauliOp multiply(const PauliOp& a, const PauliOp& b) {
    const LetterProduct p = kTable[static_cast<int>(a.letter)][static_cast<int>(b.letter)];
    return PauliOp{(a.phase_i + b.phase_i + p.phase_i) % 4, p.letter};
}

PauliOp inverse(const PauliOp& p) {
    // letters are involutions, so only the phase inverts
    return PauliOp{(4 - p.phase_i) % 4, p.letter};
}

PauliOp conjugate_frame(const PauliOp& frame, const PauliOp& sigma) {
    if (sigma.phase_i != 0)
        throw std::invalid_argument("conjugate_frame: sigma must be a phaseless letter");
    return multiply(inverse(frame), multiply(sigma, frame));
}

// ----------------------------- Sequences ------------------------------------

Rational GateSequence::cycle_units() const {
    Rational total;
    for (const auto& d : durations) total = total + d;
    return total;
}

void GateSequence::validate() const {
    if (pulses.empty()) throw std::invalid_argument("GateSequence: needs at least one pulse");
    if (durations.size() != pulses.size() + 1)
        throw std::invalid_argument("GateSequence: durations must number pulses + 1");
    bool positive = false;
    for (const auto& d : durations) {
        if (d < Rational(0)) throw std::invalid_argument("GateSequence: negative duration");
        if (Rational(0) < d) positive = true;
    }
    if (!positive) throw std::invalid_argument("GateSequence: zero total duration");
    if (!(base_time > 0.0)) throw std::invalid_argument("GateSequence: base_time must be > 0");
}

std::vector<PauliOp> cumulative_frames(const GateSequence& seq) {
    std::vector<PauliOp> frames;
    frames.reserve(seq.pulses.size() + 1);
    frames.push_back(PauliOp{});
    for (const auto& p : seq.pulses) frames.push_back(multiply(p, frames.back()));
    return frames;
}

CyclicCheck is_cyclic(const GateSequence& seq) {
    const PauliOp full = cumulative_frames(seq).back();
    return CyclicCheck{full.letter == Letter::I, full.phase_i};
}

bool PauliCoeffs::all_zero() const {
    for (const auto& r : c)
        if (!r.is_zero()) return false;
    return true;
}

bool AverageReport::all_decoupled() const {
    for (const auto& a : couplings)
        if (!a.decoupled) return false;
    return true;
}

namespace {
PauliOp axis_letter(char axis) {
    switch (axis) {
        case 'x': return PauliOp{0, Letter::X};
        case 'y': return PauliOp{0, Letter::Y};
        case 'z': return PauliOp{0, Letter::Z};
        default: throw std::invalid_argument(std::string("unknown coupling axis '") + axis + "'");
    }
}

PauliCoeffs average_conjugations(const GateSequence& seq, const std::vector<PauliOp>& frames,
                                 const PauliOp& sigma, const Rational& total) {
    PauliCoeffs coeffs;
    for (size_t k = 0; k < seq.durations.size(); ++k) {
        const PauliOp conj = conjugate_frame(frames[k], sigma);
        const Rational sign = (conj.phase_i == 0) ? Rational(1) : Rational(-1);
        auto& slot = coeffs.c[static_cast<int>(conj.letter)];
        slot = slot + sign * seq.durations[k];
    }
    for (auto& r : coeffs.c) r = r / total;
    return coeffs;
}
}  // namespace

AverageReport zeroth_average(const GateSequence& seq, const std::string& axes) {
    seq.validate();
    const Rational total = seq.cycle_units();
    const auto frames = cumulative_frames(seq);
    const CyclicCheck cyc = is_cyclic(seq);

    AverageReport report;
    report.cyclic = cyc.cyclic;
    report.cycle_phase_i = cyc.phase_i;
    for (char axis : axes) {
        const PauliCoeffs coeffs = average_conjugations(seq, frames, axis_letter(axis), total);
        report.couplings.push_back(AxisAverage{axis, coeffs, coeffs.all_zero()});
    }
    report.system_term = average_conjugations(seq, frames, axis_letter('z'), total);
    return report;
}

namespace {
GateSequence bracketed_pair(double delta_t, Letter letter) {
    GateSequence seq;
    seq.durations = {Rational(1, 2), Rational(1), Rational(1, 2)};
    seq.pulses = {PauliOp{0, letter}, PauliOp{0, letter}};
    seq.base_time = delta_t;
    return seq;
}
}  // namespace

GateSequence build_cp(double delta_t) { return bracketed_pair(delta_t, Letter::X); }

GateSequence build_z_train(double delta_t) { return bracketed_pair(delta_t, Letter::Z); }

GateSequence build_xzxz(double delta_t) {
    GateSequence seq;
    seq.durations = {Rational(1), Rational(1), Rational(1), Rational(1), Rational(0)};
    seq.pulses = {PauliOp{0, Letter::X}, PauliOp{0, Letter::Z},
                  PauliOp{0, Letter::X}, PauliOp{0, Letter::Z}};
    seq.base_time = delta_t;
    return seq;
}

// ----------------------------- Grammar --------------------------------------

namespace {
std::string trim(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}
}  // namespace

GateSequence parse_sequence(const std::string& text, double base_time) {
    GateSequence seq;
    seq.base_time = base_time;

    std::vector<std::string> entries;
    size_t start = 0;
    while (true) {
        const size_t comma = text.find(',', start);
        entries.push_back(trim(text.substr(start, comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }

    bool expect_duration = true;
    for (const auto& entry : entries) {
        if (entry.size() < 3 || entry[1] != ':')
            throw std::invalid_argument("sequence: malformed entry '" + entry + "'");
        const std::string payload = entry.substr(2);
        if (entry[0] == 'd') {
            if (!expect_duration)
                throw std::invalid_argument("sequence: adjacent durations (merge or insert a pulse)");
            seq.durations.push_back(Rational::parse(payload));
            expect_duration = false;
        } else if (entry[0] == 'p') {
            if (expect_duration)
                throw std::invalid_argument("sequence: adjacent pulses (insert d:0 between them)");
            if (payload.size() != 1)
                throw std::invalid_argument("sequence: pulse axis must be one of x, y, z");
            seq.pulses.push_back(axis_letter(payload[0]));
            expect_duration = true;
        } else {
            throw std::invalid_argument("sequence: entries must start with 'd:' or 'p:'");
        }
    }
    if (expect_duration)
        throw std::invalid_argument("sequence: must end with a duration (use d:0)");
    seq.validate();
    return seq;
}

std::string print_sequence(const GateSequence& seq) {
    std::string out;
    for (size_t k = 0; k < seq.durations.size(); ++k) {
        if (k > 0) out += ',';
        out += "d:" + seq.durations[k].str();
        if (k < seq.pulses.size()) {
            out += ",p:";
            out += static_cast<char>(std::tolower(letter_char(seq.pulses[k].letter)));
        }
    }
    return out;
}

}  // namespace qdc::pauli
