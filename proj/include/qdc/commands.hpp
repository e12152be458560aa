// commands.hpp — Command implementations behind the CLI front end. Each
// returns a process exit code: 0 success/verified, 1 verification failed,
// 2 config error, 3 numerical failure.

#pragma once

#include <functional>
#include <ostream>
#include <string>

#include "qdc/config.hpp"

namespace qdc::cli {

inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kConfigErrorCode = 2;
inline constexpr int kNumericalFailure = 3;

// Free-decay coherence curve to CSV (columns t, gamma, coherence).
int cmd_free_decay(const RunConfig& cfg, std::ostream& log);

// Stroboscopic pulsed series to CSV (columns N, t, gamma, coherence).
int cmd_pulsed(const RunConfig& cfg, std::ostream& log);

// Zeroth-order decoupling verification of a sequence text against the given
// coupling axes; exits 0 iff every requested axis is decoupled.
int cmd_verify_seq(const std::string& sequence_text, const std::string& axes, std::ostream& log);

// Analytic-vs-exact agreement over the standard oracle cases (or a single
// custom discrete case when the config provides bath modes and exact.n_max),
// with convergence-scan evidence. PASS threshold 1e-4.
int cmd_exact_compare(const RunConfig& cfg, std::ostream& log);

// Suppression sweep at fixed end time: CSV plus fitted log-log slope.
int cmd_sweep(const RunConfig& cfg, std::ostream& log);

// Echo gain at a single target time.
int cmd_echo(const RunConfig& cfg, double t, std::ostream& log);

// Exception-to-exit-code wrapper used by the CLI main.
int run_guarded(const std::function<int()>& action, std::ostream& err);

}  // namespace qdc::cli
