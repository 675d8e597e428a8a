#pragma once

#include "nsmild/config.hpp"
#include "nsmild/report.hpp"

namespace nsmild::checks {

// Acceptance criteria, each returning the records it contributes (first
// record carries the criterion id and overall pass flag).  Parameters are
// pinned to the acceptance settings; the bool/quick variants shrink scales
// for smoke runs only where the criterion does not pin them.

VerificationReport criterion_operator_algebra();    // 01
VerificationReport criterion_heat_reduction();      // 02
VerificationReport criterion_duhamel();             // 03
VerificationReport criterion_weak_consistency();    // 04
VerificationReport criterion_kato();                // 05
VerificationReport criterion_g_decay();             // 06
VerificationReport criterion_h_gaussian();          // 07
VerificationReport criterion_bessel();              // 08
VerificationReport criterion_heat_shift();          // 09
VerificationReport criterion_translation_bound();   // 10
VerificationReport criterion_smoothing();           // 11
VerificationReport criterion_regularity();          // 12
// 13 (determinism) needs to re-run a pipeline twice; implemented on top of
// run_experiment by the caller (acceptance binary / cli).

// Experiment pipelines behind the cli kinds.
VerificationReport run_experiment(const ExperimentConfig& cfg);

} // namespace nsmild::checks
