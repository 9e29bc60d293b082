#pragma once

// All numerical tolerances live here; nothing else hard-codes a threshold.
namespace sepstates::tol {

inline constexpr double hermiticity = 1e-10;     // ||m - m^dag|| bound for "Hermitian" inputs
inline constexpr double orthonormal = 1e-10;     // basis-column orthonormality
inline constexpr double reconstruction = 1e-9;   // SVD / eig reconstruction residual
inline constexpr double trace_preserve = 1e-12;  // partial-trace trace drift
inline constexpr double rank_cut = 1e-10;        // relative singular-value cutoff for numerical rank
inline constexpr double state_norm = 1e-8;       // acceptable deviation from unit norm on load
inline constexpr double closure = 1e-9;          // ||sum A^dag A (x) B^dag B - I||
inline constexpr double inequality = 1e-9;       // slack floor for majorization-type inequalities
inline constexpr double projector = 1e-10;       // idempotency / annihilation residuals
inline constexpr double prune = 1e-12;           // default outcome-probability prune threshold
inline constexpr double spectrum = 1e-10;        // spectra agreement in cross-checks

}  // namespace sepstates::tol
