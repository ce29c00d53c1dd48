#pragma once

#include <cstdint>

#include "gaussdistill/gaussian_state.hpp"
#include "gaussdistill/symplectic.hpp"

namespace gaussdistill {

/// Tolerance ladder: one decade of slack per composition layer.
inline constexpr double kChainTol = 1e-9;      // link-by-link proof chain
inline constexpr double kLemma3Tol = 1e-6;     // relative, determinant invariance
inline constexpr double kLemma4Tol = 1e-8;     // absolute, principal-block bound
inline constexpr double kLemma5Tol = 1e-10;    // absolute, f >= g
inline constexpr double kTheoremTol = 1e-7;    // full pipeline margin
inline constexpr double kOptimizerTol = 1e-5;  // optimizer acceptance

/// Mode labels. Copy order is (A1, B1, A2, B2); party order is (A1, A2, B1, B2).
namespace modes {
inline const std::string kA1 = "A1";
inline const std::string kA2 = "A2";
inline const std::string kB1 = "B1";
inline const std::string kB2 = "B2";
}  // namespace modes

/// Two copies of the symmetric state and one local symplectic per party,
/// S_A acting on (A1, A2) and S_B on (B1, B2).
struct ProtocolInstance {
  SymmetricStateParams params;
  SymplecticMatrix s_a = SymplecticMatrix::identity(2);
  SymplecticMatrix s_b = SymplecticMatrix::identity(2);

  /// Throws DomainError if params or the 4x4 symplectics are invalid.
  void validate() const;
};

/// One protocol run. margin = en_final - en_initial; the no-go result says
/// margin <= 0 up to roundoff.
struct SweepRecord {
  std::uint64_t seed = 0;
  double a = 0.0;
  double c = 0.0;
  double en_initial = 0.0;
  double en_final = 0.0;
  double det_final = 0.0;  // det of the final two-mode state
  double det_a = 0.0;      // det of its A1 block
  double det_b = 0.0;      // det of its B1 block
  double f_final = 0.0;
  double g_final = 0.0;
  double margin = 0.0;

  double f_initial = 0.0;
  double g_initial = 0.0;
  /// f_final >= 1: the final state is not entangled and the bound holds trivially.
  bool final_separable = false;
};

/// Slack of each link in f(final) >= g(final) >= g(initial) == f(initial).
/// Every entry >= -kChainTol is the expected outcome.
struct ChainSlack {
  double f_minus_g_final;
  double g_final_minus_g_initial;
  double g_initial_vs_f_initial;  // -|g0 - f0|

  double min() const;
};
ChainSlack chain_slack(const SweepRecord& record);

/// Intermediate states, kept for inspection and validity checks.
struct ProtocolOutcome {
  CovMatrix two_copies;   // copy order (A1, B1, A2, B2)
  CovMatrix transformed;  // party order (A1, A2, B1, B2) after S_A (+) S_B
  CovMatrix final_state;  // modes (A1, B1) after X homodyne on A2, B2
  SweepRecord record;
};

/// G0 (+)_{1,2} G0 in copy order.
CovMatrix prepare_two_copies(const SymmetricStateParams& params);

/// (S_A (+)_{A,B} S_B) applied to the two copies, in party order.
CovMatrix transform_copies(const CovMatrix& two_copies, const SymplecticMatrix& s_a,
                           const SymplecticMatrix& s_b);

/// Modes A2 and B2 of a party-ordered state.
ModeIndices measured_modes(const CovMatrix& party_ordered);

/// Full pipeline: two copies, local symplectics, X homodyne on A2 and B2.
/// seed is copied into the record unchanged.
ProtocolOutcome run_protocol(const ProtocolInstance& instance, std::uint64_t seed = 0);

/// Record fields computed from an input parameter set and a final two-mode state.
SweepRecord make_record(const SymmetricStateParams& params, const CovMatrix& final_state,
                        std::uint64_t seed);

/// Random sweep instance: a uniform in [a_min, a_max], c uniform in
/// [0, sqrt(a^2 - 1)], S_A and S_B from random_symplectic on derived seeds.
ProtocolInstance random_instance(std::uint64_t trial_seed, double a_min, double a_max,
                                 const SqueezeRange& squeeze);

}  // namespace gaussdistill
