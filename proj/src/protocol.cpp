#include "gaussdistill/protocol.hpp"

#include <algorithm>
#include <cmath>

#include "gaussdistill/entanglement.hpp"
#include "gaussdistill/errors.hpp"
#include "gaussdistill/measurement.hpp"
#include "gaussdistill/rng.hpp"

namespace gaussdistill {

void ProtocolInstance::validate() const {
  params.validate();
  if (s_a.n_modes() != 2 || s_b.n_modes() != 2) {
    throw DomainError("protocol instance: S_A and S_B must be two-mode symplectics");
  }
}

double ChainSlack::min() const {
  return std::min({f_minus_g_final, g_final_minus_g_initial, g_initial_vs_f_initial});
}

ChainSlack chain_slack(const SweepRecord& r) {
  return {r.f_final - r.g_final, r.g_final - r.g_initial, -std::abs(r.g_initial - r.f_initial)};
}

CovMatrix prepare_two_copies(const SymmetricStateParams& params) {
  const CovMatrix copy1 = two_mode_symmetric(params, ModeLayout{modes::kA1, modes::kB1});
  const CovMatrix copy2 = two_mode_symmetric(params, ModeLayout{modes::kA2, modes::kB2});
  return direct_sum(copy1, copy2);
}

CovMatrix transform_copies(const CovMatrix& two_copies, const SymplecticMatrix& s_a,
                           const SymplecticMatrix& s_b) {
  const std::string party_order[] = {modes::kA1, modes::kA2, modes::kB1, modes::kB2};
  const CovMatrix party = reorder_modes(two_copies, party_order);
  return apply_symplectic(party, direct_sum(s_a, s_b));
}

ModeIndices measured_modes(const CovMatrix& party_ordered) {
  const std::string measured[] = {modes::kA2, modes::kB2};
  return party_ordered.layout().indices_of(measured);
}

SweepRecord make_record(const SymmetricStateParams& params, const CovMatrix& final_state,
                        std::uint64_t seed) {
  const CovMatrix initial = two_mode_symmetric(params);
  const auto inv_initial = LocalInvariants::of(initial);
  const auto inv_final = LocalInvariants::of(final_state);

  SweepRecord r;
  r.seed = seed;
  r.a = params.a;
  r.c = params.c;
  r.f_initial = f_value(inv_initial);
  r.g_initial = g_lower_bound(inv_initial);
  r.en_initial = log_negativity_from_f(r.f_initial);
  r.f_final = f_value(inv_final);
  r.g_final = g_lower_bound(inv_final);
  r.en_final = log_negativity_from_f(r.f_final);
  r.det_final = inv_final.det_full;
  r.det_a = inv_final.det_a;
  r.det_b = inv_final.det_b;
  r.margin = r.en_final - r.en_initial;
  r.final_separable = r.f_final >= 1.0;
  return r;
}

ProtocolOutcome run_protocol(const ProtocolInstance& instance, std::uint64_t seed) {
  instance.validate();
  CovMatrix two_copies = prepare_two_copies(instance.params);
  CovMatrix transformed = transform_copies(two_copies, instance.s_a, instance.s_b);
  const auto measured = measured_modes(transformed);
  CovMatrix final_state = homodyne(transformed, measured);
  SweepRecord record = make_record(instance.params, final_state, seed);
  return {std::move(two_copies), std::move(transformed), std::move(final_state), record};
}

ProtocolInstance random_instance(std::uint64_t trial_seed, double a_min, double a_max,
                                 const SqueezeRange& squeeze) {
  if (!(a_min >= 1.0) || !(a_min <= a_max) || !std::isfinite(a_max)) {
    throw DomainError("random_instance: a range must satisfy 1 <= a_min <= a_max < inf");
  }
  Rng rng(derive_seed(trial_seed, 0, 0));
  SymmetricStateParams params;
  params.a = rng.uniform(a_min, a_max);
  params.c = rng.uniform(0.0, params.c_max());
  return {params, random_symplectic(derive_seed(trial_seed, 1, 0), squeeze),
          random_symplectic(derive_seed(trial_seed, 2, 0), squeeze)};
}

}  // namespace gaussdistill
