#include "gaussdistill/protocol.hpp"

#include <algorithm>
#include <cmath>

#include <gtest/gtest.h>

#include "gaussdistill/entanglement.hpp"
#include "gaussdistill/errors.hpp"
#include "gaussdistill/measurement.hpp"
#include "gaussdistill/sweep.hpp"
#include "oracles.hpp"

using namespace gaussdistill;

namespace {

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

ProtocolOutcome random_outcome(std::uint64_t i, const SqueezeRange& range = {}) {
  const auto seed = trial_seed(99, i);
  return run_protocol(random_instance(seed, 1.0, 5.0, range), seed);
}

}  // namespace

TEST(PrepareTwoCopies, CopyOrderLayout) {
  const auto g = prepare_two_copies({2.0, 1.0});
  EXPECT_EQ(g.layout(), (ModeLayout{"A1", "B1", "A2", "B2"}));
  EXPECT_EQ(g.entries().topLeftCorner(4, 4), two_mode_symmetric({2.0, 1.0}).entries());
  EXPECT_EQ(g.entries().topRightCorner(4, 4), Matrix::Zero(4, 4));
}

TEST(TransformCopies, PartyOrder) {
  const auto g = transform_copies(prepare_two_copies({2.0, 1.0}), SymplecticMatrix::identity(2),
                                  SymplecticMatrix::identity(2));
  EXPECT_EQ(g.layout(), (ModeLayout{"A1", "A2", "B1", "B2"}));
  EXPECT_EQ(measured_modes(g), (ModeIndices{1, 3}));
}

TEST(RunProtocol, IdentityInstanceIsExact) {
  const ProtocolInstance inst{{2.0, 1.5}};
  const auto out = run_protocol(inst, 17);
  EXPECT_LE(max_abs(out.final_state.entries() - two_mode_symmetric({2.0, 1.5}).entries()), 1e-12);
  EXPECT_EQ(out.final_state.layout(), (ModeLayout{"A1", "B1"}));
  EXPECT_NEAR(out.record.en_initial, 1.0, 1e-12);  // f = 0.25
  EXPECT_NEAR(out.record.en_final, 1.0, 1e-12);
  EXPECT_LE(std::abs(out.record.margin), 1e-12);
  EXPECT_EQ(out.record.seed, 17u);
}

TEST(RunProtocol, RejectsInvalidInstance) {
  ProtocolInstance inst{{2.0, 2.0}};
  EXPECT_THROW(run_protocol(inst), DomainError);
  inst = ProtocolInstance{{2.0, 1.0}, SymplecticMatrix::identity(1)};
  EXPECT_THROW(run_protocol(inst), DomainError);
}

TEST(RunProtocol, FinalDeterminantIsSquaredInputDeterminant) {
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const auto out = random_outcome(i);
    const double a = out.record.a;
    const double c = out.record.c;
    const double want = std::pow(a * a - c * c, 2);
    EXPECT_NEAR(out.record.det_final / want, 1.0, 1e-6) << "instance " << i;
  }
}

TEST(RunProtocol, DeterminantAgreesWithMaskedRatio) {
  for (std::uint64_t i = 0; i < 300; ++i) {
    const auto out = random_outcome(i);
    const std::string order[] = {"A1", "B1", "A2", "B2"};
    const double want =
        oracle::homodyne_det_ratio(reorder_modes(out.transformed, order).entries());
    EXPECT_NEAR(out.record.det_final / want, 1.0, 1e-8) << "instance " << i;
  }
}

TEST(RunProtocol, LocalDeterminantsStayBelowInput) {
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const auto out = random_outcome(i);
    const double a2 = out.record.a * out.record.a;
    EXPECT_LE(out.record.det_a, a2 + 1e-8) << "instance " << i;
    EXPECT_LE(out.record.det_b, a2 + 1e-8) << "instance " << i;
  }
}

TEST(RunProtocol, IntermediateStatesAreValid) {
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const auto out = random_outcome(i);
    ASSERT_GE(min_uncertainty_eigenvalue(out.transformed.entries()), -1e-9) << "instance " << i;
    ASSERT_GE(min_uncertainty_eigenvalue(out.final_state.entries()), -1e-9) << "instance " << i;
  }
}

TEST(RunProtocol, RecordMatchesIndependentSpectrum) {
  for (std::uint64_t i = 0; i < 300; ++i) {
    const auto out = random_outcome(i);
    EXPECT_NEAR(out.record.en_final, oracle::log_negativity_from_spectrum(out.final_state.entries()),
                1e-8)
        << "instance " << i;
    EXPECT_NEAR(out.record.en_initial,
                oracle::log_negativity_from_spectrum(
                    two_mode_symmetric({out.record.a, out.record.c}).entries()),
                1e-8);
  }
}

TEST(RunProtocol, NoGainAndEveryChainLinkHolds) {
  for (std::uint64_t i = 0; i < 2000; ++i) {
    const auto out = random_outcome(i);
    EXPECT_LE(out.record.margin, 1e-7) << "instance " << i;
    const auto slack = chain_slack(out.record);
    EXPECT_GE(slack.f_minus_g_final, -1e-9) << "instance " << i;
    EXPECT_GE(slack.g_final_minus_g_initial, -1e-9) << "instance " << i;
    EXPECT_GE(slack.g_initial_vs_f_initial, -1e-9) << "instance " << i;
    EXPECT_EQ(slack.min(), std::min({slack.f_minus_g_final, slack.g_final_minus_g_initial,
                                     slack.g_initial_vs_f_initial}));
  }
}

TEST(RunProtocol, OrthogonalLocalOperationsAlsoNeverGain) {
  for (std::uint64_t i = 0; i < 500; ++i) {
    EXPECT_LE(random_outcome(i, {1.0, 1.0}).record.margin, 1e-7) << "instance " << i;
  }
}

TEST(MakeRecord, SeparableFlag) {
  const auto r = make_record({2.0, 0.5}, CovMatrix::vacuum(2), 3);
  EXPECT_TRUE(r.final_separable);
  EXPECT_EQ(r.en_final, 0.0);
  EXPECT_NEAR(r.f_initial, 2.25, 1e-12);
}

TEST(RandomInstance, DeterministicAndInRange) {
  for (std::uint64_t s = 0; s < 200; ++s) {
    const auto inst = random_instance(s, 1.5, 3.0, {});
    EXPECT_GE(inst.params.a, 1.5);
    EXPECT_LE(inst.params.a, 3.0);
    EXPECT_NO_THROW(inst.validate());
    const auto again = random_instance(s, 1.5, 3.0, {});
    EXPECT_EQ(inst.params.c, again.params.c);
    EXPECT_EQ(inst.s_a.matrix(), again.s_a.matrix());
    EXPECT_NE(inst.s_a.matrix(), inst.s_b.matrix());
  }
}
