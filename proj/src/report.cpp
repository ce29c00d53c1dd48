#include "gaussdistill/report.hpp"

#include <cstdio>
#include <ostream>

namespace gaussdistill {

std::string format_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", kPrintDigits, value);
  return buf;
}

std::string csv_row(const SweepRecord& r) {
  std::string row = std::to_string(r.seed);
  for (double v : {r.a, r.c, r.en_initial, r.en_final, r.det_final, r.det_a, r.det_b, r.f_final,
                   r.g_final, r.margin}) {
    row += ',';
    row += format_number(v);
  }
  return row;
}

void write_csv(std::ostream& out, const std::vector<SweepRecord>& records) {
  out << kCsvHeader << '\n';
  for (const auto& r : records) out << csv_row(r) << '\n';
}

nlohmann::json summary_json(const SweepSummary& s) {
  return {{"trials", s.trials}, {"max_margin", s.max_margin}, {"pass", s.pass},
          {"tolerance", s.tolerance}};
}

nlohmann::json record_json(const SweepRecord& r) {
  return {{"seed", r.seed},           {"a", r.a},
          {"c", r.c},                 {"en_initial", r.en_initial},
          {"en_final", r.en_final},   {"det_final", r.det_final},
          {"det_a", r.det_a},         {"det_b", r.det_b},
          {"f_final", r.f_final},     {"g_final", r.g_final},
          {"margin", r.margin},       {"final_separable", r.final_separable}};
}

nlohmann::json lemma_json(const LemmaReport& r) {
  return {{"name", r.name},           {"trials", r.trials},
          {"max_deviation", r.max_deviation}, {"worst_value", r.worst_value},
          {"tolerance", r.tolerance}, {"pass", r.pass}};
}

nlohmann::json optimize_json(const OptimizeResult& result) {
  const auto flat = result.flat_params();
  return {{"best", record_json(result.best)},
          {"best_margin", result.best.margin},
          {"params", std::vector<double>(flat.begin(), flat.end())},
          {"best_restart", result.best_restart},
          {"converged", result.converged},
          {"restarts", result.restarts},
          {"evaluations", result.evaluations},
          {"tolerance", kOptimizerTol},
          {"pass", result.best.margin <= kOptimizerTol}};
}

}  // namespace gaussdistill
