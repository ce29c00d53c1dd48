#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "gaussdistill/lemmas.hpp"
#include "gaussdistill/optimizer.hpp"
#include "gaussdistill/sweep.hpp"

namespace gaussdistill {

inline constexpr int kPrintDigits = 12;

inline constexpr const char* kCsvHeader =
    "seed,a,c,en_initial,en_final,det_final,det_a,det_b,f_final,g_final,margin";

/// Number formatted with 12 significant digits ("%.12g").
std::string format_number(double value);

/// Header line plus one row per record, '\n' line endings.
void write_csv(std::ostream& out, const std::vector<SweepRecord>& records);
std::string csv_row(const SweepRecord& record);

/// {"trials": n, "max_margin": x, "pass": bool, "tolerance": t}
nlohmann::json summary_json(const SweepSummary& summary);

nlohmann::json record_json(const SweepRecord& record);
nlohmann::json lemma_json(const LemmaReport& report);
nlohmann::json optimize_json(const OptimizeResult& result);

}  // namespace gaussdistill
