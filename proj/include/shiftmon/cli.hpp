#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "shiftmon/error.hpp"
#include "shiftmon/presentations.hpp"

namespace shiftmon::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInvalidInput = 1,
  kExitBudgetExceeded = 2,
  kExitVerificationFailed = 3,
};

int exit_code_for(ErrorCode code);

// Parses argv and dispatches to a subcommand; never throws.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

enum class Format { kJson, kText };
enum class Strategy { kDirect, kShift, kAuto };

struct MinpresOptions {
  std::vector<Int> gens;
  Strategy strategy = Strategy::kAuto;
  bool emit_all = false;
  std::size_t cap = 1000;
  Format format = Format::kJson;
  bool paranoid = false;
};

struct MinpresOutcome {
  Presentation presentation;
  Strategy used = Strategy::kDirect;
};

// Computes without printing; throws shiftmon::Error.
MinpresOutcome compute_minpres(const MinpresOptions& opts);
int run_minpres_command(const MinpresOptions& opts, std::ostream& out,
                        std::ostream& err);

enum class SurveyMetric { kBetti, kCatenary, kMinpresSize, kDelta };

struct SurveyOptions {
  std::vector<Int> r;
  Int n_from = 1;
  Int n_to = 0;
  SurveyMetric metric = SurveyMetric::kBetti;
  std::string out_path = "-";
  unsigned threads = 1;
};

// One CSV line. `value` is empty for skipped/error rows, which carry `note`.
struct SurveyRow {
  Int n = 0;
  std::string metric;
  std::optional<Int> value;
  std::string note;
};

std::vector<SurveyRow> survey_rows(const SurveyOptions& opts);
void write_survey_csv(const std::vector<SurveyRow>& rows, std::ostream& os);
int run_survey_command(const SurveyOptions& opts, std::ostream& out,
                       std::ostream& err);

struct BenchOptions {
  std::vector<Int> r;
  Int n = 0;
  int repeats = 3;
  double timeout_secs = 60.0;
};

struct BenchLeg {
  bool completed = false;
  bool timed_out = false;
  double median_ms = 0.0;
  std::optional<Presentation> output;
};

struct BenchResult {
  BenchLeg direct;
  BenchLeg accelerated;
  std::optional<bool> outputs_equal;
};

BenchResult run_bench(const BenchOptions& opts);
int run_bench_command(const BenchOptions& opts, std::ostream& out,
                      std::ostream& err);

struct VerifyOptions {
  std::vector<Int> gens;
  std::string presentation_path;
  std::optional<Int> bound;
};

int run_verify_command(const VerifyOptions& opts, std::ostream& out,
                       std::ostream& err);

}  // namespace shiftmon::cli
