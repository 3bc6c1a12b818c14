#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "wz/accelerate.hpp"

namespace wz {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// One run of the pipeline on a base and pattern.
struct PipelineRun {
  WZPair pair;
  ClosedSeries series;
  Real value;  // sum_n G(n, 0)
  IdentityReport identity;
  bool certified = false;
  bool normalized = false;  // zeilberger on F returns N - 1
};

PipelineRun run_pipeline(const DougallBase& base, const Pattern& pattern, const PrecisionContext& ctx,
                         int max_order = 3, Exec exec = Exec::parallel);

/// Pipeline report without fixture targets.
nlohmann::json to_json(const PipelineRun& run, int digits);

struct Fixture {
  int id = 0;
  DougallBase base;
  Pattern pattern;
};

/// The four shipped examples 42, 45, 50 and 53.
const std::vector<Fixture>& fixtures();
/// Throws Error for an unknown id.
const Fixture& fixture(int id);

struct FixtureRun {
  int id = 0;
  nlohmann::json report;
  std::vector<Check> checks;
  std::vector<std::string> notes;

  bool passed() const;
};

struct RunOptions {
  std::optional<long> shift;
  std::vector<long> constancy;
};

/// Full pipeline for a fixture with checks against its target constants.
FixtureRun run_fixture(int id, const PrecisionContext& ctx, const RunOptions& opt = {}, int max_order = 3,
                       Exec exec = Exec::parallel);

/// Checks that apply to any pair: certification, normalization, the
/// summation identity, and the optional shift and constancy evaluations.
std::vector<Check> generic_checks(const PipelineRun& run, const PrecisionContext& ctx, const RunOptions& opt,
                                  nlohmann::json& report, Exec exec = Exec::parallel);

nlohmann::json to_json(const Check& c);

}  // namespace wz
