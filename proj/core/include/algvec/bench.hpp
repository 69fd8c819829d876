#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "algvec/index.hpp"
#include "algvec/op_counter.hpp"
#include "algvec/rational.hpp"
#include "algvec/vector.hpp"

namespace algvec::bench {

/// Two random vectors in a `dim`-dimensional space with controlled overlap.
struct BenchScenario {
  std::size_t dim = 100;
  std::size_t support_a = 3;
  std::size_t support_b = 2;
  double overlap_fraction = 0.5;
  std::size_t repetitions = 30;
  std::uint64_t seed = 42;
};

/// Labels shared by both supports: round(overlap * min(support_a, support_b)).
std::size_t shared_labels(const BenchScenario& s);

/// Throws InvalidScenario unless dim > 0, repetitions > 0,
/// overlap in [0, 1] and |L_a ∪ L_b| <= dim.
void validate(const BenchScenario& s);

struct ScenarioInputs {
  AlgebraicVector<IntIndex, Rational> a;
  AlgebraicVector<IntIndex, Rational> b;
};

/// Deterministic in the seed. Coefficients are drawn from
/// {±1/2, ±1, ±2, ±3}, so shared labels cancel with probability 1/8.
ScenarioInputs make_inputs(const BenchScenario& s);

/// Scalar used for the `scale` op.
Rational scale_factor();

struct ReportRow {
  std::size_t dim = 0;
  std::size_t support_a = 0;
  std::size_t support_b = 0;
  std::string repr;  // "algebraic" | "dense"
  std::string op;    // "add" | "scale"
  OpCounter counts;
  std::uint64_t median_ns = 0;
};

/**
 * Runs add and scale in both representations.
 *
 * Counts come from one instrumented run; median_ns from `repetitions`
 * uninstrumented runs. Every call re-checks that the algebraic add touched at
 * most |L_a| + |L_b| entries, that the dense one touched exactly dim, and
 * that both representations agree through to_dense (std::logic_error
 * otherwise). Everything except the timings is a function of the scenario.
 */
std::vector<ReportRow> run_scenario(const BenchScenario& s);

inline constexpr std::string_view kReportHeader =
    "dim,support_a,support_b,repr,op,entries_touched,field_adds,field_muls,"
    "median_ns";

/// CSV with kReportHeader and one line per row.
std::string emit_report(std::span<const ReportRow> rows);

struct SweepConfig {
  std::vector<std::size_t> dims;
  std::vector<std::size_t> supports;
  double overlap_fraction = 0.5;
  std::size_t repetitions = 30;
  std::uint64_t seed = 42;
};

/// One scenario per (dim, support) with support_a == support_b == support.
/// Combinations that do not fit in dim are returned in `skipped`.
struct SweepPlan {
  std::vector<BenchScenario> scenarios;
  std::vector<BenchScenario> skipped;
};

SweepPlan plan_sweep(const SweepConfig& config);

}  // namespace algvec::bench
