#include "algvec/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include "algvec/dense.hpp"
#include "algvec/errors.hpp"

namespace algvec::bench {

namespace {

using Vec = AlgebraicVector<IntIndex, Rational>;

// Floyd's algorithm: k distinct labels from 1..n in O(k).
std::vector<std::int64_t> sample_labels(std::size_t n, std::size_t k,
                                        std::mt19937_64& rng) {
  std::unordered_set<std::int64_t> chosen;
  chosen.reserve(k);
  for (std::size_t j = n - k + 1; j <= n; ++j) {
    std::uniform_int_distribution<std::int64_t> pick(1, static_cast<std::int64_t>(j));
    std::int64_t t = pick(rng);
    if (!chosen.insert(t).second) chosen.insert(static_cast<std::int64_t>(j));
  }
  std::vector<std::int64_t> labels(chosen.begin(), chosen.end());
  // unordered_set order is unspecified; sort before shuffling for determinism.
  std::sort(labels.begin(), labels.end());
  std::shuffle(labels.begin(), labels.end(), rng);
  return labels;
}

Rational draw_coefficient(std::mt19937_64& rng) {
  static const Rational kValues[] = {
      Rational{-3}, Rational{-2}, Rational{-1}, Rational{-1, 2},
      Rational{1, 2}, Rational{1},  Rational{2},  Rational{3}};
  std::uniform_int_distribution<std::size_t> pick(0, std::size(kValues) - 1);
  return kValues[pick(rng)];
}

template <class Fn>
std::uint64_t median_ns(std::size_t reps, Fn&& fn) {
  std::vector<std::uint64_t> samples;
  samples.reserve(reps);
  for (std::size_t r = 0; r < reps; ++r) {
    auto start = std::chrono::steady_clock::now();
    fn();
    auto stop = std::chrono::steady_clock::now();
    samples.push_back(static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count()));
  }
  auto mid = samples.begin() + static_cast<std::ptrdiff_t>(samples.size() / 2);
  std::nth_element(samples.begin(), mid, samples.end());
  return *mid;
}

ReportRow make_row(const BenchScenario& s, std::string repr, std::string op,
                   const OpCounter& counts, std::uint64_t ns) {
  return ReportRow{s.dim, s.support_a, s.support_b, std::move(repr),
                   std::move(op), counts, ns};
}

}  // namespace

std::size_t shared_labels(const BenchScenario& s) {
  double smaller = static_cast<double>(std::min(s.support_a, s.support_b));
  return static_cast<std::size_t>(std::llround(s.overlap_fraction * smaller));
}

void validate(const BenchScenario& s) {
  if (s.dim == 0) throw InvalidScenario("dim must be positive");
  if (s.repetitions == 0) throw InvalidScenario("repetitions must be positive");
  if (!(s.overlap_fraction >= 0.0 && s.overlap_fraction <= 1.0))
    throw InvalidScenario("overlap fraction must lie in [0, 1]");
  if (s.support_a > s.dim || s.support_b > s.dim)
    throw InvalidScenario("support larger than dim");
  if (s.support_a + s.support_b - shared_labels(s) > s.dim)
    throw InvalidScenario("supports with the requested overlap do not fit in dim " +
                          std::to_string(s.dim));
}

ScenarioInputs make_inputs(const BenchScenario& s) {
  validate(s);
  std::mt19937_64 rng{s.seed};
  const std::size_t shared = shared_labels(s);
  const std::size_t only_a = s.support_a - shared;
  const std::size_t only_b = s.support_b - shared;
  const auto labels = sample_labels(s.dim, shared + only_a + only_b, rng);

  IndexedCoefficients<IntIndex, Rational> a;
  IndexedCoefficients<IntIndex, Rational> b;
  for (std::size_t k = 0; k < labels.size(); ++k) {
    if (k < shared + only_a) a.emplace_back(labels[k], draw_coefficient(rng));
    if (k < shared || k >= shared + only_a)
      b.emplace_back(labels[k], draw_coefficient(rng));
  }
  return {Vec::from_pairs(std::move(a)), Vec::from_pairs(std::move(b))};
}

Rational scale_factor() { return Rational{-5}; }

std::vector<ReportRow> run_scenario(const BenchScenario& s) {
  const auto [a, b] = make_inputs(s);
  const auto dense_a = to_dense(a, s.dim);
  const auto dense_b = to_dense(b, s.dim);
  const Rational kappa = scale_factor();

  OpCounter alg_add_counts;
  const Vec alg_sum = add(a, b, alg_add_counts);
  OpCounter alg_scale_counts;
  const Vec alg_scaled = scalar_mul(kappa, a, alg_scale_counts);
  OpCounter dense_add_counts;
  const auto dense_sum = dense_add(dense_a, dense_b, dense_add_counts);
  OpCounter dense_scale_counts;
  const auto dense_scaled = dense_scalar_mul(kappa, dense_a, dense_scale_counts);

  if (alg_add_counts.entries_touched > a.support_size() + b.support_size())
    throw std::logic_error("algebraic add touched more than |L_a| + |L_b| entries");
  if (dense_add_counts.entries_touched != s.dim)
    throw std::logic_error("dense add did not touch exactly dim entries");
  if (to_dense(alg_sum, s.dim) != dense_sum ||
      to_dense(alg_scaled, s.dim) != dense_scaled)
    throw std::logic_error("algebraic and dense results disagree");

  // Written through volatile so the timed calls are not discarded.
  volatile std::size_t sink = 0;
  const auto t_alg_add =
      median_ns(s.repetitions, [&] { sink = add(a, b).support_size(); });
  const auto t_alg_scale =
      median_ns(s.repetitions, [&] { sink = scalar_mul(kappa, a).support_size(); });
  const auto t_dense_add =
      median_ns(s.repetitions, [&] { sink = dense_add(dense_a, dense_b).dim(); });
  const auto t_dense_scale =
      median_ns(s.repetitions, [&] { sink = dense_scalar_mul(kappa, dense_a).dim(); });

  return {
      make_row(s, "algebraic", "add", alg_add_counts, t_alg_add),
      make_row(s, "algebraic", "scale", alg_scale_counts, t_alg_scale),
      make_row(s, "dense", "add", dense_add_counts, t_dense_add),
      make_row(s, "dense", "scale", dense_scale_counts, t_dense_scale),
  };
}

std::string emit_report(std::span<const ReportRow> rows) {
  std::string out{kReportHeader};
  out += '\n';
  for (const ReportRow& r : rows) {
    out += std::to_string(r.dim) + ',' + std::to_string(r.support_a) + ',' +
           std::to_string(r.support_b) + ',' + r.repr + ',' + r.op + ',' +
           std::to_string(r.counts.entries_touched) + ',' +
           std::to_string(r.counts.field_adds) + ',' +
           std::to_string(r.counts.field_muls) + ',' +
           std::to_string(r.median_ns) + '\n';
  }
  return out;
}

SweepPlan plan_sweep(const SweepConfig& config) {
  SweepPlan plan;
  for (std::size_t dim : config.dims) {
    for (std::size_t support : config.supports) {
      BenchScenario s{dim, support, support, config.overlap_fraction,
                      config.repetitions, config.seed};
      // Only a support that does not fit is skipped; anything else is a
      // configuration error.
      BenchScenario empty = s;
      empty.support_a = empty.support_b = 0;
      validate(empty);
      const bool fits = support <= dim && 2 * support - shared_labels(s) <= dim;
      (fits ? plan.scenarios : plan.skipped).push_back(s);
    }
  }
  return plan;
}

}  // namespace algvec::bench
