#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "algvec/bench.hpp"
#include "algvec/dense.hpp"
#include "algvec/io.hpp"
#include "algvec/vector.hpp"

namespace algvec::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string index_type = "int";
  std::string field = "rational";
  std::string output;
  std::string kappa;
  std::string file_a;
  std::string file_b;
  std::size_t dim = 0;
  bench::SweepConfig sweep{{100, 1000, 100000}, {3, 10, 100}, 0.5, 30, 42};
  std::string format = "csv";
};

std::vector<std::string> read_file_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path);
  return read_lines(in);
}

template <OrderedIndex I, Field F>
std::vector<AlgebraicVector<I, F>> load(const std::string& path,
                                        std::ostream& err) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path);
  return read_document<I, F>(in, &err).vectors;
}

template <class A, class B>
void require_same_length(const A& a, const B& b, const Options& o) {
  if (a.size() != b.size())
    throw DataError(o.file_a + " has " + std::to_string(a.size()) +
                    " vectors but " + o.file_b + " has " +
                    std::to_string(b.size()));
}

template <OrderedIndex I, Field F>
void emit(std::ostream& out, const std::vector<AlgebraicVector<I, F>>& vs) {
  for (const auto& v : vs) out << format_vector(v) << '\n';
}

// Vector subcommands, instantiated per (label type, field).
template <OrderedIndex I, Field F>
void run_vector_command(const std::string& command, const Options& o,
                        std::ostream& out, std::ostream& err) {
  using Vec = AlgebraicVector<I, F>;

  if (command == "show") {
    emit(out, load<I, F>(o.file_a, err));
  } else if (command == "add") {
    auto a = load<I, F>(o.file_a, err);
    auto b = load<I, F>(o.file_b, err);
    require_same_length(a, b, o);
    std::vector<Vec> sums;
    for (std::size_t k = 0; k < a.size(); ++k) sums.push_back(add(a[k], b[k]));
    emit(out, sums);
  } else if (command == "scale") {
    const F kappa = parse_token<F>(o.kappa);
    std::vector<Vec> scaled;
    for (const auto& v : load<I, F>(o.file_a, err))
      scaled.push_back(scalar_mul(kappa, v));
    emit(out, scaled);
  } else if (command == "axpy") {
    const F kappa = parse_token<F>(o.kappa);
    auto x = load<I, F>(o.file_a, err);
    auto y = load<I, F>(o.file_b, err);
    require_same_length(x, y, o);
    std::vector<Vec> result;
    for (std::size_t k = 0; k < x.size(); ++k)
      result.push_back(add(scalar_mul(kappa, x[k]), y[k]));
    emit(out, result);
  } else if (command == "to-dense" || command == "from-dense") {
    if constexpr (std::is_same_v<I, IntIndex>) {
      if (command == "to-dense") {
        for (const auto& v : load<I, F>(o.file_a, err))
          out << format_dense(to_dense(v, o.dim)) << '\n';
      } else {
        std::size_t line_number = 0;
        for (const auto& line : read_file_lines(o.file_a)) {
          ++line_number;
          out << format_vector(from_dense(
                     parse_dense<F>(line, ParseContext{line_number, &err})))
              << '\n';
        }
      }
    } else {
      throw UsageError(command + " requires --index-type int");
    }
  }
}

void run_bench(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.field != "rational")
    throw UsageError("bench runs over the rational field only");
  if (o.index_type != "int")
    throw UsageError("bench runs over int labels only");
  if (o.format != "csv") throw UsageError("unsupported format " + o.format);

  const auto plan = bench::plan_sweep(o.sweep);
  for (const auto& s : plan.skipped)
    err << "warning: skipping dim=" << s.dim << " support=" << s.support_a
        << " (supports do not fit)\n";
  std::vector<bench::ReportRow> rows;
  for (const auto& s : plan.scenarios) {
    auto scenario_rows = bench::run_scenario(s);
    rows.insert(rows.end(), scenario_rows.begin(), scenario_rows.end());
  }
  out << bench::emit_report(rows);
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  Options o;
  CLI::App app{"Exact sparse vector arithmetic over ordered index sets.", "algvec"};
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--index-type", o.index_type, "Label kind")
      ->check(CLI::IsMember({"int", "text", "real", "complex"}))
      ->capture_default_str();
  app.add_option("--field", o.field, "Coefficient field")
      ->check(CLI::IsMember({"rational", "f64", "complex-rational"}))
      ->capture_default_str();
  app.add_option("--output,-o", o.output, "Write results here instead of stdout");

  auto* show = app.add_subcommand("show", "Parse a vector file and print it canonically");
  show->add_option("file", o.file_a)->required();

  auto* add_cmd = app.add_subcommand("add", "Add two vector files line by line");
  add_cmd->add_option("file_a", o.file_a)->required();
  add_cmd->add_option("file_b", o.file_b)->required();

  auto* scale = app.add_subcommand("scale", "Multiply every vector by a scalar");
  scale->add_option("kappa", o.kappa)->required();
  scale->add_option("file", o.file_a)->required();

  auto* axpy = app.add_subcommand("axpy", "kappa*x + y, line by line");
  axpy->add_option("kappa", o.kappa)->required();
  axpy->add_option("file_x", o.file_a)->required();
  axpy->add_option("file_y", o.file_b)->required();

  auto* to_dense_cmd = app.add_subcommand("to-dense", "Print [c1,...,cN] tuples");
  to_dense_cmd->add_option("--dim", o.dim, "Dimension N")
      ->required()
      ->check(CLI::PositiveNumber);
  to_dense_cmd->add_option("file", o.file_a)->required();

  auto* from_dense_cmd = app.add_subcommand("from-dense", "Read [c1,...,cN] tuples");
  from_dense_cmd->add_option("file", o.file_a)->required();

  auto* bench_cmd = app.add_subcommand("bench", "Sparse vs dense add/scale sweep");
  bench_cmd->add_option("--dims", o.sweep.dims)->delimiter(',')->capture_default_str();
  bench_cmd->add_option("--supports", o.sweep.supports)
      ->delimiter(',')
      ->capture_default_str();
  bench_cmd->add_option("--overlap", o.sweep.overlap_fraction)
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  bench_cmd->add_option("--reps", o.sweep.repetitions)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench_cmd->add_option("--seed", o.sweep.seed)->capture_default_str();
  bench_cmd->add_option("--format", o.format)
      ->check(CLI::IsMember({"csv"}))
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  std::ostringstream result;
  try {
    if (command == "bench") {
      run_bench(o, result, err);
    } else {
      dispatch(*parse_index_kind(o.index_type), *parse_field_kind(o.field),
               [&]<class I, class F>() {
                 run_vector_command<I, F>(command, o, result, err);
               });
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidScenario& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }

  if (o.output.empty()) {
    out << result.str();
  } else {
    std::ofstream file(o.output);
    if (!(file << result.str())) {
      err << "error: cannot write " << o.output << '\n';
      return kExitData;
    }
  }
  return kExitOk;
}

}  // namespace algvec::cli
