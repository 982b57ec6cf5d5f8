#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "ueig/catalog.hpp"
#include "ueig/embedding.hpp"
#include "ueig/entanglement.hpp"
#include "ueig/io.hpp"
#include "ueig/oracle.hpp"
#include "ueig/solvers.hpp"

namespace ueig::cli {

namespace {

constexpr double kStateNormTol = 1e-6;
constexpr double kAgreementTol = 5e-4;

struct InputSpec {
  std::string catalog_id;
  std::string path;
};

struct Loaded {
  Tensor tensor;
  std::string label;
  bool unit_norm = false;
  std::optional<double> expected_lambda;
  std::optional<double> expected_gme;
};

Loaded load(const InputSpec& in) {
  if (in.catalog_id.empty() == in.path.empty())
    throw InputError("give exactly one of --catalog or --input");
  if (!in.catalog_id.empty()) {
    CatalogEntry e = find_entry(in.catalog_id);
    Tensor t = e.build();
    const bool unit = std::abs(norm(t) - 1.0) <= kStateNormTol;
    return Loaded{std::move(t), e.id, unit, e.expected_lambda, e.expected_gme};
  }
  Tensor t = read_tensor_file(in.path);
  if (std::abs(norm(t) - 1.0) <= kStateNormTol) {
    PureState s = PureState::checked(std::move(t), in.path, kStateNormTol);
    return Loaded{s.tensor(), in.path, true, std::nullopt, std::nullopt};
  }
  return Loaded{std::move(t), in.path, false, std::nullopt, std::nullopt};
}

std::string fixed(double v, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

std::string sci(double v) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(2) << v;
  return os.str();
}

std::string complex_text(Complex z) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(4) << z.real() << (z.imag() < 0 ? "-" : "+")
     << std::abs(z.imag()) << "i";
  return os.str();
}

std::optional<double> gme_if_state(const Loaded& in, double lambda) {
  if (!in.unit_norm) return std::nullopt;
  return gme_from_lambda(std::min(lambda, 1.0));
}

struct TimedRun {
  MultiStartResult result;
  double seconds = 0.0;
};

TimedRun timed_multi_start(const Tensor& t, const SolverConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  TimedRun run{multi_start(t, cfg), 0.0};
  run.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return run;
}

void add_input_options(CLI::App* cmd, InputSpec& in) {
  cmd->add_option("--catalog", in.catalog_id, "catalog fixture id (see `catalog list`)");
  cmd->add_option("--input", in.path, "tensor JSON file");
}

void add_solver_options(CLI::App* cmd, SolverConfig& cfg, std::string& algo, double& alpha) {
  cmd->add_option("--algo", algo, "embed | joint | gauss-seidel")->capture_default_str();
  cmd->add_option("--alpha", alpha,
                  "shift on A (default: 1 for gauss-seidel, m^-(m-1) for joint/embed)");
  cmd->add_option("--tol", cfg.tol, "stopping tolerance")->capture_default_str();
  cmd->add_option("--max-iter", cfg.max_iter, "iteration cap per start")->capture_default_str();
  cmd->add_option("--starts", cfg.starts, "number of random starts")->capture_default_str();
  cmd->add_option("--seed", cfg.seed, "master seed")->capture_default_str();
  cmd->add_option("--threads", cfg.threads, "worker threads (0 = all cores)");
}

void finish_config(SolverConfig& cfg, const std::string& algo, double alpha) {
  cfg.algorithm = parse_algorithm(algo);
  if (alpha > 0.0) cfg.alpha = alpha;
  else if (alpha < 0.0 || alpha != alpha) throw InputError("alpha must be positive");
  cfg.validate();
}

int cmd_solve(const InputSpec& in, const SolverConfig& cfg, const std::string& format,
              std::ostream& out) {
  Loaded input = load(in);
  TimedRun run = timed_multi_start(input.tensor, cfg);
  const UEigenpair& best = run.result.best;
  const std::optional<double> gme = gme_if_state(input, best.lambda);

  if (format == "json") {
    Json j;
    j["input"] = input.label;
    j["result"] = eigenpair_to_json(best, cfg.algorithm, cfg.seed, gme);
    j["best_start"] = run.result.best_index;
    Json starts = Json::array();
    for (const StartResult& s : run.result.starts) {
      Json one{{"index", s.index}, {"seed", s.seed}};
      if (s.pair) {
        one["lambda"] = s.pair->lambda;
        one["iterations"] = s.pair->trace.iterations();
        one["status"] = std::string(to_string(s.pair->trace.status));
      } else {
        one["error"] = s.error;
      }
      starts.push_back(std::move(one));
    }
    j["starts"] = std::move(starts);
    j["timing"] = Json{{"seconds", run.seconds}};
    out << j.dump(2) << '\n';
  } else {
    out << "input       " << input.label << ' ' << format_dims(input.tensor.dims()) << '\n'
        << "algorithm   " << to_string(cfg.algorithm) << '\n'
        << "lambda      " << fixed(best.lambda, 10) << '\n'
        << "gme         " << (gme ? fixed(*gme, 10) : std::string("n/a (not a unit-norm state)"))
        << '\n'
        << "residual    " << sci(best.residual) << '\n'
        << "iterations  " << best.trace.iterations() << " (start " << run.result.best_index + 1
        << " of " << run.result.starts.size() << ")\n"
        << "status      " << to_string(best.trace.status) << '\n'
        << "time (sec)  " << fixed(run.seconds, 2) << '\n'
        << "factors\n";
    for (std::size_t k = 0; k < best.factors.vectors.size(); ++k) {
      out << "  x" << k + 1 << " = (";
      const CVector& v = best.factors.vectors[k];
      for (std::size_t j = 0; j < v.size(); ++j) out << (j ? ", " : "") << complex_text(v[j]);
      out << ")\n";
    }
  }
  return best.trace.status == Status::converged ? kOk : kNotConverged;
}

int cmd_bench(const InputSpec& in, SolverConfig cfg, const std::vector<std::string>& algos,
              const std::string& format, std::ostream& out, std::ostream& err) {
  if (algos.empty()) throw InputError("--algos needs at least one algorithm");
  Loaded input = load(in);
  struct Row {
    Algorithm algo;
    TimedRun run;
  };
  std::vector<Row> rows;
  for (const std::string& name : algos) {
    cfg.algorithm = parse_algorithm(name);
    rows.push_back({cfg.algorithm, timed_multi_start(input.tensor, cfg)});
  }
  double lo = rows.front().run.result.best.lambda;
  double hi = lo;
  bool all_converged = true;
  for (const Row& r : rows) {
    lo = std::min(lo, r.run.result.best.lambda);
    hi = std::max(hi, r.run.result.best.lambda);
    all_converged = all_converged && r.run.result.best.trace.status == Status::converged;
  }
  const bool agree = hi - lo <= kAgreementTol;

  if (format == "json") {
    Json j;
    j["input"] = input.label;
    j["seed"] = cfg.seed;
    Json table = Json::array();
    Json timing = Json::object();
    for (const Row& r : rows) {
      const UEigenpair& b = r.run.result.best;
      const std::optional<double> gme = gme_if_state(input, b.lambda);
      int total = 0;
      for (const StartResult& s : r.run.result.starts)
        if (s.pair) total += s.pair->trace.iterations();
      table.push_back(Json{{"algorithm", std::string(to_string(r.algo))},
                           {"lambda", b.lambda},
                           {"gme", gme ? Json(*gme) : Json(nullptr)},
                           {"residual", b.residual},
                           {"iterations", b.trace.iterations()},
                           {"total_iterations", total},
                           {"status", std::string(to_string(b.trace.status))}});
      timing[std::string(to_string(r.algo))] = r.run.seconds;
    }
    j["rows"] = std::move(table);
    j["agree"] = agree;
    j["timing"] = std::move(timing);
    out << j.dump(2) << '\n';
  } else {
    out << "input " << input.label << ' ' << format_dims(input.tensor.dims()) << ", "
        << cfg.starts << " starts, seed " << cfg.seed << "\n\n";
    out << std::left << std::setw(14) << "Algorithm" << std::setw(10) << "lambda_A" << std::setw(10)
        << "GME" << std::setw(12) << "Iterations" << std::setw(12) << "Total iter"
        << "Time(sec)\n";
    for (const Row& r : rows) {
      const UEigenpair& b = r.run.result.best;
      const std::optional<double> gme = gme_if_state(input, b.lambda);
      int total = 0;
      for (const StartResult& s : r.run.result.starts)
        if (s.pair) total += s.pair->trace.iterations();
      out << std::left << std::setw(14) << to_string(r.algo) << std::setw(10) << fixed(b.lambda, 4)
          << std::setw(10) << (gme ? fixed(*gme, 4) : std::string("-")) << std::setw(12)
          << b.trace.iterations() << std::setw(12) << total << fixed(r.run.seconds, 2) << '\n';
    }
    out << "\nlambda spread " << sci(hi - lo) << (agree ? " (agree)" : " (DISAGREE)") << '\n';
  }
  if (!agree) {
    err << "error: algorithms disagree on lambda by " << sci(hi - lo) << " > " << kAgreementTol
        << '\n';
    return kNumericalFailure;
  }
  return all_converged ? kOk : kNotConverged;
}

int cmd_embed(const InputSpec& in, std::ostream& out) {
  Loaded input = load(in);
  out << embedded_to_json(sym_embed(input.tensor)).dump() << '\n';
  return kOk;
}

struct TableRow {
  std::string label;
  Algorithm algo;
  double lambda = 0.0;
  std::optional<double> gme;
  int iterations = 0;
  double seconds = 0.0;
  std::optional<double> ref_lambda;
  std::optional<double> ref_gme;
};

TableRow table_row(const std::string& id, Algorithm algo, const SolverConfig& base) {
  CatalogEntry e = find_entry(id);
  Tensor t = e.build();
  SolverConfig cfg = base;
  cfg.algorithm = algo;
  TimedRun run = timed_multi_start(t, cfg);
  TableRow row{id, algo, run.result.best.lambda, std::nullopt, run.result.best.trace.iterations(),
               run.seconds, e.expected_lambda, e.expected_gme};
  if (std::abs(norm(t) - 1.0) <= kStateNormTol) row.gme = gme_from_lambda(std::min(row.lambda, 1.0));
  return row;
}

void print_table(std::ostream& out, const std::string& title, const std::vector<TableRow>& rows) {
  out << title << '\n';
  out << std::left << std::setw(16) << "Input" << std::setw(14) << "Algorithm" << std::setw(10)
      << "lambda_A" << std::setw(10) << "GME" << std::setw(10) << "Iter" << std::setw(11)
      << "Time(sec)" << "Reference (lambda_A, GME)\n";
  for (const TableRow& r : rows) {
    std::string ref = "-";
    if (r.ref_lambda || r.ref_gme) {
      ref = "(" + (r.ref_lambda ? fixed(*r.ref_lambda, 4) : std::string("-")) + ", " +
            (r.ref_gme ? fixed(*r.ref_gme, 4) : std::string("-")) + ")";
    }
    out << std::left << std::setw(16) << r.label << std::setw(14) << to_string(r.algo)
        << std::setw(10) << fixed(r.lambda, 4) << std::setw(10)
        << (r.gme ? fixed(*r.gme, 4) : std::string("-")) << std::setw(10) << r.iterations
        << std::setw(11) << fixed(r.seconds, 2) << ref << '\n';
  }
  out << '\n';
}

int cmd_tables(const SolverConfig& base, bool include_long, bool include_random,
               const std::string& format, std::ostream& out) {
  const std::vector<Algorithm> all = {Algorithm::embed, Algorithm::joint, Algorithm::gauss_seidel};
  const std::vector<Algorithm> direct = {Algorithm::joint, Algorithm::gauss_seidel};
  std::vector<std::pair<std::string, std::vector<TableRow>>> tables;

  const auto section = [&](const std::string& title, const std::vector<std::string>& ids,
                           const std::vector<Algorithm>& algos) {
    std::vector<TableRow> rows;
    for (const std::string& id : ids)
      for (Algorithm a : algos) rows.push_back(table_row(id, a, base));
    tables.emplace_back(title, std::move(rows));
  };

  section("example_4_1", {"example_4_1"}, all);
  section("example_4_2", {"example_4_2"}, all);
  section("example_4_3", {"example_4_3"}, all);
  std::vector<std::string> trig = {"trig_2", "trig_5", "trig_10"};
  if (include_long) {
    trig.push_back("trig_15");
    trig.push_back("trig_20");
  }
  section("trigonometric states", trig, direct);
  section("example_4_6", {"example_4_6"}, direct);
  section("example_4_7", {"example_4_7"}, {Algorithm::gauss_seidel});
  if (include_random) {
    // fresh instances of the random families; no reference values exist
    std::vector<std::string> random_ids;
    const char* shapes[] = {"3x3x3x3", "5x5x5x5", "2x5x8x15", "2x2x2x2x2", "8x2x3x5x4",
                            "10x3x15x2x5"};
    for (std::size_t i = 0; i < std::size(shapes); ++i)
      random_ids.push_back("random:" + std::string(shapes[i]) + ":" +
                           std::to_string(base.seed + i));
    section("Random states (structural only)", random_ids, direct);
  }

  if (format == "json") {
    Json j = Json::array();
    Json timing = Json::array();
    for (const auto& [title, rows] : tables) {
      Json t{{"title", title}, {"rows", Json::array()}};
      for (const TableRow& r : rows) {
        t["rows"].push_back(Json{{"input", r.label},
                                 {"algorithm", std::string(to_string(r.algo))},
                                 {"lambda", r.lambda},
                                 {"gme", r.gme ? Json(*r.gme) : Json(nullptr)},
                                 {"iterations", r.iterations},
                                 {"reference_lambda", r.ref_lambda ? Json(*r.ref_lambda) : Json(nullptr)},
                                 {"reference_gme", r.ref_gme ? Json(*r.ref_gme) : Json(nullptr)}});
        timing.push_back(r.seconds);
      }
      j.push_back(std::move(t));
    }
    out << Json{{"tables", j}, {"timing", timing}}.dump(2) << '\n';
  } else {
    for (const auto& [title, rows] : tables) print_table(out, title, rows);
  }
  return kOk;
}

int cmd_catalog_list(std::ostream& out) {
  for (const CatalogEntry& e : catalog()) {
    out << std::left << std::setw(14) << e.id << std::setw(16) << format_dims(e.dims)
        << std::setw(10) << (e.expected_lambda ? fixed(*e.expected_lambda, 4) : std::string("-"))
        << std::setw(10) << (e.expected_gme ? fixed(*e.expected_gme, 4) : std::string("-"))
        << e.description << '\n';
  }
  out << std::left << std::setw(14) << "random:<dims>:<seed>" << "  seeded random state, e.g. random:3x3x3x3:7\n";
  return kOk;
}

int cmd_catalog_dump(const std::string& id, std::ostream& out) {
  out << tensor_to_json(find_entry(id).build()).dump() << '\n';
  return kOk;
}

int cmd_oracle(const InputSpec& in, const SolverConfig& cfg, std::size_t samples,
               std::ostream& out) {
  Loaded input = load(in);
  TimedRun run = timed_multi_start(input.tensor, cfg);
  out << "input            " << input.label << ' ' << format_dims(input.tensor.dims()) << '\n';
  out << "solver (" << to_string(cfg.algorithm) << ")  " << fixed(run.result.best.lambda, 10)
      << '\n';
  if (input.tensor.order() == 2) {
    OracleResult r = svd_oracle(input.tensor);
    out << "svd              " << fixed(r.lambda_lower_bound, 10) << "  (" << r.work
        << " power iterations)\n";
  } else {
    out << "svd              n/a (order " << input.tensor.order() << ")\n";
  }
  OracleResult s = sampling_oracle(input.tensor, samples, cfg.seed);
  out << "sampling         " << fixed(s.lambda_lower_bound, 10) << "  (lower bound, " << s.work
      << " samples)\n";
  if (auto o = orthogonal_sum_oracle(input.tensor)) {
    out << "orthogonal sum   " << fixed(o->lambda_lower_bound, 10) << '\n';
  } else {
    out << "orthogonal sum   n/a (support overlaps in more than m-2 modes)\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"U-eigenvalues of non-symmetric complex tensors and the geometric measure of "
               "entanglement"};
  app.require_subcommand(1);

  InputSpec input;
  SolverConfig cfg;
  std::string algo = "gauss-seidel";
  double alpha = 0.0;
  std::string format = "table";
  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "table | json")
        ->check(CLI::IsMember({"table", "json"}))
        ->capture_default_str();
  };

  CLI::App* solve = app.add_subcommand("solve", "compute the largest U-eigenvalue");
  add_input_options(solve, input);
  add_solver_options(solve, cfg, algo, alpha);
  add_format(solve);

  std::vector<std::string> algos = {"embed", "joint", "gauss-seidel"};
  CLI::App* bench = app.add_subcommand("bench", "run several algorithms from identical starts");
  add_input_options(bench, input);
  add_solver_options(bench, cfg, algo, alpha);
  bench->add_option("--algos", algos, "algorithms to compare")->delimiter(',');
  add_format(bench);

  CLI::App* embed = app.add_subcommand("embed", "print the symmetric embedding as tensor JSON");
  add_input_options(embed, input);

  bool include_long = false;
  bool include_random = false;
  CLI::App* tables = app.add_subcommand("tables", "regenerate the reference result tables");
  add_solver_options(tables, cfg, algo, alpha);
  tables->add_flag("--long", include_long, "also run the n = 15, 20 trigonometric rows");
  tables->add_flag("--random", include_random, "also run fresh random instances");
  add_format(tables);

  CLI::App* cat = app.add_subcommand("catalog", "list or dump fixtures");
  cat->require_subcommand(1);
  CLI::App* cat_list = cat->add_subcommand("list", "list fixture ids");
  std::string dump_id;
  CLI::App* cat_dump = cat->add_subcommand("dump", "print a fixture as tensor JSON");
  cat_dump->add_option("id", dump_id, "fixture id")->required();

  std::size_t samples = 10000;
  CLI::App* oracle = app.add_subcommand("oracle", "print oracle values next to the solver value");
  add_input_options(oracle, input);
  add_solver_options(oracle, cfg, algo, alpha);
  oracle->add_option("--samples", samples, "sampling oracle draws")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (!cat->parsed() && !(cat_list->parsed() || cat_dump->parsed()))
      finish_config(cfg, algo, alpha);
    if (solve->parsed()) return cmd_solve(input, cfg, format, out);
    if (bench->parsed()) return cmd_bench(input, cfg, algos, format, out, err);
    if (embed->parsed()) return cmd_embed(input, out);
    if (tables->parsed()) return cmd_tables(cfg, include_long, include_random, format, out);
    if (cat_list->parsed()) return cmd_catalog_list(out);
    if (cat_dump->parsed()) return cmd_catalog_dump(dump_id, out);
    if (oracle->parsed()) return cmd_oracle(input, cfg, samples, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << '\n';
    return kNumericalFailure;
  }
  return kInputError;
}

}  // namespace ueig::cli
