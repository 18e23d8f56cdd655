#include "chaoscomp/cli.hpp"

#include <cmath>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "chaoscomp/boundary.hpp"
#include "chaoscomp/classifier.hpp"
#include "chaoscomp/io.hpp"
#include "chaoscomp/pipeline.hpp"
#include "chaoscomp/synthetic.hpp"

namespace chaoscomp {

namespace {

using nlohmann::json;

// Remaps a loaded dataset's label ids (first-appearance order in its own
// file) onto the model's class order, so evaluation is independent of row
// order in the evaluation file.
std::vector<int> align_labels_to_model(const Dataset& ds, const ChaosCompModel& model) {
  std::vector<int> mapping(ds.class_names.size(), -1);
  for (std::size_t c = 0; c < ds.class_names.size(); ++c) {
    for (std::size_t k = 0; k < model.class_names.size(); ++k) {
      if (ds.class_names[c] == model.class_names[k]) {
        mapping[c] = static_cast<int>(k);
        break;
      }
    }
    if (mapping[c] < 0) {
      throw std::runtime_error("label '" + ds.class_names[c] + "' is not known to the model");
    }
  }
  std::vector<int> y(ds.y.size());
  for (std::size_t i = 0; i < ds.y.size(); ++i) {
    y[i] = mapping[static_cast<std::size_t>(ds.y[i])];
  }
  return y;
}

Metrics evaluate_model_on(const ChaosCompModel& model, const Dataset& ds, int jobs) {
  const std::vector<int> y = align_labels_to_model(ds, model);
  std::vector<int> pred;
  pred.reserve(ds.rows());
  for (const Prediction& p : predict_batch(ds.X, model, jobs)) pred.push_back(p.label);
  return compute_metrics(y, pred, static_cast<int>(model.num_classes()));
}

json metrics_json_obj(const Metrics& metrics) { return json::parse(metrics_to_json(metrics)); }

double binary_entropy_bits(double a) {
  return -a * std::log2(a) - (1.0 - a) * std::log2(1.0 - a);
}

struct DataArgs {
  std::string path;
  std::string label_col;
};

void add_data_flags(CLI::App* cmd, DataArgs& args) {
  cmd->add_option("--data", args.path, "input CSV (header row, label column holds class names)")
      ->required();
  cmd->add_option("--label-col", args.label_col,
                  "name of the label column (default: last column)");
}

// ---- train ----------------------------------------------------------------

struct TrainArgs {
  DataArgs data;
  int n = 2;
  double threshold = 0.5;
  double alpha = 0.01;
  int pad_symbol = 1;
  bool no_augment = false;
  double test_fraction = 0.0;   // 0 disables the split
  std::uint64_t seed = 1;
  int cap_per_class = 0;
  int jobs = 1;
  std::string out = "model.json";
};

int run_train(const TrainArgs& args) {
  Dataset ds = load_csv(args.data.path, args.data.label_col);

  json doc;
  doc["command"] = "train";

  Dataset train_ds;
  Dataset test_ds;
  bool have_test = false;
  if (args.test_fraction > 0.0) {
    SplitResult split = train_test_split(ds, args.test_fraction, args.seed);
    doc["split"] = {{"train_counts", split.train_counts}, {"test_counts", split.test_counts}};
    train_ds = std::move(split.train);
    test_ds = std::move(split.test);
    have_test = true;
  } else {
    train_ds = std::move(ds);
  }
  train_ds = cap_per_class(train_ds, args.cap_per_class);

  FitConfig cfg;
  cfg.n = args.n;
  cfg.threshold = args.threshold;
  cfg.alpha = args.alpha;
  cfg.pad_symbol = args.pad_symbol;
  cfg.allow_augment = !args.no_augment;
  const ChaosCompModel model = fit_model(train_ds, cfg);
  save_model(model, args.out);

  doc["model_path"] = args.out;
  doc["n"] = model.n;
  doc["threshold"] = model.threshold;
  doc["metrics"]["train"] = metrics_json_obj(evaluate_model_on(model, train_ds, args.jobs));
  if (have_test) {
    doc["metrics"]["test"] = metrics_json_obj(evaluate_model_on(model, test_ds, args.jobs));
  }
  std::cout << doc.dump(2) << "\n";
  return 0;
}

// ---- tune -----------------------------------------------------------------

struct TuneArgs {
  DataArgs data;
  double test_fraction = 0.2;   // 0 runs CV on the whole file
  std::uint64_t seed = 1;
  double alpha = 0.01;
  int folds = 5;
  int pad_symbol = 1;
  bool no_augment = false;
  int cap_per_class = 0;
  int jobs = 1;
  std::string out = "model.json";
  std::string cv_out = "cv_table.csv";
};

int run_tune(const TuneArgs& args) {
  Dataset ds = load_csv(args.data.path, args.data.label_col);

  json doc;
  doc["command"] = "tune";

  Dataset train_ds;
  Dataset test_ds;
  bool have_test = false;
  if (args.test_fraction > 0.0) {
    SplitResult split = train_test_split(ds, args.test_fraction, args.seed);
    doc["split"] = {{"train_counts", split.train_counts}, {"test_counts", split.test_counts}};
    train_ds = std::move(split.train);
    test_ds = std::move(split.test);
    have_test = true;
  } else {
    train_ds = std::move(ds);
  }
  train_ds = cap_per_class(train_ds, args.cap_per_class);

  HyperGrid grid = HyperGrid::defaults();
  grid.alpha = args.alpha;
  grid.folds = args.folds;
  GridOptions opts;
  opts.pad_symbol = args.pad_symbol;
  opts.allow_augment = !args.no_augment;

  const GridSearchResult result = grid_search(train_ds, grid, args.seed, opts, args.jobs);
  write_text_file(args.cv_out, cv_table_to_csv(result.cv_table));

  FitConfig cfg;
  cfg.n = result.best_n;
  cfg.threshold = result.best_threshold;
  cfg.alpha = args.alpha;
  cfg.pad_symbol = args.pad_symbol;
  cfg.allow_augment = !args.no_augment;
  const ChaosCompModel model = fit_model(train_ds, cfg);
  save_model(model, args.out);

  doc["best_threshold"] = result.best_threshold;
  doc["best_n"] = result.best_n;
  doc["best_cv_mean_f1"] = result.best_mean_f1;
  doc["model_path"] = args.out;
  doc["cv_table_path"] = args.cv_out;
  if (have_test) {
    doc["metrics"]["test"] = metrics_json_obj(evaluate_model_on(model, test_ds, args.jobs));
  }
  std::cout << doc.dump(2) << "\n";
  return 0;
}

// ---- evaluate / predict -----------------------------------------------------

struct EvaluateArgs {
  DataArgs data;
  std::string model_path;
  std::string out;
  int jobs = 1;
};

int run_evaluate(const EvaluateArgs& args) {
  const ChaosCompModel model = load_model(args.model_path);
  const Dataset ds = load_csv(args.data.path, args.data.label_col);
  const std::string text = metrics_to_json(evaluate_model_on(model, ds, args.jobs));
  if (!args.out.empty()) write_text_file(args.out, text);
  std::cout << text;
  return 0;
}

int run_predict(const EvaluateArgs& args) {
  const ChaosCompModel model = load_model(args.model_path);
  const Dataset ds = load_csv(args.data.path, args.data.label_col);
  const std::vector<Prediction> preds = predict_batch(ds.X, model, args.jobs);

  std::string out = "index,predicted_label,predicted_name";
  for (std::size_t c = 0; c < model.num_classes(); ++c) {
    out += ",bits_" + std::to_string(c);
  }
  out += '\n';
  for (std::size_t i = 0; i < preds.size(); ++i) {
    out += std::to_string(i);
    out += ',';
    out += std::to_string(preds[i].label);
    out += ',';
    out += model.class_names[static_cast<std::size_t>(preds[i].label)];
    for (long long bits : preds[i].per_class_bits) {
      out += ',';
      out += std::to_string(bits);
    }
    out += '\n';
  }
  if (!args.out.empty()) write_text_file(args.out, out);
  std::cout << out;
  return 0;
}

// ---- synth ------------------------------------------------------------------

struct SynthArgs {
  std::string kind;
  int samples = 100;
  double noise = 0.1;
  std::uint64_t seed = 1;
  std::string out;
};

int run_synth(const SynthArgs& args) {
  SyntheticSpec spec;
  spec.kind = parse_synthetic_kind(args.kind);
  spec.samples_per_class = args.samples;
  spec.noise = args.noise;
  spec.seed = args.seed;
  const std::string csv = dataset_to_csv(generate_synthetic(spec));
  if (!args.out.empty()) {
    write_text_file(args.out, csv);
  } else {
    std::cout << csv;
  }
  return 0;
}

// ---- boundary ---------------------------------------------------------------

struct BoundaryArgs {
  std::string model_path;
  BoundaryBounds bounds;
  int resolution = 100;
  int jobs = 1;
  std::string out = "boundary.csv";
};

int run_boundary(const BoundaryArgs& args) {
  const ChaosCompModel model = load_model(args.model_path);
  const std::vector<BoundaryPoint> grid =
      decision_boundary_grid(model, args.bounds, args.resolution, args.jobs);
  write_text_file(args.out, boundary_to_csv(grid));
  std::cout << "wrote " << grid.size() << " grid points to " << args.out << "\n";
  return 0;
}

// ---- entropy ----------------------------------------------------------------

int run_entropy(const std::string& model_path) {
  const ChaosCompModel model = load_model(model_path);
  json doc;
  doc["command"] = "entropy";
  doc["n"] = model.n;
  json classes = json::array();
  for (std::size_t c = 0; c < model.num_classes(); ++c) {
    json entry;
    entry["name"] = model.class_names[c];
    entry["entropy_bits_per_word"] =
        model_entropy(class_return_map(model, static_cast<int>(c)));
    if (model.n == 1) {
      // For a first-return map the word entropy equals the map's
      // Lyapunov/entropy expression at its skew a = p0.
      entry["map_entropy_closed_form"] = binary_entropy_bits(model.classes[c].probs[0]);
    }
    classes.push_back(std::move(entry));
  }
  doc["classes"] = std::move(classes);
  std::cout << doc.dump(2) << "\n";
  return 0;
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args) {
  std::vector<std::string> with_program = args;
  with_program.insert(with_program.begin(), "chaoscomp");
  std::vector<const char*> argv;
  argv.reserve(with_program.size());
  for (const std::string& a : with_program) argv.push_back(a.c_str());
  return cli_dispatch(static_cast<int>(argv.size()), argv.data());
}

int cli_dispatch(int argc, const char* const* argv) {
  CLI::App app{"compression-based classifier built on chaotic return maps"};
  app.require_subcommand(1);
  int exit_code = 0;

  TrainArgs train_args;
  CLI::App* train_cmd = app.add_subcommand("train", "fit a model with fixed hyperparameters");
  add_data_flags(train_cmd, train_args.data);
  train_cmd->add_option("--n", train_args.n, "word length (bits per symbol block)")
      ->check(CLI::Range(1, 20));
  train_cmd->add_option("--threshold", train_args.threshold, "binarization threshold in (0,1]");
  train_cmd->add_option("--alpha", train_args.alpha, "additive smoothing constant");
  train_cmd->add_option("--pad-symbol", train_args.pad_symbol, "bit used to pad instances")
      ->check(CLI::Range(0, 1));
  train_cmd->add_flag("--no-augment", train_args.no_augment,
                      "skip the sum-of-squares feature column");
  train_cmd->add_option("--test-fraction", train_args.test_fraction,
                        "held-out fraction (0 trains on every row)");
  train_cmd->add_option("--seed", train_args.seed, "random seed for the split");
  train_cmd->add_option("--cap-per-class", train_args.cap_per_class,
                        "max training rows per class (0 = unlimited)");
  train_cmd->add_option("--jobs", train_args.jobs, "worker threads for prediction");
  train_cmd->add_option("--out", train_args.out, "model output path");
  train_cmd->callback([&] { exit_code = run_train(train_args); });

  TuneArgs tune_args;
  CLI::App* tune_cmd =
      app.add_subcommand("tune", "grid-search threshold and n by cross-validation");
  add_data_flags(tune_cmd, tune_args.data);
  tune_cmd->add_option("--test-fraction", tune_args.test_fraction,
                       "held-out fraction evaluated after the search (0 = none)");
  tune_cmd->add_option("--seed", tune_args.seed, "random seed for split and folds");
  tune_cmd->add_option("--alpha", tune_args.alpha, "additive smoothing constant");
  tune_cmd->add_option("--folds", tune_args.folds, "cross-validation folds")
      ->check(CLI::Range(2, 100));
  tune_cmd->add_option("--pad-symbol", tune_args.pad_symbol, "bit used to pad instances")
      ->check(CLI::Range(0, 1));
  tune_cmd->add_flag("--no-augment", tune_args.no_augment,
                     "skip the sum-of-squares feature column");
  tune_cmd->add_option("--cap-per-class", tune_args.cap_per_class,
                       "max training rows per class (0 = unlimited)");
  tune_cmd->add_option("--jobs", tune_args.jobs,
                       "worker threads for the grid (0 = all cores; results identical)");
  tune_cmd->add_option("--out", tune_args.out, "model output path");
  tune_cmd->add_option("--cv-out", tune_args.cv_out, "cv_table CSV output path");
  tune_cmd->callback([&] { exit_code = run_tune(tune_args); });

  EvaluateArgs eval_args;
  CLI::App* eval_cmd = app.add_subcommand("evaluate", "score a saved model on a labeled CSV");
  add_data_flags(eval_cmd, eval_args.data);
  eval_cmd->add_option("--model", eval_args.model_path, "model JSON path")->required();
  eval_cmd->add_option("--jobs", eval_args.jobs, "worker threads for prediction");
  eval_cmd->add_option("--out", eval_args.out, "also write the metrics JSON here");
  eval_cmd->callback([&] { exit_code = run_evaluate(eval_args); });

  EvaluateArgs predict_args;
  CLI::App* predict_cmd =
      app.add_subcommand("predict", "per-row labels and per-class bit counts");
  add_data_flags(predict_cmd, predict_args.data);
  predict_cmd->add_option("--model", predict_args.model_path, "model JSON path")->required();
  predict_cmd->add_option("--jobs", predict_args.jobs, "worker threads for prediction");
  predict_cmd->add_option("--out", predict_args.out, "also write the prediction CSV here");
  predict_cmd->callback([&] { exit_code = run_predict(predict_args); });

  SynthArgs synth_args;
  CLI::App* synth_cmd = app.add_subcommand("synth", "write a synthetic dataset CSV");
  synth_cmd
      ->add_option("--kind", synth_args.kind,
                   "circles | moons | linear | xor | nand | nor (gates are always 4 rows)")
      ->required();
  synth_cmd->add_option("--samples", synth_args.samples, "samples per class");
  synth_cmd->add_option("--noise", synth_args.noise, "gaussian jitter scale");
  synth_cmd->add_option("--seed", synth_args.seed, "generator seed");
  synth_cmd->add_option("--out", synth_args.out, "output CSV path (default: stdout)");
  synth_cmd->callback([&] { exit_code = run_synth(synth_args); });

  BoundaryArgs boundary_args;
  CLI::App* boundary_cmd =
      app.add_subcommand("boundary", "classify a 2-D lattice and write it as CSV");
  boundary_cmd->add_option("--model", boundary_args.model_path, "model JSON path")->required();
  boundary_cmd->add_option("--xmin", boundary_args.bounds.xmin, "lattice bound");
  boundary_cmd->add_option("--xmax", boundary_args.bounds.xmax, "lattice bound");
  boundary_cmd->add_option("--ymin", boundary_args.bounds.ymin, "lattice bound");
  boundary_cmd->add_option("--ymax", boundary_args.bounds.ymax, "lattice bound");
  boundary_cmd->add_option("--resolution", boundary_args.resolution, "points per axis")
      ->check(CLI::Range(1, 10000));
  boundary_cmd->add_option("--jobs", boundary_args.jobs, "worker threads for prediction");
  boundary_cmd->add_option("--out", boundary_args.out, "output CSV path");
  boundary_cmd->callback([&] { exit_code = run_boundary(boundary_args); });

  std::string entropy_model_path;
  CLI::App* entropy_cmd =
      app.add_subcommand("entropy", "per-class word entropy of a saved model");
  entropy_cmd->add_option("--model", entropy_model_path, "model JSON path")->required();
  entropy_cmd->callback([&] { exit_code = run_entropy(entropy_model_path); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);   // prints help, exits 0
  } catch (const CLI::ParseError& e) {
    app.exit(e);   // prints the usage error
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}

}  // namespace chaoscomp
