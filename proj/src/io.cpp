#include "chaoscomp/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <system_error>

#include "json.hpp"

namespace chaoscomp {

namespace {

constexpr int kModelSchemaVersion = 1;

// Shortest decimal form that round-trips the exact double, locale-free.
std::string format_double(double v) {
  char buf[64];
  const std::to_chars_result res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.push_back("");
  return cells;
}

std::string strip_cr(std::string s) {
  if (!s.empty() && s.back() == '\r') s.pop_back();
  return s;
}

double parse_cell(const std::string& cell, std::size_t row, std::size_t col) {
  double value = 0.0;
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  const std::from_chars_result res = std::from_chars(first, last, value);
  if (res.ec != std::errc() || res.ptr != last) {
    throw std::runtime_error("non-numeric value '" + cell + "' at row " + std::to_string(row) +
                             ", column " + std::to_string(col + 1));
  }
  return value;
}

}  // namespace

Dataset load_csv(const std::string& path, const std::string& label_column) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);

  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("no data rows in " + path);
  const std::vector<std::string> header = split_csv_line(strip_cr(line));
  if (header.empty()) throw std::runtime_error("empty header in " + path);

  std::size_t label_idx = header.size() - 1;   // default: last column
  if (!label_column.empty()) {
    bool found = false;
    for (std::size_t j = 0; j < header.size(); ++j) {
      if (header[j] == label_column) {
        label_idx = j;
        found = true;
        break;
      }
    }
    if (!found) throw std::runtime_error("label column '" + label_column + "' not found in " + path);
  }

  Dataset ds;
  for (std::size_t j = 0; j < header.size(); ++j) {
    if (j != label_idx) ds.feature_names.push_back(header[j]);
  }
  if (ds.feature_names.size() < 2) {
    throw std::runtime_error("at least two features required, got " +
                             std::to_string(ds.feature_names.size()) + " in " + path);
  }

  std::size_t row_number = 1;   // header was row 1
  while (std::getline(in, line)) {
    ++row_number;
    line = strip_cr(line);
    if (line.empty()) continue;
    const std::vector<std::string> cells = split_csv_line(line);
    if (cells.size() != header.size()) {
      throw std::runtime_error("row " + std::to_string(row_number) + " has " +
                               std::to_string(cells.size()) + " cells, expected " +
                               std::to_string(header.size()));
    }
    std::vector<double> features;
    features.reserve(header.size() - 1);
    std::string label;
    for (std::size_t j = 0; j < cells.size(); ++j) {
      if (j == label_idx) {
        label = cells[j];
      } else {
        features.push_back(parse_cell(cells[j], row_number, j));
      }
    }
    if (label.empty()) {
      throw std::runtime_error("missing label at row " + std::to_string(row_number));
    }
    // Map labels to dense integers in first-appearance order.
    int label_id = -1;
    for (std::size_t c = 0; c < ds.class_names.size(); ++c) {
      if (ds.class_names[c] == label) {
        label_id = static_cast<int>(c);
        break;
      }
    }
    if (label_id < 0) {
      label_id = static_cast<int>(ds.class_names.size());
      ds.class_names.push_back(label);
    }
    ds.X.push_back(std::move(features));
    ds.y.push_back(label_id);
  }
  if (ds.X.empty()) throw std::runtime_error("no data rows in " + path);
  return ds;
}

std::string dataset_to_csv(const Dataset& ds) {
  std::string out;
  for (std::size_t j = 0; j < ds.feature_names.size(); ++j) {
    out += ds.feature_names[j];
    out += ',';
  }
  out += "label\n";
  for (std::size_t i = 0; i < ds.X.size(); ++i) {
    for (double v : ds.X[i]) {
      out += format_double(v);
      out += ',';
    }
    out += ds.class_names[static_cast<std::size_t>(ds.y[i])];
    out += '\n';
  }
  return out;
}

std::string model_to_json(const ChaosCompModel& model) {
  nlohmann::json doc;
  doc["version"] = kModelSchemaVersion;
  doc["n"] = model.n;
  doc["threshold"] = model.threshold;
  doc["alpha"] = model.alpha;
  doc["pad_symbol"] = model.pad_symbol;
  doc["augment"] = model.augment;
  doc["scaler_min"] = model.scaler.min;
  doc["scaler_max"] = model.scaler.max;
  doc["class_names"] = model.class_names;
  nlohmann::json probs = nlohmann::json::array();
  for (const ClassDistribution& dist : model.classes) probs.push_back(dist.probs);
  doc["class_probs"] = std::move(probs);
  return doc.dump(2) + "\n";
}

ChaosCompModel model_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(std::string("malformed model document: ") + e.what());
  }
  if (!doc.contains("version")) throw std::runtime_error("model document has no version field");
  const int version = doc.at("version").get<int>();
  if (version != kModelSchemaVersion) {
    throw std::runtime_error("unsupported model schema version " + std::to_string(version) +
                             " (expected " + std::to_string(kModelSchemaVersion) + ")");
  }
  ChaosCompModel model;
  try {
    model.n = doc.at("n").get<int>();
    model.threshold = doc.at("threshold").get<double>();
    model.alpha = doc.at("alpha").get<double>();
    model.pad_symbol = doc.at("pad_symbol").get<int>();
    model.augment = doc.at("augment").get<bool>();
    model.scaler.min = doc.at("scaler_min").get<std::vector<double>>();
    model.scaler.max = doc.at("scaler_max").get<std::vector<double>>();
    model.class_names = doc.at("class_names").get<std::vector<std::string>>();
    const auto probs = doc.at("class_probs").get<std::vector<std::vector<double>>>();
    for (std::size_t c = 0; c < probs.size(); ++c) {
      ClassDistribution dist;
      dist.class_id = static_cast<int>(c);
      dist.probs = probs[c];
      model.classes.push_back(std::move(dist));
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("malformed model document: ") + e.what());
  }

  // Structural validation: the document must describe a usable model.
  if (model.classes.empty()) throw std::runtime_error("model document has no classes");
  if (model.class_names.size() != model.classes.size()) {
    throw std::runtime_error("model class name count does not match distributions");
  }
  if (model.scaler.min.size() != model.scaler.max.size() || model.scaler.min.empty()) {
    throw std::runtime_error("model scaler arrays are inconsistent");
  }
  if (model.n < 1 || model.n > 20) throw std::runtime_error("model word length out of range");
  const std::size_t cells = std::size_t{1} << model.n;
  for (const ClassDistribution& dist : model.classes) {
    if (dist.probs.size() != cells) {
      throw std::runtime_error("class distribution size does not match 2^n");
    }
    try {
      // Constructing the return map revalidates positivity and normalization.
      [[maybe_unused]] ReturnMapModel check(model.n, dist.probs);
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error(std::string("invalid model document: ") + e.what());
    }
  }
  return model;
}

void save_model(const ChaosCompModel& model, const std::string& path) {
  write_text_file(path, model_to_json(model));
}

ChaosCompModel load_model(const std::string& path) {
  return model_from_json(read_text_file(path));
}

std::string metrics_to_json(const Metrics& metrics) {
  nlohmann::json doc;
  doc["accuracy"] = metrics.accuracy;
  doc["macro_precision"] = metrics.macro_precision;
  doc["macro_recall"] = metrics.macro_recall;
  doc["macro_f1"] = metrics.macro_f1;
  doc["confusion"] = metrics.confusion;
  return doc.dump(2) + "\n";
}

std::string cv_table_to_csv(const std::vector<CvRow>& rows) {
  std::string out = "threshold,n,fold,macro_f1,mean_macro_f1\n";
  for (const CvRow& row : rows) {
    out += format_double(row.threshold);
    out += ',';
    out += std::to_string(row.n);
    out += ',';
    out += std::to_string(row.fold);
    out += ',';
    out += format_double(row.macro_f1);
    out += ',';
    out += format_double(row.mean_macro_f1);
    out += '\n';
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
  if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace chaoscomp
