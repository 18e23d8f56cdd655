#pragma once
// File formats: CSV dataset ingestion, JSON model persistence, and the small
// text emitters (metrics JSON, cv_table CSV, dataset CSV).

#include <string>
#include <vector>

#include "chaoscomp/classifier.hpp"
#include "chaoscomp/pipeline.hpp"

namespace chaoscomp {

// Reads a CSV with a header row; the named label column (default: the last
// column) holds class labels, every other column must be numeric. Labels are
// mapped to dense integers in first-appearance order and the mapping is kept
// in class_names.
Dataset load_csv(const std::string& path, const std::string& label_column = "");

// Serializes a dataset back to CSV (shortest round-trip number formatting).
std::string dataset_to_csv(const Dataset& ds);

// JSON model document, schema-versioned ("version": 1), full-precision
// probabilities; load(save(m)) predicts bit-identically to m.
void save_model(const ChaosCompModel& model, const std::string& path);
ChaosCompModel load_model(const std::string& path);
std::string model_to_json(const ChaosCompModel& model);
ChaosCompModel model_from_json(const std::string& text);

// {"accuracy": ..., "macro_precision": ..., "macro_recall": ...,
//  "macro_f1": ..., "confusion": [[...], ...]}
std::string metrics_to_json(const Metrics& metrics);

// Columns: threshold,n,fold,macro_f1,mean_macro_f1 — one row per fold.
std::string cv_table_to_csv(const std::vector<CvRow>& rows);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace chaoscomp
