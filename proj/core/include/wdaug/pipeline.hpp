#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "wdaug/config.hpp"

namespace wdaug::pipeline {

// Each command reads/writes fixed-name artifacts under config.out and
// refreshes out/manifest.json on success. Errors are thrown: UsageError
// (exit 1), PlanError (exit 2), ProviderError (exit 3).

// Prints the per-class plan table and writes plan.json.
void run_plan(const RunConfig& config);

// Carves the test set per the plan (or config.per_class_test); writes
// train.jsonl and test.jsonl.
void run_split(const RunConfig& config);

// Fills every class to the plan target with config.method; writes
// train_balanced.jsonl. Refuses to overwrite existing output unless force.
void run_augment(const RunConfig& config, bool force);

// Compares every augmented record against its parent; writes similarity.csv
// and similarity_summary.json, prints per-method means.
void run_similarity(const RunConfig& config);

struct TrainSpec {
  std::string type;  // row label, e.g. "original", "eda"
  std::filesystem::path path;
};

struct EvaluateOptions {
  // Default: out/train.jsonl as "original", plus out/train_balanced.jsonl
  // named after its augmentation method when present.
  std::vector<TrainSpec> trains;
  std::filesystem::path test;         // default: out/test.jsonl
  std::filesystem::path predictions;  // optional external predictions JSONL
  std::string predictions_type = "external";
};

// Trains the builtin classifier per train set, reports validation accuracy,
// test metrics, and the class-wise comparison; writes eval.json.
void run_evaluate(const RunConfig& config, const EvaluateOptions& options);

// Merges plan/similarity/eval artifacts into report.txt plus figures.csv.
void run_report(const RunConfig& config);

}  // namespace wdaug::pipeline
