#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wdaug/document.hpp"

namespace wdaug {

// Per-class augmentation plan. In derived mode the test carve-out size is
// min(counts) - max(deficit); in explicit mode it is supplied by the caller
// (for corpora too imbalanced for the derived rule).
struct BalancePlan {
  enum class Mode { Derived, Explicit };

  Mode mode = Mode::Derived;
  std::vector<std::string> classes;     // class names, fixed report order
  std::vector<long long> counts;        // original per-class record counts
  std::vector<long long> deficit;       // max(counts) - counts[j]
  long long test_per_class = 0;         // records carved into the test set, per class
  std::vector<double> reduction_pct;    // 100 * test_per_class / counts[j]
  std::vector<long long> reduced;       // counts[j] - test_per_class
  std::vector<long long> to_augment;    // target_per_class - reduced[j]
  long long target_per_class = 0;       // max(reduced)

  long long train_total() const;  // classes * target_per_class
  long long test_total() const;   // classes * test_per_class
};

// Derived mode. Throws PlanError when 2*min(counts) <= max(counts)
// ("imbalance too severe") or when the carve-out would empty a class.
BalancePlan compute_plan(const std::vector<std::string>& classes,
                         const std::vector<long long>& counts);

// Convenience over the four wellness labels in fixed order.
BalancePlan compute_plan(const std::vector<long long>& counts);

// Explicit mode: test size given, augmentation targets max(reduced).
BalancePlan compute_plan_with_test(const std::vector<std::string>& classes,
                                   const std::vector<long long>& counts,
                                   long long per_class_test);

std::string plan_to_json(const BalancePlan& plan);
BalancePlan plan_from_json(const std::string& text);

// Appendix-style table: WD | alpha | Red | RC | AS | Tot.
std::string render_plan_table(const BalancePlan& plan);

// One generated variant of a parent record.
struct AugmentResult {
  std::string text;
  std::string explanation;  // empty when the parent has no explanation
};

class Augmenter {
 public:
  virtual ~Augmenter() = default;
  virtual Source method() const = 0;
  // seed is unique per call; implementations must be deterministic in
  // (parent, seed).
  virtual AugmentResult augment(const LabeledDocument& parent, std::uint64_t seed) = 0;
};

// Fills every class up to plan.target_per_class. Originals pass through
// unchanged and come first; generated records follow in deterministic
// class-then-draw order with source = augmenter.method() and parent_id set.
// Parents are drawn by seeded round-robin: a fresh seeded permutation per
// full pass, so no parent repeats until all parents of the class were used.
// With parallelism > 1, augmenter.augment must be thread-safe; output order
// stays deterministic regardless.
LabeledCorpus apply_plan(const LabeledCorpus& train, const BalancePlan& plan,
                         Augmenter& augmenter, std::uint64_t seed, std::size_t parallelism = 1);

}  // namespace wdaug
