#include "wdaug/balance.hpp"

#include <algorithm>
#include <cstdio>
#include <unordered_map>

#include <json.hpp>

#include "wdaug/error.hpp"
#include "wdaug/parallel.hpp"
#include "wdaug/rng.hpp"

namespace wdaug {
namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<std::string> default_classes() {
  std::vector<std::string> names;
  names.reserve(kNumLabels);
  for (const Label label : kLabels) names.emplace_back(label_code(label));
  return names;
}

void validate_inputs(const std::vector<std::string>& classes,
                     const std::vector<long long>& counts) {
  if (classes.size() != counts.size()) {
    throw PlanError("class name and count vectors differ in length");
  }
  if (counts.size() < 2) {
    throw PlanError("need at least two classes to balance");
  }
  for (std::size_t j = 0; j < counts.size(); ++j) {
    if (counts[j] < 1) {
      throw PlanError("class " + classes[j] + " has no records");
    }
  }
}

BalancePlan finish_plan(BalancePlan plan) {
  const long long max_count = *std::max_element(plan.counts.begin(), plan.counts.end());
  plan.deficit.clear();
  plan.reduction_pct.clear();
  plan.reduced.clear();
  for (std::size_t j = 0; j < plan.counts.size(); ++j) {
    plan.deficit.push_back(max_count - plan.counts[j]);
    plan.reduction_pct.push_back(100.0 * static_cast<double>(plan.test_per_class) /
                                 static_cast<double>(plan.counts[j]));
    const long long rc = plan.counts[j] - plan.test_per_class;
    if (rc <= 0) {
      throw PlanError("training set would be empty for class " + plan.classes[j] +
                      " (test carve-out " + std::to_string(plan.test_per_class) + " of " +
                      std::to_string(plan.counts[j]) + ")");
    }
    plan.reduced.push_back(rc);
  }
  plan.target_per_class = *std::max_element(plan.reduced.begin(), plan.reduced.end());
  plan.to_augment.clear();
  for (const long long rc : plan.reduced) {
    plan.to_augment.push_back(plan.target_per_class - rc);
  }
  return plan;
}

}  // namespace

long long BalancePlan::train_total() const {
  return static_cast<long long>(classes.size()) * target_per_class;
}

long long BalancePlan::test_total() const {
  return static_cast<long long>(classes.size()) * test_per_class;
}

BalancePlan compute_plan(const std::vector<std::string>& classes,
                         const std::vector<long long>& counts) {
  validate_inputs(classes, counts);
  const long long min_count = *std::min_element(counts.begin(), counts.end());
  const long long max_count = *std::max_element(counts.begin(), counts.end());
  // test size = minority count minus the largest deficit from the majority
  const long long test_per_class = min_count - (max_count - min_count);
  if (test_per_class <= 0) {
    throw PlanError("imbalance too severe for this split rule: 2*min(counts) <= max(counts) (" +
                    std::to_string(min_count) + " vs " + std::to_string(max_count) + ")");
  }
  BalancePlan plan;
  plan.mode = BalancePlan::Mode::Derived;
  plan.classes = classes;
  plan.counts = counts;
  plan.test_per_class = test_per_class;
  return finish_plan(std::move(plan));
}

BalancePlan compute_plan(const std::vector<long long>& counts) {
  return compute_plan(default_classes(), counts);
}

BalancePlan compute_plan_with_test(const std::vector<std::string>& classes,
                                   const std::vector<long long>& counts,
                                   long long per_class_test) {
  validate_inputs(classes, counts);
  if (per_class_test <= 0) {
    throw PlanError("explicit per-class test size must be positive");
  }
  BalancePlan plan;
  plan.mode = BalancePlan::Mode::Explicit;
  plan.classes = classes;
  plan.counts = counts;
  plan.test_per_class = per_class_test;
  return finish_plan(std::move(plan));
}

std::string plan_to_json(const BalancePlan& plan) {
  ordered_json j;
  j["mode"] = plan.mode == BalancePlan::Mode::Derived ? "derived" : "explicit";
  j["classes"] = plan.classes;
  j["counts"] = plan.counts;
  j["deficit"] = plan.deficit;
  j["test_per_class"] = plan.test_per_class;
  j["reduction_pct"] = plan.reduction_pct;
  j["reduced"] = plan.reduced;
  j["to_augment"] = plan.to_augment;
  j["target_per_class"] = plan.target_per_class;
  j["train_total"] = plan.train_total();
  j["test_total"] = plan.test_total();
  return j.dump(2) + "\n";
}

BalancePlan plan_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw ParseError(std::string("malformed plan JSON: ") + e.what());
  }
  BalancePlan plan;
  try {
    const std::string mode = j.at("mode").get<std::string>();
    if (mode == "derived") {
      plan.mode = BalancePlan::Mode::Derived;
    } else if (mode == "explicit") {
      plan.mode = BalancePlan::Mode::Explicit;
    } else {
      throw ParseError("unknown plan mode '" + mode + "'");
    }
    plan.classes = j.at("classes").get<std::vector<std::string>>();
    plan.counts = j.at("counts").get<std::vector<long long>>();
    plan.deficit = j.at("deficit").get<std::vector<long long>>();
    plan.test_per_class = j.at("test_per_class").get<long long>();
    plan.reduction_pct = j.at("reduction_pct").get<std::vector<double>>();
    plan.reduced = j.at("reduced").get<std::vector<long long>>();
    plan.to_augment = j.at("to_augment").get<std::vector<long long>>();
    plan.target_per_class = j.at("target_per_class").get<long long>();
  } catch (const ordered_json::exception& e) {
    throw ParseError(std::string("incomplete plan JSON: ") + e.what());
  }
  return plan;
}

std::string render_plan_table(const BalancePlan& plan) {
  std::string out;
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%-6s %8s %8s %8s %8s %8s\n", "WD", "alpha", "Red", "RC", "AS",
                "Tot.");
  out += buf;
  for (std::size_t j = 0; j < plan.classes.size(); ++j) {
    std::snprintf(buf, sizeof(buf), "%-6s %8lld %8.1f %8lld %8lld %8lld\n",
                  plan.classes[j].c_str(), plan.counts[j], plan.reduction_pct[j], plan.reduced[j],
                  plan.to_augment[j], plan.target_per_class);
    out += buf;
  }
  std::snprintf(buf, sizeof(buf), "test set: %lld per class (%lld total), train total %lld\n",
                plan.test_per_class, plan.test_total(), plan.train_total());
  out += buf;
  return out;
}

namespace {

struct Draw {
  std::size_t parent_index;
  std::size_t class_index;
  std::size_t ordinal;  // nth variant of this parent, 1-based
  std::uint64_t seed;
};

// Round-robin schedule: per class, consume a seeded permutation of the
// parents; reshuffle for each further pass.
std::vector<Draw> schedule_draws(const LabeledCorpus& train, const BalancePlan& plan,
                                 std::uint64_t seed) {
  std::vector<Draw> draws;
  std::unordered_map<std::string, std::size_t> variants_per_parent;
  for (std::size_t j = 0; j < kNumLabels; ++j) {
    const auto parents = train.indices_of(kLabels[j]);
    std::vector<std::size_t> order;
    std::size_t cycle = 0;
    std::size_t cursor = 0;
    for (long long k = 0; k < plan.to_augment[j]; ++k) {
      if (cursor == order.size()) {
        rng::Engine engine(rng::derive_seed(
            seed, "augment/" + plan.classes[j] + "/cycle" + std::to_string(cycle++)));
        order = engine.permutation(parents.size());
        cursor = 0;
      }
      const std::size_t parent_index = parents[order[cursor++]];
      Draw d;
      d.parent_index = parent_index;
      d.class_index = j;
      d.ordinal = ++variants_per_parent[train[parent_index].id];
      d.seed = rng::derive_seed(seed, "augment/" + plan.classes[j] + "/" + std::to_string(k));
      draws.push_back(d);
    }
  }
  return draws;
}

}  // namespace

LabeledCorpus apply_plan(const LabeledCorpus& train, const BalancePlan& plan,
                         Augmenter& augmenter, std::uint64_t seed, std::size_t parallelism) {
  if (plan.classes.size() != kNumLabels) {
    throw PlanError("apply_plan expects a plan over the four wellness classes");
  }
  for (std::size_t j = 0; j < kNumLabels; ++j) {
    const auto have = static_cast<long long>(train.count(kLabels[j]));
    if (have != plan.reduced[j]) {
      throw PlanError("train count mismatch for class " + plan.classes[j] + ": corpus has " +
                      std::to_string(have) + ", plan expects " + std::to_string(plan.reduced[j]));
    }
  }
  const auto draws = schedule_draws(train, plan, seed);
  const auto generated = parallel_map<AugmentResult>(
      draws.size(), parallelism, [&](std::size_t i) -> AugmentResult {
        const Draw& d = draws[i];
        const LabeledDocument& parent = train[d.parent_index];
        try {
          return augmenter.augment(parent, d.seed);
        } catch (const Error& e) {
          throw ProviderError("augmentation failed for parent '" + parent.id + "' (class " +
                              plan.classes[d.class_index] + "): " + e.what());
        }
      });
  std::vector<LabeledDocument> out = train.documents();
  out.reserve(train.size() + draws.size());
  for (std::size_t i = 0; i < draws.size(); ++i) {
    const Draw& d = draws[i];
    const LabeledDocument& parent = train[d.parent_index];
    LabeledDocument doc;
    doc.id = parent.id + "-" + std::string(source_name(augmenter.method())) + "-" +
             std::to_string(d.ordinal);
    doc.text = generated[i].text;
    doc.explanation = generated[i].explanation;
    doc.label = kLabels[d.class_index];
    doc.source = augmenter.method();
    doc.parent_id = parent.id;
    out.push_back(std::move(doc));
  }
  return LabeledCorpus(std::move(out));
}

}  // namespace wdaug
