// Regenerates the bundled synthetic corpora under data/. The checked-in
// files must match this generator's output exactly; a unit test guards
// against drift. Usage: wdaug_synthgen <data-dir>

#include <filesystem>
#include <fstream>
#include <iostream>

#include <json.hpp>

#include "support/synthetic.hpp"
#include "wdaug/corpus_io.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: wdaug_synthgen <data-dir>\n";
    return 1;
  }
  const std::filesystem::path out_dir = argv[1];
  std::filesystem::create_directories(out_dir);

  using wdaug::testing::SynthParams;
  const SynthParams imbalanced;  // 400/200/100/100, seed 2024
  wdaug::write_corpus(wdaug::testing::make_synthetic_corpus(imbalanced),
                      out_dir / "synthetic_imbalanced.jsonl");

  nlohmann::ordered_json lexicon_json;
  for (const auto& [word, synonyms] : wdaug::testing::make_synthetic_lexicon(imbalanced)) {
    lexicon_json[word] = synonyms;
  }
  std::ofstream lex(out_dir / "synthetic_lexicon.json", std::ios::binary);
  lex << lexicon_json.dump(2) << "\n";

  SynthParams demo;
  demo.counts = {28, 22, 34, 24};
  demo.seed = 7;
  demo.id_prefix = "demo";
  wdaug::write_corpus(wdaug::testing::make_synthetic_corpus(demo), out_dir / "demo_mixed.jsonl");

  std::cout << "wrote synthetic_imbalanced.jsonl, synthetic_lexicon.json, demo_mixed.jsonl under "
            << out_dir.string() << "\n";
  return 0;
}
