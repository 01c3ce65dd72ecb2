#include "wdaug/label.hpp"

namespace wdaug {

std::string_view label_code(Label label) {
  switch (label) {
    case Label::PA:
      return "PA";
    case Label::IVA:
      return "IVA";
    case Label::SA:
      return "SA";
    case Label::SEA:
      return "SEA";
  }
  return "PA";
}

std::string_view label_long_name(Label label) {
  switch (label) {
    case Label::PA:
      return "Physical Aspect";
    case Label::IVA:
      return "Intellectual and Vocational Aspect";
    case Label::SA:
      return "Social Aspect";
    case Label::SEA:
      return "Spiritual and Emotional Aspect";
  }
  return "Physical Aspect";
}

std::optional<Label> parse_label(std::string_view code) {
  if (code == "PA") return Label::PA;
  if (code == "IVA") return Label::IVA;
  if (code == "SA") return Label::SA;
  if (code == "SEA") return Label::SEA;
  return std::nullopt;
}

std::string_view source_name(Source source) {
  switch (source) {
    case Source::Original:
      return "original";
    case Source::Eda:
      return "eda";
    case Source::Bt:
      return "bt";
    case Source::Llm:
      return "llm";
  }
  return "original";
}

std::optional<Source> parse_source(std::string_view name) {
  if (name == "original") return Source::Original;
  if (name == "eda") return Source::Eda;
  if (name == "bt") return Source::Bt;
  if (name == "llm") return Source::Llm;
  return std::nullopt;
}

}  // namespace wdaug
