// Recall / precision / F-score of system syllabification against a gold
// corpus. A system syllable is correct when its [start, end) span coincides
// with a gold syllable span of the same word.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <iterator>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "mmseg/corpus_io.hpp"
#include "mmseg/segmenter.hpp"

namespace mmseg {

struct EvalReport {
  std::size_t correct_syllables = 0;
  std::size_t system_syllables = 0;
  std::size_t gold_syllables = 0;
  // Ratios in [0, 1]; rendered as percentages.
  double recall = 0.0;
  double precision = 0.0;
  double f_score = 0.0;
  double beta = 1.0;
};

/// Weighted harmonic mean of precision and recall; 0 when both are 0.
inline double f_measure(double precision, double recall, double beta = 1.0) {
  if (!(beta > 0.0)) throw std::invalid_argument("beta must be positive");
  const double b2 = beta * beta;
  const double denom = b2 * precision + recall;
  if (denom == 0.0) return 0.0;
  return (b2 + 1.0) * precision * recall / denom;
}

struct SpanBounds {
  std::size_t start;
  std::size_t end;
  friend auto operator<=>(const SpanBounds&, const SpanBounds&) = default;
};

inline std::vector<SpanBounds> gold_spans(const GoldEntry& gold) {
  std::vector<SpanBounds> spans;
  spans.reserve(gold.gold_syllables.size());
  std::size_t pos = 0;
  for (const Word& s : gold.gold_syllables) {
    spans.push_back({pos, pos + s.size()});
    pos += s.size();
  }
  return spans;
}

inline std::size_t count_matches(const SegmentedWord& system, const GoldEntry& gold) {
  if (system.original != gold.word) {
    throw std::domain_error("count_matches: system word '" + to_utf8(system.original) +
                            "' differs from gold word '" + to_utf8(gold.word) + "'");
  }
  std::vector<SpanBounds> sys;
  sys.reserve(system.syllables.size());
  for (const Syllable& s : system.syllables) sys.push_back({s.start, s.end});
  std::vector<SpanBounds> ref = gold_spans(gold);
  std::sort(sys.begin(), sys.end());
  std::sort(ref.begin(), ref.end());
  std::vector<SpanBounds> common;
  std::set_intersection(sys.begin(), sys.end(), ref.begin(), ref.end(),
                        std::back_inserter(common));
  return common.size();
}

inline EvalReport report_from_counts(std::size_t correct, std::size_t system, std::size_t gold,
                                     double beta = 1.0) {
  EvalReport r;
  r.correct_syllables = correct;
  r.system_syllables = system;
  r.gold_syllables = gold;
  r.beta = beta;
  r.recall = gold ? static_cast<double>(correct) / static_cast<double>(gold) : 0.0;
  r.precision = system ? static_cast<double>(correct) / static_cast<double>(system) : 0.0;
  r.f_score = f_measure(r.precision, r.recall, beta);
  return r;
}

inline EvalReport evaluate(std::span<const SegmentedWord> systems, std::span<const GoldEntry> golds,
                           double beta = 1.0) {
  if (!(beta > 0.0)) throw std::invalid_argument("beta must be positive");
  if (systems.size() != golds.size()) {
    throw std::invalid_argument("evaluate: " + std::to_string(systems.size()) +
                                " system words but " + std::to_string(golds.size()) +
                                " gold entries; first unpaired index " +
                                std::to_string(std::min(systems.size(), golds.size())));
  }
  std::size_t correct = 0;
  std::size_t sys_total = 0;
  std::size_t gold_total = 0;
  for (std::size_t k = 0; k < systems.size(); ++k) {
    if (systems[k].original != golds[k].word) {
      throw std::invalid_argument("evaluate: word mismatch at index " + std::to_string(k));
    }
    correct += count_matches(systems[k], golds[k]);
    sys_total += systems[k].syllables.size();
    gold_total += golds[k].gold_syllables.size();
  }
  return report_from_counts(correct, sys_total, gold_total, beta);
}

/// Segments every gold word with the system and scores the result.
inline EvalReport evaluate_corpus(std::span<const GoldEntry> golds, double beta = 1.0) {
  std::vector<SegmentedWord> systems;
  systems.reserve(golds.size());
  for (const GoldEntry& g : golds) systems.push_back(extract_syllables(g.word));
  return evaluate(systems, golds, beta);
}

inline std::string format_percent(double ratio) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", ratio * 100.0);
  return buf;
}

inline std::string to_text(const EvalReport& r) {
  std::string out;
  out += "correct_syllables\t" + std::to_string(r.correct_syllables) + "\n";
  out += "system_syllables\t" + std::to_string(r.system_syllables) + "\n";
  out += "gold_syllables\t" + std::to_string(r.gold_syllables) + "\n";
  out += "precision\t" + format_percent(r.precision) + "\n";
  out += "recall\t" + format_percent(r.recall) + "\n";
  out += "f_score\t" + format_percent(r.f_score) + "\n";
  nlohmann::json beta = r.beta;
  out += "beta\t" + beta.dump() + "\n";
  return out;
}

/// Percentages at full precision.
inline nlohmann::ordered_json to_json(const EvalReport& r) {
  nlohmann::ordered_json j;
  j["correct"] = r.correct_syllables;
  j["system"] = r.system_syllables;
  j["gold"] = r.gold_syllables;
  j["precision"] = r.precision * 100.0;
  j["recall"] = r.recall * 100.0;
  j["f_score"] = r.f_score * 100.0;
  j["beta"] = r.beta;
  return j;
}

}  // namespace mmseg
