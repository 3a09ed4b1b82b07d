// Character-level consonant/vowel patterns of syllables and their
// correspondence with the linguistic syllable classes.
#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mmseg/script.hpp"
#include "mmseg/segmenter.hpp"

namespace mmseg {

/// A non-empty string over {'C', 'V'}.
class PatternString {
 public:
  PatternString() = default;
  explicit PatternString(std::string symbols) : symbols_(std::move(symbols)) {
    for (char c : symbols_) {
      if (c != 'C' && c != 'V') throw std::invalid_argument("pattern symbols must be C or V");
    }
  }

  const std::string& str() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  char operator[](std::size_t i) const { return symbols_[i]; }

  friend bool operator==(const PatternString&, const PatternString&) = default;
  friend auto operator<=>(const PatternString&, const PatternString&) = default;

 private:
  std::string symbols_;
};

/// The eleven observed character patterns, plus a bucket for anything else.
/// Enumerator order is the published listing order.
enum class ComputationalPattern : std::uint8_t {
  V,
  CV,
  C,
  VVV,
  CVC,
  CC,
  CVV,
  VV,
  VVC,
  VC,
  CCVC,
  OutOfInventory,
};

inline constexpr std::size_t kComputationalPatternCount = 12;

inline constexpr std::array<ComputationalPattern, kComputationalPatternCount> kAllComputationalPatterns{
    ComputationalPattern::V,   ComputationalPattern::CV,  ComputationalPattern::C,
    ComputationalPattern::VVV, ComputationalPattern::CVC, ComputationalPattern::CC,
    ComputationalPattern::CVV, ComputationalPattern::VV,  ComputationalPattern::VVC,
    ComputationalPattern::VC,  ComputationalPattern::CCVC, ComputationalPattern::OutOfInventory,
};

enum class LinguisticClass : std::uint8_t { V, VC, CV, CCV, CVC, CCVC };

constexpr std::string_view pattern_name(ComputationalPattern p) {
  switch (p) {
    case ComputationalPattern::V: return "V";
    case ComputationalPattern::CV: return "CV";
    case ComputationalPattern::C: return "C";
    case ComputationalPattern::VVV: return "VVV";
    case ComputationalPattern::CVC: return "CVC";
    case ComputationalPattern::CC: return "CC";
    case ComputationalPattern::CVV: return "CVV";
    case ComputationalPattern::VV: return "VV";
    case ComputationalPattern::VVC: return "VVC";
    case ComputationalPattern::VC: return "VC";
    case ComputationalPattern::CCVC: return "CCVC";
    case ComputationalPattern::OutOfInventory: return "OutOfInventory";
  }
  return "";
}

constexpr std::string_view class_name(LinguisticClass c) {
  switch (c) {
    case LinguisticClass::V: return "V";
    case LinguisticClass::VC: return "VC";
    case LinguisticClass::CV: return "CV";
    case LinguisticClass::CCV: return "CCV";
    case LinguisticClass::CVC: return "CVC";
    case LinguisticClass::CCVC: return "CCVC";
  }
  return "";
}

/// V for vowel characters, C for consonant letters and final letters.
/// Apun and Lum contribute nothing.
inline PatternString cv_pattern(WordView chars) {
  std::string out;
  out.reserve(chars.size());
  for (char32_t c : chars) {
    const CharClass cls = classify(c);
    switch (cls.tag) {
      case CharTag::MajorLetter: out.push_back(cls.is_vowel_letter ? 'V' : 'C'); break;
      case CharTag::VowelSign: out.push_back('V'); break;
      case CharTag::FinalLetter: out.push_back('C'); break;
      case CharTag::Ligature:
      case CharTag::Intonation: break;
      default:
        throw std::invalid_argument("cv_pattern: " + format_codepoint(c) +
                                    " has no consonant/vowel value");
    }
  }
  if (out.empty()) throw std::invalid_argument("cv_pattern: no consonant or vowel characters");
  return PatternString(std::move(out));
}

inline PatternString cv_pattern(const Syllable& syl) { return cv_pattern(WordView(syl.chars)); }

inline ComputationalPattern classify_pattern(const PatternString& p) {
  if (p.empty()) throw std::domain_error("classify_pattern: empty pattern");
  for (ComputationalPattern cand : kAllComputationalPatterns) {
    if (cand != ComputationalPattern::OutOfInventory && pattern_name(cand) == p.str()) return cand;
  }
  return ComputationalPattern::OutOfInventory;
}

/// Character pattern to linguistic class. There is no published source
/// pattern for CCV, so OutOfInventory has no mapping.
inline LinguisticClass to_linguistic_class(ComputationalPattern p) {
  switch (p) {
    case ComputationalPattern::V:
    case ComputationalPattern::VV: return LinguisticClass::V;
    case ComputationalPattern::VC:
    case ComputationalPattern::VVC:
    case ComputationalPattern::VVV: return LinguisticClass::VC;
    case ComputationalPattern::CV:
    case ComputationalPattern::C: return LinguisticClass::CV;
    case ComputationalPattern::CVC:
    case ComputationalPattern::CVV:
    case ComputationalPattern::CC: return LinguisticClass::CVC;
    case ComputationalPattern::CCVC: return LinguisticClass::CCVC;
    case ComputationalPattern::OutOfInventory: break;
  }
  throw std::domain_error("to_linguistic_class: pattern has no published linguistic class");
}

struct PatternHistogram {
  std::array<std::size_t, kComputationalPatternCount> counts{};
  std::size_t unsegmented = 0;  // words, not syllables

  std::size_t operator[](ComputationalPattern p) const {
    return counts[static_cast<std::size_t>(p)];
  }
  std::size_t& operator[](ComputationalPattern p) { return counts[static_cast<std::size_t>(p)]; }

  friend bool operator==(const PatternHistogram&, const PatternHistogram&) = default;
};

inline void accumulate(PatternHistogram& hist, const SegmentedWord& word) {
  if (word.status != Status::Segmented) {
    ++hist.unsegmented;
    return;
  }
  for (const Syllable& syl : word.syllables) ++hist[classify_pattern(cv_pattern(syl))];
}

inline PatternHistogram pattern_histogram(std::span<const SegmentedWord> words) {
  PatternHistogram hist;
  for (const SegmentedWord& w : words) accumulate(hist, w);
  return hist;
}

}  // namespace mmseg
