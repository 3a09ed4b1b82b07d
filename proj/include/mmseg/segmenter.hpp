// Right-to-left syllable extraction for Meetei Mayek words.
//
// A syllable has the shape
//
//   Major (Apun Major)? ( Sign SemivowelLetter | Sign? Final? ) Lum*
//
// where SemivowelLetter is one of UN / I / ATIYA. The scanner starts at the
// last code point, matches the longest syllable ending there, pushes it and
// continues to the left. Any orthographic violation makes the whole word a
// single unit.
#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mmseg/script.hpp"

namespace mmseg {

using Word = std::u32string;
using WordView = std::u32string_view;

enum class ViolationReason : std::uint8_t {
  ConsecutiveVowelSigns,
  ConsecutiveFinalLetters,
  LeadingDependentSign,
  MisplacedLigature,
  ForeignCharacter,
  FinalAfterNothing,
};

constexpr std::string_view reason_name(ViolationReason r) {
  switch (r) {
    case ViolationReason::ConsecutiveVowelSigns: return "ConsecutiveVowelSigns";
    case ViolationReason::ConsecutiveFinalLetters: return "ConsecutiveFinalLetters";
    case ViolationReason::LeadingDependentSign: return "LeadingDependentSign";
    case ViolationReason::MisplacedLigature: return "MisplacedLigature";
    case ViolationReason::ForeignCharacter: return "ForeignCharacter";
    case ViolationReason::FinalAfterNothing: return "FinalAfterNothing";
  }
  return "";
}

constexpr std::string_view reason_message(ViolationReason r) {
  switch (r) {
    case ViolationReason::ConsecutiveVowelSigns: return "two vowel signs in a row";
    case ViolationReason::ConsecutiveFinalLetters: return "two final letters in a row";
    case ViolationReason::LeadingDependentSign:
      return "vowel sign or intonation mark without a letter to attach to";
    case ViolationReason::MisplacedLigature: return "apun not between two major letters";
    case ViolationReason::ForeignCharacter: return "character outside the Meetei Mayek inventory";
    case ViolationReason::FinalAfterNothing: return "final letter without a letter to attach to";
  }
  return "";
}

struct Syllable {
  std::size_t start = 0;
  std::size_t end = 0;  // exclusive
  Word chars;
  bool semivowel_coda = false;

  std::size_t size() const { return end - start; }
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

enum class Status : std::uint8_t { Segmented, WholeWordFallback, NonMeetei };

constexpr std::string_view status_name(Status s) {
  switch (s) {
    case Status::Segmented: return "segmented";
    case Status::WholeWordFallback: return "fallback";
    case Status::NonMeetei: return "non-meetei";
  }
  return "";
}

struct SegmentedWord {
  Word original;
  std::vector<Syllable> syllables;  // left to right
  Status status = Status::Segmented;
  std::optional<ViolationReason> violation;  // set iff status != Segmented

  friend bool operator==(const SegmentedWord&, const SegmentedWord&) = default;
};

/// Half-open span [start, end) of a matched syllable.
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;
  bool semivowel_coda = false;

  friend bool operator==(const Span&, const Span&) = default;
};

using SyllableMatch = std::variant<Span, ViolationReason>;

/// Matches the rightmost syllable of region[0, e]. One step of the
/// right-to-left scan in extract_syllables.
inline SyllableMatch match_syllable_at_end(WordView region, std::size_t e) {
  if (region.empty() || e >= region.size()) {
    throw std::out_of_range("match_syllable_at_end: end index out of range");
  }
  // Signed cursor so that stepping past the region start is observable.
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(e);
  auto at = [&](std::ptrdiff_t k) { return region[static_cast<std::size_t>(k)]; };

  // Intonation marks belong to the syllable on their left.
  while (i >= 0 && is_intonation(at(i))) --i;
  if (i < 0) return ViolationReason::LeadingDependentSign;

  bool semivowel = false;
  bool took_final = false;
  bool took_sign = false;

  if (is_ligature(at(i))) return ViolationReason::MisplacedLigature;

  if (is_final(at(i))) {
    --i;
    took_final = true;
    if (i < 0) return ViolationReason::FinalAfterNothing;
    if (is_final(at(i))) return ViolationReason::ConsecutiveFinalLetters;
  } else if (is_vowel_letter(at(i)) && i > 0 && is_vowel_sign(at(i - 1))) {
    --i;
    semivowel = true;
  }

  if (is_vowel_sign(at(i))) {
    --i;
    took_sign = true;
    if (i < 0) return ViolationReason::LeadingDependentSign;
    if (is_vowel_sign(at(i))) return ViolationReason::ConsecutiveVowelSigns;
  }

  if (!is_major(at(i))) {
    switch (classify(at(i)).tag) {
      case CharTag::Foreign:
      case CharTag::Digit:
      case CharTag::Punctuation: return ViolationReason::ForeignCharacter;
      default: break;
    }
    if (is_ligature(at(i))) return ViolationReason::MisplacedLigature;
    if (took_sign || !took_final) return ViolationReason::LeadingDependentSign;
    return ViolationReason::FinalAfterNothing;
  }

  // Cluster onset: Major Apun Major.
  if (i >= 1 && is_ligature(at(i - 1))) {
    if (i < 2 || !is_major(at(i - 2))) return ViolationReason::MisplacedLigature;
    i -= 2;
  }

  return Span{static_cast<std::size_t>(i), e + 1, semivowel};
}

namespace detail {

inline SegmentedWord whole_word(WordView word, Status status, ViolationReason reason) {
  SegmentedWord out;
  out.original = Word(word);
  out.syllables.push_back(Syllable{0, word.size(), Word(word), false});
  out.status = status;
  out.violation = reason;
  return out;
}

}  // namespace detail

/// Splits a word into syllables. Words that break the orthographic rules are
/// returned whole with the reason; words with characters that cannot occur
/// inside a word (foreign characters, digits, Cheikhei) are returned whole
/// with status NonMeetei.
inline SegmentedWord extract_syllables(WordView word) {
  if (word.empty()) throw std::domain_error("extract_syllables: empty word");

  for (char32_t c : word) {
    switch (classify(c).tag) {
      case CharTag::Foreign:
      case CharTag::Digit:
      case CharTag::Punctuation:
        return detail::whole_word(word, Status::NonMeetei, ViolationReason::ForeignCharacter);
      default: break;
    }
  }
  for (std::size_t k = 1; k < word.size(); ++k) {
    if (is_vowel_sign(word[k - 1]) && is_vowel_sign(word[k])) {
      return detail::whole_word(word, Status::WholeWordFallback,
                                ViolationReason::ConsecutiveVowelSigns);
    }
    if (is_final(word[k - 1]) && is_final(word[k])) {
      return detail::whole_word(word, Status::WholeWordFallback,
                                ViolationReason::ConsecutiveFinalLetters);
    }
  }

  // Syllables are found right to left; a stack gives them back in reading order.
  std::vector<Span> stack;
  std::size_t remaining = word.size();
  while (remaining > 0) {
    const SyllableMatch m = match_syllable_at_end(word.substr(0, remaining), remaining - 1);
    if (const auto* reason = std::get_if<ViolationReason>(&m)) {
      return detail::whole_word(word, Status::WholeWordFallback, *reason);
    }
    const Span span = std::get<Span>(m);
    stack.push_back(span);
    remaining = span.start;
  }

  SegmentedWord out;
  out.original = Word(word);
  out.syllables.reserve(stack.size());
  while (!stack.empty()) {
    const Span s = stack.back();
    stack.pop_back();
    out.syllables.push_back(
        Syllable{s.start, s.end, Word(word.substr(s.start, s.end - s.start)), s.semivowel_coda});
  }
  return out;
}

/// Six-state acceptor for a single syllable. Independent of the scanner in
/// match_syllable_at_end; the two are cross-checked in the tests.
inline bool conforms_to_syllable_grammar(WordView syl) {
  enum State { Start, Base, Joined, ClusterBase, AfterSign, Closed };
  State s = Start;
  for (char32_t c : syl) {
    const CharClass cls = classify(c);
    switch (s) {
      case Start:
        if (cls.tag != CharTag::MajorLetter) return false;
        s = Base;
        break;
      case Base:
      case ClusterBase:
        if (cls.tag == CharTag::Ligature && s == Base) s = Joined;
        else if (cls.tag == CharTag::VowelSign) s = AfterSign;
        else if (cls.tag == CharTag::FinalLetter || cls.tag == CharTag::Intonation) s = Closed;
        else return false;
        break;
      case Joined:
        if (cls.tag != CharTag::MajorLetter) return false;
        s = ClusterBase;
        break;
      case AfterSign:
        if (cls.is_vowel_letter || cls.tag == CharTag::FinalLetter ||
            cls.tag == CharTag::Intonation) {
          s = Closed;
        } else {
          return false;
        }
        break;
      case Closed:
        if (cls.tag != CharTag::Intonation) return false;
        break;
    }
  }
  return s != Start && s != Joined;
}

}  // namespace mmseg
