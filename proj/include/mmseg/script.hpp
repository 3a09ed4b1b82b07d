// Meetei Mayek character inventory and classification.
//
// The inventory is bound to the Unicode "Meetei Mayek" block:
//   U+ABC0..U+ABDA  major letters (Iyek Ipee)
//   U+ABDB..U+ABE2  final letters (Lonsum Iyek)
//   U+ABE3..U+ABEA  dependent vowel signs (Cheitap Iyek)
//   U+ABEB          Cheikhei (full stop)
//   U+ABEC          Lum Iyek (intonation)
//   U+ABED          Apun Iyek (ligature)
//   U+ABF0..U+ABF9  digits (Cheising Iyek)
#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mmseg {

enum class CharTag : std::uint8_t {
  MajorLetter,
  VowelSign,
  FinalLetter,
  Digit,
  Ligature,
  Intonation,
  Punctuation,
  Foreign,
};

struct CharClass {
  CharTag tag = CharTag::Foreign;
  // Only meaningful for MajorLetter: UN, I and ATIYA sound as vowels.
  bool is_vowel_letter = false;

  friend constexpr bool operator==(CharClass, CharClass) = default;
};

struct ScriptChar {
  char32_t codepoint;
  std::string_view unicode_name;
  std::string_view traditional_name;
  CharClass char_class;
  std::string_view romanization;
};

constexpr std::string_view tag_name(CharTag tag) {
  switch (tag) {
    case CharTag::MajorLetter: return "MajorLetter";
    case CharTag::VowelSign: return "VowelSign";
    case CharTag::FinalLetter: return "FinalLetter";
    case CharTag::Digit: return "Digit";
    case CharTag::Ligature: return "Ligature";
    case CharTag::Intonation: return "Intonation";
    case CharTag::Punctuation: return "Punctuation";
    case CharTag::Foreign: return "Foreign";
  }
  return "Foreign";
}

// Named code points used throughout the library and its tests.
namespace cp {
inline constexpr char32_t KOK = 0xABC0;
inline constexpr char32_t SAM = 0xABC1;
inline constexpr char32_t LAI = 0xABC2;
inline constexpr char32_t MIT = 0xABC3;
inline constexpr char32_t PA = 0xABC4;
inline constexpr char32_t NA = 0xABC5;
inline constexpr char32_t CHIL = 0xABC6;
inline constexpr char32_t TIL = 0xABC7;
inline constexpr char32_t KHOU = 0xABC8;
inline constexpr char32_t NGOU = 0xABC9;
inline constexpr char32_t THOU = 0xABCA;
inline constexpr char32_t WAI = 0xABCB;
inline constexpr char32_t YANG = 0xABCC;
inline constexpr char32_t HUK = 0xABCD;
inline constexpr char32_t UN = 0xABCE;
inline constexpr char32_t I = 0xABCF;
inline constexpr char32_t PHAM = 0xABD0;
inline constexpr char32_t ATIYA = 0xABD1;
inline constexpr char32_t GOK = 0xABD2;
inline constexpr char32_t JHAM = 0xABD3;
inline constexpr char32_t RAI = 0xABD4;
inline constexpr char32_t BA = 0xABD5;
inline constexpr char32_t JIL = 0xABD6;
inline constexpr char32_t DIL = 0xABD7;
inline constexpr char32_t GHOU = 0xABD8;
inline constexpr char32_t DHOU = 0xABD9;
inline constexpr char32_t BHAM = 0xABDA;

inline constexpr char32_t KOK_LONSUM = 0xABDB;
inline constexpr char32_t LAI_LONSUM = 0xABDC;
inline constexpr char32_t MIT_LONSUM = 0xABDD;
inline constexpr char32_t PA_LONSUM = 0xABDE;
inline constexpr char32_t NA_LONSUM = 0xABDF;
inline constexpr char32_t TIL_LONSUM = 0xABE0;
inline constexpr char32_t NGOU_LONSUM = 0xABE1;
inline constexpr char32_t I_LONSUM = 0xABE2;

inline constexpr char32_t ONAP = 0xABE3;
inline constexpr char32_t INAP = 0xABE4;
inline constexpr char32_t ANAP = 0xABE5;
inline constexpr char32_t YENAP = 0xABE6;
inline constexpr char32_t SOUNAP = 0xABE7;
inline constexpr char32_t UNAP = 0xABE8;
inline constexpr char32_t CHEINAP = 0xABE9;
inline constexpr char32_t NUNG = 0xABEA;

inline constexpr char32_t CHEIKHEI = 0xABEB;
inline constexpr char32_t LUM = 0xABEC;
inline constexpr char32_t APUN = 0xABED;

inline constexpr char32_t DIGIT_ZERO = 0xABF0;
inline constexpr char32_t DIGIT_NINE = 0xABF9;
}  // namespace cp

namespace detail {

inline constexpr CharClass kConsonant{CharTag::MajorLetter, false};
inline constexpr CharClass kVowelLetter{CharTag::MajorLetter, true};
inline constexpr CharClass kSign{CharTag::VowelSign, false};
inline constexpr CharClass kFinal{CharTag::FinalLetter, false};
inline constexpr CharClass kDigit{CharTag::Digit, false};

// Sorted by code point.
inline constexpr std::array<ScriptChar, 56> kInventory{{
    {0xABC0, "KOK", "kok", kConsonant, "k"},
    {0xABC1, "SAM", "sam", kConsonant, "s"},
    {0xABC2, "LAI", "lai", kConsonant, "l"},
    {0xABC3, "MIT", "mit", kConsonant, "m"},
    {0xABC4, "PA", "pa", kConsonant, "p"},
    {0xABC5, "NA", "na", kConsonant, "n"},
    {0xABC6, "CHIL", "chil", kConsonant, "ch"},
    {0xABC7, "TIL", "til", kConsonant, "t"},
    {0xABC8, "KHOU", "khou", kConsonant, "kh"},
    {0xABC9, "NGOU", "ngou", kConsonant, "ng"},
    {0xABCA, "THOU", "thou", kConsonant, "th"},
    {0xABCB, "WAI", "wai", kConsonant, "w"},
    {0xABCC, "YANG", "yang", kConsonant, "y"},
    {0xABCD, "HUK", "huk", kConsonant, "h"},
    {0xABCE, "UN", "un", kVowelLetter, "u"},
    {0xABCF, "I", "ee", kVowelLetter, "i"},
    {0xABD0, "PHAM", "pham", kConsonant, "ph"},
    {0xABD1, "ATIYA", "atia", kVowelLetter, "a"},
    {0xABD2, "GOK", "gok", kConsonant, "g"},
    {0xABD3, "JHAM", "jham", kConsonant, "jh"},
    {0xABD4, "RAI", "rai", kConsonant, "r"},
    {0xABD5, "BA", "ba", kConsonant, "b"},
    {0xABD6, "JIL", "jil", kConsonant, "j"},
    {0xABD7, "DIL", "dil", kConsonant, "d"},
    {0xABD8, "GHOU", "ghou", kConsonant, "gh"},
    {0xABD9, "DHOU", "dhou", kConsonant, "dh"},
    {0xABDA, "BHAM", "bham", kConsonant, "bh"},
    {0xABDB, "KOK LONSUM", "kok lonsum", kFinal, "k"},
    {0xABDC, "LAI LONSUM", "lai lonsum", kFinal, "l"},
    {0xABDD, "MIT LONSUM", "mit lonsum", kFinal, "m"},
    {0xABDE, "PA LONSUM", "pa lonsum", kFinal, "p"},
    {0xABDF, "NA LONSUM", "na lonsum", kFinal, "n"},
    {0xABE0, "TIL LONSUM", "til lonsum", kFinal, "t"},
    {0xABE1, "NGOU LONSUM", "ngou lonsum", kFinal, "ng"},
    {0xABE2, "I LONSUM", "ee lonsum", kFinal, "i"},
    {0xABE3, "ONAP", "ot nap", kSign, "o"},
    {0xABE4, "INAP", "inap", kSign, "i"},
    {0xABE5, "ANAP", "aatap", kSign, "aa"},
    {0xABE6, "YENAP", "yetnap", kSign, "e"},
    {0xABE7, "SOUNAP", "sounap", kSign, "ou"},
    {0xABE8, "UNAP", "unap", kSign, "u"},
    {0xABE9, "CHEINAP", "cheinap", kSign, "ei"},
    {0xABEA, "NUNG", "nung", kSign, "ng"},
    {0xABEB, "CHEIKHEI", "cheikhei", {CharTag::Punctuation, false}, "||"},
    {0xABEC, "LUM IYEK", "lum iyek", {CharTag::Intonation, false}, "."},
    {0xABED, "APUN IYEK", "apun iyek", {CharTag::Ligature, false}, "_"},
    {0xABF0, "DIGIT ZERO", "phun", kDigit, "0"},
    {0xABF1, "DIGIT ONE", "ama", kDigit, "1"},
    {0xABF2, "DIGIT TWO", "ani", kDigit, "2"},
    {0xABF3, "DIGIT THREE", "ahum", kDigit, "3"},
    {0xABF4, "DIGIT FOUR", "mari", kDigit, "4"},
    {0xABF5, "DIGIT FIVE", "manga", kDigit, "5"},
    {0xABF6, "DIGIT SIX", "taruk", kDigit, "6"},
    {0xABF7, "DIGIT SEVEN", "taret", kDigit, "7"},
    {0xABF8, "DIGIT EIGHT", "nipal", kDigit, "8"},
    {0xABF9, "DIGIT NINE", "mapal", kDigit, "9"},
}};

constexpr const ScriptChar* lookup(char32_t c) {
  auto it = std::lower_bound(kInventory.begin(), kInventory.end(), c,
                             [](const ScriptChar& s, char32_t v) { return s.codepoint < v; });
  if (it == kInventory.end() || it->codepoint != c) return nullptr;
  return &*it;
}

inline bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) ==
                  std::tolower(static_cast<unsigned char>(y));
         });
}

}  // namespace detail

/// Full fixed inventory, ordered by code point.
constexpr std::span<const ScriptChar> inventory() { return detail::kInventory; }

/// Total over all scalar values; anything outside the inventory is Foreign.
constexpr CharClass classify(char32_t c) {
  const ScriptChar* s = detail::lookup(c);
  return s ? s->char_class : CharClass{};
}

constexpr bool is_major(char32_t c) { return classify(c).tag == CharTag::MajorLetter; }
constexpr bool is_vowel_letter(char32_t c) { return classify(c).is_vowel_letter; }
constexpr bool is_vowel_sign(char32_t c) { return classify(c).tag == CharTag::VowelSign; }
constexpr bool is_final(char32_t c) { return classify(c).tag == CharTag::FinalLetter; }
constexpr bool is_ligature(char32_t c) { return c == cp::APUN; }
constexpr bool is_intonation(char32_t c) { return c == cp::LUM; }
constexpr bool is_digit(char32_t c) { return classify(c).tag == CharTag::Digit; }

/// "U+ABC0" style rendering.
inline std::string format_codepoint(char32_t c) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string digits;
  auto v = static_cast<std::uint32_t>(c);
  do {
    digits.insert(digits.begin(), kHex[v & 0xF]);
    v >>= 4;
  } while (v != 0);
  while (digits.size() < 4) digits.insert(digits.begin(), '0');
  return "U+" + digits;
}

/// Vowel characters are the eight vowel signs plus the three vowel letters;
/// every other inventory member counts as non-vowel.
inline bool is_vowel_character(char32_t c) {
  const CharClass cls = classify(c);
  if (cls.tag == CharTag::Foreign) {
    throw std::invalid_argument("not a Meetei Mayek character: " + format_codepoint(c));
  }
  return cls.tag == CharTag::VowelSign || cls.is_vowel_letter;
}

/// Maps a final letter (lonsum) to the major letter it derives from.
inline char32_t lonsum_base(char32_t c) {
  switch (c) {
    case cp::KOK_LONSUM: return cp::KOK;
    case cp::LAI_LONSUM: return cp::LAI;
    case cp::MIT_LONSUM: return cp::MIT;
    case cp::PA_LONSUM: return cp::PA;
    case cp::NA_LONSUM: return cp::NA;
    case cp::TIL_LONSUM: return cp::TIL;
    case cp::NGOU_LONSUM: return cp::NGOU;
    case cp::I_LONSUM: return cp::I;
    default: break;
  }
  throw std::domain_error("lonsum_base: not a final letter");
}

/// Looks up an entry by its Unicode name ("ANAP") or its traditional name
/// ("aatap"), case-insensitively.
inline std::optional<ScriptChar> find_by_name(std::string_view name) {
  for (const ScriptChar& s : detail::kInventory) {
    if (detail::iequals(s.unicode_name, name) || detail::iequals(s.traditional_name, name)) return s;
  }
  return std::nullopt;
}

}  // namespace mmseg
