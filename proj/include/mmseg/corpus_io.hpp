// Tokenization of running text, the gold corpus format, and output writers.
//
// Gold corpus: one entry per line, `word<TAB>syl1/syl2/...`. Blank lines and
// lines starting with '#' are ignored. Syllables must rejoin to the word.
#pragma once

#include <cstddef>
#include <fstream>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include <json.hpp>

#include "mmseg/patterns.hpp"
#include "mmseg/script.hpp"
#include "mmseg/segmenter.hpp"

namespace mmseg {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input data; carries the 1-based line number when known.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t line, const std::string& source = {})
      : std::runtime_error((source.empty() ? "" : source + ":") + "line " +
                           std::to_string(line) + ": " + msg),
        detail_(msg),
        line_(line) {}
  std::size_t line() const { return line_; }
  const std::string& detail() const { return detail_; }

 private:
  std::string detail_;
  std::size_t line_;
};

// ---------------------------------------------------------------------------
// UTF-8 <-> code points

/// Decodes UTF-8 and normalizes to NFC. Ill-formed bytes become U+FFFD.
inline Word to_word(std::string_view utf8) {
  icu::UnicodeString ustr = icu::UnicodeString::fromUTF8(
      icu::StringPiece(utf8.data(), static_cast<std::int32_t>(utf8.size())));
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_SUCCESS(status)) {
    icu::UnicodeString normalized = nfc->normalize(ustr, status);
    if (U_SUCCESS(status)) ustr = std::move(normalized);
  }
  Word out;
  out.reserve(static_cast<std::size_t>(ustr.length()));
  for (std::int32_t i = 0; i < ustr.length(); i = ustr.moveIndex32(i, 1)) {
    out.push_back(static_cast<char32_t>(ustr.char32At(i)));
  }
  return out;
}

inline std::string to_utf8(WordView word) {
  icu::UnicodeString ustr;
  for (char32_t c : word) ustr.append(static_cast<UChar32>(c));
  std::string out;
  ustr.toUTF8String(out);
  return out;
}

// ---------------------------------------------------------------------------
// Tokenizer

enum class TokenKind : std::uint8_t { Word, Number, Punctuation, Foreign };

constexpr std::string_view kind_name(TokenKind k) {
  switch (k) {
    case TokenKind::Word: return "word";
    case TokenKind::Number: return "number";
    case TokenKind::Punctuation: return "punctuation";
    case TokenKind::Foreign: return "foreign";
  }
  return "";
}

struct Token {
  Word text;
  TokenKind kind = TokenKind::Word;
  std::size_t line = 1;    // 1-based
  std::size_t column = 1;  // 1-based, in code points

  friend bool operator==(const Token&, const Token&) = default;
};

namespace detail {

inline bool is_space(char32_t c) { return u_isUWhiteSpace(static_cast<UChar32>(c)) != 0; }

inline bool is_punct(char32_t c) {
  return c == cp::CHEIKHEI || (c < 0x80 && std::ispunct(static_cast<int>(c)) != 0);
}

inline bool is_word_char(char32_t c) {
  switch (classify(c).tag) {
    case CharTag::MajorLetter:
    case CharTag::VowelSign:
    case CharTag::FinalLetter:
    case CharTag::Ligature:
    case CharTag::Intonation: return true;
    default: return false;
  }
}

inline std::optional<TokenKind> run_kind(char32_t c) {
  if (is_space(c)) return std::nullopt;
  if (is_punct(c)) return TokenKind::Punctuation;
  if (is_digit(c)) return TokenKind::Number;
  if (is_word_char(c)) return TokenKind::Word;
  return TokenKind::Foreign;
}

}  // namespace detail

/// Splits one line into tokens. Whitespace separates; within a chunk, runs
/// of Meetei letters/signs, of Meetei digits, and of other characters form
/// separate tokens, and every punctuation character is its own token.
inline std::vector<Token> tokenize(WordView line, std::size_t line_no = 1) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    const auto kind = detail::run_kind(line[i]);
    if (!kind) {
      ++i;
      continue;
    }
    std::size_t j = i + 1;
    if (*kind != TokenKind::Punctuation) {
      while (j < line.size() && detail::run_kind(line[j]) == kind) ++j;
    }
    tokens.push_back(Token{Word(line.substr(i, j - i)), *kind, line_no, i + 1});
    i = j;
  }
  return tokens;
}

inline std::vector<Token> tokenize(std::string_view utf8_line, std::size_t line_no = 1) {
  const Word w = to_word(utf8_line);
  return tokenize(WordView(w), line_no);
}

inline std::vector<Token> tokenize(const char* utf8_line, std::size_t line_no = 1) {
  return tokenize(std::string_view(utf8_line), line_no);
}

// ---------------------------------------------------------------------------
// Gold corpus

struct GoldEntry {
  Word word;
  std::vector<Word> gold_syllables;

  friend bool operator==(const GoldEntry&, const GoldEntry&) = default;
};

inline std::vector<GoldEntry> parse_gold(std::string_view content) {
  std::vector<GoldEntry> entries;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= content.size()) {
    std::size_t nl = content.find('\n', pos);
    if (nl == std::string_view::npos) nl = content.size();
    std::string_view line = content.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;

    const std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos) throw ParseError("expected word<TAB>syllables", line_no);
    if (line.find('\t', tab + 1) != std::string_view::npos) {
      throw ParseError("more than one TAB", line_no);
    }
    GoldEntry entry;
    entry.word = to_word(line.substr(0, tab));
    if (entry.word.empty()) throw ParseError("empty word", line_no);

    std::string_view rest = line.substr(tab + 1);
    while (true) {
      const std::size_t slash = rest.find('/');
      Word syl = to_word(rest.substr(0, slash));
      if (syl.empty()) throw ParseError("empty syllable", line_no);
      entry.gold_syllables.push_back(std::move(syl));
      if (slash == std::string_view::npos) break;
      rest.remove_prefix(slash + 1);
    }

    Word joined;
    for (const Word& s : entry.gold_syllables) joined += s;
    if (joined != entry.word) {
      throw ParseError("syllables do not rejoin to word '" + to_utf8(entry.word) + "'", line_no);
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

inline std::string serialize_gold(std::span<const GoldEntry> entries) {
  std::string out;
  for (const GoldEntry& e : entries) {
    out += to_utf8(e.word);
    out += '\t';
    for (std::size_t k = 0; k < e.gold_syllables.size(); ++k) {
      if (k) out += '/';
      out += to_utf8(e.gold_syllables[k]);
    }
    out += '\n';
  }
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path + ": cannot open for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError(path + ": read failed");
  return ss.str();
}

inline std::vector<GoldEntry> load_gold(const std::string& path) {
  try {
    return parse_gold(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(e.detail(), e.line(), path);
  }
}

// ---------------------------------------------------------------------------
// Segmenting running text

struct SegmentedToken {
  Token token;
  std::optional<SegmentedWord> segmented;  // Word tokens only

  friend bool operator==(const SegmentedToken&, const SegmentedToken&) = default;
};

inline std::vector<SegmentedToken> segment_line(WordView line, std::size_t line_no = 1) {
  std::vector<SegmentedToken> out;
  for (Token& t : tokenize(line, line_no)) {
    SegmentedToken st{std::move(t), std::nullopt};
    if (st.token.kind == TokenKind::Word) st.segmented = extract_syllables(st.token.text);
    out.push_back(std::move(st));
  }
  return out;
}

using LineSink = std::function<void(std::size_t line_no, const std::vector<SegmentedToken>&)>;

/// Reads `in` line by line (LF or CRLF) and hands each line's tokens to
/// `sink` in input order. `source` names the input in error messages.
inline void segment_text(std::istream& in, const LineSink& sink,
                         const std::string& source = "<input>") {
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const Word line = to_word(raw);
    sink(line_no, segment_line(line, line_no));
  }
  if (in.bad()) {
    throw IoError(source + ": read failed after line " + std::to_string(line_no));
  }
}

inline std::vector<SegmentedToken> segment_text(std::istream& in) {
  std::vector<SegmentedToken> all;
  segment_text(in, [&](std::size_t, const std::vector<SegmentedToken>& toks) {
    all.insert(all.end(), toks.begin(), toks.end());
  });
  return all;
}

// ---------------------------------------------------------------------------
// Output formats

enum class OutputFormat : std::uint8_t { Plain, Tsv, Json };

inline std::optional<OutputFormat> parse_format(std::string_view s) {
  if (s == "plain") return OutputFormat::Plain;
  if (s == "tsv") return OutputFormat::Tsv;
  if (s == "json") return OutputFormat::Json;
  return std::nullopt;
}

inline std::string join_syllables(const SegmentedWord& w, std::string_view delimiter) {
  std::string out;
  for (std::size_t k = 0; k < w.syllables.size(); ++k) {
    if (k) out += delimiter;
    out += to_utf8(w.syllables[k].chars);
  }
  return out;
}

/// CV strings of a segmented word's syllables; empty for whole-word units.
inline std::vector<std::string> syllable_patterns(const SegmentedWord& w) {
  std::vector<std::string> out;
  if (w.status != Status::Segmented) return out;
  for (const Syllable& s : w.syllables) out.push_back(cv_pattern(s).str());
  return out;
}

inline std::string token_status(const SegmentedToken& t) {
  if (!t.segmented) return std::string(kind_name(t.token.kind));
  return std::string(status_name(t.segmented->status));
}

/// Tokens of one line, separated by a space where the input had whitespace.
inline void write_plain(std::ostream& out, const std::vector<SegmentedToken>& line,
                        std::string_view delimiter) {
  std::size_t prev_end = 0;
  for (std::size_t k = 0; k < line.size(); ++k) {
    const Token& tok = line[k].token;
    if (k && tok.column != prev_end) out << ' ';
    out << (line[k].segmented ? join_syllables(*line[k].segmented, delimiter)
                              : to_utf8(tok.text));
    prev_end = tok.column + tok.text.size();
  }
  out << '\n';
}

/// One row per token: text, status[:reason], syllables, patterns (comma separated).
inline void write_tsv(std::ostream& out, const std::vector<SegmentedToken>& line,
                      std::string_view delimiter) {
  for (const SegmentedToken& t : line) {
    out << to_utf8(t.token.text) << '\t' << token_status(t);
    if (t.segmented && t.segmented->status == Status::WholeWordFallback) {
      out << ':' << reason_name(*t.segmented->violation);
    }
    out << '\t';
    if (t.segmented) {
      out << join_syllables(*t.segmented, delimiter) << '\t';
      const auto pats = syllable_patterns(*t.segmented);
      for (std::size_t k = 0; k < pats.size(); ++k) out << (k ? "," : "") << pats[k];
    } else {
      out << to_utf8(t.token.text) << '\t';
    }
    out << '\n';
  }
}

inline nlohmann::ordered_json token_json(const SegmentedToken& t) {
  nlohmann::ordered_json j;
  j["text"] = to_utf8(t.token.text);
  j["kind"] = std::string(kind_name(t.token.kind));
  j["status"] = token_status(t);
  j["syllables"] = nlohmann::ordered_json::array();
  j["patterns"] = nlohmann::ordered_json::array();
  j["violation"] = nullptr;
  if (t.segmented) {
    for (const Syllable& s : t.segmented->syllables) j["syllables"].push_back(to_utf8(s.chars));
    for (const std::string& p : syllable_patterns(*t.segmented)) j["patterns"].push_back(p);
    if (t.segmented->violation) j["violation"] = std::string(reason_name(*t.segmented->violation));
  }
  return j;
}

/// JSON Lines: one object per token.
inline void write_json(std::ostream& out, const std::vector<SegmentedToken>& line) {
  for (const SegmentedToken& t : line) out << token_json(t).dump() << '\n';
}

}  // namespace mmseg
