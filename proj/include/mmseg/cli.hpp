// Batch front end: segment, eval, patterns, inspect.
#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "mmseg/corpus_io.hpp"
#include "mmseg/evaluation.hpp"
#include "mmseg/patterns.hpp"
#include "mmseg/script.hpp"
#include "mmseg/segmenter.hpp"

namespace mmseg::cli {

enum class Command { Segment, Eval, Patterns, Inspect };

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

struct CliConfig {
  Command command = Command::Segment;
  std::string input_path = "-";
  std::optional<std::string> gold_path;
  std::string delimiter = "/";
  OutputFormat format = OutputFormat::Plain;
  double beta = 1.0;
};

/// Empty string when the configuration is usable, otherwise the reason.
inline std::string validate(const CliConfig& cfg) {
  if (cfg.command == Command::Eval && !cfg.gold_path) return "eval requires --gold";
  if (cfg.delimiter.empty()) return "--delimiter must not be empty";
  for (char32_t c : to_word(cfg.delimiter)) {
    if (classify(c).tag != CharTag::Foreign) {
      return "--delimiter must not contain Meetei Mayek characters";
    }
  }
  if (!(cfg.beta > 0.0)) return "--beta must be positive";
  return {};
}

/// Either a config to run or an exit status (help output, usage errors).
using ParseResult = std::variant<CliConfig, int>;

inline ParseResult parse_args(int argc, const char* const* argv, std::ostream& out,
                              std::ostream& err) {
  CLI::App app{"Meetei Mayek syllable segmentation toolkit", "mmseg"};
  app.require_subcommand(1);

  CliConfig cfg;
  std::string format = "plain";

  auto add_io = [&](CLI::App* sub, bool with_format) {
    sub->add_option("--input", cfg.input_path, "Input file, '-' for standard input")
        ->capture_default_str();
    if (with_format) {
      sub->add_option("--format", format, "Output format")
          ->check(CLI::IsMember({"plain", "tsv", "json"}))
          ->capture_default_str();
    }
  };

  CLI::App* segment = app.add_subcommand("segment", "Split running text into syllables");
  add_io(segment, true);
  segment->add_option("--delimiter", cfg.delimiter, "Syllable delimiter")->capture_default_str();

  CLI::App* eval = app.add_subcommand("eval", "Score segmentation against a gold corpus");
  eval->add_option("--gold", cfg.gold_path, "Gold corpus (word<TAB>syl/syl...)")->required();
  eval->add_option("--beta", cfg.beta, "F-measure weight")->capture_default_str();
  eval->add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"plain", "tsv", "json"}))
      ->capture_default_str();

  CLI::App* patterns = app.add_subcommand("patterns", "Histogram of syllable CV patterns");
  add_io(patterns, true);

  CLI::App* inspect = app.add_subcommand("inspect", "Dump the character inventory");
  inspect->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"plain", "tsv", "json"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "mmseg: " << e.what() << "\n";
    return kExitUsage;
  }

  if (segment->parsed()) cfg.command = Command::Segment;
  else if (eval->parsed()) cfg.command = Command::Eval;
  else if (patterns->parsed()) cfg.command = Command::Patterns;
  else cfg.command = Command::Inspect;
  cfg.format = *parse_format(format);

  if (std::string problem = validate(cfg); !problem.empty()) {
    err << "mmseg: " << problem << "\n";
    return kExitUsage;
  }
  return cfg;
}

namespace detail {

inline void write_inventory(std::ostream& out, OutputFormat format) {
  if (format == OutputFormat::Json) {
    for (const ScriptChar& s : inventory()) {
      nlohmann::ordered_json j;
      j["codepoint"] = format_codepoint(s.codepoint);
      j["class"] = std::string(tag_name(s.char_class.tag));
      j["vowel_letter"] = s.char_class.is_vowel_letter;
      j["name"] = std::string(s.traditional_name);
      j["romanization"] = std::string(s.romanization);
      out << j.dump() << '\n';
    }
    return;
  }
  out << "# codepoint\tclass\tname\tromanization\n";
  for (const ScriptChar& s : inventory()) {
    out << format_codepoint(s.codepoint) << '\t' << tag_name(s.char_class.tag)
        << (s.char_class.is_vowel_letter ? ":vowel" : "") << '\t' << s.traditional_name << '\t'
        << s.romanization << '\n';
  }
}

inline void write_histogram(std::ostream& out, const PatternHistogram& hist, OutputFormat format) {
  if (format == OutputFormat::Json) {
    nlohmann::ordered_json j;
    for (ComputationalPattern p : kAllComputationalPatterns) {
      j[std::string(pattern_name(p))] = hist[p];
    }
    j["unsegmented"] = hist.unsegmented;
    out << j.dump() << '\n';
    return;
  }
  for (ComputationalPattern p : kAllComputationalPatterns) {
    out << pattern_name(p) << '\t' << hist[p] << '\n';
  }
  out << "unsegmented\t" << hist.unsegmented << '\n';
}

}  // namespace detail

/// Executes one command. `in` is used when the input path is "-".
inline int run(const CliConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  if (std::string problem = validate(cfg); !problem.empty()) {
    err << "mmseg: " << problem << "\n";
    return kExitUsage;
  }
  try {
    auto with_input = [&](auto&& body) {
      if (cfg.input_path == "-") {
        body(in, std::string("<stdin>"));
        return;
      }
      std::ifstream file(cfg.input_path, std::ios::binary);
      if (!file) throw IoError(cfg.input_path + ": cannot open for reading");
      body(file, cfg.input_path);
    };

    switch (cfg.command) {
      case Command::Segment:
        with_input([&](std::istream& src, const std::string& name) {
          segment_text(
              src,
              [&](std::size_t, const std::vector<SegmentedToken>& line) {
                switch (cfg.format) {
                  case OutputFormat::Plain: write_plain(out, line, cfg.delimiter); break;
                  case OutputFormat::Tsv: write_tsv(out, line, cfg.delimiter); break;
                  case OutputFormat::Json: write_json(out, line); break;
                }
              },
              name);
        });
        break;

      case Command::Patterns:
        with_input([&](std::istream& src, const std::string& name) {
          PatternHistogram hist;
          segment_text(
              src,
              [&](std::size_t, const std::vector<SegmentedToken>& line) {
                for (const SegmentedToken& t : line) {
                  if (t.segmented) accumulate(hist, *t.segmented);
                }
              },
              name);
          detail::write_histogram(out, hist, cfg.format);
        });
        break;

      case Command::Eval: {
        const std::vector<GoldEntry> gold = load_gold(*cfg.gold_path);
        const EvalReport report = evaluate_corpus(gold, cfg.beta);
        if (cfg.format == OutputFormat::Json) out << to_json(report).dump() << '\n';
        else out << to_text(report);
        break;
      }

      case Command::Inspect: detail::write_inventory(out, cfg.format); break;
    }
  } catch (const IoError& e) {
    err << "mmseg: " << e.what() << "\n";
    return kExitData;
  } catch (const ParseError& e) {
    err << "mmseg: " << e.what() << "\n";
    return kExitData;
  }
  out.flush();
  return kExitOk;
}

inline int main(int argc, const char* const* argv) {
  ParseResult parsed = parse_args(argc, argv, std::cout, std::cerr);
  if (const int* code = std::get_if<int>(&parsed)) return *code;
  return run(std::get<CliConfig>(parsed), std::cin, std::cout, std::cerr);
}

}  // namespace mmseg::cli
