#ifndef QUICKSUM_CLI_HPP
#define QUICKSUM_CLI_HPP

#include <cmath>
#include <cstddef>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "quicksum/pipeline.hpp"
#include "quicksum/render.hpp"

namespace quicksum::cli {

inline constexpr std::string_view kVersion = "1.0.0";

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int bad_input = 1;
inline constexpr int bad_data_file = 2;
inline constexpr int bad_flags = 3;
}  // namespace exit_code

inline constexpr std::string_view kRulesFile = "rules.txt";
inline constexpr std::string_view kLexiconFile = "lexicon.mmml";
inline constexpr std::string_view kStructureWordsFile = "structure_words.txt";

struct RunConfig {
  std::string input_path = "-";  // "-" reads standard input
  std::size_t k = 3;
  OutputFormat format = OutputFormat::json;
  std::optional<std::filesystem::path> rules_path;
  std::optional<std::filesystem::path> lexicon_path;
  std::optional<std::filesystem::path> structure_words_path;
  std::optional<std::filesystem::path> data_dir;  // fallback for the three files
  ScoreWeights weights;
  bool update_lexicon = false;
};

/// Thrown by run() helpers; carries the process exit status.
class Failure : public std::runtime_error {
 public:
  Failure(int code, const std::string& message) : std::runtime_error(message), code_(code) {}
  int code() const noexcept { return code_; }

 private:
  int code_;
};

/// "pos,theme,type,len" as four non-negative reals.
inline std::optional<ScoreWeights> parse_weights(std::string_view spec, ScoreWeights base) {
  std::vector<double> values;
  std::string item;
  std::istringstream in{std::string(spec)};
  while (std::getline(in, item, ',')) {
    const auto trimmed = text::trim(item);
    if (trimmed.empty()) return std::nullopt;
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(std::string(trimmed), &used);
    } catch (const std::exception&) {
      return std::nullopt;
    }
    if (used != trimmed.size() || !std::isfinite(v) || v < 0.0) return std::nullopt;
    values.push_back(v);
  }
  if (values.size() != 4 || spec.ends_with(',')) return std::nullopt;
  base.w_pos = values[0];
  base.w_theme = values[1];
  base.w_type = values[2];
  base.w_len = values[3];
  return base;
}

/// Either a config to run, or the exit status when parsing already finished
/// the job (help, version, or a usage error).
inline std::variant<RunConfig, int> parse_command_line(int argc, const char* const* argv,
                                                       bool stdout_is_terminal, std::ostream& out,
                                                       std::ostream& err) {
  CLI::App app{"Highlight the most important sentences of an English text document.", "quicksum"};
  app.set_version_flag("--version", "quicksum " + std::string(kVersion));
  app.set_config("--config", "", "Read options from a TOML/INI file");

  RunConfig config;
  long long sentences = 3;
  std::string format;
  std::string weights;
  long long ideal_length = static_cast<long long>(config.weights.ideal_length);
  std::string rules, lexicon, structure_words;

  app.add_option("input", config.input_path, "Input text file, or - for standard input");
  app.add_option("-n,--sentences", sentences, "Number of sentences to highlight");
  app.add_option("--format", format, "Output format: ansi, html or json");
  app.add_option("--rules", rules, "Affix rules file");
  app.add_option("--lexicon", lexicon, "MMML lexicon file");
  app.add_option("--structure-words", structure_words, "Structure word list file");
  app.add_option("--weights", weights, "Score weights pos,theme,type,len");
  app.add_option("--ideal-length", ideal_length, "Ideal sentence length in words");
  app.add_flag("--update-lexicon", config.update_lexicon,
               "Record each headword's last sentence in the lexicon file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::ok : exit_code::bad_flags;
  }

  auto usage = [&err](const std::string& msg) {
    err << "quicksum: " << msg << "\n";
    return exit_code::bad_flags;
  };
  if (sentences < 0) return usage("--sentences must be >= 0");
  config.k = static_cast<std::size_t>(sentences);
  if (format.empty()) {
    config.format = stdout_is_terminal ? OutputFormat::ansi : OutputFormat::json;
  } else if (auto f = parse_output_format(format)) {
    config.format = *f;
  } else {
    return usage("unknown format '" + format + "' (expected ansi, html or json)");
  }
  if (ideal_length < 1) return usage("--ideal-length must be a positive integer");
  config.weights.ideal_length = static_cast<std::size_t>(ideal_length);
  if (!weights.empty()) {
    auto parsed = parse_weights(weights, config.weights);
    if (!parsed) return usage("--weights expects four comma-separated non-negative numbers");
    config.weights = *parsed;
  }
  try {
    config.weights.validate();
  } catch (const std::invalid_argument& e) {
    return usage(e.what());
  }
  if (!rules.empty()) config.rules_path = rules;
  if (!lexicon.empty()) config.lexicon_path = lexicon;
  if (!structure_words.empty()) config.structure_words_path = structure_words;
  if (const char* dir = std::getenv("QUICKSUM_DATA_DIR"); dir != nullptr && *dir != '\0')
    config.data_dir = std::filesystem::path(dir);
  return config;
}

namespace detail {

inline std::optional<std::string> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::string data{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  if (in.bad()) return std::nullopt;
  return data;
}

inline std::optional<std::filesystem::path> resolve(const std::optional<std::filesystem::path>& explicit_path,
                                                    const RunConfig& config, std::string_view name) {
  if (explicit_path) return explicit_path;
  if (config.data_dir) {
    auto candidate = *config.data_dir / name;
    std::error_code ec;
    if (std::filesystem::is_regular_file(candidate, ec)) return candidate;
  }
  return std::nullopt;
}

template <typename Loader>
auto load_data(const std::optional<std::filesystem::path>& path, std::string_view builtin,
               Loader loader) {
  if (!path) return loader(builtin);
  const auto content = read_file(*path);
  if (!content) throw Failure(exit_code::bad_data_file, "cannot read " + path->string());
  try {
    return loader(*content);
  } catch (const ParseError& e) {
    throw Failure(exit_code::bad_data_file, path->string() + ": " + e.what());
  }
}

inline void write_atomically(const std::filesystem::path& path, std::string_view content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Failure(exit_code::bad_data_file, "cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw Failure(exit_code::bad_data_file, "cannot write " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Failure(exit_code::bad_data_file, "cannot replace " + path.string());
  }
}

}  // namespace detail

/// Runs the whole pipeline and writes the rendering to `out`. Diagnostics go
/// to `err`; the return value is the process exit status.
inline int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    const auto rules_path = detail::resolve(config.rules_path, config, kRulesFile);
    const auto lexicon_path = detail::resolve(config.lexicon_path, config, kLexiconFile);
    const auto words_path =
        detail::resolve(config.structure_words_path, config, kStructureWordsFile);
    if (config.update_lexicon && !lexicon_path)
      throw Failure(exit_code::bad_flags,
                    "--update-lexicon needs --lexicon or a lexicon in QUICKSUM_DATA_DIR");

    std::string text;
    if (config.input_path == "-") {
      text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    } else {
      auto content = detail::read_file(config.input_path);
      if (!content) throw Failure(exit_code::bad_input, "cannot read " + config.input_path);
      text = std::move(*content);
    }

    Resources res;
    res.rules = detail::load_data(rules_path, defaults::kDefaultRules,
                                  [](std::string_view s) { return load_rules(s); });
    res.lexicon = detail::load_data(lexicon_path, defaults::kDefaultLexicon,
                                    [](std::string_view s) { return load_mmml(s); });
    res.structure_words = detail::load_data(
        words_path, defaults::kDefaultStructureWords,
        [](std::string_view s) { return load_structure_words(s); });

    const Summary summary = summarize(std::move(text), config.k, config.weights, res);
    out << render(config.format, summary.doc, summary.ranked);
    if (config.format == OutputFormat::json) out << '\n';
    out.flush();

    if (config.update_lexicon)
      detail::write_atomically(*lexicon_path, write_mmml(record_usage(summary, res.lexicon)));
    return exit_code::ok;
  } catch (const Failure& f) {
    err << "quicksum: " << f.what() << "\n";
    return f.code();
  }
}

}  // namespace quicksum::cli

#endif  // QUICKSUM_CLI_HPP
