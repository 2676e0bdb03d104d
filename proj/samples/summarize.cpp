// Minimal library usage: highlight the top three sentences of a short text.

#include <iostream>

#include "quicksum/quicksum.hpp"

int main() {
  const std::string text =
      "Gardens cool the city. Streets without trees trap heat.\n"
      "\n"
      "Planting gardens is cheap. Every city should plant more gardens.\n";

  const auto resources = quicksum::Resources::builtin();
  const auto summary = quicksum::summarize(text, 3, quicksum::ScoreWeights{}, resources);

  for (const auto& entry : summary.ranked.entries) {
    const auto& sentence = *summary.doc.sentences()[entry.sentence];
    std::cout << entry.rank << " [" << quicksum::to_string(quicksum::style_for_rank(entry.rank).color)
              << "] " << sentence.text << "  (total " << entry.score.total << ")\n";
  }
  std::cout << '\n' << quicksum::render_ansi(summary.doc, summary.ranked);
}
