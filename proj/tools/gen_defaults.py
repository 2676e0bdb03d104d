#!/usr/bin/env python3
"""Regenerates include/quicksum/defaults.hpp from the files in data/."""

import pathlib

ROOT = pathlib.Path(__file__).resolve().parent.parent
FILES = [
    ("kDefaultRules", "rules.txt"),
    ("kDefaultLexicon", "lexicon.mmml"),
    ("kDefaultStructureWords", "structure_words.txt"),
]


def main():
    parts = [
        "#ifndef QUICKSUM_DEFAULTS_HPP\n#define QUICKSUM_DEFAULTS_HPP\n\n"
        "#include <string_view>\n\n"
        "// Built-in copies of the files under data/, used when no override is given.\n\n"
        "namespace quicksum::defaults {\n\n"
    ]
    for name, filename in FILES:
        text = (ROOT / "data" / filename).read_text(encoding="utf-8")
        if ")qs\"" in text:
            raise SystemExit(f"{filename} contains the raw-string delimiter")
        parts.append(f'inline constexpr std::string_view {name} = R"qs({text})qs";\n\n')
    parts.append("}  // namespace quicksum::defaults\n\n#endif  // QUICKSUM_DEFAULTS_HPP\n")
    out = ROOT / "include" / "quicksum" / "defaults.hpp"
    out.write_text("".join(parts), encoding="utf-8")


if __name__ == "__main__":
    main()
