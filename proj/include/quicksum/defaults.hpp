#ifndef QUICKSUM_DEFAULTS_HPP
#define QUICKSUM_DEFAULTS_HPP

#include <string_view>

// Built-in copies of the files under data/, used when no override is given.

namespace quicksum::defaults {

inline constexpr std::string_view kDefaultRules = R"qs(# Affix rules: <prefix|suffix> <affix> <min_stem_len> [restore]
# Restore strings are appended to the stem after a suffix is removed.
prefix un 3
prefix re 3
prefix dis 3
prefix pre 3
prefix non 3
suffix ing 3
suffix ing 3 e
suffix ed 3
suffix ed 3 e
suffix ly 3
suffix ness 3
suffix ment 3
suffix ies 3 y
suffix es 3
suffix s 3
)qs";

inline constexpr std::string_view kDefaultLexicon = R"qs(<?xml version="1.0"?>
<wordlist>
  <word id="daisy">
    <word>daisy</word>
    <origin>Latin</origin>
    <source>dægēs ēāge</source>
    <morphemes></morphemes>
    <sentencelastused>I picked for you a daisy.</sentencelastused>
  </word>
  <word id="hobby">
    <word>hobby</word>
    <origin>Middle English</origin>
    <source>hobyn</source>
    <morphemes>hob+yn</morphemes>
    <sentencelastused></sentencelastused>
  </word>
  <word id="nickname">
    <word>nickname</word>
    <origin>Middle English</origin>
    <source>nekename</source>
    <morphemes>eke+name</morphemes>
    <sentencelastused></sentencelastused>
  </word>
  <word id="omelet">
    <word>omelet</word>
    <origin>French</origin>
    <source>alemelle</source>
    <morphemes></morphemes>
    <sentencelastused></sentencelastused>
  </word>
  <word id="rabbit">
    <word>rabbit</word>
    <origin>French</origin>
    <source>robète</source>
    <morphemes></morphemes>
    <sentencelastused></sentencelastused>
  </word>
</wordlist>
)qs";

inline constexpr std::string_view kDefaultStructureWords = R"qs(# Structure words and phrases removed before theme scoring.
hope that
clearly
strangely
indeed
conceivably
seriously
ultimately
theoretically
naturally
ironically
fortunately
incidentally
)qs";

}  // namespace quicksum::defaults

#endif  // QUICKSUM_DEFAULTS_HPP
