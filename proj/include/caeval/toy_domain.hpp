// caeval/toy_domain.hpp

// Copyright 2026  caeval authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef CAEVAL_TOY_DOMAIN_HPP_
#define CAEVAL_TOY_DOMAIN_HPP_

#include <string_view>

#include "caeval/concept_parser.hpp"
#include "caeval/corpus_gen.hpp"
#include "caeval/semantics.hpp"

namespace caeval {

// The built-in train-timetable domain.  The same texts ship as editable
// copies under configs/; custom files can be passed to the CLI instead.
// The three pieces are mutually consistent: template literals are inert
// under the rules, so a generated reference transcript always parses back
// to exactly the annotation it was generated with.

inline constexpr std::string_view kDefaultInventoryText =
    R"(# Attribute inventory: one attribute per line.
# "name = v1|v2|..." declares a closed value enumeration.
sourcecity
goalcity
via_city
date
time
train_type
dm_marker = no|yes
want_arrival = no|yes
)";

inline constexpr std::string_view kDefaultLexiconText =
    R"(# Word classes of the train-timetable domain.
[cities]
bonn, berlin, hamburg, munich, cologne, dresden, stuttgart
new york
los angeles

[dates]
today, tomorrow, monday, tuesday, wednesday, thursday
friday, saturday, sunday

[times]
# "?" matches one digit; other entries are literal words.
?:??
??:??
noon, midnight, morning, afternoon, evening

[markers]
no = no
yes = yes
nope = no
yeah = yes

[train_types]
intercity, express, regional, sleeper

[fillers]
i, want, would, like, need, go, travel, a, the, is, there
at, by, in, on, please, um, uh, hm, oh, well
connection, train, leave, leaving
)";

inline constexpr std::string_view kDefaultRulesText =
    R"(# Ordered pattern rules; the first match at a position wins.
[rules]
from <city> -> sourcecity
to <city> -> goalcity
via <city> -> via_city
<marker> -> dm_marker
<date> -> date
<time> -> time
<train_type> -> train_type
arrive -> want_arrival:yes
arriving -> want_arrival:yes
# A bare city has no marked role; destination is the most common reading.
<city> -> goalcity
)";

inline constexpr std::string_view kDefaultTemplatesText =
    R"(# Sentence templates for synthetic corpora.
[templates]
i want to go from {city:sourcecity} to {city:goalcity}
{marker:dm_marker} to {city:goalcity} please
i need a connection from {city:sourcecity} to {city:goalcity} {date:date}
to {city:goalcity} please
i would like to travel to {city:goalcity} at {time:time}
is there a {train_type:train_type} to {city:goalcity} on {date:date}
from {city:sourcecity} via {city:via_city} to {city:goalcity} please
{marker:dm_marker} from {city:sourcecity} to {city:goalcity}
i want to go to {city:goalcity} {date:date} at {time:time}
)";

inline AttributeInventory default_inventory() {
  return parse_inventory_text(kDefaultInventoryText, "<built-in inventory>");
}

inline Lexicon default_lexicon() {
  return parse_lexicon_text(kDefaultLexiconText, "<built-in lexicon>");
}

inline RuleSet default_rules(const AttributeInventory &inventory) {
  return parse_rules_text(kDefaultRulesText, "<built-in rules>", inventory);
}

inline RuleSet default_rules() { return default_rules(default_inventory()); }

inline TemplateSet default_templates(const Lexicon &lexicon,
                                     const AttributeInventory &inventory) {
  return parse_templates_text(kDefaultTemplatesText, "<built-in templates>",
                              lexicon, inventory);
}

inline TemplateSet default_templates() {
  return default_templates(default_lexicon(), default_inventory());
}

}  // namespace caeval

#endif  // CAEVAL_TOY_DOMAIN_HPP_
