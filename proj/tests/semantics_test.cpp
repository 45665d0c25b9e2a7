// tests/semantics_test.cpp

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

#include "caeval/semantics.hpp"

#include <gtest/gtest.h>

#include <random>

#include "caeval/toy_domain.hpp"

namespace {

using namespace caeval;

SemanticUnit unit(const std::string &a, const std::string &v) {
  return SemanticUnit{a, v};
}

TEST(ParseAnnotation, TwoCityUnits) {
  const auto a = parse_annotation("sourcecity:Bonn; goalcity:Berlin",
                                  default_inventory());
  ASSERT_EQ(a.size(), 2u);
  EXPECT_EQ(a.units[0], unit("sourcecity", "bonn"));
  EXPECT_EQ(a.units[1], unit("goalcity", "berlin"));
}

TEST(ParseAnnotation, EmptyLine) {
  EXPECT_TRUE(parse_annotation("", default_inventory()).empty());
  EXPECT_TRUE(parse_annotation("   ", default_inventory()).empty());
}

TEST(ParseAnnotation, MarkerThenCity) {
  const auto a =
      parse_annotation("dm_marker:no; goalcity:Bonn", default_inventory());
  ASSERT_EQ(a.size(), 2u);
  EXPECT_EQ(a.units[0], unit("dm_marker", "no"));
  EXPECT_EQ(a.units[1], unit("goalcity", "bonn"));
}

TEST(ParseAnnotation, SplitsAtFirstColonOnly) {
  AttributeInventory inventory;
  inventory.add("time");
  const auto a = parse_annotation("time:10:30", inventory);
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a.units[0], unit("time", "10:30"));
}

TEST(ParseAnnotation, ValueWhitespaceCollapses) {
  const auto a =
      parse_annotation("goalcity:  New    York ", default_inventory());
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a.units[0], unit("goalcity", "new york"));
}

TEST(ParseAnnotation, TrailingSeparatorIgnored) {
  const auto a = parse_annotation("goalcity:bonn;", default_inventory());
  EXPECT_EQ(a.size(), 1u);
}

TEST(ParseAnnotation, Errors) {
  const auto inventory = default_inventory();
  EXPECT_THROW(parse_annotation("foo:bar", inventory), UnknownAttributeError);
  EXPECT_THROW(parse_annotation("no colon here", inventory),
               MalformedUnitError);
  EXPECT_THROW(parse_annotation("goalcity:", inventory), MalformedUnitError);
  EXPECT_THROW(parse_annotation(":bonn", inventory), MalformedUnitError);
  // dm_marker has the closed enumeration no|yes.
  EXPECT_THROW(parse_annotation("dm_marker:maybe", inventory),
               MalformedUnitError);
}

TEST(SerializeAnnotation, TwoUnits) {
  SemanticAnnotation a;
  a.units = {unit("sourcecity", "bonn"), unit("goalcity", "berlin")};
  EXPECT_EQ(serialize_annotation(a), "sourcecity:bonn; goalcity:berlin");
}

TEST(SerializeAnnotation, Empty) {
  EXPECT_EQ(serialize_annotation(SemanticAnnotation{}), "");
}

TEST(SerializeAnnotation, SpacesInValueSurvive) {
  SemanticAnnotation a;
  a.units = {unit("goalcity", "new york")};
  const std::string text = serialize_annotation(a);
  EXPECT_EQ(text, "goalcity:new york");
  EXPECT_EQ(parse_annotation(text, default_inventory()), a);
}

TEST(Annotation, ParseSerializeRoundTrip) {
  const auto inventory = default_inventory();
  std::mt19937_64 rng(17);
  const std::vector<std::string> attrs = {"sourcecity", "goalcity", "via_city",
                                          "date", "time"};
  const std::vector<std::string> values = {"bonn", "berlin", "new york",
                                           "tomorrow", "10:30"};
  for (int trial = 0; trial < 100; ++trial) {
    SemanticAnnotation a;
    const std::size_t len = rng() % 5;
    for (std::size_t i = 0; i < len; ++i) {
      a.units.push_back(
          unit(attrs[rng() % attrs.size()], values[rng() % values.size()]));
    }
    EXPECT_EQ(parse_annotation(serialize_annotation(a), inventory), a);
  }
}

TEST(Annotation, SerializeAfterParseNormalizes) {
  const auto a = parse_annotation("  SourceCity : Bonn  ;GOALCITY:Berlin ",
                                  default_inventory());
  EXPECT_EQ(serialize_annotation(a), "sourcecity:bonn; goalcity:berlin");
}

TEST(SuEqual, PaperedCases) {
  EXPECT_TRUE(su_equal(unit("goalcity", "bonn"), unit("goalcity", "bonn")));
  EXPECT_FALSE(su_equal(unit("goalcity", "bonn"), unit("goalcity", "berlin")));
  EXPECT_FALSE(su_equal(unit("sourcecity", "bonn"), unit("goalcity", "bonn")));
}

TEST(SuEqual, IsAnEquivalenceRelation) {
  const std::vector<std::string> attrs = {"sourcecity", "goalcity"};
  const std::vector<std::string> values = {"bonn", "berlin"};
  std::vector<SemanticUnit> all;
  for (const auto &a : attrs) {
    for (const auto &v : values) {
      all.push_back(unit(a, v));
      all.push_back(unit(a, v));  // duplicates exercise transitivity
    }
  }
  for (const auto &x : all) {
    EXPECT_TRUE(su_equal(x, x));
    for (const auto &y : all) {
      EXPECT_EQ(su_equal(x, y), su_equal(y, x));
      for (const auto &z : all) {
        if (su_equal(x, y) && su_equal(y, z)) {
          EXPECT_TRUE(su_equal(x, z));
        }
      }
    }
  }
}

TEST(AttributeInventory, RejectsDuplicatesAndEmptyEnumerations) {
  AttributeInventory inventory;
  inventory.add("goalcity");
  EXPECT_THROW(inventory.add("goalcity"), std::invalid_argument);
  EXPECT_THROW(inventory.add("dm_marker", {}), std::invalid_argument);
}

TEST(AttributeInventory, ParsesEnumerationsFromText) {
  const auto inventory = parse_inventory_text(
      "# comment\nsourcecity\ndm_marker = no|yes\n", "<test>");
  EXPECT_EQ(inventory.size(), 2u);
  EXPECT_TRUE(inventory.contains("sourcecity"));
  EXPECT_EQ(inventory.enumeration("sourcecity"), nullptr);
  ASSERT_NE(inventory.enumeration("dm_marker"), nullptr);
  EXPECT_EQ(*inventory.enumeration("dm_marker"),
            (std::vector<std::string>{"no", "yes"}));
}

TEST(AttributeInventory, RejectsSections) {
  EXPECT_THROW(parse_inventory_text("[stuff]\nname\n", "<test>"), ConfigError);
}

TEST(DefaultInventory, HasTheEightToyAttributes) {
  const auto inventory = default_inventory();
  EXPECT_EQ(inventory.size(), 8u);
  for (const char *name : {"sourcecity", "goalcity", "via_city", "date", "time",
                           "train_type", "dm_marker", "want_arrival"}) {
    EXPECT_TRUE(inventory.contains(name)) << name;
  }
}

}  // namespace
