// Copyright 2026 The Revbomb Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <sstream>

#include "revbomb/corpus.h"
#include "revbomb/errors.h"
#include "testing.h"

namespace revbomb {
namespace {

using testing::D;
using testing::MakeReview;

const std::string kLongBody =
    "A long enough review body that clears the seventy five character floor "
    "easily.";

IngestResult IngestText(const std::string &text, InputFormat format,
                        bool strict = false) {
  std::istringstream in(text);
  return IngestReviews(in, format, strict);
}

TEST(Day, ParsesAndFormats) {
  EXPECT_EQ(FormatDay(D("2020-06-19")), "2020-06-19");
  EXPECT_FALSE(ParseDay("2020-13-01"));
  EXPECT_FALSE(ParseDay("2020-02-30"));
  EXPECT_FALSE(ParseDay("June 19"));
  EXPECT_TRUE(ParseDay("2020-02-29"));
}

TEST(Corpus, SortsByDayStablyAndIndexes) {
  Corpus c({MakeReview("b", "x", 1, "2020-06-20"),
            MakeReview("a", "y", 2, "2020-06-19"),
            MakeReview("c", "z", 3, "2020-06-20")});
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c[0].id, "a");
  EXPECT_EQ(c[1].id, "b");
  EXPECT_EQ(c[2].id, "c");
  EXPECT_EQ(c.Find("c"), 2u);
  EXPECT_FALSE(c.Find("zz"));
}

TEST(Corpus, RejectsDuplicateIds) {
  EXPECT_THROW(Corpus({MakeReview("a", "x"), MakeReview("a", "y")}), DataError);
}

TEST(Corpus, TransformAndFilterPreserveOrder) {
  Corpus c({MakeReview("a", "x", 1), MakeReview("b", "y", 9),
            MakeReview("c", "z", 10)});
  Corpus t = c.Transform([](Review &r) { r.score = 10 - r.score; });
  EXPECT_EQ(t[0].score, 9);
  EXPECT_EQ(c[0].score, 1);  // source untouched
  Corpus f = c.Filter([](const Review &r) { return r.score > 5; });
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0].id, "b");
  EXPECT_EQ(f[1].id, "c");
}

TEST(Ingest, DelimitedTableWithQuotedFields) {
  const std::string text =
      "id,username,body,score,date\n"
      "r1,alice,\"" + kLongBody + " With a, comma and \"\"quotes\"\"\",0,2020-06-19\n"
      "r2,bob,\"multi\nline " + kLongBody + "\",10,2020-06-20\n";
  IngestResult r = IngestText(text, InputFormat::kDelimitedTable);
  ASSERT_EQ(r.corpus.size(), 2u);
  EXPECT_EQ(r.records, 2u);
  EXPECT_TRUE(r.rejected.empty());
  EXPECT_NE(r.corpus[0].body.find("\"quotes\""), std::string::npos);
  EXPECT_EQ(r.corpus[1].body.substr(0, 10), "multi\nline");
}

TEST(Ingest, RejectsBadRowsWithReasons) {
  const std::string text =
      "id,username,body,score,date\n"
      "r1,alice," + kLongBody + ",11,2020-06-19\n"
      "r2,bob," + kLongBody + ",x,2020-06-19\n"
      "r3,carol," + kLongBody + ",5,yesterday\n"
      "r4,," + kLongBody + ",5,2020-06-19\n"
      "r5,dave," + kLongBody + ",5,2020-06-19\n"
      "r5,erin," + kLongBody + ",5,2020-06-19\n"
      "r6,frank,short,5\n";
  IngestResult r = IngestText(text, InputFormat::kDelimitedTable);
  EXPECT_EQ(r.records, 7u);
  ASSERT_EQ(r.corpus.size(), 1u);
  EXPECT_EQ(r.corpus[0].id, "r5");
  std::vector<std::string> reasons;
  for (const auto &rej : r.rejected) reasons.push_back(rej.reason);
  EXPECT_EQ(reasons, (std::vector<std::string>{
                         "score out of range", "score not an integer",
                         "invalid date", "missing username",
                         "duplicate id 'r5'", "wrong number of fields"}));
  EXPECT_EQ(r.rejected[0].line, 2u);
  // Records are conserved: every record is either kept or rejected.
  EXPECT_EQ(r.records, r.corpus.size() + r.rejected.size());
}

TEST(Ingest, StrictModeThrowsOnFirstBadRow) {
  const std::string text = "username,body,score,date\nalice," + kLongBody +
                           ",11,2020-06-19\n";
  EXPECT_THROW(IngestText(text, InputFormat::kDelimitedTable, true), DataError);
}

TEST(Ingest, ShortBodiesWarnLenientlyAndRejectStrictly) {
  const std::string text = "username,body,score,date\nalice,too short,3,2020-06-19\n";
  IngestResult lenient = IngestText(text, InputFormat::kDelimitedTable);
  EXPECT_EQ(lenient.corpus.size(), 1u);
  ASSERT_EQ(lenient.warnings.size(), 1u);
  EXPECT_THROW(IngestText(text, InputFormat::kDelimitedTable, true), DataError);
}

TEST(Ingest, MissingColumnIsADataError) {
  EXPECT_THROW(IngestText("username,body,date\na,b,2020-01-01\n",
                          InputFormat::kDelimitedTable),
               DataError);
}

TEST(Ingest, RecordLines) {
  const std::string text =
      "{\"id\":\"a\",\"username\":\"u\",\"body\":\"" + kLongBody +
      "\",\"score\":7,\"date\":\"2020-06-21\",\"prior_reviews\":2}\n"
      "not json\n"
      "\n"
      "{\"username\":\"v\",\"body\":\"" + kLongBody +
      "\",\"score\":\"3\",\"date\":\"2020-06-22\"}\n";
  IngestResult r = IngestText(text, InputFormat::kRecordLines);
  ASSERT_EQ(r.corpus.size(), 2u);
  EXPECT_EQ(r.corpus[0].prior_reviews, 2);
  EXPECT_TRUE(IsExperienced(r.corpus[0]));
  EXPECT_EQ(r.corpus[1].id, "r3");  // ordinal among records
  ASSERT_EQ(r.rejected.size(), 1u);
  EXPECT_EQ(r.rejected[0].line, 2u);
  EXPECT_EQ(r.rejected[0].reason, "malformed record");
}

TEST(Ingest, WritersRoundTrip) {
  Corpus c({MakeReview("a", kLongBody + ", \"quoted\"\nnext", 0, "2020-06-19",
                       "alice", 3),
            MakeReview("b", kLongBody, 10, "2020-06-21", "bob", 0)});
  for (InputFormat f : {InputFormat::kDelimitedTable, InputFormat::kRecordLines}) {
    std::ostringstream out;
    if (f == InputFormat::kDelimitedTable) {
      WriteDelimitedTable(c, out);
    } else {
      WriteRecordLines(c, out);
    }
    IngestResult back = IngestText(out.str(), f);
    ASSERT_EQ(back.corpus.size(), 2u);
    EXPECT_EQ(back.corpus.reviews(), c.reviews());
  }
}

TEST(Ingest, ParseInputFormat) {
  EXPECT_EQ(ParseInputFormat("delimited-table"), InputFormat::kDelimitedTable);
  EXPECT_EQ(ParseInputFormat("record-lines"), InputFormat::kRecordLines);
  EXPECT_THROW(ParseInputFormat("xml"), ConfigError);
}

TEST(UserHistory, AttachesCountsAndReportsMissing) {
  Corpus c({MakeReview("a", "x", 1, "2020-06-19", "alice"),
            MakeReview("b", "y", 1, "2020-06-19", "bob")});
  HistoryResult h = AttachUserHistory(c, {{"alice", 4}});
  EXPECT_EQ(h.corpus[0].prior_reviews, 4);
  EXPECT_EQ(h.corpus[1].prior_reviews, 0);
  EXPECT_EQ(h.missing, 1u);
  EXPECT_DOUBLE_EQ(ExperiencedShare(h.corpus), 0.5);
  EXPECT_THROW(AttachUserHistory(c, {{"alice", -1}}), DataError);
}

TEST(UserHistory, LoadsTable) {
  testing::TempDir dir;
  {
    std::ofstream(dir / "h.csv") << "username,prior_reviews\nalice,2\nbob,0\n";
  }
  const auto h = LoadUserHistory(dir / "h.csv");
  EXPECT_EQ(h.at("alice"), 2);
  EXPECT_EQ(h.at("bob"), 0);
  {
    std::ofstream(dir / "bad.csv") << "user,k\n";
  }
  EXPECT_THROW(LoadUserHistory(dir / "bad.csv"), DataError);
}

TEST(Delimited, QuoteFieldRoundTrips) {
  for (std::string s : {"plain", "a,b", "say \"hi\"", "line\nbreak", " pad "}) {
    const auto rows = ParseDelimited(QuoteField(s) + "\n");
    ASSERT_EQ(rows.size(), 1u);
    ASSERT_EQ(rows[0].fields.size(), 1u);
    EXPECT_EQ(rows[0].fields[0], s);
  }
}

}  // namespace
}  // namespace revbomb
