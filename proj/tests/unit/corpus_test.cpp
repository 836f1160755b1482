// Copyright 2026 The evkb Authors.
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

#include <fstream>

#include "evkb/corpus/corpus.hpp"
#include "fixtures.hpp"

namespace evkb::corpus {
namespace {

using evkb::testing::TempDir;

TEST(ParseDocumentTest, ReadsAllFields) {
  const auto doc = parse_document(
      R"({"id":"d1","published":"2007-02-08","title":"T","body":"Google bought YouTube.",)"
      R"("descriptors":["Business","Mergers"],"word_count":40})");
  EXPECT_EQ(doc.doc_id, "d1");
  EXPECT_EQ(doc.published, make_date(2007, 2, 8));
  EXPECT_EQ(doc.word_count, 40u);
  EXPECT_TRUE(doc.has_descriptor("Business"));
  EXPECT_FALSE(doc.has_descriptor("Sports"));
}

TEST(ParseDocumentTest, WordCountDefaultsToWhitespaceTokens) {
  const auto doc = parse_document(
      R"({"id":"d1","published":"2007-02-08","title":"T","body":"one two  three\nfour"})");
  EXPECT_EQ(doc.word_count, 4u);
  EXPECT_TRUE(doc.descriptors.empty());
}

TEST(ParseDocumentTest, RejectsBrokenRecords) {
  for (const char* line : {
           R"({"published":"2007-02-08","title":"T","body":"x"})",
           R"({"id":"d","published":"2007-02-30","title":"T","body":"x"})",
           R"({"id":"d","title":"T","body":"x"})",
           R"({"id":"d","published":"2007-02-08","title":"T","body":"x","word_count":-1})",
           R"({"id":"d","published":"2007-02-08","title":"T","body":"x","descriptors":"B"})",
           R"(not json)",
       }) {
    EXPECT_THROW(parse_document(line), DataError) << line;
  }
}

TEST(SerializeDocumentTest, RoundTrips) {
  Document d;
  d.doc_id = "x-1";
  d.published = make_date(2004, 10, 26);
  d.title = "Oracle \"wins\"";
  d.body = "Oracle acquired PeopleSoft.\nMore text.";
  d.descriptors = {"Business"};
  d.word_count = 5;
  const auto back = parse_document(serialize_document(d));
  EXPECT_EQ(back.doc_id, d.doc_id);
  EXPECT_EQ(back.published, d.published);
  EXPECT_EQ(back.title, d.title);
  EXPECT_EQ(back.body, d.body);
  EXPECT_EQ(back.descriptors, d.descriptors);
  EXPECT_EQ(back.word_count, d.word_count);
}

TEST(LoadCorpusTest, SkipsBadAndDuplicateLines) {
  TempDir dir;
  {
    std::ofstream out(dir / "c.jsonl");
    out << R"({"id":"a","published":"2007-02-08","title":"T","body":"x"})" << '\n'
        << "garbage\n"
        << R"({"id":"a","published":"2007-02-09","title":"T","body":"y"})" << '\n'
        << '\n'
        << R"({"id":"b","published":"2007-02-10","title":"T","body":"z"})" << '\n';
  }
  Diagnostics diags;
  const auto docs = load_corpus(dir / "c.jsonl", &diags);
  ASSERT_EQ(docs.size(), 2u);
  EXPECT_EQ(docs[0].doc_id, "a");
  EXPECT_EQ(docs[0].body, "x");
  EXPECT_EQ(docs[1].doc_id, "b");
  ASSERT_EQ(diags.size(), 2u);
  EXPECT_EQ(diags[0].line, 2u);
  EXPECT_EQ(diags[1].line, 3u);
  EXPECT_THROW(load_corpus(dir / "missing.jsonl"), DataError);
}

Document with_body(std::string body) {
  Document d;
  d.doc_id = "d";
  d.published = make_date(2005, 1, 1);
  d.body = std::move(body);
  return d;
}

std::vector<std::string> sentence_texts(const Document& d) {
  std::vector<std::string> out;
  for (const auto& s : segment_sentences(d)) out.push_back(s.text);
  return out;
}

TEST(SegmentTest, SplitsOnTerminalPunctuation) {
  EXPECT_EQ(sentence_texts(with_body("Google bought YouTube. It paid $1.65 billion! Why? 2006 was busy.")),
            (std::vector<std::string>{"Google bought YouTube.", "It paid $1.65 billion!", "Why?",
                                      "2006 was busy."}));
}

TEST(SegmentTest, KeepsAbbreviationsAndInitials) {
  EXPECT_EQ(sentence_texts(with_body("Oracle Corp. bought PeopleSoft Inc. in Jan. 2005. "
                                     "Jan R. Smith said the U.S. market grew.")),
            (std::vector<std::string>{"Oracle Corp. bought PeopleSoft Inc. in Jan. 2005.",
                                      "Jan R. Smith said the U.S. market grew."}));
}

TEST(SegmentTest, BlankLinesEndSentencesAndSpansMatch) {
  const auto d = with_body("Headline without period\n\nBody text here. \"Quoted start.\"");
  const auto sentences = segment_sentences(d);
  ASSERT_EQ(sentences.size(), 3u);
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    const auto& s = sentences[i];
    EXPECT_EQ(d.body.substr(s.char_span.begin, s.char_span.size()), s.text);
    EXPECT_EQ(s.order_index, i);
    EXPECT_EQ(s.sentence_id, make_sentence_id("d", i));
  }
}

TEST(SegmentTest, LowercaseContinuationDoesNotSplit) {
  EXPECT_EQ(sentence_texts(with_body("Prices rose 5 p.c. in total. next")).size(), 1u);
}

}  // namespace
}  // namespace evkb::corpus
