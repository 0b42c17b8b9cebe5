#include <gtest/gtest.h>

#include "colred/io.hpp"

namespace colred {
namespace {

std::string message_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const FormatError& e) {
    return e.what();
  }
  return "no error";
}

TEST(CollectionIoTest, RoundTrip) {
  const Collection base = base_collection_c3();
  const Collection back = load_collection(save_collection(base));
  EXPECT_EQ(back.c(), 3);
  EXPECT_TRUE(back.same_families(base));
  EXPECT_EQ(back.compact(), base.compact());
}

TEST(CollectionIoTest, ExplicitDocument) {
  const Collection loaded = load_collection(R"({"c": 3, "families": [[[2, 3], [1, 2], [1, 3]], [[1]]]})");
  EXPECT_EQ(loaded.size(), 2);
  EXPECT_EQ(loaded.families()[0].compact(), "12 13 23");
}

TEST(CollectionIoTest, ConstructionIsWrittenAsRule) {
  const std::string text = save_collection(construct(12));
  EXPECT_NE(text.find("\"construct\""), std::string::npos);
  EXPECT_EQ(text.find("families"), std::string::npos);
  const Collection back = load_collection(text);
  EXPECT_TRUE(back.is_lazy());
  EXPECT_EQ(back.size(), pow2(462) + 12);
  EXPECT_NE(back.construction(), nullptr);
}

TEST(CollectionIoTest, Diagnostics) {
  EXPECT_NE(message_of([] { load_collection(R"({"c": 3, "families": [[[1], []]]})"); }).find("families[0][1]: empty subset"),
            std::string::npos);
  EXPECT_NE(message_of([] { load_collection(R"({"c": 3, "families": [[[4]]]})"); }).find("outside [1, 3]"),
            std::string::npos);
  EXPECT_NE(message_of([] { load_collection(R"({"families": []})"); }).find("'c'"), std::string::npos);
  EXPECT_NE(message_of([] { load_collection(R"({"c": 3, "families": [[]]})"); }).find("empty family"),
            std::string::npos);
  EXPECT_NE(message_of([] { load_collection(R"({"c": 3, "k": 2, "families": [[[1]]]})"); }).find("'k'"),
            std::string::npos);
  EXPECT_NE(message_of([] { load_collection(R"({"c": 3, "rule": "other"})"); }).find("unknown rule"),
            std::string::npos);
  EXPECT_NE(message_of([] { load_collection(R"({"c": 5, "rule": "construct"})"); }).find("'c'"), std::string::npos);
  EXPECT_NE(message_of([] { load_collection("{\"c\": 3,"); }).find("malformed"), std::string::npos);
}

TEST(TableIoTest, RoundTrip) {
  const AlgorithmTable table = example_4to3();
  const std::string text = save_table(table);
  EXPECT_EQ(load_table(text), table);
  EXPECT_TRUE(looks_like_table(text));
  EXPECT_FALSE(looks_like_table(save_collection(base_collection_c3())));
}

TEST(TableIoTest, RejectsIncompleteEntries) {
  EXPECT_THROW(load_table(R"({"k": 3, "c": 3, "entries": [[1, 2, 3, 1]]})"), FormatError);
  EXPECT_NE(message_of([] { load_table(R"({"k": 3, "c": 3, "entries": [[1, 2]]})"); }).find("entries[0]"),
            std::string::npos);
}

TEST(GraphIoTest, RoundTripWithLargeColours) {
  ColouredGraph g{Topology::cycle, {parse_big("10^100"), 3, parse_big("2^300")}, parse_big("10^100") * 10, true};
  EXPECT_EQ(load_graph(save_graph(g)), g);
  EXPECT_NE(message_of([] { load_graph(R"({"topology": "tree", "k": "3", "colours": ["1"]})"); }).find("topology"),
            std::string::npos);
  EXPECT_NE(message_of([] { load_graph(R"({"topology": "path", "k": "3", "colours": [1]})"); }).find("colours[0]"),
            std::string::npos);
}

TEST(TraceIoTest, OneLinePerRound) {
  ChainTrace trace{{"a", 12, 4, 7, {}}, {"b", 4, 3, 9, {Colour(1), Colour(2)}}};
  const std::string text = save_trace(trace);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 2);
  EXPECT_NE(text.find(R"("colours":["1","2"])"), std::string::npos);
}

TEST(SearchIoTest, RoundTrip) {
  const SearchResult result = max_colourful(3);
  const SearchResult back = load_search_result(save_search_result(result));
  EXPECT_EQ(back.c, 3);
  EXPECT_EQ(back.best_size, 4);
  EXPECT_EQ(back.exhaustive, result.exhaustive);
  EXPECT_EQ(back.maximal_only, result.maximal_only);
  EXPECT_EQ(back.nodes, result.nodes);
  ASSERT_TRUE(back.witness.has_value());
  EXPECT_TRUE(back.witness->same_families(*result.witness));
}

}  // namespace
}  // namespace colred
