#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "ildkit/census.hpp"
#include "ildkit/families.hpp"
#include "ildkit/report.hpp"
#include "ildkit/serialize.hpp"
#include "testutil.hpp"

using namespace ildkit;

TEST_CASE("graph6 hand-encoded oracles") {
  // 2 vertices, no edges: order byte 63+2='A', one all-zero bit byte '?'
  Graph e2 = parse_graph6("A?");
  CHECK(e2.order() == 2);
  CHECK(e2.size() == 0);

  // K_3: bits 111 padded to 111000 -> 56+63=119='w'
  Graph k3 = parse_graph6("Bw");
  CHECK(k3.order() == 3);
  CHECK(k3.size() == 3);
  CHECK(write_graph6(complete(3)) == "Bw");

  // P_4 along 1-2-3-4: bits 101001 -> 41+63 = 'h'
  CHECK(write_graph6(path(4)) == "Ch");
  CHECK(parse_graph6("Ch").size() == 3);
}

TEST_CASE("graph6 strict parsing") {
  CHECK_THROWS_AS(parse_graph6(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph6("Bw "), std::invalid_argument);   // trailing
  CHECK_THROWS_AS(parse_graph6("B"), std::invalid_argument);     // truncated
  CHECK_THROWS_AS(parse_graph6("Bww"), std::invalid_argument);   // too long
  CHECK_THROWS_AS(parse_graph6("B\x1f"), std::invalid_argument); // byte < 63
  CHECK_THROWS_AS(parse_graph6("~??"), std::invalid_argument);   // multibyte
  CHECK_THROWS_AS(parse_graph6("?"), std::invalid_argument);     // n = 0
  // K_2 is "A_": data bit 1, then 5 zero padding bits
  CHECK(parse_graph6("A_").size() == 1);
  // "Ao" sets a padding bit
  CHECK_THROWS_AS(parse_graph6("Ao"), std::invalid_argument);
}

TEST_CASE("graph6 round trip over the n <= 6 enumeration corpus") {
  for (int n = 1; n <= 6; ++n) {
    enumerate_connected(n, [&](const Graph& g) {
      std::string line = write_graph6(g);
      Graph back = parse_graph6(line);
      CHECK(back == g);
      CHECK(write_graph6(back) == line);
    });
  }
}

TEST_CASE("graph6 round trip over all trees n <= 10") {
  for (int n = 2; n <= 10; ++n) {
    enumerate_trees(n, [&](const Graph& g) {
      CHECK(parse_graph6(write_graph6(g)) == g);
    });
  }
}

TEST_CASE("edge list") {
  CHECK(write_edge_list(path(3)) == "3\n1 2\n2 3\n");
  Graph g = parse_edge_list("4\n1 2\n2 3\n3 4\n");
  CHECK(g == path(4));
  CHECK(parse_edge_list("3").order() == 3);  // edgeless is fine
  CHECK_THROWS_AS(parse_edge_list(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_edge_list("3\n1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_edge_list("3\n1 5"), std::invalid_argument);
}

TEST_CASE("dot output") {
  std::string dot = write_dot(cycle(4));
  std::size_t count = 0, at = 0;
  while ((at = dot.find("--", at)) != std::string::npos) {
    ++count;
    at += 2;
  }
  CHECK(count == 4);
  // isolated vertices still listed
  Graph lone = Graph::build(2, {});
  CHECK(write_dot(lone).find("1;") != std::string::npos);
}

TEST_CASE("graph6 stream reader") {
  std::istringstream in("Bw\n\nCr\n");
  auto graphs = read_graph6_stream(in);
  REQUIRE(graphs.size() == 2);
  CHECK(graphs[0].order() == 3);
  CHECK(graphs[1].order() == 4);
}

TEST_CASE("report document round trip") {
  ReportDocument doc;
  doc.operation = "params";
  doc.input = {{"source", "stdin"}, {"graph6", "Bw"}};
  doc.result = {{"gamma", 1}, {"witnesses", {{"gamma", {1}}}}};
  doc.provenance.runtime_ms = 12;

  nlohmann::json j = doc;
  std::string wire = j.dump();
  ReportDocument back = nlohmann::json::parse(wire).get<ReportDocument>();
  CHECK(back == doc);
}
