#include "coredp/ledp_kcore.hpp"

#include <cmath>
#include <sstream>

#include <doctest.h>

#include "coredp/errors.hpp"
#include "support/reference.hpp"

using namespace coredp;

TEST_CASE("round counts are 4*ceil(log2 n)^2") {
  CHECK(round_count(2) == 4);
  CHECK(round_count(16) == 64);
  CHECK(round_count(100) == 196);
  CHECK(round_count(1000) == 400);
  CHECK_THROWS_AS(round_count(1), InputError);
}

TEST_CASE("level thresholds step every 2*ceil(log2 n) rounds") {
  CHECK(level_threshold(0, 16, 0.05) == 1.0);
  CHECK(level_threshold(7, 16, 0.05) == 1.0);
  CHECK(level_threshold(8, 16, 0.05) == doctest::Approx(1.05));
  CHECK(level_threshold(17, 16, 0.05) == doctest::Approx(1.1025));
}

TEST_CASE("psi and lambda derive from eta") {
  const LedpConfig c{2.0, 0.5};
  CHECK(c.psi() == doctest::Approx(0.05));
  CHECK(c.lambda() == doctest::Approx(2.0 * 29.5 * 0.5 / (10.5 * 10.5)));
  CHECK(c.lambda() == doctest::Approx(0.26757).epsilon(1e-4));
}

TEST_CASE("level zero maps to the 2+lambda floor estimate") {
  for (VertexId n : {2u, 10u, 256u, 5000u}) {
    const LedpConfig c{1.0, 1.0};
    CHECK(ledp_estimate_from_level(0, n, c) ==
          doctest::Approx(2.0 + c.lambda()));
  }
}

TEST_CASE("transcript has exactly one record per round") {
  const Graph g = testsupport::random_graph(16, 0.3, 3);
  NoiseOracle oracle(1);
  const LedpResult r = ledp_core_numbers(g, {1.0, 0.9}, oracle);
  REQUIRE(r.transcript.size() == 64);
  for (std::uint32_t i = 0; i < r.transcript.size(); ++i) {
    CHECK(r.transcript[i].round == i);
    CHECK(r.transcript[i].released.size() == r.transcript[i].queried.size());
    CHECK(r.transcript[i].epsilon == 1.0);
  }
  // round 0 queries everyone: all nodes start on the frontier
  CHECK(r.transcript[0].queried.size() == g.n());
}

TEST_CASE("an isolated vertex freezes in round zero") {
  const Graph g = Graph::from_edge_list(std::vector<Edge>{{1, 2}}, 3);
  NoiseOracle oracle(1, /*zero_override=*/true);
  const LedpConfig config{1.0, 1.0};
  const LedpResult r = ledp_core_numbers(g, config, oracle);
  CHECK(r.levels[0] == 0);
  CHECK(r.labels[0] == doctest::Approx(2.0 + config.lambda()));
  // it is queried in round 0, releases 0, and never appears again
  CHECK(r.transcript[0].released[0] == 0);
  for (std::size_t i = 1; i < r.transcript.size(); ++i) {
    for (VertexId q : r.transcript[i].queried) CHECK(q != 0);
  }
}

TEST_CASE("levels rise by at most one and only from the frontier") {
  const Graph g = testsupport::random_graph(32, 0.25, 9);
  NoiseOracle oracle(4);
  const LedpResult r = ledp_core_numbers(g, {2.0, 1.0}, oracle);

  // replay levels from the released bits
  std::vector<std::uint32_t> level(g.n(), 0);
  for (const TranscriptRound& rec : r.transcript) {
    // exactly the frontier is queried
    std::vector<VertexId> expected;
    for (VertexId v = 0; v < g.n(); ++v) {
      if (level[v] == rec.round) expected.push_back(v);
    }
    CHECK(rec.queried == expected);
    for (std::size_t i = 0; i < rec.queried.size(); ++i) {
      if (rec.released[i]) level[rec.queried[i]] += 1;
    }
  }
  CHECK(level == r.levels);
}

TEST_CASE("released bits replay from node-local data plus the prefix") {
  // locality: every bit must be recomputable from the node's own adjacency
  // list, its own noise stream, and previously released bits only.
  const Graph g = testsupport::random_graph(24, 0.3, 15);
  const LedpConfig config{2.0, 1.0};
  NoiseOracle oracle(77);
  const LedpResult r = ledp_core_numbers(g, config, oracle);

  NoiseOracle base(77);
  std::vector<NoiseOracle> node_oracle;
  for (VertexId i = 0; i < g.n(); ++i) node_oracle.push_back(base.spawn(i));
  std::vector<double> offsets(g.n());
  for (VertexId i = 0; i < g.n(); ++i) {
    offsets[i] = node_oracle[i].laplace(4.0 / config.epsilon);
  }

  std::vector<std::uint32_t> level(g.n(), 0);
  for (const TranscriptRound& rec : r.transcript) {
    for (std::size_t idx = 0; idx < rec.queried.size(); ++idx) {
      const VertexId i = rec.queried[idx];
      std::uint32_t same = 0;
      for (VertexId j : g.neighbors(i)) same += level[j] == rec.round;
      const double noisy = same + node_oracle[i].laplace(8.0 / config.epsilon);
      const std::uint8_t bit =
          noisy <= level_threshold(rec.round, g.n(), config.psi()) + offsets[i]
              ? 0
              : 1;
      CHECK(bit == rec.released[idx]);
    }
    for (std::size_t idx = 0; idx < rec.queried.size(); ++idx) {
      if (rec.released[idx]) level[rec.queried[idx]] += 1;
    }
  }
}

TEST_CASE("transcript serialization is line-per-round json") {
  const Graph g = testsupport::random_graph(8, 0.4, 2);
  NoiseOracle oracle(3);
  const LedpResult r = ledp_core_numbers(g, {1.0, 0.5}, oracle);
  std::ostringstream out;
  write_transcript(r.transcript, out);
  const std::string text = out.str();
  std::size_t lines = 0;
  for (char c : text) lines += c == '\n';
  CHECK(lines == r.transcript.size());
  CHECK(text.find("\"round\":0") != std::string::npos);
  CHECK(text.find("\"randomizer\":") != std::string::npos);
}

TEST_CASE("estimates depend only on the final level") {
  const Graph g = testsupport::random_graph(64, 0.2, 8);
  NoiseOracle oracle(5);
  const LedpConfig config{2.0, 0.5};
  const LedpResult r = ledp_core_numbers(g, config, oracle);
  for (VertexId v = 0; v < g.n(); ++v) {
    CHECK(r.labels[v] == ledp_estimate_from_level(r.levels[v], g.n(), config));
  }
}

TEST_CASE("config validation") {
  const Graph g = testsupport::random_graph(8, 0.3, 1);
  NoiseOracle oracle(1);
  CHECK_THROWS_AS(ledp_core_numbers(g, {0.0, 0.5}, oracle), InputError);
  CHECK_THROWS_AS(ledp_core_numbers(g, {1.0, 0.0}, oracle), InputError);
  const Graph tiny = Graph::from_edge_list({}, 1);
  CHECK_THROWS_AS(ledp_core_numbers(tiny, {1.0, 0.5}, oracle), InputError);
}
