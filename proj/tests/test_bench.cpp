#include <sstream>

#include <catch_amalgamated.hpp>

#include "hookcc/bench.hpp"

using namespace hookcc;

TEST_CASE("generator specs") {
  Graph g = generate_from_spec("grid:2x2", 1);
  CHECK(g.edges == std::vector<Edge>{{0, 1}, {2, 3}, {0, 2}, {1, 3}});

  Graph er = generate_from_spec("er:n=1000,m=500,seed=3", 1);
  CHECK(er.n == 1000);
  CHECK(er.edges.size() == 500);
  CHECK(er == generate_from_spec("er:n=1000,m=500,seed=3", 99));

  // default seed applies when the spec has none
  CHECK(generate_from_spec("er:n=10,m=5", 4) == generate_from_spec("er:n=10,m=5,seed=4", 0));

  Graph rm = generate_from_spec("rmat:scale=3,ef=2,seed=9", 1);
  CHECK(rm.n == 8);
  CHECK(rm.edges.size() == 16);

  CHECK_THROWS_AS(generate_from_spec("wat:1", 1), UsageError);
  CHECK_THROWS_AS(generate_from_spec("er:n=10", 1), UsageError);
  CHECK_THROWS_AS(generate_from_spec("grid", 1), UsageError);
}

TEST_CASE("execute_run: verified adaptive run on a lattice") {
  RunConfig cfg;
  cfg.gen_spec = "grid:30x30";
  cfg.algo = Algorithm::Adaptive;
  cfg.repetitions = 2;
  Graph g = load_graph(cfg);
  RunResult r = execute_run(cfg, g, compute_stats(g));
  CHECK(r.verified);
  CHECK(r.metrics.components == 1);
  CHECK(r.metrics.s == 4);  // average degree of the 30x30 lattice is 3.87
  CHECK(r.metrics.median_total_ms >= 0.0);
}

TEST_CASE("execute_run: cross-algorithm agreement") {
  RunConfig cfg;
  cfg.gen_spec = "er:n=1000,m=500,seed=3";
  Graph g = load_graph(cfg);
  GraphStats stats = compute_stats(g);

  cfg.algo = Algorithm::Baseline;
  RunResult base = execute_run(cfg, g, stats);
  cfg.algo = Algorithm::Adaptive;
  RunResult adapt = execute_run(cfg, g, stats);
  CHECK(base.verified);
  CHECK(adapt.verified);
  CHECK(partitions_equal(base.labels, adapt.labels));
}

TEST_CASE("metrics report: json schema") {
  RunConfig cfg;
  cfg.gen_spec = "grid:4x4";
  Graph g = load_graph(cfg);
  RunResult r = execute_run(cfg, g, compute_stats(g));
  auto j = metrics_to_json(r.metrics);

  const char* keys[] = {"algo",         "n",        "m",
                        "s",            "workers",  "total_ms",
                        "hook_ms",      "compress_ms", "cas_failures",
                        "hook_traversal_steps", "jump_steps", "components"};
  auto it = j.begin();
  for (const char* key : keys) {
    REQUIRE(it != j.end());
    CHECK(it.key() == key);
    ++it;
  }
  CHECK(j["components"] == 1);
  CHECK(j["algo"] == "adaptive");
}

TEST_CASE("metrics report: csv header") {
  RunMetrics mx;
  mx.algo = "atomic";
  std::string csv = metrics_to_csv(mx);
  CHECK(csv.rfind("algo,n,m,s,workers,total_ms,hook_ms,compress_ms,"
                  "cas_failures,hook_traversal_steps,jump_steps,components\n",
                  0) == 0);
}

TEST_CASE("sweep: rows for s=1, explicit values, and auto") {
  RunConfig cfg;
  cfg.gen_spec = "rmat:scale=8,ef=8,seed=2";
  Graph g = load_graph(cfg);
  GraphStats stats = compute_stats(g);
  auto rows = execute_sweep(cfg, g, stats, {2, 4, 8});

  REQUIRE(rows.size() >= 4);
  CHECK(rows.front().s == 1);
  bool has_auto = false;
  for (const auto& row : rows) {
    CHECK(row.verified);
    if (row.is_auto) {
      has_auto = true;
      CHECK(row.s == choose_segment_count(stats));
    }
  }
  CHECK(has_auto);
  CHECK(rows.front().speedup_vs_s1 == 1.0);
}

TEST_CASE("sweep: clamping and the empty graph") {
  RunConfig cfg;
  Graph tiny{4, {{0, 1}, {2, 3}}};
  auto rows = execute_sweep(cfg, tiny, compute_stats(tiny), {50});
  bool saw_clamped = false;
  for (const auto& row : rows) {
    CHECK(row.s <= 2);
    saw_clamped |= row.clamped;
  }
  CHECK(saw_clamped);

  Graph empty{3, {}};
  auto erows = execute_sweep(cfg, empty, compute_stats(empty), {});
  REQUIRE(erows.size() == 1);  // s=1 and auto coincide
  CHECK(erows[0].verified);
  CHECK(erows[0].components == 3);
}

TEST_CASE("sweep csv: stable header") {
  std::vector<SweepRow> rows;
  CHECK(sweep_to_csv(rows) == "s,total_ms,speedup_vs_s1,verified\n");
  rows.push_back({false, 2, false, 1.5, 2.0, true, {}, 1});
  CHECK(sweep_to_csv(rows) ==
        "s,total_ms,speedup_vs_s1,verified\n2,1.5,2,true\n");
}

TEST_CASE("verify_labels: witness on mismatch") {
  Graph g{4, {{0, 1}, {2, 3}}};
  CHECK(verify_labels(g, {0, 0, 2, 2}).equal);
  CHECK(verify_labels(g, {7, 7, 9, 9}).equal);  // names do not matter

  VerifyResult bad = verify_labels(g, {0, 0, 0, 0});  // merged components
  CHECK_FALSE(bad.equal);
  CHECK(bad.witness_v == 2);

  CHECK_THROWS_AS(verify_labels(g, {0, 0}), std::invalid_argument);
}

TEST_CASE("round_sig6") {
  CHECK(round_sig6(1234567.0) == 1234570.0);
  CHECK(round_sig6(0.000123456789) == Catch::Approx(0.000123457));
  CHECK(round_sig6(0.0) == 0.0);
}

TEST_CASE("load_graph: errors") {
  RunConfig cfg;
  CHECK_THROWS_AS(load_graph(cfg), UsageError);
  cfg.input_path = "/nonexistent/missing.el";
  CHECK_THROWS_AS(load_graph(cfg), IoError);
}
