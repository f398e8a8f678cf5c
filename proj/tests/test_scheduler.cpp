#include <doctest.h>

#include "oracles.hpp"
#include "qpms/report.hpp"
#include "qpms/scheduler.hpp"
#include "qpms/solvers.hpp"

using namespace qpms;

namespace {

const Alphabet kDna = Alphabet::dna();

}  // namespace

TEST_CASE("work_unit_count") {
  CHECK(work_unit_count(0, 8) == 0);
  CHECK(work_unit_count(588, 1) == 588);
  CHECK(work_unit_count(588, 8) == 74);
  CHECK(work_unit_count(16, 8) == 2);
}

TEST_CASE("one root per window with chunk 1 when q = n") {
  FmParams p;
  p.n = 6;
  p.m = 50;
  p.l = 7;
  p.d = 1;
  p.q = 6;
  const auto planted = generate_fm(p);
  for (auto a : {Algorithm::Prune, Algorithm::Qpms7, Algorithm::Traver, Algorithm::Sigma}) {
    SolverOptions opts;
    opts.algorithm = a;
    opts.chunk = 1;
    CHECK(solve(planted.instance, opts).work_units == 50 - 7 + 1);
    opts.chunk = 8;
    CHECK(solve(planted.instance, opts).work_units == 6);
  }
}

TEST_CASE("thread count never changes the result") {
  for (int i = 0; i < 40; ++i) {
    const auto inst = oracle::random_small_instance(8000 + i);
    for (auto a : {Algorithm::Prune, Algorithm::Qpms7, Algorithm::Traver, Algorithm::Sigma}) {
      SolverOptions opts;
      opts.algorithm = a;
      opts.chunk = 1 + i % 3;
      const auto one = solve(inst, opts);
      CHECK(schedule(inst, opts).motifs == one.motifs);
      for (int threads : {2, 4, 8}) {
        opts.threads = threads;
        const auto many = solve(inst, opts);
        CHECK(many.motifs == one.motifs);
        CHECK(many.visited_nodes == one.visited_nodes);
      }
    }
  }
}

TEST_CASE("a past deadline marks the run as timed out") {
  FmParams p;
  p.l = 15;
  p.d = 5;
  const auto planted = generate_fm(p);
  SolverOptions opts;
  opts.threads = 2;
  opts.deadline = std::chrono::steady_clock::now();
  const auto r = solve(planted.instance, opts);
  CHECK(r.timed_out);
}

TEST_CASE("run report") {
  FmParams p;
  p.n = 6;
  p.m = 40;
  p.l = 6;
  p.d = 1;
  p.q = 6;
  const auto planted = generate_fm(p);
  SolverOptions opts;
  const auto result = solve(planted.instance, opts);
  const auto report = make_report(planted.instance, opts, result, 0.5, &planted.truth);
  const auto j = to_json(report, kDna);
  CHECK(j["schema"] == 1);
  CHECK(j["instance"]["n"] == 6);
  CHECK(j["algorithm"] == "sigma");
  CHECK(j["motif_count"] == result.motifs.size());
  CHECK(j["motifs"].size() == result.motifs.size());
  CHECK(j["recovered"] == true);

  const auto bare = to_json(make_report(planted.instance, opts, result, 0.5), kDna);
  CHECK_FALSE(bare.contains("recovered"));
  const auto elided = to_json(make_report(planted.instance, opts, result, 0.5, nullptr, 0), kDna);
  CHECK(elided["motifs_elided"] == true);
  CHECK(elided["motifs"].empty());
  CHECK(elided["motif_count"] == result.motifs.size());

  const auto text = format_motifs(result.motifs, kDna);
  CHECK(text.find(decode(planted.truth.motif, kDna) + "\t6\n") != std::string::npos);
}

TEST_CASE("bench rows") {
  const auto suite = challenging_suite();
  REQUIRE(suite.size() == 6);
  CHECK(suite.front().l == 13);
  CHECK(suite.front().d == 4);
  CHECK(suite.back().l == 23);
  CHECK(suite.back().d == 9);

  BenchConfig config;
  config.cases = {{7, 1}};
  config.n = 8;
  config.m = 60;
  config.q = 8;
  config.algorithms = {Algorithm::Sigma, Algorithm::Traver, Algorithm::Oracle};
  config.seeds = {1, 2};
  const auto rows = run_bench(config);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0].status == "ok");
  CHECK(rows[0].recovered);
  CHECK(rows[0].motif_count == rows[1].motif_count);
  CHECK(rows[2].status == "ok");
  const auto tsv = bench_tsv(rows);
  CHECK(tsv.rfind("l\td\tq\talgorithm", 0) == 0);
  CHECK(std::count(tsv.begin(), tsv.end(), '\n') == 7);
  CHECK(bench_table(rows).find("(7,1)") != std::string::npos);

  config.cases = {{23, 9}};
  config.n = 20;
  config.m = 600;
  config.q = 20;
  config.algorithms = {Algorithm::Sigma, Algorithm::Oracle};
  config.seeds = {1};
  config.timeout_seconds = 0.2;
  const auto slow = run_bench(config);
  CHECK(slow[0].status == "TIMEOUT");
  CHECK(slow[1].status == "BUDGET");
}
