// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qpms/bitpack.hpp"
#include "qpms/consensus.hpp"
#include "qpms/datagen.hpp"
#include "qpms/neighborhood.hpp"
#include "qpms/report.hpp"
#include "qpms/solvers.hpp"

using namespace qpms;
using Clock = std::chrono::steady_clock;

namespace {

constexpr int kSmallSuite = 300;
constexpr int kModerateSeeds = 10;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

std::vector<Instance> small_suite() {
  std::vector<Instance> out;
  for (int i = 1; i <= kSmallSuite; ++i) out.push_back(oracle::random_small_instance(i));
  return out;
}

SolverOptions with(Algorithm a) {
  SolverOptions o;
  o.algorithm = a;
  return o;
}

constexpr std::array kSolvers{Algorithm::Prune, Algorithm::Qpms7, Algorithm::Traver,
                              Algorithm::Sigma};

Outcome oracle_equivalence(const std::vector<Instance>& suite) {
  Outcome o;
  int nonempty = 0;
  for (std::size_t i = 0; i < suite.size(); ++i) {
    const auto& inst = suite[i];
    const auto expected = solve_oracle(inst).motifs;
    if (expected.size() > 0) ++nonempty;
    for (auto a : kSolvers)
      if (solve(inst, with(a)).motifs != expected) {
        o.pass = false;
        o.detail += " instance " + std::to_string(i + 1) + "/" + std::string(to_string(a));
      }
    for (int k : {default_subset_size(inst), 2})
      if (solve_subset_then_verify(inst, k).motifs != expected) {
        o.pass = false;
        o.detail += " instance " + std::to_string(i + 1) + "/subset" + std::to_string(k);
      }
  }
  o.detail = std::to_string(suite.size()) + " instances, " + std::to_string(nonempty) +
             " with motifs" + o.detail;
  return o;
}

Outcome feasibility_theorem() {
  Outcome o;
  std::uint64_t checks = 0;
  for (int l = 1; l <= 5; ++l) {
    const auto all = oracle::all_strings(l, 2);
    const int r = l + 1;
    std::vector<char> feasible(r * r * r);
    auto at = [&](int a, int b, int c) -> char& { return feasible[(a * r + b) * r + c]; };
    for (const auto& a : all)
      for (const auto& b : all)
        for (const auto& c : all) {
          std::fill(feasible.begin(), feasible.end(), 0);
          for (const auto& y : all)
            at(oracle::mismatches(y, a), oracle::mismatches(y, b), oracle::mismatches(y, c)) = 1;
          // Close upward: larger radii keep any common string.
          for (int x = 0; x < r; ++x)
            for (int y = 0; y < r; ++y)
              for (int z = 0; z < r; ++z) {
                if (x > 0) at(x, y, z) |= at(x - 1, y, z);
                if (y > 0) at(x, y, z) |= at(x, y - 1, z);
                if (z > 0) at(x, y, z) |= at(x, y, z - 1);
              }
          const Lmer la(a), lb(b), lc(c);
          for (int x = 0; x < r; ++x)
            for (int y = 0; y < r; ++y)
              for (int z = 0; z < r; ++z) {
                ++checks;
                if (balls_intersect(la, x, lb, y, lc, z) != (at(x, y, z) != 0)) o.pass = false;
              }
        }
  }
  o.detail = std::to_string(checks) + " (centers, radii) cases";
  return o;
}

Outcome bit_distance() {
  Outcome o;
  StableRng rng(2024);
  std::uint64_t pairs = 0;
  for (int sigma : {2, 4, 20}) {
    const int bits = sigma == 2 ? 1 : sigma == 4 ? 2 : 5;
    for (int l : {1, 7, 16, 31, 32, 33, 64})
      for (int i = 0; i < 100000; ++i) {
        const auto a = oracle::random_codes(rng, l, sigma);
        const auto b = oracle::random_codes(rng, l, sigma);
        ++pairs;
        if (hamming_compressed(compress_lmer(a, bits), compress_lmer(b, bits)) !=
            hamming_naive(a, b))
          o.pass = false;
      }
  }
  o.detail = std::to_string(pairs) + " pairs";
  return o;
}

Outcome ball_formula() {
  Outcome o;
  int cases = 0;
  for (int sigma : {2, 4})
    for (int l = 1; l <= 6; ++l)
      for (int d = 0; d <= std::min(l, 3); ++d) {
        ++cases;
        const Lmer x(std::vector<Code>(l, 0));
        if (ball_size(l, d, sigma) != ball_enumerate(x, d, sigma).size()) o.pass = false;
      }
  o.detail = std::to_string(cases) + " (l,d,sigma) cases";
  return o;
}

struct ModerateRuns {
  std::array<std::vector<std::uint64_t>, kSolvers.size()> nodes;
  std::array<double, kSolvers.size()> slowest{};
};

Outcome planted_recovery(ModerateRuns& runs) {
  Outcome o;
  for (int seed = 1; seed <= kModerateSeeds; ++seed) {
    FmParams p;
    p.l = 9;
    p.d = 2;
    p.seed = static_cast<std::uint64_t>(seed);
    const auto planted = generate_fm(p);
    for (std::size_t a = 0; a < kSolvers.size(); ++a) {
      const auto begin = Clock::now();
      const auto result = solve(planted.instance, with(kSolvers[a]));
      const double secs = since(begin);
      runs.slowest[a] = std::max(runs.slowest[a], secs);
      runs.nodes[a].push_back(result.visited_nodes);
      if (!result.motifs.contains(planted.truth.motif) || secs > 60.0) {
        o.pass = false;
        o.detail += " seed " + std::to_string(seed) + "/" + std::string(to_string(kSolvers[a]));
      }
    }
  }
  std::ostringstream os;
  os << kModerateSeeds << " seeds; slowest run";
  for (std::size_t a = 0; a < kSolvers.size(); ++a) {
    char buf[64];
    std::snprintf(buf, sizeof buf, " %s %.1fs", std::string(to_string(kSolvers[a])).c_str(),
                  runs.slowest[a]);
    os << buf;
  }
  o.detail = os.str() + o.detail;
  return o;
}

Outcome challenging_smoke() {
  Outcome o;
  FmParams p;
  p.l = 13;
  p.d = 4;
  p.seed = 1;
  const auto planted = generate_fm(p);
  auto sigma = with(Algorithm::Sigma);
  sigma.threads = 4;
  auto begin = Clock::now();
  const auto s = solve(planted.instance, sigma);
  const double sigma_secs = since(begin);
  auto traver = with(Algorithm::Traver);
  traver.threads = 4;
  begin = Clock::now();
  const auto t = solve(planted.instance, traver);
  const double traver_secs = since(begin);
  const bool recovered = s.motifs.contains(planted.truth.motif);
  o.pass = recovered && sigma_secs <= 1800.0 && s.motifs == t.motifs;
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "sigma %.1fs, %zu motifs, planted %s; traver %.1fs, sets %s", sigma_secs,
                s.motifs.size(), recovered ? "found" : "MISSING", traver_secs,
                s.motifs == t.motifs ? "identical" : "DIFFER");
  o.detail = buf;
  return o;
}

Outcome consensus_score_check() {
  Outcome o;
  // Seven rows; column j holds its majority symbol maxima[j] times.
  const std::vector<int> maxima{5, 5, 6, 4, 5, 5, 6, 6};
  const std::string consensus = "ATGCAACT";
  const auto dna = Alphabet::dna();
  AlignmentMatrix rows(7, Lmer(std::vector<Code>(8, 0)));
  for (int j = 0; j < 8; ++j) {
    const int top = dna.code_of(consensus[j]);
    for (int i = 0; i < 7; ++i)
      rows[i][j] = static_cast<Code>(i < maxima[j] ? top : (top + 1 + (i - maxima[j]) % 3) % 4);
  }
  const auto profile = profile_matrix(rows, 4);
  const int score = consensus_score(profile);
  if (score != 42 || decode(consensus_string(profile), dna) != consensus) o.pass = false;

  StableRng rng(7);
  for (int i = 0; i < 1000; ++i) {
    const int sigma = i % 2 == 0 ? 4 : 20;
    const int t = 1 + static_cast<int>(rng.below(15));
    const int l = 1 + static_cast<int>(rng.below(15));
    AlignmentMatrix random_rows;
    for (int k = 0; k < t; ++k) random_rows.emplace_back(oracle::random_codes(rng, l, sigma));
    const int s = consensus_score(profile_matrix(random_rows, sigma));
    if (s < l * ((t + sigma - 1) / sigma) || s > l * t) o.pass = false;
  }
  o.detail = "worked profile scores " + std::to_string(score) + "; 1000 random profiles in bounds";
  return o;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome determinism(const std::vector<Instance>& suite) {
  Outcome o;
  const auto dna = Alphabet::dna();
  for (std::size_t i = 0; i < suite.size(); ++i)
    for (auto a : kSolvers) {
      std::string reference;
      for (int threads : {1, 2, 8}) {
        auto opts = with(a);
        opts.threads = threads;
        const auto text = format_motifs(solve(suite[i], opts).motifs, dna);
        if (threads == 1)
          reference = text;
        else if (text != reference) {
          o.pass = false;
          o.detail += " instance " + std::to_string(i + 1);
        }
      }
    }

  const auto dir = std::filesystem::temp_directory_path() / "qpms_acceptance";
  std::filesystem::create_directories(dir);
  std::array<std::string, 2> fasta, truth;
  for (int run = 0; run < 2; ++run) {
    const auto prefix = (dir / ("gen" + std::to_string(run))).string();
    const std::string cmd = std::string(QPMS_CLI) + " generate --seed 17 --out " + prefix;
    if (std::system(cmd.c_str()) != 0) o.pass = false;
    fasta[run] = slurp(prefix + ".fasta");
    truth[run] = slurp(prefix + ".truth");
  }
  const bool same_files = !fasta[0].empty() && fasta[0] == fasta[1] && truth[0] == truth[1];
  if (!same_files) o.pass = false;
  std::filesystem::remove_all(dir);
  o.detail = "threads 1/2/8 on " + std::to_string(suite.size()) + " instances; generate files " +
             (same_files ? "identical" : "DIFFER") + o.detail;
  return o;
}

std::uint64_t median(std::vector<std::uint64_t> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2;
}

Outcome neutrality(const std::vector<Instance>& suite, const ModerateRuns& runs) {
  Outcome o;
  for (std::size_t i = 0; i < suite.size(); ++i) {
    const auto& inst = suite[i];
    auto prune = with(Algorithm::Prune);
    const auto base = solve(inst, prune).motifs;
    prune.quorum_prune = false;
    if (solve(inst, prune).motifs != base) o.pass = false;
    for (auto a : {Algorithm::Traver, Algorithm::Sigma})
      for (int mask = 0; mask < 4; ++mask) {
        auto opts = with(a);
        opts.string_reordering = (mask & 1) != 0;
        opts.position_reordering = (mask & 2) != 0;
        if (solve(inst, opts).motifs != base) {
          o.pass = false;
          o.detail += " instance " + std::to_string(i + 1);
        }
      }
  }
  // kSolvers order: prune, qpms7, traver, sigma.
  const auto prune = median(runs.nodes[0]);
  const auto qpms7 = median(runs.nodes[1]);
  const auto traver = median(runs.nodes[2]);
  if (!(traver <= qpms7 && qpms7 <= prune)) o.pass = false;
  o.detail = "toggles neutral on " + std::to_string(suite.size()) +
             " instances; median nodes traver " + std::to_string(traver) + " <= qpms7 " +
             std::to_string(qpms7) + " <= prune " + std::to_string(prune) + o.detail;
  return o;
}

}  // namespace

int main() {
  const auto suite = small_suite();
  ModerateRuns moderate;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"oracle equivalence", [&] { return oracle_equivalence(suite); }},
      {"feasibility theorem", feasibility_theorem},
      {"bit-distance equivalence", bit_distance},
      {"ball-size formula", ball_formula},
      {"planted recovery (9,2)", [&] { return planted_recovery(moderate); }},
      {"challenging smoke (13,4)", challenging_smoke},
      {"consensus score", consensus_score_check},
      {"determinism", [&] { return determinism(suite); }},
      {"pruning/reordering neutrality", [&] { return neutrality(suite, moderate); }},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto begin = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failures;
    std::printf("criterion %zu %s: %s (%.1fs) %s\n", i + 1, criteria[i].first.c_str(),
                o.pass ? "PASS" : "FAIL", since(begin), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
