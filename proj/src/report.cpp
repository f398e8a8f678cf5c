#include "qpms/report.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>

namespace qpms {

RunReport make_report(const Instance& inst, const SolverOptions& opts,
                      const SolveResult& result, double wall_seconds,
                      const GroundTruth* truth, std::size_t max_listed) {
  RunReport r;
  r.n = inst.n();
  r.m = inst.m();
  r.l = inst.l;
  r.d = inst.d;
  r.q = inst.q;
  r.algorithm = std::string(to_string(opts.algorithm));
  r.threads = opts.threads;
  r.wall_seconds = wall_seconds;
  r.visited_nodes = result.visited_nodes;
  r.work_units = result.work_units;
  r.motif_count = result.motifs.size();
  r.timed_out = result.timed_out;
  if (result.motifs.size() > max_listed)
    r.motifs_elided = true;
  else
    r.motifs = result.motifs.motifs;
  if (truth != nullptr) r.recovered = result.motifs.contains(truth->motif);
  return r;
}

nlohmann::json to_json(const RunReport& r, const Alphabet& alphabet) {
  nlohmann::json j;
  j["schema"] = kReportSchema;
  j["instance"] = {{"n", r.n}, {"m", r.m}, {"l", r.l}, {"d", r.d}, {"q", r.q}};
  j["algorithm"] = r.algorithm;
  j["threads"] = r.threads;
  j["wall_seconds"] = r.wall_seconds;
  j["visited_nodes"] = r.visited_nodes;
  j["work_units"] = r.work_units;
  j["timed_out"] = r.timed_out;
  j["motif_count"] = r.motif_count;
  j["motifs_elided"] = r.motifs_elided;
  auto list = nlohmann::json::array();
  for (const auto& m : r.motifs)
    list.push_back({{"motif", decode(m.lmer, alphabet)}, {"support", m.support}});
  j["motifs"] = std::move(list);
  if (r.recovered) j["recovered"] = *r.recovered;
  return j;
}

std::string format_motifs(const MotifSet& motifs, const Alphabet& alphabet) {
  std::string out;
  for (const auto& m : motifs.motifs) {
    out += decode(m.lmer, alphabet);
    out += '\t';
    out += std::to_string(m.support);
    out += '\n';
  }
  return out;
}

std::vector<BenchCase> challenging_suite() {
  return {{13, 4}, {15, 5}, {17, 6}, {19, 7}, {21, 8}, {23, 9}};
}

std::vector<BenchRow> run_bench(const BenchConfig& config) {
  std::vector<BenchRow> rows;
  for (const BenchCase& c : config.cases) {
    for (std::uint64_t seed : config.seeds) {
      FmParams params;
      params.n = config.n;
      params.m = config.m;
      params.l = c.l;
      params.d = c.d;
      params.q = config.q;
      params.seed = seed;
      const PlantedInstance planted = generate_fm(params);
      for (Algorithm algo : config.algorithms) {
        SolverOptions opts;
        opts.algorithm = algo;
        opts.threads = config.threads;
        const auto begin = std::chrono::steady_clock::now();
        opts.deadline = begin + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                    std::chrono::duration<double>(config.timeout_seconds));
        BenchRow row;
        row.l = c.l;
        row.d = c.d;
        row.q = config.q;
        row.algorithm = std::string(to_string(algo));
        row.seed = seed;
        try {
          const SolveResult result = solve(planted.instance, opts);
          if (result.timed_out) row.status = "TIMEOUT";
          row.visited_nodes = result.visited_nodes;
          row.motif_count = result.motifs.size();
          row.recovered = !result.timed_out && result.motifs.contains(planted.truth.motif);
        } catch (const BudgetExceeded&) {
          row.status = "BUDGET";
        }
        row.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - begin).count();
        rows.push_back(row);
      }
    }
  }
  return rows;
}

std::string bench_tsv(const std::vector<BenchRow>& rows) {
  std::ostringstream os;
  os << "l\td\tq\talgorithm\tseed\tstatus\twall_seconds\tvisited_nodes\tmotifs\trecovered\n";
  for (const auto& r : rows) {
    os << r.l << '\t' << r.d << '\t' << r.q << '\t' << r.algorithm << '\t' << r.seed << '\t'
       << r.status << '\t';
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.3f", r.wall_seconds);
    os << secs << '\t' << r.visited_nodes << '\t' << r.motif_count << '\t'
       << (r.recovered ? "yes" : "no") << '\n';
  }
  return os.str();
}

std::string bench_table(const std::vector<BenchRow>& rows) {
  std::vector<std::vector<std::string>> cells;
  cells.push_back({"(l,d)", "q", "algorithm", "seed", "time", "nodes", "motifs", "recovered"});
  for (const auto& r : rows) {
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2fs", r.wall_seconds);
    cells.push_back({"(" + std::to_string(r.l) + "," + std::to_string(r.d) + ")",
                     std::to_string(r.q), r.algorithm, std::to_string(r.seed),
                     r.status == "ok" ? std::string(secs) : r.status,
                     std::to_string(r.visited_nodes),
                     r.status == "ok" ? std::to_string(r.motif_count) : "-",
                     r.status == "ok" ? (r.recovered ? "yes" : "no") : "-"});
  }
  std::vector<std::size_t> width(cells.front().size(), 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::string out;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out += row[c];
      if (c + 1 < row.size()) out += std::string(width[c] - row[c].size() + 2, ' ');
    }
    out += '\n';
  }
  return out;
}

}  // namespace qpms
