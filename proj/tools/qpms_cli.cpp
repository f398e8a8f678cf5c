// qpms: command-line front end for the quorum planted motif search solvers.
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qpms/consensus.hpp"
#include "qpms/datagen.hpp"
#include "qpms/model.hpp"
#include "qpms/report.hpp"
#include "qpms/solvers.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitBadParams = 2;
constexpr int kExitBudget = 3;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw InputError("cannot write '" + path + "'");
}

qpms::Alphabet alphabet_named(const std::string& name) {
  return name == "protein" ? qpms::Alphabet::protein() : qpms::Alphabet::dna();
}

std::vector<int> parse_csv_ints(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw qpms::BadParams("not an integer list: '" + csv + "'");
    }
  }
  return out;
}

struct SolveArgs {
  std::string fasta;
  int l = 0, d = 0, q = 0;
  std::string algo = "sigma";
  int threads = 1;
  int chunk = 8;
  int subset = 0;
  bool no_string_reorder = false;
  bool no_pos_reorder = false;
  std::string truth;
  bool json = false;
  std::size_t max_listed = 10000;
  std::string alphabet = "dna";
};

int cmd_solve(const SolveArgs& a) {
  const qpms::Alphabet alphabet = alphabet_named(a.alphabet);
  auto seqs = qpms::parse_fasta(read_file(a.fasta), alphabet);
  const qpms::Instance inst = qpms::validate_instance(std::move(seqs), a.l, a.d, a.q, alphabet);

  qpms::SolverOptions opts;
  opts.algorithm = qpms::parse_algorithm(a.algo);
  opts.threads = a.threads;
  opts.chunk = a.chunk;
  opts.string_reordering = !a.no_string_reorder;
  opts.position_reordering = !a.no_pos_reorder;

  std::optional<qpms::GroundTruth> truth;
  if (!a.truth.empty()) truth = qpms::parse_ground_truth(read_file(a.truth), alphabet);

  const auto begin = std::chrono::steady_clock::now();
  const qpms::SolveResult result = a.subset > 0
                                       ? qpms::solve_subset_then_verify(inst, a.subset, opts)
                                       : qpms::solve(inst, opts);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - begin).count();

  if (a.json) {
    const auto report = qpms::make_report(inst, opts, result, secs,
                                          truth ? &*truth : nullptr, a.max_listed);
    std::cout << qpms::to_json(report, alphabet).dump(2) << '\n';
  } else {
    std::cout << qpms::format_motifs(result.motifs, alphabet);
    if (truth)
      std::cerr << "recovered=" << (result.motifs.contains(truth->motif) ? "true" : "false")
                << '\n';
  }
  return kExitOk;
}

struct GenerateArgs {
  qpms::FmParams params;
  std::string out;
  std::string alphabet = "dna";
};

int cmd_generate(GenerateArgs a) {
  a.params.alphabet = alphabet_named(a.alphabet);
  const qpms::PlantedInstance p = qpms::generate_fm(a.params);
  write_file(a.out + ".fasta", qpms::write_fasta(p.instance.sequences, p.instance.alphabet));
  write_file(a.out + ".truth", qpms::write_ground_truth(p.truth, p.instance.alphabet));
  return kExitOk;
}

struct BenchArgs {
  std::string suite = "challenging";
  int q = 20;
  std::string algos = "sigma,traver";
  double timeout = 3600;
  std::string seeds = "1";
  int threads = 1;
  std::string tsv;
};

int cmd_bench(const BenchArgs& a) {
  qpms::BenchConfig config;
  if (a.suite == "moderate")
    config.cases = {{9, 2}, {11, 3}};
  else
    config.cases = qpms::challenging_suite();
  config.q = a.q;
  config.timeout_seconds = a.timeout;
  config.threads = a.threads;
  config.algorithms.clear();
  std::stringstream ss(a.algos);
  std::string name;
  while (std::getline(ss, name, ',')) config.algorithms.push_back(qpms::parse_algorithm(name));
  config.seeds.clear();
  for (int s : parse_csv_ints(a.seeds)) config.seeds.push_back(static_cast<std::uint64_t>(s));

  const auto rows = qpms::run_bench(config);
  const std::string tsv = qpms::bench_tsv(rows);
  if (!a.tsv.empty()) write_file(a.tsv, tsv);
  std::cout << tsv << '\n' << qpms::bench_table(rows);
  return kExitOk;
}

struct ScoreArgs {
  std::string fasta;
  int l = 0;
  std::string starts;
  std::uint64_t budget = 10'000'000;
  std::string alphabet = "dna";
};

int cmd_score(const ScoreArgs& a) {
  const qpms::Alphabet alphabet = alphabet_named(a.alphabet);
  const auto seqs = qpms::parse_fasta(read_file(a.fasta), alphabet);
  qpms::StartVector starts;
  if (!a.starts.empty()) {
    starts.starts = parse_csv_ints(a.starts);
  } else {
    starts = qpms::best_starts(seqs, a.l, alphabet.size(), a.budget).starts;
  }
  const auto alignment = qpms::alignment_matrix(seqs, starts, a.l);
  const auto profile = qpms::profile_matrix(alignment, alphabet.size());

  std::cout << "starts:";
  for (int s : starts.starts) std::cout << ' ' << s;
  std::cout << "\nalignment:\n";
  for (const auto& row : alignment) std::cout << "  " << qpms::decode(row, alphabet) << '\n';
  std::cout << "profile:\n";
  for (int sym = 0; sym < profile.sigma(); ++sym) {
    std::cout << "  " << alphabet.symbol(static_cast<qpms::Code>(sym)) << ':';
    for (int j = 0; j < profile.length(); ++j) std::cout << ' ' << profile.count(sym, j);
    std::cout << '\n';
  }
  std::cout << "consensus: " << qpms::decode(qpms::consensus_string(profile), alphabet) << '\n'
            << "score: " << qpms::consensus_score(profile) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact quorum planted motif search"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Find every (l,d,q)-motif of a FASTA file");
  s->add_option("--fasta", solve.fasta, "Input sequences")->required();
  s->add_option("--l", solve.l, "Motif length")->required();
  s->add_option("--d", solve.d, "Maximum mismatches")->required();
  s->add_option("--q", solve.q, "Quorum")->required();
  s->add_option("--algo", solve.algo, "Solver")
      ->check(CLI::IsMember({"oracle", "prune", "qpms7", "traver", "sigma"}));
  s->add_option("--threads", solve.threads, "Worker threads")->check(CLI::PositiveNumber);
  s->add_option("--chunk", solve.chunk, "Root windows per work unit")
      ->check(CLI::PositiveNumber);
  s->add_option("--subset", solve.subset,
                "Solve the first K sequences, then verify against all");
  s->add_flag("--no-string-reorder", solve.no_string_reorder);
  s->add_flag("--no-pos-reorder", solve.no_pos_reorder);
  s->add_option("--truth", solve.truth, "Ground-truth sidecar from `generate`");
  s->add_flag("--json", solve.json, "Print a JSON run report");
  s->add_option("--max-listed", solve.max_listed, "Elide motif list above this count");
  s->add_option("--alphabet", solve.alphabet)->check(CLI::IsMember({"dna", "protein"}));

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "Write an FM-model planted instance");
  g->add_option("--n", gen.params.n);
  g->add_option("--m", gen.params.m);
  g->add_option("--l", gen.params.l);
  g->add_option("--d", gen.params.d);
  g->add_option("--q", gen.params.q);
  g->add_option("--seed", gen.params.seed);
  g->add_option("--out", gen.out, "Output prefix")->required();
  g->add_flag("--random-plants", gen.params.random_selection,
              "Plant into q random sequences instead of the first q");
  g->add_option("--alphabet", gen.alphabet)->check(CLI::IsMember({"dna", "protein"}));

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "Time solvers on generated instances");
  b->add_option("--suite", bench.suite)->check(CLI::IsMember({"challenging", "moderate"}));
  b->add_option("--q", bench.q)->check(CLI::IsMember({10, 20}));
  b->add_option("--algos", bench.algos, "Comma-separated solver names");
  b->add_option("--timeout", bench.timeout, "Seconds per run");
  b->add_option("--seeds", bench.seeds, "Comma-separated seeds");
  b->add_option("--threads", bench.threads)->check(CLI::PositiveNumber);
  b->add_option("--tsv", bench.tsv, "Also write the rows to this file");

  ScoreArgs score;
  auto* c = app.add_subcommand("score", "Consensus score of an alignment");
  c->add_option("--fasta", score.fasta)->required();
  c->add_option("--l", score.l)->required();
  c->add_option("--starts", score.starts, "1-based starts, comma-separated");
  c->add_option("--budget", score.budget, "Start vectors to try without --starts");
  c->add_option("--alphabet", score.alphabet)->check(CLI::IsMember({"dna", "protein"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadParams;
  }

  try {
    if (*s) return cmd_solve(solve);
    if (*g) return cmd_generate(gen);
    if (*b) return cmd_bench(bench);
    if (*c) return cmd_score(score);
  } catch (const qpms::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const qpms::BadParams& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadParams;
  } catch (const qpms::BadStart& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadParams;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitOk;
}
