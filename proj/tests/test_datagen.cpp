#include <doctest.h>

#include "oracles.hpp"
#include "qpms/bitpack.hpp"
#include "qpms/datagen.hpp"
#include "qpms/error.hpp"
#include "qpms/solvers.hpp"

using namespace qpms;

namespace {

const Alphabet kDna = Alphabet::dna();

}  // namespace

TEST_CASE("StableRng is reproducible and in range") {
  StableRng a(7), b(7);
  for (int i = 0; i < 1000; ++i) {
    const auto x = a.below(13);
    CHECK(x == b.below(13));
    CHECK(x < 13u);
  }
  // The engine's 10000th output from the default seed is fixed by the standard.
  std::mt19937_64 engine;
  engine.discard(9999);
  CHECK(engine() == 9981545732273789042ull);
  // Frozen first draws.
  StableRng c(1);
  for (std::uint64_t v : {0, 2, 2, 2, 0, 1, 0, 1}) CHECK(c.below(4) == v);
  StableRng d(42);
  for (std::uint64_t v : {120406, 494824, 741450, 155662}) CHECK(d.below(1000000) == v);
  CHECK_THROWS_AS(d.below(0), BadParams);
}

TEST_CASE("generate_fm default shape") {
  const auto p = generate_fm(FmParams{});
  CHECK(p.instance.n() == 20);
  CHECK(p.instance.m() == 600);
  CHECK(p.instance.l == 13);
  CHECK(p.instance.d == 4);
  CHECK(p.instance.q == 20);
  CHECK(p.truth.plants.size() == 20);
}

TEST_CASE("every plant sits verbatim at exactly distance d") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    FmParams params;
    params.seed = seed;
    params.n = 6 + static_cast<int>(seed % 5);
    params.m = 40 + static_cast<int>(seed);
    params.l = 5 + static_cast<int>(seed % 8);
    params.d = static_cast<int>(seed % 4);
    params.q = params.n - static_cast<int>(seed % 3);
    params.random_selection = seed % 2 == 0;
    if (seed % 7 == 0) params.alphabet = Alphabet::protein();
    const auto p = generate_fm(params);
    CHECK(p.truth.plants.size() == static_cast<std::size_t>(params.q));
    for (const auto& plant : p.truth.plants) {
      CHECK(hamming_naive(plant.instance, p.truth.motif) == params.d);
      const auto& seq = p.instance.sequences[plant.sequence];
      CHECK(Lmer(seq.window(plant.start, params.l)) == plant.instance);
    }
    CHECK(verify_motif(p.instance, p.truth.motif).support >= params.q);
    if (!params.random_selection)
      for (int i = 0; i < params.q; ++i) CHECK(p.truth.plants[i].sequence == i);
  }
}

TEST_CASE("d = 0 plants the motif verbatim") {
  FmParams params;
  params.n = 8;
  params.m = 60;
  params.l = 7;
  params.d = 0;
  params.q = 8;
  const auto p = generate_fm(params);
  for (const auto& plant : p.truth.plants) CHECK(plant.instance == p.truth.motif);
  CHECK(solve(p.instance).motifs.contains(p.truth.motif));
}

TEST_CASE("generation is deterministic per seed") {
  FmParams params;
  params.seed = 99;
  const auto a = generate_fm(params);
  const auto b = generate_fm(params);
  CHECK(write_fasta(a.instance.sequences, kDna) == write_fasta(b.instance.sequences, kDna));
  CHECK(write_ground_truth(a.truth, kDna) == write_ground_truth(b.truth, kDna));
  params.seed = 100;
  CHECK(write_fasta(generate_fm(params).instance.sequences, kDna) !=
        write_fasta(a.instance.sequences, kDna));
}

TEST_CASE("generate_fm rejects bad parameters") {
  FmParams params;
  params.q = 21;
  CHECK_THROWS_AS(generate_fm(params), BadParams);
  params = FmParams{};
  params.l = 601;
  CHECK_THROWS_AS(generate_fm(params), BadParams);
}

TEST_CASE("write_fasta") {
  CHECK(write_fasta({}, kDna).empty());
  std::vector<Sequence> one{encode_sequence("ACGT", kDna)};
  CHECK(write_fasta(one, kDna) == ">seq0\nACGT\n");
  std::vector<Sequence> longer{encode_sequence(std::string(150, 'G'), kDna)};
  longer[0].id = "g";
  CHECK(write_fasta(longer, kDna) ==
        ">g\n" + std::string(70, 'G') + "\n" + std::string(70, 'G') + "\n" +
            std::string(10, 'G') + "\n");

  StableRng rng(51);
  for (int i = 0; i < 100; ++i) {
    const int n = 1 + static_cast<int>(rng.below(5));
    auto seqs = oracle::random_sequences(rng, n, 1 + static_cast<int>(rng.below(200)), 4);
    for (int k = 0; k < n; ++k) seqs[k].id = "r" + std::to_string(k);
    CHECK(parse_fasta(write_fasta(seqs, kDna)) == seqs);
  }
}

TEST_CASE("ground truth sidecar round-trips") {
  FmParams params;
  params.n = 5;
  params.m = 30;
  params.l = 6;
  params.d = 1;
  params.q = 4;
  const auto p = generate_fm(params);
  const auto text = write_ground_truth(p.truth, kDna);
  CHECK(text.rfind("#motif " + decode(p.truth.motif, kDna) + " l=6 d=1 q=4\n", 0) == 0);
  CHECK(text.find("seq=1 pos=" + std::to_string(p.truth.plants[0].start + 1) + " inst=") !=
        std::string::npos);
  const auto back = parse_ground_truth(text, kDna);
  CHECK(back == p.truth);
  int support = 0;
  for (const auto& plant : back.plants)
    if (oracle::min_window_distance(oracle::Codes(back.motif.begin(), back.motif.end()),
                                    p.instance.sequences[plant.sequence]) <= back.d)
      ++support;
  CHECK(support >= back.q);
  CHECK_THROWS(parse_ground_truth("seq=1 pos=1 inst=A\n", kDna));
}
