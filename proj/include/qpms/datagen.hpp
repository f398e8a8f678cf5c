#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qpms/model.hpp"

namespace qpms {

/// Seeded generator with platform-independent output: std::mt19937_64 (whose
/// sequence the standard fixes) plus an unbiased bounded draw.
class StableRng {
 public:
  explicit StableRng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

struct PlantedOccurrence {
  int sequence = 0;  // 0-based
  int start = 0;     // 0-based
  Lmer instance;
  bool operator==(const PlantedOccurrence&) const = default;
};

struct GroundTruth {
  Lmer motif;
  int l = 0;
  int d = 0;
  int q = 0;
  std::vector<PlantedOccurrence> plants;
  bool operator==(const GroundTruth&) const = default;
};

struct PlantedInstance {
  Instance instance;
  GroundTruth truth;
};

struct FmParams {
  int n = 20;
  int m = 600;
  int l = 13;
  int d = 4;
  int q = 20;
  std::uint64_t seed = 1;
  Alphabet alphabet = Alphabet::dna();
  // Plant into q randomly chosen sequences instead of the first q.
  bool random_selection = false;
};

/// FM-model instance: uniform background, one uniform motif, and in each
/// planted sequence a copy with exactly d positions changed.
PlantedInstance generate_fm(const FmParams& params);

/// FASTA with 70-column lines; records without an id are named seq<i>.
std::string write_fasta(std::span<const Sequence> seqs, const Alphabet& alphabet);

/// `#motif <string> l=<l> d=<d> q=<q>` then `seq=<i> pos=<p> inst=<string>`
/// per plant, 1-based.
std::string write_ground_truth(const GroundTruth& truth, const Alphabet& alphabet);
GroundTruth parse_ground_truth(std::string_view text, const Alphabet& alphabet);

}  // namespace qpms
