#include "qpms/datagen.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qpms {

std::uint64_t StableRng::below(std::uint64_t bound) {
  if (bound == 0) throw BadParams("StableRng::below(0)");
  // reject the low remainder so every residue is equally likely
  const std::uint64_t threshold = (0 - bound) % bound;
  std::uint64_t x = engine_();
  while (x < threshold) x = engine_();
  return x % bound;
}

PlantedInstance generate_fm(const FmParams& p) {
  if (p.n < 2 || p.l < 1 || p.m < p.l || p.d < 0 || p.d > p.l || p.q < 1 || p.q > p.n)
    throw BadParams("generate_fm: need n >= 2, 1 <= l <= m, 0 <= d <= l, 1 <= q <= n");
  const int sigma = p.alphabet.size();
  StableRng rng(p.seed);

  std::vector<Sequence> seqs(p.n);
  for (int i = 0; i < p.n; ++i) {
    seqs[i].id = "seq" + std::to_string(i);
    seqs[i].codes.resize(p.m);
    for (auto& c : seqs[i].codes) c = static_cast<Code>(rng.below(sigma));
  }

  std::vector<Code> motif(p.l);
  for (auto& c : motif) c = static_cast<Code>(rng.below(sigma));

  std::vector<int> planted(p.n);
  std::iota(planted.begin(), planted.end(), 0);
  if (p.random_selection) {
    for (int k = 0; k < p.q; ++k)
      std::swap(planted[k], planted[k + rng.below(p.n - k)]);
  }
  planted.resize(p.q);
  std::sort(planted.begin(), planted.end());

  GroundTruth truth;
  truth.motif = Lmer(motif);
  truth.l = p.l;
  truth.d = p.d;
  truth.q = p.q;
  std::vector<int> positions(p.l);
  for (int i : planted) {
    std::vector<Code> inst = motif;
    std::iota(positions.begin(), positions.end(), 0);
    for (int k = 0; k < p.d; ++k) {
      std::swap(positions[k], positions[k + rng.below(p.l - k)]);
      const int pos = positions[k];
      const auto r = static_cast<Code>(rng.below(sigma - 1));
      inst[pos] = r < motif[pos] ? r : static_cast<Code>(r + 1);
    }
    const int start = static_cast<int>(rng.below(p.m - p.l + 1));
    std::copy(inst.begin(), inst.end(), seqs[i].codes.begin() + start);
    truth.plants.push_back(PlantedOccurrence{i, start, Lmer(std::move(inst))});
  }

  PlantedInstance out;
  out.instance = validate_instance(std::move(seqs), p.l, p.d, p.q, p.alphabet);
  out.truth = std::move(truth);
  return out;
}

std::string write_fasta(std::span<const Sequence> seqs, const Alphabet& alphabet) {
  constexpr std::size_t kWidth = 70;
  std::string out;
  for (std::size_t i = 0; i < seqs.size(); ++i) {
    out += '>';
    out += seqs[i].id.empty() ? "seq" + std::to_string(i) : seqs[i].id;
    out += '\n';
    const std::string text = decode(seqs[i].codes, alphabet);
    for (std::size_t pos = 0; pos < text.size(); pos += kWidth) {
      out.append(text, pos, kWidth);
      out += '\n';
    }
  }
  return out;
}

std::string write_ground_truth(const GroundTruth& truth, const Alphabet& alphabet) {
  std::ostringstream os;
  os << "#motif " << decode(truth.motif, alphabet) << " l=" << truth.l
     << " d=" << truth.d << " q=" << truth.q << '\n';
  for (const auto& p : truth.plants)
    os << "seq=" << p.sequence + 1 << " pos=" << p.start + 1
       << " inst=" << decode(p.instance, alphabet) << '\n';
  return os.str();
}

namespace {

std::string field(std::istringstream& is, const std::string& key) {
  std::string token;
  if (!(is >> token) || token.rfind(key + "=", 0) != 0)
    throw BadParams("ground truth: expected '" + key + "=' field");
  return token.substr(key.size() + 1);
}

int int_field(std::istringstream& is, const std::string& key) {
  const std::string v = field(is, key);
  try {
    std::size_t used = 0;
    const int x = std::stoi(v, &used);
    if (used != v.size()) throw BadParams("");
    return x;
  } catch (const std::exception&) {
    throw BadParams("ground truth: '" + key + "' is not an integer");
  }
}

}  // namespace

GroundTruth parse_ground_truth(std::string_view text, const Alphabet& alphabet) {
  std::istringstream lines{std::string(text)};
  std::string line;
  GroundTruth truth;
  bool header = false;
  while (std::getline(lines, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream is(line);
    if (!header) {
      std::string tag, motif;
      if (!(is >> tag >> motif) || tag != "#motif")
        throw BadParams("ground truth: first line must start with '#motif'");
      truth.motif = encode_lmer(motif, alphabet);
      truth.l = int_field(is, "l");
      truth.d = int_field(is, "d");
      truth.q = int_field(is, "q");
      header = true;
      continue;
    }
    PlantedOccurrence p;
    p.sequence = int_field(is, "seq") - 1;
    p.start = int_field(is, "pos") - 1;
    p.instance = encode_lmer(field(is, "inst"), alphabet);
    truth.plants.push_back(std::move(p));
  }
  if (!header) throw BadParams("ground truth: empty file");
  return truth;
}

}  // namespace qpms
