#include "qpms/model.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

namespace qpms {

Alphabet::Alphabet(std::string symbols) : symbols_(std::move(symbols)) {
  if (symbols_.size() < 2) throw BadParams("alphabet needs at least 2 symbols");
  lookup_.fill(-1);
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    auto c = static_cast<unsigned char>(
        std::toupper(static_cast<unsigned char>(symbols_[i])));
    symbols_[i] = static_cast<char>(c);
    if (lookup_[c] != -1) throw BadParams("duplicate alphabet symbol");
    lookup_[c] = static_cast<int>(i);
    lookup_[static_cast<unsigned char>(std::tolower(c))] = static_cast<int>(i);
  }
  bits_ = static_cast<int>(std::bit_width(symbols_.size() - 1));
}

Alphabet Alphabet::dna() { return Alphabet("ACGT"); }

Alphabet Alphabet::protein() { return Alphabet("ACDEFGHIKLMNPQRSTVWY"); }

bool MotifSet::contains(const Lmer& x) const {
  auto it = std::lower_bound(
      motifs.begin(), motifs.end(), x,
      [](const Motif& a, const Lmer& b) { return a.lmer < b; });
  return it != motifs.end() && it->lmer == x;
}

void canonicalize(std::vector<Motif>& motifs) {
  std::stable_sort(motifs.begin(), motifs.end(),
                   [](const Motif& a, const Motif& b) { return a.lmer < b.lmer; });
  motifs.erase(std::unique(motifs.begin(), motifs.end(),
                           [](const Motif& a, const Motif& b) {
                             return a.lmer == b.lmer;
                           }),
               motifs.end());
}

Sequence encode_sequence(std::string_view text, const Alphabet& alphabet) {
  if (text.empty()) throw BadParams("empty sequence");
  Sequence seq;
  seq.codes.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    int code = alphabet.code_of(text[i]);
    if (code < 0) throw UnknownSymbol(i, text[i]);
    seq.codes.push_back(static_cast<Code>(code));
  }
  return seq;
}

Lmer encode_lmer(std::string_view text, const Alphabet& alphabet) {
  return Lmer(std::move(encode_sequence(text, alphabet).codes));
}

std::string decode(std::span<const Code> codes, const Alphabet& alphabet) {
  std::string out;
  out.reserve(codes.size());
  for (Code c : codes) out.push_back(alphabet.symbol(c));
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

}  // namespace

std::vector<Sequence> parse_fasta(std::string_view text,
                                  const Alphabet& alphabet) {
  std::vector<Sequence> out;
  std::vector<std::string> bodies;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    if (line.empty()) continue;
    if (line.front() == '>') {
      out.emplace_back();
      out.back().id = std::string(trim(line.substr(1)));
      bodies.emplace_back();
    } else {
      if (out.empty()) throw MalformedFasta("sequence data before first '>' header");
      bodies.back().append(line);
    }
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (bodies[i].empty())
      throw MalformedFasta("record '" + out[i].id + "' has no sequence");
    out[i].codes = encode_sequence(bodies[i], alphabet).codes;
  }
  return out;
}

Instance validate_instance(std::vector<Sequence> sequences, int l, int d, int q,
                           const Alphabet& alphabet) {
  const int n = static_cast<int>(sequences.size());
  if (n < 2) throw BadParams("need at least 2 sequences (n=" + std::to_string(n) + ")");
  const std::size_t m = sequences.front().size();
  for (const auto& s : sequences) {
    if (s.size() != m) throw BadParams("sequences have unequal lengths");
    if (s.size() == 0) throw BadParams("empty sequence");
    for (Code c : s.codes)
      if (c >= alphabet.size()) throw BadParams("symbol code out of alphabet range");
  }
  if (l < 1) throw BadParams("l must be >= 1");
  if (static_cast<std::size_t>(l) > m)
    throw BadParams("l > m (" + std::to_string(l) + " > " + std::to_string(m) + ")");
  if (d < 0) throw BadParams("d must be >= 0");
  if (d > l) throw BadParams("d > l");
  if (q < 1) throw BadParams("q must be >= 1");
  if (q > n) throw BadParams("q > n (" + std::to_string(q) + " > " + std::to_string(n) + ")");
  Instance inst;
  inst.alphabet = alphabet;
  inst.sequences = std::move(sequences);
  inst.l = l;
  inst.d = d;
  inst.q = q;
  return inst;
}

}  // namespace qpms
