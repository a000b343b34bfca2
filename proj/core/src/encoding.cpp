#include "eqcm/encoding.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "eqcm/text.hpp"

namespace eqcm {

AggregationMap default_italian_aggregation() {
  return {{U'ò', U'o'}, {U'à', U'a'}};
}

std::u32string tokenize(const std::string& word, const Alphabet& alphabet) {
  if (word.empty()) throw std::invalid_argument("tokenize: empty word");
  std::u32string tokens = decode_utf8(word);
  for (char32_t cp : tokens) {
    if (!alphabet.contains(cp)) {
      throw std::invalid_argument("tokenize: symbol '" + encode_utf8(cp) +
                                  "' in word '" + word + "' is outside the alphabet");
    }
  }
  return tokens;
}

namespace {

void check_delta(double delta) {
  if (!(delta > 0.0) || delta > 1.0) {
    throw std::invalid_argument("delta must lie in (0, 1]");
  }
}

}  // namespace

EncodedInput consonant_vowel_encode(const std::u32string& tokens,
                                    const std::u32string& vowels, double delta) {
  check_delta(delta);
  std::unordered_set<char32_t> vowel_set(vowels.begin(), vowels.end());
  EncodedInput out{{}, delta, "consonant_vowel"};
  out.z.reserve(tokens.size());
  for (char32_t cp : tokens) {
    out.z.push_back(vowel_set.count(cp) ? -delta : +delta);
  }
  return out;
}

double FrequencyTable::prob(char32_t symbol) const {
  for (const auto& [s, p] : probs) {
    if (s == symbol) return p;
  }
  return 0.0;
}

FrequencyTable symbol_frequencies(const WordList& words, const AggregationMap& aggregation) {
  if (words.words.empty()) {
    throw std::invalid_argument("symbol_frequencies: empty word list");
  }
  std::unordered_map<char32_t, std::uint64_t> counts;
  std::uint64_t total = 0;
  for (const auto& w : words.words) {
    for (char32_t cp : tokenize(w, words.alphabet)) {
      auto it = aggregation.find(cp);
      counts[it == aggregation.end() ? cp : it->second] += 1;
      ++total;
    }
  }
  FrequencyTable table;
  table.total_count = total;
  table.probs.reserve(counts.size());
  for (const auto& [s, c] : counts) {
    table.probs.emplace_back(s, static_cast<double>(c) / static_cast<double>(total));
  }
  const Alphabet& alphabet = words.alphabet;
  std::sort(table.probs.begin(), table.probs.end(),
            [&](const auto& a, const auto& b) {
              if (a.second != b.second) return a.second > b.second;
              return alphabet.index_of(a.first) < alphabet.index_of(b.first);
            });
  return table;
}

double shannon_entropy(const FrequencyTable& freq) {
  double h = 0.0;
  for (const auto& [s, p] : freq.probs) {
    if (p > 0.0) h -= p * std::log(p);
  }
  return h;
}

bool BinPartition::is_frequent(char32_t symbol) const {
  return frequent.find(symbol) != std::u32string::npos;
}

std::string BinPartition::describe() const {
  if (kind == BinProvenanceKind::ConsonantVowel) return "consonant_vowel";
  std::string s = "max_entropy(label=" + reference_label +
                  ",seed=" + std::to_string(fit_seed) + ",aggregation={";
  bool first = true;
  for (const auto& [v, c] : aggregation) {
    if (!first) s += ",";
    s += encode_utf8(v) + "->" + encode_utf8(c);
    first = false;
  }
  return s + "})";
}

namespace {

/// Keeps `members` of `alphabet` in alphabet order.
std::u32string in_alphabet_order(const Alphabet& alphabet,
                                 const std::unordered_set<char32_t>& members) {
  std::u32string out;
  for (char32_t cp : alphabet.symbols()) {
    if (members.count(cp)) out.push_back(cp);
  }
  return out;
}

}  // namespace

BinPartition consonant_vowel_partition(const Alphabet& alphabet, const std::u32string& vowels) {
  std::unordered_set<char32_t> vowel_set(vowels.begin(), vowels.end());
  BinPartition p;
  p.kind = BinProvenanceKind::ConsonantVowel;
  std::unordered_set<char32_t> rare_set;
  for (char32_t cp : alphabet.symbols()) {
    if (!vowel_set.count(cp)) rare_set.insert(cp);
  }
  p.frequent = in_alphabet_order(alphabet, vowel_set);
  p.rare = in_alphabet_order(alphabet, rare_set);
  return p;
}

BinPartition fit_max_entropy_bins(const WordList& words, const AggregationMap& aggregation) {
  FrequencyTable table = symbol_frequencies(words, aggregation);

  // Exhaustive scan over the prefix splits of the descending-frequency
  // ranking; the first prefix minimizing |cum - 1/2| wins.
  std::size_t best_k = 1;
  double best_dist = 2.0;
  double best_cum = 0.0;
  double cum = 0.0;
  for (std::size_t k = 1; k <= table.probs.size(); ++k) {
    cum += table.probs[k - 1].second;
    const double dist = std::abs(cum - 0.5);
    if (dist < best_dist) {
      best_dist = dist;
      best_k = k;
      best_cum = cum;
    }
  }

  std::unordered_set<char32_t> frequent_canonicals;
  for (std::size_t k = 0; k < best_k; ++k) frequent_canonicals.insert(table.probs[k].first);

  // Full-alphabet partition: a symbol is frequent when its canonical
  // form made the prefix. Unseen symbols have no ranking entry and thus
  // fall into the rare bin.
  const Alphabet& alphabet = words.alphabet;
  std::unordered_set<char32_t> frequent_set;
  std::unordered_set<char32_t> rare_set;
  for (char32_t cp : alphabet.symbols()) {
    auto it = aggregation.find(cp);
    const char32_t canonical = it == aggregation.end() ? cp : it->second;
    if (frequent_canonicals.count(canonical)) {
      frequent_set.insert(cp);
    } else {
      rare_set.insert(cp);
    }
  }

  BinPartition p;
  p.kind = BinProvenanceKind::MaxEntropy;
  p.frequent = in_alphabet_order(alphabet, frequent_set);
  p.rare = in_alphabet_order(alphabet, rare_set);
  p.p_frequent = best_cum;
  p.reference_label = words.source_tag;
  p.aggregation = aggregation;
  return p;
}

EncodedInput bin_encode(const std::u32string& tokens, const BinPartition& partition,
                        double delta) {
  check_delta(delta);
  EncodedInput out{{}, delta, partition.describe()};
  out.z.reserve(tokens.size());
  for (char32_t cp : tokens) {
    if (!partition.is_frequent(cp) &&
        partition.rare.find(cp) == std::u32string::npos) {
      throw std::invalid_argument("bin_encode: symbol '" + encode_utf8(cp) +
                                  "' is not covered by the partition");
    }
    out.z.push_back(partition.is_frequent(cp) ? -delta : +delta);
  }
  return out;
}

}  // namespace eqcm
