#include "eqcm/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>
#include <unordered_set>

#include "eqcm/rng.hpp"
#include "eqcm/text.hpp"

namespace eqcm {

WordList load_word_list(const std::filesystem::path& path, std::size_t length,
                        const Alphabet& alphabet, std::string source_tag,
                        LoadStats* stats) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open word list: " + path.string());
  }
  LoadStats local;
  LoadStats& s = stats ? *stats : local;

  WordList list{{}, std::move(source_tag), alphabet};
  std::unordered_set<std::string> seen;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    ++s.lines;
    std::u32string word = compose_accents(decode_utf8(line));
    if (word.find(U'-') != std::u32string::npos ||
        word.find(U'\'') != std::u32string::npos) {
      ++s.hyphen_or_apostrophe;
      continue;
    }
    if (word.size() != length) {
      ++s.wrong_length;
      continue;
    }
    if (!is_lowercase(word.front())) {
      ++s.uppercase_initial;
      continue;
    }
    const bool in_alphabet =
        std::all_of(word.begin(), word.end(), [&](char32_t cp) { return alphabet.contains(cp); });
    if (!in_alphabet) {
      ++s.out_of_alphabet;
      continue;
    }
    std::string utf8 = encode_utf8(word);
    if (!seen.insert(utf8).second) {
      ++s.duplicates;
      continue;
    }
    list.words.push_back(std::move(utf8));
    ++s.kept;
  }
  return list;
}

WordList generate_random_strings(std::size_t n, std::size_t length, std::uint64_t seed) {
  const Alphabet& az = Alphabet::latin26();
  RandomSource rng(seed);
  WordList list{{}, "random", az};
  list.words.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::string w;
    w.reserve(length);
    for (std::size_t k = 0; k < length; ++k) {
      w.push_back(static_cast<char>('a' + rng.uniform_below(26)));
    }
    list.words.push_back(std::move(w));
  }
  return list;
}

namespace {

/// Draws `count` distinct indices from `pool` (skipping `excluded`
/// words) by a partial Fisher-Yates shuffle on the eligible indices.
std::vector<std::string> sample_words(const WordList& pool, std::size_t count,
                                      const std::unordered_set<std::string>& excluded,
                                      RandomSource& rng, const std::string& class_name) {
  std::vector<const std::string*> eligible;
  eligible.reserve(pool.words.size());
  for (const auto& w : pool.words) {
    if (!excluded.count(w)) eligible.push_back(&w);
  }
  if (eligible.size() < count) {
    throw std::runtime_error("insufficient words for class '" + class_name + "': need " +
                             std::to_string(count) + ", pool has " +
                             std::to_string(eligible.size()));
  }
  std::vector<std::string> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + rng.uniform_below(eligible.size() - i);
    std::swap(eligible[i], eligible[j]);
    out.push_back(*eligible[i]);
  }
  return out;
}

}  // namespace

LabeledDataset build_dataset(const WordList& pos, const WordList& neg,
                             std::size_t n_train_per_class, std::size_t n_test_per_class,
                             double t_plus, double t_minus, std::uint64_t seed) {
  const std::size_t per_class = n_train_per_class + n_test_per_class;
  RandomSource rng(seed);

  std::unordered_set<std::string> none;
  std::vector<std::string> pos_words =
      sample_words(pos, per_class, none, rng, pos.source_tag);
  std::unordered_set<std::string> taken(pos_words.begin(), pos_words.end());
  std::vector<std::string> neg_words =
      sample_words(neg, per_class, taken, rng, neg.source_tag);

  LabeledDataset ds{{}, {}, t_plus, t_minus, seed};
  ds.train.reserve(2 * n_train_per_class);
  ds.test.reserve(2 * n_test_per_class);
  for (std::size_t i = 0; i < n_train_per_class; ++i) ds.train.push_back({pos_words[i], t_plus});
  for (std::size_t i = 0; i < n_train_per_class; ++i) ds.train.push_back({neg_words[i], t_minus});
  for (std::size_t i = n_train_per_class; i < per_class; ++i) ds.test.push_back({pos_words[i], t_plus});
  for (std::size_t i = n_train_per_class; i < per_class; ++i) ds.test.push_back({neg_words[i], t_minus});
  return ds;
}

}  // namespace eqcm
