#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "eqcm/alphabet.hpp"

namespace eqcm {

struct WordList {
  std::vector<std::string> words;  // UTF-8, NFC-composed
  std::string source_tag;
  Alphabet alphabet;
};

/// Per-filter counters reported by load_word_list. Words containing
/// symbols outside the alphabet are skipped and counted, not an error.
struct LoadStats {
  std::size_t lines = 0;
  std::size_t kept = 0;
  std::size_t wrong_length = 0;
  std::size_t hyphen_or_apostrophe = 0;
  std::size_t uppercase_initial = 0;
  std::size_t out_of_alphabet = 0;
  std::size_t duplicates = 0;
};

/// Loads a one-word-per-line UTF-8 file and keeps the words that pass
/// all filters: exactly `length` symbols, no hyphen or apostrophe,
/// lowercase initial, all symbols in `alphabet`. File order is
/// preserved; duplicates keep the first occurrence.
WordList load_word_list(const std::filesystem::path& path, std::size_t length,
                        const Alphabet& alphabet, std::string source_tag,
                        LoadStats* stats = nullptr);

/// n strings of i.i.d. symbols uniform over a-z. Deterministic in
/// (n, length, seed).
WordList generate_random_strings(std::size_t n, std::size_t length, std::uint64_t seed);

struct LabeledSample {
  std::string word;
  double target;
};

struct LabeledDataset {
  std::vector<LabeledSample> train;
  std::vector<LabeledSample> test;
  double t_plus;
  double t_minus;
  std::uint64_t seed;
};

/// Samples class-balanced train/test splits without replacement,
/// deterministically in the seed. The positive pool is sampled first;
/// words drawn there are excluded from the negative pool so no word can
/// appear in both splits. Throws when a pool is too small, naming the
/// deficient class.
LabeledDataset build_dataset(const WordList& pos, const WordList& neg,
                             std::size_t n_train_per_class, std::size_t n_test_per_class,
                             double t_plus, double t_minus, std::uint64_t seed);

}  // namespace eqcm
