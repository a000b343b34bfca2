#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "eqcm/alphabet.hpp"
#include "eqcm/corpus.hpp"

namespace eqcm {

/// Orthographic-variant aggregation applied before frequency ranking,
/// e.g. {ò->o, à->a}. Variants are binned with their canonical symbol.
using AggregationMap = std::map<char32_t, char32_t>;

/// The aggregation used for the Italian-calibrated encoding: accented
/// o and a are merged with their bases; accented i and e are not.
AggregationMap default_italian_aggregation();

/// Splits a word into its symbols, preserving order. Throws when a
/// symbol is outside the alphabet, naming the offending symbol.
std::u32string tokenize(const std::string& word, const Alphabet& alphabet);

struct EncodedInput {
  std::vector<double> z;   // components in {-delta, +delta}
  double delta;
  std::string encoder_id;  // provenance of the partition that produced z
};

/// Consonants map to +delta, vowels to -delta.
EncodedInput consonant_vowel_encode(const std::u32string& tokens,
                                    const std::u32string& vowels, double delta);

struct FrequencyTable {
  /// (symbol, probability), descending probability; ties in the counts
  /// are broken by alphabet order. Probabilities sum to 1.
  std::vector<std::pair<char32_t, double>> probs;
  std::uint64_t total_count = 0;

  double prob(char32_t symbol) const;
};

/// Counts every token occurrence over the list, mapping variants onto
/// their canonical symbol first, then normalizes.
FrequencyTable symbol_frequencies(const WordList& words, const AggregationMap& aggregation);

/// -sum p ln p in nats, with 0 ln 0 := 0.
double shannon_entropy(const FrequencyTable& freq);

enum class BinProvenanceKind { ConsonantVowel, MaxEntropy };

struct BinPartition {
  std::u32string frequent;  // A_f, in alphabet order
  std::u32string rare;      // A_r, in alphabet order
  double p_frequent = 0.0;  // empirical mass of A_f at the fitted split
  BinProvenanceKind kind = BinProvenanceKind::MaxEntropy;
  std::string reference_label;     // class the frequencies were fitted on
  std::uint64_t fit_seed = 0;      // split seed of the fitting subset
  AggregationMap aggregation;

  bool is_frequent(char32_t symbol) const;
  std::string describe() const;
};

/// Partition with the vowels as the frequent bin; p_frequent is left 0
/// (no frequencies involved).
BinPartition consonant_vowel_partition(const Alphabet& alphabet, const std::u32string& vowels);

/// Fits the two-bin maximum-entropy partition on a label-homogeneous
/// word list: symbols are ranked by descending aggregated frequency and
/// the prefix whose cumulative probability is closest to 1/2 becomes
/// A_f (the first such prefix on ties). Aggregated variants follow
/// their canonical symbol; alphabet symbols unseen in the list land in
/// A_r.
BinPartition fit_max_entropy_bins(const WordList& words, const AggregationMap& aggregation);

/// Rare symbols map to +delta, frequent ones to -delta.
EncodedInput bin_encode(const std::u32string& tokens, const BinPartition& partition,
                        double delta);

}  // namespace eqcm
