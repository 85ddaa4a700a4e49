#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "preftriads/error.hpp"

namespace preftriads {

// A bijection on {0..n-1}, n >= 2.
//
// word()[k] is read two ways, depending on role:
//   - as a preference ordering: the alternative ranked k-th (rank 0 = most
//     preferred), so "ACB" is the word (0,2,1);
//   - as a relabeling map: the image of alternative k.
class Permutation {
 public:
  explicit Permutation(std::vector<std::uint32_t> word);

  static Permutation identity(std::size_t n);

  std::size_t size() const { return word_.size(); }
  std::uint32_t operator[](std::size_t k) const { return word_[k]; }
  const std::vector<std::uint32_t>& word() const { return word_; }

  Permutation inverse() const;

  // Smallest k >= 1 with p^k = identity: the lcm of the cycle lengths.
  std::uint64_t order() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b) {
    return a.word_ <=> b.word_;
  }

 private:
  std::vector<std::uint32_t> word_;
};

// result(k) = outer(inner(k)). Applying a relabeling map tau to an ordering
// sigma is compose(tau, sigma): every letter of the word is replaced by its
// image under tau.
Permutation compose(const Permutation& outer, const Permutation& inner);

// Number of discordant alternative pairs: 0 for equal orderings,
// n(n-1)/2 for reversed ones.
std::uint32_t kendall_tau_distance(const Permutation& a, const Permutation& b);

// The subsequence of p's word retaining only alternatives in `keep`,
// re-indexed to 0..|keep|-1 by ascending original index. The relative order
// of the kept alternatives is preserved.
Permutation restrict_ordering(const Permutation& p,
                              std::span<const std::uint32_t> keep);

// Display names for alternatives; indices are the math-facing identity.
class AlternativeAlphabet {
 public:
  explicit AlternativeAlphabet(std::vector<std::string> labels);

  // "A","B",... for n <= 26, then bijective base-26 ("AA","AB",...).
  static AlternativeAlphabet default_for(std::size_t n);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::uint32_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  bool single_char() const { return single_char_; }

  // ParseError naming the label if it is not part of the alphabet.
  std::uint32_t index_of(const std::string& label) const;

  friend bool operator==(const AlternativeAlphabet&,
                         const AlternativeAlphabet&);

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::uint32_t> index_;
  bool single_char_ = false;
};

// Text form of an ordering: concatenated single-character labels when every
// label has length 1 ("ACB"), otherwise ">"-separated
// ("Google>Youtube>Amazon"). parse_ordering accepts the ">"-separated form
// for single-character alphabets as well; force_delimited makes
// format_ordering emit it.
Permutation parse_ordering(const std::string& text,
                           const AlternativeAlphabet& alphabet);
std::string format_ordering(const Permutation& p,
                            const AlternativeAlphabet& alphabet,
                            bool force_delimited = false);

// All n! permutations on n elements in lexicographic word order.
std::vector<Permutation> all_permutations(std::size_t n);

// Lexicographic rank of p among all permutations of its size (Lehmer code).
std::uint64_t lex_rank(const Permutation& p);

}  // namespace preftriads
