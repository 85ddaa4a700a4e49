#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "preftriads/perm.hpp"

namespace preftriads {

// An ordered triple of preference orderings on the same alternative set, one
// per node of a triangle. Nodes keep their identity (the triple is ordered);
// equivalence is decided through canonical forms only.
class PreferenceTriad {
 public:
  PreferenceTriad(Permutation a, Permutation b, Permutation c);

  std::size_t alternative_count() const { return orderings_[0].size(); }
  const Permutation& ordering(std::size_t node) const {
    return orderings_.at(node);
  }
  const std::array<Permutation, 3>& orderings() const { return orderings_; }

  friend bool operator==(const PreferenceTriad&,
                         const PreferenceTriad&) = default;
  friend std::strong_ordering operator<=>(const PreferenceTriad& a,
                                          const PreferenceTriad& b);

 private:
  std::array<Permutation, 3> orderings_;
};

// Orbit representative under the triad equivalence: relabel the three nodes
// any way and apply one common relabeling of alternatives to all orderings.
// The representative has the identity as its first ordering and is the
// lexicographically minimal such orbit member. Only canonicalize() builds one.
class CanonicalTriad {
 public:
  const PreferenceTriad& triad() const { return triad_; }
  const Permutation& ordering(std::size_t node) const {
    return triad_.ordering(node);
  }

  friend bool operator==(const CanonicalTriad&,
                         const CanonicalTriad&) = default;
  friend std::strong_ordering operator<=>(const CanonicalTriad&,
                                          const CanonicalTriad&) = default;

 private:
  friend CanonicalTriad canonicalize(const PreferenceTriad&);
  explicit CanonicalTriad(PreferenceTriad t) : triad_(std::move(t)) {}
  PreferenceTriad triad_;
};

// For each choice of base node i, relabel all three orderings with the
// inverse of ordering i (which sends ordering i to the identity), then try
// both arrangements of the remaining two nodes; the result is the
// lexicographic minimum of the six candidates. Two triads are equivalent iff
// their canonical forms are equal.
CanonicalTriad canonicalize(const PreferenceTriad& t);

// Equivalence-invariant summary of a triad. No order on classes is implied.
struct ClassDescriptor {
  std::uint32_t identical_pairs;  // node pairs with equal orderings: 0, 1 or 3
  std::uint32_t shared_top;       // most nodes agreeing on the top alternative
  std::array<std::uint32_t, 3> pairwise_distances;  // sorted Kendall tau

  friend bool operator==(const ClassDescriptor&,
                         const ClassDescriptor&) = default;
};

ClassDescriptor describe_class(const PreferenceTriad& t);

// Mapping from canonical triads to class identifiers with orbit sizes.
// orbit_size_fixed counts orbit members whose first ordering is the identity
// (the (n!)^2-strong space); orbit_size_full counts members in the whole
// (n!)^3 space and is always n! times the fixed count.
struct ClassTable {
  struct Entry {
    CanonicalTriad canonical;
    std::uint32_t class_id;  // 1-based
    std::uint64_t orbit_size_fixed;
    std::uint64_t orbit_size_full;
  };

  std::size_t n = 0;
  std::vector<Entry> entries;  // sorted by class_id

  const Entry* find(const CanonicalTriad& c) const;
  const Entry& at_class(std::uint32_t class_id) const;

  // CSV columns: class_id,canonical_triad,orbit_size_36,orbit_size_216
  // (the column names quote the n = 3 space sizes; for other n the values
  // are the fixed-first-ordering and full orbit sizes).
  void write_csv(std::ostream& out) const;
};

// The table for 3 alternatives, with the reference 10-class numbering. Built
// once from the 36 fixed-first-ordering cases; construction throws
// std::logic_error if the grouping produced by canonicalize() ever disagrees
// with the pinned class membership.
const ClassTable& class_table3();

// Class identifier in 1..10 for a triad on exactly 3 alternatives.
// UnsupportedSizeError for other sizes; use canonicalize()/enumerate_classes()
// there.
std::uint32_t classify3(const PreferenceTriad& t);

// Case number in 1..36 for a triad (identity, s2, s3) on 3 alternatives:
// 6*(i-1)+j where i and j are the 1-based lexicographic ranks of s2 and s3.
// InvalidArgumentError unless n = 3 and the first ordering is the identity.
std::uint32_t case_number(const PreferenceTriad& t);

// Brute-force class enumeration: canonicalize every (identity, s, p) pair and
// collect distinct canonical forms with orbit sizes. Class ids are assigned
// in lexicographic order of the canonical form (for n = 3 the reference
// numbering of class_table3() differs). budget caps the number of pairs
// processed (0 = unlimited); exceeding it raises ResourceLimitError carrying
// the number of pairs done.
ClassTable enumerate_classes(std::size_t n, std::uint64_t budget = 0);

// Dense lookup helpers for censuses over 3 alternatives. Orderings are coded
// by lexicographic rank 0..5 (ABC, ACB, BAC, BCA, CAB, CBA).
std::uint8_t ordering_code(const Permutation& p);
const Permutation& ordering_from_code(std::uint8_t code);

// table[(a*6 + b)*6 + c] = class id of the triad with ordering codes a, b, c.
const std::array<std::uint8_t, 216>& dense_class_table3();

inline std::uint32_t classify3_codes(std::uint8_t a, std::uint8_t b,
                                     std::uint8_t c) {
  return dense_class_table3()[(a * 6 + b) * 6 + c];
}

}  // namespace preftriads
