#include "preftriads/triad.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <stdexcept>

namespace preftriads {

PreferenceTriad::PreferenceTriad(Permutation a, Permutation b, Permutation c)
    : orderings_{std::move(a), std::move(b), std::move(c)} {
  if (orderings_[0].size() != orderings_[1].size() ||
      orderings_[0].size() != orderings_[2].size()) {
    throw IncompatibleSizeError(
        "triad orderings must share one alternative set");
  }
}

std::strong_ordering operator<=>(const PreferenceTriad& a,
                                 const PreferenceTriad& b) {
  for (std::size_t i = 0; i < 3; ++i) {
    const auto cmp = a.orderings_[i] <=> b.orderings_[i];
    if (cmp != std::strong_ordering::equal) return cmp;
  }
  return std::strong_ordering::equal;
}

CanonicalTriad canonicalize(const PreferenceTriad& t) {
  PreferenceTriad best = t;
  bool have_best = false;
  for (std::size_t base = 0; base < 3; ++base) {
    const Permutation relabel = t.ordering(base).inverse();
    const std::array<Permutation, 3> rel = {compose(relabel, t.ordering(0)),
                                            compose(relabel, t.ordering(1)),
                                            compose(relabel, t.ordering(2))};
    const std::size_t o1 = (base + 1) % 3;
    const std::size_t o2 = (base + 2) % 3;
    for (int flip = 0; flip < 2; ++flip) {
      PreferenceTriad candidate(rel[base], rel[flip ? o2 : o1],
                                rel[flip ? o1 : o2]);
      if (!have_best || candidate < best) {
        best = std::move(candidate);
        have_best = true;
      }
    }
  }
  return CanonicalTriad(std::move(best));
}

ClassDescriptor describe_class(const PreferenceTriad& t) {
  ClassDescriptor d{};
  d.identical_pairs = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      if (t.ordering(i) == t.ordering(j)) ++d.identical_pairs;
    }
  }
  const std::array<std::uint32_t, 3> tops = {t.ordering(0)[0], t.ordering(1)[0],
                                             t.ordering(2)[0]};
  d.shared_top = 1;
  for (std::uint32_t top : tops) {
    const auto count = static_cast<std::uint32_t>(
        std::count(tops.begin(), tops.end(), top));
    d.shared_top = std::max(d.shared_top, count);
  }
  d.pairwise_distances = {kendall_tau_distance(t.ordering(0), t.ordering(1)),
                          kendall_tau_distance(t.ordering(0), t.ordering(2)),
                          kendall_tau_distance(t.ordering(1), t.ordering(2))};
  std::sort(d.pairwise_distances.begin(), d.pairwise_distances.end());
  return d;
}

const ClassTable::Entry* ClassTable::find(const CanonicalTriad& c) const {
  for (const Entry& e : entries) {
    if (e.canonical == c) return &e;
  }
  return nullptr;
}

const ClassTable::Entry& ClassTable::at_class(std::uint32_t class_id) const {
  for (const Entry& e : entries) {
    if (e.class_id == class_id) return e;
  }
  throw InvalidArgumentError("no class " + std::to_string(class_id) +
                             " in table");
}

void ClassTable::write_csv(std::ostream& out) const {
  const AlternativeAlphabet alphabet = AlternativeAlphabet::default_for(n);
  out << "class_id,canonical_triad,orbit_size_36,orbit_size_216\n";
  for (const Entry& e : entries) {
    out << e.class_id << ',';
    for (std::size_t i = 0; i < 3; ++i) {
      if (i > 0) out << '>';
      out << format_ordering(e.canonical.ordering(i), alphabet);
    }
    out << ',' << e.orbit_size_fixed << ',' << e.orbit_size_full << '\n';
  }
}

namespace {

// Reference partitioning of the 36 fixed-first-ordering cases into the 10
// classes; case = 6*(i-1)+j over the lexicographic ranks of the second and
// third orderings.
constexpr std::array<std::array<std::uint8_t, 6>, 10> kClassCases3 = {{
    {1, 0, 0, 0, 0, 0},
    {2, 7, 8, 0, 0, 0},
    {9, 11, 14, 16, 21, 26},
    {10, 12, 20, 30, 32, 35},
    {3, 13, 15, 0, 0, 0},
    {17, 18, 24, 27, 33, 34},
    {4, 19, 29, 0, 0, 0},
    {5, 22, 25, 0, 0, 0},
    {6, 31, 36, 0, 0, 0},
    {23, 28, 0, 0, 0, 0},
}};

PreferenceTriad triad_of_case(std::uint32_t case_id) {
  const auto& perms = all_permutations(3);
  const std::uint32_t i = (case_id - 1) / 6;
  const std::uint32_t j = (case_id - 1) % 6;
  return PreferenceTriad(Permutation::identity(3), perms[i], perms[j]);
}

ClassTable build_class_table3() {
  ClassTable table;
  table.n = 3;
  std::uint32_t cases_covered = 0;
  for (std::uint32_t cls = 1; cls <= 10; ++cls) {
    const auto& cases = kClassCases3[cls - 1];
    CanonicalTriad canonical = canonicalize(triad_of_case(cases[0]));
    std::uint64_t orbit = 0;
    for (std::uint8_t c : cases) {
      if (c == 0) continue;
      ++orbit;
      ++cases_covered;
      if (!(canonicalize(triad_of_case(c)) == canonical)) {
        throw std::logic_error(
            "class table corrupt: case " + std::to_string(c) +
            " does not share class " + std::to_string(cls) +
            "'s canonical form");
      }
    }
    for (const auto& other : table.entries) {
      if (other.canonical == canonical) {
        throw std::logic_error("class table corrupt: classes " +
                               std::to_string(other.class_id) + " and " +
                               std::to_string(cls) + " collide");
      }
    }
    table.entries.push_back(
        ClassTable::Entry{canonical, cls, orbit, orbit * 6});
  }
  if (cases_covered != 36) {
    throw std::logic_error("class table corrupt: covers " +
                           std::to_string(cases_covered) + " of 36 cases");
  }
  return table;
}

}  // namespace

const ClassTable& class_table3() {
  static const ClassTable table = build_class_table3();
  return table;
}

std::uint32_t classify3(const PreferenceTriad& t) {
  if (t.alternative_count() != 3) {
    throw UnsupportedSizeError(
        "classify3 handles 3 alternatives only; use canonicalize/"
        "enumerate_classes for n = " +
        std::to_string(t.alternative_count()));
  }
  const ClassTable::Entry* entry = class_table3().find(canonicalize(t));
  if (entry == nullptr) {
    throw std::logic_error("canonical form missing from the 3-class table");
  }
  return entry->class_id;
}

std::uint32_t case_number(const PreferenceTriad& t) {
  if (t.alternative_count() != 3) {
    throw InvalidArgumentError("case numbering is defined for 3 alternatives");
  }
  if (t.ordering(0) != Permutation::identity(3)) {
    throw InvalidArgumentError(
        "case numbering needs the first ordering to be the identity");
  }
  const auto i = static_cast<std::uint32_t>(lex_rank(t.ordering(1)));
  const auto j = static_cast<std::uint32_t>(lex_rank(t.ordering(2)));
  return 6 * i + j + 1;
}

ClassTable enumerate_classes(std::size_t n, std::uint64_t budget) {
  const std::vector<Permutation> perms = all_permutations(n);
  const Permutation id = Permutation::identity(n);

  std::map<PreferenceTriad, std::uint64_t> orbit_counts;
  std::uint64_t processed = 0;
  for (const Permutation& s : perms) {
    for (const Permutation& p : perms) {
      if (budget != 0 && processed >= budget) {
        throw ResourceLimitError(
            "class enumeration budget of " + std::to_string(budget) +
                " pairs exhausted after " + std::to_string(processed),
            processed);
      }
      ++processed;
      const CanonicalTriad c = canonicalize(PreferenceTriad(id, s, p));
      ++orbit_counts[c.triad()];
    }
  }

  ClassTable table;
  table.n = n;
  table.entries.reserve(orbit_counts.size());
  std::uint32_t next_id = 1;
  const auto group_order = static_cast<std::uint64_t>(perms.size());
  for (const auto& [canonical_triad, count] : orbit_counts) {
    table.entries.push_back(ClassTable::Entry{
        canonicalize(canonical_triad), next_id++, count, count * group_order});
  }
  return table;
}

std::uint8_t ordering_code(const Permutation& p) {
  if (p.size() != 3) {
    throw UnsupportedSizeError("ordering codes cover 3 alternatives only");
  }
  return static_cast<std::uint8_t>(lex_rank(p));
}

const Permutation& ordering_from_code(std::uint8_t code) {
  static const std::vector<Permutation> perms = all_permutations(3);
  return perms.at(code);
}

const std::array<std::uint8_t, 216>& dense_class_table3() {
  static const std::array<std::uint8_t, 216> table = [] {
    std::array<std::uint8_t, 216> t{};
    for (std::uint8_t a = 0; a < 6; ++a) {
      for (std::uint8_t b = 0; b < 6; ++b) {
        for (std::uint8_t c = 0; c < 6; ++c) {
          t[(a * 6 + b) * 6 + c] = static_cast<std::uint8_t>(
              classify3(PreferenceTriad(ordering_from_code(a),
                                        ordering_from_code(b),
                                        ordering_from_code(c))));
        }
      }
    }
    return t;
  }();
  return table;
}

}  // namespace preftriads
