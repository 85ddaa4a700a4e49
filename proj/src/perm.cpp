#include "preftriads/perm.hpp"

#include <algorithm>
#include <numeric>

namespace preftriads {

namespace {

void check_word(const std::vector<std::uint32_t>& word) {
  if (word.size() < 2) {
    throw InvalidSizeError("permutation needs at least 2 alternatives, got " +
                           std::to_string(word.size()));
  }
  std::vector<bool> seen(word.size(), false);
  for (std::uint32_t v : word) {
    if (v >= word.size() || seen[v]) {
      throw InvalidArgumentError("word is not a bijection on {0.." +
                                 std::to_string(word.size() - 1) + "}");
    }
    seen[v] = true;
  }
}

}  // namespace

Permutation::Permutation(std::vector<std::uint32_t> word)
    : word_(std::move(word)) {
  check_word(word_);
}

Permutation Permutation::identity(std::size_t n) {
  if (n < 2) {
    throw InvalidSizeError("identity permutation needs n >= 2, got " +
                           std::to_string(n));
  }
  std::vector<std::uint32_t> word(n);
  std::iota(word.begin(), word.end(), 0u);
  return Permutation(std::move(word));
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> inv(word_.size());
  for (std::uint32_t k = 0; k < word_.size(); ++k) inv[word_[k]] = k;
  return Permutation(std::move(inv));
}

std::uint64_t Permutation::order() const {
  std::vector<bool> seen(word_.size(), false);
  std::uint64_t result = 1;
  for (std::uint32_t start = 0; start < word_.size(); ++start) {
    if (seen[start]) continue;
    std::uint64_t len = 0;
    for (std::uint32_t i = start; !seen[i]; i = word_[i]) {
      seen[i] = true;
      ++len;
    }
    const std::uint64_t g = std::gcd(result, len);
    if ((result / g) > UINT64_MAX / len) {
      throw Error("element order overflows 64 bits");
    }
    result = result / g * len;
  }
  return result;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.size() != inner.size()) {
    throw IncompatibleSizeError(
        "cannot compose permutations of sizes " +
        std::to_string(outer.size()) + " and " + std::to_string(inner.size()));
  }
  std::vector<std::uint32_t> word(inner.size());
  for (std::size_t k = 0; k < inner.size(); ++k) word[k] = outer[inner[k]];
  return Permutation(std::move(word));
}

std::uint32_t kendall_tau_distance(const Permutation& a,
                                   const Permutation& b) {
  if (a.size() != b.size()) {
    throw IncompatibleSizeError("kendall tau needs equal sizes");
  }
  const Permutation ra = a.inverse();  // rank of each alternative
  const Permutation rb = b.inverse();
  std::uint32_t discordant = 0;
  for (std::uint32_t x = 0; x < a.size(); ++x) {
    for (std::uint32_t y = x + 1; y < a.size(); ++y) {
      if ((ra[x] < ra[y]) != (rb[x] < rb[y])) ++discordant;
    }
  }
  return discordant;
}

Permutation restrict_ordering(const Permutation& p,
                              std::span<const std::uint32_t> keep) {
  if (keep.size() < 2) {
    throw InvalidSubsetError("restriction needs at least 2 kept alternatives");
  }
  std::vector<bool> kept(p.size(), false);
  for (std::uint32_t x : keep) {
    if (x >= p.size()) {
      throw InvalidSubsetError("kept alternative " + std::to_string(x) +
                               " is out of range");
    }
    if (kept[x]) {
      throw InvalidSubsetError("kept alternative " + std::to_string(x) +
                               " listed twice");
    }
    kept[x] = true;
  }
  // new index of alternative x = number of kept alternatives below x
  std::vector<std::uint32_t> new_index(p.size(), 0);
  std::uint32_t next = 0;
  for (std::uint32_t x = 0; x < p.size(); ++x) {
    if (kept[x]) new_index[x] = next++;
  }
  std::vector<std::uint32_t> word;
  word.reserve(keep.size());
  for (std::uint32_t k = 0; k < p.size(); ++k) {
    if (kept[p[k]]) word.push_back(new_index[p[k]]);
  }
  return Permutation(std::move(word));
}

AlternativeAlphabet::AlternativeAlphabet(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  if (labels_.size() < 2) {
    throw InvalidSizeError("alphabet needs at least 2 labels");
  }
  single_char_ = true;
  for (std::uint32_t i = 0; i < labels_.size(); ++i) {
    const std::string& l = labels_[i];
    if (l.empty()) throw InvalidArgumentError("empty alternative label");
    if (!index_.emplace(l, i).second) {
      throw InvalidArgumentError("duplicate alternative label '" + l + "'");
    }
    if (l.size() != 1) single_char_ = false;
  }
}

AlternativeAlphabet AlternativeAlphabet::default_for(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::string label;
    std::size_t v = i;
    do {
      label.insert(label.begin(), static_cast<char>('A' + v % 26));
      v = v / 26;
    } while (v-- > 0);
    labels.push_back(std::move(label));
  }
  return AlternativeAlphabet(std::move(labels));
}

std::uint32_t AlternativeAlphabet::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) {
    throw ParseError("unknown alternative label '" + label + "'", label);
  }
  return it->second;
}

bool operator==(const AlternativeAlphabet& a, const AlternativeAlphabet& b) {
  return a.labels_ == b.labels_;
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

Permutation parse_ordering(const std::string& text,
                           const AlternativeAlphabet& alphabet) {
  std::vector<std::string> tokens;
  if (text.find('>') != std::string::npos) {
    std::size_t pos = 0;
    while (true) {
      const auto next = text.find('>', pos);
      tokens.push_back(trim(text.substr(pos, next - pos)));
      if (next == std::string::npos) break;
      pos = next + 1;
    }
  } else if (alphabet.single_char()) {
    for (char c : text) tokens.emplace_back(1, c);
  } else {
    throw ParseError("ordering '" + text +
                         "' must use '>'-separated labels for this alphabet",
                     text);
  }

  std::vector<std::uint32_t> word;
  std::vector<bool> seen(alphabet.size(), false);
  word.reserve(tokens.size());
  for (const std::string& token : tokens) {
    const std::uint32_t idx = alphabet.index_of(token);
    if (seen[idx]) {
      throw ParseError("duplicate alternative label '" + token + "'", token);
    }
    seen[idx] = true;
    word.push_back(idx);
  }
  if (word.size() != alphabet.size()) {
    for (std::uint32_t i = 0; i < alphabet.size(); ++i) {
      if (!seen[i]) {
        throw ParseError(
            "incomplete ordering: missing label '" + alphabet.label(i) + "'",
            alphabet.label(i));
      }
    }
  }
  return Permutation(std::move(word));
}

std::string format_ordering(const Permutation& p,
                            const AlternativeAlphabet& alphabet,
                            bool force_delimited) {
  if (p.size() != alphabet.size()) {
    throw IncompatibleSizeError("ordering and alphabet sizes differ");
  }
  std::string out;
  const bool delimited = force_delimited || !alphabet.single_char();
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (delimited && k > 0) out += '>';
    out += alphabet.label(p[k]);
  }
  return out;
}

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<std::uint32_t> word(n);
  std::iota(word.begin(), word.end(), 0u);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(word));
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

std::uint64_t lex_rank(const Permutation& p) {
  const std::size_t n = p.size();
  std::uint64_t rank = 0;
  for (std::size_t k = 0; k < n; ++k) {
    std::uint32_t smaller = 0;
    for (std::size_t j = k + 1; j < n; ++j) {
      if (p[j] < p[k]) ++smaller;
    }
    rank = rank * (n - k) + smaller;
  }
  return rank;
}

}  // namespace preftriads
