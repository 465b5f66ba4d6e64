#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "ucycle/word.hpp"
#include "ucycle/word_classes.hpp"

namespace ucycle::test {

// Literal word from 1-based digits, e.g. word("1122333") -> {1,1,2,2,3,3,3}.
inline Word word(const std::string& digits) {
  Word w;
  w.reserve(digits.size());
  for (char c : digits) w.push_back(c - '0');
  return w;
}

inline std::vector<Word> words(const std::vector<std::string>& texts) {
  std::vector<Word> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(word(t));
  return out;
}

// Out-degree of a window computed from the membership predicate alone:
// the number of letters whose append yields a class word. Equals the degree
// in the full transition digraph without building it.
inline int local_out_degree(const ClassSpec& spec, const Word& vertex) {
  int degree = 0;
  for (Letter x = 1; x <= spec.n; ++x) {
    Word edge = vertex;
    edge.push_back(x);
    degree += is_member(spec, edge);
  }
  return degree;
}

inline int local_in_degree(const ClassSpec& spec, const Word& vertex) {
  int degree = 0;
  for (Letter x = 1; x <= spec.n; ++x) {
    Word edge;
    edge.reserve(vertex.size() + 1);
    edge.push_back(x);
    edge.insert(edge.end(), vertex.begin(), vertex.end());
    degree += is_member(spec, edge);
  }
  return degree;
}

// Random M-letter word with the given per-letter multiplicities.
inline Word shuffled_word_from_counts(const std::vector<int>& counts,
                                      std::mt19937& rng) {
  Word w;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    for (int c = 0; c < counts[i]; ++c) w.push_back(static_cast<Letter>(i + 1));
  }
  std::shuffle(w.begin(), w.end(), rng);
  return w;
}

// Random equitable vertex for Equitable{m,n}: k-1 letters at r+1, the rest at
// r, letters assigned to roles at random.
inline Word random_equitable_vertex(int m, int n, std::mt19937& rng) {
  const int k = m % n;
  const int r = m / n;
  std::vector<int> letters(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) letters[static_cast<std::size_t>(i)] = i;
  std::shuffle(letters.begin(), letters.end(), rng);
  std::vector<int> counts(static_cast<std::size_t>(n), r);
  for (int i = 0; i < k - 1; ++i) counts[static_cast<std::size_t>(letters[static_cast<std::size_t>(i)])] = r + 1;
  return shuffled_word_from_counts(counts, rng);
}

}  // namespace ucycle::test
