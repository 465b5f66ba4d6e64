#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ucycle/word.hpp"

namespace ucycle {

enum class ClassKind {
  Plain,         // all m-letter words on [n]
  Injection,     // no letter repeats (k-letter words, k <= n)
  Surjection,    // every letter of [n] appears (k-letter words, k >= n)
  AlmostOnto,    // n-letter words on [n] missing exactly one letter
  NonBijection,  // n-letter words on [n] whose range is not all of [n]
  Equitable,     // letter frequencies pairwise differ by at most 1
  SInequitable,  // letter frequencies pairwise differ by at most s
  Ranking,       // tournament rankings with ties (m-letter words on [m])
  Password,      // at least one symbol from each designated class
};

std::string class_kind_name(ClassKind kind);

struct ClassSpec {
  ClassKind kind = ClassKind::Plain;
  int m = 0;  // word length
  int n = 0;  // alphabet size
  int s = 0;  // maximum letter-frequency spread (SInequitable only)
  std::vector<std::vector<Letter>> classes;  // required symbol classes (Password only)

  static ClassSpec plain(int m, int n);
  static ClassSpec injection(int k, int n);
  static ClassSpec surjection(int k, int n);
  static ClassSpec almost_onto(int n);
  static ClassSpec non_bijection(int n);
  static ClassSpec equitable(int m, int n);
  static ClassSpec s_inequitable(int m, int n, int s);
  static ClassSpec ranking(int m);
  static ClassSpec password(int m, int n, std::vector<std::vector<Letter>> classes);
};

// Existence expectation attached by validate_spec. Only used to cross-check
// the computational diagnosis; never consulted to shortcut it.
enum class Expectation { Yes, No, Unknown };

struct ValidatedSpec {
  ClassSpec spec;
  int vertex_length = 0;  // m - 1
  int residue = 0;        // m mod n (equitable family)
  int quota = 0;          // floor(m / n): the "normal" letter multiplicity
  Expectation expectation = Expectation::Unknown;
  std::string note;
};

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

// Normalizes the spec, rejects parameterizations that yield an empty class,
// and attaches derived quantities plus an existence expectation.
ValidatedSpec validate_spec(const ClassSpec& spec);

// True iff w belongs to the class. Length or alphabet mismatches are contract
// violations and throw; they are never reported as false.
bool is_member(const ClassSpec& spec, const Word& w);

// Lexicographically sorted, duplicate-free list of exactly the class members,
// produced by filtering all n^m candidate words.
std::vector<Word> enumerate_class(const ClassSpec& spec,
                                  std::uint64_t budget = kDefaultBudget);

// Number of candidate words n^m, saturating at the maximum representable value.
std::uint64_t candidate_count(const ClassSpec& spec);

}  // namespace ucycle
