#include "ucycle/word_classes.hpp"

#include <algorithm>
#include <limits>

#include "ucycle/errors.hpp"

namespace ucycle {

std::string class_kind_name(ClassKind kind) {
  switch (kind) {
    case ClassKind::Plain: return "plain";
    case ClassKind::Injection: return "injection";
    case ClassKind::Surjection: return "surjection";
    case ClassKind::AlmostOnto: return "almost-onto";
    case ClassKind::NonBijection: return "non-bijection";
    case ClassKind::Equitable: return "equitable";
    case ClassKind::SInequitable: return "s-inequitable";
    case ClassKind::Ranking: return "ranking";
    case ClassKind::Password: return "password";
  }
  return "unknown";
}

ClassSpec ClassSpec::plain(int m, int n) { return {ClassKind::Plain, m, n, 0, {}}; }

ClassSpec ClassSpec::injection(int k, int n) {
  return {ClassKind::Injection, k, n, 0, {}};
}

ClassSpec ClassSpec::surjection(int k, int n) {
  return {ClassKind::Surjection, k, n, 0, {}};
}

ClassSpec ClassSpec::almost_onto(int n) {
  return {ClassKind::AlmostOnto, n, n, 0, {}};
}

ClassSpec ClassSpec::non_bijection(int n) {
  return {ClassKind::NonBijection, n, n, 0, {}};
}

ClassSpec ClassSpec::equitable(int m, int n) {
  return {ClassKind::Equitable, m, n, 0, {}};
}

ClassSpec ClassSpec::s_inequitable(int m, int n, int s) {
  return {ClassKind::SInequitable, m, n, s, {}};
}

ClassSpec ClassSpec::ranking(int m) { return {ClassKind::Ranking, m, m, 0, {}}; }

ClassSpec ClassSpec::password(int m, int n, std::vector<std::vector<Letter>> classes) {
  return {ClassKind::Password, m, n, 0, std::move(classes)};
}

namespace {

// Smallest number of distinct letters that hits every symbol class, found by
// subset enumeration. Only consulted when m < q, where overlap matters.
int min_hitting_set_size(int n, const std::vector<std::vector<Letter>>& classes) {
  if (n > 20) {
    throw SpecError("cannot decide password non-emptiness for alphabets larger than 20");
  }
  std::vector<std::uint32_t> masks;
  masks.reserve(classes.size());
  for (const auto& cls : classes) {
    std::uint32_t mask = 0;
    for (Letter x : cls) mask |= 1u << (x - 1);
    masks.push_back(mask);
  }
  int best = n + 1;
  for (std::uint32_t pick = 0; pick < (1u << n); ++pick) {
    bool hits_all = true;
    for (std::uint32_t mask : masks) {
      if ((pick & mask) == 0) {
        hits_all = false;
        break;
      }
    }
    if (hits_all) best = std::min(best, static_cast<int>(__builtin_popcount(pick)));
  }
  return best;
}

}  // namespace

ValidatedSpec validate_spec(const ClassSpec& input) {
  ClassSpec spec = input;
  switch (spec.kind) {
    case ClassKind::Ranking: spec.n = spec.m; break;
    case ClassKind::AlmostOnto:
    case ClassKind::NonBijection: spec.m = spec.n; break;
    default: break;
  }
  if (spec.m < 1) throw SpecError("word length must be at least 1");
  if (spec.n < 1) throw SpecError("alphabet size must be at least 1");

  ValidatedSpec v;
  v.spec = spec;
  v.vertex_length = spec.m - 1;
  v.residue = spec.m % spec.n;
  v.quota = spec.m / spec.n;

  switch (spec.kind) {
    case ClassKind::Plain:
      v.expectation = Expectation::Yes;
      v.note = "the full word class always has a universal cycle";
      break;
    case ClassKind::Injection:
      if (spec.m > spec.n) throw SpecError("injection words longer than the alphabet form an empty class");
      if (spec.m < spec.n) {
        v.expectation = Expectation::Yes;
        v.note = "repeat-free words shorter than the alphabet keep the digraph connected";
      } else if (spec.n == 1) {
        v.expectation = Expectation::Yes;
        v.note = "single-word class";
      } else {
        v.expectation = Expectation::No;
        v.note = "k = n words split into disjoint rotation families";
      }
      break;
    case ClassKind::Surjection:
      if (spec.m < spec.n) throw SpecError("onto words shorter than the alphabet form an empty class");
      if (spec.m > spec.n || spec.n == 1) {
        v.expectation = Expectation::Yes;
        v.note = spec.n == 1 && spec.m == 1 ? "single-word class"
                                            : "onto words longer than the alphabet admit a cycle";
      } else {
        v.expectation = Expectation::No;
        v.note = "k = n words split into disjoint rotation families";
      }
      break;
    case ClassKind::AlmostOnto:
      if (spec.n < 2) throw SpecError("almost-onto words need an alphabet of at least 2");
      if (spec.n >= 3) {
        v.expectation = Expectation::Yes;
        v.note = "cycle exists for alphabets of 3 or more";
      } else {
        v.expectation = Expectation::Unknown;
        v.note = "two fixed single-letter words; not covered by the general argument";
      }
      break;
    case ClassKind::NonBijection:
      if (spec.n < 2) throw SpecError("non-bijections on a 1-letter alphabet form an empty class");
      if (spec.n >= 3) {
        v.expectation = Expectation::Yes;
        v.note = "cycle exists for alphabets of 3 or more";
      } else {
        v.expectation = Expectation::Unknown;
        v.note = "two fixed single-letter words; not covered by the general argument";
      }
      break;
    case ClassKind::Equitable:
      if (spec.n == 1) {
        v.expectation = Expectation::Yes;
        v.note = "single-word class";
      } else if (v.residue == 0) {
        v.expectation = Expectation::No;
        v.note = "every vertex is forced around a fixed rotation cycle";
      } else {
        v.expectation = Expectation::Yes;
        v.note = "word length not a multiple of the alphabet";
      }
      break;
    case ClassKind::SInequitable:
      if (spec.s < 1) throw SpecError("frequency spread s must be at least 1");
      if (spec.n == 1) {
        v.expectation = Expectation::Yes;
        v.note = "single-word class";
      } else if (v.residue != 0) {
        v.expectation = Expectation::Yes;
        v.note = "word length not a multiple of the alphabet";
      } else {
        v.expectation = Expectation::Unknown;
        v.note = "length a multiple of the alphabet; not settled by the spread argument";
      }
      break;
    case ClassKind::Ranking:
      v.expectation = Expectation::Yes;
      v.note = "rankings admit a cycle for every length";
      break;
    case ClassKind::Password: {
      const int q = static_cast<int>(spec.classes.size());
      if (q < 1) throw SpecError("password needs at least one symbol class");
      if (q >= spec.n) throw SpecError("password needs fewer symbol classes than letters (q < n)");
      for (const auto& cls : spec.classes) {
        if (cls.empty()) throw SpecError("password symbol classes must be non-empty");
        for (Letter x : cls) {
          if (x < 1 || x > spec.n) {
            throw SpecError("password class letter " + std::to_string(x) +
                            " outside [1, " + std::to_string(spec.n) + "]");
          }
        }
      }
      if (spec.m < q && min_hitting_set_size(spec.n, spec.classes) > spec.m) {
        throw SpecError("no word of length " + std::to_string(spec.m) +
                        " can meet all " + std::to_string(q) + " symbol classes");
      }
      if (spec.m >= 2 * q) {
        v.expectation = Expectation::Yes;
        v.note = "word length at least twice the number of symbol classes";
      } else {
        v.expectation = Expectation::Unknown;
        v.note = "below the 2q length threshold";
      }
      break;
    }
  }
  return v;
}

namespace {

void check_word_contract(const ClassSpec& spec, const Word& w) {
  if (static_cast<int>(w.size()) != spec.m) {
    throw ContractError("word length " + std::to_string(w.size()) +
                        " does not match class word length " + std::to_string(spec.m));
  }
  for (Letter x : w) {
    if (x < 1 || x > spec.n) {
      throw ContractError("letter " + std::to_string(x) + " outside [1, " +
                          std::to_string(spec.n) + "]");
    }
  }
}

int distinct_letters(const Histogram& h) {
  int d = 0;
  for (int c : h) d += c > 0;
  return d;
}

bool spread_at_most(const Histogram& h, int s) {
  auto [lo, hi] = std::minmax_element(h.begin(), h.end());
  return *hi - *lo <= s;
}

// A ranking's letter multiset, read in increasing order, must start at 1 and
// step by the multiplicity of each letter: after r copies of a, the next
// letter used is a + r.
bool is_ranking_histogram(const Histogram& h) {
  int expected = 1;
  for (int letter = 1; letter <= static_cast<int>(h.size()); ++letter) {
    int count = h[static_cast<std::size_t>(letter - 1)];
    if (count == 0) continue;
    if (letter != expected) return false;
    expected = letter + count;
  }
  return expected > 1;  // at least one letter, starting from 1
}

}  // namespace

bool is_member(const ClassSpec& spec, const Word& w) {
  check_word_contract(spec, w);
  switch (spec.kind) {
    case ClassKind::Plain:
      return true;
    case ClassKind::Injection:
      return distinct_letters(letter_histogram(w, spec.n)) == spec.m;
    case ClassKind::Surjection:
      return distinct_letters(letter_histogram(w, spec.n)) == spec.n;
    case ClassKind::AlmostOnto:
      return distinct_letters(letter_histogram(w, spec.n)) == spec.n - 1;
    case ClassKind::NonBijection:
      return distinct_letters(letter_histogram(w, spec.n)) < spec.n;
    case ClassKind::Equitable:
      return spread_at_most(letter_histogram(w, spec.n), 1);
    case ClassKind::SInequitable:
      return spread_at_most(letter_histogram(w, spec.n), spec.s);
    case ClassKind::Ranking:
      return is_ranking_histogram(letter_histogram(w, spec.n));
    case ClassKind::Password:
      for (const auto& cls : spec.classes) {
        bool hit = false;
        for (Letter x : cls) {
          if (std::find(w.begin(), w.end(), x) != w.end()) {
            hit = true;
            break;
          }
        }
        if (!hit) return false;
      }
      return true;
  }
  return false;
}

std::uint64_t candidate_count(const ClassSpec& spec) {
  std::uint64_t total = 1;
  const auto base = static_cast<std::uint64_t>(spec.n);
  for (int i = 0; i < spec.m; ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() / base) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    total *= base;
  }
  return total;
}

std::vector<Word> enumerate_class(const ClassSpec& input, std::uint64_t budget) {
  const ClassSpec spec = validate_spec(input).spec;
  const std::uint64_t candidates = candidate_count(spec);
  if (candidates > budget) {
    std::string size_text =
        candidates == std::numeric_limits<std::uint64_t>::max()
            ? "more than 2^64"
            : std::to_string(candidates);
    throw BudgetError("enumerating " + std::to_string(spec.n) + "^" +
                      std::to_string(spec.m) + " = " + size_text +
                      " candidate words exceeds the budget of " +
                      std::to_string(budget));
  }
  std::vector<Word> members;
  Word w(static_cast<std::size_t>(spec.m), 1);
  for (;;) {
    if (is_member(spec, w)) members.push_back(w);
    // advance the odometer; candidates are visited in lexicographic order
    int pos = spec.m - 1;
    while (pos >= 0 && w[static_cast<std::size_t>(pos)] == spec.n) {
      w[static_cast<std::size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++w[static_cast<std::size_t>(pos)];
  }
  return members;
}

}  // namespace ucycle
