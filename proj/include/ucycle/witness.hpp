#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ucycle/digraph.hpp"
#include "ucycle/word_classes.hpp"

namespace ucycle {

// A walk through the transition digraph, recorded as the vertex words visited.
// Consecutive vertices overlap by all but one letter, and every implied edge
// word (a vertex plus the next vertex's final letter) must lie in the class.
struct WitnessPath {
  std::vector<Word> vertices;
  std::size_t transitions() const { return vertices.empty() ? 0 : vertices.size() - 1; }
};

// Multiplicity class of a letter inside a vertex word of an equitable class,
// relative to the per-letter quota r = floor(m/n): r-1, r, or r+1 occurrences.
enum class LetterStatus { Deficient, Normal, Super };

LetterStatus letter_status(const ClassSpec& spec, const Word& vertex, Letter x);

// True iff the vertex has the balanced window shape: with k = m mod n, exactly
// k-1 letters occur r+1 times and the remaining n-k+1 letters occur r times.
bool is_equitable_vertex(const ClassSpec& spec, const Word& vertex);

struct PathCheck {
  bool valid = false;
  std::optional<std::size_t> first_bad_transition;
  std::string message;
};

// Checks the WitnessPath invariants transition by transition and names the
// first offending one. Malformed vertices make the path invalid; nothing here
// throws.
PathCheck validate_path(const ClassSpec& spec, const WitnessPath& path);

// Rotates an equitable vertex fully around and back to itself. Appending the
// placeholder (any normal letter) first keeps one letter "in flight", so each
// of the m transitions stays legal even when intermediate windows tip out of
// balance.
WitnessPath lag_cycle(const ClassSpec& spec, const Word& vertex, Letter placeholder);

// Walks from an equitable vertex to one whose letter frequencies differ only
// in that super_letter dropped to normal and normal_letter rose to super.
// Replays the prefix up to the first super_letter occurrence with the chain
// rewrite: the first chain occurrence becomes the target letter, later chain
// occurrences shift back one, and the first super_letter occurrence takes the
// last chain letter; appends are reordered only where needed to stay legal.
WitnessPath status_swap_path(const ClassSpec& spec, const Word& vertex,
                             Letter super_letter, Letter normal_letter);

// Exchanges the letters at 1-based positions pos_i <= pos_j of an equitable
// vertex via two placeholder-assisted lag-cycle sweeps. Needs m mod n >= 2 so
// that two normal letters are always available as placeholders.
WitnessPath position_swap_path(const ClassSpec& spec, const Word& vertex,
                               int pos_i, int pos_j);

// Drives a repeat-free ranking vertex down to the all-ones vertex, one letter
// elimination at a time: append 1 whenever legal, otherwise the largest legal
// letter.
WitnessPath ranking_collapse_path(const ClassSpec& spec, const Word& vertex);

// The path run backwards with every vertex word reversed; valid for classes
// whose membership depends only on letter multiplicities or ranges, which is
// all of them here.
WitnessPath reverse_path(const WitnessPath& path);

// Shortest path between two digraph vertices, or nullopt when unreachable.
// Generic fallback for connectivity questions without a bespoke walk.
std::optional<WitnessPath> bfs_path(const TransitionDigraph& g, const Word& from,
                                    const Word& to);

}  // namespace ucycle
