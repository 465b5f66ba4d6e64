#include "ucycle/witness.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

#include "ucycle/errors.hpp"

namespace ucycle {

namespace {

Word shift_window(const Word& v, Letter x) {
  Word w(v.begin() + 1, v.end());
  w.push_back(x);
  return w;
}

bool legal_append(const ClassSpec& spec, const Word& window, Letter x) {
  Word edge = window;
  edge.push_back(x);
  return is_member(spec, edge);
}

void check_vertex_contract(const ValidatedSpec& v, const Word& vertex) {
  if (static_cast<int>(vertex.size()) != v.vertex_length) {
    throw ContractError("vertex length " + std::to_string(vertex.size()) +
                        " does not match window length " +
                        std::to_string(v.vertex_length));
  }
  for (Letter x : vertex) {
    if (x < 1 || x > v.spec.n) {
      throw ContractError("letter " + std::to_string(x) + " outside [1, " +
                          std::to_string(v.spec.n) + "]");
    }
  }
}

ValidatedSpec require_equitable(const ClassSpec& spec) {
  ValidatedSpec v = validate_spec(spec);
  if (v.spec.kind != ClassKind::Equitable) {
    throw ContractError("operation is defined for equitable classes only");
  }
  return v;
}

// Follow an append sequence from a start vertex, recording every window.
WitnessPath walk(const Word& start, const std::vector<Letter>& appends) {
  WitnessPath path;
  path.vertices.reserve(appends.size() + 1);
  path.vertices.push_back(start);
  Word current = start;
  for (Letter x : appends) {
    current = shift_window(current, x);
    path.vertices.push_back(current);
  }
  return path;
}

void assert_valid(const ClassSpec& spec, const WitnessPath& path, const char* op) {
  PathCheck check = validate_path(spec, path);
  if (!check.valid) {
    throw std::logic_error(std::string(op) + " produced an invalid path: " + check.message);
  }
}

}  // namespace

LetterStatus letter_status(const ClassSpec& input, const Word& vertex, Letter x) {
  const ValidatedSpec v = require_equitable(input);
  check_vertex_contract(v, vertex);
  if (x < 1 || x > v.spec.n) {
    throw ContractError("letter " + std::to_string(x) + " outside [1, " +
                        std::to_string(v.spec.n) + "]");
  }
  const int count = letter_histogram(vertex, v.spec.n)[static_cast<std::size_t>(x - 1)];
  if (count == v.quota - 1) return LetterStatus::Deficient;
  if (count == v.quota) return LetterStatus::Normal;
  if (count == v.quota + 1) return LetterStatus::Super;
  throw ContractError("letter " + std::to_string(x) + " occurs " + std::to_string(count) +
                      " times; not a window of this class");
}

bool is_equitable_vertex(const ClassSpec& input, const Word& vertex) {
  const ValidatedSpec v = require_equitable(input);
  check_vertex_contract(v, vertex);
  const Histogram h = letter_histogram(vertex, v.spec.n);
  int supers = 0, normals = 0;
  for (int count : h) {
    if (count == v.quota + 1) {
      ++supers;
    } else if (count == v.quota) {
      ++normals;
    } else {
      return false;
    }
  }
  return supers == v.residue - 1 && normals == v.spec.n - v.residue + 1;
}

PathCheck validate_path(const ClassSpec& input, const WitnessPath& path) {
  const ValidatedSpec v = validate_spec(input);
  PathCheck check;
  if (path.vertices.empty()) {
    check.message = "path has no vertices";
    return check;
  }
  const auto vertex_len = static_cast<std::size_t>(v.vertex_length);
  if (vertex_len == 0 && path.vertices.size() > 1) {
    check.message = "paths need a window length of at least 1";
    check.first_bad_transition = 0;
    return check;
  }
  for (std::size_t t = 0; t < path.vertices.size(); ++t) {
    const Word& w = path.vertices[t];
    if (w.size() != vertex_len) {
      check.message = "vertex " + std::to_string(t) + " has length " +
                      std::to_string(w.size()) + ", expected " +
                      std::to_string(vertex_len);
      check.first_bad_transition = t == 0 ? 0 : t - 1;
      return check;
    }
    for (Letter x : w) {
      if (x < 1 || x > v.spec.n) {
        check.message = "vertex " + std::to_string(t) + " has letter " +
                        std::to_string(x) + " outside [1, " +
                        std::to_string(v.spec.n) + "]";
        check.first_bad_transition = t == 0 ? 0 : t - 1;
        return check;
      }
    }
  }
  for (std::size_t t = 0; t + 1 < path.vertices.size(); ++t) {
    const Word& a = path.vertices[t];
    const Word& b = path.vertices[t + 1];
    if (!std::equal(a.begin() + 1, a.end(), b.begin())) {
      check.message = "transition " + std::to_string(t) + ": windows do not overlap";
      check.first_bad_transition = t;
      return check;
    }
    Word edge = a;
    edge.push_back(b.back());
    if (!is_member(v.spec, edge)) {
      check.message = "transition " + std::to_string(t) + ": edge word " +
                      word_to_string(edge, v.spec.n) + " is not in the class";
      check.first_bad_transition = t;
      return check;
    }
  }
  check.valid = true;
  return check;
}

WitnessPath lag_cycle(const ClassSpec& input, const Word& vertex, Letter placeholder) {
  const ValidatedSpec v = require_equitable(input);
  check_vertex_contract(v, vertex);
  if (!is_equitable_vertex(v.spec, vertex)) {
    throw ContractError("lag cycling starts from an equitable vertex");
  }
  if (letter_status(v.spec, vertex, placeholder) != LetterStatus::Normal) {
    throw ContractError("placeholder " + std::to_string(placeholder) +
                        " must be a normal letter of the vertex");
  }
  std::vector<Letter> appends;
  appends.reserve(vertex.size() + 1);
  appends.push_back(placeholder);
  appends.insert(appends.end(), vertex.begin(), vertex.end());
  WitnessPath path = walk(vertex, appends);
  assert_valid(v.spec, path, "lag_cycle");
  return path;
}

WitnessPath status_swap_path(const ClassSpec& input, const Word& vertex,
                             Letter super_letter, Letter normal_letter) {
  const ValidatedSpec v = require_equitable(input);
  check_vertex_contract(v, vertex);
  if (!is_equitable_vertex(v.spec, vertex)) {
    throw ContractError("status swaps start from an equitable vertex");
  }
  if (super_letter == normal_letter) {
    throw ContractError("status swap needs two distinct letters");
  }
  if (letter_status(v.spec, vertex, super_letter) != LetterStatus::Super) {
    throw ContractError("letter " + std::to_string(super_letter) + " is not super here");
  }
  if (letter_status(v.spec, vertex, normal_letter) != LetterStatus::Normal) {
    throw ContractError("letter " + std::to_string(normal_letter) + " is not normal here");
  }

  const Histogram start_hist = letter_histogram(vertex, v.spec.n);
  const auto first_super = static_cast<std::size_t>(
      std::find(vertex.begin(), vertex.end(), super_letter) - vertex.begin());

  // Substitution plan for the prefix through the first super_letter
  // occurrence. Chain occurrences (letters that are super in the start word)
  // shift backwards by one so each keeps its super status; everything normal
  // re-enters as itself.
  struct Slot {
    Letter letter;
    bool chain;
  };
  std::vector<Slot> schedule(first_super + 1);
  Letter previous_chain = normal_letter;
  for (std::size_t p = 0; p <= first_super; ++p) {
    const Letter original = vertex[p];
    if (p == first_super) {
      schedule[p] = {previous_chain, true};
    } else if (start_hist[static_cast<std::size_t>(original - 1)] == v.quota + 1) {
      schedule[p] = {previous_chain, true};
      previous_chain = original;
    } else {
      schedule[p] = {original, false};
    }
  }

  WitnessPath path;
  path.vertices.push_back(vertex);
  Word current = vertex;
  for (std::size_t step = 0; step < schedule.size(); ++step) {
    if (!legal_append(v.spec, current, schedule[step].letter)) {
      // Defer the blocked letter: exchange it with the next chain slot whose
      // letter can go now (any legal slot as a fallback).
      std::size_t swap_with = schedule.size();
      for (std::size_t q = step + 1; q < schedule.size(); ++q) {
        if (schedule[q].chain && legal_append(v.spec, current, schedule[q].letter)) {
          swap_with = q;
          break;
        }
      }
      if (swap_with == schedule.size()) {
        for (std::size_t q = step + 1; q < schedule.size(); ++q) {
          if (legal_append(v.spec, current, schedule[q].letter)) {
            swap_with = q;
            break;
          }
        }
      }
      if (swap_with == schedule.size()) {
        throw std::logic_error("status_swap_path: no legal continuation");
      }
      std::swap(schedule[step], schedule[swap_with]);
    }
    current = shift_window(current, schedule[step].letter);
    path.vertices.push_back(current);
  }

  Histogram expected = start_hist;
  --expected[static_cast<std::size_t>(super_letter - 1)];
  ++expected[static_cast<std::size_t>(normal_letter - 1)];
  if (letter_histogram(current, v.spec.n) != expected) {
    throw std::logic_error("status_swap_path: endpoint frequencies are off");
  }
  assert_valid(v.spec, path, "status_swap_path");
  return path;
}

namespace {

Letter smallest_with_count(const Histogram& hist, int count, Letter excluded) {
  for (Letter x = 1; x <= static_cast<Letter>(hist.size()); ++x) {
    if (x != excluded && hist[static_cast<std::size_t>(x - 1)] == count) return x;
  }
  throw std::logic_error("no qualifying placeholder letter");
}

}  // namespace

WitnessPath position_swap_path(const ClassSpec& input, const Word& vertex,
                               int pos_i, int pos_j) {
  const ValidatedSpec v = require_equitable(input);
  if (v.residue < 2) {
    throw SpecError("position swaps need m mod n >= 2 so two placeholders exist");
  }
  check_vertex_contract(v, vertex);
  if (!is_equitable_vertex(v.spec, vertex)) {
    throw ContractError("position swaps start from an equitable vertex");
  }
  const int M = v.vertex_length;
  if (pos_i < 1 || pos_j < 1 || pos_i > M || pos_j > M || pos_i > pos_j) {
    throw ContractError("positions must satisfy 1 <= i <= j <= " + std::to_string(M));
  }
  if (pos_i == pos_j) return WitnessPath{{vertex}};

  const Letter at_i = vertex[static_cast<std::size_t>(pos_i - 1)];
  const Letter at_j = vertex[static_cast<std::size_t>(pos_j - 1)];
  if (at_i == at_j) return WitnessPath{{vertex}};

  const int r = v.quota;
  const Histogram hist = letter_histogram(vertex, v.spec.n);

  // First placeholder: the letter at position i itself when normal, otherwise
  // the smallest normal letter distinct from the one at position j.
  const Letter heart = hist[static_cast<std::size_t>(at_i - 1)] == r
                           ? at_i
                           : smallest_with_count(hist, r, at_j);

  // Second placeholder, chosen at the window reached after the first sweep:
  // the letter at position j if it is normal there, else the smallest normal
  // letter distinct from the one at position i.
  Histogram after_first = hist;
  --after_first[static_cast<std::size_t>(at_i - 1)];
  ++after_first[static_cast<std::size_t>(heart - 1)];
  const Letter spade = after_first[static_cast<std::size_t>(at_j - 1)] == r
                           ? at_j
                           : smallest_with_count(after_first, r, at_i);

  std::vector<Letter> appends;
  appends.reserve(static_cast<std::size_t>(M) + 1);
  appends.push_back(heart);
  appends.insert(appends.end(), vertex.begin(), vertex.begin() + (pos_i - 1));
  appends.push_back(spade);
  appends.insert(appends.end(), vertex.begin() + pos_i, vertex.begin() + (pos_j - 1));
  appends.push_back(at_i);
  appends.insert(appends.end(), vertex.begin() + pos_j, vertex.end());

  WitnessPath path = walk(vertex, appends);

  if (spade != at_j) {
    // The first sweep parked a stand-in at position i; a second sweep swaps
    // the now-normal target letter back in.
    const Word& middle = path.vertices.back();
    const Histogram middle_hist = letter_histogram(middle, v.spec.n);
    const Letter club = smallest_with_count(middle_hist, r, at_j);
    std::vector<Letter> second;
    second.reserve(static_cast<std::size_t>(M) + 1);
    second.push_back(club);
    second.insert(second.end(), middle.begin(), middle.begin() + (pos_i - 1));
    second.push_back(at_j);
    second.insert(second.end(), middle.begin() + pos_i, middle.end());
    WitnessPath tail = walk(middle, second);
    path.vertices.insert(path.vertices.end(), tail.vertices.begin() + 1,
                         tail.vertices.end());
  }

  Word expected = vertex;
  std::swap(expected[static_cast<std::size_t>(pos_i - 1)],
            expected[static_cast<std::size_t>(pos_j - 1)]);
  if (path.vertices.back() != expected) {
    throw std::logic_error("position_swap_path: endpoint is not the swapped word");
  }
  assert_valid(v.spec, path, "position_swap_path");
  return path;
}

WitnessPath ranking_collapse_path(const ClassSpec& input, const Word& vertex) {
  const ValidatedSpec v = validate_spec(input);
  if (v.spec.kind != ClassKind::Ranking) {
    throw ContractError("collapse paths are defined for rankings only");
  }
  check_vertex_contract(v, vertex);
  const Word target(static_cast<std::size_t>(v.vertex_length), 1);
  if (vertex != target) {
    Word sorted = vertex;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw ContractError("collapse paths start from a repeat-free vertex");
    }
  }

  WitnessPath path;
  path.vertices.push_back(vertex);
  if (v.vertex_length == 0) return path;

  Word current = vertex;
  const std::size_t cap =
      8 * static_cast<std::size_t>(v.spec.m) * static_cast<std::size_t>(v.spec.m) + 16;
  while (current != target) {
    Letter choice = 0;
    if (legal_append(v.spec, current, 1)) {
      choice = 1;
    } else {
      for (Letter x = static_cast<Letter>(v.spec.n); x >= 1; --x) {
        if (legal_append(v.spec, current, x)) {
          choice = x;
          break;
        }
      }
    }
    if (choice == 0) throw std::logic_error("ranking_collapse_path: stuck vertex");
    current = shift_window(current, choice);
    path.vertices.push_back(current);
    if (path.vertices.size() > cap) {
      throw std::logic_error("ranking_collapse_path: failed to converge");
    }
  }
  assert_valid(v.spec, path, "ranking_collapse_path");
  return path;
}

WitnessPath reverse_path(const WitnessPath& path) {
  WitnessPath out;
  out.vertices.reserve(path.vertices.size());
  for (auto it = path.vertices.rbegin(); it != path.vertices.rend(); ++it) {
    out.vertices.emplace_back(it->rbegin(), it->rend());
  }
  return out;
}

std::optional<WitnessPath> bfs_path(const TransitionDigraph& g, const Word& from,
                                    const Word& to) {
  const auto source = g.find_vertex(from);
  if (!source) throw ContractError("unknown vertex " + word_to_string(from, g.alphabet));
  const auto sink = g.find_vertex(to);
  if (!sink) throw ContractError("unknown vertex " + word_to_string(to, g.alphabet));

  constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> parent(g.vertices.size(), kUnseen);
  std::deque<std::size_t> frontier;
  parent[*source] = *source;
  frontier.push_back(*source);
  while (!frontier.empty() && parent[*sink] == kUnseen) {
    const std::size_t v = frontier.front();
    frontier.pop_front();
    for (std::size_t id : g.out_edges[v]) {
      const std::size_t w = g.edges[id].to;
      if (parent[w] == kUnseen) {
        parent[w] = v;
        frontier.push_back(w);
      }
    }
  }
  if (parent[*sink] == kUnseen) return std::nullopt;

  std::vector<std::size_t> order;
  for (std::size_t v = *sink; v != *source; v = parent[v]) order.push_back(v);
  order.push_back(*source);
  std::reverse(order.begin(), order.end());

  WitnessPath path;
  path.vertices.reserve(order.size());
  for (std::size_t v : order) path.vertices.push_back(g.vertices[v]);
  return path;
}

}  // namespace ucycle
