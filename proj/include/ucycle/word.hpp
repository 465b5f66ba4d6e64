#pragma once

#include <string>
#include <vector>

namespace ucycle {

using Letter = int;

// A fixed-length word over the alphabet [1, n]. Vertices of the transition
// digraph are words one letter shorter than the class words they window.
using Word = std::vector<Letter>;

// counts[i] = number of occurrences of letter i+1.
using Histogram = std::vector<int>;

Histogram letter_histogram(const Word& w, int alphabet);

// Text form of a word: a digit string for alphabets up to 9, comma-separated
// integers otherwise.
std::string word_to_string(const Word& w, int alphabet);

// Inverse of word_to_string. A digit string containing a '0' is taken as
// 0-based and shifted up by one, so classic binary strings like "11100010"
// parse as words on [2]. Comma-separated input is always 1-based.
Word parse_word(const std::string& text, int alphabet);

}  // namespace ucycle
