#include "ucycle/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "ucycle/errors.hpp"

namespace ucycle {

Histogram letter_histogram(const Word& w, int alphabet) {
  if (alphabet < 1) throw ContractError("alphabet size must be positive");
  Histogram counts(static_cast<std::size_t>(alphabet), 0);
  for (Letter x : w) {
    if (x < 1 || x > alphabet) {
      throw ContractError("letter " + std::to_string(x) + " outside [1, " +
                          std::to_string(alphabet) + "]");
    }
    ++counts[static_cast<std::size_t>(x - 1)];
  }
  return counts;
}

std::string word_to_string(const Word& w, int alphabet) {
  std::string out;
  if (alphabet <= 9) {
    out.reserve(w.size());
    for (Letter x : w) out += static_cast<char>('0' + x);
  } else {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(w[i]);
    }
  }
  return out;
}

namespace {

Word parse_comma_word(const std::string& text) {
  Word w;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    int value = 0;
    try {
      value = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw ContractError("cannot parse letter '" + item + "'");
    }
    while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
    if (pos != item.size()) throw ContractError("cannot parse letter '" + item + "'");
    w.push_back(value);
  }
  return w;
}

}  // namespace

Word parse_word(const std::string& text, int alphabet) {
  std::string trimmed = text;
  while (!trimmed.empty() &&
         std::isspace(static_cast<unsigned char>(trimmed.back()))) {
    trimmed.pop_back();
  }
  std::size_t start = 0;
  while (start < trimmed.size() &&
         std::isspace(static_cast<unsigned char>(trimmed[start]))) {
    ++start;
  }
  trimmed = trimmed.substr(start);
  if (trimmed.empty()) return {};

  Word w;
  if (trimmed.find(',') != std::string::npos) {
    w = parse_comma_word(trimmed);
  } else {
    if (alphabet > 9) {
      throw ContractError("alphabets larger than 9 need comma-separated letters");
    }
    bool has_zero = trimmed.find('0') != std::string::npos;
    w.reserve(trimmed.size());
    for (char c : trimmed) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw ContractError(std::string("unexpected character '") + c + "' in word");
      }
      w.push_back(c - '0' + (has_zero ? 1 : 0));
    }
  }
  for (Letter x : w) {
    if (x < 1 || x > alphabet) {
      throw ContractError("letter " + std::to_string(x) + " outside [1, " +
                          std::to_string(alphabet) + "]");
    }
  }
  return w;
}

}  // namespace ucycle
