#ifndef MITSCH_TESTS_HELPERS_HPP_
#define MITSCH_TESTS_HELPERS_HPP_

#include <string>

#include "mitsch/partition.hpp"
#include "mitsch/relation.hpp"

namespace mitsch_tests {

// "01/00" -> the 2x2 relation with rows 01 and 00.
inline mitsch::Relation rel(const std::string& rows) {
  std::string text;
  size_t n = rows.find('/');
  if (n == std::string::npos) n = rows.size();
  text = std::to_string(n) + "\n";
  for (char c : rows) text += (c == '/') ? '\n' : c;
  text += '\n';
  return mitsch::Relation::from_text(text);
}

inline mitsch::Partition part(const std::string& blocks) {
  return mitsch::Partition::from_text(blocks);
}

}  // namespace mitsch_tests

#endif
