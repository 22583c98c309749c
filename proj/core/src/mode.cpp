#include "sculpt/mode.hpp"

#include <algorithm>
#include <cctype>

namespace sculpt {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

bool natural_label_less(const std::string& a, const std::string& b) {
  if (all_digits(a) && all_digits(b)) {
    if (a.size() != b.size()) return a.size() < b.size();
  }
  return a < b;
}

std::vector<ModeId> natural_sorted(std::vector<ModeId> modes) {
  std::sort(modes.begin(), modes.end(), [](const ModeId& x, const ModeId& y) {
    return natural_label_less(x.label, y.label);
  });
  return modes;
}

}  // namespace sculpt
