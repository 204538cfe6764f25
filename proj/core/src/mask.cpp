#include "kwise/mask.hpp"

#include <charconv>
#include <string>

#include "kwise/error.hpp"

namespace kwise {

void check_ground_size(int n, int limit) {
  require(n >= 1 && n <= limit, ErrorKind::InvalidParameter,
          "ground size n=" + std::to_string(n) + " outside [1," + std::to_string(limit) + "]");
}

void check_element(int element, int n) {
  require(element >= 1 && element <= n, ErrorKind::InvalidParameter,
          "element " + std::to_string(element) + " outside [1," + std::to_string(n) + "]");
}

std::vector<int> elements_of(Mask m) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(std::popcount(m)));
  while (m != 0) {
    out.push_back(std::countr_zero(m) + 1);
    m &= m - 1;
  }
  return out;
}

Mask mask_from_elements(const std::vector<int>& elements, int n) {
  Mask m = 0;
  for (int e : elements) {
    check_element(e, n);
    m |= element_bit(e);
  }
  return m;
}

Mask parse_element_list(std::string_view text, int n) {
  std::vector<int> elements;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == ',')) ++pos;
    if (pos >= text.size()) break;
    int value = 0;
    const auto* first = text.data() + pos;
    const auto* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    require(ec == std::errc{}, ErrorKind::Parse,
            "bad element list '" + std::string(text) + "'");
    pos += static_cast<std::size_t>(ptr - first);
    elements.push_back(value);
  }
  return mask_from_elements(elements, n);
}

std::string format_mask(Mask m) {
  std::string out = "{";
  bool first = true;
  for (int e : elements_of(m)) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace kwise
