#include "lft/ranges.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <string_view>

namespace lft {

namespace {

std::size_t parse_count(std::string_view s, const std::string& whole) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("bad range \"" + whole + "\"");
  }
  return v;
}

}  // namespace

std::vector<std::size_t> parse_range(const std::string& text) {
  std::vector<std::size_t> out;
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    const auto dots = item.find("..");
    if (dots == std::string_view::npos) {
      out.push_back(parse_count(item, text));
    } else {
      const std::size_t lo = parse_count(item.substr(0, dots), text);
      const std::size_t hi = parse_count(item.substr(dots + 2), text);
      if (hi < lo) throw std::invalid_argument("empty range \"" + text + "\"");
      for (std::size_t v = lo; v <= hi; ++v) out.push_back(v);
    }
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace lft
