#include "fusion/su2.hpp"

#include <algorithm>
#include <charconv>

namespace fusion {

Element<Spin> SU2Algebra::fuse(Spin x, Spin y) const {
  Element<Spin> out;
  const std::uint32_t lo = x.n > y.n ? x.n - y.n : y.n - x.n;
  for (std::uint32_t k = lo; k <= x.n + y.n; k += 2) out.add(Spin{k}, BigInt(1));
  return out;
}

std::vector<Spin> SU2Algebra::basis(std::size_t bound) const {
  std::vector<Spin> out;
  for (std::size_t n = 0; n <= bound; ++n) out.push_back(Spin{static_cast<std::uint32_t>(n)});
  return out;
}

Spin SU2Algebra::parse_label(const std::string& text) const {
  std::uint32_t n = 0;
  if (text.size() > 2 && text.compare(0, 2, "pi") == 0) {
    const char* first = text.data() + 2;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, n);
    if (ec == std::errc() && ptr == last) return Spin{n};
  }
  throw ValidationError("'" + text + "' is not an SU(2) label (expected pi<n>)");
}

}  // namespace fusion
