#include "ringmat/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace ringmat {

bool is_permutation(std::span<const std::size_t> images) {
  std::vector<bool> seen(images.size(), false);
  for (std::size_t image : images) {
    if (image >= images.size() || seen[image]) return false;
    seen[image] = true;
  }
  return true;
}

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  if (!is_permutation(images_)) throw precondition_error("not a permutation: " + to_string(*this));
}

Permutation identity_perm(std::size_t n) {
  if (n == 0) throw precondition_error("identity_perm: degree must be positive");
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), std::size_t{0});
  return Permutation(std::move(images));
}

std::vector<Permutation> enumerate(std::size_t n, std::size_t cap) {
  if (n == 0) throw precondition_error("enumerate: degree must be positive");
  if (n > cap)
    throw precondition_error("enumerate: degree " + std::to_string(n) + " exceeds enumeration cap " +
                             std::to_string(cap));
  std::vector<Permutation> all;
  std::vector<std::size_t> images = identity_perm(n).images();
  do {
    all.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return all;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw precondition_error("compose: degree mismatch (" + std::to_string(p.degree()) + " vs " +
                             std::to_string(q.degree()) + ")");
  std::vector<std::size_t> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = p[q[i]];
  return Permutation(std::move(images));
}

Permutation invert(const Permutation& p) {
  std::vector<std::size_t> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[p[i]] = i;
  return Permutation(std::move(images));
}

Permutation transposition(std::size_t i, std::size_t j, std::size_t n) {
  if (i == j) throw precondition_error("transposition: indices must differ");
  if (i >= n || j >= n) throw precondition_error("transposition: index out of range");
  std::vector<std::size_t> images = identity_perm(n).images();
  std::swap(images[i], images[j]);
  return Permutation(std::move(images));
}

Parity parity(const Permutation& p) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < p.degree(); ++i)
    for (std::size_t j = i + 1; j < p.degree(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0 ? Parity::even : Parity::odd;
}

std::vector<Permutation> decompose(const Permutation& p) {
  // Sort the image sequence by swapping positions. Each swap is
  // current := compose(current, t), so p * t1 * ... * tk = id and
  // p = tk * ... * t1.
  std::vector<std::size_t> current = p.images();
  std::vector<Permutation> swaps;
  for (std::size_t i = 0; i < current.size(); ++i) {
    if (current[i] == i) continue;
    const auto j = static_cast<std::size_t>(std::find(current.begin() + i, current.end(), i) - current.begin());
    std::swap(current[i], current[j]);
    swaps.push_back(transposition(i, j, p.degree()));
  }
  std::reverse(swaps.begin(), swaps.end());
  return swaps;
}

std::string to_string(const Permutation& p) {
  std::string text;
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (i > 0) text += ',';
    text += std::to_string(p[i]);
  }
  return text;
}

Permutation parse_permutation(std::string_view text) {
  std::vector<std::size_t> images;
  std::size_t column = 1;
  while (true) {
    const std::size_t comma = text.find(',');
    std::string_view field = text.substr(0, comma);
    std::size_t value = 0;
    const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || end != field.data() + field.size())
      throw parse_error("permutation: bad index '" + std::string(field) + "'", 1, column);
    images.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
    column += comma + 1;
  }
  if (!is_permutation(images)) throw parse_error("permutation: images are not a rearrangement of 0..n-1", 1, 1);
  return Permutation(std::move(images));
}

}  // namespace ringmat
