#include "arcsemi/transformation.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace arcsemi {

Transformation Transformation::identity(int n) {
  std::vector<std::uint8_t> img(n);
  for (int v = 0; v < n; ++v) img[v] = static_cast<std::uint8_t>(v + 1);
  Transformation t;
  t.img_ = std::move(img);
  return t;
}

Transformation Transformation::arc(int a, int b, int n) {
  if (a == b) throw std::invalid_argument("arc transformation requires a != b");
  if (a < 1 || a > n || b < 1 || b > n)
    throw std::invalid_argument("arc transformation endpoint out of range");
  Transformation t = identity(n);
  t.img_[a - 1] = static_cast<std::uint8_t>(b);
  return t;
}

Transformation Transformation::from_images(std::vector<std::uint8_t> images) {
  int n = static_cast<int>(images.size());
  for (auto v : images)
    if (v < 1 || v > n)
      throw std::invalid_argument("image value out of range 1..n");
  Transformation t;
  t.img_ = std::move(images);
  return t;
}

std::vector<int> Transformation::image() const {
  std::vector<int> result(img_.begin(), img_.end());
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

std::vector<std::vector<int>> Transformation::kernel_partition() const {
  int n = degree();
  std::vector<std::vector<int>> classes(n);
  for (int v = 1; v <= n; ++v) classes[img_[v - 1] - 1].push_back(v);
  std::vector<std::vector<int>> result;
  for (auto& c : classes)
    if (!c.empty()) result.push_back(std::move(c));
  std::sort(result.begin(), result.end());
  return result;
}

int Transformation::rank() const { return static_cast<int>(image().size()); }

std::string Transformation::to_string() const {
  std::string s = "[";
  for (int v = 0; v < degree(); ++v) {
    if (v) s += ", ";
    s += std::to_string(img_[v]);
  }
  return s + "]";
}

Transformation Transformation::parse(std::string_view text) {
  std::vector<std::uint8_t> img;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  if (i >= text.size() || text[i] != '[')
    throw std::invalid_argument("transformation must start with '['");
  ++i;
  while (true) {
    skip_ws();
    if (i < text.size() && text[i] == ']') break;
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc())
      throw std::invalid_argument("expected image value");
    i = static_cast<std::size_t>(ptr - text.data());
    if (value < 1 || value > 255)
      throw std::invalid_argument("image value out of range");
    img.push_back(static_cast<std::uint8_t>(value));
    skip_ws();
    if (i < text.size() && text[i] == ',') ++i;
  }
  return from_images(std::move(img));
}

Transformation compose(const Transformation& first, const Transformation& then) {
  if (first.degree() != then.degree())
    throw std::invalid_argument("compose requires equal degrees");
  std::vector<std::uint8_t> img(first.degree());
  for (int v = 1; v <= first.degree(); ++v)
    img[v - 1] = static_cast<std::uint8_t>(then.apply(first.apply(v)));
  return Transformation::from_images(std::move(img));
}

int longest_cycle(const Transformation& t) {
  int n = t.degree();
  if (n == 0) return 0;
  std::vector<int> state(n + 1, 0);  // 0 unseen, 1 on current walk, 2 done
  std::vector<int> pos(n + 1, 0);
  std::vector<int> walk;
  int best = 1;
  for (int v0 = 1; v0 <= n; ++v0) {
    if (state[v0]) continue;
    walk.clear();
    int v = v0;
    while (state[v] == 0) {
      state[v] = 1;
      pos[v] = static_cast<int>(walk.size());
      walk.push_back(v);
      v = t.apply(v);
    }
    if (state[v] == 1) best = std::max(best, static_cast<int>(walk.size()) - pos[v]);
    for (int u : walk) state[u] = 2;
  }
  return best;
}

std::size_t TransformationHash::operator()(const Transformation& t) const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (auto v : t.images()) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace arcsemi
