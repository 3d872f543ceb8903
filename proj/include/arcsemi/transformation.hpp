#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace arcsemi {

// A transformation of {1..n}, acting on the right: v * t = t.apply(v).
class Transformation {
 public:
  Transformation() = default;
  static Transformation identity(int n);
  static Transformation arc(int a, int b, int n);  // a -> b, fixes the rest
  static Transformation from_images(std::vector<std::uint8_t> images);  // 1-based

  int degree() const { return static_cast<int>(img_.size()); }
  int apply(int v) const { return img_[v - 1]; }
  const std::vector<std::uint8_t>& images() const { return img_; }

  std::vector<int> image() const;                    // sorted distinct values
  std::vector<std::vector<int>> kernel_partition() const;
  int rank() const;

  bool operator==(const Transformation&) const = default;
  auto operator<=>(const Transformation&) const = default;

  std::string to_string() const;  // "[2, 2, 3]"
  static Transformation parse(std::string_view text);

 private:
  std::vector<std::uint8_t> img_;
};

// Left-to-right composition: v (compose(f, g)) = (v f) g.
Transformation compose(const Transformation& first, const Transformation& then);

// Length of the longest cycle among periodic points; >= 1 (fixed points are
// cycles of length 1).
int longest_cycle(const Transformation& t);

struct TransformationHash {
  std::size_t operator()(const Transformation& t) const;
};

}  // namespace arcsemi
