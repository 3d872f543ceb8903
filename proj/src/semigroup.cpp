#include "arcsemi/semigroup.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdlib>
#include <sstream>

namespace arcsemi {

std::size_t resolved_element_cap() {
  if (const char* env = std::getenv("ARCSEMI_ELEMENT_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultElementCap;
}

namespace {

constexpr std::uint64_t kLow = 0x0101010101010101ULL;
constexpr std::uint64_t kHigh7 = 0x7f7f7f7f7f7f7f7fULL;

// 16 image bytes (0-based vertices); unused lanes hold 0xff.
struct Packed {
  std::uint64_t w0, w1;
  bool operator==(const Packed&) const = default;
};

struct PackedHash {
  std::size_t operator()(const Packed& p) const {
    std::uint64_t h = p.w0 * 0x9e3779b97f4a7c15ULL;
    h ^= (p.w1 + 0x9e3779b97f4a7c15ULL) * 0xff51afd7ed558ccdULL;
    h ^= h >> 33;
    return static_cast<std::size_t>(h);
  }
};

// Exact per-byte mask: 0xff where the byte of x equals a, else 0.
inline std::uint64_t byte_eq_mask(std::uint64_t x, std::uint64_t a_splat) {
  std::uint64_t y = x ^ a_splat;
  std::uint64_t t = (y & kHigh7) + kHigh7;
  t = ~(t | y | kHigh7);
  return (t >> 7) * 0xff;
}

// Right multiplication by the arc a -> b: rewrite every image byte a to b.
inline Packed apply_arc(const Packed& x, std::uint64_t a_splat, std::uint64_t ab_splat) {
  return {x.w0 ^ (ab_splat & byte_eq_mask(x.w0, a_splat)),
          x.w1 ^ (ab_splat & byte_eq_mask(x.w1, a_splat))};
}

inline int packed_get(const Packed& x, int i) {
  std::uint64_t w = i < 8 ? x.w0 : x.w1;
  return static_cast<int>(w >> ((i & 7) * 8) & 0xff);
}

inline void packed_set(Packed& x, int i, int v) {
  std::uint64_t& w = i < 8 ? x.w0 : x.w1;
  int sh = (i & 7) * 8;
  w = (w & ~(std::uint64_t{0xff} << sh)) | (std::uint64_t(v) << sh);
}

Packed packed_identity(int n) {
  Packed p{~std::uint64_t{0}, ~std::uint64_t{0}};
  for (int v = 0; v < n; ++v) packed_set(p, v, v);
  return p;
}

int packed_longest_cycle(const Packed& p, int n) {
  std::array<std::int8_t, 16> state{};
  std::array<std::int8_t, 16> pos{};
  std::array<std::int8_t, 16> walk{};
  int best = 1;
  for (int v0 = 0; v0 < n; ++v0) {
    if (state[v0]) continue;
    int len = 0, v = v0;
    while (state[v] == 0) {
      state[v] = 1;
      pos[v] = static_cast<std::int8_t>(len);
      walk[len++] = static_cast<std::int8_t>(v);
      v = packed_get(p, v);
    }
    if (state[v] == 1) best = std::max(best, len - pos[v]);
    for (int i = 0; i < len; ++i) state[walk[i]] = 2;
  }
  return best;
}

// Open-addressing set of Packed keys mapping to element indices.
class PackedIndex {
 public:
  explicit PackedIndex(std::size_t expect) { rehash(std::max<std::size_t>(1024, expect * 2)); }

  // Returns the index of key, inserting `fresh` when absent (-1 marker out).
  std::int32_t find_or_insert(const Packed& key, std::int32_t fresh, bool& inserted) {
    if ((occupied_ + 1) * 10 >= capacity_ * 7) rehash(capacity_ * 2);
    std::size_t mask = capacity_ - 1;
    std::size_t i = PackedHash{}(key)&mask;
    while (true) {
      std::int32_t slot = table_[i];
      if (slot < 0) {
        table_[i] = fresh;
        keys_[i] = key;
        ++occupied_;
        inserted = true;
        return fresh;
      }
      if (keys_[i] == key) {
        inserted = false;
        return slot;
      }
      i = (i + 1) & mask;
    }
  }

  std::int32_t find(const Packed& key) const {
    std::size_t mask = capacity_ - 1;
    std::size_t i = PackedHash{}(key)&mask;
    while (true) {
      std::int32_t slot = table_[i];
      if (slot < 0) return -1;
      if (keys_[i] == key) return slot;
      i = (i + 1) & mask;
    }
  }

 private:
  void rehash(std::size_t new_cap) {
    new_cap = std::bit_ceil(new_cap);
    std::vector<std::int32_t> old_table = std::move(table_);
    std::vector<Packed> old_keys = std::move(keys_);
    table_.assign(new_cap, -1);
    keys_.assign(new_cap, Packed{0, 0});
    std::size_t old_cap = capacity_;
    capacity_ = new_cap;
    std::size_t mask = new_cap - 1;
    for (std::size_t i = 0; i < old_cap; ++i) {
      if (old_table[i] < 0) continue;
      std::size_t j = PackedHash{}(old_keys[i])&mask;
      while (table_[j] >= 0) j = (j + 1) & mask;
      table_[j] = old_table[i];
      keys_[j] = old_keys[i];
    }
  }

  std::vector<std::int32_t> table_;
  std::vector<Packed> keys_;
  std::size_t capacity_ = 0;
  std::size_t occupied_ = 0;
};

struct ArcGen {
  std::uint64_t a_splat, ab_splat;
};

std::vector<VertexPair> sorted_arcs(const Digraph& d) {
  auto arcs = d.arcs();
  if (arcs.empty())
    throw std::invalid_argument("semigroup generation requires at least one arc");
  return arcs;
}

struct LeanOutcome {
  std::size_t size = 0;
  int max_cycle = 1;
};

// BFS closure tracking only size and (optionally) the longest cycle seen.
// Stops once max_cycle >= stop_cycle.  Throws CapExceeded past the cap.
LeanOutcome lean_enumerate_packed(const Digraph& d, std::size_t cap, int stop_cycle,
                                  bool track_cycles) {
  int n = d.vertex_count();
  auto arcs = sorted_arcs(d);
  std::vector<ArcGen> gens;
  gens.reserve(arcs.size());
  Packed id = packed_identity(n);
  std::vector<Packed> elements;
  PackedIndex index(std::min<std::size_t>(cap, 1 << 16));
  LeanOutcome out;

  auto push = [&](const Packed& p) -> bool {
    bool inserted = false;
    index.find_or_insert(p, static_cast<std::int32_t>(elements.size()), inserted);
    if (!inserted) return false;
    if (elements.size() >= cap) throw CapExceeded(elements.size());
    elements.push_back(p);
    if (track_cycles) {
      int c = packed_longest_cycle(p, n);
      if (c > out.max_cycle) out.max_cycle = c;
    }
    return true;
  };

  for (auto [a, b] : arcs) {
    std::uint64_t a_splat = std::uint64_t(a - 1) * kLow;
    std::uint64_t ab_splat = std::uint64_t((a - 1) ^ (b - 1)) * kLow;
    gens.push_back({a_splat, ab_splat});
    push(apply_arc(id, a_splat, ab_splat));
    if (track_cycles && out.max_cycle >= stop_cycle) {
      out.size = elements.size();
      return out;
    }
  }

  for (std::size_t head = 0; head < elements.size(); ++head) {
    Packed x = elements[head];
    for (const auto& g : gens) {
      push(apply_arc(x, g.a_splat, g.ab_splat));
      if (track_cycles && out.max_cycle >= stop_cycle) {
        out.size = elements.size();
        return out;
      }
    }
  }
  out.size = elements.size();
  return out;
}

LeanOutcome lean_enumerate_generic(const Digraph& d, std::size_t cap, int stop_cycle,
                                   bool track_cycles) {
  int n = d.vertex_count();
  auto arcs = sorted_arcs(d);
  std::vector<Transformation> gens;
  for (auto [a, b] : arcs) gens.push_back(Transformation::arc(a, b, n));
  std::vector<Transformation> elements;
  std::unordered_map<Transformation, std::int32_t, TransformationHash> index;
  LeanOutcome out;

  auto push = [&](Transformation t) -> bool {
    auto [it, inserted] = index.emplace(std::move(t), static_cast<std::int32_t>(elements.size()));
    if (!inserted) return false;
    if (elements.size() >= cap) throw CapExceeded(elements.size());
    elements.push_back(it->first);
    if (track_cycles) out.max_cycle = std::max(out.max_cycle, longest_cycle(it->first));
    return true;
  };

  for (const auto& g : gens) {
    push(g);
    if (track_cycles && out.max_cycle >= stop_cycle) {
      out.size = elements.size();
      return out;
    }
  }
  for (std::size_t head = 0; head < elements.size(); ++head) {
    Transformation x = elements[head];
    for (const auto& g : gens) {
      push(compose(x, g));
      if (track_cycles && out.max_cycle >= stop_cycle) {
        out.size = elements.size();
        return out;
      }
    }
  }
  out.size = elements.size();
  return out;
}

LeanOutcome lean_enumerate(const Digraph& d, std::size_t cap, int stop_cycle,
                           bool track_cycles) {
  if (d.vertex_count() <= 16)
    return lean_enumerate_packed(d, cap, stop_cycle, track_cycles);
  return lean_enumerate_generic(d, cap, stop_cycle, track_cycles);
}

Transformation unpack(const Packed& p, int n) {
  std::vector<std::uint8_t> img(n);
  for (int v = 0; v < n; ++v) img[v] = static_cast<std::uint8_t>(packed_get(p, v) + 1);
  return Transformation::from_images(std::move(img));
}

Packed pack(const Transformation& t) {
  Packed p{~std::uint64_t{0}, ~std::uint64_t{0}};
  for (int v = 0; v < t.degree(); ++v) packed_set(p, v, t.apply(v + 1) - 1);
  return p;
}

// result[v] = x[g[v]]: apply g first, then x.
Packed packed_compose_left(const Packed& g, const Packed& x, int n) {
  Packed r{~std::uint64_t{0}, ~std::uint64_t{0}};
  for (int v = 0; v < n; ++v) packed_set(r, v, packed_get(x, packed_get(g, v)));
  return r;
}

}  // namespace

int SemigroupTable::index_of(const Transformation& t) const {
  auto it = index.find(t);
  return it == index.end() ? -1 : it->second;
}

int SemigroupTable::product(int x, int y) const {
  int result = x;
  // Multiply on the right by the BFS word of y, generator by generator.
  auto word = word_of(y);
  for (int g : word) result = right(result, g);
  return result;
}

std::vector<int> SemigroupTable::word_of(int x) const {
  std::vector<int> word;
  int cur = x;
  while (cur >= 0) {
    word.push_back(word_gen[cur]);
    cur = word_parent[cur];
  }
  std::reverse(word.begin(), word.end());
  return word;
}

std::string SemigroupTable::export_elements() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    bool first = true;
    for (int g : word_of(static_cast<int>(i))) {
      if (!first) os << '*';
      first = false;
      os << '(' << generator_arcs[g].first << "->" << generator_arcs[g].second << ')';
    }
    os << " : " << elements[i].to_string() << '\n';
  }
  return os.str();
}

SemigroupTable generate(const Digraph& d, std::size_t element_cap) {
  int n = d.vertex_count();
  SemigroupTable table;
  table.degree = n;
  table.generator_arcs = sorted_arcs(d);
  for (auto [a, b] : table.generator_arcs)
    table.generators.push_back(Transformation::arc(a, b, n));
  int gens = static_cast<int>(table.generators.size());

  if (n <= 16) {
    std::vector<Packed> pgens;
    std::vector<ArcGen> ops;
    for (auto [a, b] : table.generator_arcs) {
      std::uint64_t a_splat = std::uint64_t(a - 1) * kLow;
      std::uint64_t ab_splat = std::uint64_t((a - 1) ^ (b - 1)) * kLow;
      ops.push_back({a_splat, ab_splat});
      pgens.push_back(pack(table.generators[pgens.size()]));
    }
    std::vector<Packed> elements;
    PackedIndex index(std::min<std::size_t>(element_cap, 1 << 16));
    auto push = [&](const Packed& p) -> std::int32_t {
      bool inserted = false;
      std::int32_t idx =
          index.find_or_insert(p, static_cast<std::int32_t>(elements.size()), inserted);
      if (inserted) {
        if (elements.size() >= element_cap) throw CapExceeded(elements.size());
        elements.push_back(p);
      }
      return idx;
    };
    for (int g = 0; g < gens; ++g) {
      std::size_t before = elements.size();
      push(pgens[g]);
      if (elements.size() > before) {
        table.word_parent.push_back(-1);
        table.word_gen.push_back(g);
      }
    }
    for (std::size_t head = 0; head < elements.size(); ++head) {
      Packed x = elements[head];
      for (int g = 0; g < gens; ++g) {
        std::size_t before = elements.size();
        std::int32_t idx = push(apply_arc(x, ops[g].a_splat, ops[g].ab_splat));
        if (elements.size() > before) {
          table.word_parent.push_back(static_cast<std::int32_t>(head));
          table.word_gen.push_back(g);
        }
        table.right_cayley.push_back(idx);
      }
    }
    table.left_cayley.resize(elements.size() * gens);
    for (std::size_t i = 0; i < elements.size(); ++i)
      for (int g = 0; g < gens; ++g)
        table.left_cayley[i * gens + g] =
            index.find(packed_compose_left(pgens[g], elements[i], n));
    table.elements.reserve(elements.size());
    for (const auto& p : elements) table.elements.push_back(unpack(p, n));
  } else {
    std::vector<Transformation> elements;
    std::unordered_map<Transformation, std::int32_t, TransformationHash> index;
    auto push = [&](Transformation t) -> std::int32_t {
      auto [it, inserted] =
          index.emplace(std::move(t), static_cast<std::int32_t>(elements.size()));
      if (inserted) {
        if (elements.size() >= element_cap) throw CapExceeded(elements.size());
        elements.push_back(it->first);
      }
      return it->second;
    };
    for (int g = 0; g < gens; ++g) {
      std::size_t before = elements.size();
      push(table.generators[g]);
      if (elements.size() > before) {
        table.word_parent.push_back(-1);
        table.word_gen.push_back(g);
      }
    }
    for (std::size_t head = 0; head < elements.size(); ++head) {
      Transformation x = elements[head];
      for (int g = 0; g < gens; ++g) {
        std::size_t before = elements.size();
        std::int32_t idx = push(compose(x, table.generators[g]));
        if (elements.size() > before) {
          table.word_parent.push_back(static_cast<std::int32_t>(head));
          table.word_gen.push_back(g);
        }
        table.right_cayley.push_back(idx);
      }
    }
    table.left_cayley.resize(elements.size() * gens);
    for (std::size_t i = 0; i < elements.size(); ++i)
      for (int g = 0; g < gens; ++g)
        table.left_cayley[i * gens + g] =
            index.at(compose(table.generators[g], elements[i]));
    table.elements = std::move(elements);
  }

  for (std::size_t i = 0; i < table.elements.size(); ++i)
    table.index.emplace(table.elements[i], static_cast<std::int32_t>(i));
  return table;
}

std::size_t semigroup_size(const Digraph& d, std::size_t element_cap) {
  return lean_enumerate(d, element_cap, -1, false).size;
}

int l_brute(const Digraph& d, std::size_t element_cap) {
  // degree - 1 is the largest possible cycle: every element is singular.
  int stop = std::max(1, d.vertex_count() - 1);
  return lean_enumerate(d, element_cap, stop, true).max_cycle;
}

bool l_exceeds(const Digraph& d, int k, std::size_t element_cap) {
  return lean_enumerate(d, element_cap, k + 1, true).max_cycle > k;
}

}  // namespace arcsemi
