#include "alc_enumeration.hpp"

#include <algorithm>
#include <array>
#include <cstdint>

namespace ordo::oracle {

namespace {

enum class Op : std::uint8_t { A, B, Top, Bottom, Not, Exists, ForAll, And, Or };

struct Entry {
  Op op;
  std::uint32_t lhs = 0;
  std::uint32_t rhs = 0;
};

constexpr std::size_t kDomain = 3;
constexpr std::uint8_t kFull = 0b111;
// 2 atoms × 3 elements + 1 role × 9 pairs
constexpr std::size_t kInterpretations = std::size_t{1} << 15;
constexpr std::size_t kBlock = 512;

}  // namespace

std::size_t alc_count(std::size_t max_size) {
  std::vector<std::size_t> a(max_size + 1, 0);
  std::size_t total = 0;
  for (std::size_t s = 1; s <= max_size; ++s) {
    if (s == 1) {
      a[s] = 4;
    } else {
      a[s] = 3 * a[s - 1];
      for (std::size_t k = 1; k + 1 < s; ++k) a[s] += 2 * a[k] * a[s - 1 - k];
    }
    total += a[s];
  }
  return total;
}

AlcCorpus enumerate_alc(std::size_t max_size) {
  AlcCorpus out;
  std::vector<Entry> entries;
  std::vector<std::pair<std::size_t, std::size_t>> by_size(max_size + 1);  // [begin, end)

  auto push = [&](Entry e, Concept c, std::size_t size) {
    entries.push_back(e);
    out.concepts.push_back(std::move(c));
    out.sizes.push_back(size);
  };

  for (std::size_t s = 1; s <= max_size; ++s) {
    const std::size_t begin = entries.size();
    if (s == 1) {
      push({Op::A}, Concept::atomic("A"), 1);
      push({Op::B}, Concept::atomic("B"), 1);
      push({Op::Top}, Concept::top(), 1);
      push({Op::Bottom}, Concept::bottom(), 1);
    } else {
      const auto [pb, pe] = by_size[s - 1];
      for (std::size_t i = pb; i < pe; ++i) {
        const auto idx = static_cast<std::uint32_t>(i);
        push({Op::Not, idx}, Concept::negation(out.concepts[i]), s);
        push({Op::Exists, idx}, Concept::exists("R", out.concepts[i]), s);
        push({Op::ForAll, idx}, Concept::forall("R", out.concepts[i]), s);
      }
      for (std::size_t k = 1; k + 1 < s; ++k) {
        const auto [lb, le] = by_size[k];
        const auto [rb, re] = by_size[s - 1 - k];
        for (std::size_t i = lb; i < le; ++i) {
          for (std::size_t j = rb; j < re; ++j) {
            const auto li = static_cast<std::uint32_t>(i);
            const auto rj = static_cast<std::uint32_t>(j);
            push({Op::And, li, rj}, Concept::conjunction({out.concepts[i], out.concepts[j]}), s);
            push({Op::Or, li, rj}, Concept::disjunction({out.concepts[i], out.concepts[j]}), s);
          }
        }
      }
    }
    by_size[s] = {begin, entries.size()};
  }

  // Evaluate every concept in every interpretation, one block of
  // interpretations at a time; a concept is satisfiable iff some extension is
  // non-empty. Models on 1 or 2 elements extend to 3 by copying an element,
  // so the 3-element domain alone decides satisfiability for domains ≤ 3.
  const std::size_t n = entries.size();
  std::vector<std::uint8_t> ext(n * kBlock);
  std::vector<char> sat(n, 0);
  std::vector<std::array<std::uint8_t, 8>> ex_table(kBlock);
  std::vector<std::array<std::uint8_t, 8>> all_table(kBlock);
  std::vector<std::uint8_t> atom_a(kBlock);
  std::vector<std::uint8_t> atom_b(kBlock);

  for (std::size_t base = 0; base < kInterpretations; base += kBlock) {
    for (std::size_t k = 0; k < kBlock; ++k) {
      const std::size_t v = base + k;
      atom_a[k] = static_cast<std::uint8_t>(v & kFull);
      atom_b[k] = static_cast<std::uint8_t>((v >> 3) & kFull);
      std::array<std::uint8_t, kDomain> succ{};
      for (std::size_t x = 0; x < kDomain; ++x) succ[x] = static_cast<std::uint8_t>((v >> (6 + 3 * x)) & kFull);
      for (std::uint8_t m = 0; m < 8; ++m) {
        std::uint8_t ex = 0;
        std::uint8_t all = 0;
        for (std::size_t x = 0; x < kDomain; ++x) {
          if ((succ[x] & m) != 0) ex |= static_cast<std::uint8_t>(1U << x);
          if ((succ[x] & ~m & kFull) == 0) all |= static_cast<std::uint8_t>(1U << x);
        }
        ex_table[k][m] = ex;
        all_table[k][m] = all;
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      std::uint8_t* dst = &ext[i * kBlock];
      const Entry& e = entries[i];
      const std::uint8_t* l = &ext[e.lhs * kBlock];
      const std::uint8_t* r = &ext[e.rhs * kBlock];
      switch (e.op) {
        case Op::A: std::copy(atom_a.begin(), atom_a.end(), dst); break;
        case Op::B: std::copy(atom_b.begin(), atom_b.end(), dst); break;
        case Op::Top: std::fill(dst, dst + kBlock, kFull); break;
        case Op::Bottom: std::fill(dst, dst + kBlock, std::uint8_t{0}); break;
        case Op::Not:
          for (std::size_t k = 0; k < kBlock; ++k) dst[k] = static_cast<std::uint8_t>(l[k] ^ kFull);
          break;
        case Op::Exists:
          for (std::size_t k = 0; k < kBlock; ++k) dst[k] = ex_table[k][l[k]];
          break;
        case Op::ForAll:
          for (std::size_t k = 0; k < kBlock; ++k) dst[k] = all_table[k][l[k]];
          break;
        case Op::And:
          for (std::size_t k = 0; k < kBlock; ++k) dst[k] = static_cast<std::uint8_t>(l[k] & r[k]);
          break;
        case Op::Or:
          for (std::size_t k = 0; k < kBlock; ++k) dst[k] = static_cast<std::uint8_t>(l[k] | r[k]);
          break;
      }
      if (!sat[i]) {
        std::uint8_t any = 0;
        for (std::size_t k = 0; k < kBlock; ++k) any |= dst[k];
        sat[i] = any != 0 ? 1 : 0;
      }
    }
  }
  out.satisfiable.assign(sat.begin(), sat.end());
  return out;
}

}  // namespace ordo::oracle
