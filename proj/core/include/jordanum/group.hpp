#pragma once

#include <concepts>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "jordanum/error.hpp"
#include "jordanum/number_theory.hpp"

namespace jordanum {

template <class E>
concept GroupElement = requires(const E& a, const E& b) {
  { a * b } -> std::convertible_to<E>;
  { a.inverse() } -> std::convertible_to<E>;
  { a.identity() } -> std::convertible_to<E>;
  { a.key() } -> std::convertible_to<std::string>;
};

using Index = std::uint32_t;
// Sorted element indices.
using Subgroup = std::vector<Index>;

struct Fingerprint {
  std::size_t order = 0;
  std::map<i64, std::size_t> order_counts;
  std::size_t center = 0;
  std::size_t derived = 0;
  bool abelian = false;
  bool simple = false;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
  std::string to_string() const;
};

// A finite group given by its Cayley table; element 0 is the identity.
class FiniteGroup {
 public:
  FiniteGroup(std::size_t order, std::vector<Index> table, std::vector<Index> generators);

  std::size_t order() const { return n_; }
  Index mul(Index a, Index b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  Index inv(Index a) const { return inverse_[a]; }
  // g x g^-1
  Index conj(Index g, Index x) const { return mul(mul(g, x), inverse_[g]); }
  const std::vector<Index>& generators() const { return generators_; }

  i64 element_order(Index a) const { return orders()[a]; }
  const std::vector<i64>& orders() const;
  const std::vector<Subgroup>& conjugacy_classes() const;
  const Subgroup& center() const;
  const Subgroup& derived_subgroup() const;
  // Complete list, sorted by size then lexicographically.
  const std::vector<Subgroup>& normal_subgroups() const;

  Subgroup generated(const std::vector<Index>& gens) const;
  Subgroup normal_closure(const std::vector<Index>& seed) const;
  // Product set of two normal subgroups.
  Subgroup join_normal(const Subgroup& a, const Subgroup& b) const;

  bool is_abelian() const;
  bool is_simple() const;
  bool is_subgroup(const Subgroup& s) const;
  bool is_normal(const Subgroup& s) const;
  bool commutes_elementwise(const Subgroup& s) const;

 private:
  struct Cache;
  std::size_t n_;
  std::vector<Index> table_;
  std::vector<Index> inverse_;
  std::vector<Index> generators_;
  std::shared_ptr<Cache> cache_;
};

// min [G : N] over abelian normal subgroups N.
i64 jordan_bruteforce(const FiniteGroup& g);

Fingerprint fingerprint(const FiniteGroup& g);

// Elements of the closure in discovery order; elements[0] is the identity
// and generators[k] is the index of the k-th input generator.
template <GroupElement E>
struct ClosedGroup {
  std::vector<E> elements;
  std::vector<Index> generators;
  FiniteGroup group;

  std::size_t order() const { return elements.size(); }
};

std::size_t default_cap();  // 4096, or JORDANUM_CAP when set

// Elements carrying a cyclotomic level are lifted to a common one so that
// equal values get equal keys.
template <GroupElement E>
std::vector<E> harmonize(std::vector<E> xs) {
  if constexpr (requires(const E& e) {
                  { e.level() } -> std::convertible_to<i64>;
                  { e.lifted(i64{1}) } -> std::convertible_to<E>;
                }) {
    i64 M = 1;
    for (const auto& x : xs) M = lcm(M, x.level());
    for (auto& x : xs) x = x.lifted(M);
  }
  return xs;
}

template <GroupElement E>
ClosedGroup<E> close(const std::vector<E>& input, std::size_t cap = default_cap()) {
  const std::vector<E> gens = harmonize(input);
  if (gens.empty()) throw Error(Errc::BadParameters, "closure needs at least one generator");
  if (cap < 1) throw Error(Errc::BadParameters, "cap must be positive");
  std::vector<E> elements{gens.front().identity()};
  std::unordered_map<std::string, Index> index{{elements.front().key(), 0}};
  std::vector<Index> parent{0};
  std::vector<Index> via{0};
  std::vector<Index> gen_index;
  for (const auto& g : gens) {
    auto [it, fresh] = index.try_emplace(g.key(), static_cast<Index>(elements.size()));
    if (fresh) {
      elements.push_back(g);
      parent.push_back(0);
      via.push_back(static_cast<Index>(gen_index.size()));
    }
    gen_index.push_back(it->second);
  }
  if (elements.size() > cap) throw Error(Errc::CapExceeded, "group order exceeds cap " + std::to_string(cap));
  const std::size_t ng = gens.size();
  std::vector<Index> right;  // right[x * ng + k] = x * gens[k]
  for (std::size_t x = 0; x < elements.size(); ++x) {
    for (std::size_t k = 0; k < ng; ++k) {
      E y = elements[x] * gens[k];
      auto [it, fresh] = index.try_emplace(y.key(), static_cast<Index>(elements.size()));
      if (fresh) {
        if (elements.size() >= cap)
          throw Error(Errc::CapExceeded, "group order exceeds cap " + std::to_string(cap));
        elements.push_back(std::move(y));
        parent.push_back(static_cast<Index>(x));
        via.push_back(static_cast<Index>(k));
      }
      right.push_back(it->second);
    }
  }
  const std::size_t n = elements.size();
  // Every non-generator element b was discovered as parent(b) * gens[via(b)],
  // so row a of the table follows from earlier columns.
  std::vector<Index> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    Index* row = &table[a * n];
    row[0] = static_cast<Index>(a);
    for (std::size_t b = 1; b < n; ++b) row[b] = right[static_cast<std::size_t>(row[parent[b]]) * ng + via[b]];
  }
  FiniteGroup group(n, std::move(table), gen_index);
  return ClosedGroup<E>{std::move(elements), std::move(gen_index), std::move(group)};
}

// Signed 1-based generator indices; -k is the inverse of generator k.
using Word = std::vector<int>;

// Parses words such as "x^5", "(xy)^3" or "a b^-1". Letters are looked up in
// `alphabet`. Throws BadWord.
Word parse_word(std::string_view text, std::string_view alphabet);

template <GroupElement E>
E evaluate_word(const std::vector<E>& input, const Word& w) {
  const std::vector<E> gens = harmonize(input);
  if (gens.empty()) throw Error(Errc::BadWord, "no generators");
  E acc = gens.front().identity();
  for (int s : w) {
    const std::size_t k = static_cast<std::size_t>(s < 0 ? -s : s);
    if (k == 0 || k > gens.size()) throw Error(Errc::BadWord, "generator index out of range");
    acc = acc * (s < 0 ? gens[k - 1].inverse() : gens[k - 1]);
  }
  return acc;
}

template <GroupElement E>
bool satisfies_relations(const std::vector<E>& input, const std::vector<Word>& relations) {
  const std::vector<E> gens = harmonize(input);
  if (gens.empty()) throw Error(Errc::BadWord, "no generators");
  const std::string id = gens.front().identity().key();
  for (const auto& w : relations)
    if (evaluate_word(gens, w).key() != id) return false;
  return true;
}

template <GroupElement E>
bool satisfies_relations(const std::vector<E>& gens, const std::vector<std::string>& relations,
                         std::string_view alphabet) {
  std::vector<Word> words;
  for (const auto& r : relations) words.push_back(parse_word(r, alphabet));
  return satisfies_relations(gens, words);
}

// One line per element: "<order>\t<element>".
template <GroupElement E>
std::string dump(const ClosedGroup<E>& g) {
  std::string out;
  for (std::size_t k = 0; k < g.elements.size(); ++k) {
    out += std::to_string(g.group.element_order(static_cast<Index>(k)));
    out += '\t';
    out += g.elements[k].to_string();
    out += '\n';
  }
  return out;
}

}  // namespace jordanum
