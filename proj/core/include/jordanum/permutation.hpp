#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace jordanum {

// A bijection of {0, ..., n-1}. Products act left to right: (a * b)(x) =
// b(a(x)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity_of(std::size_t n);
  // Builds from 1-based cycles, e.g. {{1,2,3},{4,5}}.
  static Permutation from_cycles(std::size_t n, const std::vector<std::vector<std::uint32_t>>& cycles);

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator()(std::uint32_t x) const { return images_[x]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  Permutation operator*(const Permutation& o) const;
  Permutation inverse() const;
  Permutation identity() const { return identity_of(images_.size()); }
  bool is_even() const;
  friend bool operator==(const Permutation&, const Permutation&) = default;

  std::string key() const;
  // Disjoint-cycle notation, 1-based; "()" for the identity.
  std::string to_string() const;

 private:
  std::vector<std::uint32_t> images_;
};

std::vector<Permutation> symmetric_generators(std::size_t n);
std::vector<Permutation> alternating_generators(std::size_t n);
std::vector<Permutation> dihedral_generators(std::size_t n);
std::vector<Permutation> cyclic_generators(std::size_t n);

}  // namespace jordanum
