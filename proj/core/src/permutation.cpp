#include "jordanum/permutation.hpp"

#include <numeric>

#include "jordanum/error.hpp"

namespace jordanum {

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size());
  for (auto x : images_) {
    if (x >= images_.size() || seen[x]) throw Error(Errc::BadParameters, "not a permutation");
    seen[x] = true;
  }
}

Permutation Permutation::identity_of(std::size_t n) {
  std::vector<std::uint32_t> v(n);
  std::iota(v.begin(), v.end(), 0u);
  return Permutation(std::move(v));
}

Permutation Permutation::from_cycles(std::size_t n, const std::vector<std::vector<std::uint32_t>>& cycles) {
  std::vector<std::uint32_t> v(n);
  std::iota(v.begin(), v.end(), 0u);
  for (const auto& c : cycles)
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] < 1 || c[k] > n) throw Error(Errc::BadParameters, "cycle entry out of range");
      v[c[k] - 1] = c[(k + 1) % c.size()] - 1;
    }
  return Permutation(std::move(v));
}

Permutation Permutation::operator*(const Permutation& o) const {
  if (o.degree() != degree()) throw Error(Errc::BadParameters, "degree mismatch");
  std::vector<std::uint32_t> v(images_.size());
  for (std::size_t x = 0; x < v.size(); ++x) v[x] = o.images_[images_[x]];
  Permutation p;
  p.images_ = std::move(v);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> v(images_.size());
  for (std::size_t x = 0; x < v.size(); ++x) v[images_[x]] = static_cast<std::uint32_t>(x);
  Permutation p;
  p.images_ = std::move(v);
  return p;
}

bool Permutation::is_even() const {
  std::vector<bool> seen(images_.size());
  std::size_t transpositions = 0;
  for (std::size_t s = 0; s < images_.size(); ++s) {
    if (seen[s]) continue;
    std::size_t len = 0;
    for (std::size_t x = s; !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

std::string Permutation::key() const {
  std::string k;
  for (auto x : images_) {
    k += std::to_string(x);
    k += ',';
  }
  return k;
}

std::string Permutation::to_string() const {
  std::string out;
  std::vector<bool> seen(images_.size());
  for (std::size_t s = 0; s < images_.size(); ++s) {
    if (seen[s] || images_[s] == s) continue;
    out += '(';
    for (std::size_t x = s; !seen[x]; x = images_[x]) {
      seen[x] = true;
      if (x != s) out += ' ';
      out += std::to_string(x + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::vector<Permutation> symmetric_generators(std::size_t n) {
  if (n < 2) return {Permutation::identity_of(n)};
  std::vector<std::uint32_t> cyc(n);
  std::iota(cyc.begin(), cyc.end(), 1u);
  return {Permutation::from_cycles(n, {{1, 2}}), Permutation::from_cycles(n, {cyc})};
}

std::vector<Permutation> alternating_generators(std::size_t n) {
  if (n < 3) return {Permutation::identity_of(n)};
  std::vector<Permutation> gens;
  for (std::uint32_t k = 3; k <= n; ++k) gens.push_back(Permutation::from_cycles(n, {{1, 2, k}}));
  return gens;
}

std::vector<Permutation> dihedral_generators(std::size_t n) {
  std::vector<std::uint32_t> rot(n), ref(n);
  for (std::size_t k = 0; k < n; ++k) {
    rot[k] = static_cast<std::uint32_t>((k + 1) % n);
    ref[k] = static_cast<std::uint32_t>((n - k) % n);
  }
  return {Permutation(rot), Permutation(ref)};
}

std::vector<Permutation> cyclic_generators(std::size_t n) {
  std::vector<std::uint32_t> rot(n);
  for (std::size_t k = 0; k < n; ++k) rot[k] = static_cast<std::uint32_t>((k + 1) % n);
  return {Permutation(rot)};
}

}  // namespace jordanum
