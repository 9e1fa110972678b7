#include "jordanum/number_theory.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

#include "jordanum/error.hpp"

namespace jordanum {

i64 gcd(i64 a, i64 b) { return std::gcd(a, b); }

i64 lcm(i64 a, i64 b) {
  if (a == 0 || b == 0) return 0;
  return std::lcm(a, b);
}

i64 residue(i64 h, i64 m) {
  if (m == 1) return 1;
  i64 r = h % m;
  return r < 0 ? r + m : r;
}

i64 mod_pow(i64 base, i64 exp, i64 m) {
  if (m == 1) return 0;
  __int128 result = 1;
  __int128 b = residue(base, m);
  while (exp > 0) {
    if (exp & 1) result = result * b % m;
    b = b * b % m;
    exp >>= 1;
  }
  return static_cast<i64>(result);
}

i64 inverse_mod(i64 a, i64 m) {
  if (m == 1) return 1;
  i64 old_r = residue(a, m), r = m;
  i64 old_s = 1, s = 0;
  while (r != 0) {
    i64 q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
  }
  if (old_r != 1)
    throw Error(Errc::NotCoprime, std::to_string(a) + " is not invertible mod " + std::to_string(m));
  return residue(old_s, m);
}

std::vector<std::pair<i64, int>> factorize(i64 n) {
  std::vector<std::pair<i64, int>> out;
  if (n < 0) n = -n;
  for (i64 p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<i64> divisors(i64 n) {
  std::vector<i64> out{1};
  for (auto [p, e] : factorize(n)) {
    std::size_t count = out.size();
    i64 pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < count; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

i64 euler_phi(i64 n) {
  i64 phi = n;
  for (auto [p, e] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

int mobius(i64 n) {
  int mu = 1;
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

i64 multiplicative_order(i64 a, i64 m) {
  if (gcd(a, m) != 1) throw Error(Errc::NotCoprime, "order of a non-unit");
  if (m == 1) return 1;
  i64 x = residue(a, m);
  i64 k = 1;
  while (x != 1) {
    x = static_cast<i64>(static_cast<__int128>(x) * residue(a, m) % m);
    ++k;
  }
  return k;
}

int kronecker_symbol(i64 a, i64 n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  if (a % 2 == 0 && n % 2 == 0) return 0;
  // strip factors of two from n
  int v = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++v;
  }
  int k = 1;
  if (v % 2 == 1) {
    i64 a8 = residue(a, 8);
    if (a8 == 3 || a8 == 5) k = -k;
  }
  if (n < 0) {
    n = -n;
    if (a < 0) k = -k;
  }
  // now n odd positive: Jacobi symbol (a/n)
  a = residue(a, n);
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      i64 n8 = n % 8;
      if (n8 == 3 || n8 == 5) k = -k;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) k = -k;
    a %= n;
  }
  return n == 1 ? k : 0;
}

std::vector<i64> units(i64 m) {
  if (m == 1) return {1};
  std::vector<i64> out;
  for (i64 h = 1; h < m; ++h)
    if (gcd(h, m) == 1) out.push_back(h);
  return out;
}

std::vector<i64> preimage(const std::vector<i64>& H, i64 m, i64 M) {
  std::vector<i64> out;
  for (i64 h : units(M))
    if (std::binary_search(H.begin(), H.end(), residue(h, m))) out.push_back(h);
  return out;
}

std::vector<i64> generated_subgroup(const std::vector<i64>& gens, i64 m) {
  std::set<i64> seen{residue(1, m)};
  std::vector<i64> frontier{residue(1, m)};
  while (!frontier.empty()) {
    std::vector<i64> next;
    for (i64 x : frontier)
      for (i64 g : gens) {
        i64 y = residue(static_cast<i64>(static_cast<__int128>(x) * residue(g, m) % std::max<i64>(m, 1)), m);
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::vector<i64> subgroup_generators(const std::vector<i64>& elements, i64 m) {
  std::vector<i64> gens;
  std::vector<i64> span{residue(1, m)};
  for (i64 h : elements) {
    if (std::binary_search(span.begin(), span.end(), h)) continue;
    gens.push_back(h);
    span = generated_subgroup(gens, m);
  }
  return gens;
}

bool is_multiplicatively_closed(const std::vector<i64>& H, i64 m) {
  for (i64 a : H)
    for (i64 b : H)
      if (!std::binary_search(H.begin(), H.end(), residue(a * b, m))) return false;
  return true;
}

}  // namespace jordanum
