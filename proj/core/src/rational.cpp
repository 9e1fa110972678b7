#include "jordanum/rational.hpp"

#include <cctype>

#include "jordanum/error.hpp"

namespace jordanum {

Rational make_rational(std::int64_t num, std::int64_t den) {
  return make_rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(Errc::ZeroInput, "rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(const std::string& text) {
  auto is_int = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  auto to_int = [](const std::string& s) {
    return Integer(s[0] == '+' ? s.substr(1) : s, 10);
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_int(text)) throw Error(Errc::ParseError, "not a rational: '" + text + "'");
    return Rational(to_int(text));
  }
  std::string num = text.substr(0, slash);
  std::string den = text.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+')
    throw Error(Errc::ParseError, "not a rational: '" + text + "'");
  return make_rational(to_int(num), to_int(den));
}

namespace {

constexpr unsigned long kTrialBound = 1000000;

// Splits n > 0 into (squarefree part, square root of the square part).
std::pair<Integer, Integer> split_square(Integer n) {
  Integer sf = 1;
  Integer root = 1;
  for (unsigned long p = 2; p <= kTrialBound && Integer(p) * p <= n; p += (p == 2 ? 1 : 2)) {
    int e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      n /= p;
      ++e;
    }
    for (int k = 0; k < e / 2; ++k) root *= p;
    if (e % 2) sf *= p;
  }
  if (n > 1) {
    if (mpz_perfect_square_p(n.get_mpz_t())) {
      Integer s;
      mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
      root *= s;
    } else if (n < Integer(kTrialBound) * kTrialBound) {
      sf *= n;  // n is prime
    } else {
      throw Error(Errc::OutOfRange, "radicand too large to factor: " + n.get_str());
    }
  }
  return {sf, root};
}

}  // namespace

SquarefreeDecomposition squarefree_part(const Rational& r) {
  if (r == 0) throw Error(Errc::ZeroInput, "squarefree part of zero");
  // r = n/d = (n*d) / d^2
  Integer nd = abs(r.get_num()) * r.get_den();
  auto [sf, root] = split_square(nd);
  if (!sf.fits_slong_p()) throw Error(Errc::OutOfRange, "squarefree part exceeds 64 bits");
  std::int64_t s = sf.get_si();
  if (r < 0) s = -s;
  return {s, make_rational(root, r.get_den())};
}

}  // namespace jordanum
