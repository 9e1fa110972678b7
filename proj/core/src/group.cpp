#include "jordanum/group.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <mutex>
#include <set>

namespace jordanum {

struct FiniteGroup::Cache {
  std::once_flag orders_once, classes_once, center_once, derived_once, normal_once;
  std::vector<i64> orders;
  std::vector<Subgroup> classes;
  Subgroup center;
  Subgroup derived;
  std::vector<Subgroup> normal;
};

FiniteGroup::FiniteGroup(std::size_t order, std::vector<Index> table, std::vector<Index> generators)
    : n_(order), table_(std::move(table)), inverse_(order), generators_(std::move(generators)),
      cache_(std::make_shared<Cache>()) {
  if (table_.size() != n_ * n_) throw Error(Errc::BadParameters, "Cayley table has wrong size");
  for (std::size_t a = 0; a < n_; ++a) {
    const Index* row = &table_[a * n_];
    auto it = std::find(row, row + n_, 0u);
    if (it == row + n_) throw Error(Errc::BadParameters, "element without inverse");
    inverse_[a] = static_cast<Index>(it - row);
  }
  if (generators_.empty())
    for (std::size_t a = 1; a < n_; ++a) generators_.push_back(static_cast<Index>(a));
}

const std::vector<i64>& FiniteGroup::orders() const {
  std::call_once(cache_->orders_once, [this] {
    auto& o = cache_->orders;
    o.assign(n_, 0);
    for (std::size_t a = 0; a < n_; ++a) {
      i64 k = 1;
      for (Index x = static_cast<Index>(a); x != 0; x = mul(x, static_cast<Index>(a))) ++k;
      o[a] = k;
    }
  });
  return cache_->orders;
}

const std::vector<Subgroup>& FiniteGroup::conjugacy_classes() const {
  std::call_once(cache_->classes_once, [this] {
    std::vector<bool> seen(n_, false);
    for (std::size_t x = 0; x < n_; ++x) {
      if (seen[x]) continue;
      Subgroup cls;
      for (std::size_t g = 0; g < n_; ++g) {
        Index y = conj(static_cast<Index>(g), static_cast<Index>(x));
        if (!seen[y]) {
          seen[y] = true;
          cls.push_back(y);
        }
      }
      std::sort(cls.begin(), cls.end());
      cache_->classes.push_back(std::move(cls));
    }
  });
  return cache_->classes;
}

const Subgroup& FiniteGroup::center() const {
  std::call_once(cache_->center_once, [this] {
    for (std::size_t x = 0; x < n_; ++x) {
      bool central = true;
      for (Index g : generators_)
        if (mul(g, static_cast<Index>(x)) != mul(static_cast<Index>(x), g)) {
          central = false;
          break;
        }
      if (central) cache_->center.push_back(static_cast<Index>(x));
    }
  });
  return cache_->center;
}

const Subgroup& FiniteGroup::derived_subgroup() const {
  std::call_once(cache_->derived_once, [this] {
    std::vector<Index> comms;
    for (Index a : generators_)
      for (Index b : generators_) comms.push_back(mul(mul(a, b), mul(inv(a), inv(b))));
    cache_->derived = normal_closure(comms);
  });
  return cache_->derived;
}

Subgroup FiniteGroup::generated(const std::vector<Index>& gens) const {
  std::vector<bool> in(n_, false);
  Subgroup out{0};
  in[0] = true;
  std::vector<Index> g;
  for (Index x : gens)
    if (x != 0) g.push_back(x);
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  for (std::size_t k = 0; k < out.size(); ++k)
    for (Index s : g) {
      Index y = mul(out[k], s);
      if (!in[y]) {
        in[y] = true;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup FiniteGroup::normal_closure(const std::vector<Index>& seed) const {
  std::vector<bool> in(n_, false);
  std::vector<Index> gens;
  for (Index x : seed) {
    if (in[x]) continue;
    for (std::size_t g = 0; g < n_; ++g) {
      Index y = conj(static_cast<Index>(g), x);
      if (!in[y]) {
        in[y] = true;
        gens.push_back(y);
      }
    }
  }
  return generated(gens);
}

Subgroup FiniteGroup::join_normal(const Subgroup& a, const Subgroup& b) const {
  std::vector<bool> in(n_, false);
  for (Index x : a)
    for (Index y : b) in[mul(x, y)] = true;
  Subgroup out;
  for (std::size_t x = 0; x < n_; ++x)
    if (in[x]) out.push_back(static_cast<Index>(x));
  return out;
}

const std::vector<Subgroup>& FiniteGroup::normal_subgroups() const {
  std::call_once(cache_->normal_once, [this] {
    std::set<Subgroup> found{Subgroup{0}};
    for (const auto& cls : conjugacy_classes()) found.insert(normal_closure({cls.front()}));
    std::vector<Subgroup> list(found.begin(), found.end());
    // Joins of normal closures of single elements exhaust the normal subgroups.
    for (std::size_t i = 0; i < list.size(); ++i)
      for (std::size_t j = 0; j < i; ++j) {
        if (list[i].size() == n_ || list[j].size() == n_) continue;
        Subgroup s = join_normal(list[i], list[j]);
        if (found.insert(s).second) list.push_back(std::move(s));
      }
    std::sort(list.begin(), list.end(), [](const Subgroup& a, const Subgroup& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    cache_->normal = std::move(list);
  });
  return cache_->normal;
}

bool FiniteGroup::is_abelian() const { return center().size() == n_; }

bool FiniteGroup::is_simple() const { return n_ > 1 && normal_subgroups().size() == 2; }

bool FiniteGroup::is_subgroup(const Subgroup& s) const {
  std::vector<bool> in(n_, false);
  for (Index x : s) in[x] = true;
  if (!in[0]) return false;
  for (Index x : s)
    for (Index y : s)
      if (!in[mul(x, inv(y))]) return false;
  return true;
}

bool FiniteGroup::is_normal(const Subgroup& s) const {
  if (!is_subgroup(s)) return false;
  std::vector<bool> in(n_, false);
  for (Index x : s) in[x] = true;
  for (std::size_t g = 0; g < n_; ++g)
    for (Index x : s)
      if (!in[conj(static_cast<Index>(g), x)]) return false;
  return true;
}

bool FiniteGroup::commutes_elementwise(const Subgroup& s) const {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (mul(s[i], s[j]) != mul(s[j], s[i])) return false;
  return true;
}

i64 jordan_bruteforce(const FiniteGroup& g) {
  i64 best = static_cast<i64>(g.order());
  for (const auto& n : g.normal_subgroups()) {
    i64 index = static_cast<i64>(g.order() / n.size());
    if (index < best && g.commutes_elementwise(n)) best = index;
  }
  return best;
}

Fingerprint fingerprint(const FiniteGroup& g) {
  Fingerprint f;
  f.order = g.order();
  for (i64 o : g.orders()) ++f.order_counts[o];
  f.center = g.center().size();
  f.derived = g.derived_subgroup().size();
  f.abelian = g.is_abelian();
  f.simple = g.is_simple();
  return f;
}

std::string Fingerprint::to_string() const {
  std::string out = "order=" + std::to_string(order) + " orders={";
  bool first = true;
  for (const auto& [o, c] : order_counts) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(o) + ":" + std::to_string(c);
  }
  out += "} center=" + std::to_string(center) + " derived=" + std::to_string(derived);
  out += abelian ? " abelian" : " nonabelian";
  out += simple ? " simple" : "";
  return out;
}

std::size_t default_cap() {
  if (const char* env = std::getenv("JORDANUM_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 4096;
}

namespace {

class WordParser {
 public:
  WordParser(std::string_view text, std::string_view alphabet) : s_(text), alpha_(alphabet) {}

  Word parse() {
    Word w = sequence();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return w;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) {
    throw Error(Errc::BadWord, why + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }

  Word sequence() {
    Word w;
    for (;;) {
      skip();
      if (pos_ >= s_.size() || s_[pos_] == ')') break;
      Word f = factor();
      w.insert(w.end(), f.begin(), f.end());
    }
    return w;
  }

  Word factor() {
    Word base;
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      base = sequence();
      skip();
      if (pos_ >= s_.size() || s_[pos_] != ')') fail("missing ')'");
      ++pos_;
    } else if (c == '1') {
      ++pos_;
    } else {
      auto k = alpha_.find(c);
      if (k == std::string_view::npos) fail(std::string("unknown generator '") + c + "'");
      base.push_back(static_cast<int>(k) + 1);
      ++pos_;
    }
    skip();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      skip();
      bool neg = false;
      if (pos_ < s_.size() && s_[pos_] == '-') {
        neg = true;
        ++pos_;
      }
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected exponent");
      long e = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        e = e * 10 + (s_[pos_] - '0');
        if (e > 100000) fail("exponent too large");
        ++pos_;
      }
      Word unit = base;
      if (neg) {
        std::reverse(unit.begin(), unit.end());
        for (auto& x : unit) x = -x;
      }
      base.clear();
      for (long k = 0; k < e; ++k) base.insert(base.end(), unit.begin(), unit.end());
    }
    return base;
  }

  std::string_view s_;
  std::string_view alpha_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text, std::string_view alphabet) { return WordParser(text, alphabet).parse(); }

}  // namespace jordanum
