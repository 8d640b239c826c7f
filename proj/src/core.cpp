#include "numsg/core.hpp"

#include <algorithm>
#include <numeric>

namespace numsg {

namespace {

constexpr std::int64_t kGeneratorCap = std::int64_t{1} << 20;
constexpr std::int64_t kSieveCap = std::int64_t{1} << 26;

std::string join(const std::vector<std::int64_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

void Semigroup::rebuild_membership() {
  // B = max(2c, 2d+2)+1 covers every nu/table query; beyond B the n >= c
  // rule answers.
  std::int64_t c = conductor_;
  std::int64_t d = 0;
  if (c > 0) {
    d = c - 1;
    while (d > 0 && std::binary_search(gaps_.begin(), gaps_.end(), d)) --d;
  }
  std::int64_t bound = std::max<std::int64_t>({2 * c, 2 * d + 2, 4}) + 1;
  members_.assign(static_cast<std::size_t>(bound) + 1, true);
  for (std::int64_t g : gaps_) members_[static_cast<std::size_t>(g)] = false;
}

Semigroup Semigroup::naturals() {
  Semigroup s;
  s.conductor_ = 0;
  s.rebuild_membership();
  return s;
}

Semigroup Semigroup::from_gaps_unchecked(std::vector<std::int64_t> gaps) {
  Semigroup s;
  s.gaps_ = std::move(gaps);
  s.conductor_ = s.gaps_.empty() ? 0 : s.gaps_.back() + 1;
  s.rebuild_membership();
  return s;
}

Semigroup Semigroup::from_gaps(const std::vector<std::int64_t>& gaps) {
  if (gaps.empty()) throw error("SemigroupIsN", "gap set is empty: S would be N");
  std::vector<std::int64_t> sorted = gaps;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.front() < 1)
    throw error("BadInput", "gaps must be positive integers");
  if (sorted.back() > kGeneratorCap)
    throw error("GeneratorTooLarge", "gap exceeds the 2^20 input cap");

  std::int64_t c = sorted.back() + 1;
  std::vector<bool> member(static_cast<std::size_t>(c) + 1, true);
  for (std::int64_t g : sorted) member[static_cast<std::size_t>(g)] = false;
  // Closure: sums of two nonzero members below c must not be gaps.
  for (std::int64_t a = 1; a < c; ++a) {
    if (!member[static_cast<std::size_t>(a)]) continue;
    for (std::int64_t b = a; a + b < c; ++b) {
      if (!member[static_cast<std::size_t>(b)]) continue;
      if (!member[static_cast<std::size_t>(a + b)])
        throw not_closed_error(a, b,
                               "members " + std::to_string(a) + " and " + std::to_string(b) +
                                   " sum to the gap " + std::to_string(a + b));
    }
  }
  return from_gaps_unchecked(std::move(sorted));
}

Semigroup Semigroup::from_generators(const std::vector<std::int64_t>& gens) {
  if (gens.empty()) throw error("EmptyGenerators", "at least one generator required");
  for (std::int64_t g : gens) {
    if (g < 1) throw error("BadInput", "generators must be positive integers");
    if (g > kGeneratorCap)
      throw error("GeneratorTooLarge",
                  "generator " + std::to_string(g) + " exceeds the 2^20 input cap");
  }
  std::int64_t g0 = 0;
  for (std::int64_t g : gens) g0 = std::gcd(g0, g);
  if (g0 != 1)
    throw error("NonCoprimeGenerators",
                "gcd(" + join(gens) + ") = " + std::to_string(g0) + ", complement infinite");
  std::int64_t e = *std::min_element(gens.begin(), gens.end());
  if (e == 1) throw error("SemigroupIsN", "generators include 1: S would be N");

  // Sieve the closure, growing until a run of e consecutive members shows up;
  // everything at or beyond such a run is a member.
  std::int64_t bound = 256;
  for (;;) {
    std::vector<bool> member(static_cast<std::size_t>(bound), false);
    member[0] = true;
    for (std::int64_t n = 1; n < bound; ++n) {
      for (std::int64_t g : gens) {
        if (g <= n && member[static_cast<std::size_t>(n - g)]) {
          member[static_cast<std::size_t>(n)] = true;
          break;
        }
      }
    }
    std::int64_t run = 0;
    std::int64_t run_start = -1;
    for (std::int64_t n = 0; n < bound; ++n) {
      run = member[static_cast<std::size_t>(n)] ? run + 1 : 0;
      if (run == e) {
        run_start = n - e + 1;
        break;
      }
    }
    if (run_start >= 0) {
      std::vector<std::int64_t> gaps;
      for (std::int64_t n = 1; n < run_start; ++n)
        if (!member[static_cast<std::size_t>(n)]) gaps.push_back(n);
      if (gaps.empty()) throw error("SemigroupIsN", "closure is all of N");
      return from_gaps_unchecked(std::move(gaps));
    }
    if (bound >= kSieveCap)
      throw error("CapExceeded", "closure sieve bound exceeded for generators " + join(gens));
    bound *= 4;
  }
}

std::int64_t Semigroup::multiplicity() const noexcept {
  if (conductor_ == 0) return 1;
  std::int64_t n = 1;
  while (!contains(n)) ++n;
  return n;
}

std::int64_t Semigroup::dominant() const {
  if (is_naturals()) throw error("SemigroupIsN", "dominant undefined for N");
  std::int64_t d = conductor_ - 1;
  while (d > 0 && !contains(d)) --d;
  return d;
}

std::int64_t Semigroup::next_member(std::int64_t n) const noexcept {
  std::int64_t x = std::max<std::int64_t>(n + 1, 0);
  while (!contains(x)) ++x;
  return x;
}

std::vector<std::int64_t> Semigroup::small_members() const {
  std::vector<std::int64_t> out;
  for (std::int64_t n = 0; n < conductor_; ++n)
    if (contains(n)) out.push_back(n);
  if (conductor_ == 0) out.push_back(0);
  return out;
}

std::vector<std::int64_t> Semigroup::minimal_generators() const {
  if (is_naturals()) return {1};
  std::int64_t e = multiplicity();
  std::vector<std::int64_t> out;
  for (std::int64_t x = e; x <= conductor_ + e - 1; ++x) {
    if (!contains(x)) continue;
    bool decomposable = false;
    for (std::int64_t a = e; a <= x - a; ++a) {
      if (contains(a) && contains(x - a)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) out.push_back(x);
  }
  return out;
}

std::vector<std::int64_t> Semigroup::apery_set(std::int64_t base) const {
  if (base <= 0 || !contains(base))
    throw error("BadInput", "Apery base must be a nonzero member");
  std::vector<std::int64_t> out;
  for (std::int64_t w = 0; w <= conductor_ + base - 1; ++w)
    if (contains(w) && !contains(w - base)) out.push_back(w);
  return out;
}

namespace {

// c', d' and friends used by several extraction routines.
struct Marks {
  std::int64_t e, c, d, c_sub;
  std::optional<std::int64_t> d_prime;
};

Marks marks_of(const Semigroup& s) {
  if (s.is_naturals()) throw error("SemigroupIsN", "invariants undefined for N");
  Marks m{};
  m.e = s.multiplicity();
  m.c = s.conductor();
  m.d = s.dominant();
  // Start of the gap-free run ending at d.
  m.c_sub = m.d;
  while (m.c_sub > 0 && s.contains(m.c_sub - 1)) --m.c_sub;
  if (m.c_sub > 0) {
    std::int64_t dp = m.c_sub - 1;
    while (!s.contains(dp)) --dp;
    m.d_prime = dp;
  }
  return m;
}

}  // namespace

std::vector<std::int64_t> holes(const Semigroup& s) {
  Marks m = marks_of(s);
  std::vector<std::int64_t> out;
  for (std::int64_t x = m.c - m.e; x <= m.c_sub; ++x)
    if (x >= 0 && !s.contains(x)) out.push_back(x);
  return out;
}

std::pair<std::int64_t, std::int64_t> s_tilde(const Semigroup& s) {
  Marks m = marks_of(s);
  std::int64_t ell = m.c - 1 - m.d;
  for (std::int64_t x = m.d; x >= 0; --x) {
    if (s.contains(x) && !s.contains(x - ell)) return {x, m.d - x};
  }
  throw error("BadInput", "no qualifying member for s_tilde");  // unreachable
}

ClassFlags classify(const Semigroup& s) {
  Marks m = marks_of(s);
  ClassFlags f;
  f.ordinary = (m.d == 0);
  if (f.ordinary) {
    f.acute = true;
  } else {
    f.acute = (m.c - m.d) <= (m.c_sub - *m.d_prime);
  }
  f.symmetric = true;
  for (std::int64_t x = 0; x < m.c; ++x) {
    if (s.contains(x) == s.contains(m.c - 1 - x)) {
      f.symmetric = false;
      break;
    }
  }
  return f;
}

InvariantRecord invariants(const Semigroup& s) {
  Marks m = marks_of(s);
  InvariantRecord r;
  r.e = m.e;
  r.c = m.c;
  r.d = m.d;
  r.c_sub = m.c_sub;
  r.d_prime = m.d_prime;
  r.k = m.d - m.c_sub;
  if (m.d_prime) r.q = m.d - *m.d_prime;
  r.ell = m.c - 1 - m.d;
  r.genus = s.genus();

  // tau: gaps b with b + (S \ {0}) in S; checking members up to c suffices,
  // b + s >= c holds automatically for s >= c.
  r.tau = 0;
  for (std::int64_t b : s.gaps()) {
    bool pseudo_frobenius = true;
    for (std::int64_t x = m.e; x <= m.c && pseudo_frobenius; ++x)
      if (s.contains(x) && !s.contains(b + x)) pseudo_frobenius = false;
    if (pseudo_frobenius) ++r.tau;
  }

  auto [st, t] = s_tilde(s);
  r.s_tilde = st;
  r.t = t;
  r.holes = holes(s);

  ClassFlags f = classify(s);
  r.ordinary = f.ordinary;
  r.acute = f.acute;
  r.symmetric = f.symmetric;
  return r;
}

}  // namespace numsg
