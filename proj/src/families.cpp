#include "numsg/families.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace numsg {

std::vector<std::int64_t> AasSpec::generators() const {
  std::vector<std::int64_t> gens;
  for (std::int64_t i = 0; i <= p + 1; ++i) gens.push_back(m0 + rho * i);
  gens.push_back(n);
  return gens;
}

Semigroup aas_semigroup(const AasSpec& spec) {
  if (spec.m0 < 2 || spec.rho < 1 || spec.p < 0 || spec.n < 2)
    throw error("BadInput", "AAS parameters require m0 >= 2, rho >= 1, p >= 0, n >= 2");
  const std::int64_t g = std::gcd(std::gcd(spec.rho, spec.m0), spec.n);
  if (g != 1)
    throw error("NonCoprime", "gcd(rho, m0, n) = " + std::to_string(g));
  return Semigroup::from_generators(spec.generators());
}

AperySet apery_set_suzuki_form(std::int64_t a) {
  if (a < 1 || (a & (a - 1)) != 0)
    throw error("NotPowerOfTwo", "a must be 1 or a power of two, got " + std::to_string(a));
  AperySet out;
  if (a == 1) {
    out.base = 2;
    out.elements = {0, 3};
    out.max_element = 3;
    return out;
  }
  const std::int64_t m0 = 2 * a * a;
  const std::int64_t m1 = m0 + a;
  const std::int64_t m2 = m0 + 2 * a;
  const std::int64_t n = m2 + 1;
  out.base = m0;
  // g_0 = 0; for t >= 1, t = 2*q + r with r in {1,2}, g_t = q*m2 + m_r.
  for (std::int64_t t = 0; t <= 2 * a - 1; ++t) {
    std::int64_t g_t = 0;
    if (t > 0) {
      const std::int64_t r = ((t - 1) % 2) + 1;
      const std::int64_t q = (t - r) / 2;
      g_t = q * m2 + (r == 1 ? m1 : m2);
    }
    for (std::int64_t h = 0; h <= a - 1; ++h) out.elements.push_back(g_t + h * n);
  }
  std::sort(out.elements.begin(), out.elements.end());
  out.max_element = out.elements.back();
  return out;
}

Semigroup suzuki(std::int64_t n) {
  if (n < 1) throw error("BadInput", "Suzuki parameter n must be >= 1");
  const std::int64_t a = std::int64_t{1} << n;
  const std::int64_t b = 2 * a * a;
  return Semigroup::from_generators({b, b + a, b + 2 * a, b + 2 * a + 1});
}

bool symmetric_via_apery(const Semigroup& s) {
  if (s.is_naturals()) throw error("SemigroupIsN", "pairing undefined for N");
  const std::vector<std::int64_t> apery = s.apery_set(s.multiplicity());
  const std::int64_t top = apery.back();
  const std::set<std::int64_t> lookup(apery.begin(), apery.end());
  for (std::int64_t w : apery)
    if (lookup.find(top - w) == lookup.end()) return false;
  return true;
}

namespace {

// Depth-first walk of the semigroup tree: children of S are S minus one
// minimal generator exceeding the Frobenius number.
class GenusTree {
 public:
  GenusTree(std::int64_t g_max, std::vector<std::vector<std::vector<std::int64_t>>>& buckets)
      : g_max_(g_max), buckets_(buckets) {
    member_.assign(static_cast<std::size_t>(4 * g_max_ + 6), true);
  }

  void run() { visit(0, 0, 1); }

 private:
  bool is_minimal_generator(std::int64_t x, std::int64_t e) const {
    for (std::int64_t a = e; a <= x - a; ++a)
      if (member_[static_cast<std::size_t>(a)] && member_[static_cast<std::size_t>(x - a)])
        return false;
    return true;
  }

  void visit(std::int64_t genus, std::int64_t c, std::int64_t e) {
    buckets_[static_cast<std::size_t>(genus)].push_back(gap_path_);
    if (genus == g_max_) return;
    const std::int64_t lo = std::max<std::int64_t>(c, 1);
    const std::int64_t hi = std::max<std::int64_t>(c + e - 1, 1);
    for (std::int64_t x = lo; x <= hi; ++x) {
      if (!member_[static_cast<std::size_t>(x)] || !is_minimal_generator(x, e)) continue;
      member_[static_cast<std::size_t>(x)] = false;
      gap_path_.push_back(x);
      // x == e only happens on the ordinary chain, where the next member is e+1.
      const std::int64_t child_e = (x == e) ? e + 1 : e;
      visit(genus + 1, x + 1, child_e);
      gap_path_.pop_back();
      member_[static_cast<std::size_t>(x)] = true;
    }
  }

  std::int64_t g_max_;
  std::vector<std::vector<std::vector<std::int64_t>>>& buckets_;
  std::vector<bool> member_;
  std::vector<std::int64_t> gap_path_;
};

}  // namespace

void enumerate_by_genus(std::int64_t g_max,
                        const std::function<void(const Semigroup&)>& emit,
                        std::int64_t cap) {
  if (g_max < 0) throw error("BadInput", "genus bound must be nonnegative");
  if (g_max > cap)
    throw error("CapExceeded", "genus bound " + std::to_string(g_max) +
                                   " exceeds the configured cap " + std::to_string(cap));
  std::vector<std::vector<std::vector<std::int64_t>>> buckets(
      static_cast<std::size_t>(g_max) + 1);
  GenusTree(g_max, buckets).run();
  for (auto& bucket : buckets) {
    std::sort(bucket.begin(), bucket.end());
    for (auto& gaps : bucket) {
      if (gaps.empty()) emit(Semigroup::naturals());
      else emit(Semigroup::from_gaps_unchecked(gaps));
    }
  }
}

std::vector<Semigroup> enumerate_collect(std::int64_t g_max, std::int64_t cap) {
  std::vector<Semigroup> out;
  enumerate_by_genus(g_max, [&](const Semigroup& s) { out.push_back(s); }, cap);
  return out;
}

}  // namespace numsg
