#include "oracles.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

#include "monideal/arithmetic.hpp"

namespace oracles {

using monideal::BettiData;
using monideal::Monomial;
using monideal::MonomialIdeal;
using monideal::Ring;

namespace {

struct TaylorLevel {
  std::vector<uint32_t> masks;                 // generator subsets, |S| = k+1
  std::vector<std::vector<int>> multidegrees;  // lcm of the subset
};

std::vector<int> subset_lcm(const std::vector<std::vector<int>>& gens, uint32_t mask) {
  std::vector<int> out(gens[0].size(), 0);
  for (uint32_t rest = mask; rest; rest &= rest - 1) {
    int g = std::countr_zero(rest);
    for (size_t j = 0; j < out.size(); ++j)
      out[j] = std::max(out[j], gens[static_cast<size_t>(g)][j]);
  }
  return out;
}

}  // namespace

BettiData taylor_betti(const MonomialIdeal& I) {
  if (I.is_zero()) throw std::domain_error("Taylor complex of the zero ideal");
  const int r = static_cast<int>(I.generators().size());
  if (r > 20) throw std::invalid_argument("Taylor oracle supports <= 20 generators");
  std::vector<std::vector<int>> gens;
  for (const auto& g : I.generators()) gens.push_back(g.exponents());

  // levels[k]: basis of T_k (subsets of size k+1); mats[k]: T_k -> T_{k-1}
  // as scalar matrices, entry (row a, col b) carrying the implied monomial
  // x^(deg b - deg a). mats[0] is unused (the augmentation has no units).
  std::vector<TaylorLevel> levels(static_cast<size_t>(r));
  for (uint32_t mask = 1; mask < (uint32_t(1) << r); ++mask) {
    size_t k = static_cast<size_t>(std::popcount(mask)) - 1;
    levels[k].masks.push_back(mask);
    levels[k].multidegrees.push_back(subset_lcm(gens, mask));
  }
  std::vector<std::vector<std::vector<mpq_class>>> mats(static_cast<size_t>(r));
  for (int k = 1; k < r; ++k) {
    const auto& lo = levels[static_cast<size_t>(k) - 1];
    const auto& hi = levels[static_cast<size_t>(k)];
    auto& m = mats[static_cast<size_t>(k)];
    m.assign(lo.masks.size(), std::vector<mpq_class>(hi.masks.size(), mpq_class(0)));
    for (size_t b = 0; b < hi.masks.size(); ++b) {
      uint32_t mask = hi.masks[b];
      int pos = 0;
      for (uint32_t rest = mask; rest; rest &= rest - 1, ++pos) {
        uint32_t bit = rest & (~rest + 1u);
        uint32_t sub = mask & ~bit;
        auto it = std::lower_bound(lo.masks.begin(), lo.masks.end(), sub);
        size_t a = static_cast<size_t>(it - lo.masks.begin());
        m[a][b] = (pos % 2 == 0) ? 1 : -1;
      }
    }
  }

  auto degrees_equal = [&](int k, size_t a, size_t b) {
    return levels[static_cast<size_t>(k) - 1].multidegrees[a] ==
           levels[static_cast<size_t>(k)].multidegrees[b];
  };

  // Consecutive cancellation: a unit entry (nonzero scalar between equal
  // multidegrees) splits off an exact pair. Eliminate, then drop row a from
  // level k-1 (and its column in mats[k-1]) and column b from level k (and
  // its row in mats[k+1]).
  for (;;) {
    int fk = -1;
    size_t fa = 0, fb = 0;
    for (int k = 1; k < r && fk < 0; ++k) {
      const auto& m = mats[static_cast<size_t>(k)];
      for (size_t a = 0; a < m.size() && fk < 0; ++a)
        for (size_t b = 0; b < (m.empty() ? 0 : m[a].size()); ++b)
          if (m[a][b] != 0 && degrees_equal(k, a, b)) {
            fk = k;
            fa = a;
            fb = b;
            break;
          }
    }
    if (fk < 0) break;

    auto& m = mats[static_cast<size_t>(fk)];
    const mpq_class pivot = m[fa][fb];
    for (size_t a = 0; a < m.size(); ++a) {
      if (a == fa || m[a][fb] == 0) continue;
      mpq_class f = m[a][fb] / pivot;
      for (size_t b = 0; b < m[a].size(); ++b)
        if (b != fb) m[a][b] -= f * m[fa][b];
    }
    for (auto& row : m) row.erase(row.begin() + static_cast<long>(fb));
    m.erase(m.begin() + static_cast<long>(fa));

    auto& lo = levels[static_cast<size_t>(fk) - 1];
    lo.masks.erase(lo.masks.begin() + static_cast<long>(fa));
    lo.multidegrees.erase(lo.multidegrees.begin() + static_cast<long>(fa));
    if (fk - 1 >= 1) {
      auto& below = mats[static_cast<size_t>(fk) - 1];
      for (auto& row : below) row.erase(row.begin() + static_cast<long>(fa));
    }

    auto& hi = levels[static_cast<size_t>(fk)];
    hi.masks.erase(hi.masks.begin() + static_cast<long>(fb));
    hi.multidegrees.erase(hi.multidegrees.begin() + static_cast<long>(fb));
    if (fk + 1 < r) {
      auto& above = mats[static_cast<size_t>(fk) + 1];
      above.erase(above.begin() + static_cast<long>(fb));
    }
  }

  BettiData data(I.ring());
  for (int k = 0; k < r; ++k)
    for (const auto& deg : levels[static_cast<size_t>(k)].multidegrees)
      data.add(k, deg, 1);
  return data;
}

bool brute_closure_member(const Monomial& m, const MonomialIdeal& I, int s, int rmax) {
  const MonomialIdeal Is = monideal::power(I, s);
  for (int r = 1; r <= rmax; ++r)
    if (monideal::power(Is, r).contains(m.pow(r))) return true;
  return false;
}

std::vector<Monomial> naive_minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (size_t i = 0; i < gens.size(); ++i) {
    bool keep = true;
    for (size_t j = 0; j < gens.size(); ++j)
      if (i != j && divides(gens[j], gens[i])) {
        keep = false;
        break;
      }
    if (keep) out.push_back(gens[i]);
  }
  return out;
}

std::vector<std::vector<int>> naive_minimal_covers(const MonomialIdeal& I) {
  const int n = I.ring().arity();
  if (n > 20) throw std::invalid_argument("naive cover scan supports <= 20 variables");
  std::vector<uint32_t> supports;
  for (const auto& g : I.generators()) {
    uint32_t s = 0;
    for (int j = 0; j < n; ++j)
      if (g.exponent(j) > 0) s |= uint32_t(1) << j;
    supports.push_back(s);
  }
  std::vector<uint32_t> covers;
  for (uint32_t mask = 0; mask < (uint32_t(1) << n); ++mask) {
    bool covers_all = true;
    for (uint32_t s : supports)
      if ((s & mask) == 0) {
        covers_all = false;
        break;
      }
    if (covers_all) covers.push_back(mask);
  }
  std::vector<std::vector<int>> minimal;
  for (uint32_t c : covers) {
    bool is_minimal = true;
    for (uint32_t d : covers)
      if (d != c && (d & ~c) == 0) {
        is_minimal = false;
        break;
      }
    if (!is_minimal) continue;
    std::vector<int> vars;
    for (int j = 0; j < n; ++j)
      if (c & (uint32_t(1) << j)) vars.push_back(j);
    minimal.push_back(std::move(vars));
  }
  std::sort(minimal.begin(), minimal.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return minimal;
}

namespace {

// Weak compositions of d into n parts: C(d + n - 1, n - 1).
long long compositions(int d, int n) {
  if (d < 0) return 0;
  long long out = 1;
  for (int k = 1; k <= n - 1; ++k) out = out * (d + k) / k;
  return out;
}

}  // namespace

long long inclusion_exclusion_count(const MonomialIdeal& I, int d) {
  const int r = static_cast<int>(I.generators().size());
  if (r > 20) throw std::invalid_argument("inclusion-exclusion supports <= 20 generators");
  const int n = I.ring().arity();
  std::vector<std::vector<int>> gens;
  for (const auto& g : I.generators()) gens.push_back(g.exponents());
  long long total = 0;
  for (uint32_t mask = 1; mask < (uint32_t(1) << r); ++mask) {
    std::vector<int> l = subset_lcm(gens, mask);
    int deg = 0;
    for (int e : l) deg += e;
    long long ways = compositions(d - deg, n);
    total += (std::popcount(mask) % 2 == 1) ? ways : -ways;
  }
  return total;
}

long long direct_count(const MonomialIdeal& I, int d) {
  const int n = I.ring().arity();
  long long count = 0;
  std::vector<int> cur(static_cast<size_t>(n), 0);
  std::function<void(int, int)> walk = [&](int j, int left) {
    if (j == n - 1) {
      cur[static_cast<size_t>(j)] = left;
      if (I.contains(Monomial(I.ring(), cur))) ++count;
      cur[static_cast<size_t>(j)] = 0;
      return;
    }
    for (int e = 0; e <= left; ++e) {
      cur[static_cast<size_t>(j)] = e;
      walk(j + 1, left - e);
    }
    cur[static_cast<size_t>(j)] = 0;
  };
  if (n == 0) return 0;
  walk(0, d);
  return count;
}

Monomial random_monomial(const Ring& ring, std::mt19937& rng, int max_exponent,
                         bool squarefree) {
  std::uniform_int_distribution<int> dist(0, squarefree ? 1 : max_exponent);
  for (;;) {
    std::vector<int> e(static_cast<size_t>(ring.arity()));
    for (auto& x : e) x = dist(rng);
    Monomial m(ring, std::move(e));
    if (!m.is_unit()) return m;  // keep generators proper
  }
}

MonomialIdeal random_ideal(const Ring& ring, std::mt19937& rng, int max_gens,
                           int max_exponent, bool squarefree) {
  std::uniform_int_distribution<int> count(1, max_gens);
  int g = count(rng);
  std::vector<Monomial> gens;
  gens.reserve(static_cast<size_t>(g));
  for (int k = 0; k < g; ++k)
    gens.push_back(random_monomial(ring, rng, max_exponent, squarefree));
  return MonomialIdeal(ring, std::move(gens));
}

}  // namespace oracles
