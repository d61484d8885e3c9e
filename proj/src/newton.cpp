#include "monideal/newton.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <climits>
#include <functional>
#include <optional>
#include <stdexcept>

#include "monideal/arithmetic.hpp"

namespace monideal {

namespace {

// Membership of a in the Newton polyhedron of the generators V is the LP
//   lambda >= 0, sum lambda_i = 1, sum lambda_i v_i <= a,
// solved as max z = sum lambda_i over sum lambda + t = 1 (slack t) and the
// coordinate rows with slacks s_j; feasible iff the optimum is exactly 1.
// Bland's rule, exact arithmetic throughout. On infeasibility the final
// reduced costs yield a separating hyperplane (w, c) with w >= 0,
// <w, v_i> >= c for every generator and <w, a> < c.
template <class Q>
struct LpResult {
  bool feasible = false;
  std::vector<std::pair<int, Q>> weights;  // generator index -> lambda
  std::vector<Q> sep_w;
  Q sep_c = Q(0);
};

template <class Q>
LpResult<Q> solve_membership(const std::vector<std::vector<int>>& gens,
                             const std::vector<int>& a) {
  const int m = static_cast<int>(gens.size());
  const int n = static_cast<int>(a.size());
  const int nrows = n + 1;        // row 0: sum lambda + t = 1; rows 1..n: coords
  const int ncols = m + 1 + n;    // lambda_0..m-1, t, s_0..n-1
  const Q zero(0), one(1);

  std::vector<std::vector<Q>> tab(nrows, std::vector<Q>(ncols, zero));
  std::vector<Q> rhs(nrows, zero);
  std::vector<Q> cost(ncols, zero);
  std::vector<int> basis(nrows);
  Q z = zero;

  for (int i = 0; i < m; ++i) tab[0][i] = one;
  tab[0][m] = one;
  rhs[0] = one;
  basis[0] = m;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < m; ++i) tab[j + 1][i] = Q(gens[i][j]);
    tab[j + 1][m + 1 + j] = one;
    rhs[j + 1] = Q(a[j]);
    basis[j + 1] = m + 1 + j;
  }
  for (int i = 0; i < m; ++i) cost[i] = one;

  for (;;) {
    if (z == one) break;
    int e = -1;
    for (int c = 0; c < ncols; ++c)
      if (cost[c] > zero) {
        e = c;
        break;
      }
    if (e < 0) break;  // optimal below 1
    int r = -1;
    Q best = zero;
    for (int i = 0; i < nrows; ++i) {
      if (tab[i][e] > zero) {
        Q ratio = rhs[i] / tab[i][e];
        if (r < 0 || ratio < best || (ratio == best && basis[i] < basis[r])) {
          r = i;
          best = ratio;
        }
      }
    }
    if (r < 0) throw std::logic_error("membership LP unbounded");
    Q p = tab[r][e];
    for (int c = 0; c < ncols; ++c) tab[r][c] = tab[r][c] / p;
    rhs[r] = rhs[r] / p;
    for (int i = 0; i < nrows; ++i) {
      if (i == r) continue;
      Q f = tab[i][e];
      if (f == zero) continue;
      for (int c = 0; c < ncols; ++c) tab[i][c] = tab[i][c] - f * tab[r][c];
      rhs[i] = rhs[i] - f * rhs[r];
    }
    Q f = cost[e];
    if (!(f == zero)) {
      for (int c = 0; c < ncols; ++c) cost[c] = cost[c] - f * tab[r][c];
      z = z + f * rhs[r];
    }
    basis[r] = e;
  }

  LpResult<Q> out;
  out.feasible = (z == one);
  if (out.feasible) {
    for (int i = 0; i < nrows; ++i)
      if (basis[i] < m && !(rhs[i] == zero))
        out.weights.emplace_back(basis[i], rhs[i]);
    std::sort(out.weights.begin(), out.weights.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
  } else {
    // Duals off the reduced costs: u_j = -cost[s_j], u0 = -cost[t]; then
    // w = u and c = 1 - u0 separate a from the polyhedron.
    out.sep_w.reserve(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) out.sep_w.push_back(zero - cost[m + 1 + j]);
    out.sep_c = one + cost[m];
  }
  return out;
}

mpq_class to_mpq(const Rat64& r) {
  mpq_class q(static_cast<long>(r.num()), static_cast<long>(r.den()));
  q.canonicalize();
  return q;
}

Rat64 to_rat64(const mpq_class& q) {
  mpz_class n(q.get_num()), d(q.get_den());
  if (!n.fits_slong_p() || !d.fits_slong_p()) throw RationalOverflow();
  return Rat64(n.get_si(), d.get_si());
}

struct ScaledSeparator {
  std::vector<long long> w;
  long long c = 0;
};

// Clears denominators. Declines (nullopt) when the integers would be large
// enough to endanger later int64 dot products.
std::optional<ScaledSeparator> scale_separator(const std::vector<mpq_class>& w,
                                               const mpq_class& c) {
  const long long kLimit = 1ll << 40;
  mpz_class L = c.get_den();
  for (const auto& q : w) {
    mpz_class d = q.get_den();
    mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), d.get_mpz_t());
  }
  ScaledSeparator out;
  out.w.reserve(w.size());
  for (const auto& q : w) {
    mpz_class v = q.get_num() * (L / q.get_den());
    if (!v.fits_slong_p()) return std::nullopt;
    long long x = v.get_si();
    if (x < 0 || x > kLimit) return std::nullopt;  // w >= 0 always; be strict
    out.w.push_back(x);
  }
  mpz_class vc = c.get_num() * (L / c.get_den());
  if (!vc.fits_slong_p()) return std::nullopt;
  out.c = vc.get_si();
  if (out.c <= 0 || out.c > kLimit) return std::nullopt;
  return out;
}

bool separator_sound(const ScaledSeparator& sep,
                     const std::vector<std::vector<int>>& gens,
                     const std::vector<int>& a) {
  using w128 = __int128;
  for (const auto& g : gens) {
    w128 dot = 0;
    for (size_t j = 0; j < g.size(); ++j) dot += w128(sep.w[j]) * g[j];
    if (dot < sep.c) return false;
  }
  w128 dot = 0;
  for (size_t j = 0; j < a.size(); ++j) dot += w128(sep.w[j]) * a[j];
  return dot < sep.c;
}

std::vector<std::vector<int>> generator_vectors(const MonomialIdeal& I) {
  std::vector<std::vector<int>> gens;
  gens.reserve(I.generators().size());
  for (const auto& g : I.generators()) gens.push_back(g.exponents());
  return gens;
}

// Rat64 first, arbitrary precision on overflow. Returns feasibility, a
// certificate, and the separator in mpq form for the caller to scale.
struct Membership {
  bool inside = false;
  std::vector<std::pair<int, Rat64>> weights;
  std::vector<mpq_class> sep_w;
  mpq_class sep_c;
};

Membership decide_membership(const std::vector<std::vector<int>>& gens,
                             const std::vector<int>& a) {
  Membership out;
  try {
    LpResult<Rat64> res = solve_membership<Rat64>(gens, a);
    out.inside = res.feasible;
    if (res.feasible) {
      out.weights = std::move(res.weights);
    } else {
      out.sep_w.reserve(res.sep_w.size());
      for (const auto& q : res.sep_w) out.sep_w.push_back(to_mpq(q));
      out.sep_c = to_mpq(res.sep_c);
    }
    return out;
  } catch (const RationalOverflow&) {
    // fall through to exact big-rational solve
  }
  LpResult<mpq_class> res = solve_membership<mpq_class>(gens, a);
  out.inside = res.feasible;
  if (res.feasible) {
    for (const auto& [idx, q] : res.weights) out.weights.emplace_back(idx, to_rat64(q));
  } else {
    out.sep_w = std::move(res.sep_w);
    out.sep_c = res.sep_c;
  }
  return out;
}

}  // namespace

NewtonMembership in_newton_polyhedron(const Monomial& a, const MonomialIdeal& I) {
  detail::require_same_ring(a.ring(), I.ring(), "in_newton_polyhedron");
  if (I.is_zero())
    throw std::domain_error("Newton polyhedron of the zero ideal is empty");
  Membership res = decide_membership(generator_vectors(I), a.exponents());
  NewtonMembership out;
  out.inside = res.inside;
  if (res.inside) {
    RationalCertificate cert;
    cert.terms.reserve(res.weights.size());
    for (const auto& [idx, q] : res.weights) cert.terms.push_back({idx, q});
    if (!certificate_is_valid(cert, a, I))
      throw std::logic_error("membership LP produced an invalid certificate");
    out.certificate = std::move(cert);
  }
  return out;
}

bool certificate_is_valid(const RationalCertificate& cert, const Monomial& a,
                          const MonomialIdeal& I) {
  if (a.ring() != I.ring()) return false;
  const int n = I.ring().arity();
  const auto& gens = I.generators();
  mpq_class total(0);
  std::vector<mpq_class> weighted(static_cast<size_t>(n), mpq_class(0));
  for (const auto& term : cert.terms) {
    if (term.generator < 0 || term.generator >= static_cast<int>(gens.size()))
      return false;
    mpq_class w = to_mpq(term.weight);
    if (w < 0) return false;
    total += w;
    const auto& v = gens[static_cast<size_t>(term.generator)].exponents();
    for (int j = 0; j < n; ++j) weighted[static_cast<size_t>(j)] += w * v[static_cast<size_t>(j)];
  }
  if (total != 1) return false;
  for (int j = 0; j < n; ++j)
    if (weighted[static_cast<size_t>(j)] > a.exponent(j)) return false;
  return true;
}

MonomialIdeal integral_closure_of_power(const MonomialIdeal& I, int s) {
  if (I.is_zero())
    throw std::domain_error("integral closure of a power of the zero ideal");
  if (s < 1) throw std::invalid_argument("integral_closure_of_power needs s >= 1");
  const MonomialIdeal Is = power(I, s);
  if (Is.is_unit()) return Is;

  const Ring& ring = I.ring();
  const int n = ring.arity();
  const std::vector<std::vector<int>> gens = generator_vectors(Is);

  std::vector<int> M(static_cast<size_t>(n), 0);
  int mindeg = INT_MAX;
  for (const auto& g : gens) {
    int d = 0;
    for (int j = 0; j < n; ++j) {
      M[static_cast<size_t>(j)] = std::max(M[static_cast<size_t>(j)], g[static_cast<size_t>(j)]);
      d += g[static_cast<size_t>(j)];
    }
    mindeg = std::min(mindeg, d);
  }
  int maxdeg = 0;
  for (int j = 0; j < n; ++j) maxdeg += M[static_cast<size_t>(j)];
  // suffix[j] = max degree obtainable from coordinates j..n-1
  std::vector<int> suffix(static_cast<size_t>(n) + 1, 0);
  for (int j = n - 1; j >= 0; --j)
    suffix[static_cast<size_t>(j)] = suffix[static_cast<size_t>(j) + 1] + M[static_cast<size_t>(j)];

  std::vector<std::vector<int>> found;  // minimal generators, by degree
  std::vector<ScaledSeparator> separators;
  std::vector<int> cur(static_cast<size_t>(n), 0);

  auto consider = [&](const std::vector<int>& a) {
    for (const auto& f : found)
      if (detail::divides_vec(f, a)) return;
    for (const auto& sep : separators) {
      long long dot = 0;
      for (int j = 0; j < n; ++j) dot += sep.w[static_cast<size_t>(j)] * a[static_cast<size_t>(j)];
      if (dot < sep.c) return;  // cached hyperplane already excludes a
    }
    bool inside = false;
    for (const auto& g : gens)
      if (detail::divides_vec(g, a)) {
        inside = true;  // a lies in the ideal itself, no LP needed
        break;
      }
    if (!inside) {
      Membership res = decide_membership(gens, a);
      inside = res.inside;
      if (!inside) {
        if (auto scaled = scale_separator(res.sep_w, res.sep_c)) {
          if (!separator_sound(*scaled, gens, a))
            throw std::logic_error("separating hyperplane failed verification");
          separators.push_back(std::move(*scaled));
        }
      }
    }
    if (inside) found.push_back(a);
  };

  std::function<void(int, int)> walk = [&](int j, int left) {
    if (left > suffix[static_cast<size_t>(j)]) return;
    if (j == n - 1) {
      cur[static_cast<size_t>(j)] = left;
      consider(cur);
      cur[static_cast<size_t>(j)] = 0;
      return;
    }
    int hi = std::min(M[static_cast<size_t>(j)], left);
    for (int e = 0; e <= hi; ++e) {
      cur[static_cast<size_t>(j)] = e;
      walk(j + 1, left - e);
    }
    cur[static_cast<size_t>(j)] = 0;
  };
  for (int d = mindeg; d <= maxdeg; ++d) walk(0, d);

  std::vector<Monomial> out;
  out.reserve(found.size());
  for (auto& e : found) out.emplace_back(ring, std::move(e));
  return MonomialIdeal(ring, std::move(out));
}

}  // namespace monideal
