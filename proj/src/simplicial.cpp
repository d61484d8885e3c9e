#include "monideal/simplicial.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "monideal/rational.hpp"

namespace monideal {

SimplicialComplex::SimplicialComplex(int vertex_count, std::vector<uint32_t> faces)
    : vertex_count_(vertex_count) {
  if (vertex_count < 0 || vertex_count > 30)
    throw std::invalid_argument("SimplicialComplex supports 0..30 vertices");
  const uint32_t all = vertex_count == 0 ? 0u : (uint32_t(1) << vertex_count) - 1;
  for (uint32_t f : faces)
    if (f & ~all) throw std::invalid_argument("face uses a vertex out of range");
  std::sort(faces.begin(), faces.end(), [](uint32_t a, uint32_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa > pb : a < b;
  });
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  for (uint32_t f : faces) {
    bool covered = false;
    for (uint32_t kept : facets_)
      if ((f & ~kept) == 0) {
        covered = true;
        break;
      }
    if (!covered) facets_.push_back(f);
  }
  std::sort(facets_.begin(), facets_.end());
}

bool SimplicialComplex::is_cone() const {
  if (facets_.empty()) return false;
  uint32_t common = facets_[0];
  for (uint32_t f : facets_) common &= f;
  return common != 0;
}

bool SimplicialComplex::has_face(uint32_t mask) const {
  for (uint32_t f : facets_)
    if ((mask & ~f) == 0) return true;
  return false;
}

int SimplicialComplex::dimension() const {
  if (facets_.empty()) return -2;
  int best = -1;
  for (uint32_t f : facets_) best = std::max(best, std::popcount(f) - 1);
  return best;
}

std::vector<std::vector<uint32_t>> SimplicialComplex::faces_by_dimension() const {
  std::vector<std::vector<uint32_t>> out;
  if (is_void()) return out;
  std::unordered_map<uint32_t, char> seen;
  for (uint32_t f : facets_) {
    uint32_t sub = f;
    for (;;) {
      seen.emplace(sub, 1);
      if (sub == 0) break;
      sub = (sub - 1) & f;
    }
  }
  out.resize(static_cast<size_t>(dimension()) + 2);
  for (const auto& [mask, _] : seen)
    out[static_cast<size_t>(std::popcount(mask))].push_back(mask);
  for (auto& level : out) std::sort(level.begin(), level.end());
  return out;
}

namespace {

// Sparse column, entries sorted by row index.
template <class Z>
using Col = std::vector<std::pair<int, Z>>;

long long checked_mul(long long a, long long b) {
  __int128 r = __int128(a) * b;
  if (r > INT64_MAX || r < INT64_MIN) throw RationalOverflow();
  return static_cast<long long>(r);
}

long long checked_sub(long long a, long long b) {
  __int128 r = __int128(a) - b;
  if (r > INT64_MAX || r < INT64_MIN) throw RationalOverflow();
  return static_cast<long long>(r);
}

struct Int64Ops {
  using Z = long long;
  static Z mul(Z a, Z b) { return checked_mul(a, b); }
  static Z sub(Z a, Z b) { return checked_sub(a, b); }
  static Z quot(Z a, Z b) { return a / b; }
  static Z gcd(Z a, Z b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }
  static bool is_zero(const Z& a) { return a == 0; }
  static bool is_one(const Z& a) { return a == 1; }
};

struct BigOps {
  using Z = mpz_class;
  static Z mul(const Z& a, const Z& b) { return Z(a * b); }
  static Z sub(const Z& a, const Z& b) { return Z(a - b); }
  static Z quot(const Z& a, const Z& b) { return Z(a / b); }
  static Z gcd(const Z& a, const Z& b) {
    Z g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
  }
  static bool is_zero(const Z& a) { return sgn(a) == 0; }
  static bool is_one(const Z& a) { return a == 1; }
};

// col <- (w/g) col - (v/g) piv where v, w are the shared lowest-row values;
// the combined column drops that row. Content is stripped afterwards so the
// integers stay small. Exact over Z, hence rank-correct over Q.
template <class Ops>
void combine(Col<typename Ops::Z>& col, const Col<typename Ops::Z>& piv) {
  using Z = typename Ops::Z;
  const Z v = col.back().second;
  const Z w = piv.back().second;
  const Z g = Ops::gcd(v, w);
  const Z cv = Ops::quot(w, g);
  const Z cp = Ops::quot(v, g);
  Col<Z> out;
  out.reserve(col.size() + piv.size());
  size_t i = 0, k = 0;
  while (i < col.size() || k < piv.size()) {
    if (k == piv.size() || (i < col.size() && col[i].first < piv[k].first)) {
      out.emplace_back(col[i].first, Ops::mul(cv, col[i].second));
      ++i;
    } else if (i == col.size() || piv[k].first < col[i].first) {
      Z val = Ops::mul(cp, piv[k].second);
      out.emplace_back(piv[k].first, Ops::sub(Z(0), val));
      ++k;
    } else {
      Z val = Ops::sub(Ops::mul(cv, col[i].second), Ops::mul(cp, piv[k].second));
      if (!Ops::is_zero(val)) out.emplace_back(col[i].first, std::move(val));
      ++i;
      ++k;
    }
  }
  Z content(0);
  for (const auto& [row, val] : out) {
    content = Ops::gcd(content, val);
    if (Ops::is_one(content)) break;
  }
  if (!Ops::is_zero(content) && !Ops::is_one(content))
    for (auto& [row, val] : out) val = Ops::quot(val, content);
  col = std::move(out);
}

template <class Ops>
long long rank_over_q(std::vector<Col<typename Ops::Z>> cols) {
  std::unordered_map<int, int> owner;  // pivot row -> index into store
  std::vector<Col<typename Ops::Z>> store;
  long long rank = 0;
  for (auto& c : cols) {
    Col<typename Ops::Z> col = std::move(c);
    while (!col.empty()) {
      auto it = owner.find(col.back().first);
      if (it == owner.end()) {
        owner.emplace(col.back().first, static_cast<int>(store.size()));
        store.push_back(std::move(col));
        ++rank;
        break;
      }
      combine<Ops>(col, store[static_cast<size_t>(it->second)]);
    }
  }
  return rank;
}

long long mod_inverse(long long a, long long p) {
  long long t = 0, new_t = 1, r = p, new_r = a % p;
  while (new_r != 0) {
    long long q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw std::invalid_argument("non-invertible element mod p");
  return ((t % p) + p) % p;
}

long long rank_mod_p(std::vector<Col<long long>> cols, long long p) {
  for (auto& col : cols) {
    Col<long long> reduced;
    for (auto& [row, val] : col) {
      long long v = ((val % p) + p) % p;
      if (v != 0) reduced.emplace_back(row, v);
    }
    col = std::move(reduced);
  }
  std::unordered_map<int, int> owner;
  std::vector<Col<long long>> store;
  long long rank = 0;
  for (auto& c : cols) {
    Col<long long> col = std::move(c);
    while (!col.empty()) {
      auto it = owner.find(col.back().first);
      if (it == owner.end()) {
        owner.emplace(col.back().first, static_cast<int>(store.size()));
        store.push_back(std::move(col));
        ++rank;
        break;
      }
      const auto& piv = store[static_cast<size_t>(it->second)];
      long long f = col.back().second % p * mod_inverse(piv.back().second, p) % p;
      Col<long long> out;
      out.reserve(col.size() + piv.size());
      size_t i = 0, k = 0;
      while (i < col.size() || k < piv.size()) {
        if (k == piv.size() || (i < col.size() && col[i].first < piv[k].first)) {
          out.push_back(col[i]);
          ++i;
        } else if (i == col.size() || piv[k].first < col[i].first) {
          long long val = (p - f * piv[k].second % p) % p;
          if (val != 0) out.emplace_back(piv[k].first, val);
          ++k;
        } else {
          long long val = (col[i].second - f * piv[k].second % p + p * p) % p;
          if (val != 0) out.emplace_back(col[i].first, val);
          ++i;
          ++k;
        }
      }
      col = std::move(out);
    }
  }
  return rank;
}

// Boundary matrix del_k over the face lists: columns are k-faces, rows are
// (k-1)-faces, signs alternate along each face's vertex order.
std::vector<Col<long long>> boundary_columns(const std::vector<uint32_t>& kfaces,
                                             const std::vector<uint32_t>& rows) {
  std::vector<Col<long long>> cols;
  cols.reserve(kfaces.size());
  for (uint32_t f : kfaces) {
    Col<long long> col;
    int pos = 0;
    for (uint32_t rest = f; rest; rest &= rest - 1, ++pos) {
      uint32_t v = rest & (~rest + 1u);
      uint32_t g = f & ~v;
      auto it = std::lower_bound(rows.begin(), rows.end(), g);
      int row = static_cast<int>(it - rows.begin());
      col.emplace_back(row, (pos % 2 == 0) ? 1 : -1);
    }
    std::sort(col.begin(), col.end());
    cols.push_back(std::move(col));
  }
  return cols;
}

}  // namespace

std::vector<long long> reduced_homology_all(const SimplicialComplex& complex,
                                            const Field& field) {
  if (complex.is_void()) return {};
  const int dim = complex.dimension();
  std::vector<long long> out(static_cast<size_t>(dim) + 2, 0);
  if (complex.is_cone()) return out;

  const auto fbd = complex.faces_by_dimension();
  // ranks[k] = rank of del_k : C_k -> C_{k-1}, for k = 0..dim.
  std::vector<long long> ranks(static_cast<size_t>(dim) + 2, 0);
  for (int k = 0; k <= dim; ++k) {
    auto cols = boundary_columns(fbd[static_cast<size_t>(k) + 1], fbd[static_cast<size_t>(k)]);
    if (field.kind == Field::Kind::prime) {
      ranks[static_cast<size_t>(k)] = rank_mod_p(std::move(cols), field.p);
    } else {
      try {
        ranks[static_cast<size_t>(k)] = rank_over_q<Int64Ops>(cols);
      } catch (const RationalOverflow&) {
        std::vector<Col<mpz_class>> big(cols.size());
        for (size_t c = 0; c < cols.size(); ++c)
          for (const auto& [row, val] : cols[c])
            big[c].emplace_back(row, mpz_class(static_cast<long>(val)));
        ranks[static_cast<size_t>(k)] = rank_over_q<BigOps>(std::move(big));
      }
    }
  }
  for (int i = -1; i <= dim; ++i) {
    long long ci = static_cast<long long>(fbd[static_cast<size_t>(i) + 1].size());
    long long del_i = i >= 0 ? ranks[static_cast<size_t>(i)] : 0;
    long long del_next = ranks[static_cast<size_t>(i) + 1];
    out[static_cast<size_t>(i) + 1] = ci - del_i - del_next;
  }
  return out;
}

long long reduced_homology_rank(const SimplicialComplex& complex, int i,
                                const Field& field) {
  if (i < -1) throw std::invalid_argument("homological index below -1");
  const auto all = reduced_homology_all(complex, field);
  const size_t slot = static_cast<size_t>(i) + 1;
  return slot < all.size() ? all[slot] : 0;
}

}  // namespace monideal
