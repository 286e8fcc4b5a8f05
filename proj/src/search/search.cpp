#include "polyprimes/search/search.hpp"

#include <algorithm>
#include <optional>

#include "polyprimes/error.hpp"
#include "polyprimes/sieve/prime_table.hpp"

namespace polyprimes::search {

namespace {

// Point coordinate in the search window, or nullopt when it leaves [1, N]
// in the non-cyclic mode.
std::optional<std::int64_t> place(__int128 v, std::int64_t N, bool cyclic) {
  if (cyclic) {
    std::int64_t r = static_cast<std::int64_t>(((v % N) + N) % N);
    return r == 0 ? N : r;
  }
  if (v < 1 || v > N) return std::nullopt;
  return static_cast<std::int64_t>(v);
}

// o_j = P_j(y) v_j; nullopt if some value overflows (only possible far
// outside the window, so no hit exists in the non-cyclic mode).
std::optional<std::vector<std::vector<__int128>>> offsets(const ConfigurationQuery& q, std::int64_t y) {
  std::vector<std::vector<__int128>> o(q.P.size(), std::vector<__int128>(q.dimension));
  for (std::size_t j = 0; j < q.P.size(); ++j) {
    __int128 pv;
    if (q.cyclic) {
      pv = q.P[j].eval_mod(y, q.N);
    } else {
      const auto e = q.P[j].eval_exact(y);
      if (!e) return std::nullopt;
      pv = *e;
    }
    for (int i = 0; i < q.dimension; ++i) o[j][i] = pv * q.V[j][i];
  }
  return o;
}

ConfigurationHit make_hit(const ConfigurationQuery& q, std::int64_t y, const std::vector<std::int64_t>& x,
                          const std::vector<std::vector<__int128>>& o) {
  ConfigurationHit h{x, y, {}};
  for (std::size_t j = 0; j < o.size(); ++j) {
    std::vector<std::int64_t> p(q.dimension);
    for (int i = 0; i < q.dimension; ++i) p[i] = *place(static_cast<__int128>(x[i]) + o[j][i], q.N, q.cyclic);
    h.points.push_back(std::move(p));
  }
  return h;
}

// All hits for one y in x order, at most cap of them.
std::vector<ConfigurationHit> hits_for_y(const ConfigurationQuery& q, std::int64_t y, std::size_t cap) {
  std::vector<ConfigurationHit> out;
  const auto o = offsets(q, y);
  if (!o) return out;
  const int d = q.dimension;
  if (q.target.is_product()) {
    // Membership factorizes over axes, so the admissible x form a product.
    std::vector<std::vector<std::int64_t>> cand(d);
    for (int i = 0; i < d; ++i) {
      for (std::int64_t x = 1; x <= q.N; ++x) {
        bool ok = true;
        for (std::size_t j = 0; j < o->size() && ok; ++j) {
          const auto c = place(static_cast<__int128>(x) + (*o)[j][i], q.N, q.cyclic);
          ok = c && q.target.axis_contains(*c);
        }
        if (ok) cand[i].push_back(x);
      }
      if (cand[i].empty()) return out;
    }
    std::vector<std::size_t> pos(d, 0);
    std::vector<std::int64_t> x(d);
    while (out.size() < cap) {
      for (int i = 0; i < d; ++i) x[i] = cand[i][pos[i]];
      out.push_back(make_hit(q, y, x, *o));
      int i = d - 1;
      while (i >= 0 && ++pos[i] == cand[i].size()) pos[i--] = 0;
      if (i < 0) break;
    }
    return out;
  }
  std::vector<std::vector<std::int64_t>> xs;
  for (const auto& p : q.target.points()) {
    std::vector<std::int64_t> x(d);
    bool ok = true;
    for (int i = 0; i < d && ok; ++i) {
      const auto c = place(static_cast<__int128>(p[i]) - (*o)[0][i], q.N, q.cyclic);
      ok = c.has_value();
      if (ok) x[i] = *c;
    }
    if (!ok) continue;
    std::vector<std::int64_t> pt(d);
    for (std::size_t j = 0; j < o->size() && ok; ++j) {
      for (int i = 0; i < d && ok; ++i) {
        const auto c = place(static_cast<__int128>(x[i]) + (*o)[j][i], q.N, q.cyclic);
        ok = c.has_value();
        if (ok) pt[i] = *c;
      }
      ok = ok && q.target.contains(pt);
    }
    if (ok) xs.push_back(std::move(x));
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  for (const auto& x : xs) {
    if (out.size() >= cap) break;
    out.push_back(make_hit(q, y, x, *o));
  }
  return out;
}

}  // namespace

void ConfigurationQuery::validate() const {
  if (dimension < 1) fail(Errc::InvalidArgument, "dimension must be >= 1");
  if (P.empty() || P.size() != V.size()) fail(Errc::InvalidArgument, "need one direction per polynomial");
  for (std::size_t j = 0; j < P.size(); ++j) {
    if (P[j].constant() != 0) fail(Errc::InvalidArgument, "P_" + std::to_string(j) + "(0) != 0");
    if (static_cast<int>(V[j].size()) != dimension) {
      fail(Errc::DimensionMismatch, "direction v_" + std::to_string(j) + " has length " + std::to_string(V[j].size()));
    }
  }
  if (N < 1) fail(Errc::InvalidArgument, "N must be >= 1");
  if (y_max < 0) fail(Errc::InvalidArgument, "y_max must be >= 0");
  if (target.dimension() != dimension) fail(Errc::DimensionMismatch, "target set has the wrong dimension");
}

std::vector<ConfigurationHit> find_configurations(const ConfigurationQuery& q, const SearchOptions& opts) {
  q.validate();
  std::vector<ConfigurationHit> out;
  const std::size_t want = opts.limit == 0 ? opts.max_hits + 1 : opts.limit;
  // Blocks of y run in parallel; results are appended in y order.
  const std::int64_t block = 32;
  for (std::int64_t y0 = 1; y0 <= q.y_max && out.size() < want; y0 += block) {
    const std::int64_t y1 = std::min(q.y_max, y0 + block - 1);
    std::vector<std::vector<ConfigurationHit>> per(static_cast<std::size_t>(y1 - y0 + 1));
    const std::size_t cap = want - out.size();
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t y = y0; y <= y1; ++y) per[y - y0] = hits_for_y(q, y, cap);
    for (auto& v : per) {
      for (auto& h : v) {
        if (out.size() >= want) break;
        out.push_back(std::move(h));
      }
    }
  }
  if (opts.limit == 0 && out.size() > opts.max_hits) {
    fail(Errc::TargetTooLarge, "more than " + std::to_string(opts.max_hits) + " hits; pass a limit");
  }
  return out;
}

bool revalidate(const ConfigurationQuery& q, const ConfigurationHit& hit) {
  if (hit.points.size() != q.P.size() || static_cast<int>(hit.x.size()) != q.dimension) return false;
  if (hit.y < 1 || hit.y > q.y_max) return false;
  for (auto xi : hit.x) {
    if (xi < 1 || xi > q.N) return false;
  }
  const mpz_class y(static_cast<long>(hit.y)), n(static_cast<long>(q.N));
  for (std::size_t j = 0; j < q.P.size(); ++j) {
    const mpz_class pv = q.P[j].eval(y);
    for (int i = 0; i < q.dimension; ++i) {
      mpz_class c = mpz_class(static_cast<long>(hit.x[i])) + pv * mpz_class(static_cast<long>(q.V[j][i]));
      if (q.cyclic) {
        mpz_class r;
        mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), n.get_mpz_t());
        c = r == 0 ? n : r;
      }
      if (c < 1 || c > n || c != mpz_class(static_cast<long>(hit.points[j][i]))) return false;
    }
    if (!q.target.contains(hit.points[j])) return false;
  }
  return true;
}

double count_weighted(const ConfigurationQuery& q, const std::vector<const GridFunction*>& weights, grid::Exec exec) {
  q.validate();
  if (weights.size() != q.P.size()) fail(Errc::DimensionMismatch, "need one weight per polynomial");
  for (const auto* w : weights) {
    if (w == nullptr || w->dimension() != q.dimension || w->modulus() != q.N) {
      fail(Errc::DimensionMismatch, "weights must live on (Z/NZ)^d with the query's N and d");
    }
  }
  if (q.y_max < 1) return 0.0;
  return grid::lambda_average(q.P, q.V, weights, q.y_max, exec);
}

MinYProfile min_y_profile(const ConfigurationQuery& q, const SearchOptions& opts) {
  q.validate();
  MinYProfile prof;
  for (std::int64_t y = 1; y <= q.y_max; ++y) {
    for (auto& h : hits_for_y(q, y, opts.max_hits)) {
      if (prof.first_y.emplace(std::move(h.x), y).second) {
        ++prof.histogram[y];
        prof.max_min_y = y;
      }
    }
    if (prof.first_y.size() > opts.max_hits) fail(Errc::TargetTooLarge, "too many base points for a profile");
  }
  return prof;
}

double bl_positivity_probe(const GridFunction& g, const std::vector<ScalarPoly>& P,
                           const std::vector<std::vector<std::int64_t>>& V, std::int64_t M) {
  for (double v : g.values()) {
    if (!(v >= 0.0 && v <= 1.0)) fail(Errc::OutOfRangeFunction, "g must take values in [0, 1]");
  }
  std::vector<const GridFunction*> fns(P.size(), &g);
  return grid::lambda_average(P, V, fns, M);
}

LatticeSet prime_lattice(int dimension, std::int64_t N) {
  if (N < 2) return LatticeSet::product(dimension, std::vector<bool>(static_cast<std::size_t>(std::max<std::int64_t>(N, 0)) + 1, false));
  return LatticeSet::product(dimension, sieve::PrimeTable(N).indicator(N));
}

LatticeSet residue_prime_lattice(int dimension, std::int64_t N, std::int64_t modulus, std::int64_t residue) {
  if (modulus < 1) fail(Errc::InvalidArgument, "modulus must be >= 1");
  auto members = N < 2 ? std::vector<bool>(static_cast<std::size_t>(std::max<std::int64_t>(N, 0)) + 1, false)
                       : sieve::PrimeTable(N).indicator(N);
  for (std::size_t v = 0; v < members.size(); ++v) {
    if (static_cast<std::int64_t>(v) % modulus != ((residue % modulus) + modulus) % modulus) members[v] = false;
  }
  return LatticeSet::product(dimension, std::move(members));
}

}  // namespace polyprimes::search
