#include "nsz/factor.hpp"

#include <algorithm>
#include <random>

namespace nsz {

namespace {

FFPoly x_poly(const TowerPtr& field) { return FFPoly::x(field->one()); }

/// g(x) with g(x^p) = f(x); f must only contain powers divisible by p.
FFPoly pth_root_poly(const FFPoly& f, std::uint32_t p) {
  std::vector<FFElement> c;
  for (std::size_t i = 0; i < f.size(); i += p) c.push_back(pth_root(f[i]));
  for (std::size_t i = 0; i < f.size(); ++i)
    if (i % p != 0 && !is_zero(f[i])) throw InvariantViolation("p-th root of a polynomial with non-p-power terms");
  return FFPoly(std::move(c));
}

std::vector<Factor> squarefree_rec(const FFPoly& f, std::uint32_t p) {
  std::vector<Factor> out;
  if (f.degree() <= 0) return out;
  auto fp = f.derivative();
  if (!fp.is_zero()) {
    auto c = gcd(f, fp);
    auto w = f / c;
    unsigned i = 1;
    while (w.degree() > 0) {
      auto y = gcd(w, c);
      auto fac = w / y;
      if (fac.degree() > 0) out.push_back({fac.monic(), i});
      ++i;
      w = y;
      c = c / y;
    }
    if (c.degree() > 0) {
      for (auto& [g, m] : squarefree_rec(pth_root_poly(c, p), p)) out.push_back({g, m * p});
    }
  } else {
    for (auto& [g, m] : squarefree_rec(pth_root_poly(f, p), p)) out.push_back({g, m * p});
  }
  return out;
}

struct DegreeBlock {
  FFPoly product;  // product of all irreducible factors of this degree
  std::size_t degree;
};

std::vector<DegreeBlock> distinct_degree(FFPoly f, const TowerPtr& field) {
  std::vector<DegreeBlock> out;
  const mpz_class q = field->order();
  const auto x = x_poly(field);
  FFPoly h = x % f;
  for (std::size_t i = 1; f.degree() >= static_cast<long>(2 * i); ++i) {
    h = powmod(h, q, f);
    auto g = gcd(h - x, f);
    if (g.degree() > 0) {
      out.push_back({g, i});
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.push_back({f.monic(), static_cast<std::size_t>(f.degree())});
  return out;
}

FFPoly random_poly(const TowerPtr& field, std::size_t below_degree, std::mt19937_64& rng) {
  std::vector<FFElement> c;
  c.reserve(below_degree);
  for (std::size_t i = 0; i < below_degree; ++i) c.push_back(field->random_element(rng));
  return FFPoly(std::move(c));
}

void equal_degree(const FFPoly& f, std::size_t d, const TowerPtr& field, std::mt19937_64& rng,
                  std::vector<FFPoly>& out) {
  if (f.degree() == static_cast<long>(d)) {
    out.push_back(f.monic());
    return;
  }
  const mpz_class q = field->order();
  const bool odd = field->characteristic() != 2;
  mpz_class qd;
  mpz_pow_ui(qd.get_mpz_t(), q.get_mpz_t(), d);
  const mpz_class half = (qd - 1) / 2;
  const std::size_t trace_len = field->total_degree() * d;
  const auto one = FFPoly::constant(field->one());
  for (;;) {
    auto a = random_poly(field, static_cast<std::size_t>(f.degree()), rng);
    if (a.degree() <= 0) continue;
    FFPoly b;
    if (odd) {
      b = powmod(a, half, f) - one;
    } else {
      FFPoly term = a % f;
      b = term;
      for (std::size_t i = 1; i < trace_len; ++i) {
        term = (term * term) % f;
        b = b + term;
      }
    }
    auto g = gcd(b, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, field, rng, out);
      equal_degree(f / g, d, field, rng, out);
      return;
    }
  }
}

}  // namespace

FFPoly lift(const FFPoly& f, const TowerPtr& field) {
  std::vector<FFElement> c;
  c.reserve(f.size());
  for (const auto& a : f.coefficients()) c.push_back(a.lifted_to(field));
  return FFPoly(std::move(c));
}

bool factor_precedes(const FFPoly& a, const FFPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  if (a.degree() == 1) {
    auto ra = -(a[0] / a[1]);
    auto rb = -(b[0] / b[1]);
    return canonical_compare(ra, rb) < 0;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto c = canonical_compare(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::vector<Factor> squarefree_decomposition(const FFPoly& f, const TowerPtr& field) {
  if (f.degree() < 1) throw UsageError("squarefree decomposition of a constant");
  return squarefree_rec(lift(f, field).monic(), field->characteristic());
}

std::vector<Factor> factor_univariate(const FFPoly& f, const TowerPtr& field, std::uint64_t seed) {
  if (f.degree() < 1) throw UsageError("cannot factor a constant polynomial");
  std::mt19937_64 rng(seed);
  std::vector<Factor> out;
  for (const auto& [part, mult] : squarefree_decomposition(f, field)) {
    for (const auto& block : distinct_degree(part, field)) {
      std::vector<FFPoly> irreducibles;
      equal_degree(block.product, block.degree, field, rng, irreducibles);
      for (auto& g : irreducibles) out.push_back({std::move(g), mult});
    }
  }
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) { return factor_precedes(a.factor, b.factor); });
  return out;
}

bool is_irreducible(const FFPoly& f0, const TowerPtr& field) {
  if (f0.degree() < 1) return false;
  if (f0.degree() == 1) return true;
  const auto f = lift(f0, field).monic();
  const auto n = static_cast<std::size_t>(f.degree());
  const mpz_class q = field->order();
  const auto x = x_poly(field);
  // frob[k] = x^(q^k) mod f
  std::vector<FFPoly> frob{x % f};
  for (std::size_t k = 1; k <= n; ++k) frob.push_back(powmod(frob.back(), q, f));
  if (!(frob[n] - x % f).is_zero()) return false;
  for (std::size_t r = 2; r <= n; ++r) {
    if (n % r != 0) continue;
    bool prime = true;
    for (std::size_t s = 2; s * s <= r; ++s)
      if (r % s == 0) prime = false;
    if (!prime) continue;
    if (gcd(frob[n / r] - x, f).degree() != 0) return false;
  }
  return true;
}

AdjoinedRoot adjoin_root(const TowerPtr& tower, const FFPoly& g0) {
  if (g0.degree() < 1) throw UsageError("adjoin_root needs a nonconstant polynomial");
  auto g = lift(g0, tower).monic();
  if (g.degree() == 1) return {tower, -g[0]};
  if (!is_irreducible(g, tower)) throw UsageError("adjoin_root: polynomial is reducible over the tower");
  auto extended = tower->extend(g);
  return {extended, extended->generator()};
}

FFPoly first_irreducible_quadratic(const TowerPtr& field) {
  const auto one = field->one();
  for (auto c : enumerate_elements(field)) {
    if (is_zero(c)) continue;
    for (auto b : enumerate_elements(field)) {
      FFPoly cand({c, b, one});
      if (is_irreducible(cand, field)) return cand;
    }
  }
  throw InvariantViolation("no irreducible quadratic found");
}

}  // namespace nsz
