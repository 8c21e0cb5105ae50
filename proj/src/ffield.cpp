#include "nsz/ffield.hpp"

#include <algorithm>
#include <sstream>

namespace nsz {

namespace {

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod64(r, b, m);
    b = mulmod64(b, b, m);
    e >>= 1;
  }
  return r;
}

bool all_zero(std::span<const std::uint32_t> d) {
  return std::all_of(d.begin(), d.end(), [](std::uint32_t x) { return x == 0; });
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    std::uint64_t x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// FieldTower

FieldTower::FieldTower(Private, std::uint32_t p) : p_(p) {}

FieldTower::FieldTower(Private, TowerPtr parent, FFPoly minimal_polynomial)
    : p_(parent->p_),
      depth_(parent->depth_ + 1),
      degree_(static_cast<std::size_t>(minimal_polynomial.degree())),
      total_(parent->total_ * degree_),
      parent_(std::move(parent)),
      minpoly_(std::move(minimal_polynomial)),
      name_("t" + std::to_string(depth_)) {
  const std::size_t D = parent_->total_;
  min_digits_.assign(degree_ * D, 0);
  for (std::size_t i = 0; i < degree_; ++i) {
    auto c = minpoly_[i].lifted_to(parent_);
    std::copy(c.digits().begin(), c.digits().end(), min_digits_.begin() + static_cast<std::ptrdiff_t>(i * D));
  }
}

TowerPtr FieldTower::prime_field(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p)) throw UsageError("characteristic " + std::to_string(p) + " is not a supported prime");
  return std::make_shared<const FieldTower>(Private{}, p);
}

TowerPtr FieldTower::extend(const FFPoly& minimal_polynomial) const {
  if (minimal_polynomial.degree() < 2) throw UsageError("extension needs a minimal polynomial of degree >= 2");
  if (!minimal_polynomial.is_monic()) throw UsageError("minimal polynomial must be monic");
  auto self = shared_from_this();
  for (const auto& c : minimal_polynomial.coefficients())
    if (!contains(*c.tower())) throw UsageError("minimal polynomial has coefficients outside the tower");
  return std::make_shared<const FieldTower>(Private{}, self, minimal_polynomial);
}

const FFPoly& FieldTower::minimal_polynomial() const {
  if (depth_ == 0) throw UsageError("the prime field has no minimal polynomial");
  return minpoly_;
}

mpz_class FieldTower::order() const {
  mpz_class q;
  mpz_ui_pow_ui(q.get_mpz_t(), p_, total_);
  return q;
}

FFElement FieldTower::zero() const { return FFElement(shared_from_this(), Digits(total_, 0)); }

FFElement FieldTower::one() const { return from_integer(1); }

FFElement FieldTower::from_integer(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  Digits d(total_, 0);
  d[0] = static_cast<std::uint32_t>(r);
  return FFElement(shared_from_this(), std::move(d));
}

FFElement FieldTower::from_integer(const mpz_class& v) const {
  mpz_class r = v % p_;
  if (r < 0) r += p_;
  Digits d(total_, 0);
  d[0] = static_cast<std::uint32_t>(r.get_ui());
  return FFElement(shared_from_this(), std::move(d));
}

FFElement FieldTower::generator() const {
  if (depth_ == 0) return one();
  Digits d(total_, 0);
  d[parent_->total_] = 1;
  return FFElement(shared_from_this(), std::move(d));
}

FFElement FieldTower::element_at(const mpz_class& index) const {
  if (index < 0 || index >= order()) throw UsageError("element index out of range");
  Digits d(total_, 0);
  mpz_class rest = index;
  for (std::size_t i = 0; i < total_ && rest != 0; ++i) {
    mpz_class q, r;
    mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), rest.get_mpz_t(), p_);
    d[i] = static_cast<std::uint32_t>(r.get_ui());
    rest = q;
  }
  return FFElement(shared_from_this(), std::move(d));
}

FFElement FieldTower::random_element(std::mt19937_64& rng) const {
  std::uniform_int_distribution<std::uint32_t> digit(0, p_ - 1);
  Digits d(total_);
  for (auto& x : d) x = digit(rng);
  return FFElement(shared_from_this(), std::move(d));
}

TowerPtr FieldTower::level(std::size_t level) const {
  if (level > depth_) throw UsageError("tower level out of range");
  TowerPtr t = shared_from_this();
  while (t->depth_ > level) t = t->parent_;
  return t;
}

bool same_field(const FieldTower& a, const FieldTower& b) {
  if (&a == &b) return true;
  if (a.p_ != b.p_ || a.depth_ != b.depth_) return false;
  if (a.depth_ == 0) return true;
  return a.min_digits_ == b.min_digits_ && a.degree_ == b.degree_ && same_field(*a.parent_, *b.parent_);
}

bool FieldTower::contains(const FieldTower& other) const {
  if (other.depth_ > depth_) return false;
  const FieldTower* t = this;
  while (t->depth_ > other.depth_) t = t->parent_.get();
  return same_field(*t, other);
}

void FieldTower::add(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                     std::span<std::uint32_t> out) const {
  for (std::size_t i = 0; i < total_; ++i) {
    std::uint32_t s = a[i] + b[i];
    out[i] = s >= p_ ? s - p_ : s;
  }
}

void FieldTower::sub(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                     std::span<std::uint32_t> out) const {
  for (std::size_t i = 0; i < total_; ++i) out[i] = a[i] >= b[i] ? a[i] - b[i] : a[i] + p_ - b[i];
}

void FieldTower::mul(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                     std::span<std::uint32_t> out) const {
  if (depth_ == 0) {
    out[0] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(a[0]) * b[0] % p_);
    return;
  }
  const FieldTower& P = *parent_;
  const std::size_t D = P.total_;
  const std::size_t d = degree_;
  boost::container::small_vector<std::uint32_t, 16> prod((2 * d - 1) * D, 0);
  boost::container::small_vector<std::uint32_t, 8> tmp(D);
  auto chunk = [D](auto& v, std::size_t i) { return std::span(v.data(), v.size()).subspan(i * D, D); };
  for (std::size_t i = 0; i < d; ++i) {
    auto ai = a.subspan(i * D, D);
    if (all_zero(ai)) continue;
    for (std::size_t j = 0; j < d; ++j) {
      auto bj = b.subspan(j * D, D);
      if (all_zero(bj)) continue;
      P.mul(ai, bj, {tmp.data(), tmp.size()});
      auto target = chunk(prod, i + j);
      P.add(target, {tmp.data(), tmp.size()}, target);
    }
  }
  // Reduce modulo the monic minimal polynomial: t^d = -sum m_i t^i.
  for (std::size_t k = 2 * d - 1; k-- > d;) {
    auto c = chunk(prod, k);
    if (all_zero(c)) continue;
    boost::container::small_vector<std::uint32_t, 8> lead(c.begin(), c.end());
    for (std::size_t i = 0; i < d; ++i) {
      auto mi = std::span<const std::uint32_t>(min_digits_).subspan(i * D, D);
      if (all_zero(mi)) continue;
      P.mul({lead.data(), lead.size()}, mi, {tmp.data(), tmp.size()});
      auto target = chunk(prod, k - d + i);
      P.sub(target, {tmp.data(), tmp.size()}, target);
    }
  }
  std::copy(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(d * D), out.begin());
}

TowerPtr common_tower(const TowerPtr& a, const TowerPtr& b) {
  if (!a || !b) throw UsageError("operation on an unbound field element");
  if (a == b) return a;
  if (a->depth() >= b->depth()) {
    if (a->contains(*b)) return a;
  } else if (b->contains(*a)) {
    return b;
  }
  throw UsageError("field elements from incompatible towers");
}

// ---------------------------------------------------------------------------
// FFElement

FFElement::FFElement(TowerPtr tower, Digits digits)
    : tower_(std::move(tower)), digits_(std::move(digits)) {
  if (!tower_) throw UsageError("field element needs a tower");
  if (digits_.size() != tower_->total_degree()) throw UsageError("field element has wrong coordinate count");
  for (auto d : digits_)
    if (d >= tower_->characteristic()) throw UsageError("field element digit out of range");
}

bool FFElement::is_zero() const { return all_zero(digits()); }

bool FFElement::is_one() const {
  if (digits_.empty() || digits_[0] != 1) return false;
  return all_zero(digits().subspan(1));
}

mpz_class FFElement::index() const {
  mpz_class r = 0;
  const auto p = tower_->characteristic();
  for (std::size_t i = digits_.size(); i-- > 0;) r = r * p + digits_[i];
  return r;
}

FFElement FFElement::lifted_to(const TowerPtr& extension) const {
  if (extension == tower_) return *this;
  if (!extension->contains(*tower_)) throw UsageError("cannot lift a field element into a non-extension");
  Digits d(digits_);
  d.resize(extension->total_degree(), 0);
  return FFElement(extension, std::move(d));
}

namespace {

template <class Op>
FFElement binary(const FFElement& a, const FFElement& b, Op op) {
  if (a.tower() == b.tower()) {
    Digits out(a.digits().size());
    op(*a.tower(), a.digits(), b.digits(), std::span(out.data(), out.size()));
    return FFElement(a.tower(), std::move(out));
  }
  auto t = common_tower(a.tower(), b.tower());
  auto la = a.lifted_to(t);
  auto lb = b.lifted_to(t);
  Digits out(t->total_degree());
  op(*t, la.digits(), lb.digits(), std::span(out.data(), out.size()));
  return FFElement(t, std::move(out));
}

}  // namespace

FFElement operator+(const FFElement& a, const FFElement& b) {
  return binary(a, b, [](const FieldTower& t, auto x, auto y, auto o) { t.add(x, y, o); });
}
FFElement operator-(const FFElement& a, const FFElement& b) {
  return binary(a, b, [](const FieldTower& t, auto x, auto y, auto o) { t.sub(x, y, o); });
}
FFElement operator*(const FFElement& a, const FFElement& b) {
  return binary(a, b, [](const FieldTower& t, auto x, auto y, auto o) { t.mul(x, y, o); });
}
FFElement operator/(const FFElement& a, const FFElement& b) { return a * inverse(b); }

FFElement FFElement::operator-() const { return tower_->zero() - *this; }

bool operator==(const FFElement& a, const FFElement& b) {
  if (a.tower_ == b.tower_) return a.digits_ == b.digits_;
  auto t = common_tower(a.tower_, b.tower_);
  return a.lifted_to(t).digits_ == b.lifted_to(t).digits_;
}

bool is_zero(const FFElement& a) { return a.is_zero(); }
bool is_one(const FFElement& a) { return a.is_one(); }
FFElement zero_like(const FFElement& a) { return a.tower()->zero(); }
FFElement one_like(const FFElement& a) { return a.tower()->one(); }

FFElement power(const FFElement& a, const mpz_class& e) {
  if (e < 0) throw UsageError("negative exponent");
  FFElement r = one_like(a);
  const auto bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = r * r;
    if (mpz_tstbit(e.get_mpz_t(), i)) r = r * a;
  }
  return r;
}

FFElement inverse(const FFElement& a) {
  if (a.is_zero()) throw UndefinedError("inverse of zero");
  const auto& t = *a.tower();
  if (t.depth() == 0) {
    auto inv = powmod64(a.digits()[0], t.characteristic() - 2, t.characteristic());
    return t.from_integer(static_cast<long long>(inv));
  }
  return power(a, t.order() - 2);
}

FFElement pth_root(const FFElement& a) {
  const auto& t = *a.tower();
  mpz_class e = t.order() / t.characteristic();
  return power(a, e);
}

std::strong_ordering canonical_compare(const FFElement& a, const FFElement& b) {
  auto t = common_tower(a.tower(), b.tower());
  auto la = a.lifted_to(t);
  auto lb = b.lifted_to(t);
  auto da = la.digits();
  auto db = lb.digits();
  for (std::size_t i = da.size(); i-- > 0;)
    if (da[i] != db[i]) return da[i] <=> db[i];
  return std::strong_ordering::equal;
}

std::string to_string(const FFElement& a) {
  const auto& tower = *a.tower();
  std::vector<std::size_t> degrees(tower.depth());
  for (std::size_t level = tower.depth(); level >= 1; --level) degrees[level - 1] = tower.level(level)->degree();
  std::ostringstream os;
  bool first = true;
  auto d = a.digits();
  for (std::size_t i = d.size(); i-- > 0;) {
    if (d[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    std::string term;
    std::size_t rest = i;
    for (std::size_t k = 0; k < degrees.size(); ++k) {
      std::size_t e = rest % degrees[k];
      rest /= degrees[k];
      if (e == 0) continue;
      if (!term.empty()) term += "*";
      term += "t" + std::to_string(k + 1);
      if (e > 1) term += "^" + std::to_string(e);
    }
    if (term.empty())
      os << d[i];
    else if (d[i] == 1)
      os << term;
    else
      os << d[i] << "*" << term;
  }
  if (first) return "0";
  return os.str();
}

bool is_atomic(const FFElement& a) {
  auto d = a.digits();
  return std::count_if(d.begin(), d.end(), [](std::uint32_t x) { return x != 0; }) <= 1;
}

}  // namespace nsz
