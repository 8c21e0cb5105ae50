// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <unistd.h>

#include "support.hpp"

using namespace nsz;
using namespace nsz::test;

namespace {

// Pinned limits. Arithmetic is exact, so every equality check has zero tolerance.
constexpr double kInstanceSeconds = 5.0;
constexpr double kWholeSuiteSeconds = 600.0;
constexpr std::uint64_t kSeed = 20240917;
constexpr int kIdealsPerPrime = 200;
constexpr int kBruteForceIdeals = 100;
constexpr int kCoprimeCases = 100;
constexpr int kIntersectionCases = 50;
constexpr int kSpecializationCases = 100;
constexpr int kQuotientCases = 100;
constexpr int kRadicalCases = 50;

using Clock = std::chrono::steady_clock;
using FI = Ideal<FFElement>;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Verdict {
  bool pass = true;
  std::string detail;
};

struct RandomIdeal {
  std::uint32_t p;
  FI ideal;
};

/// n <= 3 variables, <= 3 generators, total degree <= 2.
FI random_ideal(std::mt19937_64& rng, const TowerPtr& K) {
  std::uniform_int_distribution<int> nd(1, 3), md(1, 3), td(1, 4);
  const std::size_t n = static_cast<std::size_t>(nd(rng));
  std::vector<FFPolynomial> gens;
  for (int m = md(rng); m > 0; --m) gens.push_back(random_poly(rng, n, 2, static_cast<unsigned>(td(rng)), K));
  return FI(n, std::move(gens));
}

std::vector<RandomIdeal> soundness_corpus() {
  std::vector<RandomIdeal> out;
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto K = Fp(p);
    std::mt19937_64 rng(kSeed + p);
    for (int i = 0; i < kIdealsPerPrime; ++i) out.push_back({p, random_ideal(rng, K)});
  }
  return out;
}

/// F_{p^2} from a fixed irreducible quadratic, independent of the solver's choice.
TowerPtr quadratic_extension(std::uint32_t p) {
  auto K = Fp(p);
  if (p == 2) return K->extend(U("x^2 + x + 1", K));
  if (p == 3) return K->extend(U("x^2 + 1", K));
  throw std::logic_error("no fixed quadratic for this prime");
}

std::vector<FFPolynomial> lifted(const std::vector<FFPolynomial>& gens, const TowerPtr& K) {
  std::vector<FFPolynomial> out;
  for (const auto& g : gens) out.push_back(lift(g, K));
  return out;
}

// 1 -------------------------------------------------------------------------
Verdict solver_soundness(std::ostream& log) {
  Verdict v;
  int points = 0, trivial = 0, bad = 0;
  double worst = 0;
  for (const auto& [p, I] : soundness_corpus()) {
    auto K = Fp(p);
    auto t0 = Clock::now();
    SolveOutcome out;
    try {
      out = solve(I, K, {kSeed});
    } catch (const std::exception& e) {
      ++bad;
      log << "error " << e.what() << "\n";
      continue;
    }
    double dt = seconds_since(t0);
    worst = std::max(worst, dt);
    if (dt >= kInstanceSeconds) ++bad;
    bool ok;
    if (out.kind == SolveOutcome::Kind::Trivial) {
      ++trivial;
      ok = combination(std::span<const FFPolynomial>(out.certificate), std::span<const FFPolynomial>(I.generators),
                       I.nvars) == FFPolynomial::constant(I.nvars, K->one());
    } else {
      ++points;
      ok = out.coordinates.size() == I.nvars;
      for (const auto& g : I.generators) ok = ok && is_zero(eval_naive(g, out.coordinates, out.tower));
    }
    if (!ok) ++bad;
    log << "p=" << p << " n=" << I.nvars << "\n" << format_outcome(out, vars(I.nvars), true);
  }
  v.pass = bad == 0;
  std::ostringstream d;
  d << 3 * kIdealsPerPrime << " ideals over F2, F3, F5: " << points << " points, " << trivial << " trivial, " << bad
    << " failures; slowest " << worst << " s (limit " << kInstanceSeconds << " s)";
  v.detail = d.str();
  return v;
}

// 2 -------------------------------------------------------------------------
Verdict brute_force_triviality(std::ostream& log) {
  Verdict v;
  int used = 0, with_zero = 0, disagreements = 0;
  std::map<std::uint32_t, int> per_prime;
  for (const auto& [p, I] : soundness_corpus()) {
    if (p == 5 || I.nvars > 2 || per_prime[p] >= kBruteForceIdeals / 2) continue;
    ++per_prime[p];
    ++used;
    auto Fq = quadratic_extension(p);
    bool zero = has_zero_in(I.generators, I.nvars, Fp(p)) || has_zero_in(lifted(I.generators, Fq), I.nvars, Fq);
    bool triv = is_trivial(I, false).trivial;
    auto out = solve(I, Fp(p), {kSeed});
    bool solve_trivial = out.kind == SolveOutcome::Kind::Trivial;
    with_zero += zero;
    if ((zero && triv) || (solve_trivial && zero) || solve_trivial != triv) ++disagreements;
    log << "p=" << p << " zero=" << zero << " trivial=" << triv << " solve=" << solve_trivial << "\n";
  }
  v.pass = disagreements == 0 && used == kBruteForceIdeals;
  std::ostringstream d;
  d << used << " ideals (n <= 2) searched over F_p^n and F_{p^2}^n: " << with_zero << " with zeros, "
    << disagreements << " disagreements";
  v.detail = d.str();
  return v;
}

// 3 -------------------------------------------------------------------------
Verdict coprime_splitting(std::ostream& log) {
  Verdict v;
  auto K = Fp(5);
  std::mt19937_64 rng(kSeed + 3);
  std::uniform_int_distribution<unsigned> deg(1, 3);
  std::uniform_int_distribution<int> nd(2, 3), md(0, 2);
  int done = 0, failed = 0;
  while (done < kCoprimeCases) {
    auto f1 = random_upoly(rng, deg(rng), K), f2 = random_upoly(rng, deg(rng), K);
    if (f1.degree() < 1 || f2.degree() < 1 || gcd(f1, f2).degree() != 0) continue;
    const std::size_t n = static_cast<std::size_t>(nd(rng));
    std::vector<FFPolynomial> G;
    for (int k = md(rng); k > 0; --k) G.push_back(random_poly(rng, n, 2, 3, K));
    auto rep = coprime_split_identity(f1, f2, G, n);
    if (!rep.all()) ++failed;
    if (!(rep.q1 * f1 + rep.q2 * f2 == FFPoly::constant(K->one()))) ++failed;
    log << to_string(f1, "x1") << " | " << to_string(f2, "x1") << " | " << rep.all() << "\n";
    ++done;
  }
  v.pass = failed == 0;
  v.detail = std::to_string(done) + " coprime pairs over F5, " + std::to_string(failed) +
             " failed inclusions or cofactor identities";
  return v;
}

// 4 -------------------------------------------------------------------------
Verdict root_power_intersection(std::ostream& log) {
  Verdict v;
  auto K = Fp(5);
  std::mt19937_64 rng(kSeed + 4);
  std::uniform_int_distribution<int> kd(1, 3), cd(1, 2), nd(1, 2), ad(0, 4);
  int failed = 0;
  for (int i = 0; i < kIntersectionCases; ++i) {
    std::vector<int> roots;
    for (int k = kd(rng); k > 0;) {
      int a = ad(rng);
      if (std::find(roots.begin(), roots.end(), a) != roots.end()) continue;
      roots.push_back(a);
      --k;
    }
    const std::size_t n = static_cast<std::size_t>(nd(rng)) + 1;
    std::vector<FFPolynomial> G;
    for (int k = nd(rng); k > 0; --k) G.push_back(random_poly(rng, n, 2, 3, K));
    auto x1 = FFPolynomial::variable(n, 0, K->one());
    auto prod = FFPolynomial::constant(n, K->one());
    std::optional<FI> meet;
    for (int a : roots) {
      auto piece = power(x1 - FFPolynomial::constant(n, K->from_integer(a)), static_cast<std::uint64_t>(cd(rng)));
      prod = prod * piece;
      auto gens = G;
      gens.insert(gens.begin(), piece);
      FI J(n, gens);
      meet = meet ? ideal_intersect(*meet, J) : J;
    }
    auto gens = G;
    gens.insert(gens.begin(), prod);
    FI lhs(n, gens);
    bool eq = same_ideal(lhs, *meet);
    if (!eq) ++failed;
    log << to_string(prod) << " : " << eq << "\n";
  }
  v.pass = failed == 0;
  v.detail = std::to_string(kIntersectionCases) + " instances over F5 with up to 3 roots of multiplicity <= 2, " +
             std::to_string(failed) + " unequal";
  return v;
}

// 5 -------------------------------------------------------------------------
Verdict specialization(std::ostream& log) {
  Verdict v;
  auto K = Fp(5);
  std::mt19937_64 rng(kSeed + 5);
  std::uniform_int_distribution<int> nd(2, 3), md(1, 3);
  int done = 0, tried = 0, not_groebner = 0, no_error = 0, extended = 0;
  while (done < kSpecializationCases) {
    ++tried;
    const std::size_t n = static_cast<std::size_t>(nd(rng));
    std::vector<EDPolynomial<FFElement>> gens;
    for (int k = md(rng); k > 0; --k) {
      auto g = random_poly(rng, n, 2, 3, K);
      if (!g.is_zero()) gens.push_back(view_shift(g));
    }
    if (gens.empty()) continue;
    auto basis = strong_buchberger(n - 1, std::span<const EDPolynomial<FFElement>>(gens), TermOrder::lex(n - 1));
    auto q = specialization_locus(basis);
    if (q.degree() < 1) continue;  // no root of q to test against
    ++done;
    auto good = good_specialization_point(q, K);
    if (good.tower != K) ++extended;
    auto spec = specialize_basis(basis, good.root);
    std::vector<FFPolynomial> elems = lifted(spec.elements, good.tower);
    if (!naive_is_groebner(elems, spec.order)) ++not_groebner;
    auto root = adjoin_root(K, factor_univariate(q, K).front().factor);
    try {
      specialize_basis(basis, root.root);
      ++no_error;
    } catch (const PreconditionError&) {
    }
    log << to_string(q, "x1") << " a=" << to_string(good.root) << " root=" << to_string(root.root) << "\n";
  }
  v.pass = not_groebner == 0 && no_error == 0;
  std::ostringstream d;
  d << done << " strong bases over F5[x1] with nonconstant locus (" << tried << " drawn): " << not_groebner
    << " specializations failed re-certification, " << no_error << " roots of q accepted";
  v.detail = d.str();
  return v;
}

// 6 -------------------------------------------------------------------------
Verdict quotient_isomorphism(std::ostream& log) {
  Verdict v;
  auto K = Fp(3);
  std::mt19937_64 rng(kSeed + 6);
  std::uniform_int_distribution<int> nd(2, 3), md(1, 3);
  int failed = 0, trivial = 0;
  for (int i = 0; i < kQuotientCases; ++i) {
    const std::size_t n = static_cast<std::size_t>(nd(rng));
    std::vector<FFPolynomial> G;
    for (int k = md(rng); k > 0; --k) G.push_back(random_poly(rng, n, 2, 3, K));
    auto a = K->random_element(rng);
    auto with_line = G;
    with_line.push_back(FFPolynomial::variable(n, 0, K->one()) - FFPolynomial::constant(n, a));
    std::vector<FFPolynomial> ev;
    for (const auto& g : G) ev.push_back(evaluate_x1(g, a));
    bool lhs = is_trivial(FI(n, with_line), false).trivial;
    bool rhs = is_trivial(FI(n - 1, ev), false).trivial;
    trivial += lhs;
    if (lhs != rhs) ++failed;
    log << to_string(a) << " " << lhs << rhs << "\n";
  }
  v.pass = failed == 0;
  v.detail = std::to_string(kQuotientCases) + " pairs (a, G) over F3 (" + std::to_string(trivial) +
             " trivial), " + std::to_string(failed) + " mismatches";
  return v;
}

// 7 -------------------------------------------------------------------------
// Each ideal contains the field equations x^9 - x, so all of its zeros lie in
// F_9^n and exhaustive search there decides radical membership exactly.
Verdict radical_membership_suite(std::ostream& log) {
  Verdict v;
  auto K = Fp(3);
  auto F9 = quadratic_extension(3);
  std::mt19937_64 rng(kSeed + 7);
  std::uniform_int_distribution<int> nd(1, 2), md(1, 2);
  int members = 0, failed = 0;
  for (int i = 0; i < kRadicalCases; ++i) {
    const std::size_t n = static_cast<std::size_t>(nd(rng));
    std::vector<FFPolynomial> gens;
    FFPolynomial f(n);
    if (i % 2 == 0) {
      // f = u*r with u^2 in I: always a radical member
      auto u = random_poly(rng, n, 2, 2, K), r = random_poly(rng, n, 1, 2, K);
      gens.push_back(u * u);
      if (md(rng) == 2) gens.push_back(random_poly(rng, n, 2, 3, K));
      f = u * r;
    } else {
      for (int k = md(rng); k > 0; --k) gens.push_back(random_poly(rng, n, 2, 3, K));
      f = random_poly(rng, n, 2, 3, K);
    }
    for (std::size_t x = 0; x < n; ++x)
      gens.push_back(FFPolynomial::monomial(ExponentVector::unit(n, x, 9), K->one()) -
                     FFPolynomial::variable(n, x, K->one()));
    FI I(n, gens);
    auto got = radical_member(f, I, false).member;
    // oracle: f vanishes at every common zero in F_3^n and F_9^n
    bool vanishes = true;
    for (const auto& [field, gs, ff] :
         {std::tuple{K, gens, f}, std::tuple{F9, lifted(gens, F9), lift(f, F9)}})
      for (const auto& pt : all_points(field, n)) {
        bool zero = true;
        for (const auto& g : gs) zero = zero && is_zero(eval_naive(g, pt, field));
        if (zero && !is_zero(eval_naive(ff, pt, field))) vanishes = false;
      }
    members += got;
    if (got != vanishes) ++failed;
    log << to_string(f) << " " << got << vanishes << "\n";
  }
  v.pass = failed == 0;
  v.detail = std::to_string(kRadicalCases) + " ideals over F3 (n <= 2, " + std::to_string(members) +
             " members) against exhaustive search over F_3^n and F_9^n, " + std::to_string(failed) + " mismatches";
  return v;
}

using Suite = std::function<Verdict(std::ostream&)>;

// 8 -------------------------------------------------------------------------
std::string run_binary(const std::string& cmd) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return "<popen failed>";
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  out += "exit " + std::to_string(status) + "\n";
  return out;
}

std::string cli_transcript(const std::filesystem::path& dir) {
  std::string all;
  int i = 0;
  for (const auto& [p, I] : soundness_corpus()) {
    if (i++ % 4 != 0) continue;  // every fourth ideal keeps the process count small
    auto names = vars(I.nvars);
    std::ostringstream text;
    text << "field p " << p << "\nvars";
    for (const auto& nm : names) text << " " << nm;
    text << "\n";
    for (const auto& g : I.generators) text << to_string(g, std::span<const std::string>(names)) << "\n";
    auto file = dir / ("ideal" + std::to_string(i) + ".txt");
    std::ofstream(file) << text.str();
    for (const char* cmd : {"solve --trace --seed 5", "is-trivial", "gb", "eliminate", "gb-strong"})
      all += run_binary(std::string(NSZ_CLI_PATH) + " " + cmd + " " + file.string() + " 2>&1");
  }
  return all;
}

}  // namespace

int main() {
  const auto t0 = Clock::now();
  const std::vector<std::pair<std::string, Suite>> suites{
      {"solver soundness", solver_soundness},
      {"brute-force triviality oracle", brute_force_triviality},
      {"coprime splitting identity", coprime_splitting},
      {"intersection over powers of linear factors", root_power_intersection},
      {"specialization of strong bases", specialization},
      {"quotient isomorphism", quotient_isomorphism},
      {"radical membership", radical_membership_suite},
  };
  bool all = true;
  std::vector<std::string> first;
  for (std::size_t k = 0; k < suites.size(); ++k) {
    std::ostringstream log;
    auto s0 = Clock::now();
    Verdict v;
    try {
      v = suites[k].second(log);
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    first.push_back(log.str());
    all = all && v.pass;
    std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << k + 1 << " (" << suites[k].first << "): " << v.detail
              << " [" << seconds_since(s0) << " s]" << std::endl;
  }

  // 8: rerun every suite with the same seeds and the CLI twice in fresh processes.
  auto s0 = Clock::now();
  std::size_t differing = 0;
  for (std::size_t k = 0; k < suites.size(); ++k) {
    std::ostringstream log;
    try {
      suites[k].second(log);
    } catch (const std::exception&) {
    }
    differing += log.str() != first[k];
  }
  auto dir = std::filesystem::temp_directory_path() / ("nsz_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  auto a = cli_transcript(dir), b = cli_transcript(dir);
  std::filesystem::remove_all(dir);
  bool cli_ok = a == b && a.find("exit 0") != std::string::npos;
  bool det = differing == 0 && cli_ok;
  all = all && det;
  std::cout << (det ? "PASS" : "FAIL") << " criterion 8 (determinism): " << differing
            << " of 7 suite transcripts differ on rerun; CLI transcripts (" << a.size() << " bytes) "
            << (a == b ? "identical" : "differ") << " [" << seconds_since(s0) << " s]" << std::endl;

  double total = seconds_since(t0);
  bool in_time = total < kWholeSuiteSeconds;
  std::cout << "total " << total << " s (target " << kWholeSuiteSeconds << " s)" << (in_time ? "" : " EXCEEDED")
            << std::endl;
  return all && in_time ? 0 : 1;
}
