#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "nsz/cli.hpp"
#include "support.hpp"

using namespace nsz;
using namespace nsz::test;

namespace {

namespace fs = std::filesystem;

class Scratch {
 public:
  Scratch() {
    static int counter = 0;
    dir_ = fs::temp_directory_path() / ("nsz_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::create_directories(dir_);
  }
  ~Scratch() { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& content) {
    auto path = dir_ / name;
    std::ofstream(path) << content;
    return path.string();
  }

 private:
  fs::path dir_;
};

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "nsz");
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Parse, Examples) {
  auto pf = parse_problem("field p 5\nvars x1 x2\nx1*x2 - 1\n");
  EXPECT_EQ(pf.field.kind, FieldSpec::Kind::Prime);
  EXPECT_EQ(pf.field.prime, 5u);
  EXPECT_EQ(pf.vars, (std::vector<std::string>{"x1", "x2"}));
  ASSERT_EQ(pf.generators.size(), 1u);
  EXPECT_FALSE(pf.query.has_value());

  auto p = parse_polynomial("x1^2*x2 - 3", {"x1", "x2"});
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p.coefficient(ExponentVector{2, 1}), Rational(1));
  EXPECT_EQ(p.coefficient(ExponentVector{0, 0}), Rational(-3));

  EXPECT_THROW(parse_polynomial("x3 + 1", {"x1", "x2"}), ParseError);
}

TEST(Parse, GrammarDetails) {
  auto v = vars(2);
  EXPECT_EQ(parse_polynomial(" - ( x1 -x2 )^2*3 ", v), Q("-3*x1^2 + 6*x1*x2 - 3*x2^2", 2));
  EXPECT_EQ(parse_polynomial("x1 - -x2", v), Q("x1 + x2", 2));
  EXPECT_EQ(parse_polynomial("2^10", v), Q("1024", 2));
  EXPECT_EQ(parse_polynomial("3/6*x1", v), Q("x1/2", 2));
  auto pf = parse_problem("# header comment\n\nfield q   # rationals\nvars a b\n a*b # product\nquery a^2\n");
  EXPECT_EQ(pf.vars, (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(pf.generators.size(), 1u);
  ASSERT_TRUE(pf.query.has_value());
  EXPECT_EQ(*pf.query, parse_polynomial("a^2", {"a", "b"}));
}

TEST(Parse, ErrorsCarryPositions) {
  auto v = vars(2);
  try {
    parse_problem("field p 5\nvars x1 x2\nx1 + * x2\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 6u);
  }
  try {
    parse_problem("field p 5\nvars x1 x2\nx1*x2\n  x1 + y\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
    EXPECT_EQ(e.column(), 8u);
    EXPECT_NE(std::string(e.what()).find("undeclared"), std::string::npos);
  }
  EXPECT_THROW(parse_polynomial("x1^0", v), ParseError);
  EXPECT_THROW(parse_polynomial("x1^-2", v), ParseError);
  EXPECT_THROW(parse_polynomial("x1^x2", v), ParseError);
  EXPECT_THROW(parse_polynomial("(x1 + 1", v), ParseError);
  EXPECT_THROW(parse_polynomial("x1 / x2", v), ParseError);
  EXPECT_THROW(parse_polynomial("x1 / 0", v), ParseError);
  EXPECT_THROW(parse_polynomial("", v), ParseError);
  EXPECT_THROW(parse_problem("field p 9\nvars x\n"), ParseError);
  EXPECT_THROW(parse_problem("field p 1\nvars x\n"), ParseError);
  EXPECT_THROW(parse_problem("vars x\nfield q\n"), ParseError);
  EXPECT_THROW(parse_problem("field q\nx1\n"), ParseError);
  EXPECT_THROW(parse_problem("field q\nvars x x\n"), ParseError);
  EXPECT_THROW(parse_problem("field q\n"), ParseError);
}

TEST(Parse, PrinterRoundTrip) {
  std::mt19937_64 rng(113);
  std::uniform_int_distribution<int> c(-40, 40), e(0, 4), nterms(0, 6);
  auto names = vars(3);
  for (int i = 0; i < 500; ++i) {
    std::vector<Polynomial<Rational>::Term> ts;
    for (int k = nterms(rng); k > 0; --k)
      ts.push_back({ExponentVector{static_cast<std::uint32_t>(e(rng)), static_cast<std::uint32_t>(e(rng)),
                                   static_cast<std::uint32_t>(e(rng))},
                    Rational(c(rng), 1 + std::abs(c(rng)))});
    auto p = Polynomial<Rational>::from_terms(3, std::move(ts));
    auto text = to_string(p, std::span<const std::string>(names));
    EXPECT_EQ(parse_polynomial(text, names), p) << text;
    EXPECT_EQ(to_string(parse_polynomial(text, names), std::span<const std::string>(names)), text);
  }
  auto K = Fp(7);
  for (int i = 0; i < 200; ++i) {
    auto p = random_poly(rng, 3, 4, 5, K);
    auto text = to_string(p);
    EXPECT_EQ(reduce_rational(parse_polynomial(text, names), K), p) << text;
  }
}

TEST(Format, CanonicalText) {
  EXPECT_EQ(to_string(Q("3*x1^2*x2 - x3 + 1", 3)), "3*x1^2*x2 - x3 + 1");
  EXPECT_EQ(to_string(Q("-x2/2 + x1*x3", 3)), "x1*x3 - 1/2*x2");
  EXPECT_EQ(to_string(P("-x1 - 1", 1, Fp(5))), "4*x1 + 4");
  EXPECT_EQ(to_string(Q("0", 2)), "0");
  auto K = F9();
  auto p = FFPolynomial::variable(1, 0, K->generator() + K->one()) + FFPolynomial::constant(1, K->generator());
  EXPECT_EQ(to_string(p), "(t1 + 1)*x1 + t1");
}

TEST(Cli, Examples) {
  Scratch s;
  auto t = run({"is-trivial", s.write("t.txt", "field q\nvars x1\nx1\nx1 - 1\n")});
  EXPECT_EQ(t.code, 0);
  EXPECT_EQ(t.out, "TRIVIAL\ncert[1] = 1\ncert[2] = -1\n");

  auto sv = run({"solve", s.write("s.txt", "field p 3\nvars x1 x2\nx1^2 + 1\nx2 - x1\n")});
  EXPECT_EQ(sv.code, 0);
  EXPECT_EQ(sv.out, "POINT\next t1: t1^2 + 1\nx1 = t1\nx2 = t1\nVERIFIED\n");

  auto m = run({"member", s.write("m.txt", "field q\nvars x1 x2\nx1*x2 - 1\nx2^2 - 1\nquery x1\n")});
  EXPECT_EQ(m.code, 1);
  EXPECT_EQ(m.out, "NOT MEMBER\n");
}

TEST(Cli, Commands) {
  Scratch s;
  auto f = s.write("m.txt", "field q\nvars x1 x2\nx1*x2 - 1\nx2^2 - 1\n");
  EXPECT_EQ(run({"gb", f}).out, "x1 - x2\nx2^2 - 1\n");
  EXPECT_EQ(run({"gb", "--order", "wlex:1,2", f}).out, "x1^2 - 1\nx2 - x1\n");
  EXPECT_EQ(run({"gb-strong", f}).out, "x2 - x1\nx1^2 - 1\nlocus = x1^2 - 1\n");
  EXPECT_EQ(run({"eliminate", f}).out, "x1^2 - 1\n");
  auto yes = run({"member", f, "--query", "x1^2 - 1"});
  EXPECT_EQ(yes.code, 0);
  EXPECT_EQ(yes.out, "MEMBER\n");
  auto rad = run({"radical-member", s.write("r.txt", "field p 3\nvars x1 x2\nx1^2\nquery x1\n")});
  EXPECT_EQ(rad.code, 0);
  EXPECT_EQ(rad.out, "RADICAL MEMBER\nwitness exponent = 2\n");
  auto norad = run({"radical-member", s.write("r2.txt", "field p 3\nvars x1 x2\nx1^2\nquery x2\n")});
  EXPECT_EQ(norad.code, 1);
  EXPECT_EQ(norad.out, "NOT RADICAL MEMBER\n");
  auto a = s.write("a.txt", "field p 5\nvars x1 x2\nx1\n"), b = s.write("b.txt", "field p 5\nvars x1 x2\nx2\n");
  EXPECT_EQ(run({"intersect", a, b}).out, "x1*x2\n");
  auto nt = run({"is-trivial", a});
  EXPECT_EQ(nt.code, 1);
  EXPECT_EQ(nt.out, "NONTRIVIAL\n");
  auto tr = run({"solve", "--trace", s.write("h.txt", "field p 5\nvars x1 x2\nx1*x2 - 1\n")});
  EXPECT_EQ(tr.out, "POINT\nx1 = 1\nx2 = 1\nVERIFIED\ntrace x1: locus x1; x1 = 1\ntrace x2: base x2 + 4; x2 = 1\n");
}

TEST(Cli, ExitCodes) {
  Scratch s;
  const auto q = s.write("q.txt", "field q\nvars x1\nx1^2 - 2\n");
  const auto p = s.write("p.txt", "field p 7\nvars x1 x2\nx1^2 - 2\n");
  const auto bad = s.write("bad.txt", "field p 7\nvars x1\nx1 +\n");
  const auto composite = s.write("c.txt", "field p 15\nvars x1\nx1\n");
  const auto other = s.write("o.txt", "field p 7\nvars y1 y2\ny1\n");
  const auto noquery = s.write("n.txt", "field p 7\nvars x1\nx1\n");
  struct Case {
    std::vector<std::string> args;
    int code;
  };
  const std::vector<Case> golden{
      {{"gb", q}, 0},
      {{"gb", p}, 0},
      {{"solve", p}, 0},
      {{"is-trivial", q}, 1},
      {{"member", p, "--query", "x1"}, 1},
      {{"member", p, "--query", "x1^4 - 4"}, 0},
      {{"radical-member", q, "--query", "x1"}, 1},
      {{"solve", q}, 2},
      {{"gb", bad}, 2},
      {{"gb", composite}, 2},
      {{"gb", s.write("missing_dir/none.txt", "")}, 2},
      {{"gb", "/nonexistent/file.txt"}, 2},
      {{"gb", "--order", "wlex:1", p}, 2},
      {{"gb", "--order", "grevlex", p}, 2},
      {{"intersect", p, other}, 2},
      {{"intersect", p}, 2},
      {{"member", noquery}, 2},
      {{"member", p, "--query", "z"}, 2},
      {{"frobnicate", p}, 2},
      {{}, 2},
      {{"solve", "--seed", "abc", p}, 2},
  };
  for (const auto& c : golden) {
    auto r = run(c.args);
    std::string joined;
    for (const auto& a : c.args) joined += a + " ";
    EXPECT_EQ(r.code, c.code) << joined << "\n" << r.err;
    if (c.code == 2) EXPECT_FALSE(r.err.empty()) << joined;
  }
  auto r = run({"solve", q});
  EXPECT_NE(r.err.find("finite fields"), std::string::npos);
}

TEST(Cli, Deterministic) {
  Scratch s;
  auto f = s.write("d.txt", "field p 3\nvars x1 x2 x3\nx1^3 - x1 - 1\nx2^2 - x1*x2 + 2\nx3*x2 - x1\n");
  auto a = run({"solve", "--seed", "17", "--trace", f});
  auto b = run({"solve", "--seed", "17", "--trace", f});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("VERIFIED"), std::string::npos);
}
