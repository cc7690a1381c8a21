#include <gtest/gtest.h>

#include <cmath>

#include "wadge/fixtures.hpp"
#include "wadge/problems.hpp"

using namespace wadge;

namespace {

Verdict at_depth(const Problem& f, const Instance& x, const NameStream& out, std::size_t d) {
  return f.verdict(x, out.at(d), d);
}

Instance tagged(NameStream input, std::string label = "x") { return {std::move(input), {}, std::move(label)}; }

NameStream digits(Prefix head) { return NameStream::periodic(std::move(head), {0}); }

std::vector<std::pair<Problem, std::vector<Instance>>> catalog_suites() {
  return {{acc_nat(), acc_suite(4)},
          {seqacc_nat(), seqacc_suite(3)},
          {c_fin(2), c2_suite(4)},
          {lpo(), lpo_suite()},
          {sierp_neg(), not_suite()},
          {neq(sp::naturals()), neq_naturals_suite(4)},
          {neq(sp::layered(sp::naturals(), sp::naturals())), suite_by_name("layered8")},
          {omega_example_f(), omega_suite(6)},
          {head(), head_suite()}};
}

// Outputs to probe: the instance's own solutions and a few constants.
std::vector<NameStream> probe_outputs(const Problem& f, const Instance& x) {
  std::vector<NameStream> outs = x.oracleSolutions;
  if (f.first_order())
    for (Nat v = 0; v < 5; ++v) outs.push_back(nat_answer(v));
  else
    for (const auto& p : sample_points(f.out_space, 3)) outs.push_back(encode(f.out_space, p));
  return outs;
}

}  // namespace

// ---------------------------------------------------------------- examples

TEST(AccNat, Examples) {
  auto f = acc_nat();
  auto empty = tagged(negative_info_stream({}, pt::excluded({})));
  EXPECT_TRUE(at_depth(f, empty, nat_answer(5), 16).is_verified());
  auto three = tagged(negative_info_stream({{2, 3}}, pt::excluded({3})));
  EXPECT_EQ(three.input.at(4), (Prefix{0, 0, 4, 0}));
  EXPECT_TRUE(at_depth(f, three, nat_answer(3), 16).is_refuted());
  EXPECT_TRUE(at_depth(f, three, nat_answer(7), 16).is_verified());
}

TEST(AccNat, EnumeratedWithinDepthIsRefutedWithoutTag) {
  auto f = acc_nat();
  auto x = tagged(negative_info_stream({{1, 2}}, nullptr));
  EXPECT_TRUE(at_depth(f, x, nat_answer(2), 4).is_refuted());
  EXPECT_EQ(at_depth(f, x, nat_answer(3), 4).kind, Verdict::Kind::Undetermined);
}

TEST(AccNat, Domain) {
  auto f = acc_nat();
  EXPECT_EQ(f.domain({0, 3, 0, 3}), DomainVerdict::StillValid);
  EXPECT_EQ(f.domain({0, 3, 0, 4}), DomainVerdict::Dead);
  EXPECT_EQ(death_depth(f, {1, 0, 2, 5}), std::optional<std::size_t>(3));
}

TEST(SeqaccNat, Examples) {
  auto f = seqacc_nat();
  auto w = tagged(encode(sp::omega_plus_one(), pt::omega()));
  EXPECT_TRUE(at_depth(f, w, nat_answer(0), 16).is_verified());
  auto p = tagged(encode(sp::omega_plus_one(), pt::ordinal(pair(2, 1))));
  EXPECT_TRUE(at_depth(f, p, nat_answer(2), 32).is_refuted());
  EXPECT_TRUE(at_depth(f, p, nat_answer(9), 32).is_verified());
}

TEST(SeqaccNat, DecodesUntaggedInput) {
  auto f = seqacc_nat();
  auto p = tagged(NameStream::from_prefix(encode(sp::omega_plus_one(), pt::ordinal(pair(2, 1))).at(32)));
  p.input.truth = nullptr;
  EXPECT_TRUE(at_depth(f, p, nat_answer(2), 32).is_refuted());
  auto silent = tagged(NameStream::periodic({}, {}));
  EXPECT_EQ(at_depth(f, silent, nat_answer(2), 32).kind, Verdict::Kind::Undetermined);
}

TEST(ClosedChoice, Examples) {
  auto cn = c_nat();
  auto x = tagged(negative_info_stream({{0, 0}, {1, 1}, {2, 2}}, pt::excluded({0, 1, 2})));
  EXPECT_TRUE(at_depth(cn, x, nat_answer(3), 8).is_verified());
  EXPECT_TRUE(at_depth(cn, x, nat_answer(1), 8).is_refuted());

  auto c2 = c_fin(2);
  auto open = tagged(negative_info_stream({}, pt::excluded({})));
  EXPECT_TRUE(at_depth(c2, open, nat_answer(1), 8).is_verified());
  EXPECT_TRUE(at_depth(c2, open, nat_answer(2), 8).is_refuted());

  auto acc3 = acc_fin(3);
  auto ex2 = tagged(negative_info_stream({{1, 2}}, pt::excluded({2})));
  EXPECT_TRUE(at_depth(acc3, ex2, nat_answer(2), 8).is_refuted());
  EXPECT_EQ(acc3.domain({4}), DomainVerdict::Dead);
  EXPECT_EQ(c2.domain({1, 2}), DomainVerdict::Dead);
}

TEST(ClosedChoice, Preconditions) {
  EXPECT_THROW(acc_fin(1), Error);
  EXPECT_THROW(c_fin(0), Error);
}

TEST(Lpo, Examples) {
  auto f = lpo();
  auto zeros = tagged(NameStream::periodic({}, {}, pt::omega()));
  EXPECT_TRUE(at_depth(f, zeros, nat_answer(1), 16).is_verified());
  EXPECT_TRUE(at_depth(f, zeros, nat_answer(0), 16).is_refuted());
  auto one = tagged(NameStream::periodic({0, 0, 0, 1}, {}, pt::ordinal(3)));
  EXPECT_TRUE(at_depth(f, one, nat_answer(1), 16).is_refuted());
  EXPECT_TRUE(at_depth(f, one, nat_answer(0), 16).is_verified());
}

TEST(Lpo, UntaggedZerosAreBoundDependent) {
  auto f = lpo();
  auto zeros = tagged(NameStream::periodic({}, {}));
  auto v = at_depth(f, zeros, nat_answer(1), 16);
  EXPECT_TRUE(v.is_verified());
  EXPECT_TRUE(v.bound_dependent);
}

TEST(SierpNeg, Examples) {
  auto f = sierp_neg();
  auto bot = tagged(NameStream::periodic({}, {}, pt::sierp_bot()));
  EXPECT_TRUE(at_depth(f, bot, NameStream::periodic({1}, {0}), 8).is_verified());
  auto top = tagged(NameStream::periodic({1}, {}, pt::sierp_top()));
  EXPECT_TRUE(at_depth(f, top, NameStream::periodic({0, 1}, {}), 8).is_refuted());
}

TEST(Neq, Examples) {
  auto f = neq(sp::naturals());
  Space c = completion_of(sp::naturals());
  auto bottom = tagged(encode(c, pt::bottom()));
  EXPECT_TRUE(at_depth(f, bottom, nat_answer(0), 8).is_verified());
  auto four = tagged(encode(c, pt::embedded(pt::nat(4))));
  EXPECT_TRUE(at_depth(f, four, encode(sp::naturals(), pt::nat(4)), 16).is_refuted());
  EXPECT_TRUE(at_depth(f, four, encode(sp::naturals(), pt::nat(5)), 16).is_verified());

  auto s = neq(sp::sierpinski());
  auto top = tagged(encode(completion_of(sp::sierpinski()), pt::embedded(pt::sierp_top())));
  EXPECT_TRUE(at_depth(s, top, encode(sp::sierpinski(), pt::sierp_bot()), 16).is_verified());
}

TEST(Neq, Singletons) {
  EXPECT_THROW(neq(sp::finite(1)), Error);
  try {
    neq(sp::finite(1));
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SingletonSpace);
  }
  EXPECT_NO_THROW(neq(sp::finite(2)));
}

TEST(Pi02Acc, Examples) {
  auto f = pi02_acc_nat();
  auto seven = tagged(NameStream::periodic({3, 1, 4}, {7}, pt::nat(7)));
  EXPECT_TRUE(at_depth(f, seven, nat_answer(7), 16).is_refuted());
  EXPECT_TRUE(at_depth(f, seven, nat_answer(2), 16).is_verified());
  auto wild = tagged(NameStream::periodic({}, {0, 1}, pt::no_limit()));
  EXPECT_TRUE(at_depth(f, wild, nat_answer(0), 16).is_verified());
}

TEST(Dis, AgreesWithNeqBaire) {
  auto d = dis();
  auto n = neq(sp::baire());
  EXPECT_EQ(d.name, "DIS");
  Space b = sp::baire();
  Space c = completion_of(b);
  std::vector<PointPtr> pts;
  for (Nat k = 0; k < 19; ++k) pts.push_back(pt::stream(NameStream::periodic({k % 5}, {k % 3, k % 2})));
  auto suite = neq_suite(b, pts);
  ASSERT_EQ(suite.size(), 20u);
  std::vector<NameStream> outs{NameStream::periodic({}, {0}), NameStream::periodic({1}, {0, 1}),
                               NameStream::periodic({4}, {1})};
  for (const auto& x : suite)
    for (const auto& y : outs)
      for (std::size_t depth : {8, 32}) {
        auto a = at_depth(d, x, y, depth);
        auto e = at_depth(n, x, y, depth);
        ASSERT_EQ(a.kind, e.kind) << x.label;
        ASSERT_EQ(a.bound_dependent, e.bound_dependent) << x.label;
      }
  auto zero = tagged(encode(c, pt::embedded(pt::stream(NameStream::periodic({}, {0})))));
  EXPECT_TRUE(at_depth(d, zero, NameStream::periodic({}, {0}), 32).is_refuted());
  auto bottom = tagged(encode(c, pt::bottom()));
  EXPECT_TRUE(at_depth(d, bottom, NameStream::periodic({2}, {5}), 32).is_verified());
}

TEST(OmegaExample, Examples) {
  auto f = omega_example_f();
  auto zero = tagged(encode(sp::omega_plus_one(), pt::ordinal(0)));
  EXPECT_TRUE(at_depth(f, zero, digits({0, 1}), 16).is_verified());
  auto two = tagged(encode(sp::omega_plus_one(), pt::ordinal(2)));
  EXPECT_TRUE(at_depth(f, two, digits({0, 0, 2, 5}), 16).is_verified());
  EXPECT_TRUE(at_depth(f, two, digits({1, 0, 2, 5}), 16).is_refuted());
  auto w = tagged(encode(sp::omega_plus_one(), pt::omega()));
  EXPECT_FALSE(at_depth(f, w, digits({0, 0, 1}), 2).is_refuted());
  EXPECT_TRUE(at_depth(f, w, digits({0, 0, 1}), 3).is_refuted());
  EXPECT_TRUE(at_depth(f, w, NameStream::periodic({1, 0}, {9}), 16).is_refuted());
  EXPECT_TRUE(at_depth(f, w, NameStream::periodic({1, 0}, {0}), 16).is_verified());
}

TEST(OmegaExample, NamesMatchFloatingPointOracle) {
  for (Nat n = 0; n <= 20; ++n) {
    double expected = std::ldexp(n % 2 ? -1.0 : 1.0, -static_cast<int>(n));
    for (auto& name : omega_example_names(*pt::ordinal(n))) {
      Prefix p = name.at(40);
      double v = static_cast<double>(p[1]);
      double scale = 0.1;
      for (std::size_t i = 2; i < p.size(); ++i, scale /= 10) v += scale * static_cast<double>(p[i]);
      if (p[0] == 1) v = -v;
      EXPECT_NEAR(v, expected, 1e-15) << "n=" << n;
    }
  }
}

TEST(Catalog, LookupByName) {
  for (const auto& name : problem_names()) EXPECT_EQ(problem_by_name(name).name, name);
  EXPECT_EQ(problem_by_name("NEQ(N*(w+1))").name, "NEQ(N*(w+1))");
  EXPECT_EQ(problem_by_name("ACC_5").out_space->n, 5u);
  EXPECT_THROW(problem_by_name("NOPE"), Error);
  EXPECT_THROW(problem_by_name("NEQ(Fin(1))"), Error);
  EXPECT_TRUE(problem_by_name("ACC_N").first_order());
  EXPECT_FALSE(problem_by_name("NOT_S").first_order());
}

// ---------------------------------------------------------------- properties

TEST(Properties, FixtureInputsStayInTheDomain) {
  for (auto& [f, suite] : catalog_suites())
    for (const auto& x : suite) EXPECT_FALSE(death_depth(f, x.input.at(64))) << f.name << " " << x.label;
}

// Bound-dependent verdicts read the output at the bound and may change.
TEST(Properties, VerdictStability) {
  for (auto& [f, suite] : catalog_suites())
    for (const auto& x : suite)
      for (const auto& y : probe_outputs(f, x)) {
        std::optional<Verdict::Kind> settled;
        for (std::size_t d = 0; d <= 256; ++d) {
          auto v = at_depth(f, x, y, d);
          if (settled) {
            ASSERT_EQ(v.kind, *settled) << f.name << " " << x.label << " depth " << d;
          } else if (v.kind != Verdict::Kind::Undetermined && !v.bound_dependent) {
            settled = v.kind;
          }
        }
      }
}

TEST(Properties, DomainAntitone) {
  for (const auto& f : {acc_nat(), seqacc_nat(), lpo()}) {
    std::vector<Prefix> level{{}};
    for (std::size_t d = 0; d < 6; ++d) {
      std::vector<Prefix> next;
      for (const auto& u : level) {
        bool dead = f.domain(u) == DomainVerdict::Dead;
        for (Symbol s = 0; s < 5; ++s) {
          Prefix v = u;
          v.push_back(s);
          if (dead) ASSERT_EQ(f.domain(v), DomainVerdict::Dead) << f.name << " " << format_prefix(v);
          next.push_back(std::move(v));
        }
      }
      level = std::move(next);
    }
  }
}

TEST(Properties, SeqaccAgreesWithAccOnTranslatedInstances) {
  auto s = seqacc_nat();
  auto a = acc_nat();
  for (Nat n = 0; n <= 6; ++n)
    for (Nat m = 0; m <= 6; ++m) {
      auto xs = seqacc_instance(pt::ordinal(pair(n, m)));
      auto xa = acc_instance(std::make_pair(n, m));
      for (Nat k = 0; k < 8; ++k) {
        auto vs = at_depth(s, xs, nat_answer(k), 128);
        auto va = at_depth(a, xa, nat_answer(k), 128);
        ASSERT_EQ(vs.kind, va.kind) << "<" << n << "," << m << "> answer " << k;
      }
    }
}
