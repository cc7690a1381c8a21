#include <gtest/gtest.h>

#include "wadge/catalog.hpp"

using namespace wadge;
using O = Adjudication::Outcome;

namespace {

Strategy scripted_II(std::vector<Move> moves, std::string label = "scripted-II") {
  Strategy s;
  s.role = Role::II;
  s.label = std::move(label);
  s.next = [moves = std::move(moves)](const History& h) {
    std::size_t r = h.moves_II.size();
    return r < moves.size() ? moves[r] : Move::skip();
  };
  return s;
}

Strategy counting_I() {
  NameStream x;
  x.symbol = [](std::size_t i) { return Symbol(i); };
  return strategy_I_from_stream(x, "counting-I");
}

Adjudication outcome(GameKind kind, const Problem& f, const Strategy& sI, const Strategy& sII, std::size_t depth) {
  GameConfig cfg(kind, f);
  return adjudicate(cfg, play(cfg, sI, sII, depth));
}

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::Parse;
}

}  // namespace

// ---------------------------------------------------------------- play

TEST(Play, SkippingPlayerII) {
  GameConfig cfg(GameKind::Wadge, head());
  auto t = play(cfg, counting_I(), strategy_II_skip(), 6);
  EXPECT_EQ(t.moves_I, (Prefix{0, 1, 2, 3, 4, 5}));
  EXPECT_TRUE(t.output().empty());
  EXPECT_EQ(t.moves_II.size(), 6u);
  EXPECT_EQ(t.depth, 6u);
}

TEST(Play, BacktrackErase) {
  GameConfig cfg(GameKind::Backtrack, head());
  auto t = play(cfg, counting_I(), scripted_II({Move::nat(3), Move::erase(), Move::nat(5)}), 3);
  EXPECT_EQ(t.output(), Prefix{5});
  EXPECT_EQ(t.erases, 1u);
}

TEST(Play, IllegalMoves) {
  GameConfig commit(GameKind::ConstantCommit, c_fin(2));
  EXPECT_EQ(kind_of([&] { play(commit, counting_I(), strategy_II_skip(), 4); }), ErrorKind::IllegalMove);
  GameConfig wadge(GameKind::Wadge, head());
  EXPECT_EQ(kind_of([&] { play(wadge, counting_I(), scripted_II({Move::nat(1), Move::erase()}), 4); }),
            ErrorKind::IllegalMove);
  EXPECT_EQ(kind_of([&] { play(wadge, strategy_II_skip(), strategy_II_skip(), 4); }), ErrorKind::IllegalMove);
  Strategy skipping_I = strategy_II_skip();
  skipping_I.role = Role::I;
  EXPECT_EQ(kind_of([&] { play(wadge, skipping_I, strategy_II_skip(), 4); }), ErrorKind::IllegalMove);
  try {
    play(wadge, counting_I(), scripted_II({Move::nat(1), Move::erase()}), 4);
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("I=[0,1]"), std::string::npos) << e.what();
  }
}

TEST(Play, CommitNeedsFirstOrderProblem) {
  EXPECT_EQ(kind_of([] { GameConfig(GameKind::ConstantCommit, sierp_neg()); }), ErrorKind::Unsupported);
  EXPECT_NO_THROW(GameConfig(GameKind::ConstantCommit, seqacc_nat()));
  EXPECT_EQ(parse_game_kind("commit"), GameKind::ConstantCommit);
  EXPECT_EQ(kind_of([] { parse_game_kind("chess"); }), ErrorKind::UnknownName);
}

// ---------------------------------------------------------------- adjudication

TEST(Adjudicate, SeqaccOmegaAnyCommitmentWins) {
  auto sI = strategy_I_from_stream(encode(sp::omega_plus_one(), pt::omega()), "omega-I");
  auto a = outcome(GameKind::Wadge, seqacc_nat(), sI, strategy_II_constant(4, 2), 32);
  EXPECT_EQ(a.outcome, O::IIWins);
  EXPECT_EQ(a.rule, 3);
  EXPECT_FALSE(a.bound_dependent);
}

TEST(Adjudicate, DomainDeathIsRuleOne) {
  auto sI = strategy_I_from_stream(NameStream::periodic({0, 3, 0, 5}, {0}), "two-enumerations");
  auto a = outcome(GameKind::Wadge, acc_nat(), sI, strategy_II_constant(1, 0), 16);
  EXPECT_EQ(a.outcome, O::IIWins);
  EXPECT_EQ(a.rule, 1);
  EXPECT_EQ(a.depth, 4u);
}

TEST(Adjudicate, SilentPlayerIIIsBoundDependentRuleTwo) {
  auto a = outcome(GameKind::Wadge, seqacc_nat(), fixture_I_strategies(seqacc_nat())[0], strategy_II_skip(), 32);
  EXPECT_EQ(a.outcome, O::IWins);
  EXPECT_EQ(a.rule, 2);
  EXPECT_TRUE(a.bound_dependent);
}

TEST(Adjudicate, InvalidOutputIsExactRuleTwo) {
  auto a = outcome(GameKind::Wadge, lpo(), fixture_I_strategies(lpo())[0], strategy_II_constant(5, 0), 16);
  EXPECT_EQ(a.outcome, O::IWins);
  EXPECT_EQ(a.rule, 2);
  EXPECT_FALSE(a.bound_dependent);
}

TEST(Adjudicate, RuleOnePrecedesRuleThree) {
  // I enumerates 0 and then 1; II answers the enumerated 0
  auto sI = strategy_I_from_stream(NameStream::periodic({1, 2}, {0}), "dead-I");
  auto a = outcome(GameKind::Wadge, acc_nat(), sI, strategy_II_constant(0, 0), 8);
  EXPECT_EQ(a.rule, 1);
  EXPECT_EQ(a.outcome, O::IIWins);
  GameConfig cfg(GameKind::Wadge, acc_nat());
  auto t = play(cfg, sI, strategy_II_constant(0, 0), 8);
  Instance x{NameStream::from_prefix(t.moves_I), {}, "x"};
  EXPECT_TRUE(acc_nat().verdict(x, t.output(), 8).is_refuted());
}

TEST(Adjudicate, CommitAndBacktrackVerdictsAreFlagged) {
  auto c2 = fixture_I_strategies(c_fin(2));
  auto sII = player_II_strategy("mindchange-II", c_fin(2));
  auto b = outcome(GameKind::Backtrack, c_fin(2), c2[1], sII, 32);
  EXPECT_TRUE(b.bound_dependent);
  auto c = outcome(GameKind::ConstantCommit, c_fin(2), c2[1], translate_to_commit(sII, 1), 32);
  EXPECT_TRUE(c.bound_dependent);
}

// ---------------------------------------------------------------- realizers

TEST(Realizer, HeadWinsByDepthFour) {
  auto sII = strategy_II_from_realizer(realizers::head());
  for (const auto& sI : fixture_I_strategies(head())) {
    auto a = outcome(GameKind::Wadge, head(), sI, sII, 4);
    EXPECT_EQ(a.outcome, O::IIWins) << sI.label;
    EXPECT_EQ(a.rule, 3);
  }
}

TEST(Realizer, SeqaccFiniteWinsOnFinitePoints) {
  auto sII = strategy_II_from_realizer(realizers::seqacc_finite());
  std::size_t finite = 0;
  for (const auto& sI : fixture_I_strategies(seqacc_nat())) {
    auto a = outcome(GameKind::Wadge, seqacc_nat(), sI, sII, 64);
    if (sI.label.find(" w") != std::string::npos) continue;
    ++finite;
    EXPECT_EQ(a.outcome, O::IIWins) << sI.label << " " << format_adjudication(a);
    EXPECT_EQ(a.rule, 3);
  }
  EXPECT_EQ(finite, 25u);
}

TEST(Realizer, DomainViolatorLosesByRuleOne) {
  for (const auto& f : {lpo(), seqacc_nat(), acc_nat()}) {
    auto a = outcome(GameKind::Wadge, f, domain_violator(f), strategy_II_skip(), 8);
    EXPECT_EQ(a.outcome, O::IIWins) << f.name;
    EXPECT_EQ(a.rule, 1) << f.name;
  }
}

// ---------------------------------------------------------------- player I from a certificate

TEST(CertificateI, DefeatsEveryConstantCommitment) {
  auto sI = strategy_I_from_certificate(seqacc_nat(), canonical_seqacc_commitment_certificate());
  std::size_t games = 0;
  for (Nat v = 0; v <= 8; ++v)
    for (std::size_t c = 0; c <= 16; ++c) {
      auto a = outcome(GameKind::Wadge, seqacc_nat(), sI, strategy_II_constant(v, c), 64);
      ASSERT_EQ(a.outcome, O::IWins) << v << "@" << c;
      EXPECT_EQ(a.rule, 3);
      EXPECT_FALSE(a.bound_dependent);
      ++games;
    }
  EXPECT_EQ(games, 9u * 17u);
}

TEST(CertificateI, SilentIIMeetsTheLimit) {
  auto sI = strategy_I_from_certificate(seqacc_nat(), canonical_seqacc_commitment_certificate());
  GameConfig cfg(GameKind::Wadge, seqacc_nat());
  auto t = play(cfg, sI, strategy_II_skip(), 64);
  EXPECT_TRUE(points_equal(t.truth, pt::omega()));
  auto a = adjudicate(cfg, t);
  EXPECT_EQ(a.outcome, O::IWins);
  EXPECT_EQ(a.rule, 2);
  EXPECT_TRUE(a.bound_dependent);
}

TEST(CertificateI, ValidationRejectsNonExtensions) {
  auto c = canonical_seqacc_commitment_certificate();
  c.extension = [](std::size_t, Nat i) { return encode(sp::omega_plus_one(), pt::ordinal(pair(i, 0))); };
  EXPECT_EQ(kind_of([&] { validate_commitment_certificate(seqacc_nat(), c, 8, 8); }), ErrorKind::CertificateInvalid);
  EXPECT_EQ(kind_of([&] { strategy_I_from_certificate(seqacc_nat(), c); }), ErrorKind::CertificateInvalid);
}

// ---------------------------------------------------------------- extraction

TEST(Extraction, PassesOnNeqSuite) {
  auto sI = strategy_I_from_certificate(seqacc_nat(), canonical_seqacc_commitment_certificate());
  auto w = extract_reduction(sI, seqacc_nat(), sp::naturals());
  auto r = check_witness(neq(sp::naturals()), seqacc_nat(), w, neq_naturals_suite(6), 128);
  EXPECT_TRUE(r.pass) << r.first_counterexample;
  EXPECT_EQ(r.undetermined, 0u);
}

TEST(Extraction, SilentInputReplaysPlayAgainstSilentII) {
  auto sI = strategy_I_from_certificate(seqacc_nat(), canonical_seqacc_commitment_certificate());
  auto w = extract_reduction(sI, seqacc_nat(), sp::naturals());
  GameConfig cfg(GameKind::Wadge, seqacc_nat());
  auto t = play(cfg, sI, strategy_II_skip(), 33);
  EXPECT_EQ(w.inner.step(Prefix(32, kSkip)), t.moves_I);
  EXPECT_FALSE(death_depth(seqacc_nat(), t.moves_I));
}

TEST(Extraction, InnerIsMonotone) {
  auto sI = strategy_I_from_certificate(seqacc_nat(), canonical_seqacc_commitment_certificate());
  auto w = extract_reduction(sI, seqacc_nat(), sp::naturals());
  EXPECT_TRUE(check_monotone(w.inner, 6, 6).empty());
}

// ---------------------------------------------------------------- mind changes

TEST(MindChange, Examples) {
  auto m = c2_one_mind_change();
  auto zeros = run_mind_change(m, NameStream::periodic({}, {0}), 32);
  EXPECT_EQ(zeros.output, Prefix(32, 0));
  EXPECT_EQ(zeros.erases, 0u);
  auto late = run_mind_change(m, NameStream::periodic({0, 0, 0, 1}, {0}), 32);
  ASSERT_FALSE(late.output.empty());
  EXPECT_EQ(late.output[0], 1u);
  EXPECT_EQ(late.erases, 1u);
}

TEST(MindChange, EraseCountNondecreasingAndBounded) {
  auto m = c2_one_mind_change();
  for (const auto& x : c2_suite()) {
    std::size_t last = 0;
    for (std::size_t d = 0; d <= 128; ++d) {
      auto run = run_mind_change(m, x.input, d);
      ASSERT_GE(run.erases, last) << x.label;
      last = run.erases;
    }
    EXPECT_LE(last, 1u) << x.label;
  }
}

TEST(MindChange, BacktrackAndCommitWinOnC2Fixtures) {
  auto f = c_fin(2);
  auto sII = player_II_strategy("mindchange-II", f);
  auto commit = player_II_strategy("commit-II", f);
  for (const auto& sI : fixture_I_strategies(f)) {
    auto b = outcome(GameKind::Backtrack, f, sI, sII, 64);
    EXPECT_EQ(b.outcome, O::IIWins) << sI.label << " " << format_adjudication(b);
    auto c = outcome(GameKind::ConstantCommit, f, sI, commit, 64);
    EXPECT_EQ(c.outcome, O::IIWins) << sI.label << " " << format_adjudication(c);
  }
}

TEST(MindChange, TranslatingANonErasingStrategyKeepsItsMoves) {
  GameConfig wadge(GameKind::Wadge, c_fin(2));
  GameConfig commit(GameKind::ConstantCommit, c_fin(2));
  for (const auto& sI : fixture_I_strategies(c_fin(2))) {
    std::vector<Move> ones(32, Move::nat(1));
    auto original = play(wadge, sI, scripted_II(ones), 32);
    auto translated = play(commit, sI, translate_to_commit(scripted_II(ones), 1), 32);
    EXPECT_EQ(original.moves_II, translated.moves_II);
  }
}

// ---------------------------------------------------------------- properties

TEST(Properties, AdjudicationMonotoneInDepth) {
  std::vector<std::pair<Problem, std::vector<Strategy>>> cases;
  for (const auto& f : {seqacc_nat(), acc_nat(), lpo(), head(), c_fin(2)}) {
    std::vector<Strategy> IIs{strategy_II_skip()};
    for (Nat v = 0; v < 3; ++v)
      for (std::size_t c : {0, 3, 9}) IIs.push_back(strategy_II_constant(v, c));
    if (f.name != "ACC_N" && f.name != "C_2") IIs.push_back(player_II_strategy("realizer-II", f));
    cases.push_back({f, IIs});
  }
  for (auto& [f, IIs] : cases)
    for (const auto& sI : fixture_I_strategies(f))
      for (const auto& sII : IIs) {
        std::optional<Adjudication> settled;
        for (std::size_t d : {4, 8, 16, 32, 64, 128}) {
          auto a = outcome(GameKind::Wadge, f, sI, sII, d);
          if (settled) {
            ASSERT_EQ(a.outcome, settled->outcome) << f.name << " " << sI.label << " " << sII.label << " d=" << d;
            ASSERT_EQ(a.rule, settled->rule);
          } else if (a.outcome != O::Open && !a.bound_dependent) {
            settled = a;
          }
        }
      }
}

TEST(Properties, RealizersNeverLoseByRuleThree) {
  std::vector<Problem> fs{head(), seqacc_nat(), omega_example_f(), lpo()};
  for (const auto& f : fs) {
    auto sII = player_II_strategy("realizer-II", f);
    std::vector<Strategy> Is = fixture_I_strategies(f);
    Is.push_back(counting_I());
    for (const auto& sI : Is)
      for (std::size_t d : {16, 64, 128}) {
        auto a = outcome(GameKind::Wadge, f, sI, sII, d);
        EXPECT_FALSE(a.outcome == O::IWins && a.rule == 3) << f.name << " " << sI.label << " d=" << d;
      }
  }
}

TEST(Properties, CommitTranslationPreservesBacktrackWins) {
  auto f = c_fin(2);
  auto sII = player_II_strategy("mindchange-II", f);
  const std::size_t bound = 1;
  auto commit = translate_to_commit(sII, bound);
  for (const auto& sI : fixture_I_strategies(f))
    for (std::size_t d : {8, 32, 64}) {
      GameConfig back(GameKind::Backtrack, f);
      auto t = play(back, sI, sII, d);
      auto b = adjudicate(back, t);
      if (b.outcome != O::IIWins || t.erases > bound) continue;
      auto c = outcome(GameKind::ConstantCommit, f, sI, commit, d + bound);
      EXPECT_EQ(c.outcome, O::IIWins) << sI.label << " d=" << d;
    }
}
