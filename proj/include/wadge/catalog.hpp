#pragma once

// Name-addressable registry of problems, witnesses, candidates, families and
// strategies.

#include <functional>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "games.hpp"
#include "refute.hpp"
#include "reductions.hpp"

namespace wadge {

struct WitnessEntry {
  std::string name;
  std::string f, g;  // empty for the identity: any f = g
  std::string suite;
  std::string description;
  std::function<WitnessPair()> make;
};

inline std::vector<WitnessEntry> witness_catalog() {
  return {
      {"identity", "", "", "", "f <=sW f", [] { return identity_witness(); }},
      {"acc->seqacc", "ACC_N", "SEQACC_N", "suite8", "ACC_N <=sW SEQACC_N: silence then 0^pair(k,s) 1^w",
       witness_acc_to_seqacc},
      {"seqacc->acc", "SEQACC_N", "ACC_N", "seqacc6", "SEQACC_N <=sW ACC_N: the first 1 at s enumerates unpair(s).first",
       witness_seqacc_to_acc},
      {"acc<->seqacc", "ACC_N", "ACC_N", "suite6", "ACC_N <=sW ACC_N through SEQACC_N (composition)",
       witness_acc_roundtrip},
      {"cert:seqacc", "ACC_N", "SEQACC_N", "suite6", "ACC_N <=*W SEQACC_N from the discontinuity certificate",
       [] { return witness_from_certificate(seqacc_nat(), canonical_seqacc_certificate()); }},
      {"lift-sub:fin2<=n", "NEQ(N)", "NEQ(Fin(2))", "neq-n6", "NEQ(N) <=sW NEQ(Fin(2)) by subspace lifting",
       [] { return lift_finite_in_naturals(2); }},
      {"lift-sub:n<=n", "NEQ(N)", "NEQ(N)", "neq-n6", "NEQ(N) <=sW NEQ(N), the trivial subspace",
       lift_naturals_identity},
      {"lift-surj:proj", "NEQ(N*(w+1))", "NEQ(N)", "product12", "first projection N*(w+1) -> N with t(n) = (n, w)",
       lift_first_projection},
      {"lift-surj:layered", "NEQ(N*(w+1))", "NEQ(N/N)", "product12",
       "surjection N*(w+1) -> N/N with a continuous section", lift_product_to_layered},
      {"not<=lpo", "NOT_S", "LPO", "not10", "negation on S <=sW LPO", [] { return witness_lpo_neg().first; }},
      {"lpo<=not", "LPO", "NOT_S", "lpo10", "LPO <=W negation on S (not strong)",
       [] { return witness_lpo_neg().second; }},
      {"omega<=c2", "OMEGA_EXAMPLE", "C_2", "omega10", "the decimal example <=W C_2",
       [] { return witness_omega_example().first; }},
      {"c2<=omega", "C_2", "OMEGA_EXAMPLE", "c2", "C_2 <=W the decimal example",
       [] { return witness_omega_example().second; }},
      {"extract:seqacc", "NEQ(N)", "SEQACC_N", "neq-n6", "NEQ(N) <=*W SEQACC_N extracted from cert-I",
       [] {
         auto sI = strategy_I_from_certificate(seqacc_nat(), canonical_seqacc_commitment_certificate());
         return extract_reduction(sI, seqacc_nat(), sp::naturals());
       }},
  };
}

struct CandidateEntry {
  std::string name;
  std::string f, g;
  std::string description;
  std::function<WitnessPair()> make;
};

inline std::vector<CandidateEntry> candidate_catalog() {
  return {
      {"const-0", "ACC_N", "ACC_N", "identity inner, outer always 0", constant_zero_candidate},
      {"naive-strong-lpo", "LPO", "NOT_S", "outer reads only the negation's answer",
       [] { return naive_lpo_strong_candidate(); }},
      {"naive-layered", "NEQ(N/N)", "NEQ(N*(w+1))", "commits ./n while the answer is silent",
       naive_layered_candidate},
  };
}

/// Canonical problem name as the catalog spells it.
inline std::string canonical_problem_name(const std::string& name) { return problem_by_name(name).name; }

inline const WitnessEntry& find_witness(const std::string& name) {
  static const auto entries = witness_catalog();
  for (const auto& e : entries)
    if (e.name == name) return e;
  throw Error(ErrorKind::UnknownName, "unknown witness " + name);
}

/// Library witness or refutation candidate for f <= g.
inline WitnessPair witness_for(const std::string& name, const Problem& f, const Problem& g) {
  auto matches = [&](const std::string& ef, const std::string& eg) {
    return canonical_problem_name(ef) == f.name && canonical_problem_name(eg) == g.name;
  };
  for (const auto& c : candidate_catalog())
    if (c.name == name) {
      if (!matches(c.f, c.g)) throw Error(ErrorKind::Mismatch, name + " is a candidate for " + c.f + " <= " + c.g);
      return c.make();
    }
  const auto& e = find_witness(name);
  if (e.f.empty()) {
    if (f.name != g.name) throw Error(ErrorKind::Mismatch, "identity needs f = g");
  } else if (!matches(e.f, e.g)) {
    throw Error(ErrorKind::Mismatch, name + " witnesses " + e.f + " <= " + e.g);
  }
  return e.make();
}

inline AdversarialFamily family_for(const Problem& f, const Problem& g) {
  if (f.name == "ACC_N" && g.name == "ACC_N") return acc_family();
  if (f.name == "LPO" && g.name == "NOT_S") return lpo_family();
  if (f.name == "NEQ(N/N)" && g.name == "NEQ(N*(w+1))") return layered_switch_family();
  throw Error(ErrorKind::Unsupported, "no adversarial family for " + f.name + " <= " + g.name);
}

// ---------------------------------------------------------------- strategies

inline Transducer realizer_for(const Problem& f) {
  if (f.name == "HEAD") return realizers::head();
  if (f.name == "SEQACC_N") return realizers::seqacc_finite();
  if (f.name == "OMEGA_EXAMPLE") return realizers::omega_example_finite();
  if (f.name == "LPO") return realizers::lpo_positive();
  throw Error(ErrorKind::UnknownName, "no realizer fixture for " + f.name);
}

/// Plays outside the domain of f.
inline Strategy domain_violator(const Problem& f) {
  Prefix bad;
  if (f.name == "ACC_N") bad = {1, 2};
  else if (f.in_space->kind == SpaceDesc::Kind::Cantor || f.in_space->kind == SpaceDesc::Kind::OmegaPlusOne ||
           f.in_space->kind == SpaceDesc::Kind::Sierpinski)
    bad = {0, 2};
  else if (f.name == "C_2") bad = {1, 2};
  else throw Error(ErrorKind::UnknownName, "no domain violator for " + f.name);
  return strategy_I_from_stream(NameStream::from_prefix(bad), "violator-I");
}

inline std::vector<Strategy> player_I_strategies(const std::string& name, const Problem& f) {
  if (name == "cert-I") {
    if (f.name != "SEQACC_N") throw Error(ErrorKind::UnknownName, "cert-I is defined for SEQACC_N");
    return {strategy_I_from_certificate(f, canonical_seqacc_commitment_certificate())};
  }
  if (name == "any") return fixture_I_strategies(f);
  if (name == "violator-I") return {domain_violator(f)};
  const std::string stem = "fixture-I:";
  if (name.rfind(stem, 0) == 0) {
    auto all = fixture_I_strategies(f);
    std::size_t k = 0;
    try {
      k = std::stoul(name.substr(stem.size()));
    } catch (const std::exception&) {
      throw Error(ErrorKind::Parse, "bad fixture index in " + name);
    }
    if (k >= all.size()) throw Error(ErrorKind::UnknownName, name + ": only " + std::to_string(all.size()) + " fixtures");
    return {all[k]};
  }
  throw Error(ErrorKind::UnknownName, "unknown Player-I strategy " + name);
}

inline Strategy player_II_strategy(const std::string& name, const Problem& f) {
  if (name == "skip-II") return strategy_II_skip();
  if (name == "realizer-II") return strategy_II_from_realizer(realizer_for(f));
  if (name == "mindchange-II" || name == "commit-II") {
    if (f.name != "C_2") throw Error(ErrorKind::UnknownName, name + " is defined for C_2");
    auto s = strategy_II_from_mind_change(c2_one_mind_change());
    return name == "commit-II" ? translate_to_commit(s, 1) : s;
  }
  const std::string stem = "const-II:";
  if (name.rfind(stem, 0) == 0) {
    std::string rest = name.substr(stem.size());
    auto at = rest.find('@');
    try {
      Nat v = std::stoull(rest.substr(0, at));
      std::size_t c = at == std::string::npos ? 0 : std::stoul(rest.substr(at + 1));
      return strategy_II_constant(v, c);
    } catch (const std::exception&) {
      throw Error(ErrorKind::Parse, "expected const-II:<value>[@<round>], got " + name);
    }
  }
  throw Error(ErrorKind::UnknownName, "unknown Player-II strategy " + name);
}

struct StrategyEntry {
  std::string name;
  std::string description;
};

inline std::vector<StrategyEntry> strategy_catalog() {
  return {{"cert-I", "SEQACC_N: extends 0^j until II commits i, then plays pair(i, j)"},
          {"fixture-I:<k>", "plays the k-th fixture name of the problem"},
          {"any", "every fixture-I strategy in turn"},
          {"violator-I", "leaves the problem's domain"},
          {"const-II:<v>[@<c>]", "skips until round c, then plays v"},
          {"realizer-II", "replays the problem's realizer fixture"},
          {"mindchange-II", "C_2: answer 0, erase and answer 1 once 0 is excluded"},
          {"commit-II", "C_2: constant-commitment translation of mindchange-II"},
          {"skip-II", "always skips"}};
}

inline std::vector<std::pair<std::string, std::string>> problem_descriptions() {
  return {{"ACC_N", "all-or-co-unique choice on N"},
          {"SEQACC_N", "ACC on w+1: answer != unpair(n).first on n, anything on w"},
          {"ACC_<n>", "all-or-co-unique choice on {0..n-1}"},
          {"C_N", "closed choice on N"},
          {"C_<n>", "closed choice on {0..n-1}"},
          {"LPO", "1 iff the binary input is all zeros"},
          {"NOT_S", "negation on Sierpinski space"},
          {"NEQ(<space>)", "a point different from the input, input in the completion"},
          {"PI02ACC_N", "avoid the limit of the input if it has one"},
          {"DIS", "NEQ on Baire space"},
          {"OMEGA_EXAMPLE", "w+1 -> R, n -> (-1)^n 2^-n, w -> 0, in decimal"},
          {"HEAD", "the first input symbol"}};
}

inline std::vector<std::string> space_examples() {
  return {"N", "Fin(3)", "w+1", "S", "Baire", "Cantor", "R10", "N*(w+1)", "N/N", "(w+1)/N", "N/(w+1)", "Compl(N)"};
}

}  // namespace wadge
