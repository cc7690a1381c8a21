#pragma once

// Fixture instances for the problem catalog. Each instance carries its
// ground-truth tag and the solutions of its own problem, so the identity
// witness can be checked on it directly.

#include <string>
#include <vector>

#include "games.hpp"
#include "problems.hpp"
#include "reductions.hpp"
#include "spaces.hpp"

namespace wadge {

inline Instance acc_instance(std::optional<std::pair<Nat, std::size_t>> event) {
  if (!event) return {negative_info_stream({}, pt::excluded({})), nat_answers(4), "U={}"};
  auto [k, s] = *event;
  Instance x{negative_info_stream({{s, k}}, pt::excluded({k})), {}, "U={" + std::to_string(k) + "}@s" + std::to_string(s)};
  x.oracleSolutions = solutions_by_verdict(acc_nat(), x.truth(), nat_answers(4));
  return x;
}

/// {U = ∅} ∪ {U = {k} enumerated at stage s : k, s <= bound}
inline std::vector<Instance> acc_suite(Nat bound) {
  std::vector<Instance> out{acc_instance(std::nullopt)};
  for (Nat k = 0; k <= bound; ++k)
    for (Nat s = 0; s <= bound; ++s) out.push_back(acc_instance(std::make_pair(k, s)));
  return out;
}

inline Instance seqacc_instance(const PointPtr& p) {
  Instance x{encode(sp::omega_plus_one(), p), {}, to_string(p)};
  x.oracleSolutions = solutions_by_verdict(seqacc_nat(), p, nat_answers(5));
  return x;
}

/// {pair(n, m) : n, m <= bound} ∪ {ω}
inline std::vector<Instance> seqacc_suite(Nat bound) {
  std::vector<Instance> out;
  for (Nat n = 0; n <= bound; ++n)
    for (Nat m = 0; m <= bound; ++m) {
      auto x = seqacc_instance(pt::ordinal(pair(n, m)));
      x.label = "<" + std::to_string(n) + "," + std::to_string(m) + ">";
      out.push_back(std::move(x));
    }
  out.push_back(seqacc_instance(pt::omega()));
  return out;
}

/// C_2 instances: nothing excluded, or option o excluded at stage s < stages.
inline std::vector<Instance> c2_suite(std::size_t stages = 6) {
  std::vector<Instance> out;
  auto add = [&](NameStream x, std::string label) {
    Instance inst{std::move(x), {}, std::move(label)};
    inst.oracleSolutions = solutions_by_verdict(c_fin(2), inst.truth(), nat_answers(2));
    out.push_back(std::move(inst));
  };
  add(negative_info_stream({}, pt::excluded({})), "open");
  for (Nat o = 0; o < 2; ++o)
    for (std::size_t s = 0; s < stages; ++s)
      add(negative_info_stream({{s, o}}, pt::excluded({o})), "exclude " + std::to_string(o) + "@s" + std::to_string(s));
  return out;
}

/// 0^ω and 0^k 1 0^ω for k < 9.
inline std::vector<Instance> lpo_suite() {
  std::vector<Instance> out{{NameStream::periodic({}, {}, pt::omega()), {nat_answer(1)}, "0^w"}};
  for (Nat k = 0; k < 9; ++k) {
    Prefix head(k, 0);
    head.push_back(1);
    out.push_back({NameStream::periodic(head, {}, pt::ordinal(k)), {nat_answer(0)}, "0^" + std::to_string(k) + "1"});
  }
  return out;
}

/// ⊥ and ⊤ revealed at stages 0..8.
inline std::vector<Instance> not_suite() {
  std::vector<NameStream> tops{NameStream::periodic({1}, {}, pt::sierp_top()),
                               NameStream::periodic({0, 0, 0, 1}, {}, pt::sierp_top())};
  std::vector<Instance> out{{NameStream::periodic({}, {}, pt::sierp_bot()), tops, "F"}};
  for (Nat k = 0; k < 9; ++k) {
    Prefix head(k, 0);
    head.push_back(1);
    out.push_back({NameStream::periodic(head, {}, pt::sierp_top()), {NameStream::periodic({}, {}, pt::sierp_bot())},
                   "T@" + std::to_string(k)});
  }
  return out;
}

/// Completion names of the given points plus bottom; oracle solutions are
/// sample points of the space differing from the input.
inline std::vector<Instance> neq_suite(const Space& space, const std::vector<PointPtr>& points) {
  Space c = completion_of(space);
  std::vector<Instance> out;
  auto solutions = [&](const PointPtr& p) {
    std::vector<NameStream> sols;
    for (const auto& y : sample_points(space, 4))
      if (!p || !points_equal(p, y)) sols.push_back(encode(space, y));
    return sols;
  };
  for (const auto& p : points) out.push_back({encode(c, pt::embedded(p)), solutions(p), "emb(" + to_string(p) + ")"});
  out.push_back({encode(c, pt::bottom()), solutions(nullptr), "bottom"});
  return out;
}

inline std::vector<Instance> neq_naturals_suite(Nat bound) {
  std::vector<PointPtr> pts;
  for (Nat k = 0; k <= bound; ++k) pts.push_back(pt::nat(k));
  return neq_suite(sp::naturals(), pts);
}

/// 11 points of N×(ω+1) and bottom.
inline std::vector<Instance> product_suite() {
  std::vector<PointPtr> pts;
  for (Nat n = 0; n < 2; ++n)
    for (Nat m : {0, 1, 3}) pts.push_back(pt::pair(pt::nat(n), pt::ordinal(m)));
  for (Nat n = 0; n < 3; ++n) pts.push_back(pt::pair(pt::nat(n), pt::omega()));
  pts.push_back(pt::pair(pt::nat(2), pt::ordinal(5)));
  pts.push_back(pt::pair(pt::nat(3), pt::omega()));
  return neq_suite(sp::product(sp::naturals(), sp::omega_plus_one()), pts);
}

/// Ordinals 0..bound and ω, with both decimal names of f(n) as solutions.
inline std::vector<Instance> omega_suite(Nat bound) {
  std::vector<Instance> out;
  for (Nat n = 0; n <= bound; ++n)
    out.push_back({encode(sp::omega_plus_one(), pt::ordinal(n)), omega_example_names(*pt::ordinal(n)),
                   std::to_string(n)});
  out.push_back({encode(sp::omega_plus_one(), pt::omega()), omega_example_names(*pt::omega()), "w"});
  return out;
}

/// Inputs for HEAD.
inline std::vector<Instance> head_suite() {
  std::vector<Instance> out;
  for (Nat k = 0; k < 6; ++k)
    out.push_back({NameStream::periodic({k, 7 - k}, {1, 2}, pt::nat(k)), {nat_answer(k)}, "head " + std::to_string(k)});
  return out;
}

inline std::vector<std::string> suite_names() {
  return {"suite6", "suite8", "seqacc6", "c2", "lpo10", "not10", "neq-n6", "neq-n2", "product12", "layered8",
          "omega10", "head"};
}

inline std::vector<Instance> suite_by_name(const std::string& name) {
  if (name == "suite6") return acc_suite(6);
  if (name == "suite8") return acc_suite(8);
  if (name == "seqacc6") return seqacc_suite(6);
  if (name == "c2") return c2_suite();
  if (name == "lpo10") return lpo_suite();
  if (name == "not10") return not_suite();
  if (name == "neq-n6") return neq_naturals_suite(6);
  if (name == "neq-n2") return neq_naturals_suite(1);
  if (name == "product12") return product_suite();
  if (name == "layered8") return neq_suite(sp::layered(sp::naturals(), sp::naturals()), layered_nn_fixtures());
  if (name == "omega10") return omega_suite(10);
  if (name == "head") return head_suite();
  throw Error(ErrorKind::UnknownName, "unknown suite " + name);
}

/// Player-I strategies that play the fixture names of a problem's suite.
inline std::vector<Strategy> fixture_I_strategies(const Problem& f) {
  std::vector<Instance> suite;
  if (f.name == "ACC_N") suite = acc_suite(3);
  else if (f.name == "SEQACC_N") suite = seqacc_suite(4);
  else if (f.name == "C_2") suite = c2_suite(4);
  else if (f.name == "LPO") suite = lpo_suite();
  else if (f.name == "NOT_S") suite = not_suite();
  else if (f.name == "OMEGA_EXAMPLE") suite = omega_suite(10);
  else if (f.name == "HEAD") suite = head_suite();
  else if (f.name == "NEQ(N)") suite = neq_naturals_suite(6);
  else throw Error(ErrorKind::UnknownName, "no fixture strategies for " + f.name);
  std::vector<Strategy> out;
  for (std::size_t k = 0; k < suite.size(); ++k)
    out.push_back(strategy_I_from_stream(suite[k].input, "fixture-I:" + std::to_string(k) + " " + suite[k].label));
  return out;
}

}  // namespace wadge
