#pragma once

// The problem catalog: multivalued problems with prefix-level domain tests
// and finite-depth solution verdicts against ground-truth tags.

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "names.hpp"
#include "spaces.hpp"

namespace wadge {

enum class DomainVerdict { StillValid, Dead };

inline const char* to_string(DomainVerdict d) { return d == DomainVerdict::Dead ? "Dead" : "StillValid"; }

struct Verdict {
  enum class Kind { Verified, Refuted, Undetermined };
  Kind kind = Kind::Undetermined;
  std::string note;
  // Set when the verdict reads an infinite-information condition at the
  // depth bound instead of deciding it.
  bool bound_dependent = false;

  static Verdict verified(std::string note = {}, bool bound = false) { return {Kind::Verified, std::move(note), bound}; }
  static Verdict refuted(std::string note = {}, bool bound = false) { return {Kind::Refuted, std::move(note), bound}; }
  static Verdict undetermined(std::string note = {}) { return {Kind::Undetermined, std::move(note), false}; }

  bool is_verified() const { return kind == Kind::Verified; }
  bool is_refuted() const { return kind == Kind::Refuted; }
};

inline const char* to_string(Verdict::Kind k) {
  switch (k) {
    case Verdict::Kind::Verified: return "Verified";
    case Verdict::Kind::Refuted: return "Refuted";
    case Verdict::Kind::Undetermined: return "Undetermined";
  }
  return "?";
}

struct Instance {
  NameStream input;                       // truth tag = the point the input codes
  std::vector<NameStream> oracleSolutions;
  std::string label;

  const PointPtr& truth() const { return input.truth; }
};

struct Problem {
  std::string name;
  Space in_space;
  Space out_space;
  std::function<DomainVerdict(const Prefix&)> domain_test;
  std::function<Verdict(const Instance&, const Prefix& output, std::size_t depth)> solution_verdict;

  bool first_order() const {
    return out_space->kind == SpaceDesc::Kind::Naturals || out_space->kind == SpaceDesc::Kind::Finite;
  }
  DomainVerdict domain(const Prefix& p) const { return domain_test(p); }
  Verdict verdict(const Instance& x, const Prefix& out, std::size_t depth) const {
    return solution_verdict(x, out, depth);
  }
};

/// Length of the shortest Dead prefix of p, if any.
inline std::optional<std::size_t> death_depth(const Problem& f, const Prefix& p) {
  for (std::size_t d = 0; d <= p.size(); ++d)
    if (f.domain(truncate(p, d)) == DomainVerdict::Dead) return d;
  return std::nullopt;
}

// ---------------------------------------------------------------- helpers

/// Negative-information name: symbol 0 is silence, k+1 enumerates k.
inline NameStream negative_info_stream(std::vector<std::pair<std::size_t, Nat>> events, PointPtr truth) {
  NameStream s;
  s.symbol = [ev = std::move(events)](std::size_t i) -> Symbol {
    for (auto& [stage, k] : ev)
      if (stage == i) return k + 1;
    return 0;
  };
  s.truth = std::move(truth);
  return s;
}

inline std::set<Nat> enumerated_in(const Prefix& p) {
  std::set<Nat> out;
  for (Symbol s : p)
    if (s != 0) out.insert(s - 1);
  return out;
}

/// Name of a natural-number answer.
inline NameStream nat_answer(Nat v) { return NameStream::periodic({v}, {}, pt::nat(v)); }

namespace detail {

inline Verdict first_order_answer(const Prefix& out, Nat bound, Nat& value) {
  if (out.empty()) return Verdict::undetermined("no answer yet");
  value = out[0];
  if (value >= bound) return Verdict::refuted("answer " + std::to_string(value) + " out of range");
  return Verdict::undetermined();
}

inline constexpr Nat kUnbounded = ~Nat{0};

// Verdict for "the output names a point equal (want_equal) or unequal to target".
inline Verdict compare_output(const Space& space, const Prefix& out, const PointPtr& target, bool want_equal) {
  auto d = decode(space, out);
  if (d.is_invalid()) return Verdict::refuted("output is not a valid name");
  if (excludes(space, out, target))
    return want_equal ? Verdict::refuted("output excludes " + to_string(target))
                      : Verdict::verified("output excludes " + to_string(target));
  if (d.is_determined())  // determined and not excluded: equal to target
    return want_equal ? Verdict::verified("output names " + to_string(target))
                      : Verdict::refuted("output names " + to_string(target));
  auto reading = read_at_bound(space, out);
  if (!reading || out.empty()) return Verdict::undetermined("output not yet informative");
  bool same = points_equal(reading, target);
  std::string note = "at the bound the output reads " + to_string(reading);
  if (same == want_equal) return Verdict::verified(note, true);
  return Verdict::refuted(note, true);
}

// Decimal digits of 2^-n after the point (n digits: 5^n zero padded).
inline std::vector<Symbol> pow2_neg_digits(Nat n) {
  std::vector<Symbol> little{1};  // little-endian digits of 5^n
  for (Nat i = 0; i < n; ++i) {
    Symbol carry = 0;
    for (auto& d : little) {
      Symbol v = d * 5 + carry;
      d = v % 10;
      carry = v / 10;
    }
    while (carry) {
      little.push_back(carry % 10);
      carry /= 10;
    }
  }
  std::vector<Symbol> digits(n, 0);
  for (std::size_t i = 0; i < little.size() && i < n; ++i) digits[n - 1 - i] = little[i];
  return digits;
}

// Number of decimal digits of 2^k.
inline std::size_t pow2_digit_count(Nat k) {
  std::vector<Symbol> little{1};
  for (Nat i = 0; i < k; ++i) {
    Symbol carry = 0;
    for (auto& d : little) {
      Symbol v = d * 2 + carry;
      d = v % 10;
      carry = v / 10;
    }
    if (carry) little.push_back(carry);
  }
  return little.size();
}

}  // namespace detail

/// Decimal names of (-1)^n 2^-n (or of 0 for ω): the terminating expansion
/// and its 9-tail twin (for 0, the two signed zeros).
inline std::vector<NameStream> omega_example_names(const PointDesc& ordinal) {
  if (ordinal.omega)
    return {NameStream::periodic({0, 0}, {}), NameStream::periodic({1, 0}, {})};
  Nat n = ordinal.value;
  Symbol sign = n % 2 == 0 ? 0 : 1;
  if (n == 0) return {NameStream::periodic({sign, 1}, {}), NameStream::periodic({sign, 0}, {9})};
  auto digits = detail::pow2_neg_digits(n);
  Prefix exact{sign, 0};
  exact.insert(exact.end(), digits.begin(), digits.end());
  Prefix nines = exact;
  nines.back() -= 1;
  return {NameStream::periodic(exact, {}), NameStream::periodic(nines, {9})};
}

// ---------------------------------------------------------------- catalog

namespace detail {

inline Problem acc_problem(std::string name, Nat range) {
  Problem p;
  p.name = std::move(name);
  p.in_space = sp::baire();
  p.out_space = range == kUnbounded ? sp::naturals() : sp::finite(range);
  p.domain_test = [range](const Prefix& u) {
    std::set<Nat> seen;
    for (Symbol s : u) {
      if (s == 0) continue;
      if (range != kUnbounded && s > range) return DomainVerdict::Dead;
      seen.insert(s - 1);
      if (seen.size() > 1) return DomainVerdict::Dead;
    }
    return DomainVerdict::StillValid;
  };
  p.solution_verdict = [range](const Instance& x, const Prefix& out, std::size_t depth) {
    Nat v = 0;
    auto early = first_order_answer(out, range, v);
    if (early.is_refuted() || out.empty()) return early;
    auto seen = enumerated_in(x.input.at(depth));
    if (seen.count(v)) return Verdict::refuted(std::to_string(v) + " is enumerated within depth");
    const auto& tag = x.truth();
    if (!tag || tag->kind != PointDesc::Kind::Excluded) return Verdict::undetermined("no ground truth");
    if (std::find(tag->set.begin(), tag->set.end(), v) != tag->set.end())
      return Verdict::refuted(std::to_string(v) + " is the excluded point");
    return Verdict::verified(std::to_string(v) + " avoids " + to_string(tag));
  };
  return p;
}

inline Problem closed_choice_problem(std::string name, Nat range) {
  Problem p;
  p.name = std::move(name);
  p.in_space = sp::baire();
  p.out_space = range == kUnbounded ? sp::naturals() : sp::finite(range);
  p.domain_test = [range](const Prefix& u) {
    if (range == kUnbounded) return DomainVerdict::StillValid;
    std::set<Nat> seen;
    for (Symbol s : u) {
      if (s > range) return DomainVerdict::Dead;
      if (s) seen.insert(s - 1);
    }
    return seen.size() >= range ? DomainVerdict::Dead : DomainVerdict::StillValid;
  };
  p.solution_verdict = [range](const Instance& x, const Prefix& out, std::size_t depth) {
    Nat v = 0;
    auto early = first_order_answer(out, range, v);
    if (early.is_refuted() || out.empty()) return early;
    if (enumerated_in(x.input.at(depth)).count(v)) return Verdict::refuted(std::to_string(v) + " is enumerated");
    const auto& tag = x.truth();
    if (!tag || tag->kind != PointDesc::Kind::Excluded) return Verdict::undetermined("no ground truth");
    if (std::find(tag->set.begin(), tag->set.end(), v) != tag->set.end())
      return Verdict::refuted(std::to_string(v) + " is not in the closed set");
    return Verdict::verified(std::to_string(v) + " survives " + to_string(tag));
  };
  return p;
}

inline DomainVerdict binary_domain(const Prefix& u) {
  return detail::is_binary(u) ? DomainVerdict::StillValid : DomainVerdict::Dead;
}

}  // namespace detail

inline Problem acc_nat() { return detail::acc_problem("ACC_N", detail::kUnbounded); }

inline Problem acc_fin(Nat n) {
  if (n < 2) throw Error(ErrorKind::SingletonSpace, "ACC_n requires n >= 2");
  return detail::acc_problem("ACC_" + std::to_string(n), n);
}

inline Problem c_nat() { return detail::closed_choice_problem("C_N", detail::kUnbounded); }

inline Problem c_fin(Nat n) {
  if (n < 1) throw Error(ErrorKind::EmptySpace, "C_n requires n >= 1");
  return detail::closed_choice_problem("C_" + std::to_string(n), n);
}

inline Problem seqacc_nat() {
  Problem p;
  p.name = "SEQACC_N";
  p.in_space = sp::omega_plus_one();
  p.out_space = sp::naturals();
  p.domain_test = detail::binary_domain;
  p.solution_verdict = [](const Instance& x, const Prefix& out, std::size_t depth) {
    Nat v = 0;
    auto early = detail::first_order_answer(out, detail::kUnbounded, v);
    if (out.empty()) return early;
    PointPtr point = x.truth();
    if (!point || point->kind != PointDesc::Kind::Ordinal) {
      auto d = decode(sp::omega_plus_one(), x.input.at(depth));
      if (!d.is_determined()) return Verdict::undetermined("limit not yet excluded");
      point = d.point;
    }
    if (point->omega) return Verdict::verified("every number solves the limit point");
    Nat excluded = unpair(point->value).first;
    if (v == excluded) return Verdict::refuted(std::to_string(v) + " is the first coordinate of " + to_string(point));
    return Verdict::verified(std::to_string(v) + " != " + std::to_string(excluded));
  };
  return p;
}

inline Problem lpo() {
  Problem p;
  p.name = "LPO";
  p.in_space = sp::cantor();
  p.out_space = sp::finite(2);
  p.domain_test = detail::binary_domain;
  p.solution_verdict = [](const Instance& x, const Prefix& out, std::size_t depth) {
    Nat v = 0;
    auto early = detail::first_order_answer(out, 2, v);
    if (early.is_refuted() || out.empty()) return early;
    auto input = x.input.at(depth);
    bool has_one = std::find(input.begin(), input.end(), Symbol{1}) != input.end();
    bool bound = false;
    const auto& tag = x.truth();
    if (!has_one) {
      if (tag && tag->kind == PointDesc::Kind::Ordinal)
        has_one = !tag->omega;
      else
        bound = true;
    }
    Nat expected = has_one ? 0 : 1;
    if (v == expected) return Verdict::verified(has_one ? "input has a 1" : "input is all zeros", bound);
    return Verdict::refuted(has_one ? "input has a 1" : "input is all zeros", bound);
  };
  return p;
}

inline Problem sierp_neg() {
  Problem p;
  p.name = "NOT_S";
  p.in_space = sp::sierpinski();
  p.out_space = sp::sierpinski();
  p.domain_test = detail::binary_domain;
  p.solution_verdict = [](const Instance& x, const Prefix& out, std::size_t depth) {
    PointPtr point = x.truth();
    if (!point) point = read_at_bound(sp::sierpinski(), x.input.at(depth));
    if (!point) return Verdict::undetermined("no ground truth");
    PointPtr target = point->kind == PointDesc::Kind::SierpTop ? pt::sierp_bot() : pt::sierp_top();
    return detail::compare_output(sp::sierpinski(), out, target, true);
  };
  return p;
}

inline Problem neq(const Space& space) {
  if (!has_two_points(space)) throw Error(ErrorKind::SingletonSpace, "NEQ of a singleton space");
  Problem p;
  p.name = "NEQ(" + to_string(space) + ")";
  p.in_space = completion_of(space);
  p.out_space = space;
  p.domain_test = [](const Prefix&) { return DomainVerdict::StillValid; };
  p.solution_verdict = [space](const Instance& x, const Prefix& out, std::size_t depth) {
    PointPtr point = x.truth();
    if (!point) point = read_at_bound(completion_of(space), x.input.at(depth));
    if (!point) return Verdict::undetermined("no ground truth");
    if (point->kind == PointDesc::Kind::Bottom) {
      auto d = decode(space, out);
      if (d.is_invalid()) return Verdict::refuted("output is not a valid name");
      if (out.empty()) return Verdict::undetermined("no output yet");
      return Verdict::verified("any point differs from bottom");
    }
    if (point->kind != PointDesc::Kind::Embedded) return Verdict::undetermined("tag is not a completion point");
    return detail::compare_output(space, out, point->first, false);
  };
  return p;
}

inline Problem dis() {
  Problem p = neq(sp::baire());
  p.name = "DIS";
  return p;
}

inline Problem pi02_acc_nat() {
  Problem p;
  p.name = "PI02ACC_N";
  p.in_space = sp::baire();
  p.out_space = sp::naturals();
  p.domain_test = [](const Prefix&) { return DomainVerdict::StillValid; };
  p.solution_verdict = [](const Instance& x, const Prefix& out, std::size_t) {
    Nat v = 0;
    auto early = detail::first_order_answer(out, detail::kUnbounded, v);
    if (out.empty()) return early;
    const auto& tag = x.truth();
    if (!tag) return Verdict::undetermined("no ground truth");
    if (tag->kind == PointDesc::Kind::NoLimit) return Verdict::verified("no limit");
    if (tag->value == v) return Verdict::refuted("the limit is " + std::to_string(v));
    return Verdict::verified("the limit is " + std::to_string(tag->value));
  };
  return p;
}

inline Problem omega_example_f() {
  Problem p;
  p.name = "OMEGA_EXAMPLE";
  p.in_space = sp::omega_plus_one();
  p.out_space = sp::decimal_real();
  p.domain_test = detail::binary_domain;
  p.solution_verdict = [](const Instance& x, const Prefix& out, std::size_t depth) {
    if (decode(sp::decimal_real(), out).is_invalid()) return Verdict::refuted("not a decimal name");
    PointPtr point = x.truth();
    if (!point) {
      auto d = decode(sp::omega_plus_one(), x.input.at(depth));
      point = d.is_determined() ? d.point : nullptr;
    }
    if (!point) return Verdict::undetermined("no ground truth");
    for (auto& name : omega_example_names(*point)) {
      if (is_prefix(out, name.at(out.size()))) {
        if (out.size() < 2) return Verdict::undetermined("no integer part yet");
        return Verdict::verified("consistent with f(" + to_string(point) + ") to " + std::to_string(out.size()) +
                                     " symbols",
                                 true);
      }
    }
    return Verdict::refuted("output leaves every name of f(" + to_string(point) + ")");
  };
  return p;
}

/// Output the first symbol of the input; continuous, used as a realizer fixture.
inline Problem head() {
  Problem p;
  p.name = "HEAD";
  p.in_space = sp::baire();
  p.out_space = sp::naturals();
  p.domain_test = [](const Prefix&) { return DomainVerdict::StillValid; };
  p.solution_verdict = [](const Instance& x, const Prefix& out, std::size_t) {
    Nat v = 0;
    auto early = detail::first_order_answer(out, detail::kUnbounded, v);
    if (out.empty()) return early;
    Symbol first = x.input.symbol(0);
    if (v == first) return Verdict::verified("first symbol is " + std::to_string(first));
    return Verdict::refuted("first symbol is " + std::to_string(first));
  };
  return p;
}

/// Catalog lookup by name: ACC_N, SEQACC_N, ACC_<n>, C_N, C_<n>, LPO, NOT_S,
/// NEQ(<space>), PI02ACC_N, DIS, OMEGA_EXAMPLE, HEAD.
inline Problem problem_by_name(const std::string& name) {
  if (name == "ACC_N") return acc_nat();
  if (name == "SEQACC_N") return seqacc_nat();
  if (name == "C_N") return c_nat();
  if (name == "LPO") return lpo();
  if (name == "NOT_S") return sierp_neg();
  if (name == "PI02ACC_N") return pi02_acc_nat();
  if (name == "DIS") return dis();
  if (name == "OMEGA_EXAMPLE") return omega_example_f();
  if (name == "HEAD") return head();
  auto numbered = [&](const std::string& stem) -> std::optional<Nat> {
    if (name.rfind(stem, 0) != 0 || name.size() == stem.size()) return std::nullopt;
    std::string rest = name.substr(stem.size());
    if (!std::all_of(rest.begin(), rest.end(), [](char c) { return c >= '0' && c <= '9'; })) return std::nullopt;
    return std::stoull(rest);
  };
  if (auto n = numbered("ACC_")) return acc_fin(*n);
  if (auto n = numbered("C_")) return c_fin(*n);
  if (name.rfind("NEQ(", 0) == 0 && name.back() == ')') return neq(parse_space(name.substr(4, name.size() - 5)));
  throw Error(ErrorKind::UnknownName, "unknown problem " + name);
}

inline std::vector<std::string> problem_names() {
  return {"ACC_N", "SEQACC_N", "ACC_3", "C_N", "C_2", "LPO", "NOT_S", "NEQ(N)", "NEQ(N/N)", "PI02ACC_N", "DIS",
          "OMEGA_EXAMPLE", "HEAD"};
}

}  // namespace wadge
