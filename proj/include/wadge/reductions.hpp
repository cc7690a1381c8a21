#pragma once

// Reduction witnesses as (inner, outer) transducer pairs, a finite-depth
// checker, and the library of explicit witnesses.

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "names.hpp"
#include "problems.hpp"
#include "spaces.hpp"

namespace wadge {

/// inner maps f-input names to g-input names. outer reads the two-track
/// interleaving (g-solution on even positions, original f-input on odd
/// positions) and writes an f-solution name.
struct WitnessPair {
  std::string name;
  Transducer inner;
  Transducer outer;
  bool strong = false;
  // g-solutions to feed for a given f-instance. When empty the instance's
  // own oracleSolutions are used.
  std::function<std::vector<NameStream>(const Instance&)> solutions;
};

inline Prefix run_outer(const WitnessPair& w, const NameStream& q, const NameStream& x, std::size_t depth) {
  return w.outer.step(interleave(q.at(depth), x.at(depth)));
}

// ---------------------------------------------------------------- checking

struct CheckRecord {
  std::string label;
  DomainVerdict inner_domain = DomainVerdict::StillValid;
  std::optional<std::size_t> death_depth;
  std::vector<Verdict> outer;
  std::vector<Prefix> outputs;
  std::size_t depth = 0;

  bool refuted() const {
    return inner_domain == DomainVerdict::Dead ||
           std::any_of(outer.begin(), outer.end(), [](const Verdict& v) { return v.is_refuted(); });
  }
  bool undetermined() const {
    return std::any_of(outer.begin(), outer.end(),
                       [](const Verdict& v) { return v.kind == Verdict::Kind::Undetermined; });
  }
};

struct CheckReport {
  std::string f, g, witness;
  std::vector<CheckRecord> records;
  bool pass = true;
  bool strict = true;
  std::size_t undetermined = 0;
  std::string first_counterexample;
};

struct CheckOptions {
  bool strict = true;  // Undetermined counts as a failure
  std::size_t max_depth = 1u << 16;
};

inline CheckReport check_witness(const Problem& f, const Problem& g, const WitnessPair& w,
                                 const std::vector<Instance>& suite, std::size_t depth, CheckOptions opts = {}) {
  if (depth > opts.max_depth)
    throw Error(ErrorKind::ResourceLimit, "depth " + std::to_string(depth) + " exceeds the configured budget");
  CheckReport report;
  report.f = f.name;
  report.g = g.name;
  report.witness = w.name;
  report.strict = opts.strict;
  for (const auto& x : suite) {
    CheckRecord rec;
    rec.label = x.label;
    rec.depth = depth;
    Prefix g_input = w.inner.step(x.input.at(depth));
    rec.death_depth = death_depth(g, g_input);
    rec.inner_domain = rec.death_depth ? DomainVerdict::Dead : DomainVerdict::StillValid;
    auto sols = w.solutions ? w.solutions(x) : x.oracleSolutions;
    if (sols.empty()) throw Error(ErrorKind::MissingOracle, "no oracle solutions for " + x.label);
    for (const auto& q : sols) {
      Prefix out = run_outer(w, q, x.input, depth);
      rec.outer.push_back(f.verdict(x, out, depth));
      rec.outputs.push_back(std::move(out));
    }
    bool failed = rec.refuted() || (opts.strict && rec.undetermined());
    if (rec.undetermined()) ++report.undetermined;
    if (failed && report.pass) {
      report.pass = false;
      std::string why = rec.inner_domain == DomainVerdict::Dead ? "inner output leaves the domain of " + g.name
                                                                 : "outer verdict not Verified";
      for (std::size_t i = 0; i < rec.outer.size(); ++i)
        if (!rec.outer[i].is_verified()) {
          why += ": " + std::string(to_string(rec.outer[i].kind)) + " (" + rec.outer[i].note + ") on output " +
                 format_prefix(truncate(rec.outputs[i], 16));
          break;
        }
      report.first_counterexample = x.label + ": " + why;
    }
    report.records.push_back(std::move(rec));
  }
  return report;
}

/// Outer output unchanged when the original-input track is swapped for another.
inline bool strong_invariant_holds(const WitnessPair& w, const NameStream& q, const NameStream& x1,
                                   const NameStream& x2, std::size_t depth) {
  return run_outer(w, q, x1, depth) == run_outer(w, q, x2, depth);
}

// ---------------------------------------------------------------- helpers

namespace detail {

inline Prefix solution_track(const Prefix& p) { return deinterleave(p).first; }

/// [v] padded with zeros to length n (n >= 1).
inline Prefix nat_name(Nat v, std::size_t n) {
  Prefix out(std::max<std::size_t>(n, 1), 0);
  out[0] = v;
  return out;
}

inline std::optional<std::size_t> first_index(const Prefix& p, const std::function<bool(Symbol)>& pred) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (pred(p[i])) return i;
  return std::nullopt;
}

}  // namespace detail

/// g-solutions among `candidates` that g verifies for the instance tagged `tag`.
inline std::vector<NameStream> solutions_by_verdict(const Problem& g, const PointPtr& tag,
                                                    const std::vector<NameStream>& candidates,
                                                    std::size_t depth = 64) {
  Instance probe{NameStream::periodic({}, {}, tag), {}, "probe"};
  std::vector<NameStream> out;
  for (const auto& c : candidates)
    if (g.verdict(probe, c.at(depth), depth).is_verified()) out.push_back(c);
  return out;
}

inline std::vector<NameStream> nat_answers(Nat upto) {
  std::vector<NameStream> out;
  for (Nat v = 0; v < upto; ++v) out.push_back(nat_answer(v));
  return out;
}

/// ACC-style tag of an ACC_N name: the set enumerated anywhere in the input.
inline PointPtr enumerated_tag(const NameStream& x, std::size_t depth = 256) {
  auto seen = enumerated_in(x.at(depth));
  return pt::excluded({seen.begin(), seen.end()});
}

inline WitnessPair identity_witness(std::string label = "identity") {
  WitnessPair w;
  w.name = std::move(label);
  w.inner = identity_transducer();
  w.outer = {detail::solution_track, "solution track"};
  w.strong = true;
  return w;
}

/// Witness for f <= h from witnesses for f <= g and g <= h.
inline WitnessPair compose_witness(const WitnessPair& fg, const WitnessPair& gh,
                                   std::function<std::vector<NameStream>(const Instance&)> solutions) {
  WitnessPair w;
  w.name = gh.name + " . " + fg.name;
  w.inner = compose(gh.inner, fg.inner);
  w.outer.description = "composed outer";
  w.outer.step = [fg_inner = fg.inner.step, fg_outer = fg.outer.step, gh_outer = gh.outer.step](const Prefix& p) {
    auto [q, x] = deinterleave(p);
    Prefix g_input = fg_inner(x);
    Prefix g_solution = gh_outer(interleave(q, g_input));
    return fg_outer(interleave(g_solution, x));
  };
  w.strong = fg.strong && gh.strong;
  w.solutions = std::move(solutions);
  return w;
}

// ---------------------------------------------------------------- ACC <-> SEQACC

/// ACC_N <=sW SEQACC_N: silence through stage s writes 0^s; the first
/// enumeration of k at stage s continues as 0^pair(k,s) 1^ω.
inline WitnessPair witness_acc_to_seqacc() {
  WitnessPair w;
  w.name = "acc->seqacc";
  w.inner.description = "acc->seqacc inner";
  w.inner.step = [](const Prefix& g) {
    Prefix out(g.size(), 0);
    auto s = detail::first_index(g, [](Symbol a) { return a != 0; });
    if (!s) return out;
    Nat switch_at = pair(g[*s] - 1, *s);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = i < switch_at ? 0 : 1;
    return out;
  };
  w.outer = {detail::solution_track, "identity on the solution track"};
  w.strong = true;
  w.solutions = [](const Instance& x) {
    return solutions_by_verdict(acc_nat(), enumerated_tag(x.input), nat_answers(4));
  };
  return w;
}

/// SEQACC_N <=sW ACC_N: on reading the first 1 at position s, enumerate the
/// first coordinate of unpair(s).
inline WitnessPair witness_seqacc_to_acc() {
  WitnessPair w;
  w.name = "seqacc->acc";
  w.inner.description = "seqacc->acc inner";
  w.inner.step = [](const Prefix& p) {
    Prefix out(p.size(), 0);
    if (auto s = detail::first_index(p, [](Symbol a) { return a == 1; })) out[*s] = unpair(*s).first + 1;
    return out;
  };
  w.outer = {detail::solution_track, "identity on the solution track"};
  w.strong = true;
  w.solutions = [](const Instance& x) {
    PointPtr tag = pt::excluded({});
    auto d = decode(sp::omega_plus_one(), x.input.at(512));
    if (x.truth() && x.truth()->kind == PointDesc::Kind::Ordinal && !x.truth()->omega)
      tag = pt::excluded({unpair(x.truth()->value).first});
    else if (d.is_determined())
      tag = pt::excluded({unpair(d.point->value).first});
    return solutions_by_verdict(acc_nat(), tag, nat_answers(4));
  };
  return w;
}

/// ACC_N <= ACC_N through SEQACC_N.
inline WitnessPair witness_acc_roundtrip() {
  auto w = compose_witness(witness_acc_to_seqacc(), witness_seqacc_to_acc(), [](const Instance& x) {
    return solutions_by_verdict(acc_nat(), enumerated_tag(x.input), nat_answers(4));
  });
  w.name = "acc->seqacc->acc";
  return w;
}

// ---------------------------------------------------------------- certificates

/// Data witnessing discontinuity of f on a convergent sequence a_j -> a.
struct DiscontinuityCertificate {
  std::function<Instance(Nat j)> sequence;
  Instance limit;
  NameStream limit_solution;
  std::function<Prefix(Nat i)> words;
  std::function<Nat(Nat n, Nat i)> lambda;
};

struct CertificateCheck {
  bool ok = true;
  std::string problem;
};

inline CertificateCheck validate_certificate(const Problem& f, const DiscontinuityCertificate& cert, Nat n_max,
                                             Nat i_max, std::size_t depth = 64) {
  CertificateCheck out;
  auto fail = [&](std::string why) {
    if (out.ok) {
      out.ok = false;
      out.problem = std::move(why);
    }
  };
  if (f.verdict(cert.limit, cert.limit_solution.at(depth), depth).is_refuted())
    fail("limit solution is not a solution of the limit");
  for (Nat n = 0; n <= n_max; ++n)
    for (Nat i = 0; i <= i_max; ++i) {
      Nat j = cert.lambda(n, i);
      Instance aj = cert.sequence(j);
      std::string at = "(n=" + std::to_string(n) + ", i=" + std::to_string(i) + ", j=" + std::to_string(j) + ")";
      if (aj.input.at(n) != cert.limit.input.at(n)) fail("a_j leaves the first n symbols of a " + at);
      Prefix w = cert.words(i);
      for (const auto& q : aj.oracleSolutions)
        if (is_prefix(w, q.at(w.size()))) fail("an oracle solution of a_j extends words(i) " + at);
      if (f.first_order() && !w.empty() && f.verdict(aj, w, depth).is_verified())
        fail("words(i) is a solution of a_j " + at);
      if (death_depth(f, aj.input.at(depth))) fail("a_j leaves the domain " + at);
    }
  return out;
}

/// a = ω, a_j = j, words(i) = [i], lambda(n, i) = pair(i, n).
inline DiscontinuityCertificate canonical_seqacc_certificate() {
  DiscontinuityCertificate c;
  auto point_instance = [](PointPtr p, std::string label) {
    Instance x{encode(sp::omega_plus_one(), p), {}, std::move(label)};
    x.oracleSolutions = solutions_by_verdict(seqacc_nat(), p, nat_answers(5));
    return x;
  };
  c.sequence = [point_instance](Nat j) { return point_instance(pt::ordinal(j), "a_" + std::to_string(j)); };
  c.limit = point_instance(pt::omega(), "a");
  c.limit_solution = nat_answer(0);
  c.words = [](Nat i) { return Prefix{i}; };
  c.lambda = [](Nat n, Nat i) { return pair(i, n); };
  return c;
}

/// ACC_N <=*W f from a discontinuity certificate. Not strong: the outer
/// searches the solution for a word and the original input for an
/// enumeration in parallel.
inline WitnessPair witness_from_certificate(const Problem& f, const DiscontinuityCertificate& cert) {
  auto check = validate_certificate(f, cert, 6, 6);
  if (!check.ok) throw Error(ErrorKind::CertificateInvalid, check.problem);
  WitnessPair w;
  w.name = "certificate->" + f.name;
  w.inner.description = "switch from a to a_lambda(n,i)";
  w.inner.step = [cert](const Prefix& g) {
    if (auto n = detail::first_index(g, [](Symbol a) { return a != 0; }))
      return cert.sequence(cert.lambda(*n, g[*n] - 1)).input.at(g.size());
    return cert.limit.input.at(g.size());
  };
  w.outer.description = "first hit of: q extends words(i) -> i; i enumerated -> i+1";
  w.outer.step = [words = cert.words](const Prefix& p) -> Prefix {
    auto [q, g] = deinterleave(p);
    for (std::size_t t = 0; t < q.size(); ++t) {
      for (Nat i = 0; i <= t; ++i) {
        Prefix wi = words(i);
        if (wi.size() <= t + 1 && is_prefix(wi, q)) return detail::nat_name(i, q.size());
      }
      if (t < g.size() && g[t] != 0) return detail::nat_name(g[t] - 1 + 1, q.size());
    }
    return {};
  };
  w.strong = false;
  w.solutions = [cert](const Instance& x) {
    Prefix g = x.input.at(512);
    if (auto n = detail::first_index(g, [](Symbol a) { return a != 0; }))
      return cert.sequence(cert.lambda(*n, g[*n] - 1)).oracleSolutions;
    return cert.limit.oracleSolutions;
  };
  return w;
}

// ---------------------------------------------------------------- liftings

/// Lifts a name transducer X -> Y to completions: skips are projected away,
/// each input symbol emits the newly available output symbols (shifted past
/// the skip symbol) or a single skip.
inline Transducer lift_to_completion(Transducer t) {
  std::string desc = "lifted " + t.description;
  return {[step = std::move(t.step)](const Prefix& c) {
            Prefix out, proj;
            std::size_t produced = 0;
            for (Symbol s : c) {
              if (s != kSkip) proj.push_back(s - 1);
              Prefix y = step(proj);
              if (y.size() > produced) {
                for (std::size_t k = produced; k < y.size(); ++k) out.push_back(y[k] + 1);
                produced = y.size();
              } else {
                out.push_back(kSkip);
              }
            }
            return out;
          },
          std::move(desc)};
}

inline constexpr std::size_t kReadingDepth = 64;

/// NEQ(sup) <=sW NEQ(sub) for sub ⊆ sup. `translate` maps sup-names to
/// sub-names and writes nothing for points outside sub; `embed` maps sub-names
/// to sup-names.
inline WitnessPair lift_subspace(const Space& sub, const Space& sup, Transducer translate, Transducer embed) {
  WitnessPair w;
  w.name = "lift-subspace " + to_string(sub) + " <= " + to_string(sup);
  w.inner = lift_to_completion(translate);
  w.outer = {[e = embed.step](const Prefix& p) { return e(detail::solution_track(p)); }, "embed answer"};
  w.strong = true;
  w.solutions = [sub, sup, inner = w.inner](const Instance& x) {
    PointPtr g_point = read_at_bound(completion_of(sub), inner.step(x.input.at(kReadingDepth)));
    std::vector<NameStream> out;
    for (auto& y : sample_points(sub, 4)) {
      bool same = g_point && g_point->kind == PointDesc::Kind::Embedded && points_equal(g_point->first, y);
      if (!same) out.push_back(encode(sub, y));
    }
    return out;
  };
  return w;
}

inline WitnessPair lift_finite_in_naturals(Nat n) {
  Transducer translate{[n](const Prefix& p) { return !p.empty() && p[0] < n ? p : Prefix{}; },
                       "restrict to Fin(" + std::to_string(n) + ")"};
  return lift_subspace(sp::finite(n), sp::naturals(), translate, identity_transducer());
}

inline WitnessPair lift_naturals_identity() {
  return lift_subspace(sp::naturals(), sp::naturals(), identity_transducer(), identity_transducer());
}

/// NEQ(X) <=sW NEQ(Y) from a surjection s : X -> Y with section t (s.t = id),
/// both given on names. The section is checked on y_fixtures first.
inline WitnessPair lift_surjection(const Space& x_space, const Space& y_space, Transducer s_name, Transducer t_name,
                                   std::vector<PointPtr> y_fixtures) {
  for (const auto& y : y_fixtures) {
    Prefix ty = t_name.step(encode(y_space, y).at(kReadingDepth));
    Prefix sty = s_name.step(ty);
    PointPtr back = read_at_bound(y_space, sty);
    if (!back || !points_equal(back, y))
      throw Error(ErrorKind::SectionMismatch, "s(t(" + to_string(y) + ")) reads " + to_string(back));
  }
  WitnessPair w;
  w.name = "lift-surjection " + to_string(x_space) + " -> " + to_string(y_space);
  w.inner = lift_to_completion(s_name);
  w.outer = {[t = t_name.step](const Prefix& p) { return t(detail::solution_track(p)); }, "section on the answer"};
  w.strong = true;
  w.solutions = [x_space, y_space, s = s_name, y_fixtures](const Instance& x) {
    PointPtr sx;
    if (x.truth() && x.truth()->kind == PointDesc::Kind::Embedded)
      sx = read_at_bound(y_space, s.step(encode(x_space, x.truth()->first).at(kReadingDepth)));
    std::vector<NameStream> out;
    for (const auto& y : y_fixtures)
      if (!sx || !points_equal(sx, y)) out.push_back(encode(y_space, y));
    return out;
  };
  return w;
}

/// s = first projection N×(ω+1) -> N with t(n) = (n, ω).
inline WitnessPair lift_first_projection() {
  Transducer s{[](const Prefix& p) { return deinterleave(p).first; }, "first projection"};
  Transducer t{[](const Prefix& q) { return interleave(q, Prefix(q.size(), 0)); }, "n -> (n, w)"};
  std::vector<PointPtr> ys;
  for (Nat n = 0; n < 6; ++n) ys.push_back(pt::nat(n));
  return lift_surjection(sp::product(sp::naturals(), sp::omega_plus_one()), sp::naturals(), s, t, ys);
}

namespace detail {

// s : N×(ω+1) -> N/N, (n, ω) -> ./n and (n, j) -> unpair(j).first/.
inline Prefix layered_surjection(const Prefix& p) {
  auto [even, bits] = deinterleave(p);
  Prefix out;
  if (even.empty()) return out;
  Nat n = even[0];
  bool escaped = false;
  for (std::size_t idx = 0; idx < bits.size(); ++idx) {
    if (escaped) {
      out.push_back(0);
    } else if (bits[idx] == 1) {
      out.push_back(2);
      out.push_back(unpair(idx).first);
      escaped = true;
    } else {
      out.push_back(idx < n ? 1 : 0);
    }
  }
  return out;
}

// Section of layered_surjection: ./n -> (n, ω); m/. -> (N, pair(m, c)) where c
// counts the ω+1 bits already written when m arrives.
inline Prefix layered_section(const Prefix& r) {
  auto esc = first_index(r, [](Symbol a) { return a >= 2; });
  auto zero = first_index(r, [](Symbol a) { return a == 0; });
  std::optional<std::size_t> known;
  Nat n = 0;
  if (zero && (!esc || *zero < *esc)) {
    known = *zero;
    n = *zero;
  } else if (esc) {
    known = *esc;
  }
  if (!known) return {};
  std::optional<Nat> target;
  if (esc && *esc + 1 < r.size()) target = pair(r[*esc + 1], *esc + 1 - *known);
  Prefix even, odd;
  for (std::size_t i = *known; i < r.size(); ++i) {
    std::size_t b = i - *known;
    even.push_back(b == 0 ? n : 0);
    odd.push_back(target && i >= *esc + 1 && b == *target ? 1 : 0);
  }
  // bits at positions >= the arrival of m are decided by target alone
  if (target)
    for (std::size_t b = 0; b < odd.size(); ++b) odd[b] = b == *target ? 1 : 0;
  return interleave(even, odd);
}

}  // namespace detail

inline std::vector<PointPtr> layered_nn_fixtures() {
  std::vector<PointPtr> ys;
  for (Nat n = 0; n < 4; ++n) ys.push_back(pt::lower(pt::nat(n)));
  for (Nat m = 0; m < 4; ++m) ys.push_back(pt::upper(pt::nat(m)));
  return ys;
}

/// NEQ(N×(ω+1)) <=sW NEQ(N/N).
inline WitnessPair lift_product_to_layered() {
  return lift_surjection(sp::product(sp::naturals(), sp::omega_plus_one()),
                         sp::layered(sp::naturals(), sp::naturals()),
                         {detail::layered_surjection, "(n,w)->./n, (n,j)->unpair(j).first/."},
                         {detail::layered_section, "./n->(n,w), m/.->(n,pair(m,c))"}, layered_nn_fixtures());
}

// ---------------------------------------------------------------- LPO and negation

/// (NOT_S <=sW LPO, LPO <=W NOT_S)
inline std::pair<WitnessPair, WitnessPair> witness_lpo_neg() {
  WitnessPair not_to_lpo;
  not_to_lpo.name = "not<=lpo";
  not_to_lpo.inner = {[](const Prefix& p) { return p; }, "Sierpinski name as a Cantor name"};
  not_to_lpo.outer.description = "LPO bit 1 -> T, 0 -> F";
  not_to_lpo.outer.step = [](const Prefix& p) {
    Prefix q = detail::solution_track(p);
    Prefix out(q.size(), 0);
    if (!q.empty() && q[0] == 1) out[0] = 1;
    return out;
  };
  not_to_lpo.strong = true;
  not_to_lpo.solutions = [](const Instance& x) {
    bool top = x.truth() && x.truth()->kind == PointDesc::Kind::SierpTop;
    return std::vector<NameStream>{nat_answer(top ? 0 : 1)};
  };

  WitnessPair lpo_to_not;
  lpo_to_not.name = "lpo<=not";
  lpo_to_not.inner = {[](const Prefix& p) { return p; }, "Cantor name as a Sierpinski name"};
  lpo_to_not.outer.description = "first of: a 1 in the answer -> 1; a 1 in the input -> 0";
  lpo_to_not.outer.step = [](const Prefix& p) -> Prefix {
    auto [q, x] = deinterleave(p);
    for (std::size_t t = 0; t < q.size(); ++t) {
      if (q[t] == 1) return detail::nat_name(1, q.size());
      if (t < x.size() && x[t] == 1) return detail::nat_name(0, q.size());
    }
    return {};
  };
  lpo_to_not.strong = false;
  lpo_to_not.solutions = [](const Instance& x) {
    bool zeros = x.truth() && x.truth()->kind == PointDesc::Kind::Ordinal && x.truth()->omega;
    if (zeros)
      return std::vector<NameStream>{NameStream::periodic({1}, {}), NameStream::periodic({0, 0, 1}, {}),
                                     NameStream::periodic({0, 0, 0, 0, 0, 1}, {})};
    return std::vector<NameStream>{NameStream::periodic({}, {})};
  };
  return {not_to_lpo, lpo_to_not};
}

// ---------------------------------------------------------------- decimal example

/// (OMEGA_EXAMPLE <=W C_2, C_2 <=W OMEGA_EXAMPLE). C_2 option 0 is the sign
/// +, option 1 the sign -.
inline std::pair<WitnessPair, WitnessPair> witness_omega_example() {
  WitnessPair f_to_c2;
  f_to_c2.name = "omega<=c2";
  f_to_c2.inner.description = "exclude the sign f(n) does not have";
  f_to_c2.inner.step = [](const Prefix& p) {
    Prefix out(p.size(), 0);
    if (auto n = detail::first_index(p, [](Symbol a) { return a == 1; })) out[*n] = *n % 2 == 0 ? 2 : 1;
    return out;
  };
  f_to_c2.outer.description = "sign from C_2, digits from the input";
  f_to_c2.outer.step = [](const Prefix& pp) {
    auto [q, p] = deinterleave(pp);
    Prefix out;
    if (q.empty()) return out;
    out.push_back(q[0] >= 1 ? 1 : 0);
    if (p.empty()) return out;
    out.push_back(p[0] == 1 ? 1 : 0);
    auto n = detail::first_index(p, [](Symbol a) { return a == 1; });
    if (n) {
      auto digits = *n == 0 ? std::vector<Symbol>{} : detail::pow2_neg_digits(*n);
      for (std::size_t i = 0; i < p.size(); ++i) out.push_back(i < digits.size() ? digits[i] : 0);
    } else {
      // |f| <= 2^-k for every candidate: leading zeros below 10^-(digits(2^k)-1) are safe
      std::size_t safe = detail::pow2_digit_count(p.size()) - 1;
      out.insert(out.end(), safe, 0);
    }
    return out;
  };
  f_to_c2.strong = false;
  f_to_c2.solutions = [](const Instance& x) {
    const auto& tag = x.truth();
    if (!tag || tag->omega) return std::vector<NameStream>{nat_answer(0), nat_answer(1)};
    return std::vector<NameStream>{nat_answer(tag->value % 2 == 0 ? 0 : 1)};
  };

  WitnessPair c2_to_f;
  c2_to_f.name = "c2<=omega";
  c2_to_f.inner.description = "parity of the ordinal tracks the open option";
  c2_to_f.inner.step = [](const Prefix& c) {
    Prefix out(c.size(), 0);
    if (auto s = detail::first_index(c, [](Symbol a) { return a != 0; })) {
      std::size_t parity = c[*s] == 1 ? 1 : 0;  // 0 excluded -> odd -> sign -
      std::size_t n = *s % 2 == parity ? *s : *s + 1;
      if (out.size() < n + 1) out.resize(n + 1, 0);
      out[n] = 1;
    }
    return out;
  };
  c2_to_f.outer.description = "sign of the decimal answer";
  c2_to_f.outer.step = [](const Prefix& p) {
    Prefix q = detail::solution_track(p);
    if (q.empty()) return Prefix{};
    return detail::nat_name(q[0] >= 1 ? 1 : 0, q.size());
  };
  c2_to_f.strong = true;
  c2_to_f.solutions = [inner = c2_to_f.inner](const Instance& x) {
    auto d = decode(sp::omega_plus_one(), inner.step(x.input.at(kReadingDepth)));
    PointDesc point = d.is_determined() ? *d.point : *pt::omega();
    return omega_example_names(point);
  };
  return {f_to_c2, c2_to_f};
}

/// Reads a decimal name as sign * (integer + 0.d1 d2 ...) using `digits`
/// fraction digits, as an exact fraction numerator / 10^digits.
inline std::optional<long double> decimal_value(const Prefix& name, std::size_t digits) {
  if (name.size() < 2 + digits) return std::nullopt;
  long double v = static_cast<long double>(name[1]);
  long double scale = 1;
  for (std::size_t i = 0; i < digits; ++i) {
    scale /= 10;
    v += scale * static_cast<long double>(name[2 + i]);
  }
  return name[0] == 1 ? -v : v;
}

}  // namespace wadge
