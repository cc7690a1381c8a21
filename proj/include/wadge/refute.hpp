#pragma once

// Bounded adversarial search for counterexamples to candidate witnesses.
// Each family generates f-instances from a short list of decisions and may
// watch the candidate's behaviour while doing so.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "reductions.hpp"

namespace wadge {

using Schedule = std::vector<Nat>;

/// Candidate runs available to a family while it builds instances.
struct Probe {
  const WitnessPair* cand = nullptr;
  std::size_t depth = 0;

  Prefix inner(const Prefix& x) const { return cand->inner.step(x); }
  Prefix outer(const Prefix& q, const Prefix& x) const { return cand->outer.step(interleave(q, x)); }
};

struct AdversarialFamily {
  std::string name;
  // number of choices at the next decision point; 0 means the schedule is complete
  std::function<Nat(const Schedule&, const Probe&)> branches;
  // the f-instance reached by the schedule, completed canonically
  std::function<Instance(const Schedule&, const Probe&)> complete;
  // valid g-solutions for the g-instance the candidate produced
  std::function<std::vector<NameStream>(const Instance&, const Prefix& inner_out, const Probe&)> oracle;
};

struct Counterexample {
  std::string family;
  Schedule schedule;
  std::string label;
  Prefix input;       // f-input prefix at the failing depth
  Prefix solution;    // g-solution prefix fed to the outer (empty for domain deaths)
  Prefix inner_out;
  Prefix outer_out;
  std::size_t depth = 0;
  std::string contract;  // "domain" or "solution"
  std::string note;
};

struct RefuteBounds {
  std::size_t depth = 64;
  Nat alphabet = 8;
  std::size_t budget = 100'000;  // schedules evaluated
  std::size_t max_decisions = 3;
};

struct RefuteResult {
  enum class Status { Found, NotFound, BudgetExceeded };
  Status status = Status::NotFound;
  std::optional<Counterexample> counterexample;
  std::size_t schedules = 0;
};

inline const char* to_string(RefuteResult::Status s) {
  switch (s) {
    case RefuteResult::Status::Found: return "Counterexample";
    case RefuteResult::Status::NotFound: return "NotFound";
    case RefuteResult::Status::BudgetExceeded: return "BudgetExceeded";
  }
  return "?";
}

/// Evaluates one schedule; returns the violation with the smallest depth.
inline std::optional<Counterexample> evaluate_schedule(const Problem& f, const Problem& g, const WitnessPair& cand,
                                                       const AdversarialFamily& family, const Schedule& schedule,
                                                       std::size_t depth) {
  Probe probe{&cand, depth};
  Instance inst = family.complete(schedule, probe);
  const NameStream& x = inst.input;
  Prefix full_inner = cand.inner.step(x.at(depth));
  if (auto dd = death_depth(g, full_inner)) {
    for (std::size_t d = 0; d <= depth; ++d) {
      Prefix h = cand.inner.step(x.at(d));
      if (h.size() >= *dd) {
        Counterexample c{family.name, schedule, inst.label, x.at(d), {}, h, {}, d, "domain",
                         "inner output leaves the domain of " + g.name};
        return c;
      }
    }
  }
  std::optional<Counterexample> best;
  for (const auto& q : family.oracle(inst, full_inner, probe)) {
    for (std::size_t d = 1; d <= depth; ++d) {
      if (best && d >= best->depth) break;
      Prefix out = cand.outer.step(interleave(q.at(d), x.at(d)));
      Verdict v = f.verdict(inst, out, d);
      if (v.is_refuted() && !v.bound_dependent) {
        best = Counterexample{family.name, schedule, inst.label, x.at(d), q.at(d), cand.inner.step(x.at(d)),
                              out, d, "solution", v.note};
        break;
      }
    }
  }
  return best;
}

/// Iterative deepening over the number of decisions; within one length the
/// lexicographically least failing schedule is reported.
inline RefuteResult refute_witness(const Problem& f, const Problem& g, const WitnessPair& cand,
                                   const AdversarialFamily& family, RefuteBounds bounds = {}) {
  RefuteResult result;
  Probe probe{&cand, bounds.depth};
  bool exhausted = false;
  std::function<bool(Schedule&, std::size_t)> dfs = [&](Schedule& s, std::size_t remaining) -> bool {
    if (remaining == 0) {
      if (++result.schedules > bounds.budget) {
        exhausted = true;
        return true;
      }
      if (auto c = evaluate_schedule(f, g, cand, family, s, bounds.depth)) {
        result.status = RefuteResult::Status::Found;
        result.counterexample = std::move(c);
        return true;
      }
      return false;
    }
    Nat n = std::min<Nat>(family.branches(s, probe), bounds.alphabet);
    for (Nat a = 0; a < n; ++a) {
      s.push_back(a);
      bool stop = dfs(s, remaining - 1);
      s.pop_back();
      if (stop) return true;
    }
    return false;
  };
  for (std::size_t k = 0; k <= bounds.max_decisions; ++k) {
    Schedule s;
    if (dfs(s, k)) break;
  }
  if (exhausted) result.status = RefuteResult::Status::BudgetExceeded;
  return result;
}

/// Re-runs the stored schedule and confirms the same violation.
inline bool replay_counterexample(const Problem& f, const Problem& g, const WitnessPair& cand,
                                  const AdversarialFamily& family, const Counterexample& c, std::size_t depth) {
  auto again = evaluate_schedule(f, g, cand, family, c.schedule, depth);
  return again && again->depth == c.depth && again->contract == c.contract && again->outer_out == c.outer_out &&
         again->inner_out == c.inner_out && again->input == c.input && again->solution == c.solution;
}

// ---------------------------------------------------------------- families

/// ACC_N instances: decision 0 is silence, k+1 enumerates k at stage 0.
inline AdversarialFamily acc_family() {
  AdversarialFamily fam;
  fam.name = "acc-symbol";
  fam.branches = [](const Schedule& s, const Probe&) -> Nat { return s.empty() ? ~Nat{0} : 0; };
  fam.complete = [](const Schedule& s, const Probe&) {
    if (s.empty() || s[0] == 0) return Instance{negative_info_stream({}, pt::excluded({})), {}, "U={}"};
    Nat k = s[0] - 1;
    return Instance{negative_info_stream({{0, k}}, pt::excluded({k})), {}, "U={" + std::to_string(k) + "}@s0"};
  };
  fam.oracle = [](const Instance&, const Prefix& inner_out, const Probe&) {
    auto seen = enumerated_in(inner_out);
    return solutions_by_verdict(acc_nat(), pt::excluded({seen.begin(), seen.end()}), nat_answers(4));
  };
  return fam;
}

/// LPO instances: 0^ω, or a single 1 at position k-1. On 0^ω the oracle
/// delays the 1 of the negation's answer until after the candidate has
/// committed on an all-zero answer prefix.
inline AdversarialFamily lpo_family() {
  AdversarialFamily fam;
  fam.name = "lpo-delay";
  fam.branches = [](const Schedule& s, const Probe&) -> Nat { return s.empty() ? ~Nat{0} : 0; };
  fam.complete = [](const Schedule& s, const Probe&) {
    if (s.empty() || s[0] == 0) return Instance{NameStream::periodic({}, {}, pt::omega()), {}, "0^w"};
    Nat k = s[0] - 1;
    Prefix head(k, 0);
    head.push_back(1);
    return Instance{NameStream::periodic(head, {}, pt::ordinal(k)), {}, "0^" + std::to_string(k) + "1"};
  };
  fam.oracle = [](const Instance& x, const Prefix&, const Probe& probe) {
    if (x.truth() && !x.truth()->omega) return std::vector<NameStream>{NameStream::periodic({}, {})};
    std::size_t commit = 0;
    for (std::size_t t = 1; t <= probe.depth; ++t)
      if (!probe.outer(Prefix(t, 0), x.input.at(t)).empty()) {
        commit = t;
        break;
      }
    Prefix head(commit, 0);
    head.push_back(1);
    return std::vector<NameStream>{NameStream::periodic(head, {}, pt::sierp_top())};
  };
  return fam;
}

namespace detail {

// Completion-coded N/N name of ./y: shifted unary code then shifted zeros.
inline Prefix completion_lower(Nat y, std::size_t len) {
  Prefix out;
  for (Nat i = 0; i < y; ++i) out.push_back(2);
  out.push_back(1);
  while (out.size() < len) out.push_back(1);
  return out;
}

inline std::vector<PointPtr> product_pool(Nat n_max, Nat m_max) {
  std::vector<PointPtr> pool;
  for (Nat n = 0; n < n_max; ++n)
    for (Nat m = 0; m < m_max; ++m) pool.push_back(pt::pair(pt::nat(n), pt::ordinal(m)));
  for (Nat n = 0; n < n_max; ++n) pool.push_back(pt::pair(pt::nat(n), pt::omega()));
  return pool;
}

}  // namespace detail

/// NEQ(N/N) instances: first decision y sends ./y; second decision v waits
/// until the candidate's inner has committed on ./y and then escapes to v/.
inline AdversarialFamily layered_switch_family() {
  AdversarialFamily fam;
  fam.name = "commit-then-switch";
  fam.branches = [](const Schedule& s, const Probe&) -> Nat { return s.size() < 2 ? ~Nat{0} : 0; };
  fam.complete = [](const Schedule& s, const Probe& probe) {
    Space nn = sp::layered(sp::naturals(), sp::naturals());
    if (s.empty()) return Instance{NameStream::periodic({}, {}, pt::bottom()), {}, "bottom"};
    Nat y = s[0];
    if (s.size() == 1)
      return Instance{NameStream::periodic(detail::completion_lower(y, 0), {1}, pt::embedded(pt::lower(pt::nat(y)))),
                      {}, "./" + std::to_string(y)};
    Nat v = s[1];
    // let the lower name pass until the inner has written something
    std::size_t commit = y + 1;
    for (std::size_t d = y + 1; d <= probe.depth; ++d) {
      Prefix h = probe.inner(detail::completion_lower(y, d));
      if (std::any_of(h.begin(), h.end(), [](Symbol a) { return a != kSkip; })) {
        commit = d;
        break;
      }
    }
    Prefix head = detail::completion_lower(y, commit);
    head.push_back(3);
    head.push_back(v + 1);
    return Instance{NameStream::periodic(head, {1}, pt::embedded(pt::upper(pt::nat(v)))), {},
                    "./" + std::to_string(y) + " then " + std::to_string(v) + "/. at " + std::to_string(commit)};
  };
  fam.oracle = [](const Instance&, const Prefix& inner_out, const Probe&) {
    Space x = sp::product(sp::naturals(), sp::omega_plus_one());
    PointPtr produced = read_at_bound(completion_of(x), inner_out);
    std::vector<NameStream> out;
    for (const auto& p : detail::product_pool(4, 6)) {
      bool same = produced && produced->kind == PointDesc::Kind::Embedded && points_equal(produced->first, p);
      if (!same) out.push_back(encode(x, p));
    }
    return out;
  };
  return fam;
}

// ---------------------------------------------------------------- naive candidates

/// ACC_N -> ACC_N with identity inner and an outer that always answers 0.
inline WitnessPair constant_zero_candidate() {
  WitnessPair w;
  w.name = "const-0";
  w.inner = identity_transducer();
  w.outer = {[](const Prefix& p) {
               Prefix q = detail::solution_track(p);
               return q.empty() ? Prefix{} : detail::nat_name(0, q.size());
             },
             "answer 0"};
  w.strong = true;
  return w;
}

/// LPO -> NOT_S reading the negation's answer alone: 1 once it shows a 1,
/// 0 after `patience` zeros.
inline WitnessPair naive_lpo_strong_candidate(std::size_t patience = 8) {
  WitnessPair w;
  w.name = "naive-strong-lpo";
  w.inner = {[](const Prefix& p) { return p; }, "identity"};
  w.outer = {[patience](const Prefix& p) {
               Prefix q = detail::solution_track(p);
               if (std::find(q.begin(), q.end(), Symbol{1}) != q.end()) return detail::nat_name(1, q.size());
               if (q.size() >= patience) return detail::nat_name(0, q.size());
               return Prefix{};
             },
             "commit 0 after a run of zeros"};
  w.strong = true;
  return w;
}

namespace detail {

// Inner of the naive NEQ(N/N) -> NEQ(N×(ω+1)) candidate: skips until the
// lower code is complete, then writes (y, ω) one symbol per input symbol and
// sets the next ω+1 bit once an escape value arrives.
inline Prefix naive_layered_inner(const Prefix& c) {
  Prefix out;
  bool y_known = false, escaping = false, got_top = false, one_written = false;
  Nat ones = 0, y = 0;
  std::size_t written = 0;
  for (Symbol s : c) {
    if (s != kSkip) {
      Symbol r = s - 1;
      if (escaping) {
        if (!got_top) {
          got_top = true;
          if (!y_known) {
            y_known = true;
            y = r;
            one_written = true;  // direct escape stays at (r, ω)
          }
        }
      } else if (r >= 2) {
        escaping = true;
      } else if (!y_known) {
        if (r == 1) ++ones;
        else {
          y_known = true;
          y = ones;
        }
      }
    }
    if (!y_known) {
      out.push_back(kSkip);
      continue;
    }
    Symbol sym = 0;
    if (written % 2 == 0) {
      sym = written == 0 ? y : 0;
    } else if (got_top && !one_written) {
      sym = 1;
      one_written = true;
    }
    out.push_back(sym + 1);
    ++written;
  }
  return out;
}

// Outer: commits the lower code of n while the answer (n, ·) is silent,
// escapes to m when the answer's ω+1 track shows m, or to z+1 when the
// original input escapes to z first.
inline Prefix naive_layered_outer(const Prefix& pp) {
  Prefix out;
  bool n_known = false, escaped = false, x_escaping = false;
  Nat n = 0;
  std::size_t lower_written = 0, q_index = 0;
  for (std::size_t t = 0; t < pp.size(); ++t) {
    Symbol s = pp[t];
    if (t % 2 == 0) {
      std::size_t u = q_index++;
      if (u % 2 == 0) {
        if (u == 0) {
          n = s;
          n_known = true;
        }
        continue;
      }
      if (!n_known) continue;
      if (escaped) {
        out.push_back(0);
      } else if (s == 1) {
        out.push_back(2);
        out.push_back((u - 1) / 2);
        escaped = true;
      } else {
        out.push_back(lower_written < n ? 1 : 0);
        ++lower_written;
      }
    } else {
      if (s == kSkip) continue;
      Symbol r = s - 1;
      if (x_escaping) {
        x_escaping = false;
        if (!escaped) {
          out.push_back(2);
          out.push_back(r + 1);
          escaped = true;
        }
      } else if (r >= 2) {
        x_escaping = true;
      }
    }
  }
  return out;
}

}  // namespace detail

/// NEQ(N/N) -> NEQ(N×(ω+1)) candidate that commits ./n on silence.
inline WitnessPair naive_layered_candidate() {
  WitnessPair w;
  w.name = "naive-layered";
  w.inner = {detail::naive_layered_inner, "./y -> (y, w), escape sets a bit"};
  w.outer = {detail::naive_layered_outer, "(n, w) -> ./n, (n, m) -> m/."};
  w.strong = false;
  return w;
}

}  // namespace wadge
