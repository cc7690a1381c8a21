#pragma once

// Wadge, backtrack and constant-commitment games: play, adjudication,
// canonical strategies, strategy translation and reduction extraction.

#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "problems.hpp"
#include "reductions.hpp"

namespace wadge {

struct Move {
  enum class Kind { Nat, Skip, Erase };
  Kind kind = Kind::Skip;
  Nat value = 0;

  static Move nat(Nat v) { return {Kind::Nat, v}; }
  static Move skip() { return {Kind::Skip, 0}; }
  static Move erase() { return {Kind::Erase, 0}; }

  bool operator==(const Move&) const = default;
};

inline std::string to_string(const Move& m) {
  switch (m.kind) {
    case Move::Kind::Nat: return std::to_string(m.value);
    case Move::Kind::Skip: return "skip";
    case Move::Kind::Erase: return "erase";
  }
  return "?";
}

struct History {
  Prefix moves_I;
  std::vector<Move> moves_II;
};

enum class Role { I, II };

struct Strategy {
  Role role = Role::I;
  std::string label;
  std::function<Move(const History&)> next;
  // Player I only: the point the input being built names
  std::function<PointPtr(const History&)> truth;
};

enum class GameKind { Wadge, Backtrack, ConstantCommit };

inline const char* to_string(GameKind k) {
  switch (k) {
    case GameKind::Wadge: return "wadge";
    case GameKind::Backtrack: return "backtrack";
    case GameKind::ConstantCommit: return "commit";
  }
  return "?";
}

inline GameKind parse_game_kind(const std::string& s) {
  if (s == "wadge") return GameKind::Wadge;
  if (s == "backtrack") return GameKind::Backtrack;
  if (s == "commit" || s == "constant-commit") return GameKind::ConstantCommit;
  throw Error(ErrorKind::UnknownName, "unknown game kind " + s);
}

struct GameConfig {
  GameKind kind = GameKind::Wadge;
  Problem problem;

  GameConfig(GameKind k, Problem p) : kind(k), problem(std::move(p)) {
    if (kind == GameKind::ConstantCommit && !problem.first_order())
      throw Error(ErrorKind::Unsupported, "constant-commitment games need a first-order problem");
  }
};

/// II's output after dropping skips and applying erasures.
inline Prefix effective_output(const std::vector<Move>& moves) {
  Prefix out;
  for (const auto& m : moves) {
    if (m.kind == Move::Kind::Nat) out.push_back(m.value);
    if (m.kind == Move::Kind::Erase) out.clear();
  }
  return out;
}

inline std::size_t erase_count(const std::vector<Move>& moves) {
  std::size_t n = 0;
  for (const auto& m : moves) n += m.kind == Move::Kind::Erase;
  return n;
}

struct PlayTrace {
  GameKind kind = GameKind::Wadge;
  std::string problem;
  Prefix moves_I;
  std::vector<Move> moves_II;
  std::size_t depth = 0;
  PointPtr truth;
  std::size_t erases = 0;

  Prefix output() const { return effective_output(moves_II); }
};

inline std::string format_trace(const PlayTrace& t) {
  std::ostringstream os;
  os << to_string(t.kind) << ' ' << t.problem << " I=" << format_prefix(t.moves_I) << " II=[";
  for (std::size_t i = 0; i < t.moves_II.size(); ++i) os << (i ? "," : "") << to_string(t.moves_II[i]);
  os << ']';
  return os.str();
}

inline PlayTrace play(const GameConfig& cfg, const Strategy& sI, const Strategy& sII, std::size_t depth) {
  if (sI.role != Role::I || sII.role != Role::II)
    throw Error(ErrorKind::IllegalMove, "strategy roles do not match the players");
  PlayTrace trace;
  trace.kind = cfg.kind;
  trace.problem = cfg.problem.name;
  History h;
  auto abort = [&](const std::string& why) {
    trace.moves_I = h.moves_I;
    trace.moves_II = h.moves_II;
    throw Error(ErrorKind::IllegalMove, why + " after " + format_trace(trace));
  };
  for (std::size_t round = 0; round < depth; ++round) {
    Move a = sI.next(h);
    if (a.kind != Move::Kind::Nat) abort("player I played " + to_string(a));
    h.moves_I.push_back(a.value);
    Move b = sII.next(h);
    if (b.kind == Move::Kind::Erase && cfg.kind != GameKind::Backtrack) abort("erase outside a backtrack game");
    if (b.kind != Move::Kind::Nat && cfg.kind == GameKind::ConstantCommit)
      abort("player II must play a number in a constant-commitment game");
    h.moves_II.push_back(b);
  }
  trace.moves_I = h.moves_I;
  trace.moves_II = h.moves_II;
  trace.depth = depth;
  trace.erases = erase_count(h.moves_II);
  if (sI.truth) trace.truth = sI.truth(h);
  return trace;
}

struct Adjudication {
  enum class Outcome { IWins, IIWins, Open };
  Outcome outcome = Outcome::Open;
  int rule = 0;
  std::size_t depth = 0;
  bool bound_dependent = false;
  std::string note;

  bool operator==(const Adjudication&) const = default;
};

inline const char* to_string(Adjudication::Outcome o) {
  switch (o) {
    case Adjudication::Outcome::IWins: return "IWins";
    case Adjudication::Outcome::IIWins: return "IIWins";
    case Adjudication::Outcome::Open: return "Open";
  }
  return "?";
}

inline std::string format_adjudication(const Adjudication& a) {
  std::string s = to_string(a.outcome);
  if (a.outcome != Adjudication::Outcome::Open) s += "(rule " + std::to_string(a.rule) + ")";
  s += " at depth " + std::to_string(a.depth);
  if (a.bound_dependent) s += " [bound-dependent]";
  if (!a.note.empty()) s += ": " + a.note;
  return s;
}

inline Adjudication adjudicate(const GameConfig& cfg, const PlayTrace& trace) {
  using O = Adjudication::Outcome;
  const Problem& f = cfg.problem;
  if (auto d = death_depth(f, trace.moves_I))
    return {O::IIWins, 1, *d, false, "player I left the domain of " + f.name};

  Prefix y;
  bool flagged = false;
  std::string note;
  if (cfg.kind == GameKind::ConstantCommit) {
    if (trace.moves_II.empty()) return {O::IWins, 2, trace.depth, true, "no number played"};
    y = {trace.moves_II.back().value};
    std::size_t since = trace.moves_II.size();
    while (since > 0 && trace.moves_II[since - 1] == trace.moves_II.back()) --since;
    flagged = true;
    note = "constant " + std::to_string(y[0]) + " since round " + std::to_string(since) + "; ";
  } else {
    y = trace.output();
    if (decode(f.out_space, y).is_invalid())
      return {O::IWins, 2, trace.depth, false, "II's output " + format_prefix(truncate(y, 16)) + " is not a name"};
    if (y.empty()) return {O::IWins, 2, trace.depth, true, "II produced no output by the bound"};
    if (cfg.kind == GameKind::Backtrack) {
      flagged = true;
      note = std::to_string(trace.erases) + (trace.erases == 1 ? " erase; " : " erases; ");
    }
  }

  Instance x{NameStream::from_prefix(trace.moves_I, 0, trace.truth), {}, "play"};
  Verdict v = f.verdict(x, y, trace.moves_I.size());
  flagged = flagged || v.bound_dependent;
  note += v.note;
  if (v.is_verified()) return {O::IIWins, 3, trace.depth, flagged, note};
  if (v.is_refuted()) return {O::IWins, 3, trace.depth, flagged, note};
  return {O::Open, 0, trace.depth, flagged, note};
}

// ---------------------------------------------------------------- player I

/// Plays the given name forever.
inline Strategy strategy_I_from_stream(NameStream x, std::string label) {
  Strategy s;
  s.role = Role::I;
  s.label = std::move(label);
  s.next = [x](const History& h) { return Move::nat(x.symbol(h.moves_I.size())); };
  s.truth = [t = x.truth](const History&) { return t; };
  return s;
}

/// Chain t_0 ⊏ t_1 ⊏ ... of prefixes of `limit`, and for every stage j and
/// commitment i an extension of t_j on which i is not a solution.
struct LeastCommitmentCertificate {
  NameStream limit;
  std::function<Prefix(std::size_t j)> chain;
  std::function<NameStream(std::size_t j, Nat i)> extension;
};

inline void validate_commitment_certificate(const Problem& f, const LeastCommitmentCertificate& cert,
                                            std::size_t j_max, Nat i_max, std::size_t depth = 64) {
  for (std::size_t j = 0; j <= j_max; ++j) {
    Prefix t = cert.chain(j);
    if (!is_prefix(t, cert.limit.at(t.size())))
      throw Error(ErrorKind::CertificateInvalid, "t_" + std::to_string(j) + " is not a prefix of the limit");
    for (Nat i = 0; i <= i_max; ++i) {
      NameStream x = cert.extension(j, i);
      std::string at = " (j=" + std::to_string(j) + ", i=" + std::to_string(i) + ")";
      if (!is_prefix(t, x.at(t.size()))) throw Error(ErrorKind::CertificateInvalid, "x_j^i does not extend t_j" + at);
      if (death_depth(f, x.at(depth))) throw Error(ErrorKind::CertificateInvalid, "x_j^i leaves the domain" + at);
      Instance inst{x, {}, "x"};
      if (!f.verdict(inst, {i}, depth).is_refuted())
        throw Error(ErrorKind::CertificateInvalid, "i is not refuted on x_j^i" + at);
    }
  }
}

/// t_j = 0^j, x_j^i = the name of pair(i, j) ∈ ω+1.
inline LeastCommitmentCertificate canonical_seqacc_commitment_certificate() {
  LeastCommitmentCertificate c;
  c.limit = encode(sp::omega_plus_one(), pt::omega());
  c.chain = [](std::size_t j) { return Prefix(j, 0); };
  c.extension = [](std::size_t j, Nat i) { return encode(sp::omega_plus_one(), pt::ordinal(pair(i, j))); };
  return c;
}

namespace detail {

// (j, i) once II has played its first number i after I's j-th move.
inline std::optional<std::pair<std::size_t, Nat>> first_commitment(const History& h) {
  for (std::size_t r = 0; r < h.moves_II.size(); ++r)
    if (h.moves_II[r].kind == Move::Kind::Nat) return std::make_pair(r + 1, h.moves_II[r].value);
  return std::nullopt;
}

}  // namespace detail

inline Strategy strategy_I_from_certificate(const Problem& f, const LeastCommitmentCertificate& cert) {
  validate_commitment_certificate(f, cert, 8, 8);
  Strategy s;
  s.role = Role::I;
  s.label = "cert-I";
  s.next = [cert](const History& h) {
    std::size_t k = h.moves_I.size();
    if (auto c = detail::first_commitment(h)) return Move::nat(cert.extension(c->first, c->second).symbol(k));
    return Move::nat(cert.limit.symbol(k));
  };
  s.truth = [cert](const History& h) {
    if (auto c = detail::first_commitment(h)) return cert.extension(c->first, c->second).truth;
    return cert.limit.truth;
  };
  return s;
}

// ---------------------------------------------------------------- player II

/// Replays a realizer on I's moves and plays the next unplayed output symbol.
inline Strategy strategy_II_from_realizer(Transducer t, std::string label = "realizer-II") {
  Strategy s;
  s.role = Role::II;
  s.label = std::move(label);
  s.next = [t = std::move(t)](const History& h) {
    Prefix out = t.step(h.moves_I);
    std::size_t played = effective_output(h.moves_II).size();
    return played < out.size() ? Move::nat(out[played]) : Move::skip();
  };
  return s;
}

inline Strategy strategy_II_skip() {
  Strategy s;
  s.role = Role::II;
  s.label = "skip-II";
  s.next = [](const History&) { return Move::skip(); };
  return s;
}

/// Skips until round `at`, then plays v (and keeps playing v in
/// constant-commitment games).
inline Strategy strategy_II_constant(Nat v, std::size_t at) {
  Strategy s;
  s.role = Role::II;
  s.label = "const-II:" + std::to_string(v) + "@" + std::to_string(at);
  s.next = [v, at](const History& h) {
    std::size_t round = h.moves_II.size();
    if (round < at) return Move::skip();
    return round == at ? Move::nat(v) : Move::skip();
  };
  return s;
}

/// Realizers used as game fixtures.
namespace realizers {

inline Transducer head() {
  return {[](const Prefix& p) { return p.empty() ? Prefix{} : detail::nat_name(p[0], p.size()); }, "first symbol"};
}

// correct on the finite points of ω+1 only
inline Transducer seqacc_finite() {
  return {[](const Prefix& p) {
            if (auto s = detail::first_index(p, [](Symbol a) { return a == 1; }))
              return detail::nat_name(unpair(*s).first + 1, p.size());
            return Prefix{};
          },
          "wait for the 1 at s, answer unpair(s).first + 1"};
}

// correct on the finite points of ω+1 only
inline Transducer omega_example_finite() {
  return {[](const Prefix& p) {
            auto n = detail::first_index(p, [](Symbol a) { return a == 1; });
            if (!n) return Prefix{};
            return omega_example_names(*pt::ordinal(*n)).front().at(p.size() + 2);
          },
          "wait for n, write (-1)^n 2^-n"};
}

// correct on inputs containing a 1 only
inline Transducer lpo_positive() {
  return {[](const Prefix& p) {
            if (std::find(p.begin(), p.end(), Symbol{1}) == p.end()) return Prefix{};
            return detail::nat_name(0, p.size());
          },
          "wait for a 1, answer 0"};
}

}  // namespace realizers

// ---------------------------------------------------------------- mind changes

/// Cumulative move list (numbers and erasures) after reading a prefix;
/// monotone in the prefix.
struct MindChangeMachine {
  std::string label;
  std::function<std::vector<Move>(const Prefix&)> step;
};

struct MindChangeRun {
  Prefix output;
  std::size_t erases = 0;
};

inline MindChangeRun run_mind_change(const MindChangeMachine& m, const NameStream& x, std::size_t depth) {
  auto moves = m.step(x.at(depth));
  return {effective_output(moves), erase_count(moves)};
}

/// Solves C_2 with at most one mind change: answer 0, and switch to 1 once 0
/// is excluded.
inline MindChangeMachine c2_one_mind_change() {
  MindChangeMachine m;
  m.label = "c2-one-mind-change";
  m.step = [](const Prefix& p) {
    std::vector<Move> moves;
    bool switched = false;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (!switched && p[i] == 1) {
        if (i > 0) moves.push_back(Move::erase());
        moves.push_back(Move::nat(1));
        switched = true;
      } else {
        moves.push_back(Move::nat(0));
      }
    }
    return moves;
  };
  return m;
}

inline Strategy strategy_II_from_mind_change(MindChangeMachine m) {
  Strategy s;
  s.role = Role::II;
  s.label = "mindchange-II";
  s.next = [m = std::move(m)](const History& h) {
    auto moves = m.step(h.moves_I);
    std::size_t r = h.moves_II.size();
    return r < moves.size() ? moves[r] : Move::skip();
  };
  return s;
}

/// Constant-commitment strategy: plays the head of the wrapped backtrack
/// strategy's standing output (0 while there is none), frozen after `bound`
/// erasures.
inline Strategy translate_to_commit(Strategy sII, std::size_t bound) {
  Strategy s;
  s.role = Role::II;
  s.label = "commit(" + sII.label + ")";
  s.next = [w = std::move(sII), bound](const History& h) {
    History sim;
    Nat standing = 0;
    for (std::size_t r = 0; r < h.moves_I.size(); ++r) {
      sim.moves_I.push_back(h.moves_I[r]);
      sim.moves_II.push_back(w.next(sim));
      if (erase_count(sim.moves_II) > bound) break;
      Prefix out = effective_output(sim.moves_II);
      if (!out.empty()) standing = out[0];
    }
    return Move::nat(standing);
  };
  return s;
}

// ---------------------------------------------------------------- extraction

/// NEQ(target) <=*W f from a Player-I strategy: the inner reads a completion
/// name as II's moves (0 = skip, k+1 = k) and writes I's replies.
inline WitnessPair extract_reduction(const Strategy& sI, const Problem& f, const Space& target) {
  if (sI.role != Role::I) throw Error(ErrorKind::IllegalMove, "extraction needs a Player-I strategy");
  auto replay = [sI](const Prefix& q) {
    History h;
    for (std::size_t r = 0; r <= q.size(); ++r) {
      h.moves_I.push_back(sI.next(h).value);
      if (r < q.size()) h.moves_II.push_back(q[r] == kSkip ? Move::skip() : Move::nat(q[r] - 1));
    }
    return h;
  };
  WitnessPair w;
  w.name = "extract:" + sI.label;
  w.inner = {[replay](const Prefix& q) { return replay(q).moves_I; }, "play " + sI.label + " against q"};
  w.outer = {detail::solution_track, "identity on the solution track"};
  w.strong = true;
  w.solutions = [replay, sI, f, target](const Instance& x) {
    History h = replay(x.input.at(kReadingDepth));
    PointPtr truth = sI.truth ? sI.truth(h) : nullptr;
    return solutions_by_verdict(f, truth, nat_answers(8));
  };
  return w;
}

}  // namespace wadge
