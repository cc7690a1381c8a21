#pragma once

// JSON forms of points, name fixtures, check reports, counterexamples and
// game traces.

#include <json.hpp>

#include <string>

#include "games.hpp"
#include "refute.hpp"
#include "reductions.hpp"

namespace wadge::io {

using nlohmann::json;

/// Symbols of a stream point kept in JSON; reading pads with zeros.
inline constexpr std::size_t kStreamJsonDepth = 64;

inline json point_to_json(const PointPtr& p) {
  if (!p) return nullptr;
  using K = PointDesc::Kind;
  switch (p->kind) {
    case K::Nat: return {{"kind", "nat"}, {"value", p->value}};
    case K::Fin: return {{"kind", "fin"}, {"value", p->value}};
    case K::Ordinal:
      if (p->omega) return {{"kind", "ordinal"}, {"value", "w"}};
      return {{"kind", "ordinal"}, {"value", p->value}};
    case K::SierpTop: return {{"kind", "top"}};
    case K::SierpBot: return {{"kind", "bot"}};
    case K::Stream: return {{"kind", "stream"}, {"prefix", p->stream->at(kStreamJsonDepth)}};
    case K::Decimal:
      return {{"kind", "decimal"},
              {"negative", p->negative},
              {"integer", p->value},
              {"digits", p->stream->at(kStreamJsonDepth)}};
    case K::Pair: return {{"kind", "pair"}, {"first", point_to_json(p->first)}, {"second", point_to_json(p->second)}};
    case K::Top: return {{"kind", "upper"}, {"point", point_to_json(p->first)}};
    case K::Bot: return {{"kind", "lower"}, {"point", point_to_json(p->first)}};
    case K::Embedded: return {{"kind", "embedded"}, {"point", point_to_json(p->first)}};
    case K::Bottom: return {{"kind", "bottom"}};
    case K::Excluded: return {{"kind", "excluded"}, {"set", p->set}};
    case K::NoLimit: return {{"kind", "no-limit"}};
  }
  return nullptr;
}

inline PointPtr point_from_json(const json& j) {
  if (j.is_null()) return nullptr;
  try {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "nat") return pt::nat(j.at("value").get<Nat>());
    if (kind == "fin") return pt::fin(j.at("value").get<Nat>());
    if (kind == "ordinal") {
      if (j.at("value").is_string()) return pt::omega();
      return pt::ordinal(j.at("value").get<Nat>());
    }
    if (kind == "top") return pt::sierp_top();
    if (kind == "bot") return pt::sierp_bot();
    if (kind == "stream") return pt::stream(NameStream::from_prefix(j.at("prefix").get<Prefix>()));
    if (kind == "decimal")
      return pt::decimal(j.at("negative").get<bool>(), j.at("integer").get<Nat>(),
                         NameStream::from_prefix(j.at("digits").get<Prefix>()));
    if (kind == "pair") return pt::pair(point_from_json(j.at("first")), point_from_json(j.at("second")));
    if (kind == "upper") return pt::upper(point_from_json(j.at("point")));
    if (kind == "lower") return pt::lower(point_from_json(j.at("point")));
    if (kind == "embedded") return pt::embedded(point_from_json(j.at("point")));
    if (kind == "bottom") return pt::bottom();
    if (kind == "excluded") return pt::excluded(j.at("set").get<std::vector<Nat>>());
    if (kind == "no-limit") return pt::no_limit();
    throw Error(ErrorKind::Parse, "unknown point kind " + kind);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("malformed point: ") + e.what());
  }
}

/// {"head": [...], "cycle": [...], "truth": point}
inline NameStream stream_from_json(const json& j) {
  try {
    Prefix head = j.value("head", Prefix{});
    Prefix cycle = j.value("cycle", Prefix{});
    return NameStream::periodic(std::move(head), std::move(cycle),
                                j.contains("truth") ? point_from_json(j.at("truth")) : nullptr);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("malformed name fixture: ") + e.what());
  }
}

inline json verdict_to_json(const Verdict& v) {
  return {{"verdict", to_string(v.kind)}, {"note", v.note}, {"bound_dependent", v.bound_dependent}};
}

inline json check_report_to_json(const CheckReport& r) {
  json records = json::array();
  for (const auto& rec : r.records) {
    json outer = json::array();
    for (std::size_t i = 0; i < rec.outer.size(); ++i) {
      json v = verdict_to_json(rec.outer[i]);
      v["output"] = truncate(rec.outputs[i], 24);
      outer.push_back(std::move(v));
    }
    records.push_back({{"instance", rec.label},
                       {"inner_domain", to_string(rec.inner_domain)},
                       {"death_depth", rec.death_depth ? json(*rec.death_depth) : json(nullptr)},
                       {"outer", std::move(outer)},
                       {"depth", rec.depth}});
  }
  return {{"f", r.f},
          {"g", r.g},
          {"witness", r.witness},
          {"strict", r.strict},
          {"result", r.pass ? "Pass" : "Fail"},
          {"first_counterexample", r.first_counterexample},
          {"undetermined", r.undetermined},
          {"records", std::move(records)}};
}

inline json counterexample_to_json(const Counterexample& c) {
  return {{"family", c.family},   {"schedule", c.schedule},   {"instance", c.label},
          {"input", c.input},     {"solution", c.solution},   {"inner_output", c.inner_out},
          {"outer_output", c.outer_out}, {"depth", c.depth}, {"contract", c.contract},
          {"note", c.note}};
}

inline json refute_result_to_json(const RefuteResult& r) {
  json j{{"result", to_string(r.status)}, {"schedules", r.schedules}};
  if (r.counterexample) j["counterexample"] = counterexample_to_json(*r.counterexample);
  return j;
}

inline json adjudication_to_json(const Adjudication& a) {
  return {{"outcome", to_string(a.outcome)},
          {"rule", a.rule},
          {"depth", a.depth},
          {"bound_dependent", a.bound_dependent},
          {"note", a.note}};
}

inline Adjudication adjudication_from_json(const json& j) {
  Adjudication a;
  std::string o = j.at("outcome").get<std::string>();
  if (o == "IWins") a.outcome = Adjudication::Outcome::IWins;
  else if (o == "IIWins") a.outcome = Adjudication::Outcome::IIWins;
  else if (o == "Open") a.outcome = Adjudication::Outcome::Open;
  else throw Error(ErrorKind::Parse, "unknown outcome " + o);
  a.rule = j.at("rule").get<int>();
  a.depth = j.at("depth").get<std::size_t>();
  a.bound_dependent = j.at("bound_dependent").get<bool>();
  a.note = j.value("note", std::string{});
  return a;
}

inline json move_to_json(const Move& m) {
  switch (m.kind) {
    case Move::Kind::Nat: return m.value;
    case Move::Kind::Skip: return "skip";
    case Move::Kind::Erase: return "erase";
  }
  return nullptr;
}

inline Move move_from_json(const json& j) {
  if (j.is_number_unsigned()) return Move::nat(j.get<Nat>());
  if (j == "skip") return Move::skip();
  if (j == "erase") return Move::erase();
  throw Error(ErrorKind::Parse, "unknown move " + j.dump());
}

/// {"kind", "problem", "depth", "truth", "moves": [{"player", "move"}...], "adjudication"}
inline json trace_to_json(const PlayTrace& t, const Adjudication& a) {
  json moves = json::array();
  for (std::size_t r = 0; r < t.moves_I.size(); ++r) {
    moves.push_back({{"player", "I"}, {"move", t.moves_I[r]}});
    if (r < t.moves_II.size()) moves.push_back({{"player", "II"}, {"move", move_to_json(t.moves_II[r])}});
  }
  return {{"kind", to_string(t.kind)},
          {"problem", t.problem},
          {"depth", t.depth},
          {"truth", point_to_json(t.truth)},
          {"moves", std::move(moves)},
          {"adjudication", adjudication_to_json(a)}};
}

struct StoredTrace {
  PlayTrace trace;
  std::optional<Adjudication> adjudication;
};

inline StoredTrace trace_from_json(const json& j) {
  try {
    StoredTrace s;
    s.trace.kind = parse_game_kind(j.at("kind").get<std::string>());
    s.trace.problem = j.at("problem").get<std::string>();
    s.trace.depth = j.at("depth").get<std::size_t>();
    s.trace.truth = point_from_json(j.value("truth", json(nullptr)));
    for (const auto& m : j.at("moves")) {
      std::string player = m.at("player").get<std::string>();
      if (player == "I") {
        Move mv = move_from_json(m.at("move"));
        if (mv.kind != Move::Kind::Nat) throw Error(ErrorKind::IllegalMove, "player I played " + to_string(mv));
        s.trace.moves_I.push_back(mv.value);
      } else if (player == "II") {
        s.trace.moves_II.push_back(move_from_json(m.at("move")));
      } else {
        throw Error(ErrorKind::Parse, "unknown player " + player);
      }
    }
    s.trace.erases = erase_count(s.trace.moves_II);
    if (j.contains("adjudication")) s.adjudication = adjudication_from_json(j.at("adjudication"));
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("malformed trace: ") + e.what());
  }
}

}  // namespace wadge::io
