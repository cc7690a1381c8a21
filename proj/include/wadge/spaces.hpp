#pragma once

// Represented spaces: a small inductive grammar of spaces and points, with
// coding/decoding at finite prefix depth, formal completions, layered spaces
// and Cantor-Bendixson ranks for the scattered fragment.

#include <algorithm>
#include <cctype>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "error.hpp"
#include "names.hpp"

namespace wadge {

// ---------------------------------------------------------------- points

struct PointDesc {
  enum class Kind {
    Nat,
    Fin,
    Ordinal,
    SierpTop,
    SierpBot,
    Stream,
    Decimal,
    Pair,
    Top,       // x/. in a layered space
    Bot,       // ./y in a layered space
    Embedded,  // a point of X inside a formal completion
    Bottom,    // the added point of a formal completion
    Excluded,  // tag: the finite set enumerated by a negative-information name
    NoLimit,   // tag: a sequence without a limit
  };

  Kind kind = Kind::Bottom;
  Nat value = 0;          // Nat, Fin, finite Ordinal, Decimal integer part
  bool omega = false;     // Ordinal ω
  bool negative = false;  // Decimal sign
  std::vector<Nat> set;   // Excluded
  std::optional<NameStream> stream;  // Stream, Decimal fraction digits
  PointPtr first, second;            // Pair; Top/Bot/Embedded use first
};

namespace pt {

inline PointPtr make(PointDesc p) { return std::make_shared<const PointDesc>(std::move(p)); }

inline PointPtr nat(Nat n) {
  PointDesc p;
  p.kind = PointDesc::Kind::Nat;
  p.value = n;
  return make(std::move(p));
}
inline PointPtr fin(Nat k) {
  PointDesc p;
  p.kind = PointDesc::Kind::Fin;
  p.value = k;
  return make(std::move(p));
}
inline PointPtr ordinal(Nat n) {
  PointDesc p;
  p.kind = PointDesc::Kind::Ordinal;
  p.value = n;
  return make(std::move(p));
}
inline PointPtr omega() {
  PointDesc p;
  p.kind = PointDesc::Kind::Ordinal;
  p.omega = true;
  return make(std::move(p));
}
inline PointPtr sierp_top() {
  PointDesc p;
  p.kind = PointDesc::Kind::SierpTop;
  return make(std::move(p));
}
inline PointPtr sierp_bot() {
  PointDesc p;
  p.kind = PointDesc::Kind::SierpBot;
  return make(std::move(p));
}
inline PointPtr stream(NameStream s) {
  PointDesc p;
  p.kind = PointDesc::Kind::Stream;
  s.truth = nullptr;
  p.stream = std::move(s);
  return make(std::move(p));
}
inline PointPtr decimal(bool negative, Nat integer, NameStream fraction) {
  PointDesc p;
  p.kind = PointDesc::Kind::Decimal;
  p.negative = negative;
  p.value = integer;
  fraction.truth = nullptr;
  p.stream = std::move(fraction);
  return make(std::move(p));
}
inline PointPtr pair(PointPtr a, PointPtr b) {
  PointDesc p;
  p.kind = PointDesc::Kind::Pair;
  p.first = std::move(a);
  p.second = std::move(b);
  return make(std::move(p));
}
/// x/.
inline PointPtr upper(PointPtr x) {
  PointDesc p;
  p.kind = PointDesc::Kind::Top;
  p.first = std::move(x);
  return make(std::move(p));
}
/// ./y
inline PointPtr lower(PointPtr y) {
  PointDesc p;
  p.kind = PointDesc::Kind::Bot;
  p.first = std::move(y);
  return make(std::move(p));
}
inline PointPtr embedded(PointPtr x) {
  PointDesc p;
  p.kind = PointDesc::Kind::Embedded;
  p.first = std::move(x);
  return make(std::move(p));
}
inline PointPtr bottom() { return make(PointDesc{}); }
inline PointPtr excluded(std::vector<Nat> set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  PointDesc p;
  p.kind = PointDesc::Kind::Excluded;
  p.set = std::move(set);
  return make(std::move(p));
}
inline PointPtr no_limit() {
  PointDesc p;
  p.kind = PointDesc::Kind::NoLimit;
  return make(std::move(p));
}

}  // namespace pt

/// Streams are compared on this many symbols.
inline constexpr std::size_t kStreamCompareDepth = 256;

inline bool points_equal(const PointDesc& a, const PointDesc& b) {
  using K = PointDesc::Kind;
  auto numeric = [](K k) { return k == K::Nat || k == K::Fin; };
  if (numeric(a.kind) && numeric(b.kind)) return a.value == b.value;
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case K::Nat:
    case K::Fin: return a.value == b.value;
    case K::Ordinal: return a.omega == b.omega && (a.omega || a.value == b.value);
    case K::SierpTop:
    case K::SierpBot:
    case K::Bottom:
    case K::NoLimit: return true;
    case K::Stream: return a.stream->at(kStreamCompareDepth) == b.stream->at(kStreamCompareDepth);
    case K::Decimal:
      return a.negative == b.negative && a.value == b.value &&
             a.stream->at(kStreamCompareDepth) == b.stream->at(kStreamCompareDepth);
    case K::Pair: return points_equal(*a.first, *b.first) && points_equal(*a.second, *b.second);
    case K::Top:
    case K::Bot:
    case K::Embedded: return points_equal(*a.first, *b.first);
    case K::Excluded: return a.set == b.set;
  }
  return false;
}

inline bool points_equal(const PointPtr& a, const PointPtr& b) {
  if (!a || !b) return !a && !b;
  return points_equal(*a, *b);
}

inline std::string to_string(const PointDesc& p) {
  using K = PointDesc::Kind;
  std::ostringstream os;
  switch (p.kind) {
    case K::Nat: os << p.value; break;
    case K::Fin: os << p.value; break;
    case K::Ordinal:
      if (p.omega)
        os << "w";
      else
        os << p.value;
      break;
    case K::SierpTop: os << "T"; break;
    case K::SierpBot: os << "F"; break;
    case K::Stream: {
      auto s = p.stream->at(8);
      os << "stream" << format_prefix(s) << "...";
      break;
    }
    case K::Decimal: {
      os << (p.negative ? '-' : '+') << p.value << '.';
      for (auto d : p.stream->at(12)) os << d;
      os << "...";
      break;
    }
    case K::Pair: os << '(' << to_string(*p.first) << ',' << to_string(*p.second) << ')'; break;
    case K::Top: os << to_string(*p.first) << "/."; break;
    case K::Bot: os << "./" << to_string(*p.first); break;
    case K::Embedded: os << "emb(" << to_string(*p.first) << ')'; break;
    case K::Bottom: os << "bottom"; break;
    case K::Excluded: {
      os << '{';
      for (std::size_t i = 0; i < p.set.size(); ++i) os << (i ? "," : "") << p.set[i];
      os << '}';
      break;
    }
    case K::NoLimit: os << "nolimit"; break;
  }
  return os.str();
}

inline std::string to_string(const PointPtr& p) { return p ? to_string(*p) : std::string("none"); }

// ---------------------------------------------------------------- spaces

struct SpaceDesc;
using Space = std::shared_ptr<const SpaceDesc>;

struct SpaceDesc {
  enum class Kind {
    Naturals,
    Finite,
    OmegaPlusOne,
    Sierpinski,
    Baire,
    Cantor,
    DecimalReal,
    Product,
    Layered,
    FormalCompletion,
  };
  Kind kind = Kind::Naturals;
  Nat n = 0;     // Finite
  Space a, b;    // Product(a, b); Layered(top = a, bottom = b); FormalCompletion(a)
};

namespace sp {

inline Space make(SpaceDesc d) { return std::make_shared<const SpaceDesc>(std::move(d)); }
inline Space naturals() { return make({SpaceDesc::Kind::Naturals, 0, nullptr, nullptr}); }
inline Space finite(Nat n) {
  if (n < 1) throw Error(ErrorKind::EmptySpace, "Finite(n) requires n >= 1");
  return make({SpaceDesc::Kind::Finite, n, nullptr, nullptr});
}
inline Space omega_plus_one() { return make({SpaceDesc::Kind::OmegaPlusOne, 0, nullptr, nullptr}); }
inline Space sierpinski() { return make({SpaceDesc::Kind::Sierpinski, 0, nullptr, nullptr}); }
inline Space baire() { return make({SpaceDesc::Kind::Baire, 0, nullptr, nullptr}); }
inline Space cantor() { return make({SpaceDesc::Kind::Cantor, 0, nullptr, nullptr}); }
inline Space decimal_real() { return make({SpaceDesc::Kind::DecimalReal, 0, nullptr, nullptr}); }
inline Space product(Space x, Space y) { return make({SpaceDesc::Kind::Product, 0, std::move(x), std::move(y)}); }
inline Space layered(Space top, Space bottom) {
  return make({SpaceDesc::Kind::Layered, 0, std::move(top), std::move(bottom)});
}
inline Space completion(Space x) { return make({SpaceDesc::Kind::FormalCompletion, 0, std::move(x), nullptr}); }

}  // namespace sp

/// The skip symbol of a formal completion. A base symbol s is written s+1.
inline constexpr Symbol kSkip = 0;

inline Space completion_of(const Space& x) { return sp::completion(x); }

inline std::string to_string(const SpaceDesc& s) {
  using K = SpaceDesc::Kind;
  auto wrap = [](const Space& c) {
    std::string t = to_string(*c);
    bool compound = c->kind == K::Product || c->kind == K::Layered || c->kind == K::OmegaPlusOne;
    return compound ? "(" + t + ")" : t;
  };
  switch (s.kind) {
    case K::Naturals: return "N";
    case K::Finite: return "Fin(" + std::to_string(s.n) + ")";
    case K::OmegaPlusOne: return "w+1";
    case K::Sierpinski: return "S";
    case K::Baire: return "Baire";
    case K::Cantor: return "Cantor";
    case K::DecimalReal: return "R10";
    case K::Product: return wrap(s.a) + "*" + wrap(s.b);
    case K::Layered: return wrap(s.a) + "/" + wrap(s.b);
    case K::FormalCompletion: return "Compl(" + to_string(*s.a) + ")";
  }
  return "?";
}

inline std::string to_string(const Space& s) { return to_string(*s); }

namespace detail {

class SpaceParser {
 public:
  explicit SpaceParser(std::string text) : text_(std::move(text)) {}

  Space parse() {
    Space s = layered();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return s;
  }

 private:
  // layered := product ('/' layered)?     (right associative)
  Space layered() {
    Space top = product();
    skip_ws();
    if (peek('/')) {
      ++pos_;
      return sp::layered(top, layered());
    }
    return top;
  }
  // product := atom ('*' atom)*
  Space product() {
    Space s = atom();
    skip_ws();
    while (peek('*')) {
      ++pos_;
      s = sp::product(s, atom());
      skip_ws();
    }
    return s;
  }
  Space atom() {
    skip_ws();
    if (peek('(')) {
      ++pos_;
      Space s = layered();
      expect(')');
      return s;
    }
    if (eat("Compl(")) {
      Space s = layered();
      expect(')');
      return sp::completion(s);
    }
    if (eat("Fin(")) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a number after Fin(");
      Nat n = std::stoull(text_.substr(start, pos_ - start));
      expect(')');
      if (n < 1) fail("Fin(n) requires n >= 1");
      return sp::finite(n);
    }
    if (eat("w+1")) return sp::omega_plus_one();
    if (eat("Baire")) return sp::baire();
    if (eat("Cantor")) return sp::cantor();
    if (eat("R10")) return sp::decimal_real();
    if (eat("N")) return sp::naturals();
    if (eat("S")) return sp::sierpinski();
    fail("unknown space");
    return nullptr;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }
  bool eat(const std::string& word) {
    skip_ws();
    if (text_.compare(pos_, word.size(), word) == 0) {
      pos_ += word.size();
      return true;
    }
    return false;
  }
  void expect(char c) {
    skip_ws();
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::Parse, msg + " at offset " + std::to_string(pos_) + " in \"" + text_ + "\"");
  }

  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Grammar: N | Fin(k) | w+1 | S | Baire | Cantor | R10 | X*Y | X/Y | Compl(X),
/// with '*' binding tighter than '/', and '/' right associative.
inline Space parse_space(const std::string& text) { return detail::SpaceParser(text).parse(); }

// ---------------------------------------------------------------- coding

struct DecodeVerdict {
  enum class Kind { Determined, ConsistentMany, Invalid };
  Kind kind = Kind::ConsistentMany;
  PointPtr point;

  static DecodeVerdict determined(PointPtr p) { return {Kind::Determined, std::move(p)}; }
  static DecodeVerdict many() { return {Kind::ConsistentMany, nullptr}; }
  static DecodeVerdict invalid() { return {Kind::Invalid, nullptr}; }

  bool is_determined() const { return kind == Kind::Determined; }
  bool is_invalid() const { return kind == Kind::Invalid; }
};

inline std::string to_string(const DecodeVerdict& v) {
  switch (v.kind) {
    case DecodeVerdict::Kind::Determined: return "Determined(" + to_string(v.point) + ")";
    case DecodeVerdict::Kind::ConsistentMany: return "ConsistentMany";
    case DecodeVerdict::Kind::Invalid: return "Invalid";
  }
  return "?";
}

namespace detail {

[[noreturn]] inline void mismatch(const Space& s, const PointPtr& p) {
  throw Error(ErrorKind::Mismatch, "point " + to_string(p) + " does not belong to " + to_string(s));
}

inline NameStream interleave_streams(NameStream even, NameStream odd) {
  NameStream s;
  s.symbol = [e = std::move(even.symbol), o = std::move(odd.symbol)](std::size_t i) {
    return i % 2 == 0 ? e(i / 2) : o(i / 2);
  };
  return s;
}

inline bool is_binary(const Prefix& p) {
  return std::all_of(p.begin(), p.end(), [](Symbol s) { return s <= 1; });
}

inline Prefix project_skips(const Prefix& p) {
  Prefix out;
  for (Symbol s : p)
    if (s != kSkip) out.push_back(s - 1);
  return out;
}

}  // namespace detail

NameStream encode(const Space& space, const PointPtr& point);
DecodeVerdict decode(const Space& space, const Prefix& prefix);

// Layered bottoms are coded over {0,1}. Discrete spaces use unary 1^n 0;
// binary spaces keep their coding; products interleave.
inline NameStream binary_encode(const Space& space, const PointPtr& point) {
  using K = SpaceDesc::Kind;
  switch (space->kind) {
    case K::Naturals:
    case K::Finite: {
      if (point->kind != PointDesc::Kind::Nat && point->kind != PointDesc::Kind::Fin) detail::mismatch(space, point);
      if (space->kind == K::Finite && point->value >= space->n) detail::mismatch(space, point);
      Nat n = point->value;
      NameStream s;
      s.symbol = [n](std::size_t i) -> Symbol { return i < n ? 1 : 0; };
      return s;
    }
    case K::OmegaPlusOne:
    case K::Sierpinski:
    case K::Cantor: return encode(space, point);
    case K::Product:
      if (point->kind != PointDesc::Kind::Pair) detail::mismatch(space, point);
      return detail::interleave_streams(binary_encode(space->a, point->first), binary_encode(space->b, point->second));
    default: throw Error(ErrorKind::Unsupported, "no {0,1} coding for " + to_string(space) + " as a layered bottom");
  }
}

inline DecodeVerdict binary_decode(const Space& space, const Prefix& p) {
  using K = SpaceDesc::Kind;
  if (!detail::is_binary(p)) return DecodeVerdict::invalid();
  switch (space->kind) {
    case K::Naturals:
    case K::Finite: {
      auto zero = std::find(p.begin(), p.end(), Symbol{0});
      Nat n = static_cast<Nat>(zero - p.begin());
      if (space->kind == K::Finite && n >= space->n) return DecodeVerdict::invalid();
      if (zero == p.end()) return DecodeVerdict::many();
      return DecodeVerdict::determined(space->kind == K::Finite ? pt::fin(n) : pt::nat(n));
    }
    case K::OmegaPlusOne:
    case K::Sierpinski:
    case K::Cantor: return decode(space, p);
    case K::Product: {
      auto [even, odd] = detail::is_binary(p) ? deinterleave(p) : std::pair<Prefix, Prefix>{};
      auto da = binary_decode(space->a, even);
      auto db = binary_decode(space->b, odd);
      if (da.is_invalid() || db.is_invalid()) return DecodeVerdict::invalid();
      if (da.is_determined() && db.is_determined()) return DecodeVerdict::determined(pt::pair(da.point, db.point));
      return DecodeVerdict::many();
    }
    default: throw Error(ErrorKind::Unsupported, "no {0,1} coding for " + to_string(space) + " as a layered bottom");
  }
}

/// Canonical name of a point; the ground-truth tag is set to the point.
inline NameStream encode(const Space& space, const PointPtr& point) {
  using K = SpaceDesc::Kind;
  using PK = PointDesc::Kind;
  if (!point) detail::mismatch(space, point);
  NameStream s;
  switch (space->kind) {
    case K::Naturals:
      if (point->kind != PK::Nat && point->kind != PK::Fin) detail::mismatch(space, point);
      s = NameStream::periodic({point->value}, {});
      break;
    case K::Finite:
      if ((point->kind != PK::Nat && point->kind != PK::Fin) || point->value >= space->n)
        detail::mismatch(space, point);
      s = NameStream::periodic({point->value}, {});
      break;
    case K::OmegaPlusOne:
      if (point->kind != PK::Ordinal) detail::mismatch(space, point);
      if (point->omega) {
        s = NameStream::periodic({}, {});
      } else {
        Nat n = point->value;
        s.symbol = [n](std::size_t i) -> Symbol { return i == n ? 1 : 0; };
      }
      break;
    case K::Sierpinski:
      if (point->kind == PK::SierpTop)
        s = NameStream::periodic({1}, {});
      else if (point->kind == PK::SierpBot)
        s = NameStream::periodic({}, {});
      else
        detail::mismatch(space, point);
      break;
    case K::Baire:
    case K::Cantor:
      if (point->kind != PK::Stream) detail::mismatch(space, point);
      s = *point->stream;
      break;
    case K::DecimalReal: {
      if (point->kind != PK::Decimal || point->value > 9) detail::mismatch(space, point);
      Symbol sign = point->negative ? 1 : 0;
      Symbol integer = point->value;
      s.symbol = [sign, integer, frac = point->stream->symbol](std::size_t i) -> Symbol {
        if (i == 0) return sign;
        if (i == 1) return integer;
        return frac(i - 2);
      };
      break;
    }
    case K::Product:
      if (point->kind != PK::Pair) detail::mismatch(space, point);
      s = detail::interleave_streams(encode(space->a, point->first), encode(space->b, point->second));
      break;
    case K::Layered:
      if (point->kind == PK::Top) {
        auto top = encode(space->a, point->first);
        s.symbol = [t = top.symbol](std::size_t i) -> Symbol { return i == 0 ? 2 : t(i - 1); };
      } else if (point->kind == PK::Bot) {
        s = binary_encode(space->b, point->first);
      } else {
        detail::mismatch(space, point);
      }
      break;
    case K::FormalCompletion:
      if (point->kind == PK::Embedded) {
        auto base = encode(space->a, point->first);
        s.symbol = [b = base.symbol](std::size_t i) -> Symbol { return b(i) + 1; };
      } else if (point->kind == PK::Bottom) {
        s = NameStream::periodic({}, {kSkip});
      } else {
        detail::mismatch(space, point);
      }
      break;
  }
  s.truth = point;
  return s;
}

inline DecodeVerdict decode(const Space& space, const Prefix& p) {
  using K = SpaceDesc::Kind;
  switch (space->kind) {
    case K::Naturals:
      if (p.empty()) return DecodeVerdict::many();
      return DecodeVerdict::determined(pt::nat(p[0]));
    case K::Finite:
      if (p.empty()) return DecodeVerdict::many();
      if (p[0] >= space->n) return DecodeVerdict::invalid();
      return DecodeVerdict::determined(pt::fin(p[0]));
    case K::OmegaPlusOne: {
      if (!detail::is_binary(p)) return DecodeVerdict::invalid();
      auto one = std::find(p.begin(), p.end(), Symbol{1});
      if (one == p.end()) return DecodeVerdict::many();
      return DecodeVerdict::determined(pt::ordinal(static_cast<Nat>(one - p.begin())));
    }
    case K::Sierpinski:
      if (!detail::is_binary(p)) return DecodeVerdict::invalid();
      if (std::find(p.begin(), p.end(), Symbol{1}) != p.end()) return DecodeVerdict::determined(pt::sierp_top());
      return DecodeVerdict::many();
    case K::Baire: return DecodeVerdict::many();
    case K::Cantor: return detail::is_binary(p) ? DecodeVerdict::many() : DecodeVerdict::invalid();
    case K::DecimalReal:
      if (!p.empty() && p[0] > 1) return DecodeVerdict::invalid();
      for (std::size_t i = 1; i < p.size(); ++i)
        if (p[i] > 9) return DecodeVerdict::invalid();
      return DecodeVerdict::many();
    case K::Product: {
      auto [even, odd] = deinterleave(p);
      auto da = decode(space->a, even);
      auto db = decode(space->b, odd);
      if (da.is_invalid() || db.is_invalid()) return DecodeVerdict::invalid();
      if (da.is_determined() && db.is_determined()) return DecodeVerdict::determined(pt::pair(da.point, db.point));
      return DecodeVerdict::many();
    }
    case K::Layered: {
      auto esc = std::find_if(p.begin(), p.end(), [](Symbol s) { return s >= 2; });
      if (esc == p.end()) return DecodeVerdict::many();
      if (*esc != 2) return DecodeVerdict::invalid();
      Prefix rest(esc + 1, p.end());
      auto dt = decode(space->a, rest);
      if (dt.is_determined()) return DecodeVerdict::determined(pt::upper(dt.point));
      return dt;
    }
    case K::FormalCompletion: {
      auto d = decode(space->a, detail::project_skips(p));
      if (d.is_determined()) return DecodeVerdict::determined(pt::embedded(d.point));
      if (d.is_invalid()) return DecodeVerdict::determined(pt::bottom());
      return DecodeVerdict::many();
    }
  }
  return DecodeVerdict::invalid();
}

namespace detail {

inline bool binary_excludes(const Space& space, const Prefix& p, const PointPtr& point);

}  // namespace detail

/// True iff no valid extension of the prefix names the point. Spaces with
/// several names per point (R10) are compared against the point's own digits.
inline bool excludes(const Space& space, const Prefix& p, const PointPtr& point) {
  using K = SpaceDesc::Kind;
  using PK = PointDesc::Kind;
  auto d = decode(space, p);
  if (d.is_invalid()) return true;
  if (d.is_determined()) return !points_equal(d.point, point);
  switch (space->kind) {
    case K::OmegaPlusOne:
      if (point->omega) return false;  // many() means no 1 yet
      return p.size() > point->value;  // zeros through position value
    case K::Sierpinski: return false;
    case K::Baire:
    case K::Cantor: return point->kind != PK::Stream || !is_prefix(p, point->stream->at(p.size()));
    case K::DecimalReal: {
      if (point->kind != PK::Decimal) return true;
      return !is_prefix(p, encode(space, point).at(p.size()));
    }
    case K::Product: {
      if (point->kind != PK::Pair) return true;
      auto [even, odd] = deinterleave(p);
      return excludes(space->a, even, point->first) || excludes(space->b, odd, point->second);
    }
    case K::Layered: {
      auto esc = std::find_if(p.begin(), p.end(), [](Symbol s) { return s >= 2; });
      if (point->kind == PK::Top) {
        if (esc == p.end()) return false;
        return excludes(space->a, Prefix(esc + 1, p.end()), point->first);
      }
      if (point->kind == PK::Bot) {
        if (esc != p.end()) return true;
        return detail::binary_excludes(space->b, p, point->first);
      }
      return true;
    }
    case K::FormalCompletion: {
      if (point->kind == PK::Bottom) return false;
      if (point->kind != PK::Embedded) return true;
      return excludes(space->a, detail::project_skips(p), point->first);
    }
    default: return false;
  }
}

namespace detail {

inline bool binary_excludes(const Space& space, const Prefix& p, const PointPtr& point) {
  using K = SpaceDesc::Kind;
  switch (space->kind) {
    case K::Naturals:
    case K::Finite: {
      Nat n = point->value;
      for (std::size_t i = 0; i < p.size() && i <= n; ++i)
        if (p[i] != (i < n ? 1u : 0u)) return true;
      return false;
    }
    case K::Product: {
      if (point->kind != PointDesc::Kind::Pair) return true;
      auto [even, odd] = deinterleave(p);
      return binary_excludes(space->a, even, point->first) || binary_excludes(space->b, odd, point->second);
    }
    default: return excludes(space, p, point);
  }
}

inline PointPtr binary_read_at_bound(const Space& space, const Prefix& p);

}  // namespace detail

/// The point named by the prefix if the name continues canonically from here
/// (zero padding; skips for an all-skip completion name). A finite-depth
/// reading: callers flag results that depend on it.
inline PointPtr read_at_bound(const Space& space, const Prefix& p) {
  using K = SpaceDesc::Kind;
  auto d = decode(space, p);
  if (d.is_invalid()) return nullptr;
  if (d.is_determined()) return d.point;
  switch (space->kind) {
    case K::Naturals:
    case K::Finite: return nullptr;
    case K::OmegaPlusOne: return pt::omega();
    case K::Sierpinski: return pt::sierp_bot();
    case K::Baire:
    case K::Cantor: return pt::stream(NameStream::from_prefix(p));
    case K::DecimalReal: {
      if (p.size() < 2) return nullptr;
      Prefix frac(p.begin() + 2, p.end());
      return pt::decimal(p[0] == 1, p[1], NameStream::from_prefix(frac));
    }
    case K::Product: {
      auto [even, odd] = deinterleave(p);
      auto a = read_at_bound(space->a, even);
      auto b = read_at_bound(space->b, odd);
      if (!a || !b) return nullptr;
      return pt::pair(a, b);
    }
    case K::Layered: {
      auto esc = std::find_if(p.begin(), p.end(), [](Symbol s) { return s >= 2; });
      if (esc == p.end()) {
        auto y = detail::binary_read_at_bound(space->b, p);
        return y ? pt::lower(y) : nullptr;
      }
      auto x = read_at_bound(space->a, Prefix(esc + 1, p.end()));
      return x ? pt::upper(x) : nullptr;
    }
    case K::FormalCompletion: {
      auto proj = detail::project_skips(p);
      if (proj.empty()) return pt::bottom();
      auto x = read_at_bound(space->a, proj);
      return x ? pt::embedded(x) : pt::bottom();
    }
  }
  return nullptr;
}

namespace detail {

inline PointPtr binary_read_at_bound(const Space& space, const Prefix& p) {
  using K = SpaceDesc::Kind;
  switch (space->kind) {
    case K::Naturals:
    case K::Finite: {
      auto zero = std::find(p.begin(), p.end(), Symbol{0});
      Nat n = static_cast<Nat>(zero - p.begin());
      if (space->kind == K::Finite) {
        if (n >= space->n) return nullptr;
        return pt::fin(n);
      }
      return pt::nat(n);
    }
    case K::Product: {
      auto [even, odd] = deinterleave(p);
      auto a = binary_read_at_bound(space->a, even);
      auto b = binary_read_at_bound(space->b, odd);
      if (!a || !b) return nullptr;
      return pt::pair(a, b);
    }
    default: return read_at_bound(space, p);
  }
}

}  // namespace detail

// ---------------------------------------------------------------- ranks

/// A sum of finite ranks; the terms are kept for display.
struct RankExpr {
  std::vector<Nat> terms;

  Nat value() const { return std::accumulate(terms.begin(), terms.end(), Nat{0}); }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < terms.size(); ++i) s += (i ? " + " : "") + std::to_string(terms[i]);
    return s;
  }
};

inline RankExpr cb_rank(const Space& space) {
  using K = SpaceDesc::Kind;
  switch (space->kind) {
    case K::Naturals:
    case K::Finite: return {{1}};
    case K::OmegaPlusOne: return {{2}};
    case K::Layered: {
      RankExpr top = cb_rank(space->a);
      RankExpr bottom = cb_rank(space->b);
      top.terms.insert(top.terms.end(), bottom.terms.begin(), bottom.terms.end());
      return top;
    }
    case K::Product: {
      Nat ra = cb_rank(space->a).value();
      Nat rb = cb_rank(space->b).value();
      if (ra == 1 || rb == 1) return {{std::max(ra, rb)}};
      throw Error(ErrorKind::Unsupported, "rank of a product of two non-discrete spaces");
    }
    case K::FormalCompletion:
      throw Error(ErrorKind::NotScattered, to_string(space) + " is outside the scattered grammar fragment");
    default: throw Error(ErrorKind::NotScattered, to_string(space) + " is not scattered");
  }
}

inline bool isolated(const Space& space, const PointPtr& point) {
  using K = SpaceDesc::Kind;
  using PK = PointDesc::Kind;
  switch (space->kind) {
    case K::Naturals:
    case K::Finite:
      if (point->kind != PK::Nat && point->kind != PK::Fin) detail::mismatch(space, point);
      return true;
    case K::OmegaPlusOne:
      if (point->kind != PK::Ordinal) detail::mismatch(space, point);
      return !point->omega;
    case K::Layered:
      cb_rank(space->b);
      if (point->kind == PK::Top) return isolated(space->a, point->first);
      if (point->kind == PK::Bot) {
        isolated(space->b, point->first);
        return false;  // the top space is never empty in this grammar
      }
      detail::mismatch(space, point);
    case K::Product:
      cb_rank(space);
      if (point->kind != PK::Pair) detail::mismatch(space, point);
      return isolated(space->a, point->first) && isolated(space->b, point->second);
    default: cb_rank(space);  // throws
  }
  return false;
}

// ---------------------------------------------------------------- samples

/// A small catalog of points of the space, used by fixtures and property
/// tests. `width` bounds the naturals drawn.
inline std::vector<PointPtr> sample_points(const Space& space, Nat width = 4) {
  using K = SpaceDesc::Kind;
  std::vector<PointPtr> out;
  switch (space->kind) {
    case K::Naturals:
      for (Nat i = 0; i < width; ++i) out.push_back(pt::nat(i));
      break;
    case K::Finite:
      for (Nat i = 0; i < space->n; ++i) out.push_back(pt::fin(i));
      break;
    case K::OmegaPlusOne:
      for (Nat i = 0; i < width; ++i) out.push_back(pt::ordinal(i));
      out.push_back(pt::omega());
      break;
    case K::Sierpinski:
      out = {pt::sierp_top(), pt::sierp_bot()};
      break;
    case K::Baire:
      out = {pt::stream(NameStream::periodic({}, {0})), pt::stream(NameStream::periodic({}, {1})),
             pt::stream(NameStream::periodic({3}, {0, 1})), pt::stream(NameStream::periodic({0, 0, 5}, {}))};
      break;
    case K::Cantor:
      out = {pt::stream(NameStream::periodic({}, {0})), pt::stream(NameStream::periodic({}, {1})),
             pt::stream(NameStream::periodic({}, {0, 1})), pt::stream(NameStream::periodic({0, 0, 1}, {}))};
      break;
    case K::DecimalReal:
      out = {pt::decimal(false, 0, NameStream::periodic({}, {})), pt::decimal(false, 1, NameStream::periodic({}, {})),
             pt::decimal(true, 0, NameStream::periodic({2, 5}, {})),
             pt::decimal(false, 0, NameStream::periodic({}, {3}))};
      break;
    case K::Product: {
      Nat w = std::max<Nat>(2, width / 2);
      for (auto& a : sample_points(space->a, w))
        for (auto& b : sample_points(space->b, w)) out.push_back(pt::pair(a, b));
      break;
    }
    case K::Layered:
      for (auto& x : sample_points(space->a, width)) out.push_back(pt::upper(x));
      for (auto& y : sample_points(space->b, width)) out.push_back(pt::lower(y));
      break;
    case K::FormalCompletion:
      for (auto& x : sample_points(space->a, width)) out.push_back(pt::embedded(x));
      out.push_back(pt::bottom());
      break;
  }
  return out;
}

/// Whether the space has at least two points (every grammar space except Fin(1)).
inline bool has_two_points(const Space& space) {
  using K = SpaceDesc::Kind;
  switch (space->kind) {
    case K::Finite: return space->n >= 2;
    case K::Product: return has_two_points(space->a) || has_two_points(space->b);
    default: return true;
  }
}

}  // namespace wadge
