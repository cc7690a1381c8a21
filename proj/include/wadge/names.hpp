#pragma once

// Finite-prefix semantics for infinite names and the monotone transducer
// model of continuous functionals.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace wadge {

using Nat = std::uint64_t;
using Symbol = Nat;
using Prefix = std::vector<Symbol>;

/// u ⊑ v
inline bool is_prefix(const Prefix& u, const Prefix& v) {
  if (u.size() > v.size()) return false;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] != v[i]) return false;
  return true;
}

inline Prefix truncate(const Prefix& p, std::size_t n) {
  return Prefix(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(std::min(n, p.size())));
}

inline std::string format_prefix(const Prefix& p) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) os << ',';
    os << p[i];
  }
  os << ']';
  return os.str();
}

inline Prefix parse_prefix(const std::string& text) {
  Prefix out;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  if (i >= text.size() || text[i] != '[') throw Error(ErrorKind::Parse, "prefix must start with '['");
  ++i;
  skip_ws();
  if (i < text.size() && text[i] == ']') return out;
  while (true) {
    skip_ws();
    std::size_t start = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    if (start == i) throw Error(ErrorKind::Parse, "expected a decimal symbol in " + text);
    out.push_back(std::stoull(text.substr(start, i - start)));
    skip_ws();
    if (i < text.size() && text[i] == ',') {
      ++i;
      continue;
    }
    if (i < text.size() && text[i] == ']') break;
    throw Error(ErrorKind::Parse, "malformed prefix " + text);
  }
  return out;
}

// Cantor pairing. pair(n, m) >= max(n, m) for all n, m.
constexpr Nat pair(Nat n, Nat m) { return (n + m) * (n + m + 1) / 2 + m; }

inline std::pair<Nat, Nat> unpair(Nat k) {
  auto w = static_cast<Nat>((std::sqrt(8.0 * static_cast<double>(k) + 1.0) - 1.0) / 2.0);
  while (w * (w + 1) / 2 > k) --w;
  while ((w + 1) * (w + 2) / 2 <= k) ++w;
  Nat m = k - w * (w + 1) / 2;
  return {w - m, m};
}

struct PointDesc;
using PointPtr = std::shared_ptr<const PointDesc>;

/// An infinite name, given by its symbol at each position. The optional
/// truth tag records the point the stream codes; transducers never read it.
struct NameStream {
  std::function<Symbol(std::size_t)> symbol;
  PointPtr truth;

  Prefix at(std::size_t depth) const {
    Prefix p;
    p.reserve(depth);
    for (std::size_t i = 0; i < depth; ++i) p.push_back(symbol(i));
    return p;
  }

  /// head followed by cycle repeated forever (cycle empty means zeros).
  static NameStream periodic(Prefix head, Prefix cycle, PointPtr truth = nullptr) {
    auto h = std::make_shared<const Prefix>(std::move(head));
    auto c = std::make_shared<const Prefix>(std::move(cycle));
    NameStream s;
    s.symbol = [h, c](std::size_t i) -> Symbol {
      if (i < h->size()) return (*h)[i];
      if (c->empty()) return 0;
      return (*c)[(i - h->size()) % c->size()];
    };
    s.truth = std::move(truth);
    return s;
  }

  static NameStream from_prefix(Prefix p, Symbol pad = 0, PointPtr truth = nullptr) {
    return periodic(std::move(p), Prefix{pad}, std::move(truth));
  }
};

/// A total monotone map on prefixes: u ⊑ v implies step(u) ⊑ step(v).
struct Transducer {
  std::function<Prefix(const Prefix&)> step;
  std::string description;

  Prefix operator()(const Prefix& u) const { return step(u); }
};

inline Transducer identity_transducer() {
  return {[](const Prefix& u) { return u; }, "identity"};
}

inline Transducer constant_transducer(Prefix w) {
  return {[w = std::move(w)](const Prefix&) { return w; }, "constant"};
}

inline Transducer compose(Transducer outer, Transducer inner) {
  std::string desc = outer.description + " o " + inner.description;
  return {[o = std::move(outer.step), i = std::move(inner.step)](const Prefix& u) { return o(i(u)); },
          std::move(desc)};
}

inline Prefix apply(const Transducer& t, const NameStream& x, std::size_t depth) {
  return t.step(x.at(depth));
}

// Two-track encoding used by outer witnesses: even positions carry the
// solution track, odd positions the original input track.
inline Prefix interleave(const Prefix& even, const Prefix& odd) {
  std::size_t n = std::min(even.size(), odd.size());
  Prefix out;
  out.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(even[i]);
    out.push_back(odd[i]);
  }
  return out;
}

inline std::pair<Prefix, Prefix> deinterleave(const Prefix& p) {
  Prefix even, odd;
  for (std::size_t i = 0; i < p.size(); ++i) (i % 2 == 0 ? even : odd).push_back(p[i]);
  return {std::move(even), std::move(odd)};
}

struct MonotoneReport {
  std::vector<std::pair<Prefix, Prefix>> violations;
  std::size_t nodes = 0;

  bool empty() const { return violations.empty(); }
};

inline constexpr std::size_t kDefaultNodeBudget = 20'000'000;

/// Exhaustively checks every one-symbol extension u -> u·a with symbols below
/// alphabet_bound and |u·a| <= depth_bound. Edge checks suffice because ⊑ is
/// transitive along chains. Visits sum_{k<=depth} alphabet^k prefixes.
inline MonotoneReport check_monotone(const Transducer& t, std::size_t alphabet_bound, std::size_t depth_bound,
                                     std::size_t node_budget = kDefaultNodeBudget) {
  MonotoneReport report;
  Prefix u;
  std::function<void(const Prefix&)> visit = [&](const Prefix& out_u) {
    if (++report.nodes > node_budget)
      throw Error(ErrorKind::ResourceLimit, "check_monotone exceeded node budget");
    if (u.size() >= depth_bound) return;
    for (Symbol a = 0; a < alphabet_bound; ++a) {
      u.push_back(a);
      Prefix out_v = t.step(u);
      if (!is_prefix(out_u, out_v)) report.violations.emplace_back(truncate(u, u.size() - 1), u);
      visit(out_v);
      u.pop_back();
    }
  };
  visit(t.step(u));
  return report;
}

}  // namespace wadge
