#include <gtest/gtest.h>

#include <map>

#include "wadge/catalog.hpp"
#include "wadge/names.hpp"

using namespace wadge;

namespace {

// Pairing by walking the diagonals, independent of the closed form.
std::map<std::pair<Nat, Nat>, Nat> diagonal_table(Nat limit) {
  std::map<std::pair<Nat, Nat>, Nat> table;
  Nat code = 0;
  for (Nat diag = 0; code <= limit; ++diag)
    for (Nat m = 0; m <= diag; ++m) table[{diag - m, m}] = code++;
  return table;
}

}  // namespace

TEST(Pairing, SmallValues) {
  EXPECT_EQ(pair(0, 0), 0u);
  EXPECT_EQ(pair(1, 0), 1u);
  EXPECT_EQ(pair(0, 1), 2u);
  EXPECT_EQ(unpair(0), std::make_pair(Nat{0}, Nat{0}));
  EXPECT_EQ(unpair(2), std::make_pair(Nat{0}, Nat{1}));
}

TEST(Pairing, MatchesDiagonalEnumeration) {
  for (auto& [nm, code] : diagonal_table(4096)) {
    ASSERT_EQ(pair(nm.first, nm.second), code);
    ASSERT_EQ(unpair(code), nm);
  }
}

TEST(Pairing, RoundTripAndDominance) {
  for (Nat n = 0; n <= 64; ++n)
    for (Nat m = 0; m <= 64; ++m) {
      ASSERT_EQ(unpair(pair(n, m)), std::make_pair(n, m));
      ASSERT_GE(pair(n, m), n);
      ASSERT_GE(pair(n, m), m);
    }
  for (Nat k = 0; k <= 4096; ++k) {
    auto [n, m] = unpair(k);
    ASSERT_EQ(pair(n, m), k);
  }
}

TEST(Prefix, OrderAndFormatting) {
  EXPECT_TRUE(is_prefix({}, {1, 2}));
  EXPECT_TRUE(is_prefix({1}, {1, 2}));
  EXPECT_FALSE(is_prefix({2}, {1, 2}));
  EXPECT_FALSE(is_prefix({1, 2, 3}, {1, 2}));
  EXPECT_EQ(format_prefix({0, 0, 1, 5}), "[0,0,1,5]");
  EXPECT_EQ(parse_prefix("[0, 0,1,5]"), (Prefix{0, 0, 1, 5}));
  EXPECT_EQ(parse_prefix("[]"), Prefix{});
  EXPECT_THROW(parse_prefix("0,1"), Error);
  EXPECT_THROW(parse_prefix("[0,,1]"), Error);
}

TEST(NameStream, LengthAndMonotone) {
  std::vector<NameStream> streams{NameStream::periodic({}, {}), NameStream::periodic({3, 1}, {0, 2, 7}),
                                  NameStream::from_prefix({4, 4}, 9), negative_info_stream({{3, 2}}, nullptr)};
  for (const auto& x : streams)
    for (std::size_t d = 0; d <= 256; ++d) {
      Prefix a = x.at(d);
      ASSERT_EQ(a.size(), d);
      ASSERT_TRUE(is_prefix(a, x.at(d + 1)));
    }
  EXPECT_EQ(NameStream::periodic({3}, {0, 1}).at(6), (Prefix{3, 0, 1, 0, 1, 0}));
}

TEST(Transducer, ApplyAndCompose) {
  auto x = NameStream::periodic({5}, {1, 2});
  auto id = identity_transducer();
  EXPECT_EQ(apply(id, x, 7), x.at(7));
  auto c = constant_transducer({4, 2});
  for (std::size_t d = 0; d < 8; ++d) EXPECT_EQ(apply(c, x, d), (Prefix{4, 2}));
  Transducer dbl{[](const Prefix& p) {
                   Prefix o;
                   for (auto s : p) o.push_back(2 * s);
                   return o;
                 },
                 "double"};
  Transducer drop{[](const Prefix& p) { return p.empty() ? p : Prefix(p.begin() + 1, p.end()); }, "drop"};
  EXPECT_EQ(apply(compose(dbl, drop), x, 5), dbl.step(drop.step(x.at(5))));
  for (std::size_t d = 0; d <= 32; ++d) {
    Prefix p = x.at(d);
    ASSERT_EQ(compose(id, dbl).step(p), dbl.step(p));
    ASSERT_EQ(compose(dbl, id).step(p), dbl.step(p));
    ASSERT_EQ(compose(dbl, compose(drop, dbl)).step(p), compose(compose(dbl, drop), dbl).step(p));
  }
}

TEST(Interleave, RoundTrip) {
  Prefix a{1, 2, 3}, b{7, 8, 9};
  EXPECT_EQ(interleave(a, b), (Prefix{1, 7, 2, 8, 3, 9}));
  EXPECT_EQ(deinterleave(interleave(a, b)), std::make_pair(a, b));
  EXPECT_EQ(interleave({1, 2, 3}, {7}), (Prefix{1, 7}));
}

TEST(CheckMonotone, IdentityIsMonotone) { EXPECT_TRUE(check_monotone(identity_transducer(), 3, 6).empty()); }

TEST(CheckMonotone, ReportsConstructedViolation) {
  Transducer broken{[](const Prefix& p) {
                      if (p == Prefix{0}) return Prefix{1};
                      if (p == Prefix{0, 0}) return Prefix{0};
                      return Prefix{};
                    },
                    "broken"};
  auto r = check_monotone(broken, 2, 3);
  ASSERT_FALSE(r.empty());
  bool found = false;
  for (auto& [u, v] : r.violations) found = found || (u == Prefix{0} && v == Prefix{0, 0});
  EXPECT_TRUE(found);
}

TEST(CheckMonotone, NodeBudget) {
  EXPECT_THROW(check_monotone(identity_transducer(), 8, 8, 1000), Error);
  try {
    check_monotone(identity_transducer(), 8, 8, 1000);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ResourceLimit);
  }
}

TEST(CheckMonotone, AccToSeqaccInnerWideAlphabet) {
  EXPECT_TRUE(check_monotone(witness_acc_to_seqacc().inner, 10, 6).empty());
}
