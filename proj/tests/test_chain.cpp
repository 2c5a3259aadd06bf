#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "latfold/chain.hpp"
#include "latfold/search.hpp"
#include "support/oracles.hpp"

using namespace latfold;

namespace {

LatticePoint pt(std::int64_t x, std::int64_t y, std::int64_t z = 0) {
  return {{x, 0}, {y, 0}, {z, 0}};
}

MoveString sq(std::string_view labels) { return parse_moves(LatticeName::square, labels); }

// Arbitrary move strings, colliding or not.
MoveString random_moves(LatticeName lat, std::size_t steps, std::mt19937_64& gen) {
  std::uniform_int_distribution<int> d(0, static_cast<int>(lattice_registry(lat).size()) - 1);
  MoveString m{lat, {}};
  for (std::size_t i = 0; i < steps; ++i)
    m.moves.push_back(static_cast<Move>(d(gen)));
  return m;
}

bool folds(const MoveString& m) {
  try {
    fold(m);
    return true;
  } catch (const CollisionError&) {
    return false;
  }
}

} // namespace

TEST(Fold, SquareUShape) {
  Conformation c = fold(sq("ACB"));
  ASSERT_EQ(c.size(), 4u);
  EXPECT_EQ(c.positions[0], pt(0, 0));
  EXPECT_EQ(c.positions[1], pt(4, 0));
  EXPECT_EQ(c.positions[2], pt(4, 4));
  EXPECT_EQ(c.positions[3], pt(0, 4));
}

TEST(Fold, BacktrackCollides) {
  try {
    fold(sq("AB"));
    FAIL() << "expected a collision";
  } catch (const CollisionError& e) {
    EXPECT_EQ(e.index, 2u);
  }
  try {
    fold(sq("ACBDA"));  // closes the unit square at step 4
    FAIL() << "expected a collision";
  } catch (const CollisionError& e) {
    EXPECT_EQ(e.index, 4u);
  }
}

TEST(Fold, CubicThreeAxes) {
  Conformation c = fold(parse_moves(LatticeName::cubic, "ACE"));
  std::set<LatticePoint> uniq(c.positions.begin(), c.positions.end());
  EXPECT_EQ(uniq.size(), 4u);
  EXPECT_EQ(c.positions.back(), pt(4, 4, 4));
}

TEST(Fold, RejectsOutOfRangeMoves) {
  EXPECT_THROW(fold(MoveString{LatticeName::square, {0, 4}}), ArgumentError);
}

TEST(Contacts, Examples) {
  EXPECT_EQ(contacts(fold(sq("ACB"))), (std::vector<Contact>{{0, 3}}));
  EXPECT_TRUE(contacts(fold(parse_moves(LatticeName::cubic, "AAAAAAAA"))).empty());
  // (0,0) (1,0) (1,1) (0,1) (-1,1) (-1,0)
  EXPECT_EQ(contacts(fold(sq("ACBBD"))), (std::vector<Contact>{{0, 3}, {0, 5}}));
  // (0,0) (0,1) (1,1) (2,1) (2,0) (1,0)
  EXPECT_EQ(contacts(fold(sq("CAADB"))), (std::vector<Contact>{{0, 5}, {2, 5}}));
}

TEST(Contacts, NoneForShortChainsOnBipartiteLattices) {
  for (LatticeName name : {LatticeName::square, LatticeName::cubic}) {
    const auto basis = name == LatticeName::square ? oracle::square_basis() : oracle::cubic_basis();
    for (std::size_t steps = 0; steps <= 2; ++steps)
      for (const auto& w : oracle::naive_saws(basis, steps)) {
        MoveString m{name, {}};
        for (int mv : w.moves)
          m.moves.push_back(static_cast<Move>(mv));
        EXPECT_TRUE(contacts(fold(m)).empty());
      }
  }
}

TEST(Contacts, TrianglesOnCloseLattices) {
  // a 60 degree turn closes a triangle on the hexagonal lattice
  EXPECT_EQ(contacts(fold(parse_moves(LatticeName::hexagonal, "AC"))),
            (std::vector<Contact>{{0, 2}}));
}

TEST(Transform, IdentityAndRotation) {
  const LatticeSpec& lat = lattice_registry("square");
  EXPECT_EQ(transform(sq("ACB"), lat.point_group.front()), sq("ACB"));
  // +x -> +y -> -x -> -y
  Permutation rot = {2, 3, 1, 0};
  ASSERT_NE(std::find(lat.point_group.begin(), lat.point_group.end(), rot), lat.point_group.end());
  MoveString r = transform(sq("ACB"), rot);
  EXPECT_EQ(r, sq("CBD"));
  Conformation c = fold(r);
  EXPECT_EQ(c.positions[1], pt(0, 4));
  EXPECT_EQ(c.positions[2], pt(-4, 4));
  EXPECT_EQ(c.positions[3], pt(-4, 0));
}

TEST(Transform, InverseRestores) {
  std::mt19937_64 gen(7);
  for (LatticeName n : all_lattices) {
    for (const Permutation& p : lattice_registry(n).point_group) {
      MoveString m = random_moves(n, 12, gen);
      EXPECT_EQ(transform(transform(m, p), inverse(p)), m);
    }
  }
}

TEST(Reverse, Examples) {
  EXPECT_EQ(reverse(sq("A")), sq("B"));
  EXPECT_EQ(reverse(sq("AC")), sq("DB"));
  std::mt19937_64 gen(11);
  for (int i = 0; i < 100; ++i) {
    LatticeName n = all_lattices[static_cast<std::size_t>(i) % all_lattices.size()];
    MoveString m = random_moves(n, static_cast<std::size_t>(i % 17), gen);
    EXPECT_EQ(reverse(reverse(m)), m);
  }
}

TEST(Reverse, RetracesChain) {
  Rng rng(3);
  for (LatticeName n : all_lattices) {
    MoveString m = chain_grow(n, 14, rng);
    Conformation fwd = fold(m), back = fold(reverse(m));
    const LatticePoint end = fwd.positions.back();
    for (std::size_t k = 0; k < fwd.size(); ++k)
      EXPECT_EQ(back.positions[k], fwd.positions[fwd.size() - 1 - k] - end);
  }
}

TEST(ChainProperties, SymmetryAndReversal) {
  std::mt19937_64 gen(2024);
  Rng rng(99);
  for (LatticeName n : all_lattices) {
    const LatticeSpec& lat = lattice_registry(n);
    for (int trial = 0; trial < 30; ++trial) {
      // collision status is preserved, valid or not
      MoveString any = random_moves(n, 8, gen);
      for (const Permutation& p : lat.point_group)
        ASSERT_EQ(folds(transform(any, p)), folds(any));

      MoveString m = chain_grow(n, 4 + static_cast<std::size_t>(trial % 12), rng);
      const auto base = contacts(fold(m));
      for (const Permutation& p : lat.point_group)
        ASSERT_EQ(contacts(fold(transform(m, p))), base);

      const std::size_t last = m.residues() - 1;
      std::vector<Contact> expect;
      for (const auto& [i, j] : base)
        expect.emplace_back(last - j, last - i);
      std::sort(expect.begin(), expect.end());
      ASSERT_EQ(contacts(fold(reverse(m))), expect);
    }
  }
}

TEST(ChainProperties, IndexedContactsMatchPairwise) {
  Rng rng(5);
  for (LatticeName n : all_lattices)
    for (int trial = 0; trial < 50; ++trial) {
      Conformation c = fold(chain_grow(n, 2 + static_cast<std::size_t>(trial), rng));
      ASSERT_EQ(contacts_indexed(c), contacts(c));
    }
}

TEST(MoveNotation, ParseAndFormat) {
  EXPECT_EQ(parse_moves(LatticeName::fcc, "abcL").moves, (std::vector<Move>{0, 1, 2, 11}));
  EXPECT_EQ(format_moves(parse_moves(LatticeName::hcp, "aBkL")), "ABKL");
  EXPECT_TRUE(parse_moves(LatticeName::square, "").moves.empty());
  try {
    parse_moves(LatticeName::square, "ACE");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.token, "E");
    EXPECT_EQ(e.position, 2u);
  }
}
