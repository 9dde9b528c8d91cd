#include <gtest/gtest.h>

#include <random>

#include "cmarr/linalg.hpp"
#include "oracles.hpp"

using namespace cmarr;

namespace {

std::vector<BigInt> big(std::initializer_list<long long> v) { return {v.begin(), v.end()}; }

QMatrix matrix(std::initializer_list<std::initializer_list<long long>> rows) {
  std::vector<std::vector<Rational>> out;
  for (auto r : rows) out.emplace_back(r.begin(), r.end());
  return QMatrix::from_rows(std::move(out));
}

}  // namespace

TEST(CanonicalizeCovector, WorkedExamples) {
  EXPECT_EQ(canonicalize_covector(big({0, -2, 2, 0})).coefficients(), big({0, 1, -1, 0}));
  EXPECT_EQ(canonicalize_covector(big({1, 1, -1, -1})).coefficients(), big({1, 1, -1, -1}));
  EXPECT_EQ(canonicalize_covector(big({-3, 0, 3})).coefficients(), big({1, 0, -1}));
}

TEST(CanonicalizeCovector, ZeroIsDegenerate) {
  try {
    canonicalize_covector(big({0, 0, 0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::degenerate_form);
  }
}

TEST(CanonicalizeCovector, ProjectiveNormalForm) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> coeff(-6, 6), scale(1, 9);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<BigInt> v(4);
    for (auto& x : v) x = coeff(rng);
    if (std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x == 0; })) continue;
    const auto canon = canonicalize_covector(v);
    BigInt g = 0;
    for (const auto& x : canon.coefficients()) g = gcd(g, x);
    EXPECT_EQ(g, 1);
    auto lead = std::find_if(canon.coefficients().begin(), canon.coefficients().end(),
                             [](const BigInt& x) { return x != 0; });
    EXPECT_GT(*lead, 0);

    const int c = scale(rng);
    std::vector<BigInt> pos = v, neg = v;
    for (auto& x : pos) x *= c;
    for (auto& x : neg) x *= -c;
    EXPECT_EQ(canonicalize_covector(pos), canon);
    EXPECT_EQ(canonicalize_covector(neg), canon);
  }
}

TEST(Rref, WorkedExamples) {
  auto id = rref(matrix({{1, 0}, {0, 1}}));
  EXPECT_EQ(id.matrix, matrix({{1, 0}, {0, 1}}));
  EXPECT_EQ(id.rank(), 2u);

  auto dep = rref(matrix({{1, 1, 0}, {2, 2, 0}}));
  EXPECT_EQ(dep.matrix, matrix({{1, 1, 0}}));
  EXPECT_EQ(dep.rank(), 1u);

  auto chain = rref(matrix({{1, -1, 0}, {0, 1, -1}}));
  EXPECT_EQ(chain.matrix, matrix({{1, 0, -1}, {0, 1, -1}}));
  EXPECT_EQ(chain.pivots, (std::vector<std::size_t>{0, 1}));
}

TEST(Rref, EmptyAndZeroMatrices) {
  EXPECT_EQ(rref(QMatrix(3)).rank(), 0u);
  EXPECT_EQ(rref(QMatrix(2, 3)).rank(), 0u);
  EXPECT_EQ(rref(QMatrix(2, 3)).matrix.row_count(), 0u);
}

TEST(Rref, RaggedRowsRejected) {
  EXPECT_THROW(QMatrix({{Rational(1)}, {Rational(1), Rational(2)}}, 1), Error);
}

TEST(Rref, IdempotentRowSpacePreservingAndMatchesMinorRank) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> entry(-2, 2), dim(1, 4);
  for (int trial = 0; trial < 400; ++trial) {
    const int rows = dim(rng), cols = dim(rng);
    std::vector<std::vector<Rational>> data(rows);
    for (auto& r : data)
      for (int j = 0; j < cols; ++j) r.emplace_back(BigInt(entry(rng)), BigInt(1 + (entry(rng) + 2) % 3));
    const QMatrix m(data, cols);
    const auto reduced = rref(m);

    EXPECT_EQ(rref(reduced.matrix).matrix, reduced.matrix);
    EXPECT_EQ(reduced.rank(), oracle::rank_by_minors(m));
    for (const auto& r : m.rows()) EXPECT_TRUE(in_row_space(reduced, r));
    // rows of the reduced form lie in the original row space too
    QMatrix stacked = m;
    for (const auto& r : reduced.matrix.rows()) stacked.append_row(r);
    EXPECT_EQ(rank(stacked), reduced.rank());
  }
}

TEST(PrimitiveIntegerRow, ClearsDenominators) {
  std::vector<Rational> v{Rational(1, 2), Rational(-1, 3), Rational(0)};
  EXPECT_EQ(primitive_integer_row(v), big({3, -2, 0}));
  std::vector<Rational> w{Rational(4), Rational(6)};
  EXPECT_EQ(primitive_integer_row(w), big({2, 3}));
}
