#include "shiftfact/det_json.hpp"
#include "shiftfact/detform.hpp"
#include "shiftfact/triangular.hpp"
#include "test_support.hpp"

namespace shiftfact::det {
namespace {

using testing::near_relative;

TEST(ProdDiff, Examples) {
  EXPECT_EQ(prod_diff(NodeSet<Rational>{Rational(5)}), Rational(1));
  EXPECT_EQ(prod_diff(NodeSet<Rational>{0, 1, 2}), Rational(2));
  EXPECT_EQ(prod_diff(NodeSet<Rational>{1, 3, 5}), Rational(16));
}

TEST(BuildMatrix, Examples) {
  DeterminantSpec<Rational> vandermonde;
  vandermonde.s = 0;
  const auto v = build_matrix(vandermonde, NodeSet<Rational>{2, 3});
  EXPECT_EQ(v(0, 0), Rational(1));
  EXPECT_EQ(v(0, 1), Rational(1));
  EXPECT_EQ(v(1, 0), Rational(2));
  EXPECT_EQ(v(1, 1), Rational(3));

  DeterminantSpec<Complex> gamma;
  gamma.kind = Kind::GammaShift;
  const auto g = build_matrix(gamma, NodeSet<Complex>{1.0, 2.0});
  EXPECT_TRUE(near_relative(g(0, 0), 1.0, 1e-15));
  EXPECT_TRUE(near_relative(g(0, 1), 1.0, 1e-15));
  EXPECT_TRUE(near_relative(g(1, 0), 1.0, 1e-15));
  EXPECT_TRUE(near_relative(g(1, 1), 2.0, 1e-15));

  DeterminantSpec<Rational> binom;
  binom.kind = Kind::BinomialElem;
  const auto b = build_matrix(binom, NodeSet<Rational>{3, 4});
  EXPECT_EQ(b(1, 0), Rational(3));
  EXPECT_EQ(b(1, 1), Rational(4));
}

TEST(DetOracle, SmallMatrices) {
  Matrix<Complex> id(3);
  for (std::size_t k = 0; k < 3; ++k) id(k, k) = 1.0;
  EXPECT_EQ(det_oracle(id), Complex(1.0));
  Matrix<Rational> m(2);
  m(0, 0) = 1;
  m(0, 1) = 1;
  m(1, 0) = 1;
  m(1, 1) = 2;
  EXPECT_EQ(det_oracle(m), Rational(1));
  Matrix<Rational> swap(2);
  swap(0, 1) = 1;
  swap(1, 0) = 1;
  EXPECT_EQ(det_oracle(swap), Rational(-1));
}

TEST(DetClosed, Examples) {
  DeterminantSpec<Rational> sshift;
  sshift.s = Rational(5, 3);
  EXPECT_EQ(det_closed(sshift, NodeSet<Rational>{0, 1, 2}), Rational(2));

  DeterminantSpec<Complex> gamma;
  gamma.kind = Kind::GammaShift;
  EXPECT_TRUE(near_relative(det_closed(gamma, NodeSet<Complex>{1.0, 2.0, 3.0}), 4.0, 1e-14));

  DeterminantSpec<Rational> two_set;
  two_set.kind = Kind::TwoSetSymmetric;
  two_set.s = Rational(7, 2);
  two_set.second = {0, 1};
  EXPECT_EQ(det_closed(two_set, NodeSet<Rational>{0, 1}), Rational(-1));

  DeterminantSpec<Complex> inv_gamma;
  inv_gamma.kind = Kind::InvGamma;
  EXPECT_TRUE(near_relative(det_closed(inv_gamma, NodeSet<Complex>{1.0, 2.0}), -0.5, 1e-14));
}

TEST(DetClosed, ExactMatchesBareissForEveryExactKind) {
  verify::Rng rng(5);
  for (const auto& info : all_kinds()) {
    if (!info.exact) continue;
    int done = 0;
    for (int attempt = 0; attempt < 200 && done < 5; ++attempt) {
      DeterminantSpec<Rational> spec;
      spec.kind = info.kind;
      spec.s = info.uses_shift ? rng.small_rational() : Rational(1);
      spec.a = rng.small_rational();
      spec.b = rng.small_rational();
      std::vector<Rational> nodes, second, offsets;
      for (int k = 0; k < 4; ++k) {
        nodes.push_back(rng.small_rational(40, 7));
        second.push_back(rng.small_rational(40, 7));
        offsets.push_back(rng.small_rational());
      }
      spec.second = second;
      spec.offsets = offsets;
      try {
        const NodeSet<Rational> set(nodes);
        const auto r = evaluate_exact(spec, set);
        ASSERT_TRUE(r.closed_form && r.oracle);
        EXPECT_EQ(*r.closed_form, *r.oracle) << info.name;
        ++done;
      } catch (const PoleError&) {
      } catch (const DomainError&) {
      }
    }
    EXPECT_EQ(done, 5) << info.name;
  }
}

TEST(SideConditions, PoleIsNamed) {
  DeterminantSpec<Rational> spec;
  spec.kind = Kind::InvSShifted;
  spec.s = 1;
  try {
    det_closed(spec, NodeSet<Rational>{0, 2});
    FAIL() << "expected PoleError";
  } catch (const PoleError& e) {
    EXPECT_FALSE(e.context().empty());
  }
}

TEST(Triangular, Examples) {
  TriangularParams<Rational> p;
  p.s = 1;
  p.b = Rational(2, 3);
  EXPECT_EQ(triangular_entry(TriangularKind::Lemma1Affine, p, 2, 1), Rational(0));
  EXPECT_EQ(triangular_entry(TriangularKind::Lemma1Affine, p, 1, 2), Rational(2));
  TriangularParams<Rational> q;
  q.s = 1;
  q.c = 1;
  q.d = 3;
  EXPECT_EQ(triangular_entry(TriangularKind::Lemma3Affine, q, 1, 1), Rational(1, 6));
}

TEST(Triangular, ExcludedProgressionRaises) {
  TriangularParams<Rational> p;
  p.s = 1;
  p.b = -2;
  EXPECT_NO_THROW(triangular_sides(TriangularKind::Lemma2Affine, p, 1, 1));
  EXPECT_THROW(triangular_sides(TriangularKind::Lemma2Affine, p, 2, 1), PoleError);
  p.b = -1;
  EXPECT_THROW(triangular_sides(TriangularKind::Lemma2Affine, p, 1, 1), PoleError);
}

TEST(Document, ParsesInlineLiterals) {
  const auto doc = parse_det_document(
      R"({"schema":1,"kind":"RatioSShifted","s":"1/2","params":{"a":[2,0],"b":"1-i"},"nodes":[0,"2i",1.5]})");
  EXPECT_EQ(doc.spec.kind, Kind::RatioSShifted);
  EXPECT_EQ(doc.spec.s, Complex(0.5));
  EXPECT_EQ(doc.spec.b, Complex(1.0, -1.0));
  EXPECT_EQ(doc.nodes.size(), 3u);
  EXPECT_EQ(doc.nodes[1], Complex(0.0, 2.0));
}

TEST(Document, RoundTrip) {
  const auto doc = parse_det_document(R"({"schema":1,"kind":"TwoSetSymmetric","s":2,"params":{"w":[1,2]},"nodes":[3,4]})");
  const auto again = parse_det_document(det_document_to_json(doc));
  EXPECT_EQ(again.spec.kind, doc.spec.kind);
  EXPECT_EQ(again.spec.second, doc.spec.second);
  EXPECT_EQ(std::vector<Complex>(again.nodes.begin(), again.nodes.end()),
            std::vector<Complex>(doc.nodes.begin(), doc.nodes.end()));
}

TEST(Document, Rejections) {
  EXPECT_THROW(parse_det_document("{bad"), DocumentError);
  EXPECT_THROW(parse_det_document(R"({"schema":2,"kind":"SShifted","nodes":[1]})"), DocumentError);
  EXPECT_THROW(parse_det_document(R"({"schema":1,"kind":"Nope","nodes":[1]})"), DocumentError);
  EXPECT_THROW(parse_det_document(R"({"schema":1,"kind":"SShifted","nodes":[]})"), DocumentError);
  EXPECT_THROW(parse_det_document_exact(R"({"schema":1,"kind":"SShifted","nodes":["1+i"]})"), DocumentError);
}

class DetformSuite : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(DetformSuite, AllPropertiesHold) {
  const auto report = verify::run_detform_suite({.trials = 10, .seed = GetParam()});
  EXPECT_TRUE(testing::all_checks_pass(report));
}

INSTANTIATE_TEST_SUITE_P(Seeds, DetformSuite, ::testing::Values(21u, 22u));

}  // namespace
}  // namespace shiftfact::det
