#include <doctest.h>

#include <cmath>

#include <Eigen/Eigenvalues>

#include "fgem/models.hpp"
#include "fgem/partition.hpp"
#include "oracles.hpp"

using namespace fgem;

TEST_SUITE("partition") {

TEST_CASE("site_partition_dims") {
  const Partition p(4, {{1, 2}, {3, 4}});
  CHECK(p.dims() == std::vector<int>{4, 4});
  CHECK(p.total_dim() == 16);
}

TEST_CASE("unequal_partition_dims") {
  const Partition p(4, {{1}, {2, 3, 4}});
  CHECK(p.dims() == std::vector<int>{2, 8});
}

TEST_CASE("invalid_partitions_rejected") {
  CHECK_THROWS_AS(Partition(4, {{1, 2}, {2, 3, 4}}), ValidationError);  // overlap
  CHECK_THROWS_AS(Partition(4, {{1}, {3, 4}}), ValidationError);        // gap
  CHECK_THROWS_AS(Partition(4, {{1, 2}, {}}), ValidationError);         // empty subset
  CHECK_THROWS_AS(Partition(4, {{1, 2, 3, 4}}), ValidationError);       // single subset
  CHECK_THROWS_AS(Partition(4, {{1, 2}, {3, 5}}), ValidationError);     // out of range
}

TEST_CASE("parse_grammar") {
  CHECK(Partition::parse("1,2|3,4", 4).to_string() == "1,2|3,4");
  CHECK(Partition::parse("1|2,3,4", 4).dims() == std::vector<int>{2, 8});
  // subset-internal order is ascending mode index
  CHECK(Partition::parse("2,1|4,3", 4).to_string() == "1,2|3,4");
  CHECK_THROWS_AS(Partition::parse("1,2|3,x", 4), ValidationError);
  CHECK_THROWS_AS(Partition::parse("1,2|", 4), ValidationError);
  CHECK_THROWS_AS(Partition::parse("", 4), ValidationError);
}

TEST_CASE("group_state_is_a_reshape_for_contiguous_subsets") {
  const StateVector v = StateVector::basis_state(4, 0b0110);
  const GroupedState g = group_state(v, Partition(4, {{1, 2}, {3, 4}}));
  // |01> (x) |10>: multi-index (1, 2) -> flat 1*4 + 2
  CHECK(g.amplitudes()[6] == Complex{1.0, 0.0});
  CHECK(g.amplitudes().cwiseAbs().sum() == 1.0);
}

TEST_CASE("group_state_unequal_subsets") {
  const StateVector v = StateVector::basis_state(4, 0b1001);
  const GroupedState g = group_state(v, Partition(4, {{1}, {2, 3, 4}}));
  // bits (1) and (001): multi-index (1, 1) -> flat 1*8 + 1
  CHECK(g.amplitudes()[9] == Complex{1.0, 0.0});
}

TEST_CASE("group_state_preserves_norm") {
  auto rng = oracles::make_rng(31);
  const StateVector v = oracles::random_full_state(4, rng);
  for (const auto& p : {Partition(4, {{1, 2}, {3, 4}}), Partition(4, {{1}, {2, 3, 4}}),
                        Partition(4, {{1, 3}, {2, 4}})}) {
    CHECK(group_state(v, p).norm() == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("reduced_density_of_product_state_is_pure") {
  auto rng = oracles::make_rng(32);
  const Partition p(4, {{1, 2}, {3, 4}});
  const StateVector v = oracles::random_product_state(p, rng);
  const DensityMatrix rho = reduced_density(group_state(v, p), {1});
  CHECK(rho.purity() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("dimer_ground_state_site_reduction_is_diagonal") {
  for (double alpha : {1.0, 2.0}) {
    const StateVector v = dimer_ground_state_analytic(DimerParams::from_alpha(alpha));
    const DensityMatrix rho = reduced_density(group_state(v, Partition(4, {{1, 2}, {3, 4}})), {1});
    const double c = 1.0 / (2.0 * (1.0 + alpha * alpha));
    Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(4, 4);
    expected(0, 0) = c;
    expected(1, 1) = alpha * alpha * c;
    expected(2, 2) = alpha * alpha * c;
    expected(3, 3) = c;
    CHECK((rho.matrix() - expected).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("schmidt_maximizer_reduces_to_maximally_mixed") {
  StateVector v(4);
  for (std::uint64_t k : {3, 5, 10, 12}) v.set_coeff(k, 0.5);
  const DensityMatrix rho = reduced_density(group_state(v, Partition(4, {{1, 2}, {3, 4}})), {1});
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.matrix());
  for (int i = 0; i < 4; ++i) {
    CHECK(solver.eigenvalues()[i] == doctest::Approx(0.25).epsilon(1e-12));
  }
}

TEST_CASE("partial_trace_preserves_trace") {
  auto rng = oracles::make_rng(33);
  const Partition p(6, {{1, 2}, {3, 4}, {5, 6}});
  const StateVector v = oracles::random_full_state(6, rng);
  const GroupedState g = group_state(v, p);
  for (const auto& keep : {std::vector<int>{1}, {2}, {3}, {1, 3}, {2, 1}}) {
    CHECK(reduced_density(g, keep).matrix().trace().real() ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("reduced_density_rejects_bad_keep_lists") {
  auto rng = oracles::make_rng(34);
  const Partition p(4, {{1, 2}, {3, 4}});
  const GroupedState g = group_state(oracles::random_full_state(4, rng), p);
  CHECK_THROWS_AS(reduced_density(g, {}), ValidationError);
  CHECK_THROWS_AS(reduced_density(g, {3}), ValidationError);
  CHECK_THROWS_AS(reduced_density(g, {1, 1}), ValidationError);
}

TEST_CASE("density_matrix_constructor_validates") {
  Eigen::MatrixXcd bad(2, 2);
  bad << 1.0, Complex{0.0, 0.5}, 0.0, 0.0;
  CHECK_THROWS_AS(DensityMatrix(bad), NumericError);

  Eigen::MatrixXcd wrong_trace = Eigen::MatrixXcd::Identity(2, 2);
  CHECK_THROWS_AS(DensityMatrix(wrong_trace), NumericError);
}

}  // TEST_SUITE
