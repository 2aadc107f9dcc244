#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stablerep/permrep.hpp"

using namespace stablerep;

namespace {

std::vector<Partition> partitions_up_to(int r) {
  std::vector<Partition> out;
  for (int s = 0; s <= r; ++s)
    for (const Partition& p : partitions_of(s)) out.push_back(p);
  return out;
}

SparseMatZ dense_to_sparse(const std::vector<std::vector<std::int64_t>>& rows) {
  SparseMatZ m(static_cast<std::int64_t>(rows.size()),
               static_cast<std::int64_t>(rows.empty() ? 0 : rows[0].size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      if (rows[i][j])
        m.col[j].emplace_back(static_cast<std::int64_t>(i), rows[i][j]);
  return m;
}

ConcreteMap endo_from_dense(const Partition& shape,
                            const std::vector<std::vector<std::int64_t>>& rows) {
  ConcreteMap m;
  m.source_shape = shape;
  m.target_shape = shape;
  m.n = shape.size();
  m.mat = dense_to_sparse(rows);
  return m;
}

const StableTabloid kDp{Partition({1}), Partition({1}), {{1, 0}}};
const StableTabloid kSum{Partition(), Partition({1}), {}};
const StableTabloid kAug{Partition({1}), Partition(), {{1}}};

}  // namespace

TEST_CASE("basis sizes and ordering") {
  CHECK(PermBasis(Partition({3})).dim() == 1);
  CHECK(PermBasis(Partition({2, 1})).dim() == 3);
  CHECK(PermBasis(Partition({2, 1, 1})).dim() == 12);

  PermBasis b(Partition({2, 2, 1}));
  CHECK(b.dim() == 30);
  Labels prev;
  for (std::int64_t i = 0; i < b.dim(); ++i) {
    Labels l = b.labels_of(i);
    CHECK(b.index_of(l) == i);
    if (i) CHECK(prev < l);
    prev = l;
  }
  CHECK(b.labels_of(0) == b.canonical());
}

TEST_CASE("basis budget") {
  std::int64_t saved = basis_budget();
  set_basis_budget(100);
  CHECK_THROWS_AS(PermBasis(Partition({5, 5})), error);
  set_basis_budget(saved);
  CHECK_NOTHROW(PermBasis(Partition({5, 5})));
}

TEST_CASE("Carter-Lusztig matrices, worked examples") {
  // identity tabloid at n = 4
  ConcreteMap id4 = build_cl_matrix(instantiate(StableTabloid::identity(Partition({1})), 4));
  CHECK(id4.mat.rows == 4);
  for (std::int64_t j = 0; j < 4; ++j)
    CHECK(id4.mat.col[static_cast<std::size_t>(j)] ==
          std::vector<std::pair<std::int64_t, std::int64_t>>{{j, 1}});

  // sum: every target set-partition is in position to the single source
  ConcreteMap sum3 = build_cl_matrix(instantiate(kSum, 3));
  CHECK(sum3.mat.rows == 3);
  CHECK(sum3.mat.cols == 1);
  CHECK(sum3.mat.col[0].size() == 3);

  // distinct points: J - I
  ConcreteMap dp3 = build_cl_matrix(instantiate(kDp, 3));
  for (std::int64_t j = 0; j < 3; ++j) {
    std::vector<std::pair<std::int64_t, std::int64_t>> expect;
    for (std::int64_t i = 0; i < 3; ++i)
      if (i != j) expect.emplace_back(i, 1);
    CHECK(dp3.mat.col[static_cast<std::size_t>(j)] == expect);
  }
}

TEST_CASE("built matrices are equivariant") {
  for (const Partition& mu : partitions_up_to(2))
    for (const Partition& lambda : partitions_up_to(2))
      for (const StableTabloid& tau : enumerate_stable(mu, lambda)) {
        int n = instantiation_threshold(mu, lambda) + 1;
        CHECK(is_equivariant(build_cl_matrix(instantiate(tau, n))));
      }
}

TEST_CASE("express_in_cl_basis on worked examples") {
  // (J-I)^2 at n=5
  ConcreteMap dp5 = build_cl_matrix(instantiate(kDp, 5));
  ConcreteMap square = dp5;
  square.mat = dp5.mat * dp5.mat;
  auto coeffs = express_in_cl_basis(square);
  REQUIRE(coeffs.size() == 2);
  CHECK(coeffs.at(StableTabloid::identity(Partition({1}))) == 4);
  CHECK(coeffs.at(kDp) == 3);

  // identity matrix
  ConcreteMap id5 = build_cl_matrix(instantiate(StableTabloid::identity(Partition({1})), 5));
  auto id_coeffs = express_in_cl_basis(id5);
  REQUIRE(id_coeffs.size() == 1);
  CHECK(id_coeffs.at(StableTabloid::identity(Partition({1}))) == 1);

  // augmentation after sum on M((n)) at n=4 is multiplication by 4
  ConcreteMap sum4 = build_cl_matrix(instantiate(kSum, 4));
  ConcreteMap aug4 = build_cl_matrix(instantiate(kAug, 4));
  ConcreteMap comp;
  comp.source_shape = pad(Partition(), 4);
  comp.target_shape = pad(Partition(), 4);
  comp.n = 4;
  comp.mat = aug4.mat * sum4.mat;
  auto triv = express_in_cl_basis(comp);
  REQUIRE(triv.size() == 1);
  CHECK(triv.at(StableTabloid::identity(Partition())) == 4);
}

TEST_CASE("express_in_cl_basis rejects non-equivariant matrices") {
  CHECK_THROWS_AS(express_in_cl_basis(endo_from_dense(
                      Partition({2, 1}), {{1, 0, 0}, {1, 0, 0}, {0, 0, 0}})),
                  error);
  CHECK_THROWS_AS(express_in_cl_basis(endo_from_dense(
                      Partition({2, 1}), {{0, 1, 0}, {0, 0, 0}, {0, 0, 0}})),
                  error);
}

TEST_CASE("express inverts build") {
  for (const Partition& mu : partitions_up_to(2))
    for (const Partition& lambda : partitions_up_to(2))
      for (const StableTabloid& tau : enumerate_stable(mu, lambda)) {
        int n = instantiation_threshold(mu, lambda) + 2;
        auto coeffs = express_in_cl_basis(build_cl_matrix(instantiate(tau, n)));
        REQUIRE(coeffs.size() == 1);
        CHECK(coeffs.at(tau) == 1);
      }
}

TEST_CASE("duality: transposing a basis map dualizes its tabloid") {
  for (const Partition& mu : partitions_up_to(2))
    for (const Partition& lambda : partitions_up_to(2))
      for (const StableTabloid& tau : enumerate_stable(mu, lambda)) {
        int n = std::max(instantiation_threshold(mu, lambda),
                         instantiation_threshold(lambda, mu)) +
                1;
        ConcreteMap h = build_cl_matrix(instantiate(tau, n));
        ConcreteMap ht;
        ht.source_shape = h.target_shape;
        ht.target_shape = h.source_shape;
        ht.n = n;
        ht.mat = h.mat.transpose();
        auto coeffs = express_in_cl_basis(ht);
        REQUIRE(coeffs.size() == 1);
        CHECK(coeffs.at(transpose_dual(tau)) == 1);
      }
}

TEST_CASE("structure constants, worked examples") {
  auto sq = structure_constants_concrete(kDp, kDp, 5);
  REQUIRE(sq.size() == 2);
  CHECK(sq.at(StableTabloid::identity(Partition({1}))) == 4);
  CHECK(sq.at(kDp) == 3);

  // identity composes trivially
  for (const StableTabloid& beta : enumerate_stable(Partition({1}), Partition({2}))) {
    auto c = structure_constants_concrete(StableTabloid::identity(Partition({1})), beta, 9);
    REQUIRE(c.size() == 1);
    CHECK(c.at(beta) == 1);
  }

  auto aug_sum = structure_constants_concrete(kSum, kAug, 6);
  REQUIRE(aug_sum.size() == 1);
  CHECK(aug_sum.at(StableTabloid::identity(Partition())) == 6);

  auto sum_aug = structure_constants_concrete(kAug, kSum, 6);
  REQUIRE(sum_aug.size() == 2);
  CHECK(sum_aug.at(StableTabloid::identity(Partition({1}))) == 1);
  CHECK(sum_aug.at(kDp) == 1);
}

TEST_CASE("structure constants match the matrix route") {
  for (const Partition& mu : partitions_up_to(2))
    for (const Partition& lambda : partitions_up_to(2))
      for (const Partition& nu : partitions_up_to(2)) {
        int n = std::max({instantiation_threshold(mu, lambda),
                          instantiation_threshold(lambda, nu),
                          instantiation_threshold(mu, nu)}) +
                1;
        for (const StableTabloid& alpha : enumerate_stable(mu, lambda))
          for (const StableTabloid& beta : enumerate_stable(lambda, nu)) {
            ConcreteMap ha = build_cl_matrix(instantiate(alpha, n));
            ConcreteMap hb = build_cl_matrix(instantiate(beta, n));
            ConcreteMap prod;
            prod.source_shape = ha.source_shape;
            prod.target_shape = hb.target_shape;
            prod.n = n;
            prod.mat = hb.mat * ha.mat;
            CHECK(express_in_cl_basis(prod) ==
                  structure_constants_concrete(alpha, beta, n));
          }
      }
}

TEST_CASE("instantiated basis maps are linearly independent mod p") {
  for (const Partition& mu : partitions_up_to(2))
    for (const Partition& lambda : partitions_up_to(2)) {
      auto taus = enumerate_stable(mu, lambda);
      for (int n = instantiation_threshold(mu, lambda); n <= 12; ++n) {
        PermBasis target(pad(lambda, n));
        for (std::int64_t pv : {2, 3}) {
          FpMat columns(static_cast<std::int64_t>(taus.size()), target.dim(), Prime(pv));
          for (std::size_t t = 0; t < taus.size(); ++t) {
            ConcreteMap h = build_cl_matrix(instantiate(taus[t], n));
            for (const auto& [row, v] : h.mat.col[0])
              columns.set(static_cast<std::int64_t>(t), row, v);
          }
          CHECK(rank(columns) == static_cast<std::int64_t>(taus.size()));
        }
      }
    }
}

TEST_CASE("tensor decomposition") {
  auto t55 = tensor_decompose_concrete(Partition({4, 1}), Partition({4, 1}));
  REQUIRE(t55.size() == 2);
  CHECK(t55[0] == Partition({3, 1, 1}));
  CHECK(t55[1] == Partition({4, 1}));

  auto trivial = tensor_decompose_concrete(Partition({6}), Partition({4, 2}));
  REQUIRE(trivial.size() == 1);
  CHECK(trivial[0] == Partition({4, 2}));

  auto t90 = tensor_decompose_concrete(Partition({5, 1}), Partition({4, 2}));
  REQUIRE(t90.size() == 2);
  CHECK(t90[0] == Partition({3, 2, 1}));
  CHECK(t90[1] == Partition({4, 1, 1}));
}

TEST_CASE("restriction decomposition") {
  auto res = restrict_decompose(Partition({1}), 1, 6);
  REQUIRE(res.size() == 2);
  CHECK(res[0] == std::make_pair(Partition({1}), Partition({4, 1})));
  CHECK(res[1] == std::make_pair(Partition({1}), Partition({5})));

  auto triv = restrict_decompose(Partition(), 2, 6);
  REQUIRE(triv.size() == 1);
  CHECK(triv[0] == std::make_pair(Partition({2}), Partition({4})));

  // restriction preserves total dimension over the coset count
  BigInt total = 0;
  for (const auto& [mu, nupad] : res)
    total += perm_module_dim(mu) * perm_module_dim(nupad);
  CHECK(total * 1 == perm_module_dim(Partition({5, 1})));
}

TEST_CASE("induction") {
  CHECK(induce(Partition({1}), Partition({1}), 6) == Partition({5, 1, 1}));
  CHECK(induce(Partition(), Partition({2, 1}), 8) == pad(Partition({2, 1}), 8));
  CHECK(induce(Partition({2}), Partition({1}), 7) == Partition({6, 2, 1}));
}

TEST_CASE("decompositions are stable across consecutive levels") {
  for (const Partition& a : partitions_up_to(2))
    for (const Partition& b : partitions_up_to(2)) {
      int n0 = 2 * (a.size() + b.size()) + std::max(a.part(1), b.part(1)) + 1;
      auto depad_all = [](std::vector<Partition> padded) {
        std::vector<Partition> out;
        for (Partition& p : padded) {
          std::vector<int> rest(p.parts().begin() + (p.empty() ? 0 : 1), p.parts().end());
          out.emplace_back(rest);
        }
        std::sort(out.begin(), out.end());
        return out;
      };
      CHECK(depad_all(tensor_decompose_concrete(pad(a, n0), pad(b, n0))) ==
            depad_all(tensor_decompose_concrete(pad(a, n0 + 1), pad(b, n0 + 1))));
    }

  for (const Partition& a : partitions_up_to(2)) {
    for (int ell = 0; ell <= 2; ++ell) {
      int n0 = 2 * (a.size() + ell) + a.part(1) + 1;
      auto depad_pairs = [](std::vector<std::pair<Partition, Partition>> pairs) {
        std::vector<std::pair<Partition, Partition>> out;
        for (auto& [mu, nupad] : pairs) {
          std::vector<int> rest(nupad.parts().begin() + (nupad.empty() ? 0 : 1),
                                nupad.parts().end());
          out.emplace_back(mu, Partition(rest));
        }
        std::sort(out.begin(), out.end());
        return out;
      };
      CHECK(depad_pairs(restrict_decompose(a, ell, n0)) ==
            depad_pairs(restrict_decompose(a, ell, n0 + 1)));
    }
    for (const Partition& b : partitions_up_to(2)) {
      int n0 = 2 * b.size() + a.size() + b.part(1) + 1;
      auto depad_one = [](const Partition& p) {
        std::vector<int> rest(p.parts().begin() + (p.empty() ? 0 : 1), p.parts().end());
        return Partition(rest);
      };
      CHECK(depad_one(induce(a, b, n0)) == depad_one(induce(a, b, n0 + 1)));
    }
  }
}

TEST_CASE("invariant dimensions") {
  // a transitive permutation module has a one-dimensional fixed space
  for (std::int64_t pv : {2, 3}) {
    CHECK(invariants_dim(SubquotientDesc::whole(Partition({3, 1})), Prime(pv)) == 1);
    CHECK(invariants_dim(SubquotientDesc::whole(Partition({6})), Prime(pv)) == 1);
  }

  // quotient by the image of the sum map
  for (int n : {4, 5, 6, 7, 8}) {
    ConcreteMap sum_n = build_cl_matrix(instantiate(kSum, n));
    std::int64_t inv = invariants_dim(SubquotientDesc::cokernel(sum_n), Prime(2));
    CHECK(inv == (n % 2 == 0 ? 1 : 0));
    CHECK(subquotient_dim(SubquotientDesc::cokernel(sum_n), Prime(2)) == n - 1);
  }

  // zero module: kernel of an injective map
  ConcreteMap id4 = build_cl_matrix(instantiate(StableTabloid::identity(Partition({1})), 4));
  CHECK(subquotient_dim(SubquotientDesc::kernel(id4), Prime(2)) == 0);
  CHECK(invariants_dim(SubquotientDesc::kernel(id4), Prime(2)) == 0);
}
