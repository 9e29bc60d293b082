#include <doctest.h>

#include "sepstates/majorization.hpp"

using namespace sepstates;

namespace {

PureState from_weights(std::initializer_list<double> w, int da = 0) {
  RVec v(static_cast<Eigen::Index>(w.size()));
  int i = 0;
  for (double x : w) v(i++) = x;
  const int d = da > 0 ? da : static_cast<int>(w.size());
  return state_from_schmidt(v, d, d);
}

}  // namespace

TEST_CASE("check_ensemble_majorization: worked arithmetic example") {
  const PureState source = from_weights({0.5, 0.5});
  Ensemble ens;
  ens.outcomes.emplace_back(0.5, from_weights({0.2, 0.8}));
  ens.outcomes.emplace_back(0.5, from_weights({0.4, 0.6}));
  const MajorizationReport rep = check_ensemble_majorization(source, ens);
  REQUIRE(rep.n_values.size() == 2);
  CHECK(rep.n_values[0].lhs == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(rep.n_values[0].rhs == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(rep.n_values[1].lhs == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rep.verdict);
}

TEST_CASE("check_ensemble_majorization: identity ensemble has zero slack") {
  const PureState s = from_weights({0.3, 0.7});
  Ensemble ens;
  ens.outcomes.emplace_back(1.0, s);
  const MajorizationReport rep = check_ensemble_majorization(s, ens);
  for (const auto& e : rep.n_values) {
    CHECK(std::abs(e.slack) < 1e-10);
  }
  CHECK(rep.verdict);
}

TEST_CASE("check_ensemble_majorization: LOCC-produced ensembles always pass") {
  Rng rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const int da = rng.uniform_int(2, 4);
    const int db = rng.uniform_int(2, 4);
    const ProductKrausSet op =
        gen_separable_locc(da, db, rng.uniform_int(1, 2), 2, rng);
    const PureState s = random_pure_state(da, db, rng);
    const MajorizationReport rep =
        check_ensemble_majorization(s, apply_to_pure(op, s));
    CHECK(rep.verdict);
    CHECK(rep.min_slack >= -1e-9);
  }
}

TEST_CASE("can_transform_deterministic: qubit examples") {
  CHECK(can_transform_deterministic(from_weights({0.5, 0.5}),
                                    from_weights({0.3, 0.7}))
            .feasible);
  CHECK_FALSE(can_transform_deterministic(from_weights({0.3, 0.7}),
                                          from_weights({0.5, 0.5}))
                  .feasible);
}

TEST_CASE("can_transform_deterministic agrees with the singleton ensemble check") {
  Rng rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = rng.uniform_int(2, 4);
    const PureState s = random_pure_state(d, d, rng);
    const PureState t = random_pure_state(d, d, rng);
    Ensemble singleton;
    singleton.outcomes.emplace_back(1.0, t);
    CHECK(can_transform_deterministic(s, t).feasible ==
          check_ensemble_majorization(s, singleton).verdict);
  }
}

TEST_CASE("pmax_sep: arithmetic and edge conventions") {
  CHECK(pmax_sep(from_weights({0.2, 0.8}), from_weights({0.5, 0.5})) ==
        doctest::Approx(0.4).epsilon(1e-12));
  const PureState s = from_weights({0.3, 0.7});
  CHECK(pmax_sep(s, s) == doctest::Approx(1.0));
  // Entangled source, product target: measure and discard always works.
  CHECK(pmax_sep(from_weights({0.5, 0.5}), from_weights({0.0, 1.0})) ==
        doctest::Approx(1.0));
  // Source of deficient Schmidt rank cannot reach a fuller target.
  CHECK(pmax_sep(from_weights({0.0, 1.0}), from_weights({0.5, 0.5})) ==
        doctest::Approx(0.0));
}

TEST_CASE("pmax_sep: 1 exactly when deterministic transformation is feasible") {
  Rng rng(43);
  for (int trial = 0; trial < 50; ++trial) {
    const int d = rng.uniform_int(2, 3);
    const PureState s = random_pure_state(d, d, rng);
    const PureState t = random_pure_state(d, d, rng);
    const bool det = can_transform_deterministic(s, t).feasible;
    CHECK(det == (pmax_sep(s, t) >= 1.0 - 1e-9));
  }
}

TEST_CASE("pmax_sep: monotone under sources with dominating E_n") {
  // (0.5, 0.5) dominates (0.2, 0.8) entrywise in E_n.
  const PureState lo = from_weights({0.2, 0.8});
  const PureState hi = from_weights({0.5, 0.5});
  Rng rng(44);
  for (int trial = 0; trial < 20; ++trial) {
    const PureState t = random_pure_state(2, 2, rng);
    CHECK(pmax_sep(hi, t) >= pmax_sep(lo, t) - 1e-12);
  }
}

TEST_CASE("check_average_monotone: identity, infeasible, and entropy cases") {
  const PureState s = from_weights({0.5, 0.5});
  Ensemble identity;
  identity.outcomes.emplace_back(1.0, s);
  const MonotoneResult id = check_average_monotone(s, identity, Monotone::EnFamily);
  CHECK(id.holds);
  CHECK(std::abs(id.deficit) < 1e-10);

  // Claiming a Bell pair from a product state fails already at n = 1.
  const PureState prod = from_weights({0.0, 1.0});
  Ensemble cheat;
  cheat.outcomes.emplace_back(1.0, s);
  const MonotoneResult bad = check_average_monotone(prod, cheat, Monotone::EnFamily);
  CHECK_FALSE(bad.holds);
  CHECK(bad.deficit == doctest::Approx(-0.5).epsilon(1e-9));

  Rng rng(45);
  for (int trial = 0; trial < 20; ++trial) {
    const ProductKrausSet op = gen_separable_locc(3, 3, 2, 2, rng);
    const PureState psi = random_pure_state(3, 3, rng);
    const MonotoneResult mono =
        check_average_monotone(psi, apply_to_pure(op, psi), Monotone::Entropy);
    CHECK(mono.holds);
  }
}

TEST_CASE("verify_theorem2: identity and scaling give equality") {
  Rng rng(46);
  const PureState s = random_pure_state(3, 3, rng);
  std::vector<KrausPair> id{{CMat::Identity(3, 3), CMat::Identity(3, 3)}};
  const Theorem2Report rep = verify_theorem2(id, s);
  CHECK(rep.holds);
  for (int n = 0; n < 3; ++n) {
    CHECK(rep.lhs[n] == doctest::Approx(rep.rhs[n]).epsilon(1e-9));
  }

  std::vector<KrausPair> scaled{{2.0 * CMat::Identity(3, 3), CMat::Identity(3, 3)}};
  const Theorem2Report rep2 = verify_theorem2(scaled, s);
  CHECK(compute_r(scaled).norm == doctest::Approx(4.0));
  for (int n = 0; n < 3; ++n) {
    CHECK(rep2.lhs[n] == doctest::Approx(rep2.rhs[n]).epsilon(1e-9));
  }
}

TEST_CASE("verify_theorem2: random product collections never violate") {
  Rng rng(47);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = rng.uniform_int(2, 4);
    const int n_ops = rng.uniform_int(1, 6);
    const auto pairs = gen_random_product_collection(d, d, n_ops, 0.8, rng);
    const PureState s = random_pure_state(d, d, rng);
    const Theorem2Report rep = verify_theorem2(pairs, s);
    CHECK(rep.holds);
  }
}

TEST_CASE("verify_theorem2: closed sets reproduce the ensemble sum at norm 1") {
  Rng rng(48);
  for (int trial = 0; trial < 10; ++trial) {
    const ProductKrausSet op = gen_separable_locc(3, 3, 2, 2, rng);
    const PureState s = random_pure_state(3, 3, rng);
    CHECK(compute_r(op.pairs).norm == doctest::Approx(1.0).epsilon(1e-9));
    const Theorem2Report rep = verify_theorem2(op.pairs, s);
    const Ensemble ens = apply_to_pure(op, s, 0.0);
    for (int n = 1; n <= 3; ++n) {
      double expected = 0.0;
      for (const auto& [p, phi] : ens.outcomes) {
        expected += p * e_n_vector(phi)(n - 1);
      }
      CHECK(rep.lhs[n - 1] == doctest::Approx(expected).epsilon(1e-9));
    }
  }
}

TEST_CASE("verify_lemma1: equality cases") {
  RVec half(2);
  half << std::sqrt(0.5), std::sqrt(0.5);
  const Lemma1Report rep =
      verify_lemma1(CMat::Identity(2, 2), CMat::Identity(2, 2), half, 1);
  CHECK(rep.lhs == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(rep.rhs == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(rep.holds);

  Rng rng(49);
  const int d = 3;
  RVec diag(d);
  for (int i = 0; i < d; ++i) diag(i) = rng.uniform();
  std::sort(diag.begin(), diag.end());
  const CMat a = ginibre(d, d, 1.0, rng);
  const CMat b = ginibre(d, d, 1.0, rng);
  const Lemma1Report full = verify_lemma1(a, b, diag, d);
  // n = D: chi_D is the full trace and psi_D = psi.
  CHECK(full.lhs == doctest::Approx(full.rhs).epsilon(1e-9));
  CHECK(full.holds);
}

TEST_CASE("verify_lemma1: random instances satisfy lhs <= chain <= rhs") {
  Rng rng(50);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = rng.uniform_int(2, 5);
    RVec diag(d);
    for (int i = 0; i < d; ++i) diag(i) = rng.uniform();
    std::sort(diag.begin(), diag.end());
    diag /= diag.sum();
    const int n = rng.uniform_int(1, d);
    const CMat a = ginibre(d, d, 1.0 / std::sqrt(d), rng);
    const CMat b = ginibre(d, d, 1.0 / std::sqrt(d), rng);
    const Lemma1Report rep = verify_lemma1(a, b, diag, n);
    CHECK(rep.holds);
    CHECK(rep.projector_rank >= n);
    CHECK(rep.projector_idempotency <= 1e-10);
    CHECK(rep.annihilation <= 1e-10);
  }
}

TEST_CASE("verify_lemma1: rejects non-ascending diagonal") {
  RVec bad(2);
  bad << 0.8, 0.2;
  CHECK_THROWS_AS(
      verify_lemma1(CMat::Identity(2, 2), CMat::Identity(2, 2), bad, 1),
      invalid_input);
}
