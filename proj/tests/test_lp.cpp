#include <doctest.h>

#include <random>
#include <vector>

#include "syllog/lp.hpp"
#include "syllog/model.hpp"
#include "syllog/statements.hpp"
#include "test_helpers.hpp"

using namespace syllog;

namespace {

LinearForm params(const Model& m, std::initializer_list<int> indices) {
  LinearForm f(m.parameter_count());
  for (int i : indices) f.coeffs[static_cast<std::size_t>(i - 1)] = 1;
  return f;
}

// The worked example: premises BeA (x1+x2=0) and BiC (x1+x5>0).
std::vector<Constraint> worked_premises(const Model& m) {
  return {{params(m, {1, 2}), Constraint::Kind::EqZero},
          {params(m, {1, 5}), Constraint::Kind::GtZero}};
}

ModelPoint witness_point(const LpOutcome& out) {
  return make_model_point(out.witness);
}

// Random premise-style LP: a few equalities/inequalities over random
// parameter subsets, objective a random subset sum.
LpProblem random_problem(const Model& m, std::mt19937_64& rng,
                         const Epsilon& eps) {
  std::uniform_int_distribution<unsigned> mask(1, 255);
  std::uniform_int_distribution<int> n_constraints(0, 3);
  std::uniform_int_distribution<int> kind(0, 1);
  std::uniform_int_distribution<int> sense(0, 1);
  std::vector<Constraint> premises;
  int k = n_constraints(rng);
  for (int c = 0; c < k; ++c) {
    LinearForm f(m.parameter_count());
    unsigned bits = mask(rng);
    for (std::size_t i = 0; i < 8; ++i) {
      if ((bits >> i) & 1u) f.coeffs[i] = 1;
    }
    premises.push_back({f, kind(rng) == 0 ? Constraint::Kind::EqZero
                                          : Constraint::Kind::GtZero});
  }
  LinearForm objective(m.parameter_count());
  unsigned bits = mask(rng);
  for (std::size_t i = 0; i < 8; ++i) {
    if ((bits >> i) & 1u) objective.coeffs[i] = 1;
  }
  return make_problem(objective, sense(rng) == 0 ? Sense::Min : Sense::Max,
                      premises, eps);
}

}  // namespace

TEST_CASE("epsilon validation") {
  CHECK(Epsilon::standard().value == Rational(1, 100));
  CHECK_THROWS_AS(Epsilon(Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(Epsilon(Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(Epsilon(Rational(-1, 2)), std::invalid_argument);
  CHECK(Epsilon(Rational(1, 1000)).value == Rational(1, 1000));
}

TEST_CASE("reformulate weakens strict rows and appends the simplex box") {
  Model m({"A", "B", "C"});
  Epsilon eps = Epsilon::standard();
  auto rows = reformulate(worked_premises(m), eps, 8);
  // 2 premises + normalization + 8 lower + 8 upper bounds.
  REQUIRE(rows.size() == 19);
  CHECK(rows[0].kind == LpRow::Kind::Eq);
  CHECK(rows[0].rhs == 0);
  CHECK(rows[1].kind == LpRow::Kind::Ge);
  CHECK(rows[1].rhs == eps.value);
  CHECK(rows[1].form == params(m, {1, 5}));
  CHECK(rows[2].kind == LpRow::Kind::Eq);
  CHECK(rows[2].rhs == 1);
  CHECK(rows[2].form == m.normalization_form());
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(rows[3 + 2 * i].kind == LpRow::Kind::Ge);
    CHECK(rows[3 + 2 * i].rhs == 0);
    CHECK(rows[4 + 2 * i].kind == LpRow::Kind::Le);
    CHECK(rows[4 + 2 * i].rhs == 1);
    CHECK(rows[3 + 2 * i].form == params(m, {static_cast<int>(i) + 1}));
  }
}

TEST_CASE("the worked optimization pair") {
  Model m({"A", "B", "C"});
  Epsilon eps = Epsilon::standard();
  LinearForm objective = params(m, {5, 7});  // P(C,~A)

  LpOutcome lo = solve(make_problem(objective, Sense::Min, worked_premises(m),
                                    eps));
  REQUIRE(lo.status == LpStatus::Optimal);
  CHECK(lo.value == Rational(1, 100));

  LpOutcome hi = solve(make_problem(objective, Sense::Max, worked_premises(m),
                                    eps));
  REQUIRE(hi.status == LpStatus::Optimal);
  CHECK(hi.value == Rational(1));

  // Witnesses are genuine model points achieving the reported values.
  CHECK(eval(objective, witness_point(lo)) == lo.value);
  CHECK(eval(objective, witness_point(hi)) == hi.value);
  for (const Constraint& c : worked_premises(m)) {
    CHECK(eval(c.form, witness_point(lo)) >=
          (c.kind == Constraint::Kind::GtZero ? eps.value : Rational(0)));
  }
}

TEST_CASE("single-coordinate objectives over the bare simplex") {
  Model m({"A", "B", "C"});
  Epsilon eps = Epsilon::standard();
  LinearForm x1 = params(m, {1});
  LpOutcome lo = solve(make_problem(x1, Sense::Min, {}, eps));
  LpOutcome hi = solve(make_problem(x1, Sense::Max, {}, eps));
  REQUIRE(lo.status == LpStatus::Optimal);
  REQUIRE(hi.status == LpStatus::Optimal);
  CHECK(lo.value == 0);
  CHECK(hi.value == 1);
}

TEST_CASE("contradictory premises are reported infeasible") {
  Model m({"A", "B", "C"});
  std::vector<Constraint> premises = {
      {params(m, {1, 2}), Constraint::Kind::EqZero},
      {params(m, {1, 2}), Constraint::Kind::GtZero}};
  LpOutcome out = solve(
      make_problem(params(m, {1}), Sense::Min, premises, Epsilon::standard()));
  CHECK(out.status == LpStatus::Infeasible);
  CHECK(out.witness.empty());

  // The degenerate 0 > 0 constraint is likewise infeasible.
  std::vector<Constraint> zero = {
      {LinearForm(8), Constraint::Kind::GtZero}};
  CHECK(solve(make_problem(params(m, {1}), Sense::Max, zero,
                           Epsilon::standard()))
            .status == LpStatus::Infeasible);
}

TEST_CASE("vertex oracle agrees on the worked example") {
  Model m({"A", "B", "C"});
  Epsilon eps = Epsilon::standard();
  LinearForm objective = params(m, {5, 7});
  for (Sense sense : {Sense::Min, Sense::Max}) {
    LpProblem p = make_problem(objective, sense, worked_premises(m), eps);
    LpOutcome simplex = solve(p);
    LpOutcome oracle = vertex_oracle(p);
    REQUIRE(simplex.status == LpStatus::Optimal);
    REQUIRE(oracle.status == LpStatus::Optimal);
    CHECK(simplex.value == oracle.value);
  }
}

TEST_CASE("simplex matches the vertex oracle on random problems") {
  Model m({"A", "B", "C"});
  Epsilon eps = Epsilon::standard();
  std::mt19937_64 rng(2024);
  for (int iter = 0; iter < 60; ++iter) {
    LpProblem p = random_problem(m, rng, eps);
    LpOutcome simplex = solve(p);
    LpOutcome oracle = vertex_oracle(p);
    REQUIRE(simplex.status == oracle.status);
    if (simplex.status == LpStatus::Optimal) {
      CHECK(simplex.value == oracle.value);
    }
  }
}

TEST_CASE("minimum never exceeds maximum") {
  Model m({"A", "B", "C"});
  Epsilon eps = Epsilon::standard();
  std::mt19937_64 rng(5150);
  for (int iter = 0; iter < 40; ++iter) {
    LpProblem p = random_problem(m, rng, eps);
    LpProblem q = p;
    p.sense = Sense::Min;
    q.sense = Sense::Max;
    LpOutcome lo = solve(p);
    LpOutcome hi = solve(q);
    REQUIRE(lo.status == hi.status);
    if (lo.status == LpStatus::Optimal) {
      CHECK(lo.value <= hi.value);
      CHECK(lo.value >= 0);  // subset-sum objectives over probabilities
      CHECK(hi.value <= 1);
    }
  }
}

TEST_CASE("solve is deterministic, including the witness") {
  Model m({"A", "B", "C"});
  Epsilon eps = Epsilon::standard();
  LpProblem p =
      make_problem(params(m, {5, 7}), Sense::Min, worked_premises(m), eps);
  LpOutcome first = solve(p);
  for (int rep = 0; rep < 3; ++rep) {
    LpOutcome again = solve(p);
    CHECK(again.value == first.value);
    CHECK(again.witness == first.witness);
  }
}

TEST_CASE("scaling a premise leaves status and optimum unchanged") {
  Model m({"A", "B", "C"});
  Epsilon eps = Epsilon::standard();
  std::vector<Constraint> scaled = worked_premises(m);
  scaled[0].form = scale(scaled[0].form, Rational(7, 3));
  // Scaling an equality-with-zero keeps the same feasible set.
  LpOutcome base = solve(
      make_problem(params(m, {5, 7}), Sense::Min, worked_premises(m), eps));
  LpOutcome alt =
      solve(make_problem(params(m, {5, 7}), Sense::Min, scaled, eps));
  CHECK(base.status == alt.status);
  CHECK(base.value == alt.value);
}
