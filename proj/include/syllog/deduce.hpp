#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "syllog/lp.hpp"
#include "syllog/model.hpp"
#include "syllog/statements.hpp"

namespace syllog {

// Exact bounds on the four extreme-term joint probabilities, indexed
// j = 1..4 for P(C,A), P(C,~A), P(~C,A), P(~C,~A) in the standard problem
// (query subject C, predicate A).
struct BoundsProfile {
  std::array<Rational, 4> alpha;  // minima
  std::array<Rational, 4> beta;   // maxima

  friend bool operator==(const BoundsProfile&, const BoundsProfile&) = default;
};

// One solved optimization, retained for explanation output.
struct LpRecord {
  std::size_t objective_index = 0;  // 0..3, matching BoundsProfile
  Sense sense = Sense::Min;
  LinearForm objective;
  Rational value;
  ModelPoint witness;
};

struct DeductionResult {
  bool feasible = false;
  RelationSet classical;
  RelationSet complementary;
  BoundsProfile bounds;          // meaningful only when feasible
  std::vector<LpRecord> solves;  // the 8 LPs, in (j, Min/Max) order
};

// The four objective forms for a query (predicate, subject):
// j=1: P(subj,pred), j=2: P(subj,~pred), j=3: P(~subj,pred),
// j=4: P(~subj,~pred).
inline std::array<LinearForm, 4> objective_forms(const Model& model,
                                                 const Literal& predicate,
                                                 const Literal& subject) {
  return {
      joint_probability(model, subject, predicate),
      joint_probability(model, subject, predicate.negated()),
      joint_probability(model, subject.negated(), predicate),
      joint_probability(model, subject.negated(), predicate.negated()),
  };
}

// Standard query: A as predicate, C as subject over the (A,B,C) model.
inline std::array<LinearForm, 4> objective_forms(const Model& model) {
  return objective_forms(model, model.literal("A"), model.literal("C"));
}

struct BoundsComputation {
  std::optional<BoundsProfile> bounds;
  std::vector<LpRecord> solves;
};

inline BoundsComputation compute_bounds_for(
    const std::vector<Constraint>& premises,
    const std::array<LinearForm, 4>& objectives, const Epsilon& eps) {
  BoundsComputation out;
  BoundsProfile profile;
  for (std::size_t j = 0; j < 4; ++j) {
    for (Sense sense : {Sense::Min, Sense::Max}) {
      LpOutcome outcome =
          solve(make_problem(objectives[j], sense, premises, eps));
      if (outcome.status == LpStatus::Infeasible) {
        return out;  // bounds absent
      }
      (sense == Sense::Min ? profile.alpha : profile.beta)[j] = outcome.value;
      out.solves.push_back(LpRecord{j, sense, objectives[j], outcome.value,
                                    ModelPoint{outcome.witness}});
    }
  }
  out.bounds = profile;
  return out;
}

// Solves the 8 LPs for the standard (A,C) query.
inline std::optional<BoundsProfile> compute_bounds(
    const Model& model, const std::vector<Constraint>& premises,
    const Epsilon& eps) {
  return compute_bounds_for(premises, objective_forms(model), eps).bounds;
}

// Shared criteria schema of the two syllogism tables: zero tests are exact,
// positivity reads the computed minimum against the same epsilon used in the
// reformulation. `lo`/`hi` pick the (alpha,beta) pair for the affirmative
// and negated predicate respectively.
inline RelationSet apply_criteria(const Rational& alpha_pos,
                                  const Rational& beta_pos,
                                  const Rational& alpha_neg,
                                  const Rational& beta_neg,
                                  const Epsilon& eps) {
  bool pos_min = alpha_pos >= eps.value;  // P(subj,pred) > 0 is required
  bool neg_min = alpha_neg >= eps.value;  // P(subj,~pred) > 0 is required
  bool pos_max_zero = beta_pos == 0;      // P(subj,pred) = 0 is required
  bool neg_max_zero = beta_neg == 0;      // P(subj,~pred) = 0 is required
  RelationSet set;
  if (neg_max_zero) set.insert(Relation::UniversalAffirmative);
  if (pos_min && neg_max_zero) set.insert(Relation::UniversalAffirmativeExist);
  if (pos_max_zero) set.insert(Relation::UniversalNegative);
  if (pos_max_zero && neg_min) set.insert(Relation::UniversalNegativeExist);
  if (pos_min) set.insert(Relation::ParticularAffirmative);
  if (neg_min) set.insert(Relation::ParticularNegative);
  if (pos_min && neg_min) set.insert(Relation::ParticularIntermediate);
  return set;
}

inline RelationSet classical_deductions(const BoundsProfile& b,
                                        const Epsilon& eps) {
  return apply_criteria(b.alpha[0], b.beta[0], b.alpha[1], b.beta[1], eps);
}

inline RelationSet complementary_deductions(const BoundsProfile& b,
                                            const Epsilon& eps) {
  return apply_criteria(b.alpha[2], b.beta[2], b.alpha[3], b.beta[3], eps);
}

// Translates the premises, bounds the four query joints, and applies both
// criteria tables. Inconsistent premises yield feasible=false, empty sets.
inline DeductionResult deduce_general(
    const Model& model, const std::vector<CategoricalStatement>& premises,
    const Literal& query_predicate, const Literal& query_subject,
    const Epsilon& eps) {
  std::vector<Constraint> constraints;
  for (const CategoricalStatement& stmt : premises) {
    for (Constraint& c : translate(model, stmt)) {
      constraints.push_back(std::move(c));
    }
  }
  BoundsComputation computed = compute_bounds_for(
      constraints, objective_forms(model, query_predicate, query_subject),
      eps);
  DeductionResult result;
  result.solves = std::move(computed.solves);
  if (!computed.bounds) return result;
  result.feasible = true;
  result.bounds = *computed.bounds;
  result.classical = classical_deductions(result.bounds, eps);
  result.complementary = complementary_deductions(result.bounds, eps);
  return result;
}

}  // namespace syllog
