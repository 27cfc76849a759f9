#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "syllog/rational.hpp"

namespace syllog {

struct Term {
  std::string name;
  std::size_t index = 0;

  friend bool operator==(const Term&, const Term&) = default;
};

// A term held true (positive) or false (negated).
struct Literal {
  std::size_t term = 0;
  bool positive = true;

  friend bool operator==(const Literal&, const Literal&) = default;
  Literal negated() const { return {term, !positive}; }
};

// Affine function of the joint-probability parameters, exact coefficients.
struct LinearForm {
  Rational constant;
  std::vector<Rational> coeffs;

  explicit LinearForm(std::size_t dimension = 0)
      : constant(0), coeffs(dimension, Rational(0)) {}

  std::size_t dimension() const { return coeffs.size(); }

  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

inline void require_same_dimension(const LinearForm& a, const LinearForm& b) {
  if (a.dimension() != b.dimension()) {
    throw std::invalid_argument("linear form dimension mismatch");
  }
}

inline LinearForm add(const LinearForm& a, const LinearForm& b) {
  require_same_dimension(a, b);
  LinearForm out(a.dimension());
  out.constant = a.constant + b.constant;
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    out.coeffs[i] = a.coeffs[i] + b.coeffs[i];
  }
  return out;
}

inline LinearForm subtract(const LinearForm& a, const LinearForm& b) {
  require_same_dimension(a, b);
  LinearForm out(a.dimension());
  out.constant = a.constant - b.constant;
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    out.coeffs[i] = a.coeffs[i] - b.coeffs[i];
  }
  return out;
}

inline LinearForm scale(const LinearForm& a, const Rational& factor) {
  LinearForm out(a.dimension());
  out.constant = a.constant * factor;
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    out.coeffs[i] = a.coeffs[i] * factor;
  }
  return out;
}

inline bool is_zero(const LinearForm& f) {
  if (f.constant != 0) return false;
  return std::all_of(f.coeffs.begin(), f.coeffs.end(),
                     [](const Rational& c) { return c == 0; });
}

// One exact value per parameter; entries in [0,1] summing to 1.
struct ModelPoint {
  std::vector<Rational> values;

  friend bool operator==(const ModelPoint&, const ModelPoint&) = default;
};

inline ModelPoint make_model_point(std::vector<Rational> values) {
  Rational sum(0);
  for (const Rational& v : values) {
    if (v < 0 || v > 1) {
      throw std::invalid_argument("model point value outside [0,1]");
    }
    sum += v;
  }
  if (sum != 1) {
    throw std::invalid_argument("model point values must sum to 1");
  }
  return ModelPoint{std::move(values)};
}

inline Rational eval(const LinearForm& form, const ModelPoint& point) {
  if (form.dimension() != point.values.size()) {
    throw std::invalid_argument("form/point dimension mismatch");
  }
  Rational acc = form.constant;
  for (std::size_t i = 0; i < form.dimension(); ++i) {
    acc += form.coeffs[i] * point.values[i];
  }
  return acc;
}

// Joint-probability model over n boolean terms, one parameter per full truth
// assignment. Parameter ordering: first term most significant, T before F,
// so for (A,B,C) the assignment TTT is x1 and FFF is x8.
class Model {
 public:
  static constexpr std::size_t kMaxTerms = 10;

  explicit Model(const std::vector<std::string>& names) {
    if (names.empty() || names.size() > kMaxTerms) {
      throw std::invalid_argument("term count must be between 1 and 10");
    }
    std::set<std::string> seen;
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (!seen.insert(names[i]).second) {
        throw std::invalid_argument("duplicate term name: " + names[i]);
      }
      terms_.push_back(Term{names[i], i});
    }
  }

  std::size_t term_count() const { return terms_.size(); }
  std::size_t parameter_count() const { return std::size_t{1} << terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& term(std::size_t i) const { return terms_.at(i); }

  std::optional<std::size_t> find_term(const std::string& name) const {
    for (const Term& t : terms_) {
      if (t.name == name) return t.index;
    }
    return std::nullopt;
  }

  Literal literal(const std::string& name, bool positive = true) const {
    auto idx = find_term(name);
    if (!idx) throw std::invalid_argument("unknown term: " + name);
    return Literal{*idx, positive};
  }

  // Parameter index of a full truth assignment (one value per term).
  std::size_t parameter_index(const std::vector<bool>& assignment) const {
    if (assignment.size() != terms_.size()) {
      throw std::invalid_argument("assignment must value every term");
    }
    std::size_t idx = 0;
    for (std::size_t i = 0; i < assignment.size(); ++i) {
      idx = (idx << 1) | (assignment[i] ? 0u : 1u);
    }
    return idx;
  }

  // Truth value of a term within the assignment encoded by parameter index.
  bool assignment_value(std::size_t param_index, std::size_t term) const {
    std::size_t shift = terms_.size() - 1 - term;
    return ((param_index >> shift) & 1u) == 0;
  }

  // P(event): sum of parameters consistent with every literal. Empty event
  // gives the normalization sum.
  LinearForm prob_of_event(const std::vector<Literal>& literals) const {
    std::vector<int> required(terms_.size(), -1);
    for (const Literal& lit : literals) {
      if (lit.term >= terms_.size()) {
        throw std::invalid_argument("literal refers to unknown term");
      }
      if (required[lit.term] != -1) {
        throw std::invalid_argument("two literals on the same term");
      }
      required[lit.term] = lit.positive ? 1 : 0;
    }
    LinearForm form(parameter_count());
    for (std::size_t p = 0; p < parameter_count(); ++p) {
      bool consistent = true;
      for (std::size_t t = 0; t < terms_.size() && consistent; ++t) {
        if (required[t] != -1 &&
            assignment_value(p, t) != (required[t] == 1)) {
          consistent = false;
        }
      }
      if (consistent) form.coeffs[p] = 1;
    }
    return form;
  }

  LinearForm normalization_form() const { return prob_of_event({}); }

  // Uniform distribution, handy in tests.
  ModelPoint uniform_point() const {
    std::size_t n = parameter_count();
    return make_model_point(
        std::vector<Rational>(n, Rational(1) / Rational(n)));
  }

  std::string literal_name(const Literal& lit) const {
    return (lit.positive ? "" : "~") + terms_.at(lit.term).name;
  }

 private:
  std::vector<Term> terms_;
};

inline Model build_model(const std::vector<std::string>& names) {
  return Model(names);
}

// Renders a form in the paper-style x-notation: "x1 + x2 - x5".
inline std::string to_string(const LinearForm& form) {
  std::ostringstream os;
  bool first = true;
  if (form.constant != 0) {
    os << form.constant;
    first = false;
  }
  for (std::size_t i = 0; i < form.dimension(); ++i) {
    const Rational& c = form.coeffs[i];
    if (c == 0) continue;
    if (first) {
      if (c == -1) {
        os << "-";
      } else if (c != 1) {
        os << c << "*";
      }
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
      Rational mag = abs(c);
      if (mag != 1) os << mag << "*";
    }
    os << "x" << (i + 1);
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace syllog
