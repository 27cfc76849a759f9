#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "syllog/model.hpp"

namespace syllog {

// The seven composite relation codes, in table order: a, á, e, é, i, o, u.
enum class Relation : std::uint8_t {
  UniversalAffirmative = 0,       // a
  UniversalAffirmativeExist = 1,  // á
  UniversalNegative = 2,          // e
  UniversalNegativeExist = 3,     // é
  ParticularAffirmative = 4,      // i
  ParticularNegative = 5,         // o
  ParticularIntermediate = 6,     // u
};

inline constexpr std::array<Relation, 7> kRelationOrder = {
    Relation::UniversalAffirmative,      Relation::UniversalAffirmativeExist,
    Relation::UniversalNegative,         Relation::UniversalNegativeExist,
    Relation::ParticularAffirmative,     Relation::ParticularNegative,
    Relation::ParticularIntermediate,
};

// Order in which members of a deduction set are displayed: the existential
// universal precedes its material counterpart, as in "á, a, i".
inline constexpr std::array<Relation, 7> kDisplayOrder = {
    Relation::UniversalAffirmativeExist, Relation::UniversalAffirmative,
    Relation::UniversalNegativeExist,    Relation::UniversalNegative,
    Relation::ParticularAffirmative,     Relation::ParticularNegative,
    Relation::ParticularIntermediate,
};

inline std::string relation_code(Relation r) {
  switch (r) {
    case Relation::UniversalAffirmative: return "a";
    case Relation::UniversalAffirmativeExist: return "\xC3\xA1";  // á
    case Relation::UniversalNegative: return "e";
    case Relation::UniversalNegativeExist: return "\xC3\xA9";  // é
    case Relation::ParticularAffirmative: return "i";
    case Relation::ParticularNegative: return "o";
    case Relation::ParticularIntermediate: return "u";
  }
  throw std::logic_error("bad relation");
}

inline std::string relation_code_ascii(Relation r) {
  switch (r) {
    case Relation::UniversalAffirmativeExist: return "a+";
    case Relation::UniversalNegativeExist: return "e+";
    default: return relation_code(r);
  }
}

// Small set of relation codes.
class RelationSet {
 public:
  RelationSet() = default;

  bool contains(Relation r) const {
    return (bits_ >> static_cast<unsigned>(r)) & 1u;
  }
  void insert(Relation r) { bits_ |= 1u << static_cast<unsigned>(r); }
  bool empty() const { return bits_ == 0; }
  std::size_t size() const {
    std::size_t n = 0;
    for (Relation r : kRelationOrder) n += contains(r) ? 1 : 0;
    return n;
  }

  // Members in display order.
  std::vector<Relation> members() const {
    std::vector<Relation> out;
    for (Relation r : kDisplayOrder) {
      if (contains(r)) out.push_back(r);
    }
    return out;
  }

  std::string joined(const std::string& sep, bool ascii = false) const {
    std::string out;
    for (Relation r : members()) {
      if (!out.empty()) out += sep;
      out += ascii ? relation_code_ascii(r) : relation_code(r);
    }
    return out;
  }

  friend bool operator==(const RelationSet&, const RelationSet&) = default;

  static RelationSet of(std::initializer_list<Relation> rs) {
    RelationSet s;
    for (Relation r : rs) s.insert(r);
    return s;
  }

 private:
  std::uint8_t bits_ = 0;
};

// The four mutually exclusive, exhaustive primary relations for (P,Q).
enum class PrimaryRelation : std::uint8_t {
  ImpossibleSubject = 0,              // P(Q) = 0
  UniversalAffirmativeExistential,    // P(P,Q) = P(Q) > 0
  UniversalNegativeExistential,       // P(P,Q) = 0, P(Q) > 0
  ParticularIntermediate,             // 0 < P(P,Q) < P(Q)
};

// Which primary relations each composite relation is a disjunction of.
inline std::vector<PrimaryRelation> composite_definition(Relation code) {
  using P = PrimaryRelation;
  switch (code) {
    case Relation::UniversalAffirmative:
      return {P::ImpossibleSubject, P::UniversalAffirmativeExistential};
    case Relation::UniversalAffirmativeExist:
      return {P::UniversalAffirmativeExistential};
    case Relation::UniversalNegative:
      return {P::ImpossibleSubject, P::UniversalNegativeExistential};
    case Relation::UniversalNegativeExist:
      return {P::UniversalNegativeExistential};
    case Relation::ParticularAffirmative:
      return {P::UniversalAffirmativeExistential, P::ParticularIntermediate};
    case Relation::ParticularNegative:
      return {P::UniversalNegativeExistential, P::ParticularIntermediate};
    case Relation::ParticularIntermediate:
      return {P::ParticularIntermediate};
  }
  throw std::logic_error("bad relation");
}

// Predicate-first: AaB means predicate A, subject B.
struct CategoricalStatement {
  Literal predicate;
  Literal subject;
  Relation relation = Relation::UniversalAffirmative;

  friend bool operator==(const CategoricalStatement&,
                         const CategoricalStatement&) = default;
};

struct Constraint {
  enum class Kind { EqZero, GtZero };
  LinearForm form;
  Kind kind = Kind::EqZero;

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

// P(subject & predicate) as a linear form. Handles the degenerate case of
// both literals naming one term: identical literals collapse to the single
// event, opposite literals give the impossible event (zero form).
inline LinearForm joint_probability(const Model& model, const Literal& subject,
                                    const Literal& predicate) {
  if (subject.term == predicate.term) {
    if (subject.positive == predicate.positive) {
      return model.prob_of_event({subject});
    }
    return LinearForm(model.parameter_count());
  }
  return model.prob_of_event({subject, predicate});
}

// Compiles a categorical statement into constraints on the parameters.
// With J = P(subject,predicate) and S = P(subject):
//   a: S-J = 0        á: S-J = 0, S > 0
//   e: J = 0          é: J = 0, S > 0
//   i: J > 0          o: S-J > 0        u: J > 0, S-J > 0
inline std::vector<Constraint> translate(const Model& model,
                                         const CategoricalStatement& stmt) {
  LinearForm joint = joint_probability(model, stmt.subject, stmt.predicate);
  LinearForm subj = model.prob_of_event({stmt.subject});
  LinearForm rest = subtract(subj, joint);  // P(subject & not-predicate)
  using K = Constraint::Kind;
  switch (stmt.relation) {
    case Relation::UniversalAffirmative:
      return {{rest, K::EqZero}};
    case Relation::UniversalAffirmativeExist:
      return {{rest, K::EqZero}, {subj, K::GtZero}};
    case Relation::UniversalNegative:
      return {{joint, K::EqZero}};
    case Relation::UniversalNegativeExist:
      return {{joint, K::EqZero}, {subj, K::GtZero}};
    case Relation::ParticularAffirmative:
      return {{joint, K::GtZero}};
    case Relation::ParticularNegative:
      return {{rest, K::GtZero}};
    case Relation::ParticularIntermediate:
      return {{joint, K::GtZero}, {rest, K::GtZero}};
  }
  throw std::logic_error("bad relation");
}

// Which primary relation holds for (predicate, subject) at the point.
inline PrimaryRelation primary_relation_at(const Model& model,
                                           const Literal& predicate,
                                           const Literal& subject,
                                           const ModelPoint& point) {
  Rational pq = eval(joint_probability(model, subject, predicate), point);
  Rational q = eval(model.prob_of_event({subject}), point);
  if (q == 0) return PrimaryRelation::ImpossibleSubject;
  if (pq == q) return PrimaryRelation::UniversalAffirmativeExistential;
  if (pq == 0) return PrimaryRelation::UniversalNegativeExistential;
  return PrimaryRelation::ParticularIntermediate;
}

// Semantic truth of the statement at the point, straight from the primary
// relation definitions. Independent of translate(); used as its oracle.
inline bool holds(const Model& model, const CategoricalStatement& stmt,
                  const ModelPoint& point) {
  PrimaryRelation actual =
      primary_relation_at(model, stmt.predicate, stmt.subject, point);
  for (PrimaryRelation p : composite_definition(stmt.relation)) {
    if (p == actual) return true;
  }
  return false;
}

inline bool satisfies(const Constraint& c, const ModelPoint& point) {
  Rational v = eval(c.form, point);
  return c.kind == Constraint::Kind::EqZero ? v == 0 : v > 0;
}

// --- statement grammar -----------------------------------------------------
//
//   statement := literal code literal
//   literal   := '~'? name            name := [A-Z][A-Z0-9_]*
//   code      := 'a' | 'á' | 'a+' | 'e' | 'é' | 'e+' | 'i' | 'o' | 'u'
//
// Predicate first, subject second, matching the AaB convention.

namespace detail {

inline Literal parse_literal(const Model& model, std::string_view text,
                             std::size_t& pos) {
  bool positive = true;
  if (pos < text.size() && text[pos] == '~') {
    positive = false;
    ++pos;
  }
  std::size_t start = pos;
  if (pos >= text.size() || text[pos] < 'A' || text[pos] > 'Z') {
    throw std::invalid_argument("malformed literal in '" + std::string(text) +
                                "'");
  }
  ++pos;
  while (pos < text.size() &&
         ((text[pos] >= 'A' && text[pos] <= 'Z') ||
          (text[pos] >= '0' && text[pos] <= '9') || text[pos] == '_')) {
    ++pos;
  }
  std::string name(text.substr(start, pos - start));
  auto idx = model.find_term(name);
  if (!idx) throw std::invalid_argument("unknown term: " + name);
  return Literal{*idx, positive};
}

// Returns nullopt for the query placeholder '?'.
inline std::optional<Relation> parse_code(std::string_view text,
                                          std::size_t& pos,
                                          bool allow_placeholder) {
  if (pos >= text.size()) {
    throw std::invalid_argument("missing relation code in '" +
                                std::string(text) + "'");
  }
  if (allow_placeholder && text[pos] == '?') {
    ++pos;
    return std::nullopt;
  }
  // UTF-8 accented forms.
  if (pos + 1 < text.size() && static_cast<unsigned char>(text[pos]) == 0xC3) {
    unsigned char second = static_cast<unsigned char>(text[pos + 1]);
    pos += 2;
    if (second == 0xA1) return Relation::UniversalAffirmativeExist;
    if (second == 0xA9) return Relation::UniversalNegativeExist;
    throw std::invalid_argument("unknown relation code in '" +
                                std::string(text) + "'");
  }
  char c = text[pos];
  ++pos;
  bool plus = pos < text.size() && text[pos] == '+';
  switch (c) {
    case 'a':
      if (plus) { ++pos; return Relation::UniversalAffirmativeExist; }
      return Relation::UniversalAffirmative;
    case 'e':
      if (plus) { ++pos; return Relation::UniversalNegativeExist; }
      return Relation::UniversalNegative;
    case 'i': return Relation::ParticularAffirmative;
    case 'o': return Relation::ParticularNegative;
    case 'u': return Relation::ParticularIntermediate;
    default:
      throw std::invalid_argument("unknown relation code in '" +
                                  std::string(text) + "'");
  }
}

}  // namespace detail

inline CategoricalStatement parse_statement(const Model& model,
                                            std::string_view text) {
  std::size_t pos = 0;
  Literal predicate = detail::parse_literal(model, text, pos);
  auto code = detail::parse_code(text, pos, /*allow_placeholder=*/false);
  Literal subject = detail::parse_literal(model, text, pos);
  if (pos != text.size()) {
    throw std::invalid_argument("trailing input in '" + std::string(text) +
                                "'");
  }
  return CategoricalStatement{predicate, subject, *code};
}

// Parses a query like "A?C": predicate and subject with a '?' placeholder.
inline std::pair<Literal, Literal> parse_query(const Model& model,
                                               std::string_view text) {
  std::size_t pos = 0;
  Literal predicate = detail::parse_literal(model, text, pos);
  auto code = detail::parse_code(text, pos, /*allow_placeholder=*/true);
  if (code.has_value()) {
    throw std::invalid_argument("query must use '?' for the relation code");
  }
  Literal subject = detail::parse_literal(model, text, pos);
  if (pos != text.size()) {
    throw std::invalid_argument("trailing input in '" + std::string(text) +
                                "'");
  }
  return {predicate, subject};
}

inline std::string format_statement(const Model& model,
                                    const CategoricalStatement& stmt) {
  return model.literal_name(stmt.predicate) + relation_code(stmt.relation) +
         model.literal_name(stmt.subject);
}

}  // namespace syllog
