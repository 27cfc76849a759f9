#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "syllog/deduce.hpp"
#include "syllog/model.hpp"
#include "syllog/statements.hpp"

namespace syllog {

// Which term is predicate/subject in each premise, per figure.
struct Figure {
  int id = 1;
  std::pair<char, char> major_shape;  // (predicate, subject)
  std::pair<char, char> minor_shape;
};

inline const Figure& figure(int id) {
  static const std::array<Figure, 4> kFigures = {{
      {1, {'A', 'B'}, {'B', 'C'}},
      {2, {'B', 'A'}, {'B', 'C'}},
      {3, {'A', 'B'}, {'C', 'B'}},
      {4, {'B', 'A'}, {'C', 'B'}},
  }};
  if (id < 1 || id > 4) throw std::invalid_argument("figure must be 1..4");
  return kFigures[static_cast<std::size_t>(id - 1)];
}

// The shared 3-term model of every figure problem.
inline const Model& standard_model() {
  static const Model model({"A", "B", "C"});
  return model;
}

struct Problem {
  int figure_id = 1;
  Relation major = Relation::UniversalAffirmative;
  Relation minor = Relation::UniversalAffirmative;
};

inline std::pair<CategoricalStatement, CategoricalStatement> premises_of(
    const Problem& problem) {
  const Model& m = standard_model();
  const Figure& fig = figure(problem.figure_id);
  auto lit = [&](char name) { return m.literal(std::string(1, name)); };
  CategoricalStatement major{lit(fig.major_shape.first),
                             lit(fig.major_shape.second), problem.major};
  CategoricalStatement minor{lit(fig.minor_shape.first),
                             lit(fig.minor_shape.second), problem.minor};
  return {major, minor};
}

struct ProblemResult {
  Problem problem;
  DeductionResult result;
};

// All 196 figure problems with the standard query (predicate A, subject C;
// the complementary reading negates C). Output order is fixed: figure, then
// major code, then minor code, in table order.
inline std::vector<ProblemResult> enumerate_all(const Epsilon& eps,
                                                unsigned jobs = 1) {
  const Model& model = standard_model();
  std::vector<Problem> problems;
  for (int fig = 1; fig <= 4; ++fig) {
    for (Relation major : kRelationOrder) {
      for (Relation minor : kRelationOrder) {
        problems.push_back(Problem{fig, major, minor});
      }
    }
  }
  std::vector<ProblemResult> results(problems.size());
  auto run_range = [&](std::size_t begin, std::size_t end) {
    Literal a = model.literal("A");
    Literal c = model.literal("C");
    for (std::size_t i = begin; i < end; ++i) {
      auto [major, minor] = premises_of(problems[i]);
      results[i] = ProblemResult{
          problems[i], deduce_general(model, {major, minor}, a, c, eps)};
    }
  };
  if (jobs <= 1) {
    run_range(0, problems.size());
  } else {
    std::vector<std::thread> workers;
    std::size_t chunk = (problems.size() + jobs - 1) / jobs;
    for (unsigned w = 0; w < jobs; ++w) {
      std::size_t begin = w * chunk;
      std::size_t end = std::min(problems.size(), begin + chunk);
      if (begin >= end) break;
      workers.emplace_back(run_range, begin, end);
    }
    for (std::thread& t : workers) t.join();
  }
  return results;
}

// --- golden result tables ---------------------------------------------------
//
// Transcription of the published 7x7 result grids, one classical and one
// complementary grid per figure. Cells use one character per deduced code,
// with 'A' and 'E' standing for the accented (existential) universals.
// Kept as shipped data, separate from the computed pipeline, so the
// self-test is a genuine cross-check.

struct GoldenCell {
  RelationSet classical;
  RelationSet complementary;
};

namespace detail {

using GoldenGrid = std::array<std::array<const char*, 7>, 7>;

inline const GoldenGrid& golden_classical(int fig) {
  static const GoldenGrid g1 = {{
      {"a", "Aai", "", "", "i", "", "i"},
      {"a", "Aai", "", "", "i", "", "i"},
      {"e", "Eeo", "", "", "o", "", "o"},
      {"e", "Eeo", "", "", "o", "", "o"},
      {"", "", "", "", "", "", ""},
      {"", "", "", "", "", "", ""},
      {"", "", "", "", "", "", ""},
  }};
  static const GoldenGrid g2 = {{
      {"", "", "e", "Eeo", "", "o", "o"},
      {"", "", "e", "Eeo", "", "o", "o"},
      {"e", "Eeo", "", "", "o", "", "o"},
      {"e", "Eeo", "", "", "o", "", "o"},
      {"", "", "", "", "", "", ""},
      {"", "", "", "", "", "", ""},
      {"", "", "", "", "", "", ""},
  }};
  static const GoldenGrid g3 = {{
      {"", "i", "", "", "i", "", "i"},
      {"i", "i", "", "", "i", "", "i"},
      {"", "o", "", "", "o", "", "o"},
      {"o", "o", "", "", "o", "", "o"},
      {"i", "i", "", "", "", "", ""},
      {"o", "o", "", "", "", "", ""},
      {"iou", "iou", "", "", "", "", ""},
  }};
  static const GoldenGrid g4 = {{
      {"", "", "e", "e", "", "", ""},
      {"i", "i", "e", "e", "", "", ""},
      {"", "o", "", "", "o", "", "o"},
      {"", "o", "", "", "o", "", "o"},
      {"i", "i", "", "", "", "", ""},
      {"", "", "", "", "", "", ""},
      {"i", "i", "", "", "", "", ""},
  }};
  switch (fig) {
    case 1: return g1;
    case 2: return g2;
    case 3: return g3;
    case 4: return g4;
  }
  throw std::invalid_argument("figure must be 1..4");
}

inline const GoldenGrid& golden_complementary(int fig) {
  static const GoldenGrid g1 = {{
      {"", "", "", "", "", "", ""},
      {"", "", "i", "i", "", "", ""},
      {"", "", "", "", "", "", ""},
      {"", "", "o", "o", "", "", ""},
      {"", "", "i", "i", "", "", ""},
      {"", "", "o", "o", "", "", ""},
      {"", "", "iou", "iou", "", "", ""},
  }};
  static const GoldenGrid g2 = {{
      {"", "", "", "", "", "", ""},
      {"", "", "i", "i", "", "", ""},
      {"", "", "", "", "", "", ""},
      {"i", "i", "", "", "", "", ""},
      {"", "", "i", "i", "", "", ""},
      {"i", "i", "", "", "", "", ""},
      {"i", "i", "i", "i", "", "", ""},
  }};
  static const GoldenGrid g3 = {{
      {"", "", "", "i", "", "i", "i"},
      {"", "", "i", "i", "", "i", "i"},
      {"", "", "", "o", "", "o", "o"},
      {"", "", "o", "o", "", "o", "o"},
      {"", "", "i", "i", "", "", ""},
      {"", "", "o", "o", "", "", ""},
      {"", "", "iou", "iou", "", "", ""},
  }};
  static const GoldenGrid g4 = {{
      {"e", "e", "", "", "", "", ""},
      {"e", "e", "i", "i", "", "", ""},
      {"", "", "", "o", "", "o", "o"},
      {"", "", "", "o", "", "o", "o"},
      {"", "", "i", "i", "", "", ""},
      {"", "", "", "", "", "", ""},
      {"", "", "i", "i", "", "", ""},
  }};
  switch (fig) {
    case 1: return g1;
    case 2: return g2;
    case 3: return g3;
    case 4: return g4;
  }
  throw std::invalid_argument("figure must be 1..4");
}

inline RelationSet parse_golden_cell(const char* cell) {
  RelationSet set;
  for (const char* p = cell; *p; ++p) {
    switch (*p) {
      case 'a': set.insert(Relation::UniversalAffirmative); break;
      case 'A': set.insert(Relation::UniversalAffirmativeExist); break;
      case 'e': set.insert(Relation::UniversalNegative); break;
      case 'E': set.insert(Relation::UniversalNegativeExist); break;
      case 'i': set.insert(Relation::ParticularAffirmative); break;
      case 'o': set.insert(Relation::ParticularNegative); break;
      case 'u': set.insert(Relation::ParticularIntermediate); break;
      default: throw std::logic_error("bad golden cell");
    }
  }
  return set;
}

}  // namespace detail

inline GoldenCell golden_cell(int fig, Relation major, Relation minor) {
  std::size_t row = static_cast<std::size_t>(major);
  std::size_t col = static_cast<std::size_t>(minor);
  return GoldenCell{
      detail::parse_golden_cell(detail::golden_classical(fig)[row][col]),
      detail::parse_golden_cell(detail::golden_complementary(fig)[row][col]),
  };
}

// --- mood labels and medieval names ------------------------------------------

struct MoodLabel {
  Relation major = Relation::UniversalAffirmative;
  Relation minor = Relation::UniversalAffirmative;
  Relation conclusion = Relation::UniversalAffirmative;
  int figure_id = 1;
  bool complementary = false;

  // "eio-2", complementary "iei-~1".
  std::string ascii() const {
    std::string out = relation_code_ascii(major) + relation_code_ascii(minor) +
                      relation_code_ascii(conclusion) + "-";
    if (complementary) out += "~";
    out += std::to_string(figure_id);
    return out;
  }

  // UTF-8 rendering: accented codes, combining overline on the figure
  // number of complementary moods.
  std::string text() const {
    std::string out = relation_code(major) + relation_code(minor) +
                      relation_code(conclusion) + "-" +
                      std::to_string(figure_id);
    if (complementary) out += "\xCC\x84";
    return out;
  }
};

namespace detail {

// De-accents a code for name lookup; the vowel keeps the accent flag.
inline char base_vowel(Relation r, bool& accented) {
  switch (r) {
    case Relation::UniversalAffirmative: accented = false; return 'a';
    case Relation::UniversalAffirmativeExist: accented = true; return 'a';
    case Relation::UniversalNegative: accented = false; return 'e';
    case Relation::UniversalNegativeExist: accented = true; return 'e';
    case Relation::ParticularAffirmative: accented = false; return 'i';
    case Relation::ParticularNegative: accented = false; return 'o';
    case Relation::ParticularIntermediate: accented = false; return 'u';
  }
  throw std::logic_error("bad relation");
}

inline const char* base_name(int fig, const std::string& mood) {
  struct Entry {
    int fig;
    const char* mood;
    const char* name;
  };
  static const Entry kNames[] = {
      {1, "aaa", "Barbara"},   {1, "aii", "Darii"},
      {1, "eae", "Celarent"},  {1, "eio", "Ferio"},
      {2, "aee", "Camestres"}, {2, "aoo", "Baroco"},
      {2, "eae", "Cesare"},    {2, "eio", "Festino"},
      {3, "aii", "Datisi"},    {3, "eio", "Ferison"},
      {3, "iai", "Disamis"},   {3, "oao", "Bocardo"},
      {3, "aai", "Darapti"},   {3, "eao", "Felapton"},
      {4, "aee", "Camenes"},   {4, "eio", "Fresison"},
      {4, "iai", "Dimaris"},   {4, "aai", "Bramantip"},
      {4, "eao", "Fesapo"},
  };
  for (const Entry& e : kNames) {
    if (e.fig == fig && mood == e.mood) return e.name;
  }
  return nullptr;
}

inline std::string accent_vowel(char v) {
  switch (v) {
    case 'a': return "\xC3\xA1";
    case 'e': return "\xC3\xA9";
    case 'i': return "\xC3\xAD";
    case 'o': return "\xC3\xB3";
    case 'u': return "\xC3\xBA";
  }
  return std::string(1, v);
}

}  // namespace detail

// Medieval name of a classical mood, when one exists. Accents on the mood's
// codes are copied onto the corresponding vowels of the name, so the mood
// with existential codes e-á-é in the first figure yields "Celárént".
inline std::optional<std::string> medieval_name(const MoodLabel& mood) {
  if (mood.complementary) return std::nullopt;
  bool acc[3];
  std::string base;
  base += detail::base_vowel(mood.major, acc[0]);
  base += detail::base_vowel(mood.minor, acc[1]);
  base += detail::base_vowel(mood.conclusion, acc[2]);
  const char* name = detail::base_name(mood.figure_id, base);
  if (name == nullptr) return std::nullopt;
  std::string out;
  std::size_t vowel = 0;
  for (const char* p = name; *p; ++p) {
    char lower = static_cast<char>(*p | 0x20);
    bool is_vowel = lower == 'a' || lower == 'e' || lower == 'i' ||
                    lower == 'o' || lower == 'u';
    if (is_vowel && vowel < 3 && acc[vowel]) {
      out += detail::accent_vowel(lower);
    } else {
      out += *p;
    }
    if (is_vowel) ++vowel;
  }
  return out;
}

}  // namespace syllog
