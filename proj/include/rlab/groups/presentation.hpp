#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "rlab/groups/word.hpp"

namespace rlab {

/// Finite presentation <generators | relators>. Relators are stored freely and
/// cyclically reduced; trivial relators are dropped.
class Presentation {
 public:
  Presentation() = default;
  Presentation(std::string name, std::vector<std::string> generators, std::vector<GroupWord> relators);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& generators() const { return gens_; }
  const std::vector<GroupWord>& relators() const { return rels_; }
  std::size_t rank() const { return gens_.size(); }

  /// Index of a generator symbol; throws std::invalid_argument when unknown.
  std::size_t generator_index(const std::string& gen) const;

  /// Letter encoding used by the enumerators: generator i is 2i, its inverse 2i+1.
  std::vector<int> encode(const GroupWord& w) const;
  GroupWord decode(const std::vector<int>& letters) const;
  /// Distinct cyclic rotations of all relators and their inverses, bucketed by first letter.
  std::vector<std::vector<std::vector<int>>> rotations_by_letter() const;

  Presentation with_relators(const std::vector<GroupWord>& extra, const std::string& name = "") const;

  /// Text form accepted by parse_presentation.
  std::string to_text() const;

 private:
  std::string name_;
  std::vector<std::string> gens_;
  std::vector<GroupWord> rels_;
};

inline int inverse_letter(int l) { return l ^ 1; }

struct PresentationParseError : std::invalid_argument {
  PresentationParseError(const std::string& msg, std::size_t line, std::size_t column)
      : std::invalid_argument("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line(line),
        column(column) {}
  std::size_t line, column;
};

/// Format: a `group <name> <gen,gen,...>` header followed by `rel <word>`
/// lines. `#` starts a comment; blank lines are ignored.
Presentation parse_presentation(const std::string& text);
Presentation load_presentation(const std::string& path);

// Built-in fixtures.
Presentation figure_eight();
/// Figure-eight knot group plus a^n.
Presentation delta(int n);
/// Fibonacci group F(2, m): generators x1..xm, relators x_i x_{i+1} x_{i+2}^-1.
Presentation fibonacci(int m);
/// Two-generator presentation of the 4-fold branched cover group.
Presentation gamma4();
Presentation gamma_empty();
/// <x, t | x^25, t^-1 x t = x^k>.
Presentation metacyclic25(int k);
Presentation free_group(int rank);
Presentation surface_group(int genus);

/// Resolves fixture names: figure8, deltaN, fibM, gamma4, gamma4-a2,
/// gamma4-a3, gamma-empty, b1, b2, freeN, surfaceN.
Presentation fixture(const std::string& name);
std::vector<std::string> fixture_names();

}  // namespace rlab
