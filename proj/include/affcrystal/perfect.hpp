#pragma once

#include "affcrystal/crystal.hpp"

#include <string>
#include <vector>

namespace affcrystal {

struct AxiomResult {
  int number = 0;            // axiom (n) of the perfect-crystal definition
  std::string statement;
  bool checked = true;       // false: asserted, not machine-verified
  bool pass = true;
  std::string witness;       // first offending element, empty on pass
};

/// b^lambda (eps(b) = lambda) and b_lambda (phi(b) = lambda) for lambda = Lambda_index.
struct MinimalEntry {
  int index = 0;
  int upper = kAbsent;
  int lower = kAbsent;
};

struct PerfectReport {
  AffineType type;
  std::vector<AxiomResult> axioms;   // (1) through (5)
  std::vector<MinimalEntry> minimal;
  std::vector<std::string> labels;   // element labels of B, for witnesses and the table

  bool pass() const;
};

/// Level-1 minimal elements. An entry whose preimage is missing or not unique
/// keeps kAbsent in that slot.
std::vector<MinimalEntry> minimal_elements(const LevelOneCrystal& b);

PerfectReport verify_perfect(const LevelOneCrystal& b);
PerfectReport verify_perfect(const AffineDatum& d);

/// One report per type, in input order. Types are verified concurrently.
std::vector<PerfectReport> verify_sweep(const std::vector<AffineType>& types);
std::vector<PerfectReport> verify_sweep_serial(const std::vector<AffineType>& types);

/// Copy of b with the i-arrow leaving `from` removed. Negative control for the checker.
LevelOneCrystal drop_arrow(const LevelOneCrystal& b, int i, int from);

}  // namespace affcrystal
