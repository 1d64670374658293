#pragma once

#include <conetop/integers.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace conetop {

// Subsets of {0..n-1} as bit patterns; bit i set means point i is in the set.
using Bits = std::uint32_t;

class FinTopology {
 public:
  // Validates the axioms: empty and full present, closed under pairwise
  // union and intersection.
  FinTopology(int n, std::vector<Bits> opens);

  static FinTopology antidiscrete(int n);
  static FinTopology discrete(int n);
  // Smallest topology containing the subbase.
  static FinTopology generate(int n, const std::vector<Bits>& subbase);

  int n() const { return n_; }
  Bits full() const { return n_ == 0 ? 0 : (Bits(1) << n_) - 1; }
  const std::vector<Bits>& opens() const { return opens_; }  // sorted ascending
  bool is_open(Bits a) const;

  Bits interior(Bits a) const;  // largest open subset
  Bits closure(Bits a) const;   // smallest closed superset

  // Topology generated by the canonically open sets U = int(cl(U)).
  FinTopology regularization() const;

  // true when every open of this topology is open in t
  bool coarser_equal(const FinTopology& t) const;

  bool operator==(const FinTopology&) const = default;
  std::string str() const;

 private:
  int n_ = 0;
  std::vector<Bits> opens_;
};

// Join: generated by {U ∩ V : U ∈ tau, V ∈ sigma}.
FinTopology supremum(const FinTopology& tau, const FinTopology& sigma);

// Every nonempty U ∈ tau meets every nonempty V ∈ sigma.
bool is_cowide(const FinTopology& tau, const FinTopology& sigma);
// Cowide with itself: nonempty opens pairwise intersect.
bool is_wide(const FinTopology& t);

// All topologies on n labeled points, n ≤ 4 (1, 4, 29, 355 of them).
std::vector<FinTopology> enumerate_topologies(int n);

// Literal definition checks. Both are degenerate on finite spaces (always
// true); kept as honest exhaustive loops so reports can say they were run.
bool is_pseudocompact_literal(const FinTopology& t);
bool is_h_closed_literal(const FinTopology& t);

struct LemmaReport {
  int n = 0;
  long pairs_total = 0;
  long cowide_pairs = 0;
  long wide_sigma_pairs = 0;
  long closure_checks = 0;
  long regularization_checks = 0;
  long counterexamples = 0;
  std::vector<std::string> details;  // nonempty only when counterexamples > 0
  bool operator==(const LemmaReport&) const = default;
};

// Over every ordered pair (tau, sigma) of topologies on n points: when cowide,
// the join closure of each W ∈ tau equals its tau-closure; when sigma is also
// wide, the same holds for each W ∈ tau∨sigma and the join regularization
// equals the tau regularization.
LemmaReport verify_lemmas(int n);

std::string subset_str(int n, Bits a);

}  // namespace conetop
