#pragma once

#include <conetop/integers.hpp>

namespace conetop {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

struct LpResult {
  enum class Status { infeasible, optimal, unbounded };
  Status status = Status::infeasible;
  Rat value;
  RatVec x;
};

// maximize c.x subject to a x == b, x >= 0. Exact two-phase simplex, Bland's rule.
LpResult lp_solve(const RatMat& a, const RatVec& b, const RatVec& c);

// exists x >= 0 with a x == b
bool lp_feasible(const RatMat& a, const RatVec& b);

// v inside the rational cone spanned by gens (each an integer vector)?
bool in_rational_cone(const std::vector<IntVec>& gens, const IntVec& v);

// Integer w with w.g >= 1 for every g in gens, if one exists. Exists exactly
// when 0 is not a nonnegative nontrivial rational combination of gens.
std::optional<IntVec> strictly_positive_functional(const std::vector<IntVec>& gens, int dim);

}  // namespace conetop
