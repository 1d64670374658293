#pragma once

#include <random>

#include <conetop/monoid.hpp>

namespace testutil {

using namespace conetop;

inline GroupSpec zn(int rank) { return GroupSpec{rank, {}}; }

inline MonoidPtr gen_monoid(const GroupSpec& g, const std::vector<IntVec>& gens) {
  std::vector<GroupElement> elems;
  for (const IntVec& v : gens) elems.push_back(element(g, v));
  return make_monoid(generated_monoid(g, std::move(elems)));
}

// (Z, N)
inline MonoidPtr nat() { return gen_monoid(zn(1), {{1}}); }
// (Z, 2Z)
inline MonoidPtr even_group() { return gen_monoid(zn(1), {{2}, {-2}}); }
// (Z^2, cone of (1,0) and (1,1))
inline MonoidPtr cone2() { return gen_monoid(zn(2), {{1, 0}, {1, 1}}); }
// (Z^2, ray along the first axis)
inline MonoidPtr axis_ray() { return gen_monoid(zn(2), {{1, 0}}); }
// (Z^2, 2Z x 3Z)
inline MonoidPtr lattice6() { return gen_monoid(zn(2), {{2, 0}, {-2, 0}, {0, 3}, {0, -3}}); }
// (Z + Z/2, the torsion part)
inline MonoidPtr torsion_part() { return gen_monoid(GroupSpec{1, {Int(2)}}, {{0, 1}}); }
// (Z, {0})
inline MonoidPtr zero_monoid() { return gen_monoid(zn(1), {}); }

inline IntVec random_vec(std::mt19937& rng, int dims, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntVec v;
  for (int i = 0; i < dims; ++i) v.push_back(d(rng));
  return v;
}

}  // namespace testutil
