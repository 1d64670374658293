#pragma once

#include <conetop/monoid.hpp>

namespace conetop {

// cone: neighborhoods of x are {x + S}. cone_star: {{x} ∪ (x + s + S) : s ∈ S}.
enum class Variant { cone, cone_star };

const char* variant_str(Variant v);
std::optional<Variant> parse_variant(const std::string& s);

struct ConeSpace {
  MonoidPtr monoid;
  Variant variant = Variant::cone;
  const GroupSpec& group() const { return monoid->group(); }
};

// Finite unions of: {x}, x+S, x-S, x+<S>. Closed under the closure operator of
// the cone topology.
enum class AtomKind { point, plus_monoid, minus_monoid, plus_span };

struct Atom {
  AtomKind kind = AtomKind::point;
  GroupElement base;
  bool operator==(const Atom&) const = default;
};

struct DescribedSet {
  std::vector<Atom> atoms;
  bool operator==(const DescribedSet&) const = default;
};

DescribedSet make_point_set(const GroupElement& x);
DescribedSet make_translate(AtomKind kind, const GroupElement& base);

bool set_contains(const ConeSpace& sp, const DescribedSet& a, const GroupElement& x);

// Closure in the cone topology: atom-wise A - S. Refused for cone_star, whose
// closures have no finite symbolic form here; use window traces instead.
DescribedSet closure(const ConeSpace& sp, const DescribedSet& a);

struct CompactnessResult {
  bool compact = false;
  std::vector<GroupElement> cover;  // finite F ⊆ K with K ⊆ F + S
};
// Criterion: K is compact iff some finite F ⊆ K has K ⊆ F + S. Supported atom
// shapes: points and x+S (all shapes when S is a group).
CompactnessResult is_compact(const ConeSpace& sp, const DescribedSet& k);

struct SeparationRecord {
  bool t0 = false, t1 = false, hausdorff = false;
};
SeparationRecord separation(const ConeSpace& sp);

// The two basic-open families generate mutually dense topologies exactly when
// S - S is the whole group.
bool is_wide(const ConeSpace& sp);

// Box window: free coordinates in [-radius, radius], all torsion values.
class WindowPoints {
 public:
  WindowPoints(const GroupSpec& g, int radius);
  const GroupSpec& group() const { return group_; }
  int radius() const { return radius_; }
  const std::vector<GroupElement>& points() const { return points_; }
  size_t size() const { return points_.size(); }
  std::optional<size_t> index_of(const GroupElement& x) const;

 private:
  GroupSpec group_;
  int radius_;
  std::vector<GroupElement> points_;
};

// Closure of {points with flag set} in the topology the window inherits. For
// cone the inherited minimal neighborhood of w is (w+S) ∩ W, giving an exact
// Alexandrov-style closure; for cone_star the check is bounded by the probe
// list (an upper approximation needing nonempty probes).
std::vector<char> window_trace_closure(const ConeSpace& sp, const WindowPoints& w,
                                       const std::vector<char>& flags,
                                       const std::vector<GroupElement>& probes = {});

// Sequences: either an explicit finite list, or k interleaved affine branches
// c_{kn+j} = start_j + n * step_j (k = 1 is a plain affine rule).
struct AffineBranch {
  GroupElement start, step;
  bool operator==(const AffineBranch&) const = default;
};

struct SequenceRule {
  bool is_explicit = false;
  std::vector<GroupElement> terms;
  std::vector<AffineBranch> branches;

  GroupElement term(const GroupSpec& g, long n) const;
  long length_or(long prefix) const {
    return is_explicit ? long(terms.size()) : prefix;
  }
  bool operator==(const SequenceRule&) const = default;
};

enum class LimitKind { all, empty, points };

struct LimitReport {
  LimitKind kind = LimitKind::points;
  bool exact = false;           // decided from the rule, not just prefix-checked
  std::vector<GroupElement> points;   // admitted window points when kind==points
  long checked_prefix = 0;
  int window_radius = 0;
  // first index where membership in p + S (or the star probe neighborhood)
  // fails, for every rejected window point
  std::vector<std::pair<GroupElement, long>> escapes;
  std::string method;
  bool operator==(const LimitReport&) const = default;
};

// cone: p is a limit iff c_n ∈ p+S eventually; exact for rule-based sequences,
// suffix-checked on the list for explicit ones. cone_star: membership in
// p + ({0} ∪ (s+S)) is checked per probe s on the prefix; probes required.
LimitReport limits(const ConeSpace& sp, const SequenceRule& seq,
                   const std::vector<GroupElement>& probes, long prefix, int window_radius);

}  // namespace conetop
