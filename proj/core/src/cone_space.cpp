#include <conetop/cone_space.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace conetop {

const char* variant_str(Variant v) {
  return v == Variant::cone ? "cone" : "cone-star";
}

std::optional<Variant> parse_variant(const std::string& s) {
  if (s == "cone") return Variant::cone;
  if (s == "cone-star" || s == "cone_star") return Variant::cone_star;
  return std::nullopt;
}

DescribedSet make_point_set(const GroupElement& x) {
  return DescribedSet{{Atom{AtomKind::point, x}}};
}

DescribedSet make_translate(AtomKind kind, const GroupElement& base) {
  return DescribedSet{{Atom{kind, base}}};
}

bool set_contains(const ConeSpace& sp, const DescribedSet& a, const GroupElement& x) {
  const Monoid& m = *sp.monoid;
  const GroupSpec& g = sp.group();
  for (const Atom& atom : a.atoms) {
    switch (atom.kind) {
      case AtomKind::point:
        if (x == atom.base) return true;
        break;
      case AtomKind::plus_monoid:
        if (m.member(sub(g, x, atom.base))) return true;
        break;
      case AtomKind::minus_monoid:
        if (m.member(sub(g, atom.base, x))) return true;
        break;
      case AtomKind::plus_span:
        if (m.span().contains(sub(g, x, atom.base))) return true;
        break;
    }
  }
  return false;
}

DescribedSet closure(const ConeSpace& sp, const DescribedSet& a) {
  if (sp.variant != Variant::cone)
    throw contract_error("closure: only the cone topology admits this symbolic form");
  // cl(A) = A - S, atom by atom: cl{x} = x-S, cl(x+S) = x+S-S = x+<S>,
  // and x-S, x+<S> are already closed.
  DescribedSet out;
  auto push = [&out](Atom atom) {
    if (std::find(out.atoms.begin(), out.atoms.end(), atom) == out.atoms.end())
      out.atoms.push_back(std::move(atom));
  };
  for (const Atom& atom : a.atoms) {
    switch (atom.kind) {
      case AtomKind::point:
        push({AtomKind::minus_monoid, atom.base});
        break;
      case AtomKind::plus_monoid:
        push({AtomKind::plus_span, atom.base});
        break;
      case AtomKind::minus_monoid:
      case AtomKind::plus_span:
        push(atom);
        break;
    }
  }
  return out;
}

CompactnessResult is_compact(const ConeSpace& sp, const DescribedSet& k) {
  if (sp.variant != Variant::cone)
    throw contract_error("is_compact: implemented for the cone topology only");
  const Monoid& m = *sp.monoid;
  const GroupSpec& g = sp.group();
  if (!m.is_group()) {
    for (const Atom& atom : k.atoms)
      if (atom.kind == AtomKind::minus_monoid || atom.kind == AtomKind::plus_span)
        throw contract_error(
            "is_compact: shape x-S or x+span(S) is not supported unless S is a group");
  }
  // K ⊆ F + S for finite F ⊆ K decides compactness: {f+S : f ∈ F} covers K and
  // every open cover of K refines to base sets around points of K, which the
  // same F-selection argument reduces to this form. An atom with base x lies
  // in f + S iff x - f ∈ S (for group S all shapes collapse to x + S).
  CompactnessResult res;
  size_t n = k.atoms.size();
  if (n == 0) {
    res.compact = true;
    return res;
  }
  // covers[i][j]: candidate base j covers atom i
  std::vector<std::vector<char>> covers(n, std::vector<char>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      covers[i][j] = m.member(sub(g, k.atoms[i].base, k.atoms[j].base)) ? 1 : 0;
  std::vector<char> covered(n, 0);
  size_t remaining = n;
  while (remaining > 0) {
    size_t best = n, best_gain = 0;
    for (size_t j = 0; j < n; ++j) {
      size_t gain = 0;
      for (size_t i = 0; i < n; ++i)
        if (!covered[i] && covers[i][j]) ++gain;
      if (gain > best_gain) {
        best_gain = gain;
        best = j;
      }
    }
    if (best == n)
      throw internal_error("is_compact: atom not covered by its own base");
    res.cover.push_back(k.atoms[best].base);
    for (size_t i = 0; i < n; ++i)
      if (covers[i][best] && !covered[i]) {
        covered[i] = 1;
        --remaining;
      }
  }
  res.compact = true;
  return res;
}

SeparationRecord separation(const ConeSpace& sp) {
  const Monoid& m = *sp.monoid;
  SeparationRecord r;
  bool trivial = m.is_trivial();
  if (sp.variant == Variant::cone) {
    // x, y are topologically indistinguishable iff x - y is a unit of S, so T0
    // holds iff the unit group is trivial; T1 and Hausdorff need S = {0}.
    r.t0 = m.units().is_trivial();
    r.t1 = trivial;
    r.hausdorff = trivial;
  } else {
    // {x} ∪ (x+s+S) neighborhoods separate points unless S is a nontrivial
    // group, and then not even T0; T1 comes for free with T0 here.
    r.t0 = trivial || !m.is_group();
    r.t1 = r.t0;
    r.hausdorff = trivial;
  }
  return r;
}

bool is_wide(const ConeSpace& sp) { return sp.monoid->span().is_full(); }

WindowPoints::WindowPoints(const GroupSpec& g, int radius) : group_(g), radius_(radius) {
  if (radius < 0) throw input_error("window radius must be nonnegative");
  int dims = g.dims();
  IntVec lo(dims), hi(dims);
  for (int i = 0; i < dims; ++i) {
    if (i < g.rank) {
      lo[i] = -radius;
      hi[i] = radius;
    } else {
      lo[i] = 0;
      hi[i] = g.torsion[i - g.rank] - 1;
    }
  }
  IntVec cur = lo;
  while (true) {
    points_.push_back(GroupElement{cur});
    int i = dims;
    while (i > 0) {
      --i;
      if (cur[i] < hi[i]) {
        ++cur[i];
        for (int j = i + 1; j < dims; ++j) cur[j] = lo[j];
        break;
      }
      if (i == 0) return;
    }
    if (dims == 0) return;
  }
}

std::optional<size_t> WindowPoints::index_of(const GroupElement& x) const {
  // points are in odometer order: direct positional arithmetic
  int dims = group_.dims();
  size_t idx = 0;
  for (int i = 0; i < dims; ++i) {
    Int span = i < group_.rank ? Int(2 * radius_ + 1) : group_.torsion[i - group_.rank];
    Int off = i < group_.rank ? x.coords[i] + radius_ : x.coords[i];
    if (off < 0 || off >= span) return std::nullopt;
    idx = idx * to_long(span) + to_long(off);
  }
  return idx;
}

std::vector<char> window_trace_closure(const ConeSpace& sp, const WindowPoints& w,
                                       const std::vector<char>& flags,
                                       const std::vector<GroupElement>& probes) {
  if (flags.size() != w.size())
    throw input_error("window_trace_closure: flag vector size mismatch");
  const Monoid& m = *sp.monoid;
  const GroupSpec& g = sp.group();
  std::map<IntVec, bool> memo;
  auto member_diff = [&](const GroupElement& a, const GroupElement& b) {
    GroupElement d = sub(g, a, b);
    auto it = memo.find(d.coords);
    if (it != memo.end()) return it->second;
    bool r = m.member(d);
    memo.emplace(d.coords, r);
    return r;
  };
  const auto& pts = w.points();
  std::vector<char> closed(w.size(), 0);
  if (sp.variant == Variant::cone) {
    // minimal inherited neighborhood of p is (p+S) ∩ W, so p is in the trace
    // closure iff some flagged point lies in p + S
    for (size_t i = 0; i < pts.size(); ++i) {
      if (flags[i]) {
        closed[i] = 1;
        continue;
      }
      for (size_t j = 0; j < pts.size(); ++j)
        if (flags[j] && member_diff(pts[j], pts[i])) {
          closed[i] = 1;
          break;
        }
    }
  } else {
    if (probes.empty())
      throw contract_error("window_trace_closure: cone_star requires probe elements");
    // p is kept iff every probed neighborhood {p} ∪ (p+s+S) meets the flagged
    // set inside W; a finite probe list can only over-approximate the closure
    for (size_t i = 0; i < pts.size(); ++i) {
      if (flags[i]) {
        closed[i] = 1;
        continue;
      }
      bool all = true;
      for (const GroupElement& s : probes) {
        if (!m.member(s))
          throw input_error("window_trace_closure: probe is not an element of S");
        bool hit = false;
        GroupElement shifted = add(g, pts[i], s);
        for (size_t j = 0; j < pts.size() && !hit; ++j)
          if (flags[j] && member_diff(pts[j], shifted)) hit = true;
        if (!hit) {
          all = false;
          break;
        }
      }
      closed[i] = all ? 1 : 0;
    }
  }
  return closed;
}

GroupElement SequenceRule::term(const GroupSpec& g, long n) const {
  if (n < 0) throw input_error("sequence index must be nonnegative");
  if (is_explicit) {
    if (size_t(n) >= terms.size()) throw input_error("sequence index past end of list");
    return terms[size_t(n)];
  }
  if (branches.empty()) throw input_error("sequence rule has no branches");
  long k = long(branches.size());
  const AffineBranch& b = branches[size_t(n % k)];
  return add(g, b.start, scale(g, Int(n / k), b.step));
}

namespace {

// Decision data for "y + n*d ∈ S for all large n", prepared once per step d.
struct EventualDecider {
  const Monoid* base = nullptr;
  GroupElement step;
  std::optional<Int> k0;        // least k ≥ 1 with k*d ∈ S (generated kind)
  MonoidPtr relaxed;            // S with -k0*d adjoined
  bool lex = false;

  bool decide(const GroupElement& y) const {
    if (lex) return base->eventually_member(y, step);
    if (!k0) return false;
    // y + n*d ∈ S for all large n iff every k0-residue enters: y + j*d lies in
    // S - N*k0*d for each j < k0
    const GroupSpec& g = base->group();
    long k = to_long(*k0);
    for (long j = 0; j < k; ++j)
      if (!relaxed->member(add(g, y, scale(g, Int(j), step)))) return false;
    return true;
  }

  // true when the relaxed monoid is everything, making every y eventual
  bool admits_everything() const {
    if (lex) return false;
    return k0 && relaxed->is_group() && relaxed->span().is_full();
  }
};

EventualDecider prepare_decider(const MonoidPtr& m, const GroupElement& step) {
  EventualDecider d;
  d.base = m.get();
  d.step = step;
  if (m->spec().kind == MonoidKind::lex) {
    d.lex = true;
    return d;
  }
  d.k0 = m->positive_multiple_in(step);
  if (d.k0) {
    const GroupSpec& g = m->group();
    MonoidSpec relaxed_spec = m->spec();
    relaxed_spec.generators.push_back(neg(g, scale(g, *d.k0, step)));
    d.relaxed = make_monoid(relaxed_spec);
  }
  return d;
}

long first_escape(const Monoid& m, const GroupSpec& g, const SequenceRule& seq, long len,
                  const GroupElement& p, long cap) {
  for (long n = 0; n < std::min(len, cap); ++n)
    if (!m.member(sub(g, seq.term(g, n), p))) return n;
  return -1;
}

// smallest N such that c_n ∈ p+S for all n ∈ [N, horizon); horizon is the list
// length for explicit sequences and a propagation-justified bound for rules
long suffix_start(const Monoid& m, const GroupSpec& g, const SequenceRule& seq, long len,
                  const GroupElement& p) {
  long start = 0;
  for (long n = 0; n < len; ++n)
    if (!m.member(sub(g, seq.term(g, n), p))) start = n + 1;
  return start;
}

}  // namespace

LimitReport limits(const ConeSpace& sp, const SequenceRule& seq,
                   const std::vector<GroupElement>& probes, long prefix, int window_radius) {
  if (prefix <= 0) throw input_error("prefix must be positive");
  const Monoid& m = *sp.monoid;
  const GroupSpec& g = sp.group();
  LimitReport rep;
  rep.window_radius = window_radius;
  rep.checked_prefix = seq.length_or(prefix);
  WindowPoints window(g, window_radius);

  if (sp.variant == Variant::cone_star) {
    if (probes.empty())
      throw contract_error("limits: cone_star verdicts are probe-bounded; supply probes");
    for (const GroupElement& s : probes)
      if (!m.member(s)) throw input_error("limits: probe is not an element of S");
    long len = seq.length_or(prefix);
    // p is kept iff for every probe s the sequence eventually stays inside
    // {p} ∪ (p+s+S), judged on the checked prefix
    rep.kind = LimitKind::points;
    rep.exact = false;
    rep.method = "cone_star prefix check against the supplied probe neighborhoods";
    for (const GroupElement& p : window.points()) {
      bool keep = true;
      long escape = -1;
      for (const GroupElement& s : probes) {
        GroupElement shifted = add(g, p, s);
        long start = 0;
        for (long n = 0; n < len; ++n) {
          GroupElement c = seq.term(g, n);
          if (!(c == p) && !m.member(sub(g, c, shifted))) start = n + 1;
        }
        if (start >= len) {
          keep = false;
          escape = len - 1;
          break;
        }
      }
      if (keep)
        rep.points.push_back(p);
      else
        rep.escapes.emplace_back(p, escape);
    }
    return rep;
  }

  if (seq.is_explicit) {
    if (seq.terms.empty()) throw input_error("limits: empty explicit sequence");
    long len = long(seq.terms.size());
    rep.kind = LimitKind::points;
    rep.exact = false;
    rep.checked_prefix = len;
    rep.method = "suffix membership over the explicit list";
    for (const GroupElement& p : window.points()) {
      long start = suffix_start(m, g, seq, len, p);
      if (start < len)
        rep.points.push_back(p);
      else
        rep.escapes.emplace_back(p, len - 1);
    }
    return rep;
  }

  // Rule-based cone limits are exact: p is a limit iff every branch satisfies
  // start_b + n*step_b ∈ p+S for all large n.
  if (seq.branches.empty()) throw input_error("limits: sequence rule has no branches");
  std::vector<EventualDecider> deciders;
  deciders.reserve(seq.branches.size());
  for (const AffineBranch& b : seq.branches) deciders.push_back(prepare_decider(sp.monoid, b.step));

  rep.exact = true;
  bool lex = m.spec().kind == MonoidKind::lex;
  long escape_cap = std::max(prefix, 64L) + 8L * std::max(window_radius, 1);

  if (!lex) {
    bool some_branch_dead = false;
    for (const EventualDecider& d : deciders)
      if (!d.k0) some_branch_dead = true;
    if (some_branch_dead) {
      // a branch whose step has no positive multiple in S escapes every
      // translate p+S infinitely often, so no point is a limit
      rep.kind = LimitKind::empty;
      rep.method = "a branch step has no positive multiple in S";
      for (const GroupElement& p : window.points()) {
        long e = first_escape(m, g, seq, escape_cap, p, escape_cap);
        if (e < 0) throw internal_error("limits: empty verdict but no escape found in cap");
        rep.escapes.emplace_back(p, e);
      }
      return rep;
    }
    bool all = true;
    for (const EventualDecider& d : deciders)
      if (!d.admits_everything()) all = false;
    if (all) {
      rep.kind = LimitKind::all;
      rep.method = "every branch admits every point: relaxed monoids are the whole group";
      return rep;
    }
  }

  rep.kind = LimitKind::points;
  rep.method = "per-branch eventual membership, decided exactly";
  long threshold_max = 0;
  for (const GroupElement& p : window.points()) {
    bool admitted = true;
    for (size_t b = 0; b < deciders.size() && admitted; ++b)
      if (!deciders[b].decide(sub(g, seq.branches[b].start, p))) admitted = false;
    if (!admitted) {
      long e = first_escape(m, g, seq, escape_cap, p, escape_cap);
      if (e < 0) throw internal_error("limits: rejected point but no escape found in cap");
      rep.escapes.emplace_back(p, e);
      continue;
    }
    rep.points.push_back(p);
    // locate the threshold by a run of consecutive members long enough to
    // propagate: membership at n implies membership at n + k*k0 per branch,
    // and lex membership along a branch flips at most once
    long run_needed = long(deciders.size());
    if (!lex)
      for (const EventualDecider& d : deciders)
        run_needed = std::max(run_needed, long(deciders.size()) * to_long(*d.k0));
    long run = 0, n = 0;
    const long hard_cap = 100000;
    while (run < run_needed) {
      if (n >= hard_cap) throw internal_error("limits: threshold scan exceeded cap");
      if (m.member(sub(g, seq.term(g, n), p)))
        ++run;
      else
        run = 0;
      ++n;
    }
    threshold_max = std::max(threshold_max, n);
  }
  rep.checked_prefix = std::max(prefix, threshold_max);
  return rep;
}

}  // namespace conetop
