#include <conetop/witness.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace conetop {

const char* cert_kind_str(CertKind k) {
  switch (k) {
    case CertKind::non_t0: return "NON_T0";
    case CertKind::open_chain: return "OPEN_CHAIN";
    case CertKind::loc_finite_family: return "LOC_FINITE_FAMILY";
    case CertKind::transversal: return "TRANSVERSAL";
    case CertKind::convergent_subseq: return "CONVERGENT_SUBSEQ";
    case CertKind::major_fail: return "MAJOR_FAIL";
    case CertKind::p_space_fail: return "P_SPACE_FAIL";
  }
  throw internal_error("unknown certificate kind");
}

std::optional<CertKind> parse_cert_kind(const std::string& s) {
  for (CertKind k : {CertKind::non_t0, CertKind::open_chain, CertKind::loc_finite_family,
                     CertKind::transversal, CertKind::convergent_subseq, CertKind::major_fail,
                     CertKind::p_space_fail})
    if (s == cert_kind_str(k)) return k;
  return std::nullopt;
}

std::optional<Certificate> make_non_t0(const Monoid& m) {
  if (m.units().is_trivial()) return std::nullopt;
  const auto& gens = m.spec().generators;
  const auto& is_unit = m.generator_is_unit();
  for (size_t i = 0; i < gens.size(); ++i)
    if (is_unit[i] && !is_zero(gens[i])) {
      Certificate c;
      c.kind = CertKind::non_t0;
      c.point = gens[i];
      return c;
    }
  // a nonzero unit is a nonnegative combination with some positive coefficient
  // on a nonzero generator, and that generator is itself a unit
  throw internal_error("nontrivial unit subgroup without a nonzero unit generator");
}

std::optional<Certificate> make_major_fail(const Monoid& m) {
  MajorizationVerdict v = m.majorization();
  if (v.holds) return std::nullopt;
  Certificate c;
  c.kind = CertKind::major_fail;
  c.point = *v.witness_generator;
  c.functional = *v.functional;
  return c;
}

std::optional<Certificate> make_nonpseudocompact_family(const ConeSpace& sp) {
  if (sp.monoid->span().index()) return std::nullopt;
  Certificate c;
  c.kind = CertKind::loc_finite_family;
  c.point = sp.monoid->span().free_direction();
  return c;
}

std::optional<Certificate> make_2pc_failing_chain(const ConeSpace& sp) {
  MajorizationVerdict v = sp.monoid->majorization();
  if (v.holds) return std::nullopt;
  Certificate c;
  c.kind = CertKind::open_chain;
  c.point = *v.witness_generator;
  c.functional = *v.functional;
  return c;
}

std::optional<Certificate> make_p_space_refuter(const ConeSpace& sp) {
  if (sp.variant != Variant::cone_star)
    throw contract_error("p-space refuters apply to the cone_star variant");
  MajorizationVerdict v = sp.monoid->majorization();
  if (v.holds) return std::nullopt;
  Certificate c;
  c.kind = CertKind::p_space_fail;
  c.point = *v.witness_generator;
  c.functional = *v.functional;
  return c;
}

std::optional<Certificate> make_transversal(const ConeSpace& sp) {
  if (!sp.monoid->span().index()) return std::nullopt;
  Certificate c;
  c.kind = CertKind::transversal;
  c.reps = sp.monoid->span().coset_transversal();
  return c;
}

std::optional<Certificate> make_convergent_subseq(const ConeSpace& sp, const SequenceRule& seq,
                                                  long prefix) {
  if (!sp.monoid->is_group()) return std::nullopt;
  const GroupSpec& g = sp.group();
  long len = seq.length_or(prefix);
  if (seq.is_explicit) len = std::min(len, long(seq.terms.size()));
  std::map<IntVec, std::vector<long>> buckets;
  for (long n = 0; n < len; ++n)
    buckets[sp.monoid->span().quotient_map(seq.term(g, n)).coords].push_back(n);
  const std::vector<long>* best = nullptr;
  for (const auto& [cls, idxs] : buckets)
    if (!best || idxs.size() > best->size()) best = &idxs;
  if (!best || best->size() < 2) return std::nullopt;
  Certificate c;
  c.kind = CertKind::convergent_subseq;
  c.indices = *best;
  c.limit = seq.term(g, best->front());
  c.seq = seq;
  return c;
}

namespace {

struct Checker {
  VerificationReport rep;
  bool stop = false;

  void note(const std::string& s) { rep.checks.push_back(s); }
  void require(bool ok, const std::string& what, const std::string& onfail) {
    if (stop) return;
    if (ok) {
      rep.checks.push_back(what);
    } else {
      rep.pass = false;
      rep.failure = onfail;
      stop = true;
    }
  }
};

std::string pt(const GroupElement& x) { return vec_str(x.coords); }

// Proves phi >= 0 on the whole monoid: torsion slots must vanish (so phi is
// additive on members), then generator values suffice for generated kinds.
// The lex top-coordinate functional is nonnegative on members by definition;
// any other lex functional gets a window-bounded sample instead of a proof.
void check_phi_nonneg(Checker& ck, const Monoid& m, const PositivityFunctional& phi,
                      const WindowPoints& w) {
  const GroupSpec& g = m.group();
  if (int(phi.weights.size()) != g.dims()) {
    ck.require(false, "", "functional arity differs from the group dimension");
    return;
  }
  for (int i = g.rank; i < g.dims(); ++i)
    ck.require(phi.weights[i] == 0, "functional vanishes on torsion slots",
               "functional has a nonzero torsion weight (not additive on members)");
  if (m.kind() == MonoidKind::generated) {
    for (const GroupElement& gen : m.spec().generators)
      ck.require(phi.eval(gen) >= 0,
                 "functional nonnegative on generator " + pt(gen),
                 "functional negative on generator " + pt(gen));
    return;
  }
  IntVec top(g.dims(), Int(0));
  if (g.dims() > 0) top[g.dims() - 1] = 1;
  if (phi.weights == top) {
    ck.note("functional is the top-coordinate weight, nonnegative on lex members by definition");
    return;
  }
  for (const GroupElement& x : w.points())
    if (m.member(x))
      ck.require(phi.eval(x) >= 0, "", "functional negative on window member " + pt(x));
  ck.note("functional sampled nonnegative on all window members (window-bounded check)");
}

void verify_non_t0(Checker& ck, const ConeSpace& sp, const Certificate& c) {
  const Monoid& m = *sp.monoid;
  ck.require(!is_zero(c.point), "witness " + pt(c.point) + " is nonzero",
             "witness element is zero");
  ck.require(m.member(c.point), "witness is a member of S",
             "witness " + pt(c.point) + " is not a member of S");
  ck.require(m.member(neg(sp.group(), c.point)), "negated witness is a member of S",
             "negation of witness " + pt(c.point) + " is not a member of S");
}

void verify_major_fail(Checker& ck, const ConeSpace& sp, const Certificate& c,
                       const WindowPoints& w) {
  const Monoid& m = *sp.monoid;
  if (!c.functional) throw contract_error("majorization certificate carries no functional");
  check_phi_nonneg(ck, m, *c.functional, w);
  if (ck.stop) return;
  ck.require(c.functional->eval(c.point) >= 1, "functional is at least 1 on the chain step",
             "functional not positive on the chain step " + pt(c.point));
  ck.require(m.member(c.point), "chain step is a member of S",
             "chain step " + pt(c.point) + " is not a member of S");
  ck.require(!m.member(neg(sp.group(), c.point)), "negated chain step is outside S",
             "negation of chain step " + pt(c.point) + " is a member of S");
  if (!ck.stop)
    ck.note("so phi(a) - n*phi(g) < 0 for n > phi(a): no a in S majorizes the chain {n*g}");
}

void verify_open_chain(Checker& ck, const ConeSpace& sp, const Certificate& c,
                       const WindowPoints& w, long prefix) {
  const Monoid& m = *sp.monoid;
  const GroupSpec& g = sp.group();
  if (!c.functional) throw contract_error("open-chain certificate carries no functional");
  const PositivityFunctional& phi = *c.functional;
  check_phi_nonneg(ck, m, phi, w);
  if (ck.stop) return;
  Int pg = phi.eval(c.point);
  ck.require(pg >= 1, "functional is at least 1 on the chain step",
             "functional not positive on the chain step " + pt(c.point));
  ck.require(m.member(c.point), "chain step is a member of S",
             "chain step " + pt(c.point) + " is not a member of S");
  if (ck.stop) return;
  ck.note("U_n = union of i*g + S over i >= n: nonempty (contains n*g), non-increasing in n");
  // w lies in closure(-U_n) = union of -i*g - S iff some i >= n has
  // -i*g - w in S, which forces phi(-i*g - w) >= 0 and so caps i at
  // phi(-w)/phi(g); scanning the finitely many candidates below the cap
  // makes the escape index exact
  Int worst = 1;
  for (const GroupElement& x : w.points()) {
    if (ck.stop) return;
    Int num = phi.eval(neg(g, x));
    Int cap = num < 0 ? Int(0) : floor_div(num, pg);
    Int escape = 1;
    for (Int i = 1; i <= cap; i += 1)
      if (m.member(sub(g, scale(g, -i, c.point), x))) escape = i + 1;
    if (escape > worst) worst = escape;
    if (escape > prefix) {
      ck.require(false, "",
                 "window point " + pt(x) + " needs escape index " + escape.get_str() +
                     " beyond the checked prefix");
      return;
    }
    GroupElement probe = sub(g, scale(g, -escape, c.point), x);
    ck.require(!m.member(probe), "",
               "window point " + pt(x) + " still lies in closure(-U_" + escape.get_str() + ")");
  }
  if (!ck.stop)
    ck.note("every window point escapes the closure chain by index " + worst.get_str() +
            "; the functional rules out every later candidate membership");
}

void verify_loc_finite(Checker& ck, const ConeSpace& sp, const Certificate& c,
                       const WindowPoints& w, long prefix) {
  const Monoid& m = *sp.monoid;
  const GroupSpec& g = sp.group();
  const SubgroupBasis& span = m.span();
  ck.require(!span.contains(c.point),
             "direction " + pt(c.point) + " leaves the span, so the members i*d + S sit in "
             "pairwise distinct clopen cosets and the family is infinite",
             "direction " + pt(c.point) + " lies in the span of S");
  if (ck.stop) return;
  // basic neighborhood x + S meets i*d + S iff x - i*d lies in S - S = span;
  // distinct i give distinct quotient images of i*d, so at most one i fits
  long escape = 0;
  for (const GroupElement& x : w.points()) {
    if (ck.stop) return;
    long hits = 0;
    for (long i = 0; i <= prefix; ++i)
      if (span.contains(sub(g, x, scale(g, Int(i), c.point)))) {
        ++hits;
        escape = std::max(escape, i + 1);
      }
    if (hits > 1) {
      ck.require(false, "",
                 "neighborhood of window point " + pt(x) + " meets " + std::to_string(hits) +
                     " family members");
      return;
    }
  }
  if (!ck.stop)
    ck.note("every window point's basic neighborhood meets at most one family member among "
            "indices 0.." + std::to_string(prefix) + ", none past escape index " +
            std::to_string(escape));
}

void verify_transversal(Checker& ck, const ConeSpace& sp, const Certificate& c,
                        const WindowPoints& w) {
  const Monoid& m = *sp.monoid;
  const GroupSpec& g = sp.group();
  const SubgroupBasis& span = m.span();
  std::optional<Int> idx = span.index();
  ck.require(bool(idx), "span has finite index", "span has infinite index");
  if (ck.stop) return;
  ck.require(Int(c.reps.size()) == *idx,
             "representative count equals the index " + idx->get_str(),
             "representative count differs from the index " + idx->get_str());
  for (size_t i = 0; i < c.reps.size() && !ck.stop; ++i)
    for (size_t j = i + 1; j < c.reps.size() && !ck.stop; ++j)
      ck.require(!span.contains(sub(g, c.reps[i], c.reps[j])), "",
                 "representatives " + pt(c.reps[i]) + " and " + pt(c.reps[j]) +
                     " share a coset");
  if (!ck.stop) ck.note("representatives lie in pairwise distinct cosets");
  for (const GroupElement& x : w.points()) {
    if (ck.stop) return;
    bool covered = false;
    for (const GroupElement& r : c.reps)
      if (span.contains(sub(g, x, r))) {
        covered = true;
        break;
      }
    ck.require(covered, "", "window point " + pt(x) + " is in no representative's coset");
  }
  if (!ck.stop) ck.note("every window point lies in some representative's coset");
}

void verify_convergent(Checker& ck, const ConeSpace& sp, const Certificate& c, long prefix) {
  const Monoid& m = *sp.monoid;
  const GroupSpec& g = sp.group();
  if (!c.seq || !c.limit)
    throw contract_error("subsequence certificate lacks its sequence or limit");
  ck.require(!c.indices.empty(), "index list nonempty", "index list is empty");
  for (size_t i = 0; i + 1 < c.indices.size() && !ck.stop; ++i)
    ck.require(c.indices[i] < c.indices[i + 1], "", "index list is not strictly increasing");
  if (ck.stop) return;
  long len = c.seq->length_or(prefix);
  for (long n : c.indices) {
    if (ck.stop) return;
    ck.require(n >= 0 && n < len, "", "index " + std::to_string(n) + " outside the prefix");
    if (ck.stop) return;
    GroupElement diff = sub(g, c.seq->term(g, n), *c.limit);
    ck.require(m.member(diff), "",
               "term at index " + std::to_string(n) + " is outside limit + S");
  }
  if (!ck.stop)
    ck.note("all " + std::to_string(c.indices.size()) +
            " subsequence terms lie in limit + S, so the subsequence converges to " +
            pt(*c.limit));
}

void verify_p_space_fail(Checker& ck, const ConeSpace& sp, const Certificate& c,
                         const WindowPoints& w, long prefix) {
  if (sp.variant != Variant::cone_star)
    throw contract_error("p-space certificates apply to the cone_star variant");
  const Monoid& m = *sp.monoid;
  const GroupSpec& g = sp.group();
  if (!c.functional) throw contract_error("p-space certificate carries no functional");
  const PositivityFunctional& phi = *c.functional;
  check_phi_nonneg(ck, m, phi, w);
  if (ck.stop) return;
  Int pg = phi.eval(c.point);
  ck.require(pg >= 1, "functional is at least 1 on the step",
             "functional not positive on the step " + pt(c.point));
  ck.require(m.member(c.point), "step is a member of S",
             "step " + pt(c.point) + " is not a member of S");
  ck.require(!m.member(neg(g, c.point)), "negated step is outside S",
             "negation of step " + pt(c.point) + " is a member of S");
  if (ck.stop) return;
  // For each basic neighborhood {0} ∪ (s+S): the point y = s+g lies in it and
  // is nonzero (else -g would be a member). Membership of y - n*g needs
  // (n-1)*phi(g) <= phi(s), so scanning n up to that cap finds the exact first
  // index with y outside c_n + S; no basic neighborhood fits in the G-delta.
  for (const GroupElement& s : w.points()) {
    if (ck.stop) return;
    if (!m.member(s)) continue;
    GroupElement y = add(g, s, c.point);
    Int cap = floor_div(phi.eval(s), pg) + 2;
    Int n = 1;
    while (n < cap && m.member(sub(g, y, scale(g, n, c.point)))) n += 1;
    if (n > prefix) {
      ck.require(false, "",
                 "neighborhood parameter " + pt(s) + " needs escape index " + n.get_str() +
                     " beyond the checked prefix");
      return;
    }
    ck.require(!is_zero(y), "", "escape point for parameter " + pt(s) + " is zero");
    if (ck.stop) return;
    GroupElement probe = sub(g, y, scale(g, n, c.point));
    ck.require(!m.member(probe), "",
               "point " + pt(y) + " of neighborhood " + pt(s) +
                   " stayed inside c_" + n.get_str() + " + S");
  }
  if (!ck.stop)
    ck.note("no basic neighborhood with a window parameter fits inside the G-delta set");
}

}  // namespace

VerificationReport verify(const ConeSpace& sp, const Certificate& cert, const Window& w,
                          long prefix) {
  if (w.radius < 0) throw input_error("window radius must be nonnegative");
  if (prefix < 1) throw input_error("prefix must be positive");
  Checker ck;
  ck.rep.kind = cert.kind;
  ck.rep.window_radius = w.radius;
  ck.rep.prefix = prefix;
  WindowPoints win(sp.group(), w.radius);
  switch (cert.kind) {
    case CertKind::non_t0: verify_non_t0(ck, sp, cert); break;
    case CertKind::major_fail: verify_major_fail(ck, sp, cert, win); break;
    case CertKind::open_chain: verify_open_chain(ck, sp, cert, win, prefix); break;
    case CertKind::loc_finite_family: verify_loc_finite(ck, sp, cert, win, prefix); break;
    case CertKind::transversal: verify_transversal(ck, sp, cert, win); break;
    case CertKind::convergent_subseq: verify_convergent(ck, sp, cert, prefix); break;
    case CertKind::p_space_fail: verify_p_space_fail(ck, sp, cert, win, prefix); break;
  }
  return ck.rep;
}

}  // namespace conetop
