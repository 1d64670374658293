#pragma once

#include <conetop/cone_space.hpp>

namespace conetop {

inline constexpr int default_window_radius = 8;
inline constexpr long default_prefix = 16;

struct Window {
  int radius = default_window_radius;
};

enum class CertKind {
  non_t0,
  open_chain,
  loc_finite_family,
  transversal,
  convergent_subseq,
  major_fail,
  p_space_fail,
};

const char* cert_kind_str(CertKind k);
std::optional<CertKind> parse_cert_kind(const std::string& s);

// Tagged union of proof witnesses; `point` doubles as the non-T0 element x,
// the chain step g (x_i = i*g, c_n = n*g), or the family direction d.
struct Certificate {
  CertKind kind = CertKind::non_t0;
  GroupElement point;
  std::optional<PositivityFunctional> functional;  // chains and refuters
  std::vector<GroupElement> reps;                  // transversal
  std::vector<long> indices;                       // convergent_subseq
  std::optional<GroupElement> limit;               // convergent_subseq
  std::optional<SequenceRule> seq;                 // convergent_subseq
  bool operator==(const Certificate&) const = default;
};

// x in U(S) \ {0}: x and -x both members, so 0 and x are indistinguishable.
std::optional<Certificate> make_non_t0(const Monoid& m);

// Failing majorization pair (g, phi): phi >= 0 on S, phi(g) >= 1, -g outside
// S; the chain {n*g} then has no majorant a with chain ⊆ a - S.
std::optional<Certificate> make_major_fail(const Monoid& m);

// Infinite span index: members x_i + S (x_i = i*d along a free direction of
// G/span) form an infinite family every basic neighborhood meets at most once.
std::optional<Certificate> make_nonpseudocompact_family(const ConeSpace& sp);

// Failing majorization: open chain U_n = ⋃_{i>=n} (i*g + S) whose -closures
// have empty intersection, refuting 2-pseudocompactness.
std::optional<Certificate> make_2pc_failing_chain(const ConeSpace& sp);

// cone_star only: the G-delta set {0} ∪ ⋂_n (n*g + S) is not open at 0,
// refuting the P-space property. Contract error on the cone variant.
std::optional<Certificate> make_p_space_refuter(const ConeSpace& sp);

// Finite span index: one representative per coset of the span.
std::optional<Certificate> make_transversal(const ConeSpace& sp);

// Group S: indices of the terms among the first `prefix` that share the most
// frequent S-coset, converging to the first such term. Needs two such terms.
std::optional<Certificate> make_convergent_subseq(const ConeSpace& sp, const SequenceRule& seq,
                                                  long prefix);

struct VerificationReport {
  bool pass = true;
  CertKind kind = CertKind::non_t0;
  int window_radius = default_window_radius;
  long prefix = default_prefix;
  std::vector<std::string> checks;  // one line per executed check
  std::string failure;              // first counterexample, empty when pass
  bool operator==(const VerificationReport&) const = default;
};

// Checks a certificate against raw definitions (membership calls and exact
// functional arithmetic) on the window; never consults the profile verdicts.
VerificationReport verify(const ConeSpace& sp, const Certificate& cert, const Window& w,
                          long prefix);

}  // namespace conetop
