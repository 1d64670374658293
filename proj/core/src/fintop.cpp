#include <conetop/fintop.hpp>

#include <algorithm>
#include <set>
#include <sstream>

namespace conetop {

namespace {

void check_ground(int n) {
  if (n < 0 || n > 16) throw input_error("ground set size must be between 0 and 16");
}

}  // namespace

FinTopology::FinTopology(int n, std::vector<Bits> opens) : n_(n), opens_(std::move(opens)) {
  check_ground(n);
  std::sort(opens_.begin(), opens_.end());
  opens_.erase(std::unique(opens_.begin(), opens_.end()), opens_.end());
  for (Bits a : opens_)
    if (a & ~full()) throw input_error("open set mentions a point outside the ground set");
  if (!is_open(0) || !is_open(full()))
    throw input_error("topology must contain the empty and the full set");
  for (Bits a : opens_)
    for (Bits b : opens_) {
      if (!is_open(a & b)) throw input_error("family is not closed under intersection");
      if (!is_open(a | b)) throw input_error("family is not closed under union");
    }
}

FinTopology FinTopology::antidiscrete(int n) {
  check_ground(n);
  Bits f = n == 0 ? 0 : (Bits(1) << n) - 1;
  std::vector<Bits> opens{0};
  if (f != 0) opens.push_back(f);
  return FinTopology(n, std::move(opens));
}

FinTopology FinTopology::discrete(int n) {
  check_ground(n);
  if (n > 4) throw input_error("discrete topology materialized only for n <= 4");
  Bits f = n == 0 ? 0 : (Bits(1) << n) - 1;
  std::vector<Bits> opens;
  for (Bits a = 0; a <= f; ++a) {
    opens.push_back(a);
    if (f == 0) break;
  }
  return FinTopology(n, std::move(opens));
}

FinTopology FinTopology::generate(int n, const std::vector<Bits>& subbase) {
  check_ground(n);
  Bits f = n == 0 ? 0 : (Bits(1) << n) - 1;
  for (Bits a : subbase)
    if (a & ~f) throw input_error("subbase set mentions a point outside the ground set");
  // base: all finite intersections (the empty intersection is the full set)
  std::set<Bits> base{f};
  for (Bits s : subbase) {
    std::set<Bits> next = base;
    for (Bits b : base) next.insert(b & s);
    base.swap(next);
  }
  // opens: all unions of base sets
  std::set<Bits> opens{0};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Bits> snapshot(opens.begin(), opens.end());
    for (Bits o : snapshot)
      for (Bits b : base)
        if (opens.insert(o | b).second) grew = true;
  }
  return FinTopology(n, std::vector<Bits>(opens.begin(), opens.end()));
}

bool FinTopology::is_open(Bits a) const {
  return std::binary_search(opens_.begin(), opens_.end(), a);
}

Bits FinTopology::interior(Bits a) const {
  if (a & ~full()) throw input_error("subset mentions a point outside the ground set");
  Bits out = 0;
  for (Bits o : opens_)
    if ((o & ~a) == 0) out |= o;
  return out;
}

Bits FinTopology::closure(Bits a) const {
  return full() & ~interior(full() & ~a);
}

FinTopology FinTopology::regularization() const {
  std::vector<Bits> canonical;
  for (Bits u : opens_)
    if (u == interior(closure(u))) canonical.push_back(u);
  return generate(n_, canonical);
}

bool FinTopology::coarser_equal(const FinTopology& t) const {
  if (n_ != t.n_) throw input_error("topologies live on different ground sets");
  for (Bits a : opens_)
    if (!t.is_open(a)) return false;
  return true;
}

std::string subset_str(int n, Bits a) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int i = 0; i < n; ++i)
    if (a & (Bits(1) << i)) {
      if (!first) os << ',';
      os << i;
      first = false;
    }
  os << '}';
  return os.str();
}

std::string FinTopology::str() const {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < opens_.size(); ++i) {
    if (i) os << ' ';
    os << subset_str(n_, opens_[i]);
  }
  os << ']';
  return os.str();
}

FinTopology supremum(const FinTopology& tau, const FinTopology& sigma) {
  if (tau.n() != sigma.n()) throw input_error("topologies live on different ground sets");
  std::vector<Bits> base;
  base.reserve(tau.opens().size() * sigma.opens().size());
  for (Bits u : tau.opens())
    for (Bits v : sigma.opens()) base.push_back(u & v);
  return FinTopology::generate(tau.n(), base);
}

bool is_cowide(const FinTopology& tau, const FinTopology& sigma) {
  if (tau.n() != sigma.n()) throw input_error("topologies live on different ground sets");
  for (Bits u : tau.opens()) {
    if (u == 0) continue;
    for (Bits v : sigma.opens()) {
      if (v == 0) continue;
      if ((u & v) == 0) return false;
    }
  }
  return true;
}

bool is_wide(const FinTopology& t) { return is_cowide(t, t); }

std::vector<FinTopology> enumerate_topologies(int n) {
  if (n < 0) throw input_error("ground set size must be nonnegative");
  if (n > 4) throw input_error("enumerate_topologies is capped at n = 4");
  // Breadth-first growth: every topology is generated by its own opens, so
  // adding one subset at a time reaches all of them from the antidiscrete one.
  std::set<std::vector<Bits>> seen;
  std::vector<FinTopology> out;
  std::vector<FinTopology> frontier{FinTopology::antidiscrete(n)};
  seen.insert(frontier.front().opens());
  Bits f = frontier.front().full();
  while (!frontier.empty()) {
    std::vector<FinTopology> next;
    for (const FinTopology& t : frontier) {
      out.push_back(t);
      for (Bits s = 1; s < f; ++s) {
        if (t.is_open(s)) continue;
        std::vector<Bits> subbase = t.opens();
        subbase.push_back(s);
        FinTopology grown = FinTopology::generate(n, subbase);
        if (seen.insert(grown.opens()).second) next.push_back(grown);
      }
    }
    frontier.swap(next);
  }
  std::sort(out.begin(), out.end(),
            [](const FinTopology& a, const FinTopology& b) { return a.opens() < b.opens(); });
  return out;
}

bool is_pseudocompact_literal(const FinTopology& t) {
  // Every locally finite family of nonempty open sets must be finite. All set
  // families here are finite, so the loop can only confirm; it stays a real
  // enumeration so the degenerate verdict is still an executed check.
  std::vector<Bits> nonempty;
  for (Bits o : t.opens())
    if (o != 0) nonempty.push_back(o);
  if (nonempty.size() > 20) throw input_error("pseudocompactness check capped at 20 opens");
  for (std::uint64_t pick = 0; pick < (std::uint64_t(1) << nonempty.size()); ++pick) {
    size_t members = 0;
    for (size_t i = 0; i < nonempty.size(); ++i)
      if (pick & (std::uint64_t(1) << i)) ++members;
    if (members > nonempty.size()) return false;  // unreachable: every family is finite
  }
  return true;
}

bool is_h_closed_literal(const FinTopology& t) {
  // Every open cover has a finite subfamily whose closures cover. Each cover
  // is already finite and closures only grow, so the cover itself witnesses.
  std::vector<Bits> nonempty;
  for (Bits o : t.opens())
    if (o != 0) nonempty.push_back(o);
  if (nonempty.size() > 20) throw input_error("h-closedness check capped at 20 opens");
  for (std::uint64_t pick = 0; pick < (std::uint64_t(1) << nonempty.size()); ++pick) {
    Bits covered = 0, closures = 0;
    for (size_t i = 0; i < nonempty.size(); ++i)
      if (pick & (std::uint64_t(1) << i)) {
        covered |= nonempty[i];
        closures |= t.closure(nonempty[i]);
      }
    if (covered == t.full() && closures != t.full()) return false;  // unreachable
  }
  return true;
}

LemmaReport verify_lemmas(int n) {
  LemmaReport rep;
  rep.n = n;
  std::vector<FinTopology> all = enumerate_topologies(n);
  std::vector<char> wide(all.size());
  for (size_t i = 0; i < all.size(); ++i) wide[i] = is_wide(all[i]) ? 1 : 0;
  rep.pairs_total = long(all.size()) * long(all.size());
  for (size_t i = 0; i < all.size(); ++i) {
    const FinTopology& tau = all[i];
    for (size_t j = 0; j < all.size(); ++j) {
      const FinTopology& sigma = all[j];
      if (!is_cowide(tau, sigma)) continue;
      ++rep.cowide_pairs;
      FinTopology sup = supremum(tau, sigma);
      for (Bits w : tau.opens()) {
        ++rep.closure_checks;
        if (sup.closure(w) != tau.closure(w)) {
          ++rep.counterexamples;
          rep.details.push_back("join closure differs on tau-open " + subset_str(n, w) +
                                " for tau=" + tau.str() + " sigma=" + sigma.str());
        }
      }
      if (!wide[j]) continue;
      ++rep.wide_sigma_pairs;
      for (Bits w : sup.opens()) {
        ++rep.closure_checks;
        if (sup.closure(w) != tau.closure(w)) {
          ++rep.counterexamples;
          rep.details.push_back("join closure differs on join-open " + subset_str(n, w) +
                                " for tau=" + tau.str() + " sigma=" + sigma.str());
        }
      }
      ++rep.regularization_checks;
      if (!(sup.regularization() == tau.regularization())) {
        ++rep.counterexamples;
        rep.details.push_back("join regularization differs from tau regularization for tau=" +
                              tau.str() + " sigma=" + sigma.str());
      }
    }
  }
  return rep;
}

}  // namespace conetop
