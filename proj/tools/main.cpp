#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include <conetop/report.hpp>

using namespace conetop;

namespace {

namespace fs = std::filesystem;

struct Options {
  std::string format = "json";
  int window = -1;  // negative: take the instance's option
  long prefix = -1;
  std::string space = "both";
};

int window_of(const Options& o, const Instance& inst) {
  return o.window >= 0 ? o.window : inst.options.window;
}

long prefix_of(const Options& o, const Instance& inst) {
  return o.prefix >= 1 ? o.prefix : inst.options.prefix;
}

void add_common(CLI::App* cmd, Options& o, bool with_space) {
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--window", o.window, "window radius override")->check(CLI::Range(0, 64));
  cmd->add_option("--prefix", o.prefix, "sequence prefix override")
      ->check(CLI::Range(1L, 100000L));
  if (with_space)
    cmd->add_option("--space", o.space, "topology variant")
        ->check(CLI::IsMember({"cone", "cone-star", "both"}));
}

void emit(const Report& rep, const Options& o, std::ostream& out) {
  out << (o.format == "text" ? render_text(rep) : emit_json(rep));
}

std::vector<Variant> spaces_of(const std::string& s) {
  if (s == "cone") return {Variant::cone};
  if (s == "cone-star") return {Variant::cone_star};
  return {Variant::cone, Variant::cone_star};
}

Variant single_space_of(const std::string& s) {
  std::optional<Variant> v = parse_variant(s);
  if (!v) throw input_error("this command needs --space cone or cone-star, not '" + s + "'");
  return *v;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GroupElement element_checked(const GroupSpec& g, const IntVec& raw, const std::string& what) {
  if (int(raw.size()) != g.dims())
    throw input_error(what + " has arity " + std::to_string(raw.size()) +
                      ", the group needs " + std::to_string(g.dims()));
  return element(g, raw);
}

std::vector<GroupElement> parse_points(const GroupSpec& g, const std::string& arg,
                                       const std::string& what) {
  std::vector<GroupElement> out;
  for (const IntVec& v : parse_vector_list_literal(arg)) out.push_back(element_checked(g, v, what));
  return out;
}

std::vector<std::string> split_semis(const std::string& s) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t semi = s.find(';', pos);
    out.push_back(s.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos));
    pos = semi == std::string::npos ? s.size() + 1 : semi + 1;
  }
  return out;
}

std::vector<GroupElement> parse_point_semis(const GroupSpec& g, const std::string& arg,
                                            const std::string& what) {
  std::vector<GroupElement> out;
  for (const std::string& tok : split_semis(arg))
    out.push_back(element_checked(g, parse_vector_literal(tok), what));
  return out;
}

// Atom list literal: atoms separated by ';', each "[v]", "[v]+S", "[v]-S" or
// "[v]+span".
DescribedSet parse_set_literal(const GroupSpec& g, const std::string& s) {
  DescribedSet out;
  for (std::string tok : split_semis(s)) {
    size_t a = tok.find_first_not_of(" \t");
    if (a == std::string::npos) throw input_error("empty atom in set literal");
    size_t b = tok.find_last_not_of(" \t");
    tok = tok.substr(a, b - a + 1);
    AtomKind kind = AtomKind::point;
    std::string vec = tok;
    auto ends_with = [&](const std::string& suf) {
      return tok.size() > suf.size() && tok.compare(tok.size() - suf.size(), suf.size(), suf) == 0;
    };
    if (ends_with("+span")) {
      kind = AtomKind::plus_span;
      vec = tok.substr(0, tok.size() - 5);
    } else if (ends_with("+S")) {
      kind = AtomKind::plus_monoid;
      vec = tok.substr(0, tok.size() - 2);
    } else if (ends_with("-S")) {
      kind = AtomKind::minus_monoid;
      vec = tok.substr(0, tok.size() - 2);
    }
    while (!vec.empty() && (vec.back() == ' ' || vec.back() == '\t')) vec.pop_back();
    out.atoms.push_back(Atom{kind, element_checked(g, parse_vector_literal(vec), "atom base")});
  }
  if (out.atoms.empty()) throw input_error("set literal has no atoms");
  return out;
}

std::string set_str(const DescribedSet& a) {
  std::ostringstream os;
  for (size_t i = 0; i < a.atoms.size(); ++i) {
    if (i) os << ";";
    os << vec_str(a.atoms[i].base.coords);
    switch (a.atoms[i].kind) {
      case AtomKind::point: break;
      case AtomKind::plus_monoid: os << "+S"; break;
      case AtomKind::minus_monoid: os << "-S"; break;
      case AtomKind::plus_span: os << "+span"; break;
    }
  }
  return os.str();
}

std::string cert_summary(const Certificate& c) {
  std::ostringstream os;
  os << cert_kind_str(c.kind) << " point=" << vec_str(c.point.coords);
  if (c.functional) os << " functional=" << vec_str(c.functional->weights);
  if (!c.reps.empty()) os << " reps=" << c.reps.size();
  if (!c.indices.empty()) os << " indices=" << c.indices.size();
  return os.str();
}

// profile: both variants by default, with implication, cross-variant and
// certificate checks folded into the exit code.
std::pair<Report, int> profile_instance(const Instance& inst, const Options& o) {
  MonoidPtr m = make_monoid(inst.monoid);
  int R = window_of(o, inst);
  long prefix = prefix_of(o, inst);
  Report rep;
  rep.command = "profile";
  rep.window = R;
  rep.prefix = prefix;
  rep.instance = InstanceEcho{inst.name, instance_text(inst)};
  int code = 0;
  std::optional<PropertyProfile> cone_prof, star_prof;
  for (Variant var : spaces_of(o.space)) {
    ConeSpace sp{m, var};
    SpaceReport sr;
    sr.profile = evaluate(sp);
    sr.implication_violations = check_implications(sr.profile);
    for (const auto& [name, v] : sr.profile.verdicts) {
      if (!v.certificate) continue;
      VerificationReport vr = verify(sp, *v.certificate, Window{R}, prefix);
      if (!vr.pass) code = std::max(code, 1);
      sr.verifications.push_back(std::move(vr));
    }
    if (!sr.implication_violations.empty()) code = 3;
    if (var == Variant::cone)
      cone_prof = sr.profile;
    else
      star_prof = sr.profile;
    rep.spaces.push_back(std::move(sr));
  }
  if (cone_prof && star_prof) {
    rep.cross_violations = cross_variant_check(*cone_prof, *star_prof);
    if (!rep.cross_violations.empty()) code = 3;
  }
  return {std::move(rep), code};
}

int cmd_profile(const std::string& path, bool all, const Options& o) {
  if (!all) {
    auto [rep, code] = profile_instance(parse_instance_file(path), o);
    emit(rep, o, std::cout);
    return code;
  }
  std::string dir = path;
  if (dir.empty()) {
    const char* env = std::getenv("CONETOP_CORPUS");
    if (env) dir = env;
  }
  if (dir.empty())
    throw input_error("profile --all needs a corpus directory or CONETOP_CORPUS");
  if (!fs::is_directory(dir)) throw input_error("not a directory: " + dir);
  std::vector<std::string> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".inst") files.push_back(e.path().string());
  std::sort(files.begin(), files.end());
  if (files.empty()) throw input_error("no .inst files in " + dir);

  struct Slot {
    Report rep;
    int code = 0;
    std::string error;
  };
  std::vector<Slot> slots(files.size());
  std::atomic<size_t> next{0};
  size_t workers = std::min<size_t>(std::max(1u, std::thread::hardware_concurrency()),
                                    files.size());
  std::vector<std::thread> pool;
  for (size_t t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      for (size_t i = next++; i < files.size(); i = next++) {
        try {
          auto [rep, code] = profile_instance(parse_instance_file(files[i]), o);
          slots[i] = Slot{std::move(rep), code, ""};
        } catch (const input_error& e) {
          slots[i] = Slot{{}, 2, e.what()};
        } catch (const std::exception& e) {
          slots[i] = Slot{{}, 3, e.what()};
        }
      }
    });
  for (std::thread& t : pool) t.join();

  int code = 0;
  bool json = o.format != "text";
  if (json) std::cout << "[\n";
  bool first = true;
  for (const Slot& s : slots) {
    code = std::max(code, s.code);
    if (!s.error.empty()) {
      std::cerr << "error: " << s.error << "\n";
      continue;
    }
    if (json) {
      std::string doc = emit_json(s.rep);
      while (!doc.empty() && doc.back() == '\n') doc.pop_back();
      std::cout << (first ? "" : ",\n") << doc;
      first = false;
    } else {
      emit(s.rep, o, std::cout);
      std::cout << "\n";
    }
  }
  if (json) std::cout << "\n]\n";
  return code;
}

int cmd_member(const std::string& path, const std::string& points_arg, const Options& o) {
  Instance inst = parse_instance_file(path);
  MonoidPtr m = make_monoid(inst.monoid);
  Report rep;
  rep.command = "member";
  rep.window = window_of(o, inst);
  rep.prefix = prefix_of(o, inst);
  rep.instance = InstanceEcho{inst.name, instance_text(inst)};
  for (const GroupElement& x : parse_points(m->group(), points_arg, "point")) {
    bool in = m->member(x);
    std::string val = in ? "member" : "not a member";
    if (in && m->kind() == MonoidKind::generated) {
      std::optional<Monoid::MemberWitness> w = m->member_witness(x);
      if (w) {
        std::ostringstream os;
        os << val << ", coefficients " << vec_str(w->coefficients);
        if (!is_zero(w->unit_part)) os << ", unit part " << vec_str(w->unit_part.coords);
        val = os.str();
      }
    }
    rep.results.emplace_back("point " + vec_str(x.coords), val);
  }
  emit(rep, o, std::cout);
  return 0;
}

int cmd_closure(const std::string& path, const std::string& set_arg, const Options& o) {
  Instance inst = parse_instance_file(path);
  MonoidPtr m = make_monoid(inst.monoid);
  Variant var = o.space == "both" ? Variant::cone : single_space_of(o.space);
  ConeSpace sp{m, var};
  DescribedSet a = parse_set_literal(m->group(), set_arg);
  DescribedSet cl = closure(sp, a);
  Report rep;
  rep.command = "closure";
  rep.window = window_of(o, inst);
  rep.prefix = prefix_of(o, inst);
  rep.instance = InstanceEcho{inst.name, instance_text(inst)};
  rep.results.emplace_back("space", variant_str(var));
  rep.results.emplace_back("set", set_str(a));
  rep.results.emplace_back("closure", set_str(cl));
  emit(rep, o, std::cout);
  return 0;
}

SequenceRule parse_sequence(const GroupSpec& g, const std::string& terms_arg,
                            const std::string& branches_arg) {
  if (terms_arg.empty() == branches_arg.empty())
    throw input_error("pass exactly one of --terms and --branches");
  SequenceRule seq;
  if (!terms_arg.empty()) {
    seq.is_explicit = true;
    seq.terms = parse_point_semis(g, terms_arg, "term");
    return seq;
  }
  for (const std::string& tok : split_semis(branches_arg)) {
    size_t arrow = tok.find("->");
    if (arrow == std::string::npos)
      throw input_error("branch '" + tok + "' is not of the form [start]->[step]");
    seq.branches.push_back(
        AffineBranch{element_checked(g, parse_vector_literal(tok.substr(0, arrow)), "start"),
                     element_checked(g, parse_vector_literal(tok.substr(arrow + 2)), "step")});
  }
  if (seq.branches.empty()) throw input_error("--branches lists no branches");
  return seq;
}

int cmd_limits(const std::string& path, const std::string& terms_arg,
               const std::string& branches_arg, const std::string& probes_arg,
               const Options& o) {
  Instance inst = parse_instance_file(path);
  MonoidPtr m = make_monoid(inst.monoid);
  Variant var = o.space == "both" ? Variant::cone : single_space_of(o.space);
  ConeSpace sp{m, var};
  SequenceRule seq = parse_sequence(m->group(), terms_arg, branches_arg);
  std::vector<GroupElement> probes;
  if (!probes_arg.empty()) probes = parse_point_semis(m->group(), probes_arg, "probe");
  Report rep;
  rep.command = "limits";
  rep.window = window_of(o, inst);
  rep.prefix = prefix_of(o, inst);
  rep.instance = InstanceEcho{inst.name, instance_text(inst)};
  rep.results.emplace_back("space", variant_str(var));
  rep.limits = limits(sp, seq, probes, rep.prefix, rep.window);
  emit(rep, o, std::cout);
  return 0;
}

std::optional<Certificate> make_for(PropertyName p, const ConeSpace& sp, bool holds) {
  using P = PropertyName;
  switch (p) {
    case P::t0:
      return make_non_t0(*sp.monoid);
    case P::compact:
    case P::omega_bounded:
    case P::totally_countably_compact:
    case P::precompact:
      return holds ? make_transversal(sp) : std::nullopt;
    case P::sequentially_compact:
    case P::countably_compact:
      return make_major_fail(*sp.monoid);
    case P::two_pseudocompact:
      return make_2pc_failing_chain(sp);
    case P::pseudocompact:
    case P::countably_pracompact:
      return make_nonpseudocompact_family(sp);
    case P::p_space:
      return make_p_space_refuter(sp);
    default:
      return std::nullopt;
  }
}

int cmd_certify(const std::string& path, std::string property, const std::string& out_path,
                bool do_verify, const std::string& verify_file, const Options& o) {
  if (!verify_file.empty()) {
    CertificateFile cf = parse_certificate_json(read_file(verify_file));
    Instance inst = parse_instance_text(cf.instance_text, "certificate");
    MonoidPtr m = make_monoid(inst.monoid);
    ConeSpace sp{m, cf.variant};
    int R = window_of(o, inst);
    long prefix = prefix_of(o, inst);
    VerificationReport vr = verify(sp, cf.certificate, Window{R}, prefix);
    Report rep;
    rep.command = "certify";
    rep.window = R;
    rep.prefix = prefix;
    rep.instance = InstanceEcho{inst.name, instance_text(inst)};
    SpaceReport sr;
    sr.profile.variant = cf.variant;
    sr.verifications.push_back(vr);
    rep.spaces.push_back(std::move(sr));
    rep.results.emplace_back("certificate", cert_summary(cf.certificate));
    rep.results.emplace_back("verified", vr.pass ? "pass" : "fail");
    emit(rep, o, std::cout);
    return vr.pass ? 0 : 1;
  }

  if (path.empty()) throw input_error("certify needs an instance file or --verify-file");
  if (property.empty()) throw input_error("certify needs --property");
  for (char& c : property) c = c == '-' ? '_' : char(std::toupper(static_cast<unsigned char>(c)));
  std::optional<PropertyName> prop = parse_property(property);
  if (!prop) throw input_error("unknown property '" + property + "'");
  if (o.space == "both") throw input_error("certify needs a single --space");
  Instance inst = parse_instance_file(path);
  MonoidPtr m = make_monoid(inst.monoid);
  Variant var = single_space_of(o.space);
  ConeSpace sp{m, var};
  PropertyProfile prof = evaluate(sp);
  const Verdict* v = prof.find(*prop);
  if (!v)
    throw input_error(std::string("property ") + property_str(*prop) +
                      " is not recorded for the " + variant_str(var) + " variant");
  int R = window_of(o, inst);
  long prefix = prefix_of(o, inst);

  Report rep;
  rep.command = "certify";
  rep.window = R;
  rep.prefix = prefix;
  rep.instance = InstanceEcho{inst.name, instance_text(inst)};
  rep.results.emplace_back("property", property_str(*prop));
  rep.results.emplace_back("space", variant_str(var));
  rep.results.emplace_back("holds", v->holds ? "true" : "false");
  rep.results.emplace_back("basis", v->basis);

  std::optional<Certificate> cert = make_for(*prop, sp, v->holds);
  SpaceReport sr;
  sr.profile.variant = var;
  Verdict verdict = *v;
  verdict.certificate = cert;
  sr.profile.verdicts.emplace_back(*prop, verdict);
  int code = 0;
  if (cert) {
    rep.results.emplace_back("certificate", cert_summary(*cert));
    if (do_verify) {
      VerificationReport vr = verify(sp, *cert, Window{R}, prefix);
      if (!vr.pass) code = 1;
      rep.results.emplace_back("verified", vr.pass ? "pass" : "fail");
      sr.verifications.push_back(std::move(vr));
    }
    if (!out_path.empty()) {
      CertificateFile cf;
      cf.instance_text = instance_text(inst);
      cf.variant = var;
      cf.certificate = *cert;
      std::ofstream out(out_path);
      if (!out) throw input_error("cannot write " + out_path);
      out << emit_json(cf);
      rep.results.emplace_back("out", out_path);
    }
  } else {
    rep.results.emplace_back("certificate",
                             v->holds ? "none: the property holds" : "none for this property");
    if (!out_path.empty())
      throw input_error("no certificate to write for " + std::string(property_str(*prop)));
  }
  rep.spaces.push_back(std::move(sr));
  emit(rep, o, std::cout);
  return code;
}

DescribedSet random_set(std::mt19937& rng, const GroupSpec& g) {
  std::uniform_int_distribution<int> natoms(1, 3), nkind(0, 3), coord(-2, 2);
  DescribedSet a;
  int k = natoms(rng);
  for (int i = 0; i < k; ++i) {
    IntVec v;
    for (int j = 0; j < g.rank; ++j) v.push_back(coord(rng));
    for (size_t j = 0; j < g.torsion.size(); ++j) {
      std::uniform_int_distribution<long> tc(0, to_long(g.torsion[j]) - 1);
      v.push_back(tc(rng));
    }
    a.atoms.push_back(Atom{static_cast<AtomKind>(nkind(rng)), element(g, v)});
  }
  return a;
}

// w lies in the closure of the atom iff the minimal neighborhood w+S meets it.
// Each kind reduces to one exact membership test: a point b or a set b-S meets
// w+S iff b-w is in S; b+S or b+span meets w+S iff b-w is in span(S).
bool meets_nbhd(const Monoid& m, const Atom& a, const GroupElement& w) {
  GroupElement d = sub(m.group(), a.base, w);
  if (a.kind == AtomKind::point || a.kind == AtomKind::minus_monoid) return m.member(d);
  return m.span().contains(d);
}

int cmd_window_check(const std::string& path, int sets, unsigned long seed, const Options& o) {
  Instance inst = parse_instance_file(path);
  MonoidPtr m = make_monoid(inst.monoid);
  if (o.space == "cone-star")
    throw input_error("window-check compares symbolic closures, which only the cone variant has");
  ConeSpace sp{m, Variant::cone};
  int R = window_of(o, inst);
  WindowPoints win(m->group(), R);
  std::mt19937 rng(seed);
  Report rep;
  rep.command = "window-check";
  rep.window = R;
  rep.prefix = prefix_of(o, inst);
  rep.instance = InstanceEcho{inst.name, instance_text(inst)};
  long boundary = 0, mismatches = 0;
  auto flag = [&](const std::string& set, const GroupElement& w, const std::string& what) {
    ++mismatches;
    if (mismatches <= 20)
      rep.notes.push_back("set " + set + ": point " + vec_str(w.coords) + " " + what);
  };
  for (int t = 0; t < sets; ++t) {
    DescribedSet a = random_set(rng, m->group());
    DescribedSet cl = closure(sp, a);
    std::vector<char> flags(win.size());
    for (size_t i = 0; i < win.size(); ++i) flags[i] = set_contains(sp, a, win.points()[i]);
    std::vector<char> trace = window_trace_closure(sp, win, flags);
    std::string lit = set_str(a);
    for (size_t i = 0; i < win.size(); ++i) {
      const GroupElement& w = win.points()[i];
      bool exact = false, local = false;  // local: some witness provably inside the window
      for (const Atom& atom : a.atoms) {
        if (!meets_nbhd(*m, atom, w)) continue;
        exact = true;
        // for these kinds the witness is the base point or w itself, both in
        // the window; only a +S atom can push every witness past the boundary
        if (atom.kind != AtomKind::plus_monoid) local = true;
      }
      if (set_contains(sp, cl, w) != exact)
        flag(lit, w, exact ? "meets every neighborhood but the symbolic closure misses it"
                           : "is symbolically closed though w+S misses the set");
      if (trace[i] && !exact) flag(lit, w, "is traced closed though w+S misses the set");
      if (exact && !trace[i]) {
        if (local)
          flag(lit, w, "has an in-window witness the trace does not see");
        else
          ++boundary;  // witness beyond the window: legitimate truncation
      }
    }
  }
  rep.results.emplace_back("sets", std::to_string(sets));
  rep.results.emplace_back("points per set", std::to_string(win.size()));
  rep.results.emplace_back("boundary-skipped point checks", std::to_string(boundary));
  rep.results.emplace_back("mismatches", std::to_string(mismatches));
  emit(rep, o, std::cout);
  if (mismatches > 0) {
    std::cerr << "internal invariant breach: symbolic, exact and traced closures disagree\n";
    return 3;
  }
  return 0;
}

// Independent oracle: try every family of subsets containing {} and X, count
// the ones closed under union and intersection.
long filter_all_families(int n) {
  int m = 1 << n;
  std::vector<Bits> mid;
  for (Bits s = 1; s + 1 < Bits(m); ++s) mid.push_back(s);
  Bits full = Bits(m - 1);
  long count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << mid.size()); ++mask) {
    std::vector<Bits> fam = {0, full};
    for (size_t i = 0; i < mid.size(); ++i)
      if (mask >> i & 1) fam.push_back(mid[i]);
    auto has = [&](Bits s) { return std::find(fam.begin(), fam.end(), s) != fam.end(); };
    bool ok = true;
    for (size_t i = 0; i < fam.size() && ok; ++i)
      for (size_t j = i + 1; j < fam.size() && ok; ++j)
        ok = has(fam[i] & fam[j]) && has(fam[i] | fam[j]);
    if (ok) ++count;
  }
  return count;
}

int cmd_fintop_enumerate(int n, bool cross_check, const Options& o) {
  std::vector<FinTopology> all = enumerate_topologies(n);
  Report rep;
  rep.command = "fintop enumerate";
  rep.results.emplace_back("points", std::to_string(n));
  rep.results.emplace_back("topologies", std::to_string(all.size()));
  int code = 0;
  if (cross_check) {
    long oracle = filter_all_families(n);
    rep.results.emplace_back("filter oracle", std::to_string(oracle));
    if (oracle != long(all.size())) {
      rep.notes.push_back("enumeration disagrees with the filter oracle");
      code = 3;
    }
  }
  emit(rep, o, std::cout);
  return code;
}

int cmd_fintop_lemmas(int n, const Options& o) {
  Report rep;
  rep.command = "fintop verify-lemmas";
  rep.lemmas = verify_lemmas(n);
  emit(rep, o, std::cout);
  return rep.lemmas->counterexamples == 0 ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cone topologies on finitely generated abelian groups"};
  app.require_subcommand(1);

  Options prof_o, mem_o, clo_o, lim_o, cert_o, win_o, fin_o;
  std::string prof_path, mem_path, mem_points, clo_path, clo_set;
  std::string lim_path, lim_terms, lim_branches, lim_probes;
  std::string cert_path, cert_prop, cert_out, cert_vfile;
  std::string win_path;
  bool prof_all = false, cert_verify = false, fin_cross = false;
  int win_sets = 10, fin_points = 0;
  unsigned long win_seed = 0;

  CLI::App* profile = app.add_subcommand("profile", "evaluate property profiles");
  profile->add_option("instance", prof_path, "instance file (or corpus dir with --all)");
  profile->add_flag("--all", prof_all, "profile every .inst file in a corpus directory");
  add_common(profile, prof_o, true);

  CLI::App* member = app.add_subcommand("member", "decide monoid membership");
  member->add_option("instance", mem_path)->required();
  member->add_option("--points", mem_points, "points, e.g. [[3,2],[0,1]]")->required();
  add_common(member, mem_o, false);

  CLI::App* closure_cmd = app.add_subcommand("closure", "symbolic closure of a described set");
  closure_cmd->add_option("instance", clo_path)->required();
  closure_cmd->add_option("--set", clo_set, "atoms, e.g. [1,0]+S;[2,2];[0,1]-S;[1,1]+span")
      ->required();
  add_common(closure_cmd, clo_o, true);

  CLI::App* limits_cmd = app.add_subcommand("limits", "limit points of a sequence");
  limits_cmd->add_option("instance", lim_path)->required();
  limits_cmd->add_option("--terms", lim_terms, "explicit terms, e.g. [0];[1];[4]");
  limits_cmd->add_option("--branches", lim_branches,
                         "interleaved affine branches, e.g. [0,0]->[1,0];[1,1]->[0,1]");
  limits_cmd->add_option("--probes", lim_probes, "cone-star probe parameters, e.g. [0];[1]");
  add_common(limits_cmd, lim_o, true);

  CLI::App* certify = app.add_subcommand("certify", "construct and verify witnesses");
  certify->add_option("instance", cert_path);
  certify->add_option("--property", cert_prop, "property name, e.g. pseudocompact");
  certify->add_flag("--verify", cert_verify, "verify the constructed certificate");
  certify->add_option("--out", cert_out, "write the certificate to a file");
  certify->add_option("--verify-file", cert_vfile, "re-verify a stored certificate file");
  add_common(certify, cert_o, true);
  cert_o.space = "cone";

  CLI::App* wincheck = app.add_subcommand("window-check",
                                          "compare symbolic and traced closures");
  wincheck->add_option("instance", win_path)->required();
  wincheck->add_option("--sets", win_sets, "number of random sets")->check(CLI::Range(1, 1000));
  wincheck->add_option("--seed", win_seed, "random seed");
  add_common(wincheck, win_o, true);

  CLI::App* fintop = app.add_subcommand("fintop", "finite topological space engine");
  fintop->require_subcommand(1);
  CLI::App* fenum = fintop->add_subcommand("enumerate", "count all topologies on n points");
  fenum->add_option("--points", fin_points, "ground set size")->required()->check(CLI::Range(1, 4));
  fenum->add_flag("--cross-check", fin_cross, "compare against the filter-all-families oracle");
  add_common(fenum, fin_o, false);
  CLI::App* flem = fintop->add_subcommand("verify-lemmas", "exhaustive cowide lemma check");
  flem->add_option("--points", fin_points, "ground set size")->required()->check(CLI::Range(1, 4));
  add_common(flem, fin_o, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (profile->parsed()) return cmd_profile(prof_path, prof_all, prof_o);
    if (member->parsed()) return cmd_member(mem_path, mem_points, mem_o);
    if (closure_cmd->parsed()) return cmd_closure(clo_path, clo_set, clo_o);
    if (limits_cmd->parsed())
      return cmd_limits(lim_path, lim_terms, lim_branches, lim_probes, lim_o);
    if (certify->parsed())
      return cmd_certify(cert_path, cert_prop, cert_out, cert_verify, cert_vfile, cert_o);
    if (wincheck->parsed()) return cmd_window_check(win_path, win_sets, win_seed, win_o);
    if (fintop->parsed()) {
      if (fenum->parsed()) return cmd_fintop_enumerate(fin_points, fin_cross, fin_o);
      if (flem->parsed()) return cmd_fintop_lemmas(fin_points, fin_o);
    }
    throw input_error("no subcommand");
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const contract_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const internal_error& e) {
    std::cerr << "internal invariant breach: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
