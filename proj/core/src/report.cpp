#include <conetop/report.hpp>

#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace conetop {

namespace {

using nlohmann::json;

json enc_int(const Int& v) {
  if (v.fits_slong_p()) return json(v.get_si());
  return json(v.get_str());
}

Int dec_int(const json& j) {
  if (j.is_number_integer()) return Int(long(j.get<long long>()));
  if (j.is_string()) return Int(j.get<std::string>());
  throw input_error("report: expected an integer or decimal string");
}

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw input_error(std::string("report: missing field '") + key + "'");
  return *it;
}

json enc_vec(const IntVec& v) {
  json a = json::array();
  for (const Int& x : v) a.push_back(enc_int(x));
  return a;
}

IntVec dec_vec(const json& j) {
  if (!j.is_array()) throw input_error("report: expected a coordinate array");
  IntVec v;
  for (const json& x : j) v.push_back(dec_int(x));
  return v;
}

json enc_elem(const GroupElement& x) { return enc_vec(x.coords); }
GroupElement dec_elem(const json& j) { return GroupElement{dec_vec(j)}; }

json enc_seq(const SequenceRule& s) {
  json j;
  j["explicit"] = s.is_explicit;
  json terms = json::array();
  for (const GroupElement& t : s.terms) terms.push_back(enc_elem(t));
  j["terms"] = terms;
  json branches = json::array();
  for (const AffineBranch& b : s.branches)
    branches.push_back(json{{"start", enc_elem(b.start)}, {"step", enc_elem(b.step)}});
  j["branches"] = branches;
  return j;
}

SequenceRule dec_seq(const json& j) {
  SequenceRule s;
  s.is_explicit = field(j, "explicit").get<bool>();
  for (const json& t : field(j, "terms")) s.terms.push_back(dec_elem(t));
  for (const json& b : field(j, "branches"))
    s.branches.push_back(AffineBranch{dec_elem(field(b, "start")), dec_elem(field(b, "step"))});
  return s;
}

json enc_cert(const Certificate& c) {
  json j;
  j["kind"] = cert_kind_str(c.kind);
  j["point"] = enc_elem(c.point);
  if (c.functional) j["functional"] = enc_vec(c.functional->weights);
  if (!c.reps.empty()) {
    json reps = json::array();
    for (const GroupElement& r : c.reps) reps.push_back(enc_elem(r));
    j["reps"] = reps;
  }
  if (!c.indices.empty()) j["indices"] = c.indices;
  if (c.limit) j["limit"] = enc_elem(*c.limit);
  if (c.seq) j["seq"] = enc_seq(*c.seq);
  return j;
}

Certificate dec_cert(const json& j) {
  Certificate c;
  std::optional<CertKind> k = parse_cert_kind(field(j, "kind").get<std::string>());
  if (!k) throw input_error("report: unknown certificate kind");
  c.kind = *k;
  c.point = dec_elem(field(j, "point"));
  if (j.contains("functional")) c.functional = PositivityFunctional{dec_vec(j["functional"])};
  if (j.contains("reps"))
    for (const json& r : j["reps"]) c.reps.push_back(dec_elem(r));
  if (j.contains("indices")) c.indices = j["indices"].get<std::vector<long>>();
  if (j.contains("limit")) c.limit = dec_elem(j["limit"]);
  if (j.contains("seq")) c.seq = dec_seq(j["seq"]);
  return c;
}

json enc_verification(const VerificationReport& v) {
  return json{{"pass", v.pass},        {"kind", cert_kind_str(v.kind)},
              {"window", v.window_radius}, {"prefix", v.prefix},
              {"checks", v.checks},    {"failure", v.failure}};
}

VerificationReport dec_verification(const json& j) {
  VerificationReport v;
  v.pass = field(j, "pass").get<bool>();
  std::optional<CertKind> k = parse_cert_kind(field(j, "kind").get<std::string>());
  if (!k) throw input_error("report: unknown certificate kind");
  v.kind = *k;
  v.window_radius = field(j, "window").get<int>();
  v.prefix = field(j, "prefix").get<long>();
  v.checks = field(j, "checks").get<std::vector<std::string>>();
  v.failure = field(j, "failure").get<std::string>();
  return v;
}

json enc_profile(const PropertyProfile& p) {
  json j;
  j["variant"] = variant_str(p.variant);
  json verdicts = json::array();
  for (const auto& [name, v] : p.verdicts) {
    json jv;
    jv["property"] = property_str(name);
    jv["holds"] = v.holds;
    jv["basis"] = v.basis;
    if (v.certificate) jv["certificate"] = enc_cert(*v.certificate);
    verdicts.push_back(jv);
  }
  j["verdicts"] = verdicts;
  j["annotations"] = p.annotations;
  return j;
}

PropertyProfile dec_profile(const json& j) {
  PropertyProfile p;
  std::optional<Variant> var = parse_variant(field(j, "variant").get<std::string>());
  if (!var) throw input_error("report: unknown variant");
  p.variant = *var;
  for (const json& jv : field(j, "verdicts")) {
    std::optional<PropertyName> name = parse_property(field(jv, "property").get<std::string>());
    if (!name) throw input_error("report: unknown property name");
    Verdict v;
    v.holds = field(jv, "holds").get<bool>();
    v.basis = field(jv, "basis").get<std::string>();
    if (jv.contains("certificate")) v.certificate = dec_cert(jv["certificate"]);
    p.verdicts.emplace_back(*name, std::move(v));
  }
  p.annotations = field(j, "annotations").get<std::vector<std::string>>();
  return p;
}

const char* limit_kind_str(LimitKind k) {
  switch (k) {
    case LimitKind::all: return "ALL";
    case LimitKind::empty: return "EMPTY";
    case LimitKind::points: return "POINTS";
  }
  throw internal_error("unknown limit kind");
}

LimitKind parse_limit_kind(const std::string& s) {
  if (s == "ALL") return LimitKind::all;
  if (s == "EMPTY") return LimitKind::empty;
  if (s == "POINTS") return LimitKind::points;
  throw input_error("report: unknown limit kind");
}

json enc_limits(const LimitReport& r) {
  json j;
  j["kind"] = limit_kind_str(r.kind);
  j["exact"] = r.exact;
  json pts = json::array();
  for (const GroupElement& p : r.points) pts.push_back(enc_elem(p));
  j["points"] = pts;
  j["checked_prefix"] = r.checked_prefix;
  j["window"] = r.window_radius;
  json esc = json::array();
  for (const auto& [p, n] : r.escapes)
    esc.push_back(json{{"point", enc_elem(p)}, {"index", n}});
  j["escapes"] = esc;
  j["method"] = r.method;
  return j;
}

LimitReport dec_limits(const json& j) {
  LimitReport r;
  r.kind = parse_limit_kind(field(j, "kind").get<std::string>());
  r.exact = field(j, "exact").get<bool>();
  for (const json& p : field(j, "points")) r.points.push_back(dec_elem(p));
  r.checked_prefix = field(j, "checked_prefix").get<long>();
  r.window_radius = field(j, "window").get<int>();
  for (const json& e : field(j, "escapes"))
    r.escapes.emplace_back(dec_elem(field(e, "point")), field(e, "index").get<long>());
  r.method = field(j, "method").get<std::string>();
  return r;
}

json enc_lemmas(const LemmaReport& r) {
  return json{{"points", r.n},
              {"pairs_total", r.pairs_total},
              {"cowide_pairs", r.cowide_pairs},
              {"wide_sigma_pairs", r.wide_sigma_pairs},
              {"closure_checks", r.closure_checks},
              {"regularization_checks", r.regularization_checks},
              {"counterexamples", r.counterexamples},
              {"details", r.details}};
}

LemmaReport dec_lemmas(const json& j) {
  LemmaReport r;
  r.n = field(j, "points").get<int>();
  r.pairs_total = field(j, "pairs_total").get<long>();
  r.cowide_pairs = field(j, "cowide_pairs").get<long>();
  r.wide_sigma_pairs = field(j, "wide_sigma_pairs").get<long>();
  r.closure_checks = field(j, "closure_checks").get<long>();
  r.regularization_checks = field(j, "regularization_checks").get<long>();
  r.counterexamples = field(j, "counterexamples").get<long>();
  r.details = field(j, "details").get<std::vector<std::string>>();
  return r;
}

json enc_space(const SpaceReport& s) {
  json j;
  j["profile"] = enc_profile(s.profile);
  json vers = json::array();
  for (const VerificationReport& v : s.verifications) vers.push_back(enc_verification(v));
  j["verifications"] = vers;
  j["implication_violations"] = s.implication_violations;
  return j;
}

SpaceReport dec_space(const json& j) {
  SpaceReport s;
  s.profile = dec_profile(field(j, "profile"));
  for (const json& v : field(j, "verifications")) s.verifications.push_back(dec_verification(v));
  s.implication_violations = field(j, "implication_violations").get<std::vector<std::string>>();
  return s;
}

}  // namespace

std::string emit_json(const Report& r) {
  json j;
  j["schema"] = r.schema;
  j["tool"] = r.tool;
  j["version"] = r.version;
  j["command"] = r.command;
  j["window"] = r.window;
  j["prefix"] = r.prefix;
  if (r.instance)
    j["instance"] = json{{"name", r.instance->name}, {"text", r.instance->text}};
  json spaces = json::array();
  for (const SpaceReport& s : r.spaces) spaces.push_back(enc_space(s));
  j["spaces"] = spaces;
  j["cross_violations"] = r.cross_violations;
  json results = json::array();
  for (const auto& [k, v] : r.results) results.push_back(json{{"key", k}, {"value", v}});
  j["results"] = results;
  j["notes"] = r.notes;
  if (r.limits) j["limits"] = enc_limits(*r.limits);
  if (r.lemmas) j["lemmas"] = enc_lemmas(*r.lemmas);
  return j.dump(2) + "\n";
}

Report parse_report_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw input_error(std::string("report: ") + e.what());
  }
  try {
    Report r;
    r.schema = field(j, "schema").get<std::string>();
    if (r.schema != report_schema)
      throw input_error("report: unsupported schema '" + r.schema + "'");
    r.tool = field(j, "tool").get<std::string>();
    r.version = field(j, "version").get<std::string>();
    r.command = field(j, "command").get<std::string>();
    r.window = field(j, "window").get<int>();
    r.prefix = field(j, "prefix").get<long>();
    if (j.contains("instance"))
      r.instance = InstanceEcho{field(j["instance"], "name").get<std::string>(),
                                field(j["instance"], "text").get<std::string>()};
    for (const json& s : field(j, "spaces")) r.spaces.push_back(dec_space(s));
    r.cross_violations = field(j, "cross_violations").get<std::vector<std::string>>();
    for (const json& kv : field(j, "results"))
      r.results.emplace_back(field(kv, "key").get<std::string>(),
                             field(kv, "value").get<std::string>());
    r.notes = field(j, "notes").get<std::vector<std::string>>();
    if (j.contains("limits")) r.limits = dec_limits(j["limits"]);
    if (j.contains("lemmas")) r.lemmas = dec_lemmas(j["lemmas"]);
    return r;
  } catch (const json::exception& e) {
    throw input_error(std::string("report: ") + e.what());
  }
}

namespace {

std::string cert_line(const Certificate& c) {
  std::ostringstream os;
  os << cert_kind_str(c.kind) << " point=" << vec_str(c.point.coords);
  if (c.functional) os << " functional=" << vec_str(c.functional->weights);
  if (!c.reps.empty()) {
    os << " reps=";
    for (size_t i = 0; i < c.reps.size(); ++i) {
      if (i) os << "+";
      os << vec_str(c.reps[i].coords);
    }
  }
  if (!c.indices.empty()) {
    os << " indices=";
    for (size_t i = 0; i < c.indices.size(); ++i) {
      if (i) os << ",";
      os << c.indices[i];
    }
  }
  if (c.limit) os << " limit=" << vec_str(c.limit->coords);
  return os.str();
}

}  // namespace

std::string render_text(const Report& r) {
  std::ostringstream os;
  os << r.tool << " " << r.version << " " << r.command << " (window " << r.window
     << ", prefix " << r.prefix << ")\n";
  if (r.instance) {
    os << "instance " << (r.instance->name.empty() ? "<inline>" : r.instance->name) << "\n";
    std::istringstream lines(r.instance->text);
    std::string line;
    while (std::getline(lines, line)) os << "  " << line << "\n";
  }
  for (const SpaceReport& s : r.spaces) {
    os << "space " << variant_str(s.profile.variant) << "\n";
    for (const auto& [name, v] : s.profile.verdicts) {
      os << "  " << std::left << std::setw(27) << property_str(name)
         << (v.holds ? "yes  " : "no   ") << v.basis << "\n";
      if (v.certificate) os << "      certificate: " << cert_line(*v.certificate) << "\n";
    }
    for (const std::string& a : s.profile.annotations) os << "  note: " << a << "\n";
    for (const VerificationReport& v : s.verifications) {
      os << "  verify " << cert_kind_str(v.kind) << ": " << (v.pass ? "pass" : "FAIL")
         << " (window " << v.window_radius << ", prefix " << v.prefix << ")\n";
      if (!v.pass) os << "    failure: " << v.failure << "\n";
    }
    if (s.implication_violations.empty()) {
      os << "  implication violations: none\n";
    } else {
      for (const std::string& x : s.implication_violations)
        os << "  implication violation: " << x << "\n";
    }
  }
  if (r.spaces.size() > 1 || !r.cross_violations.empty()) {
    if (r.cross_violations.empty()) {
      os << "cross-variant violations: none\n";
    } else {
      for (const std::string& x : r.cross_violations)
        os << "cross-variant violation: " << x << "\n";
    }
  }
  for (const auto& [k, v] : r.results) os << k << ": " << v << "\n";
  for (const std::string& n : r.notes) os << "note: " << n << "\n";
  if (r.limits) {
    const LimitReport& l = *r.limits;
    os << "limits: " << limit_kind_str(l.kind) << (l.exact ? " (exact)" : " (prefix-checked)")
       << " checked_prefix=" << l.checked_prefix << " window=" << l.window_radius << "\n";
    if (l.kind == LimitKind::points) {
      os << "  points:";
      for (const GroupElement& p : l.points) os << " " << vec_str(p.coords);
      os << "\n";
    }
    os << "  method: " << l.method << "\n";
  }
  if (r.lemmas) {
    const LemmaReport& l = *r.lemmas;
    os << "lemma check n=" << l.n << ": pairs=" << l.pairs_total
       << " cowide=" << l.cowide_pairs << " wide_sigma=" << l.wide_sigma_pairs
       << " closure_checks=" << l.closure_checks
       << " regularization_checks=" << l.regularization_checks
       << " counterexamples=" << l.counterexamples << "\n";
    for (const std::string& d : l.details) os << "  counterexample: " << d << "\n";
  }
  return os.str();
}

std::string emit_json(const CertificateFile& c) {
  json j;
  j["schema"] = c.schema;
  j["instance"] = c.instance_text;
  j["variant"] = variant_str(c.variant);
  j["certificate"] = enc_cert(c.certificate);
  return j.dump(2) + "\n";
}

CertificateFile parse_certificate_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw input_error(std::string("certificate file: ") + e.what());
  }
  try {
    CertificateFile c;
    c.schema = field(j, "schema").get<std::string>();
    if (c.schema != certificate_schema)
      throw input_error("certificate file: unsupported schema '" + c.schema + "'");
    c.instance_text = field(j, "instance").get<std::string>();
    std::optional<Variant> var = parse_variant(field(j, "variant").get<std::string>());
    if (!var) throw input_error("certificate file: unknown variant");
    c.variant = *var;
    c.certificate = dec_cert(field(j, "certificate"));
    return c;
  } catch (const json::exception& e) {
    throw input_error(std::string("certificate file: ") + e.what());
  }
}

}  // namespace conetop
