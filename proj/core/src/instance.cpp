#include <conetop/instance.hpp>

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace conetop {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

struct Diag {
  const std::string& name;
  [[noreturn]] void fail(int line, const std::string& msg) const {
    std::ostringstream os;
    if (!name.empty()) os << name << ":";
    os << "line " << line << ": " << msg;
    throw input_error(os.str());
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw input_error(name.empty() ? msg : name + ": " + msg);
  }
};

struct Scanner {
  const std::string& s;
  size_t i = 0;

  void skip_ws() {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  bool done() {
    skip_ws();
    return i == s.size();
  }
  std::optional<Int> integer() {
    skip_ws();
    size_t j = i;
    if (j < s.size() && (s[j] == '-' || s[j] == '+')) ++j;
    size_t digits = j;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == digits) return std::nullopt;
    Int v(s.substr(i, j - i));
    i = j;
    return v;
  }
};

Int parse_int(const std::string& v, const Diag& d, int line) {
  Scanner sc{v};
  std::optional<Int> x = sc.integer();
  if (!x || !sc.done()) d.fail(line, "expected an integer, got '" + v + "'");
  return *x;
}

IntVec parse_vec(Scanner& sc, const Diag& d, int line) {
  if (!sc.eat('[')) d.fail(line, "expected '['");
  IntVec out;
  if (sc.eat(']')) return out;
  while (true) {
    std::optional<Int> x = sc.integer();
    if (!x) d.fail(line, "expected an integer inside the list");
    out.push_back(*x);
    if (sc.eat(']')) return out;
    if (!sc.eat(',')) d.fail(line, "expected ',' or ']' in the list");
  }
}

IntVec parse_int_list(const std::string& v, const Diag& d, int line) {
  Scanner sc{v};
  IntVec out = parse_vec(sc, d, line);
  if (!sc.done()) d.fail(line, "trailing characters after the list");
  return out;
}

std::vector<IntVec> parse_vec_list(const std::string& v, const Diag& d, int line) {
  Scanner sc{v};
  if (!sc.eat('[')) d.fail(line, "expected '['");
  std::vector<IntVec> out;
  if (sc.eat(']')) {
    if (!sc.done()) d.fail(line, "trailing characters after the list");
    return out;
  }
  while (true) {
    out.push_back(parse_vec(sc, d, line));
    if (sc.eat(']')) break;
    if (!sc.eat(',')) d.fail(line, "expected ',' or ']' between vectors");
  }
  if (!sc.done()) d.fail(line, "trailing characters after the list");
  return out;
}

}  // namespace

Instance parse_instance_text(const std::string& text, const std::string& name) {
  Diag d{name};
  std::map<std::string, std::pair<int, std::string>> kv;  // key -> (line, value)
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos) d.fail(line_no, "expected 'section.key = value'");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    static const std::vector<std::string> known = {
        "group.rank",     "group.torsion",    "monoid.kind",   "monoid.generators",
        "monoid.lex_rank", "options.window",  "options.prefix"};
    if (std::find(known.begin(), known.end(), key) == known.end())
      d.fail(line_no, "unknown key '" + key + "'");
    if (kv.count(key)) d.fail(line_no, "duplicate key '" + key + "'");
    if (value.empty()) d.fail(line_no, "missing value for '" + key + "'");
    kv[key] = {line_no, value};
  }

  auto get = [&](const std::string& key) -> const std::pair<int, std::string>* {
    auto it = kv.find(key);
    return it == kv.end() ? nullptr : &it->second;
  };

  const auto* rank_kv = get("group.rank");
  if (!rank_kv) d.fail("missing required key group.rank");
  Int rank_i = parse_int(rank_kv->second, d, rank_kv->first);
  if (rank_i < 0 || rank_i > 16) d.fail(rank_kv->first, "group.rank must be in 0..16");
  int rank = int(to_long(rank_i));

  IntVec torsion;
  if (const auto* t = get("group.torsion")) {
    torsion = parse_int_list(t->second, d, t->first);
    for (const Int& e : torsion)
      if (e < 2) d.fail(t->first, "torsion entries must be >= 2");
  }

  const auto* kind_kv = get("monoid.kind");
  if (!kind_kv) d.fail("missing required key monoid.kind");
  const std::string& kind_s = kind_kv->second;
  if (kind_s != "generated" && kind_s != "lex")
    d.fail(kind_kv->first, "monoid.kind must be 'generated' or 'lex'");

  Instance inst;
  inst.name = name;

  if (kind_s == "lex") {
    if (get("monoid.generators"))
      d.fail(get("monoid.generators")->first,
             "monoid.generators only applies to kind = generated");
    const auto* lr = get("monoid.lex_rank");
    if (!lr) d.fail("missing required key monoid.lex_rank");
    Int k = parse_int(lr->second, d, lr->first);
    if (k < 1 || k > 16) d.fail(lr->first, "monoid.lex_rank must be in 1..16");
    if (!torsion.empty()) d.fail(lr->first, "lex monoids live in torsion-free groups");
    if (Int(rank) != k) d.fail(lr->first, "monoid.lex_rank must equal group.rank");
    inst.monoid = lex_monoid(int(to_long(k)));
  } else {
    if (get("monoid.lex_rank"))
      d.fail(get("monoid.lex_rank")->first, "monoid.lex_rank only applies to kind = lex");
    const auto* gs = get("monoid.generators");
    if (!gs) d.fail("missing required key monoid.generators");
    std::vector<IntVec> raw_gens = parse_vec_list(gs->second, d, gs->first);
    Presentation pres = make_group_spec(rank, torsion);
    size_t arity = size_t(rank) + torsion.size();
    std::vector<GroupElement> gens;
    for (const IntVec& g : raw_gens) {
      if (g.size() != arity)
        d.fail(gs->first, "generator arity " + std::to_string(g.size()) +
                              " does not match rank + torsion = " + std::to_string(arity));
      gens.push_back(element(pres.spec, pres.proj.mul_vec(g)));
    }
    MonoidSpec ms;
    ms.group = pres.spec;
    ms.kind = MonoidKind::generated;
    ms.generators = std::move(gens);
    inst.monoid = std::move(ms);
  }

  if (const auto* w = get("options.window")) {
    Int r = parse_int(w->second, d, w->first);
    if (r < 0 || r > 64) d.fail(w->first, "options.window must be in 0..64");
    inst.options.window = int(to_long(r));
  }
  if (const auto* p = get("options.prefix")) {
    Int n = parse_int(p->second, d, p->first);
    if (n < 1 || n > 100000) d.fail(p->first, "options.prefix must be in 1..100000");
    inst.options.prefix = to_long(n);
  }
  return inst;
}

IntVec parse_vector_literal(const std::string& s) {
  Diag d{s};
  return parse_int_list(s, d, 1);
}

std::vector<IntVec> parse_vector_list_literal(const std::string& s) {
  Diag d{s};
  return parse_vec_list(s, d, 1);
}

Instance parse_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open instance file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  std::string stem = path;
  size_t slash = stem.find_last_of('/');
  if (slash != std::string::npos) stem.erase(0, slash + 1);
  size_t dot = stem.find_last_of('.');
  if (dot != std::string::npos && dot > 0) stem.erase(dot);
  return parse_instance_text(ss.str(), stem);
}

std::string instance_text(const Instance& inst) {
  std::ostringstream os;
  const MonoidSpec& ms = inst.monoid;
  os << "group.rank = " << ms.group.rank << "\n";
  if (!ms.group.torsion.empty()) os << "group.torsion = " << vec_str(ms.group.torsion) << "\n";
  if (ms.kind == MonoidKind::lex) {
    os << "monoid.kind = lex\n";
    os << "monoid.lex_rank = " << ms.lex_rank << "\n";
  } else {
    os << "monoid.kind = generated\n";
    os << "monoid.generators = [";
    for (size_t i = 0; i < ms.generators.size(); ++i) {
      if (i) os << ",";
      os << vec_str(ms.generators[i].coords);
    }
    os << "]\n";
  }
  os << "options.window = " << inst.options.window << "\n";
  os << "options.prefix = " << inst.options.prefix << "\n";
  return os.str();
}

}  // namespace conetop
