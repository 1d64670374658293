#pragma once

#include <string>

#include <conetop/monoid.hpp>
#include <conetop/witness.hpp>

namespace conetop {

struct InstanceOptions {
  int window = default_window_radius;
  long prefix = default_prefix;
  bool operator==(const InstanceOptions&) const = default;
};

struct Instance {
  std::string name;  // file stem; empty when parsed from bare text
  MonoidSpec monoid;
  InstanceOptions options;
  bool operator==(const Instance&) const = default;
};

// Line-oriented `section.key = value` format, one key per line, '#' comments.
// Keys: group.rank, group.torsion, monoid.kind (generated | lex),
// monoid.generators, monoid.lex_rank, options.window, options.prefix.
// Torsion is canonicalized on parse; generator coordinates follow the layout
// of the keys as written and are converted along with it.
Instance parse_instance_text(const std::string& text, const std::string& name = "");
Instance parse_instance_file(const std::string& path);

// Canonical text form; parses back to the same specs.
std::string instance_text(const Instance& inst);

// The "[1,0]" and "[[1,0],[2,3]]" literals of the instance format, for flags.
IntVec parse_vector_literal(const std::string& s);
std::vector<IntVec> parse_vector_list_literal(const std::string& s);

}  // namespace conetop
