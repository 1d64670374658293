#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <conetop/fintop.hpp>
#include <conetop/instance.hpp>
#include <conetop/profile.hpp>

namespace conetop {

inline constexpr const char* report_schema = "conetop.report/1";
inline constexpr const char* certificate_schema = "conetop.certificate/1";
inline constexpr const char* tool_name = "conetop";
inline constexpr const char* tool_version = "0.1.0";

struct InstanceEcho {
  std::string name;
  std::string text;  // canonical instance format
  bool operator==(const InstanceEcho&) const = default;
};

struct SpaceReport {
  PropertyProfile profile;  // carries the variant
  std::vector<VerificationReport> verifications;
  std::vector<std::string> implication_violations;
  bool operator==(const SpaceReport&) const = default;
};

// One report per CLI invocation; unused sections stay empty and are omitted
// from the JSON form only when optional.
struct Report {
  std::string schema = report_schema;
  std::string tool = tool_name;
  std::string version = tool_version;
  std::string command;
  int window = default_window_radius;
  long prefix = default_prefix;
  std::optional<InstanceEcho> instance;
  std::vector<SpaceReport> spaces;
  std::vector<std::string> cross_violations;
  std::vector<std::pair<std::string, std::string>> results;  // ordered key/value
  std::vector<std::string> notes;
  std::optional<LimitReport> limits;
  std::optional<LemmaReport> lemmas;
  bool operator==(const Report&) const = default;
};

std::string emit_json(const Report& r);
Report parse_report_json(const std::string& text);
std::string render_text(const Report& r);

// Standalone certificate files for `certify --out` / `certify --verify-file`.
struct CertificateFile {
  std::string schema = certificate_schema;
  std::string instance_text;
  Variant variant = Variant::cone;
  Certificate certificate;
  bool operator==(const CertificateFile&) const = default;
};

std::string emit_json(const CertificateFile& c);
CertificateFile parse_certificate_json(const std::string& text);

}  // namespace conetop
