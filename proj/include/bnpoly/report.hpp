#pragma once

// Verification report: one document, serialized as JSON or rendered as text.
// The text form only shows fields present in the JSON form.

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#ifndef BNPOLY_VERSION
#define BNPOLY_VERSION "1.0.0"
#endif

namespace bnpoly {

inline constexpr const char* kToolVersion = BNPOLY_VERSION;

struct Check {
  std::string name;
  bool passed = false;
  bool asserted = true;  // false: informational, does not affect the exit code
  std::string expected;
  std::string observed;
  std::string note;

  bool operator==(const Check&) const = default;
};

struct WitnessRecord {
  std::vector<std::size_t> J;
  std::vector<std::size_t> K;
  std::string element;  // cycle notation

  bool operator==(const WitnessRecord&) const = default;
};

struct CStringRecord {
  std::string method;
  bool is_cstring = false;
  std::optional<WitnessRecord> witness;

  bool operator==(const CStringRecord&) const = default;
};

struct FingerprintRecord {
  std::string name;
  std::vector<std::string> generators;  // e.g. "t2", "t3"
  std::uint64_t order = 0;
  std::uint64_t center_order = 0;
  std::uint64_t derived_order = 0;
  std::map<std::uint64_t, std::uint64_t> histogram;  // empty above the brute-force cap
  std::string reference;                            // named group compared against
  bool consistent = false;

  bool operator==(const FingerprintRecord&) const = default;
};

struct QuotientRecord {
  std::string label;
  std::vector<std::string> aliases;
  std::uint64_t index = 0;
  std::string verdict;
  std::string collapse_reason;
  std::optional<WitnessRecord> witness;

  bool operator==(const QuotientRecord&) const = default;
};

struct UnravelRecord {
  std::string method;
  std::vector<QuotientRecord> per_N;
  std::string overall;
  std::string expected;  // empty when no expectation is asserted
  std::vector<std::string> assumptions;

  bool operator==(const UnravelRecord&) const = default;
};

struct VerificationReport {
  std::string tool_version = kToolVersion;
  std::string family;
  unsigned n = 0;
  std::size_t rank = 0;
  std::size_t degree = 0;
  std::vector<std::string> generators;
  std::vector<std::uint64_t> schlafli;
  std::vector<CStringRecord> cstring;
  std::vector<FingerprintRecord> parabolic_fingerprints;
  std::vector<Check> checks;
  std::optional<UnravelRecord> unravelled;
  std::map<std::string, double> timing;  // seconds per phase; empty unless requested

  bool operator==(const VerificationReport&) const = default;

  bool all_asserted_passed() const {
    for (const auto& c : checks)
      if (c.asserted && !c.passed) return false;
    return true;
  }

  std::vector<const Check*> failures() const {
    std::vector<const Check*> out;
    for (const auto& c : checks)
      if (c.asserted && !c.passed) out.push_back(&c);
    return out;
  }
};

using nlohmann::json;

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(Check, name, passed, asserted, expected, observed, note)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(WitnessRecord, J, K, element)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(FingerprintRecord, name, generators, order, center_order, derived_order, histogram,
                                   reference, consistent)

namespace detail {

template <class T>
void put_optional(json& j, const char* key, const std::optional<T>& v) {
  j[key] = v ? json(*v) : json(nullptr);
}

template <class T>
void get_optional(const json& j, const char* key, std::optional<T>& v) {
  if (j.contains(key) && !j.at(key).is_null())
    v = j.at(key).get<T>();
  else
    v.reset();
}

}  // namespace detail

inline void to_json(json& j, const CStringRecord& r) {
  j = json{{"method", r.method}, {"is_cstring", r.is_cstring}};
  detail::put_optional(j, "witness", r.witness);
}
inline void from_json(const json& j, CStringRecord& r) {
  j.at("method").get_to(r.method);
  j.at("is_cstring").get_to(r.is_cstring);
  detail::get_optional(j, "witness", r.witness);
}

inline void to_json(json& j, const QuotientRecord& r) {
  j = json{{"label", r.label},   {"aliases", r.aliases},         {"index", r.index},
           {"verdict", r.verdict}, {"collapse_reason", r.collapse_reason}};
  detail::put_optional(j, "witness", r.witness);
}
inline void from_json(const json& j, QuotientRecord& r) {
  j.at("label").get_to(r.label);
  j.at("aliases").get_to(r.aliases);
  j.at("index").get_to(r.index);
  j.at("verdict").get_to(r.verdict);
  j.at("collapse_reason").get_to(r.collapse_reason);
  detail::get_optional(j, "witness", r.witness);
}

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(UnravelRecord, method, per_N, overall, expected, assumptions)

inline void to_json(json& j, const VerificationReport& r) {
  j = json{{"tool_version", r.tool_version},
           {"family", r.family},
           {"n", r.n},
           {"rank", r.rank},
           {"degree", r.degree},
           {"generators", r.generators},
           {"schlafli", r.schlafli},
           {"cstring", r.cstring},
           {"parabolic_fingerprints", r.parabolic_fingerprints},
           {"checks", r.checks},
           {"timing", r.timing},
           {"passed", r.all_asserted_passed()}};
  detail::put_optional(j, "unravelled", r.unravelled);
}
inline void from_json(const json& j, VerificationReport& r) {
  j.at("tool_version").get_to(r.tool_version);
  j.at("family").get_to(r.family);
  j.at("n").get_to(r.n);
  j.at("rank").get_to(r.rank);
  j.at("degree").get_to(r.degree);
  j.at("generators").get_to(r.generators);
  j.at("schlafli").get_to(r.schlafli);
  j.at("cstring").get_to(r.cstring);
  j.at("parabolic_fingerprints").get_to(r.parabolic_fingerprints);
  j.at("checks").get_to(r.checks);
  j.at("timing").get_to(r.timing);
  detail::get_optional(j, "unravelled", r.unravelled);
}

/// Keys sorted, two-space indent, trailing newline.
inline std::string to_json_text(const VerificationReport& r) { return json(r).dump(2) + "\n"; }

inline VerificationReport report_from_json_text(const std::string& text) {
  return json::parse(text).get<VerificationReport>();
}

namespace detail {

inline std::string join_list(const std::vector<std::size_t>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

inline std::string join_numbers(const std::vector<std::uint64_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + "]";
}

inline std::string describe(const WitnessRecord& w) {
  return "J=" + join_list(w.J) + " K=" + join_list(w.K) + " element " + w.element;
}

}  // namespace detail

inline std::string render_text(const VerificationReport& r) {
  std::ostringstream out;
  out << "bnpoly " << r.tool_version << "\n";
  out << "family " << r.family << "  n=" << r.n << "  rank=" << r.rank << "  degree=" << r.degree << "\n";
  for (std::size_t i = 0; i < r.generators.size(); ++i) out << "  t" << i + 1 << " = " << r.generators[i] << "\n";
  out << "Schlafli symbol " << detail::join_numbers(r.schlafli) << "\n";
  for (const auto& c : r.cstring) {
    out << "C-string (" << c.method << "): " << (c.is_cstring ? "yes" : "no");
    if (c.witness) out << "  witness " << detail::describe(*c.witness);
    out << "\n";
  }
  if (!r.parabolic_fingerprints.empty()) out << "parabolic fingerprints\n";
  for (const auto& f : r.parabolic_fingerprints) {
    out << "  " << f.name << ": order " << f.order << ", center " << f.center_order << ", derived " << f.derived_order;
    if (!f.histogram.empty()) {
      out << ", element orders {";
      bool first = true;
      for (auto [o, k] : f.histogram) {
        out << (first ? "" : ", ") << o << ":" << k;
        first = false;
      }
      out << "}";
    }
    if (!f.reference.empty())
      out << "  " << (f.consistent ? "fingerprint-consistent with " : "differs from ") << f.reference;
    out << "\n";
  }
  out << "checks\n";
  for (const auto& c : r.checks) {
    out << "  [" << (c.passed ? "pass" : (c.asserted ? "FAIL" : "info")) << "] " << c.name;
    if (!c.expected.empty() || !c.observed.empty()) out << "  expected " << c.expected << ", observed " << c.observed;
    if (!c.note.empty()) out << "  (" << c.note << ")";
    out << "\n";
  }
  if (r.unravelled) {
    const auto& u = *r.unravelled;
    out << "unravelled check (" << u.method << ")\n";
    for (const auto& q : u.per_N) {
      out << "  " << q.label;
      for (const auto& a : q.aliases) out << "=" << a;
      out << " (index " << q.index << "): " << q.verdict;
      if (!q.collapse_reason.empty()) out << ", " << q.collapse_reason;
      if (q.witness) out << ", " << detail::describe(*q.witness);
      out << "\n";
    }
    out << "  overall: " << u.overall;
    if (!u.expected.empty()) out << " (expected " << u.expected << ")";
    out << "\n";
    for (const auto& a : u.assumptions) out << "  assumption: " << a << "\n";
  }
  for (const auto& [phase, secs] : r.timing) out << "time " << phase << " " << secs << "s\n";
  out << (r.all_asserted_passed() ? "result: PASS" : "result: FAIL") << "\n";
  return out.str();
}

}  // namespace bnpoly
