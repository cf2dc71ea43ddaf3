#pragma once

#include <string>

#include <json.hpp>

namespace gradalg {

using Json = nlohmann::ordered_json;

enum class Truth { no, yes, undetermined };

inline std::string to_string(Truth t) {
  switch (t) {
    case Truth::yes: return "true";
    case Truth::no: return "false";
    default: return "undetermined";
  }
}

inline Truth truth_of(bool b) { return b ? Truth::yes : Truth::no; }

// Tri-state answer with a human-readable reason and a re-checkable certificate.
struct Verdict {
  Truth truth = Truth::undetermined;
  std::string reason;
  Json certificate;

  bool yes() const { return truth == Truth::yes; }
  bool no() const { return truth == Truth::no; }
  bool determined() const { return truth != Truth::undetermined; }

  static Verdict make(Truth t, std::string reason, Json cert = nullptr) {
    return {t, std::move(reason), std::move(cert)};
  }
};

// Conjunction: false dominates, then undetermined.
inline Truth both(Truth a, Truth b) {
  if (a == Truth::no || b == Truth::no) return Truth::no;
  if (a == Truth::undetermined || b == Truth::undetermined) return Truth::undetermined;
  return Truth::yes;
}

}  // namespace gradalg
