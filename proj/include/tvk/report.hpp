#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace tvk {

inline constexpr std::string_view kToolVersion = "0.1.0";
inline constexpr std::string_view kReportSchema = "transversal-kit/1";

struct InvariantCheck {
  std::string name;
  bool pass;
  std::string detail;
};

std::uint64_t fnv1a64(std::string_view data);

// "fnv1a64:" followed by 16 lowercase hex digits.
std::string digest_string(std::string_view payload);

// Assembles the versioned report envelope. Key order is fixed so identical
// inputs serialize byte-identically.
nlohmann::ordered_json make_report(std::string_view command,
                                   std::string_view inputs_digest,
                                   nlohmann::ordered_json results,
                                   const std::vector<InvariantCheck>& checks);

}  // namespace tvk
