#include "tvk/report.hpp"

#include <cstdio>

namespace tvk {

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::string digest_string(std::string_view payload) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "fnv1a64:%016llx",
                static_cast<unsigned long long>(fnv1a64(payload)));
  return buffer;
}

nlohmann::ordered_json make_report(std::string_view command,
                                   std::string_view inputs_digest,
                                   nlohmann::ordered_json results,
                                   const std::vector<InvariantCheck>& checks) {
  nlohmann::ordered_json report;
  report["schema"] = kReportSchema;
  report["command"] = command;
  report["toolVersion"] = kToolVersion;
  report["inputsDigest"] = inputs_digest;
  report["results"] = std::move(results);
  nlohmann::ordered_json check_list = nlohmann::ordered_json::array();
  for (const InvariantCheck& check : checks) {
    nlohmann::ordered_json row;
    row["name"] = check.name;
    row["pass"] = check.pass;
    row["detail"] = check.detail;
    check_list.push_back(std::move(row));
  }
  report["invariantChecks"] = std::move(check_list);
  return report;
}

}  // namespace tvk
