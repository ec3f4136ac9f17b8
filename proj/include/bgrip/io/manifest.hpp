#ifndef BGRIP_IO_MANIFEST_HPP
#define BGRIP_IO_MANIFEST_HPP

#include <ctime>
#include <string>
#include <vector>

namespace bgrip {

#ifndef BGRIP_VERSION
#define BGRIP_VERSION "0.0.0"
#endif

/// Written next to every output set. The timestamp is the only field that
/// changes between identical runs; it never appears in a CSV.
struct RunManifest {
  std::string config_hash;
  std::string version = BGRIP_VERSION;
  std::string command;
  std::string timestamp;
  std::vector<std::string> outputs;
};

inline std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

inline std::string serialize_manifest(const RunManifest &m) {
  std::string out;
  out += "config_hash = " + m.config_hash + "\n";
  out += "version = " + m.version + "\n";
  out += "command = " + m.command + "\n";
  out += "timestamp = " + m.timestamp + "\n";
  for (std::size_t i = 0; i < m.outputs.size(); ++i)
    out += "output." + std::to_string(i) + " = " + m.outputs[i] + "\n";
  return out;
}

} // namespace bgrip

#endif // BGRIP_IO_MANIFEST_HPP
