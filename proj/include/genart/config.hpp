#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>

namespace genart {

// Flat `key = value` file with `#` comments. Unknown keys are the caller's
// problem; this is just the carrier format.
class KeyValueFile {
 public:
  static KeyValueFile parse_file(const std::filesystem::path& path);
  static KeyValueFile parse_text(const std::string& text);

  bool has(const std::string& key) const { return values_.count(key) > 0; }
  std::optional<std::string> get(const std::string& key) const;

  std::string get_string(const std::string& key, const std::string& fallback) const;
  std::int64_t get_int(const std::string& key, std::int64_t fallback) const;
  double get_real(const std::string& key, double fallback) const;

  const std::map<std::string, std::string>& values() const { return values_; }

 private:
  std::map<std::string, std::string> values_;
};

}  // namespace genart
