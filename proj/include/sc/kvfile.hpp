#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sc {

/// Line-oriented `key = value` text. `#` starts a comment; keys may repeat
/// and appear in any order.
class KeyValueFile {
 public:
  struct Entry {
    std::string key;
    std::string value;
    int line = 0;
  };

  static KeyValueFile parse(std::string_view text, std::string source = "<text>");
  static KeyValueFile load(const std::string& path);

  const std::vector<Entry>& entries() const { return entries_; }
  const std::string& source() const { return source_; }

  bool has(std::string_view key) const;
  /// The single value for `key`; throws SpecError if absent or repeated.
  const Entry& require(std::string_view key) const;
  std::optional<std::string> get(std::string_view key) const;
  std::vector<const Entry*> all(std::string_view key) const;
  /// Distinct middle components of keys shaped `prefix.NAME.rest`, in
  /// first-appearance order.
  std::vector<std::string> sections(std::string_view prefix) const;

  /// "file:line: message"
  std::string where(const Entry& e) const;

 private:
  std::vector<Entry> entries_;
  std::string source_;
};

std::vector<std::string> split_words(std::string_view text);
std::string trim(std::string_view s);

}  // namespace sc
