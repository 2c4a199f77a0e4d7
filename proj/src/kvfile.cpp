#include "sc/kvfile.hpp"

#include <fstream>
#include <sstream>

#include "sc/factor.hpp"

namespace sc {

std::string trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_words(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

KeyValueFile KeyValueFile::parse(std::string_view text, std::string source) {
  KeyValueFile kv;
  kv.source_ = std::move(source);
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::string t = trim(line);
    if (t.empty()) continue;
    auto eq = t.find('=');
    if (eq == std::string::npos)
      throw SpecError(kv.source_ + ":" + std::to_string(lineno) + ": expected 'key = value'");
    std::string key = trim(std::string_view(t).substr(0, eq));
    if (key.empty())
      throw SpecError(kv.source_ + ":" + std::to_string(lineno) + ": empty key");
    kv.entries_.push_back({key, trim(std::string_view(t).substr(eq + 1)), lineno});
  }
  return kv;
}

KeyValueFile KeyValueFile::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path);
}

bool KeyValueFile::has(std::string_view key) const {
  for (const auto& e : entries_)
    if (e.key == key) return true;
  return false;
}

const KeyValueFile::Entry& KeyValueFile::require(std::string_view key) const {
  auto found = all(key);
  if (found.empty()) throw SpecError(source_ + ": missing key '" + std::string(key) + "'");
  if (found.size() > 1)
    throw SpecError(where(*found[1]) + ": key '" + std::string(key) + "' given twice");
  return *found[0];
}

std::optional<std::string> KeyValueFile::get(std::string_view key) const {
  auto found = all(key);
  if (found.empty()) return std::nullopt;
  if (found.size() > 1)
    throw SpecError(where(*found[1]) + ": key '" + std::string(key) + "' given twice");
  return found[0]->value;
}

std::vector<const KeyValueFile::Entry*> KeyValueFile::all(std::string_view key) const {
  std::vector<const Entry*> out;
  for (const auto& e : entries_)
    if (e.key == key) out.push_back(&e);
  return out;
}

std::vector<std::string> KeyValueFile::sections(std::string_view prefix) const {
  std::vector<std::string> out;
  std::string p = std::string(prefix) + ".";
  for (const auto& e : entries_) {
    if (e.key.rfind(p, 0) != 0) continue;
    std::string rest = e.key.substr(p.size());
    std::string name = rest.substr(0, rest.find('.'));
    bool seen = false;
    for (const auto& n : out) seen = seen || n == name;
    if (!seen) out.push_back(name);
  }
  return out;
}

std::string KeyValueFile::where(const Entry& e) const {
  return source_ + ":" + std::to_string(e.line);
}

}  // namespace sc
