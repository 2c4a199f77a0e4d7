#include "sc/spectrum_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "sc/kvfile.hpp"

namespace sc {

namespace {

std::vector<std::size_t> parse_lengths(const std::string& text, const std::string& where) {
  std::vector<std::size_t> out;
  std::string cleaned = text;
  for (char& ch : cleaned)
    if (ch == ',') ch = ' ';
  for (const auto& w : split_words(cleaned)) {
    try {
      std::size_t used = 0;
      unsigned long v = std::stoul(w, &used);
      if (used != w.size()) throw std::invalid_argument(w);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ParseError(where + ": '" + w + "' is not a length");
    }
  }
  return out;
}

}  // namespace

TruncatedSpectrum parse_spectrum(const std::string& text, const std::string& source) {
  KeyValueFile kv = KeyValueFile::parse(text, source);
  const auto& h = kv.require("horizon");
  auto hs = parse_lengths(h.value, kv.where(h));
  if (hs.size() != 1) throw ParseError(kv.where(h) + ": horizon must be one number");
  const std::size_t horizon = hs[0];
  std::vector<std::size_t> in, unknown;
  for (const auto& v : kv.all("in")) {
    auto ls = parse_lengths(v->value, kv.where(*v));
    in.insert(in.end(), ls.begin(), ls.end());
  }
  for (const auto& v : kv.all("unknown")) {
    auto ls = parse_lengths(v->value, kv.where(*v));
    unknown.insert(unknown.end(), ls.begin(), ls.end());
  }
  return TruncatedSpectrum::from_sets(horizon, in, unknown, kv.get("provenance").value_or("declared"));
}

TruncatedSpectrum load_spectrum(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw SpecError("cannot open spectrum file " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_spectrum(ss.str(), path);
}

std::string format_spectrum(const TruncatedSpectrum& s) {
  std::ostringstream out;
  out << "horizon = " << s.horizon << "\n";
  if (!s.provenance.empty()) out << "provenance = " << s.provenance << "\n";
  for (Taut t : {Taut::in, Taut::unknown}) {
    auto ls = s.lengths(t);
    if (ls.empty()) continue;
    out << to_string(t) << " =";
    for (auto l : ls) out << ' ' << l;
    out << "\n";
  }
  return out.str();
}

TruncatedSpectrum parse_inline_spectrum(const std::string& spec) {
  auto at = spec.find('@');
  if (at == std::string::npos) throw ParseError("inline spectrum '" + spec + "' lacks '@HORIZON'");
  std::string body = spec.substr(0, at);
  std::size_t horizon = 0;
  try {
    horizon = std::stoul(spec.substr(at + 1));
  } catch (const std::exception&) {
    throw ParseError("inline spectrum '" + spec + "' has a bad horizon");
  }
  std::string in_part = body, unknown_part;
  if (auto q = body.find('?'); q != std::string::npos) {
    in_part = body.substr(0, q);
    unknown_part = body.substr(q + 1);
  }
  return TruncatedSpectrum::from_sets(horizon, parse_lengths(in_part, spec), parse_lengths(unknown_part, spec),
                                      "declared");
}

TruncatedSpectrum spectrum_argument(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) return load_spectrum(arg);
  return parse_inline_spectrum(arg);
}

nlohmann::ordered_json to_json(const TruncatedSpectrum& s) {
  nlohmann::ordered_json j;
  j["horizon"] = s.horizon;
  j["provenance"] = s.provenance;
  j["in"] = s.lengths(Taut::in);
  j["unknown"] = s.lengths(Taut::unknown);
  auto& entries = j["entries"] = nlohmann::ordered_json::array();
  for (const auto& [l, e] : s.entries) {
    nlohmann::ordered_json r;
    r["length"] = l;
    r["verdict"] = to_string(e.verdict);
    r["certificate"] = e.certificate;
    if (!e.witness.empty()) r["witness"] = e.witness;
    entries.push_back(std::move(r));
  }
  return j;
}

}  // namespace sc
