#include "sc/presentation.hpp"

#include <algorithm>

namespace sc {

namespace {

std::vector<std::string> split_on(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t at = text.find(sep, start);
    out.push_back(trim(text.substr(start, at == std::string_view::npos ? text.npos : at - start)));
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return out;
}

int parse_int(const KeyValueFile& kv, const KeyValueFile::Entry& e, const std::string& s) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::logic_error&) {
  }
  throw SpecError(kv.where(e) + ": expected an integer, got '" + s + "'");
}

}  // namespace

Factor factor_from_kv(const KeyValueFile& kv, const std::string& prefix, const std::string& label) {
  const std::string base = prefix + "." + label + ".";
  const auto& kind_entry = kv.require(base + "kind");
  const std::string& kind = kind_entry.value;
  try {
    if (kind == "cyclic") {
      const auto& order = kv.require(base + "order");
      std::vector<int> powers{1};
      if (auto p = kv.get(base + "powers")) {
        powers.clear();
        for (const auto& w : split_words(*p)) powers.push_back(parse_int(kv, *kv.all(base + "powers")[0], w));
      }
      return Factor::cyclic(label, kv.require(base + "generator").value,
                            parse_int(kv, order, order.value), powers);
    }
    if (kind == "table") {
      auto names = split_words(kv.require(base + "elements").value);
      const auto& table_entry = kv.require(base + "table");
      std::vector<std::vector<int>> table;
      for (const auto& row_text : split_on(table_entry.value, ';')) {
        std::vector<int> row;
        for (const auto& cell : split_words(row_text)) {
          auto it = std::find(names.begin(), names.end(), cell);
          row.push_back(it != names.end() ? static_cast<int>(it - names.begin())
                                          : parse_int(kv, table_entry, cell));
        }
        table.push_back(std::move(row));
      }
      return Factor::finite(label, names, table, split_words(kv.require(base + "generators").value));
    }
    if (kind == "free") {
      std::vector<std::string> extra;
      if (auto e = kv.get(base + "extra"))
        for (auto& w : split_on(*e, ';'))
          if (!w.empty()) extra.push_back(w);
      return Factor::free(label, split_words(kv.require(base + "basis").value), extra);
    }
  } catch (const ParseError& err) {
    throw SpecError(kv.where(kind_entry) + ": factor " + label + ": " + err.what());
  }
  throw SpecError(kv.where(kind_entry) + ": unknown factor kind '" + kind + "'");
}

Presentation Presentation::from_kv(const KeyValueFile& kv) {
  auto labels = kv.sections("factor");
  if (labels.size() != 2)
    throw SpecError(kv.source() + ": expected exactly two factors, found " + std::to_string(labels.size()));
  std::sort(labels.begin(), labels.end());
  Presentation p{FreeProduct(factor_from_kv(kv, "factor", labels[0]),
                             factor_from_kv(kv, "factor", labels[1])),
                 {}};
  for (const auto* e : kv.all("relator")) {
    try {
      p.relators.push_back(p.group.parse(e->value));
    } catch (const ParseError& err) {
      throw ParseError(kv.where(*e) + ": " + err.what());
    }
  }
  return p;
}

Presentation Presentation::load(const std::string& path) { return from_kv(KeyValueFile::load(path)); }

Presentation Presentation::parse(std::string_view text) { return from_kv(KeyValueFile::parse(text)); }

}  // namespace sc
