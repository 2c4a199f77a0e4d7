#include "sc/words.hpp"

#include <cctype>

namespace sc {

FreeProduct::FreeProduct(Factor a, Factor b) : factors_{std::move(a), std::move(b)} {
  if (factors_[0].label() == factors_[1].label())
    throw SpecError("free product factors need distinct labels");
}

int FreeProduct::factor_index(std::string_view label) const {
  for (int i = 0; i < 2; ++i)
    if (factors_[i].label() == label) return i;
  return -1;
}

NormalForm FreeProduct::syllable(int factor, Element e) const {
  NormalForm w;
  if (!e.empty()) w.syllables.push_back({factor, std::move(e)});
  return w;
}

NormalForm FreeProduct::normalize(std::span<const Syllable> raw) const {
  NormalForm out;
  auto& st = out.syllables;
  st.reserve(raw.size());
  for (const auto& s : raw) {
    if (s.element.empty()) continue;
    if (!st.empty() && st.back().factor == s.factor) {
      Element m = factors_[s.factor].multiply(st.back().element, s.element);
      if (m.empty())
        st.pop_back();
      else
        st.back().element = std::move(m);
    } else {
      st.push_back(s);
    }
  }
  return out;
}

NormalForm FreeProduct::multiply(const NormalForm& u, const NormalForm& v) const {
  if (u.empty()) return v;
  if (v.empty()) return u;
  std::vector<Syllable> raw;
  raw.reserve(u.size() + v.size());
  raw.insert(raw.end(), u.syllables.begin(), u.syllables.end());
  raw.insert(raw.end(), v.syllables.begin(), v.syllables.end());
  return normalize(raw);
}

NormalForm FreeProduct::multiply(std::initializer_list<const NormalForm*> parts) const {
  std::vector<Syllable> raw;
  for (const auto* p : parts) raw.insert(raw.end(), p->syllables.begin(), p->syllables.end());
  return normalize(raw);
}

NormalForm FreeProduct::inverse(const NormalForm& w) const {
  NormalForm out;
  out.syllables.reserve(w.size());
  for (auto it = w.syllables.rbegin(); it != w.syllables.rend(); ++it)
    out.syllables.push_back({it->factor, factors_[it->factor].inverse(it->element)});
  return out;
}

NormalForm FreeProduct::power(const NormalForm& w, long long k) const {
  NormalForm base = k < 0 ? inverse(w) : w;
  unsigned long long m = k < 0 ? static_cast<unsigned long long>(-k)
                               : static_cast<unsigned long long>(k);
  NormalForm acc;
  while (m) {
    if (m & 1) acc = multiply(acc, base);
    m >>= 1;
    if (m) base = multiply(base, base);
  }
  return acc;
}

NormalForm FreeProduct::conjugate(const NormalForm& w, const NormalForm& by) const {
  NormalForm inv = inverse(by);
  return multiply({&by, &w, &inv});
}

namespace {

class TokenParser {
 public:
  TokenParser(const FreeProduct& fp, std::string_view text) : fp_(fp), text_(text) {}

  NormalForm parse() {
    NormalForm w = sequence();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  NormalForm sequence() {
    std::vector<Syllable> raw;
    for (;;) {
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] == ')') break;
      NormalForm item = atom();
      raw.insert(raw.end(), item.syllables.begin(), item.syllables.end());
    }
    return fp_.normalize(raw);
  }

  NormalForm atom() {
    NormalForm base;
    if (text_[pos_] == '(') {
      ++pos_;
      base = sequence();
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("missing ')'");
      ++pos_;
    } else {
      std::string first = name();
      if (pos_ < text_.size() && text_[pos_] == '.') {
        ++pos_;
        std::string gen = name();
        int f = fp_.factor_index(first);
        if (f < 0) throw ParseError("unknown factor '" + first + "' in token '" + first + "." + gen + "'");
        base = fp_.syllable(f, fp_.factor(f).letter(gen));
      } else if (first == "1") {
        base = {};
      } else {
        throw ParseError("token '" + first + "' lacks a FACTOR. prefix");
      }
    }
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      return fp_.power(base, exponent());
    }
    return base;
  }

  std::string name() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (start == pos_) fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  long long exponent() {
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string digits(text_.substr(start, pos_ - start));
    if (digits.empty() || digits == "-" || digits == "+") fail("expected an exponent");
    return std::stoll(digits);
  }

  void skip_space() {
    while (pos_ < text_.size() && (std::isspace(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '*'))
      ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg + " at column " + std::to_string(pos_ + 1) + " of '" +
                     std::string(text_) + "'");
  }

  const FreeProduct& fp_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

NormalForm FreeProduct::parse(std::string_view text) const {
  return TokenParser(*this, text).parse();
}

std::string FreeProduct::format(const Syllable& s) const {
  const Factor& f = factors_[s.factor];
  if (f.is_finite()) return f.label() + "." + f.format(s.element);
  std::string out;
  for (const auto& [nm, k] : f.runs(s.element)) {
    if (!out.empty()) out += ' ';
    out += f.label() + "." + nm;
    if (k != 1) out += "^" + std::to_string(k);
  }
  return out;
}

std::string FreeProduct::format(const NormalForm& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& s : w.syllables) {
    if (!out.empty()) out += ' ';
    out += format(s);
  }
  return out;
}

LengthReport FreeProduct::lengths(const NormalForm& w) const {
  return {w.size(), generator_length(w)};
}

std::size_t FreeProduct::generator_length(const NormalForm& w) const {
  std::size_t n = 0;
  for (const auto& s : w.syllables) n += syllable_length(s);
  return n;
}

CyclicReduction FreeProduct::cyclically_reduce(const NormalForm& w) const {
  CyclicReduction r{w, {}};
  while (r.core.size() >= 2 && r.core.syllables.front().factor == r.core.syllables.back().factor) {
    Syllable first = r.core.syllables.front();
    std::vector<Syllable> raw(r.core.syllables.begin() + 1, r.core.syllables.end());
    raw.push_back(first);
    r.core = normalize(raw);
    r.conjugator = multiply(r.conjugator, syllable(first.factor, first.element));
  }
  return r;
}

CyclicReduction FreeProduct::weakly_cyclically_reduce(const NormalForm& w) const {
  CyclicReduction r{w, {}};
  while (r.core.size() >= 2) {
    const auto& a = r.core.syllables.front();
    const auto& b = r.core.syllables.back();
    if (a.factor != b.factor || !factors_[a.factor].multiply(b.element, a.element).empty()) break;
    r.conjugator = multiply(r.conjugator, syllable(a.factor, a.element));
    r.core.syllables = std::vector<Syllable>(r.core.syllables.begin() + 1, r.core.syllables.end() - 1);
  }
  return r;
}

bool FreeProduct::is_cyclically_reduced(const NormalForm& w) const {
  return w.size() <= 1 || w.syllables.front().factor != w.syllables.back().factor;
}

NormalForm FreeProduct::rotate(const NormalForm& w, std::size_t offset) const {
  NormalForm out;
  const std::size_t n = w.size();
  out.syllables.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.syllables.push_back(w.syllables[(offset + i) % n]);
  return out;
}

FreeProduct FreeProduct::with_generators(const std::vector<Element>& extra_a,
                                         const std::vector<Element>& extra_b) const {
  return FreeProduct(factors_[0].with_generators(extra_a), factors_[1].with_generators(extra_b));
}

}  // namespace sc
