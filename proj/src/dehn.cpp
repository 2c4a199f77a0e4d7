#include "sc/dehn.hpp"

#include <tuple>

namespace sc {

namespace {

NormalForm prefix(const NormalForm& w, std::size_t k) {
  NormalForm out;
  out.syllables.assign(w.syllables.begin(), w.syllables.begin() + static_cast<std::ptrdiff_t>(k));
  return out;
}

}  // namespace

DehnSolver::DehnSolver(FreeProduct fp, SymmetrizedSet R, DehnConstants constants, bool unsafe)
    : fp_(std::move(fp)), R_(std::move(R)), c_(constants) {
  if (!c_.condition_holds && !unsafe)
    throw SpecError("Dehn reduction refused: 1 >= 3*lambda*(M+1) fails (lambda = " + to_string(c_.lambda) +
                    ", M = " + std::to_string(c_.M) + "); pass the unsafe override to run anyway");
  const auto& M = R_.members();
  min_window_ = static_cast<std::size_t>(-1);
  for (std::size_t i = 0; i < M.size(); ++i) {
    const std::size_t m = M[i].size();
    std::size_t L = 2;
    while (L <= m && !qualifies(L, m)) ++L;
    min_window_ = std::min(min_window_, L);
    if (m >= 2) by_second_[M[i][1]].push_back(i);
  }
}

bool DehnSolver::qualifies(std::size_t window, std::size_t member_length) const {
  if (window < 2 || window > member_length) return false;
  const Rational m(static_cast<std::int64_t>(member_length));
  return Rational(static_cast<std::int64_t>(window)) >= (Rational(1) - Rational(3) * c_.lambda) * m;
}

// Window model: syllables w[p], ..., w[p+L-1] of the (cyclic or linear) word
// spell the first L syllables of a member r, except that the two boundary
// syllables only need to share a factor with r[0] and r[L-1]. The window is
// then c*r[0] ... r[L-1]*d and is replaced by c * t^-1 * d, where r = s t.
std::optional<DehnStep> DehnSolver::search(const NormalForm& w, bool cyclic) const {
  const std::size_t n = w.size();
  if (n < 2 || n < min_window_) return std::nullopt;
  const auto& members = R_.members();
  const std::size_t old_length = fp_.generator_length(w);

  std::optional<DehnStep> best;
  auto better = [&](std::size_t L, std::size_t p, std::size_t i) {
    if (!best) return true;
    return std::make_tuple(-static_cast<long long>(L), p, i) <
           std::make_tuple(-static_cast<long long>(best->window_length), best->offset, best->member);
  };

  std::vector<std::size_t> everyone;
  if (min_window_ <= 2)
    for (std::size_t i = 0; i < members.size(); ++i) everyone.push_back(i);

  for (std::size_t p = 0; p + (cyclic ? 0 : 1) < n; ++p) {
    const std::size_t max_len = cyclic ? n : n - p;
    if (max_len < min_window_) continue;
    const NormalForm rot = cyclic ? fp_.rotate(w, p) : w;
    const std::size_t base = cyclic ? 0 : p;
    const std::vector<std::size_t>* cands = &everyone;
    if (min_window_ > 2) {
      auto it = by_second_.find(rot[base + 1]);
      if (it == by_second_.end()) continue;
      cands = &it->second;
    }
    for (std::size_t i : *cands) {
      const NormalForm& r = members[i];
      const std::size_t m = r.size();
      if (r[0].factor != rot[base].factor) continue;
      std::size_t exact = 0;  // r[1..exact] agree with the word exactly
      const std::size_t limit = std::min(m, max_len);
      while (exact + 1 < limit && r[exact + 1] == rot[base + exact + 1]) ++exact;
      std::size_t top = std::min(exact + 2, limit);
      for (std::size_t L = top; L >= min_window_ && L >= 2; --L) {
        if (best && L < best->window_length) break;
        if (!qualifies(L, m)) break;
        if (!better(L, p, i)) break;
        const Syllable& first = rot[base];
        const Syllable& last = rot[base + L - 1];
        const Factor& ff = fp_.factor(first.factor);
        const Factor& lf = fp_.factor(last.factor);
        Element c = ff.multiply(first.element, ff.inverse(r[0].element));
        Element d = lf.multiply(lf.inverse(r[L - 1].element), last.element);
        NormalForm rest_of_r;
        rest_of_r.syllables.assign(r.syllables.begin() + static_cast<std::ptrdiff_t>(L), r.syllables.end());
        NormalForm t_inv = fp_.inverse(rest_of_r);

        std::vector<Syllable> raw;
        raw.reserve(n + m);
        raw.insert(raw.end(), rot.syllables.begin(), rot.syllables.begin() + static_cast<std::ptrdiff_t>(base));
        raw.push_back({first.factor, c});
        raw.insert(raw.end(), t_inv.syllables.begin(), t_inv.syllables.end());
        raw.push_back({last.factor, d});
        raw.insert(raw.end(), rot.syllables.begin() + static_cast<std::ptrdiff_t>(base + L), rot.syllables.end());
        NormalForm result = fp_.normalize(raw);
        if (fp_.generator_length(result) >= old_length) continue;

        DehnStep step;
        step.offset = p;
        step.member = i;
        step.window_length = L;
        step.replaced.syllables.assign(r.syllables.begin(), r.syllables.begin() + static_cast<std::ptrdiff_t>(L));
        step.replacement = t_inv;
        NormalForm h = prefix(w, p);
        NormalForm cs = fp_.syllable(first.factor, c);
        step.conjugator = fp_.multiply(h, cs);
        step.result = std::move(result);
        best = std::move(step);
        break;
      }
    }
  }
  return best;
}

std::optional<DehnStep> DehnSolver::greendlinger_step(const NormalForm& w) const { return search(w, true); }

std::optional<DehnStep> DehnSolver::linear_step(const NormalForm& w) const { return search(w, false); }

ReductionTrace DehnSolver::dehn_reduce(const NormalForm& w) const {
  ReductionTrace t;
  t.initial = w;
  t.cyclic = true;
  CyclicReduction cr = fp_.cyclically_reduce(w);
  NormalForm frame = cr.conjugator;
  NormalForm cur = cr.core;
  while (auto step = search(cur, true)) {
    // cur = h rot h^-1 and rot = (c r c^-1) * result, so the relator sits
    // under frame*h*c and the new core under frame*h*g'
    NormalForm h = prefix(cur, step->offset);
    step->conjugator = fp_.multiply(frame, step->conjugator);
    CyclicReduction next = fp_.cyclically_reduce(step->result);
    frame = fp_.multiply({&frame, &h, &next.conjugator});
    cur = next.core;
    step->result = cur;
    t.steps.push_back(std::move(*step));
  }
  t.final = cur;
  t.frame = frame;
  return t;
}

ReductionTrace DehnSolver::linear_reduce(const NormalForm& w) const {
  ReductionTrace t;
  t.initial = w;
  t.cyclic = false;
  NormalForm cur = w;
  while (auto step = search(cur, false)) {
    cur = step->result;
    t.steps.push_back(std::move(*step));
  }
  t.final = cur;
  return t;
}

bool DehnSolver::is_trivial(const NormalForm& w) const { return dehn_reduce(w).final.empty(); }

bool DehnSolver::replay(const ReductionTrace& t) const {
  NormalForm acc;
  for (const auto& s : t.steps) {
    NormalForm piece = fp_.conjugate(R_.members()[s.member], s.conjugator);
    acc = fp_.multiply(acc, piece);
  }
  NormalForm tail = fp_.conjugate(t.final, t.frame);
  return fp_.multiply(acc, tail) == t.initial;
}

Membership DehnSolver::factor_membership(const NormalForm& w, int factor) const {
  const NormalForm u = linear_reduce(w).final;
  if (u.empty()) return {MembershipKind::in, {}, "reduces to the identity"};
  if (u.size() == 1 && u[0].factor == factor)
    return {MembershipKind::in, u[0].element, "reduces to a single syllable of the factor"};
  if (!c_.condition_holds)
    return {MembershipKind::unknown, {}, "metric condition fails, so the word problem is not certified"};

  const Factor& F = fp_.factor(factor);
  auto test = [&](const Element& a) {
    NormalForm inv = fp_.syllable(factor, F.inverse(a));
    return is_trivial(fp_.multiply(u, inv));
  };
  if (F.is_finite()) {
    for (const Element& a : F.elements())
      if (test(a)) return {MembershipKind::in, a, "u * a^-1 is trivial for a factor element a"};
    return {MembershipKind::not_in, {}, "u * a^-1 is nontrivial for every element a of the finite factor"};
  }
  if (u.size() == 1 && min_window_ > 2)
    return {MembershipKind::not_in, {}, "a two-syllable cyclic word is shorter than any qualifying window"};
  // candidates that make the trailing syllable of u * a^-1 an exact relator syllable
  std::vector<Element> cands{{}};
  if (u.syllables.back().factor == factor) cands.push_back(u.syllables.back().element);
  for (const auto& r : R_.members())
    for (const auto& s : r.syllables) {
      if (s.factor != factor) continue;
      Element ri = F.inverse(s.element);
      if (u.syllables.back().factor == factor)
        cands.push_back(F.multiply(ri, u.syllables.back().element));
      else
        cands.push_back(ri);
    }
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  for (const Element& a : cands)
    if (test(a)) return {MembershipKind::in, a, "u * a^-1 is trivial for a candidate element a"};
  return {MembershipKind::unknown, {}, "free factor: no candidate element closed the word"};
}

std::vector<bool> word_problem_batch_serial(const DehnSolver& solver, const std::vector<NormalForm>& words) {
  std::vector<bool> out(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) out[i] = solver.is_trivial(words[i]);
  return out;
}

std::vector<bool> word_problem_batch(const DehnSolver& solver, const std::vector<NormalForm>& words) {
  // vector<bool> packs bits, so workers write bytes and we convert afterwards
  std::vector<char> flags(words.size(), 0);
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(words.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < n; ++i)
    flags[static_cast<std::size_t>(i)] = solver.is_trivial(words[static_cast<std::size_t>(i)]) ? 1 : 0;
  return std::vector<bool>(flags.begin(), flags.end());
}

}  // namespace sc
