#include "sc/ends.hpp"

#include <set>

namespace sc {

namespace {

constexpr const char* kProductsCitation =
    "C'(1/6) product of one-ended factors whose relators avoid finite-order syllables is "
    "one-ended";
constexpr const char* kTwoGeneratedCitation =
    "torsion-free 2-generated group that is not free is one-ended";

bool infinite_order(const FreeProduct& fp, const Syllable& s) {
  return !fp.factor(s.factor).element_order(s.element).has_value();
}

}  // namespace

TorsionHypothesis relator_torsion_hypothesis(const FreeProduct& fp,
                                             const std::vector<NormalForm>& relators) {
  TorsionHypothesis out;
  if (relators.empty()) {
    out.warnings.push_back("empty relator set: hypothesis holds vacuously");
    return out;
  }
  std::set<std::string> seen;
  for (const auto& r : relators) {
    for (const auto& s : r.syllables) {
      if (infinite_order(fp, s)) continue;
      out.holds = false;
      // A syllable and its inverse are the same offence.
      std::string text = fp.format(s);
      std::string inv = fp.format(Syllable{s.factor, fp.factor(s.factor).inverse(s.element)});
      if (seen.count(text) || seen.count(inv)) continue;
      seen.insert(text);
      out.offenders.push_back(text);
    }
  }
  return out;
}

std::string to_string(PointsTo p) {
  switch (p) {
    case PointsTo::a: return "A";
    case PointsTo::b: return "B";
    case PointsTo::neither: return "neither";
  }
  return "?";
}

PingPongResult ping_pong_trace(const FreeProduct& fp, const NormalForm& w) {
  PingPongResult res;
  if (w.empty()) return res;
  PingPongState state;
  for (std::size_t k = w.size(); k-- > 0;) {
    const Syllable& s = w[k];
    if (!infinite_order(fp, s)) {
      res.kind = PingPongResult::Kind::inconclusive;
      res.offender = k;
      res.offender_text = fp.format(s);
      return res;
    }
    const PointsTo side = s.factor == 0 ? PointsTo::a : PointsTo::b;
    // Alternation guarantees the point lies on the other side (or on the
    // base edge), so the syllable swings it away from its own vertex.
    state.points_to = side;
    state.depth += 1;
    res.trace.push_back(state);
  }
  res.kind = PingPongResult::Kind::moved;
  return res;
}

bool monotone_depth(const PingPongResult& r) {
  for (std::size_t i = 1; i < r.trace.size(); ++i)
    if (r.trace[i].depth <= r.trace[i - 1].depth) return false;
  return true;
}

std::string to_string(OneEndedVerdict::Kind k) {
  switch (k) {
    case OneEndedVerdict::Kind::one_ended: return "one-ended";
    case OneEndedVerdict::Kind::not_applicable: return "not-applicable";
    case OneEndedVerdict::Kind::unknown: return "unknown";
  }
  return "?";
}

OneEndedVerdict one_ended_verdict(const GroupFlags& a, const GroupFlags& b, const GroupFlags& g,
                                  const FreeProduct& fp, const std::vector<NormalForm>& relators,
                                  const CancellationCertificate& cert) {
  OneEndedVerdict v;
  v.torsion = relator_torsion_hypothesis(fp, relators);

  if (g.torsion_free && g.two_generated && !g.free) {
    v.kind = OneEndedVerdict::Kind::one_ended;
    v.citation = kTwoGeneratedCitation;
    v.reason = "G asserted torsion-free, 2-generated and not free";
    return v;
  }

  std::vector<std::string> missing;
  if (!a.one_ended) missing.push_back("A not known one-ended");
  if (!b.one_ended) missing.push_back("B not known one-ended");
  if (!cert.holds) missing.push_back("C'(1/6) not certified");
  if (!missing.empty()) {
    v.kind = OneEndedVerdict::Kind::not_applicable;
    for (std::size_t i = 0; i < missing.size(); ++i) v.reason += (i ? "; " : "") + missing[i];
    return v;
  }

  if (!v.torsion.holds) {
    // Whether the finite-order restriction is needed is open, so no verdict.
    v.kind = OneEndedVerdict::Kind::unknown;
    v.reason = "relators contain finite-order syllables";
    return v;
  }
  v.kind = OneEndedVerdict::Kind::one_ended;
  v.citation = kProductsCitation;
  v.reason = "A and B one-ended, C'(1/6) " + cert.source + ", relators torsion-free";
  return v;
}

}  // namespace sc
