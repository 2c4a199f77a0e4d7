#include "sc/dims.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>

#include "sc/factor.hpp"

namespace sc {

namespace {

unsigned parse_nat(const std::string& text, const std::string& context) {
  unsigned v = 0;
  const std::string t = trim(text);
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size())
    throw SpecError("bad dimension '" + text + "' in " + context);
  return v;
}

bool parse_bool(const std::string& text, const std::string& where) {
  const std::string t = trim(text);
  if (t == "true" || t == "yes" || t == "1") return true;
  if (t == "false" || t == "no" || t == "0") return false;
  throw SpecError(where + ": expected true or false, got '" + text + "'");
}

std::string show(unsigned v) { return std::to_string(v); }

// max over a list of optional upper bounds; nullopt if any is missing.
std::optional<unsigned> max_upper(const std::vector<DimInterval>& xs, unsigned floor) {
  unsigned m = floor;
  for (const auto& x : xs) {
    if (!x.hi) return std::nullopt;
    m = std::max(m, *x.hi);
  }
  return m;
}

unsigned max_lower(const std::vector<DimInterval>& xs, unsigned floor) {
  unsigned m = floor;
  for (const auto& x : xs) m = std::max(m, x.lo);
  return m;
}

// Relation and value for an interval-valued output.
std::pair<std::string, std::string> relation(const DimInterval& d) {
  if (d.decided()) return {"=", show(d.lo)};
  if (!d.hi) return {">=", show(d.lo)};
  if (d.lo == 0) return {"<=", show(*d.hi)};
  return {"in", d.format()};
}

DimBound interval_bound(const std::string& quantity, const DimInterval& d, const char* citation,
                        const std::vector<std::string>& hyps) {
  auto [rel, value] = relation(d);
  return {quantity, rel, value, citation, hyps};
}

constexpr const char* kGraphCitation =
    "graph of groups with finite edge groups: dimension bounded by max{floor, vertex dimensions}";
constexpr const char* kVcycGraphCitation =
    "graph of groups with finite edge groups and small-centralizer vertices: VCYC bounded by "
    "max{2, vertex FIN dimensions}";
constexpr const char* kVcycFromFinCitation =
    "small centralizers and ascending chain condition: gd_vc <= max{gd_fin, 2}, cd_vc <= "
    "max{cd_fin, 2}";
constexpr const char* kScpFinCitation =
    "C'(1/12) product over finite C, not virtually free: FIN dimension = max{A, B, 2}";
constexpr const char* kScpVcycCitation =
    "C'(1/12) product of f.g. factors with small centralizers and acc: "
    "max{VCYC(A), VCYC(B), 2} <= VCYC(G) <= max{FIN(A), FIN(B), 2}";
constexpr const char* kScpRingCitation =
    "C'(1/12) product over finite C, not virtually free: cd_R = max{cd_R(A), cd_R(B), 2}";
constexpr const char* kScpFlagsCitation =
    "C'(1/12) product with finite R of f.g. factors with small centralizers and acc: G inherits "
    "both properties";

}  // namespace

std::string DimInterval::format() const {
  if (decided()) return show(lo);
  if (!hi) return lo == 0 ? "?" : ">= " + show(lo);
  if (lo == 0) return "<= " + show(*hi);
  return "[" + show(lo) + ", " + show(*hi) + "]";
}

DimInterval DimInterval::parse(const std::string& text) {
  std::string t = trim(text);
  if (t == "?" || t == "unknown") return unknown();
  if (t.rfind("<=", 0) == 0) return at_most(parse_nat(t.substr(2), "'" + text + "'"));
  if (t.rfind(">=", 0) == 0) return at_least(parse_nat(t.substr(2), "'" + text + "'"));
  if (t.size() >= 2 && t.front() == '[' && t.back() == ']') {
    const std::string body = t.substr(1, t.size() - 2);
    const auto comma = body.find(',');
    if (comma == std::string::npos) throw SpecError("bad interval '" + text + "'");
    DimInterval d;
    d.lo = parse_nat(body.substr(0, comma), "'" + text + "'");
    const std::string upper = trim(body.substr(comma + 1));
    if (upper != "inf" && upper != "?") d.hi = parse_nat(upper, "'" + text + "'");
    if (d.hi && *d.hi < d.lo) throw SpecError("empty interval '" + text + "'");
    return d;
  }
  return exact(parse_nat(t, "'" + text + "'"));
}

DimInterval interval_max(const DimInterval& x, const DimInterval& y) {
  DimInterval r;
  r.lo = std::max(x.lo, y.lo);
  if (x.hi && y.hi) r.hi = std::max(*x.hi, *y.hi);
  return r;
}

DimInterval interval_max(const DimInterval& x, unsigned floor) {
  return interval_max(x, DimInterval::exact(floor));
}

std::vector<std::string> GroupFlags::names() const {
  std::vector<std::string> out;
  if (finitely_generated) out.push_back("finitely_generated");
  if (one_ended) out.push_back("one_ended");
  if (torsion_free) out.push_back("torsion_free");
  if (small_centralizers) out.push_back("small_centralizers");
  if (acc_finite_subgroups) out.push_back("acc_finite_subgroups");
  if (virtually_free) out.push_back("virtually_free");
  if (two_generated) out.push_back("two_generated");
  if (free) out.push_back("free");
  return out;
}

void GroupFlags::set(const std::string& name) {
  if (name == "finitely_generated") finitely_generated = true;
  else if (name == "one_ended") one_ended = true;
  else if (name == "torsion_free") torsion_free = true;
  else if (name == "small_centralizers") small_centralizers = true;
  else if (name == "acc_finite_subgroups") acc_finite_subgroups = true;
  else if (name == "virtually_free") virtually_free = true;
  else if (name == "two_generated") two_generated = true;
  else if (name == "free") free = true;
  else throw SpecError("unknown flag '" + name + "'");
}

void DimensionProfile::validate() const {
  auto check = [&](const DimInterval& cd, const DimInterval& gd, const char* what) {
    if (gd.hi && cd.lo > *gd.hi)
      throw SpecError(name + ": " + what + " has cd >= " + show(cd.lo) + " but gd <= " +
                      show(*gd.hi));
  };
  for (const auto* d : {&cd_fin, &gd_fin, &cd_vc, &gd_vc})
    if (d->hi && *d->hi < d->lo) throw SpecError(name + ": empty dimension interval");
  check(cd_fin, gd_fin, "FIN");
  check(cd_vc, gd_vc, "VCYC");
}

std::string DimBound::format() const {
  std::string s = quantity + " " + relation + " " + value + "  [" + citation + "]";
  if (!hypotheses.empty()) {
    s += " using {";
    for (std::size_t i = 0; i < hypotheses.size(); ++i) s += (i ? ", " : "") + hypotheses[i];
    s += "}";
  }
  return s;
}

DimReport graph_of_groups_bounds(const GraphOfGroupsSpec& spec) {
  DimReport report;
  if (spec.vertices.empty()) throw SpecError("graph of groups needs at least one vertex");
  for (const auto& v : spec.vertices) v.validate();
  for (const auto& e : spec.edges) {
    if (!e.finite) {
      report.diagnostics.push_back("edge " + e.name +
                                   " has an infinite edge group; all bounds withheld");
      return report;
    }
  }

  const std::vector<std::string> base = {"edge groups finite"};
  auto column = [&](auto member) {
    std::vector<DimInterval> xs;
    for (const auto& v : spec.vertices) xs.push_back(v.*member);
    return xs;
  };
  auto emit = [&](const std::string& quantity, const std::vector<DimInterval>& xs,
                  unsigned floor, const char* citation, std::vector<std::string> hyps,
                  const std::string& source) {
    if (auto m = max_upper(xs, floor)) {
      report.bounds.push_back({quantity, "<=", show(*m), citation, std::move(hyps)});
    } else {
      report.diagnostics.push_back(quantity + " bound withheld: some vertex has unknown " +
                                   source + " upper bound");
    }
  };

  emit("gd_fin", column(&DimensionProfile::gd_fin), 1, kGraphCitation, base, "gd_fin");
  emit("cd_fin", column(&DimensionProfile::cd_fin), 1, kGraphCitation, base, "cd_fin");
  emit("gd_vc", column(&DimensionProfile::gd_vc), 2, kGraphCitation, base, "gd_vc");
  emit("cd_vc", column(&DimensionProfile::cd_vc), 2, kGraphCitation, base, "cd_vc");

  const bool sharp = std::all_of(spec.vertices.begin(), spec.vertices.end(), [](const auto& v) {
    return v.flags.small_centralizers && v.flags.acc_finite_subgroups;
  });
  if (sharp) {
    std::vector<std::string> hyps = base;
    hyps.push_back("vertices have small centralizers");
    hyps.push_back("vertices satisfy acc on finite subgroups");
    emit("gd_vc", column(&DimensionProfile::gd_fin), 2, kVcycGraphCitation, hyps, "gd_fin");
    emit("cd_vc", column(&DimensionProfile::cd_fin), 2, kVcycGraphCitation, hyps, "cd_fin");
  } else {
    report.diagnostics.push_back(
        "VCYC-from-FIN bounds withheld: not every vertex has small centralizers and acc");
  }
  return report;
}

DimensionProfile vcyc_from_fin(const DimensionProfile& p, DimReport* report) {
  DimensionProfile out = p;
  if (!(p.flags.small_centralizers && p.flags.acc_finite_subgroups)) {
    if (report)
      report->diagnostics.push_back(p.name +
                                    ": small_centralizers and acc_finite_subgroups required; "
                                    "VCYC dimensions unchanged");
    return out;
  }
  const std::vector<std::string> hyps = {"small centralizers", "acc on finite subgroups"};
  auto tighten = [&](DimInterval& vc, const DimInterval& fin, const char* quantity) {
    if (!fin.hi) {
      if (report)
        report->diagnostics.push_back(std::string(quantity) +
                                      " unchanged: FIN upper bound unknown");
      return;
    }
    const unsigned bound = std::max(*fin.hi, 2u);
    // Never cut below a stated lower bound: an inconsistent input is an error.
    if (vc.lo > bound)
      throw SpecError(p.name + ": " + quantity + " lower bound " + show(vc.lo) +
                      " exceeds max{FIN, 2} = " + show(bound));
    if (!vc.hi || *vc.hi > bound) vc.hi = bound;
    if (report) report->bounds.push_back({quantity, "<=", show(bound), kVcycFromFinCitation, hyps});
  };
  tighten(out.gd_vc, p.gd_fin, "gd_vc");
  tighten(out.cd_vc, p.cd_fin, "cd_vc");
  return out;
}

ScpResult scp_dimensions(const DimensionProfile& a, const DimensionProfile& b,
                         const ScpHypotheses& hyp) {
  a.validate();
  b.validate();
  ScpResult res;
  res.group.name = "G";
  auto& report = res.report;

  std::vector<std::string> missing;
  if (!hyp.c_finite) missing.push_back("C finite");
  if (!hyp.small_cancellation_1_12) missing.push_back("R finite symmetrized C'(1/12)");
  if (!hyp.not_virtually_free) missing.push_back("G not virtually free");
  if (!missing.empty()) {
    std::string m;
    for (std::size_t i = 0; i < missing.size(); ++i) m += (i ? ", " : "") + missing[i];
    report.diagnostics.push_back("all outputs withheld: missing hypothesis " + m);
    return res;
  }

  const std::vector<std::string> base = {"C finite",
                                         "C'(1/12) (" + hyp.small_cancellation_source + ")",
                                         "G not virtually free"};
  auto& g = res.group;

  g.gd_fin = interval_max(interval_max(a.gd_fin, b.gd_fin), 2);
  g.cd_fin = interval_max(interval_max(a.cd_fin, b.cd_fin), 2);
  report.bounds.push_back(interval_bound("gd_fin", g.gd_fin, kScpFinCitation, base));
  report.bounds.push_back(interval_bound("cd_fin", g.cd_fin, kScpFinCitation, base));

  const auto good = [](const DimensionProfile& p) {
    return p.flags.finitely_generated && p.flags.small_centralizers &&
           p.flags.acc_finite_subgroups;
  };
  if (good(a) && good(b)) {
    std::vector<std::string> hyps = base;
    hyps.push_back("A, B finitely generated");
    hyps.push_back("A, B have small centralizers");
    hyps.push_back("A, B satisfy acc on finite subgroups");
    auto bracket = [&](const DimInterval& va, const DimInterval& vb, const DimInterval& fa,
                       const DimInterval& fb) {
      DimInterval d;
      d.lo = max_lower({va, vb}, 2);
      d.hi = max_upper({fa, fb}, 2);
      if (d.hi && *d.hi < d.lo)
        throw SpecError("VCYC lower bound " + show(d.lo) + " exceeds FIN upper bound " +
                        show(*d.hi) + "; factor profiles are inconsistent");
      return d;
    };
    g.gd_vc = bracket(a.gd_vc, b.gd_vc, a.gd_fin, b.gd_fin);
    g.cd_vc = bracket(a.cd_vc, b.cd_vc, a.cd_fin, b.cd_fin);
    report.bounds.push_back(interval_bound("gd_vc", g.gd_vc, kScpVcycCitation, hyps));
    report.bounds.push_back(interval_bound("cd_vc", g.cd_vc, kScpVcycCitation, hyps));
    g.flags.small_centralizers = true;
    g.flags.acc_finite_subgroups = true;
    report.bounds.push_back({"flags", "+=", "small_centralizers acc_finite_subgroups",
                             kScpFlagsCitation, hyps});
  } else {
    report.diagnostics.push_back(
        "VCYC bracket withheld: both factors must be finitely generated with small "
        "centralizers and acc on finite subgroups");
  }

  std::vector<std::string> rings;
  for (const auto& [tag, _] : a.cd_ring) rings.push_back(tag);
  for (const auto& [tag, _] : b.cd_ring)
    if (!a.cd_ring.count(tag)) rings.push_back(tag);
  std::sort(rings.begin(), rings.end());
  for (const auto& tag : rings) {
    auto lookup = [&](const DimensionProfile& p) {
      auto it = p.cd_ring.find(tag);
      return it == p.cd_ring.end() ? DimInterval::unknown() : it->second;
    };
    const DimInterval d = interval_max(interval_max(lookup(a), lookup(b)), 2);
    g.cd_ring[tag] = d;
    report.bounds.push_back(interval_bound("cd_" + tag, d, kScpRingCitation, base));
  }

  g.flags.finitely_generated = a.flags.finitely_generated && b.flags.finitely_generated;
  g.validate();
  return res;
}

std::string to_string(Tri t) {
  switch (t) {
    case Tri::yes: return "true";
    case Tri::no: return "false";
    case Tri::unknown: return "unknown";
  }
  return "?";
}

Tri eilenberg_ganea_verdict(const DimensionProfile& p, Family family) {
  const DimInterval& cd = family == Family::fin ? p.cd_fin : p.cd_vc;
  const DimInterval& gd = family == Family::fin ? p.gd_fin : p.gd_vc;
  if (!cd.contains(2) || !gd.contains(3)) return Tri::no;
  if (cd.decided() && gd.decided()) return Tri::yes;
  return Tri::unknown;
}

DimensionProfile profile_from_kv(const KeyValueFile& kv, const std::string& prefix,
                                 const std::string& name) {
  DimensionProfile p;
  p.name = name;
  const std::string head = prefix + ".";
  for (const auto& e : kv.entries()) {
    if (e.key.rfind(head, 0) != 0) continue;
    const std::string field = e.key.substr(head.size());
    try {
      if (field == "cd_fin") p.cd_fin = DimInterval::parse(e.value);
      else if (field == "gd_fin") p.gd_fin = DimInterval::parse(e.value);
      else if (field == "cd_vc") p.cd_vc = DimInterval::parse(e.value);
      else if (field == "gd_vc") p.gd_vc = DimInterval::parse(e.value);
      else if (field.rfind("cd_ring.", 0) == 0) p.cd_ring[field.substr(8)] = DimInterval::parse(e.value);
      else if (field == "flags")
        for (const auto& f : split_words(e.value)) p.flags.set(f);
      else throw SpecError("unknown profile field '" + field + "'");
    } catch (const SpecError& err) {
      throw SpecError(kv.where(e) + ": " + err.what());
    }
  }
  p.validate();
  return p;
}

DimensionProblem DimensionProblem::from_kv(const KeyValueFile& kv) {
  DimensionProblem prob;
  const auto factors = kv.sections("factor");
  const auto vertices = kv.sections("vertex");
  const bool single = !kv.sections("group").empty();
  const int shapes = int(!factors.empty()) + int(!vertices.empty()) + int(single);
  if (shapes != 1)
    throw SpecError(kv.source() +
                    ": profile must describe exactly one of factor.*, vertex.* or group.*");

  if (!factors.empty()) {
    if (factors.size() != 2)
      throw SpecError(kv.source() + ": a product needs exactly two factor sections");
    prob.kind = Kind::product;
    prob.a = profile_from_kv(kv, "factor." + factors[0], factors[0]);
    prob.b = profile_from_kv(kv, "factor." + factors[1], factors[1]);
    if (kv.has("hypothesis.c_finite")) {
      const auto& e = kv.require("hypothesis.c_finite");
      prob.hypotheses.c_finite = parse_bool(e.value, kv.where(e));
    }
    if (kv.has("hypothesis.not_virtually_free")) {
      const auto& e = kv.require("hypothesis.not_virtually_free");
      prob.hypotheses.not_virtually_free = parse_bool(e.value, kv.where(e));
    }
    if (kv.has("hypothesis.small_cancellation")) {
      const auto& e = kv.require("hypothesis.small_cancellation");
      const std::string v = trim(e.value);
      if (v != "C'(1/12)" && v != "none")
        throw SpecError(kv.where(e) + ": expected C'(1/12) or none");
      prob.hypotheses.small_cancellation_1_12 = v == "C'(1/12)";
    }
    if (auto path = kv.get("hypothesis.presentation")) prob.presentation = trim(*path);
  } else if (!vertices.empty()) {
    prob.kind = Kind::graph;
    for (const auto& v : vertices) prob.graph.vertices.push_back(profile_from_kv(kv, "vertex." + v, v));
    for (const auto& name : kv.sections("edge")) {
      const auto& e = kv.require("edge." + name + ".finite");
      prob.graph.edges.push_back({name, parse_bool(e.value, kv.where(e))});
    }
  } else {
    const auto groups = kv.sections("group");
    if (groups.size() != 1) throw SpecError(kv.source() + ": expected one group section");
    prob.kind = Kind::single;
    prob.single = profile_from_kv(kv, "group." + groups[0], groups[0]);
  }

  for (const auto& e : kv.entries()) {
    const bool known = e.key.rfind("factor.", 0) == 0 || e.key.rfind("vertex.", 0) == 0 ||
                       e.key.rfind("edge.", 0) == 0 || e.key.rfind("group.", 0) == 0 ||
                       e.key == "hypothesis.c_finite" ||
                       e.key == "hypothesis.not_virtually_free" ||
                       e.key == "hypothesis.small_cancellation" ||
                       e.key == "hypothesis.presentation";
    if (!known) throw SpecError(kv.where(e) + ": unknown key '" + e.key + "'");
  }
  return prob;
}

DimensionProblem DimensionProblem::load(const std::string& path) {
  auto prob = from_kv(KeyValueFile::load(path));
  if (prob.presentation) {
    std::filesystem::path p(*prob.presentation);
    if (p.is_relative()) p = std::filesystem::path(path).parent_path() / p;
    prob.presentation = p.string();
  }
  return prob;
}

}  // namespace sc
