// Command-line front end for the small cancellation workbench.
//
// Every verb prints a short text summary and, with --report, writes a JSON
// report. Exit status: 0 when the answer is decided, 2 when it is Unknown,
// 1 on errors.

#include <boost/crc.hpp>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sc/cayley.hpp"
#include "sc/coned.hpp"
#include "sc/corpus.hpp"
#include "sc/dehn.hpp"
#include "sc/dims.hpp"
#include "sc/ends.hpp"
#include "sc/graph.hpp"
#include "sc/presentation.hpp"
#include "sc/spectrum_io.hpp"
#include "sc/taut.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace sc;

constexpr int kDecided = 0;
constexpr int kError = 1;
constexpr int kUnknown = 2;

struct Common {
  std::string report_path;
  std::uint64_t seed = 0;
  bool unsafe = false;
  NullhomotopyBudget budget;
};

struct Outcome {
  int status = kDecided;
  json records = json::array();
  json inputs = json::array();
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SpecError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json file_input(const std::string& path) {
  boost::crc_32_type crc;
  const std::string text = read_file(path);
  crc.process_bytes(text.data(), text.size());
  std::ostringstream hex;
  hex << std::hex << std::setw(8) << std::setfill('0') << crc.checksum();
  return {{"path", path}, {"crc32", hex.str()}};
}

json string_input(const std::string& name, const std::string& value) {
  return {{name, value}};
}

json to_json(const PieceWitness& w, const SymmetrizedSet& R, const FreeProduct& fp) {
  return {{"first", w.first},
          {"second", w.second},
          {"piece_syllables", w.length},
          {"member_syllables", R.members()[w.first].size()},
          {"piece", fp.format(w.piece)}};
}

struct Quotient {
  Presentation pres;
  SymmetrizedSet R;
  PieceReport pieces;
  DehnConstants constants;
};

Quotient load_quotient(const std::string& path) {
  Quotient q{Presentation::load(path), SymmetrizedSet::none(), {}, {}};
  if (q.pres.relators.empty()) {
    q.constants = dehn_constants(q.R, q.pres.group);
    return q;
  }
  q.R = symmetrized_closure(q.pres.group, q.pres.relators);
  q.pieces = pieces(q.R);
  q.constants = dehn_constants(q.R, q.pres.group, q.pieces);
  return q;
}

DehnSolver make_solver(const Quotient& q, bool unsafe) {
  return DehnSolver(q.pres.group, q.R, q.constants, unsafe);
}

// ---- verbs --------------------------------------------------------------

Outcome check_cancellation(const std::string& path, const std::string& lambda_text) {
  Outcome out;
  out.inputs.push_back(file_input(path));
  auto q = load_quotient(path);
  if (q.pres.relators.empty()) throw SpecError(path + ": no relators to check");
  const Rational lambda = parse_rational(lambda_text);
  auto cert = check_metric_condition(q.pieces, lambda);
  const auto& fp = q.pres.group;

  std::cout << "members: " << q.R.size() << " (" << q.R.orbit_count() << " relator classes)\n";
  std::cout << "lambda*: " << to_string(q.pieces.optimal_lambda) << "\n";
  std::cout << "C'(" << to_string(lambda) << "): " << (cert.holds ? "true" : "false") << "\n";
  if (!q.pieces.witnesses.empty()) {
    const auto& w = q.pieces.witnesses.front();
    std::cout << "witness: piece of " << w.length << " syllables shared by members " << w.first
              << " and " << w.second << ": " << fp.format(w.piece) << "\n";
  }
  std::cout << "Dehn constants: M = " << q.constants.M << ", ell0 = " << q.constants.ell0
            << ", 1 >= 3 lambda (M + 1): " << (q.constants.condition_holds ? "true" : "false")
            << "\n";
  std::cout << "seven syllables: " << (validate_seven_syllables(q.R) ? "true" : "false") << "\n";

  json witnesses = json::array();
  for (const auto& w : q.pieces.witnesses) witnesses.push_back(to_json(w, q.R, fp));
  json rec = {{"operation", "check_metric_condition"},
              {"lambda", to_string(lambda)},
              {"holds", cert.holds},
              {"optimal_lambda", to_string(q.pieces.optimal_lambda)},
              {"members", q.R.size()},
              {"max_piece_syllables", q.pieces.max_piece_syllables},
              {"min_relator_syllables", q.pieces.min_relator_syllables},
              {"witnesses", witnesses},
              {"dehn_constants",
               {{"M", q.constants.M},
                {"ell0", q.constants.ell0},
                {"condition_holds", q.constants.condition_holds}}},
              {"seven_syllables", validate_seven_syllables(q.R)}};
  if (cert.violation) rec["violation"] = to_json(*cert.violation, q.R, fp);
  out.records.push_back(rec);
  return out;
}

json trace_json(const ReductionTrace& t, const FreeProduct& fp) {
  json steps = json::array();
  for (const auto& s : t.steps)
    steps.push_back({{"offset", s.offset},
                     {"member", s.member},
                     {"window_length", s.window_length},
                     {"replaced", fp.format(s.replaced)},
                     {"replacement", fp.format(s.replacement)},
                     {"conjugator", fp.format(s.conjugator)},
                     {"result", fp.format(s.result)}});
  return {{"initial", fp.format(t.initial)},
          {"final", fp.format(t.final)},
          {"frame", fp.format(t.frame)},
          {"cyclic", t.cyclic},
          {"steps", steps}};
}

Outcome dehn_reduce(const std::string& path, const std::string& word, bool linear,
                    const Common& c) {
  Outcome out;
  out.inputs.push_back(file_input(path));
  out.inputs.push_back(string_input("word", word));
  auto q = load_quotient(path);
  auto S = make_solver(q, c.unsafe);
  const auto& fp = S.group();
  auto w = fp.parse(word);
  auto t = linear ? S.linear_reduce(w) : S.dehn_reduce(w);
  const bool replay = S.replay(t);
  for (const auto& s : t.steps)
    std::cout << "step: offset " << s.offset << ", member " << s.member << ", window "
              << s.window_length << " -> " << fp.format(s.result) << "\n";
  std::cout << "final: " << (t.final.empty() ? "1" : fp.format(t.final)) << "\n";
  std::cout << "steps: " << t.steps.size() << ", replay " << (replay ? "ok" : "FAILED") << "\n";
  json rec = trace_json(t, fp);
  rec["operation"] = linear ? "linear_reduce" : "dehn_reduce";
  rec["replay"] = replay;
  out.records.push_back(rec);
  if (!replay) throw SpecError("trace replay failed");
  return out;
}

Outcome word_problem(const std::string& path, const std::vector<std::string>& words,
                     const std::string& words_file, const std::string& membership,
                     const Common& c) {
  Outcome out;
  out.inputs.push_back(file_input(path));
  auto q = load_quotient(path);
  auto S = make_solver(q, c.unsafe);
  const auto& fp = S.group();
  std::vector<std::string> texts = words;
  if (!words_file.empty()) {
    out.inputs.push_back(file_input(words_file));
    std::istringstream in(read_file(words_file));
    for (std::string line; std::getline(in, line);) {
      line = trim(line.substr(0, line.find('#')));
      if (!line.empty()) texts.push_back(line);
    }
  }
  if (texts.empty()) throw SpecError("no words given");
  std::vector<NormalForm> parsed;
  for (const auto& t : texts) parsed.push_back(fp.parse(t));

  if (!membership.empty()) {
    const int f = fp.factor_index(membership);
    if (f < 0) throw SpecError("no factor labelled '" + membership + "'");
    for (std::size_t i = 0; i < parsed.size(); ++i) {
      auto m = S.factor_membership(parsed[i], f);
      const char* verdict = m.kind == MembershipKind::in       ? "in"
                            : m.kind == MembershipKind::not_in ? "not-in"
                                                               : "unknown";
      if (m.kind == MembershipKind::unknown) out.status = kUnknown;
      std::cout << texts[i] << ": " << verdict << " " << membership;
      if (m.kind == MembershipKind::in)
        std::cout << " (" << (m.element.empty() ? "1" : fp.format(Syllable{f, m.element})) << ")";
      std::cout << "\n";
      json rec = {{"operation", "factor_membership"},
                  {"word", texts[i]},
                  {"factor", membership},
                  {"verdict", verdict},
                  {"reason", m.reason}};
      if (m.kind == MembershipKind::in)
        rec["element"] = m.element.empty() ? "1" : fp.format(Syllable{f, m.element});
      out.records.push_back(rec);
    }
    return out;
  }

  const auto verdicts = word_problem_batch(S, parsed);
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    std::cout << texts[i] << ": " << (verdicts[i] ? "trivial" : "nontrivial") << "\n";
    out.records.push_back({{"operation", "word_problem"},
                           {"word", texts[i]},
                           {"verdict", verdicts[i] ? "trivial" : "nontrivial"}});
  }
  return out;
}

struct GraphSource {
  std::string generator;
  std::string edges;
  std::string cayley;
  std::string factor;
  std::size_t radius = 0;
};

SimplicialGraph build_graph(const GraphSource& g, const Common& c, Outcome& out,
                            std::string& description, std::size_t& margin) {
  const int given = int(!g.generator.empty()) + int(!g.edges.empty()) + int(!g.cayley.empty());
  if (given != 1) throw SpecError("give exactly one of --graph, --edges, --cayley");
  margin = 0;
  if (!g.generator.empty()) {
    out.inputs.push_back(string_input("graph", g.generator));
    description = g.generator;
    return generate_graph(g.generator);
  }
  if (!g.edges.empty()) {
    out.inputs.push_back(file_input(g.edges));
    description = g.edges;
    return load_edge_list(g.edges);
  }
  out.inputs.push_back(file_input(g.cayley));
  out.inputs.push_back({{"radius", g.radius}});
  auto q = load_quotient(g.cayley);
  CayleyBall ball;
  if (!g.factor.empty()) {
    const int f = q.pres.group.factor_index(g.factor);
    if (f < 0) throw SpecError("no factor labelled '" + g.factor + "'");
    ball = cayley_ball(q.pres.group.factor(f), g.radius);
  } else if (q.pres.relators.empty()) {
    ball = cayley_ball(q.pres.group, g.radius);
  } else {
    ball = cayley_ball(make_solver(q, c.unsafe), g.radius);
  }
  description = ball.source;
  margin = ball.horizon_margin();
  return ball.graph;
}

std::string join(const std::vector<std::size_t>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + std::to_string(xs[i]);
  return s + "}";
}

void print_spectrum(const char* name, const TruncatedSpectrum& s) {
  std::cout << name << " = " << join(s.lengths(Taut::in)) << " up to " << s.horizon;
  const auto u = s.lengths(Taut::unknown);
  if (!u.empty()) std::cout << ", unknown at " << join(u);
  std::cout << "\n";
}

Outcome taut_spectrum(const GraphSource& src, std::size_t horizon, const std::string& save,
                      bool serial, const Common& c) {
  Outcome out;
  std::string description;
  std::size_t margin = 0;
  auto g = build_graph(src, c, out, description, margin);
  if (horizon == 0) {
    if (!margin) throw SpecError("--horizon is required for this graph");
    horizon = margin;
  }
  auto h = serial ? taut_spectrum_bruteforce_serial(g, horizon, c.budget)
                  : taut_spectrum_bruteforce(g, horizon, c.budget);
  std::cout << "graph: " << description << " (" << g.vertex_count() << " vertices, "
            << g.edge_count() << " edges)\n";
  print_spectrum("H", h);
  if (!save.empty()) {
    std::ofstream f(save);
    if (!f) throw SpecError("cannot write " + save);
    f << format_spectrum(h);
  }
  if (!h.lengths(Taut::unknown).empty()) out.status = kUnknown;
  out.records.push_back({{"operation", "taut_spectrum"},
                         {"graph", description},
                         {"vertices", g.vertex_count()},
                         {"edges", g.edge_count()},
                         {"spectrum", sc::to_json(h)}});
  return out;
}

Outcome spectrum_union(const std::string& a, const std::string& b) {
  Outcome out;
  out.inputs.push_back(string_input("first", a));
  out.inputs.push_back(string_input("second", b));
  auto h = product_spectrum(spectrum_argument(a), spectrum_argument(b));
  print_spectrum("H(A*B)", h);
  if (!h.lengths(Taut::unknown).empty()) out.status = kUnknown;
  out.records.push_back({{"operation", "product_spectrum"}, {"spectrum", sc::to_json(h)}});
  return out;
}

Outcome spectrum_bracket(const std::string& path, const std::string& quotient,
                         const std::string& factors) {
  Outcome out;
  out.inputs.push_back(file_input(path));
  out.inputs.push_back(string_input("quotient", quotient));
  out.inputs.push_back(string_input("factors", factors));
  auto q = load_quotient(path);
  if (q.pres.relators.empty()) throw SpecError(path + ": bracket windows need relators");
  const auto& c = q.constants;
  auto hq = spectrum_argument(quotient), hf = spectrum_argument(factors);
  std::cout << "ell0 = " << c.ell0 << "\n";

  std::size_t open = 0, violated = 0;
  auto scan = [&](const TruncatedSpectrum& from, const TruncatedSpectrum& to,
                  BracketDirection dir, const char* from_name, const char* to_name) {
    for (std::size_t l : from.lengths(Taut::in)) {
      if (l <= c.ell0) continue;
      auto win = quotient_bracket(l, dir, c);
      std::vector<std::size_t> partners, unknown;
      for (std::size_t m = win.lo; m <= win.hi; ++m) {
        if (to.at(m) == Taut::in) partners.push_back(m);
        if (to.at(m) == Taut::unknown) unknown.push_back(m);
      }
      const char* status = !partners.empty() ? "matched" : !unknown.empty() ? "open" : "violated";
      if (partners.empty()) ++(unknown.empty() ? violated : open);
      std::cout << from_name << " " << l << " -> " << to_name << " [" << win.lo << ", "
                << win.hi << "]: " << status;
      if (!partners.empty()) std::cout << " " << join(partners);
      std::cout << "\n";
      out.records.push_back({{"operation", "quotient_bracket"},
                             {"from", from_name},
                             {"length", l},
                             {"window", {win.lo, win.hi}},
                             {"status", status},
                             {"partners", partners},
                             {"unknown", unknown}});
    }
  };
  scan(hq, hf, BracketDirection::quotient_to_factors, "G", "A*B");
  scan(hf, hq, BracketDirection::factors_to_quotient, "A*B", "G");
  if (violated) std::cout << violated << " window(s) fully decided without a partner\n";
  if (open) out.status = kUnknown;
  return out;
}

Outcome spectrum_equiv(const std::string& a, const std::string& b, std::size_t k) {
  Outcome out;
  out.inputs.push_back(string_input("first", a));
  out.inputs.push_back(string_input("second", b));
  auto v = k_related(spectrum_argument(a), spectrum_argument(b), k);
  const char* kind = v.kind == KRelationVerdict::Kind::related     ? "related"
                     : v.kind == KRelationVerdict::Kind::unrelated ? "unrelated"
                                                                   : "inconclusive";
  std::cout << k << "-related: " << kind << " (threshold " << v.threshold << ")";
  if (v.witness) std::cout << ", witness " << *v.witness << " in spectrum " << v.witness_side + 1;
  std::cout << "\n";
  if (!v.detail.empty()) std::cout << v.detail << "\n";
  if (v.kind == KRelationVerdict::Kind::inconclusive) out.status = kUnknown;
  json rec = {{"operation", "k_related"}, {"k", k}, {"threshold", v.threshold}, {"verdict", kind},
              {"detail", v.detail}};
  if (v.witness) rec["witness"] = {{"length", *v.witness}, {"side", v.witness_side}};
  out.records.push_back(rec);
  return out;
}

Outcome coned(const std::string& path, std::size_t radius, bool export_complex, const Common& c) {
  Outcome out;
  out.inputs.push_back(file_input(path));
  out.inputs.push_back({{"radius", radius}});
  auto q = load_quotient(path);
  auto S = make_solver(q, c.unsafe);
  ConedComplex X;
  try {
    X = coned_ball(S, radius);
  } catch (const UndecidedCoset& e) {
    std::cout << "unknown: " << e.what() << "\n";
    out.status = kUnknown;
    out.records.push_back({{"operation", "coned_ball"}, {"verdict", "unknown"}, {"reason", e.what()}});
    return out;
  }
  auto qc = quotient_complex(q.R);
  std::cout << "radius " << radius << ": " << X.vertices.size() << " vertices, " << X.edges.size()
            << " edges, " << X.cells.size() << " cells\n";
  std::cout << "quotient: " << qc.vertices << " vertices, " << qc.edges << " edge, "
            << qc.cell_boundaries.size() << " cell(s)\n";
  json rec = {{"operation", "coned_ball"},
              {"radius", radius},
              {"vertices", X.vertices.size()},
              {"edges", X.edges.size()},
              {"cells", X.cells.size()},
              {"quotient_cells", qc.cell_boundaries}};
  if (X.cells.size() >= 2) {
    auto g = geometric_piece_ratio(X);
    std::cout << "geometric piece ratio: " << to_string(g.ratio) << " (" << g.piece_edges
              << " of " << g.boundary << " edges, cells " << g.first_cell << "/" << g.second_cell
              << ")\n";
    rec["geometric_piece_ratio"] = {{"ratio", to_string(g.ratio)},
                                    {"piece_edges", g.piece_edges},
                                    {"boundary", g.boundary},
                                    {"cells", {g.first_cell, g.second_cell}}};
  } else {
    std::cout << "geometric piece ratio: needs two cells\n";
  }
  if (export_complex) rec["complex"] = sc::to_json(X, S.group());
  out.records.push_back(rec);
  return out;
}

json bounds_json(const DimReport& r) {
  json bounds = json::array();
  for (const auto& b : r.bounds)
    bounds.push_back({{"quantity", b.quantity},
                      {"relation", b.relation},
                      {"value", b.value},
                      {"citation", b.citation},
                      {"hypotheses", b.hypotheses}});
  return {{"bounds", bounds}, {"diagnostics", r.diagnostics}};
}

json profile_json(const DimensionProfile& p) {
  json rings = json::object();
  for (const auto& [tag, d] : p.cd_ring) rings[tag] = d.format();
  return {{"name", p.name},
          {"cd_fin", p.cd_fin.format()},
          {"gd_fin", p.gd_fin.format()},
          {"cd_vc", p.cd_vc.format()},
          {"gd_vc", p.gd_vc.format()},
          {"cd_ring", rings},
          {"flags", p.flags.names()}};
}

void print_report(const DimReport& r) {
  for (const auto& b : r.bounds) std::cout << b.format() << "\n";
  for (const auto& d : r.diagnostics) std::cout << "note: " << d << "\n";
}

Outcome dim_bounds(const std::string& path) {
  Outcome out;
  out.inputs.push_back(file_input(path));
  auto prob = DimensionProblem::load(path);
  json rec = {{"operation", "dim_bounds"}};
  DimReport report;
  std::optional<DimensionProfile> result;
  switch (prob.kind) {
    case DimensionProblem::Kind::product: {
      auto hyp = prob.hypotheses;
      if (prob.presentation) {
        out.inputs.push_back(file_input(*prob.presentation));
        auto q = load_quotient(*prob.presentation);
        auto cert = check_metric_condition(q.pieces, Rational(1, 12));
        hyp.small_cancellation_1_12 = cert.holds;
        hyp.small_cancellation_source = "computed, lambda* = " + to_string(q.pieces.optimal_lambda);
        std::cout << "C'(1/12) computed: " << (cert.holds ? "true" : "false") << " (lambda* = "
                  << to_string(q.pieces.optimal_lambda) << ")\n";
      }
      auto res = scp_dimensions(prob.a, prob.b, hyp);
      report = res.report;
      if (!report.bounds.empty()) result = res.group;
      rec["factors"] = {profile_json(prob.a), profile_json(prob.b)};
      break;
    }
    case DimensionProblem::Kind::graph:
      report = graph_of_groups_bounds(prob.graph);
      break;
    case DimensionProblem::Kind::single:
      result = vcyc_from_fin(prob.single, &report);
      break;
  }
  print_report(report);
  rec["report"] = bounds_json(report);
  if (result) {
    const auto fin = eilenberg_ganea_verdict(*result, Family::fin);
    const auto vc = eilenberg_ganea_verdict(*result, Family::vcyc);
    std::cout << "gd_fin=" << result->gd_fin.format() << ", cd_fin=" << result->cd_fin.format()
              << ", gd_vc=" << result->gd_vc.format() << ", cd_vc=" << result->cd_vc.format();
    for (const auto& [tag, d] : result->cd_ring) std::cout << ", cd_" << tag << "=" << d.format();
    std::cout << "\nEilenberg-Ganea(FIN)=" << to_string(fin)
              << ", Eilenberg-Ganea(VCYC)=" << to_string(vc) << "\n";
    rec["group"] = profile_json(*result);
    rec["eilenberg_ganea"] = {{"FIN", to_string(fin)}, {"VCYC", to_string(vc)}};
  }
  if (report.bounds.empty()) out.status = kUnknown;
  out.records.push_back(rec);
  return out;
}

GroupFlags parse_flags(const std::string& text) {
  GroupFlags f;
  for (const auto& w : split_words(text)) f.set(w);
  return f;
}

Outcome one_ended(const std::string& path, const std::string& fa, const std::string& fb,
                  const std::string& fg, bool assert_c16, const std::vector<std::string>& words) {
  Outcome out;
  out.inputs.push_back(file_input(path));
  out.inputs.push_back({{"flags_a", fa}, {"flags_b", fb}, {"flags_g", fg}, {"assert_c16", assert_c16}});
  auto q = load_quotient(path);
  const auto& fp = q.pres.group;

  CancellationCertificate cert;
  if (assert_c16) {
    cert.holds = true;
    cert.source = "asserted";
  } else if (!q.pres.relators.empty()) {
    cert.holds = check_metric_condition(q.pieces, Rational(1, 6)).holds;
    cert.optimal_lambda = q.pieces.optimal_lambda;
    cert.source = "computed";
  }
  auto v = one_ended_verdict(parse_flags(fa), parse_flags(fb), parse_flags(fg), fp,
                             q.pres.relators, cert);
  std::cout << "relator torsion hypothesis: " << (v.torsion.holds ? "true" : "false");
  if (!v.torsion.offenders.empty()) {
    std::cout << " (offenders:";
    for (const auto& o : v.torsion.offenders) std::cout << " " << o;
    std::cout << ")";
  }
  std::cout << "\n";
  for (const auto& w : v.torsion.warnings) std::cout << "note: " << w << "\n";
  if (cert.optimal_lambda)
    std::cout << "C'(1/6): " << (cert.holds ? "true" : "false") << " (lambda* = "
              << to_string(*cert.optimal_lambda) << ")\n";
  std::cout << "verdict: " << to_string(v.kind);
  if (!v.citation.empty()) std::cout << " [" << v.citation << "]";
  std::cout << "\nreason: " << v.reason << "\n";
  if (v.kind == OneEndedVerdict::Kind::unknown) out.status = kUnknown;
  json rec = {{"operation", "one_ended_verdict"},
              {"verdict", to_string(v.kind)},
              {"citation", v.citation},
              {"reason", v.reason},
              {"torsion_hypothesis", v.torsion.holds},
              {"offenders", v.torsion.offenders},
              {"warnings", v.torsion.warnings},
              {"cancellation_certificate", cert.source}};
  out.records.push_back(rec);

  for (const auto& text : words) {
    auto w = fp.parse(text);
    auto t = ping_pong_trace(fp, w);
    const char* kind = t.kind == PingPongResult::Kind::moved   ? "moved"
                       : t.kind == PingPongResult::Kind::fixed ? "fixed"
                                                               : "inconclusive";
    std::cout << "ping-pong " << text << ": " << kind;
    json states = json::array();
    for (const auto& s : t.trace) states.push_back({to_string(s.points_to), s.depth});
    if (!t.trace.empty()) std::cout << ", final depth " << t.trace.back().depth;
    if (t.offender) std::cout << ", finite-order syllable " << t.offender_text;
    std::cout << "\n";
    json prec = {{"operation", "ping_pong_trace"}, {"word", text}, {"result", kind}, {"trace", states}};
    if (t.offender) prec["offender"] = t.offender_text;
    out.records.push_back(prec);
  }
  return out;
}

Outcome run_corpus(const std::vector<int>& ids, bool timings, const Common& c) {
  Outcome out;
  AcceptanceOptions opt;
  opt.seed = c.seed;
  opt.budget = c.budget;
  std::vector<AcceptanceRow> rows;
  if (ids.empty()) {
    rows = run_acceptance_suite(opt);
  } else {
    for (int id : ids) rows.push_back(run_acceptance(id, opt));
  }
  bool all = true;
  for (const auto& r : rows) {
    all &= r.pass;
    std::cout << std::setw(2) << r.id << "  " << (r.pass ? "PASS" : "FAIL") << "  " << r.name
              << ": " << r.detail;
    if (timings) std::cout << " (" << std::fixed << std::setprecision(3) << r.seconds << " s)";
    std::cout << "\n";
  }
  out.inputs.push_back({{"seed", c.seed}});
  out.records = sc::to_json(rows);
  out.status = all ? kDecided : kError;
  return out;
}

void write_report(const Common& c, const std::string& verb, const Outcome& out) {
  if (c.report_path.empty()) return;
  json report = {{"schema", 1},
                 {"command", verb},
                 {"inputs", out.inputs},
                 {"budget",
                  {{"diagram_cells", c.budget.diagram_cells},
                   {"diagram_nodes", c.budget.diagram_nodes},
                   {"max_cosets", c.budget.max_cosets},
                   {"perm_degree", c.budget.perm_degree},
                   {"perm_nodes", c.budget.perm_nodes},
                   {"cached_quotients", c.budget.cached_quotients}}},
                 {"seed", c.seed},
                 {"status", out.status == kDecided ? "decided" : out.status == kUnknown ? "unknown" : "error"},
                 {"records", out.records}};
  std::ofstream f(c.report_path);
  if (!f) throw SpecError("cannot write " + c.report_path);
  f << report.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Small cancellation products: certificates, word problems, taut spectra, "
               "dimension bounds"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--report", common.report_path, "Write a JSON report to this path");
  app.add_option("--seed", common.seed, "Seed for randomized searches")->capture_default_str();
  app.add_flag("--unsafe", common.unsafe, "Run Dehn's algorithm even if 1 >= 3 lambda (M + 1) fails");
  app.add_option("--diagram-cells", common.budget.diagram_cells, "Van Kampen search: most cells")
      ->capture_default_str();
  app.add_option("--diagram-nodes", common.budget.diagram_nodes, "Van Kampen search: node budget")
      ->capture_default_str();
  app.add_option("--max-cosets", common.budget.max_cosets, "Coset enumeration limit")
      ->capture_default_str();
  app.add_option("--perm-degree", common.budget.perm_degree, "Largest permutation quotient degree")
      ->capture_default_str();
  app.add_option("--perm-nodes", common.budget.perm_nodes, "Low-index search node budget")
      ->capture_default_str();
  app.add_option("--cached-quotients", common.budget.cached_quotients,
                 "Permutation quotients kept per presentation")
      ->capture_default_str();

  std::string pres, word, lambda = "1/6", words_file, membership, save, first, second, profile;
  std::string quotient_spec, factors_spec, flags_a, flags_b, flags_g;
  std::vector<std::string> words;
  std::vector<int> criteria;
  std::size_t horizon = 0, radius = 0, k = 1;
  bool linear = false, serial = false, export_complex = false, assert_c16 = false, timings = false;
  GraphSource graph;

  auto* cc = app.add_subcommand("check-cancellation", "Certify C'(lambda) for a presentation");
  cc->add_option("presentation", pres)->required()->check(CLI::ExistingFile);
  cc->add_option("--lambda", lambda, "Threshold as a fraction")->capture_default_str();

  auto* dr = app.add_subcommand("dehn-reduce", "Reduce a word with Dehn's algorithm");
  dr->add_option("presentation", pres)->required()->check(CLI::ExistingFile);
  dr->add_option("word", word)->required();
  dr->add_flag("--linear", linear, "No cyclic windows");

  auto* wp = app.add_subcommand("word-problem", "Decide triviality or factor membership");
  wp->add_option("presentation", pres)->required()->check(CLI::ExistingFile);
  wp->add_option("words", words, "Words in token syntax");
  wp->add_option("--file", words_file, "File with one word per line")->check(CLI::ExistingFile);
  wp->add_option("--membership", membership, "Decide membership in this factor instead");

  auto* ts = app.add_subcommand("taut-spectrum", "Brute-force taut loop spectrum of a graph");
  ts->add_option("--graph", graph.generator, "cycle:N | path:N | tree:D | complete:N");
  ts->add_option("--edges", graph.edges, "Edge list file")->check(CLI::ExistingFile);
  ts->add_option("--cayley", graph.cayley, "Presentation whose Cayley ball to use")
      ->check(CLI::ExistingFile);
  ts->add_option("--factor", graph.factor, "Use this factor's Cayley graph");
  ts->add_option("--radius", graph.radius, "Cayley ball radius");
  ts->add_option("--horizon", horizon, "Largest length (default: 2 radius + 1 for balls)");
  ts->add_option("--save", save, "Also write the spectrum in text form");
  ts->add_flag("--serial", serial, "Use the serial reference implementation");

  auto* su = app.add_subcommand("spectrum-union", "Spectrum of a free product from its factors");
  su->add_option("first", first, "Spectrum file or inline 'IN?UNKNOWN@HORIZON'")->required();
  su->add_option("second", second)->required();

  auto* sb = app.add_subcommand("spectrum-bracket", "Check the quotient bracket windows");
  sb->add_option("presentation", pres)->required()->check(CLI::ExistingFile);
  sb->add_option("--quotient", quotient_spec, "Spectrum of the quotient")->required();
  sb->add_option("--factors", factors_spec, "Spectrum of the free product")->required();

  auto* se = app.add_subcommand("spectrum-equiv", "Decide whether two spectra are k-related");
  se->add_option("first", first)->required();
  se->add_option("second", second)->required();
  se->add_option("--k", k, "Multiplicative constant")->capture_default_str()->check(CLI::PositiveNumber);

  auto* cb = app.add_subcommand("coned-ball", "Build a ball of the coned-off Cayley complex");
  cb->add_option("presentation", pres)->required()->check(CLI::ExistingFile);
  cb->add_option("--radius", radius, "Ball radius")->required();
  cb->add_flag("--export", export_complex, "Include the complex in the report");

  auto* db = app.add_subcommand("dim-bounds", "Evaluate dimension formulas on a profile file");
  db->add_option("profile", profile)->required()->check(CLI::ExistingFile);

  auto* oe = app.add_subcommand("one-ended", "One-endedness of a small cancellation product");
  oe->add_option("presentation", pres)->required()->check(CLI::ExistingFile);
  oe->add_option("--flags-a", flags_a, "Flags asserted for factor A");
  oe->add_option("--flags-b", flags_b, "Flags asserted for factor B");
  oe->add_option("--flags-g", flags_g, "Flags asserted for the quotient");
  oe->add_flag("--assert-c16", assert_c16, "Take C'(1/6) as given instead of computing it");
  oe->add_option("--ping-pong", words, "Words to run through the ping-pong simulator");

  auto* co = app.add_subcommand("corpus", "Run the acceptance suite");
  co->add_option("--criteria", criteria, "Subset of criteria (1-10)")->delimiter(',');
  co->add_flag("--timings", timings, "Print wall times (never written to reports)");

  CLI11_PARSE(app, argc, argv);

  const std::string verb = app.get_subcommands().front()->get_name();
  try {
    common.budget.validate();
    Outcome out;
    if (verb == "check-cancellation") out = check_cancellation(pres, lambda);
    else if (verb == "dehn-reduce") out = dehn_reduce(pres, word, linear, common);
    else if (verb == "word-problem") out = word_problem(pres, words, words_file, membership, common);
    else if (verb == "taut-spectrum") out = taut_spectrum(graph, horizon, save, serial, common);
    else if (verb == "spectrum-union") out = spectrum_union(first, second);
    else if (verb == "spectrum-bracket") out = spectrum_bracket(pres, quotient_spec, factors_spec);
    else if (verb == "spectrum-equiv") out = spectrum_equiv(first, second, k);
    else if (verb == "coned-ball") out = coned(pres, radius, export_complex, common);
    else if (verb == "dim-bounds") out = dim_bounds(profile);
    else if (verb == "one-ended") out = one_ended(pres, flags_a, flags_b, flags_g, assert_c16, words);
    else out = run_corpus(criteria, timings, common);
    write_report(common, verb, out);
    return out.status;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
}
