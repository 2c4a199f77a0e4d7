#include "sc/corpus.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "sc/cayley.hpp"
#include "sc/coned.hpp"
#include "sc/dehn.hpp"
#include "sc/dims.hpp"
#include "sc/ends.hpp"
#include "sc/taut.hpp"
#include "sc/todd_coxeter.hpp"

namespace sc {

namespace corpus {

FreeProduct ab7_group() {
  return FreeProduct(Factor::cyclic("A", "a", 2), Factor::cyclic("B", "b", 3));
}

NormalForm ab7_relator(const FreeProduct& fp) { return fp.parse("(A.a B.b)^7"); }

FreeProduct staircase_group() {
  return FreeProduct(Factor::free("A", {"a"}), Factor::free("B", {"b1", "b2"}));
}

NormalForm staircase_relator(const FreeProduct& fp) {
  std::string text;
  for (int i = 1; i <= 12; ++i)
    text += "(A.a B.b1)^" + std::to_string(i) + " A.a B.b2 ";
  return fp.parse(text);
}

FreeProduct ab4_group() {
  return FreeProduct(Factor::cyclic("A", "a", 10), Factor::cyclic("B", "b", 2));
}

NormalForm ab4_relator(const FreeProduct& fp) { return fp.parse("(A.a B.b)^4"); }

}  // namespace corpus

namespace {

using Clock = std::chrono::steady_clock;

Element random_element(const Factor& f, std::mt19937_64& rng) {
  if (f.is_finite()) {
    std::uniform_int_distribution<int> pick(1, int(f.order()) - 1);
    return Element{pick(rng)};
  }
  const auto& gens = f.generating_set();
  for (;;) {
    std::uniform_int_distribution<std::size_t> len(1, 3), g(0, gens.size() - 1);
    Element e;
    for (std::size_t i = len(rng); i > 0; --i) e = f.multiply(e, gens[g(rng)]);
    if (!e.empty()) return e;
  }
}

NormalForm random_normal_form(const FreeProduct& fp, std::size_t syllables, std::mt19937_64& rng) {
  std::vector<Syllable> raw;
  int side = std::uniform_int_distribution<int>(0, 1)(rng);
  for (std::size_t i = 0; i < syllables; ++i, side ^= 1)
    raw.push_back({side, random_element(fp.factor(side), rng)});
  return fp.normalize(raw);
}

// Letters of the finite quotient <a, b | a^2, b^3, (ab)^7, [a,b]^4>, which is
// PSL(2,7): a syllable a^k or b^k becomes k copies of its generator.
Word ab7_image(const NormalForm& w) {
  Word out;
  for (const auto& s : w.syllables)
    out.insert(out.end(), static_cast<std::size_t>(s.element[0]), s.factor + 1);
  return out;
}

FpGroup psl27() {
  FpGroup g;
  g.generators = 2;
  g.names = {"a", "b"};
  g.relators = {{1, 1}, {2, 2, 2}};
  Word ab7, comm4;
  for (int i = 0; i < 7; ++i) ab7.insert(ab7.end(), {1, 2});
  for (int i = 0; i < 4; ++i) comm4.insert(comm4.end(), {-1, -2, 1, 2});
  g.relators.push_back(ab7);
  g.relators.push_back(comm4);
  return g;
}

DehnSolver make_solver(const FreeProduct& fp, const NormalForm& r) {
  auto R = symmetrized_closure(fp, {r});
  auto c = dehn_constants(R, fp);
  return DehnSolver(fp, R, c);
}

std::string join(const std::vector<std::size_t>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + "}";
}

// ---- criteria ---------------------------------------------------------

void criterion_cancellation(AcceptanceRow& row) {
  auto fp = corpus::ab7_group();
  auto R = symmetrized_closure(fp, {corpus::ab7_relator(fp)});
  auto rep = pieces(R);
  auto cert = check_metric_condition(rep, Rational(1, 7));
  row.pass = cert.holds && rep.optimal_lambda == Rational(1, 14) && R.size() == 4;
  row.detail = "members " + std::to_string(R.size()) + ", lambda* = " +
               to_string(rep.optimal_lambda) + ", C'(1/7) " + (cert.holds ? "holds" : "fails");
}

void criterion_geometric_gap(AcceptanceRow& row) {
  auto fp = corpus::ab7_group();
  auto S = make_solver(fp, corpus::ab7_relator(fp));
  auto X = coned_ball(S, 7);
  auto g = geometric_piece_ratio(X);
  const Rational seventh(1, 7), eps(1, 1000);
  const bool strict = g.ratio < seventh;
  const bool relaxed = g.ratio < seventh + eps;
  row.pass = g.ratio == seventh && !strict && relaxed;
  row.detail = "radius 7: " + std::to_string(X.vertices.size()) + " vertices, " +
               std::to_string(X.edges.size()) + " edges, " + std::to_string(X.cells.size()) +
               " cells; ratio " + to_string(g.ratio) + ", C'(1/7) " +
               (strict ? "holds" : "fails") + ", C'(1/7 + 1/1000) " +
               (relaxed ? "holds" : "fails");
}

void criterion_dehn(AcceptanceRow& row, const AcceptanceOptions& opt) {
  auto fp = corpus::ab7_group();
  auto S = make_solver(fp, corpus::ab7_relator(fp));
  const auto& members = S.relators().members();
  std::mt19937_64 rng(opt.seed);

  std::vector<NormalForm> trivial;
  while (trivial.size() < opt.dehn_samples) {
    const std::size_t terms = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    NormalForm w;
    for (std::size_t t = 0; t < terms; ++t) {
      const auto& r = members[std::uniform_int_distribution<std::size_t>(0, members.size() - 1)(rng)];
      auto u = random_normal_form(fp, std::uniform_int_distribution<std::size_t>(0, 12)(rng), rng);
      auto term = fp.conjugate(rng() & 1 ? r : fp.inverse(r), u);
      w = fp.multiply(w, term);
    }
    if (!w.empty() && fp.generator_length(w) <= 120) trivial.push_back(w);
  }

  // Non-members are certified by their image in PSL(2,7), acting regularly
  // on its 168 cosets.
  auto table = todd_coxeter(psl27(), {}, opt.budget.max_cosets);
  if (!table || table->cosets != 168) {
    row.detail = "finite quotient oracle unavailable";
    return;
  }
  std::vector<NormalForm> nontrivial;
  std::size_t rejected = 0;
  const auto& gens_a = fp.factor(0).generating_set();
  const auto& gens_b = fp.factor(1).generating_set();
  while (nontrivial.size() < opt.dehn_samples) {
    const int side = int(rng() & 1);
    const auto& gens = side == 0 ? gens_a : gens_b;
    auto x = fp.syllable(side, gens[std::uniform_int_distribution<std::size_t>(0, gens.size() - 1)(rng)]);
    auto w = random_normal_form(fp, std::uniform_int_distribution<std::size_t>(1, 10)(rng), rng);
    // Keep the tail short of any relator majority.
    if (S.linear_step(w)) { ++rejected; continue; }
    auto candidate = fp.multiply(x, w);
    if (candidate.empty() || table->act(0, ab7_image(candidate)) == 0) { ++rejected; continue; }
    nontrivial.push_back(candidate);
  }

  const auto a = word_problem_batch(S, trivial);
  const auto b = word_problem_batch(S, nontrivial);
  std::size_t ok_a = 0, ok_b = 0;
  for (bool v : a) ok_a += v;
  for (bool v : b) ok_b += !v;
  std::size_t replayed = 0;
  for (std::size_t i = 0; i < trivial.size() && i < 20; ++i) replayed += S.replay(S.dehn_reduce(trivial[i]));
  const std::size_t replay_target = std::min<std::size_t>(trivial.size(), 20);
  row.pass = ok_a == trivial.size() && ok_b == nontrivial.size() && replayed == replay_target;
  row.detail = "trivial " + std::to_string(ok_a) + "/" + std::to_string(trivial.size()) +
               ", nontrivial " + std::to_string(ok_b) + "/" + std::to_string(nontrivial.size()) +
               " (oracle rejected " + std::to_string(rejected) + " candidates), replayed " +
               std::to_string(replayed) + "/" + std::to_string(replay_target);
}

bool fully_certified(const TruncatedSpectrum& s) {
  for (std::size_t l = 3; l <= s.horizon; ++l) {
    auto it = s.entries.find(l);
    if (it == s.entries.end() || it->second.verdict == Taut::unknown || it->second.certificate.empty())
      return false;
  }
  return true;
}

void criterion_spectrum_oracles(AcceptanceRow& row, const AcceptanceOptions& opt) {
  bool ok = true;
  std::string failures;
  auto tree = taut_spectrum_bruteforce(binary_tree(4), 14, opt.budget);
  if (!tree.lengths(Taut::in).empty() || !fully_certified(tree)) {
    ok = false;
    failures += " tree";
  }
  for (std::size_t n = 3; n <= 12; ++n) {
    auto h = taut_spectrum_bruteforce(cycle_graph(n), 14, opt.budget);
    if (h.lengths(Taut::in) != std::vector<std::size_t>{n} || !fully_certified(h)) {
      ok = false;
      failures += " C" + std::to_string(n);
    }
  }
  row.pass = ok;
  row.detail = ok ? "H(tree) = {}, H(C_n) = {n} for n = 3..12, every length to 14 certified"
                  : "failed:" + failures;
}

void criterion_free_product(AcceptanceRow& row, const AcceptanceOptions& opt) {
  FreeProduct fp(Factor::cyclic("A", "a", 5), Factor::cyclic("B", "b", 7));
  const std::size_t horizon = 8;
  auto ball = cayley_ball(fp, 4);
  auto brute = taut_spectrum_bruteforce(ball.graph, horizon, opt.budget);
  auto ha = taut_spectrum_bruteforce(cayley_ball(fp.factor(0), 8).graph, horizon, opt.budget);
  auto hb = taut_spectrum_bruteforce(cayley_ball(fp.factor(1), 8).graph, horizon, opt.budget);
  auto prod = product_spectrum(ha, hb);
  std::size_t decided = 0, unknown_late = 0;
  std::string bad;
  for (std::size_t l = 3; l <= horizon; ++l) {
    const Taut x = brute.at(l), y = prod.at(l);
    if (x == Taut::unknown || y == Taut::unknown) {
      if (l + 2 < horizon) bad += " unknown@" + std::to_string(l);
      else ++unknown_late;
      continue;
    }
    ++decided;
    if (x != y) bad += " disagree@" + std::to_string(l);
  }
  row.pass = bad.empty();
  row.detail = "ball " + std::to_string(ball.graph.vertex_count()) + " vertices, brute " +
               join(brute.lengths(Taut::in)) + ", product " + join(prod.lengths(Taut::in)) +
               ", " + std::to_string(decided) + " decided, " + std::to_string(unknown_late) +
               " unknown near horizon" + (bad.empty() ? "" : ";" + bad);
}

// For each decided In above ell0 in `from`, look for an In inside the window
// in `to`; an Unknown inside the window also counts as not refuted.
std::string bracket_failures(const TruncatedSpectrum& from, const TruncatedSpectrum& to,
                             BracketDirection dir, const DehnConstants& c, std::size_t& checked) {
  std::string bad;
  for (std::size_t l : from.lengths(Taut::in)) {
    if (l <= c.ell0) continue;
    ++checked;
    auto win = quotient_bracket(l, dir, c);
    bool partner = false, open = false;
    for (std::size_t m = win.lo; m <= win.hi; ++m) {
      const Taut t = to.at(m);
      partner |= t == Taut::in;
      open |= t == Taut::unknown;
    }
    if (!partner && !open) bad += " " + std::to_string(l);
  }
  return bad;
}

void criterion_brackets(AcceptanceRow& row, const AcceptanceOptions& opt) {
  auto fp = corpus::ab4_group();
  auto S = make_solver(fp, corpus::ab4_relator(fp));
  const auto& c = S.constants();
  auto ball = cayley_ball(S, 6);
  auto hq = taut_spectrum_bruteforce(ball.graph, ball.horizon_margin(), opt.budget);
  const std::size_t fh = 40;
  auto ha = taut_spectrum_bruteforce(cayley_ball(fp.factor(0), fh).graph, fh, opt.budget);
  auto hb = taut_spectrum_bruteforce(cayley_ball(fp.factor(1), fh).graph, fh, opt.budget);
  auto hf = product_spectrum(ha, hb);
  std::size_t checked = 0;
  auto bad_q = bracket_failures(hq, hf, BracketDirection::quotient_to_factors, c, checked);
  auto bad_f = bracket_failures(hf, hq, BracketDirection::factors_to_quotient, c, checked);
  row.pass = c.condition_holds && bad_q.empty() && bad_f.empty() && checked > 0;
  row.detail = "ell0 = " + std::to_string(c.ell0) + ", H(G) " + join(hq.lengths(Taut::in)) +
               " to " + std::to_string(hq.horizon) + ", H(A*B) " + join(hf.lengths(Taut::in)) +
               " to " + std::to_string(hf.horizon) + ", " + std::to_string(checked) +
               " lengths bracketed" + (bad_q.empty() ? "" : "; unmatched in G:" + bad_q) +
               (bad_f.empty() ? "" : "; unmatched in A*B:" + bad_f);
}

void criterion_dimensions(AcceptanceRow& row) {
  const ScpHypotheses hyp{true, true, true, "asserted"};
  std::vector<std::string> bad;

  // FIN pattern: a proper Eilenberg-Ganea factor with a torsion-free C'(1/6)
  // factor of geometric dimension two.
  DimensionProfile a, b;
  a.name = "A";
  a.cd_fin = DimInterval::exact(2);
  a.gd_fin = DimInterval::exact(3);
  b.name = "B";
  b.cd_fin = DimInterval::exact(2);
  b.gd_fin = DimInterval::exact(2);
  auto g1 = scp_dimensions(a, b, hyp).group;
  if (!(g1.cd_fin == DimInterval::exact(2) && g1.gd_fin == DimInterval::exact(3) &&
        eilenberg_ganea_verdict(g1, Family::fin) == Tri::yes))
    bad.push_back("FIN");

  // VCYC pattern: factor VCYC data only from the small-centralizer bound.
  for (auto* p : {&a, &b}) {
    p->flags.finitely_generated = p->flags.small_centralizers = p->flags.acc_finite_subgroups = true;
    *p = vcyc_from_fin(*p);
  }
  auto g2 = scp_dimensions(a, b, hyp).group;
  if (!(g2.gd_vc == DimInterval{2, 3} && g2.cd_vc == DimInterval::exact(2) &&
        eilenberg_ganea_verdict(g2, Family::vcyc) == Tri::unknown &&
        g2.flags.small_centralizers && g2.flags.acc_finite_subgroups))
    bad.push_back("VCYC-bracket");

  // With exact VCYC values (2, 3) for the first factor the bracket closes.
  a.cd_vc = DimInterval::exact(2);
  a.gd_vc = DimInterval::exact(3);
  auto g3 = scp_dimensions(a, b, hyp).group;
  if (!(g3.gd_vc == DimInterval::exact(3) && g3.cd_vc == DimInterval::exact(2) &&
        eilenberg_ganea_verdict(g3, Family::vcyc) == Tri::yes))
    bad.push_back("VCYC-exact");

  // Ring pattern.
  DimensionProfile ra, rb;
  ra.name = "A";
  ra.cd_ring = {{"Q", DimInterval::exact(2)}, {"Z", DimInterval::exact(3)}};
  rb.name = "B";
  rb.cd_ring = {{"Q", DimInterval::at_most(2)}, {"Z", DimInterval::at_most(3)}};
  auto g4 = scp_dimensions(ra, rb, hyp).group;
  if (!(g4.cd_ring["Q"] == DimInterval::exact(2) && g4.cd_ring["Z"] == DimInterval::exact(3)))
    bad.push_back("ring");

  row.pass = bad.empty();
  std::ostringstream out;
  out << "FIN (cd, gd) = (" << g1.cd_fin.format() << ", " << g1.gd_fin.format() << "); VCYC cd "
      << g2.cd_vc.format() << ", gd " << g2.gd_vc.format() << "; exact VCYC (" << g3.cd_vc.format()
      << ", " << g3.gd_vc.format() << "); cd_Q " << g4.cd_ring["Q"].format() << ", cd_Z "
      << g4.cd_ring["Z"].format();
  for (const auto& x : bad) out << "; failed " << x;
  row.detail = out.str();
}

void criterion_ping_pong(AcceptanceRow& row, const AcceptanceOptions& opt) {
  std::mt19937_64 rng(opt.seed + 8);
  const FreeProduct groups[] = {
      FreeProduct(Factor::free("A", {"x"}), Factor::free("B", {"y"})),
      corpus::staircase_group(),
  };
  std::size_t moved = 0, total = 0;
  for (std::size_t i = 0; i < opt.ping_pong_samples; ++i) {
    const auto& fp = groups[i % 2];
    auto w = random_normal_form(fp, std::uniform_int_distribution<std::size_t>(1, 12)(rng), rng);
    auto r = ping_pong_trace(fp, w);
    ++total;
    if (r.kind == PingPongResult::Kind::moved && monotone_depth(r) && r.trace.back().depth == w.size())
      ++moved;
  }
  // Finite-order syllables must stop the simulation.
  FreeProduct mixed(Factor::free("A", {"x"}), Factor::cyclic("B", "b", 3));
  std::size_t stopped = 0, with_torsion = 0;
  for (std::size_t i = 0; i < 200; ++i) {
    auto w = random_normal_form(mixed, std::uniform_int_distribution<std::size_t>(2, 12)(rng), rng);
    ++with_torsion;
    stopped += ping_pong_trace(mixed, w).kind == PingPongResult::Kind::inconclusive;
  }
  const bool empty_fixed =
      ping_pong_trace(mixed, mixed.identity()).kind == PingPongResult::Kind::fixed;
  row.pass = moved == total && stopped == with_torsion && empty_fixed;
  row.detail = "moved " + std::to_string(moved) + "/" + std::to_string(total) +
               " with monotone depth, inconclusive " + std::to_string(stopped) + "/" +
               std::to_string(with_torsion) + " with finite-order syllables, empty word " +
               (empty_fixed ? "fixed" : "not fixed");
}

void criterion_staircase(AcceptanceRow& row) {
  auto fp = corpus::staircase_group();
  auto r = corpus::staircase_relator(fp);
  auto R = symmetrized_closure(fp, {r});
  auto rep = pieces(R);
  const bool agree = rep == pieces_serial(R);
  auto c12 = check_metric_condition(rep, Rational(1, 12));
  auto c6 = check_metric_condition(rep, Rational(1, 6));
  if (rep.witnesses.empty()) {
    row.detail = "no piece witness reported";
    return;
  }
  const auto& w = rep.witnesses.front();
  row.pass = agree && c12.holds == (rep.optimal_lambda < Rational(1, 12));
  row.detail = std::to_string(r.size()) + " syllables, " + std::to_string(R.size()) +
               " members, lambda* = " + to_string(rep.optimal_lambda) + " (piece " +
               std::to_string(w.length) + " of " + std::to_string(R.members()[w.first].size()) +
               ", members " + std::to_string(w.first) + "/" + std::to_string(w.second) +
               "), C'(1/12) " + (c12.holds ? "holds" : "fails") + ", C'(1/6) " +
               (c6.holds ? "holds" : "fails") + (agree ? "" : "; parallel and serial disagree");
}

void run_one(int id, AcceptanceRow& row, const AcceptanceOptions& opt) {
  switch (id) {
    case 1: criterion_cancellation(row); break;
    case 2: criterion_geometric_gap(row); break;
    case 3: criterion_dehn(row, opt); break;
    case 4: criterion_spectrum_oracles(row, opt); break;
    case 5: criterion_free_product(row, opt); break;
    case 6: criterion_brackets(row, opt); break;
    case 7: criterion_dimensions(row); break;
    case 8: criterion_ping_pong(row, opt); break;
    case 9: criterion_staircase(row); break;
    case 10: {
      std::vector<AcceptanceRow> first, second;
      for (int k = 1; k <= 9; ++k) first.push_back(run_acceptance(k, opt));
      for (int k = 1; k <= 9; ++k) second.push_back(run_acceptance(k, opt));
      const std::string x = to_json(first).dump(), y = to_json(second).dump();
      row.pass = x == y;
      row.detail = "two runs of criteria 1-9: reports " +
                   std::string(row.pass ? "byte-identical" : "differ") + " (" +
                   std::to_string(x.size()) + " bytes)";
      break;
    }
    default: throw SpecError("no acceptance criterion " + std::to_string(id));
  }
}

const char* kNames[] = {"",
                        "C'(lambda) certification of (ab)^7",
                        "geometric piece gap on the coned ball",
                        "Dehn solver completeness on small words",
                        "spectrum oracles for trees and cycles",
                        "free product spectrum equality",
                        "bracket windows on the (ab)^4 quotient",
                        "dimension formulas",
                        "ping-pong totality",
                        "relator family audit",
                        "determinism"};
const double kLimits[] = {0, 1, 10, 30, 60, 300, 600, 1, 5, 5, 0};

}  // namespace

AcceptanceRow run_acceptance(int id, const AcceptanceOptions& opt) {
  if (id < 1 || id > 10) throw SpecError("no acceptance criterion " + std::to_string(id));
  AcceptanceRow row;
  row.id = id;
  row.name = kNames[id];
  const auto t0 = Clock::now();
  try {
    run_one(id, row, opt);
  } catch (const std::exception& e) {
    row.pass = false;
    row.detail = std::string("error: ") + e.what();
  }
  row.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  row.limit_seconds = kLimits[id];
  return row;
}

std::vector<AcceptanceRow> run_acceptance_suite(const AcceptanceOptions& opt) {
  std::vector<AcceptanceRow> rows;
  for (int id = 1; id <= 10; ++id) rows.push_back(run_acceptance(id, opt));
  return rows;
}

nlohmann::ordered_json to_json(const std::vector<AcceptanceRow>& rows) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : rows)
    arr.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
  return arr;
}

}  // namespace sc
