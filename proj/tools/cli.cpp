#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "eulerpiv/gale.hpp"
#include "eulerpiv/generate.hpp"
#include "eulerpiv/graph.hpp"
#include "eulerpiv/oik.hpp"
#include "eulerpiv/oracle.hpp"
#include "eulerpiv/polytope.hpp"
#include "eulerpiv/switchcycle.hpp"

namespace eulerpiv {

namespace {

struct Globals {
  std::uint64_t seed = 1;
  bool trace = false;
  bool debug_invariants = false;
  std::optional<long long> start;
  std::string format = "text";
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Parse, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string header_keyword(const std::string& text) {
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (ls >> tok) return tok;
  }
  fail(ErrorCode::Parse, "empty input");
}

int to_int(const std::string& tok) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != tok.size()) fail(ErrorCode::Parse, "expected integer, got '" + tok + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

// "123" or "10.11.12"
Room parse_room(const std::string& tok) {
  Room r;
  if (tok.find('.') == std::string::npos) {
    for (char c : tok) {
      if (c < '1' || c > '9') fail(ErrorCode::Parse, "bad room '" + tok + "'");
      r.push_back(c - '0');
    }
  } else {
    for (const auto& part : split(tok, '.')) r.push_back(to_int(part));
  }
  std::sort(r.begin(), r.end());
  return r;
}

std::string edge_list(const Digraph& g, const Matching& M) {
  std::string out;
  for (EdgeIndex e : M) out += ' ' + std::to_string(g.edge(e).tail) + "->" + std::to_string(g.edge(e).head);
  return out;
}

std::string pass(bool ok) { return ok ? "PASS" : "FAIL"; }

void print_trace(std::ostream& out, const std::vector<std::string>& trace) {
  for (const auto& line : trace) out << "trace: " << line << '\n';
}

// ---- gen

int cmd_gen(const Globals& gl, const std::string& kind, int a, int b, std::ostream& out) {
  Rng rng(gl.seed);
  if (kind == "euler") {
    out << format_digraph(random_euler_instance(a, b, rng));
  } else if (kind == "bipartite") {
    out << format_digraph(random_bipartite_instance(a, b, rng));
  } else if (kind == "simple") {
    out << format_digraph(random_simple_digraph(a, rng));
  } else if (kind == "oik") {
    const OikFile f = random_two_oik(a, std::max(b, 1), rng);
    out << format_oik(f.oik, &*f.sigma);
  } else if (kind == "octahedron") {
    const OikFile f = octahedron_oik();
    out << format_oik(f.oik, &*f.sigma);
  } else if (kind == "klein") {
    out << format_oik(klein_bottle_oik(std::max(a, 3), std::max(b, 3)));
  } else if (kind == "polytope") {
    const UnitVectorGame game = random_unit_vector_game(a, std::max(b, 1), 4, rng);
    out << format_polytope(build_unit_vector_polytope(game.C, game.labels));
  } else if (kind == "gale") {
    out << format_gale(random_gale_labeling(a, b, rng));
  } else {
    fail(ErrorCode::BadParams, "unknown instance kind '" + kind + "'");
  }
  return 0;
}

// ---- solve

struct SolveArgs {
  std::string file;
  std::string algo = "switchcycle";
  int drop = 1;
  std::string partition;
  std::string basis;
  bool unordered = false;
  bool flip_even = false;
};

int solve_digraph(const Globals& gl, const SolveArgs& sa, const Digraph& g, std::ostream& out) {
  const Matching& M = g.matched();
  const Sign sign_in = matching_sign(g, M);
  Matching result;
  std::vector<std::string> trace;
  std::string cycle;
  if (sa.algo == "switchcycle") {
    SwitchOptions opt;
    opt.trace = gl.trace;
    opt.debug_invariants = gl.debug_invariants;
    if (gl.start) {
      if (*gl.start < 0) fail(ErrorCode::BadParams, "start edge must be non-negative");
      opt.start = static_cast<EdgeIndex>(*gl.start);
    }
    const SwitchResult r = find_opposite_matching(g, M, opt);
    result = r.matching;
    trace = r.trace;
    cycle = format_cycle(r.cycle);
    if (gl.debug_invariants) trace.push_back("invariant_checks: " + std::to_string(r.invariant_checks));
  } else if (sa.algo == "bipartite") {
    Node start = 1;
    if (gl.start) {
      if (*gl.start < 0 || *gl.start >= static_cast<long long>(g.edge_count())) fail(ErrorCode::BadParams, "start edge out of range");
      start = g.edge(static_cast<EdgeIndex>(*gl.start)).tail;
    }
    const BipartiteResult r = bipartite_opposite_matching(g, M, start);
    result = r.matching;
    cycle = "cycle:";
    for (EdgeIndex e : r.cycle) cycle += ' ' + std::to_string(e);
    trace.push_back("node_visits: " + std::to_string(r.node_visits));
  } else if (sa.algo == "exchange") {
    PathOptions opt;
    opt.trace = gl.trace;
    result = exchange_matching(g, sa.drop, opt);
    cycle = "cycle:";
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
      if (M.contains(e) != result.contains(e)) cycle += ' ' + std::to_string(e);
    }
  } else {
    fail(ErrorCode::BadParams, "algorithm '" + sa.algo + "' does not apply to digraphs");
  }
  if (gl.format == "dot") {
    out << to_dot(g, &result);
    return 0;
  }
  if (gl.trace || gl.debug_invariants || sa.algo == "bipartite") print_trace(out, trace);
  out << "matching:" << edge_list(g, result) << '\n';
  out << "sign_in: " << sign_in << '\n';
  out << "sign_out: " << matching_sign(g, result) << '\n';
  out << cycle << '\n';
  return 0;
}

int solve_oik(const Globals& gl, const SolveArgs& sa, const OikFile& f, std::ostream& out) {
  if (sa.algo != "exchange") fail(ErrorCode::BadParams, "oik files are solved with --algo exchange");
  if (sa.partition.empty()) fail(ErrorCode::BadParams, "--partition is required");
  const OrientedOik oik = orient_and_pair(f.oik, f.sigma);
  std::vector<int> start;
  for (const auto& tok : split(sa.partition, ',')) {
    const auto r = find_room(f.oik, parse_room(tok));
    if (!r) fail(ErrorCode::NotAPartition, "'" + tok + "' is not a room");
    start.push_back(*r);
  }
  PathOptions opt;
  opt.trace = gl.trace;
  const int h = static_cast<int>(start.size());
  ExchangeResult r;
  std::vector<OrientedOik> family(static_cast<std::size_t>(h), oik);
  auto name = [&](const std::vector<int>& s) {
    std::string txt = sa.unordered ? "{" : "(";
    for (std::size_t p = 0; p < s.size(); ++p) txt += (p ? "," : "") + room_name(oik.room(s[p]));
    return txt + (sa.unordered ? "}" : ")");
  };
  if (sa.unordered) {
    r = exchange_path_unordered(oik, h, start, sa.drop, opt);
  } else {
    r = exchange_path(family, start, sa.drop, opt);
  }
  print_trace(out, r.trace);
  out << "path:";
  for (const auto& s : r.states) out << ' ' << name(s);
  out << '\n';
  out << "end: " << name(r.end) << '\n';
  out << "steps: " << r.steps << '\n';
  if (r.start_sign) out << "sign_in: " << *r.start_sign << '\n';
  if (r.end_sign) out << "sign_out: " << *r.end_sign << '\n';
  return 0;
}

bool is_unit_vector_form(const LabeledPolytope& P) {
  const int m = P.dim();
  if (P.constraint_count() < m) return false;
  for (int i = 0; i < m; ++i) {
    if (P.b(i) != 0 || P.labels[i] != i + 1) return false;
    for (int c = 0; c < m; ++c) {
      if (P.a(i, c) != (c == i ? -1 : 0)) return false;
    }
  }
  for (int j = m; j < P.constraint_count(); ++j) {
    if (P.b(j) != 1) return false;
  }
  return true;
}

int solve_polytope(const Globals& gl, const SolveArgs& sa, const LabeledPolytope& P, std::ostream& out) {
  if (sa.algo != "lemke") fail(ErrorCode::BadParams, "polytope files are solved with --algo lemke");
  Basis start = origin_basis(P.dim());
  if (!sa.basis.empty()) {
    start.clear();
    for (const auto& tok : split(sa.basis, ',')) start.push_back(to_int(tok));
    std::sort(start.begin(), start.end());
  }
  PathOptions opt;
  opt.trace = gl.trace;
  const LemkeResult r = lemke_path(P, start, sa.drop, sa.flip_even, opt);
  print_trace(out, r.path.trace);
  PolytopeSystem sys(P, sa.flip_even);
  out << "start: " << sys.state_name(r.path.start) << " x=" << format_vector(r.start_x) << '\n';
  out << "end: " << sys.state_name(r.path.end) << " x=" << format_vector(r.end_x) << '\n';
  out << "steps: " << r.path.steps << '\n';
  out << "sign_in: " << r.path.start_sign << '\n';
  out << "sign_out: " << r.path.end_sign << '\n';
  if (is_unit_vector_form(P) && std::any_of(r.end_x.begin(), r.end_x.end(), [](const Rational& v) { return v != 0; })) {
    const int m = P.dim();
    const RationalMatrix C = P.a.bottomRows(P.constraint_count() - m);
    const std::vector<int> labels(P.labels.begin() + m, P.labels.end());
    const Equilibrium eq = extract_equilibrium(C, labels, r.end_x);
    out << "equilibrium: xhat=" << format_vector(eq.xhat) << " yhat=" << format_vector(eq.yhat) << '\n';
  }
  return 0;
}

int cmd_solve(const Globals& gl, const SolveArgs& sa, std::ostream& out) {
  const std::string text = read_file(sa.file);
  const std::string kind = header_keyword(text);
  if (kind == "euler") return solve_digraph(gl, sa, parse_digraph(text), out);
  if (kind == "oik") return solve_oik(gl, sa, parse_oik(text), out);
  if (kind == "polytope") return solve_polytope(gl, sa, parse_polytope(text), out);
  fail(ErrorCode::Parse, "unknown file type '" + kind + "'");
}

// ---- verify

int verify_digraph(const Digraph& g, std::ostream& out) {
  bool ok = true;
  const InstanceReport rep = validate_instance(g);
  out << "nodes: " << g.node_count() << '\n';
  out << "edges: " << g.edge_count() << '\n';
  out << "eulerian: " << (rep.eulerian ? "yes" : "no") << '\n';
  const auto matchings = enumerate_matchings(g);
  const std::uint64_t dp = count_perfect_matchings(g);
  const bool count_ok = dp == matchings.size();
  ok = ok && count_ok;
  out << "matchings: " << matchings.size() << ' ' << pass(count_ok) << '\n';
  std::int64_t sum = 0;
  for (const Matching& M : matchings) sum += matching_sign(g, M).value();
  if (rep.eulerian && g.node_count() % 2 == 0) {
    ok = ok && sum == 0;
    out << "signed_sum: " << sum << ' ' << pass(sum == 0) << '\n';
  } else {
    out << "signed_sum: " << sum << " SKIP\n";
  }
  const SkewMatrix B = skew_adjacency(g);
  const BigInt det = determinant_exact(B);
  if (g.node_count() % 2 == 0) {
    const BigInt pf = pfaffian_expansion(B);
    const bool pf_ok = det == pf * pf && pf == sum;
    ok = ok && pf_ok;
    out << "det_eq_pf2: " << pass(pf_ok) << '\n';
  } else {
    ok = ok && det == 0;
    out << "det_zero_odd_m: " << pass(det == 0) << '\n';
  }
  return ok ? 0 : 3;
}

int verify_oik(const OikFile& f, std::ostream& out) {
  const OrientedOik oik = orient_and_pair(f.oik, f.sigma);
  out << "coherent: " << pass(is_coherent(oik.oik, oik.sigma)) << '\n';
  if (oik.n() % oik.d() != 0) {
    out << "partitions: SKIP\n";
    return 0;
  }
  const std::vector<OrientedOik> family(static_cast<std::size_t>(oik.n() / oik.d()), oik);
  int plus = 0, minus = 0;
  for (const auto& s : enumerate_partitions(family)) (partition_sign(family, s).positive() ? plus : minus)++;
  out << "ordered_partitions: " << plus + minus << " plus=" << plus << " minus=" << minus << ' '
      << pass(plus == minus) << '\n';
  return plus == minus ? 0 : 3;
}

int verify_polytope(const LabeledPolytope& P, std::ostream& out) {
  PolytopeSystem sys(P);
  int plus = 0, minus = 0;
  const auto vertices = enumerate_vertices(P);
  for (const auto& v : vertices) {
    if (classify(sys, v.basis).is_cl()) (state_sign(sys, v.basis).positive() ? plus : minus)++;
  }
  out << "vertices: " << vertices.size() << '\n';
  out << "cl_vertices: " << plus + minus << " plus=" << plus << " minus=" << minus << ' ' << pass(plus == minus)
      << '\n';
  return plus == minus ? 0 : 3;
}

int cmd_verify(const std::string& file, std::ostream& out) {
  const std::string text = read_file(file);
  const std::string kind = header_keyword(text);
  if (kind == "euler") return verify_digraph(parse_digraph(text), out);
  if (kind == "oik") return verify_oik(parse_oik(text), out);
  if (kind == "polytope") return verify_polytope(parse_polytope(text), out);
  fail(ErrorCode::Parse, "unknown file type '" + kind + "'");
}

// ---- bench

int cmd_bench(const Globals& gl, const std::vector<std::size_t>& sizes, std::ostream& out) {
  const bool csv = gl.format == "csv";
  const char sep = csv ? ',' : ' ';
  out << "edges" << sep << "nodes" << sep << "finds" << sep << "parent_steps" << sep << "unites" << sep
      << "edge_visits" << sep << "list_ops" << sep << "op_count" << sep << "ratio" << sep << "sign_ok" << sep
      << "ms\n";
  for (std::size_t size : sizes) {
    Rng rng(gl.seed ^ (0x9e3779b97f4a7c15ULL * size));
    const Digraph g = bench_instance(size, rng);
    const auto t0 = std::chrono::steady_clock::now();
    const SwitchResult r = find_opposite_matching(g, g.matched());
    const auto t1 = std::chrono::steady_clock::now();
    const bool sign_ok = matching_sign(g, r.matching) == -matching_sign(g, g.matched());
    const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    std::ostringstream ratio;
    ratio << std::fixed << std::setprecision(3) << static_cast<double>(r.ops.total()) / g.edge_count();
    std::ostringstream time;
    time << std::fixed << std::setprecision(2) << ms;
    out << g.edge_count() << sep << g.node_count() << sep << r.ops.finds << sep << r.ops.parent_steps << sep
        << r.ops.unites << sep << r.ops.edge_visits << sep << r.ops.list_ops << sep << r.ops.total() << sep
        << ratio.str() << sep << (sign_ok ? "yes" : "no") << sep << time.str() << '\n';
  }
  return 0;
}

// ---- oik, polytope, gale reports

int cmd_oik(const std::string& file, std::ostream& out) {
  const OikFile f = parse_oik(read_file(file));
  const OikReport rep = validate_oik(f.oik);
  out << "d: " << f.oik.d << '\n';
  out << "nodes: " << f.oik.n << '\n';
  out << "rooms: " << f.oik.rooms.size() << '\n';
  out << "is_oik: " << (rep.is_oik ? "yes" : "no") << '\n';
  if (!rep.is_oik) {
    out << "offending_wall: " << room_name(*rep.offending_wall) << '\n';
    return 2;
  }
  out << "is_manifold: " << (rep.is_manifold ? "yes" : "no") << '\n';
  const OrientedOik oik = orient_and_pair(f.oik, f.sigma);
  out << "orientation:";
  for (Sign s : oik.sigma) out << ' ' << s;
  out << '\n';
  if (oik.n() % oik.d() == 0 && oik.n() <= 14) {
    const int h = oik.n() / oik.d();
    const std::vector<OrientedOik> family(static_cast<std::size_t>(h), oik);
    for (const auto& s : enumerate_partitions(family, true)) {
      out << "partition: {";
      for (int p = 0; p < h; ++p) out << (p ? "," : "") << room_name(oik.room(s[p]));
      out << "} sign=" << partition_sign(family, s) << '\n';
    }
  }
  return 0;
}

int cmd_polytope(const std::string& file, std::ostream& out) {
  const LabeledPolytope P = parse_polytope(read_file(file));
  PolytopeSystem sys(P);
  for (const auto& v : enumerate_vertices(P)) {
    out << "vertex: " << sys.state_name(v.basis) << " x=" << format_vector(v.x) << " sigma=" << v.sigma;
    if (classify(sys, v.basis).is_cl()) out << " CL sign=" << state_sign(sys, v.basis);
    out << '\n';
  }
  return 0;
}

int cmd_gale(const Globals& gl, const std::string& file, const std::string& start, int drop, std::ostream& out) {
  const GaleLabeling l = parse_gale(read_file(file));
  const Digraph g = derived_graph(l);
  const auto strings = enumerate_gale(l.m, l.n());
  out << "gale_strings: " << strings.size() << '\n';
  for (const auto& s : strings) {
    if (!is_completely_labeled(s, l)) continue;
    const Matching M = gale_to_matching(s, l);
    out << "cl: " << s << " matching:" << edge_list(g, M) << " sign=" << matching_sign(g, M) << '\n';
  }
  if (!start.empty()) {
    PathOptions opt;
    opt.trace = gl.trace;
    const auto path = gale_pivot_path(start, l, drop, opt);
    print_trace(out, path.trace);
    out << "end: " << path.end << '\n';
    out << "steps: " << path.steps << '\n';
    out << "sign_in: " << matching_sign(g, gale_to_matching(start, l)) << '\n';
    out << "sign_out: " << matching_sign(g, gale_to_matching(path.end, l)) << '\n';
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Complementary pivoting and oppositely signed perfect matchings"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals gl;
  long long start = -1;
  app.add_option("--seed", gl.seed, "random seed");
  app.add_flag("--trace", gl.trace, "print the pivoting trace");
  app.add_flag("--debug-invariants", gl.debug_invariants, "check class invariants after every step");
  auto* start_opt = app.add_option("--start", start, "matched edge index to start from");
  app.add_option("--format", gl.format, "output format")->check(CLI::IsMember({"text", "dot", "csv"}));

  std::string gen_kind;
  int gen_a = 4, gen_b = 0;
  auto* gen = app.add_subcommand("gen", "generate an instance");
  gen->add_option("kind", gen_kind, "euler|bipartite|simple|oik|octahedron|klein|polytope|gale")->required();
  gen->add_option("m", gen_a, "node count, dimension or label count");
  gen->add_option("extra", gen_b, "extra cycles, rows or length");

  SolveArgs sa;
  auto* solve = app.add_subcommand("solve", "run an algorithm on an instance file");
  solve->add_option("file", sa.file)->required();
  solve->add_option("--algo", sa.algo)->check(CLI::IsMember({"switchcycle", "bipartite", "exchange", "lemke"}));
  solve->add_option("--drop", sa.drop, "missing label");
  solve->add_option("--partition", sa.partition, "start rooms, e.g. 123,456");
  solve->add_option("--basis", sa.basis, "start vertex as constraint ids, e.g. 1,2");
  solve->add_flag("--unordered", sa.unordered, "unordered room partitions");
  solve->add_flag("--flip-even", sa.flip_even, "negate orientations in even dimension");

  std::string verify_file;
  auto* verify = app.add_subcommand("verify", "check an instance against brute-force oracles");
  verify->add_option("file", verify_file)->required();

  std::vector<std::size_t> sizes{1000, 10000, 100000, 1000000};
  auto* bench = app.add_subcommand("bench", "operation counts over a sweep of sizes");
  bench->add_option("--sizes", sizes)->delimiter(',');

  std::string oik_file;
  auto* oik = app.add_subcommand("oik", "validate, orient and partition an oik");
  oik->add_option("file", oik_file)->required();

  std::string poly_file;
  auto* poly = app.add_subcommand("polytope", "list the vertices of a labeled polytope");
  poly->add_option("file", poly_file)->required();

  std::string gale_file, gale_start;
  int gale_drop = 1;
  auto* gale = app.add_subcommand("gale", "Gale strings of a labeling");
  gale->add_option("file", gale_file)->required();
  gale->add_option("--string", gale_start, "start string for a pivoting path");
  gale->add_option("--drop", gale_drop, "missing label");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  if (*start_opt) gl.start = start;

  try {
    if (*gen) return cmd_gen(gl, gen_kind, gen_a, gen_b, out);
    if (*solve) return cmd_solve(gl, sa, out);
    if (*verify) return cmd_verify(verify_file, out);
    if (*bench) return cmd_bench(gl, sizes, out);
    if (*oik) return cmd_oik(oik_file, out);
    if (*poly) return cmd_polytope(poly_file, out);
    if (*gale) return cmd_gale(gl, gale_file, gale_start, gale_drop, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}

}  // namespace eulerpiv
