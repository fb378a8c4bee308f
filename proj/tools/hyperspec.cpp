// hyperspec: spectral analysis of hypergraphs under pluggable vertex and
// hyperedge weights. Subcommands: generate, spectrum, verify-theorems,
// bounds, simulate, report.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hyperspec/bounds.hpp"
#include "hyperspec/dynamics.hpp"
#include "hyperspec/error.hpp"
#include "hyperspec/families.hpp"
#include "hyperspec/io.hpp"
#include "hyperspec/theorems.hpp"
#include "json.hpp"

namespace {

using namespace hyperspec;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NumericalFailure:
      return 3;
    case ErrorCode::HypothesisViolated:
    case ErrorCode::TooLarge:
    case ErrorCode::NoWeakCut:
      return 4;
    default:
      return 2;
  }
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::ParseError, "cannot open '" + path + "' for writing");
  out << text;
}

WeightScheme load_scheme(const std::string& name,
                         const std::string& weights_path,
                         const Hypergraph& h) {
  WeightScheme scheme;
  scheme.kind = scheme_from_string(name);
  if (scheme.kind != SchemeKind::Custom) return scheme;
  if (weights_path.empty())
    fail(ErrorCode::MissingCustomValue,
         "custom scheme needs --weights <file> with delta_v and delta_e");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_input(weights_path));
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::ParseError, e.what());
  }
  if (doc.contains("delta_v"))
    for (const auto& [key, val] : doc["delta_v"].items())
      scheme.custom_delta_v[key] = val.get<double>();
  if (doc.contains("delta_e")) {
    if (doc["delta_e"].is_array()) {
      int i = 0;
      for (const auto& val : doc["delta_e"])
        scheme.custom_delta_e[i++] = val.get<double>();
    } else {
      for (const auto& [key, val] : doc["delta_e"].items())
        scheme.custom_delta_e[std::stoi(key)] = val.get<double>();
    }
  }
  (void)h;
  return scheme;
}

unsigned thread_budget() {
  if (const char* env = std::getenv("HYPERSPEC_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  return 1;
}

std::vector<double> initial_state(const std::string& spec,
                                  const Hypergraph& h) {
  if (spec == "ones") return std::vector<double>(h.n_vertices(), 1.0);
  if (spec.rfind("e:", 0) == 0) {
    std::vector<double> x(h.n_vertices(), 0.0);
    x[h.vertex_index(spec.substr(2))] = 1.0;
    return x;
  }
  if (spec == "uniform")
    return std::vector<double>(h.n_vertices(),
                               1.0 / static_cast<double>(h.n_vertices()));
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_input(spec));
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::ParseError, e.what());
  }
  std::vector<double> x;
  for (const auto& v : doc) x.push_back(v.get<double>());
  if (x.size() != h.n_vertices())
    fail(ErrorCode::DimensionMismatch, "x0 length must equal |V|");
  return x;
}

struct CommonArgs {
  std::string input;
  std::string output;
  std::string scheme = "rodriguez";
  std::string weights;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("input", args.input, "hypergraph JSON file ('-' = stdin)");
  cmd->add_option("-o,--output", args.output, "output path (default stdout)");
  cmd->add_option("--scheme", args.scheme,
                  "rodriguez | banerjee | normalized | signless | custom");
  cmd->add_option("--weights", args.weights, "custom weights JSON file");
}

// collects every predictor's output for the given scheme
std::vector<EigenPrediction> all_predictions(const Hypergraph& h,
                                             const WeightAssignment& wa,
                                             const Annotations& ann) {
  std::vector<EigenPrediction> preds = predict_intersection_family(h, wa);
  for (OperatorKind kind : {OperatorKind::L, OperatorKind::Adjacency}) {
    auto more = predict_cored_twins(h, wa, kind);
    preds.insert(preds.end(), more.begin(), more.end());
    more = predict_equal_petals(h, wa, kind);
    preds.insert(preds.end(), more.begin(), more.end());
  }
  auto adj = predict_adjacency_intersection(h, wa);
  preds.insert(preds.end(), adj.begin(), adj.end());
  if (ann.count("We:1") || ann.count("central")) {
    auto fam = predict_power_and_squid(h, wa, ann);
    preds.insert(preds.end(), fam.begin(), fam.end());
  }
  return preds;
}

io::JsonValue run_verification(const Hypergraph& h, const WeightAssignment& wa,
                               const Annotations& ann) {
  auto preds = all_predictions(h, wa, ann);
  std::vector<EigenPrediction> for_l, for_a;
  for (auto& p : preds)
    (p.operator_kind == OperatorKind::L ? for_l : for_a).push_back(p);
  VerificationReport merged;
  if (!for_l.empty()) {
    OperatorMatrix l = build(h, wa, OperatorKind::L);
    Spectrum sl = eig(l);
    VerificationReport r = verify(for_l, l, sl);
    merged.outcomes.insert(merged.outcomes.end(), r.outcomes.begin(),
                           r.outcomes.end());
    merged.all_pass = merged.all_pass && r.all_pass;
  }
  if (!for_a.empty()) {
    OperatorMatrix a = build(h, wa, OperatorKind::Adjacency);
    Spectrum sa = eig(a);
    VerificationReport r = verify(for_a, a, sa);
    merged.outcomes.insert(merged.outcomes.end(), r.outcomes.begin(),
                           r.outcomes.end());
    merged.all_pass = merged.all_pass && r.all_pass;
  }
  return io::verification_section(merged);
}

int run(int argc, char** argv) {
  CLI::App app{"general connectivity operators of hypergraphs"};
  app.require_subcommand(1);

  // generate ----------------------------------------------------------
  auto* gen = app.add_subcommand("generate", "emit a named-family hypergraph");
  std::string family, base_path, gen_output;
  int gl = 0, gr = 1, gt = 0, gk = 0, gs = 0, gd = 0;
  std::vector<int> core_sizes;
  gen->add_option("--family", family, "family name")->required();
  gen->add_option("--l", gl, "hyperflower petal groups");
  gen->add_option("--r", gr, "hyperflower cores");
  gen->add_option("--t", gt, "hyperflower twins per group");
  gen->add_option("--core-sizes", core_sizes, "hyperflower core sizes");
  gen->add_option("--k", gk, "uniformity");
  gen->add_option("--s", gs, "sunflower leaves");
  gen->add_option("--d", gd, "path/cycle size");
  gen->add_option("--base", base_path, "graph_power base graph file");
  gen->add_option("-o,--output", gen_output, "output path");

  // spectrum ----------------------------------------------------------
  auto* spec_cmd = app.add_subcommand("spectrum", "eigendecomposition");
  CommonArgs spectrum_args;
  std::string operator_name = "laplacian";
  bool with_vectors = false;
  double tolerance = -1.0;
  add_common(spec_cmd, spectrum_args);
  spec_cmd->add_option("--operator", operator_name,
                       "Q | L | laplacian | adjacency | inducedB | B0 | "
                       "normalizedL | deltaRW");
  spec_cmd->add_flag("--eigenvectors", with_vectors, "include eigenvectors");
  spec_cmd->add_option("--tolerance", tolerance, "cluster tolerance override");

  // verify-theorems ----------------------------------------------------
  auto* ver = app.add_subcommand("verify-theorems",
                                 "closed-form eigenvalue predictions");
  CommonArgs verify_args;
  add_common(ver, verify_args);

  // bounds -------------------------------------------------------------
  auto* bnd = app.add_subcommand("bounds", "spectral inequality audit");
  CommonArgs bounds_args;
  std::size_t exact_limit = 20;
  add_common(bnd, bounds_args);
  bnd->add_option("--exact-limit", exact_limit,
                  "max |V| for the exponential oracles");

  // simulate -----------------------------------------------------------
  auto* sim = app.add_subcommand("simulate", "dynamical processes");
  CommonArgs sim_args;
  std::string process = "diffusion", x0_spec = "e:1", format = "json";
  std::string method = "rk4", f_spec = "identity", g_spec = "identity";
  double dt = 1e-2, total_time = 1.0, eps = 0.1;
  std::size_t steps = 100, stride = 1;
  add_common(sim, sim_args);
  sim->add_option("--process", process, "diffusion | walk | coupled | infection");
  sim->add_option("--dt", dt, "time step");
  sim->add_option("--time", total_time, "total time (diffusion)");
  sim->add_option("--steps", steps, "step count (walk/coupled)");
  sim->add_option("--stride", stride, "store every k-th step");
  sim->add_option("--method", method, "euler | rk4");
  sim->add_option("--x0", x0_spec, "ones | uniform | e:<vertex> | file");
  sim->add_option("--eps", eps, "coupling strength");
  sim->add_option("--f", f_spec, "node map (identity | tanh | logistic:<a>)");
  sim->add_option("--g", g_spec, "coupling map");
  sim->add_option("--format", format, "json | csv");

  // report -------------------------------------------------------------
  auto* rep = app.add_subcommand("report",
                                 "spectrum + verify-theorems + bounds");
  CommonArgs report_args;
  std::vector<std::string> report_operators{"laplacian", "adjacency"};
  bool report_vectors = false;
  std::size_t report_exact_limit = 20;
  add_common(rep, report_args);
  rep->add_option("--operators", report_operators, "spectrum sections to emit");
  rep->add_flag("--eigenvectors", report_vectors, "include eigenvectors");
  rep->add_option("--exact-limit", report_exact_limit,
                  "max |V| for the exponential oracles");

  CLI11_PARSE(app, argc, argv);

  if (gen->parsed()) {
    FamilySpec fs;
    fs.family = family_from_string(family);
    fs.l = gl;
    fs.r = gr;
    fs.t = gt;
    fs.core_sizes = core_sizes;
    fs.k = gk;
    fs.s = gs;
    fs.d = gd;
    if (fs.family == Family::GraphPower) {
      if (base_path.empty())
        fail(ErrorCode::InvalidParams, "graph_power needs --base <file>");
      fs.base = io::parse_hypergraph(read_input(base_path)).hypergraph;
    }
    GeneratedHypergraph g = generate(fs);
    io::HypergraphFile file{g.hypergraph, g.annotations, false};
    write_output(gen_output, io::emit_hypergraph(file));
    return 0;
  }

  auto open = [&](const CommonArgs& args) {
    io::HypergraphFile file = io::parse_hypergraph(read_input(args.input));
    WeightScheme scheme = load_scheme(args.scheme, args.weights, file.hypergraph);
    WeightAssignment wa = resolve(scheme, file.hypergraph);
    return std::tuple<io::HypergraphFile, WeightScheme, WeightAssignment>(
        std::move(file), std::move(scheme), std::move(wa));
  };

  if (spec_cmd->parsed()) {
    auto [file, scheme, wa] = open(spectrum_args);
    OperatorMatrix m =
        build(file.hypergraph, wa, operator_kind_from_string(operator_name));
    Spectrum s = eig(m);
    if (tolerance > 0.0) {
      s.cluster_tolerance = tolerance;
      s.clusters = cluster_multiplicities(s, tolerance);
    }
    io::JsonValue body = io::JsonValue::object();
    body.set("hypergraph", io::hypergraph_summary(file.hypergraph));
    body.set("scheme", io::scheme_section(scheme, wa));
    body.set("spectrum", io::spectrum_section(s, with_vectors));
    write_output(spectrum_args.output, io::make_report(std::move(body)).dump());
    return 0;
  }

  if (ver->parsed()) {
    auto [file, scheme, wa] = open(verify_args);
    io::JsonValue body = io::JsonValue::object();
    body.set("hypergraph", io::hypergraph_summary(file.hypergraph));
    body.set("scheme", io::scheme_section(scheme, wa));
    body.set("verification",
             run_verification(file.hypergraph, wa, file.annotations));
    write_output(verify_args.output, io::make_report(std::move(body)).dump());
    return 0;
  }

  if (bnd->parsed()) {
    auto [file, scheme, wa] = open(bounds_args);
    Spectrum s = eig(build(file.hypergraph, wa, OperatorKind::Laplacian));
    AuditOptions opts;
    opts.exact_limit = exact_limit;
    opts.threads = thread_budget();
    BoundReport br = audit_bounds(file.hypergraph, wa, s, opts);
    io::JsonValue body = io::JsonValue::object();
    body.set("hypergraph", io::hypergraph_summary(file.hypergraph));
    body.set("scheme", io::scheme_section(scheme, wa));
    body.set("bounds", io::bounds_section(br));
    write_output(bounds_args.output, io::make_report(std::move(body)).dump());
    return 0;
  }

  if (sim->parsed()) {
    auto [file, scheme, wa] = open(sim_args);
    const Hypergraph& h = file.hypergraph;
    std::vector<double> x0 = initial_state(x0_spec, h);
    Trajectory traj;
    io::JsonValue meta = io::JsonValue::object();
    meta.set("process", io::JsonValue::string(process));
    if (process == "diffusion") {
      DiffusionOptions dopts;
      dopts.dt = dt;
      dopts.total_time = total_time;
      dopts.stride = stride;
      dopts.method = method == "euler" ? IntegrationMethod::Euler
                                       : IntegrationMethod::Rk4;
      traj = diffuse(h, wa, x0, dopts);
      meta.set("dt", io::JsonValue::number(dt));
      meta.set("time", io::JsonValue::number(total_time));
      meta.set("method", io::JsonValue::string(method));
    } else if (process == "walk") {
      RandomWalkResult rw = random_walk(h, wa, x0, steps, stride);
      traj = std::move(rw.trajectory);
      meta.set("sigma2", io::JsonValue::number(rw.sigma2));
      meta.set("limit_claimed", io::JsonValue::boolean(rw.limit_claimed));
      io::JsonValue lim = io::JsonValue::array();
      for (double v : rw.limit) lim.push(io::JsonValue::number(v));
      meta.set("limit", std::move(lim));
    } else if (process == "coupled") {
      ScalarMap f = ScalarMap::from_string(f_spec);
      ScalarMap g = ScalarMap::from_string(g_spec);
      std::vector<double> x = x0;
      std::vector<double> ones(h.n_vertices(), 1.0);
      traj.times.push_back(0.0);
      traj.states.push_back(x);
      traj.conserved.push_back(inner_product_V(wa, x, ones));
      for (std::size_t i = 1; i <= steps; ++i) {
        x = coupled_step(h, wa, x, f, g, eps);
        if (i % std::max<std::size_t>(1, stride) == 0 || i == steps) {
          traj.times.push_back(static_cast<double>(i));
          traj.states.push_back(x);
          traj.conserved.push_back(inner_product_V(wa, x, ones));
        }
      }
      meta.set("f", io::JsonValue::string(f.name));
      meta.set("g", io::JsonValue::string(g.name));
      meta.set("eps", io::JsonValue::number(eps));
    } else if (process == "infection") {
      ScalarMap f = ScalarMap::from_string(f_spec);
      InfectionRate ir = infection_rate(h, wa, x0, f);
      traj.times.push_back(0.0);
      traj.states.push_back(ir.rate);
      traj.conserved.push_back(0.0);
      meta.set("canonical_scheme", io::JsonValue::boolean(ir.canonical_scheme));
      if (!ir.canonical_scheme)
        std::cerr << "warning: infection model expects delta_V = 1 and "
                     "delta_E(e) = beta |e|^2\n";
    } else {
      fail(ErrorCode::InvalidParams, "unknown process '" + process + "'");
    }
    if (format == "csv") {
      write_output(sim_args.output, io::trajectory_csv(traj, h.vertex_ids()));
    } else {
      io::JsonValue body = io::JsonValue::object();
      body.set("hypergraph", io::hypergraph_summary(h));
      body.set("scheme", io::scheme_section(scheme, wa));
      body.set("simulation", std::move(meta));
      body.set("trajectory", io::trajectory_json(traj, h.vertex_ids()));
      write_output(sim_args.output, io::make_report(std::move(body)).dump());
    }
    return 0;
  }

  if (rep->parsed()) {
    auto [file, scheme, wa] = open(report_args);
    const Hypergraph& h = file.hypergraph;
    io::JsonValue body = io::JsonValue::object();
    body.set("hypergraph", io::hypergraph_summary(h));
    body.set("scheme", io::scheme_section(scheme, wa));
    io::JsonValue spectra = io::JsonValue::object();
    for (const std::string& name : report_operators) {
      OperatorMatrix m = build(h, wa, operator_kind_from_string(name));
      spectra.set(name, io::spectrum_section(eig(m), report_vectors));
    }
    body.set("spectra", std::move(spectra));
    body.set("verification", run_verification(h, wa, file.annotations));
    Spectrum s = eig(build(h, wa, OperatorKind::Laplacian));
    AuditOptions opts;
    opts.exact_limit = report_exact_limit;
    opts.threads = thread_budget();
    body.set("bounds", io::bounds_section(audit_bounds(h, wa, s, opts)));
    write_output(report_args.output, io::make_report(std::move(body)).dump());
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const hyperspec::Error& e) {
    hyperspec::io::JsonValue err = hyperspec::io::JsonValue::object();
    err.set("error", hyperspec::io::JsonValue::string(e.code_name()));
    err.set("message", hyperspec::io::JsonValue::string(e.what()));
    std::cerr << err.dump();
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "{\"error\": \"Internal\", \"message\": \"" << e.what()
              << "\"}\n";
    return 3;
  }
}
