#include "hypergen/cli.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <memory>

#include <CLI11.hpp>

#include "hypergen/chat.hpp"
#include "hypergen/engine.hpp"
#include "hypergen/error.hpp"
#include "hypergen/hgt_format.hpp"
#include "hypergen/microdynamics.hpp"
#include "hypergen/text.hpp"

namespace hypergen::cli {

namespace fs = std::filesystem;

namespace {

// Thrown for bad flag values discovered after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Shared {
  std::string input;
  std::string output = "out";
  std::uint64_t seed = 42;
  std::string config;
  std::string backend = "oracle";
  std::string base_url = "http://127.0.0.1:8000";
  std::string model;
};

void add_shared(CLI::App* cmd, Shared& s, bool with_input) {
  if (with_input) cmd->add_option("--input", s.input, "Input hypergraph (HGT v1)");
  cmd->add_option("--output", s.output, "Output directory")->capture_default_str();
  cmd->add_option("--seed", s.seed, "Random seed")->capture_default_str();
  cmd->add_option("--config", s.config, "key=value generation config file");
  cmd->add_option("--backend", s.backend, "Agent backend")->check(CLI::IsMember({"oracle", "remote"}))->capture_default_str();
  cmd->add_option("--base-url", s.base_url, "Chat-completions server for the remote backend")->capture_default_str();
  cmd->add_option("--model", s.model, "Model name for the remote backend");
}

void require_file(const std::string& path, const char* what) {
  if (path.empty()) throw UsageError(std::string("missing ") + what);
  if (!fs::is_regular_file(path)) throw UsageError(std::string(what) + " not found: " + path);
}

std::vector<double> parse_real_list(const std::string& s) {
  std::vector<double> out;
  for (auto tok : text::split(s, ',')) {
    auto v = text::parse_double(text::trim(tok));
    if (!v) throw UsageError("bad number in list: " + s);
    out.push_back(*v);
  }
  return out;
}

std::vector<std::size_t> parse_count_list(const std::string& s) {
  std::vector<std::size_t> out;
  for (auto tok : text::split(s, ',')) {
    auto v = text::parse_uint(text::trim(tok));
    if (!v) throw UsageError("bad count in list: " + s);
    out.push_back(static_cast<std::size_t>(*v));
  }
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Backend selection shared by generate and sweep.
struct BackendHolder {
  std::unique_ptr<ChatClient> client;
  std::unique_ptr<AgentBackend> backend;
};

BackendHolder make_backend(const Shared& s, const GenerationConfig& config, const std::vector<EntityProfile>& profiles,
                           const std::string& transcript) {
  BackendHolder h;
  if (config.backend == BackendKind::kOracle) {
    h.backend = std::make_unique<OracleBackend>(population_from_profiles(profiles), oracle_params(config),
                                                oracle_settings(config));
    return h;
  }
  if (s.model.empty()) throw UsageError("--model is required with --backend remote");
  ChatConfig cc;
  cc.base_url = s.base_url;
  cc.api_key = ChatConfig::api_key_from_env();
  cc.transcript_path = transcript;
  h.client = std::make_unique<ChatClient>(cc);
  h.backend = std::make_unique<RemoteBackend>(*h.client, s.model);
  return h;
}

GenerationConfig base_config(const Shared& s) {
  GenerationConfig c;
  if (!s.config.empty()) {
    require_file(s.config, "config file");
    c = read_generation_config(s.config);
  }
  c.seed = s.seed;
  c.backend = s.backend == "remote" ? BackendKind::kRemote : BackendKind::kOracle;
  return c;
}

void write_text(const fs::path& p, const std::string& contents) {
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  text::write_file(p.string(), contents);
}

std::string gamma_table(const PatternReport& report) {
  std::string out = "pattern,gamma,distance,note\n";
  for (const auto& e : report.entries) {
    out += std::string(pattern_slug(e.id)) + ',' + (e.fit_gamma ? text::format_double(*e.fit_gamma) : "") + ',' +
           (e.distance ? text::format_double(*e.distance) : "") + ',';
    std::string note = e.comparison_note;
    std::replace(note.begin(), note.end(), ',', ';');
    out += note + '\n';
  }
  out += "average,";
  out += report.average_fit_gamma ? text::format_double(*report.average_fit_gamma) : "";
  out += ",,\n";
  return out;
}

// ---- subcommands ---------------------------------------------------------

struct GenerateOpts {
  std::string profiles;
  std::optional<std::size_t> nodes, edges, suggestions, steps, attempts, min_size, max_size;
  std::optional<double> attach;
  std::optional<std::string> domain;
  std::string reference;
};

int cmd_generate(const Shared& s, const GenerateOpts& o, std::ostream& out) {
  auto config = base_config(s);
  if (o.nodes) config.num_nodes = *o.nodes;
  if (o.edges) config.target_edges = *o.edges;
  if (o.attach) config.attach_probability = *o.attach;
  if (o.suggestions) config.optimizer_suggestion_count = *o.suggestions;
  if (o.steps) config.evolution_steps = *o.steps;
  if (o.attempts) config.generation_attempts_per_step = *o.attempts;
  if (o.min_size) config.min_edge_size = *o.min_size;
  if (o.max_size) config.max_edge_size = *o.max_size;
  if (o.domain) config.domain_label = *o.domain;
  try {
    config.validate();
  } catch (const InvalidArgumentError& e) {
    throw UsageError(e.what());
  }
  std::optional<TemporalHypergraph> reference;
  if (!o.reference.empty()) {
    require_file(o.reference, "reference hypergraph");
    reference = read_hypergraph_file(o.reference);
  }
  std::vector<EntityProfile> profiles;
  if (!o.profiles.empty()) {
    require_file(o.profiles, "profiles file");
    profiles = read_profiles_file(o.profiles);
  } else {
    profiles = synthetic_profiles(config.num_nodes);
  }

  const fs::path dir = s.output;
  fs::create_directories(dir);
  const auto t0 = std::chrono::steady_clock::now();
  auto holder = make_backend(s, config, profiles, (dir / "transcript.jsonl").string());
  auto built = construct(profiles, config, *holder.backend);
  write_hypergraph_file((dir / "constructed.hgt").string(), built.graph);
  if (!built.aborted_reason.empty()) throw Error("construction aborted: " + built.aborted_reason);

  auto evolved = evolve(built.graph, profiles, config, *holder.backend, reference ? &*reference : nullptr);
  write_hypergraph_file((dir / "generated.hgt").string(), evolved.state.graph);
  write_text(dir / "counters.csv", counters_csv(evolved.state));
  write_text(dir / "config.txt", serialize_generation_config(config));
  write_report_files(evolved.report, dir.string());
  if (reference) write_text(dir / "gamma.csv", gamma_table(evolved.report));

  std::string summary = "command=generate\n";
  summary += "construct.attempts=" + std::to_string(built.attempts) + "\n";
  summary += "construct.accepted=" + std::to_string(built.accepted) + "\n";
  summary += "construct.discarded=" + std::to_string(built.discarded) + "\n";
  summary += "evolve.steps=" + std::to_string(evolved.state.step) + "\n";
  summary += "evolve.removed=" + std::to_string(evolved.state.total_removed) + "\n";
  summary += "evolve.accepted=" + std::to_string(evolved.state.total_accepted) + "\n";
  summary += "evolve.rejected=" + std::to_string(evolved.state.total_rejected) + "\n";
  summary += "nodes=" + std::to_string(evolved.state.graph.num_nodes()) + "\n";
  summary += "edges=" + std::to_string(evolved.state.graph.num_edges()) + "\n";
  summary += report_summary(evolved.report);
  write_text(dir / "summary.txt", summary);
  out << summary << "elapsed_seconds=" << text::format_double(seconds_since(t0), 3) << "\n";
  return kExitOk;
}

struct SimulateOpts {
  std::size_t nodes = 1000;
  std::size_t edges = 20000;
  double alpha = 5.0;
  double gamma = 1.0;
  double lambda = 1.0;
  std::optional<double> horizon;
  double q_threshold = 0.0;
  std::size_t k = 3;
  std::optional<std::size_t> min_size, max_size;
  double size_exponent = 2.5;
  std::string initiator = "preferential";
};

int cmd_simulate(const Shared& s, const SimulateOpts& o, std::ostream& out) {
  MicroParams p;
  p.alpha = o.alpha;
  p.exponent_gamma = o.gamma;
  p.lambda_rate = o.lambda;
  p.q_threshold = o.q_threshold;
  p.initiator = o.initiator == "uniform" ? InitiatorPolicy::kUniform : InitiatorPolicy::kPreferential;
  try {
    if (o.min_size || o.max_size)
      p.size_sampler = SizeSampler::truncated_power_law(o.min_size.value_or(2), o.max_size.value_or(10), o.size_exponent);
    else
      p.size_sampler = SizeSampler::fixed(o.k);
    // Default horizon makes lambda * T equal the number of selections.
    double mean_k = 0.0;
    const auto probs = p.size_sampler.probabilities();
    for (std::size_t i = 0; i < probs.size(); ++i) mean_k += probs[i] * static_cast<double>(p.size_sampler.sizes()[i]);
    p.horizon_T = o.horizon.value_or(std::max(1.0, static_cast<double>(o.edges) * mean_k / o.lambda));
    p.validate();
  } catch (const InvalidArgumentError& e) {
    throw UsageError(e.what());
  }

  const fs::path dir = s.output;
  fs::create_directories(dir);
  const auto t0 = std::chrono::steady_clock::now();
  const auto pop = RankedPopulation::sequential(o.nodes);
  const auto trace = simulate(pop, p, o.edges, s.seed);
  write_hypergraph_file((dir / "simulated.hgt").string(), trace.hypergraph);
  write_text(dir / "trace.csv", trace_sidecar_csv(trace));

  const auto report = pattern_report(nullptr, trace.hypergraph);
  write_report_files(report, dir.string());

  std::string summary = "command=simulate\n";
  summary += "nodes=" + std::to_string(o.nodes) + "\nedges=" + std::to_string(o.edges) + "\n";
  summary += "alpha=" + text::format_double(p.alpha) + "\nexponent_gamma=" + text::format_double(p.exponent_gamma) + "\n";
  summary += "eligible=" + std::to_string(trace.eligible_set.size()) + "\n";
  try {
    const auto v = verify_zipf_mandelbrot(trace, p);
    summary += "zipf.selections=" + std::to_string(v.total_selections) + "\n";
    summary += "zipf.nodes_fitted=" + std::to_string(v.nodes_fitted) + "\n";
    if (v.fit) {
      summary += "zipf.slope=" + text::format_double(v.fit->slope) + "\n";
      summary += "zipf.r2=" + text::format_double(v.fit->r_squared) + "\n";
    }
    summary += "zipf.max_relative_deviation=" + text::format_double(v.max_relative_deviation) + "\n";
    summary += "zipf.mean_relative_deviation=" + text::format_double(v.mean_relative_deviation) + "\n";
    PlotSpec plot;
    plot.title = "Degree vs. rank + alpha";
    plot.x_label = "rank + alpha";
    plot.y_label = "degree";
    std::string csv = "rank_plus_alpha,degree\n";
    for (std::size_t i = 0; i < pop.size(); ++i) {
      const double x = static_cast<double>(pop.rank(i)) + p.alpha;
      csv += text::format_double(x) + ',' + std::to_string(trace.final_degrees[i]) + '\n';
      if (trace.final_degrees[i] > 0) plot.points.emplace_back(x, static_cast<double>(trace.final_degrees[i]));
    }
    if (v.fit) plot.fit = PlotSpec::Fit{v.fit->slope, v.fit->intercept};
    write_text(dir / "report" / "zipf_rank_degree.csv", csv);
    if (!plot.points.empty()) emit_plot(plot, (dir / "plots" / "zipf_rank_degree.svg").string());
  } catch (const InsufficientDataError& e) {
    summary += std::string("zipf.skipped=") + e.what() + "\n";
  }
  summary += report_summary(report);
  write_text(dir / "summary.txt", summary);
  out << summary << "elapsed_seconds=" << text::format_double(seconds_since(t0), 3) << "\n";
  return kExitOk;
}

int cmd_measure(const Shared& s, std::ostream& out) {
  require_file(s.input, "--input");
  const auto h = read_hypergraph_file(s.input);
  const auto report = pattern_report(nullptr, h);
  const fs::path dir = s.output;
  write_report_files(report, dir.string());
  const auto summary = "command=measure\nedges=" + std::to_string(h.num_edges()) + "\nnodes=" +
                       std::to_string(h.num_nodes()) + "\n" + report_summary(report);
  write_text(dir / "summary.txt", summary);
  out << summary;
  return kExitOk;
}

int cmd_compare(const Shared& s, const std::string& real, std::ostream& out) {
  require_file(real, "--real");
  require_file(s.input, "--input");
  const auto r = read_hypergraph_file(real);
  const auto g = read_hypergraph_file(s.input);
  const auto report = pattern_report(&r, g);
  const fs::path dir = s.output;
  write_report_files(report, dir.string());
  const auto table = gamma_table(report);
  write_text(dir / "gamma.csv", table);
  const auto summary = "command=compare\n" + report_summary(report);
  write_text(dir / "summary.txt", summary);
  out << table;
  return kExitOk;
}

struct SweepOpts {
  std::string reference;
  std::string p_values = "0.55,0.65,0.75,0.85";
  std::string k_values = "1,3,5,10";
  std::optional<std::size_t> nodes, edges, steps, attempts;
  double ref_alpha = 5.0;
  double ref_gamma = 1.0;
};

int cmd_sweep(const Shared& s, const SweepOpts& o, std::ostream& out) {
  auto config = base_config(s);
  if (s.config.empty()) {  // desk-scale cells unless a config says otherwise
    config.num_nodes = 300;
    config.target_edges = 1500;
    config.evolution_steps = 10;
    config.generation_attempts_per_step = 20;
  }
  if (o.nodes) config.num_nodes = *o.nodes;
  if (o.edges) config.target_edges = *o.edges;
  if (o.steps) config.evolution_steps = *o.steps;
  if (o.attempts) config.generation_attempts_per_step = *o.attempts;
  const auto ps = parse_real_list(o.p_values);
  const auto ks = parse_count_list(o.k_values);
  try {
    config.validate();
    for (double p : ps)
      if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgumentError("attach probabilities must lie in [0, 1]");
  } catch (const InvalidArgumentError& e) {
    throw UsageError(e.what());
  }

  const fs::path dir = s.output;
  fs::create_directories(dir);
  const auto t0 = std::chrono::steady_clock::now();
  TemporalHypergraph reference;
  if (!o.reference.empty()) {
    require_file(o.reference, "--reference");
    reference = read_hypergraph_file(o.reference);
  } else {
    MicroParams rp;
    rp.alpha = o.ref_alpha;
    rp.exponent_gamma = o.ref_gamma;
    rp.size_sampler = SizeSampler::truncated_power_law(config.min_edge_size, config.max_edge_size, config.size_exponent);
    const auto target_edges = config.target_edges + config.evolution_steps * config.generation_attempts_per_step;
    reference = simulate(RankedPopulation::sequential(config.num_nodes), rp, target_edges,
                         derive_seed(s.seed, 0x4ef)).hypergraph;
    write_hypergraph_file((dir / "reference.hgt").string(), reference);
  }

  const auto profiles = synthetic_profiles(config.num_nodes);
  std::string csv = "attach_probability,suggestion_count,seed,edges,avg_gamma";
  for (auto id : kAllPatterns) csv += std::string(",") + std::string(pattern_slug(id));
  csv += ",status\n";
  std::size_t failed = 0, cell = 0;
  for (double p : ps) {
    for (auto k : ks) {
      auto cfg = config;
      cfg.attach_probability = p;
      cfg.optimizer_suggestion_count = k;
      cfg.seed = s.seed + cell++;
      std::string row = text::format_double(p) + ',' + std::to_string(k) + ',' + std::to_string(cfg.seed) + ',';
      std::string status = "ok";
      try {
        auto holder = make_backend(s, cfg, profiles, (dir / "transcript.jsonl").string());
        auto built = construct(profiles, cfg, *holder.backend);
        if (!built.aborted_reason.empty()) throw Error(built.aborted_reason);
        auto evolved = evolve(built.graph, profiles, cfg, *holder.backend, &reference);
        const auto& rep = evolved.report;
        if (!rep.average_fit_gamma) throw Error("no pattern could be scored");
        row += std::to_string(evolved.state.graph.num_edges()) + ',' + text::format_double(*rep.average_fit_gamma);
        for (const auto& e : rep.entries) {
          row += ',';
          if (e.fit_gamma) row += text::format_double(*e.fit_gamma);
          else if (e.distance) row += text::format_double(*e.distance);
        }
      } catch (const UsageError&) {
        throw;
      } catch (const std::exception& e) {
        ++failed;
        status = "failed";
        row += ",";
        for (std::size_t i = 0; i < kAllPatterns.size(); ++i) row += ',';
        out << "cell p=" << text::format_double(p) << " k=" << k << " failed: " << e.what() << "\n";
      }
      csv += row + ',' + status + '\n';
    }
  }
  write_text(dir / "sweep.csv", csv);
  std::string summary = "command=sweep\ncells=" + std::to_string(ps.size() * ks.size()) +
                        "\nfailed=" + std::to_string(failed) + "\nreference_edges=" +
                        std::to_string(reference.num_edges()) + "\n";
  write_text(dir / "summary.txt", summary);
  out << csv << summary << "elapsed_seconds=" << text::format_double(seconds_since(t0), 3) << "\n";
  return failed == 0 ? kExitOk : kExitRuntime;
}

}  // namespace

std::optional<PlotSpec> pattern_plot(PatternId id, const PatternStats& stats) {
  if (!stats.computed) return std::nullopt;
  PlotSpec plot;
  plot.title = std::string(pattern_title(id));
  if (stats.histogram) {
    plot.x_label = id == PatternId::kPersistence ? "inter-event time" : "value";
    plot.y_label = "count";
    for (const auto& b : stats.histogram->bins())
      if (b.value > 0) plot.points.emplace_back(static_cast<double>(b.value), static_cast<double>(b.count));
    // The fit lives in density space (count / total per unit width).
    if (stats.fit)
      plot.fit = PlotSpec::Fit{stats.fit->slope,
                               stats.fit->intercept + std::log10(static_cast<double>(stats.histogram->total()))};
  } else if (id == PatternId::kSingularValues) {
    plot.x_label = "rank";
    plot.y_label = "singular value";
    for (const auto& [x, y] : stats.series)
      if (y > 0) plot.points.emplace_back(x, y);
    if (stats.fit) plot.fit = PlotSpec::Fit{stats.fit->slope, stats.fit->intercept};
  } else {
    plot.kind = PlotSpec::Kind::kLineSeries;
    plot.x_label = id == PatternId::kTemporalLocality ? "hyperedge index" : "hyperedges seen";
    plot.y_label = id == PatternId::kTemporalLocality ? "fraction of recent nodes" : "density of interactions";
    plot.points = stats.series;
  }
  if (plot.points.empty()) return std::nullopt;
  return plot;
}

void write_report_files(const PatternReport& report, const std::string& output_dir) {
  const fs::path dir = output_dir;
  write_report_csvs(report, (dir / "report").string());
  fs::create_directories(dir / "plots");
  for (const auto& e : report.entries) {
    const std::string slug(pattern_slug(e.id));
    if (auto plot = pattern_plot(e.id, e.generated)) emit_plot(*plot, (dir / "plots" / (slug + ".svg")).string());
    if (e.reference)
      if (auto plot = pattern_plot(e.id, *e.reference))
        emit_plot(*plot, (dir / "plots" / ("reference_" + slug + ".svg")).string());
  }
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Synthetic temporal hypergraph generation and pattern measurement", "hypergen"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  Shared shared;
  GenerateOpts gen;
  auto* generate = app.add_subcommand("generate", "Construct (and optionally evolve) a hypergraph");
  add_shared(generate, shared, false);
  generate->add_option("--profiles", gen.profiles, "Profiles CSV (id,key=value;...,persona)");
  generate->add_option("--nodes", gen.nodes, "Synthetic profile count when --profiles is absent");
  generate->add_option("--edges", gen.edges, "Construction attempts M");
  generate->add_option("--attach-probability", gen.attach, "Preferential attachment probability P");
  generate->add_option("--suggestions", gen.suggestions, "Entities suggested per optimizer directive K");
  generate->add_option("--steps", gen.steps, "Evolution steps");
  generate->add_option("--attempts", gen.attempts, "Generation attempts per evolution step");
  generate->add_option("--min-size", gen.min_size, "Smallest hyperedge size");
  generate->add_option("--max-size", gen.max_size, "Largest hyperedge size");
  generate->add_option("--domain", gen.domain, "Domain label used in prompts");
  generate->add_option("--reference", gen.reference, "Reference hypergraph to score against");

  SimulateOpts sim;
  auto* simulate_cmd = app.add_subcommand("simulate", "Run the ranked preferential-attachment model");
  add_shared(simulate_cmd, shared, false);
  simulate_cmd->add_option("--nodes", sim.nodes, "Population size N")->capture_default_str();
  simulate_cmd->add_option("--edges", sim.edges, "Hyperedges to generate")->capture_default_str();
  simulate_cmd->add_option("--alpha", sim.alpha, "Collaborative inertia")->capture_default_str();
  simulate_cmd->add_option("--gamma", sim.gamma, "Preference exponent")->capture_default_str();
  simulate_cmd->add_option("--lambda", sim.lambda, "Hyperedges per unit time")->capture_default_str();
  simulate_cmd->add_option("--horizon", sim.horizon, "Time horizon T (default: selections / lambda)");
  simulate_cmd->add_option("--q-threshold", sim.q_threshold, "Quality filter")->capture_default_str();
  simulate_cmd->add_option("--k", sim.k, "Fixed hyperedge size")->capture_default_str();
  simulate_cmd->add_option("--min-size", sim.min_size, "Use a truncated power-law size law from this size");
  simulate_cmd->add_option("--max-size", sim.max_size, "... up to this size");
  simulate_cmd->add_option("--size-exponent", sim.size_exponent, "Exponent of the size law")->capture_default_str();
  simulate_cmd->add_option("--initiator", sim.initiator, "How the first member is drawn")
      ->check(CLI::IsMember({"preferential", "uniform"}))
      ->capture_default_str();

  auto* measure = app.add_subcommand("measure", "Measure the eight patterns of one hypergraph");
  add_shared(measure, shared, true);

  std::string real;
  auto* compare = app.add_subcommand("compare", "Score a hypergraph against a reference");
  add_shared(compare, shared, true);
  compare->add_option("--real", real, "Reference hypergraph");

  SweepOpts sw;
  auto* sweep = app.add_subcommand("sweep", "Grid over attach probability and suggestion count");
  add_shared(sweep, shared, false);
  sweep->add_option("--reference", sw.reference, "Reference hypergraph (default: simulated)");
  sweep->add_option("--p-values", sw.p_values, "Attach probabilities")->capture_default_str();
  sweep->add_option("--k-values", sw.k_values, "Suggestion counts")->capture_default_str();
  sweep->add_option("--nodes", sw.nodes, "Population size");
  sweep->add_option("--edges", sw.edges, "Construction attempts per cell");
  sweep->add_option("--steps", sw.steps, "Evolution steps per cell");
  sweep->add_option("--attempts", sw.attempts, "Generation attempts per step");
  sweep->add_option("--ref-alpha", sw.ref_alpha, "Reference model inertia")->capture_default_str();
  sweep->add_option("--ref-gamma", sw.ref_gamma, "Reference model exponent")->capture_default_str();

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.push_back("hypergen");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "hypergen: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (generate->parsed()) return cmd_generate(shared, gen, out);
    if (simulate_cmd->parsed()) return cmd_simulate(shared, sim, out);
    if (measure->parsed()) return cmd_measure(shared, out);
    if (compare->parsed()) return cmd_compare(shared, real, out);
    if (sweep->parsed()) return cmd_sweep(shared, sw, out);
  } catch (const UsageError& e) {
    err << "hypergen: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "hypergen: error: " << e.what() << "\n";
    return kExitRuntime;
  }
  err << "hypergen: no command\n";
  return kExitUsage;
}

}  // namespace hypergen::cli
