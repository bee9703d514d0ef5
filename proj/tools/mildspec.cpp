// Copyright 2026 The mildspec Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: verification suites, transforms, convergence and
// approximation experiments, and demos.
//
// Exit codes: 0 pass, 1 check failure, 2 usage, 3 schema, 4 group mismatch.

#include <cstdio>
#include <random>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mildspec/approx.hpp"
#include "mildspec/errors.hpp"
#include "mildspec/fourier.hpp"
#include "mildspec/gabor.hpp"
#include "mildspec/io.hpp"
#include "mildspec/mild.hpp"
#include "mildspec/suites.hpp"

namespace {

using namespace mildspec;
using io::Json;

constexpr int kPass = 0;
constexpr int kCheckFailure = 1;
constexpr int kUsage = 2;
constexpr int kSchema = 3;
constexpr int kGroupMismatch = 4;

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    io::write_text_file(path, text);
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::optional<std::vector<std::int64_t>> steps(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return io::parse_int_list(text);
}

std::vector<std::int64_t> per_axis(const std::optional<std::vector<std::int64_t>>& v,
                                   const GroupSpec& g, std::vector<std::int64_t> fallback,
                                   const char* what) {
  if (!v) return fallback;
  if (v->size() == 1) return std::vector<std::int64_t>(g.rank(), v->front());
  if (v->size() != g.rank()) throw InvalidArgument(std::string(what) + " needs one value or one per axis");
  return *v;
}

Signal window_for(const std::string& spec, const GroupSpec& g) {
  if (spec == "gauss") return finite_gaussian(g);
  Signal w = io::signal_from_json(io::read_json_file(spec));
  if (!(w.group() == g)) throw GroupMismatch("window group " + to_string(w.group()) + " differs from " + to_string(g));
  return w;
}

// "a=2,b=2"; per-axis values separated by ':' as in "a=2:3,b=1:3".
std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>> parse_lattice(const std::string& text,
                                                                              const GroupSpec& g) {
  std::optional<std::vector<std::int64_t>> a, b;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos) throw InvalidArgument("lattice entries look like a=2,b=2");
    std::string values = item.substr(eq + 1);
    for (auto& c : values) c = c == ':' ? ',' : c;
    const std::string key = item.substr(0, eq);
    if (key == "a") {
      a = io::parse_int_list(values);
    } else if (key == "b") {
      b = io::parse_int_list(values);
    } else {
      throw InvalidArgument("unknown lattice key '" + key + "'");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (!a || !b) throw InvalidArgument("lattice needs both a and b");
  return {per_axis(a, g, {}, "a"), per_axis(b, g, {}, "b")};
}

Json restriction_to_json(const Signal& f, const Subgroup& h, const std::vector<std::int64_t>& lattice) {
  // Samples listed in the lattice's parent-index order.
  std::vector<Complex> samples(h.order());
  const Signal r = restriction(f, h);
  for (std::size_t i = 0; i < r.size(); ++i) samples[h.position_of_index(h.embed_index(i))] = r[i];
  Json points = Json::array();
  for (const auto& x : h.elements()) points.push_back(x.coords);
  return Json{{"group", io::to_json(f.group())},
              {"lattice", lattice},
              {"points", points},
              {"samples", io::values_to_json(samples)}};
}

struct Args {
  std::string group = "24";
  std::uint64_t seed = 7;
  std::string a, b;
  std::optional<double> tolerance;
  int samples = 20;
  std::string report;
  bool timing = false;
  std::string suite;

  std::string kind, input, out, window = "gauss", lattice, shape = "triangle", normalization = "counting";
  std::string action;

  std::string limit, tf_lattice = "a=2,b=2";
  std::string gaps = "16,8,4", target = "gauss";
  std::string demo, period;
};

int run_verify(const Args& args) {
  SuiteOptions o;
  o.group = io::parse_group(args.group);
  o.seed = args.seed;
  o.a = steps(args.a);
  o.b = steps(args.b);
  o.tolerance = args.tolerance;
  o.samples = args.samples;
  o.timing = args.timing;
  const RunReport r = run_suite(args.suite, o);
  emit(args.report, dump(r.to_json()));
  std::cerr << "verify " << args.suite << " on " << to_string(o.group) << ": " << r.checks.size() << " checks, "
            << r.failures() << " failed\n";
  return r.pass() ? kPass : kCheckFailure;
}

int run_transform(const Args& args) {
  const std::string& kind = args.kind;
  if (kind == "gabor-synth") {
    const CoefficientArray c = io::coefficients_from_json(io::read_json_file(args.input));
    const GroupSpec& g = c.lattice.group();
    const GaborSystem sys(window_for(args.window, g), c.lattice);
    emit(args.out, dump(io::to_json(gabor_synthesis(c, sys))));
    return kPass;
  }
  const Signal f = io::signal_from_json(io::read_json_file(args.input));
  const GroupSpec& g = f.group();
  FourierConvention conv;
  if (args.normalization == "unitary") {
    conv.normalization = Normalization::kUnitary;
  } else if (args.normalization != "counting") {
    throw InvalidArgument("normalization is counting or unitary");
  }
  if (kind == "dft") {
    emit(args.out, dump(io::to_json(dft(f, conv))));
  } else if (kind == "idft") {
    emit(args.out, dump(io::to_json(idft(f, conv))));
  } else if (kind == "stft") {
    STFTGrid grid = stft(f, window_for(args.window, g), args.window == "gauss" ? "gauss" : args.window);
    emit(args.out, io::stft_to_csv(grid));
  } else if (kind == "gabor-analyze") {
    const TFLattice lat(g, per_axis(steps(args.a), g, default_tf_steps(g), "--a"),
                        per_axis(steps(args.b), g, default_tf_steps(g), "--b"));
    const GaborSystem sys(window_for(args.window, g), lat);
    emit(args.out, dump(io::to_json(gabor_coefficients(f, sys))));
  } else if (kind == "restrict" || kind == "weil" || kind == "extend") {
    if (args.lattice.empty()) throw InvalidArgument(kind + " needs --lattice");
    const auto step = per_axis(steps(args.lattice), g, {}, "--lattice");
    const Subgroup h = lattice_subgroup(g, step);
    if (kind == "restrict") {
      emit(args.out, dump(restriction_to_json(f, h, step)));
    } else if (kind == "weil") {
      const CosetSignal w = weil_map(f, h);
      Json reps = Json::array();
      for (const auto& x : w.quotient.representatives) reps.push_back(x.coords);
      emit(args.out, dump(Json{{"group", io::to_json(g)},
                               {"lattice", step},
                               {"representatives", reps},
                               {"values", io::values_to_json(w.values)}}));
    } else {
      // Samples of f on the lattice, extended by the mother bump.
      const Signal phi = make_bupu(g, h, parse_bupu_shape(args.shape)).mother;
      emit(args.out, dump(io::to_json(semidiscrete_extension(sample(f, h), phi))));
    }
  } else {
    throw InvalidArgument("unknown transform '" + kind + "'");
  }
  return kPass;
}

int run_extend_samples(const Args& args) {
  // Input written by "transform restrict".
  const Json j = io::read_json_file(args.input);
  if (!j.contains("lattice") || !j.contains("samples")) throw SchemaError("expected a restrict output file");
  const GroupSpec g = io::group_from_json(j.at("group"));
  std::vector<std::int64_t> step;
  try {
    step = j.at("lattice").get<std::vector<std::int64_t>>();
  } catch (const Json::exception&) {
    throw SchemaError("lattice must be an integer array");
  }
  const Subgroup h = lattice_subgroup(g, per_axis(step, g, {}, "lattice"));
  const SampleArray c(h, io::values_from_json(j.at("samples")));
  const Signal phi = make_bupu(g, h, parse_bupu_shape(args.shape)).mother;
  emit(args.out, dump(io::to_json(semidiscrete_extension(c, phi))));
  return kPass;
}

int run_mild_converge(const Args& args) {
  const Json seq_json = io::read_json_file(args.input);
  Json members_json = seq_json;
  if (seq_json.is_object() && seq_json.contains("members")) members_json = seq_json.at("members");
  if (!members_json.is_array() || members_json.empty()) {
    throw SchemaError("sequence needs a non-empty members array");
  }
  std::vector<Signal> members;
  for (const auto& m : members_json) members.push_back(io::signal_from_json(m));
  if (args.limit.empty()) throw InvalidArgument("mild-converge needs --limit");
  Signal limit = io::signal_from_json(io::read_json_file(args.limit));
  const GroupSpec g = limit.group();
  for (const auto& m : members) {
    if (!(m.group() == g)) {
      throw GroupMismatch("sequence member on " + to_string(m.group()) + ", limit on " + to_string(g));
    }
  }
  const auto [a, b] = parse_lattice(args.tf_lattice, g);
  const GaborSystem sys(finite_gaussian(g), TFLattice(g, a, b));
  const DistributionSequence seq(std::move(members), std::move(limit));
  // At most 16 net points per axis.
  std::vector<std::int64_t> net(g.rank());
  for (std::size_t j = 0; j < g.rank(); ++j) {
    const std::int64_t n = g.modulus(j);
    std::int64_t d = 1;
    while (n % d != 0 || n / d > 16) ++d;
    net[j] = d;
  }
  const auto probes = default_probes(TFLattice(g, net, net));
  const ConvergenceReport r = mild_convergence(seq, sys, probes);
  Json rows = Json::array();
  for (std::size_t n = 0; n < r.rows.size(); ++n) {
    rows.push_back(
        {{"n", n}, {"d_pair", r.rows[n].d_pair}, {"d_stft", r.rows[n].d_stft}, {"d_coeff", r.rows[n].d_coeff}});
  }
  const Json out{{"group", io::to_json(g)},
                 {"lattice", {{"a", a}, {"b", b}}},
                 {"uniform_bound", seq.uniform_bound},
                 {"rows", rows},
                 {"ratios",
                  {{"stft_over_coeff", {r.stft_over_coeff_min, r.stft_over_coeff_max}},
                   {"pair_over_stft", {r.pair_over_stft_min, r.pair_over_stft_max}}}}};
  emit(args.out, dump(out));
  return kPass;
}

int run_approx(const Args& args) {
  const GroupSpec g = io::parse_group(args.group);
  Signal target = finite_gaussian(g);
  if (args.target == "constant") {
    target = Signal::constant(g, 1.0);
  } else if (args.target == "random") {
    std::mt19937_64 rng(args.seed);
    std::vector<Complex> v(g.order());
    for (auto& x : v) {
      const double re = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      x = {re, static_cast<double>(rng() >> 11) * 0x1.0p-53};
    }
    target = Signal(g, std::move(v));
  } else if (args.target != "gauss") {
    target = window_for(args.target, g);
  }
  const auto gaps = io::parse_int_list(args.gaps);
  std::string csv = "gap,sup_error\n";
  for (const auto& row : approx_errors(target, gaps, parse_bupu_shape(args.shape))) {
    csv += std::to_string(row.gap) + "," + io::format_double(row.sup_error) + "\n";
  }
  emit(args.out, csv);
  return kPass;
}

int run_demo_cmd(const Args& args) {
  DemoOptions o;
  o.group = io::parse_group(args.group);
  o.seed = args.seed;
  o.period = steps(args.period);
  o.a = steps(args.a);
  o.b = steps(args.b);
  const DemoOutput d = run_demo(args.demo, o);
  emit(args.out, d.csv);
  if (!args.report.empty()) emit(args.report, dump(d.report.to_json()));
  std::cerr << "demo " << args.demo << ": " << d.report.checks.size() << " checks, " << d.report.failures()
            << " failed\n";
  return d.report.pass() ? kPass : kCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mildspec: mild distributions on finite abelian groups"};
  app.require_subcommand(1);
  Args args;

  auto* verify = app.add_subcommand("verify", "Run a verification suite and write a JSON report");
  verify->add_option("suite", args.suite, "group | fourier | gabor | mild | approx | all")
      ->required()
      ->check(CLI::IsMember({"group", "fourier", "gabor", "mild", "approx", "all"}));
  verify->add_option("--group", args.group, "Comma-separated moduli, e.g. 24 or 4,6");
  verify->add_option("--seed", args.seed, "Random seed");
  verify->add_option("--a", args.a, "TF time step (one value or one per axis)");
  verify->add_option("--b", args.b, "TF frequency step (one value or one per axis)");
  verify->add_option("--tolerance", args.tolerance, "Replace every nonzero threshold");
  verify->add_option("--samples", args.samples, "Random signals per property")->check(CLI::PositiveNumber);
  verify->add_option("--report,--out", args.report, "Report path (stdout when omitted)");
  verify->add_flag("--timing", args.timing, "Record wall time in the report");

  auto* transform = app.add_subcommand("transform", "Apply one transform to a stored signal");
  transform->add_option("kind", args.kind, "dft | idft | stft | gabor-analyze | gabor-synth | weil | restrict | extend")
      ->required()
      ->check(CLI::IsMember({"dft", "idft", "stft", "gabor-analyze", "gabor-synth", "weil", "restrict", "extend"}));
  transform->add_option("input", args.input, "Input JSON")->required();
  transform->add_option("--out", args.out, "Output path (stdout when omitted)");
  transform->add_option("--window", args.window, "gauss or a signal JSON path");
  transform->add_option("--a", args.a, "TF time step");
  transform->add_option("--b", args.b, "TF frequency step");
  transform->add_option("--lattice", args.lattice, "Subgroup steps per axis for weil, restrict and extend");
  transform->add_option("--shape", args.shape, "Bump shape for extend")
      ->check(CLI::IsMember({"triangle", "bspline2", "indicator"}));
  transform->add_option("--normalization", args.normalization, "counting or unitary");

  auto* extend = app.add_subcommand("extend", "Extend lattice samples written by 'transform restrict'");
  extend->add_option("input", args.input, "Restriction JSON")->required();
  extend->add_option("--out", args.out, "Output path (stdout when omitted)");
  extend->add_option("--shape", args.shape, "Bump shape")->check(CLI::IsMember({"triangle", "bspline2", "indicator"}));

  auto* stft_cmd = app.add_subcommand("stft", "Short-time Fourier transform to CSV");
  stft_cmd->add_option("input", args.input, "Signal JSON")->required();
  stft_cmd->add_option("--window", args.window, "gauss or a signal JSON path");
  stft_cmd->add_option("--out", args.out, "CSV path (stdout when omitted)");

  auto* gabor = app.add_subcommand("gabor", "Canonical Gabor analysis or synthesis");
  gabor->add_option("--group", args.group, "Expected group of the input");
  gabor->add_option("--a", args.a, "TF time step");
  gabor->add_option("--b", args.b, "TF frequency step");
  gabor->add_option("--window", args.window, "gauss or a signal JSON path");
  gabor->add_option("action", args.action, "analyze | synth")->required()->check(CLI::IsMember({"analyze", "synth"}));
  gabor->add_option("input", args.input, "Input JSON")->required();
  gabor->add_option("--out", args.out, "Output path (stdout when omitted)");

  auto* mild = app.add_subcommand("mild-converge", "Deviation metrics of a sequence against a limit");
  mild->add_option("sequence", args.input, "Sequence JSON: {\"members\": [signal, ...]}")->required();
  mild->add_option("--limit", args.limit, "Limit signal JSON")->required();
  mild->add_option("--lattice", args.tf_lattice, "Gabor lattice, e.g. a=2,b=2");
  mild->add_option("--out", args.out, "Report path (stdout when omitted)");

  auto* approx = app.add_subcommand("approx", "Quasi-interpolation error along lattice gaps");
  approx->add_option("--group", args.group, "Comma-separated moduli");
  approx->add_option("--lattice", args.gaps, "Comma-separated uniform gaps, e.g. 16,8,4");
  approx->add_option("--shape", args.shape, "Bump shape")->check(CLI::IsMember({"triangle", "bspline2", "indicator"}));
  approx->add_option("--target", args.target, "gauss | constant | random | signal JSON path");
  approx->add_option("--seed", args.seed, "Seed for the random target");
  approx->add_option("--out", args.out, "CSV path (stdout when omitted)");

  auto* demo = app.add_subcommand("demo", "Script one identity end to end and emit CSV");
  demo->add_option("name", args.demo, "comb-duality | poisson | periodic-spectrum | mild-limit")
      ->required()
      ->check(CLI::IsMember({"comb-duality", "poisson", "periodic-spectrum", "mild-limit"}));
  demo->add_option("--group", args.group, "Comma-separated moduli");
  demo->add_option("--period", args.period, "Period per axis (periodic-spectrum)");
  demo->add_option("--seed", args.seed, "Random seed");
  demo->add_option("--a", args.a, "TF time step (mild-limit)");
  demo->add_option("--b", args.b, "TF frequency step (mild-limit)");
  demo->add_option("--out", args.out, "CSV path (stdout when omitted)");
  demo->add_option("--report", args.report, "Optional JSON report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*verify) return run_verify(args);
    if (*transform) return run_transform(args);
    if (*extend) return run_extend_samples(args);
    if (*stft_cmd) {
      args.kind = "stft";
      return run_transform(args);
    }
    if (*gabor) {
      if (args.action == "analyze") {
        const Signal f = io::signal_from_json(io::read_json_file(args.input));
        if (!(f.group() == io::parse_group(args.group))) {
          throw GroupMismatch("input lives on " + to_string(f.group()) + ", --group says " + args.group);
        }
        args.kind = "gabor-analyze";
      } else {
        args.kind = "gabor-synth";
      }
      return run_transform(args);
    }
    if (*mild) return run_mild_converge(args);
    if (*approx) return run_approx(args);
    if (*demo) return run_demo_cmd(args);
  } catch (const GroupMismatch& e) {
    std::cerr << "group mismatch: " << e.what() << '\n';
    return kGroupMismatch;
  } catch (const SchemaError& e) {
    std::cerr << "schema error: " << e.what() << '\n';
    return kSchema;
  } catch (const InvalidArgument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const BoundExceeded& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "check failed: " << e.what() << '\n';
    return kCheckFailure;
  }
  return kUsage;
}
