#include "ncpart/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>
#include <thread>

#include "ncpart/error.hpp"
#include "ncpart/freeprob.hpp"
#include "ncpart/geometry.hpp"
#include "ncpart/json_io.hpp"
#include "ncpart/sampler.hpp"
#include "ncpart/series.hpp"
#include "ncpart/stats.hpp"
#include "ncpart/verify/acceptance.hpp"

#ifndef NCPART_VERSION
#define NCPART_VERSION "0.0.0"
#endif

namespace ncpart::cli {
namespace {

struct Meta {
  std::string command_line;
  std::vector<std::pair<std::string, std::string>> fields;

  void add(std::string key, std::string value) { fields.emplace_back(std::move(key), std::move(value)); }

  void write_comment(std::ostream& os) const {
    os << "# ncpart " << NCPART_VERSION << '\n';
    os << "# command: " << command_line << '\n';
    for (const auto& [k, v] : fields) os << "# " << k << ": " << v << '\n';
  }

  nlohmann::json json() const {
    nlohmann::json j;
    j["version"] = NCPART_VERSION;
    j["command"] = command_line;
    for (const auto& [k, v] : fields) j[k] = v;
    return j;
  }
};

// Writes to the file given by --out, or to the fallback stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw Error(ErrorKind::InvalidArgument, "cannot open '" + path + "' for writing");
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string number(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  std::ostringstream ss;
  ss << std::setprecision(std::numeric_limits<double>::max_digits10) << x;
  return ss.str();
}

// The first `count` partitions of replica stream `seed`, handed to `emit` in index order.
void sample_stream(const PartitionSampler& sampler, std::uint64_t seed, std::size_t count,
                   const std::function<void(std::size_t, const NCPartition&)>& emit) {
  const std::size_t threads = worker_threads();
  const std::size_t batch = std::max<std::size_t>(64, 8 * threads);
  std::vector<NCPartition> buffer;
  for (std::size_t first = 0; first < count; first += batch) {
    const std::size_t len = std::min(batch, count - first);
    buffer.assign(len, NCPartition());
    std::vector<std::exception_ptr> failures(threads);
    auto work = [&](std::size_t t) {
      try {
        for (std::size_t i = t; i < len; i += threads) {
          Rng rng(seed, first + i);
          buffer[i] = sampler.sample(rng);
        }
      } catch (...) {
        failures[t] = std::current_exception();
      }
    };
    if (threads == 1 || len == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work, t);
      for (auto& th : pool) th.join();
    }
    for (const auto& f : failures) {
      if (f) std::rethrow_exception(f);
    }
    for (std::size_t i = 0; i < len; ++i) emit(first + i, buffer[i]);
  }
}

struct EnumerateArgs {
  std::string weights;
  std::size_t n_max = 10;
  bool asymptotic = false;
  std::string out;
};

void run_enumerate(const EnumerateArgs& a, Meta meta, std::ostream& os) {
  const WeightSeq w = parse_weight_spec(a.weights);
  const MembershipSet* set = w.membership_set();
  if (a.asymptotic && set == nullptr) {
    throw Error(ErrorKind::InvalidArgument, "--asymptotic needs a membership weight spec");
  }
  meta.add("weights", a.weights);
  Sink sink(a.out, os);
  std::ostream& o = sink.get();
  meta.write_comment(o);
  o << "n,count" << (a.asymptotic ? ",asymptotic,ratio" : "") << '\n';
  std::vector<Rational> exact;
  if (set == nullptr) {
    exact.resize(a.n_max + 1);
    for (std::size_t k = 0; k <= a.n_max; ++k) exact[k] = Rational(w(k));
  }
  for (std::size_t n = 1; n <= a.n_max; ++n) {
    if (set != nullptr) {
      const BigInt count = count_constrained(*set, n);
      o << n << ',' << count;
      if (a.asymptotic) {
        if (count == 0) {
          o << ",,";
        } else {
          const double log_a = log_asymptotic_count(*set, n);
          o << ',' << number(std::exp(log_a)) << ',' << number(std::exp(log_big(count) - log_a));
        }
      }
    } else {
      const Rational z = tree_partition_function(std::span<const Rational>(exact.data(), n + 1), n);
      o << n << ',' << number(z.convert_to<double>());
    }
    o << '\n';
  }
}

struct SampleArgs {
  std::string weights;
  std::size_t n = 0;
  std::size_t count = 1;
  std::uint64_t seed = 0;
  std::string method = "auto";
  std::string out;
};

void run_sample(const SampleArgs& a, Meta meta, std::ostream& os) {
  const TiltedLaw law = equivalent_distribution(parse_weight_spec(a.weights));
  const PartitionSampler sampler(law, a.n, parse_sampler_method(a.method));
  meta.add("weights", a.weights);
  meta.add("seed", std::to_string(a.seed));
  meta.add("n", std::to_string(a.n));
  meta.add("count", std::to_string(a.count));
  meta.add("method", std::string(to_string(sampler.method())));
  Sink sink(a.out, os);
  std::ostream& o = sink.get();
  o << nlohmann::json{{"meta", meta.json()}}.dump() << '\n';
  sample_stream(sampler, a.seed, a.count, [&](std::size_t i, const NCPartition& p) {
    nlohmann::json j = to_json(p);
    j["replica"] = i;
    o << j.dump() << '\n';
  });
}

struct StatsArgs {
  std::string weights;
  std::size_t n = 0;
  std::size_t replicas = 100;
  std::uint64_t seed = 0;
  std::string sets = "all";
  std::size_t max_k = 10;
  std::size_t threads = 0;
  std::string method = "auto";
  std::string out;
};

void run_stats(const StatsArgs& a, Meta meta, std::ostream& os) {
  const TiltedLaw law = equivalent_distribution(parse_weight_spec(a.weights));
  std::vector<MembershipSet> sets;
  std::stringstream ss(a.sets);
  for (std::string item; std::getline(ss, item, ';');) {
    if (!item.empty()) sets.push_back(MembershipSet::parse(item));
  }
  SuiteOptions opts;
  opts.max_k = a.max_k;
  opts.threads = a.threads;
  const EmpiricalReport report =
      empirical_suite({law, a.n, a.seed, parse_sampler_method(a.method)}, sets, a.replicas, opts);
  meta.add("weights", a.weights);
  meta.add("seed", std::to_string(a.seed));
  meta.add("sets", a.sets);
  Sink sink(a.out, os);
  meta.write_comment(sink.get());
  write_report_csv(sink.get(), report);
}

struct SupportArgs {
  std::vector<std::string> presets;
  std::string cumulants;
  std::string out;
};

void run_support(const SupportArgs& a, Meta meta, std::ostream& os) {
  std::vector<CumulantSeq> inputs;
  for (const auto& p : a.presets) inputs.push_back(CumulantSeq::preset(p));
  if (!a.cumulants.empty()) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(read_file(a.cumulants));
    } catch (const nlohmann::json::parse_error& e) {
      throw Error(ErrorKind::InvalidArgument, std::string("--cumulants: ") + e.what());
    }
    inputs.push_back(cumulants_from_json(j));
  }
  if (inputs.empty()) throw Error(ErrorKind::InvalidArgument, "give --preset or --cumulants");
  Sink sink(a.out, os);
  std::ostream& o = sink.get();
  meta.write_comment(o);
  o << "name,rho,nu,xi,s_max,branch,residual\n";
  for (const auto& kappa : inputs) {
    const SupportResult s = support_max(kappa);
    o << kappa.name() << ',' << s.rho.to_string() << ',' << s.nu.to_string() << ',' << number(s.xi) << ','
      << number(s.s_max) << ',' << to_string(s.branch) << ',' << number(s.residual) << '\n';
  }
}

struct RenderArgs {
  std::string in;
  std::size_t index = 0;
  bool fill = false;
  bool shade = false;
  int px = 512;
  std::string out;
};

NCPartition read_partition(const std::string& path, std::size_t index) {
  const std::string text = read_file(path);
  const nlohmann::json whole = nlohmann::json::parse(text, nullptr, false);
  if (!whole.is_discarded()) {
    if (index != 0) throw Error(ErrorKind::InvalidArgument, "--index needs a JSON-lines file");
    return partition_from_json(whole);
  }
  std::istringstream lines(text);
  std::size_t seen = 0;
  std::size_t line_no = 0;
  for (std::string line; std::getline(lines, line);) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded()) {
      throw Error(ErrorKind::InvalidArgument, path + ":" + std::to_string(line_no) + ": not JSON");
    }
    if (j.contains("meta")) continue;
    if (seen++ == index) return partition_from_json(j);
  }
  throw Error(ErrorKind::InvalidArgument, path + " has no partition with index " + std::to_string(index));
}

void run_render(const RenderArgs& a, const Meta& meta, std::ostream& os) {
  const NCPartition p = read_partition(a.in, a.index);
  RenderOptions opts;
  opts.fill_hulls = a.fill;
  opts.shade_by_area = a.shade;
  opts.size_px = a.px;
  std::string svg = render_svg(p, opts);
  std::string note = "<metadata>ncpart " NCPART_VERSION "; command: ";
  for (char c : meta.command_line) {
    if (c == '&') note += "&amp;";
    else if (c == '<') note += "&lt;";
    else if (c == '>') note += "&gt;";
    else note += c;
  }
  note += "</metadata>\n";
  const std::size_t open = svg.find("<svg");
  svg.insert(svg.find('\n', open) + 1, note);
  Sink sink(a.out, os);
  sink.get() << svg;
}

struct SelftestArgs {
  bool full = false;
  bool verbose = false;
  std::vector<int> criteria;
};

bool run_selftest(const SelftestArgs& a, std::ostream& os) {
  const auto scale = a.full ? verify::Scale::Full : verify::Scale::Reduced;
  if (a.criteria.empty()) return verify::run_all(os, scale, a.verbose);
  bool ok = true;
  for (int id : a.criteria) {
    const auto r = verify::run_criterion(id, scale);
    verify::print_result(os, r, a.verbose);
    ok = ok && r.pass();
  }
  return ok;
}

std::string join(const std::vector<std::string>& args) {
  std::string s = "ncpart";
  for (const auto& a : args) {
    const bool quote = a.empty() || a.find_first_of(" \t;\"'") != std::string::npos;
    s += ' ';
    s += quote ? "'" + a + "'" : a;
  }
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Random non-crossing partitions: counting, sampling, statistics and rendering", "ncpart"};
  app.set_version_flag("--version", NCPART_VERSION);
  app.require_subcommand(1);

  EnumerateArgs ea;
  auto* enumerate = app.add_subcommand("enumerate", "exact counts Z_n for n = 1..n-max as CSV");
  enumerate->add_option("-w,--weights", ea.weights, "weight spec")->required();
  enumerate->add_option("--n-max", ea.n_max, "largest n")->required()->check(CLI::Range(1, 100000));
  enumerate->add_flag("--asymptotic", ea.asymptotic, "add the asymptotic estimate and the ratio");
  enumerate->add_option("-o,--out", ea.out, "output file (default stdout)");

  SampleArgs sa;
  auto* sample = app.add_subcommand("sample", "draw partitions as JSON lines");
  sample->add_option("-w,--weights", sa.weights, "weight spec")->required();
  sample->add_option("-n,--n", sa.n, "partition size")->required()->check(CLI::PositiveNumber);
  sample->add_option("-c,--count", sa.count, "number of partitions")->check(CLI::PositiveNumber);
  sample->add_option("-s,--seed", sa.seed, "seed");
  sample->add_option("-m,--method", sa.method, "auto, dp_table or rejection");
  sample->add_option("-o,--out", sa.out, "output file (default stdout)");

  StatsArgs st;
  auto* stats = app.add_subcommand("stats", "block statistics against their limits as CSV");
  stats->add_option("-w,--weights", st.weights, "weight spec")->required();
  stats->add_option("-n,--n", st.n, "partition size")->required()->check(CLI::PositiveNumber);
  stats->add_option("-r,--replicas", st.replicas, "number of replicas")->check(CLI::PositiveNumber);
  stats->add_option("-s,--seed", st.seed, "seed");
  stats->add_option("--sets", st.sets, "semicolon-separated block-size sets, e.g. \"1;2;odd\"");
  stats->add_option("--max-k", st.max_k, "tabulate block laws up to this size");
  stats->add_option("-t,--threads", st.threads, "worker threads (0: automatic)");
  stats->add_option("-m,--method", st.method, "auto, dp_table or rejection");
  stats->add_option("-o,--out", st.out, "output file (default stdout)");

  SupportArgs su;
  auto* support = app.add_subcommand("support", "right edge of the support from free cumulants");
  support->add_option("-p,--preset", su.presets,
                      "semicircle, free-poisson:L, ortmann-uniform, levy-area, beta-tail:A,C");
  support->add_option("--cumulants", su.cumulants, "JSON file with free cumulants");
  support->add_option("-o,--out", su.out, "output file (default stdout)");

  RenderArgs ra;
  auto* render = app.add_subcommand("render", "draw a partition as SVG");
  render->add_option("-i,--in", ra.in, "partition JSON or JSON-lines file")->required();
  render->add_option("--index", ra.index, "partition to draw from a JSON-lines file");
  render->add_flag("--fill", ra.fill, "fill block hulls");
  render->add_flag("--shade", ra.shade, "shade hulls by area rank");
  render->add_option("--px", ra.px, "image size in pixels")->check(CLI::Range(16, 16384));
  render->add_option("-o,--out", ra.out, "output file (default stdout)");

  SelftestArgs sf;
  auto* selftest = app.add_subcommand("selftest", "run the acceptance checks at reduced scale");
  selftest->add_flag("--full", sf.full, "run at full scale");
  selftest->add_flag("-v,--verbose", sf.verbose, "print every check");
  selftest->add_option("-c,--criterion", sf.criteria, "criteria to run (default: all)")
      ->check(CLI::Range(1, verify::kCriterionCount));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalid;
  }

  Meta meta{join(args), {}};
  try {
    if (*enumerate) run_enumerate(ea, meta, out);
    if (*sample) run_sample(sa, meta, out);
    if (*stats) run_stats(st, meta, out);
    if (*support) run_support(su, meta, out);
    if (*render) run_render(ra, meta, out);
    if (*selftest) return run_selftest(sf, out) ? kOk : kInvalid;
  } catch (const Error& e) {
    err << "ncpart: " << e.what() << '\n';
    return e.kind() == ErrorKind::Infeasible ? kInfeasible : kInvalid;
  } catch (const std::exception& e) {
    err << "ncpart: " << e.what() << '\n';
    return kInvalid;
  }
  return kOk;
}

}  // namespace ncpart::cli
