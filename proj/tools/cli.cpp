#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lapsum/decomposition.hpp"
#include "lapsum/density.hpp"
#include "lapsum/errors.hpp"
#include "lapsum/graph.hpp"
#include "lapsum/graph_source.hpp"
#include "lapsum/harness.hpp"
#include "lapsum/matching.hpp"
#include "lapsum/spectral.hpp"

namespace lapsum::cli {

using nlohmann::ordered_json;

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", x);
  std::string s(buf);
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.push_back('0');
  if (s == "-0.0") s = "0.0";
  return s;
}

namespace {

struct Input {
  std::string graph6;
  std::string file;
  std::string family;
  int all_labeled = -1;
  std::vector<std::string> gnp;
  bool strict = false;
};

struct Common {
  Input input;
  std::string format = "text";
  std::string out_path;
};

void add_input(CLI::App* cmd, Input& in) {
  auto* g6 = cmd->add_option("--graph6", in.graph6, "Graph in graph6 format");
  auto* file = cmd->add_option("--file", in.file, "Edge list (\"n m\" then pairs) or graph6 lines");
  auto* fam = cmd->add_option("--family", in.family,
                              "Named family: complete:N star:N path:N cycle:N empty:N "
                              "complete-bipartite:A,B split:N,R (fields accept a..b and a|b)");
  auto* all = cmd->add_option("--all-labeled", in.all_labeled, "Every labeled graph on N <= 7 vertices");
  auto* gnp = cmd->add_option("--gnp", in.gnp, "G(n,p) samples: N P COUNT SEED")->expected(4);
  cmd->add_flag("--strict", in.strict, "Fail on the first malformed graph6 line");
  g6->excludes(file)->excludes(fam)->excludes(all)->excludes(gnp);
  file->excludes(fam)->excludes(all)->excludes(gnp);
  fam->excludes(all)->excludes(gnp);
  all->excludes(gnp);
}

template <class T>
T parse_number(const std::string& text, const char* what) {
  std::istringstream is(text);
  T value{};
  if (!(is >> value) || !is.eof()) throw ParseError(std::string("invalid ") + what + " '" + text + "'", 0);
  return value;
}

bool looks_like_edge_list(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open '" + path + "'");
  std::string line;
  while (std::getline(f, line)) {
    const auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos) continue;
    return std::isdigit(static_cast<unsigned char>(line[pos])) != 0;
  }
  return false;
}

GraphSource make_source(const Input& in) {
  if (!in.graph6.empty()) return SingleGraphSource{parse_graph6(in.graph6), in.graph6};
  if (!in.file.empty()) {
    if (looks_like_edge_list(in.file)) {
      std::ifstream f(in.file);
      return SingleGraphSource{read_edge_list(f), in.file};
    }
    return Graph6FileSource{in.file, in.strict};
  }
  if (!in.family.empty()) {
    GraphListSource list;
    list.label = in.family;
    for (const GraphFamilyId& id : parse_family_list(in.family)) list.graphs.push_back(make_family(id));
    return list;
  }
  if (in.all_labeled >= 0) return AllLabeledSource{in.all_labeled};
  if (!in.gnp.empty()) {
    GnpSource s;
    s.n = parse_number<int>(in.gnp[0], "gnp N");
    s.p = parse_number<double>(in.gnp[1], "gnp P");
    s.count = parse_number<std::uint64_t>(in.gnp[2], "gnp COUNT");
    s.seed = parse_number<std::uint64_t>(in.gnp[3], "gnp SEED");
    return s;
  }
  throw ContractError("no input graph; use --graph6, --file, --family, --all-labeled or --gnp");
}

ordered_json edges_json(std::span<const Edge> edges) {
  ordered_json arr = ordered_json::array();
  for (const Edge& e : edges) arr.push_back({e.u, e.v});
  return arr;
}

ordered_json classes_json(const std::vector<std::vector<Edge>>& classes) {
  ordered_json arr = ordered_json::array();
  for (const auto& c : classes) arr.push_back(edges_json(c));
  return arr;
}

ordered_json structure_json(const StructureDecomposition& s) {
  return {{"k", s.k}, {"U", s.U}, {"C", s.C}, {"I", s.I}};
}

// One graph in, one line (text) or one JSON document out.
using GraphCommand = std::function<std::string(const Graph&, bool json)>;

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int per_graph(const Common& c, const GraphCommand& fn) {
    const bool json = c.format == "json";
    if (c.format == "csv") throw ContractError("--format csv is only available for scan and probe");
    std::ostringstream buffer;
    GraphStream stream(make_source(c.input));
    int status = kOk;
    while (auto g = stream.next()) {
      try {
        buffer << fn(*g, json) << '\n';
      } catch (const SizeLimitError& e) {
        err_ << "error: size limit: " << e.what() << '\n';
        status = kSizeCap;
      }
    }
    for (const SourceIssue& issue : stream.issues()) {
      err_ << "error: line " << issue.line << ": " << issue.message << " (skipped)\n";
    }
    emit(c.out_path, buffer.str());
    return status;
  }

  void emit(const std::string& path, const std::string& text) {
    if (path.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write '" + path + "'");
    f << text;
  }

 private:
  std::ostream& out_;
  std::ostream& err_;
};

std::string dump(const ordered_json& j) { return j.dump(); }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Laplacian eigenvalue-sum bounds, densities, matchings and star forests"};
  app.name("lapsum");
  app.require_subcommand(1);

  Common common;
  int k = 1;
  std::string k_text = "all";
  std::string bound_text;
  int jobs = 1;
  int ell = 1;
  int max_edges = kStarArboricityEdgeLimit;
  std::uint64_t seed = 0;
  int max_tries = 50;
  bool no_timing = false;
  bool gallai = false;

  auto add_common = [&](CLI::App* cmd, bool with_csv) {
    add_input(cmd, common.input);
    std::vector<std::string> formats{"text", "json"};
    if (with_csv) formats.push_back("csv");
    cmd->add_option("--format", common.format, "Output format")->check(CLI::IsMember(formats));
    cmd->add_option("--out", common.out_path, "Write output to a file");
  };

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Laplacian eigenvalues, non-increasing");
  add_common(spectrum_cmd, false);
  auto* eps_cmd = app.add_subcommand("eps", "Eigenvalue-sum excess: sum of the k largest minus |E|");
  add_common(eps_cmd, false);
  eps_cmd->add_option("--k", k_text, "all | LIST | n-1 | <=n-1 | <=n-2")->required();
  auto* density_cmd = app.add_subcommand("density", "Maximum subgraph density with a witness");
  add_common(density_cmd, false);
  auto* parden_cmd = app.add_subcommand("parden", "Partition density with a witness partition");
  add_common(parden_cmd, false);
  auto* orient_cmd = app.add_subcommand("orient", "Orientation with in-degrees at most k");
  add_common(orient_cmd, false);
  orient_cmd->add_option("--k", k, "In-degree bound")->required()->check(CLI::PositiveNumber);
  auto* match_cmd = app.add_subcommand("match", "Maximum matching, or maximum l-star packing");
  add_common(match_cmd, false);
  match_cmd->add_option("--ell", ell, "Leaves per star (1 = matching)")->check(CLI::PositiveNumber);
  match_cmd->add_flag("--gallai-edmonds", gallai, "Include the Gallai-Edmonds decomposition (json)");
  auto* cover_cmd = app.add_subcommand("cover", "Minimum vertex cover");
  add_common(cover_cmd, false);
  auto* oddcover_cmd = app.add_subcommand("oddcover", "Odd set cover of weight equal to the matching number");
  add_common(oddcover_cmd, false);
  auto* arbor_cmd = app.add_subcommand("arbor", "Arboricity and a forest decomposition");
  add_common(arbor_cmd, false);
  auto* stararbor_cmd = app.add_subcommand("stararbor", "Exact star arboricity and a star-forest decomposition");
  add_common(stararbor_cmd, false);
  stararbor_cmd->add_option("--max-edges", max_edges, "Edge cap for the exact search");
  auto* structure_cmd = app.add_subcommand("structure", "(U, C, I) decomposition for partition density below k");
  add_common(structure_cmd, false);
  structure_cmd->add_option("--k", k, "Parameter k")->required()->check(CLI::PositiveNumber);
  auto* pipeline_cmd = app.add_subcommand("pipeline", "Star arboricity upper-bound construction");
  add_common(pipeline_cmd, false);
  pipeline_cmd->add_option("--k", k, "Parameter k")->required()->check(CLI::PositiveNumber);
  pipeline_cmd->add_option("--seed", seed, "Seed for the randomized assignment");
  pipeline_cmd->add_option("--max-tries", max_tries, "Assignment resampling budget")->check(CLI::PositiveNumber);
  auto* scan_cmd = app.add_subcommand("scan", "Check bounds over a graph source");
  add_common(scan_cmd, true);
  scan_cmd->add_option("--bound", bound_text, "Bound ids, comma separated, or 'all'")->required();
  scan_cmd->add_option("--k", k_text, "all | LIST | n-1 | <=n-1 | <=n-2");
  scan_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  scan_cmd->add_flag("--no-timing", no_timing, "Write runtime_ms as null (byte-stable reports)");
  auto* probe_cmd = app.add_subcommand("probe", "Slack of one bound across a family range");
  add_common(probe_cmd, true);
  probe_cmd->add_option("--bound", bound_text, "Bound id")->required();
  probe_cmd->add_option("--k", k_text, "all | LIST | n-1 | <=n-1 | <=n-2");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  Runner runner(out, err);
  try {
    if (*spectrum_cmd) {
      return runner.per_graph(common, [](const Graph& g, bool json) {
        const Spectrum s = spectrum(g);
        if (json) return dump({{"graph6", encode_graph6(g)}, {"spectrum", s.values}});
        std::string line;
        for (double v : s.values) line += (line.empty() ? "" : " ") + format_number(v);
        return line;
      });
    }
    if (*eps_cmd) {
      const KRange ks = [&] {
        KRange r = KRange::parse(k_text);
        r.allow_beyond_n = true;
        return r;
      }();
      return runner.per_graph(common, [&](const Graph& g, bool json) {
        const Spectrum s = spectrum(g);
        ordered_json values = ordered_json::object();
        std::string line;
        for (int kk : ks.values(g.order())) {
          const double e = eps(s, g.size(), kk);
          values[std::to_string(kk)] = e;
          line += (line.empty() ? "" : " ") + format_number(e);
        }
        if (json) return dump({{"graph6", encode_graph6(g)}, {"eps", values}});
        return line;
      });
    }
    if (*density_cmd) {
      return runner.per_graph(common, [](const Graph& g, bool) {
        const DensityWitness w = density(g);
        return dump({{"rho", w.value.str()}, {"subset", w.subset}});
      });
    }
    if (*parden_cmd) {
      return runner.per_graph(common, [](const Graph& g, bool) {
        const PartitionWitness w = partition_density(g);
        return dump({{"rho_tilde", w.value.str()},
                     {"parts", w.parts},
                     {"attained_part_size", w.attained_part_size}});
      });
    }
    if (*orient_cmd) {
      return runner.per_graph(common, [&](const Graph& g, bool) {
        const OrientationResult r = k_orientation(g, k);
        ordered_json j;
        j["k"] = k;
        j["orientable"] = r.orientation.has_value();
        if (r.orientation) {
          ordered_json arcs = ordered_json::array();
          for (std::size_t i = 0; i < g.edges().size(); ++i) {
            const int head = r.orientation->heads[i];
            arcs.push_back({g.edges()[i].other(head), head});
          }
          j["arcs"] = arcs;
          j["max_indegree"] = r.orientation->max_indegree();
        } else {
          j["violating_subset"] = r.violating_subset;
        }
        return dump(j);
      });
    }
    if (*match_cmd) {
      return runner.per_graph(common, [&](const Graph& g, bool json) {
        if (ell > 1) {
          const StarPacking p = nu_ell(g, ell);
          if (!json) return std::to_string(p.count());
          ordered_json stars = ordered_json::array();
          for (const Star& s : p.stars) stars.push_back({{"center", s.center}, {"leaves", s.leaves}});
          return dump({{"ell", ell}, {"count", p.count()}, {"stars", stars}});
        }
        const MatchingResult m = maximum_matching(g);
        if (!json) return std::to_string(m.nu);
        ordered_json j{{"nu", m.nu}, {"pairs", edges_json(m.pairs)}};
        if (gallai) {
          const GallaiEdmonds ge = gallai_edmonds(g);
          j["gallai_edmonds"] = {{"D", ge.D}, {"A", ge.A}, {"C", ge.C}};
        }
        return dump(j);
      });
    }
    if (*cover_cmd) {
      return runner.per_graph(common, [](const Graph& g, bool json) {
        const std::vector<int> c = min_vertex_cover(g);
        if (!json) return std::to_string(c.size());
        return dump({{"tau", c.size()}, {"cover", c}});
      });
    }
    if (*oddcover_cmd) {
      return runner.per_graph(common, [](const Graph& g, bool) {
        const OddSetCover c = odd_set_cover(g);
        return dump({{"vertices", c.vertices}, {"odd_sets", c.odd_sets}, {"weight", c.weight()}});
      });
    }
    if (*arbor_cmd) {
      return runner.per_graph(common, [](const Graph& g, bool json) {
        const ArboricityWitness a = arboricity_value(g);
        if (!json) return std::to_string(a.value);
        const ForestDecomposition d = forest_decomposition(g);
        return dump({{"arboricity", a.value},
                     {"witness", a.subset},
                     {"classes", classes_json(d.classes)},
                     {"kind", "forest"}});
      });
    }
    if (*stararbor_cmd) {
      return runner.per_graph(common, [&](const Graph& g, bool json) {
        StarArboricityOptions opts;
        opts.max_edges = max_edges;
        const StarArboricityResult r = star_arboricity_exact(g, opts);
        if (!json) return std::to_string(r.value);
        return dump({{"star_arboricity", r.value},
                     {"classes", classes_json(r.decomposition.classes)},
                     {"kind", "star-forest"}});
      });
    }
    if (*structure_cmd) {
      return runner.per_graph(common, [&](const Graph& g, bool) {
        return dump(structure_json(structure_decomposition(g, k)));
      });
    }
    if (*pipeline_cmd) {
      return runner.per_graph(common, [&](const Graph& g, bool) {
        PipelineOptions opts;
        opts.seed = seed;
        opts.max_tries = max_tries;
        const PipelineResult r = sa_upper_bound_pipeline(g, k, opts);
        ordered_json j;
        j["k"] = r.k;
        j["route"] = r.route;
        j["bound_claimed"] = r.bound_claimed;
        if (r.decomposition) {
          j["classes"] = classes_json(r.decomposition->classes);
          j["kind"] = "star-forest";
        }
        if (r.auxiliary && r.assignment) {
          const Orientation& o = r.auxiliary->orientation;
          ordered_json arcs = ordered_json::array();
          for (std::size_t i = 0; i < o.base.edges().size(); ++i) {
            arcs.push_back({o.base.edges()[i].other(o.heads[i]), o.heads[i]});
          }
          j["structure"] = structure_json(r.auxiliary->structure);
          j["auxiliary"] = {{"n", o.base.order()},
                            {"apex", r.auxiliary->apex},
                            {"to_parent", r.auxiliary->to_parent},
                            {"arcs", arcs}};
          j["c"] = r.assignment->assignment.c;
          j["success"] = r.assignment->success;
          j["tries"] = r.assignment->tries;
          j["lists"] = r.assignment->assignment.lists;
          j["failure_counts"] = r.assignment->failure_counts;
        }
        return dump(j);
      });
    }
    if (*scan_cmd) {
      ScanOptions opts;
      if (bound_text == "all") {
        opts.bounds.assign(std::begin(kAllBounds), std::end(kAllBounds));
      } else {
        std::stringstream ss(bound_text);
        std::string id;
        while (std::getline(ss, id, ',')) opts.bounds.push_back(parse_bound(id));
      }
      opts.ks = KRange::parse(k_text);
      opts.jobs = jobs;
      opts.timing = !no_timing;
      const ScanReport report = scan(make_source(common.input), opts);
      runner.emit(common.out_path, common.format == "csv" ? report.to_csv() : report.to_json() + "\n");
      for (const SkipRecord& s : report.skipped) {
        if (s.graph6.empty() && s.bound.empty()) err << "error: " << s.reason << " (skipped)\n";
      }
      return report.has_violation() ? kViolation : kOk;
    }
    if (*probe_cmd) {
      if (common.input.family.empty()) throw ContractError("probe needs --family");
      const BoundId bound = parse_bound(bound_text);
      const std::vector<GraphFamilyId> families = parse_family_list(common.input.family);
      const std::vector<ProbeRow> rows = tightness_probe(families, bound, KRange::parse(k_text));
      runner.emit(common.out_path, common.format == "csv" ? probe_to_csv(rows) : probe_to_json(rows, bound) + "\n");
      return kOk;
    }
  } catch (const SizeLimitError& e) {
    err << "error: size limit: " << e.what() << '\n';
    return kSizeCap;
  } catch (const ParseError& e) {
    err << "error: parse: " << e.what();
    if (e.line() > 0) err << " (line " << e.line() << ")";
    err << " at offset " << e.offset() << '\n';
    return kUsage;
  } catch (const ContractError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const AlgorithmError& e) {
    err << "error: internal: " << e.what() << '\n';
    return kInternal;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace lapsum::cli
