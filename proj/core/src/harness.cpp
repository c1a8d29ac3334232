#include "lapsum/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <iomanip>
#include <map>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "lapsum/decomposition.hpp"
#include "lapsum/errors.hpp"
#include "lapsum/matching.hpp"

namespace lapsum {

using nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// KRange

KRange KRange::parse(std::string_view text) {
  KRange r;
  if (text == "all") return r;
  if (text == "n-1") {
    r.mode = Mode::kExactlyNMinus1;
    return r;
  }
  if (text == "<=n-1") {
    r.mode = Mode::kUpToNMinus1;
    return r;
  }
  if (text == "<=n-2") {
    r.mode = Mode::kUpToNMinus2;
    return r;
  }
  r.mode = Mode::kList;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string field(text.substr(pos, comma - pos));
    std::size_t used = 0;
    int k = 0;
    try {
      k = std::stoi(field, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (field.empty() || used != field.size() || k < 1) {
      throw ParseError("invalid k value '" + field + "'", pos);
    }
    r.list.push_back(k);
    pos = comma + 1;
  }
  std::sort(r.list.begin(), r.list.end());
  r.list.erase(std::unique(r.list.begin(), r.list.end()), r.list.end());
  return r;
}

std::string KRange::str() const {
  switch (mode) {
    case Mode::kAll:
      return "all";
    case Mode::kUpToNMinus2:
      return "<=n-2";
    case Mode::kUpToNMinus1:
      return "<=n-1";
    case Mode::kExactlyNMinus1:
      return "n-1";
    case Mode::kList:
      break;
  }
  std::string s;
  for (int k : list) s += (s.empty() ? "" : ",") + std::to_string(k);
  return s;
}

std::vector<int> KRange::values(int n) const {
  std::vector<int> out;
  auto upto = [&](int hi) {
    for (int k = 1; k <= hi; ++k) out.push_back(k);
  };
  switch (mode) {
    case Mode::kAll:
      upto(n);
      break;
    case Mode::kUpToNMinus2:
      upto(n - 2);
      break;
    case Mode::kUpToNMinus1:
      upto(n - 1);
      break;
    case Mode::kExactlyNMinus1:
      if (n >= 2) out.push_back(n - 1);
      break;
    case Mode::kList:
      for (int k : list) {
        if (k <= n || allow_beyond_n) out.push_back(k);
      }
      break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Per-graph evaluation

namespace {

std::string label_of(const Graph& g) {
  if (g.order() <= kGraph6MaxOrder) return encode_graph6(g);
  return "n=" + std::to_string(g.order()) + ",m=" + std::to_string(g.size());
}

struct Needs {
  bool nu = false;
  bool tau = false;
  bool sa = false;
};

Needs needs_for(std::span<const BoundId> bounds) {
  Needs n;
  for (BoundId b : bounds) {
    n.nu = n.nu || needs_matching_number(b);
    n.tau = n.tau || needs_cover_number(b);
    n.sa = n.sa || needs_star_arboricity(b);
  }
  return n;
}

struct Prepared {
  GraphInvariants inv;
  BoundInputs inputs;
  std::string tau_skip;
  std::string sa_skip;
};

Prepared prepare(const Graph& g, const Needs& needs, int sa_edge_limit) {
  Prepared p;
  p.inv.graph6 = label_of(g);
  p.inv.n = g.order();
  p.inv.m = g.size();
  p.inv.n_prime = components_info(g).n_prime;
  p.inv.non_isolated = non_isolated_count(g);
  p.inv.bipartite = is_bipartite(g);
  p.inputs.spectrum = spectrum(g);
  p.inv.spectrum = p.inputs.spectrum->values;
  p.inputs.n_prime = p.inv.n_prime;
  p.inputs.non_isolated = p.inv.non_isolated;
  p.inputs.bipartite = p.inv.bipartite;
  p.inputs.conjugate_degrees = conjugate_degrees(g);
  if (needs.nu || needs.tau) p.inv.nu = matching_number(g);
  if (needs.tau) {
    try {
      p.inv.tau = static_cast<int>(min_vertex_cover(g).size());
    } catch (const SizeLimitError& e) {
      p.tau_skip = e.what();
    }
  }
  if (needs.sa) {
    try {
      StarArboricityOptions opts;
      opts.max_edges = sa_edge_limit;
      p.inv.sa = star_arboricity_exact(g, opts).value;
    } catch (const SizeLimitError& e) {
      p.sa_skip = e.what();
    }
  }
  p.inputs.nu = p.inv.nu;
  p.inputs.tau = p.inv.tau;
  p.inputs.sa = p.inv.sa;
  return p;
}

struct Evaluation {
  std::size_t bound_slot = 0;
  int k = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool holds = true;
  bool equality = false;
};

struct GraphOutcome {
  GraphInvariants inv;
  std::vector<Evaluation> evals;
  std::vector<SkipRecord> skips;
};

GraphOutcome evaluate_graph(const Graph& g, const ScanOptions& opts, const Needs& needs) {
  GraphOutcome out;
  Prepared p;
  try {
    p = prepare(g, needs, opts.sa_edge_limit);
  } catch (const std::exception& e) {
    out.inv.graph6 = label_of(g);
    out.skips.push_back({out.inv.graph6, "", e.what()});
    return out;
  }
  const std::vector<int> ks = opts.ks.values(g.order());
  for (std::size_t slot = 0; slot < opts.bounds.size(); ++slot) {
    const BoundId b = opts.bounds[slot];
    if (needs_cover_number(b) && !p.inv.tau) {
      out.skips.push_back({p.inv.graph6, std::string(to_string(b)), p.tau_skip});
      continue;
    }
    if (needs_star_arboricity(b) && !p.inv.sa) {
      out.skips.push_back({p.inv.graph6, std::string(to_string(b)), p.sa_skip});
      continue;
    }
    for (int k : ks) {
      const BoundEvaluation ev = evaluate_bound(b, g, k, p.inputs);
      if (!ev.applicable) continue;
      out.evals.push_back({slot, k, ev.lhs, ev.rhs, ev.slack, ev.holds, ev.equality});
    }
  }
  out.inv = std::move(p.inv);
  return out;
}

std::vector<GraphOutcome> evaluate_chunk(const std::vector<Graph>& chunk, const ScanOptions& opts,
                                         const Needs& needs) {
  std::vector<GraphOutcome> results(chunk.size());
  const int workers = std::max(1, std::min<int>(opts.jobs, static_cast<int>(chunk.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < chunk.size(); ++i) results[i] = evaluate_graph(chunk[i], opts, needs);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < chunk.size(); i = next++) {
        results[i] = evaluate_graph(chunk[i], opts, needs);
      }
    });
  }
  for (auto& t : pool) t.join();
  return results;
}

}  // namespace

ScanReport scan(const GraphSource& src, const ScanOptions& opts) {
  if (opts.bounds.empty()) throw ContractError("scan: no bounds requested");
  if (opts.jobs < 1) throw ContractError("scan: jobs must be positive");
  const auto start = std::chrono::steady_clock::now();
  const Needs needs = needs_for(opts.bounds);

  ScanReport report;
  report.source = describe(src);
  report.k_range = opts.ks.str();
  report.bounds = opts.bounds;

  std::map<std::pair<std::size_t, int>, BoundTotals> totals;
  std::map<std::pair<std::size_t, int>, std::size_t> listed_equalities;

  auto merge = [&](GraphOutcome& o) {
    ++report.graphs;
    for (SkipRecord& s : o.skips) {
      ++report.skipped_total;
      if (report.skipped.size() < opts.max_listed_skips) report.skipped.push_back(std::move(s));
    }
    for (const Evaluation& ev : o.evals) {
      const auto key = std::make_pair(ev.bound_slot, ev.k);
      BoundTotals& t = totals[key];
      t.bound = opts.bounds[ev.bound_slot];
      t.k = ev.k;
      ++t.graphs_checked;
      t.min_slack = t.min_slack ? std::min(*t.min_slack, ev.slack) : ev.slack;
      t.max_lhs_over_k2 = std::max(t.max_lhs_over_k2, ev.lhs / (static_cast<double>(ev.k) * ev.k));
      if (!ev.holds) {
        ++t.violations;
        report.violations.push_back({t.bound, ev.k, ev.lhs, ev.rhs, o.inv});
      }
      if (ev.equality) {
        ++t.equalities;
        if (listed_equalities[key]++ < opts.max_listed_equalities) {
          report.equalities.push_back({t.bound, ev.k, o.inv.graph6, ev.lhs, ev.rhs});
        }
      }
    }
  };

  GraphStream stream(src);
  std::vector<Graph> chunk;
  chunk.reserve(opts.chunk_size);
  for (;;) {
    chunk.clear();
    while (chunk.size() < std::max<std::size_t>(1, opts.chunk_size)) {
      std::optional<Graph> g = stream.next();
      if (!g) break;
      chunk.push_back(std::move(*g));
    }
    if (chunk.empty()) break;
    std::vector<GraphOutcome> outcomes = evaluate_chunk(chunk, opts, needs);
    for (GraphOutcome& o : outcomes) merge(o);
  }
  report.source_issues = stream.issues();
  for (const SourceIssue& issue : report.source_issues) {
    ++report.skipped_total;
    if (report.skipped.size() < opts.max_listed_skips) {
      report.skipped.push_back({"", "", "line " + std::to_string(issue.line) + ": " + issue.message});
    }
  }
  for (auto& [key, t] : totals) report.totals.push_back(t);

  if (opts.timing) {
    report.runtime_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return report;
}

// ---------------------------------------------------------------------------
// Serialisation

namespace {

ordered_json optional_int(const std::optional<int>& v) { return v ? ordered_json(*v) : ordered_json(nullptr); }

ordered_json invariants_json(const GraphInvariants& inv) {
  ordered_json j;
  j["graph6"] = inv.graph6;
  j["n"] = inv.n;
  j["m"] = inv.m;
  j["n_prime"] = inv.n_prime;
  j["non_isolated"] = inv.non_isolated;
  j["bipartite"] = inv.bipartite;
  j["nu"] = optional_int(inv.nu);
  j["tau"] = optional_int(inv.tau);
  j["sa"] = optional_int(inv.sa);
  j["spectrum"] = inv.spectrum;
  return j;
}

std::string csv_number(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

}  // namespace

std::string ScanReport::to_json(int indent) const {
  ordered_json j;
  j["schema"] = 1;
  ordered_json source_j;
  source_j["description"] = source;
  source_j["graphs"] = graphs;
  source_j["k_range"] = k_range;
  j["source"] = source_j;
  ordered_json bounds_j = ordered_json::array();
  for (BoundId b : bounds) {
    bounds_j.push_back({{"id", std::string(to_string(b))}, {"conjecture", is_conjecture(b)}});
  }
  j["bounds"] = bounds_j;

  ordered_json totals_j = ordered_json::array();
  for (const BoundTotals& t : totals) {
    ordered_json row;
    row["bound"] = std::string(to_string(t.bound));
    row["k"] = t.k;
    row["graphs_checked"] = t.graphs_checked;
    row["violations"] = t.violations;
    row["min_slack"] = t.min_slack ? ordered_json(*t.min_slack) : ordered_json(nullptr);
    row["equalities"] = t.equalities;
    row["max_lhs_over_k2"] = t.max_lhs_over_k2;
    totals_j.push_back(row);
  }
  j["totals"] = totals_j;

  ordered_json viol_j = ordered_json::array();
  for (const Violation& v : violations) {
    ordered_json row;
    row["bound"] = std::string(to_string(v.bound));
    row["conjecture"] = is_conjecture(v.bound);
    row["k"] = v.k;
    row["lhs"] = v.lhs;
    row["rhs"] = v.rhs;
    row["slack"] = v.rhs - v.lhs;
    row["witness"] = invariants_json(v.witness);
    viol_j.push_back(row);
  }
  j["violations"] = viol_j;

  ordered_json eq_j = ordered_json::array();
  for (const EqualityCase& e : equalities) {
    eq_j.push_back({{"bound", std::string(to_string(e.bound))},
                    {"k", e.k},
                    {"graph6", e.graph6},
                    {"lhs", e.lhs},
                    {"rhs", e.rhs}});
  }
  j["equalities"] = eq_j;

  ordered_json skip_j;
  skip_j["count"] = skipped_total;
  ordered_json entries = ordered_json::array();
  for (const SkipRecord& s : skipped) {
    entries.push_back({{"graph6", s.graph6}, {"bound", s.bound}, {"reason", s.reason}});
  }
  skip_j["entries"] = entries;
  j["skipped"] = skip_j;
  j["runtime_ms"] = runtime_ms ? ordered_json(*runtime_ms) : ordered_json(nullptr);
  return j.dump(indent);
}

std::string ScanReport::to_csv() const {
  std::ostringstream os;
  os << "bound,k,graphs_checked,violations,min_slack,equalities,max_lhs_over_k2\n";
  for (const BoundTotals& t : totals) {
    os << to_string(t.bound) << ',' << t.k << ',' << t.graphs_checked << ',' << t.violations << ','
       << (t.min_slack ? csv_number(*t.min_slack) : "") << ',' << t.equalities << ','
       << csv_number(t.max_lhs_over_k2) << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Tightness probe

std::vector<ProbeRow> tightness_probe(std::span<const GraphFamilyId> families, BoundId bound,
                                      const KRange& ks) {
  const BoundId single[] = {bound};
  const Needs needs = needs_for(single);
  std::vector<ProbeRow> rows;
  for (const GraphFamilyId& id : families) {
    const Graph g = make_family(id);
    if (g.order() == 0) continue;
    const Prepared p = prepare(g, needs, kStarArboricityEdgeLimit);
    if ((needs.tau && !p.inv.tau) || (needs.sa && !p.inv.sa)) continue;
    for (int k : ks.values(g.order())) {
      const BoundEvaluation ev = evaluate_bound(bound, g, k, p.inputs);
      if (!ev.applicable) continue;
      rows.push_back({id.str(), p.inv.graph6, k, ev.lhs, ev.rhs, ev.slack, ev.equality});
    }
  }
  return rows;
}

std::string probe_to_json(const std::vector<ProbeRow>& rows, BoundId bound, int indent) {
  ordered_json j;
  j["schema"] = 1;
  j["bound"] = std::string(to_string(bound));
  ordered_json arr = ordered_json::array();
  for (const ProbeRow& r : rows) {
    arr.push_back({{"family", r.family},
                   {"graph6", r.graph6},
                   {"k", r.k},
                   {"lhs", r.lhs},
                   {"rhs", r.rhs},
                   {"slack", r.slack},
                   {"equality", r.equality}});
  }
  j["rows"] = arr;
  return j.dump(indent);
}

std::string probe_to_csv(const std::vector<ProbeRow>& rows) {
  std::ostringstream os;
  os << "family,graph6,k,lhs,rhs,slack,equality\n";
  for (const ProbeRow& r : rows) {
    os << '"' << r.family << "\"," << '"' << r.graph6 << "\"," << r.k << ',' << csv_number(r.lhs) << ','
       << csv_number(r.rhs) << ',' << csv_number(r.slack) << ',' << (r.equality ? 1 : 0) << '\n';
  }
  return os.str();
}

}  // namespace lapsum
