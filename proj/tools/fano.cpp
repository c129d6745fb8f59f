#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <mutex>
#include <set>
#include <thread>

#include <CLI11.hpp>

#include "fano/io.hpp"

using namespace fano;
using nlohmann::json;

namespace {

struct Options {
  std::string input;
  std::string format = "text";
  std::string output;
  long long limit = 0;
  unsigned seed = 0;
  int jobs = 1;
  int period_order = 20;
  bool dedup = false;
  bool resume = false;
  bool count_only = false;
  bool strict = false;
};

std::ostream& open_output(const Options& opt, std::ofstream& file) {
  if (opt.output.empty()) return std::cout;
  file.open(opt.output, opt.resume ? std::ios::app : std::ios::out);
  if (!file) throw input_error("cannot open output file: " + opt.output);
  return file;
}

void require_reflexive(const NamedPolytope& np) {
  if (!is_reflexive(np.poly))
    throw input_error("polytope '" + np.id + "' is not reflexive");
}

int cmd_check(const Options& opt) {
  std::ofstream file;
  std::ostream& out = open_output(opt, file);
  for (const auto& np : read_polytopes(opt.input, opt.format)) {
    bool refl = is_reflexive(np.poly);
    out << np.id << ": " << np.poly.verts.size() << " vertices, "
        << np.poly.facets.size() << " facets, " << np.poly.edges.size()
        << " edges; " << (refl ? "reflexive" : "NOT reflexive") << "\n";
    if (!refl) continue;
    out << "  edge  l_e  k_e  dull\n";
    for (size_t e = 0; e < np.poly.edges.size(); ++e) {
      EdgeGeometry g = edge_geometry(np.poly, static_cast<int>(e));
      out << "  " << e << "  " << g.length << "  " << g.colength << "  "
          << (g.colength == 1 ? "yes" : "no") << "\n";
    }
  }
  return 0;
}

int cmd_decomps(const Options& opt) {
  std::ofstream file;
  std::ostream& out = open_output(opt, file);
  for (const auto& np : read_polytopes(opt.input, opt.format)) {
    require_reflexive(np);
    json facets = json::array();
    for (size_t fi = 0; fi < np.poly.facets.size(); ++fi) {
      FacetChart ch = facet_chart(np.poly, static_cast<int>(fi));
      json ds = json::array();
      for (const auto& d : enumerate_admissible_decompositions(ch.polygon)) {
        json summands = json::array();
        for (const auto& t : d.summands) {
          json verts = json::array();
          for (auto v : t.verts) verts.push_back(json::array({v.x, v.y}));
          summands.push_back({{"kind", t.kind}, {"vertices", verts}});
        }
        ds.push_back(summands);
      }
      facets.push_back({{"facet", fi}, {"decompositions", ds}});
    }
    out << json{{"id", np.id}, {"facets", facets}} << "\n";
  }
  return 0;
}

int cmd_subdivs(const Options& opt) {
  std::ofstream file;
  std::ostream& out = open_output(opt, file);
  for (const auto& np : read_polytopes(opt.input, opt.format)) {
    require_reflexive(np);
    json facets = json::array();
    for (size_t fi = 0; fi < np.poly.facets.size(); ++fi) {
      FacetChart ch = facet_chart(np.poly, static_cast<int>(fi));
      json ds = json::array();
      for (const auto& d : enumerate_admissible_decompositions(ch.polygon)) {
        json subs = json::array();
        for (const auto& s : enumerate_fine_coherent_subdivisions(d)) {
          json cells = json::array();
          for (const auto& mc : s.cells) {
            json points = json::array();
            for (auto v : mc.cell) points.push_back(json::array({v.x, v.y}));
            cells.push_back(points);
          }
          subs.push_back(cells);
        }
        ds.push_back({{"r", d.r()}, {"subdivisions", subs}});
      }
      facets.push_back({{"facet", fi}, {"decompositions", ds}});
    }
    out << json{{"id", np.id}, {"facets", facets}} << "\n";
  }
  return 0;
}

int cmd_amd(const Options& opt) {
  std::ofstream file;
  std::ostream& out = open_output(opt, file);
  for (const auto& np : read_polytopes(opt.input, opt.format)) {
    require_reflexive(np);
    AmdOptions ao;
    ao.limit = opt.limit;
    ao.count_only = opt.count_only;
    ao.dedup_by_invariants = opt.dedup;
    ao.strict_all_edges = opt.strict;
    long long count = enumerate_amd(np.poly, ao, [&](const Amd& a) {
      json j = amd_json(a, verify_matching(np.poly, a));
      j["id"] = np.id;
      out << j << "\n";
      return true;
    });
    if (opt.count_only)
      out << json{{"id", np.id}, {"amd_count", count}} << "\n";
  }
  return 0;
}

int cmd_invariants(const Options& opt) {
  std::ofstream file;
  std::ostream& out = open_output(opt, file);
  for (const auto& np : read_polytopes(opt.input, opt.format)) {
    require_reflexive(np);
    AmdOptions ao;
    ao.limit = opt.limit;
    ao.dedup_by_invariants = opt.dedup;
    enumerate_amd(np.poly, ao, [&](const Amd& a) {
      json j = invariants_json(betti_numbers(np.poly, a));
      j["id"] = np.id;
      j["amd"] = amd_digest(a);
      out << j << "\n";
      return true;
    });
  }
  return 0;
}

int cmd_period(const Options& opt) {
  std::ofstream file;
  std::ostream& out = open_output(opt, file);
  for (const auto& np : read_polytopes(opt.input, opt.format)) {
    require_reflexive(np);
    // decomposition choices from the first amd
    AmdOptions ao;
    ao.limit = 1;
    std::vector<AdmissibleDecomposition> per_facet;
    enumerate_amd(np.poly, ao, [&](const Amd& a) {
      for (const auto& fc : a.choices) per_facet.push_back(fc.decomposition);
      return false;
    });
    if (per_facet.empty())
      throw input_error("polytope '" + np.id + "' admits no amd");
    LaurentPoly3 w = minkowski_polynomial(np.poly, per_facet);
    json cs = json::array();
    for (const auto& c : classical_period(w, opt.period_order))
      cs.push_back(bigint_json(c));
    out << json{{"id", np.id}, {"polynomial", poly_json(w)}, {"period", cs}}
        << "\n";
  }
  return 0;
}

int cmd_batch(const Options& opt) {
  if (opt.output.empty())
    throw input_error("batch requires --output for resumable JSONL");
  auto polys = read_polytopes(opt.input, opt.format.empty() ? "batch-json"
                                                            : opt.format);
  std::set<std::string> done;
  std::string ledger_path = opt.output + ".done";
  if (opt.resume) {
    std::ifstream led(ledger_path);
    std::string id;
    while (std::getline(led, id))
      if (!id.empty()) done.insert(id);
  }
  std::ofstream out(opt.output, opt.resume ? std::ios::app : std::ios::out);
  std::ofstream ledger(ledger_path,
                       opt.resume ? std::ios::app : std::ios::out);
  if (!out || !ledger)
    throw input_error("cannot open output/ledger at " + opt.output);

  std::mutex mtx;
  std::atomic<size_t> next{0};
  std::atomic<bool> internal_fault{false};

  auto worker = [&]() {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= polys.size()) return;
      const NamedPolytope& np = polys[i];
      {
        std::lock_guard<std::mutex> lk(mtx);
        if (done.count(np.id)) continue;
      }
      std::vector<json> lines;
      auto t0 = std::chrono::steady_clock::now();
      try {
        if (!is_reflexive(np.poly))
          throw input_error("not reflexive");
        AmdOptions ao;
        ao.limit = opt.limit;
        ao.dedup_by_invariants = opt.dedup;
        long long count = enumerate_amd(np.poly, ao, [&](const Amd& a) {
          json j = invariants_json(betti_numbers(np.poly, a));
          j["id"] = np.id;
          j["amd"] = amd_digest(a);
          lines.push_back(std::move(j));
          return true;
        });
        if (count == 0)
          lines.push_back({{"id", np.id}, {"amd_count", 0}});
      } catch (const invariant_error& e) {
        internal_fault = true;
        lines = {{{"id", np.id}, {"error", e.what()}, {"internal", true}}};
      } catch (const std::exception& e) {
        lines = {{{"id", np.id}, {"error", e.what()}}};
      }
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
      std::lock_guard<std::mutex> lk(mtx);
      for (auto& j : lines) {
        j["ms"] = ms;
        out << j << "\n";
      }
      out.flush();
      ledger << np.id << "\n";
      ledger.flush();
      done.insert(np.id);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < std::max(1, opt.jobs); ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return internal_fault ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"admissible Minkowski decomposition data for reflexive "
               "3-polytopes: decompositions, subdivisions, amd enumeration, "
               "smoothing invariants, and classical periods"};
  app.require_subcommand(1);

  Options opt;
  std::string command;
  for (const char* name : {"check", "decomps", "subdivs", "amd", "invariants",
                           "period", "batch"}) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--input", opt.input, "input file")->required();
    sub->add_option("--format", opt.format,
                    "text | json | batch-json (default: text; batch-json "
                    "for the batch command)");
    sub->add_option("--limit", opt.limit, "max amd per polytope (0 = all)");
    sub->add_option("--seed", opt.seed, "seed (output is deterministic)");
    sub->add_option("--jobs", opt.jobs, "worker threads (batch)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--period-order", opt.period_order,
                    "period coefficients to compute");
    sub->add_option("--output", opt.output, "output file (default stdout)");
    sub->add_flag("--dedup", opt.dedup, "dedup amd by invariant key");
    sub->add_flag("--resume", opt.resume, "resume a batch run");
    if (std::string(name) == "amd") {
      sub->add_flag("--count", opt.count_only, "count only");
      sub->add_flag("--strict", opt.strict, "match at every edge");
    }
    sub->callback([&command, name]() { command = name; });
  }
  if (std::string(app.get_name()).empty()) app.name("fano");

  CLI11_PARSE(app, argc, argv);

  try {
    if (command == "batch" && opt.format == "text") opt.format = "batch-json";
    if (command == "check") return cmd_check(opt);
    if (command == "decomps") return cmd_decomps(opt);
    if (command == "subdivs") return cmd_subdivs(opt);
    if (command == "amd") return cmd_amd(opt);
    if (command == "invariants") return cmd_invariants(opt);
    if (command == "period") return cmd_period(opt);
    if (command == "batch") return cmd_batch(opt);
    std::cerr << "unknown command\n";
    return 1;
  } catch (const invariant_error& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return 2;
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
