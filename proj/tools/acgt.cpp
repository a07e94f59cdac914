// acgt: command-line front end for the portal and the graph tools.
//
// Exit codes: 0 success, 1 domain error, 2 usage error.

#include <csignal>
#include <cstdlib>
#include <iostream>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>

#include "acgt/distance.hpp"
#include "acgt/edge_list.hpp"
#include "acgt/families.hpp"
#include "acgt/odd_wiener.hpp"
#include "acgt/spanning_trees.hpp"
#include "acgt/content/fielded.hpp"
#include "acgt/content/validate.hpp"
#include "acgt/service/api.hpp"
#include "acgt/service/http_server.hpp"
#include "acgt/service/store.hpp"
#include "acgt/workflow/plan.hpp"

namespace {

using namespace acgt;

std::string env_or(const char* name, std::string fallback) {
  const char* v = std::getenv(name);
  return v && *v ? std::string(v) : fallback;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  return service::read_file(path);
}

FamilySpec spec_from_args(const std::string& family, const std::vector<std::string>& params) {
  std::string joined;
  for (const auto& p : params) {
    if (!joined.empty()) joined += ',';
    joined += p;
  }
  FamilySpec spec{parse_family(family), joined.empty() ? std::vector<std::int64_t>{} : parse_params(joined)};
  validate(spec);
  return spec;
}

service::Authenticator make_auth(const std::string& mode, const std::filesystem::path& data_dir,
                                 const workflow::PortalState& state) {
  if (mode == "dev") return service::Authenticator::dev({state.course.id});
  if (mode == "static") return service::Authenticator::static_tokens(service::read_file(data_dir / "tokens.tsv"));
  throw Error(Errc::invalid_parameter, "AUTH_MODE must be 'static' or 'dev'");
}

void on_signal(int) { service::stop_server(); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"A-CGT portal and graph tools"};
  app.require_subcommand(1);
  std::string data_dir = env_or("DATA_DIR", "./data");
  app.add_option("--data-dir", data_dir, "Portal data directory (env DATA_DIR)");

  auto* serve = app.add_subcommand("serve", "Run the HTTP API");
  int port = std::atoi(env_or("PORT", "8080").c_str());
  std::string auth_mode = env_or("AUTH_MODE", "static");
  std::string host = "0.0.0.0";
  serve->add_option("--port", port, "Listen port (env PORT)");
  serve->add_option("--host", host, "Listen address");
  serve->add_option("--auth-mode", auth_mode, "static or dev (env AUTH_MODE)");

  auto* seed = app.add_subcommand("seed", "Load the seed pages, corpus, syllabus and course");
  bool force = false;
  seed->add_flag("--force", force, "Replace existing data");

  auto* gen = app.add_subcommand("gen", "Print a family instance as an edge list");
  std::string family;
  std::vector<std::string> params;
  gen->add_option("family", family, "Family name")->required();
  gen->add_option("params", params, "Parameters");

  auto* wien = app.add_subcommand("wiener", "Wiener index of an edge-list file ('-' for stdin)");
  std::string edge_file;
  wien->add_option("file", edge_file, "Edge-list file")->required();

  auto* census = app.add_subcommand("census", "Spanning trees up to isomorphism");
  census->add_option("family", family, "Family name")->required();
  census->add_option("params", params, "Parameters");

  auto* verify = app.add_subcommand("verify-a136328", "Check the odd-graph Wiener sequence");
  std::int64_t max_n = 17;
  bool no_brute = false;
  verify->add_option("--max-n", max_n, "Last index")->check(CLI::Range(1, 17));
  verify->add_flag("--no-brute-force", no_brute, "Skip BFS on generated odd graphs");

  auto* exp = app.add_subcommand("export", "Print a page in fielded format");
  std::string page_id;
  exp->add_option("page-id", page_id, "Page id")->required();

  auto* imp = app.add_subcommand("import", "Import or replace a page from a fielded file");
  std::string page_file;
  imp->add_option("file", page_file, "Fielded page file ('-' for stdin)")->required();

  auto* roster = app.add_subcommand("roster", "Import a roster file");
  std::string roster_file;
  roster->add_option("file", roster_file, "Roster file")->required();

  auto* plan = app.add_subcommand("plan", "Exercise mix for a class");
  std::string pcts;
  std::uint64_t total = 0;
  plan->add_option("--pcts", pcts, "Group shares g1,g2,g3 (percent or fractions)")->required();
  plan->add_option("--total", total, "Number of exercises")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return 2;
  }

  auto now = [] {
    return std::chrono::duration_cast<std::chrono::seconds>(std::chrono::system_clock::now().time_since_epoch())
        .count();
  };

  try {
    if (*gen) {
      std::cout << write_edge_list(generate(spec_from_args(family, params)));
    } else if (*wien) {
      auto g = read_edge_list(read_input(edge_file));
      if (g.weighted())
        std::cout << to_string(weighted_wiener(g)) << "\n";
      else
        std::cout << wiener(g).str() << "\n";
    } else if (*census) {
      auto g = generate(spec_from_args(family, params));
      auto classes = spanning_tree_census(g);
      BigInt sum = 0;
      std::cout << "class\tmultiplicity\twiener\tdegrees\n";
      for (std::size_t i = 0; i < classes.size(); ++i) {
        const auto& t = classes[i].representative;
        std::vector<std::size_t> deg;
        for (Vertex v = 0; v < t.order(); ++v) deg.push_back(t.degree(v));
        std::sort(deg.rbegin(), deg.rend());
        std::string degs;
        for (auto d : deg) degs += (degs.empty() ? "" : ",") + std::to_string(d);
        std::cout << i + 1 << '\t' << classes[i].multiplicity.str() << '\t' << classes[i].wiener.str() << '\t'
                  << degs << '\n';
        sum += classes[i].multiplicity;
      }
      std::cout << "total\t" << sum.str() << "\tmatrix-tree\t" << spanning_tree_count(g).str() << '\n';
    } else if (*verify) {
      auto report = verify_a136328(max_n, !no_brute);
      std::cout << report.to_table();
      return report.all_pass() ? 0 : 1;
    } else if (*plan) {
      std::cout << workflow::plan_exercises(workflow::parse_group_shares(pcts), total).to_table();
    } else if (*seed) {
      service::Store store(data_dir);
      if (!store.empty() && !force)
        throw Error(Errc::conflict, data_dir + " already holds portal data (use --force)");
      store.reset(workflow::seeded_state());
      std::cout << "seeded " << store.snapshot()->pages.size() << " pages into " << data_dir << "\n";
    } else if (*exp) {
      service::Store store(data_dir);
      auto snap = store.snapshot();
      if (!content::PageId::valid(page_id)) throw Error(Errc::unknown_page, "no page " + page_id);
      auto it = snap->pages.find(content::PageId::parse(page_id));
      if (it == snap->pages.end()) throw Error(Errc::unknown_page, "no page " + page_id);
      std::cout << content::export_page(it->second);
    } else if (*imp) {
      auto page = content::import_page(read_input(page_file));
      service::Store store(data_dir);
      store.mutate([&](workflow::PortalState& s) {
        auto report = content::validate_page(page, s.corpus, s.pages);
        if (!report.ok()) throw Error(Errc::validation_failed, report.summary());
        s.pages[page.id] = page;
      });
      std::cout << "imported " << page.id.str() << "\n";
    } else if (*roster) {
      auto text = read_input(roster_file);
      if (!service::valid_utf8(text)) throw Error(Errc::invalid_parameter, "roster must be UTF-8");
      auto lines = workflow::parse_roster(text);
      service::Store store(data_dir);
      std::size_t before = store.snapshot()->notices.size();
      store.mutate([&](workflow::PortalState& s) { workflow::import_roster(s, lines, now()); });
      auto snap = store.snapshot();
      std::cout << "imported " << lines.size() << " students\n";
      for (std::size_t i = before; i < snap->notices.size(); ++i) {
        const auto& n = snap->notices[i];
        auto group = [](const std::optional<int>& g) { return g ? std::to_string(*g) : std::string("-"); };
        std::cout << "group change: " << n.student_id << " " << group(n.from) << " -> " << group(n.to) << "\n";
      }
    } else if (*serve) {
      service::Store store(data_dir);
      auto api = service::Api(store, make_auth(auth_mode, data_dir, *store.snapshot()));
      std::signal(SIGINT, on_signal);
      std::signal(SIGTERM, on_signal);
      service::ServerOptions opts;
      opts.host = host;
      opts.port = port;
      service::run_server(api, opts, [&](int bound) {
        std::cerr << "listening on " << host << ":" << bound << " (data " << data_dir << ", auth " << auth_mode
                  << ")\n";
      });
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
