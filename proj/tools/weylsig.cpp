// Command-line front end. Builds a request and hands it to the C API.
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "weylsig/weylsig.h"

int main(int argc, char** argv) {
  CLI::App app{"Sign signatures of Weyl group representations", "weylsig"};
  app.set_version_flag("--version", weylsig_version());

  std::string command;
  std::vector<std::string> args;
  std::string format = "json";
  bool generalized = false;
  int cap = -1;
  int parallel = 1;
  std::string to, type;
  bool envelope = false;

  app.add_option("command", command,
                 "kostka | lr | sig | recover | decompose | branch | table | wcell | oracle-check")
      ->required();
  // Arguments are collected as extras: a vector option would split "[2,1]" into a list.
  app.allow_extras();
  app.add_option("--format", format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
  app.add_flag("--generalized", generalized, "Type B: include generalized parabolics");
  app.add_option("--n", cap, "Rank cap; for oracle-check the largest rank swept");
  app.add_option("--parallel", parallel, "Worker threads for table, wcell and oracle-check");
  app.add_option("--to", to, "Branch target: aa:<k>, bb:<k>, dd:<k> or sn");
  app.add_option("--type", type, "Group type for wcell (G2, A<n>, B<n>, D<n>) or oracle-check (A, B, D)");
  app.add_flag("--envelope", envelope, "Wrap the result with command, version and status");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  args = app.remaining();
  for (const auto& a : args)
    if (a.rfind("--", 0) == 0) {
      std::cerr << "weylsig: unknown option " << a << "\n";
      return 2;
    }

  nlohmann::ordered_json req = {{"command", command}, {"args", args}, {"format", format}};
  if (generalized) req["generalized"] = true;
  if (cap >= 0) req["n"] = cap;
  if (parallel != 1) req["parallel"] = parallel;
  if (!to.empty()) req["to"] = to;
  if (!type.empty()) req["type"] = type;
  if (envelope) req["envelope"] = true;

  const char* cache_dir = std::getenv("WEYLSIG_CACHE_DIR");
  weylsig_ctx* ctx = weylsig_open(cache_dir);
  if (!ctx) {
    std::cerr << "weylsig: cannot initialize\n";
    return 3;
  }
  char* out = nullptr;
  int status = weylsig_run(ctx, req.dump().c_str(), &out);
  if (out) {
    std::fputs(out, stdout);
    weylsig_free(out);
  } else {
    std::cerr << "weylsig: " << weylsig_last_error(ctx) << "\n";
  }
  weylsig_close(ctx);
  return status;
}
