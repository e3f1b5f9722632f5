#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dpgit/report.hpp"

namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int run_batch(const std::string& command, const fs::path& dir, bool pretty) {
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".dp") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<int> codes(files.size(), 0);
  const long n = static_cast<long>(files.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < n; ++i) {
    dpgit::CommandOutcome out;
    try {
      out = dpgit::run_command(command, {}, slurp(files[i]));
    } catch (const std::exception& e) {
      out = dpgit::io_error(command, e.what());
    }
    codes[i] = out.exit_code;
    fs::path target = files[i];
    target.replace_extension("." + command + ".json");
    std::ofstream(target) << dpgit::render(out.report, pretty) << "\n";
  }
  nlohmann::json summary = nlohmann::json::array();
  int worst = 0;
  for (size_t i = 0; i < files.size(); ++i) {
    summary.push_back({{"file", files[i].filename().string()}, {"exit_code", codes[i]}});
    worst = std::max(worst, codes[i]);
  }
  std::cout << dpgit::render({{"schema_version", dpgit::kSchemaVersion}, {"command", command}, {"batch", summary}}, pretty)
            << "\n";
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dpgit: singularities and GIT stability of log del Pezzo surface models"};
  std::string command;
  std::vector<std::string> positional;
  bool pretty = false, compact = false;
  int truncation = 0;
  std::string batch;
  app.add_option("command", command, "one of: classify-singularities, git-stability, moduli-point, degenerate, tsing, hj, "
                                     "markov, menu, noether, catalog-verify")
      ->required();
  app.add_option("args", positional, "input FILE, or the command's arguments");
  app.add_flag("--json", compact, "compact JSON (default)");
  app.add_flag("--pretty", pretty, "indented JSON");
  app.add_option("--truncation", truncation, "starting series order for germ classification")->check(CLI::Range(4, 4096));
  app.add_option("--batch", batch, "process every .dp file in DIR, writing <file>.<command>.json beside it");
  CLI11_PARSE(app, argc, argv);

  const auto& names = dpgit::command_names();
  if (std::find(names.begin(), names.end(), command) == names.end()) {
    std::cerr << "unknown command '" << command << "'\n";
    return 1;
  }
  if (truncation > 0) setenv("DPGIT_TRUNCATION", std::to_string(truncation).c_str(), 1);

  if (!batch.empty()) {
    if (!dpgit::command_reads_file(command)) {
      std::cerr << "--batch applies to file commands only\n";
      return 1;
    }
    return run_batch(command, batch, pretty);
  }

  std::string text;
  if (dpgit::command_reads_file(command)) {
    if (positional.size() != 1) {
      std::cerr << command << " takes exactly one FILE ('-' for stdin)\n";
      return 1;
    }
    try {
      if (positional[0] == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        text = os.str();
      } else {
        text = slurp(positional[0]);
      }
    } catch (const std::exception& e) {
      std::cout << dpgit::render(dpgit::io_error(command, e.what()).report, pretty) << "\n";
      return 1;
    }
  }
  const dpgit::CommandOutcome out = dpgit::run_command(command, positional, text);
  std::cout << dpgit::render(out.report, pretty) << "\n";
  return out.exit_code;
}
