#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rescal/cli.hpp"

namespace {

rescal::cli::Json read_payload(const std::string& input_path) {
  std::string text;
  if (input_path.empty() || input_path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(input_path);
    if (!in) {
      std::cerr << "cannot open " << input_path << "\n";
      std::exit(2);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  return rescal::cli::Json::parse(text);
}

void emit(const rescal::cli::Outcome& out, const std::string& format) {
  if (format == "table")
    std::cout << out.table;
  else
    std::cout << rescal::cli::dump_report(out.report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact rescaling calculus for graded algebras, Lie algebras, links and "
               "arrangements"};
  app.require_subcommand(1);

  rescal::cli::Options opt;
  std::string input_path, format = "json";

  std::vector<CLI::App*> subs;
  for (const std::string& name : rescal::cli::command_names()) {
    CLI::App* sub = app.add_subcommand(name, "");
    sub->add_option("--input", input_path, "JSON problem file (default: stdin)");
    sub->add_option("--truncate", opt.truncate, "truncation order (default 12)");
    sub->add_option("--k", opt.k, "rescaling parameter (default 1)");
    sub->add_option("--format", format, "json|table");
    if (name == "koszul-test") {
      sub->add_option("--mode", opt.mode, "series|quillen|ce|all");
      sub->add_option("--pmax", opt.p_max, "exterior-degree cutoff for the ce mode");
      sub->add_option("--wmax", opt.weight_max, "weight cutoff for the ce mode");
    }
    subs.push_back(sub);
  }

  CLI::App* bundled = app.add_subcommand("bundled", "run or list the shipped example suite");
  bool list_only = false;
  std::string bundled_name;
  bundled->add_flag("--list", list_only, "list example names");
  bundled->add_option("name", bundled_name, "example to run");
  bundled->add_option("--format", format, "json|table");

  CLI11_PARSE(app, argc, argv);

  try {
    if (bundled->parsed()) {
      if (list_only || bundled_name.empty()) {
        for (const auto& ex : rescal::cli::bundled_examples())
          std::cout << ex.name << "  (" << ex.command << ")\n";
        return 0;
      }
      rescal::cli::Outcome out = rescal::cli::run_bundled(bundled_name);
      emit(out, format);
      return out.exit_code;
    }
    for (std::size_t i = 0; i < subs.size(); ++i) {
      if (subs[i]->parsed()) {
        rescal::cli::Json payload = read_payload(input_path);
        rescal::cli::Outcome out =
            rescal::cli::run_problem(rescal::cli::command_names()[i], payload, opt);
        emit(out, format);
        return out.exit_code;
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
