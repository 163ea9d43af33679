// bwc: contact structures on Boothby-Wang bundles over symplectic 4-manifolds.

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "bwc/cli.hpp"

int main(int argc, char** argv) {
  using bwc::cli::Command;
  using bwc::cli::OutputFormat;

  CLI::App app{"Classify prequantization bundles over symplectic 4-manifolds and compare their contact structures"};
  app.require_subcommand(1);

  bwc::cli::RunConfiguration config;
  std::vector<std::string> inputs;
  std::string format = "text";
  std::string output;
  std::string catalog;
  bwc::Integer r = 0, d = 0;

  const std::map<std::string, OutputFormat> formats{{"text", OutputFormat::Text}, {"json", OutputFormat::Json}};

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("-o,--output", output, "write the report to a file");
  };

  struct Entry {
    Command command;
    const char* name;
    const char* help;
  };
  const Entry entries[] = {
      {Command::Validate, "validate", "check a descriptor"},
      {Command::Classify, "classify", "Boothby-Wang total space, level, delta and d(K)"},
      {Command::Spectrum, "spectrum", "contact homology generators and degrees"},
      {Command::Compare, "compare", "compare the contact structures of two descriptors"},
      {Command::Counts, "counts", "bounds on the number of contact structures of a given level"},
      {Command::Catalog, "catalog", "print the geography catalog"},
      {Command::Selftest, "selftest", "run the built-in acceptance checks"},
  };
  std::map<CLI::App*, Command> by_app;
  for (const auto& e : entries) {
    auto* sub = app.add_subcommand(e.name, e.help);
    by_app[sub] = e.command;
    common(sub);
    switch (e.command) {
      case Command::Validate:
      case Command::Classify:
        sub->add_option("descriptor", inputs, "descriptor JSON")->required()->expected(1);
        break;
      case Command::Spectrum:
        sub->add_option("descriptor", inputs, "descriptor JSON")->required()->expected(1);
        sub->add_option("--k-max", config.k_max, "largest multiplicity listed")->check(CLI::PositiveNumber);
        break;
      case Command::Compare:
        sub->add_option("descriptors", inputs, "two descriptor JSON files")->required()->expected(2);
        sub->add_option("--k-max", config.k_max, "largest multiplicity used for the witness")
            ->check(CLI::PositiveNumber);
        break;
      case Command::Counts:
        sub->add_option("descriptor", inputs, "descriptor JSON (uses b2 and its level)")->expected(0, 1);
        sub->add_option("--r", r, "second Betti number of the base")->check(CLI::PositiveNumber);
        sub->add_option("--d", d, "level")->check(CLI::NonNegativeNumber);
        sub->add_option("--catalog", catalog, "geography catalog JSON");
        break;
      case Command::Catalog:
        sub->add_option("--catalog", catalog, "geography catalog JSON");
        break;
      case Command::Selftest:
        break;
    }
  }

  CLI11_PARSE(app, argc, argv);

  for (const auto& [sub, command] : by_app) {
    if (sub->parsed()) {
      config.command = command;
      if (auto* o = sub->get_option_no_throw("--r"); o && o->count() > 0) config.r = r;
      if (auto* o = sub->get_option_no_throw("--d"); o && o->count() > 0) config.d = d;
    }
  }
  config.input_paths.assign(inputs.begin(), inputs.end());
  config.output_format = formats.at(format);
  if (!output.empty()) config.output_path = output;
  if (!catalog.empty()) config.catalog_path = catalog;

  return bwc::cli::run(config, std::cout, std::cerr);
}
