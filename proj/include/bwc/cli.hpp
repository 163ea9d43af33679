#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bwc/io.hpp"

namespace bwc::cli {

enum class Command { Validate, Classify, Spectrum, Compare, Counts, Catalog, Selftest };
enum class OutputFormat { Text, Json };

std::string_view to_string(Command c);

struct RunConfiguration {
  Command command = Command::Classify;
  std::vector<std::filesystem::path> input_paths;
  Integer k_max = 50;
  OutputFormat output_format = OutputFormat::Text;
  std::optional<std::filesystem::path> output_path;
  std::optional<std::filesystem::path> catalog_path;
  // counts: explicit (r, d) instead of a descriptor
  std::optional<Integer> r;
  std::optional<Integer> d;
};

/// Throws Error(Usage) when the command and its inputs do not fit together.
void check(const RunConfiguration& config);

struct NamedContact {
  std::string name;
  FiveManifoldContact contact;

  bool operator==(const NamedContact&) const = default;
};

struct ComparisonOutput {
  NamedContact first;
  NamedContact second;
  bool diffeomorphic = false;
  bool almost_contact = false;
  IsomorphismReport contact_homology;
  std::string verdict;
  std::string narrative;

  bool operator==(const ComparisonOutput&) const = default;
};

/// Classifies both descriptors and compares their contact structures.
ComparisonOutput compare(const SymplecticFourManifoldDescriptor& a, const SymplecticFourManifoldDescriptor& b,
                         Integer k_max);

io::Json to_json(const ComparisonOutput& c);
ComparisonOutput comparison_from_json(const io::Json& j);
std::string render_text(const ComparisonOutput& c);

/// Wraps a command payload into the versioned top-level document.
io::Json envelope(Command command, io::Json payload);

/// Executes one command. Reports go to `out` (or the output path), a single
/// "error: <code>: <message>" line goes to `err` on failure. Returns the
/// process exit status.
int run(const RunConfiguration& config, std::ostream& out, std::ostream& err);

}  // namespace bwc::cli
