#pragma once

// JSON and text serialization of descriptors, catalogs and reports.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "bwc/algebra.hpp"
#include "bwc/geography.hpp"
#include "bwc/isomorphism.hpp"
#include "bwc/manifolds.hpp"

namespace bwc::io {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& contents);

/// Parses a document, reporting syntax errors as MalformedInput.
Json parse_json(const std::string& text, const std::string& origin);

/// Field-level checks only; semantic invariants are left to validate().
SymplecticFourManifoldDescriptor descriptor_from_json(const Json& j);
Json to_json(const SymplecticFourManifoldDescriptor& m);
SymplecticFourManifoldDescriptor load_descriptor(const std::filesystem::path& path);

Json to_json(const FiveManifoldContact& x);
FiveManifoldContact contact_from_json(const Json& j);

Json to_json(const ResidueClassTable& t);
ResidueClassTable residue_table_from_json(const Json& j);

Json to_json(const DegreeSpectrum& s);
DegreeSpectrum spectrum_from_json(const Json& j);

Json to_json(const IsomorphismReport& r);
IsomorphismReport isomorphism_report_from_json(const Json& j);

Json to_json(const GeographyEntry& e);
GeographyEntry geography_entry_from_json(const Json& j);

Json to_json(const CountReport& r);
CountReport count_report_from_json(const Json& j);

Json to_json(const FamilyRule& rule);
FamilyRule family_rule_from_json(const Json& j);
Json catalog_to_json(const Catalog& c);
Catalog catalog_from_json(const Json& j);
Catalog load_catalog(const std::filesystem::path& path);

std::string to_text(ResidueStatus s);
std::string render_text(const SymplecticFourManifoldDescriptor& m);
std::string render_text(const FiveManifoldContact& x);
std::string render_text(const DegreeSpectrum& s);
std::string render_text(const IsomorphismReport& r);
std::string render_text(const CountReport& r);
std::string render_text(const Catalog& c);

}  // namespace bwc::io
