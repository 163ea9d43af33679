#include "bwc/cli.hpp"

#include <ostream>
#include <sstream>

#include "bwc/selftest.hpp"

namespace bwc::cli {

std::string_view to_string(Command c) {
  switch (c) {
    case Command::Validate: return "validate";
    case Command::Classify: return "classify";
    case Command::Spectrum: return "spectrum";
    case Command::Compare: return "compare";
    case Command::Counts: return "counts";
    case Command::Catalog: return "catalog";
    case Command::Selftest: return "selftest";
  }
  return "unknown";
}

void check(const RunConfiguration& config) {
  const auto inputs = config.input_paths.size();
  auto usage = [&](const std::string& what) {
    throw Error(ErrorCode::Usage, std::string(to_string(config.command)) + ": " + what);
  };
  switch (config.command) {
    case Command::Validate:
    case Command::Classify:
    case Command::Spectrum:
      if (inputs != 1) usage("expects exactly one descriptor");
      break;
    case Command::Compare:
      if (inputs != 2) usage("expects exactly two descriptors");
      break;
    case Command::Counts:
      if (inputs == 0 && !(config.r && config.d)) usage("expects a descriptor or both --r and --d");
      if (inputs > 1) usage("expects at most one descriptor");
      if (inputs == 1 && (config.r || config.d)) usage("--r/--d cannot be combined with a descriptor");
      break;
    case Command::Catalog:
    case Command::Selftest:
      if (inputs != 0) usage("takes no descriptors");
      break;
  }
  if (config.k_max < 1) usage("--k-max must be positive");
}

// ---- comparison ------------------------------------------------------------

namespace {

std::string comparison_verdict(const ComparisonOutput& c) {
  const auto& r = c.contact_homology;
  if (!c.diffeomorphic) return "not diffeomorphic";
  if (!c.almost_contact) return "inequivalent as almost contact structures (different levels)";
  std::string v = "equivalent as almost contact structures, ";
  if (r.decision == Decision::Isomorphic) return v + "isomorphic contact homology";
  v += "inequivalent contact homology";
  if (r.distinguisher_b) v += ", distinguisher b=" + std::to_string(*r.distinguisher_b);
  if (r.distinguisher_lowest) {
    v += ", distinguisher lowest degrees " + std::to_string(r.distinguisher_lowest->first) + " vs " +
         std::to_string(r.distinguisher_lowest->second);
  }
  return v;
}

std::string comparison_narrative(const ComparisonOutput& c) {
  const auto& r = c.contact_homology;
  if (!c.diffeomorphic) return "the Boothby-Wang total spaces are different 5-manifolds";
  if (!c.almost_contact) return "different levels: trivially inequivalent as almost contact structures";
  if (r.decision == Decision::NotIsomorphic) {
    return "inequivalent contact structures in the same equivalence class of almost contact structures";
  }
  if (r.level == 0) return "level 0 with equal d(K): contact homology does not distinguish the structures";
  return "equal level and contact homology: the structures are not distinguished by this invariant";
}

}  // namespace

ComparisonOutput compare(const SymplecticFourManifoldDescriptor& a, const SymplecticFourManifoldDescriptor& b,
                         Integer k_max) {
  ComparisonOutput out;
  out.first = {a.name, boothby_wang(a)};
  out.second = {b.name, boothby_wang(b)};
  const auto& x = out.first.contact;
  const auto& y = out.second.contact;
  out.diffeomorphic = diffeomorphic(x, y);
  out.almost_contact = almost_contact_equivalent(x, y);

  if (!out.almost_contact) {
    IsomorphismReport r;
    r.level = x.level;
    r.dK = x.dK;
    r.dK_prime = y.dK;
    r.decision = Decision::NotIsomorphic;
    r.decision_case = out.diffeomorphic ? DecisionCase::LevelsDiffer : DecisionCase::ManifoldsDiffer;
    out.contact_homology = r;
  } else {
    out.contact_homology = decide(x.level, x.dK, y.dK);
    if (out.contact_homology.decision == Decision::Isomorphic) {
      const Integer b2M = x.b2_X + 1;
      out.contact_homology = build_witness(spectrum(x, b2M, k_max), spectrum(y, b2M, k_max), k_max);
    }
  }
  out.verdict = comparison_verdict(out);
  out.narrative = comparison_narrative(out);
  return out;
}

io::Json to_json(const ComparisonOutput& c) {
  auto named = [](const NamedContact& n) { return io::Json{{"name", n.name}, {"contact", io::to_json(n.contact)}}; };
  return io::Json{{"first", named(c.first)},
                  {"second", named(c.second)},
                  {"diffeomorphic", c.diffeomorphic},
                  {"almost_contact", c.almost_contact},
                  {"verdict", c.verdict},
                  {"narrative", c.narrative},
                  {"contact_homology", io::to_json(c.contact_homology)}};
}

ComparisonOutput comparison_from_json(const io::Json& j) {
  auto need = [&j](const char* key) -> const io::Json& {
    if (!j.is_object() || !j.contains(key)) {
      throw Error(ErrorCode::MalformedInput, std::string("comparison.") + key + ": missing field");
    }
    return j.at(key);
  };
  auto named = [](const io::Json& n, const char* which) {
    if (!n.is_object() || !n.contains("name") || !n.at("name").is_string() || !n.contains("contact")) {
      throw Error(ErrorCode::MalformedInput, std::string("comparison.") + which + ": expected {name, contact}");
    }
    return NamedContact{n.at("name").get<std::string>(), io::contact_from_json(n.at("contact"))};
  };
  auto flag = [&need](const char* key) {
    const auto& v = need(key);
    if (!v.is_boolean()) throw Error(ErrorCode::MalformedInput, std::string("comparison.") + key + ": expected a boolean");
    return v.get<bool>();
  };
  auto text = [&need](const char* key) {
    const auto& v = need(key);
    if (!v.is_string()) throw Error(ErrorCode::MalformedInput, std::string("comparison.") + key + ": expected a string");
    return v.get<std::string>();
  };
  ComparisonOutput c;
  c.first = named(need("first"), "first");
  c.second = named(need("second"), "second");
  c.diffeomorphic = flag("diffeomorphic");
  c.almost_contact = flag("almost_contact");
  c.verdict = text("verdict");
  c.narrative = text("narrative");
  c.contact_homology = io::isomorphism_report_from_json(need("contact_homology"));
  return c;
}

std::string render_text(const ComparisonOutput& c) {
  std::ostringstream os;
  auto line = [&os](const char* label, const NamedContact& n) {
    os << label << n.name << ": " << n.contact.barden_name << ", level " << n.contact.level << ", d(K)="
       << n.contact.dK << "\n";
  };
  line("first:  ", c.first);
  line("second: ", c.second);
  os << "diffeomorphic: " << (c.diffeomorphic ? "yes" : "no") << "\n"
     << "almost contact equivalent: " << (c.almost_contact ? "yes" : "no") << "\n"
     << "verdict: " << c.verdict << "\n";
  if (c.almost_contact) os << io::render_text(c.contact_homology);
  os << "narrative: " << c.narrative << "\n";
  return os.str();
}

io::Json envelope(Command command, io::Json payload) {
  io::Json doc{{"format_version", io::kFormatVersion}, {"command", to_string(command)}};
  for (auto& [key, value] : payload.items()) doc[key] = value;
  return doc;
}

// ---- dispatch --------------------------------------------------------------

namespace {

struct Emitted {
  io::Json json;
  std::string text;
  bool ok = true;
};

SymplecticFourManifoldDescriptor load_valid(const std::filesystem::path& p) {
  auto m = io::load_descriptor(p);
  validate(m);
  return m;
}

Emitted execute(const RunConfiguration& config) {
  const auto catalog = config.catalog_path ? io::load_catalog(*config.catalog_path) : Catalog::builtin();
  switch (config.command) {
    case Command::Validate: {
      const auto m = load_valid(config.input_paths[0]);
      return {io::Json{{"descriptor", io::to_json(m)}, {"valid", true}}, io::render_text(m)};
    }
    case Command::Classify: {
      const auto m = load_valid(config.input_paths[0]);
      const auto x = boothby_wang(m);
      return {io::Json{{"descriptor", m.name}, {"contact", io::to_json(x)}},
              "descriptor:  " + m.name + "\n" + io::render_text(x)};
    }
    case Command::Spectrum: {
      const auto m = load_valid(config.input_paths[0]);
      const auto s = spectrum(boothby_wang(m), m.b2, config.k_max);
      return {io::Json{{"descriptor", m.name}, {"spectrum", io::to_json(s)}},
              "descriptor: " + m.name + "\n" + io::render_text(s)};
    }
    case Command::Compare: {
      const auto a = load_valid(config.input_paths[0]);
      const auto b = load_valid(config.input_paths[1]);
      const auto c = compare(a, b, config.k_max);
      return {io::Json{{"comparison", to_json(c)}}, render_text(c)};
    }
    case Command::Counts: {
      Integer r = 0, d = 0;
      if (config.input_paths.empty()) {
        r = *config.r;
        d = *config.d;
      } else {
        const auto m = load_valid(config.input_paths[0]);
        r = m.b2;
        d = boothby_wang(m).level;
      }
      const auto rep = contact_count_report(r, d, catalog);
      return {io::Json{{"report", io::to_json(rep)}}, io::render_text(rep)};
    }
    case Command::Catalog:
      return {io::Json{{"catalog", io::catalog_to_json(catalog)}}, io::render_text(catalog)};
    case Command::Selftest: {
      Emitted e;
      io::Json criteria = io::Json::array();
      for (const auto& r : selftest::run_all()) {
        e.ok = e.ok && r.passed;
        e.text += selftest::format_line(r) + "\n";
        criteria.push_back(io::Json{{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
      }
      e.json = io::Json{{"criteria", criteria}, {"passed", e.ok}};
      return e;
    }
  }
  throw Error(ErrorCode::Usage, "unknown command");
}

}  // namespace

int run(const RunConfiguration& config, std::ostream& out, std::ostream& err) {
  try {
    check(config);
    const Emitted e = execute(config);
    const std::string body = config.output_format == OutputFormat::Json
                                 ? envelope(config.command, e.json).dump(2) + "\n"
                                 : e.text;
    if (config.output_path) {
      io::write_file(*config.output_path, body);
    } else {
      out << body;
    }
    if (!e.ok) {
      err << "error: " << bwc::to_string(ErrorCode::InternalConsistency) << ": selftest failed\n";
      return 1;
    }
    return 0;
  } catch (const Error& e) {
    err << "error: " << bwc::to_string(e.code()) << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace bwc::cli
