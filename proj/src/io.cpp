#include "bwc/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace bwc::io {

namespace {

[[noreturn]] void malformed(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::MalformedInput, where + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& ctx) {
  if (!j.is_object()) malformed(ctx, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) malformed(ctx + "." + key, "missing field");
  return *it;
}

Integer as_int(const Json& v, const std::string& where) {
  if (v.is_number_integer() && !v.is_number_unsigned()) return v.get<Integer>();
  if (v.is_number_unsigned()) {
    const auto u = v.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(std::numeric_limits<Integer>::max())) malformed(where, "integer out of range");
    return static_cast<Integer>(u);
  }
  malformed(where, "expected an integer");
}

Integer get_int(const Json& j, const char* key, const std::string& ctx) {
  return as_int(field(j, key, ctx), ctx + "." + key);
}

bool get_bool(const Json& j, const char* key, const std::string& ctx) {
  const Json& v = field(j, key, ctx);
  if (!v.is_boolean()) malformed(ctx + "." + key, "expected a boolean");
  return v.get<bool>();
}

std::string get_string(const Json& j, const char* key, const std::string& ctx) {
  const Json& v = field(j, key, ctx);
  if (!v.is_string()) malformed(ctx + "." + key, "expected a string");
  return v.get<std::string>();
}

std::vector<Integer> get_int_list(const Json& j, const char* key, const std::string& ctx) {
  const Json& v = field(j, key, ctx);
  const std::string where = ctx + "." + key;
  if (!v.is_array()) malformed(where, "expected an array of integers");
  std::vector<Integer> out;
  out.reserve(v.size());
  for (std::size_t n = 0; n < v.size(); ++n) out.push_back(as_int(v[n], where + "[" + std::to_string(n) + "]"));
  return out;
}

template <typename T>
std::optional<T> get_optional(const Json& j, const char* key, const std::string& ctx,
                              T (*convert)(const Json&, const std::string&)) {
  const Json& v = field(j, key, ctx);
  if (v.is_null()) return std::nullopt;
  return convert(v, ctx + "." + key);
}

Json int_list(const CovectorZ& c) {
  Json a = Json::array();
  for (Eigen::Index j = 0; j < c.size(); ++j) a.push_back(c(j));
  return a;
}

CovectorZ to_covector(const std::vector<Integer>& v) {
  CovectorZ c(static_cast<Eigen::Index>(v.size()));
  for (std::size_t n = 0; n < v.size(); ++n) c(static_cast<Eigen::Index>(n)) = v[n];
  return c;
}

Json index_json(const GeneratorIndex& g) { return Json::array({g.k, g.i}); }

GeneratorIndex index_from_json(const Json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 2) malformed(where, "expected [k, i]");
  return {as_int(v[0], where + "[0]"), as_int(v[1], where + "[1]")};
}

std::vector<GeneratorIndex> index_list(const Json& j, const char* key, const std::string& ctx) {
  const Json& v = field(j, key, ctx);
  if (!v.is_array()) malformed(ctx + "." + key, "expected an array");
  std::vector<GeneratorIndex> out;
  for (std::size_t n = 0; n < v.size(); ++n) out.push_back(index_from_json(v[n], ctx + "." + key));
  return out;
}

Json index_list_json(const std::vector<GeneratorIndex>& v) {
  Json a = Json::array();
  for (const auto& g : v) a.push_back(index_json(g));
  return a;
}

template <typename E>
E enum_from(const Json& j, const char* key, const std::string& ctx,
            std::initializer_list<std::pair<std::string_view, E>> options) {
  const std::string s = get_string(j, key, ctx);
  for (const auto& [name, value] : options)
    if (name == s) return value;
  malformed(ctx + "." + key, "unknown value '" + s + "'");
}

std::string join(const std::vector<Integer>& v, const char* sep = ", ") {
  std::ostringstream os;
  for (std::size_t n = 0; n < v.size(); ++n) os << (n ? sep : "") << v[n];
  return os.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
  out << contents;
  if (!out) throw Error(ErrorCode::Io, "write failed for " + path.string());
}

Json parse_json(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    malformed(origin, std::string("invalid JSON (") + e.what() + ")");
  }
}

// ---- descriptors -----------------------------------------------------------

SymplecticFourManifoldDescriptor descriptor_from_json(const Json& j) {
  const std::string ctx = "descriptor";
  SymplecticFourManifoldDescriptor m;
  m.name = get_string(j, "name", ctx);
  m.b2 = get_int(j, "b2", ctx);
  m.b2_plus = get_int(j, "b2_plus", ctx);
  const auto c1 = get_int_list(j, "c1", ctx);
  const auto omega = get_int_list(j, "omega", ctx);
  if (static_cast<Integer>(c1.size()) != m.b2) {
    malformed(ctx + ".c1", "expected " + std::to_string(m.b2) + " entries, got " + std::to_string(c1.size()));
  }
  if (static_cast<Integer>(omega.size()) != m.b2) {
    malformed(ctx + ".omega",
              "expected " + std::to_string(m.b2) + " entries, got " + std::to_string(omega.size()));
  }
  m.c1 = to_covector(c1);
  m.omega = to_covector(omega);
  m.spin = get_bool(j, "spin", ctx);
  return m;
}

Json to_json(const SymplecticFourManifoldDescriptor& m) {
  return Json{{"name", m.name}, {"b2", m.b2},         {"b2_plus", m.b2_plus},
              {"c1", int_list(m.c1)}, {"omega", int_list(m.omega)}, {"spin", m.spin}};
}

SymplecticFourManifoldDescriptor load_descriptor(const std::filesystem::path& path) {
  try {
    return descriptor_from_json(parse_json(read_file(path), path.string()));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::MalformedInput) throw;
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

// ---- contact structures ----------------------------------------------------

Json to_json(const FiveManifoldContact& x) {
  return Json{{"b2_X", x.b2_X}, {"spin_X", x.spin_X}, {"level", x.level},
              {"delta", x.delta}, {"dK", x.dK},       {"barden_name", x.barden_name}};
}

FiveManifoldContact contact_from_json(const Json& j) {
  const std::string ctx = "contact";
  return {get_int(j, "b2_X", ctx), get_bool(j, "spin_X", ctx), get_int(j, "level", ctx),
          get_int(j, "delta", ctx), get_int(j, "dK", ctx),     get_string(j, "barden_name", ctx)};
}

// ---- spectra ---------------------------------------------------------------

std::string to_text(ResidueStatus s) { return s == ResidueStatus::Empty ? "empty" : "infinite"; }

Json to_json(const ResidueClassTable& t) {
  Json status = Json::array();
  for (auto s : t.status) status.push_back(to_text(s));
  return Json{{"level", t.level}, {"dK", t.dK}, {"status", status}};
}

ResidueClassTable residue_table_from_json(const Json& j) {
  const std::string ctx = "residues";
  ResidueClassTable t{get_int(j, "level", ctx), get_int(j, "dK", ctx), {}};
  const Json& st = field(j, "status", ctx);
  if (!st.is_array()) malformed(ctx + ".status", "expected an array");
  for (const auto& s : st) {
    if (s == "empty") t.status.push_back(ResidueStatus::Empty);
    else if (s == "infinite") t.status.push_back(ResidueStatus::Infinite);
    else malformed(ctx + ".status", "expected 'empty' or 'infinite'");
  }
  return t;
}

Json to_json(const DegreeSpectrum& s) {
  Json q = Json::array();
  for (const auto& g : s.q_degrees) q.push_back(Json::array({g.index.k, g.index.i, g.degree}));
  return Json{{"level", s.level},
              {"delta", s.delta},
              {"a", s.a},
              {"k_max", s.k_max},
              {"q_degrees", q},
              {"z_degrees", s.z_degrees},
              {"residues", s.residues ? to_json(*s.residues) : Json(nullptr)}};
}

DegreeSpectrum spectrum_from_json(const Json& j) {
  const std::string ctx = "spectrum";
  DegreeSpectrum s;
  s.level = get_int(j, "level", ctx);
  s.delta = get_int(j, "delta", ctx);
  s.a = get_int(j, "a", ctx);
  s.k_max = get_int(j, "k_max", ctx);
  const Json& q = field(j, "q_degrees", ctx);
  if (!q.is_array()) malformed(ctx + ".q_degrees", "expected an array");
  for (const auto& t : q) {
    if (!t.is_array() || t.size() != 3) malformed(ctx + ".q_degrees", "expected [k, i, degree]");
    s.q_degrees.push_back({{as_int(t[0], ctx), as_int(t[1], ctx)}, as_int(t[2], ctx)});
  }
  s.z_degrees = get_int_list(j, "z_degrees", ctx);
  const Json& r = field(j, "residues", ctx);
  if (!r.is_null()) s.residues = residue_table_from_json(r);
  return s;
}

// ---- isomorphism reports ---------------------------------------------------

Json to_json(const IsomorphismReport& r) {
  Json witness = nullptr;
  if (r.witness) {
    witness = Json::array();
    for (const auto& t : *r.witness)
      witness.push_back(Json::array({t.source.k, t.source.i, t.alpha, t.target.k, t.target.i}));
  }
  return Json{{"level", r.level},
              {"dK", r.dK},
              {"dK_prime", r.dK_prime},
              {"decision", to_string(r.decision)},
              {"case", to_string(r.decision_case)},
              {"distinguisher_b", r.distinguisher_b ? Json(*r.distinguisher_b) : Json(nullptr)},
              {"distinguisher_lowest_degrees",
               r.distinguisher_lowest
                   ? Json::array({r.distinguisher_lowest->first, r.distinguisher_lowest->second})
                   : Json(nullptr)},
              {"witness", witness},
              {"deferred_source", index_list_json(r.deferred_source)},
              {"deferred_target", index_list_json(r.deferred_target)}};
}

IsomorphismReport isomorphism_report_from_json(const Json& j) {
  const std::string ctx = "contact_homology";
  IsomorphismReport r;
  r.level = get_int(j, "level", ctx);
  r.dK = get_int(j, "dK", ctx);
  r.dK_prime = get_int(j, "dK_prime", ctx);
  r.decision = enum_from<Decision>(j, "decision", ctx,
                                   {{"isomorphic", Decision::Isomorphic},
                                    {"not_isomorphic", Decision::NotIsomorphic}});
  using C = DecisionCase;
  r.decision_case = enum_from<C>(
      j, "case", ctx,
      {{to_string(C::PositiveLevelSmallDivisibilities), C::PositiveLevelSmallDivisibilities},
       {to_string(C::LevelZeroEqualDivisibilities), C::LevelZeroEqualDivisibilities},
       {to_string(C::EqualLargeDivisibilities), C::EqualLargeDivisibilities},
       {to_string(C::LevelZeroDivisibilitiesDiffer), C::LevelZeroDivisibilitiesDiffer},
       {to_string(C::LargeDivisibilitiesDiffer), C::LargeDivisibilitiesDiffer},
       {to_string(C::LevelsDiffer), C::LevelsDiffer},
       {to_string(C::ManifoldsDiffer), C::ManifoldsDiffer}});
  r.distinguisher_b = get_optional<Integer>(j, "distinguisher_b", ctx, as_int);
  const Json& low = field(j, "distinguisher_lowest_degrees", ctx);
  if (!low.is_null()) {
    if (!low.is_array() || low.size() != 2) malformed(ctx + ".distinguisher_lowest_degrees", "expected a pair");
    r.distinguisher_lowest = std::pair{as_int(low[0], ctx), as_int(low[1], ctx)};
  }
  const Json& w = field(j, "witness", ctx);
  if (!w.is_null()) {
    if (!w.is_array()) malformed(ctx + ".witness", "expected an array");
    std::vector<WitnessTriple> triples;
    for (const auto& t : w) {
      if (!t.is_array() || t.size() != 5) malformed(ctx + ".witness", "expected [k, i, alpha, k', i']");
      triples.push_back({{as_int(t[0], ctx), as_int(t[1], ctx)},
                         as_int(t[2], ctx),
                         {as_int(t[3], ctx), as_int(t[4], ctx)}});
    }
    r.witness = std::move(triples);
  }
  r.deferred_source = index_list(j, "deferred_source", ctx);
  r.deferred_target = index_list(j, "deferred_target", ctx);
  return r;
}

// ---- geography -------------------------------------------------------------

Json to_json(const GeographyEntry& e) {
  return Json{{"family", e.family},
              {"m", e.m ? Json(*e.m) : Json(nullptr)},
              {"b2", e.b2},
              {"b2_plus", e.b2_plus},
              {"dK", e.dK},
              {"dK_constraint", to_string(e.constraint)}};
}

GeographyEntry geography_entry_from_json(const Json& j) {
  const std::string ctx = "entry";
  GeographyEntry e;
  e.family = get_string(j, "family", ctx);
  e.m = get_optional<Integer>(j, "m", ctx, as_int);
  e.b2 = get_int(j, "b2", ctx);
  e.b2_plus = get_int(j, "b2_plus", ctx);
  e.dK = get_int(j, "dK", ctx);
  e.constraint = enum_from<DivisibilityConstraint>(
      j, "dK_constraint", ctx, {{"any", DivisibilityConstraint::Any}, {"odd", DivisibilityConstraint::Odd}});
  return e;
}

Json to_json(const CountReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.realizing_entries) entries.push_back(to_json(e));
  return Json{{"manifold_name", r.manifold_name},
              {"r", r.r},
              {"level", r.level},
              {"lower_bound", r.lower_bound},
              {"upper_bound_N", r.upper_bound_N},
              {"upper_bound_refined", r.upper_bound_refined ? Json(*r.upper_bound_refined) : Json(nullptr)},
              {"exact", r.exact},
              {"realized_divisibilities", r.realized_divisibilities},
              {"realizing_entries", entries}};
}

CountReport count_report_from_json(const Json& j) {
  const std::string ctx = "report";
  CountReport r;
  r.manifold_name = get_string(j, "manifold_name", ctx);
  r.r = get_int(j, "r", ctx);
  r.level = get_int(j, "level", ctx);
  r.lower_bound = get_int(j, "lower_bound", ctx);
  r.upper_bound_N = get_int(j, "upper_bound_N", ctx);
  r.upper_bound_refined = get_optional<Integer>(j, "upper_bound_refined", ctx, as_int);
  r.exact = get_bool(j, "exact", ctx);
  r.realized_divisibilities = get_int_list(j, "realized_divisibilities", ctx);
  const Json& entries = field(j, "realizing_entries", ctx);
  if (!entries.is_array()) malformed(ctx + ".realizing_entries", "expected an array");
  for (const auto& e : entries) r.realizing_entries.push_back(geography_entry_from_json(e));
  return r;
}

Json to_json(const FamilyRule& rule) {
  return Json{{"family", rule.family},
              {"params", Json{{"m_parity", to_string(rule.m_parity)}}},
              {"b2", Json{{"slope", rule.b2_slope}, {"offset", rule.b2_offset}}},
              {"b2_plus", Json{{"slope", rule.b2_plus_slope}, {"offset", rule.b2_plus_offset}}},
              {"dK_constraint", to_string(rule.dK_constraint)}};
}

FamilyRule family_rule_from_json(const Json& j) {
  const std::string ctx = "catalog entry";
  FamilyRule rule;
  rule.family = get_string(j, "family", ctx);
  rule.m_parity = enum_from<MParity>(field(j, "params", ctx), "m_parity", ctx + ".params",
                                     {{"any", MParity::Any}, {"even", MParity::Even}, {"odd", MParity::Odd}});
  const Json& b2 = field(j, "b2", ctx);
  rule.b2_slope = get_int(b2, "slope", ctx + ".b2");
  rule.b2_offset = get_int(b2, "offset", ctx + ".b2");
  const Json& bp = field(j, "b2_plus", ctx);
  rule.b2_plus_slope = get_int(bp, "slope", ctx + ".b2_plus");
  rule.b2_plus_offset = get_int(bp, "offset", ctx + ".b2_plus");
  rule.dK_constraint = enum_from<DivisibilityConstraint>(
      j, "dK_constraint", ctx, {{"any", DivisibilityConstraint::Any}, {"odd", DivisibilityConstraint::Odd}});
  if (rule.b2_slope < 0) malformed(ctx + ".b2.slope", "must be nonnegative");
  return rule;
}

Json catalog_to_json(const Catalog& c) {
  Json a = Json::array();
  for (const auto& rule : c.rules()) a.push_back(to_json(rule));
  return a;
}

Catalog catalog_from_json(const Json& j) {
  if (!j.is_array()) malformed("catalog", "expected an array of entries");
  std::vector<FamilyRule> rules;
  for (const auto& e : j) rules.push_back(family_rule_from_json(e));
  return Catalog(std::move(rules));
}

Catalog load_catalog(const std::filesystem::path& path) {
  return catalog_from_json(parse_json(read_file(path), path.string()));
}

// ---- text ------------------------------------------------------------------

std::string render_text(const SymplecticFourManifoldDescriptor& m) {
  std::ostringstream os;
  os << "descriptor " << m.name << ": b2=" << m.b2 << " b2_plus=" << m.b2_plus << " spin=" << yes_no(m.spin)
     << " (valid)\n";
  return os.str();
}

std::string render_text(const FiveManifoldContact& x) {
  std::ostringstream os;
  os << "5-manifold:  " << x.barden_name << "\n"
     << "b2(X):       " << x.b2_X << "\n"
     << "spin:        " << yes_no(x.spin_X) << "\n"
     << "level:       " << x.level << "\n"
     << "d(K):        " << x.dK << "\n"
     << "delta:       " << x.delta << "\n";
  return os.str();
}

std::string render_text(const DegreeSpectrum& s) {
  std::ostringstream os;
  os << "level " << s.level << ", delta " << s.delta << ", b2(M) " << s.b2M() << ", k <= " << s.k_max << "\n";
  os << "z degrees: " << (s.z_degrees.empty() ? "(none)" : join(s.z_degrees)) << "\n";
  os << "q degrees:\n";
  Integer current = 0;
  for (const auto& q : s.q_degrees) {
    if (q.index.k != current) {
      if (current != 0) os << "\n";
      current = q.index.k;
      os << "  k=" << current << ":";
    }
    os << " " << q.degree;
  }
  if (current != 0) os << "\n";
  if (s.residues) {
    os << "residue classes mod " << 2 * s.residues->level << " (d(K)=" << s.residues->dK << "):\n";
    for (std::size_t b = 0; b < s.residues->status.size(); ++b)
      os << "  Q_" << b << ": " << to_text(s.residues->status[b]) << "\n";
  }
  return os.str();
}

std::string render_text(const IsomorphismReport& r) {
  std::ostringstream os;
  os << "contact homology: "
     << (r.decision == Decision::Isomorphic ? "isomorphic" : "not isomorphic") << " (" << to_string(r.decision_case)
     << "; level " << r.level << ", d(K)=" << r.dK << ", d(K')=" << r.dK_prime << ")\n";
  if (r.distinguisher_b) {
    const auto b = *r.distinguisher_b;
    os << "distinguisher: residue class b=" << b << ", Q_" << b << " "
       << to_text(qb_status(b, r.level, r.dK)) << " vs " << to_text(qb_status(b, r.level, r.dK_prime)) << "\n";
  }
  if (r.distinguisher_lowest) {
    os << "distinguisher: lowest generator degrees " << r.distinguisher_lowest->first << " vs "
       << r.distinguisher_lowest->second << "\n";
  }
  if (r.witness) {
    os << "witness (" << r.witness->size() << " generators, q_{k,i} -> z'_1^alpha q'_{k',i'}):\n";
    for (const auto& t : *r.witness) {
      os << "  q_{" << t.source.k << "," << t.source.i << "} -> z'_1^" << t.alpha << " q'_{" << t.target.k << ","
         << t.target.i << "}\n";
    }
    if (!r.deferred_source.empty() || !r.deferred_target.empty()) {
      os << "deferred at truncation: " << r.deferred_source.size() << " source, " << r.deferred_target.size()
         << " target\n";
    }
  }
  return os.str();
}

std::string render_text(const CountReport& r) {
  std::ostringstream os;
  os << "manifold:    " << r.manifold_name << "\n"
     << "level:       " << r.level << "\n"
     << "lower bound: " << r.lower_bound << " inequivalent contact structures"
     << (r.exact ? " (equals the upper bound)" : "") << "\n"
     << "upper bound: N(d)=" << r.upper_bound_N;
  if (r.upper_bound_refined) os << ", N'(d)=" << *r.upper_bound_refined;
  os << "\n";
  os << "realized d(K): " << (r.realized_divisibilities.empty() ? "(none)" : join(r.realized_divisibilities)) << "\n";
  for (const auto& e : r.realizing_entries) {
    os << "  " << e.family;
    if (e.m) os << "(m=" << *e.m << ")";
    os << ": b2=" << e.b2 << " b2_plus=" << e.b2_plus << " d(K)=" << e.dK << "\n";
  }
  return os.str();
}

std::string render_text(const Catalog& c) {
  std::ostringstream os;
  for (const auto& rule : c.rules()) {
    os << rule.family << ": ";
    if (rule.indexed()) {
      os << "m >= 1 (" << to_string(rule.m_parity) << "), b2 = " << rule.b2_slope << "m" << std::showpos
         << rule.b2_offset << ", b2_plus = " << std::noshowpos << rule.b2_plus_slope << "m" << std::showpos
         << rule.b2_plus_offset << std::noshowpos;
    } else {
      os << "b2 = " << rule.b2_offset << ", b2_plus = " << rule.b2_plus_offset;
    }
    os << ", d(K): " << to_string(rule.dK_constraint) << "\n";
  }
  return os.str();
}

}  // namespace bwc::io
