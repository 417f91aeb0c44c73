#include "weyl/cli/commands.hpp"

#include "weyl/atlas_io.hpp"
#include "weyl/cli/verify.hpp"
#include "weyl/errors.hpp"
#include "weyl/gap_search.hpp"
#include "weyl/invariant_module.hpp"
#include "weyl/representation.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <ostream>

namespace weyl::cli {

namespace {

using nlohmann::ordered_json;

enum class Format { Human, Json, Csv };

struct Options {
  Format format = Format::Human;
  CacheOptions cache;
  AtlasOptions atlas;
  std::ostream* out = nullptr;
  std::ostream* err = nullptr;
};

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void print(std::ostream& os, Format f) const {
    if (f == Format::Csv) {
      auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
          const bool quote = cells[i].find_first_of(",\"") != std::string::npos;
          std::string c = cells[i];
          if (quote) {
            std::string q = "\"";
            for (char ch : c) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
            c = q + "\"";
          }
          os << (i ? "," : "") << c;
        }
        os << "\n";
      };
      line(header);
      for (const auto& r : rows) line(r);
      return;
    }
    std::vector<std::size_t> width(header.size());
    for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
    for (const auto& r : rows)
      for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
    auto line = [&](const std::vector<std::string>& cells) {
      std::string s;
      for (std::size_t i = 0; i < cells.size(); ++i) {
        s += cells[i];
        if (i + 1 < cells.size()) s += std::string(width[i] - cells[i].size() + 2, ' ');
      }
      os << s << "\n";
    };
    line(header);
    for (const auto& r : rows) line(r);
  }
};

std::string joined(const std::vector<std::size_t>& v, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

RootSystemPtr system_of(const std::string& type) {
  auto rs = build_root_system(TypeSpec::parse(type));
  return rs;
}

Atlas atlas_of(const RootSystemPtr& rs, const Options& o) {
  if (!rs->fits_root_mask())
    throw UsageError(rs->type().str() + " has too many positive roots for the involution atlas");
  return load_or_build_atlas(rs, o.cache, o.atlas, o.err);
}

int cmd_roots(const std::string& type, const Options& o) {
  const auto rs = system_of(type);
  auto& os = *o.out;
  if (o.format == Format::Json) {
    os << root_system_json(*rs) << "\n";
    return kOk;
  }
  Table t{{"index", "height", "simple_coeffs", "coords"}, {}};
  for (std::size_t i = 0; i < rs->num_roots(); ++i) {
    const auto& r = rs->root(i);
    std::string coeffs, coords;
    for (std::size_t k = 0; k < r.simple_coeffs.size(); ++k) coeffs += (k ? " " : "") + std::to_string(r.simple_coeffs[k]);
    for (std::size_t k = 0; k < r.coords.size(); ++k) coords += (k ? " " : "") + to_string(r.coords[k]);
    t.rows.push_back({std::to_string(i), std::to_string(r.height), coeffs, coords});
  }
  if (o.format == Format::Human)
    os << "type " << rs->type().str() << "\nrank " << rs->rank() << "\nroots " << rs->num_roots()
       << "\npositive " << rs->num_positive() << "\n\n";
  t.print(os, o.format);
  return kOk;
}

int cmd_order(const std::string& type, const Options& o) {
  const auto rs = system_of(type);
  const auto order = group_order(*rs);
  auto& os = *o.out;
  if (o.format == Format::Json) {
    ordered_json j{{"type", rs->type().str()}, {"rank", rs->rank()}, {"roots", rs->num_roots()}, {"order", order}};
    os << j.dump() << "\n";
  } else {
    Table{{"type", "rank", "roots", "order"},
          {{rs->type().str(), std::to_string(rs->rank()), std::to_string(rs->num_roots()), std::to_string(order)}}}
        .print(os, o.format);
  }
  return kOk;
}

int cmd_involutions(const std::string& type, const Options& o) {
  const auto rs = system_of(type);
  const Atlas atlas = atlas_of(rs, o);
  auto& os = *o.out;
  if (o.format == Format::Json) {
    ordered_json j;
    j["type"] = rs->type().str();
    j["group_order"] = atlas.group_order;
    j["involution_count"] = atlas.involution_count;
    auto cls = ordered_json::array();
    for (std::size_t i = 0; i < atlas.involution_classes.size(); ++i) {
      const auto& c = atlas.involution_classes[i];
      cls.push_back({{"id", atlas.class_id(i)},
                     {"degree", c.degree},
                     {"size", c.size},
                     {"splitting_roots", c.splitting.root_list()}});
    }
    j["classes"] = std::move(cls);
    os << j.dump() << "\n";
    return kOk;
  }
  Table t{{"class", "degree", "size", "splitting_roots"}, {}};
  for (std::size_t i = 0; i < atlas.involution_classes.size(); ++i) {
    const auto& c = atlas.involution_classes[i];
    t.rows.push_back({atlas.class_id(i), std::to_string(c.degree), std::to_string(c.size),
                      joined(c.splitting.root_list())});
  }
  if (o.format == Format::Human)
    os << "type " << rs->type().str() << "\ninvolutions " << atlas.involution_count << " in "
       << atlas.involution_classes.size() << " classes\n\n";
  t.print(os, o.format);
  return kOk;
}

int cmd_cubes(const std::string& type, const Options& o) {
  const auto rs = system_of(type);
  const Atlas atlas = atlas_of(rs, o);
  auto& os = *o.out;
  if (o.format == Format::Json) {
    ordered_json j;
    j["type"] = rs->type().str();
    j["cube_count"] = atlas.cube_count;
    auto cls = ordered_json::array();
    for (const auto& c : atlas.cube_classes)
      cls.push_back({{"rank", c.representative.rank()}, {"size", c.size}, {"roots", c.representative.root_list()}});
    j["classes"] = std::move(cls);
    os << j.dump() << "\n";
    return kOk;
  }
  Table t{{"class", "rank", "size", "roots"}, {}};
  for (std::size_t i = 0; i < atlas.cube_classes.size(); ++i) {
    const auto& c = atlas.cube_classes[i];
    t.rows.push_back({std::to_string(i), std::to_string(c.representative.rank()), std::to_string(c.size),
                      joined(c.representative.root_list())});
  }
  if (o.format == Format::Human)
    os << "type " << rs->type().str() << "\ncubes " << atlas.cube_count << " in " << atlas.cube_classes.size()
       << " classes\n\n";
  t.print(os, o.format);
  return kOk;
}

int cmd_basis(const std::string& type, const Options& o) {
  const auto rs = system_of(type);
  const auto basis = canonical_basis(atlas_of(rs, o));
  auto& os = *o.out;
  std::string degrees;
  for (std::size_t i = 0; i < basis.degrees.size(); ++i) degrees += (i ? "," : "") + std::to_string(basis.degrees[i]);
  if (o.format == Format::Json) {
    ordered_json j{{"type", basis.type}, {"rank", basis.rank}, {"degrees", basis.degrees}, {"classes", basis.class_ids}};
    os << j.dump() << "\n";
  } else if (o.format == Format::Csv) {
    Table t{{"class", "degree"}, {}};
    for (std::size_t i = 0; i < basis.class_ids.size(); ++i)
      t.rows.push_back({basis.class_ids[i], std::to_string(basis.degrees[i])});
    t.print(os, o.format);
  } else {
    os << "type " << basis.type << "\nrank " << basis.rank << "\ndegrees " << degrees << "\nclasses";
    for (const auto& id : basis.class_ids) os << " " << id;
    os << "\n";
  }
  return kOk;
}

int cmd_pair(const std::string& type, const std::vector<std::string>& extra, const Options& o) {
  const auto rs = system_of(type);
  const Atlas atlas = atlas_of(rs, o);
  std::vector<std::pair<std::string, InvariantExpr>> exprs;
  const auto cox = Representation::coxeter(rs);
  for (int i = 1; i <= rs->rank(); ++i) exprs.emplace_back("w" + std::to_string(i) + "(cox)", InvariantExpr::sw(cox, i));
  const RepresentationResolver resolve = [&](std::string_view name) { return parse_representation(rs, name); };
  for (const auto& text : extra) exprs.emplace_back(text, parse_invariant(text, resolve));

  auto& os = *o.out;
  if (o.format == Format::Json) {
    auto arr = ordered_json::array();
    for (const auto& [text, e] : exprs) {
      ordered_json v = ordered_json::parse(expand(e, atlas).json());
      ordered_json row;
      row["expr"] = text;
      row["degree"] = v["degree"];
      row["coeffs"] = v["coeffs"];
      arr.push_back(std::move(row));
    }
    os << ordered_json{{"type", rs->type().str()}, {"pairings", arr}}.dump() << "\n";
    return kOk;
  }
  Table t{{"expr"}, {}};
  for (std::size_t c = 0; c < atlas.involution_classes.size(); ++c) t.header.push_back(atlas.class_id(c));
  for (const auto& [text, e] : exprs) {
    const auto v = expand(e, atlas);
    std::vector<std::string> row{text};
    for (const auto& kv : v.coeffs) row.push_back(kv.second.str());
    t.rows.push_back(std::move(row));
  }
  t.print(os, o.format);
  return kOk;
}

int cmd_reduce(const std::vector<std::string>& types, const Options& o) {
  std::vector<ReductionReport> reports;
  for (const auto& type : types) {
    const auto rs = system_of(type);
    const auto target = reduction_target(rs->type());
    if (!target) throw UsageError("no built-in reduction for " + rs->type().str());
    const auto sub = find_subsystem(rs, *target);
    if (!sub) throw InternalError(target->str() + " not found inside " + rs->type().str());
    reports.push_back(verify_reduction(rs, *sub, o.atlas));
  }
  bool pass = true;
  auto& os = *o.out;
  if (o.format == Format::Json) {
    auto arr = ordered_json::array();
    for (const auto& r : reports) {
      std::size_t covered = 0;
      for (const auto& e : r.coverage) covered += e.covered;
      arr.push_back({{"type", r.type},
                     {"sub_type", r.sub_type},
                     {"group_order", r.group_order},
                     {"sub_order", r.sub_order},
                     {"index", r.index},
                     {"index_odd", r.index_odd},
                     {"cube_classes", r.coverage.size()},
                     {"covered", covered},
                     {"pass", r.pass}});
      pass = pass && r.pass;
    }
    os << arr.dump() << "\n";
  } else {
    Table t{{"type", "sub_type", "order", "sub_order", "index", "odd", "coverage", "pass"}, {}};
    for (const auto& r : reports) {
      std::size_t covered = 0;
      for (const auto& e : r.coverage) covered += e.covered;
      t.rows.push_back({r.type, r.sub_type, std::to_string(r.group_order), std::to_string(r.sub_order),
                        std::to_string(r.index), r.index_odd ? "yes" : "no",
                        std::to_string(covered) + "/" + std::to_string(r.coverage.size()), r.pass ? "yes" : "no"});
      pass = pass && r.pass;
    }
    t.print(os, o.format);
  }
  return pass ? kOk : kVerificationFailed;
}

int cmd_gap(const std::vector<HardCase>& cases, const GapBudget& budget, const Options& o) {
  auto& os = *o.out;
  auto arr = ordered_json::array();
  Table t{{"type", "degree", "pair", "target", "sw_rank", "hits", "catalogue", "partial"}, {}};
  for (const auto& hc : cases) {
    const auto rs = system_of(hc.type);
    const Atlas atlas = atlas_of(rs, o);
    const auto cat = build_catalogue(rs, budget);
    const auto rep = analyse_hard_case(atlas, hc.degree, cat);
    if (rep.separation.classes.size() < 2)
      throw UsageError(rs->type().str() + " has fewer than two classes of degree " + std::to_string(hc.degree));
    auto findings = ordered_json::array();
    for (const auto& f : rep.findings) {
      findings.push_back(ordered_json::parse(f.json()));
      std::string hits;
      for (const auto& h : f.hits) hits += (hits.empty() ? "" : " ") + h.rep + "=" + std::to_string(h.gap);
      t.rows.push_back({f.type, std::to_string(f.degree), f.pair[0] + "/" + f.pair[1], std::to_string(f.target),
                        std::to_string(rep.separation.rank) + "/" + std::to_string(rep.separation.classes.size()),
                        hits.empty() ? "-" : hits, std::to_string(f.catalogue_size), f.partial ? "yes" : "no"});
    }
    auto unsep = ordered_json::array();
    for (const auto& p : rep.separation.unseparated) unsep.push_back({p[0], p[1]});
    arr.push_back({{"type", rs->type().str()},
                   {"degree", hc.degree},
                   {"classes", rep.separation.classes},
                   {"sw_expressions", rep.separation.expressions},
                   {"sw_rank", rep.separation.rank},
                   {"unseparated", unsep},
                   {"findings", findings}});
  }
  if (o.format == Format::Json)
    os << arr.dump() << "\n";
  else
    t.print(os, o.format);
  return kOk;
}

int cmd_verify(VerifyLevel level, const Options& o) {
  VerifyConfig cfg;
  cfg.level = level;
  cfg.atlas = o.atlas;
  cfg.cache = o.cache;
  cfg.log = o.err;
  auto& os = *o.out;
  bool pass = true;
  auto arr = ordered_json::array();
  for (const auto& r : run_verify(cfg)) {
    pass = pass && r.pass;
    if (o.format == Format::Json)
      arr.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"skipped", r.skipped}, {"detail", r.detail}});
    else
      os << format_result(r) << "\n" << std::flush;
  }
  if (o.format == Format::Json) os << arr.dump() << "\n";
  return pass ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mod-2 invariants of Weyl groups: involution atlases, cube restrictions and pairings"};
  app.name("weylinv");
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false, csv = false, no_cache = false;
  std::string cache_dir;
  unsigned threads = 1;
  auto* fmt = app.add_option_group("format");
  fmt->add_flag("--json", json, "Machine-readable JSON output");
  fmt->add_flag("--csv", csv, "CSV output");
  fmt->require_option(0, 1);
  app.add_option("--cache-dir", cache_dir, "Atlas cache directory (default $WEYL_CACHE or ./.weylcache)");
  app.add_flag("--no-cache", no_cache, "Neither read nor write the atlas cache");
  app.add_option("--threads", threads, "Worker threads for enumeration")->check(CLI::Range(1U, 256U));

  std::string type;
  std::vector<std::string> types;
  std::vector<std::string> exprs;
  int degree = -1;
  GapBudget budget;
  bool fast = false, full = false;

  for (const char* name : {"roots", "order", "involutions", "cubes", "basis"}) {
    auto* sub = app.add_subcommand(name, std::string("Report ") + name + " for a type");
    sub->add_option("type", type, "Type, e.g. E8 or A1xD6")->required();
  }
  app.get_subcommand("roots")->description("List the roots in canonical order");
  app.get_subcommand("order")->description("Order of the Weyl group");
  app.get_subcommand("involutions")->description("Conjugacy classes of involutions with degrees and splittings");
  app.get_subcommand("cubes")->description("Conjugacy classes of cubes");
  app.get_subcommand("basis")->description("Rank and degrees of the canonical basis");

  auto* pair = app.add_subcommand("pair", "Pair w_i(cox) and user expressions with every class");
  pair->add_option("type", type, "Type")->required();
  pair->add_option("--expr,-e", exprs, "Homogeneous expression, e.g. 'w2(cox)+t*w1(cox)'");

  auto* reduce = app.add_subcommand("reduce", "Odd-index reduction reports (built-in pairs by default)");
  reduce->add_option("type", types, "Exceptional types among E6 E7 E8 F4 G2");

  auto* gap = app.add_subcommand("gap", "Search the catalogue for character gaps on hard pairs");
  gap->add_option("type", type, "Type (default: the built-in hard cases)");
  gap->add_option("--degree", degree, "Degree to examine")->check(CLI::NonNegativeNumber);
  gap->add_option("--budget", budget.max_exterior, "Highest exterior power in the catalogue")
      ->check(CLI::Range(1, 16));
  gap->add_option("--max-catalogue", budget.max_catalogue, "Cap on catalogue entries");
  bool no_perm = false, no_pairs = false;
  gap->add_flag("--no-permutations", no_perm, "Leave out permutation representations");
  gap->add_flag("--no-pairs", no_pairs, "Leave out sums and tensor products");

  auto* verify = app.add_subcommand("verify", "Run the acceptance suite");
  auto* level = verify->add_option_group("level");
  level->add_flag("--fast", fast, "Rank <= 4 oracle and property suites only");
  level->add_flag("--full", full, "Include E7 and E8 pairing deltas");
  level->require_option(0, 1);

  if (!args.empty() && !args.front().empty() && args.front()[0] != '-') {
    const auto subs = app.get_subcommands([](CLI::App*) { return true; });
    if (std::none_of(subs.begin(), subs.end(), [&](CLI::App* a) { return a->get_name() == args.front(); })) {
      err << "error: unknown subcommand '" << args.front() << "'\n";
      return kUsage;
    }
  }
  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  Options o;
  o.format = json ? Format::Json : csv ? Format::Csv : Format::Human;
  o.cache.enabled = !no_cache;
  if (!cache_dir.empty()) o.cache.dir = cache_dir;
  o.atlas.threads = threads;
  o.out = &out;
  o.err = &err;
  budget.permutations = !no_perm;
  budget.pairs = !no_pairs;

  try {
    const auto* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "roots") return cmd_roots(type, o);
    if (name == "order") return cmd_order(type, o);
    if (name == "involutions") return cmd_involutions(type, o);
    if (name == "cubes") return cmd_cubes(type, o);
    if (name == "basis") return cmd_basis(type, o);
    if (name == "pair") return cmd_pair(type, exprs, o);
    if (name == "reduce") {
      if (types.empty()) types = {"E6", "E7", "E8", "F4", "G2"};
      return cmd_reduce(types, o);
    }
    if (name == "gap") {
      std::vector<HardCase> cases;
      if (type.empty()) {
        if (degree >= 0) throw UsageError("--degree needs a type");
        cases = builtin_hard_cases();
      } else {
        const TypeSpec spec = TypeSpec::parse(type);
        std::vector<int> degrees = degree >= 0 ? std::vector<int>{degree} : hard_degrees(spec);
        if (degrees.empty()) throw UsageError("no built-in hard degree for " + spec.str() + "; pass --degree");
        for (int d : degrees) cases.push_back({spec.str(), d});
      }
      return cmd_gap(cases, budget, o);
    }
    if (name == "verify") return cmd_verify(fast ? VerifyLevel::Fast : full ? VerifyLevel::Full : VerifyLevel::Standard, o);
    throw UsageError("unknown subcommand " + name);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace weyl::cli
