#include "projindex/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "projindex/error.hpp"
#include "projindex/poly_parse.hpp"

namespace projindex::cli {

namespace {

std::string read_stream(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read file '" + path + "'");
  return read_stream(in);
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream ss(text);
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  return out;
}

Scalar scalar_from_json(const Json& j, const std::string& what) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  throw DomainError(what + ": rational literals must be strings such as \"3/2\"");
}

}  // namespace

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, column = 1;
    std::size_t upto = e.byte == 0 ? 0 : std::min(e.byte - 1, text.size());
    for (std::size_t i = 0; i < upto; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string msg = e.what();
    // keep nlohmann's description, drop its own position prefix
    if (auto pos = msg.find(": "); pos != std::string::npos) msg = msg.substr(pos + 2);
    throw ParseError("invalid JSON: " + msg, line, column);
  }
}

HomogeneousMap map_from_json(const Json& j) {
  if (!j.is_object()) throw DomainError("map must be a JSON object {\"n\": .., \"components\": [..]}");
  if (!j.contains("n") || !j["n"].is_number_unsigned() || j["n"].get<unsigned long>() == 0)
    throw DomainError("map field \"n\" must be a positive integer");
  if (!j.contains("components") || !j["components"].is_array())
    throw DomainError("map field \"components\" must be an array of polynomial strings");
  const std::size_t n = j["n"].get<std::size_t>();
  const Json& comps = j["components"];
  if (comps.size() != n + 1)
    throw DomainError("map with n = " + std::to_string(n) + " needs " + std::to_string(n + 1) + " components, got " +
                      std::to_string(comps.size()));
  std::vector<MultiPoly> polys;
  for (std::size_t k = 0; k < comps.size(); ++k) {
    if (!comps[k].is_string()) throw DomainError("component F" + std::to_string(k) + " must be a string");
    const std::string text = comps[k].get<std::string>();
    try {
      polys.push_back(parse_poly(text, VarScheme::homogeneous(n)));
    } catch (const ParseError& e) {
      throw DomainError("component F" + std::to_string(k) + " \"" + text + "\": " + e.what());
    }
  }
  return HomogeneousMap::validate(std::move(polys));
}

Json map_to_json(const HomogeneousMap& f) {
  Json j;
  j["n"] = f.n();
  j["components"] = f.component_strings();
  return j;
}

ProjPoint point_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("a point must be an array of rational strings");
  std::vector<Scalar> coords;
  for (const auto& c : j) coords.push_back(scalar_from_json(c, "point coordinate"));
  return ProjPoint(std::move(coords));
}

Json point_to_json(const ProjPoint& p) {
  Json j = Json::array();
  for (const auto& c : p.coords()) j.push_back(to_string(c));
  return j;
}

Job job_from_json(const Json& j) {
  if (!j.is_object()) throw DomainError("job document must be a JSON object");
  if (j.contains("schema") && j["schema"] != 1) throw DomainError("unsupported schema version " + j["schema"].dump());
  Job job;
  if (j.contains("map")) {
    job.map = map_from_json(j["map"]);
  } else if (j.contains("components")) {
    job.map = map_from_json(j);
  }
  if (j.contains("points")) {
    if (!j["points"].is_array()) throw DomainError("\"points\" must be an array");
    for (const auto& p : j["points"]) job.points.push_back(point_from_json(p));
  }
  for (const char* key : {"phi", "psi"}) {
    if (!j.contains(key)) continue;
    if (!j[key].is_string()) throw DomainError(std::string("\"") + key + "\" must be a string");
    (key[1] == 'h' ? job.phi : job.psi) = j[key].get<std::string>();
  }
  return job;
}

std::vector<ProjPoint> parse_inline_points(const std::string& text) {
  std::vector<ProjPoint> out;
  for (const auto& item : split(text, ';')) {
    if (item.empty()) continue;
    std::vector<Scalar> coords;
    for (const auto& c : split(item, ',')) coords.push_back(parse_scalar(c));
    out.emplace_back(std::move(coords));
  }
  return out;
}

namespace {

Json entry_to_json(const PointEntry& e) {
  Json j;
  j["point"] = point_to_json(e.point);
  j["classification"] = to_string(e.kind);
  if (e.level) j["level"] = *e.level;
  if (e.mult) j["multiplicity"] = *e.mult;
  if (e.residue) j["residue"] = to_string(*e.residue);
  if (e.path) j["path"] = to_string(*e.path);
  return j;
}

}  // namespace

Json report_to_json(const VerificationReport& r) {
  Json j;
  j["check"] = r.check;
  j["draft"] = r.draft;
  j["lhs"] = to_string(r.lhs);
  j["rhs"] = to_string(r.rhs);
  j["census"] = {{"total", r.census_total}, {"expected", r.census_expected}, {"complete", r.complete}};
  j["pass"] = r.pass;
  Json points = Json::array();
  for (const auto& e : r.per_point) points.push_back(entry_to_json(e));
  j["points"] = std::move(points);
  Json ids = Json::array();
  for (const auto& id : r.identities)
    ids.push_back({{"label", id.label}, {"lhs", to_string(id.lhs)}, {"rhs", to_string(id.rhs)},
                   {"holds", id.holds}, {"draft", id.draft}});
  j["identities"] = std::move(ids);
  j["notes"] = r.notes;
  return j;
}

Json census_to_json(const CensusResult& c) {
  Json j;
  j["total"] = c.total;
  j["expected"] = c.expected;
  j["complete"] = c.complete;
  j["draft_count"] = c.draft_count;
  j["draft_count_literal"] = c.draft_count_literal;
  Json points = Json::array();
  for (const auto& e : c.per_point) points.push_back(entry_to_json(e));
  j["points"] = std::move(points);
  return j;
}

Json example_to_json(const ExampleMap& ex) {
  Json j;
  j["schema"] = 1;
  j["command"] = "example";
  j["name"] = ex.name;
  j["map"] = map_to_json(ex.map);
  Json points = Json::array();
  for (const auto& p : ex.points) points.push_back(point_to_json(p));
  j["points"] = std::move(points);
  if (!ex.levels.empty()) j["levels"] = ex.levels;
  return j;
}

namespace {

struct Options {
  std::string map_file;
  std::string points_arg;
  std::vector<std::string> point_args;
  std::string phi;
  std::string psi;
  unsigned trunc_cap = 0;
  std::string format = "json";
  // verify
  std::string which;
  std::optional<unsigned> k;
  std::string t_samples;
  // residues
  std::optional<std::size_t> chart;
  // example / chern
  std::string example_name;
  unsigned n = 0;
  unsigned nu = 0;
  // abel
  unsigned r = 0;
  std::string x, y, z;
};

void add_input_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--map", o.map_file, "Map or job JSON file (default: job document on stdin)");
  cmd->add_option("--points", o.points_arg, "Points: JSON file or inline \"1,0,0;1,1,1\"");
  cmd->add_option("--point", o.point_args, "A single inline point \"1,0,1/2\" (repeatable)");
  cmd->add_option("--trunc-cap", o.trunc_cap, "Truncation order cap for local algebra (default 4n+16)")
      ->envname("PROJINDEX_TRUNC_CAP");
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
}

void add_sym_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--phi", o.phi, "Symmetric polynomial phi (e1..en or x1..xn)");
  cmd->add_option("--psi", o.psi, "Symmetric polynomial psi (e1..e(n+1) or x1..x(n+1))");
}

Job load_job(const Options& o, std::istream& in) {
  Job job;
  if (!o.map_file.empty()) {
    job = job_from_json(parse_json_text(read_file(o.map_file)));
  } else {
    std::string text = read_stream(in);
    if (trim(text).empty()) throw DomainError("no map given: use --map FILE or pipe a job document to stdin");
    job = job_from_json(parse_json_text(text));
  }
  if (!job.map) throw DomainError("input has no map");

  if (!o.points_arg.empty() || !o.point_args.empty()) {
    job.points.clear();
    if (!o.points_arg.empty()) {
      if (std::filesystem::is_regular_file(o.points_arg)) {
        Json pj = parse_json_text(read_file(o.points_arg));
        const Json& arr = pj.is_object() && pj.contains("points") ? pj["points"] : pj;
        if (!arr.is_array()) throw DomainError("points file must hold an array of points");
        for (const auto& p : arr) job.points.push_back(point_from_json(p));
      } else {
        job.points = parse_inline_points(o.points_arg);
      }
    }
    for (const auto& p : o.point_args)
      for (auto& q : parse_inline_points(p)) job.points.push_back(std::move(q));
  }
  if (!o.phi.empty()) job.phi = o.phi;
  if (!o.psi.empty()) job.psi = o.psi;
  return job;
}

ResidueOptions residue_options(const Options& o) {
  ResidueOptions r;
  r.local.trunc_cap = o.trunc_cap;
  return r;
}

std::optional<SymSpec> sym_for(const std::optional<std::string>& text, std::size_t arity) {
  if (!text) return std::nullopt;
  return parse_sym_spec(*text, arity);
}

Json header(const std::string& command) {
  Json j;
  j["schema"] = 1;
  j["command"] = command;
  return j;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

// ---- commands ---------------------------------------------------------------

int cmd_classify(const Options& o, std::istream& in, std::ostream& out) {
  Job job = load_job(o, in);
  const HomogeneousMap& f = *job.map;
  Json j = header("classify");
  j["map"] = map_to_json(f);
  Json points = Json::array();
  for (const auto& p : job.points) {
    Json e;
    e["point"] = point_to_json(p);
    PointKind kind = classify_point(f, p);
    e["classification"] = to_string(kind);
    if (kind != PointKind::RegularNonFixed) {
      LocalModel m = dehomogenize(f, p);
      LocalAlgebra la = local_multiplicity(m.g, m.w0, residue_options(o).local);
      e["multiplicity"] = la.mult();
      e["chart"] = m.chart;
    }
    if (o.format == "text") {
      out << p.to_string() << "  " << to_string(kind);
      if (e.contains("multiplicity")) out << "  multiplicity " << e["multiplicity"].get<unsigned>();
      out << "\n";
    }
    points.push_back(std::move(e));
  }
  j["points"] = std::move(points);
  if (o.format == "json") emit(out, j);
  return kSuccess;
}

Json residue_to_json(const ResidueValue& v) {
  Json j;
  j["value"] = to_string(v.value);
  j["path"] = to_string(v.path);
  if (!v.local.alpha.empty()) j["alpha"] = v.local.alpha;
  return j;
}

int cmd_residues(const Options& o, std::istream& in, std::ostream& out) {
  Job job = load_job(o, in);
  const HomogeneousMap& f = *job.map;
  std::optional<SymSpec> phi = sym_for(job.phi, f.n());
  std::optional<SymSpec> psi = sym_for(job.psi, f.n() + 1);
  ResidueOptions ro = residue_options(o);
  Json j = header("residues");
  j["map"] = map_to_json(f);
  if (phi) j["phi"] = phi->to_string();
  if (psi) j["psi"] = psi->to_string();
  Json points = Json::array();
  for (const auto& p : job.points) {
    Json e;
    e["point"] = point_to_json(p);
    PointKind kind = classify_point(f, p);
    e["classification"] = to_string(kind);
    if (kind != PointKind::RegularNonFixed) {
      ResidueValue r1 = res1(f, p, ro, o.chart);
      e["chart"] = o.chart.value_or(p.pivot());
      e["multiplicity"] = r1.local.mult;
      e["stab_order"] = r1.local.stab_order;
      e["res1"] = residue_to_json(r1);
      if (phi) e["res2"] = residue_to_json(res2(f, p, *phi, ro, o.chart));
      if (psi) e["res3"] = residue_to_json(res3(f, p, *psi, ro, o.chart));
    }
    if (o.format == "text") {
      out << p.to_string() << "  " << to_string(kind);
      for (const char* key : {"res1", "res2", "res3"})
        if (e.contains(key))
          out << "  " << key << " = " << e[key]["value"].get<std::string>() << " ("
              << e[key]["path"].get<std::string>() << ")";
      out << "\n";
    }
    points.push_back(std::move(e));
  }
  j["points"] = std::move(points);
  if (o.format == "json") emit(out, j);
  return kSuccess;
}

void print_report_text(std::ostream& out, const VerificationReport& r) {
  out << r.check << (r.draft ? " [draft]" : "") << ": lhs = " << to_string(r.lhs) << ", rhs = " << to_string(r.rhs)
      << ", census " << r.census_total << "/" << r.census_expected << " -> " << (r.pass ? "PASS" : "FAIL") << "\n";
  for (const auto& e : r.per_point) {
    out << "  " << e.point.to_string() << "  " << to_string(e.kind);
    if (e.mult) out << "  mult " << *e.mult;
    if (e.residue) out << "  " << to_string(*e.residue);
    out << "\n";
  }
  for (const auto& id : r.identities)
    out << "  " << (id.holds ? "ok   " : "FAIL ") << id.label << ": " << to_string(id.lhs) << " = " << to_string(id.rhs)
        << "\n";
  for (const auto& note : r.notes) out << "  note: " << note << "\n";
}

std::vector<Scalar> parse_scalar_list(const std::string& text) {
  std::vector<Scalar> out;
  for (const auto& s : split(text, ',')) out.push_back(parse_scalar(s));
  return out;
}

int cmd_verify(const Options& o, std::istream& in, std::ostream& out) {
  Job job = load_job(o, in);
  const HomogeneousMap& f = *job.map;
  ResidueOptions ro = residue_options(o);
  std::vector<VerificationReport> reports;
  Json j = header("verify");
  j["which"] = o.which;
  j["map"] = map_to_json(f);

  if (o.which == "1i") {
    reports.push_back(verify_theorem1(f, job.points, Theorem1Part::I, std::nullopt, ro));
  } else if (o.which == "1ii") {
    auto phi = sym_for(job.phi, f.n());
    if (!phi) throw DomainError("verify --which 1ii needs --phi");
    j["phi"] = phi->to_string();
    reports.push_back(verify_theorem1(f, job.points, Theorem1Part::II, phi, ro));
  } else if (o.which == "1iii") {
    auto psi = sym_for(job.psi, f.n() + 1);
    if (!psi) throw DomainError("verify --which 1iii needs --psi");
    j["psi"] = psi->to_string();
    reports.push_back(verify_theorem1(f, job.points, Theorem1Part::III, psi, ro));
  } else if (o.which == "ueda") {
    if (o.k) {
      reports.push_back(ueda_check(f, job.points, *o.k, ro));
    } else {
      for (unsigned k = 0; k <= f.n(); ++k) reports.push_back(ueda_check(f, job.points, k, ro));
    }
  } else {
    std::vector<Scalar> ts = o.t_samples.empty() ? default_t_samples() : parse_scalar_list(o.t_samples);
    reports.push_back(ueda_polynomial_checks(f, job.points, ts, ro));
  }

  bool pass = true;
  Json rs = Json::array();
  for (const auto& r : reports) {
    pass = pass && r.pass;
    rs.push_back(report_to_json(r));
  }
  j["pass"] = pass;
  j["reports"] = std::move(rs);
  if (o.format == "json") {
    emit(out, j);
  } else {
    for (const auto& r : reports) print_report_text(out, r);
  }
  return pass ? kSuccess : kCheckFailed;
}

int cmd_census(const Options& o, std::istream& in, std::ostream& out) {
  Job job = load_job(o, in);
  CensusResult c = census(*job.map, job.points, residue_options(o).local);
  Json j = header("census");
  j["map"] = map_to_json(*job.map);
  Json body = census_to_json(c);
  for (auto& [key, value] : body.items()) j[key] = value;
  if (o.format == "json") {
    emit(out, j);
  } else {
    out << "census " << c.total << "/" << c.expected << (c.complete ? " complete" : " incomplete") << "\n";
    for (const auto& e : c.per_point) {
      out << "  " << e.point.to_string() << "  " << to_string(e.kind);
      if (e.mult) out << "  mult " << *e.mult;
      out << "\n";
    }
  }
  return c.complete ? kSuccess : kCheckFailed;
}

int cmd_example(const Options& o, std::ostream& out) {
  ExampleMap ex = make_example(o.example_name, o.n, o.nu);
  if (o.format == "json") {
    emit(out, example_to_json(ex));
  } else {
    out << ex.name << " on P^" << ex.map.n() << ", degree " << ex.map.degree() << "\n";
    for (const auto& c : ex.map.component_strings()) out << "  " << c << "\n";
    for (std::size_t i = 0; i < ex.points.size(); ++i) {
      out << "  " << ex.points[i].to_string();
      if (!ex.levels.empty()) out << "  level " << ex.levels[i];
      out << "\n";
    }
  }
  return kSuccess;
}

int cmd_chern(const Options& o, std::ostream& out) {
  if (o.phi.empty() == o.psi.empty()) throw DomainError("chern needs exactly one of --phi, --psi");
  ChernKind kind = o.phi.empty() ? ChernKind::Psi : ChernKind::Phi;
  ChernTarget target = ChernTarget::make(kind, o.n, o.nu);
  SymSpec sym = parse_sym_spec(kind == ChernKind::Phi ? o.phi : o.psi, kind == ChernKind::Phi ? o.n : o.n + 1);
  Scalar value = chern_integral(target, sym);
  Json j = header("chern");
  j["kind"] = kind == ChernKind::Phi ? "Phi" : "Psi";
  j["n"] = o.n;
  j["nu"] = o.nu;
  j["sym"] = sym.to_string();
  Json cj = Json::array();
  for (const auto& c : target.cj) cj.push_back(to_string(c));
  j["cj"] = std::move(cj);
  j["value"] = to_string(value);
  if (o.format == "json") emit(out, j);
  else out << to_string(value) << "\n";
  return kSuccess;
}

int cmd_abel(const Options& o, std::ostream& out) {
  AbelResult a = abel_identity(o.r, parse_scalar(o.x), parse_scalar(o.y), parse_scalar(o.z));
  if (o.format == "json") {
    Json j = header("abel");
    j["r"] = o.r;
    j["x"] = to_string(parse_scalar(o.x));
    j["y"] = to_string(parse_scalar(o.y));
    j["z"] = to_string(parse_scalar(o.z));
    j["lhs"] = to_string(a.lhs);
    j["rhs"] = to_string(a.rhs);
    j["holds"] = a.holds;
    emit(out, j);
  } else {
    out << (a.holds ? "true" : "false") << "\n";
  }
  return a.holds ? kSuccess : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact residue index computations for rational self-maps of projective space", "projindex"};
  app.require_subcommand(1);
  Options o;

  auto* classify = app.add_subcommand("classify", "Classify points as fixed, indeterminacy or regular");
  add_input_options(classify, o);

  auto* residues = app.add_subcommand("residues", "Res1, Res2 (with --phi) and Res3 (with --psi) at each point");
  add_input_options(residues, o);
  add_sym_options(residues, o);
  residues->add_option("--chart", o.chart, "Affine chart index (default: first nonzero coordinate)");

  auto* verify = app.add_subcommand("verify", "Check an index theorem over a point list");
  add_input_options(verify, o);
  add_sym_options(verify, o);
  verify->add_option("--which", o.which, "Identity to check")
      ->required()
      ->check(CLI::IsMember({"1i", "1ii", "1iii", "ueda", "ueda-poly"}));
  verify->add_option("--k", o.k, "Ueda index k (default: every k = 0..n)");
  verify->add_option("--t", o.t_samples, "Sample values of t for ueda-poly, comma separated");

  auto* census_cmd = app.add_subcommand("census", "Multiplicity count against ((nu+1)^(n+1) - 1)/nu");
  add_input_options(census_cmd, o);

  auto* example = app.add_subcommand("example", "Emit a bundled map with its complete point list");
  example->add_option("name", o.example_name, "power-map, cremona, degenerate-p1 or degenerate-p2")->required();
  example->add_option("--n", o.n, "Dimension (power-map)");
  example->add_option("--nu", o.nu, "Degree minus one (power-map)");
  example->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));

  auto* chern = app.add_subcommand("chern", "Integral of phi or psi over the virtual bundle target");
  chern->add_option("--n", o.n, "Dimension")->required();
  chern->add_option("--nu", o.nu, "Degree minus one")->required();
  add_sym_options(chern, o);
  chern->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));

  auto* abel = app.add_subcommand("abel", "Check Abel's binomial identity exactly");
  abel->add_option("--r", o.r, "Exponent r >= 0")->required();
  abel->add_option("--x", o.x, "x (nonzero rational)")->required();
  abel->add_option("--y", o.y, "y (rational)")->required();
  abel->add_option("--z", o.z, "z (rational)")->required();
  abel->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    if (*classify) return cmd_classify(o, in, out);
    if (*residues) return cmd_residues(o, in, out);
    if (*verify) return cmd_verify(o, in, out);
    if (*census_cmd) return cmd_census(o, in, out);
    if (*example) return cmd_example(o, out);
    if (*chern) return cmd_chern(o, out);
    if (*abel) return cmd_abel(o, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace projindex::cli
