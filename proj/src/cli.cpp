#include "pnrd/cli.hpp"

#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "pnrd/errors.hpp"
#include "pnrd/oracle.hpp"
#include "pnrd/regularity.hpp"

namespace pnrd::cli {

namespace {

[[noreturn]] void bad_input(const std::string& path, const std::string& msg) {
  throw validation_error("InvalidInput", path + ": " + msg);
}

// ---------------------------------------------------------------------------
// Input parsing

Rational rational_at(const Json& v, const std::string& path) {
  if (v.is_string()) {
    try {
      return Rational::parse(v.get<std::string>());
    } catch (const Error&) {
      bad_input(path, "not a rational string: " + v.dump());
    }
  }
  if (v.is_number_integer()) return Rational(v.get<long>());
  bad_input(path, "expected a rational string, got " + v.dump());
}

CenterCoords center_at(const Json& v, const std::string& path) {
  if (!v.is_array()) return {rational_at(v, path)};
  CenterCoords out;
  for (size_t i = 0; i < v.size(); ++i) out.push_back(rational_at(v[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

AlgebraCoords algebra_at(const Json& v, AlgebraKind kind, const std::string& path) {
  if (kind == AlgebraKind::Field) return {center_at(v, path)};
  if (!v.is_array() || v.size() != 4) bad_input(path, "a quaternion entry needs 4 coordinates");
  AlgebraCoords out;
  for (size_t i = 0; i < 4; ++i) out.push_back(center_at(v[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

BlockCoords block_at(const Json& v, AlgebraKind kind, int r, const std::string& path) {
  if (!v.is_array() || v.size() != static_cast<size_t>(r)) {
    bad_input(path, "expected " + std::to_string(r) + " rows");
  }
  BlockCoords out;
  for (size_t i = 0; i < v.size(); ++i) {
    const std::string rp = path + "[" + std::to_string(i) + "]";
    if (!v[i].is_array() || v[i].size() != static_cast<size_t>(r)) {
      bad_input(rp, "expected " + std::to_string(r) + " entries");
    }
    std::vector<AlgebraCoords> row;
    for (size_t j = 0; j < v[i].size(); ++j) row.push_back(algebra_at(v[i][j], kind, rp + "[" + std::to_string(j) + "]"));
    out.push_back(std::move(row));
  }
  return out;
}

const Json& member(const Json& obj, const char* key, const std::string& path) {
  if (!obj.is_object() || !obj.contains(key)) bad_input(path, std::string("missing field '") + key + "'");
  return obj.at(key);
}

std::string string_at(const Json& v, const std::string& path) {
  if (!v.is_string()) bad_input(path, "expected a string");
  return v.get<std::string>();
}

int int_at(const Json& v, const std::string& path) {
  if (!v.is_number_integer()) bad_input(path, "expected an integer");
  return v.get<int>();
}

ComponentDescription parse_factor(const Json& f, const std::string& path) {
  if (!f.is_object()) bad_input(path, "expected an object");
  ComponentDescription d;
  d.name = string_at(member(f, "name", path), path + ".name");
  d.dim_g = int_at(member(f, "g", path), path + ".g");
  d.mult_r = int_at(member(f, "r", path), path + ".r");

  const std::string ap = path + ".algebra";
  const Json& alg = member(f, "algebra", path);
  const std::string kind = string_at(member(alg, "kind", ap), ap + ".kind");
  if (kind == "field") {
    d.kind = AlgebraKind::Field;
  } else if (kind == "quaternion") {
    d.kind = AlgebraKind::Quaternion;
    d.quaternion_a = center_at(member(alg, "a", ap), ap + ".a");
    d.quaternion_b = center_at(member(alg, "b", ap), ap + ".b");
  } else {
    bad_input(ap + ".kind", "expected \"field\" or \"quaternion\"");
  }
  if (alg.contains("center_min_poly")) {
    const Json& mp = alg.at("center_min_poly");
    if (!mp.is_array()) bad_input(ap + ".center_min_poly", "expected ascending coefficients");
    d.center_min_poly = RationalPolynomial(center_at(mp, ap + ".center_min_poly"));
  }

  const std::string type = string_at(member(f, "albert_type", path), path + ".albert_type");
  static const std::map<std::string, AlbertType> kTypes = {
      {"I", AlbertType::I}, {"II", AlbertType::II}, {"III", AlbertType::III}, {"IV", AlbertType::IV}};
  if (!kTypes.contains(type)) bad_input(path + ".albert_type", "expected I, II, III or IV");
  d.albert_type = kTypes.at(type);

  d.base = d.kind == AlgebraKind::Field ? BaseInvolution::Identity : BaseInvolution::QuaternionStandard;
  if (f.contains("involution")) {
    const std::string ip = path + ".involution";
    const Json& inv = f.at("involution");
    if (!inv.is_object()) bad_input(ip, "expected an object");
    if (inv.contains("base")) {
      static const std::map<std::string, BaseInvolution> kBases = {
          {"identity", BaseInvolution::Identity},
          {"field_conjugation", BaseInvolution::FieldConjugation},
          {"quaternion_standard", BaseInvolution::QuaternionStandard},
          {"quaternion_twisted", BaseInvolution::QuaternionTwisted}};
      const std::string base = string_at(inv.at("base"), ip + ".base");
      if (!kBases.contains(base)) bad_input(ip + ".base", "unknown base involution '" + base + "'");
      d.base = kBases.at(base);
    }
    if (d.base == BaseInvolution::FieldConjugation) {
      d.conj_generator_image = center_at(member(inv, "conj_gen_image", ip), ip + ".conj_gen_image");
    }
    if (d.base == BaseInvolution::QuaternionTwisted) {
      d.twist = algebra_at(member(inv, "s", ip), AlgebraKind::Quaternion, ip + ".s");
    }
    if (inv.contains("H")) d.gram = block_at(inv.at("H"), d.kind, d.mult_r, ip + ".H");
  }
  return d;
}

AlgebraKind kind_of(const ComponentPtr& c) { return c->algebra()->kind(); }

// ---------------------------------------------------------------------------
// Output

std::string poly_string(const RationalPolynomial& p) { return to_string(p, "N"); }

Json coefficient_list(const RationalPolynomial& p) {
  Json out = Json::array();
  for (int i = 0; i <= p.degree(); ++i) out.push_back(p.coeff(i).str());
  return out;
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + scalar_text(v[i]);
    return s + "]";
  }
  return v.dump();
}

bool is_record_array(const Json& v) { return v.is_array() && !v.empty() && v[0].is_object(); }

/// Rows of a record array; a nested record array is expanded with the parent's
/// scalar fields repeated on each child row.
std::vector<std::vector<std::pair<std::string, std::string>>> flatten_records(const Json& arr) {
  std::vector<std::vector<std::pair<std::string, std::string>>> rows;
  for (const auto& rec : arr) {
    std::vector<std::pair<std::string, std::string>> base;
    const Json* nested = nullptr;
    for (const auto& [k, v] : rec.items()) {
      if (is_record_array(v)) {
        nested = &v;
      } else {
        base.emplace_back(k, scalar_text(v));
      }
    }
    if (!nested) {
      rows.push_back(base);
      continue;
    }
    for (const auto& child : flatten_records(*nested)) {
      auto row = base;
      row.insert(row.end(), child.begin(), child.end());
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

void render_records(const std::string& title, const Json& arr, std::ostream& out) {
  const auto rows = flatten_records(arr);
  std::vector<std::string> headers;
  for (const auto& row : rows)
    for (const auto& [k, v] : row)
      if (std::find(headers.begin(), headers.end(), k) == headers.end()) headers.push_back(k);
  std::vector<size_t> width(headers.size());
  for (size_t c = 0; c < headers.size(); ++c) width[c] = headers[c].size();
  auto cell = [&](const std::vector<std::pair<std::string, std::string>>& row, const std::string& key) {
    for (const auto& [k, v] : row)
      if (k == key) return v;
    return std::string("-");
  };
  for (const auto& row : rows)
    for (size_t c = 0; c < headers.size(); ++c) width[c] = std::max(width[c], cell(row, headers[c]).size());

  out << title << ":\n";
  auto line = [&](auto get) {
    out << " ";
    for (size_t c = 0; c < headers.size(); ++c) out << " " << std::setw(static_cast<int>(width[c])) << get(c);
    out << "\n";
  };
  line([&](size_t c) { return headers[c]; });
  for (const auto& row : rows) line([&](size_t c) { return cell(row, headers[c]); });
}

void render_table(const Json& obj, std::ostream& out) {
  std::string scalars;
  for (const auto& [k, v] : obj.items()) {
    if (is_record_array(v) || v.is_object()) continue;
    if (!scalars.empty()) scalars += ' ';
    scalars += k + "=" + scalar_text(v);
  }
  if (!scalars.empty()) out << scalars << "\n";
  for (const auto& [k, v] : obj.items()) {
    if (is_record_array(v)) {
      render_records(k, v, out);
    } else if (v.is_object()) {
      out << k << ":\n";
      std::ostringstream inner;
      render_table(v, inner);
      std::istringstream lines(inner.str());
      for (std::string l; std::getline(lines, l);) out << "  " << l << "\n";
    }
  }
}

// ---------------------------------------------------------------------------
// Commands

struct Options {
  std::string command;
  std::string input;
  std::string class_name;
  std::string class_file;
  int rank = 0;
  std::string output = "table";
  std::string grid;
  std::string direction;
};

struct Loaded {
  Document doc;
  /// Classes from --class-file, or the document's own classes.
  std::vector<NamedClass> pool;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Loaded load(const Options& opt) {
  Loaded l{load_document(read_json_file(opt.input)), {}};
  if (opt.class_file.empty()) {
    l.pool = l.doc.classes;
    return l;
  }
  const Json cf = read_json_file(opt.class_file);
  if (cf.is_object() && cf.contains("classes")) {
    const Json& classes = cf.at("classes");
    if (!classes.is_object()) bad_input(opt.class_file + ":$.classes", "expected an object of named classes");
    for (const auto& [name, value] : classes.items()) {
      l.pool.push_back({name, parse_class(l.doc.ctx, value, opt.class_file + ":$.classes." + name)});
    }
  } else {
    l.pool.push_back({opt.class_name.empty() ? "class" : opt.class_name, parse_class(l.doc.ctx, cf, opt.class_file + ":$")});
  }
  return l;
}

const NamedClass& pick(const Loaded& l, const std::string& name, const char* flag) {
  if (name.empty()) {
    if (l.pool.size() == 1) return l.pool.front();
    throw UsageError(std::string(flag) + " is required when the input holds " + std::to_string(l.pool.size()) +
                     " classes");
  }
  for (const auto& c : l.pool)
    if (c.name == name) return c;
  if (l.pool.size() == 1 && l.pool.front().name == "class") return l.pool.front();
  bad_input("$.classes", "no class named '" + name + "'");
}

const NamedClass* find_in(const std::vector<NamedClass>& pool, const std::string& name) {
  for (const auto& c : pool)
    if (c.name == name) return &c;
  return nullptr;
}

Json profile_json(const RootProfile& p) {
  Json j;
  j["positive"] = p.positive;
  j["zero"] = p.zero;
  j["negative"] = p.negative;
  return j;
}

Json regularity_json(const RegularityResult& r) {
  Json j;
  j["m"] = r.m;
  j["g"] = r.g;
  j["cauchy_bound"] = r.cauchy_bound.str();
  j["window"] = Json::array({r.window_lo, r.window_hi});
  if (r.gv_note) j["gv_note"] = *r.gv_note;
  Json table = Json::array();
  for (const auto& row : r.table) {
    Json jr;
    jr["m"] = row.m;
    jr["holds"] = row.holds;
    Json cells = Json::array();
    for (const auto& c : row.cells) {
      Json jc;
      jc["i"] = c.i;
      jc["t"] = row.m - c.i;
      jc["value"] = c.value.str();
      jc["positive"] = c.positive;
      jc["degenerate"] = c.degenerate;
      jc["C"] = c.holds;
      cells.push_back(std::move(jc));
    }
    jr["cells"] = std::move(cells);
    table.push_back(std::move(jr));
  }
  j["table"] = std::move(table);
  return j;
}

Json cmd_validate(const Loaded& l) {
  const auto& ctx = l.doc.ctx;
  Json j;
  j["valid"] = true;
  j["g"] = ctx.dimension();
  j["sqrt_deg_phi"] = ctx.sqrt_deg_phi().str();
  Json factors = Json::array();
  for (const auto& c : ctx.components()) {
    Json f;
    f["name"] = c->name();
    f["g"] = c->dim_g();
    f["r"] = c->mult_r();
    f["t"] = c->center_degree();
    f["m"] = c->algebra_degree();
    f["e"] = c->exponent();
    f["kind"] = to_string(c->algebra()->kind());
    f["albert_type"] = to_string(c->albert_type());
    f["involution"] = to_string(c->involution().base);
    factors.push_back(std::move(f));
  }
  j["factors"] = std::move(factors);
  Json classes = Json::array();
  for (const auto& c : l.pool) classes.push_back(c.name);
  j["classes"] = std::move(classes);
  return j;
}

Json cmd_chi(const Options& opt, const Document& doc, const NamedClass& c) {
  Json j;
  if (opt.rank > 0) {
    const auto inv = bundle_invariants(doc.ctx, BundleClass::make(c.cls, opt.rank));
    j["rank"] = opt.rank;
    j["chi_det"] = inv.chi_det.str();
    j["chi_bundle"] = inv.chi_bundle.str();
    j["index"] = inv.index_bundle;
    j["dimK"] = inv.dimK_bundle;
    j["ordK"] = inv.ordK ? Json(inv.ordK->str()) : Json(nullptr);
  } else {
    j["chi"] = euler_char(doc.ctx, c.cls).str();
    j["pnrd"] = pnrd_eval(doc.ctx, c.cls).str();
    j["sqrt_deg_phi"] = doc.ctx.sqrt_deg_phi().str();
  }
  j["class"] = c.name;
  return j;
}

Json cmd_hilbert(const Options& opt, const Document& doc, const NamedClass& c) {
  const HilbertData h = pnrd_pencil(doc.ctx, c.cls);
  Json j;
  j["q"] = poly_string(h.q);
  j["q_coefficients"] = coefficient_list(h.q);
  const RationalPolynomial hp = opt.rank > 0 ? bundle_hilbert(doc.ctx, BundleClass::make(c.cls, opt.rank)) : h.scaled;
  j["hilbert"] = poly_string(hp);
  j["hilbert_coefficients"] = coefficient_list(hp);
  if (opt.rank > 0) j["rank"] = opt.rank;
  j["roots"] = profile_json(h.profile);
  j["class"] = c.name;
  return j;
}

Json cmd_index(const Options& opt, const Document& doc, const NamedClass& c) {
  const HilbertData h = pnrd_pencil(doc.ctx, c.cls);
  Json j;
  j["i"] = h.profile.positive;
  j["dimK"] = h.profile.zero;
  j["neg"] = doc.ctx.dimension() - h.profile.positive - h.profile.zero;
  if (opt.rank > 0) {
    j["chi"] = bundle_invariants(doc.ctx, BundleClass::make(c.cls, opt.rank)).chi_bundle.str();
    j["rank"] = opt.rank;
  } else {
    j["chi"] = (doc.ctx.sqrt_deg_phi() * h.q.coeff(0)).str();
  }
  j["class"] = c.name;
  return j;
}

Json cmd_vanishing(const Options& opt, const Document& doc, const NamedClass& c) {
  const VanishingRanges v = vanishing_ranges(doc.ctx, c.cls);
  Json j;
  j["g"] = doc.ctx.dimension();
  j["vanish_low"] = v.vanish_low;
  j["vanish_high"] = v.vanish_high;
  if (opt.rank > 0) j["rank"] = opt.rank;
  j["class"] = c.name;
  return j;
}

Json cmd_classify(const Options& opt, const Document& doc, const NamedClass& c) {
  const Classification k = classify(doc.ctx, c.cls);
  Json j;
  j["label"] = k.label;
  j["chi"] = opt.rank > 0 ? bundle_invariants(doc.ctx, BundleClass::make(c.cls, opt.rank)).chi_bundle.str() : k.chi.str();
  j["i"] = k.index_i;
  j["dimK"] = k.dim_k;
  j["j"] = k.weak_index_j;
  if (k.caveat) j["caveat"] = *k.caveat;
  if (k.gv_note) j["gv_note"] = *k.gv_note;
  if (opt.rank > 0) j["rank"] = opt.rank;
  j["class"] = c.name;
  return j;
}

Json cmd_regcont(const Options& opt, const Document& doc, const NamedClass& c) {
  Json j = regularity_json(opt.rank > 0 ? reg_cont_bundle(doc.ctx, BundleClass::make(c.cls, opt.rank))
                                        : reg_cont(doc.ctx, c.cls));
  if (opt.rank > 0) j["rank"] = opt.rank;
  j["class"] = c.name;
  return j;
}

std::vector<Rational> parse_grid(const std::string& text) {
  std::vector<Rational> grid;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    const auto b = item.find_first_not_of(' ');
    const auto e = item.find_last_not_of(' ');
    if (b == std::string::npos) throw UsageError("empty entry in --grid");
    try {
      grid.push_back(Rational::parse(item.substr(b, e - b + 1)));
    } catch (const Error&) {
      throw UsageError("--grid entry '" + item + "' is not a rational");
    }
  }
  if (grid.empty()) throw UsageError("--grid needs at least one value");
  return grid;
}

Json cmd_sweep(const Options& opt, const Loaded& l, const NamedClass& c) {
  if (opt.grid.empty()) throw UsageError("sweep needs --grid");
  if (opt.direction.empty()) throw UsageError("sweep needs --direction");
  const std::vector<Rational> grid = parse_grid(opt.grid);
  const NamedClass* dir = find_in(l.pool, opt.direction);
  if (!dir) dir = l.doc.find(opt.direction);
  if (!dir) bad_input("$.classes", "no class named '" + opt.direction + "'");
  const SymmetricClass gamma0 = opt.rank > 0 ? BundleClass::make(c.cls, opt.rank).gamma : c.cls;
  const SweepResult s = sweep(l.doc.ctx, gamma0, dir->cls, grid);

  Json j;
  j["g"] = l.doc.ctx.dimension();
  Json points = Json::array();
  for (const auto& p : s.points) {
    Json jp;
    jp["s"] = p.s.str();
    if (p.result) jp["m"] = p.result->m;
    if (p.error) jp["error"] = *p.error;
    points.push_back(std::move(jp));
  }
  j["points"] = std::move(points);
  Json segments = Json::array();
  for (const auto& seg : s.segments) {
    Json js;
    js["from"] = seg.from.str();
    js["to"] = seg.to.str();
    js["count"] = seg.count;
    if (seg.m) js["m"] = *seg.m;
    if (seg.error) js["error"] = *seg.error;
    segments.push_back(std::move(js));
  }
  j["segments"] = std::move(segments);
  if (opt.rank > 0) j["rank"] = opt.rank;
  j["class"] = c.name;
  j["direction"] = dir->name;
  return j;
}

Json cmd_oracle_check(const Options& opt, const Loaded& l, bool& agree_all) {
  const auto& ctx = l.doc.ctx;
  if (!oracle::is_split_context(ctx)) {
    throw validation_error("NotSplitContext",
                           "oracle-check needs one field factor over Q with g = 1, identity involution and H = I");
  }
  std::vector<const NamedClass*> targets;
  if (!opt.class_name.empty()) {
    targets.push_back(&pick(l, opt.class_name, "--class"));
  } else {
    for (const auto& c : l.pool) targets.push_back(&c);
  }
  agree_all = true;
  Json results = Json::array();
  for (const NamedClass* c : targets) {
    const oracle::SymMatrix m = oracle::to_sym_matrix(ctx, c->cls);
    const Rational chi = euler_char(ctx, c->cls);
    const RootProfile p = index(ctx, c->cls);
    const RegularityResult r = reg_cont(ctx, c->cls);
    const Rational ochi = oracle::oracle_chi(m) * ctx.sqrt_deg_phi();
    const oracle::Inertia in = oracle::oracle_inertia(m);
    const long oreg = oracle::oracle_regcont(m, r.window_lo, r.window_hi);
    const bool agree = chi == ochi && p.positive == in.minus && p.zero == in.zero && r.m == oreg;
    agree_all = agree_all && agree;
    Json j;
    j["class"] = c->name;
    j["agree"] = agree;
    j["chi"] = chi.str();
    j["oracle_chi"] = ochi.str();
    j["i"] = p.positive;
    j["oracle_n_minus"] = in.minus;
    j["dimK"] = p.zero;
    j["oracle_n_zero"] = in.zero;
    j["regcont"] = r.m;
    j["oracle_regcont"] = oreg;
    results.push_back(std::move(j));
  }
  Json j;
  j["all_agree"] = agree_all;
  j["results"] = std::move(results);
  return j;
}

int execute(const Options& opt, std::ostream& out, std::ostream& err) {
  const Loaded l = load(opt);
  Json result;
  int status = kExitOk;
  if (opt.command == "validate") {
    result = cmd_validate(l);
  } else if (opt.command == "oracle-check") {
    bool agree = true;
    result = cmd_oracle_check(opt, l, agree);
    if (!agree) {
      err << "error: oracle disagreement\n";
      status = kExitComputation;
    }
  } else {
    const NamedClass& c = pick(l, opt.class_name, "--class");
    if (opt.command == "chi") result = cmd_chi(opt, l.doc, c);
    else if (opt.command == "hilbert") result = cmd_hilbert(opt, l.doc, c);
    else if (opt.command == "index") result = cmd_index(opt, l.doc, c);
    else if (opt.command == "vanishing") result = cmd_vanishing(opt, l.doc, c);
    else if (opt.command == "classify") result = cmd_classify(opt, l.doc, c);
    else if (opt.command == "regcont") result = cmd_regcont(opt, l.doc, c);
    else if (opt.command == "sweep") result = cmd_sweep(opt, l, c);
  }
  if (opt.output == "json") {
    out << result.dump() << "\n";
  } else {
    render_table(result, out);
  }
  return status;
}

}  // namespace

const NamedClass* Document::find(const std::string& name) const { return find_in(classes, name); }

ContextDescription parse_variety(const Json& doc) {
  if (!doc.is_object()) bad_input("$", "expected an object");
  const Json& variety = member(doc, "variety", "$");
  ContextDescription d;
  if (variety.contains("sqrt_deg_phi")) d.sqrt_deg_phi = rational_at(variety.at("sqrt_deg_phi"), "$.variety.sqrt_deg_phi");
  const Json& factors = member(variety, "factors", "$.variety");
  if (!factors.is_array() || factors.empty()) bad_input("$.variety.factors", "expected a nonempty array");
  for (size_t i = 0; i < factors.size(); ++i) {
    d.components.push_back(parse_factor(factors[i], "$.variety.factors[" + std::to_string(i) + "]"));
  }
  return d;
}

SymmetricClass parse_class(const VarietyContext& ctx, const Json& value, const std::string& path) {
  const auto& comps = ctx.components();
  std::vector<AlgebraElement> blocks;
  if (value.is_array()) {
    if (value.size() != comps.size()) {
      bad_input(path, "expected " + std::to_string(comps.size()) + " blocks, one per factor");
    }
    for (size_t k = 0; k < comps.size(); ++k) {
      const std::string bp = path + "[" + std::to_string(k) + "]";
      blocks.push_back(AlgebraElement::from_coords(comps[k], block_at(value[k], kind_of(comps[k]), comps[k]->mult_r(), bp)));
    }
  } else if (value.is_object()) {
    for (const auto& [key, unused] : value.items()) {
      if (!ctx.index_of(key)) bad_input(path + "." + key, "no factor named '" + key + "'");
    }
    for (const auto& c : comps) {
      const std::string bp = path + "." + c->name();
      if (!value.contains(c->name())) bad_input(bp, "missing block");
      blocks.push_back(AlgebraElement::from_coords(c, block_at(value.at(c->name()), kind_of(c), c->mult_r(), bp)));
    }
  } else {
    bad_input(path, "expected an array of blocks or an object keyed by factor name");
  }
  try {
    return SymmetricClass::make(ctx, std::move(blocks));
  } catch (const Error& e) {
    throw Error(e.kind(), e.code(), path + ": " + std::string(e.what()).substr(e.code().size() + 2));
  }
}

Document load_document(const Json& doc) {
  Document out{build_context(parse_variety(doc)), {}};
  if (doc.contains("classes")) {
    const Json& classes = doc.at("classes");
    if (!classes.is_object()) bad_input("$.classes", "expected an object of named classes");
    for (const auto& [name, value] : classes.items()) {
      out.classes.push_back({name, parse_class(out.ctx, value, "$.classes." + name)});
    }
  }
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw validation_error("UnreadableInput", path + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw validation_error("MalformedJson", path + ": " + e.what());
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact reduced-norm polynomials, indices and continuous regularity", "pnrd"};
  app.require_subcommand(1);
  Options opt;

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"validate", "validate the variety and its classes"},
      {"chi", "Euler characteristic"},
      {"hilbert", "Hilbert polynomial and root profile"},
      {"index", "index, dim K and negative-root count"},
      {"vanishing", "forced cohomology vanishing"},
      {"classify", "IT / WIT label and weak index"},
      {"regcont", "continuous Castelnuovo-Mumford regularity"},
      {"sweep", "regularity along a ray gamma0 + s * delta"},
      {"oracle-check", "compare against the symmetric-matrix oracle"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sc = app.add_subcommand(name, help);
    sc->add_option("--input", opt.input, "input JSON document")->required();
    sc->add_option("--class", opt.class_name, "class name");
    sc->add_option("--class-file", opt.class_file, "JSON file holding classes");
    sc->add_option("--output", opt.output, "json or table")->check(CLI::IsMember({"json", "table"}));
    if (name != "validate" && name != "oracle-check") {
      sc->add_option("--rank", opt.rank, "treat the class as det of a bundle of this rank")
          ->check(CLI::PositiveNumber);
    }
    if (name == "sweep") {
      sc->add_option("--grid", opt.grid, "comma-separated rationals")->required();
      sc->add_option("--direction", opt.direction, "class name of delta")->required();
    }
    sc->callback([&opt, name = name] { opt.command = name; });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    return execute(opt, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::Validation ? kExitValidation : kExitComputation;
  }
}

}  // namespace pnrd::cli
