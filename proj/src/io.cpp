#include "superleib/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace superleib::io {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error("malformed_file", what); }

const Json& member(const Json& j, const char* key, const std::string& ctx) {
  if (!j.is_object() || !j.contains(key)) malformed(ctx + ": missing \"" + key + "\"");
  return j.at(key);
}

std::string as_string(const Json& j, const std::string& ctx) {
  if (!j.is_string()) malformed(ctx + ": expected a string");
  return j.get<std::string>();
}

std::size_t lookup(const SuperSpace& space, const std::string& label) {
  auto k = space.index_of(label);
  if (!k) throw Error("unknown_label", "unknown label \"" + label + "\" in " + space.name);
  return *k;
}

Scalar scalar_of(const Json& j, const std::string& ctx) {
  // Plain JSON integers are accepted too; floats never.
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (!j.is_string()) throw Error("malformed_scalar", ctx + ": scalars are \"p/q\" strings");
  try {
    return parse_scalar(j.get<std::string>());
  } catch (const Error& e) {
    throw Error("malformed_scalar", ctx + ": " + e.what());
  }
}

SuperSpace parse_basis(const Json& j, const std::string& name) {
  const Json& basis = member(j, "basis", name);
  if (!basis.is_array() || basis.empty()) malformed(name + ": basis must be a nonempty list");
  std::vector<Parity> parities;
  std::vector<std::string> labels;
  std::set<std::string> seen;
  for (const auto& b : basis) {
    std::string label = as_string(member(b, "label", name), name + ": basis label");
    if (!seen.insert(label).second) throw Error("duplicate_label", name + ": duplicate label \"" + label + "\"");
    const Json& p = member(b, "parity", name + ": " + label);
    if (!p.is_number_integer() || (p.get<int>() != 0 && p.get<int>() != 1))
      malformed(name + ": parity of \"" + label + "\" must be 0 or 1");
    labels.push_back(label);
    parities.push_back(parity_of(p.get<int>()));
  }
  return SuperSpace(name, std::move(parities), std::move(labels));
}

Json basis_to_json(const SuperSpace& s) {
  Json out = Json::array();
  for (std::size_t i = 0; i < s.dim(); ++i) out.push_back({{"label", s.labels[i]}, {"parity", bit(s.parity(i))}});
  return out;
}

std::filesystem::path resolve(const std::filesystem::path& bundle, const Json& j, const std::string& ctx) {
  std::filesystem::path p = as_string(j, ctx);
  return p.is_absolute() ? p : bundle.parent_path() / p;
}

std::size_t natural(const Json& j, const std::string& ctx) {
  if (!j.is_number_integer() || j.get<long>() < 0) malformed(ctx + ": expected a natural number");
  return j.get<std::size_t>();
}

void expect_kind(const Json& j, const std::string& kind, const std::string& ctx) {
  if (as_string(member(j, "kind", ctx), ctx + ": kind") != kind)
    throw Error("wrong_kind", ctx + ": expected kind \"" + kind + "\"");
}

const SuperSpace& k_line() {
  static const SuperSpace s("K", {Parity::even}, {"1"});
  return s;
}

}  // namespace

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("io_error", "cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error("parse_error", path.string() + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + e.what());
  }
}

SparseVector parse_vector(const Json& j, const SuperSpace& space) {
  if (!j.is_object()) malformed(space.name + ": expected a {label: scalar} object");
  SparseVector v(space.dim());
  for (const auto& [label, c] : j.items()) v.add(lookup(space, label), scalar_of(c, space.name + "." + label));
  return v;
}

Json vector_to_json(const SparseVector& v, const SuperSpace& space) {
  Json out = Json::object();
  for (const auto& [k, c] : v) out[space.labels.at(k)] = to_string(c);
  return out;
}

BilinearProduct parse_table(const Json& j, const SuperSpace& left, const SuperSpace& right, const SuperSpace& out) {
  BilinearProduct p(left.dim(), right.dim(), out.dim());
  if (!j.is_array()) malformed("product tables are lists of [i, j, {k: scalar}]");
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 3) malformed("table entry must be [i_label, j_label, {k_label: scalar}]");
    std::size_t a = lookup(left, as_string(e[0], "table entry"));
    std::size_t b = lookup(right, as_string(e[1], "table entry"));
    SparseVector v = parse_vector(e[2], out);
    for (const auto& [k, c] : v) p.add(a, b, k, c);
  }
  return p;
}

Json table_to_json(const BilinearProduct& p, const SuperSpace& left, const SuperSpace& right, const SuperSpace& out) {
  Json t = Json::array();
  for (std::size_t i = 0; i < p.left_dim(); ++i)
    for (std::size_t j = 0; j < p.right_dim(); ++j)
      if (!p.get(i, j).is_zero()) t.push_back({left.labels[i], right.labels[j], vector_to_json(p.get(i, j), out)});
  return t;
}

Algebra parse_algebra(const Json& j) {
  const std::string name = j.is_object() && j.contains("name") ? as_string(j.at("name"), "name") : "unnamed";
  const std::string kind = as_string(member(j, "kind", name), name + ": kind");
  SuperSpace space = parse_basis(j, name);
  const Json& products = member(j, "products", name);
  if (kind == "leibniz") {
    if (j.contains("unit")) malformed(name + ": a Leibniz algebra has no unit");
    return LeibnizSuperalgebra(space, parse_table(member(products, "bracket", name), space, space, space));
  }
  if (kind != "dialgebra") malformed(name + ": kind must be \"dialgebra\" or \"leibniz\"");
  BilinearProduct left = parse_table(member(products, "left", name), space, space, space);
  BilinearProduct right = parse_table(member(products, "right", name), space, space, space);
  std::optional<SparseVector> unit;
  if (j.contains("unit")) {
    const Json& u = j.at("unit");
    unit = u.is_string() ? SparseVector::unit(space.dim(), lookup(space, u.get<std::string>())) : parse_vector(u, space);
  }
  return SuperDialgebra(std::move(space), std::move(left), std::move(right), std::move(unit));
}

Algebra load_algebra(const std::filesystem::path& path) { return parse_algebra(read_json(path)); }

SuperDialgebra load_dialgebra(const std::filesystem::path& path) {
  Algebra a = load_algebra(path);
  if (!std::holds_alternative<SuperDialgebra>(a)) throw Error("wrong_kind", path.string() + " is not a dialgebra");
  return std::get<SuperDialgebra>(std::move(a));
}

LeibnizSuperalgebra load_leibniz(const std::filesystem::path& path) {
  Algebra a = load_algebra(path);
  if (!std::holds_alternative<LeibnizSuperalgebra>(a))
    throw Error("wrong_kind", path.string() + " is not a Leibniz algebra");
  return std::get<LeibnizSuperalgebra>(std::move(a));
}

Json to_json(const SuperDialgebra& d) {
  Json out{{"kind", "dialgebra"},
           {"name", d.name()},
           {"basis", basis_to_json(d.space)},
           {"products",
            {{"left", table_to_json(d.left, d.space, d.space, d.space)},
             {"right", table_to_json(d.right, d.space, d.space, d.space)}}}};
  if (d.bar_unit) {
    const SparseVector& u = *d.bar_unit;
    if (u.nnz() == 1 && u.leading_coeff() == 1)
      out["unit"] = d.space.labels[u.leading_index()];
    else
      out["unit"] = vector_to_json(u, d.space);
  }
  return out;
}

Json to_json(const LeibnizSuperalgebra& l) {
  return {{"kind", "leibniz"},
          {"name", l.name()},
          {"basis", basis_to_json(l.space)},
          {"products", {{"bracket", table_to_json(l.bracket, l.space, l.space, l.space)}}}};
}

LinearMap load_linear_map(const std::filesystem::path& path, const SuperSpace& space) {
  Json j = read_json(path);
  const std::string ctx = path.string();
  expect_kind(j, "linear_map", ctx);
  std::vector<SparseVector> cols(space.dim(), SparseVector(space.dim()));
  const Json& images = member(j, "images", ctx);
  if (!images.is_object()) malformed(ctx + ": images must be an object");
  for (const auto& [label, v] : images.items()) cols[lookup(space, label)] = parse_vector(v, space);
  return LinearMap(std::move(cols), space.dim(), space.dim());
}

NamedVectors load_subspace(const std::filesystem::path& path, const SuperSpace& space) {
  Json j = read_json(path);
  const std::string ctx = path.string();
  expect_kind(j, "subspace", ctx);
  const Json& vecs = member(j, "vectors", ctx);
  if (!vecs.is_object()) malformed(ctx + ": vectors must be an object");
  NamedVectors out{Subspace(space.dim()), {}};
  for (const auto& [name, v] : vecs.items()) {
    SparseVector x = parse_vector(v, space);
    out.span.insert(x);
    out.named.emplace(name, std::move(x));
  }
  return out;
}

namespace {

LeibnizSuperalgebra optional_d(const std::filesystem::path& path, const Json& j) {
  return j.contains("D") ? load_leibniz(resolve(path, j.at("D"), "D")) : zero_leibniz();
}

}  // namespace

CoordinateDataA load_model_a(const std::filesystem::path& path) {
  Json j = read_json(path);
  const std::string ctx = path.string();
  expect_kind(j, "model_a", ctx);
  SuperDialgebra a = load_dialgebra(resolve(path, member(j, "A", ctx), "A"));
  LeibnizSuperalgebra d = optional_d(path, j);
  CoordinateDataA data =
      make_coordinate_data(natural(member(j, "p", ctx), "p"), natural(member(j, "q", ctx), "q"), a, d);
  if (j.contains("phi")) data.phi = parse_table(j.at("phi"), d.space, a.space, a.space);
  if (j.contains("form")) data.form = parse_table(j.at("form"), a.space, a.space, d.space);
  if (j.contains("rho")) data.rho = parse_table(j.at("rho"), a.space, d.space, a.space);
  validate(data);
  return data;
}

CoordinateDataK load_model_kappa(const std::filesystem::path& path) {
  Json j = read_json(path);
  const std::string ctx = path.string();
  expect_kind(j, "model_kappa", ctx);
  const Json& gj = member(j, "g", ctx);
  std::optional<SpecialLinear> sl;
  LeibnizSuperalgebra g;
  if (gj.is_object()) {
    const Json& pq = member(gj, "sl", ctx + ": g");
    if (!pq.is_array() || pq.size() != 2) malformed(ctx + ": g.sl must be [p, q]");
    sl.emplace(natural(pq[0], "p"), natural(pq[1], "q"));
    g = sl->algebra();
  } else {
    g = load_leibniz(resolve(path, gj, "g"));
  }
  const Json& kj = member(j, "kappa", ctx);
  BilinearProduct kappa;
  if (kj.is_string()) {
    if (kj.get<std::string>() != "supertrace" || !sl) malformed(ctx + ": \"supertrace\" needs g = {\"sl\": [p, q]}");
    kappa = supertrace_form(*sl);
  } else {
    kappa = parse_table(kj, g.space, g.space, k_line());
  }
  SuperDialgebra a = load_dialgebra(resolve(path, member(j, "A", ctx), "A"));
  LeibnizSuperalgebra d = optional_d(path, j);
  bool central = false;
  if (j.contains("central")) {
    if (!j.at("central").is_boolean()) malformed(ctx + ": central must be true or false");
    central = j.at("central").get<bool>();
  }
  CoordinateDataK data = make_kappa_data(g, kappa, a, d, central);
  if (j.contains("phi")) data.phi = parse_table(j.at("phi"), d.space, a.space, a.space);
  if (j.contains("form")) data.form = parse_table(j.at("form"), a.space, a.space, d.space);
  validate(data);
  return data;
}

SteinbergInput load_steinberg_map(const std::filesystem::path& path, const LeibnizSuperalgebra& l) {
  Json j = read_json(path);
  const std::string ctx = path.string();
  expect_kind(j, "steinberg_map", ctx);
  SteinbergInput out{load_dialgebra(resolve(path, member(j, "coefficients", ctx), "coefficients")), {}};
  const Json& images = member(j, "images", ctx);
  if (!images.is_array()) malformed(ctx + ": images must be a list");
  for (const auto& e : images) {
    if (!e.is_array() || e.size() != 4) malformed(ctx + ": image entry must be [i, j, a_label, {label: scalar}]");
    std::size_t i = natural(e[0], "i"), k = natural(e[1], "j");
    std::size_t a = lookup(out.coefficients.space, as_string(e[2], "a_label"));
    out.map[{i, k, a}] = parse_vector(e[3], l.space);
  }
  return out;
}

Json to_json(const ViolationReport& r, const SuperSpace* space) {
  Json vs = Json::array();
  auto vec = [&](const SparseVector& v) {
    if (space && v.dim() == space->dim()) return vector_to_json(v, *space);
    Json o = Json::object();
    for (const auto& [k, c] : v) o[std::to_string(k)] = to_string(c);
    return o;
  };
  for (const auto& v : r.violations) vs.push_back({{"indices", v.indices}, {"lhs", vec(v.lhs)}, {"rhs", vec(v.rhs)}});
  return {{"identity", r.identity_name},
          {"passed", r.passed},
          {"checked", r.checked_count},
          {"violation_count", r.violation_count},
          {"violations", vs}};
}

Json to_json(const ConditionReport& r) {
  Json cs = Json::array();
  for (const auto& [name, rep] : r.conditions) {
    Json c = to_json(rep);
    c["condition"] = name;
    cs.push_back(std::move(c));
  }
  return {{"passed", r.passed}, {"conditions", cs}};
}

Json to_json(const WeightDecomposition& d, const SuperSpace& space) {
  Json ws = Json::array();
  for (const auto& [w, s] : d.weights) {
    Json basis = Json::array();
    for (const auto& v : s.basis()) basis.push_back(vector_to_json(v, space));
    ws.push_back({{"weight", format_weight(w)}, {"dim", s.dim()}, {"basis", basis}});
  }
  return {{"complete", d.complete},
          {"diagnostic", d.diagnostic},
          {"nonzero_weights", d.nonzero_count()},
          {"zero_space_dim", d.zero_space().dim()},
          {"weights", ws}};
}

Json to_json(const GradingCertificate& c, const SuperSpace& space) {
  Json fs = Json::array();
  for (const auto& f : c.failures) fs.push_back({{"condition", f.condition}, {"message", f.message}, {"witnesses", f.witnesses}});
  return {{"graded", c.is_graded},
          {"root_count", c.root_count},
          {"zero_space_dim", c.zero_space_dim},
          {"failures", fs},
          {"decomposition", to_json(c.decomposition, space)}};
}

}  // namespace superleib::io
