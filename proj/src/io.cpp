#include "psc/io.hpp"

#include "psc/catalog.hpp"
#include "psc/torus_group.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <tuple>

namespace psc::io {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) fail(std::string("missing field '") + name + "'");
  return j.at(name);
}

double number(const Json& j, const std::string& what) {
  if (!j.is_number()) fail(what + " must be a number");
  return j.get<double>();
}

std::size_t index(const Json& j, std::size_t dim, const std::string& what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) fail(what + " must be a non-negative integer");
  const auto i = j.get<std::size_t>();
  if (i >= dim) fail(what + " out of range");
  return i;
}

Vector vector_of(const Json& j, std::size_t dim, const std::string& what) {
  if (!j.is_array() || j.size() != dim)
    fail(what + " must be an array of " + std::to_string(dim) + " numbers");
  Vector v(static_cast<Eigen::Index>(dim));
  for (std::size_t i = 0; i < dim; ++i) v[static_cast<Eigen::Index>(i)] = number(j[i], what);
  return v;
}

Json vector_json(const Vector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

Json matrix_rows(const Matrix& m) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) out.push_back(vector_json(m.row(r).transpose()));
  return out;
}

Json basis_rows(const Subspace& s) {
  Json out = Json::array();
  for (std::size_t i = 0; i < s.dim(); ++i) out.push_back(vector_json(s.basis_vector(i)));
  return out;
}

Json optional_number(const std::optional<double>& x) {
  return x ? Json(*x) : Json(nullptr);
}

}  // namespace

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str());
}

LieAlgebra parse_algebra(const Json& j) {
  if (j.is_string()) return catalog_algebra(j.get<std::string>());
  if (!j.is_object()) fail("G must be an object");
  if (j.contains("catalog")) {
    if (!j["catalog"].is_string()) fail("catalog name must be a string");
    return catalog_algebra(j["catalog"].get<std::string>());
  }
  const Json& dim_json = field(j, "dim");
  if (!dim_json.is_number_integer() || dim_json.get<long long>() < 1) fail("dim must be a positive integer");
  const auto dim = dim_json.get<std::size_t>();
  const std::string label = j.contains("label") && j["label"].is_string() ? j["label"].get<std::string>() : "custom";

  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, double> given;
  if (j.contains("structure_constants")) {
    const Json& sc = j["structure_constants"];
    if (!sc.is_array()) fail("structure_constants must be an array");
    for (const auto& e : sc) {
      if (!e.is_array() || e.size() != 4) fail("structure constant entries are [i, j, k, value]");
      given[{index(e[0], dim, "i"), index(e[1], dim, "j"), index(e[2], dim, "k")}] =
          number(e[3], "structure constant");
    }
  }
  LieAlgebra g(dim, label);
  for (const auto& [key, v] : given) {
    const auto [a, b, c] = key;
    g.set_constant(a, b, c, v);
    if (!given.count({b, a, c})) g.set_constant(b, a, c, -v);
  }
  return g;
}

SubgroupDescriptor parse_subgroup(const Json& j, std::size_t dim) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "trivial" || s == "e") return SubgroupDescriptor::trivial(dim);
    if (s == "full" || s == "G") return SubgroupDescriptor::connected(Subspace::full(dim));
    fail("unknown subgroup shorthand '" + s + "'");
  }
  if (!j.is_object()) fail("subgroup must be an object or \"trivial\"/\"full\"");
  Subspace algebra(dim);
  if (j.contains("basis")) {
    const Json& b = j["basis"];
    if (!b.is_array()) fail("basis must be an array of vectors");
    Matrix m(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(b.size()));
    for (std::size_t c = 0; c < b.size(); ++c) m.col(static_cast<Eigen::Index>(c)) = vector_of(b[c], dim, "basis vector");
    algebra = Subspace::span(dim, m);
    if (algebra.dim() != b.size()) fail("basis vectors are linearly dependent");
  }
  std::vector<Vector> gens;
  if (j.contains("finite_generators")) {
    const Json& g = j["finite_generators"];
    if (!g.is_array()) fail("finite_generators must be an array of vectors");
    for (const auto& v : g) gens.push_back(vector_of(v, dim, "finite generator"));
  }
  SubgroupDescriptor out;
  out.algebra = std::move(algebra);
  if (j.contains("components")) {
    if (!j["components"].is_number_integer() || j["components"].get<long long>() < 1)
      fail("components must be a positive integer");
    out.component_count = j["components"].get<int>();
  } else if (!gens.empty()) {
    try {
      out.component_count = static_cast<int>(subgroup_order(gens, dim));
    } catch (const std::invalid_argument& e) {
      fail(std::string("finite_generators: ") + e.what());
    }
  }
  out.finite_generators = std::move(gens);
  return out;
}

ClassifyInput parse_classify_input(const Json& j) {
  if (!j.is_object()) fail("input must be a JSON object");
  if (j.contains("catalog")) {
    if (!j["catalog"].is_string()) fail("catalog name must be a string");
    auto entry = catalog_lookup(j["catalog"].get<std::string>());
    if (auto* d = std::get_if<GroupDiagram>(&entry)) return std::move(*d);
    if (auto* p = std::get_if<HomogeneousPair>(&entry)) return std::move(*p);
    throw UnknownCatalogEntry("catalog entry '" + j["catalog"].get<std::string>() +
                              "' is a Lie algebra, not a diagram or homogeneous pair");
  }
  const Json& kind_json = field(j, "kind");
  if (!kind_json.is_string()) fail("kind must be a string");
  const auto kind_name = kind_json.get<std::string>();

  LieAlgebra g = parse_algebra(field(j, "G"));
  const std::size_t n = g.dim();
  SubgroupDescriptor h = j.contains("H") ? parse_subgroup(j["H"], n) : SubgroupDescriptor::trivial(n);

  if (kind_name == "homogeneous") return HomogeneousPair{std::move(g), std::move(h)};

  const auto kind = orbit_space_from_string(kind_name);
  if (!kind) fail("unknown kind '" + kind_name + "'");
  GroupDiagram d;
  d.group = std::move(g);
  d.principal = std::move(h);
  switch (*kind) {
    case OrbitSpace::Circle: {
      CircleShape c;
      if (j.contains("monodromy") && !j["monodromy"].is_null()) {
        const Json& m = j["monodromy"];
        if (!m.is_array() || m.size() != n) fail("monodromy must be a square matrix of size dim G");
        Matrix a(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
        for (std::size_t r = 0; r < n; ++r)
          a.row(static_cast<Eigen::Index>(r)) = vector_of(m[r], n, "monodromy row").transpose();
        c.monodromy = std::move(a);
      }
      d.shape = std::move(c);
      break;
    }
    case OrbitSpace::Interval:
      d.shape = IntervalShape{parse_subgroup(field(j, "K_minus"), n), parse_subgroup(field(j, "K_plus"), n)};
      break;
    case OrbitSpace::Line:
      d.shape = LineShape{};
      break;
    case OrbitSpace::Ray:
      d.shape = RayShape{parse_subgroup(field(j, "K"), n)};
      break;
  }
  return d;
}

Json to_json(const LieAlgebra& g) {
  Json sc = Json::array();
  for (const auto& c : g.nonzero_constants()) sc.push_back({c.i, c.j, c.k, c.value});
  return {{"dim", g.dim()}, {"label", g.label()}, {"structure_constants", std::move(sc)}};
}

Json to_json(const SubgroupDescriptor& s) {
  Json gens = Json::array();
  for (const auto& v : s.finite_generators) gens.push_back(vector_json(v));
  return {{"basis", basis_rows(s.algebra)}, {"components", s.component_count}, {"finite_generators", std::move(gens)}};
}

Json to_json(const GroupDiagram& d) {
  Json out = {{"kind", std::string(to_string(d.kind()))}, {"G", to_json(d.group)}, {"H", to_json(d.principal)}};
  std::visit(overloaded{
                 [&](const CircleShape& c) {
                   if (c.monodromy) out["monodromy"] = matrix_rows(*c.monodromy);
                 },
                 [&](const IntervalShape& iv) {
                   out["K_minus"] = to_json(iv.k_minus);
                   out["K_plus"] = to_json(iv.k_plus);
                 },
                 [](const LineShape&) {},
                 [&](const RayShape& r) { out["K"] = to_json(r.k); },
             },
             d.shape);
  return out;
}

Json to_json(const HomogeneousPair& p) {
  return {{"kind", "homogeneous"}, {"G", to_json(p.group)}, {"H", to_json(p.isotropy)}};
}

Json to_json(const Verdict& v) {
  Json out;
  out["psc"] = v.psc;
  out["n"] = v.n;
  if (v.flat_type) {
    out["flat_type"] = std::string(to_string(v.flat_type->family));
    out["flat_name"] = v.flat_type->name();
  } else {
    out["flat_type"] = nullptr;
  }
  Json statements = Json::array();
  for (const auto& s : v.statements)
    statements.push_back({{"id", s.id}, {"applicable", s.applicable}, {"value", s.value ? Json(*s.value) : Json(nullptr)}});
  out["statements"] = std::move(statements);
  if (v.witness) {
    out["witness"] = std::visit(
        overloaded{
            [](const BracketWitness& w) {
              return Json{{"type", "bracket"},        {"space", w.space},
                          {"role", w.role},           {"x", vector_json(w.x)},
                          {"y", vector_json(w.y)},    {"bracket", vector_json(w.bracket)},
                          {"sec_lower_bound", w.sec_lower_bound}};
            },
            [](const SliceWitness& w) { return Json{{"type", "slice"}, {"role", w.role}, {"dim", w.dim}}; },
        },
        *v.witness);
  } else {
    out["witness"] = nullptr;
  }
  out["notes"] = v.notes;
  return out;
}

Json to_json(const warp::WarpProfile& p) {
  return {{"variant", std::string(warp::to_string(p.kind))},
          {"a", p.a},
          {"b", p.b},
          {"c", p.c},
          {"d", p.dims},
          {"t0", p.t0},
          {"t1", p.t1},
          {"epsilon", p.epsilon},
          {"lambdas", p.lambdas},
          {"kappas", p.kappas},
          {"delta", p.delta},
          {"t_max", p.t_max}};
}

Json to_json(const CurvatureReport& r) {
  Json functions = Json::array();
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& f = r.functions[i];
    Json fj = {{"index", i}, {"active", f.active}, {"built", f.built}};
    if (f.built) {
      fj["max_second_derivative"] = f.max_second_derivative;
      fj["nonnegative_second_derivative_points"] = f.nonnegative_second_derivative;
      fj["strictly_concave"] = f.strictly_concave;
      fj["f_min"] = f.f_min;
      fj["f_max"] = f.f_max;
      fj["f_in_unit_interval"] = f.f_in_unit_interval;
      fj["slope_at_zero"] = f.slope_at_zero;
    }
    functions.push_back(std::move(fj));
  }
  return {{"grid_size", r.grid_size},
          {"tol", r.tol},
          {"minima",
           {{"ric_t", r.min_ric_t},
            {"ric_0", optional_number(r.min_ric[0])},
            {"ric_1", optional_number(r.min_ric[1])},
            {"ric_2", optional_number(r.min_ric[2])}}},
          {"uniform_lower_bound", r.uniform_lower_bound},
          {"nonnegative", r.nonnegative},
          {"uniformly_positive", r.uniformly_positive},
          {"ordered", r.ordered},
          {"functions", std::move(functions)}};
}

Json to_json(const OracleReport& r) {
  Json out = {{"passed", r.passed()},
              {"derivatives",
               {{"points", r.derivatives.points},
                {"max_first_error", r.derivatives.max_first_error},
                {"max_second_error", r.derivatives.max_second_error},
                {"worst_t", r.derivatives.worst_t},
                {"tol", r.derivative_tol},
                {"passed", r.derivatives.passed}}}};
  if (r.abelian.applicable) {
    out["abelian"] = {{"points", r.abelian.points},
                      {"max_ric_t_error", r.abelian.max_ric_t_error},
                      {"fiber_compared", r.abelian.fiber_compared},
                      {"max_ric_2_error", r.abelian.max_ric_2_error},
                      {"tol", r.ricci_tol},
                      {"passed", r.abelian.passed}};
  } else {
    out["abelian"] = nullptr;
  }
  return out;
}

ProfileRequest parse_profile_request(const Json& j, ProfileRequest req) {
  if (!j.is_object()) fail("profile parameters must be a JSON object");
  if (j.contains("variant")) {
    if (!j["variant"].is_string()) fail("variant must be a string");
    req.variant = j["variant"].get<std::string>();
  }
  auto read = [&](const char* name, double& target) {
    if (j.contains(name)) target = number(j[name], name);
  };
  read("a", req.params.a);
  read("b", req.params.b);
  read("c", req.params.c);
  read("epsilon", req.params.epsilon);
  read("t_max", req.params.t_max);
  if (j.contains("delta")) req.delta = number(j["delta"], "delta");
  if (j.contains("d")) {
    const Json& d = j["d"];
    if (!d.is_array() || d.size() != 3) fail("d must be an array [d0, d1, d2]");
    for (std::size_t i = 0; i < 3; ++i) {
      if (!d[i].is_number_integer()) fail("d entries must be integers");
      req.params.dims[i] = d[i].get<int>();
    }
  }
  return req;
}

warp::WarpProfile build_profile(const ProfileRequest& req) {
  if (req.variant == "gz") {
    const auto p = warp::build_gz_profile(req.params);
    return warp::smooth_profile(p, req.delta.value_or(0.01 * req.params.c));
  }
  if (req.variant == "modified") {
    const auto p = warp::build_modified_profile(req.params);
    return warp::smooth_profile(p, req.delta.value_or(req.params.epsilon / 5.0));
  }
  throw warp::ProfileError("unknown variant '" + req.variant + "' (expected gz or modified)");
}

std::vector<double> sample_points(const warp::WarpProfile& p, std::size_t grid_size) {
  std::vector<double> ts{0.0};
  for (std::size_t k = 1; k <= grid_size; ++k)
    ts.push_back(p.t_max * static_cast<double>(k) / static_cast<double>(grid_size));
  for (const auto& f : p.functions)
    for (double b : f.breakpoints())
      if (b <= p.t_max) ts.push_back(b);
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  return ts;
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_samples_csv(std::ostream& out, const warp::WarpProfile& p, std::size_t grid_size) {
  out << "t,F0,F1,F2,dF0,dF1,dF2,ric_t,ric_0,ric_1,ric_2\n";
  const double nan = std::nan("");
  for (double t : sample_points(p, grid_size)) {
    const warp::ProfileJet jet = warp::eval_profile(p, t);
    const RicciSample s = ric_functions(p, t);
    out << format_double(t);
    for (std::size_t i = 0; i < 3; ++i) out << ',' << format_double(p.active(i) ? jet[i].value : nan);
    for (std::size_t i = 0; i < 3; ++i) out << ',' << format_double(p.active(i) ? jet[i].d1 : nan);
    out << ',' << format_double(s.ric_t);
    for (std::size_t i = 0; i < 3; ++i) out << ',' << format_double(s.ric[i].value_or(nan));
    out << '\n';
  }
}

}  // namespace psc::io
