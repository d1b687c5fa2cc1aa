#include "scal/io.hpp"

#include <fstream>
#include <sstream>

namespace scal {

namespace {

Json rational_json(const Rational &q) { return format_rational(q); }

Rational rational_from_json(const Json &j) {
  if (j.is_string()) {
    return parse_rational(j.get<std::string>());
  }
  if (j.is_number_integer()) {
    return Rational(j.get<long>());
  }
  throw ParseError("expected an exact rational, got " + j.dump());
}

double double_from_json(const Json &j) {
  if (j.is_number()) {
    return j.get<double>();
  }
  if (j.is_string()) {
    return parse_rational(j.get<std::string>()).get_d();
  }
  throw ParseError("expected a number, got " + j.dump());
}

const Json &field(const Json &j, const char *key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field \"") + key + "\" in " + j.dump());
  }
  return j.at(key);
}

std::vector<std::string> split(const std::string &text, char sep) {
  std::vector<std::string> out;
  std::string part;
  std::istringstream is(text);
  while (std::getline(is, part, sep)) {
    out.push_back(part);
  }
  if (!text.empty() && text.back() == sep) {
    out.emplace_back();
  }
  return out;
}

std::string trim(const std::string &s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string::npos) {
    return "";
  }
  return s.substr(first, s.find_last_not_of(" \t") - first + 1);
}

Scalar complex_from_text(const std::string &text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) {
    throw ParseError("expected \"re,im\", got \"" + text + "\"");
  }
  return Scalar(Gauss(parse_rational(trim(parts[0])), parse_rational(trim(parts[1]))));
}

template <typename K, typename Read> TriangularMap<K> triangular_from_json(const Json &j, Read read) {
  TriangularMap<K> m;
  m.alpha = read(field(j, "alpha"));
  m.beta = read(field(j, "beta"));
  m.gamma = j.contains("gamma") ? read(j.at("gamma")) : K(0);
  std::vector<K> f;
  if (j.contains("f")) {
    for (const auto &t : j.at("f")) {
      const int k = field(t, "degree").get<int>();
      if (k < 0) {
        throw ParseError("negative degree in f");
      }
      if (static_cast<int>(f.size()) <= k) {
        f.resize(static_cast<std::size_t>(k) + 1, K(0));
      }
      f[static_cast<std::size_t>(k)] += read(field(t, "coeff"));
    }
  }
  m.f = UniPoly<K>(std::move(f));
  if (detail::coeff_is_zero(m.alpha) || detail::coeff_is_zero(m.beta)) {
    throw SingularLinear("alpha and beta must be nonzero");
  }
  return m;
}

template <typename K> Json triangular_json(const TriangularMap<K> &m) {
  Json f = Json::array();
  for (std::size_t k = 0; k < m.f.coeffs().size(); ++k) {
    if (!detail::coeff_is_zero(m.f.coeffs()[k])) {
      f.push_back({{"degree", k}, {"coeff", to_json(m.f.coeffs()[k])}});
    }
  }
  return {{"alpha", to_json(m.alpha)}, {"f", f}, {"beta", to_json(m.beta)}, {"gamma", to_json(m.gamma)}};
}

} // namespace

Json to_json(const Gauss &g) { return {{"re", rational_json(g.re)}, {"im", rational_json(g.im)}}; }

Json to_json(const Scalar &s) {
  if (s.is_exact()) {
    return to_json(s.exact());
  }
  return {{"re", s.real_part()}, {"im", s.imag_part()}};
}

Scalar scalar_from_json(const Json &j) {
  if (j.is_object()) {
    const Json &re = j.contains("re") ? j.at("re") : Json(0);
    const Json &im = j.contains("im") ? j.at("im") : Json(0);
    if (re.is_number_float() || im.is_number_float()) {
      return Scalar::numeric(double_from_json(re), double_from_json(im));
    }
    return Scalar(Gauss(rational_from_json(re), rational_from_json(im)));
  }
  if (j.is_number_float()) {
    return Scalar::numeric(j.get<double>());
  }
  return Scalar(rational_from_json(j));
}

Json to_json(const ParamRational &q) {
  Json num = Json::array();
  Json den = Json::array();
  for (const auto &c : q.num().coeffs()) {
    num.push_back(to_json(c));
  }
  for (const auto &c : q.den().coeffs()) {
    den.push_back(to_json(c));
  }
  return {{"num", num}, {"den", den}, {"text", to_string(q)}};
}

ParamRational param_from_json(const Json &j) {
  auto poly = [](const Json &arr) {
    std::vector<Gauss> cs;
    for (const auto &c : arr) {
      cs.push_back(scalar_from_json(c).exact());
    }
    return MuPoly(std::move(cs));
  };
  if (j.is_object() && j.contains("num")) {
    const MuPoly den = j.contains("den") ? poly(j.at("den")) : MuPoly::constant(Gauss(1));
    if (den.is_zero()) {
      throw DivisionByZero("zero denominator in " + j.dump());
    }
    return ParamRational(poly(j.at("num")), den);
  }
  return ParamRational(scalar_from_json(j).exact());
}

Json to_json(const Exponent &e) { return Json::array({e.a, e.b, e.c, e.d}); }

Json to_json(const RealPoly &p) {
  Json out = Json::array();
  for (const auto &[e, c] : p.terms()) {
    Json t = to_json(c);
    t["a"] = e.a;
    t["b"] = e.b;
    t["c"] = e.c;
    t["d"] = e.d;
    out.push_back(t);
  }
  return out;
}

RealPoly real_poly_from_json(const Json &j) {
  if (!j.is_array()) {
    throw ParseError("polynomial must be a list of monomials");
  }
  RealPoly p;
  for (const auto &t : j) {
    Exponent e;
    e.a = t.value("a", 0);
    e.b = t.value("b", 0);
    e.c = t.value("c", 0);
    e.d = t.value("d", 0);
    if (e.a < 0 || e.b < 0 || e.c < 0 || e.d < 0) {
      throw ParseError("negative exponent in " + t.dump());
    }
    p.add_term(e, scalar_from_json(t));
  }
  return p;
}

Json to_json(const HoloPoly &h) {
  Json out = Json::array();
  for (const auto &c : h.coeffs()) {
    out.push_back(to_json(c));
  }
  return out;
}

HoloPoly holo_from_json(const Json &j) {
  std::vector<Scalar> cs;
  for (const auto &c : j) {
    cs.push_back(scalar_from_json(c));
  }
  return HoloPoly(std::move(cs));
}

Json to_json(const ElementaryMap &e) {
  if (const auto *t = std::get_if<Translate>(&e)) {
    return {{"map", "translate"}, {"w", to_json(t->t.w)}, {"z", to_json(t->t.z)}};
  }
  if (const auto *l = std::get_if<Linear>(&e)) {
    Json m = Json::array();
    for (const auto &c : l->m.m) {
      m.push_back(to_json(c));
    }
    return {{"map", "linear"}, {"m", m}};
  }
  return {{"map", "shear"}, {"h", to_json(std::get<ShearW>(e).h)}};
}

ElementaryMap elementary_from_json(const Json &j) {
  const std::string tag = field(j, "map").get<std::string>();
  if (tag == "translate") {
    return Translate{{scalar_from_json(field(j, "w")), scalar_from_json(field(j, "z"))}};
  }
  if (tag == "linear") {
    const Json &m = field(j, "m");
    if (!m.is_array() || m.size() != 4) {
      throw ParseError("linear map needs 4 entries in row-major order");
    }
    Matrix2 out;
    for (std::size_t k = 0; k < 4; ++k) {
      out.m[k] = scalar_from_json(m[k]);
    }
    if (out.det().is_zero()) {
      throw SingularLinear("linear map is singular");
    }
    return Linear{out};
  }
  if (tag == "shear") {
    return ShearW{holo_from_json(field(j, "h"))};
  }
  throw ParseError("unknown map tag \"" + tag + "\"");
}

Json to_json(const MapWord &w) {
  Json out = Json::array();
  for (const auto &e : w.maps) {
    out.push_back(to_json(e));
  }
  return out;
}

MapWord word_from_json(const Json &j) {
  MapWord w;
  for (const auto &e : j) {
    w.maps.push_back(elementary_from_json(e));
  }
  return w;
}

Json to_json(const MapTerm &t) { return to_string(t); }

Json to_json(const TriangularPolyMap &m) { return triangular_json(m); }
Json to_json(const MapFamily &m) { return triangular_json(m); }

TriangularPolyMap map_from_json(const Json &j) { return triangular_from_json<Scalar>(j, scalar_from_json); }
MapFamily family_from_json(const Json &j) { return triangular_from_json<ParamRational>(j, param_from_json); }

Json to_json(const Point &p) { return {{"w", to_json(p.w)}, {"z", to_json(p.z)}}; }

Json read_json_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open " + path);
  }
  try {
    return Json::parse(in);
  } catch (const Json::exception &e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_text_file(const std::string &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot write " + path);
  }
  out << text;
  if (!out) {
    throw IoError("write failed for " + path);
  }
}

ModelDomain domain_from_json(const Json &j) {
  RealPoly rho = real_poly_from_json(field(j, "rho"));
  if (auto bad = rho.reality_violation()) {
    throw DetailedError(RealityViolation("coefficients at " + to_string(*bad) + " and " +
                                         to_string(bad->reflected()) + " are not conjugate"),
                        {{"exponents", Json::array({to_json(*bad), to_json(bad->reflected())})}});
  }
  std::optional<MapWord> premap;
  if (j.contains("premap") && !j.at("premap").is_null()) {
    premap = word_from_json(j.at("premap"));
  }
  return ModelDomain(std::move(rho), field(j, "order_r").get<int>(), std::move(premap));
}

ModelDomain load_domain(const std::string &path) { return domain_from_json(read_json_file(path)); }

MapFamily load_family(const std::string &path) { return family_from_json(read_json_file(path)); }

Point parse_point(const std::string &text) {
  const auto parts = split(text, ';');
  if (parts.size() != 2) {
    throw ParseError("expected \"re,im;re,im\", got \"" + text + "\"");
  }
  return {complex_from_text(parts[0]), complex_from_text(parts[1])};
}

CompactBox parse_box(const std::string &text) {
  const auto parts = split(text, ';');
  if (parts.size() != 3) {
    throw ParseError("expected \"re,im;re,im;h[,h,h,h]\", got \"" + text + "\"");
  }
  CompactBox box;
  box.center = {complex_from_text(parts[0]), complex_from_text(parts[1])};
  const auto hs = split(parts[2], ',');
  if (hs.size() == 1) {
    box.half_widths.fill(parse_rational(trim(hs[0])).get_d());
  } else if (hs.size() == 4) {
    for (std::size_t k = 0; k < 4; ++k) {
      box.half_widths[k] = parse_rational(trim(hs[k])).get_d();
    }
  } else {
    throw ParseError("box needs 1 or 4 half-widths");
  }
  box.validate();
  return box;
}

} // namespace scal
