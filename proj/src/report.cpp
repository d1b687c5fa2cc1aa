#include "scal/report.hpp"

#include <array>
#include <cstdio>
#include <sstream>

namespace scal {

namespace {

Json terms_json(const std::vector<MapTerm> &ts) {
  Json out = Json::array();
  for (const auto &t : ts) {
    out.push_back(to_json(t));
  }
  return out;
}

Json scalars_json(const std::vector<Scalar> &xs) {
  Json out = Json::array();
  for (const auto &x : xs) {
    out.push_back(to_json(x));
  }
  return out;
}

Json numeric_point_json(const NumericPoint &p) {
  return {{"w", {{"re", p[0].real()}, {"im", p[0].imag()}}}, {"z", {{"re", p[1].real()}, {"im", p[1].imag()}}}};
}

std::string fixed(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

} // namespace

std::string dump(const Json &j) { return j.dump(2) + "\n"; }

Json error_report(const std::exception &e) {
  Json out = {{"status", "error"}, {"message", e.what()}};
  if (const auto *err = dynamic_cast<const Error *>(&e)) {
    out["error"] = err->kind();
  } else {
    out["error"] = "Error";
  }
  if (const auto *d = dynamic_cast<const DetailedError *>(&e)) {
    out["detail"] = d->detail();
  }
  if (const auto *ix = dynamic_cast<const IndexedError *>(&e)) {
    out["index"] = ix->index();
  }
  return out;
}

Json centering_report(const CenteringResult &c) {
  Json h = Json::array();
  for (const auto &x : c.h) {
    h.push_back(to_json(x));
  }
  return {{"psi_word", to_json(c.psi_word)},
          {"P", to_json(c.P)},
          {"R", to_json(c.R)},
          {"Q", to_json(c.Q_materialized())},
          {"c", to_json(c.c)},
          {"b", to_json(c.b)},
          {"scale", to_json(c.scale)},
          {"h", h},
          {"text", {{"P", to_string(c.P)}, {"R", to_string(c.R)}, {"Q", to_string(c.Q_materialized())}}}};
}

Json automorphism_report(const AutomorphismVerdict &v) {
  Json out = {{"is_automorphism", v.is_automorphism}, {"warning", v.warning}};
  if (v.is_automorphism) {
    out["lambda"] = to_json(v.lambda);
  }
  if (v.witness) {
    out["witness"] = to_json(*v.witness);
  }
  Json mm = Json::array();
  for (const auto &e : v.mismatches) {
    mm.push_back(to_json(e));
  }
  out["mismatches"] = mm;
  return out;
}

Json frankel_report(const FrankelFamily &F, const FrankelLimit &limit) {
  Json omega = Json::array();
  for (const auto &[term, value] : coefficients(F.omega)) {
    omega.push_back({{"monomial", to_json(term)}, {"value", to_json(value)}});
  }
  Json div = Json::array();
  for (const auto &[term, value] : limit.divergent) {
    div.push_back({{"monomial", to_json(term)}, {"value", to_json(value)}});
  }
  Json out = {{"omega", omega},
              {"omega_text", to_string(F.omega)},
              {"base", {{"w", to_json(F.base.w)}, {"z", to_json(F.base.z)}}},
              {"singular_locus", to_string(F.singular_locus)},
              {"verdict", limit.converged ? "Converged" : "Divergent"},
              {"divergent", div}};
  if (limit.converged) {
    out["limit"] = to_json(limit.limit);
    out["limit_text"] = to_string(limit.limit);
  }
  return out;
}

Json limit_report(const LimitVerdict &v) {
  Json out = {{"verdict", to_string(v.kind)},
              {"rho_hat", to_json(v.rho_hat)},
              {"rho_hat_text", to_string(v.rho_hat)},
              {"P_hat", to_json(v.P_hat)},
              {"checks",
               {{"subharmonic", v.checks.subharmonic},
                {"nonzero", v.checks.nonzero},
                {"degree_ok", v.checks.degree_ok},
                {"harmonic_free", v.checks.harmonic_free}}},
              {"indices", v.indices},
              {"witness_trace", scalars_json(v.witness_trace)}};
  if (v.witness) {
    out["witness"] = to_json(*v.witness);
  }
  return out;
}

Json map_limit_report(const MapLimit &m) {
  Json out = {{"verdict", m.cauchy ? "Cauchy" : "Divergent"},
              {"bound", m.bound},
              {"divergent", terms_json(m.divergent)},
              {"trace", scalars_json(m.trace)}};
  if (m.cauchy) {
    out["limit"] = to_json(m.limit);
    out["limit_text"] = to_string(m.limit);
  }
  if (m.witness) {
    out["witness"] = to_json(*m.witness);
  }
  return out;
}

Json bridge_report(const BridgeAffine &b) {
  return {{"indices", b.js},
          {"base_residual", b.base_residual},
          {"vanishes_at_base", b.vanishes_at_base},
          {"limit", map_limit_report(b.limit)},
          {"nonsingular", b.nonsingular},
          {"matches_expected", b.matches_expected}};
}

Json pipeline_report(const PipelineResult &p) {
  Json out = {{"omega", map_limit_report(p.omega)},
              {"sigma", map_limit_report(p.sigma)},
              {"psi", map_limit_report(p.psi)},
              {"bridge", bridge_report(p.bridge)}};
  if (p.report) {
    out["equivalence"] = {{"symbolic", p.report->symbolic},
                          {"symbolic_equal", p.report->symbolic_equal},
                          {"mismatches", terms_json(p.report->mismatches)},
                          {"deviation", p.report->deviation}};
  } else {
    out["equivalence"] = nullptr;
  }
  return out;
}

Json normal_convergence_report(const NormalConvergenceVerdict &v) {
  Json out = {{"verdict", v.pass ? "Pass" : "Fail"},
              {"tolerance", v.tolerance},
              {"points_checked", v.points_checked}};
  if (!v.pass) {
    out["failed_condition"] = v.failed_condition;
    out["witness"] = numeric_point_json(v.witness);
    out["witness_value"] = v.witness_value;
    if (v.witness_index >= 0) {
      out["witness_index"] = v.witness_index;
    }
  }
  return out;
}

Json excluded_report(const std::vector<ExcludedIndex> &excluded) {
  Json out = Json::array();
  for (const auto &x : excluded) {
    out.push_back({{"j", x.j}, {"kind", x.kind}, {"message", x.message}});
  }
  return out;
}

std::string csv_real(const Scalar &s) {
  if (s.is_exact()) {
    return format_rational(s.exact().re);
  }
  return format_double(s.real_part());
}

namespace {

std::string csv_imag(const Scalar &s) {
  if (s.is_exact()) {
    return format_rational(s.exact().im);
  }
  return format_double(s.imag_part());
}

} // namespace

std::string pinchuk_csv(const ScalingRun &run) {
  std::ostringstream os;
  os << "j,re_p,im_p,re_w_p,im_w_p,re_q,im_q,re_w_q,im_w_q,epsilon,delta,re_c,im_c,type\n";
  for (const auto &s : run.steps) {
    os << s.j << ',' << csv_real(s.p_j.z) << ',' << csv_imag(s.p_j.z) << ',' << csv_real(s.p_j.w) << ','
       << csv_imag(s.p_j.w) << ',' << csv_real(s.q_j.z) << ',' << csv_imag(s.q_j.z) << ',' << csv_real(s.q_j.w)
       << ',' << csv_imag(s.q_j.w) << ',' << csv_real(s.epsilon) << ',' << csv_real(s.delta) << ','
       << csv_real(s.c) << ',' << csv_imag(s.c) << ',' << s.type_at_q << '\n';
  }
  return os.str();
}

Json rho_tilde_report(const ScalingRun &run) {
  Json steps = Json::array();
  for (const auto &s : run.steps) {
    steps.push_back({{"j", s.j},
                     {"rho_tilde", to_json(s.rho_tilde)},
                     {"rho_tilde_text", to_string(s.rho_tilde)},
                     {"sigma", to_json(normal_form(s.sigma))}});
  }
  return {{"order_r", run.order_r}, {"steps", steps}, {"excluded", excluded_report(run.excluded)}};
}

std::string slice_svg(const ScalingRun &run, const std::vector<long> &js, const SliceView &view) {
  static const std::array<const char *, 6> palette = {"#1f77b4", "#d62728", "#2ca02c",
                                                      "#9467bd", "#ff7f0e", "#17becf"};
  const double size = 480.0;
  const int n = view.cells;
  auto sx = [&](double re_z) { return (re_z - view.re_z_min) / (view.re_z_max - view.re_z_min) * size; };
  auto sy = [&](double re_w) { return size - (re_w - view.re_w_min) / (view.re_w_max - view.re_w_min) * size; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size + 30
     << "\" viewBox=\"0 0 " << size << ' ' << size + 30 << "\">\n";
  os << "<rect width=\"" << size << "\" height=\"" << size << "\" fill=\"white\" stroke=\"black\"/>\n";
  os << "<text x=\"4\" y=\"" << size + 20 << "\" font-size=\"12\">horizontal Re z, vertical Re w</text>\n";

  std::size_t colour = 0;
  for (long j : js) {
    const ScalingStep *s = run.find(j);
    if (!s) {
      continue;
    }
    const NumericPoly rho(s->rho_tilde);
    std::vector<double> val(static_cast<std::size_t>((n + 1) * (n + 1)));
    auto x_at = [&](int i) { return view.re_z_min + (view.re_z_max - view.re_z_min) * i / n; };
    auto y_at = [&](int k) { return view.re_w_min + (view.re_w_max - view.re_w_min) * k / n; };
    for (int i = 0; i <= n; ++i) {
      for (int k = 0; k <= n; ++k) {
        val[static_cast<std::size_t>(i * (n + 1) + k)] = rho({std::complex<double>(y_at(k), 0.0),
                                                              std::complex<double>(x_at(i), 0.0)});
      }
    }
    auto v = [&](int i, int k) { return val[static_cast<std::size_t>(i * (n + 1) + k)]; };

    std::string path;
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < n; ++k) {
        const std::array<std::array<int, 2>, 4> corner = {{{i, k}, {i + 1, k}, {i + 1, k + 1}, {i, k + 1}}};
        std::vector<std::pair<double, double>> hits;
        for (std::size_t e = 0; e < 4; ++e) {
          const auto &a = corner[e];
          const auto &b = corner[(e + 1) % 4];
          const double va = v(a[0], a[1]);
          const double vb = v(b[0], b[1]);
          if ((va < 0.0) == (vb < 0.0)) {
            continue;
          }
          const double t = va / (va - vb);
          hits.emplace_back(x_at(a[0]) + t * (x_at(b[0]) - x_at(a[0])), y_at(a[1]) + t * (y_at(b[1]) - y_at(a[1])));
        }
        for (std::size_t h = 0; h + 1 < hits.size(); h += 2) {
          path += "M" + fixed(sx(hits[h].first)) + " " + fixed(sy(hits[h].second)) + "L" +
                  fixed(sx(hits[h + 1].first)) + " " + fixed(sy(hits[h + 1].second));
        }
      }
    }
    const char *c = palette[colour++ % palette.size()];
    os << "<path d=\"" << path << "\" fill=\"none\" stroke=\"" << c << "\" stroke-width=\"1.5\"/>\n";
    os << "<text x=\"" << 300 + 40 * ((colour - 1) % 4) << "\" y=\"" << size + 20 << "\" font-size=\"12\" fill=\""
       << c << "\">j=" << j << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

} // namespace scal
