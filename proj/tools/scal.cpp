// Command-line driver for the scaling pipelines.
#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "scal/report.hpp"

namespace {

using namespace scal;

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kVerdict = 2;

struct Options {
  std::string command;
  std::string domain;
  std::string family;
  std::string base;
  std::string modifier;
  std::string out = ".";
  std::vector<std::string> boxes;
  int order = 0;
  long jmin = 1;
  long jmax = 100;
  int grid = 21;
  double tol = 1e-8;
  std::size_t tail = 10;
};

void require(const std::string &value, const char *flag) {
  if (value.empty()) {
    throw Error(std::string("missing required option ") + flag);
  }
}

struct Output {
  std::filesystem::path dir;

  void write(const std::string &name, const std::string &text) const {
    std::filesystem::create_directories(dir);
    write_text_file((dir / name).string(), text);
  }
  void json(const std::string &name, const Json &j) const { write(name, dump(j)); }
};

ModelDomain domain_with_order(const Options &o) {
  require(o.domain, "--domain");
  ModelDomain D = load_domain(o.domain);
  if (o.order > 0) {
    return ModelDomain(D.rho(), o.order, D.premap());
  }
  return D;
}

std::vector<CompactBox> boxes(const Options &o) {
  std::vector<CompactBox> out;
  for (const auto &b : o.boxes) {
    out.push_back(parse_box(b));
  }
  if (out.empty()) {
    out.emplace_back();
  }
  return out;
}

GridSpec grid(const Options &o) {
  GridSpec g;
  g.samples = o.grid;
  g.validate();
  return g;
}

struct Run {
  ScalingRun run;
  Json context;
};

Run scaling_run(const Options &o) {
  const ModelDomain D = domain_with_order(o);
  require(o.family, "--family");
  require(o.base, "--base");
  if (o.jmin < 1 || o.jmax < o.jmin) {
    throw Error("index range must satisfy 1 <= jmin <= jmax");
  }
  const MapFamily fam = load_family(o.family);
  const Point p = parse_point(o.base);
  const Precentered pc = precenter(D, fam, p);
  PinchukOptions opts;
  opts.premap = pc.premap;
  Run r{pinchuk_run(pc.domain, pc.family, pc.base, index_range(o.jmin, o.jmax), opts), {}};
  r.context = {{"accumulation", to_json(pc.accumulation)},
               {"premap", to_json(pc.premap)},
               {"centered_base", to_json(pc.base)},
               {"order_r", pc.domain.order_r()},
               {"retained", r.run.steps.size()},
               {"excluded", excluded_report(r.run.excluded)}};
  return r;
}

int cmd_center(const Options &o, const Output &out) {
  require(o.base, "--base");
  const ModelDomain D = domain_with_order(o);
  const CenteringResult c = center(D, parse_point(o.base), D.order_r());
  Json j = centering_report(c);
  out.json("center.json", j);
  std::cout << dump(j);
  return kOk;
}

int cmd_type(const Options &o, const Output &out) {
  require(o.base, "--base");
  const ModelDomain D = domain_with_order(o);
  const Json j = {{"type", dangelo_type(D, parse_point(o.base))}, {"order_r", D.order_r()}};
  out.json("type.json", j);
  std::cout << dump(j);
  return kOk;
}

int cmd_pinchuk(const Options &o, const Output &out) {
  const Run r = scaling_run(o);
  out.write("pinchuk.csv", pinchuk_csv(r.run));
  out.json("rho_tilde.json", rho_tilde_report(r.run));
  if (r.run.steps.empty()) {
    Json j = {{"run", r.context}, {"limit", nullptr}};
    out.json("pinchuk.json", j);
    std::cout << dump(j);
    return kVerdict;
  }
  LimitOptions lo;
  lo.tol = o.tol;
  lo.tail = std::min(o.tail, r.run.steps.size());
  const LimitVerdict v = limit_defining(r.run, lo);

  std::vector<long> shown;
  for (std::size_t k : {std::size_t{0}, r.run.steps.size() / 2, r.run.steps.size() - 1}) {
    if (shown.empty() || shown.back() != r.run.steps[k].j) {
      shown.push_back(r.run.steps[k].j);
    }
  }
  out.write("slice.svg", slice_svg(r.run, shown));

  Json j = {{"run", r.context}, {"limit", limit_report(v)}, {"fit_C", to_json(fit_C(r.run))}};
  out.json("pinchuk.json", j);
  std::cout << dump(j);
  return v.kind == LimitKind::Divergent ? kVerdict : kOk;
}

int cmd_frankel(const Options &o, const Output &out) {
  require(o.family, "--family");
  require(o.base, "--base");
  const MapFamily fam = load_family(o.family);
  const FrankelFamily F = frankel_map(fam, parse_point(o.base));
  const FrankelLimit lim = frankel_limit(F);
  Json j = frankel_report(F, lim);
  if (!o.domain.empty()) {
    j["automorphism"] = automorphism_report(verify_automorphism(domain_with_order(o), fam));
  }
  out.json("frankel.json", j);
  std::cout << dump(j);
  return lim.converged ? kOk : kVerdict;
}

int cmd_modified_frankel(const Options &o, const Output &out) {
  require(o.family, "--family");
  require(o.base, "--base");
  require(o.modifier, "--modifier");
  const FrankelFamily F = modified_frankel(load_family(o.family), parse_point(o.base), load_family(o.modifier));
  const FrankelLimit lim = frankel_limit(F);
  Json j = frankel_report(F, lim);
  j["modified_source"] = to_string(F.source);
  out.json("modified_frankel.json", j);
  std::cout << dump(j);
  return lim.converged ? kOk : kVerdict;
}

int cmd_equiv(const Options &o, const Output &out) {
  const Run r = scaling_run(o);
  if (r.run.steps.empty()) {
    throw Error("no retained indices");
  }
  const PipelineResult p = equivalence_pipeline(r.run, boxes(o).front(), grid(o), o.tail, o.tol);
  Json j = {{"run", r.context}, {"pipeline", pipeline_report(p)}};
  bool ok = p.report && p.report->deviation <= o.tol && (!p.report->symbolic || p.report->symbolic_equal);
  j["verdict"] = ok ? "Equivalent" : "Fail";
  out.json("equiv.json", j);
  std::cout << dump(j);
  return ok ? kOk : kVerdict;
}

int cmd_normalcvg(const Options &o, const Output &out) {
  const Run r = scaling_run(o);
  if (r.run.steps.empty()) {
    throw Error("no retained indices");
  }
  LimitOptions lo;
  lo.tol = o.tol;
  lo.tail = std::min(o.tail, r.run.steps.size());
  const LimitVerdict v = limit_defining(r.run, lo);
  Json j = {{"run", r.context}, {"limit", limit_report(v)}};
  if (v.kind == LimitKind::Divergent) {
    j["verdict"] = "Fail";
    out.json("normalcvg.json", j);
    std::cout << dump(j);
    return kVerdict;
  }
  std::vector<RealPoly> seq;
  for (const auto &s : r.run.steps) {
    seq.push_back(s.rho_tilde);
  }
  const NormalConvergenceVerdict nv = normal_convergence_check(seq, v.rho_hat, boxes(o), grid(o), lo.tail);
  j["normal_convergence"] = normal_convergence_report(nv);
  j["verdict"] = nv.pass ? "Pass" : "Fail";
  out.json("normalcvg.json", j);
  std::cout << dump(j);
  return nv.pass ? kOk : kVerdict;
}

int dispatch(const Options &o) {
  const Output out{o.out};
  if (o.command == "center") return cmd_center(o, out);
  if (o.command == "type") return cmd_type(o, out);
  if (o.command == "pinchuk") return cmd_pinchuk(o, out);
  if (o.command == "frankel") return cmd_frankel(o, out);
  if (o.command == "modified-frankel") return cmd_modified_frankel(o, out);
  if (o.command == "equiv") return cmd_equiv(o, out);
  if (o.command == "normalcvg") return cmd_normalcvg(o, out);
  throw Error("unknown command " + o.command);
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Scaling sequences of automorphism orbits on model domains in C^2"};
  Options o;
  app.add_option("command", o.command, "center|type|pinchuk|frankel|modified-frankel|equiv|normalcvg")
      ->required()
      ->check(CLI::IsMember({"center", "type", "pinchuk", "frankel", "modified-frankel", "equiv", "normalcvg"}));
  app.add_option("--domain", o.domain, "domain JSON file");
  app.add_option("--family", o.family, "automorphism family JSON file");
  app.add_option("--base", o.base, "base point \"re,im;re,im\" as (w;z)");
  app.add_option("--order", o.order, "order r of the centering (defaults to the domain file)");
  app.add_option("--jmin", o.jmin, "first index")->capture_default_str();
  app.add_option("--jmax", o.jmax, "last index")->capture_default_str();
  app.add_option("--modifier", o.modifier, "modifier family JSON file");
  app.add_option("--box", o.boxes, "compact box \"re,im;re,im;h[,h,h,h]\" (repeatable)");
  app.add_option("--grid", o.grid, "samples per real axis")->capture_default_str();
  app.add_option("--tol", o.tol, "tolerance for limits and deviations")->capture_default_str();
  app.add_option("--tail", o.tail, "Cauchy tail length")->capture_default_str();
  app.add_option("--out", o.out, "output directory")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    std::cout << dump({{"status", "error"}, {"error", "UsageError"}, {"message", e.what()}});
    return kError;
  }

  try {
    return dispatch(o);
  } catch (const std::exception &e) {
    const Json report = error_report(e);
    std::cout << dump(report);
    try {
      Output{o.out}.json("error.json", report);
    } catch (const std::exception &) {
    }
    return kError;
  }
}
