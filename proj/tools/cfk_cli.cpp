#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cfk/cfk.hpp"

using json = nlohmann::json;
using namespace cfk;

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

std::string strategy_name(KernelStrategy s) {
  switch (s) {
    case KernelStrategy::automatic: return "auto";
    case KernelStrategy::series: return "series";
    case KernelStrategy::closed_even: return "closed";
    case KernelStrategy::integral: return "integral";
    case KernelStrategy::genfun: return "genfun";
    case KernelStrategy::bruteforce: return "bruteforce";
  }
  return "?";
}

json report_json(int m, double p, const GeometricFrame& f, const std::string& rep,
                 const PlaneValue& v, double err) {
  return json{{"m", m},
              {"p", p},
              {"u", f.u},
              {"v", f.v},
              {"t", f.t},
              {"rep", rep},
              {"scalar_re", v.scalar.real()},
              {"scalar_im", v.scalar.imag()},
              {"bivec_re", v.bivector_coeff.real()},
              {"bivec_im", v.bivector_coeff.imag()},
              {"err_est", err}};
}

void print_plane(const PlaneValue& v, double err) {
  std::cout << "scalar = " << fmt(v.scalar.real()) << " + " << fmt(v.scalar.imag()) << "i\n"
            << "bivec  = " << fmt(v.bivector_coeff.real()) << " + "
            << fmt(v.bivector_coeff.imag()) << "i\n"
            << "err_est = " << fmt(err) << "\n";
}

cplx parse_complex(const std::string& s) {
  double re = 0, im = 0;
  if (std::sscanf(s.c_str(), "%lf,%lf", &re, &im) < 1)
    throw CLI::ValidationError("--s", "expected RE or RE,IM");
  return {re, im};
}

int run_eval(int m, double p, bool have_uv, double u, double v, std::vector<double> xv,
             std::vector<double> yv, const std::string& rep, bool as_json) {
  GeometricFrame f;
  if (have_uv) {
    f = GeometricFrame::from_uv(u, v);
  } else {
    if (static_cast<int>(xv.size()) != m || static_cast<int>(yv.size()) != m) {
      std::cerr << "eval: --x/--y need " << m << " components each\n";
      return 2;
    }
    f = frame_of(xv, yv);
  }
  KernelRequest req;
  req.m = m;
  req.p = p;
  req.frame = f;
  static const std::map<std::string, KernelStrategy> reps{
      {"auto", KernelStrategy::automatic},     {"series", KernelStrategy::series},
      {"closed", KernelStrategy::closed_even}, {"integral", KernelStrategy::integral},
      {"genfun", KernelStrategy::genfun},      {"bruteforce", KernelStrategy::bruteforce}};
  auto it = reps.find(rep);
  if (it == reps.end()) {
    std::cerr << "eval: unknown representation '" << rep << "'\n";
    return 2;
  }
  req.strategy = it->second;
  auto res = kernel(req);
  std::string used = strategy_name(res.used == KernelStrategy::automatic && req.strategy != KernelStrategy::automatic
                                       ? req.strategy
                                       : res.used);
  if (req.strategy == KernelStrategy::automatic && res.used == KernelStrategy::automatic)
    used = "auto";
  if (as_json) {
    std::cout << report_json(m, p, f, used, res.value, res.err_est).dump(2) << "\n";
  } else {
    std::cout << "rep = " << used << "\n";
    print_plane(res.value, res.err_est);
  }
  return 0;
}

int run_validate(int m, double p, int trials, unsigned seed, double tmax) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  bool std_angle = std::abs(p - M_PI / 2) <= 1e-12;
  double worst = 0;
  std::string worst_pair = "none";
  for (int i = 0; i < trials; ++i) {
    double t = 0.05 + (tmax - 0.05) * unif(rng);
    double u = t * (2.0 * unif(rng) - 1.0);
    double v = std::sqrt(t * t - u * u);
    GeometricFrame f{u, v, t};
    std::vector<std::pair<std::string, PlaneValue>> vals;
    if (m == 2) {
      vals.emplace_back("dim2", kernel_dim2(p, f));
      vals.emplace_back("genfun", genfun_closed(p, f, cplx(0.0)));
    } else {
      vals.emplace_back("series", kernel_series(m, p, f));
      if (std_angle) {
        vals.emplace_back("integral", kernel_integral(m, f, gauss_legendre(64)));
        if (m % 4 == 0)
          vals.emplace_back("closed", kernel_closed_even(m, f, ClosedEvenMode::corrected));
      }
      if (m % 2 == 0 && m <= 12) {
        auto coeffs = genfun_coeffs(p, f, m / 2 - 1);
        vals.emplace_back("genfun", coeffs[m / 2 - 1]);
      }
    }
    if (t <= 1.5) {
      std::vector<double> x, y;
      detail::frame_vectors(m, f, x, y);
      vals.emplace_back("bruteforce", kernel_bruteforce(m, p, x, y, 30));
    }
    for (std::size_t a = 0; a < vals.size(); ++a)
      for (std::size_t b = a + 1; b < vals.size(); ++b) {
        double d = vals[a].second.dist(vals[b].second);
        if (d > worst) {
          worst = d;
          worst_pair = vals[a].first + " vs " + vals[b].first;
        }
      }
  }
  std::cout << "trials = " << trials << ", worst pair: " << worst_pair << " = " << fmt(worst)
            << "\n";
  return worst <= 1e-8 ? 0 : 1;
}

int run_coeffs(double p, double u, double v, int max_m, bool as_json) {
  if (max_m < 2 || max_m % 2 != 0) {
    std::cerr << "coeffs: --max-m must be an even integer >= 2\n";
    return 2;
  }
  auto f = GeometricFrame::from_uv(u, v);
  auto coeffs = genfun_coeffs(p, f, max_m / 2 - 1);
  json arr = json::array();
  for (int j = 0; j < static_cast<int>(coeffs.size()); ++j) {
    int m = 2 * j + 2;
    if (as_json) {
      arr.push_back(report_json(m, p, f, "genfun", coeffs[j], 0.0));
    } else {
      std::cout << "m = " << m << ":\n";
      print_plane(coeffs[j], 0.0);
    }
  }
  if (as_json) std::cout << arr.dump(2) << "\n";
  return 0;
}

int run_laplace(int m, double p, const std::string& s_str, double u, double v) {
  cplx s = parse_complex(s_str);
  auto f = GeometricFrame::from_uv(u, v);
  auto L = laplace_kernel(m, p, s, f, LaplaceVariant::oscillatory);
  auto N = numeric_laplace_check(m, p, s, f);
  std::cout << "closed form:\n";
  print_plane(L, 0.0);
  std::cout << "quadrature:\n";
  print_plane(N, 0.0);
  double d = L.dist(N);
  std::cout << "distance = " << fmt(d) << "\n";
  return d <= 1e-5 ? 0 : 1;
}

int run_transform(const std::string& input, double p, const std::string& targets_path,
                  const std::string& out_path) {
  json in, tj;
  {
    std::ifstream is(input);
    if (!is) {
      std::cerr << "transform: cannot open " << input << "\n";
      return 2;
    }
    is >> in;
  }
  {
    std::ifstream is(targets_path);
    if (!is) {
      std::cerr << "transform: cannot open " << targets_path << "\n";
      return 2;
    }
    is >> tj;
  }
  int m = in.at("dim").get<int>();
  int order = in.at("grid_order").get<int>();
  const json& channels = in.at("channels");
  auto f = SampledFunction::sample(m, order, [&](const std::vector<double>& x) {
    Multivector<cplx> val(m);
    for (auto it = channels.begin(); it != channels.end(); ++it) {
      std::size_t blade = std::stoul(it.key());
      if (blade >= val.size()) throw std::runtime_error("channel blade index out of range");
      const json& chan = it.value();
      double r2 = 0;
      for (double c : x) r2 += c * c;
      double cv = 1.0;
      if (chan.value("gaussian", false)) cv *= std::exp(-0.5 * r2);
      if (chan.contains("coordinate")) {
        int axis = chan["coordinate"].get<int>();
        if (axis < 0 || axis >= m) throw std::runtime_error("channel coordinate axis out of range");
        cv *= x[axis];
      }
      if (chan.contains("poly")) {
        double poly = 0, pw = 1;
        for (double c : chan["poly"].get<std::vector<double>>()) {
          poly += c * pw;
          pw *= r2;
        }
        cv *= poly;
      }
      val[blade] += cv;
    }
    return val;
  });
  std::vector<std::vector<double>> targets;
  for (const auto& y : tj.at("targets")) targets.push_back(y.get<std::vector<double>>());
  auto out = cft_apply(f, p, targets);
  json values = json::array();
  for (const auto& mvv : out) {
    json re = json::array(), im = json::array();
    for (std::size_t b = 0; b < mvv.size(); ++b) {
      re.push_back(mvv[b].real());
      im.push_back(mvv[b].imag());
    }
    values.push_back(json{{"re", re}, {"im", im}});
  }
  json result{{"dim", m}, {"p", p}, {"targets", tj.at("targets")}, {"values", values}};
  if (out_path.empty() || out_path == "-") {
    std::cout << result.dump(2) << "\n";
  } else {
    std::ofstream os(out_path);
    if (!os) {
      std::cerr << "transform: cannot write " << out_path << "\n";
      return 2;
    }
    os << result.dump(2) << "\n";
  }
  return 0;
}

int run_grid(int m, double p, double umin, double umax, double vmin, double vmax, int nu, int nv,
             const std::string& out_base) {
  if (nu < 2 || nv < 2) {
    std::cerr << "grid: need --nu and --nv >= 2\n";
    return 2;
  }
  std::vector<std::vector<PlaneValue>> cells(nu);
  for (int i = 0; i < nu; ++i) {
    double u = umin + (umax - umin) * i / (nu - 1.0);
    for (int j = 0; j < nv; ++j) {
      double v = vmin + (vmax - vmin) * j / (nv - 1.0);
      KernelRequest req;
      req.m = m;
      req.p = p;
      req.frame = GeometricFrame::from_uv(u, v);
      cells[i].push_back(kernel(req).value);
    }
  }
  struct Component {
    const char* name;
    double (*get)(const PlaneValue&);
  };
  const Component comps[] = {
      {"scalar_re", [](const PlaneValue& v) { return v.scalar.real(); }},
      {"scalar_im", [](const PlaneValue& v) { return v.scalar.imag(); }},
      {"bivec_re", [](const PlaneValue& v) { return v.bivector_coeff.real(); }},
      {"bivec_im", [](const PlaneValue& v) { return v.bivector_coeff.imag(); }},
  };
  for (const auto& comp : comps) {
    std::string path = out_base + "_" + comp.name + ".csv";
    std::ofstream os(path);
    if (!os) {
      std::cerr << "grid: cannot write " << path << "\n";
      return 2;
    }
    for (int i = 0; i < nu; ++i) {
      for (int j = 0; j < nv; ++j) os << (j ? "," : "") << fmt(comp.get(cells[i][j]));
      os << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fractional plane-deformed Fourier kernel toolkit"};
  app.require_subcommand(1);

  int m = 2;
  double p = M_PI / 2;
  double u = 0, v = 0;
  std::vector<double> xv, yv;
  std::string rep = "auto";
  bool as_json = false;

  auto* eval = app.add_subcommand("eval", "evaluate the kernel at one frame");
  eval->add_option("--m", m, "dimension")->required();
  eval->add_option("--p", p, "deformation angle");
  auto* ou = eval->add_option("--u", u, "inner product (x,y)");
  auto* ov = eval->add_option("--v", v, "wedge norm |x^y|");
  auto* ox = eval->add_option("--x", xv, "first vector components");
  auto* oy = eval->add_option("--y", yv, "second vector components");
  ov->needs(ou);
  ox->needs(oy);
  ou->excludes(ox);
  eval->add_option("--rep", rep, "auto|series|closed|integral|genfun|bruteforce");
  eval->add_flag("--json", as_json, "emit JSON");

  int trials = 50;
  unsigned seed = 1;
  double tmax = 2.0;
  auto* validate = app.add_subcommand("validate", "cross-check all applicable representations");
  validate->add_option("--m", m, "dimension")->required();
  validate->add_option("--p", p, "deformation angle");
  validate->add_option("--trials", trials, "number of random frames");
  validate->add_option("--seed", seed, "random seed");
  validate->add_option("--tmax", tmax, "largest |x||y|");

  int max_m = 8;
  auto* coeffs = app.add_subcommand("coeffs", "generating-function kernel coefficients");
  coeffs->add_option("--p", p, "deformation angle");
  coeffs->add_option("--u", u, "inner product")->required();
  coeffs->add_option("--v", v, "wedge norm")->required();
  coeffs->add_option("--max-m", max_m, "largest even dimension");
  coeffs->add_flag("--json", as_json, "emit JSON");

  std::string s_str = "3";
  auto* laplace = app.add_subcommand("laplace", "closed Laplace-domain form vs quadrature");
  laplace->add_option("--m", m, "dimension")->required();
  laplace->add_option("--p", p, "deformation angle");
  laplace->add_option("--s", s_str, "transform variable RE or RE,IM")->required();
  laplace->add_option("--u", u, "inner product")->required();
  laplace->add_option("--v", v, "wedge norm")->required();

  std::string input, targets_path, out_path;
  auto* transform = app.add_subcommand("transform", "apply the transform to a sampled function");
  transform->add_option("--input", input, "function JSON")->required();
  transform->add_option("--p", p, "deformation angle");
  transform->add_option("--targets", targets_path, "targets JSON")->required();
  transform->add_option("--out", out_path, "output JSON path, - for stdout");

  double umin = -1, umax = 1, vmin = 0, vmax = 1;
  int nu = 21, nv = 21;
  std::string out_base = "grid";
  auto* grid = app.add_subcommand("grid", "kernel heatmap data as CSV");
  grid->add_option("--m", m, "dimension")->required();
  grid->add_option("--p", p, "deformation angle");
  grid->add_option("--umin", umin, "smallest u");
  grid->add_option("--umax", umax, "largest u");
  grid->add_option("--vmin", vmin, "smallest v");
  grid->add_option("--vmax", vmax, "largest v");
  grid->add_option("--nu", nu, "points along u");
  grid->add_option("--nv", nv, "points along v");
  grid->add_option("--out", out_base, "output base name, one CSV per component");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (eval->parsed()) return run_eval(m, p, ou->count() > 0, u, v, xv, yv, rep, as_json);
    if (validate->parsed()) return run_validate(m, p, trials, seed, tmax);
    if (coeffs->parsed()) return run_coeffs(p, u, v, max_m, as_json);
    if (laplace->parsed()) return run_laplace(m, p, s_str, u, v);
    if (transform->parsed()) return run_transform(input, p, targets_path, out_path);
    if (grid->parsed()) return run_grid(m, p, umin, umax, vmin, vmax, nu, nv, out_base);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
