// Command-line surface for constructing, certifying, evaluating, and
// rendering Swiss cheese sets.
//
// Exit codes: 0 success / all checks pass, 2 usage or validation error,
// 3 certification or budget failure, 4 resource cap.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fromage/certify.hpp"
#include "fromage/cheese.hpp"
#include "fromage/korner.hpp"
#include "fromage/serialize.hpp"
#include "fromage/svg.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace fromage;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitCertification = 3;
constexpr int kExitResourceCap = 4;

Complex parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw InvalidInput("expected 're,im', got '" + text + "'");
  }
  try {
    return Complex(std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1)));
  } catch (const std::exception&) {
    throw InvalidInput("cannot parse complex value '" + text + "'");
  }
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot open output file " + path);
  out << content;
}

std::uint64_t covering_cap_from_env() {
  if (const char* env = std::getenv("FROMAGE_MAX_DISCS")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw InvalidInput("FROMAGE_MAX_DISCS is not a valid integer");
    }
  }
  return InstantiateOptions{}.covering_cap;
}

// Seeded points of the closed unit disc, or an explicit 're,im;re,im' list.
std::vector<Complex> resolve_points(const std::string& points_arg, std::uint64_t seed) {
  std::vector<Complex> points;
  if (points_arg.find(',') == std::string::npos) {
    std::size_t count = 0;
    try {
      count = std::stoull(points_arg);
    } catch (const std::exception&) {
      throw InvalidInput("--points must be a count or a 're,im;re,im' list");
    }
    if (count == 0) throw InvalidInput("--points count must be positive");
    SeededRng rng(SeededRng::derive(seed, 777));
    points.reserve(count);
    for (std::size_t i = 0; i < count; ++i) points.push_back(rng.in_disc({0, 0}, 1.0));
    return points;
  }
  std::stringstream stream(points_arg);
  std::string item;
  while (std::getline(stream, item, ';')) {
    if (!item.empty()) points.push_back(parse_complex(item));
  }
  if (points.empty()) throw InvalidInput("--points list is empty");
  return points;
}

struct ConstructArgs {
  double r = 0.5;
  int levels = 20;
  std::string mode = "symbolic";
  double eps = 0.4;
  double eta = 1.0;
  double kappa = 1.0;
  int level = 1;
  std::string points = "25";
  std::uint64_t seed = 7;
  std::string output;
};

int run_construct(const ConstructArgs& args) {
  if (!(args.r > 0.0)) throw InvalidInput("--r must be positive");
  const Constants consts = Constants::compute();
  InstantiateOptions opts;
  opts.covering_cap = covering_cap_from_env();
  opts.kappa = args.kappa;

  CheesePlan plan;
  InstantiateMode mode;
  if (args.mode == "symbolic") {
    plan = plan_cheese(args.r, args.levels, consts);
    mode = SymbolicMode{};
  } else if (args.mode == "demo") {
    plan = demo_plan(args.r, args.eps, args.eta, consts);
    mode = DemoMode{args.eps, args.eta};
  } else if (args.mode == "witness") {
    plan = demo_plan(args.r, args.eps, args.eta, consts);
    mode = WitnessMode{args.level, resolve_points(args.points, args.seed)};
  } else {
    throw InvalidInput("--mode must be symbolic, witness, or demo");
  }

  const Cheese cheese = instantiate(plan, mode, consts, opts);
  const double bound = total_radius_bound(cheese);

  Json doc;
  doc["config"] = Json{{"command", "construct"}, {"r", args.r},
                       {"levels", args.levels},  {"mode", args.mode},
                       {"eps", args.eps},        {"eta", args.eta},
                       {"kappa", args.kappa},    {"alpha", kDefaultAlpha},
                       {"seed", args.seed},      {"covering_cap", opts.covering_cap}};
  doc["total_radius_bound"] = bound;
  doc["budget_certified"] = bound < args.r;
  const Json cheese_doc = Json::parse(cheese_to_json(cheese));
  for (const auto& [key, value] : cheese_doc.items()) doc[key] = value;
  write_output(args.output, doc.dump(2) + "\n");

  if (!(bound < args.r)) {
    std::cerr << "budget " << bound << " is not below r = " << args.r << "\n";
    return kExitCertification;
  }
  return kExitOk;
}

struct CertifyArgs {
  double eps = 0.4;
  double eta = 1.0;
  double kappa = 1.0;
  std::size_t grid = 2000;
  std::uint64_t seed = 7;
  std::string a = "0,0";
  std::string output;
};

int run_certify(const CertifyArgs& args) {
  const Constants consts = Constants::compute();
  KornerParams params = KornerParams::with_eps(args.eps);
  params.kappa = args.kappa;
  const KornerFamily family = build_family(params);

  SampleSpec spec;
  spec.count = args.grid;
  spec.seed = args.seed;

  Certificate cert = check_conditions(family, spec, consts);
  const LocalUnit unit = make_local_unit(
      std::make_shared<const KornerFamily>(family), args.eta, parse_complex(args.a), consts);
  cert.append(check_local_unit(unit, spec, consts));

  Json doc;
  doc["config"] = Json{{"command", "certify"}, {"eps", args.eps},     {"eta", args.eta},
                       {"kappa", args.kappa},  {"alpha", kDefaultAlpha},
                       {"grid", args.grid},    {"seed", args.seed},   {"a", args.a},
                       {"c0_lower", consts.c0.lower}, {"c0_upper", consts.c0.upper},
                       {"c1", consts.c1},      {"c", consts.c}};
  const Json cert_doc = Json::parse(certificate_to_json(cert));
  for (const auto& [key, value] : cert_doc.items()) doc[key] = value;
  write_output(args.output, doc.dump(2) + "\n");

  return cert.overall() ? kExitOk : kExitCertification;
}

struct WitnessArgs {
  double r = 0.5;
  double eps = 0.4;
  double eta = 1.0;
  int s = 5;
  int level = 1;
  std::string points = "25";
  std::size_t samples = 2000;
  std::uint64_t seed = 7;
  std::string output;
};

int run_witness(const WitnessArgs& args) {
  const Constants consts = Constants::compute();
  const CheesePlan plan = demo_plan(args.r, args.eps, args.eta, consts);
  const std::vector<Complex> points = resolve_points(args.points, args.seed);
  const Cheese cheese =
      instantiate(plan, WitnessMode{args.level, points}, consts, InstantiateOptions{});

  Certificate cert = stout_check(cheese, args.r);
  for (std::size_t i = 0; i < points.size(); ++i) {
    SampleSpec spec;
    spec.count = args.samples;
    spec.seed = SeededRng::derive(args.seed, 1000 + i);
    Certificate point_cert =
        check_witness(cheese, WitnessSpec::at(points[i], args.level, args.s), spec, consts);
    for (CertEntry& e : point_cert.entries) e.id = "x" + std::to_string(i) + "." + e.id;
    cert.append(point_cert);
  }

  Json doc;
  doc["config"] = Json{{"command", "witness"}, {"r", args.r},       {"eps", args.eps},
                       {"eta", args.eta},      {"s", args.s},       {"level", args.level},
                       {"points", args.points}, {"samples", args.samples},
                       {"seed", args.seed},    {"alpha", kDefaultAlpha}};
  const Json cert_doc = Json::parse(certificate_to_json(cert));
  for (const auto& [key, value] : cert_doc.items()) doc[key] = value;
  write_output(args.output, doc.dump(2) + "\n");

  return cert.overall() ? kExitOk : kExitCertification;
}

struct EvalArgs {
  std::string fn = "F";
  double eps = 0.4;
  double eta = 1.0;
  double kappa = 1.0;
  int n = 1;
  std::string a = "0,0";
  std::string z = "0,0";
  std::string output;
};

int run_eval(const EvalArgs& args) {
  const Complex z = parse_complex(args.z);
  EvalResult result;
  if (args.fn == "g") {
    result.value = eval_g(args.n, z);
    result.bound = 0.0;  // single factor, no truncation
  } else if (args.fn == "F") {
    KornerParams params = KornerParams::with_eps(args.eps);
    params.kappa = args.kappa;
    result = eval_F(build_family(params), z);
  } else if (args.fn == "h") {
    const Constants consts = Constants::compute();
    KornerParams params = KornerParams::with_eps(args.eps);
    params.kappa = args.kappa;
    auto family = std::make_shared<const KornerFamily>(build_family(params));
    const LocalUnit unit = make_local_unit(family, args.eta, parse_complex(args.a), consts);
    result = eval_h(unit, z);
  } else {
    throw InvalidInput("--fn must be F, g, or h");
  }

  Json doc;
  doc["config"] = Json{{"command", "eval"}, {"fn", args.fn},     {"eps", args.eps},
                       {"eta", args.eta},   {"kappa", args.kappa}, {"n", args.n},
                       {"a", args.a},       {"z", args.z},       {"alpha", kDefaultAlpha}};
  doc["value"] = Json{{"re", result.value.real()}, {"im", result.value.imag()}};
  doc["abs"] = std::abs(result.value);
  doc["truncation_bound"] = result.bound_available ? Json(result.bound) : Json("unavailable");
  doc["collapsed"] = result.collapsed;
  write_output(args.output, doc.dump(2) + "\n");
  return kExitOk;
}

struct RenderArgs {
  std::string input;
  std::string viewport = "0,0,2.2";
  double min_radius = -1.0;
  std::uint64_t max_discs = 5000;
  int pixels = 1000;
  std::string output;
};

int run_render(const RenderArgs& args) {
  const Cheese cheese = load_cheese(args.input);
  RenderOptions opts;
  {
    std::stringstream stream(args.viewport);
    std::string part;
    std::vector<double> vals;
    while (std::getline(stream, part, ',')) vals.push_back(std::stod(part));
    if (vals.size() != 3) throw InvalidInput("--viewport must be cx,cy,w");
    opts.viewport_center = Complex(vals[0], vals[1]);
    opts.viewport_width = vals[2];
  }
  opts.min_radius = args.min_radius;
  opts.max_discs = args.max_discs;
  opts.pixel_width = args.pixels;

  std::string svg = render_svg(cheese, opts);
  // Configuration echo, after the XML declaration.
  const std::string marker = "?>\n";
  const auto pos = svg.find(marker);
  const std::string echo = "<!-- render input=" + args.input + " viewport=" + args.viewport +
                           " min_radius=" + std::to_string(opts.min_radius) +
                           " max_discs=" + std::to_string(opts.max_discs) + " -->\n";
  svg.insert(pos + marker.size(), echo);
  write_output(args.output, svg);
  return kExitOk;
}

int run_export(const std::string& input, const std::string& output) {
  const Cheese cheese = load_cheese(input);
  write_output(output, cheese_to_json(cheese));
  return kExitOk;
}

int run_import(const std::string& input, const std::string& output) {
  const Cheese cheese = load_cheese(input);
  Json doc;
  doc["config"] = Json{{"command", "import"}, {"input", input}};
  doc["valid"] = true;
  doc["levels"] = cheese.levels.size();
  doc["units"] = cheese.units.size();
  doc["extra_discs"] = cheese.extra_discs.size();
  doc["total_radius_bound"] = total_radius_bound(cheese);
  write_output(output, doc.dump(2) + "\n");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Swiss cheese construction and certification"};
  app.require_subcommand(1);

  ConstructArgs construct_args;
  auto* construct = app.add_subcommand("construct", "build a cheese and certify its budget");
  construct->add_option("--r", construct_args.r, "total radius budget")->required();
  construct->add_option("--levels", construct_args.levels, "number of schedule levels");
  construct->add_option("--mode", construct_args.mode, "symbolic | witness | demo");
  construct->add_option("--eps", construct_args.eps, "family eps (witness/demo)");
  construct->add_option("--eta", construct_args.eta, "closeness parameter (witness/demo)");
  construct->add_option("--kappa", construct_args.kappa, "pole-disc radius multiplier");
  construct->add_option("--level", construct_args.level, "level to materialize (witness)");
  construct->add_option("--points", construct_args.points,
                        "witness points: count or 're,im;re,im' list");
  construct->add_option("--seed", construct_args.seed, "seed for drawn points");
  construct->add_option("--output", construct_args.output, "output path (default stdout)");

  CertifyArgs certify_args;
  auto* certify = app.add_subcommand("certify", "run the condition and local-unit checks");
  certify->add_option("--eps", certify_args.eps, "family eps")->required();
  certify->add_option("--eta", certify_args.eta, "closeness parameter");
  certify->add_option("--kappa", certify_args.kappa, "pole-disc radius multiplier");
  certify->add_option("--grid", certify_args.grid, "sample count per check");
  certify->add_option("--seed", certify_args.seed, "sampling seed");
  certify->add_option("--a", certify_args.a, "unit center 're,im'");
  certify->add_option("--output", certify_args.output, "output path (default stdout)");

  WitnessArgs witness_args;
  auto* witness = app.add_subcommand("witness", "witness checks at covering centers");
  witness->add_option("--r", witness_args.r, "budget the witness cheese must respect");
  witness->add_option("--eps", witness_args.eps, "family eps");
  witness->add_option("--eta", witness_args.eta, "closeness parameter");
  witness->add_option("--s", witness_args.s, "power of (z-a)");
  witness->add_option("--level", witness_args.level, "plan level");
  witness->add_option("--points", witness_args.points, "count or 're,im;re,im' list");
  witness->add_option("--samples", witness_args.samples, "K samples per point");
  witness->add_option("--seed", witness_args.seed, "sampling seed");
  witness->add_option("--output", witness_args.output, "output path (default stdout)");

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "evaluate F, g, or h at a point");
  eval->add_option("--fn", eval_args.fn, "F | g | h");
  eval->add_option("--eps", eval_args.eps, "family eps (F, h)");
  eval->add_option("--eta", eval_args.eta, "closeness parameter (h)");
  eval->add_option("--kappa", eval_args.kappa, "pole-disc radius multiplier");
  eval->add_option("--n", eval_args.n, "level (g)");
  eval->add_option("--a", eval_args.a, "unit center 're,im' (h)");
  eval->add_option("--z", eval_args.z, "evaluation point 're,im'")->required();
  eval->add_option("--output", eval_args.output, "output path (default stdout)");

  RenderArgs render_args;
  auto* render = app.add_subcommand("render", "render a cheese JSON to SVG");
  render->add_option("--input", render_args.input, "cheese JSON path")->required();
  render->add_option("--viewport", render_args.viewport, "cx,cy,w");
  render->add_option("--min-radius", render_args.min_radius,
                     "world-radius cutoff (negative: half a pixel)");
  render->add_option("--max-discs", render_args.max_discs, "disc cap");
  render->add_option("--pixels", render_args.pixels, "image width in pixels");
  render->add_option("--output", render_args.output, "output path (default stdout)");

  std::string io_input, io_output;
  auto* exp = app.add_subcommand("export", "re-emit a cheese JSON in canonical form");
  exp->add_option("--input", io_input, "cheese JSON path")->required();
  exp->add_option("--output", io_output, "output path (default stdout)");
  auto* imp = app.add_subcommand("import", "validate a cheese JSON and summarize it");
  imp->add_option("--input", io_input, "cheese JSON path")->required();
  imp->add_option("--output", io_output, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (construct->parsed()) return run_construct(construct_args);
    if (certify->parsed()) return run_certify(certify_args);
    if (witness->parsed()) return run_witness(witness_args);
    if (eval->parsed()) return run_eval(eval_args);
    if (render->parsed()) return run_render(render_args);
    if (exp->parsed()) return run_export(io_input, io_output);
    if (imp->parsed()) return run_import(io_input, io_output);
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResourceCap;
  } catch (const NotMaterializable& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResourceCap;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCertification;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCertification;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
