// polyvor: command-line front end. JSON on stdout, diagnostics on stderr.

#include <CLI11.hpp>
#include <json.hpp>

#include <polyvor/polyvor.hpp>

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;
using namespace polyvor;

namespace {

std::string num(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

json rationals(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& r : v) out.push_back(to_string(r));
  return out;
}

json tangency_points(const TangencyReport& report) {
  json points = json::array();
  for (const auto& e : report.entries) {
    points.push_back({{"p", to_string(e.p_star)}, {"case", std::string(to_string(e.edge_case))},
                      {"direction", rationals(e.direction.coords())}});
  }
  return points;
}

json degenerate_conditions(const TangencyReport& report) {
  json out = json::array();
  for (const auto& c : report.degenerate) {
    out.push_back({{"case", std::string(to_string(c.edge_case))}, {"condition", c.condition},
                   {"boundary_parameter", to_string(c.boundary_parameter)}});
  }
  return out;
}

unsigned raster_threads() {
  const char* env = std::getenv("POLYVOR_THREADS");
  if (env == nullptr || *env == '\0') return 0;
  unsigned value = 0;
  const std::string_view s(env);
  const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size() || value == 0) {
    throw Error(ErrorKind::InvalidArgument, "POLYVOR_THREADS must be a positive integer");
  }
  return value;
}

AffinePoint parse_point(const std::string& text, Chart chart) {
  auto coords = parse_rational_list(text);
  return chart == Chart::Simplex ? AffinePoint::simplex(std::move(coords)) : AffinePoint::hyperplane(std::move(coords));
}

// ---------------------------------------------------------------------------

struct DistanceArgs {
  std::string metric, mu, nu;
  bool exact = false;
};

json run_distance(const DistanceArgs& a) {
  const auto d = load_metric_file(a.metric);
  const auto mu = parse_point(a.mu, Chart::Simplex);
  const auto nu = parse_point(a.nu, Chart::Simplex);
  if (mu.size() != d.n_states() || nu.size() != d.n_states())
    throw Error(ErrorKind::DimensionMismatch, "points must have one coordinate per state");
  if (a.exact) {
    const auto r = wasserstein_distance(mu, nu, d);
    json plan = json::array();
    for (const auto& row : r.plan.flow) plan.push_back(rationals(row));
    return {{"cost", to_string(r.cost)}, {"plan", plan}, {"exact", true}};
  }
  const auto r = wasserstein_distance_float(mu.to_doubles(), nu.to_doubles(), d);
  json plan = json::array();
  for (const auto& row : r.flow) {
    json out = json::array();
    for (double v : row) out.push_back(num(v));
    plan.push_back(out);
  }
  return {{"cost", num(r.cost)}, {"plan", plan}, {"exact", false}};
}

struct BallArgs {
  std::string metric, center, radius = "1/3", svg;
};

json run_ball(const BallArgs& a) {
  const auto d = load_metric_file(a.metric);
  const auto center = parse_point(a.center, Chart::Hyperplane);
  const Rational radius = parse_rational(a.radius);
  const auto ball = build_ball(center, radius, d);
  json vertices = json::array();
  for (const auto& v : ball.hull_vertices) vertices.push_back(rationals(v.coords()));
  json edges = json::array();
  for (const auto& e : ball.edges)
    edges.push_back({{"from", e.from}, {"to", e.to}, {"inward_normal", rationals(e.inward_normal.coords())}});
  json generators = json::array();
  for (const auto& g : ball.generators) generators.push_back(rationals(g.coords()));
  json out{{"center", rationals(center.coords())}, {"radius", to_string(radius)}, {"vertices", vertices},
           {"edges", edges}, {"facets", ball.facet_count()}, {"generators", generators}};
  if (!a.svg.empty()) {
    if (!ball.planar()) throw Error(ErrorKind::DimensionMismatch, "SVG output needs a three-state metric");
    SvgOverlay overlay;
    overlay.ball = &ball;
    const auto c = center.to_doubles();
    overlay.marked_points.push_back({c[0], c[1], c[2]});
    write_text_file(a.svg, render_svg(overlay));
    out["svg"] = a.svg;
  }
  return out;
}

json run_tangency(const std::string& metric) {
  const auto report = hw_tangency_points(load_metric_file(metric));
  return {{"points", tangency_points(report)}, {"degenerate", degenerate_conditions(report)}};
}

json run_count(const std::string& metric) {
  const auto census = count_full_dim_cells_hw(load_metric_file(metric));
  return {{"count", census.count}, {"regime", std::string(to_string(census.regime))},
          {"points", tangency_points(census.tangency)}, {"degenerate", degenerate_conditions(census.tangency)}};
}

json run_bound(std::int64_t facets, std::int64_t dual_degree) {
  return {{"bound", to_string(full_dim_upper_bound(facets, dual_degree))}};
}

struct RasterArgs {
  std::string metric, curve = "hw", out, svg;
  std::size_t samples = 1001;
  std::size_t resolution = 512;
  double theta = 0.001;
  double tie_tolerance = kDefaultTieTolerance;
  std::vector<double> circle_center{0.5, std::sqrt(3.0) / 6.0};
  double circle_radius = 0.15;
};

json run_raster(const RasterArgs& a) {
  const auto d = load_metric_file(a.metric);
  if (d.n_states() != 3) throw Error(ErrorKind::DimensionMismatch, "raster diagrams need a three-state metric");
  ParametricCurve curve;
  if (a.curve == "hw") {
    curve = hardy_weinberg_curve();
  } else if (a.curve == "circle") {
    if (a.circle_center.size() != 2) throw Error(ErrorKind::InvalidArgument, "--circle-center takes two chart coordinates");
    if (!(a.circle_radius > 0)) throw Error(ErrorKind::InvalidArgument, "--circle-radius must be positive");
    curve = circle_curve({a.circle_center[0], a.circle_center[1]}, a.circle_radius);
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown curve '" + a.curve + "' (expected hw or circle)");
  }
  if (!(a.theta > 0 && a.theta < 1)) throw Error(ErrorKind::InvalidArgument, "--theta must lie in (0, 1)");

  const auto sample = sample_curve(curve, a.samples);
  const auto norm = PlanarNorm::from_metric(d);
  const auto raster = raster_voronoi(sample, norm, a.resolution, a.tie_tolerance, raster_threads());
  const auto areas = raster.label_areas(sample.count());

  json cells = json::array();
  for (std::size_t label : raster.full_dimensional_labels(sample.count(), a.theta))
    cells.push_back({{"label", label}, {"p", sample.params[label]}, {"area", areas[label]}});
  std::size_t ties = 0, inside = 0;
  for (std::int32_t l : raster.labels) {
    ties += l == kTieLabel;
    inside += l != kOutsideLabel;
  }
  json out{{"curve", a.curve},
           {"samples", sample.count()},
           {"resolution", a.resolution},
           {"threshold_px", a.theta * static_cast<double>(a.resolution * a.resolution)},
           {"cells", cells},
           {"pixels_in_simplex", inside},
           {"tie_pixels", ties}};

  std::vector<Point3> marks;
  if (a.curve == "hw") {
    const auto report = hw_tangency_points(d);
    out["predicted"] = tangency_points(report);
    for (const auto& e : report.entries) marks.push_back(curve.eval(to_double(e.p_star)));
  }
  if (!a.out.empty()) {
    write_ppm(raster, a.out);
    out["ppm"] = a.out;
  }
  if (!a.svg.empty()) {
    Rational largest = 0;
    for (const auto& row : d.entries())
      for (const auto& v : row) largest = std::max(largest, v);
    const auto ball = build_ball(AffinePoint::barycenter(3), largest / 8, d);
    SvgOverlay overlay;
    overlay.curve = sample.points;
    overlay.closed_curve = curve.closed;
    overlay.marked_points = marks;
    overlay.ball = &ball;
    write_text_file(a.svg, render_svg(overlay));
    out["svg"] = a.svg;
  }
  return out;
}

// Embedded worked examples.
json run_check(bool& all_pass) {
  json items = json::array();
  auto item = [&](const std::string& name, bool pass, const std::string& detail) {
    items.push_back({{"name", name}, {"pass", pass}, {"detail", detail}});
    all_pass = all_pass && pass;
  };
  const auto d1 = make_metric({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  const auto line = make_metric({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}});
  const auto d2 = make_metric({{0, 2, 3}, {2, 0, 4}, {3, 4, 0}});
  const auto d3 = make_metric({{0, 2, 1}, {2, 0, 2}, {1, 2, 0}});
  const auto c = AffinePoint::barycenter(3);

  {
    const auto hex = build_ball(c, Rational(1, 3), d1).hull_vertices.size();
    const auto quad = build_ball(c, Rational(1, 3), line).hull_vertices.size();
    item("ball vertices (all-ones metric, line metric)", hex == 6 && quad == 4,
         std::to_string(hex) + " and " + std::to_string(quad));
  }
  {
    const auto e1 = AffinePoint::vertex(3, 0), e2 = AffinePoint::vertex(3, 1), e3 = AffinePoint::vertex(3, 2);
    const auto a = wasserstein_distance(e1, e2, d1).cost;
    const auto b = wasserstein_distance(e1, e3, line).cost;
    const auto m = wasserstein_distance(AffinePoint::simplex({Rational(1, 2), Rational(1, 2), 0}),
                                        AffinePoint::simplex({0, Rational(1, 2), Rational(1, 2)}), line)
                       .cost;
    item("transport distances", a == 1 && b == 2 && m == 1,
         to_string(a) + ", " + to_string(b) + ", " + to_string(m));
  }
  const std::vector<std::pair<const FiniteMetric*, std::vector<Rational>>> tangency{
      {&d1, {Rational(1, 2)}}, {&d2, {Rational(2, 3), Rational(4, 5)}}, {&d3, {Rational(1, 3), Rational(1, 2), Rational(2, 3)}}};
  for (std::size_t k = 0; k < tangency.size(); ++k) {
    std::vector<Rational> got;
    for (const auto& e : hw_tangency_points(*tangency[k].first).entries) got.push_back(e.p_star);
    const int count = count_full_dim_cells_hw(*tangency[k].first).count;
    std::string detail;
    for (const auto& p : got) detail += (detail.empty() ? "" : ", ") + to_string(p);
    item("tangency d" + std::to_string(k + 1), got == tangency[k].second && count == static_cast<int>(k + 1),
         "{" + detail + "}, count " + std::to_string(count));
  }
  {
    const struct {
      Rational d12, d13, d23;
      int expected;
    } table[] = {{2, 3, 2, 1}, {3, 4, 2, 1}, {2, 3, 4, 2}, {4, 3, 2, 2}, {2, 1, 2, 3}, {3, 2, 4, 3}};
    bool ok = true;
    for (const auto& row : table) ok = ok && count_full_dim_cells_hw(make_metric3(row.d12, row.d13, row.d23)).count == row.expected;
    item("census table", ok, "6 strict-regime fixtures");
  }
  {
    const auto circle = sample_curve(circle_curve({0.5, std::sqrt(3.0) / 6.0}, 0.15), 1001);
    const unsigned threads = raster_threads();
    const auto hex = raster_voronoi(circle, PlanarNorm::from_metric(d1), 512, kDefaultTieTolerance, threads)
                         .full_dimensional_labels(circle.count())
                         .size();
    const auto quad = raster_voronoi(circle, PlanarNorm::from_metric(line), 512, kDefaultTieTolerance, threads)
                          .full_dimensional_labels(circle.count())
                          .size();
    item("circle tightness", Rational(hex) == full_dim_upper_bound(6, 2) && Rational(quad) == full_dim_upper_bound(4, 2),
         std::to_string(hex) + " and " + std::to_string(quad) + " cells");
  }
  for (const auto& it : items)
    std::cerr << (it["pass"].get<bool>() ? "PASS " : "FAIL ") << it["name"].get<std::string>() << ": "
              << it["detail"].get<std::string>() << "\n";
  std::size_t passed = 0;
  for (const auto& it : items) passed += it["pass"].get<bool>();
  return {{"items", items}, {"passed", passed}, {"total", items.size()}};
}

void print_error(const std::string& kind, const std::string& message, const std::vector<int>& indices = {}) {
  json err{{"kind", kind}, {"message", message}};
  if (!indices.empty()) err["indices"] = indices;
  std::cout << json{{"error", err}}.dump() << std::endl;
  std::cerr << "polyvor: " << kind << ": " << message << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wasserstein distances, balls and Voronoi cells of curves in the probability simplex", "polyvor"};
  app.require_subcommand(1);

  DistanceArgs dist;
  auto* distance = app.add_subcommand("distance", "Wasserstein distance between two distributions");
  distance->add_option("--metric", dist.metric, "metric JSON file")->required();
  distance->add_option("--mu", dist.mu, "source distribution, e.g. \"1,0,0\"")->required();
  distance->add_option("--nu", dist.nu, "target distribution")->required();
  distance->add_flag("--exact", dist.exact, "exact rational solver instead of floating point");

  BallArgs ball_args;
  auto* ball = app.add_subcommand("ball", "vertices and edges of a Wasserstein ball");
  ball->add_option("--metric", ball_args.metric, "metric JSON file")->required();
  ball->add_option("--center", ball_args.center, "center, coordinates summing to 1")->required();
  ball->add_option("--radius", ball_args.radius, "radius (rational)")->capture_default_str();
  ball->add_option("--svg", ball_args.svg, "write an SVG drawing");

  std::string tangency_metric;
  auto* tangency = app.add_subcommand("tangency", "Hardy-Weinberg points tangent to ball edges");
  tangency->add_option("--metric", tangency_metric, "metric JSON file")->required();

  std::string count_metric;
  auto* count = app.add_subcommand("count", "number of full-dimensional Voronoi cells of the Hardy-Weinberg curve");
  count->add_option("--metric", count_metric, "metric JSON file")->required();

  std::int64_t facets = 0, dual_degree = 0;
  auto* bound = app.add_subcommand("bound", "upper bound facets * dual degree / 2");
  bound->add_option("--facets", facets, "facet count of the ball")->required();
  bound->add_option("--dual-degree", dual_degree, "degree of the dual variety")->required();

  RasterArgs raster_args;
  auto* raster = app.add_subcommand("raster", "brute-force Voronoi raster of a sampled curve");
  raster->add_option("--metric", raster_args.metric, "metric JSON file")->required();
  raster->add_option("--curve", raster_args.curve, "hw or circle")->capture_default_str();
  raster->add_option("--samples", raster_args.samples, "curve samples")->capture_default_str();
  raster->add_option("--resolution", raster_args.resolution, "pixels per side")->capture_default_str();
  raster->add_option("--theta", raster_args.theta, "area threshold as a fraction of R^2")->capture_default_str();
  raster->add_option("--tie-tolerance", raster_args.tie_tolerance, "distance gap counted as a tie")->capture_default_str();
  raster->add_option("--circle-center", raster_args.circle_center, "circle center in the plotting chart")
      ->delimiter(',')
      ->expected(2);
  raster->add_option("--circle-radius", raster_args.circle_radius, "circle radius")->capture_default_str();
  raster->add_option("--out", raster_args.out, "PPM output path");
  raster->add_option("--svg", raster_args.svg, "SVG overlay output path");

  auto* check = app.add_subcommand("check", "run the embedded worked examples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_error("UsageError", e.what());
    return 2;
  }

  try {
    json out;
    int status = 0;
    if (*distance) {
      out = run_distance(dist);
    } else if (*ball) {
      out = run_ball(ball_args);
    } else if (*tangency) {
      out = run_tangency(tangency_metric);
    } else if (*count) {
      out = run_count(count_metric);
    } else if (*bound) {
      out = run_bound(facets, dual_degree);
    } else if (*raster) {
      out = run_raster(raster_args);
    } else if (*check) {
      bool all_pass = true;
      out = run_check(all_pass);
      status = all_pass ? 0 : 1;
    }
    std::cout << out.dump(2) << std::endl;
    return status;
  } catch (const Error& e) {
    print_error(std::string(to_string(e.kind())), e.what(), e.indices());
    return 2;
  } catch (const std::exception& e) {
    print_error("InternalError", e.what());
    return 3;
  }
}
