#include "gentlefan/cli.hpp"

#include "gentlefan/arrangement.hpp"
#include "gentlefan/dehn.hpp"
#include "gentlefan/fan.hpp"
#include "gentlefan/silting.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <sstream>

namespace gf::cli {

namespace {

using json = nlohmann::ordered_json;

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

GVector parse_g(const std::string& s) {
  GVector g;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      size_t used = 0;
      g.push_back(std::stoll(tok, &used));
      if (used != tok.size() && tok.find_first_not_of(' ', used) != std::string::npos) throw Usage("bad number " + tok);
    } catch (const std::logic_error&) {
      throw Usage("bad number '" + tok + "'");
    }
  }
  return g;
}

// laminates are separated by '|' since a single spec already uses ';'
std::vector<std::string> split_specs(const std::vector<std::string>& many, const std::string& joined) {
  std::vector<std::string> out = many;
  std::stringstream ss(joined);
  std::string tok;
  while (std::getline(ss, tok, '|'))
    if (tok.find_first_not_of(" \t") != std::string::npos) out.push_back(tok);
  return out;
}

BrauerSpec parse_brauer(const std::string& s) {
  BrauerSpec spec;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) throw Usage("expected name=multiplicity, got '" + tok + "'");
    auto g = parse_g(tok.substr(eq + 1));
    if (g.size() != 1) throw Usage("bad multiplicity in '" + tok + "'");
    spec[tok.substr(0, eq)] = static_cast<int>(g[0]);
  }
  return spec;
}

json gjson(const GVector& g) { return json(g); }

void write_json(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw Usage("cannot write " + path);
  f << text << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"gentlefan: dissections, laminates, g-vector fans and two-term silting"};
  app.require_subcommand(1);
  std::string file, lam, along, a, b, gstr, brauer, json_out, joined;
  std::vector<std::string> lams;
  int bound = 3, steps = 8;
  long long times = 1;
  bool generalized = false, inverse = false;

  auto with_file = [&](CLI::App* c) { c->add_option("file", file, "dissection file")->required()->check(CLI::ExistingFile); };
  auto* validate_c = app.add_subcommand("validate", "check a dissection and print its surface invariants");
  auto* dual_c = app.add_subcommand("dual", "print the dual dissection");
  auto* quiver_c = app.add_subcommand("quiver", "quiver, relations and special cycles");
  quiver_c->add_option("--brauer", brauer, "multiplicities, e.g. P0=1,P3=2");
  auto* gvector_c = app.add_subcommand("gvector", "g-vector of a laminate");
  gvector_c->add_option("--laminate", lam)->required();
  gvector_c->add_flag("--generalized", generalized);
  auto* compat_c = app.add_subcommand("compat", "compatibility of two laminates");
  compat_c->add_option("--a", a)->required();
  compat_c->add_option("--b", b)->required();
  compat_c->add_flag("--generalized", generalized);
  auto* invert_c = app.add_subcommand("invert", "lamination with a given g-vector");
  invert_c->add_option("--g", gstr)->required();
  auto* fan_c = app.add_subcommand("fan", "enumerate the g-vector fan up to a bound");
  fan_c->add_option("--bound", bound)->check(CLI::Range(0, 12));
  fan_c->add_option("--json", json_out);
  auto* coverage_c = app.add_subcommand("coverage", "fraction of the grid covered by the fan");
  coverage_c->add_option("--bound", bound)->check(CLI::Range(0, 12));
  auto* twist_c = app.add_subcommand("twist", "Dehn twist of a laminate along a loop");
  twist_c->add_option("--laminate", lam)->required();
  twist_c->add_option("--along", along)->required();
  twist_c->add_option("--times", times)->check(CLI::Range(-64, 64));
  twist_c->add_flag("--inverse", inverse, "turn left at each crossing");
  auto* density_c = app.add_subcommand("density", "density certificate for an integer vector");
  density_c->add_option("--g", gstr)->required();
  density_c->add_option("--steps", steps)->check(CLI::Range(0, 64));
  density_c->add_option("--json", json_out);
  auto* complex_c = app.add_subcommand("complex", "two-term string complex of a laminate");
  complex_c->add_option("--laminate", lam)->required();
  complex_c->add_flag("--generalized", generalized);
  auto* presilt_c = app.add_subcommand("presilt", "is the sum of the complexes presilting");
  auto* silt_c = app.add_subcommand("silt", "is the sum of the complexes silting");
  for (auto* c : {presilt_c, silt_c}) {
    c->add_option("--laminate", lams, "one laminate; repeatable");
    c->add_option("--laminates", joined, "laminates separated by '|'");
    c->add_flag("--generalized", generalized);
  }
  for (auto* c : app.get_subcommands([](CLI::App*) { return true; })) with_file(c);

  std::vector<const char*> argv{"gentlefan"};
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  try {
    Dissection d = load_dissection(file);
    SurfaceInvariants inv = validate(d);
    auto lamin = [&](const std::string& s) { return parse_laminate(d, s, generalized); };

    if (validate_c->parsed()) {
      out << "n=" << inv.arcs << " genus=" << inv.genus << " boundary=" << inv.boundary_components
          << " circ_punctures=" << inv.circ_punctures << " bullet_punctures=" << inv.bullet_punctures
          << " circ_marked=" << inv.circ_marked << " bullet_marked=" << inv.bullet_marked
          << " euler=" << inv.euler_characteristic << "\n";
      return 0;
    }
    if (dual_c->parsed()) {
      auto du = dual(d);
      for (int i = 0; i < d.n; ++i)
        out << "d" << i + 1 << "*=" << d.poly(du[i].v).name << "--" << d.poly(du[i].v2).name << "\n";
      return 0;
    }
    if (quiver_c->parsed()) {
      Quiver q = quiver_of(d);
      out << "vertices=";
      for (int i = 0; i < q.n; ++i) out << (i ? "," : "") << i + 1;
      out << "\n";
      for (const Arrow& ar : q.arrows) out << ar.name << ": " << ar.source + 1 << "->" << ar.target + 1 << "\n";
      out << "relations=";
      for (size_t i = 0; i < q.relations.size(); ++i)
        out << (i ? "," : "") << q.word({q.relations[i].first, q.relations[i].second});
      out << "\n";
      for (const SpecialCycle& c : special_cycles(d, q))
        out << "cycle " << d.poly(c.poly).name << " at " << c.base + 1 << ": " << q.word(c.word) << "\n";
      if (!brauer.empty()) {
        for (const BrauerRelation& r : brauer_relations(d, q, parse_brauer(brauer)))
          out << "brauer: " << q.word(r.lhs) << (r.rhs.empty() ? "" : " - " + q.word(r.rhs)) << "\n";
      }
      return 0;
    }
    if (gvector_c->parsed()) {
      Laminate g = lamin(lam);
      out << to_spec(d, g) << "\ng=" << gvec_string(g_vector(d, g)) << "\n";
      return 0;
    }
    if (compat_c->parsed()) {
      Laminate x = lamin(a), y = lamin(b);
      bool ok = compatible(d, x, y);
      out << "crossings=" << crossings_with(d, x, y) << " compatible=" << (ok ? "yes" : "no") << "\n";
      if (!x.closed && !y.closed)
        out << "positive(a,b)=" << (positive_position(d, x, y) ? "yes" : "no")
            << " positive(b,a)=" << (positive_position(d, y, x) ? "yes" : "no") << "\n";
      return ok ? 0 : 1;
    }
    if (invert_c->parsed()) {
      GVector g = parse_g(gstr);
      if (static_cast<int>(g.size()) != d.n) throw Usage("g needs " + std::to_string(d.n) + " entries");
      Lamination X = invert_g(d, g);
      for (const auto& [l, k] : X.grouped()) out << k << " x " << to_spec(d, l) << "  g=" << gvec_string(g_vector(d, l)) << "\n";
      out << "reduced=" << (X.reduced() ? "yes" : "no") << " g=" << gvec_string(lamination_g(d, X)) << "\n";
      return 0;
    }
    if (fan_c->parsed()) {
      Fan f = enumerate_fan(d, bound);
      out << "rays=" << f.rays.size() << " maximal=" << f.maximal.size() << " finite=" << to_string(f.finite) << "\n";
      for (size_t i = 0; i < f.rays.size(); ++i) out << "ray " << i << " " << gvec_string(f.ray_g[i]) << " " << to_spec(d, f.rays[i]) << "\n";
      for (const auto& c : f.maximal) {
        out << "cone";
        for (int r : c) out << " " << r;
        out << "\n";
      }
      if (!json_out.empty()) {
        json j;
        j["n"] = f.n;
        j["bound"] = f.bound;
        j["finite"] = to_string(f.finite);
        j["rays"] = json::array();
        for (size_t i = 0; i < f.rays.size(); ++i) j["rays"].push_back({{"g", gjson(f.ray_g[i])}, {"laminate", to_spec(d, f.rays[i])}});
        j["maximal"] = f.maximal;
        if (f.n == 2 || f.n == 3) {
          j["slice"] = json::array();
          for (const auto& [cone, lines] : fan_slice(f)) {
            json jl = json::array();
            for (const Polyline& p : lines) jl.push_back(p.points);
            j["slice"].push_back({{"cone", cone}, {"polylines", jl}});
          }
        }
        write_json(json_out, j.dump(2));
      }
      return 0;
    }
    if (coverage_c->parsed()) {
      out << "coverage=" << to_string(coverage(d, bound)) << "\n";
      return 0;
    }
    if (twist_c->parsed()) {
      Laminate g = lamin(lam), l = lamin(along);
      Laminate r = inverse ? inverse_twist(d, g, l, times) : twist(d, g, l, times);
      out << to_spec(d, r) << "\ng=" << gvec_string(g_vector(d, r)) << "\n";
      return 0;
    }
    if (density_c->parsed()) {
      GVector g = parse_g(gstr);
      if (static_cast<int>(g.size()) != d.n) throw Usage("g needs " + std::to_string(d.n) + " entries");
      DensityCertificate c = density_sequence(d, g, steps);
      out << "N=" << c.N << " bridges=" << c.bridges.size() << "\n";
      for (const DensityStep& s : c.steps) out << "m=" << s.m << " distance2=" << to_string(s.distance2) << "\n";
      if (!json_out.empty()) write_json(json_out, certificate_json(d, c));
      return 0;
    }
    if (complex_c->parsed()) {
      Quiver q = quiver_of(d);
      Laminate g = lamin(lam);
      StringComplex T = string_complex(d, g);
      out << to_string(q, T) << "\ng=" << gvec_string(complex_g(T)) << "\n";
      return 0;
    }
    if (presilt_c->parsed() || silt_c->parsed()) {
      Quiver q = quiver_of(d);
      auto specs = split_specs(lams, joined);
      if (specs.empty()) throw Usage("no laminates given");
      std::vector<StringComplex> Ts;
      for (const auto& s : specs) Ts.push_back(string_complex(d, lamin(s)));
      for (size_t i = 0; i < Ts.size(); ++i)
        for (size_t j = 0; j < Ts.size(); ++j)
          for (const HomObstruction& o : hom_obstructions(d, Ts[i], Ts[j]))
            out << "Hom(T" << i << ",T" << j << "[1]): " << to_string(d, q, o) << "\n";
      bool yes = silt_c->parsed() ? is_silting(d, Ts) : is_presilting(d, Ts);
      out << (silt_c->parsed() ? "silting=" : "presilting=") << (yes ? "yes" : "no") << "\n";
      return yes ? 0 : 1;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidDissection& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidLaminate& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Usage& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace gf::cli
