#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "atam.hpp"
#include "counterlab.hpp"
#include "exemplars.hpp"
#include "json.hpp"
#include "permfn.hpp"
#include "railway.hpp"
#include "render.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void spill(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

permfn::FiniteFunction load_function(const std::string& path) {
  const std::string text = slurp(path);
  for (char c : text) {
    if (c == ' ' || c == '\n' || c == '\t' || c == '\r') continue;
    if (c == '[') {
      const auto table =
          nlohmann::json::parse(text).get<std::vector<std::uint32_t>>();
      return permfn::FiniteFunction(table);
    }
    break;
  }
  return permfn::from_text(text);
}

railway::RailwayCircuit load_circuit(const std::string& path) {
  return railway::from_json(slurp(path));
}

atam::SystemBundle load_bundle(const std::string& path) {
  return atam::bundle_from_json(slurp(path));
}

exemplars::Exemplar make_exemplar(const std::string& kind, std::size_t n,
                                  std::size_t layers, const std::string& gates,
                                  std::uint64_t seed,
                                  const std::string& interp) {
  if (kind == "ibc") {
    exemplars::IbcSpec spec;
    if (gates == "identity")
      spec = exemplars::ibc_identity(n, layers);
    else if (gates == "counter")
      spec = exemplars::ibc_long_counter();
    else if (gates == "random")
      spec = exemplars::ibc_random(n, layers, seed);
    else
      throw CLI::ValidationError("--gates must be identity, counter or random");
    return exemplars::build_ibc(spec);
  }
  if (kind == "zigzig") return exemplars::build_zigzig(n);
  if (kind == "zigzag") {
    if (interp == "allbits")
      return exemplars::build_zigzag(n, exemplars::ZigzagInterp::AllBits);
    if (interp == "epstop")
      return exemplars::build_zigzag(n, exemplars::ZigzagInterp::EpsTop);
    throw CLI::ValidationError("--interp must be allbits or epstop");
  }
  throw CLI::ValidationError("unknown exemplar");
}

std::string emit_bundle(const exemplars::Exemplar& ex) {
  return atam::system_bundle_to_json(ex.tiles, ex.temperature, ex.n, ex.curve,
                                     ex.v, ex.layer_region, ex.seed_for);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"railway circuit and tile assembly workbench"};
  app.require_subcommand(1);

  std::string in_path, out_path, format = "ascii";
  std::uint64_t seed = 1;
  std::size_t opt_n = 2, opt_k = 4, opt_count = 1000, opt_layers = 1;
  std::uint32_t opt_x = 0;
  std::size_t max_width = 0;
  std::string gates = "identity", interp = "allbits", kind;

  // perm -------------------------------------------------------------------
  auto* perm = app.add_subcommand("perm", "finite function analysis");
  perm->require_subcommand(1);
  for (const char* name : {"classify", "parity", "ram"}) {
    auto* sub = perm->add_subcommand(name);
    sub->add_option("--in", in_path, "function file (text or JSON array)")
        ->required();
  }

  // circuit ----------------------------------------------------------------
  auto* circuit = app.add_subcommand("circuit", "railway circuit analysis");
  circuit->require_subcommand(1);
  for (const char* name :
       {"eval", "trace", "classify", "components", "counter"}) {
    auto* sub = circuit->add_subcommand(name);
    sub->add_option("--in", in_path, "circuit JSON file")->required();
    if (std::string(name) == "eval" || std::string(name) == "trace")
      sub->add_option("--x", opt_x, "input state");
  }

  // search -----------------------------------------------------------------
  auto* search = app.add_subcommand("search", "local circuit searches");
  search->require_subcommand(1);
  auto* closure = search->add_subcommand("closure");
  closure->add_option("--n", opt_n, "wire count")->required();
  auto* certify = search->add_subcommand("certify");
  certify->add_option("--n", opt_n, "wire count")->required();
  certify->add_option("--max-width", max_width, "gate width bound");
  certify->add_option("--out", out_path, "certificate JSONL output");
  auto* sample = search->add_subcommand("sample");
  sample->add_option("--n", opt_n, "wire count")->required();
  sample->add_option("--k", opt_k, "sections per circuit");
  sample->add_option("--count", opt_count, "number of circuits");
  sample->add_option("--seed", seed, "random seed")->required();

  // tiles ------------------------------------------------------------------
  auto* tiles = app.add_subcommand("tiles", "tile assembly operations");
  tiles->require_subcommand(1);
  for (const char* name :
       {"simulate", "check-layer", "compile", "iterate", "render"}) {
    auto* sub = tiles->add_subcommand(name);
    sub->add_option("--tileset", in_path, "system bundle JSON")->required();
    if (std::string(name) == "iterate") {
      sub->add_option("--x", opt_x, "input state");
      sub->add_option("--k", opt_k, "layer count");
    }
    if (std::string(name) == "simulate" || std::string(name) == "render")
      sub->add_option("--format", format, "ascii or svg");
    if (std::string(name) == "compile" || std::string(name) == "render" ||
        std::string(name) == "simulate")
      sub->add_option("--out", out_path, "output file");
  }

  // exemplar ---------------------------------------------------------------
  auto* exemplar = app.add_subcommand("exemplar", "reference tile systems");
  exemplar->require_subcommand(1);
  for (const char* name : {"ibc", "zigzig", "zigzag"}) {
    auto* sub = exemplar->add_subcommand(name);
    sub->add_option("--n", opt_n, "bit width")->required();
    if (std::string(name) == "ibc") {
      sub->add_option("--layers", opt_layers, "layers per period");
      sub->add_option("--gates", gates, "identity, counter or random");
      sub->add_option("--seed", seed, "seed for random gates");
    }
    if (std::string(name) == "zigzag")
      sub->add_option("--interp", interp, "allbits or epstop");
    sub->add_option("--emit", out_path, "bundle output file")->required();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (perm->parsed()) {
      const permfn::FiniteFunction f = load_function(in_path);
      if (perm->get_subcommand("classify")->parsed()) {
        std::cout << permfn::class_name(permfn::classify(f)) << "\n";
      } else if (perm->get_subcommand("parity")->parsed()) {
        std::cout << permfn::parity_name(permfn::parity(f)) << "\n";
      } else {
        std::cout << "r=" << permfn::ramification_degree(f)
                  << " image=" << permfn::image_size(f) << "\n";
      }
      return kOk;
    }

    if (circuit->parsed()) {
      const railway::RailwayCircuit c = load_circuit(in_path);
      if (circuit->get_subcommand("eval")->parsed()) {
        const permfn::FiniteFunction f = railway::circuit_function(c);
        if (opt_x >= f.domain_size()) throw railway::StateOutOfRange("--x");
        std::cout << atam::state_to_bits(f(opt_x), c.wires()) << " ("
                  << f(opt_x) << ")\n";
      } else if (circuit->get_subcommand("trace")->parsed()) {
        for (std::uint32_t v : railway::trace(c, opt_x))
          std::cout << atam::state_to_bits(v, c.wires()) << "\n";
      } else if (circuit->get_subcommand("classify")->parsed()) {
        std::cout << permfn::class_name(
                         permfn::classify(railway::circuit_function(c)))
                  << "\n";
      } else if (circuit->get_subcommand("components")->parsed()) {
        const railway::RestrictionReport report =
            railway::verify_atomic_restrictions(c);
        for (const railway::ComponentVerdict& v : report.components) {
          std::cout << "section " << v.section << ": "
                    << permfn::class_name(v.cls) << " r=" << v.ramification
                    << (v.pass ? " PASS" : " FAIL") << "\n";
        }
        std::cout << (report.pass ? "PASS" : "FAIL") << "\n";
        return report.pass ? kOk : kCheckFailed;
      } else {
        const railway::CounterReport report = railway::counter_value(c);
        std::cout << "counter=" << report.counter_value << " witness="
                  << atam::state_to_bits(report.witness_input, c.wires())
                  << " class=" << permfn::class_name(report.circuit_class)
                  << "\n";
      }
      return kOk;
    }

    if (search->parsed()) {
      if (closure->parsed()) {
        const counterlab::ClosureResult r =
            counterlab::monoid_closure_max_counter(opt_n);
        std::cout << "max_counter=" << r.max_counter << " bound="
                  << (std::size_t{1} << opt_n)
                  << (r.bound_holds ? " PASS" : " FAIL") << "\n";
        return r.bound_holds ? kOk : kCheckFailed;
      }
      if (certify->parsed()) {
        const counterlab::Certificate cert =
            counterlab::certify_theorem_main(opt_n, max_width);
        if (!out_path.empty()) spill(out_path, cert.jsonl);
        std::cout << "generators=" << cert.generators
                  << (cert.all_pass ? " PASS" : " FAIL") << "\n";
        return cert.all_pass ? kOk : kCheckFailed;
      }
      const std::size_t best =
          counterlab::sample_max_counter(opt_n, opt_k, opt_count, seed);
      const std::size_t bound = std::size_t{1} << opt_n;
      std::cout << "max_counter=" << best << " bound=" << bound
                << (best < bound ? " PASS" : " FAIL") << "\n";
      return best < bound ? kOk : kCheckFailed;
    }

    if (tiles->parsed()) {
      const atam::SystemBundle b = load_bundle(in_path);
      if (tiles->get_subcommand("simulate")->parsed()) {
        atam::TileSystem sys{b.tiles, b.seeds.at(0), b.temperature};
        const atam::AssembleResult r = atam::assemble(sys, b.region);
        std::cout << "tiles=" << r.terminal.at.size()
                  << " deterministic=" << (r.deterministic ? "yes" : "no")
                  << "\n";
        const std::string art =
            format == "svg" ? render::assembly_svg(b.tiles, r.terminal)
                            : render::assembly_ascii(b.tiles, r.terminal);
        if (!out_path.empty())
          spill(out_path, art);
        else
          std::cout << art;
        return kOk;
      }
      if (tiles->get_subcommand("render")->parsed()) {
        const std::string art =
            format == "svg" ? render::assembly_svg(b.tiles, b.seeds.at(0))
                            : render::assembly_ascii(b.tiles, b.seeds.at(0));
        if (format != "svg" && format != "ascii")
          throw render::UnsupportedFormat(format);
        if (!out_path.empty())
          spill(out_path, art);
        else
          std::cout << art;
        return kOk;
      }
      atam::LayerCheckInput input{&b.tiles, b.temperature, &b.curve,
                                  b.v,      b.n,           b.seed_fn(),
                                  b.region};
      if (tiles->get_subcommand("check-layer")->parsed()) {
        try {
          const atam::LayerReport report = atam::check_layer_computes(input);
          std::cout << "layer-computes n=" << report.n << " positions="
                    << report.positions.size() << " PASS\n";
          return kOk;
        } catch (const atam::Unclean& e) {
          std::cout << "UNCLEAN: " << e.what() << " at positions";
          for (std::size_t i : e.position_indices) std::cout << " z" << i;
          std::cout << "\n";
          return kCheckFailed;
        }
      }
      if (tiles->get_subcommand("compile")->parsed()) {
        const atam::LayerReport report = atam::check_layer_computes(input);
        const railway::RailwayCircuit c = atam::compile_to_railway(report);
        const std::string json = railway::to_json(c);
        if (!out_path.empty())
          spill(out_path, json);
        else
          std::cout << json << "\n";
        return kOk;
      }
      // iterate
      atam::TileSystem sys{b.tiles, b.seeds.at(opt_x), b.temperature};
      const atam::Box region = atam::Box{
          b.region.xmin, b.region.xmin + static_cast<int>(opt_k + 1) *
                                             std::max(1, b.v.x),
          b.region.ymin - static_cast<int>(opt_k), b.region.ymax +
                                                       static_cast<int>(opt_k)};
      for (const std::string& reading :
           atam::iterate_layers(sys, b.curve, b.v, opt_k, region))
        std::cout << reading << "\n";
      return kOk;
    }

    if (exemplar->parsed()) {
      for (const char* name : {"ibc", "zigzig", "zigzag"})
        if (exemplar->get_subcommand(name)->parsed()) kind = name;
      const exemplars::Exemplar ex =
          make_exemplar(kind, opt_n, opt_layers, gates, seed, interp);
      spill(out_path, emit_bundle(ex));
      std::cout << "wrote " << out_path << " (n=" << ex.n << ", tiles="
                << ex.tiles.tiles.size() << ")\n";
      return kOk;
    }
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kUsage;
}
