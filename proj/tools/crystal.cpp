// crystal: command-line front end for the level-1 perfect crystal engine.
#include "affcrystal/serialize.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <stdexcept>

using namespace affcrystal;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "json";
  std::string out;
  int max_rank = 5;

  std::string type;
  bool all = false;
  bool inject_fault = false;
  int index = -1;
  std::string left, right;
  std::string weight;
  int max_degree = 3;
  bool oracle = false;
};

AffineType read_type(const std::string& text) {
  try {
    return parse_type(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void require_json(const Options& o) {
  if (o.format != "json") throw UsageError("--format " + o.format + " is only supported by build");
}

int emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
    return 0;
  }
  std::ofstream f(o.out);
  if (!f) throw UsageError("cannot write " + o.out);
  f << text;
  if (text.empty() || text.back() != '\n') f << '\n';
  return 0;
}

int cmd_build(const Options& o) {
  const auto b = build_crystal(build_datum(read_type(o.type)));
  if (o.format == "dot") return emit(o, to_dot(b.graph(), b.datum().type.name()));
  return emit(o, crystal_json(b).dump(2));
}

LevelOneCrystal maybe_corrupt(LevelOneCrystal b, bool inject) {
  if (!inject) return b;
  return drop_arrow(b, 0, b.empty());
}

int cmd_verify(const Options& o) {
  require_json(o);
  if (o.all == !o.type.empty()) throw UsageError("verify takes either a TYPE or --all");
  std::vector<PerfectReport> reports;
  if (o.all) {
    if (o.max_rank < 1) throw UsageError("--max-rank must be positive");
    const auto types = sweep_types(o.max_rank);
    if (o.inject_fault) {
      for (const auto& t : types) reports.push_back(verify_perfect(maybe_corrupt(build_crystal(build_datum(t)), true)));
    } else {
      reports = verify_sweep(types);
    }
  } else {
    reports.push_back(verify_perfect(maybe_corrupt(build_crystal(build_datum(read_type(o.type))), o.inject_fault)));
  }
  bool pass = true;
  for (const auto& r : reports) pass = pass && r.pass();
  json out;
  if (o.all) {
    json list = json::array();
    for (const auto& r : reports) list.push_back(perfect_json(r));
    out = {{"pass", pass}, {"reports", list}};
  } else {
    out = perfect_json(reports.front());
  }
  emit(o, out.dump(2));
  return pass ? 0 : 1;
}

int cmd_energy(const Options& o) {
  require_json(o);
  const auto b = build_crystal(build_datum(read_type(o.type)));
  const auto t = tensor_product(b.graph());
  std::vector<int> h;
  try {
    h = energy_propagate(b, t);
  } catch (const EnergyInconsistency& e) {
    emit(o, json{{"type", b.datum().type.name()}, {"error", e.what()}}.dump(2));
    return 1;
  }
  const auto labels = classify_components(b, t);
  const auto by_label = energy_by_classification(b, t);
  const auto by_maximal = energy_by_maximal_vectors(b, t);
  json out{{"type", b.datum().type.name()},
           {"entries_count", t.size()},
           {"methods_agree", h == by_label},
           {"maximal_vector_method_agrees", h == by_maximal},
           {"components", component_report_json(t, labels, h)},
           {"entries", energy_table_json(t, h)}};
  return emit(o, out.dump(2));
}

int cmd_multiply(const Options& o) {
  require_json(o);
  const auto b = build_crystal(build_datum(read_type(o.type)));
  const auto idx = psi_indices(b);
  if (idx.empty()) throw UsageError(b.datum().type.name() + " has no component isomorphic to B(theta)");
  const int i = o.index < 0 ? idx.front() : o.index;
  const auto t = tensor_product(b.graph());
  Psi psi;
  try {
    psi = build_psi(b, t, i);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (o.left.empty() != o.right.empty()) throw UsageError("multiply needs both LEFT and RIGHT, or neither");
  if (o.left.empty()) return emit(o, multiplication_json(b, psi, multiplication_table(b, t, psi)).dump(2));
  auto lookup = [&](const std::string& label) {
    const auto v = b.graph().find(label);
    if (!v || !b.is_theta_part(*v)) throw UsageError("unknown element of B(theta): " + label);
    return *v;
  };
  const auto prod = multiply(t, psi, lookup(o.left), lookup(o.right));
  json out{{"type", b.datum().type.name()}, {"index", i}, {"left", o.left}, {"right", o.right},
           {"product", prod ? json(b.graph().label(*prod)) : json(nullptr)}};
  return emit(o, out.dump(2));
}

int parse_weight(const std::string& w) {
  if (w.size() < 2 || w[0] != 'L') throw UsageError("weight must look like L<i>, got " + w);
  try {
    std::size_t used = 0;
    const int i = std::stoi(w.substr(1), &used);
    if (used + 1 != w.size() || i < 0) throw std::invalid_argument(w);
    return i;
  } catch (const std::logic_error&) {
    throw UsageError("weight must look like L<i>, got " + w);
  }
}

int cmd_character(const Options& o) {
  require_json(o);
  const auto d = build_datum(read_type(o.type));
  const int lambda = parse_weight(o.weight);
  if (o.max_degree < 0) throw UsageError("--max-degree must be nonnegative");
  const PathModel model(build_crystal(d));
  const auto& dom = model.dominants();
  if (std::find(dom.begin(), dom.end(), lambda) == dom.end())
    throw UsageError(o.weight + " is not a level-1 dominant weight of " + d.type.name());
  const auto ch = character(model, lambda, o.max_degree);
  json out{{"type", d.type.name()}, {"weight", o.weight}, {"max_degree", o.max_degree},
           {"entries", character_json(ch)}};
  bool ok = true;
  if (o.oracle) {
    if (!oracle_supported(d) || lambda != 0) {
      out["oracle"] = {{"supported", false}};
    } else {
      const auto expected = oracle_character(d, o.max_degree);
      json diffs = json::array();
      for (const auto& [w, m] : expected) {
        const auto it = ch.find(w);
        const std::int64_t got = it == ch.end() ? 0 : it->second;
        if (got != m) diffs.push_back({{"classical_weight", w.lambda}, {"delta_degree", w.delta}, {"paths", got}, {"oracle", m}});
      }
      for (const auto& [w, m] : ch)
        if (!expected.count(w))
          diffs.push_back({{"classical_weight", w.lambda}, {"delta_degree", w.delta}, {"paths", m}, {"oracle", 0}});
      ok = diffs.empty();
      out["oracle"] = {{"supported", true}, {"agree", ok}, {"diffs", diffs}};
    }
  }
  emit(o, out.dump(2));
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Level-1 perfect crystals of quantum affine algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "dot"}));
  app.add_option("--out", o.out, "Write output to FILE instead of standard out");
  app.add_option("--max-rank", o.max_rank, "Largest subscript swept by verify --all");

  auto* build = app.add_subcommand("build", "Crystal graph of B(theta) + B(0)");
  build->add_option("type", o.type, "Affine type such as A2-1 or D4-3")->required();

  auto* verify = app.add_subcommand("verify", "Check the perfect-crystal axioms");
  verify->add_option("type", o.type, "Affine type");
  verify->add_flag("--all", o.all, "Sweep every family up to --max-rank plus the exceptional types");
  verify->add_flag("--inject-fault", o.inject_fault, "Remove the 0-arrow out of the empty element before checking");

  auto* energy = app.add_subcommand("energy", "Energy function on B (x) B");
  energy->add_option("type", o.type, "Affine type")->required();

  auto* mult = app.add_subcommand("multiply", "Crystal algebra products from B(theta) = C(x_theta (x) y_i)");
  mult->add_option("type", o.type, "Affine type")->required();
  mult->add_option("left", o.left, "Left factor label, e.g. x[2,1]");
  mult->add_option("right", o.right, "Right factor label");
  mult->add_option("--index", o.index, "Node i adjacent to 0 with alpha_i in Lambda^+");

  auto* chr = app.add_subcommand("character", "Truncated character of L(Lambda_i) from paths");
  chr->add_option("type", o.type, "Affine type")->required();
  chr->add_option("weight", o.weight, "Dominant weight L<i>")->required();
  chr->add_option("--max-degree", o.max_degree, "Largest depth in delta");
  chr->add_flag("--oracle", o.oracle, "Compare with the lattice-construction multiplicities");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*build) return cmd_build(o);
    if (*verify) return cmd_verify(o);
    if (*energy) return cmd_energy(o);
    if (*mult) return cmd_multiply(o);
    if (*chr) return cmd_character(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
