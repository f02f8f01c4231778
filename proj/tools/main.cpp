#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "adjmono/closure_adjoint.hpp"
#include "adjmono/io.hpp"
#include "adjmono/valuation.hpp"

using nlohmann::json;
using namespace adjmono;

namespace {

struct Options {
  std::string format = "json";
  int threads = 1;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

IdealDocument load(const std::string& path) { return parse_ideal_document(read_input(path)); }

// Binary subcommands insist on one shared coordinate system.
void require_same_variables(const IdealDocument& a, const IdealDocument& b) {
  if (a.variables != b.variables)
    throw std::invalid_argument("the two ideals must declare the same variables");
}

json exponent_json(const Exponent& e) { return json(e); }

json weights_json(const std::vector<Integer>& ws) {
  json arr = json::array();
  for (const auto& w : ws) arr.push_back(to_int64(w, "weight"));
  return arr;
}

json rational_vector_json(const std::vector<Rational>& v) {
  json arr = json::array();
  for (const auto& q : v) arr.push_back(q.str());
  return arr;
}

void emit_ideal(const Options& opt, const IdealDocument& doc) {
  if (opt.format == "json")
    std::cout << ideal_to_json(doc.variables, doc.ideal) << "\n";
  else
    std::cout << ideal_to_text(doc.variables, doc.ideal) << "\n";
}

void emit(const Options& opt, const json& obj, const std::string& text) {
  if (opt.format == "json")
    std::cout << obj.dump(2) << "\n";
  else
    std::cout << text;
}

std::string facet_text(const std::vector<std::string>& vars, const Facet& f) {
  std::string lhs;
  for (std::size_t j = 0; j < f.normal.size(); ++j) {
    if (f.normal[j] == 0) continue;
    if (!lhs.empty()) lhs += " + ";
    if (f.normal[j] != 1) lhs += f.normal[j].str() + "*";
    lhs += vars[j];
  }
  return lhs + " >= " + f.offset.str();
}

int run_subadditivity(const Options& opt, const std::string& file_a,
                      const std::string& file_b) {
  IdealDocument a = load(file_a), b = load(file_b);
  require_same_variables(a, b);
  SubadditivityResult res = check_subadditivity(a.ideal, b.ideal);
  json out{{"holds", res.holds}, {"witnesses", json::array()}};
  std::string text = std::string("subadditivity: ") + (res.holds ? "holds" : "FAILS") + "\n";
  for (const auto& w : res.witnesses) {
    out["witnesses"].push_back({{"generator", exponent_json(w.generator)},
                                {"factor_i", exponent_json(w.factor_i)},
                                {"factor_j", exponent_json(w.factor_j)},
                                {"interior_point_b", rational_vector_json(w.interior_b)},
                                {"interior_point_c", rational_vector_json(w.interior_c)}});
    text += "  " + monomial_string(a.variables, w.generator) + " = " +
            monomial_string(a.variables, w.factor_i) + " * " +
            monomial_string(a.variables, w.factor_j) + "\n";
  }
  emit(opt, out, text);
  return res.holds ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact calculator for monomial ideals: Newton polyhedra, Rees valuations,\n"
      "integral closures and adjoints of powers, and the structural checks\n"
      "relating them (subadditivity, valuation necessity, Briancon-Skoda\n"
      "containment, projective equivalence)."};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->transform(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--threads", opt.threads, "Worker threads for the lattice scans")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  int exit_code = 0;

  auto* facets_cmd = app.add_subcommand("facets", "Non-coordinate facets of the Newton polyhedron");
  auto* rees_cmd = app.add_subcommand("rees", "Rees valuations with their values on the ideal");
  auto* closure_cmd = app.add_subcommand("closure", "Integral closure of a power of the ideal");
  auto* adjoint_cmd = app.add_subcommand("adjoint", "Adjoint ideal of a power of the ideal");
  auto* product_cmd = app.add_subcommand("product", "Product of two ideals");
  auto* member_cmd = app.add_subcommand("member", "Whether a monomial lies in the ideal");
  auto* equiv_cmd = app.add_subcommand("equiv", "Projective equivalence of two ideals");
  auto* check_cmd = app.add_subcommand("check", "Verify a structural property, with witnesses");
  check_cmd->require_subcommand(1);
  auto* sub_cmd = check_cmd->add_subcommand("subadditivity", "adj(IJ) inside adj(I)adj(J)");
  auto* nec_cmd = check_cmd->add_subcommand(
      "necessity", "Dropping any Rees valuation breaks some power's closure");
  auto* bs_cmd = check_cmd->add_subcommand(
      "briancon-skoda", "adj(I^n) inside the closure of I^(n-l+1)");

  std::string file_a, file_b;
  Int power_n = 1;
  std::string method = "facets";
  std::vector<Int> member_exp;

  facets_cmd->add_option("ideal", file_a, "Ideal document (JSON), or - for stdin")->required();
  facets_cmd->callback([&] {
    IdealDocument doc = load(file_a);
    NewtonPolyhedron np = newton_polyhedron(doc.ideal);
    json out{{"variables", doc.variables}, {"facets", json::array()}};
    std::string text;
    for (const auto& f : np.facets()) {
      out["facets"].push_back({{"normal", weights_json(f.normal)},
                               {"offset", to_int64(f.offset, "facet offset")}});
      text += facet_text(doc.variables, f) + "\n";
    }
    emit(opt, out, text);
  });

  rees_cmd->add_option("ideal", file_a, "Ideal document (JSON), or - for stdin")->required();
  rees_cmd->callback([&] {
    IdealDocument doc = load(file_a);
    json out{{"variables", doc.variables}, {"valuations", json::array()}};
    std::string text;
    for (const auto& rv : rees_valuations(doc.ideal)) {
      out["valuations"].push_back({{"weights", weights_json(rv.valuation.weights())},
                                   {"value", to_int64(rv.value, "valuation value")}});
      text += "weights (";
      const auto& ws = rv.valuation.weights();
      for (std::size_t j = 0; j < ws.size(); ++j)
        text += (j ? ", " : "") + ws[j].str();
      text += ")  value " + rv.value.str() + "\n";
    }
    emit(opt, out, text);
  });

  closure_cmd->add_option("--power", power_n, "Take the closure of this power")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  closure_cmd->add_option("ideal", file_a, "Ideal document (JSON), or - for stdin")->required();
  closure_cmd->callback([&] {
    IdealDocument doc = load(file_a);
    emit_ideal(opt, {doc.variables, integral_closure(doc.ideal, power_n, opt.threads)});
  });

  adjoint_cmd->add_option("--power", power_n, "Take the adjoint of this power")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  adjoint_cmd->add_option("--method", method, "Computation route")
      ->transform(CLI::IsMember({"facets", "valuations", "bruteforce"}))
      ->capture_default_str();
  adjoint_cmd->add_option("ideal", file_a, "Ideal document (JSON), or - for stdin")->required();
  adjoint_cmd->callback([&] {
    IdealDocument doc = load(file_a);
    AdjointMethod m = method == "facets"       ? AdjointMethod::Facets
                      : method == "valuations" ? AdjointMethod::Valuations
                                               : AdjointMethod::Bruteforce;
    emit_ideal(opt, {doc.variables, adjoint(doc.ideal, power_n, m, opt.threads)});
  });

  product_cmd->add_option("ideal_a", file_a, "First ideal")->required();
  product_cmd->add_option("ideal_b", file_b, "Second ideal")->required();
  product_cmd->callback([&] {
    IdealDocument a = load(file_a), b = load(file_b);
    require_same_variables(a, b);
    emit_ideal(opt, {a.variables, product(a.ideal, b.ideal)});
  });

  member_cmd->add_option("--exponent", member_exp, "Exponent vector, comma separated")
      ->required()
      ->delimiter(',');
  member_cmd->add_option("ideal", file_a, "Ideal document (JSON), or - for stdin")->required();
  member_cmd->callback([&] {
    IdealDocument doc = load(file_a);
    for (Int x : member_exp)
      if (x < 0) throw std::invalid_argument("negative exponent");
    bool in = contains(doc.ideal, member_exp);
    emit(opt, json{{"member", in}}, std::string(in ? "true" : "false") + "\n");
  });

  equiv_cmd->add_option("ideal_a", file_a, "First ideal")->required();
  equiv_cmd->add_option("ideal_b", file_b, "Second ideal")->required();
  equiv_cmd->callback([&] {
    IdealDocument a = load(file_a), b = load(file_b);
    require_same_variables(a, b);
    EquivalenceResult res = projective_equivalence(a.ideal, b.ideal);
    json out{{"equivalent", res.equivalent}};
    std::string text = res.equivalent ? "equivalent" : "not equivalent";
    if (res.equivalent) {
      out["i"] = res.i;
      out["j"] = res.j;
      text += ": closure(A^" + std::to_string(res.i) + ") = closure(B^" +
              std::to_string(res.j) + ")";
    }
    emit(opt, out, text + "\n");
  });

  sub_cmd->add_option("ideal_a", file_a, "First ideal")->required();
  sub_cmd->add_option("ideal_b", file_b, "Second ideal")->required();
  sub_cmd->callback([&] { exit_code = run_subadditivity(opt, file_a, file_b); });

  nec_cmd->add_option("ideal", file_a, "Ideal document (JSON), or - for stdin")->required();
  nec_cmd->callback([&] {
    IdealDocument doc = load(file_a);
    json out{{"witnesses", json::array()}};
    std::string text;
    for (const auto& w : check_rees_necessity(doc.ideal)) {
      out["witnesses"].push_back(
          {{"dropped_valuation", json{{"weights", weights_json(w.dropped_valuation.weights())}}},
           {"n", w.n},
           {"e", exponent_json(w.e)}});
      text += "dropping weights (";
      const auto& ws = w.dropped_valuation.weights();
      for (std::size_t j = 0; j < ws.size(); ++j) text += (j ? ", " : "") + ws[j].str();
      text += ") admits " + monomial_string(doc.variables, w.e) + " at power " +
              std::to_string(w.n) + "\n";
    }
    emit(opt, out, text);
  });

  bs_cmd->add_option("--power", power_n, "Adjoint power n (n >= generator count)")
      ->required()
      ->check(CLI::PositiveNumber);
  bs_cmd->add_option("ideal", file_a, "Ideal document (JSON), or - for stdin")->required();
  bs_cmd->callback([&] {
    IdealDocument doc = load(file_a);
    Int l = static_cast<Int>(doc.ideal.generators().size());
    bool holds = briancon_skoda_check(doc.ideal, power_n);
    emit(opt,
         json{{"holds", holds}, {"power", power_n}, {"generators", l},
              {"closure_power", power_n - l + 1}},
         std::string("briancon-skoda: ") + (holds ? "holds" : "FAILS") + "\n");
    if (!holds) exit_code = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const internal_error& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
