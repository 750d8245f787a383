// onebranch command-line driver.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "onebranch/api.hpp"
#include "onebranch/io.hpp"
#include "onebranch/report.hpp"

using namespace onebranch;
using nlohmann::json;

namespace {

enum Exit { Ok = 0, Discrepant = 1, Usage = 2, Exhausted = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void emit(const std::optional<std::string>& out, const std::string& text) {
  if (!out) {
    std::cout << text;
    return;
  }
  std::ofstream f(*out);
  if (!f) throw UsageError("cannot write " + *out);
  f << text;
}

struct Common {
  std::string gens;
  std::string field;
  std::size_t precision = 64;
  std::optional<std::string> out;
  std::size_t jobs = 1;
  std::string format = "json";
};

FieldSpec field_or(const std::string& text, FieldSpec fallback) {
  return text.empty() ? fallback : FieldSpec::parse(text);
}

int run_end_chain(const Common& o, FieldSpec f) {
  std::string text;
  for (const auto& j : end_chain_json(split_generators(o.gens), f, o.precision)) text += j.dump() + "\n";
  emit(o.out, text);
  return Ok;
}

int run_isom(const Common& o, FieldSpec f, const std::string& order_path, const std::string& a, const std::string& b) {
  std::optional<json> order;
  std::vector<std::string> gens;
  if (!order_path.empty())
    order = read_json_file(order_path);
  else
    gens = split_generators(o.gens);
  const auto j = isomorphism_json(order, gens, read_json_file(a), read_json_file(b), f, o.precision);
  emit(o.out, j.dump() + "\n");
  return j["isomorphic"].get<bool>() ? Ok : Discrepant;
}

int run_enumerate(const Common& o, FieldSpec f) {
  const auto e = enumerate_classes(split_generators(o.gens), f, o.precision, o.jobs, o.format);
  emit(o.out, e.text + (o.format == "json" ? "\n" : ""));
  for (const auto& c : e.collisions) std::cerr << "collision: " << c << "\n";
  return e.collisions.empty() ? Ok : Discrepant;
}

int run_verify(const Common& o, const std::string& suite, FieldSpec f) {
  SuiteConfig cfg;
  cfg.suite = suite;
  cfg.field = f;
  cfg.precision = o.precision;
  cfg.out = o.out;
  cfg.jobs = o.jobs;
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto reports = run_suite(cfg);
  if (o.format == "json") {
    json j = json::array();
    for (const auto& r : reports) j.push_back(r.to_json());
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& r : reports) std::cout << r.summary();
  }
  return write_reports(cfg, reports);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ideal classes of one-branch singularities inside K[[t]]"};
  app.require_subcommand(1);
  Common o;
  std::uint32_t ch = 0;
  std::string order_path, a_path, b_path, suite = "all";

  auto add_common = [&](CLI::App* cmd, bool gens_required) {
    auto* g = cmd->add_option("--gens", o.gens, "generators, e.g. t^5,t^8 or {\"5\":1,\"6\":1}");
    if (gens_required) g->required();
    cmd->add_option("--field", o.field, "F<p> or Q");
    cmd->add_option("--precision", o.precision, "truncation order N")->check(CLI::Range(8, 4096));
    cmd->add_option("--out", o.out, "output file");
    cmd->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--format", o.format, "json, csv (enumerate) or text (verify)");
  };

  auto* classify = app.add_subcommand("classify", "valuation vector, type and the pa <= 2 criterion");
  add_common(classify, true);
  classify->add_option("--char", ch, "characteristic for the criterion (0 uses the list for char != 2)");
  auto* chain = app.add_subcommand("end-chain", "S, End(rad S), ... up to R as JSON lines");
  add_common(chain, true);
  auto* enumerate = app.add_subcommand("enumerate", "all ideal classes over F_p");
  add_common(enumerate, true);
  auto* isom = app.add_subcommand("isom", "isomorphism test of two ideals; exit 0 iff isomorphic");
  add_common(isom, false);
  isom->add_option("--order", order_path, "order as a span file");
  isom->add_option("--a", a_path, "first ideal as a span file")->required();
  isom->add_option("--b", b_path, "second ideal as a span file")->required();
  auto* verify = app.add_subcommand("verify", "verification suites");
  add_common(verify, false);
  verify->add_option("--suite", suite, "suite")->check(CLI::IsMember(SuiteConfig::suite_names()));
  verify->add_option("--char", ch, "characteristic; 2 selects F2 unless --field is given");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? Ok : Usage;
  }

  try {
    if (*classify) {
      const FieldSpec f = field_or(o.field, ch == 0 || !is_prime(ch) ? FieldSpec{0} : FieldSpec{ch});
      emit(o.out, classify_order(split_generators(o.gens), f, o.precision, ch).dump() + "\n");
      return Ok;
    }
    if (*chain) {
      const FieldSpec f = field_or(o.field, FieldSpec{3});
      return run_end_chain(o, f);
    }
    if (*enumerate) return run_enumerate(o, field_or(o.field, FieldSpec{3}));
    if (*isom) {
      if (order_path.empty() && o.gens.empty()) throw UsageError("isom needs --order or --gens");
      FieldSpec f = field_or(o.field, FieldSpec{3});
      if (o.field.empty() && !order_path.empty()) f = field_of_json(read_json_file(order_path), f);
      return run_isom(o, f, order_path, a_path, b_path);
    }
    if (*verify) {
      const FieldSpec f = field_or(o.field, ch == 2 ? FieldSpec{2} : FieldSpec{3});
      if (verify->get_option("--format")->count() == 0) o.format = "text";
      return run_verify(o, suite, f);
    }
  } catch (const PrecisionExhausted& e) {
    std::cerr << "precision exhausted: " << e.what() << "\n";
    return Exhausted;
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return Usage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return Usage;
  } catch (const InvalidVector& e) {
    std::cerr << e.what() << "\n";
    return Usage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return Usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Discrepant;
  }
  return Usage;
}
