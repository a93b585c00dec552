// bmetric: family | report | eval | verify-paper
//
// Exit codes: 0 success, 1 check or axiom failure, 2 usage or parse error.

#include "bmetric/algebra_model.hpp"
#include "bmetric/report.hpp"
#include "bmetric/verification.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

namespace {

using namespace bmetric;
using nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kCheckFailure = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ModelOptions {
  bool symbolic = false;
  std::string params;
  std::string model_file;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string piece;
  while (std::getline(in, piece, sep)) out.push_back(piece);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::array<Scalar, kParameterCount> parse_params(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != kParameterCount)
    throw UsageError("--params needs six comma-separated values l1,l2,l3,l4,m1,m2");
  std::array<Scalar, kParameterCount> out;
  for (std::size_t i = 0; i < kParameterCount; ++i) {
    try {
      out[i] = parse_scalar(parts[i]);
    } catch (const ParseError& e) {
      throw ParseError(std::string("parameter ") + std::string(kParameterNames[i]) + ": parse error",
                       e.position(), e.token());
    }
  }
  return out;
}

ParameterPoint parse_point(const std::string& text) {
  const auto values = parse_params(text);
  ParameterPoint p;
  for (std::size_t i = 0; i < kParameterCount; ++i) {
    if (!values[i].is_constant())
      throw UsageError("eval needs rational values, got " + values[i].to_string());
    p[i] = values[i].constant_value();
  }
  return p;
}

/// Builds the model selected by --symbolic / --params / --model.
std::pair<ModelInstance, ordered_json> select_model(const ModelOptions& o, bool params_select_model) {
  const int chosen = int(o.symbolic) + int(params_select_model && !o.params.empty()) +
                     int(!o.model_file.empty());
  if (chosen > 1) throw UsageError("choose one of --symbolic, --params, --model");
  if (!o.model_file.empty()) {
    ModelInstance m = load_model_file(o.model_file);
    return {m, ordered_json{{"file", o.model_file}, {"document", model_to_json(m)}}};
  }
  if (params_select_model && !o.params.empty()) {
    const auto values = parse_params(o.params);
    ordered_json echo = ordered_json::object();
    for (std::size_t i = 0; i < kParameterCount; ++i)
      echo[std::string(kParameterNames[i])] = values[i].to_string();
    return {new_family(values), ordered_json{{"family", echo}}};
  }
  return {symbolic_family(), ordered_json{{"family", "symbolic"}}};
}

std::vector<std::string> parse_sections(const std::string& text) {
  std::vector<std::string> out;
  for (auto& s : split(text, ','))
    if (!s.empty()) out.push_back(s);
  return out;
}

void emit(const Report& r, const std::string& format) {
  if (format == "json")
    std::cout << to_json(r).dump(2) << "\n";
  else
    std::cout << render_text(r);
}

void add_model_options(CLI::App* cmd, ModelOptions& o, bool with_params) {
  cmd->add_flag("--symbolic", o.symbolic, "Use the family over symbolic parameters");
  if (with_params)
    cmd->add_option("--params", o.params, "Family parameters l1,l2,l3,l4,m1,m2 (Scalar grammar)");
  cmd->add_option("--model", o.model_file, "Model document (JSON)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact connections and curvature of almost contact B-metric Lie algebras"};
  app.require_subcommand(1);

  std::string format = "text";
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  ModelOptions family_opts;
  auto* family = app.add_subcommand("family", "Show brackets, structure tensors and axiom checks");
  add_model_options(family, family_opts, true);
  add_format(family);

  ModelOptions report_opts;
  std::string report_sections;
  auto* report = app.add_subcommand("report", "Connections, torsions, curvature and norms");
  add_model_options(report, report_opts, true);
  report->add_option("--sections", report_sections,
                     "Comma-separated subset of connections,torsions,curvature,ricci,sectional,norms,classes");
  add_format(report);

  ModelOptions eval_opts;
  std::string eval_sections;
  auto* eval = app.add_subcommand("eval", "Evaluate the symbolic report at a parameter point");
  add_model_options(eval, eval_opts, false);
  eval->add_option("--params", eval_opts.params, "Point l1,l2,l3,l4,m1,m2 (rationals)")->required();
  eval->add_option("--sections", eval_sections, "Comma-separated report sections");
  add_format(eval);

  SuiteOptions suite;
  std::string fault;
  auto* verify = app.add_subcommand("verify-paper", "Run every reference check");
  verify->add_option("--seed", suite.seed, "Sampling seed");
  verify->add_option("--samples", suite.samples, "Number of sampled parameter points");
  verify->add_option("--inject-fault", fault)->group("")->check(CLI::IsMember({"koszul"}));
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (family->parsed()) {
      auto [m, echo] = select_model(family_opts, true);
      const Report r = cmd_family(m, std::move(echo));
      emit(r, format);
      return validate(m).all_passed() ? kOk : kCheckFailure;
    }
    if (report->parsed()) {
      auto [m, echo] = select_model(report_opts, true);
      emit(cmd_report(m, std::move(echo), parse_sections(report_sections)), format);
      return kOk;
    }
    if (eval->parsed()) {
      const ParameterPoint point = parse_point(eval_opts.params);
      auto [m, echo] = select_model(eval_opts, false);
      emit(cmd_eval(m, std::move(echo), point, parse_sections(eval_sections)), format);
      return kOk;
    }
    if (verify->parsed()) {
      if (suite.samples == 0) throw UsageError("--samples must be at least 1");
      suite.inject_koszul_fault = fault == "koszul";
      const SuiteResult result = run_suite(suite);
      emit(verification_report(result), format);
      return result.all_passed() ? kOk : kCheckFailure;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const AxiomError& e) {
    std::cerr << "error: " << e.what() << "\n";
    for (const auto& line : e.report().failure_messages()) std::cerr << "  " << line << "\n";
    return kCheckFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailure;
  }
  return kUsage;
}
