// gkz: command-line front end for the A-hypergeometric reducibility library.

#include "gkz/classify.hpp"
#include "gkz/cone.hpp"
#include "gkz/error.hpp"
#include "gkz/io.hpp"
#include "gkz/linalg.hpp"
#include "gkz/resonance.hpp"
#include "gkz/toric.hpp"
#include "gkz/volume.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace gkz;

enum ExitCode { Ok = 0, InputError = 1, ScaleError = 2, Inconsistent = 3 };

struct JobSpec {
  std::string matrix_json;
  std::string input_file;
  std::string beta_literal;
  std::string format = "json";
  bool json_output = false;
  bool oracle = false;
  std::size_t budget = GroebnerBudget{}.max_pairs;
};

// A report: its JSON value and the human rendering of the same value.
struct Report {
  json value;
  std::string text;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::InvalidInput, what + ": " + e.what());
  }
}

ProblemInput load_problem(const JobSpec& job) {
  if (job.matrix_json.empty() == job.input_file.empty())
    throw Error(ErrorKind::InvalidInput, "give exactly one of -A and --input");
  ProblemInput input = job.input_file.empty()
                           ? ProblemInput{matrix_from_json(parse_json_text(job.matrix_json, "-A")), std::nullopt}
                           : parse_problem_json(read_file(job.input_file));
  if (!job.beta_literal.empty()) {
    const auto first = job.beta_literal.find_first_not_of(" \t");
    input.beta = (first != std::string::npos && job.beta_literal[first] == '[')
                     ? parameter_from_json(parse_json_text(job.beta_literal, "-b"))
                     : Parameter(parse_gauss_list(job.beta_literal));
  }
  if (input.beta && input.beta->size() != input.a.rows())
    throw Error(ErrorKind::DimensionMismatch, "beta has " + std::to_string(input.beta->size()) + " entries but A has " +
                                                  std::to_string(input.a.rows()) + " rows");
  return input;
}

Parameter require_beta(const ProblemInput& input) {
  if (!input.beta) throw Error(ErrorKind::InvalidInput, "this command needs a parameter (-b)");
  return *input.beta;
}

Parameter beta_or_zero(const ProblemInput& input) {
  return input.beta ? *input.beta : Parameter::zero(input.a.rows());
}

// Every command works on the normalized configuration.
Reduction normalize(const ProblemInput& input) { return reduce_configuration(input.a, beta_or_zero(input)); }

std::string set_text(const json& indices) {
  std::string out = "{";
  for (std::size_t k = 0; k < indices.size(); ++k) out += (k ? "," : "") + indices[k].dump();
  return out + "}";
}

std::string row_text(const json& row) {
  std::string out = "(";
  for (std::size_t k = 0; k < row.size(); ++k)
    out += (k ? ", " : "") + (row[k].is_string() ? row[k].get<std::string>() : row[k].dump());
  return out + ")";
}

std::string matrix_text(const json& m) {
  std::string out;
  for (const json& row : m) out += "  " + row_text(row) + "\n";
  return out;
}

std::string beta_text(const json& beta) {
  std::string out = "(";
  for (std::size_t k = 0; k < beta.size(); ++k) {
    out += k ? ", " : "";
    out += beta[k].is_object() ? to_string(gauss_from_json(beta[k])) : beta[k].get<std::string>();
  }
  return out + ")";
}

std::string binomial_text(const json& b) {
  auto mono = [](const json& e) {
    std::string out;
    for (std::size_t j = 0; j < e.size(); ++j) {
      const int p = e[j].get<int>();
      if (p == 0) continue;
      out += (out.empty() ? "" : "*") + ("d" + std::to_string(j + 1)) + (p > 1 ? "^" + std::to_string(p) : "");
    }
    return out.empty() ? std::string("1") : out;
  };
  return mono(b.at("plus")) + " - " + mono(b.at("minus"));
}

Report reduce_report(const JobSpec& job) {
  const Reduction r = normalize(load_problem(job));
  json v = r;
  std::string text = "A' =\n" + matrix_text(v["A"]) + "beta' = " + beta_text(v["beta"]) + "\nB =\n" +
                     matrix_text(v["B"]) + "pointed: " + (v["pointed"].get<bool>() ? "yes" : "no") + "\n";
  return {std::move(v), std::move(text)};
}

FaceLattice faces_with_oracle(const Configuration& c, bool oracle) {
  FaceLattice lattice = enumerate_faces(c, FaceMethod::DoubleDescription);
  if (oracle) {
    const FaceLattice brute = enumerate_faces(c, FaceMethod::BruteForce);
    if (brute.faces != lattice.faces)
      throw Error(ErrorKind::InternalInconsistency, "double description and brute force face lattices differ");
  }
  return lattice;
}

Report faces_report(const JobSpec& job) {
  const Reduction r = normalize(load_problem(job));
  json v = faces_with_oracle(r.config, job.oracle);
  std::string text;
  for (const json& f : v["faces"]) text += set_text(f["indices"]) + "  witness " + row_text(f["witness"]) + "\n";
  return {std::move(v), std::move(text)};
}

Report centers_report(const JobSpec& job) {
  const ProblemInput input = load_problem(job);
  require_beta(input);
  const Reduction r = normalize(input);
  const FaceLattice lattice = faces_with_oracle(r.config, job.oracle);
  json v = resonance_centers(r.config, lattice, r.beta);
  std::string text = "centers:";
  for (const json& f : v["centers"]) text += " " + set_text(f["indices"]);
  text += "\nnonresonant: " + std::string(v["nonresonant"].get<bool>() ? "yes" : "no") + "\n";
  return {std::move(v), std::move(text)};
}

Report classify_report(const JobSpec& job) {
  const ProblemInput input = load_problem(job);
  const Parameter beta = require_beta(input);
  const Classification c = classify(input.a, beta);
  if (job.oracle) faces_with_oracle(c.normalized.config, true);
  json v = c;
  std::string text = v["verdict"].get<std::string>() + "\ncenters:";
  for (const json& f : v["centers"]) text += " " + set_text(f);
  text += "\n";
  if (!v["witness_center"].is_null()) text += "witness center: " + set_text(v["witness_center"]) + "\n";
  text += "generic rank: " + v["generic_rank"].dump() + "\n";
  for (const json& e : v["evidence"]) {
    text += "  " + set_text(e["face"]["indices"]) + ": pyramid " + (e["pyramid"]["is_pyramid"].get<bool>() ? "yes" : "no");
    if (!e["face_volume"].is_null()) text += ", face volume " + e["face_volume"].dump();
    text += "\n";
  }
  return {std::move(v), std::move(text)};
}

Report volume_report(const JobSpec& job) {
  const Reduction r = normalize(load_problem(job));
  json v = normalized_volume(r.config);
  const json& vol = v["volume"];
  return {v, (vol.is_string() ? vol.get<std::string>() : vol.dump()) + "\n"};
}

Report kernel_report(const JobSpec& job) {
  const Reduction r = normalize(load_problem(job));
  json rows = json::array();
  for (const IntVector& u : kernel_lattice_basis(r.config.matrix())) {
    json row = json::array();
    for (Index j = 0; j < u.size(); ++j) row.push_back(integer_to_json(u(j)));
    rows.push_back(std::move(row));
  }
  json v{{"kernel", rows}};
  std::string text;
  for (const json& row : v["kernel"]) text += row_text(row) + "\n";
  return {std::move(v), std::move(text)};
}

Report toric_report(const JobSpec& job) {
  const Reduction r = normalize(load_problem(job));
  json v{{"binomials", toric_ideal_generators(r.config, GroebnerBudget{job.budget})}, {"saturated", true}};
  std::string text;
  for (const json& b : v["binomials"]) text += binomial_text(b) + "\n";
  return {std::move(v), std::move(text)};
}

Report arrangement_report(const JobSpec& job) {
  const Reduction r = normalize(load_problem(job));
  json v = describe_resonant_arrangement(r.config);
  std::string text;
  for (const json& c : v["components"]) {
    text += set_text(c["face"]["indices"]) + ":";
    if (c["congruences"].empty()) text += " (no conditions)";
    for (const json& s : c["congruences"]) text += "  " + s.get<std::string>() + ";";
    text += "\n";
  }
  return {std::move(v), std::move(text)};
}

std::string export_text(const JobSpec& job) {
  const ExportFormat format = parse_export_format(job.format);
  const ProblemInput input = load_problem(job);
  const Reduction r = normalize(input);
  return export_system(hypergeometric_system(r.config, r.beta, GroebnerBudget{job.budget}), format);
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ScaleLimit:
      return ScaleError;
    case ErrorKind::InternalInconsistency:
    case ErrorKind::ShiftInvarianceViolation:
      return Inconsistent;
    default:
      return InputError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact reducibility analysis of A-hypergeometric systems"};
  app.require_subcommand(1);
  JobSpec job;

  auto add_common = [&](CLI::App* cmd, bool with_beta) {
    auto* a = cmd->add_option("-A,--matrix", job.matrix_json, "configuration matrix as a JSON array of rows");
    auto* i = cmd->add_option("-i,--input", job.input_file, "JSON file {\"A\": [[...]], \"beta\": [...]}");
    a->excludes(i);
    if (with_beta) cmd->add_option("-b,--beta", job.beta_literal, "parameter: comma list of p/q or a+bi, or a JSON array");
    cmd->add_flag("--json", job.json_output, "print the report as JSON");
    cmd->add_option("--budget", job.budget, "maximum number of S-pairs in Groebner computations")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--oracle", job.oracle, "cross-check faces against brute-force enumeration");
  };

  std::vector<std::pair<CLI::App*, std::function<Report(const JobSpec&)>>> commands;
  auto command = [&](const std::string& name, const std::string& help, bool with_beta, auto run) {
    CLI::App* cmd = app.add_subcommand(name, help);
    add_common(cmd, with_beta);
    commands.emplace_back(cmd, run);
    return cmd;
  };
  command("reduce", "normalize (A, beta) so that the columns of A generate the lattice", true, reduce_report);
  command("faces", "list the faces of the cone over A", false, faces_report);
  command("centers", "resonance centers of beta", true, centers_report);
  command("classify", "decide monodromy reducibility", true, classify_report);
  command("volume", "normalized volume of conv(A and the origin)", false, volume_report);
  command("kernel", "integer kernel lattice basis of A", false, kernel_report);
  command("toric-ideal", "binomial generators of the toric ideal", false, toric_report);
  command("arrangement", "resonant arrangement as congruence conditions", false, arrangement_report);
  CLI::App* exporter = app.add_subcommand("export", "write the hypergeometric system as a script");
  add_common(exporter, true);
  exporter->add_option("-f,--format", job.format, "json, macaulay2 or singular");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return InputError;
  }

  try {
    if (exporter->parsed()) {
      std::cout << export_text(job);
      return Ok;
    }
    for (auto& [cmd, run] : commands) {
      if (!cmd->parsed()) continue;
      const Report report = run(job);
      std::cout << (job.json_output ? report.value.dump(2) + "\n" : report.text);
      return Ok;
    }
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return Inconsistent;
  }
  return InputError;
}
