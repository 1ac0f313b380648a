#include "csl/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <variant>

#include "csl/errors.hpp"
#include "csl/index.hpp"
#include "csl/matrix_io.hpp"
#include "csl/normal_form.hpp"
#include "csl/oracle.hpp"
#include "csl/ortho.hpp"
#include "csl/spectrum.hpp"

namespace csl::cli {
namespace {

using Value = std::variant<std::string, std::vector<std::string>>;
using Record = std::vector<std::pair<std::string, Value>>;

std::vector<std::string> strings(std::span<const Integer> values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v.get_str());
  return out;
}

// One plain line per record, "key=value" separated by spaces, lists joined by
// commas. JSON is an array holding one object per line, with integers as strings.
void emit(const std::vector<Record>& records, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::json) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const auto& record : records) {
      nlohmann::ordered_json obj = nlohmann::ordered_json::object();
      for (const auto& [key, value] : record) {
        std::visit([&](const auto& v) { obj[key] = v; }, value);
      }
      doc.push_back(std::move(obj));
    }
    out << doc.dump(2) << '\n';
    return;
  }
  for (const auto& record : records) {
    bool first = true;
    for (const auto& [key, value] : record) {
      out << (first ? "" : " ") << key << '=';
      first = false;
      if (const auto* s = std::get_if<std::string>(&value)) {
        out << *s;
      } else {
        const auto& list = std::get<std::vector<std::string>>(value);
        for (std::size_t i = 0; i < list.size(); ++i) out << (i ? "," : "") << list[i];
      }
    }
    out << '\n';
  }
}

nlohmann::ordered_json matrix_json(const IntMatrix& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(strings(m.row(r)));
  return rows;
}

Record report_record(const IndexReport& report, bool details) {
  Record rec{{"sigma", report.sigma.get_str()}, {"method", std::string(to_string(report.method))}};
  if (details) {
    rec.emplace_back("factors", strings(report.factors));
    if (!report.invariant_factors.empty()) rec.emplace_back("invariant_factors", strings(report.invariant_factors));
  }
  return rec;
}

template <typename Reader>
auto with_input(const std::string& path, Reader read) {
  if (path == "-") return read(std::cin);
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read(in);
}

RationalIsometry load_isometry(const std::string& path) {
  return from_rational_matrix(with_input(path, [](std::istream& in) { return read_rat_matrix(in); }));
}

Integer parse_positive(const std::string& text, const char* what) {
  Integer v;
  if (v.set_str(text, 10) != 0 || sgn(v) <= 0) throw DomainError(std::string(what) + " must be a positive integer");
  return v;
}

std::uint64_t effective_cap(const RunConfig& config) { return config.cap ? config.cap : default_cap(); }

void emit_isometry(const RationalIsometry& y, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::json) {
    nlohmann::ordered_json doc{{"q", y.q().get_str()}, {"z", matrix_json(y.z())}};
    out << doc.dump(2) << '\n';
    return;
  }
  out << "# q=" << y.q().get_str() << '\n';
  write_matrix(out, y.as_rational());
}

// Every applicable route for one isometry; the cap only gates residue counting.
std::vector<IndexReport> all_reports(const RationalIsometry& y, std::uint64_t cap, bool& counted) {
  std::vector<IndexReport> reports{index_fortes(y), index_closed_form(y), index_by_hnf(y)};
  counted = counting_feasible(y, cap);
  if (counted) reports.push_back(index_by_counting(y, cap));
  return reports;
}

bool agree(const std::vector<IndexReport>& reports) {
  for (const auto& r : reports)
    if (r.sigma != reports.front().sigma) return false;
  return true;
}

int run_index(const RunConfig& config, std::ostream& out) {
  std::vector<Record> records;
  if (config.vector) {
    records.push_back(report_record(index_reflection(parse_vector(*config.vector)), config.details));
    emit(records, config.format, out);
    return kExitOk;
  }
  if (config.inputs.size() != 1) throw DomainError("index needs exactly one of --matrix or --reflect");
  const RationalIsometry y = load_isometry(config.inputs.front());
  const std::uint64_t cap = effective_cap(config);
  const std::string& m = config.method;
  if (m == "fortes" || m == "all") records.push_back(report_record(index_fortes(y), config.details));
  if (m == "closed" || m == "all") records.push_back(report_record(index_closed_form(y), config.details));
  if (m == "hnf" || m == "all") records.push_back(report_record(index_by_hnf(y), config.details));
  if (m == "count" || (m == "all" && counting_feasible(y, cap))) {
    records.push_back(report_record(index_by_counting(y, cap), config.details));
  }
  emit(records, config.format, out);
  return kExitOk;
}

int run_verify(const RunConfig& config, std::ostream& out) {
  if (config.inputs.size() != 1) throw DomainError("verify needs --matrix");
  const RationalIsometry y = load_isometry(config.inputs.front());
  bool counted = false;
  std::vector<IndexReport> reports;
  bool consistent = true;
  std::vector<Record> records;
  try {
    reports = all_reports(y, effective_cap(config), counted);
  } catch (const ConsistencyError& e) {
    records.push_back({{"error", std::string(e.what())}});
    consistent = false;
  }
  for (const auto& r : reports) records.push_back(report_record(r, config.details));
  if (consistent && !counted) {
    records.push_back({{"method", std::string(to_string(IndexMethod::oracle_count))}, {"skipped", std::string("cap")}});
  }
  consistent = consistent && agree(reports);
  records.push_back({{"q", y.q().get_str()}, {"verdict", std::string(consistent ? "agree" : "disagree")}});
  emit(records, config.format, out);
  return consistent ? kExitOk : kExitDisagreement;
}

int run_corpus(const RunConfig& config, std::ostream& out) {
  const std::uint64_t cap = effective_cap(config);
  std::vector<Record> records;
  bool all_agree = true;
  for (const auto& y : isometry_corpus(config.dimension, config.count, config.reflections, config.bound, config.seed)) {
    bool counted = false;
    bool ok = true;
    std::vector<IndexReport> reports;
    try {
      reports = all_reports(y, cap, counted);
      ok = agree(reports);
    } catch (const ConsistencyError&) {
      ok = false;
    }
    all_agree = all_agree && ok;
    Record rec{{"q", y.q().get_str()},
               {"sigma", reports.empty() ? std::string("?") : reports.front().sigma.get_str()},
               {"agree", std::string(ok ? "yes" : "no")}};
    if (config.details) rec.emplace_back("counted", std::string(counted ? "yes" : "no"));
    records.push_back(std::move(rec));
  }
  emit(records, config.format, out);
  return all_agree ? kExitOk : kExitDisagreement;
}

int run_snf(const RunConfig& config, std::ostream& out) {
  if (config.inputs.size() != 1) throw DomainError("snf needs --matrix");
  const IntMatrix a = with_input(config.inputs.front(), [](std::istream& in) { return read_int_matrix(in); });
  const SmithDecomposition s = smith_normal_form(a);
  if (config.format == OutputFormat::json) {
    nlohmann::ordered_json doc{{"d", strings(s.d)}, {"p", matrix_json(s.p)}, {"q", matrix_json(s.q_right)}};
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  out << "# d\n";
  write_matrix(out, IntMatrix(1, s.d.size(), s.d));
  out << "# P\n";
  write_matrix(out, s.p);
  out << "# Q\n";
  write_matrix(out, s.q_right);
  return kExitOk;
}

int run_spectrum(const RunConfig& config, std::ostream& out) {
  std::vector<Record> records;
  for (const auto& [sigma, witness] : reflection_spectrum(config.dimension, config.max_sigma)) {
    const auto& axis = witness.axes.front();
    records.push_back(
        {{"sigma", sigma.get_str()}, {"axis", format_vector(axis.v())}, {"norm", axis.norm().get_str()}});
  }
  emit(records, config.format, out);
  return kExitOk;
}

int run_decompose(const RunConfig& config, std::ostream& out) {
  std::vector<Record> records;
  if (config.odd) {
    SquareWitness w = four_square_odd_decompose(parse_positive(*config.odd, "--odd"));
    records.push_back({{"target", w.target.get_str()}, {"squares", strings(w.squares)}, {"content", w.content.get_str()}});
  }
  if (config.three) {
    const Integer m = parse_positive(*config.three, "--three");
    if (auto w = three_square_decompose(m)) {
      records.push_back(
          {{"target", w->target.get_str()}, {"squares", strings(w->squares)}, {"content", w->content.get_str()}});
    } else {
      records.push_back({{"target", m.get_str()}, {"representable", std::string("no")}});
    }
  }
  if (records.empty()) throw DomainError("decompose needs --odd or --three");
  emit(records, config.format, out);
  return kExitOk;
}

}  // namespace

std::uint64_t default_cap() {
  if (const char* env = std::getenv(kCapEnvVar)) {
    std::uint64_t value = 0;
    const char* end = env + std::char_traits<char>::length(env);
    auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec == std::errc() && ptr == end && value > 0) return value;
  }
  return kDefaultCountCap;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::index: return run_index(config, out);
      case Command::verify: return run_verify(config, out);
      case Command::corpus: return run_corpus(config, out);
      case Command::snf: return run_snf(config, out);
      case Command::spectrum: return run_spectrum(config, out);
      case Command::decompose: return run_decompose(config, out);
      case Command::reflect:
        if (!config.vector) throw DomainError("reflect needs --vector");
        emit_isometry(reflection(parse_vector(*config.vector)), config.format, out);
        return kExitOk;
      case Command::compose: {
        if (config.inputs.size() != 2) throw DomainError("compose needs exactly two matrix files");
        emit_isometry(compose(load_isometry(config.inputs[0]), load_isometry(config.inputs[1])), config.format, out);
        return kExitOk;
      }
    }
  } catch (const ConsistencyError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDisagreement;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coincidence indices of rational orthogonal matrices acting on Z^n"};
  app.name("cslindex");
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig config;
  std::string format = "plain";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"plain", "json"}));
  app.add_flag("--details", config.details, "Include factor data in index reports");

  std::string matrix;
  auto* index = app.add_subcommand("index", "Coincidence index of an isometry or a reflection");
  auto* index_matrix = index->add_option("--matrix", matrix, "Matrix file ('-' for stdin)");
  auto* index_reflect = index->add_option("--reflect", config.vector, "Reflection axis, e.g. 1,1,1");
  index_matrix->excludes(index_reflect);
  index->add_option("--method", config.method, "Route to use")
      ->check(CLI::IsMember({"fortes", "closed", "hnf", "count", "all"}));
  index->add_option("--cap", config.cap, "Residue enumeration cap")->check(CLI::PositiveNumber);

  auto* snf = app.add_subcommand("snf", "Smith normal form with transforms");
  snf->add_option("--matrix", matrix, "Integer matrix file")->required();

  auto* reflect = app.add_subcommand("reflect", "Canonical reflection matrix");
  reflect->add_option("--vector", config.vector, "Axis, e.g. 1,1,1")->required();

  std::vector<std::string> compose_inputs;
  auto* compose_cmd = app.add_subcommand("compose", "Product of two isometries");
  compose_cmd->add_option("inputs", compose_inputs, "Two matrix files")->expected(2)->required();

  auto* verify = app.add_subcommand("verify", "Cross-check every index route");
  verify->add_option("--matrix", matrix, "Matrix file")->required();
  verify->add_option("--cap", config.cap, "Residue enumeration cap")->check(CLI::PositiveNumber);

  auto* spectrum = app.add_subcommand("spectrum", "Indices attained by single reflections");
  spectrum->add_option("--dim", config.dimension, "Dimension")->required()->check(CLI::PositiveNumber);
  spectrum->add_option("--max", config.max_sigma, "Largest index")->required()->check(CLI::PositiveNumber);

  auto* decompose = app.add_subcommand("decompose", "Square decompositions");
  decompose->add_option("--odd", config.odd, "Odd target for the four-square construction");
  decompose->add_option("--three", config.three, "Target for the three-square search");

  auto* corpus = app.add_subcommand("corpus", "Seeded random isometries, all routes compared");
  corpus->add_option("--dim", config.dimension, "Dimension")->required()->check(CLI::PositiveNumber);
  corpus->add_option("--count", config.count, "Number of isometries")->check(CLI::PositiveNumber);
  corpus->add_option("--seed", config.seed, "Seed");
  corpus->add_option("--reflections", config.reflections, "Maximum reflections per isometry")
      ->check(CLI::PositiveNumber);
  corpus->add_option("--bound", config.bound, "Axis coordinate bound")->check(CLI::PositiveNumber);
  corpus->add_option("--cap", config.cap, "Residue enumeration cap")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  config.format = format == "json" ? OutputFormat::json : OutputFormat::plain;
  const std::vector<std::pair<CLI::App*, Command>> commands{
      {index, Command::index},     {snf, Command::snf},           {reflect, Command::reflect},
      {compose_cmd, Command::compose}, {verify, Command::verify}, {spectrum, Command::spectrum},
      {decompose, Command::decompose}, {corpus, Command::corpus}};
  for (const auto& [sub, command] : commands) {
    if (sub->parsed()) config.command = command;
  }
  if (!matrix.empty()) config.inputs.push_back(matrix);
  if (config.command == Command::compose) config.inputs = compose_inputs;
  return run(config, out, err);
}

}  // namespace csl::cli
