#include <algorithm>
#include <iomanip>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "persemi/cli.hpp"

namespace persemi::cli {

namespace {

using Json = nlohmann::ordered_json;

struct CommonArgs {
  std::string format = "text";
  OutputFormat parsed() const { return parse_format(format); }
};

void add_format(CLI::App* cmd, CommonArgs& common) {
  cmd->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
}

std::string comma_list(std::span<const Int> values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) s += ',';
    s += std::to_string(values[i]);
  }
  return s;
}

void recheck_found(EnumerationResult const& result) {
  for (auto const& gens : result.found) {
    if (static_cast<Int>(gens.size()) != result.query.block_size ||
        !std::is_sorted(gens.begin(), gens.end())) {
      throw InvariantViolation("malformed enumeration row " + comma_list(gens));
    }
    Semigroup const semigroup = make_semigroup(gens);
    std::vector<Int> const smallest = ElementStream(semigroup).take(1, gens.size());
    if (smallest != gens || !is_n_permutation(semigroup, result.query.block_size).verdict) {
      throw InvariantViolation("enumeration returned a set that fails re-check: " +
                               comma_list(gens));
    }
  }
}

int cmd_check(std::string const& gens_text, Int n, OutputFormat format, std::ostream& out) {
  GeneratorSet const gens(parse_generators(gens_text));
  if (n <= 0) throw std::invalid_argument("--n must be positive");
  PermutationReport const report = is_n_permutation(make_semigroup(gens), n);
  render_check(out, gens, report, format);
  return report.verdict ? kSuccess : kCheckedFalse;
}

int cmd_info(std::string const& gens_text, OutputFormat format, std::ostream& out) {
  Semigroup const semigroup = make_semigroup(GeneratorSet(parse_generators(gens_text)));
  render_info(out, semigroup, format);
  return kSuccess;
}

int cmd_enumerate(EnumerationQuery const& query, unsigned workers, OutputFormat format,
                  std::ostream& out, std::ostream& err) {
  EnumerationResult const result = enumerate(query, {workers, false});
  recheck_found(result);
  render_enumeration(out, result, format);
  if (format == OutputFormat::Text) {
    err << "wall time: " << std::fixed << std::setprecision(3) << result.wall_time.count()
        << " s\n";
  }
  return kSuccess;
}

int cmd_conjecture(Int from, Int to, unsigned workers, OutputFormat format, std::ostream& out,
                   std::ostream& err) {
  ConjectureReport const report = check_conjecture(from, to, workers);
  if (report.below_hypothesis) {
    err << "warning: multiplicities below " << kConjectureMinMultiplicity
        << " lie outside the conjecture's hypothesis\n";
  }
  render_conjecture(out, report, format);
  return report.counterexamples().empty() ? kSuccess : kCheckedFalse;
}

int cmd_family_gen(std::string const& id_text, Int k, OutputFormat format, std::ostream& out) {
  FamilyInstance const inst = family_instance(FamilyId::parse(id_text), k);
  auto const gens = inst.generators.elements();
  switch (format) {
    case OutputFormat::Text:
      out << comma_list(gens) << '\n';
      break;
    case OutputFormat::Json:
      out << Json{{"family", inst.id.to_string()}, {"k", inst.k}, {"generators", gens}}.dump(2)
          << '\n';
      break;
    case OutputFormat::Csv: {
      out << "family,k";
      for (std::size_t j = 1; j <= gens.size(); ++j) out << ",g" << j;
      out << '\n' << inst.id.to_string() << ',' << inst.k << ',' << comma_list(gens) << '\n';
      break;
    }
  }
  return kSuccess;
}

struct VerifyRow {
  FamilyId id;
  Int k;
  StructureCheck structure;
  bool permutation;
};

int cmd_family_verify(std::vector<FamilyId> const& ids, std::optional<Int> single_k, Int kmax,
                      OutputFormat format, std::ostream& out) {
  std::vector<VerifyRow> rows;
  for (FamilyId const id : ids) {
    Int const lo = single_k ? *single_k : id.min_k();
    Int const hi = single_k ? *single_k : kmax;
    for (Int k = lo; k <= hi; ++k) {
      StructureCheck const structure = verify_structure(id, k);
      bool const permutation =
          is_n_permutation(make_semigroup(family_generators(id, k)), id.block_size()).verdict;
      rows.push_back({id, k, structure, permutation});
    }
  }
  bool const all_ok = std::all_of(rows.begin(), rows.end(), [](VerifyRow const& r) {
    return r.structure.ok && r.permutation;
  });

  switch (format) {
    case OutputFormat::Text:
      for (auto const& r : rows) {
        out << r.id.to_string() << " k=" << r.k << ": structure "
            << (r.structure.ok ? "ok" : "FAIL") << ", permutation "
            << (r.permutation ? "ok" : "FAIL") << ", bound " << r.structure.bound;
        if (r.structure.first_difference) {
          out << ", first difference " << *r.structure.first_difference << " (only in "
              << (r.structure.difference_in_semigroup ? "semigroup" : "description") << ")";
        }
        out << '\n';
      }
      out << rows.size() << " instances, " << (all_ok ? "all pass" : "failures present") << '\n';
      break;
    case OutputFormat::Json: {
      Json arr = Json::array();
      for (auto const& r : rows) {
        arr.push_back({{"family", r.id.to_string()},
                       {"k", r.k},
                       {"ok", r.structure.ok},
                       {"bound", r.structure.bound},
                       {"first_difference", r.structure.first_difference
                                                ? Json(*r.structure.first_difference)
                                                : Json(nullptr)},
                       {"difference_in_semigroup", r.structure.difference_in_semigroup},
                       {"permutation", r.permutation}});
      }
      out << Json{{"all_pass", all_ok}, {"results", arr}}.dump(2) << '\n';
      break;
    }
    case OutputFormat::Csv:
      out << "family,k,structure_ok,permutation_ok,bound,first_difference\n";
      for (auto const& r : rows) {
        out << r.id.to_string() << ',' << r.k << ',' << (r.structure.ok ? "true" : "false")
            << ',' << (r.permutation ? "true" : "false") << ',' << r.structure.bound << ',';
        if (r.structure.first_difference) out << *r.structure.first_difference;
        out << '\n';
      }
      break;
  }
  return all_ok ? kSuccess : kCheckedFalse;
}

int cmd_family_match(std::string const& gens_text, OutputFormat format, std::ostream& out) {
  GeneratorSet const gens(parse_generators(gens_text));
  FamilyMatch const match = match_family(gens);
  switch (format) {
    case OutputFormat::Text:
      if (match.matches.empty()) out << "no match\n";
      for (auto const& [id, k] : match.matches) out << id.to_string() << " k=" << k << '\n';
      break;
    case OutputFormat::Json: {
      Json arr = Json::array();
      for (auto const& [id, k] : match.matches) arr.push_back({{"family", id.to_string()}, {"k", k}});
      out << Json{{"generators", gens.elements()}, {"matches", arr}}.dump(2) << '\n';
      break;
    }
    case OutputFormat::Csv:
      out << "family,k\n";
      for (auto const& [id, k] : match.matches) out << id.to_string() << ',' << k << '\n';
      break;
  }
  return kSuccess;
}

int cmd_family_members(std::string const& id_text, Int k, std::optional<Int> bound,
                       OutputFormat format, std::ostream& out) {
  FamilyId const id = FamilyId::parse(id_text);
  GeneratorSet const gens = family_generators(id, k);
  if (!has_parametric_form(id)) {
    throw std::invalid_argument(id.to_string() + " has no parametric membership form");
  }
  Int const limit = bound ? *bound : frobenius(make_semigroup(gens)) + 2 * gens.smallest();
  if (limit < 0) throw std::invalid_argument("--bound must be non-negative");
  std::vector<Int> const members = parametric_members(id, k, limit);
  switch (format) {
    case OutputFormat::Text:
      out << comma_list(members) << '\n';
      break;
    case OutputFormat::Json:
      out << Json{{"family", id.to_string()}, {"k", k}, {"bound", limit}, {"members", members}}
                 .dump(2)
          << '\n';
      break;
    case OutputFormat::Csv:
      out << "x\n";
      for (Int x : members) out << x << '\n';
      break;
  }
  return kSuccess;
}

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Toolkit for n-permutation numerical semigroups", "persemi"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  CommonArgs common;
  std::string gens_text;
  std::string id_text;
  Int n = 0;
  Int k = 0;
  Int kmax = 12;
  Int bound = 0;
  Int min_g1 = 1;
  Int max_gk = 0;
  Int from = 0;
  Int to = 0;
  bool all = false;
  unsigned workers = default_workers();

  auto* check = app.add_subcommand("check", "Decide the n-permutation property");
  check->add_option("generators", gens_text, "Comma-separated generators")->required();
  check->add_option("--n", n, "Block size")->required();
  add_format(check, common);

  auto* info = app.add_subcommand("info", "Multiplicity, Frobenius number, Apery set, elements");
  info->add_option("generators", gens_text, "Comma-separated generators")->required();
  add_format(info, common);

  auto* enumerate_cmd = app.add_subcommand("enumerate", "Enumerate n-permutation semigroups");
  enumerate_cmd->add_option("--n", n, "Block size")->required();
  enumerate_cmd->add_option("--min", min_g1, "Smallest multiplicity")->capture_default_str();
  enumerate_cmd->add_option("--max", max_gk, "Bound on the largest first-block element")
      ->required();
  enumerate_cmd->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
  add_format(enumerate_cmd, common);

  auto* family = app.add_subcommand("family", "Family generators, structure and membership");
  family->require_subcommand(1);
  auto* gen = family->add_subcommand("gen", "Generators of a family instance");
  gen->add_option("id", id_text, "H1..H16 or N<n>")->required();
  gen->add_option("--k", k, "Family parameter")->required();
  add_format(gen, common);

  auto* verify = family->add_subcommand("verify", "Check structural descriptions");
  verify->add_option("id", id_text, "H1..H16 or N<n>");
  auto* all_flag = verify->add_flag("--all", all, "All of H1..H16");
  auto* verify_k = verify->add_option("--k", k, "Single parameter");
  verify->add_option("--kmax", kmax, "Largest parameter")->capture_default_str();
  verify_k->excludes(all_flag);
  add_format(verify, common);

  auto* match = family->add_subcommand("match", "Families whose generators equal the input");
  match->add_option("generators", gens_text, "Comma-separated generators")->required();
  add_format(match, common);

  auto* members = family->add_subcommand("members", "Parametric membership form");
  members->add_option("id", id_text, "Family with a parametric form")->required();
  members->add_option("--k", k, "Family parameter")->required();
  auto* bound_opt = members->add_option("--bound", bound, "Upper bound (default F + 2a)");
  add_format(members, common);

  auto* conjecture = app.add_subcommand("conjecture", "Classify 3-permutation semigroups");
  conjecture->add_option("--from", from, "Smallest multiplicity")->required();
  conjecture->add_option("--to", to, "Largest multiplicity")->required();
  conjecture->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
  add_format(conjecture, common);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e, out, err);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e, out, err);
  } catch (CLI::ParseError const& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    OutputFormat const format = common.parsed();
    if (check->parsed()) return cmd_check(gens_text, n, format, out);
    if (info->parsed()) return cmd_info(gens_text, format, out);
    if (enumerate_cmd->parsed()) {
      return cmd_enumerate({n, min_g1, max_gk}, workers, format, out, err);
    }
    if (conjecture->parsed()) return cmd_conjecture(from, to, workers, format, out, err);
    if (gen->parsed()) return cmd_family_gen(id_text, k, format, out);
    if (match->parsed()) return cmd_family_match(gens_text, format, out);
    if (members->parsed()) {
      return cmd_family_members(id_text, k,
                                bound_opt->count() ? std::optional<Int>(bound) : std::nullopt,
                                format, out);
    }
    if (verify->parsed()) {
      if (all == !id_text.empty()) {
        throw std::invalid_argument("family verify takes either an id or --all");
      }
      std::vector<FamilyId> const ids =
          all ? all_h_families() : std::vector<FamilyId>{FamilyId::parse(id_text)};
      std::optional<Int> const single = verify_k->count() ? std::optional<Int>(k) : std::nullopt;
      return cmd_family_verify(ids, single, kmax, format, out);
    }
    throw InvariantViolation("no command dispatched");
  } catch (InvariantViolation const& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  } catch (std::invalid_argument const& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (std::domain_error const& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (std::out_of_range const& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (std::logic_error const& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  } catch (std::exception const& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace persemi::cli
