#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "persemi/cli.hpp"

namespace persemi::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string joined(std::span<const Int> values, std::string_view sep) {
  std::ostringstream s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) s << sep;
    s << values[i];
  }
  return s.str();
}

// "{1, 2, 3}"
std::string braced(std::span<const Int> values) { return "{" + joined(values, ", ") + "}"; }

void emit_json(std::ostream& out, Json const& value) { out << value.dump(2) << '\n'; }

Json block_json(Block const& block) {
  return Json{{"index", block.index}, {"entries", block.entries}, {"residues", block.residues}};
}

}  // namespace

OutputFormat parse_format(std::string_view text) {
  if (text == "text") return OutputFormat::Text;
  if (text == "json") return OutputFormat::Json;
  if (text == "csv") return OutputFormat::Csv;
  throw std::invalid_argument("unknown format '" + std::string(text) + "' (text, json or csv)");
}

std::vector<Int> parse_generators(std::string_view text) {
  std::vector<Int> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t const comma = std::min(text.find(',', pos), text.size());
    std::string_view field = text.substr(pos, comma - pos);
    while (!field.empty() && (field.front() == ' ' || field.front() == '\t')) field.remove_prefix(1);
    while (!field.empty() && (field.back() == ' ' || field.back() == '\t')) field.remove_suffix(1);
    if (field.empty()) {
      throw std::invalid_argument("empty entry in generator list '" + std::string(text) + "'");
    }
    Int value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size() || value < 1) {
      throw std::invalid_argument("generator '" + std::string(field) +
                                  "' is not a positive integer");
    }
    values.push_back(value);
    pos = comma + 1;
  }
  std::sort(values.begin(), values.end());
  if (std::adjacent_find(values.begin(), values.end()) != values.end()) {
    throw std::invalid_argument("duplicate generator in '" + std::string(text) + "'");
  }
  return values;
}

unsigned default_workers() {
  char const* env = std::getenv("PERSEMI_WORKERS");
  if (env == nullptr || *env == '\0') return 1;
  char* end = nullptr;
  unsigned long const value = std::strtoul(env, &end, 10);
  if (*end != '\0' || value == 0 || value > 1024) return 1;
  return static_cast<unsigned>(value);
}

void render_check(std::ostream& out, GeneratorSet const& gens, PermutationReport const& report,
                  OutputFormat format) {
  switch (format) {
    case OutputFormat::Text:
      out << "semigroup: <" << joined(gens.elements(), ", ") << ">\n"
          << "block size: " << report.n << '\n'
          << "generated by first block: " << (report.generated_by_prefix ? "yes" : "no") << '\n'
          << "blocks checked: " << report.blocks_checked << " (elements g1..g"
          << report.horizon_index << ")\n";
      if (report.first_failure) {
        auto const& b = *report.first_failure;
        out << "first failure: block " << b.index << " entries (" << joined(b.entries, ", ")
            << ") residues (" << joined(b.residues, ", ") << ")\n";
      }
      out << "verdict: " << (report.verdict ? "" : "not ") << report.n << "-permutation\n";
      break;
    case OutputFormat::Json: {
      Json j{{"generators", gens.elements()},
             {"n", report.n},
             {"verdict", report.verdict},
             {"generated_by_prefix", report.generated_by_prefix},
             {"blocks_checked", report.blocks_checked},
             {"first_failure", nullptr},
             {"horizon_index", report.horizon_index}};
      if (report.first_failure) j["first_failure"] = block_json(*report.first_failure);
      emit_json(out, j);
      break;
    }
    case OutputFormat::Csv:
      out << "generators,n,verdict,generated_by_prefix,blocks_checked,horizon_index,"
             "failure_block,failure_entries\n"
          << joined(gens.elements(), " ") << ',' << report.n << ','
          << (report.verdict ? "true" : "false") << ','
          << (report.generated_by_prefix ? "true" : "false") << ',' << report.blocks_checked
          << ',' << report.horizon_index << ',';
      if (report.first_failure) {
        out << report.first_failure->index << ',' << joined(report.first_failure->entries, " ");
      } else {
        out << ',';
      }
      out << '\n';
      break;
  }
}

void render_info(std::ostream& out, Semigroup const& semigroup, OutputFormat format) {
  constexpr std::size_t kShown = 30;
  auto const gens = semigroup.generators().elements();
  auto const apery = semigroup.apery().minima();
  std::vector<Int> const elements = ElementStream(semigroup).take(1, kShown);
  switch (format) {
    case OutputFormat::Text:
      out << "semigroup: <" << joined(gens, ", ") << ">\n"
          << "multiplicity: " << semigroup.multiplicity() << '\n'
          << "frobenius: " << semigroup.frobenius() << '\n'
          << "apery (mod " << semigroup.multiplicity() << "): " << braced(apery) << '\n'
          << "first " << kShown << " elements: " << joined(elements, ", ") << '\n';
      break;
    case OutputFormat::Json:
      emit_json(out, Json{{"generators", gens},
                          {"multiplicity", semigroup.multiplicity()},
                          {"frobenius", semigroup.frobenius()},
                          {"apery", apery},
                          {"elements", elements}});
      break;
    case OutputFormat::Csv:
      out << "generators,multiplicity,frobenius,apery,elements\n"
          << joined(gens, " ") << ',' << semigroup.multiplicity() << ',' << semigroup.frobenius()
          << ',' << joined(apery, " ") << ',' << joined(elements, " ") << '\n';
      break;
  }
}

void render_enumeration(std::ostream& out, EnumerationResult const& result, OutputFormat format) {
  switch (format) {
    case OutputFormat::Text:
      for (auto const& gens : result.found) out << braced(gens) << '\n';
      out << "# " << result.found.size() << " semigroups, " << result.candidates_examined
          << " candidates examined\n";
      break;
    case OutputFormat::Json:
      emit_json(out, Json{{"query",
                           {{"block_size", result.query.block_size},
                            {"min_g1", result.query.min_g1},
                            {"max_gk", result.query.max_gk}}},
                          {"found", result.found},
                          {"candidates_examined", result.candidates_examined}});
      break;
    case OutputFormat::Csv:
      for (Int j = 1; j <= result.query.block_size; ++j) {
        out << (j == 1 ? "" : ",") << 'g' << j;
      }
      out << '\n';
      for (auto const& gens : result.found) out << joined(gens, ",") << '\n';
      break;
  }
}

void render_conjecture(std::ostream& out, ConjectureReport const& report, OutputFormat format) {
  auto confirmed_text = [](ConjectureRow const& row) -> std::string {
    if (!row.confirmed) return "";
    return *row.confirmed ? "true" : "false";
  };
  switch (format) {
    case OutputFormat::Text:
      out << "multiplicity range: " << report.m_min << ".." << report.m_max << '\n';
      for (auto const& row : report.rows) {
        out << row.multiplicity() << "  " << braced(row.generators) << "  ";
        if (row.matches.empty()) out << "unmatched";
        for (std::size_t i = 0; i < row.matches.size(); ++i) {
          out << (i ? ", " : "") << row.matches[i].first.to_string() << " k=" << row.matches[i].second;
        }
        if (row.confirmed) out << (*row.confirmed ? "  (reference label confirmed)" : "  (reference label NOT matched)");
        out << '\n';
      }
      out << "semigroups: " << report.rows.size() << ", unmatched: " << report.unmatched.size();
      if (!report.unmatched.empty()) {
        out << " [";
        for (std::size_t i = 0; i < report.unmatched.size(); ++i) {
          out << (i ? " " : "") << braced(report.unmatched[i]);
        }
        out << "]";
      }
      out << '\n';
      break;
    case OutputFormat::Json: {
      Json rows = Json::array();
      for (auto const& row : report.rows) {
        Json matches = Json::array();
        for (auto const& [id, k] : row.matches) matches.push_back({{"family", id.to_string()}, {"k", k}});
        rows.push_back({{"generators", row.generators},
                        {"matches", matches},
                        {"reference_label", row.reference_label ? Json(row.reference_label->to_string()) : Json(nullptr)},
                        {"confirmed", row.confirmed ? Json(*row.confirmed) : Json(nullptr)}});
      }
      emit_json(out, Json{{"m_min", report.m_min},
                          {"m_max", report.m_max},
                          {"below_hypothesis", report.below_hypothesis},
                          {"rows", rows},
                          {"unmatched", report.unmatched}});
      break;
    }
    case OutputFormat::Csv:
      out << "multiplicity,generators,family,k,confirmed\n";
      for (auto const& row : report.rows) {
        std::string const prefix =
            std::to_string(row.multiplicity()) + ',' + joined(row.generators, " ") + ',';
        if (row.matches.empty()) {
          out << prefix << ",," << confirmed_text(row) << '\n';
        }
        for (auto const& [id, k] : row.matches) {
          out << prefix << id.to_string() << ',' << k << ',' << confirmed_text(row) << '\n';
        }
      }
      break;
  }
}

}  // namespace persemi::cli
