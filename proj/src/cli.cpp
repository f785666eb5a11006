// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mwl/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <sstream>

#include "mwl/bitangents.hpp"
#include "mwl/classifier.hpp"
#include "mwl/dihedral.hpp"
#include "mwl/lattice.hpp"
#include "mwl/matroid.hpp"
#include "mwl/parallel.hpp"

namespace mwl {
namespace {

using json = nlohmann::ordered_json;

// Thrown for resource guards that the user can lift (exit 4).
class ResourceRefusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> SplitCommas(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
  return parts;
}

std::vector<PairIndex> ParseSubset(const std::string& text) {
  std::vector<PairIndex> out;
  for (const auto& part : SplitCommas(text)) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != part.size()) {
      throw std::invalid_argument("bad pair index '" + part + "'");
    }
    const PairIndex idx(v);
    for (const auto& seen : out) {
      if (seen == idx) throw std::invalid_argument("duplicate pair index " + part);
    }
    out.push_back(idx);
  }
  if (out.empty()) throw std::invalid_argument("empty subset");
  return out;
}

std::vector<int> ParseSigns(const std::string& text, std::size_t n) {
  std::vector<int> out;
  for (const auto& part : SplitCommas(text)) {
    if (part == "+" || part == "1" || part == "+1") {
      out.push_back(1);
    } else if (part == "-" || part == "-1") {
      out.push_back(-1);
    } else {
      throw std::invalid_argument("bad sign '" + part + "'");
    }
  }
  if (out.size() != n) throw std::invalid_argument("need one sign per subset element");
  return out;
}

json IndexArray(std::span<const PairIndex> subset) {
  json a = json::array();
  for (const auto& i : subset) a.push_back(i.value());
  return a;
}

json RationalArray(std::span<const Rational> values) {
  json a = json::array();
  for (const auto& v : values) a.push_back(FormatRational(v));
  return a;
}

void Emit(const json& doc, const std::string& out_path, std::ostream& out) {
  const std::string text = doc.dump(2) + "\n";
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot write " + out_path);
  file << text;
}

int CmdVectors(const std::string& format, std::ostream& out) {
  if (format == "json") {
    json pairs = json::array();
    for (const auto& e : EnumeratePairs()) {
      pairs.push_back({{"index", e.index.value()},
                       {"coords", e.representative.coords()},
                       {"scale", 4},
                       {"height", FormatRational(HeightPairing(e.representative,
                                                               e.representative))}});
    }
    out << pairs.dump(2) << "\n";
    return kExitOk;
  }
  out << "# coordinates are scaled by 4; height = dot / 16\n";
  out << "index  coords                     height\n";
  for (const auto& e : EnumeratePairs()) {
    std::string coords;
    for (int c : e.representative.coords()) {
      if (!coords.empty()) coords += " ";
      coords += (c > 0 ? " " : "") + std::to_string(c);
    }
    out << std::setw(5) << e.index.value() << "  " << std::left << std::setw(26) << coords
        << std::right << " "
        << FormatRational(HeightPairing(e.representative, e.representative)) << "\n";
  }
  return kExitOk;
}

struct ClassifyArgs {
  int max_r = 10;
  std::string field = "q";
  std::string out;
  std::string checkpoint;
  unsigned threads = DefaultThreads();
  bool force_full = false;
  bool timing = false;
  bool quiet = false;
};

int CmdClassify(const ClassifyArgs& args, std::ostream& out, std::ostream& err) {
  if (args.max_r < 1 || args.max_r > kPairCount) {
    throw std::invalid_argument("--max-r must be in 1..28");
  }
  if (args.max_r > kMaxUnforcedLevel && !args.force_full) {
    throw ResourceRefusal("--max-r above 20 needs --force-full (levels near 14 hold C(28,14) "
                          "entries, about 160 MB each)");
  }
  CensusOptions options;
  options.field = Field::Parse(args.field);
  options.threads = std::max(1u, args.threads);
  if (!args.checkpoint.empty()) options.checkpoint_dir = args.checkpoint;
  if (!args.quiet) {
    options.on_level = [&err](int r, std::size_t n, bool resumed) {
      err << "r=" << r << " n_r=" << n << (resumed ? " (checkpoint)" : "") << std::endl;
    };
  }
  const CensusResult result = RunCensus(args.max_r, options);

  json table = json::array();
  for (const auto& [r, n] : result.n_r) table.push_back({{"r", r}, {"n", n}});
  json doc = {{"field", result.field.ToString()}, {"max_r", args.max_r}, {"n_r", table}};
  if (options.checkpoint_dir) {
    json paths = json::array();
    for (const auto& p : result.checkpoint_paths) paths.push_back(p.string());
    doc["checkpoints"] = paths;
  }
  if (args.timing) doc["timing"] = {{"seconds", result.seconds}, {"threads", options.threads}};
  Emit(doc, args.out, out);
  return kExitOk;
}

int CmdMatroid(const std::string& subset_text, const std::string& field_text,
               std::ostream& out) {
  const auto subset = ParseSubset(subset_text);
  if (subset.size() > MatroidStructure::kMaxCircuitSearch) {
    throw ResourceRefusal("circuit search is limited to 20 elements");
  }
  const MatroidStructure m(GroundSet(subset, Field::Parse(field_text)));
  json circuits = json::array();
  for (const auto& c : m.Circuits(subset)) circuits.push_back(IndexArray(c));
  json doc = {{"field", m.ground().field().ToString()},
              {"subset", IndexArray(subset)},
              {"rank", m.Rank(subset)},
              {"independent", m.IsIndependent(subset)},
              {"circuits", circuits}};
  out << doc.dump(2) << "\n";
  return kExitOk;
}

struct DihedralArgs {
  std::string subset;
  std::string signs;
  std::int64_t p = 0;
  std::int64_t p_max = 0;
};

int CmdDihedral(const DihedralArgs& args, std::ostream& out) {
  const auto subset = ParseSubset(args.subset);
  std::vector<SignedPair> sections = AllPositive(subset);
  if (!args.signs.empty()) {
    const auto signs = ParseSigns(args.signs, subset.size());
    for (std::size_t i = 0; i < signs.size(); ++i) sections[i].sign = signs[i];
  }
  json signs = json::array();
  for (const auto& s : sections) signs.push_back(s.sign);
  json doc = {{"subset", IndexArray(subset)}, {"signs", signs}};

  const bool independent_q = RankQ(CoordinateMatrix(subset)) == subset.size();
  if (independent_q) {
    doc["rank_drop_primes"] = RankDropPrimes(subset);
  } else {
    doc["rank_drop_primes"] = nullptr;
  }
  if ((args.p != 0) == (args.p_max != 0)) {
    throw std::invalid_argument("give exactly one of --p or --p-max");
  }
  if (args.p != 0) {
    const CoverQuery q{sections, args.p};
    ValidateQuery(q);
    try {
      doc["p"] = args.p;
      doc["exists"] = DcoverExists(q);
      doc["circuit"] = CircuitImpliesCover(q);
    } catch (const KernelTooLarge& e) {
      throw ResourceRefusal(e.what());
    }
  } else {
    if (args.p_max < 3 || args.p_max > kMaxCoverPrime) {
      throw std::invalid_argument("--p-max must be in 3..10000");
    }
    try {
      doc["p_max"] = args.p_max;
      doc["primes"] = CoverPrimes(sections, args.p_max);
    } catch (const KernelTooLarge& e) {
      throw ResourceRefusal(e.what());
    }
  }
  out << doc.dump(2) << "\n";
  return kExitOk;
}

AronholdInput ReadAronhold(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("a") || !doc["a"].is_array() || doc["a"].size() != 3) {
    throw std::invalid_argument("input must be {\"a\": [[...],[...],[...]]} with 3 rows");
  }
  AronholdInput input;
  for (int j = 0; j < 3; ++j) {
    const json& row = doc["a"][j];
    if (!row.is_array() || row.size() != 3) throw std::invalid_argument("each row needs 3 entries");
    for (int i = 0; i < 3; ++i) {
      const json& v = row[i];
      if (v.is_string()) {
        input.a[j][i] = ParseRational(v.get<std::string>());
      } else if (v.is_number_integer()) {
        input.a[j][i] = Rational(v.get<long>());
      } else {
        throw std::invalid_argument("entries must be rational strings \"p/q\" or integers");
      }
    }
  }
  return input;
}

json FormJson(const LinearForm& l) { return RationalArray(l.c); }

json ReportJson(const BitangentReport& r) {
  json a = json::array();
  for (const auto& row : r.input.a) a.push_back(RationalArray(row));
  json u = json::array();
  for (const auto& form : r.solution.u) u.push_back(FormJson(form));

  json monomials = json::array();
  json coeffs = json::array();
  for (const auto& e : TernaryForm::Monomials(4)) {
    monomials.push_back(e);
    coeffs.push_back(FormatRational(r.quartic[e]));
  }

  json lines = json::array();
  int true_count = 0, hyperflex = 0;
  for (std::size_t i = 0; i < r.lines.size(); ++i) {
    lines.push_back({{"label", r.lines[i].label},
                     {"family", r.lines[i].family},
                     {"coefficients", FormJson(r.lines[i].form)},
                     {"tangency", std::string(TangencyName(r.tangency[i]))}});
    true_count += r.tangency[i] == Tangency::kTrueBitangent;
    hyperflex += r.tangency[i] == Tangency::kHyperflexLine;
  }
  json triples = json::array();
  for (const auto& t : r.concurrent_triples) {
    triples.push_back({r.lines[t[0]].label, r.lines[t[1]].label, r.lines[t[2]].label});
  }
  const std::size_t n = r.lines.size();
  return {{"input", {{"a", a}}},
          {"lambda", RationalArray(r.solution.lambda)},
          {"k", RationalArray(r.solution.k)},
          {"u", u},
          {"fourth_equation_residual", FormJson(r.solution.fourth_residual)},
          {"quartic", {{"monomials", monomials}, {"coefficients", coeffs}}},
          {"lines", lines},
          {"concurrent_triples", triples},
          {"summary",
           {{"lines", n},
            {"true_bitangents", true_count},
            {"hyperflex_lines", hyperflex},
            {"triples_checked", n * (n - 1) * (n - 2) / 6},
            {"concurrent_triples", r.concurrent_triples.size()}}}};
}

int CmdBitangents(const std::string& aronhold, const std::optional<std::uint64_t>& sample,
                  const std::string& out_path, std::ostream& out) {
  if (aronhold.empty() == !sample.has_value()) {
    throw std::invalid_argument("give exactly one of --aronhold FILE or --sample SEED");
  }
  const AronholdInput input = sample ? SampleAronhold(*sample) : ReadAronhold(aronhold);
  Emit(ReportJson(AnalyzeAronhold(input)), out_path, out);
  return kExitOk;
}

}  // namespace

int ReportException(std::exception_ptr error, std::ostream& err) {
  try {
    std::rethrow_exception(error);
  } catch (const CorruptCheckpoint& e) {
    err << "error: " << e.what() << "\n";
    return kExitCorruptCheckpoint;
  } catch (const ResourceRefusal& e) {
    err << "error: " << e.what() << "\n";
    return kExitResourceBound;
  } catch (const KernelTooLarge& e) {
    err << "error: " << e.what() << "\n";
    return kExitResourceBound;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitResourceBound;
  } catch (const VerificationFailed& e) {
    err << "error: verification failed for " << e.label() << ": " << e.what() << "\n";
    return kExitVerification;
  } catch (const InconsistentSystem& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerification;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SingularSystem& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DegenerateDenominator& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DuplicateLine& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (...) {
    err << "internal error\n";
    return kExitInternal;
  }
}

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Matroid census of E7* minimal vectors, dihedral covers and quartic bitangents",
               "mwl"};
  app.require_subcommand(1);

  std::string format = "table";
  auto* vectors = app.add_subcommand("vectors", "List the 28 pairs of minimal vectors");
  vectors->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "table"}));

  ClassifyArgs classify_args;
  auto* classify = app.add_subcommand("classify", "Signature census n_r for r = 1..R");
  classify->add_option("--max-r", classify_args.max_r, "Largest subset size R (1..28)")
      ->check(CLI::Range(1, 28));
  classify->add_option("--field", classify_args.field, "q or fp:P");
  classify->add_option("--out", classify_args.out, "Write JSON here instead of stdout");
  classify->add_option("--checkpoint", classify_args.checkpoint, "Checkpoint directory");
  classify->add_option("--threads", classify_args.threads, "Worker threads")
      ->check(CLI::Range(1u, 1024u));
  classify->add_flag("--force-full", classify_args.force_full, "Allow R > 20");
  classify->add_flag("--timing", classify_args.timing, "Include wall time in the JSON");
  classify->add_flag("--quiet", classify_args.quiet, "No progress lines on stderr");

  std::string matroid_subset, matroid_field = "q";
  auto* matroid = app.add_subcommand("matroid", "Rank, independence and circuits of a subset");
  matroid->add_option("--subset", matroid_subset, "Comma-separated pair indices")->required();
  matroid->add_option("--field", matroid_field, "q or fp:P");

  DihedralArgs dihedral_args;
  auto* dihedral = app.add_subcommand("dihedral", "Existence of D_2p covers");
  dihedral->add_option("--subset", dihedral_args.subset, "Comma-separated pair indices")
      ->required();
  dihedral->add_option("--signs", dihedral_args.signs, "Comma-separated + / - per element");
  auto* p_opt = dihedral->add_option("--p", dihedral_args.p, "Odd prime");
  auto* pmax_opt = dihedral->add_option("--p-max", dihedral_args.p_max, "Scan odd primes <= M");
  p_opt->excludes(pmax_opt);

  std::string aronhold_path, bitangent_out;
  std::optional<std::uint64_t> sample_seed;
  auto* bitangents = app.add_subcommand("bitangents", "Quartic and 28 bitangents from an Aronhold set");
  bitangents->add_option("--aronhold", aronhold_path, "JSON file {\"a\": [[...],[...],[...]]}");
  bitangents->add_option("--sample", sample_seed, "Use a sampled general input with this seed");
  bitangents->add_option("--out", bitangent_out, "Write JSON here instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*vectors) return CmdVectors(format, out);
    if (*classify) return CmdClassify(classify_args, out, err);
    if (*matroid) return CmdMatroid(matroid_subset, matroid_field, out);
    if (*dihedral) return CmdDihedral(dihedral_args, out);
    if (*bitangents) return CmdBitangents(aronhold_path, sample_seed, bitangent_out, out);
  } catch (...) {
    return ReportException(std::current_exception(), err);
  }
  return kExitUsage;
}

}  // namespace mwl
