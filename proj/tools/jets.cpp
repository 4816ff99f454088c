// Command-line front end for the jet-range library: jet bounds, section
// tables, floor-lemma witnesses, jet-bundle Chern classes, and the
// projective-space classification, over built-in or user descriptors.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "jets/catalog.hpp"
#include "jets/chern.hpp"
#include "jets/descriptor.hpp"
#include "jets/render.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitValidation = 2;

struct SourceFlags {
  std::string catalog_id;
  std::string file_path;
  std::optional<long long> n;
  std::string cls;
  std::optional<long long> degree;
  std::string eps;
  std::optional<long long> chi;
  std::optional<long long> L2;
  std::optional<long long> LK;

  bool has_inline() const {
    return n || degree || !eps.empty() || !cls.empty() || chi || L2 || LK;
  }
};

void add_source_flags(CLI::App& cmd, SourceFlags& src) {
  cmd.add_option("--catalog", src.catalog_id, "Built-in descriptor id");
  cmd.add_option("--file", src.file_path, "Descriptor JSON file");
  cmd.add_option("--n", src.n, "Dimension (inline descriptor)");
  cmd.add_option("--class", src.cls, "fano|trivialK|general (inline)");
  cmd.add_option("--degree", src.degree, "L^n or (-K)^n (inline)");
  cmd.add_option("--eps", src.eps, "Seshadri constant p/q (inline)");
  cmd.add_option("--chi", src.chi, "chi(O_X) (inline surface data)");
  cmd.add_option("--L2", src.L2, "L^2 (inline surface data)");
  cmd.add_option("--LK", src.LK, "L.K_X (inline surface data)");
}

jets::VarietyRecord resolve_record(const SourceFlags& src) {
  const int count = (!src.catalog_id.empty() ? 1 : 0) +
                    (!src.file_path.empty() ? 1 : 0) +
                    (src.has_inline() ? 1 : 0);
  if (count == 0)
    throw jets::invalid_input(
        "no descriptor given: use --catalog, --file, or inline flags");
  if (count > 1)
    throw jets::invalid_input(
        "conflicting descriptor sources: pick one of --catalog, --file, "
        "inline flags");
  if (!src.catalog_id.empty()) {
    auto rec = jets::find_record(src.catalog_id);
    if (!rec)
      throw jets::invalid_input("unknown catalog id '" + src.catalog_id +
                                "'");
    return *rec;
  }
  if (!src.file_path.empty()) {
    std::ifstream in(src.file_path);
    if (!in)
      throw jets::invalid_input("cannot open descriptor file '" +
                                src.file_path + "'");
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw jets::invalid_input("malformed descriptor JSON: " +
                                std::string(e.what()));
    }
    return jets::record_from_json(j);
  }
  jets::VarietyRecord rec;
  rec.id = "inline";
  rec.name = "inline descriptor";
  if (!src.n || !src.degree || src.cls.empty())
    throw jets::invalid_input(
        "inline descriptor needs --n, --class and --degree");
  rec.n = *src.n;
  rec.cls = jets::parse_canonical_class(src.cls);
  rec.degree = *src.degree;
  if (!src.eps.empty())
    rec.eps = jets::EpsInfo{jets::Rational::parse(src.eps),
                            {jets::PointClass::Tag::AllPoints, ""},
                            "inline"};
  if (src.chi || src.L2 || src.LK) {
    if (!src.chi || !src.L2 || !src.LK)
      throw jets::invalid_input(
          "inline surface data needs all of --chi, --L2, --LK");
    rec.surface =
        jets::SurfaceSections{*src.chi, *src.L2, *src.LK, jets::Integer(1)};
  }
  return rec;
}

struct KRange {
  long long from = 1;
  long long to = 1;
};

KRange parse_k_range(const std::string& text) {
  const auto bad = [&] {
    throw jets::invalid_input("bad --k range '" + text +
                              "' (expected A..B or a single integer)");
  };
  KRange r;
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      r.from = r.to = std::stoll(text);
    } else {
      r.from = std::stoll(text.substr(0, dots));
      r.to = std::stoll(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    bad();
  }
  if (r.from < 1 || r.to < r.from || r.to > 1000000)
    bad();
  return r;
}

int run_table(const SourceFlags& src, const std::string& k_text, bool prune,
              const std::string& format) {
  const jets::VarietyRecord rec = resolve_record(src);
  const auto violations = jets::validate(rec);
  if (!violations.empty()) {
    for (const auto& v : violations)
      std::cerr << "validation: " << v << '\n';
    return kExitValidation;
  }
  const KRange kr = parse_k_range(k_text);
  const auto rows = jets::table_rows(rec.table_descriptor(), kr.from, kr.to,
                                     prune);
  std::cout << jets::render_rows(rows, jets::parse_format(format));
  return kExitOk;
}

int run_lemma(const std::string& eps_text, long long b) {
  const auto witness =
      jets::floor_gap_witness(jets::Rational::parse(eps_text), b);
  if (witness)
    std::cout << "witness k=" << *witness << '\n';
  else
    std::cout << "no witness (eps <= b; the gap inequality holds for all k)\n";
  return kExitOk;
}

int run_chern(long long n, long long k, bool anticanonical) {
  const jets::DivisorExpression e = jets::jet_c1(n, k);
  std::cout << "c1 = " << e.a << "*L + " << e.b << "*K";
  if (anticanonical) {
    if (e.a == e.b)
      std::cout << "; trivial for L = -K";
    else
      std::cout << "; NOT trivial for L = -K";
  }
  std::cout << '\n';
  if (anticanonical)
    std::cout << "anticanonical jet determinant trivial at k = n+1: "
              << (jets::anticanonical_jet_trivial(n) ? "yes" : "no") << '\n';
  return kExitOk;
}

int run_classify(const SourceFlags& src) {
  const jets::VarietyRecord rec = resolve_record(src);
  if (rec.cls != jets::CanonicalClass::Fano)
    throw jets::invalid_input("classify requires a Fano descriptor");
  const jets::SeshadriCap cap = jets::fano_seshadri_cap(rec.n, rec.degree);
  std::cout << "corollary cap: eps(-K_X,x) <= " << cap.corollary_bound
            << '\n';
  std::cout << "degree bound: eps <= (" << cap.root_bound.first << ")^(1/"
            << cap.root_bound.second << ")"
            << (cap.root_is_integer ? " (integer root)" : "") << '\n';
  std::cout << "effective cap: " << jets::effective_cap(cap) << '\n';
  if (!rec.eps) {
    std::cout << "verdict: NoConclusion (no Seshadri value recorded)\n";
    return kExitOk;
  }
  switch (jets::pn_verdict(rec.n, rec.degree, rec.eps->value)) {
    case jets::PnVerdict::IsProjectiveSpace:
      std::cout << "verdict: IsProjectiveSpace\n";
      break;
    case jets::PnVerdict::BoundViolated:
      std::cout << "verdict: BoundViolated\n";
      break;
    case jets::PnVerdict::NoConclusion:
      std::cout << "verdict: NoConclusion\n";
      break;
  }
  return kExitOk;
}

int run_catalog_list() {
  for (const auto& rec : jets::load_catalog()) {
    std::cout << rec.id << "  (n=" << rec.n << ", "
              << jets::to_string(rec.cls) << ", degree " << rec.degree;
    if (rec.eps)
      std::cout << ", eps " << rec.eps->value.str();
    std::cout << ")  " << rec.name << '\n';
  }
  return kExitOk;
}

int run_validate(const SourceFlags& src) {
  const jets::VarietyRecord rec = resolve_record(src);
  const auto violations = jets::validate(rec);
  if (violations.empty()) {
    std::cout << rec.id << ": ok\n";
    return kExitOk;
  }
  for (const auto& v : violations)
    std::cout << v << '\n';
  return kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact jet-generation ranges from Seshadri-constant data"};
  app.require_subcommand(1);

  SourceFlags src;
  std::string k_text = "1..10";
  std::string format = "plain";
  bool prune_flag = false;

  auto* bounds = app.add_subcommand(
      "bounds", "Raw jet intervals [s_lo, s_hi] over a k range");
  add_source_flags(*bounds, src);
  bounds->add_option("--k", k_text, "k range A..B");
  bounds->add_option("--format", format, "plain|csv|json|latex");

  auto* table = app.add_subcommand(
      "table", "Jet table over a k range, optionally section-pruned");
  add_source_flags(*table, src);
  table->add_option("--k", k_text, "k range A..B");
  table->add_flag("--prune", prune_flag, "Prune by section counts");
  table->add_option("--format", format, "plain|csv|json|latex");

  auto* prune = app.add_subcommand(
      "prune", "Section-pruned jet table (table --prune)");
  add_source_flags(*prune, src);
  prune->add_option("--k", k_text, "k range A..B");
  prune->add_option("--format", format, "plain|csv|json|latex");

  std::string lemma_eps;
  long long lemma_b = 0;
  auto* lemma = app.add_subcommand(
      "lemma", "Floor-gap witness: smallest k with "
               "floor((k+1)eps)-b > floor(k eps)");
  lemma->add_option("--eps", lemma_eps, "Rational eps p/q")->required();
  lemma->add_option("--b", lemma_b, "Integer bound b")->required();

  long long chern_n = 1;
  long long chern_k = 0;
  bool anticanonical = false;
  auto* chern = app.add_subcommand(
      "chern", "First Chern class of the k-jet bundle J_k(L)");
  chern->add_option("--n", chern_n, "Dimension")->required();
  chern->add_option("--k", chern_k, "Jet order")->required();
  chern->add_flag("--anticanonical", anticanonical,
                  "Report triviality for L = -K_X");

  auto* classify = app.add_subcommand(
      "classify", "Seshadri caps and projective-space verdict (Fano)");
  add_source_flags(*classify, src);

  app.add_subcommand("catalog-list", "List built-in descriptors");

  auto* validate_cmd =
      app.add_subcommand("validate", "Check descriptor invariants");
  add_source_flags(*validate_cmd, src);

  CLI11_PARSE(app, argc, argv);

  try {
    if (bounds->parsed())
      return run_table(src, k_text, false, format);
    if (table->parsed())
      return run_table(src, k_text, prune_flag, format);
    if (prune->parsed())
      return run_table(src, k_text, true, format);
    if (lemma->parsed())
      return run_lemma(lemma_eps, lemma_b);
    if (chern->parsed())
      return run_chern(chern_n, chern_k, anticanonical);
    if (classify->parsed())
      return run_classify(src);
    if (validate_cmd->parsed())
      return run_validate(src);
    return run_catalog_list();
  } catch (const jets::invalid_input& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInvalid;
  }
}
