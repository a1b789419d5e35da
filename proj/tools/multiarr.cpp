#include "multiarr/builtins.hpp"
#include "multiarr/coxeter.hpp"
#include "multiarr/io.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace multiarr;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kNonFree = 1, kInput = 2, kUndetermined = 3, kStructure = 4 };

ArrangementInput load(const std::string& source) {
  if (auto b = builtin(source)) return *b;
  std::ifstream in(source);
  if (!in) throw ParseError("cannot open '" + source + "' (not a file or builtin name)");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_arrangement_text(ss.str());
}

std::vector<int> parse_mult(const std::string& text, size_t n) {
  std::vector<int> m;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t pos = 0;
      const int v = std::stoi(item, &pos);
      if (pos != item.size() || v < 0) throw std::invalid_argument("");
      m.push_back(v);
    } catch (const std::exception&) {
      throw ParseError("--mult: bad entry '" + item + "'");
    }
  }
  if (m.size() != n) throw ParseError("--mult needs " + std::to_string(n) + " entries");
  return m;
}

std::string indices(const std::vector<size_t>& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

int cmd_chi(const std::string& source) {
  const auto in = load(source);
  const UniPoly chi = char_poly(in.arrangement).poly;
  std::cout << "chi: " << chi.to_string() << "\n";
  std::cout << "coefficients: " << unipoly_to_json(chi)["coefficients"].dump() << "\n";
  std::cout << "factored: " << factored_string(chi) << "\n";
  return kOk;
}

int cmd_free(const std::string& source, const std::string& mult, int cutoff) {
  auto in = load(source);
  if (!in.arrangement.is_central()) {
    std::cerr << "error: freeness needs a central arrangement\n";
    return kInput;
  }
  if (!mult.empty()) in.mult = parse_mult(mult, in.arrangement.size());
  FreenessOptions opts;
  opts.cutoff = cutoff;
  const auto cert = is_free_multi(Multiarrangement(in.arrangement, in.mult), opts);
  std::cout << certificate_to_json(cert).dump(2) << "\n";
  if (cert.is_free()) return kOk;
  return cert.is_nonfree() ? kNonFree : kUndetermined;
}

int cmd_extend(const std::string& source, bool decone) {
  const auto in = load(source);
  const Arrangement& a = in.arrangement;
  if (!a.is_central()) {
    std::cerr << "error: extension needs a central arrangement\n";
    return kInput;
  }
  for (const auto& f : codim2_flats(a))
    if (f.indices.size() > 3) {
      std::cerr << "error: not locally A2; codimension-two flat " << indices(f.indices) << " lies on "
                << f.indices.size() << " hyperplanes\n";
      return kStructure;
    }
  if (auto bad = first_failing_triple(a)) {
    std::cerr << "error: stored forms are not a positive system; triple " << indices(bad->indices)
              << " has no sum relation\n";
    return kStructure;
  }
  const PositiveSystem ps = PositiveSystem::identity(a.size());
  if (!condition_star(a, ps, in.mult))
    std::cerr << "warning: condition (*) fails; the extension need not be free\n";
  const Arrangement e = decone ? decone_extension(a, ps, in.mult) : extend(a, ps, in.mult);
  std::cout << arrangement_to_json(e).dump(2) << "\n";
  return kOk;
}

int cmd_interp(const std::string& type, size_t rank, int k, size_t sample, uint64_t seed) {
  if (type.size() != 1) {
    std::cerr << "error: unsupported type '" << type << "'\n";
    return kInput;
  }
  const RootSystem r = root_system(type[0], rank);
  if (k < 1) throw std::invalid_argument("--k must be positive");
  ReportOptions opts;
  opts.k = k;
  opts.sample = sample;
  opts.seed = seed;
  const auto records = interpolation_report(r, opts);
  size_t qualifying = 0, equivalence = 0, functional = 0, functional_qualifying = 0;
  for (const auto& rec : records) {
    std::cout << record_to_json(rec).dump() << "\n";
    qualifying += rec.qualifies;
    equivalence += rec.equivalence_holds;
    functional += rec.functional_equation;
    functional_qualifying += rec.qualifies && rec.functional_equation;
  }
  json summary{{"type", r.label()},
               {"h", r.h},
               {"k", k},
               {"records", records.size()},
               {"qualifying", qualifying},
               {"equivalence_holds", equivalence},
               {"functional_equation", functional},
               {"functional_equation_qualifying", functional_qualifying}};
  std::cout << json{{"summary", summary}}.dump() << "\n";
  return kOk;
}

// Experimental: free multiplicities on A3 with entries in [1, max] whose
// canonical extension is or is not free.
int cmd_extendable(int max_mult) {
  if (max_mult < 1 || max_mult > 3) throw std::invalid_argument("--max must be in [1, 3]");
  const RootSystem r = root_system('A', 3);
  const PositiveSystem ps = PositiveSystem::identity(r.roots.size());
  std::vector<int> m(r.roots.size(), 1);
  size_t free_count = 0, extendable = 0;
  while (true) {
    const auto base = is_free_multi(Multiarrangement(r.roots, m));
    if (base.is_free()) {
      ++free_count;
      const auto ext = extension_free(r.roots, ps, m);
      extendable += ext.is_free();
      std::cout << json{{"m", m},
                        {"exponents", base.exponents()},
                        {"condition_star", condition_star(r.roots, ps, m)},
                        {"extension", ext.verdict_name()}}
                       .dump()
                << "\n";
    }
    size_t pos = m.size();
    while (pos > 0 && m[pos - 1] == max_mult) m[--pos] = 1;
    if (pos == 0) break;
    ++m[pos - 1];
  }
  std::cout << json{{"summary", {{"free", free_count}, {"canonical_extension_free", extendable}}}}.dump() << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hyperplane multiarrangements: characteristic polynomials, freeness, extensions"};
  app.require_subcommand(1);

  std::string input, mult, type = "A";
  int cutoff = -1, k = 1, max_mult = 2;
  bool decone = false;
  size_t rank = 2, sample = 0;
  uint64_t seed = 1;

  auto* chi = app.add_subcommand("chi", "characteristic polynomial");
  chi->add_option("input", input, "JSON file or builtin name")->required();
  auto* free = app.add_subcommand("free", "freeness certificate of (A, m)");
  free->add_option("input", input, "JSON file or builtin name")->required();
  free->add_option("--mult", mult, "comma separated multiplicities (overrides the input)");
  free->add_option("--cutoff", cutoff, "highest degree examined (default |m|)");
  auto* ext = app.add_subcommand("extend", "E(A, m) over the stored forms");
  ext->add_option("input", input, "JSON file or builtin name")->required();
  ext->add_flag("--decone", decone, "emit the affine dE(A, m)");
  auto* interp = app.add_subcommand("interp", "Shi/Catalan interpolation report (JSON lines)");
  interp->add_option("--type", type, "A or D");
  interp->add_option("--rank", rank, "rank (at most 4)");
  interp->add_option("--k", k, "level k >= 1");
  interp->add_option("--sample", sample, "number of sampled multiplicities");
  interp->add_option("--seed", seed, "sampling seed");
  auto* scan = app.add_subcommand("extendable", "experimental: canonical extensions of free A3 multiplicities");
  scan->add_option("--max", max_mult, "largest multiplicity");
  app.add_subcommand("builtins", "list builtin arrangement names");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*chi) return cmd_chi(input);
    if (*free) return cmd_free(input, mult, cutoff);
    if (*ext) return cmd_extend(input, decone);
    if (*interp) return cmd_interp(type, rank, k, sample, seed);
    if (*scan) return cmd_extendable(max_mult);
    for (const auto& n : builtin_names()) std::cout << n << "\n";
    return kOk;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kInput;
}
