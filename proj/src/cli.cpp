#include "dftsub/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "dftsub/counting.hpp"
#include "dftsub/errors.hpp"
#include "dftsub/json_io.hpp"

namespace dftsub {

namespace {

struct GlobalOpts {
  std::string out_path;
  std::string format;
  std::uint64_t seed = 0;
  int jobs = 1;
  std::uint64_t bound = 0;  // 0: module defaults (or DFT_UNITARY_MAX_SEARCH)
};

std::uint64_t effective_bound(const GlobalOpts& g, std::uint64_t fallback) {
  if (g.bound != 0) return g.bound;
  if (const char* env = std::getenv("DFT_UNITARY_MAX_SEARCH")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return fallback;
}

/// Comma/whitespace-separated values; "@path" reads the list from a file.
std::vector<std::uint64_t> parse_values(const std::string& text) {
  std::string data = text;
  if (!text.empty() && text[0] == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw std::invalid_argument("cannot read set file " + text.substr(1));
    std::stringstream buffer;
    buffer << in.rdbuf();
    data = buffer.str();
  }
  for (auto& ch : data) {
    if (ch == ',' || ch == '\n' || ch == '\t' || ch == '\r') ch = ' ';
  }
  std::vector<std::uint64_t> values;
  std::istringstream stream(data);
  std::string token;
  while (stream >> token) {
    std::size_t used = 0;
    const auto v = std::stoull(token, &used);
    if (used != token.size()) {
      throw std::invalid_argument("bad integer in set literal: " + token);
    }
    values.push_back(v);
  }
  return values;
}

IndexSet parse_set(const std::string& text, std::uint64_t n) {
  return IndexSet(n, parse_values(text));
}

/// Exactly one of --n or (--p, --m); reports the resolved modulus.
struct ModulusArg {
  std::uint64_t n = 0;
  std::uint64_t p = 0;
  int m = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--n", n, "modulus N");
    cmd->add_option("--p", p, "prime for N = p^m");
    cmd->add_option("--m", m, "exponent for N = p^m");
  }
  std::uint64_t resolve() const {
    const bool has_n = n != 0;
    const bool has_pm = p != 0 || m != 0;
    if (has_n == has_pm) {
      throw CLI::ValidationError("give exactly one of --n or (--p, --m)");
    }
    if (has_n) return n;
    if (p < 2 || m <= 0) throw CLI::ValidationError("need --p >= 2 and --m >= 1");
    return ipow(p, m);
  }
};

void emit(const GlobalOpts& g, std::ostream& out, const std::string& payload) {
  const bool needs_newline = payload.empty() || payload.back() != '\n';
  if (!g.out_path.empty()) {
    std::ofstream file(g.out_path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot write " + g.out_path);
    file << payload;
    if (needs_newline) file << '\n';
    return;
  }
  out << payload;
  if (needs_newline) out << '\n';
}

void emit(const GlobalOpts& g, std::ostream& out, const Json& payload) {
  if (!g.format.empty() && g.format != "json") {
    throw CLI::ValidationError("unsupported --format " + g.format +
                               " for this command");
  }
  emit(g, out, payload.dump(2));
}

std::string pick_format(const GlobalOpts& g, const std::string& fallback,
                        std::initializer_list<const char*> allowed) {
  const std::string format = g.format.empty() ? fallback : g.format;
  if (std::none_of(allowed.begin(), allowed.end(),
                   [&](const char* a) { return format == a; })) {
    throw CLI::ValidationError("unsupported --format " + format +
                               " for this command");
  }
  return format;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Unitary submatrices of the discrete Fourier transform"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts g;
  app.add_option("--out", g.out_path, "write output to a file instead of stdout");
  app.add_option("--format", g.format, "json|csv|dot|text (per-command default)");
  app.add_option("--seed", g.seed, "seed for randomized demos");
  app.add_option("--jobs", g.jobs, "worker threads for batch sweeps")
      ->check(CLI::Range(1, 256));
  app.add_option("--bound", g.bound, "override brute-force search bounds");

  ModulusArg zeroset_mod;
  std::string zeroset_set;
  auto* zeroset = app.add_subcommand("zeroset", "zero set of an idempotent");
  zeroset_mod.attach(zeroset);
  zeroset->add_option("--set", zeroset_set, "index set J")->required();

  auto* sample = app.add_subcommand("sample", "orthogonal sampling sets");
  ModulusArg sample_find_mod, sample_check_mod;
  std::string sample_find_cols, sample_check_rows, sample_check_cols;
  auto* sample_find = sample->add_subcommand("find", "find a sampling set for J");
  sample_find_mod.attach(sample_find);
  sample_find->add_option("--cols", sample_find_cols, "frequency support J")->required();
  auto* sample_check = sample->add_subcommand("check", "verify a sampling set");
  sample_check_mod.attach(sample_check);
  sample_check->add_option("--rows", sample_check_rows, "sample set I")->required();
  sample_check->add_option("--cols", sample_check_cols, "frequency support J")->required();

  auto* unitary = app.add_subcommand("unitary", "unitary submatrix pairs");
  std::uint64_t make_p = 0;
  int make_m = 0;
  std::string make_marks;
  auto* unitary_make = unitary->add_subcommand("make", "canonical pair from marked columns");
  unitary_make->add_option("--p", make_p, "prime")->required();
  unitary_make->add_option("--m", make_m, "exponent")->required();
  unitary_make->add_option("--marks", make_marks, "marked columns (may be empty)");
  ModulusArg unitary_check_mod;
  std::string unitary_check_rows, unitary_check_cols;
  auto* unitary_check = unitary->add_subcommand("check", "verify a pair");
  unitary_check_mod.attach(unitary_check);
  unitary_check->add_option("--rows", unitary_check_rows)->required();
  unitary_check->add_option("--cols", unitary_check_cols)->required();
  ModulusArg unitary_count_mod;
  std::uint64_t unitary_count_d = 0;
  auto* unitary_count = unitary->add_subcommand("count", "brute-force pair count");
  unitary_count_mod.attach(unitary_count);
  unitary_count->add_option("--d", unitary_count_d, "subset size")->required();

  auto* count = app.add_subcommand("count", "closed-form counts");
  std::uint64_t count_p = 0;
  int count_m = 0, count_logd = 0;
  auto* count_theta = count->add_subcommand("theta", "sampling-set count");
  count_theta->add_option("--p", count_p)->required();
  count_theta->add_option("--m", count_m)->required();
  count_theta->add_option("--logd", count_logd)->required();
  auto* count_phi = count->add_subcommand("phi", "unitary-pair count");
  count_phi->add_option("--p", count_p)->required();
  count_phi->add_option("--m", count_m)->required();
  count_phi->add_option("--logd", count_logd)->required();
  auto* count_table = count->add_subcommand("table", "theta/phi CSV table");
  count_table->add_option("--p", count_p)->required();
  count_table->add_option("--m", count_m)->required();

  auto* tile = app.add_subcommand("tile", "tilings of Z_N");
  ModulusArg tile_check_mod, tile_comp_mod, tile_fug_mod;
  std::string tile_check_set, tile_check_complement, tile_comp_set, tile_fug_set;
  bool tile_comp_exhaustive = false;
  auto* tile_check = tile->add_subcommand("check", "verify a tiling pair");
  tile_check_mod.attach(tile_check);
  tile_check->add_option("--set", tile_check_set)->required();
  tile_check->add_option("--complement", tile_check_complement)->required();
  auto* tile_comp = tile->add_subcommand("complement", "find a tiling complement");
  tile_comp_mod.attach(tile_comp);
  tile_comp->add_option("--set", tile_comp_set)->required();
  tile_comp->add_flag("--exhaustive", tile_comp_exhaustive,
                      "lexicographic search instead of the structural path");
  auto* tile_fug = tile->add_subcommand("fuglede", "sampling-set vs tiling verdicts");
  tile_fug_mod.attach(tile_fug);
  tile_fug->add_option("--set", tile_fug_set)->required();

  ModulusArg prescribe_mod;
  std::string prescribe_divisors;
  bool prescribe_exhaustive = false;
  auto* prescribe = app.add_subcommand("prescribe", "index set with a given zero set");
  prescribe_mod.attach(prescribe);
  prescribe->add_option("--divisors", prescribe_divisors, "target zero-set divisors")
      ->required();
  prescribe->add_flag("--exhaustive", prescribe_exhaustive,
                      "smallest solution by exhaustive search");

  auto* graph = app.add_subcommand("graph", "difference graphs");
  ModulusArg graph_build_mod, graph_clique_mod, graph_berge_mod;
  std::string graph_build_divisors, graph_clique_divisors, graph_berge_divisors;
  int berge_max_len = 13;
  auto* graph_build = graph->add_subcommand("build", "DOT or JSON rendering");
  graph_build_mod.attach(graph_build);
  graph_build->add_option("--divisors", graph_build_divisors)->required();
  auto* graph_clique = graph->add_subcommand("clique", "maximum clique");
  graph_clique_mod.attach(graph_clique);
  graph_clique->add_option("--divisors", graph_clique_divisors)->required();
  auto* graph_berge = graph->add_subcommand("berge", "odd-hole certification");
  graph_berge_mod.attach(graph_berge);
  graph_berge->add_option("--divisors", graph_berge_divisors)->required();
  graph_berge->add_option("--max-len", berge_max_len, "largest hole length")
      ->check(CLI::Range(5, 99));
  std::uint64_t scan_lo = 0, scan_hi = 0;
  std::size_t scan_d_max = 0;
  auto* graph_scan = graph->add_subcommand("scan", "divisibility-conjecture scan");
  graph_scan->add_option("--n-lo", scan_lo, "first modulus")->required();
  graph_scan->add_option("--n-hi", scan_hi, "last modulus")->required();
  graph_scan->add_option("--d-max", scan_d_max, "largest |J| (0: no limit)");

  auto* interp = app.add_subcommand("interp", "interpolating bases");
  ModulusArg interp_cons_mod, interp_arith_mod, interp_rec_mod;
  std::uint64_t interp_d = 0, interp_s = 0, interp_offset = 0;
  std::string interp_rows, interp_cols;
  auto* interp_cons = interp->add_subcommand("cons", "run of consecutive frequencies");
  interp_cons_mod.attach(interp_cons);
  interp_cons->add_option("--d", interp_d)->required();
  interp_cons->add_option("--offset", interp_offset);
  auto* interp_arith = interp->add_subcommand("arith", "arithmetic-progression support");
  interp_arith_mod.attach(interp_arith);
  interp_arith->add_option("--d", interp_d)->required();
  interp_arith->add_option("--s", interp_s)->required();
  interp_arith->add_option("--offset", interp_offset);
  auto* interp_rec = interp->add_subcommand("reconstruct", "seeded round-trip demo");
  interp_rec_mod.attach(interp_rec);
  interp_rec->add_option("--rows", interp_rows)->required();
  interp_rec->add_option("--cols", interp_cols)->required();

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*zeroset) {
      const Idempotent h{parse_set(zeroset_set, zeroset_mod.resolve())};
      emit(g, out, to_json(h));
      return 0;
    }

    if (*sample_find) {
      const auto n = sample_find_mod.resolve();
      const IndexSet j = parse_set(sample_find_cols, n);
      const auto found = find_orthogonal_sampling_set(j, effective_bound(g, 64));
      Json payload{{"j", j.elements}, {"n", n}};
      payload["sampling_set"] = found ? Json(found->elements) : Json(nullptr);
      emit(g, out, payload);
      if (!found) {
        err << "no orthogonal sampling set\n";
        return 1;
      }
      return 0;
    }
    if (*sample_check) {
      const auto n = sample_check_mod.resolve();
      const IndexSet i = parse_set(sample_check_rows, n);
      const IndexSet j = parse_set(sample_check_cols, n);
      const bool ok = is_orthogonal_sampling_set(i, j);
      emit(g, out,
           Json{{"i", i.elements}, {"j", j.elements}, {"n", n}, {"orthogonal", ok}});
      return ok ? 0 : 1;
    }

    if (*unitary_make) {
      std::vector<int> marks;
      if (!make_marks.empty()) {
        for (const auto v : parse_values(make_marks)) {
          marks.push_back(static_cast<int>(v));
        }
      }
      const auto [i, j] = make_unitary_pair(make_p, make_m, marks);
      emit(g, out,
           Json{{"p", make_p},
                {"m", make_m},
                {"marks", marks},
                {"i", i.elements},
                {"j", j.elements}});
      return 0;
    }
    if (*unitary_check) {
      const auto n = unitary_check_mod.resolve();
      const IndexSet i = parse_set(unitary_check_rows, n);
      const IndexSet j = parse_set(unitary_check_cols, n);
      const auto report = numeric_pair_report(i, j);
      emit(g, out, pair_report_json(i, j, report));
      return report.unitary_exact ? 0 : 1;
    }
    if (*unitary_count) {
      const auto n = unitary_count_mod.resolve();
      BruteForceOptions opts;
      opts.max_work = effective_bound(g, opts.max_work);
      opts.jobs = g.jobs;
      const auto total = brute_force_count_unitary_pairs(
          n, static_cast<std::size_t>(unitary_count_d), opts);
      emit(g, out, total.str());
      return 0;
    }

    if (*count_theta || *count_phi) {
      const auto value = *count_theta
                             ? count_sampling_sets(count_p, count_m, count_logd)
                             : count_unitary_pairs(count_p, count_m, count_logd);
      const auto format = pick_format(g, "text", {"text", "json"});
      if (format == "json") {
        emit(g, out,
             Json{{"p", count_p},
                  {"m", count_m},
                  {"log_d", count_logd},
                  {"count", value.str()}});
      } else {
        emit(g, out, value.str());
      }
      return 0;
    }
    if (*count_table) {
      pick_format(g, "csv", {"csv"});
      emit(g, out, theta_phi_csv(theta_phi_table(count_p, count_m)));
      return 0;
    }

    if (*tile_check) {
      const auto n = tile_check_mod.resolve();
      const IndexSet j = parse_set(tile_check_set, n);
      const IndexSet k = parse_set(tile_check_complement, n);
      const bool ok = tiles(j, k);
      emit(g, out,
           Json{{"j", j.elements}, {"k", k.elements}, {"n", n}, {"tiles", ok}});
      return ok ? 0 : 1;
    }
    if (*tile_comp) {
      const auto n = tile_comp_mod.resolve();
      const IndexSet j = parse_set(tile_comp_set, n);
      const auto k = tile_comp_exhaustive
                         ? search_tiling_complement(j, effective_bound(g, std::uint64_t{1} << 32))
                         : find_tiling_complement(j);
      Json payload{{"j", j.elements}, {"n", n}};
      payload["tiling_complement"] = k ? Json(k->elements) : Json(nullptr);
      emit(g, out, payload);
      if (!k) {
        err << "no tiling complement\n";
        return 1;
      }
      return 0;
    }
    if (*tile_fug) {
      const auto n = tile_fug_mod.resolve();
      const IndexSet j = parse_set(tile_fug_set, n);
      const auto report = fuglede_check(j, effective_bound(g, 64),
                                        effective_bound(g, std::uint64_t{1} << 32));
      emit(g, out, to_json(report));
      return 0;
    }

    if (*prescribe) {
      const auto n = prescribe_mod.resolve();
      const DivisorSet target(n, parse_values(prescribe_divisors));
      const auto mode = prescribe_exhaustive ? PrescribeMode::kExhaustive
                                             : PrescribeMode::kConstructive;
      const auto found = prescribe_zero_set(
          target, mode, effective_bound(g, kDefaultSubsetBound));
      Json payload{{"n", n}, {"divisors", target.divisors}};
      payload["j"] = found ? Json(found->elements) : Json(nullptr);
      emit(g, out, payload);
      if (!found) {
        err << "no index set realizes the divisor set\n";
        return 1;
      }
      return 0;
    }

    if (*graph_build) {
      const auto n = graph_build_mod.resolve();
      const DifferenceGraph gr(n, DivisorSet(n, parse_values(graph_build_divisors)));
      const auto format = pick_format(g, "dot", {"dot", "json"});
      if (format == "dot") {
        emit(g, out, export_dot(gr));
      } else {
        emit(g, out,
             Json{{"n", n},
                  {"divisors", gr.classes().divisors},
                  {"degree", gr.degree()},
                  {"edge_count", gr.edge_count()}});
      }
      return 0;
    }
    if (*graph_clique) {
      const auto n = graph_clique_mod.resolve();
      const DifferenceGraph gr(n, DivisorSet(n, parse_values(graph_clique_divisors)));
      const auto clique = max_clique(gr);
      emit(g, out,
           Json{{"n", n},
                {"divisors", gr.classes().divisors},
                {"max_clique", clique.elements}});
      return 0;
    }
    if (*graph_berge) {
      const auto n = graph_berge_mod.resolve();
      const DifferenceGraph gr(n, DivisorSet(n, parse_values(graph_berge_divisors)));
      const auto report = berge_certify(gr, berge_max_len);
      emit(g, out, graph_report_json(gr, max_clique(gr), report));
      return report.clean() ? 0 : 1;
    }
    if (*graph_scan) {
      if (scan_lo < 2 || scan_hi < scan_lo) {
        throw CLI::ValidationError("need 2 <= --n-lo <= --n-hi");
      }
      Json payload = Json::array();
      bool violation = false;
      for (std::uint64_t n = scan_lo; n <= scan_hi; ++n) {
        const auto report = divisibility_scan(
            n, scan_d_max, effective_bound(g, std::uint64_t{1} << 25));
        violation = violation || !report.violations.empty();
        payload.push_back(to_json(report));
      }
      emit(g, out, payload);
      return violation ? 1 : 0;
    }

    if (*interp_cons) {
      const auto fam = consecutive_family(interp_cons_mod.resolve(), interp_d,
                                          interp_offset);
      emit(g, out, to_json(fam));
      return 0;
    }
    if (*interp_arith) {
      const auto fam = progression_family(interp_arith_mod.resolve(), interp_s,
                                          interp_d, interp_offset);
      emit(g, out, to_json(fam));
      return 0;
    }
    if (*interp_rec) {
      const auto n = interp_rec_mod.resolve();
      const IndexSet i = parse_set(interp_rows, n);
      const IndexSet j = parse_set(interp_cols, n);
      const auto basis = interpolating_basis(i, j);

      // Random bandlimited signal: spectrum supported on J.
      std::mt19937_64 rng(g.seed);
      std::uniform_real_distribution<double> unit(-1.0, 1.0);
      Eigen::VectorXcd f = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(n));
      for (const auto freq : j.elements) {
        const std::complex<double> coeff{unit(rng), unit(rng)};
        for (std::uint64_t t = 0; t < n; ++t) {
          f(static_cast<Eigen::Index>(t)) +=
              coeff * std::polar(1.0, 2.0 * std::numbers::pi *
                                          static_cast<double>((t * freq) % n) /
                                          static_cast<double>(n));
        }
      }
      Eigen::VectorXcd samples(static_cast<Eigen::Index>(i.size()));
      for (std::size_t k = 0; k < i.size(); ++k) {
        samples(static_cast<Eigen::Index>(k)) =
            f(static_cast<Eigen::Index>(i.elements[k]));
      }
      const Eigen::VectorXcd back = reconstruct(samples, basis);
      const double scale = std::max(1.0, f.cwiseAbs().maxCoeff());
      const double max_error = (back - f).cwiseAbs().maxCoeff() / scale;
      emit(g, out,
           Json{{"i", i.elements},
                {"j", j.elements},
                {"n", n},
                {"seed", g.seed},
                {"condition_number", basis.condition_number},
                {"max_relative_error", max_error}});
      return max_error < 1e-9 ? 0 : 1;
    }

    err << "no subcommand selected\n";
    return 2;
  } catch (const BoundExceeded& e) {
    err << e.what() << '\n';
    return 3;
  } catch (const SingularSubmatrix& e) {
    err << e.what() << '\n';
    return 1;
  } catch (const CLI::ValidationError& e) {
    err << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return 2;
  }
}

}  // namespace dftsub
