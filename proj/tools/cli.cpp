#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "ssetkit/coding_bounds.hpp"
#include "ssetkit/covering_engine.hpp"
#include "ssetkit/errors.hpp"
#include "ssetkit/face_oracle.hpp"
#include "ssetkit/mixture_engine.hpp"

namespace ssetkit::cli {
namespace {

using StatsPtr = std::shared_ptr<const SufficientStatistics>;

// ---- spec <-> json ------------------------------------------------------

Json family_to_json(const FamilySpec& f) {
  Json j;
  j["kind"] = f.kind;
  if (f.kind == "ngon") {
    j["ngon"] = f.ngon;
  } else {
    j["arities"] = f.arities;
    j["k"] = f.k;
    j["delta"] = f.delta;
  }
  return j;
}

FamilySpec family_from_json(const Json& j) {
  FamilySpec f;
  f.kind = j.value("kind", std::string("interaction"));
  if (f.kind == "ngon") {
    f.ngon = j.at("ngon").get<int>();
  } else if (f.kind == "interaction") {
    f.arities = j.at("arities").get<std::vector<int>>();
    f.k = j.value("k", 1);
    f.delta = j.value("delta", std::vector<std::vector<int>>{});
  } else {
    throw ParseError("unknown family kind '" + f.kind + "'");
  }
  return f;
}

// ---- building inputs ----------------------------------------------------

StatsPtr build_family(const FamilySpec& f) {
  if (f.kind == "ngon") return std::make_shared<const SufficientStatistics>(ngon_statistics(f.ngon));
  SampleSpace space(f.arities);
  const int n = space.variables();
  InteractionComplex delta = [&] {
    if (f.delta.empty()) return InteractionComplex::up_to(n, f.k);
    std::vector<Interaction> sets;
    for (const auto& s : f.delta) {
      Interaction zero_based;
      for (int v : s) zero_based.push_back(v - 1);
      sets.push_back(std::move(zero_based));
    }
    return InteractionComplex(n, std::move(sets));
  }();
  if (space.is_binary()) return std::make_shared<const SufficientStatistics>(character_matrix(n, delta));
  return std::make_shared<const SufficientStatistics>(qary_statistics(space, delta));
}

const FamilySpec& require_family(const JobSpec& job) {
  if (!job.family) throw ParseError("command '" + job.command + "' needs a family (--binary, --arity or --ngon)");
  return *job.family;
}

SampleSubset parse_subset(const SampleSpace& space, const std::vector<std::string>& digits) {
  std::vector<std::size_t> idx;
  for (const auto& d : digits) idx.push_back(space.parse(d));
  std::sort(idx.begin(), idx.end());
  if (std::adjacent_find(idx.begin(), idx.end()) != idx.end()) throw ParseError("subset lists a configuration twice");
  return SampleSubset(space.size(), std::move(idx));
}

Distribution random_distribution(const SampleSpace& space, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> draw(1, 100);
  std::vector<long> w(space.size());
  long total = 0;
  for (auto& v : w) total += (v = draw(rng));
  RationalVector probs;
  for (long v : w) probs.emplace_back(v, total);
  return Distribution(space, std::move(probs));
}

Distribution load_distribution(const std::string& spec, const SampleSpace& space, std::uint64_t seed) {
  if (spec.empty() || spec == "uniform") return Distribution::uniform(space);
  if (spec == "random") return random_distribution(space, seed);
  if (spec.rfind("point:", 0) == 0) return Distribution::point_mass(space, space.parse(spec.substr(6)));
  std::ifstream in(spec);
  if (!in) throw ParseError("cannot open distribution file '" + spec + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError("distribution file is not valid JSON: " + std::string(e.what()));
  }
  if (j.at("arities").get<std::vector<int>>() != std::vector<int>(space.arities().begin(), space.arities().end()))
    throw ShapeError("distribution file arities do not match the family");
  RationalVector probs(space.size());
  for (const auto& [key, value] : j.at("probs").items()) probs[space.parse(key)] = parse_rational(value.get<std::string>());
  return Distribution(space, std::move(probs));
}

// ---- reporting ----------------------------------------------------------

Json subset_json(const SampleSpace& space, const SampleSubset& s) {
  Json out = Json::array();
  for (std::size_t x : s.members()) out.push_back(space.format(x));
  return out;
}

Json rationals_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(to_string(r));
  return out;
}

Json certificate_json(const SampleSpace& space, const FaceCertificate& c) {
  return Json{{"functional", rationals_json(c.functional)},
              {"zero_set", subset_json(space, c.zero_set)},
              {"slack", rationals_json(c.slack)}};
}

Json distribution_json(const Distribution& p) {
  Json probs = Json::object();
  const SampleSubset supp = p.support();
  for (std::size_t x : supp.members()) probs[p.space().format(x)] = to_string(p[x]);
  return probs;
}

Json cover_json(const SampleSpace& space, const CoverResult& c) {
  Json sets = Json::array();
  for (const auto& s : c.sets) sets.push_back(subset_json(space, s));
  return Json{{"mode", to_string(c.mode)},
              {"kappa", c.kappa ? Json(*c.kappa) : Json("inf")},
              {"optimal", c.optimal},
              {"lower_bound", {{"value", c.lower_bound.value}, {"provenance", to_string(c.lower_bound.provenance)}}},
              {"target", subset_json(space, c.target)},
              {"sets", sets}};
}

Json check_json(const CoverCheck& check) { return Json{{"ok", check.ok}, {"failures", check.failures}}; }

Json code_report_json(const CodeBoundReport& r) {
  Json j{{"q", r.q}, {"N", r.n}};
  if (r.distance) j["d"] = *r.distance;
  if (r.radius) j["R"] = *r.radius;
  j["lower"] = r.lower;
  j["upper"] = r.upper;
  if (r.exact) j["exact"] = *r.exact;
  if (r.witness) {
    SampleSpace space = SampleSpace::uniform(r.q, r.n);
    Json w = Json::array();
    for (std::size_t x : *r.witness) w.push_back(space.format(x));
    j["witness"] = w;
  }
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

// ---- commands -----------------------------------------------------------

RunResult cmd_stats_build(const JobSpec& job) {
  StatsPtr stats = build_family(require_family(job));
  Json rows = Json::array();
  for (std::size_t r = 0; r < stats->row_count(); ++r) {
    Json row = Json::array();
    for (const auto& v : stats->matrix().row(r)) row.push_back(to_string(v));
    rows.push_back(row);
  }
  Json columns = Json::array();
  for (std::size_t x = 0; x < stats->space().size(); ++x) columns.push_back(stats->space().format(x));
  return {exit_ok, Json{{"labels", stats->labels()}, {"columns", columns}, {"rows", rows},
                        {"rank", stats->rank()}, {"family_dimension", stats->family_dimension()}}};
}

RunResult cmd_facial_check(const JobSpec& job) {
  StatsPtr stats = build_family(require_family(job));
  SampleSubset y = parse_subset(stats->space(), job.subset);
  FacialVerdict v = is_facial(*stats, y);
  Json j{{"subset", subset_json(stats->space(), y)}, {"facial", v.facial}};
  if (v.certificate) j["certificate"] = certificate_json(stats->space(), *v.certificate);
  if (v.witness) j["witness"] = distribution_json(*v.witness);
  return {exit_ok, j};
}

RunResult cmd_sset_check(const JobSpec& job) {
  StatsPtr stats = build_family(require_family(job));
  SampleSubset y = parse_subset(stats->space(), job.subset);
  SSetVerdict v = is_sset(*stats, y);
  Json j{{"subset", subset_json(stats->space(), y)}, {"sset", v.sset}, {"column_rank", v.column_rank}};
  j["facial"] = v.facial ? Json(*v.facial) : Json(nullptr);
  if (v.certificate) j["certificate"] = certificate_json(stats->space(), *v.certificate);
  if (v.witness) j["witness"] = distribution_json(*v.witness);
  if (v.dependency) j["dependency"] = rationals_json(v.dependency->values);
  int code = exit_ok;
  if (stats->space().size() <= job.guard) {
    const bool kernel = sset_kernel_crosscheck(*stats, y, job.guard);
    j["kernel_crosscheck"] = kernel;
    if (kernel != v.sset) code = exit_verification;
  }
  return {code, j};
}

RunResult cmd_enumerate_faces(const JobSpec& job) {
  StatsPtr stats = build_family(require_family(job));
  FaceLattice lattice = enumerate_facial_sets(FaceOracle(*stats), std::nullopt, job.guard);
  FacetCensus census = facet_census(*stats, lattice);
  Json by_size = Json::object();
  for (auto [size, count] : census.facets_by_vertex_count) by_size[std::to_string(size)] = count;
  Json parity = Json::array();
  for (auto [key, count] : census.simplex_parity_profile)
    parity.push_back(Json{{"even", key.first}, {"odd", key.second}, {"count", count}});
  Json facets = Json::array();
  for (const auto& f : census.facets)
    facets.push_back(Json{{"members", subset_json(stats->space(), f.members)}, {"simplex", f.simplex}});
  return {exit_ok, Json{{"polytope_dimension", census.polytope_dimension},
                        {"vertex_count", census.vertex_count},
                        {"facial_set_count", census.facial_set_count},
                        {"facet_count", census.facets.size()},
                        {"facets_by_vertex_count", by_size},
                        {"simplex_facets", census.simplex_facets},
                        {"simplex_parity_profile", parity},
                        {"lp_calls", lattice.lp_calls},
                        {"facets", facets}}};
}

int interaction_order(const FamilySpec& f, const char* what) {
  if (f.kind != "interaction" || !f.delta.empty())
    throw ParseError(std::string(what) + " needs a k-interaction family (--k, no --delta)");
  return f.k;
}

CoverResult build_cover(const std::string& mode, const JobSpec& job, const StatsPtr& stats) {
  const FamilySpec& f = require_family(job);
  const SampleSpace& space = stats->space();
  SampleSubset target = job.subset.empty() ? SampleSubset::full(space.size()) : parse_subset(space, job.subset);
  if (mode == "min") return min_sset_cover(*stats, target, job.guard);
  if (mode == "packing") return min_facial_packing(*stats, target, job.guard);
  if (mode == "cylinder") return cylinder_cover(space, interaction_order(f, "cylinder cover"));
  if (mode == "lines") {
    if (interaction_order(f, "line cover") != 1) throw ParseError("line cover is for the independence model (k = 1)");
    return product_line_cover(space);
  }
  if (mode == "recursive") {
    if (!space.is_binary()) throw ParseError("recursive cover needs a binary space");
    return recursive_binary_cover(space.variables(), interaction_order(f, "recursive cover"));
  }
  throw ParseError("unknown cover mode '" + mode + "' (min|cylinder|lines|recursive|packing)");
}

RunResult cmd_cover(const JobSpec& job) {
  StatsPtr stats = build_family(require_family(job));
  CoverResult cover = build_cover(job.mode.empty() ? "min" : job.mode, job, stats);
  CoverCheck check = verify_cover(*stats, cover);
  Json j = cover_json(stats->space(), cover);
  j["verify"] = check_json(check);
  return {check.ok ? exit_ok : exit_verification, j};
}

std::string default_cover(const FamilySpec& f, const SampleSpace& space) {
  if (f.kind != "interaction" || !f.delta.empty()) return "min";
  if (f.k == 1) return "lines";
  if (space.is_binary() && f.k < space.variables()) return "recursive";
  return "cylinder";
}

RunResult cmd_decompose(const JobSpec& job) {
  StatsPtr stats = build_family(require_family(job));
  const SampleSpace& space = stats->space();
  Distribution p = load_distribution(job.dist, space, job.seed);
  const std::string mode = job.cover.empty() ? default_cover(*job.family, space) : job.cover;
  if (mode == "packing") throw ParseError("decomposition needs an S-set cover, not a facial packing");
  CoverResult cover = build_cover(mode, job, stats);
  MixtureDecomposition mix = decompose_by_cover(p, cover);
  const bool exact = reconstruct(mix) == p;
  Json components = Json::array();
  for (std::size_t i = 0; i < mix.size(); ++i)
    components.push_back(Json{{"support", subset_json(space, mix.supports[i])}, {"probs", distribution_json(mix.components[i])}});
  Json weights = Json::array();
  for (const auto& w : mix.weights) weights.push_back(to_string(w));
  Json j{{"family", family_to_json(*job.family)}, {"cover", mode}, {"m", mix.size()}, {"weights", weights},
         {"components", components}, {"reconstruction_check", exact ? "exact" : "mismatch"}};
  return {exact ? exit_ok : exit_verification, j};
}

RunResult cmd_lower_bound(const JobSpec& job) {
  StatsPtr stats = build_family(require_family(job));
  Distribution p = load_distribution(job.dist, stats->space(), job.seed);
  ComponentLowerBound lb = component_lower_bound(p, *stats, job.guard);
  Json j{{"support_size", p.support().size()}, {"value", lb.value ? Json(*lb.value) : Json("inf")},
         {"parity_certified", lb.parity_certified}};
  if (lb.packing) j["packing"] = cover_json(stats->space(), *lb.packing);
  return {exit_ok, j};
}

RunResult cmd_smooth(const JobSpec& job) {
  StatsPtr stats = build_family(require_family(job));
  const SampleSpace& space = stats->space();
  SampleSubset y = parse_subset(space, job.subset);
  if (y.empty()) throw ParseError("smooth needs --subset (an S-set)");
  Distribution f = job.dist.empty() ? Distribution::uniform_on(space, y) : load_distribution(job.dist, space, job.seed);
  SSetVerdict v = is_sset(*stats, y);
  if (!v.sset) throw PreconditionError("subset is not an S-set of the family");
  FaceCertificate cert = v.certificate ? *v.certificate : FaceCertificate{};
  SmoothingResult s = positive_smoothing(*stats, f, cert, parse_rational(job.t));
  Json probs = Json::object();
  for (std::size_t x = 0; x < space.size(); ++x) probs[space.format(x)] = s.probs[x];
  Json j{{"t", job.t}, {"tv", s.tv}, {"strictly_positive", s.strictly_positive}, {"row_span_exact", s.row_span_exact},
         {"nonpositive_t", s.nonpositive_t}, {"natural", rationals_json(s.natural)}, {"probs", probs}};
  return {s.strictly_positive && s.row_span_exact ? exit_ok : exit_verification, j};
}

RunResult cmd_pentagon(const JobSpec& job) {
  JobSpec local = job;
  if (!local.family) local.family = FamilySpec{"ngon", {}, 1, {}, 5};
  if (local.family->kind != "ngon" || local.family->ngon != 5) throw ParseError("pentagon-solve works on the 5-gon family");
  StatsPtr stats = build_family(*local.family);
  Distribution p = load_distribution(job.dist, stats->space(), job.seed);
  PentagonOptions opt;
  opt.tol = job.tol;
  opt.seed = job.seed;
  PentagonFit fit = pentagon_two_mixture_solve(p, opt);
  Json j{{"success", fit.success}, {"residual", fit.residual}, {"exact", fit.exact}, {"alpha", fit.alpha},
         {"f1", fit.f1}, {"f2", fit.f2}, {"starts", fit.starts}, {"tol", job.tol}};
  return {fit.success ? exit_ok : exit_verification, j};
}

RunResult cmd_bounds(const JobSpec& job) {
  if (job.mode == "gv") return {exit_ok, Json{{"q", job.q}, {"N", job.n}, {"d", job.d}, {"value", gv_bound(job.q, job.n, job.d)}}};
  if (job.mode == "singleton")
    return {exit_ok, Json{{"q", job.q}, {"N", job.n}, {"d", job.d}, {"value", singleton_bound(job.q, job.n, job.d)}}};
  if (job.mode == "parity") return {exit_ok, code_report_json(parity_code(job.q, job.n))};
  if (job.mode == "marking") return {exit_ok, code_report_json(marking_number(job.n, job.r))};
  throw ParseError("unknown bounds mode '" + job.mode + "' (gv|singleton|parity|marking)");
}

RunResult cmd_verify(const JobSpec& job) {
  StatsPtr stats = build_family(require_family(job));
  const SampleSpace& space = stats->space();
  std::ifstream in(job.input);
  if (!in) throw ParseError("cannot open cover report '" + job.input + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError("cover report is not valid JSON: " + std::string(e.what()));
  }
  if (j.contains("report")) j = j["report"];
  CoverResult cover;
  const std::string mode = j.at("mode").get<std::string>();
  if (mode != "sset-cover" && mode != "facial-packing") throw ParseError("unknown cover mode '" + mode + "'");
  cover.mode = mode == "sset-cover" ? CoverMode::sset_cover : CoverMode::facial_packing;
  cover.target = parse_subset(space, j.at("target").get<std::vector<std::string>>());
  for (const auto& s : j.at("sets")) cover.sets.push_back(parse_subset(space, s.get<std::vector<std::string>>()));
  if (j.at("kappa").is_number()) cover.kappa = j["kappa"].get<std::size_t>();
  cover.optimal = j.value("optimal", false);
  cover.lower_bound.value = j.at("lower_bound").value("value", std::size_t{0});
  CoverCheck check = verify_cover(*stats, cover);
  return {check.ok ? exit_ok : exit_verification, check_json(check)};
}

RunResult dispatch(const JobSpec& job) {
  const std::string& c = job.command;
  if (c == "stats-build") return cmd_stats_build(job);
  if (c == "facial-check") return cmd_facial_check(job);
  if (c == "sset-check") return cmd_sset_check(job);
  if (c == "enumerate-faces") return cmd_enumerate_faces(job);
  if (c == "cover") return cmd_cover(job);
  if (c == "decompose") return cmd_decompose(job);
  if (c == "lower-bound") return cmd_lower_bound(job);
  if (c == "smooth") return cmd_smooth(job);
  if (c == "pentagon-solve") return cmd_pentagon(job);
  if (c == "bounds") return cmd_bounds(job);
  if (c == "verify") return cmd_verify(job);
  throw ParseError("unknown command '" + c + "'");
}

std::vector<int> parse_int_list(const std::string& text, char sep) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError("expected an integer, got '" + item + "'");
    }
  }
  return out;
}

}  // namespace

Json to_json(const JobSpec& job) {
  Json j;
  j["command"] = job.command;
  j["mode"] = job.mode;
  j["family"] = job.family ? family_to_json(*job.family) : Json(nullptr);
  j["subset"] = job.subset;
  j["dist"] = job.dist;
  j["cover"] = job.cover;
  j["input"] = job.input;
  j["q"] = job.q;
  j["n"] = job.n;
  j["d"] = job.d;
  j["r"] = job.r;
  j["t"] = job.t;
  j["guard"] = job.guard;
  j["tol"] = job.tol;
  j["seed"] = job.seed;
  j["threads"] = job.threads;
  j["output"] = job.output;
  return j;
}

JobSpec job_from_json(const Json& j) {
  try {
    JobSpec job;
    job.command = j.at("command").get<std::string>();
    job.mode = j.value("mode", std::string());
    if (j.contains("family") && !j["family"].is_null()) job.family = family_from_json(j["family"]);
    job.subset = j.value("subset", std::vector<std::string>{});
    job.dist = j.value("dist", std::string());
    job.cover = j.value("cover", std::string());
    job.input = j.value("input", std::string());
    job.q = j.value("q", 2);
    job.n = j.value("n", 0);
    job.d = j.value("d", 2);
    job.r = j.value("r", 1);
    job.t = j.value("t", std::string("8"));
    job.guard = j.value("guard", std::size_t{16});
    job.tol = j.value("tol", 1e-8);
    job.seed = j.value("seed", std::uint64_t{1});
    job.threads = j.value("threads", 1);
    job.output = j.value("output", std::string());
    return job;
  } catch (const Json::exception& e) {
    throw ParseError("malformed job spec: " + std::string(e.what()));
  }
}

JobSpec parse_arguments(int argc, const char* const* argv) {
  CLI::App app{"Support sets, covers and mixtures of discrete exponential families", "sset-kit"};
  JobSpec job;
  std::string job_file, arity, delta, family_kind, subset;
  int binary = 0, k = -1, ngon = 0;
  app.add_option("command", job.command,
                 "stats-build | facial-check | sset-check | enumerate-faces | cover | decompose | lower-bound | smooth | "
                 "pentagon-solve | bounds | verify");
  app.add_option("mode", job.mode, "cover: min|cylinder|lines|recursive|packing; bounds: gv|singleton|parity|marking");
  app.add_option("--job", job_file, "Load the job from a JSON spec");
  app.add_option("--binary", binary, "Binary space with N variables");
  app.add_option("--arity", arity, "Comma-separated alphabet sizes");
  app.add_option("--k", k, "Interaction order");
  app.add_option("--delta", delta, "Interaction sets, 1-based, e.g. 1,2;2,3");
  app.add_option("--family", family_kind, "product | k | ngon");
  app.add_option("--ngon", ngon, "Regular n-gon family");
  app.add_option("--subset", subset, "Comma-separated configurations");
  app.add_option("--dist", job.dist, "uniform | point:<digits> | random | <distribution file>");
  app.add_option("--cover", job.cover, "Cover used by decompose");
  app.add_option("--input", job.input, "Cover report to verify");
  app.add_option("--q", job.q, "Alphabet size for bounds");
  app.add_option("--n", job.n, "Code length N for bounds");
  app.add_option("--d", job.d, "Minimum distance for bounds");
  app.add_option("--r", job.r, "Covering radius for marking numbers");
  app.add_option("--t", job.t, "Smoothing parameter (rational)");
  app.add_option("--guard", job.guard, "Enumeration guard on |X|");
  app.add_option("--tol", job.tol, "Numeric tolerance");
  app.add_option("--seed", job.seed, "Seed for random targets and extra solver starts");
  app.add_option("--threads", job.threads, "Worker threads (results do not depend on it)");
  app.add_option("--output", job.output, "Write the report here instead of stdout");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    throw;
  } catch (const CLI::ParseError& e) {
    throw ParseError(e.what());
  }
  if (!job_file.empty()) {
    std::ifstream in(job_file);
    if (!in) throw ParseError("cannot open job file '" + job_file + "'");
    try {
      return job_from_json(Json::parse(in));
    } catch (const Json::exception& e) {
      throw ParseError("job file is not valid JSON: " + std::string(e.what()));
    }
  }
  if (job.command.empty()) throw ParseError("missing command");

  if (family_kind == "ngon" || ngon > 0) {
    job.family = FamilySpec{"ngon", {}, 1, {}, ngon > 0 ? ngon : 5};
  } else if (binary > 0 || !arity.empty()) {
    FamilySpec f;
    f.arities = binary > 0 ? std::vector<int>(static_cast<std::size_t>(binary), 2) : parse_int_list(arity, ',');
    if (family_kind == "product") {
      if (k > 1) throw ParseError("--family product means k = 1");
      f.k = 1;
    } else if (family_kind.empty() || family_kind == "k") {
      f.k = k >= 0 ? k : 1;
    } else {
      throw ParseError("unknown family '" + family_kind + "' (product|k|ngon)");
    }
    if (!delta.empty()) {
      std::stringstream ss(delta);
      std::string set;
      while (std::getline(ss, set, ';')) f.delta.push_back(parse_int_list(set, ','));
    }
    job.family = std::move(f);
  } else if (!family_kind.empty()) {
    throw ParseError("--family needs --binary or --arity");
  }
  if (!subset.empty()) {
    std::stringstream ss(subset);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) job.subset.push_back(item);
  }
  return job;
}

RunResult run(const JobSpec& job) {
  RunResult result;
  try {
    result = dispatch(job);
  } catch (const CapacityError& e) {
    result = {exit_capacity, Json{{"error", "capacity"}, {"message", e.what()}}};
  } catch (const Error& e) {
    result = {exit_malformed, Json{{"error", "invalid input"}, {"message", e.what()}}};
  } catch (const Json::exception& e) {
    result = {exit_malformed, Json{{"error", "invalid input"}, {"message", e.what()}}};
  } catch (const std::logic_error& e) {
    result = {exit_verification, Json{{"error", "verification"}, {"message", e.what()}}};
  } catch (const std::exception& e) {
    result = {exit_malformed, Json{{"error", "failure"}, {"message", e.what()}}};
  }
  Json wrapped;
  wrapped["schema"] = kSchema;
  wrapped["command"] = job.command;
  wrapped["job"] = to_json(job);
  wrapped["exit_code"] = result.exit_code;
  wrapped["report"] = std::move(result.report);
  result.report = std::move(wrapped);
  return result;
}

int execute(const JobSpec& job, std::ostream& out, std::ostream& err) {
  RunResult r = run(job);
  const std::string text = r.report.dump(2) + "\n";
  if (job.output.empty()) {
    out << text;
  } else {
    std::ofstream file(job.output);
    if (!file) {
      err << "sset-kit: cannot write " << job.output << "\n";
      return exit_malformed;
    }
    file << text;
  }
  if (r.exit_code != exit_ok && r.report["report"].contains("message"))
    err << "sset-kit: " << r.report["report"]["message"].get<std::string>() << "\n";
  return r.exit_code;
}

}  // namespace ssetkit::cli
