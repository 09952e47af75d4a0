#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "galetx/codes.hpp"
#include "galetx/config_io.hpp"
#include "galetx/curves.hpp"
#include "galetx/demos.hpp"
#include "galetx/detnl.hpp"
#include "galetx/selfassoc.hpp"
#include "galetx/transform.hpp"

namespace galetx::cli {

using Json = nlohmann::ordered_json;

namespace {

Json scalars(std::span<const Scalar> v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.to_string());
  return a;
}

Json rows(const ExactMatrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(scalars(m.row(i)));
  return a;
}

Json indices(const std::vector<std::size_t>& v) {
  Json a = Json::array();
  for (auto i : v) a.push_back(i);
  return a;
}

Json configuration(const PointConfiguration& cfg) {
  return Json{{"field", cfg.field().to_string()}, {"dim", cfg.dim()}, {"points", rows(cfg.coords())}};
}

std::string plain(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string join(const Json& arr) {
  std::string s;
  for (const auto& x : arr) {
    if (!s.empty()) s += ' ';
    s += plain(x);
  }
  return s;
}

}  // namespace

void render_text(const Json& facts, std::ostream& os, const std::string& prefix) {
  for (const auto& [key, val] : facts.items()) {
    if (val.is_object()) {
      os << prefix << key << ":\n";
      render_text(val, os, prefix + "  ");
    } else if (val.is_array() && !val.empty() && val.front().is_array()) {
      os << prefix << key << ":\n";
      for (const auto& row : val) os << prefix << "  " << join(row) << "\n";
    } else if (val.is_array()) {
      os << prefix << key << ":" << (val.empty() ? "" : " " + join(val)) << "\n";
    } else {
      os << prefix << key << ": " << plain(val) << "\n";
    }
  }
}

namespace {

struct Outcome {
  int status;
  Json facts;
  std::optional<PointConfiguration> emitted;  // printed as a loadable file in text mode
};

Outcome from_bool(bool b, Json facts) { return {b ? kTrue : kFalse, std::move(facts), std::nullopt}; }

int tri_status(Tri t) { return t == Tri::True ? kTrue : t == Tri::False ? kFalse : kIndeterminate; }

// --- transform ---------------------------------------------------------------

Outcome cmd_transform(const std::string& path) {
  const PointConfiguration cfg = read_configuration_file(path);
  const GaleResult gale = gale_transform(cfg);
  // Re-multiply rather than trusting the kernel computation.
  const bool verified = (cfg.coords().transpose() * gale.transform.coords()).is_zero();
  Json facts{{"command", "transform"},
             {"source_points", cfg.size()},
             {"source_dim", cfg.dim()},
             {"transform_dim", gale.transform.dim()},
             {"witness", "identity"},
             {"verified_GtGp_zero", verified},
             {"configuration", configuration(gale.transform)}};
  return {verified ? kTrue : kIndeterminate, std::move(facts), gale.transform};
}

// --- check -------------------------------------------------------------------

Outcome cmd_check(const std::string& kind, const std::string& path) {
  const PointConfiguration cfg = read_configuration_file(path);
  Json facts{{"command", "check " + kind}, {"points", cfg.size()}, {"dim", cfg.dim()}, {"field", cfg.field().to_string()}};
  if (kind == "lgp") {
    const bool v = is_linearly_general_position(cfg);
    facts["result"] = v;
    return from_bool(v, std::move(facts));
  }
  if (kind == "stable" || kind == "semistable") {
    const bool v = kind == "stable" ? is_stable(cfg) : is_semistable(cfg);
    facts["result"] = v;
    return from_bool(v, std::move(facts));
  }
  if (kind == "self-associated" || kind == "ag") {
    const SelfAssociation sa = self_association_witness(cfg);
    const bool verified = sa.status == SelfAssociation::Status::Witness && verify_self_association(cfg, sa.witness);
    facts["self_association"] = to_string(sa.status);
    if (sa.status == SelfAssociation::Status::Witness) {
      facts["witness"] = scalars(sa.witness);
      facts["witness_verified"] = verified;
    }
    if (kind == "self-associated") {
      const int status = sa.status == SelfAssociation::Status::Witness
                             ? (verified ? kTrue : kIndeterminate)
                             : sa.status == SelfAssociation::Status::NotSelfAssociated ? kFalse : kIndeterminate;
      facts["result"] = status == kTrue ? "true" : status == kFalse ? "false" : "indeterminate";
      return {status, std::move(facts), std::nullopt};
    }
    const Tri ag = is_arithmetically_gorenstein(cfg);
    facts["quadric_defect"] = quadric_defect(cfg);
    facts["result"] = to_string(ag);
    return {ag == Tri::True && !verified ? kIndeterminate : tri_status(ag), std::move(facts), std::nullopt};
  }
  // two-bases
  const auto split = partition_into_two_bases(cfg);
  facts["result"] = split.has_value();
  if (!split) return from_bool(false, std::move(facts));
  const auto& [a, b] = *split;
  const bool verified = !determinant(cfg.coords().select_rows(a.indices())).is_zero() &&
                        !determinant(cfg.coords().select_rows(b.indices())).is_zero();
  facts["first"] = indices(a.indices());
  facts["second"] = indices(b.indices());
  facts["blocks_verified"] = verified;
  return {verified ? kTrue : kIndeterminate, std::move(facts), std::nullopt};
}

// --- complete ----------------------------------------------------------------

Outcome cmd_complete(const std::string& path, std::uint64_t seed) {
  const PointConfiguration cfg = read_configuration_file(path);
  const Completion c = complete_to_self_associated(cfg, seed);
  Json facts{{"command", "complete"}, {"seed", seed}, {"status", to_string(c.status)}};
  if (c.status != Completion::Status::Completed) {
    return {c.status == Completion::Status::NotCompletable ? kFalse : kIndeterminate, std::move(facts), std::nullopt};
  }
  const SelfAssociation sa = self_association_witness(*c.completed);
  const bool verified = sa.status == SelfAssociation::Status::Witness && verify_self_association(*c.completed, sa.witness);
  facts["form_diagonal"] = scalars(c.form.diagonal);
  facts["added"] = indices(c.added.indices());
  facts["witness"] = scalars(sa.witness);
  facts["self_associated_verified"] = verified;
  facts["configuration"] = configuration(*c.completed);
  return {verified ? kTrue : kIndeterminate, std::move(facts), *c.completed};
}

// --- fit-rnc -----------------------------------------------------------------

Outcome cmd_fit(const std::string& path, std::optional<std::size_t> held_out) {
  const PointConfiguration cfg = read_configuration_file(path);
  const RncParametrization curve =
      held_out ? fit_rational_normal_curve(cfg, *held_out) : fit_rational_normal_curve(cfg);
  bool contains = true;
  for (std::size_t i = 0; i < cfg.size(); ++i) contains = contains && rnc_contains(curve, cfg.point(i));
  Json facts{{"command", "fit-rnc"}, {"dim", cfg.dim()}, {"matrix", rows(curve.matrix)}, {"contains_all", contains}};
  return {contains ? kTrue : kIndeterminate, std::move(facts), std::nullopt};
}

// --- goppa-check -------------------------------------------------------------

Json parameters(const ParameterList& params) {
  Json a = Json::array();
  for (const auto& ab : params.params()) a.push_back(ab[0].to_string() + ":" + ab[1].to_string());
  return a;
}

Outcome cmd_goppa(const FieldSpec& field, std::size_t n, std::size_t h, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const ParameterList params = random_parameters(field, n, rng);
  const GoppaReport rep = goppa_dual_check(params, h);
  Json facts{{"command", "goppa-check"}, {"field", field.to_string()}, {"n", n}, {"h", h},
             {"dual_degree", rep.dual_degree}, {"parameters", parameters(params)},
             {"equivalence", to_string(rep.equivalence)}, {"passed", rep.passed()}};
  const int status = rep.equivalence == Equivalence::Indeterminate ? kIndeterminate : rep.passed() ? kTrue : kFalse;
  return {status, std::move(facts), std::nullopt};
}

// --- code --------------------------------------------------------------------

GrsSpec make_grs(std::uint64_t p, std::size_t n, std::size_t k, std::uint64_t seed) {
  const FieldSpec field = FieldSpec::prime(p);
  std::vector<Vector> pts;
  for (std::size_t j = 0; j < n && j < p; ++j) pts.push_back({Scalar::one(field), Scalar(field, static_cast<long long>(j))});
  if (n == p + 1) pts.push_back({Scalar::zero(field), Scalar::one(field)});
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(1, p - 1);
  Vector mult;
  for (std::size_t j = 0; j < n; ++j) mult.push_back(Scalar(field, static_cast<long long>(dist(rng))));
  return GrsSpec{ParameterList(field, std::move(pts)), std::move(mult), k};
}

Outcome cmd_code(const std::string& kind, std::uint64_t p, std::size_t n, std::size_t k, std::uint64_t seed,
                 const std::string& generator_path) {
  Json facts{{"command", "code " + kind}};
  if (kind == "mindist" && !generator_path.empty()) {
    std::ifstream in(generator_path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + generator_path);
    std::stringstream buf;
    buf << in.rdbuf();
    const LinearCode c(parse_matrix(FieldSpec::prime(p), buf.str()));
    const std::size_t d = min_distance(c);
    facts["n"] = c.length();
    facts["k"] = c.dimension();
    facts["min_distance"] = d;
    facts["singleton_bound"] = c.length() - c.dimension() + 1;
    facts["mds"] = d == c.length() - c.dimension() + 1;
    return {kTrue, std::move(facts), std::nullopt};
  }
  const GrsSpec spec = make_grs(p, n, k, seed);
  const LinearCode c = grs_code(spec);
  facts["p"] = p;
  facts["n"] = n;
  facts["k"] = k;
  facts["points"] = parameters(spec.points);
  facts["multipliers"] = scalars(spec.multipliers);
  if (kind == "grs") {
    facts["generator"] = rows(c.generator());
    return {kTrue, std::move(facts), std::nullopt};
  }
  if (kind == "dual") {
    const Vector dual_mult = grs_dual_multipliers(spec);
    const LinearCode d = grs_code(GrsSpec{spec.points, dual_mult, n - k});
    const bool orthogonal = (c.generator() * d.generator().transpose()).is_zero();
    const bool same = same_code(dual_code(c), d);
    facts["dual_multipliers"] = scalars(dual_mult);
    facts["dual_generator"] = rows(d.generator());
    facts["orthogonal"] = orthogonal;
    facts["equals_dual"] = same;
    return from_bool(orthogonal && same, std::move(facts));
  }
  const std::size_t d = min_distance(c);
  facts["min_distance"] = d;
  facts["singleton_bound"] = n - k + 1;
  facts["mds"] = d == n - k + 1;
  return from_bool(d == n - k + 1, std::move(facts));
}

// --- detnl -------------------------------------------------------------------

Json report_facts(const VeroneseGaleReport& rep) {
  return Json{{"r", rep.r},
              {"s", rep.s},
              {"expected_degree", rep.expected_degree},
              {"locus_v_size", rep.locus_v_size},
              {"locus_w_size", rep.locus_w_size},
              {"skipped", rep.skipped},
              {"equivalence", to_string(rep.equivalence)},
              {"matching", indices(rep.matching)},
              {"passed", rep.passed()}};
}

int report_status(const VeroneseGaleReport& rep) {
  if (rep.passed()) return kTrue;
  return rep.skipped || rep.equivalence == Equivalence::Indeterminate ? kIndeterminate : kFalse;
}

Outcome cmd_detnl(std::size_t r, std::size_t s, std::uint64_t p, std::uint64_t seed, std::size_t retries,
                  const std::string& tensor_path) {
  Json facts{{"command", "detnl verify"}};
  if (!tensor_path.empty()) {
    std::ifstream in(tensor_path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + tensor_path);
    std::stringstream buf;
    buf << in.rdbuf();
    const VeroneseGaleReport rep = verify_veronese_gale(TrilinearForm::parse(buf.str()));
    facts.update(report_facts(rep));
    return {report_status(rep), std::move(facts), std::nullopt};
  }
  const DetnlRun run = verify_random_tensor(r, s, p, seed, retries);
  facts["p"] = p;
  facts["seed"] = seed;
  facts["attempts"] = run.attempts;
  facts.update(report_facts(run.report));
  return {report_status(run.report), std::move(facts), std::nullopt};
}

// --- demo --------------------------------------------------------------------

Outcome cmd_demo(const std::string& kind, const FieldSpec& field, std::uint64_t p, std::uint64_t seed,
                 bool twisted_cubic, std::size_t completions) {
  Json facts{{"command", "demo " + kind}};
  if (kind == "pascal") {
    const PascalReport rep = demo_pascal(field);
    facts["field"] = field.to_string();
    facts["points"] = rows(rep.cfg.coords());
    facts["self_association"] = to_string(rep.witness.status);
    facts["witness"] = scalars(rep.witness.witness);
    facts["witness_verified"] = rep.witness_verified;
    facts["quadric_defect"] = rep.quadric_defect;
    facts["gorenstein"] = to_string(rep.gorenstein);
    facts["equivalent_to_gale_transform"] = to_string(rep.gale_equivalence);
    const bool ok = rep.witness_verified && rep.gorenstein == Tri::True && rep.gale_equivalence == Equivalence::Equivalent;
    return {ok ? kTrue : kIndeterminate, std::move(facts), std::nullopt};
  }
  if (kind == "seven-p3") {
    const SevenPointReport rep = twisted_cubic ? demo_seven_p3_on_twisted_cubic(seed, p) : demo_seven_p3(seed, p);
    facts["p"] = p;
    facts["seed"] = seed;
    facts["attempts"] = rep.attempts;
    facts["points"] = rows(rep.points.coords());
    facts["base_locus"] = to_string(rep.analysis.kind);
    facts["rational_base_points"] = rep.analysis.base_locus_points;
    bool verified = false;
    if (rep.analysis.eighth_point && rep.analysis.projection) {
      facts["eighth_point"] = scalars(*rep.analysis.eighth_point);
      facts["projection"] = rows(rep.analysis.projection->coords());
      // The projection must be a Gale transform in its own right.
      const ExactMatrix prod = rep.points.coords().transpose() * gale_transform(rep.points).transform.coords();
      verified = prod.is_zero();
    }
    facts["equivalence"] = to_string(rep.analysis.equivalence);
    facts["passed"] = rep.passed() && verified;
    if (rep.analysis.kind == SevenPointAnalysis::Kind::CurveBaseLocus) return {kFalse, std::move(facts), std::nullopt};
    return {rep.passed() && verified ? kTrue : kIndeterminate, std::move(facts), std::nullopt};
  }
  std::vector<std::uint64_t> seeds;
  for (std::size_t i = 0; i < completions; ++i) seeds.push_back(seed + 1 + i);
  const ElevenPointReport rep = demo_eleven_p6(seed, seeds);
  facts["seed"] = seed;
  facts["completions"] = completions;
  facts["points"] = rows(rep.points.coords());
  if (!rep.added_spans.empty()) facts["plane"] = rows(rep.added_spans.front());
  std::size_t distinct = 0;
  for (std::size_t i = 0; i < rep.completions.size(); ++i) {
    bool fresh = rep.completions[i].completed.has_value();
    for (std::size_t j = 0; j < i && fresh; ++j)
      fresh = !(rep.completions[j].completed && *rep.completions[j].completed == *rep.completions[i].completed);
    distinct += fresh;
  }
  facts["distinct_completions"] = distinct;
  facts["all_self_associated"] = rep.all_self_associated;
  facts["same_plane"] = rep.same_plane;
  return from_bool(rep.all_self_associated && rep.same_plane, std::move(facts));
}

bool prime_check(std::uint64_t p) { return p >= 2 && p < (1ULL << 31) && is_prime_number(p); }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gale transforms and self-associated point configurations"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::string file, kind, generator, tensor, field_name = "rational";
  std::uint64_t seed = 1, p = 13;
  std::size_t n = 0, h = 0, k = 0, r = 2, s = 2, retries = 50, completions = 5;
  std::optional<std::size_t> held_out;
  bool twisted = false;

  auto* transform = app.add_subcommand("transform", "Gale transform of a configuration file");
  transform->add_option("file", file)->required()->check(CLI::ExistingFile);

  auto* check = app.add_subcommand("check", "Test a property of a configuration");
  check->add_option("property", kind)
      ->required()
      ->check(CLI::IsMember({"lgp", "stable", "semistable", "self-associated", "ag", "two-bases"}));
  check->add_option("file", file)->required()->check(CLI::ExistingFile);

  auto* complete = app.add_subcommand("complete", "Complete to a self-associated configuration");
  complete->add_option("file", file)->required()->check(CLI::ExistingFile);
  complete->add_option("--seed", seed, "Seed for the Gram-Schmidt candidate pool");

  auto* fit = app.add_subcommand("fit-rnc", "Fit a rational normal curve through r+3 points");
  fit->add_option("file", file)->required()->check(CLI::ExistingFile);
  fit->add_option("--held-out", held_out, "Point checked against the fitted curve (default: last)");

  auto* goppa = app.add_subcommand("goppa-check", "Gale duality of moment curve embeddings of P^1");
  goppa->set_help_flag("--help", "Print this help message and exit");  // -h would clash with --h
  goppa->add_option("--n", n, "Number of parameters")->required()->check(CLI::Range(4, 64));
  goppa->add_option("--h", h, "Degree of the first embedding")->required()->check(CLI::PositiveNumber);
  goppa->add_option("--seed", seed);
  goppa->add_option("--field", field_name, "rational or prime:P");

  auto* code = app.add_subcommand("code", "Generalized Reed-Solomon codes");
  code->add_option("kind", kind)->required()->check(CLI::IsMember({"grs", "dual", "mindist"}));
  code->add_option("--p", p, "Field size (prime)");
  code->add_option("--n", n, "Length");
  code->add_option("--k", k, "Dimension");
  code->add_option("--seed", seed, "Seed for the column multipliers");
  code->add_option("--generator", generator, "Generator matrix file (mindist)")->check(CLI::ExistingFile);

  auto* detnl = app.add_subcommand("detnl", "Determinantal loci of trilinear forms");
  auto* verify = detnl->add_subcommand("verify", "Check Veronese Gale duality of the two loci");
  detnl->require_subcommand(1);
  verify->add_option("--r", r)->check(CLI::Range(1, 6));
  verify->add_option("--s", s)->check(CLI::Range(1, 6));
  verify->add_option("--p", p);
  verify->add_option("--seed", seed);
  verify->add_option("--retries", retries)->check(CLI::PositiveNumber);
  verify->add_option("--tensor", tensor, "Tensor file instead of a random sample")->check(CLI::ExistingFile);

  auto* demo = app.add_subcommand("demo", "Worked scenarios");
  demo->add_option("scenario", kind)->required()->check(CLI::IsMember({"pascal", "seven-p3", "eleven-p6"}));
  demo->add_option("--seed", seed);
  demo->add_option("--p", p, "Prime for seven-p3 (at least 101)");
  demo->add_option("--field", field_name, "rational or prime:P (pascal)");
  demo->add_flag("--twisted-cubic", twisted, "seven-p3: sample the points on a twisted cubic");
  demo->add_option("--completions", completions, "eleven-p6: number of seeded completions")->check(CLI::Range(1, 50));

  auto usage = [&](const std::string& msg) {
    err << "usage error: " << msg << "\n";
    return kUsage;
  };

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kUsage;
  }

  // Flag validation that needs more than one option at a time.
  auto field_from = [&](const std::string& name) -> std::optional<FieldSpec> {
    if (name == "rational") return FieldSpec::rationals();
    if (name.rfind("prime:", 0) == 0) {
      try {
        const std::uint64_t q = std::stoull(name.substr(6));
        if (prime_check(q)) return FieldSpec::prime(q);
      } catch (const std::exception&) {
      }
    }
    return std::nullopt;
  };
  std::optional<FieldSpec> field;
  if (goppa->parsed() || demo->parsed()) {
    field = field_from(field_name);
    if (!field) return usage("--field must be 'rational' or 'prime:P' with P prime");
  }
  if (goppa->parsed() && (h < 1 || h + 3 > n)) return usage("--h must satisfy 1 <= h <= n-3");
  if (code->parsed()) {
    if (!prime_check(p)) return usage("--p must be a prime below 2^31");
    if (generator.empty() || kind != "mindist") {
      if (k < 1 || k >= n || n > p + 1) return usage("need 1 <= k < n <= p+1");
    }
  }
  if (verify->parsed() && tensor.empty() && !prime_check(p)) return usage("--p must be prime");
  if (demo->parsed() && kind == "seven-p3" && (p < 101 || !prime_check(p))) {
    return usage("seven-p3 needs --p prime and at least 101");
  }

  const bool json = format == "json";
  std::string command = app.get_subcommands().front()->get_name();
  Outcome result;
  try {
    if (transform->parsed()) result = cmd_transform(file);
    else if (check->parsed()) result = cmd_check(kind, file);
    else if (complete->parsed()) result = cmd_complete(file, seed);
    else if (fit->parsed()) result = cmd_fit(file, held_out);
    else if (goppa->parsed()) result = cmd_goppa(*field, n, h, seed);
    else if (code->parsed()) result = cmd_code(kind, p, n, k, seed, generator);
    else if (verify->parsed()) result = cmd_detnl(r, s, p, seed, retries, tensor);
    else result = cmd_demo(kind, *field, p, seed, twisted, completions);
  } catch (const Error& e) {
    Json facts{{"command", command}, {"error", error_code_name(e.code())}, {"message", e.what()},
               {"indices", indices(e.indices())}};
    if (json) out << facts.dump(2) << "\n";
    else err << "error: " << e.what() << "\n";
    return kIndeterminate;
  } catch (const std::exception& e) {
    Json facts{{"command", command}, {"error", "Internal"}, {"message", e.what()}, {"indices", Json::array()}};
    if (json) out << facts.dump(2) << "\n";
    else err << "error: " << e.what() << "\n";
    return kIndeterminate;
  }

  result.facts["exit_status"] = result.status;
  if (json) {
    out << result.facts.dump(2) << "\n";
  } else if (result.emitted) {
    // A loadable configuration file: facts as comments, then the points.
    Json header = result.facts;
    header.erase("configuration");
    render_text(header, out, "# ");
    out << format_configuration(*result.emitted);
  } else {
    render_text(result.facts, out, "");
  }
  return result.status;
}

}  // namespace galetx::cli
