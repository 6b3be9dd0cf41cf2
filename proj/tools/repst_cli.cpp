#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "repst/acceptance.hpp"

using namespace repst;

namespace {

enum Exit { kOk = 0, kVerificationFailure = 1, kUsage = 2, kResource = 3 };

struct Context {
  std::uint64_t seed = 0x5eed;
  unsigned jobs = 1;
  bool pretty = false;
  std::string manifest_path;
};

struct Outcome {
  Json result;
  int exit = kOk;
  Json verdicts = Json::object();
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class F>
void parallel_for(std::size_t count, unsigned jobs, F&& body) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < std::min<std::size_t>(jobs, count); ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < count;) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

PermGroup parse_subgroup(std::size_t k, const std::string& gens) {
  return PermGroup(k, parse_generators(k, gens));
}

// ------------------------------------------------------------------ pretty output

std::string scalar_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

bool is_flat_object(const Json& j) {
  if (!j.is_object()) return false;
  for (const auto& [k, v] : j.items())
    if (v.is_structured()) return false;
  return true;
}

void render(const Json& j, std::ostream& os, int indent);

void render_table(const Json& rows, std::ostream& os, int indent) {
  std::vector<std::string> keys;
  for (const auto& [k, v] : rows.front().items()) keys.push_back(k);
  std::vector<std::size_t> width;
  for (const auto& k : keys) width.push_back(k.size());
  for (const auto& r : rows)
    for (std::size_t c = 0; c < keys.size(); ++c)
      if (r.contains(keys[c])) width[c] = std::max(width[c], scalar_text(r[keys[c]]).size());
  const std::string pad(indent, ' ');
  os << pad;
  for (std::size_t c = 0; c < keys.size(); ++c) os << std::left << std::setw(static_cast<int>(width[c] + 2)) << keys[c];
  os << "\n";
  for (const auto& r : rows) {
    os << pad;
    for (std::size_t c = 0; c < keys.size(); ++c)
      os << std::left << std::setw(static_cast<int>(width[c] + 2)) << (r.contains(keys[c]) ? scalar_text(r[keys[c]]) : "");
    os << "\n";
  }
}

void render(const Json& j, std::ostream& os, int indent) {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (!v.is_structured()) {
        os << pad << k << ": " << scalar_text(v) << "\n";
      } else {
        os << pad << k << ":\n";
        render(v, os, indent + 2);
      }
    }
  } else if (j.is_array()) {
    if (!j.empty() && std::all_of(j.begin(), j.end(), is_flat_object)) {
      render_table(j, os, indent);
      return;
    }
    for (const auto& v : j) {
      if (v.is_structured()) {
        os << pad << "-\n";
        render(v, os, indent + 2);
      } else {
        os << pad << "- " << scalar_text(v) << "\n";
      }
    }
  } else {
    os << pad << scalar_text(j) << "\n";
  }
}

// ------------------------------------------------------------------ commands

Outcome cmd_compose(const std::string& lhs_path, const std::string& rhs_path) {
  const Morphism lhs = morphism_from_json(read_json_file(lhs_path));
  const Morphism rhs = morphism_from_json(read_json_file(rhs_path));
  Outcome o;
  o.result = to_json(compose(lhs, rhs));
  return o;
}

Outcome cmd_dim_poly(std::size_t k, const std::string& gens) {
  const PermGroup h = parse_subgroup(k, gens);
  const Scalar p = dimension_poly(build_induced_algebra(k, h).carrier);
  Outcome o;
  o.result = Json{{"k", k}, {"subgroup", h.generators_text()}, {"order", h.order()}, {"poly", to_json(p)},
                  {"poly_text", p.to_string()}};
  return o;
}

Outcome cmd_build(std::size_t k, const std::string& gens, const std::string& out) {
  const AlgebraObject a = build_induced_algebra(k, parse_subgroup(k, gens));
  Outcome o;
  const Json j = to_json(a);
  if (out.empty()) {
    o.result = j;
  } else {
    std::ofstream f(out);
    if (!f) throw UsageError("cannot write " + out);
    f << j.dump() << "\n";
    o.result = Json{{"out", out}, {"ambient", k}, {"idem_terms", a.idem().size()},
                    {"mult_terms", a.mult.size()}, {"unit_terms", a.unit.size()}};
  }
  return o;
}

Json law(const LawCheck& c) {
  Json j{{"holds", c.holds}};
  if (c.counterexample)
    j["counterexample"] = Json{{"blocks", c.counterexample->first.partition.blocks()},
                               {"coeff", to_json(c.counterexample->second)}};
  return j;
}

Outcome cmd_check(const std::string& path) {
  const AlgebraObject a = algebra_from_json(read_json_file(path));
  const AxiomReport r = check_axioms(a);
  Outcome o;
  o.result = Json{{"idempotent", law(r.idempotent)},
                  {"structure_on_carrier", law(r.absorbs)},
                  {"associativity", law(r.associativity)},
                  {"unit", law(r.unit)},
                  {"commutativity", law(r.commutativity)}};
  if (r.all()) {
    const SimplicityCertificate c = certify_simple(a);
    o.result["connectedness"] = c.connectedness;
    o.result["pairing"] = Json{{"nondegenerate", c.pairing.nondegenerate},
                               {"det", to_json(c.pairing.det)},
                               {"end_dimension", c.pairing.end_dimension}};
    if (c.pairing.inverse) o.result["pairing"]["inverse"] = to_json(*c.pairing.inverse);
    if (c.verdict == Verdict::CertifiedNonsimple)
      o.result["witness"] = Json{{"n", c.witness_n}, {"ideal_dimension", c.witness_ideal_dim}};
    o.result["verdict"] = to_string(c.verdict);
  } else {
    o.result["verdict"] = "axioms-failed";
    o.exit = kVerificationFailure;
  }
  o.verdicts["check-algebra"] = o.result["verdict"];
  return o;
}

Outcome cmd_classify(std::size_t n, const Context& ctx) {
  const auto classes = subgroups_up_to_conjugacy(n);
  std::vector<Json> rows(classes.size());
  parallel_for(classes.size(), ctx.jobs, [&](std::size_t i) {
    const auto v = is_simple_equivariant(coset_algebra(n, classes[i]));
    rows[i] = Json{{"class_id", i}, {"order", classes[i].order()}, {"generators", classes[i].generators_text()},
                   {"simple", v.simple}};
  });
  Outcome o;
  o.result = Json{{"n", n}, {"classes", rows.size()}, {"rows", rows}};
  const bool all_simple = std::all_of(rows.begin(), rows.end(), [](const Json& r) { return r["simple"].get<bool>(); });
  o.verdicts["all_simple"] = all_simple;
  if (!all_simple) o.exit = kVerificationFailure;
  return o;
}

Outcome cmd_contains_times(std::size_t n, std::size_t k) {
  const auto r = verify_contains_times(n, k);
  Json cases = Json::array();
  for (const auto& c : r.cases)
    cases.push_back(Json{{"group", c.group.generators_text()},
                         {"order", c.group.order()},
                         {"k_prime", c.k_prime},
                         {"factor", c.factor.generators_text()},
                         {"conjugator", c.conjugator.to_cycles()},
                         {"found", c.found}});
  Outcome o;
  o.result = Json{{"status", r.pass ? "pass" : "fail"}, {"n", n}, {"k", k}, {"cases", cases}};
  o.verdicts["contains-times"] = o.result["status"];
  if (!r.pass) o.exit = kVerificationFailure;
  return o;
}

Outcome cmd_sign(std::size_t n) {
  const auto alt = PermGroup::alternating(n);
  Json rows = Json::array();
  bool pass = true;
  std::size_t id = 0;
  for (const auto& h : subgroups_up_to_conjugacy(n)) {
    const std::size_t class_id = id++;
    if (!h.is_subgroup_of(alt)) continue;
    const std::size_t m = sign_multiplicity(n, h);
    pass = pass && m >= 1;
    rows.push_back(Json{{"class_id", class_id}, {"order", h.order()}, {"generators", h.generators_text()},
                        {"sign_multiplicity", m}});
  }
  Outcome o;
  o.result = Json{{"status", pass ? "pass" : "fail"}, {"n", n}, {"subgroups_of_alternating", rows}};
  if (n >= 1) o.result["point_stabilizer_sign_multiplicity"] = sign_multiplicity(n, PermGroup::symmetric_on_tail(n, 1));
  o.verdicts["sign-obstruction"] = o.result["status"];
  if (!pass) o.exit = kVerificationFailure;
  return o;
}

Outcome cmd_fiber(std::size_t n, const std::string& path, bool match) {
  const AlgebraObject a = algebra_from_json(read_json_file(path));
  const EquivariantAlgebra fib = specialize_algebra(a, n);
  Outcome o;
  o.result = Json{{"n", n}, {"ambient", a.k()}, {"dim", fib.dim}, {"basis", fib.labels}};
  if (match) {
    const PermGroup h(a.k(), a.subgroup);
    std::optional<EquivariantIsomorphism> iso;
    try {
      iso = match_fiber_algebra(fib, n, a.k(), h);
    } catch (const DomainError& e) {
      o.result["mismatch"] = e.what();
    }
    o.result["target"] = "C[S_" + std::to_string(n) + "/(H x S_" + std::to_string(n - a.k()) + ")]";
    o.result["isomorphic"] = iso.has_value();
    if (iso) {
      Json m = Json::array();
      for (const auto& row : iso->matrix) {
        Json r = Json::array();
        for (const auto& x : row) r.push_back(rational_to_string(x));
        m.push_back(r);
      }
      o.result["isomorphism"] = m;
    } else {
      o.exit = kVerificationFailure;
    }
    o.verdicts["match"] = iso.has_value();
  }
  return o;
}

Outcome cmd_selftest(const std::vector<int>& only, const Context& ctx) {
  std::vector<int> ids = only;
  if (ids.empty())
    for (int i = 1; i <= kInProcessCriteria; ++i) ids.push_back(i);
  std::vector<CriterionResult> results(ids.size());
  parallel_for(ids.size(), ctx.jobs, [&](std::size_t i) { results[i] = run_criterion(ids[i], ctx.seed); });
  Outcome o;
  o.result = Json{{"suite", "acceptance"}, {"seed", ctx.seed}, {"criteria", results_json(results)}};
  bool all = true;
  Json timing = Json::object();
  for (const auto& r : results) {
    all = all && r.pass;
    o.verdicts[std::to_string(r.id)] = r.pass ? "pass" : "fail";
    timing[std::to_string(r.id)] = r.seconds;
  }
  o.verdicts["criterion_seconds"] = timing;
  o.result["status"] = all ? "pass" : "fail";
  if (!all) o.exit = kVerificationFailure;
  return o;
}

Json limits_json() {
  const Limits& l = limits();
  return Json{{"max_ground", l.max_ground},
              {"enumeration_limit", l.enumeration_limit},
              {"hom_basis_limit", l.hom_basis_limit},
              {"distinct_idem_limit", l.distinct_idem_limit},
              {"equivariant_dim_limit", l.equivariant_dim_limit},
              {"fiber_entry_budget", l.fiber_entry_budget},
              {"subgroup_degree_limit", l.subgroup_degree_limit},
              {"lemma_degree_limit", l.lemma_degree_limit},
              {"sign_degree_limit", l.sign_degree_limit}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact diagram calculus for Rep(S_t) and its induced algebras"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  app.fallthrough();
  Context ctx;
  app.add_option("--seed", ctx.seed, "Seed for randomized searches")->capture_default_str();
  app.add_option("--jobs", ctx.jobs, "Worker threads for independent cases")->check(CLI::PositiveNumber);
  app.add_flag("--pretty", ctx.pretty, "Human-readable tables instead of JSON");
  app.add_option("--manifest", ctx.manifest_path, "Write the run manifest here instead of stderr");

  std::string lhs, rhs, gens, out, file;
  std::size_t k = 0, n = 0;
  bool match = false;
  std::vector<int> criteria;

  auto* compose_cmd = app.add_subcommand("compose", "Compose two morphisms: lhs o rhs");
  compose_cmd->add_option("--lhs", lhs)->required();
  compose_cmd->add_option("--rhs", rhs)->required();

  auto* dim_cmd = app.add_subcommand("dim-poly", "Dimension polynomial of ind(C[S_k/H])");
  dim_cmd->add_option("--k", k)->required();
  dim_cmd->add_option("--subgroup", gens, "Generators in cycle notation")->default_str("");

  auto* build_cmd = app.add_subcommand("build-algebra", "Construct ind(C[S_k/H]) as an algebra object");
  build_cmd->add_option("--k", k)->required();
  build_cmd->add_option("--subgroup", gens)->default_str("");
  build_cmd->add_option("--out", out);

  auto* check_cmd = app.add_subcommand("check-algebra", "Axioms, connectedness, pairing and simplicity verdict");
  check_cmd->add_option("file", file)->required();

  auto* classify_cmd = app.add_subcommand("classify-repsn", "Coset algebras C[S_n/H] up to conjugacy");
  classify_cmd->add_option("--n", n)->required();

  auto* lemma_cmd = app.add_subcommand("verify-lemma", "Exhaustive lemma checks");
  lemma_cmd->require_subcommand(1);
  auto* ct_cmd = lemma_cmd->add_subcommand("contains-times", "Subgroups containing S_{n-k}");
  ct_cmd->add_option("--n", n)->required();
  ct_cmd->add_option("--k", k)->required();
  auto* sign_cmd = lemma_cmd->add_subcommand("sign-obstruction", "Sign multiplicity for subgroups of A_n");
  sign_cmd->add_option("--n", n)->required();

  auto* fiber_cmd = app.add_subcommand("fiber", "Specialize an algebra object at t = n");
  fiber_cmd->add_option("--n", n)->required();
  fiber_cmd->add_option("--algebra", file)->required();
  fiber_cmd->add_flag("--match", match, "Match against C[S_n/(H x S_{n-k})]");

  auto* self_cmd = app.add_subcommand("selftest", "Run the acceptance suite");
  self_cmd->add_option("--criteria", criteria, "Subset of criteria to run")->check(CLI::Range(1, kInProcessCriteria));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  std::string command;
  Json params = Json::object();
  int code = kOk;
  try {
    if (*compose_cmd) {
      command = "compose";
      params = Json{{"lhs", lhs}, {"rhs", rhs}};
      outcome = cmd_compose(lhs, rhs);
    } else if (*dim_cmd) {
      command = "dim-poly";
      params = Json{{"k", k}, {"subgroup", gens}};
      outcome = cmd_dim_poly(k, gens);
    } else if (*build_cmd) {
      command = "build-algebra";
      params = Json{{"k", k}, {"subgroup", gens}, {"out", out}};
      outcome = cmd_build(k, gens, out);
    } else if (*check_cmd) {
      command = "check-algebra";
      params = Json{{"file", file}};
      outcome = cmd_check(file);
    } else if (*classify_cmd) {
      command = "classify-repsn";
      params = Json{{"n", n}};
      outcome = cmd_classify(n, ctx);
    } else if (*ct_cmd) {
      command = "verify-lemma contains-times";
      params = Json{{"n", n}, {"k", k}};
      outcome = cmd_contains_times(n, k);
    } else if (*sign_cmd) {
      command = "verify-lemma sign-obstruction";
      params = Json{{"n", n}};
      outcome = cmd_sign(n);
    } else if (*fiber_cmd) {
      command = "fiber";
      params = Json{{"n", n}, {"algebra", file}, {"match", match}};
      outcome = cmd_fiber(n, file, match);
    } else if (*self_cmd) {
      command = "selftest";
      params = Json{{"criteria", criteria}};
      outcome = cmd_selftest(criteria, ctx);
    }
    code = outcome.exit;
  } catch (const UsageError& e) {
    outcome.result = Json{{"error", "usage"}, {"message", e.what()}};
    code = kUsage;
  } catch (const LimitError& e) {
    outcome.result = Json{{"error", "resource-limit"}, {"message", e.what()}};
    code = kResource;
  } catch (const DomainError& e) {
    outcome.result = Json{{"error", "usage"}, {"message", e.what()}};
    code = kUsage;
  } catch (const Error& e) {
    outcome.result = Json{{"error", "verification"}, {"message", e.what()}};
    code = kVerificationFailure;
  }

  if (ctx.pretty) render(outcome.result, std::cout, 0);
  else std::cout << outcome.result.dump() << "\n";

  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  params["seed"] = ctx.seed;
  params["jobs"] = ctx.jobs;
  const Json manifest{{"command", command},      {"parameters", params},       {"version", kVersion},
                      {"limits", limits_json()}, {"wall_time_seconds", seconds}, {"exit_code", code},
                      {"verdicts", outcome.verdicts}};
  if (ctx.manifest_path.empty()) {
    std::cerr << manifest.dump() << "\n";
  } else {
    std::ofstream f(ctx.manifest_path);
    f << manifest.dump(2) << "\n";
  }
  return code;
}
