#include "fermat_mld/cli/commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "fermat_mld/cli/beta_cache.hpp"
#include "fermat_mld/errors.hpp"
#include "fermat_mld/verification.hpp"

namespace fermat_mld::cli {

using nlohmann::json;

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "text") return OutputFormat::text;
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  return std::nullopt;
}

std::string render_beta(const BetaRecord& record, OutputFormat format,
                        std::string_view method_label) {
  const char* name = record.kind == CountKind::alpha ? "alpha" : "beta";
  const std::string method(method_label.empty() ? to_string(record.method) : method_label);
  std::ostringstream os;
  switch (format) {
    case OutputFormat::text:
      os << name << '(' << record.mu << ',' << record.nu << ") = " << record.value.get_str()
         << " [" << method << "]\n";
      break;
    case OutputFormat::csv:
      os << "kind,mu,nu,value,method\n"
         << name << ',' << record.mu << ',' << record.nu << ',' << record.value.get_str() << ','
         << method << '\n';
      break;
    case OutputFormat::json:
      os << json{{"kind", name},
                 {"mu", record.mu},
                 {"nu", record.nu},
                 {"value", record.value.get_str()},
                 {"method", method}}
                .dump()
         << '\n';
      break;
  }
  return os.str();
}

std::string render_report(const MLDegreeReport& report, OutputFormat format) {
  const unsigned n = report.query.n(), d = report.query.d();
  std::ostringstream os;
  switch (format) {
    case OutputFormat::text:
      os << "MLdeg(F_{" << n << ',' << d << "})\n";
      os << "base = " << report.base.get_str() << '\n';
      for (const auto& c : report.corrections)
        os << "j=" << c.j << " binomial=" << c.binomial.get_str() << " beta(" << n - c.j << ','
           << d - 1 << ")=" << c.beta.get_str() << " product=" << c.product.get_str() << " ["
           << to_string(c.method) << "]\n";
      os << "total = " << report.total.get_str() << '\n';
      break;
    case OutputFormat::csv:
      os << "n,d,row,j,binomial,beta,product\n";
      os << n << ',' << d << ",base,,,," << report.base.get_str() << '\n';
      for (const auto& c : report.corrections)
        os << n << ',' << d << ",correction," << c.j << ',' << c.binomial.get_str() << ','
           << c.beta.get_str() << ',' << c.product.get_str() << '\n';
      os << n << ',' << d << ",total,,,," << report.total.get_str() << '\n';
      break;
    case OutputFormat::json: {
      json corrections = json::array();
      for (const auto& c : report.corrections)
        corrections.push_back({{"j", c.j},
                               {"binomial", c.binomial.get_str()},
                               {"beta", c.beta.get_str()},
                               {"product", c.product.get_str()}});
      os << json{{"n", n},
                 {"d", d},
                 {"base", report.base.get_str()},
                 {"corrections", corrections},
                 {"total", report.total.get_str()}}
                .dump()
         << '\n';
      break;
    }
  }
  return os.str();
}

std::string render_table(const std::vector<TableCell>& cells, unsigned n_max, unsigned d_max,
                         OutputFormat format) {
  const auto value_of = [](const TableCell& c) {
    return c.value ? c.value->get_str() : std::string("?");
  };
  std::ostringstream os;
  switch (format) {
    case OutputFormat::text: {
      std::size_t width = 1;
      for (const auto& c : cells) width = std::max(width, value_of(c).size());
      width = std::max<std::size_t>(width, std::to_string(d_max).size()) + 1;
      os << "n\\d";
      for (unsigned d = 2; d <= d_max; ++d) os << std::setw(static_cast<int>(width)) << d;
      os << '\n';
      for (unsigned n = 1; n <= n_max; ++n) {
        os << std::setw(3) << std::left << n << std::right;
        for (const auto& c : cells)
          if (c.n == n) os << std::setw(static_cast<int>(width)) << value_of(c);
        os << '\n';
      }
      break;
    }
    case OutputFormat::csv:
      os << "n,d,mldeg\n";
      for (const auto& c : cells) os << c.n << ',' << c.d << ',' << value_of(c) << '\n';
      break;
    case OutputFormat::json: {
      json rows = json::array();
      for (const auto& c : cells) rows.push_back({{"n", c.n}, {"d", c.d}, {"mldeg", value_of(c)}});
      os << json{{"n_max", n_max}, {"d_max", d_max}, {"cells", rows}}.dump() << '\n';
      break;
    }
  }
  return os.str();
}

namespace {

struct CommonOptions {
  std::string format = "text";
  std::string cache_path;
  unsigned long long budget = 0;  // 0: library defaults
  bool stats = false;

  EnumerationOptions enumeration() const {
    EnumerationOptions o;
    if (budget != 0) o.tuple_budget = o.multiset_budget = budget;
    return o;
  }
  OutputFormat output_format() const { return *parse_format(format); }
};

void add_format(CLI::App* cmd, CommonOptions& common) {
  cmd->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}));
}

void add_budget(CLI::App* cmd, CommonOptions& common) {
  cmd->add_option("--budget", common.budget,
                  "Enumeration budget (tuples for brute force, multisets otherwise)")
      ->check(CLI::PositiveNumber);
}

void add_cache(CLI::App* cmd, CommonOptions& common) {
  cmd->add_option("--cache", common.cache_path, "Persistent beta cache file");
  cmd->add_flag("--stats", common.stats, "Report cache hits and misses on stderr");
}

// Wraps the beta source in the on-disk cache when one is configured and
// persists new entries once the command has finished computing.
class Session {
 public:
  Session(const CommonOptions& common, const Environment& env)
      : common_(common),
        fallback_(env.beta ? *env.beta : auto_beta_source(common.enumeration())) {
    if (!common.cache_path.empty()) {
      cache_ = BetaCache::load(common.cache_path);
      caching_.emplace(*cache_, fallback_);
    }
  }

  BetaSource source() {
    if (!caching_) return fallback_;
    return [this](unsigned mu, unsigned nu) { return (*caching_)(mu, nu); };
  }

  BetaCache* cache() { return cache_ ? &*cache_ : nullptr; }

  void finish(std::ostream& err) {
    if (!cache_) return;
    if (cache_->dirty()) cache_->save(common_.cache_path);
    if (common_.stats)
      err << "cache: hits=" << caching_->stats().hits << " misses=" << caching_->stats().misses
          << " entries=" << cache_->size() << '\n';
  }

 private:
  const CommonOptions& common_;
  BetaSource fallback_;
  std::optional<BetaCache> cache_;
  std::optional<CachingBetaSource> caching_;
};

int cmd_beta(unsigned mu, unsigned nu, const std::string& method, const CommonOptions& common,
             const Environment& env, std::ostream& out, std::ostream& err) {
  Session session(common, env);
  BetaRecord record;
  if (method == "auto") {
    record = session.source()(mu, nu);
  } else {
    record = compute_beta(mu, nu, *parse_beta_method(method), common.enumeration());
    if (auto* cache = session.cache()) cache->insert(mu, nu, record.value);
  }
  session.finish(err);
  out << render_beta(record, common.output_format());
  return kOk;
}

int cmd_alpha(unsigned mu, unsigned nu, std::string method, const CommonOptions& common,
              const Environment& env, std::ostream& out, std::ostream& err) {
  Session session(common, env);
  if (method == "auto") method = mu == 0 ? "direct" : "from_beta";
  BetaRecord record{mu, nu, 0, BetaMethod::symmetric, CountKind::alpha};
  if (method == "direct") {
    record.value = alpha_direct(mu, nu, common.enumeration());
  } else if (method == "prime_power") {
    const auto form = PrimePowerForm::of(nu);
    if (!form) throw MethodNotApplicable("prime_power needs nu = p^r");
    record.value = alpha_prime_power(mu, *form);
  } else {
    if (mu == 0) throw MethodNotApplicable("from_beta needs mu >= 1");
    record.value = BigInt(nu) * session.source()(mu - 1, nu).value;
  }
  session.finish(err);
  out << render_beta(record, common.output_format(), method);
  return kOk;
}

int cmd_mldeg(unsigned n, unsigned d, const CommonOptions& common, const Environment& env,
              std::ostream& out, std::ostream& err) {
  Session session(common, env);
  const auto report = ml_degree_fermat(FermatQuery(n, d), session.source());
  session.finish(err);
  out << render_report(report, common.output_format());
  return kOk;
}

int cmd_table(unsigned n_max, unsigned d_max, const CommonOptions& common,
              const Environment& env, std::ostream& out, std::ostream& err) {
  Session session(common, env);
  const BetaSource source = session.source();
  std::vector<TableCell> cells;
  for (unsigned n = 1; n <= n_max; ++n)
    for (unsigned d = 2; d <= d_max; ++d) {
      TableCell cell{n, d, std::nullopt};
      try {
        cell.value = ml_degree_fermat(FermatQuery(n, d), source).total;
      } catch (const BudgetExceeded& e) {
        err << "note: MLdeg(F_{" << n << ',' << d << "}) skipped: " << e.what() << '\n';
      }
      cells.push_back(std::move(cell));
    }
  session.finish(err);
  out << render_table(cells, n_max, d_max, common.output_format());
  return kOk;
}

int cmd_verify(const std::string& suite, const CommonOptions& common, const Environment& env,
               std::ostream& out) {
  VerificationConfig config;
  config.options = common.enumeration();
  config.beta = env.beta ? *env.beta : auto_beta_source(config.options);

  std::vector<CheckLine> lines;
  auto append = [&lines](std::vector<CheckLine> more) {
    lines.insert(lines.end(), std::make_move_iterator(more.begin()),
                 std::make_move_iterator(more.end()));
  };
  if (suite == "all" || suite == "cyclotomic") append(run_cyclotomic_suite());
  if (suite == "all" || suite == "counting") append(run_counting_suite(config));
  if (suite == "all" || suite == "mldeg") append(run_mldegree_suite(config));

  std::size_t passed = 0, failed = 0, skipped = 0;
  for (const auto& line : lines) {
    out << render(line) << '\n';
    passed += line.status == CheckStatus::pass;
    failed += line.status == CheckStatus::fail;
    skipped += line.status == CheckStatus::skip;
  }
  out << "verify " << suite << ": " << passed << " passed, " << failed << " failed, " << skipped
      << " skipped\n";
  return failed == 0 ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Environment& env) {
  CLI::App app{"Maximum likelihood degrees of Fermat hypersurfaces", "fermat-mld"};
  app.require_subcommand(1);

  CommonOptions common;
  unsigned mu = 0, nu = 0, n = 0, d = 0, n_max = 0, d_max = 0;
  std::string beta_method = "auto", alpha_method = "auto", suite = "all";

  auto* beta = app.add_subcommand("beta", "Count tuples of nu-th roots of unity summing to -1");
  beta->add_option("--mu", mu, "Number of roots")->required();
  beta->add_option("--nu", nu, "Order of the roots of unity")->required();
  beta->add_option("--method", beta_method, "Counting method")
      ->check(CLI::IsMember({"auto", "brute", "symmetric", "closed", "prime_power"}));
  add_format(beta, common);
  add_cache(beta, common);
  add_budget(beta, common);

  auto* alpha = app.add_subcommand("alpha", "Count tuples of nu-th roots of unity summing to 0");
  alpha->add_option("--mu", mu, "Number of roots")->required();
  alpha->add_option("--nu", nu, "Order of the roots of unity")->required();
  alpha->add_option("--method", alpha_method, "Counting method")
      ->check(CLI::IsMember({"auto", "direct", "from_beta", "prime_power"}));
  add_format(alpha, common);
  add_cache(alpha, common);
  add_budget(alpha, common);

  auto* mldeg = app.add_subcommand("mldeg", "ML degree of the Fermat hypersurface F_{n,d}");
  mldeg->add_option("--n", n, "Projective dimension")->required();
  mldeg->add_option("--d", d, "Degree")->required();
  add_format(mldeg, common);
  add_cache(mldeg, common);
  add_budget(mldeg, common);

  auto* table = app.add_subcommand("table", "ML degrees for 1 <= n <= n-max, 2 <= d <= d-max");
  table->add_option("--n-max", n_max, "Largest n")->required()->check(CLI::PositiveNumber);
  table->add_option("--d-max", d_max, "Largest d")->required()->check(CLI::PositiveNumber);
  add_format(table, common);
  add_cache(table, common);
  add_budget(table, common);

  auto* verify = app.add_subcommand("verify", "Run the identity verification suites");
  verify->add_option("--suite", suite, "Suite to run")
      ->check(CLI::IsMember({"all", "counting", "mldeg", "cyclotomic"}));
  add_budget(verify, common);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (beta->parsed()) return cmd_beta(mu, nu, beta_method, common, env, out, err);
    if (alpha->parsed()) return cmd_alpha(mu, nu, alpha_method, common, env, out, err);
    if (mldeg->parsed()) return cmd_mldeg(n, d, common, env, out, err);
    if (table->parsed()) return cmd_table(n_max, d_max, common, env, out, err);
    if (verify->parsed()) return cmd_verify(suite, common, env, out);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const NonExactDivision& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUnsupported;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUnsupported;
  }
  return kUsage;
}

}  // namespace fermat_mld::cli
