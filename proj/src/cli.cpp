#include "severi/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "severi/error.hpp"
#include "severi/output.hpp"

namespace severi {

namespace {

struct Options {
  std::uint32_t d = 0;
  std::uint32_t delta = 0;
  std::uint32_t delta_max = 0;
  std::uint32_t dmax = 0;
  std::size_t order = 0;
  std::optional<std::string> alpha;
  std::optional<std::string> beta;
  std::vector<std::uint32_t> dlist;
  std::vector<std::string> values;
  std::optional<std::int64_t> x, y, z, t;
  std::string format = "json";
  std::optional<std::string> cache_path;
  bool no_cache = false;
  unsigned threads = 1;
  std::string cache_action;
};

std::filesystem::path resolve_cache_path(const Options& opt) {
  if (opt.cache_path) return *opt.cache_path;
  if (const char* env = std::getenv("SEVERI_CACHE"); env && *env) return env;
  return "severi.cache";
}

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorCode::InvalidArgument, message);
}

std::vector<std::uint32_t> default_dlist(std::size_t order) {
  std::vector<std::uint32_t> out;
  for (std::size_t d = order + 1; d <= order + 5; ++d) out.push_back(static_cast<std::uint32_t>(d));
  return out;
}

class Session {
 public:
  Session(const Options& opt, std::ostream& err) : err_(err) {
    if (opt.no_cache) return;
    path_ = resolve_cache_path(opt);
    if (std::filesystem::exists(*path_)) cache_ = SeveriCache::load(*path_);
    loaded_size_ = cache_.size();
  }

  SeveriCache& cache() { return cache_; }
  const std::optional<std::filesystem::path>& path() const { return path_; }

  void progress(const std::string& what) { err_ << "severi: " << what << '\n'; }

  void persist() {
    if (path_ && cache_.size() != loaded_size_) cache_.save(*path_);
  }

 private:
  std::ostream& err_;
  SeveriCache cache_;
  std::optional<std::filesystem::path> path_;
  std::size_t loaded_size_ = 0;
};

Document run_count(const Options& opt, Session& s) {
  require(opt.d >= 1, "--d must be at least 1");
  Json body{{"d", opt.d}, {"delta", opt.delta}};
  BigInt value;
  if (opt.alpha || opt.beta) {
    ChState st{opt.d, opt.delta, TangencySeq::parse(opt.alpha.value_or("")),
               TangencySeq::parse(opt.beta.value_or(""))};
    validate_state(st);
    body["alpha"] = st.alpha.to_text();
    body["beta"] = st.beta.to_text();
    value = relative_severi(st, s.cache());
  } else {
    value = severi_degree(opt.d, opt.delta, s.cache());
  }
  body["value"] = to_string(value);
  return Document{std::move(body), std::nullopt};
}

Document run_table(const Options& opt, Session& s) {
  require(opt.dmax >= 1, "--dmax must be at least 1");
  s.progress("computing N^{d,delta} for d <= " + std::to_string(opt.dmax) +
             ", delta <= " + std::to_string(opt.delta_max));
  return table_document(severi_table(opt.dmax, opt.delta_max, s.cache(), opt.threads));
}

Document run_nodepoly(const Options& opt, Session& s) {
  s.progress("fitting T_" + std::to_string(opt.delta));
  return Document{to_json(fit_node_polynomial(opt.delta, s.cache())), std::nullopt};
}

Document run_threshold(const Options& opt, Session& s) {
  require(opt.delta >= 1, "--delta must be at least 1");
  s.progress("locating the threshold of T_" + std::to_string(opt.delta));
  const ThresholdResult r = threshold(opt.delta, s.cache());
  return Document{Json{{"delta", r.delta}, {"threshold", r.threshold}}, std::nullopt};
}

Document run_logforms(const Options& opt, Session& s) {
  require(opt.delta_max >= 1, "--deltamax must be at least 1");
  s.progress("fitting log forms up to kappa = " + std::to_string(opt.delta_max));
  Json forms = Json::array();
  for (const auto& f : log_forms(opt.delta_max, s.cache())) forms.push_back(to_json(f));
  return Document{Json{{"deltamax", opt.delta_max}, {"forms", std::move(forms)}}, std::nullopt};
}

Document run_bell(const Options& opt, Session&) {
  std::vector<Rat> a;
  for (const auto& v : opt.values) a.push_back(parse_rat(v));
  require(a.size() >= opt.delta, "--values needs at least delta entries");
  return Document{Json{{"delta", opt.delta}, {"value", to_string(bell_polynomial(opt.delta, a))}}, std::nullopt};
}

BSeriesSolution solve(const Options& opt, Session& s, std::size_t order) {
  const auto dlist = opt.dlist.empty() ? default_dlist(order) : opt.dlist;
  s.progress("extracting B1, B2 to order " + std::to_string(order));
  return extract_b_series(order, dlist, s.cache(), FormCatalog::build(std::max<std::size_t>(order, 1)));
}

Document run_bseries(const Options& opt, Session& s) {
  return Document{to_json(solve(opt, s, opt.order)), std::nullopt};
}

Document run_predict(const Options& opt, Session& s) {
  Invariants inv;
  const bool explicit_inv = opt.x || opt.y || opt.z || opt.t;
  if (explicit_inv) {
    require(opt.x && opt.y && opt.z && opt.t, "--x, --y, --z and --t must be given together");
    require(opt.d == 0, "give either --d or explicit invariants, not both");
    inv = Invariants{*opt.x, *opt.y, *opt.z, *opt.t};
  } else {
    require(opt.d >= 1, "predict needs --d or explicit invariants");
    inv = plane_invariants(opt.d);
  }
  inv.validate();
  const BSeriesSolution sol = solve(opt, s, opt.order);
  const FormCatalog forms = FormCatalog::build(std::max<std::size_t>(opt.order, 1));
  Json values = Json::array();
  for (const auto& n : gyz_predict(inv, sol, forms, opt.order)) values.push_back(to_string(n));
  return Document{Json{{"invariants", to_json(inv)},
                       {"order", opt.order},
                       {"d_used", sol.d_used},
                       {"values", std::move(values)}},
                  std::nullopt};
}

Document run_forms(const Options& opt, Session&) {
  require(opt.order >= 1, "--order must be at least 1");
  return Document{to_json(FormCatalog::build(opt.order)), std::nullopt};
}

Document run_cache(const Options& opt, Session& s) {
  const auto& path = s.path();
  require(path.has_value(), "cache commands need a cache path (drop --no-cache)");
  if (opt.cache_action == "clear") {
    const bool removed = std::filesystem::remove(*path);
    s.cache().clear();
    return Document{Json{{"path", path->string()}, {"cleared", removed}}, std::nullopt};
  }
  return Document{Json{{"path", path->string()},
                       {"version", SeveriCache::kHeader},
                       {"entries", s.cache().size()}},
                  std::nullopt};
}

Json error_body(ErrorCode code, const std::string& message) {
  return Json{{"error", Json{{"code", error_name(code)}, {"message", message}}}};
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Exact Severi degrees, node polynomials and generating series of nodal plane curves", "severi"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", opt.format, "Output format: json or csv (csv only for table)");
  app.add_option("--cache", opt.cache_path, "Cache file (default $SEVERI_CACHE or ./severi.cache)");
  app.add_flag("--no-cache", opt.no_cache, "Do not read or write the cache file");
  app.add_option("--threads", opt.threads, "Worker threads for table")->check(CLI::Range(1u, 256u));

  using Runner = std::function<Document(const Options&, Session&)>;
  std::vector<std::pair<CLI::App*, Runner>> commands;
  auto add = [&](const std::string& name, const std::string& help, Runner run) {
    CLI::App* sub = app.add_subcommand(name, help);
    commands.emplace_back(sub, std::move(run));
    return sub;
  };

  auto* count = add("count", "Severi degree N^{d,delta}, optionally relative (--alpha, --beta)", run_count);
  count->add_option("--d", opt.d)->required();
  count->add_option("--delta", opt.delta)->required();
  count->add_option("--alpha", opt.alpha, "Assigned tangencies, e.g. 2,0,1");
  count->add_option("--beta", opt.beta, "Unassigned tangencies");

  auto* table = add("table", "N^{d,delta} for 1 <= d <= dmax, 0 <= delta <= deltamax", run_table);
  table->add_option("--dmax", opt.dmax)->required();
  table->add_option("--deltamax", opt.delta_max)->required();

  add("nodepoly", "Fit the node polynomial T_delta(d)", run_nodepoly)
      ->add_option("--delta", opt.delta)
      ->required();
  add("threshold", "Least degree from which T_delta(d) = N^{d,delta}", run_threshold)
      ->add_option("--delta", opt.delta)
      ->required();
  add("logforms", "Quadratic forms q_kappa(d) of the logarithm", run_logforms)
      ->add_option("--deltamax", opt.delta_max)
      ->required();

  auto* bell = add("bell", "Complete exponential Bell polynomial P_delta(a_1..a_delta)", run_bell);
  bell->add_option("--delta", opt.delta)->required();
  bell->add_option("--values", opt.values, "a_1,...,a_delta as rationals")->delimiter(',');

  auto* bseries = add("bseries", "Extract the coefficients of B1(q), B2(q)", run_bseries);
  bseries->add_option("--order", opt.order)->required();
  bseries->add_option("--dlist", opt.dlist, "Extraction degrees (default order+1..order+5)")->delimiter(',');

  auto* predict = add("predict", "Predict n_delta from the invariants (x, y, z, t)", run_predict);
  predict->add_option("--order", opt.order)->required();
  predict->add_option("--d", opt.d, "Plane degree (sets x, y, z, t)");
  predict->add_option("--x", opt.x);
  predict->add_option("--y", opt.y);
  predict->add_option("--z", opt.z);
  predict->add_option("--t", opt.t);
  predict->add_option("--dlist", opt.dlist, "Extraction degrees (default order+1..order+5)")->delimiter(',');

  add("forms", "Dump u, B3, B4 and Delta", run_forms)->add_option("--order", opt.order)->required();

  add("cache", "Cache maintenance", run_cache)
      ->add_option("action", opt.cache_action)
      ->required()
      ->check(CLI::IsMember({"stats", "clear"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "severi: " << e.what() << '\n';
    out << error_body(ErrorCode::InvalidArgument, e.what()).dump() << '\n';
    return kExitValidation;
  }

  try {
    const OutputFormat format = parse_format(opt.format);
    for (auto& [sub, run] : commands) {
      if (!sub->parsed()) continue;
      Session session(opt, err);
      const Document doc = run(opt, session);
      const std::string text = format_output(doc, format);
      if (sub->get_name() != "cache") session.persist();
      out << text;
      return kExitOk;
    }
    return kExitValidation;
  } catch (const Error& e) {
    err << "severi: " << error_name(e.code()) << ": " << e.what() << '\n';
    out << error_body(e.code(), e.what()).dump() << '\n';
    return is_internal_inconsistency(e.code()) ? kExitInconsistent : kExitValidation;
  } catch (const std::exception& e) {
    err << "severi: " << e.what() << '\n';
    out << error_body(ErrorCode::InvalidArgument, e.what()).dump() << '\n';
    return kExitValidation;
  }
}

}  // namespace severi
