#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "zgring/combinatorics.hpp"
#include "zgring/dimension.hpp"
#include "zgring/errors.hpp"
#include "zgring/io.hpp"
#include "zgring/oracle.hpp"
#include "zgring/ring.hpp"
#include "zgring/sequences.hpp"

namespace zgring::cli {

namespace {

struct Options {
  bool no_timestamp = false;
  std::string format = "json";

  std::optional<std::int64_t> d, d1, d2;
  bool oracle = false;

  int bound = 3;
  std::size_t seed_index = 0;
  std::size_t window = kDefaultWindow;
  bool verify = false;
  std::string load, dump;

  std::size_t matrix_index = 0;

  std::string delta;
  bool grid = false;

  std::vector<long> alpha, bidegree;
  std::size_t count = 6;
};

std::string utc_now() {
  const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream s;
  s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return s.str();
}

struct Degree {
  bool bi = false;
  std::int64_t d = 0, d1 = 0, d2 = 0;
};

Degree degree_choice(const Options& o) {
  const bool total = o.d.has_value();
  const bool bi = o.d1.has_value() || o.d2.has_value();
  if (total == bi) throw CLI::ValidationError("degree", "give either --d or both --d1 and --d2");
  if (bi && !(o.d1 && o.d2)) throw CLI::ValidationError("degree", "--d1 and --d2 go together");
  Degree g;
  g.bi = bi;
  if (total) g.d = *o.d;
  if (bi) {
    g.d1 = *o.d1;
    g.d2 = *o.d2;
  }
  if (g.d < 0 || g.d1 < 0 || g.d2 < 0) throw std::invalid_argument("degrees must be non-negative");
  return g;
}

Json degree_json(const Degree& g) {
  if (!g.bi) return g.d;
  return Json::array({g.d1, g.d2});
}

Json config_value(const std::string& s) {
  std::size_t used = 0;
  try {
    const long long v = std::stoll(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  return s;
}

Json int_array(const std::vector<std::int64_t>& v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

TransitionMatrix pick_matrix(const Options& o) {
  const auto mats = seed_matrices(o.bound);
  if (o.matrix_index >= mats.size())
    throw std::invalid_argument("--matrix-index out of range: " + std::to_string(mats.size()) + " matrices found");
  return mats[o.matrix_index];
}

double log2_abs(const Rational& q) {
  if (q == 0) return -std::numeric_limits<double>::infinity();
  long en = 0, ed = 0;
  const double mn = mpz_get_d_2exp(&en, q.get_num_mpz_t());
  const double md = mpz_get_d_2exp(&ed, q.get_den_mpz_t());
  return std::log2(std::fabs(mn)) - std::log2(md) + static_cast<double>(en - ed);
}

// ---- subcommands; each fills `body` and returns an exit code ----

int cmd_chi(const Options& o, Json& body) {
  const Degree g = degree_choice(o);
  const auto closed = g.bi ? chi_bi_table(g.d1, g.d2) : chi_total_table(g.d);
  const auto quad = g.bi ? size_histogram_bi(g.d1, g.d2) : size_histogram_total(g.d);
  std::vector<std::int64_t> oracle;
  if (o.oracle) {
    if ((g.bi ? g.d1 + g.d2 : g.d) > kOracleMaxDegree)
      throw bound_exceeded("oracle limited to degree " + std::to_string(kOracleMaxDegree));
    oracle = oracle_histogram(g.bi ? oracle_sizes_bi(g.d1, g.d2) : oracle_sizes_total(g.d));
  }
  bool match = true;
  Json rows = Json::array();
  for (std::size_t s = 0; s < closed.size(); ++s) {
    Json r = {{"s", s}, {"closed", closed[s]}, {"quad", s < quad.size() ? quad[s] : 0}};
    match = match && r["quad"] == r["closed"];
    if (o.oracle) {
      r["oracle"] = s < oracle.size() ? oracle[s] : 0;
      match = match && r["oracle"] == r["closed"];
    }
    rows.push_back(std::move(r));
  }
  if (o.oracle && oracle.size() > closed.size()) match = false;
  body["degree"] = degree_json(g);
  body["values"] = int_array(closed);
  body["rows"] = std::move(rows);
  body["match"] = match;
  return match ? kOk : kMismatch;
}

int cmd_seq(const Options& o, Json& body) {
  std::optional<ExtremalSystem> sys;
  if (!o.load.empty()) {
    std::ifstream in(o.load);
    if (!in) throw std::invalid_argument("cannot open " + o.load);
    Json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument(std::string("malformed JSON in ") + o.load + ": " + e.what());
    }
    sys = load_system(j);
  } else {
    const auto seeds = find_seeds(o.bound, o.seed_index + 1);
    if (o.seed_index >= seeds.size())
      throw std::invalid_argument("--seed-index out of range: " + std::to_string(seeds.size()) + " seeds found");
    sys = generate(seeds[o.seed_index], o.window);
  }
  const Seed& seed = sys->seed();
  body["seed"] = {{"x1", to_json(seed.x1)}, {"x2", to_json(seed.x2)}, {"M", to_json(seed.M)}};
  body["window"] = sys->length();

  Json widths = Json::array();
  for (std::size_t K = 6; K <= sys->length(); ++K) {
    try {
      widths.push_back({{"K", K}, {"log2_width", log2_abs(xi_enclosure(*sys, K).width())}});
    } catch (const verification_error&) {
      widths.push_back({{"K", K}, {"log2_width", nullptr}});
    } catch (const std::out_of_range&) {
      break;
    }
  }
  body["xi_widths"] = std::move(widths);

  if (!o.dump.empty()) {
    std::ofstream f(o.dump);
    if (!f) throw std::invalid_argument("cannot write " + o.dump);
    f << dump_system(*sys).dump(1) << '\n';
  }
  if (!o.verify) return kOk;

  const ConditionReport rep = verify_conditions(*sys);
  Json v;
  v["det2_all_one"] = std::all_of(rep.det2.begin(), rep.det2.end(), [](const Integer& x) { return x == 1; });
  Json d3 = Json::array();
  for (const auto& x : rep.det3) d3.push_back(x.get_str());
  v["det3"] = std::move(d3);
  v["det3_constant_abs"] = rep.det3_constant_abs;
  Json e1 = Json::array();
  for (const auto& s : rep.e1) e1.push_back({{"k", s.k}, {"value", s.value}});
  v["e1"] = std::move(e1);
  v["e1_tail_deviation"] = rep.e1_tail_deviation;
  Json e2 = Json::array();
  for (std::size_t t = 0; t < rep.e2_first.size(); ++t)
    e2.push_back({{"k", rep.e2_first[t].k}, {"first", rep.e2_first[t].value}, {"second", rep.e2_second[t].value}});
  v["e2"] = std::move(e2);
  v["e2_sup"] = rep.e2_sup;
  v["failures"] = rep.failures;
  const bool ok = rep.exact_ok() && rep.det3_constant_abs;
  v["exact_ok"] = ok;
  body["verify"] = std::move(v);
  if (ok) {
    const RationalInterval xi = xi_enclosure(*sys).outward(256);
    body["xi"] = to_json(xi);
    body["theta"] = to_json(theta_from_xi(seed.M, xi));
  }
  return ok ? kOk : kMismatch;
}

int cmd_hilbert(const Options& o, Json& body) {
  const Degree g = degree_choice(o);
  const TransitionMatrix m = pick_matrix(o);
  const HilbertResult h = g.bi ? hilbert_I2(g.d1, g.d2, m) : hilbert_I1(g.d, m);
  body["ideal"] = g.bi ? "I2" : "I1";
  body["M"] = to_json(m);
  body["degree"] = degree_json(g);
  body["monomials"] = h.monomials;
  body["ideal_rank"] = h.ideal_rank;
  body["expected"] = h.expected.get_str();
  body["computed"] = std::to_string(h.computed);
  body["match"] = h.match();
  return h.match() ? kOk : kMismatch;
}

int cmd_basis(const Options& o, Json& body) {
  const Degree g = degree_choice(o);
  const TransitionMatrix m = pick_matrix(o);
  const DegreeBound b = g.bi ? DegreeBound::bi(g.d1, g.d2) : DegreeBound::total(g.d);
  const BasisReport r = basis_rank_check(b, m);
  body["M"] = to_json(m);
  body["degree"] = degree_json(g);
  body["cardinality"] = r.cardinality;
  body["expected"] = r.expected.get_str();
  body["computed"] = std::to_string(r.family_rank);
  body["ideal_rank"] = r.ideal_rank;
  body["ambient"] = r.ambient;
  body["match"] = r.full();
  if (!r.full()) {
    Json cert = Json::array();
    for (const auto& c : r.certificate) cert.push_back(rational_string(c));
    body["certificate"] = std::move(cert);
  }
  return r.full() ? kOk : kMismatch;
}

std::string decimal(const Rational& q, int digits = 6) {
  std::ostringstream s;
  s << std::setprecision(digits) << q.get_d();
  return s.str();
}

int cmd_dim(const Options& o, Json& body, std::string& csv) {
  if (o.grid == !o.delta.empty()) throw CLI::ValidationError("dim", "give either --grid or --d with --delta");
  std::vector<std::pair<std::int64_t, QGamma>> grid;
  if (o.grid) {
    grid = default_grid();
  } else {
    if (!o.d) throw CLI::ValidationError("dim", "--delta needs --d");
    grid.emplace_back(*o.d, QGamma::parse(o.delta));
  }
  const ScalingTable table = scaling_report(grid);
  bool ok = true;
  Json rows = Json::array();
  csv = "d,delta,dim,low_ratio,high_ratio\n";
  for (const auto& r : table.rows) {
    const std::int64_t direct = dim_Vd_direct(r.d, r.delta);
    ok = ok && direct == r.dim;
    rows.push_back({{"d", r.d},
                    {"delta", r.delta.to_string()},
                    {"dim", r.dim},
                    {"dim_direct", direct},
                    {"power", to_json(r.power.outward(64))},
                    {"low_ratio", to_json(r.low_ratio.outward(64))},
                    {"high_ratio", to_json(r.high_ratio.outward(64))}});
    csv += std::to_string(r.d) + "," + r.delta.to_string() + "," + std::to_string(r.dim) + "," +
           decimal(r.low_ratio.mid()) + "," + decimal(r.high_ratio.mid()) + "\n";
  }
  body["rows"] = std::move(rows);
  if (o.grid) {
    const bool in_band = table.low_min >= kRatioBandLow && table.high_max <= kRatioBandHigh;
    body["band"] = {{"lo", rational_string(kRatioBandLow)}, {"hi", rational_string(kRatioBandHigh)}};
    body["low_min"] = decimal(table.low_min);
    body["high_max"] = decimal(table.high_max);
    body["in_band"] = in_band;
    ok = ok && in_band;
  }
  body["match"] = ok;
  return ok ? kOk : kMismatch;
}

int cmd_enum(const Options& o, Json& body) {
  const Degree g = degree_choice(o);
  const auto elems = g.bi ? enumerate_Ebd(g.d1, g.d2) : enumerate_Ed(g.d);
  const std::int64_t expected = g.bi ? 2 * g.d1 * g.d2 + g.d1 + g.d2 + 1 : g.d * g.d + g.d + 1;
  Json list = Json::array();
  for (const auto& a : elems) list.push_back(to_json(a));
  body["degree"] = degree_json(g);
  body["count"] = elems.size();
  body["expected"] = expected;
  body["elements"] = std::move(list);
  const bool ok = static_cast<std::int64_t>(elems.size()) == expected;
  body["match"] = ok;
  return ok ? kOk : kMismatch;
}

Json quad_json(const Quad& q) {
  Json j = to_json(q);
  j["value"] = to_json(q.value());
  j["size"] = q.size();
  j["degree"] = q.degree();
  j["bidegree"] = Json::array({q.bidegree().d1, q.bidegree().d2});
  return j;
}

int cmd_quads(const Options& o, Json& body) {
  if (o.alpha.empty() == o.bidegree.empty()) throw CLI::ValidationError("quads", "give either --alpha or --bidegree");
  Json list = Json::array();
  if (!o.alpha.empty()) {
    const ZGamma a(o.alpha[0], o.alpha[1]);
    if (sign(a) <= 0) throw std::domain_error("--alpha must be positive");
    body["alpha"] = to_json(a);
    for (const auto& q : quads_of_alpha(a, o.count)) list.push_back(quad_json(q));
  } else {
    body["bidegree"] = o.bidegree;
    for (const auto& q : quads_of_bidegree(o.bidegree[0], o.bidegree[1])) list.push_back(quad_json(q));
  }
  body["count"] = list.size();
  body["quads"] = std::move(list);
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Z[gamma] combinatorics, approximation triples and their ring"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--no-timestamp", o.no_timestamp, "omit the timestamp field");
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));

  auto degree_opts = [&o](CLI::App* c) {
    c->add_option("--d", o.d, "total degree");
    c->add_option("--d1", o.d1, "degree in X");
    c->add_option("--d2", o.d2, "degree in X*");
  };
  auto matrix_opts = [&o](CLI::App* c) {
    c->add_option("--bound", o.bound, "entry bound for the seed search")->check(CLI::Range(1, 6));
    c->add_option("--matrix-index", o.matrix_index, "which distinct seed matrix to use");
  };

  CLI::App* chi = app.add_subcommand("chi", "counting functions chi_d / chi_(d1,d2)");
  degree_opts(chi);
  chi->add_flag("--oracle", o.oracle, "add the exhaustive histogram");

  CLI::App* seq = app.add_subcommand("seq", "approximation triple sequences");
  seq->add_option("--bound", o.bound, "entry bound for the seed search")->check(CLI::Range(1, 6));
  seq->add_option("--seed-index", o.seed_index, "index into the ordered seed list");
  seq->add_option("--window", o.window, "window length K")->check(CLI::Range(3, 40));
  seq->add_flag("--verify", o.verify, "check E1-E4 on the window");
  seq->add_option("--load", o.load, "read a system dump instead of generating");
  seq->add_option("--dump", o.dump, "write the system dump to a file");

  CLI::App* hilbert = app.add_subcommand("hilbert", "Hilbert functions of I1 / I2 by exact rank");
  degree_opts(hilbert);
  matrix_opts(hilbert);

  CLI::App* basis = app.add_subcommand("basis", "rank of the monomial family modulo I1 / I2");
  degree_opts(basis);
  matrix_opts(basis);

  CLI::App* dim = app.add_subcommand("dim", "dimension of V_d(delta)");
  dim->add_option("--d", o.d, "degree");
  dim->add_option("--delta", o.delta, "p/q, or m,n/q for (m + n/gamma)/q");
  dim->add_flag("--grid", o.grid, "d = 2..10, delta = gamma d/8, /4, /2, /1");

  CLI::App* en = app.add_subcommand("enum", "enumerate E_d / E_(d1,d2)");
  degree_opts(en);

  CLI::App* quads = app.add_subcommand("quads", "quads of an element or of a bi-degree");
  quads->add_option("--alpha", o.alpha, "m n")->expected(2);
  quads->add_option("--bidegree", o.bidegree, "d1 d2")->expected(2);
  quads->add_option("--count", o.count, "number of quads of Q_alpha");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  if (o.format == "csv" && name != "dim") {
    err << "error: --format csv is only available for dim\n";
    return kUsage;
  }

  Json doc;
  Json config = {{"subcommand", name}, {"format", o.format}};
  for (const CLI::Option* opt : chosen->get_options()) {
    if (opt->get_name() == "--help") continue;
    auto res = opt->results();
    std::string key = opt->get_name();
    while (!key.empty() && key.front() == '-') key.erase(key.begin());
    if (opt->get_expected_min() == 0)
      config[key] = opt->count() > 0;
    else if (!res.empty())
      {
      Json vals = Json::array();
      for (const auto& r : res) vals.push_back(config_value(r));
      config[key] = res.size() == 1 ? vals.front() : vals;
    }
  }
  doc["config"] = std::move(config);
  if (!o.no_timestamp) doc["timestamp"] = utc_now();

  int code = kOk;
  Json body;
  std::string csv;
  try {
    if (name == "chi") code = cmd_chi(o, body);
    else if (name == "seq") code = cmd_seq(o, body);
    else if (name == "hilbert") code = cmd_hilbert(o, body);
    else if (name == "basis") code = cmd_basis(o, body);
    else if (name == "dim") code = cmd_dim(o, body, csv);
    else if (name == "enum") code = cmd_enum(o, body);
    else if (name == "quads") code = cmd_quads(o, body);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const bound_exceeded& e) {
    err << "error: " << e.what() << '\n';
    return kBound;
  } catch (const verification_error& e) {
    err << "verification failed: " << e.what() << '\n';
    return kMismatch;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  for (auto& [k, v] : body.items()) doc[k] = v;
  if (o.format == "csv") {
    out << csv;
  } else if (o.format == "text") {
    // one "key: value" line per top-level field, nested values inline
    for (auto& [k, v] : doc.items()) out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
  } else {
    out << doc.dump(2) << '\n';
  }
  return code;
}

}  // namespace zgring::cli
