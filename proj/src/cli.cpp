#include "lucky13/cli.hpp"

#include <CLI11.hpp>

#include <csignal>
#include <cstdlib>
#include <limits>
#include <ostream>
#include <sstream>

#include "lucky13/error.hpp"
#include "lucky13/json_io.hpp"
#include "lucky13/render.hpp"
#include "lucky13/replay.hpp"
#include "lucky13/service.hpp"
#include "lucky13/simulation.hpp"
#include "lucky13/strategy.hpp"

namespace lucky13 {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Converts validation failures while interpreting flags into usage errors.
template <class Fn>
auto from_flags(Fn&& fn) {
  try {
    return fn();
  } catch (const InvalidInput& e) {
    throw UsageError(e.what());
  }
}

std::optional<std::uint64_t> env_number(const char* name) {
  const char* value = std::getenv(name);
  if (!value || !*value) return std::nullopt;
  try {
    std::size_t used = 0;
    const auto n = std::stoull(value, &used);
    if (used != std::string(value).size()) throw std::invalid_argument(name);
    return n;
  } catch (const std::exception&) {
    throw UsageError(std::string(name) + " is not a non-negative integer");
  }
}

struct ProfileFlags {
  std::optional<int> sure, unsure, guess;
  std::vector<std::string> probs;

  void add(CLI::App& cmd) {
    auto* s = cmd.add_option("--sure", sure, "questions answered with certainty");
    auto* u = cmd.add_option("--unsure", unsure, "questions answered with 75% confidence");
    auto* g = cmd.add_option("--guess", guess, "questions answered by guessing");
    auto* p = cmd.add_option("--probs", probs, "13 success probabilities; 0.5x13 repeats")->delimiter(',');
    for (auto* opt : {s, u, g}) opt->excludes(p);
  }

  QuestionProfile profile() const {
    return from_flags([&] {
      if (!probs.empty()) return QuestionProfile::from_probabilities(parse_probability_list(probs));
      if (!sure && !unsure && !guess) throw UsageError("give --sure/--unsure/--guess or --probs");
      const int s = sure.value_or(0), u = unsure.value_or(0), g = guess.value_or(0);
      if (s + u + g != kQuestionCount) {
        throw InvalidInput("counts sum to " + std::to_string(s + u + g) + ", expected 13");
      }
      return QuestionProfile::from_counts(s, u, g);
    });
  }
};

struct SimFlags {
  std::uint64_t trials = 10000;
  std::optional<std::uint64_t> seed;
  unsigned threads = 0;
  std::string format = "text";

  void add(CLI::App& cmd) {
    cmd.add_option("--trials", trials, "number of simulated games")
        ->check(CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max(), "at least 1"));
    cmd.add_option("--seed", seed, "RNG seed (default: LUCKY13_SEED or 0)");
    cmd.add_option("--threads", threads, "worker threads, 0 = hardware");
    cmd.add_option("--format", format, "csv or text")->check(CLI::IsMember({"csv", "text"}));
  }

  SimConfig config() const {
    SimConfig c;
    c.trials = trials;
    c.seed = seed ? *seed : env_number("LUCKY13_SEED").value_or(0);
    c.threads = threads;
    return c;
  }

  void write(std::ostream& out, const Histogram14& h) const {
    if (format == "csv") {
      write_histogram_csv(out, h);
    } else {
      write_histogram_text(out, h);
    }
  }
};

void print_advice(std::ostream& out, const QuestionProfile& profile, const std::string& utility, bool joint,
                  const Advice& advice) {
  const auto& rec = advice.recommendation;
  if (profile.is_categorical()) {
    const auto& c = profile.counts();
    out << "profile: s=" << c.sure << " u=" << c.unsure << " g=" << c.guess << '\n';
  } else {
    out << "profile: probabilities\n";
  }
  out << "utility: " << (joint ? "joint" : utility) << '\n';
  out << "range: " << to_string(rec.bet.range) << '\n';
  out << "number: " << (rec.bet.number ? std::to_string(*rec.bet.number) : "NA") << '\n';
  out << "win_prob: " << format_probability(rec.win_probability) << '\n';
  out << "number_prob: " << format_probability(rec.number_hit_probability) << '\n';
  out << "expected_winnings: " << format_money(rec.expected_winnings) << '\n';
  out << "ties: " << format_ties(rec.ties) << '\n';
  if (advice.modes) {
    char mean[32];
    std::snprintf(mean, sizeof mean, "%.4f", advice.mean);
    out << "mean: " << mean << '\n';
    out << "modes: ";
    for (std::size_t i = 0; i < advice.modes->modes.size(); ++i) {
      out << (i ? "," : "") << advice.modes->modes[i];
    }
    out << '\n';
  }
}

void print_offer(std::ostream& out, const EvaluatedOffer& o) {
  const auto& e = o.evaluation;
  out << "# offer after_reveal=" << o.after_reveal << " amount=" << format_money(e.offer)
      << " continuation=" << format_money(e.continuation_value) << " margin=" << format_money(e.margin)
      << " advice=" << to_string(e.advice) << " range_prob=" << format_probability(e.range_probability)
      << " number_prob=" << format_probability(e.number_probability) << '\n';
}

ApiServer* active_server = nullptr;

extern "C" void stop_active_server(int) {
  if (active_server) active_server->stop();
}

}  // namespace

std::vector<double> parse_probability_list(const std::vector<std::string>& tokens) {
  std::vector<double> probs;
  for (const auto& raw : tokens) {
    std::string token = raw;
    bool repeated = false;
    for (const std::string sep : {"\xC3\x97", "*", "x", "X"}) {
      if (auto pos = token.find(sep); pos != std::string::npos) {
        token.replace(pos, sep.size(), " ");
        repeated = true;
        break;
      }
    }
    std::istringstream in(token);
    double p = 0.0;
    int repeat = 1;
    if (!(in >> p)) throw InvalidInput("cannot read probability '" + raw + "'");
    if (repeated && !(in >> repeat)) throw InvalidInput("cannot read repeat count in '" + raw + "'");
    if (!(in >> std::ws).eof() || repeat < 1) throw InvalidInput("cannot read probability '" + raw + "'");
    probs.insert(probs.end(), repeat, p);
  }
  return probs;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lucky 13 decision engine", "lucky13"};
  app.require_subcommand(1);

  auto* tables = app.add_subcommand("tables", "optimal bet for every profile");
  std::string model = "two", table_utility = "both", table_format = "text";
  tables->add_option("--model", model, "two or three")->check(CLI::IsMember({"two", "three"}));
  tables->add_option("--utility", table_utility, "winprob, winnings or both")
      ->check(CLI::IsMember({"winprob", "winnings", "both"}));
  tables->add_option("--format", table_format, "csv or text")->check(CLI::IsMember({"csv", "text"}));

  auto* advise_cmd = app.add_subcommand("advise", "recommend a Lucky Range and Lucky Number");
  ProfileFlags advise_profile;
  advise_profile.add(*advise_cmd);
  std::string advise_utility = "winprob", advise_format = "text";
  bool joint = false;
  advise_cmd->add_option("--utility", advise_utility, "winprob or winnings")
      ->check(CLI::IsMember({"winprob", "winnings"}));
  advise_cmd->add_flag("--joint", joint, "maximize expected winnings over all range/number pairs");
  advise_cmd->add_option("--format", advise_format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* replay_cmd = app.add_subcommand("replay", "trajectory of a recorded game");
  std::string replay_path, what_if;
  replay_cmd->add_option("file", replay_path, "replay JSON")->required();
  replay_cmd->add_option("--what-if", what_if, "alternative bet, e.g. 10-12/10");

  auto* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo histogram for one profile");
  ProfileFlags sim_profile;
  sim_profile.add(*simulate_cmd);
  SimFlags sim_flags;
  sim_flags.add(*simulate_cmd);

  auto* population_cmd = app.add_subcommand("population", "histogram over simulated contestants");
  SimFlags pop_flags;
  pop_flags.add(*population_cmd);
  std::string model_file;
  bool weighted = false;
  population_cmd->add_option("--model", model_file, "question category JSON");
  population_cmd->add_flag("--weighted-expertise", weighted, "draw expertise by category weight");

  auto* serve_cmd = app.add_subcommand("serve", "run the HTTP API");
  std::optional<int> port;
  std::string host = "127.0.0.1", snapshot, cors = "*";
  serve_cmd->add_option("--port", port, "port (default: LUCKY13_PORT or 8013)")->check(CLI::Range(0, 65535));
  serve_cmd->add_option("--host", host, "bind address");
  serve_cmd->add_option("--snapshot", snapshot, "session snapshot file");
  serve_cmd->add_option("--cors-origin", cors, "allowed browser origin");

  std::vector<const char*> argv{"lucky13"};
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (tables->parsed()) {
      const auto utility = *parse_table_utility(table_utility);
      const auto rows = model == "two" ? strategy_table_two_category() : strategy_table_three_category();
      if (table_format == "csv") {
        write_table_csv(out, rows, utility);
      } else {
        write_table_text(out, rows, utility);
      }
    } else if (advise_cmd->parsed()) {
      const auto profile = advise_profile.profile();
      const auto advice = advise(profile, *parse_utility(advise_utility), joint);
      if (advise_format == "json") {
        Json j = to_json(advice);
        j["utility"] = advise_utility;
        j["joint"] = joint;
        out << j.dump(2) << '\n';
      } else {
        print_advice(out, profile, advise_utility, joint, advice);
      }
    } else if (replay_cmd->parsed()) {
      std::optional<Bet> override_bet;
      if (!what_if.empty()) override_bet = from_flags([&] { return parse_bet(what_if); });
      const auto result = run_replay(load_replay(replay_path), override_bet);
      write_trajectory_csv(out, result.trajectory);
      for (const auto& o : result.offers) print_offer(out, o);
    } else if (simulate_cmd->parsed()) {
      const auto profile = sim_profile.profile();
      const auto config = sim_flags.config();
      sim_flags.write(out, simulate_profile(profile, config));
    } else if (population_cmd->parsed()) {
      const auto config = pop_flags.config();
      auto pm = model_file.empty() ? PopulationModel::standard() : load_population_model(model_file);
      if (weighted) pm.weighted_expertise = true;
      pop_flags.write(out, run_population(pm, config));
    } else if (serve_cmd->parsed()) {
      ServiceConfig config;
      config.host = host;
      config.port = port ? *port : static_cast<int>(env_number("LUCKY13_PORT").value_or(8013));
      if (config.port > 65535) throw UsageError("LUCKY13_PORT out of range");
      if (!snapshot.empty()) config.snapshot = snapshot;
      config.cors_origin = cors;
      ApiServer server(config);
      const int bound = server.bind();
      err << "listening on " << host << ':' << bound << std::endl;
      active_server = &server;
      std::signal(SIGINT, stop_active_server);
      std::signal(SIGTERM, stop_active_server);
      server.listen();
      active_server = nullptr;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace lucky13
