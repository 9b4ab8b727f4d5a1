#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lucky13/error.hpp"
#include "lucky13/json_io.hpp"
#include "lucky13/prob_core.hpp"
#include "lucky13/replay.hpp"
#include "lucky13/simulation.hpp"
#include "lucky13/strategy.hpp"
#include "lucky13/tracker.hpp"

namespace py = pybind11;
using namespace lucky13;

namespace {

// Python values are converted through JSON so the module accepts and returns
// the same shapes as the HTTP API.
py::object to_py(const Json& j) {
  switch (j.type()) {
    case Json::value_t::null:
      return py::none();
    case Json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case Json::value_t::number_integer:
      return py::int_(j.get<std::int64_t>());
    case Json::value_t::number_unsigned:
      return py::int_(j.get<std::uint64_t>());
    case Json::value_t::number_float:
      return py::float_(j.get<double>());
    case Json::value_t::string:
      return py::str(j.get<std::string>());
    case Json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(to_py(item));
      return out;
    }
    case Json::value_t::object: {
      py::dict out;
      for (const auto& [key, value] : j.items()) out[py::str(key)] = to_py(value);
      return out;
    }
    default:
      throw InvalidInput("unsupported JSON value");
  }
}

Json from_py(const py::handle& h) {
  if (h.is_none()) return nullptr;
  if (py::isinstance<py::bool_>(h)) return h.cast<bool>();
  if (py::isinstance<py::int_>(h)) return h.cast<std::int64_t>();
  if (py::isinstance<py::float_>(h)) return h.cast<double>();
  if (py::isinstance<py::str>(h)) return h.cast<std::string>();
  if (py::isinstance<py::dict>(h)) {
    Json out = Json::object();
    for (const auto& [key, value] : h.cast<py::dict>()) out[py::str(key).cast<std::string>()] = from_py(value);
    return out;
  }
  if (py::isinstance<py::sequence>(h)) {
    Json out = Json::array();
    for (const auto& item : h.cast<py::sequence>()) out.push_back(from_py(item));
    return out;
  }
  throw InvalidInput("cannot convert Python value to JSON");
}

Json points(const std::vector<TrajectoryPoint>& trajectory) {
  Json out = Json::array();
  for (const auto& p : trajectory) out.push_back(to_json(p));
  return out;
}

UtilityFunction utility_named(const std::string& name) {
  const auto u = parse_utility(name);
  if (!u) throw InvalidInput("unknown utility '" + name + "'");
  return *u;
}

SimConfig sim_config(std::uint64_t trials, std::uint64_t seed, unsigned threads) {
  SimConfig c{trials, seed, threads};
  validate(c);
  return c;
}

class Game {
 public:
  Game(const py::dict& profile, const py::dict& bet)
      : state_(GameState::new_game(profile_from_json(from_py(profile)), bet_from_json(from_py(bet)))) {}

  py::object reveal(const py::dict& reveal) {
    const auto r = reveal_from_json(from_py(reveal));
    state_ = state_.reveal(r.question, r.correct);
    return to_py(to_json(state_.current_point()));
  }

  py::object offer(double amount) {
    auto outcome = state_.evaluate_offer(amount);
    state_ = std::move(outcome.state);
    return to_py(to_json(outcome.evaluation));
  }

  py::object current() const { return to_py(to_json(state_.current_point())); }
  py::object trajectory() const { return to_py(points(state_.trajectory())); }
  py::object what_if(const py::dict& bet) const { return to_py(points(state_.what_if(bet_from_json(from_py(bet))))); }
  py::object pmf() const { return py::cast(state_.conditional_pmf().masses()); }
  int reveal_count() const { return state_.reveal_count(); }
  bool complete() const { return state_.is_complete(); }

 private:
  GameState state_;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Lucky 13 decision engine";

  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<StateConflict>(m, "StateConflict", PyExc_RuntimeError);

  m.def("binomial_pmf", [](int n, double p) { return binomial_pmf(n, p).masses(); }, py::arg("n"), py::arg("p"));
  m.def("poisson_binomial_pmf", [](const std::vector<double>& p) { return poisson_binomial_pmf(p).masses(); },
        py::arg("probabilities"));
  m.def("exact_pmf", [](const py::dict& profile) { return exact_pmf(profile_from_json(from_py(profile))).masses(); },
        py::arg("profile"), "PMF of correct answers for {s,u,g} or {p:[...]}.");
  m.def(
      "darroch_mode",
      [](const std::vector<double>& p) {
        const auto r = darroch_mode(p);
        return py::make_tuple(r.modes, r.mean);
      },
      py::arg("probabilities"), "(candidate modes, mean) from the mean alone.");
  m.def(
      "advise",
      [](const py::dict& profile, const std::string& utility, bool joint) {
        return to_py(to_json(advise(profile_from_json(from_py(profile)), utility_named(utility), joint)));
      },
      py::arg("profile"), py::arg("utility") = "winprob", py::arg("joint") = false);
  m.def(
      "strategy_table",
      [](const std::string& model, const std::string& utility) {
        const auto u = parse_table_utility(utility);
        if (!u) throw InvalidInput("unknown utility '" + utility + "'");
        if (model != "two" && model != "three") throw InvalidInput("model must be 'two' or 'three'");
        const auto rows = model == "two" ? strategy_table_two_category() : strategy_table_three_category();
        return to_py(table_to_json(rows, *u));
      },
      py::arg("model") = "two", py::arg("utility") = "both");
  m.def(
      "replay",
      [](const py::dict& replay, const std::optional<py::dict>& what_if) {
        std::optional<Bet> bet;
        if (what_if) bet = bet_from_json(from_py(*what_if));
        const auto result = run_replay(replay_from_json(from_py(replay)), bet);
        Json offers = Json::array();
        for (const auto& o : result.offers) {
          auto j = to_json(o.evaluation);
          j["after_reveal"] = o.after_reveal;
          offers.push_back(j);
        }
        return to_py({{"trajectory", points(result.trajectory)}, {"offers", offers}});
      },
      py::arg("replay"), py::arg("what_if") = py::none());
  m.def(
      "simulate",
      [](const py::dict& profile, std::uint64_t trials, std::uint64_t seed, unsigned threads) {
        const auto profile_ = profile_from_json(from_py(profile));
        py::gil_scoped_release release;
        return simulate_profile(profile_, sim_config(trials, seed, threads)).counts();
      },
      py::arg("profile"), py::arg("trials") = 10000, py::arg("seed") = 0, py::arg("threads") = 0);
  m.def(
      "population",
      [](std::uint64_t trials, std::uint64_t seed, unsigned threads, bool weighted_expertise) {
        auto model = PopulationModel::standard();
        model.weighted_expertise = weighted_expertise;
        py::gil_scoped_release release;
        return run_population(model, sim_config(trials, seed, threads)).counts();
      },
      py::arg("trials") = 10000, py::arg("seed") = 0, py::arg("threads") = 0, py::arg("weighted_expertise") = false);

  py::class_<Game>(m, "Game")
      .def(py::init<const py::dict&, const py::dict&>(), py::arg("profile"), py::arg("bet"))
      .def("reveal", &Game::reveal, py::arg("reveal"))
      .def("offer", &Game::offer, py::arg("amount"))
      .def("current", &Game::current)
      .def("trajectory", &Game::trajectory)
      .def("what_if", &Game::what_if, py::arg("bet"))
      .def("pmf", &Game::pmf)
      .def_property_readonly("reveal_count", &Game::reveal_count)
      .def_property_readonly("complete", &Game::complete);
}
