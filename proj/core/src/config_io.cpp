#include "vfc/config_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace vfc {
namespace {

using json = nlohmann::json;

constexpr double kGiga = 1e9;

// Reads one JSON object, remembering which keys were consumed so that the
// leftovers can be reported.
class Reader {
 public:
  Reader(const json& j, std::string path, bool strict, std::vector<std::string>* warnings)
      : j_(j), path_(std::move(path)), strict_(strict), warnings_(warnings) {
    if (!j_.is_object()) throw ConfigError(path_ + ": expected an object");
  }

  bool has(const std::string& key) const { return j_.contains(key); }
  std::string key_path(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

  const json& raw(const std::string& key) {
    used_.insert(key);
    return j_.at(key);
  }

  template <typename T>
  T get(const std::string& key, T fallback) {
    if (!has(key)) return fallback;
    return as<T>(raw(key), key_path(key));
  }

  template <typename T>
  T require(const std::string& key) {
    if (!has(key)) throw ConfigError(key_path(key) + ": required key missing");
    return as<T>(raw(key), key_path(key));
  }

  Reader child(const std::string& key) { return Reader(raw(key), key_path(key), strict_, warnings_); }

  void finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it) {
      if (used_.count(it.key())) continue;
      const std::string msg = key_path(it.key()) + ": unknown key";
      if (strict_) throw ConfigError(msg);
      if (warnings_) warnings_->push_back(msg);
    }
  }

  bool strict() const { return strict_; }
  std::vector<std::string>* warnings() const { return warnings_; }

  template <typename T>
  static T as(const json& v, const std::string& where) {
    try {
      if constexpr (std::is_same_v<T, double>) {
        if (!v.is_number()) throw ConfigError(where + ": expected a number");
      } else if constexpr (std::is_integral_v<T> && !std::is_same_v<T, bool>) {
        if (!v.is_number_integer()) throw ConfigError(where + ": expected an integer");
      } else if constexpr (std::is_same_v<T, bool>) {
        if (!v.is_boolean()) throw ConfigError(where + ": expected true or false");
      } else if constexpr (std::is_same_v<T, std::string>) {
        if (!v.is_string()) throw ConfigError(where + ": expected a string");
      }
      return v.get<T>();
    } catch (const json::exception& e) {
      throw ConfigError(where + ": " + e.what());
    }
  }

 private:
  const json& j_;
  std::string path_;
  bool strict_;
  std::vector<std::string>* warnings_;
  std::set<std::string> used_;
};

std::vector<double> number_list(const json& v, const std::string& where) {
  if (!v.is_array()) throw ConfigError(where + ": expected a list of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(Reader::as<double>(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

std::pair<double, double> number_pair(const json& v, const std::string& where) {
  const auto xs = number_list(v, where);
  if (xs.size() != 2) throw ConfigError(where + ": expected [lo, hi]");
  return {xs[0], xs[1]};
}

std::vector<ArmId> arm_list(const json& v, const std::string& where) {
  if (!v.is_array()) throw ConfigError(where + ": expected a list of arm ids");
  std::vector<ArmId> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(Reader::as<int>(v[i], where + "[" + std::to_string(i) + "]"));
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw ConfigError(where + ": duplicate arm id");
  return out;
}

// Either one row shared by every agent or one row per agent.
std::vector<std::vector<double>> per_agent_rows(const json& v, int num_agents, const std::string& where) {
  if (!v.is_array() || v.empty()) throw ConfigError(where + ": expected a non-empty list");
  if (v.front().is_array()) {
    if (static_cast<int>(v.size()) != num_agents)
      throw ConfigError(where + ": expected one row per agent");
    std::vector<std::vector<double>> out;
    for (std::size_t i = 0; i < v.size(); ++i)
      out.push_back(number_list(v[i], where + "[" + std::to_string(i) + "]"));
    return out;
  }
  return std::vector<std::vector<double>>(static_cast<std::size_t>(num_agents), number_list(v, where));
}

PatchMode parse_patch(const std::string& s, const std::string& where) {
  if (s == "beta") return PatchMode::kBeta;
  if (s == "full_reset") return PatchMode::kFullReset;
  if (s == "partial_reset") return PatchMode::kPartialReset;
  throw ConfigError(where + ": expected beta, full_reset or partial_reset");
}

const char* patch_name(PatchMode m) {
  switch (m) {
    case PatchMode::kBeta: return "beta";
    case PatchMode::kFullReset: return "full_reset";
    case PatchMode::kPartialReset: return "partial_reset";
  }
  return "beta";
}

LearnerParams parse_learner(Reader r, LearnerParams p) {
  p.schedule_a = r.get("a", p.schedule_a);
  p.gamma_ratio = r.get("gamma_ratio", p.gamma_ratio);
  p.demand_weighting = r.get("demand_weighting", p.demand_weighting);
  if (r.has("patch")) p.patch_mode = parse_patch(r.require<std::string>("patch"), r.key_path("patch"));
  if (r.has("feedback")) {
    const auto f = r.require<std::string>("feedback");
    if (f == "bandit")
      p.feedback = FeedbackMode::kBandit;
    else if (f == "full")
      p.feedback = FeedbackMode::kFull;
    else
      throw ConfigError(r.key_path("feedback") + ": expected bandit or full");
  }
  p.explicit_mixing = r.get("explicit_mixing", p.explicit_mixing);
  r.finish();
  if (!(p.schedule_a > 0.0)) throw ConfigError(r.key_path("a") + ": must be > 0");
  if (!(p.gamma_ratio > 0.0)) throw ConfigError(r.key_path("gamma_ratio") + ": must be > 0");
  if (p.gamma_ratio > 0.5) {
    std::ostringstream os;
    os << r.key_path("gamma_ratio") << ": " << p.gamma_ratio << " violates the condition gamma/eta <= 0.5";
    throw ConfigError(os.str());
  }
  return p;
}

TaskSizeLaw parse_task_size(Reader r, TaskSizeLaw t) {
  if (r.has("law")) {
    const auto law = r.require<std::string>("law");
    if (law == "fixed")
      t.kind = TaskSizeLaw::Kind::kFixed;
    else if (law == "uniform")
      t.kind = TaskSizeLaw::Kind::kUniform;
    else if (law == "truncated_normal")
      t.kind = TaskSizeLaw::Kind::kTruncatedNormal;
    else
      throw ConfigError(r.key_path("law") + ": expected fixed, uniform or truncated_normal");
  }
  t.lo = r.get("lo", t.lo);
  t.hi = r.get("hi", t.hi);
  t.value = r.get("value", t.value);
  t.mean = r.get("mean", t.mean);
  t.stddev = r.get("stddev", t.stddev);
  r.finish();
  if (!(t.lo > 0.0 && t.lo < t.hi)) throw ConfigError(r.key_path("lo") + ": need 0 < lo < hi");
  if (t.kind == TaskSizeLaw::Kind::kFixed && !(t.value >= t.lo && t.value <= t.hi))
    throw ConfigError(r.key_path("value") + ": must lie within [lo, hi]");
  if (t.kind == TaskSizeLaw::Kind::kTruncatedNormal && !(t.stddev > 0.0))
    throw ConfigError(r.key_path("stddev") + ": must be > 0");
  return t;
}

AgentConfig parse_agent(Reader r, AgentConfig a) {
  if (r.has("task_size")) a.task_size = parse_task_size(r.child("task_size"), a.task_size);
  if (r.has("activation")) {
    Reader act = r.child("activation");
    a.activation_prob = act.get("rho", a.activation_prob);
    act.finish();
    if (!(a.activation_prob > 0.0 && a.activation_prob <= 1.0))
      throw ConfigError(act.key_path("rho") + ": must lie in (0, 1]");
  }
  if (r.has("learner")) a.learner = parse_learner(r.child("learner"), a.learner);
  r.finish();
  return a;
}

ChannelParams parse_channel(Reader r) {
  ChannelParams c;
  c.bandwidth_hz = r.get("bandwidth_hz", c.bandwidth_hz);
  c.tx_power_dbm = r.get("tx_power_dbm", c.tx_power_dbm);
  c.noise_psd_dbm_hz = r.get("noise_psd_dbm_hz", c.noise_psd_dbm_hz);
  c.comm_range_m = r.get("comm_range_m", c.comm_range_m);
  c.pathloss_a = r.get("pathloss_a", c.pathloss_a);
  c.pathloss_b = r.get("pathloss_b", c.pathloss_b);
  c.num_subchannels = r.get("num_subchannels", c.num_subchannels);
  c.interference_w = r.get("interference_w", c.interference_w);
  c.fading_floor = r.get("fading_floor", c.fading_floor);
  r.finish();
  if (c.interference_w != 0.0)
    throw ConfigError(r.key_path("interference_w") + ": must be 0 (orthogonal subchannels)");
  return c;
}

AdversaryLaw parse_adversary(Reader r) {
  AdversaryLaw law;
  law.num_phases = r.get("num_phases", law.num_phases);
  law.align_to_epochs = r.get("align_to_epochs", law.align_to_epochs);
  if (r.has("mean_range")) {
    const auto [lo, hi] = number_pair(r.raw("mean_range"), r.key_path("mean_range"));
    law.mean_lo = lo;
    law.mean_hi = hi;
  }
  law.noise_halfwidth = r.get("noise_halfwidth", law.noise_halfwidth);
  if (r.has("phases")) {
    const json& ph = r.raw("phases");
    if (!ph.is_array() || ph.empty()) throw ConfigError(r.key_path("phases") + ": expected a non-empty list");
    Round start = 1;
    for (std::size_t i = 0; i < ph.size(); ++i) {
      Reader p(ph[i], r.key_path("phases") + "[" + std::to_string(i) + "]", r.strict(), r.warnings());
      AdversaryPhase phase;
      const auto rounds = p.require<std::int64_t>("rounds");
      if (rounds < 1) throw ConfigError(p.key_path("rounds") + ": must be >= 1");
      phase.start = start;
      phase.end = start + rounds - 1;
      phase.means = number_list(p.raw("means"), p.key_path("means"));
      p.finish();
      start = phase.end + 1;
      law.explicit_phases.push_back(std::move(phase));
    }
  }
  r.finish();
  if (!(law.mean_lo > 0.0 && law.mean_lo <= law.mean_hi))
    throw ConfigError(r.key_path("mean_range") + ": need 0 < lo <= hi");
  if (!(law.noise_halfwidth >= 0.0 && law.noise_halfwidth < 1.0))
    throw ConfigError(r.key_path("noise_halfwidth") + ": must lie in [0, 1)");
  if (law.num_phases < 1) throw ConfigError(r.key_path("num_phases") + ": must be >= 1");
  return law;
}

EnvConfig parse_env(Reader r, int num_agents) {
  EnvConfig env;
  const auto model = r.get<std::string>("model", "physical");
  if (model == "physical")
    env.model = CostModel::kPhysical;
  else if (model == "tabular")
    env.model = CostModel::kTabular;
  else
    throw ConfigError(r.key_path("model") + ": expected physical or tabular");

  std::pair<double, double> default_fraction{0.2, 0.5};
  if (r.has("alloc_fraction")) default_fraction = number_pair(r.raw("alloc_fraction"), r.key_path("alloc_fraction"));
  if (r.has("vfn_cpu_ghz")) {
    const auto caps = number_list(r.raw("vfn_cpu_ghz"), r.key_path("vfn_cpu_ghz"));
    for (std::size_t k = 0; k < caps.size(); ++k)
      env.vfns.push_back({static_cast<ArmId>(k), caps[k] * kGiga, default_fraction});
  }
  if (r.has("vfns")) {
    if (!env.vfns.empty()) throw ConfigError(r.key_path("vfns") + ": give either vfns or vfn_cpu_ghz");
    const json& v = r.raw("vfns");
    if (!v.is_array()) throw ConfigError(r.key_path("vfns") + ": expected a list");
    for (std::size_t k = 0; k < v.size(); ++k) {
      Reader e(v[k], r.key_path("vfns") + "[" + std::to_string(k) + "]", r.strict(), r.warnings());
      VfnSpec s;
      s.id = static_cast<ArmId>(k);
      if (e.has("cpu_hz"))
        s.max_cpu_freq = e.require<double>("cpu_hz");
      else
        s.max_cpu_freq = e.require<double>("cpu_ghz") * kGiga;
      s.alloc_fraction_range = default_fraction;
      if (e.has("alloc_fraction")) s.alloc_fraction_range = number_pair(e.raw("alloc_fraction"), e.key_path("alloc_fraction"));
      e.finish();
      env.vfns.push_back(s);
    }
  }
  if (r.has("channel")) env.channel = parse_channel(r.child("channel"));
  if (r.has("computation_intensity")) {
    const json& w = r.raw("computation_intensity");
    if (w.is_array()) {
      env.computation_intensity = number_list(w, r.key_path("computation_intensity"));
    } else {
      env.computation_intensity.assign(static_cast<std::size_t>(num_agents),
                                       Reader::as<double>(w, r.key_path("computation_intensity")));
    }
  } else {
    env.computation_intensity.assign(static_cast<std::size_t>(num_agents), 1000.0);
  }
  if (r.has("tabular")) {
    Reader t = r.child("tabular");
    env.tabular.comm = per_agent_rows(t.raw("comm"), num_agents, t.key_path("comm"));
    env.tabular.comp = per_agent_rows(t.raw("comp"), num_agents, t.key_path("comp"));
    t.finish();
  }
  if (r.has("adversary")) env.adversary = parse_adversary(r.child("adversary"));
  if (r.has("cost_cap")) env.cost_cap = r.require<double>("cost_cap");
  env.cap_fading_level = r.get("cap_fading_level", env.cap_fading_level);
  r.finish();
  if (env.model == CostModel::kPhysical && env.vfns.empty())
    throw ConfigError(r.key_path("vfns") + ": a physical model needs vfns or vfn_cpu_ghz");
  if (env.model == CostModel::kTabular && env.tabular.comm.empty())
    throw ConfigError(r.key_path("tabular") + ": a tabular model needs comm and comp tables");
  return env;
}

GameConfig parse_game(Reader r) {
  GameConfig g;
  g.num_agents = r.require<int>("num_agents");
  if (g.num_agents < 1) throw ConfigError(r.key_path("num_agents") + ": must be >= 1");
  g.env = parse_env(r.child("env"), g.num_agents);
  const int num_arms = g.env.num_arms();

  std::optional<Round> horizon;
  if (r.has("horizon")) horizon = r.require<std::int64_t>("horizon");
  if (r.has("epochs")) {
    const json& ep = r.raw("epochs");
    if (!ep.is_array() || ep.empty()) throw ConfigError(r.key_path("epochs") + ": expected a non-empty list");
    Round start = 1;
    for (std::size_t e = 0; e < ep.size(); ++e) {
      Reader er(ep[e], r.key_path("epochs") + "[" + std::to_string(e) + "]", r.strict(), r.warnings());
      CandidateEpoch epoch;
      epoch.start = start;
      const auto rounds = er.require<std::int64_t>("rounds");
      if (rounds < 1) throw ConfigError(er.key_path("rounds") + ": must be >= 1");
      const json& arms = er.raw("arms");
      if (!arms.is_array() || arms.empty()) throw ConfigError(er.key_path("arms") + ": expected a non-empty list");
      if (arms.front().is_array()) {
        if (static_cast<int>(arms.size()) != g.num_agents)
          throw ConfigError(er.key_path("arms") + ": expected one arm list per agent");
        for (std::size_t n = 0; n < arms.size(); ++n)
          epoch.arms.push_back(arm_list(arms[n], er.key_path("arms") + "[" + std::to_string(n) + "]"));
      } else {
        epoch.arms.assign(static_cast<std::size_t>(g.num_agents), arm_list(arms, er.key_path("arms")));
      }
      er.finish();
      g.schedule.epochs.push_back(std::move(epoch));
      start += rounds;
    }
    const Round total = start - 1;
    if (horizon && *horizon != total)
      throw ConfigError(r.key_path("horizon") + ": must equal the sum of epoch rounds (" + std::to_string(total) + ")");
    g.horizon = total;
  } else {
    if (!horizon) throw ConfigError(r.key_path("horizon") + ": required when epochs are absent");
    g.horizon = *horizon;
    CandidateEpoch epoch;
    std::vector<ArmId> all(static_cast<std::size_t>(num_arms));
    for (int k = 0; k < num_arms; ++k) all[static_cast<std::size_t>(k)] = k;
    epoch.arms.assign(static_cast<std::size_t>(g.num_agents), all);
    g.schedule.epochs.push_back(std::move(epoch));
  }
  if (g.horizon < 1) throw ConfigError(r.key_path("horizon") + ": must be >= 1");

  AgentConfig defaults;
  if (r.has("agent")) defaults = parse_agent(r.child("agent"), defaults);
  g.agents.assign(static_cast<std::size_t>(g.num_agents), defaults);
  if (r.has("agents")) {
    const json& list = r.raw("agents");
    if (!list.is_array() || static_cast<int>(list.size()) != g.num_agents)
      throw ConfigError(r.key_path("agents") + ": expected one entry per agent");
    for (std::size_t n = 0; n < list.size(); ++n)
      g.agents[n] = parse_agent(Reader(list[n], r.key_path("agents") + "[" + std::to_string(n) + "]", r.strict(),
                                       r.warnings()),
                                defaults);
  }
  g.seed = r.get<std::uint64_t>("seed", 0);
  r.finish();

  try {
    g.validate();
  } catch (const ConfigError& e) {
    throw ConfigError(r.key_path("") + e.what());
  }
  return g;
}

json learner_to_json(const LearnerParams& p) {
  return {{"a", p.schedule_a},
          {"gamma_ratio", p.gamma_ratio},
          {"demand_weighting", p.demand_weighting},
          {"patch", patch_name(p.patch_mode)},
          {"feedback", p.feedback == FeedbackMode::kFull ? "full" : "bandit"},
          {"explicit_mixing", p.explicit_mixing}};
}

json task_to_json(const TaskSizeLaw& t) {
  const char* law = t.kind == TaskSizeLaw::Kind::kFixed     ? "fixed"
                    : t.kind == TaskSizeLaw::Kind::kUniform ? "uniform"
                                                            : "truncated_normal";
  return {{"law", law}, {"lo", t.lo}, {"hi", t.hi}, {"value", t.value}, {"mean", t.mean}, {"stddev", t.stddev}};
}

const std::vector<std::string> kMetricNames = {
    "cumulative_cost", "cumulative_cost_raw", "social_cost", "pota", "regret", "regret_rate", "regret_raw",
};

}  // namespace

void ExperimentSpec::set_replications(std::size_t count) {
  seeds.clear();
  for (std::size_t i = 0; i < count; ++i) seeds.push_back(derive_seed(master_seed, i));
}

const std::vector<std::string>& known_metrics() { return kMetricNames; }

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

ExperimentSpec parse_config(const std::string& text, bool strict, const std::string& source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(source + ": parse error: " + e.what());
  }
  ExperimentSpec spec;
  spec.canonical_json = doc.dump();
  Reader top(doc, "", strict, &spec.warnings);

  spec.name = top.require<std::string>("name");
  if (spec.name.empty() ||
      spec.name.find_first_not_of("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789-_.") !=
          std::string::npos)
    throw ConfigError("name: must be non-empty and use only [A-Za-z0-9._-]");
  spec.description = top.get<std::string>("description", "");

  const json& game_doc = top.raw("game");
  spec.base = parse_game(Reader(game_doc, "game", strict, &spec.warnings));

  if (top.has("variants")) {
    const json& vs = top.raw("variants");
    if (!vs.is_array() || vs.empty()) throw ConfigError("variants: expected a non-empty list");
    std::set<std::string> names;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      const std::string where = "variants[" + std::to_string(i) + "]";
      Reader vr(vs[i], where, strict, &spec.warnings);
      Variant v;
      v.name = vr.require<std::string>("name");
      if (v.name.empty() || v.name.find_first_of("/\\ ") != std::string::npos)
        throw ConfigError(where + ".name: must be non-empty and filesystem-safe");
      if (!names.insert(v.name).second) throw ConfigError(where + ".name: duplicate variant name");
      json patched = game_doc;
      if (vr.has("game")) patched.merge_patch(vr.raw("game"));
      if (vr.has("learner")) {
        const json& lp = vr.raw("learner");
        if (!lp.is_object()) throw ConfigError(where + ".learner: expected an object");
        patched["agent"]["learner"].merge_patch(lp);
        if (patched.contains("agents"))
          for (auto& a : patched["agents"]) a["learner"].merge_patch(lp);
      }
      vr.finish();
      v.game = parse_game(Reader(patched, where + ".game", strict, &spec.warnings));
      spec.variants.push_back(std::move(v));
    }
  } else {
    spec.variants.push_back({"default", spec.base});
  }

  std::size_t count = 1;
  if (top.has("replications")) {
    Reader rr = top.child("replications");
    spec.master_seed = rr.get<std::uint64_t>("master_seed", 0);
    count = rr.get<std::size_t>("count", 1);
    if (rr.has("seeds")) {
      const json& s = rr.raw("seeds");
      if (!s.is_array() || s.empty()) throw ConfigError("replications.seeds: expected a non-empty list");
      for (const auto& x : s) spec.seeds.push_back(Reader::as<std::uint64_t>(x, "replications.seeds"));
    }
    rr.finish();
    if (count < 1) throw ConfigError("replications.count: must be >= 1");
  }
  if (spec.seeds.empty()) spec.set_replications(count);

  if (top.has("metrics")) {
    const json& m = top.raw("metrics");
    if (!m.is_array()) throw ConfigError("metrics: expected a list of metric names");
    for (const auto& x : m) {
      const auto name = Reader::as<std::string>(x, "metrics");
      if (std::find(kMetricNames.begin(), kMetricNames.end(), name) == kMetricNames.end())
        throw ConfigError("metrics: unknown metric '" + name + "'");
      spec.metrics.push_back(name);
    }
  } else {
    spec.metrics = kMetricNames;
  }

  spec.trace_limit = 2;
  if (top.has("output")) {
    Reader o = top.child("output");
    spec.output_dir = o.get<std::string>("dir", "");
    if (o.has("traces")) {
      const json& t = o.raw("traces");
      if (t.is_string() && t.get<std::string>() == "all")
        spec.trace_limit.reset();
      else
        spec.trace_limit = Reader::as<std::size_t>(t, "output.traces");
    }
    spec.xi_window = o.get("xi_window", spec.xi_window);
    o.finish();
    if (!(spec.xi_window > 0.0 && spec.xi_window <= 1.0))
      throw ConfigError("output.xi_window: must lie in (0, 1]");
  }
  top.finish();
  return spec;
}

ExperimentSpec load_config(const std::filesystem::path& path, bool strict) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path.string() + ": cannot open config file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), strict, path.string());
}

std::string game_to_json(const GameConfig& g) {
  json env;
  env["model"] = g.env.model == CostModel::kPhysical ? "physical" : "tabular";
  if (g.env.model == CostModel::kPhysical) {
    json vfns = json::array();
    for (const auto& v : g.env.vfns)
      vfns.push_back({{"cpu_hz", v.max_cpu_freq},
                      {"alloc_fraction", {v.alloc_fraction_range.first, v.alloc_fraction_range.second}}});
    env["vfns"] = vfns;
    const auto& c = g.env.channel;
    env["channel"] = {{"bandwidth_hz", c.bandwidth_hz},       {"tx_power_dbm", c.tx_power_dbm},
                      {"noise_psd_dbm_hz", c.noise_psd_dbm_hz}, {"comm_range_m", c.comm_range_m},
                      {"pathloss_a", c.pathloss_a},           {"pathloss_b", c.pathloss_b},
                      {"num_subchannels", c.num_subchannels}, {"interference_w", c.interference_w},
                      {"fading_floor", c.fading_floor}};
  } else {
    env["tabular"] = {{"comm", g.env.tabular.comm}, {"comp", g.env.tabular.comp}};
  }
  env["computation_intensity"] = g.env.computation_intensity;
  const auto& a = g.env.adversary;
  json adv = {{"num_phases", a.num_phases},
              {"align_to_epochs", a.align_to_epochs},
              {"mean_range", {a.mean_lo, a.mean_hi}},
              {"noise_halfwidth", a.noise_halfwidth}};
  if (!a.explicit_phases.empty()) {
    json ph = json::array();
    for (const auto& p : a.explicit_phases) ph.push_back({{"rounds", p.end - p.start + 1}, {"means", p.means}});
    adv["phases"] = ph;
  }
  env["adversary"] = adv;
  if (g.env.cost_cap) env["cost_cap"] = *g.env.cost_cap;
  env["cap_fading_level"] = g.env.cap_fading_level;

  json epochs = json::array();
  for (std::size_t e = 0; e < g.schedule.epochs.size(); ++e) {
    const auto& ep = g.schedule.epochs[e];
    epochs.push_back({{"rounds", g.schedule.epoch_end(static_cast<int>(e), g.horizon) - ep.start + 1},
                      {"arms", ep.arms}});
  }
  json agents = json::array();
  for (const auto& ag : g.agents)
    agents.push_back({{"task_size", task_to_json(ag.task_size)},
                      {"activation", {{"rho", ag.activation_prob}}},
                      {"learner", learner_to_json(ag.learner)}});

  json doc = {{"num_agents", g.num_agents}, {"horizon", g.horizon}, {"env", env},
              {"epochs", epochs},           {"agents", agents},     {"seed", g.seed}};
  return doc.dump();
}

GameConfig game_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("game config: parse error: ") + e.what());
  }
  return parse_game(Reader(doc, "game", true, nullptr));
}

std::string config_schema() {
  return R"(vfcsim configuration reference (JSON; arm ids are 0-based)

name                      string, [A-Za-z0-9._-]+, required
description               string
game                      object, required
  num_agents              integer >= 1, required
  horizon                 integer >= 1; required without epochs, else must equal the epoch total
  epochs[]                candidate-set epochs, in order
    rounds                integer >= 1
    arms                  list of arm ids (shared) or one list per agent
  env
    model                 "physical" (default) | "tabular"
    vfn_cpu_ghz           list of VFN capacities F_k in GHz (shorthand for vfns)
    vfns[]                {cpu_ghz | cpu_hz, alloc_fraction: [lo, hi]}
    alloc_fraction        default [0.2, 0.5]; base CPU share drawn per (arm, phase)
    computation_intensity cycles/bit, number or one per agent (default 1000)
    channel               bandwidth_hz 10e6, tx_power_dbm 24, noise_psd_dbm_hz -174,
                          comm_range_m 400, pathloss_a 128.1, pathloss_b 37.6,
                          num_subchannels 10, interference_w 0, fading_floor 1e-9
    tabular               {comm, comp}: normalized cost terms, one row (shared) or one per agent
    adversary
      phases[]            explicit schedule: {rounds, means[K]} partitioning the horizon
      num_phases          generated phases when not aligned (default 1)
      align_to_epochs     generated phase boundaries follow the epochs (default true)
      mean_range          [lo, hi] range of per-arm compute scaling means (default [1, 2])
      noise_halfwidth     h in [0, 1): per-sample scaling noise U[-h, h] (default 0.1)
    cost_cap              normalization cap in seconds/bit (physical default: analytic)
    cap_fading_level      fading gain used for the default cap (default 0.01)
  agent                   defaults applied to every agent
    task_size             {law: fixed|uniform|truncated_normal, lo 0.2, hi 1.0, value, mean, stddev} in Mbit
    activation            {rho}: Bernoulli activation probability in (0, 1] (default 1)
    learner
      a                   learning-rate scale, eta = sqrt(a ln K / (K clock)) (default 1)
      gamma_ratio         gamma / eta in (0, 0.5] (default 0.5)
      demand_weighting    zeta = 1 + normalized task size when true (default true)
      patch               beta | full_reset | partial_reset (default beta)
      feedback            bandit | full (default bandit)
      explicit_mixing     Exp3-style uniform mixing with an unbiased estimator (default false)
  agents[]                optional per-agent entries overriding agent
variants[]                {name, learner: {...}, game: {...merge patch...}}; default one variant
replications              {count, master_seed, seeds[]}
metrics[]                 subset of: cumulative_cost cumulative_cost_raw social_cost pota
                          regret regret_rate regret_raw
output                    {dir, traces: N | "all" (default 2), xi_window (default 0.2)}
)";
}

}  // namespace vfc
