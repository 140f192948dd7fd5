#include "vfc/trace_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "vfc/config_io.hpp"

namespace vfc {
namespace {

constexpr const char* kMagic = "# vfcsim-trace v1";
constexpr const char* kConfigPrefix = "# config ";
constexpr const char* kColumns =
    "# columns round agent active clock task_size zeta eta gamma chosen congestion candidates probs "
    "estimates adversary_cost collision_cost outlier realized normalized";
constexpr int kNumColumns = 18;

template <typename T>
void write_list(std::ostream& out, const std::vector<T>& xs) {
  if (xs.empty()) {
    out << '-';
    return;
  }
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out << ';';
    if constexpr (std::is_floating_point_v<T>)
      out << format_double(xs[i]);
    else
      out << xs[i];
  }
}

class LineParser {
 public:
  LineParser(const std::string& source, std::size_t line_no) : source_(source), line_no_(line_no) {}

  [[noreturn]] void fail(const std::string& what) const {
    std::ostringstream os;
    os << source_ << ":" << line_no_ << ": " << what;
    throw TraceError(os.str());
  }

  template <typename T>
  T number(std::string_view s, const char* column) const {
    T v{};
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
      fail(std::string("bad value '") + std::string(s) + "' in column " + column);
    return v;
  }

  template <typename T>
  std::vector<T> list(std::string_view s, const char* column) const {
    std::vector<T> out;
    if (s == "-") return out;
    std::size_t pos = 0;
    while (true) {
      const auto next = s.find(';', pos);
      out.push_back(number<T>(s.substr(pos, next == std::string_view::npos ? s.npos : next - pos), column));
      if (next == std::string_view::npos) break;
      pos = next + 1;
    }
    return out;
  }

 private:
  const std::string& source_;
  std::size_t line_no_;
};

}  // namespace

std::string format_double(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

void write_trace(std::ostream& out, const GameTrace& trace) {
  out << kMagic << '\n' << kConfigPrefix << game_to_json(trace.config) << '\n' << kColumns << '\n';
  for (const auto& r : trace.records) {
    out << r.round << ' ' << r.agent << ' ' << (r.active ? 1 : 0) << ' ' << r.activation_clock << ' '
        << format_double(r.task_size) << ' ' << format_double(r.zeta) << ' ' << format_double(r.rates.eta) << ' '
        << format_double(r.rates.gamma) << ' ' << r.chosen << ' ' << r.congestion << ' ';
    write_list(out, r.candidates);
    out << ' ';
    write_list(out, r.probs);
    out << ' ';
    write_list(out, r.estimates);
    out << ' ' << format_double(r.cost.adversary_cost) << ' ' << format_double(r.cost.collision_cost) << ' '
        << format_double(r.cost.outlier_weight) << ' ' << format_double(r.cost.realized_cost) << ' '
        << format_double(r.cost.normalized_cost) << '\n';
  }
}

void write_trace_file(const std::filesystem::path& path, const GameTrace& trace) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(path.string() + ": cannot open for writing");
  write_trace(out, trace);
  if (!out) throw std::runtime_error(path.string() + ": write failed");
}

GameTrace read_trace(std::istream& in, const std::string& source) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    if (!std::getline(in, line)) return false;
    ++line_no;
    return true;
  };

  if (!next_line() || line != kMagic) LineParser(source, 1).fail("missing trace header");
  if (!next_line() || line.rfind(kConfigPrefix, 0) != 0) LineParser(source, line_no).fail("missing config line");
  GameTrace trace;
  try {
    trace.config = game_from_json(line.substr(std::char_traits<char>::length(kConfigPrefix)));
    trace.env = make_environment(trace.config);
  } catch (const std::exception& e) {
    LineParser(source, line_no).fail(std::string("invalid config: ") + e.what());
  }

  const auto n_agents = static_cast<std::size_t>(trace.config.num_agents);
  const std::size_t expected = static_cast<std::size_t>(trace.config.horizon) * n_agents;
  trace.records.reserve(expected);
  std::vector<std::string_view> cols;
  while (next_line()) {
    if (line.empty() || line[0] == '#') continue;
    const LineParser p(source, line_no);
    cols.clear();
    std::string_view sv(line);
    std::size_t pos = 0;
    while (pos < sv.size()) {
      const auto end = sv.find(' ', pos);
      cols.push_back(sv.substr(pos, end == sv.npos ? sv.npos : end - pos));
      if (end == sv.npos) break;
      pos = end + 1;
    }
    if (static_cast<int>(cols.size()) != kNumColumns)
      p.fail("expected " + std::to_string(kNumColumns) + " columns, found " + std::to_string(cols.size()));

    RoundRecord r;
    r.round = p.number<Round>(cols[0], "round");
    r.agent = p.number<AgentId>(cols[1], "agent");
    const int active = p.number<int>(cols[2], "active");
    if (active != 0 && active != 1) p.fail("active flag must be 0 or 1");
    r.active = active == 1;
    r.activation_clock = p.number<std::int64_t>(cols[3], "clock");
    r.task_size = p.number<double>(cols[4], "task_size");
    r.zeta = p.number<double>(cols[5], "zeta");
    r.rates.eta = p.number<double>(cols[6], "eta");
    r.rates.gamma = p.number<double>(cols[7], "gamma");
    r.chosen = p.number<ArmId>(cols[8], "chosen");
    r.congestion = p.number<int>(cols[9], "congestion");
    r.candidates = p.list<ArmId>(cols[10], "candidates");
    r.probs = p.list<double>(cols[11], "probs");
    r.estimates = p.list<double>(cols[12], "estimates");
    r.cost.adversary_cost = p.number<double>(cols[13], "adversary_cost");
    r.cost.collision_cost = p.number<double>(cols[14], "collision_cost");
    r.cost.outlier_weight = p.number<double>(cols[15], "outlier");
    r.cost.realized_cost = p.number<double>(cols[16], "realized");
    r.cost.normalized_cost = p.number<double>(cols[17], "normalized");

    const std::size_t idx = trace.records.size();
    if (idx >= expected) p.fail("more records than horizon x agents");
    if (r.round != static_cast<Round>(idx / n_agents) + 1 || r.agent != static_cast<AgentId>(idx % n_agents))
      p.fail("record out of order");
    trace.records.push_back(std::move(r));
  }
  if (trace.records.size() != expected) {
    std::ostringstream os;
    os << source << ": truncated trace: " << trace.records.size() << " of " << expected << " records";
    throw TraceError(os.str());
  }
  return trace;
}

GameTrace read_trace_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw TraceError(path.string() + ": cannot open trace file");
  return read_trace(in, path.string());
}

}  // namespace vfc
