#include "wfadis/text_format.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include "wfadis/errors.hpp"

namespace wfadis {
namespace {

std::vector<std::string> Fields(const std::string &line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string f;
  while (in >> f) out.push_back(f);
  return out;
}

StateId ParseState(const std::string &text, std::size_t line) {
  long long value = -1;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 0 ||
      value > 0x3fffffff) {
    throw ParseError(line, "bad state id '" + text + "'");
  }
  return static_cast<StateId>(value);
}

Weight ParseWeightAt(SemiringKind kind, const std::string &text,
                     std::size_t line) {
  try {
    Weight w = ParseWeight(kind, text);
    if (w.is_zero()) {
      throw ParseError(line, "weight '" + text + "' is the semiring zero");
    }
    return w;
  } catch (const UsageError &e) {
    throw ParseError(line, e.what());
  }
}

}  // namespace

Wfa ParseWfa(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  std::optional<SemiringKind> kind;
  std::optional<std::set<std::string>> sigma;
  StateId num_states = 0;
  struct Pending {
    StateId src, dst;
    std::string label;
    Weight weight;
    std::size_t line;
  };
  std::vector<Pending> transitions;
  std::map<StateId, Weight> initials, finals;
  auto grow = [&](StateId q) { num_states = std::max(num_states, q + 1); };

  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    auto f = Fields(raw);
    if (f.empty()) continue;
    if (!kind) {
      if (f.size() != 3 || f[0] != "wfa" || f[1] != "v1") {
        throw ParseError(line_no, "expected header 'wfa v1 <tropical|probability>'");
      }
      try {
        kind = ParseKind(f[2]);
      } catch (const UsageError &e) {
        throw ParseError(line_no, e.what());
      }
      continue;
    }
    const std::string &key = f[0];
    if (key == "states") {
      if (f.size() != 2) throw ParseError(line_no, "expected 'states <n>'");
      num_states = std::max(num_states, ParseState(f[1], line_no));
    } else if (key == "sigma") {
      if (sigma) throw ParseError(line_no, "duplicate sigma line");
      sigma.emplace(f.begin() + 1, f.end());
    } else if (key == "initial" || key == "final") {
      if (f.size() != 2 && f.size() != 3) {
        throw ParseError(line_no, "expected '" + key + " <state> [weight]'");
      }
      StateId q = ParseState(f[1], line_no);
      Weight w = f.size() == 3 ? ParseWeightAt(*kind, f[2], line_no)
                               : Weight::One(*kind);
      auto &target = key == "initial" ? initials : finals;
      if (!target.emplace(q, w).second) {
        throw ParseError(line_no, "state " + f[1] + " declared " + key + " twice");
      }
      grow(q);
    } else if (key == "trans") {
      if (f.size() != 4 && f.size() != 5) {
        throw ParseError(line_no, "expected 'trans <src> <dst> <label> [weight]'");
      }
      StateId src = ParseState(f[1], line_no);
      StateId dst = ParseState(f[2], line_no);
      Weight w = f.size() == 5 ? ParseWeightAt(*kind, f[4], line_no)
                               : Weight::One(*kind);
      transitions.push_back({src, dst, f[3], w, line_no});
      grow(src);
      grow(dst);
    } else {
      throw ParseError(line_no, "unknown directive '" + key + "'");
    }
  }
  if (!kind) throw ParseError(std::max<std::size_t>(line_no, 1), "missing header 'wfa v1 <semiring>'");

  std::set<std::string> symbols = sigma.value_or(std::set<std::string>{});
  for (const auto &t : transitions) {
    if (sigma && !sigma->contains(t.label)) {
      throw ParseError(t.line, "label '" + t.label + "' is not in sigma");
    }
    symbols.insert(t.label);
  }
  std::vector<std::string> alphabet(symbols.begin(), symbols.end());
  std::vector<Transition> resolved;
  resolved.reserve(transitions.size());
  for (const auto &t : transitions) {
    auto it = std::lower_bound(alphabet.begin(), alphabet.end(), t.label);
    resolved.push_back(
        {t.src, static_cast<Label>(it - alphabet.begin()), t.weight, t.dst});
  }
  try {
    return Wfa(*kind, std::move(alphabet), num_states, std::move(resolved),
               std::move(initials), std::move(finals));
  } catch (const UsageError &e) {
    throw ParseError(0, e.what());
  }
}

Wfa ReadWfaFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseWfa(buffer.str());
}

std::string SerializeWfa(const Wfa &a) {
  std::ostringstream out;
  out << "wfa v1 " << KindName(a.kind()) << "\n";
  StateId referenced = 0;
  for (const auto &t : a.transitions()) {
    referenced = std::max({referenced, t.src + 1, t.dst + 1});
  }
  for (const auto &[q, w] : a.initials()) referenced = std::max(referenced, q + 1);
  for (const auto &[q, w] : a.finals()) referenced = std::max(referenced, q + 1);
  if (a.num_states() > referenced) out << "states " << a.num_states() << "\n";
  if (!a.alphabet().empty()) {
    out << "sigma";
    for (const auto &s : a.alphabet()) out << ' ' << s;
    out << "\n";
  }
  for (const auto &[q, w] : a.initials()) {
    out << "initial " << q << ' ' << w.ToString() << "\n";
  }
  for (const auto &[q, w] : a.finals()) {
    out << "final " << q << ' ' << w.ToString() << "\n";
  }
  for (const auto &t : a.transitions()) {
    out << "trans " << t.src << ' ' << t.dst << ' ' << a.alphabet()[t.label]
        << ' ' << t.weight.ToString() << "\n";
  }
  return out.str();
}

void WriteWfaFile(const Wfa &a, const std::string &path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << SerializeWfa(a);
}

}  // namespace wfadis
