#include "dimjump/fuzz.hpp"

#include <sstream>

#include "dimjump/cli.hpp"

namespace dimjump {

namespace {

const std::vector<std::string>& dictionary() {
  static const std::vector<std::string> words{
      "^", "^9999", "^0", "(", ")", "[", "]", ",", ":", "-", "+", "*", "/", "/0", "0", "1", "-1", "65537",
      "999999999", "x", "y", "z", "t", "T", "X", "Y", "h_", "rees", "over rees", "free [0]", "ungraded",
      "filtration [0]", "model J", "model I0", "coker [[1]] rows [0] cols [0]", "rows [0]", "cols [5]",
      "probe (t - 1)", "probe (x, y)", "check lemma1 Mt A", "check lemma2 Mt Mt", "check lemma3 T1",
      "check jump A", "check example15", "window -200:200", "qmax 8", "order lex", "ring GF(2)[x, y]",
      "ring QQ[x:16, y:1]", "#", "\n", "(x + y)^40", "x^1000*y^1000"};
  return words;
}

std::vector<std::string> split_lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

std::string join_lines(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& l : v) s += l + "\n";
  return s;
}

std::vector<std::string> names_in(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string w, prev; is >> w; prev = w)
    if (prev == "module") out.push_back(w);
  return out;
}

}  // namespace

std::string mutate_task(const std::string& text, std::mt19937_64& rng) {
  std::string s = text;
  auto below = [&](std::size_t n) { return n == 0 ? std::size_t(0) : std::size_t(rng() % n); };
  int edits = 1 + int(rng() % 3);
  for (int k = 0; k < edits; ++k) {
    switch (rng() % 8) {
      case 0:
        if (!s.empty()) s[below(s.size())] = char(32 + rng() % 95);
        break;
      case 1:
        if (!s.empty()) {
          std::size_t at = below(s.size());
          s.erase(at, 1 + below(8));
        }
        break;
      case 2: {
        const auto& w = dictionary()[below(dictionary().size())];
        s.insert(below(s.size() + 1), " " + w + " ");
        break;
      }
      case 3: {
        auto lines = split_lines(s);
        if (!lines.empty()) lines.insert(lines.begin() + long(below(lines.size() + 1)), lines[below(lines.size())]);
        s = join_lines(lines);
        break;
      }
      case 4: {
        auto lines = split_lines(s);
        if (lines.size() > 1) std::swap(lines[below(lines.size())], lines[below(lines.size())]);
        s = join_lines(lines);
        break;
      }
      case 5:
      case 6: {
        std::vector<std::size_t> spots;
        for (std::size_t i = 0; i < s.size(); ++i)
          if (std::isalpha(static_cast<unsigned char>(s[i])) &&
              (i == 0 || !std::isalnum(static_cast<unsigned char>(s[i - 1]))) &&
              (i + 1 == s.size() || !std::isalnum(static_cast<unsigned char>(s[i + 1]))))
            spots.push_back(i);
        if (!spots.empty()) s[spots[below(spots.size())]] = "xyztTXY"[rng() % 7];
        break;
      }
      default:
        if (!s.empty()) {
          std::size_t at = below(s.size());
          if (std::isdigit(static_cast<unsigned char>(s[at]))) s.insert(at, std::to_string(rng() % 100));
          else s[at] = "0123456789"[rng() % 10];
        }
    }
  }
  return s;
}

FuzzSummary fuzz_task(const std::string& text, std::uint64_t seed, std::size_t runs, std::uint64_t budget) {
  FuzzSummary out;
  std::mt19937_64 rng(seed);
  const auto& cmds = command_names();
  for (std::size_t i = 0; i < runs; ++i) {
    std::string mutant = mutate_task(text, rng);
    SessionConfig c;
    c.budget = budget;
    if (rng() % 4) {
      c.command = "check:all";
    } else {
      c.command = cmds[rng() % cmds.size()];
      auto names = names_in(mutant);
      for (int k = int(rng() % 3); k > 0 && !names.empty(); --k) c.names.push_back(names[rng() % names.size()]);
      if (rng() % 2) c.q = int(rng() % 4);
    }
    DispatchResult r = dispatch(c, mutant);
    ++out.runs;
    ++out.by_status[std::size_t(r.status)];
    if (r.status == kExitInternal) out.internal.push_back(c.command + " | " + r.diagnostics + " | " + mutant);
  }
  return out;
}

}  // namespace dimjump
