#include "gtb/format.hpp"

#include <algorithm>
#include <array>

namespace gtb {
namespace {

template <std::size_t N>
struct Line {
  std::array<std::string, N> words;
  Coefficient coeff;
};

template <std::size_t N>
std::string render(std::vector<Line<N>> lines, OutputFormat fmt,
                   const std::array<const char*, N>& keys) {
  if (lines.empty()) return fmt == OutputFormat::kText ? "0\n" : "coeff=0\n";
  std::sort(lines.begin(), lines.end(),
            [](const Line<N>& a, const Line<N>& b) { return a.words < b.words; });
  std::string out;
  for (const auto& line : lines) {
    if (fmt == OutputFormat::kText) {
      out += format_signed(line.coeff);
      for (std::size_t i = 0; i < N; ++i) {
        out += i == 0 ? " " : " | ";
        out += line.words[i];
      }
    } else {
      out += "coeff=" + format_signed(line.coeff);
      for (std::size_t i = 0; i < N; ++i) {
        out += std::string(" ") + keys[i] + "=" + line.words[i];
      }
    }
    out += '\n';
  }
  return out;
}

}  // namespace

std::string format_signed(Coefficient c) {
  if (c == 0) return "0";
  return (c > 0 ? "+" : "") + std::to_string(c);
}

std::string format(const FormalSum& x, OutputFormat fmt) {
  std::vector<Line<1>> lines;
  for (const auto& [w, c] : x) lines.push_back({{w.text()}, c});
  return render<1>(std::move(lines), fmt, {"word"});
}

std::string format(const Tensor2& t, OutputFormat fmt) {
  std::vector<Line<2>> lines;
  for (const auto& [k, c] : t) lines.push_back({{k.first.text(), k.second.text()}, c});
  return render<2>(std::move(lines), fmt, {"left", "right"});
}

std::string format(const Tensor3& t, OutputFormat fmt) {
  std::vector<Line<3>> lines;
  for (const auto& [k, c] : t) {
    lines.push_back({{k.first.text(), k.second.text(), k.third.text()}, c});
  }
  return render<3>(std::move(lines), fmt, {"first", "second", "third"});
}

std::string format_pairs(const std::vector<LinkedPair>& pairs, const CyclicWord& V,
                         const CyclicWord& W, OutputFormat fmt) {
  std::string out;
  for (const auto& pair : pairs) {
    out += "type=" + std::to_string(static_cast<int>(pair.kind));
    out += " sign=" + format_signed(pair.sign);
    out += " P=" + std::to_string(pair.p.start) + "+" + std::to_string(pair.p.length);
    out += " Q=" + std::to_string(pair.q.start) + "+" + std::to_string(pair.q.length);
    out += " Pword=" + to_string(window(V, pair.p));
    out += " Qword=" + to_string(window(W, pair.q));
    if (fmt == OutputFormat::kRecords) {
      out += " j=" + std::to_string(pair.p_exponent);
      out += " k=" + std::to_string(pair.q_exponent);
    }
    out += '\n';
  }
  return out;
}

}  // namespace gtb
