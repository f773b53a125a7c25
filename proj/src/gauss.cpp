#include "gauss.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "error.hpp"

namespace wk {

Code parse_code(const std::string& text) {
  Code code;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok.size() < 3 || (tok[0] != 'O' && tok[0] != 'U'))
      fail(Errc::MalformedToken, "malformed token '" + tok + "'");
    char sgn = tok.back();
    if (sgn != '+' && sgn != '-')
      fail(Errc::MalformedToken, "malformed token '" + tok + "'");
    const std::string digits = tok.substr(1, tok.size() - 2);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      fail(Errc::MalformedToken, "malformed token '" + tok + "'");
    long label = 0;
    try {
      label = std::stol(digits);
    } catch (const std::out_of_range&) {
      fail(Errc::MalformedToken, "malformed token '" + tok + "'");
    }
    if (label <= 0) fail(Errc::MalformedToken, "malformed token '" + tok + "'");
    code.push_back(Pass{tok[0] == 'O' ? Role::Over : Role::Under,
                        static_cast<int>(label), sgn == '+' ? 1 : -1});
  }

  std::map<int, std::vector<const Pass*>> by_label;
  for (const Pass& p : code) by_label[p.label].push_back(&p);
  for (const auto& [label, passes] : by_label)
    if (passes.size() != 2)
      fail(Errc::CrossingCountNotTwo,
           "crossing " + std::to_string(label) + " appears " +
               std::to_string(passes.size()) + " times, want 2");
  for (const auto& [label, passes] : by_label)
    if (passes[0]->role == passes[1]->role)
      fail(Errc::DuplicateRole,
           "crossing " + std::to_string(label) + " has two " +
               (passes[0]->role == Role::Over ? "over" : "under") + " passes");
  for (const auto& [label, passes] : by_label)
    if (passes[0]->sign != passes[1]->sign)
      fail(Errc::SignMismatch,
           "crossing " + std::to_string(label) + " has mismatched signs");
  return code;
}

std::string serialize(const Code& code) {
  std::string out;
  for (size_t i = 0; i < code.size(); ++i) {
    if (i) out += ' ';
    out += code[i].role == Role::Over ? 'O' : 'U';
    out += std::to_string(code[i].label);
    out += code[i].sign > 0 ? '+' : '-';
  }
  return out;
}

std::string serialize(const Diagram& d) { return serialize(d.code); }

Code relabel_first(const Code& code) {
  std::map<int, int> seen;
  Code out = code;
  for (Pass& p : out) {
    auto [it, fresh] = seen.emplace(p.label, static_cast<int>(seen.size()) + 1);
    (void)fresh;
    p.label = it->second;
  }
  return out;
}

namespace {
// Ordering used only by canonical(): over before under, then label, then +
// before -.
inline std::tuple<int, int, int> pass_key(const Pass& p) {
  return {p.role == Role::Under ? 1 : 0, p.label, p.sign < 0 ? 1 : 0};
}

bool key_less(const Code& a, const Code& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    auto ka = pass_key(a[i]), kb = pass_key(b[i]);
    if (ka != kb) return ka < kb;
  }
  return false;
}
}  // namespace

Code canonical(const Code& code) {
  if (code.empty()) return code;
  const size_t n = code.size();
  Code best;
  for (size_t r = 0; r < n; ++r) {
    Code rot(code.begin() + r, code.end());
    rot.insert(rot.end(), code.begin(), code.begin() + r);
    rot = relabel_first(rot);
    if (best.empty() || key_less(rot, best)) best = std::move(rot);
  }
  return best;
}

bool canon_equal(const Code& a, const Code& b) { return canonical(a) == canonical(b); }

Code reverse_code(const Code& code) { return Code(code.rbegin(), code.rend()); }

Code mirror_code(const Code& code) {
  Code out = code;
  for (Pass& p : out) {
    p.role = p.role == Role::Over ? Role::Under : Role::Over;
    p.sign = -p.sign;
  }
  return out;
}

std::vector<int> crossing_labels(const Code& code) {
  std::vector<int> labels;
  for (const Pass& p : code)
    if (p.role == Role::Over) labels.push_back(p.label);
  std::sort(labels.begin(), labels.end());
  return labels;
}

int crossing_count(const Code& code) { return static_cast<int>(code.size() / 2); }

Diagram make_diagram(Code code) { return Diagram{std::move(code), {}}; }

Diagram parse_diagram(const std::string& text) { return make_diagram(parse_code(text)); }

Diagram weld(const Diagram& d, int label) { return weld_set(d, {label}); }

Diagram weld_set(const Diagram& d, std::vector<int> labels) {
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  const std::vector<int> present = crossing_labels(d.code);
  for (int label : labels)
    if (!std::binary_search(present.begin(), present.end(), label))
      fail(Errc::UnknownCrossing, "no crossing labeled " + std::to_string(label));
  Diagram out;
  out.welded_history = d.welded_history;
  for (const Pass& p : d.code)
    if (!std::binary_search(labels.begin(), labels.end(), p.label)) out.code.push_back(p);
  out.welded_history.insert(out.welded_history.end(), labels.begin(), labels.end());
  return out;
}

int arc_count(const Code& code) {
  const int n = crossing_count(code);
  return n > 0 ? n : 1;
}

std::vector<int> arc_map(const Code& code) {
  std::vector<int> out(code.size(), 0);
  int unders = 0;
  for (const Pass& p : code) unders += p.role == Role::Under;
  if (unders == 0) return out;
  // The arc arriving at an under-pass includes that position; the segment
  // after the last under-pass wraps around to arc 0.
  int before = 0;
  for (size_t p = 0; p < code.size(); ++p) {
    out[p] = before % unders;
    if (code[p].role == Role::Under) ++before;
  }
  return out;
}

}  // namespace wk
