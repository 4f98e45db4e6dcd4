#pragma once

// Integer partitions in vector notation (counts of teams per size) and the
// stage state spaces S(n,t) with their multinomial weight vectors.

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "coalesce/rational.hpp"

namespace coalesce {

// Enumeration guard: p(n) grows fast, so reject n above a configurable cap.
inline constexpr int kDefaultMaxN = 40;

struct CapError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline Integer factorial(unsigned long n) {
  Integer z;
  mpz_fac_ui(z.get_mpz_t(), n);
  return z;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer z;
  mpz_bin_uiui(z.get_mpz_t(), n, k);
  return z;
}

// A chain state: counts (r_1, ..., r_k) where r_i is the number of teams of
// size i, trailing zeros trimmed. n = sum i*r_i players, t = sum r_i teams.
class Partition {
 public:
  explicit Partition(std::vector<int> counts) : counts_(std::move(counts)) {
    while (!counts_.empty() && counts_.back() == 0) counts_.pop_back();
    if (counts_.empty()) throw std::invalid_argument("partition: no teams");
    n_ = 0;
    t_ = 0;
    for (std::size_t i = 0; i < counts_.size(); ++i) {
      if (counts_[i] < 0) throw std::invalid_argument("partition: negative count");
      t_ += counts_[i];
      n_ += static_cast<int>(i + 1) * counts_[i];
    }
  }

  static Partition from_parts(std::vector<int> parts) {
    if (parts.empty()) throw std::invalid_argument("partition: no parts");
    int largest = 0;
    for (int p : parts) {
      if (p < 1) throw std::invalid_argument("partition: part below 1");
      largest = std::max(largest, p);
    }
    std::vector<int> counts(largest, 0);
    for (int p : parts) ++counts[p - 1];
    return Partition(std::move(counts));
  }

  static Partition singletons(int n) { return from_parts(std::vector<int>(n, 1)); }
  static Partition single_team(int n) { return from_parts({n}); }

  const std::vector<int>& counts() const { return counts_; }
  int n() const { return n_; }
  int teams() const { return t_; }
  int largest_part() const { return static_cast<int>(counts_.size()); }

  // r_i for any i >= 1 (0 beyond the stored range).
  int count_of(int size) const {
    if (size < 1 || size > largest_part()) return 0;
    return counts_[size - 1];
  }

  // Descending part list, e.g. (1,1,1) for n=6 -> {3,2,1}.
  std::vector<int> parts() const {
    std::vector<int> out;
    out.reserve(t_);
    for (int size = largest_part(); size >= 1; --size)
      out.insert(out.end(), counts_[size - 1], size);
    return out;
  }

  // "[321]" while all parts are single digits, "[12,3,1]" otherwise; a lone
  // value of 10 or more keeps a trailing comma ("[12,]") so the digit-per-
  // character reading of bodies like "21" stays unambiguous.
  std::string part_string() const { return bracketed(parts(), '[', ']'); }

  // "(111)" / "(0,2,12)" / "(12,)" over the counts, same comma rules.
  std::string vector_string() const { return bracketed(counts_, '(', ')'); }

  // Accepts both textual forms.
  static Partition parse(std::string_view text) {
    if (text.size() < 3)
      throw std::invalid_argument("partition: cannot parse '" + std::string(text) + "'");
    const char open = text.front();
    const char close = text.back();
    std::vector<int> values = parseBody(text.substr(1, text.size() - 2), text);
    if (open == '[' && close == ']') return from_parts(std::move(values));
    if (open == '(' && close == ')') return Partition(std::move(values));
    throw std::invalid_argument("partition: cannot parse '" + std::string(text) + "'");
  }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.counts_ == b.counts_;
  }

  // Canonical order: ascending lexicographic on the descending part list.
  friend bool operator<(const Partition& a, const Partition& b) {
    return a.parts() < b.parts();
  }

 private:
  template <typename Seq>
  static std::string bracketed(const Seq& values, char open, char close) {
    bool compact = std::all_of(values.begin(), values.end(), [](int v) { return v <= 9; });
    std::string out(1, open);
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (!compact && i > 0) out += ',';
      out += std::to_string(values[i]);
    }
    // A lone multi-digit value needs the comma marker or "[12]" would read
    // back digit by digit as [1,2].
    if (!compact && values.size() == 1) out += ',';
    out += close;
    return out;
  }

  static std::vector<int> parseBody(std::string_view body, std::string_view whole) {
    const auto bad = [&] {
      throw std::invalid_argument("partition: cannot parse '" + std::string(whole) + "'");
    };
    std::vector<int> values;
    if (body.find(',') != std::string_view::npos) {
      // One trailing comma marks a single value ("[12,]"); any other empty
      // token is malformed.
      if (body.size() >= 2 && body.back() == ',' &&
          body.find(',') == body.size() - 1) {
        body.remove_suffix(1);
      }
      std::size_t pos = 0;
      while (pos <= body.size()) {
        std::size_t next = body.find(',', pos);
        std::string_view tok = body.substr(pos, next == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : next - pos);
        if (tok.empty()) bad();
        int v = 0;
        for (char c : tok) {
          if (c < '0' || c > '9') bad();
          v = v * 10 + (c - '0');
        }
        values.push_back(v);
        if (next == std::string_view::npos) break;
        pos = next + 1;
      }
    } else {
      for (char c : body) {
        if (c < '0' || c > '9') bad();
        values.push_back(c - '0');
      }
    }
    if (values.empty()) bad();
    return values;
  }

  std::vector<int> counts_;
  int n_ = 0;
  int t_ = 0;
};

// S(n,t): all partitions of n into exactly t parts, canonically ordered.
class StageSpace {
 public:
  StageSpace(int n, int t, std::vector<Partition> states)
      : n_(n), t_(t), states_(std::move(states)) {
    for (std::size_t i = 0; i < states_.size(); ++i)
      index_.emplace(states_[i].counts(), static_cast<int>(i));
  }

  int n() const { return n_; }
  int t() const { return t_; }
  std::size_t size() const { return states_.size(); }
  // Rvalue overloads return by value so iterating a temporary's states, as in
  // `for (p : enumerate_stage(n, t).states())`, never dangles.
  const std::vector<Partition>& states() const& { return states_; }
  std::vector<Partition> states() && { return std::move(states_); }
  const Partition& state(std::size_t i) const& { return states_[i]; }
  Partition state(std::size_t i) && { return states_[i]; }

  bool contains(const Partition& p) const { return index_.count(p.counts()) > 0; }

  int index_of(const Partition& p) const {
    auto it = index_.find(p.counts());
    if (it == index_.end())
      throw std::out_of_range("stage space: " + p.part_string() + " not in S(" +
                              std::to_string(n_) + "," + std::to_string(t_) + ")");
    return it->second;
  }

 private:
  int n_;
  int t_;
  std::vector<Partition> states_;
  std::map<std::vector<int>, int> index_;
};

namespace detail {

inline void emitPartitions(int remaining, int slots, int max_part, std::vector<int>& prefix,
                           std::vector<Partition>& out) {
  if (slots == 0) {
    out.push_back(Partition::from_parts(prefix));
    return;
  }
  int low = (remaining + slots - 1) / slots;  // parts below this cannot fill the rest
  int high = std::min(max_part, remaining - (slots - 1));
  for (int part = low; part <= high; ++part) {
    prefix.push_back(part);
    emitPartitions(remaining - part, slots - 1, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace detail

inline StageSpace enumerate_stage(int n, int t, int max_n = kDefaultMaxN) {
  if (n > max_n)
    throw CapError("enumerate_stage: n = " + std::to_string(n) + " exceeds cap " +
                   std::to_string(max_n));
  if (n < 1 || t < 1 || t > n)
    throw std::invalid_argument("enumerate_stage: need 1 <= t <= n, got n = " +
                                std::to_string(n) + ", t = " + std::to_string(t));
  std::vector<Partition> states;
  std::vector<int> prefix;
  detail::emitPartitions(n, t, n, prefix, states);
  return StageSpace(n, t, std::move(states));
}

// m_r = t! / (r_1! r_2! ... r_k!)
inline Integer multinomial(const Partition& p) {
  Integer m = factorial(static_cast<unsigned long>(p.teams()));
  for (int r : p.counts())
    if (r > 1) m /= factorial(static_cast<unsigned long>(r));
  return m;
}

// u_t over a stage: the multinomial weight of each state, in stage order.
// Weights stay integers; normalization is the analysis layer's business.
struct WeightVector {
  StageSpace stage;
  std::vector<Integer> weights;

  Integer sum() const {
    Integer s = 0;
    for (const auto& w : weights) s += w;
    return s;
  }
};

inline WeightVector weight_vector(const StageSpace& stage) {
  std::vector<Integer> weights;
  weights.reserve(stage.size());
  for (const auto& p : stage.states()) weights.push_back(multinomial(p));
  return WeightVector{stage, std::move(weights)};
}

}  // namespace coalesce
