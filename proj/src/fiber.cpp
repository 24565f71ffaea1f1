#include "schreier/fiber.hpp"

#include <algorithm>
#include <charconv>

#include "schreier/errors.hpp"
#include "schreier/metric.hpp"
#include "schreier/taxonomy.hpp"

namespace schreier {

namespace {

std::uint64_t parse_number(const std::string& s, const std::string& what) {
  std::uint64_t v = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || end != s.data() + s.size())
    throw ConfigError("policy " + what + ": '" + s + "' is not a non-negative integer");
  return v;
}

std::string known_policies() {
  std::string out;
  for (const auto& n : policy_names()) out += (out.empty() ? "" : ", ") + n;
  return out;
}

}  // namespace

std::vector<std::string> policy_names() {
  return {"id", "q", "qprime", "dyadic:J:L", "word:W", "random:SEED", "far", "line:LABEL", "flipflop"};
}

std::string PolicySpec::to_string() const {
  switch (kind) {
    case Kind::Id: return "id";
    case Kind::Q: return "q";
    case Kind::QPrime: return "qprime";
    case Kind::Dyadic: return "dyadic:" + std::to_string(j) + ":" + std::to_string(ell);
    case Kind::Word: return "word:" + word;
    case Kind::Random: return "random:" + std::to_string(seed);
    case Kind::Far: return "far";
    case Kind::Line: return "line:" + label;
    case Kind::FlipFlop: return "flipflop";
  }
  return "?";
}

PolicySpec make_policy(std::string_view text) {
  std::string s(text);
  if (auto open = s.find('('); open != std::string::npos) {
    if (s.back() != ')') throw ConfigError("malformed policy '" + s + "'");
    s.pop_back();
    s[open] = ':';
    std::replace(s.begin(), s.end(), ',', ':');
  }
  std::vector<std::string> parts;
  for (std::size_t pos = 0;;) {
    auto colon = s.find(':', pos);
    parts.push_back(s.substr(pos, colon == std::string::npos ? std::string::npos : colon - pos));
    if (colon == std::string::npos) break;
    pos = colon + 1;
  }
  const std::string& head = parts[0];
  PolicySpec p;
  auto want = [&](std::size_t n) {
    if (parts.size() != n) throw ConfigError("policy '" + s + "' expects " + std::to_string(n - 1) + " parameter(s)");
  };
  if (head == "id") { want(1); p.kind = PolicySpec::Kind::Id; }
  else if (head == "q") { want(1); p.kind = PolicySpec::Kind::Q; }
  else if (head == "qprime") { want(1); p.kind = PolicySpec::Kind::QPrime; }
  else if (head == "far") { want(1); p.kind = PolicySpec::Kind::Far; }
  else if (head == "flipflop") { want(1); p.kind = PolicySpec::Kind::FlipFlop; }
  else if (head == "dyadic") {
    want(3);
    p.kind = PolicySpec::Kind::Dyadic;
    p.j = parse_number(parts[1], "dyadic level");
    p.ell = parse_number(parts[2], "dyadic exponent");
  } else if (head == "word") {
    want(2);
    p.kind = PolicySpec::Kind::Word;
    p.word = parts[1];
  } else if (head == "random") {
    want(2);
    p.kind = PolicySpec::Kind::Random;
    p.seed = parse_number(parts[1], "seed");
  } else if (head == "line") {
    want(2);
    p.kind = PolicySpec::Kind::Line;
    p.label = parts[1];
  } else {
    throw ConfigError("unknown policy '" + std::string(text) + "'; available: " + known_policies());
  }
  return p;
}

FiberPoint::FiberPoint(Tower tower, PolicySpec policy)
    : tower_(std::move(tower)), policy_(std::move(policy)), vertices_{0}, rng_(policy_.seed) {
  const Alphabet& alphabet = tower_.alphabet();
  switch (policy_.kind) {
    case PolicySpec::Kind::Q:
    case PolicySpec::Kind::QPrime:
      if (alphabet.size() < 2) throw ConfigError("policy " + policy_.to_string() + " needs two labels");
      break;
    case PolicySpec::Kind::Word:
      try {
        fixed_word_ = parse_word(policy_.word, alphabet);
      } catch (const InvalidInput& e) {
        throw ConfigError(e.what());
      }
      break;
    case PolicySpec::Kind::Line:
      if (!alphabet.find(policy_.label)) throw ConfigError("policy line: unknown label '" + policy_.label + "'");
      break;
    case PolicySpec::Kind::Dyadic: {
      if (policy_.j > tower_.depth()) throw ConfigError("dyadic level beyond the tower depth");
      const std::uint64_t L = cycle_length(policy_.j, Letter{0, false});
      if (policy_.ell >= L)
        throw ConfigError("dyadic parameters out of range: l_j = " + std::to_string(policy_.ell) +
                          " must be below " + std::to_string(L));
      ells_.push_back(0);
      break;
    }
    default:
      break;
  }
  if (policy_.kind == PolicySpec::Kind::Line) ells_.push_back(0);
}

std::uint64_t FiberPoint::cycle_length(std::size_t k, Letter g) const {
  LevelView v = tower_.view(k);
  std::uint64_t x = v.step(g, 0), n = 1;
  while (x != 0) {
    x = v.step(g, x);
    ++n;
  }
  return n;
}

std::uint64_t FiberPoint::vertex(std::size_t k) {
  if (k > tower_.depth())
    throw BudgetExhausted("level " + std::to_string(k) + " beyond tower depth " + std::to_string(tower_.depth()),
                          0, 0);
  while (vertices_.size() <= k) extend();
  return vertices_[k];
}

std::optional<Word> FiberPoint::word(std::size_t k) {
  vertex(k);
  switch (policy_.kind) {
    case PolicySpec::Kind::Id: return Word{};
    case PolicySpec::Kind::Word: return fixed_word_;
    case PolicySpec::Kind::Q:
    case PolicySpec::Kind::QPrime: {
      Word w;
      for (std::size_t i = 0; i < k; ++i) w = power(blocks_[i].first, blocks_[i].second) * w;
      return w;
    }
    case PolicySpec::Kind::Dyadic:
    case PolicySpec::Kind::Line: {
      const Letter g{policy_.kind == PolicySpec::Kind::Line ? tower_.alphabet().index(policy_.label) : 0, false};
      return power(g, ells_[k]);
    }
    default: return std::nullopt;
  }
}

void FiberPoint::extend() {
  const std::size_t k = vertices_.size() - 1;
  const std::size_t next = k + 1;
  const std::uint64_t v = vertices_[k];
  const std::uint64_t n = tower_.vertex_count(k);
  const std::uint32_t d = tower_.degree(k);
  std::uint64_t out = 0;
  switch (policy_.kind) {
    case PolicySpec::Kind::Id:
      out = 0;
      break;
    case PolicySpec::Kind::Word:
      out = tower_.trace(next, 0, fixed_word_);
      break;
    case PolicySpec::Kind::Q:
    case PolicySpec::Kind::QPrime: {
      const bool a_first = policy_.kind == PolicySpec::Kind::Q;
      const Letter c{(next % 2 == 1) == a_first ? 0u : 1u, false};
      blocks_.emplace_back(c, cycle_length(k, c));
      LevelView view = tower_.view(next);
      out = 0;
      for (auto it = blocks_.rbegin(); it != blocks_.rend(); ++it)
        for (std::uint64_t i = 0; i < it->second; ++i) out = view.step(it->first, out);
      break;
    }
    case PolicySpec::Kind::Dyadic:
    case PolicySpec::Kind::Line: {
      const bool line = policy_.kind == PolicySpec::Kind::Line;
      const Letter c{line ? tower_.alphabet().index(policy_.label) : 0u, false};
      const std::uint64_t lower = cycle_length(k, c), upper = cycle_length(next, c);
      std::uint64_t ell = 0;
      if (line) {
        std::uint64_t best = 0;
        for (std::uint64_t t = 0; t * lower < upper; ++t) {
          std::uint64_t cand = ells_[k] + t * lower;
          std::uint64_t far = std::min(cand, upper - cand);
          if (t == 0 || far > best) {
            best = far;
            ell = cand;
          }
        }
      } else if (next <= policy_.j) {
        ell = policy_.ell % upper;
      } else {
        ell = next % 2 == 0 ? ells_[k] + lower : ells_[k];
      }
      ells_.push_back(ell);
      LevelView view = tower_.view(next);
      out = 0;
      for (std::uint64_t i = 0; i < ell; ++i) out = view.step(c, out);
      break;
    }
    case PolicySpec::Kind::Random:
      out = (rng_() % d) * n + v;
      break;
    case PolicySpec::Kind::Far: {
      auto graph = tower_.level(next);
      auto dist = distances_from(*graph, 0);
      std::uint32_t best = 0;
      for (std::uint64_t s = 0; s < d; ++s)
        if (s == 0 || dist[s * n + v] > best) {
          best = dist[s * n + v];
          out = s * n + v;
        }
      break;
    }
    case PolicySpec::Kind::FlipFlop: {
      if (v == 0) {
        out = d > 1 ? n : 0;
        break;
      }
      out = v;
      if (k % 2 == 0) {
        for (std::uint64_t s = 1; s < d; ++s) {
          if (classify_level(tower_, k, v, s * n + v).kind == Tag::Kind::Transverse) {
            out = s * n + v;
            break;
          }
        }
        if (out == v && d > 1) out = n + v;
      }
      break;
    }
  }
  if (out % n != v) throw Error("fiber point policy produced an incoherent vertex");
  vertices_.push_back(out);
}

}  // namespace schreier
