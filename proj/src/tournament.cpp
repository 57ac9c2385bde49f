#include "tourney/tournament.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace tourney {

std::vector<int> members(VertexSet set) {
  std::vector<int> out;
  out.reserve(std::popcount(set));
  while (set) {
    out.push_back(std::countr_zero(set));
    set &= set - 1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Tournament

Tournament::Tournament(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices)
    throw std::invalid_argument("tournament order " + std::to_string(n) + " outside [0, " +
                                std::to_string(kMaxVertices) + "]");
  out_.assign(n, 0);
  in_.assign(n, 0);
}

void Tournament::add_arc(int u, int v) {
  out_[u] |= bit(v);
  in_[v] |= bit(u);
}

void Tournament::check_vertex(int u) const {
  if (u < 0 || u >= n_)
    throw std::out_of_range("vertex " + std::to_string(u) + " not in tournament of order " +
                            std::to_string(n_));
}

Tournament Tournament::from_out_rows(std::vector<VertexSet> rows) {
  const int n = static_cast<int>(rows.size());
  Tournament t(n);
  const VertexSet everyone = all_vertices(n);
  for (int u = 0; u < n; ++u) {
    if (rows[u] & ~everyone) throw std::invalid_argument("arc to a vertex outside the tournament");
    if (contains(rows[u], u)) throw std::invalid_argument("loop at vertex " + std::to_string(u));
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const bool uv = contains(rows[u], v);
      const bool vu = contains(rows[v], u);
      if (uv == vu)
        throw std::invalid_argument("pair (" + std::to_string(u) + "," + std::to_string(v) +
                                    (uv ? ") has arcs both ways" : ") has no arc"));
      if (uv)
        t.add_arc(u, v);
      else
        t.add_arc(v, u);
    }
  return t;
}

Tournament Tournament::transitive(int n) {
  return from_relation(n, [](int, int) { return true; });
}

Tournament Tournament::almost_transitive(int n) {
  if (n < 2) throw std::invalid_argument("almost transitive tournament needs n >= 2");
  return from_relation(n, [n](int u, int v) { return !(u == 0 && v == n - 1); });
}

bool Tournament::has_arc(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return contains(out_[u], v);
}

VertexSet Tournament::out_neighbors(int u) const {
  check_vertex(u);
  return out_[u];
}

VertexSet Tournament::in_neighbors(int u) const {
  check_vertex(u);
  return in_[u];
}

int Tournament::indegree(int u) const { return std::popcount(in_neighbors(u)); }
int Tournament::outdegree(int u) const { return std::popcount(out_neighbors(u)); }
Degrees Tournament::degrees(int u) const { return {indegree(u), outdegree(u)}; }

std::vector<int> Tournament::indegrees() const {
  std::vector<int> d(n_);
  for (int u = 0; u < n_; ++u) d[u] = std::popcount(in_[u]);
  return d;
}

Tournament Tournament::converse() const {
  Tournament t = *this;
  std::swap(t.out_, t.in_);
  return t;
}

Tournament Tournament::induced(std::span<const int> vertices) const {
  for (int v : vertices) check_vertex(v);
  const int k = static_cast<int>(vertices.size());
  VertexSet seen = 0;
  for (int v : vertices) {
    if (contains(seen, v)) throw std::invalid_argument("repeated vertex in induced set");
    seen |= bit(v);
  }
  return from_relation(k, [&](int a, int b) { return contains(out_[vertices[a]], vertices[b]); });
}

Tournament Tournament::induced(VertexSet vertices) const {
  const auto list = members(vertices);
  return induced(std::span<const int>(list));
}

Tournament converse(const Tournament& t) { return t.converse(); }

// ---------------------------------------------------------------------------
// ConnectorSet

ConnectorSet::ConnectorSet(int p, std::span<const int> members) : p_(p) {
  if (p < 0 || p > kMaxVertices) throw std::invalid_argument("half-order out of range");
  for (int s : members) {
    if (s < 1 || s > p)
      throw std::invalid_argument("connector " + std::to_string(s) + " outside {1.." +
                                  std::to_string(p) + "}");
    mask_ |= bit(s - 1);
  }
}

ConnectorSet ConnectorSet::from_mask(int p, VertexSet mask) {
  if (p < 0 || p > kMaxVertices) throw std::invalid_argument("half-order out of range");
  if (mask & ~all_vertices(p)) throw std::invalid_argument("connector mask exceeds {1..p}");
  ConnectorSet c;
  c.p_ = p;
  c.mask_ = mask;
  return c;
}

ConnectorSet ConnectorSet::parse(int p, std::string_view text) {
  std::vector<int> values;
  auto is_space = [](char c) { return c == ' ' || c == '\t'; };
  while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
  if (!text.empty()) {
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = text.find(',', start);
      std::string_view item = text.substr(start, comma == std::string_view::npos ? text.npos
                                                                                 : comma - start);
      while (!item.empty() && is_space(item.front())) item.remove_prefix(1);
      while (!item.empty() && is_space(item.back())) item.remove_suffix(1);
      int value = 0;
      const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
      if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size())
        throw std::invalid_argument("malformed connector list '" + std::string(text) + "'");
      values.push_back(value);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  return ConnectorSet(p, std::span<const int>(values));
}

int ConnectorSet::size() const { return std::popcount(mask_); }

int ConnectorSet::min() const {
  if (mask_ == 0) throw std::logic_error("min() of an empty connector set");
  return std::countr_zero(mask_) + 1;
}

std::vector<int> ConnectorSet::members() const {
  auto out = tourney::members(mask_);
  for (int& s : out) ++s;
  return out;
}

ConnectorSet ConnectorSet::complement() const { return from_mask(p_, ~mask_ & all_vertices(p_)); }

ConnectorSet ConnectorSet::restricted(int q) const {
  if (q < 0 || q > p_) throw std::invalid_argument("restriction beyond half-order");
  return from_mask(q, mask_ & all_vertices(q));
}

std::string ConnectorSet::to_string() const {
  std::string out;
  for (int s : members()) {
    if (!out.empty()) out += ',';
    out += std::to_string(s);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cyclic and pseudo-cyclic tournaments

VertexSet CyclicTournament::connectors() const {
  const int n = order();
  VertexSet s = 0;
  for (int k = 1; k <= p_; ++k) s |= neg_.contains(k) ? bit(n - k) : bit(k);
  return s;
}

CyclicTournament build_cyclic(int p, const ConnectorSet& neg) {
  if (p < 1) throw std::invalid_argument("cyclic tournament needs p >= 1");
  if (2 * p + 1 > kMaxVertices)
    throw std::invalid_argument("order 2p+1 = " + std::to_string(2 * p + 1) + " exceeds " +
                                std::to_string(kMaxVertices));
  if (neg.half_order() != p)
    throw std::invalid_argument("connector set is over {1.." + std::to_string(neg.half_order()) +
                                "}, expected {1.." + std::to_string(p) + "}");
  CyclicTournament t;
  t.p_ = p;
  t.neg_ = neg;
  t.graph_ = Tournament::from_relation(2 * p + 1, [&](int i, int j) {
    const int d = j - i;
    return d <= p ? !neg.contains(d) : neg.contains(2 * p + 1 - d);
  });
  return t;
}

PseudoCyclicTournament build_pseudo_cyclic(int p, const ConnectorSet& neg) {
  if (p < 1) throw std::invalid_argument("pseudo-cyclic tournament needs p >= 1");
  if (p + 1 > kMaxVertices) throw std::invalid_argument("order p+1 exceeds vertex limit");
  if (neg.half_order() != p)
    throw std::invalid_argument("connector set is over {1.." + std::to_string(neg.half_order()) +
                                "}, expected {1.." + std::to_string(p) + "}");
  PseudoCyclicTournament t;
  t.p_ = p;
  t.neg_ = neg;
  t.graph_ = Tournament::from_relation(p + 1, [&](int i, int j) { return !neg.contains(j - i); });
  return t;
}

namespace {

SubTournament interval(const CyclicTournament& t, int i, int j) {
  SubTournament sub;
  for (int v = i; v <= j; ++v) sub.origin.push_back(v);
  sub.graph = t.graph().induced(std::span<const int>(sub.origin));
  return sub;
}

}  // namespace

SubTournament induced_interval(const CyclicTournament& t, int i, int j) {
  if (i < 0 || j > 2 * t.half_order() || i >= j)
    throw std::out_of_range("interval [" + std::to_string(i) + "," + std::to_string(j) +
                            "] invalid for order " + std::to_string(t.order()));
  return interval(t, i, j);
}

SubTournament lower_half(const CyclicTournament& t) { return interval(t, 0, t.half_order()); }

SubTournament upper_half(const CyclicTournament& t) {
  return interval(t, t.half_order() + 1, 2 * t.half_order());
}

// ---------------------------------------------------------------------------
// Text literal

Tournament parse_tournament(std::istream& in) {
  std::string line;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line()) throw std::invalid_argument("tournament literal: missing vertex count");
  int n = -1;
  {
    std::istringstream head(line);
    if (!(head >> n) || n < 0 || n > kMaxVertices)
      throw std::invalid_argument("tournament literal: bad vertex count '" + line + "'");
  }
  std::vector<VertexSet> rows(n, 0);
  for (int u = 0; u < n; ++u) {
    // A vertex with no out-neighbours is an empty line, so read raw lines here.
    if (!std::getline(in, line))
      throw std::invalid_argument("tournament literal: expected " + std::to_string(n) +
                                  " adjacency lines");
    std::istringstream row(line);
    int v = 0;
    while (row >> v) {
      if (v < 0 || v >= n)
        throw std::invalid_argument("tournament literal: vertex " + std::to_string(v) +
                                    " out of range");
      rows[u] |= bit(v);
    }
    if (!row.eof()) throw std::invalid_argument("tournament literal: bad token in '" + line + "'");
  }
  return Tournament::from_out_rows(std::move(rows));
}

Tournament parse_tournament(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_tournament(in);
}

std::string format_tournament(const Tournament& t) {
  std::string out = std::to_string(t.size()) + "\n";
  for (int u = 0; u < t.size(); ++u) {
    bool first = true;
    for (int v : members(t.out_neighbors(u))) {
      if (!first) out += ' ';
      out += std::to_string(v);
      first = false;
    }
    out += '\n';
  }
  return out;
}

}  // namespace tourney
