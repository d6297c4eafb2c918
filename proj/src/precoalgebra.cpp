// Copyright 2026 The Cofree Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cofree/precoalgebra.hpp"

#include <cctype>
#include <regex>

#include "cofree/error.hpp"

namespace cofree {

FinitePrecoalgebra::FinitePrecoalgebra(ModuleSpace space)
    : space_(std::move(space)),
      delta_(space_.rank),
      eps_(space_.rank, Scalar::zero(space_.ring)) {}

void FinitePrecoalgebra::add_delta(std::size_t k, std::size_t l, std::size_t m, const Scalar& c) {
  if (k >= rank() || l >= rank() || m >= rank()) {
    throw SpaceMismatch("delta entry index exceeds rank " + std::to_string(rank()));
  }
  if (!(c.ring() == ring())) throw MixedRings("delta coefficient over a different ring");
  if (c.is_zero()) return;
  auto [it, inserted] = delta_[k].try_emplace({l, m}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) delta_[k].erase(it);
  }
}

void FinitePrecoalgebra::set_eps(std::size_t k, const Scalar& c) {
  if (k >= rank()) throw SpaceMismatch("eps index exceeds rank " + std::to_string(rank()));
  if (!(c.ring() == ring())) throw MixedRings("eps value over a different ring");
  eps_[k] = c;
}

TensorElement FinitePrecoalgebra::delta(const ModuleElement& d) const {
  if (!(d.space() == space_)) throw SpaceMismatch("element of " + d.space().tag + " not in " + space_.tag);
  TensorElement out(ring(), {space_, space_});
  for (std::size_t k = 0; k < rank(); ++k) {
    if (d[k].is_zero()) continue;
    for (const auto& [lm, c] : delta_[k]) {
      out.add_term({static_cast<std::uint32_t>(lm.first), static_cast<std::uint32_t>(lm.second)},
                   d[k] * c);
    }
  }
  return out;
}

Scalar FinitePrecoalgebra::epsilon(const ModuleElement& d) const {
  if (!(d.space() == space_)) throw SpaceMismatch("element of " + d.space().tag + " not in " + space_.tag);
  Scalar acc = Scalar::zero(ring());
  for (std::size_t k = 0; k < rank(); ++k) acc += d[k] * eps_[k];
  return acc;
}

LinearMap::LinearMap(ModuleSpace domain, ModuleSpace codomain)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      rows_(codomain_.rank, std::vector<Scalar>(domain_.rank, Scalar::zero(domain_.ring))) {
  if (!(domain_.ring == codomain_.ring)) throw MixedRings("linear map between different rings");
}

LinearMap::LinearMap(ModuleSpace domain, ModuleSpace codomain,
                     std::vector<std::vector<Scalar>> rows)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), rows_(std::move(rows)) {
  if (!(domain_.ring == codomain_.ring)) throw MixedRings("linear map between different rings");
  if (rows_.size() != codomain_.rank) {
    throw SpaceMismatch("matrix has " + std::to_string(rows_.size()) + " rows, codomain rank is " +
                        std::to_string(codomain_.rank));
  }
  for (const auto& row : rows_) {
    if (row.size() != domain_.rank) {
      throw SpaceMismatch("matrix row of length " + std::to_string(row.size()) +
                          ", domain rank is " + std::to_string(domain_.rank));
    }
    for (const auto& c : row) {
      if (!(c.ring() == domain_.ring)) throw MixedRings("matrix entry over a different ring");
    }
  }
}

void LinearMap::set_entry(std::size_t row, std::size_t col, const Scalar& c) {
  if (!(c.ring() == domain_.ring)) throw MixedRings("matrix entry over a different ring");
  rows_.at(row).at(col) = c;
}

ModuleElement LinearMap::column(std::size_t k) const {
  std::vector<Scalar> coords;
  coords.reserve(codomain_.rank);
  for (const auto& row : rows_) coords.push_back(row.at(k));
  return ModuleElement(codomain_, std::move(coords));
}

ModuleElement LinearMap::operator()(const ModuleElement& x) const {
  if (!(x.space() == domain_)) {
    throw SpaceMismatch("applying a map on " + domain_.tag + " to an element of " + x.space().tag);
  }
  std::vector<Scalar> coords;
  coords.reserve(codomain_.rank);
  for (const auto& row : rows_) {
    Scalar acc = Scalar::zero(domain_.ring);
    for (std::size_t j = 0; j < row.size(); ++j) acc += row[j] * x[j];
    coords.push_back(std::move(acc));
  }
  return ModuleElement(codomain_, std::move(coords));
}

LinearMap compose(const LinearMap& g, const LinearMap& f) {
  if (!(f.codomain_ == g.domain_)) throw SpaceMismatch("composing maps with mismatched spaces");
  LinearMap out(f.domain_, g.codomain_);
  for (std::size_t i = 0; i < g.codomain_.rank; ++i) {
    for (std::size_t j = 0; j < f.domain_.rank; ++j) {
      Scalar acc = Scalar::zero(f.domain_.ring);
      for (std::size_t k = 0; k < f.codomain_.rank; ++k) acc += g.rows_[i][k] * f.rows_[k][j];
      out.rows_[i][j] = std::move(acc);
    }
  }
  return out;
}

SplitPairs canonicalSplit(const FinitePrecoalgebra& P, const ModuleElement& d) {
  if (!(d.space() == P.space())) {
    throw SpaceMismatch("element of " + d.space().tag + " split in " + P.space().tag);
  }
  SplitPairs out;
  for (std::size_t k = 0; k < P.rank(); ++k) {
    if (d[k].is_zero()) continue;
    for (const auto& [lm, c] : P.delta_row(k)) {
      out.emplace_back(elemScale(d[k] * c, ModuleElement::basis(P.space(), lm.first)),
                       ModuleElement::basis(P.space(), lm.second));
    }
  }
  if (out.empty()) out.emplace_back(ModuleElement(P.space()), ModuleElement(P.space()));
  return out;
}

namespace {

struct Line {
  std::string text;
  std::size_t offset;
};

std::string trim_copy(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::size_t parse_count(const std::string& s, std::size_t offset) {
  static const std::regex kNumber(R"(\s*([0-9]+)\s*)");
  std::smatch m;
  if (!std::regex_match(s, m, kNumber)) throw SyntaxError("expected a nonnegative integer", offset);
  return std::stoul(m[1].str());
}

// "b<k>" -> k-1, checked against rank.
std::size_t parse_basis(const std::string& s, std::size_t rank, std::size_t offset) {
  static const std::regex kBasis(R"(\s*b([0-9]+)\s*)");
  std::smatch m;
  if (!std::regex_match(s, m, kBasis)) throw SyntaxError("expected a basis name b<k>", offset);
  std::size_t k = std::stoul(m[1].str());
  if (k < 1 || k > rank) {
    throw SpaceMismatch("basis b" + std::to_string(k) + " outside rank " + std::to_string(rank));
  }
  return k - 1;
}

}  // namespace

PrecoalgebraFixture parsePrecoalgebra(std::string_view text, std::optional<Ring> ring_override) {
  std::vector<Line> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string body = trim_copy(text.substr(start, end - start));
    if (!body.empty() && body.front() != '#') lines.push_back({std::move(body), start});
    start = end + 1;
  }

  std::optional<Ring> ring;
  std::optional<std::size_t> rank, rank_v;
  std::vector<const Line*> deltas, epss, phis;
  for (const auto& line : lines) {
    std::size_t sp = line.text.find_first_of(" \t");
    std::string key = line.text.substr(0, sp);
    std::string rest = sp == std::string::npos ? "" : line.text.substr(sp + 1);
    if (key == "ring") {
      if (ring) throw SyntaxError("duplicate ring line", line.offset);
      ring = Ring::parse(rest);
    } else if (key == "rank") {
      if (rank) throw SyntaxError("duplicate rank line", line.offset);
      rank = parse_count(rest, line.offset);
    } else if (key == "rankV") {
      if (rank_v) throw SyntaxError("duplicate rankV line", line.offset);
      rank_v = parse_count(rest, line.offset);
    } else if (key == "delta") {
      deltas.push_back(&line);
    } else if (key == "eps") {
      epss.push_back(&line);
    } else if (key == "phi") {
      phis.push_back(&line);
    } else {
      throw SyntaxError("unknown directive '" + key + "'", line.offset);
    }
  }
  if (!ring) throw SyntaxError("missing ring line", 0);
  if (!rank) throw SyntaxError("missing rank line", 0);
  if (!rank_v) throw SyntaxError("missing rankV line", 0);
  if (ring_override) ring = ring_override;

  const ModuleSpace d_space = ModuleSpace::plain(*ring, *rank, "D");
  const ModuleSpace v_space = ModuleSpace::plain(*ring, *rank_v, "V");
  PrecoalgebraFixture out{FinitePrecoalgebra(d_space), LinearMap(d_space, v_space)};

  auto split_eq = [](const Line& line, std::string& lhs, std::string& rhs) {
    std::size_t sp = line.text.find_first_of(" \t");
    std::string body = line.text.substr(sp + 1);
    std::size_t eq = body.find('=');
    if (eq == std::string::npos) throw SyntaxError("expected '='", line.offset);
    lhs = body.substr(0, eq);
    rhs = trim_copy(body.substr(eq + 1));
  };

  static const std::regex kTerm(
      R"(\s*(-?[0-9]+(?:/[0-9]+)?)\s*\*\s*\(\s*b([0-9]+)\s*,\s*b([0-9]+)\s*\)\s*)");
  for (const Line* line : deltas) {
    std::string lhs, rhs;
    split_eq(*line, lhs, rhs);
    std::size_t k = parse_basis(lhs, *rank, line->offset);
    if (rhs == "0") continue;
    std::size_t pos = 0;
    while (true) {
      std::size_t plus = rhs.find('+', pos);
      std::string term = rhs.substr(pos, plus == std::string::npos ? std::string::npos : plus - pos);
      std::smatch m;
      if (!std::regex_match(term, m, kTerm)) {
        throw SyntaxError("malformed delta term '" + trim_copy(term) + "'", line->offset);
      }
      std::size_t l = std::stoul(m[2].str()), r = std::stoul(m[3].str());
      if (l < 1 || l > *rank || r < 1 || r > *rank) {
        throw SpaceMismatch("delta term index outside rank " + std::to_string(*rank));
      }
      out.coalgebra.add_delta(k, l - 1, r - 1, Scalar::parse(*ring, m[1].str()));
      if (plus == std::string::npos) break;
      pos = plus + 1;
    }
  }
  for (const Line* line : epss) {
    std::string lhs, rhs;
    split_eq(*line, lhs, rhs);
    out.coalgebra.set_eps(parse_basis(lhs, *rank, line->offset), Scalar::parse(*ring, rhs));
  }
  for (const Line* line : phis) {
    std::string lhs, rhs;
    split_eq(*line, lhs, rhs);
    std::size_t k = parse_basis(lhs, *rank, line->offset);
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (true) {
      std::size_t comma = rhs.find(',', pos);
      parts.push_back(rhs.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (parts.size() != *rank_v) {
      throw SpaceMismatch("phi b" + std::to_string(k + 1) + " has " + std::to_string(parts.size()) +
                          " coordinates, rankV is " + std::to_string(*rank_v));
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
      out.phi.set_entry(i, k, Scalar::parse(*ring, parts[i]));
    }
  }
  return out;
}

std::string formatPrecoalgebra(const PrecoalgebraFixture& fixture) {
  const FinitePrecoalgebra& P = fixture.coalgebra;
  std::string out = "ring " + P.ring().to_string() + "\n";
  out += "rank " + std::to_string(P.rank()) + "\n";
  for (std::size_t k = 0; k < P.rank(); ++k) {
    if (P.delta_row(k).empty()) continue;
    out += "delta b" + std::to_string(k + 1) + " =";
    bool first = true;
    for (const auto& [lm, c] : P.delta_row(k)) {
      out += first ? " " : " + ";
      first = false;
      out += c.to_string() + "*(b" + std::to_string(lm.first + 1) + ",b" +
             std::to_string(lm.second + 1) + ")";
    }
    out += "\n";
  }
  for (std::size_t k = 0; k < P.rank(); ++k) {
    if (!P.eps(k).is_zero()) out += "eps b" + std::to_string(k + 1) + " = " + P.eps(k).to_string() + "\n";
  }
  for (std::size_t k = 0; k < P.rank(); ++k) {
    ModuleElement col = fixture.phi.column(k);
    if (!col.is_zero()) out += "phi b" + std::to_string(k + 1) + " = " + col.to_csv() + "\n";
  }
  out += "rankV " + std::to_string(fixture.phi.codomain().rank) + "\n";
  return out;
}

}  // namespace cofree
