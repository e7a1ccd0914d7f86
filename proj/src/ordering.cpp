#include "thinpos/ordering.hpp"

#include <algorithm>

namespace thinpos {

Ordering ordering_from_ids(const BrickComplex& m, const std::vector<std::string>& ids) {
  Ordering o;
  o.bricks.reserve(ids.size());
  for (const auto& id : ids) o.bricks.push_back(m.brick_index(id));
  check_ordering(m, o);
  return o;
}

std::vector<std::string> ordering_ids(const BrickComplex& m, const Ordering& o) {
  std::vector<std::string> ids;
  ids.reserve(o.bricks.size());
  for (int b : o.bricks) ids.push_back(m.brick_ids[b]);
  return ids;
}

void check_ordering(const BrickComplex& m, const Ordering& o) {
  if (o.size() != m.brick_count()) {
    throw Error("ordering must list every brick exactly once (got " +
                std::to_string(o.size()) + " of " + std::to_string(m.brick_count()) + ")");
  }
  std::vector<char> seen(m.brick_count(), 0);
  for (int b : o.bricks) {
    if (b < 0 || b >= m.brick_count()) throw Error("ordering names an unknown brick");
    if (seen[b]) throw Error("ordering repeats brick " + m.brick_ids[b]);
    seen[b] = 1;
  }
}

Surface level_set(const BrickComplex& m, const Ordering& o, int j) {
  if (m.kind != Kind::BrickComplex) {
    throw Error("level sets are defined on brick complexes only");
  }
  check_ordering(m, o);
  if (j < 0 || j > o.size()) {
    throw Error("level index " + std::to_string(j) + " out of range 0.." +
                std::to_string(o.size()));
  }
  std::vector<char> below(m.brick_count(), 0);
  for (int k = 0; k < j; ++k) below[o.bricks[k]] = 1;
  std::vector<int> facets;
  for (int f = 0; f < m.facet_count(); ++f) {
    if (!m.interior_facet(f)) continue;
    if (below[m.facet_bricks[f][0]] != below[m.facet_bricks[f][1]]) facets.push_back(f);
  }
  return Surface{std::move(facets)};
}

LambdaProfile lambda_profile(const BrickComplex& m, const Ordering& o) {
  if (m.kind != Kind::BrickComplex) {
    throw Error("profiles are defined on brick complexes only");
  }
  check_ordering(m, o);
  const int n = o.size();
  std::vector<int> pos(m.brick_count(), 0);
  for (int k = 0; k < n; ++k) pos[o.bricks[k]] = k;

  LambdaProfile profile;
  profile.values.assign(n + 1, Rational(0));
  for (int j = 1; j <= n; ++j) {
    // Strength of the entering brick against the previous level surface.
    const int brick = o.bricks[j - 1];
    Rational sigma(0);
    for (int f : m.brick_facets[brick]) {
      if (!m.interior_facet(f)) continue;
      const int other = m.other_side(f, brick);
      if (pos[other] < j - 1) {
        sigma -= m.facet_weights[f];
      } else {
        sigma += m.facet_weights[f];
      }
    }
    profile.values[j] = profile.values[j - 1] + sigma;
  }

  // Cross-check against the level-set weights; these must agree exactly.
  for (int j = 0; j <= n; ++j) {
    if (profile.values[j] != surface_weight(m, level_set(m, o, j))) {
      throw Error("internal error: incremental profile disagrees with level sets");
    }
  }
  return profile;
}

std::vector<Extremum> extrema(const LambdaProfile& profile) {
  std::vector<Extremum> out;
  const int n = static_cast<int>(profile.values.size()) - 1;
  int lo = 0;
  while (lo <= n) {
    int hi = lo;
    while (hi + 1 <= n && profile.values[hi + 1] == profile.values[lo]) ++hi;
    // The plateau [lo, hi] qualifies only when bounded by strict steps on
    // both sides; the profile ends never qualify.
    if (lo >= 1 && hi <= n - 1) {
      const Rational& value = profile.values[lo];
      const bool rise_in = profile.values[lo - 1] < value;
      const bool fall_out = profile.values[hi + 1] < value;
      // The representative t = lo sits on the plateau edge, so it is
      // extremal by definition.
      if (rise_in && fall_out) {
        out.push_back({Extremum::Kind::Maximum, lo, lo, hi, true, value});
      } else if (!rise_in && !fall_out) {
        out.push_back({Extremum::Kind::Minimum, lo, lo, hi, true, value});
      }
    }
    lo = hi + 1;
  }
  return out;
}

Width width_from_profile(const LambdaProfile& profile) {
  Width w;
  for (const auto& e : extrema(profile)) {
    if (e.kind == Extremum::Kind::Maximum) w.terms.push_back(e.value);
  }
  std::sort(w.terms.begin(), w.terms.end(), std::greater<Rational>());
  return w;
}

Width width_of(const BrickComplex& m, const Ordering& o) {
  return width_from_profile(lambda_profile(m, o));
}

Rational trunk_of(const BrickComplex& m, const Ordering& o) {
  const auto profile = lambda_profile(m, o);
  Rational best(0);
  for (const auto& value : profile.values) best = std::max(best, value);
  return best;
}

int compare_widths(const Width& a, const Width& b) {
  const std::size_t common = std::min(a.terms.size(), b.terms.size());
  for (std::size_t k = 0; k < common; ++k) {
    if (a.terms[k] < b.terms[k]) return -1;
    if (a.terms[k] > b.terms[k]) return 1;
  }
  if (a.terms.size() < b.terms.size()) return -1;
  if (a.terms.size() > b.terms.size()) return 1;
  return 0;
}

Ordering reverse(const Ordering& o) {
  Ordering r = o;
  std::reverse(r.bricks.begin(), r.bricks.end());
  return r;
}

Width width_union(const Width& a, const Width& b) {
  Width u;
  u.terms.reserve(a.terms.size() + b.terms.size());
  u.terms.insert(u.terms.end(), a.terms.begin(), a.terms.end());
  u.terms.insert(u.terms.end(), b.terms.begin(), b.terms.end());
  std::sort(u.terms.begin(), u.terms.end(), std::greater<Rational>());
  return u;
}

std::string width_to_string(const Width& w) {
  std::string out = "(";
  for (std::size_t k = 0; k < w.terms.size(); ++k) {
    if (k) out += ", ";
    out += format_rational(w.terms[k]);
  }
  return out + ")";
}

}  // namespace thinpos
