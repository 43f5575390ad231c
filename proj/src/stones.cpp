#include "selfshuffle/stones.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "selfshuffle/sturmian.hpp"

namespace selfshuffle {

void EmbeddingParams::validate() const { SturmianSpec{alpha, rho}.validate(); }

bool in_K(const CirclePoint& x, const CirclePoint& y, const QuadExt& rho) {
  QuadExt cut = QuadExt(1) - rho;
  int lhs = (x.value() >= cut ? 1 : 0) + (y.value() >= cut ? 1 : 0);
  return lhs == (x.value() + y.value() + rho).floor();
}

namespace {

CirclePoint orbit(std::size_t i, const QuadExt& alpha) {
  return CirclePoint(QuadExt(static_cast<std::int64_t>(i)) * alpha);
}

}  // namespace

bool embedding_vertex(std::size_t i, std::size_t j, const EmbeddingParams& p) {
  if (p.rho == QuadExt(1) && (i == 0 || j == 0)) return true;
  return in_K(orbit(i, p.alpha), orbit(j, p.alpha), p.rho);
}

EmbeddingReport graph_vs_embedding_check(const EmbeddingParams& p, std::size_t n_max) {
  p.validate();
  ParikhTable table(mechanical(p.alpha, p.rho).prefix(n_max));
  EmbeddingReport rep;
  for (std::size_t n = 0; n <= n_max; ++n) {
    for (std::size_t i = 0; i <= n; ++i) {
      bool g = table.vertex2(i, n - i);
      bool e = embedding_vertex(i, n - i, p);
      ++rep.checked;
      if (g != e) {
        rep.ok = false;
        ++rep.mismatch_count;
        if (rep.mismatches.size() < 16) rep.mismatches.push_back({i, n - i, g, e});
      }
    }
  }
  return rep;
}

bool in_regime(const EmbeddingParams& p) {
  QuadExt one(1);
  QuadExt c = one - p.rho;
  QuadExt hi = p.rho < c ? p.rho : c;
  return c / QuadExt(2) < p.alpha && p.alpha < hi;
}

std::string region_name(Region r) {
  switch (r) {
    case Region::D: return "D";
    case Region::T1: return "T1";
    case Region::T2: return "T2";
    case Region::F: return "F";
  }
  return "?";
}

namespace {

// Alternative closed form of T1; its third piece is too large and meets the mirror of the second
bool t1_display_impl(const QuadExt& x, const QuadExt& y, const EmbeddingParams& p) {
  QuadExt one(1), two(2);
  QuadExt c = one - p.rho, e = one - p.rho - p.alpha;
  QuadExt s = x + y;
  bool a = e < x && x <= c && y.sign() >= 0 && y < e && s < c;
  bool b = c <= x && x < one && e <= y && y < c && s < two - p.rho - p.alpha;
  bool d = x.sign() >= 0 && x < c && c <= y && y < one && s >= two - two * p.alpha - p.rho;
  return a || b || d;
}

// T1 rederived from its definition (points outside D whose y-move enters D);
// T2 is the mirror image. With c = 1 - rho and e = c - alpha:
bool t1_closed(const QuadExt& x, const QuadExt& y, const EmbeddingParams& p) {
  QuadExt one(1);
  QuadExt c = one - p.rho, e = c - p.alpha;
  QuadExt s = x + y;
  // y + alpha stays below c and leaves K
  bool a = e < x && x < c && y.sign() >= 0 && y < e && s < c;
  // y + alpha crosses c and leaves K
  bool b = c <= x && x < one && e <= y && y < c && s < one + c - p.alpha;
  // y + alpha wraps past 1: out of K, or into the dead core
  bool d1 = x.sign() >= 0 && x < c && c <= y && y < one && s >= one + c - p.alpha;
  bool d2 = x.sign() >= 0 && x < e && c <= y && y < one - p.alpha + e && s >= one + c - p.alpha - p.alpha;
  return a || b || d1 || d2;
}

bool dead_core(const QuadExt& x, const QuadExt& y, const EmbeddingParams& p) {
  QuadExt e = QuadExt(1) - p.alpha - p.rho;
  return x.sign() >= 0 && x < e && y.sign() >= 0 && y < e && x + y >= e;
}

void require_regime(const EmbeddingParams& p) {
  p.validate();
  if (!in_regime(p)) {
    throw DomainError("region formulas need (1-rho)/2 < alpha < min(rho, 1-rho); got alpha=" + p.alpha.to_string() +
                      " rho=" + p.rho.to_string());
  }
}

bool dead_by_definition(const CirclePoint& x, const CirclePoint& y, const EmbeddingParams& p) {
  if (!in_K(x, y, p.rho)) return true;
  bool d1 = !in_K(x.rotate(p.alpha), y, p.rho);
  bool d2 = !in_K(x, y.rotate(p.alpha), p.rho);
  return d1 && d2;
}

}  // namespace

RegionFlags region_flags(const CirclePoint& x, const CirclePoint& y, const EmbeddingParams& p) {
  require_regime(p);
  RegionFlags f;
  f.in_k = in_K(x, y, p.rho);
  f.dead_core = dead_core(x.value(), y.value(), p);
  f.t1 = t1_closed(x.value(), y.value(), p);
  f.t2 = t1_closed(y.value(), x.value(), p);
  return f;
}

bool t1_display(const CirclePoint& x, const CirclePoint& y, const EmbeddingParams& p) {
  require_regime(p);
  return t1_display_impl(x.value(), y.value(), p);
}

Region region_classify(const CirclePoint& x, const CirclePoint& y, const EmbeddingParams& p) {
  RegionFlags f = region_flags(x, y, p);
  if (!f.in_k || f.dead_core) return Region::D;
  if (f.t1 && f.t2) throw std::logic_error("point lies in both T1 and T2");
  if (f.t1) return Region::T1;
  if (f.t2) return Region::T2;
  return Region::F;
}

Region region_by_definition(const CirclePoint& x, const CirclePoint& y, const EmbeddingParams& p) {
  require_regime(p);
  if (dead_by_definition(x, y, p)) return Region::D;
  bool t1 = dead_by_definition(x, y.rotate(p.alpha), p);
  bool t2 = dead_by_definition(x.rotate(p.alpha), y, p);
  if (t1 && t2) throw std::logic_error("both moves lead into D from a point outside D");
  if (t1) return Region::T1;
  if (t2) return Region::T2;
  return Region::F;
}

TildeResult tilde_map(const CirclePoint& x, const CirclePoint& y, int branch, const EmbeddingParams& p,
                      std::size_t max_steps) {
  if (branch != 1 && branch != 2) throw DomainError("branch must be 1 or 2");
  if (region_classify(x, y, p) != Region::F) throw DomainError("tilde_map starts from a point of F");
  TildeResult r;
  r.x = x;
  r.y = y;
  auto describe = [&] {
    std::ostringstream os;
    for (const auto& s : r.transcript) {
      os << " R" << s.branch << "->(" << s.x.value().to_string() << ", " << s.y.value().to_string() << ")"
         << region_name(s.region);
    }
    return os.str();
  };
  int b = branch;
  while (true) {
    if (b == 1) {
      r.x = r.x.rotate(p.alpha);
      ++r.steps_x;
    } else {
      r.y = r.y.rotate(p.alpha);
      ++r.steps_y;
    }
    Region reg = region_classify(r.x, r.y, p);
    r.transcript.push_back({b, r.x, r.y, reg});
    if (reg == Region::F) return r;
    if (reg == Region::D) throw std::logic_error("tilde_map reached the dead set:" + describe());
    if (r.transcript.size() >= max_steps) throw std::logic_error("tilde_map did not return to F within the step limit");
    b = reg == Region::T1 ? 1 : 2;
  }
}

PathResult path_extract(const EmbeddingParams& p, std::size_t n_max, const SearchOptions& opt) {
  p.validate();
  PathResult res;
  std::vector<CirclePoint> orbit_pts;
  orbit_pts.reserve(n_max + 1);
  CirclePoint cur;
  for (std::size_t i = 0; i <= n_max; ++i, cur = cur.rotate(p.alpha)) orbit_pts.push_back(cur);
  bool one = p.rho == QuadExt(1);
  res.outcome = lattice_search(
      n_max,
      [&](std::size_t i, std::size_t j) {
        if (one && (i == 0 || j == 0)) return true;
        return in_K(orbit_pts[i], orbit_pts[j], p.rho);
      },
      opt);
  if (res.outcome.kind == SearchOutcome::Kind::witness) {
    std::size_t i = 0, j = 0;
    res.path.points.emplace_back(0, 0);
    for (Letter c : res.outcome.steering) {
      (c == 0 ? i : j) += 1;
      res.path.points.emplace_back(i, j);
    }
  }
  res.certified = res.outcome.kind == SearchOutcome::Kind::dead &&
                  (res.outcome.death == SearchOutcome::Death::empty_frontier || p.rho.is_zero() || p.rho == QuadExt(1));
  return res;
}

namespace {

std::string fixed12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", v);
  return buf;
}

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

std::string stones_svg(const EmbeddingParams& p, const StonePath& path, std::size_t max_points) {
  const double size = 400, pad = 20;
  double c = 1.0 - p.rho.to_double();
  auto px = [&](double x) { return num(pad + x * size); };
  auto py = [&](double y) { return num(pad + (1.0 - y) * size); };
  auto poly = [&](std::vector<std::pair<double, double>> pts) {
    std::string s = "<polygon fill=\"#c8d8f0\" stroke=\"#4060a0\" stroke-width=\"0.5\" points=\"";
    for (auto [x, y] : pts) s += px(x) + "," + py(y) + " ";
    s += "\"/>\n";
    return s;
  };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(size + 2 * pad) << "\" height=\""
     << num(size + 2 * pad) << "\">\n";
  os << "<rect x=\"" << pad << "\" y=\"" << pad << "\" width=\"" << size << "\" height=\"" << size
     << "\" fill=\"white\" stroke=\"black\"/>\n";
  // K in the unit square: four pieces split at 1 - rho
  os << poly({{0, 0}, {c, 0}, {0, c}});
  os << poly({{c, 0}, {1, 0}, {1, c}, {c, c}});
  os << poly({{0, c}, {c, c}, {c, 1}, {0, 1}});
  os << poly({{1, c}, {1, 1}, {c, 1}});
  os << "<!-- K for alpha=" << p.alpha.to_string() << " rho=" << p.rho.to_string() << " -->\n";
  std::size_t count = std::min(max_points, path.points.size());
  double prev_x = 0, prev_y = 0;
  for (std::size_t n = 0; n < count; ++n) {
    auto [i, j] = path.points[n];
    double x = (QuadExt(static_cast<std::int64_t>(i)) * p.alpha).frac().to_double();
    double y = (QuadExt(static_cast<std::int64_t>(j)) * p.alpha).frac().to_double();
    if (n > 0) {
      os << "<line x1=\"" << px(prev_x) << "\" y1=\"" << py(prev_y) << "\" x2=\"" << px(x) << "\" y2=\"" << py(y)
         << "\" stroke=\"#d04020\" stroke-width=\"0.6\"/>\n";
    }
    os << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"2\" fill=\"#d04020\"/>\n";
    prev_x = x;
    prev_y = y;
  }
  os << "</svg>\n";
  return os.str();
}

std::string stones_csv(const EmbeddingParams& p, const StonePath& path) {
  std::ostringstream os;
  os << "n,i_n,j_n,x_approx,y_approx\n";
  for (std::size_t n = 0; n < path.points.size(); ++n) {
    auto [i, j] = path.points[n];
    double x = (QuadExt(static_cast<std::int64_t>(i)) * p.alpha).frac().to_double();
    double y = (QuadExt(static_cast<std::int64_t>(j)) * p.alpha).frac().to_double();
    os << n << ',' << i << ',' << j << ',' << fixed12(x) << ',' << fixed12(y) << '\n';
  }
  return os.str();
}

}  // namespace selfshuffle
