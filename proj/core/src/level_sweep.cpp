#include "reebsnake/level_sweep.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "reebsnake/algebra.hpp"
#include "reebsnake/error.hpp"
#include "reebsnake/reeb_tree.hpp"

namespace reebsnake {

std::string_view to_string(Side s) { return s == Side::Left ? "left" : "right"; }
std::string_view to_string(EventKind k) { return k == EventKind::Crest ? "crest" : "valley"; }

namespace {

constexpr int kMaxBisections = 200;

std::vector<IsolatingInterval> real_roots(const UnivariatePolynomial& sqf) {
  if (sqf.degree() <= 0) return {};
  return isolate_roots(sqf);
}

UnivariatePolynomial sqf(const UnivariatePolynomial& p) { return p.degree() <= 0 ? p : squarefree_part(p); }

int sign_at_root(const UnivariatePolynomial& q, const UnivariatePolynomial& p, IsolatingInterval& y) {
  for (int i = 0; i < kMaxBisections; ++i) {
    if (int s = enclose(q, Interval::of(y)).certain_sign()) return s;
    y = bisect(y, p);
  }
  throw Error(ErrorCode::DegenerateTangency, "level value at a polar root could not be signed");
}

int distinct_real_roots(const UnivariatePolynomial& p) {
  if (p.degree() <= 0) return 0;
  Rational b = root_bound(p);
  return sturm_count(p, -b, b);
}

bool overlaps(const IsolatingInterval& a, const IsolatingInterval& b) { return a.lo < b.hi && b.lo < a.hi; }

// Number of roots of q lying below each polar root; both lists get refined until disjoint.
std::vector<int> segment_of(std::vector<IsolatingInterval>& polar, const UnivariatePolynomial& pp,
                            std::vector<IsolatingInterval>& groots, const UnivariatePolynomial& gq) {
  std::vector<int> out;
  for (auto& p : polar) {
    for (int it = 0;; ++it) {
      if (it > kMaxBisections) throw Error(ErrorCode::DegenerateTangency, "polar root meets the level curve");
      bool clash = false;
      for (auto& g : groots) {
        if (overlaps(p, g)) {
          clash = true;
          g = bisect(g, gq);
        }
      }
      if (!clash) break;
      p = bisect(p, pp);
    }
    int below = 0;
    for (const auto& g : groots) below += g.hi <= p.lo ? 1 : 0;
    out.push_back(below);
  }
  return out;
}

struct Hit {
  int branch = 0;
  IsolatingInterval y_lo_root;
  IsolatingInterval y_hi_root;
  Interval y;
};

struct Certified {
  std::vector<Hit> hits;
  UnivariatePolynomial polar_lo;
  std::vector<IsolatingInterval> polar_roots_lo;
};

struct PairChange {
  bool appears = false;
  int position = 0;  // index of the lower root of the pair in the list that contains it
  Interval y;
};

// Tangency machinery for the half-plane x > 0 of h.
class SideEngine {
 public:
  SideEngine(BivariatePolynomial h, Rational eps) : h_(std::move(h)), eps_(std::move(eps)) {
    if (eps_ <= 0) throw Error(ErrorCode::InvalidArgument, "epsilon must be positive");
    if (h_.degree_in(Variable::Y) < 2) throw Error(ErrorCode::ConstantInY, "f must have degree >= 2 in y");
    if (!h_.y_coefficients().back().is_constant())
      throw Error(ErrorCode::VerticalAsymptote, "leading coefficient in y depends on x");
    g_ = h_ - BivariatePolynomial::constant(eps_);
    hy_ = h_.partial(Variable::Y);
    hyy_ = hy_.partial(Variable::Y);
    hx_ = h_.partial(Variable::X);
    UnivariatePolynomial res = resultant_y(g_, hy_);
    if (res.is_zero()) throw Error(ErrorCode::DegenerateTangency, "level curve shares a component with the polar curve");
    r_ = sqf(res);
    UnivariatePolynomial disc = resultant_y(hy_, hyy_);
    if (disc.is_zero()) throw Error(ErrorCode::NonReducedPolar, "polar curve has a repeated component");
    if (!disc.is_constant()) {
      dp_ = sqf(disc);
      common_ = gcd(r_, *dp_);
    }
    lc_sign_ = sign(h_.y_coefficients().back().coefficient(0));
    deg_y_ = h_.degree_in(Variable::Y);
  }

  const BivariatePolynomial& h() const { return h_; }
  const BivariatePolynomial& g() const { return g_; }
  const BivariatePolynomial& hy() const { return hy_; }
  const UnivariatePolynomial& eliminant() const { return r_; }
  const Rational& epsilon() const { return eps_; }
  int sign_below_all_roots() const { return (deg_y_ % 2 == 0) ? lc_sign_ : -lc_sign_; }

  void check_origin() const {
    if (r_.is_constant() || r_(Rational(0)) != 0) return;
    UnivariatePolynomial c = gcd(g_.at_x(Rational(0)), hy_.at_x(Rational(0)));
    if (c.degree() >= 1 && !real_roots(sqf(c)).empty())
      throw Error(ErrorCode::EventAtZero, "a tangency lies on the line x = 0");
  }

  std::vector<IsolatingInterval> positive_roots() const {
    if (r_.is_constant()) return {};
    return isolate_roots(r_, Rational(0), root_bound(r_));
  }

  // Positive number below every nonzero root of the eliminant.
  Rational below_first_root() const {
    UnivariatePolynomial p = r_;
    while (!p.is_constant() && p.coefficient(0) == 0) p = exact_quotient(p, UnivariatePolynomial{0, 1});
    if (p.is_constant()) return Rational(1);
    return 1 / root_bound(p.reversed());
  }

  IsolatingInterval with_signs(IsolatingInterval x) const {
    x.sign_left = r_.sign_at(x.lo);
    x.sign_right = r_.sign_at(x.hi);
    return x;
  }

  Certified certify(IsolatingInterval& x) const {
    for (int iter = 0;; ++iter) {
      if (iter > kMaxBisections) throw Error(ErrorCode::DegenerateTangency, "tangency could not be certified");
      if (dp_ && !certainly_no_root(*dp_, x.lo, x.hi)) {
        if (common_->degree() >= 1 && !isolate_roots(*common_, x.lo, x.hi).empty())
          throw Error(ErrorCode::DegenerateTangency, "tangency at a singular point of the polar projection");
        x = bisect(x, r_);
        continue;
      }
      Certified c;
      c.polar_lo = sqf(hy_.at_x(x.lo));
      UnivariatePolynomial polar_hi = sqf(hy_.at_x(x.hi));
      c.polar_roots_lo = real_roots(c.polar_lo);
      std::vector<IsolatingInterval> roots_hi = real_roots(polar_hi);
      if (c.polar_roots_lo.size() != roots_hi.size()) {
        x = bisect(x, r_);
        continue;
      }
      UnivariatePolynomial glo = g_.at_x(x.lo);
      UnivariatePolynomial ghi = g_.at_x(x.hi);
      for (size_t i = 0; i < roots_hi.size(); ++i) {
        int s_lo = sign_at_root(glo, c.polar_lo, c.polar_roots_lo[i]);
        int s_hi = sign_at_root(ghi, polar_hi, roots_hi[i]);
        if (s_lo != s_hi) c.hits.push_back({static_cast<int>(i), c.polar_roots_lo[i], roots_hi[i], {}});
      }
      bool ok = true;
      const Rational w = x.width();
      for (auto& hit : c.hits) {
        hit.y_lo_root = refine(hit.y_lo_root, c.polar_lo, w);
        hit.y_hi_root = refine(hit.y_hi_root, polar_hi, w);
        hit.y = hull(Interval::of(hit.y_lo_root), Interval::of(hit.y_hi_root));
        ok = ok && certainly_no_root(hy_.at_y(hit.y.lo), x.lo, x.hi) &&
             certainly_no_root(hy_.at_y(hit.y.hi), x.lo, x.hi) &&
             descartes_bound(c.polar_lo, hit.y.lo, hit.y.hi) == 1 &&
             descartes_bound(polar_hi, hit.y.lo, hit.y.hi) == 1;
      }
      for (size_t k = 1; k < c.hits.size(); ++k) ok = ok && c.hits[k - 1].y.hi < c.hits[k].y.lo;
      if (ok) return c;
      x = bisect(x, r_);
    }
  }

  static const Hit& find_branch(const Certified& c, int branch) {
    for (const auto& h : c.hits) {
      if (h.branch == branch) return h;
    }
    throw Error(ErrorCode::InconsistentTransitions, "tangency branch lost during refinement");
  }

  EventKind classify(IsolatingInterval& x, int branch) const {
    for (int iter = 0;; ++iter) {
      if (iter > kMaxBisections) throw Error(ErrorCode::DegenerateTangency, "curvature sign could not be certified");
      const Hit hit = find_branch(certify(x), branch);
      int syy = enclose(hyy_, Interval::of(x), hit.y).certain_sign();
      int sx = enclose(hx_, Interval::of(x), hit.y).certain_sign();
      if (syy != 0 && sx != 0) return syy * sx < 0 ? EventKind::Crest : EventKind::Valley;
      x = bisect(x, r_);
    }
  }

  PairChange locate_pair(IsolatingInterval& x, int branch) const {
    for (int iter = 0;; ++iter) {
      if (iter > kMaxBisections) throw Error(ErrorCode::DegenerateTangency, "level roots could not be separated");
      const Hit hit = find_branch(certify(x), branch);
      UnivariatePolynomial qlo = sqf(g_.at_x(x.lo));
      UnivariatePolynomial qhi = sqf(g_.at_x(x.hi));
      const Rational c = hit.y.lo + (hit.y.hi - hit.y.lo) / 2;
      for (long j = 0; j < kMaxBisections; ++j) {
        const Rational rad = pow2(-j);
        if (rad <= hit.y.width()) break;
        Interval win{c - rad, c + rad};
        if (!certainly_no_root(g_.at_y(win.lo), x.lo, x.hi) || !certainly_no_root(g_.at_y(win.hi), x.lo, x.hi))
          continue;
        int in_lo = qlo.degree() <= 0 ? 0 : sturm_count(qlo, win.lo, win.hi);
        int in_hi = qhi.degree() <= 0 ? 0 : sturm_count(qhi, win.lo, win.hi);
        // A wide window can also catch a pair changing at a tied tangency; shrink it.
        if (std::min(in_lo, in_hi) != 0 || std::max(in_lo, in_hi) != 2) continue;
        PairChange out;
        out.appears = in_hi == 2;
        const UnivariatePolynomial& q = out.appears ? qhi : qlo;
        Rational b = root_bound(q);
        out.position = sturm_count(q, -b, win.lo);
        out.y = hit.y;
        return out;
      }
      x = bisect(x, r_);
    }
  }

 private:
  BivariatePolynomial h_;
  Rational eps_;
  BivariatePolynomial g_, hy_, hyy_, hx_;
  UnivariatePolynomial r_;
  std::optional<UnivariatePolynomial> dp_;
  std::optional<UnivariatePolynomial> common_;
  int lc_sign_ = 1;
  int deg_y_ = 0;
};

// Which segments between consecutive roots of g(x, .) belong to D and under which id.
struct Threading {
  int n = 0;
  int sign0 = 1;
  std::vector<int> seg;
  int next_id = 0;

  int seg_sign(int k) const { return k % 2 == 0 ? sign0 : -sign0; }
  bool any_d() const {
    return std::any_of(seg.begin(), seg.end(), [](int id) { return id >= 0; });
  }
};

struct RunOptions {
  bool strict = true;
  std::optional<Rational> stop;
};

struct SideRun {
  SideSweep sweep;  // coordinates of h
  FiberSlice stop_slice;
};

FiberSlice slice_at(const SideEngine& e, const Threading& st, const Rational& x) {
  UnivariatePolynomial q = sqf(e.g().at_x(x));
  auto roots = real_roots(q);
  if (static_cast<int>(roots.size()) != st.n)
    throw Error(ErrorCode::InconsistentTransitions, "fibre root count changed between tangencies");
  FiberSlice s;
  s.x = x;
  for (int k = 1; k < st.n; ++k) {
    if (st.seg[k] >= 0) s.intervals.push_back({roots[k - 1], roots[k], st.seg[k]});
  }
  return s;
}

void check_gap(const SideEngine& e, const Threading& st, const Rational& a, const Rational& b) {
  std::vector<Rational> pts;
  if (a < b) {
    Rational m = simplest_between(a, b);
    pts = {simplest_between(a, m), m, simplest_between(m, b)};
  } else {
    pts = {a};
  }
  for (const auto& p : pts) {
    if (distinct_real_roots(sqf(e.g().at_x(p))) != st.n)
      throw Error(ErrorCode::InconsistentTransitions, "fibre root count changed between tangencies");
  }
}

// Indices (bottom to top) of the polar roots over x.lo that sit inside D.
std::vector<int> polar_in_d(const SideEngine& e, const Threading& st, Certified& c, const Rational& x) {
  UnivariatePolynomial q = sqf(e.g().at_x(x));
  auto groots = real_roots(q);
  if (static_cast<int>(groots.size()) != st.n)
    throw Error(ErrorCode::InconsistentTransitions, "fibre root count changed between tangencies");
  auto seg = segment_of(c.polar_roots_lo, c.polar_lo, groots, q);
  std::vector<int> out;
  for (size_t i = 0; i < seg.size(); ++i) {
    if (st.seg[seg[i]] >= 0) out.push_back(static_cast<int>(i));
  }
  return out;
}

SideRun run_side(const BivariatePolynomial& h, const Rational& eps, Side side, const RunOptions& opt) {
  SideEngine e(h, eps);
  e.check_origin();
  SideRun out;
  SideSweep& sw = out.sweep;
  sw.side = side;

  // Fibre at x = 0 and the segment holding the origin.
  UnivariatePolynomial q0 = sqf(e.g().at_x(Rational(0)));
  auto roots0 = real_roots(q0);
  for (auto& r : roots0) {
    while (r.lo < 0 && 0 < r.hi) r = bisect(r, q0);
  }
  Threading st;
  st.n = static_cast<int>(roots0.size());
  st.sign0 = e.sign_below_all_roots();
  st.seg.assign(st.n + 1, -1);
  int k0 = 0;
  for (const auto& r : roots0) k0 += r.hi <= 0 ? 1 : 0;
  if (k0 == 0 || k0 == st.n) throw Error(ErrorCode::UnboundedComponent, "the component of the origin is unbounded");
  if (st.seg_sign(k0) >= 0) throw Error(ErrorCode::NotVanishingAtOrigin, "origin is not below the level");
  st.seg[k0] = 0;
  st.next_id = 1;
  sw.initial_interval = 0;
  sw.slices.push_back({Rational(0), {{roots0[k0 - 1], roots0[k0], 0}}});

  auto roots = e.positive_roots();

  // Polar half-branches inside D just right of the origin.
  std::vector<int> labels;
  if (opt.strict) {
    Rational xs = e.below_first_root();
    Certified c;
    c.polar_lo = sqf(e.hy().at_x(xs));
    c.polar_roots_lo = real_roots(c.polar_lo);
    auto in_d = polar_in_d(e, st, c, xs);
    sw.half_branches = static_cast<int>(in_d.size());
    for (int i = 1; i <= sw.half_branches; ++i) labels.push_back(i);
  }
  // Labels follow polar half-branches outwards; a fold of the polar curve inside D ends the tracking.
  bool tracking = opt.strict;

  struct Pending {
    TangencyEvent ev;
    Transition tr;
    int label = 0;
  };
  std::vector<Pending> found;
  auto x_poly = std::make_shared<const UnivariatePolynomial>(e.eliminant());

  for (size_t idx = 0; idx < roots.size(); ++idx) {
    if (!st.any_d()) break;
    IsolatingInterval x = roots[idx];
    if (opt.stop) {
      const Rational& s = *opt.stop;
      if (x.lo > s) break;
      if (x.hi >= s) {
        if (e.eliminant()(s) == 0) {
          if (!e.certify(x).hits.empty()) throw Error(ErrorCode::XAtEvent, "abscissa meets a tangency");
          continue;
        }
        while (x.lo < s && s < x.hi) x = bisect(x, e.eliminant());
        if (x.lo >= s) break;
      }
    }
    Certified c = e.certify(x);
    if (c.hits.empty()) continue;
    if (c.hits.size() > 1 && opt.strict)
      throw Error(ErrorCode::NonGenericTie, "two tangencies share an abscissa");

    std::vector<PairChange> changes;
    for (const auto& hit : c.hits) changes.push_back(e.locate_pair(x, hit.branch));

    std::vector<int> in_d;
    if (opt.strict) c = e.certify(x);
    if (tracking) {
      in_d = polar_in_d(e, st, c, x.lo);
      tracking = in_d.size() == labels.size();
    }

    int offset = 0;
    bool had_d = false;
    for (size_t h_i = 0; h_i < changes.size(); ++h_i) {
      const PairChange& ch = changes[h_i];
      std::optional<Transition> tr;
      if (!ch.appears) {
        int p = ch.position + offset;
        if (st.seg_sign(p + 1) < 0) {
          if (st.seg[p + 1] >= 0) tr = Transition{TransitionType::Dies, st.seg[p + 1], {}};
          st.seg[p] = -1;
        } else {
          int a = st.seg[p], b = st.seg[p + 2];
          if ((a >= 0 || b >= 0) && opt.strict)
            throw Error(ErrorCode::NotAsymptotic, "two parts of D merge");
          st.seg[p] = a >= 0 && b >= 0 ? std::min(a, b) : std::max(a, b);
        }
        st.seg.erase(st.seg.begin() + p + 1, st.seg.begin() + p + 3);
        st.n -= 2;
        offset -= 2;
      } else {
        int p = ch.position;
        int parent = st.seg[p];
        if (st.seg_sign(p) < 0 && parent >= 0) {
          int lower = st.next_id++;
          int upper = st.next_id++;
          tr = Transition{TransitionType::Split, parent, {upper, lower}};
          st.seg[p] = lower;
          st.seg.insert(st.seg.begin() + p + 1, {-1, upper});
        } else {
          st.seg[p] = -1;
          st.seg.insert(st.seg.begin() + p + 1, {-1, -1});
        }
        st.n += 2;
        offset += 2;
      }
      if (!tr) continue;
      had_d = true;

      TangencyEvent ev;
      ev.x_box = e.with_signs(x);
      ev.y_box = IsolatingInterval{ch.y.lo, ch.y.hi, 0, 0};
      ev.side = side;
      ev.epsilon = eps;
      ev.x_poly = x_poly;
      int label = 0;
      if (opt.strict) {
        const int branch = c.hits[h_i].branch;
        auto pos = std::find(in_d.begin(), in_d.end(), branch);
        if (tracking && pos == in_d.end()) tracking = false;
        if (tracking) {
          auto li = labels.begin() + (pos - in_d.begin());
          label = *li;
          labels.erase(li);
          in_d.erase(pos);
        }
        ev.kind = e.classify(x, branch);
        ev.x_box = e.with_signs(x);
        const Hit hit = SideEngine::find_branch(e.certify(x), branch);
        ev.y_box = IsolatingInterval{hit.y.lo, hit.y.hi, 0, 0};
        bool split = tr->type == TransitionType::Split;
        if (split != (*ev.kind == EventKind::Crest))
          throw Error(ErrorCode::InconsistentTransitions, "tangency kind disagrees with the fibre change");
      }
      UnivariatePolynomial polar_at = sqf(e.hy().at_x(x.lo));
      ev.y_box.sign_left = polar_at.sign_at(ev.y_box.lo);
      ev.y_box.sign_right = polar_at.sign_at(ev.y_box.hi);
      found.push_back({ev, *tr, label});
    }
    roots[idx] = x;

    const bool last = idx + 1 == roots.size();
    Rational next_lo = last ? x.hi + 1 : roots[idx + 1].lo;
    if (opt.stop && *opt.stop < next_lo) next_lo = *opt.stop;
    if (opt.strict) check_gap(e, st, x.hi, next_lo);
    // Isolating intervals may share an endpoint, which is never a root.
    if (had_d) sw.slices.push_back(slice_at(e, st, x.hi < next_lo ? simplest_between(x.hi, next_lo) : x.hi));
  }

  if (opt.strict) {
    if (st.any_d()) throw Error(ErrorCode::UnboundedComponent, "D does not close up on this side");
    if (!labels.empty()) tracking = false;
    sw.asymptotic = tracking;
  }
  if (opt.stop) {
    out.stop_slice = *opt.stop == 0 ? sw.slices.front() : slice_at(e, st, *opt.stop);
    if (!st.any_d()) out.stop_slice.intervals.clear();
  }

  std::vector<int> order(found.size());
  for (size_t i = 0; i < found.size(); ++i) order[i] = static_cast<int>(i);
  if (opt.strict) {
    // Rank along the level curve: contour of the side tree, lower child first.
    std::map<int, int> terminal;
    for (size_t i = 0; i < found.size(); ++i) {
      if (!terminal.emplace(found[i].tr.parent, static_cast<int>(i)).second)
        throw Error(ErrorCode::InconsistentTransitions, "fibre interval terminates twice");
    }
    order.clear();
    std::function<void(int)> visit = [&](int interval) {
      auto it = terminal.find(interval);
      if (it == terminal.end()) throw Error(ErrorCode::InconsistentTransitions, "fibre interval never terminates");
      const Transition& tr = found[it->second].tr;
      if (tr.type == TransitionType::Split) visit(tr.children[1]);
      order.push_back(it->second);
      if (tr.type == TransitionType::Split) visit(tr.children[0]);
    };
    visit(sw.initial_interval);
    if (order.size() != found.size()) throw Error(ErrorCode::InconsistentTransitions, "tangency outside the tree of D");
    for (size_t i = 0; i < order.size(); ++i) {
      found[order[i]].ev.branch_rank = static_cast<int>(i) + 1;
      if (sw.asymptotic && found[order[i]].label != static_cast<int>(i) + 1)
        throw Error(ErrorCode::BranchOrderMismatch, "contour order differs from the order of polar half-branches");
    }
  }
  // Closed boxes, strictly positive and pairwise disjoint.
  for (auto& f : found) {
    while (f.ev.x_box.lo <= 0) f.ev.x_box = bisect(f.ev.x_box, *x_poly);
  }
  // Ties only survive in non-strict runs, which never report events.
  for (bool clash = opt.strict; clash;) {
    clash = false;
    for (size_t i = 0; i < found.size(); ++i) {
      for (size_t j = 0; j < i; ++j) {
        IsolatingInterval& a = found[i].ev.x_box;
        IsolatingInterval& b = found[j].ev.x_box;
        if (a.hi < b.lo || b.hi < a.lo) continue;
        clash = true;
        a = bisect(a, *x_poly);
        b = bisect(b, *x_poly);
      }
    }
  }
  std::vector<int> rank_of(found.size());
  for (size_t i = 0; i < order.size(); ++i) {
    sw.events.push_back(found[order[i]].ev);
    sw.transitions.push_back(found[order[i]].tr);
    rank_of[order[i]] = static_cast<int>(i);
  }
  for (size_t i = 0; i < found.size(); ++i) sw.sweep_order.push_back(rank_of[i]);
  return out;
}

IsolatingInterval mirror(const IsolatingInterval& x) { return {-x.hi, -x.lo, x.sign_right, x.sign_left}; }

// Maps a sweep computed on f(-x, y) back to the left half-plane of f.
void mirror_side(SideSweep& s) {
  for (auto& ev : s.events) {
    ev.x_box = mirror(ev.x_box);
    ev.x_poly = std::make_shared<const UnivariatePolynomial>(ev.x_poly->reflected());
  }
  for (auto& sl : s.slices) sl.x = -sl.x;
}

void check_side(const SideSweep& s) {
  const auto& ev = s.events;
  if (ev.empty()) throw Error(ErrorCode::InconsistentTransitions, "no tangency on the " + std::string(to_string(s.side)) + " side");
  for (size_t i = 0; i < ev.size(); ++i) {
    if (ev[i].branch_rank != static_cast<int>(i) + 1)
      throw Error(ErrorCode::InconsistentTransitions, "branch ranks are not consecutive");
  }
  if (ev.front().kind != EventKind::Valley || ev.back().kind != EventKind::Valley)
    throw Error(ErrorCode::EndpointNotValley, "first and last tangencies must be valleys");
  for (size_t i = 1; i < ev.size(); ++i) {
    if (ev[i].kind == ev[i - 1].kind)
      throw Error(ErrorCode::AlternationViolation, "crests and valleys do not alternate");
  }
}

void require_reduced_polar(const BivariatePolynomial& f) {
  if (f.degree_in(Variable::Y) <= 0) throw Error(ErrorCode::ConstantInY, "f does not depend on y");
  if (!is_squarefree(f.partial(Variable::Y))) throw Error(ErrorCode::NonReducedPolar, "polar curve is not reduced");
}

BivariatePolynomial oriented(const BivariatePolynomial& f, Side side) {
  return side == Side::Right ? f : f.reflected_x();
}

}  // namespace

std::vector<TangencyEvent> tangency_events(const BivariatePolynomial& f, const Rational& epsilon) {
  require_reduced_polar(f);
  std::vector<TangencyEvent> out;
  for (Side side : {Side::Left, Side::Right}) {
    SideEngine e(oriented(f, side), epsilon);
    e.check_origin();
    auto x_poly = std::make_shared<const UnivariatePolynomial>(
        side == Side::Right ? e.eliminant() : e.eliminant().reflected());
    for (auto x : e.positive_roots()) {
      x = refine(x, e.eliminant(), pow2(-20));
      Certified c = e.certify(x);
      for (const auto& hit : c.hits) {
        TangencyEvent ev;
        ev.x_box = side == Side::Right ? e.with_signs(x) : mirror(e.with_signs(x));
        UnivariatePolynomial polar_at = sqf(e.hy().at_x(x.lo));
        ev.y_box = IsolatingInterval{hit.y.lo, hit.y.hi, polar_at.sign_at(hit.y.lo), polar_at.sign_at(hit.y.hi)};
        ev.side = side;
        ev.epsilon = epsilon;
        ev.x_poly = x_poly;
        out.push_back(ev);
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const TangencyEvent& a, const TangencyEvent& b) {
    if (a.x_box.lo != b.x_box.lo) return a.x_box.lo < b.x_box.lo;
    return a.y_box.lo < b.y_box.lo;
  });
  return out;
}

EventKind classify_event(const BivariatePolynomial& f, const TangencyEvent& e) {
  SideEngine eng(oriented(f, e.side), e.epsilon);
  IsolatingInterval x = e.side == Side::Right ? e.x_box : mirror(e.x_box);
  x = eng.with_signs(x);
  if (x.lo < 0 || x.sign_left == x.sign_right || x.sign_left == 0)
    throw Error(ErrorCode::InvalidArgument, "event box does not isolate a tangency abscissa");
  Certified c = eng.certify(x);
  for (const auto& hit : c.hits) {
    if (hit.y.lo <= e.y_box.hi && e.y_box.lo <= hit.y.hi) return eng.classify(x, hit.branch);
  }
  throw Error(ErrorCode::InvalidArgument, "event box holds no tangency");
}

FiberSlice fiber_components(const BivariatePolynomial& f, const Rational& epsilon, const Rational& x0) {
  Side side = x0 < 0 ? Side::Left : Side::Right;
  RunOptions opt;
  opt.strict = false;
  opt.stop = abs(x0);
  FiberSlice s = run_side(oriented(f, side), epsilon, side, opt).stop_slice;
  s.x = x0;
  return s;
}

SweepResult sweep(const BivariatePolynomial& f, const Rational& epsilon) {
  if (epsilon <= 0) throw Error(ErrorCode::InvalidArgument, "epsilon must be positive");
  require_reduced_polar(f);
  SweepResult out;
  out.epsilon = epsilon;
  out.right = run_side(f, epsilon, Side::Right, {}).sweep;
  out.left = run_side(f.reflected_x(), epsilon, Side::Left, {}).sweep;
  mirror_side(out.left);
  check_side(out.right);
  check_side(out.left);
  return out;
}

namespace {

// |x*| <= box, decided exactly from the eliminant.
bool abscissa_inside(const TangencyEvent& ev, const Rational& box) {
  const IsolatingInterval& x = ev.x_box;
  for (const Rational& edge : {Rational(-box), box}) {
    if (!(x.lo < edge && edge < x.hi)) continue;
    int s = ev.x_poly->sign_at(edge);
    if (s == 0) return true;
    // x* lies on the side of edge where the sign differs from the one at edge.
    bool root_above = s == x.sign_left;
    return edge == box ? !root_above : root_above;
  }
  return -box <= x.lo && x.hi <= box;
}

}  // namespace

bool events_inside(const SweepResult& s, const Rational& box) {
  for (const SideSweep* side : {&s.left, &s.right}) {
    for (const auto& ev : side->events) {
      if (!abscissa_inside(ev, box)) return false;
      if (abs(ev.y_box.mid()) > box) return false;
    }
  }
  return true;
}

Rational choose_epsilon(const BivariatePolynomial& f, const UnitDirection& d, const EpsilonOptions& options) {
  if (options.epsilon0 <= 0 || options.stable_levels < 1)
    throw Error(ErrorCode::InvalidArgument, "invalid epsilon search options");
  const BivariatePolynomial g = rotate(f, d);
  require_reduced_polar(g);
  std::vector<std::optional<PoincareReebTree>> trees;
  for (int k = 0; k <= options.k_max; ++k) {
    const Rational eps = options.epsilon0 * pow2(-k);
    std::optional<PoincareReebTree> t;
    try {
      SweepResult s = sweep(g, eps);
      if (events_inside(s, options.box)) t = build_tree(s, d);
    } catch (const Error& err) {
      if (err.code() == ErrorCode::VerticalAsymptote || err.code() == ErrorCode::NonReducedPolar) throw;
    }
    trees.push_back(std::move(t));
    const int n = options.stable_levels;
    if (static_cast<int>(trees.size()) < n) continue;
    bool stable = true;
    for (int i = static_cast<int>(trees.size()) - n; i < static_cast<int>(trees.size()); ++i) {
      stable = stable && trees[i].has_value();
      if (stable && i > static_cast<int>(trees.size()) - n) stable = tree_isomorphic(*trees[i - 1], *trees[i]);
    }
    if (stable) return options.epsilon0 * pow2(-(k - n + 1));
  }
  throw Error(ErrorCode::NoStabilization,
              "tree did not stabilise within " + std::to_string(options.k_max) + " halvings of epsilon");
}

}  // namespace reebsnake
