#include "sigmaper/space.hpp"

#include "sigmaper/errors.hpp"

#include <algorithm>
#include <cctype>

namespace sigma {

SPoint SPoint::real(const Q& x) {
  SPoint p;
  p.branch_ = false;
  p.v_ = x;
  p.v_.canonicalize();
  return p;
}

SPoint SPoint::branch(long base, const Q& height) {
  if (height < 0 || height > 1)
    throw Error(ErrorCode::InvalidArgument, "branch height " + to_string(height) + " outside [0,1]");
  if (height == 0) return real(Q(base));
  SPoint p;
  p.branch_ = true;
  p.base_ = base;
  p.v_ = height;
  p.v_.canonicalize();
  return p;
}

const Q& SPoint::x() const {
  if (branch_) throw Error(ErrorCode::InvalidArgument, "x() of a branch point");
  return v_;
}

long SPoint::base() const {
  if (!branch_) throw Error(ErrorCode::InvalidArgument, "base() of a real point");
  return base_;
}

const Q& SPoint::height() const {
  if (!branch_) throw Error(ErrorCode::InvalidArgument, "height() of a real point");
  return v_;
}

Q SPoint::re() const { return branch_ ? Q(base_) : v_; }

SPoint SPoint::translate(long k) const {
  SPoint p = *this;
  if (branch_)
    p.base_ += k;
  else
    p.v_ += k;
  return p;
}

bool SPoint::in_B() const { return branch_ || is_integer(v_); }

std::string SPoint::str() const {
  if (branch_) return "B(" + std::to_string(base_) + "," + to_string(v_) + ")";
  return "R(" + to_string(v_) + ")";
}

SPoint SPoint::parse(std::string_view text) {
  auto bad = [&]() { return Error(ErrorCode::SyntaxError, "bad point '" + std::string(text) + "'"); };
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.size() < 4 || s[1] != '(' || s.back() != ')') throw bad();
  std::string inner = s.substr(2, s.size() - 3);
  if (s[0] == 'R') {
    if (inner.find(',') != std::string::npos) throw bad();
    return real(parse_q(inner));
  }
  if (s[0] == 'B') {
    auto comma = inner.find(',');
    if (comma == std::string::npos) throw bad();
    Q m = parse_q(inner.substr(0, comma));
    if (!is_integer(m)) throw bad();
    Q h = parse_q(inner.substr(comma + 1));
    if (h < 0 || h > 1) throw Error(ErrorCode::SyntaxError, "branch height outside [0,1] in '" + s + "'");
    return branch(to_long(m.get_num()), h);
  }
  throw bad();
}

bool operator==(const SPoint& a, const SPoint& b) {
  return a.branch_ == b.branch_ && a.base_ == b.base_ && a.v_ == b.v_;
}

bool operator<(const SPoint& a, const SPoint& b) {
  Q ra = a.re(), rb = b.re();
  if (ra != rb) return ra < rb;
  if (a.branch_ != b.branch_) return !a.branch_;
  if (!a.branch_) return false;
  return a.v_ < b.v_;
}

Q re(const SPoint& p) { return p.re(); }

static Q qabs(const Q& q) { return q < 0 ? Q(-q) : q; }

Q dist(const SPoint& p, const SPoint& q) {
  if (p.is_branch() && q.is_branch() && p.base() == q.base()) return qabs(p.height() - q.height());
  Q hp = p.is_branch() ? p.height() : Q(0);
  Q hq = q.is_branch() ? q.height() : Q(0);
  return hp + qabs(p.re() - q.re()) + hq;
}

Q Segment::length() const { return qabs(to - from); }

SPoint Segment::start() const { return at_offset(0); }
SPoint Segment::end() const { return at_offset(length()); }

SPoint Segment::at_offset(const Q& s) const {
  Q v = forward() ? Q(from + s) : Q(from - s);
  return branch ? SPoint::branch(base, v) : SPoint::real(v);
}

std::vector<Segment> SInterval::segments() const {
  std::vector<Segment> out;
  if (a_ == b_) return out;
  if (a_.is_branch() && b_.is_branch() && a_.base() == b_.base()) {
    out.push_back({true, a_.base(), a_.height(), b_.height()});
    return out;
  }
  // A real base point is treated as height 0 of its own branch only when the
  // other end sits on that branch.
  if (a_.is_branch() && b_.is_real() && b_.x() == a_.base()) {
    out.push_back({true, a_.base(), a_.height(), Q(0)});
    return out;
  }
  if (b_.is_branch() && a_.is_real() && a_.x() == b_.base()) {
    out.push_back({true, b_.base(), Q(0), b_.height()});
    return out;
  }
  if (a_.is_branch()) out.push_back({true, a_.base(), a_.height(), Q(0)});
  Q ra = a_.re(), rb = b_.re();
  if (ra != rb) out.push_back({false, 0, ra, rb});
  if (b_.is_branch()) out.push_back({true, b_.base(), Q(0), b_.height()});
  return out;
}

Q SInterval::length() const {
  Q l = 0;
  for (const auto& s : segments()) l += s.length();
  return l;
}

SPoint SInterval::at(const Q& s) const {
  if (s < 0) throw Error(ErrorCode::InvalidArgument, "negative arc offset");
  Q rest = s;
  auto segs = segments();
  if (segs.empty()) {
    if (s != 0) throw Error(ErrorCode::InvalidArgument, "offset beyond degenerate arc");
    return a_;
  }
  for (const auto& seg : segs) {
    Q l = seg.length();
    if (rest <= l) return seg.at_offset(rest);
    rest -= l;
  }
  throw Error(ErrorCode::InvalidArgument, "arc offset beyond length");
}

static bool between(const Q& v, const Q& a, const Q& b) {
  return (a <= v && v <= b) || (b <= v && v <= a);
}

static bool segment_contains(const Segment& seg, const SPoint& p) {
  if (seg.branch) {
    if (p.is_branch()) return p.base() == seg.base && between(p.height(), seg.from, seg.to);
    return p.x() == seg.base && between(Q(0), seg.from, seg.to);
  }
  if (p.is_branch()) return false;
  return between(p.x(), seg.from, seg.to);
}

bool SInterval::contains(const SPoint& p) const {
  if (p == a_ || p == b_) return true;
  for (const auto& seg : segments())
    if (segment_contains(seg, p)) return true;
  return false;
}

Q SInterval::offset_of(const SPoint& p) const {
  Q acc = 0;
  for (const auto& seg : segments()) {
    if (segment_contains(seg, p)) {
      Q v = p.is_branch() ? p.height() : (seg.branch ? Q(0) : p.x());
      return acc + qabs(v - seg.from);
    }
    acc += seg.length();
  }
  if (p == a_) return 0;
  throw Error(ErrorCode::InvalidArgument, p.str() + " not on arc " + str());
}

std::string SInterval::str() const { return "[" + a_.str() + ", " + b_.str() + "]"; }

SInterval hull(const SPoint& p, const SPoint& q) { return SInterval(p, q); }

bool interior_contains_branchpoint(const SInterval& I) {
  for (const auto& seg : I.segments()) {
    if (seg.branch) {
      // A stub reaches its base; the base is interior when the arc continues.
      bool touches_base = seg.from == 0 || seg.to == 0;
      SPoint base = SPoint::real(Q(seg.base));
      if (touches_base && base != I.a() && base != I.b()) return true;
      continue;
    }
    Q lo = std::min(seg.from, seg.to), hi = std::max(seg.from, seg.to);
    for (long m = ceil_long(lo); Q(m) <= hi; ++m) {
      SPoint c = SPoint::real(Q(m));
      if (c != I.a() && c != I.b()) return true;
    }
  }
  return false;
}

SPoint retract_to(const SInterval& I, const SPoint& p) {
  if (I.contains(p)) return p;
  std::vector<SPoint> candidates{I.a(), I.b()};
  for (const auto& seg : I.segments()) {
    if (seg.branch) {
      candidates.push_back(SPoint::real(Q(seg.base)));
      continue;
    }
    Q lo = std::min(seg.from, seg.to), hi = std::max(seg.from, seg.to);
    for (long m = ceil_long(lo); Q(m) <= hi; ++m) candidates.push_back(SPoint::real(Q(m)));
  }
  SPoint best;
  Q best_d = -1;
  for (const auto& c : candidates) {
    if (!I.contains(c)) continue;
    Q d = dist(p, c);
    if (best_d < 0 || d < best_d) {
      best_d = d;
      best = c;
    }
  }
  return best;
}

bool OrderedInterval::less(const SPoint& x, const SPoint& y) const {
  Q ox = interval.offset_of(x), oy = interval.offset_of(y);
  return reversed ? oy < ox : ox < oy;
}

}  // namespace sigma
