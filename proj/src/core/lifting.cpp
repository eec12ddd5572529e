#include "sigmaper/lifting.hpp"

#include "sigmaper/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace sigma {

namespace {

bool in_fundamental_domain(const SPoint& p) {
  if (p.is_branch()) return p.base() == 0;
  return p.x() >= 0 && p.x() < 1;
}

std::string label(const NodeSpec& s) { return s.name.empty() ? s.point.str() : s.name; }

}  // namespace

Lifting build_lifting(int degree, std::vector<NodeSpec> specs) {
  std::map<SPoint, NodeSpec> merged;
  std::set<std::string> names;
  for (auto& s : specs) {
    if (!in_fundamental_domain(s.point))
      throw Error(ErrorCode::BadPartition, "node " + label(s) + " = " + s.point.str() + " has re outside [0,1)",
                  s.line);
    if (!s.name.empty() && !names.insert(s.name).second)
      throw Error(ErrorCode::DuplicateNode, "node name " + s.name + " used twice", s.line);
    auto it = merged.find(s.point);
    if (it == merged.end()) {
      merged.emplace(s.point, s);
      continue;
    }
    NodeSpec& prev = it->second;
    if (s.written_as_base || prev.written_as_base) {
      if (prev.image != s.image)
        throw Error(ErrorCode::DiscontinuousAtBase,
                    "base of B_0 (" + label(s) + ") maps to " + s.image.str() + " but " + label(prev) +
                        " maps to " + prev.image.str(),
                    s.line);
      if (prev.written_as_base && !s.written_as_base) prev = s;
      continue;
    }
    throw Error(ErrorCode::DuplicateNode, "node " + label(s) + " repeats " + label(prev) + " at " + s.point.str(),
                s.line);
  }
  if (!merged.count(SPoint::real(Q(0))))
    throw Error(ErrorCode::MissingNode, "Real(0) must be a node");
  if (!merged.count(SPoint::branch(0, Q(1))))
    throw Error(ErrorCode::MissingNode, "Branch(0,1) must be a node");

  Lifting F;
  F.degree_ = degree;
  std::vector<SPoint> points;
  for (auto& [p, s] : merged) {
    s.written_as_base = false;
    F.nodes_.push_back(s);
    points.push_back(p);
  }
  F.partition_ = BasicPartition(points);
  for (const auto& s : F.nodes_)
    if (!F.partition_.is_node(s.image))
      throw Error(ErrorCode::NotMarkov, "image " + s.image.str() + " of node " + label(s) + " is not a node mod 1",
                  s.line);

  for (const auto& I : F.partition_.intervals()) {
    F.img_lo_.push_back(F.image_at_node(I.lo_point()));
    auto [hi0, k] = reduce_mod1(I.hi_point());
    F.img_hi_.push_back(F.image_at_node(hi0).translate(static_cast<long>(degree) * k));
  }
  return F;
}

Lifting build_lifting(int degree, const std::vector<std::pair<SPoint, SPoint>>& pairs) {
  std::vector<NodeSpec> specs;
  for (const auto& [p, img] : pairs) specs.push_back({"", p, img, false, 0});
  return build_lifting(degree, std::move(specs));
}

std::optional<std::size_t> Lifting::node_index(const SPoint& p0) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), p0,
                             [](const NodeSpec& s, const SPoint& p) { return s.point < p; });
  if (it != nodes_.end() && it->point == p0) return static_cast<std::size_t>(it - nodes_.begin());
  return std::nullopt;
}

const SPoint& Lifting::image_at_node(const SPoint& p0) const {
  auto idx = node_index(p0);
  if (!idx) throw Error(ErrorCode::Internal, p0.str() + " is not a node");
  return nodes_[*idx].image;
}

SPoint Lifting::eval(const SPoint& p) const {
  auto loc = partition_.locate(p);
  const auto& I = partition_.intervals()[loc.index];
  const SPoint& A = img_lo_[loc.index];
  const SPoint& B = img_hi_[loc.index];
  SPoint y;
  if (loc.param == I.lo) {
    y = A;
  } else if (loc.param == I.hi) {
    y = B;
  } else {
    SInterval arc(A, B);
    Q L = arc.length();
    y = arc.at(L * (loc.param - I.lo) / I.length());
  }
  return y.translate(static_cast<long>(degree_) * loc.shift);
}

SPoint Lifting::iterate(const SPoint& p, long n) const {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative iteration count");
  SPoint y = p;
  for (long i = 0; i < n; ++i) y = eval(y);
  return y;
}

Lifting Lifting::shifted(long k) const {
  std::vector<NodeSpec> specs = nodes_;
  for (auto& s : specs) s.image = s.image.translate(k);
  return build_lifting(degree_, std::move(specs));
}

SPoint eval(const Lifting& F, const SPoint& p) { return F.eval(p); }
SPoint iterate(const Lifting& F, const SPoint& p, long n) { return F.iterate(p, n); }

DerivedMap::DerivedMap(const Lifting& base, Form form, long a, long b) : base_(&base), form_(form), a_(a), b_(b) {
  if (form == Form::PowerShifted && a < 1) throw Error(ErrorCode::InvalidArgument, "power must be at least 1");
}

SPoint DerivedMap::eval(const SPoint& p) const {
  switch (form_) {
    case Form::Plain: return base_->eval(p);
    case Form::Shifted: return base_->eval(p).translate(a_);
    case Form::PowerShifted: return base_->iterate(p, a_).translate(-b_);
    case Form::FZero: {
      SPoint y = base_->eval(p);
      if (y.is_real()) return SPoint::real(Q(0));
      return y.translate(-y.base());
    }
  }
  return p;
}

SPoint DerivedMap::iterate(const SPoint& p, long n) const {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative iteration count");
  SPoint y = p;
  for (long i = 0; i < n; ++i) y = eval(y);
  return y;
}

DerivedMap shift_lifting(const Lifting& F, long k) { return DerivedMap(F, DerivedMap::Form::Shifted, k); }
DerivedMap power_shift(const Lifting& F, long q, long p) {
  return DerivedMap(F, DerivedMap::Form::PowerShifted, q, p);
}

SPoint power_shift_eval(const Lifting& F, long q, long p, const SPoint& x) { return power_shift(F, q, p).eval(x); }

SPoint f0(const Lifting& F, const SPoint& p) { return DerivedMap(F, DerivedMap::Form::FZero).eval(p); }

Q rho_estimate(const Lifting& F, const SPoint& p, long n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "rho_estimate needs n >= 1");
  return (F.iterate(p, n).re() - p.re()) / n;
}

}  // namespace sigma
