#include "extendkit/kd_tree.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace extendkit {

KdTree::KdTree(std::span<const double> coords, std::size_t dim, MetricKind kind)
    : dim_(dim), kind_(kind) {
  const std::size_t n = coords.size() / dim;
  ids_.resize(n);
  std::iota(ids_.begin(), ids_.end(), std::size_t{0});
  coords_.assign(coords.begin(), coords.end());
  if (n > 0) build(0, n);

  std::vector<double> permuted(coords_.size());
  for (std::size_t slot = 0; slot < n; ++slot) {
    std::copy_n(coords.begin() + static_cast<std::ptrdiff_t>(ids_[slot] * dim), dim,
                permuted.begin() + static_cast<std::ptrdiff_t>(slot * dim));
  }
  coords_ = std::move(permuted);
}

std::size_t KdTree::build(std::size_t begin, std::size_t end) {
  const std::size_t index = nodes_.size();
  nodes_.push_back(Node{begin, end});
  lo_.resize(lo_.size() + dim_);
  hi_.resize(hi_.size() + dim_);

  // coords_ is still in original order here; ids_ is being permuted.
  std::size_t split_dim = 0;
  double widest = -1.0;
  for (std::size_t k = 0; k < dim_; ++k) {
    double lo = coords_[ids_[begin] * dim_ + k];
    double hi = lo;
    for (std::size_t i = begin + 1; i < end; ++i) {
      const double v = coords_[ids_[i] * dim_ + k];
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    lo_[index * dim_ + k] = lo;
    hi_[index * dim_ + k] = hi;
    if (hi - lo > widest) {
      widest = hi - lo;
      split_dim = k;
    }
  }
  if (end - begin <= kLeafSize) return index;

  const std::size_t mid = begin + (end - begin) / 2;
  std::nth_element(ids_.begin() + static_cast<std::ptrdiff_t>(begin),
                   ids_.begin() + static_cast<std::ptrdiff_t>(mid),
                   ids_.begin() + static_cast<std::ptrdiff_t>(end),
                   [&](std::size_t a, std::size_t b) {
                     const double va = coords_[a * dim_ + split_dim];
                     const double vb = coords_[b * dim_ + split_dim];
                     return va < vb || (va == vb && a < b);
                   });
  const std::size_t left = build(begin, mid);
  const std::size_t right = build(mid, end);
  nodes_[index].left = static_cast<std::int64_t>(left);
  nodes_[index].right = static_cast<std::int64_t>(right);
  return index;
}

KdTree::ValueBounds KdTree::value_bounds(std::span<const double> values) const {
  ValueBounds b;
  b.lo.resize(nodes_.size());
  b.hi.resize(nodes_.size());
  // Children always follow their parent, so a reverse sweep sees them first.
  for (std::size_t i = nodes_.size(); i-- > 0;) {
    const Node& n = nodes_[i];
    if (n.leaf()) {
      double lo = values[ids_[n.begin]];
      double hi = lo;
      for (std::size_t slot = n.begin + 1; slot < n.end; ++slot) {
        lo = std::min(lo, values[ids_[slot]]);
        hi = std::max(hi, values[ids_[slot]]);
      }
      b.lo[i] = lo;
      b.hi[i] = hi;
    } else {
      const auto l = static_cast<std::size_t>(n.left);
      const auto r = static_cast<std::size_t>(n.right);
      b.lo[i] = std::min(b.lo[l], b.lo[r]);
      b.hi[i] = std::max(b.hi[l], b.hi[r]);
    }
  }
  return b;
}

// Never exceeds the computed distance of any point inside the box: each
// axis gap is at most the corresponding coordinate difference and rounding
// is monotone.
double KdTree::lower_bound(std::size_t node, std::span<const double> q) const {
  double sum = 0.0;
  for (std::size_t k = 0; k < dim_; ++k) {
    const double lo = lo_[node * dim_ + k];
    const double hi = hi_[node * dim_ + k];
    double gap = 0.0;
    if (q[k] < lo) {
      gap = lo - q[k];
    } else if (q[k] > hi) {
      gap = q[k] - hi;
    }
    if (kind_ == MetricKind::real_line) return gap;
    sum += gap * gap;
  }
  return std::sqrt(sum);
}

double KdTree::point_distance(std::size_t slot, std::span<const double> q) const {
  const std::span<const double> x(coords_.data() + slot * dim_, dim_);
  if (kind_ == MetricKind::real_line) return detail::line_distance(x[0], q[0]);
  return detail::euclidean_distance(x, q);
}

KdTree::Traversal::Traversal(const KdTree& tree, std::span<const double> query)
    : tree_(&tree), query_(query) {
  if (tree.size() > 0) push({tree.lower_bound(0, query), 0, 0});
}

void KdTree::Traversal::push(Entry e) {
  heap_.push_back(e);
  std::push_heap(heap_.begin(), heap_.end(), Later{});
}

KdTree::Traversal::Entry KdTree::Traversal::pop() {
  std::pop_heap(heap_.begin(), heap_.end(), Later{});
  const Entry e = heap_.back();
  heap_.pop_back();
  return e;
}

bool KdTree::Traversal::next(Neighbor& out) {
  while (!heap_.empty()) {
    const Entry e = pop();
    if (e.is_point) {
      out = {e.key, e.ref};
      return true;
    }
    const Node& node = tree_->nodes_[e.ref];
    if (node.leaf()) {
      for (std::size_t slot = node.begin; slot < node.end; ++slot) {
        ++points_visited_;
        push({tree_->point_distance(slot, query_), 1, tree_->ids_[slot]});
      }
    } else {
      const auto left = static_cast<std::size_t>(node.left);
      const auto right = static_cast<std::size_t>(node.right);
      push({tree_->lower_bound(left, query_), 0, left});
      push({tree_->lower_bound(right, query_), 0, right});
    }
  }
  return false;
}

}  // namespace extendkit
