// Weighted matching with blossoms, following the structure of the classic
// O(n^3) formulation (Galil 1986; Van Rantwijk's reference layout): vertex
// and blossom duals are kept doubled so that slack(k) = y_u + y_v - 2 w_k.

#include "blossom.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <functional>

namespace modkit::detail {
namespace {

constexpr int kFree = 0;
constexpr int kOuter = 1;  // S-label
constexpr int kInner = 2;  // T-label
constexpr int kBreadcrumb = 4;

class Matcher {
 public:
  Matcher(int n, const std::vector<WeightedEdge>& edges, bool max_cardinality)
      : n_(n),
        edges_(edges),
        max_cardinality_(max_cardinality),
        endpoint_(2 * edges.size()),
        neighbend_(n),
        mate_(n, -1),
        label_(2 * n, kFree),
        labelend_(2 * n, -1),
        inblossom_(n),
        blossomparent_(2 * n, -1),
        blossomchilds_(2 * n),
        blossombase_(2 * n, -1),
        blossomendps_(2 * n),
        bestedge_(2 * n, -1),
        blossombestedges_(2 * n),
        has_bestedges_(2 * n, false),
        dualvar_(2 * n, 0.0),
        allowedge_(edges.size(), false) {
    double maxweight = 0.0;
    for (const auto& e : edges_) maxweight = std::max(maxweight, e.weight);
    for (std::size_t k = 0; k < edges_.size(); ++k) {
      endpoint_[2 * k] = edges_[k].u;
      endpoint_[2 * k + 1] = edges_[k].v;
      neighbend_[edges_[k].u].push_back(static_cast<int>(2 * k + 1));
      neighbend_[edges_[k].v].push_back(static_cast<int>(2 * k));
    }
    for (int v = 0; v < n_; ++v) {
      inblossom_[v] = v;
      blossombase_[v] = v;
      dualvar_[v] = maxweight;
    }
    for (int b = 2 * n_ - 1; b >= n_; --b) unusedblossoms_.push_back(b);
    scale_ = std::max(1.0, maxweight);
  }

  BlossomResult run() {
    if (edges_.empty()) return {std::vector<int>(n_, -1), 0.0};
    for (int stage = 0; stage < n_; ++stage) {
      if (!run_stage()) break;
      for (int b = n_; b < 2 * n_; ++b) {
        if (blossomparent_[b] == -1 && blossombase_[b] >= 0 &&
            label_[b] == kOuter && dualvar_[b] == 0.0) {
          expand_blossom(b, true);
        }
      }
    }
    BlossomResult out;
    out.certificate_error = certificate_error();
    out.mate.assign(n_, -1);
    for (int v = 0; v < n_; ++v) {
      if (mate_[v] >= 0) out.mate[v] = endpoint_[mate_[v]];
    }
    return out;
  }

 private:
  double slack(int k) const {
    const auto& e = edges_[k];
    return dualvar_[e.u] + dualvar_[e.v] - 2.0 * e.weight;
  }

  void for_each_leaf(int b, const std::function<void(int)>& f) const {
    if (b < n_) {
      f(b);
      return;
    }
    for (int t : blossomchilds_[b]) for_each_leaf(t, f);
  }

  std::vector<int> leaves(int b) const {
    std::vector<int> out;
    for_each_leaf(b, [&](int v) { out.push_back(v); });
    return out;
  }

  static int wrap(int j, int size) { return ((j % size) + size) % size; }

  void assign_label(int w, int t, int p) {
    int b = inblossom_[w];
    assert(label_[w] == kFree && label_[b] == kFree);
    label_[w] = label_[b] = t;
    labelend_[w] = labelend_[b] = p;
    bestedge_[w] = bestedge_[b] = -1;
    if (t == kOuter) {
      for_each_leaf(b, [&](int v) { queue_.push_back(v); });
    } else if (t == kInner) {
      int base = blossombase_[b];
      assert(mate_[base] >= 0);
      assign_label(endpoint_[mate_[base]], kOuter, mate_[base] ^ 1);
    }
  }

  // Walks from v and w towards the roots. Returns the base of a new blossom
  // or -1 when an augmenting path was found.
  int scan_blossom(int v, int w) {
    std::vector<int> path;
    int base = -1;
    while (v != -1 || w != -1) {
      int b = inblossom_[v];
      if (label_[b] & kBreadcrumb) {
        base = blossombase_[b];
        break;
      }
      assert(label_[b] == kOuter);
      path.push_back(b);
      label_[b] = kOuter | kBreadcrumb;
      if (labelend_[b] == -1) {
        v = -1;
      } else {
        v = endpoint_[labelend_[b]];
        b = inblossom_[v];
        assert(label_[b] == kInner);
        v = endpoint_[labelend_[b]];
      }
      if (w != -1) std::swap(v, w);
    }
    for (int b : path) label_[b] = kOuter;
    return base;
  }

  void add_blossom(int base, int k) {
    int v = edges_[k].u;
    int w = edges_[k].v;
    int bb = inblossom_[base];
    int bv = inblossom_[v];
    int bw = inblossom_[w];
    int b = unusedblossoms_.back();
    unusedblossoms_.pop_back();
    blossombase_[b] = base;
    blossomparent_[b] = -1;
    blossomparent_[bb] = b;
    auto& path = blossomchilds_[b];
    auto& endps = blossomendps_[b];
    path.clear();
    endps.clear();
    while (bv != bb) {
      blossomparent_[bv] = b;
      path.push_back(bv);
      endps.push_back(labelend_[bv]);
      v = endpoint_[labelend_[bv]];
      bv = inblossom_[v];
    }
    path.push_back(bb);
    std::reverse(path.begin(), path.end());
    std::reverse(endps.begin(), endps.end());
    endps.push_back(2 * k);
    while (bw != bb) {
      blossomparent_[bw] = b;
      path.push_back(bw);
      endps.push_back(labelend_[bw] ^ 1);
      w = endpoint_[labelend_[bw]];
      bw = inblossom_[w];
    }
    assert(label_[bb] == kOuter);
    label_[b] = kOuter;
    labelend_[b] = labelend_[bb];
    dualvar_[b] = 0.0;
    for (int leaf : leaves(b)) {
      if (label_[inblossom_[leaf]] == kInner) queue_.push_back(leaf);
      inblossom_[leaf] = b;
    }
    std::vector<int> bestedgeto(2 * n_, -1);
    for (int child : path) {
      std::vector<int> candidates;
      if (!has_bestedges_[child]) {
        for (int leaf : leaves(child)) {
          for (int p : neighbend_[leaf]) candidates.push_back(p / 2);
        }
      } else {
        candidates = blossombestedges_[child];
      }
      for (int kk : candidates) {
        int i = edges_[kk].u;
        int j = edges_[kk].v;
        if (inblossom_[j] == b) std::swap(i, j);
        int bj = inblossom_[j];
        if (bj != b && label_[bj] == kOuter &&
            (bestedgeto[bj] == -1 || slack(kk) < slack(bestedgeto[bj]))) {
          bestedgeto[bj] = kk;
        }
      }
      blossombestedges_[child].clear();
      has_bestedges_[child] = false;
      bestedge_[child] = -1;
    }
    auto& best = blossombestedges_[b];
    best.clear();
    for (int kk : bestedgeto) {
      if (kk != -1) best.push_back(kk);
    }
    has_bestedges_[b] = true;
    bestedge_[b] = -1;
    for (int kk : best) {
      if (bestedge_[b] == -1 || slack(kk) < slack(bestedge_[b])) {
        bestedge_[b] = kk;
      }
    }
  }

  void expand_blossom(int b, bool endstage) {
    // Copy: recursive expansion may recycle b's storage.
    const std::vector<int> childs = blossomchilds_[b];
    for (int s : childs) {
      blossomparent_[s] = -1;
      if (s < n_) {
        inblossom_[s] = s;
      } else if (endstage && dualvar_[s] == 0.0) {
        expand_blossom(s, endstage);
      } else {
        for (int leaf : leaves(s)) inblossom_[leaf] = s;
      }
    }
    if (!endstage && label_[b] == kInner) {
      const auto& ch = blossomchilds_[b];
      const auto& ep = blossomendps_[b];
      const int len = static_cast<int>(ch.size());
      int entrychild = inblossom_[endpoint_[labelend_[b] ^ 1]];
      int j = static_cast<int>(std::find(ch.begin(), ch.end(), entrychild) -
                               ch.begin());
      int jstep;
      int endptrick;
      if (j & 1) {
        j -= len;
        jstep = 1;
        endptrick = 0;
      } else {
        jstep = -1;
        endptrick = 1;
      }
      int p = labelend_[b];
      while (j != 0) {
        label_[endpoint_[p ^ 1]] = kFree;
        label_[endpoint_[ep[wrap(j - endptrick, len)] ^ endptrick ^ 1]] = kFree;
        assign_label(endpoint_[p ^ 1], kInner, p);
        allowedge_[ep[wrap(j - endptrick, len)] / 2] = true;
        j += jstep;
        p = ep[wrap(j - endptrick, len)] ^ endptrick;
        allowedge_[p / 2] = true;
        j += jstep;
      }
      int bv = ch[wrap(j, len)];
      label_[endpoint_[p ^ 1]] = label_[bv] = kInner;
      labelend_[endpoint_[p ^ 1]] = labelend_[bv] = p;
      bestedge_[bv] = -1;
      j += jstep;
      while (ch[wrap(j, len)] != entrychild) {
        bv = ch[wrap(j, len)];
        if (label_[bv] == kOuter) {
          j += jstep;
          continue;
        }
        int labelled = -1;
        for (int leaf : leaves(bv)) {
          if (label_[leaf] != kFree) {
            labelled = leaf;
            break;
          }
        }
        if (labelled != -1) {
          assert(label_[labelled] == kInner);
          label_[labelled] = kFree;
          label_[endpoint_[mate_[blossombase_[bv]]]] = kFree;
          assign_label(labelled, kInner, labelend_[labelled]);
        }
        j += jstep;
      }
    }
    label_[b] = labelend_[b] = -1;
    blossomchilds_[b].clear();
    blossomendps_[b].clear();
    blossombase_[b] = -1;
    blossombestedges_[b].clear();
    has_bestedges_[b] = false;
    bestedge_[b] = -1;
    unusedblossoms_.push_back(b);
  }

  void augment_blossom(int b, int v) {
    int t = v;
    while (blossomparent_[t] != b) t = blossomparent_[t];
    if (t >= n_) augment_blossom(t, v);
    auto& ch = blossomchilds_[b];
    auto& ep = blossomendps_[b];
    const int len = static_cast<int>(ch.size());
    const int i = static_cast<int>(std::find(ch.begin(), ch.end(), t) -
                                   ch.begin());
    int j = i;
    int jstep;
    int endptrick;
    if (i & 1) {
      j -= len;
      jstep = 1;
      endptrick = 0;
    } else {
      jstep = -1;
      endptrick = 1;
    }
    while (j != 0) {
      j += jstep;
      t = ch[wrap(j, len)];
      int p = ep[wrap(j - endptrick, len)] ^ endptrick;
      if (t >= n_) augment_blossom(t, endpoint_[p]);
      j += jstep;
      t = ch[wrap(j, len)];
      if (t >= n_) augment_blossom(t, endpoint_[p ^ 1]);
      mate_[endpoint_[p]] = p ^ 1;
      mate_[endpoint_[p ^ 1]] = p;
    }
    std::rotate(ch.begin(), ch.begin() + i, ch.end());
    std::rotate(ep.begin(), ep.begin() + i, ep.end());
    blossombase_[b] = blossombase_[ch[0]];
    assert(blossombase_[b] == v);
  }

  void augment_matching(int k) {
    const int ends[2][2] = {{edges_[k].u, 2 * k + 1}, {edges_[k].v, 2 * k}};
    for (const auto& start : ends) {
      int s = start[0];
      int p = start[1];
      while (true) {
        int bs = inblossom_[s];
        assert(label_[bs] == kOuter);
        if (bs >= n_) augment_blossom(bs, s);
        mate_[s] = p;
        if (labelend_[bs] == -1) break;
        int t = endpoint_[labelend_[bs]];
        int bt = inblossom_[t];
        assert(label_[bt] == kInner);
        s = endpoint_[labelend_[bt]];
        int j = endpoint_[labelend_[bt] ^ 1];
        if (bt >= n_) augment_blossom(bt, j);
        mate_[j] = labelend_[bt];
        p = labelend_[bt] ^ 1;
      }
    }
  }

  // One stage: grow alternating trees until an augmentation happens or the
  // duals prove optimality. Returns true if the matching was augmented.
  bool run_stage() {
    std::fill(label_.begin(), label_.end(), kFree);
    std::fill(bestedge_.begin(), bestedge_.end(), -1);
    for (int b = n_; b < 2 * n_; ++b) {
      blossombestedges_[b].clear();
      has_bestedges_[b] = false;
    }
    std::fill(allowedge_.begin(), allowedge_.end(), false);
    queue_.clear();
    for (int v = 0; v < n_; ++v) {
      if (mate_[v] == -1 && label_[inblossom_[v]] == kFree) {
        assign_label(v, kOuter, -1);
      }
    }
    while (true) {
      while (!queue_.empty()) {
        int v = queue_.back();
        queue_.pop_back();
        for (int p : neighbend_[v]) {
          int k = p / 2;
          int w = endpoint_[p];
          if (inblossom_[v] == inblossom_[w]) continue;
          double kslack = 0.0;
          if (!allowedge_[k]) {
            kslack = slack(k);
            if (kslack <= 0.0) allowedge_[k] = true;
          }
          if (allowedge_[k]) {
            if (label_[inblossom_[w]] == kFree) {
              assign_label(w, kInner, p ^ 1);
            } else if (label_[inblossom_[w]] == kOuter) {
              int base = scan_blossom(v, w);
              if (base >= 0) {
                add_blossom(base, k);
              } else {
                augment_matching(k);
                return true;
              }
            } else if (label_[w] == kFree) {
              label_[w] = kInner;
              labelend_[w] = p ^ 1;
            }
          } else if (label_[inblossom_[w]] == kOuter) {
            int b = inblossom_[v];
            if (bestedge_[b] == -1 || kslack < slack(bestedge_[b])) {
              bestedge_[b] = k;
            }
          } else if (label_[w] == kFree) {
            if (bestedge_[w] == -1 || kslack < slack(bestedge_[w])) {
              bestedge_[w] = k;
            }
          }
        }
      }

      int deltatype = -1;
      double delta = 0.0;
      int deltaedge = -1;
      int deltablossom = -1;
      if (!max_cardinality_) {
        deltatype = 1;
        delta = *std::min_element(dualvar_.begin(), dualvar_.begin() + n_);
      }
      for (int v = 0; v < n_; ++v) {
        if (label_[inblossom_[v]] == kFree && bestedge_[v] != -1) {
          double d = slack(bestedge_[v]);
          if (deltatype == -1 || d < delta) {
            delta = d;
            deltatype = 2;
            deltaedge = bestedge_[v];
          }
        }
      }
      for (int b = 0; b < 2 * n_; ++b) {
        if (blossomparent_[b] == -1 && label_[b] == kOuter &&
            bestedge_[b] != -1) {
          double d = slack(bestedge_[b]) / 2.0;
          if (deltatype == -1 || d < delta) {
            delta = d;
            deltatype = 3;
            deltaedge = bestedge_[b];
          }
        }
      }
      for (int b = n_; b < 2 * n_; ++b) {
        if (blossombase_[b] >= 0 && blossomparent_[b] == -1 &&
            label_[b] == kInner && (deltatype == -1 || dualvar_[b] < delta)) {
          delta = dualvar_[b];
          deltatype = 4;
          deltablossom = b;
        }
      }
      if (deltatype == -1) {
        // No further progress possible; the matching has maximum size.
        deltatype = 1;
        delta = std::max(
            0.0, *std::min_element(dualvar_.begin(), dualvar_.begin() + n_));
      }

      for (int v = 0; v < n_; ++v) {
        if (label_[inblossom_[v]] == kOuter) {
          dualvar_[v] -= delta;
        } else if (label_[inblossom_[v]] == kInner) {
          dualvar_[v] += delta;
        }
      }
      for (int b = n_; b < 2 * n_; ++b) {
        if (blossombase_[b] >= 0 && blossomparent_[b] == -1) {
          if (label_[b] == kOuter) {
            dualvar_[b] += delta;
          } else if (label_[b] == kInner) {
            dualvar_[b] -= delta;
          }
        }
      }

      switch (deltatype) {
        case 1:
          return false;
        case 2: {
          allowedge_[deltaedge] = true;
          int i = edges_[deltaedge].u;
          int j = edges_[deltaedge].v;
          if (label_[inblossom_[i]] == kFree) std::swap(i, j);
          queue_.push_back(i);
          break;
        }
        case 3: {
          allowedge_[deltaedge] = true;
          queue_.push_back(edges_[deltaedge].u);
          break;
        }
        case 4:
          expand_blossom(deltablossom, false);
          break;
      }
    }
  }

  // Re-checks complementary slackness of the final primal-dual pair and
  // returns the worst violation (0 for an exact certificate).
  double certificate_error() const {
    double err = 0.0;
    double vdualoffset = 0.0;
    if (max_cardinality_) {
      vdualoffset = std::max(
          0.0, -*std::min_element(dualvar_.begin(), dualvar_.begin() + n_));
    }
    for (int b = n_; b < 2 * n_; ++b) {
      if (blossombase_[b] >= 0) err = std::max(err, -dualvar_[b]);
    }
    for (int v = 0; v < n_; ++v) {
      err = std::max(err, -(dualvar_[v] + vdualoffset));
    }
    for (std::size_t k = 0; k < edges_.size(); ++k) {
      int i = edges_[k].u;
      int j = edges_[k].v;
      double s = slack(static_cast<int>(k));
      std::vector<int> ib{i};
      std::vector<int> jb{j};
      while (blossomparent_[ib.back()] != -1) ib.push_back(blossomparent_[ib.back()]);
      while (blossomparent_[jb.back()] != -1) jb.push_back(blossomparent_[jb.back()]);
      std::reverse(ib.begin(), ib.end());
      std::reverse(jb.begin(), jb.end());
      for (std::size_t t = 0; t < std::min(ib.size(), jb.size()); ++t) {
        if (ib[t] != jb[t]) break;
        s += 2.0 * dualvar_[ib[t]];
      }
      err = std::max(err, -s / 2.0);
      const int kk = static_cast<int>(k);
      bool mi = mate_[i] >= 0 && mate_[i] / 2 == kk;
      bool mj = mate_[j] >= 0 && mate_[j] / 2 == kk;
      if (mi != mj) err = std::max(err, scale_);
      if (mi && mj) err = std::max(err, std::abs(s) / 2.0);
    }
    for (int v = 0; v < n_; ++v) {
      if (mate_[v] < 0) err = std::max(err, std::abs(dualvar_[v] + vdualoffset));
    }
    for (int b = n_; b < 2 * n_; ++b) {
      if (blossombase_[b] >= 0 && dualvar_[b] > 0.0) {
        const auto& ep = blossomendps_[b];
        if (ep.size() % 2 != 1) err = std::max(err, scale_);
        for (std::size_t t = 1; t < ep.size(); t += 2) {
          int p = ep[t];
          if (mate_[endpoint_[p]] != (p ^ 1) || mate_[endpoint_[p ^ 1]] != p) {
            err = std::max(err, scale_);
          }
        }
      }
    }
    return err;
  }

  int n_;
  const std::vector<WeightedEdge>& edges_;
  bool max_cardinality_;
  double scale_ = 1.0;
  std::vector<int> endpoint_;
  std::vector<std::vector<int>> neighbend_;
  std::vector<int> mate_;
  std::vector<int> label_;
  std::vector<int> labelend_;
  std::vector<int> inblossom_;
  std::vector<int> blossomparent_;
  std::vector<std::vector<int>> blossomchilds_;
  std::vector<int> blossombase_;
  std::vector<std::vector<int>> blossomendps_;
  std::vector<int> bestedge_;
  std::vector<std::vector<int>> blossombestedges_;
  std::vector<bool> has_bestedges_;
  std::vector<int> unusedblossoms_;
  std::vector<double> dualvar_;
  std::vector<bool> allowedge_;
  std::vector<int> queue_;
};

}  // namespace

BlossomResult max_weight_matching(int num_vertices,
                                  const std::vector<WeightedEdge>& edges,
                                  bool max_cardinality) {
  return Matcher(num_vertices, edges, max_cardinality).run();
}

}  // namespace modkit::detail
