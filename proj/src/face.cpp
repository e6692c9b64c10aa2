#include "facealg/face.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace facealg {

  namespace {
    void require_same_degree(int a, int b, char const* what) {
      if (a != b) {
        throw std::invalid_argument(std::string(what) + ": degree mismatch");
      }
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Face
  ////////////////////////////////////////////////////////////////////////

  Face::Face(int n, std::vector<std::vector<int>> const& blocks) {
    if (n < 1 || n > kMaxFaceDegree) {
      throw std::invalid_argument("face degree out of range");
    }
    std::vector<int> labels(n, -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (blocks[b].empty()) {
        throw std::invalid_argument("face blocks must be nonempty");
      }
      for (int i : blocks[b]) {
        if (i < 1 || i > n || labels[i - 1] != -1) {
          throw std::invalid_argument("face blocks must partition {1..n}");
        }
        labels[i - 1] = static_cast<int>(b);
      }
    }
    if (std::find(labels.begin(), labels.end(), -1) != labels.end()) {
      throw std::invalid_argument("face blocks must cover {1..n}");
    }
    *this = from_labels(labels);
  }

  Face Face::from_labels(std::vector<int> const& labels) {
    int const n = static_cast<int>(labels.size());
    if (n < 1 || n > kMaxFaceDegree) {
      throw std::invalid_argument("face degree out of range");
    }
    Face f;
    f._n    = static_cast<std::uint8_t>(n);
    int top = *std::max_element(labels.begin(), labels.end());
    std::vector<bool> used(top + 1, false);
    for (int i = 0; i < n; ++i) {
      if (labels[i] < 0) {
        throw std::invalid_argument("face labels must be nonnegative");
      }
      used[labels[i]] = true;
      f._code |= static_cast<std::uint32_t>(labels[i]) << (4 * i);
    }
    if (std::find(used.begin(), used.end(), false) != used.end()) {
      throw std::invalid_argument("face labels must be surjective onto 0..k-1");
    }
    f._k = static_cast<std::uint8_t>(top + 1);
    f.finish();
    return f;
  }

  Face Face::identity(int n) {
    return from_labels(std::vector<int>(n, 0));
  }

  // Each block contributes its elements as nibbles followed by a 0
  // terminator, most significant first. Comparing these strings compares
  // block sequences lexicographically, a proper prefix sorting first.
  void Face::finish() {
    _lex      = 0;
    int shift = 64;
    for (int b = 0; b < _k; ++b) {
      for (int i = 1; i <= _n; ++i) {
        if (block_of(i) == b) {
          shift -= 4;
          _lex |= static_cast<std::uint64_t>(i) << shift;
        }
      }
      shift -= 4;
    }
  }

  std::vector<std::vector<int>> Face::blocks() const {
    std::vector<std::vector<int>> out(_k);
    for (int i = 1; i <= _n; ++i) {
      out[block_of(i)].push_back(i);
    }
    return out;
  }

  Composition Face::composition() const {
    std::vector<int> sizes(_k, 0);
    for (int i = 1; i <= _n; ++i) {
      ++sizes[block_of(i)];
    }
    return Composition(std::move(sizes));
  }

  std::string Face::label() const {
    std::string out = "(";
    auto const  bs  = blocks();
    for (std::size_t b = 0; b < bs.size(); ++b) {
      if (b > 0) {
        out += ',';
      }
      for (int i : bs[b]) {
        out += std::to_string(i);
      }
    }
    return out + ")";
  }

  Face tits_product(Face const& f, Face const& g) {
    require_same_degree(f.degree(), g.degree(), "tits_product");
    int const n = f.degree();
    // Block of i in fg is the rank of the pair (f(i), g(i)) among the pairs
    // that occur, ordered lexicographically.
    int  keys[kMaxFaceDegree];
    bool present[kMaxFaceDegree * kMaxFaceDegree] = {};
    for (int i = 0; i < n; ++i) {
      keys[i]          = f.block_of(i + 1) * kMaxFaceDegree + g.block_of(i + 1);
      present[keys[i]] = true;
    }
    int rank[kMaxFaceDegree * kMaxFaceDegree];
    int next = 0;
    for (int key = 0; key < kMaxFaceDegree * kMaxFaceDegree; ++key) {
      if (present[key]) {
        rank[key] = next++;
      }
    }
    std::vector<int> labels(n);
    for (int i = 0; i < n; ++i) {
      labels[i] = rank[keys[i]];
    }
    return Face::from_labels(labels);
  }

  SetPartition support(Face const& f) {
    std::vector<int> labels(f.degree());
    for (int i = 1; i <= f.degree(); ++i) {
      labels[i - 1] = f.block_of(i);
    }
    return SetPartition::from_labels(labels);
  }

  Face act(Permutation const& pi, Face const& f) {
    require_same_degree(pi.degree(), f.degree(), "act");
    std::vector<int> labels(f.degree());
    for (int i = 1; i <= f.degree(); ++i) {
      labels[pi(i) - 1] = f.block_of(i);
    }
    return Face::from_labels(labels);
  }

  std::vector<Face> faces_with_support(SetPartition const& x) {
    std::vector<Face> out;
    std::vector<int>  order(x.block_count());
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> labels(x.degree());
    do {
      for (int i = 0; i < x.degree(); ++i) {
        labels[i] = order[x.rgs()[i]];
      }
      out.push_back(Face::from_labels(labels));
    } while (std::next_permutation(order.begin(), order.end()));
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<Face> enumerate_faces(int n, int cap) {
    if (n < 1) {
      throw std::invalid_argument("enumerate_faces: n must be positive");
    }
    if (n > cap || n > kMaxFaceDegree) {
      throw std::out_of_range("enumerate_faces: n = " + std::to_string(n)
                              + " exceeds cap " + std::to_string(cap));
    }
    std::vector<Face> out;
    for (auto const& x : set_partitions_of(n, std::max(n, kDefaultSetPartitionCap))) {
      auto fs = faces_with_support(x);
      out.insert(out.end(), fs.begin(), fs.end());
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // FaceAlgebraElement
  ////////////////////////////////////////////////////////////////////////

  FaceAlgebraElement::FaceAlgebraElement(Face const& f, Rational c)
      : _n(f.degree()) {
    if (c != 0) {
      _terms.emplace(f, std::move(c));
    }
  }

  void FaceAlgebraElement::require_degree(int n) const {
    require_same_degree(_n, n, "face algebra");
  }

  Rational FaceAlgebraElement::coefficient(Face const& f) const {
    auto it = _terms.find(f);
    return it == _terms.end() ? Rational(0) : it->second;
  }

  void FaceAlgebraElement::add_term(Face const& f, Rational const& c) {
    require_degree(f.degree());
    if (c == 0) {
      return;
    }
    auto [it, inserted] = _terms.try_emplace(f, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) {
        _terms.erase(it);
      }
    }
  }

  FaceAlgebraElement& FaceAlgebraElement::operator+=(
      FaceAlgebraElement const& other) {
    require_degree(other._n);
    for (auto const& [f, c] : other._terms) {
      add_term(f, c);
    }
    return *this;
  }

  FaceAlgebraElement& FaceAlgebraElement::operator-=(
      FaceAlgebraElement const& other) {
    require_degree(other._n);
    for (auto const& [f, c] : other._terms) {
      add_term(f, -c);
    }
    return *this;
  }

  FaceAlgebraElement FaceAlgebraElement::operator+(
      FaceAlgebraElement const& other) const {
    FaceAlgebraElement out(*this);
    out += other;
    return out;
  }

  FaceAlgebraElement FaceAlgebraElement::operator-(
      FaceAlgebraElement const& other) const {
    FaceAlgebraElement out(*this);
    out -= other;
    return out;
  }

  FaceAlgebraElement FaceAlgebraElement::operator*(Rational const& c) const {
    FaceAlgebraElement out(_n);
    if (c == 0) {
      return out;
    }
    for (auto const& [f, a] : _terms) {
      out._terms.emplace_hint(out._terms.end(), f, a * c);
    }
    return out;
  }

  FaceAlgebraElement FaceAlgebraElement::operator*(
      FaceAlgebraElement const& other) const {
    require_degree(other._n);
    FaceAlgebraElement out(_n);
    Rational           prod;
    for (auto const& [f, a] : _terms) {
      for (auto const& [g, b] : other._terms) {
        prod = a * b;
        out.add_term(tits_product(f, g), prod);
      }
    }
    return out;
  }

  FaceAlgebraElement add(FaceAlgebraElement const& x,
                         FaceAlgebraElement const& y) {
    return x + y;
  }

  FaceAlgebraElement scale(FaceAlgebraElement const& x, Rational const& c) {
    return x * c;
  }

  FaceAlgebraElement multiply(FaceAlgebraElement const& x,
                              FaceAlgebraElement const& y) {
    return x * y;
  }

  FaceAlgebraElement act_linear(Permutation const&        pi,
                                FaceAlgebraElement const& x) {
    require_same_degree(pi.degree(), x.degree(), "act_linear");
    FaceAlgebraElement out(x.degree());
    for (auto const& [f, c] : x.terms()) {
      out.add_term(act(pi, f), c);
    }
    return out;
  }

  FaceAlgebraElement bidigare_image(int n, std::vector<int> const& J) {
    std::vector<int> cuts(J);
    std::sort(cuts.begin(), cuts.end());
    std::vector<int> parts;
    int              prev = 0;
    for (int j : cuts) {
      if (j < 1 || j >= n || j == prev) {
        throw std::invalid_argument("bidigare_image: J must be a subset of {1..n-1}");
      }
      parts.push_back(j - prev);
      prev = j;
    }
    parts.push_back(n - prev);
    Composition const  alpha(parts);
    FaceAlgebraElement out(n);
    for (auto const& f : enumerate_faces(n, std::max(n, kDefaultFaceCap))) {
      if (f.composition() == alpha) {
        out.add_term(f, 1);
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // FaceBasis
  ////////////////////////////////////////////////////////////////////////

  FaceBasis::FaceBasis(int n, int cap)
      : _n(n),
        _faces(enumerate_faces(n, cap)),
        _set_partitions(set_partitions_of(n, std::max(n, kDefaultSetPartitionCap))) {
    std::map<SetPartition, std::size_t> where;
    for (std::size_t i = 0; i < _set_partitions.size(); ++i) {
      where.emplace(_set_partitions[i], i);
    }
    _index.reserve(_faces.size());
    _support.reserve(_faces.size());
    for (std::size_t i = 0; i < _faces.size(); ++i) {
      _index.emplace(_faces[i].code(), i);
      _support.push_back(where.at(support(_faces[i])));
    }
  }

  std::size_t FaceBasis::index(Face const& f) const {
    if (f.degree() != _n) {
      throw std::invalid_argument("FaceBasis: degree mismatch");
    }
    return _index.at(f.code());
  }

  std::vector<Rational> FaceBasis::to_dense(FaceAlgebraElement const& x) const {
    std::vector<Rational> out(_faces.size());
    for (auto const& [f, c] : x.terms()) {
      out[index(f)] = c;
    }
    return out;
  }

  FaceAlgebraElement FaceBasis::from_dense(std::vector<Rational> const& v) const {
    FaceAlgebraElement out(_n);
    for (std::size_t i = 0; i < v.size(); ++i) {
      out.add_term(_faces[i], v[i]);
    }
    return out;
  }

}  // namespace facealg
