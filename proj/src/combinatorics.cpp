#include "facealg/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace facealg {

  namespace {
    std::string join_parts(std::vector<int> const& parts) {
      bool const compact = std::all_of(
          parts.begin(), parts.end(), [](int p) { return p < 10; });
      std::string out;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (!compact && i > 0) {
          out += ',';
        }
        out += std::to_string(parts[i]);
      }
      return out;
    }

    void require_same_size(Partition const& a, Partition const& b) {
      if (a.size() != b.size()) {
        throw std::invalid_argument("partitions of different sizes: "
                                    + a.label() + " vs " + b.label());
      }
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Partition
  ////////////////////////////////////////////////////////////////////////

  Partition::Partition(std::vector<int> parts) : _parts(std::move(parts)) {
    for (std::size_t i = 0; i < _parts.size(); ++i) {
      if (_parts[i] < 1) {
        throw std::invalid_argument("partition parts must be positive");
      }
      if (i > 0 && _parts[i] > _parts[i - 1]) {
        throw std::invalid_argument("partition parts must weakly decrease");
      }
      _size += _parts[i];
    }
  }

  Partition Partition::from_unsorted(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
  }

  Partition Partition::rectangle(int part, int copies) {
    return Partition(std::vector<int>(copies, part));
  }

  int Partition::multiplicity(int part) const {
    return static_cast<int>(std::count(_parts.begin(), _parts.end(), part));
  }

  Partition Partition::operator+(Partition const& other) const {
    std::vector<int> merged;
    merged.reserve(_parts.size() + other._parts.size());
    std::merge(_parts.begin(),
               _parts.end(),
               other._parts.begin(),
               other._parts.end(),
               std::back_inserter(merged),
               std::greater<>());
    return Partition(std::move(merged));
  }

  Partition Partition::scaled(int factor) const {
    std::vector<int> out(_parts);
    for (auto& p : out) {
      p *= factor;
    }
    return Partition(std::move(out));
  }

  std::string Partition::label() const {
    return _parts.empty() ? "()" : join_parts(_parts);
  }

  ////////////////////////////////////////////////////////////////////////
  // Composition
  ////////////////////////////////////////////////////////////////////////

  Composition::Composition(std::vector<int> parts) : _parts(std::move(parts)) {
    for (int p : _parts) {
      if (p < 1) {
        throw std::invalid_argument("composition parts must be positive");
      }
      _size += p;
    }
  }

  Composition Composition::power(int times) const {
    std::vector<int> out;
    out.reserve(_parts.size() * times);
    for (int t = 0; t < times; ++t) {
      out.insert(out.end(), _parts.begin(), _parts.end());
    }
    return Composition(std::move(out));
  }

  Composition Composition::operator+(Composition const& other) const {
    std::vector<int> out(_parts);
    out.insert(out.end(), other._parts.begin(), other._parts.end());
    return Composition(std::move(out));
  }

  std::string Composition::label() const {
    return _parts.empty() ? "()" : join_parts(_parts);
  }

  ////////////////////////////////////////////////////////////////////////
  // SetPartition
  ////////////////////////////////////////////////////////////////////////

  SetPartition::SetPartition(int n, std::vector<std::vector<int>> const& blocks) {
    std::vector<int> labels(n, -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (blocks[b].empty()) {
        throw std::invalid_argument("set partition blocks must be nonempty");
      }
      for (int i : blocks[b]) {
        if (i < 1 || i > n) {
          throw std::invalid_argument("set partition element out of range");
        }
        if (labels[i - 1] != -1) {
          throw std::invalid_argument("set partition blocks must be disjoint");
        }
        labels[i - 1] = static_cast<int>(b);
      }
    }
    if (std::find(labels.begin(), labels.end(), -1) != labels.end()) {
      throw std::invalid_argument("set partition blocks must cover {1..n}");
    }
    *this = from_labels(labels);
  }

  SetPartition SetPartition::from_labels(std::vector<int> const& labels) {
    SetPartition        out;
    std::map<int, int>  relabel;
    out._rgs.reserve(labels.size());
    for (int l : labels) {
      auto [it, inserted] = relabel.emplace(l, static_cast<int>(relabel.size()));
      out._rgs.push_back(static_cast<std::uint8_t>(it->second));
    }
    out._blocks = static_cast<int>(relabel.size());
    return out;
  }

  std::vector<std::vector<int>> SetPartition::blocks() const {
    std::vector<std::vector<int>> out(_blocks);
    for (std::size_t i = 0; i < _rgs.size(); ++i) {
      out[_rgs[i]].push_back(static_cast<int>(i) + 1);
    }
    return out;
  }

  std::string SetPartition::label() const {
    std::string out = "{";
    auto const  bs  = blocks();
    for (std::size_t b = 0; b < bs.size(); ++b) {
      if (b > 0) {
        out += ',';
      }
      out += join_parts(bs[b]);
    }
    return out + "}";
  }

  ////////////////////////////////////////////////////////////////////////
  // Permutation
  ////////////////////////////////////////////////////////////////////////

  Permutation::Permutation(std::vector<int> images) : _images(std::move(images)) {
    std::vector<bool> seen(_images.size(), false);
    for (int v : _images) {
      if (v < 1 || v > static_cast<int>(_images.size()) || seen[v - 1]) {
        throw std::invalid_argument("not a permutation");
      }
      seen[v - 1] = true;
    }
  }

  Permutation Permutation::identity(int n) {
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 1);
    return Permutation(std::move(images));
  }

  Permutation Permutation::reversal(int n) {
    std::vector<int> images(n);
    for (int i = 0; i < n; ++i) {
      images[i] = n - i;
    }
    return Permutation(std::move(images));
  }

  Permutation Permutation::adjacent_transposition(int n, int i) {
    auto images = identity(n)._images;
    std::swap(images[i - 1], images[i]);
    return Permutation(std::move(images));
  }

  Permutation Permutation::with_cycle_type(Partition const& type) {
    std::vector<int> images(type.size());
    int              start = 0;
    for (int len : type) {
      for (int j = 0; j < len; ++j) {
        images[start + j] = start + (j + 1) % len + 1;
      }
      start += len;
    }
    return Permutation(std::move(images));
  }

  Permutation Permutation::inverse() const {
    std::vector<int> out(_images.size());
    for (std::size_t i = 0; i < _images.size(); ++i) {
      out[_images[i] - 1] = static_cast<int>(i) + 1;
    }
    return Permutation(std::move(out));
  }

  Permutation Permutation::operator*(Permutation const& other) const {
    if (degree() != other.degree()) {
      throw std::invalid_argument("permutation degree mismatch");
    }
    std::vector<int> out(_images.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] = _images[other._images[i] - 1];
    }
    return Permutation(std::move(out));
  }

  std::vector<int> Permutation::descent_set() const {
    std::vector<int> out;
    for (std::size_t i = 0; i + 1 < _images.size(); ++i) {
      if (_images[i] > _images[i + 1]) {
        out.push_back(static_cast<int>(i) + 1);
      }
    }
    return out;
  }

  int Permutation::sign() const {
    auto const type = cycle_type(*this);
    return (type.size() - type.length()) % 2 == 0 ? 1 : -1;
  }

  ////////////////////////////////////////////////////////////////////////
  // Counting
  ////////////////////////////////////////////////////////////////////////

  Integer factorial(int n) {
    Integer out = 1;
    for (int i = 2; i <= n; ++i) {
      out *= i;
    }
    return out;
  }

  Integer z_coefficient(Partition const& rho) {
    Integer out = 1;
    for (std::size_t i = 0; i < rho.parts().size();) {
      std::size_t j = i;
      while (j < rho.parts().size() && rho[j] == rho[i]) {
        out *= rho[i];
        ++j;
      }
      out *= factorial(static_cast<int>(j - i));
      i = j;
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Partitions and compositions
  ////////////////////////////////////////////////////////////////////////

  std::vector<Partition> partitions_of(int n) {
    if (n < 0) {
      throw std::invalid_argument("partitions_of: negative n");
    }
    std::vector<Partition> out;
    std::vector<int>       current;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
      if (remaining == 0) {
        out.emplace_back(current);
        return;
      }
      for (int p = std::min(remaining, max_part); p >= 1; --p) {
        current.push_back(p);
        rec(remaining - p, p);
        current.pop_back();
      }
    };
    rec(n, n);
    return out;
  }

  std::vector<Composition> compositions_of(int n) {
    std::vector<Composition> out;
    std::vector<int>         current;
    std::function<void(int)> rec = [&](int remaining) {
      if (remaining == 0) {
        out.emplace_back(current);
        return;
      }
      for (int p = 1; p <= remaining; ++p) {
        current.push_back(p);
        rec(remaining - p);
        current.pop_back();
      }
    };
    rec(n);
    return out;
  }

  bool dominates(Partition const& nu, Partition const& mu) {
    require_same_size(nu, mu);
    int sum_nu = 0, sum_mu = 0;
    for (int i = 0; i < std::max(nu.length(), mu.length()); ++i) {
      sum_nu += i < nu.length() ? nu[i] : 0;
      sum_mu += i < mu.length() ? mu[i] : 0;
      if (sum_nu < sum_mu) {
        return false;
      }
    }
    return true;
  }

  bool refines(Partition const& mu, Partition const& lambda) {
    require_same_size(mu, lambda);
    // Place the parts of mu, largest first, into bins with the capacities of
    // lambda. Memoized on (next part, sorted remaining capacities).
    std::set<std::pair<std::size_t, std::vector<int>>> dead;
    std::function<bool(std::size_t, std::vector<int>&)> place
        = [&](std::size_t idx, std::vector<int>& room) -> bool {
      if (idx == mu.parts().size()) {
        return true;
      }
      std::vector<int> key(room);
      std::sort(key.begin(), key.end());
      if (dead.count({idx, key})) {
        return false;
      }
      int tried = -1;
      for (auto& r : room) {
        if (r >= mu[idx] && r != tried) {
          tried = r;
          r -= mu[idx];
          bool ok = place(idx + 1, room);
          r += mu[idx];
          if (ok) {
            return true;
          }
        }
      }
      dead.emplace(idx, std::move(key));
      return false;
    };
    std::vector<int> room(lambda.parts());
    return place(0, room);
  }

  std::vector<Composition> compositions_rearranging_to(Partition const& mu) {
    std::vector<int> parts(mu.parts().rbegin(), mu.parts().rend());
    std::vector<Composition> out;
    do {
      out.emplace_back(parts);
    } while (std::next_permutation(parts.begin(), parts.end()));
    return out;
  }

  Integer count_compositions_rearranging_to(Partition const& mu) {
    Integer out = factorial(mu.length());
    for (std::size_t i = 0; i < mu.parts().size();) {
      std::size_t j = i;
      while (j < mu.parts().size() && mu[j] == mu[i]) {
        ++j;
      }
      out /= factorial(static_cast<int>(j - i));
      i = j;
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Set partitions
  ////////////////////////////////////////////////////////////////////////

  std::vector<SetPartition> set_partitions_of(int n, int cap) {
    if (n < 1) {
      throw std::invalid_argument("set_partitions_of: n must be positive");
    }
    if (n > cap) {
      throw std::out_of_range("set_partitions_of: n = " + std::to_string(n)
                              + " exceeds cap " + std::to_string(cap));
    }
    std::vector<SetPartition> out;
    std::vector<int>          labels(n, 0);
    std::function<void(int, int)> rec = [&](int i, int used) {
      if (i == n) {
        out.push_back(SetPartition::from_labels(labels));
        return;
      }
      for (int b = 0; b <= used; ++b) {
        labels[i] = b;
        rec(i + 1, std::max(used, b + 1));
      }
    };
    rec(1, 1);
    return out;
  }

  Partition block_size_type(SetPartition const& x) {
    std::vector<int> sizes(x.block_count(), 0);
    for (auto b : x.rgs()) {
      ++sizes[b];
    }
    return Partition::from_unsorted(std::move(sizes));
  }

  SetPartition meet(SetPartition const& x, SetPartition const& y) {
    if (x.degree() != y.degree()) {
      throw std::invalid_argument("meet: degree mismatch");
    }
    std::vector<int> labels(x.degree());
    for (int i = 0; i < x.degree(); ++i) {
      labels[i] = x.rgs()[i] * 256 + y.rgs()[i];
    }
    return SetPartition::from_labels(labels);
  }

  bool leq(SetPartition const& x, SetPartition const& y) {
    if (x.degree() != y.degree()) {
      throw std::invalid_argument("leq: degree mismatch");
    }
    std::vector<int> image(x.block_count(), -1);
    for (int i = 0; i < x.degree(); ++i) {
      int& target = image[x.rgs()[i]];
      if (target == -1) {
        target = y.rgs()[i];
      } else if (target != y.rgs()[i]) {
        return false;
      }
    }
    return true;
  }

  SetPartition act(Permutation const& pi, SetPartition const& x) {
    if (pi.degree() != x.degree()) {
      throw std::invalid_argument("act: degree mismatch");
    }
    std::vector<int> labels(x.degree());
    for (int i = 1; i <= x.degree(); ++i) {
      labels[pi(i) - 1] = x.block_of(i);
    }
    return SetPartition::from_labels(labels);
  }

  SetPartition top_set_partition(int n) {
    return SetPartition::from_labels(std::vector<int>(n, 0));
  }

  ////////////////////////////////////////////////////////////////////////
  // Permutations
  ////////////////////////////////////////////////////////////////////////

  Partition cycle_type(Permutation const& pi) {
    std::vector<bool> seen(pi.degree(), false);
    std::vector<int>  lengths;
    for (int i = 1; i <= pi.degree(); ++i) {
      if (seen[i - 1]) {
        continue;
      }
      int len = 0;
      for (int j = i; !seen[j - 1]; j = pi(j)) {
        seen[j - 1] = true;
        ++len;
      }
      lengths.push_back(len);
    }
    return Partition::from_unsorted(std::move(lengths));
  }

  std::vector<Permutation> all_permutations(int n) {
    std::vector<Permutation> out;
    auto                     images = Permutation::identity(n).images();
    do {
      out.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
  }

  std::vector<ConjugacyClass> conjugacy_class_data(int n) {
    std::vector<ConjugacyClass> out;
    Integer const               total = factorial(n);
    for (auto& rho : partitions_of(n)) {
      Integer size = total / z_coefficient(rho);
      out.push_back({rho, size, Permutation::with_cycle_type(rho)});
    }
    return out;
  }

}  // namespace facealg
